import time

import pulp

from neolrp.infrastructure.exceptions import BackendError
from neolrp.infrastructure.observability import get_logger
from neolrp.modules.milp.backends.protocols import MilpSolution, SolveStatus
from neolrp.modules.milp.model import MilpModel, Sense, VarKind

logger = get_logger(__name__)

_SENSES = {
    Sense.LE: pulp.LpConstraintLE,
    Sense.GE: pulp.LpConstraintGE,
    Sense.EQ: pulp.LpConstraintEQ,
}

_STATUSES = {
    pulp.LpSolutionOptimal: SolveStatus.OPTIMAL,
    pulp.LpSolutionIntegerFeasible: SolveStatus.FEASIBLE,
    pulp.LpSolutionInfeasible: SolveStatus.INFEASIBLE,
    pulp.LpSolutionUnbounded: SolveStatus.UNBOUNDED,
    pulp.LpSolutionNoSolutionFound: SolveStatus.NOT_SOLVED,
}

_FEASIBILITY_TOL = 1e-9


def _constant_holds(sense: Sense, rhs: float) -> bool:
    if sense == Sense.LE:
        return 0.0 <= rhs + _FEASIBILITY_TOL
    if sense == Sense.GE:
        return 0.0 >= rhs - _FEASIBILITY_TOL
    return abs(rhs) <= _FEASIBILITY_TOL


def _seed_options(engine: str, seed: int | None) -> dict[str, list[str]]:
    """Extra CBC command-line options fixing its random seeds; other engines run unseeded."""
    if seed is None or "CBC" not in engine:
        return {}
    # CBC reads 0 as "seed from the clock"
    return {"options": [f"randomCbcSeed {seed + 1}", f"randomSeed {seed + 1}"]}


class PulpBackend:
    """Translates a `MilpModel` into a PuLP problem and runs one of PuLP's solver engines."""

    def __init__(self, engine: str = "PULP_CBC_CMD") -> None:
        self.engine = engine

    @property
    def name(self) -> str:
        return f"pulp:{self.engine}"

    def to_problem(self, model: MilpModel) -> tuple[pulp.LpProblem, list[pulp.LpVariable]] | None:
        """PuLP problem plus its variables in model order; None if a constant row is violated."""
        problem = pulp.LpProblem(model.name.replace("-", "_") or "neolrp", pulp.LpMinimize)
        variables = [
            pulp.LpVariable(
                var.name,
                lowBound=var.lower,
                upBound=var.upper,
                # LpBinary would reset bounds fixed by fix_assignment
                cat=pulp.LpInteger if var.kind == VarKind.BINARY else pulp.LpContinuous,
            )
            for var in model.variables
        ]
        problem.setObjective(
            pulp.LpAffineExpression(
                [(variables[i], c) for i, c in model.objective],
                constant=model.objective_constant,
            )
        )
        for con in model.constraints:
            if not con.terms:
                if not _constant_holds(con.sense, con.rhs):
                    return None
                continue
            problem.addConstraint(
                pulp.LpConstraint(
                    e=pulp.LpAffineExpression([(variables[i], c) for i, c in con.terms]),
                    sense=_SENSES[con.sense],
                    rhs=con.rhs,
                    name=con.name,
                )
            )
        return problem, variables

    def solve(
        self,
        model: MilpModel,
        *,
        time_limit: float,
        mip_gap: float,
        threads: int,
        seed: int | None = None,
    ) -> MilpSolution:
        started = time.perf_counter()
        built = self.to_problem(model)
        if built is None:
            return MilpSolution(
                status=SolveStatus.INFEASIBLE, runtime=time.perf_counter() - started
            )
        problem, variables = built

        try:
            solver = pulp.getSolver(
                self.engine,
                msg=False,
                timeLimit=time_limit,
                gapRel=mip_gap,
                threads=threads,
                **_seed_options(self.engine, seed),
            )
            problem.solve(solver)
        except pulp.PulpError as e:
            raise BackendError(self.name, "solver failed", diagnostics=str(e)) from e
        runtime = time.perf_counter() - started

        status = _STATUSES.get(problem.sol_status, SolveStatus.NOT_SOLVED)
        if not status.has_solution:
            logger.info("milp_no_solution", model=model.name, status=status.value)
            return MilpSolution(status=status, runtime=runtime)

        values = tuple(float(v.value() or 0.0) for v in variables)
        return MilpSolution(
            status=status,
            objective=model.evaluate_objective(list(values)),
            values=values,
            runtime=runtime,
        )
