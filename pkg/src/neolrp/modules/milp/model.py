from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import StrEnum

from neolrp.infrastructure.constants import Milp
from neolrp.infrastructure.exceptions import ConstructionError


class VarKind(StrEnum):
    BINARY = "binary"
    CONTINUOUS = "continuous"


class Sense(StrEnum):
    LE = "<="
    GE = ">="
    EQ = "="


class ModelKind(StrEnum):
    NEO = "neo"
    FLP = "flp"


@dataclass(slots=True)
class Variable:
    name: str
    kind: VarKind
    lower: float | None = 0.0
    upper: float | None = None


@dataclass(frozen=True, slots=True)
class Constraint:
    name: str
    terms: tuple[tuple[int, float], ...]
    sense: Sense
    rhs: float


Terms = Iterable[tuple[int, float]]


@dataclass(slots=True)
class MilpModel:
    """Backend-neutral MILP: variables, linear constraints and a linear objective.

    `x`, `y`, `gamma` and the neuron maps key variable indices by instance ids so side
    constraints and result extraction never need the instance again.
    """

    kind: ModelKind
    name: str = ""
    variables: list[Variable] = field(default_factory=list)
    constraints: list[Constraint] = field(default_factory=list)
    objective: list[tuple[int, float]] = field(default_factory=list)
    objective_constant: float = 0.0

    depot_ids: tuple[int, ...] = ()
    customer_ids: tuple[int, ...] = ()
    x: dict[tuple[int, int], int] = field(default_factory=dict)
    y: dict[int, int] = field(default_factory=dict)
    gamma: dict[int, int] = field(default_factory=dict)
    theta: dict[tuple[int, int, int], int] = field(default_factory=dict)
    nu: dict[tuple[int, int], int] = field(default_factory=dict)
    z: dict[tuple[int, int], int] = field(default_factory=dict)

    def _add(self, var: Variable) -> int:
        if var.lower is not None and var.upper is not None and var.lower > var.upper:
            raise ConstructionError(
                f"variable {var.name} has empty domain",
                details={"lower": var.lower, "upper": var.upper},
            )
        self.variables.append(var)
        return len(self.variables) - 1

    def add_binary(self, name: str) -> int:
        return self._add(Variable(name=name, kind=VarKind.BINARY, lower=0.0, upper=1.0))

    def add_continuous(
        self, name: str, lower: float | None = 0.0, upper: float | None = None
    ) -> int:
        return self._add(Variable(name=name, kind=VarKind.CONTINUOUS, lower=lower, upper=upper))

    def add_constraint(self, terms: Terms, sense: Sense, rhs: float, name: str = "") -> None:
        merged: dict[int, float] = {}
        for index, coef in terms:
            merged[index] = merged.get(index, 0.0) + coef
        kept = tuple(
            (index, coef)
            for index, coef in sorted(merged.items())
            if abs(coef) >= Milp.COEFFICIENT_FLOOR
        )
        self.constraints.append(
            Constraint(name=name or f"c{len(self.constraints)}", terms=kept, sense=sense, rhs=rhs)
        )

    def set_objective(self, terms: Terms, constant: float = 0.0) -> None:
        self.objective = [(i, c) for i, c in terms if abs(c) >= Milp.COEFFICIENT_FLOOR]
        self.objective_constant = constant

    def fix(self, index: int, value: float) -> None:
        var = self.variables[index]
        var.lower = var.upper = value

    @property
    def n_binaries(self) -> int:
        return sum(1 for v in self.variables if v.kind == VarKind.BINARY)

    def evaluate_objective(self, values: list[float]) -> float:
        return self.objective_constant + sum(c * values[i] for i, c in self.objective)


def _fmt(value: float) -> str:
    return repr(float(value))


def _expr(model: MilpModel, terms: Iterable[tuple[int, float]]) -> str:
    parts = [f"{'-' if c < 0 else '+'} {_fmt(abs(c))} {model.variables[i].name}" for i, c in terms]
    text = " ".join(parts) or "0 " + (model.variables[0].name if model.variables else "")
    return text.removeprefix("+ ")


def dump_lp(model: MilpModel) -> str:
    """CPLEX LP-format rendering for inspection with any solver."""
    lines = [
        f"\\ {model.kind.value} model {model.name}".rstrip(),
        "Minimize",
        f" obj: {_expr(model, model.objective)}",
        "Subject To",
    ]
    for con in model.constraints:
        lines.append(f" {con.name}: {_expr(model, con.terms)} {con.sense.value} {_fmt(con.rhs)}")
    lines.append("Bounds")
    for var in model.variables:
        if var.kind == VarKind.BINARY and var.lower == 0.0 and var.upper == 1.0:
            continue
        lower = "-inf" if var.lower is None else _fmt(var.lower)
        upper = "+inf" if var.upper is None else _fmt(var.upper)
        lines.append(f" {lower} <= {var.name} <= {upper}")
    binaries = [v.name for v in model.variables if v.kind == VarKind.BINARY]
    if binaries:
        lines.append("Binaries")
        lines += [f" {name}" for name in binaries]
    lines.append("End")
    return "\n".join(lines) + "\n"
