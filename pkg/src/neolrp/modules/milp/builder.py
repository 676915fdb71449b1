from collections.abc import Iterable, Mapping, Sequence

from pydantic import BaseModel, ConfigDict, Field

from neolrp.infrastructure.exceptions import InvalidInstanceError
from neolrp.infrastructure.observability import get_logger
from neolrp.modules.instances import ClrpInstance, LocationAllocation, arc_cost
from neolrp.modules.milp.bounds import NeuronBounds, compute_bounds
from neolrp.modules.milp.embedding import EmbeddingTable, precompute_embeddings
from neolrp.modules.milp.model import MilpModel, ModelKind, Sense
from neolrp.modules.surrogate import SurrogateModel

logger = get_logger(__name__)


class SideConstraints(BaseModel):
    """Customer ids in `incompatible_pairs`; `allowed_depots` maps customer id to depot ids."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    incompatible_pairs: tuple[tuple[int, int], ...] = ()
    allowed_depots: dict[int, tuple[int, ...]] = Field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return not self.incompatible_pairs and not self.allowed_depots


def _add_location_allocation(model: MilpModel, inst: ClrpInstance) -> None:
    model.depot_ids = tuple(d.id for d in inst.depots)
    model.customer_ids = tuple(c.id for c in inst.customers)
    for depot in inst.depots:
        model.y[depot.id] = model.add_binary(f"y_{depot.id}")
    for depot in inst.depots:
        for customer in inst.customers:
            model.x[depot.id, customer.id] = model.add_binary(f"x_{depot.id}_{customer.id}")

    for customer in inst.customers:
        model.add_constraint(
            ((model.x[d, customer.id], 1.0) for d in model.depot_ids),
            Sense.EQ,
            1.0,
            name=f"assign_{customer.id}",
        )
    for depot in inst.depots:
        for customer in inst.customers:
            model.add_constraint(
                ((model.x[depot.id, customer.id], 1.0), (model.y[depot.id], -1.0)),
                Sense.LE,
                0.0,
                name=f"link_{depot.id}_{customer.id}",
            )
        model.add_constraint(
            [
                *((model.x[depot.id, c.id], float(c.demand)) for c in inst.customers),
                (model.y[depot.id], -float(depot.capacity)),
            ],
            Sense.LE,
            0.0,
            name=f"capacity_{depot.id}",
        )


def _check_ids(model: MilpModel, customers: Iterable[int], depots: Iterable[int] = ()) -> None:
    unknown_customers = sorted(set(customers) - set(model.customer_ids))
    unknown_depots = sorted(set(depots) - set(model.depot_ids))
    if unknown_customers or unknown_depots:
        raise InvalidInstanceError(
            "side constraint references unknown ids",
            details={"customers": unknown_customers, "depots": unknown_depots},
        )


def add_incompatibility(model: MilpModel, pairs: Sequence[tuple[int, int]]) -> None:
    _check_ids(model, (j for pair in pairs for j in pair))
    for a, b in sorted({(min(p), max(p)) for p in pairs if p[0] != p[1]}):
        for depot in model.depot_ids:
            model.add_constraint(
                ((model.x[depot, a], 1.0), (model.x[depot, b], 1.0)),
                Sense.LE,
                1.0,
                name=f"conflict_{depot}_{a}_{b}",
            )


def add_depot_restriction(model: MilpModel, allowed_sets: Mapping[int, Sequence[int]]) -> None:
    _check_ids(model, allowed_sets, (i for ids in allowed_sets.values() for i in ids))
    for customer, allowed in allowed_sets.items():
        if not allowed:
            logger.warning("customer_unservable", customer=customer)
        for depot in model.depot_ids:
            if depot not in allowed:
                model.add_constraint(
                    ((model.x[depot, customer], 1.0),),
                    Sense.EQ,
                    0.0,
                    name=f"restrict_{depot}_{customer}",
                )


def apply_side_constraints(model: MilpModel, side: SideConstraints | None) -> None:
    if side is None or side.empty:
        return
    add_incompatibility(model, side.incompatible_pairs)
    add_depot_restriction(model, side.allowed_depots)


def build_flp_model(
    inst: ClrpInstance, side_constraints: SideConstraints | None = None
) -> MilpModel:
    model = MilpModel(kind=ModelKind.FLP, name=inst.name)
    _add_location_allocation(model, inst)
    apply_side_constraints(model, side_constraints)
    model.set_objective(
        [
            *((model.y[d.id], d.fixed_cost) for d in inst.depots),
            *(
                (model.x[d.id, c.id], arc_cost(d.coord, c.coord, inst.rounding_mode))
                for d in inst.depots
                for c in inst.customers
            ),
        ]
    )
    return model


def build_neo_model(
    inst: ClrpInstance,
    surrogate: SurrogateModel,
    side_constraints: SideConstraints | None = None,
    *,
    embeddings: EmbeddingTable | None = None,
    bounds: NeuronBounds | None = None,
) -> MilpModel:
    emb = embeddings or precompute_embeddings(inst, surrogate)
    nb = bounds or compute_bounds(surrogate, emb)
    model = MilpModel(kind=ModelKind.NEO, name=inst.name)
    _add_location_allocation(model, inst)
    apply_side_constraints(model, side_constraints)

    hidden, output = surrogate.rho_hidden, surrogate.rho_output
    w_hidden, b_hidden = hidden.matrix, hidden.offset
    w_out, b_out = output.matrix[0], float(output.offset[0])

    for i, depot in enumerate(inst.depots):
        # input layer: aggregated latent vector of the assigned customers
        inputs: list[int] = []
        for l in range(surrogate.latent_dim):
            theta = model.add_continuous(
                f"theta0_{depot.id}_{l}",
                lower=float(nb.input_lower[i, l]),
                upper=float(nb.input_upper[i, l]),
            )
            model.theta[depot.id, 0, l] = theta
            inputs.append(theta)
            model.add_constraint(
                [
                    (theta, 1.0),
                    *(
                        (model.x[depot.id, c.id], -float(emb.latent[i, j, l]))
                        for j, c in enumerate(inst.customers)
                    ),
                ],
                Sense.EQ,
                0.0,
                name=f"input_{depot.id}_{l}",
            )

        activations: list[int] = []
        for k in range(hidden.rows):
            upper = max(0.0, float(nb.hidden_upper[i, k]))
            neg = max(0.0, -float(nb.hidden_lower[i, k]))
            act = model.add_continuous(f"theta1_{depot.id}_{k}", lower=0.0, upper=upper)
            slack = model.add_continuous(f"nu_{depot.id}_{k}", lower=0.0, upper=neg)
            gate = model.add_binary(f"z_{depot.id}_{k}")
            model.theta[depot.id, 1, k] = act
            model.nu[depot.id, k] = slack
            model.z[depot.id, k] = gate
            activations.append(act)

            # W theta0 + b = theta1 - nu
            model.add_constraint(
                [
                    *((inputs[l], float(w_hidden[k, l])) for l in range(surrogate.latent_dim)),
                    (act, -1.0),
                    (slack, 1.0),
                ],
                Sense.EQ,
                -float(b_hidden[k]),
                name=f"relu_{depot.id}_{k}",
            )
            # z = 1 => nu = 0 ; z = 0 => theta1 = 0
            model.add_constraint(
                ((act, 1.0), (gate, -upper)), Sense.LE, 0.0, name=f"on_{depot.id}_{k}"
            )
            model.add_constraint(
                ((slack, 1.0), (gate, neg)), Sense.LE, neg, name=f"off_{depot.id}_{k}"
            )

        scale = float(emb.scales[i])
        big_m = scale * max(0.0, float(nb.output_upper[i]))
        gamma = model.add_continuous(f"gamma_{depot.id}", lower=0.0, upper=big_m)
        model.gamma[depot.id] = gamma
        y = model.y[depot.id]
        # y = 1 => gamma >= P (w theta1 + b); the relu output is the epigraph under minimization
        model.add_constraint(
            [
                (gamma, 1.0),
                *((act, -scale * float(w_out[k])) for k, act in enumerate(activations)),
                (y, -big_m),
            ],
            Sense.GE,
            scale * b_out - big_m,
            name=f"output_{depot.id}",
        )
        # y = 0 => gamma = 0
        model.add_constraint(((gamma, 1.0), (y, -big_m)), Sense.LE, 0.0, name=f"closed_{depot.id}")

    model.set_objective(
        [
            *((model.y[d.id], d.fixed_cost) for d in inst.depots),
            *((model.gamma[d.id], 1.0) for d in inst.depots),
        ]
    )
    logger.debug(
        "neo_model_built",
        instance=inst.name,
        variables=len(model.variables),
        constraints=len(model.constraints),
        binaries=model.n_binaries,
    )
    return model


def fix_assignment(model: MilpModel, alloc: LocationAllocation) -> MilpModel:
    for i, depot in enumerate(model.depot_ids):
        model.fix(model.y[depot], float(alloc.y[i]))
        for j, customer in enumerate(model.customer_ids):
            model.fix(model.x[depot, customer], float(alloc.x[i][j]))
    return model
