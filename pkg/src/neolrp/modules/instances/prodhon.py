import re
from collections.abc import Iterator
from pathlib import Path

from pydantic import ValidationError

from neolrp.infrastructure.exceptions import InvalidInstanceError, ParseError
from neolrp.infrastructure.files import read_text
from neolrp.modules.instances.model import ClrpInstance, Customer, Depot, RoundingMode

_BENCHMARK_STEM = re.compile(r"coord(\d+-\d+-\d+)([ab]?)(bis)?", re.IGNORECASE)


class _TokenStream:
    """Whitespace tokens tagged with their 1-based line number; blank lines are skipped."""

    def __init__(self, text: str) -> None:
        self._tokens: list[tuple[str, int]] = [
            (token, lineno)
            for lineno, line in enumerate(text.splitlines(), start=1)
            for token in line.split()
        ]
        self._pos = 0

    def __iter__(self) -> Iterator[tuple[str, int]]:
        return iter(self._tokens[self._pos :])

    @property
    def exhausted(self) -> bool:
        return self._pos >= len(self._tokens)

    def number(self, section: str) -> tuple[float, int]:
        if self.exhausted:
            raise ParseError("unexpected end of input", None, section)
        token, lineno = self._tokens[self._pos]
        try:
            value = float(token)
        except ValueError:
            raise ParseError(f"non-numeric token {token!r}", lineno, section) from None
        self._pos += 1
        return value, lineno

    def integer(self, section: str) -> int:
        value, lineno = self.number(section)
        if not value.is_integer():
            raise ParseError(f"expected an integer, got {value}", lineno, section)
        return int(value)

    def count(self, section: str) -> int:
        value, lineno = self.number(section)
        if not value.is_integer() or value < 0:
            raise ParseError(f"malformed count {value}", lineno, section)
        return int(value)


def parse_prodhon(text: str, name: str = "") -> ClrpInstance:
    stream = _TokenStream(text)

    n_customers = stream.count("customer count")
    n_depots = stream.count("depot count")
    if n_depots == 0:
        raise ParseError("instance needs at least one depot", 2, "depot count")

    depot_coords = [
        (stream.number("depot coordinates")[0], stream.number("depot coordinates")[0])
        for _ in range(n_depots)
    ]
    customer_coords = [
        (stream.number("customer coordinates")[0], stream.number("customer coordinates")[0])
        for _ in range(n_customers)
    ]
    vehicle_capacity = stream.integer("vehicle capacity")
    capacities = [stream.integer("depot capacities") for _ in range(n_depots)]
    demands = [stream.integer("customer demands") for _ in range(n_customers)]
    opening_costs = [stream.number("depot opening costs")[0] for _ in range(n_depots)]
    route_cost = stream.number("route cost")[0]
    flag = stream.integer("rounding flag")
    if flag not in (0, 1):
        raise ParseError(f"rounding flag must be 0 or 1, got {flag}", None, "rounding flag")

    if not stream.exhausted:
        token, lineno = next(iter(stream))
        raise ParseError(f"trailing token {token!r}", lineno, "end of file")

    try:
        return ClrpInstance(
            name=name,
            depots=tuple(
                Depot(id=i, x=x, y=y, capacity=capacities[i], fixed_cost=opening_costs[i])
                for i, (x, y) in enumerate(depot_coords)
            ),
            customers=tuple(
                Customer(id=n_depots + j, x=x, y=y, demand=demands[j])
                for j, (x, y) in enumerate(customer_coords)
            ),
            vehicle_capacity=vehicle_capacity,
            vehicle_fixed_cost=route_cost,
            rounding_mode=RoundingMode.PRODHON100 if flag == 1 else RoundingMode.RAW,
        )
    except ValidationError as e:
        raise InvalidInstanceError(
            f"instance {name or '<text>'} violates model invariants",
            details={"errors": e.errors(include_url=False, include_context=False)},
        ) from e


def _fmt(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def format_prodhon(inst: ClrpInstance) -> str:
    lines: list[str] = [str(inst.n_customers), str(inst.n_depots), ""]
    lines += [f"{_fmt(d.x)}\t{_fmt(d.y)}" for d in inst.depots]
    lines.append("")
    lines += [f"{_fmt(c.x)}\t{_fmt(c.y)}" for c in inst.customers]
    lines += ["", str(inst.vehicle_capacity), ""]
    lines += [str(d.capacity) for d in inst.depots]
    lines.append("")
    lines += [str(c.demand) for c in inst.customers]
    lines.append("")
    lines += [_fmt(d.fixed_cost) for d in inst.depots]
    flag = "1" if inst.rounding_mode == RoundingMode.PRODHON100 else "0"
    lines += ["", _fmt(inst.vehicle_fixed_cost), "", flag]
    return "\n".join(lines) + "\n"


def load_instance(path: Path | str) -> ClrpInstance:
    path = Path(path)
    try:
        text = read_text(path, "instance file")
    except OSError as e:
        raise InvalidInstanceError(
            f"cannot read instance file {path}", details={"path": str(path)}
        ) from e
    return parse_prodhon(text, name=instance_name(path))


def instance_name(path: Path | str) -> str:
    """Benchmark files are coordN-M-K[b][BIS]; the plain unsuffixed file is the "a" variant."""
    stem = Path(path).stem
    match = _BENCHMARK_STEM.fullmatch(stem)
    if match is None:
        return stem
    variant = match.group(2).lower()
    if match.group(3):
        return f"{match.group(1)}{variant}bis"
    return f"{match.group(1)}{variant or 'a'}"
