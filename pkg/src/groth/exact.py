"""Exact rational scalars and deterministic constrained point sampling.

``fractions.Fraction`` is the scalar type throughout: it is always reduced,
keeps a positive denominator, and never touches floating point.
"""

import operator
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ConstraintUnsatisfiable, DivisionByZero, UnboundVariable

ExactScalar = Fraction

DEFAULT_POOL = 97
DEFAULT_BUDGET = 10000

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def scalar(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a string such as '1/3'")
    return Fraction(value)


def format_scalar(x: Fraction) -> str:
    return str(x)


def field_ops(a, b, op: str) -> Fraction:
    a, b = scalar(a), scalar(b)
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    if op == "div" and b == 0:
        raise DivisionByZero(f"{a} / 0")
    return fn(a, b)


def prod(values: Iterable, start=1) -> Fraction:
    result = Fraction(start)
    for v in values:
        result *= v
    return result


# -- constraints -------------------------------------------------------------


@dataclass(frozen=True)
class Distinct:
    """The named variables take pairwise distinct values."""

    names: tuple

    def holds(self, values: Mapping[str, Fraction]) -> bool:
        seen = [values[n] for n in self.names]
        return len(set(seen)) == len(seen)

    @property
    def tag(self) -> str:
        return "distinct(" + ",".join(self.names) + ")"


@dataclass(frozen=True)
class NonZero:
    names: tuple

    def holds(self, values):
        return all(values[n] != 0 for n in self.names)

    @property
    def tag(self):
        return "nonzero(" + ",".join(self.names) + ")"


@dataclass(frozen=True)
class NotEqual:
    """A single forbidden coincidence ``left != right``."""

    left: str
    right: str

    def holds(self, values):
        if self.left == self.right:
            return False
        return values[self.left] != values[self.right]

    @property
    def tag(self):
        return f"{self.left}!={self.right}"


@dataclass(frozen=True)
class Avoid:
    """The named variables stay away from a fixed set of values."""

    names: tuple
    values: tuple

    def holds(self, values):
        bad = set(self.values)
        return all(values[n] not in bad for n in self.names)

    @property
    def tag(self):
        return "avoid(" + ",".join(self.names) + ";" + ",".join(map(str, self.values)) + ")"


def distinct(*names) -> Distinct:
    return Distinct(tuple(names))


def nonzero(*names) -> NonZero:
    return NonZero(tuple(names))


def avoid(names: Sequence[str], values: Sequence) -> Avoid:
    return Avoid(tuple(names), tuple(Fraction(v) for v in values))


# -- evaluation points ---------------------------------------------------------


@dataclass(frozen=True)
class EvaluationPoint:
    """An ordered assignment of exact values plus the constraints it satisfies."""

    names: tuple
    values: tuple
    constraints: tuple = field(default=())

    def __post_init__(self):
        if len(self.names) != len(self.values):
            raise ValueError("names and values differ in length")
        mapping = self.as_dict()
        for c in self.constraints:
            if not c.holds(mapping):
                raise ConstraintUnsatisfiable(f"assignment violates {c.tag}")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, object], constraints=()):
        names = tuple(mapping)
        return cls(names, tuple(scalar(mapping[n]) for n in names), tuple(constraints))

    def as_dict(self) -> dict:
        return dict(zip(self.names, self.values))

    def __getitem__(self, name: str) -> Fraction:
        try:
            return self.values[self.names.index(name)]
        except ValueError:
            raise UnboundVariable(name) from None

    def __contains__(self, name):
        return name in self.names

    def get(self, name, default=None):
        return self[name] if name in self.names else default

    def family(self, prefix: str, count: int) -> list:
        """Values of ``prefix1 .. prefix<count>`` as a list."""
        return [self[f"{prefix}{i}"] for i in range(1, count + 1)]

    @property
    def constraint_tags(self) -> tuple:
        return tuple(c.tag for c in self.constraints)

    def to_json(self) -> dict:
        return {n: format_scalar(v) for n, v in zip(self.names, self.values)}


def _draw(rng: random.Random, pool: int) -> Fraction:
    return Fraction(rng.randint(1, pool), rng.randint(1, pool))


def sample_point(seed, variables: Sequence[str], constraints=(), *,
                 pool: int = DEFAULT_POOL, budget: int = DEFAULT_BUDGET) -> EvaluationPoint:
    """Draw a point from rationals ``p/q`` with ``1 <= p, q <= pool``.

    Whole points are redrawn until every constraint holds. The stream is a
    pure function of ``seed`` (int or str) so results are reproducible.
    """
    variables = tuple(variables)
    constraints = tuple(constraints)
    rng = random.Random(seed)
    for _ in range(budget):
        values = tuple(_draw(rng, pool) for _ in variables)
        mapping = dict(zip(variables, values))
        if all(c.holds(mapping) for c in constraints):
            return EvaluationPoint(variables, values, constraints)
    raise ConstraintUnsatisfiable(
        f"no admissible point after {budget} draws for "
        + ", ".join(c.tag for c in constraints))


def sample_points(seed: int, variables, constraints, count: int, **kw) -> list:
    """``count`` independent points; point ``i`` uses the sub-seed ``"seed:i"``."""
    return [sample_point(f"{seed}:{i}", variables, constraints, **kw) for i in range(count)]


def names(prefix: str, count: int) -> list:
    return [f"{prefix}{i}" for i in range(1, count + 1)]
