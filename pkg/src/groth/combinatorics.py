"""Partitions, particle positions, k-subsets and the lattice/polynomial variable maps."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .errors import BoxOverflow, ProfileViolation, SingularMap
from .exact import scalar


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of nonnegative parts with explicit length.

    Trailing zeros are kept: ``Partition((1, 0))`` and ``Partition((1,))``
    are different objects because they index polynomials in a different
    number of variables.
    """

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class PositionVector:
    """Strictly increasing particle positions ``1 <= x1 < ... < xn <= length``."""

    positions: tuple
    length: int

    def __post_init__(self):
        pos = tuple(int(x) for x in self.positions)
        object.__setattr__(self, "positions", pos)
        if any(a >= b for a, b in zip(pos, pos[1:])):
            raise ValueError(f"positions not strictly increasing: {pos}")
        if pos and (pos[0] < 1 or pos[-1] > self.length):
            raise ValueError(f"positions {pos} outside [1, {self.length}]")

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def occupation(self) -> tuple:
        """The 0/1 string of the chain, site 1 first."""
        occ = [0] * self.length
        for x in self.positions:
            occ[x - 1] = 1
        return tuple(occ)

    @classmethod
    def from_occupation(cls, occ: Sequence[int]) -> "PositionVector":
        return cls(tuple(i + 1 for i, b in enumerate(occ) if b), len(occ))


@dataclass(frozen=True)
class SubsetSplit:
    chosen: tuple
    complement: tuple


def positions_from_partition(lam: Partition, length: int) -> PositionVector:
    """``x_i = lam_{n-i+1} + i``; the top particle must still fit on the chain."""
    n = len(lam)
    if n and lam.first + n > length:
        raise BoxOverflow(f"partition {lam} needs a chain of length {lam.first + n}, got {length}")
    return PositionVector(tuple(lam[n - i] + i for i in range(1, n + 1)), length)


def partition_from_positions(x: PositionVector) -> Partition:
    n = len(x)
    pos = x.positions
    return Partition(tuple(pos[n - j] - (n - j + 1) for j in range(1, n + 1)))


def build_mu(lam: Partition, m: int, n: int) -> Partition:
    """Stack ``n - k`` full rows of width ``m - k`` on top of ``lam`` (``k = len(lam)``)."""
    k = len(lam)
    if k > n or k > m:
        raise ProfileViolation(f"need len(lambda)={k} <= n={n} and <= m={m}")
    if lam.first > m - k:
        raise ProfileViolation(f"lambda_1={lam.first} exceeds m-k={m - k}")
    return Partition((m - k,) * (n - k) + lam.parts)


def k_subsets(N: int, k: int) -> Iterator[SubsetSplit]:
    """All k-subsets of {1..N} in lexicographic order, with complements."""
    if not 0 <= k <= N:
        raise ValueError(f"need 0 <= k <= N, got k={k}, N={N}")
    universe = range(1, N + 1)
    for chosen in combinations(universe, k):
        picked = set(chosen)
        yield SubsetSplit(chosen, tuple(i for i in universe if i not in picked))


def partitions_in_box(length: int, width: int) -> Iterator[Partition]:
    """Partitions with exactly ``length`` parts (zeros allowed), each at most ``width``.

    Enumerated in reverse lexicographic order of the parts tuple, largest first.
    """
    def rec(prefix, bound, remaining):
        if remaining == 0:
            yield Partition(tuple(prefix))
            return
        for p in range(bound, -1, -1):
            yield from rec(prefix + [p], p, remaining - 1)

    yield from rec([], width, length)


def position_vectors(count: int, length: int) -> Iterator[PositionVector]:
    for pos in combinations(range(1, length + 1), count):
        yield PositionVector(pos, length)


def variable_map(direction: str, v) -> Fraction:
    """Translate between lattice spectral parameters and polynomial variables.

    ``z = 1 - 1/u`` and ``alpha = 1 - w``.
    """
    v = scalar(v)
    if direction == "z->u":
        if v == 1:
            raise SingularMap("z = 1 has no spectral parameter")
        return 1 / (1 - v)
    if direction == "u->z":
        if v == 0:
            raise SingularMap("u = 0 has no polynomial variable")
        return 1 - 1 / v
    if direction in ("alpha->w", "w->alpha"):
        return 1 - v
    raise ValueError(f"unknown direction {direction!r}")


def z_to_u(zs):
    return [variable_map("z->u", z) for z in zs]


def u_to_z(us):
    return [variable_map("u->z", u) for u in us]


def alpha_to_w(alphas):
    return [variable_map("alpha->w", a) for a in alphas]


def w_to_alpha(ws):
    return [variable_map("w->alpha", w) for w in ws]
