"""Permutation-sum symmetric functions on the polynomial side of the lattice correspondences."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .combinatorics import PositionVector
from .errors import CoincidentVariables, ZeroQ
from .exact import scalar

MAX_PERMUTATION_SIZE = 6


@dataclass(frozen=True)
class SymFuncInput:
    u: tuple
    w: tuple
    x: PositionVector
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(scalar(v) for v in self.u))
        object.__setattr__(self, "w", tuple(scalar(v) for v in self.w))
        object.__setattr__(self, "q", scalar(self.q))
        if len(set(self.u)) != len(self.u):
            raise CoincidentVariables("the u variables must be pairwise distinct")
        if self.x.length != len(self.w) or len(self.x) != len(self.u):
            raise ValueError("u, w and x sizes are inconsistent")


def _check_size(n):
    if n > MAX_PERMUTATION_SIZE:
        raise ValueError(f"permutation sums limited to n <= {MAX_PERMUTATION_SIZE}")


def F(inp: SymFuncInput) -> Fraction:
    """Sum over sigma in S_n of

    prod_j prod_{i>x_j} (u_s(j) - q w_i) * prod_{i<j} (q u_s(i) - u_s(j))/(u_s(i) - u_s(j))
      * prod_j prod_{i<x_j} (u_s(j) - w_i) * prod_j (1-q) u_s(j)
    """
    u, w, q, x = inp.u, inp.w, inp.q, inp.x.positions
    n, L = len(u), len(w)
    _check_size(n)
    # per-particle factors do not depend on sigma's pairing beyond (particle, variable)
    single = [[(1 - q) * u[a]
               * _prod(u[a] - q * w[i] for i in range(x[j], L))
               * _prod(u[a] - w[i] for i in range(x[j] - 1))
               for a in range(n)] for j in range(n)]
    total = Fraction(0)
    for sigma in permutations(range(n)):
        term = Fraction(1)
        for j in range(n):
            term *= single[j][sigma[j]]
        if not term:
            continue
        for i in range(n):
            ui = u[sigma[i]]
            for j in range(i + 1, n):
                uj = u[sigma[j]]
                term *= (q * ui - uj) / (ui - uj)
        total += term
    return total


def F_of(u: Sequence, w: Sequence, x: PositionVector, q) -> Fraction:
    return F(SymFuncInput(tuple(u), tuple(w), x, q))


def F_bar(w: Sequence, u: Sequence, y: Sequence[int], q) -> Fraction:
    """Symmetric function in the right-block parameters ``w`` (length ``r = len(y)``):

    sum over sigma in S_r of
        prod_j prod_{i=y_j+1}^{n} q (u_i - w_s(j))
      * prod_{i<j} (q w_s(i) - w_s(j)) / (q (w_s(i) - w_s(j)))
      * prod_j prod_{i=1}^{y_j-1} (u_i - q w_s(j))
      * prod_j (1-q) u_{y_j}
    """
    w = [scalar(v) for v in w]
    u = [scalar(v) for v in u]
    q = scalar(q)
    y = tuple(y)
    r, n = len(w), len(u)
    _check_size(r)
    if len(y) != r:
        raise ValueError(f"need {r} marked rows, got {y}")
    if any(a >= b for a, b in zip(y, y[1:])) or (y and (y[0] < 1 or y[-1] > n)):
        raise ValueError(f"rows {y} must increase within [1, {n}]")
    if q == 0:
        raise ZeroQ("the w-interaction factor has q in its denominator")
    if len(set(w)) != r:
        raise CoincidentVariables("the w variables must be pairwise distinct")
    single = [[q ** (n - y[j]) * _prod(u[i] - w[a] for i in range(y[j], n))
               * _prod(u[i] - q * w[a] for i in range(y[j] - 1))
               * (1 - q) * u[y[j] - 1]
               for a in range(r)] for j in range(r)]
    total = Fraction(0)
    for sigma in permutations(range(r)):
        term = Fraction(1)
        for j in range(r):
            term *= single[j][sigma[j]]
        if not term:
            continue
        for i in range(r):
            wi = w[sigma[i]]
            for j in range(i + 1, r):
                wj = w[sigma[j]]
                term *= (q * wi - wj) / (q * (wi - wj))
        total += term
    return total


def _prod(values) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out
