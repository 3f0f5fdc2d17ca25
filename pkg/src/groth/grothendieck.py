"""Factorial beta-Grothendieck polynomials from the bialternant-style determinant.

    G_lam(z|alpha) = det([z_i|alpha]^{lam_j+n-j} (1+beta z_i)^{j-1})
                     / prod_{i<j} (z_i - z_j)

with ``[z|alpha]^j = (z (+) alpha_1) ... (z (+) alpha_j)`` and
``z (+) a = z + a + beta z a``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .combinatorics import Partition
from .errors import AlphabetTooShort, BudgetExceeded, CoincidentVariables
from .exact import prod, scalar
from .poly import MultiPoly

SYMBOLIC_BUDGET = 8


@dataclass(frozen=True)
class FactorialAlphabet:
    alphas: tuple
    beta: Fraction = Fraction(-1)

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(scalar(a) for a in self.alphas))
        object.__setattr__(self, "beta", scalar(self.beta))

    def __len__(self):
        return len(self.alphas)

    def require(self, lam: Partition, n: int):
        need = lam.first + n - 1 if n else 0
        if len(self.alphas) < need:
            raise AlphabetTooShort(
                f"partition {lam} in {n} variables needs {need} factorial variables, "
                f"got {len(self.alphas)}")


def oplus(z, a, beta) -> Fraction:
    return z + a + beta * z * a


def factorial_power(z, alphabet: FactorialAlphabet, j: int) -> Fraction:
    if j < 0:
        raise ValueError("negative factorial power")
    if j > len(alphabet):
        raise AlphabetTooShort(f"[z|alpha]^{j} needs {j} factorial variables, got {len(alphabet)}")
    z = scalar(z)
    out = Fraction(1)
    for a in alphabet.alphas[:j]:
        out *= oplus(z, a, alphabet.beta)
    return out


def det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    rows = [list(map(Fraction, r)) for r in matrix]
    n = len(rows)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        p = rows[col][col]
        result *= p
        for r in range(col + 1, n):
            f = rows[r][col] / p
            if f:
                row_r, row_c = rows[r], rows[col]
                for c in range(col + 1, n):
                    row_r[c] -= f * row_c[c]
    return sign * result


def _check_distinct(zs):
    if len(set(zs)) != len(zs):
        raise CoincidentVariables("the z variables must be pairwise distinct")


def grothendieck_det(lam: Partition, z: Sequence, alphabet: FactorialAlphabet) -> Fraction:
    z = [scalar(v) for v in z]
    n = len(z)
    if len(lam) != n:
        raise ValueError(f"partition {lam} has {len(lam)} parts but {n} variables were given")
    _check_distinct(z)
    alphabet.require(lam, n)
    beta = alphabet.beta
    matrix = [[factorial_power(zi, alphabet, lam[j] + n - 1 - j) * (1 + beta * zi) ** j
               for j in range(n)] for zi in z]
    vandermonde = prod(z[i] - z[j] for i in range(n) for j in range(i + 1, n))
    return det(matrix) / vandermonde


def variable_names(n: int, M: int, symbolic_beta: bool = False) -> tuple:
    names = [f"z{i}" for i in range(1, n + 1)] + [f"alpha{i}" for i in range(1, M + 1)]
    if symbolic_beta:
        names.append("beta")
    return tuple(names)


def _leibniz(matrix):
    n = len(matrix)
    total = None
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = matrix[0][perm[0]]
        for i in range(1, n):
            term = term * matrix[i][perm[i]]
        if inversions % 2:
            term = -term
        total = term if total is None else total + term
    return total


def grothendieck_symbolic(lam: Partition, n: int, M: int, beta=-1) -> MultiPoly:
    """Expand ``G_lam`` as a polynomial in ``z1..zn, alpha1..alphaM`` (and ``beta``).

    Pass ``beta="beta"`` (or None) to keep beta as a formal variable.
    """
    if len(lam) != n:
        raise ValueError(f"partition {lam} has {len(lam)} parts, expected {n}")
    symbolic_beta = beta is None or beta == "beta"
    names = variable_names(n, M, symbolic_beta)
    if len(names) > SYMBOLIC_BUDGET:
        raise BudgetExceeded(f"{len(names)} variables exceed the symbolic budget of {SYMBOLIC_BUDGET}")
    FactorialAlphabet((0,) * M).require(lam, n)
    g = MultiPoly.gens(names)
    b = g["beta"] if symbolic_beta else MultiPoly.constant(scalar(beta), names)
    zs = [g[f"z{i}"] for i in range(1, n + 1)]
    alphas = [g[f"alpha{i}"] for i in range(1, M + 1)]
    one = MultiPoly.constant(1, names)

    def fpow(z, j):
        out = one
        for a in alphas[:j]:
            out = out * (z + a + b * z * a)
        return out

    matrix = [[fpow(zi, lam[j] + n - 1 - j) * (one + b * zi) ** j for j in range(n)] for zi in zs]
    numerator = _leibniz(matrix) if n else one
    for i in range(n):
        for j in range(i + 1, n):
            numerator = numerator.divexact(zs[i] - zs[j])
    return numerator
