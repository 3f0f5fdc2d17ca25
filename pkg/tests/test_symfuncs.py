from fractions import Fraction
from itertools import permutations

import pytest

from groth.combinatorics import PositionVector, position_vectors
from groth.errors import CoincidentVariables, ZeroQ
from groth.exact import avoid, distinct, names, sample_point
from groth.lattice import barred_wavefunction, wavefunction
from groth.symfuncs import F_bar, F_of


def _pt(n, L, seed=0):
    pt = sample_point(seed, names("u", n) + names("w", L) + ["q"],
                      [distinct(*names("u", n)), distinct(*names("w", L)), avoid(["q"], [0, 1])])
    return pt.family("u", n), pt.family("w", L), pt["q"]


def test_F_symmetric_in_u():
    u, w, q = _pt(3, 5)
    x = PositionVector((1, 3, 4), 5)
    ref = F_of(u, w, x, q)
    for perm in permutations(u):
        assert F_of(list(perm), w, x, q) == ref


@pytest.mark.parametrize("x", list(position_vectors(2, 4)))
def test_F_matches_lattice(x):
    u, w, q = _pt(2, 4, seed=str(x))
    assert F_of(u, w, x, q) == wavefunction(u, w, x, q)


def test_F_bar_matches_lattice():
    u, w, q = _pt(3, 2, seed=1)
    for y in ((1, 2), (1, 3), (2, 3)):
        assert F_bar(w, u, y, q) == barred_wavefunction(w, u, y, q)


def test_errors():
    u, w, q = _pt(2, 2)
    with pytest.raises(ZeroQ):
        F_bar(w, u, (1, 2), 0)
    with pytest.raises(CoincidentVariables):
        F_bar([w[0], w[0]], u, (1, 2), q)
    with pytest.raises(CoincidentVariables):
        F_of([u[0], u[0]], w, PositionVector((1, 2), 2), q)
