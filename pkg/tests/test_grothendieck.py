from fractions import Fraction
from itertools import combinations_with_replacement, permutations

import pytest

from groth.combinatorics import Partition, partitions_in_box
from groth.errors import AlphabetTooShort, BudgetExceeded, CoincidentVariables
from groth.exact import distinct, names, sample_point
from groth.grothendieck import (
    FactorialAlphabet, det, factorial_power, grothendieck_det, grothendieck_symbolic, oplus)
from groth.poly import MultiPoly


def h(k, z):
    """Complete homogeneous symmetric polynomial by brute-force monomial enumeration."""
    if k < 0:
        return Fraction(0)
    total = Fraction(0)
    for combo in combinations_with_replacement(range(len(z)), k):
        t = Fraction(1)
        for i in combo:
            t *= z[i]
        total += t
    return total


def schur_jacobi_trudi(lam, z):
    n = len(lam)
    return det([[h(lam[i] - i + j, z) for j in range(n)] for i in range(n)])


def _point(n, M, seed=0):
    pt = sample_point(seed, names("z", n) + names("alpha", M), [distinct(*names("z", n))])
    return pt.family("z", n), pt.family("alpha", M)


def test_empty_shape_is_one():
    z, a = _point(3, 2)
    assert grothendieck_det(Partition((0, 0, 0)), z, FactorialAlphabet(a)) == 1


@pytest.mark.parametrize("lam", list(partitions_in_box(3, 3)))
def test_beta_zero_alpha_zero_is_schur(lam):
    z, _ = _point(3, 0, seed=str(lam))
    alphabet = FactorialAlphabet((0,) * (lam.first + 2), beta=0)
    assert grothendieck_det(lam, z, alphabet) == schur_jacobi_trudi(lam.parts, z)


def test_single_variable_is_a_factorial_power():
    z, a = _point(1, 3)
    alphabet = FactorialAlphabet(a)
    assert grothendieck_det(Partition((3,)), z, alphabet) == \
        oplus(z[0], a[0], -1) * oplus(z[0], a[1], -1) * oplus(z[0], a[2], -1)
    assert factorial_power(z[0], alphabet, 3) == grothendieck_det(Partition((3,)), z, alphabet)


def test_symmetric_in_z():
    lam = Partition((2, 1, 0))
    z, a = _point(3, 4)
    alphabet = FactorialAlphabet(a)
    ref = grothendieck_det(lam, z, alphabet)
    for perm in permutations(z):
        assert grothendieck_det(lam, list(perm), alphabet) == ref


def test_symbolic_matches_numeric():
    lam = Partition((2, 1))
    poly = grothendieck_symbolic(lam, 2, 3)
    z, a = _point(2, 3, seed=4)
    pt = dict(zip(names("z", 2) + names("alpha", 3), z + a))
    assert poly.evaluate(pt) == grothendieck_det(lam, z, FactorialAlphabet(a))


def test_symbolic_beta():
    poly = grothendieck_symbolic(Partition((1, 0)), 2, 2, beta="beta")
    z, a = _point(2, 2, seed=9)
    for b in (Fraction(-1), Fraction(0), Fraction(3, 5)):
        pt = {"z1": z[0], "z2": z[1], "alpha1": a[0], "alpha2": a[1], "beta": b}
        assert poly.evaluate(pt) == grothendieck_det(Partition((1, 0)), z, FactorialAlphabet(a, b))


def test_worked_polynomial():
    g = MultiPoly.gens(("z1", "z2", "alpha1", "alpha2"))
    z1, z2, a1, a2 = g["z1"], g["z2"], g["alpha1"], g["alpha2"]
    expected = (a1 * a2 - a1 - a2 + 1) * (z1 + z2 - z1 * z2) + a1 + a2 - a1 * a2
    assert grothendieck_symbolic(Partition((1, 0)), 2, 2, beta=-1) == expected


def test_errors():
    with pytest.raises(CoincidentVariables):
        grothendieck_det(Partition((1, 0)), [2, 2], FactorialAlphabet((1, 2)))
    with pytest.raises(AlphabetTooShort):
        grothendieck_det(Partition((2, 0)), [2, 3], FactorialAlphabet((1,)))
    with pytest.raises(BudgetExceeded):
        grothendieck_symbolic(Partition((3, 0, 0)), 3, 6)


def test_alphabet_length_bound_is_exact():
    lam = Partition((2, 1, 0))
    z, a = _point(3, 6, seed=21)
    need = lam.first + len(lam) - 1
    ref = grothendieck_det(lam, z, FactorialAlphabet(a[:need]))
    assert grothendieck_det(lam, z, FactorialAlphabet(a)) == ref
    with pytest.raises(AlphabetTooShort):
        grothendieck_det(lam, z, FactorialAlphabet(a[:need - 1]))
