import json
from fractions import Fraction

import pytest

from groth import lattice, verifier
from groth.combinatorics import Partition, PositionVector
from groth.errors import ProfileViolation
from groth.report import render_json
from groth.verifier import (
    degree_certificate, interpolate, verify_commutation, verify_consistency_triangle,
    verify_correspondences, verify_duality, verify_guo_sun, verify_prop51, verify_q_deformed,
    verify_rectangular)


def test_guo_sun_trivial_split():
    rep = verify_guo_sun(Partition((1, 0)), 2, 3, points=5)
    assert rep.ok and rep.params["k"] == 2


def test_guo_sun_large_lattice_instance():
    assert verify_guo_sun(Partition((2, 1)), 5, 5, points=3).ok


def test_guo_sun_single_row():
    assert verify_guo_sun(Partition((1,)), 2, 2, points=25).ok


def test_guo_sun_general_beta():
    for beta in (Fraction(0), Fraction(2), Fraction(-3, 4)):
        assert verify_guo_sun(Partition((1, 0)), 3, 4, beta=beta, points=5).ok


def test_guo_sun_profile_violation():
    with pytest.raises(ProfileViolation):
        verify_guo_sun(Partition((2,)), 2, 2)


def test_rectangular():
    assert verify_rectangular(3, 3, 1, points=25).ok
    assert verify_rectangular(2, 3, 3 - 1, points=5).ok
    full = verify_rectangular(3, 2, 2, points=5)  # k = m
    assert full.ok


def test_rectangular_symbolic_reports_coefficients():
    rep = verify_rectangular(2, 2, 1, symbolic=True)
    assert rep.ok and rep.details["comparison"] == "coefficient-wise"


def test_duality():
    assert verify_duality(2, 3, 1, points=25).ok
    assert verify_duality(3, 2, 0, points=5).ok


def test_duality_swap_symmetry():
    # with n = m the two sums exchange under z <-> alpha
    z = [Fraction(2), Fraction(5, 3)]
    a = [Fraction(1, 7), Fraction(-4)]
    assert verifier.duality_lhs(z, a, 2, 1) == verifier.rectangular_rhs(a, z, 2, 1)
    assert verifier.rectangular_rhs(z, a, 2, 1) == verifier.duality_lhs(a, z, 2, 1)


def test_consistency_triangle():
    assert verify_consistency_triangle(3, 3, 1, points=3).ok


def test_q_deformed():
    assert verify_q_deformed(2, 2, 1, PositionVector((1,), 2), points=10).ok
    assert verify_q_deformed(2, 2, 2, PositionVector((1, 2), 2), points=3).ok  # k = n


@pytest.mark.parametrize("relation", verifier.RELATIONS)
def test_every_relation(relation):
    assert verify_commutation(relation, L=3, n=3, k=1, m=3, ell=2).ok


def test_relation_3_8_on_longer_chain():
    assert verify_commutation("3.8", L=4, n=3, k=1).ok


@pytest.mark.parametrize("which", verifier.CORRESPONDENCES)
def test_every_correspondence(which):
    assert verify_correspondences(which, n=2, m=2, k=1, points=2).ok


def test_correspondence_empty_shape():
    assert verify_correspondences("2.12", n=3, L=6, lam=Partition((0, 0, 0)), points=3).ok


def test_prop51_clauses():
    rep = verify_prop51(3, 1)
    assert rep.ok
    assert rep.details["clauses"]["symfunc"]["1"] == "verified"
    base = verify_prop51(2, 1)
    assert base.details["clauses"]["lattice"]["4"] == "verified"


def test_degree_certificate_reports_exact_degree():
    f = lambda t: 3 * t ** 2 - t + 1
    ok, coeffs = degree_certificate(f, 2, Fraction(1, 2))
    assert ok and coeffs[:3] == [1, -1, 3]
    assert not degree_certificate(f, 1, Fraction(0))[0]
    assert interpolate([0, 1, 2], [1, 2, 5]) == [1, 0, 1]


def test_interpolated_degree_of_right_block():
    # n=3, k=1, y=(2,3): degree exactly 2 in u_3
    u = [Fraction(2), Fraction(7, 3)]
    w = [Fraction(1, 5), Fraction(4)]
    q = Fraction(3, 7)
    ok, coeffs = degree_certificate(lambda t: lattice.barred_wavefunction(w, u + [t], (2, 3), q),
                                    2, Fraction(11))
    assert ok and coeffs[2] != 0


def test_mutation_is_caught(monkeypatch):
    real = lattice.r_matrix

    def skewed(u, w, q):
        r = real(u, w, q)
        e = [list(row) for row in r.entries]
        e[1][1] += 1
        return lattice.RMatrix(tuple(map(tuple, e)), r.u, r.w, r.q)

    monkeypatch.setattr(lattice, "r_matrix", skewed)
    rep = verify_correspondences("5.1", n=2, m=2, k=1, points=2)
    assert not rep.ok
    assert rep.failures[0].assignment  # witness carries the full point


def test_reports_are_deterministic():
    a = render_json(verify_q_deformed(2, 2, 1, PositionVector((2,), 2), points=4, seed=11))
    b = render_json(verify_q_deformed(2, 2, 1, PositionVector((2,), 2), points=4, seed=11))
    assert a == b
    assert json.loads(a)["points"] == 4
