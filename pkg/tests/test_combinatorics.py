from fractions import Fraction
from math import comb

import pytest

from groth.combinatorics import (
    Partition, PositionVector, build_mu, k_subsets, partition_from_positions,
    partitions_in_box, position_vectors, positions_from_partition, variable_map)
from groth.errors import BoxOverflow, ProfileViolation, SingularMap


def test_positions_of_the_worked_lattice_instances():
    # mu = ((m-k)^{n-k}, lambda) for lambda=(2,1), n=m=5, k=2 on a chain of length 8
    mu = build_mu(Partition((2, 1)), 5, 5)
    assert mu == Partition((3, 3, 3, 2, 1))
    assert positions_from_partition(mu, 8).positions == (2, 4, 6, 7, 8)
    assert partition_from_positions(PositionVector((2, 3, 4, 6, 8), 8)) == Partition((3, 2, 1, 1, 1))


def test_positions_round_trip():
    for lam in partitions_in_box(3, 3):
        x = positions_from_partition(lam, 6)
        assert partition_from_positions(x) == lam
        assert PositionVector.from_occupation(x.occupation()) == x


def test_box_overflow():
    with pytest.raises(BoxOverflow):
        positions_from_partition(Partition((4, 0, 0)), 6)


def test_build_mu_profile():
    assert build_mu(Partition((1,)), 2, 2) == Partition((1, 1))
    with pytest.raises(ProfileViolation):
        build_mu(Partition((2,)), 2, 2)


def test_enumeration_counts():
    assert len(list(partitions_in_box(3, 3))) == comb(6, 3)
    assert len(list(position_vectors(2, 5))) == comb(5, 2)
    splits = list(k_subsets(4, 2))
    assert len(splits) == 6
    assert splits[0].chosen == (1, 2) and splits[0].complement == (3, 4)
    assert list(k_subsets(3, 0))[0].complement == (1, 2, 3)


def test_variable_maps_invert():
    for v in (Fraction(2), Fraction(-3, 7), Fraction(5, 4)):
        assert variable_map("z->u", variable_map("u->z", v)) == v
        assert variable_map("w->alpha", variable_map("alpha->w", v)) == v
    with pytest.raises(SingularMap):
        variable_map("u->z", 0)
    with pytest.raises(SingularMap):
        variable_map("z->u", 1)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert Partition.parse("2,1,0") == Partition((2, 1, 0))
    assert len(Partition.parse("")) == 0
