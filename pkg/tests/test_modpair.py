# tests/test_modpair.py
import random

import pytest

from algebra.group import center, enumerate_characters
from algebra.mha import AlgebraElement
from algebra.modpair import (
    ModularPair,
    classify_mpi,
    enumerate_mpi,
    is_mpi,
    twisted_antipode,
    twisted_antipode_via_definition,
)
from algebra.scalar import CycloScalar
from oracles import SUITE_GROUPS


def _brute_force_pairs(G):
    """(g, sigma) with sigma(g) = 1 and S^2 = id, S evaluated from its definition with a random local unit."""
    rng = random.Random(7)
    pairs = []
    for g in G.elements:
        a = AlgebraElement.from_values(G, [rng.randint(1, 5) for _ in G.elements])
        for sigma in enumerate_characters(G):
            if sigma(g) != 1:
                continue

            def S(h):
                return twisted_antipode_via_definition(G, g, a, h).support()[0]

            if all(S(S(h)) == h for h in G.elements):
                pairs.append((g, sigma.exponents))
    return pairs


@pytest.mark.parametrize("spec", SUITE_GROUPS)
def test_enumeration_matches_brute_force(spec, groups):
    G = groups[spec]
    found = [(p.base_point, p.sigma.exponents) for p in enumerate_mpi(G)]
    assert found == _brute_force_pairs(G)


def test_s3_pairs(groups):
    rows = classify_mpi(groups["S3"])
    assert [(r["g"], r["sigma"]) for r in rows] == [("e", [0, 0]), ("e", [0, 3])]
    assert not any(r["deviation"] for r in rows)


@pytest.mark.parametrize("spec,central", [("D4", "r^2"), ("Q8", "i^2")])
def test_central_base_points_go_beyond_abelian_or_identity(spec, central, groups):
    G = groups[spec]
    rows = classify_mpi(G)
    assert len(rows) == 8
    deviations = [r for r in rows if r["deviation"]]
    assert len(deviations) == 4
    assert {r["g"] for r in deviations} == {central}
    assert all(r["central"] for r in rows)


@pytest.mark.parametrize("spec,count", [("Z2", 3), ("Z3", 5), ("Z4", 8), ("Z2xZ2", 10)])
def test_abelian_pair_counts(spec, count, groups):
    # sum over characters of |ker sigma|
    assert len(enumerate_mpi(groups[spec])) == count


def test_twisted_antipode_closed_form(groups):
    G = groups["S3"]
    sigma = enumerate_characters(G)[1]
    for g in G.elements:
        for h in G.elements:
            assert twisted_antipode(G, g, sigma, h) == G.mul[G.inv[h]][g]


def test_non_central_base_point_is_not_in_involution(groups):
    G = groups["S3"]
    trivial = enumerate_characters(G)[0]
    r = G.index("r")
    assert r not in center(G)
    assert not is_mpi(G, r, trivial)


def test_local_unit_must_not_vanish(groups):
    G = groups["Z3"]
    a = AlgebraElement.basis(G, 0)
    with pytest.raises(ValueError):
        twisted_antipode_via_definition(G, 1, a, 2)


def test_pair_requires_sigma_one_at_base_point(groups):
    G = groups["Z2"]
    sign = enumerate_characters(G)[1]
    with pytest.raises(ValueError):
        ModularPair(G, 1, sign, True)
    assert ModularPair(G, 0, sign, True).to_json() == {"g": "0", "sigma": [1], "mpi": True}
