# tests/test_cocyclic.py
import random

import pytest

from algebra.cochain import Cochain, index_of, random_cochain
from algebra.cocyclic import (
    cyclic_basis,
    cyclic_cohomology_dim,
    cyclic_orbit_vectors,
    cyclic_projector,
    is_cyclic_cochain,
    tau,
    tau_operator,
    verify_cocyclic_identities,
    verify_coboundary_image_cyclic,
    verify_projector,
)
from algebra.errors import CyclicityError
from algebra.group import enumerate_characters, trivial_character
from algebra.report import all_passed, failures
from algebra.scalar import CycloScalar
from oracles import SMALL_GROUPS, SUITE_GROUPS, cyclic_dims, two_characters


def test_tau_formula(groups):
    G = groups["Z3"]
    sigma = enumerate_characters(G)[1]
    F = Cochain.from_function(G, 2, lambda g, h: CycloScalar.rational(3, 10 * g + h))
    # (tau F)(1, 1) = F((1+1)^-1, 1) sigma(1) = F(1, 1) zeta
    assert tau(F, sigma)(1, 1) == CycloScalar.zeta(3) * 11
    assert tau(F, sigma)(2, 0) == 12


@pytest.mark.parametrize("spec", SMALL_GROUPS)
def test_cocyclic_identities(spec, groups):
    G = groups[spec]
    for sigma in two_characters(G):
        checks = verify_cocyclic_identities(G, sigma, 3)
        assert all_passed(checks), failures(checks)
        assert {c.degree for c in checks} == {0, 1, 2, 3}


def test_sign_flipped_tau_is_caught(groups):
    G = groups["Z2"]
    sigma = trivial_character(G)

    def flipped(G, n, sigma):
        return tau_operator(G, n, sigma).scaled(-1)

    bad = failures(verify_cocyclic_identities(G, sigma, 2, tau_factory=flipped))
    names = {(c.check, c.degree) for c in bad}
    assert ("tau0^1=id", 0) in names
    assert ("tau2^3=id", 2) in names
    assert ("tau1^2=id", 1) not in names


@pytest.mark.parametrize("spec", SMALL_GROUPS)
def test_tau_has_order_n_plus_one(spec, groups):
    G = groups[spec]
    sigma = enumerate_characters(G)[-1]
    F = random_cochain(G, 2, sigma.order, random.Random(5))
    assert tau(tau(tau(F, sigma), sigma), sigma) == F


@pytest.mark.parametrize("spec", SMALL_GROUPS)
def test_cyclic_basis_is_cyclic(spec, groups):
    G = groups[spec]
    for sigma in two_characters(G):
        for n in range(3):
            basis = cyclic_basis(G, sigma, n)
            assert all(is_cyclic_cochain(F, sigma) for F in basis)


@pytest.mark.parametrize("spec", SUITE_GROUPS)
def test_cyclic_degree_zero(spec, groups):
    G = groups[spec]
    for sigma in enumerate_characters(G):
        assert cyclic_cohomology_dim(G, sigma, 0).dim == (1 if sigma.is_trivial() else 0)


@pytest.mark.parametrize("spec", ["Z2", "Z3", "Z2xZ2"])
def test_cyclic_dims_match_dense_oracle(spec, groups):
    G = groups[spec]
    real = [chi for chi in enumerate_characters(G) if all(v == 1 or v == -1 for v in chi.values)]
    for sigma in real:
        for n in range(3):
            result = cyclic_cohomology_dim(G, sigma, n)
            assert (result.dim_kernel, result.dim_image_prev) == cyclic_dims(G, sigma, n)


@pytest.mark.parametrize("spec", ["Z3", "Z4"])
def test_projector(spec, groups):
    G = groups[spec]
    for sigma in two_characters(G):
        for n in range(3):
            checks = verify_projector(G, sigma, n)
            assert all_passed(checks), failures(checks)


def test_projector_fixes_cyclic_cochains(groups):
    G = groups["Z3"]
    sigma = enumerate_characters(G)[2]
    for F in cyclic_basis(G, sigma, 2):
        assert cyclic_projector(F, sigma) == F


@pytest.mark.parametrize("spec", SUITE_GROUPS)
def test_coboundaries_of_scalars_are_cyclic(spec, groups):
    G = groups[spec]
    for sigma in enumerate_characters(G):
        assert verify_coboundary_image_cyclic(G, sigma).passed


def test_non_cyclic_image_raises_with_witness(groups, monkeypatch):
    import algebra.cocyclic as cocyclic

    G = groups["Z3"]
    sigma = trivial_character(G)

    def bogus(G, sigma, m):
        # b sends everything to the indicator of (1, .., 1)
        hit = index_of((1,) * (m + 1), G.order)
        one = CycloScalar.rational(sigma.order, 1)
        return [{c: one for c in range(G.order ** m)} if y == hit else {} for y in range(G.order ** (m + 1))]

    monkeypatch.setattr(cocyclic, "coboundary_rows", bogus)
    with pytest.raises(CyclicityError) as info:
        cocyclic.cyclic_cohomology_dim(G, sigma, 1)
    assert info.value.witness == (1,)


def test_cyclic_space_dimensions_z2(groups):
    G = groups["Z2"]
    sigma = trivial_character(G)
    assert len(cyclic_basis(G, sigma, 0)) == 1
    # F(g^-1) = -F(g) forces F = 0 when every element is its own inverse
    assert cyclic_basis(G, sigma, 1) == []


@pytest.mark.parametrize("spec", SMALL_GROUPS)
def test_orbit_vectors_are_cyclic_and_disjoint(spec, groups):
    G = groups[spec]
    for sigma in two_characters(G):
        for n in range(4):
            vectors = cyclic_orbit_vectors(G, sigma, n)
            supports = [set(v) for v in vectors]
            assert sum(len(s) for s in supports) == len(set().union(*supports))
            for F in cyclic_basis(G, sigma, n):
                assert is_cyclic_cochain(F, sigma)


@pytest.mark.parametrize("spec", ["Z2", "Z3"])
def test_cyclic_cohomology_is_periodic_in_high_degree(spec, groups):
    # HH^n = 0 for n >= 1, so HC^even = HC^0 and HC^odd = HC^1 = 0
    G = groups[spec]
    sigma = trivial_character(G)
    top = 9 if spec == "Z2" else 5
    for n in range(top + 1):
        assert cyclic_cohomology_dim(G, sigma, n).dim == (1 if n % 2 == 0 else 0)
    other = enumerate_characters(G)[1]
    assert cyclic_cohomology_dim(G, other, top).dim == 0
