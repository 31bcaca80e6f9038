# algebra/cocyclic.py
"""The cyclic operator tau_n on C(G)-cochains and cyclic cohomology.

    (tau_n F)(g_1, .., g_n) = F((g_1 ... g_n)^-1, g_1, .., g_{n-1}) sigma(g_n),

with the character of the modular pair fixed to the counit. tau_0 is the identity on
scalars, so every degree-0 cochain is cyclic.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from algebra.cochain import (
    Cochain,
    CochainOperator,
    CohomologyResult,
    check_capacity,
    coboundary,
    coboundary_rows,
    codegeneracy_operator,
    coface_operator,
    compare_operators,
    identity_operator,
    index_of,
    point_of,
    tuples,
)
from algebra.errors import CyclicityError, DegreeError
from algebra.group import Character, GroupTable
from algebra.report import Check, CyclicReport, summary_line
from algebra.scalar import CycloScalar, SparseRow, sparse_rank

logger = logging.getLogger(__name__)

TauFactory = Callable[[GroupTable, int, Character], CochainOperator]


def tau_operator(G: GroupTable, n: int, sigma: Character) -> CochainOperator:
    if n < 0:
        raise DegreeError(f"negative degree {n}")
    if n == 0:
        return identity_operator(G, 0, sigma.order)
    size = G.order
    pull, weight = [], []
    for x in tuples(size, n):
        total = G.product(*x)
        pull.append(index_of((G.inv[total],) + x[:n - 1], size))
        weight.append(sigma(x[n - 1]))
    return CochainOperator(G, n, n, tuple(pull), tuple(weight))


def tau(F: Cochain, sigma: Character) -> Cochain:
    return tau_operator(F.group, F.degree, sigma).apply(F)


def is_cyclic_cochain(F: Cochain, sigma: Character) -> bool:
    """(-1)^n tau_n F = F, exactly."""
    image = tau(F, sigma)
    if F.degree % 2:
        image = -image
    return image.table == F.table


# -------------------
# Identity suite
# -------------------
def verify_cocyclic_identities(
    G: GroupTable,
    sigma: Character,
    n_max: int,
    tau_factory: TauFactory = tau_operator,
) -> List[CyclicReport]:
    """Check the cocyclic identities on full cochain bases in degrees 0..n_max.

    With 0-indexed codegeneracies s_i = codegeneracy(i + 1):
        tau_{n+1} d_p = d_{p-1} tau_n        (p = 1..n+1)
        tau_{n+1} d_0 = d_{n+1}              (the last coface)
        tau_n s_i = s_{i-1} tau_{n+1}        (i = 1..n)
        tau_n s_0 = s_n tau_{n+1}^2
        tau_n^{n+1} = id

    ``tau_factory`` builds the tau used in the checks; swapping it is how a broken
    operator is fed to the suite.
    """
    order = sigma.order
    checks: List[CyclicReport] = []
    for n in range(n_max + 1):
        check_capacity(G, n + 1)
        t_n, t_next = tau_factory(G, n, sigma), tau_factory(G, n + 1, sigma)
        for p in range(1, n + 2):
            checks.append(compare_operators(
                f"tau{n + 1}d{p}=d{p - 1}tau{n}", n,
                t_next.after(coface_operator(G, n, p, sigma)),
                coface_operator(G, n, p - 1, sigma).after(t_n),
            ))
        checks.append(compare_operators(
            f"tau{n + 1}d0=d{n + 1}", n,
            t_next.after(coface_operator(G, n, 0, sigma)),
            coface_operator(G, n, n + 1, sigma),
        ))
        for i in range(1, n + 1):
            checks.append(compare_operators(
                f"tau{n}s{i}=s{i - 1}tau{n + 1}", n,
                t_n.after(codegeneracy_operator(G, n + 1, i + 1, order)),
                codegeneracy_operator(G, n + 1, i, order).after(t_next),
            ))
        checks.append(compare_operators(
            f"tau{n}s0=s{n}tau{n + 1}^2", n,
            t_n.after(codegeneracy_operator(G, n + 1, 1, order)),
            codegeneracy_operator(G, n + 1, n + 1, order).after(t_next.power(2)),
        ))
        checks.append(compare_operators(
            f"tau{n}^{n + 1}=id", n, t_n.power(n + 1), identity_operator(G, n, order)
        ))
    logger.info(summary_line(f"cocyclic identities for {G.label}", checks))
    return checks


# -------------------
# Cyclic subcomplex
# -------------------
def cyclic_orbit_vectors(G: GroupTable, sigma: Character, n: int) -> List[SparseRow]:
    """Sparse basis of the cyclic cochains of degree n, one vector per admissible tau-orbit.

    Cyclicity reads F(x) = w(x) F(pull(x)) with w = (-1)^n weight. pull is a permutation,
    so along an orbit x_0 -> x_1 = pull(x_0) -> ... F is fixed by F(x_0); the orbit
    carries a cyclic cochain iff walking once around it brings F(x_0) back to itself.
    """
    if n < 0:
        raise DegreeError(f"negative degree {n}")
    one = CycloScalar.rational(sigma.order, 1)
    if n == 0:
        return [{0: one}]
    op = tau_operator(G, n, sigma)
    sign = -1 if n % 2 else 1
    seen = set()
    vectors: List[SparseRow] = []
    for start in range(G.order ** n):
        if start in seen:
            continue
        vector: SparseRow = {}
        x, value = start, one
        while x not in vector:
            seen.add(x)
            vector[x] = value
            value = value / (op.weight[x] * sign)
            x = op.pull[x]
        if value == one:
            vectors.append(vector)
    return vectors


def cyclic_basis(G: GroupTable, sigma: Character, n: int) -> List[Cochain]:
    """A basis of the cyclic cochains {F : (-1)^n tau_n F = F} of degree n."""
    zero = CycloScalar(sigma.order)
    size = G.order ** n
    return [
        Cochain(G, n, tuple(v.get(i, zero) for i in range(size)))
        for v in cyclic_orbit_vectors(G, sigma, n)
    ]


def _coboundary_columns(G: GroupTable, sigma: Character, m: int) -> Dict[int, List[Tuple[int, CycloScalar]]]:
    columns: Dict[int, List[Tuple[int, CycloScalar]]] = defaultdict(list)
    for y, row in enumerate(coboundary_rows(G, sigma, m)):
        for col, v in row.items():
            columns[col].append((y, v))
    return columns


def _image(vector: SparseRow, columns: Dict[int, List[Tuple[int, CycloScalar]]]) -> SparseRow:
    out: SparseRow = {}
    for col, a in vector.items():
        for y, v in columns.get(col, ()):
            out[y] = out[y] + a * v if y in out else a * v
    return {y: v for y, v in out.items() if not v.is_zero()}


Rotation = Dict[int, Tuple[int, CycloScalar]]


def _rotation(G: GroupTable, sigma: Character, d: int) -> Rotation:
    # z -> (y, w) with pull(y) = z, so ((-1)^d tau_d u)(y) = w u(z)
    op = tau_operator(G, d, sigma)
    sign = -1 if d % 2 else 1
    return {p: (y, op.weight[y] * sign) for y, p in enumerate(op.pull)}


def _cyclic_defect(u: SparseRow, rotation: Rotation) -> Optional[int]:
    """Smallest index where (-1)^d tau_d u and u differ, None when u is cyclic."""
    rotated = {rotation[z][0]: rotation[z][1] * v for z, v in u.items()}
    differing = [k for k in rotated.keys() | u.keys() if rotated.get(k) != u.get(k)]
    return min(differing) if differing else None


def cyclic_cohomology_dim(G: GroupTable, sigma: Character, n: int) -> CohomologyResult:
    """Dimensions of ker / im of b restricted to cyclic cochains.

    Before the ranks are taken, b of every basis vector of the cyclic space in degrees
    n-1 and n is checked to be cyclic again; CyclicityError carries the offending point.
    """
    if n < 0:
        raise DegreeError(f"negative degree {n}")
    check_capacity(G, n)
    logger.info("Computing HC^%d of C(%s) with sigma %s", n, G.label, sigma.generator_exponents())
    images: Dict[int, List[SparseRow]] = {n - 1: []}
    dim_cyclic = 0
    for m in (n - 1, n):
        if m < 0:
            continue
        columns = _coboundary_columns(G, sigma, m)
        rotation = _rotation(G, sigma, m + 1)
        vectors = cyclic_orbit_vectors(G, sigma, m)
        dim_cyclic = len(vectors)
        images[m] = []
        for vector in vectors:
            image = _image(vector, columns)
            bad = _cyclic_defect(image, rotation)
            if bad is not None:
                witness = point_of(bad, G.order, m + 1)
                raise CyclicityError(
                    f"b maps a cyclic cochain of degree {m} outside the cyclic subspace "
                    f"at {tuple(G.names[g] for g in witness)}",
                    witness=witness,
                )
            images[m].append(image)
    dim_kernel = dim_cyclic - sparse_rank(images[n])
    dim_image = sparse_rank(images[n - 1])
    return CohomologyResult(n, dim_kernel, dim_image)


def cyclic_projector(F: Cochain, sigma: Character) -> Cochain:
    """P F = 1/(n+1) sum_k ((-1)^n tau_n)^k F, the projection onto cyclic cochains."""
    n = F.degree
    sign = -1 if n % 2 else 1
    step = tau_operator(F.group, n, sigma).scaled(sign)
    acc, term = F, F
    for _ in range(n):
        term = step.apply(term)
        acc = acc + term
    return acc * Fraction(1, n + 1)


def verify_projector(G: GroupTable, sigma: Character, n: int) -> List[Check]:
    """P^2 = P, tau P = (-1)^n P and tau P = P tau on every basis cochain of degree n."""
    check_capacity(G, n)
    order = sigma.order
    sign = -1 if n % 2 else 1
    failures = {"projector_idempotent": None, "projector_image_cyclic": None, "projector_commutes_with_tau": None}
    for x in tuples(G.order, n):
        F = Cochain.indicator(G, x, order)
        PF = cyclic_projector(F, sigma)
        names = tuple(G.names[g] for g in x)
        if failures["projector_idempotent"] is None and cyclic_projector(PF, sigma) != PF:
            failures["projector_idempotent"] = names
        if failures["projector_image_cyclic"] is None and tau(PF, sigma) * sign != PF:
            failures["projector_image_cyclic"] = names
        if failures["projector_commutes_with_tau"] is None and \
                tau(PF, sigma) != cyclic_projector(tau(F, sigma), sigma):
            failures["projector_commutes_with_tau"] = names
    return [Check(name, bad is None, degree=n, counterexample=bad) for name, bad in failures.items()]


def verify_coboundary_image_cyclic(G: GroupTable, sigma: Character) -> Check:
    """b(C^0) consists of cyclic 1-cochains: f_c(g) = c(1 - sigma(g)) satisfies F(g^-1) sigma(g) = -F(g)."""
    b1 = coboundary(Cochain.scalar(G, CycloScalar.rational(sigma.order, 1)), sigma)
    ok = is_cyclic_cochain(b1, sigma)
    witness: Tuple[str, ...] = None
    if not ok:
        bad = (-tau(b1, sigma) - b1).first_nonzero()
        witness = tuple(G.names[g] for g in bad)
    return Check("coboundary_of_scalars_cyclic", ok, degree=0, counterexample=witness)
