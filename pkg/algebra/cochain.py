# algebra/cochain.py
"""The cosimplicial complex of C(G): cochains, cofaces, codegeneracies and the coboundary b.

A degree-n cochain is a function on G^n, stored densely in row-major order (first
slot varies slowest); a degree-0 cochain is a single scalar. Every structure map
used here (cofaces, codegeneracies, and the cyclic operator of algebra/cocyclic.py)
is monomial: (T F)(x) = w(x) F(pull(x)). ``CochainOperator`` stores that pair, so
composites and identities between structure maps are checked as tables over G^m,
which is the same as checking them on the full cochain basis.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from algebra.errors import CapacityError, DegreeError, GroupMismatchError
from algebra.group import Character, GroupTable
from algebra.report import Check, summary_line
from algebra.scalar import CycloScalar, SparseRow, sparse_rank
from config.settings import RANDOM_SEED, TABLE_CAP, XI_TRIALS

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def tuples(size: int, n: int) -> Tuple[Tuple[int, ...], ...]:
    """All points of G^n for |G| = size, in table order."""
    return tuple(itertools.product(range(size), repeat=n))


def index_of(point: Sequence[int], size: int) -> int:
    idx = 0
    for g in point:
        idx = idx * size + g
    return idx


def point_of(index: int, size: int, n: int) -> Tuple[int, ...]:
    """Inverse of ``index_of`` on points of G^n."""
    digits = []
    for _ in range(n):
        index, g = divmod(index, size)
        digits.append(g)
    return tuple(reversed(digits))


def check_capacity(G: GroupTable, n: int, cap: Optional[int] = None) -> None:
    cap = TABLE_CAP if cap is None else cap
    needed = G.order ** (n + 1)
    if needed > cap:
        raise CapacityError(
            f"degree {n} over {G.label or 'group'} needs a table of {needed} entries "
            f"(|G|^{n + 1}); the cap is {cap}"
        )


# -------------------
# Cochains
# -------------------
@dataclass(frozen=True)
class Cochain:
    group: GroupTable
    degree: int
    table: Tuple[CycloScalar, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise DegreeError(f"negative cochain degree {self.degree}")
        if len(self.table) != self.group.order ** self.degree:
            raise ValueError(
                f"degree-{self.degree} cochain over a group of order {self.group.order} "
                f"needs {self.group.order ** self.degree} values, got {len(self.table)}"
            )

    @property
    def order(self) -> int:
        return self.table[0].order

    @classmethod
    def zero(cls, G: GroupTable, n: int, order: int) -> "Cochain":
        return cls(G, n, (CycloScalar(order),) * G.order ** n)

    @classmethod
    def scalar(cls, G: GroupTable, c: CycloScalar) -> "Cochain":
        return cls(G, 0, (c,))

    @classmethod
    def indicator(cls, G: GroupTable, point: Sequence[int], order: int) -> "Cochain":
        n = len(point)
        hit = index_of(point, G.order)
        zero, one = CycloScalar(order), CycloScalar.rational(order, 1)
        return cls(G, n, tuple(one if i == hit else zero for i in range(G.order ** n)))

    @classmethod
    def from_function(cls, G: GroupTable, n: int, fn: Callable[..., CycloScalar]) -> "Cochain":
        return cls(G, n, tuple(fn(*x) for x in tuples(G.order, n)))

    def __call__(self, *point: int) -> CycloScalar:
        return self.table[index_of(point, self.group.order)]

    def _match(self, other: "Cochain") -> None:
        if other.group != self.group:
            raise GroupMismatchError("cochains over different groups")
        if other.degree != self.degree:
            raise DegreeError(f"cannot combine degrees {self.degree} and {other.degree}")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._match(other)
        return Cochain(self.group, self.degree, tuple(a + b for a, b in zip(self.table, other.table)))

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._match(other)
        return Cochain(self.group, self.degree, tuple(a - b for a, b in zip(self.table, other.table)))

    def __mul__(self, c) -> "Cochain":
        return Cochain(self.group, self.degree, tuple(a * c for a in self.table))

    __rmul__ = __mul__

    def __neg__(self) -> "Cochain":
        return self * -1

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.table)

    def first_nonzero(self) -> Optional[Tuple[int, ...]]:
        for x, v in zip(tuples(self.group.order, self.degree), self.table):
            if not v.is_zero():
                return x
        return None

    def to_json(self) -> dict:
        return {"degree": self.degree, "table": [v.to_json() for v in self.table]}


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    dim_kernel: int
    dim_image_prev: int

    def __post_init__(self):
        if self.dim_image_prev > self.dim_kernel:
            raise ValueError(
                f"image of dimension {self.dim_image_prev} cannot exceed kernel of dimension {self.dim_kernel}"
            )

    @property
    def dim(self) -> int:
        return self.dim_kernel - self.dim_image_prev

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "dim_kernel": self.dim_kernel,
            "dim_image_prev": self.dim_image_prev,
            "dim": self.dim,
        }


# -------------------
# Monomial operators
# -------------------
@dataclass(frozen=True)
class CochainOperator:
    """(T F)(x) = weight[x] * F(pull[x]) from degree ``source`` to degree ``target``."""

    group: GroupTable
    source: int
    target: int
    pull: Tuple[int, ...]
    weight: Tuple[CycloScalar, ...]

    def apply(self, F: Cochain) -> Cochain:
        if F.degree != self.source:
            raise DegreeError(f"operator expects degree {self.source}, got {F.degree}")
        return Cochain(
            self.group,
            self.target,
            tuple(w * F.table[p] for p, w in zip(self.pull, self.weight)),
        )

    __call__ = apply

    def after(self, other: "CochainOperator") -> "CochainOperator":
        """The composite self o other (apply ``other`` first)."""
        if other.target != self.source:
            raise DegreeError(f"cannot compose degree {other.target} into degree {self.source}")
        return CochainOperator(
            self.group,
            other.source,
            self.target,
            tuple(other.pull[p] for p in self.pull),
            tuple(w * other.weight[p] for p, w in zip(self.pull, self.weight)),
        )

    def scaled(self, c) -> "CochainOperator":
        return CochainOperator(self.group, self.source, self.target, self.pull,
                               tuple(w * c for w in self.weight))

    def power(self, k: int) -> "CochainOperator":
        if self.source != self.target:
            raise DegreeError("only an endomorphism can be iterated")
        out = identity_operator(self.group, self.source, self.weight[0].order if self.weight else 1)
        for _ in range(k):
            out = self.after(out)
        return out

    def first_difference(self, other: "CochainOperator") -> Optional[Tuple[int, ...]]:
        """First point of G^target where the two operators differ, None when they agree."""
        if (self.source, self.target) != (other.source, other.target):
            raise DegreeError("operators between different degrees")
        for x, p, q, v, w in zip(tuples(self.group.order, self.target),
                                 self.pull, other.pull, self.weight, other.weight):
            if p != q or v != w:
                return x
        return None


def identity_operator(G: GroupTable, n: int, order: int) -> CochainOperator:
    one = CycloScalar.rational(order, 1)
    size = G.order ** n
    return CochainOperator(G, n, n, tuple(range(size)), (one,) * size)


def coface_operator(G: GroupTable, n: int, i: int, sigma: Character) -> CochainOperator:
    if not 0 <= i <= n + 1:
        raise DegreeError(f"coface index {i} outside 0..{n + 1} in degree {n}")
    size, mul = G.order, G.mul
    one = CycloScalar.rational(sigma.order, 1)
    pull, weight = [], []
    for x in tuples(size, n + 1):
        if i == 0:
            pull.append(index_of(x[1:], size))
            weight.append(one)
        elif i <= n:
            merged = x[:i - 1] + (mul[x[i - 1]][x[i]],) + x[i + 1:]
            pull.append(index_of(merged, size))
            weight.append(one)
        else:
            pull.append(index_of(x[:n], size))
            weight.append(sigma(x[n]))
    return CochainOperator(G, n, n + 1, tuple(pull), tuple(weight))


def codegeneracy_operator(G: GroupTable, n: int, j: int, order: int) -> CochainOperator:
    """sigma_j for j = 1..n: insert the neutral element in slot j (degree n to n-1)."""
    if n < 1 or not 1 <= j <= n:
        raise DegreeError(f"codegeneracy index {j} outside 1..{n} in degree {n}")
    size, e = G.order, G.identity
    one = CycloScalar.rational(order, 1)
    pull = tuple(index_of(x[:j - 1] + (e,) + x[j - 1:], size) for x in tuples(size, n - 1))
    return CochainOperator(G, n, n - 1, pull, (one,) * len(pull))


# -------------------
# Structure maps on cochains
# -------------------
def coface(i: int, F: Cochain, sigma: Character) -> Cochain:
    """delta_i F, of degree n+1.

    delta_0 drops the first argument, delta_i (1 <= i <= n) multiplies arguments i and
    i+1, and delta_{n+1} drops the last argument g_{n+1} and multiplies by sigma(g_{n+1}).
    """
    return coface_operator(F.group, F.degree, i, sigma).apply(F)


def codegeneracy(j: int, F: Cochain) -> Cochain:
    """sigma_j F for 1 <= j <= n: (sigma_j F)(g_1..g_{n-1}) = F(g_1, .., g_{j-1}, e, g_j, ..)."""
    return codegeneracy_operator(F.group, F.degree, j, F.order).apply(F)


def coboundary(F: Cochain, sigma: Character) -> Cochain:
    n = F.degree
    out = coface(0, F, sigma)
    for i in range(1, n + 2):
        term = coface(i, F, sigma)
        out = out - term if i % 2 else out + term
    return out


def coboundary_closed_form(F: Cochain, sigma: Character) -> Cochain:
    """b F evaluated pointwise from the explicit formula

    F(g_2..) + sum_i (-1)^i F(.., g_i g_{i+1}, ..) + (-1)^{n+1} F(g_1..g_n) sigma(g_{n+1}).
    """
    G, n = F.group, F.degree

    def value(*x):
        acc = F(*x[1:])
        for i in range(1, n + 1):
            term = F(*(x[:i - 1] + (G.mul[x[i - 1]][x[i]],) + x[i + 1:]))
            acc = acc - term if i % 2 else acc + term
        last = F(*x[:n]) * sigma(x[n])
        return acc + last if (n + 1) % 2 == 0 else acc - last

    return Cochain.from_function(G, n + 1, value)


def coboundary_rows(G: GroupTable, sigma: Character, n: int) -> List[SparseRow]:
    """Matrix of b: C^n -> C^{n+1} as sparse rows, one per point of G^{n+1}."""
    rows: List[SparseRow] = []
    ops = [coface_operator(G, n, i, sigma) for i in range(n + 2)]
    for x in range(G.order ** (n + 1)):
        row: Dict[int, CycloScalar] = {}
        for i, op in enumerate(ops):
            col, w = op.pull[x], op.weight[x]
            if i % 2:
                w = -w
            row[col] = row[col] + w if col in row else w
        rows.append({c: v for c, v in row.items() if not v.is_zero()})
    return rows


def coboundary_rank(G: GroupTable, sigma: Character, n: int) -> int:
    if n < 0:
        return 0
    return sparse_rank(coboundary_rows(G, sigma, n))


def hochschild_dim(G: GroupTable, sigma: Character, n: int) -> CohomologyResult:
    """Dimension of HH^n_sigma(C(G)) = ker b / im b.

    Args:
        G (GroupTable): The group.
        sigma (Character): The group-like element entering the last coface.
        n (int): Degree, n >= 0.

    Returns:
        CohomologyResult: Kernel of b at degree n, image of b from degree n-1.
    """
    if n < 0:
        raise DegreeError(f"negative degree {n}")
    check_capacity(G, n)
    logger.info("Computing HH^%d of C(%s) with sigma %s", n, G.label, sigma.generator_exponents())
    dim_kernel = G.order ** n - coboundary_rank(G, sigma, n)
    dim_image = coboundary_rank(G, sigma, n - 1)
    return CohomologyResult(n, dim_kernel, dim_image)


# -------------------
# Comparison with group cohomology
# -------------------
def xi_transform(F: Cochain) -> Cochain:
    """Xi(F)(g_1, .., g_n) = F(g_n^-1, .., g_1^-1)."""
    G = F.group
    return Cochain.from_function(
        G, F.degree, lambda *x: F(*(G.inv[g] for g in reversed(x)))
    )


def signed_xi(F: Cochain) -> Cochain:
    """Xi corrected by (-1)^{n(n+1)/2}; this version intertwines b and d with no sign."""
    n = F.degree
    return -xi_transform(F) if (n * (n + 1) // 2) % 2 else xi_transform(F)


def classical_differential(phi: Cochain, sigma: Character) -> Cochain:
    """Inhomogeneous group-cohomology differential with coefficients C, g.c = sigma(g)^-1 c."""
    G, n = phi.group, phi.degree

    def value(*x):
        acc = phi(*x[1:]) * sigma(x[0]).inverse()
        for i in range(1, n + 1):
            term = phi(*(x[:i - 1] + (G.mul[x[i - 1]][x[i]],) + x[i + 1:]))
            acc = acc - term if i % 2 else acc + term
        last = phi(*x[:n])
        return acc + last if (n + 1) % 2 == 0 else acc - last

    return Cochain.from_function(G, n + 1, value)


def classical_rows(G: GroupTable, sigma: Character, n: int) -> List[SparseRow]:
    size = G.order
    rows: List[SparseRow] = []
    for x in tuples(size, n + 1):
        row: Dict[int, CycloScalar] = {}
        entries = [(index_of(x[1:], size), sigma(x[0]).inverse())]
        for i in range(1, n + 1):
            merged = x[:i - 1] + (G.mul[x[i - 1]][x[i]],) + x[i + 1:]
            entries.append((index_of(merged, size), CycloScalar.rational(sigma.order, (-1) ** i)))
        entries.append((index_of(x[:n], size), CycloScalar.rational(sigma.order, (-1) ** (n + 1))))
        for col, w in entries:
            row[col] = row[col] + w if col in row else w
        rows.append({c: v for c, v in row.items() if not v.is_zero()})
    return rows


def group_cohomology_dim(G: GroupTable, sigma: Character, n: int) -> CohomologyResult:
    """dim H^n(G, C) with G acting on C through sigma^-1."""
    check_capacity(G, n)
    dim_kernel = G.order ** n - sparse_rank(classical_rows(G, sigma, n))
    dim_image = sparse_rank(classical_rows(G, sigma, n - 1)) if n >= 1 else 0
    return CohomologyResult(n, dim_kernel, dim_image)


def random_cochain(G: GroupTable, n: int, order: int, rng: random.Random) -> Cochain:
    """Random cochain with small integer coordinates in the power basis of Q(zeta_N)."""
    return Cochain(
        G, n,
        tuple(
            CycloScalar(order, [rng.randint(-3, 3) for _ in range(max(order - 1, 1))])
            for _ in range(G.order ** n)
        ),
    )


def verify_xi_chain_map(
    G: GroupTable,
    sigma: Character,
    n: int,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> bool:
    """Check Xi(bF) = (-1)^{n+1} d(Xi F) on random degree-n cochains.

    Xi identifies the two complexes up to this degree sign, which does not change
    kernels or images. ``signed_xi`` is also checked: it satisfies the identity with no sign.
    """
    trials = XI_TRIALS if trials is None else trials
    rng = random.Random(RANDOM_SEED if seed is None else seed)
    sign = -1 if n % 2 == 0 else 1
    for t in range(trials):
        F = random_cochain(G, n, sigma.order, rng)
        left = xi_transform(coboundary(F, sigma))
        right = classical_differential(xi_transform(F), sigma) * sign
        if left.table != right.table:
            logger.info("❌ Xi chain-map identity fails on trial %d at %s", t, (left - right).first_nonzero())
            return False
        if signed_xi(coboundary(F, sigma)).table != classical_differential(signed_xi(F), sigma).table:
            logger.info("❌ signed Xi fails to commute with the differentials on trial %d", t)
            return False
    logger.info("✅ Xi chain-map identity holds on %d cochains of degree %d over %s", trials, n, G.label)
    return True


# -------------------
# Structural identity suites
# -------------------
def _names(G: GroupTable, x: Optional[Tuple[int, ...]]) -> Optional[Tuple[str, ...]]:
    return None if x is None else tuple(G.names[g] for g in x)


def compare_operators(name: str, n: int, left: CochainOperator, right: CochainOperator) -> Check:
    bad = left.first_difference(right)
    return Check(name, bad is None, degree=n, counterexample=_names(left.group, bad))


def verify_cosimplicial_identities(G: GroupTable, sigma: Character, n_max: int) -> List[Check]:
    """Cosimplicial identities among cofaces and codegeneracies in degrees 0..n_max.

    Codegeneracies are taken 0-indexed here, s_i = codegeneracy(i + 1), so that
        d_j d_i = d_i d_{j-1}  (i < j)
        s_j s_i = s_i s_{j+1}  (i <= j)
        s_j d_i = d_i s_{j-1} (i < j), id (i = j, j+1), d_{i-1} s_j (i > j+1).
    """
    order = sigma.order
    checks: List[Check] = []

    def d(m, i):
        return coface_operator(G, m, i, sigma)

    def s(m, i):
        return codegeneracy_operator(G, m, i + 1, order)

    for n in range(n_max + 1):
        check_capacity(G, n + 1)
        for j in range(n + 3):
            for i in range(j):
                checks.append(compare_operators(
                    f"d{j}d{i}=d{i}d{j - 1}", n, d(n + 1, j).after(d(n, i)), d(n + 1, i).after(d(n, j - 1))
                ))
        # s_j s_i on degree n+2 (lands in degree n)
        for j in range(n + 1):
            for i in range(j + 1):
                checks.append(compare_operators(
                    f"s{j}s{i}=s{i}s{j + 1}", n, s(n + 1, j).after(s(n + 2, i)), s(n + 1, i).after(s(n + 2, j + 1))
                ))
        # s_j d_i on degree n: d_i raises to n+1, s_j (j = 0..n) brings it back
        ident = identity_operator(G, n, order)
        for j in range(n + 1):
            for i in range(n + 2):
                left = s(n + 1, j).after(d(n, i))
                if i < j:
                    right = d(n - 1, i).after(s(n, j - 1))
                elif i in (j, j + 1):
                    right = ident
                else:
                    right = d(n - 1, i - 1).after(s(n, j))
                checks.append(compare_operators(f"s{j}d{i}", n, left, right))
    logger.info(summary_line(f"cosimplicial identities for {G.label}", checks))
    return checks


def _sparse_product(outer: List[SparseRow], inner: List[SparseRow]) -> List[SparseRow]:
    out = []
    for row in outer:
        acc: Dict[int, CycloScalar] = {}
        for k, a in row.items():
            for j, b in inner[k].items():
                v = a * b
                acc[j] = acc[j] + v if j in acc else v
        out.append({j: v for j, v in acc.items() if not v.is_zero()})
    return out


def verify_b_squared(G: GroupTable, sigma: Character, n_max: int) -> List[Check]:
    """b o b = 0 from degree n to n+2, for n = 0..n_max, as a product of sparse matrices."""
    checks = []
    for n in range(n_max + 1):
        check_capacity(G, n + 1)
        product = _sparse_product(coboundary_rows(G, sigma, n + 1), coboundary_rows(G, sigma, n))
        bad = next((r for r, row in enumerate(product) if row), None)
        witness = None if bad is None else tuples(G.order, n + 2)[bad]
        checks.append(Check("b_squared_zero", bad is None, degree=n, counterexample=_names(G, witness)))
    logger.info(summary_line(f"b^2 = 0 for {G.label}", checks))
    return checks
