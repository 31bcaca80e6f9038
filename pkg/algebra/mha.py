# algebra/mha.py
"""The multiplier Hopf algebra C(G) of functions on a finite group.

Basis: e_g, the indicator of g. The product is pointwise, the counit is evaluation
at the neutral element and the antipode is S(e_g) = e_{g^-1}. The coproduct enters
only through the two Galois maps

    W_R(e_p, e_h) = e_{ph^-1} (x) e_h,        W_L(e_p, e_h) = e_p (x) e_{p^-1 h}.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from algebra.errors import GroupMismatchError
from algebra.group import Character, GroupTable
from algebra.report import Check, summary_line
from algebra.scalar import CycloScalar, Rational

logger = logging.getLogger(__name__)


def _same_group(*groups: GroupTable) -> GroupTable:
    first = groups[0]
    for other in groups[1:]:
        if other is not first and other != first:
            raise GroupMismatchError(
                f"elements live over different groups ({first.label or '?'} and {other.label or '?'})"
            )
    return first


# -------------------
# Elements
# -------------------
@dataclass(frozen=True)
class AlgebraElement:
    """A function on G; ``coeffs[g]`` is its value at g, i.e. the coefficient of e_g."""

    group: GroupTable
    coeffs: Tuple[CycloScalar, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError(f"expected {self.group.order} coefficients, got {len(self.coeffs)}")

    @classmethod
    def basis(cls, G: GroupTable, g: int, order: Optional[int] = None) -> "AlgebraElement":
        order = order or G.exponent
        zero, one = CycloScalar(order), CycloScalar.rational(order, 1)
        return cls(G, tuple(one if x == g else zero for x in G.elements))

    @classmethod
    def from_values(cls, G: GroupTable, values: Sequence[Union[CycloScalar, Rational]],
                    order: Optional[int] = None) -> "AlgebraElement":
        order = order or G.exponent
        return cls(G, tuple(
            v if isinstance(v, CycloScalar) else CycloScalar.rational(order, v) for v in values
        ))

    @property
    def order(self) -> int:
        return self.coeffs[0].order if self.coeffs else 1

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        G = _same_group(self.group, other.group)
        return AlgebraElement(G, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            G = _same_group(self.group, other.group)
            return AlgebraElement(G, tuple(a * b for a, b in zip(self.coeffs, other.coeffs)))
        return AlgebraElement(self.group, tuple(a * other for a in self.coeffs))

    __rmul__ = __mul__

    def counit(self) -> CycloScalar:
        return self.coeffs[self.group.identity]

    def antipode(self) -> "AlgebraElement":
        G = self.group
        return AlgebraElement(G, tuple(self.coeffs[G.inv[x]] for x in G.elements))

    def support(self) -> List[int]:
        return [g for g, c in enumerate(self.coeffs) if not c.is_zero()]


@dataclass(frozen=True)
class TensorElement:
    """An element of C(G)^{(x) n}, kept sparse: ``entries`` maps index tuples to nonzero scalars."""

    group: GroupTable
    degree: int
    entries: Dict[Tuple[int, ...], CycloScalar] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {k: v for k, v in self.entries.items() if not v.is_zero()}
        object.__setattr__(self, "entries", cleaned)

    def __getitem__(self, index: Tuple[int, ...]) -> Optional[CycloScalar]:
        return self.entries.get(tuple(index))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.degree == other.degree and self.entries == other.entries

    def apply_diagonal(self, factors: Sequence[Sequence[CycloScalar]]) -> "TensorElement":
        """Multiply slot i pointwise by the function ``factors[i]`` (the action of u (x) ... (x) u)."""
        out = {}
        for idx, v in self.entries.items():
            for slot, g in enumerate(idx):
                v = v * factors[slot][g]
            out[idx] = v
        return TensorElement(self.group, self.degree, out)

    def support(self) -> List[Tuple[int, ...]]:
        return sorted(self.entries)


# -------------------
# Galois maps
# -------------------
def w_r(a: AlgebraElement, b: AlgebraElement) -> TensorElement:
    """W_R(a, b) = Delta(a)(1 (x) b); coefficient at (x, h) is a(xh) b(h)."""
    G = _same_group(a.group, b.group)
    out: Dict[Tuple[int, ...], CycloScalar] = {}
    for p in a.support():
        for h in b.support():
            out[(G.mul[p][G.inv[h]], h)] = a.coeffs[p] * b.coeffs[h]
    return TensorElement(G, 2, out)


def w_l(a: AlgebraElement, b: AlgebraElement) -> TensorElement:
    """W_L(a, b) = (a (x) 1)Delta(b); coefficient at (p, y) is a(p) b(py)."""
    G = _same_group(a.group, b.group)
    out: Dict[Tuple[int, ...], CycloScalar] = {}
    for p in a.support():
        for h in b.support():
            out[(p, G.mul[G.inv[p]][h])] = a.coeffs[p] * b.coeffs[h]
    return TensorElement(G, 2, out)


def w_r_inverse(t: TensorElement) -> TensorElement:
    G = t.group
    return TensorElement(G, 2, {(G.mul[x][h], h): v for (x, h), v in t.entries.items()})


def w_l_inverse(t: TensorElement) -> TensorElement:
    G = t.group
    return TensorElement(G, 2, {(p, G.mul[p][y]): v for (p, y), v in t.entries.items()})


# -------------------
# Axioms
# -------------------
def _check(name: str, ok: bool, detail: str = "") -> Check:
    if not ok:
        logger.info("Axiom check %s failed %s", name, detail)
    return Check(name, ok, note=None if ok else detail or None)


def _bijective(G: GroupTable, image) -> Tuple[bool, str]:
    seen = {}
    for pair in itertools.product(G.elements, repeat=2):
        target = image(*pair)
        if target in seen:
            return False, f"{pair} and {seen[target]} share the image {target}"
        seen[target] = pair
    return True, ""


def verify_mha_axioms(G: GroupTable) -> List[Check]:
    """Check the multiplier Hopf algebra axioms of C(G) on the full basis.

    Every check is done on basis indices: W_R and W_L send a pair of basis elements
    to a single basis tensor with coefficient 1, so equality of maps is equality of
    index tables.

    Returns:
        list[Check]: One entry per named axiom, in a fixed order.
    """
    e, mul, inv = G.identity, G.mul, G.inv
    E = G.elements
    checks = []

    ok, detail = _bijective(G, lambda p, h: (mul[p][inv[h]], h))
    if ok:
        # the explicit inverse (x, h) -> (xh, h) must undo W_R
        bad = next(((p, h) for p in E for h in E if mul[mul[p][inv[h]]][h] != p), None)
        ok, detail = bad is None, f"W_R inverse fails at {bad}"
    checks.append(_check("w_r_bijective", ok, detail))

    ok, detail = _bijective(G, lambda p, h: (p, mul[inv[p]][h]))
    if ok:
        bad = next(((p, h) for p in E for h in E if mul[p][mul[inv[p]][h]] != h), None)
        ok, detail = bad is None, f"W_L inverse fails at {bad}"
    checks.append(_check("w_l_bijective", ok, detail))

    # W_R(e_p e_q, e_h) against W_R'(e_p, W_R(e_q, e_h)) = W_R(e_p, e_h)(e_{qh^-1} (x) 1)
    bad = next(
        ((p, q, h) for p in E for q in E for h in E
         if (p == q) != (mul[p][inv[h]] == mul[q][inv[h]])),
        None,
    )
    checks.append(_check("homomorphism_identity", bad is None, f"at {bad}"))

    # (eps (x) id)W_R(e_p, e_h) = [ph^-1 = e] e_h  must equal  e_p e_h
    bad = next(((p, h) for p in E for h in E if (mul[p][inv[h]] == e) != (p == h)), None)
    checks.append(_check("counit_w_r", bad is None, f"at {bad}"))
    bad = next(((p, h) for p in E for h in E if (mul[inv[p]][h] == e) != (p == h)), None)
    checks.append(_check("counit_w_l", bad is None, f"at {bad}"))

    # m(S (x) id)W_R(e_p, e_h) = e_{hp^-1} e_h  must equal  eps(e_p) e_h
    bad = next(((p, h) for p in E for h in E if (inv[mul[p][inv[h]]] == h) != (p == e)), None)
    checks.append(_check("antipode_w_r", bad is None, f"at {bad}"))
    # m(id (x) S)W_L(e_p, e_h) = e_p e_{h^-1 p}  must equal  eps(e_h) e_p
    bad = next(((p, h) for p in E for h in E if (inv[mul[inv[p]][h]] == p) != (h == e)), None)
    checks.append(_check("antipode_w_l", bad is None, f"at {bad}"))

    checks.append(_check("antipode_bijective", sorted(inv) == list(E), "S is not a permutation"))
    bad = next((x for x in E if inv[inv[x]] != x), None)
    checks.append(_check("antipode_involutive", bad is None, f"S^2 moves {bad}"))

    # (Delta (x) id)Delta(e_g) and (id (x) Delta)Delta(e_g) as tables over G^3
    left = {t: mul[mul[t[0]][t[1]]][t[2]] for t in itertools.product(E, repeat=3)}
    right = {t: mul[t[0]][mul[t[1]][t[2]]] for t in itertools.product(E, repeat=3)}
    bad = next((t for t in left if left[t] != right[t]), None)
    checks.append(_check("coassociativity", bad is None, f"at {bad}"))

    logger.info(summary_line(f"MHA axioms for {G.label or 'table'}", checks))
    return checks


# -------------------
# Group-like multipliers
# -------------------
@dataclass(frozen=True)
class GrouplikeMultiplier:
    """The diagonal multiplier u(e_g) = f(g) e_g together with its comodule certificates."""

    group: GroupTable
    values: Tuple[CycloScalar, ...]
    rr: bool
    rl: bool
    coproduct: bool

    @property
    def certificate(self) -> bool:
        return self.rr and self.rl and self.coproduct

    def apply(self, a: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(a.group, tuple(v * c for v, c in zip(self.values, a.coeffs)))

    def to_json(self) -> dict:
        return {
            "values": [v.to_json() for v in self.values],
            "rr": self.rr,
            "rl": self.rl,
            "coproduct": self.coproduct,
            "certificate": self.certificate,
        }


def grouplike_from_character(
    f: Union[Character, Sequence[Union[CycloScalar, Rational]]],
    group: Optional[GroupTable] = None,
) -> GrouplikeMultiplier:
    """Build u(e_g) = f(g) e_g and certify it as a one-dimensional comodule.

    Args:
        f: A Character, or a bare value vector (then ``group`` is required) so that
            non-multiplicative candidates can be tested too.
        group (GroupTable): The group when ``f`` is a value vector.

    Returns:
        GrouplikeMultiplier: ``rr`` is W_R(u a, b) = (u (x) u) W_R(a, b), ``rl`` is
        W_L(a, u b) = (u (x) u) W_L(a, b) and ``coproduct`` is
        Delta(u)(e_a (x) e_b) = f(a) f(b) e_a (x) e_b on the full basis with
        eps(u) = f(e) = 1, which rules out u = 0.
    """
    if isinstance(f, Character):
        G, values = f.group, f.values
    else:
        G = group
        order = next((v.order for v in f if isinstance(v, CycloScalar)), G.exponent)
        values = tuple(v if isinstance(v, CycloScalar) else CycloScalar.rational(order, v) for v in f)
    order = values[0].order
    u = values
    basis = [AlgebraElement.basis(G, g, order) for g in G.elements]
    uu = (u, u)

    def u_of(a: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(G, tuple(v * c for v, c in zip(u, a.coeffs)))

    rr = all(
        w_r(u_of(basis[p]), basis[h]) == w_r(basis[p], basis[h]).apply_diagonal(uu)
        for p in G.elements for h in G.elements
    )
    rl = all(
        w_l(basis[p], u_of(basis[h])) == w_l(basis[p], basis[h]).apply_diagonal(uu)
        for p in G.elements for h in G.elements
    )
    coproduct = u[G.identity] == 1 and all(
        u[G.mul[a][b]] == u[a] * u[b] for a in G.elements for b in G.elements
    )
    logger.info("Group-like certificate for %s: rr=%s rl=%s coproduct=%s", G.label, rr, rl, coproduct)
    return GrouplikeMultiplier(G, tuple(values), rr, rl, coproduct)
