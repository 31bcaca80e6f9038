# algebra/scalar.py
"""Exact arithmetic in cyclotomic fields Q(zeta_N) and exact linear algebra over them.

An element of Q(zeta_N) is stored as its residue modulo the N-th cyclotomic
polynomial, i.e. as a vector of deg(Phi_N) rationals in the power basis
1, zeta, zeta^2, ...  Everything here is exact; there is no floating point
except in ``CycloScalar.to_complex`` which exists for display only.
"""
from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from algebra.errors import OrderMismatchError, ParseError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
Poly = Tuple[Fraction, ...]


# -------------------
# Polynomials over Q
# -------------------
def _trim(p: Sequence[Fraction]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    n = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
    ]
    return _trim(Fraction(x) for x in out)


def _poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> Tuple[Poly, Poly]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, y in enumerate(b):
            rem[shift + i] -= factor * y
        rem = list(_trim(rem))
    return _trim(quot), tuple(rem)


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Poly:
    """Return the coefficients (ascending degree) of the monic polynomial Phi_n.

    Computed by dividing x^n - 1 by the product of Phi_d over the proper divisors d of n.

    Args:
        n (int): Order of the cyclotomic polynomial, n >= 1.

    Returns:
        tuple: Rational coefficients, constant term first (e.g. n=4 gives (1, 0, 1)).
    """
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    numerator = (Fraction(-1),) + (Fraction(0),) * (n - 1) + (Fraction(1),)
    denominator: Poly = (Fraction(1),)
    for d in _divisors(n)[:-1]:
        denominator = _poly_mul(denominator, cyclotomic_polynomial(d))
    quotient, remainder = _poly_divmod(numerator, denominator)
    assert not remainder, f"x^{n} - 1 not divisible by the proper cyclotomic factors"
    return quotient


def degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> Tuple[Poly, ...]:
    # x^k mod Phi_n for k = 0 .. 2*deg - 2, each padded to deg entries
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows = []
    for k in range(max(2 * d - 1, 1)):
        monomial = (Fraction(0),) * k + (Fraction(1),)
        _, rem = _poly_divmod(monomial, phi)
        rows.append(tuple(rem) + (Fraction(0),) * (d - len(rem)))
    return tuple(rows)


def _reduce(n: int, poly: Sequence[Fraction]) -> Poly:
    d = degree(n)
    if len(poly) <= d:
        return tuple(Fraction(c) for c in poly) + (Fraction(0),) * (d - len(poly))
    table = _reduction_table(n)
    if len(poly) > len(table):
        _, rem = _poly_divmod(tuple(Fraction(c) for c in poly), cyclotomic_polynomial(n))
        return tuple(rem) + (Fraction(0),) * (d - len(rem))
    out = [Fraction(c) for c in poly[:d]]
    for k in range(d, len(poly)):
        c = poly[k]
        if c:
            for i, r in enumerate(table[k]):
                if r:
                    out[i] += c * r
    return tuple(out)


def _poly_inverse_mod(a: Sequence[Fraction], modulus: Sequence[Fraction]) -> Poly:
    # extended Euclid: find u with u*a = 1 (mod modulus)
    r0, r1 = _trim(modulus), _trim(a)
    s0: Poly = ()
    s1: Poly = (Fraction(1),)
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible modulo the cyclotomic polynomial")
    inv_c = 1 / r1[0]
    return tuple(c * inv_c for c in s1)


# -------------------
# Traces (for hashing)
# -------------------
def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def _euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _normalized_traces(n: int) -> Tuple[Fraction, ...]:
    # Tr(zeta_n^k) / phi(n) via Ramanujan sums; invariant under field embeddings
    out = []
    for k in range(degree(n)):
        m = n // math.gcd(n, k)
        out.append(Fraction(_mobius(m) * _euler_phi(n), _euler_phi(m) * _euler_phi(n)))
    return tuple(out)


# -------------------
# Field elements
# -------------------
class CycloScalar:
    """An exact element of Q(zeta_N), immutable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Rational] = ()):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", _reduce(order, tuple(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("CycloScalar is immutable")

    # construction helpers
    @classmethod
    def rational(cls, order: int, value: Rational) -> "CycloScalar":
        return cls(order, (Fraction(value),))

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "CycloScalar":
        k %= order
        return cls(order, (0,) * k + (1,))

    # predicates
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_root_of_unity(self) -> bool:
        if self.is_zero():
            return False
        # the roots of unity in Q(zeta_N) have order dividing lcm(N, 2)
        m = self.order if self.order % 2 == 0 else 2 * self.order
        return self ** m == 1

    # arithmetic
    def _coerce(self, other) -> "CycloScalar":
        if isinstance(other, CycloScalar):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cannot combine scalars of orders {self.order} and {other.order}; "
                    "embed them into a common order first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloScalar(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloScalar(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloScalar(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = len(self.coeffs)
        if d == 1:
            return CycloScalar(self.order, (self.coeffs[0] * other.coeffs[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycloScalar(self.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycloScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.order)
        if self.is_rational():
            return CycloScalar(self.order, (1 / self.coeffs[0],))
        inv = _poly_inverse_mod(self.coeffs, cyclotomic_polynomial(self.order))
        return CycloScalar(self.order, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloScalar.rational(self.order, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloScalar):
            return NotImplemented
        if other.order == self.order:
            return self.coeffs == other.coeffs
        m = common_order(self, other)
        return embed(self, m).coeffs == embed(other, m).coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        trace = sum(
            (c * t for c, t in zip(self.coeffs, _normalized_traces(self.order))), Fraction(0)
        )
        return hash(("cyclo", trace))

    # display / serialization
    def to_complex(self) -> complex:
        root = cmath.exp(2j * cmath.pi / self.order)
        return sum((float(c) * root ** k for k, c in enumerate(self.coeffs)), 0j)

    def to_json(self) -> dict:
        return {"N": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, payload: dict) -> "CycloScalar":
        try:
            return cls(int(payload["N"]), [Fraction(c) for c in payload["coeffs"]])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ParseError(f"malformed scalar {payload!r}: {e}") from e

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = "z" if k == 1 else f"z^{k}"
                terms.append(power if c == 1 else f"{c}*{power}")
        return f"CycloScalar(N={self.order}: {' + '.join(terms) or '0'})"


def embed(a: CycloScalar, order: int) -> CycloScalar:
    """Embed ``a`` from Q(zeta_N) into Q(zeta_M) for N | M, sending zeta_N to zeta_M^(M/N)."""
    if order % a.order:
        raise OrderMismatchError(f"cannot embed order {a.order} into order {order}")
    if order == a.order:
        return a
    step = order // a.order
    poly = [Fraction(0)] * (step * (len(a.coeffs) - 1) + 1)
    for k, c in enumerate(a.coeffs):
        poly[k * step] = c
    return CycloScalar(order, poly)


def common_order(*scalars: CycloScalar) -> int:
    return math.lcm(*(s.order for s in scalars)) if scalars else 1


def cyclo_arith(a: CycloScalar, b: CycloScalar, op: str) -> CycloScalar:
    """Apply one of the field operations ``add``, ``sub``, ``mul``, ``div`` to a and b."""
    if a.order != b.order:
        raise OrderMismatchError(
            f"cannot combine scalars of orders {a.order} and {b.order}; use embed() first"
        )
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class CycloField:
    """Factory for the constants of Q(zeta_N)."""

    order: int

    @property
    def zero(self) -> CycloScalar:
        return CycloScalar(self.order)

    @property
    def one(self) -> CycloScalar:
        return CycloScalar.rational(self.order, 1)

    def zeta(self, k: int = 1) -> CycloScalar:
        return CycloScalar.zeta(self.order, k)

    def from_rational(self, value: Rational) -> CycloScalar:
        return CycloScalar.rational(self.order, value)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"not a rational number: {text!r}") from e


# -------------------
# Matrices
# -------------------
@dataclass(frozen=True)
class ScalarMatrix:
    rows: int
    cols: int
    entries: Tuple[CycloScalar, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"matrix of shape {self.rows}x{self.cols} needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[CycloScalar]], cols: int = None) -> "ScalarMatrix":
        cols = len(rows[0]) if rows else (cols or 0)
        return cls(len(rows), cols, tuple(x for row in rows for x in row))

    def __getitem__(self, index: Tuple[int, int]) -> CycloScalar:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[CycloScalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def transpose(self) -> "ScalarMatrix":
        return ScalarMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def sparse_rows(self) -> List[Dict[int, CycloScalar]]:
        return [
            {j: x for j, x in enumerate(self.row(i)) if not x.is_zero()}
            for i in range(self.rows)
        ]


SparseRow = Dict[int, CycloScalar]


def _eliminate(row: SparseRow, pivots: Dict[int, SparseRow]) -> SparseRow:
    row = dict(row)
    while row:
        col = min(row)
        pivot = pivots.get(col)
        if pivot is None:
            return row
        factor = row[col]
        for j, v in pivot.items():
            value = row.get(j)
            value = -(factor * v) if value is None else value - factor * v
            if value.is_zero():
                row.pop(j, None)
            else:
                row[j] = value
    return row


def sparse_rank(rows: Iterable[SparseRow], cols: int = None) -> int:
    """Exact rank of a matrix given as sparse rows ``{column: scalar}``.

    ``cols``, when given, bounds the column indices; a row reaching past it is an error.

    Rows are reduced one at a time against the pivots found so far; the pivot of a
    row is its first nonzero entry in column order, so the computation is deterministic.
    """
    pivots: Dict[int, SparseRow] = {}
    for row in rows:
        if cols is not None and row and max(row) >= cols:
            raise ValueError(f"row has column {max(row)} outside a matrix of {cols} columns")
        reduced = _eliminate({j: v for j, v in row.items() if not v.is_zero()}, pivots)
        if reduced:
            col = min(reduced)
            inv = reduced[col].inverse()
            pivots[col] = {j: v * inv for j, v in reduced.items()}
    return len(pivots)


def rank(m: ScalarMatrix) -> int:
    return sparse_rank(m.sparse_rows())


def nullspace(m: ScalarMatrix, order: int = None) -> List[Tuple[CycloScalar, ...]]:
    """Exact basis of {v : m v = 0}, one vector per free column of the reduced echelon form."""
    if order is None:
        order = m.entries[0].order if m.entries else 1
    field = CycloField(order)
    work = [list(m.row(i)) for i in range(m.rows)]
    pivot_cols: List[int] = []
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if not work[i][c].is_zero()), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv for x in work[r]]
        for i in range(m.rows):
            if i != r and not work[i][c].is_zero():
                factor = work[i][c]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        pivot_cols.append(c)
        r += 1
        if r == m.rows:
            break
    free_cols = [c for c in range(m.cols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        v = [field.zero] * m.cols
        v[f] = field.one
        for i, pc in enumerate(pivot_cols):
            v[pc] = -work[i][f]
        basis.append(tuple(v))
    return basis


def mat_vec(m: ScalarMatrix, v: Sequence[CycloScalar]) -> Tuple[CycloScalar, ...]:
    out = []
    for i in range(m.rows):
        acc = None
        for x, y in zip(m.row(i), v):
            if x.is_zero() or y.is_zero():
                continue
            acc = x * y if acc is None else acc + x * y
        out.append(acc if acc is not None else CycloScalar(v[0].order if v else 1))
    return tuple(out)
