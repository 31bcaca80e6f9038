# algebra/zline.py
"""G = Z on finite windows [-W, W].

sigma(n) = lambda^n for an exact nonzero base lambda (a rational, or an element of
Q(zeta_N)). Functions on Z are kept in structured form (finite support, constants,
geometric terms, steps) so they can be evaluated anywhere the window asks for.
"""
from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from algebra.errors import ParseError, WindowError
from algebra.scalar import CycloScalar, SparseRow, parse_rational, sparse_rank
from config.settings import ZLINE_WINDOW

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, CycloScalar]

KINDS = ("finite_support", "constant", "sigma_power", "step", "table")


def as_scalar(value: Scalar, order: int) -> CycloScalar:
    if isinstance(value, CycloScalar):
        if value.order != order:
            raise ParseError(f"scalar of order {value.order} used where order {order} is expected")
        return value
    return CycloScalar.rational(order, value)


def window(W: int) -> range:
    return range(-W, W + 1)


# -------------------
# Functions on Z and Z^2
# -------------------
@dataclass(frozen=True)
class ZFunction:
    """A function Z -> Q(zeta_N) of one of the kinds in ``KINDS``.

    finite_support: ``support`` maps points to values, zero elsewhere.
    constant:       ``value`` everywhere.
    sigma_power:    offset + scale * base^n.
    step:           1 for n >= threshold, else 0.
    table:          explicit values, defined only on the window.
    """

    kind: str
    order: int = 1
    window: int = ZLINE_WINDOW
    support: Dict[int, CycloScalar] = field(default_factory=dict)
    value: Optional[CycloScalar] = None
    base: Optional[CycloScalar] = None
    scale: Optional[CycloScalar] = None
    offset: Optional[CycloScalar] = None
    threshold: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParseError(f"unknown function kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.kind == "sigma_power" and (self.base is None or self.base.is_zero()):
            raise ParseError("a geometric function needs a nonzero base")

    @classmethod
    def finite(cls, values: Dict[int, Scalar], order: int = 1, W: int = ZLINE_WINDOW) -> "ZFunction":
        support = {int(n): as_scalar(v, order) for n, v in values.items()}
        return cls("finite_support", order, W, support={n: v for n, v in support.items() if not v.is_zero()})

    @classmethod
    def constant(cls, value: Scalar, order: int = 1, W: int = ZLINE_WINDOW) -> "ZFunction":
        return cls("constant", order, W, value=as_scalar(value, order))

    @classmethod
    def geometric(cls, base: CycloScalar, scale: Scalar = 1, offset: Scalar = 0,
                  W: int = ZLINE_WINDOW) -> "ZFunction":
        order = base.order
        return cls("sigma_power", order, W, base=base,
                   scale=as_scalar(scale, order), offset=as_scalar(offset, order))

    @classmethod
    def step(cls, threshold: int = 0, order: int = 1, W: int = ZLINE_WINDOW) -> "ZFunction":
        return cls("step", order, W, threshold=threshold)

    @classmethod
    def table(cls, values: Dict[int, Scalar], order: int = 1, W: int = ZLINE_WINDOW) -> "ZFunction":
        missing = [n for n in window(W) if n not in values]
        if missing:
            raise ParseError(f"table function misses window points {missing[:5]}")
        return cls("table", order, W, support={int(n): as_scalar(v, order) for n, v in values.items()})

    def __call__(self, n: int) -> CycloScalar:
        if self.kind == "finite_support":
            return self.support.get(n, CycloScalar(self.order))
        if self.kind == "constant":
            return self.value
        if self.kind == "sigma_power":
            return self.offset + self.scale * self.base ** n
        if self.kind == "step":
            return CycloScalar.rational(self.order, 1 if n >= self.threshold else 0)
        if n not in self.support:
            raise WindowError(f"table function is not defined at {n}")
        return self.support[n]

    def on_window(self, W: Optional[int] = None) -> Dict[int, CycloScalar]:
        return {n: self(n) for n in window(self.window if W is None else W)}


@dataclass(frozen=True)
class ZTwoFunction:
    """A function on Z^2.

    anti_diagonal: F(m, n) = q(n) if m = -n else 0, for a ZFunction q.
    separable:     F(m, n) = first(m) * second(n).
    table:         explicit values on the square window.
    """

    kind: str
    q: Optional[ZFunction] = None
    first: Optional[ZFunction] = None
    second: Optional[ZFunction] = None
    values: Dict[Tuple[int, int], CycloScalar] = field(default_factory=dict)
    order: int = 1

    @classmethod
    def anti_diagonal(cls, q: ZFunction) -> "ZTwoFunction":
        return cls("anti_diagonal", q=q, order=q.order)

    @classmethod
    def separable(cls, first: ZFunction, second: ZFunction) -> "ZTwoFunction":
        return cls("separable", first=first, second=second, order=first.order)

    def __call__(self, m: int, n: int) -> CycloScalar:
        if self.kind == "anti_diagonal":
            return self.q(n) if m == -n else CycloScalar(self.order)
        if self.kind == "separable":
            return self.first(m) * self.second(n)
        if (m, n) not in self.values:
            raise WindowError(f"table function is not defined at {(m, n)}")
        return self.values[(m, n)]


def tau2_value(F: ZTwoFunction, lam: CycloScalar, m: int, n: int) -> CycloScalar:
    """(tau_2 F)(m, n) = F(-m-n, m) lambda^n."""
    return F(-m - n, m) * lam ** n


def tau2_table(F: ZTwoFunction, lam: CycloScalar, W: int) -> Dict[Tuple[int, int], CycloScalar]:
    return {(m, n): tau2_value(F, lam, m, n) for m in window(W) for n in window(W)}


# -------------------
# HH^1 of C_0(Z)
# -------------------
def _check_lambda(lam: CycloScalar) -> None:
    if lam.is_zero():
        raise ValueError("lambda must be nonzero")


def solve_hh1_recurrence(lam: CycloScalar, c: Scalar, W: int) -> Dict[int, CycloScalar]:
    """The 1-cocycle with F(1) = c on [-W, W].

    Grown from F(n+1) = c + lambda F(n) in both directions and checked against the
    closed form beta(lambda^n - 1), beta = c / (lambda - 1), or c n when lambda = 1.
    """
    _check_lambda(lam)
    if W < 1:
        raise WindowError(f"window must be at least 1, got {W}")
    c = as_scalar(c, lam.order)
    F = {0: CycloScalar(lam.order), 1: c}
    for n in range(1, W):
        F[n + 1] = c + F[n] * lam
    for n in range(0, -W, -1):
        F[n - 1] = (F[n] - c) / lam
    if lam == 1:
        closed = {n: c * n for n in window(W)}
    else:
        beta = c / (lam - 1)
        closed = {n: beta * (lam ** n - 1) for n in window(W)}
    bad = [n for n in window(W) if F[n] != closed[n]]
    assert not bad, f"recurrence and closed form disagree at {bad[:3]}"
    return {n: F[n] for n in window(W)}


def _cocycle_rows(lam: CycloScalar, W: int) -> List[Tuple[Tuple[int, int], SparseRow]]:
    # one row per (n, m) with n, m, n+m in the window: F(n+m) - F(m) - lambda^m F(n)
    rows = []
    for n in window(W):
        for m in window(W):
            if abs(n + m) > W:
                continue
            row: SparseRow = {}
            for col, v in ((n + m + W, CycloScalar.rational(lam.order, 1)),
                           (m + W, CycloScalar.rational(lam.order, -1)),
                           (n + W, -(lam ** m))):
                row[col] = row[col] + v if col in row else v
            rows.append(((n, m), {k: v for k, v in row.items() if not v.is_zero()}))
    return rows


def cocycle_space_dim(lam: CycloScalar, W: int) -> int:
    """Dimension of {F on [-W, W] : F(n+m) = F(m) + F(n) lambda^m whenever n, m, n+m lie in the window}.

    The rows with m = 1 (and n = 0) already cut the space down to the line spanned by
    the recurrence solution; the remaining rows are then checked against that solution,
    which decides whether they shrink the space further.
    """
    _check_lambda(lam)
    rows = _cocycle_rows(lam, W)
    leading = [row for (n, m), row in rows if m == 1]
    kernel = (2 * W + 1) - sparse_rank(leading)
    if kernel == 0:
        return 0
    solution = solve_hh1_recurrence(lam, 1, W)
    for (n, m), row in rows:
        if m == 1:
            continue
        total = CycloScalar(lam.order)
        for col, v in row.items():
            total = total + v * solution[col - W]
        if not total.is_zero():
            logger.info("Window cocycle condition fails at (n, m) = (%d, %d)", n, m)
            return kernel - 1
    return kernel


def _check_window(W: int) -> None:
    if W < 2:
        raise WindowError(f"window must be at least 2, got {W}")


def hh1_z_dim(lam: CycloScalar, W: int = ZLINE_WINDOW) -> int:
    """dim HH^1_sigma(C_0(Z)) on the window: cocycles minus coboundaries c(1 - lambda^n)."""
    _check_window(W)
    coboundaries = 0 if lam == 1 else 1
    return cocycle_space_dim(lam, W) - coboundaries


def _fits_span_one_sigma(values: Dict[int, CycloScalar], lam: CycloScalar) -> bool:
    points = sorted(values)
    a, b = _fit_two_points(values, lam, points[-1], points[-2])
    return all(values[n] == a + b * lam ** n for n in points)


def hh1_z_report(lam: CycloScalar, W: int = ZLINE_WINDOW) -> dict:
    """hh1_z_dim with its ingredients, plus the dimension of the restricted complex.

    In the restricted complex a 1-cochain has to be a combination of finite support,
    1 and sigma; on the window that is read as lying in span{1, lambda^n}.
    """
    _check_window(W)
    cocycles = cocycle_space_dim(lam, W)
    coboundaries = 0 if lam == 1 else 1
    solution = solve_hh1_recurrence(lam, 1, W)
    restricted_cocycles = 1 if cocycles and _fits_span_one_sigma(solution, lam) else 0
    beta = None if lam == 1 else (CycloScalar.rational(lam.order, 1) / (lam - 1))
    report = {
        "window": W,
        "lambda": lam.to_json(),
        "cocycle_dim": cocycles,
        "coboundary_dim": coboundaries,
        "dim": cocycles - coboundaries,
        "restricted_dim": restricted_cocycles - coboundaries,
        "beta": None if beta is None else beta.to_json(),
    }
    logger.info("HH^1 of C_0(Z) on [-%d, %d]: %s", W, W, report["dim"])
    return report


# -------------------
# tau_2 and the restricted complex
# -------------------
def _fit_two_points(values: Dict[int, CycloScalar], lam: CycloScalar, n1: int, n2: int) -> Tuple[CycloScalar, CycloScalar]:
    p1, p2 = lam ** n1, lam ** n2
    if p1 == p2:
        return values[n1], CycloScalar(lam.order)
    b = (values[n1] - values[n2]) / (p1 - p2)
    return values[n1] - b * p1, b


def escape_threshold(W: int) -> int:
    return 2 * math.ceil(W / 3)


def tau2_escape_check(q: ZFunction, lam: CycloScalar, W: int = ZLINE_WINDOW) -> Tuple[bool, List[int]]:
    """Does tau_2 push F(m, n) = q(n) delta_{-m,n} out of the restricted complex?

    Reads the slice G(n) = (tau_2 F)(-n, 0) = q(-n) and tries to write it as
    a + b lambda^n plus finite support: (a, b) is fitted on each far-out sample pair
    and the residual support is counted. The slice escapes when every residual has
    more than 2 * ceil(W / 3) nonzero points.

    Returns:
        tuple: (escapes, witness) with witness the smallest residual support found.
    """
    if W < 6:
        raise WindowError(f"the escape check needs a window of at least 6, got {W}")
    _check_lambda(lam)
    F = ZTwoFunction.anti_diagonal(q)
    G = {n: tau2_value(F, lam, -n, 0) for n in window(W)}
    samples = [(W, W - 1), (-W, -W + 1), (W, -W), (W - 1, -(W - 1))]
    best: Optional[List[int]] = None
    for n1, n2 in samples:
        a, b = _fit_two_points(G, lam, n1, n2)
        residual = [n for n in window(W) if not (G[n] - a - b * lam ** n).is_zero()]
        if best is None or len(residual) < len(best):
            best = residual
    escapes = len(best) > escape_threshold(W)
    logger.info("tau_2 escape check on [-%d, %d]: escapes=%s, witness size %d", W, W, escapes, len(best))
    return escapes, best


# -------------------
# Descriptors
# -------------------
def parse_lambda(text: str) -> CycloScalar:
    """``p/q`` for a rational base or ``zeta:N:k`` for zeta_N^k."""
    text = text.strip()
    if text.startswith("zeta:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise ParseError(f"expected zeta:N:k, got {text!r}")
        try:
            order, k = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"expected zeta:N:k with integers, got {text!r}") from None
        if order < 1:
            raise ParseError(f"root-of-unity order must be positive, got {order}")
        return CycloScalar.zeta(order, k)
    value = parse_rational(text)
    if value == 0:
        raise ParseError("lambda must be nonzero")
    return CycloScalar.rational(1, value)


def parse_q(text: str, lam: CycloScalar, W: int = ZLINE_WINDOW) -> ZFunction:
    """``step``, ``finite:{"n": value, ...}`` or ``geom:a,b`` meaning q(n) = a + b lambda^-n."""
    text = text.strip()
    order = lam.order
    if text == "step":
        return ZFunction.step(0, order, W)
    if text.startswith("finite:"):
        try:
            payload = json.loads(text[len("finite:"):])
            values = {int(n): parse_rational(str(v)) for n, v in payload.items()}
        except (ValueError, AttributeError) as e:
            raise ParseError(f"malformed finite-support map in {text!r}: {e}") from e
        return ZFunction.finite(values, order, W)
    if text.startswith("geom:"):
        parts = text[len("geom:"):].split(",")
        if len(parts) != 2:
            raise ParseError(f"expected geom:a,b, got {text!r}")
        a, b = (parse_rational(p) for p in parts)
        return ZFunction.geometric(lam.inverse(), scale=b, offset=a, W=W)
    raise ParseError(f"unknown q descriptor {text!r} (expected step, finite:<json>, geom:a,b)")
