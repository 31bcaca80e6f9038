# algebra/group.py
"""Finite groups as multiplication tables, their degree-one characters and centers."""
from __future__ import annotations

import itertools
import logging
import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.errors import CapacityError, ParseError
from algebra.scalar import CycloField, CycloScalar
from config.settings import ASSOCIATIVITY_CHECK_CAP, GROUP_ORDER_CAP
from data.catalog import GROUP_CATALOG

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its multiplication table.

    ``mul[x][y]`` is the index of the product x*y; ``inv[x]`` the index of x^-1 and
    ``identity`` the index of the neutral element e. ``generators`` are the canonical
    generators used by character descriptors.
    """

    names: Tuple[str, ...]
    mul: Tuple[Tuple[int, ...], ...]
    inv: Tuple[int, ...]
    identity: int
    generators: Tuple[int, ...] = ()
    label: str = ""
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if not self.generators:
            object.__setattr__(self, "generators", tuple(_greedy_generators(self.mul, self.identity)))
        if self.validate:
            problems = table_problems(self)
            if problems:
                raise ParseError(f"invalid group table {self.label or ''}: {problems[0]}")

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(self.order)

    def __len__(self) -> int:
        return self.order

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ParseError(f"{name!r} is not an element of {self.label or 'the group'}") from None

    def product(self, *xs: int) -> int:
        acc = self.identity
        for x in xs:
            acc = self.mul[acc][x]
        return acc

    def element_order(self, x: int) -> int:
        k, acc = 1, x
        while acc != self.identity:
            acc = self.mul[acc][x]
            k += 1
            if k > self.order:
                raise ValueError(f"element {self.names[x]} has no finite order in this table")
        return k

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(self.element_order(x) for x in self.elements))

    @cached_property
    def cyclo_field(self) -> CycloField:
        return CycloField(self.exponent)

    def is_abelian(self) -> bool:
        return all(
            self.mul[x][y] == self.mul[y][x] for x in self.elements for y in self.elements
        )


def table_problems(G: GroupTable) -> List[str]:
    """List the group axioms the table violates (empty for a genuine group)."""
    n = G.order
    problems = []
    if len(G.mul) != n or any(len(row) != n for row in G.mul) or len(G.inv) != n:
        return [f"table shape does not match {n} elements"]
    e = G.identity
    if any(G.mul[e][x] != x or G.mul[x][e] != x for x in range(n)):
        problems.append("identity law fails")
    if any(G.mul[x][G.inv[x]] != e or G.mul[G.inv[x]][x] != e for x in range(n)):
        problems.append("inverse law fails")
    if any(len(set(row)) != n for row in G.mul):
        problems.append("rows are not permutations")
    if n <= ASSOCIATIVITY_CHECK_CAP:
        for x, y, z in itertools.product(range(n), repeat=3):
            if G.mul[G.mul[x][y]][z] != G.mul[x][G.mul[y][z]]:
                problems.append(
                    f"associativity fails at ({G.names[x]}, {G.names[y]}, {G.names[z]})"
                )
                break
    return problems


def _closure(mul, identity: int, gens: Sequence[int]) -> List[int]:
    seen = [identity]
    seen_set = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = mul[x][s]
            if y not in seen_set:
                seen_set.add(y)
                seen.append(y)
                queue.append(y)
    return seen


def _greedy_generators(mul, identity: int) -> List[int]:
    gens: List[int] = []
    reached = {identity}
    for x in range(len(mul)):
        if x not in reached:
            gens.append(x)
            reached = set(_closure(mul, identity, gens))
    return gens


def _inverses(mul, identity: int) -> Tuple[int, ...]:
    n = len(mul)
    inv = []
    for x in range(n):
        y = next((y for y in range(n) if mul[x][y] == identity), None)
        inv.append(identity if y is None else y)
    return tuple(inv)


# -------------------
# Constructors
# -------------------
def cyclic_group(n: int) -> GroupTable:
    mul = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    inv = tuple((-x) % n for x in range(n))
    return GroupTable(
        names=tuple(str(x) for x in range(n)),
        mul=mul,
        inv=inv,
        identity=0,
        generators=(1 % n,) if n > 1 else (0,),
        label=f"Z{n}",
    )


def _word_name(word: Sequence[str]) -> str:
    if not word:
        return "e"
    parts = []
    for letter, run in itertools.groupby(word):
        k = len(list(run))
        parts.append(letter if k == 1 else f"{letter}^{k}")
    return "*".join(parts)


def permutation_group(label: str, generators: Dict[str, Tuple[int, ...]]) -> GroupTable:
    """Close permutation generators under composition; elements are named by shortest words."""
    degree = len(next(iter(generators.values())))
    identity = tuple(range(degree))
    letters = list(generators)
    perms = [generators[c] for c in letters]
    words = {identity: ()}
    order = [identity]
    queue = deque([identity])
    while queue:
        p = queue.popleft()
        for letter, g in zip(letters, perms):
            # (p * g)(x) = p(g(x))
            q = tuple(p[g[x]] for x in range(degree))
            if q not in words:
                words[q] = words[p] + (letter,)
                order.append(q)
                queue.append(q)
    index = {p: i for i, p in enumerate(order)}
    mul = tuple(
        tuple(index[tuple(p[q[x]] for x in range(degree))] for q in order) for p in order
    )
    return GroupTable(
        names=tuple(_word_name(words[p]) for p in order),
        mul=mul,
        inv=_inverses(mul, 0),
        identity=0,
        generators=tuple(index[g] for g in perms),
        label=label,
    )


def _strip(name: str) -> str:
    return name[1:-1] if name.startswith("(") and name.endswith(")") else name


def direct_product(A: GroupTable, B: GroupTable) -> GroupTable:
    m = B.order

    def idx(a, b):
        return a * m + b

    pairs = [(a, b) for a in A.elements for b in B.elements]
    mul = tuple(
        tuple(idx(A.mul[a1][a2], B.mul[b1][b2]) for (a2, b2) in pairs) for (a1, b1) in pairs
    )
    return GroupTable(
        names=tuple(f"({_strip(A.names[a])},{B.names[b]})" for a, b in pairs),
        mul=mul,
        inv=tuple(idx(A.inv[a], B.inv[b]) for a, b in pairs),
        identity=idx(A.identity, B.identity),
        generators=tuple(idx(g, B.identity) for g in A.generators)
        + tuple(idx(A.identity, h) for h in B.generators),
        label=f"{A.label}x{B.label}",
    )


_CYCLIC = re.compile(r"^Z([1-9][0-9]*)$")


def _factor_order(token: str) -> int:
    match = _CYCLIC.match(token)
    if match:
        return int(match.group(1))
    if token in GROUP_CATALOG:
        return len(permutation_group(token, GROUP_CATALOG[token]["generators"]))
    raise ParseError(f"unknown group descriptor {token!r} (expected Z<n>, S3, D4, Q8)")


def _factor(token: str) -> GroupTable:
    match = _CYCLIC.match(token)
    if match:
        return cyclic_group(int(match.group(1)))
    return permutation_group(token, GROUP_CATALOG[token]["generators"])


def build_group(spec: str, cap: Optional[int] = None) -> GroupTable:
    """Build a validated group from a descriptor such as ``Z3``, ``Z2xZ4``, ``S3``, ``D4``, ``Q8``.

    Args:
        spec (str): Descriptor; ``x`` forms direct products, left-associatively.
        cap (int): Largest accepted order (defaults to MHC_GROUP_ORDER_CAP).

    Returns:
        GroupTable: The group.
    """
    cap = GROUP_ORDER_CAP if cap is None else cap
    tokens = spec.strip().split("x")
    if not spec.strip() or any(not t for t in tokens):
        raise ParseError(f"malformed group descriptor {spec!r}")
    order = math.prod(_factor_order(t) for t in tokens)
    if order > cap:
        raise CapacityError(f"group {spec} has order {order}, above the cap of {cap}")
    group = _factor(tokens[0])
    for token in tokens[1:]:
        group = direct_product(group, _factor(token))
    logger.info("Built group %s of order %d", spec, group.order)
    return group


def group_from_table(payload: dict, label: str = "table", validate: bool = True) -> GroupTable:
    """Build a group from a {"order", "mul", "names"} payload (see data/table_loader.py)."""
    mul = tuple(tuple(row) for row in payload["mul"])
    n = len(mul)
    if n > GROUP_ORDER_CAP and validate:
        raise CapacityError(f"group table has order {n}, above the cap of {GROUP_ORDER_CAP}")
    identity = next(
        (e for e in range(n) if all(mul[e][x] == x and mul[x][e] == x for x in range(n))), None
    )
    if identity is None:
        if validate:
            raise ParseError("group table has no neutral element")
        identity = 0
    names = tuple(payload.get("names") or (str(i) for i in range(n)))
    return GroupTable(
        names=names,
        mul=mul,
        inv=_inverses(mul, identity),
        identity=identity,
        label=label,
        validate=validate,
    )


# -------------------
# Subgroups
# -------------------
def center(G: GroupTable) -> List[int]:
    return [
        g for g in G.elements if all(G.mul[g][h] == G.mul[h][g] for h in G.elements)
    ]


def derived_subgroup(G: GroupTable) -> List[int]:
    commutators = {
        G.product(x, y, G.inv[x], G.inv[y]) for x in G.elements for y in G.elements
    }
    return sorted(_closure(G.mul, G.identity, sorted(commutators)))


def abelianization_order(G: GroupTable) -> int:
    return G.order // len(derived_subgroup(G))


# -------------------
# Characters
# -------------------
@dataclass(frozen=True)
class Character:
    """A multiplicative map G -> Q(zeta_N)*, N the exponent of G.

    Stored by exponents: the value at element x is zeta_N ** exponents[x].
    """

    group: GroupTable
    exponents: Tuple[int, ...]

    @cached_property
    def values(self) -> Tuple[CycloScalar, ...]:
        field_ = self.group.cyclo_field
        return tuple(field_.zeta(k) for k in self.exponents)

    def __call__(self, x: int) -> CycloScalar:
        return self.values[x]

    @property
    def order(self) -> int:
        return self.group.exponent

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def inverse(self) -> "Character":
        n = self.order
        return Character(self.group, tuple((-k) % n for k in self.exponents))

    def generator_exponents(self) -> List[int]:
        return [self.exponents[s] for s in self.group.generators]

    def __repr__(self) -> str:
        return f"Character({self.group.label}: {self.generator_exponents()})"


def _extend(G: GroupTable, images: Sequence[int]) -> Optional[Tuple[int, ...]]:
    # propagate generator images along the Cayley graph; None if inconsistent
    n = G.exponent
    exps: List[Optional[int]] = [None] * G.order
    exps[G.identity] = 0
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for s, k in zip(G.generators, images):
            y = G.mul[x][s]
            value = (exps[x] + k) % n
            if exps[y] is None:
                exps[y] = value
                queue.append(y)
            elif exps[y] != value:
                return None
    if any(v is None for v in exps):
        return None
    return tuple(exps)


def character_from_exponents(G: GroupTable, exponents: Sequence[int]) -> Character:
    """Realize the descriptor "one exponent per canonical generator" as a Character."""
    if len(exponents) != len(G.generators):
        raise ParseError(
            f"{G.label or 'group'} has {len(G.generators)} canonical generators, "
            f"got {len(exponents)} exponents"
        )
    exps = _extend(G, [k % G.exponent for k in exponents])
    if exps is None:
        raise ParseError(f"exponents {list(exponents)} do not define a character of {G.label}")
    return Character(G, exps)


def trivial_character(G: GroupTable) -> Character:
    return Character(G, (0,) * G.order)


def enumerate_characters(G: GroupTable) -> List[Character]:
    """All characters of G, in lexicographic order of their generator exponents.

    A generator s can only go to zeta^k with k * ord(s) = 0 mod N, and an assignment is
    kept when it propagates consistently over the Cayley graph; this is where the
    abelianization shows up, since commutators are forced to 1.
    """
    n = G.exponent
    choices = []
    for s in G.generators:
        step = n // math.gcd(n, G.element_order(s))
        choices.append(range(0, n, step))
    found = []
    for images in itertools.product(*choices):
        exps = _extend(G, images)
        if exps is not None:
            found.append(Character(G, exps))
    logger.info("Found %d characters of %s", len(found), G.label)
    return found


def is_character(G: GroupTable, values: Sequence[CycloScalar]) -> bool:
    """True iff f(e) = 1 and f(gh) = f(g) f(h) for every pair of elements."""
    if len(values) != G.order or values[G.identity] != 1:
        return False
    return all(
        values[G.mul[g][h]] == values[g] * values[h] for g in G.elements for h in G.elements
    )
