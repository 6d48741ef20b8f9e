"""Finite permutation groups and their subgroup combinatorics.

Elements are stored as tuples of 0-based images. The product ``g*h`` is
function composition (apply ``h`` first), so a left action satisfies
``g.(h.p) == (g*h).p``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GroupTooLarge, NotAPermutation, NotASubgroup

DEFAULT_ORDER_BOUND = 384

Perm = tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """Return p∘q (q applied first)."""
    return tuple(p[i] for i in q)


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation such as ``(1 2 3)(4 5)``.

    Points inside a cycle may be separated by spaces or commas. The empty
    string and ``()`` denote the identity.
    """
    text = text.strip()
    img = list(range(degree))
    seen: set[int] = set()
    if text in ("", "()"):
        return tuple(img)
    pos = 0
    for m in re.finditer(r"\(([^()]*)\)", text):
        if text[pos:m.start()].strip():
            raise NotAPermutation(f"cannot parse cycle notation {text!r}")
        pos = m.end()
        pts = [int(t) for t in re.split(r"[\s,]+", m.group(1).strip()) if t]
        for p in pts:
            if not 1 <= p <= degree:
                raise NotAPermutation(f"point {p} outside 1..{degree}")
            if p in seen:
                raise NotAPermutation(f"point {p} repeated in {text!r}")
            seen.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a - 1] = b - 1
    if text[pos:].strip():
        raise NotAPermutation(f"cannot parse cycle notation {text!r}")
    return tuple(img)


def format_cycles(p: Perm) -> str:
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            cyc.append(str(i + 1))
            i = p[i]
        out.append("(" + " ".join(cyc) + ")")
    return "".join(out) or "()"


def _as_perm(gen, degree: int) -> Perm:
    if isinstance(gen, str):
        return parse_cycles(gen, degree)
    images = [int(x) for x in gen]
    if len(images) != degree:
        raise NotAPermutation(f"expected {degree} images, got {len(images)}")
    if sorted(images) != list(range(1, degree + 1)):
        raise NotAPermutation(f"{images} is not a permutation of 1..{degree}")
    return tuple(x - 1 for x in images)


class FiniteGroup:
    """A finite permutation group with its Cayley table.

    Groups compare by identity. A group built by :meth:`subgroup_group`
    remembers its ``ambient`` group and the ``embedding`` of its element
    indices into it.
    """

    def __init__(self, degree: int, elements: Sequence[Perm], *,
                 ambient: FiniteGroup | None = None,
                 embedding: Sequence[int] | None = None):
        self.degree = degree
        self.elements: tuple[Perm, ...] = tuple(elements)
        self.index = {p: i for i, p in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        ident = tuple(range(degree))
        self.identity_index = self.index[ident]
        n = len(self.elements)
        self.mul_table: tuple[tuple[int, ...], ...] = tuple(
            tuple(self.index[compose(p, q)] for q in self.elements)
            for p in self.elements)
        self.inverse: tuple[int, ...] = tuple(
            self.mul_table[i].index(self.identity_index) for i in range(n))
        self.ambient = ambient
        self.embedding = tuple(embedding) if embedding is not None else None
        self._subgroup_groups: dict[tuple[int, ...], FiniteGroup] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"<FiniteGroup degree={self.degree} order={self.order}>"

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def conj(self, g: int, h: int) -> int:
        """g h g^-1"""
        return self.mul_table[self.mul_table[g][h]][self.inverse[g]]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity_index:
            x = self.mul_table[x][a]
            k += 1
        return k

    # -- subgroups -----------------------------------------------------

    def subgroup(self, members: Iterable[int]) -> Subgroup:
        """Validate ``members`` as a subgroup and wrap it."""
        ms = frozenset(members)
        if self.identity_index not in ms:
            raise NotASubgroup("missing identity")
        for a in ms:
            if not 0 <= a < self.order:
                raise NotASubgroup(f"element index {a} out of range")
            if self.inverse[a] not in ms:
                raise NotASubgroup("not closed under inverses")
            row = self.mul_table[a]
            for b in ms:
                if row[b] not in ms:
                    raise NotASubgroup("not closed under multiplication")
        return Subgroup(tuple(sorted(ms)))

    def check_subgroup(self, H: Subgroup) -> None:
        if not isinstance(H, Subgroup):
            raise NotASubgroup(f"{H!r} is not a Subgroup")
        self.subgroup(H.members)

    def closure(self, gens: Iterable[int], start: Iterable[int] = ()) -> Subgroup:
        """Subgroup generated by ``gens`` together with the subgroup ``start``.

        ``start`` must already be a subgroup; new elements are added a whole
        right coset at a time.
        """
        T = self.mul_table
        base = list(start) or [self.identity_index]
        elems = set(base)
        gens = [g for g in dict.fromkeys(gens)]
        reps = [self.identity_index]
        pos = 0
        while pos < len(reps):
            r = reps[pos]
            for s in gens:
                y = T[r][s]
                if y not in elems:
                    elems.update(T[h][y] for h in base)
                    reps.append(y)
            pos += 1
        return Subgroup(tuple(sorted(elems)))

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup((self.identity_index,))

    def whole(self) -> Subgroup:
        return Subgroup(tuple(range(self.order)))

    def subgroup_group(self, H: Subgroup) -> FiniteGroup:
        """``H`` as a standalone group, element ``i`` being ``H.members[i]``.

        Results are cached so that repeated calls return the same object.
        """
        try:
            return self._subgroup_groups[H.members]
        except KeyError:
            pass
        if H.members == tuple(range(self.order)):
            self._subgroup_groups[H.members] = self
            return self
        self.check_subgroup(H)
        grp = FiniteGroup(self.degree, [self.elements[i] for i in H.members],
                          ambient=self, embedding=H.members)
        self._subgroup_groups[H.members] = grp
        return grp

    def embed(self) -> tuple[FiniteGroup, tuple[int, ...]]:
        """Ambient group and element embedding (identity for a top-level group)."""
        if self.ambient is None:
            return self, tuple(range(self.order))
        return self.ambient, self.embedding

    @cached_property
    def subgroup_classes(self) -> SubgroupClassTable:
        return subgroup_classes(self)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup, as the sorted tuple of its element indices."""

    members: tuple[int, ...]
    member_set: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "member_set", frozenset(self.members))

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return a in self.member_set

    def __len__(self) -> int:
        return len(self.members)

    def issubset(self, other: Subgroup) -> bool:
        return self.member_set <= other.member_set


def group_from_generators(degree: int, generators: Sequence,
                          order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    """Close ``generators`` under composition.

    Each generator is either a cycle string like ``"(1 2 3)"`` or a sequence
    of 1-based images. The closure is discovered breadth-first from the
    identity; elements are then stored in lexicographic order of their image
    tuples, so the identity is always index 0 and the result does not depend
    on which generating set was supplied.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    gens = [_as_perm(g, degree) for g in generators]
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = compose(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > order_bound:
                        raise GroupTooLarge(
                            f"group order exceeds bound {order_bound}")
        frontier = nxt
    return FiniteGroup(degree, sorted(seen))


# -- subgroup operations ---------------------------------------------------

def conjugate_subgroup(G: FiniteGroup, H: Subgroup, g: int) -> Subgroup:
    """g H g^-1"""
    G.check_subgroup(H)
    return Subgroup(tuple(sorted(G.conj(g, h) for h in H.members)))


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    G.check_subgroup(H)
    hs = H.member_set
    return Subgroup(tuple(g for g in range(G.order)
                          if all(G.conj(g, h) in hs for h in H.members)))


def intersect(H: Subgroup, K: Subgroup) -> Subgroup:
    return Subgroup(tuple(sorted(H.member_set & K.member_set)))


def double_coset_decomposition(G: FiniteGroup, H: Subgroup, K: Subgroup
                               ) -> list[tuple[int, frozenset[int]]]:
    """Pairs ``(g, HgK)``; each ``g`` is the least index not yet covered."""
    G.check_subgroup(H)
    G.check_subgroup(K)
    covered: set[int] = set()
    out = []
    for g in range(G.order):
        if g in covered:
            continue
        cos = frozenset(G.mul_table[G.mul_table[h][g]][k]
                        for h in H.members for k in K.members)
        covered |= cos
        out.append((g, cos))
    return out


def double_cosets(G: FiniteGroup, H: Subgroup, K: Subgroup) -> list[int]:
    return [g for g, _ in double_coset_decomposition(G, H, K)]


def left_coset_reps(G: FiniteGroup, H: Subgroup) -> list[int]:
    """Least representative of each left coset gH, in increasing order."""
    covered: set[int] = set()
    reps = []
    for g in range(G.order):
        if g not in covered:
            reps.append(g)
            covered.update(G.mul_table[g][h] for h in H.members)
    return reps


def right_coset_reps(G: FiniteGroup, H: Subgroup) -> list[int]:
    """Least representative of each right coset Hg, in increasing order."""
    covered: set[int] = set()
    reps = []
    for g in range(G.order):
        if g not in covered:
            reps.append(g)
            covered.update(G.mul_table[h][g] for h in H.members)
    return reps


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, found by joining cyclic subgroups until nothing new appears.

    ``<X, a>`` only depends on the double coset XaX and on ``<a>``, so one
    element per such pair is tried.
    """
    T = G.mul_table
    orders = [G.element_order(a) for a in range(G.order)]

    def same_cyclic(a: int) -> list[int]:
        out, x = [], a
        for k in range(1, orders[a] + 1):
            if math.gcd(k, orders[a]) == 1:
                out.append(x)
            x = T[x][a]
        return out

    found: dict[tuple[int, ...], list[int]] = {}
    for a in range(G.order):
        C = G.closure([a])
        found.setdefault(C.members, [a])
    frontier = list(found)
    while frontier:
        nxt = []
        for members in frontier:
            gens = found[members]
            covered = set(members)
            for a in range(G.order):
                if a in covered:
                    continue
                for b in same_cyclic(a):
                    for x in members:
                        xb = T[x][b]
                        covered.update(T[xb][y] for y in members)
                J = G.closure(gens + [a], start=members)
                if J.members not in found:
                    found[J.members] = gens + [a]
                    nxt.append(J.members)
        frontier = nxt
    return [Subgroup(m) for m in found]


@dataclass(frozen=True)
class SubgroupClass:
    representative: Subgroup
    members: tuple[Subgroup, ...]
    normalizer_order: int

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def size(self) -> int:
        return len(self.members)


class SubgroupClassTable:
    """Conjugacy classes of subgroups in canonical order.

    Classes are sorted by subgroup order, ties broken by the lexicographically
    least member tuple within each class; that tuple is also the class
    representative. Class 0 is the trivial subgroup and the last class is G.
    """

    def __init__(self, group: FiniteGroup, classes: Sequence[SubgroupClass]):
        self.group = group
        self.classes = tuple(classes)
        self._lookup = {S.members: i for i, c in enumerate(self.classes)
                        for S in c.members}

    def __len__(self) -> int:
        return len(self.classes)

    def __getitem__(self, i: int) -> SubgroupClass:
        return self.classes[i]

    def __iter__(self):
        return iter(self.classes)

    @property
    def representatives(self) -> list[Subgroup]:
        return [c.representative for c in self.classes]

    @property
    def normalizer_index(self) -> list[int]:
        """|N_G(H)/H| per class."""
        return [c.normalizer_order // c.order for c in self.classes]

    def class_of(self, H: Subgroup) -> int:
        try:
            return self._lookup[H.members]
        except KeyError:
            raise NotASubgroup(f"{H!r} is not a subgroup of this group") from None

    def subgroup_count(self) -> int:
        return len(self._lookup)


def subgroup_classes(G: FiniteGroup) -> SubgroupClassTable:
    subs = all_subgroups(G)
    remaining = {S.members for S in subs}
    raw = []
    for S in sorted(subs, key=lambda S: (S.order, S.members)):
        if S.members not in remaining:
            continue
        conj = {tuple(sorted(G.conj(g, h) for h in S.members))
                for g in range(G.order)}
        remaining -= conj
        members = tuple(Subgroup(m) for m in sorted(conj))
        norm = normalizer(G, S).order
        raw.append(SubgroupClass(members[0], members, norm))
    # iteration already visits least-member tuples first within each order
    raw.sort(key=lambda c: (c.order, c.representative.members))
    return SubgroupClassTable(G, raw)
