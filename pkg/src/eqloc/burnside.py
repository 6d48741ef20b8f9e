"""The Burnside ring A(G) in the basis [G/H] and its ghost coordinates."""

from __future__ import annotations

import re
import weakref
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GroupMismatch, NotInLattice, ParseError, UnsupportedDegree
from .groups import FiniteGroup, SubgroupClassTable, left_coset_reps
from .intlin import solve_integer

MarksVector = tuple[int, ...]


@dataclass(frozen=True)
class TableOfMarks:
    """``m[i][j] = |(G/H_i)^{K_j}|`` over class representatives.

    Lower triangular in canonical class order.
    """

    classes: SubgroupClassTable
    m: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.m)


def table_of_marks(G: FiniteGroup) -> TableOfMarks:
    table = G.subgroup_classes
    reps = table.representatives
    rows = []
    for H in reps:
        cosets = left_coset_reps(G, H)
        row = []
        for K in reps:
            # gH is fixed by K  iff  g^-1 K g <= H
            row.append(sum(
                1 for g in cosets
                if all(G.conj(G.inverse[g], k) in H for k in K.members)))
        rows.append(tuple(row))
    return TableOfMarks(table, tuple(rows))


class BurnsideRing:
    """A(G) for one group; obtain it with :func:`burnside_ring`."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.table = table_of_marks(group)
        self.classes = self.table.classes
        self.rank = len(self.table.m)

    def __repr__(self) -> str:
        return f"<BurnsideRing rank={self.rank} of group of order {self.group.order}>"

    def element(self, coeffs: Iterable[int]) -> BurnsideElement:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients, got {len(coeffs)}")
        return BurnsideElement(self, coeffs)

    def basis(self, i: int) -> BurnsideElement:
        return self.element(int(i == j) for j in range(self.rank))

    def integer(self, n: int) -> BurnsideElement:
        """n copies of the one-point set G/G."""
        return self.element([0] * (self.rank - 1) + [n])

    @property
    def one(self) -> BurnsideElement:
        return self.integer(1)

    @property
    def zero(self) -> BurnsideElement:
        return self.integer(0)

    def marks_of(self, coeffs: Sequence[int]) -> MarksVector:
        m = self.table.m
        return tuple(sum(coeffs[i] * m[i][j] for i in range(j, self.rank) if coeffs[i])
                     for j in range(self.rank))

    def from_marks(self, values: Sequence[int]) -> BurnsideElement:
        """Back-substitute against the table of marks; raises NotInLattice
        when the vector is not the ghost image of a virtual G-set."""
        if len(values) != self.rank:
            raise ValueError(f"expected {self.rank} marks, got {len(values)}")
        m = self.table.m
        c = [0] * self.rank
        for j in range(self.rank - 1, -1, -1):
            acc = values[j] - sum(c[i] * m[i][j] for i in range(j + 1, self.rank) if c[i])
            q, r = divmod(acc, m[j][j])
            if r:
                raise NotInLattice(
                    f"marks {tuple(values)} are not integral at class {j}")
            c[j] = q
        return BurnsideElement(self, tuple(c))

    def from_gset(self, X) -> BurnsideElement:
        from .gsets import orbit_vector
        if X.group is not self.group:
            raise GroupMismatch("G-set is over a different group")
        return self.element(orbit_vector(X))

    def parse(self, text: str) -> BurnsideElement:
        """Parse ``"[c_0, ..., c_r]"``, optionally suffixed by ``@0``."""
        text = text.strip()
        if "@" in text:
            text, deg = text.rsplit("@", 1)
            if deg.strip() != "0":
                raise UnsupportedDegree(
                    f"degree {deg.strip()!r} is not supported: only integer degree 0 "
                    "elements (the Burnside ring) are handled")
            text = text.strip()
        m = re.fullmatch(r"\[\s*(.*?)\s*\]", text)
        if not m:
            raise ParseError(f"expected an integer vector like [1, 2], got {text!r}")
        body = m.group(1)
        try:
            coeffs = [int(t) for t in re.split(r"\s*,\s*", body)] if body else []
        except ValueError:
            raise ParseError(f"non-integer entry in {text!r}") from None
        if len(coeffs) != self.rank:
            raise ParseError(
                f"element needs {self.rank} coefficients in canonical class order, "
                f"got {len(coeffs)}")
        return self.element(coeffs)


_RINGS: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def burnside_ring(G: FiniteGroup) -> BurnsideRing:
    try:
        return _RINGS[G]
    except KeyError:
        R = _RINGS[G] = BurnsideRing(G)
        return R


@dataclass(frozen=True, eq=False)
class BurnsideElement:
    ring: BurnsideRing
    coeffs: tuple[int, ...]

    @property
    def group(self) -> FiniteGroup:
        return self.ring.group

    def marks(self) -> MarksVector:
        return self.ring.marks_of(self.coeffs)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def _check(self, other: BurnsideElement) -> None:
        if not isinstance(other, BurnsideElement):
            raise TypeError(f"expected a BurnsideElement, got {type(other).__name__}")
        if other.ring is not self.ring:
            raise GroupMismatch("elements live in Burnside rings of different groups")

    def _coerce(self, other) -> BurnsideElement:
        if isinstance(other, int):
            return self.ring.integer(other)
        self._check(other)
        return other

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.integer(other)
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return other.ring is self.ring and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> BurnsideElement:
        other = self._coerce(other)
        return BurnsideElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> BurnsideElement:
        return BurnsideElement(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> BurnsideElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> BurnsideElement:
        return self._coerce(other) - self

    def __mul__(self, other) -> BurnsideElement:
        other = self._coerce(other)
        return self.ring.from_marks(
            [a * b for a, b in zip(self.marks(), other.marks())])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BurnsideElement:
        if k < 0:
            raise ValueError("negative powers are not defined in A(G)")
        return self.ring.from_marks([a ** k for a in self.marks()])

    def __str__(self) -> str:
        return format_vector(self)

    def __repr__(self) -> str:
        return f"BurnsideElement({list(self.coeffs)})"


def add(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    x._check(y)
    return x + y


def neg(x: BurnsideElement) -> BurnsideElement:
    return -x


def mul(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    x._check(y)
    return x * y


def marks(x: BurnsideElement) -> MarksVector:
    return x.marks()


def from_marks(G: FiniteGroup, values: Sequence[int]) -> BurnsideElement:
    return burnside_ring(G).from_marks(values)


def divides(d: BurnsideElement, target: BurnsideElement) -> BurnsideElement | None:
    """A cofactor x with ``d * x == target``, or None if no such x exists.

    Where d has a nonzero mark the cofactor's mark is forced; where d's mark
    is zero the target's must be too and the cofactor's mark is free. The
    remaining question, whether some integer combination of table rows hits
    the forced marks, is answered exactly by an integer linear solve.
    """
    d._check(target)
    R = d.ring
    dm, tm = d.marks(), target.marks()
    forced_cols, forced_vals = [], []
    for j, (a, b) in enumerate(zip(dm, tm)):
        if a == 0:
            if b != 0:
                return None
            continue
        q, r = divmod(b, a)
        if r:
            return None
        forced_cols.append(j)
        forced_vals.append(q)
    if not forced_cols:
        return R.zero
    if len(forced_cols) == R.rank:
        try:
            return R.from_marks(forced_vals)
        except NotInLattice:
            return None
    m = R.table.m
    # sum_i c_i m[i][j] == y_j for every forced column j
    A = [[m[i][j] for i in range(R.rank)] for j in forced_cols]
    c = solve_integer(A, forced_vals)
    if c is None:
        return None
    x = R.element(c)
    assert d * x == target
    return x


def format_vector(x: BurnsideElement) -> str:
    return "[" + ", ".join(str(c) for c in x.coeffs) + "]"


def format_rho(x: BurnsideElement, symbol: str = "ρ") -> str:
    """``a+bρ`` style display for rank-2 rings such as A(Z/2)."""
    if x.ring.rank != 2:
        raise ValueError("rho notation needs a rank-2 Burnside ring")
    b, a = x.coeffs
    if b == 0:
        return str(a)
    if b == 1:
        r = symbol
    elif b == -1:
        r = "-" + symbol
    else:
        r = f"{b}{symbol}"
    if a == 0:
        return r
    return f"{a}{'' if r.startswith('-') else '+'}{r}"
