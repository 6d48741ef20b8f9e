"""Restriction, norms (multiplicative induction) and indexed products on
Burnside rings.

The norm is computed in ghost coordinates: the mark of N_H^G(x) at K is the
product, over double cosets HgK, of the mark of x at H ∩ gKg^-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .burnside import BurnsideElement, burnside_ring
from .errors import GroupMismatch, IntegralityViolation, NotInLattice
from .groups import (FiniteGroup, Subgroup, conjugate_subgroup,
                     double_cosets, intersect)
from .gsets import GSet


class SubgroupContext:
    """A subgroup H of G together with H as a group in its own right."""

    def __init__(self, ambient: FiniteGroup, subgroup: Subgroup):
        ambient.check_subgroup(subgroup)
        self.ambient = ambient
        self.subgroup = subgroup
        self.subgroup_as_group = ambient.subgroup_group(subgroup)
        self._to_h = {a: i for i, a in enumerate(subgroup.members)}

    @classmethod
    def for_class(cls, G: FiniteGroup, i: int) -> SubgroupContext:
        return cls(G, G.subgroup_classes[i].representative)

    def __repr__(self) -> str:
        return (f"<SubgroupContext |H|={self.subgroup.order} "
                f"|G|={self.ambient.order}>")

    def to_local(self, L: Subgroup) -> Subgroup:
        """A subgroup of G contained in H, re-indexed inside H."""
        return Subgroup(tuple(sorted(self._to_h[a] for a in L.members)))

    def to_ambient(self, L: Subgroup) -> Subgroup:
        return Subgroup(tuple(sorted(self.subgroup.members[a] for a in L.members)))

    @cached_property
    def class_map(self) -> tuple[int, ...]:
        """Class of H  ->  class of G containing it."""
        G_classes = self.ambient.subgroup_classes
        return tuple(G_classes.class_of(self.to_ambient(c.representative))
                     for c in self.subgroup_as_group.subgroup_classes)

    @cached_property
    def norm_indices(self) -> tuple[tuple[int, ...], ...]:
        """For each class K of G, the H-classes of H ∩ gKg^-1 over the double
        cosets HgK."""
        G = self.ambient
        H_classes = self.subgroup_as_group.subgroup_classes
        out = []
        for c in G.subgroup_classes:
            K = c.representative
            idx = []
            for g in double_cosets(G, self.subgroup, K):
                L = intersect(self.subgroup, conjugate_subgroup(G, K, g))
                idx.append(H_classes.class_of(self.to_local(L)))
            out.append(tuple(idx))
        return tuple(out)


def restrict(ctx: SubgroupContext, x: BurnsideElement) -> BurnsideElement:
    if x.group is not ctx.ambient:
        raise GroupMismatch("element is not over the ambient group")
    xm = x.marks()
    try:
        return burnside_ring(ctx.subgroup_as_group).from_marks(
            [xm[j] for j in ctx.class_map])
    except NotInLattice as exc:  # pragma: no cover - restriction is always integral
        raise IntegralityViolation(f"restriction left the Burnside ring: {exc}") from exc


def norm_marks(ctx: SubgroupContext, x: BurnsideElement) -> tuple[int, ...]:
    if x.group is not ctx.subgroup_as_group:
        raise GroupMismatch("element is not over the context's subgroup")
    xm = x.marks()
    out = []
    for idx in ctx.norm_indices:
        v = 1
        for i in idx:
            v *= xm[i]
        out.append(v)
    return tuple(out)


def norm(ctx: SubgroupContext, x: BurnsideElement) -> BurnsideElement:
    """N_H^G(x), for x in A(H)."""
    v = norm_marks(ctx, x)
    try:
        return burnside_ring(ctx.ambient).from_marks(v)
    except NotInLattice as exc:
        raise IntegralityViolation(f"norm of {x!r} is not integral: {exc}") from exc


@dataclass(frozen=True)
class IndexedFamily:
    """A G-set U and, for each orbit of U, an element over its stabilizer.

    ``assignments[i]`` belongs to the i-th orbit of ``index_set.orbits()``
    and lives over the subgroup returned by :meth:`orbit_contexts`, i.e. the
    canonical representative of that orbit's stabilizer class.
    """

    index_set: GSet
    assignments: tuple[BurnsideElement, ...]

    def __post_init__(self):
        ctxs = self.orbit_contexts()
        if len(ctxs) != len(self.assignments):
            raise ValueError(
                f"{len(ctxs)} orbits but {len(self.assignments)} assignments")
        for ctx, a in zip(ctxs, self.assignments):
            if a.group is not ctx.subgroup_as_group:
                raise GroupMismatch("assignment is not over the orbit's stabilizer")

    def orbit_contexts(self) -> list[SubgroupContext]:
        U = self.index_set
        G = U.group
        table = G.subgroup_classes
        return [SubgroupContext.for_class(G, table.class_of(U.stabilizer(orb[0])))
                for orb in U.orbits()]


def indexed_product(family: IndexedFamily) -> BurnsideElement:
    G = family.index_set.group
    result = burnside_ring(G).one
    for ctx, a in zip(family.orbit_contexts(), family.assignments):
        result = result * norm(ctx, a)
    return result


def transport(x: BurnsideElement, target: FiniteGroup,
              class_map: Sequence[int]) -> BurnsideElement:
    """Move x to another group along a bijection of subgroup classes."""
    xm = x.marks()
    R = burnside_ring(target)
    v = [0] * R.rank
    for i, j in enumerate(class_map):
        v[j] = xm[i]
    return R.from_marks(v)
