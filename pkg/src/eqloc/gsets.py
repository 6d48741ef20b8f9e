"""Explicit finite G-sets.

A :class:`GSet` stores the full action table ``action[g][p]``. Sets over a
subgroup H carry H as a group built with ``G.subgroup_group(H)``, which
remembers its embedding, so restriction and coinduction line up elements
exactly.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import GroupMismatch, NotASubgroup, SizeExceeded
from .groups import (FiniteGroup, Subgroup, left_coset_reps, right_coset_reps)

DEFAULT_SIZE_CAP = 10**6


class GSet:
    def __init__(self, group: FiniteGroup, action: Sequence[Sequence[int]],
                 check: bool = False):
        self.group = group
        self.action: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in action)
        self.size = len(self.action[0]) if self.action else 0
        if len(self.action) != group.order:
            raise ValueError("action table needs one row per group element")
        if check:
            self.validate()

    def __repr__(self) -> str:
        return f"<GSet size={self.size} over group of order {self.group.order}>"

    def validate(self) -> None:
        G = self.group
        ident = self.action[G.identity_index]
        if any(ident[p] != p for p in range(self.size)):
            raise ValueError("identity does not act trivially")
        for g in range(G.order):
            if sorted(self.action[g]) != list(range(self.size)):
                raise ValueError(f"element {g} does not act bijectively")
            ag = self.action[g]
            for h in range(G.order):
                ah = self.action[h]
                agh = self.action[G.mul_table[g][h]]
                if any(ag[ah[p]] != agh[p] for p in range(self.size)):
                    raise ValueError("action is not compatible with multiplication")

    def orbits(self) -> list[list[int]]:
        """Orbits as sorted point lists, ordered by least point."""
        seen = [False] * self.size
        out = []
        for p in range(self.size):
            if seen[p]:
                continue
            orb = sorted({row[p] for row in self.action})
            for q in orb:
                seen[q] = True
            out.append(orb)
        return out

    def stabilizer(self, p: int) -> Subgroup:
        return Subgroup(tuple(g for g, row in enumerate(self.action) if row[p] == p))


def trivial_gset(G: FiniteGroup, n: int) -> GSet:
    """n points with trivial action."""
    return GSet(G, [tuple(range(n))] * G.order)


def natural_gset(G: FiniteGroup) -> GSet:
    """G acting on {0..degree-1} through its permutations."""
    return GSet(G, G.elements)


def coset_gset(G: FiniteGroup, H: Subgroup) -> GSet:
    """G/H with G acting by left multiplication; point i is the coset of
    the i-th least left coset representative."""
    G.check_subgroup(H)
    reps = left_coset_reps(G, H)
    where = {}
    for i, r in enumerate(reps):
        for h in H.members:
            where[G.mul_table[r][h]] = i
    return GSet(G, [tuple(where[G.mul_table[g][r]] for r in reps)
                    for g in range(G.order)])


def regular_gset(G: FiniteGroup) -> GSet:
    return coset_gset(G, G.trivial_subgroup())


def orbit_decompose(X: GSet) -> list[tuple[int, int]]:
    """Multiplicity of each orbit type, as ``(class index, count)`` pairs in
    canonical class order, omitting zero counts."""
    table = X.group.subgroup_classes
    counts = [0] * len(table)
    for orb in X.orbits():
        counts[table.class_of(X.stabilizer(orb[0]))] += 1
    return [(i, c) for i, c in enumerate(counts) if c]


def orbit_vector(X: GSet) -> list[int]:
    vec = [0] * len(X.group.subgroup_classes)
    for i, c in orbit_decompose(X):
        vec[i] = c
    return vec


def fixed_points(X: GSet, K: Subgroup) -> int:
    X.group.check_subgroup(K)
    rows = [X.action[k] for k in K.members]
    return sum(1 for p in range(X.size) if all(r[p] == p for r in rows))


def disjoint_union(X: GSet, Y: GSet) -> GSet:
    if X.group is not Y.group:
        raise GroupMismatch("disjoint union of sets over different groups")
    n = X.size
    return GSet(X.group, [rx + tuple(n + q for q in ry)
                          for rx, ry in zip(X.action, Y.action)])


def product(X: GSet, Y: GSet) -> GSet:
    """Cartesian product with the diagonal action; (x, y) is point x*|Y| + y."""
    if X.group is not Y.group:
        raise GroupMismatch("product of sets over different groups")
    m = Y.size
    return GSet(X.group, [tuple(rx[x] * m + ry[y] for x in range(X.size)
                                for y in range(m))
                          for rx, ry in zip(X.action, Y.action)])


def restrict_gset(X: GSet, H: Subgroup) -> GSet:
    """The underlying set of X with the action restricted to H.

    The result lives over ``X.group.subgroup_group(H)``.
    """
    G = X.group
    G.check_subgroup(H)
    Hg = G.subgroup_group(H)
    return GSet(Hg, [X.action[g] for g in H.members])


def coinduce(G: FiniteGroup, X: GSet, size_cap: int = DEFAULT_SIZE_CAP) -> GSet:
    """Map_H(G, X) for an H-set X, where ``X.group`` is H embedded in G.

    A map f with f(hg) = h.f(g) is stored as its values on the least
    representatives t_0 < t_1 < ... of the right cosets Ht, encoded as a
    base-|X| integer with t_0 as the most significant digit. G acts by
    (g.f)(y) = f(yg).
    """
    Hg = X.group
    amb, emb = Hg.embed()
    if amb is not G:
        raise NotASubgroup("the set's group is not a subgroup of G")
    H = Subgroup(tuple(sorted(emb)))
    to_h = {a: i for i, a in enumerate(emb)}
    reps = right_coset_reps(G, H)
    m = len(reps)
    n = X.size
    if n ** m > size_cap:
        raise SizeExceeded(f"coinduced set would have {n}**{m} points")
    # for each g and i: t_i g = h t_j  ->  (j, h as an index of Hg)
    coset_of = {}
    for j, t in enumerate(reps):
        for h in H.members:
            coset_of[G.mul_table[h][t]] = j
    moves = []
    for g in range(G.order):
        row = []
        for t in reps:
            y = G.mul_table[t][g]
            j = coset_of[y]
            h = G.mul_table[y][G.inverse[reps[j]]]
            row.append((j, to_h[h]))
        moves.append(row)
    points = list(itertools.product(range(n), repeat=m))
    weights = [n ** (m - 1 - i) for i in range(m)]
    action = []
    for g in range(G.order):
        mv = [(j, X.action[h]) for j, h in moves[g]]
        action.append(tuple(
            sum(w * act[f[j]] for w, (j, act) in zip(weights, mv))
            for f in points))
    return GSet(G, action)
