"""Shared checks for the norm property suites (unit tests and acceptance)."""

import itertools
import random

from eqloc.burnside import burnside_ring
from eqloc.groups import (conjugate_subgroup, double_coset_decomposition,
                          intersect)
from eqloc.gsets import coset_gset, disjoint_union, trivial_gset
from eqloc.norms import SubgroupContext, norm


def random_element(R, rng, lo=-3, hi=3):
    return R.element(rng.randint(lo, hi) for _ in range(R.rank))


def contexts(G):
    return [SubgroupContext.for_class(G, i) for i in range(len(G.subgroup_classes))]


def conjugated_norm(ctx, x, g):
    """N^G of x moved to the conjugate subgroup gHg^-1."""
    G = ctx.ambient
    H2 = conjugate_subgroup(G, ctx.subgroup, g)
    ctx2 = SubgroupContext(G, H2)
    R2 = burnside_ring(ctx2.subgroup_as_group)
    xm = x.marks()
    v = [None] * R2.rank
    for i, c in enumerate(ctx.subgroup_as_group.subgroup_classes):
        L = ctx.to_ambient(c.representative)
        L2 = conjugate_subgroup(G, L, g)
        j = ctx2.subgroup_as_group.subgroup_classes.class_of(ctx2.to_local(L2))
        v[j] = xm[i]
    return norm(ctx2, R2.from_marks(v))


def norm_with_random_reps(ctx, x, rng):
    """The double-coset mark formula evaluated with random representatives
    h*g*k instead of the least element of each double coset."""
    G = ctx.ambient
    H = ctx.subgroup
    Hc = ctx.subgroup_as_group.subgroup_classes
    xm = x.marks()
    out = []
    for c in G.subgroup_classes:
        K = c.representative
        v = 1
        for _, coset in double_coset_decomposition(G, H, K):
            g = rng.choice(sorted(coset))
            L = intersect(H, conjugate_subgroup(G, K, g))
            v *= xm[Hc.class_of(ctx.to_local(L))]
        out.append(v)
    return burnside_ring(G).from_marks(out)


def chains(G):
    """Triples (ctx_K, ctx_H_in_K, ctx_H_in_G) for H <= K <= G over class
    representatives K and all classes of subgroups of K."""
    out = []
    for ctxK in contexts(G):
        Kg = ctxK.subgroup_as_group
        for c in Kg.subgroup_classes:
            ctxHK = SubgroupContext(Kg, c.representative)
            ctxHG = SubgroupContext(G, ctxK.to_ambient(c.representative))
            out.append((ctxK, ctxHK, ctxHG))
    return out


def same_element_over(x, group):
    """x re-read over another group with identical element list."""
    assert x.group.elements == group.elements
    return burnside_ring(group).element(x.coeffs)


def effective_sets(Hg, max_size):
    reps = Hg.subgroup_classes.representatives
    sizes = [Hg.order // L.order for L in reps]
    for c in itertools.product(*[range(max_size // s + 1) for s in sizes]):
        if sum(a * s for a, s in zip(c, sizes)) > max_size:
            continue
        X = trivial_gset(Hg, 0)
        for L, k in zip(reps, c):
            for _ in range(k):
                X = disjoint_union(X, coset_gset(Hg, L))
        yield c, X


def rng_for(name):
    return random.Random(f"eqloc-{name}")

