"""Independent brute-force reference computations used by the tests.

Nothing here goes through the ghost map or the Hermite solver.
"""

import itertools


def perm_closure(gens, degree):
    ident = tuple(range(degree))
    elems = {ident}
    while True:
        new = {tuple(a[b[i]] for i in range(degree)) for a in elems for b in gens} | elems
        if new == elems:
            return elems
        elems = new


def brute_subgroups(G):
    """All subsets that are closed under multiplication (order <= 12 only)."""
    n = G.order
    e = G.identity_index
    others = [a for a in range(n) if a != e]
    out = []
    for r in range(len(others) + 1):
        for combo in itertools.combinations(others, r):
            S = set(combo) | {e}
            if n % len(S):
                continue
            if all(G.mul_table[a][b] in S for a in S for b in S):
                out.append(tuple(sorted(S)))
    return out


def coset_fixed_count(G, H, K):
    """|(G/H)^K| by listing cosets as sets and testing k.gH == gH."""
    cosets = {frozenset(G.mul_table[g][h] for h in H.members) for g in range(G.order)}
    count = 0
    for c in cosets:
        if all(frozenset(G.mul_table[k][x] for x in c) == c for k in K.members):
            count += 1
    return count


def explicit_coinduction_fixed_points(G, X, K_members):
    """Count f: G -> X with f(hg) = h.f(g) and f(yk) = f(y), by enumerating
    every function G -> X. Only for tiny |X|**|G|."""
    Hg = X.group
    amb, emb = Hg.embed()
    to_h = {a: i for i, a in enumerate(emb)}
    count = 0
    for f in itertools.product(range(X.size), repeat=G.order):
        ok = all(f[G.mul_table[h][g]] == X.action[to_h[h]][f[g]]
                 for h in emb for g in range(G.order))
        if ok and all(f[G.mul_table[y][k]] == f[y]
                      for y in range(G.order) for k in K_members):
            count += 1
    return count


def brute_divides(d, t, bound):
    """Search coefficient vectors in [-bound, bound]^rank for d*x == t,
    comparing ghost coordinates pointwise."""
    R = d.ring
    dm, tm = d.marks(), t.marks()
    for c in itertools.product(range(-bound, bound + 1), repeat=R.rank):
        xm = R.marks_of(c)
        if all(a * b == v for a, b, v in zip(dm, xm, tm)):
            return R.element(c)
    return None
