"""Deciding when inverting a set S of Burnside-ring elements is compatible
with indexed products.

An indexed product of elements of S over U = ⊔ G/H_i is the product of the
norms N_{H_i}^G(res_{H_i} s_i). Divisibility is multiplicative, so it is
enough that each N_H^G(res_H s), H running over subgroup classes and s over
S, divides some ordinary product of elements of S.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Union

from .burnside import BurnsideElement, burnside_ring, divides
from .errors import GroupMismatch, SizeExceeded
from .groups import FiniteGroup
from .norms import SubgroupContext, norm, restrict

DEFAULT_MAX_POWER = 64
DEFAULT_MAX_WORD = 8
DEFAULT_CLOSURE_CAP = 10**5


@dataclass(frozen=True)
class LocalizationProblem:
    group: FiniteGroup
    generators: tuple[BurnsideElement, ...]
    max_power: int = DEFAULT_MAX_POWER
    max_word: int = DEFAULT_MAX_WORD

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise ValueError("the set S must be nonempty")
        for s in self.generators:
            if s.group is not self.group:
                raise GroupMismatch("every element of S must lie in A(G)")
        if self.max_power < 1 or self.max_word < 1:
            raise ValueError("search bounds must be positive")

    @property
    def degree_bound(self) -> int:
        return self.max_power if len(self.generators) == 1 else self.max_word


@dataclass(frozen=True)
class Witness:
    subgroup_class: int
    generator_index: int
    normed: BurnsideElement
    product_exponents: tuple[int, ...]
    cofactor: BurnsideElement

    def product(self, generators) -> BurnsideElement:
        return monomial(generators, self.product_exponents)

    def verify(self, generators) -> bool:
        return self.normed * self.cofactor == self.product(generators)

    @property
    def degree(self) -> int:
        return sum(self.product_exponents)


@dataclass(frozen=True)
class Safe:
    witnesses: tuple[Witness, ...]
    status: str = field(default="Safe", init=False)


@dataclass(frozen=True)
class Unsafe:
    """The mark of ``normed`` at ``coordinate`` is zero while every generator's
    mark there is nonzero, so no product of generators is a multiple."""

    subgroup_class: int
    generator_index: int
    normed: BurnsideElement
    coordinate: int
    status: str = field(default="Unsafe", init=False)


@dataclass(frozen=True)
class Unknown:
    """No divisor found within the search bound for the listed pairs."""

    pending: tuple[tuple[int, int], ...]
    bound: int
    witnesses: tuple[Witness, ...]
    status: str = field(default="Unknown", init=False)


Verdict = Union[Safe, Unsafe, Unknown]


def monomial(generators, exponents) -> BurnsideElement:
    R = generators[0].ring
    v = [1] * R.rank
    for s, e in zip(generators, exponents):
        if e:
            for j, a in enumerate(s.marks()):
                v[j] *= a ** e
    return R.from_marks(v)


def norm_generators(problem: LocalizationProblem
                    ) -> list[tuple[int, int, BurnsideElement]]:
    """N_H^G(res_H s) for every subgroup class H and every s in S."""
    G = problem.group
    out = []
    for i in range(len(G.subgroup_classes)):
        ctx = SubgroupContext.for_class(G, i)
        for j, s in enumerate(problem.generators):
            out.append((i, j, norm(ctx, restrict(ctx, s))))
    return out


def exponent_vectors(nvars: int, max_degree: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors by increasing total degree, lexicographically
    ascending within a degree: (0,1), (1,0), then (0,2), (1,1), (2,0), ..."""
    for total in range(1, max_degree + 1):
        for cut in itertools.combinations(range(total + nvars - 1), nvars - 1):
            bounds = (-1,) + cut + (total + nvars - 1,)
            yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(nvars))


def zero_mark_obstruction(d: BurnsideElement, generators) -> int | None:
    dm = d.marks()
    gm = [s.marks() for s in generators]
    for k, a in enumerate(dm):
        if a == 0 and all(m[k] != 0 for m in gm):
            return k
    return None


def find_witness(d: BurnsideElement, generators, max_degree: int
                 ) -> tuple[tuple[int, ...], BurnsideElement] | None:
    for exps in exponent_vectors(len(generators), max_degree):
        x = divides(d, monomial(generators, exps))
        if x is not None:
            return exps, x
    return None


def check_criterion(problem: LocalizationProblem) -> Verdict:
    gens = problem.generators
    normed = norm_generators(problem)
    for i, j, d in normed:
        k = zero_mark_obstruction(d, gens)
        if k is not None:
            return Unsafe(i, j, d, k)
    bound = problem.degree_bound
    witnesses, pending = [], []
    for i, j, d in normed:
        found = find_witness(d, gens, bound)
        if found is None:
            pending.append((i, j))
        else:
            witnesses.append(Witness(i, j, d, found[0], found[1]))
    if pending:
        return Unknown(tuple(pending), bound, tuple(witnesses))
    return Safe(tuple(witnesses))


@dataclass(frozen=True)
class InvertRow:
    subgroup_class: int
    k: int | None
    cofactor: BurnsideElement | None


def invert_integer_report(G: FiniteGroup, n: int,
                          max_power: int = DEFAULT_MAX_POWER
                          ) -> tuple[Verdict, list[InvertRow]]:
    """Check S = {n}; per class, the least k with N_H^G(n) | n^k."""
    if n < 2:
        raise ValueError("n must be at least 2")
    problem = LocalizationProblem(G, (burnside_ring(G).integer(n),),
                                  max_power=max_power)
    verdict = check_criterion(problem)
    found = {w.subgroup_class: w for w in getattr(verdict, "witnesses", ())}
    rows = []
    for i in range(len(G.subgroup_classes)):
        w = found.get(i)
        rows.append(InvertRow(i, w.product_exponents[0], w.cofactor) if w
                    else InvertRow(i, None, None))
    return verdict, rows


def closure_enumerate(problem: LocalizationProblem, depth: int,
                      cap: int = DEFAULT_CLOSURE_CAP) -> list[BurnsideElement]:
    """Elements reachable from S in at most ``depth`` rounds, each round
    adding every N_H^G(res_H x) and every product x*y of known elements.

    Returned sorted by coefficient vector.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    G = problem.group
    ctxs = [SubgroupContext.for_class(G, i) for i in range(len(G.subgroup_classes))]
    known = dict.fromkeys(problem.generators)
    for _ in range(depth):
        current = list(known)
        new = {}
        for x in current:
            for ctx in ctxs:
                new[norm(ctx, restrict(ctx, x))] = None
        for a, x in enumerate(current):
            for y in current[a:]:
                new[x * y] = None
                if len(known) + len(new) > cap:
                    raise SizeExceeded(f"closure exceeds {cap} elements")
        known.update(new)
        if len(known) > cap:
            raise SizeExceeded(f"closure exceeds {cap} elements")
    return sorted(known, key=lambda x: x.coeffs)
