"""Named groups available from the command line."""

from functools import lru_cache

from .errors import GroupTooLarge
from .groups import DEFAULT_ORDER_BOUND, FiniteGroup, group_from_generators

# name -> (degree, generators in cycle notation)
PRESETS: dict[str, tuple[int, list[str]]] = {
    "C1": (1, []),
    "C2": (2, ["(1 2)"]),
    "C3": (3, ["(1 2 3)"]),
    "C4": (4, ["(1 2 3 4)"]),
    "C5": (5, ["(1 2 3 4 5)"]),
    "C6": (6, ["(1 2 3 4 5 6)"]),
    "C2xC2": (4, ["(1 2)", "(3 4)"]),
    "C2xC4": (6, ["(1 2)", "(3 4 5 6)"]),
    "S3": (3, ["(1 2 3)", "(1 2)"]),
    "D4": (4, ["(1 2 3 4)", "(1 3)"]),
    # left-regular action on 1, i, j, k, -1, -i, -j, -k
    "Q8": (8, ["(1 2 5 6)(3 4 7 8)", "(1 3 5 7)(2 8 6 4)"]),
    "A4": (4, ["(1 2 3)", "(2 3 4)"]),
    "S4": (4, ["(1 2 3 4)", "(1 2)"]),
}


@lru_cache(maxsize=None)
def _build(name: str) -> FiniteGroup:
    degree, gens = PRESETS[name]
    return group_from_generators(degree, gens)


def preset(name: str, order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    """The named group; repeated calls return the same object."""
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    G = _build(name)
    if G.order > order_bound:
        raise GroupTooLarge(f"{name} has order {G.order} > bound {order_bound}")
    return G
