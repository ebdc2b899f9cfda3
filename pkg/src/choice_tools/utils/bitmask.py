"""
Helpers for working with menus encoded as unsigned bit vectors.

Canonical menu listings are memoized per argument and returned as tuples, so repeated scans over the same
universe share one ordering.
"""

from functools import lru_cache
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Union

if TYPE_CHECKING:
    from ..model import Universe

__all__ = [
    "full_menu",
    "members",
    "to_menu",
    "size",
    "lowest",
    "menu_key",
    "submenus",
    "supermenus",
    "strict_inclusions",
    "all_menus",
]


def full_menu(n: int) -> int:
    """Bit vector with the lowest ``n`` bits set."""
    return (1 << n) - 1


def members(menu: int) -> list[int]:
    """Alternatives (bit positions) contained in a menu, ascending."""
    out = []
    idx = 0
    while menu:
        if menu & 1:
            out.append(idx)
        menu >>= 1
        idx += 1
    return out


def to_menu(alternatives: Iterable[int]) -> int:
    """Pack alternative indices into a bit vector."""
    menu = 0
    for alt in alternatives:
        menu |= 1 << alt
    return menu


def size(menu: int) -> int:
    """Number of alternatives in a menu."""
    return menu.bit_count()


def lowest(menu: int) -> int:
    """Index of the lowest set bit. The menu must be nonempty."""
    return (menu & -menu).bit_length() - 1


def menu_key(menu: int) -> tuple[int, int]:
    """Canonical sort key: ascending cardinality, then ascending numeric value."""
    return size(menu), menu


@lru_cache(maxsize=None)
def submenus(menu: int, proper: bool = False) -> tuple[int, ...]:
    """
    Nonempty subsets of a menu in canonical order.

    Args:
        menu: Bit vector to take subsets of.
        proper: If ``True``, the menu itself is left out.
    """
    elements = members(menu)
    top = len(elements) if proper else len(elements) + 1
    out = []
    for k in range(1, top):
        out.extend(sorted(to_menu(combo) for combo in combinations(elements, k)))
    return tuple(out)


@lru_cache(maxsize=None)
def supermenus(menu: int, n: int, proper: bool = True) -> tuple[int, ...]:
    """
    Supersets of a menu within a universe of ``n`` alternatives in canonical order.

    Args:
        menu: Bit vector to take supersets of.
        n: Universe size.
        proper: If ``True`` (default), the menu itself is left out.
    """
    rest = full_menu(n) & ~menu
    larger = tuple(sorted((menu | extra for extra in submenus(rest)), key=menu_key)) if rest else ()
    return larger if proper else (menu,) + larger


@lru_cache(maxsize=None)
def strict_inclusions(n: int) -> tuple[tuple[int, int], ...]:
    """Every pair ``(A, B)`` of menus with ``A`` a proper subset of ``B``, ``A`` then ``B`` in canonical order."""
    return tuple((small, large) for small in all_menus(n) for large in supermenus(small, n))


@lru_cache(maxsize=None)
def _all_menus(n: int) -> tuple[int, ...]:
    return submenus(full_menu(n))


def all_menus(universe: Union[int, "Universe"]) -> tuple[int, ...]:
    """
    All ``2**n - 1`` nonempty menus in canonical order.

    Args:
        universe: A :class:`~choice_tools.model.Universe` or its number of alternatives.
    """
    return _all_menus(getattr(universe, "n", universe))
