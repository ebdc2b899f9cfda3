"""
Minimal-compromise choice: shortlist the maximal alternatives of a weak order and, when the shortlist holds more
than one alternative, let a linear order veto its worst member.
"""

from typing import Optional

import numpy as np

from .model import Alternative, ChoiceCorrespondence, LinearOrder, Menu, Universe, WeakOrder
from .utils.bitmask import members

__all__ = [
    "max_set",
    "shortlist",
    "min_of",
    "vetoed",
    "mc_choice",
    "generate",
    "generate_rational",
    "removal_impact",
    "removal_impact_correspondence",
    "is_decisive",
]


def _check_sizes(n: int, *orders) -> None:
    for order in orders:
        if order.n != n:
            raise ValueError(f"{order.__class__.__name__} covers {order.n} alternatives, expected {n}.")


def max_set(menu: Menu, weak_order: WeakOrder) -> Menu:
    """
    Maximal elements of a menu under a weak order.

    Args:
        menu: Nonempty menu.
        weak_order: Weak order ``R``.

    Returns:
        Every ``x`` in the menu with ``xRy`` for all ``y`` in the menu.
    """
    # the best class meeting the menu is exactly the set of maximal elements
    for cls_ in weak_order.classes:
        top = menu & cls_
        if top:
            return top
    raise ValueError(f"Menu {menu:#b} is empty or outside the weak order.")


shortlist = max_set


def min_of(menu: Menu, linear_order: LinearOrder) -> Alternative:
    """Worst element of a menu under a linear order."""
    for alt in reversed(linear_order.ranking):
        if menu >> alt & 1:
            return alt
    raise ValueError(f"Menu {menu:#b} is empty or outside the linear order.")


def vetoed(menu: Menu, weak_order: WeakOrder, linear_order: LinearOrder) -> Optional[Alternative]:
    """Alternative removed by the second stage, or ``None`` when the shortlist is a singleton."""
    top = max_set(menu, weak_order)
    if top & (top - 1) == 0:
        return None
    return min_of(top, linear_order)


def mc_choice(menu: Menu, weak_order: WeakOrder, linear_order: LinearOrder) -> Menu:
    """
    Minimal-compromise choice from a menu.

    Args:
        menu: Nonempty menu.
        weak_order: First stage preference ``R``.
        linear_order: Second stage preference ``L``.

    Returns:
        ``max(A, R)`` when it is a singleton, otherwise ``max(A, R)`` without its ``L``-worst member.
    """
    top = max_set(menu, weak_order)
    if top & (top - 1) == 0:
        return top
    return top & ~(1 << min_of(top, linear_order))


def generate(weak_order: WeakOrder, linear_order: LinearOrder, universe: Universe) -> ChoiceCorrespondence:
    """Choice correspondence produced by the pair ``(R, L)`` on every menu of the universe."""
    _check_sizes(universe.n, weak_order, linear_order)
    return ChoiceCorrespondence.from_function(
        universe.n, lambda menu: mc_choice(menu, weak_order, linear_order)
    )


def generate_rational(weak_order: WeakOrder, universe: Universe) -> ChoiceCorrespondence:
    """Choice correspondence maximizing a single weak order on every menu."""
    _check_sizes(universe.n, weak_order)
    return ChoiceCorrespondence.from_function(universe.n, lambda menu: max_set(menu, weak_order))


def removal_impact(corr: ChoiceCorrespondence, menu: Menu) -> Menu:
    """
    Members of a menu whose removal changes the chosen set.

    A singleton menu maps to itself, since removing its only member leaves no menu to choose from. With this
    convention the chosen set is always contained in the result.
    """
    if menu & (menu - 1) == 0:
        return menu

    chosen = corr[menu]
    impact = 0
    for alt in members(menu):
        if corr[menu & ~(1 << alt)] != chosen:
            impact |= 1 << alt
    return impact


def removal_impact_correspondence(corr: ChoiceCorrespondence) -> ChoiceCorrespondence:
    """Removal impact evaluated on every menu; the result is itself a choice correspondence."""
    chosen = corr.table.tolist()
    impact = [0] * len(chosen)
    for menu in range(1, len(chosen)):
        if menu & (menu - 1) == 0:
            impact[menu] = menu
            continue
        for alt in members(menu):
            if chosen[menu & ~(1 << alt)] != chosen[menu]:
                impact[menu] |= 1 << alt
    return ChoiceCorrespondence(corr.n, np.asarray(impact, dtype=np.uint32))


def is_decisive(corr: ChoiceCorrespondence, menu: Menu) -> bool:
    """Whether a single alternative is chosen from the menu."""
    chosen = corr[menu]
    return chosen != 0 and chosen & (chosen - 1) == 0
