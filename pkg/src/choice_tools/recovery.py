"""
Recover the preference pair behind a minimal-compromise correspondence.

The weak order is revealed from removal impact: ``x`` is weakly preferred to ``y`` when ``x`` impacts choice
in some menu containing ``y``. The linear order is revealed from doubletons: ``x`` is ranked above ``y`` when
``{x}`` is chosen from ``{x, y}``.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import axioms
from .engine import generate
from .errors import InternalDefectError, RelationDefectError
from .model import BinaryRelation, ChoiceCorrespondence, LinearOrder, Universe, WeakOrder, Witness
from .utils.bitmask import members

__all__ = ["RecoveryResult", "reveal_R", "reveal_L", "reveal_vetoes", "recover"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RecoveryResult:
    """
    Outcome of :func:`recover`.

    On success ``weak_order`` and ``linear_order`` regenerate the input on every menu. On failure ``condition``
    names the first violated condition and ``witness`` demonstrates it.
    """

    success: bool
    weak_order: Optional[WeakOrder] = None
    linear_order: Optional[LinearOrder] = None
    condition: Optional[str] = None
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.success

    @property
    def outcome(self) -> str:
        return "success" if self.success else "failure"


def reveal_R(corr: ChoiceCorrespondence) -> BinaryRelation:
    """
    Relation with ``xRy`` iff some menu ``A`` holds ``y`` and ``x`` is in the removal impact of ``A``.

    Nothing guarantees the result is complete or transitive unless the correspondence satisfies the conditions.
    """
    impact = corr.removal_impact_table
    reach = [0] * corr.n
    for menu, impacting in impact.items():
        for alt in members(impacting):
            reach[alt] |= menu

    holds = np.array([[bool(reach[x] >> y & 1) for y in range(corr.n)] for x in range(corr.n)], dtype=bool)
    return BinaryRelation(holds)


def reveal_L(corr: ChoiceCorrespondence) -> BinaryRelation:
    """
    Reflexive relation with ``xLy`` iff ``{x}`` is chosen from ``{x, y}``. Complete iff the correspondence is
    decisive on every doubleton.
    """
    holds = np.eye(corr.n, dtype=bool)
    for x in range(corr.n):
        for y in range(corr.n):
            if x != y and corr[(1 << x) | (1 << y)] == 1 << x:
                holds[x, y] = True
    return BinaryRelation(holds)


def reveal_vetoes(corr: ChoiceCorrespondence) -> BinaryRelation:
    """
    Partial ranking revealed by vetoes: ``x`` over ``y`` whenever ``x`` is chosen from some menu in which ``y``
    is unchosen yet impacts choice.

    An unchosen alternative whose removal changes choice must have been shortlisted and vetoed, so every chosen
    alternative of that menu beats it in the second stage. This only covers vetoes that leave a trace; it is not
    completed to a linear order.
    """
    impact = corr.removal_impact_table
    holds = np.eye(corr.n, dtype=bool)
    for menu, chosen in corr.items():
        for loser in members(impact[menu] & ~chosen):
            for winner in members(chosen):
                holds[winner, loser] = True
    return BinaryRelation(holds)


def recover(corr: ChoiceCorrespondence) -> RecoveryResult:
    """
    Recover a weak order and linear order generating the correspondence.

    Conditions 1 to 5 are checked first and the first failure is returned with its witness. Otherwise the
    revealed relations are converted to orders and the pair is regenerated and compared with the input menu by
    menu.

    Args:
        corr: Correspondence over every menu of the universe.

    Returns:
        Recovery result, a failure only when a condition is violated.

    Raises:
        InternalDefectError: The conditions hold but the revealed relations are not orders or the regenerated
            table differs. The characterization rules this out, so it signals a bug.
    """
    checks = (
        axioms.check_condition1,
        axioms.check_condition2,
        axioms.check_condition3,
        axioms.check_condition4,
        axioms.check_condition5,
    )
    for name, check in zip(axioms.CONDITIONS, checks):
        verdict = check(corr)
        if not verdict.passed:
            logger.debug(f"Recovery stopped at {name}, witness {verdict.witness}")
            return RecoveryResult(False, condition=name, witness=verdict.witness)

    try:
        weak_order = WeakOrder.from_relation(reveal_R(corr))
        linear_order = LinearOrder.from_relation(reveal_L(corr))
    except RelationDefectError as err:
        raise InternalDefectError(
            f"Conditions 1-5 hold yet the revealed {err.prop} check failed with witness {err.witness}."
        ) from err

    regenerated = generate(weak_order, linear_order, Universe.from_size(corr.n))
    mismatch = regenerated.first_difference(corr)
    if mismatch is not None:
        raise InternalDefectError(
            f"Recovered pair chooses {regenerated[mismatch]:#b} from menu {mismatch:#b}, "
            f"the input chooses {corr[mismatch]:#b}."
        )

    return RecoveryResult(True, weak_order=weak_order, linear_order=linear_order)
