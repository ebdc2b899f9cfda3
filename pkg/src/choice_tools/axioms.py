"""
Consistency axioms for choice correspondences and the five conditions characterizing minimal-compromise choice.

Every checker scans menus in canonical order (size, then numeric value) and alternatives in ascending order,
returning the first violation found as a :class:`Witness`. Witnesses are therefore reproducible run to run.

.. code-block:: python

    from choice_tools import axioms, load_fixture

    dataset = load_fixture("lemma1")
    report = axioms.check_all(dataset.correspondence)
    print(report.to_text(dataset.universe))
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from .model import ChoiceCorrespondence, Universe, Witness
from .utils.bitmask import all_menus, full_menu, lowest, members, size, strict_inclusions, submenus, supermenus

__all__ = [
    "AXIOMS",
    "CONDITIONS",
    "Verdict",
    "AxiomReport",
    "check_alpha",
    "check_beta",
    "check_gamma",
    "check_nbc",
    "check_warp",
    "check_condition1",
    "check_condition2",
    "check_condition3",
    "check_condition4",
    "check_condition5",
    "check_all",
    "explain",
    "replays",
]

logger = logging.getLogger(__name__)

CONDITIONS = ("cond1", "cond2", "cond3", "cond4", "cond5")
AXIOMS = ("alpha", "beta", "gamma", "nbc", "warp") + CONDITIONS


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check; a failing verdict always carries its witness."""

    passed: bool
    witness: Optional[Witness] = None

    @classmethod
    def from_witness(cls, witness: Optional[Witness]) -> "Verdict":
        return cls(witness is None, witness)

    def __bool__(self) -> bool:
        return self.passed


def _bit(menu: int, alt: int) -> bool:
    return bool(menu >> alt & 1)


def _pair(x: int, y: int) -> int:
    return (1 << x) | (1 << y)


def _alpha_scan(table: list[int], n: int) -> Optional[Witness]:
    for outer in all_menus(n):
        chosen = table[outer]
        for inner in submenus(outer, proper=True):
            dropped = chosen & inner & ~table[inner]
            if dropped:
                return Witness("alpha", (inner, outer), (lowest(dropped),))
    return None


def _beta_scan(table: list[int], n: int) -> Optional[Witness]:
    for small in all_menus(n):
        chosen = table[small]
        if size(chosen) < 2:
            continue
        for large in supermenus(small, n):
            common = chosen & table[large]
            dropped = chosen & ~table[large]
            if common and dropped:
                return Witness("beta", (small, large), (lowest(dropped), lowest(common)))
    return None


def _gamma_scan(table: list[int], n: int) -> Optional[Witness]:
    menus = all_menus(n)
    for idx, first in enumerate(menus):
        for second in menus[idx + 1 :]:
            both = table[first] & table[second]
            if not both:
                continue
            union = first | second
            dropped = both & ~table[union]
            if dropped:
                return Witness("gamma", (first, second, union), (lowest(dropped),))
    return None


def _nbc_scan(table: list[int], n: int) -> Optional[Witness]:
    for x in range(n):
        for y in range(n):
            if y == x or not _bit(table[_pair(x, y)], x):
                continue
            for z in range(n):
                if z in (x, y) or not _bit(table[_pair(y, z)], y):
                    continue
                if not _bit(table[_pair(x, z)], x):
                    return Witness("nbc", (_pair(x, y), _pair(y, z), _pair(x, z)), (x, y, z))
    return None


def _warp_scan(table: list[int], n: int) -> Optional[Witness]:
    menus = all_menus(n)
    for first in menus:
        for second in menus:
            common = first & second
            chosen_first = table[first] & common
            chosen_second = table[second] & common
            if not (chosen_first and chosen_second):
                continue
            dropped = chosen_first & ~table[second]
            if dropped:
                return Witness("warp", (first, second), (lowest(dropped), lowest(chosen_second)))
    return None


def _condition1_scan(table: list[int], n: int, kind: str) -> Optional[Witness]:
    for small, large in strict_inclusions(n):
        kept = table[large] & small
        if not kept:
            continue
        dropped = table[small] & ~table[large]
        if dropped:
            return Witness(kind, (small, large), (lowest(dropped), lowest(kept)))
    return None


def check_alpha(corr: ChoiceCorrespondence) -> Verdict:
    """
    Contraction consistency: if ``x`` is chosen from ``A`` and ``x`` is in ``B``, a proper subset of ``A``, then
    ``x`` is chosen from ``B``. Witness menus are ``(B, A)``, alternatives ``(x,)``.
    """
    return Verdict.from_witness(_alpha_scan(corr.table.tolist(), corr.n))


def check_beta(corr: ChoiceCorrespondence) -> Verdict:
    """
    Expansion consistency: if ``x, y`` are both chosen from ``A``, ``A`` is a proper subset of ``B`` and ``y`` is
    chosen from ``B``, then so is ``x``. Witness menus are ``(A, B)``, alternatives ``(x, y)``.
    """
    return Verdict.from_witness(_beta_scan(corr.table.tolist(), corr.n))


def check_gamma(corr: ChoiceCorrespondence) -> Verdict:
    """
    If ``x`` is chosen from both ``A`` and ``B``, it is chosen from their union. Witness menus are
    ``(A, B, A | B)``, alternatives ``(x,)``.
    """
    return Verdict.from_witness(_gamma_scan(corr.table.tolist(), corr.n))


def check_nbc(corr: ChoiceCorrespondence) -> Verdict:
    """
    No binary cycles: ``x`` chosen from ``{x,y}`` and ``y`` chosen from ``{y,z}`` imply ``x`` chosen from
    ``{x,z}``. Witness alternatives are ``(x, y, z)``.
    """
    return Verdict.from_witness(_nbc_scan(corr.table.tolist(), corr.n))


def check_warp(corr: ChoiceCorrespondence) -> Verdict:
    """
    Weak axiom of revealed preference: if ``x, y`` lie in both ``A`` and ``B``, ``x`` is chosen from ``A`` and
    ``y`` from ``B``, then ``x`` is chosen from ``B``. Witness menus are ``(A, B)``, alternatives ``(x, y)``.
    """
    return Verdict.from_witness(_warp_scan(corr.table.tolist(), corr.n))


def check_condition1(corr: ChoiceCorrespondence) -> Verdict:
    """
    If ``x, y`` lie in ``A``, a proper subset of ``B``, ``x`` is chosen from ``A`` and ``y`` from ``B``, then
    ``x`` is chosen from ``B``. Witness menus are ``(A, B)``, alternatives ``(x, y)``.
    """
    return Verdict.from_witness(_condition1_scan(corr.table.tolist(), corr.n, "cond1"))


def check_condition2(corr: ChoiceCorrespondence) -> Verdict:
    """Condition 1 applied to the removal-impact map in place of the correspondence."""
    impact = corr.removal_impact_table
    return Verdict.from_witness(_condition1_scan(impact.table.tolist(), corr.n, "cond2"))


def check_condition3(corr: ChoiceCorrespondence) -> Verdict:
    """Every nonsingleton menu leaves something unchosen. Witness menus are ``(A,)``."""
    for menu, chosen in corr.items():
        if size(menu) > 1 and chosen == menu:
            return Verdict.from_witness(Witness("cond3", (menu,)))
    return Verdict(True)


def check_condition4(corr: ChoiceCorrespondence) -> Verdict:
    """
    If ``x`` is unchosen in ``A`` but chosen once ``y`` is added, then ``y`` is not chosen from ``A | {y}``.
    Witness menus are ``(A, A | {y})``, alternatives ``(x, y)``.
    """
    table = corr.table.tolist()
    universe = full_menu(corr.n)
    for menu in all_menus(corr.n):
        unchosen = menu & ~table[menu]
        if not unchosen:
            continue
        for y in members(universe & ~menu):
            grown = menu | 1 << y
            chosen = table[grown]
            jumped = unchosen & chosen
            if _bit(chosen, y) and jumped:
                return Verdict.from_witness(Witness("cond4", (menu, grown), (lowest(jumped), y)))
    return Verdict(True)


def check_condition5(corr: ChoiceCorrespondence) -> Verdict:
    """
    For every menu ``A`` and every nonsingleton ``B`` within the removal impact of ``A``, exactly one member of
    ``B`` goes unchosen in ``B``. Witness menus are ``(A, B)``.
    """
    table = corr.table.tolist()
    impact = corr.removal_impact_table.table.tolist()
    for menu in all_menus(corr.n):
        reach = impact[menu]
        if size(reach) < 2:
            continue
        for sub in submenus(reach):
            if size(sub) > 1 and size(sub & ~table[sub]) != 1:
                return Verdict.from_witness(Witness("cond5", (menu, sub)))
    return Verdict(True)


CHECKS: dict[str, Callable[[ChoiceCorrespondence], Verdict]] = {
    "alpha": check_alpha,
    "beta": check_beta,
    "gamma": check_gamma,
    "nbc": check_nbc,
    "warp": check_warp,
    "cond1": check_condition1,
    "cond2": check_condition2,
    "cond3": check_condition3,
    "cond4": check_condition4,
    "cond5": check_condition5,
}


@dataclass(frozen=True)
class AxiomReport:
    """Verdicts for every axiom and condition, keyed by name in :data:`AXIOMS` order."""

    verdicts: dict[str, Verdict]

    def __getitem__(self, name: str) -> Verdict:
        return self.verdicts[name]

    @property
    def conditions_pass(self) -> bool:
        """Whether Conditions 1 to 5 all hold, the characterization of minimal-compromise choice."""
        return all(self.verdicts[name].passed for name in CONDITIONS)

    @property
    def failures(self) -> list[str]:
        return [name for name, verdict in self.verdicts.items() if not verdict.passed]

    def to_dict(self, universe: Universe) -> dict:
        return {
            "axioms": {
                name: {
                    "pass": verdict.passed,
                    "witness": None if verdict.witness is None else verdict.witness.to_dict(universe),
                }
                for name, verdict in self.verdicts.items()
            }
        }

    def to_text(self, universe: Universe) -> str:
        lines = []
        for name, verdict in self.verdicts.items():
            if verdict.passed:
                lines.append(f"{name}: pass")
            else:
                lines.append(f"{name}: FAIL - {explain(verdict.witness, universe)}")
        return "\n".join(lines)


def check_all(corr: ChoiceCorrespondence, workers: Optional[int] = None) -> AxiomReport:
    """
    Run every check against a correspondence.

    Args:
        corr: Correspondence to check.
        workers: If greater than one, run the checks on a thread pool of this size. The report is the same
            either way.

    Returns:
        Report with one verdict per axiom and condition.
    """
    # compute once up front so the threads share the cached table
    corr.removal_impact_table

    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda name: CHECKS[name](corr), AXIOMS))
    else:
        results = [CHECKS[name](corr) for name in AXIOMS]

    report = AxiomReport(dict(zip(AXIOMS, results)))
    logger.debug(f"Checked correspondence over {corr.n} alternatives, failures: {report.failures}")
    return report


def explain(witness: Witness, universe: Universe) -> str:
    """Readable sentence describing a witness using the universe labels."""
    fmt = universe.format_menu
    lbl = universe.labels
    menus, alts = witness.menus, witness.alternatives

    if witness.kind == "alpha":
        return f"{lbl[alts[0]]} is chosen from {fmt(menus[1])} but not from its subset {fmt(menus[0])}"
    if witness.kind == "beta":
        x, y = (lbl[a] for a in alts)
        return (
            f"{x} and {y} are both chosen from {fmt(menus[0])}, {y} is chosen from {fmt(menus[1])} "
            f"but {x} is not"
        )
    if witness.kind == "gamma":
        return (
            f"{lbl[alts[0]]} is chosen from {fmt(menus[0])} and from {fmt(menus[1])} "
            f"but not from {fmt(menus[2])}"
        )
    if witness.kind == "nbc":
        x, y, z = (lbl[a] for a in alts)
        return f"{x} is chosen over {y}, {y} over {z}, but {x} is not chosen from {fmt(menus[2])}"
    if witness.kind == "warp":
        x, y = (lbl[a] for a in alts)
        return (
            f"{x} is chosen from {fmt(menus[0])} and {y} from {fmt(menus[1])}, both menus hold both, "
            f"but {x} is not chosen from {fmt(menus[1])}"
        )
    if witness.kind in ("cond1", "cond2"):
        verb = "chosen from" if witness.kind == "cond1" else "removal-impacting in"
        x, y = (lbl[a] for a in alts)
        return (
            f"{x} is {verb} {fmt(menus[0])}, {y} is {verb} {fmt(menus[1])}, "
            f"but {x} is not {verb} {fmt(menus[1])}"
        )
    if witness.kind == "cond3":
        return f"every alternative of {fmt(menus[0])} is chosen"
    if witness.kind == "cond4":
        x, y = (lbl[a] for a in alts)
        return f"adding {y} to {fmt(menus[0])} brings {x} into the choice from {fmt(menus[1])} alongside {y}"
    if witness.kind == "cond5":
        return (
            f"{fmt(menus[1])} lies within the removal impact of {fmt(menus[0])} "
            f"but choice from it does not drop exactly one alternative"
        )
    return f"{witness.kind}: menus {[fmt(m) for m in menus]}, alternatives {[lbl[a] for a in alts]}"


def _proper_subset(small: int, large: int) -> bool:
    return small & ~large == 0 and small != large


def replays(corr: ChoiceCorrespondence, witness: Witness) -> bool:
    """
    Re-evaluate a witness against a correspondence.

    Returns:
        ``True`` if the recorded instance is a genuine violation of the named axiom or condition.
    """
    c = corr.__getitem__
    menus, alts = witness.menus, witness.alternatives
    kind = witness.kind

    if kind == "alpha":
        (inner, outer), (x,) = menus, alts
        return _proper_subset(inner, outer) and _bit(inner, x) and _bit(c(outer), x) and not _bit(c(inner), x)

    if kind == "beta":
        (small, large), (x, y) = menus, alts
        return (
            _proper_subset(small, large)
            and _bit(c(small), x)
            and _bit(c(small), y)
            and _bit(c(large), y)
            and not _bit(c(large), x)
        )

    if kind == "gamma":
        (first, second, union), (x,) = menus, alts
        return (
            union == first | second
            and _bit(c(first), x)
            and _bit(c(second), x)
            and not _bit(c(union), x)
        )

    if kind == "nbc":
        x, y, z = alts
        return (
            len({x, y, z}) == 3
            and _bit(c(_pair(x, y)), x)
            and _bit(c(_pair(y, z)), y)
            and not _bit(c(_pair(x, z)), x)
        )

    if kind == "warp":
        (first, second), (x, y) = menus, alts
        common = first & second
        return (
            _bit(common, x)
            and _bit(common, y)
            and _bit(c(first), x)
            and _bit(c(second), y)
            and not _bit(c(second), x)
        )

    if kind in ("cond1", "cond2"):
        table = corr if kind == "cond1" else corr.removal_impact_table
        (small, large), (x, y) = menus, alts
        return (
            _proper_subset(small, large)
            and _bit(small, y)
            and _bit(table[small], x)
            and _bit(table[large], y)
            and not _bit(table[large], x)
        )

    if kind == "cond3":
        (menu,) = menus
        return size(menu) > 1 and c(menu) == menu

    if kind == "cond4":
        (menu, grown), (x, y) = menus, alts
        return (
            not _bit(menu, y)
            and grown == menu | 1 << y
            and _bit(menu & ~c(menu), x)
            and _bit(c(grown), x)
            and _bit(c(grown), y)
        )

    if kind == "cond5":
        menu, sub = menus
        return (
            sub & ~corr.removal_impact_table[menu] == 0
            and size(sub) > 1
            and size(sub & ~c(sub)) != 1
        )

    raise ValueError(f'Unknown witness kind "{kind}".')
