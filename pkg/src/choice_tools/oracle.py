"""
Brute-force ground truth on small universes.

Enumerates every weak order, every linear order and every choice correspondence, decides representability by
exhaustive search over all preference pairs, and sweeps censuses to confirm that the five conditions, the
constructive recovery and the exhaustive search always agree.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional, Sequence, Union

import numpy as np
import pandas as pd
from tqdm import tqdm

from . import axioms
from .engine import generate, generate_rational
from .errors import InternalDefectError
from .model import ChoiceCorrespondence, LinearOrder, Universe, WeakOrder
from .recovery import recover
from .utils.bitmask import all_menus, full_menu, size, submenus

__all__ = [
    "MAX_CENSUS_N",
    "MAX_BRUTE_FORCE_N",
    "Discrepancy",
    "SweepReport",
    "ordered_partition_count",
    "census_size",
    "enumerate_weak_orders",
    "enumerate_linear_orders",
    "enumerate_correspondences",
    "correspondence_at",
    "brute_force_representations",
    "brute_force_rationalize",
    "theorem1_sweep",
    "census_frame",
]

logger = logging.getLogger(__name__)

# largest universe whose census can be streamed or sampled
MAX_CENSUS_N = 4

# largest universe whose (R, L) pairs are indexed for exhaustive search
MAX_BRUTE_FORCE_N = 5

# largest universe swept exhaustively without opting into a long run
DEFAULT_MAX_EXHAUSTIVE_N = 3


@lru_cache(maxsize=None)
def ordered_partition_count(n: int) -> int:
    """Number of ordered set partitions of ``n`` elements, by recursion on the size of the best class."""
    if n == 0:
        return 1
    return sum(math.comb(n, k) * ordered_partition_count(n - k) for k in range(1, n + 1))


def _ordered_partitions(rest: int) -> Iterator[tuple[int, ...]]:
    if rest == 0:
        yield ()
        return
    for first in submenus(rest):
        for tail in _ordered_partitions(rest & ~first):
            yield (first,) + tail


def enumerate_weak_orders(n: int) -> Iterator[WeakOrder]:
    """Every weak order on ``n`` alternatives, as ordered partitions, each exactly once."""
    for classes in _ordered_partitions(full_menu(n)):
        yield WeakOrder(classes, n)


def enumerate_linear_orders(n: int) -> Iterator[LinearOrder]:
    """Every linear order on ``n`` alternatives, ``n!`` in all, in lexicographic ranking order."""
    for ranking in permutations(range(n)):
        yield LinearOrder(ranking)


@lru_cache(maxsize=None)
def _census_layout(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Mixed-radix layout: each nonsingleton menu with its candidate choices, first menu least significant."""
    return tuple((menu, tuple(submenus(menu))) for menu in all_menus(n) if size(menu) > 1)


@lru_cache(maxsize=None)
def census_size(n: int) -> int:
    """Number of choice correspondences on ``n`` alternatives, the product of ``2**|A| - 1`` over menus."""
    return math.prod((1 << size(menu)) - 1 for menu in all_menus(n) if size(menu) > 1)


def _check_census_n(n: int) -> None:
    if not 1 <= n <= MAX_CENSUS_N:
        raise ValueError(f"Censuses are supported for 1 to {MAX_CENSUS_N} alternatives, not {n}.")


@lru_cache(maxsize=None)
def _singleton_table(n: int) -> np.ndarray:
    table = np.zeros(1 << n, dtype=np.uint32)
    for alt in range(n):
        table[1 << alt] = 1 << alt
    table.flags.writeable = False
    return table


def _base_table(n: int) -> np.ndarray:
    return _singleton_table(n).copy()


def _digits(n: int, index: int) -> list[int]:
    total = census_size(n)
    if not 0 <= index < total:
        raise ValueError(f"Census index {index} is outside 0..{total - 1}.")
    digits = []
    for _, options in _census_layout(n):
        index, digit = divmod(index, len(options))
        digits.append(digit)
    return digits


def correspondence_at(n: int, index: int) -> ChoiceCorrespondence:
    """Decode a census position into its correspondence."""
    _check_census_n(n)
    table = _base_table(n)
    for digit, (menu, options) in zip(_digits(n, index), _census_layout(n)):
        table[menu] = options[digit]
    return ChoiceCorrespondence(n, table)


def enumerate_correspondences(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[ChoiceCorrespondence]:
    """
    Stream the census of correspondences on ``n`` alternatives.

    Args:
        n: Universe size, at most :data:`MAX_CENSUS_N`.
        start: First census position to yield, for restarting or sharding.
        stop: Position to stop before. Defaults to the end of the census.
    """
    _check_census_n(n)
    total = census_size(n)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return

    layout = _census_layout(n)
    digits = _digits(n, start)
    table = _base_table(n)
    for digit, (menu, options) in zip(digits, layout):
        table[menu] = options[digit]

    for _ in range(start, stop):
        yield ChoiceCorrespondence(n, table)

        # odometer increment
        for pos, (menu, options) in enumerate(layout):
            digits[pos] += 1
            if digits[pos] < len(options):
                table[menu] = options[digits[pos]]
                break
            digits[pos] = 0
            table[menu] = options[0]


def _check_brute_force_n(n: int) -> None:
    if not 1 <= n <= MAX_BRUTE_FORCE_N:
        raise ValueError(f"Exhaustive search is supported for 1 to {MAX_BRUTE_FORCE_N} alternatives, not {n}.")


@lru_cache(maxsize=None)
def _representation_index(n: int) -> dict[bytes, list[tuple[WeakOrder, LinearOrder]]]:
    universe = Universe.from_size(n)
    index: dict[bytes, list[tuple[WeakOrder, LinearOrder]]] = {}
    linear_orders = list(enumerate_linear_orders(n))
    for weak_order in enumerate_weak_orders(n):
        for linear_order in linear_orders:
            corr = generate(weak_order, linear_order, universe)
            index.setdefault(corr.key, []).append((weak_order, linear_order))
    logger.debug(f"Indexed {len(index):,} distinct tables from every (R, L) pair on {n} alternatives")
    return index


@lru_cache(maxsize=None)
def _rationalization_index(n: int) -> dict[bytes, list[WeakOrder]]:
    universe = Universe.from_size(n)
    index: dict[bytes, list[WeakOrder]] = {}
    for weak_order in enumerate_weak_orders(n):
        index.setdefault(generate_rational(weak_order, universe).key, []).append(weak_order)
    return index


def brute_force_representations(corr: ChoiceCorrespondence) -> list[tuple[WeakOrder, LinearOrder]]:
    """
    Every ``(R, L)`` pair generating the correspondence, found by exhaustive search. An empty list means the
    correspondence has no minimal-compromise representation.
    """
    _check_brute_force_n(corr.n)
    pairs = list(_representation_index(corr.n).get(corr.key, []))
    if not pairs:
        return pairs

    # every pair found must regenerate the table exactly
    universe = Universe.from_size(corr.n)
    for weak_order, linear_order in pairs:
        if generate(weak_order, linear_order, universe) != corr:
            raise InternalDefectError(f"Indexed pair {weak_order}, {linear_order} does not regenerate its table.")

    return pairs


def brute_force_rationalize(corr: ChoiceCorrespondence) -> list[WeakOrder]:
    """Every weak order whose maximization reproduces the correspondence."""
    _check_brute_force_n(corr.n)
    return list(_rationalization_index(corr.n).get(corr.key, []))


@dataclass(frozen=True)
class Discrepancy:
    """A census table on which the condition check, exhaustive search and recovery disagree."""

    index: int
    conditions: bool
    representable: bool
    recovered: bool
    detail: str = ""


@dataclass(frozen=True)
class SweepReport:
    """
    Counts from a census sweep. The biconditional is confirmed on the scanned tables exactly when
    ``discrepancies`` is empty.
    """

    n: int
    mode: str
    seed: Optional[int] = None
    scanned: int = 0
    conditions_passing: int = 0
    representable: int = 0
    recovered: int = 0
    discrepancies: tuple[Discrepancy, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return len(self.discrepancies) == 0

    def merge(self, other: "SweepReport") -> "SweepReport":
        """Combine reports from two shards of the same sweep."""
        if (self.n, self.mode, self.seed) != (other.n, other.mode, other.seed):
            raise ValueError("Only reports from the same sweep can be merged.")
        return SweepReport(
            n=self.n,
            mode=self.mode,
            seed=self.seed,
            scanned=self.scanned + other.scanned,
            conditions_passing=self.conditions_passing + other.conditions_passing,
            representable=self.representable + other.representable,
            recovered=self.recovered + other.recovered,
            discrepancies=tuple(sorted(self.discrepancies + other.discrepancies, key=lambda d: d.index)),
        )

    def to_dict(self) -> dict:
        out = asdict(self)
        out["discrepancies"] = [asdict(d) for d in self.discrepancies]
        out["ok"] = self.ok
        return out

    def to_frame(self) -> pd.DataFrame:
        """Single row summary, handy for logging with ``format_pandas_for_logging``."""
        row = {k: v for k, v in self.to_dict().items() if k != "discrepancies"}
        row["discrepancies"] = len(self.discrepancies)
        return pd.DataFrame([row])


def _evaluate(corr: ChoiceCorrespondence, index: int) -> tuple[bool, bool, bool, Optional[Discrepancy]]:
    representable = len(brute_force_representations(corr)) > 0

    # recover checks Conditions 1-5 first and only raises once all of them hold
    detail = ""
    try:
        conditions = recovered = recover(corr).success
    except InternalDefectError as err:
        conditions, recovered, detail = True, False, str(err)

    discrepancy = None
    if detail or not conditions == representable == recovered:
        discrepancy = Discrepancy(index, conditions, representable, recovered, detail)
        logger.debug(f"Discrepancy at census index {index}: {discrepancy}")

    return conditions, representable, recovered, discrepancy


def _sweep_shard(
    n: int, mode: str, seed: Optional[int], positions: Union[range, Sequence[int]], progress: bool = False
) -> SweepReport:
    """Sweep one shard: a contiguous range is streamed, an explicit list of positions is decoded one by one."""
    if isinstance(positions, range):
        stream = zip(positions, enumerate_correspondences(n, positions.start, positions.stop))
    else:
        stream = ((int(idx), correspondence_at(n, int(idx))) for idx in positions)

    if progress:
        stream = tqdm(stream, total=len(positions), desc=f"sweep n={n}")

    counts = [0, 0, 0, 0]
    found = []
    for index, corr in stream:
        conditions, representable, recovered, discrepancy = _evaluate(corr, index)
        counts[0] += 1
        counts[1] += conditions
        counts[2] += representable
        counts[3] += recovered
        if discrepancy is not None:
            found.append(discrepancy)

    return SweepReport(n, mode, seed, *counts, discrepancies=tuple(found))


def theorem1_sweep(
    n: int,
    mode: str = "exhaustive",
    count: Optional[int] = None,
    seed: Optional[int] = None,
    shards: int = 1,
    long_running: bool = False,
    max_exhaustive_n: int = DEFAULT_MAX_EXHAUSTIVE_N,
    progress: bool = False,
) -> SweepReport:
    """
    Confirm that the five conditions, exhaustive search and recovery agree on a census.

    Args:
        n: Universe size.
        mode: ``exhaustive`` to scan the whole census, ``sample`` to scan ``count`` seeded random tables.
        count: Number of tables drawn in ``sample`` mode.
        seed: Seed for ``sample`` mode, recorded in the report.
        shards: Number of worker processes; the report does not depend on it.
        long_running: Required to sweep exhaustively beyond ``max_exhaustive_n`` alternatives.
        max_exhaustive_n: Largest universe swept exhaustively without ``long_running``.
        progress: Show a progress bar when running in a single process.

    Returns:
        Merged report for the whole sweep.
    """
    _check_census_n(n)
    total = census_size(n)
    shards = max(1, int(shards))

    if mode == "exhaustive":
        if n > max_exhaustive_n and not long_running:
            raise ValueError(
                f"An exhaustive sweep of {total:,} tables on {n} alternatives is long running; opt in explicitly."
            )
        seed = None
        bounds = np.linspace(0, total, shards + 1, dtype=np.int64)
        parts: list = [range(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:])]
    elif mode == "sample":
        if count is None or count < 1:
            raise ValueError("A sampled sweep needs a positive count.")
        seed = 0 if seed is None else int(seed)
        rng = np.random.default_rng(seed)
        drawn = rng.integers(0, total, size=count, dtype=np.int64)
        parts = [chunk.tolist() for chunk in np.array_split(drawn, shards)]
    else:
        raise ValueError(f'Sweep mode must be "exhaustive" or "sample", not "{mode}".')

    logger.info(f"Sweeping {mode} census on {n} alternatives ({total:,} tables) across {shards} shard(s)")

    report = SweepReport(n, mode, seed)
    if shards == 1:
        report = report.merge(_sweep_shard(n, mode, seed, parts[0], progress=progress))
    else:
        with ProcessPoolExecutor(max_workers=shards) as pool:
            futures = [pool.submit(_sweep_shard, n, mode, seed, part) for part in parts]
            for future in futures:
                report = report.merge(future.result())

    logger.info(
        f"Scanned {report.scanned:,} tables: {report.conditions_passing:,} pass Conditions 1-5, "
        f"{report.representable:,} representable, {report.recovered:,} recovered, "
        f"{len(report.discrepancies)} discrepancies"
    )
    return report


def census_frame(n: int) -> pd.DataFrame:
    """
    Every correspondence on ``n`` alternatives with its verdicts.

    Columns are ``index``, one boolean per axiom and condition, ``representable`` (exhaustive search found a
    preference pair) and ``rationalizable`` (some weak order is maximized).
    """
    if n > DEFAULT_MAX_EXHAUSTIVE_N:
        raise ValueError(f"Census frames are built for at most {DEFAULT_MAX_EXHAUSTIVE_N} alternatives, not {n}.")

    rows = []
    for index, corr in enumerate(enumerate_correspondences(n)):
        report = axioms.check_all(corr)
        row = {"index": index}
        row.update({name: verdict.passed for name, verdict in report.verdicts.items()})
        row["representable"] = len(brute_force_representations(corr)) > 0
        row["rationalizable"] = len(brute_force_rationalize(corr)) > 0
        rows.append(row)

    return pd.DataFrame(rows)
