"""
Domain types for alternatives, menus, binary relations, orders and choice correspondences.

Menus are plain integers used as bit vectors: alternative ``i`` belongs to a menu when bit ``i`` is set. Every
type here is immutable once constructed, so values can be shared freely between workers.
"""

import string
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence, Union

import numpy as np

from .errors import RelationDefectError
from .utils.bitmask import all_menus, full_menu, members, size, to_menu

__all__ = [
    "MAX_ALTERNATIVES",
    "Alternative",
    "Menu",
    "Universe",
    "RelationCheck",
    "BinaryRelation",
    "WeakOrder",
    "LinearOrder",
    "ChoiceCorrespondence",
    "Witness",
    "as_relation",
    "strict_part",
    "symmetric_part",
    "validate_menu",
]

MAX_ALTERNATIVES = 16

Alternative = int
Menu = int


def validate_menu(menu: Menu, n: int) -> Menu:
    """
    Ensure a bit vector is a valid menu over ``n`` alternatives.

    Args:
        menu: Bit vector to check.
        n: Universe size.

    Returns:
        The menu, unchanged.
    """
    if not isinstance(menu, (int, np.integer)) or menu <= 0:
        raise ValueError(f"A menu must be a nonempty bit vector, not {menu!r}.")
    if int(menu) & ~full_menu(n):
        raise ValueError(f"Menu {int(menu):#b} refers to alternatives outside a universe of {n}.")
    return int(menu)


@dataclass(frozen=True)
class Universe:
    """
    Finite set of labelled alternatives. Alternative ``i`` is displayed as ``labels[i]``.
    """

    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)

        if not 1 <= len(labels) <= MAX_ALTERNATIVES:
            raise ValueError(
                f"A universe must hold between 1 and {MAX_ALTERNATIVES} alternatives, not {len(labels)}."
            )
        if any(not isinstance(lbl, str) or len(lbl) == 0 for lbl in labels):
            raise ValueError("Alternative labels must be nonempty strings.")
        if len(set(labels)) != len(labels):
            raise ValueError(f"Alternative labels must be distinct: {list(labels)}")

    @classmethod
    def from_size(cls, n: int) -> "Universe":
        """Universe of ``n`` alternatives labelled ``a``, ``b``, ``c``..."""
        return cls(tuple(string.ascii_lowercase[:n]))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_menu(self) -> Menu:
        return full_menu(self.n)

    def menus(self) -> tuple[Menu, ...]:
        """All nonempty menus in canonical order."""
        return all_menus(self.n)

    def index(self, label: str) -> Alternative:
        """Position of a label in the universe."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f'Unknown label "{label}", expected one of {list(self.labels)}.') from None

    def menu(self, *labels: str) -> Menu:
        """Bit vector for a menu given by labels, ``universe.menu("x", "y")``."""
        if len(labels) == 0:
            raise ValueError("A menu must contain at least one alternative.")
        return to_menu(self.index(lbl) for lbl in labels)

    def labels_of(self, menu: Menu) -> list[str]:
        """Labels of the members of a menu, in universe order."""
        return [self.labels[i] for i in members(menu)]

    def format_menu(self, menu: Menu) -> str:
        return "{" + ",".join(self.labels_of(menu)) + "}"


class RelationCheck(NamedTuple):
    """Verdict for a relation property plus the pair or triple violating it."""

    holds: bool
    witness: Optional[tuple[int, ...]] = None


@dataclass(frozen=True, eq=False)
class BinaryRelation:
    """
    Binary relation on ``{0, ..., n-1}`` stored as an ``n x n`` boolean table, ``holds[x, y]`` reading as
    "x is related to y".
    """

    holds: np.ndarray

    def __post_init__(self):
        arr = np.array(self.holds, dtype=bool, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"A relation table must be square and nonempty, got shape {arr.shape}.")
        arr.setflags(write=False)
        object.__setattr__(self, "holds", arr)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "BinaryRelation":
        """Build a relation holding exactly on the given pairs."""
        arr = np.zeros((n, n), dtype=bool)
        for x, y in pairs:
            arr[x, y] = True
        return cls(arr)

    @property
    def n(self) -> int:
        return self.holds.shape[0]

    def __call__(self, x: Alternative, y: Alternative) -> bool:
        return bool(self.holds[x, y])

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryRelation) and np.array_equal(self.holds, other.holds)

    def __hash__(self) -> int:
        return hash((self.n, self.holds.tobytes()))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__} (n={self.n}, pairs={self.pairs()})"

    def pairs(self) -> list[tuple[int, int]]:
        """Related pairs in row-major order."""
        return [(int(x), int(y)) for x, y in np.argwhere(self.holds)]

    def completeness(self) -> RelationCheck:
        """Every ``x, y`` (including ``x == y``) has ``xRy`` or ``yRx``."""
        missing = np.argwhere(~(self.holds | self.holds.T))
        if len(missing):
            x, y = missing[0]
            return RelationCheck(False, (int(x), int(y)))
        return RelationCheck(True)

    def transitivity(self) -> RelationCheck:
        """``xRy`` and ``yRz`` imply ``xRz``; the witness is ``(x, y, z)``."""
        h = self.holds.astype(np.int64)
        broken = np.argwhere(((h @ h) > 0) & ~self.holds)
        if len(broken):
            x, z = (int(v) for v in broken[0])
            y = int(np.flatnonzero(self.holds[x] & self.holds[:, z])[0])
            return RelationCheck(False, (x, y, z))
        return RelationCheck(True)

    def antisymmetry(self) -> RelationCheck:
        """``xRy`` and ``yRx`` imply ``x == y``."""
        both = np.argwhere(self.holds & self.holds.T & ~np.eye(self.n, dtype=bool))
        if len(both):
            x, y = both[0]
            return RelationCheck(False, (int(x), int(y)))
        return RelationCheck(True)

    def is_weak_order(self) -> bool:
        return self.completeness().holds and self.transitivity().holds

    def is_linear_order(self) -> bool:
        return self.is_weak_order() and self.antisymmetry().holds

    def strict_part(self) -> "BinaryRelation":
        """``xPy`` iff ``xRy`` and not ``yRx``."""
        return BinaryRelation(self.holds & ~self.holds.T)

    def symmetric_part(self) -> "BinaryRelation":
        """``xIy`` iff ``xRy`` and ``yRx``."""
        return BinaryRelation(self.holds & self.holds.T)


def strict_part(rel: BinaryRelation) -> BinaryRelation:
    """Asymmetric part of a relation."""
    return rel.strict_part()


def symmetric_part(rel: BinaryRelation) -> BinaryRelation:
    """Symmetric (indifference) part of a relation."""
    return rel.symmetric_part()


def _require(check: RelationCheck, prop: str, kind: str) -> None:
    if not check.holds:
        raise RelationDefectError(
            f"Relation is not {prop}, so it is not a {kind}; witness {check.witness}.",
            prop=prop,
            witness=check.witness,
        )


@dataclass(frozen=True)
class WeakOrder:
    """
    Weak order stored as an ordered partition: ``classes`` holds the indifference classes as menu bit vectors,
    best class first.
    """

    classes: tuple[Menu, ...]
    n: int

    def __post_init__(self):
        classes = tuple(int(cls_) for cls_ in self.classes)
        object.__setattr__(self, "classes", classes)

        if not 1 <= self.n <= MAX_ALTERNATIVES:
            raise ValueError(f"A weak order needs 1 to {MAX_ALTERNATIVES} alternatives, not {self.n}.")

        seen = 0
        for cls_ in classes:
            if cls_ <= 0:
                raise ValueError("Indifference classes must be nonempty.")
            if cls_ & seen:
                raise ValueError(f"Indifference classes overlap on {members(cls_ & seen)}.")
            seen |= cls_

        if seen != full_menu(self.n):
            raise ValueError(
                f"Indifference classes must cover all {self.n} alternatives, missing "
                f"{members(full_menu(self.n) & ~seen)} or holding extras {members(seen & ~full_menu(self.n))}."
            )

    @classmethod
    def from_classes(cls, classes: Sequence[Iterable[Alternative]]) -> "WeakOrder":
        """Build from lists of alternative indices, ``WeakOrder.from_classes([[1], [0], [2]])``."""
        masks = tuple(to_menu(c) for c in classes)
        union = 0
        for m in masks:
            union |= m
        return cls(masks, union.bit_length())

    @classmethod
    def total_indifference(cls, n: int) -> "WeakOrder":
        """Single indifference class holding every alternative."""
        return cls((full_menu(n),), n)

    @cached_property
    def rank(self) -> tuple[int, ...]:
        """Class index of every alternative; lower is better."""
        rank = [0] * self.n
        for idx, cls_ in enumerate(self.classes):
            for alt in members(cls_):
                rank[alt] = idx
        return tuple(rank)

    def weakly_prefers(self, x: Alternative, y: Alternative) -> bool:
        return self.rank[x] <= self.rank[y]

    def as_relation(self) -> BinaryRelation:
        rank = np.array(self.rank)
        return BinaryRelation(rank[:, None] <= rank[None, :])

    @classmethod
    def from_relation(cls, rel: BinaryRelation) -> "WeakOrder":
        """
        Extract the ordered partition from a complete and transitive relation.

        Indifference classes are the groups of mutually related alternatives, ordered by the strict part. Raises
        :class:`RelationDefectError` if the relation is not a weak order.
        """
        _require(rel.completeness(), "complete", "weak order")
        _require(rel.transitivity(), "transitive", "weak order")

        # in a weak order, the better the class, the more alternatives each member is related to
        score = rel.holds.sum(axis=1)
        classes = {}
        for alt in range(rel.n):
            classes.setdefault(int(score[alt]), []).append(alt)

        ordered = [classes[key] for key in sorted(classes, reverse=True)]
        return cls(tuple(to_menu(c) for c in ordered), rel.n)


@dataclass(frozen=True)
class LinearOrder:
    """Linear order stored as a ranking, a permutation of ``{0, ..., n-1}`` from best to worst."""

    ranking: tuple[Alternative, ...]

    def __post_init__(self):
        ranking = tuple(int(alt) for alt in self.ranking)
        object.__setattr__(self, "ranking", ranking)

        if not 1 <= len(ranking) <= MAX_ALTERNATIVES:
            raise ValueError(f"A linear order needs 1 to {MAX_ALTERNATIVES} alternatives, not {len(ranking)}.")
        if sorted(ranking) != list(range(len(ranking))):
            raise ValueError(f"Ranking {list(ranking)} is not a permutation of 0..{len(ranking) - 1}.")

    @property
    def n(self) -> int:
        return len(self.ranking)

    @cached_property
    def position(self) -> tuple[int, ...]:
        """Position of every alternative in the ranking; 0 is best."""
        pos = [0] * self.n
        for idx, alt in enumerate(self.ranking):
            pos[alt] = idx
        return tuple(pos)

    def prefers(self, x: Alternative, y: Alternative) -> bool:
        """Weak comparison, true when ``x`` is ranked at or above ``y``."""
        return self.position[x] <= self.position[y]

    def as_relation(self) -> BinaryRelation:
        pos = np.array(self.position)
        return BinaryRelation(pos[:, None] <= pos[None, :])

    def as_weak_order(self) -> WeakOrder:
        return WeakOrder(tuple(1 << alt for alt in self.ranking), self.n)

    @classmethod
    def from_relation(cls, rel: BinaryRelation) -> "LinearOrder":
        """
        Extract the ranking from a complete, transitive and antisymmetric relation, raising
        :class:`RelationDefectError` otherwise.
        """
        _require(rel.completeness(), "complete", "linear order")
        _require(rel.antisymmetry(), "antisymmetric", "linear order")
        _require(rel.transitivity(), "transitive", "linear order")

        score = rel.holds.sum(axis=1)
        return cls(tuple(int(alt) for alt in np.argsort(-score, kind="stable")))


def as_relation(order: Union[WeakOrder, LinearOrder]) -> BinaryRelation:
    """Relation induced by an order: ``holds[x, y]`` iff ``x`` is weakly preferred to ``y``."""
    return order.as_relation()


@dataclass(frozen=True, eq=False)
class ChoiceCorrespondence:
    """
    Total choice correspondence over every nonempty menu of an ``n`` alternative universe.

    ``table`` is a flat ``uint32`` array indexed by menu bit pattern; slot ``0`` (the empty set) is unused and
    holds ``0``. On construction every entry is checked to be a nonempty subset of its menu, with singletons
    forced to themselves.
    """

    n: int
    table: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ALTERNATIVES:
            raise ValueError(f"A correspondence needs 1 to {MAX_ALTERNATIVES} alternatives, not {self.n}.")

        table = np.array(self.table, dtype=np.uint32, copy=True)
        if table.shape != (1 << self.n,):
            raise ValueError(f"Choice table must have {1 << self.n} slots, got shape {table.shape}.")
        table[0] = 0

        menus = np.arange(1 << self.n, dtype=np.uint32)
        empty = np.flatnonzero(table[1:] == 0)
        if len(empty):
            raise ValueError(f"Choice from menu {int(empty[0]) + 1:#b} is empty.")
        outside = np.flatnonzero(table & ~menus)
        if len(outside):
            menu = int(outside[0])
            raise ValueError(f"Choice {int(table[menu]):#b} from menu {menu:#b} is not contained in the menu.")

        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[Menu, Menu]) -> "ChoiceCorrespondence":
        """
        Build from a mapping of menu to chosen submenu. Singleton menus may be omitted; every other menu is
        required.
        """
        table = np.zeros(1 << n, dtype=np.uint32)
        for alt in range(n):
            table[1 << alt] = 1 << alt
        for menu, choice in mapping.items():
            table[validate_menu(menu, n)] = choice
        return cls(n, table)

    @classmethod
    def from_function(cls, n: int, func: Callable[[Menu], Menu]) -> "ChoiceCorrespondence":
        """Materialize ``func`` over every menu into a table."""
        table = np.zeros(1 << n, dtype=np.uint32)
        for menu in range(1, 1 << n):
            table[menu] = func(menu)
        return cls(n, table)

    def __getitem__(self, menu: Menu) -> Menu:
        return int(self.table[menu])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChoiceCorrespondence)
            and self.n == other.n
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        rows = ", ".join(f"{m:#b}->{self[m]:#b}" for m in self.menus() if size(m) > 1)
        return f"{self.__class__.__name__} (n={self.n}: {rows})"

    @cached_property
    def key(self) -> bytes:
        """Compact bytes identifying the table, used for dictionary lookups."""
        return self.table.tobytes()

    def menus(self) -> tuple[Menu, ...]:
        return all_menus(self.n)

    def items(self) -> Iterator[tuple[Menu, Menu]]:
        """``(menu, choice)`` pairs in canonical menu order."""
        for menu in self.menus():
            yield menu, int(self.table[menu])

    def first_difference(self, other: "ChoiceCorrespondence") -> Optional[Menu]:
        """First menu, in canonical order, where two tables disagree, or ``None`` if identical."""
        if self.n != other.n:
            raise ValueError(f"Cannot compare correspondences over {self.n} and {other.n} alternatives.")
        for menu in self.menus():
            if self.table[menu] != other.table[menu]:
                return menu
        return None

    @cached_property
    def removal_impact_table(self) -> "ChoiceCorrespondence":
        """The removal-impact map evaluated on every menu, computed once per table."""
        # late import to avoid circular imports
        from .engine import removal_impact_correspondence

        return removal_impact_correspondence(self)


@dataclass(frozen=True)
class Witness:
    """
    Concrete instance of an axiom or condition violation.

    Attributes:
        kind: Identifier of the violated axiom or condition, for example ``alpha`` or ``cond1``.
        menus: Menus involved, in the order the violated statement names them.
        alternatives: Alternatives involved, in the order the violated statement names them.
    """

    kind: str
    menus: tuple[Menu, ...] = ()
    alternatives: tuple[Alternative, ...] = ()

    def to_dict(self, universe: Universe) -> dict:
        return {
            "kind": self.kind,
            "menus": [universe.labels_of(m) for m in self.menus],
            "alternatives": [universe.labels[a] for a in self.alternatives],
        }
