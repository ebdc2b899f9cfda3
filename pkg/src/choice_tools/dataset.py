"""
Reading and writing choice datasets.

A dataset is a UTF-8 JSON document listing the alternatives and the choice made from every nonsingleton menu.

.. code-block:: json

    {
      "alternatives": ["x", "y", "z"],
      "choices": [
        {"menu": ["x", "y"], "choice": ["x"]},
        {"menu": ["x", "z"], "choice": ["x"]},
        {"menu": ["y", "z"], "choice": ["y"]},
        {"menu": ["x", "y", "z"], "choice": ["x", "y"]}
      ]
    }

Rows may come in any order. Singleton rows are optional since their choice is forced.
"""

import json
from dataclasses import dataclass
from importlib.resources import files
from pathlib import Path
from typing import Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .errors import DatasetError
from .model import ChoiceCorrespondence, LinearOrder, Menu, Universe, WeakOrder
from .utils.bitmask import members, size

__all__ = [
    "FIXTURES",
    "ChoiceDataset",
    "parse_dataset",
    "read_dataset",
    "load_fixture",
    "parse_weak_order",
    "parse_linear_order",
    "format_weak_order",
    "format_linear_order",
    "labels_in_order",
]

FIXTURES = ("lemma1", "example1", "example2", "example3")


class ChoiceRowModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    menu: list[str]
    choice: list[str]


class DatasetModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    alternatives: list[str] = Field(min_length=1)
    choices: list[ChoiceRowModel]


@dataclass(frozen=True)
class ChoiceDataset:
    """Observed choices over a labelled universe, covering every menu."""

    universe: Universe
    correspondence: ChoiceCorrespondence

    def __post_init__(self):
        if self.universe.n != self.correspondence.n:
            raise ValueError(
                f"Universe has {self.universe.n} alternatives but the correspondence covers {self.correspondence.n}."
            )

    @property
    def labels(self) -> list[str]:
        return list(self.universe.labels)

    @property
    def rows(self) -> list[tuple[list[str], list[str]]]:
        """``(menu, choice)`` label lists for every nonsingleton menu in canonical serialization order."""
        menus = [m for m in self.correspondence.menus() if size(m) > 1]
        menus.sort(key=lambda m: (size(m), members(m)))
        return [(self.universe.labels_of(m), self.universe.labels_of(self.correspondence[m])) for m in menus]

    def to_dict(self) -> dict:
        return {
            "alternatives": self.labels,
            "choices": [{"menu": menu, "choice": choice} for menu, choice in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def write(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.write_text(self.to_json(), encoding="utf-8")
        return path


def _names_to_menu(names: list[str], universe: Universe, what: str, row: int) -> Menu:
    if len(set(names)) != len(names):
        raise DatasetError(f"Row {row}: duplicate names in {what} {names}.")
    for name in names:
        if name not in universe.labels:
            raise DatasetError(f'Row {row}: unknown label "{name}" in {what}.')
    return universe.menu(*names) if names else 0


def parse_dataset(text: str) -> ChoiceDataset:
    """
    Validate a dataset document.

    Args:
        text: JSON text in the dataset format.

    Returns:
        Dataset with menus converted to bit vectors and singleton rows filled in.

    Raises:
        DatasetError: Invalid JSON or schema, unknown label, duplicate menu, empty choice, choice not within its
            menu, or a missing menu (incomplete domain).
    """
    try:
        model = DatasetModel.model_validate(json.loads(text))
    except json.JSONDecodeError as err:
        raise DatasetError(f"Dataset is not valid JSON: {err.msg} (line {err.lineno})") from err
    except ValidationError as err:
        raise DatasetError(f"Dataset does not match the expected schema: {err}") from err

    try:
        universe = Universe(tuple(model.alternatives))
    except ValueError as err:
        raise DatasetError(str(err)) from err

    mapping: dict[Menu, Menu] = {}
    for row_idx, row in enumerate(model.choices):
        menu = _names_to_menu(row.menu, universe, "menu", row_idx)
        choice = _names_to_menu(row.choice, universe, "choice", row_idx)

        if menu == 0:
            raise DatasetError(f"Row {row_idx}: empty menu.")
        if menu in mapping:
            raise DatasetError(f"Row {row_idx}: duplicate menu {universe.labels_of(menu)}.")
        if choice == 0:
            raise DatasetError(f"Row {row_idx}: empty choice from menu {universe.labels_of(menu)}.")
        if choice & ~menu:
            raise DatasetError(
                f"Row {row_idx}: choice not within menu, {universe.labels_of(choice)} "
                f"from {universe.labels_of(menu)}."
            )
        mapping[menu] = choice

    missing = [m for m in universe.menus() if size(m) > 1 and m not in mapping]
    if missing:
        raise DatasetError(
            f"Dataset has an incomplete domain: missing menu {universe.labels_of(missing[0])}"
            f"{f' and {len(missing) - 1} more' if len(missing) > 1 else ''}."
        )

    return ChoiceDataset(universe, ChoiceCorrespondence.from_mapping(universe.n, mapping))


def read_dataset(path: Union[str, Path]) -> ChoiceDataset:
    """Read and validate a dataset file."""
    return parse_dataset(Path(path).read_text(encoding="utf-8"))


def load_fixture(name: str) -> ChoiceDataset:
    """
    Load one of the bundled tables: ``lemma1``, ``example1``, ``example2`` or ``example3``.
    """
    if name not in FIXTURES:
        raise ValueError(f'Unknown fixture "{name}", expected one of {list(FIXTURES)}.')
    text = (files("choice_tools") / "fixtures" / f"{name}.json").read_text(encoding="utf-8")
    return parse_dataset(text)


def labels_in_order(text: str) -> list[str]:
    """Labels in order of first appearance in an order expression like ``y > x,z``."""
    seen = []
    for part in text.replace(">", ",").split(","):
        label = part.strip()
        if label and label not in seen:
            seen.append(label)
    return seen


def _parse_classes(text: str, universe: Universe) -> list[list[int]]:
    classes = []
    used: set[int] = set()
    for chunk in text.split(">"):
        names = [name.strip() for name in chunk.split(",")]
        if any(len(name) == 0 for name in names):
            raise DatasetError(f'Empty label in order expression "{text}".')
        try:
            indices = [universe.index(name) for name in names]
        except ValueError as err:
            raise DatasetError(str(err)) from err
        repeated = used.intersection(indices) or len(set(indices)) != len(indices)
        if repeated:
            raise DatasetError(f'An alternative appears more than once in "{text}".')
        used.update(indices)
        classes.append(indices)

    if len(used) != universe.n:
        absent = [universe.labels[i] for i in range(universe.n) if i not in used]
        raise DatasetError(f'Order "{text}" does not rank {absent}.')
    return classes


def parse_weak_order(text: str, universe: Universe) -> WeakOrder:
    """
    Parse a weak order written as classes separated by ``>``, best first, with ``,`` inside a class:
    ``x,y > z`` ranks ``x`` and ``y`` indifferent and both above ``z``.
    """
    return WeakOrder.from_classes(_parse_classes(text, universe))


def parse_linear_order(text: str, universe: Universe) -> LinearOrder:
    """Parse a linear order written as a chain, ``x > y > z``."""
    classes = _parse_classes(text, universe)
    if any(len(cls_) != 1 for cls_ in classes):
        raise DatasetError(f'A linear order cannot hold ties, got "{text}".')
    return LinearOrder(tuple(cls_[0] for cls_ in classes))


def format_weak_order(weak_order: WeakOrder, universe: Universe) -> str:
    return " > ".join(",".join(universe.labels_of(cls_)) for cls_ in weak_order.classes)


def format_linear_order(linear_order: LinearOrder, universe: Universe) -> str:
    return " > ".join(universe.labels[alt] for alt in linear_order.ranking)
