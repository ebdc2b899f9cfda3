__title__ = "choice-tools"
__version__ = "0.1.0.dev0"
__author__ = "Joel McCune (https://github.com/knu2xs)"
__license__ = "Apache 2.0"
__copyright__ = "Copyright 2023 by Joel McCune (https://github.com/knu2xs)"

__all__ = [
    "Universe",
    "BinaryRelation",
    "WeakOrder",
    "LinearOrder",
    "ChoiceCorrespondence",
    "Witness",
    "ChoiceDataset",
    "RecoveryResult",
    "AxiomReport",
    "SweepReport",
    "as_relation",
    "strict_part",
    "symmetric_part",
    "all_menus",
    "max_set",
    "min_of",
    "mc_choice",
    "generate",
    "generate_rational",
    "removal_impact",
    "is_decisive",
    "check_all",
    "recover",
    "parse_dataset",
    "load_fixture",
    "axioms",
    "engine",
    "oracle",
    "recovery",
    "utils",
]

from . import utils
from .model import (
    BinaryRelation,
    ChoiceCorrespondence,
    LinearOrder,
    Universe,
    WeakOrder,
    Witness,
    as_relation,
    strict_part,
    symmetric_part,
)
from .utils.bitmask import all_menus
from . import engine
from .engine import generate, generate_rational, is_decisive, max_set, mc_choice, min_of, removal_impact
from . import axioms
from .axioms import AxiomReport, check_all
from . import recovery
from .recovery import RecoveryResult, recover
from . import oracle
from .oracle import SweepReport
from .dataset import ChoiceDataset, load_fixture, parse_dataset
