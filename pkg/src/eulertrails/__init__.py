"""Eulerian trails in group-labeled multigraphs: do they all share one label?"""

from .algebra import (
    CyclicOracle,
    ElementaryAbelianOracle,
    FreeAbelianOracle,
    FreeGroupOracle,
    GroupOracle,
    SymmetricGroupOracle,
    TableGroupOracle,
    Word,
    concat,
    free_reduce,
    invert,
)
from .brute import all_labels_equal, enumerate_trails, random_instance
from .cores import core_partition, extract_valid_instance
from .decide import Verdict, VerdictKind, decide, decide_3ec, normalized_shifting, verify_same_label
from .euler import Trail, find_trail, is_eulerian, trail_exists, trail_label
from .fileformat import load, parse
from .graph import Arc, Edge, LabeledGraph, Shifting
from .witness import Witness, find_witness, validate_witness

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "CyclicOracle",
    "Edge",
    "ElementaryAbelianOracle",
    "FreeAbelianOracle",
    "FreeGroupOracle",
    "GroupOracle",
    "LabeledGraph",
    "Shifting",
    "SymmetricGroupOracle",
    "TableGroupOracle",
    "Trail",
    "Verdict",
    "VerdictKind",
    "Witness",
    "Word",
    "all_labels_equal",
    "concat",
    "core_partition",
    "decide",
    "decide_3ec",
    "enumerate_trails",
    "extract_valid_instance",
    "find_trail",
    "find_witness",
    "free_reduce",
    "invert",
    "is_eulerian",
    "load",
    "normalized_shifting",
    "parse",
    "random_instance",
    "trail_exists",
    "trail_label",
    "validate_witness",
    "verify_same_label",
]
