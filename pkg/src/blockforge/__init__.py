"""Exact block-theoretic invariants of finite permutation groups, with
mechanical checks of degree-divisibility correspondences."""

__version__ = "0.1.0"

from .blocks import block_data, brauer_correspondent
from .chartab import character_table
from .errors import DomainError, GroupFileError, InternalCheckError
from .groupfile import parse_group_file, parse_group_text
from .modular import modular_data
from .permgroup import PermutationGroup
from .report import build_report, collect_verdicts, to_json, to_text

__all__ = [
    "PermutationGroup",
    "DomainError",
    "GroupFileError",
    "InternalCheckError",
    "block_data",
    "brauer_correspondent",
    "build_report",
    "character_table",
    "collect_verdicts",
    "modular_data",
    "parse_group_file",
    "parse_group_text",
    "to_json",
    "to_text",
    "__version__",
]
