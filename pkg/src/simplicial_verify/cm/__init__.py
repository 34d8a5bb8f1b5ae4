from .config import CMConfig
from .reisner import CMReport, CMVerdict, CMWitness, LinkRow, cm_report, is_cohen_macaulay, link_row

__all__ = [
    "CMConfig",
    "CMReport",
    "CMVerdict",
    "CMWitness",
    "LinkRow",
    "cm_report",
    "is_cohen_macaulay",
    "link_row",
]
