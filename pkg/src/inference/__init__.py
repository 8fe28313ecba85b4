"""Saturation, instance validation and pitfall scanning."""

from .pitfalls import PitfallScanner, scan_pitfalls
from .reasoner import Reasoner, RuleSet, saturate
from .validator import InstanceValidator, has_errors, validate_instances

__all__ = [
    "PitfallScanner",
    "scan_pitfalls",
    "Reasoner",
    "RuleSet",
    "saturate",
    "InstanceValidator",
    "has_errors",
    "validate_instances",
]
