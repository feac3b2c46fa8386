"""Theorem validators, lemma checks, fixtures, generators and the fuzz harness."""

from .fixtures import FIXTURE_NAMES, fixtures
from .fuzz import FuzzReport, fuzz, instance_at
from .generate import GenSpec, generate
from .lemmas import LemmaReport, check_lemma
from .theorems import TheoremId, all_theorems, check_conclusion, check_hypotheses, validate

__all__ = [
    "FIXTURE_NAMES",
    "FuzzReport",
    "GenSpec",
    "LemmaReport",
    "TheoremId",
    "all_theorems",
    "check_conclusion",
    "check_hypotheses",
    "check_lemma",
    "fixtures",
    "fuzz",
    "generate",
    "instance_at",
    "validate",
]
