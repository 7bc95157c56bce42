"""Poisson order data of large quantum groups of diagonal type."""
from .braiding import BraidingMatrix, ParamBraidingMatrix, dynkin_diagram, evaluate
from .cartan import cartan_roots, recognize_type
from .cyclotomic import Monomial, RootOfUnity, make_root, parse_root
from .errors import (ConditionViolated, EngineError, InternalInvariantViolation, LikelyInfinite,
                     NotArithmetic, ParseError)
from .families import admissible, family, table_rows
from .groupoid import enumerate_groupoid, positive_roots
from .pipeline import Analysis, AnalysisConfig, analyze
from .report import to_report

__version__ = "0.1.0"
