"""Decide Zariski-dense topological generation of exceptional algebraic groups by tuples of
unipotent classes of order-p elements."""

from .catalog import load_catalog
from .engine import Decision, audit, decide, validate_input

__all__ = ["load_catalog", "validate_input", "decide", "audit", "Decision"]
__version__ = "0.1.0"
