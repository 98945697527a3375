"""Figure regeneration for qtt sweep CSVs."""

__version__ = "0.1.0"

from .data import (  # noqa: F401
    EmptyDataError,
    SchemaMismatchError,
    SweepRow,
    SweepTable,
    load_sweep,
)
from .render import FAMILIES, FigureSpec, UnknownFamilyError, render  # noqa: F401
