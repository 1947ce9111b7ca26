from .loader import CurveGroup, Series, SchemaError, load
from .render import render

__all__ = ["CurveGroup", "Series", "SchemaError", "load", "render"]
