"""Twisted elliptic curve codes over small finite fields."""

from .errors import TeccError
from .gf import field_new
from .curve import curve_new, select_eval_set
from .teccbuild import CodeHandle, handle_from_json, make_handle

__version__ = "0.1.0"

__all__ = ["TeccError", "field_new", "curve_new", "select_eval_set", "CodeHandle", "handle_from_json",
           "make_handle", "__version__"]
