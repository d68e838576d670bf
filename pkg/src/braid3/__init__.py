"""Exact invariants of closed 3-braids in the band presentation."""

from .errors import (
    CapExceededError,
    ConsistencyError,
    PolySyntaxError,
    TableFormatError,
    WordSyntaxError,
)
from .hecke import homfly, pretzel_homfly, skein_oracle, torus_homfly
from .invariants import InvariantReport, report
from .laurent import (
    LaurentPoly1,
    LaurentPoly2,
    alexander,
    conway,
    delta_unlink_factor,
    jones,
    mirror_image,
    parse_poly,
    render_poly,
)
from .words import (
    Word,
    burau,
    closure_components,
    cyclic_rotate,
    dual,
    exponent_sum,
    inverse,
    mirror,
    parse_word,
    render_word,
    to_artin,
    words_equal,
)
from .xu import XuNormalForm, euler_characteristic, genus, is_strongly_quasipositive, reduce

__all__ = [
    "CapExceededError",
    "ConsistencyError",
    "InvariantReport",
    "LaurentPoly1",
    "LaurentPoly2",
    "PolySyntaxError",
    "TableFormatError",
    "Word",
    "WordSyntaxError",
    "XuNormalForm",
    "alexander",
    "burau",
    "closure_components",
    "conway",
    "cyclic_rotate",
    "delta_unlink_factor",
    "dual",
    "euler_characteristic",
    "exponent_sum",
    "genus",
    "homfly",
    "inverse",
    "is_strongly_quasipositive",
    "jones",
    "mirror",
    "mirror_image",
    "parse_poly",
    "parse_word",
    "pretzel_homfly",
    "reduce",
    "render_poly",
    "render_word",
    "report",
    "skein_oracle",
    "to_artin",
    "torus_homfly",
    "words_equal",
]
