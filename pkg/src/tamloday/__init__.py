"""Exact computations with C_p-Tambara functors and their Loday constructions."""

__version__ = "0.1.0"

from .fgab import FgAbGroup, GroupMap, smith_normal_form  # noqa: E402
from .ringobj import RingObject  # noqa: E402
from .tambara import (TambaraFunctor, TambaraMorphism, box_tambara, burnside_tambara,  # noqa: E402
                      check_tambara_axioms, constant_tambara, norm_construction)

__all__ = [
    "FgAbGroup", "GroupMap", "smith_normal_form", "RingObject", "TambaraFunctor", "TambaraMorphism",
    "box_tambara", "burnside_tambara", "check_tambara_axioms", "constant_tambara", "norm_construction",
]
