"""Constants of Weitzenboeck derivations on relatively free algebras.

Elements are passed as text, e.g. ``normalize("x2*x1", "meta", 2)``.
Algebras: comm, uv, meta, meta-ideal, grass, wreath.
"""

from ._core import (
    derive,
    embed,
    from_json,
    grassmann_generators,
    is_constant,
    kernel,
    kernel_dimension,
    module_generators,
    normalize,
    nowicki_generators,
    pullback,
    span_check,
    straighten,
    to_json,
    verify,
)

__all__ = [
    "derive",
    "embed",
    "from_json",
    "grassmann_generators",
    "is_constant",
    "kernel",
    "kernel_dimension",
    "module_generators",
    "normalize",
    "nowicki_generators",
    "pullback",
    "span_check",
    "straighten",
    "to_json",
    "verify",
]
