"""Exact-arithmetic toolkit for composite combinatorial coalgebras.

All operations are exposed by the compiled extension; see ``help(coalg._core)``.
"""

from ._core import (  # noqa: F401
    antipode,
    convert,
    coproduct,
    dim,
    mobius,
    primitives,
    product,
    run,
    verify,
)

__all__ = [
    "antipode",
    "convert",
    "coproduct",
    "dim",
    "mobius",
    "primitives",
    "product",
    "run",
    "verify",
]
