"""Exact orbit algebras of weighted-block permutation models.

Orbits are labelled by strings: words like ``"b2.1-b1.1"`` for wreath-A-like
models, block multisets like ``"b2.1+b1.1"`` for wreath-S-like models, and
``"e"`` for the empty label.  Elements are plain dicts mapping orbit labels to
exact coefficients (int, :class:`fractions.Fraction`, or ``"p/q"`` strings on
input; always ``Fraction`` on output).  All arithmetic is exact.
"""

from ._core import (
    Model,
    aux_from_letters,
    binomial,
    compare_orbits,
    epsilon,
    euler,
    exactly_realizable,
    from_generator_basis,
    greatest_shuffle,
    incidence_rank,
    induced_ordering,
    invert,
    is_lyndon,
    join,
    leading_orbit,
    lyndon_factorization,
    lyndon_from_aux,
    lyndon_from_letters,
    lyndon_words,
    mobius,
    product,
    ramsey_ordering,
    sbar,
    shuffle,
    standard_factorization,
    subsets_colex,
    to_generator_basis,
    verify_conjecture,
    verify_ramsey,
    verify_weigh,
    weighted_rank,
)

__version__ = "0.1.0"

__all__ = [
    "Model",
    "aux_from_letters",
    "binomial",
    "compare_orbits",
    "epsilon",
    "euler",
    "exactly_realizable",
    "from_generator_basis",
    "greatest_shuffle",
    "incidence_rank",
    "induced_ordering",
    "invert",
    "is_lyndon",
    "join",
    "leading_orbit",
    "lyndon_factorization",
    "lyndon_from_aux",
    "lyndon_from_letters",
    "lyndon_words",
    "mobius",
    "product",
    "ramsey_ordering",
    "sbar",
    "shuffle",
    "standard_factorization",
    "subsets_colex",
    "to_generator_basis",
    "verify_conjecture",
    "verify_ramsey",
    "verify_weigh",
    "weighted_rank",
]
