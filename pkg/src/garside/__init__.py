"""
Computational toolkit for Garside groups: left-weighted normal forms,
conjugacy invariants and super summit sets, exact rational translation
numbers with uniform denominator bounds, and solvers for the power,
proper-power and generalized-power problems and their conjugacy versions.
"""

from .conjugacy import (
    ConjugacyWitness,
    ResourceLimitError,
    SummitData,
    are_conjugate,
    cycling,
    decycling,
    summit,
    super_summit_set,
)
from .core import (
    Atom,
    Element,
    GarsideStructure,
    Rational,
    Simple,
    StructureMismatchError,
    delta_power_element,
    identity_element,
    invert,
    lmax,
    make_left_weighted_pair,
    multiply,
    normalize,
    power,
    right_complement,
    simple_element,
    simple_meet,
    tau_element,
    validate_element,
    word_length,
)
from .problems import (
    Outcome,
    ProblemAnswer,
    UnsupportedStructureError,
    solve_generalized_power,
    solve_power,
    solve_proper_power_conjugacy,
    solve_root,
    solve_root_conjugacy,
)
from .structures import (
    BraidStructure,
    ProductStructure,
    TorusStructure,
    braid_structure,
    product_structure,
    structure_from_descriptor,
    torus_structure,
)
from .translation import (
    MultipleCandidatesError,
    QuotientContext,
    TranslationTriple,
    conjugate_straightness,
    delta_central_exponent,
    quotient_translation_number,
    rational_in_interval,
    straightness,
    translation_number,
    translation_triple,
)

__all__ = [name for name in dir() if not name.startswith("_")]
