"""Equational theory of the four-element ai-semiring B0.

Finite-model semantics, the syntactic decision procedure for identities of
B0, and generation/checking of derivation certificates from a finite system
of identities that holds in B0.
"""

from .terms import (
    Polynomial,
    ParseError,
    content,
    letterwise_square,
    parse_polynomial,
    parse_word,
    render,
    render_word,
)
from .models import (
    Model,
    ResourceError,
    builtin_b0,
    builtin_b2,
    counterexample,
    evaluate,
    holds_identity,
    holds_leq,
    load_model,
    validate_model,
)
from .structure import (
    StructureReport,
    arrow,
    is_degenerate,
    rare_letters,
    rare_poset,
    structure_report,
    upper_words,
    val_function,
)
from .decision import DecisionReport, decide_b0, explain
from .proofs import (
    Certificate,
    CheckReport,
    prove_identity,
    prove_leq,
    verify_certificate,
)

__version__ = "0.1.0"
