"""Axiom basis, certificates, checker and generator."""

from .axioms import DERIVED_8, SCHEMAS, AxiomInstance, Schema, SubstitutionError, cross_name, instantiate, instantiate_schema
from .countermodels import countermodels, refutation
from .expand import expand_derived
from .generator import (
    DerivationNotFound,
    GenerationError,
    NotDerivableError,
    Session,
    prove_claim,
    prove_identity,
    prove_leq,
    prove_leq_word,
    prove_squaring,
    square_occurrence,
    squaring_certificate,
)
from .builder import LineLimitError, ProofBuilder
from .kernel import (
    Certificate,
    CertificateFormatError,
    CheckReport,
    Claim,
    ProofLine,
    Rejection,
    RuleError,
    load_certificate,
    loads_certificate,
    verify_certificate,
)
from .library import SaturationError, WitnessLibrary
from .mutation import mutate

__all__ = [name for name in dir() if not name.startswith("_")]
