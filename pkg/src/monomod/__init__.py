"""Minimal monomial solutions of M(a_n)...M(a_1) = +/-Id over Z/NZ:
sizes, irreducibility with witnesses, modulus classification,
closed-form certificates, and range scans."""

from .classify import (
    ClassVerdict,
    Counterexample,
    decide_monomial,
    decide_quasi,
    decide_semi,
    euler_phi,
    omega_count,
    predict_monomial,
    predict_quasi,
    predict_reducible_set_2x3m,
    semi_candidates,
    sizes_table,
    units_only,
)
from .construct import (
    ConstructedWitness,
    constructed_prop34,
    crt,
    reducible_k_prop34,
    witness_lemma41,
    witness_prop34,
    witness_prop36,
    witness_prop51,
)
from .core import BACKEND
from .modring import Mat2, ResidueRing, chain, elementary, identity, monomial_power, pm_id
from .monomial import (
    MonomialReport,
    ReductionWitness,
    find_reduction,
    find_reduction_naive,
    minimal_size,
    minimal_size_prime_fast,
    report,
)
from .scan import (
    CheckpointError,
    ScanJob,
    ScanResult,
    checkpoint_resume,
    emit_appendix,
    run_scan,
    scan_class,
    scan_conjecture,
    scan_conjecture_checked,
    semi_family,
)
from .solutions import ModTuple, bordered_constraint_roots, equivalent, oplus, solution_sign

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ClassVerdict",
    "CheckpointError",
    "ConstructedWitness",
    "Counterexample",
    "Mat2",
    "ModTuple",
    "MonomialReport",
    "ReductionWitness",
    "ResidueRing",
    "ScanJob",
    "ScanResult",
    "bordered_constraint_roots",
    "chain",
    "checkpoint_resume",
    "constructed_prop34",
    "crt",
    "decide_monomial",
    "decide_quasi",
    "decide_semi",
    "elementary",
    "emit_appendix",
    "equivalent",
    "euler_phi",
    "find_reduction",
    "find_reduction_naive",
    "identity",
    "minimal_size",
    "minimal_size_prime_fast",
    "monomial_power",
    "omega_count",
    "oplus",
    "pm_id",
    "predict_monomial",
    "predict_quasi",
    "predict_reducible_set_2x3m",
    "reducible_k_prop34",
    "report",
    "run_scan",
    "scan_class",
    "scan_conjecture",
    "scan_conjecture_checked",
    "semi_candidates",
    "semi_family",
    "sizes_table",
    "solution_sign",
    "units_only",
    "witness_lemma41",
    "witness_prop34",
    "witness_prop36",
    "witness_prop51",
]
