"""Exact arbitrary-precision Padovan numbers over signed indices.

The sequence here satisfies P(n) = P(n-2) + P(n-3) with
P(0) = P(1) = P(2) = 1, and runs backwards through
P(n) = P(n+3) - P(n+1).  Everything is computed with plain Python
integers, so results are exact at any index.

The interesting structure is the family of a-step self-similarity
identities

    P(n) = rho(a) * P(n - a) + sigma(a) * P(n - 2a) + P(n - 3a)

which holds for every signed step a.  :mod:`padkit.decimation` exposes
the coefficients, evaluation strategies built on them, and reduction
certificates that express P(n) exactly over three "column head"
values.  :mod:`padkit.tables` arranges the sequence in a columns and
sums the columns; :mod:`padkit.folding` pairs each index with its
mirror.  :mod:`padkit.verify` re-checks the whole identity catalogue
numerically, and :mod:`padkit.bench` times the evaluation strategies
against each other.
"""

__version__ = "0.1.0"

from .bench import BenchEntry, BenchReport, ValueDigest, digest_of, run_bench
from .core import (
    DEFAULT_INDEX_CAP,
    PADOVAN,
    PadovanType,
    SequenceWindow,
    check_index,
    decimal_str,
    index_cap,
    pad,
    pad_type_value,
    set_index_cap,
    stream,
    window_of,
)
from .decimation import (
    DecimationCoeffs,
    ReductionCertificate,
    coeff_step,
    coeffs,
    decimated_eval,
    eval_via_certificate,
    evaluate,
    matrix_pow_eval,
    parse_strategy,
    reduce_to_head,
    rho,
    sigma,
    trisection_eval,
    trisection_shortcut,
)
from .errors import (
    CertificateMismatch,
    ConsistencyError,
    DigestMismatch,
    DivisibilityViolation,
    FormulaDisagreement,
    IndexCapExceeded,
    InvalidColumn,
    InvalidDimensions,
    InvalidIndex,
    InvalidRange,
    InvalidStep,
    PadkitError,
    ParityViolation,
    UsageError,
)
from .folding import FoldedPair, folded, q_identity_check, recover
from .tables import (
    PadovanTable,
    SumSeries,
    build_table,
    column_sum,
    r3_step,
    r4_step,
    sum_4k_closed,
    sum_series,
)
from .verify import IdentityReport, VerifyConfig, quick_config, run_suite

__all__ = [
    "__version__",
    # core
    "DEFAULT_INDEX_CAP",
    "PADOVAN",
    "PadovanType",
    "SequenceWindow",
    "check_index",
    "decimal_str",
    "index_cap",
    "pad",
    "pad_type_value",
    "set_index_cap",
    "stream",
    "window_of",
    # decimation
    "DecimationCoeffs",
    "ReductionCertificate",
    "coeff_step",
    "coeffs",
    "decimated_eval",
    "eval_via_certificate",
    "evaluate",
    "matrix_pow_eval",
    "parse_strategy",
    "reduce_to_head",
    "rho",
    "sigma",
    "trisection_eval",
    "trisection_shortcut",
    # folded
    "FoldedPair",
    "folded",
    "q_identity_check",
    "recover",
    # tables
    "PadovanTable",
    "SumSeries",
    "build_table",
    "column_sum",
    "r3_step",
    "r4_step",
    "sum_4k_closed",
    "sum_series",
    # verify
    "IdentityReport",
    "VerifyConfig",
    "quick_config",
    "run_suite",
    # bench
    "BenchEntry",
    "BenchReport",
    "ValueDigest",
    "digest_of",
    "run_bench",
    # errors
    "PadkitError",
    "UsageError",
    "ConsistencyError",
    "IndexCapExceeded",
    "InvalidRange",
    "InvalidIndex",
    "InvalidStep",
    "InvalidColumn",
    "InvalidDimensions",
    "FormulaDisagreement",
    "CertificateMismatch",
    "DivisibilityViolation",
    "ParityViolation",
    "DigestMismatch",
]
