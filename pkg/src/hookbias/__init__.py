"""Exact verification toolkit for hook-length biases in 2- and 3-regular partitions."""

from .report import CheckReport
from .series import (
    NonzeroRemainder,
    Polynomial,
    TruncatedSeries,
    eval_at_one,
    exact_poly_div,
    gaussian_binomial,
    mul_geometric,
    pochhammer,
    positivity_scan,
    series_add,
    series_mul,
)
from .partitions import (
    Partition,
    conjugate,
    count_hooks_oracle,
    distinct,
    enumerate_partitions,
    hook_lengths,
    hook_multiset,
    regular,
)
from .hookgf import gf_b_2i, gf_b_32, gf_b_t1, gf_diff_32_31, compute_At_Bt
from .analysis import (
    find_counterexamples_odd,
    positivity_scans,
    verify_even_k,
    verify_lemma23,
    verify_theorem1,
)
from .tables import CoefficientTable, CorruptTable

__version__ = "0.1.0"
