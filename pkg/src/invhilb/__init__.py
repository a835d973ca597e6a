"""Exact Hilbert series of diagonal symmetric-group invariant rings."""

from .molien import (
    GammaSpec,
    Permutation,
    carlitz_coefficient,
    f_maj,
    hilbert_double_classsum,
    hilbert_double_maj,
    hilbert_double_schur,
    hilbert_gamma,
    hilbert_single,
    hironaka_stats,
    major_index,
)
from .partitions import Partition, character_table, enumerate_partitions
from .schur import schur_finite, schur_q, schur_q_via_characters
from .series import DensePoly, FactoredSeries, TruncatedSeries, expand, factored_equal, phi

__version__ = "0.1.0"
