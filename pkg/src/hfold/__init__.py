"""Exact h-fold sumsets of finite integer sets and inverse classification.

The public API is re-exported here; see the submodules for details.
"""

from .bounds import (
    BoundReport,
    freiman_2a_bound,
    lemma1_diameter_bound,
    lev_chain_bound,
    lev_step_bound,
    theorem_a_bound,
    theorem_d_check,
)
from .core import (
    FullInterval,
    IntervalMinusOne,
    IntervalMinusTwo,
    IntSet,
    NormalizedSet,
    Other,
    classify_structure,
    diff_gcd,
    is_ap,
    make_set,
    minimal_ap_cover_length,
    normalize,
    parse_set_literal,
    read_set_file,
    reflect,
    translate,
)
from .errors import *  # noqa: F401,F403
from .families import L2, L3, P1, P2, P3, P4, build, predict_cardinality, predict_sumset_interval
from .inverse import InversePrediction, Status, classify_by_cardinality, consistency_check
from .oracle import h_fold_bruteforce
from .records import VerificationRecord
from .sumset import SumsetResult, add_sets, h_fold, h_fold_cardinality
from .verify import (
    CHECK_IDS,
    EnumSpec,
    SweepReport,
    enumerate_normal_sets,
    family_sweep,
    run_sweep,
)

__version__ = "0.1.0"
