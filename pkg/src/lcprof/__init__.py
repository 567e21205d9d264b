"""Linear complexity, k-error linear complexity and tight error profiles of
sequences over GF(p^m) with period p^n."""

from .complexity import (
    AnalysisResult,
    LevelTrace,
    TightProfile,
    k_error_lc,
    linear_complexity_gc,
    minerror,
    tight_profile,
)
from .errors import *  # noqa: F401,F403
from .field import Field, binom_mod_p, make_field
from .oracle import berlekamp_massey, brute_force_klc, brute_force_profile
from .sequence import (
    Sequence,
    hamming_weight,
    parse_sequence,
    random_sequence,
    read_sequence,
    serialize_sequence,
    write_sequence,
)

__version__ = "0.1.0"
