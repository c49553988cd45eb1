"""Runs (maximal repetitions) in strings, string powers and run-rich string search."""

from runrich.codec import decode_hex, encode_hex, load_text
from runrich.powers import (
    PowerProfile,
    epsilon_threshold,
    lower_bound,
    power,
    power_profile,
    predict_runs_in_power,
    verify_long_run_lemma,
    verify_power_formula,
)
from runrich.runs import (
    Run,
    RunSet,
    check_periodicity_lemma,
    count_runs,
    enumerate_runs,
    enumerate_runs_naive,
    minimal_period,
    primitive_root,
)

__version__ = "0.1.0"
