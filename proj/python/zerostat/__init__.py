"""Zero counts of random polynomials, trigonometric polynomials and exponential sums."""

import json

from ._zerostat import (
    ExperimentError,
    SpectrumParseError,
    circle_zeros_count,
    disk_zeros_count,
    expsum_slope,
    kac_asymptotic,
    kappa_length,
    kostlan_expected,
    nd_expected,
    nd_expected_mixed,
    nd_prob,
    pseudovolume,
    real_roots_count,
    slope_fit,
    trig_expected,
    trig_prob,
)
from ._zerostat import _run_experiment_json


def run_experiment(kind, trials=1000, seed=0, spectrum="", spectrum2="", m=0, dim=3,
                   radii=None, z_max=3.0, slack=0.05, workers=1, per_trial=False):
    """Run a seeded experiment and return the report as a dict."""
    text = _run_experiment_json(kind, trials, seed, spectrum, spectrum2, m, dim,
                                list(radii or []), z_max, slack, workers, per_trial)
    return json.loads(text)


__all__ = [
    "ExperimentError",
    "SpectrumParseError",
    "circle_zeros_count",
    "disk_zeros_count",
    "expsum_slope",
    "kac_asymptotic",
    "kappa_length",
    "kostlan_expected",
    "nd_expected",
    "nd_expected_mixed",
    "nd_prob",
    "pseudovolume",
    "real_roots_count",
    "run_experiment",
    "slope_fit",
    "trig_expected",
    "trig_prob",
]
