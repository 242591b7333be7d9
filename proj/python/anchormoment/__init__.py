"""Expected a-th power displacement of n uniform sensors moved to equidistant anchors.

Exact values come back from the extension as "p/q" strings; the wrappers
here turn them into fractions.Fraction.
"""

from fractions import Fraction

from . import _core
from ._core import (
    EXACT_SIZE_GUARD,
    FLOAT_SIZE_GUARD,
    SizeGuardError,
    __version__,
    binomial,
    cli,
    eulerian_second_order,
    incomplete_beta_float,
    lemma4_constant,
    lemma4_sum,
    log_beta,
    remainder_diagnostic,
    run_identity_suite,
    simulate,
    stirling_cycle,
    stirling_subset,
    total_moment_float,
    verify_technical2b,
)

__all__ = [
    "EXACT_SIZE_GUARD",
    "FLOAT_SIZE_GUARD",
    "SizeGuardError",
    "binomial",
    "cli",
    "eulerian_second_order",
    "incomplete_beta_exact",
    "incomplete_beta_float",
    "leading_constant",
    "lemma1_sum",
    "lemma2_sum",
    "lemma4_constant",
    "lemma4_sum",
    "log_beta",
    "per_sensor_moment_exact",
    "remainder_diagnostic",
    "run_identity_suite",
    "simulate",
    "stirling_cycle",
    "stirling_subset",
    "total_moment_exact",
    "total_moment_float",
    "verify_technical2b",
]

_SENSOR_FIELDS = ("t", "total", "signed_part", "folded_part")


def _sensor(raw):
    out = dict(raw)
    for key in _SENSOR_FIELDS:
        out[key] = Fraction(raw[key])
    return out


def total_moment_exact(n, a, per_sensor=False):
    """Exact sum over sensors of E|X_(i) - (2i-1)/(2n)|^a as a Fraction.

    With per_sensor=True, returns (total, rows) where each row holds the
    anchor, the moment and its signed/folded split as Fractions.
    """
    raw = _core.total_moment_exact(n, a, per_sensor)
    total = Fraction(raw["total"])
    if not per_sensor:
        return total
    return total, [_sensor(row) for row in raw["per_sensor"]]


def per_sensor_moment_exact(n, a, i):
    return _sensor(_core.per_sensor_moment_exact(n, a, i))


def incomplete_beta_exact(z, c, d):
    """Regularized incomplete Beta I(z; c, d) for rational z and integer c, d."""
    z = Fraction(z)
    return Fraction(_core.incomplete_beta_exact(f"{z.numerator}/{z.denominator}", c, d))


def leading_constant(a):
    """(symbolic text, float) of the coefficient of n^(1 - a/2)."""
    return _core.leading_constant(a)


def lemma1_sum(n, a):
    return Fraction(_core.lemma1_sum(n, a))


def lemma2_sum(n, a):
    return Fraction(_core.lemma2_sum(n, a))
