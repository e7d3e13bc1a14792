"""Computable two-sided bounds for entropy gaps, divergences, and Jensen gaps.

Every operation returns a BoundReport carrying (lower, value, upper) plus the
slacks, so a caller can see not only that a chain holds but by how much.
Chains are checked elsewhere at CHECK_TOL: absolute CHECK_TOL plus CHECK_TOL
relative to the largest magnitude in the report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dist import IncompleteDist, ProbDist, check_lengths
from .divergence import (
    ConvexGenerator,
    dual_generator,
    f_divergence,
    incomplete_f_divergence,
    neg_qlog_generator,
)
from .entropy import tsallis_entropy
from .errors import (
    DegenerateRangeError,
    DomainError,
    HypothesisError,
    LengthMismatchError,
    ConsistencyError,
)
from .qmath import _as_q, q_log
from .quasilinear import (
    GeneratorPsi,
    check_psi_convexity,
    quasilinear_mean,
    tsallis_quasilinear_entropy,
)

CHECK_TOL = 1e-9

__all__ = [
    "CHECK_TOL",
    "BoundReport",
    "SecondDerivativeRange",
    "jensen_gap",
    "ratio_sandwich",
    "quasilinear_vs_tsallis_bounds",
    "refined_maxent_bounds",
    "f_divergence_sandwich",
    "pairwise_spread",
    "lagrange_identity",
    "smooth_jensen_sandwich",
    "cartwright_field",
    "tightest_constants",
    "tsallis_cross_entropy_sandwich",
    "maxent_variance_bounds",
    "cross_term_gap_sandwich",
]


@dataclass(frozen=True)
class BoundReport:
    """A value together with the lower and upper bounds claimed for it."""

    lower: float
    value: float
    upper: float

    @property
    def lower_slack(self) -> float:
        return self.value - self.lower

    @property
    def upper_slack(self) -> float:
        return self.upper - self.value

    def violation(self) -> float:
        """Worst raw excess of either bound; negative means satisfied with margin."""
        return max(self.lower - self.value, self.value - self.upper)

    def scale(self) -> float:
        return max(abs(self.lower), abs(self.value), abs(self.upper))

    def holds(self, tol_abs: float = CHECK_TOL, tol_rel: float = CHECK_TOL) -> bool:
        return self.violation() <= tol_abs + tol_rel * self.scale()

    def as_dict(self) -> dict:
        return {
            "lower": self.lower,
            "value": self.value,
            "upper": self.upper,
            "lower_slack": self.lower_slack,
            "upper_slack": self.upper_slack,
        }


@dataclass(frozen=True)
class SecondDerivativeRange:
    """Bounds 0 <= m <= f'' <= M on a stated interval (possibly degenerate)."""

    m: float
    M: float
    interval: tuple[float, float]

    def __post_init__(self) -> None:
        lo, hi = self.interval
        if not (math.isfinite(self.m) and math.isfinite(self.M)):
            raise DomainError("curvature bounds must be finite")
        if not 0.0 <= self.m <= self.M:
            raise DomainError(f"need 0 <= m <= M, got m={self.m!r}, M={self.M!r}")
        if not (math.isfinite(lo) and math.isfinite(hi) and lo <= hi):
            raise DomainError(f"invalid interval {self.interval!r}")
        object.__setattr__(self, "interval", (float(lo), float(hi)))
        object.__setattr__(self, "m", float(self.m))
        object.__setattr__(self, "M", float(self.M))


def _as_eval(f):
    return getattr(f, "eval", f)


_HYPOTHESIS_LAMBDAS = (0.0, 0.25, 0.5, 0.75, 1.0)


def _require_compatible(f, psi: GeneratorPsi, pts: np.ndarray) -> None:
    report = check_psi_convexity(f, psi, np.unique(pts), _HYPOTHESIS_LAMBDAS)
    if not report.holds:
        raise HypothesisError(
            f"convexity-compatibility fails for psi={psi.label!r} at "
            f"witness {report.witness!r} (violation {report.worst_violation:.3e})"
        )


def jensen_gap(f, psi: GeneratorPsi, xs, p: ProbDist, *, validate_hypothesis: bool = False) -> float:
    """T(f, x, p) = sum_j p_j f(x_j) - f(M_psi(x, p)).

    Nonnegative whenever f is convexity-compatible with psi; pass
    validate_hypothesis=True to run the sampled compatibility check on the
    supplied points first.  f may be a ConvexGenerator or a bare vectorized
    callable.
    """
    arr = np.asarray(xs, dtype=float)
    if arr.shape != (p.n,):
        raise LengthMismatchError(f"xs has shape {arr.shape}, expected ({p.n},)")
    if validate_hypothesis:
        _require_compatible(f, psi, arr)
    fe = _as_eval(f)
    mean = quasilinear_mean(psi, arr, p)
    return float(p.weights @ np.asarray(fe(arr), dtype=float)) - float(
        np.asarray(fe(np.asarray(mean)))
    )


def ratio_sandwich(
    f, psi: GeneratorPsi, xs, p: ProbDist, r: ProbDist, *, validate_hypothesis: bool = False
) -> BoundReport:
    """Sandwich T(f, x, r) between min and max of r_i/p_i times T(f, x, p)."""
    check_lengths(p, r)
    t_p = jensen_gap(f, psi, xs, p, validate_hypothesis=validate_hypothesis)
    t_r = jensen_gap(f, psi, xs, r)
    ratios = r.weights / p.weights
    return BoundReport(
        lower=float(ratios.min()) * t_p,
        value=t_r,
        upper=float(ratios.max()) * t_p,
    )


def quasilinear_vs_tsallis_bounds(
    psi: GeneratorPsi, r: ProbDist, q, *, validate_hypothesis: bool = False
) -> BoundReport:
    """Sandwich the gap between the psi-deformed and the plain deformed entropy.

    value = I_q^psi(r) - H_q(r); the braced uniform-weights gap
    ln_q(M_psi(1/r, uniform)) - mean_j ln_q(1/r_j), scaled by n min r_j and
    n max r_j, gives the bounds.  The whole chain is >= 0 under the
    compatibility hypothesis.
    """
    qf = _as_q(q)
    inv = 1.0 / r.weights
    if validate_hypothesis:
        _require_compatible(neg_qlog_generator(qf), psi, inv)
    n = r.n
    braced = q_log(float(psi.inverse(np.asarray(np.mean(psi.forward(inv))))), qf) - float(
        np.mean(np.asarray(q_log(inv, qf)))
    )
    value = tsallis_quasilinear_entropy(psi, r, qf) - tsallis_entropy(r, qf)
    return BoundReport(
        lower=n * float(r.weights.min()) * braced,
        value=value,
        upper=n * float(r.weights.max()) * braced,
    )


def refined_maxent_bounds(r: ProbDist, q) -> BoundReport:
    """Two-sided refinement of 0 <= ln_q(n) - H_q(r).

    Identical to quasilinear_vs_tsallis_bounds with the identity generator,
    since the identity mean of the inverse probabilities is exactly n.
    """
    qf = _as_q(q)
    inv = 1.0 / r.weights
    n = r.n
    braced = q_log(float(np.mean(inv)), qf) - float(np.mean(np.asarray(q_log(inv, qf))))
    value = q_log(float(n), qf) - tsallis_entropy(r, qf)
    return BoundReport(
        lower=n * float(r.weights.min()) * braced,
        value=value,
        upper=n * float(r.weights.max()) * braced,
    )


def f_divergence_sandwich(f: ConvexGenerator, p: ProbDist, r: ProbDist) -> BoundReport:
    """Sandwich D_f(p||r) via the dual generator evaluated at t_j = p_j^2/r_j.

    The middle factor D~_f*(t||p) - f(sum_j t_j) is itself nonnegative, so the
    lower bound chains 0 <= min_i(r_i/p_i) (...) <= D_f(p||r).
    """
    check_lengths(p, r)
    value = f_divergence(f, p, r)
    t = IncompleteDist(p.weights**2 / r.weights)
    factor = incomplete_f_divergence(dual_generator(f), t, IncompleteDist(p.weights)) - float(
        np.asarray(f.eval(np.asarray(float(t.weights.sum()))))
    )
    ratios = r.weights / p.weights
    return BoundReport(
        lower=float(ratios.min()) * factor,
        value=value,
        upper=float(ratios.max()) * factor,
    )


def pairwise_spread(xs, p: ProbDist) -> float:
    """sum_{i<j} p_i p_j (x_j - x_i)^2, computed two ways and cross-checked.

    The pairwise double sum equals the p-weighted variance around the
    p-mean; both forms are evaluated and must agree to 1e-10 (relative),
    otherwise a ConsistencyError flags a numerics problem.  Returns the
    variance form.
    """
    arr = np.asarray(xs, dtype=float)
    if arr.shape != (p.n,):
        raise LengthMismatchError(f"xs has shape {arr.shape}, expected ({p.n},)")
    if not np.all(np.isfinite(arr)):
        raise DomainError("xs must be finite")
    w = p.weights
    xbar = float(w @ arr)
    s_var = float(w @ (arr - xbar) ** 2)
    diffs = arr[:, None] - arr[None, :]
    s_pair = 0.5 * float(np.sum((w[:, None] * w[None, :]) * diffs**2))
    if abs(s_pair - s_var) > 1e-10 * (1.0 + max(abs(s_pair), abs(s_var))):
        raise ConsistencyError(
            f"pairwise form {s_pair!r} and variance form {s_var!r} disagree"
        )
    return s_var


def lagrange_identity(a, b) -> tuple[float, float]:
    """Return both sides of (sum a^2)(sum b^2) - (sum ab)^2 = sum_{i<j} (a_i b_j - a_j b_i)^2."""
    av = np.asarray(a, dtype=float)
    bv = np.asarray(b, dtype=float)
    if av.shape != bv.shape or av.ndim != 1:
        raise LengthMismatchError("a and b must be 1-d vectors of equal length")
    lhs = float(av @ av) * float(bv @ bv) - float(av @ bv) ** 2
    cross = av[:, None] * bv[None, :] - av[None, :] * bv[:, None]
    rhs = 0.5 * float(np.sum(cross**2))
    return lhs, rhs


def smooth_jensen_sandwich(f, drange: SecondDerivativeRange, xs, p: ProbDist) -> BoundReport:
    """(m/2) spread <= sum p_j f(x_j) - f(sum p_j x_j) <= (M/2) spread.

    Valid for twice-differentiable f with m <= f'' <= M on an interval
    containing all x_j (the caller warrants the curvature bounds; the points
    are checked against drange.interval).  spread is the pairwise spread of
    the x_j, m >= 0 is required.
    """
    arr = np.asarray(xs, dtype=float)
    if arr.shape != (p.n,):
        raise LengthMismatchError(f"xs has shape {arr.shape}, expected ({p.n},)")
    lo, hi = drange.interval
    # tiny slack so hull endpoints produced by floating arithmetic stay legal
    pad = 1e-12 * (1.0 + max(abs(lo), abs(hi)))
    if np.any(arr < lo - pad) or np.any(arr > hi + pad):
        raise DomainError("xs must lie inside the interval of the curvature range")
    fe = _as_eval(f)
    gap = float(p.weights @ np.asarray(fe(arr), dtype=float)) - float(
        np.asarray(fe(np.asarray(float(p.weights @ arr))))
    )
    spread = pairwise_spread(arr, p)
    return BoundReport(
        lower=0.5 * drange.m * spread,
        value=gap,
        upper=0.5 * drange.M * spread,
    )


def cartwright_field(xs, p: ProbDist) -> BoundReport:
    """Variance bounds on the arithmetic-geometric mean gap.

    With m' = min x, M' = max x and V = sum_j p_j (x_j - xbar)^2:
        V/(2 M') <= xbar - prod_j x_j^{p_j} <= V/(2 m').
    """
    arr = np.asarray(xs, dtype=float)
    if arr.shape != (p.n,):
        raise LengthMismatchError(f"xs has shape {arr.shape}, expected ({p.n},)")
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError("the arithmetic-geometric gap needs strictly positive xs")
    w = p.weights
    am = float(w @ arr)
    gm = float(np.exp(w @ np.log(arr)))
    v = float(w @ (arr - am) ** 2)
    return BoundReport(
        lower=v / (2.0 * float(arr.max())),
        value=am - gm,
        upper=v / (2.0 * float(arr.min())),
    )


def tightest_constants(p: ProbDist, r: ProbDist, q) -> SecondDerivativeRange:
    """Exact range of d2/dx2 [-ln_q(x)] = q x^(-q-1) over the hull of 1/p, 1/r.

    The hull of the evaluation points {1/p_j} u {1/r_j} is
    [1/(max component), 1/(min component)], on which the curvature attains
    m_q = q (min component)^(q+1) and M_q = q (max component)^(q+1).
    Degenerate at q = 0 (zero curvature everywhere).
    """
    check_lengths(p, r)
    qf = _as_q(q)
    if qf == 0.0:
        raise DegenerateRangeError("q = 0 has identically zero curvature; no usable range")
    comps = np.concatenate([p.weights, r.weights])
    cmin = float(comps.min())
    cmax = float(comps.max())
    return SecondDerivativeRange(
        m=qf * cmin ** (qf + 1.0),
        M=qf * cmax ** (qf + 1.0),
        interval=(1.0 / cmax, 1.0 / cmin),
    )


def maxent_variance_bounds(p: ProbDist, q, mq: float, Mq: float) -> BoundReport:
    """Spread-weighted refinement of 0 <= ln_q(n) - H_q(p) <= ...

    With P = pairwise spread of the inverse probabilities under p and
    mq <= -ln_q'' <= Mq on their hull:
        (mq/2) P <= ln_q(n) - H_q(p) <= (Mq/2) P.
    """
    qf = _as_q(q)
    spread = pairwise_spread(1.0 / p.weights, p)
    value = q_log(float(p.n), qf) - tsallis_entropy(p, qf)
    return BoundReport(lower=0.5 * mq * spread, value=value, upper=0.5 * Mq * spread)


def cross_term_gap_sandwich(p: ProbDist, r: ProbDist, q, mq: float, Mq: float) -> BoundReport:
    """Spread bounds on the Jensen gap of -ln_q at the points 1/r_j under p.

    With R = pairwise spread of 1/r under p:
        (mq/2) R <= ln_q(sum_j p_j/r_j) - sum_j p_j ln_q(1/r_j) <= (Mq/2) R.
    """
    check_lengths(p, r)
    qf = _as_q(q)
    inv_r = 1.0 / r.weights
    spread = pairwise_spread(inv_r, p)
    value = q_log(float(np.sum(p.weights / r.weights)), qf) - float(
        p.weights @ np.asarray(q_log(inv_r, qf))
    )
    return BoundReport(lower=0.5 * mq * spread, value=value, upper=0.5 * Mq * spread)


def tsallis_cross_entropy_sandwich(
    p: ProbDist, r: ProbDist, q, mq: float, Mq: float
) -> BoundReport:
    """Two-sided bounds on the deformed cross-entropy gap.

    value = sum_j p_j ln_q(1/r_j) - sum_j p_j ln_q(1/p_j).  Assembled from
    the two intermediate sandwiches (maxent_variance_bounds for the 1/p
    spread P, cross_term_gap_sandwich for the 1/r spread R):

        base + (mq/2) P - (Mq/2) R <= value <= base + (Mq/2) P - (mq/2) R

    with base = ln_q(sum_j p_j/r_j) - ln_q(n).
    """
    check_lengths(p, r)
    qf = _as_q(q)
    w = p.weights
    base = q_log(float(np.sum(w / r.weights)), qf) - q_log(float(p.n), qf)
    spread_p = pairwise_spread(1.0 / w, p)
    spread_r = pairwise_spread(1.0 / r.weights, p)
    value = float(w @ np.asarray(q_log(1.0 / r.weights, qf))) - float(
        w @ np.asarray(q_log(1.0 / w, qf))
    )
    return BoundReport(
        lower=base + 0.5 * mq * spread_p - 0.5 * Mq * spread_r,
        value=value,
        upper=base + 0.5 * Mq * spread_p - 0.5 * mq * spread_r,
    )
