"""Zeta-family evaluation kernels.

Euler-Maclaurin continuation of the Riemann and Hurwitz zeta functions,
the Riemann-Siegel main-sum evaluation of the Hardy Z function, the
generalized Hardy function Z(sigma, t) = Re zeta(sigma+it) e^{i theta(t)},
Dirichlet partial-sum spirals, the residue identity that links the two
spirals, and the Davenport-Heilbronn linear combination of mod-5
L-functions.

Two deliberately independent routes exist for values on the critical
line: the Euler-Maclaurin route (accurate, used as the oracle) and the
Riemann-Siegel route (fast, used for scanning).
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, PoleError
from .specialfn import TWO_PI, ThetaMode, _require_finite, log_gamma, theta

# Bernoulli numbers B_2 .. B_30 as exact rationals; the Euler-Maclaurin
# correction coefficients are B_{2k}/(2k)!.
_BERNOULLI_EVEN = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
    Fraction(854513, 138),
    Fraction(-236364091, 2730),
    Fraction(8553103, 6),
    Fraction(-23749461029, 870),
    Fraction(8615841276005, 14322),
)

MAX_BERNOULLI_ORDER = len(_BERNOULLI_EVEN)

_EM_COEF = tuple(
    float(b / math.factorial(2 * (k + 1)))
    for k, b in enumerate(_BERNOULLI_EVEN)
)

#: Mixing constant of the Davenport-Heilbronn combination,
#: (sqrt(10 - 2 sqrt 5) - 2) / (sqrt 5 - 1) ~= 0.2840790438.
KAPPA = (math.sqrt(10.0 - 2.0 * math.sqrt(5.0)) - 2.0) / (math.sqrt(5.0) - 1.0)

# Odd Dirichlet character mod 5 fixed by chi(2) = i.
_CHI5 = {1: 1.0 + 0.0j, 2: 1.0j, 3: -1.0j, 4: -1.0 + 0.0j}


@dataclass(frozen=True)
class EvalConfig:
    """Truncation knobs for the evaluation kernels.

    em_terms: Euler-Maclaurin cutoff N; None picks max(50, ceil(2|t|/pi)),
        which keeps the truncation error near 1e-12 throughout the
        validated range t <= 1e4.
    em_bernoulli_order: number of Bernoulli correction terms (<= 15;
        double precision degrades beyond that).
    rs_remainder_order: -1 drops the Riemann-Siegel remainder, 0 adds the
        leading (t/2pi)^(-1/4) correction term.  Higher orders are not
        implemented.
    """

    em_terms: int | None = None
    em_bernoulli_order: int = 8
    rs_remainder_order: int = 0

    def __post_init__(self):
        if self.em_terms is not None and self.em_terms < 1:
            raise DomainError(f"em_terms must be >= 1, got {self.em_terms}")
        if not 1 <= self.em_bernoulli_order <= MAX_BERNOULLI_ORDER:
            raise DomainError(
                f"em_bernoulli_order must be in [1, {MAX_BERNOULLI_ORDER}], "
                f"got {self.em_bernoulli_order}"
            )
        if self.rs_remainder_order not in (-1, 0):
            raise DomainError(
                "rs_remainder_order must be -1 (no remainder) or 0 "
                f"(leading term), got {self.rs_remainder_order}"
            )

    def cutoff(self, t: float) -> int:
        if self.em_terms is not None:
            return self.em_terms
        return max(50, math.ceil(2.0 * abs(t) / math.pi))


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class GeneralizedHardyValue:
    """Projections of zeta(sigma+it) on e^{i theta(t)} and i e^{i theta(t)}.

    z is the in-phase (generalized Hardy) component, y the perpendicular
    one; z^2 + y^2 = |zeta(sigma+it)|^2 up to evaluation error.
    """

    z: float
    y: float


@dataclass(frozen=True)
class SpiralPath:
    """Dirichlet partial sums and the polyline of their midpoints.

    points[k] is the (k+1)-term partial sum of sum n^{-s}; midpoints[k]
    is the average of consecutive points and traces the inverse spiral.
    """

    points: np.ndarray
    midpoints: np.ndarray


def _config(cfg: EvalConfig | None) -> EvalConfig:
    return DEFAULT_CONFIG if cfg is None else cfg


def _em_tail(s: complex, base: float, order: int) -> complex:
    """Euler-Maclaurin boundary terms at cutoff `base` (= N or N+a).

    base^{1-s}/(s-1) + base^{-s}/2 + sum_k B_{2k}/(2k)! (s)_{2k-1}
    base^{1-s-2k}.
    """
    pw1 = base ** (1.0 - s)
    total = pw1 / (s - 1.0) + 0.5 * pw1 / base
    inv2 = base ** -2.0
    poch = s
    pw = pw1 * inv2
    for k in range(1, order + 1):
        total += _EM_COEF[k - 1] * poch * pw
        pw *= inv2
        poch *= (s + (2 * k - 1)) * (s + 2 * k)
    return total


def zeta_em(s: complex, cfg: EvalConfig | None = None) -> complex:
    """Riemann zeta via Euler-Maclaurin summation, valid on C minus {1}.

    zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + Bernoulli
    corrections.  Warns when |Im s| > 2 pi N, the heuristic edge of the
    expansion's validity.
    """
    s = _require_finite(s, "s")
    cfg = _config(cfg)
    if s == 1.0:
        raise PoleError("zeta has a pole at s=1")
    n_cut = cfg.cutoff(s.imag)
    if abs(s.imag) > TWO_PI * n_cut:
        warnings.warn(
            f"|Im s|={abs(s.imag):.1f} exceeds 2*pi*em_terms={TWO_PI * n_cut:.1f}; "
            "Euler-Maclaurin accuracy degrades",
            stacklevel=2,
        )
    if n_cut > 1:
        ns = np.arange(1, n_cut, dtype=float)
        head = complex(np.sum(ns ** (-s)))
    else:
        head = 0.0 + 0.0j
    return head + _em_tail(s, float(n_cut), cfg.em_bernoulli_order)


def hurwitz_zeta(s: complex, a: float, cfg: EvalConfig | None = None) -> complex:
    """Hurwitz zeta(s, a) = sum_{n>=0} (n+a)^{-s} for a in (0, 1].

    Same Euler-Maclaurin continuation as zeta_em with the cutoff shifted
    by a; hurwitz_zeta(s, 1) reduces to zeta_em(s).
    """
    s = _require_finite(s, "s")
    cfg = _config(cfg)
    if not 0.0 < a <= 1.0:
        raise DomainError(f"hurwitz offset a must lie in (0, 1], got {a}")
    if s == 1.0:
        raise PoleError("hurwitz zeta has a pole at s=1")
    n_cut = cfg.cutoff(s.imag)
    ns = np.arange(0, n_cut, dtype=float) + a
    head = complex(np.sum(ns ** (-s)))
    return head + _em_tail(s, n_cut + a, cfg.em_bernoulli_order)


def _rs_psi(p: float) -> float:
    """Leading Riemann-Siegel remainder coefficient.

    Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), with the removable
    singularities at p = 1/4 and p = 3/4 handled through an exact local
    rewrite (cos A0 = cos B0 = 0 there, so both cosines reduce to sines
    of the displacement).
    """
    for p0, sign in ((0.25, -1.0), (0.75, 1.0)):
        d = p - p0
        if abs(d) < 0.05:
            if d == 0.0:
                return 0.5
            # cos A = -sin(A0) sin(dA), cos B = -sin(B0) sin(dB) with
            # sin(A0) = -1 at both points and sin(B0) = +/-1.
            return sign * math.sin(TWO_PI * d * (p + p0 - 1.0)) / math.sin(
                TWO_PI * d
            )
    return math.cos(TWO_PI * (p * p - p - 0.0625)) / math.cos(TWO_PI * p)


def hardy_z_rs(t: float, cfg: EvalConfig | None = None) -> float:
    """Hardy Z(t) by the Riemann-Siegel main sum, real by construction.

    2 sum_{n<=N} n^{-1/2} cos(theta(t) - t log n) with N = floor
    sqrt(t/2pi), plus the leading remainder term when
    rs_remainder_order >= 0.  Requires t >= 2 pi so that N >= 1.  Uses
    the asymptotic theta (exact theta below t=10), keeping this route
    fully independent of the Euler-Maclaurin one.
    """
    cfg = _config(cfg)
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    if t < TWO_PI:
        raise DomainError(f"riemann-siegel sum needs t >= 2*pi, got t={t}")
    root = math.sqrt(t / TWO_PI)
    n_main = int(math.floor(root))
    if t >= 10.0:
        th = theta(t, ThetaMode.ASYMPTOTIC)
    else:
        th = theta(t, ThetaMode.EXACT)
    if n_main <= 48:
        acc = 0.0
        for n in range(1, n_main + 1):
            acc += math.cos(th - t * math.log(n)) / math.sqrt(n)
        value = 2.0 * acc
    else:
        ns = np.arange(1, n_main + 1, dtype=float)
        value = 2.0 * float(np.sum(np.cos(th - t * np.log(ns)) / np.sqrt(ns)))
    if cfg.rs_remainder_order >= 0:
        p = root - n_main
        value += (-1.0) ** (n_main - 1) * root ** -0.5 * _rs_psi(p)
    return value


def generalized_hardy(sigma: float, t: float,
                      cfg: EvalConfig | None = None) -> GeneralizedHardyValue:
    """Generalized Hardy function Z(sigma, t) and its perpendicular part.

    z = Re zeta(sigma+it) e^{i theta(t)}, y = Im of the same product,
    using the Euler-Maclaurin zeta and the exact theta.  On the critical
    line sigma = 1/2 the y component vanishes identically.
    """
    if sigma == 1.0 and t == 0.0:
        raise PoleError("zeta pole at sigma=1, t=0")
    val = zeta_em(complex(sigma, t), cfg) * cmath.exp(1j * theta(t, ThetaMode.EXACT))
    return GeneralizedHardyValue(z=val.real, y=val.imag)


def dirichlet_partial_sums(s: complex, n_max: int) -> SpiralPath:
    """Partial sums of the Dirichlet series sum n^{-s} and their midpoints.

    The segment points[k] - points[k-1] is the (k+1)-st term, of modulus
    (k+1)^{-sigma}; midpoints trace the inverse spiral.
    """
    s = _require_finite(s, "s")
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    ns = np.arange(1, n_max + 1, dtype=float)
    terms = ns ** (-s)
    points = np.cumsum(terms)
    midpoints = 0.5 * (points[:-1] + points[1:])
    return SpiralPath(points=points, midpoints=midpoints)


def residue_identity_residual(s: complex, n_max: int) -> float:
    """Defect of the residue identity linking zeta to its mirror series.

    Compares 2 sin(pi s) Gamma(s) zeta(s) -- computed stably as
    2 pi zeta(s) / Gamma(1-s) -- against the truncated series
    (2 pi)^s sum_{n<=n_max} n^{s-1} ((-i)^{s-1} + i^{s-1}), which
    converges for Re s < 0.  Returns |LHS - RHS|.
    """
    s = _require_finite(s, "s")
    if s.real >= 0.0:
        raise DomainError(f"residue identity series needs Re s < 0, got {s}")
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    lhs = TWO_PI * zeta_em(s) * cmath.exp(-log_gamma(1.0 - s))
    ns = np.arange(1, n_max + 1, dtype=float)
    series = complex(np.sum(ns ** (s - 1.0)))
    # (-i)^{s-1} + i^{s-1} with principal powers; constant in n.
    mirror = cmath.exp((s - 1.0) * complex(0.0, -0.5 * math.pi)) + cmath.exp(
        (s - 1.0) * complex(0.0, 0.5 * math.pi)
    )
    rhs = cmath.exp(s * math.log(TWO_PI)) * series * mirror
    return abs(lhs - rhs)


def dirichlet_l_mod5(s: complex, cfg: EvalConfig | None = None,
                     conjugate: bool = False) -> complex:
    """Dirichlet L for the odd mod-5 character with chi(2)=i (or its bar).

    L(s, chi) = 5^{-s} sum_{a=1..4} chi(a) zeta(s, a/5).
    """
    total = 0.0 + 0.0j
    for a, ch in _CHI5.items():
        coeff = ch.conjugate() if conjugate else ch
        total += coeff * hurwitz_zeta(s, a / 5.0, cfg)
    return cmath.exp(-s * math.log(5.0)) * total


def davenport_heilbronn(s: complex, cfg: EvalConfig | None = None) -> complex:
    """Davenport-Heilbronn function: a mod-5 L combination with a
    Riemann-type functional equation but zeros off the critical line.

    f(s) = (1-i kappa)/2 L(s, chi) + (1+i kappa)/2 L(s, chi-bar) with
    kappa = (sqrt(10-2 sqrt 5)-2)/(sqrt 5 - 1).  This orientation of the
    weights is the one that actually satisfies
    f(s) = (5/pi)^{(1-2s)/2} (Gamma((2-s)/2)/Gamma((s+1)/2)) f(1-s)
    with constant exactly 1 (the Gauss-sum phase of chi cancels against
    (1-i kappa)^2 only this way round).  Its Dirichlet coefficients are
    the period-5 pattern 1, kappa, -kappa, -1, 0.
    """
    w = 0.5 * (1.0 - 1j * KAPPA)
    return w * dirichlet_l_mod5(s, cfg) + w.conjugate() * dirichlet_l_mod5(
        s, cfg, conjugate=True
    )
