"""Complex special functions used everywhere else in the package.

Provides a complex log-gamma (Lanczos, g=7, 9 terms), the reflection
factor chi(s) = 2^(s-1) pi^s / (cos(pi s/2) Gamma(s)), and the
Riemann-Siegel theta phase in two independent forms: an exact one built
on log-gamma and the classical asymptotic expansion.  Having both forms
lets each serve as an oracle for the other.
"""

from __future__ import annotations

import cmath
import math
import warnings
from enum import Enum

from .errors import DomainError, PoleError

TWO_PI = 2.0 * math.pi
LOG_PI = math.log(math.pi)
LOG_2 = math.log(2.0)

#: Smallest t at which the asymptotic theta expansion is trusted; below this
#: the truncated tail is no longer negligible and a warning is emitted.
DEFAULT_T_MIN = 10.0

# Lanczos approximation, g = 7, 9 coefficients.  Relative error of the
# reconstructed Gamma is ~1e-13 over the right half plane, which makes the
# absolute error of log_gamma itself ~1e-13.
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Asymptotic theta: t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760t^3)
# + 31/(80640t^5).  Exactly these six terms, nothing more.
_THETA_C1 = 1.0 / 48.0
_THETA_C3 = 7.0 / 5760.0
_THETA_C5 = 31.0 / 80640.0


class ThetaMode(Enum):
    """Which evaluation route the theta phase should take."""

    EXACT = "exact"
    ASYMPTOTIC = "asym"


def _require_finite(z: complex, name: str = "argument") -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{name} must be finite, got {z!r}")
    return z


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _log_gamma_lanczos(z: complex) -> complex:
    """Lanczos core, valid for Re z >= 0.5 (both half planes in Im)."""
    zm1 = z - 1.0
    acc = complex(_LANCZOS_C[0])
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (zm1 + k)
    w = zm1 + _LANCZOS_G + 0.5
    return (
        0.5 * math.log(TWO_PI)
        + (zm1 + 0.5) * cmath.log(w)
        - w
        + cmath.log(acc)
    )


def log_gamma(z: complex) -> complex:
    """Principal-branch log Gamma(z); exp(log_gamma(z)) == Gamma(z).

    The branch is the analytic continuation that is real on the positive
    real axis, so the imaginary part is continuous along vertical lines
    with Re z > 0 (it is not reduced mod 2*pi).  Raises PoleError at the
    non-positive integers.
    """
    z = _require_finite(z, "z")
    if _is_nonpositive_integer(z):
        raise PoleError(f"log_gamma pole at z={z}")
    if z.imag < 0.0:
        return log_gamma(z.conjugate()).conjugate()
    if z.real >= 0.5:
        return _log_gamma_lanczos(z)
    # Reflection through Gamma(z)Gamma(1-z) = pi/sin(pi z), with the sine
    # log expanded so its branch stays continuous for Im z >= 0:
    #   log sin(pi z) = log(1/2) + i pi/2 - i pi z + log(1 - e^{2 i pi z})
    log_sin = (
        -LOG_2
        + 0.5j * math.pi
        - 1j * math.pi * z
        + cmath.log(1.0 - cmath.exp(2j * math.pi * z))
    )
    return LOG_PI - log_sin - _log_gamma_lanczos(1.0 - z)


def _log_cos(w: complex) -> complex:
    """log cos(w) without overflow for large |Im w|.

    Uses cos w = e^{-iw}(1 + e^{2iw})/2 for Im w >= 0 and the conjugate
    split otherwise, so only bounded exponentials are ever formed.
    """
    if w.imag >= 0.0:
        return -1j * w - LOG_2 + cmath.log(1.0 + cmath.exp(2j * w))
    return 1j * w - LOG_2 + cmath.log(1.0 + cmath.exp(-2j * w))


def chi(s: complex) -> complex:
    """Reflection factor chi(s) = 2^(s-1) pi^s / (cos(pi s/2) Gamma(s)).

    Computed entirely in log space, exp((s-1)log2 + s log pi
    - log cos(pi s/2) - log_gamma(s)), so moderate |Im s| cannot overflow.
    chi(1/2 + it) has modulus one and chi(s) chi(1-s) = 1.
    """
    s = _require_finite(s, "s")
    if s.imag == 0.0 and s.real == math.floor(s.real):
        r = s.real
        if r >= 1.0 and int(r) % 2 == 1:
            raise PoleError(f"chi pole: cos(pi s/2) vanishes at s={s}")
        if r <= 0.0:
            # Gamma pole; the limit value is a trivial zero or a 0/0 form.
            raise PoleError(f"chi undefined at the gamma pole s={s}")
    log_chi = (
        (s - 1.0) * LOG_2
        + s * LOG_PI
        - _log_cos(0.5 * math.pi * s)
        - log_gamma(s)
    )
    return cmath.exp(log_chi)


def theta(t: float, mode: ThetaMode = ThetaMode.EXACT,
          t_min: float = DEFAULT_T_MIN) -> float:
    """Riemann-Siegel theta phase.

    EXACT mode evaluates Im log Gamma(1/4 + it/2) - (t/2) log pi and is
    valid for any real t.  ASYMPTOTIC mode sums the six-term expansion
    t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3) + 31/(80640 t^5),
    requires t > 0, and warns below t_min where the truncated tail starts
    to matter.
    """
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    if mode is ThetaMode.EXACT:
        return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * LOG_PI
    if t <= 0.0:
        raise DomainError(f"asymptotic theta requires t > 0, got t={t}")
    if t < t_min:
        warnings.warn(
            f"asymptotic theta at t={t} below t_min={t_min}; "
            "truncation error may exceed 1e-9",
            stacklevel=2,
        )
    return (
        0.5 * t * math.log(t / TWO_PI)
        - 0.5 * t
        - math.pi / 8.0
        + _THETA_C1 / t
        + _THETA_C3 / t**3
        + _THETA_C5 / t**5
    )


def theta_derivative(t: float, t_min: float = DEFAULT_T_MIN) -> float:
    """Termwise derivative of the asymptotic theta expansion.

    theta'(t) = (1/2) log(t/2pi) - 1/(48 t^2) - 21/(5760 t^4)
    - 155/(80640 t^6).  Warns below t_min, rejects t <= 0.
    """
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    if t <= 0.0:
        raise DomainError(f"theta_derivative requires t > 0, got t={t}")
    if t < t_min:
        warnings.warn(
            f"theta_derivative at t={t} below t_min={t_min}",
            stacklevel=2,
        )
    return (
        0.5 * math.log(t / TWO_PI)
        - _THETA_C1 / t**2
        - 3.0 * _THETA_C3 / t**4
        - 5.0 * _THETA_C5 / t**6
    )
