"""Per-(gamma, N) constants of quasiradial N-solutions.

All algebraic constants are exact :class:`~quasiradial.exact.QuadExt`
values living in the single field ``Q(sqrt(N^2 gamma^2 - 2N + 1))``.  The
apex value ``z0`` is the only floating-point field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exact import QuadExt, parse_rational, quad_solve, rational_to_str

__all__ = [
    "Gamma",
    "Spectrum",
    "DomainError",
    "as_gamma",
    "characteristic_coefficients",
    "solve_k",
    "solve_k_roots",
    "solve_mu",
    "make_spectrum",
    "conjugate_exponent",
    "check_invariants",
]


class DomainError(ValueError):
    """Raised for parameters outside the admissible (gamma, N) range."""


@dataclass(frozen=True)
class Gamma:
    """An exact rational gamma with ``|gamma| > 1`` or ``gamma == 1``."""

    value: Fraction

    def __post_init__(self):
        v = self.value
        if not isinstance(v, Fraction):
            if isinstance(v, int) and not isinstance(v, bool):
                v = Fraction(v)
                object.__setattr__(self, "value", v)
            else:
                raise TypeError("gamma must be an exact int or Fraction")
        if not (abs(v) > 1 or v == 1):
            raise DomainError(f"gamma={v} must satisfy |gamma| > 1 or gamma = 1")

    @property
    def p(self) -> int:
        return self.value.numerator

    @property
    def q(self) -> int:
        return self.value.denominator

    @property
    def is_aronsson(self) -> bool:
        return self.value == 1

    def __neg__(self) -> "Gamma":
        return Gamma(-self.value)

    def __str__(self) -> str:
        return rational_to_str(self.value)


GammaLike = Union[Gamma, Fraction, int, str]


def as_gamma(g: GammaLike) -> Gamma:
    if isinstance(g, Gamma):
        return g
    if isinstance(g, str):
        return Gamma(parse_rational(g))
    if isinstance(g, float):
        raise TypeError("gamma must be exact; floats are not accepted")
    return Gamma(Fraction(g))


def _check_n(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"N must be a positive integer, got {n!r}")
    return n


def characteristic_coefficients(gamma: GammaLike, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of ``(2N-1)(g+1)k^2 - 2(N^2 g + 2N - 1)k + N^2(1+g) = 0``."""
    g = as_gamma(gamma).value
    n = _check_n(n)
    return (
        (2 * n - 1) * (g + 1),
        -2 * (n * n * g + 2 * n - 1),
        n * n * (1 + g),
    )


def solve_k_roots(gamma: GammaLike, n: int) -> tuple[QuadExt, QuadExt]:
    """Both roots of the characteristic equation, ascending (diagnostics)."""
    return quad_solve(*characteristic_coefficients(gamma, n))


def solve_k(gamma: GammaLike, n: int) -> QuadExt:
    """Growth exponent: the larger characteristic root (equal to 1 for N = 1)."""
    return solve_k_roots(gamma, n)[1]


def solve_mu(gamma: GammaLike, n: int) -> QuadExt:
    """``mu = N g +/- sqrt(N^2 g^2 - 2N + 1)``, sign following sign(g)."""
    g = as_gamma(gamma).value
    n = _check_n(n)
    root = QuadExt.sqrt(n * n * g * g - 2 * n + 1)
    return n * g + root if g > 0 else n * g - root


@dataclass(frozen=True)
class Spectrum:
    """All per-(gamma, N) constants.

    ``period`` is ``2*pi*t_rat``.  ``k_conj`` and ``alpha`` are ``None``
    where they are undefined (gamma = 1, respectively N = 1).
    """

    gamma: Gamma
    n: int
    k: QuadExt
    lam: QuadExt
    mu: QuadExt
    t_rat: Fraction
    z0: float
    alpha: Optional[QuadExt]
    k_conj: Optional[QuadExt]
    k_small: QuadExt

    @property
    def period(self) -> float:
        return 2.0 * math.pi * float(self.t_rat)

    @property
    def trivial(self) -> bool:
        return self.n == 1

    def floats(self) -> tuple[float, float, float]:
        """``(k, lambda, mu)`` as floats."""
        return float(self.k), float(self.lam), float(self.mu)

    def is_rational(self) -> bool:
        return self.k.is_rational()

    def to_dict(self) -> dict:
        exact = {"k": self.k, "lambda": self.lam, "mu": self.mu, "k_small": self.k_small}
        if self.alpha is not None:
            exact["alpha"] = self.alpha
        if self.k_conj is not None:
            exact["k_conj"] = self.k_conj
        out = {name: str(v) for name, v in exact.items()}
        out.update(
            gamma=str(self.gamma),
            n=self.n,
            t_rat=rational_to_str(self.t_rat),
            period=self.period,
            z0=self.z0,
            rational=self.is_rational(),
            trivial=self.trivial,
            exact={name: v.to_json() for name, v in exact.items()},
            floats={name: float(v) for name, v in exact.items()},
        )
        if self.alpha is None:
            out["alpha"] = None
        if self.k_conj is None:
            out["k_conj"] = None
        return out


def _apex(k: float, lam: float) -> float:
    return math.exp((k - 1.0) * math.log(lam) - k * math.log(k))


def make_spectrum(gamma: GammaLike, n: int) -> Spectrum:
    g = as_gamma(gamma)
    n = _check_n(n)
    if g.is_aronsson and n == 1:
        raise DomainError("gamma = 1 requires N >= 2")
    k_small, k = solve_k_roots(g, n)
    mu = solve_mu(g, n)
    # lambda from mu keeps everything in one quadratic field
    lam = k * (mu - 1) / (mu + 1)
    t = 1 - (k - 1) / lam
    if not t.is_rational():
        raise ArithmeticError(f"period ratio {t} is not rational")
    denom = k * (2 * n - 1) - n
    alpha = 2 / denom if denom else None
    k_conj = None if g.is_aronsson else (2 - k * (1 + g.value)) / (1 - g.value)
    return Spectrum(
        gamma=g,
        n=n,
        k=k,
        lam=lam,
        mu=mu,
        t_rat=t.to_fraction(),
        z0=_apex(float(k), float(lam)),
        alpha=alpha,
        k_conj=k_conj,
        k_small=k_small,
    )


def conjugate_exponent(spec: Spectrum) -> QuadExt:
    """``k*`` with ``k(1+g) + k*(1-g) = 2``."""
    if spec.gamma.is_aronsson or spec.k_conj is None:
        raise DomainError("conjugate exponent is unsupported for gamma = 1")
    return spec.k_conj


def check_invariants(spec: Spectrum) -> dict[str, bool]:
    """Evaluate every exact spectrum identity; each entry must be ``True``."""
    g = spec.gamma.value
    n = spec.n
    k, lam, mu = spec.k, spec.lam, spec.mu
    a, b, c = characteristic_coefficients(spec.gamma, n)
    out = {
        "characteristic_root": a * k * k + b * k + c == 0 and k >= spec.k_small,
        "k_range": (k == 1) if n == 1 else (k > 1),
        "lambda_square": lam * lam == k * k - 2 * k / (g + 1),
        "lambda_positive": lam > 0,
        "winding_ratio": (k - 1) / lam == Fraction(n - 1, n),
        "mu_from_k_lambda": mu == (k + lam) / (k - lam),
        "k_from_mu": k == (1 + mu) ** 2 / (2 * mu * (g + 1)),
        "n_from_mu": n == (mu * mu - 1) / (2 * (mu * g - 1)) if mu * g != 1 else False,
        "mu_quadratic": mu * mu - 2 * g * n * mu + (2 * n - 1) == 0,
        "period": spec.t_rat == Fraction(1, n),
    }
    if n >= 2:
        if g > 1:
            out["mu_range"] = mu > 2 * n - 1
        elif g < -1:
            out["mu_range"] = mu < -(2 * n - 1)
        else:
            out["mu_range"] = mu == 2 * n - 1
    if spec.k_conj is not None:
        out["conjugate_exponent"] = k * (1 + g) + spec.k_conj * (1 - g) == 2
    if spec.alpha is not None:
        out["alpha"] = spec.alpha * (k * (2 * n - 1) - n) == 2
    return out
