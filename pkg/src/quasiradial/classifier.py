"""Which rational gamma admit algebraic N-solutions, and for which N.

For ``gamma = p/q`` in lowest terms, ``N >= 2`` is admissible exactly when
``D = N^2 p^2 - q^2 (2N - 1)`` is a perfect square.  The scan over ``N`` is
finite because admissible ``N`` satisfy ``N < q^2 (p^2 + 2 - q^2) / (2 p^2)``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .exact import is_perfect_square, rational_to_str
from .spectrum import DomainError, Gamma, GammaLike, as_gamma, make_spectrum

__all__ = [
    "AlgebraicCertificate",
    "AlgebraicClass",
    "discriminant",
    "n_bound",
    "n_bound_rational",
    "series_tag",
    "classify",
    "dioph_solution",
    "pell_s",
    "gamma_from_s",
    "minimal_series",
    "maximal_series",
    "enumerate_algebraic",
    "band",
    "worker_count",
]

SERIES = ("minimal", "maximal", "maximal_even", "beyond_maximal", "interior")


@dataclass(frozen=True)
class AlgebraicCertificate:
    n: int
    d: int
    k: Fraction
    discriminant: int
    pell_s: Fraction
    dioph_A: int
    dioph_B: int
    series: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "k": rational_to_str(self.k),
            "discriminant": self.discriminant,
            "pell_s": rational_to_str(self.pell_s),
            "dioph_A": self.dioph_A,
            "dioph_B": self.dioph_B,
            "series": self.series,
        }


@dataclass(frozen=True)
class AlgebraicClass:
    """The set of algebraic N for one gamma.

    ``all_n`` marks the gamma = 1 sentinel where every N is algebraic and
    ``certificates`` is left empty.
    """

    gamma: Gamma
    certificates: tuple[AlgebraicCertificate, ...] = ()
    n_bound: int = 1
    all_n: bool = False
    sign: int = 1

    @property
    def ns(self) -> list[int]:
        return [c.n for c in self.certificates]

    def __contains__(self, n: int) -> bool:
        if self.all_n:
            return isinstance(n, int) and n >= 1
        return n in self.ns

    def __len__(self) -> int:
        return len(self.certificates)

    def to_dict(self) -> dict:
        return {
            "gamma": str(self.gamma),
            "sign": self.sign,
            "all_n": self.all_n,
            "n_bound": self.n_bound,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def _pq(gamma: GammaLike) -> tuple[int, int]:
    g = as_gamma(gamma)
    if g.is_aronsson:
        raise DomainError("gamma = 1 has no finite classification data")
    return abs(g.p), g.q


def discriminant(gamma: GammaLike, n: int) -> int:
    p, q = _pq(gamma)
    if n < 2:
        raise DomainError("discriminant is defined for N >= 2")
    return n * n * p * p - q * q * (2 * n - 1)


def n_bound_rational(gamma: GammaLike) -> Fraction:
    """The rational quantity ``q^2 (p^2 + 2 - q^2) / (2 p^2)``."""
    p, q = _pq(gamma)
    return Fraction(q * q * (p * p + 2 - q * q), 2 * p * p)


def n_bound(gamma: GammaLike) -> int:
    """Largest N strictly below the finiteness bound (at least 1)."""
    b = n_bound_rational(gamma)
    if b <= 1:
        return 1
    floor = b.numerator // b.denominator
    return max(1, floor - 1 if b.denominator == 1 else floor)


def series_tag(p: int, q: int, n: int) -> str:
    p = abs(p)
    if p == q + 2 and q % 2 == 1 and 2 * n == q - 1:
        return "minimal"
    if q % 2 == 1 and p == q * q - 2 and 4 * n == q * q - 1:
        return "maximal"
    if q % 2 == 0 and 2 * p == q * q - 2 and 4 * n == q * q - 4:
        return "maximal_even"
    if q % 2 == 1 and p == q * q - 1 and 2 * n == q * q - 1:
        return "beyond_maximal"
    return "interior"


def dioph_solution(gamma: GammaLike, n: int) -> tuple[int, int]:
    """Coprime ``A > B >= 1`` with ``A^2 q - 2ABpN + q(2N-1)B^2 = 0``.

    ``A/B`` is the larger rational root ``(pN + d)/q``.
    """
    p, q = _pq(gamma)
    d = is_perfect_square(discriminant(gamma, n))
    if d is None:
        raise DomainError(f"D(gamma={as_gamma(gamma)}, N={n}) is not a perfect square")
    v = Fraction(p * n + d, q)
    return v.numerator, v.denominator


def pell_s(gamma: GammaLike, n: int) -> Fraction:
    """Parameter ``s`` in (0, 1) with ``gamma = (2N - 1 + s^2) / (2 s N)``.

    From the Pell solution ``x = p/d, y = q/d`` and ``x = (1 + s y)/N``.
    """
    p, q = _pq(gamma)
    d = is_perfect_square(discriminant(gamma, n))
    if d is None:
        raise DomainError(f"D(gamma={as_gamma(gamma)}, N={n}) is not a perfect square")
    s = Fraction(n * p - d, q)
    if s >= 1:
        s = (2 * n - 1) / s
    return s


def gamma_from_s(s: Fraction, n: int) -> Gamma:
    s = Fraction(s)
    if not 0 < s < 1:
        raise DomainError(f"s={s} must lie in (0, 1)")
    if n < 2:
        raise DomainError("N must be >= 2")
    return Gamma((2 * n - 1 + s * s) / (2 * s * n))


def _certificate(p: int, q: int, n: int, d: int) -> AlgebraicCertificate:
    gamma = Gamma(Fraction(p, q))
    spec = make_spectrum(gamma, n)
    A, B = dioph_solution(gamma, n)
    return AlgebraicCertificate(
        n=n,
        d=d,
        k=spec.k.to_fraction(),
        discriminant=n * n * p * p - q * q * (2 * n - 1),
        pell_s=pell_s(gamma, n),
        dioph_A=A,
        dioph_B=B,
        series=series_tag(p, q, n),
    )


def _scan(p: int, q: int, n_max: int) -> list[AlgebraicCertificate]:
    out = []
    pp, qq = p * p, q * q
    for n in range(2, n_max + 1):
        d = is_perfect_square(n * n * pp - qq * (2 * n - 1))
        if d is not None:
            out.append(_certificate(p, q, n, d))
    return out


def classify(gamma: GammaLike) -> AlgebraicClass:
    g = as_gamma(gamma)
    if g.is_aronsson:
        return AlgebraicClass(gamma=g, all_n=True, n_bound=0)
    p, q = abs(g.p), g.q
    bound = n_bound(g)
    return AlgebraicClass(
        gamma=g,
        certificates=tuple(_scan(p, q, bound)),
        n_bound=bound,
        sign=1 if g.value > 0 else -1,
    )


def minimal_series(n: int) -> Gamma:
    if n < 2:
        raise DomainError("minimal series starts at N = 2")
    return Gamma(Fraction(2 * n + 3, 2 * n + 1))


def maximal_series(q: int) -> Optional[tuple[Gamma, int]]:
    """The extremal gamma with denominator ``q`` and its unique N."""
    if q < 3:
        raise DomainError("maximal series requires q >= 3")
    if q % 2:
        s = (q - 1) // 2
        return Gamma(Fraction(q * q - 2, q)), s * (s + 1)
    s = q // 2
    return Gamma(Fraction(2 * s * s - 1, q)), s * s - 1


def band(q: int, kind: str = "proven") -> range:
    """Numerators scanned for denominator ``q``.

    ``"proven"`` is ``q + 1 <= p <= q^2 - 1``, which every algebraic gamma
    satisfies.  ``"sharp"`` is ``q + 2 <= p <= q^2 - 2`` (``(q^2 - 2)/2`` for
    even q); it misses the odd-q family ``p = q^2 - 1``, ``N = (q^2 - 1)/2``.
    """
    if kind == "proven":
        return range(q + 1, q * q)
    if kind == "sharp":
        top = q * q - 2 if q % 2 else (q * q - 2) // 2
        return range(q + 2, top + 1)
    raise ValueError(f"unknown band {kind!r}")


def _enumerate_q(q: int, kind: str) -> list[tuple[int, int, AlgebraicCertificate]]:
    rows = []
    for p in band(q, kind):
        if gcd(p, q) != 1:
            continue
        bound = n_bound(Fraction(p, q))
        for cert in _scan(p, q, bound):
            rows.append((q, p, cert))
    return rows


def worker_count() -> int:
    env = os.environ.get("GH_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise DomainError(f"GH_THREADS={env!r} is not an integer") from None
    return os.cpu_count() or 1


def enumerate_algebraic(
    q_max: int, band_kind: str = "proven", workers: Optional[int] = None
) -> list[tuple[int, int, AlgebraicCertificate]]:
    """All ``(q, p, certificate)`` with ``3 <= q <= q_max``, sorted by (q, p, N)."""
    if q_max < 3:
        raise DomainError("q_max must be >= 3")
    band(3, band_kind)  # rejects an unknown band name before any work
    qs = list(range(3, q_max + 1))
    workers = worker_count() if workers is None else max(1, workers)
    if workers > 1 and q_max >= 40:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_enumerate_q, qs, [band_kind] * len(qs)))
    else:
        chunks = [_enumerate_q(q, band_kind) for q in qs]
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda r: (r[0], r[1], r[2].n))
    return rows
