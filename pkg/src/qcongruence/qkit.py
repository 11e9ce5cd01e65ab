"""q-integers, q-Pochhammer symbols, Gaussian binomials, cyclotomic
polynomials and the small number-theoretic helpers used by the sums."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping

from .exact import (ONE, Frac, MPoly, ParamValue, UPoly, apply_modes,
                    upoly_exact_div)


class NotCoprime(ValueError):
    """Denominator of a rational is not invertible modulo the given modulus."""


class ConstraintError(ValueError):
    """Parameters violate the hypotheses of the statement being built."""


def q_integer(n: int) -> UPoly:
    """[n] = 1 + q + ... + q^(n-1)."""
    if n < 1:
        raise ValueError("q_integer needs n >= 1")
    return UPoly([1] * n)


_cyclo_lock = threading.Lock()
_cyclo_cache: dict[int, UPoly] = {1: UPoly([-1, 1])}


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def cyclotomic(n: int) -> UPoly:
    """Phi_n(q), by exact division of q^n - 1 by the smaller Phi_d."""
    if n < 1:
        raise ValueError("cyclotomic needs n >= 1")
    hit = _cyclo_cache.get(n)
    if hit is not None:
        return hit
    poly = UPoly([-1] + [0] * (n - 1) + [1])
    for d in divisors(n)[:-1]:
        poly = upoly_exact_div(poly, cyclotomic(d))
    with _cyclo_lock:
        return _cyclo_cache.setdefault(n, poly)


# ---------------------------------------------------------------------------
# q-shifted factorials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PochSpec:
    """``(sign * a^a b^b x^x q^q_exp ; q^base)_length``.

    ``(q/a; q^2)_k`` is ``PochSpec(q_exp=1, base=2, length=k, a=-1)`` and
    ``(abq^{2d}; q^{2d})_k`` sets ``a=1, b=1``.
    """

    q_exp: int = 0
    base: int = 1
    length: int = 0
    sign: int = 1
    a: int = 0
    b: int = 0
    x: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.base < 1 or self.length < 0:
            raise ValueError("need base >= 1 and length >= 0")

    def argument(self) -> MPoly:
        return MPoly.mono(self.sign, q=self.q_exp, a=self.a, b=self.b, x=self.x)


def poch_factor(arg: MPoly, base: int, j: int) -> MPoly:
    """The j-th factor ``1 - arg*q^(base*j)`` of ``(arg; q^base)_k``."""
    return ONE - arg.scale(q=base * j)


def poch_poly(arg: MPoly, base: int, length: int, start: int = 0) -> MPoly:
    out = ONE
    for j in range(start, start + length):
        out = out * poch_factor(arg, base, j)
    return out


def pochhammer(spec: PochSpec, modes: Mapping[str, ParamValue] | None = None) -> Frac:
    arg = apply_modes(spec.argument(), modes)
    return Frac(poch_poly(arg, spec.base, spec.length))


def qbinom(n: int, k: int, d: int = 1) -> UPoly:
    """Gaussian binomial [n choose k] in q^d; zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return UPoly()
    k = min(k, n - k)
    out = UPoly([1])
    for i in range(1, k + 1):
        top = UPoly([1] + [0] * (d * (n - k + i) - 1) + [-1])
        out = upoly_exact_div(out * top, UPoly([1] + [0] * (d * i - 1) + [-1]))
    return out


# ---------------------------------------------------------------------------
# Number theory
# ---------------------------------------------------------------------------

def least_nonneg_residue(x, m: int) -> int:
    """<x>_m: the t in [0, m) with den(x)*t = num(x) mod m."""
    if m < 1:
        raise ValueError("modulus must be positive")
    x = Fraction(x)
    if gcd(x.denominator, m) != 1:
        raise NotCoprime(f"denominator {x.denominator} not invertible mod {m}")
    if m == 1:
        return 0
    return x.numerator * pow(x.denominator, -1, m) % m


def kronecker(D: int, n: int) -> int:
    """Jacobi symbol (D/n) for odd n >= 1, via quadratic reciprocity."""
    if n < 1 or n % 2 == 0:
        raise ValueError("kronecker here needs odd positive n")
    a = D % n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def residue_identity_check(d: int, n: int, r: int) -> bool:
    """r + d<-r/d>_n == n<r/n>_d for 0 < r < d, gcd(d, n) = 1."""
    if not (0 < r < d) or n < 1 or gcd(d, n) != 1:
        raise ConstraintError("need 0 < r < d and gcd(d, n) = 1")
    lhs = r + d * least_nonneg_residue(Fraction(-r, d), n)
    rhs = n * least_nonneg_residue(Fraction(r, n), d)
    return lhs == rhs


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def odd_half_exponent(n: int, numer_sign: int, denom: int) -> int:
    """Exact integer (numer_sign*(n^2 - 1))/denom for odd n."""
    if n % 2 == 0:
        raise ConstraintError("n must be odd")
    top = numer_sign * (n * n - 1)
    assert top % denom == 0
    return top // denom


# ---------------------------------------------------------------------------
# Little q-Legendre polynomials
# ---------------------------------------------------------------------------

def _up(p: UPoly, d: int) -> MPoly:
    """UPoly in q, read in q^d."""
    return MPoly.from_terms(((d * (p.val + i), 0, 0, 0), c)
                            for i, c in enumerate(p.coeffs) if c)


def little_q_legendre(n: int, expansion: str = "standard", base: int = 1) -> Frac:
    """P_n(x | q^base) under one of three expansions.

    standard: sum [n,k][n+k,k] q^(k(k+1)/2 - nk) (-x)^k
    signed:   (-1)^n q^(-n(n+1)/2) sum [n,k][n+k,k] (-1)^k q^(k(k+1)/2 - nk) (xq;q)_k
    new:      sum [n,k]^2 q^(k(k+1)/2 - nk) (-x)^k (xq;q)_(n-k)
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    d = base
    xq = MPoly.mono(1, q=d, x=1)
    total = MPoly()
    for k in range(n + 1):
        e = d * (k * (k + 1) // 2 - n * k)
        if expansion == "standard":
            c = _up(qbinom(n, k) * qbinom(n + k, k), d)
            total = total + c * MPoly.mono((-1) ** k, q=e, x=k)
        elif expansion == "signed":
            c = _up(qbinom(n, k) * qbinom(n + k, k), d)
            total = total + c * poch_poly(xq, d, k).scale((-1) ** k, q=e)
        elif expansion == "new":
            c = _up(qbinom(n, k) ** 2, d)
            total = total + c * poch_poly(xq, d, n - k).scale((-1) ** k, q=e, x=k)
        else:
            raise ValueError(f"unknown expansion {expansion!r}")
    if expansion == "signed":
        total = total.scale((-1) ** n, q=-d * n * (n + 1) // 2)
    return Frac(total)
