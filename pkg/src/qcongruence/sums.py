"""Builders for the truncated q-sums on both sides of each congruence,
the classical summation formulas, and the q -> 1 integer sums.

Every q-sum is accumulated by term ratios: with ``t_k = P_k / D_k`` and the
partial sum ``S_k = N_k / D_k``, one step multiplies ``P`` by the ratio's
numerator factors and ``N`` by its denominator factors.  Each step costs a
few multiplications by binomials and the denominator stays factored.

Parameter handling: every builder takes ``modes``, a mapping from ``"a"``,
``"b"``, ``"x"`` to ``None`` (symbolic), a :class:`SignedPower` or a
rational.  Specializing at build time is the same as building symbolically
and substituting afterwards, but it never forms the large symbolic sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Mapping, Sequence

from .exact import (ONE, Frac, MPoly, ParamValue, apply_modes, canon_binomial, cdiv)
from .qkit import (ConstraintError, is_prime, kronecker, least_nonneg_residue,
                   odd_half_exponent, poch_factor, poch_poly, q_integer, qbinom)

Modes = Mapping[str, ParamValue]

RatioFn = Callable[[int], tuple[Sequence[MPoly], Sequence[MPoly]]]


def ratio_sum(first_num: MPoly, first_den: Sequence[MPoly], count: int,
              ratio: RatioFn, weight: Callable[[int], MPoly] | None = None) -> Frac:
    """Sum ``count`` terms ``t_0 .. t_{count-1}`` given ``t_0`` and term ratios.

    ``ratio(j)`` returns the numerator and denominator factors of
    ``t_{j+1}/t_j``; ``weight(j)`` multiplies ``t_j`` only (e.g. ``[8k+1]``).
    Denominator factors are checked for vanishing even once the terms have
    become zero, so an illegal specialization is never hidden.
    """
    if count <= 0:
        return Frac(0)
    counts: dict[MPoly, int] = {}
    p = first_num
    for f in first_den:
        c, off, canon = canon_binomial(f)
        p = p.scale_key(cdiv(1, c), -off)
        if canon is not None:
            counts[canon] = counts.get(canon, 0) + 1
    n = p * weight(0) if weight else p
    for j in range(count - 1):
        nf, df = ratio(j)
        down = []
        for f in df:
            c, off, canon = canon_binomial(f)
            p = p.scale_key(cdiv(1, c), -off)
            if canon is not None:
                down.append(canon)
        if p.is_zero():
            continue
        for f in nf:
            if f.is_zero():
                p = f
                break
            c, off, canon = canon_binomial(f)
            if canon is not None and canon in down:
                down.remove(canon)
                p = p.scale_key(c, off)
            else:
                p = p * f
        for f in down:
            n = n * f
            counts[f] = counts.get(f, 0) + 1
        n = n + (p * weight(j + 1) if weight else p)
    return Frac._make(n, counts)


def _arg(modes: Modes | None, sign: int = 1, q: int = 0, a: int = 0, b: int = 0,
         x: int = 0) -> MPoly:
    return apply_modes(MPoly.mono(sign, q=q, a=a, b=b, x=x), modes)


def _qmono(c, e: int) -> MPoly:
    return MPoly.mono(c, q=e)


def _one_minus_q(e: int) -> MPoly:
    return ONE - _qmono(1, e)


def _require_odd(n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise ConstraintError(f"n = {n} must be a positive odd integer")
    return (n - 1) // 2


def _require_coprime(d: int, n: int, r: int) -> None:
    if d < 1 or r < 1:
        raise ConstraintError("d and r must be positive")
    if gcd(d, n) != 1:
        raise ConstraintError(f"gcd(d, n) = gcd({d}, {n}) != 1")


def residue_r1(n: int, d: int, r: int) -> int:
    """<-r/d>_n."""
    return least_nonneg_residue(Fraction(-r, d), n)


def residue_r2(n: int, d: int, r: int) -> int:
    """<(r-d)/d>_n."""
    return least_nonneg_residue(Fraction(r - d, d), n)


# ---------------------------------------------------------------------------
# Truncated basic hypergeometric series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhiSeriesSpec:
    """sum_{k=0}^{terms} prod (u; q^base)_k / [(q^base; q^base)_k prod (l; q^base)_k] z^k."""

    upper: tuple[MPoly, ...]
    lower: tuple[MPoly, ...]
    base: int = 1
    argument: MPoly = field(default_factory=lambda: MPoly.mono(1, q=1))
    terms: int = 0


def phi_truncated(spec: PhiSeriesSpec) -> Frac:
    d = spec.base

    def ratio(k):
        nf = [poch_factor(u, d, k) for u in spec.upper] + [spec.argument]
        df = [_one_minus_q(d * (k + 1))] + [poch_factor(v, d, k) for v in spec.lower]
        return nf, df

    return ratio_sum(ONE, [], spec.terms + 1, ratio)


# ---------------------------------------------------------------------------
# Two-parameter sums vanishing modulo (1 - a q^i)(1 - b q^j)
# ---------------------------------------------------------------------------

def thm11_admissible_s(n: int, d: int, r: int) -> list[int]:
    r1 = residue_r1(n, d, r)
    return [s for s in range(n) if s % 2 == (r1 + 1) % 2]


def thm11_check(n: int, d: int, r: int, s: int) -> None:
    _require_odd(n)
    _require_coprime(d, n, r)
    if not 0 <= s <= n - 1:
        raise ConstraintError(f"s = {s} outside [0, n-1]")
    r1 = residue_r1(n, d, r)
    if s % 2 != (r1 + 1) % 2:
        raise ConstraintError(f"s = {s} must satisfy s = <-r/d>_n + 1 = {r1 + 1} (mod 2)")


def thm11_lhs(n: int, d: int, r: int, s: int, modes: Modes | None = None) -> Frac:
    thm11_check(n, d, r, s)
    aq = _arg(modes, q=r, a=1)
    bq = _arg(modes, q=d - r, b=1)
    abq = _arg(modes, q=2 * d, a=1, b=1)
    qd = _qmono(1, d)
    num = (poch_poly(aq, d, s) * poch_poly(bq, d, s) * poch_poly(qd, 2 * d, s)
           ).scale(q=d * s)
    den = ([_one_minus_q(d * (j + 1)) for j in range(2 * s)]
           + [poch_factor(abq, 2 * d, j) for j in range(s)])

    def ratio(j):
        k = s + j
        nf = [poch_factor(aq, d, k), poch_factor(bq, d, k),
              poch_factor(qd, 2 * d, k), qd]
        df = [_one_minus_q(d * (k + 1 - s)), _one_minus_q(d * (k + 1 + s)),
              poch_factor(abq, 2 * d, k)]
        return nf, df

    return ratio_sum(num, den, n - s, ratio)


def thm11_roots(n: int, d: int, r: int) -> tuple[int, int]:
    """Exponents e_a, e_b of the modulus (1 - a q^e_a)(1 - b q^e_b)."""
    return r + d * residue_r1(n, d, r), d - r + d * residue_r2(n, d, r)


# ---------------------------------------------------------------------------
# Two-parameter sums with a free x, and their specializations
# ---------------------------------------------------------------------------

def thm13_check(n: int, d: int, r: int) -> None:
    _require_odd(n)
    _require_coprime(d, n, r)


def thm13_side(n: int, d: int, r: int, x_sign: int = 1,
               modes: Modes | None = None) -> Frac:
    """sum_k (aq^r;q^d)_k (bq^(d-r);q^d)_k (x_sign*x;q^d)_k q^(dk)
    / [(q^d;q^d)_k (abq^(2d);q^(2d))_k]."""
    thm13_check(n, d, r)
    aq = _arg(modes, q=r, a=1)
    bq = _arg(modes, q=d - r, b=1)
    abq = _arg(modes, q=2 * d, a=1, b=1)
    xs = _arg(modes, sign=x_sign, x=1)
    qd = _qmono(1, d)

    def ratio(k):
        nf = [poch_factor(aq, d, k), poch_factor(bq, d, k), poch_factor(xs, d, k), qd]
        df = [_one_minus_q(d * (k + 1)), poch_factor(abq, 2 * d, k)]
        return nf, df

    return ratio_sum(ONE, [], n, ratio)


def thm13_sign(n: int, d: int, r: int) -> int:
    return -1 if residue_r1(n, d, r) % 2 else 1


def thm13_rhs(n: int, d: int, r: int, modes: Modes | None = None) -> Frac:
    side = thm13_side(n, d, r, -1, modes)
    return side if thm13_sign(n, d, r) == 1 else -side


def cor14_lhs(n: int, d: int, r: int, modes: Modes | None = None) -> Frac:
    thm13_check(n, d, r)
    aq = _arg(modes, q=r, a=1)
    ainv = _arg(modes, q=d - r, a=-1)
    qd = _qmono(1, d)

    def ratio(k):
        nf = [poch_factor(aq, d, k), poch_factor(ainv, d, k),
              ONE + _qmono(1, d * k), qd]
        df = [_one_minus_q(d * (k + 1)), _one_minus_q(d * (k + 1)),
              ONE + _qmono(1, d * (k + 1))]
        return nf, df

    # k = 0 term is 2/(1 + q^0) = 1
    return ratio_sum(ONE, [], n, ratio)


def cor14_rhs(n: int, d: int, r: int) -> Frac:
    thm13_check(n, d, r)
    return Frac(thm13_sign(n, d, r))


def cor15_roots(n: int, d: int, r: int) -> tuple[int, int]:
    """Exponents n<r/n>_d and n<(d-r)/n>_d, the alternate form of the modulus."""
    if not 0 < r < d:
        raise ConstraintError("alternate modulus form needs 0 < r < d")
    return (n * least_nonneg_residue(Fraction(r, n), d),
            n * least_nonneg_residue(Fraction(d - r, n), d))


# ---------------------------------------------------------------------------
# Ramanujan-type sum with cube modulus at a = 1
# ---------------------------------------------------------------------------

def ramanujan_q_lhs(n: int, modes: Modes | None = None) -> Frac:
    if n < 1 or gcd(n, 6) != 1:
        raise ConstraintError(f"n = {n} must be coprime to 6")
    a = _arg(modes, a=1)
    ainv = _arg(modes, a=-1)

    def ratio(k):
        nf = [poch_factor(a.scale(q=1), 2, k), poch_factor(ainv.scale(q=1), 2, k),
              _one_minus_q(4 * k + 1), _one_minus_q(4 * k + 3), _qmono(1, 4 * k + 2)]
        df = [_one_minus_q(4 * k + 2), _one_minus_q(4 * k + 4),
              poch_factor(a.scale(q=6), 6, k), poch_factor(ainv.scale(q=6), 6, k)]
        return nf, df

    return ratio_sum(ONE, [], n, ratio, weight=lambda k: q_integer(8 * k + 1).to_mpoly())


def ramanujan_q_rhs(n: int) -> Frac:
    if n < 1 or gcd(n, 6) != 1:
        raise ConstraintError(f"n = {n} must be coprime to 6")
    return Frac(q_integer(n).to_mpoly().scale(kronecker(-3, n), q=-(n - 1) // 2))


# ---------------------------------------------------------------------------
# Sums over (aq;q^2)_k (q/a;q^2)_k / (q^2;q^2)_k^2 and their variants
# ---------------------------------------------------------------------------

def _rv_sum(n: int, modes: Modes | None, x_power: bool, q2k: bool,
            x_poch: bool) -> Frac:
    """sum_{k<n} (aq;q^2)_k (q/a;q^2)_k [x^k] [q^(2k)] [(x;q^2)_k] / (q^2;q^2)_k^2."""
    aq = _arg(modes, q=1, a=1)
    aiq = _arg(modes, q=1, a=-1)
    xv = _arg(modes, x=1)

    def ratio(k):
        nf = [poch_factor(aq, 2, k), poch_factor(aiq, 2, k)]
        if x_power:
            nf.append(xv)
        if q2k:
            nf.append(_qmono(1, 2))
        if x_poch:
            nf.append(poch_factor(xv, 2, k))
        df = [_one_minus_q(2 * k + 2), _one_minus_q(2 * k + 2)]
        return nf, df

    return ratio_sum(ONE, [], n, ratio)


def rv_sign_power(n: int) -> Frac:
    """(-1)^((n-1)/2) q^((1-n^2)/4)."""
    m = _require_odd(n)
    return Frac(_qmono((-1) ** m, odd_half_exponent(n, -1, 4)))


def thm15_lhs(n: int, modes: Modes | None = None) -> Frac:
    _require_odd(n)
    return _rv_sum(n, modes, x_power=False, q2k=False, x_poch=False)


def thm15_rhs(n: int) -> Frac:
    return rv_sign_power(n)


def thm41_lhs(n: int, modes: Modes | None = None) -> Frac:
    _require_odd(n)
    return _rv_sum(n, modes, x_power=True, q2k=False, x_poch=False)


def thm41_rhs(n: int, modes: Modes | None = None) -> Frac:
    """sum_{k<=m} [m,k]_{q^2}^2 q^(k^2-nk) (-x)^k (x;q^2)_(m-k), m = (n-1)/2."""
    m = _require_odd(n)
    xv = _arg(modes, x=1)
    total = MPoly()
    for k in range(m + 1):
        c = qbinom(m, k, 2).to_mpoly()
        total = total + (c * c * (-xv) ** k * poch_poly(xv, 2, m - k)).scale(q=k * k - n * k)
    return Frac(total)


def thm42_rhs(n: int, modes: Modes | None = None) -> Frac:
    _require_odd(n)
    return rv_sign_power(n) * _rv_sum(n, modes, x_power=False, q2k=True, x_poch=True)


def cor43_lhs(n: int, modes: Modes | None = None) -> Frac:
    _require_odd(n)
    return _rv_sum(n, modes, x_power=False, q2k=True, x_poch=False)


def cor43_rhs(n: int) -> Frac:
    m = _require_odd(n)
    return Frac(_qmono((-1) ** m, odd_half_exponent(n, 1, 4)))


def thm44_lhs(n: int, s: int, modes: Modes | None = None) -> Frac:
    m = _require_odd(n)
    if not 0 <= s <= m:
        raise ConstraintError(f"s = {s} outside [0, (n-1)/2 = {m}]")
    aq = _arg(modes, q=1, a=1)
    aiq = _arg(modes, q=1, a=-1)
    num = poch_poly(aiq, 2, s)
    den = [_one_minus_q(2 * (j + 1)) for j in range(s)]

    def ratio(k):
        nf = [poch_factor(aq, 2, k), poch_factor(aiq, 2, k + s)]
        df = [_one_minus_q(2 * k + 2), _one_minus_q(2 * (k + s) + 2)]
        return nf, df

    return ratio_sum(num, den, m + 1, ratio)


def thm44_rhs(n: int) -> Frac:
    return rv_sign_power(n)


def identity51_sides(N: int, M: int) -> tuple[Frac, Frac]:
    lhs = MPoly()
    for k in range(N + 1):
        c = (qbinom(N, k) * qbinom(M + k, N)).to_mpoly()
        lhs = lhs + c.scale((-1) ** k, q=k * (k - 1) // 2 - N * k)
    return Frac(lhs), Frac(_qmono((-1) ** N, -(N * (N + 1) // 2)))


def identity51_check(N: int, M: int) -> bool:
    """sum_k (-1)^k [N,k][M+k,N] q^(C(k,2)-Nk) == (-1)^N q^(-C(N+1,2))."""
    if N < 0:
        raise ValueError("N must be non-negative")
    lhs, rhs = identity51_sides(N, M)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Squared (q;q^2)_k sums and central q-binomial sums
# ---------------------------------------------------------------------------

def thm46_lhs(n: int, variant: str, modes: Modes | None = None) -> Frac:
    """variant 'plus': (aq;q^2)_k (-q/a;q^2)_k q^2k / (q^2;q^2)_k; 'minus': (q/a;q^2)_k."""
    _require_odd(n)
    if variant not in ("plus", "minus"):
        raise ValueError(f"unknown variant {variant!r}")
    aq = _arg(modes, q=1, a=1)
    aiq = _arg(modes, sign=-1 if variant == "plus" else 1, q=1, a=-1)
    q2 = _qmono(1, 2)

    def ratio(k):
        return ([poch_factor(aq, 2, k), poch_factor(aiq, 2, k), q2],
                [_one_minus_q(2 * k + 2)])

    return ratio_sum(ONE, [], n, ratio)


def thm46_rhs(n: int, variant: str) -> Frac:
    m = _require_odd(n)
    sign = (-1) ** m if variant == "plus" else 1
    return Frac(_qmono(sign, odd_half_exponent(n, 1, 2)))


def conj45_lhs(n: int, form: str = "binomial") -> Frac:
    """binomial: sum q^k [2k,k] / (-q;q)_k;  pochhammer: sum (q;q^2)_k (-q;q^2)_k q^2k / (q^2;q^2)_k.

    The binomial form is summed term by term from Gaussian binomials, the
    other by term ratios, so they are independent routes to one series
    (the pochhammer form equals the binomial form at q^2).
    """
    _require_odd(n)
    if form == "binomial":
        total = Frac(0)
        for k in range(n):
            term = Frac(qbinom(2 * k, k).to_mpoly().scale(q=k),
                        [ONE + _qmono(1, j + 1) for j in range(k)])
            total = total + term
        return total
    if form == "pochhammer":
        q1 = _qmono(1, 1)
        mq1 = _qmono(-1, 1)
        q2 = _qmono(1, 2)

        def ratio(k):
            return ([poch_factor(q1, 2, k), poch_factor(mq1, 2, k), q2],
                    [_one_minus_q(2 * k + 2)])

        return ratio_sum(ONE, [], n, ratio)
    raise ValueError(f"unknown form {form!r}")


def conj45_rhs(n: int, form: str = "binomial") -> Frac:
    m = _require_odd(n)
    den = 4 if form == "binomial" else 2
    return Frac(_qmono((-1) ** m, odd_half_exponent(n, 1, den)))


# ---------------------------------------------------------------------------
# The terminating sum F_n(x, b, q), odd or even in x
# ---------------------------------------------------------------------------

def fn_lemma31(n: int, x_sign: int = 1, modes: Modes | None = None) -> Frac:
    """F_n(x_sign*x, b, q) = sum_{k<=n} (q^-n;q)_k (b;q)_k (x;q)_k q^k / [(q;q)_k (bq^(1-n);q^2)_k]."""
    if n < 0:
        raise ValueError("n must be non-negative")
    bv = _arg(modes, b=1)
    xs = _arg(modes, sign=x_sign, x=1)
    q1 = _qmono(1, 1)
    bq = bv.scale(q=1 - n)

    def ratio(k):
        return ([_one_minus_q(k - n), poch_factor(bv, 1, k), poch_factor(xs, 1, k), q1],
                [_one_minus_q(k + 1), poch_factor(bq, 2, k)])

    return ratio_sum(ONE, [], n + 1, ratio)


def lemma31_residual(n: int) -> Frac:
    """F_n(x) - (-1)^n F_n(-x); zero exactly when the symmetry holds."""
    f_plus = fn_lemma31(n, 1)
    f_minus = fn_lemma31(n, -1)
    return f_plus - f_minus if n % 2 == 0 else f_plus + f_minus


# ---------------------------------------------------------------------------
# Classical summation formulas
# ---------------------------------------------------------------------------

CLASSICAL = ("q-chu-vandermonde", "q-pfaff-saalschutz", "andrews-q-watson",
             "q-gauss-terminating", "q-binomial-theorem")


def _poch_frac_den(arg: MPoly, base: int, length: int) -> list[MPoly]:
    return [poch_factor(arg, base, j) for j in range(length)]


def classical_identity_sides(name: str, n: int, modes: Modes | None = None,
                             j: int = 0) -> tuple[Frac, Frac]:
    """Both sides of a classical terminating summation.

    Free parameters: q-chu-vandermonde uses (a, c=b); q-pfaff-saalschutz
    uses (a, b, c=x); andrews-q-watson uses (a, b); q-gauss-terminating
    uses b and the shift ``j``; the q-binomial theorem uses x.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    a = _arg(modes, a=1)
    b = _arg(modes, b=1)
    x = _arg(modes, x=1)
    q_n = _qmono(1, -n)
    if name == "q-chu-vandermonde":
        c = b
        lhs = phi_truncated(PhiSeriesSpec((a, q_n), (c,), 1, _qmono(1, 1), n))
        c_over_a = _arg(modes, a=-1, b=1)
        rhs = Frac(poch_poly(c_over_a, 1, n) * a ** n, _poch_frac_den(c, 1, n))
        return lhs, rhs
    if name == "q-pfaff-saalschutz":
        c = x
        low2 = _arg(modes, q=1 - n, a=1, b=1, x=-1)
        lhs = phi_truncated(PhiSeriesSpec((q_n, a, b), (c, low2), 1, _qmono(1, 1), n))
        rhs = Frac(poch_poly(_arg(modes, a=-1, x=1), 1, n) * poch_poly(_arg(modes, b=-1, x=1), 1, n),
                   _poch_frac_den(c, 1, n) + _poch_frac_den(_arg(modes, a=-1, b=-1, x=1), 1, n))
        return lhs, rhs
    if name == "andrews-q-watson":
        upper = (q_n, _arg(modes, q=n + 1, a=2), b, -b)
        lower = (_arg(modes, q=1, a=1), _arg(modes, sign=-1, q=1, a=1), _arg(modes, b=2))
        lhs = phi_truncated(PhiSeriesSpec(upper, lower, 1, _qmono(1, 1), n))
        if n % 2:
            return lhs, Frac(0)
        h = n // 2
        num = (b ** n * poch_poly(_qmono(1, 1), 2, h)
               * poch_poly(_arg(modes, q=2, a=2, b=-2), 2, h))
        den = _poch_frac_den(_arg(modes, q=2, a=2), 2, h) + _poch_frac_den(_arg(modes, q=1, b=2), 2, h)
        return lhs, Frac(num, den)
    if name == "q-gauss-terminating":
        if not 0 <= j <= n:
            raise ConstraintError(f"j = {j} outside [0, n]")
        bj = b.scale(q=j)
        bl = b.scale(q=2 * j + 1 - n)

        def ratio(k):
            return ([_one_minus_q(j - n + k), poch_factor(bj, 1, k), _qmono(1, k + 1)],
                    [_one_minus_q(k + 1), poch_factor(bl, 2, k)])

        lhs = ratio_sum(ONE, [], n - j + 1, ratio)
        if (n - j) % 2:
            return lhs, Frac(0)
        h = (n - j) // 2
        rhs = Frac(poch_poly(_qmono(1, j + 1 - n), 2, h), _poch_frac_den(bl, 2, h))
        return lhs, rhs
    if name == "q-binomial-theorem":
        lhs = Frac(poch_poly(x, 1, n))
        total = MPoly()
        for k in range(n + 1):
            total = total + qbinom(n, k).to_mpoly() * (-x) ** k * _qmono(1, k * (k - 1) // 2)
        return lhs, Frac(total)
    raise ValueError(f"unknown identity {name!r}; choose from {', '.join(CLASSICAL)}")


def classical_identity_check(name: str, n: int, modes: Modes | None = None,
                             j: int | None = None) -> bool:
    """Exact equality of both sides; q-gauss-terminating checks every j <= n
    unless ``j`` is given."""
    if name == "q-gauss-terminating" and j is None:
        return all(classical_identity_check(name, n, modes, jj) for jj in range(n + 1))
    lhs, rhs = classical_identity_sides(name, n, modes, j or 0)
    return lhs == rhs


# ---------------------------------------------------------------------------
# q -> 1 integer sums
# ---------------------------------------------------------------------------

INTEGER_SUMS = ("rv", "ram1a", "sun-tauraso")


def integer_sum(name: str, p: int, extra: int = 1) -> Fraction:
    if p % 2 == 0 or not is_prime(p):
        raise ConstraintError(f"p = {p} must be an odd prime")
    if name == "rv":
        return sum((Fraction(comb(2 * k, k) ** 2, 16 ** k) for k in range(p)), Fraction(0))
    if name == "ram1a":
        if p <= 3:
            raise ConstraintError("ram1a needs p > 3")
        return sum((Fraction(comb(4 * k, 2 * k) * comb(2 * k, k) ** 2 * (8 * k + 1),
                             2 ** (8 * k) * 3 ** (2 * k)) for k in range(p)), Fraction(0))
    if name == "sun-tauraso":
        if extra < 1:
            raise ConstraintError("exponent r must be >= 1")
        return sum((Fraction(comb(2 * k, k), 2 ** k) for k in range(p ** extra)), Fraction(0))
    raise ValueError(f"unknown integer sum {name!r}")


def integer_expected(name: str, p: int, extra: int = 1) -> int:
    if name == "rv":
        return (-1) ** ((p - 1) // 2)
    if name == "ram1a":
        return p * kronecker(-3, p)
    if name == "sun-tauraso":
        return (-1) ** ((p ** extra - 1) // 2)
    raise ValueError(f"unknown integer sum {name!r}")
