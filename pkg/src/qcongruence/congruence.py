"""Congruence semantics and the verification engine.

``A = B (mod M)`` for rational functions means that ``A - B``, written over
its factored denominator, has a denominator coprime to ``M`` and a
numerator divisible by ``M``.  Three kinds of modulus factor are checked:

* parameter-linear binomials such as ``1 - a q^n`` or ``a + q^n``: substitute
  the root for the parameter and demand an exact zero;
* cyclotomic powers ``Phi_n(q)^k``: compare Phi_n-adic valuations of the
  numerator and denominator, by repeated exact division;
* integer prime powers ``p^k``: reduce a rational in the integers localized
  at ``p``.

A product of pairwise coprime factors is checked one factor at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Union

from .exact import (DenominatorVanishes, Frac, MPoly, NonUnivariate, SignedPower,
                    UPoly, serialize, serialize_frac, upoly_divrem,
                    upoly_exact_div, upoly_gcd)
from .qkit import cyclotomic, is_prime


class Status(str, Enum):
    VERIFIED = "verified"
    FAILED = "failed"
    SKIPPED = "skipped"


def _qpow(e: int) -> str:
    return "q" if e == 1 else f"q^{e}"


@dataclass(frozen=True)
class ParamFactor:
    """Binomial in one parameter that vanishes at ``param = root``."""

    param: str
    root: SignedPower

    kind = "ParamLinear"

    def __post_init__(self):
        if self.param not in ("a", "b"):
            raise ValueError("parameter factors live in a or b")

    @classmethod
    def one_minus(cls, param: str, e: int) -> "ParamFactor":
        """(1 - param*q^e)"""
        return cls(param, SignedPower(1, -e))

    @classmethod
    def minus(cls, param: str, e: int) -> "ParamFactor":
        """(param - q^e)"""
        return cls(param, SignedPower(1, e))

    @classmethod
    def plus(cls, param: str, e: int) -> "ParamFactor":
        """(param + q^e)"""
        return cls(param, SignedPower(-1, e))

    def polynomial(self) -> MPoly:
        """``param - root`` (the factor up to a unit)."""
        v = MPoly.mono(1, **{self.param: 1})
        return v - MPoly.mono(self.root.sign, q=self.root.exponent)

    def __str__(self) -> str:
        p, s, e = self.param, self.root.sign, self.root.exponent
        if e < 0:
            return f"(1 {'-' if s == 1 else '+'} {p}*{_qpow(-e)})"
        if e == 0:
            return f"(1 {'-' if s == 1 else '+'} {p})"
        return f"({p} {'-' if s == 1 else '+'} {_qpow(e)})"


@dataclass(frozen=True)
class CyclotomicFactor:
    n: int
    k: int = 1

    kind = "CyclotomicPower"

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("need n >= 1 and k >= 1")

    def __str__(self) -> str:
        return f"Phi_{self.n}(q)" + (f"^{self.k}" if self.k > 1 else "")


@dataclass(frozen=True)
class PrimePowerFactor:
    p: int
    k: int = 1

    kind = "IntegerPrimePower"

    def __post_init__(self):
        if not is_prime(self.p) or self.k < 1:
            raise ValueError("need a prime p and k >= 1")

    def __str__(self) -> str:
        return f"{self.p}^{self.k}" if self.k > 1 else str(self.p)


Factor = Union[ParamFactor, CyclotomicFactor, PrimePowerFactor]


@dataclass(frozen=True)
class Modulus:
    """Product of pairwise coprime factors; empty means exact equality."""

    factors: tuple[Factor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        cyc = [f for f in self.factors if isinstance(f, CyclotomicFactor)]
        ints = [f for f in self.factors if isinstance(f, PrimePowerFactor)]
        params = [f for f in self.factors if isinstance(f, ParamFactor)]
        if len(cyc) > 1 or len(ints) > 1:
            raise ValueError("at most one cyclotomic and one prime-power factor")
        if len(set(params)) != len(params):
            raise ValueError("parameter factors must be pairwise coprime")

    def __str__(self) -> str:
        if not self.factors:
            return "exact"
        return "*".join(str(f) for f in self.factors)


@dataclass
class VerifyOutcome:
    status: Status
    witness: str | None = None
    reason: str | None = None
    strategy: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return self.status is Status.VERIFIED


def combine(outcomes: list[VerifyOutcome]) -> VerifyOutcome:
    """Fail-closed aggregation: any Failed wins, then any Skipped."""
    strategy = [s for o in outcomes for s in o.strategy]
    for status in (Status.FAILED, Status.SKIPPED):
        bad = [o for o in outcomes if o.status is status]
        if bad:
            return VerifyOutcome(status,
                                 witness="; ".join(o.witness for o in bad if o.witness) or None,
                                 reason="; ".join(o.reason for o in bad if o.reason) or None,
                                 strategy=strategy)
    return VerifyOutcome(Status.VERIFIED, strategy=strategy)


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

def check_param_factor(lhs: Frac, rhs: Frac, f: ParamFactor) -> VerifyOutcome:
    label = f"{f}: {f.param} = {f.root}"
    try:
        ls = lhs.substitute(f.param, f.root)
        rs = rhs.substitute(f.param, f.root)
    except DenominatorVanishes as exc:
        return VerifyOutcome(Status.SKIPPED, reason=f"{label}: {exc}",
                             strategy=[f"{label} -> skipped (denominator vanishes)"])
    diff = ls - rs
    if diff.is_zero():
        return VerifyOutcome(Status.VERIFIED, strategy=[f"{label} -> difference is 0"])
    return VerifyOutcome(Status.FAILED, witness=f"{label}: {serialize_frac(diff)}",
                         strategy=[f"{label} -> nonzero residual"])


def _as_ordinary(p: MPoly) -> UPoly:
    u = UPoly.from_mpoly(p)
    return UPoly(u.coeffs)


def phi_valuation(poly: UPoly, phi: UPoly, limit: int | None = None) -> tuple[int, UPoly]:
    """Largest v (capped at ``limit``) with phi^v | poly, and poly / phi^v."""
    v = 0
    while limit is None or v < limit:
        qt = upoly_exact_div(poly, phi)
        if qt is None:
            break
        poly, v = qt, v + 1
    return v, poly


def check_cyclotomic(lhs: Frac, rhs: Frac, n: int, k: int) -> VerifyOutcome:
    label = str(CyclotomicFactor(n, k))
    extra = (lhs.variables() | rhs.variables()) - {"q"}
    if extra:
        raise NonUnivariate(f"{label} check needs q only; found {sorted(extra)}")
    n1, n2, common = lhs._over_common(rhs)
    num = n1 - n2
    if num.is_zero():
        return VerifyOutcome(Status.VERIFIED, strategy=[f"{label}: difference is 0"])
    phi = cyclotomic(n)
    v_den = 0
    for fac, m in common.items():
        g = _as_ordinary(fac)
        if upoly_gcd(g, phi).degree() > 0:
            v_den += m * phi_valuation(g, phi)[0]
    v_num, rest = phi_valuation(_as_ordinary(num), phi, k + v_den)
    note = f"{label}: v(num) >= {v_num}, v(den) = {v_den}"
    if v_num < v_den:
        return VerifyOutcome(Status.SKIPPED,
                             reason=f"{label}: denominator not coprime to Phi_{n}(q)",
                             strategy=[note + " -> skipped"])
    if v_num - v_den >= k:
        return VerifyOutcome(Status.VERIFIED, strategy=[note + " -> verified"])
    residue = upoly_divrem(rest, phi)[1]
    return VerifyOutcome(Status.FAILED,
                         witness=f"{label}: valuation {v_num - v_den} < {k}; "
                                 f"reduced numerator mod Phi_{n}(q) = {residue}",
                         strategy=[note + " -> failed"])


def check_integer_mod(value, expected: int, p: int, k: int) -> VerifyOutcome:
    value = Fraction(value)
    mod = p ** k
    label = f"mod {PrimePowerFactor(p, k)}"
    if value.denominator % p == 0:
        return VerifyOutcome(Status.SKIPPED,
                             reason=f"{label}: denominator {value.denominator} not invertible",
                             strategy=[f"{label} -> skipped"])
    residue = value.numerator * pow(value.denominator, -1, mod) % mod
    target = expected % mod
    note = f"{label}: value = {residue}, expected {expected} = {target}"
    if residue == target:
        return VerifyOutcome(Status.VERIFIED, strategy=[note + " -> verified"])
    return VerifyOutcome(Status.FAILED, witness=f"{label}: value = {residue}, expected {target}",
                         strategy=[note + " -> failed"])


def _at_one(f: Frac) -> Frac:
    for var in ("a", "b", "x"):
        if var in f.variables():
            f = f.substitute(var, 1)
    return f


def verify(lhs, rhs, m: Modulus) -> VerifyOutcome:
    """Check ``lhs = rhs (mod m)`` factor by factor.

    Parameter factors are checked with the other parameters symbolic; the
    cyclotomic factor after setting every remaining parameter to 1; the
    prime-power factor on rational constants.  An empty modulus asks for
    exact equality.
    """
    lhs, rhs = Frac.coerce(lhs), Frac.coerce(rhs)
    if not m.factors:
        diff = lhs - rhs
        if diff.is_zero():
            return VerifyOutcome(Status.VERIFIED, strategy=["exact: difference is 0"])
        return VerifyOutcome(Status.FAILED, witness=f"exact: {serialize_frac(diff)}",
                             strategy=["exact -> nonzero residual"])
    outcomes = []
    for f in m.factors:
        if isinstance(f, ParamFactor):
            outcomes.append(check_param_factor(lhs, rhs, f))
        elif isinstance(f, CyclotomicFactor):
            try:
                l1, r1 = _at_one(lhs), _at_one(rhs)
            except DenominatorVanishes as exc:
                outcomes.append(VerifyOutcome(Status.SKIPPED,
                                              reason=f"{f}: parameters -> 1: {exc}",
                                              strategy=[f"{f}: parameters -> 1 -> skipped"]))
                continue
            out = check_cyclotomic(l1, r1, f.n, f.k)
            if lhs.variables() - {"q"} or rhs.variables() - {"q"}:
                out.strategy = [f"{f} at parameters = 1"] + out.strategy
            outcomes.append(out)
        else:
            diff = lhs - rhs
            if diff.den or not diff.num.is_constant():
                outcomes.append(VerifyOutcome(
                    Status.FAILED, witness=f"mod {f}: not a rational constant: {serialize_frac(diff)}",
                    strategy=[f"mod {f} -> not a constant"]))
                continue
            value = Fraction(diff.num.constant_value())
            outcomes.append(check_integer_mod(value, 0, f.p, f.k))
    return combine(outcomes)


def divisibility_witness(lhs: Frac, rhs: Frac, f: ParamFactor) -> MPoly | None:
    """Cleared numerator of ``lhs - rhs`` divided exactly by ``f``'s binomial.

    Independent of root substitution: returns None when the binomial does
    not divide.
    """
    from .exact import exact_divide
    n1, n2, _ = lhs._over_common(rhs)
    return exact_divide(n1 - n2, f.polynomial())


__all__ = ["Status", "ParamFactor", "CyclotomicFactor", "PrimePowerFactor", "Factor",
           "Modulus", "VerifyOutcome", "combine", "check_param_factor",
           "check_cyclotomic", "check_integer_mod", "verify", "phi_valuation",
           "divisibility_witness", "serialize"]
