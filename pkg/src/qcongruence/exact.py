"""Exact arithmetic core.

Sparse Laurent polynomials in the fixed variables ``(q, a, b, x)`` with
rational coefficients, rational functions whose denominators are kept as
multisets of binomials, and dense univariate Laurent polynomials in ``q``.

Monomials are packed into a single Python int (one biased bit field per
variable, ``q`` most significant) so that multiplying monomials is integer
addition and comparing packed keys is lexicographic order on
``(e_q, e_a, e_b, e_x)``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

Rat = Fraction
Coeff = Union[int, Fraction]

VARS = ("q", "a", "b", "x")
_FIELD = 21
_BIAS = 1 << (_FIELD - 1)
_MASK = (1 << _FIELD) - 1
_SHIFT = {"q": 3 * _FIELD, "a": 2 * _FIELD, "b": _FIELD, "x": 0}
# exponents must stay strictly inside (-_BIAS, _BIAS)
EXP_LIMIT = _BIAS - 1


class DenominatorVanishes(ZeroDivisionError):
    """A denominator factor became identically zero under a specialization."""


class NonUnivariate(ValueError):
    """An operation that needs a polynomial in q alone met a, b or x."""


def pack(eq: int = 0, ea: int = 0, eb: int = 0, ex: int = 0) -> int:
    for e in (eq, ea, eb, ex):
        if not -EXP_LIMIT <= e <= EXP_LIMIT:
            raise OverflowError(f"exponent {e} out of packed range")
    return (((eq + _BIAS) << _SHIFT["q"]) | ((ea + _BIAS) << _SHIFT["a"])
            | ((eb + _BIAS) << _SHIFT["b"]) | (ex + _BIAS))


def unpack(key: int) -> tuple[int, int, int, int]:
    return ((key >> _SHIFT["q"]) - _BIAS,
            ((key >> _SHIFT["a"]) & _MASK) - _BIAS,
            ((key >> _SHIFT["b"]) & _MASK) - _BIAS,
            (key & _MASK) - _BIAS)


def _field(key: int, var: str) -> int:
    if var == "q":
        return (key >> _SHIFT["q"]) - _BIAS
    return ((key >> _SHIFT[var]) & _MASK) - _BIAS


ONE_KEY = pack()


def _offset(eq: int = 0, ea: int = 0, eb: int = 0, ex: int = 0) -> int:
    """Additive key offset for multiplication by a monomial."""
    return (eq << _SHIFT["q"]) + (ea << _SHIFT["a"]) + (eb << _SHIFT["b"]) + ex


def cdiv(u: Coeff, v: Coeff) -> Coeff:
    if isinstance(u, int) and isinstance(v, int):
        if v == 1:
            return u
        if v == -1:
            return -u
        qt, rm = divmod(u, v)
        if rm == 0:
            return qt
        return Fraction(u, v)
    return Fraction(u) / v


def _coeff(c) -> Coeff:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"unsupported coefficient {c!r}; use int or Fraction")


@dataclass(frozen=True)
class SignedPower:
    """The value ``sign * q**exponent`` used to specialize a parameter."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def __str__(self) -> str:
        body = "q" if self.exponent == 1 else f"q^{self.exponent}"
        if self.exponent == 0:
            body = "1"
        return body if self.sign == 1 else "-" + body


ParamValue = Union[None, SignedPower, int, Fraction]


# --------------------------------------------------------------------------
# Sparse Laurent polynomials
# --------------------------------------------------------------------------

class MPoly:
    """Immutable sparse Laurent polynomial over the rationals in (q, a, b, x)."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        # internal constructor: keys are packed monomials, no zero coefficients
        self._t = dict(terms) if terms else {}
        self._hash = None

    @classmethod
    def _raw(cls, d: dict) -> "MPoly":
        p = cls.__new__(cls)
        p._t = d
        p._hash = None
        return p

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[tuple[int, ...], Coeff]]) -> "MPoly":
        d: dict[int, Coeff] = {}
        for exps, c in terms:
            k = pack(*exps)
            d[k] = d.get(k, 0) + _coeff(c)
        return cls._raw({k: c for k, c in d.items() if c != 0})

    @classmethod
    def const(cls, c) -> "MPoly":
        c = _coeff(c)
        return cls._raw({ONE_KEY: c} if c else {})

    @classmethod
    def mono(cls, c=1, q: int = 0, a: int = 0, b: int = 0, x: int = 0) -> "MPoly":
        c = _coeff(c)
        return cls._raw({pack(q, a, b, x): c} if c else {})

    @classmethod
    def coerce(cls, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        return cls.const(other)

    # -- inspection -------------------------------------------------------
    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and ONE_KEY in self._t)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._t.get(ONE_KEY, 0)

    def coefficient(self, q: int = 0, a: int = 0, b: int = 0, x: int = 0) -> Coeff:
        return self._t.get(pack(q, a, b, x), 0)

    def items(self) -> list[tuple[tuple[int, int, int, int], Coeff]]:
        """Terms as ``(exponents, coefficient)`` in ascending lex order."""
        return [(unpack(k), self._t[k]) for k in sorted(self._t)]

    def variables(self) -> set[str]:
        used = set()
        for k in self._t:
            for v, e in zip(VARS, unpack(k)):
                if e:
                    used.add(v)
        return used

    def degree(self, var: str = "q") -> int:
        return max(_field(k, var) for k in self._t)

    def min_degree(self, var: str = "q") -> int:
        return min(_field(k, var) for k in self._t)

    def _min_key_offset(self) -> int:
        mins = [min(_field(k, v) for k in self._t) for v in VARS]
        return _offset(*mins)

    # -- arithmetic -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == MPoly.const(other)._t
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __neg__(self) -> "MPoly":
        return MPoly._raw({k: -c for k, c in self._t.items()})

    def __add__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = MPoly.const(other)
        if len(self._t) < len(other._t):
            small, big = self._t, other._t
        else:
            small, big = other._t, self._t
        d = dict(big)
        for k, c in small.items():
            s = d.get(k, 0) + c
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        return MPoly._raw(d)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = MPoly.const(other)
        d = dict(self._t)
        for k, c in other._t.items():
            s = d.get(k, 0) - c
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        return MPoly._raw(d)

    def __rsub__(self, other) -> "MPoly":
        return MPoly.coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            c = _coeff(other)
            if c == 0:
                return MPoly()
            if c == 1:
                return self
            return MPoly._raw({k: v * c for k, v in self._t.items()})
        st, ot = self._t, other._t
        if len(st) < len(ot):
            st, ot = ot, st
        if not ot:
            return MPoly()
        if len(ot) == 1:
            ((k2, c2),) = ot.items()
            off = k2 - ONE_KEY
            if c2 == 1:
                return MPoly._raw({k + off: c for k, c in st.items()})
            return MPoly._raw({k + off: c * c2 for k, c in st.items()})
        d: dict[int, Coeff] = {}
        get = d.get
        for k2, c2 in ot.items():
            off = k2 - ONE_KEY
            for k1, c1 in st.items():
                kk = k1 + off
                d[kk] = get(kk, 0) + c1 * c2
        return MPoly._raw({k: c for k, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MPoly":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            ((k, c),) = self._t.items()
            exps = unpack(k)
            return MPoly.mono(cdiv(1, c) ** -e, *(e * v for v in exps))
        result = MPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c=1, q: int = 0, a: int = 0, b: int = 0, x: int = 0) -> "MPoly":
        """Multiply by the monomial ``c * q^q a^a b^b x^x``."""
        c = _coeff(c)
        if c == 0:
            return MPoly()
        off = _offset(q, a, b, x)
        if c == 1:
            return MPoly._raw({k + off: v for k, v in self._t.items()})
        return MPoly._raw({k + off: v * c for k, v in self._t.items()})

    def scale_key(self, c, key_offset: int) -> "MPoly":
        """Multiply by ``c`` times the monomial with packed offset ``key_offset``."""
        if c == 1:
            return MPoly._raw({k + key_offset: v for k, v in self._t.items()})
        return MPoly._raw({k + key_offset: v * c for k, v in self._t.items()})

    # -- substitution -----------------------------------------------------
    def substitute(self, var: str, value: ParamValue) -> "MPoly":
        """Replace ``var`` (one of a, b, x) by ``sign*q^e`` or a rational."""
        if var not in ("a", "b", "x"):
            raise ValueError(f"cannot substitute variable {var!r}")
        if value is None:
            return self
        sh = _SHIFT[var]
        qs = _SHIFT["q"]
        d: dict[int, Coeff] = {}
        if isinstance(value, SignedPower):
            for k, c in self._t.items():
                e = ((k >> sh) & _MASK) - _BIAS
                if e:
                    k = k - (e << sh) + ((e * value.exponent) << qs)
                    if value.sign == -1 and e & 1:
                        c = -c
                d[k] = d.get(k, 0) + c
        else:
            val = _coeff(value)
            for k, c in self._t.items():
                e = ((k >> sh) & _MASK) - _BIAS
                if e:
                    k = k - (e << sh)
                    if e > 0:
                        c = c * val ** e
                    else:
                        if val == 0:
                            raise ZeroDivisionError(f"{var}=0 in a negative power")
                        c = cdiv(c, val ** -e)
                d[k] = d.get(k, 0) + c
        return MPoly._raw({k: c for k, c in d.items() if c})

    def substitute_q(self, sign: int = 1, power: int = 1) -> "MPoly":
        """Replace q by ``sign * q**power``."""
        qs = _SHIFT["q"]
        d: dict[int, Coeff] = {}
        for k, c in self._t.items():
            e = (k >> qs) - _BIAS
            k = k + ((e * (power - 1)) << qs)
            if sign == -1 and e & 1:
                c = -c
            d[k] = d.get(k, 0) + c
        return MPoly._raw({k: c for k, c in d.items() if c})

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"MPoly({serialize(self)!r})"


Q = MPoly.mono(1, q=1)
A = MPoly.mono(1, a=1)
B = MPoly.mono(1, b=1)
X = MPoly.mono(1, x=1)
ONE = MPoly.const(1)
ZERO = MPoly()


def apply_modes(p: MPoly, modes: Mapping[str, ParamValue] | None) -> MPoly:
    if modes:
        for var in ("a", "b", "x"):
            v = modes.get(var)
            if v is not None:
                p = p.substitute(var, v)
    return p


def _mono_text(exps: tuple[int, ...]) -> str:
    parts = []
    for v, e in zip(VARS, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def serialize(p: MPoly) -> str:
    """Canonical text: ascending lex order, explicit signs, ``q^-2`` exponents."""
    if p.is_zero():
        return "0"
    out = []
    for i, (exps, c) in enumerate(p.items()):
        neg = c < 0
        mag = -c if neg else c
        mono = _mono_text(exps)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# --------------------------------------------------------------------------
# mpoly_arith / exact_divide
# --------------------------------------------------------------------------

def mpoly_arith(lhs: MPoly, rhs: MPoly, op: str) -> MPoly:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown op {op!r}")


def _divide_binomial(num: MPoly, div: MPoly) -> MPoly | None:
    # div = c1*M1*(1 - c*w) with w = M2/M1; divide chain by chain along w
    (k1, c1), (k2, c2) = sorted(div._t.items())
    c = cdiv(-c2, c1)
    w = k2 - k1
    wexp = [_field(k2, v) - _field(k1, v) for v in VARS]
    i = next(j for j, e in enumerate(wexp) if e)
    wi = wexp[i]
    var = VARS[i]
    chains: dict[int, dict[int, Coeff]] = {}
    for k, coef in num._t.items():
        t = _field(k, var) // wi
        chains.setdefault(k - t * w, {})[t] = coef
    out: dict[int, Coeff] = {}
    for rep, chain in chains.items():
        ts = sorted(chain)
        h: Coeff = 0
        for t in range(ts[0], ts[-1] + 1):
            h = chain.get(t, 0) + c * h
            if t == ts[-1]:
                if h != 0:
                    return None
            elif h:
                out[rep + t * w] = h
    inv = cdiv(1, c1)
    off = ONE_KEY - k1
    return MPoly._raw({k + off: v * inv if inv != 1 else v for k, v in out.items()})


def _divide_general(num: MPoly, div: MPoly) -> MPoly | None:
    # shift both to ordinary polynomials; div then has no monomial content
    noff = -num._min_key_offset()
    doff = -div._min_key_offset()
    rem = {k + noff: c for k, c in num._t.items()}
    dterms = [(k + doff, c) for k, c in div._t.items()]
    lead_k, lead_c = max(dterms)
    lead_e = unpack(lead_k)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict[int, Coeff] = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.get(k, 0)
        if c == 0:
            continue
        e = unpack(k)
        if any(x < y for x, y in zip(e, lead_e)):
            return None
        t = cdiv(c, lead_c)
        off = k - lead_k
        quot[off + ONE_KEY] = t
        for dk, dc in dterms:
            kk = dk + off
            old = rem.get(kk, 0)
            new = old - t * dc
            if new:
                if old == 0:
                    heapq.heappush(heap, -kk)
                rem[kk] = new
            else:
                rem.pop(kk, None)
    # shifted quotient is quot * M_n / M_d; multiply back by M_d / M_n
    back = doff - noff
    return MPoly._raw({k + back: c for k, c in quot.items()})


def exact_divide(num: MPoly, div: MPoly) -> MPoly | None:
    """Return ``num / div`` if it is a Laurent polynomial, else None."""
    if div.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return MPoly()
    if div.is_monomial():
        ((k, c),) = div._t.items()
        off = ONE_KEY - k
        return MPoly._raw({kk + off: cdiv(v, c) for kk, v in num._t.items()})
    if len(div) == 2:
        return _divide_binomial(num, div)
    return _divide_general(num, div)


# --------------------------------------------------------------------------
# Rational functions with factored binomial denominators
# --------------------------------------------------------------------------

def canon_binomial(f: MPoly) -> tuple[Coeff, int, MPoly | None]:
    """Split ``f`` as ``coef * monomial(offset) * canonical``.

    The canonical binomial has componentwise-minimal exponents zero and
    coefficient 1 on its lex-smallest term.  Monomials give ``canonical=None``.
    """
    if f.is_zero():
        raise DenominatorVanishes("denominator factor is zero")
    if len(f) > 2:
        raise ValueError(f"denominator factor {f} has more than two terms")
    if len(f) == 1:
        ((k, c),) = f._t.items()
        return c, k - ONE_KEY, None
    shift = f._min_key_offset()
    (k1, c1), (k2, c2) = sorted(f._t.items())
    canon = MPoly._raw({k1 - shift: 1, k2 - shift: cdiv(c2, c1)})
    return c1, shift, canon


def _factor_sort_key(f: MPoly):
    return tuple((k, Fraction(c)) for k, c in sorted(f._t.items()))


class Frac:
    """Rational function ``num / prod(factor**mult)``.

    The numerator is a Laurent polynomial, so any monomial unit of the
    denominator is folded into it.  Denominator factors are canonical
    binomials.  Construction does not cancel common factors; see
    :meth:`normalize`.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den: Iterable = ()):
        num = MPoly.coerce(num)
        counts: dict[MPoly, int] = {}
        for item in den:
            f, m = item if isinstance(item, tuple) else (item, 1)
            f = MPoly.coerce(f)
            c, off, canon = canon_binomial(f)
            inv = cdiv(1, c) ** m
            num = MPoly._raw({k - m * off: v * inv for k, v in num._t.items()}) \
                if inv != 1 else MPoly._raw({k - m * off: v for k, v in num._t.items()})
            if canon is not None:
                counts[canon] = counts.get(canon, 0) + m
        self.num = num
        self.den = tuple(sorted(((f, m) for f, m in counts.items() if m),
                                key=lambda fm: _factor_sort_key(fm[0])))

    @classmethod
    def _make(cls, num: MPoly, counts: Mapping[MPoly, int]) -> "Frac":
        fr = cls.__new__(cls)
        fr.num = num
        fr.den = tuple(sorted(((f, m) for f, m in counts.items() if m),
                              key=lambda fm: _factor_sort_key(fm[0])))
        return fr

    @classmethod
    def coerce(cls, other) -> "Frac":
        if isinstance(other, Frac):
            return other
        return cls(MPoly.coerce(other))

    # -- inspection -------------------------------------------------------
    def den_counts(self) -> dict[MPoly, int]:
        return dict(self.den)

    def den_factors(self) -> list[MPoly]:
        return [f for f, m in self.den for _ in range(m)]

    def expanded_den(self) -> MPoly:
        out = ONE
        for f in self.den_factors():
            out = out * f
        return out

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def variables(self) -> set[str]:
        vs = set(self.num.variables())
        for f, _ in self.den:
            vs |= f.variables()
        return vs

    # -- arithmetic -------------------------------------------------------
    def _over_common(self, other: "Frac") -> tuple[MPoly, MPoly, dict]:
        mine, theirs = self.den_counts(), other.den_counts()
        common = dict(mine)
        for f, m in theirs.items():
            common[f] = max(common.get(f, 0), m)
        n1, n2 = self.num, other.num
        for f, m in common.items():
            for _ in range(m - mine.get(f, 0)):
                n1 = n1 * f
            for _ in range(m - theirs.get(f, 0)):
                n2 = n2 * f
        return n1, n2, common

    def __add__(self, other) -> "Frac":
        other = Frac.coerce(other)
        n1, n2, common = self._over_common(other)
        return Frac._make(n1 + n2, common).normalize()

    __radd__ = __add__

    def __sub__(self, other) -> "Frac":
        other = Frac.coerce(other)
        n1, n2, common = self._over_common(other)
        return Frac._make(n1 - n2, common).normalize()

    def __rsub__(self, other) -> "Frac":
        return Frac.coerce(other) - self

    def __neg__(self) -> "Frac":
        return Frac._make(-self.num, self.den_counts())

    def __mul__(self, other) -> "Frac":
        other = Frac.coerce(other)
        counts = self.den_counts()
        for f, m in other.den:
            counts[f] = counts.get(f, 0) + m
        return Frac._make(self.num * other.num, counts).normalize()

    __rmul__ = __mul__

    def invert(self) -> "Frac":
        """Reciprocal; only numerators with at most two terms can move down."""
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if len(self.num) > 2:
            raise ValueError("numerator is not a monomial or binomial")
        return Frac(self.expanded_den(), [self.num])

    def __truediv__(self, other) -> "Frac":
        return self * Frac.coerce(other).invert()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, MPoly)):
            other = Frac.coerce(other)
        if not isinstance(other, Frac):
            return NotImplemented
        n1, n2, _ = self._over_common(other)
        return n1 == n2

    __hash__ = None  # equality is by cross-multiplication

    def normalize(self) -> "Frac":
        """Cancel denominator factors that divide the numerator.

        A binomial numerator may also divide a denominator factor, e.g.
        ``(1 - q)/(1 - q^2) -> 1/(1 + q)``; that is cancelled when the
        cofactor is again a binomial.
        """
        num = self.num
        if num.is_zero():
            return Frac._make(num, {})
        counts: dict[MPoly, int] = {}
        extra = []
        for f, m in self.den:
            while m:
                qt = exact_divide(num, f)
                if qt is None:
                    break
                num, m = qt, m - 1
            if m and len(num) == 2:
                qt = exact_divide(f, num)
                if qt is not None and 0 < len(qt) <= 2:
                    extra.append(qt)
                    num, m = ONE, m - 1
            if m:
                counts[f] = m
        if extra:
            return Frac(num, list(counts.items()) + extra).normalize()
        return Frac._make(num, counts)

    def substitute(self, var: str, value: ParamValue) -> "Frac":
        if value is None:
            return self
        num = self.num.substitute(var, value)
        den = []
        for f, m in self.den:
            g = f.substitute(var, value)
            if g.is_zero():
                raise DenominatorVanishes(f"factor ({f}) vanishes at {var} = {value}")
            den.append((g, m))
        return Frac(num, den).normalize()

    def substitute_q(self, sign: int = 1, power: int = 1) -> "Frac":
        return Frac(self.num.substitute_q(sign, power),
                    [(f.substitute_q(sign, power), m) for f, m in self.den])

    def __str__(self) -> str:
        return serialize_frac(self)

    def __repr__(self) -> str:
        return f"Frac({serialize_frac(self)!r})"


def serialize_frac(f: Frac) -> str:
    num = serialize(f.num)
    if not f.den:
        return num
    parts = [f"({serialize(g)})" + (f"^{m}" if m > 1 else "") for g, m in f.den]
    return f"({num}) / ({'*'.join(parts)})"


def frac_arith(lhs: Frac, rhs: Frac, op: str) -> Frac:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown op {op!r}")


def frac_normalize(f: Frac) -> Frac:
    return f.normalize()


def frac_substitute(f: Frac, var: str, value: ParamValue) -> Frac:
    return f.substitute(var, value)


# --------------------------------------------------------------------------
# Dense univariate Laurent polynomials in q
# --------------------------------------------------------------------------

class UPoly:
    """Dense Laurent polynomial ``q^val * sum(coeffs[i] q^i)``."""

    __slots__ = ("coeffs", "val")

    def __init__(self, coeffs: Iterable = (), val: int = 0):
        cs = [_coeff(c) for c in coeffs]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        self.coeffs = tuple(cs[lo:hi])
        self.val = val + lo if self.coeffs else 0

    @classmethod
    def monomial(cls, c=1, e: int = 0) -> "UPoly":
        return cls([c], e)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            return -1
        return self.val + len(self.coeffs) - 1

    def coeff(self, e: int) -> Coeff:
        i = e - self.val
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def lead(self) -> Coeff:
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UPoly([other])
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.val == other.val

    def __hash__(self) -> int:
        return hash((self.coeffs, self.val))

    def _aligned(self, other: "UPoly"):
        lo = min(self.val, other.val) if self.coeffs and other.coeffs else \
            (self.val if self.coeffs else other.val)
        hi = max(self.degree(), other.degree())
        size = max(hi - lo + 1, 0)
        u = [0] * size
        v = [0] * size
        for i, c in enumerate(self.coeffs):
            u[self.val - lo + i] = c
        for i, c in enumerate(other.coeffs):
            v[other.val - lo + i] = c
        return u, v, lo

    def __add__(self, other) -> "UPoly":
        other = other if isinstance(other, UPoly) else UPoly([other])
        u, v, lo = self._aligned(other)
        return UPoly([s + t for s, t in zip(u, v)], lo)

    __radd__ = __add__

    def __sub__(self, other) -> "UPoly":
        other = other if isinstance(other, UPoly) else UPoly([other])
        u, v, lo = self._aligned(other)
        return UPoly([s - t for s, t in zip(u, v)], lo)

    def __rsub__(self, other) -> "UPoly":
        return UPoly([other]) - self

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs], self.val)

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, (int, Fraction)):
            return UPoly([c * other for c in self.coeffs], self.val)
        if not isinstance(other, UPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return UPoly(out, self.val + other.val)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UPoly":
        out = UPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc * Fraction(value) ** self.val if self.val else acc

    def to_mpoly(self) -> MPoly:
        return MPoly.from_terms(((self.val + i, 0, 0, 0), c)
                                for i, c in enumerate(self.coeffs) if c)

    @classmethod
    def from_mpoly(cls, p: MPoly) -> "UPoly":
        if p.is_zero():
            return cls()
        if p.variables() - {"q"}:
            raise NonUnivariate(f"{p} involves parameters other than q")
        lo = p.min_degree("q")
        cs = [0] * (p.degree("q") - lo + 1)
        for (eq, _, _, _), c in p.items():
            cs[eq - lo] = c
        return cls(cs, lo)

    def __str__(self) -> str:
        return serialize(self.to_mpoly())

    def __repr__(self) -> str:
        return f"UPoly({str(self)!r})"


def upoly_divrem(n: UPoly, d: UPoly) -> tuple[UPoly, UPoly]:
    """Euclidean division of ordinary polynomials: ``n = quot*d + rem``."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if n.is_zero():
        return UPoly(), UPoly()
    if n.val < 0 or d.val < 0:
        raise ValueError("upoly_divrem needs ordinary (non-Laurent) polynomials")
    rem = [0] * n.val + list(n.coeffs)
    dc = [0] * d.val + list(d.coeffs)
    dd = len(dc) - 1
    lc = dc[-1]
    if len(rem) <= dd:
        return UPoly(), n
    quot = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        t = cdiv(c, lc)
        quot[i - dd] = t
        base = i - dd
        for j in range(dd + 1):
            if dc[j]:
                rem[base + j] -= t * dc[j]
    return UPoly(quot), UPoly(rem[:dd])


def upoly_gcd(u: UPoly, v: UPoly) -> UPoly:
    """Monic gcd over the rationals (gcd(0, 0) = 0)."""
    while not v.is_zero():
        u, v = v, upoly_divrem(u, v)[1]
    if u.is_zero():
        return u
    return u * cdiv(1, u.lead())


def upoly_exact_div(n: UPoly, d: UPoly) -> UPoly | None:
    """Quotient if ``d`` divides ``n`` exactly in the Laurent ring, else None."""
    if n.is_zero():
        return UPoly()
    nn = UPoly(n.coeffs)
    dd = UPoly(d.coeffs)
    quot, rem = upoly_divrem(nn, dd)
    if not rem.is_zero():
        return None
    return UPoly(quot.coeffs, quot.val + n.val - d.val)


class UnivariateForm(NamedTuple):
    """``num / den`` after multiplying both by ``q**shift`` to clear negative powers."""

    num: UPoly
    den: UPoly
    shift: int


def to_upoly(f: Frac) -> UnivariateForm:
    extra = f.variables() - {"q"}
    if extra:
        raise NonUnivariate(f"expression involves {sorted(extra)}")
    num = UPoly.from_mpoly(f.num)
    den = UPoly.from_mpoly(f.expanded_den())
    lo = min(num.val if not num.is_zero() else 0, den.val)
    shift = -lo if lo < 0 else 0
    num = UPoly(num.coeffs, num.val + shift) if not num.is_zero() else num
    den = UPoly(den.coeffs, den.val + shift)
    return UnivariateForm(num, den, shift)
