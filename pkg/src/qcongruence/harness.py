"""Case registry, sweeps and the report model.

Each :class:`CongruenceCase` binds a statement to its two sides, its modulus
and a default parameter grid.  Sides are built with every parameter
symbolic; the engine substitutes roots itself.  Parameter tuples that break
a statement's hypotheses are reported as skipped, never dropped.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from . import sums
from .congruence import (CyclotomicFactor, Modulus, ParamFactor, PrimePowerFactor,
                         Status, VerifyOutcome, verify)
from .exact import Q, Frac
from .qkit import ConstraintError, NotCoprime, is_prime, residue_identity_check

PARAM_NAMES = ("n", "d", "r", "s", "p", "k")

Params = dict
Overrides = Mapping[str, Sequence[int]]
DomainFn = Callable[[Params], Iterable[int]]


class UnknownCase(KeyError):
    """No registered case has the requested id."""


@dataclass(frozen=True)
class CongruenceCase:
    id: str
    provenance: str
    order: tuple[str, ...]
    domain: Mapping[str, DomainFn]
    constraints: Callable[[Params], None]
    lhs: Callable[[Params], Frac]
    rhs: Callable[[Params], Frac]
    modulus: Callable[[Params], Modulus]
    label: str = "theorem"

    def params(self, overrides: Overrides | None = None) -> Iterator[Params]:
        """Parameter tuples: overridden names take the given values verbatim,
        the rest follow the default grid given the earlier choices."""
        overrides = overrides or {}

        def rec(i: int, chosen: Params):
            if i == len(self.order):
                yield dict(chosen)
                return
            name = self.order[i]
            if name in overrides:
                values = list(overrides[name])
            else:
                try:
                    values = list(self.domain[name](chosen))
                except (ConstraintError, NotCoprime):
                    values = []
            if not values:
                # incomplete tuple; the constraint check reports why
                yield dict(chosen)
                return
            for v in values:
                chosen[name] = v
                yield from rec(i + 1, chosen)
                del chosen[name]

        yield from rec(0, {})

    def check(self, params: Params) -> None:
        missing = [name for name in self.order if name not in params]
        if missing:
            raise ConstraintError(f"no admissible value for {', '.join(missing)}")
        self.constraints(params)


@dataclass
class Report:
    case: str
    params: dict
    modulus: str
    outcome: VerifyOutcome
    ms: float = 0.0

    @property
    def status(self) -> Status:
        return self.outcome.status

    @property
    def strategy(self) -> list[str]:
        return self.outcome.strategy

    def sort_key(self):
        return (self.case, tuple(self.params.get(k, -1) for k in PARAM_NAMES))

    def to_json(self) -> dict:
        out = {"case": self.case,
               "params": {k: self.params[k] for k in PARAM_NAMES if k in self.params},
               "modulus": self.modulus,
               "status": self.outcome.status.value}
        if self.outcome.reason is not None:
            out["reason"] = self.outcome.reason
        if self.outcome.witness is not None:
            out["witness"] = self.outcome.witness
        out["strategy"] = list(self.outcome.strategy)
        out["ms"] = round(self.ms, 3)
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> "Report":
        outcome = VerifyOutcome(Status(obj["status"]), witness=obj.get("witness"),
                                reason=obj.get("reason"), strategy=list(obj["strategy"]))
        return cls(obj["case"], dict(obj["params"]), obj["modulus"], outcome, obj["ms"])

    def equivalent(self, other: "Report") -> bool:
        """Equal up to wall time."""
        a, b = self.to_json(), other.to_json()
        a.pop("ms")
        b.pop("ms")
        return a == b


CSV_COLUMNS = ("case", "params", "modulus", "status", "reason", "witness", "strategy", "ms")


def _param_text(params: Mapping[str, int]) -> str:
    return " ".join(f"{k}={params[k]}" for k in PARAM_NAMES if k in params)


def reports_to_json(reports: Sequence[Report]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2) + "\n"


def reports_to_csv(reports: Sequence[Report]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        j = r.to_json()
        w.writerow([j["case"], _param_text(j["params"]), j["modulus"], j["status"],
                    j.get("reason", ""), j.get("witness", ""), " | ".join(j["strategy"]),
                    j["ms"]])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# domain helpers
# ---------------------------------------------------------------------------

def odd_upto(hi: int, lo: int = 1) -> DomainFn:
    return lambda _: range(lo + (lo + 1) % 2, hi + 1, 2)


def span(lo: int, hi: int) -> DomainFn:
    return lambda _: range(lo, hi + 1)


def coprime_d(hi: int, lo: int = 1) -> DomainFn:
    return lambda p: [d for d in range(lo, hi + 1) if gcd(d, p["n"]) == 1]


def primes(lo: int, hi: int) -> DomainFn:
    return lambda _: [p for p in range(lo, hi + 1) if is_prime(p)]


def _zero(_: Params) -> Frac:
    return Frac(0)


def _param_mod(*specs) -> Callable[[Params], Modulus]:
    """Modulus from (constructor, param, exponent-fn) triples."""
    def build(p: Params) -> Modulus:
        return Modulus(tuple(ctor(var, e(p)) for ctor, var, e in specs))
    return build


def _cyclo_mod(k: int) -> Callable[[Params], Modulus]:
    return lambda p: Modulus((CyclotomicFactor(p["n"], k),))


_EXACT = lambda p: Modulus(())  # noqa: E731
_N = lambda p: p["n"]  # noqa: E731
_ONE_MINUS, _MINUS, _PLUS = ParamFactor.one_minus, ParamFactor.minus, ParamFactor.plus
_RV_MOD = _param_mod((_ONE_MINUS, "a", _N), (_MINUS, "a", _N))


def _require_gcd6(n: int) -> None:
    if n < 1 or gcd(n, 6) != 1:
        raise ConstraintError(f"n = {n} must be coprime to 6")


def _require_prime(p: int, lo: int = 3) -> None:
    if p < lo or not is_prime(p):
        raise ConstraintError(f"p = {p} must be a prime >= {lo}")


def _thm11_roots_mod(p: Params) -> Modulus:
    ea, eb = sums.thm11_roots(p["n"], p["d"], p["r"])
    return Modulus((_ONE_MINUS("a", ea), _ONE_MINUS("b", eb)))


def _cor14_mod(p: Params) -> Modulus:
    ea, eb = sums.thm11_roots(p["n"], p["d"], p["r"])
    return Modulus((_ONE_MINUS("a", ea), _MINUS("a", eb)))


def _cor15_mod(p: Params) -> Modulus:
    ea, eb = sums.cor15_roots(p["n"], p["d"], p["r"])
    return Modulus((_ONE_MINUS("a", ea), _ONE_MINUS("b", eb)))


def _cor15_check(p: Params) -> None:
    sums.thm13_check(p["n"], p["d"], p["r"])
    if not p["r"] < p["d"]:
        raise ConstraintError("need r < d")


def _prop32_check(p: Params) -> None:
    if p["n"] < 1 or not 0 < p["r"] < p["d"] or gcd(p["d"], p["n"]) != 1:
        raise ConstraintError("need n >= 1, 0 < r < d and gcd(d, n) = 1")


def _prop32_sides(p: Params) -> tuple[Frac, Frac]:
    n, d, r = p["n"], p["d"], p["r"]
    lhs = r + d * sums.residue_r1(n, d, r)
    rhs = n * sums.least_nonneg_residue(Fraction(r, n), d)
    assert residue_identity_check(d, n, r) == (lhs == rhs)
    return Frac(lhs), Frac(rhs)


def _id51_check(p: Params) -> None:
    if p["n"] < 0 or not 0 <= p["s"] <= p["n"]:
        raise ConstraintError("need N >= 0 and 0 <= s <= N (M = N + s)")


def _thm44_check(p: Params) -> None:
    m = sums._require_odd(p["n"])
    if not 0 <= p["s"] <= m:
        raise ConstraintError(f"s = {p['s']} outside [0, (n-1)/2]")


def _lem31_check(p: Params) -> None:
    if p["n"] < 0:
        raise ConstraintError("n must be non-negative")


def _odd(p: Params) -> None:
    sums._require_odd(p["n"])


def _rv_int_check(p: Params) -> None:
    _require_prime(p["p"])


def _ram1a_check(p: Params) -> None:
    _require_prime(p["p"], 5)


def _st_check(p: Params) -> None:
    _require_prime(p["p"])
    if p["r"] < 1:
        raise ConstraintError("r must be >= 1")


def _int_side(name: str, extra: str | None = None):
    def lhs(p):
        return Frac(sums.integer_sum(name, p["p"], p[extra] if extra else 1))

    def rhs(p):
        return Frac(sums.integer_expected(name, p["p"], p[extra] if extra else 1))
    return lhs, rhs


_RV_L, _RV_R = _int_side("rv")
_RAM_L, _RAM_R = _int_side("ram1a")
_ST_L, _ST_R = _int_side("sun-tauraso", "r")

_BIPARAM = {"n": odd_upto(9), "d": coprime_d(4), "r": lambda p: range(1, p["d"] + 1),
            "s": lambda p: sums.thm11_admissible_s(p["n"], p["d"], p["r"])}
_THM13 = {"n": odd_upto(7), "d": coprime_d(3), "r": lambda p: range(1, p["d"] + 1)}
_ODD15 = {"n": odd_upto(15)}

CONJECTURE = "conjecture-in-paper, proved elsewhere"


def _build_registry() -> list[CongruenceCase]:
    C = CongruenceCase
    thm11_check = lambda p: sums.thm11_check(p["n"], p["d"], p["r"], p["s"])  # noqa: E731
    thm11_lhs = lambda p: sums.thm11_lhs(p["n"], p["d"], p["r"], p["s"])  # noqa: E731
    thm13_check = lambda p: sums.thm13_check(p["n"], p["d"], p["r"])  # noqa: E731
    thm13_lhs = lambda p: sums.thm13_side(p["n"], p["d"], p["r"], 1)  # noqa: E731
    thm13_rhs = lambda p: sums.thm13_rhs(p["n"], p["d"], p["r"])  # noqa: E731
    cor16_lhs = lambda p: sums.thm13_side(p["n"], 2, 1, 1)  # noqa: E731
    cor16_rhs = lambda p: sums.thm13_rhs(p["n"], 2, 1)  # noqa: E731
    cases = [
        C("thm1.1", 'Theorem 1.1: "\\equiv 0 \\pmod{(1-aq^{r+d\\langle -r/d\\rangle_n})'
                    '(1-bq^{d-r+d\\langle (r-d)/d\\rangle_n})}"',
          ("n", "d", "r", "s"), _BIPARAM, thm11_check, thm11_lhs, _zero, _thm11_roots_mod),
        C("cor1.2", 'Corollary 1.2: "\\equiv 0 \\pmod{\\Phi_n(q)^2}"',
          ("n", "d", "r", "s"), _BIPARAM, thm11_check, thm11_lhs, _zero, _cyclo_mod(2)),
        C("thm1.3", 'Theorem 1.3: "\\equiv (-1)^{\\langle -r/d\\rangle_n}\\sum_{k=0}^{n-1}'
                    '\\frac{(aq^r;q^d)_k (bq^{d-r};q^d)_k"',
          ("n", "d", "r"), _THM13, thm13_check, thm13_lhs, thm13_rhs, _thm11_roots_mod),
        C("cor1.4", 'Corollary 1.4: "q^{dk}}{(q^d;q^d)_{k}(q^d;q^d)_{k} (1+q^{dk})} '
                    '\\equiv (-1)^{\\langle-r/d\\rangle_n}."',
          ("n", "d", "r"), _THM13, thm13_check,
          lambda p: sums.cor14_lhs(p["n"], p["d"], p["r"]),
          lambda p: sums.cor14_rhs(p["n"], p["d"], p["r"]), _cor14_mod),
        C("cor1.4-a1", 'Corollary 1.4, a -> 1: "\\frac{2(q^r;q^d)_k (q^{d-r};q^d)_k '
                       'q^{dk}}{(q^d;q^d)_{k}(q^d;q^d)_{k} (1+q^{dk})}"',
          ("n", "d", "r"), _THM13, thm13_check,
          lambda p: sums.cor14_lhs(p["n"], p["d"], p["r"], {"a": 1}),
          lambda p: sums.cor14_rhs(p["n"], p["d"], p["r"]), _cyclo_mod(2)),
        C("cor1.5", 'Corollary 1.5: "Then, modulo $(1-aq^{n\\langle r/n\\rangle_d})'
                    '(1-bq^{n\\langle(d-r)/n\\rangle_d})$,"',
          ("n", "d", "r"),
          {"n": odd_upto(7), "d": coprime_d(3, 2), "r": lambda p: range(1, p["d"])},
          _cor15_check, thm13_lhs, thm13_rhs, _cor15_mod),
        C("cor1.6", 'Corollary 1.6: "\\equiv (-1)^{(n-1)/2}\\sum_{k=0}^{n-1}'
                    '\\frac{(aq;q^2)_k (bq;q^2)_k (-x;q^2)_k q^{2k}}"',
          ("n",), {"n": odd_upto(9)}, _odd, cor16_lhs, cor16_rhs,
          _param_mod((_ONE_MINUS, "a", _N), (_ONE_MINUS, "b", _N))),
        C("prop3.2", 'Proposition 3.2: "Then $r+d\\langle -r/d\\rangle_n=n\\langle r/n\\rangle_d$."',
          ("n", "d", "r"),
          {"n": span(1, 15), "d": coprime_d(6, 2), "r": lambda p: range(1, p["d"])},
          _prop32_check, lambda p: _prop32_sides(p)[0], lambda p: _prop32_sides(p)[1],
          _EXACT),
        C("thm1.5", 'Theorem 1.5: "\\frac{(aq;q^2)_k (q/a;q^2)_k}{(q^2;q^2)_k^2} '
                    '&\\equiv (-1)^{(n-1)/2}q^{(1-n^2)/4}\\pmod{(1-aq^n)(a-q^n)}."',
          ("n",), _ODD15, _odd, lambda p: sums.thm15_lhs(p["n"]),
          lambda p: sums.thm15_rhs(p["n"]), _RV_MOD),
        C("gz-rv", 'q-analogue of the RV congruence: "\\equiv (-1)^{(p-1)/2}q^{(1-p^2)/4}'
                   '\\pmod{[p]^2}\\quad\\text{for odd prime $p$},"',
          ("n",), _ODD15, _odd, lambda p: sums.thm15_lhs(p["n"], {"a": 1}),
          lambda p: sums.thm15_rhs(p["n"]), _cyclo_mod(2)),
        C("lem3.1", 'Lemma 3.1: "F_n(x,b,q)=\\sum_{k=0}^n \\frac{(q^{-n};q)_k (b;q)_k (x;q)_k}'
                    '{(q;q)_k (bq^{1-n};q^2)_k} q^k"',
          ("n",), {"n": span(0, 8)}, _lem31_check,
          lambda p: sums.fn_lemma31(p["n"], 1),
          lambda p: sums.fn_lemma31(p["n"], -1) * (-1) ** p["n"], _EXACT),
        C("thm4.1", 'Theorem 4.1: "\\sum_{k=0}^{(n-1)/2}{(n-1)/2\\brack k}_{q^2}^2 '
                    'q^{k^2-nk} (-x)^k (x;q^2)_{(n-1)/2-k}."',
          ("n",), {"n": odd_upto(9)}, _odd, lambda p: sums.thm41_lhs(p["n"]),
          lambda p: sums.thm41_rhs(p["n"]), _RV_MOD),
        C("thm4.2", 'Theorem 4.2: "\\sum_{k=0}^{n-1}\\frac{(aq;q^2)_k (q/a;q^2)_k}'
                    '{(q^2;q^2)_k^2} q^{2k}(x;q^2)_k."',
          ("n",), {"n": odd_upto(9)}, _odd, lambda p: sums.thm41_lhs(p["n"]),
          lambda p: sums.thm42_rhs(p["n"]), _RV_MOD),
        C("cor4.3", 'Corollary 4.3: "\\frac{(aq;q^2)_k (q/a;q^2)_k}{(q^2;q^2)_k^2}q^{2k} '
                    '&\\equiv (-1)^{(n-1)/2}q^{(n^2-1)/4}\\pmod{(1-aq^n)(a-q^n)}."',
          ("n",), _ODD15, _odd, lambda p: sums.cor43_lhs(p["n"]),
          lambda p: sums.cor43_rhs(p["n"]), _RV_MOD),
        C("thm4.4", 'Theorem 4.4: "Let $n$ be a positive odd integer and let '
                    '$0\\leqslant s\\leqslant (n-1)/2$."',
          ("n", "s"), {"n": odd_upto(15), "s": lambda p: range((p["n"] - 1) // 2 + 1)},
          _thm44_check, lambda p: sums.thm44_lhs(p["n"], p["s"]),
          lambda p: sums.thm44_rhs(p["n"]), _RV_MOD),
        C("thm4.4-a1", 'Theorem 4.4, a -> 1: "\\sum_{k=0}^{(n-1)/2}\\frac{(aq;q^2)_k '
                       '(q/a;q^2)_{k+s}}{(q^2;q^2)_k (q^2;q^2)_{k+s} }"',
          ("n", "s"), {"n": odd_upto(15), "s": lambda p: range((p["n"] - 1) // 2 + 1)},
          _thm44_check, lambda p: sums.thm44_lhs(p["n"], p["s"], {"a": 1}),
          lambda p: sums.thm44_rhs(p["n"]), _cyclo_mod(2)),
        C("id5.1", 'Identity used for Theorem 4.4 (M = N + s): "=(-1)^N q^{-{N+1\\choose 2}}'
                   '\\quad\\text{for $0\\leqslant s\\leqslant N$},"',
          ("n", "s"), {"n": span(0, 6), "s": lambda p: range(p["n"] + 1)}, _id51_check,
          lambda p: sums.identity51_sides(p["n"], p["n"] + p["s"])[0],
          lambda p: sums.identity51_sides(p["n"], p["n"] + p["s"])[1], _EXACT),
        C("thm4.6-plus", 'Theorem 4.6: "&\\equiv (-1)^{(n-1)/2} q^{(n^2-1)/2} '
                         '\\pmod{(1-aq^n)(a+q^n)},"',
          ("n",), _ODD15, _odd, lambda p: sums.thm46_lhs(p["n"], "plus"),
          lambda p: sums.thm46_rhs(p["n"], "plus"),
          _param_mod((_ONE_MINUS, "a", _N), (_PLUS, "a", _N))),
        C("thm4.6-minus", 'Theorem 4.6: "&\\equiv q^{(n^2-1)/2} \\pmod{(1-aq^n)(a-q^n)}."',
          ("n",), _ODD15, _odd, lambda p: sums.thm46_lhs(p["n"], "minus"),
          lambda p: sums.thm46_rhs(p["n"], "minus"), _RV_MOD),
        C("thm4.6-minus-a1", 'Theorem 4.6, a -> 1: "\\frac{(q;q^2)_k ^2 q^{2k}}{(q^2;q^2)_k} '
                            '\\equiv q^{(n^2-1)/2}\\pmod{\\Phi_n(q)^2}."',
          ("n",), _ODD15, _odd, lambda p: sums.thm46_lhs(p["n"], "minus", {"a": 1}),
          lambda p: sums.thm46_rhs(p["n"], "minus"), _cyclo_mod(2)),
        C("eq-q4a-new", 'Parametric Ramanujan-type congruence: "&\\quad\\equiv q^{-(n-1)/2}[n]'
                        '\\left(\\frac{-3}{n}\\right) \\pmod{\\Phi_n(q)(1-aq^n)(a-q^n)}."',
          ("n",), {"n": lambda _: [n for n in range(1, 14) if gcd(n, 6) == 1]},
          lambda p: _require_gcd6(p["n"]), lambda p: sums.ramanujan_q_lhs(p["n"]),
          lambda p: sums.ramanujan_q_rhs(p["n"]),
          lambda p: Modulus((CyclotomicFactor(p["n"], 1), _ONE_MINUS("a", p["n"]),
                             _MINUS("a", p["n"])))),
        C("eq-q4a", 'Ramanujan-type q-supercongruence: "&\\equiv q^{-(n-1)/2}[n]'
                    '\\left(\\frac{-3}{n}\\right) \\pmod{\\Phi_n(q)^3},"',
          ("n",), {"n": lambda _: [n for n in range(1, 14) if gcd(n, 6) == 1]},
          lambda p: _require_gcd6(p["n"]), lambda p: sums.ramanujan_q_lhs(p["n"], {"a": 1}),
          lambda p: sums.ramanujan_q_rhs(p["n"]), _cyclo_mod(3)),
        C("conj4.5", 'Conjecture 4.5: "{2k\\brack k}\\equiv (-1)^{(n-1)/2}q^{(n^2-1)/4} '
                     '\\pmod{\\Phi_n(q)^2}."',
          ("n",), _ODD15, _odd, lambda p: sums.conj45_lhs(p["n"], "binomial"),
          lambda p: sums.conj45_rhs(p["n"], "binomial"), _cyclo_mod(2), label=CONJECTURE),
        C("conj4.5-q2", 'Conjecture 4.5, equivalent form in q^2: "{2k\\brack k}_{q^2}'
                        '\\equiv (-1)^{(n-1)/2}q^{(n^2-1)/2} \\pmod{\\Phi_n(q)^2},"',
          ("n",), _ODD15, _odd, lambda p: sums.conj45_lhs(p["n"], "pochhammer"),
          lambda p: sums.conj45_rhs(p["n"], "pochhammer"), _cyclo_mod(2), label=CONJECTURE),
        C("conj4.5-weak", 'Weaker form of Conjecture 4.5: "{2k\\brack k}\\equiv '
                        '(-1)^{(n-1)/2}q^{(n^2-1)/4} \\pmod{\\Phi_n(q)},"',
          ("n",), _ODD15, _odd, lambda p: sums.conj45_lhs(p["n"], "binomial"),
          lambda p: sums.conj45_rhs(p["n"], "binomial"), _cyclo_mod(1)),
        C("rv-int", 'Integer RV supercongruence: "\\equiv (-1)^{(p-1)/2}\\pmod{p^2}'
                    '\\quad\\text{for any odd prime $p$.}"',
          ("p",), {"p": primes(3, 37)}, _rv_int_check, _RV_L, _RV_R,
          lambda p: Modulus((PrimePowerFactor(p["p"], 2),))),
        C("ram1a", 'Ramanujan-type supercongruence: "\\equiv p\\left(\\frac{-3}p\\right)'
                   '\\pmod{p^3} \\quad\\text{for $p>3$ prime},"',
          ("p",), {"p": primes(5, 13)}, _ram1a_check, _RAM_L, _RAM_R,
          lambda p: Modulus((PrimePowerFactor(p["p"], 3),))),
        C("sun-tauraso", 'Central binomial sum: "\\sum_{k=0}^{p^{r}-1}\\frac{1}{2^k}'
                         '{2k\\choose k}\\equiv (-1)^{(p^r-1)/2}\\pmod{p},"',
          ("p", "r"), {"p": primes(3, 13), "r": span(1, 2)}, _st_check, _ST_L, _ST_R,
          lambda p: Modulus((PrimePowerFactor(p["p"], 1),))),
    ]
    ids = [c.id for c in cases]
    assert len(ids) == len(set(ids)), "duplicate case ids"
    return cases


_REGISTRY: list[CongruenceCase] | None = None


def registry() -> list[CongruenceCase]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return list(_REGISTRY)


def lookup(case_id: str) -> CongruenceCase:
    for case in registry():
        if case.id == case_id:
            return case
    raise UnknownCase(case_id)


# ---------------------------------------------------------------------------
# running
# ---------------------------------------------------------------------------

def run_case(case: CongruenceCase | str, params: Params, perturb: bool = False) -> Report:
    """Verify one parameter tuple.  ``perturb`` adds q to the right-hand side."""
    if isinstance(case, str):
        case = lookup(case)
    t0 = time.perf_counter()
    modulus = "n/a"
    try:
        case.check(params)
        modulus = str(case.modulus(params))
        lhs, rhs = case.lhs(params), case.rhs(params)
        if perturb:
            rhs = rhs + Frac(Q)
        outcome = verify(lhs, rhs, case.modulus(params))
    except (ConstraintError, NotCoprime) as exc:
        outcome = VerifyOutcome(Status.SKIPPED, reason=f"constraint: {exc}",
                                strategy=["hypotheses not met"])
    ms = (time.perf_counter() - t0) * 1000
    return Report(case.id, dict(params), modulus, outcome, ms)


def expected_skip(report: Report) -> bool:
    """Skips caused by parameter hypotheses, as opposed to guard failures."""
    return report.status is Status.SKIPPED and (report.outcome.reason or "").startswith("constraint:")


def _task(args) -> Report:
    case_id, params, perturb = args
    return run_case(case_id, params, perturb)


@dataclass
class SweepResult:
    reports: list[Report] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {s.value: 0 for s in Status}
        for r in self.reports:
            counts[r.status.value] += 1
        return counts

    def by_case(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self.reports:
            counts = out.setdefault(r.case, {s.value: 0 for s in Status})
            counts[r.status.value] += 1
        return out


def plan(case_ids: Sequence[str], overrides: Overrides | None = None) -> list[tuple[str, Params]]:
    tasks = []
    for cid in case_ids:
        case = lookup(cid)
        tasks.extend((cid, p) for p in case.params(overrides))
    return tasks


def run_sweep(case_ids: Sequence[str], overrides: Overrides | None = None,
              workers: int = 1, perturb: bool = False) -> SweepResult:
    """Run every parameter tuple of the given cases; reports come back sorted
    by case id and parameters whatever the completion order."""
    tasks = [(cid, p, perturb) for cid, p in plan(case_ids, overrides)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_task, tasks, chunksize=1))
    else:
        reports = [_task(t) for t in tasks]
    reports.sort(key=Report.sort_key)
    return SweepResult(reports)
