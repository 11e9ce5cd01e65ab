from fractions import Fraction
from math import comb

import pytest

from qcongruence.exact import ONE, Q, A, B, X, Frac, MPoly, SignedPower
from qcongruence.qkit import ConstraintError, little_q_legendre, poch_factor, poch_poly, qbinom
from qcongruence import sums
from qcongruence.sums import (CLASSICAL, PhiSeriesSpec, classical_identity_check,
                              classical_identity_sides, conj45_lhs, conj45_rhs, cor14_lhs,
                              cor14_rhs, fn_lemma31, identity51_check, integer_expected,
                              integer_sum, phi_truncated, ramanujan_q_lhs, ramanujan_q_rhs,
                              ratio_sum, thm11_admissible_s, thm11_lhs, thm13_rhs, thm13_side,
                              thm15_lhs, thm15_rhs, thm41_lhs, thm41_rhs, thm42_rhs, thm44_lhs,
                              thm46_lhs, thm46_rhs, cor43_lhs, cor43_rhs)


def qm(e, c=1):
    return MPoly.mono(c, q=e)


def poch(arg, base, k):
    """(arg; q^base)_k as a list of binomials (for denominators)."""
    return [poch_factor(arg, base, j) for j in range(k)]


def naive(terms):
    """Sum of (numerator, denominator factors) pairs by plain Frac addition."""
    total = Frac(0)
    for num, den in terms:
        total = total + Frac(num, den)
    return total


# --- ratio_sum ------------------------------------------------------------------------

def test_ratio_sum_geometric():
    got = ratio_sum(ONE, [], 4, lambda k: ([Q], []))
    assert got == Frac(ONE + Q + Q ** 2 + Q ** 3)


def test_ratio_sum_weight():
    got = ratio_sum(ONE, [], 3, lambda k: ([Q], []), weight=lambda k: MPoly.const(k + 1))
    assert got == Frac(ONE + 2 * Q + 3 * Q ** 2)


def test_ratio_sum_terms_vanish():
    # (q^-1; q)_k stops at k = 2
    got = ratio_sum(ONE, [], 5, lambda k: ([ONE - qm(k - 1)], [ONE - qm(k + 1)]))
    assert got == Frac(ONE, []) + Frac(ONE - qm(-1), [ONE - Q])


# --- phi_truncated ----------------------------------------------------------------------

def test_phi_truncated_examples():
    c = B
    assert phi_truncated(PhiSeriesSpec((A,), (c,), 1, Q, 0)) == Frac(1)
    got = phi_truncated(PhiSeriesSpec((A, qm(-1)), (c,), 1, Q, 1))
    assert got == Frac(A - c, [ONE - c])


def test_andrews_watson_n1_vanishes():
    lhs, rhs = classical_identity_sides("andrews-q-watson", 1)
    assert lhs.is_zero() and rhs.is_zero()


# --- two-parameter vanishing sums ----------------------------------------------------------------------------

def test_thm11_admissible():
    assert thm11_admissible_s(1, 2, 1) == []
    assert 0 in thm11_admissible_s(3, 2, 1) and 2 in thm11_admissible_s(3, 2, 1)
    with pytest.raises(ConstraintError):
        thm11_lhs(3, 2, 1, 1)
    with pytest.raises(ConstraintError):
        thm11_lhs(4, 1, 1, 0)


def _thm11_naive(n, d, r, s):
    aq, bq, abq = A * qm(r), B * qm(d - r), A * B * qm(2 * d)
    terms = []
    for k in range(s, n):
        num = (poch_poly(aq, d, k) * poch_poly(bq, d, k) * poch_poly(qm(d), 2 * d, k)
               * qm(d * k))
        den = poch(qm(d), d, k - s) + poch(qm(d), d, k + s) + poch(abq, 2 * d, k)
        terms.append((num, den))
    return naive(terms)


@pytest.mark.parametrize("n,d,r,s", [(3, 2, 1, 0), (3, 2, 1, 2), (5, 3, 2, 2), (5, 1, 1, 1),
                                     (3, 4, 3, 1)])
def test_thm11_matches_naive(n, d, r, s):
    assert thm11_lhs(n, d, r, s) == _thm11_naive(n, d, r, s)


def test_thm11_single_term():
    # s = 2 leaves only k = 2
    n, d, r, s_ = 3, 2, 1, 2
    k = 2
    num = (poch_poly(A * qm(r), d, k) * poch_poly(B * qm(d - r), d, k)
           * poch_poly(qm(d), 2 * d, k) * qm(d * k))
    den = poch(qm(d), d, k - s_) + poch(qm(d), d, k + s_) + poch(A * B * qm(2 * d), 2 * d, k)
    assert thm11_lhs(n, d, r, s_) == Frac(num, den)


def test_thm11_vanishes_at_roots():
    for n, d, r in [(3, 2, 1), (5, 2, 1), (5, 3, 2), (7, 4, 3)]:
        ea, eb = sums.thm11_roots(n, d, r)
        assert ea % n == 0 and eb % n == 0
        for s in thm11_admissible_s(n, d, r):
            f = thm11_lhs(n, d, r, s)
            assert f.substitute("a", SignedPower(1, -ea)).is_zero()
            assert f.substitute("b", SignedPower(1, -eb)).is_zero()


# --- two-parameter sums with free x ----------------------------------------------------------------------------

def test_thm13_examples():
    assert thm13_side(1, 2, 1) == Frac(1) == thm13_rhs(1, 2, 1)
    assert sums.thm13_sign(3, 2, 1) == -1
    s = thm13_side(3, 2, 1, 1, {"x": 0})
    assert s == thm13_side(3, 2, 1, -1, {"x": 0})


def test_thm13_matches_naive():
    n, d, r = 3, 2, 1
    terms = []
    for k in range(n):
        num = (poch_poly(A * qm(r), d, k) * poch_poly(B * qm(d - r), d, k)
               * poch_poly(X, d, k) * qm(d * k))
        terms.append((num, poch(qm(d), d, k) + poch(A * B * qm(2 * d), 2 * d, k)))
    assert thm13_side(n, d, r) == naive(terms)


def test_cor14_examples():
    assert cor14_lhs(1, 2, 1) == Frac(1) == cor14_rhs(1, 2, 1)
    assert cor14_rhs(3, 2, 1) == Frac(-1)
    assert cor14_rhs(5, 2, 1) == Frac(1)


def test_cor14_matches_naive():
    n, d, r = 5, 3, 1
    ainv = MPoly.mono(1, q=d - r, a=-1)
    terms = []
    for k in range(n):
        num = 2 * poch_poly(A * qm(r), d, k) * poch_poly(ainv, d, k) * qm(d * k)
        terms.append((num, poch(qm(d), d, k) * 2 + [ONE + qm(d * k)]))
    assert cor14_lhs(n, d, r) == naive(terms)


def test_cor14_is_thm13_specialized():
    # b = 1/a and x = -1 in the two-parameter left side
    n, d, r = 3, 2, 1
    lhs = cor14_lhs(n, d, r)
    terms = []
    ainv = MPoly.mono(1, q=d - r, a=-1)
    for k in range(n):
        num = poch_poly(A * qm(r), d, k) * poch_poly(ainv, d, k) * poch_poly(qm(0, -1), d, k) * qm(d * k)
        terms.append((num, poch(qm(d), d, k) + poch(qm(2 * d), 2 * d, k)))
    assert naive(terms) == lhs


def test_cor15_and_prop32():
    for n in (1, 3, 5, 7):
        for d in (2, 3):
            if n % d == 0:
                continue
            for r in range(1, d):
                assert sums.cor15_roots(n, d, r)[0] == sums.thm11_roots(n, d, r)[0]
                assert sums.cor15_roots(n, d, r)[1] == sums.thm11_roots(n, d, d - r)[0]


# --- Ramanujan type -----------------------------------------------------------------------------

def test_ramanujan_examples():
    assert ramanujan_q_lhs(1) == Frac(1) == ramanujan_q_rhs(1)
    assert ramanujan_q_rhs(5) == Frac(-(qm(-2) * (ONE + Q + Q ** 2 + Q ** 3 + Q ** 4)))
    assert ramanujan_q_rhs(7) == Frac(qm(-3) * sum((qm(i) for i in range(7)), MPoly()))
    with pytest.raises(ConstraintError):
        ramanujan_q_lhs(9)


def test_ramanujan_matches_naive_at_a1():
    n = 5
    terms = []
    for k in range(n):
        num = (poch_poly(Q, 2, k) ** 2 * poch_poly(Q, 2, 2 * k)
               * sum((qm(i) for i in range(8 * k + 1)), MPoly()) * qm(2 * k * k))
        terms.append((num, poch(qm(2), 2, 2 * k) + poch(qm(6), 6, k) * 2))
    assert ramanujan_q_lhs(n, {"a": 1}) == naive(terms)


# --- RV-type sums ------------------------------------------------------------------------------------

def _rv_terms(n, extra):
    terms = []
    for k in range(n):
        num = poch_poly(A * Q, 2, k) * poch_poly(MPoly.mono(1, q=1, a=-1), 2, k) * extra(k)
        terms.append((num, poch(qm(2), 2, k) * 2))
    return naive(terms)


def test_thm15_examples():
    assert thm15_lhs(1) == Frac(1) == thm15_rhs(1)
    assert thm15_rhs(3) == Frac(-qm(-2))
    assert thm15_lhs(3, {"a": SignedPower(1, -3)}) == Frac(-qm(-2))
    with pytest.raises(ConstraintError):
        thm15_lhs(4)


def test_thm15_matches_naive():
    assert thm15_lhs(5) == _rv_terms(5, lambda k: ONE)


def test_thm41_examples():
    assert thm41_lhs(1) == Frac(1) == thm41_rhs(1)
    assert thm41_rhs(3, {"x": 1}) == thm15_rhs(3)
    got = thm41_lhs(3, {"a": SignedPower(1, -3)})
    assert got == Frac(ONE - X - qm(-2) * X)


def test_thm41_roots_give_little_legendre_in_inverse_base():
    # at a = q^-n or q^n the left side is P_m(x | q^-2), m = (n-1)/2
    for n in (3, 5, 7, 9):
        m = (n - 1) // 2
        for e in (-n, n):
            got = thm41_lhs(n, {"a": SignedPower(1, e)})
            assert got == little_q_legendre(m, "standard", -2) == thm41_rhs(n)
            assert got != little_q_legendre(m, "standard", 2)


def test_thm41_naive():
    assert thm41_lhs(5) == _rv_terms(5, lambda k: X ** k)


def test_thm41_x1_is_thm15():
    for n in range(1, 10, 2):
        assert thm41_lhs(n, {"x": 1}) == thm15_lhs(n)


def test_thm42_examples():
    assert thm42_rhs(1) == Frac(1)
    for n in (3, 5, 7):
        assert thm42_rhs(n, {"x": 1}) == thm15_rhs(n)


def test_thm42_x0_gives_cor43():
    for n in range(1, 10, 2):
        assert thm42_rhs(n, {"x": 0}) == thm15_rhs(n) * cor43_lhs(n)
        assert thm41_lhs(n, {"x": 0}) == Frac(1)


def test_cor43_matches_naive():
    assert cor43_lhs(5) == _rv_terms(5, lambda k: qm(2 * k))
    assert cor43_rhs(3) == Frac(-qm(2))


def test_thm44_examples():
    assert thm44_lhs(1, 0) == Frac(1)
    half = _rv_terms(2, lambda k: ONE)
    assert thm44_lhs(3, 0) == half
    aiq = MPoly.mono(1, q=1, a=-1)
    terms = []
    for k in range(2):
        num = poch_poly(A * Q, 2, k) * poch_poly(aiq, 2, k + 1)
        terms.append((num, poch(qm(2), 2, k) + poch(qm(2), 2, k + 1)))
    assert thm44_lhs(3, 1) == naive(terms)
    with pytest.raises(ConstraintError):
        thm44_lhs(5, 3)


def test_identity51_examples():
    assert identity51_check(0, 0)
    assert identity51_check(1, 1)
    assert identity51_check(2, 3)


def test_identity51_grid():
    for N in range(7):
        for M in range(N, 2 * N + 1):
            assert identity51_check(N, M)


def test_thm46_examples():
    for v in ("plus", "minus"):
        assert thm46_lhs(1, v) == Frac(1) == thm46_rhs(1, v)
    assert thm46_lhs(3, "minus", {"a": SignedPower(1, -3)}) == Frac(qm(4))
    assert thm46_rhs(3, "plus") == Frac(-qm(4))


def test_conj45_examples():
    assert conj45_lhs(1) == Frac(1) == conj45_lhs(1, "pochhammer")
    expected = (Frac(1) + Frac(Q) +
                Frac(qm(2) * qbinom(4, 2).to_mpoly(), [ONE + Q, ONE + qm(2)]))
    assert conj45_lhs(3) == expected


def test_conj45_forms_consistent():
    for n in range(1, 10, 2):
        p = conj45_lhs(n, "pochhammer")
        assert p.substitute_q(-1) == p
        assert p == conj45_lhs(n, "binomial").substitute_q(1, 2)


# --- F_n parity in x --------------------------------------------------------------------------------------------

def test_lemma31_examples():
    assert fn_lemma31(0) == Frac(1)
    assert fn_lemma31(1) == Frac(X)
    f2 = fn_lemma31(2)
    assert f2 == fn_lemma31(2, -1)


def test_lemma31_symmetry():
    for n in range(9):
        assert sums.lemma31_residual(n).is_zero()


# --- classical identities ----------------------------------------------------------------------------------

def test_classical_examples():
    lhs, rhs = classical_identity_sides("q-chu-vandermonde", 1)
    assert lhs == rhs == Frac(A - B, [ONE - B])
    lhs, rhs = classical_identity_sides("q-binomial-theorem", 2)
    assert lhs == Frac(ONE - (ONE + Q) * X + Q * X ** 2) == rhs


@pytest.mark.parametrize("name", CLASSICAL)
def test_classical_grid(name):
    for n in range(9):
        assert classical_identity_check(name, n), (name, n)


def test_classical_unknown():
    with pytest.raises(ValueError):
        classical_identity_check("nope", 1)


# --- integer sums ------------------------------------------------------------------------------------------

def test_integer_examples():
    assert integer_sum("rv", 3) == Fraction(89, 64)
    assert integer_expected("ram1a", 5) == -5
    with pytest.raises(ConstraintError):
        integer_sum("ram1a", 3)
    with pytest.raises(ConstraintError):
        integer_sum("rv", 9)


def test_integer_sums_are_q1_limits():
    # RV sum at q -> 1 of the a = 1 q-sum; checked via binomial formula directly
    for p in (3, 5, 7):
        direct = sum(Fraction(comb(2 * k, k) ** 2, 16 ** k) for k in range(p))
        assert integer_sum("rv", p) == direct


# --- build-time specialization agrees with substitution ----------------------------------------------------

@pytest.mark.parametrize("build,var,value", [
    (lambda m: thm15_lhs(7, m), "a", SignedPower(1, -7)),
    (lambda m: thm15_lhs(7, m), "a", 1),
    (lambda m: thm46_lhs(5, "plus", m), "a", SignedPower(-1, 5)),
    (lambda m: thm44_lhs(7, 2, m), "a", SignedPower(1, 7)),
    (lambda m: thm11_lhs(5, 3, 2, 2, m), "b", SignedPower(1, -5)),
    (lambda m: thm13_side(5, 2, 1, 1, m), "x", Fraction(1, 3)),
    (lambda m: ramanujan_q_lhs(5, m), "a", SignedPower(1, 5)),
    (lambda m: fn_lemma31(4, 1, m), "b", SignedPower(-1, 2)),
])
def test_specialized_build_matches_substitution(build, var, value):
    assert build({var: value}) == build(None).substitute(var, value)
