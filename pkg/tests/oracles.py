"""Independent reference implementations used only by the tests.

These deliberately take different routes than the library: truncated series
exponentiation instead of the closed multiplicity formula, an explicit
sum-over-derivative-pairs operator instead of the per-monomial loop, Leibniz
permanent-style determinants instead of Faddeev-LeVerrier, and Newton's
recurrence for the complete symmetric functions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

from hypothesis import strategies as st

from fockspectra import Polynomial, monomial, partial_derivative, monomial_basis, x

# --- truncated power series with Polynomial coefficients (index = z-degree) --


def series_mul(a: list[Polynomial], b: list[Polynomial], order: int) -> list[Polynomial]:
    out = [Polynomial.zero() for _ in range(order + 1)]
    for i, ai in enumerate(a[: order + 1]):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def series_exp(a: list[Polynomial], order: int) -> list[Polynomial]:
    """exp of a series with zero constant term, truncated at z^order."""
    assert a[0].is_zero()
    out = [Polynomial.one()] + [Polynomial.zero()] * order
    power = list(out)
    fact = 1
    for n in range(1, order + 1):
        power = series_mul(power, a, order)
        fact *= n
        for k in range(order + 1):
            out[k] = out[k] + power[k] / fact
    return out


def xz_series(order: int, alternating: bool = False) -> list[Polynomial]:
    """x_1 z + x_2 z^2 + ... (optionally with signs (-1)^(j+1))."""
    coeffs = [Polynomial.zero()]
    for j in range(1, order + 1):
        sign = (-1) ** (j + 1) if alternating else 1
        coeffs.append(x(j) * sign)
    return coeffs


def g_series_oracle(d: int, ell: int) -> Polynomial:
    """Coefficient of r^ell z^d in exp(r * (x_1 z + ...)): the z^d part of
    (x_1 z + ... + x_d z^d)^ell / ell!."""
    if d == 0 and ell == 0:
        return Polynomial.one()
    if d == 0 or ell == 0:
        return Polynomial.zero()
    base = xz_series(d)
    power = [Polynomial.one()] + [Polynomial.zero()] * d
    for _ in range(ell):
        power = series_mul(power, base, d)
    return power[d] / factorial(ell)


def h_series_oracle(order: int) -> list[Polynomial]:
    return series_exp(xz_series(order), order)


def e_series_oracle(order: int) -> list[Polynomial]:
    return series_exp(xz_series(order, alternating=True), order)


def newton_h(kmax: int) -> list[Polynomial]:
    """h_0..h_kmax from k h_k = sum_{i<=k} p_i h_{k-i} with p_i = i x_i."""
    hs = [Polynomial.one()]
    for k in range(1, kmax + 1):
        acc = Polynomial.zero()
        for i in range(1, k + 1):
            acc = acc + x(i) * hs[k - i] * i
        hs.append(acc / k)
    return hs


# --- reference form of the operator -----------------------------------------


def apply_t_reference(f: Polynomial) -> Polynomial:
    """1/2 sum_n (sum_{a+b=n} x_a x_b) (sum_{p+q=n} d_p d_q f), built from
    whole-polynomial derivative and product operations."""
    top = 0
    for m in f.monomials():
        for k, _ in m:
            top = max(top, k)
    out = Polynomial.zero()
    for n in range(2, 2 * top + 1):
        xx = Polynomial.zero()
        for a in range(1, n):
            xx = xx + x(a) * x(n - a)
        dd = Polynomial.zero()
        for p in range(1, n):
            dd = dd + partial_derivative(partial_derivative(f, p), n - p)
        if not dd.is_zero():
            out = out + xx * dd
    return out / 2


# --- determinant-based characteristic polynomial ----------------------------


def _perm_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def char_poly_reference(rows) -> list[Fraction]:
    """Monic coefficients of det(xI - A) by the Leibniz expansion (small n)."""
    n = len(rows)
    total = [Fraction(0)] * (n + 1)  # ascending powers of x
    for perm in permutations(range(n)):
        prod = [Fraction(1)]
        for i in range(n):
            const = -Fraction(rows[i][perm[i]])
            lifted = [Fraction(0)] * (len(prod) + 1)
            for k, c in enumerate(prod):
                lifted[k] += c * const
                if perm[i] == i:
                    lifted[k + 1] += c
            prod = lifted
        sign = _perm_sign(perm)
        for k, c in enumerate(prod):
            total[k] += sign * c
    return list(reversed(total))


# --- hypothesis strategies ---------------------------------------------------

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def monomials(draw, max_var: int = 5, max_exp: int = 3):
    pairs = draw(
        st.lists(
            st.tuples(st.integers(1, max_var), st.integers(1, max_exp)),
            min_size=0,
            max_size=3,
        )
    )
    return monomial(pairs)


@st.composite
def polynomials(draw, max_terms: int = 4):
    terms = draw(st.lists(st.tuples(monomials(), small_fractions), max_size=max_terms))
    out = Polynomial.zero()
    for m, c in terms:
        out = out + Polynomial({m: c})
    return out


@st.composite
def homogeneous_polynomials(draw, max_d: int = 7):
    d = draw(st.integers(1, max_d))
    ell = draw(st.integers(1, d))
    basis = monomial_basis(d, ell)
    coeffs = draw(st.lists(small_fractions, min_size=len(basis), max_size=len(basis)))
    return Polynomial(dict(zip(basis, coeffs))), d, ell
