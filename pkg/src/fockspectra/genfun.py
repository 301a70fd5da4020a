"""The bihomogeneous generators g(d, l), products of them, and basis expansion.

g(d, l) is the coefficient of r^l z^d in exp(r * (x_1 z + x_2 z^2 + ...)).
Extracting that coefficient directly gives the closed form used here:

    g(d, l) = sum over partitions of d with l parts of
              x_{p1} x_{p2} ... / (product of part-multiplicity factorials),

with g(0, 0) = 1 and g(d, l) = 0 unless d >= l >= 1.  Products of these
generators indexed by admissible sequences form a basis of each bigraded
component; expand_in_gbasis computes exact coordinates in that basis.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import linalg
from .errors import ConsistencyError, SingularMatrixError
from .partitions import admissible_sequences, pair_sort_key, partitions_with_length
from .poly import Polynomial, bidegree, mono_norm_sq, monomial_basis, partition_monomial
from .poly import Bidegree

GIndex = tuple[int, int]
GProduct = tuple[GIndex, ...]
GCombination = dict[GProduct, Fraction]


def g_value_is_zero(d: int, ell: int) -> bool:
    """Single source of truth for when g(d, l) vanishes."""
    return not (d == ell == 0 or d >= ell >= 1)


@lru_cache(maxsize=None)
def g_poly(d: int, ell: int) -> Polynomial:
    if g_value_is_zero(d, ell):
        return Polynomial.zero()
    if d == 0:
        return Polynomial.one()
    terms = {}
    for parts in partitions_with_length(d, ell):
        m = partition_monomial(parts)
        terms[m] = Fraction(1, mono_norm_sq(m))
    return Polynomial(terms)


def canonical_product(factors: Iterable[GIndex]) -> GProduct:
    """Canonical form of a factor sequence: zero factors rejected, g(0,0)
    dropped, remaining factors sorted with larger degree (then smaller
    length) first."""
    kept = []
    for d, ell in factors:
        if d == ell == 0:
            continue
        if g_value_is_zero(d, ell):
            raise ValueError(f"factor g({d},{ell}) is identically zero")
        kept.append((d, ell))
    return tuple(sorted(kept, key=pair_sort_key))


def product_bidegree(factors: Iterable[GIndex]) -> Bidegree:
    ds, ells = 0, 0
    for d, ell in factors:
        ds += d
        ells += ell
    return Bidegree(ds, ells)


@lru_cache(maxsize=None)
def _expand_canonical(product: GProduct) -> Polynomial:
    out = Polynomial.one()
    for d, ell in product:
        out = out * g_poly(d, ell)
    return out


def g_product_expand(factors: Iterable[GIndex]) -> Polynomial:
    """The polynomial g(d1,l1) * g(d2,l2) * ... (1 for the empty product)."""
    return _expand_canonical(canonical_product(factors))


def expand_combination(comb: GCombination) -> Polynomial:
    out = Polynomial.zero()
    for product, c in comb.items():
        out = out + g_product_expand(product) * c
    return out


def complete_symmetric(k: int) -> Polynomial:
    """h_k = sum over l <= k of g(k, l), in the x coordinates."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = Polynomial.zero()
    for ell in range(1, k + 1):
        out = out + g_poly(k, ell)
    return out


def elementary_symmetric(k: int) -> Polynomial:
    """e_k = sum over l <= k of (-1)^(k+l) g(k, l), in the x coordinates."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = Polynomial.zero()
    for ell in range(1, k + 1):
        out = out + g_poly(k, ell) * ((-1) ** (k + ell))
    return out


def spanning_products(d: int, ell: int) -> tuple[GProduct, ...]:
    """Every canonical product of nonzero generators with total bidegree
    (d, ell), admissible or not; sorted like the basis."""
    out: list[GProduct] = []

    def extend(prefix: list[GIndex], rem_d: int, rem_l: int, cap: tuple[int, int]) -> None:
        if rem_d == 0 and rem_l == 0:
            out.append(tuple(prefix))
            return
        if rem_d <= 0 or rem_l <= 0:
            return
        for d1 in range(rem_d, 0, -1):
            for l1 in range(1, min(d1, rem_l) + 1):
                if pair_sort_key((d1, l1)) < cap:
                    continue  # keep factors weakly decreasing
                prefix.append((d1, l1))
                extend(prefix, rem_d - d1, rem_l - l1, pair_sort_key((d1, l1)))
                prefix.pop()

    extend([], d, ell, (-d, 0))
    out.sort(key=lambda p: tuple(pair_sort_key(f) for f in p))
    return tuple(out)


@lru_cache(maxsize=None)
def expansion_matrix(d: int, ell: int) -> tuple[tuple[Fraction, ...], ...]:
    """Column j = coordinates of the j-th basis product in the monomial basis."""
    basis = admissible_sequences(d, ell)
    monos = monomial_basis(d, ell)
    cols = [_expand_canonical(p) for p in basis]
    return tuple(tuple(f.coefficient(m) for f in cols) for m in monos)


@lru_cache(maxsize=None)
def _expansion_inverse(d: int, ell: int) -> tuple[tuple[Fraction, ...], ...]:
    try:
        inv = linalg.invert([list(row) for row in expansion_matrix(d, ell)])
    except SingularMatrixError as e:
        raise ConsistencyError(
            f"expansion matrix for component ({d},{ell}) is singular; "
            "the product family failed to be a basis"
        ) from e
    return tuple(tuple(row) for row in inv)


def expand_in_gbasis(f: Polynomial, d: int, ell: int) -> tuple[Fraction, ...]:
    """Exact coordinates of f in the ordered basis of generator products.

    f must be bihomogeneous of bidegree (d, ell); the zero polynomial is
    accepted and yields the zero vector.
    """
    for m in f.monomials():
        if bidegree(m) != (d, ell):
            raise ValueError(
                f"term {m} has bidegree {tuple(bidegree(m))}, expected ({d}, {ell})"
            )
    monos = monomial_basis(d, ell)
    if not monos:
        if f.is_zero():
            return ()
        raise ValueError(f"component ({d},{ell}) is zero-dimensional")
    inv = _expansion_inverse(d, ell)
    vec = [f.coefficient(m) for m in monos]
    return tuple(linalg.mat_vec(inv, vec))


def gproduct_str(product: GProduct) -> str:
    if not product:
        return "1"
    return "".join(f"g({d},{ell})" for d, ell in product)


def gcombination_str(comb: GCombination) -> str:
    if not comb:
        return "0"
    pieces = []
    for product in sorted(comb, key=lambda p: tuple(pair_sort_key(f) for f in p)):
        c = comb[product]
        body = gproduct_str(product)
        mag = abs(c)
        text = body if mag == 1 and product else (
            str(mag) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        ) + ("*" + body if product else "")
        if not pieces:
            pieces.append(text if c > 0 else f"-{text}")
        else:
            pieces.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(pieces)
