from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockspectra import (
    apply_t,
    char_poly_check,
    count_partitions,
    dominant_eigenvalue,
    eigenbasis,
    g_poly,
    g_product_expand,
    has_zero_eigenvalue,
    inner_product,
    monomial_basis,
    orthogonal_eigenbasis,
    s_basis,
    sequence_eigenvalue,
    spectrum,
    t_matrix,
    verify_self_adjoint,
    verify_triangular,
    x,
)
from fockspectra import linalg

import oracles


def test_s_basis_examples():
    assert s_basis(4, 2) == (((4, 2),), ((3, 1), (1, 1)))
    assert s_basis(3, 2) == (((3, 2),),)
    for d in (1, 5, 9):
        assert s_basis(d, 1) == (((d, 1),),)
    assert len(s_basis(12, 4)) == 15
    assert s_basis(2, 4) == ()
    assert s_basis(3, 0) == ()


def test_t_matrix_small_component():
    mono = t_matrix(4, 2, basis="monomial")
    assert mono.entries == ((2, 2), (1, 1))
    assert mono.row_labels == monomial_basis(4, 2)
    gb = t_matrix(4, 2, basis="gbasis")
    assert gb.entries == ((3, 2), (0, 0))
    assert gb.col_labels == s_basis(4, 2)
    single = t_matrix(5, 1, basis="gbasis")
    assert single.entries == ((0,),)


def test_t_matrix_rejects_bad_input():
    with pytest.raises(ValueError):
        t_matrix(2, 4)
    with pytest.raises(ValueError):
        t_matrix(4, 2, basis="fourier")


def test_verify_triangular_examples():
    assert verify_triangular(4, 2) == (True, (3, 0))
    assert verify_triangular(3, 2) == (True, (2,))


def test_triangular_sweep():
    for d in range(1, 11):
        for ell in range(1, d + 1):
            ok, diag = verify_triangular(d, ell)
            assert ok, (d, ell)
            assert len(diag) == count_partitions(d, ell)


def test_sequence_eigenvalue():
    assert sequence_eigenvalue(((4, 2),)) == 3
    assert sequence_eigenvalue(((3, 1), (1, 1))) == 0
    assert sequence_eigenvalue(((12, 4),)) == 30


def test_spectrum_examples():
    assert spectrum(4, 2).eigenvalues == (0, 3)
    assert spectrum(12, 4).eigenvalues == (1, 3, 3, 5, 6, 7, 7, 10, 10, 10, 13, 15, 17, 19, 30)
    for d in (1, 4, 7):
        assert spectrum(d, 1).eigenvalues == (0,)
    for d in range(1, 7):
        assert spectrum(d, d).eigenvalues == (d * (d - 1) // 2,)


def test_spectrum_report_shape():
    report = spectrum(6, 3)
    assert report.d == 6 and report.ell == 3
    assert len(report.entries) == count_partitions(6, 3)
    assert list(report.eigenvalues) == sorted(report.eigenvalues)
    for entry in report.entries:
        assert entry.eigenvalue == sequence_eigenvalue(entry.sequence)
        assert entry.eigenvector is None
    assert report.dominant == max(report.eigenvalues)


def test_spectrum_with_eigenvectors():
    report = spectrum(6, 3, with_eigenvectors=True)
    for entry in report.entries:
        assert entry.eigenvector is not None
        assert apply_t(entry.eigenvector) == entry.eigenvector * entry.eigenvalue


def test_dominant_examples():
    assert dominant_eigenvalue(12, 4) == 30
    for d in (1, 3, 8):
        assert dominant_eigenvalue(d, 1) == 0
    assert dominant_eigenvalue(4, 2) == 3


def test_dominant_eigenfunction():
    for d in range(1, 11):
        for ell in range(1, d + 1):
            g = g_poly(d, ell)
            assert apply_t(g) == g * dominant_eigenvalue(d, ell), (d, ell)


def test_has_zero_examples():
    assert has_zero_eigenvalue(4, 2)
    assert not has_zero_eigenvalue(12, 4)
    assert has_zero_eigenvalue(1, 1)


def test_zero_law_matches_spectrum():
    for d in range(1, 11):
        for ell in range(1, d + 1):
            assert (0 in spectrum(d, ell).eigenvalues) == (d >= ell * ell), (d, ell)


def test_eigenbasis_small_component():
    fns = eigenbasis(4, 2)
    by_value = {fn.eigenvalue: fn for fn in fns}
    assert set(by_value) == {0, 3}
    assert by_value[3].coords == (1, 0)
    assert by_value[3].polynomial == g_poly(4, 2)
    assert by_value[0].coords == (Fraction(-2, 3), 1)
    assert by_value[0].polynomial == g_product_expand([(3, 1), (1, 1)]) - g_poly(4, 2) * Fraction(2, 3)
    (fn,) = eigenbasis(3, 2)
    assert fn.eigenvalue == 2 and fn.polynomial == x(1) * x(2)


def test_eigenbasis_is_exact_and_complete():
    for d in range(1, 9):
        for ell in range(1, d + 1):
            fns = eigenbasis(d, ell)
            assert len(fns) == count_partitions(d, ell)
            m = t_matrix(d, ell, basis="gbasis").entries
            for fn in fns:
                image = linalg.mat_vec([list(r) for r in m], list(fn.coords))
                assert image == [fn.eigenvalue * c for c in fn.coords]
                assert apply_t(fn.polynomial) == fn.polynomial * fn.eigenvalue


def test_orthogonal_eigenbasis_small_components():
    fns = orthogonal_eigenbasis(4, 2)
    assert len(fns) == 2
    assert inner_product(fns[0].polynomial, fns[1].polynomial) == 0
    for d in (1, 4, 6):
        (fn,) = orthogonal_eigenbasis(d, 1)
        assert fn.polynomial == x(d) and fn.norm_squared == 1
    (fn,) = orthogonal_eigenbasis(3, 2)
    assert fn.polynomial == x(1) * x(2) and fn.norm_squared == 1


def test_orthogonal_eigenbasis_sweep():
    for d in range(1, 9):
        for ell in range(1, d + 1):
            fns = orthogonal_eigenbasis(d, ell)
            assert len(fns) == count_partitions(d, ell)
            for i in range(len(fns)):
                assert fns[i].norm_squared > 0
                assert inner_product(fns[i].polynomial, fns[i].polynomial) == fns[i].norm_squared
                assert apply_t(fns[i].polynomial) == fns[i].polynomial * fns[i].eigenvalue
                for j in range(i + 1, len(fns)):
                    assert inner_product(fns[i].polynomial, fns[j].polynomial) == 0


def test_self_adjoint_hand_example():
    # monomial matrix [[2,2],[1,1]] and Gram diag(1,2) on the (4,2) component
    m = t_matrix(4, 2, basis="monomial").entries
    assert m == ((2, 2), (1, 1))
    g = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(2)]]
    lhs = linalg.mat_mul(linalg.transpose([list(r) for r in m]), g)
    rhs = linalg.mat_mul(g, [list(r) for r in m])
    assert lhs == rhs == [[2, 2], [2, 2]]
    assert verify_self_adjoint(4, 2)


def test_self_adjoint_sweep():
    for d in range(1, 11):
        for ell in range(1, d + 1):
            assert verify_self_adjoint(d, ell), (d, ell)


def test_char_poly_check_examples():
    assert char_poly_check(4, 2)
    assert char_poly_check(3, 2)
    assert char_poly_check(6, 3)


def test_char_poly_check_sweep():
    for d in range(1, 10):
        for ell in range(1, d + 1):
            assert char_poly_check(d, ell), (d, ell)


def test_char_poly_small_cases():
    a = [[Fraction(2), Fraction(2)], [Fraction(1), Fraction(1)]]
    assert linalg.char_poly(a) == [1, -3, 0]
    assert linalg.poly_from_roots([Fraction(0), Fraction(3)]) == [1, -3, 0]


@settings(max_examples=40)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )
)
def test_char_poly_matches_determinant_expansion(rows):
    a = [[Fraction(v) for v in row] for row in rows]
    assert linalg.char_poly(a) == oracles.char_poly_reference(a)


def test_invalid_component_errors():
    for fn in (spectrum, eigenbasis, orthogonal_eigenbasis, verify_self_adjoint, char_poly_check):
        with pytest.raises(ValueError):
            fn(2, 4)
        with pytest.raises(ValueError):
            fn(3, 0)
