import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coinv.combinatorics import QPolynomial, conjugate, partitions, q_binomial, r_partitions
from coinv.oracle import build_quotient, decompose, refined_component
from coinv.representations import (
    component_vanishes,
    descent_window,
    frob_ribbon_product,
    frob_rnk_rho,
    frob_snk_rho,
    graded_mult_from_components,
    graded_mult_gf,
    graded_mult_gf_wreath,
    grfrob,
    multiplicity_rnk,
    multiplicity_snk,
    multiplicity_table,
    ribbon_data,
    valid_rhos,
)
from coinv.symfunc import SchurExpansion, elementary_sym, omega, ribbon_skew_shape, schur_expand, skew_schur_jacobi_trudi
from coinv.tableaux import enumerate_r_syt, enumerate_syt, hook_length_count, syt_descents

RHO_8 = (5, 3, 2, 2, 1, 1, 1, 0)
RHO_7 = (9, 5, 5, 4, 3, 2, 0)


def test_multiplicity_rnk_examples():
    assert multiplicity_rnk(8, 6, RHO_8, (4, 3, 1)) == 7
    assert multiplicity_rnk(5, 5, (3, 2, 2, 1, 0), (2, 2, 1)) == 1
    for n in range(1, 6):
        for k in range(1, n + 1):
            for la in partitions(n):
                assert multiplicity_rnk(n, k, (0,) * n, la) == (1 if la == (n,) else 0)
    with pytest.raises(ValueError):
        multiplicity_rnk(3, 2, (1, 0, 0), (2, 2))


def test_descent_window_example():
    lo, hi = descent_window(8, 6, RHO_8)
    assert lo == {4, 7} and hi == {1, 2, 4, 7}


def test_multiplicity_snk_examples():
    ones = [((2, 1), (4,)), ((2, 1), (2, 2)), ((2, 1), (2, 1, 1)),
            ((1, 1, 1), (4,)), ((1, 1, 1), (2, 2)), ((1, 1, 1), (2, 1, 1))]
    twos = [((2, 1), (3, 1)), ((1, 1, 1), (3, 1))]
    for la_bar in r_partitions(7, 2):
        expected = 1 if la_bar in ones else 2 if la_bar in twos else 0
        assert multiplicity_snk(7, 5, 2, RHO_7, la_bar) == expected
    with pytest.raises(ValueError):
        multiplicity_snk(3, 2, 2, (1, 0, 0), ((1,), (1,)))


def test_snk_reduces_to_rnk_at_r_1():
    for n in range(1, 6):
        for k in range(1, n + 1):
            for rho in valid_rhos(n, k):
                for la in partitions(n):
                    assert multiplicity_snk(n, k, 1, rho, (la,)) == multiplicity_rnk(n, k, rho, la)


def test_vanishing_examples():
    assert not component_vanishes(8, 6, RHO_8)
    assert not component_vanishes(7, 5, RHO_7, 2)
    # a part equal to k breaks the exponent bound
    assert component_vanishes(3, 2, (2, 0, 0))
    # tail (1, 1) at k = 2 would need a descent at position n
    assert component_vanishes(3, 2, (1, 1, 1))
    assert frob_rnk_rho(3, 2, (2, 0, 0)) == SchurExpansion()
    assert frob_snk_rho(2, 1, 2, (2, 0)) == SchurExpansion()


def test_frob_examples():
    assert frob_rnk_rho(8, 6, RHO_8)[(4, 3, 1)] == 7
    assert frob_rnk_rho(5, 5, (3, 2, 2, 1, 0))[(2, 2, 1)] == 1
    for n in range(1, 6):
        assert frob_rnk_rho(n, n, (0,) * n) == SchurExpansion({(n,): 1})
        assert frob_ribbon_product(n, n, (0,) * n) == SchurExpansion({(n,): 1})


def test_ribbon_data_example():
    rho = (7, 7, 5, 3, 3, 3, 3, 2, 1, 1, 0)
    data = ribbon_data(11, 8, rho)
    assert data.gaps == (2, 1, 4, 1, 2)
    assert data.p == 2
    assert data.rows == (1, 2, 1, 4)
    assert frob_ribbon_product(11, 8, rho) == frob_rnk_rho(11, 8, rho)


def test_ribbon_identity():
    for n in range(1, 8):
        for k in range(1, n + 1):
            for rho in valid_rhos(n, k):
                assert frob_ribbon_product(n, k, rho) == frob_rnk_rho(n, k, rho)


def _omega_side(n, k, rho):
    """s_{gamma'} prod e_{d_i}, with the conjugate ribbon expanded by Jacobi-Trudi."""
    data = ribbon_data(n, k, rho)
    outer, inner = ribbon_skew_shape(data.rows)
    total = skew_schur_jacobi_trudi(conjugate(outer), conjugate(inner), n)
    for gap in data.gaps[: data.p]:
        total = total * elementary_sym(gap, n)
    return schur_expand(total)


def test_omega_identity():
    for n in range(1, 7):
        for k in range(1, n + 1):
            for rho in valid_rhos(n, k):
                assert omega(frob_rnk_rho(n, k, rho)) == _omega_side(n, k, rho)


def test_graded_gf_examples():
    assert graded_mult_gf(3, 2, (2, 1)) == QPolynomial([0, 1, 1])
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert graded_mult_gf(n, k, (n,)) == q_binomial(n - 1, n - k)
            assert graded_mult_gf_wreath(n, k, 2, ((n,), ())) == q_binomial(n - 1, n - k).substitute_power(2)
    for la_bar in r_partitions(2, 2):
        assert graded_mult_gf_wreath(2, 1, 2, la_bar) == graded_mult_from_components(2, 1, 2, la_bar)


def test_graded_gf_lusztig_stanley():
    for n in range(1, 7):
        for la in partitions(n):
            direct = QPolynomial()
            for T in enumerate_syt(la):
                direct = direct + QPolynomial.monomial(syt_descents(T).maj)
            assert graded_mult_gf(n, n, la) == direct
            assert graded_mult_gf_wreath(n, n, 1, (la,)) == direct


def test_graded_gf_matches_components():
    for n in range(1, 7):
        for k in range(1, n + 1):
            for la in partitions(n):
                assert graded_mult_gf(n, k, la) == graded_mult_from_components(n, k, 1, la)
    for n in range(1, 5):
        for k in range(1, n + 1):
            for la_bar in r_partitions(n, 2):
                assert graded_mult_gf_wreath(n, k, 2, la_bar) == graded_mult_from_components(n, k, 2, la_bar)


def test_grfrob_examples():
    assert grfrob(3, 3) == SchurExpansion({(3,): QPolynomial([1]), (2, 1): QPolynomial([0, 1, 1]),
                                           (1, 1, 1): QPolynomial([0, 0, 0, 1])})
    for n in range(1, 7):
        for la, f in grfrob(n, n).items():
            assert f(1) == hook_length_count(la)
    total = sum(f(1) * hook_length_count(la) for la, f in grfrob(2, 1).items())
    assert total == build_quotient(2, 1).dimension()


def test_hilbert_consistency_with_oracle():
    for n in range(1, 5):
        for k in range(1, n + 1):
            series = QPolynomial()
            for la, f in grfrob(n, k).items():
                series = series + f * QPolynomial([hook_length_count(la)])
            assert list(series.coeffs) == build_quotient(n, k).hilbert()
    for n, k in [(2, 1), (2, 2), (3, 2), (3, 3)]:
        series = QPolynomial()
        for la_bar, f in grfrob(n, k, 2).items():
            series = series + f * QPolynomial([len(enumerate_r_syt(la_bar))])
        assert list(series.coeffs) == build_quotient(n, k, 2).hilbert()


def test_multiplicities_match_oracle_small():
    for n in range(1, 4):
        for k in range(1, n + 1):
            quotient = build_quotient(n, k)
            for d in range(quotient.top_degree + 1):
                for rho in partitions(d, max_len=n):
                    padded = rho + (0,) * (n - len(rho))
                    comp = refined_component(quotient, padded)
                    assert decompose(quotient, padded, comp) == {
                        (la,): multiplicity_rnk(n, k, padded, la) for la in partitions(n)}


def test_multiplicity_table_json():
    table = multiplicity_table(8, 6, RHO_8)
    data = table.to_json()
    assert data["rho"] == list(RHO_8)
    assert {"shape": [4, 3, 1], "mult": 7} in data["multiplicities"]
    assert all(entry["mult"] > 0 for entry in data["multiplicities"])
    wreath = multiplicity_table(7, 5, RHO_7, 2).to_json()
    assert {"shape": [[2, 1], [3, 1]], "mult": 2} in wreath["multiplicities"]
    assert len(wreath["multiplicities"]) == 8
    with pytest.raises(ValueError):
        multiplicity_table(2, 1, (1, 1, 1))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.data())
def test_table_dimension_matches_descent_basis(n, data):
    # sum over lambda of mult * f^lambda counts descent monomials with exponent partition rho
    from coinv.descent_monomials import descent_monomial, enumerate_basis, exponent_partition
    k = data.draw(st.integers(1, n))
    rhos = list(valid_rhos(n, k))
    rho = data.draw(st.sampled_from(rhos))
    table = multiplicity_table(n, k, rho)
    dim = sum(v * hook_length_count(la) for la, v in table.entries.items())
    count = sum(1 for e in enumerate_basis(n, k) if exponent_partition(descent_monomial(e.g, e.I)) == rho)
    assert dim == count
