import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coinv.combinatorics import (
    ColoredPermutation,
    Comparison,
    colored_descents,
    descent_partition_from_set,
    dominance_compare,
    partition_descents,
    perm_descents,
)
from coinv.descent_monomials import (
    DescentBasisElement,
    check_element,
    complementary_partition,
    decompose_by_descent_subset,
    decompose_nu,
    descent_basis_monomial,
    descent_monomial,
    enumerate_basis,
    enumerate_full_basis,
    elementary_offsets,
    exponent_partition,
    format_monomial,
    gs_monomial,
    index_colored_permutation,
    index_permutation,
    is_r_descent_partition,
    leading_product_monomial,
    parse_monomial,
    prec_compare,
    project_to_quotient,
    reexpand,
    straighten_full,
    straighten_step,
)
from coinv.oracle import build_quotient

M = parse_monomial("x1^6*x2*x3*x4^2*x6^4*x7*x8^2", 8)
SIGMA = (3, 1, 4, 2, 7, 8, 6, 5)


def uncolored(word):
    return ColoredPermutation.uncolored(word)


def test_parse_and_format():
    assert M == (6, 1, 1, 2, 0, 4, 1, 2)
    assert format_monomial(M) == "x1^6*x2*x3*x4^2*x6^4*x7*x8^2"
    assert parse_monomial("1", 3) == (0, 0, 0)
    with pytest.raises(ValueError):
        parse_monomial("x4", 3)
    with pytest.raises(ValueError):
        parse_monomial("y1", 3)


def test_monomial_statistics_example():
    assert index_permutation(M) == (1, 6, 4, 8, 2, 3, 7, 5)
    assert exponent_partition(M) == (6, 4, 2, 2, 1, 1, 1, 0)
    assert complementary_partition(M) == (2, 1, 1)
    assert complementary_partition(gs_monomial(SIGMA)) == ()


def test_gs_monomial_example():
    assert gs_monomial(SIGMA) == parse_monomial("x3^4*x1^3*x4^3*x2^2*x7^2*x8^2*x6", 8)


def test_descent_monomial_examples():
    assert descent_monomial(uncolored(SIGMA), (1, 0)) == parse_monomial("x3^5*x1^3*x4^3*x2^2*x7^2*x8^2*x6", 8)
    pi = index_permutation(M)
    assert descent_monomial(uncolored(pi), (2, 1, 1)) == parse_monomial("x1^5*x6^4*x4^3*x8^2*x2*x3*x7", 8)
    # colors enter through f: b_g for g = 1^1 2^0 in Z_2 wr S_2
    g = ColoredPermutation((1, 2), (1, 0), 2)
    assert descent_monomial(g, ()) == (1, 0)
    assert descent_monomial(g, (1,)) == (3, 0)


def test_descent_basis_monomial_checks_bounds():
    e = DescentBasisElement(uncolored(SIGMA), (1, 0))
    assert descent_basis_monomial(e, 8, 6) == descent_monomial(uncolored(SIGMA), (1, 0))
    with pytest.raises(ValueError):
        # des(sigma) = 4, so I_1 < 6 - 4 = 2 forbids I_1 = 2
        descent_basis_monomial(DescentBasisElement(uncolored(SIGMA), (2, 0)), 8, 6)
    with pytest.raises(ValueError):
        descent_basis_monomial(DescentBasisElement(uncolored(SIGMA), (1,)), 8, 6)
    with pytest.raises(ValueError):
        check_element(DescentBasisElement(uncolored((1, 2)), (), (1, 1)), 2, 2, 1)


def test_prec_compare_examples():
    assert prec_compare((1, 1), (2, 0)) is Comparison.LESS
    assert prec_compare((0, 1), (1, 0)) is Comparison.LESS
    assert prec_compare((1, 0), (0, 1)) is Comparison.GREATER
    assert prec_compare((2, 1), (2, 1)) is Comparison.EQUAL
    with pytest.raises(ValueError):
        prec_compare((2, 2), (3, 0))


def test_leading_product_monomial_examples():
    for n in range(1, 5):
        assert leading_product_monomial((0,) * n, (n,)) == (1,) * n
    assert leading_product_monomial((0, 1), (1,)) == (0, 2)
    assert leading_product_monomial((0, 0), (2,), 2) == (2, 2)
    with pytest.raises(ValueError):
        leading_product_monomial((0, 0), (3,))


def test_leading_product_is_prec_maximum():
    rnd = random.Random(3)
    for _ in range(60):
        n = rnd.randint(1, 4)
        r = rnd.randint(1, 2)
        m = tuple(rnd.randint(0, 3) for _ in range(n))
        mu = tuple(sorted((rnd.randint(1, n) for _ in range(rnd.randint(0, 2))), reverse=True))
        terms = {tuple(a + b for a, b in zip(m, off)): c for off, c in elementary_offsets(mu, n, r)}
        lead = leading_product_monomial(m, mu, r)
        assert terms.get(lead) == 1
        for other in terms:
            if other != lead:
                assert prec_compare(other, lead) is Comparison.LESS


def test_straighten_step_examples():
    # exponent 6 is not below k = 5, so the worked example only fits k >= 7
    with pytest.raises(ValueError):
        straighten_step(M, 8, 5)
    e = straighten_step(M, 8, 7)
    assert e.g.word == index_permutation(M) and e.I == (2,) and e.nu == (2,)
    e = straighten_step(M, 8, 8)
    assert e.I == () and e.nu == (2, 1, 1)
    # x1 at n = k = 1 breaks the exponent bound, so start at n = 2
    for n in range(2, 6):
        e = straighten_step((1,) * n, n, n)
        assert e.g.word == tuple(range(1, n + 1)) and e.I == () and e.nu == (n,)


def test_straighten_step_on_basis_monomial():
    for e in enumerate_basis(4, 3, 2):
        m = descent_monomial(e.g, e.I)
        assert straighten_step(m, 4, 3, 2) == e


def test_straighten_full_examples():
    e = DescentBasisElement(uncolored(SIGMA), (1, 0))
    assert straighten_full(descent_monomial(e.g, e.I), 8, 6) == {e: 1}
    # x2^2 needs r*k > 2; at (n, k, r) = (2, 2, 1) the exponent bound fails
    with pytest.raises(ValueError):
        straighten_full((0, 2), 2, 2)
    exp = straighten_full((0, 2), 2, 2, 2)
    assert reexpand(exp) == {(0, 2): 1}
    exp = straighten_full((0, 2), 2, 2, 3)
    assert reexpand(exp) == {(0, 2): 1}


def test_enumerate_basis_examples():
    for n in range(1, 6):
        assert len(enumerate_basis(n, n)) == len(list(permutations(range(n))))
    assert len(enumerate_basis(2, 1)) == build_quotient(2, 1).dimension() == 1
    assert len(enumerate_basis(2, 2, 2)) == build_quotient(2, 2, 2).dimension() == 8
    with pytest.raises(ValueError):
        enumerate_basis(2, 3)


def test_decompose_nu_examples():
    mu = (5, 5, 3, 3, 1, 1, 1, 0)
    assert decompose_nu(mu, (2, 2, 1, 1, 0, 0, 0, 0)) == (3, 3, 2, 2, 1, 1, 1, 0)
    assert decompose_nu(mu, (3, 3, 2, 2, 1, 1, 0, 0)) is None
    for r in (1, 2, 3):
        assert decompose_nu(mu, mu, r) == (0,) * 8
    assert decompose_nu((4, 2), (2,), 2) == (1, 1)
    assert decompose_nu((4, 2), (1,), 2) is None


def test_decompose_by_descent_subset_examples():
    mu = (5, 5, 3, 3, 1, 1, 1, 0)
    assert partition_descents(mu, 1, 3, 8) == {4, 7}
    # the pair (4,4,2,2,1,1,1,0), (1,1,1,1,0,0,0,0) belongs to S = {4, 7}
    assert decompose_by_descent_subset(mu, {4, 7}, 8, 6) == ((4, 4, 2, 2, 1, 1, 1, 0), (1, 1, 1, 1, 0, 0, 0, 0))
    assert decompose_by_descent_subset(mu, {4}, 8, 6) == ((3, 3, 1, 1, 0, 0, 0, 0), (2, 2, 2, 2, 1, 1, 1, 0))
    with pytest.raises(ValueError):
        decompose_by_descent_subset(mu, {5}, 8, 6)
    nu = (2, 1, 0)
    assert decompose_by_descent_subset(nu, {1, 2}, 3, 3) == (nu, (0, 0, 0))


def test_decompose_by_descent_subset_matches_decompose_nu_at_k_equals_n():
    for n in range(1, 6):
        for mu in product(range(4), repeat=n):
            if list(mu) != sorted(mu, reverse=True):
                continue
            allowed = partition_descents(mu, 1, 1, n) - {n}
            for mask in range(2 ** len(allowed)):
                S = {s for i, s in enumerate(sorted(allowed)) if mask >> i & 1}
                nu, rho = decompose_by_descent_subset(mu, S, n, n)
                assert nu == descent_partition_from_set(S, n)
                assert decompose_nu(mu, nu) == rho


# --- properties -----------------------------------------------------------

def test_gs_monomial_recovers_permutation():
    for n in range(1, 7):
        for sigma in permutations(range(1, n + 1)):
            m = gs_monomial(sigma)
            assert index_permutation(m) == sigma
            lam = exponent_partition(m)
            assert lam == perm_descents(sigma).d
            assert partition_descents(lam, 1, 1, n) - {n} == perm_descents(sigma).des


def test_index_colored_permutation_of_basis_monomial():
    for n in range(1, 4):
        for k in range(1, n + 1):
            for r in (1, 2, 3):
                for e in enumerate_basis(n, k, r):
                    m = descent_monomial(e.g, e.I)
                    assert index_colored_permutation(m, r) == e.g
                    assert max(m) < r * k


def test_basis_exponent_partitions_are_r_descent_on_the_tail():
    for n in range(1, 5):
        for k in range(1, n + 1):
            for r in (1, 2):
                for e in enumerate_basis(n, k, r):
                    f = colored_descents(e.g).f
                    assert is_r_descent_partition(f, r)


def test_full_basis_count():
    for n in range(1, 5):
        for k in range(1, n + 1):
            for r in (1, 2):
                if (r * k) ** n > 5000:
                    continue
                assert len(enumerate_full_basis(n, k, r)) == (r * k) ** n


def test_full_basis_leading_monomials_are_the_box():
    for n, k, r in [(3, 2, 1), (3, 3, 1), (2, 2, 2), (3, 1, 2)]:
        leads = set()
        for e in enumerate_full_basis(n, k, r):
            lead = leading_product_monomial(descent_monomial(e.g, e.I), e.nu, r)
            assert straighten_step(lead, n, k, r) == e
            leads.add(lead)
        assert leads == set(product(range(r * k), repeat=n))


def test_prec_is_strict_partial_order_refining_dominance():
    for n in range(1, 5):
        for d in range(7):
            monos = [m for m in product(range(d + 1), repeat=n) if sum(m) == d]
            cmp = {(a, b): prec_compare(a, b) for a in monos for b in monos}
            for a in monos:
                for b in monos:
                    c = cmp[a, b]
                    assert (c is Comparison.EQUAL) == (a == b)
                    if c is Comparison.LESS:
                        assert cmp[b, a] is Comparison.GREATER
                        dom = dominance_compare(exponent_partition(a), exponent_partition(b))
                        assert dom in (Comparison.LESS, Comparison.EQUAL)
                    if dominance_compare(exponent_partition(a), exponent_partition(b)) is Comparison.LESS:
                        assert c is Comparison.LESS
            if len(monos) > 40:
                continue
            for a in monos:
                for b in monos:
                    if cmp[a, b] is Comparison.LESS:
                        for c in monos:
                            if cmp[b, c] is Comparison.LESS:
                                assert cmp[a, c] is Comparison.LESS


CONFIGS = [(n, k, r) for n in range(1, 6) for k in range(1, n + 1) for r in (1, 2)]


@pytest.mark.parametrize("n,k,r", CONFIGS)
def test_straighten_full_reexpands(n, k, r):
    rnd = random.Random(1000 * n + 10 * k + r)
    for _ in range(200):
        m = tuple(rnd.randrange(r * k) for _ in range(n))
        exp = straighten_full(m, n, k, r)
        assert reexpand(exp) == {m: 1}
        for e in exp:
            check_element(e, n, k, r)
            lead = leading_product_monomial(descent_monomial(e.g, e.I), e.nu, r)
            assert lead == m or prec_compare(lead, m) is Comparison.LESS


@pytest.mark.parametrize("n,k,r", [(n, k, r) for n in range(1, 5) for k in range(1, n + 1) for r in (1, 2)
                                   if not (r == 2 and n == 4 and k > 2)])
def test_project_to_quotient_matches_oracle(n, k, r):
    quotient = build_quotient(n, k, r)
    rnd = random.Random(77 * n + k + r)
    for _ in range(40):
        m = tuple(rnd.randrange(r * k) for _ in range(n))
        proj = project_to_quotient(m, n, k, r)
        image = {}
        for e, c in proj.items():
            b = descent_monomial(e.g, e.I)
            image[b] = image.get(b, 0) + c
            assert dominance_compare(exponent_partition(b), exponent_partition(m)) in (Comparison.LESS, Comparison.EQUAL)
        assert quotient.reduce(image) == quotient.reduce({m: 1})


def test_project_descent_monomial_is_itself():
    for e in enumerate_basis(3, 2, 2):
        assert project_to_quotient(descent_monomial(e.g, e.I), 3, 2, 2) == {e: 1}


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=6), st.lists(st.integers(0, 6), max_size=6),
       st.integers(1, 3))
def test_decompose_nu_re_adds(mu, nu, r):
    mu = tuple(sorted(mu, reverse=True))
    nu = tuple(sorted(nu, reverse=True))
    rho = decompose_nu(mu, nu, r)
    if rho is not None:
        length = len(rho)
        padded = lambda p: tuple(p) + (0,) * (length - len(p))
        assert tuple(a + r * b for a, b in zip(padded(nu), rho)) == padded(mu)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 3), st.data())
def test_decompose_by_descent_subset_reassembles(n, r, data):
    k = data.draw(st.integers(1, n))
    mu = tuple(sorted(data.draw(st.lists(st.integers(0, r * k - 1), min_size=n, max_size=n)), reverse=True))
    allowed = sorted(partition_descents(mu, r, n - k + 1, n) - {n})
    S = {s for s in allowed if data.draw(st.booleans())}
    try:
        nu, rho = decompose_by_descent_subset(mu, S, n, k, r)
    except ValueError:
        return
    assert tuple(a + r * b for a, b in zip(nu, rho)) == mu
    assert len(set(rho[:n - k + 1])) == 1
    assert partition_descents(nu, r, n - k + 1, n) == S
    assert all(a % r == b % r for a, b in zip(nu, mu))
