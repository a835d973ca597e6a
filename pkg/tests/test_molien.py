import itertools
import re
from fractions import Fraction
from math import factorial

import pytest

from invhilb._guards import EnumerationLimitError
from invhilb.molien import (
    ClassDataError,
    ClassRecord,
    GammaSpec,
    GroupClassData,
    Permutation,
    carlitz_coefficient,
    f_maj,
    hilbert_double_classsum,
    hilbert_double_general,
    hilbert_double_maj,
    hilbert_double_schur,
    hilbert_gamma,
    hilbert_single,
    hironaka_stats,
    major_index,
    molien_double_general,
    schur_analogue_general,
    symmetric_group_class_data,
    three_route_equal,
)
from invhilb.partitions import enumerate_partitions
from invhilb.series import DensePoly, FactoredSeries, TruncatedSeries, expand, factored_equal, phi


def _naive_fmaj(n):
    # direct definition: descents of sigma and of its inverse, computed separately
    counts = {}
    for images in itertools.permutations(range(1, n + 1)):
        s = Permutation(images)
        inv = s.inverse()
        d = sum(i for i in range(1, n) if s(i) > s(i + 1)) + sum(i for i in range(1, n) if inv(i) > inv(i + 1))
        counts[d] = counts.get(d, 0) + 1
    return DensePoly([counts.get(d, 0) for d in range(max(counts) + 1)])


def test_permutation_basics():
    s = Permutation((2, 3, 1))
    assert s(1) == 2 and s.inverse()(2) == 1
    assert s.compose(s.inverse()) == Permutation.identity(3)
    assert s.cycle_type().parts == (3,)
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_major_index_examples():
    assert major_index(Permutation.identity(4)) == 0
    assert major_index(Permutation((2, 1))) == 1
    assert major_index(Permutation((3, 1, 2))) == 1
    assert major_index(Permutation((3, 2, 1))) == 3
    assert major_index(Permutation((4, 3, 2, 1))) == 6


def test_fmaj_small():
    assert f_maj(1) == DensePoly([1])
    assert f_maj(2) == DensePoly([1, 0, 1])
    assert f_maj(3) == DensePoly([1, 0, 1, 2, 1, 0, 1])


@pytest.mark.parametrize("n", range(1, 8))
def test_fmaj_matches_naive(n):
    assert f_maj(n) == _naive_fmaj(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_fmaj_invariants(n):
    f = f_maj(n)
    assert f(1) == factorial(n)
    assert f.degree == n * (n - 1)
    assert f.is_palindromic()
    assert all(c >= 0 for c in f.coeffs)


def test_fmaj_jobs_deterministic():
    for n in (5, 7, 8):
        assert f_maj(n, jobs=1).coeffs == f_maj(n, jobs=4).coeffs


def test_fmaj_guard(monkeypatch):
    with pytest.raises(EnumerationLimitError):
        f_maj(11)
    with pytest.raises(ValueError):
        f_maj(0)
    monkeypatch.setenv("INVHILB_MAX_ENUM", "100")
    with pytest.raises(EnumerationLimitError):
        f_maj(6)


def test_known_small_numerators():
    expected = {
        2: [1, 0, 1],
        3: [1, 0, 1, 2, 1, 0, 1],
        4: [1, 0, 1, 2, 4, 2, 4, 2, 4, 2, 1, 0, 1],
    }
    for n, num in expected.items():
        for route in (hilbert_double_classsum, hilbert_double_schur, hilbert_double_maj):
            h = route(n)
            assert h.numerator == DensePoly(num)
            assert h.denominator_poly() == phi(n) ** 2


@pytest.mark.parametrize("n", range(1, 7))
def test_three_routes(n):
    assert three_route_equal(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_single_series_counts_partitions(n):
    h = hilbert_single(n)
    assert factored_equal(h, FactoredSeries([1], {i: 1 for i in range(1, n + 1)}))
    # coefficient of t^d counts partitions of d into at most n parts
    coeffs = expand(h, 12).coeffs
    for d in range(13):
        assert coeffs[d] == sum(1 for lam in enumerate_partitions(d) if lam.length <= n)
    assert all(a <= b for a, b in zip(coeffs, coeffs[1:]))


def test_single_series_bounds():
    with pytest.raises(ValueError):
        hilbert_single(0)
    with pytest.raises(ValueError):
        hilbert_double_classsum(11)


def test_double_series_n2_by_hand():
    # the average of 1/(1-t)^4 and 1/(1-t^2)^2
    h = expand(hilbert_double_classsum(2), 10)
    direct = (
        expand(FactoredSeries([1], {1: 4}), 10) * Fraction(1, 2) + expand(FactoredSeries([1], {2: 2}), 10) * Fraction(1, 2)
    )
    assert h == direct


def test_carlitz_small():
    assert carlitz_coefficient(0, 5) == TruncatedSeries.one(5)
    assert carlitz_coefficient(1, 6) == expand(FactoredSeries([1], {1: 2}), 6)


@pytest.mark.parametrize("n", range(0, 6))
def test_carlitz_matches_maj(n):
    rhs = expand(hilbert_double_maj(n), 30) if n else TruncatedSeries.one(30)
    assert carlitz_coefficient(n, 30) == rhs


def test_gamma_spec():
    g = GammaSpec.parse("2,3")
    assert g.ns == (2, 3) and g.k == 2 and g.num_vars == 5 and g.group_order() == 12
    with pytest.raises(ValueError):
        GammaSpec.parse("2,0")
    with pytest.raises(ValueError):
        GammaSpec.parse("a")
    with pytest.raises(ValueError):
        GammaSpec(())


def test_hilbert_gamma_products():
    h22 = hilbert_gamma(GammaSpec((2, 2)))
    assert factored_equal(h22, FactoredSeries(DensePoly([1, 0, 1]) ** 2, {1: 4, 2: 4}))
    h23 = hilbert_gamma(GammaSpec((2, 3)))
    assert h23.numerator == f_maj(2) * f_maj(3)
    for route in "abc":
        assert factored_equal(hilbert_gamma(GammaSpec((2, 3)), route=route), h23)
    with pytest.raises(ValueError):
        hilbert_gamma(GammaSpec((2,)), route="z")


def test_hironaka_stats():
    st = hironaka_stats(3)
    assert st.secondary_count == 6
    assert st.max_secondary_degree == 6
    assert st.degree_histogram == (1, 0, 1, 2, 1, 0, 1)
    assert hironaka_stats(4).secondary_count == 24


def _c2_sign():
    return GroupClassData(
        2,
        (ClassRecord(1, {1: 1}), ClassRecord(1, {2: 1, 1: -1})),
        ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(-1))),
    )


def test_c2_general():
    data = _c2_sign()
    data.validate()
    # trivial character: invariants of t -> -t in one variable
    assert schur_analogue_general(data, 0, 6) == TruncatedSeries([1, 0, 1, 0, 1, 0, 1], 6)
    assert schur_analogue_general(data, 1, 6) == TruncatedSeries([0, 1, 0, 1, 0, 1, 0], 6)
    assert hilbert_double_general(data, 6) == TruncatedSeries([1, 0, 3, 0, 5, 0, 7], 6)
    assert hilbert_double_general(data, 6) == molien_double_general(data, 6)


@pytest.mark.parametrize("n", range(1, 6))
def test_general_specializes_to_symmetric_group(n):
    data = symmetric_group_class_data(n)
    order = n * (n - 1) + 10
    assert hilbert_double_general(data, order) == expand(hilbert_double_classsum(n), order)
    assert hilbert_double_general(data, order) == molien_double_general(data, order)


@pytest.mark.parametrize(
    "mutate,message",
    [
        (lambda d: GroupClassData(3, d.classes, d.characters), "class sizes must sum to |G|"),
        (lambda d: GroupClassData(2, (ClassRecord(1, {1: 1}), ClassRecord(1, {1: 2})), d.characters), "same positive dim"),
        (lambda d: GroupClassData(2, d.classes, d.characters[:1]), "square"),
        (
            lambda d: GroupClassData(2, d.classes, ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(1)))),
            "orthogonality",
        ),
    ],
)
def test_class_data_validation(mutate, message):
    with pytest.raises(ClassDataError, match=re.escape(message)):
        mutate(_c2_sign()).validate()


def test_class_size_must_divide_order():
    data = GroupClassData(
        5,
        (ClassRecord(2, {1: 1}), ClassRecord(3, {1: 1})),
        ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(-1))),
    )
    with pytest.raises(ClassDataError, match="divide"):
        data.validate()


def test_hironaka_more_sizes():
    st2 = hironaka_stats(2)
    assert (st2.secondary_count, st2.max_secondary_degree, st2.degree_histogram) == (2, 2, (1, 0, 1))
    st5 = hironaka_stats(5)
    assert (st5.secondary_count, st5.max_secondary_degree) == (120, 20)


@pytest.mark.parametrize("n", range(1, 6))
def test_trivial_character_gives_single_series(n):
    data = symmetric_group_class_data(n)
    assert schur_analogue_general(data, 0, 15) == expand(hilbert_single(n), 15)


def test_c2_matches_parity_count():
    # x^a y^b is invariant under (x, y) -> (-x, -y) iff a + b is even
    order = 12
    counts = [sum(1 for a in range(d + 1) if d % 2 == 0) for d in range(order + 1)]
    assert hilbert_double_general(_c2_sign(), order) == TruncatedSeries(counts, order)
