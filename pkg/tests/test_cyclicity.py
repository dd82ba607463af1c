from fractions import Fraction

import pytest

from yangian_braid.cyclicity import (
    CyclicityError, CyclicitySet, KrFactor, Verdict, check_drinfeld_tuple,
    check_tensor, compute_tables, forbidden_differences, fundamental_set,
    general_position, kr_set, kr_set_direct, local_weyl_factors, parse_factors,
    weyl_module_order,
)
from yangian_braid.lie_data import make_lie_datum
from yangian_braid.ratfun import (
    FactoredRational, Gaussian, param_point, point, tuple_from_roots,
)
from yangian_braid.weyl import braid_equivalent_words, longest_word


def vals(s):
    return [str(v) for v in s]


def roots(*xs):
    return FactoredRational.from_roots([point(x) for x in xs])


def test_general_position():
    assert not general_position(roots(0), roots(1))
    assert general_position(roots(0), roots(2))
    assert general_position(FactoredRational(), roots(7))
    with pytest.raises(CyclicityError):
        general_position(FactoredRational.from_roots([param_point("a1")]), roots(1))
    with pytest.raises(CyclicityError):
        general_position(roots(0).inverse(), roots(1))


def test_forbidden_differences():
    p = FactoredRational.from_roots([param_point("a1")])
    q = FactoredRational.from_roots([param_point("a2")])
    assert forbidden_differences(p, q, 1) == {Gaussian(1)}
    p2 = FactoredRational.from_roots([param_point("a1"), param_point("a1", 1)])
    assert forbidden_differences(p2, q, 1) == {Gaussian(1), Gaussian(2)}
    half = Fraction(1, 2)
    p3 = FactoredRational.from_roots([point("3/2", "a1", half)])
    q3 = FactoredRational.from_roots([point(0, "a2", half)])
    assert forbidden_differences(p3, q3, 2) == {Gaussian(5)}
    with pytest.raises(CyclicityError):
        forbidden_differences(p3, q3, 1)


def test_forbidden_numeric_origin():
    p = FactoredRational.from_roots([point(7)])
    q = FactoredRational.from_roots([param_point("a2")])
    assert forbidden_differences(p, q, 1, origin=4) == {Gaussian(4)}
    with pytest.raises(CyclicityError):
        forbidden_differences(p, q, 1)


def test_small_sets():
    a1 = make_lie_datum("A1")
    assert vals(fundamental_set(a1, [1], 1, 1)) == ["1"]
    e6 = make_lie_datum("E6")
    assert vals(fundamental_set(e6, longest_word(e6), 1, 1)) == ["1", "4"]
    g2 = make_lie_datum("G2")
    assert vals(fundamental_set(g2, [2, 1, 2, 1, 2, 1], 2, 1)) == ["9/2", "13/2"]


def test_provenance_witnesses():
    g2 = make_lie_datum("G2")
    s = fundamental_set(g2, longest_word(g2), 2, 2)
    for v in s:
        assert s.provenance[v]
        for j, _root in s.provenance[v]:
            assert longest_word(g2)[j - 1] == 2


def test_kr_sets():
    a1 = make_lie_datum("A1")
    assert vals(kr_set(a1, [1], 1, 2, 1, 1)) == ["1", "2"]
    assert kr_set(a1, [1], 1, 1, 1, 1) == fundamental_set(a1, [1], 1, 1)
    g2 = make_lie_datum("G2")
    assert vals(kr_set(g2, longest_word(g2), 2, 1, 1, 2)) == ["7/2", "9/2", "11/2", "13/2"]
    with pytest.raises(CyclicityError):
        kr_set(a1, [1], 1, 0, 1, 1)


@pytest.mark.parametrize("name", ["B3", "F4", "E6"])
def test_shift_invariance(name):
    d = make_lie_datum(name)
    w = longest_word(d)
    for b1 in d.nodes:
        for b2 in d.nodes:
            ref = fundamental_set(d, w, b1, b2)
            for c in [Fraction(3, 2), Fraction(-7), Gaussian(1, 2)]:
                assert fundamental_set(d, w, b1, b2, base=c) == ref


@pytest.mark.parametrize("name", ["E6", "E7", "E8"])
def test_simply_laced_symmetry(name):
    d = make_lie_datum(name)
    t = compute_tables(d, longest_word(d))
    assert all(t[b1, b2] == t[b2, b1] for b1, b2 in t)


@pytest.mark.parametrize("name", ["A4", "B4", "C3", "D4", "F4", "G2"])
def test_word_independence(name):
    # the sets are not a priori word-independent; these samples all agree
    d = make_lie_datum(name)
    w = longest_word(d)
    base = compute_tables(d, w)
    for other in braid_equivalent_words(d, w, budget=6)[1:]:
        assert compute_tables(d, other) == base


def test_denominators_divide_two():
    for name in ["A5", "B5", "C5", "D6", "E8", "F4", "G2"]:
        d = make_lie_datum(name)
        for s in compute_tables(d, longest_word(d)).values():
            assert all(2 % v.denominator == 0 for v in s)


def test_unnormalized_variant_differs_only_off_simply_laced():
    e6, g2 = make_lie_datum("E6"), make_lie_datum("G2")
    w = longest_word(e6)
    assert fundamental_set(e6, w, 2, 3, normalize=False) == fundamental_set(e6, w, 2, 3)
    w = longest_word(g2)
    assert fundamental_set(g2, w, 2, 1, normalize=False) != fundamental_set(g2, w, 2, 1)


def test_check_tensor():
    a1 = make_lie_datum("A1")
    assert check_tensor(a1, [1], [KrFactor(1, 0)]).verdict is Verdict.CYCLIC
    c = check_tensor(a1, [1], [KrFactor(1, 0), KrFactor(1, 5)])
    assert c.verdict is Verdict.CYCLIC and not c.pair_reports[0].member
    u = check_tensor(a1, [1], [KrFactor(1, 0), KrFactor(1, 1)])
    assert u.verdict is Verdict.UNKNOWN
    assert u.pair_reports[0].difference == 1
    with pytest.raises(CyclicityError):
        check_tensor(a1, [1], [])
    with pytest.raises(CyclicityError):
        KrFactor(1, 0, 0)


def test_three_factors_pairs():
    g2 = make_lie_datum("G2")
    c = check_tensor(g2, longest_word(g2), parse_factors("1:0:1,2:1/2+i:2,1:3"))
    assert [(r.m, r.n) for r in c.pair_reports] == [(1, 2), (1, 3), (2, 3)]
    assert c.verdict is Verdict.UNKNOWN  # 3 - 0 lies in S(1,1)


def test_parse_factors_errors():
    assert parse_factors("2:3/2")[0] == KrFactor(2, Fraction(3, 2), 1)
    for bad in ["1", "x:0:1", "1:0:1:2"]:
        with pytest.raises(CyclicityError):
            parse_factors(bad)


def test_weyl_module_order():
    a2 = make_lie_datum("A2")
    p = tuple_from_roots(a2, {1: {point(0): 1, point(1): 1}})
    assert weyl_module_order(a2, p) == [(1, Gaussian(1)), (1, Gaussian(0))]
    p = tuple_from_roots(a2, {1: {point("2+i"): 1}, 2: {point(2): 1}})
    assert weyl_module_order(a2, p) == [(1, Gaussian(2, 1)), (2, Gaussian(2))]
    p = tuple_from_roots(a2, {2: {point(5): 2}})
    assert weyl_module_order(a2, p) == [(2, Gaussian(5))] * 2
    with pytest.raises(CyclicityError):
        weyl_module_order(a2, tuple_from_roots(a2, {1: {param_point("a"): 1}}))


def test_drinfeld_tuple_certificate():
    a1 = make_lie_datum("A1")
    p = tuple_from_roots(a1, {1: {point(0): 1, point(1): 1}})
    assert [str(f) for f in local_weyl_factors(a1, p)] == ["1:1:1", "1:0:1"]
    # difference -1 is not in {1}
    assert check_drinfeld_tuple(a1, [1], p).verdict is Verdict.CYCLIC


def test_cyclicity_set_helpers():
    s = CyclicitySet.from_witnesses({Gaussian(1): [(1, "x")], Gaussian(Fraction(1, 2)): []})
    assert vals(s) == ["1/2", "1"] and Fraction(1, 2) in s and 3 not in s
    assert vals(s.shifted(1)) == ["3/2", "2"]
    assert vals(s.union(s.shifted(1))) == ["1/2", "1", "3/2", "2"]
    assert s.to_json()["provenance"]["1"] == [{"j": 1, "root": "x"}]
