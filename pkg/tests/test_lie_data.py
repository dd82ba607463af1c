import pytest

from yangian_braid.lie_data import (
    ALL_FAMILIES, Family, LieDataError, LieDatum, LieType, braid_length,
    make_lie_datum, numbering_candidates, parse_lie_type, relabel, select_numbering,
)

EXCEPTIONAL = ["E6", "E7", "E8", "F4", "G2"]


def test_g2_matrix():
    d = make_lie_datum("G2")
    assert d.cartan == ((2, -1), (-3, 2))
    assert d.symmetrizers == (3, 1)
    assert d.to_json() == {"family": "G2", "rank": 2, "cartan": [[2, -1], [-3, 2]],
                           "d": [3, 1], "numbering": "bourbaki"}


def test_bc_double_bonds():
    b, c = make_lie_datum("B", 3), make_lie_datum("C", 3)
    assert b.symmetrizers == (2, 2, 1) and b.a(3, 2) == -2 and b.a(2, 3) == -1
    assert c.symmetrizers == (1, 1, 2) and c.a(2, 3) == -2 and c.a(3, 2) == -1


def test_d_branch_and_e_edges():
    d5 = make_lie_datum("D5")
    assert d5.a(5, 3) == -1 and d5.a(5, 4) == 0 and d5.a(4, 3) == -1
    e6 = make_lie_datum("E6")
    assert e6.a(1, 3) == -1 and e6.a(2, 4) == -1 and e6.a(1, 2) == 0


def test_f4_long_short():
    f = make_lie_datum("F4")
    assert f.symmetrizers == (2, 2, 1, 1)
    assert f.a(3, 2) == -2 and f.a(2, 3) == -1


@pytest.mark.parametrize("name", ["A1", "A5", "B2", "B6", "C4", "D4", "D7"] + EXCEPTIONAL)
def test_symmetrized_and_valid(name):
    d = make_lie_datum(name)
    for i in d.nodes:
        assert d.a(i, i) == 2
        for j in d.nodes:
            assert d.d(i) * d.a(i, j) == d.d(j) * d.a(j, i)
            assert (d.a(i, j) == 0) == (d.a(j, i) == 0)


def test_parse_lie_type():
    assert parse_lie_type("a", 3) == LieType(Family.A, 3)
    assert parse_lie_type("C4") == LieType(Family.C, 4)
    assert parse_lie_type("E8").rank == 8
    for bad in [("E",), ("B", 1), ("D3",), ("H3",), ("E9",), ("A",)]:
        with pytest.raises(LieDataError):
            parse_lie_type(*bad)
    with pytest.raises(LieDataError):
        parse_lie_type("A3", 4)


def test_rejects_bad_matrix():
    t = LieType(Family.A, 2)
    with pytest.raises(LieDataError):
        LieDatum(t, ((2, -1), (0, 2)), (1, 1))
    with pytest.raises(LieDataError):
        LieDatum(t, ((2, -2), (-1, 2)), (1, 1))
    with pytest.raises(LieDataError):
        LieDatum(t, ((2, -1), (-1, 2)), (2, 2))


def test_braid_lengths():
    assert braid_length(make_lie_datum("A2"), 1, 2) == 3
    assert braid_length(make_lie_datum("B2"), 1, 2) == 4
    assert braid_length(make_lie_datum("G2"), 1, 2) == 6
    assert braid_length(make_lie_datum("A3"), 1, 3) == 2


def test_relabel_roundtrip():
    d = make_lie_datum("F4")
    r = relabel(d, (4, 3, 2, 1), "reversed")
    assert r.a(1, 2) == d.a(4, 3) and r.symmetrizers == (1, 1, 2, 2)


@pytest.mark.parametrize("family", [f for f in ALL_FAMILIES if f.value in EXCEPTIONAL]
                         + [("C", 4), ("D", 5)])
def test_select_numbering_picks_bourbaki(family):
    if isinstance(family, tuple):
        datum, report, reports = select_numbering(*family)
    else:
        datum, report, reports = select_numbering(family.value)
    assert datum.numbering_tag == "bourbaki"
    assert report.word_reduced
    assert set(reports) == set(numbering_candidates(datum.lie_type))


def test_select_numbering_strict_reports_mismatch():
    with pytest.raises(LieDataError):
        select_numbering("F4", strict=True)
