import random
from fractions import Fraction

import pytest

from yangian_braid.braid_action import (
    apply_generator, apply_word, braid_relation_words, check_automorphism,
    check_braid_relation, neighbor_shifts, suffix_image, suffix_images,
)
from yangian_braid.lie_data import make_lie_datum
from yangian_braid.ratfun import (
    fundamental_tuple, identity_tuple, invert, param_point, random_tuple,
)
from yangian_braid.weyl import longest_word

a = param_point("a")


def pi(d, i, c=0):
    return fundamental_tuple(d, i, param_point("a", c))


def test_a1_generator():
    d = make_lie_datum("A1")
    out = apply_generator(d, 1, pi(d, 1))
    assert out == invert(pi(d, 1, 1))
    # (T1 pi)(u+1) / (T1 pi)(u) == pi(u-1) / pi(u)
    f = out[1]
    assert f.shift(-1) * f.inverse() == pi(d, 1)[1].shift(1) * pi(d, 1)[1].inverse()


def test_g2_second_generator():
    d = make_lie_datum("G2")
    assert apply_generator(d, 2, pi(d, 2)) == pi(d, 1, Fraction(3, 2)) * invert(pi(d, 2, 1))


def test_g2_word_one():
    d = make_lie_datum("G2")
    expected = (invert(pi(d, 1, 3)) * pi(d, 2, Fraction(3, 2)) * pi(d, 2, Fraction(1, 2))
                * pi(d, 2, Fraction(-1, 2)))
    assert apply_word(d, [1], pi(d, 1)) == expected


def test_other_generators_fix_fundamental():
    d = make_lie_datum("E7")
    for i in d.nodes:
        for m in d.nodes:
            if m != i:
                assert apply_generator(d, m, pi(d, i)) == pi(d, i)
    d = make_lie_datum("A2")
    assert apply_word(d, [2], pi(d, 1)) == pi(d, 1)


def test_empty_word_and_identity():
    d = make_lie_datum("F4")
    p = random_tuple(d, random.Random(1))
    assert apply_word(d, [], p) == p
    assert apply_generator(d, 3, identity_tuple(d)).is_identity


def test_node_out_of_range():
    d = make_lie_datum("G2")
    with pytest.raises(ValueError):
        apply_generator(d, 3, identity_tuple(d))


def test_neighbor_shift_constants():
    assert neighbor_shifts(make_lie_datum("B3"), 3, 2) == (1, 0)
    assert neighbor_shifts(make_lie_datum("B3"), 1, 2) == (1,)
    assert neighbor_shifts(make_lie_datum("G2"), 2, 1) == (Fraction(3, 2), Fraction(1, 2), Fraction(-1, 2))
    assert neighbor_shifts(make_lie_datum("G2"), 1, 2) == (Fraction(3, 2),)
    assert neighbor_shifts(make_lie_datum("A3"), 1, 3) == ()


def test_relation_words():
    assert braid_relation_words(make_lie_datum("B2"), 1, 2) == ((1, 2, 1, 2), (2, 1, 2, 1))


@pytest.mark.parametrize("name", ["A2", "B2", "C3", "D4", "G2"])
def test_relations_and_automorphism(name):
    d = make_lie_datum(name)
    rng = random.Random(7)
    for _ in range(30):
        p, q = random_tuple(d, rng), random_tuple(d, rng)
        for i in d.nodes:
            assert check_automorphism(d, i, p, q)
            assert check_automorphism(d, i, p, identity_tuple(d))
            for j in d.nodes:
                if i != j:
                    assert check_braid_relation(d, i, j, p)


def test_automorphism_on_square():
    d = make_lie_datum("C2")
    p = pi(d, 2)
    assert apply_generator(d, 2, p * p) == apply_generator(d, 2, p) * apply_generator(d, 2, p)


def test_suffix_images_match_direct():
    d = make_lie_datum("F4")
    w = longest_word(d)
    p = pi(d, 3)
    seen = []
    for j, r, img in suffix_images(d, w, p):
        assert r == w[j - 1]
        assert img == suffix_image(d, w, j, p)
        seen.append(j)
    assert seen == list(range(len(w), 0, -1))


def test_g2_longest_words_agree():
    d = make_lie_datum("G2")
    rng = random.Random(11)
    for _ in range(200):
        p = random_tuple(d, rng)
        assert apply_word(d, [2, 1, 2, 1, 2, 1], p) == apply_word(d, [1, 2, 1, 2, 1, 2], p)
