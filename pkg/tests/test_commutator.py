import numpy as np
import pytest
from hypothesis import given, strategies as st

from semicomm.commutator import (
    centralizes,
    commutator,
    decode_cubes,
    encode_cubes,
    evaluate_word,
    generate_cube_set,
    oracle_centralizes_by_words,
)
from semicomm.congruence import Congruence, all_congruences, meet, parse_partition
from semicomm.constructors import builtin_algebra, paper_S2
from semicomm.errors import AlgebraMismatch, CubeSetTooLarge, InputError, OracleBudgetExceeded

from conftest import SMALL, small_semigroups

RHO = "{0,2|1,3|4,6|5,7}"


@pytest.fixture(scope="module")
def S2():
    S = paper_S2()
    one = Congruence.one(8)
    return S, one, parse_partition(RHO)


def test_S2_binary(S2):
    S, one, rho = S2
    assert commutator(S, [one, one]) == rho
    assert commutator(S, [one, rho]).is_zero()


def test_S2_ternary_vanishes(S2):
    S, one, _ = S2
    assert commutator(S, [one, one, one]).is_zero()


def test_S2_centralizes(S2):
    S, one, rho = S2
    zero = Congruence.zero(8)
    assert centralizes(S, [one, one], rho)
    assert centralizes(S, [one, rho], zero)
    res = centralizes(S, [one, one], zero)
    assert not res
    w = res.witness
    # premise row equal, conclusion row split
    assert w[0] == w[2] and w[1] != w[3]


def test_S2_cube_set_sizes(S2):
    S, one, _ = S2
    assert len(generate_cube_set(S, [one, one])) == 576
    assert len(generate_cube_set(S, [one, one, one])) == 8192


def test_S3_commutators_mod_A3():
    S = builtin_algebra("S3")
    one = Congruence.one(6)
    c2 = commutator(S, [one, one])
    c3 = commutator(S, [one, one, one])
    assert c2 == c3
    assert c2.num_classes == 2
    assert str(c2) == "{0,1,3|2,4,5}"


def test_zero_argument_gives_zero():
    S = paper_S2()
    zero, one = Congruence.zero(8), Congruence.one(8)
    assert commutator(S, [zero, one]).is_zero()
    assert commutator(S, [one, zero]).is_zero()


def test_cube_codes_roundtrip():
    cubes = np.array([[0, 1, 2, 3], [3, 3, 0, 1]])
    assert (decode_cubes(encode_cubes(cubes, 4), 4, 2) == cubes).all()


def test_budget_errors():
    S = paper_S2()
    one = Congruence.one(8)
    with pytest.raises(CubeSetTooLarge):
        generate_cube_set(S, [one, one], cap=10)
    with pytest.raises(CubeSetTooLarge):
        generate_cube_set(S, [one] * 5)
    with pytest.raises(OracleBudgetExceeded):
        oracle_centralizes_by_words(S, [one, one], Congruence.zero(8))


def test_input_errors():
    S = paper_S2()
    with pytest.raises(InputError):
        commutator(S, [Congruence.one(8)])
    with pytest.raises(AlgebraMismatch):
        commutator(S, [Congruence.one(8), Congruence.one(3)])


def test_workers_do_not_change_cube_set():
    S = builtin_algebra("S3")
    one = Congruence.one(6)
    a = generate_cube_set(S, [one, one, one])
    b = generate_cube_set(S, [one, one, one], workers=3)
    assert np.array_equal(a.codes, b.codes)


def test_evaluate_word():
    S = paper_S2()
    assert evaluate_word(S, [0, "x", "x"], {"x": 7}) == S.product(0, 7, 7)


@given(small_semigroups, st.data())
def test_below_meet(S, data):
    L = list(all_congruences(S))
    a, b = data.draw(st.sampled_from(L)), data.draw(st.sampled_from(L))
    assert commutator(S, [a, b]).leq(meet(a, b))


@given(small_semigroups, st.data())
def test_commutator_is_least_centralizing(S, data):
    L = list(all_congruences(S))
    a, b = data.draw(st.sampled_from(L)), data.draw(st.sampled_from(L))
    c = commutator(S, [a, b])
    assert centralizes(S, [a, b], c)
    for d in L:
        if centralizes(S, [a, b], d):
            assert c.leq(d)


@given(small_semigroups, st.data())
def test_ternary_below_binary(S, data):
    L = list(all_congruences(S))
    a1, a2, a3 = (data.draw(st.sampled_from(L)) for _ in range(3))
    assert commutator(S, [a1, a2, a3]).leq(commutator(S, [a2, a3]))


@given(st.sampled_from([S for S in SMALL if S.order == 3]), st.data())
def test_engine_matches_word_oracle(S, data):
    L = list(all_congruences(S))
    a, b, d = (data.draw(st.sampled_from(L)) for _ in range(3))
    assert centralizes(S, [a, b], d).holds == oracle_centralizes_by_words(S, [a, b], d)
