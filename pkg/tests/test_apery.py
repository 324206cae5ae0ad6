"""Binomial-sum sequences, wrappers and the recurrence engine."""

import pytest

from cmforms import apery
from cmforms.apery import (
    MonicTriple,
    RecurrenceTriple,
    apery_a,
    apery_b,
    fit_monic_triple,
    fit_triple,
    monic_recurrence_check,
    recurrence_check,
    seq_c,
    seq_d,
    sequence,
    sequence_value_mod,
    u_m,
    u_m_mod,
)

A_PREFIX = [1, 3, 19, 147, 1251, 11253]
B_PREFIX = [1, 5, 73, 1445, 33001, 819005]
C_PREFIX = [1, 3, 15, 93, 639, 4653]
D_PREFIX = [1, 2, 10, 56, 346, 2252]


def test_sequence_prefixes():
    assert [apery_a(n) for n in range(6)] == A_PREFIX
    assert [apery_b(n) for n in range(6)] == B_PREFIX
    assert [seq_c(n) for n in range(6)] == C_PREFIX
    assert [seq_d(n) for n in range(6)] == D_PREFIX


def test_sequence_object():
    s = sequence("A", 5)
    assert s.name == "A" and list(s.terms) == A_PREFIX
    with pytest.raises(ValueError):
        sequence("Z", 5)


def test_wrappers_vanish_at_even_indices():
    for m_tag in (2, 3, 4):
        assert all(u_m(m_tag, n) == 0 for n in (2, 4, 6, 10))


def test_wrapper_values():
    assert [u_m(2, n) for n in (1, 3, 5, 7, 9)] == [1, -2, 10, -56, 346]
    assert [u_m(3, n) for n in (1, 3, 5, 7, 9)] == [1, 3, 15, 93, 639]
    assert [u_m(4, n) for n in (1, 3, 5, 7, 9)] == [1, -3, 19, -147, 1251]


def test_wrapper_mod_agrees_with_exact():
    for m_tag in (2, 3, 4):
        for n in (1, 3, 9, 25, 75):
            for p, q in ((5, 2), (13, 1), (97, 3)):
                assert u_m_mod(m_tag, n, p, q) == u_m(m_tag, n) % p**q


def test_modular_path_agrees_with_exact_above_crossover():
    # straddle the exact/modular crossover index
    for n in (apery._EXACT_LIMIT + 1, apery._EXACT_LIMIT + 47):
        for name in ("A", "C", "D"):
            exact = apery._SEQ[name](n)
            for p, q in ((7, 2), (199, 1)):
                assert sequence_value_mod(name, n, p, q) == exact % p**q


def test_recurrence_check_for_a():
    s = sequence("A", 51)
    assert recurrence_check(s, RecurrenceTriple(11, -1, -3), 50)
    assert not recurrence_check(s, RecurrenceTriple(11, -1, -4), 50)


def test_fit_triple_recovers_a():
    assert fit_triple(sequence("A", 20)) == RecurrenceTriple(11, -1, -3)


def test_fit_triple_has_no_solution_for_c_and_d():
    # no integral triple exists in this normalization (mod 3 and mod 2
    # obstructions in the n = 1 equation)
    assert fit_triple(sequence("C", 20)) is None
    assert fit_triple(sequence("D", 20)) is None


def test_monic_fits():
    assert fit_monic_triple(sequence("A", 20)) == MonicTriple(11, 3, -1)
    assert fit_monic_triple(sequence("C", 20)) == MonicTriple(10, 3, 9)
    assert fit_monic_triple(sequence("D", 20)) == MonicTriple(7, 2, -8)


def test_monic_check_validates_deep():
    for name, triple in (
        ("A", MonicTriple(11, 3, -1)),
        ("C", MonicTriple(10, 3, 9)),
        ("D", MonicTriple(7, 2, -8)),
    ):
        assert monic_recurrence_check(sequence(name, 101), triple, 100)


def test_input_validation():
    with pytest.raises(ValueError):
        apery_a(-1)
    with pytest.raises(ValueError):
        u_m(5, 1)
    with pytest.raises(ValueError):
        u_m(2, 0)
    with pytest.raises(ValueError):
        RecurrenceTriple(1, 0, 1)
