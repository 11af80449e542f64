from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multicores.errors import LevelMismatchError, ParseError, PreconditionError, SizeGuardError
from multicores.multicore import (
    Datum,
    DatumSet,
    Multipartition,
    format_datum,
    format_datum_set,
    format_multipartition,
    is_core,
    is_core_bipartition,
    is_core_bruteforce,
    mp_content,
    multipartitions_of,
    multipartitions_up_to,
    parse_datum,
    parse_datum_set,
    parse_multipartition,
    sandwich_partners,
    weight,
)
from multicores.partitions import EMPTY, Partition, s_cores_from_s_sets, s_set
from multicores.weyl_orbit import s_cores_up_to

from strategies import data, multipartitions

P = Partition
M = Multipartition.of
EXAMPLE = M((2,), (4, 1, 1), (1, 1))
LARGEST = M((1, 1, 1), (3, 3, 1, 1, 1), (2, 2))


def test_text_forms():
    assert parse_multipartition("[2]|[4,1,1]|[1,1]") == EXAMPLE
    assert format_multipartition(EXAMPLE) == "[2]|[4,1,1]|[1,1]"
    assert parse_datum("0:-1,2") == Datum(0, (-1, 2))
    assert format_datum(Datum(4, (0, 2, 1))) == "4:0,2,1"
    T = parse_datum_set("0:1,3,0;0:3,0,1")
    assert format_datum_set(T) == "0:1,3,0;0:3,0,1"
    assert T.level == 3


@pytest.mark.parametrize("text", ["4", "x:1", "-2:0,1", "3:1,a"])
def test_bad_datum_literals(text):
    with pytest.raises(ParseError):
        parse_datum(text)


def test_mixed_levels_rejected():
    with pytest.raises(LevelMismatchError):
        DatumSet((Datum(0, (0, 1)), Datum(0, (0, 1, 2))))
    with pytest.raises(ParseError):
        parse_datum_set("0:0,1;0:0,1,2")


def test_multipartition_counts():
    # number of bipartitions of n
    assert [sum(1 for _ in multipartitions_of(n, 2)) for n in range(6)] == [1, 2, 5, 10, 20, 36]


def test_content_examples():
    assert mp_content(EXAMPLE, Datum(4, (0, 2, 1))).as_dict() == {0: 4, 1: 4, 2: 1, 3: 1}
    assert mp_content(Multipartition.empty(3), Datum(5, (1, 2, 3))).as_dict() == {}
    assert mp_content(M((1,), (1,)), Datum(3, (0, 0))).as_dict() == {0: 2}
    with pytest.raises(LevelMismatchError):
        mp_content(EXAMPLE, Datum(4, (0, 2)))


def test_weight_examples():
    assert weight(Multipartition.empty(2), Datum(3, (0, 1))) == 0
    assert weight(M((1,), (1,)), Datum(3, (0, 0))) == 0
    # three single boxes of residue 0: nothing else has content {0: 3}, so this is a core
    m = M((1,), (1,), (1,))
    assert weight(m, Datum(2, (0, 0, 0))) == 0
    assert is_core_bruteforce(m, Datum(2, (0, 0, 0)))
    m = M((2,), (), ())
    assert weight(m, Datum(2, (0, 0, 0))) > 0
    assert not is_core_bruteforce(m, Datum(2, (0, 0, 0)))


def test_core_examples():
    assert is_core(EXAMPLE, Datum(4, (0, 2, 1)))
    assert weight(EXAMPLE, Datum(4, (0, 2, 1))) == 0
    assert is_core(Multipartition.empty(2), Datum(3, (0, 1)))
    assert is_core(LARGEST, Datum(0, (1, 3, 0)))
    assert is_core(LARGEST, Datum(0, (3, 0, 1)))


def test_bipartition_examples():
    assert is_core_bipartition(P((1,)), P((3, 1)), 3, 0, 1)
    assert not is_core_bipartition(P((1,)), P((1,)), 0, 0, 1)
    for s in range(0, 5):
        for c in range(-2, 3):
            assert is_core_bipartition(EMPTY, EMPTY, s, c, 0)


def test_bruteforce_examples():
    assert is_core_bruteforce(M((1,), (1,)), Datum(3, (0, 0)))
    assert is_core_bruteforce(Multipartition.empty(2), Datum(0, (4, -1)))
    d = Datum(0, (0, 0, 0))
    assert not is_core_bruteforce(M((1,), (), ()), d)
    assert not is_core_bruteforce(M((), (1,), ()), d)
    with pytest.raises(SizeGuardError):
        is_core_bruteforce(M((11,), ()), Datum(3, (0, 0)))


@pytest.mark.parametrize("s", range(0, 6))
def test_equivalence_triangle(s):
    # fast test, definition, and weight zero agree
    for c, d in [(0, 0), (0, 1), (0, 3), (2, -1), (-3, 3)]:
        datum = Datum(s, (c, d))
        for m in multipartitions_up_to(5, 2):
            fast = is_core(m, datum)
            assert fast == is_core_bruteforce(m, datum)
            if s != 1:
                assert fast == (weight(m, datum) == 0)


@settings(max_examples=200, deadline=None)
@given(multipartitions(2), data(2), st.integers(-3, 3))
def test_shifting_all_charges_preserves_cores(m, d, a):
    shifted = Datum(d.modulus, tuple(c + a for c in d.charges))
    assert is_core(m, d) == is_core(m, shifted)


@settings(max_examples=200, deadline=None)
@given(multipartitions(2), data(2, moduli=(2, 3, 4, 5)), st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
def test_charges_matter_only_mod_s(m, d, k):
    moved = Datum(d.modulus, tuple(c + d.modulus * x for c, x in zip(d.charges, k)))
    assert is_core(m, d) == is_core(m, moved)


@pytest.mark.parametrize("s,t", [(2, 4), (3, 6), (2, 6), (3, 0), (2, 0), (5, 0), (4, 8)])
def test_divisible_modulus_gives_larger_core_set(s, t):
    for charges in [(0, 0), (0, 1), (1, -1), (0, 2)]:
        for m in multipartitions_up_to(6, 2):
            if is_core(m, Datum(s, charges)):
                assert is_core(m, Datum(t, charges))


def test_sandwich_examples():
    assert sandwich_partners(EMPTY, 3, 0, 1) == [EMPTY, P((1,)), P((2,))]
    assert sandwich_partners(P((1,)), 3, 0, 1) == [EMPTY, P((1, 1)), P((3, 1))]
    for s in range(1, 6):
        assert sandwich_partners(EMPTY, s, 2, 2) == [EMPTY]
    with pytest.raises(PreconditionError):
        sandwich_partners(P((3,)), 3, 0, 1)
    with pytest.raises(PreconditionError):
        sandwich_partners(EMPTY, 0, 0, 1)


@pytest.mark.parametrize("s", range(2, 7))
def test_sandwich_counts(s):
    for p in s_cores_up_to(s, 8):
        for c in range(s):
            assert len(sandwich_partners(p, s, c, 0)) == comb(s, c)


@pytest.mark.parametrize("s", [2, 3, 4])
def test_sandwich_partners_are_exactly_the_passing_partners(s):
    for p in s_cores_up_to(s, 6):
        for e in range(s):
            partners = set(sandwich_partners(p, s, e, 0))
            limit = max(q.size for q in partners)
            brute = {q for q in s_cores_up_to(s, limit) if is_core_bipartition(p, q, s, e, 0)}
            assert partners == brute


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_s_set_description_of_core_bipartitions(s):
    cores = [p for p in s_cores_from_s_sets(s, -4, 4 + s)]
    for a in range(s):
        for p in cores:
            xp = s_set(p, s)
            for q in cores:
                xq = s_set(q, s)
                expected = all(xq[i] + a in (xp[i + a], xp[i + a] + s) for i in range(s))
                assert is_core_bipartition(p, q, s, 0, a) == expected
