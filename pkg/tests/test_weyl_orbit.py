import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multicores.errors import PreconditionError
from multicores.multicore import Datum, Multipartition, is_core, multipartitions_up_to
from multicores.partitions import EMPTY, ResidueClass, is_s_core, partitions_up_to
from multicores.weyl_orbit import act_generator, orbit_members, s_cores_up_to

from reference_data import FIGURE_EDGES, FIGURE_LOOPS, FIGURE_NODES
from strategies import multipartitions

M = Multipartition.of
D31 = Datum(3, (0, 1))



def test_generators_at_the_empty_bipartition():
    empty = Multipartition.empty(2)
    assert act_generator(empty, D31, 1) == M((), (1,))
    assert act_generator(empty, D31, 0) == M((1,), ())
    assert act_generator(empty, D31, ResidueClass(3, 2)) == empty


@pytest.mark.parametrize("a,b,i", FIGURE_EDGES)
def test_figure_edges(a, b, i):
    src, dst = FIGURE_NODES[a - 1], FIGURE_NODES[b - 1]
    assert act_generator(src, D31, i) == dst
    assert act_generator(dst, D31, i) == src


@pytest.mark.parametrize("node,i", FIGURE_LOOPS)
def test_figure_loops(node, i):
    m = FIGURE_NODES[node - 1]
    assert act_generator(m, D31, i) == m


def test_figure_members_are_in_the_orbit():
    limit = max(m.size for m in FIGURE_NODES)
    orbit = set(orbit_members(D31, limit))
    assert len(set(FIGURE_NODES)) == 19
    assert set(FIGURE_NODES) <= orbit
    assert all(is_core(m, D31) for m in FIGURE_NODES)


def test_generator_errors():
    with pytest.raises(PreconditionError):
        act_generator(Multipartition.empty(2), Datum(1, (0, 0)), 0)
    with pytest.raises(PreconditionError):
        act_generator(Multipartition.empty(2), D31, ResidueClass(4, 1))
    with pytest.raises(PreconditionError):
        orbit_members(Datum(1, (0,)), 3)


@settings(max_examples=200, deadline=None)
@given(multipartitions(2), st.sampled_from([Datum(3, (0, 1)), Datum(4, (0, 2)), Datum(0, (0, 1)), Datum(2, (1, 0))]),
       st.integers(-4, 4))
def test_generators_are_involutions(m, d, i):
    assert act_generator(act_generator(m, d, i), d, i) == m


@pytest.mark.parametrize("d", [Datum(3, (0, 1)), Datum(4, (0, 2, 1)), Datum(0, (0, 2)), Datum(2, (0, 1))])
def test_generators_preserve_cores(d):
    indices = range(d.modulus) if d.modulus else range(-4, 7)
    for m in orbit_members(d, 6):
        for i in indices:
            assert is_core(act_generator(m, d, i), d)


@pytest.mark.parametrize("d", [Datum(3, (0, 1)), Datum(4, (0, 2, 1)), Datum(0, (0, 1)), Datum(0, (0, 2, -1)), Datum(2, (0, 0))])
def test_some_generator_shrinks_every_nonempty_core(d):
    for m in orbit_members(d, 8):
        if m.size:
            sizes = [act_generator(m, d, i).size for i in range(min(d.charges) - 10, max(d.charges) + 11)]
            assert min(sizes) < m.size


@pytest.mark.parametrize("d", [
    Datum(3, (0, 1)), Datum(4, (0, 2, 1)), Datum(2, (0, 0)), Datum(0, (0, 1)),
    Datum(0, (0, 0)), Datum(2, (0, 1, 1)), Datum(3, (0, 0, 2)), Datum(0, (1, -1, 0)),
])
def test_orbit_equals_core_filter(d):
    N = 8 if d.level <= 2 else 6
    filtered = sorted(m for m in multipartitions_up_to(N, d.level) if is_core(m, d))
    assert orbit_members(d, N) == filtered


def test_orbit_of_size_zero():
    assert orbit_members(Datum(5, (1, 4)), 0) == [Multipartition.empty(2)]


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_single_cores(s):
    assert s_cores_up_to(s, 12) == sorted(p for p in partitions_up_to(12) if is_s_core(p, s))
