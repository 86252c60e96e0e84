"""Cayley-graph exploration: balls, translation harvest, geodesics."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystpres.bfs import (
    BallBoundExceeded,
    TargetUnreachable,
    ball,
    coordination_sequence,
    geodesics,
    lattice_geodesic_count,
    odd_cycle_girth,
    shortest_translation_words,
)
from crystpres.symop import parse_symop
from crystpres.words import evaluate

from conftest import load_document


def _translations(dim):
    gens = []
    for i in range(dim):
        v = [0] * dim
        v[i] = 1
        name = "abc"[i]
        gens.append((name, parse_symop(
            ", ".join(f"1+{ax}" if j == i else ax for j, ax in enumerate("xyz"[:dim])),
            dim,
        )))
    return gens


def test_cubic_lattice_coordination_sequence():
    cs = coordination_sequence(_translations(3), 6)
    # L1-sphere sizes in Z^3: 4k^2 + 2 for k >= 1
    assert cs == [1] + [4 * k * k + 2 for k in range(1, 7)]


def test_square_lattice_coordination_sequence():
    cs = coordination_sequence(_translations(2), 8)
    assert cs == [1] + [4 * k for k in range(1, 9)]


def test_ball_generator_order_invariance():
    gens = _translations(2) + [("c", parse_symop("-x, -y", 2))]
    a = ball(gens, 5).sphere_sizes
    b = ball(list(reversed(gens)), 5).sphere_sizes
    assert a == b


def test_ball_bound():
    with pytest.raises(BallBoundExceeded):
        ball(_translations(3), 10, max_elements=50)


def test_harvest_shortest_translation_words(elv):
    h = shortest_translation_words(elv.generators)
    assert h.lattice.rank == 3
    assert [len(w) for w, _ in h.lattice_words] == [3, 4, 4, 4]
    expected = [
        (Fraction(3, 2), Fraction(-3, 2), Fraction(3, 2)),
        (0, 0, 2),
        (0, 2, -1),
        (1, 0, 2),
    ]
    got = {frozenset({v, tuple(-x for x in v)}) for _, v in h.lattice_words}
    want = {
        frozenset({tuple(map(Fraction, v)), tuple(-Fraction(x) for x in v)})
        for v in expected
    }
    assert got == want
    by_vec = dict((v, w) for w, v in h.words)
    key = (Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2))
    assert key in by_vec
    assert len(by_vec[key]) == 6
    # every harvested word is a pure translation evaluating to its vector
    assign = {k + 1: op for k, (_, op) in enumerate(elv.generators)}
    for w, v in h.words[:20]:
        g = evaluate(w, assign)
        assert g.translation == v
        assert all(
            g.linear[i][j] == (i == j) for i in range(3) for j in range(3)
        )


def test_harvest_trivial_group():
    gens = [("a", parse_symop("1+x", 1))]
    h = shortest_translation_words(gens)
    assert h.lattice.rank == 1
    assert h.lattice_words[0][0] in {(1,), (-1,)}


def test_geodesics_square_lattice():
    gens = _translations(2)
    g = geodesics(gens, (4, 12), 30)
    assert g.length == 16
    assert g.count == 1820
    g = geodesics(gens, (5, 12), 30)
    assert g.length == 17
    assert g.count == 6188


def test_geodesics_with_words():
    gens = _translations(2)
    g = geodesics(gens, (2, 2), 10, with_words=True)
    assert g.count == comb(4, 2)
    assert len(g.words) == g.count
    assign = {k + 1: op for k, (_, op) in enumerate(gens)}
    for w in g.words:
        assert len(w) == 4
        assert evaluate(w, assign).translation == (2, 2)


def test_geodesics_unreachable():
    gens = [("a", parse_symop("2+x, y", 2)), ("b", parse_symop("x, 1+y", 2))]
    with pytest.raises(TargetUnreachable):
        geodesics(gens, (1, 0), 10)


@settings(max_examples=40, deadline=None)
@given(v=st.lists(st.integers(min_value=-4, max_value=4), min_size=2, max_size=3))
def test_lattice_geodesic_oracle_matches_bfs(v):
    v = tuple(v)
    gens = _translations(len(v))
    expected = lattice_geodesic_count(v)
    got = geodesics(gens, v, sum(abs(c) for c in v) + 1)
    assert got.count == expected
    assert got.length == sum(abs(c) for c in v)


def test_lattice_geodesic_count_binomials():
    assert lattice_geodesic_count((4, 12)) == comb(16, 4)
    assert lattice_geodesic_count((5, 12)) == comb(17, 5)
    assert lattice_geodesic_count((0, 0)) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_odd_cycle_girth_diagonal_family(n):
    doc = load_document(f"z2_diagonal_{n}.json")
    assert odd_cycle_girth(doc.generators, "c") == 2 * n + 1


def test_odd_cycle_girth_none():
    # without a relation the marked generator never closes an odd cycle
    gens = _translations(2)
    assert odd_cycle_girth(gens, "a", cap=6) is None
