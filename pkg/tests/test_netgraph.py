"""Periodic nets: catalog, coordination, rings, quotients."""

import random
from fractions import Fraction

import pytest

from crystpres.netgraph import (
    GraphError,
    LabeledQuotientGraph,
    NonVertexTransitive,
    QuotientNotSimple,
    RingSymbol,
    catalog_load,
    catalog_names,
    extend_lattice,
    from_cayley,
    net_coordination_sequence,
    net_geodesics,
    parse_catalog_text,
    quotient_by_sublattice,
    regular_action_check,
    ring_size_counts,
    schlafli_symbol,
    strong_rings,
    topological_density,
)
from crystpres.netgraph import _ball_edges, _cover_ball, _cycle_mask, _horton_cycles
from crystpres.symop import parse_symop

from conftest import load_document

BUNDLED = ["dia", "gis", "hcb", "nbo", "pcu", "qtz", "sql", "srs", "ths"]

# per-net search caps chosen just past the largest strong ring expected
RING_GOLDENS = {
    "pcu": (6, {4: 12}),
    "sql": (6, {4: 4}),
    "hcb": (8, {6: 3}),
    "dia": (8, {6: 12}),
    "nbo": (8, {6: 8}),
    "qtz": (8, {6: 6, 8: 40}),
    "gis": (8, {4: 3, 8: 4}),
    "ths": (12, {10: 10}),
    "srs": (12, {10: 15}),
}


def test_catalog_names():
    assert sorted(catalog_names()) == BUNDLED


@pytest.mark.parametrize("name", BUNDLED)
def test_catalog_roundtrip(name):
    g = catalog_load(name)
    h = parse_catalog_text(g.to_text(), name=name)
    assert h.edges == g.edges
    assert h.cell == g.cell
    assert h.coords == g.coords


def test_catalog_unknown():
    with pytest.raises(GraphError):
        catalog_load("nosuchnet")


def test_graph_validation_errors():
    with pytest.raises(GraphError):  # zero-shift loop
        LabeledQuotientGraph(1, 1, [(0, 0, (0,))])
    with pytest.raises(GraphError):  # duplicate edge
        LabeledQuotientGraph(1, 2, [(0, 1, (0,)), (1, 0, (0,))])
    with pytest.raises(GraphError):  # vertex out of range
        LabeledQuotientGraph(1, 1, [(0, 2, (0,))])
    with pytest.raises(GraphError):  # disconnected cover: shifts span 2Z
        LabeledQuotientGraph(1, 1, [(0, 0, (2,))])


def test_coordination_sequences():
    pcu = catalog_load("pcu")
    assert net_coordination_sequence(pcu, 0, 5) == [1, 6, 18, 38, 66, 102]
    sql = catalog_load("sql")
    assert net_coordination_sequence(sql, 0, 4) == [1, 4, 8, 12, 16]
    hcb = catalog_load("hcb")
    assert net_coordination_sequence(hcb, 0, 4) == [1, 3, 6, 9, 12]
    dia = catalog_load("dia")
    assert net_coordination_sequence(dia, 0, 4) == [1, 4, 12, 24, 42]
    gis = catalog_load("gis")
    assert net_coordination_sequence(gis, 0, 5) == [1, 4, 9, 18, 32, 48]


def test_topological_density():
    ths = catalog_load("ths")
    assert topological_density(ths, 0, 10) == sum(
        net_coordination_sequence(ths, 0, 10)
    )


@pytest.mark.parametrize("name", BUNDLED)
def test_ring_goldens_and_widen_stability(name):
    g = catalog_load(name)
    cap, expected = RING_GOLDENS[name]
    counts = ring_size_counts(g, max_size=cap)
    assert counts == expected
    assert ring_size_counts(g, max_size=cap, widen=True) == expected
    assert schlafli_symbol(g, max_size=cap).counts == tuple(
        sorted(expected.items())
    )


def test_ring_symbol_formatting():
    assert str(RingSymbol({10: 10, 12: 3})) == "10^10.12^3"
    assert str(RingSymbol({6: 1})) == "6"
    assert RingSymbol({4: 12}) == "4^12"
    with pytest.raises(GraphError):
        RingSymbol({4: 0})


def _relabel(g, perm, offsets, unimod):
    """Same net with permuted vertices, shifted labels, new lattice basis."""
    edges = []
    r = g.rank
    for u, v, s in g.edges:
        shifted = tuple(
            sum((s[k] + offsets[v][k] - offsets[u][k]) * unimod[k][j]
                for k in range(r))
            for j in range(r)
        )
        edges.append((perm[u], perm[v], shifted))
    return LabeledQuotientGraph(r, g.n, edges)


@pytest.mark.parametrize("name", ["hcb", "qtz", "gis"])
def test_strong_rings_invariant_under_relabeling(name):
    g = catalog_load(name)
    cap, expected = RING_GOLDENS[name]
    rng = random.Random(7)
    perm = list(range(g.n))
    rng.shuffle(perm)
    offsets = [
        tuple(rng.randrange(-2, 3) for _ in range(g.rank)) for _ in range(g.n)
    ]
    unimods = {
        2: ((1, 1), (0, 1)),
        3: ((1, 0, 1), (0, 1, 0), (0, 0, 1)),
    }
    h = _relabel(g, perm, offsets, unimods[g.rank])
    assert ring_size_counts(h, base=perm[0], max_size=cap) == expected


def test_strong_ring_nodes_are_cycles():
    g = catalog_load("dia")
    for ring in strong_rings(g, max_size=8):
        nodes = ring.nodes
        assert len(set(nodes)) == len(nodes)
        closed = list(nodes) + [nodes[0]]
        for a, b in zip(closed, closed[1:]):
            assert b in g.cover_neighbors(a)


def test_rejected_cycles_have_decomposition_witness():
    """Any cycle through the base that is not a strong ring must be a
    GF(2) sum of strictly smaller cycles; rebuild that witness basis
    independently and check span membership for every rejected cycle."""
    g = catalog_load("gis")
    cap = 8
    dist, _ = _cover_ball(g, 0, cap + 2)
    edge_index, _ = _ball_edges(g, dist)
    strong_masks = {
        _cycle_mask(r.nodes, edge_index) for r in strong_rings(g, max_size=cap)
    }
    # all simple cycles through the base, by brute DFS within the ball
    from crystpres.netgraph import _base_cycles

    cycles = _base_cycles(g, 0, cap, dist, edge_index)
    horton = _horton_cycles(g, dist, edge_index, cap)
    for mask, nodes in cycles.items():
        if mask in strong_masks:
            continue
        length = len(nodes)
        pivots = {}
        basis = [hm for hl, _, hm in horton if hl < length]
        for bm in basis:
            while bm:
                p = bm.bit_length() - 1
                if p not in pivots:
                    pivots[p] = bm
                    break
                bm ^= pivots[p]
        rem = mask
        while rem:
            p = rem.bit_length() - 1
            if p not in pivots:
                break
            rem ^= pivots[p]
        assert rem == 0, f"no witness for rejected {length}-cycle"


def test_ths_quotients():
    ths = catalog_load("ths")
    table = [
        ((Fraction(5, 2), Fraction(5, 2), Fraction(1, 2)), 424, "10^10.12^3"),
        ((2, 2, 1), 445, "10^10.12^6"),
        ((Fraction(1, 2), Fraction(1, 2), Fraction(-3, 2)), 460, "10^10.12^9"),
    ]
    for vector, td10, symbol in table:
        q = quotient_by_sublattice(ths, [vector])
        assert q.rank == 2
        assert topological_density(q, 0, 10) == td10
        assert schlafli_symbol(q, max_size=12) == symbol


def test_square_lattice_tube():
    sql = catalog_load("sql")
    tube = quotient_by_sublattice(sql, [(4, 12)])
    assert tube.rank == 1
    assert tube.n == 4
    assert ring_size_counts(tube, max_size=16) == {4: 4, 16: 1820}


def test_net_geodesics():
    sql = catalog_load("sql")
    assert net_geodesics(sql, (4, 12)) == (16, 1820)
    assert net_geodesics(sql, (5, 12)) == (17, 6188)
    assert net_geodesics(sql, (0, 0)) == (0, 1)
    dia = catalog_load("dia")
    # one conventional fcc cell edge: conventional (0,1/2,1/2) is a
    # primitive vector, two bonds away
    length, count = net_geodesics(dia, (0, Fraction(1, 2), Fraction(1, 2)))
    assert length == 2


def test_quotient_errors():
    pcu = catalog_load("pcu")
    with pytest.raises(QuotientNotSimple):  # unit vector gives loops
        quotient_by_sublattice(pcu, [(1, 0, 0)])
    with pytest.raises(QuotientNotSimple):  # doubled axis gives parallels
        quotient_by_sublattice(pcu, [(2, 0, 0)])
    with pytest.raises(GraphError):  # full-rank quotient is not periodic
        quotient_by_sublattice(pcu, [(3, 0, 0), (0, 3, 0), (0, 0, 3)])
    with pytest.raises(GraphError):  # dependent vectors
        quotient_by_sublattice(pcu, [(2, 0, 0), (4, 0, 0)])
    dia = catalog_load("dia")
    with pytest.raises(GraphError):  # not in the primitive lattice
        quotient_by_sublattice(dia, [(Fraction(1, 3), 0, 0)])


def test_non_vertex_transitive_symbol():
    g = LabeledQuotientGraph(
        1, 2, [(0, 0, (1,)), (0, 1, (0,)), (0, 1, (1,))]
    )
    with pytest.raises(NonVertexTransitive):
        schlafli_symbol(g, max_size=6)


def test_extend_lattice_centered_square():
    g = LabeledQuotientGraph(
        2,
        2,
        [(0, 1, (0, 0)), (0, 1, (-1, 0)), (0, 1, (0, -1)), (0, 1, (-1, -1))],
        coords=[(0, 0), (Fraction(1, 2), Fraction(1, 2))],
    )
    h = extend_lattice(g, [(Fraction(1, 2), Fraction(1, 2))])
    assert h.n == 1
    sql = catalog_load("sql")
    assert net_coordination_sequence(h, 0, 4) == net_coordination_sequence(
        sql, 0, 4
    )
    assert ring_size_counts(h, max_size=6) == {4: 4}


def test_extend_lattice_rejects_non_translation():
    g = catalog_load("hcb")
    # (1/3, 1/3) moves vertex 0 onto vertex 1, which has a different
    # edge orientation; the degree bookkeeping catches the mismatch
    with pytest.raises(GraphError):
        extend_lattice(g, [(Fraction(1, 2), 0)])


def test_from_cayley_matches_catalog_invariants():
    doc = load_document("gis_i41a.json")
    g = from_cayley(doc.generators)
    cat = catalog_load("gis")
    assert g.n == cat.n == 8
    assert net_coordination_sequence(g, 0, 5) == net_coordination_sequence(
        cat, 0, 5
    )
    assert schlafli_symbol(g, max_size=8) == "4^3.8^4"


def test_regular_action_check():
    gis = catalog_load("gis")
    doc = load_document("gis_i41a.json")
    assert regular_action_check(gis, [op for _, op in doc.generators]) == "pass"
    pcu = catalog_load("pcu")
    shifts = [
        parse_symop("1+x, y, z", 3),
        parse_symop("x, 1+y, z", 3),
        parse_symop("x, y, 1+z", 3),
    ]
    assert regular_action_check(pcu, shifts) == "pass"
    # the inversion alone preserves edges but fixes the base vertex
    assert regular_action_check(pcu, [parse_symop("-x, -y, -z", 3)]) == "fail"
    # a quarter shift maps every vertex off the net, so its orbit never
    # covers the ball
    assert regular_action_check(pcu, [parse_symop("1/4+x, y, z", 3)]) == "fail"
