import itertools
import json

import pytest

from pknuth import goldens
from pknuth.knuth import (NotClosed, build_graph, check_d_graph_axioms, components,
                          equivalence_class, is_connected, knuth_neighbors, move_at)
from pknuth.poset import enumerate_orders, from_partition, partitions_of, trivial_order, usual_order
from pknuth.tableaux import hook_count
from pknuth.verify import _oracle_moves, oracle_class, oracle_rsk_insertion_tableau


def perms(n):
    return list(itertools.permutations(range(1, n + 1)))


def test_neighbor_examples():
    assert knuth_neighbors(from_partition((1,), 3), (3, 1, 2)) == [((2, 3, 1), 2)]
    assert all(knuth_neighbors(from_partition((), 3), w) == [] for w in perms(3))
    P = from_partition((2, 1), 4)
    assert sorted(knuth_neighbors(P, (4, 2, 3, 1))) == [((3, 4, 2, 1), 2), ((4, 3, 1, 2), 3)]


def test_class_examples():
    P = from_partition((2, 1), 4)
    assert equivalence_class(P, (3, 2, 4, 1)) == {(3, 2, 4, 1), (3, 4, 2, 1), (4, 2, 3, 1),
                                                  (4, 3, 1, 2), (4, 1, 3, 2)}
    assert equivalence_class(trivial_order(4), (2, 4, 1, 3)) == {(2, 4, 1, 3)}
    small = goldens.graph_data()["221/5/32415"]
    got = equivalence_class(from_partition((2, 2, 1), 5), (4, 2, 3, 1, 5))
    assert got == {tuple(v["word"]) for v in small["vertices"]}


def test_full_graph_class_sizes():
    comps = components(from_partition((2, 1), 4))
    assert len(comps) == 13
    assert sorted(len(c) for c in comps) == sorted([1, 1, 1, 3, 1, 1, 1, 3, 3, 2, 1, 5, 1])


def test_moves_match_oracle_and_are_symmetric():
    for n in range(3, 7):
        for P in enumerate_orders(n):
            for w in perms(n):
                nb = knuth_neighbors(P, w)
                assert {v for v, _ in nb} == _oracle_moves(P, w)
                for v, i in nb:
                    assert (w, i) in knuth_neighbors(P, v)
                    assert move_at(P, v, i) == w


def test_moves_preserve_letters_outside_window():
    for P in enumerate_orders(5):
        for w in perms(5):
            for v, i in knuth_neighbors(P, w):
                assert v[:i - 2] == w[:i - 2] and v[i + 1:] == w[i + 1:]
                assert sorted(v[i - 2:i + 1]) == sorted(w[i - 2:i + 1])


def test_components_partition_sn_and_match_oracle():
    for n in range(1, 6):
        for P in enumerate_orders(n):
            comps = components(P)
            flat = [w for c in comps for w in c]
            assert sorted(flat) == perms(n)
            for c in comps:
                assert oracle_class(P, c[0]) == set(c)


def test_trivial_order_singletons():
    assert len(components(trivial_order(5))) == 120


def test_usual_order_gives_classical_knuth_classes():
    for n in range(1, 7):
        U = usual_order(n)
        comps = components(U)
        assert len(comps) == sum(hook_count(lam) for lam in partitions_of(n))
        for c in comps:
            assert len({oracle_rsk_insertion_tableau(w) for w in c}) == 1


def test_build_graph_and_exports():
    P = from_partition((2, 1), 4)
    g = build_graph(P, perms(4))
    assert len(g.vertices) == 24
    full = goldens.graph_data()["21/4"]
    want = {(tuple(u), tuple(v), i) for u, v, i in full["edges"]}
    got = {(u, v, i) for u, v, i in g.edge_list()}
    assert {(min(u, v), max(u, v), i) for u, v, i in want} == got
    dot = g.to_dot()
    assert dot.count(" -- ") == len(got) and dot.count("[label=\"") == 24 + len(got)
    assert '"1342" [label="1342\\ndes={3}"];' in dot
    obj = json.loads(json.dumps(g.to_json()))
    assert obj["schema_version"] == 1 and len(obj["edges"]) == len(got)
    assert g.to_dot() == build_graph(P, reversed(perms(4))).to_dot()


def test_singleton_graph_and_not_closed():
    P = from_partition((2, 1), 4)
    g = build_graph(P, [(1, 2, 3, 4)])
    assert g.edge_list() == [] and is_connected(g)
    with pytest.raises(NotClosed, match="outside the vertex set"):
        build_graph(P, [(3, 2, 4, 1)])


def test_s3_graphs():
    assert len(goldens.S3_EDGES) == 5
    for lam, edges in goldens.S3_EDGES.items():
        g = build_graph(from_partition(lam, 3), perms(3))
        assert {(u, v) for u, v, _ in g.edge_list()} == {tuple(sorted(e)) for e in edges}


def test_axioms_on_all_classes_n5():
    for P in enumerate_orders(5):
        for c in components(P):
            g = build_graph(P, c)
            rep = check_d_graph_axioms(g)
            assert rep.ok, rep.to_json()
            assert is_connected(g)
            assert rep.notes["Ax4"] == rep.notes["Ax6"] == "not checked"


def test_corrupted_graph_fails_ax1():
    P = from_partition((2, 1), 4)
    c = sorted(equivalence_class(P, (3, 2, 4, 1)))
    g = build_graph(P, c)
    u, v, i = g.edge_list()[0]
    rep = check_d_graph_axioms(g.remove_edge(u, v, i))
    assert not rep.results["Ax1"][0]
    assert rep.results["Ax1"][1]["color"] == i


def test_five_vertex_class_flagged():
    P = from_partition((2, 1), 4)
    rep = check_d_graph_axioms(build_graph(P, equivalence_class(P, (3, 2, 4, 1))))
    assert rep.ok
    assert rep.notes["dual_equivalence"].startswith("not a dual equivalence graph")
    single = check_d_graph_axioms(build_graph(P, [(1, 2, 3, 4)]))
    assert single.notes["dual_equivalence"].startswith("undetermined")
