"""Structural statistics: intersection order, terminal chords, source-sink
groups, traced subdiagrams, valency, and crossing-graph connectivity."""

import pytest

from chordlab.diagram import ChordDiagram
from chordlab.structure import (
    edge_connectivity,
    exists_nonnesting_induced_path,
    intersection_order,
    is_k_connected,
    is_k_terminal,
    is_k_terminal_minimal,
    is_one_terminal,
    source_sink_groups,
    t1,
    terminal_profile,
    traced_subdiagram,
    valency,
    vertex_connectivity,
)
from conftest import Ca, Cb, Cc, Cd, Ce, Cf, Cg, K3, N2, sweep


def test_intersection_order_agrees_with_standard_order_on_fixtures():
    assert intersection_order(Cd) == (1, 2, 3)
    assert intersection_order(Ce) == (1, 2, 3)
    assert intersection_order(Cg) == (1, 2, 3, 4)


def test_intersection_order_requires_connected_nonempty():
    with pytest.raises(ValueError):
        intersection_order(Cc)


def test_intersection_order_root_first_and_extends_arcs():
    for n in range(1, 6):
        for d in sweep(n):
            if not d.is_connected():
                continue
            order = intersection_order(d)
            assert sorted(order) == list(range(1, n + 1))
            assert order[0] == 1
            rank = {c: i for i, c in enumerate(order)}
            assert all(rank[a] < rank[b] for a, b in d.arcs())


def test_terminal_profiles():
    assert terminal_profile(Cd) == (2, 3)
    assert terminal_profile(Ce) == (3,)
    assert terminal_profile(K3) == (3,)
    assert t1(Ce) == 3
    assert t1(Cb) == 2


def test_last_terminal_is_final_chord_for_connected_diagrams():
    for n in range(1, 6):
        for d in sweep(n):
            if d.is_connected():
                assert terminal_profile(d)[-1] == n


def test_one_terminal_fixtures():
    assert is_one_terminal(Ce)
    assert is_one_terminal(Cb)
    assert not is_one_terminal(Cd)
    assert not is_one_terminal(Cc)


def test_k_terminal_examples():
    assert is_k_terminal(Ce, 1)
    assert not is_k_terminal(Cd, 1)
    assert is_k_terminal(K3, 2)
    # a complete crossing graph is k-terminal for every k
    assert all(is_k_terminal(K3, k) for k in range(1, 6))


def test_k_terminal_minimal_examples():
    assert is_k_terminal_minimal(Cf, 1)
    # settled by exhaustive oracle: both non-final chords of Ce have exactly
    # one right neighbor, so Ce is 1-terminal-minimal
    assert is_k_terminal_minimal(Ce, 1)
    assert is_k_terminal_minimal(K3, 2)
    assert not is_k_terminal_minimal(Cd, 1)


def test_source_sink_groups():
    assert source_sink_groups(Cf) == {1: [1], 2: [2, 3], 3: [4, 5]}
    assert source_sink_groups(Ce) == {1: [1], 2: [2], 3: [3, 4, 5]}
    assert source_sink_groups(Ca) == {1: [1]}


def test_groups_partition_points_below_root_sink():
    for n in range(1, 6):
        for d in sweep(n):
            if not is_one_terminal(d):
                continue
            groups = source_sink_groups(d)
            flat = sorted(p for g in groups.values() for p in g)
            assert flat == list(range(1, 2 * n))


def test_traced_subdiagram_examples():
    assert traced_subdiagram(Ce, 3) == {1, 2, 3}
    assert traced_subdiagram(Ce, 2) == {2}
    assert traced_subdiagram(Cf, 2) == {1, 2}


def test_traced_subdiagrams_are_one_terminal():
    for n in range(1, 6):
        for d in sweep(n):
            if not d.is_connected():
                continue
            for c in range(1, n + 1):
                labels = traced_subdiagram(d, c)
                assert is_one_terminal(d.subdiagram(labels))


def test_valency_examples():
    assert [valency(Ce, i) for i in (1, 2, 3)] == [0, 0, 2]
    assert [valency(Cf, i) for i in (1, 2, 3)] == [0, 1, 1]
    assert valency(Ca, 1) == 0


def test_connectivity_fixtures():
    assert vertex_connectivity(K3) == 2
    assert vertex_connectivity(Cb) == 1
    assert edge_connectivity(Cb) == 1
    assert vertex_connectivity(Cc) == 0
    assert vertex_connectivity(Ca) == 0


def test_k_connected_predicate_on_complete_diagrams():
    # no chord subset disconnects a complete crossing graph, so K3 passes
    # every level up to its size; kappa still reports the standard n-1
    assert all(is_k_connected(K3, k) for k in range(0, 4))
    assert not is_k_connected(K3, 4)
    assert is_k_connected(Ca, 1)
    assert not is_k_connected(Ca, 2)
    assert not is_k_connected(Cc, 1)


def test_k_connected_matches_kappa_off_the_complete_case():
    for n in range(1, 6):
        for d in sweep(n):
            kappa = vertex_connectivity(d)
            full = d.is_connected() and all(
                len(d.right_neighbors(i)) + len(d.left_neighbors(i)) == n - 1
                for i in range(1, n + 1)
            )
            for k in range(1, n + 2):
                want = k <= n if full else kappa >= k
                assert is_k_connected(d, k) == want


def test_nonnesting_induced_path_examples():
    assert exists_nonnesting_induced_path(Cf, 1, 3)
    assert exists_nonnesting_induced_path(Ce, 2, 3)
    assert not exists_nonnesting_induced_path(N2, 1, 2)
