"""Pattern containment, the named pattern families, induced-cycle
realizations, and the profile classes."""

import pytest

from chordlab.diagram import ChordDiagram
from chordlab.patterns import (
    CLASS_NAMES,
    bottom_cycle,
    complete_diagram,
    contains_any_bottom_cycle,
    contains_any_top_cycle,
    contains_pattern,
    in_class,
    is_permutation_diagram,
    is_shifted_permutation_diagram,
    nesting_diagram,
    permutation_diagram,
    top_cycle,
)
from conftest import Ca, Cb, Cc, Ce, Cg, K3, sweep


def test_pattern_family_constructors():
    assert complete_diagram(3) == K3
    assert complete_diagram(1) == Ca
    assert nesting_diagram(2) == ChordDiagram.from_text("(1,4)(2,3)")
    assert top_cycle(3) == K3
    assert bottom_cycle(3) == K3


def test_cycle_realizations_at_size_four():
    t4, b4 = top_cycle(4), bottom_cycle(4)
    assert t4 == ChordDiagram.from_text("(1,4)(2,7)(3,6)(5,8)")
    assert b4 == ChordDiagram.from_text("(1,6)(2,5)(3,8)(4,7)")
    assert t4 != b4
    # both realize an induced 4-cycle and nothing else does
    cycles = [
        d
        for d in sweep(4)
        if sorted(len(d.right_neighbors(i)) + len(d.left_neighbors(i)) for i in range(1, 5))
        == [2, 2, 2, 2]
        and d.is_connected()
        and not contains_pattern(d, K3)
    ]
    assert sorted(c.to_text() for c in cycles) == sorted([t4.to_text(), b4.to_text()])


def test_contains_pattern_examples():
    assert contains_pattern(K3, K3)
    assert not contains_pattern(Ce, K3)
    assert contains_pattern(Cb, Ca)


def test_top_cycle_detection_examples():
    assert contains_any_top_cycle(K3)
    assert not contains_any_top_cycle(Ce)
    assert not contains_any_top_cycle(Cg)
    assert not contains_any_bottom_cycle(Ce)


def test_permutation_diagrams():
    assert permutation_diagram("231") == ChordDiagram.from_text("(1,5)(2,6)(3,4)")
    assert permutation_diagram("132") == ChordDiagram.from_text("(1,4)(2,6)(3,5)")
    assert permutation_diagram([2, 3, 1]) == permutation_diagram("231")
    assert is_permutation_diagram(Cb)
    # all sources precede all sinks in Ce, so it encodes a permutation too
    assert is_permutation_diagram(Ce)
    assert not is_permutation_diagram(ChordDiagram.from_text("(1,3)(2,5)(4,6)"))
    assert is_shifted_permutation_diagram(K3)


def test_in_class_examples():
    assert not in_class(K3, "triangle-free")
    assert in_class(Ce, "tree")
    assert in_class(Cc, "noncrossing")
    assert in_class(Cb, "one-terminal")
    with pytest.raises(ValueError):
        in_class(Ca, "no-such-class")


def test_class_names_cover_cli_surface():
    assert set(CLASS_NAMES) >= {
        "all",
        "connected",
        "one-terminal",
        "top-cycle-free",
        "bottom-cycle-free",
        "noncrossing",
        "nonnesting",
    }


def test_small_class_counts():
    # frozen from exhaustive sweeps; catalan(n) for the crossing-free and
    # nesting-free columns, stein values for connected
    for n, conn, noncross, nonnest in [(1, 1, 1, 1), (2, 1, 2, 2), (3, 4, 5, 5), (4, 27, 14, 14)]:
        ds = sweep(n)
        assert sum(in_class(d, "connected") for d in ds) == conn
        assert sum(in_class(d, "noncrossing") for d in ds) == noncross
        assert sum(in_class(d, "nonnesting") for d in ds) == nonnest
