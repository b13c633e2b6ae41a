"""Shared fixtures: the named small diagrams and cached exhaustive sweeps."""

import pytest

from chordlab.diagram import ChordDiagram
from chordlab.enumeration import all_diagrams

# named fixtures used throughout the suite
Ca = ChordDiagram.from_text("(1,2)")
Cb = ChordDiagram.from_text("(1,3)(2,4)")
Cc = ChordDiagram.from_text("(1,2)(3,4)")
Cd = ChordDiagram.from_text("(1,4)(2,6)(3,5)")
Ce = ChordDiagram.from_text("(1,5)(2,4)(3,6)")
Cf = ChordDiagram.from_text("(1,3)(2,5)(4,6)")
K3 = ChordDiagram.from_text("(1,4)(2,5)(3,6)")
Cg = ChordDiagram.from_text("(1,3)(2,7)(4,6)(5,8)")
N2 = ChordDiagram.from_text("(1,4)(2,3)")

_sweep_cache: dict[int, tuple[ChordDiagram, ...]] = {}


def sweep(n: int) -> tuple[ChordDiagram, ...]:
    """All diagrams of size n, enumerated once per test session."""
    if n not in _sweep_cache:
        _sweep_cache[n] = tuple(all_diagrams(n))
    return _sweep_cache[n]


@pytest.fixture(scope="session")
def diagrams_by_size():
    return sweep
