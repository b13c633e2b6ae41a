"""The terminal-flip bijection and its relatives: psi/chi, alpha/beta,
the Stirling-word and tree encodings, and root-share decomposition."""

import pytest
from hypothesis import given, strategies as st

from chordlab.bijections import (
    alpha,
    beta,
    chi,
    eta,
    eta_inverse,
    psi,
    root_share_compose,
    root_share_decompose,
    theta,
    theta_inverse,
    zeta,
    zeta_inverse,
)
from chordlab.diagram import ChordDiagram
from chordlab.structure import is_one_terminal, t1, vertex_connectivity
from conftest import Ca, Cb, Cc, Cd, Ce, Cf, Cg, K3, N2, sweep


@st.composite
def diagrams(draw, min_size=1, max_size=5):
    n = draw(st.integers(min_size, max_size))
    pts = draw(st.permutations(list(range(1, 2 * n + 1))))
    return ChordDiagram((pts[2 * i], pts[2 * i + 1]) for i in range(n))


# ------------------------------------------------------------------- psi / chi


def test_psi_examples():
    assert psi(Cb) == Ca
    assert psi(Ce) == N2
    assert psi(Cf) == Cc
    assert psi(Ca) == ChordDiagram.empty()


def test_chi_examples():
    assert chi(Ca) == Cb
    assert chi(Cc) == Cf
    assert chi(ChordDiagram.empty()) == Ca


def test_psi_rejects_diagrams_outside_its_domain():
    with pytest.raises(ValueError):
        psi(Cd)
    with pytest.raises(ValueError):
        psi(Cc)


@given(diagrams(max_size=4))
def test_chi_lands_one_terminal_and_psi_inverts_it(d):
    lift = chi(d)
    assert lift.n == d.n + 1
    assert is_one_terminal(lift)
    assert psi(lift) == d


def test_psi_statistic_transfer_exhaustive():
    # crossings drop by n-1, nestings carry over
    for n in range(1, 6):
        for d in sweep(n):
            if not is_one_terminal(d):
                continue
            img = psi(d)
            assert img.crossings() == d.crossings() - (n - 1)
            assert img.nestings() == d.nestings()


def test_psi_connectivity_drop_witness():
    # a 2-connected one-terminal diagram whose image is disconnected
    d = ChordDiagram.from_text("(1,4)(2,7)(3,6)(5,8)")
    assert is_one_terminal(d)
    assert vertex_connectivity(d) == 2
    assert vertex_connectivity(psi(d)) == 0


# ----------------------------------------------------------------- alpha / beta


def test_alpha_examples():
    assert alpha(Ce) == [(Ca, (1,)), (Ca, (2,))]
    assert alpha(K3) == [(Ca, (2,)), (Ca, (1,))]
    assert alpha(Cg) == [(Cb, (1, 2)), (Ca, (3,))]


def test_beta_examples():
    assert beta([(Ca, (1,)), (Ca, (2,))]) == Ce
    assert beta([(Ca, (2,)), (Ca, (1,))]) == K3
    assert beta([(Cb, (1, 2)), (Ca, (3,))]) == Cg


def test_alpha_beta_round_trip_exhaustive():
    for n in range(2, 6):
        for d in sweep(n):
            if d.is_connected():
                assert beta(alpha(d)) == d


def test_alpha_blocks_partition_below_first_terminal():
    for n in range(2, 6):
        for d in sweep(n):
            if not d.is_connected():
                continue
            parts = alpha(d)
            flat = sorted(p for _, block in parts for p in block)
            assert flat == list(range(1, t1(d)))
            assert all(1 <= len(b) <= t1(part) for part, b in parts)


def test_non_interval_alpha_block_first_appears_at_size_four():
    # search result: no connected diagram of size <= 3 produces a
    # non-interval block, and this size-4 witness does
    def has_gap(d):
        for _, block in alpha(d):
            s = sorted(block)
            if s != list(range(s[0], s[0] + len(s))):
                return True
        return False

    for n in range(2, 4):
        assert not any(has_gap(d) for d in sweep(n) if d.is_connected())
    witness = ChordDiagram.from_text("(1,4)(2,6)(3,7)(5,8)")
    assert alpha(witness) == [(Cb, (1, 3)), (Ca, (2,))]
    assert has_gap(witness)


# ------------------------------------------------------------------ root share


def test_root_share_examples():
    assert root_share_decompose(K3) == (Ca, Cb, 2)
    assert root_share_decompose(Ce) == (Ca, Cb, 3)
    assert root_share_compose(Ca, Ca, 1) == Cb


def test_root_share_round_trip_exhaustive():
    for n in range(2, 6):
        for d in sweep(n):
            if d.is_connected():
                c1, c2, idx = root_share_decompose(d)
                assert root_share_compose(c1, c2, idx) == d


def test_root_share_domain_errors():
    with pytest.raises(ValueError):
        root_share_decompose(Ca)
    with pytest.raises(ValueError):
        root_share_decompose(Cc)
    with pytest.raises(ValueError):
        root_share_compose(Ca, Ca, 5)


# ---------------------------------------------------------------- word encoding


def test_zeta_examples():
    assert zeta(Cb) == (1, 2, 2, 1)
    assert zeta(Cc) == (2, 2, 1, 1)
    assert zeta(N2) == (1, 1, 2, 2)
    assert zeta(ChordDiagram.empty()) == ()


def test_zeta_inverse_examples():
    assert zeta_inverse((1, 2, 2, 1)) == Cb
    assert zeta_inverse(()) == ChordDiagram.empty()
    with pytest.raises(ValueError):
        zeta_inverse((1, 2, 1, 2))
    with pytest.raises(ValueError):
        zeta_inverse((1, 1, 1, 1))


@given(diagrams(max_size=5))
def test_zeta_round_trip_and_word_shape(d):
    w = zeta(d)
    assert len(w) == 2 * d.n
    assert sorted(w) == sorted(list(range(1, d.n + 1)) * 2)
    assert zeta_inverse(w) == d


def test_one_terminal_reads_off_the_word_ends():
    # a diagram is one-terminal exactly when its word starts 1 and ends 1
    for n in range(1, 6):
        for d in sweep(n):
            w = zeta(d)
            assert is_one_terminal(d) == (w[0] == 1 and w[-1] == 1)


def test_zeta_intertwines_psi_with_deleting_both_ones():
    for n in range(1, 6):
        for d in sweep(n):
            if not is_one_terminal(d):
                continue
            w = zeta(d)
            shifted = tuple(x - 1 for x in w if x != 1)
            assert zeta(psi(d)) == shifted


# ---------------------------------------------------------------- tree encoding


def test_theta_examples():
    assert theta(Ca) == (0, ())
    assert theta(Cb) == (0, ((1, ()),))
    assert theta(Ce) == (0, ((1, ()), (2, ())))


def test_theta_round_trip_on_one_terminal_diagrams():
    for n in range(1, 6):
        for d in sweep(n):
            if is_one_terminal(d):
                assert theta_inverse(theta(d)) == d


def test_eta_examples():
    path = (0, ((1, ((2, ()),)),))
    star = (0, ((1, ()), (2, ())))
    assert eta(path) == (1, 2, 2, 1)
    assert eta(star) == (1, 1, 2, 2)
    assert eta((0, ())) == ()
    assert eta_inverse((1, 2, 2, 1)) == path


def test_eta_round_trip_over_small_words():
    def words(n):
        if n == 0:
            yield ()
            return
        for w in words(n - 1):
            for gap in range(len(w) + 1):
                yield w[:gap] + (n, n) + w[gap:]

    for n in range(0, 5):
        for w in words(n):
            assert eta(eta_inverse(w)) == w


def test_word_to_diagram_composites_differ():
    # both composites send a size-n word to a size-n diagram, but they are
    # different maps: the smallest separating word
    w = (1, 2, 2, 1)
    direct = zeta_inverse(w)
    via_trees = psi(theta_inverse(eta_inverse(w)))
    assert direct == Cb
    assert via_trees == Cc
    assert direct != via_trees
