"""Weight blocks, local braiding, generator matrices, and the truncated
simple-module trace route."""

import math
import random

import pytest

from qjones.braid import BraidWord, inverse, parse, random_knot_word, random_word
from qjones.errors import NonKnotClosureError
from qjones.ring import LaurentPoly, ONE, ZERO, aug, quantum_int
from qjones.verma import (
    BlockMatrix,
    evaluate_word,
    f_divided_action,
    generator_block,
    local_r_matrix,
    simple_module_trace,
    weight_basis,
)

S_MINUS_SINV = LaurentPoly({(0, 1, 0): 1, (0, -1, 0): -1})


# ----------------------------------------------------------------------
# weight bases


def test_weight_basis_size_matches_stars_and_bars():
    for n in range(1, 5):
        for r in range(0, 7):
            basis = weight_basis(n, r)
            assert basis.size == math.comb(r + n - 1, n - 1)
            assert len(set(basis.compositions)) == basis.size
            assert all(sum(c) == r and len(c) == n for c in basis.compositions)


def test_weight_basis_lookup_round_trips():
    basis = weight_basis(3, 4)
    for k, comp in enumerate(basis.compositions):
        assert basis.position(comp) == k
        assert basis.composition(k) == comp


def test_weight_basis_order_is_lexicographic():
    basis = weight_basis(2, 1)
    assert basis.compositions == ((0, 1), (1, 0))
    assert weight_basis(3, 2).compositions[0] == (0, 0, 2)


# ----------------------------------------------------------------------
# divided lowering action


def test_f_divided_action_unit_cases():
    for j in range(5):
        assert f_divided_action(0, j) == ONE
    assert f_divided_action(1, 0) == S_MINUS_SINV


def test_f_divided_action_truncates_under_color_specialization():
    for l in range(1, 4):
        assert aug(l).apply(f_divided_action(1, l)) == ZERO
        assert aug(l).apply(f_divided_action(l + 1, 0)) == ZERO
        # inside the window nothing collapses
        assert aug(l).apply(f_divided_action(1, l - 1)) != ZERO


# ----------------------------------------------------------------------
# local braiding blocks


def test_local_block_r0_is_one():
    local = local_r_matrix(0, 1)
    assert local.columns == ({0: ONE},)


def test_local_inverse_composes_to_identity():
    for r in range(0, 5):
        forward = local_r_matrix(r, 1)
        backward = local_r_matrix(r, -1)
        for composed_first, composed_second in ((forward, backward), (backward, forward)):
            for a in range(r + 1):
                acc = {}
                for mid, coeff in composed_first.columns[a].items():
                    for out, coeff2 in composed_second.columns[mid].items():
                        acc[out] = acc.get(out, ZERO) + coeff2 * coeff
                acc = {k: v for k, v in acc.items() if v}
                assert acc == {a: ONE}


def test_local_entries_live_in_q_s_only():
    for r in range(0, 5):
        for sign in (1, -1):
            for column in local_r_matrix(r, sign).columns:
                for coeff in column.values():
                    assert not coeff.involves("t")


# ----------------------------------------------------------------------
# generator blocks


def test_generator_block_r0_is_identity():
    for n in range(2, 5):
        for i in range(1, n):
            assert generator_block(n, 0, i) == BlockMatrix.identity(n, 0)


def test_generator_inverse_blocks():
    for n in range(2, 5):
        for r in range(0, 6):
            identity = BlockMatrix.identity(n, r)
            for i in range(1, n):
                plus = generator_block(n, r, i, 1)
                minus = generator_block(n, r, i, -1)
                assert plus @ minus == identity
                assert minus @ plus == identity


def test_braid_relation_exact():
    for n in (3, 4):
        for r in range(0, 5):
            for i in range(1, n - 1):
                g_i = generator_block(n, r, i)
                g_j = generator_block(n, r, i + 1)
                assert g_i @ g_j @ g_i == g_j @ g_i @ g_j


def test_far_commutation_exact():
    for r in range(0, 5):
        g1 = generator_block(4, r, 1)
        g3 = generator_block(4, r, 3)
        assert g1 @ g3 == g3 @ g1


def test_generator_block_index_validation():
    with pytest.raises(ValueError):
        generator_block(3, 2, 3)
    with pytest.raises(ValueError):
        generator_block(3, 2, 0)


def test_blocks_stay_inside_their_weight_block():
    # structural: every output index must be a valid basis position
    for n in (2, 3):
        for r in range(0, 5):
            basis = weight_basis(n, r)
            for i in range(1, n):
                block = generator_block(n, r, i)
                assert block.dim == basis.size
                for col, column in block.cols.items():
                    assert 0 <= col < basis.size
                    for row in column:
                        assert 0 <= row < basis.size


def test_evaluate_word_identity_and_inverses():
    rng = random.Random(41)
    empty = BraidWord(3, ())
    assert evaluate_word(empty, 3) == BlockMatrix.identity(3, 3)
    for _ in range(10):
        word = random_word(3, rng.randint(1, 5), rng)
        round_trip = BraidWord(3, word.letters + inverse(word).letters)
        for r in range(0, 4):
            assert evaluate_word(round_trip, r) == BlockMatrix.identity(3, r)


def test_evaluate_word_respects_braid_relation_rewrites():
    # substituting s1 s2 s1 -> s2 s1 s2 inside a random word leaves every
    # block matrix unchanged
    rng = random.Random(97)
    for _ in range(8):
        prefix = random_word(3, rng.randint(0, 3), rng).letters
        suffix = random_word(3, rng.randint(0, 3), rng).letters
        left = BraidWord(3, prefix + ((1, 1), (2, 1), (1, 1)) + suffix)
        right = BraidWord(3, prefix + ((2, 1), (1, 1), (2, 1)) + suffix)
        for r in range(0, 4):
            assert evaluate_word(left, r) == evaluate_word(right, r)


def test_triplet_dump_is_deterministic_and_sorted():
    block = generator_block(2, 1, 1)
    dump = block.to_triplets()
    assert dump == "\n".join(sorted(dump.splitlines()))
    assert dump == generator_block(2, 1, 1).to_triplets()
    # golden: basis ((0,1), (1,0)); the generator swaps and adds the
    # s - s^-1 lowering tail on the second column
    assert dump == "(0, 1) s^-1\n(1, 0) s^-1\n(1, 1) 1 - s^-2"


# ----------------------------------------------------------------------
# truncated simple-module route


def test_simple_module_trace_unknot_is_quantum_integer():
    for l in range(1, 6):
        trace = simple_module_trace(BraidWord(1, ()), l)
        assert trace == quantum_int(l + 1)


def test_simple_module_trace_trefoil_matches_anchor():
    trace = simple_module_trace(parse("[1,1,1]", 2), 1)
    anchor = LaurentPoly.parse("q^-1 + q^-3 + q^-5 - q^-9")
    assert LaurentPoly.q_power(-3) * trace == anchor


def test_simple_module_trace_rejects_non_knots():
    with pytest.raises(NonKnotClosureError):
        simple_module_trace(BraidWord(2, ()), 1)


def test_simple_module_trace_agrees_with_weight_route():
    # the two code paths are oracles for each other
    rng = random.Random(1234)
    for _ in range(8):
        n = rng.choice((2, 3))
        word = random_knot_word(n, rng.randint(1, 6), rng)
        for l in (1, 2):
            weighted = ZERO
            for r in range(0, n * l + 1):
                trace_r = aug(l).apply(evaluate_word(word, r).trace())
                weighted = weighted + trace_r * LaurentPoly.q_power(2 * r - n * l)
            assert weighted == simple_module_trace(word, l)
