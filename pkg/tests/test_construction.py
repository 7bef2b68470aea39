import hashlib
import itertools
import json

import numpy as np
import pytest

from tracecodes import (
    CodeParams,
    Field,
    ParameterError,
    RingElem,
    Variant,
    big_trace,
    coord_at,
    coord_index,
    derive_params,
    enumerate_coords,
    eval_field_subcode,
    evaluate,
    export_gray_words,
    group_action_spotcheck,
    is_unit,
    subcode_distribution,
)
from tracecodes import ring
from tracecodes.construction import (
    contains,
    coord_blocks,
    gray_symbols,
    subcode_is_injective,
)
from tracecodes.field import count_zero_traces
from tracecodes.ring import gray_word, random_element


# ---------------------------------------------------------------------------
# derived parameters
# ---------------------------------------------------------------------------

def test_derive_quadratic_full_lift(f9):
    dp = derive_params(CodeParams(f9, 1, Variant.LIFT))
    assert (dp.N1, dp.N2, dp.n) == (4, 1, 4)
    assert dp.length == 2916
    assert dp.gray_length == 11664


def test_derive_quadratic_n2(f9):
    dp = derive_params(CodeParams(f9, 2, Variant.LIFT))
    assert (dp.N1, dp.N2, dp.n) == (4, 2, 2)
    assert dp.length == 1458


def test_derive_quartic(f81):
    dp = derive_params(CodeParams(f81, 4, Variant.LIFT))
    assert (dp.N1, dp.N2, dp.n) == (40, 4, 10)
    assert dp.length == 10 * 3**12


def test_derive_units_ignores_n(f9):
    dp = derive_params(CodeParams(f9, 2, Variant.UNITS))
    assert dp.length == 8 * 729
    assert "ignored" in dp.note


def test_lcm_gcd_identity(f9, f25, f81):
    for f, N in [(f9, 2), (f25, 3), (f81, 4)]:
        dp = derive_params(CodeParams(f, N))
        k = (f.q - 1) // (f.p - 1)
        assert dp.N1 * dp.N2 == N * k


def test_divisibility_guard(f9):
    with pytest.raises(ParameterError, match="does not divide"):
        derive_params(CodeParams(f9, 7))


def test_codeword_count_guard():
    # 3^40 codewords would overflow 64-bit counters
    f = Field(3, 10)
    with pytest.raises(ParameterError, match="guard"):
        derive_params(CodeParams(f, 1))


def test_base_set_is_xi_powers(f9):
    dp = derive_params(CodeParams(f9, 1))
    assert dp.base_set == tuple(f9.exp_code(j) for j in range(4))


def test_base_set_single_element_edge(f9):
    dp = derive_params(CodeParams(f9, 8))
    assert dp.base_set == (1,)
    assert dp.n == 1


def test_base_set_representatives_distinct_mod_prime_units(f25):
    dp = derive_params(CodeParams(f25, 3))
    k = (f25.q - 1) // (f25.p - 1)
    residues = {f25.dlog(d) % k for d in dp.base_set}
    assert len(residues) == dp.n


# ---------------------------------------------------------------------------
# coordinate streams
# ---------------------------------------------------------------------------

def test_stream_starts_at_one(f9):
    first = next(enumerate_coords(CodeParams(f9, 1)))
    assert first == ring.one(f9)


def test_stream_is_restartable(f9):
    cp = CodeParams(f9, 1)
    a = list(itertools.islice(enumerate_coords(cp), 30))
    b = list(itertools.islice(enumerate_coords(cp), 30))
    assert a == b


def test_stream_size_and_units_lift(f9):
    cp = CodeParams(f9, 1)
    coords = list(enumerate_coords(cp))
    assert len(coords) == 2916
    assert all(is_unit(x) for x in coords)


def test_units_stream_size(f9):
    dp = derive_params(CodeParams(f9, 1, Variant.UNITS))
    count = sum(1 for _ in enumerate_coords(dp))
    assert count == 5832 == dp.length


def test_blocks_match_stream(f9):
    dp = derive_params(CodeParams(f9, 2))
    streamed = [(x.a, x.b, x.c, x.d) for x in enumerate_coords(dp)]
    from_blocks = []
    for x0, x1, x2, x3 in coord_blocks(dp, block_size=500):
        from_blocks.extend(zip(x0.tolist(), x1.tolist(), x2.tolist(), x3.tolist()))
    assert streamed == from_blocks


def test_partitions_cover_stream(f9):
    dp = derive_params(CodeParams(f9, 2))
    whole = []
    for k in range(3):
        for x0, x1, x2, x3 in coord_blocks(dp, block_size=999, part=(k, 3)):
            whole.extend(zip(x0.tolist(), x1.tolist(), x2.tolist(), x3.tolist()))
    assert whole == [(x.a, x.b, x.c, x.d) for x in enumerate_coords(dp)]


def test_coord_at_index_roundtrip(f9):
    dp = derive_params(CodeParams(f9, 1))
    for idx in (0, 1, 17, 2915):
        assert coord_index(dp, coord_at(dp, idx)) == idx


def test_membership(f9):
    dp = derive_params(CodeParams(f9, 1))
    assert contains(dp, ring.one(f9))
    assert not contains(dp, ring.u(f9))  # not a unit
    # unit whose constant coordinate is not a representative
    bad = RingElem(f9, 2, 0, 0, 0)
    assert not contains(dp, bad)
    assert contains(derive_params(CodeParams(f9, 1, Variant.UNITS)), bad)


def test_scalar_multiples_leave_the_lift(f9):
    # lambda * x stays among the units for every unit scalar, but returns to
    # the lift only at lambda = 1
    dp = derive_params(CodeParams(f9, 1))
    dpu = derive_params(CodeParams(f9, 1, Variant.UNITS))
    rng = np.random.default_rng(13)
    for _ in range(50):
        idx = int(rng.integers(0, dp.length))
        x = coord_at(dp, idx)
        for lam in (1, 2):
            lx = ring.scale(x, lam)
            assert contains(dpu, lx)
            assert contains(dp, lx) == (lam == 1)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def test_evaluate_zero_is_zero_word(f9):
    cp = CodeParams(f9, 2)
    assert all(not s for s in evaluate(ring.zero(f9), cp))


def test_evaluate_is_linear(f9):
    cp = CodeParams(f9, 2)
    rng = np.random.default_rng(14)
    for _ in range(3):
        r, s = random_element(f9, rng), random_element(f9, rng)
        summed = [a + b for a, b in zip(evaluate(r, cp), evaluate(s, cp))]
        assert summed == list(evaluate(r + s, cp))


def test_evaluation_is_injective_exhaustively(f9):
    # all 3^8 codewords pairwise distinct, by hashing the Gray streams
    dp = derive_params(CodeParams(f9, 1))
    digests = set()
    for coords in itertools.product(range(9), repeat=4):
        r = RingElem(f9, *coords)
        h = hashlib.blake2b(digest_size=16)
        for block in gray_symbols(r, dp):
            h.update(block.tobytes())
        digests.add(h.digest())
    assert len(digests) == 9**4


def test_gray_symbols_match_streamed_evaluation(f3):
    dp = derive_params(CodeParams(f3, 1))
    rng = np.random.default_rng(15)
    for _ in range(5):
        r = random_element(f3, rng)
        fast = np.concatenate([b.ravel() for b in gray_symbols(r, dp)])
        slow = gray_word(evaluate(r, dp))
        assert (fast == slow).all()


# ---------------------------------------------------------------------------
# field subcode
# ---------------------------------------------------------------------------

def test_subcode_zero_word(f9):
    assert eval_field_subcode(0, CodeParams(f9, 1)) == (0, 0, 0, 0)


def test_subcode_constant_weight_three(f9):
    cp = CodeParams(f9, 1)
    for b in range(1, 9):
        word = eval_field_subcode(b, cp)
        assert sum(1 for s in word if s) == 3


def test_subcode_weight_equals_n_minus_zero_traces(f25):
    dp = derive_params(CodeParams(f25, 3))
    for b in range(1, 25):
        word = eval_field_subcode(b, dp)
        weight = sum(1 for s in word if s)
        assert weight == dp.n - count_zero_traces(f25, b, dp.base_set)


def test_subcode_at_quartic_parameters(f81):
    dp = derive_params(CodeParams(f81, 4))
    words = {eval_field_subcode(b, dp) for b in f81.elements()}
    assert len(words) == 81
    assert all(len(w) == 10 for w in words)
    assert subcode_is_injective(dp)
    assert subcode_distribution(dp) == {0: 1, 6: 60, 9: 20}


# ---------------------------------------------------------------------------
# group action spot check
# ---------------------------------------------------------------------------

def test_spotcheck_identity_element(f9):
    rep = group_action_spotcheck(CodeParams(f9, 1), trials=2, g=ring.one(f9))
    assert rep.ok


def test_spotcheck_random_pairs(f9):
    rep = group_action_spotcheck(CodeParams(f9, 1), trials=50)
    assert rep.ok
    assert rep.trials == 50


def test_spotcheck_rejects_outsiders(f9):
    with pytest.raises(ParameterError, match="not in the coordinate set"):
        group_action_spotcheck(CodeParams(f9, 1), trials=1, g=ring.u(f9))


def test_spotcheck_size_guard(f81):
    with pytest.raises(ParameterError, match="restricted"):
        group_action_spotcheck(CodeParams(f81, 4), trials=1)


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def test_export_gray_words(tmp_path, f3):
    dp = derive_params(CodeParams(f3, 1))
    rs = [ring.zero(f3), ring.one(f3), ring.uv(f3)]
    data_path, sidecar_path = export_gray_words(dp, rs, tmp_path / "words.bin")
    blob = (tmp_path / "words.bin").read_bytes()
    assert len(blob) == 3 * dp.gray_length
    # row of the zero codeword is all zero bytes
    assert set(blob[:dp.gray_length]) == {0}
    # rows agree with the streamed evaluation
    row_one = np.frombuffer(blob[dp.gray_length:2 * dp.gray_length], dtype=np.uint8)
    assert (row_one == gray_word(evaluate(ring.one(f3), dp))).all()
    sidecar = json.loads((tmp_path / "words.bin.json").read_text())
    assert sidecar["p"] == 3 and sidecar["m"] == 1
    assert sidecar["variant"] == "lift"
    assert sidecar["ordering"] == "x0-major/lex-v1"
    assert sidecar["rows"] == 3
    assert sidecar["r_coords"][2] == [0, 0, 0, 1]
    # deterministic: exporting again gives identical bytes
    export_gray_words(dp, rs, tmp_path / "again.bin")
    assert (tmp_path / "again.bin").read_bytes() == blob
