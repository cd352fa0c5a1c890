import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superlrc.algebra import rank
from superlrc.designs import affine_plane_lines, identical, steiner_triple_bose
from superlrc.lrc import (
    DecodingError,
    EvaluationPlan,
    LocalRepairError,
    LrcCode,
    LrcError,
    LrcParams,
    PlanError,
    construct,
    construct_from_family,
    encode,
    global_check_sums,
    global_decode,
    identical_plan,
    local_repair,
    plan_from_family,
    recover,
    sunflower_plan,
)
from superlrc.verify import check_mds_partition, min_distance


def blanked(word, erased):
    return [None if j in erased else int(x) for j, x in enumerate(word)]


def test_params():
    p = LrcParams(7, 3, 3, 1, 5)
    assert (p.n, p.k, p.block, p.target_distance) == (25, 13, 5, 5)
    for bad in [(7, 3, 3, 0, 5), (7, 3, 3, 4, 5), (7, 3, 1, 1, 5), (7, 0, 2, 1, 1), (7, 3, 3, 1, 0)]:
        with pytest.raises(LrcError):
            LrcParams(*bad)


def test_repetition_example():
    p = LrcParams(5, 1, 2, 1, 2)
    code = construct(p, identical_plan(p))
    assert (code.n, code.k) == (4, 2)
    assert encode(code, [3, 4]).tolist() == [3, 3, 4, 4]
    p = LrcParams(7, 1, 2, 1, 2)
    assert encode(construct(p, identical_plan(p)), [3, 5]).tolist() == [3, 3, 5, 5]


def test_gf7_code(code_q7):
    assert (code_q7.n, code_q7.k, code_q7.claimed_d) == (25, 13, 5)
    assert code_q7.plan.alphas == (5, 6)
    assert code_q7.plan.sets == ((0, 1, 2, 3, 4),) * 5
    assert code_q7.repair_sets[1] == (5, 6, 7, 8, 9)


def test_sunflower_code(code_q13):
    assert (code_q13.n, code_q13.k) == (15, 9)
    assert code_q13.n > code_q13.q
    assert code_q13.plan.alphas == (11,)
    assert check_mds_partition(code_q13)


def test_affine_plane_plan(code_q29):
    assert code_q29.plan.alphas == (25, 26, 27)
    assert (code_q29.n, code_q29.k) == (150, 117)


def test_plan_validation():
    p = LrcParams(7, 3, 3, 1, 2)
    with pytest.raises(PlanError):
        EvaluationPlan((5,), ((0, 1, 2, 3, 4),) * 2).validate(p)
    with pytest.raises(PlanError):
        EvaluationPlan((5, 5), ((0, 1, 2, 3, 4),) * 2).validate(p)
    with pytest.raises(PlanError):
        EvaluationPlan((4, 6), ((0, 1, 2, 3, 4),) * 2).validate(p)
    with pytest.raises(PlanError):
        EvaluationPlan((5, 6), ((0, 1, 2, 3, 3),) * 2).validate(p)
    with pytest.raises(PlanError):
        EvaluationPlan((5, 6), ((0, 1, 2, 3),) * 2).validate(p)
    with pytest.raises(PlanError):
        EvaluationPlan((5, 6), ((0, 1, 2, 3, 4),)).validate(p)
    with pytest.raises(PlanError):
        plan_from_family(LrcParams(5, 3, 3, 1, 2), identical(2, 5))


def test_sts_plan_fits_field():
    p = LrcParams(19, 2, 2, 1, 10)
    plan = plan_from_family(p, steiner_triple_bose(15))
    assert plan.alphas == (15,)
    code = construct(p, plan)
    assert check_mds_partition(code)
    assert min_distance(code.field, code.G, cap=4).d == 3


def test_code_invariants_rejected():
    F = construct(LrcParams(5, 1, 2, 1, 2), identical_plan(LrcParams(5, 1, 2, 1, 2))).field
    with pytest.raises(LrcError):
        LrcCode(F, 1, 2, [[1, 1, 0, 0], [2, 2, 0, 0]], [[1, 4, 0, 0]], ((0, 1), (2, 3)), 2)
    with pytest.raises(LrcError):
        LrcCode(F, 1, 2, [[1, 1, 0, 0], [0, 0, 1, 1]], [[1, 1, 0, 0], [0, 0, 1, 4]], ((0, 1), (2, 3)), 2)
    with pytest.raises(LrcError):
        LrcCode(F, 1, 2, [[1, 1, 0, 0], [0, 0, 1, 1]], [[1, 4, 0, 0], [0, 0, 1, 4]], ((0, 1), (2, 4)), 2)


def test_encode_examples(code_q7):
    F = code_q7.field
    assert not np.any(encode(code_q7, [0] * 13))
    e = [1] + [0] * 12
    assert encode(code_q7, e).tolist() == code_q7.G[0].tolist()
    with pytest.raises(LrcError):
        encode(code_q7, [1, 2])
    word = encode(code_q7, [x % 7 for x in range(13)])
    assert not np.any(F.matmul(code_q7.H, word.reshape(-1, 1)))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=13, max_size=13), st.lists(st.integers(0, 6), min_size=13, max_size=13),
       st.integers(0, 6), st.integers(0, 6))
def test_encode_linear(u, u2, a, b):
    p = LrcParams(7, 3, 3, 1, 5)
    code = _cached(p)
    F = code.field
    lhs = encode(code, F.add(F.mul(F.array(u), a), F.mul(F.array(u2), b)))
    rhs = F.add(F.mul(encode(code, u), a), F.mul(encode(code, u2), b))
    assert lhs.tolist() == rhs.tolist()


_CACHE = {}


def _cached(p):
    if p not in _CACHE:
        _CACHE[p] = construct(p, identical_plan(p))
    return _CACHE[p]


def test_local_repair_examples(code_q7):
    p = LrcParams(5, 1, 2, 1, 2)
    rep = construct(p, identical_plan(p))
    assert local_repair(rep, [None, 3, 4, 4], [0]).tolist() == [3, 3, 4, 4]
    word = encode(code_q7, [x % 7 for x in range(13)])
    rng = np.random.default_rng(1)
    for R in code_q7.repair_sets:
        E = [int(x) for x in rng.choice(R, 2, replace=False)]
        assert local_repair(code_q7, blanked(word, E), E).tolist() == word.tolist()
    with pytest.raises(LocalRepairError):
        local_repair(code_q7, blanked(word, [0, 1, 2]), [0, 1, 2])


def test_local_repair_reads_only_affected_sets(code_q7):
    word = encode(code_q7, [x % 7 for x in range(13)])
    garbage = [int(x) for x in word]
    for j in range(10, 25):
        garbage[j] = (garbage[j] + 1) % 7  # corrupt untouched sets
    out = local_repair(code_q7, blanked(garbage, [0, 3]), [0, 3])
    assert out[:5].tolist() == word[:5].tolist()


def test_global_decode_examples(code_q7):
    word = encode(code_q7, [3] * 13)
    assert global_decode(code_q7, word, []).tolist() == word.tolist()
    rng = np.random.default_rng(2)
    for _ in range(200):
        E = [int(x) for x in rng.choice(25, 4, replace=False)]
        assert global_decode(code_q7, blanked(word, E), E).tolist() == word.tolist()
    with pytest.raises(DecodingError) as exc:
        global_decode(code_q7, [None] * 25, range(25))
    assert exc.value.deficiency == 13
    with pytest.raises(LrcError):
        global_decode(code_q7, blanked(word, [30]), [30])
    with pytest.raises(LrcError):
        global_decode(code_q7, blanked(word, [0]), [])


def test_global_decode_rejects_non_codeword(code_q7):
    word = [int(x) for x in encode(code_q7, [1] * 13)]
    word[5] = (word[5] + 1) % 7
    with pytest.raises(DecodingError):
        global_decode(code_q7, blanked(word, [0]), [0])


def test_recover_falls_back(code_q7):
    word = encode(code_q7, [x % 7 for x in range(13)])
    out, how = recover(code_q7, blanked(word, [0, 1, 2]), [0, 1, 2])
    assert how == "global" and out.tolist() == word.tolist()
    out, how = recover(code_q7, blanked(word, [0, 7]), [0, 7])
    assert how == "local" and out.tolist() == word.tolist()


def _some_codes():
    out = []
    for q, r, delta, v, w in [(7, 3, 3, 1, 5), (11, 3, 2, 2, 4), (13, 2, 3, 1, 3), (8, 2, 2, 1, 4), (9, 3, 2, 2, 3)]:
        p = LrcParams(q, r, delta, v, w)
        out.append(construct(p, identical_plan(p)))
    p = LrcParams(13, 2, 2, 1, 5)
    out.append(construct(p, sunflower_plan(p)))
    return out


@pytest.mark.parametrize("code", _some_codes(), ids=lambda c: f"q{c.q}n{c.n}k{c.k}")
def test_check_sum_invariant(code):
    rng = np.random.default_rng(3)
    F, p = code.field, code.params
    for _ in range(20):
        word = encode(code, [int(x) for x in rng.integers(0, F.q, code.k)])
        picks = [sorted(rng.choice(p.block, p.r, replace=False).tolist()) for _ in range(p.w)]
        assert global_check_sums(code, word, picks) == [0] * (p.r - p.v)


@pytest.mark.parametrize("code", _some_codes(), ids=lambda c: f"q{c.q}n{c.n}k{c.k}")
def test_v_erasures_in_one_set(code):
    rng = np.random.default_rng(4)
    p = code.params
    word = encode(code, [int(x) for x in rng.integers(0, code.q, code.k)])
    for R in code.repair_sets:
        E = [int(x) for x in rng.choice(R, p.v, replace=False)]
        assert global_decode(code, blanked(word, E), E).tolist() == word.tolist()


@pytest.mark.parametrize("code", _some_codes(), ids=lambda c: f"q{c.q}n{c.n}k{c.k}")
def test_local_and_global_agree(code):
    rng = np.random.default_rng(5)
    word = encode(code, [int(x) for x in rng.integers(0, code.q, code.k)])
    for _ in range(10):
        E = []
        for R in code.repair_sets:
            E += [int(x) for x in rng.choice(R, int(rng.integers(0, code.delta)), replace=False)]
        try:
            g = global_decode(code, blanked(word, E), E)
        except DecodingError:
            continue
        assert local_repair(code, blanked(word, E), E).tolist() == g.tolist()


@pytest.mark.parametrize("code", _some_codes(), ids=lambda c: f"q{c.q}n{c.n}k{c.k}")
def test_constructed_codes_are_mds_partitioned(code):
    assert check_mds_partition(code)
    assert rank(code.field, code.G) == code.k


def test_check_sums_need_plan():
    from superlrc.lrc import replicated_rs_fixture

    f = replicated_rs_fixture(7, 4, 2)
    with pytest.raises(LrcError):
        global_check_sums(f, encode(f, [1, 1]))


def test_construct_from_family_matches_plan():
    p = LrcParams(29, 4, 2, 1, 3)
    a = construct_from_family(p, affine_plane_lines(5))
    assert a.plan == plan_from_family(p, affine_plane_lines(5))
