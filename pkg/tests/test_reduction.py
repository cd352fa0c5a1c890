import numpy as np
import pytest

from superlrc.algebra import rank
from superlrc.lrc import (
    LrcCode,
    LrcError,
    LrcParams,
    ReductionError,
    construct,
    delta_reduce,
    identical_plan,
    m2_reduce,
    puncture_reduce,
    replicated_rs_fixture,
)
from superlrc.verify import certify_optimal, check_locality, min_distance, min_distance_from_parity


def test_delta_reduce_gf7(code_q7):
    red = delta_reduce(code_q7)
    assert (red.n, red.k, red.r, red.delta) == (20, 13, 3, 2)
    assert red.claimed_d == 3
    assert check_locality(red)
    assert all(len(R) == 4 for R in red.repair_sets)
    assert min_distance(red.field, red.G, cap=3).d is None or min_distance(red.field, red.G, cap=3).d >= 3
    assert red.params == LrcParams(7, 3, 2, 1, 5)


@pytest.mark.parametrize("q,r,delta,v,w", [(11, 2, 4, 1, 3), (13, 3, 3, 2, 3), (9, 2, 3, 2, 3), (16, 3, 4, 1, 2)])
def test_delta_reduce_distance_floor(q, r, delta, v, w):
    p = LrcParams(q, r, delta, v, w)
    code = construct(p, identical_plan(p))
    red = delta_reduce(code)
    assert (red.n, red.k) == (w * (r + 1), code.k)
    floor = 2 * ((code.claimed_d - 1) // delta) + 1
    res = min_distance(red.field, red.G, cap=floor - 1)
    assert res.d is None  # no codeword lighter than the floor
    assert check_locality(red)


def test_delta_reduce_single_block():
    p = LrcParams(11, 3, 4, 3, 1)
    code = construct(p, identical_plan(p))
    red = delta_reduce(code)
    assert (red.n, red.k) == (4, 3)
    assert rank(red.field, red.G) == 3


def test_delta_reduce_preconditions(code_q7, code_q13):
    with pytest.raises(ReductionError):
        delta_reduce(code_q13)
    shifted = tuple(tuple((x + 1) % 25 for x in R) for R in code_q7.repair_sets)
    bad = LrcCode(code_q7.field, 3, 3, code_q7.G, code_q7.H, shifted, 5)
    with pytest.raises(ReductionError):
        delta_reduce(bad)


def test_m2_on_reduced_code(code_q7):
    red = delta_reduce(code_q7)
    M = m2_reduce(red)
    assert M.shape == (red.n - red.k - 5, 15)
    res = min_distance_from_parity(red.field, M, cap=1)
    assert res.d is None  # distance >= 2


def test_m2_repetition_fixture():
    f = replicated_rs_fixture(7, 4, 2)
    M = m2_reduce(f)
    assert M.shape == (2, 4)
    # input distance 6 >= 2t+1 with t = 2, so the difference code has distance >= 3
    assert min_distance_from_parity(f.field, M, cap=2).d is None


def test_m2_independent_of_global_complement(code_q13):
    F = code_q13.field
    base = m2_reduce(code_q13)
    H2 = code_q13.H[::-1].copy()
    H2[0] = F.add(H2[0], H2[1])
    other = LrcCode(F, code_q13.r, 2, code_q13.G, H2, code_q13.repair_sets, code_q13.claimed_d)
    assert rank(F, np.vstack([base, m2_reduce(other)])) == rank(F, base)


def test_m2_guards():
    p = LrcParams(5, 1, 2, 1, 1)
    with pytest.raises(ReductionError):
        m2_reduce(construct(p, identical_plan(p)))
    with pytest.raises(ReductionError):
        m2_reduce(replicated_rs_fixture(7, 4, 3))


def test_fixture_examples():
    f = replicated_rs_fixture(7, 4, 2)
    assert (f.n, f.k, f.r, f.delta, f.claimed_d) == (8, 2, 1, 2, 6)
    c = certify_optimal(f)
    assert (c.d, c.bound, c.optimal) == (6, 6, True)
    g = replicated_rs_fixture(7, 3, 3)
    assert (g.n, g.k) == (9, 2) and certify_optimal(g).d == 6
    with pytest.raises(LrcError):
        replicated_rs_fixture(7, 4, 1)
    with pytest.raises(LrcError):
        replicated_rs_fixture(4, 4, 2)


def test_puncture_fixture():
    out = puncture_reduce(replicated_rs_fixture(7, 4, 2), 6)
    assert (out.n, out.k, out.claimed_d) == (4, 2, 2)
    c = certify_optimal(out)
    assert c.optimal and c.d == 2


@pytest.mark.parametrize("q,points,copies", [(5, 3, 2), (7, 5, 2), (7, 4, 3), (11, 6, 2), (8, 4, 3)])
def test_puncture_keeps_optimality(q, points, copies):
    f = replicated_rs_fixture(q, points, copies)
    cert = certify_optimal(f)
    assert cert.optimal
    out = puncture_reduce(f, cert.d)
    eps = -(-(cert.d - 1) // copies) - 1
    assert out.n == f.n - eps * copies and out.k == 2
    c2 = certify_optimal(out)
    assert c2.optimal and c2.d == cert.d - eps * copies == out.claimed_d
    assert check_locality(out)


def test_puncture_preconditions(code_q7):
    with pytest.raises(ReductionError):
        puncture_reduce(code_q7, 5)
    with pytest.raises(ReductionError):
        puncture_reduce(replicated_rs_fixture(7, 4, 2), 5)
    p = LrcParams(7, 2, 2, 2, 1)
    with pytest.raises(ReductionError):
        puncture_reduce(construct(p, identical_plan(p)), 2)
