import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from spinrt import corpus
from spinrt.errors import NoSpinSolution
from spinrt.scalar import Mod2C, ScalarContext
from spinrt.spin import (
    CONVENTIONS, SpinColoring, char_residual, eval_curve, is_admissible, is_computable,
    parallel_values, residual_is_zero, smith_normal_form, solve_spin,
)


def _det(M):
    return round(np.linalg.det(np.asarray(M, dtype=float))) if len(M) else 1


int_matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


@given(int_matrices)
def test_smith_normal_form(A):
    U, D, V = smith_normal_form(A)
    assert (np.array(U) @ np.array(A) @ np.array(V)).tolist() == D
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    m, n = len(A), len(A[0])
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)


@given(int_matrices)
def test_smith_invariants_match_gcd_of_entries(A):
    _, D, _ = smith_normal_form(A)
    g = 0
    for row in A:
        for x in row:
            g = math.gcd(g, x)
    assert D[0][0] == g


@pytest.mark.parametrize("B, count", [
    ([[1]], 1), ([[4]], 4), ([[8]], 8), ([[-3]], 3), ([[2, 1], [1, 2]], 3),
    ([[0, 1], [1, 0]], 1), ([[2, 0], [0, 2]], 4),
])
def test_solution_counts(B, count):
    sols = solve_spin(B, np.zeros((len(B), 0), dtype=int), [])
    assert sols.count == count
    reps = sols.representatives()
    assert len(reps) == count
    for c in reps:
        assert residual_is_zero(char_residual(B, np.zeros((len(B), 0)), c, []))
    # pairwise distinct
    for i, a in enumerate(reps):
        for b in reps[:i]:
            assert any(Mod2C(x) != y for x, y in zip(a, b))


def test_lens_space_spin_values():
    reps = solve_spin([[4]], np.zeros((1, 0)), []).representatives()
    assert sorted(Mod2C(c[0]).value.real for c in reps) == pytest.approx([0, 0.5, 1, 1.5])


def test_zero_framing_has_free_direction():
    sols = solve_spin([[0]], np.zeros((1, 0)), [])
    assert sols.free_rank == 1 and sols.count is None
    with pytest.raises(ValueError):
        sols.representatives()


def test_obstructed():
    # 0-framed unknot with a physical meridian: the parallel forces w = 1 mod 2
    with pytest.raises(NoSpinSolution):
        solve_spin([[0]], [[1]], [0.5])
    sols = solve_spin([[0]], [[1]], [0])
    assert sols.free_rank == 1


def test_non_symmetric_rejected():
    with pytest.raises(ValueError):
        solve_spin([[1, 2], [0, 1]], np.zeros((2, 0)), [])


sym = st.integers(1, 3).flatmap(
    lambda m: st.lists(st.integers(-5, 5), min_size=m * (m + 1) // 2,
                       max_size=m * (m + 1) // 2).map(lambda xs: (m, xs)))
w_values = st.complex_numbers(min_magnitude=0, max_magnitude=2, allow_nan=False,
                              allow_infinity=False)


@given(sym, st.lists(w_values, min_size=0, max_size=2), st.data())
def test_solutions_satisfy_the_equation(mx, w, data):
    m, xs = mx
    B = np.zeros((m, m), dtype=int)
    B[np.triu_indices(m)] = xs
    B = B + np.triu(B, 1).T
    lk = np.array(data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=len(w),
                                              max_size=len(w)), min_size=m, max_size=m)),
                  dtype=int).reshape(m, len(w))
    assume(round(abs(np.linalg.det(B))) not in (0,) and abs(np.linalg.det(B)) < 200)
    sols = solve_spin(B, lk, w)
    assert sols.count == round(abs(np.linalg.det(B)))
    for c in sols.representatives()[:10]:
        assert residual_is_zero(char_residual(B, lk, c, w))
        vals = parallel_values(B, lk, SpinColoring(c, tuple(w)))
        assert all(v == 1 for v in vals)


def test_parallels_calibrate_the_convention():
    for p in (corpus.lens_space(4, 0.5), corpus.lens_with_meridian(3, 0.4),
              corpus.s3_plus_one(1)):
        B, lk, _ = p.linking
        assert all(v == 1 for v in parallel_values(B, lk, p.spin))
        assert residual_is_zero(char_residual(B, lk, p.spin.c, p.spin.w, CONVENTIONS[0]))
    bad = corpus.s3_plus_one(0.5)
    B, lk, _ = bad.linking
    assert parallel_values(B, lk, bad.spin)[0] != 1
    assert not residual_is_zero(char_residual(B, lk, bad.spin.c, bad.spin.w))


def test_eval_curve():
    col = SpinColoring((0.5,), (0.25,))
    assert eval_curve(0, [1], [0], col) == Mod2C(1.5)
    assert eval_curve(3, [2], [-1], col) == Mod2C(4 + 1 - 0.25)


def test_computability_predicates():
    ctx = ScalarContext(4)
    assert is_computable(corpus.lens_space(4, 0.5), ctx)
    assert not is_computable(corpus.lens_space(4, 1.0), ctx)
    assert is_admissible(corpus.lens_space(4, 0.5), ctx)
    assert is_admissible(corpus.lens_with_meridian(3, 0.4), ctx)
