import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinrt import corpus, diagram, kernels
from spinrt.diagram import (
    Event, OpenTangle, TangleDiagram, choose_open, eps_shift_check, evaluate_rt, f_prime,
    parse_events, reroute_cut,
)
from spinrt.errors import DiagramParseError, InvalidColor, InvalidOpening, NotRenormalizable
from spinrt.repcat import Eps, Formal, Simple
from spinrt.scalar import ScalarContext, mod_dim, twist_scalar

from conftest import rel
from strategies import generic_alpha

UNKNOT = "cup 0 cw\ncap 0"


# -- parsing and tracing ------------------------------------------------------------


@pytest.mark.parametrize("text, index", [
    ("cup 0", 0),
    ("cup 0 cw\nbogus 1", 1),
    ("cup 0 cw\ncap", 1),
    ("cup 0 cw\nx+ 0 cw", 1),
    ("cup 0 cw\ncap 0 ccw", 1),
    ("cup 0 cw\ncup 3 cw", 1),
    ("cup 0 cw", 1),
])
def test_parse_errors_point_at_event(text, index):
    with pytest.raises(DiagramParseError) as info:
        TangleDiagram.parse(text)
    assert info.value.index == index


def test_comments_and_blank_lines():
    d = TangleDiagram.parse("# an unknot\n\ncup 0 cw  # bottom\ncap 0\n")
    assert d.ncomp == 1


braid_words = st.lists(st.sampled_from([1, -1, 2, -2]), min_size=0, max_size=8)


@given(braid_words)
def test_format_parse_round_trip(gens):
    d = corpus.braid_closure(3, gens)
    assert TangleDiagram.parse("\n".join(d.lines())) == d


@given(braid_words)
def test_linking_matrix_is_symmetric_with_writhe_diagonal(gens):
    tr = corpus.braid_closure(3, gens).trace
    assert np.array_equal(tr.lk, tr.lk.T)
    assert tuple(np.diag(tr.lk)) == tr.writhe


def test_hopf_and_framing_data():
    assert corpus.hopf(1).trace.lk.tolist() == [[0, 1], [1, 0]]
    assert corpus.hopf(-1).trace.lk.tolist() == [[0, -1], [-1, 0]]
    assert corpus.framed_unknot(3).trace.writhe == (3,)
    assert corpus.framed_unknot(-2).trace.writhe == (-2,)
    assert corpus.borromean().trace.lk.tolist() == [[0, 0, 0]] * 3


def test_component_ids_follow_first_cups():
    d = corpus.braid_closure(3, [1, 1])
    assert d.ncomp == 3
    assert list(d.trace.first_cup) == sorted(d.trace.first_cup)


def test_reversal_negates_linking():
    d = corpus.hopf(1).reversed_component(0)
    assert d.trace.lk[0, 1] == -1
    assert d.trace.writhe == (0, 0)


def test_reroute_keeps_the_link():
    d = corpus.chain3()
    for cid in range(3):
        t = d.trace.first_cup[cid]
        events, _ = reroute_cut(d.events, t)
        e = TangleDiagram(tuple(events))
        assert e.events[0].kind == "cup" and e.events[0].pos == 0
        assert sorted(e.trace.writhe) == sorted(d.trace.writhe)
        assert sorted(e.trace.lk.ravel().tolist()) == sorted(d.trace.lk.ravel().tolist())


# -- evaluation -----------------------------------------------------------------------


def test_unknot_values(ctx):
    d = TangleDiagram.parse(UNKNOT)
    assert rel(f_prime(ctx, d, [Simple(0.3)]), mod_dim(ctx, 0.3)) < 1e-10
    ccw = TangleDiagram.parse("cup 0 ccw\ncap 0")
    assert rel(f_prime(ctx, ccw, [Simple(0.3)]), mod_dim(ctx, 0.3)) < 1e-10
    assert abs(evaluate_rt(ctx, d, [Eps(1)]) + 1) < 1e-12
    assert abs(evaluate_rt(ctx, d, [Eps(2)]) - 1) < 1e-12


@given(generic_alpha, generic_alpha)
def test_hopf_value(a, b):
    ctx = ScalarContext(4)
    v = f_prime(ctx, corpus.hopf(1), [Simple(a), Simple(b)])
    assert rel(v, -ctx.r * ctx.qpow(a * b)) < 1e-8
    w = f_prime(ctx, corpus.hopf(-1), [Simple(a), Simple(b)])
    assert rel(w, -ctx.r * ctx.qpow(-a * b)) < 1e-8


@given(generic_alpha, st.integers(-2, 2))
def test_kinks_give_twists(alpha, f):
    ctx = ScalarContext(4)
    v = f_prime(ctx, corpus.framed_unknot(f), [Simple(alpha)])
    assert rel(v, mod_dim(ctx, alpha) * twist_scalar(ctx, alpha) ** f) < 1e-8


@pytest.mark.parametrize("name, d", corpus.ambidexterity_corpus())
def test_ambidexterity(name, d, rng):
    ctx = ScalarContext(4)
    colors = [Simple(complex(rng.uniform(0.1, 1.9), rng.uniform(-0.3, 0.3)))
              for _ in range(d.ncomp)]
    vals = [f_prime(ctx, d, colors, opened=i) for i in range(d.ncomp)]
    assert max(rel(v, vals[0]) for v in vals) < 1e-8


@given(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=5),
       st.integers(0, 4), st.sampled_from(["R2", "R3"]))
def test_reidemeister_moves_preserve_f_prime(gens, at, move):
    ctx = ScalarContext(4)
    at = min(at, len(gens))
    if move == "R2":
        extra = [1, -1]
        gens2 = gens[:at] + extra + gens[at:]
    else:
        gens = gens[:at] + [1, 2, 1] + gens[at:]
        gens2 = gens[:at] + [2, 1, 2] + gens[at + 3:]
    d1, d2 = corpus.braid_closure(3, gens), corpus.braid_closure(3, gens2)
    colors = [Simple(0.3 + 0.11j * i) for i in range(d1.ncomp)]
    assert d1.ncomp == d2.ncomp
    a, b = f_prime(ctx, d1, colors), f_prime(ctx, d2, colors)
    assert abs(a - b) <= 1e-8 * max(abs(a), abs(b), 1.0)


def test_split_link_vanishes(ctx):
    two = TangleDiagram.parse("cup 0 cw\ncap 0\ncup 0 cw\ncap 0")
    v = f_prime(ctx, two, [Simple(0.3), Simple(0.6)])
    assert abs(v) < 1e-9


def test_formal_colors_are_multilinear(ctx4):
    d = corpus.hopf(1)
    f = Formal(((2, Simple(0.3)), (1j, Simple(2.3))))
    lhs = f_prime(ctx4, d, [f, Simple(0.6)])
    rhs = 2 * f_prime(ctx4, d, [Simple(0.3), Simple(0.6)]) + 1j * f_prime(
        ctx4, d, [Simple(2.3), Simple(0.6)])
    assert rel(lhs, rhs) < 1e-10


def test_eps_shift_multiplies_by_the_linking_phase(ctx):
    d = corpus.hopf(1)
    before, after = eps_shift_check(ctx, d, [Simple(0.3), Simple(0.45)], 0, 1)
    assert rel(after / before, ctx.qpow(ctx.r * 0.45)) < 1e-9


def test_opening_choice(ctx4):
    colors = [Eps(1), Simple(4), Simple(0.5)]
    assert choose_open(ctx4, colors) == 2
    assert choose_open(ctx4, colors[:2]) == 1
    with pytest.raises(NotRenormalizable):
        choose_open(ctx4, [Eps(1)])
    with pytest.raises(InvalidOpening):
        choose_open(ctx4, colors, prefer=0)


def test_open_tangle_is_scalar(ctx4):
    d = corpus.hopf(1)
    m = OpenTangle(d, 0).matrix(ctx4, [Simple(0.3), Simple(0.7)])
    assert np.linalg.norm(m - m[0, 0] * np.eye(ctx4.r)) < 1e-9 * abs(m[0, 0])


def test_color_count_checked(ctx4):
    with pytest.raises(InvalidColor):
        f_prime(ctx4, corpus.hopf(1), [Simple(0.3)])


def test_resource_guard(ctx4):
    from spinrt.errors import ResourceGuard

    with pytest.raises(ResourceGuard):
        f_prime(ctx4, corpus.borromean(), [Simple(0.3)] * 3, max_size=8)


# -- contraction machinery ---------------------------------------------------------


@given(st.integers(1, 4), st.integers(1, 5), st.integers(1, 40), st.integers(1, 5),
       st.integers(0, 2**32 - 1))
def test_compiled_kernel_matches_fallback(L, M, R, Mo, seed):
    rng = np.random.default_rng(seed)
    state = rng.normal(size=L * M * R) + 1j * rng.normal(size=L * M * R)
    state[rng.random(state.size) < 0.5] = 0
    nnz = rng.integers(1, M * Mo + 1)
    rows = rng.integers(0, Mo, nnz).astype(np.intp)
    cols = rng.integers(0, M, nnz).astype(np.intp)
    vals = rng.normal(size=nnz) + 1j * rng.normal(size=nnz)
    want = kernels.apply_gate_py(state, L, M, R, rows, cols, vals, Mo)
    got = kernels.apply_gate(state, L, M, R, rows, cols, vals, Mo)
    assert np.allclose(got, want, atol=1e-12)
    out = np.full(L * Mo * R, np.nan, dtype=complex)
    assert np.allclose(kernels.apply_gate(state, L, M, R, rows, cols, vals, Mo, out=out), want)


def test_kernel_size_mismatch():
    with pytest.raises(ValueError):
        kernels.apply_gate(np.zeros(5, dtype=complex), 1, 2, 2, np.zeros(1, np.intp),
                           np.zeros(1, np.intp), np.ones(1, complex), 1)


@pytest.fixture
def no_fusion(monkeypatch):
    monkeypatch.setattr(diagram, "MAX_FUSE_WINDOW", 0)
    diagram._plan.cache_clear()
    yield
    diagram._plan.cache_clear()


def _values(ctx):
    out = []
    for f in (2, -1):
        out.append(f_prime(ctx, corpus.framed_unknot(f), [Simple(0.3)]))
    out.append(f_prime(ctx, corpus.braid_closure(2, [1, 1], {0: 1, 1: -2}),
                       [Simple(0.3), Simple(0.8)]))
    out.append(f_prime(ctx, corpus.lens_with_meridian(3, 0.4).diagram,
                       [Simple(0.2), Simple(0.4)]))
    return out


def test_fusion_does_not_change_values(ctx4, no_fusion):
    plain = _values(ctx4)
    diagram.MAX_FUSE_WINDOW = 3
    diagram._plan.cache_clear()
    fused = _values(ctx4)
    assert all(rel(a, b) < 1e-10 for a, b in zip(plain, fused))


def test_plan_fuses_kinks():
    d = corpus.framed_unknot(3)
    steps = diagram._plan(d.events, 0, None)
    assert sum(1 for s in steps if s[0] == "seg") >= 1


def test_event_str():
    assert str(Event("cup", 1, "cw")) == "cup 1 cw"
    assert str(Event("x-", 0)) == "x- 0"
    assert parse_events(["x+ 2"]) == [Event("x+", 2)]
