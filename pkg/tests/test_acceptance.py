"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run under pytest (the lines are repeated in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""
import sys

import numpy as np

from spinrt import corpus, selftest
from spinrt.diagram import f_prime
from spinrt.repcat import Simple
from spinrt.scalar import ScalarContext, mod_dim
from spinrt.spin import solve_spin
from spinrt.surgery import (
    birth_around, connected_sum, disjoint_union, hopf_stabilize, invariant_N, invariant_N0,
    k1_move, k2_move, kirby_color_shift_check, make_computable, orientation_move,
)

LEVELS = (4, 8)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


LINES = []  # shown in the pytest terminal summary


def report(number, ok, detail):
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    LINES.append(line)
    if __name__ == "__main__":
        print(line, flush=True)
    assert ok, line


def _anchors(names, rs=LEVELS):
    rng = np.random.default_rng(2024)
    out = []
    for r in rs:
        ctx = ScalarContext(r)
        out += [getattr(selftest, n)(ctx, rng) for n in names]
    return out


def test_criterion_01_gauss_sum():
    a = selftest.gauss_anchor((4, 8, 12, 16))
    report(1, a.passed, a.detail)


def test_criterion_02_algebra():
    res = _anchors(["relations_anchor"])
    report(2, all(a.passed for a in res), "; ".join(f"{a.name}: {a.detail}" for a in res))


def test_criterion_03_category():
    res = _anchors(["ybe_anchor", "twist_anchor", "eps_anchor"])
    report(3, all(a.passed for a in res), "; ".join(f"{a.name}: {a.detail}" for a in res))


def test_criterion_04_renormalized_invariant():
    rng = np.random.default_rng(4)
    worst_hopf = worst_amb = 0.0
    for r in LEVELS:
        ctx = ScalarContext(r)
        res = selftest.hopf_anchor(ctx, rng)
        assert res.passed, res.detail
        worst_hopf = max(worst_hopf, float(res.detail.split()[-1]))
        for _, d in corpus.ambidexterity_corpus():
            colors = [Simple(complex(rng.uniform(0.1, 1.9), rng.uniform(-0.3, 0.3)))
                      for _ in range(d.ncomp)]
            vals = [f_prime(ctx, d, colors, opened=i) for i in range(d.ncomp)]
            worst_amb = max(worst_amb, max(rel(v, vals[0]) for v in vals))
    ok = worst_hopf < 1e-8 and worst_amb < 1e-8
    report(4, ok, f"unknot/Hopf max rel {worst_hopf:.1e}; ambidexterity over "
                  f"{len(corpus.ambidexterity_corpus())} links max rel {worst_amb:.1e}")


def test_criterion_05_delta_oracle():
    res = _anchors(["delta_anchor"])
    report(5, all(a.passed for a in res),
           "winner (1-i)/2 (rq)^(3/2); " + "; ".join(a.detail for a in res))


def test_criterion_06_spin_combinatorics():
    counts = [solve_spin([[b]], np.zeros((1, 0)), []).count for b in (1, 4, 8)]
    cal = selftest.calibration_anchor(ScalarContext(4))
    ok = counts == [1, 4, 8] and cal.passed
    report(6, ok, f"counts {counts}; calibration {cal.detail}")


def _move_cases(ctx):
    instances = [corpus.lens_with_meridian(3, 0.2), corpus.lens_with_meridian(2, 1.5),
                 corpus.lens_with_meridian(1, 0.25)]
    lens = [corpus.lens_space(4, 0.5)] + instances
    return {
        "orientation": [(p, orientation_move(p, 0).presentation) for p in lens],
        "KI+": [(p, k1_move(ctx, p, 0, 1).presentation) for p in lens],
        "KI-": [(p, k1_move(ctx, p, 0, -1).presentation) for p in lens],
        "KII": [(p, k2_move(p, 1, 0).presentation) for p in instances],
        "Hopf": [(p, hopf_stabilize(ctx, p, 1, b).presentation)
                 for p in instances for b in (0.3, 0.7 + 0.1j)],
        "birth": [(p, birth_around(ctx, p, 0).presentation) for p in lens],
    }


def test_criterion_07_move_invariance():
    worst = {}
    for r in LEVELS:
        ctx = ScalarContext(r)
        for name, pairs in _move_cases(ctx).items():
            assert len(pairs) >= 3
            dev = max(rel(invariant_N(ctx, p), invariant_N(ctx, q)) for p, q in pairs)
            worst[name] = max(worst.get(name, 0.0), dev)
    ok = all(v < 1e-6 for v in worst.values())
    report(7, ok, ", ".join(f"{k} {v:.1e}" for k, v in worst.items()))


def lens_sequence(ctx, c, sign):
    """L(4,1): add a (sign)-meridian, then slide the curve over it twice."""
    p = corpus.lens_space(4, c)
    q = k1_move(ctx, p, 0, sign).presentation
    q = k2_move(q, 0, 1).presentation
    q = k2_move(q, 0, 1).presentation
    return p, q


def test_criterion_08_well_defined():
    devs = []
    for r, c, sign in ((4, 0.5, 1), (4, 0.5, -1), (4, 1.5, -1), (8, 0.5, -1)):
        ctx = ScalarContext(r)
        p, q = lens_sequence(ctx, c, sign)
        devs.append(rel(invariant_N(ctx, p), invariant_N(ctx, q)))
    shift = 0.0
    for r in LEVELS:
        ctx = ScalarContext(r)
        for p in (corpus.lens_space(4, 0.5), corpus.lens_with_meridian(3, 0.2)):
            v = kirby_color_shift_check(ctx, p)
            shift = max(shift, rel(v["omega"], v["omega+2"]), rel(v["omega"], v["tilde"]))
    ok = max(devs) < 1e-6 and shift < 1e-8
    report(8, ok, f"L(4,1) sequences max rel {max(devs):.1e} "
                  f"(r=4 KI+/KI-, c=3/2, r=8 KI-); Kirby shift/tilde max rel {shift:.1e}")


def test_criterion_09_structure():
    a = 0.2
    worst = 0.0
    for r in LEVELS:
        ctx = ScalarContext(r)
        cases = [(corpus.unknot_in_s3(a), 0, corpus.unknot_in_s3(a), 0),
                 (corpus.hopf_presentation(a, 0.6), 0, corpus.unknot_in_s3(a), 0),
                 (corpus.lens_with_meridian(3, a), 1, corpus.hopf_presentation(a, 0.6), 0)]
        if r == 4:
            cases.append((corpus.lens_with_meridian(3, a), 1, corpus.lens_with_meridian(2, a), 1))
        for p1, m1, p2, m2 in cases:
            lhs = invariant_N(ctx, connected_sum(p1, m1, p2, m2))
            rhs = invariant_N(ctx, p1) * invariant_N(ctx, p2) / mod_dim(ctx, a)
            worst = max(worst, rel(lhs, rhs))
    n0 = []
    for r in LEVELS:
        ctx = ScalarContext(r)
        n0 += [invariant_N0(ctx, corpus.s3_plus_one(1), alpha=al) for al in (0.3, 0.7 + 0.1j)]
    n0_dev = max(abs(v - 1) for v in n0)
    ok = worst < 1e-6 and n0_dev < 1e-8
    report(9, ok, f"connected sum max rel {worst:.1e}; N0 of integral S^3 max |N0-1| {n0_dev:.1e}")


def test_criterion_10_integral_route():
    devs = []
    for r in LEVELS:
        ctx = ScalarContext(r)
        base = disjoint_union(corpus.unknot_in_s3(0), corpus.s3_plus_one(1))
        vals = []
        for beta in (0.3, 0.7 + 0.1j):
            q = hopf_stabilize(ctx, base, base.physical_ids[0], beta).presentation
            vals.append(invariant_N(ctx, make_computable(ctx, q)))
        devs.append(rel(vals[0], vals[1]))
    ok = max(devs) < 1e-6
    report(10, ok, f"V_0 unknot in integral S^3, beta 0.3 vs 0.7+0.1i: max rel {max(devs):.1e}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
