"""Surgery presentations, Kirby colors, the invariant N and the moves
relating presentations of the same manifold.

A presentation is a colored link diagram whose components are either
surgery components (carrying a spin value ``c``, colored by a Kirby
color at evaluation time) or physical components (carrying a color and
a spin value ``w`` equal to the degree of that color).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import words
from .diagram import DEFAULT_MAX_SIZE, Event, TangleDiagram, f_prime
from .errors import (
    InvalidColor,
    InvalidPresentation,
    MoveError,
    NotComputable,
    ResourceGuard,
)
from .repcat import Formal, Simple, check_color, degree, expand
from .scalar import Mod2C, ScalarContext, _nearest_int, delta_spin, in_ddot, mod_dim
from .spin import (
    SpinColoring,
    char_residual,
    eval_curve,
    is_admissible,
    is_computable,
)

SURGERY = "surgery"
PHYSICAL = "physical"
DEFAULT_TERMS_MAX = 10**6


@dataclass(frozen=True)
class Component:
    role: str
    color: object = None
    spin: complex = 0j

    def __post_init__(self):
        if self.role not in (SURGERY, PHYSICAL):
            raise InvalidPresentation(f"unknown role {self.role!r}")
        object.__setattr__(self, "spin", Mod2C(self.spin).value)


class LinkingData(NamedTuple):
    B: np.ndarray     # surgery x surgery, framings on the diagonal
    lkLK: np.ndarray  # surgery x physical
    frK: np.ndarray   # framings of physical components


@dataclass(frozen=True)
class LinkPresentation:
    diagram: TangleDiagram
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if len(self.components) != self.diagram.ncomp:
            raise InvalidPresentation(
                f"diagram has {self.diagram.ncomp} components, "
                f"{len(self.components)} described")

    @cached_property
    def surgery_ids(self) -> tuple:
        return tuple(i for i, c in enumerate(self.components) if c.role == SURGERY)

    @cached_property
    def physical_ids(self) -> tuple:
        return tuple(i for i, c in enumerate(self.components) if c.role == PHYSICAL)

    @property
    def physical_colors(self) -> tuple:
        return tuple(self.components[i].color for i in self.physical_ids)

    @property
    def spin(self) -> SpinColoring:
        return SpinColoring(
            tuple(self.components[i].spin for i in self.surgery_ids),
            tuple(self.components[i].spin for i in self.physical_ids),
        )

    @cached_property
    def linking(self) -> LinkingData:
        lk = self.diagram.trace.lk
        S, P = list(self.surgery_ids), list(self.physical_ids)
        return LinkingData(lk[np.ix_(S, S)], lk[np.ix_(S, P)], np.diag(lk)[P].copy())

    def with_components(self, comps) -> "LinkPresentation":
        return LinkPresentation(self.diagram, tuple(comps))


class ValidationReport(NamedTuple):
    valid: bool
    violations: tuple
    computable: bool
    admissible: bool


def validate_presentation(p: LinkPresentation, ctx: ScalarContext) -> ValidationReport:
    """Check colors, degree compatibility and the characteristic equation."""
    problems = []
    for i, comp in enumerate(p.components):
        if comp.role == SURGERY:
            if comp.color is not None:
                problems.append(f"surgery component {i} must not carry a color")
            continue
        if comp.color is None:
            problems.append(f"physical component {i} has no color")
            continue
        try:
            check_color(ctx, comp.color)
            deg = degree(comp.color)
        except InvalidColor as exc:
            problems.append(f"component {i}: {exc}")
            continue
        if deg != Mod2C(comp.spin):
            problems.append(
                f"component {i}: color degree {deg!r} differs from spin value "
                f"{Mod2C(comp.spin)!r}")
    B, lkLK, _ = p.linking
    res = char_residual(B, lkLK, p.spin.c, p.spin.w)
    for row, (i, r) in enumerate(zip(p.surgery_ids, res)):
        if r != 0:
            problems.append(
                f"characteristic equation fails on surgery component {i} "
                f"(row {row}): residual {r!r}")
    computable = is_computable(p, ctx)
    admissible = is_admissible(p, ctx)
    return ValidationReport(not problems, tuple(problems), computable, admissible)


def require_valid(p: LinkPresentation, ctx: ScalarContext) -> ValidationReport:
    report = validate_presentation(p, ctx)
    if not report.valid:
        raise InvalidPresentation(list(report.violations))
    return report


# -- signature -----------------------------------------------------------------


def signature(B) -> tuple[int, int, int]:
    """(positive, zero, negative) inertia of a symmetric integer matrix.

    Exact symmetric elimination over the rationals; a zero pivot with a
    nonzero entry in its row is cleared with a hyperbolic 2x2 block.
    """
    A = [[Fraction(int(x)) for x in row] for row in np.asarray(B, dtype=int).reshape(
        len(B), len(B))] if len(B) else []
    n = len(A)
    pos = zero = neg = 0
    idx = list(range(n))
    while idx:
        k = next((i for i in idx if A[i][i] != 0), None)
        if k is not None:
            piv = A[k][k]
            pos += piv > 0
            neg += piv < 0
            rest = [i for i in idx if i != k]
            for i in rest:
                f = A[i][k] / piv
                if f:
                    for j in rest:
                        A[i][j] -= f * A[k][j]
            idx = rest
            continue
        pair = next(((i, j) for i in idx for j in idx if i < j and A[i][j] != 0), None)
        if pair is None:
            zero += len(idx)
            break
        i, j = pair
        # block [[0, b], [b, 0]] has one positive and one negative direction
        pos += 1
        neg += 1
        b = A[i][j]
        rest = [k for k in idx if k not in (i, j)]
        for k in rest:
            ai, aj = A[k][i], A[k][j]
            if not (ai or aj):
                continue
            for l in rest:
                # subtract the projection through the inverse block [[0,1/b],[1/b,0]]
                A[k][l] -= (ai * A[j][l] + aj * A[i][l]) / b
        idx = rest
    return pos, zero, neg


def delta_normalization(ctx: ScalarContext, sig) -> complex:
    bp, _, bm = sig
    return delta_spin(ctx, 1) ** (-bp) * delta_spin(ctx, -1) ** (-bm)


# -- Kirby colors ----------------------------------------------------------------


def canonical_alpha(ctx: ScalarContext, c) -> complex:
    """Representative of c in C/2Z with real part in (0, 2]."""
    v = Mod2C(c).value
    re = v.real
    if abs(re) <= ctx.tol or abs(re - 2) <= ctx.tol:
        re = 2.0
    return complex(re, v.imag)


def kirby_color(ctx: ScalarContext, alpha, form: str = "omega", scale: complex = 1) -> Formal:
    """Kirby color of degree alpha mod 2.

    ``omega``: sum over k = 1..r/2 of d(alpha+2k-1) V_{alpha+2k-1};
    ``tilde``: half the sum over k = 1..r of d(alpha+2k-r-1) V_{alpha+2k-r-1}.
    """
    alpha = complex(alpha)
    if _nearest_int(alpha, ctx.tol) is not None:
        raise InvalidColor(f"Kirby color needs a non-integral degree, got {alpha}")
    r = ctx.r
    if form == "omega":
        labels = [alpha + 2 * k - 1 for k in range(1, r // 2 + 1)]
        weight = 1
    elif form == "tilde":
        labels = [alpha + 2 * k - r - 1 for k in range(1, r + 1)]
        weight = 0.5
    else:
        raise ValueError(f"unknown Kirby form {form!r}")
    return Formal(tuple((scale * weight * mod_dim(ctx, b), Simple(b)) for b in labels))


# -- the invariant -------------------------------------------------------------------


class NResult(NamedTuple):
    value: complex
    fprime: complex
    signature: tuple
    terms: int


def evaluation_colors(ctx, p, form="omega", shift=0):
    colors = []
    for comp in p.components:
        if comp.role == SURGERY:
            colors.append(kirby_color(ctx, canonical_alpha(ctx, comp.spin) + shift, form))
        else:
            colors.append(comp.color)
    return colors


def presentation_fprime(ctx, p, form="omega", shift=0, terms_max=DEFAULT_TERMS_MAX,
                        max_size=DEFAULT_MAX_SIZE) -> tuple[complex, int]:
    """F' of the presentation with Kirby colors on the surgery part."""
    if not is_computable(p, ctx):
        raise NotComputable("some surgery component has an integral spin value "
                            "(or nothing is colored by a V_alpha)")
    colors = evaluation_colors(ctx, p, form, shift)
    terms = math.prod(len(expand(c)) for c in colors)
    if terms > terms_max:
        raise ResourceGuard(f"{terms} expansion terms exceed limit {terms_max}")
    return f_prime(ctx, p.diagram, colors, max_size=max_size, terms_max=terms_max), terms


def invariant_N_details(ctx, p, form="omega", shift=0, terms_max=DEFAULT_TERMS_MAX,
                        max_size=DEFAULT_MAX_SIZE) -> NResult:
    fp, terms = presentation_fprime(ctx, p, form, shift, terms_max, max_size)
    sig = signature(p.linking.B)
    return NResult(delta_normalization(ctx, sig) * fp, fp, sig, terms)


def invariant_N(ctx: ScalarContext, p: LinkPresentation, **kw) -> complex:
    """N = Delta(L) F'(L, K) for a computable presentation."""
    return invariant_N_details(ctx, p, **kw).value


def kirby_color_shift_check(ctx, p, **kw) -> dict:
    """N with the canonical representatives, shifted by 2, and in the tilde form."""
    return {
        "omega": invariant_N(ctx, p, **kw),
        "omega+2": invariant_N(ctx, p, shift=2, **kw),
        "tilde": invariant_N(ctx, p, form="tilde", **kw),
    }


def unknot_presentation(alpha) -> LinkPresentation:
    """(S^3, unknot colored V_alpha)."""
    d = TangleDiagram.parse("cup 0 cw\ncap 0")
    alpha = complex(alpha)
    return LinkPresentation(d, (Component(PHYSICAL, Simple(alpha), alpha + 1),))


def invariant_N0(ctx: ScalarContext, p: LinkPresentation, alpha=0.3, **kw) -> complex:
    """Secondary invariant: 0 on admissible triples, otherwise N of the
    disjoint union with a V_alpha unknot divided by d(alpha)."""
    if is_admissible(p, ctx):
        return 0j
    ref = unknot_presentation(alpha)
    q = make_computable(ctx, disjoint_union(ref, p))
    return invariant_N(ctx, q, **kw) / mod_dim(ctx, alpha)


# -- rewriting plumbing ------------------------------------------------------------


def _rebuild(word: words.Word, data: dict, merge=None) -> LinkPresentation:
    owners = word.owners(merge)
    return LinkPresentation(word.diagram(), tuple(data[t] for t in owners))


def _data(p: LinkPresentation) -> dict:
    return dict(enumerate(p.components))


def _c_of(comp: Component) -> Mod2C:
    return Mod2C(comp.spin)


class MoveResult(NamedTuple):
    presentation: LinkPresentation
    fprime_factor: complex  # expected F'(after) / F'(before)


def _first_strand(word: words.Word, p: LinkPresentation, cid: int):
    t = p.diagram.trace.first_cup[cid]
    ev = word.events[t]
    return t, ev.pos, ev.variant == "cw"


def orientation_move(p: LinkPresentation, cid: int) -> MoveResult:
    """Reverse a surgery component; its spin value changes sign."""
    if p.components[cid].role != SURGERY:
        raise MoveError("orientation move applies to surgery components")
    comps = list(p.components)
    comps[cid] = replace(comps[cid], spin=(-Mod2C(comps[cid].spin)).value)
    return MoveResult(LinkPresentation(p.diagram.reversed_component(cid), comps), 1)


def k1_move(ctx: ScalarContext, p: LinkPresentation, target: int, sign: int,
            direction: int = 1) -> MoveResult:
    """Add (direction=+1) or remove (-1) a (sign)-framed meridian o of
    ``target`` together with a (sign) kink on the target."""
    if sign not in (1, -1) or direction not in (1, -1):
        raise ValueError("sign and direction must be +1 or -1")
    if direction == -1:
        return _k1_remove(ctx, p, target, sign)
    word = words.Word.from_diagram(p.diagram)
    t, pos, up = _first_strand(word, p, target)
    ev, tg = _k1_block(pos, up, sign)
    word.insert(t + 1, ev, tg)
    data = _data(p)
    data["o"] = Component(SURGERY, None, (_c_of(p.components[target]) + 1).value)
    return MoveResult(_rebuild(word, data), delta_spin(ctx, sign))


def _k1_block(pos, up, sign):
    ev, tg = words.curl(pos, up, sign, None)
    e2, t2 = words.meridian(pos, up, -sign, "o", framing=sign)
    return ev + e2, tg + t2


def _k1_remove(ctx, p, target, sign):
    word = words.Word.from_diagram(p.diagram)
    tr = p.diagram.trace
    for t in range(len(word.events)):
        here = tr.strands[t]
        for pos, (comp, up) in enumerate(here):
            if comp != target:
                continue
            ev, _ = _k1_block(pos, up, sign)
            if tuple(word.events[t:t + len(ev)]) != tuple(ev):
                continue
            o = tr.event_comp[t + 3]
            if p.components[o].role != SURGERY:
                continue
            del word.events[t:t + len(ev)]
            del word.tags[t:t + len(ev)]
            data = _data(p)
            del data[o]
            return MoveResult(_rebuild(word, data), 1 / delta_spin(ctx, sign))
    raise MoveError(f"no {sign:+d}-framed meridian pattern found on component {target}")


def k2_move(p: LinkPresentation, slider: int, over: int) -> MoveResult:
    """Handle slide of ``slider`` over the surgery component ``over``."""
    if p.components[over].role != SURGERY:
        raise MoveError("can only slide over a surgery component")
    if slider == over:
        raise MoveError("a component cannot slide over itself")
    word = words.cable(words.Word.from_diagram(p.diagram), over, "copy")
    _band_components(word, slider, "copy")
    data = _data(p)
    comps = dict(data)
    comps[over] = replace(data[over], spin=(_c_of(data[over]) - _c_of(data[slider])).value)
    return MoveResult(_rebuild(word, comps, merge={"copy": slider}), 1)


def _band_components(word: words.Word, x, y) -> None:
    """Insert a band joining the components tagged x and y (in place)."""
    first = {}
    for t in range(len(word.events)):
        cur = word.strands_after(t)
        tags = {tag for tag, _ in cur}
        for key in (x, y):
            if key in tags:
                first.setdefault(key, t)
        if x in tags and y in tags:
            xs = [(i, up) for i, (tag, up) in enumerate(cur) if tag == x]
            ys = [(i, up) for i, (tag, up) in enumerate(cur) if tag == y]
            _, a, ua, b = min((abs(a - b), a, ua, b) for a, ua in xs for b, ub in ys
                              if ua != ub)
            word.insert(t + 1, words.band(a, b, ua))
            return
    if x not in first or y not in first:
        raise MoveError("component to band does not occur in the word")
    # never side by side: carry the band along an auxiliary arc at the right edge
    (lo, klo), (hi, khi) = sorted(((first[x], x), (first[y], y)))
    cur_lo = word.strands_after(lo)
    a, ua = next((i, up) for i, (tag, up) in enumerate(cur_lo) if tag == klo)
    n_lo = len(cur_lo)
    variant = "ccw" if ua else "cw"  # left strand of the arc opposite to ua
    cur_hi = word.strands_after(hi)
    n_hi = len(cur_hi)
    b, ub = next((i, up) for i, (tag, up) in enumerate(cur_hi) if tag == khi and up == ua)
    top = words.band(b, n_hi, ub) + [Event("cap", n_hi, variant)]
    word.insert(hi + 1, top)
    bottom = [Event("cup", n_lo, variant)] + words.band(a, n_lo, ua)
    word.insert(lo + 1, bottom, [klo] + [None] * (len(bottom) - 1))


def hopf_stabilize(ctx: ScalarContext, p: LinkPresentation, target: int, beta) -> MoveResult:
    """Add a 0-framed meridian of a V_alpha colored component, colored by
    lambda V_beta with lambda = d(alpha) / (-r q^(beta alpha))."""
    comp = p.components[target]
    if comp.role != PHYSICAL or not isinstance(comp.color, Simple) \
            or not in_ddot(ctx, comp.color.alpha):
        raise MoveError("Hopf stabilization needs a physical component colored by V_alpha")
    beta = complex(beta)
    if not in_ddot(ctx, beta):
        raise MoveError(f"beta={beta} is not an admissible label")
    alpha = comp.color.alpha
    lam = mod_dim(ctx, alpha) / (-ctx.r * ctx.qpow(beta * alpha))
    word = words.Word.from_diagram(p.diagram)
    t, pos, up = _first_strand(word, p, target)
    ev, tg = words.meridian(pos, up, 1, "o")
    word.insert(t + 1, ev, tg)
    data = _data(p)
    data["o"] = Component(PHYSICAL, Formal(((lam, Simple(beta)),)), beta + 1)
    return MoveResult(_rebuild(word, data), 1)


def disc_value(p: LinkPresentation, after: int, a: int, b: int) -> Mod2C:
    """Spin value of the boundary of a disc crossing strands a..b-1 just above
    event ``after`` (oriented like a clockwise cup's left strand going up)."""
    word = words.Word.from_diagram(p.diagram)
    ev, tg = words.encircle(a, b, True, "d")
    word.insert(after + 1, ev, tg)
    owners = word.owners()
    tr = trace_of(word)
    k = owners.index("d")
    row = {owners[i]: int(tr.lk[k, i]) for i in range(tr.ncomp) if i != k}
    spin = p.spin
    lkL = [row[i] for i in p.surgery_ids]
    lkK = [row[i] for i in p.physical_ids]
    return eval_curve(0, lkL, lkK, spin)


def trace_of(word: words.Word):
    return word.diagram().trace


def birth_move(ctx: ScalarContext, p: LinkPresentation, after: int, a: int, b: int) -> MoveResult:
    """Insert two Kirby-colored parallels of a disc boundary, framed +1 and -1."""
    if not is_computable(p, ctx):
        raise NotComputable("birth move needs a computable presentation")
    width = len(p.diagram.trace.strands[after + 1])
    if not 0 <= a <= b <= width:
        raise MoveError(f"disc span {a}..{b} outside the {width} strands")
    abar = disc_value(p, after, a, b)
    if abar.is_integral(ctx.tol):
        raise MoveError(f"disc boundary has integral spin value {abar!r}")
    alpha = canonical_alpha(ctx, abar.value)
    scale = 1 / abs(delta_spin(ctx, 1))
    color = kirby_color(ctx, alpha, scale=scale)
    word = words.Word.from_diagram(p.diagram)
    e1, t1 = words.encircle(a, b, True, "k-", framing=-1)
    e2, t2 = words.encircle(a, b, False, "k+", framing=1)
    word.insert(after + 1, e1 + e2, t1 + t2)
    data = _data(p)
    data["k-"] = Component(PHYSICAL, color, abar.value)
    data["k+"] = Component(PHYSICAL, color, abar.value)
    return MoveResult(_rebuild(word, data), 1)


def birth_around(ctx, p, cid: int) -> MoveResult:
    """Birth move with the disc pierced once by component ``cid``."""
    t = p.diagram.trace.first_cup[cid]
    pos = p.diagram.events[t].pos
    return birth_move(ctx, p, t, pos, pos + 1)


# -- sums ----------------------------------------------------------------------------


def _tagged(p, key):
    w = words.Word.from_diagram(p.diagram)
    w.tags = [None if x is None else (key, x) for x in w.tags]
    return w


def _shift(events, k):
    return [Event(e.kind, e.pos + k, e.variant) for e in events]


def disjoint_union(p1: LinkPresentation, p2: LinkPresentation) -> LinkPresentation:
    w1, w2 = _tagged(p1, 1), _tagged(p2, 2)
    word = words.Word(w1.events + w2.events, w1.tags + w2.tags)
    data = {(1, i): c for i, c in enumerate(p1.components)}
    data.update({(2, i): c for i, c in enumerate(p2.components)})
    return _rebuild(word, data)


def connected_sum(p1: LinkPresentation, m1: int, p2: LinkPresentation, m2: int) -> LinkPresentation:
    """Band sum of two marked components colored by the same V_alpha."""
    c1, c2 = p1.components[m1], p2.components[m2]
    if not (isinstance(c1.color, Simple) and isinstance(c2.color, Simple)):
        raise MoveError("marked components must be colored by some V_alpha")
    if abs(c1.color.alpha - c2.color.alpha) > 1e-12:
        raise MoveError("marked components carry different colors")
    w1, w2 = _tagged(p1, 1), _tagged(p2, 2)
    t1 = p1.diagram.trace.first_cup[m1]
    t2 = p2.diagram.trace.first_cup[m2]
    n1 = len(p1.diagram.trace.strands[t1 + 1])
    e1, e2 = p1.diagram.events[t1], p2.diagram.events[t2]
    a = e1.pos + 1
    up_a = e1.variant != "cw"  # right strand of the cup
    left_up_2 = e2.variant == "cw"
    b = n1 + e2.pos + (0 if left_up_2 != up_a else 1)
    events = (w1.events[:t1 + 1] + _shift(w2.events[:t2 + 1], n1)
              + words.band(a, b, up_a)
              + _shift(w2.events[t2 + 1:], n1) + w1.events[t1 + 1:])
    nb = len(events) - len(w1.events) - len(w2.events)
    tags = (w1.tags[:t1 + 1] + w2.tags[:t2 + 1] + [None] * nb
            + w2.tags[t2 + 1:] + w1.tags[t1 + 1:])
    data = {(1, i): c for i, c in enumerate(p1.components)}
    data.update({(2, i): c for i, c in enumerate(p2.components)})
    return _rebuild(words.Word(events, tags), data, merge={(2, m2): (1, m1)})


def make_computable(ctx: ScalarContext, p: LinkPresentation) -> LinkPresentation:
    """Slide a component with non-integral spin value over every integral
    surgery component."""
    if is_computable(p, ctx):
        return p
    while True:
        integral = [i for i in p.surgery_ids if Mod2C(p.components[i].spin).is_integral(ctx.tol)]
        if not integral:
            return p
        slider = next((i for i, c in enumerate(p.components)
                       if not Mod2C(c.spin).is_integral(ctx.tol)), None)
        if slider is None:
            raise NotComputable("no component with non-integral spin value to slide")
        p = k2_move(p, slider, integral[0]).presentation
