"""Oriented framed links as Morse words and their quantum evaluation.

A diagram is read bottom to top as a list of events acting on a row of
strand positions (0-based):

``cup p v``
    creates two strands at positions p, p+1.  ``v`` is ``cw`` when the left
    end points up (the arc runs clockwise), ``ccw`` otherwise.
``cap p [v]``
    joins the strands at p, p+1; the variant is optional and checked.
``x+ p`` / ``x- p``
    crossing of strands p and p+1; for ``x+`` the strand coming from the
    bottom left passes over.  Its oriented sign is +1 when both strands
    point the same way (and -1 otherwise); ``x-`` is the opposite.

Framing is the blackboard framing, so the framing of a component is its
writhe.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import (
    DiagramParseError,
    InvalidColor,
    InvalidOpening,
    NotRenormalizable,
    ResourceGuard,
)
from .repcat import (
    Eps,
    Formal,
    Simple,
    braiding,
    build_module,
    expand,
    pivot,
    strand_module,
)
from .scalar import ScalarContext, _nearest_int, in_ddot, mod_dim

DEFAULT_MAX_SIZE = 1 << 25

KINDS = ("cup", "cap", "x+", "x-")
VARIANTS = ("cw", "ccw")


class Event(NamedTuple):
    kind: str
    pos: int
    variant: str | None = None

    def __str__(self):
        if self.variant is None:
            return f"{self.kind} {self.pos}"
        return f"{self.kind} {self.pos} {self.variant}"


def parse_events(lines) -> list[Event]:
    """Parse the one-event-per-line text format."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    events = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        idx = len(events)
        tok = line.split()
        kind = tok[0]
        if kind not in KINDS:
            raise DiagramParseError(f"unknown event {kind!r}", idx)
        try:
            pos = int(tok[1])
        except (IndexError, ValueError):
            raise DiagramParseError(f"missing or bad position in {line!r}", idx) from None
        variant = tok[2] if len(tok) > 2 else None
        if kind == "cup" and variant not in VARIANTS:
            raise DiagramParseError("cup needs a variant (cw or ccw)", idx)
        if kind == "cap" and variant not in (None, *VARIANTS):
            raise DiagramParseError(f"bad cap variant {variant!r}", idx)
        if kind in ("x+", "x-") and variant is not None:
            raise DiagramParseError("crossings take no variant", idx)
        if len(tok) > 3:
            raise DiagramParseError(f"trailing tokens in {line!r}", idx)
        events.append(Event(kind, pos, variant))
    return events


def format_events(events) -> list[str]:
    return [str(e) for e in events]


def flip_variant(v):
    return {"cw": "ccw", "ccw": "cw", None: None}[v]


def crossing_sign(kind: str, left_up: bool, right_up: bool) -> int:
    s = 1 if left_up == right_up else -1
    return s if kind == "x+" else -s


class _UnionFind:
    def __init__(self):
        self.parent = []

    def add(self):
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


@dataclass(frozen=True)
class Trace:
    """Result of tracing a closed word.

    ``strands[t]`` lists ``(component, upward)`` for every position just
    below event ``t`` (``strands[len(events)]`` is the top, empty).
    """

    ncomp: int
    event_comp: tuple  # component of each cup/cap, None for crossings
    strands: tuple
    writhe: tuple
    lk: np.ndarray  # symmetric, diagonal = writhe
    first_cup: tuple
    crossings: tuple  # (event index, left comp, right comp, oriented sign)


def trace_components(events: Sequence[Event], closed: bool = True) -> Trace:
    """Trace components, orientations, writhes and linking numbers."""
    uf = _UnionFind()
    cur: list[tuple[int, bool]] = []
    snap = []
    arc_of_event = []
    raw_cross = []
    for t, ev in enumerate(events):
        snap.append(tuple(cur))
        n = len(cur)
        if ev.kind == "cup":
            if not 0 <= ev.pos <= n:
                raise DiagramParseError(f"cup position {ev.pos} out of range 0..{n}", t)
            a = uf.add()
            up = ev.variant == "cw"
            cur[ev.pos:ev.pos] = [(a, up), (a, not up)]
            arc_of_event.append(a)
        elif ev.kind == "cap":
            if not 0 <= ev.pos <= n - 2:
                raise DiagramParseError(f"cap position {ev.pos} out of range", t)
            (a, ua), (b, ub) = cur[ev.pos], cur[ev.pos + 1]
            if ua == ub:
                raise DiagramParseError("cap joins two strands with the same direction", t)
            if ev.variant is not None and (ev.variant == "cw") != ua:
                raise DiagramParseError("cap variant contradicts strand orientation", t)
            uf.union(a, b)
            del cur[ev.pos:ev.pos + 2]
            arc_of_event.append(a)
        elif ev.kind in ("x+", "x-"):
            if not 0 <= ev.pos <= n - 2:
                raise DiagramParseError(f"crossing position {ev.pos} out of range", t)
            (a, ua), (b, ub) = cur[ev.pos], cur[ev.pos + 1]
            raw_cross.append((t, a, b, crossing_sign(ev.kind, ua, ub)))
            cur[ev.pos], cur[ev.pos + 1] = cur[ev.pos + 1], cur[ev.pos]
            arc_of_event.append(None)
        else:
            raise DiagramParseError(f"unknown event kind {ev.kind!r}", t)
    snap.append(tuple(cur))
    if closed and cur:
        raise DiagramParseError(f"{len(cur)} strands left open at the top", len(events))

    roots = sorted({uf.find(a) for a in range(len(uf.parent))})
    comp_of_root = {root: i for i, root in enumerate(roots)}  # root = min arc = first cup

    def comp(a):
        return comp_of_root[uf.find(a)]

    ncomp = len(roots)
    event_comp = tuple(None if a is None else comp(a) for a in arc_of_event)
    strands = tuple(tuple((comp(a), up) for a, up in s) for s in snap)
    lk2 = np.zeros((ncomp, ncomp), dtype=int)
    crossings = []
    for t, a, b, s in raw_cross:
        ca, cb = comp(a), comp(b)
        crossings.append((t, ca, cb, s))
        if ca == cb:
            lk2[ca, ca] += 2 * s
        else:
            lk2[ca, cb] += s
            lk2[cb, ca] += s
    if np.any(lk2 % 2):
        raise DiagramParseError("odd number of crossings between two components")
    lk = lk2 // 2
    first_cup = [None] * ncomp
    for t, c in enumerate(event_comp):
        if c is not None and first_cup[c] is None:
            first_cup[c] = t
    return Trace(
        ncomp=ncomp,
        event_comp=event_comp,
        strands=strands,
        writhe=tuple(int(lk[i, i]) for i in range(ncomp)),
        lk=lk,
        first_cup=tuple(first_cup),
        crossings=tuple(crossings),
    )


@dataclass(frozen=True)
class TangleDiagram:
    """A closed oriented framed link given by its Morse word."""

    events: tuple

    def __post_init__(self):
        events = tuple(
            e if isinstance(e, Event) else Event(*e) for e in self.events
        )
        object.__setattr__(self, "events", events)
        self.trace  # validate eagerly

    @classmethod
    def parse(cls, text) -> "TangleDiagram":
        return cls(tuple(parse_events(text)))

    @cached_property
    def trace(self) -> Trace:
        return trace_components(self.events)

    @property
    def ncomp(self) -> int:
        return self.trace.ncomp

    def lines(self) -> list[str]:
        return format_events(self.events)

    def reversed_component(self, cid: int) -> "TangleDiagram":
        """Same link with component ``cid`` reoriented."""
        ec = self.trace.event_comp
        return TangleDiagram(tuple(
            Event(e.kind, e.pos, flip_variant(e.variant)) if ec[t] == cid else e
            for t, e in enumerate(self.events)
        ))

    def max_width(self) -> int:
        return max(len(s) for s in self.trace.strands)


# -- contraction -------------------------------------------------------------


class Gate(NamedTuple):
    rows: np.ndarray
    cols: np.ndarray
    vals: np.ndarray
    Mo: int
    M: int


def _coo(mat: np.ndarray) -> Gate:
    rows, cols = np.nonzero(mat)
    return Gate(rows.astype(np.intp), cols.astype(np.intp),
                np.ascontiguousarray(mat[rows, cols], dtype=complex),
                mat.shape[0], mat.shape[1])


@lru_cache(maxsize=16384)
def _gate(ctx: ScalarContext, kind: str, variant, left, right) -> Gate:
    """Gate for one event; ``left``/``right`` are (color, upward) keys."""
    if kind == "cup":
        color, _ = left
        V = build_module(ctx, color)
        n = V.dim
        idx = np.arange(n) * (n + 1)
        vals = np.ones(n, complex) if variant == "cw" else 1 / pivot(ctx, V)
        return Gate(idx.astype(np.intp), np.zeros(n, np.intp), vals, n * n, 1)
    if kind == "cap":
        color, _ = left
        V = build_module(ctx, color)
        n = V.dim
        idx = np.arange(n) * (n + 1)
        vals = pivot(ctx, V) if variant == "cw" else np.ones(n, complex)
        return Gate(np.zeros(n, np.intp), idx.astype(np.intp), vals, 1, n * n)
    X = strand_module(ctx, *left)
    Y = strand_module(ctx, *right)
    if kind == "x+":
        return _coo(braiding(ctx, X, Y))
    inv = np.linalg.inv(braiding(ctx, Y, X))
    w_out = np.add.outer(Y.weights, X.weights).ravel()
    w_in = np.add.outer(X.weights, Y.weights).ravel()
    inv[np.abs(w_out[:, None] - w_in[None, :]) > 1e-6] = 0
    return _coo(inv)


MAX_FUSE_WINDOW = 3
MAX_FUSE_LOCAL = 7


def _find_segment(events, n0: int, t: int):
    """Shortest stretch t..u, starting with the cup at t, after which the
    strand count is back to ``n0`` and whose events stay inside a window of
    at most MAX_FUSE_WINDOW of the strands present before t.

    Returns (u, lo, hi) with the window given in positions before t.
    """
    cur = list(range(n0))  # strands present before t keep ids < n0
    nxt = n0
    lo, hi = n0, 0
    extra = 0

    def left_count(k):
        return sum(1 for s in cur[:k] if s < n0)

    for u in range(t, len(events)):
        e = events[u]
        p = e.pos
        if e.kind == "cup":
            b = left_count(p)
            lo, hi = min(lo, b), max(hi, b)
            cur[p:p] = [nxt, nxt + 1]
            nxt += 2
        else:
            for k in (p, p + 1):
                s = cur[k]
                if s < n0:
                    lo, hi = min(lo, s), max(hi, s + 1)
                else:
                    b = left_count(k)
                    lo, hi = min(lo, b), max(hi, b)
            if e.kind == "cap":
                del cur[p:p + 2]
            else:
                cur[p], cur[p + 1] = cur[p + 1], cur[p]
        extra = max(extra, len(cur) - n0)
        if hi - lo > MAX_FUSE_WINDOW or 2 * (hi - lo) + extra > MAX_FUSE_LOCAL:
            return None
        if len(cur) == n0:
            return u, lo, hi
    return None


@lru_cache(maxsize=1024)
def _plan(events: tuple, n_start: int, no_fuse: int | None):
    """Steps of the sweep: ("ev", t) or ("seg", t, u, lo, hi)."""
    steps = []
    n = n_start
    t = 0
    while t < len(events):
        e = events[t]
        if e.kind == "cup" and t != no_fuse:
            seg = _find_segment(events, n, t)
            if seg is not None:
                u, lo, hi = seg
                steps.append(("seg", t, u, lo, hi))
                t = u + 1
                continue
        steps.append(("ev", t))
        n += 2 if e.kind == "cup" else -2 if e.kind == "cap" else 0
        t += 1
    return tuple(steps)


@lru_cache(maxsize=8192)
def _segment_gate(ctx, events: tuple, strands: tuple, colors: tuple) -> Gate:
    """Operator of an open sub-word, from its bottom strands to its top strands."""
    dims_in = [build_module(ctx, colors[c]).dim for c, _ in strands[0]]
    dims_out = [build_module(ctx, colors[c]).dim for c, _ in strands[-1]]
    n_in, n_out = math.prod(dims_in), math.prod(dims_out)
    out = _contract(ctx, events, strands, colors, init_dims=dims_in, no_fuse=0)
    return _coo(out.reshape(n_in, n_out).T)


def _local(events, strands, colors, t, u, lo, hi):
    """Shifted events, renumbered strands and colors of a segment."""
    n0 = len(strands[t])
    comps = {}
    local_strands = []
    for k in range(t, u + 2):
        row = strands[k]
        window = row[lo:len(row) - (n0 - hi)]
        local_strands.append(tuple((comps.setdefault(c, len(comps)), up) for c, up in window))
    local_colors = [None] * len(comps)
    for c, i in comps.items():
        local_colors[i] = colors[c]
    local_events = tuple(Event(e.kind, e.pos - lo, e.variant) for e in events[t:u + 1])
    return local_events, tuple(local_strands), tuple(local_colors)


class _Workspace:
    """Two alternating output buffers, so that wide contractions do not
    allocate (and page in) a fresh state for every gate."""

    def __init__(self, apply_gate):
        self.apply_gate = apply_gate
        self.bufs = [None, None]
        self.current = None  # index of the buffer backing the latest state

    def apply(self, state, L, M, R, g: Gate, Mo):
        n = L * Mo * R
        k = 1 if self.current == 0 else 0
        buf = self.bufs[k]
        if buf is None or buf.size < n:
            buf = self.bufs[k] = np.empty(n, dtype=complex)
        out = self.apply_gate(state, L, M, R, g.rows, g.cols, g.vals, Mo, out=buf[:n])
        self.current = k
        return out


def _contract(ctx, events, strands, colors, cut=None, cut_basis=None,
              max_size=DEFAULT_MAX_SIZE, apply_gate=None, init_dims=None, no_fuse=None):
    """Bottom-to-top contraction.

    With ``cut`` set to a cup index, that cup is replaced by the basis
    vectors listed in ``cut_basis`` (pairs (a, b)), carried along a
    leading batch axis; the result is then one number per pair.  With
    ``init_dims`` the word is open at the bottom and the result is its
    operator, batched over the input basis.

    Short stretches that start with a cup and act on at most a few strands
    (kinks, small meridians and the like) are contracted on their own and
    applied as a single gate, which keeps the state narrow.
    """
    work = _Workspace(apply_gate or kernels.apply_gate)
    events = tuple(events)
    if init_dims is None:
        state = np.ones(1, dtype=complex)
        dims: list[int] = []
        batch = 1
    else:
        dims = list(init_dims)
        batch = math.prod(dims)
        state = np.eye(batch, dtype=complex).ravel()
    if no_fuse is None:
        no_fuse = cut
    for step in _plan(events, len(dims), no_fuse):
        if step[0] == "seg":
            _, t, u, lo, hi = step
            g = _segment_gate(ctx, *_local(events, strands, colors, t, u, lo, hi))
            L = batch * math.prod(dims[:lo])
            R = math.prod(dims[hi:])
            state = work.apply(state, L, g.M, R, g, g.Mo)
            n0 = len(strands[t])
            top = strands[u + 1]
            dims[lo:hi] = [build_module(ctx, colors[c]).dim
                           for c, _ in top[lo:len(top) - (n0 - hi)]]
            if state.size > max_size:
                raise ResourceGuard(
                    f"contraction width {state.size} exceeds limit {max_size} at event {u}")
            continue
        t = step[1]
        ev = events[t]
        here = strands[t]
        p = ev.pos
        L = batch * math.prod(dims[:p])
        if ev.kind == "cup":
            comp = strands[t + 1][p][0]
            n = build_module(ctx, colors[comp]).dim
            R = math.prod(dims[p:])
            if t == cut:
                nb = len(cut_basis)
                new = np.zeros((nb, L, n * n, R), dtype=complex)
                src = state.reshape(L, R)
                for k, (a, b) in enumerate(cut_basis):
                    new[k, :, a * n + b, :] = src
                state = new.ravel()
                work.current = None
                batch *= nb
            else:
                g = _gate(ctx, "cup", ev.variant, (colors[comp], True), None)
                state = work.apply(state, L, 1, R, g, g.Mo)
            dims[p:p] = [n, n]
        else:
            R = math.prod(dims[p + 2:])
            M = dims[p] * dims[p + 1]
            (ca, ua), (cb, ub) = here[p], here[p + 1]
            if ev.kind == "cap":
                g = _gate(ctx, "cap", "cw" if ua else "ccw", (colors[ca], True), None)
                state = work.apply(state, L, M, R, g, 1)
                del dims[p:p + 2]
            else:
                g = _gate(ctx, ev.kind, None, (colors[ca], ua), (colors[cb], ub))
                state = work.apply(state, L, M, R, g, g.Mo)
                dims[p], dims[p + 1] = dims[p + 1], dims[p]
        if state.size > max_size:
            raise ResourceGuard(
                f"contraction width {state.size} exceeds limit {max_size} at event {t}"
            )
    return state.copy()


def _concrete(ctx, colors):
    for c in colors:
        if isinstance(c, Formal):
            raise InvalidColor("expand formal colors first")
        if c is None:
            raise InvalidColor("uncolored component")


def evaluate_rt(ctx: ScalarContext, diagram: TangleDiagram, colors,
                max_size: int = DEFAULT_MAX_SIZE) -> complex:
    """Reshetikhin-Turaev value F of a closed diagram with concrete colors."""
    colors = tuple(colors)
    if len(colors) != diagram.ncomp:
        raise InvalidColor(f"need {diagram.ncomp} colors, got {len(colors)}")
    _concrete(ctx, colors)
    state = _contract(ctx, diagram.events, diagram.trace.strands, colors,
                      max_size=max_size)
    return complex(state[0])


def reroute_cut(events, t: int) -> tuple[list, dict]:
    """Move the cup at index ``t`` to the bottom-left corner.

    The cup's minimum is pulled down over every strand to its left and
    then along the left edge, which is an isotopy.  Returns the new word
    and the map old event index -> new event index (the cup goes to 0).
    """
    ev = events[t]
    p = ev.pos
    out = [Event("cup", 0, ev.variant)]
    out += [Event(e.kind, e.pos + 2, e.variant) for e in events[:t]]
    for j in range(p):
        out += [Event("x+", j + 1), Event("x+", j)]
    out += list(events[t + 1:])
    index = {i: (i + 1 if i < t else i + 2 * p) for i in range(len(events)) if i != t}
    index[t] = 0
    return out, index


@dataclass(frozen=True)
class OpenTangle:
    """A link cut open at the lowest point of one component.

    The cut cup is first moved to the bottom-left corner of the word.  The
    cut then turns the closed diagram into a morphism D' out of the two
    cut ends, and the 1-1 tangle T is the unique endomorphism with
    D' = pev o (T (x) id) (clockwise cup) or D' = ev o (id (x) T)
    (counter-clockwise cup).
    """

    diagram: TangleDiagram
    component: int
    opened: TangleDiagram = field(init=False, repr=False)
    perm: tuple = field(init=False, repr=False)

    def __post_init__(self):
        tr = self.diagram.trace
        events, index = reroute_cut(self.diagram.events, tr.first_cup[self.component])
        opened = TangleDiagram(tuple(events))
        ec = opened.trace.event_comp
        perm = tuple(ec[index[tr.first_cup[c]]] for c in range(tr.ncomp))
        object.__setattr__(self, "opened", opened)
        object.__setattr__(self, "perm", perm)

    @property
    def clockwise(self) -> bool:
        return self.opened.events[0].variant == "cw"

    def _run(self, ctx, colors, basis, max_size):
        permuted = [None] * len(colors)
        for c, col in enumerate(colors):
            permuted[self.perm[c]] = col
        return _contract(ctx, self.opened.events, self.opened.trace.strands,
                         tuple(permuted), cut=0, cut_basis=basis, max_size=max_size)

    def matrix(self, ctx, colors, max_size=DEFAULT_MAX_SIZE) -> np.ndarray:
        """Full endomorphism of the open strand's module."""
        colors = tuple(colors)
        _concrete(ctx, colors)
        V = build_module(ctx, colors[self.component])
        n = V.dim
        phi = self._run(ctx, colors, [(a, b) for a in range(n) for b in range(n)],
                        max_size).reshape(n, n)
        if self.clockwise:
            return (1 / pivot(ctx, V))[:, None] * phi.T
        return phi

    def bracket(self, ctx, colors, max_size=DEFAULT_MAX_SIZE) -> complex:
        """The scalar <T> (read off the highest-weight vector)."""
        colors = tuple(colors)
        _concrete(ctx, colors)
        val = complex(self._run(ctx, colors, [(0, 0)], max_size)[0])
        if self.clockwise:
            V = build_module(ctx, colors[self.component])
            val /= pivot(ctx, V)[0]
        return val


def _openable(ctx, color) -> bool:
    return isinstance(color, Simple) and in_ddot(ctx, color.alpha)


def open_component(diagram: TangleDiagram, cid: int, colors=None, ctx=None) -> OpenTangle:
    """Cut component ``cid`` at its lowest point.

    When ``colors`` and ``ctx`` are given the color of ``cid`` must be a
    simple module in the index set (C minus Z) u rZ.
    """
    if not 0 <= cid < diagram.ncomp:
        raise InvalidOpening(f"no component {cid}")
    if colors is not None:
        color = colors[cid]
        if ctx is None or not _openable(ctx, color):
            raise InvalidOpening(f"component {cid} is colored by {color!r}, not a V_alpha")
    return OpenTangle(diagram, cid)


def _fsum_complex(values) -> complex:
    values = list(values)
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def expand_colorings(colors, terms_max: int | None = None):
    """All concrete colorings of a multilinear coloring, in index order."""
    factors = [expand(c) for c in colors]
    count = math.prod(len(f) for f in factors)
    if terms_max is not None and count > terms_max:
        raise ResourceGuard(f"{count} expansion terms exceed limit {terms_max}")
    for combo in product(*factors):
        coef = 1 + 0j
        for c, _ in combo:
            coef *= c
        yield coef, tuple(col for _, col in combo)


def choose_open(ctx, colors, prefer=None):
    """Component to open: ``prefer`` if admissible, else the first V_alpha with
    alpha non-integral, else the first in rZ."""
    if prefer is not None:
        if not _openable(ctx, colors[prefer]):
            raise InvalidOpening(f"component {prefer} is not colored by some V_alpha")
        return prefer
    fallback = None
    for i, c in enumerate(colors):
        if _openable(ctx, c):
            if _nearest_int(c.alpha, ctx.tol) is None:
                return i
            if fallback is None:
                fallback = i
    if fallback is None:
        raise NotRenormalizable("no component colored by V_alpha with alpha in (C\\Z) u rZ")
    return fallback


def f_prime(ctx: ScalarContext, diagram: TangleDiagram, colors, opened=None,
            max_size: int = DEFAULT_MAX_SIZE, terms_max: int | None = 10**6) -> complex:
    """Renormalized invariant F' = d(alpha) <T>, multilinear in formal colors."""
    colors = tuple(colors)
    if len(colors) != diagram.ncomp:
        raise InvalidColor(f"need {diagram.ncomp} colors, got {len(colors)}")
    values = []
    for coef, concrete in expand_colorings(colors, terms_max):
        if coef == 0:
            continue
        cid = choose_open(ctx, concrete, opened)
        tangle = OpenTangle(diagram, cid)
        alpha = concrete[cid].alpha
        values.append(coef * mod_dim(ctx, alpha) * tangle.bracket(ctx, concrete, max_size))
    return _fsum_complex(values)


def eps_shift_check(ctx: ScalarContext, diagram: TangleDiagram, colors, cid: int,
                    n: int, **kw) -> tuple[complex, complex]:
    """F' before and after replacing the color alpha of ``cid`` by alpha + n r."""
    colors = list(colors)
    color = colors[cid]
    if not _openable(ctx, color):
        raise InvalidOpening(f"component {cid} is not colored by some V_alpha")
    before = f_prime(ctx, diagram, colors, **kw)
    colors[cid] = Simple(color.alpha + n * ctx.r)
    after = f_prime(ctx, diagram, colors, **kw)
    return before, after


__all__ = [
    "Event", "Trace", "TangleDiagram", "OpenTangle", "parse_events", "format_events",
    "trace_components", "evaluate_rt", "open_component", "f_prime", "eps_shift_check",
    "expand_colorings", "Eps", "Simple",
]
