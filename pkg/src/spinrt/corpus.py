"""Standard diagrams and presentations used by the tests, the self-test
and the benchmarks."""
from __future__ import annotations

from . import words
from .diagram import Event, TangleDiagram
from .repcat import Simple
from .surgery import PHYSICAL, SURGERY, Component, LinkPresentation


def braid_closure(n: int, gens, framings=None) -> TangleDiagram:
    """Closure of an n-strand braid.

    ``gens`` is a sequence of nonzero integers: ``i`` is the positive
    generator on strands i-1, i (1-based), ``-i`` its inverse.  All braid
    strands point up.  ``framings`` optionally adds kinks to the component
    through each bottom position.
    """
    events = [Event("cup", i, "cw") for i in range(n)]
    for g in gens:
        i = abs(g) - 1
        if not 0 <= i < n - 1:
            raise ValueError(f"generator {g} out of range for {n} strands")
        events.append(Event("x+" if g > 0 else "x-", i))
    events += [Event("cap", i) for i in reversed(range(n))]
    d = TangleDiagram(tuple(events))
    if framings:
        d = add_kinks(d, framings)
    return d


def add_kinks(d: TangleDiagram, extra) -> TangleDiagram:
    """Add ``extra[c]`` signed kinks to component c right after its first cup."""
    word = words.Word.from_diagram(d)
    for cid in sorted(extra, key=lambda c: -d.trace.first_cup[c]):
        k = extra[cid]
        t = d.trace.first_cup[cid]
        ev = d.events[t]
        block = []
        for _ in range(abs(k)):
            block += words.curl(ev.pos, ev.variant == "cw", 1 if k > 0 else -1, None)[0]
        word.insert(t + 1, block)
    return word.diagram()


def framed_unknot(f: int = 0) -> TangleDiagram:
    return add_kinks(TangleDiagram.parse("cup 0 cw\ncap 0"), {0: f} if f else {})


def hopf(lk: int = 1) -> TangleDiagram:
    """Two-component Hopf link with linking number +-1, framings 0."""
    return braid_closure(2, [1, 1] if lk == 1 else [-1, -1])


def torus_2(n: int) -> TangleDiagram:
    """Closure of sigma_1^n (a link for even n, a knot for odd n)."""
    return braid_closure(2, [1 if n > 0 else -1] * abs(n))


def borromean() -> TangleDiagram:
    return braid_closure(3, [1, -2] * 3)


def chain3() -> TangleDiagram:
    """Three-component linear chain (two Hopf clasps)."""
    return braid_closure(3, [1, 1, 2, 2])


def ambidexterity_corpus():
    """(name, diagram) pairs of links with at least two components."""
    return [
        ("hopf+", hopf(1)),
        ("hopf-", hopf(-1)),
        ("T(2,4)", torus_2(4)),
        ("T(2,-4)", torus_2(-4)),
        ("T(2,6)", torus_2(6)),
        ("hopf+ framed (1,-2)", braid_closure(2, [1, 1], {0: 1, 1: -2})),
        ("T(2,4) framed (2,0)", braid_closure(2, [1] * 4, {0: 2})),
        ("borromean", borromean()),
        ("chain3", chain3()),
        ("3-braid (s1 s2)^3", braid_closure(3, [1, 2] * 3)),
    ]


# -- presentations --------------------------------------------------------------


def physical(alpha) -> Component:
    alpha = complex(alpha)
    return Component(PHYSICAL, Simple(alpha), alpha + 1)


def surgery(c) -> Component:
    return Component(SURGERY, None, c)


def lens_space(p: int, c) -> LinkPresentation:
    """L(p, 1) as surgery on a p-framed unknot."""
    return LinkPresentation(framed_unknot(p), (surgery(c),))


def lens_with_meridian(p: int, alpha, k: int = 0) -> LinkPresentation:
    """L(p, 1) containing a V_alpha colored meridian of the surgery curve.

    The characteristic equation p c + (alpha + 1) = p forces
    c = (p - alpha - 1 + 2k) / p.
    """
    alpha = complex(alpha)
    word = words.Word.from_diagram(framed_unknot(p))
    ev, tg = words.meridian(0, True, 1, "m")
    word.insert(1, ev, tg)
    c = (p - alpha - 1 + 2 * k) / p
    return LinkPresentation(word.diagram(), (surgery(c), physical(alpha)))


def unknot_in_s3(alpha) -> LinkPresentation:
    return LinkPresentation(framed_unknot(0), (physical(alpha),))


def hopf_presentation(alpha, beta) -> LinkPresentation:
    return LinkPresentation(hopf(1), (physical(alpha), physical(beta)))


def s3_plus_one(c=1) -> LinkPresentation:
    """S^3 as surgery on a +1-framed unknot (integral spin value)."""
    return LinkPresentation(framed_unknot(1), (surgery(c),))
