"""Local rewrites of Morse words: kinks, meridians, encircling loops,
cabling and bands.

Rewrites work on a ``Word``: the event list plus a tag on every cup, so
that components can be identified again after retracing.  All gadgets
are closed sub-words that are inserted between two events and leave the
strand positions around them untouched.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Event, TangleDiagram, crossing_sign, trace_components
from .errors import MoveError


@dataclass
class Word:
    events: list
    tags: list = field(default_factory=list)

    @classmethod
    def from_diagram(cls, d: TangleDiagram) -> "Word":
        ec = d.trace.event_comp
        tags = [ec[t] if e.kind == "cup" else None for t, e in enumerate(d.events)]
        return cls(list(d.events), tags)

    def insert(self, index: int, events, tags=None):
        tags = tags if tags is not None else [None] * len(events)
        self.events[index:index] = events
        self.tags[index:index] = tags

    def diagram(self) -> TangleDiagram:
        return TangleDiagram(tuple(self.events))

    def owners(self, merge=None) -> list:
        """Tag owning each component of the retraced word.

        ``merge`` maps absorbed tags to the tag that survives.
        """
        merge = merge or {}
        tr = trace_components(self.events)
        found = [set() for _ in range(tr.ncomp)]
        for t, tag in enumerate(self.tags):
            if tag is not None:
                found[tr.event_comp[t]].add(merge.get(tag, tag))
        out = []
        for i, tags in enumerate(found):
            if len(tags) != 1:
                raise MoveError(f"component {i} carries tags {sorted(map(str, tags))}")
            out.append(tags.pop())
        return out

    def strands_after(self, t: int):
        """(tag, upward) of the strands just above event ``t`` (-1 = bottom)."""
        cur = []
        for e, tag in zip(self.events[:t + 1], self.tags[:t + 1]):
            if e.kind == "cup":
                up = e.variant == "cw"
                cur[e.pos:e.pos] = [(tag, up), (tag, not up)]
            elif e.kind == "cap":
                del cur[e.pos:e.pos + 2]
            else:
                cur[e.pos], cur[e.pos + 1] = cur[e.pos + 1], cur[e.pos]
        return cur


def _cross_for(sign: int, left_up: bool, right_up: bool) -> str:
    """Crossing kind whose oriented sign is ``sign``."""
    same = left_up == right_up
    return "x+" if (sign == 1) == same else "x-"


def curl(p: int, up: bool, sign: int, tag) -> tuple[list, list]:
    """Kink of writhe ``sign`` on the strand at position p."""
    cup = Event("cup", p + 1, "ccw" if up else "cw")
    kind = _cross_for(sign, up, not up)
    return [cup, Event(kind, p), Event("cap", p)], [tag, None, None]


def meridian(p: int, up: bool, lk: int, tag, framing: int = 0) -> tuple[list, list]:
    """Small loop around the strand at p with the given linking number.

    The loop's own framing is added as kinks on its upward strand.
    """
    if lk not in (1, -1):
        raise ValueError("lk must be +1 or -1")
    kind = _cross_for(lk, up, True)
    events = [Event("cup", p + 1, "cw"), Event(kind, p), Event(kind, p)]
    tags = [tag, None, None]
    for _ in range(abs(framing)):
        e, t = curl(p + 1, True, 1 if framing > 0 else -1, None)
        events += e
        tags += t
    events.append(Event("cap", p + 1, "cw"))
    tags.append(None)
    return events, tags


def encircle(a: int, b: int, clockwise: bool, tag, framing: int = 0) -> tuple[list, list]:
    """Loop around the strands at positions a..b-1 passing over then under them."""
    if not 0 <= a <= b:
        raise ValueError("need 0 <= a <= b")
    variant = "cw" if clockwise else "ccw"
    events = [Event("cup", b, variant)]
    tags = [tag]
    for _ in range(abs(framing)):
        e, t = curl(b + 1, not clockwise, 1 if framing > 0 else -1, None)
        events += e
        tags += t
    events += [Event("x-", i) for i in range(b - 1, a - 1, -1)]
    events += [Event("x-", i) for i in range(a, b)]
    events.append(Event("cap", b, variant))
    tags += [None] * (2 * (b - a) + 1)
    return events, tags


def band(a: int, b: int, up_a: bool) -> list:
    """Band sum of the strands at a and b (opposite orientations).

    The band passes over every strand in between.
    """
    if a == b:
        raise ValueError("band needs two distinct strands")
    v = "cw" if up_a else "ccw"
    if a < b:
        out = [Event("x+", i) for i in range(a, b - 1)]
        out += [Event("cap", b - 1, v), Event("cup", b - 1, v)]
        out += [Event("x-", i) for i in range(b - 2, a - 1, -1)]
    else:
        vb = "ccw" if up_a else "cw"
        out = [Event("x-", i) for i in range(a - 1, b, -1)]
        out += [Event("cap", b, vb), Event("cup", b, vb)]
        out += [Event("x+", i) for i in range(b + 1, a)]
    return out


def _is_curl(evs, t, cur, target) -> bool:
    """True when events t..t+2 form a kink (as made by ``curl``) on a strand of ``target``."""
    if t + 2 >= len(evs):
        return False
    a, b, c = evs[t:t + 3]
    if a.kind != "cup" or b.kind not in ("x+", "x-") or c.kind != "cap":
        return False
    p = b.pos
    return (a.pos == p + 1 and c.pos == p and p < len(cur) and cur[p][0] == target
            and (a.variant == "ccw") == cur[p][1])


def zigzag(p: int, up: bool) -> tuple[Event, Event]:
    """Cup/cap pair that makes a strand at p pass through p+1 the other way.

    Between the two events the strand appears three times (p, p+1, p+2)
    with the middle copy reversed.
    """
    return (Event("cup", p + 1, "ccw" if up else "cw"),
            Event("cap", p, "cw" if up else "ccw"))


def cable(word: Word, target, copy_tag) -> Word:
    """Blackboard parallel: each strand tagged ``target`` becomes two.

    The copy runs to the right of the original with respect to the
    direction of travel, so it inherits the original's orientation.
    """
    cur = []  # (tag of component owning the strand, upward)
    events, tags = [], []
    evs, tgs = word.events, word.tags
    skip = 0
    for t, (e, tag) in enumerate(zip(evs, tgs)):
        if skip:
            skip -= 1
            continue
        if _is_curl(evs, t, cur, target):
            # cable of a kink: a kink on each copy plus a full twist, which
            # is far narrower than the doubled kink
            p = evs[t + 1].pos
            P = p + sum(1 for s in cur[:p] if s[0] == target)
            up = cur[p][1]
            sign = crossing_sign(evs[t + 1].kind, up, evs[t].variant == "cw")
            for k in (P + 1, P):
                ev, tg = curl(k, up, sign, None)
                events += ev
                tags += tg
            kind = _cross_for(sign, up, up)
            events += [Event(kind, P), Event(kind, P)]
            tags += [None, None]
            skip = 2
            continue
        # new position of old position k: k + number of doubled strands before k
        def newpos(k):
            return k + sum(1 for s in cur[:k] if s[0] == target)

        P = newpos(e.pos)
        if e.kind == "cup":
            up = e.variant == "cw"
            if tag == target:
                # outer cup belongs to whichever copy ends up outside
                outer, inner = (tag, copy_tag) if up else (copy_tag, tag)
                events += [Event("cup", P, e.variant), Event("cup", P + 1, e.variant)]
                tags += [outer, inner]
            else:
                events.append(Event("cup", P, e.variant))
                tags.append(tag)
            cur[e.pos:e.pos] = [(tag, up), (tag, not up)]
        elif e.kind == "cap":
            if cur[e.pos][0] == target:
                events += [Event("cap", P + 1, e.variant), Event("cap", P, e.variant)]
                tags += [None, None]
            else:
                events.append(Event("cap", P, e.variant))
                tags.append(None)
            del cur[e.pos:e.pos + 2]
        else:
            w1 = 2 if cur[e.pos][0] == target else 1
            w2 = 2 if cur[e.pos + 1][0] == target else 1
            for i in reversed(range(w1)):
                for j in range(w2):
                    events.append(Event(e.kind, P + i + j))
                    tags.append(None)
            cur[e.pos], cur[e.pos + 1] = cur[e.pos + 1], cur[e.pos]
    return Word(events, tags)
