"""
Kauffman states of closed 3-braid diagrams.

The closed braid is drawn as three concentric tracks around the braid
axis: track 1 outermost, track 3 innermost, every strand oriented the same
way around the axis.  The complement splits into

* the unbounded region outside track 1,
* the central disk inside track 3,
* one region of the track 1/2 annulus per s1 crossing, and
* one region of the track 2/3 annulus per s2 crossing,

giving c + 2 regions for c crossings.  Each crossing has four corners, in
rotational order ``AFTER, OUTER, BEFORE, INNER``: AFTER sits between the two
outgoing strands, BEFORE between the two incoming ones, OUTER and INNER on
the sides facing away from and toward the axis.

A Kauffman state marks one corner per crossing so that every region except
the two adjacent to a marked edge on track 1 is marked exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple

from .braidcore import BraidWord, is_knot, render
from .laurent import LaurentPoly

AFTER, OUTER, BEFORE, INNER = range(4)
CORNER_NAMES = ("after", "outer", "before", "inner")

OUTSIDE, CENTER = 0, 1

HALF = Fraction(1, 2)


class DiagramError(ValueError):
    pass


class StateLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GradingTable:
    """
    Local (Alexander, Maslov) contributions, indexed by crossing sign and
    corner.  ``alexander[sign][corner]`` and ``maslov[sign][corner]``.
    """
    alexander: Dict[int, Tuple[Fraction, ...]]
    maslov: Dict[int, Tuple[int, ...]]

    def __post_init__(self):
        for sign in (1, -1):
            if any((2 * a).denominator != 1 for a in self.alexander[sign]):
                raise ValueError("local Alexander gradings must be half-integers")
            for d in self.deltas(sign):
                lo, hi = (0, HALF) if sign == 1 else (-HALF, 0)
                if not lo <= d <= hi:
                    raise ValueError(f"local delta {d} out of range for sign {sign:+d}")

    def deltas(self, sign: int) -> Tuple[Fraction, ...]:
        return tuple(a - m for a, m in zip(self.alexander[sign], self.maslov[sign]))


# Local gradings at a crossing, corners ordered AFTER, OUTER, BEFORE, INNER.
# Only the corners between like-oriented strands contribute.
STANDARD_GRADINGS = GradingTable(
    alexander={
        1: (-HALF, Fraction(0), HALF, Fraction(0)),
        -1: (HALF, Fraction(0), -HALF, Fraction(0)),
    },
    maslov={
        1: (-1, 0, 0, 0),
        -1: (1, 0, 0, 0),
    },
)


@dataclass(frozen=True)
class Crossing:
    position: int        # index into the braid word
    generator: int       # 1 or 2
    sign: int
    corners: Tuple[int, int, int, int]   # region ids, AFTER, OUTER, BEFORE, INNER


@dataclass(frozen=True)
class Diagram:
    word: BraidWord
    crossings: Tuple[Crossing, ...]
    num_regions: int
    distinguished: Tuple[int, int]
    region_names: Tuple[str, ...] = field(compare=False)

    @property
    def n_plus(self) -> int:
        return sum(1 for c in self.crossings if c.sign == 1)

    @property
    def n_minus(self) -> int:
        return sum(1 for c in self.crossings if c.sign == -1)

    @property
    def regions(self) -> range:
        return range(self.num_regions)

    def dump(self) -> str:
        """One crossing per line: position, generator, sign, corner regions."""
        lines = [f"# word: {render(self.word)}",
                 f"# regions: {self.num_regions}  distinguished: "
                 + " ".join(self.region_names[r] for r in self.distinguished)]
        for c in self.crossings:
            corners = " ".join(f"{n}={self.region_names[r]}"
                               for n, r in zip(CORNER_NAMES, c.corners))
            lines.append(f"{c.position} s{c.generator} {'+' if c.sign == 1 else '-'} {corners}")
        return "\n".join(lines) + "\n"


def build_diagram(w: BraidWord, marked_segment: Optional[int] = None) -> Diagram:
    """
    Closed-braid diagram of ``w``.  The marked edge lies on track 1 and
    separates the unbounded region from track-1/2 region ``marked_segment``
    (default: the region spanning the closure seam).
    """
    if len(w) == 0:
        raise DiagramError("empty word has no diagram")
    if not is_knot(w):
        raise DiagramError(f"closure of {render(w)!r} is not a knot")

    ones = [k for k, x in enumerate(w) if x.index == 1]
    twos = [k for k, x in enumerate(w) if x.index == 2]
    outer_ids = [2 + j for j in range(len(ones))]
    inner_ids = [2 + len(ones) + j for j in range(len(twos))]
    names = ["U", "C"] + [f"P{j}" for j in range(len(ones))] + [f"Q{j}" for j in range(len(twos))]

    # seen[g] = number of generator-g crossings strictly before the current position
    seen = {1: 0, 2: 0}
    crossings = []
    for k, x in enumerate(w):
        if x.index == 1:
            j = seen[1]
            after = outer_ids[j]
            before = outer_ids[(j - 1) % len(ones)]
            side = inner_ids[(seen[2] - 1) % len(twos)]
            corners = (after, OUTSIDE, before, side)
        else:
            j = seen[2]
            after = inner_ids[j]
            before = inner_ids[(j - 1) % len(twos)]
            side = outer_ids[(seen[1] - 1) % len(ones)]
            corners = (after, side, before, CENTER)
        seen[x.index] += 1
        crossings.append(Crossing(k, x.index, x.sign, corners))

    if marked_segment is None:
        marked_segment = len(ones) - 1
    distinguished = (OUTSIDE, outer_ids[marked_segment % len(ones)])
    return Diagram(w, tuple(crossings), 2 + len(w), distinguished, tuple(names))


@dataclass(frozen=True)
class KauffmanState:
    """``corners[i]`` is the corner (0-3) marked at crossing i."""
    corners: Tuple[int, ...]

    def regions(self, d: Diagram) -> Tuple[int, ...]:
        return tuple(c.corners[k] for c, k in zip(d.crossings, self.corners))


def is_valid_state(d: Diagram, s: KauffmanState) -> bool:
    regs = s.regions(d)
    free = set(d.regions) - set(d.distinguished)
    return len(regs) == len(d.crossings) and set(regs) == free and len(set(regs)) == len(regs)


def enumerate_states(d: Diagram, max_states: Optional[int] = None) -> Iterator[KauffmanState]:
    """
    All Kauffman states, crossings in word order and corners in rotational
    order.  Raises StateLimitExceeded once more than ``max_states`` states
    have been produced.
    """
    n = len(d.crossings)
    blocked = set(d.distinguished)
    options = [[k for k, r in enumerate(c.corners) if r not in blocked] for c in d.crossings]

    # remaining[r] = number of crossings at index >= i that could still mark region r
    last_use = {}
    for i, c in enumerate(d.crossings):
        for r in c.corners:
            last_use[r] = i

    used = set()
    choice = [0] * n
    count = 0

    def rec(i):
        nonlocal count
        if i == n:
            count += 1
            if max_states is not None and count > max_states:
                raise StateLimitExceeded(f"more than {max_states} Kauffman states")
            yield KauffmanState(tuple(choice))
            return
        corners = d.crossings[i].corners
        for k in options[i]:
            r = corners[k]
            if r in used:
                continue
            # a free region whose last chance is this crossing must be taken now
            if any(last_use[q] == i and q not in used and q != r and q not in blocked
                   for q in corners):
                continue
            used.add(r)
            choice[i] = k
            yield from rec(i + 1)
            used.discard(r)

    yield from rec(0)


@dataclass(frozen=True)
class StateGrading:
    alexander: Fraction
    maslov: int
    delta: Fraction


def grade_state(d: Diagram, s: KauffmanState, table: GradingTable = STANDARD_GRADINGS) -> StateGrading:
    a = sum((table.alexander[c.sign][k] for c, k in zip(d.crossings, s.corners)), Fraction(0))
    m = sum(table.maslov[c.sign][k] for c, k in zip(d.crossings, s.corners))
    return StateGrading(a, m, a - m)


@dataclass(frozen=True)
class DeltaSpan:
    delta_min: Fraction
    delta_max: Fraction
    num_states: int

    @property
    def thickness_upper(self) -> Fraction:
        return self.delta_max - self.delta_min


def _doubled_gradings(d: Diagram, table: GradingTable):
    """Per-crossing, per-corner (2A, M) as ints."""
    return [tuple((int(2 * table.alexander[c.sign][k]), table.maslov[c.sign][k]) for k in range(4))
            for c in d.crossings]


def _state_gradings(d: Diagram, table: GradingTable, max_states: Optional[int]):
    """Yield (2A, M) for every state."""
    local = _doubled_gradings(d, table)
    for s in enumerate_states(d, max_states):
        a2 = m = 0
        for vals, k in zip(local, s.corners):
            a2 += vals[k][0]
            m += vals[k][1]
        yield a2, m


def delta_span(d: Diagram, table: GradingTable = STANDARD_GRADINGS,
               max_states: Optional[int] = None) -> DeltaSpan:
    deltas = [Fraction(a2, 2) - m for a2, m in _state_gradings(d, table, max_states)]
    if not deltas:
        raise DiagramError("diagram has no Kauffman states")
    span = DeltaSpan(min(deltas), max(deltas), len(deltas))
    assert span.thickness_upper <= HALF * (d.n_plus + d.n_minus)
    return span


def state_sum_alexander(d: Diagram, table: GradingTable = STANDARD_GRADINGS,
                        max_states: Optional[int] = None) -> LaurentPoly:
    """Sum over states of (-1)^M t^A, symmetrized."""
    terms: Dict[int, int] = {}
    for e, m in _state_gradings(d, table, max_states):
        terms[e] = terms.get(e, 0) + (-1 if m % 2 else 1)
    exps = [e for e, a in terms.items() if a]
    if not exps:
        return LaurentPoly()
    if len({e % 2 for e in exps}) != 1:
        raise ValueError("Alexander gradings do not lie in a single coset; grading table is wrong")
    base = min(exps)
    poly = LaurentPoly({(e - base) // 2: a for e, a in terms.items()})
    return poly.normalize_symmetric()
