"""
Shortening band words by bounded breadth-first search.

Moves are the length-2 substitutions implied by a2 a1 = a3 a2 = a1 a3,
cyclic shifts (conjugation) and free reduction.  Length never increases,
so every word found is an upper bound for the banded-surface genus
(l - 2) / 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .braidcore import BandWord, is_knot, letter_counts, render, rotate_band


# letters are encoded as ints 0..5 in the canonical order
# a1 < a1^-1 < a2 < a2^-1 < a3 < a3^-1
def _code(index: int, sign: int) -> int:
    return 2 * (index - 1) + (0 if sign == 1 else 1)


def _decode(c: int) -> Tuple[int, int]:
    return c // 2 + 1, 1 if c % 2 == 0 else -1


def _inv(c: int) -> int:
    return c ^ 1


def _encode_word(w: BandWord) -> Tuple[int, ...]:
    return tuple(_code(x.index, x.sign) for x in w)


def _decode_word(code: Iterable[int]) -> BandWord:
    return BandWord.from_pairs(_decode(c) for c in code)


def _build_rules() -> Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]]:
    a1, a2, a3 = _code(1, 1), _code(2, 1), _code(3, 1)
    # each relator is a cyclic word equal to the identity
    relators = [
        (a2, a1, _inv(a2), _inv(a3)),   # a2 a1 = a3 a2
        (a3, a2, _inv(a3), _inv(a1)),   # a3 a2 = a1 a3
        (a2, a1, _inv(a3), _inv(a1)),   # a2 a1 = a1 a3
    ]
    variants = set()
    for r in relators:
        for s in (r, tuple(_inv(c) for c in reversed(r))):
            for k in range(4):
                variants.add(s[k:] + s[:k])
    rules: Dict[Tuple[int, int], Set[Tuple[int, int]]] = {}
    for x1, x2, x3, x4 in variants:
        lhs, rhs = (x1, x2), (_inv(x4), _inv(x3))
        if lhs != rhs:
            rules.setdefault(lhs, set()).add(rhs)
    return {k: tuple(sorted(v)) for k, v in sorted(rules.items())}


RULES = _build_rules()


def _free_reduce(code: Tuple[int, ...]) -> Tuple[int, ...]:
    out: List[int] = []
    for c in code:
        if out and out[-1] == _inv(c):
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def _cyclic_reduce(code: Tuple[int, ...]) -> Tuple[int, ...]:
    code = _free_reduce(code)
    i, j = 0, len(code)
    while j - i >= 2 and code[i] == _inv(code[j - 1]):
        i += 1
        j -= 1
    return code[i:j]


def canonical_key(code: Tuple[int, ...]) -> Tuple[int, ...]:
    """Lexicographically least cyclic rotation."""
    if not code:
        return code
    return min(code[k:] + code[:k] for k in range(len(code)))


def free_reduce(w: BandWord) -> BandWord:
    return _decode_word(_free_reduce(_encode_word(w)))


def _rewrites(code: Tuple[int, ...]) -> Iterable[Tuple[int, ...]]:
    for i in range(len(code) - 1):
        for rhs in RULES.get((code[i], code[i + 1]), ()):
            yield code[:i] + rhs + code[i + 2:]


def rewrite_neighbors(w: BandWord) -> FrozenSet[BandWord]:
    """
    Words one move away from ``w``: a relation substitution on an adjacent
    pair, a cyclic shift by one letter in either direction, and the free
    reductions of all of these.
    """
    code = _encode_word(w)
    if not code:
        return frozenset({w})
    moved = list(_rewrites(code)) + [code[1:] + code[:1], code[-1:] + code[:-1]]
    out = set(moved) | {_free_reduce(c) for c in moved}
    reduced = _free_reduce(code)
    if reduced != code:
        out.add(reduced)
    return frozenset(_decode_word(c) for c in out)


def _cyclic_neighbors(code: Tuple[int, ...]) -> Iterable[Tuple[int, ...]]:
    """Rewrites at every cyclic position, cyclically reduced."""
    n = len(code)
    for k in range(n):
        rot = code[k:] + code[:k]
        for rhs in RULES.get((rot[0], rot[1]), ()) if n >= 2 else ():
            yield _cyclic_reduce(rhs + rot[2:])


@dataclass(frozen=True)
class RewriteBudget:
    max_states_explored: int = 200_000
    max_depth: int = 64

    def __post_init__(self):
        if self.max_states_explored <= 0 or self.max_depth <= 0:
            raise ValueError("budget values must be positive")


@dataclass(frozen=True)
class MinimizationResult:
    best_word: BandWord
    length: int
    genus_upper: Fraction
    certified_minimal: bool
    states_explored: int
    exhausted: bool


def _crossings(code: Tuple[int, ...]) -> int:
    return crossing_bound(_decode_word(code))


def minimize_band_length(w: BandWord, budget: RewriteBudget = RewriteBudget(),
                         genus_lower_hint: Optional[int] = None) -> MinimizationResult:
    """
    Breadth-first search for a short word conjugate-equivalent to ``w``.
    Words are memoized by their least cyclic rotation, so each visited
    state stands for a whole conjugacy orbit of rotations.  Among shortest
    words found the one with the smallest crossing bound wins, then the
    least canonical key.
    """
    if not is_knot(w):
        raise ValueError(f"closure of {render(w)!r} is not a knot")

    start = canonical_key(_cyclic_reduce(_encode_word(w)))
    target = None if genus_lower_hint is None else 2 * genus_lower_hint + 2

    def better(code, than):
        if len(code) != len(than):
            return len(code) < len(than)
        return (_crossings(code), code) < (_crossings(than), than)

    best = start
    seen = {start}
    queue = deque([(start, 0)])
    explored = 0
    exhausted = False
    while queue:
        if target is not None and len(best) <= target:
            break
        if explored >= budget.max_states_explored:
            exhausted = True
            break
        code, depth = queue.popleft()
        explored += 1
        if depth >= budget.max_depth:
            exhausted = True
            continue
        for nxt in _cyclic_neighbors(code):
            key = canonical_key(nxt)
            if key in seen:
                continue
            seen.add(key)
            if len(key) <= len(best) and better(key, best):
                best = key
            queue.append((key, depth + 1))

    length = len(best)
    genus_upper = Fraction(length - 2, 2)
    certified = genus_lower_hint is not None and genus_upper == genus_lower_hint
    return MinimizationResult(
        best_word=_decode_word(best),
        length=length,
        genus_upper=genus_upper,
        certified_minimal=certified,
        states_explored=explored,
        exhausted=exhausted,
    )


def _crossing_count(w: BandWord) -> int:
    a1, a2, a3 = letter_counts(w)
    return a1 + a2 + 3 * a3


def best_rotation(w: BandWord) -> BandWord:
    """
    The generator rotation of ``w`` with the fewest a3 letters; ties go to
    fewer crossings, then to the earliest rotation.
    """
    c = letter_counts(w)
    # rotating once sends a1 -> a2 -> a3 -> a1, so the counts shift cyclically
    shifted = [c, (c[2], c[0], c[1]), (c[1], c[2], c[0])]
    k = min(range(3), key=lambda i: (shifted[i][2], shifted[i][0] + shifted[i][1] + 3 * shifted[i][2]))
    for _ in range(k):
        w = rotate_band(w)
    return w


def crossing_bound(w: BandWord) -> int:
    """A1 + A2 + 3 A3 for the best rotation of ``w``."""
    return _crossing_count(best_rotation(w))
