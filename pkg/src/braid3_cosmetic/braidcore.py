"""
Words in the 3-strand braid group.

Two alphabets are supported: the Artin generators s1, s2 and the band
generators a1, a2, a3 satisfying a2 a1 = a3 a2 = a1 a3, where a1 = s1,
a2 = s2 and a3 = s2 s1 s2^-1.

Words are immutable tuples of letters.  A letter is a ``(index, sign)``
pair; the alphabet is carried by the word type.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple, Union


class WordSyntaxError(ValueError):
    """Raised for malformed word text.  ``position`` is a character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MixedAlphabetError(WordSyntaxError):
    pass


@dataclass(frozen=True, order=True)
class ArtinLetter:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index not in (1, 2):
            raise ValueError(f"Artin generator index must be 1 or 2, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> ArtinLetter:
        return ArtinLetter(self.index, -self.sign)

    def __str__(self):
        return f"s{self.index}" if self.sign == 1 else f"s{self.index}^-1"


@dataclass(frozen=True, order=True)
class BandLetter:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index not in (1, 2, 3):
            raise ValueError(f"band generator index must be 1, 2 or 3, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> BandLetter:
        return BandLetter(self.index, -self.sign)

    def __str__(self):
        return f"a{self.index}" if self.sign == 1 else f"a{self.index}^-1"


class _Word:
    letter_type: type = None
    prefix: str = ""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable = ()):
        letters = tuple(letters)
        for x in letters:
            if not isinstance(x, self.letter_type):
                raise TypeError(f"{type(self).__name__} cannot hold {x!r}")
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("words are immutable")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]):
        """Build a word from ``(index, sign)`` pairs."""
        return cls(cls.letter_type(i, s) for i, s in pairs)

    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((x.index, x.sign) for x in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return type(self)(self.letters[i])
        return self.letters[i]

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self.letters + other.letters)

    def __mul__(self, k: int):
        return type(self)(self.letters * k)

    def __eq__(self, other):
        return type(other) is type(self) and other.letters == self.letters

    def __hash__(self):
        return hash((type(self).__name__, self.letters))

    def __repr__(self):
        return f"{type(self).__name__}({render(self)!r})"

    def __str__(self):
        return render(self)

    def inverse(self):
        return type(self)(x.inverse() for x in reversed(self.letters))

    def mirror(self):
        """Flip every crossing sign (the mirror image of the closure)."""
        return type(self)(x.inverse() for x in self.letters)

    def cyclic_shift(self, k: int = 1):
        """Conjugate by moving the first ``k`` letters to the end."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return type(self)(self.letters[k:] + self.letters[:k])


class BraidWord(_Word):
    """A word in the Artin generators s1, s2."""
    letter_type = ArtinLetter
    prefix = "s"
    __slots__ = ()


class BandWord(_Word):
    """A word in the band generators a1, a2, a3."""
    letter_type = BandLetter
    prefix = "a"
    __slots__ = ()


Word = Union[BraidWord, BandWord]


@dataclass(frozen=True)
class Permutation3:
    """Images of strands 1, 2, 3; ``images[i-1]`` is where strand i goes."""
    images: Tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1,2,3: {self.images}")

    @classmethod
    def identity(cls) -> Permutation3:
        return cls((1, 2, 3))

    def then(self, other: Permutation3) -> Permutation3:
        """Apply ``self`` first, then ``other``."""
        return Permutation3(tuple(other.images[self.images[i] - 1] for i in range(3)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def cycle_type(self) -> Tuple[int, ...]:
        seen, lengths = set(), []
        for start in (1, 2, 3):
            if start in seen:
                continue
            n, j = 0, start
            while j not in seen:
                seen.add(j)
                j = self(j)
                n += 1
            lengths.append(n)
        return tuple(sorted(lengths, reverse=True))

    def is_three_cycle(self) -> bool:
        return self.cycle_type() == (3,)

    def num_cycles(self) -> int:
        return len(self.cycle_type())


# ---------------------------------------------------------------------------
# Parsing and rendering

_TOKEN = re.compile(r"([sa])([0-9]+)(?:\^([+-]?[0-9]+))?")


def parse_word(text: str) -> Word:
    """
    Parse whitespace-separated tokens ``s1 s2 a1 a2 a3`` with optional
    ``^k`` exponents.  Exponents expand into repeated letters; ``^0`` is
    allowed and contributes nothing.  The empty string parses to the
    empty Artin word.
    """
    alphabet = None
    first_pos = 0
    pairs = []
    for m in re.finditer(r"\S+", text):
        tok, pos = m.group(), m.start()
        tm = _TOKEN.fullmatch(tok)
        if tm is None:
            raise WordSyntaxError(f"bad token {tok!r}", pos)
        letter, idx, exp = tm.group(1), int(tm.group(2)), tm.group(3)
        valid = (1, 2) if letter == "s" else (1, 2, 3)
        if idx not in valid:
            raise WordSyntaxError(f"no generator {letter}{idx}", pos)
        if alphabet is None:
            alphabet, first_pos = letter, pos
        elif alphabet != letter:
            raise MixedAlphabetError(
                f"token {tok!r} mixes alphabets with the token at {first_pos}", pos)
        k = 1 if exp is None else int(exp)
        sign = 1 if k > 0 else -1
        pairs.extend([(idx, sign)] * abs(k))
    cls = BandWord if alphabet == "a" else BraidWord
    return cls.from_pairs(pairs)


def render(w: Word) -> str:
    """Canonical text form: one token per letter, inverses as ``^-1``."""
    return " ".join(str(x) for x in w.letters)


def render_compact(w: Word) -> str:
    """Text form with runs of equal letters collapsed into exponents."""
    out = []
    letters = w.letters
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        k = (j - i) * letters[i].sign
        name = f"{w.prefix}{letters[i].index}"
        out.append(name if k == 1 else f"{name}^{k}")
        i = j
    return " ".join(out)


# ---------------------------------------------------------------------------
# Conversions and counts

def artin_to_band(w: BraidWord) -> BandWord:
    return BandWord(BandLetter(x.index, x.sign) for x in w)


def band_to_artin(w: BandWord) -> BraidWord:
    """a1 -> s1, a2 -> s2, a3^e -> s2 s1^e s2^-1."""
    out = []
    for x in w:
        if x.index == 3:
            out += [ArtinLetter(2, 1), ArtinLetter(1, x.sign), ArtinLetter(2, -1)]
        else:
            out.append(ArtinLetter(x.index, x.sign))
    return BraidWord(out)


def as_artin(w: Word) -> BraidWord:
    return band_to_artin(w) if isinstance(w, BandWord) else w


def _compose_table():
    swaps = {1: (0, 1), 2: (1, 2), 3: (0, 2)}
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    table = {}
    for k, pos in enumerate(perms):
        for g, (i, j) in swaps.items():
            new = tuple(j if p == i else i if p == j else p for p in pos)
            table[k, g] = perms.index(new)
    return perms, table


# pos[s] = position of strand s; letters move strands at the swapped positions
_PERMS, _STEP = _compose_table()


def closure_permutation(w: Word) -> Permutation3:
    """Strand permutation of the braid, letters applied left to right."""
    k = 0
    step = _STEP
    for x in w.letters:
        k = step[k, x.index]
    return Permutation3(tuple(p + 1 for p in _PERMS[k]))


def is_knot(w: Word) -> bool:
    """True iff the closure has a single component."""
    return closure_permutation(w).is_three_cycle()


def num_components(w: Word) -> int:
    return closure_permutation(w).num_cycles()


def rotate_band(w: BandWord) -> BandWord:
    return BandWord(BandLetter(x.index % 3 + 1, x.sign) for x in w)


def letter_counts(w: BandWord) -> Tuple[int, int, int]:
    counts = [0, 0, 0]
    for x in w:
        counts[x.index - 1] += 1
    return tuple(counts)


def exponent_sum(w: Word) -> int:
    return sum(x.sign for x in w)
