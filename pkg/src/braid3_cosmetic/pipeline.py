"""
End-to-end analysis of one braid word and its serializable certificate.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import __version__
from .alexander import alexander_poly
from .braidcore import (BandWord, BraidWord, Word, artin_to_band, as_artin, band_to_artin,
                        is_knot, num_components, parse_word, render)
from .kauffman import StateLimitExceeded, build_diagram, delta_span
from .laurent import render_poly
from .obstruction import GenusBounds, thickness_bound_from_genus, verdict
from .wordopt import RewriteBudget, best_rotation, crossing_bound, minimize_band_length

DEFAULT_MAX_STATES = 100_000


class InvalidInputError(ValueError):
    """Input that cannot enter the pipeline: bad syntax, empty, or not a knot."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _q(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class GenusBlock:
    lower: int
    upper: str
    certified: bool


@dataclass(frozen=True)
class SpanEntry:
    diagram: str
    crossings: int
    states: Optional[int]
    span: Optional[str]


@dataclass(frozen=True)
class ThicknessBlock:
    delta_span: Optional[str]
    genus_bound: str
    active: str
    value: str
    diagrams: Tuple[SpanEntry, ...]


@dataclass(frozen=True)
class VerdictBlock:
    verdict: str
    reason: Optional[str]
    residual_slopes: Tuple[Tuple[str, str], ...]
    ratio: Optional[str]
    q_max: Optional[int]
    notes: Tuple[str, ...]


@dataclass(frozen=True)
class BudgetBlock:
    max_states_explored: int
    max_depth: int
    states_explored: int
    exhausted: bool
    max_kauffman_states: int


@dataclass(frozen=True)
class Certificate:
    input: str
    alphabet: str
    is_knot: bool
    band_word: str
    band_length: int
    genus: GenusBlock
    crossing_bound: int
    thickness: ThicknessBlock
    alexander: str
    a2: int
    determinant: int
    verdict: Optional[VerdictBlock]
    version: str
    budget: BudgetBlock
    notes: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: Optional[int] = 2) -> str:
        sep = (",", ": ") if indent is not None else (",", ":")
        return json.dumps(self.to_dict(), indent=indent, separators=sep, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> Certificate:
        d = dict(d)
        d["genus"] = GenusBlock(**d["genus"])
        t = dict(d["thickness"])
        t["diagrams"] = tuple(SpanEntry(**e) for e in t["diagrams"])
        d["thickness"] = ThicknessBlock(**t)
        if d["verdict"] is not None:
            v = dict(d["verdict"])
            v["residual_slopes"] = tuple(tuple(p) for p in v["residual_slopes"])
            v["notes"] = tuple(v["notes"])
            d["verdict"] = VerdictBlock(**v)
        d["budget"] = BudgetBlock(**d["budget"])
        d["notes"] = tuple(d.get("notes", ()))
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        return cls.from_dict(json.loads(text))


def parse_input(text: str) -> Word:
    try:
        w = parse_word(text)
    except ValueError as e:
        raise InvalidInputError("parse", str(e)) from e
    if len(w) == 0:
        raise InvalidInputError("empty", "empty word")
    if not is_knot(w):
        raise InvalidInputError("not-a-knot", f"closure has {num_components(w)} components")
    return w


def _span_entry(label: str, w: BraidWord, max_states: int):
    try:
        s = delta_span(build_diagram(w), max_states=max_states)
    except StateLimitExceeded:
        return SpanEntry(label, len(w), None, None), None
    return SpanEntry(label, len(w), s.num_states, _q(s.thickness_upper)), s.thickness_upper


def analyze(text: str, budget: RewriteBudget = RewriteBudget(),
            max_states: int = DEFAULT_MAX_STATES, with_verdict: bool = True) -> Certificate:
    """Run every stage on ``text``; raises InvalidInputError for unusable input."""
    w = parse_input(text)
    alphabet = "band" if isinstance(w, BandWord) else "artin"
    band = w if isinstance(w, BandWord) else artin_to_band(w)

    alex = alexander_poly(w)
    opt = minimize_band_length(band, budget, genus_lower_hint=alex.genus_lower)
    best = best_rotation(opt.best_word)
    gb = GenusBounds(alex.genus_lower, opt.genus_upper)

    notes: List[str] = []
    entries, spans = [], []
    candidates = [("input", as_artin(w))]
    best_artin = band_to_artin(best)
    if best_artin != candidates[0][1]:
        candidates.append(("shortened", best_artin))
    for label, aw in candidates:
        entry, value = _span_entry(label, aw, max_states)
        entries.append(entry)
        if value is None:
            notes.append(f"Kauffman state count of the {label} diagram exceeds {max_states}; span skipped")
        else:
            spans.append(value)

    genus_th = thickness_bound_from_genus(opt.genus_upper)
    span = min(spans) if spans else None
    if span is not None and span <= genus_th:
        active, th = "delta_span", span
    else:
        active, th = "genus_bound", genus_th

    vblock = None
    if with_verdict:
        rep = verdict(alex.a2, gb, th)
        vblock = VerdictBlock(
            verdict=rep.verdict.value,
            reason=rep.reason.value if rep.reason else None,
            residual_slopes=tuple((str(a), str(b)) for a, b in rep.candidates),
            ratio=_q(rep.ratio) if rep.ratio is not None else None,
            q_max=rep.q_max,
            notes=rep.notes,
        )

    return Certificate(
        input=render(w),
        alphabet=alphabet,
        is_knot=True,
        band_word=render(best),
        band_length=opt.length,
        genus=GenusBlock(gb.lower, _q(gb.upper), gb.certified),
        crossing_bound=crossing_bound(best),
        thickness=ThicknessBlock(
            delta_span=_q(span) if span is not None else None,
            genus_bound=_q(genus_th),
            active=active,
            value=_q(th),
            diagrams=tuple(entries),
        ),
        alexander=render_poly(alex.delta),
        a2=alex.a2,
        determinant=alex.determinant,
        verdict=vblock,
        version=__version__,
        budget=BudgetBlock(
            max_states_explored=budget.max_states_explored,
            max_depth=budget.max_depth,
            states_explored=opt.states_explored,
            exhausted=opt.exhausted,
            max_kauffman_states=max_states,
        ),
        notes=tuple(notes),
    )
