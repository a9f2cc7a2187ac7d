"""Finite rational sets and exact element parsing.

Set elements are exact ``Fraction`` values.  Floating-point literals are
rejected at parse time: rationality is part of the spectrality decision, so
an input must either carry an exact fraction or be tagged explicitly as
irrational.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import InvalidInputError

__all__ = [
    "FiniteRationalSet",
    "Irrational",
    "ElementInput",
    "parse_fraction",
    "parse_element",
    "fraction_str",
    "scale_translate",
]

_FRACTION_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_fraction(text: str) -> Fraction:
    """Parse an exact "p/q" or integer string; floats are rejected."""
    text = text.strip()
    if not _FRACTION_RE.match(text):
        raise InvalidInputError(f"not an exact fraction: {text!r}")
    return Fraction(text)


def fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class Irrational:
    """Marker for an irrational input; carries a display label only."""

    label: str


ElementInput = Union[Fraction, Irrational]


def parse_element(text: str) -> ElementInput:
    return parse_fraction(text)


class FiniteRationalSet:
    """Nonempty strictly increasing tuple of distinct rationals."""

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable) -> None:
        elems = sorted(Fraction(e) for e in elements)
        if not elems:
            raise InvalidInputError("set must be nonempty")
        for a, b in zip(elems, elems[1:]):
            if a == b:
                raise InvalidInputError(f"set has repeated element {a}")
        self.elements = tuple(elems)

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "FiniteRationalSet":
        return cls(parse_fraction(s) for s in items)

    def to_strings(self) -> list[str]:
        return [fraction_str(e) for e in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return Fraction(x) in self.elements

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteRationalSet) and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"FiniteRationalSet({{{', '.join(self.to_strings())}}})"


def scale_translate(A: FiniteRationalSet, c, t) -> FiniteRationalSet:
    """Return c*A + t (sorted).  Spectrality is invariant under this map."""
    c = Fraction(c)
    t = Fraction(t)
    if c == 0:
        raise InvalidInputError("scale factor must be nonzero")
    return FiniteRationalSet(c * a + t for a in A)
