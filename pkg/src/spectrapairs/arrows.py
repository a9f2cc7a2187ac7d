"""Fixpoint deduction engine over subspace-mapping facts.

A fact S ->(t) T records that the unitary U(t) maps the span of the basis
vectors indexed by S into the span of those indexed by T.  Starting from
the base facts {a} ->(b-a) {b} (which hold whenever {U(a) v0 : a in A} is
an orthonormal basis), the engine saturates under:

  R1 complement:   S ->(t) T with |S| = |T|  gives  A\\S ->(t) A\\T
  R2 cancellation: S ->(t) C u D and S' ->(t) C, S n S' empty, |S'| = |C|,
                   gives S ->(t) D
  R3 composition:  S ->(s) T, T ->(t) R, |S| = |T|  gives  S ->(s+t) R
  R4 intersection: two facts with the same source and move intersect their
                   targets (applied eagerly so stored targets are minimal)

Every singleton additionally maps into the whole space at any move (a
unitary fixes nothing weaker); these trivial facts are what make R2 realize
"must be mapped into the orthogonal complement" reasoning.  A derived
target smaller than its source is a dimension contradiction and raises
``InconsistencyError`` carrying the deduction trace: this is how assuming
spectrality of a non-spectral set surfaces.

Moves are affine expressions c0 + c1*alpha over a single symbolic
irrational alpha, so the ground set may contain one symbolic element;
purely rational sessions have c1 = 0 everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import InconsistencyError, InvalidInputError
from .sets import FiniteRationalSet, Irrational

__all__ = [
    "Affine",
    "symbol",
    "ArrowFact",
    "Session",
    "new_session",
    "close",
    "extract_permutation",
    "PermutationAction",
    "rationality_obstruction",
]


@dataclass(frozen=True)
class Affine:
    """Value c0 + c1 * alpha with rational coefficients."""

    const: Fraction
    sym: Fraction = Fraction(0)

    def __add__(self, other: "Affine") -> "Affine":
        return Affine(self.const + other.const, self.sym + other.sym)

    def __sub__(self, other: "Affine") -> "Affine":
        return Affine(self.const - other.const, self.sym - other.sym)

    def __neg__(self) -> "Affine":
        return Affine(-self.const, -self.sym)

    def is_zero(self) -> bool:
        return self.const == 0 and self.sym == 0

    def is_rational(self) -> bool:
        return self.sym == 0

    def __str__(self) -> str:
        if self.sym == 0:
            return str(self.const)
        sym = "a" if self.sym == 1 else ("-a" if self.sym == -1 else f"{self.sym}a")
        if self.const == 0:
            return sym
        sign = "+" if self.sym > 0 else ""
        return f"{self.const}{sign}{sym.lstrip('+')}" if self.sym > 0 else f"{self.const}{sym}"

    # Sort key for deterministic serialization.
    def _key(self):
        return (self.const, self.sym)


def symbol() -> Affine:
    """The symbolic irrational alpha."""
    return Affine(Fraction(0), Fraction(1))


def _coerce(value) -> Affine:
    if isinstance(value, Affine):
        return value
    if isinstance(value, Irrational):
        return symbol()
    return Affine(Fraction(value))


@dataclass(frozen=True)
class ArrowFact:
    source: frozenset[int]
    move: Affine
    target: frozenset[int]


class Session:
    """Single-owner mutable deduction state over a fixed ground set."""

    def __init__(
        self,
        elements: Sequence[Affine],
        moves: frozenset[Affine],
        round_budget: int,
    ):
        self.elements = tuple(elements)
        self.moves = moves
        self.round_budget = round_budget
        # Minimal known target per (source, move).
        self.facts: dict[tuple[frozenset[int], Affine], frozenset[int]] = {}
        self.trace: list[dict] = []
        self.closed = False
        self.rounds_used = 0

    @property
    def full(self) -> frozenset[int]:
        return frozenset(range(len(self.elements)))

    def fact_list(self) -> list[ArrowFact]:
        return [
            ArrowFact(s, m, t)
            for (s, m), t in sorted(
                self.facts.items(),
                key=lambda kv: (sorted(kv[0][0]), kv[0][1]._key(), sorted(kv[1])),
            )
        ]

    def has_fact(self, source: Iterable[int], move, target: Iterable[int]) -> bool:
        """True when the stored fact for (source, move) implies the given one."""
        known = self.facts.get((frozenset(source), _coerce(move)))
        return known is not None and known <= frozenset(target)

    def _record(self, rule: str, source, move, target, parents) -> None:
        self.trace.append(
            {
                "rule": rule,
                "source": sorted(source),
                "move": str(move),
                "target": sorted(target),
                "parents": [list(p) for p in parents],
            }
        )

    def add_fact(
        self,
        source: frozenset[int],
        move: Affine,
        target: frozenset[int],
        rule: str = "seed",
        parents: Optional[list] = None,
    ) -> bool:
        """Insert a fact, eagerly intersecting targets (R4).  Returns True
        when knowledge grew."""
        if not source or not target:
            raise InvalidInputError("source and target must be nonempty")
        key = (source, move)
        known = self.facts.get(key)
        new = target if known is None else (known & target)
        if known is not None and new == known:
            return False
        if known is not None:
            rule = f"{rule}+R4"
        if len(new) < len(source):
            self._record(rule, source, move, new, parents or [])
            raise InconsistencyError(
                f"target {sorted(new)} smaller than source {sorted(source)} "
                f"at move {move}",
                trace=self.trace,
            )
        self.facts[key] = new
        self._record(rule, source, move, new, parents or [])
        return True

    def to_json(self) -> dict:
        return {
            "elements": [str(e) for e in self.elements],
            "closed": self.closed,
            "rounds_used": self.rounds_used,
            "facts": [
                {
                    "source": sorted(f.source),
                    "move": str(f.move),
                    "target": sorted(f.target),
                }
                for f in self.fact_list()
            ],
        }


def new_session(
    A: Union[FiniteRationalSet, Sequence],
    moves: Iterable,
    round_budget: int = 6,
) -> Session:
    """Seed a session with the base facts {a} ->(b-a) {b} for a, b in A,
    plus the identity facts {a} ->(0) {a}."""
    elements = [_coerce(e) for e in A]
    if len(elements) < 2:
        raise InvalidInputError("ground set needs at least two elements")
    if len({e._key() for e in elements}) != len(elements):
        raise InvalidInputError("ground set has repeated elements")
    move_set = frozenset(_coerce(m) for m in moves)
    if not move_set:
        raise InvalidInputError("moves must be nonempty")
    session = Session(elements, move_set, round_budget)
    n = len(elements)
    zero = Affine(Fraction(0))
    for i in range(n):
        session.add_fact(frozenset({i}), zero, frozenset({i}), rule="base")
        for j in range(n):
            if i != j:
                session.add_fact(
                    frozenset({i}),
                    elements[j] - elements[i],
                    frozenset({j}),
                    rule="base",
                )
    return session


def _allowed_moves(session: Session) -> set[Affine]:
    """Closure of the generating moves under addition, up to round_budget
    summands; caps which compositions R3 may produce."""
    base = set(session.moves) | {Affine(Fraction(0))}
    current = set(base)
    for _ in range(session.round_budget):
        extended = current | {m + g for m in current for g in base}
        if extended == current:
            break
        current = extended
    return current


def close(session: Session) -> Session:
    """Saturate the fact set under R1-R4 (budgeted rounds)."""
    allowed = _allowed_moves(session)
    full = session.full
    for round_index in range(session.round_budget):
        changed = False
        # Trivial facts: every singleton maps into the whole space at every
        # move currently in play.  R2 cancels known images out of these.
        moves_in_play = {m for (_, m) in session.facts} | set(session.moves)
        for m in sorted(moves_in_play, key=Affine._key):
            for i in sorted(full):
                src = frozenset({i})
                if (src, m) not in session.facts:
                    changed |= session.add_fact(src, m, full, rule="trivial")

        snapshot = list(session.facts.items())
        by_move: dict[Affine, list] = {}
        for (s, m), t in snapshot:
            by_move.setdefault(m, []).append((s, t))
        by_source: dict[frozenset, list] = {}
        for (s, m), t in snapshot:
            by_source.setdefault(s, []).append((m, t))

        for (s, m), t in snapshot:
            # R1 complement.
            if len(s) == len(t) and s != full:
                changed |= session.add_fact(
                    full - s,
                    m,
                    full - t,
                    rule="R1",
                    parents=[(sorted(s), str(m), sorted(t))],
                )
            # R2 cancellation.
            for s2, c in by_move.get(m, ()):
                if s2.isdisjoint(s) and len(s2) == len(c) and c <= t and c < t:
                    changed |= session.add_fact(
                        s,
                        m,
                        t - c,
                        rule="R2",
                        parents=[
                            (sorted(s), str(m), sorted(t)),
                            (sorted(s2), str(m), sorted(c)),
                        ],
                    )
            # R3 composition (first fact must be dimension-preserving).
            if len(s) == len(t):
                for m2, r in by_source.get(t, ()):
                    total = m + m2
                    if total in allowed:
                        changed |= session.add_fact(
                            s,
                            total,
                            r,
                            rule="R3",
                            parents=[
                                (sorted(s), str(m), sorted(t)),
                                (sorted(t), str(m2), sorted(r)),
                            ],
                        )
        session.rounds_used = round_index + 1
        if not changed:
            break
    session.closed = True
    return session


@dataclass(frozen=True)
class PermutationAction:
    move: Affine
    sigma: tuple[int, ...]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.sigma))


def extract_permutation(session: Session, move) -> Optional[PermutationAction]:
    """The permutation induced on basis lines by U(move), if every singleton
    has been pinned to a singleton image."""
    if not session.closed:
        raise InvalidInputError("session must be closed first")
    move = _coerce(move)
    images = []
    for i in range(len(session.elements)):
        t = session.facts.get((frozenset({i}), move))
        if t is None or len(t) != 1:
            return None
        images.append(next(iter(t)))
    if len(set(images)) != len(images):
        raise InconsistencyError(
            f"U({move}) maps two basis lines onto the same line",
            trace=session.trace,
        )
    return PermutationAction(move, tuple(images))


def rationality_obstruction(p1: PermutationAction, p2: PermutationAction) -> str:
    """Two permutation actions with an irrational move ratio cannot coexist
    unless both permutations are trivial.  Returns "consistent" or
    "inconsistent"."""
    m1, m2 = p1.move, p2.move
    if m1.is_zero() or m2.is_zero():
        raise InvalidInputError("moves must be nonzero")
    if p1.is_identity() and p2.is_identity():
        return "consistent"
    # m1/m2 is rational iff (c1, s1) and (c2, s2) are parallel over Q.
    parallel = m1.const * m2.sym == m1.sym * m2.const
    return "consistent" if parallel else "inconsistent"
