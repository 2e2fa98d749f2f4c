"""GF(2) algebra on the ideal classes [H1], [H2], [H3], [H4], [I].

Each H_j squares to a principal ideal, so the subgroup they generate is an
elementary abelian 2-group and a class is a bit vector.  [Q] is not a basis
element: [H1 H2 H3 H4 Q] = [(sqrt(d))] is trivial, so [Q] = H1+H2+H3+H4.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .squareclass import Pattern

BASIS = ("H1", "H2", "H3", "H4", "I")
_INDEX = {name: i for i, name in enumerate(BASIS)}


@dataclass(frozen=True, order=True)
class ClassWord:
    bits: int = 0

    @classmethod
    def parse(cls, text: str) -> ClassWord:
        """Parse 'H1+H3', 'Q' or '0'."""
        text = text.strip()
        if text in ("", "0", "1"):
            return cls(0)
        bits = 0
        for part in text.split("+"):
            part = part.strip()
            if part == "Q":
                bits ^= Q.bits
            elif part in _INDEX:
                bits ^= 1 << _INDEX[part]
            else:
                raise ValueError(f"unknown class generator {part!r}")
        return cls(bits)

    def __add__(self, other: ClassWord) -> ClassWord:
        return ClassWord(self.bits ^ other.bits)

    def __bool__(self):
        return self.bits != 0

    def __str__(self):
        if not self.bits:
            return "0"
        return "+".join(name for i, name in enumerate(BASIS) if self.bits >> i & 1)

    def __repr__(self):
        return f"ClassWord({self})"


H1, H2, H3, H4, I = (ClassWord(1 << i) for i in range(5))
Q = H1 + H2 + H3 + H4


def words(*texts: str) -> tuple[ClassWord, ...]:
    return tuple(ClassWord.parse(t) for t in texts)


@dataclass(frozen=True)
class RelationSet:
    """Class words declared trivial, tagged with the pattern they came from."""

    relations: tuple[ClassWord, ...] = ()
    source: str = ""

    def __iter__(self):
        return iter(self.relations)


_RELATIONS = {
    Pattern.ONE: (),
    Pattern.P1: (H1 + H2,),
    Pattern.TWO_P1: (H1 + H2,),
    Pattern.P2: (H3 + H4,),
    Pattern.TWO_P2: (H3 + H4,),
    Pattern.Q: (Q,),
    Pattern.TWO_Q: (Q,),
}


def relations_for(pattern: Pattern) -> RelationSet:
    """Trivial relations among the H_j forced by the square class of eps_d."""
    try:
        rel = _RELATIONS[Pattern(pattern)]
    except (KeyError, ValueError):
        raise ValueError(f"unreachable pattern {pattern!r}") from None
    return RelationSet(rel, Pattern(pattern).pair_label)


def _rank(vectors: Iterable[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def _bits(ws) -> list[int]:
    return [w.bits for w in ws]


def span_order(ws: Iterable[ClassWord], rel: RelationSet | Iterable[ClassWord] = ()) -> int:
    """Order of the subgroup generated by ``ws`` in the quotient by ``rel``."""
    rb = _bits(rel)
    return 2 ** (_rank(_bits(ws) + rb) - _rank(rb))


def in_span(w: ClassWord, ws: Iterable[ClassWord], rel: RelationSet | Iterable[ClassWord] = ()) -> bool:
    gen = _bits(ws) + _bits(rel)
    return _rank(gen + [w.bits]) == _rank(gen)


def same_span(a: Iterable[ClassWord], b: Iterable[ClassWord], rel=()) -> bool:
    a, b = list(a), list(b)
    return all(in_span(w, b, rel) for w in a) and all(in_span(w, a, rel) for w in b)


def subspan(a: Iterable[ClassWord], b: Iterable[ClassWord], rel=()) -> bool:
    """Every word of ``a`` lies in the span of ``b`` modulo ``rel``."""
    b = list(b)
    return all(in_span(w, b, rel) for w in a)


def relations_complete(pattern: Pattern, rank_cl2: int, uses_I: bool) -> bool:
    """Whether the relation table accounts for the full 2-rank.

    False means the model is degenerate for this input: the H_j (plus I when
    it is used) do not generate a space of the expected dimension.
    """
    rel = relations_for(pattern)
    dim = _rank(_bits([H1, H2, H3, H4]) + _bits(rel)) - _rank(_bits(rel))
    return dim + (1 if uses_I else 0) == rank_cl2


def format_span(ws: Iterable[ClassWord]) -> str:
    """Stable text form, e.g. 'H1,H3+H4'."""
    return ",".join(str(w) for w in sorted(ws, key=lambda w: (bin(w.bits).count("1"), _lex(w))))


def _lex(w: ClassWord) -> tuple:
    return tuple(i for i in range(len(BASIS)) if w.bits >> i & 1)


def parse_span(text: str) -> tuple[ClassWord, ...]:
    return tuple(ClassWord.parse(p) for p in text.split(",") if p.strip())
