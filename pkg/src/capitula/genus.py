"""Ambiguous and strongly ambiguous classes of k/Q(i).

With h(Q(i)) = 1 the ambiguous class number formula reads |Am| = 2^r,
r = t - e - 1, where t counts the primes of Q(i) ramified in k and
2^e = [E_F : E_F ∩ N(k^x)].  Here t = 5 always: p1 and p2 each split into two
Gaussian primes, q stays inert, and k is totally imaginary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classwords import H1, H2, H3, H4, I, ClassWord, format_span, relations_complete
from .squareclass import Pattern, SquareClassPair, classify_pattern
from .triple import PrimeTriple

T_RAMIFIED = 5


def i_is_norm(t: PrimeTriple) -> bool:
    """i is a norm from k to Q(i) exactly when p1 = p2 = 1 (mod 8)."""
    return t.p1 % 8 == 1 and t.p2 % 8 == 1


@dataclass(frozen=True)
class GenusReport:
    t: int
    e_exp: int
    r: int
    am_order: int
    ams_order: int
    ams_generators: tuple[tuple[ClassWord, ...], ...]
    am_generators: tuple[tuple[ClassWord, ...], ...]
    i_is_norm: bool
    relations_complete: bool

    def as_dict(self) -> dict:
        return {
            "t": self.t, "e": self.e_exp, "r": self.r,
            "am": self.am_order, "ams": self.ams_order,
            "ams_generators": [format_span(g) for g in self.ams_generators],
            "am_generators": [format_span(g) for g in self.am_generators],
            "i_is_norm": self.i_is_norm,
            "relations_complete": self.relations_complete,
        }


_AMS_ALTERNATIVES = ((H1, H2, H3), (H1, H3, H4))


def genus_report(t: PrimeTriple, scp: SquareClassPair | Pattern) -> GenusReport:
    """Orders and generators of Am(k/Q(i)) and Am_s(k/Q(i)) for the triple.

    ``scp`` is the square-class pair of eps_{p1p2q} or its pattern.
    """
    pattern = classify_pattern(scp, t) if isinstance(scp, SquareClassPair) else Pattern(scp)
    norm_i = i_is_norm(t)
    e_exp = 0 if norm_i else 1
    r = T_RAMIFIED - e_exp - 1
    am = 2**r
    # [E_F ∩ N(k^x) : N(E_k)] is 2 only when i is a norm but E_k = <i, eps_d>
    index = 2 if norm_i and pattern is not Pattern.ONE else 1
    ams = am // index

    if pattern is Pattern.ONE:
        ams_gens = ((H1, H2, H3, H4),)
        am_gens = ams_gens
    else:
        ams_gens = _AMS_ALTERNATIVES
        am_gens = tuple(g + (I,) for g in ams_gens) if index == 2 else ams_gens
    return GenusReport(
        t=T_RAMIFIED, e_exp=e_exp, r=r, am_order=am, ams_order=ams,
        ams_generators=ams_gens, am_generators=am_gens, i_is_norm=norm_i,
        relations_complete=relations_complete(pattern, r, index == 2),
    )
