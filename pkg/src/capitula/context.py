"""Units and square classes of one triple, computed once and shared."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fsu import UNIT_KEYS
from .pell import QuadraticUnit, fundamental_unit
from .squareclass import (Pattern, SquareClassPair, SubPattern, classify_pattern,
                          classify_sub_pattern, square_class_pair)
from .triple import PrimeTriple


@dataclass(frozen=True)
class TripleContext:
    triple: PrimeTriple
    units: dict[str, QuadraticUnit]
    scp_d: SquareClassPair
    scp_a: SquareClassPair
    scp_a2: SquareClassPair
    pattern: Pattern
    sub1: SubPattern
    sub2: SubPattern

    @property
    def eps_d(self) -> QuadraticUnit:
        return self.units["p1p2q"]

    @property
    def eps_p1p2(self) -> QuadraticUnit:
        return self.units["p1p2"]

    @property
    def norm_p1p2(self) -> int:
        return self.units["p1p2"].norm

    def norms(self) -> dict[str, int]:
        return {k: u.norm for k, u in self.units.items()}


@lru_cache(maxsize=8192)
def context(t: PrimeTriple) -> TripleContext:
    units = {k: fundamental_unit(t.radicand(k)) for k in UNIT_KEYS}
    scp_d = square_class_pair(units["p1p2q"])
    scp_a = square_class_pair(units["p2q"])
    scp_a2 = square_class_pair(units["p1q"])
    return TripleContext(
        triple=t, units=units, scp_d=scp_d, scp_a=scp_a, scp_a2=scp_a2,
        pattern=classify_pattern(scp_d, t),
        sub1=classify_sub_pattern(scp_a, t.p2, t.q),
        sub2=classify_sub_pattern(scp_a2, t.p1, t.q),
    )
