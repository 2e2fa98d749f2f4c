"""Square classes of x + 1 and x - 1 for norm +1 units.

For a unit x + y*sqrt(d) of norm +1 we have (x + 1)(x - 1) = d*y^2 with
gcd(x + 1, x - 1) | 2, so there are unique squarefree multipliers c+ and c-
with x + 1 = c+ * s^2 and x - 1 = c- * t^2.  Every case split downstream is
a question about which of these multipliers occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .intkernel import (is_prime, is_rational_square, is_square, is_squarefree,
                        isqrt, prime_factors, squarefree_part)
from .pell import QuadraticUnit, fundamental_unit, unit_norm
from .triple import PrimeTriple


class UnclassifiedPattern(ValueError):
    pass


@dataclass(frozen=True)
class SquareClassPair:
    """x + 1 = c_plus * (s/denom)^2 and x - 1 = c_minus * (t/denom)^2."""

    d: int
    c_plus: int
    c_minus: int
    s: int
    t: int
    denom: int = 1

    @property
    def multipliers(self) -> frozenset:
        return frozenset((self.c_plus, self.c_minus))

    def contains(self, c: int) -> bool:
        return c in (self.c_plus, self.c_minus)

    def as_dict(self) -> dict:
        return {"c_plus": self.c_plus, "c_minus": self.c_minus,
                "s": str(self.s), "t": str(self.t), "denom": self.denom}


@lru_cache(maxsize=None)
def _basis(d: int) -> tuple[int, ...]:
    return tuple(prime_factors(2 * d))


def square_class_pair(u: QuadraticUnit, allow_half: bool = False) -> SquareClassPair:
    """Decompose x +- 1 of a norm +1 unit into squarefree multiplier times square.

    Half-integral units are rejected unless ``allow_half``; then x = X/2 and
    the classes are those of the rationals (X +- 2)/2.
    """
    if unit_norm(u) != 1:
        raise ValueError(f"unit {u} has norm -1; no square-class decomposition")
    if u.denom != 1 and not allow_half:
        raise ValueError(f"unit {u} is half-integral")
    basis = _basis(u.d)
    # x +- 1 = (X +- denom)/denom; scale by denom^2 to stay integral
    den = u.denom
    plus, minus = (u.x + den) * den, (u.x - den) * den
    c_plus = squarefree_part(plus, basis)
    c_minus = squarefree_part(minus, basis)
    s = isqrt(plus // c_plus)
    t = isqrt(minus // c_minus)
    return SquareClassPair(u.d, c_plus, c_minus, s, t, den)


def multiplier_is_square(u: QuadraticUnit, c: int) -> bool:
    """True iff c*(x+1) or c*(x-1) is a perfect square."""
    if unit_norm(u) != 1 or u.denom != 1:
        raise ValueError("multiplier_is_square needs an integral norm +1 unit")
    if c < 1 or (2 * u.d) % c or not is_squarefree(c):
        raise ValueError(f"c={c} must be a squarefree divisor of 2d={2 * u.d}")
    return is_square(c * (u.x + 1)) or is_square(c * (u.x - 1))


class Pattern(str, Enum):
    """Square-class pattern of eps_{p1p2q}, named by its small multiplier."""

    ONE = "1"
    P1 = "p1"
    TWO_P1 = "2p1"
    P2 = "p2"
    TWO_P2 = "2p2"
    Q = "q"
    TWO_Q = "2q"

    @property
    def pair_label(self) -> str:
        return _PAIR_LABELS[self]

    @property
    def prime(self) -> str | None:
        """'p1', 'p2' or 'q' for the six non-trivial patterns."""
        return None if self is Pattern.ONE else self.value.lstrip("2")

    def mirror(self) -> Pattern:
        return _MIRROR.get(self, self)


_PAIR_LABELS = {
    Pattern.ONE: "{1,d}",
    Pattern.P1: "{p1,p2q}",
    Pattern.TWO_P1: "{2p1,2p2q}",
    Pattern.P2: "{p2,p1q}",
    Pattern.TWO_P2: "{2p2,2p1q}",
    Pattern.Q: "{q,p1p2}",
    Pattern.TWO_Q: "{2q,2p1p2}",
}

_MIRROR = {Pattern.P1: Pattern.P2, Pattern.P2: Pattern.P1,
           Pattern.TWO_P1: Pattern.TWO_P2, Pattern.TWO_P2: Pattern.TWO_P1}


def pattern_pairs(t: PrimeTriple) -> dict[frozenset, Pattern]:
    p1, p2, q, d = t.p1, t.p2, t.q, t.d
    return {
        frozenset((1, d)): Pattern.ONE,
        frozenset((p1, p2 * q)): Pattern.P1,
        frozenset((2 * p1, 2 * p2 * q)): Pattern.TWO_P1,
        frozenset((p2, p1 * q)): Pattern.P2,
        frozenset((2 * p2, 2 * p1 * q)): Pattern.TWO_P2,
        frozenset((q, p1 * p2)): Pattern.Q,
        frozenset((2 * q, 2 * p1 * p2)): Pattern.TWO_Q,
    }


def classify_pattern(scp: SquareClassPair, t: PrimeTriple) -> Pattern:
    if scp.d != t.d:
        raise ValueError("square-class pair does not belong to this triple")
    try:
        return pattern_pairs(t)[scp.multipliers]
    except KeyError:
        raise UnclassifiedPattern(
            f"multipliers {sorted(scp.multipliers)} fit none of the seven patterns for {t}") from None


class SubPattern(str, Enum):
    """Pattern of eps_{pq} for a prime p = 1 mod 4 and q = 3 mod 4."""

    ONE = "1"
    P = "p"
    TWO_P = "2p"


def classify_sub_pattern(scp: SquareClassPair, p: int, q: int) -> SubPattern:
    table = {
        frozenset((1, p * q)): SubPattern.ONE,
        frozenset((p, q)): SubPattern.P,
        frozenset((2 * p, 2 * q)): SubPattern.TWO_P,
    }
    try:
        return table[scp.multipliers]
    except KeyError:
        raise UnclassifiedPattern(
            f"multipliers {sorted(scp.multipliers)} of eps_{p * q} fit no pattern") from None


# -- lemma validators ---------------------------------------------------------

LEMMAS = ("L2.2", "L2.3", "L2.4", "L2.6")


def _squarefree_range(lo: int, hi: int):
    return (d for d in range(max(lo, 2), hi) if is_squarefree(d))


def _rsq(num: int, den: int) -> bool:
    return num >= 0 and is_rational_square(num, den)


def _violation(lemma: str, u: QuadraticUnit, reason: str) -> dict:
    return {"lemma": lemma, "d": u.d, "unit": u.as_dict(), "reason": reason}


def _check_l22(bound: int):
    for d in _squarefree_range(2, bound):
        u = fundamental_unit(d)
        if u.norm != 1:
            continue
        X, den = u.x, u.denom
        for sgn in (1, -1):
            v = X + sgn * den
            if _rsq(2 * v, den) or _rsq(2 * d * v, den):
                yield _violation("L2.2", u, f"2(x{'+' if sgn > 0 else '-'}1) or 2d(x..1) is a square")


def _check_l23(bound: int):
    for q in range(3, bound, 4):
        if not is_prime(q):
            continue
        u = fundamental_unit(q)
        if u.denom != 1 or u.x % 2:
            yield _violation("L2.3", u, "x is not an even integer")
            continue
        n_sq = is_square(u.x + 1) + is_square(u.x - 1)
        if n_sq != 1:
            yield _violation("L2.3", u, f"{n_sq} of x+1, x-1 are squares (expected exactly 1)")


def _check_l24(bound: int):
    for p in range(3, (bound + 1) // 2):
        if 2 * p >= bound or not is_prime(p):
            continue
        u = fundamental_unit(2 * p)
        if u.norm == 1 and not (is_square(u.x + 1) or is_square(u.x - 1)):
            yield _violation("L2.4", u, "neither x+1 nor x-1 is a square")


def _check_l26(bound: int):
    for d in _squarefree_range(5, bound):
        if d % 4 != 1:
            continue
        u = fundamental_unit(d)
        if u.norm != 1:
            continue
        X, den = u.x, u.denom
        for sgn in (1, -1):
            v = X + sgn * den
            if _rsq(v, den):
                yield _violation("L2.6", u, "x+-1 is a square")
            for p in prime_factors(d):
                if _rsq(p * v, den):
                    yield _violation("L2.6", u, f"{p}(x+-1) is a square")


_CHECKS = {"L2.2": _check_l22, "L2.3": _check_l23, "L2.4": _check_l24, "L2.6": _check_l26}


def validate_lemma(lemma_id: str, bound: int) -> list[dict]:
    """Counterexamples to one of the unit lemmas below ``bound`` (expected empty)."""
    key = lemma_id.upper().replace("LEMMA", "L")
    if key not in _CHECKS:
        raise ValueError(f"unknown lemma {lemma_id!r}; choose from {LEMMAS}")
    if bound < 3:
        raise ValueError("bound must be >= 3")
    return list(_CHECKS[key](bound))
