"""Validated prime triples (p1, p2, q) and their Gaussian data."""

from __future__ import annotations

from dataclasses import dataclass, field

from .gaussian import GaussianInt, two_squares_4
from .intkernel import is_prime


class InvalidTriple(ValueError):
    pass


@dataclass(frozen=True)
class PrimeTriple:
    """Primes p1 = p2 = 1 (mod 4), q = 3 (mod 4), pairwise distinct.

    ``gaussian`` holds (e, f, g, h) with p1 = e^2 + 4f^2 and p2 = g^2 + 4h^2,
    which fix pi1 = e + 2fi, pi2 = conj(pi1), pi3 = g + 2hi, pi4 = conj(pi3).
    """

    p1: int
    p2: int
    q: int
    gaussian: tuple[int, int, int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("p1", "p2", "q"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidTriple(f"{name} must be an int")
            if not is_prime(v):
                raise InvalidTriple(f"{name}={v} is not prime")
        if self.p1 % 4 != 1 or self.p2 % 4 != 1:
            raise InvalidTriple("p1 and p2 must be 1 mod 4")
        if self.q % 4 != 3:
            raise InvalidTriple("q must be 3 mod 4")
        if self.p1 == self.p2:
            raise InvalidTriple("p1 and p2 must differ")
        e, f = two_squares_4(self.p1)
        g, h = two_squares_4(self.p2)
        object.__setattr__(self, "gaussian", (e, f, g, h))

    @property
    def d(self) -> int:
        return self.p1 * self.p2 * self.q

    @property
    def pis(self) -> tuple[GaussianInt, GaussianInt, GaussianInt, GaussianInt]:
        e, f, g, h = self.gaussian
        return (GaussianInt(e, 2 * f), GaussianInt(e, -2 * f),
                GaussianInt(g, 2 * h), GaussianInt(g, -2 * h))

    def radicand(self, key: str) -> int:
        """Numeric value of a symbolic radicand such as 'p2q' or 'p1p2q'."""
        return _RADICANDS[key](self)

    def swapped(self) -> PrimeTriple:
        """The same field with p1 and p2 relabeled."""
        return PrimeTriple(self.p2, self.p1, self.q)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p1, self.p2, self.q)


_RADICANDS = {
    "p1": lambda t: t.p1,
    "p2": lambda t: t.p2,
    "q": lambda t: t.q,
    "p2q": lambda t: t.p2 * t.q,
    "p1q": lambda t: t.p1 * t.q,
    "p1p2": lambda t: t.p1 * t.p2,
    "p1p2q": lambda t: t.d,
}


def iter_triples(p_max: int, q_max: int, ordered: bool = False):
    """All valid triples with p1, p2 <= p_max and q <= q_max, sorted.

    With ``ordered`` both labelings (p1, p2) and (p2, p1) are produced;
    otherwise only p1 < p2.
    """
    from .intkernel import primes_in

    ps = [p for p in primes_in(2, p_max + 1) if p % 4 == 1]
    qs = [q for q in primes_in(2, q_max + 1) if q % 4 == 3]
    for p1 in ps:
        for p2 in ps:
            if p1 == p2 or (not ordered and p2 < p1):
                continue
            for q in qs:
                yield PrimeTriple(p1, p2, q)


def iter_triples_below(d_max: int, ordered: bool = False):
    """All valid triples with p1 * p2 * q < d_max, sorted by (p1, p2, q)."""
    from .intkernel import primes_in

    ps = [p for p in primes_in(2, d_max // 15 + 2) if p % 4 == 1]
    qs = [q for q in primes_in(2, d_max // 65 + 2) if q % 4 == 3]
    for p1 in ps:
        for p2 in ps:
            if p1 == p2 or (not ordered and p2 < p1) or p1 * p2 * 3 >= d_max:
                continue
            for q in qs:
                if p1 * p2 * q >= d_max:
                    break
                yield PrimeTriple(p1, p2, q)
