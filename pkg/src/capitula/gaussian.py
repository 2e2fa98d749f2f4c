"""Minimal arithmetic in Z[i], enough for exact division and square extraction."""

from __future__ import annotations

from typing import NamedTuple

from .intkernel import is_square, isqrt


class GaussianInt(NamedTuple):
    re: int
    im: int = 0

    def __add__(self, other):
        other = _coerce(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self
        c, d = other
        return GaussianInt(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __str__(self):
        a, b = self
        if b == 0:
            return str(a)
        if a == 0:
            return f"{b}i"
        return f"{a}{'+' if b > 0 else '-'}{abs(b)}i"

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def divides(self, other) -> bool:
        return exact_div(other, self) is not None

    def canonical(self) -> GaussianInt:
        """The associate with re > 0, im >= 0 (zero stays zero)."""
        z = self
        for _ in range(4):
            if z.re > 0 and z.im >= 0:
                return z
            z = z * I
        return z


I = GaussianInt(0, 1)
UNITS = (GaussianInt(1, 0), I, GaussianInt(-1, 0), GaussianInt(0, -1))


def _coerce(z) -> GaussianInt:
    if isinstance(z, GaussianInt):
        return z
    if isinstance(z, int):
        return GaussianInt(z, 0)
    return GaussianInt(*z)


def exact_div(a, b) -> GaussianInt | None:
    """a / b if b divides a in Z[i], else None."""
    a, b = _coerce(a), _coerce(b)
    n = b.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[i]")
    num = a * b.conj()
    if num.re % n or num.im % n:
        return None
    return GaussianInt(num.re // n, num.im // n)


def gaussian_sqrt(z) -> GaussianInt | None:
    """Some w with w*w == z, or None."""
    z = _coerce(z)
    n2 = z.norm()
    if not is_square(n2):
        return None
    n = isqrt(n2)
    if (n + z.re) % 2 or not is_square((n + z.re) // 2) or not is_square((n - z.re) // 2):
        return None
    c = isqrt((n + z.re) // 2)
    d = isqrt((n - z.re) // 2)
    for w in (GaussianInt(c, d), GaussianInt(c, -d)):
        if w * w == z:
            return w
    return None


def unit_times_square(z) -> tuple[GaussianInt, GaussianInt] | None:
    """Write z = u * w**2 with u in {1, i} (since -1 is a square); None if impossible."""
    z = _coerce(z)
    for u in (GaussianInt(1, 0), I):
        w = exact_div(z, u)
        r = gaussian_sqrt(w)
        if r is not None:
            return u, r
    return None


def two_squares_4(p: int) -> tuple[int, int]:
    """(e, f) with e, f > 0 and p = e**2 + 4*f**2, for a prime p = 1 mod 4."""
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 mod 4")
    f = 1
    while 4 * f * f < p:
        rest = p - 4 * f * f
        if is_square(rest):
            return isqrt(rest), f
        f += 1
    raise ValueError(f"{p} is not of the form e^2 + 4f^2")
