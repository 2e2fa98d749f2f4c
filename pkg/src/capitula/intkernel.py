"""Exact integer primitives: primality, square roots, Jacobi symbols, small factoring."""

from math import isqrt as _isqrt

# Miller-Rabin with these bases is deterministic for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError("isqrt of negative number")
    return _isqrt(n)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = _isqrt(n)
    return r * r == n


def is_rational_square(num: int, den: int = 1) -> bool:
    """True iff num/den is the square of a rational number."""
    if den == 0:
        raise ZeroDivisionError("den == 0")
    return is_square(num * den)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 3; 0 when gcd(a, n) > 1."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"jacobi needs odd n >= 3, got {n}")
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n > 0 by trial division."""
    if n < 1:
        raise ValueError("prime_factors needs n >= 1")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1 if p == 2 else 2
    return True


def squarefree_part(n: int, basis) -> int:
    """Squarefree kernel of n > 0, assuming every odd-power prime of n lies in ``basis``.

    Raises ValueError if the cofactor left after stripping ``basis`` is not a square.
    """
    if n <= 0:
        raise ValueError("squarefree_part needs n > 0")
    c = 1
    for p in basis:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            c *= p
    if not is_square(n):
        raise ValueError("cofactor is not a square; factor basis incomplete")
    return c


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p < hi (sieve)."""
    if hi <= 2:
        return []
    sieve = bytearray([1]) * hi
    sieve[0:2] = b"\x00\x00"
    for i in range(2, _isqrt(hi - 1) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, hi, i)))
    return [i for i in range(max(lo, 2), hi) if sieve[i]]
