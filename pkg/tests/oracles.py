"""Independent reference implementations used only by the tests.

None of these import the package; they are slow, obvious and exhaustive.
"""

from __future__ import annotations

import math
from itertools import combinations

import mpmath
import numpy as np


def trial_factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def naive_is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, math.isqrt(n) + 1))


def naive_squarefree_kernel(n: int) -> int:
    """Product of the primes dividing n to an odd power."""
    return math.prod(p for p, e in trial_factor(n).items() if e % 2)


def euler_legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def squarefree_below(n: int) -> list[int]:
    return [d for d in range(2, n) if all(e == 1 for e in trial_factor(d).values())]


def brute_unit(d: int, y_max: int) -> tuple[int, int, int] | None:
    """Smallest Y in [1, y_max] with d*Y^2 +- 4 a square; returns (X, Y, norm)
    for the unit (X + Y sqrt d)/2, or None."""
    ys = np.arange(1, y_max + 1, dtype=np.int64)
    dy2 = d * ys * ys
    best = None
    for sgn, norm in ((-4, -1), (4, 1)):
        v = dy2 + sgn
        r = np.rint(np.sqrt(np.maximum(v, 0).astype(np.float64))).astype(np.int64)
        hit = np.nonzero((r * r == v) & (v > 0))[0]
        if hit.size:
            i = int(hit[0])
            cand = (int(r[i]), int(ys[i]), norm)
            if best is None or (cand[1], cand[0]) < (best[1], best[0]):
                best = cand
    return best


def _mul(a, b, d):
    # (X1 + Y1 sqrt d)/2 * (X2 + Y2 sqrt d)/2
    return ((a[0] * b[0] + d * a[1] * b[1]) // 2, (a[0] * b[1] + a[1] * b[0]) // 2)


def _power(u, k, d):
    out = (2, 0)
    for _ in range(k):
        out = _mul(out, u, d)
    return out


def proper_root(d: int, X: int, Y: int, y_floor: int) -> tuple[int, int, int] | None:
    """A unit eta = (T + U sqrt d)/2 with U > y_floor and eta^k = (X + Y sqrt d)/2
    for some k >= 2, or None."""
    mpmath.mp.dps = max(50, 3 * len(str(X)))
    eps = (mpmath.mpf(X) + mpmath.mpf(Y) * mpmath.sqrt(d)) / 2
    k_max = int(mpmath.log(eps) / mpmath.log(max(y_floor, 2) * math.sqrt(d))) + 2
    for k in range(2, k_max + 1):
        r = mpmath.root(eps, k)
        for s in (1, -1):
            T = int(mpmath.nint(r + s / r))
            u2 = T * T - 4 * s
            if u2 <= 0 or u2 % d:
                continue
            U = math.isqrt(u2 // d)
            if U * U * d == u2 and _power((T, U), k, d) == (X, Y):
                return T, U, k
    return None


def span_set(words: list[int]) -> set[int]:
    """All GF(2) combinations of the given bit vectors."""
    out = {0}
    for w in words:
        out |= {x ^ w for x in out}
    return out


def quotient_order(words: list[int], rel: list[int]) -> int:
    return len(span_set(words + rel)) // len(span_set(rel))


def all_subsets(xs):
    for n in range(len(xs) + 1):
        yield from combinations(xs, n)
