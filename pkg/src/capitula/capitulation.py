"""Capitulation kernels of k in K1 = k(sqrt p1), K2 = k(sqrt p2), K3 = k(sqrt q).

Kernel tables are keyed by square classes of eps_{p1p2q} (x) and of the
auxiliary unit (a): eps_{p2q} for K1, eps_{p1q} for K2, and the norm of
eps_{p1p2} for K3.  Sizes are computed twice: from the decision table and
independently from the unit norm index |kappa| = 2 [E_k : N(E_K)], read off
the symbolic fundamental system of K.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd

from .classwords import (H1, H2, H3, H4, ClassWord, RelationSet, format_span,
                         relations_for, same_span, span_order, subspan)
from .context import TripleContext, context
from .fsu import FsuDescriptor, UnitExpr, fsu_K1, fsu_K2, fsu_K3, fsu_k, root, square_test
from .gaussian import GaussianInt, exact_div, two_squares_4, unit_times_square
from .genus import genus_report
from .pell import QuadraticUnit, fundamental_unit, unit_norm
from .squareclass import Pattern, SquareClassPair
from .triple import PrimeTriple

Span = tuple[ClassWord, ...]
READINGS = ("corrected", "printed", "mirrored")


def _norm_flag(x: QuadraticUnit | int) -> int:
    n = unit_norm(x) if isinstance(x, QuadraticUnit) else x
    if n not in (1, -1):
        raise ValueError("norm of eps_{p1p2} must be +1 or -1")
    return n


def _mirror_word(w: ClassWord) -> ClassWord:
    b = w.bits
    return ClassWord((b & ~0b1111) | (b & 0b11) << 2 | (b >> 2) & 0b11)


def _mirror(alts: tuple[Span, ...]) -> tuple[Span, ...]:
    return tuple(tuple(_mirror_word(w) for w in s) for s in alts)


# -- sizes ---------------------------------------------------------------------

def kappa_size(j: int, scp_d: SquareClassPair, scp_sub, t: PrimeTriple,
               reading: str = "corrected") -> int:
    """|kappa_{Kj}| from the size table.

    For j = 1, 2 ``scp_sub`` is the pair of eps_{p2q} resp. eps_{p1q}; for j = 3
    it is eps_{p1p2} or its norm.  ``reading`` selects the multiplier set in the
    size-2 branch of K1/K2: "corrected" uses p_j and 2p_j (what the kernel
    tables and the norm index give), "printed" uses 2p1 and p2 as typeset,
    "mirrored" swaps the printed one under p1 <-> p2.
    """
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    x_sq = square_test(scp_d, t)
    if j == 3:
        if _norm_flag(scp_sub) == 1:
            return 4 if x_sq("1") else 2
        return 2 if x_sq("q") or x_sq("2q") else 4
    if j not in (1, 2):
        raise ValueError("j must be 1, 2 or 3")
    a_sq = square_test(scp_sub, t)
    pj, other = ("p1", "p2") if j == 1 else ("p2", "p1")
    keys = {"corrected": (pj, "2" + pj), "printed": ("2p1", "p2"),
            "mirrored": ("2" + pj, other)}[reading]
    if x_sq("1") and not a_sq("1"):
        return 8
    if a_sq("1") and any(x_sq(k) for k in keys):
        return 2
    return 4


# -- kernels -------------------------------------------------------------------

@dataclass(frozen=True)
class KernelResult:
    alternatives: tuple[Span, ...]
    case: str

    def formatted(self) -> list[str]:
        return [format_span(s) for s in self.alternatives]


def kappa_K1(scp_d: SquareClassPair, scp_a: SquareClassPair, t: PrimeTriple) -> KernelResult:
    x_sq, a_sq = square_test(scp_d, t), square_test(scp_a, t)
    p1_type = x_sq("p1") or x_sq("2p1")
    if x_sq("1") and not a_sq("1"):
        return KernelResult(((H1, H2, H3 + H4),), "1")
    if a_sq("1") and p1_type:
        return KernelResult(((H1,),), "2")
    if not a_sq("1") and p1_type:
        return KernelResult(((H1, H3 + H4),), "3")
    return KernelResult(((H1, H2),), "4")


def kappa_K2(scp_d: SquareClassPair, scp_a2: SquareClassPair, t: PrimeTriple) -> KernelResult:
    """Mirror of kappa_K1: p1 <-> p2, H1,H2 <-> H3,H4, eps_{p2q} -> eps_{p1q}."""
    res = kappa_K1(scp_d, scp_a2, t.swapped())
    return KernelResult(_mirror(res.alternatives), res.case)


def _pattern_type(x_sq) -> str:
    if x_sq("1"):
        return "1"
    for p in ("p1", "p2", "q"):
        if x_sq(p) or x_sq("2" + p):
            return p
    raise ValueError("square class of eps_d has no recognised multiplier")


_K3_PLUS = {"1": ((H1 + H2, H3 + H4),), "p1": ((H3 + H4,),),
            "p2": ((H1 + H2,),), "q": ((H1 + H2,),)}
_K3_MINUS = {"q": ((H1 + H3,), (H1 + H4,)),
             "1": ((H1 + H3, H2 + H4), (H1 + H4, H2 + H3)),
             "p1": ((H1 + H3, H1 + H4),),
             "p2": ((H1 + H3, H2 + H3),)}


def kappa_K3(scp_d: SquareClassPair, eps_p1p2: QuadraticUnit | int, t: PrimeTriple,
             resolve: bool = True) -> KernelResult:
    """Kernel of k in K3.  With N(eps_{p1p2}) = -1 the table has two
    alternatives in two branches; they collapse when the unit is given and
    ``resolve`` is set."""
    norm = _norm_flag(eps_p1p2)
    kind = _pattern_type(square_test(scp_d, t))
    if norm == 1:
        return KernelResult(_K3_PLUS[kind], f"N+,{kind}")
    alts = _K3_MINUS[kind]
    if resolve and len(alts) > 1 and isinstance(eps_p1p2, QuadraticUnit):
        pairing = resolve_K3_pairing(eps_p1p2, t)
        alts = (alts[0 if pairing == "13-24" else 1],)
        return KernelResult(alts, f"N-,{kind},{pairing}")
    return KernelResult(alts, f"N-,{kind}")


def resolve_K3_pairing(eps_p1p2: QuadraticUnit, t: PrimeTriple) -> str:
    """'13-24' if pi1*pi3 divides a + i (or its conjugate), '14-23' if pi1*pi4 does.

    a + i stands for the Gaussian factorisation of a^2 + 1 = b^2 p1 p2; a
    half-integral unit (A + B sqrt(p1p2))/2 is handled through A + 2i.
    """
    if unit_norm(eps_p1p2) != -1:
        raise ValueError("precondition: N(eps_{p1p2}) must be -1")
    if eps_p1p2.d != t.p1 * t.p2:
        raise ValueError("unit does not belong to Q(sqrt(p1 p2))")
    z = GaussianInt(eps_p1p2.x, eps_p1p2.denom)
    pi1, _, pi3, pi4 = t.pis
    for label, f in (("13-24", pi1 * pi3), ("14-23", pi1 * pi4)):
        if exact_div(z, f) is not None or exact_div(z.conj(), f) is not None:
            return label
    raise RuntimeError(f"neither pi1*pi3 nor pi1*pi4 divides {z}; factorisation premise broken")


# -- genus-field bound ---------------------------------------------------------

_GENUS_BOUND = {None: (H1, H2, H3, H4), "p1": (H1, H3, H4), "p2": (H1, H2, H3), "q": (H1, H2, H3)}


def genus_kernel_bound(pattern: Pattern, kernels=()) -> tuple[Span, bool]:
    """Lower bound for the kernel in the genus field, and whether it equals the
    span of the union of ``kernels`` (KernelResults) modulo relations for some
    choice of alternatives.  With no kernels the flag is True."""
    pattern = Pattern(pattern)
    bound = _GENUS_BOUND[pattern.prime]
    if not kernels:
        return bound, True
    rel = relations_for(pattern)
    equal = any(same_span([w for s in choice for w in s], bound, rel)
                for choice in product(*(k.alternatives for k in kernels)))
    return bound, equal


# -- independent size oracle ---------------------------------------------------
# A unit of k is zeta8^a * eps_d^(b/2) with (a, b) in Z^2; the lattice of units
# is generated by i = (2,0) and eps_d = (0,2), or by i and sqrt(i eps_d) = (1,1)
# when x +- 1 is a square.  (8,0) is the trivial unit.

_I, _MINUS1, _EPS_D, _TRIV = (2, 0), (4, 0), (0, 2), (8, 0)


def _lattice_det(vectors) -> int:
    g = 0
    vs = list(vectors)
    for n, (a, b) in enumerate(vs):
        for c, e in vs[n + 1:]:
            g = gcd(g, a * e - b * c)
    return g


def _norm_vector(expr: UnitExpr, norms: dict[str, int], small: FsuDescriptor) -> tuple[int, int]:
    def plain(bases) -> list[int]:
        v = [0, 0]
        for b in bases:
            if b == "p1p2q":
                v[1] += 4
            elif norms[b] == -1:
                v[0] += 4
        return v

    if not expr.sqrt:
        a, b = plain(expr.bases)
        return a % 8, b
    if all(b == "p1p2q" for b in expr.bases):
        x = [2 if expr.coefficient == "i" else 0, 2 * len(expr.bases)]
        if expr != root("p1p2q", i=True) or expr not in small.units:
            x[0] += 4
        return x[0] % 8, x[1]
    nx = plain(expr.bases)
    if expr.coefficient == "i":
        nx[0] += 4
    if nx[0] % 4 or nx[1] % 2:
        raise ValueError(f"norm of {expr} is not a square in k")
    return (nx[0] // 2) % 8, nx[1] // 2


def norm_index_size(big: FsuDescriptor, small: FsuDescriptor, norms: dict[str, int]) -> int:
    """2 * [E_k : N(E_K)] computed from fundamental systems and unit norms."""
    ek = [_I, _TRIV, (1, 1) if root("p1p2q", i=True) in small.units else _EPS_D]
    nk = [_MINUS1, _TRIV] + [_norm_vector(u, norms, small) for u in big.units]
    return 2 * _lattice_det(nk) // _lattice_det(ek)


# -- reports -------------------------------------------------------------------

@dataclass
class CapitulationReport:
    pattern: Pattern
    sizes: dict[int, int]
    kernels: dict[int, KernelResult]
    oracle_sizes: dict[int, int]
    genus_bound: Span
    genus_bound_matches: bool
    pairing: str | None = None
    discrepancies: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "pattern": self.pattern.pair_label,
            "sizes": {str(j): s for j, s in sorted(self.sizes.items())},
            "oracle_sizes": {str(j): s for j, s in sorted(self.oracle_sizes.items())},
            "kernels": {str(j): {"case": k.case, "alternatives": k.formatted()}
                        for j, k in sorted(self.kernels.items())},
            "genus_bound": format_span(self.genus_bound),
            "genus_bound_matches": self.genus_bound_matches,
            "pairing": self.pairing,
            "discrepancies": list(self.discrepancies),
            "flags": list(self.flags),
        }


def capitulation_report(t: PrimeTriple, ctx: TripleContext | None = None) -> CapitulationReport:
    ctx = ctx or context(t)
    rel = relations_for(ctx.pattern)
    norms = ctx.norms()
    small = fsu_k(ctx.scp_d)
    subs = {1: ctx.scp_a, 2: ctx.scp_a2, 3: ctx.eps_p1p2}
    fsus = {1: fsu_K1(ctx.scp_d, ctx.scp_a, t)[1], 2: fsu_K2(ctx.scp_d, ctx.scp_a2, t)[1],
            3: fsu_K3(ctx.scp_d, ctx.eps_p1p2, t)[1]}
    kernels = {1: kappa_K1(ctx.scp_d, ctx.scp_a, t), 2: kappa_K2(ctx.scp_d, ctx.scp_a2, t),
               3: kappa_K3(ctx.scp_d, ctx.eps_p1p2, t)}
    sizes, oracle, disc, flags = {}, {}, [], []
    for j in (1, 2, 3):
        sizes[j] = kappa_size(j, ctx.scp_d, subs[j], t)
        oracle[j] = norm_index_size(fsus[j], small, norms)
        if oracle[j] != sizes[j]:
            disc.append(f"K{j}: table size {sizes[j]} but unit norm index gives {oracle[j]}")
        orders = [span_order(s, rel) for s in kernels[j].alternatives]
        if sizes[j] not in orders:
            disc.append(f"K{j}: size {sizes[j]} but kernel span orders {orders}")
        if j < 3:
            for reading in ("printed", "mirrored"):
                alt = kappa_size(j, ctx.scp_d, subs[j], t, reading)
                if alt != sizes[j]:
                    flags.append(f"K{j}: {reading} size reading gives {alt}, corrected gives {sizes[j]}")
    bound, matches = genus_kernel_bound(ctx.pattern, [kernels[1], kernels[2], kernels[3]])
    if not matches:
        disc.append("genus bound differs from the span of the three kernels")
    pairing = None
    if ctx.norm_p1p2 == -1:
        pairing = resolve_K3_pairing(ctx.eps_p1p2, t)
    return CapitulationReport(ctx.pattern, sizes, kernels, oracle, bound, matches,
                              pairing, disc, flags)


@dataclass(frozen=True)
class MainTheoremVerdict:
    sizes_ok: bool
    kernels_in_ams: bool
    ams_in_bound: bool

    @property
    def ok(self) -> bool:
        return self.sizes_ok and self.kernels_in_ams and self.ams_in_bound

    def as_dict(self) -> dict:
        return {"sizes_ok": self.sizes_ok, "kernels_in_ams": self.kernels_in_ams,
                "ams_in_bound": self.ams_in_bound, "ok": self.ok}


def check_main_theorem(t: PrimeTriple, report: CapitulationReport | None = None) -> MainTheoremVerdict:
    """Sizes in {2,4,8}, each kernel inside Am_s, and Am_s inside the genus bound,
    each existentially over recorded alternatives."""
    ctx = context(t)
    report = report or capitulation_report(t, ctx)
    rel: RelationSet = relations_for(ctx.pattern)
    gen = genus_report(t, ctx.pattern)
    sizes_ok = all(s in (2, 4, 8) for s in report.sizes.values())
    kernels_in = any(
        all(any(subspan(alt, ams, rel) for alt in report.kernels[j].alternatives) for j in (1, 2, 3))
        for ams in gen.ams_generators)
    ams_in = any(subspan(ams, report.genus_bound, rel) for ams in gen.ams_generators)
    return MainTheoremVerdict(sizes_ok, kernels_in, ams_in)


# -- capitulation witness ------------------------------------------------------

@dataclass(frozen=True)
class CapitulationWitness:
    """x + 2i = y1^2 * pi (system 1) or i * y1^2 * pi (system 2), x^2 + 4 = y^2 p."""

    p: int
    x: int
    y: int
    pi: GaussianInt
    system: int
    y1: GaussianInt
    y2: GaussianInt

    def as_dict(self) -> dict:
        g = lambda z: [str(z.re), str(z.im)]  # noqa: E731
        return {"p": self.p, "x": str(self.x), "y": str(self.y), "pi": g(self.pi),
                "system": self.system, "y1": g(self.y1), "y2": g(self.y2)}


def capitulation_witness(p: int) -> CapitulationWitness:
    """Gaussian decomposition of x + 2i for eps_p normalised to x^2 + 4 = y^2 p."""
    if p % 4 != 1:
        raise ValueError(f"p={p} must be 1 mod 4")
    u = fundamental_unit(p)
    if u.norm != -1:
        raise ValueError(f"eps_{p} has norm +1")
    x, y = (u.x, u.y) if u.denom == 2 else (2 * u.x, 2 * u.y)
    e, f = two_squares_4(p)
    z = GaussianInt(x, 2)
    for pi in (GaussianInt(e, 2 * f), GaussianInt(e, -2 * f)):
        quot = exact_div(z, pi)
        if quot is None:
            continue
        hit = unit_times_square(quot)
        if hit is None:
            continue
        unit, y1 = hit
        system = 1 if unit == GaussianInt(1, 0) else 2
        return CapitulationWitness(p, x, y, pi, system, y1, y1.conj())
    raise RuntimeError(f"no Gaussian system fits x + 2i = {z} for p={p}")
