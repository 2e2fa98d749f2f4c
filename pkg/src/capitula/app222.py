"""Triples with Cl_2(k) of type (2,2,2): detection, type labels, specialized kernels.

Types are read off square classes.  Family I, II, III means p1, p2, q
multiplies x +- 1 to a square; the subcase comes from eps_{p2q}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .capitulation import KernelResult, kappa_K1, kappa_K2, kappa_K3, resolve_K3_pairing
from .classwords import H1, H2, H3, H4, format_span, relations_for, same_span, span_order
from .context import context
from .intkernel import jacobi
from .pell import QuadraticUnit, unit_norm
from .squareclass import Pattern, SquareClassPair, SubPattern, classify_pattern, classify_sub_pattern
from .triple import PrimeTriple


class NotCl222(ValueError):
    pass


@dataclass(frozen=True)
class TypeLabel:
    family: str = "none"
    subcase: str = "unknown"
    cl222: bool = False

    def __str__(self):
        if self.family == "none":
            return "none"
        if self.subcase == "unknown":
            return self.family
        return f"{self.family}({self.subcase})"

    def as_dict(self) -> dict:
        return {"family": self.family, "subcase": self.subcase, "cl222": self.cl222,
                "label": str(self)}


def is_cl222(t: PrimeTriple) -> bool:
    """p1 or p2 is 5 mod 8 and at least two of (p1/p2), (p1/q), (p2/q) are -1."""
    if t.p1 % 8 != 5 and t.p2 % 8 != 5:
        return False
    symbols = (jacobi(t.p1, t.p2), jacobi(t.p1, t.q), jacobi(t.p2, t.q))
    return symbols.count(-1) >= 2


_FAMILY = {"p1": "I", "p2": "II", "q": "III"}

_SUBCASE = {
    "I": {SubPattern.ONE: "c", SubPattern.P: "b", SubPattern.TWO_P: "a"},
    "II": {SubPattern.ONE: "a", SubPattern.TWO_P: "b", SubPattern.P: "c"},
    "III": {SubPattern.P: "a|b", SubPattern.TWO_P: "c"},
}


def classify_type(t: PrimeTriple, scp_d: SquareClassPair, scp_a: SquareClassPair) -> TypeLabel:
    """Family from the pattern of eps_{p1p2q}, subcase from the pattern of eps_{p2q}."""
    if not is_cl222(t):
        raise NotCl222(f"{t} does not have a (2,2,2) 2-class group")
    prime = classify_pattern(scp_d, t).prime
    if prime is None:
        # cannot happen for cl222 triples: pattern {1,d} forces p1 = p2 = 1 mod 8
        raise NotCl222(f"{t}: pattern {{1,d}} with a (2,2,2) 2-class group")
    family = _FAMILY[prime]
    sub = classify_sub_pattern(scp_a, t.p2, t.q)
    return TypeLabel(family, _SUBCASE[family].get(sub, "unknown"), True)


def type_label(t: PrimeTriple) -> TypeLabel:
    """classify_type on the triple's own units; the empty label when not cl222."""
    if not is_cl222(t):
        return TypeLabel()
    ctx = context(t)
    return classify_type(t, ctx.scp_d, ctx.scp_a)


def kappa_222(t: PrimeTriple, label: TypeLabel, eps_p1p2: QuadraticUnit | int) -> dict[int, KernelResult]:
    """Specialized kernels of the (2,2,2) case, keyed by extension index."""
    if not label.cl222:
        raise NotCl222("label is not a (2,2,2) label")
    fam, sub = label.family, label.subcase
    if fam == "I":
        k1 = ((H1,),) if sub == "c" else ((H1, H3 + H4),)
        k2 = ((H3, H4),)
    else:
        k1 = ((H1, H2),)
        k2 = ((H3,),) if (fam, sub) == ("II", "c") else ((H3, H1 + H2),)
    norm = unit_norm(eps_p1p2) if isinstance(eps_p1p2, QuadraticUnit) else eps_p1p2
    case3 = f"N{'+' if norm == 1 else '-'},{fam}"
    if norm == 1:
        k3 = ((H3 + H4,),) if fam == "I" else ((H1 + H2,),)
    elif fam == "III":
        k3 = ((H1 + H3,), (H2 + H3,))
        if isinstance(eps_p1p2, QuadraticUnit):
            pairing = resolve_K3_pairing(eps_p1p2, t)
            k3 = (k3[0 if pairing == "13-24" else 1],)
            case3 += f",{pairing}"
    elif fam == "II":
        k3 = ((H1 + H3, H2 + H3),)
    else:
        k3 = ((H1 + H3, H1 + H4),)
    return {1: KernelResult(k1, str(label)), 2: KernelResult(k2, str(label)),
            3: KernelResult(k3, case3)}


_AMS_222 = {"I": (H1, H3, H4), "II": (H1, H2, H3), "III": (H1, H2, H3)}


def full_capitulation_check(t: PrimeTriple) -> bool:
    """The three specialized kernels together generate Cl_2(k) = Am_s (order 8)."""
    if not is_cl222(t):
        raise NotCl222(f"{t} does not have a (2,2,2) 2-class group")
    ctx = context(t)
    label = classify_type(t, ctx.scp_d, ctx.scp_a)
    rel = relations_for(ctx.pattern)
    ks = kappa_222(t, label, ctx.eps_p1p2)
    target = _AMS_222[label.family]
    for choice in product(*(ks[j].alternatives for j in (1, 2, 3))):
        union = [w for s in choice for w in s]
        if span_order(union, rel) == 8 and same_span(union, target, rel):
            return True
    return False


def compare_with_general(t: PrimeTriple) -> list[str]:
    """Mismatches between the specialized and the general kernels, modulo
    relations and up to recorded alternatives (expected empty)."""
    ctx = context(t)
    label = classify_type(t, ctx.scp_d, ctx.scp_a)
    rel = relations_for(ctx.pattern)
    special = kappa_222(t, label, ctx.eps_p1p2)
    general = {1: kappa_K1(ctx.scp_d, ctx.scp_a, t), 2: kappa_K2(ctx.scp_d, ctx.scp_a2, t),
               3: kappa_K3(ctx.scp_d, ctx.eps_p1p2, t)}
    out = []
    for j in (1, 2, 3):
        if not any(same_span(a, b, rel) for a in special[j].alternatives
                   for b in general[j].alternatives):
            out.append(f"K{j} {label}: specialized {special[j].formatted()} "
                       f"vs general {general[j].formatted()} (case {general[j].case})")
    return out


def pattern_family(pattern: Pattern) -> str:
    """Family predicted from the pattern alone."""
    prime = Pattern(pattern).prime
    return "none" if prime is None else _FAMILY[prime]


def format_kernels(ks: dict[int, KernelResult]) -> dict[str, list[str]]:
    return {str(j): [format_span(s) for s in k.alternatives] for j, k in sorted(ks.items())}
