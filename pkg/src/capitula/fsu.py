"""Symbolic fundamental systems of units for k, K1, K2, K3 and their real subfields.

Conditions are read off square classes: a key like "2p1" stands for the
statement "2*p1*(x+1) or 2*p1*(x-1) is a perfect square", where x belongs to
eps_{p1p2q}; the same keys applied to the auxiliary unit (eps_{p2q} for K1,
eps_{p1q} for K2) give the "a" conditions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pell import QuadraticUnit, unit_norm
from .squareclass import SquareClassPair
from .triple import PrimeTriple

UNIT_KEYS = ("p1", "p2", "q", "p2q", "p1q", "p1p2", "p1p2q")

_SWAP = {"p1": "p2", "p2": "p1", "2p1": "2p2", "2p2": "2p1", "p2q": "p1q", "p1q": "p2q"}


def swap_key(key: str) -> str:
    return _SWAP.get(key, key)


class CaseNotCovered(RuntimeError):
    pass


@dataclass(frozen=True)
class UnitExpr:
    """coefficient * prod(eps_m for m in bases), optionally under a square root."""

    bases: tuple[str, ...]
    coefficient: str = "1"
    sqrt: bool = False

    def __post_init__(self):
        if self.coefficient not in ("1", "i"):
            raise ValueError("coefficient must be '1' or 'i'")
        if self.coefficient == "i" and not self.sqrt:
            raise ValueError("coefficient i only occurs under a square root")
        bad = [b for b in self.bases if b not in UNIT_KEYS]
        if bad:
            raise ValueError(f"unknown unit keys {bad}")
        object.__setattr__(self, "bases", tuple(sorted(self.bases, key=UNIT_KEYS.index)))

    def swapped(self) -> UnitExpr:
        return UnitExpr(tuple(swap_key(b) for b in self.bases), self.coefficient, self.sqrt)

    def render(self, triple: PrimeTriple | None = None) -> str:
        names = [f"eps_{triple.radicand(b) if triple else b}" for b in self.bases]
        if self.coefficient == "i":
            names.insert(0, "i")
        body = "*".join(names)
        return f"sqrt({body})" if self.sqrt else body

    def __str__(self):
        return self.render()


def eps(*keys: str) -> UnitExpr:
    return UnitExpr(keys)


def root(*keys: str, i: bool = False) -> UnitExpr:
    return UnitExpr(keys, "i" if i else "1", True)


@dataclass(frozen=True)
class FsuDescriptor:
    field_id: str
    units: tuple[UnitExpr, ...]
    hasse_Q: int | None = None
    case: str = ""

    def render(self, triple: PrimeTriple | None = None) -> list[str]:
        return [u.render(triple) for u in self.units]

    def as_dict(self, triple: PrimeTriple | None = None) -> dict:
        return {"field": self.field_id, "case": self.case, "hasse_Q": self.hasse_Q,
                "units": self.render(triple)}


@dataclass(frozen=True)
class Condition:
    """a_any: some listed multiplier squares a+-1 (None: no requirement);
    a_none: no listed multiplier does; x_any: some listed multiplier squares x+-1;
    x_none: none of the listed multipliers does."""

    x_any: tuple[str, ...] = ()
    a_any: tuple[str, ...] | None = None
    a_none: tuple[str, ...] = ()
    x_none: tuple[str, ...] = ()

    def holds(self, x_sq, a_sq=None) -> bool:
        if self.x_any and not any(x_sq(k) for k in self.x_any):
            return False
        if any(x_sq(k) for k in self.x_none):
            return False
        if self.a_any is not None and not any(a_sq(k) for k in self.a_any):
            return False
        if any(a_sq(k) for k in self.a_none):
            return False
        return True

    def swapped(self) -> Condition:
        sw = lambda ks: tuple(swap_key(k) for k in ks)  # noqa: E731
        return Condition(sw(self.x_any), None if self.a_any is None else sw(self.a_any),
                         sw(self.a_none), sw(self.x_none))


@dataclass(frozen=True)
class Case:
    label: str
    conditions: tuple[Condition, ...]
    real_units: tuple[UnitExpr, ...]
    units: tuple[UnitExpr, ...]
    hasse_Q: int

    def holds(self, x_sq, a_sq=None) -> bool:
        return any(c.holds(x_sq, a_sq) for c in self.conditions)

    def swapped(self) -> Case:
        return Case(self.label, tuple(c.swapped() for c in self.conditions),
                    tuple(u.swapped() for u in self.real_units),
                    tuple(u.swapped() for u in self.units), self.hasse_Q)


C = Condition

K1_TABLE = (
    Case("1", (C(x_any=("1", "p1"), a_any=("1",)),),
         (eps("p1"), eps("p2q"), root("p2q", "p1p2q")),
         (eps("p1"), root("p2q", i=True), root("p2q", "p1p2q")), 2),
    Case("2", (C(x_any=("1", "p1"), a_none=("1",)),),
         (eps("p1"), eps("p2q"), eps("p1p2q")),
         (eps("p1"), eps("p2q"), root("p1p2q", i=True)), 2),
    Case("3", (C(x_any=("2p1",), a_any=("1",)),),
         (eps("p1"), eps("p2q"), root("p1p2q")),
         (eps("p1"), root("p2q", i=True), root("p1p2q")), 2),
    Case("4", (C(x_any=("2p1",), a_none=("1",)),),
         (eps("p1"), eps("p2q"), root("p1p2q")),
         (eps("p1"), eps("p2q"), root("p1p2q")), 1),
    Case("5", (C(x_any=("p2", "2p2"), a_any=("1",)), C(x_any=("q", "2q"), a_any=("1",))),
         (eps("p1"), eps("p2q"), eps("p1p2q")),
         (eps("p1"), root("p2q", i=True), eps("p1p2q")), 2),
    Case("6", (C(x_any=("p2", "q"), a_any=("p2",)), C(x_any=("2p2", "2q"), a_any=("2p2",))),
         (eps("p1"), eps("p2q"), root("p2q", "p1p2q")),
         (eps("p1"), eps("p2q"), root("p2q", "p1p2q")), 1),
    Case("7", (C(x_any=("2p2", "2q"), a_any=("p2",)), C(x_any=("p2", "q"), a_any=("2p2",))),
         (eps("p1"), eps("p2q"), eps("p1p2q")),
         (eps("p1"), eps("p2q"), root("p2q", "p1p2q", i=True)), 2),
)

# Generated, not transcribed: the K2 statement is the K1 statement under p1 <-> p2.
K2_TABLE = tuple(case.swapped() for case in K1_TABLE)

# Literal transcription of the printed K2 statement, kept only to diff against K2_TABLE.
K2_PRINTED = (
    Case("1", (C(x_any=("1", "p2"), a_any=("1",)),),
         (eps("p2"), eps("p1q"), root("p1q", "p1p2q")),
         (eps("p2"), root("p1q", i=True), root("p1q", "p1p2q")), 2),
    Case("2", (C(x_any=("1", "p2"), a_none=("1",)),),
         (eps("p2"), eps("p1q"), eps("p1p2q")),
         (eps("p2"), eps("p1q"), root("p1p2q", i=True)), 2),
    Case("3", (C(x_any=("2p2",), a_any=("1",)),),
         (eps("p2"), eps("p1q"), root("p1p2q")),
         (eps("p2"), root("p1q", i=True), root("p1p2q")), 2),
    Case("4", (C(x_any=("2p2",), a_none=("1",)),),
         (eps("p2"), eps("p1q"), root("p1p2q")),
         (eps("p2"), eps("p1q"), root("p1p2q")), 1),
    Case("5", (C(x_any=("p1", "2p1"), a_any=("1",)), C(x_any=("q", "2q"), a_any=("1",))),
         (eps("p2"), eps("p1q"), eps("p1p2q")),
         (eps("p2"), root("p1q", i=True), eps("p1p2q")), 2),
    Case("6", (C(x_any=("p1", "q"), a_any=("p1",)), C(x_any=("2p1", "2q"), a_any=("2p1",))),
         (eps("p2"), eps("p1q"), root("p1q", "p1p2q")),
         (eps("p2"), eps("p1q"), root("p1q", "p1p2q")), 1),
    Case("7", (C(x_any=("2p1", "2q"), a_any=("p1",)), C(x_any=("p1", "q"), a_any=("2p1",))),
         (eps("p2"), eps("p1q"), eps("p1p2q")),
         (eps("p2"), eps("p1q"), root("p1q", "p1p2q", i=True)), 2),
)

_K3_SHARED = (
    Case("1", (C(x_any=("2q",)),),
         (eps("q"), eps("p1p2"), root("p1p2q")),
         (eps("p1p2"), root("p1p2q"), root("q", i=True)), 2),
    Case("2", (C(x_any=("1", "q")),),
         (eps("q"), eps("p1p2"), root("q", "p1p2q")),
         (eps("p1p2"), root("q", "p1p2q"), root("q", i=True)), 2),
)

K3_TABLE_NORM_PLUS = _K3_SHARED + (
    Case("3", (C(x_any=("p1", "p2")),),
         (eps("q"), eps("p1p2"), root("q", "p1p2", "p1p2q")),
         (eps("p1p2"), root("q", "p1p2", "p1p2q"), root("q", i=True)), 2),
    Case("4", (C(x_any=("2p1", "2p2")),),
         (eps("q"), eps("p1p2"), root("p1p2", "p1p2q")),
         (eps("p1p2"), root("p1p2", "p1p2q"), root("q", i=True)), 2),
)

K3_TABLE_NORM_MINUS = _K3_SHARED + (
    Case("3", (C(x_none=("2q", "1", "q")),),
         (eps("q"), eps("p1p2"), eps("p1p2q")),
         (eps("p1p2"), eps("p1p2q"), root("q", i=True)), 2),
)


def transcription_diff(generated=K2_TABLE, printed=K2_PRINTED) -> list[str]:
    """Differences between the generated and printed K2 tables (expected empty)."""
    out = []
    for g, p in zip(generated, printed):
        for attr in ("conditions", "real_units", "units", "hasse_Q"):
            gv, pv = getattr(g, attr), getattr(p, attr)
            if attr in ("real_units", "units"):
                gv, pv = sorted(map(str, gv)), sorted(map(str, pv))
            if gv != pv:
                out.append(f"K2 case {g.label}: {attr} generated={gv} printed={pv}")
    if len(generated) != len(printed):
        out.append("K2 tables have different numbers of cases")
    return out


def multiplier_value(key: str, t: PrimeTriple) -> int:
    """'2p1' -> 2*p1, '1' -> 1, 'q' -> q, ..."""
    if key == "1":
        return 1
    if key.startswith("2"):
        return 2 * multiplier_value(key[1:], t)
    return t.radicand(key)


def square_test(scp: SquareClassPair, t: PrimeTriple):
    """Predicate key -> 'key * (x +- 1) is a square' for the unit behind ``scp``."""
    return lambda key: scp.contains(multiplier_value(key, t))


_ROMAN = ("i", "ii")


def _match(table, x_sq, a_sq, what: str) -> tuple[Case, str]:
    hits = []
    for case in table:
        for n, cond in enumerate(case.conditions):
            if cond.holds(x_sq, a_sq):
                sub = f".{_ROMAN[n]}" if len(case.conditions) > 1 else ""
                hits.append((case, case.label + sub))
    if len(hits) != 1:
        labels = [label for _, label in hits]
        raise CaseNotCovered(f"{what}: expected exactly one case, matched {labels or 'none'}")
    return hits[0]


def _pair(field_id: str, hit: tuple[Case, str]) -> tuple[FsuDescriptor, FsuDescriptor]:
    case, label = hit
    return (FsuDescriptor(field_id + "+", case.real_units, None, label),
            FsuDescriptor(field_id, case.units, case.hasse_Q, label))


def fsu_k(scp_d: SquareClassPair) -> FsuDescriptor:
    """{sqrt(i*eps_d)} when x+-1 is a square, else {eps_d}."""
    if scp_d.contains(1):
        return FsuDescriptor("k", (root("p1p2q", i=True),), 2, "x+-1 square")
    return FsuDescriptor("k", (eps("p1p2q"),), 1, "x+-1 not square")


def fsu_K1(scp_d: SquareClassPair, scp_a: SquareClassPair, t: PrimeTriple):
    """(K1+, K1) descriptors; ``scp_a`` is the square-class pair of eps_{p2q}."""
    return _pair("K1", _match(K1_TABLE, square_test(scp_d, t), square_test(scp_a, t), f"K1 for {t}"))


def fsu_K2(scp_d: SquareClassPair, scp_a2: SquareClassPair, t: PrimeTriple):
    """(K2+, K2) descriptors; ``scp_a2`` is the square-class pair of eps_{p1q}."""
    return _pair("K2", _match(K2_TABLE, square_test(scp_d, t), square_test(scp_a2, t), f"K2 for {t}"))


def fsu_K3(scp_d: SquareClassPair, eps_p1p2: QuadraticUnit | int, t: PrimeTriple):
    """(K3+, K3) descriptors, dispatched on N(eps_{p1p2}) (a unit or its norm)."""
    norm_p1p2 = unit_norm(eps_p1p2) if isinstance(eps_p1p2, QuadraticUnit) else eps_p1p2
    if norm_p1p2 not in (1, -1):
        raise ValueError("norm_p1p2 must be +1 or -1")
    table = K3_TABLE_NORM_PLUS if norm_p1p2 == 1 else K3_TABLE_NORM_MINUS
    return _pair("K3", _match(table, square_test(scp_d, t), None, f"K3 (N={norm_p1p2:+d}) for {t}"))
