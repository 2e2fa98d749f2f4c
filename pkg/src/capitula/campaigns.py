"""Verification campaigns over ranges of integers and triples."""

from __future__ import annotations

from dataclasses import dataclass, field

from .app222 import compare_with_general, full_capitulation_check, is_cl222, pattern_family, type_label
from .capitulation import capitulation_report, check_main_theorem
from .classwords import relations_for, span_order
from .context import context
from .fsu import CaseNotCovered, fsu_K1, fsu_K2, fsu_K3, transcription_diff
from .genus import genus_report
from .pell import fundamental_unit
from .squareclass import Pattern, UnclassifiedPattern, classify_pattern, square_class_pair, validate_lemma
from .triple import iter_triples, iter_triples_below

PROPERTIES = ("lemma2.2", "lemma2.3", "lemma2.4", "lemma2.6",
              "classifier", "fsu-cases", "main-theorem", "app222")


@dataclass
class CampaignResult:
    property_id: str
    bound: int
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"property": self.property_id, "bound": self.bound, "checked": self.checked,
                "violations": self.violations, "ok": self.ok}


def _triples(bound: int):
    """Both labelings of every triple whose primes lie below ``bound``."""
    return iter_triples(bound - 1, bound - 1, ordered=True)


def classifier(bound: int) -> CampaignResult:
    """Every triple with d < bound gets one of the seven patterns, and {1,d}
    never occurs when p1 or p2 is 5 mod 8."""
    res = CampaignResult("classifier", bound)
    for t in iter_triples_below(bound):
        res.checked += 1
        try:
            pat = classify_pattern(square_class_pair(fundamental_unit(t.d)), t)
        except (UnclassifiedPattern, ValueError) as exc:
            res.violations.append({"triple": t.as_tuple(), "reason": str(exc)})
            continue
        if pat is Pattern.ONE and (t.p1 % 8 == 5 or t.p2 % 8 == 5):
            res.violations.append({"triple": t.as_tuple(), "reason": "pattern {1,d} with a prime 5 mod 8"})
    return res


def fsu_cases(bound: int) -> CampaignResult:
    """Each FSU table matches exactly one case; the K2 table is the mirror of K1."""
    res = CampaignResult("fsu-cases", bound)
    for diff in transcription_diff():
        res.violations.append({"triple": None, "reason": diff})
    for t in _triples(bound):
        res.checked += 1
        ctx = context(t)
        try:
            fsu_K1(ctx.scp_d, ctx.scp_a, t)
            fsu_K2(ctx.scp_d, ctx.scp_a2, t)
            fsu_K3(ctx.scp_d, ctx.eps_p1p2, t)
        except CaseNotCovered as exc:
            res.violations.append({"triple": t.as_tuple(), "reason": str(exc)})
    return res


def main_theorem(bound: int) -> CampaignResult:
    """Main theorem plus size, oracle and genus consistency on every triple."""
    res = CampaignResult("main-theorem", bound)
    for t in _triples(bound):
        res.checked += 1
        ctx = context(t)
        rep = capitulation_report(t, ctx)
        verdict = check_main_theorem(t, rep)
        reasons = list(rep.discrepancies)
        if not verdict.ok:
            reasons.append(f"main theorem verdict {verdict.as_dict()}")
        gen = genus_report(t, ctx.pattern)
        rel = relations_for(ctx.pattern)
        if not any(span_order(a, rel) == gen.ams_order for a in gen.ams_generators):
            reasons.append(f"no Am_s alternative has order {gen.ams_order}")
        if reasons:
            res.violations.append({"triple": t.as_tuple(), "reasons": reasons,
                                   "report": rep.as_dict()})
    return res


def app222(bound: int) -> CampaignResult:
    """Specialized (2,2,2) statements on every cl222 triple."""
    res = CampaignResult("app222", bound)
    for t in _triples(bound):
        if not is_cl222(t):
            continue
        res.checked += 1
        ctx = context(t)
        label = type_label(t)
        reasons = compare_with_general(t)
        if label.family != pattern_family(ctx.pattern):
            reasons.append(f"family {label.family} but pattern {ctx.pattern.pair_label}")
        if not full_capitulation_check(t):
            reasons.append("specialized kernels do not generate Cl_2(k)")
        gen = genus_report(t, ctx.pattern)
        if (gen.r, gen.am_order, gen.ams_order) != (3, 8, 8):
            reasons.append(f"genus data r={gen.r} am={gen.am_order} ams={gen.ams_order}")
        if reasons:
            res.violations.append({"triple": t.as_tuple(), "type": str(label), "reasons": reasons})
    return res


def lemma(lemma_id: str, bound: int) -> CampaignResult:
    res = CampaignResult(lemma_id, bound)
    res.violations = validate_lemma(lemma_id, bound)
    res.checked = bound
    return res


_CAMPAIGNS = {"classifier": classifier, "fsu-cases": fsu_cases,
              "main-theorem": main_theorem, "app222": app222}


def run(property_id: str, bound: int) -> CampaignResult:
    if property_id not in PROPERTIES:
        raise KeyError(property_id)
    if property_id.startswith("lemma"):
        return lemma(property_id, bound)
    return _CAMPAIGNS[property_id](bound)
