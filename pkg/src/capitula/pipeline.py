"""Full per-triple analysis and its serialized form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .app222 import (compare_with_general, format_kernels, full_capitulation_check, is_cl222,
                     kappa_222, type_label)
from .capitulation import capitulation_report, check_main_theorem
from .context import context
from .fsu import fsu_K1, fsu_K2, fsu_K3, fsu_k
from .genus import genus_report
from .pell import QuadraticUnit
from .triple import PrimeTriple

SCHEMA = 1
REPORT_UNITS = ("p1p2q", "p2q", "p1q", "p1p2", "q", "p1", "p2")


@dataclass
class TripleReport:
    triple: tuple[int, int, int]
    units: dict[str, QuadraticUnit]
    patterns: dict[str, str]
    fsu: dict[str, dict]
    genus: dict
    capitulation: dict
    type_label: dict
    verdicts: dict
    discrepancies: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "triple": list(self.triple),
            "units": {k: u.as_dict() for k, u in self.units.items()},
            "patterns": dict(self.patterns),
            "fsu": self.fsu,
            "genus": self.genus,
            "capitulation": self.capitulation,
            "type": self.type_label,
            "verdicts": self.verdicts,
            "discrepancies": list(self.discrepancies),
            "flags": list(self.flags),
        }

    @classmethod
    def from_dict(cls, data: dict) -> TripleReport:
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(
            triple=tuple(data["triple"]),
            units={k: QuadraticUnit.from_dict(v) for k, v in data["units"].items()},
            patterns=dict(data["patterns"]), fsu=data["fsu"], genus=data["genus"],
            capitulation=data["capitulation"], type_label=data["type"],
            verdicts=data["verdicts"], discrepancies=list(data["discrepancies"]),
            flags=list(data["flags"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> TripleReport:
        return cls.from_dict(json.loads(text))

    @property
    def main_ok(self) -> bool:
        return self.verdicts["main_theorem"]["ok"]

    def to_text(self) -> str:
        p1, p2, q = self.triple
        cap = self.capitulation
        lines = [f"triple p1={p1} p2={p2} q={q}  d={p1 * p2 * q}"]
        for k in REPORT_UNITS:
            lines.append(f"  eps_{k:<6} {self.units[k]}  (norm {self.units[k].norm:+d})")
        lines.append(f"pattern of eps_d: {self.patterns['d']}")
        for fid in ("k", "K1", "K2", "K3"):
            f = self.fsu[fid]
            lines.append(f"  FSU {fid:<3} case {f['case']:<16} Q={f['hasse_Q']}  {', '.join(f['units'])}")
        g = self.genus
        lines.append(f"genus: r={g['r']} |Am|={g['am']} |Am_s|={g['ams']} Am_s in {g['ams_generators']}")
        for j in ("1", "2", "3"):
            k = cap["kernels"][j]
            lines.append(f"  kappa_K{j}: size {cap['sizes'][j]}  {' or '.join('<' + a + '>' for a in k['alternatives'])}")
        lines.append(f"genus kernel bound: <{cap['genus_bound']}>")
        lines.append(f"type: {self.type_label['label']}")
        mt = self.verdicts["main_theorem"]
        lines.append("main theorem: " + ("ok" if mt["ok"] else f"FAILED {mt}"))
        if self.verdicts.get("full_capitulation") is not None:
            lines.append(f"full capitulation: {self.verdicts['full_capitulation']}")
        for d in self.discrepancies:
            lines.append(f"DISCREPANCY {d}")
        for f in self.flags:
            lines.append(f"note: {f}")
        return "\n".join(lines) + "\n"


def analyze_triple(t: PrimeTriple) -> TripleReport:
    ctx = context(t)
    cap = capitulation_report(t, ctx)
    verdict = check_main_theorem(t, cap)
    gen = genus_report(t, ctx.pattern)
    k1p, k1 = fsu_K1(ctx.scp_d, ctx.scp_a, t)
    k2p, k2 = fsu_K2(ctx.scp_d, ctx.scp_a2, t)
    k3p, k3 = fsu_K3(ctx.scp_d, ctx.eps_p1p2, t)
    fsu = {d.field_id: d.as_dict(t) for d in (fsu_k(ctx.scp_d), k1p, k1, k2p, k2, k3p, k3)}
    label = type_label(t)
    discrepancies = list(cap.discrepancies)
    verdicts: dict = {"main_theorem": verdict.as_dict(), "full_capitulation": None,
                      "kernels_222": None}
    if is_cl222(t):
        verdicts["full_capitulation"] = full_capitulation_check(t)
        verdicts["kernels_222"] = format_kernels(kappa_222(t, label, ctx.eps_p1p2))
        discrepancies += compare_with_general(t)
    return TripleReport(
        triple=t.as_tuple(),
        units={k: ctx.units[k] for k in REPORT_UNITS},
        patterns={"d": ctx.pattern.pair_label, "p2q": ctx.sub1.value, "p1q": ctx.sub2.value},
        fsu=fsu, genus=gen.as_dict(), capitulation=cap.as_dict(),
        type_label=label.as_dict(), verdicts=verdicts,
        discrepancies=discrepancies, flags=list(cap.flags),
    )


CSV_COLUMNS = ("p1", "p2", "q", "d", "x", "y", "pattern", "QK1", "QK2", "QK3", "r", "am", "ams",
               "size1", "size2", "size3", "kernel1", "kernel2", "kernel3", "type", "cl222",
               "main_ok", "full_cap", "flags")


def csv_row(r: TripleReport) -> dict[str, str]:
    p1, p2, q = r.triple
    cap = r.capitulation
    eps_d = r.units["p1p2q"]
    full = r.verdicts["full_capitulation"]
    return {
        "p1": p1, "p2": p2, "q": q, "d": p1 * p2 * q, "x": eps_d.x, "y": eps_d.y,
        "pattern": r.patterns["d"],
        "QK1": r.fsu["K1"]["hasse_Q"], "QK2": r.fsu["K2"]["hasse_Q"], "QK3": r.fsu["K3"]["hasse_Q"],
        "r": r.genus["r"], "am": r.genus["am"], "ams": r.genus["ams"],
        **{f"size{j}": cap["sizes"][str(j)] for j in (1, 2, 3)},
        **{f"kernel{j}": " | ".join(cap["kernels"][str(j)]["alternatives"]) for j in (1, 2, 3)},
        "type": r.type_label["label"], "cl222": str(r.type_label["cl222"]).lower(),
        "main_ok": str(r.main_ok).lower(),
        "full_cap": "" if full is None else str(full).lower(),
        "flags": ";".join(r.discrepancies + r.flags),
    }

