"""Oracle suites runnable from the command line.

Each suite compares a fast implementation with an independent slow one over
a parameter grid and reports the number of cases and discrepancies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import gcd

from .enumeration import binom, count_anderson, count_u, st_cores, u_tuples
from .finiteness import decide_finite, enumerate_members
from .multicore import (
    Datum,
    DatumSet,
    Multipartition,
    format_datum,
    format_datum_set,
    is_core,
    is_core_bruteforce,
    multipartitions_up_to,
    sandwich_partners,
    weight,
)
from .partitions import EMPTY
from .weyl_orbit import orbit_members, s_cores_up_to


@dataclass(frozen=True)
class VerifyConfig:
    max_size: int = 6
    max_level: int = 2
    moduli: tuple[int, ...] = (0, 1, 2, 3, 4, 5)
    charge_radius: int = 2
    orbit_size: int = 8
    sandwich_max_modulus: int = 6
    sandwich_size: int = 8
    tuple_max_g: int = 6
    tuple_max_ratio: int = 4
    anderson_max_sum: int = 14
    grid_low: int = 8
    grid_high: int = 14


SCALES = {
    "quick": VerifyConfig(max_size=4, moduli=(0, 1, 2, 3), charge_radius=1, orbit_size=6,
                          sandwich_max_modulus=4, sandwich_size=6, tuple_max_g=4, tuple_max_ratio=3,
                          anderson_max_sum=10),
    "full": VerifyConfig(),
}


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases, "failures": self.failures[:10]}


def canonical_datum(d: Datum) -> Datum:
    """Representative of the charge vectors giving the same core set: first charge 0, others reduced mod s."""
    base = [c - d.charges[0] for c in d.charges]
    if d.modulus:
        base = [c % d.modulus for c in base]
    return Datum(d.modulus, tuple(base))


def datum_grid(levels, moduli, radius: int) -> list[Datum]:
    out = set()
    for level in levels:
        for s in moduli:
            for charges in product(range(-radius, radius + 1), repeat=level):
                out.add(canonical_datum(Datum(s, charges)))
    return sorted(out, key=lambda d: (d.level, d.modulus, d.charges))


def datum_set_grid(levels, moduli, radius: int, max_data: int = 2) -> list[DatumSet]:
    data = datum_grid(levels, moduli, radius)
    out = []
    for n in range(1, max_data + 1):
        for combo in combinations_with_replacement(data, n):
            if len({d.level for d in combo}) == 1:
                out.append(DatumSet(combo))
    return out


def suite_definitions(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("core-definitions")
    for d in datum_grid(range(1, cfg.max_level + 1), cfg.moduli, cfg.charge_radius):
        for m in multipartitions_up_to(cfg.max_size, d.level):
            res.cases += 1
            fast = is_core(m, d)
            slow = is_core_bruteforce(m, d)
            zero = weight(m, d) == 0 if d.modulus != 1 else m.size == 0
            if not fast == slow == zero:
                res.failures.append(f"{format_datum(d)} {m}: fast={fast} brute={slow} weight0={zero}")
    return res


def suite_orbits(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("orbit-equals-filter")
    for d in (Datum(3, (0, 1)), Datum(4, (0, 2, 1)), Datum(2, (0, 0)), Datum(0, (0, 1))):
        res.cases += 1
        orbit = orbit_members(d, cfg.orbit_size)
        filtered = sorted((m for m in multipartitions_up_to(cfg.orbit_size, d.level) if is_core(m, d)),
                          key=Multipartition.sort_key)
        if orbit != filtered:
            res.failures.append(f"{format_datum(d)}: orbit {len(orbit)} vs filter {len(filtered)}")
    return res


def suite_sandwich(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("sandwich-counts")
    for s in range(1, cfg.sandwich_max_modulus + 1):
        cores = s_cores_up_to(s, cfg.sandwich_size) if s >= 2 else [EMPTY]
        for p in cores:
            for e in range(s):
                res.cases += 1
                got = len(sandwich_partners(p, s, e, 0))
                if got != binom(s, e):
                    res.failures.append(f"s={s} p={p} e={e}: {got}")
    return res


def suite_tuples(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("inclusion-exclusion")
    for g in range(1, cfg.tuple_max_g + 1):
        for ratio in range(1, cfg.tuple_max_ratio + 1):
            s = g * ratio
            for a in range(s + 1):
                res.cases += 1
                brute = sum(1 for _ in u_tuples(g, s, a))
                if brute != count_u(g, s, a):
                    res.failures.append(f"g={g} s={s} a={a}: {count_u(g, s, a)} vs {brute}")
    return res


def suite_anderson(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("rational-catalan")
    for s in range(1, cfg.anderson_max_sum):
        for t in range(s, cfg.anderson_max_sum - s + 1):
            if gcd(s, t) != 1:
                continue
            res.cases += 1
            got = len(set(st_cores(s, t)))
            if got != count_anderson(s, t):
                res.failures.append(f"({s},{t}): {got}")
    return res


def suite_finiteness(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("finiteness-grid")
    for T in datum_set_grid(range(1, cfg.max_level + 1), cfg.moduli, cfg.charge_radius):
        res.cases += 1
        verdict = decide_finite(T)
        label = format_datum_set(T)
        if verdict.finite:
            full = enumerate_members(T, mode="complete")
            if full.certificate != "certified":
                continue
            top = max(cfg.grid_high, max(m.size for m in full.members))
            if enumerate_members(T, max_size=top).members != full.members:
                res.failures.append(f"{label}: complete list does not saturate")
        else:
            low = enumerate_members(T, max_size=cfg.grid_low).count
            high = enumerate_members(T, max_size=cfg.grid_high).count
            if not high > low:
                res.failures.append(f"{label}: infinite verdict but counts {low} -> {high}")
    return res


SUITES = {
    "definitions": suite_definitions,
    "orbits": suite_orbits,
    "sandwich": suite_sandwich,
    "tuples": suite_tuples,
    "anderson": suite_anderson,
    "finiteness": suite_finiteness,
}


def run_suites(names=None, scale: str = "quick") -> list[SuiteResult]:
    cfg = SCALES[scale]
    names = list(SUITES) if not names else names
    return [SUITES[n](cfg) for n in names]
