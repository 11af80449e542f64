"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line to the terminal (also under
pytest's capture) before asserting, so ``pytest tests/test_acceptance.py``
doubles as a report.
"""

import io
import json
import time
from fractions import Fraction
from itertools import product
from math import comb, gcd

from multicores.cli import run
from multicores.enumeration import (
    aa_members,
    average_size,
    conjecture_value,
    count_aa,
    count_anderson,
    count_ss,
    count_t0,
    count_u,
    from_tuples,
    sigma_tau,
    st_cores,
    st_decode,
    u_tuples,
)
from multicores.finiteness import decide_finite, enumerate_members
from multicores.multicore import (
    Datum,
    DatumSet,
    Multipartition,
    is_core,
    is_core_bruteforce,
    multipartitions_up_to,
    parse_multipartition,
    sandwich_partners,
    weight,
)
from multicores.partitions import EMPTY, Partition, s_set
from multicores.verify import SCALES, suite_finiteness
from multicores.weyl_orbit import act_generator, orbit_members, s_cores_up_to

from reference_data import AA_3_4_1, FIGURE_EDGES, FIGURE_NODES, SS_5_1_3, T0_3_1_2, TWELVE_ROWS
from test_finiteness import reference_finite, reference_g, reference_x

M = Multipartition.of
P = Partition


def report(capsys, number, ok, detail, elapsed=None):
    timing = "" if elapsed is None else f" ({elapsed:.2f}s)"
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}{timing}")
    assert ok, detail


def complete(*data):
    return enumerate_members(DatumSet(tuple(Datum(s, c) for s, c in data)), mode="complete")


def test_criterion_01_tripartition(capsys):
    start = time.perf_counter()
    out, err = io.StringIO(), io.StringIO()
    code = run(["enumerate", "--data", "0:1,3,0;0:3,0,1", "--complete", "--format", "json"], out, err)
    elapsed = time.perf_counter() - start
    obj = json.loads(out.getvalue())
    largest = max(obj["members"], key=lambda m: parse_multipartition(m).size)
    ok = (code == 0 and obj["count"] == 30 and obj["certificate"] == "certified"
          and largest == "[1,1,1]|[3,3,1,1,1]|[2,2]" and obj["members"][-1] == largest and elapsed < 60)
    report(capsys, 1, ok, f"{obj['count']} members, largest {largest}", elapsed)


def test_criterion_02_twelve_row_table(capsys):
    start = time.perf_counter()
    hits = {}
    for u in u_tuples(3, 3, 1):
        for v in u_tuples(3, 9, 5):
            lam, mu, _ = from_tuples(u, v, 3, 9, 1, 5)
            hits.setdefault((lam, mu), set()).update(
                (u.shifted(d).entries, v.shifted(d).entries) for d in range(3))
    problems = []
    for lam, mu, xl, xm, sigma, tau in TWELVE_ROWS:
        lam, mu = P(lam), P(mu)
        if (lam, mu) not in hits:
            problems.append(f"missing {lam} {mu}")
            continue
        if s_set(lam, 3).as_set() != xl or s_set(mu, 3).as_set() != xm:
            problems.append(f"3-sets of {lam} {mu}")
        if (sigma, tau) not in hits[(lam, mu)]:
            problems.append(f"sigma/tau of {lam} {mu}")
        if (sigma_tau(lam, mu, 3, 1, 3).entries, sigma_tau(lam, mu, 9, 5, 3).entries) != (sigma, tau):
            problems.append(f"direct sigma/tau of {lam} {mu}")
    elapsed = time.perf_counter() - start
    ok = not problems and len(hits) == 12 and count_ss(3, 9, 1, 5) == 12 and elapsed < 5
    report(capsys, 2, ok, f"{len(hits)} bipartitions from the sweep, problems={problems}", elapsed)


def test_criterion_03_average_examples(capsys):
    start = time.perf_counter()
    ss = complete((5, (0, 1)), (5, (0, 3)))
    t0 = complete((3, (0, 1)), (0, (0, 2)))
    aa = [M(*pq) for pq in aa_members(3, 4, 1)]
    checks = {
        "ss(5,5,1,3)": (count_ss(5, 5, 1, 3) == 10 and set(ss.members) == SS_5_1_3
                        and average_size(ss.members) == 3 == conjecture_value("ss", (5, 1, 3))),
        "t0(3,1,2)": (count_t0(3, 1, 2) == 6 and set(t0.members) == T0_3_1_2
                      and average_size(t0.members) == Fraction(5, 3) == conjecture_value("t0", (3, 1, 2))),
        "aa(3,4,1)": (count_aa(3, 4, 1) == 10 and set(aa) == AA_3_4_1
                      and average_size(aa) == 3 == conjecture_value("aa", (3, 4, 1))),
    }
    elapsed = time.perf_counter() - start
    report(capsys, 3, all(checks.values()) and elapsed < 10, f"{checks}", elapsed)


def test_criterion_04_both_moduli_zero(capsys):
    res = complete((0, (0, 0)), (0, (0, 1)))
    ok = res.members == [Multipartition.empty(2)] and res.certificate == "certified"
    report(capsys, 4, ok, f"members {[str(m) for m in res.members]}")


def test_criterion_05_rational_catalan(capsys):
    start = time.perf_counter()
    bad, pairs = [], 0
    for s in range(1, 14):
        for t in range(1, 15 - s):
            if gcd(s, t) == 1:
                pairs += 1
                got = len(set(st_cores(s, t)))
                if got != count_anderson(s, t) or count_anderson(s, t) != comb(s + t, s) // (s + t):
                    bad.append((s, t, got))
    word = st_decode("DRDRDRRR", 3, 5)
    elapsed = time.perf_counter() - start
    ok = not bad and word == P((1,)) and elapsed < 10
    report(capsys, 5, ok, f"{pairs} coprime pairs, mismatches {bad}, decode(DRDRDRRR)={word}", elapsed)


def test_criterion_06_definitional_equivalence(capsys):
    start = time.perf_counter()
    cases, bad = 0, []
    for level in (1, 2):
        mps = list(multipartitions_up_to(6, level))
        for s in range(6):
            for charges in product(range(-2, 3), repeat=level):
                d = Datum(s, charges)
                for m in mps:
                    cases += 1
                    fast, slow = is_core(m, d), is_core_bruteforce(m, d)
                    by_weight = m.size == 0 if s == 1 else weight(m, d) == 0
                    if not fast == slow == by_weight:
                        bad.append((d, m))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    report(capsys, 6, ok, f"{cases} cases, {len(bad)} discrepancies", elapsed)


def test_criterion_07_orbit_equals_filter(capsys):
    bad = []
    for d in (Datum(3, (0, 1)), Datum(4, (0, 2, 1)), Datum(2, (0, 0)), Datum(0, (0, 1))):
        orbit = orbit_members(d, 8)
        filtered = sorted((m for m in multipartitions_up_to(8, d.level) if is_core(m, d)),
                          key=Multipartition.sort_key)
        if orbit != filtered:
            bad.append(str(d))
    d31 = Datum(3, (0, 1))
    figure = set(FIGURE_NODES)
    in_orbit = figure <= set(orbit_members(d31, max(m.size for m in figure)))
    edges = all(act_generator(FIGURE_NODES[a - 1], d31, i) == FIGURE_NODES[b - 1] for a, b, i in FIGURE_EDGES)
    ok = not bad and len(figure) == 19 and in_orbit and edges
    report(capsys, 7, ok, f"mismatching data {bad}, figure members in orbit={in_orbit}, edges={edges}")


def test_criterion_08_sandwich_counts(capsys):
    bad, cases = [], 0
    for s in range(1, 7):
        cores = s_cores_up_to(s, 8) if s >= 2 else [EMPTY]
        for p in cores:
            for c, d in product(range(s), repeat=2):
                cases += 1
                if len(sandwich_partners(p, s, c, d)) != comb(s, (c - d) % s):
                    bad.append((s, p, c, d))
    figure = (sandwich_partners(EMPTY, 3, 0, 1) == [EMPTY, P((1,)), P((2,))]
              and sandwich_partners(P((1,)), 3, 0, 1) == [EMPTY, P((1, 1)), P((3, 1))])
    report(capsys, 8, not bad and figure, f"{cases} cases, {len(bad)} wrong counts, figure partners={figure}")


def test_criterion_09_finiteness_grid(capsys):
    start = time.perf_counter()
    cfg = SCALES["full"]
    symbolic_bad, cases = [], 0
    for level in (1, 2):
        data = [Datum(s, c) for s in cfg.moduli for c in product(range(-2, 3), repeat=level)]
        for i, first in enumerate(data):
            for second in [None, *data[i:]]:
                T = DatumSet((first,) if second is None else (first, second))
                cases += 1
                v = decide_finite(T)
                if v.finite != reference_finite(T) or v.g_value != reference_g(T):
                    symbolic_bad.append(str(T))
                elif all(d.modulus == 0 for d in T) and v.condition_x != reference_x(T):
                    symbolic_bad.append(str(T))
    grid = suite_finiteness(cfg)
    elapsed = time.perf_counter() - start
    ok = not symbolic_bad and grid.passed
    report(capsys, 9, ok, f"{cases} sets checked symbolically ({len(symbolic_bad)} bad), "
                          f"{grid.cases} enumerated ({len(grid.failures)} counterexamples)", elapsed)


def test_criterion_10_inclusion_exclusion(capsys):
    bad, cases = [], 0
    for g in range(1, 7):
        for ratio in range(1, 5):
            s = g * ratio
            for a in range(s + 1):
                cases += 1
                brute = sum(1 for e in product(range(ratio + 1), repeat=g) if sum(e) == a)
                if brute != count_u(g, s, a) or brute != sum(1 for _ in u_tuples(g, s, a)):
                    bad.append((g, s, a))
    report(capsys, 10, not bad, f"{cases} cases, mismatches {bad}")
