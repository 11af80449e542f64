"""Deciding finiteness of simultaneous core sets and enumerating their members.

``decide_finite`` is exact.  ``enumerate_members`` in complete mode tries to
bound every component by a finite candidate list using only proven
constraints (coprime simultaneous cores, sandwich partners, first row and
column bounds, removable-node bounds).  When that fails it falls back to
enumerating under growing size ceilings and labels the result accordingly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import comb, gcd
from typing import Sequence

from .enumeration import st_cores
from .errors import InfiniteSetError, LevelMismatchError, PreconditionError
from .multicore import (
    Datum,
    DatumSet,
    Multipartition,
    is_core_bipartition,
    is_simultaneous_core,
    sandwich_partners,
)
from .partitions import EMPTY, Partition, hook_count, is_s_core, partitions_up_to, s_cores_from_s_sets
from .weyl_orbit import s_cores_up_to

log = logging.getLogger(__name__)

REASONS = (
    "g-not-1",
    "x-fails",
    "all-zero-finite",
    "positive-modulus-finite",
    "s-equals-1",
    "empty-T-infinite",
)

CERTIFIED = "certified"
HEURISTIC = "saturation-heuristic"

DEFAULT_CEILING = 40
BOX_LIMIT = 200_000


@dataclass(frozen=True)
class FinitenessVerdict:
    finite: bool
    g_value: int
    condition_x: bool | None
    reason: str

    def as_dict(self) -> dict:
        return {"finite": self.finite, "g": self.g_value, "conditionX": self.condition_x, "reason": self.reason}


@dataclass
class EnumerationResult:
    members: list[Multipartition]
    certificate: str
    bound_used: dict
    saturated: bool = True

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def max_member(self) -> Multipartition | None:
        return max(self.members, key=Multipartition.sort_key) if self.members else None


# --------------------------------------------------------------------------
# the decision procedure


def _check_levels(T: DatumSet) -> None:
    if len({d.level for d in T}) > 1:
        raise LevelMismatchError("all data must have the same level")


def g_of(T: DatumSet) -> int:
    """gcd of all moduli and all differences ``c_i - c_j - d_i + d_j`` over pairs of data."""
    _check_levels(T)
    values = [d.modulus for d in T]
    data = list(T)
    for t in data:
        for u in data:
            for i in range(t.level):
                for j in range(t.level):
                    values.append(t.charges[i] - t.charges[j] - u.charges[i] + u.charges[j])
    return reduce(gcd, values, 0)


def _extremal_status(T: DatumSet, pick) -> tuple[set[int], set[int]]:
    level = T.level or 0
    sometimes, always = set(), set(range(level))
    for d in T:
        best = pick(d.charges)
        hits = {k for k, c in enumerate(d.charges) if c == best}
        sometimes |= hits
        always &= hits
    return sometimes, always


def condition_x(T: DatumSet) -> bool:
    """Some component is sometimes but not always maximal, and some is sometimes but not always minimal."""
    _check_levels(T)
    if not len(T):
        return False
    smax, amax = _extremal_status(T, max)
    smin, amin = _extremal_status(T, min)
    return bool(smax - amax) and bool(smin - amin)


def decide_finite(T: DatumSet) -> FinitenessVerdict:
    _check_levels(T)
    if not len(T):
        return FinitenessVerdict(False, 0, None, "empty-T-infinite")
    g = g_of(T)
    if any(d.modulus == 1 for d in T):
        return FinitenessVerdict(True, g, None, "s-equals-1")
    if all(d.modulus == 0 for d in T):
        x = condition_x(T)
        if g != 1:
            return FinitenessVerdict(False, g, x, "g-not-1")
        if not x:
            return FinitenessVerdict(False, g, x, "x-fails")
        return FinitenessVerdict(True, g, x, "all-zero-finite")
    if g != 1:
        return FinitenessVerdict(False, g, None, "g-not-1")
    return FinitenessVerdict(True, g, None, "positive-modulus-finite")


# --------------------------------------------------------------------------
# pairwise constraints


@dataclass
class PairConstraints:
    """What the data force on components ``j < k``.

    ``derived`` holds ``(a, c_j, c_k)`` meaning ``(lam_j, lam_k)`` lies in
    ``C_(a|c_j,c_k)``; ``hook_bounds[a]`` bounds the number of a-hooks of both
    components.
    """

    pair: tuple[int, int]
    direct: list[tuple[int, int, int]] = field(default_factory=list)
    derived: list[tuple[int, int, int]] = field(default_factory=list)
    core_moduli: set[int] = field(default_factory=set)
    hook_bounds: dict[int, int] = field(default_factory=dict)

    def positive_constraints(self) -> list[tuple[int, int, int]]:
        seen = []
        for item in self.direct + self.derived:
            if item[0] >= 1 and item not in seen:
                seen.append(item)
        return seen


def _zero_representatives(d: Datum, j: int, k: int) -> list[tuple[int, int]]:
    """Charge pairs ``(c_j', c_k)`` whose (0|...)-core set contains the (s|...)-core set."""
    cj, ck = d.charges[j], d.charges[k]
    if d.modulus == 0:
        return [(cj, ck)]
    s = d.modulus
    r = (cj - ck) % s
    return [(ck + r, ck), (ck + r - s, ck)]


def pair_constraints(T: DatumSet) -> dict[tuple[int, int], PairConstraints]:
    _check_levels(T)
    level = T.level or 0
    out = {}
    for j, k in combinations(range(level), 2):
        pc = PairConstraints((j, k))
        for d in T:
            pc.direct.append((d.modulus, d.charges[j], d.charges[k]))
            if d.modulus >= 1:
                pc.core_moduli.add(d.modulus)
        reps = sorted({r for d in T for r in _zero_representatives(d, j, k)})
        for (aj, ak), (bj, bk) in combinations(reps, 2):
            da, db = aj - ak, bj - bk
            if da < 0 <= db:
                (aj, ak, da), (bj, bk, db) = (bj, bk, db), (aj, ak, da)
            if db < 0 <= da:
                a = da - db
                item = (a, aj, ak)
                if item not in pc.derived:
                    pc.derived.append(item)
                pc.core_moduli.add(a)
            elif da != db:
                a = abs(da - db)
                bound = min(abs(da), abs(db))
                pc.hook_bounds[a] = min(bound, pc.hook_bounds.get(a, bound))
        for a in pc.core_moduli:
            pc.hook_bounds[a] = 0
        out[(j, k)] = pc
    return out


def component_moduli(T: DatumSet, constraints=None) -> list[set[int]]:
    level = T.level or 0
    constraints = pair_constraints(T) if constraints is None else constraints
    moduli = [{d.modulus for d in T if d.modulus >= 1} for _ in range(level)]
    for (j, k), pc in constraints.items():
        moduli[j] |= pc.core_moduli
        moduli[k] |= pc.core_moduli
    return moduli


def component_hook_bounds(T: DatumSet, constraints=None) -> list[dict[int, int]]:
    level = T.level or 0
    constraints = pair_constraints(T) if constraints is None else constraints
    bounds: list[dict[int, int]] = [{} for _ in range(level)]
    for (j, k), pc in constraints.items():
        for a, b in pc.hook_bounds.items():
            for comp in (j, k):
                bounds[comp][a] = min(b, bounds[comp].get(a, b))
    for comp, mods in enumerate(component_moduli(T, constraints)):
        for a in mods:
            bounds[comp][a] = 0
    return bounds


def frobenius_number(values: Sequence[int]) -> int:
    """Largest integer that is not a non-negative combination of ``values``; -1 if there is none."""
    vals = sorted(set(v for v in values if v > 0))
    if not vals or reduce(gcd, vals) != 1:
        raise PreconditionError("values must be coprime positive integers")
    if vals[0] == 1:
        return -1
    limit = vals[0] * vals[-1]
    reachable = [False] * (limit + 1)
    reachable[0] = True
    for n in range(1, limit + 1):
        reachable[n] = any(n >= v and reachable[n - v] for v in vals)
    return max(n for n in range(limit + 1) if not reachable[n])


def removable_node_bound(hook_bounds: dict[int, int]) -> int | None:
    """Upper bound on the number of removable nodes, given bounds on a-hook counts."""
    if 1 in hook_bounds:
        return hook_bounds[1]
    hooks = [a for a in hook_bounds if a > 0]
    if not hooks or reduce(gcd, hooks) != 1:
        return None
    G = frobenius_number(hooks)
    S = sum(hook_bounds[a] for a in hooks)
    # N disjoint spans of length > G each produce a distinct hook in A, and
    # every G + 1 removable nodes yield one such span
    return (G + 1) * (S + 1) - 1


# --------------------------------------------------------------------------
# candidate generation


def _passes_moduli(p: Partition, moduli: set[int]) -> bool:
    return all(is_s_core(p, m) for m in moduli)


def _coprime_pair(moduli: set[int]) -> tuple[int, int] | None:
    ms = sorted(m for m in moduli if m >= 2)
    best = None
    for a, b in combinations(ms, 2):
        if gcd(a, b) == 1 and (best is None or a * b < best[0] * best[1]):
            best = (a, b)
    return best


def _box_candidates(rows: int, cols: int, moduli: set[int], hook_bounds: dict[int, int]) -> list[Partition] | None:
    rows, cols = max(rows, 0), max(cols, 0)
    core_mods = sorted(m for m in moduli if m >= 2)
    if core_mods:
        m = core_mods[-1]
        pool = s_cores_from_s_sets(m, -cols, rows - 1 + m)
    else:
        if comb(rows + cols, rows) > BOX_LIMIT:
            return None
        pool = _partitions_in_box(rows, cols)
    out = []
    for p in pool:
        if p[1] <= rows and len(p) <= cols and _passes_moduli(p, moduli):
            if all(hook_count(p, a) <= b for a, b in hook_bounds.items()):
                out.append(p)
    return sorted(set(out))


def _partitions_in_box(rows: int, cols: int):
    def rec(remaining_rows: int, cap: int):
        if remaining_rows == 0:
            yield ()
            return
        for first in range(cap, -1, -1):
            if first == 0:
                yield ()
                continue
            for rest in rec(remaining_rows - 1, first):
                yield (first,) + rest

    for parts in rec(cols, rows):
        yield Partition(parts)


def _pair_ok(T: DatumSet, chosen: dict[int, Partition], k: int, q: Partition) -> bool:
    for j, p in chosen.items():
        for d in T:
            if d.modulus == 0 or d.modulus >= 2:
                a, b = (j, k) if j < k else (k, j)
                pa, pb = (p, q) if j < k else (q, p)
                if not is_core_bipartition(pa, pb, d.modulus, d.charges[a], d.charges[b]):
                    return False
    return True


def _combine(
    T: DatumSet,
    cands: list[list[Partition]],
    max_size: int | None,
    constraints: dict[tuple[int, int], PairConstraints] | None = None,
) -> list[Multipartition]:
    """Every multipartition drawn from the candidate lists that lies in ``C_T``."""
    level = len(cands)
    constraints = pair_constraints(T) if constraints is None else constraints
    links: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for (j, k), pc in constraints.items():
        pos = [item for item in pc.positive_constraints() if item[0] >= 2]
        links[(j, k)] = pos
        links[(k, j)] = [(a, ck, cj) for a, cj, ck in pos]
    order = sorted(range(level), key=lambda k: len(cands[k]))
    cand_sets = [set(c) for c in cands]
    out = []
    chosen: dict[int, Partition] = {}

    def options(k: int):
        for j, p in chosen.items():
            if links[(j, k)]:
                a, cj, ck = links[(j, k)][0]
                return [q for q in sandwich_partners(p, a, cj, ck) if q in cand_sets[k]]
        return cands[k]

    def rec(pos: int, budget: int | None):
        if pos == level:
            m = Multipartition(tuple(chosen[k] for k in range(level)))
            assert is_simultaneous_core(m, T)
            out.append(m)
            return
        k = order[pos]
        for q in options(k):
            if budget is not None and q.size > budget:
                continue
            if _pair_ok(T, chosen, k, q):
                chosen[k] = q
                rec(pos + 1, None if budget is None else budget - q.size)
                del chosen[k]

    rec(0, max_size)
    return sorted(out, key=Multipartition.sort_key)


def _component_filter(T: DatumSet, p: Partition) -> bool:
    return all(is_s_core(p, d.modulus) for d in T if d.modulus != 0)


def _bounded_candidates(T: DatumSet, max_size: int, moduli: list[set[int]]) -> list[list[Partition]]:
    out = []
    for mods in moduli:
        if 1 in mods:
            out.append([EMPTY])
            continue
        core_mods = sorted(m for m in mods if m >= 2)
        pool = s_cores_up_to(core_mods[0], max_size) if core_mods else partitions_up_to(max_size)
        out.append([p for p in pool if _passes_moduli(p, mods)])
    return out


def _bounded(T: DatumSet, max_size: int) -> list[Multipartition]:
    moduli = component_moduli(T)
    cands = _bounded_candidates(T, max_size, moduli)
    return _combine(T, cands, max_size)


def _certify_candidates(T: DatumSet) -> tuple[list[list[Partition] | None], dict]:
    level = T.level
    constraints = pair_constraints(T)
    moduli = component_moduli(T, constraints)
    hooks = component_hook_bounds(T, constraints)
    for mods, bounds in zip(moduli, hooks):
        mods |= {a for a, b in bounds.items() if b == 0}
    cands: list[list[Partition] | None] = [None] * level
    notes: dict = {}

    for k in range(level):
        if 1 in moduli[k]:
            cands[k] = [EMPTY]
            notes[k] = {"source": "one-core"}
            continue
        pair = _coprime_pair(moduli[k])
        if pair:
            cands[k] = [p for p in st_cores(*pair) if _passes_moduli(p, moduli[k])]
            notes[k] = {"source": "coprime-cores", "moduli": list(pair)}

    def filtered(k: int, pool) -> list[Partition]:
        return sorted({p for p in pool if _passes_moduli(p, moduli[k])
                       and all(hook_count(p, a) <= b for a, b in hooks[k].items())})

    changed = True
    while changed and any(c is None for c in cands):
        changed = False
        # sandwich propagation along positive-modulus pair constraints
        for (j, k), pc in sorted(constraints.items()):
            for a, cj, ck in pc.positive_constraints():
                for src, dst, csrc, cdst in ((j, k, cj, ck), (k, j, ck, cj)):
                    if cands[src] is not None and cands[dst] is None:
                        pool = set()
                        for p in cands[src]:
                            pool.update(sandwich_partners_safe(p, a, csrc, cdst))
                        cands[dst] = filtered(dst, pool)
                        notes[dst] = {"source": "sandwich", "from": src, "modulus": a}
                        changed = True
        if changed:
            continue
        # first row / first column bounds from a bounded partner, then a box
        for k in range(level):
            if cands[k] is not None:
                continue
            rows, cols = _row_col_bounds(T, cands, k)
            b = removable_node_bound(hooks[k])
            core_mods = [m for m in moduli[k] if m >= 2]
            if b is not None and core_mods:
                m = min(core_mods)
                rows = min(rows, (m - 1) * b) if rows is not None else (m - 1) * b
                cols = min(cols, (m - 1) * b) if cols is not None else (m - 1) * b
            if rows is None or cols is None:
                continue
            box = _box_candidates(rows, cols, moduli[k], hooks[k])
            if box is None:
                continue
            cands[k] = box
            notes[k] = {"source": "box", "rows": rows, "cols": cols}
            changed = True
            break
    return cands, notes


def sandwich_partners_safe(p: Partition, a: int, c: int, d: int) -> list[Partition]:
    if a == 1:
        return [EMPTY] if not p else []
    if not is_s_core(p, a):
        return []
    return sandwich_partners(p, a, c, d)


def _row_col_bounds(T: DatumSet, cands, k: int) -> tuple[int | None, int | None]:
    rows = cols = None
    for j, cj in enumerate(cands):
        if j == k or cj is None:
            continue
        row_j = max((p[1] for p in cj), default=0)
        len_j = max((len(p) for p in cj), default=0)
        for d in T:
            gap = d.charges[j] - d.charges[k]
            if d.modulus:
                row_gap = gap % d.modulus
                col_gap = (-gap) % d.modulus
            else:
                row_gap = gap if gap >= 0 else None
                col_gap = -gap if gap <= 0 else None
            if row_gap is not None:
                r = row_j + row_gap
                rows = r if rows is None else min(rows, r)
            if col_gap is not None:
                c = len_j + col_gap
                cols = c if cols is None else min(cols, c)
    return rows, cols


def enumerate_members(
    T: DatumSet,
    max_size: int = 12,
    mode: str = "bounded",
    ceiling: int = DEFAULT_CEILING,
) -> EnumerationResult:
    """Members of ``C_T``.

    ``bounded`` returns exactly the members of size at most ``max_size``.
    ``complete`` returns all members; the certificate says whether
    completeness was proved or only observed up to a size ceiling.
    """
    _check_levels(T)
    if not len(T):
        if mode == "complete":
            raise InfiniteSetError("C_T is every multipartition when T is empty")
        raise PreconditionError("an empty datum set has no level")
    if mode == "bounded":
        if max_size < 0:
            raise PreconditionError("max_size must be non-negative")
        return EnumerationResult(_bounded(T, max_size), CERTIFIED, {"max_size": max_size})
    if mode != "complete":
        raise PreconditionError(f"unknown mode {mode!r}")

    verdict = decide_finite(T)
    if not verdict.finite:
        raise InfiniteSetError(f"C_T is infinite ({verdict.reason}, g = {verdict.g_value})")
    level = T.level
    if verdict.reason == "s-equals-1":
        return EnumerationResult([Multipartition.empty(level)], CERTIFIED, {"components": "s = 1 forces the empty multipartition"})

    cands, notes = _certify_candidates(T)
    if all(c is not None for c in cands):
        members = _combine(T, cands, None)
        return EnumerationResult(members, CERTIFIED, {"components": {str(k): notes[k] for k in sorted(notes)}})

    log.info("could not certify components %s; falling back to size ceilings", [k for k, c in enumerate(cands) if c is None])
    size = 8
    while True:
        members = _bounded(T, size)
        largest = max((m.size for m in members), default=0)
        if largest + 2 <= size and size >= 8:
            return EnumerationResult(members, HEURISTIC, {"size_ceiling": size}, saturated=True)
        if size >= ceiling:
            log.warning("no saturation below ceiling %d", ceiling)
            return EnumerationResult(members, HEURISTIC, {"size_ceiling": size}, saturated=False)
        size = min(ceiling, size * 2)
