"""Affine symmetric group action on multipartitions and orbit generation.

The generator ``s_i`` adds every addable node of residue ``i`` and removes
every removable one.  On a shifted beta-set this is the permutation of the
integers swapping ``n - 1`` and ``n`` for each ``n`` in the class ``i``,
which is how it is computed here.
"""

from __future__ import annotations

from collections import deque

from .errors import PreconditionError
from .multicore import Datum, Multipartition
from .partitions import BetaSpec, Partition, ResidueClass, beta_set, normalize_beta, residue


def _swap(n: int, i: int, s: int) -> int:
    if residue(n, s) == i:
        return n - 1
    if residue(n + 1, s) == i:
        return n + 1
    return n


def act_on_partition(p: Partition, charge: int, i: int, s: int) -> Partition:
    B = beta_set(p, charge)
    lo = B.threshold - 2
    hi = B.maximum + 2
    members = frozenset(n for n in range(lo, hi + 1) if _swap(n, i, s) in B)
    q, shift = normalize_beta(BetaSpec(lo, members))
    assert shift == charge
    return q


def act_generator(m: Multipartition, d: Datum, i: ResidueClass | int) -> Multipartition:
    s = d.modulus
    if s == 1:
        raise PreconditionError("no generator action for s = 1")
    if isinstance(i, ResidueClass):
        if i.modulus != s:
            raise PreconditionError("generator class must use the datum's modulus")
        i = i.value
    i = residue(i, s)
    if m.level != d.level:
        raise PreconditionError("level mismatch")
    return Multipartition(tuple(act_on_partition(p, c, i, s) for p, c in zip(m, d.charges)))


def generator_indices(d: Datum, max_size: int) -> list[int]:
    if d.modulus:
        return list(range(d.modulus))
    return list(range(min(d.charges) - max_size - 1, max(d.charges) + max_size + 2))


def orbit_buffer(d: Datum) -> int:
    return d.modulus if d.modulus else 2 * max(d.level, 1)


def orbit_members(d: Datum, max_size: int) -> list[Multipartition]:
    """Cores of ``d`` with size at most ``max_size``, by breadth-first search from the empty multipartition."""
    if d.modulus == 1:
        raise PreconditionError("s = 1 has no orbit structure; C_(1|c) is just the empty multipartition")
    if max_size < 0:
        raise PreconditionError("max_size must be non-negative")
    limit = max_size + orbit_buffer(d)
    gens = generator_indices(d, limit)
    start = Multipartition.empty(d.level)
    seen = {start}
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for i in gens:
            nxt = act_generator(m, d, i)
            if nxt.size <= limit and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted((m for m in seen if m.size <= max_size), key=Multipartition.sort_key)


def s_cores_up_to(s: int, max_size: int) -> list[Partition]:
    """All s-cores of size at most ``max_size`` (``s >= 2``)."""
    return [m[0] for m in orbit_members(Datum(s, (0,)), max_size)]
