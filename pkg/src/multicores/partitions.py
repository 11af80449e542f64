"""Partitions, beta-sets, residues and s-sets.

A partition is stored as a tuple of positive parts.  Shifted beta-sets are
never materialised: ``beta_c(p) = {p_a - a + c : a >= 1}`` is described by
its finitely many "top" elements together with a threshold below which every
integer is a member.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping

from .errors import ParseError, PreconditionError


def residue(n: int, s: int) -> int:
    """Normalise ``n`` modulo ``s``; modulus 0 means ordinary integers."""
    return n % s if s else n


@dataclass(frozen=True, order=True)
class ResidueClass:
    modulus: int
    value: int

    def __post_init__(self):
        if self.modulus < 0:
            raise PreconditionError("modulus must be non-negative")
        object.__setattr__(self, "value", residue(self.value, self.modulus))

    def __contains__(self, n: int) -> bool:
        return residue(n, self.modulus) == self.value


@dataclass(frozen=True, eq=False)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Partitions sort by size first and then lexicographically by parts.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise PreconditionError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PreconditionError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, a: int) -> int:
        """1-indexed part access with ``p[a] == 0`` beyond the length."""
        return self.parts[a - 1] if 1 <= a <= len(self.parts) else 0

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def sort_key(self) -> tuple:
        return (self.size, self.parts)

    def __lt__(self, other: Partition) -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: Partition) -> bool:
        return self.sort_key() <= other.sort_key()

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return format_partition(self)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x >= j) for j in range(1, self.parts[0] + 1)))

    def nodes(self) -> Iterator[tuple[int, int]]:
        for a, row in enumerate(self.parts, start=1):
            for b in range(1, row + 1):
                yield a, b


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse ``[6,4,2,1,1]``; the empty partition is ``[]``."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError(f"partition must be bracketed: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return EMPTY
    try:
        parts = tuple(int(x) for x in body.split(","))
    except ValueError:
        raise ParseError(f"bad partition literal: {text!r}") from None
    try:
        return Partition(parts)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def format_partition(p: Partition) -> str:
    return "[" + ",".join(map(str, p.parts)) + "]"


@lru_cache(maxsize=None)
def _partitions_of(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographic order."""
    return sorted(Partition(p) for p in _partitions_of(n, n))


def partitions_up_to(n: int) -> list[Partition]:
    return [p for k in range(n + 1) for p in partitions_of(k)]


# --------------------------------------------------------------------------
# hooks, residues, contents


def hook_lengths(p: Partition) -> list[int]:
    """Hook lengths read directly off the Young diagram."""
    conj = p.conjugate()
    return [p[a] - b + conj[b] - a + 1 for a, b in p.nodes()]


@dataclass(frozen=True)
class Content:
    """Multiset of residues, all taken modulo ``modulus``."""

    modulus: int
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {r: m for r, m in sorted(self.counts.items()) if m}
        if any(m < 0 for m in clean.values()):
            raise PreconditionError("multiplicities must be non-negative")
        object.__setattr__(self, "counts", clean)

    def __getitem__(self, r: int) -> int:
        return self.counts.get(residue(r, self.modulus), 0)

    def __eq__(self, other):
        return isinstance(other, Content) and self.modulus == other.modulus and self.counts == other.counts

    def __hash__(self):
        return hash((self.modulus, tuple(self.counts.items())))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @classmethod
    def from_residues(cls, modulus: int, residues: Iterable[int]) -> Content:
        return cls(modulus, Counter(residue(r, modulus) for r in residues))


def content(p: Partition, s: int, shift: int = 0) -> Content:
    if s < 0:
        raise PreconditionError("modulus must be non-negative")
    return Content.from_residues(s, (b - a + shift for a, b in p.nodes()))


# --------------------------------------------------------------------------
# beta-sets


@lru_cache(maxsize=1 << 16)
def _beta_top(parts: tuple[int, ...]) -> tuple[int, ...]:
    # strictly decreasing p_a - a for a = 1..len(p)
    return tuple(x - a for a, x in enumerate(parts, start=1))


@lru_cache(maxsize=1 << 16)
def _beta_topset(parts: tuple[int, ...]) -> frozenset[int]:
    return frozenset(_beta_top(parts))


@dataclass(frozen=True)
class ShiftedBetaSet:
    """The set ``{p_a - a + shift : a >= 1}``."""

    partition: Partition
    shift: int = 0

    @property
    def threshold(self) -> int:
        """Every integer below this is a member; the threshold itself is not."""
        return self.shift - len(self.partition)

    @property
    def top(self) -> tuple[int, ...]:
        """Members at or above the threshold, in decreasing order."""
        c = self.shift
        return tuple(x + c for x in _beta_top(self.partition.parts))

    @property
    def maximum(self) -> int:
        top = self.top
        return top[0] if top else self.threshold - 1

    def __contains__(self, n: int) -> bool:
        return beta_contains(self, n)

    def members_between(self, lo: int, hi: int) -> list[int]:
        return [n for n in range(lo, hi + 1) if n in self]

    def charge(self) -> int:
        """Non-negative members minus negative non-members."""
        lo = min(self.threshold, 0)
        hi = max(self.maximum, -1)
        pos = sum(1 for n in range(0, hi + 1) if n in self)
        neg_gaps = sum(1 for n in range(lo, 0) if n not in self)
        return pos - neg_gaps

    def translate(self, k: int) -> ShiftedBetaSet:
        return ShiftedBetaSet(self.partition, self.shift + k)


def beta_set(p: Partition, shift: int = 0) -> ShiftedBetaSet:
    return ShiftedBetaSet(p, shift)


def beta_contains(B: ShiftedBetaSet, n: int) -> bool:
    if n < B.threshold:
        return True
    return (n - B.shift) in _beta_topset(B.partition.parts)


def beta_superset(B1: ShiftedBetaSet, B2: ShiftedBetaSet) -> bool:
    """Whether ``B1`` contains every member of ``B2``."""
    if B1.shift < B2.shift:
        return False
    tops1 = _beta_topset(B1.partition.parts)
    c1 = B1.shift
    t1 = B1.threshold
    for n in B2.top:
        if n >= t1 and (n - c1) not in tops1:
            return False
    # members of B2 below its own threshold that B1 does not get for free
    for n in range(t1, B2.threshold):
        if (n - c1) not in tops1:
            return False
    return True


def beta_difference_count(B1: ShiftedBetaSet, B2: ShiftedBetaSet) -> tuple[int, int]:
    """``(|B1 - B2|, |B2 - B1|)``; both are finite."""
    lo = min(B1.threshold, B2.threshold)
    hi = max(B1.maximum, B2.maximum)
    only1 = only2 = 0
    for n in range(lo, hi + 1):
        in1, in2 = n in B1, n in B2
        only1 += in1 and not in2
        only2 += in2 and not in1
    return only1, only2


@dataclass(frozen=True)
class BetaSpec:
    """The set ``{n : n < threshold} | exceptional``."""

    threshold: int
    exceptional: frozenset[int] = frozenset()

    def __post_init__(self):
        exc = frozenset(self.exceptional)
        if any(n < self.threshold for n in exc):
            # members below the threshold are implied; drop them
            exc = frozenset(n for n in exc if n >= self.threshold)
        object.__setattr__(self, "exceptional", exc)

    def __contains__(self, n: int) -> bool:
        return n < self.threshold or n in self.exceptional


def normalize_beta(spec: BetaSpec) -> tuple[Partition, int]:
    """The unique ``(p, c)`` with ``beta_c(p)`` equal to the denoted set."""
    top = sorted(spec.exceptional, reverse=True)
    k = len(top)
    c = spec.threshold + k
    parts = tuple(b + a - c for a, b in enumerate(top, start=1))
    return Partition(parts), c


def beta_spec_of(B: ShiftedBetaSet) -> BetaSpec:
    return BetaSpec(B.threshold, frozenset(B.top))


# --------------------------------------------------------------------------
# hooks and cores via beta-sets


def hook_count(p: Partition, a: int) -> int:
    """Number of hooks of length ``a`` in ``p``."""
    if a < 1:
        raise PreconditionError("hook length must be positive")
    B = beta_set(p)
    return sum(1 for b in B.top if (b - a) not in B)


def is_s_core(p: Partition, s: int) -> bool:
    if s < 0:
        raise PreconditionError("modulus must be non-negative")
    if s == 0:
        return True
    if s == 1:
        return not p
    return hook_count(p, s) == 0


# --------------------------------------------------------------------------
# s-sets


@dataclass(frozen=True)
class SSet:
    """One integer per class of Z/sZ; ``representatives[i]`` lies in class i."""

    modulus: int
    representatives: tuple[int, ...]

    def __post_init__(self):
        s = self.modulus
        reps = tuple(self.representatives)
        if s < 1 or len(reps) != s:
            raise PreconditionError("an s-set needs exactly s representatives")
        if any(x % s != i for i, x in enumerate(reps)):
            raise PreconditionError("representatives must be indexed by their residue class")
        if sum(reps) != s * (s - 1) // 2:
            raise PreconditionError("s-set must sum to s(s-1)/2")
        object.__setattr__(self, "representatives", reps)

    def __getitem__(self, i: int) -> int:
        return self.representatives[i % self.modulus]

    def as_set(self) -> frozenset[int]:
        return frozenset(self.representatives)

    @classmethod
    def from_values(cls, s: int, values: Iterable[int]) -> SSet:
        reps = [None] * s
        for x in values:
            if reps[x % s] is not None:
                raise PreconditionError("values must be pairwise incongruent")
            reps[x % s] = x
        if any(x is None for x in reps):
            raise PreconditionError("an s-set needs one value in every class")
        return cls(s, tuple(reps))


def s_set(p: Partition, s: int) -> SSet:
    """Least non-member of ``beta(p)`` in each class mod ``s``."""
    if s < 1:
        raise PreconditionError("s-sets need s >= 1")
    if not is_s_core(p, s):
        raise PreconditionError(f"{format_partition(p)} is not a {s}-core")
    B = beta_set(p)
    reps: list[int | None] = [None] * s
    n = B.threshold
    missing = s
    while missing:
        if n not in B and reps[n % s] is None:
            reps[n % s] = n
            missing -= 1
        n += 1
    return SSet(s, tuple(reps))


def s_core_from_s_set(x: SSet) -> Partition:
    s = x.modulus
    lo = min(x.representatives)
    hi = max(x.representatives)
    members = frozenset(n for n in range(lo, hi) if n < x[n % s])
    p, c = normalize_beta(BetaSpec(lo, members))
    assert c == 0, "s-set sum invariant forces charge 0"
    return p


def s_cores_from_s_sets(s: int, lo: int, hi: int) -> Iterator[Partition]:
    """Every s-core whose s-set lies in ``[lo, hi]``."""
    ranges = [range(i + s * -(-(lo - i) // s), hi + 1, s) for i in range(s)]
    target = s * (s - 1) // 2
    for reps in product(*ranges):
        if sum(reps) == target:
            yield s_core_from_s_set(SSet(s, reps))
