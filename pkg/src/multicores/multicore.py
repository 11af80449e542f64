"""Multipartitions, multipartition data and (s|c)-core tests."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import LevelMismatchError, ParseError, PreconditionError, SizeGuardError
from .partitions import (
    EMPTY,
    BetaSpec,
    Content,
    Partition,
    beta_set,
    beta_superset,
    format_partition,
    is_s_core,
    normalize_beta,
    parse_partition,
    partitions_of,
)

BRUTE_FORCE_MAX_SIZE = 10
BRUTE_FORCE_MAX_LEVEL = 3


@dataclass(frozen=True)
class Multipartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Partition) else Partition(tuple(c)) for c in self.components)
        if not comps:
            raise PreconditionError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *components: Sequence[int] | Partition) -> Multipartition:
        return cls(tuple(c if isinstance(c, Partition) else Partition(tuple(c)) for c in components))

    @classmethod
    def empty(cls, level: int) -> Multipartition:
        return cls((EMPTY,) * level)

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def __getitem__(self, k: int) -> Partition:
        return self.components[k]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def sort_key(self) -> tuple:
        return (self.size, tuple(c.parts for c in self.components))

    def __lt__(self, other: Multipartition) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_multipartition(self)

    def nodes(self) -> Iterator[tuple[int, int, int]]:
        for k, comp in enumerate(self.components):
            for a, b in comp.nodes():
                yield a, b, k


@dataclass(frozen=True)
class Datum:
    """A multipartition datum ``(s | c_1, ..., c_l)``."""

    modulus: int
    charges: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 0:
            raise PreconditionError("modulus must be non-negative")
        charges = tuple(int(c) for c in self.charges)
        if not charges:
            raise PreconditionError("a datum needs at least one charge")
        object.__setattr__(self, "charges", charges)

    @property
    def level(self) -> int:
        return len(self.charges)

    def __str__(self) -> str:
        return format_datum(self)


@dataclass(frozen=True)
class DatumSet:
    data: tuple[Datum, ...] = ()

    def __post_init__(self):
        data = tuple(self.data)
        if len({d.level for d in data}) > 1:
            raise LevelMismatchError("all data in a set must have the same level")
        object.__setattr__(self, "data", data)

    @property
    def level(self) -> int | None:
        return self.data[0].level if self.data else None

    def __iter__(self) -> Iterator[Datum]:
        return iter(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def __str__(self) -> str:
        return format_datum_set(self)


# --------------------------------------------------------------------------
# text forms


def parse_multipartition(text: str) -> Multipartition:
    return Multipartition(tuple(parse_partition(chunk) for chunk in text.split("|")))


def format_multipartition(m: Multipartition) -> str:
    return "|".join(format_partition(c) for c in m.components)


def parse_datum(text: str) -> Datum:
    head, sep, tail = text.strip().partition(":")
    if not sep:
        raise ParseError(f"datum must look like 's:c1,c2,...': {text!r}")
    try:
        s = int(head)
        charges = tuple(int(x) for x in tail.split(","))
    except ValueError:
        raise ParseError(f"bad datum literal: {text!r}") from None
    if s < 0:
        raise ParseError(f"modulus must be non-negative: {text!r}")
    return Datum(s, charges)


def format_datum(d: Datum) -> str:
    return f"{d.modulus}:" + ",".join(map(str, d.charges))


def parse_datum_set(text: str) -> DatumSet:
    chunks = [c for c in text.split(";") if c.strip()]
    try:
        return DatumSet(tuple(parse_datum(c) for c in chunks))
    except LevelMismatchError as exc:
        raise ParseError(str(exc)) from None


def format_datum_set(T: DatumSet) -> str:
    return ";".join(format_datum(d) for d in T.data)


def _check_level(m: Multipartition, d: Datum) -> None:
    if m.level != d.level:
        raise LevelMismatchError(f"level mismatch: multipartition has {m.level} components, datum {d.level}")


# --------------------------------------------------------------------------
# contents and weight


def mp_content(m: Multipartition, d: Datum) -> Content:
    _check_level(m, d)
    s = d.modulus
    return Content.from_residues(s, (b - a + d.charges[k] for a, b, k in m.nodes()))


def weight(m: Multipartition, d: Datum) -> int:
    _check_level(m, d)
    s = d.modulus
    n = mp_content(m, d)
    total = sum(n[c] for c in d.charges)
    if s > 0:
        classes: Iterable[int] = range(s)
    elif n.counts:
        classes = range(min(n.counts) - 1, max(n.counts) + 2)
    else:
        classes = ()
    squares = sum((n[i] - n[i + 1]) ** 2 for i in classes)
    assert squares % 2 == 0
    w = total - squares // 2
    assert w >= 0, "weight is non-negative"
    return w


# --------------------------------------------------------------------------
# core tests


def is_core_bipartition(p: Partition, q: Partition, s: int, c: int, d: int) -> bool:
    """Beta-set sandwich test for ``(p, q)`` in ``C_(s|c,d)``."""
    if s < 0:
        raise PreconditionError("modulus must be non-negative")
    if s == 0:
        if c <= d and not beta_superset(beta_set(q, d), beta_set(p, c)):
            return False
        if c >= d and not beta_superset(beta_set(p, c), beta_set(q, d)):
            return False
        return True
    if s == 1:
        return not p and not q
    e = (c - d) % s
    Bq = beta_set(q)
    return beta_superset(beta_set(p, e), Bq) and beta_superset(Bq, beta_set(p, e - s))


def is_core(m: Multipartition, d: Datum) -> bool:
    _check_level(m, d)
    s = d.modulus
    if s == 1:
        return m.size == 0
    if not all(is_s_core(comp, s) for comp in m.components):
        return False
    return all(
        is_core_bipartition(m[j], m[k], s, d.charges[j], d.charges[k])
        for j, k in combinations(range(m.level), 2)
    )


def is_simultaneous_core(m: Multipartition, T: DatumSet) -> bool:
    return all(is_core(m, d) for d in T)


def multipartitions_of(n: int, level: int) -> Iterator[Multipartition]:
    """All multipartitions of size ``n`` with ``level`` components."""
    for sizes in _compositions(n, level):
        for comps in product(*(partitions_of(k) for k in sizes)):
            yield Multipartition(comps)


def multipartitions_up_to(n: int, level: int) -> Iterator[Multipartition]:
    for k in range(n + 1):
        yield from multipartitions_of(k, level)


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=4096)
def _content_census(n: int, d: Datum) -> Counter:
    return Counter(mp_content(m, d) for m in multipartitions_of(n, d.level))


def is_core_bruteforce(
    m: Multipartition,
    d: Datum,
    max_size: int = BRUTE_FORCE_MAX_SIZE,
    max_level: int = BRUTE_FORCE_MAX_LEVEL,
) -> bool:
    """Definition check: no other multipartition shares the (s|c)-content."""
    _check_level(m, d)
    if m.size > max_size or m.level > max_level:
        raise SizeGuardError(f"brute force limited to size <= {max_size}, level <= {max_level}")
    if d.modulus == 1:
        return m.size == 0
    return _content_census(m.size, d)[mp_content(m, d)] == 1


def sandwich_partners(p: Partition, s: int, c: int, d: int) -> list[Partition]:
    """All ``q`` with ``(p, q)`` in ``C_(s|c,d)``, sorted."""
    if s < 1:
        raise PreconditionError("partners are only finite for s >= 1")
    if not is_s_core(p, s):
        raise PreconditionError(f"{format_partition(p)} is not a {s}-core")
    e = (c - d) % s
    lower = beta_set(p, e - s)
    upper = beta_set(p, e)
    base = frozenset(lower.top)
    gap = [n for n in upper.top if n not in lower]
    gap += [n for n in range(lower.threshold, upper.threshold) if n not in lower]
    assert len(gap) == s
    out = []
    for chosen in combinations(sorted(gap), s - e):
        q, shift = normalize_beta(BetaSpec(lower.threshold, base | frozenset(chosen)))
        assert shift == 0
        out.append(q)
    return sorted(out)
