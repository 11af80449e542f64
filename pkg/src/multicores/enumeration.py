"""Closed-form counts, bijections and path codecs for simultaneous core bipartitions.

Three families of bipartition sets are covered, written with ``C(s|0,a)`` for
the set of ``(s|0,a)``-cores:

* ``ss``: ``C(s|0,a) & C(t|0,b)`` restricted to pairs of g-cores,
  ``g = gcd(s, t)``, counted through tuples in ``U_g^{s,a}``;
* ``t0``: ``C(s|0,a) & C(0|0,b)``;
* ``aa``: ``C(s|0,a) & C(t|0,a)`` with ``s, t`` coprime, encoded by cyclic
  words in the letters B, D, R.

Everything is exact: integer counts use Python big integers and averages are
``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Iterable, Iterator, Sequence

from .errors import PreconditionError
from .multicore import Multipartition, is_core_bipartition
from .partitions import (
    BetaSpec,
    Partition,
    SSet,
    beta_set,
    is_s_core,
    normalize_beta,
    s_core_from_s_set,
    s_set,
)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


# --------------------------------------------------------------------------
# tuples over Z/gZ


@dataclass(frozen=True)
class UTuple:
    """A tuple ``(u_i)`` indexed by the classes ``i`` of Z/gZ."""

    g: int
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if self.g < 1 or len(entries) != self.g:
            raise PreconditionError("a Z/gZ-tuple needs exactly g entries")
        object.__setattr__(self, "entries", entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i % self.g]

    def shifted(self, c: int) -> UTuple:
        """The tuple ``u(+c)`` with ``u(+c)_i = u_(i+c)``."""
        return UTuple(self.g, tuple(self[i + c] for i in range(self.g)))

    def rotations(self) -> set[UTuple]:
        return {self.shifted(c) for c in range(self.g)}

    def in_u_set(self, s: int, a: int) -> bool:
        return sum(self.entries) == a and all(0 <= x <= s // self.g for x in self.entries)


def u_tuples(g: int, s: int, a: int) -> Iterator[UTuple]:
    """Every element of ``U_g^{s,a}``, lexicographically."""
    if g < 1 or s % g:
        raise PreconditionError("need g >= 1 dividing s")
    cap = s // g

    def rec(k: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if k == 1:
            if 0 <= remaining <= cap:
                yield (remaining,)
            return
        for x in range(min(cap, remaining) + 1):
            for rest in rec(k - 1, remaining - x):
                yield (x,) + rest

    for entries in rec(g, a):
        yield UTuple(g, entries)


def count_u(g: int, s: int, a: int) -> int:
    """``|U_g^{s,a}|`` by inclusion-exclusion over entries exceeding ``s/g``."""
    if g < 1 or s < 0 or s % g:
        raise PreconditionError("need g >= 1 dividing s")
    if a < 0:
        return 0
    cap = s // g
    return sum((-1) ** d * binom(g, d) * binom(a + g - 1 - d * (1 + cap), g - 1) for d in range(g + 1))


# --------------------------------------------------------------------------
# counts


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError(message)


def count_ss(s: int, t: int, a: int, b: int) -> int:
    """Number of g-core bipartitions in ``C(s|0,a) & C(t|0,b)``.

    When ``s`` divides ``t`` the g-core restriction is automatic and this is
    the size of the whole intersection.
    """
    _require(s >= 1 and t >= 1, "need s, t >= 1")
    _require(0 <= a < s and 0 <= b < t, "need 0 <= a < s and 0 <= b < t")
    g = gcd(s, t)
    _require(gcd(g, a - b) == 1, f"need gcd(g, a - b) = 1 with g = {g}")
    num = count_u(g, s, a) * count_u(g, t, b)
    assert num % g == 0
    return num // g


def count_t0(s: int, a: int, b: int) -> int:
    """``|C(s|0,a) & C(0|0,b)|``."""
    _require(s >= 1, "need s >= 1")
    _require(0 <= a < s and b >= 0, "need 0 <= a < s and b >= 0")
    _require(gcd(s, a - b) == 1, "need gcd(s, a - b) = 1")
    num = binom(s, a) * binom(b + s - 1, s - 1)
    assert num % s == 0
    return num // s


def count_aa(s: int, t: int, a: int) -> int:
    """``|C(s|0,a) & C(t|0,a)|`` for coprime ``s <= t``."""
    _require(0 <= a < s <= t, "need 0 <= a < s <= t")
    _require(gcd(s, t) == 1, "need s and t coprime")
    num = factorial(s + t - a - 1)
    den = factorial(a) * factorial(s - a) * factorial(t - a)
    assert num % den == 0
    return num // den


def count_anderson(s: int, t: int) -> int:
    """Number of (s,t)-cores for coprime ``s, t``: the rational Catalan number."""
    _require(s >= 1 and t >= 1 and gcd(s, t) == 1, "need coprime s, t >= 1")
    return comb(s + t, s) // (s + t)


# --------------------------------------------------------------------------
# the sigma/tau maps and their inverse


def sigma_tau(p: Partition, q: Partition, s: int, a: int, g: int) -> UTuple:
    """``u_i = (d_i(q) + a - d_(i+a)(p)) / g`` over the g-sets of ``p`` and ``q``."""
    _require(g >= 1 and s % g == 0, "need g dividing s")
    _require(0 <= a < s, "need 0 <= a < s")
    if not (is_s_core(p, g) and is_s_core(q, g)):
        raise PreconditionError("both components must be g-cores")
    if not is_core_bipartition(p, q, s, 0, a):
        raise PreconditionError(f"bipartition is not a ({s}|0,{a})-core")
    xp, xq = s_set(p, g), s_set(q, g)
    entries = []
    for i in range(g):
        diff = xq[i] + a - xp[i + a]
        assert diff % g == 0
        entries.append(diff // g)
    u = UTuple(g, tuple(entries))
    assert u.in_u_set(s, a)
    return u


def from_tuples(u: UTuple, v: UTuple, s: int, t: int, a: int, b: int) -> tuple[Partition, Partition, int]:
    """The bipartition ``(lam, mu)`` and shift ``c`` with ``sigma = u(+c)``, ``tau = v(+c)``."""
    g = gcd(s, t)
    _require(u.g == g and v.g == g, "tuples must be indexed by Z/gZ, g = gcd(s, t)")
    _require(u.in_u_set(s, a) and v.in_u_set(t, b), "tuples must lie in U_g^{s,a} and U_g^{t,b}")
    _require(gcd(g, a - b) == 1, "need gcd(g, a - b) = 1")
    step = b - a
    # solve y_i = x_(i+a) - a + g u_i = x_(i+b) - b + g v_i along the orbit of b - a
    x: dict[int, int] = {}
    y: dict[int, int] = {}
    value = 0
    for d in range(g):
        j = d * step
        x[j % g] = value
        y[(j - a) % g] = value - a + g * u[j - a]
        value += step + g * (u[j - a] - v[j - a])
    assert value == 0, "sum u = a and sum v = b close the cycle"
    defect = g * (g - 1) // 2 - sum(x.values())
    assert defect % g == 0
    k = defect // g
    lam = s_core_from_s_set(SSet.from_values(g, (xi + k for xi in x.values())))
    mu = s_core_from_s_set(SSet.from_values(g, (yi + k for yi in y.values())))
    # x_j sits in class j + k, so sigma_i = u_(i-k)
    return lam, mu, (-k) % g


def ss_sweep(s: int, t: int, a: int, b: int) -> list[tuple[Partition, Partition]]:
    """All g-core bipartitions of ``C(s|0,a) & C(t|0,b)`` via ``from_tuples``."""
    g = gcd(s, t)
    _require(0 <= a < s and 0 <= b < t, "need 0 <= a < s and 0 <= b < t")
    _require(gcd(g, a - b) == 1, "need gcd(g, a - b) = 1")
    found = set()
    for u in u_tuples(g, s, a):
        for v in u_tuples(g, t, b):
            lam, mu, _ = from_tuples(u, v, s, t, a, b)
            found.add((lam, mu))
    return sorted(found, key=lambda pq: Multipartition(pq).sort_key())


# --------------------------------------------------------------------------
# cyclic words


def canonical_rotation(word: str) -> str:
    """Lexicographically least rotation (letter order B < D < R)."""
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


@dataclass(frozen=True)
class CyclicWord:
    letters: str

    def __post_init__(self):
        if set(self.letters) - set("BDR"):
            raise PreconditionError(f"letters must come from B, D, R: {self.letters!r}")
        object.__setattr__(self, "letters", canonical_rotation(self.letters))

    def __str__(self) -> str:
        return self.letters

    def counts(self) -> tuple[int, int, int]:
        return tuple(self.letters.count(ch) for ch in "BDR")

    def has_rotational_symmetry(self) -> bool:
        w = self.letters
        return any(w[i:] + w[:i] == w for i in range(1, len(w)))


def multiset_words(counts: dict[str, int]) -> Iterator[str]:
    """Every word with the given letter multiplicities, lexicographically."""
    letters = sorted(ch for ch, n in counts.items() if n > 0)
    remaining = dict(counts)
    total = sum(counts.values())
    buf: list[str] = []

    def rec() -> Iterator[str]:
        if len(buf) == total:
            yield "".join(buf)
            return
        for ch in letters:
            if remaining[ch]:
                remaining[ch] -= 1
                buf.append(ch)
                yield from rec()
                buf.pop()
                remaining[ch] += 1

    yield from rec()


def necklaces(counts: dict[str, int]) -> list[CyclicWord]:
    """Rotation classes of words with the given letter multiplicities."""
    return [CyclicWord(w) for w in multiset_words(counts) if canonical_rotation(w) == w]


# --------------------------------------------------------------------------
# (s,t)-lattice path codecs
#
# Lattice point (x, y) carries the integer s*x + t*y; a right step moves by
# +s and a down step by -t.  Column x is coloured up to height h(x), and the
# coloured integers form a shifted beta-set.


def _walk(word: str, s: int, t: int) -> tuple[list[int], list[int]]:
    """Column heights for x = 0..t-1, and the values of the B boxes."""
    h = 0
    heights: list[int] = []
    boxes: list[int] = []
    for ch in word:
        if ch == "D":
            h -= 1
        elif ch == "R":
            heights.append(h)
        elif ch == "B":
            h -= 1
            boxes.append(s * len(heights) + t * (h + 1))
            heights.append(h)
        else:
            raise PreconditionError(f"unexpected letter {ch!r}")
    return heights, boxes


def _lattice_spec(heights: list[int], s: int, t: int) -> BetaSpec:
    tops = [s * x + t * h for x, h in enumerate(heights)]
    top_of = {n % t: n for n in tops}
    assert len(top_of) == t
    lo = min(tops) - t + 1
    return BetaSpec(lo, frozenset(n for n in range(lo, max(tops) + 1) if n <= top_of[n % t]))


def _check_word(word: str, counts: dict[str, int]) -> None:
    got = {ch: word.count(ch) for ch in counts}
    if got != counts or len(word) != sum(counts.values()):
        raise PreconditionError(f"word {word!r} must have letter counts {counts}")


def st_decode(word: str | CyclicWord, s: int, t: int) -> Partition:
    """The (s,t)-core whose boundary path has one period ``word`` (s D's, t R's)."""
    word = str(word)
    _require(s >= 1 and t >= 1 and gcd(s, t) == 1, "need coprime s, t >= 1")
    _check_word(word, {"D": s, "R": t})
    heights, _ = _walk(word, s, t)
    lam, _ = normalize_beta(_lattice_spec(heights, s, t))
    return lam


def _heights_of(B, s: int, t: int) -> list[int]:
    heights = []
    for x in range(t):
        n = B.maximum
        while (n - s * x) % t:
            n -= 1
        while n not in B:
            n -= t
        heights.append((n - s * x) // t)
    return heights


def _path_word(heights: list[int], s: int, t: int, boxes: frozenset[int] = frozenset()) -> str:
    out = []
    prev = heights[-1] + s
    for x, h in enumerate(heights):
        drop = prev - h
        if drop > 0 and s * x + t * (h + 1) in boxes:
            out.append("D" * (drop - 1) + "B")
        else:
            out.append("D" * drop + "R")
        prev = h
    return "".join(out)


def st_encode(p: Partition, s: int, t: int) -> CyclicWord:
    _require(s >= 1 and t >= 1 and gcd(s, t) == 1, "need coprime s, t >= 1")
    if not (is_s_core(p, s) and is_s_core(p, t)) and p:
        raise PreconditionError(f"partition is not an ({s},{t})-core")
    return CyclicWord(_path_word(_heights_of(beta_set(p), s, t), s, t))


def st_cores(s: int, t: int) -> list[Partition]:
    """All (s,t)-cores, one per rotation class of words in s D's and t R's."""
    return sorted({st_decode(w, s, t) for w in necklaces({"D": s, "R": t})})


def _aa_check(s: int, t: int, a: int) -> None:
    _require(0 <= a < s <= t, "need 0 <= a < s <= t")
    _require(gcd(s, t) == 1, "need s and t coprime")


def aa_decode(word: str | CyclicWord, s: int, t: int, a: int) -> tuple[Partition, Partition]:
    """Bipartition encoded by a cyclic word with a B's, s-a D's and t-a R's."""
    word = str(word)
    _aa_check(s, t, a)
    _check_word(word, {"B": a, "D": s - a, "R": t - a})
    heights, boxes = _walk(word, s, t)
    spec = _lattice_spec(heights, s, t)
    lam, c0 = normalize_beta(spec)
    mu, c1 = normalize_beta(BetaSpec(spec.threshold, spec.exceptional | frozenset(boxes)))
    assert c1 == c0 + a
    return lam, mu


def aa_encode(lam: Partition, mu: Partition, s: int, t: int, a: int) -> CyclicWord:
    _aa_check(s, t, a)
    if not (is_core_bipartition(lam, mu, s, 0, a) and is_core_bipartition(lam, mu, t, 0, a)):
        raise PreconditionError(f"bipartition is not in C({s}|0,{a}) & C({t}|0,{a})")
    Bl = beta_set(lam)
    Bm = beta_set(mu, a)
    extra = frozenset(n for n in range(min(Bl.threshold, Bm.threshold), Bm.maximum + 1) if n in Bm and n not in Bl)
    assert len(extra) == a
    word = _path_word(_heights_of(Bl, s, t), s, t, extra)
    assert word.count("B") == a
    return CyclicWord(word)


def aa_members(s: int, t: int, a: int) -> list[tuple[Partition, Partition]]:
    """``C(s|0,a) & C(t|0,a)``, one bipartition per rotation class."""
    _aa_check(s, t, a)
    found = {aa_decode(w, s, t, a) for w in necklaces({"B": a, "D": s - a, "R": t - a})}
    return sorted(found, key=lambda pq: Multipartition(pq).sort_key())


# --------------------------------------------------------------------------
# average sizes and the conjectured closed forms


def average_size(members: Iterable[Multipartition | Sequence[Partition]]) -> Fraction:
    sizes = [sum(p.size for p in m) for m in members]
    if not sizes:
        raise PreconditionError("average of an empty family")
    return Fraction(sum(sizes), len(sizes))


FAMILIES = ("ss", "t0", "aa", "anderson")


def conjecture_value(family: str, params: Sequence[int]) -> Fraction:
    """Conjectured average size of a member of the given family.

    ``ss`` takes ``(s, a, b)``, ``t0`` takes ``(s, a, b)``, ``aa`` takes
    ``(s, t, a)`` and ``anderson`` takes ``(s, t)`` (Armstrong's formula).
    """
    if family == "ss":
        s, a, b = params
        _require(0 <= a < s and 0 <= b < s, "need 0 <= a, b < s")
        _require(gcd(s, a - b) == 1, "need s and a - b coprime")
        return Fraction((s + 1) * (a * (s - a) + b * (s - b) + 1 - s), 12)
    if family == "t0":
        s, a, b = params
        _require(0 <= a < s and b >= 0, "need 0 <= a < s and b >= 0")
        _require(gcd(s, a - b) == 1, "need s and a - b coprime")
        return Fraction((s + 1) * a * (s - a) + (s - 1) * (b - 1) * (b + s + 1), 12)
    if family == "aa":
        s, t, a = params
        _aa_check(s, t, a)
        return Fraction((s - 1) * (t - 1) * (s + t - 2 * a + 1) - 2 * a * a + 2 * a, 12)
    if family == "anderson":
        s, t = params
        _require(s >= 1 and t >= 1 and gcd(s, t) == 1, "need coprime s, t >= 1")
        return Fraction((s - 1) * (t - 1) * (s + t + 1), 24)
    raise PreconditionError(f"unknown family {family!r}")
