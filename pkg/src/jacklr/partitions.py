"""Young diagrams in French coordinates.

A box is a lattice point ``(x, y)``: ``x`` is the column, ``y`` the row, and
row ``y`` of ``lam`` holds the boxes ``x < lam[y]``.  The origin is the
bottom-left box.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .alpha import AlphaPoly, bracket
from .errors import BoxNotInDiagramError, GenericShapeError, NotContainedError


class Box(NamedTuple):
    """A lattice point; also used for lattice displacements (hook vectors)."""

    x: int
    y: int

    def __add__(self, other):
        return Box(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Box(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return Box(-self.x, -self.y)

    @property
    def plus(self) -> Box:
        """The box diagonally above-right, ``s + (1, 1)``."""
        return Box(self.x + 1, self.y + 1)

    @property
    def minus(self) -> Box:
        return Box(self.x - 1, self.y - 1)


HookVector = Box
ORIGIN = Box(0, 0)


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        ps = [int(p) for p in parts]
        while ps and ps[-1] == 0:
            ps.pop()
        for i, p in enumerate(ps):
            if p < 1 or (i and p > ps[i - 1]):
                raise ValueError(f"not a partition: {tuple(ps)}")
        return super().__new__(cls, ps)

    def __repr__(self):
        return f"Partition({self.label()})"

    def label(self) -> str:
        """Compact label, ``42211``; comma separated once a part exceeds 9."""
        if not self:
            return "∅"
        if max(self) < 10:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """Length of row ``i`` (0-based), zero past the last row."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def boxes(self) -> Iterator[Box]:
        for y, row in enumerate(self):
            for x in range(row):
                yield Box(x, y)

    def has_box(self, b) -> bool:
        x, y = b
        return 0 <= y < len(self) and 0 <= x < self[y]

    def contains(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(p <= self[i] for i, p in enumerate(other))


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,2,1,1"``.

    A bare digit string such as ``"42211"`` is rejected because it is
    ambiguous once parts reach 10; a single part needs no comma only when it
    is a single digit (``"3"``), otherwise write ``"12,"``.
    """
    text = text.strip().strip("()[]")
    if text in ("", "0", "∅"):
        return Partition()
    if "," not in text and len(text) > 1:
        raise ValueError(f"ambiguous partition {text!r}: separate parts with commas")
    parts = [t for t in (s.strip() for s in text.split(",")) if t]
    return Partition(int(t) for t in parts)


# -- enumeration -----------------------------------------------------------


@lru_cache(maxsize=None)
def _partitions(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, cap), 0, -1):
        out.extend((k,) + rest for rest in _partitions(n - k, k))
    return tuple(out)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    return tuple(Partition(p) for p in _partitions(n, n))


def partitions_in_box(m: int, n: int) -> list[Partition]:
    """All partitions fitting inside the rectangle ``m^n`` (including empty)."""
    out = []
    for size in range(m * n + 1):
        out.extend(p for p in partitions(size) if len(p) <= n and (not p or p[0] <= m))
    return out


def rectangle(m: int, n: int) -> Partition:
    return Partition([m] * n) if m > 0 else Partition()


def dominates(lam: Partition, mu: Partition) -> bool:
    """True if ``lam >= mu`` in dominance order (same size assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam.part(i)
        b += mu.part(i)
        if a < b:
            return False
    return True


def n_statistic(lam: Partition) -> int:
    """``n(lam) = sum (i-1) lam_i``."""
    return sum(i * p for i, p in enumerate(lam))


# -- arms, legs, hooks -------------------------------------------------------


def _require_box(lam: Partition, s) -> None:
    if not lam.has_box(s):
        raise BoxNotInDiagramError(f"box {tuple(s)} is not in {lam.label()}")


def arm(lam: Partition, s) -> int:
    _require_box(lam, s)
    return lam[s[1]] - s[0] - 1


def leg(lam: Partition, s) -> int:
    _require_box(lam, s)
    return conjugate(lam)[s[0]] - s[1] - 1


def upper_hook(lam: Partition, s) -> HookVector:
    """Upper hook vector ``(arm + 1, -leg)``."""
    return Box(arm(lam, s) + 1, -leg(lam, s))


def lower_hook(lam: Partition, s) -> HookVector:
    """Lower hook vector ``(arm, -leg - 1)``."""
    return Box(arm(lam, s), -leg(lam, s) - 1)


def upper_hook_value(lam: Partition, s) -> AlphaPoly:
    """``alpha*(arm+1) + leg``."""
    return bracket(upper_hook(lam, s))


def lower_hook_value(lam: Partition, s) -> AlphaPoly:
    """``alpha*arm + leg + 1``."""
    return bracket(lower_hook(lam, s))


def hook_value(lam: Partition, s, kind: str) -> AlphaPoly:
    if kind == "U":
        return upper_hook_value(lam, s)
    if kind == "L":
        return lower_hook_value(lam, s)
    raise ValueError(f"hook kind must be 'U' or 'L', got {kind!r}")


def classical_hook_product(lam: Partition) -> int:
    out = 1
    conj = conjugate(lam)
    for x, y in lam.boxes():
        out *= lam[y] - x + conj[x] - y - 1
    return out


# -- corners -----------------------------------------------------------------


def outer_corners(lam: Partition) -> set[Box]:
    """Addable boxes."""
    out = set()
    for y in range(len(lam) + 1):
        x = lam.part(y)
        if y == 0 or lam.part(y - 1) > x:
            out.add(Box(x, y))
    return out


def inner_corners(lam: Partition) -> set[Box]:
    """Removable boxes."""
    return {Box(lam[y] - 1, y) for y in range(len(lam)) if lam[y] > lam.part(y + 1)}


def inner_corners_shifted(lam: Partition) -> set[Box]:
    return {s.plus for s in inner_corners(lam)}


def add_box(lam: Partition, s) -> Partition:
    if Box(*s) not in outer_corners(lam):
        raise ValueError(f"{tuple(s)} is not an outer corner of {lam.label()}")
    parts = list(lam) + [0]
    parts[s[1]] += 1
    return Partition(parts)


def remove_box(lam: Partition, s) -> Partition:
    if Box(*s) not in inner_corners(lam):
        raise ValueError(f"{tuple(s)} is not an inner corner of {lam.label()}")
    parts = list(lam)
    parts[s[1]] -= 1
    return Partition(parts)


def row_boxes(lam: Partition, s) -> list[Box]:
    """Boxes of ``lam`` in the row of ``s`` (``s`` need not be in ``lam``)."""
    y = s[1]
    return [Box(x, y) for x in range(lam.part(y))] if y >= 0 else []


def col_boxes(lam: Partition, s) -> list[Box]:
    x = s[0]
    return [Box(x, y) for y in range(conjugate(lam).part(x))] if x >= 0 else []


def union(lam: Partition, mu: Partition) -> Partition:
    return Partition(max(lam.part(i), mu.part(i)) for i in range(max(len(lam), len(mu))))


def intersection(lam: Partition, mu: Partition) -> Partition:
    return Partition(min(lam.part(i), mu.part(i)) for i in range(min(len(lam), len(mu))))


def is_horizontal_strip(mu: Partition, lam: Partition) -> bool:
    """True if ``lam / mu`` is a horizontal strip (at most one box per column)."""
    if not lam.contains(mu):
        return False
    return all(lam.part(i + 1) <= mu.part(i) for i in range(len(lam)))


def horizontal_strips(mu: Partition, r: int) -> list[Partition]:
    """All ``lam`` with ``lam / mu`` a horizontal strip of size ``r``."""
    out = []

    def grow(i: int, left: int, parts: list[int]):
        if i > len(mu):
            if left == 0:
                out.append(Partition(parts))
            return
        cap = left if i == 0 else min(left, mu.part(i - 1) - mu.part(i))
        for k in range(cap, -1, -1):
            grow(i + 1, left - k, parts + [mu.part(i) + k])

    grow(0, r, [])
    return out


# -- complements, star products, flips ---------------------------------------


def complement(mu: Partition, m: int, n: int) -> Partition:
    """Complement of ``mu`` inside ``m^n``: ``(m - mu_n, ..., m - mu_1)``."""
    if len(mu) > n or (mu and mu[0] > m):
        raise NotContainedError(f"{mu.label()} is not contained in {m}^{n}")
    return Partition(m - mu.part(n - 1 - i) for i in range(n))


def star_product(lam: Partition, mu: Partition) -> Counter:
    """Multiset ``{s + t : s in lam, t in mu}``."""
    out: Counter = Counter()
    mboxes = list(mu.boxes())
    for s in lam.boxes():
        for t in mboxes:
            out[s + t] += 1
    return out


def join(a, b) -> Box:
    """Componentwise minimum."""
    return Box(min(a[0], b[0]), min(a[1], b[1]))


def meet(a, b) -> Box:
    """Componentwise maximum."""
    return Box(max(a[0], b[0]), max(a[1], b[1]))


def hflip(b, m: int, n: int) -> Box:
    return Box(m - 1 - b[0], b[1])


def vflip(b, m: int, n: int) -> Box:
    return Box(b[0], n - 1 - b[1])


def bar(b, m: int, n: int) -> Box:
    """Complementary box ``(m - 1, n - 1) - b``."""
    return Box(m - 1 - b[0], n - 1 - b[1])


# -- rectangle decomposition -------------------------------------------------


class RectDecomposition(NamedTuple):
    mu: Partition
    m: int
    n: int
    sigma: Partition       # mu ∩ m^n
    sigma_bar: Partition   # complement of sigma in m^n
    mu0: frozenset
    mu1: frozenset         # boxes above the rectangle
    mu2: Partition         # sigma ∩ K in local coordinates of K
    mu3: frozenset         # boxes right of the rectangle
    c: int                 # K = [c, m) x [r, n)
    r: int

    @property
    def k(self) -> int:
        return self.m - self.c

    @property
    def l(self) -> int:
        return self.n - self.r

    @property
    def union(self) -> Partition:
        return union(self.mu, rectangle(self.m, self.n))

    def in_k(self, b) -> bool:
        return self.c <= b[0] < self.m and self.r <= b[1] < self.n


def check_generic(mu: Partition, m: int, n: int) -> None:
    if mu.part(n) > m:
        raise GenericShapeError(
            f"{mu.label()} has a box above and to the right of {m}^{n}"
        )


def decompose_wrt_rectangle(mu: Partition, m: int, n: int) -> RectDecomposition:
    check_generic(mu, m, n)
    rect = rectangle(m, n)
    sigma = intersection(mu, rect)
    sigma_bar = complement(sigma, m, n)
    r = sum(1 for y in range(n) if mu.part(y) > m)
    conj = conjugate(mu)
    c = sum(1 for x in range(m) if conj.part(x) > n)
    mu1 = frozenset(b for b in mu.boxes() if b.y >= n)
    mu3 = frozenset(b for b in mu.boxes() if b.y < n and b.x >= m)
    mu2 = Partition(max(0, sigma.part(y) - c) for y in range(r, n))
    mu0 = frozenset(b for b in sigma.boxes() if b.x < c or b.y < r)
    return RectDecomposition(mu, m, n, sigma, sigma_bar, mu0, mu1, mu2, mu3, c, r)


def partition_to_json(lam: Partition) -> list[int]:
    return list(lam)


def box_to_json(b) -> list[int]:
    return [b[0], b[1]]
