"""Upper/lower hook assignments and the products they define.

A :class:`StanleyProduct` picks, for every box of three diagrams, either the
upper hook ``alpha*(arm+1) + leg`` (``"U"``) or the lower hook
``alpha*arm + leg + 1`` (``"L"``).  In the Stanley form the three products are
multiplied; in the LR form the third diagram's hooks are flipped and divide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional

from .alpha import ONE_POLY, AlphaPoly, AlphaRat
from .errors import (
    NotAHorizontalStripError,
    NotContainedError,
    SearchBoundExceededError,
    SizeMismatchError,
)
from .partitions import (
    Box,
    Partition,
    complement,
    decompose_wrt_rectangle,
    hook_value,
    is_horizontal_strip,
    rectangle,
    vflip,
)

UPPER, LOWER = "U", "L"
DEFAULT_SEARCH_BOUND = 24


def _flip(kind: str) -> str:
    return LOWER if kind == UPPER else UPPER


@dataclass(frozen=True)
class HookAssignment:
    shape: Partition
    choice: Mapping  # Box -> "U" | "L"

    def __post_init__(self):
        boxes = set(self.shape.boxes())
        if set(self.choice) != boxes:
            raise ValueError(f"assignment does not cover exactly the boxes of {self.shape.label()}")
        if any(k not in (UPPER, LOWER) for k in self.choice.values()):
            raise ValueError("hook choices must be 'U' or 'L'")

    @classmethod
    def from_rule(cls, shape, rule: Callable[[Box], str]) -> HookAssignment:
        shape = Partition(shape)
        return cls(shape, {b: rule(b) for b in shape.boxes()})

    @classmethod
    def uniform(cls, shape, kind: str) -> HookAssignment:
        return cls.from_rule(shape, lambda b: kind)

    def count(self, kind: str) -> int:
        return sum(1 for k in self.choice.values() if k == kind)

    def value(self) -> AlphaPoly:
        out = ONE_POLY
        for b in self.shape.boxes():
            out = out * hook_value(self.shape, b, self.choice[b])
        return out

    def flipped(self) -> HookAssignment:
        return HookAssignment(self.shape, {b: _flip(k) for b, k in self.choice.items()})

    def grid(self) -> list[str]:
        """Rows printed top to bottom, as a French diagram is drawn."""
        rows = []
        for y in range(len(self.shape) - 1, -1, -1):
            rows.append(" ".join(self.choice[Box(x, y)] for x in range(self.shape[y])))
        return rows

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "choices": [[b.x, b.y, self.choice[b]] for b in sorted(self.choice)],
        }

    @classmethod
    def from_json(cls, data) -> HookAssignment:
        return cls(Partition(data["shape"]), {Box(x, y): k for x, y, k in data["choices"]})


@dataclass(frozen=True)
class StanleyProduct:
    """Hook choices on ``mu``, ``nu`` and ``lam``.

    ``form="stanley"`` means the value is the product of all three factors;
    ``form="lr"`` means ``mu * nu / lam`` (with ``lam`` already holding the
    flipped choices).
    """

    mu: HookAssignment
    nu: HookAssignment
    lam: HookAssignment
    form: str = "stanley"

    @property
    def value(self):
        if self.form == "lr":
            return AlphaRat(self.mu.value() * self.nu.value(), self.lam.value())
        return evaluate_assignment(self)

    def counts(self) -> tuple[int, int]:
        factors = (self.mu, self.nu, self.lam)
        return (sum(f.count(UPPER) for f in factors), sum(f.count(LOWER) for f in factors))

    def is_balanced(self) -> bool:
        u, l = self.counts()
        return u == l == self.lam.shape.size

    def to_stanley(self) -> StanleyProduct:
        if self.form == "stanley":
            return self
        return StanleyProduct(self.mu, self.nu, self.lam.flipped(), "stanley")

    def to_lr(self) -> StanleyProduct:
        if self.form == "lr":
            return self
        return StanleyProduct(self.mu, self.nu, self.lam.flipped(), "lr")

    def render(self) -> str:
        grids = [self.mu.grid() or ["(empty)"], self.nu.grid() or ["(empty)"], self.lam.grid()]
        names = [self.mu.shape.label(), self.nu.shape.label(), self.lam.shape.label()]
        blocks = []
        for name, rows in zip(names, grids):
            blocks.append("\n".join([f"[{name}]"] + rows))
        return "\n\n".join(blocks)

    def to_json(self) -> dict:
        value = AlphaRat.coerce(self.value)
        return {
            "form": self.form,
            "mu": self.mu.to_json(),
            "nu": self.nu.to_json(),
            "lambda": self.lam.to_json(),
            "value": value.to_json(),
            "balanced": self.is_balanced() if self.form == "stanley" else self.to_stanley().is_balanced(),
        }


def evaluate_assignment(a: StanleyProduct) -> AlphaPoly:
    """Product of all chosen hooks over the three diagrams."""
    return a.mu.value() * a.nu.value() * a.lam.value()


# -- Pieri --------------------------------------------------------------------


def pieri_assignment(mu, lam, r: int) -> StanleyProduct:
    """Hook choices for ``<J_mu J_(r), J_lam>`` with ``lam / mu`` a horizontal r-strip."""
    mu, lam = Partition(mu), Partition(lam)
    if lam.size != mu.size + r:
        raise SizeMismatchError(f"|{lam.label()}| != |{mu.label()}| + {r}")
    if not is_horizontal_strip(mu, lam):
        raise NotAHorizontalStripError(f"{lam.label()}/{mu.label()} is not a horizontal strip")
    strip_columns = {b.x for b in lam.boxes() if not mu.has_box(b)}
    return StanleyProduct(
        HookAssignment.from_rule(mu, lambda b: UPPER if b.x in strip_columns else LOWER),
        HookAssignment.uniform(Partition([r] if r else []), UPPER),
        HookAssignment.from_rule(lam, lambda b: LOWER if b.x in strip_columns else UPPER),
    )


# -- rectangular case ---------------------------------------------------------


def rectangular_assignment(mu, m: int, n: int, form: str = "stanley", variant: str = "A") -> StanleyProduct:
    """Hook choices for ``<J_mu J_mubar, J_{m^n}>`` (or the LR coefficient).

    Variant A puts lower hooks on ``mu`` and upper hooks on its complement;
    variant B is the mirror presentation with the roles exchanged.
    """
    mu = Partition(mu)
    if len(mu) > n or (mu and mu[0] > m):
        raise NotContainedError(f"{mu.label()} is not contained in {m}^{n}")
    if form not in ("stanley", "lr") or variant not in ("A", "B"):
        raise ValueError(f"unknown form/variant {form!r}/{variant!r}")
    mubar = complement(mu, m, n)
    rect = rectangle(m, n)
    if variant == "A":
        key, mu_kind, bar_kind = mu, LOWER, UPPER
    else:
        key, mu_kind, bar_kind = mubar, UPPER, LOWER
    out = StanleyProduct(
        HookAssignment.uniform(mu, mu_kind),
        HookAssignment.uniform(mubar, bar_kind),
        HookAssignment.from_rule(rect, lambda b: UPPER if key.has_box(vflip(b, m, n)) else LOWER),
    )
    return out.to_lr() if form == "lr" else out


# -- rectangular-union case ---------------------------------------------------


def rect_union_assignment(mu, m: int, n: int, variant: str = "A", form: str = "stanley") -> StanleyProduct:
    """Hook choices for ``<J_mu J_sigmabar, J_{mu ∪ m^n}>``.

    With ``K = [c, m) x [r, n)`` the part of the rectangle not covered by the
    full rows and columns of ``mu``, the rows below ``K`` and the columns left
    of ``K`` receive fixed choices, and inside ``K`` the rectangular rule for
    ``mu2 ⊆ k^l`` applies.
    """
    mu = Partition(mu)
    dec = decompose_wrt_rectangle(mu, m, n)
    if variant not in ("A", "B") or form not in ("stanley", "lr"):
        raise ValueError(f"unknown form/variant {form!r}/{variant!r}")
    r, c, ell = dec.r, dec.c, dec.l
    key = dec.mu2 if variant == "A" else dec.sigma_bar

    def local_flip_in_key(b: Box) -> bool:
        return key.has_box((b.x - c, ell - 1 - (b.y - r)))

    def mu_rule(b: Box) -> str:
        if b.y < r:
            return UPPER
        if variant == "B" and dec.in_k(b):
            return UPPER
        return LOWER

    def lam_rule(b: Box) -> str:
        if b.y < r:
            return LOWER
        if b.x < c:
            return UPPER
        return UPPER if local_flip_in_key(b) else LOWER

    out = StanleyProduct(
        HookAssignment.from_rule(mu, mu_rule),
        HookAssignment.uniform(dec.sigma_bar, UPPER if variant == "A" else LOWER),
        HookAssignment.from_rule(dec.union, lam_rule),
    )
    return out.to_lr() if form == "lr" else out


@dataclass
class UnionFactoredForm:
    """``g_{mu, sigmabar}^{mu ∪ m^n} = F * g_{mu2, mu2bar}^{k^l}``."""

    numerator: list   # (box, kind) over mu
    denominator: list  # (box, kind) over mu ∪ m^n
    mu: Partition
    union: Partition
    inner: tuple  # (mu2, k, l)
    F: AlphaRat
    inner_g: AlphaRat

    @property
    def value(self) -> AlphaRat:
        return self.F * self.inner_g

    def to_json(self) -> dict:
        return {
            "F": {
                "numerator": [[b.x, b.y, k] for b, k in self.numerator],
                "denominator": [[b.x, b.y, k] for b, k in self.denominator],
                "value": self.F.to_json(),
            },
            "inner": {"mu2": list(self.inner[0]), "k": self.inner[1], "l": self.inner[2],
                      "g": self.inner_g.to_json()},
            "value": self.value.to_json(),
        }


def union_factored_form(mu, m: int, n: int) -> UnionFactoredForm:
    """Split the union coefficient into hooks outside ``K`` and a rectangular coefficient.

    Outside ``K`` the numerator (over ``mu``) takes upper hooks in the rows
    below ``K`` and lower hooks in the columns left of it; the denominator
    (over ``mu ∪ m^n``) takes the same kinds on its own boxes there.
    """
    from .lr import jack_lr

    mu = Partition(mu)
    dec = decompose_wrt_rectangle(mu, m, n)
    r, c = dec.r, dec.c

    def outside(shape: Partition) -> list:
        chosen = []
        for b in sorted(shape.boxes()):
            if b.y < r:
                chosen.append((b, UPPER))
            elif b.x < c:
                chosen.append((b, LOWER))
        return chosen

    num, den = outside(mu), outside(dec.union)
    top = ONE_POLY
    for b, k in num:
        top = top * hook_value(mu, b, k)
    bottom = ONE_POLY
    for b, k in den:
        bottom = bottom * hook_value(dec.union, b, k)
    k_, l_ = dec.k, dec.l
    inner_g = jack_lr(dec.mu2, dec.sigma_bar)[rectangle(k_, l_)]
    return UnionFactoredForm(num, den, mu, dec.union, (dec.mu2, k_, l_), AlphaRat(top, bottom), inner_g)


# -- exhaustive search --------------------------------------------------------


def balanced_assignment_search(mu, nu, lam, target: AlphaPoly, bound: int = DEFAULT_SEARCH_BOUND,
                               limit: Optional[int] = None) -> list[StanleyProduct]:
    """All balanced U/L assignments on ``(mu, nu, lam)`` whose product is ``target``.

    Boxes are visited in the order mu, nu, lam (row by row) with U tried before
    L, so results come out in a fixed order.  Partial products that do not
    divide ``target`` are pruned.
    """
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if mu.size + nu.size != lam.size:
        raise SizeMismatchError(f"|{mu.label()}| + |{nu.label()}| != |{lam.label()}|")
    total = 2 * lam.size
    if total > bound:
        raise SearchBoundExceededError(f"{total} boxes exceeds the search bound {bound}")
    target = AlphaPoly.coerce(target) if not isinstance(target, AlphaPoly) else target
    if target is None or target.is_zero():
        return []
    cells = [(0, mu, b) for b in mu.boxes()] + [(1, nu, b) for b in nu.boxes()] + [
        (2, lam, b) for b in lam.boxes()
    ]
    half = lam.size
    found: list[StanleyProduct] = []
    picks: list[str] = []

    def rec(i: int, rest: AlphaPoly, ups: int, lows: int) -> bool:
        if limit is not None and len(found) >= limit:
            return True
        if i == len(cells):
            if rest == 1:
                found.append(_build(cells, picks, mu, nu, lam))
            return False
        _, shape, b = cells[i]
        for kind in (UPPER, LOWER):
            if kind == UPPER and ups == half or kind == LOWER and lows == half:
                continue
            q, rem = divmod(rest, hook_value(shape, b, kind))
            if rem:
                continue
            picks.append(kind)
            stop = rec(i + 1, q, ups + (kind == UPPER), lows + (kind == LOWER))
            picks.pop()
            if stop:
                return True
        return False

    rec(0, target, 0, 0)
    return found


def _build(cells, picks, mu, nu, lam) -> StanleyProduct:
    choice: list[dict] = [{}, {}, {}]
    for (which, _, b), kind in zip(cells, picks):
        choice[which][b] = kind
    return StanleyProduct(
        HookAssignment(mu, choice[0]), HookAssignment(nu, choice[1]), HookAssignment(lam, choice[2])
    )
