"""Rational functions of ``u`` whose zeros and poles sit at lattice brackets.

A :class:`LatticeRational` stores ``prod_b (u - [b])**order(b)``.  Since the
bracket ``[x, y] = alpha*x - y`` is injective on Z^2 for indeterminate alpha,
two such functions are equal exactly when their order maps agree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .alpha import ONE, ZERO, AlphaPoly, AlphaRat, bracket
from .errors import (
    NotASimplePoleError,
    NotAnInnerCornerError,
    NotContainedError,
    PoleError,
)
from .partitions import (
    ORIGIN,
    Box,
    Partition,
    add_box,
    bar,
    col_boxes,
    complement,
    decompose_wrt_rectangle,
    hflip,
    inner_corners,
    inner_corners_shifted,
    join,
    lower_hook,
    lower_hook_value,
    outer_corners,
    rectangle,
    remove_box,
    row_boxes,
    star_product,
    union,
    upper_hook,
    upper_hook_value,
    vflip,
)


class LatticeRational:
    """``prod (u - [b])**k`` over a finite map ``b -> k`` (positive ``k`` = zero)."""

    __slots__ = ("orders",)

    def __init__(self, orders: Mapping = ()):
        self.orders: dict[Box, int] = {Box(*b): int(k) for b, k in dict(orders).items() if k}

    @classmethod
    def from_points(cls, zeros: Iterable = (), poles: Iterable = ()) -> LatticeRational:
        c: Counter = Counter()
        for z in zeros:
            c[Box(*z)] += 1
        for p in poles:
            c[Box(*p)] -= 1
        return cls(c)

    def __mul__(self, other: LatticeRational) -> LatticeRational:
        out = dict(self.orders)
        for b, k in other.orders.items():
            out[b] = out.get(b, 0) + k
        return LatticeRational(out)

    def inverse(self) -> LatticeRational:
        return LatticeRational({b: -k for b, k in self.orders.items()})

    def __truediv__(self, other: LatticeRational) -> LatticeRational:
        return self * other.inverse()

    def __pow__(self, e: int) -> LatticeRational:
        return LatticeRational({b: k * e for b, k in self.orders.items()})

    def __eq__(self, other):
        if not isinstance(other, LatticeRational):
            return NotImplemented
        return self.orders == other.orders

    def __hash__(self):
        return hash(frozenset(self.orders.items()))

    def is_one(self) -> bool:
        return not self.orders

    def shift(self, b) -> LatticeRational:
        """``T(u - [b])``: every point moves by ``+b``."""
        return LatticeRational({p + Box(*b): k for p, k in self.orders.items()})

    def zeros(self) -> dict[Box, int]:
        return {b: k for b, k in self.orders.items() if k > 0}

    def poles(self) -> dict[Box, int]:
        return {b: -k for b, k in self.orders.items() if k < 0}

    def order_at(self, s) -> int:
        return self.orders.get(Box(*s), 0)

    def total_order(self) -> int:
        return sum(self.orders.values())

    def row_balance(self) -> dict[int, int]:
        out: Counter = Counter()
        for b, k in self.orders.items():
            out[b.y] += k
        return {y: k for y, k in out.items() if k}

    def column_balance(self) -> dict[int, int]:
        out: Counter = Counter()
        for b, k in self.orders.items():
            out[b.x] += k
        return {x: k for x, k in out.items() if k}

    def _product_at(self, s: Box, skip: Optional[Box] = None) -> AlphaRat:
        target = bracket(s)
        num = AlphaPoly((1,))
        den = AlphaPoly((1,))
        for p, k in self.orders.items():
            if p == skip:
                continue
            diff = target - bracket(p)
            if k > 0:
                num = num * diff ** k
            else:
                den = den * diff ** (-k)
        return AlphaRat(num, den)

    def value_at(self, s) -> AlphaRat:
        """Value at ``u = [s]``; requires ``s`` to be neither a zero nor a pole."""
        s = Box(*s)
        if s in self.orders:
            kind = "zero" if self.orders[s] > 0 else "pole"
            raise PoleError(f"u = [{s.x},{s.y}] is a {kind} of order {abs(self.orders[s])}")
        return self._product_at(s)

    def residue_at(self, s) -> AlphaRat:
        """Residue at a simple pole ``u = [s]``."""
        s = Box(*s)
        if self.orders.get(s, 0) != -1:
            raise NotASimplePoleError(
                f"u = [{s.x},{s.y}] has order {self.orders.get(s, 0)}, not a simple pole"
            )
        return self._product_at(s, skip=s)

    def numerator_points(self) -> list[Box]:
        return sorted(b for b, k in self.orders.items() for _ in range(max(k, 0)))

    def denominator_points(self) -> list[Box]:
        return sorted(b for b, k in self.orders.items() for _ in range(max(-k, 0)))

    def to_json(self) -> dict:
        return {"factors": [[b.x, b.y, k] for b, k in sorted(self.orders.items())]}

    @classmethod
    def from_json(cls, data) -> LatticeRational:
        return cls({(x, y): k for x, y, k in data["factors"]})

    def format(self) -> str:
        def side(points):
            if not points:
                return "1"
            return "".join(f"(u-[{p.x},{p.y}])" for p in points)

        num, den = self.numerator_points(), self.denominator_points()
        return side(num) if not den else f"{side(num)}/{side(den)}"

    def __repr__(self):
        return f"LatticeRational({self.format()})"


ONE_T = LatticeRational()
_T_BOX = LatticeRational({(0, 0): 1, (1, 1): 1, (1, 0): -1, (0, 1): -1})


def t_box(b=ORIGIN) -> LatticeRational:
    """``T_box(u - [b])``: zeros at ``b``, ``b + (1,1)``; poles at ``b + (1,0)``, ``b + (0,1)``."""
    return _T_BOX.shift(b)


def t_gamma(gamma) -> LatticeRational:
    """Product of ``t_box(b)`` over a box multiset (a Counter or an iterable of boxes)."""
    if not isinstance(gamma, Mapping):
        gamma = Counter(Box(*b) for b in gamma)
    out: Counter = Counter()
    for b, mult in gamma.items():
        for p, k in _T_BOX.orders.items():
            out[p + Box(*b)] += k * mult
    return LatticeRational(out)


def t_star(mu, nu) -> LatticeRational:
    return t_gamma(star_product(Partition(mu), Partition(nu)))


def t_partition(mu) -> LatticeRational:
    """``u * prod_{I+}(u - [s]) / prod_{O}(u - [t])`` computed from the corners."""
    mu = Partition(mu)
    return LatticeRational.from_points(
        zeros=[ORIGIN, *inner_corners_shifted(mu)], poles=outer_corners(mu)
    )


def order_formula(mu, nu, s) -> int:
    """Pole order of ``T_{mu * nu}`` at ``[s]`` counted from the corners of ``mu``.

    This counts poles positively, so it equals ``-t_star(mu, nu).order_at(s)``.
    """
    mu, nu, s = Partition(mu), Partition(nu), Box(*s)
    outer = outer_corners(mu)
    zero_pts = inner_corners_shifted(mu) | {ORIGIN}
    poles = zeros = 0
    for b in nu.boxes():
        d = s - b
        poles += d in outer
        zeros += d in zero_pts
    return poles - zeros


def pole_order_bounds(mu, nu) -> tuple[int, int]:
    mu, nu = Partition(mu), Partition(nu)
    return 1 - max(len(outer_corners(mu)), len(outer_corners(nu))), 1


def residue_at(t: LatticeRational, s) -> AlphaRat:
    return t.residue_at(s)


def value_at(t: LatticeRational, s) -> AlphaRat:
    return t.value_at(s)


# -- polynomials in u with coefficients in Q(alpha) ---------------------------


def _upoly_mul_linear(p: list, root: AlphaPoly) -> list:
    # p(u) * (u - root), coefficients ascending in u
    out = [ZERO] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i + 1] = out[i + 1] + c
        out[i] = out[i] - c * root
    return out


def _upoly_from_roots(points: Iterable[Box]) -> list:
    p = [ONE]
    for b in points:
        p = _upoly_mul_linear(p, bracket(b))
    return p


def _upoly_add(a: list, b: list, scale=ONE) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else ZERO
        y = b[i] if i < len(b) else ZERO
        out.append(x + scale * y)
    return out


def _upoly_trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


@dataclass
class SumProductReport:
    mu: Partition
    nu: Partition
    holds: bool
    lhs_residues: dict = field(default_factory=dict)
    rhs_residues: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "ok" if self.holds else "fail"

    def to_json(self) -> dict:
        out = {"mu": list(self.mu), "nu": list(self.nu), "status": self.status}
        if not self.holds:
            out["witness"] = {
                "lhs_residues": {f"{b.x},{b.y}": r.to_json() for b, r in sorted(self.lhs_residues.items())},
                "rhs_residues": {f"{b.x},{b.y}": r.to_json() for b, r in sorted(self.rhs_residues.items())},
            }
        return out


def sum_product_lhs_terms(mu, nu) -> dict[Box, AlphaRat]:
    """``{s: sum of hat g over gamma containing s}``: the LHS as simple fractions."""
    from .lr import jack_lr, varpi

    mu, nu = Partition(mu), Partition(nu)
    base = union(mu, nu)
    weight = varpi(mu) * varpi(nu)
    terms: dict[Box, AlphaRat] = {}
    for gamma, g in jack_lr(mu, nu).entries.items():
        ghat = g * varpi(gamma) / weight
        for s in gamma.boxes():
            if not base.has_box(s):
                terms[s] = terms.get(s, ZERO) + ghat
    return {s: c for s, c in terms.items() if c}


def verify_sum_product(mu, nu) -> SumProductReport:
    """Check the sum-product identity for ``(mu, nu)`` by clearing denominators.

    Both sides are multiplied by ``Q(u)``, the least common multiple of all
    denominators, and compared as polynomials in ``u`` over Q(alpha).
    """
    mu, nu = Partition(mu), Partition(nu)
    lhs_terms = sum_product_lhs_terms(mu, nu)
    t = t_star(mu, nu)
    poles = t.poles()
    qmult = dict(poles)
    for s in lhs_terms:
        qmult[s] = max(qmult.get(s, 0), 1)
    q_points = sorted(b for b, k in qmult.items() for _ in range(k))

    lhs = [ZERO]
    for s, c in lhs_terms.items():
        rest = list(q_points)
        rest.remove(s)
        lhs = _upoly_add(lhs, _upoly_from_roots(rest), c)

    # RHS * Q = (N - D) * Q / D, where Q / D keeps the extra LHS points
    extra = list(q_points)
    for b, k in poles.items():
        for _ in range(k):
            extra.remove(b)
    num = _upoly_from_roots(t.numerator_points())
    den = _upoly_from_roots(t.denominator_points())
    rhs = _upoly_from_roots(extra)
    diff = _upoly_add(num, den, -ONE)
    rhs_full = [ZERO]
    for i, c in enumerate(diff):
        if c:
            shifted = [ZERO] * i + [c * x for x in rhs]
            rhs_full = _upoly_add(rhs_full, shifted)

    holds = _upoly_trim(lhs) == _upoly_trim(rhs_full)
    report = SumProductReport(mu, nu, holds)
    if not holds:
        report.lhs_residues = dict(lhs_terms)
        report.rhs_residues = {p: t.residue_at(p) for p, k in poles.items() if k == 1}
    return report


# -- expansion lemma ----------------------------------------------------------


@dataclass
class Expansion:
    """``T_sigma = origin * corner * row * column`` relative to an inner corner ``s``."""

    sigma: Partition
    s: Box
    origin: LatticeRational
    corner: LatticeRational
    row: LatticeRational
    column: LatticeRational

    def product(self) -> LatticeRational:
        return self.origin * self.corner * self.row * self.column

    def quadrants_ok(self) -> bool:
        """Row points lie up-left of ``s``, column points down-right of it."""
        s = self.s
        row_ok = all(p.x <= s.x and p.y > s.y for p in self.row.orders)
        col_ok = all(p.x > s.x and p.y <= s.y for p in self.column.orders)
        return row_ok and col_ok


def expansion_relative_to(sigma, s) -> Expansion:
    sigma, s = Partition(sigma), Box(*s)
    if s not in inner_corners(sigma):
        raise NotAnInnerCornerError(f"{tuple(s)} is not an inner corner of {sigma.label()}")
    smaller = remove_box(sigma, s)
    sp = s.plus
    row = LatticeRational.from_points(
        zeros=[sp - upper_hook(smaller, b) for b in row_boxes(smaller, s)],
        poles=[sp - upper_hook(sigma, b) for b in row_boxes(sigma, s)],
    )
    column = LatticeRational.from_points(
        zeros=[sp + lower_hook(smaller, b) for b in col_boxes(smaller, s)],
        poles=[sp + lower_hook(sigma, b) for b in col_boxes(sigma, s)],
    )
    return Expansion(
        sigma, s, LatticeRational({ORIGIN: 1}), LatticeRational({sp: 1}), row, column
    )


# -- rectangle lemmas ---------------------------------------------------------


def _require_inside(sigma: Partition, m: int, n: int) -> None:
    if len(sigma) > n or (sigma and sigma[0] > m):
        raise NotContainedError(f"{sigma.label()} is not contained in {m}^{n}")


@dataclass
class FlipSides:
    column_lhs: LatticeRational
    column_rhs: LatticeRational
    row_lhs: LatticeRational
    row_rhs: LatticeRational


def flip_rule_sides(sigma, t, m: int, n: int) -> FlipSides:
    """Both sides of the two flip rules, for ``t`` an inner corner of ``sigma`` in ``m^n``."""
    sigma, t = Partition(sigma), Box(*t)
    _require_inside(sigma, m, n)
    if t not in inner_corners(sigma):
        raise NotAnInnerCornerError(f"{tuple(t)} is not an inner corner of {sigma.label()}")
    smaller = remove_box(sigma, t)
    sbar = complement(sigma, m, n)
    tbar = bar(t, m, n)
    bigger = add_box(sbar, tbar)
    column_lhs = LatticeRational.from_points(
        zeros=[upper_hook(smaller, b) for b in col_boxes(smaller, t)],
        poles=[upper_hook(sigma, b) for b in col_boxes(sigma, t)],
    )
    column_rhs = LatticeRational.from_points(
        zeros=[upper_hook(bigger, b) for b in row_boxes(sbar, tbar)],
        poles=[Box(m, 0) - t, *(upper_hook(sbar, b) for b in row_boxes(sbar, tbar))],
    )
    row_lhs = LatticeRational.from_points(
        zeros=[lower_hook(smaller, b) for b in row_boxes(smaller, t)],
        poles=[lower_hook(sigma, b) for b in row_boxes(sigma, t)],
    )
    row_rhs = LatticeRational.from_points(
        zeros=[lower_hook(bigger, b) for b in col_boxes(sbar, tbar)],
        poles=[t - Box(0, n), *(lower_hook(sbar, b) for b in col_boxes(sbar, tbar))],
    )
    return FlipSides(column_lhs, column_rhs, row_lhs, row_rhs)


def flip_rule_check(sigma, t, m: int, n: int) -> bool:
    sides = flip_rule_sides(sigma, t, m, n)
    return sides.column_lhs == sides.column_rhs and sides.row_lhs == sides.row_rhs


def mirror_rule_pairs(sigma, m: int, n: int):
    """Yield ``(kind, sigma-side hooks, complement-side hooks)`` for every instance of
    the two mirror rules.

    Outer corners ``s`` on the boundary of the rectangle have no mirror image and
    are skipped, as is ``w = t`` in the second rule.
    """
    sigma = Partition(sigma)
    _require_inside(sigma, m, n)
    sbar = complement(sigma, m, n)
    for t in sorted(inner_corners(sigma)):
        tbar = bar(t, m, n)
        smaller = remove_box(sigma, t)
        bigger = add_box(sbar, tbar)
        for s in sorted(outer_corners(sigma)):
            if not (s.x < m and s.y < n):
                continue
            a, b = join(s, t), join(bar(s, m, n), tbar)
            yield "outer", (upper_hook(sigma, a), lower_hook(sigma, a)), (
                upper_hook(sbar, b),
                lower_hook(sbar, b),
            )
        for w in sorted(inner_corners(sigma)):
            if w == t:
                continue
            a, b = join(w, t), join(bar(w, m, n), tbar)
            yield "inner", (upper_hook(smaller, a), lower_hook(smaller, a)), (
                upper_hook(bigger, b),
                lower_hook(bigger, b),
            )


def mirror_rule_check(sigma, m: int, n: int) -> bool:
    return all(left == right for _, left, right in mirror_rule_pairs(sigma, m, n))


@dataclass
class Quadrants:
    diagonal: LatticeRational
    lower: LatticeRational
    upper: LatticeRational

    def product(self) -> LatticeRational:
        return self.diagonal * self.lower * self.upper


def mumu_quadrants(mu, m: int, n: int) -> Quadrants:
    """The three quadrant factors of ``T_{mu * mu-bar}`` around ``v- = (m-1, n-1)``."""
    mu = Partition(mu)
    _require_inside(mu, m, n)
    mubar = complement(mu, m, n)
    rect = rectangle(m, n)
    vm = Box(m - 1, n - 1)
    diagonal = LatticeRational.from_points(
        zeros=list(mu.boxes()), poles=[bar(b, m, n) for b in mu.boxes()]
    )
    lower = LatticeRational.from_points(
        zeros=[vm - lower_hook(mubar, b) for b in mubar.boxes()],
        poles=[vm - lower_hook(rect, vflip(b, m, n)) for b in mubar.boxes()],
    )
    upper = LatticeRational.from_points(
        zeros=[vm + upper_hook(mu, b) for b in mu.boxes()],
        poles=[vm + upper_hook(rect, hflip(b, m, n)) for b in mu.boxes()],
    )
    return Quadrants(diagonal, lower, upper)


def rectangular_residue(mu, m: int, n: int) -> AlphaRat:
    """``Res_{u=[v-]} T_{mu * mu-bar}`` times ``|J_{m^n}|^2 varpi_mu varpi_mubar / varpi_{m^n}``:
    the Stanley coefficient ``<J_mu J_mubar, J_{m^n}>``."""
    from .lr import varpi
    from .symfunc import jack_norm

    mu = Partition(mu)
    mubar = complement(mu, m, n)
    if not mu or not mubar:
        # T_{empty * m^n} = 1 has no pole; the coefficient is just the norm
        return AlphaRat(jack_norm(rectangle(m, n)))
    res = t_star(mu, mubar).residue_at((m - 1, n - 1))
    return res * jack_norm(rectangle(m, n)) * varpi(mu) * varpi(mubar) / varpi(rectangle(m, n))


# -- rectangular-union lemmas -------------------------------------------------


@dataclass
class UnionFactorization:
    mu: Partition
    m: int
    n: int
    g_union: AlphaRat
    g_rect: AlphaRat
    t_factors: dict
    holds: bool

    @property
    def status(self) -> str:
        return "ok" if self.holds else "fail"

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "m": self.m,
            "n": self.n,
            "status": self.status,
            "g_union": self.g_union.to_json(),
            "g_rect": self.g_rect.to_json(),
            "t_factors": [[b.x, b.y, v.to_json()] for b, v in sorted(self.t_factors.items())],
        }


def union_factorization_check(mu, m: int, n: int) -> UnionFactorization:
    """Compare ``g_{mu, sigma-bar}^{mu ∪ m^n}`` with
    ``g_{sigma, sigma-bar}^{m^n} * prod_{b in mu/sigma} T_{sigma-bar}([b-bar])``."""
    from .lr import jack_lr

    dec = decompose_wrt_rectangle(Partition(mu), m, n)
    g_union = jack_lr(dec.mu, dec.sigma_bar)[dec.union]
    g_rect = jack_lr(dec.sigma, dec.sigma_bar)[rectangle(m, n)]
    t_sb = t_partition(dec.sigma_bar)
    factors = {}
    prod = ONE
    for b in dec.mu.boxes():
        if not dec.sigma.has_box(b):
            factors[b] = t_sb.value_at(bar(b, m, n))
            prod = prod * factors[b]
    return UnionFactorization(dec.mu, m, n, g_union, g_rect, factors, g_union == g_rect * prod)


def _hook_ratio(lam: Partition, bigger: Partition, s: Box) -> AlphaRat:
    num = AlphaPoly((1,))
    den = AlphaPoly((1,))
    for b in row_boxes(lam, s):
        num = num * upper_hook_value(lam, b)
    for b in row_boxes(bigger, s):
        den = den * upper_hook_value(bigger, b)
    for b in col_boxes(lam, s):
        num = num * lower_hook_value(lam, b)
    for b in col_boxes(bigger, s):
        den = den * lower_hook_value(bigger, b)
    return AlphaRat(num, den)


def t_box_factor(mu, s, m: int, n: int) -> AlphaRat:
    """``T_{sigma-bar}([s-bar])`` from row and column hook products, for an outer
    corner ``s`` of ``mu`` lying outside ``m^n``."""
    mu, s = Partition(mu), Box(*s)
    dec = decompose_wrt_rectangle(mu, m, n)
    if s not in outer_corners(mu):
        raise NotAnInnerCornerError(f"{tuple(s)} is not an outer corner of {mu.label()}")
    if s.x < m and s.y < n:
        raise ValueError(f"{tuple(s)} lies inside {m}^{n}")
    rect = rectangle(m, n)
    grown = add_box(mu, s)
    outer = _hook_ratio(dec.union, union(grown, rect), s)
    inner = _hook_ratio(mu, grown, s)
    return outer / inner


def t_box_factor_direct(mu, s, m: int, n: int) -> AlphaRat:
    dec = decompose_wrt_rectangle(Partition(mu), m, n)
    return t_partition(dec.sigma_bar).value_at(bar(s, m, n))
