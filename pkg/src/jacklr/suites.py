"""Exhaustive verification sweeps over small instances.

Every suite is a list of cases plus a check that returns None on success or
a JSON-ready witness on failure.  Cases may be farmed out to worker
processes; results are always reported in case order.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import GenericShapeError
from .partitions import (
    Partition,
    complement,
    decompose_wrt_rectangle,
    inner_corners,
    is_horizontal_strip,
    partitions,
    partitions_in_box,
    rectangle,
)


@dataclass
class SuiteReport:
    name: str
    params: dict
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "ok" if self.ok else "fail"

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "params": self.params,
            "status": self.status,
            "checked": self.checked,
            "failures": self.failures,
            "notes": self.notes,
        }

    def format(self) -> str:
        head = f"{self.name}: {self.status} ({self.checked} checked, {len(self.failures)} failed)"
        lines = [head]
        for w in self.failures[:20]:
            lines.append(f"  witness: {w}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def _lab(p: Partition) -> str:
    return p.label()


# -- case generators and checks (module level so worker processes can pickle them)


def _pairs(max_size: int):
    for a in range(max_size + 1):
        for b in range(max_size + 1 - a):
            for mu in partitions(a):
                for nu in partitions(b):
                    yield (mu, nu)


def _check_sum_product(case) -> Optional[dict]:
    from .lattice import verify_sum_product

    report = verify_sum_product(*case)
    return None if report.holds else report.to_json()


def _check_norm(lam) -> Optional[dict]:
    from .symfunc import hall_inner, jack_J, jack_norm

    lhs = hall_inner(jack_J(lam), jack_J(lam))
    if lhs == jack_norm(lam):
        return None
    return {"lambda": _lab(lam), "inner": lhs.format(), "formula": jack_norm(lam).format()}


def _boxes_up_to(max_area: int, m: Optional[int] = None, n: Optional[int] = None):
    sides = [(m, n)] if m and n else [
        (a, b) for a in range(1, max_area + 1) for b in range(1, max_area + 1) if a * b <= max_area
    ]
    for a, b in sides:
        for sigma in partitions_in_box(a, b):
            yield (sigma, a, b)


def _flip_cases(max_area: int, m=None, n=None):
    for sigma, a, b in _boxes_up_to(max_area, m, n):
        for t in sorted(inner_corners(sigma)):
            yield (sigma, t, a, b)


def _check_flip(case) -> Optional[dict]:
    from .lattice import flip_rule_sides

    sigma, t, m, n = case
    s = flip_rule_sides(sigma, t, m, n)
    if s.column_lhs == s.column_rhs and s.row_lhs == s.row_rhs:
        return None
    return {"sigma": _lab(sigma), "t": list(t), "m": m, "n": n,
            "column": [s.column_lhs.to_json(), s.column_rhs.to_json()],
            "row": [s.row_lhs.to_json(), s.row_rhs.to_json()]}


def _check_mirror(case) -> Optional[dict]:
    from .lattice import mirror_rule_check

    sigma, m, n = case
    return None if mirror_rule_check(sigma, m, n) else {"sigma": _lab(sigma), "m": m, "n": n}


def _check_quadrants(case) -> Optional[dict]:
    from .lattice import mumu_quadrants, t_star

    mu, m, n = case
    mubar = complement(mu, m, n)
    q, qb = mumu_quadrants(mu, m, n), mumu_quadrants(mubar, m, n)
    problems = []
    if q.product() != t_star(mu, mubar):
        problems.append("product")
    for name in ("diagonal", "lower", "upper"):
        if getattr(q, name) != getattr(qb, name):
            problems.append(name)
    return {"mu": _lab(mu), "m": m, "n": n, "mismatch": problems} if problems else None


def _expansion_cases(max_size: int):
    for k in range(1, max_size + 1):
        for sigma in partitions(k):
            for s in sorted(inner_corners(sigma)):
                yield (sigma, s)


def _check_expansion(case) -> Optional[dict]:
    from .lattice import expansion_relative_to, t_partition

    sigma, s = case
    e = expansion_relative_to(sigma, s)
    if e.product() == t_partition(sigma) and e.quadrants_ok():
        return None
    return {"sigma": _lab(sigma), "s": list(s)}


def _pole_cases(max_size: int, points: int, seed: int):
    rng = random.Random(seed)
    for mu, nu in _pairs_each(max_size):
        span = mu.size + nu.size + 1
        pts = tuple((rng.randint(-1, span), rng.randint(-1, span)) for _ in range(points))
        yield (mu, nu, pts)


def _pairs_each(max_size: int):
    for a in range(max_size + 1):
        for b in range(max_size + 1):
            for mu in partitions(a):
                for nu in partitions(b):
                    yield (mu, nu)


def _check_pole_orders(case) -> Optional[dict]:
    from .lattice import order_formula, pole_order_bounds, t_star

    mu, nu, pts = case
    t = t_star(mu, nu)
    lo, hi = pole_order_bounds(mu, nu)
    bad = []
    for s in pts:
        o = order_formula(mu, nu, s)
        if o != -t.order_at(s) or not lo <= o <= hi:
            bad.append([s[0], s[1], o, -t.order_at(s)])
    return {"mu": _lab(mu), "nu": _lab(nu), "points": bad} if bad else None


def _rect_cases(max_area: int):
    yield from _boxes_up_to(max_area)


def _check_rect(case) -> Optional[dict]:
    from .hooks import rectangular_assignment
    from .lr import stanley_coeff

    mu, m, n = case
    target = stanley_coeff(mu, complement(mu, m, n), rectangle(m, n))
    for variant in ("A", "B"):
        a = rectangular_assignment(mu, m, n, variant=variant)
        if a.value != target or not a.is_balanced():
            return {"mu": _lab(mu), "m": m, "n": n, "variant": variant,
                    "value": a.value.format(), "stanley": target.format()}
    return None


def _union_cases(max_size: int, max_side: int = 4):
    for m in range(1, max_side + 1):
        for n in range(1, max_side + 1):
            for k in range(max_size + 1):
                for mu in partitions(k):
                    try:
                        dec = decompose_wrt_rectangle(mu, m, n)
                    except GenericShapeError:
                        continue
                    if dec.union.size <= max_size:
                        yield (mu, m, n)


def _check_union(case) -> Optional[dict]:
    from .hooks import rect_union_assignment, union_factored_form
    from .lr import jack_lr, stanley_coeff

    mu, m, n = case
    dec = decompose_wrt_rectangle(mu, m, n)
    target = stanley_coeff(mu, dec.sigma_bar, dec.union)
    for variant in ("A", "B"):
        a = rect_union_assignment(mu, m, n, variant)
        if a.value != target or not a.is_balanced():
            return {"mu": _lab(mu), "m": m, "n": n, "variant": variant,
                    "value": a.value.format(), "stanley": target.format()}
    if union_factored_form(mu, m, n).value != jack_lr(mu, dec.sigma_bar)[dec.union]:
        return {"mu": _lab(mu), "m": m, "n": n, "variant": "factored"}
    return None


def _pieri_cases(max_size: int):
    for size in range(1, max_size + 1):
        for lam in partitions(size):
            for r in range(1, size + 1):
                for mu in partitions(size - r):
                    if is_horizontal_strip(mu, lam):
                        yield (mu, lam, r)


def _check_pieri(case) -> Optional[dict]:
    from .hooks import pieri_assignment
    from .lr import stanley_coeff

    mu, lam, r = case
    a = pieri_assignment(mu, lam, r)
    target = stanley_coeff(mu, Partition([r]), lam)
    if a.value == target and a.is_balanced():
        return None
    return {"mu": _lab(mu), "lambda": _lab(lam), "r": r}


def _stanley_cases(max_size: int):
    from .lr import stanley_triples

    yield from stanley_triples(max_size)


def _check_stanley(case) -> Optional[dict]:
    from .lr import stanley_check

    v = stanley_check(*case)
    if v is None:
        return None
    return {"mu": _lab(v.mu), "nu": _lab(v.nu), "lambda": _lab(v.lam), "value": v.value.format()}


def _support_cases(max_area: int):
    for m in range(1, max_area + 1):
        for n in range(1, max_area + 1):
            if m * n > max_area:
                continue
            for a in range(m * n + 1):
                for mu in partitions(a):
                    for nu in partitions(m * n - a):
                        yield (mu, nu, m, n)


def _check_support(case) -> Optional[dict]:
    from .lr import schur_lr

    mu, nu, m, n = case
    c = schur_lr(mu, nu, rectangle(m, n))
    inside = len(mu) <= n and (not mu or mu[0] <= m)
    expected = 1 if inside and complement(mu, m, n) == nu else 0
    if c == expected:
        return None
    return {"mu": _lab(mu), "nu": _lab(nu), "m": m, "n": n, "c": c, "expected": expected}


SUITES: dict[str, tuple[Callable, Callable]] = {
    "sum-product": (lambda p: _pairs(p["max_size"]), _check_sum_product),
    "norms": (lambda p: (lam for k in range(1, p["max_size"] + 1) for lam in partitions(k)), _check_norm),
    "flip": (lambda p: _flip_cases(p.get("max_area", 0), p.get("m"), p.get("n")), _check_flip),
    "mirror": (lambda p: _boxes_up_to(p.get("max_area", 0), p.get("m"), p.get("n")), _check_mirror),
    "quadrants": (lambda p: _boxes_up_to(p["max_area"]), _check_quadrants),
    "expansion": (lambda p: _expansion_cases(p["max_size"]), _check_expansion),
    "pole-order": (lambda p: _pole_cases(p["max_size"], p["points"], p["seed"]), _check_pole_orders),
    "rect": (lambda p: _rect_cases(p["max_area"]), _check_rect),
    "rect-union": (lambda p: _union_cases(p["max_size"], p.get("max_side", 4)), _check_union),
    "pieri": (lambda p: _pieri_cases(p["max_size"]), _check_pieri),
    "stanley": (lambda p: _stanley_cases(p["max_size"]), _check_stanley),
    "support": (lambda p: _support_cases(p["max_area"]), _check_support),
}


def run_suite(name: str, jobs: int = 1, **params) -> SuiteReport:
    """Run one named suite; ``jobs > 1`` uses a process pool with ordered results."""
    gen, check = SUITES[name]
    cases = list(gen(params))
    report = SuiteReport(name, dict(sorted(params.items())))
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check, cases, chunksize=max(1, len(cases) // (4 * jobs))))
    else:
        results = [check(c) for c in cases]
    report.checked = len(cases)
    report.failures = [w for w in results if w is not None]
    if name == "stanley" and report.ok:
        report.notes.append("no counterexample to non-negative integrality found")
    return report
