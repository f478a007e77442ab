"""Homogeneous symmetric functions over Q(alpha) and integral-form Jack functions.

Symmetric functions are manipulated abstractly through their coefficients in
the monomial, power-sum or Jack ``J`` basis of a single degree; no variable
sets are involved.  The alpha-Hall inner product is diagonal on power sums,
so every inner product is taken there.
"""

from __future__ import annotations

import json
import os
import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Mapping, Optional

from .alpha import ALPHA, ONE_POLY, ZERO, AlphaPoly, AlphaRat
from .partitions import (
    Partition,
    conjugate,
    dominates,
    lower_hook_value,
    n_statistic,
    partitions,
    upper_hook_value,
)

MONOMIAL = "monomial"
POWERSUM = "powersum"
JACK = "jackJ"
BASES = (MONOMIAL, POWERSUM, JACK)

# Gram-Schmidt is the reference construction; above this degree the
# eigen-operator recurrence (cross-checked against it in the tests) is used.
GRAM_SCHMIDT_MAX_DEGREE = 7


class SymFunc:
    """A homogeneous symmetric function given by its coefficients in one basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping = ()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean = {}
        for lam, c in dict(terms).items():
            c = AlphaRat.coerce(c)
            if c:
                clean[Partition(lam)] = c
        sizes = {lam.size for lam in clean}
        if len(sizes) > 1:
            raise ValueError(f"inhomogeneous symmetric function (degrees {sorted(sizes)})")
        self.basis = basis
        self.terms: dict[Partition, AlphaRat] = clean

    @classmethod
    def basis_element(cls, basis: str, lam) -> SymFunc:
        return cls(basis, {Partition(lam): 1})

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero function."""
        for lam in self.terms:
            return lam.size
        return None

    def coefficient(self, lam) -> AlphaRat:
        return self.terms.get(Partition(lam), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def _same_basis(self, other: SymFunc) -> SymFunc:
        return other if other.basis == self.basis else convert(other, self.basis)

    def __add__(self, other: SymFunc) -> SymFunc:
        other = self._same_basis(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, ZERO) + c
        return SymFunc(self.basis, out)

    def __neg__(self) -> SymFunc:
        return SymFunc(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + (-other)

    def scale(self, c) -> SymFunc:
        c = AlphaRat.coerce(c)
        return SymFunc(self.basis, {lam: c * v for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            from .lr import multiply

            return multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def sorted_terms(self) -> list[tuple[Partition, AlphaRat]]:
        """Terms in reverse-lexicographic order of the partitions."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def format(self, unicode: bool = False) -> str:
        letter = {MONOMIAL: "m", POWERSUM: "p", JACK: "J"}[self.basis]
        if not self.terms:
            return "0"
        pieces = []
        for lam, c in self.sorted_terms():
            text = c.format(unicode)
            name = f"{letter}_{lam.label()}"
            if c == 1:
                pieces.append(name)
            elif c == -1:
                pieces.append(f"-{name}")
            elif c.is_poly() and len([x for x in c.num.coeffs if x]) == 1 and "+" not in text:
                pieces.append(f"{text} {name}")
            else:
                pieces.append(f"({text}) {name}")
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"SymFunc({self.basis}: {self.format()})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree if self.degree is not None else 0,
            "terms": [
                {"partition": list(lam), "coeff": c.to_json()} for lam, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> SymFunc:
        return cls(
            data["basis"],
            {Partition(t["partition"]): AlphaRat.from_json(t["coeff"]) for t in data["terms"]},
        )


# -- power sums and monomials ------------------------------------------------


@lru_cache(maxsize=None)
def zee(lam: Partition) -> int:
    """``z_lam``: ``n!/z_lam`` permutations of size n have cycle type ``lam``."""
    out = 1
    for k in set(lam):
        mult = lam.count(k)
        out *= k ** mult * factorial(mult)
    return out


@lru_cache(maxsize=None)
def _hall_weight(rho: Partition) -> AlphaPoly:
    """``<p_rho, p_rho> = z_rho * alpha^len(rho)``."""
    return AlphaPoly([0] * len(rho) + [zee(rho)])


@lru_cache(maxsize=None)
def _count_distributions(parts: tuple[int, ...], caps: tuple[int, ...]) -> int:
    # labeled assignments of parts into bins filling each bin exactly; caps sorted
    if not parts:
        return 1 if not any(caps) else 0
    first, rest = parts[0], parts[1:]
    total = 0
    seen = set()
    for i, c in enumerate(caps):
        if c >= first and c not in seen:
            seen.add(c)
            mult = caps.count(c)
            new = list(caps)
            new[i] = c - first
            total += mult * _count_distributions(rest, tuple(sorted(new, reverse=True)))
    return total


@lru_cache(maxsize=None)
def power_to_monomial_row(rho: Partition) -> dict[Partition, int]:
    """Integer coefficients of ``p_rho`` in the monomial basis."""
    out = {}
    for kappa in partitions(rho.size):
        if dominates(kappa, rho):
            k = _count_distributions(tuple(rho), tuple(kappa))
            if k:
                out[kappa] = k
    return out


def power_in_monomial(lam) -> SymFunc:
    """``p_lam`` expanded in the monomial basis."""
    return SymFunc(MONOMIAL, power_to_monomial_row(Partition(lam)))


@lru_cache(maxsize=None)
def _monomial_to_power_table(n: int) -> dict[Partition, dict[Partition, Fraction]]:
    # p_kappa = sum_{tau >= kappa} L[kappa][tau] m_tau, so solve from the top
    table: dict[Partition, dict[Partition, Fraction]] = {}
    for kappa in partitions(n):
        row = power_to_monomial_row(kappa)
        vec: dict[Partition, Fraction] = {kappa: Fraction(1)}
        for tau, coeff in row.items():
            if tau == kappa:
                continue
            for rho, v in table[tau].items():
                vec[rho] = vec.get(rho, Fraction(0)) - coeff * v
        diag = row[kappa]
        table[kappa] = {rho: v / diag for rho, v in vec.items() if v}
    return table


def monomial_in_power(lam) -> SymFunc:
    lam = Partition(lam)
    return SymFunc(POWERSUM, _monomial_to_power_table(lam.size)[lam])


# -- Jack functions ------------------------------------------------------------


def lex_extension(n: int) -> list[Partition]:
    """Increasing linear extension of dominance: reverse of reverse-lex order."""
    return list(reversed(partitions(n)))


def n_extension(n: int) -> list[Partition]:
    """A second increasing linear extension: by ``-n(lam)``, ties in lex-decreasing order."""
    return sorted(partitions(n), key=lambda lam: (-n_statistic(lam), tuple(-p for p in lam)))


ORDERINGS: dict[str, Callable[[int], list[Partition]]] = {"lex": lex_extension, "n": n_extension}


def _inner_p(a: Mapping[Partition, AlphaRat], b: Mapping[Partition, AlphaRat]) -> AlphaRat:
    if len(b) < len(a):
        a, b = b, a
    total = ZERO
    for rho, x in a.items():
        y = b.get(rho)
        if y is not None:
            total = total + x * y * _hall_weight(rho)
    return total


def _gram_schmidt(n: int, order: str = "lex") -> dict[Partition, SymFunc]:
    """Orthogonalize the monomial basis of degree ``n`` along a linear extension
    of dominance order, then rescale so that the ``m_{1^n}`` coefficient is ``n!``.
    """
    mp = _monomial_to_power_table(n)
    done: list[tuple[Partition, dict, dict, AlphaRat]] = []
    result = {}
    for lam in ORDERINGS[order](n):
        m_lam_p = {rho: AlphaRat.coerce(v) for rho, v in mp[lam].items()}
        m_coords: dict[Partition, AlphaRat] = {lam: AlphaRat.coerce(1)}
        p_coords = dict(m_lam_p)
        for kappa, km, kp, knorm in done:
            proj = _inner_p(m_lam_p, kp)
            if not proj:
                continue
            c = proj / knorm
            for tau, v in km.items():
                m_coords[tau] = m_coords.get(tau, ZERO) - c * v
            for rho, v in kp.items():
                p_coords[rho] = p_coords.get(rho, ZERO) - c * v
        m_coords = {k: v for k, v in m_coords.items() if v}
        p_coords = {k: v for k, v in p_coords.items() if v}
        done.append((lam, m_coords, p_coords, _inner_p(p_coords, p_coords)))
        scale = AlphaRat.coerce(factorial(n)) / m_coords[Partition([1] * n)]
        result[lam] = SymFunc(MONOMIAL, {k: scale * v for k, v in m_coords.items()})
    return result


def lower_hook_product(lam: Partition) -> AlphaPoly:
    """``prod (alpha*arm + leg + 1)``: the ``m_lam`` coefficient of ``J_lam``."""
    out = ONE_POLY
    for b in lam.boxes():
        out = out * lower_hook_value(lam, b)
    return out


def _alpha_rho(kappa: Partition) -> AlphaPoly:
    # alpha * rho_kappa = alpha * sum k_i (k_i - 1) - 2 * sum (i-1) k_i
    return AlphaPoly((-2 * n_statistic(kappa), sum(k * (k - 1) for k in kappa)))


def _jack_recurrence(lam: Partition) -> SymFunc:
    """Monomial coefficients of ``J_lam`` from the Laplace-Beltrami eigen-equation.

    Each coefficient is ``2 * sum (mu_i - mu_j + 2t) c_nu / (alpha (rho_lam - rho_mu))``
    over the raisings ``nu`` of ``mu``; the division is exact in Z[alpha].
    """
    n = lam.size
    top = _alpha_rho(lam)
    coeffs: dict[Partition, AlphaPoly] = {lam: lower_hook_product(lam)}
    for mu in partitions(n):  # decreasing lex order visits raisings first
        if mu == lam or not dominates(lam, mu):
            continue
        acc = AlphaPoly()
        parts = list(mu)
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                for t in range(1, parts[j] + 1):
                    raised = list(parts)
                    raised[i] += t
                    raised[j] -= t
                    nu = Partition(sorted(raised, reverse=True))
                    c = coeffs.get(nu)
                    if c is not None:
                        acc = acc + c * (parts[i] - parts[j] + 2 * t)
        if acc:
            coeffs[mu] = (acc * 2).exact_div(top - _alpha_rho(mu))
    return SymFunc(MONOMIAL, coeffs)


_table_lock = threading.Lock()
_jack_tables: dict[tuple[int, str], dict[Partition, SymFunc]] = {}


def _cache_path(n: int, method: str) -> Optional[str]:
    root = os.environ.get("JACK_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, f"jackJ_deg{n}_{method}.json")


def jack_table(n: int, method: str = "auto", order: str = "lex") -> dict[Partition, SymFunc]:
    """All ``J_lam`` with ``|lam| = n`` in the monomial basis, memoized per degree.

    ``method`` is ``"gram-schmidt"``, ``"recurrence"`` or ``"auto"`` (the former
    up to :data:`GRAM_SCHMIDT_MAX_DEGREE`).  If ``JACK_CACHE_DIR`` is set, tables
    are also persisted there as JSON.
    """
    if method == "auto":
        method = "gram-schmidt" if n <= GRAM_SCHMIDT_MAX_DEGREE else "recurrence"
    key = (n, method if method != "gram-schmidt" else f"gram-schmidt-{order}")
    with _table_lock:
        if key in _jack_tables:
            return _jack_tables[key]
        path = _cache_path(n, key[1])
        table = None
        if path and os.path.exists(path):
            with open(path) as fh:
                table = {
                    Partition(e["lambda"]): SymFunc.from_json(e["J"]) for e in json.load(fh)
                }
        if table is None:
            if method == "gram-schmidt":
                table = _gram_schmidt(n, order)
            elif method == "recurrence":
                table = {lam: _jack_recurrence(lam) for lam in partitions(n)}
            else:
                raise ValueError(f"unknown method {method!r}")
            if path:
                os.makedirs(os.path.dirname(path), exist_ok=True)
                with open(path, "w") as fh:
                    json.dump(
                        [{"lambda": list(lam), "J": table[lam].to_json()} for lam in partitions(n)],
                        fh,
                    )
        _jack_tables[key] = table
        return table


@lru_cache(maxsize=None)
def _jack_single(lam: Partition) -> SymFunc:
    return _jack_recurrence(lam)


def jack_J(lam, method: str = "auto") -> SymFunc:
    """Integral-form Jack function ``J_lam`` in the monomial basis."""
    lam = Partition(lam)
    n = lam.size
    if method == "auto" and n > GRAM_SCHMIDT_MAX_DEGREE:
        # single functions of high degree do not need the whole table
        return _jack_single(lam)
    return jack_table(n, method)[lam]


@lru_cache(maxsize=None)
def jack_J_powersum(lam: Partition) -> SymFunc:
    return convert(jack_J(lam), POWERSUM)


# -- basis changes and the inner product -------------------------------------


def _monomial_to_jack(f: SymFunc) -> SymFunc:
    rest = dict(f.terms)
    out = {}
    while rest:
        lam = max(rest)  # lex-largest is dominance-maximal among the support
        j = jack_J(lam)
        c = rest[lam] / j.terms[lam]
        out[lam] = c
        for tau, v in j.terms.items():
            nv = rest.get(tau, ZERO) - c * v
            if nv:
                rest[tau] = nv
            else:
                rest.pop(tau, None)
    return SymFunc(JACK, out)


def convert(f: SymFunc, target: str) -> SymFunc:
    """Re-express ``f`` in the ``target`` basis."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    if f.basis == MONOMIAL and target == POWERSUM:
        out: dict[Partition, AlphaRat] = {}
        for lam, c in f.terms.items():
            for rho, v in _monomial_to_power_table(lam.size)[lam].items():
                out[rho] = out.get(rho, ZERO) + c * v
        return SymFunc(POWERSUM, out)
    if f.basis == POWERSUM and target == MONOMIAL:
        out = {}
        for rho, c in f.terms.items():
            for kappa, v in power_to_monomial_row(rho).items():
                out[kappa] = out.get(kappa, ZERO) + c * v
        return SymFunc(MONOMIAL, out)
    if f.basis == JACK:
        out = {}
        for lam, c in f.terms.items():
            for kappa, v in jack_J(lam).terms.items():
                out[kappa] = out.get(kappa, ZERO) + c * v
        return convert(SymFunc(MONOMIAL, out), target)
    # target is the Jack basis
    return _monomial_to_jack(convert(f, MONOMIAL))


def hall_inner(f: SymFunc, g: SymFunc) -> AlphaRat:
    """alpha-Hall inner product; zero when the degrees differ."""
    if f.is_zero() or g.is_zero() or f.degree != g.degree:
        return ZERO
    fp = _powersum_terms(f)
    gp = _powersum_terms(g)
    return _inner_p(fp, gp)


def _powersum_terms(f: SymFunc) -> dict[Partition, AlphaRat]:
    if f.basis == JACK:
        out: dict[Partition, AlphaRat] = {}
        for lam, c in f.terms.items():
            for rho, v in jack_J_powersum(lam).terms.items():
                out[rho] = out.get(rho, ZERO) + c * v
        return out
    return convert(f, POWERSUM).terms


def jack_norm(lam) -> AlphaPoly:
    """``<J_lam, J_lam> = prod over boxes of upper hook * lower hook``."""
    lam = Partition(lam)
    out = ONE_POLY
    for b in lam.boxes():
        out = out * upper_hook_value(lam, b) * lower_hook_value(lam, b)
    return out


def jack_degree_cached(n: int) -> bool:
    return any(key[0] == n for key in _jack_tables)


__all__ = [
    "ALPHA",
    "BASES",
    "JACK",
    "MONOMIAL",
    "POWERSUM",
    "SymFunc",
    "convert",
    "hall_inner",
    "jack_J",
    "jack_J_powersum",
    "jack_norm",
    "jack_table",
    "monomial_in_power",
    "power_in_monomial",
    "zee",
]
