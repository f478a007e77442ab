"""Jack Littlewood-Richardson coefficients and related structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .alpha import ONE_POLY, ZERO, AlphaPoly, AlphaRat, Factored, bracket, factor_linear
from .errors import SizeMismatchError
from .partitions import (
    ORIGIN,
    Partition,
    classical_hook_product,
    horizontal_strips,
    partitions,
)
from .symfunc import (
    JACK,
    POWERSUM,
    SymFunc,
    _inner_p,
    _monomial_to_power_table,
    _monomial_to_jack,
    convert,
    jack_J,
    jack_J_powersum,
    jack_norm,
)


def _concat(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(a + b, reverse=True))


def _powersum_product(fp: dict, gp: dict) -> dict:
    out: dict[Partition, AlphaRat] = {}
    for a, x in fp.items():
        for b, y in gp.items():
            rho = _concat(a, b)
            out[rho] = out.get(rho, ZERO) + x * y
    return {k: v for k, v in out.items() if v}


def multiply(f: SymFunc, g: SymFunc, basis: Optional[str] = None) -> SymFunc:
    """Product of two symmetric functions, computed on power sums.

    The result is returned in ``basis`` (default: the basis of ``f``).
    """
    basis = basis or f.basis
    if f.is_zero() or g.is_zero():
        return SymFunc(basis)
    fp = _as_powersum(f)
    gp = _as_powersum(g)
    return convert(SymFunc(POWERSUM, _powersum_product(fp, gp)), basis)


def _as_powersum(f: SymFunc) -> dict:
    if f.basis == JACK and len(f.terms) == 1:
        (lam, c), = f.terms.items()
        return {k: c * v for k, v in jack_J_powersum(lam).terms.items()}
    return convert(f, POWERSUM).terms


@lru_cache(maxsize=4096)
def _jack_product_p(mu: Partition, nu: Partition) -> dict:
    return _powersum_product(jack_J_powersum(mu).terms, jack_J_powersum(nu).terms)


@dataclass
class LrTable:
    """The coefficients ``g_{mu nu}^gamma`` of ``J_mu J_nu`` in the J basis."""

    mu: Partition
    nu: Partition
    entries: dict = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return self.mu.size + self.nu.size

    def __getitem__(self, gamma) -> AlphaRat:
        return self.entries.get(Partition(gamma), ZERO)

    def as_symfunc(self) -> SymFunc:
        return SymFunc(JACK, self.entries)

    def rows(self) -> list[tuple[Partition, AlphaRat, AlphaRat]]:
        """``(gamma, g, stanley)`` in reverse-lexicographic order of gamma."""
        return [
            (gamma, g, g * jack_norm(gamma))
            for gamma, g in sorted(self.entries.items(), key=lambda kv: kv[0], reverse=True)
        ]

    def to_json(self, factor_bound: int = 0) -> list[dict]:
        out = []
        for gamma, g, st in self.rows():
            row = {"gamma": list(gamma), "g": g.to_json(), "stanley": None, "factored": None}
            if st.is_poly():
                row["stanley"] = st.as_poly().to_json()
                if factor_bound:
                    fac = factor_linear(st.as_poly(), factor_bound)
                    row["factored"] = fac.to_json() if fac else None
            out.append(row)
        return out


def jack_lr(mu, nu) -> LrTable:
    """All nonzero ``g_{mu nu}^gamma``, each computed as ``<J_mu J_nu, J_gamma> / |J_gamma|^2``."""
    mu, nu = Partition(mu), Partition(nu)
    prod = _jack_product_p(mu, nu)
    entries = {}
    for gamma in partitions(mu.size + nu.size):
        if not (gamma.contains(mu) and gamma.contains(nu)):
            continue
        ip = _inner_p(prod, jack_J_powersum(gamma).terms)
        if ip:
            entries[gamma] = ip / jack_norm(gamma)
    return LrTable(mu, nu, entries)


def jack_lr_triangular(mu, nu) -> LrTable:
    """Same coefficients obtained by re-expanding the product in the J basis.

    Used only as an independent cross-check of :func:`jack_lr`.
    """
    mu, nu = Partition(mu), Partition(nu)
    prod = convert(SymFunc(POWERSUM, _jack_product_p(mu, nu)), "monomial")
    return LrTable(mu, nu, dict(_monomial_to_jack(prod).terms))


def _check_sizes(mu: Partition, nu: Partition, lam: Partition) -> None:
    if mu.size + nu.size != lam.size:
        raise SizeMismatchError(
            f"|{mu.label()}| + |{nu.label()}| != |{lam.label()}|"
        )


def stanley_coeff(mu, nu, lam) -> AlphaRat:
    """Stanley structure coefficient ``<J_mu J_nu, J_lam>``."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    _check_sizes(mu, nu, lam)
    if not (lam.contains(mu) and lam.contains(nu)):
        return ZERO
    return _inner_p(_jack_product_p(mu, nu), jack_J_powersum(lam).terms)


def stanley_poly(mu, nu, lam) -> AlphaPoly:
    """:func:`stanley_coeff` as a polynomial; raises ValueError if it is not one."""
    c = stanley_coeff(mu, nu, lam)
    if not c.is_poly():
        raise ValueError(f"<J_{mu} J_{nu}, J_{lam}> = {c} is not a polynomial")
    return c.as_poly()


@dataclass
class StanleyViolation:
    mu: Partition
    nu: Partition
    lam: Partition
    value: AlphaRat


def stanley_triples(max_size: int) -> list[tuple[Partition, Partition, Partition]]:
    """Triples ``(mu, nu, lam)`` with ``|mu| >= |nu| >= 1``, ``|lam| <= max_size``,
    ``mu, nu`` contained in ``lam``; pairs of equal size are taken once."""
    out = []
    for n in range(2, max_size + 1):
        for a in range(n - 1, (n - 1) // 2, -1):
            b = n - a
            for mu in partitions(a):
                for nu in partitions(b):
                    if a == b and nu > mu:
                        continue
                    for lam in partitions(n):
                        if lam.contains(mu) and lam.contains(nu):
                            out.append((mu, nu, lam))
    return out


def stanley_check(mu, nu, lam) -> Optional[StanleyViolation]:
    """None when ``<J_mu J_nu, J_lam>`` lies in Z_{>=0}[alpha]."""
    c = stanley_coeff(mu, nu, lam)
    if c.is_poly() and c.as_poly().is_nonnegative_integral():
        return None
    return StanleyViolation(Partition(mu), Partition(nu), Partition(lam), c)


# -- varpi and hatted coefficients ------------------------------------------


def varpi(mu) -> AlphaPoly:
    """Product of ``[b]`` over the boxes of ``mu`` other than the origin."""
    out = ONE_POLY
    for b in Partition(mu).boxes():
        if b != ORIGIN:
            out = out * bracket(b)
    return out


def hat_g(mu, nu, gamma) -> AlphaRat:
    mu, nu, gamma = Partition(mu), Partition(nu), Partition(gamma)
    _check_sizes(mu, nu, gamma)
    g = jack_lr(mu, nu)[gamma]
    if not g:
        return ZERO
    return g * varpi(gamma) / (varpi(mu) * varpi(nu))


# -- classical coefficients ---------------------------------------------------


@lru_cache(maxsize=None)
def _powersum_at(lam: Partition, a: Fraction) -> dict:
    # J_lam specialized at alpha = a, expanded in power sums with rational coefficients
    table = _monomial_to_power_table(lam.size)
    out: dict[Partition, Fraction] = {}
    for kappa, c in jack_J(lam).terms.items():
        cv = c.evaluate_at(a)
        for rho, v in table[kappa].items():
            out[rho] = out.get(rho, Fraction(0)) + cv * v
    return {k: v for k, v in out.items() if v}


def _zee_weight(rho: Partition, a: Fraction) -> Fraction:
    from .symfunc import zee

    return zee(rho) * a ** len(rho)


def _specialized_stanley(mu: Partition, nu: Partition, lam: Partition, a: Fraction) -> Fraction:
    fp, gp, hp = _powersum_at(mu, a), _powersum_at(nu, a), _powersum_at(lam, a)
    prod: dict[Partition, Fraction] = {}
    for x, cx in fp.items():
        for y, cy in gp.items():
            rho = _concat(x, y)
            prod[rho] = prod.get(rho, Fraction(0)) + cx * cy
    return sum(
        (c * hp[rho] * _zee_weight(rho, a) for rho, c in prod.items() if rho in hp),
        Fraction(0),
    )


def schur_lr(mu, nu, lam) -> int:
    """Classical Littlewood-Richardson coefficient ``c_{mu nu}^lam``.

    Obtained from the Jack coefficient at ``alpha = 1``, where ``J_lam = H_lam s_lam``
    with ``H`` the classical hook product.
    """
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    _check_sizes(mu, nu, lam)
    if not (lam.contains(mu) and lam.contains(nu)):
        return 0
    one = Fraction(1)
    g_at_1 = _specialized_stanley(mu, nu, lam, one) / jack_norm(lam)(one)
    c = g_at_1 * classical_hook_product(lam) / (classical_hook_product(mu) * classical_hook_product(nu))
    if c.denominator != 1 or c < 0:
        raise ArithmeticError(f"c_{{{mu.label()},{nu.label()}}}^{{{lam.label()}}} = {c} is not a count")
    return int(c)


def kostka(lam, weight: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``weight``.

    Each tableau is a chain of horizontal strips, one per entry value.
    """
    lam = Partition(lam)
    weight = list(weight)
    if any(w < 0 for w in weight):
        raise ValueError("content entries must be non-negative")
    if sum(weight) != lam.size:
        raise SizeMismatchError(f"|{lam.label()}| != {sum(weight)}")

    @lru_cache(maxsize=None)
    def count(shape: Partition, i: int) -> int:
        if i == len(weight):
            return 1 if shape == lam else 0
        total = 0
        for nxt in horizontal_strips(shape, weight[i]):
            if lam.contains(nxt):
                total += count(nxt, i + 1)
        return total

    return count(Partition(), 0)


def format_coefficient(c: AlphaRat, unicode: bool = False, factor_bound: int = 12) -> str:
    """Factored rendering of a polynomial coefficient when possible."""
    if c.is_poly() and not c.is_zero():
        fac: Optional[Factored] = factor_linear(c.as_poly(), factor_bound)
        if fac is not None:
            return fac.format(unicode)
    return c.format(unicode)
