"""Exact arithmetic in Q[alpha] and Q(alpha).

:class:`AlphaPoly` is a univariate polynomial with :class:`fractions.Fraction`
coefficients, :class:`AlphaRat` a reduced quotient of two of them with a
monic denominator.  Both are immutable and canonical, so equal values compare
and hash equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Union

from .errors import PoleError

Number = Union[int, Fraction]

_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _frac(c) -> Fraction:
    return c if type(c) is Fraction else Fraction(c)


class AlphaPoly:
    """Polynomial in alpha; ``coeffs[i]`` multiplies ``alpha**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, cs: list) -> AlphaPoly:
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def constant(cls, c: Number) -> AlphaPoly:
        return cls((c,))

    # -- structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_nonnegative_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.coeffs)

    def monic(self) -> AlphaPoly:
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return AlphaPoly._raw([c / lc for c in self.coeffs])

    def __call__(self, a: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def coerce(other) -> Optional[AlphaPoly]:
        if isinstance(other, AlphaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return AlphaPoly((other,))
        return None

    def __add__(self, other):
        o = AlphaPoly.coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return AlphaPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return AlphaPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = AlphaPoly.coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = AlphaPoly.coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO_POLY
            return AlphaPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return AlphaPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> AlphaPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE_POLY, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple[AlphaPoly, AlphaPoly]:
        o = AlphaPoly.coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlen = len(o.coeffs)
        lc = o.coeffs[-1]
        if len(rem) < dlen:
            return ZERO_POLY, self
        quot = [Fraction(0)] * (len(rem) - dlen + 1)
        for k in range(len(rem) - dlen, -1, -1):
            q = rem[k + dlen - 1] / lc
            quot[k] = q
            if q:
                for j, c in enumerate(o.coeffs):
                    rem[k + j] -= q * c
        return AlphaPoly._raw(quot), AlphaPoly._raw(rem[: dlen - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> AlphaPoly:
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        o = AlphaPoly.coerce(other)
        if o is None:
            if isinstance(other, AlphaRat):
                return other == self
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- rendering -------------------------------------------------------

    def format(self, unicode: bool = False) -> str:
        """Render in ascending powers, e.g. ``1 + 3*alpha + 2*alpha^2``."""
        if not self.coeffs:
            return "0"
        var = "α" if unicode else "alpha"
        pieces = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else (
                    var + str(i).translate(_SUPERSCRIPTS) if unicode else f"{var}^{i}"
                )
                if mag == 1:
                    body = mono
                else:
                    body = f"{mag}{mono}" if unicode and mag.denominator == 1 else f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"AlphaPoly({self.format()})"

    def to_json(self) -> list[list[int]]:
        return [[c.numerator, c.denominator] for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> AlphaPoly:
        return cls(Fraction(n, d) for n, d in data)


ZERO_POLY = AlphaPoly()
ONE_POLY = AlphaPoly((1,))
ALPHA = AlphaPoly((0, 1))


def poly_gcd(a: AlphaPoly, b: AlphaPoly) -> AlphaPoly:
    """Monic greatest common divisor (zero if both arguments are zero)."""
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


class AlphaRat:
    """Element of Q(alpha) in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        n = AlphaPoly.coerce(num) if not isinstance(num, AlphaRat) else None
        d = AlphaPoly.coerce(den) if not isinstance(den, AlphaRat) else None
        if n is None or d is None:
            q = AlphaRat.coerce(num) / AlphaRat.coerce(den)
            self.num, self.den = q.num, q.den
            return
        if d.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(n, d)

    @classmethod
    def _raw(cls, num: AlphaPoly, den: AlphaPoly) -> AlphaRat:
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @staticmethod
    def coerce(x) -> AlphaRat:
        if isinstance(x, AlphaRat):
            return x
        if isinstance(x, AlphaPoly):
            return AlphaRat._raw(x, ONE_POLY)
        if isinstance(x, (int, Fraction)):
            return AlphaRat._raw(AlphaPoly((x,)), ONE_POLY)
        raise TypeError(f"cannot interpret {x!r} as an element of Q(alpha)")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == ONE_POLY

    def as_poly(self) -> AlphaPoly:
        if not self.is_poly():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def evaluate_at(self, a: Number) -> Fraction:
        d = self.den(a)
        if d == 0:
            raise PoleError(f"{self} has a pole at alpha = {a}")
        return self.num(a) / d

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        try:
            o = AlphaRat.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            if self.den is ONE_POLY or self.den == ONE_POLY:
                return AlphaRat._raw(self.num + o.num, ONE_POLY)
            return AlphaRat(self.num + o.num, self.den)
        return AlphaRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return AlphaRat._raw(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = AlphaRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return AlphaRat.coerce(other) - self

    def __mul__(self, other):
        try:
            o = AlphaRat.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return ZERO
        if self.den == ONE_POLY and o.den == ONE_POLY:
            return AlphaRat._raw(self.num * o.num, ONE_POLY)
        # cross-cancel before multiplying to keep degrees small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        num = self.num.exact_div(g1) * o.num.exact_div(g2)
        den = self.den.exact_div(g2) * o.den.exact_div(g1)
        lc = den.leading
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        return AlphaRat._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> AlphaRat:
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(alpha)")
        lc = self.num.leading
        return AlphaRat._raw(self.den * (1 / lc), self.num * (1 / lc))

    def __truediv__(self, other):
        try:
            o = AlphaRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return AlphaRat.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> AlphaRat:
        if k < 0:
            return self.inverse() ** (-k)
        return AlphaRat._raw(self.num ** k, self.den ** k)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        try:
            o = AlphaRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den == ONE_POLY:
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    # -- rendering -------------------------------------------------------

    def display_parts(self) -> tuple[AlphaPoly, AlphaPoly]:
        """Numerator and denominator rescaled to coprime integer coefficients."""
        coeffs = self.num.coeffs + self.den.coeffs
        scale = 1
        for c in coeffs:
            scale = scale * c.denominator // gcd(scale, c.denominator)
        content = 0
        for c in coeffs:
            content = gcd(content, int(c * scale))
        factor = Fraction(scale, content or 1)
        return self.num * factor, self.den * factor

    def format(self, unicode: bool = False) -> str:
        if self.is_poly():
            return self.num.format(unicode)
        num, den = self.display_parts()
        text = num.format(unicode)
        if len([c for c in num.coeffs if c]) > 1:
            text = f"({text})"
        if den.degree == 0:
            return f"{text}/{den.format(unicode)}"
        return f"{text}/({den.format(unicode)})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"AlphaRat({self.format()})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> AlphaRat:
        return cls(AlphaPoly.from_json(data["num"]), AlphaPoly.from_json(data["den"]))


def _normalize(num: AlphaPoly, den: AlphaPoly) -> tuple[AlphaPoly, AlphaPoly]:
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
    lc = den.leading
    if lc != 1:
        num, den = num * (1 / lc), den * (1 / lc)
    return num, den


ZERO = AlphaRat._raw(ZERO_POLY, ONE_POLY)
ONE = AlphaRat._raw(ONE_POLY, ONE_POLY)


def bracket(b) -> AlphaPoly:
    """The linear form ``[(x, y)] = alpha*x - y`` of a lattice point."""
    x, y = b
    return AlphaPoly((-y, x))


@dataclass(frozen=True)
class Factored:
    """``constant * prod [x, y]**mult`` with primitive brackets, x >= 1."""

    constant: Fraction
    factors: tuple[tuple[int, int, int], ...]

    def expand(self) -> AlphaPoly:
        p = AlphaPoly.constant(self.constant)
        for x, y, k in self.factors:
            p = p * bracket((x, y)) ** k
        return p

    def to_json(self) -> dict:
        return {
            "constant": [self.constant.numerator, self.constant.denominator],
            "factors": [list(f) for f in self.factors],
        }

    def format(self, unicode: bool = False) -> str:
        var = "α" if unicode else "alpha"
        sep = "·" if unicode else " * "

        def power(body: str, k: int) -> str:
            if k == 1:
                return body
            return body + str(k).translate(_SUPERSCRIPTS) if unicode else f"{body}^{k}"

        parts = []
        c = self.constant
        if c < 0:
            parts.append("-1")
            c = -c
        if c != 1 or not self.factors:
            if c.denominator == 1:
                parts.extend(power(str(q), k) for q, k in _small_factorization(c.numerator))
            else:
                parts.append(str(c))
        for x, y, k in self.factors:
            lin = var if x == 1 else (f"{x}{var}" if unicode else f"{x}*{var}")
            if y == 0:
                parts.append(power(lin, k))
            else:
                body = f"({-y}+{lin})" if unicode else f"({-y} + {lin})"
                parts.append(power(body, k))
        if unicode:
            # parenthesised factors are juxtaposed, as in 3²·α⁶(1+α)⁴
            out = parts[0]
            for piece in parts[1:]:
                out += piece if piece.startswith("(") else sep + piece
            return out
        return sep.join(parts)

    def __str__(self):
        return self.format()


def _small_factorization(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while n > 1 and p * p <= n:
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        if k:
            out.append((p, k))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def factor_linear(p: AlphaPoly, search_bound: int) -> Optional[Factored]:
    """Write ``p`` as a constant times a product of brackets ``[x, y]``.

    Only brackets with ``1 <= x <= search_bound`` and ``|y| <= search_bound``
    are tried.  Returns None when ``p`` is zero or does not split that way.
    """
    if p.is_zero():
        return None
    found: dict[tuple[int, int], int] = {}
    rest = p
    while rest.degree >= 1:
        # zero root first: the bracket [1, 0] = alpha
        if rest.coeffs[0] == 0:
            rest = AlphaPoly._raw(list(rest.coeffs[1:]))
            found[(1, 0)] = found.get((1, 0), 0) + 1
            continue
        # rational root theorem on the integer-scaled polynomial
        scale = 1
        for c in rest.coeffs:
            scale = scale * c.denominator // gcd(scale, c.denominator)
        ints = [int(c * scale) for c in rest.coeffs]
        root = None
        for x in _divisors(ints[-1]):
            if x > search_bound:
                break
            for y0 in _divisors(ints[0]):
                if y0 > search_bound:
                    break
                if gcd(x, y0) != 1:
                    continue
                for y in (y0, -y0):
                    if rest(Fraction(y, x)) == 0:
                        root = (x, y)
                        break
                if root:
                    break
            if root:
                break
        if root is None:
            return None
        rest = rest.exact_div(bracket(root))
        found[root] = found.get(root, 0) + 1
    factors = tuple(sorted(((x, y, k) for (x, y), k in found.items()), key=lambda f: (f[0], -f[1])))
    return Factored(rest.coeffs[0], factors)
