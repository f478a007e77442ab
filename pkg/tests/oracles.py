"""Brute-force reference computations used only by the tests.

Nothing here shares code with the package beyond the Partition type.
"""

from collections import Counter
from itertools import product

from jacklr.partitions import Partition


def power_sum_polynomial(rho, nvars):
    """``p_rho`` in ``nvars`` variables as a Counter over exponent tuples."""
    poly = Counter({(0,) * nvars: 1})
    for part in rho:
        nxt = Counter()
        for expo, c in poly.items():
            for i in range(nvars):
                e = list(expo)
                e[i] += part
                nxt[tuple(e)] += c
        poly = nxt
    return poly


def monomial_coefficient(poly, kappa, nvars):
    """Coefficient of ``x^kappa`` (padded with zeros) in a symmetric polynomial."""
    expo = tuple(list(kappa) + [0] * (nvars - len(kappa)))
    return poly.get(expo, 0)


def ssyt_count(shape, content):
    """Semistandard tableaux of ``shape`` with ``content``, by filling cell by cell."""
    shape = list(shape)
    cells = [(y, x) for y in range(len(shape)) for x in range(shape[y])]
    values = [v for v, k in enumerate(content, start=1) for _ in range(k)]
    need = Counter(values)
    count = 0
    maxv = len(content)

    def rec(i, filling, used):
        nonlocal count
        if i == len(cells):
            count += used == need
            return
        y, x = cells[i]
        for v in range(1, maxv + 1):
            if used[v] >= need[v]:
                continue
            if x > 0 and filling[(y, x - 1)] > v:
                continue
            if y > 0 and filling[(y - 1, x)] >= v:
                continue
            filling[(y, x)] = v
            used[v] += 1
            rec(i + 1, filling, used)
            used[v] -= 1
            del filling[(y, x)]

    rec(0, {}, Counter())
    return count


def lr_tableaux_count(mu, nu, lam):
    """Littlewood-Richardson tableaux of shape ``lam/mu`` and content ``nu``.

    Rows weakly increase, columns strictly increase, and the reverse row
    reading word (right to left, bottom row first) is a lattice word.
    """
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if not lam.contains(mu) or lam.size != mu.size + nu.size:
        return 0
    cells = [(y, x) for y in range(len(lam)) for x in range(mu.part(y), lam[y])]
    k = len(nu)
    total = 0
    for fill in product(range(1, k + 1), repeat=len(cells)):
        f = dict(zip(cells, fill))
        if Counter(fill) != Counter({i + 1: nu[i] for i in range(k)}):
            continue
        ok = True
        for (y, x), v in f.items():
            if (y, x - 1) in f and f[(y, x - 1)] > v:
                ok = False
                break
            if (y - 1, x) in f and f[(y - 1, x)] >= v:
                ok = False
                break
        if not ok:
            continue
        seen = Counter()
        for y in range(len(lam)):
            for x in range(lam[y] - 1, mu.part(y) - 1, -1):
                v = f[(y, x)]
                seen[v] += 1
                if v > 1 and seen[v] > seen[v - 1]:
                    ok = False
                    break
            if not ok:
                break
        total += ok
    return total


def zero_one_matrices(row_sums, col_sums):
    """Number of 0/1 matrices with the given row and column sums."""
    rows = list(row_sums)
    cols = list(col_sums)

    def rec(i, remaining):
        if i == len(rows):
            return 1 if all(c == 0 for c in remaining) else 0
        total = 0
        n = len(remaining)
        for choice in product((0, 1), repeat=n):
            if sum(choice) != rows[i]:
                continue
            if any(c > r for c, r in zip(choice, remaining)):
                continue
            total += rec(i + 1, tuple(r - c for r, c in zip(remaining, choice)))
        return total

    return rec(0, tuple(cols))
