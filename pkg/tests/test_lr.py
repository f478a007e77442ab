import pytest

from jacklr.alpha import ALPHA, AlphaPoly, AlphaRat
from jacklr.errors import SizeMismatchError
from jacklr.lr import (
    hat_g,
    jack_lr,
    jack_lr_triangular,
    kostka,
    multiply,
    schur_lr,
    stanley_check,
    stanley_coeff,
    stanley_triples,
    varpi,
)
from jacklr.partitions import Partition, complement, partitions, rectangle
from jacklr.symfunc import JACK, MONOMIAL, POWERSUM, SymFunc, convert, jack_J
from oracles import lr_tableaux_count, ssyt_count

P = Partition
A = AlphaPoly


def _pairs(max_total, min_each=0):
    out = []
    for a in range(min_each, max_total + 1):
        for b in range(min_each, max_total + 1 - a):
            for mu in partitions(a):
                for nu in partitions(b):
                    out.append((mu, nu))
    return out


def test_products_of_basis_elements():
    p2, p1 = SymFunc.basis_element(POWERSUM, [2]), SymFunc.basis_element(POWERSUM, [1])
    assert multiply(p2, p1) == SymFunc.basis_element(POWERSUM, [2, 1])
    m1 = SymFunc.basis_element(MONOMIAL, [1])
    assert multiply(m1, m1) == SymFunc(MONOMIAL, {P([2]): 1, P([1, 1]): 2})


def test_single_box_coefficients():
    table = jack_lr([1], [1])
    one_plus = A((1, 1))
    assert table[[2]] == AlphaRat(1, one_plus)
    assert table[[1, 1]] == AlphaRat(ALPHA, one_plus)
    j1 = SymFunc.basis_element(JACK, [1])
    assert convert(multiply(j1, j1), JACK) == table.as_symfunc()


def test_stanley_small_values():
    assert stanley_coeff([1], [1], [2]) == A((0, 0, 2))
    # the norm of J_11 is 2a(1+a), so the coefficient is 2a^2
    assert stanley_coeff([1], [1], [1, 1]) == A((0, 0, 2))
    assert stanley_coeff([2], [1], [1, 1, 1]) == 0
    assert jack_lr([2], [1])[[1, 1, 1]] == 0
    with pytest.raises(SizeMismatchError):
        stanley_coeff([1], [1], [3])


def test_stanley_worked_value():
    expected = A((2 ** 9 * 3 ** 2,)) * ALPHA ** 6
    for (c, k) in [((1, 1), 4), ((2, 1), 1), ((3, 1), 2), ((4, 1), 2), ((1, 2), 1), ((1, 3), 1),
                   ((2, 3), 2), ((5, 3), 1)]:
        expected = expected * A(c) ** k
    assert stanley_coeff([4, 2, 2, 1, 1], [2, 1, 1], [4, 3, 3, 3, 1]) == expected


@pytest.mark.parametrize("mu,nu", _pairs(5, 1))
def test_triangular_route_agrees(mu, nu):
    assert jack_lr(mu, nu).entries == jack_lr_triangular(mu, nu).entries


@pytest.mark.parametrize("mu,nu", _pairs(7, 1))
def test_table_reexpands_product(mu, nu):
    table = jack_lr(mu, nu)
    assert table.entries == jack_lr(nu, mu).entries
    assert all(g.contains(mu) and g.contains(nu) for g in table.entries)
    direct = multiply(jack_J(mu), jack_J(nu), MONOMIAL)
    assert convert(table.as_symfunc(), MONOMIAL) == direct


def test_rows_order_and_json():
    rows = jack_lr([1], [1]).rows()
    assert [r[0] for r in rows] == [P([2]), P([1, 1])]
    js = jack_lr([1], [1]).to_json(12)
    assert js[0]["gamma"] == [2]
    assert js[0]["factored"] == {"constant": [2, 1], "factors": [[1, 0, 2]]}


def test_varpi():
    assert varpi([1]) == 1
    assert varpi([2, 1]) == A((0, -1))
    assert varpi([]) == 1


@pytest.mark.parametrize("mu,nu", _pairs(6, 1))
def test_hat_g_symmetric(mu, nu):
    for gamma in jack_lr(mu, nu).entries:
        assert hat_g(mu, nu, gamma) == hat_g(nu, mu, gamma)


def test_classical_fixtures():
    assert schur_lr([4, 2, 2, 1, 1], [2, 1, 1], [4, 3, 3, 3, 1]) == 1
    assert schur_lr([3, 2, 2, 1], complement(P([3, 2, 2, 1]), 3, 4), rectangle(3, 4)) == 1
    assert schur_lr([1], [1], [2]) == 1
    assert kostka([4, 2, 2, 1, 1], [2, 2, 2, 3, 1]) == 3
    assert kostka([2], [1, 1]) == 1
    assert kostka([2, 1], [2, 1]) == 1
    with pytest.raises(SizeMismatchError):
        kostka([2], [1])


@pytest.mark.parametrize("lam", [lam for n in range(2, 7) for lam in partitions(n)])
def test_schur_lr_against_tableaux(lam):
    for a in range(1, lam.size):
        for mu in partitions(a):
            for nu in partitions(lam.size - a):
                assert schur_lr(mu, nu, lam) == lr_tableaux_count(mu, nu, lam)


@pytest.mark.parametrize("lam", [lam for n in range(1, 7) for lam in partitions(n)])
def test_kostka_against_fillings(lam):
    for w in partitions(lam.size):
        assert kostka(lam, w) == ssyt_count(lam, w)
        # content order does not matter
        assert kostka(lam, list(reversed(w)) + [0]) == kostka(lam, w)


def test_stanley_triples_and_check():
    triples = stanley_triples(3)
    assert (P([1]), P([1]), P([2])) in triples
    assert (P([2]), P([1]), P([2, 1])) in triples
    assert all(stanley_check(*t) is None for t in stanley_triples(5))
