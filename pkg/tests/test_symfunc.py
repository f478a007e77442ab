from fractions import Fraction
from math import factorial

import pytest

from jacklr.alpha import AlphaPoly, AlphaRat
from jacklr.partitions import Partition, classical_hook_product, conjugate, partitions
from jacklr.symfunc import (
    JACK,
    MONOMIAL,
    POWERSUM,
    SymFunc,
    convert,
    hall_inner,
    jack_J,
    jack_norm,
    jack_table,
    power_in_monomial,
    zee,
)
from jacklr.lr import kostka
from oracles import monomial_coefficient, power_sum_polynomial, zero_one_matrices

P = Partition
A = AlphaPoly


def test_zee():
    assert zee(P([1, 1, 1])) == 6
    assert zee(P([2, 1])) == 2
    assert zee(P([3])) == 3
    assert sum(Fraction(factorial(5), zee(rho)) for rho in partitions(5)) == factorial(5)


@pytest.mark.parametrize("rho", [rho for n in range(1, 6) for rho in partitions(n)])
def test_power_to_monomial_against_expansion(rho):
    # p_rho in n variables, read off at each monomial exponent
    nvars = rho.size
    poly = power_sum_polynomial(rho, nvars)
    expected = {kappa: monomial_coefficient(poly, kappa, nvars) for kappa in partitions(rho.size)}
    got = power_in_monomial(rho)
    assert {k: got.coefficient(k) for k in expected} == {k: AlphaRat.coerce(v) for k, v in expected.items()}


@pytest.mark.parametrize("n", range(1, 6))
def test_basis_change_roundtrip(n):
    for lam in partitions(n):
        m = SymFunc.basis_element(MONOMIAL, lam)
        assert convert(convert(m, POWERSUM), MONOMIAL) == m
        j = SymFunc.basis_element(JACK, lam)
        assert convert(convert(j, MONOMIAL), JACK) == j


def test_unknown_basis_and_inhomogeneous():
    with pytest.raises(ValueError):
        SymFunc("schur")
    with pytest.raises(ValueError):
        SymFunc(MONOMIAL, {P([1]): 1, P([2]): 1})


@pytest.mark.parametrize("n", range(1, 7))
def test_gram_schmidt_matches_recurrence(n):
    gs = jack_table(n, "gram-schmidt")
    rec = jack_table(n, "recurrence")
    assert gs == rec


@pytest.mark.parametrize("n", range(1, 6))
def test_extension_order_irrelevant(n):
    assert jack_table(n, "gram-schmidt", "lex") == jack_table(n, "gram-schmidt", "n")


@pytest.mark.parametrize("lam", [lam for n in range(1, 7) for lam in partitions(n)])
def test_normalization_and_triangularity(lam):
    j = jack_J(lam)
    n = lam.size
    assert j.coefficient(P([1] * n)) == factorial(n)
    assert all(kappa <= lam for kappa in j.terms)


@pytest.mark.parametrize("lam", [lam for n in range(1, 7) for lam in partitions(n)])
def test_alpha_one_is_scaled_schur(lam):
    # J_lam(1) = H_lam * s_lam and s_lam = sum_kappa K_{lam,kappa} m_kappa
    j = jack_J(lam)
    hook = classical_hook_product(lam)
    for kappa in partitions(lam.size):
        assert j.coefficient(kappa).evaluate_at(1) == hook * kostka(lam, kappa)


@pytest.mark.parametrize("lam", [lam for n in range(1, 7) for lam in partitions(n)])
def test_alpha_zero_is_scaled_elementary(lam):
    # J_lam(0) = prod_i (lam'_i)! e_{lam'}, and <e_{lam'}, m_kappa> counts 0/1 matrices
    j = jack_J(lam)
    lc = conjugate(lam)
    scale = 1
    for part in lc:
        scale *= factorial(part)
    for kappa in partitions(lam.size):
        assert j.coefficient(kappa).evaluate_at(0) == scale * zero_one_matrices(lc, kappa)


@pytest.mark.parametrize("n", range(1, 7))
def test_orthogonality_and_norm(n):
    ps = partitions(n)
    for i, a in enumerate(ps):
        for b in ps[i + 1:]:
            assert hall_inner(jack_J(a), jack_J(b)) == 0
        assert hall_inner(jack_J(a), jack_J(a)) == jack_norm(a)


def test_norm_fixture():
    # J_21: upper hooks 2a+1, a, a and lower hooks a+2, 1, 1
    assert jack_norm(P([2, 1])) == A((0, 0, 1)) * A((1, 2)) * A((2, 1))


def test_jack_json_roundtrip():
    j = jack_J(P([2, 2, 1]))
    assert SymFunc.from_json(j.to_json()) == j


def test_degree_eight_by_recurrence():
    lam = P([3, 3, 2])
    j = jack_J(lam)
    assert j.coefficient(P([1] * 8)) == factorial(8)
    assert hall_inner(j, j) == jack_norm(lam)


def test_cache_dir_persistence(tmp_path, monkeypatch):
    import jacklr.symfunc as sf

    monkeypatch.setenv("JACK_CACHE_DIR", str(tmp_path))
    monkeypatch.setattr(sf, "_jack_tables", {})
    first = sf.jack_table(4)
    files = list(tmp_path.iterdir())
    assert [f.name for f in files] == ["jackJ_deg4_gram-schmidt-lex.json"]
    monkeypatch.setattr(sf, "_jack_tables", {})
    assert sf.jack_table(4) == first
