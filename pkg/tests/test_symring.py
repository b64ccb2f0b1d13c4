from fractions import Fraction

import pytest

from src.partition import partitions_of, partitions_up_to, z_of
from src.symring import (
    Basis,
    BasisMismatchError,
    SymFunc,
    convert,
    gen_e,
    gen_h,
    gen_hcheck,
    gen_hhat,
    gen_p,
    hall_inner,
    invalidate_caches,
    is_integral,
    multiply,
    omega,
    schur,
    to_p,
    to_schur_expansion,
)


def p(*terms):
    return SymFunc(Basis.P, dict(terms))


def test_generadores_en_p():
    """h_n, e_n y p_n expresados en la base de potencias."""
    assert gen_h(2) == p(((1, 1), Fraction(1, 2)), ((2,), Fraction(1, 2)))
    assert gen_e(2) == p(((1, 1), Fraction(1, 2)), ((2,), Fraction(-1, 2)))
    assert gen_h(0) == SymFunc.one()
    assert not gen_h(-1)
    assert gen_p(3) == p(((3,), 1))


def test_schur_21():
    """s_(2,1) = (p_1³ − p_3)/3."""
    assert schur((2, 1)) == p(((1, 1, 1), Fraction(1, 3)), ((3,), Fraction(-1, 3)))


def test_bases_distintas_no_se_suman():
    """Sumar elementos de bases distintas sin convertir es un error."""
    with pytest.raises(BasisMismatchError):
        gen_h(1) + SymFunc.one(Basis.H)


def test_multiplicacion_concatena():
    """En P el producto de monomios concatena partes."""
    assert multiply(gen_p(2), gen_p(1)) == p(((2, 1), 1))


def test_cambio_de_base():
    """Conversiones entre P, H y E."""
    h2 = SymFunc.monomial(Basis.H, (2,))
    assert to_p(h2) == gen_h(2)
    assert convert(gen_h(2), Basis.H) == h2
    assert convert(gen_h(2) - gen_e(2), Basis.E) == SymFunc(Basis.E, {(1, 1): 1, (2,): -2})


def test_omega():
    """ω intercambia h y e, y conjuga los índices de Schur."""
    assert omega(gen_h(3)) == gen_e(3)
    assert omega(SymFunc.monomial(Basis.H, (2, 1))) == SymFunc.monomial(Basis.E, (2, 1))
    assert omega(SymFunc.monomial(Basis.SCHUR, (3, 1))) == SymFunc.monomial(Basis.SCHUR, (2, 1, 1))


def test_schur_ortonormal():
    """⟨s_λ, s_μ⟩ = δ y ⟨p_2, p_2⟩ = z_(2)."""
    assert hall_inner(schur((2, 1)), schur((2, 1))) == 1
    assert hall_inner(schur((2, 1)), schur((3,))) == 0
    assert hall_inner(gen_p(2), gen_p(2)) == 2


@pytest.mark.slow
def test_schur_ortonormal_hasta_peso_ocho():
    """⟨s_λ, s_μ⟩ = δ_λμ para todos los pares de peso ≤ 8."""
    for n in range(9):
        lams = partitions_of(n)
        for lam in lams:
            for mu in lams:
                assert hall_inner(schur(lam), schur(mu)) == (1 if lam == mu else 0), (lam, mu)


def test_expansion_schur():
    """Expansión en Schur y test de integralidad."""
    expansion = to_schur_expansion(gen_e(2) - 1)
    assert expansion == SymFunc(Basis.SCHUR, {(1, 1): 1, (): -1})
    assert is_integral(expansion)
    assert not is_integral(to_schur_expansion(gen_p(2) / 2))


def test_producto_en_schur_littlewood_richardson():
    """s_1·s_1 = s_2 + s_(1,1)."""
    s1 = SymFunc.monomial(Basis.SCHUR, (1,))
    assert multiply(s1, s1) == SymFunc(Basis.SCHUR, {(2,): 1, (1, 1): 1})


def test_grados():
    """Grado, pesos presentes y componentes homogéneas."""
    f = gen_h(3) + gen_h(1)
    assert f.degree == 3
    assert f.weights() == [1, 3]
    assert f.component(1) == gen_h(1)
    assert not f.is_homogeneous()
    assert SymFunc.zero().degree == -1


def test_truncar():
    """truncate(d) conserva solo los términos de peso ≤ d."""
    f = gen_h(3) + gen_h(1) + 2
    assert f.truncate(1) == gen_h(1) + 2
    assert f.truncate(0) == 2
    assert f.truncate(3) == f
    assert not gen_h(2).truncate(1)


def test_hash_coherente_con_igualdad_numerica():
    """Las constantes hashean como el número al que son iguales."""
    assert SymFunc.one() == 1
    assert hash(SymFunc.one()) == hash(1)
    assert hash(SymFunc.zero(Basis.H)) == hash(0)
    assert hash(SymFunc.one(Basis.E) * Fraction(1, 2)) == hash(Fraction(1, 2))
    assert len({SymFunc.one(), 1}) == 1
    assert len({SymFunc.zero(), 0}) == 1
    assert len({gen_h(2), gen_h(2) + 0}) == 1


def test_json():
    """Serialización JSON con coeficientes como texto."""
    data = gen_h(2).to_json()
    assert data == {
        "basis": "p",
        "terms": [
            {"partition": [2], "coeff": "1/2"},
            {"partition": [1, 1], "coeff": "1/2"},
        ],
    }
    assert SymFunc.from_json(data) == gen_h(2)


def test_invalidar_caches_conserva_resultados():
    """Vaciar las cachés no cambia los valores recalculados."""
    before = schur((3, 1))
    invalidate_caches()
    assert schur((3, 1)) == before


def test_suma_de_inversos_de_z():
    """Σ_{λ⊢n} 1/z_λ = 1."""
    for n in range(1, 7):
        assert sum(Fraction(1, z_of(lam)) for lam in partitions_of(n)) == 1


def test_identidad_de_newton():
    """n·h_n = Σ p_k h_{n−k} para n ≤ 5."""
    for n in range(1, 6):
        rhs = sum((gen_p(k) * gen_h(n - k) for k in range(1, n + 1)), SymFunc.zero())
        assert gen_h(n) * n == rhs


@pytest.mark.slow
def test_identidad_de_newton_hasta_doce():
    """n·h_n = Σ p_k h_{n−k} y n·e_n = Σ (−1)^{k−1} p_k e_{n−k} para n ≤ 12."""
    for n in range(1, 13):
        rhs_h = sum((gen_p(k) * gen_h(n - k) for k in range(1, n + 1)), SymFunc.zero())
        rhs_e = sum(((-1) ** (k - 1) * gen_p(k) * gen_e(n - k) for k in range(1, n + 1)), SymFunc.zero())
        assert gen_h(n) * n == rhs_h, n
        assert gen_e(n) * n == rhs_e, n


def test_inversiones_gorro_y_check():
    """h_n = Σ_k ĥ_{n−2k} y h_n = ȟ_n − ȟ_{n−2} para n ≤ 5."""
    for n in range(0, 6):
        total = sum((gen_hhat(n - 2 * k) for k in range(n // 2 + 1)), SymFunc.zero())
        assert total == gen_h(n)
        assert gen_h(n) == gen_hcheck(n) - gen_hcheck(n - 2)


@pytest.mark.slow
def test_inversiones_gorro_y_check_hasta_doce():
    """Las mismas inversiones de ĥ y ȟ para n ≤ 12."""
    for n in range(0, 13):
        total = sum((gen_hhat(n - 2 * k) for k in range(n // 2 + 1)), SymFunc.zero())
        assert total == gen_h(n), n
        assert gen_h(n) == gen_hcheck(n) - gen_hcheck(n - 2), n


@pytest.mark.parametrize("basis", [Basis.H, Basis.E, Basis.SCHUR])
def test_ida_y_vuelta_entre_bases(basis):
    """P → base → P es la identidad en peso ≤ 5."""
    for lam in partitions_up_to(5):
        f = SymFunc.monomial(Basis.P, lam)
        assert to_p(convert(f, basis)) == f


@pytest.mark.slow
@pytest.mark.parametrize("basis", [Basis.H, Basis.E, Basis.SCHUR])
def test_ida_y_vuelta_entre_bases_hasta_diez(basis):
    """P → base → P y base → P → base son la identidad en peso ≤ 10."""
    for lam in partitions_up_to(10):
        f = SymFunc.monomial(Basis.P, lam)
        assert to_p(convert(f, basis)) == f, lam
        g = SymFunc.monomial(basis, lam)
        assert convert(to_p(g), basis) == g, lam


def test_newton_en_h_y_e():
    """p_n construido en H y en E coincide con p_n."""
    assert to_p(gen_p(3, Basis.H)) == gen_p(3)
    assert to_p(gen_p(3, Basis.E)) == gen_p(3)
