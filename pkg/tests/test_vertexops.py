import pytest

from src.partition import to_frobenius
from src.symring import Basis, SymFunc, gen_e, gen_h, schur
from src.vertexops import (
    S,
    S_STAR,
    W,
    W_STAR,
    Y,
    Y_STAR,
    CliffordPair,
    FrobeniusVariant,
    LaurentSlice,
    ModeRelation,
    annihilation_by_series,
    apply_annihilation,
    clifford_residual,
    degree_bound,
    frobenius_vertex,
    mode,
    mode_relation_residual,
    mode_word,
    o_dual_vertex,
    o_vertex,
    relation_report,
    schur_dual_vertex,
    schur_vertex,
    sp_dual_vertex,
    sp_vertex,
)
from src.weyldet import o_det, sp_det

ONE = SymFunc.one(Basis.P)
P1 = SymFunc.monomial(Basis.P, (1,))


def test_modos_sobre_el_vacio():
    """Modos actuando sobre 1."""
    assert mode(Y, -2, ONE) == gen_h(2)
    assert mode(S, -1, ONE) == gen_h(1)
    assert mode(Y_STAR, 2, ONE) == gen_e(2) - 1
    assert mode(W_STAR, 1, ONE) == -gen_e(1)
    assert not mode(S, 1, ONE)


def test_palabra_y():
    """Y_{-1}Y_{-1}.1 = e_2 − 1."""
    assert mode_word([(Y, -1), (Y, -1)]) == gen_e(2) - 1


def test_anihilacion_p1():
    """Parte de aniquilación sobre p_1."""
    slices = apply_annihilation(Y, P1)
    assert slices[0] == P1
    assert slices[-1] == -ONE
    assert slices[1] == -ONE
    plain = apply_annihilation(S, P1)
    assert 1 not in plain.exponents()


def test_anihilacion_por_serie_coincide():
    """La aniquilación por sustitución coincide con la serie explícita."""
    f = SymFunc.monomial(Basis.P, (2, 1, 1))
    for spec in (S, Y, W_STAR):
        assert annihilation_by_series(spec, f).as_dict() == apply_annihilation(spec, f).as_dict()


def test_laurent_slice():
    """Acceso y exponentes de un trozo de Laurent."""
    piece = LaurentSlice.from_dict({-1: P1, 2: ONE})
    assert piece[5] == SymFunc.zero(Basis.P)
    assert piece.exponents() == [-1, 2]


def test_cota_de_grado():
    """El grado de un modo respeta su cota."""
    value = mode(W, -2, P1)
    assert value.degree <= degree_bound(W, -2, P1)


def test_realizaciones_por_vertices(small_partitions):
    """Palabras de modos dan sp_λ, o_λ y s_λ."""
    for lam in small_partitions:
        assert sp_vertex(lam) == sp_det(lam), lam
        assert o_vertex(lam) == o_det(lam), lam
        assert schur_vertex(lam) == schur(lam), lam


def test_realizaciones_duales(small_partitions):
    """Las palabras duales coinciden con las directas."""
    for lam in small_partitions:
        assert sp_dual_vertex(lam) == sp_vertex(lam), lam
        assert o_dual_vertex(lam) == o_vertex(lam), lam
        assert schur_dual_vertex(lam) == schur_vertex(lam), lam


@pytest.mark.parametrize("pair", list(CliffordPair))
def test_relaciones_de_clifford(pair):
    """Anticonmutadores de Clifford nulos en modos pequeños."""
    for f in (ONE, P1, SymFunc.monomial(Basis.P, (2,))):
        for m in range(-2, 3):
            for n in range(-2, 3):
                assert not clifford_residual(pair, m, n, f), (pair, m, n, f)


@pytest.mark.parametrize("relation", [
    ModeRelation.W_FROM_Y,
    ModeRelation.Y_FROM_W,
    ModeRelation.YSTAR_FROM_WSTAR,
    ModeRelation.WSTAR_FROM_YSTAR,
])
def test_relaciones_w_y(relation):
    """Relaciones entre modos de W e Y."""
    for f in (ONE, P1, SymFunc.monomial(Basis.P, (1, 1))):
        for n in range(-2, 3):
            assert not mode_relation_residual(relation, n, f, max_terms=8), (relation, n)


def test_variante_impresa_de_w_falla():
    """La variante con el signo impreso no se cumple."""
    assert mode_relation_residual(ModeRelation.W_FROM_Y_PRINTED, -2, ONE)


def test_informe_de_relaciones():
    """El informe cubre todas las relaciones."""
    report = relation_report(-1, ONE, max_terms=6)
    assert report["W_FROM_Y"] is True
    assert set(report) == {relation.value for relation in ModeRelation}


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (3, 2), (2, 2)])
@pytest.mark.parametrize("kind, reference", [
    ("sp", sp_det),
    ("o", o_det),
    ("schur", schur),
])
def test_frobenius(lam, kind, reference):
    """Realización por coordenadas de Frobenius en ambos órdenes."""
    fc = to_frobenius(lam)
    assert frobenius_vertex(kind, fc, FrobeniusVariant.CREATION_FIRST) == reference(lam)
    assert frobenius_vertex(kind, fc, FrobeniusVariant.ANNIHILATION_FIRST) == reference(lam)


def test_frobenius_variante_impresa_se_anula():
    """La variante impresa con aniquilación primero da 0."""
    assert not frobenius_vertex("sp", (1,), FrobeniusVariant.ANNIHILATION_FIRST_AS_PRINTED)
    assert not frobenius_vertex("schur", (1,), FrobeniusVariant.ANNIHILATION_FIRST_AS_PRINTED)


def test_modo_s_estrella():
    """S*_1.1 = −e_1."""
    assert mode(S_STAR, 1, ONE) == -gen_e(1)
