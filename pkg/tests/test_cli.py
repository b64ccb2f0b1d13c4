import json

import pytest

from src.cli import cli


def test_char_sp_en_schur(runner):
    """sp_(1,1) por determinante en base de Schur."""
    result = runner.invoke(cli, ['char', 'sp', '[1,1]', '--via', 'det:h', '--basis', 's'])
    assert result.exit_code == 0
    assert result.output.strip() == "s[1,1] - s[]"


def test_char_o_por_vertices(runner):
    """o_(2) por palabra de modos W en base h."""
    result = runner.invoke(cli, ['char', 'o', '[2]', '--via', 'vertex', '--basis', 'h'])
    assert result.exit_code == 0
    assert result.output.strip() == "h[2] - 1"


def test_char_json(runner):
    """Salida JSON de char."""
    result = runner.invoke(cli, ['char', 'schur', '[2]', '--format', 'json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["basis"] == "p"
    assert data["terms"][0] == {"partition": [2], "coeff": "1/2"}


def test_char_frobenius_coincide_con_determinante(runner):
    """Frobenius y determinante imprimen lo mismo."""
    det = runner.invoke(cli, ['char', 'sp', '[2,1]'])
    frob = runner.invoke(cli, ['char', 'sp', '[2,1]', '--via', 'frobenius:annihilation'])
    assert det.exit_code == frob.exit_code == 0
    assert det.output == frob.output


def test_char_formula_inadmisible(runner):
    """Fórmula no admisible: error de uso."""
    result = runner.invoke(cli, ['char', 'sp', '[1]', '--via', 'det:hhat'])
    assert result.exit_code == 2


def test_char_particion_invalida(runner):
    """Partición no decreciente: error de uso."""
    result = runner.invoke(cli, ['char', 'sp', '[1,2]'])
    assert result.exit_code == 2


def test_expand(runner):
    """Coeficientes de Schur enteros de sp_(1,1)."""
    result = runner.invoke(cli, ['expand', 'sp', '[1,1]', '--format', 'json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["integral"] is True
    assert data["coefficients"] == [
        {"partition": [1, 1], "coeff": "1"},
        {"partition": [], "coeff": "-1"},
    ]


def test_dual(runner):
    """dual informa igualdad."""
    result = runner.invoke(cli, ['dual', '[2,1]'])
    assert result.exit_code == 0
    assert "EQUAL" in result.output
    assert "NOT EQUAL" not in result.output


def test_specialize_sp(runner):
    """Universal y oráculo coinciden en Sp(2)."""
    result = runner.invoke(cli, ['specialize', 'sp', '[2]', '--point', '2'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["universal"] == data["oracle"] == "21/4"
    assert data["group"] == "Sp"


def test_specialize_o_impar(runner):
    """o_(1) en SO(3)."""
    result = runner.invoke(cli, ['specialize', 'o-odd', '[1]', '--point', '2'])
    assert json.loads(result.output)["universal"] == "7/2"


def test_specialize_o_par_longitud_completa(runner):
    """En tipo D con ℓ(λ) = n se informa χ + χ^σ."""
    result = runner.invoke(cli, ['specialize', 'o-even', '[1]', '--point', '2'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["matches_sum"] is True
    assert data["chi"] == "2"


def test_specialize_errores(runner):
    """Rango excedido, punto degenerado y punto no numérico."""
    assert runner.invoke(cli, ['specialize', 'sp', '[1,1,1]', '--point', '2']).exit_code == 2
    assert runner.invoke(cli, ['specialize', 'sp', '[1]', '--point', '2', '--point', '2']).exit_code == 2
    assert runner.invoke(cli, ['specialize', 'sp', '[1]', '--point', 'x']).exit_code == 2


def test_verify_duality_json(runner, isolated_config):
    """verify en JSON con el recuento de instancias."""
    result = runner.invoke(cli, ['verify', 'duality', '--max-weight', '6', '--format', 'json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["passed"] is True
    assert data["instances"] == 30


def test_verify_texto(runner, isolated_config):
    """verify en texto con cabecera y PASS."""
    result = runner.invoke(cli, ['verify', 'duality', '--max-weight', '3'])
    assert result.exit_code == 0
    assert "PASS" in result.output
    assert "=" * 70 in result.output


def test_verify_respeta_el_limite(runner, isolated_config):
    """--max-weight por encima de WEYLSCHUR_MAX_WEIGHT es error de uso."""
    isolated_config.setenv("WEYLSCHUR_MAX_WEIGHT", "4")
    result = runner.invoke(cli, ['verify', 'duality', '--max-weight', '5'])
    assert result.exit_code == 2


def test_bench(runner):
    """bench compara determinante y palabra de modos."""
    result = runner.invoke(cli, ['bench', 'schur', '[2,1]', '--repetitions', '2'])
    assert result.exit_code == 0
    assert "Resultados iguales" in result.output


@pytest.mark.parametrize("key, value", [
    ("WEYLSCHUR_MAX_WEIGHT", "ten"),
    ("WEYLSCHUR_WORKERS", "many"),
    ("WEYLSCHUR_WORKERS", "0"),
    ("WEYLSCHUR_SEED", "1.5"),
])
def test_verify_entorno_invalido_es_error_de_uso(runner, isolated_config, key, value):
    """Un WEYLSCHUR_* mal formado en verify sale con código 2 y nombra la variable."""
    isolated_config.setenv(key, value)
    result = runner.invoke(cli, ['verify', 'duality', '--max-weight', '2'])
    assert result.exit_code == 2
    assert key in result.output
