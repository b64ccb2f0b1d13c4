import pytest

from src.suites import SUITES, SuiteOptions, instance_count, partition_count, run_suite


def _failures(results):
    return [(r.instance_id, r.detail) for r in results if not r.passed]


def test_cuenta_de_particiones():
    """Recuentos de particiones e instancias de la batería de dualidad."""
    assert partition_count(6) == 30
    assert instance_count("duality", SuiteOptions(max_weight=6)) == 30


def test_dualidad_peso_cuatro():
    """Dualidad hasta peso 4 con ids en orden."""
    results = run_suite("duality", SuiteOptions(max_weight=4, workers=2))
    assert len(results) == 12
    assert not _failures(results)
    assert [r.instance_id for r in results][:3] == ["duality:[]", "duality:[1]", "duality:[2]"]


def test_only_filtra_una_instancia():
    """--only ejecuta exactamente la instancia pedida."""
    results = run_suite("dets8", SuiteOptions(max_weight=4), only="dets:[2,1]")
    assert len(results) == 1
    assert results[0].passed


def test_replay_reproduce_la_instancia():
    """La línea de reproducción lleva todas las opciones y el id."""
    options = SuiteOptions(max_weight=3, seed=11, mode_range=2, k=2)
    assert options.replay_args("clifford", "YY:m=0:n=0:mu=[]") == [
        "verify", "clifford",
        "--max-weight", "3",
        "--seed", "11",
        "--range", "2",
        "--k", "2",
        "--only", "YY:m=0:n=0:mu=[]",
    ]


def test_resultados_deterministas():
    """Misma semilla, mismos resultados con varios hilos."""
    options = SuiteOptions(max_weight=2, seed=3, k=2, points=3, workers=3)
    first = [r.to_json() for r in run_suite("vandermonde", options)]
    second = [r.to_json() for r in run_suite("vandermonde", options)]
    assert first == second
    assert all(r["passed"] for r in first)


def test_clifford_pequeno():
    """Clifford con rango de modos 1 y peso 1."""
    results = run_suite("clifford", SuiteOptions(max_weight=1, mode_range=1))
    assert len(results) == 9 * 3 * 3 * 2
    assert not _failures(results)


def test_littlewood_es_informativa():
    """Los resultados de Littlewood son informativos y nunca fallan."""
    results = run_suite("littlewood", SuiteOptions(max_weight=3))
    assert all(r.passed and r.informative for r in results)


def test_caracteres_incluye_par_unidad():
    """La batería de caracteres contrasta el par unidad con x = 1."""
    results = run_suite("characters", SuiteOptions(max_weight=3, character_points=1))
    unit = [r for r in results if r.instance_id.startswith("unit-pair:")]
    assert unit
    assert "unit-pair:n=2:[1,1,1]" in [r.instance_id for r in unit]
    assert not _failures(unit)


def test_par_unidad_se_reproduce_con_only():
    """Una instancia de par unidad se puede relanzar sola."""
    results = run_suite("characters", SuiteOptions(max_weight=3, character_points=1), only="unit-pair:n=1:[2,1]")
    assert len(results) == 1
    assert results[0].passed


@pytest.mark.slow
@pytest.mark.parametrize("suite", [s for s in SUITES if s != "clifford"])
def test_baterias_completas(suite):
    """Todas las baterías hasta peso 8."""
    results = run_suite(suite, SuiteOptions(max_weight=8))
    assert not _failures(results)


@pytest.mark.slow
def test_clifford_completa():
    """Clifford con |m|, |n| ≤ 5 sobre monomios de peso ≤ 6."""
    results = run_suite("clifford", SuiteOptions(max_weight=6, mode_range=5))
    assert not _failures(results)
