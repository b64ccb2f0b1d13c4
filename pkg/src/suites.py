"""
Baterías de verificación: cada identidad se comprueba instancia a instancia en
un pool de hilos y los resultados se devuelven en orden determinista.
"""
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial

from src import config
from src.partition import Partition, conjugate, frobenius_rank, partitions_of, partitions_up_to, to_frobenius
from src.specialize import (
    CheckKind,
    EvalPoint,
    character_crosscheck,
    even_orthogonal_report,
    evaluate,
    random_generic_point,
)
from src.symring import Basis, SymFunc, is_integral, omega, schur, to_schur_expansion
from src.utils import format_partition, render_text
from src.vertexops import (
    W_STAR,
    Y_STAR,
    CliffordPair,
    FrobeniusVariant,
    ModeRelation,
    clifford_residual,
    frobenius_vertex,
    mode_relation_residual,
    mode_word,
    o_dual_vertex,
    o_vertex,
    schur_dual_vertex,
    schur_vertex,
    sp_dual_vertex,
    sp_vertex,
)
from src.weyldet import (
    O_FORMULAS,
    SCHUR_E,
    SCHUR_H,
    SP_FORMULAS,
    Kernel,
    kernel_symbolic_residuals,
    o_det,
    random_kernel_point,
    schur_det,
    sp_det,
    vandermonde_kernel,
    wstar_word_det,
    ystar_word_det,
    ystar_word_det_reversed,
)

logger = logging.getLogger(__name__)

SUITES = ("clifford", "relations", "dualbasis", "dets8", "frobenius", "vandermonde", "duality", "characters", "littlewood")

_DERIVED_RELATIONS = (
    ModeRelation.W_FROM_Y,
    ModeRelation.Y_FROM_W,
    ModeRelation.YSTAR_FROM_WSTAR,
    ModeRelation.WSTAR_FROM_YSTAR,
)


@dataclass(frozen=True)
class SuiteOptions:
    max_weight: int = 6
    seed: int = 7
    mode_range: int = 3
    k: int = 4
    points: int = 20
    character_points: int = 5
    workers: int = field(default_factory=lambda: config['WORKERS'])

    def replay_args(self, suite, instance_id):
        return [
            "verify", suite,
            "--max-weight", str(self.max_weight),
            "--seed", str(self.seed),
            "--range", str(self.mode_range),
            "--k", str(self.k),
            "--only", instance_id,
        ]


@dataclass(frozen=True)
class InstanceResult:
    suite: str
    instance_id: str
    passed: bool
    detail: str = ""
    informative: bool = False
    flagged: bool = False
    replay: tuple = ()

    def to_json(self):
        data = {
            "suite": self.suite,
            "instance": self.instance_id,
            "passed": self.passed,
        }
        if self.detail:
            data["detail"] = self.detail
        if self.informative:
            data["informative"] = True
            data["flagged"] = self.flagged
        if not self.passed:
            data["replay"] = list(self.replay)
        return data


@dataclass(frozen=True)
class _Job:
    instance_id: str
    check: object
    informative: bool = False


def _mismatch(left, right):
    return "" if left == right else f"{render_text(left)} ≠ {render_text(right)}"


# ==========================================
# DEFINICIÓN DE CADA BATERÍA
# ==========================================

def _check_clifford(pair, m, n, mu):
    residual = clifford_residual(pair, m, n, SymFunc.monomial(Basis.P, mu))
    return not residual, "" if not residual else f"residuo {render_text(residual)}"


def _clifford_jobs(options):
    jobs = []
    r = options.mode_range
    for pair in CliffordPair:
        for m in range(-r, r + 1):
            for n in range(-r, r + 1):
                for mu in partitions_up_to(options.max_weight):
                    jobs.append(_Job(
                        f"{pair.value}:m={m}:n={n}:mu={format_partition(mu)}",
                        partial(_check_clifford, pair, m, n, mu),
                    ))
    return jobs


def _check_relation(relation, n, mu, derived):
    residual = mode_relation_residual(relation, n, SymFunc.monomial(Basis.P, mu), max_terms=6)
    holds = not residual
    if derived:
        return holds, "" if holds else f"residuo {render_text(residual)}"
    # variante impresa: solo se informa; se marca si resulta cumplirse siempre
    return True, "se cumple" if holds else "falla", holds


def _relations_jobs(options):
    jobs = []
    r = options.mode_range
    for relation in ModeRelation:
        derived = relation in _DERIVED_RELATIONS
        for n in range(-r, r + 1):
            for mu in partitions_up_to(min(options.max_weight, 4)):
                jobs.append(_Job(
                    f"{relation.value}:n={n}:mu={format_partition(mu)}",
                    partial(_check_relation, relation, n, mu, derived),
                    informative=not derived,
                ))
    return jobs


def _check_dual_basis(lam):
    problems = []
    for name, direct, dual in (
        ("sp", sp_vertex(lam), sp_dual_vertex(lam)),
        ("o", o_vertex(lam), o_dual_vertex(lam)),
        ("schur", schur_vertex(lam), schur_dual_vertex(lam)),
    ):
        if direct != dual:
            problems.append(f"{name}: {_mismatch(direct, dual)}")
    if schur_vertex(lam) != schur(lam):
        problems.append("schur: palabra S distinta de Jacobi–Trudi")
    for name, value in (("sp", sp_vertex(lam)), ("o", o_vertex(lam))):
        if not is_integral(to_schur_expansion(value)):
            problems.append(f"{name}: coeficientes de Schur no enteros")
    return not problems, "; ".join(problems)


def _dualbasis_jobs(options):
    return [
        _Job(f"dual:{format_partition(lam)}", partial(_check_dual_basis, lam))
        for lam in partitions_up_to(options.max_weight)
    ]


def _check_dets(lam):
    problems = []
    sp_values = [sp_det(lam, formula) for formula in SP_FORMULAS]
    o_values = [o_det(lam, formula) for formula in O_FORMULAS]
    for formula, value in zip(SP_FORMULAS[1:], sp_values[1:]):
        if value != sp_values[0]:
            problems.append(f"{formula.label} ≠ {SP_FORMULAS[0].label}")
    for formula, value in zip(O_FORMULAS[1:], o_values[1:]):
        if value != o_values[0]:
            problems.append(f"{formula.label} ≠ {O_FORMULAS[0].label}")
    if sp_values[0] != sp_vertex(lam):
        problems.append("sp: determinante ≠ palabra Y")
    if o_values[0] != o_vertex(lam):
        problems.append("o: determinante ≠ palabra W")
    ystar_word = mode_word([(Y_STAR, part) for part in lam])
    if ystar_word_det(lam) != ystar_word:
        problems.append("palabra Y* ≠ determinante e-minus")
    if Partition(lam).weight <= 6 and ystar_word_det_reversed(lam) != ystar_word:
        problems.append("palabra Y* ≠ determinante con columnas invertidas")
    if wstar_word_det(lam) != mode_word([(W_STAR, part) for part in lam]):
        problems.append("palabra W* ≠ determinante e-plus")
    if schur_det(lam, SCHUR_H) != schur_det(lam, SCHUR_E):
        problems.append("Jacobi–Trudi h ≠ e")
    return not problems, "; ".join(problems)


def _dets_jobs(options):
    return [
        _Job(f"dets:{format_partition(lam)}", partial(_check_dets, lam))
        for lam in partitions_up_to(options.max_weight)
    ]


_KIND_REFERENCE = {
    "sp": lambda lam: sp_det(lam),
    "o": lambda lam: o_det(lam),
    "schur": lambda lam: schur(lam),
}


def _check_frobenius(kind, lam, variant):
    value = frobenius_vertex(kind, to_frobenius(lam), variant)
    expected = _KIND_REFERENCE[kind](lam)
    if variant is FrobeniusVariant.ANNIHILATION_FIRST_AS_PRINTED:
        holds = value == expected
        return True, "coincide" if holds else "no coincide", holds
    return value == expected, _mismatch(value, expected)


def _frobenius_jobs(options):
    jobs = []
    for lam in partitions_up_to(options.max_weight):
        if not lam or frobenius_rank(lam) > 3:
            continue
        fc = to_frobenius(lam)
        for kind in ("schur", "sp", "o"):
            for variant in FrobeniusVariant:
                jobs.append(_Job(
                    f"{kind}:{variant.value}:{format_partition(lam)}={fc}",
                    partial(_check_frobenius, kind, lam, variant),
                    informative=variant is FrobeniusVariant.ANNIHILATION_FIRST_AS_PRINTED,
                ))
    return jobs


def _check_kernel(kind, k, point):
    values = vandermonde_kernel(kind, k, point)
    detail = "" if values.agree else f"det={values.lhs} prod={values.rhs_product} suma={values.rhs_sum}"
    return values.agree, detail


def _check_kernel_symbolic(kind, k):
    residuals = kernel_symbolic_residuals(kind, k)
    ok = all(r == 0 for r in residuals)
    return ok, "" if ok else f"residuos {residuals}"


def _vandermonde_jobs(options):
    rng = random.Random(f"{options.seed}:vandermonde")
    jobs = []
    for kind in Kernel:
        for k in range(1, options.k + 1):
            for index in range(options.points):
                point = random_kernel_point(rng, kind, k)
                label = ",".join(str(z) for z in point)
                jobs.append(_Job(f"{kind.value}:k={k}:#{index}:[{label}]", partial(_check_kernel, kind, k, point)))
        for k in range(1, min(options.k, 2) + 1):
            jobs.append(_Job(f"{kind.value}:k={k}:symbolic", partial(_check_kernel_symbolic, kind, k)))
    return jobs


def _check_duality(lam):
    left = omega(sp_det(lam))
    right = o_det(conjugate(lam))
    return left == right, _mismatch(left, right)


def _duality_jobs(options):
    return [
        _Job(f"duality:{format_partition(lam)}", partial(_check_duality, lam))
        for lam in partitions_up_to(options.max_weight)
    ]


def _check_character(kind, lam, xs):
    check = character_crosscheck(kind, lam, xs)
    return check.agree, "" if check.agree else f"universal={check.universal} oráculo={check.oracle}"


def _check_even_report(lam, xs):
    report = even_orthogonal_report(lam, xs)
    detail = (
        f"universal={report.universal} χ={report.chi} χσ={report.chi_sigma}"
        f" suma={'sí' if report.matches_sum else 'no'}"
    )
    return True, detail, not report.matches_sum


def _check_stability(rank):
    value = evaluate(sp_det((1,)), EvalPoint.symplectic([1] * rank, 1))
    return value == 2 * rank, f"sp_(1) en x_i = 1 da {value}"


def _check_unit_pair(lam, xs):
    N = max(Partition(lam).weight, 1)
    extended = evaluate(sp_det(lam), EvalPoint.symplectic(xs, N).with_unit_pair())
    direct = evaluate(sp_det(lam), EvalPoint.symplectic(list(xs) + [1], N))
    return extended == direct, "" if extended == direct else f"par unidad={extended} x=1 directo={direct}"


def _characters_jobs(options):
    rng = random.Random(f"{options.seed}:characters")
    top = min(options.max_weight, 6)
    jobs = []
    plan = [(CheckKind.SP, (1, 2, 3)), (CheckKind.O_ODD, (1, 2, 3)), (CheckKind.O_EVEN, (2, 3))]
    group_types = {CheckKind.SP: "C", CheckKind.O_ODD: "B", CheckKind.O_EVEN: "D"}
    for kind, ranks in plan:
        for n in ranks:
            points = [random_generic_point(rng, n, group_types[kind]) for _ in range(options.character_points)]
            limit = n - 1 if kind is CheckKind.O_EVEN else n
            for lam in partitions_up_to(top):
                if len(lam) > limit:
                    continue
                for index, xs in enumerate(points):
                    jobs.append(_Job(
                        f"{kind.value}:n={n}:{format_partition(lam)}:#{index}",
                        partial(_check_character, kind, lam, xs),
                    ))
    for n in (2, 3):
        xs = random_generic_point(rng, n, "D")
        for lam in partitions_up_to(top):
            if len(lam) == n:
                jobs.append(_Job(
                    f"o-even-full:n={n}:{format_partition(lam)}",
                    partial(_check_even_report, lam, xs),
                    informative=True,
                ))
    for n in (1, 2, 3):
        jobs.append(_Job(f"stability:n={n}", partial(_check_stability, n)))
    for n in (1, 2):
        xs = random_generic_point(rng, n, "C")
        for lam in partitions_up_to(top):
            if len(lam) <= n + 1:
                jobs.append(_Job(f"unit-pair:n={n}:{format_partition(lam)}", partial(_check_unit_pair, lam, xs)))
    return jobs


def _check_littlewood(kind, lam):
    value = sp_det(lam) if kind == "sp" else o_det(lam)
    expansion = to_schur_expansion(value)
    top = Partition(lam).weight
    issues = []
    if expansion.coefficient(lam) != 1:
        issues.append("d_λλ ≠ 1")
    for mu, c in expansion.terms.items():
        drop = top - mu.weight
        if c.denominator != 1:
            issues.append(f"{format_partition(mu)} no entero")
        if drop < 0 or drop % 2:
            issues.append(f"{format_partition(mu)} con salto de peso {drop}")
        elif mu != lam and (c > 0) != (drop % 4 == 0):
            issues.append(f"{format_partition(mu)} signo inesperado")
    return True, "; ".join(issues) or "patrón esperado", bool(issues)


def _littlewood_jobs(options):
    return [
        _Job(f"{kind}:{format_partition(lam)}", partial(_check_littlewood, kind, lam), informative=True)
        for kind in ("sp", "o")
        for lam in partitions_up_to(options.max_weight)
    ]


_BUILDERS = {
    "clifford": _clifford_jobs,
    "relations": _relations_jobs,
    "dualbasis": _dualbasis_jobs,
    "dets8": _dets_jobs,
    "frobenius": _frobenius_jobs,
    "vandermonde": _vandermonde_jobs,
    "duality": _duality_jobs,
    "characters": _characters_jobs,
    "littlewood": _littlewood_jobs,
}


# ==========================================
# EJECUCIÓN
# ==========================================

def _run_job(suite, options, job):
    try:
        outcome = job.check()
    except Exception as e:
        return InstanceResult(
            suite, job.instance_id, False, f"ERROR - {type(e).__name__}: {e}",
            job.informative, False, tuple(options.replay_args(suite, job.instance_id)),
        )
    passed, detail = outcome[0], outcome[1]
    flagged = outcome[2] if len(outcome) > 2 else False
    return InstanceResult(
        suite, job.instance_id, passed, detail, job.informative, flagged,
        tuple(options.replay_args(suite, job.instance_id)),
    )


def suite_names(name):
    return SUITES if name == "all" else (name,)


def run_suite(name, options, only=None):
    """Ejecuta una batería (o ``all``) y devuelve la lista de InstanceResult en orden estable."""
    results = []
    for suite in suite_names(name):
        # 1. Construir instancias y aplicar --only
        jobs = _BUILDERS[suite](options)
        if only:
            jobs = [job for job in jobs if job.instance_id == only]
        # 2. Ejecutar en el pool; map conserva el orden
        with ThreadPoolExecutor(max_workers=max(1, options.workers), thread_name_prefix='verify_worker') as pool:
            suite_results = list(pool.map(partial(_run_job, suite, options), jobs))
        # 3. Registrar fallos y resumen
        failures = [r for r in suite_results if not r.passed]
        flagged = [r for r in suite_results if r.flagged]
        for r in failures:
            logger.warning(
                f"Instancia fallida {suite}/{r.instance_id}: {r.detail}",
                extra={"event.action": "identity-failure", "error.message": r.detail, "weylschur.suite": suite},
            )
        logger.info(
            f"Batería {suite}: {len(suite_results) - len(failures)}/{len(suite_results)} correctas, {len(flagged)} marcadas",
            extra={
                "event.action": "suite-summary",
                "weylschur.suite": suite,
                "weylschur.instances": len(suite_results),
                "weylschur.failures": len(failures),
                "weylschur.flagged": len(flagged),
            },
        )
        results.extend(suite_results)
    return results


def instance_count(name, options):
    return sum(len(_BUILDERS[suite](options)) for suite in suite_names(name))


def partition_count(max_weight):
    return sum(len(partitions_of(k)) for k in range(max_weight + 1))
