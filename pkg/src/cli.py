import json
import statistics
import time

import click
from rich.console import Console
from rich.table import Table

from src import ConfigError, __version__, config, env_int
from src.partition import InvalidPartitionError, conjugate, to_frobenius
from src.specialize import (
    CheckKind,
    DegenerateCharacterError,
    RankError,
    character_crosscheck,
    even_orthogonal_report,
)
from src.symring import Basis, convert, is_integral, omega, to_schur_expansion
from src.suites import SUITES, SuiteOptions, run_suite
from src.utils import format_fraction, format_partition, parse_fraction, parse_partition, render_text
from src.vertexops import (
    FrobeniusVariant,
    frobenius_vertex,
    o_dual_vertex,
    o_vertex,
    schur_dual_vertex,
    schur_vertex,
    sp_dual_vertex,
    sp_vertex,
)
from src.weyldet import InadmissibleFormulaError, evaluate_formula, formula_for

KINDS = ('sp', 'o', 'schur')
VIAS = (
    'det:h', 'det:e', 'det:hhat', 'det:ehat', 'det:hcheck', 'det:echeck',
    'vertex', 'vertex:dual', 'frobenius:creation', 'frobenius:annihilation',
)

_VERTEX = {'sp': sp_vertex, 'o': o_vertex, 'schur': schur_vertex}
_DUAL_VERTEX = {'sp': sp_dual_vertex, 'o': o_dual_vertex, 'schur': schur_dual_vertex}


class PartitionType(click.ParamType):
    """Acepta [3,1], 3,1 o [] desde la línea de comandos."""

    name = 'partition'

    def convert(self, value, param, ctx):
        try:
            return parse_partition(value)
        except InvalidPartitionError as e:
            self.fail(str(e), param, ctx)


PARTITION = PartitionType()


def realize(kind, lam, via):
    """sp_λ, o_λ o s_λ (en P) por la realización elegida."""
    if via.startswith('det:'):
        formula = formula_for(kind, via.split(':', 1)[1])
        return evaluate_formula(lam, formula)
    if via == 'vertex':
        return _VERTEX[kind](lam)
    if via == 'vertex:dual':
        return _DUAL_VERTEX[kind](lam)
    return frobenius_vertex(kind, to_frobenius(lam), FrobeniusVariant(via.split(':', 1)[1]))


def _realize_or_usage_error(kind, lam, via):
    try:
        return realize(kind, lam, via)
    except InadmissibleFormulaError as e:
        raise click.BadParameter(str(e), param_hint="'--via'")


def _emit(f, basis, output_format):
    value = convert(f, basis)
    if output_format == 'json':
        click.echo(json.dumps(value.to_json(), ensure_ascii=False))
    else:
        click.echo(render_text(value))


@click.group()
@click.version_option(__version__, prog_name='weylschur')
def cli():
    """
    weylschur: funciones de Schur, simplécticas y ortogonales en aritmética exacta.
    """


# ==========================================
# CHAR
# ==========================================

@cli.command('char')
@click.argument('kind', type=click.Choice(KINDS, case_sensitive=False))
@click.argument('lam', metavar='PARTITION', type=PARTITION)
@click.option('--via', type=click.Choice(VIAS), default='det:h', help='Realización: determinante, palabra de modos o Frobenius')
@click.option('--basis', type=click.Choice([b.value for b in Basis]), default='p', help='Base de salida (p, h, e, s)')
@click.option('--format', 'output_format', type=click.Choice(['json', 'text']), default='text', help='Formato de salida')
def char_command(kind, lam, via, basis, output_format):
    """
    Calcula sp_λ, o_λ o s_λ.

    Ejemplos:
        weylschur char sp [1,1] --via det:h --basis s
        weylschur char o [2] --via vertex --basis h
    """
    value = _realize_or_usage_error(kind.lower(), lam, via)
    _emit(value, Basis(basis), output_format)


# ==========================================
# EXPAND
# ==========================================

@cli.command('expand')
@click.argument('kind', type=click.Choice(KINDS, case_sensitive=False))
@click.argument('lam', metavar='PARTITION', type=PARTITION)
@click.option('--via', type=click.Choice(VIAS), default='det:h', help='Realización usada para calcular')
@click.option('--format', 'output_format', type=click.Choice(['json', 'text']), default='text')
def expand_command(kind, lam, via, output_format):
    """Coeficientes d_{λμ} en la base de Schur; deben ser enteros."""
    expansion = to_schur_expansion(_realize_or_usage_error(kind.lower(), lam, via))
    integral = is_integral(expansion)
    rows = [(mu, c) for mu, c in expansion.sorted_terms()]

    if output_format == 'json':
        click.echo(json.dumps({
            'kind': kind.lower(),
            'lambda': list(lam),
            'integral': integral,
            'coefficients': [{'partition': list(mu), 'coeff': format_fraction(c)} for mu, c in rows],
        }, ensure_ascii=False))
    else:
        table = Table(title=f"{kind.lower()}_{format_partition(lam)} en la base de Schur")
        table.add_column('μ')
        table.add_column('d_λμ', justify='right')
        for mu, c in rows:
            table.add_row(format_partition(mu), format_fraction(c))
        Console(highlight=False).print(table)

    if not integral:
        click.echo("❌ Coeficientes no enteros", err=True)
        raise SystemExit(1)


# ==========================================
# DUAL
# ==========================================

@cli.command('dual')
@click.argument('lam', metavar='PARTITION', type=PARTITION)
@click.option('--basis', type=click.Choice([b.value for b in Basis]), default='h')
@click.option('--format', 'output_format', type=click.Choice(['json', 'text']), default='text')
def dual_command(lam, basis, output_format):
    """Compara ω(sp_λ) con o_λ′."""
    left = convert(omega(realize('sp', lam, 'det:h')), basis)
    right = convert(realize('o', conjugate(lam), 'det:h'), basis)
    equal = left == right

    if output_format == 'json':
        click.echo(json.dumps({
            'lambda': list(lam),
            'omega_sp': left.to_json(),
            'o_conjugate': right.to_json(),
            'verdict': 'EQUAL' if equal else 'NOT EQUAL',
        }, ensure_ascii=False))
    else:
        click.echo(f"ω(sp_{format_partition(lam)}) = {render_text(left)}")
        click.echo(f"o_{format_partition(conjugate(lam))} = {render_text(right)}")
        click.echo('EQUAL' if equal else 'NOT EQUAL')

    if not equal:
        raise SystemExit(1)


# ==========================================
# SPECIALIZE
# ==========================================

@cli.command('specialize')
@click.argument('group', type=click.Choice([k.value for k in CheckKind]))
@click.argument('lam', metavar='PARTITION', type=PARTITION)
@click.option('--point', 'points', multiple=True, required=True, help='Valor x_i (repetible), p.ej. --point 2 --point 1/3')
def specialize_command(group, lam, points):
    """
    Especializa sp_λ / o_λ en (x_i, x_i^{-1}) y lo contrasta con el carácter de Weyl.

    Ejemplo:
        weylschur specialize sp [1,1] --point 2 --point 3
    """
    try:
        xs = [parse_fraction(p) for p in points]
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="'--point'")

    kind = CheckKind(group)
    try:
        if kind is CheckKind.O_EVEN and len(lam) == len(xs) and lam:
            report = even_orthogonal_report(lam, xs)
            click.echo(json.dumps({
                'lambda': list(lam),
                'group': 'SO_even',
                'rank': len(xs),
                'point': [format_fraction(x) for x in xs],
                'universal': format_fraction(report.universal),
                'chi': format_fraction(report.chi),
                'chi_sigma': format_fraction(report.chi_sigma),
                'matches_sum': report.matches_sum,
            }, ensure_ascii=False))
            return
        check = character_crosscheck(kind, lam, xs)
    except RankError as e:
        raise click.UsageError(str(e))
    except DegenerateCharacterError as e:
        raise click.UsageError(f"{e}; elige otro punto")
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="'--point'")

    click.echo(json.dumps(check.to_json(), ensure_ascii=False))
    if not check.agree:
        raise SystemExit(1)


# ==========================================
# VERIFY
# ==========================================

@cli.command('verify')
@click.argument('suite', type=click.Choice(SUITES + ('all',)))
@click.option('--max-weight', default=6, type=int, help='Peso máximo de las particiones')
@click.option('--seed', default=None, type=int, help='Semilla para los puntos aleatorios')
@click.option('--range', 'mode_range', default=3, type=int, help='Rango de índices de modo para Clifford')
@click.option('--k', default=4, type=int, help='Tamaño máximo de los núcleos tipo Vandermonde')
@click.option('--points', default=20, type=int, help='Puntos aleatorios por tamaño de núcleo')
@click.option('--only', default=None, help='Ejecuta solo la instancia con este identificador')
@click.option('--format', 'output_format', type=click.Choice(['json', 'text']), default='text')
def verify_command(suite, max_weight, seed, mode_range, k, points, only, output_format):
    """
    Ejecuta una batería de identidades y devuelve código 1 si alguna instancia falla.

    Ejemplos:
        weylschur verify duality --max-weight 6
        weylschur verify clifford --range 4 --max-weight 4
        weylschur verify vandermonde --k 3 --seed 7
    """
    # 1. Límites y valores por defecto del entorno, leídos en el momento de la llamada
    try:
        cap = env_int('WEYLSCHUR_MAX_WEIGHT', config['MAX_WEIGHT'], minimum=0)
        workers = env_int('WEYLSCHUR_WORKERS', config['WORKERS'], minimum=1)
        default_seed = env_int('WEYLSCHUR_SEED', config['SEED'])
    except ConfigError as e:
        raise click.UsageError(str(e))

    # 2. Validar opciones
    if max_weight < 0:
        raise click.BadParameter('debe ser ≥ 0', param_hint="'--max-weight'")
    if max_weight > cap:
        raise click.UsageError(f"--max-weight {max_weight} supera el límite configurado WEYLSCHUR_MAX_WEIGHT={cap}")
    if mode_range < 0 or k < 1 or points < 1:
        raise click.UsageError("--range ≥ 0, --k ≥ 1 y --points ≥ 1")

    # 3. Ejecutar
    options = SuiteOptions(
        max_weight=max_weight,
        seed=default_seed if seed is None else seed,
        mode_range=mode_range,
        k=k,
        points=points,
        workers=workers,
    )
    results = run_suite(suite, options, only=only)
    failures = [r for r in results if not r.passed]
    flagged = [r for r in results if r.flagged]

    if output_format == 'json':
        click.echo(json.dumps({
            'suite': suite,
            'seed': options.seed,
            'max_weight': max_weight,
            'passed': not failures,
            'instances': len(results),
            'failures': len(failures),
            'flagged': len(flagged),
            'results': [r.to_json() for r in results],
        }, ensure_ascii=False))
    else:
        click.echo("=" * 70)
        click.echo(f"  VERIFICACIÓN {suite.upper()} (peso ≤ {max_weight}, semilla {options.seed})")
        click.echo("=" * 70)
        table = Table()
        table.add_column('Batería')
        table.add_column('Instancias', justify='right')
        table.add_column('Fallos', justify='right')
        table.add_column('Marcadas', justify='right')
        for name in dict.fromkeys(r.suite for r in results):
            group = [r for r in results if r.suite == name]
            table.add_row(
                name,
                str(len(group)),
                str(sum(1 for r in group if not r.passed)),
                str(sum(1 for r in group if r.flagged)),
            )
        Console(highlight=False).print(table)
        for r in flagged:
            click.echo(f"   ⚠️  {r.suite}/{r.instance_id}: {r.detail}")
        for r in failures:
            click.echo(f"   ❌ {r.suite}/{r.instance_id}: {r.detail}")
            click.echo(json.dumps({'replay': list(r.replay)}, ensure_ascii=False))
        click.echo("=" * 70)
        if failures:
            click.echo(f"❌ FAIL, {len(failures)} de {len(results)} instancias")
        else:
            click.echo(f"✅ PASS, {len(results)} instancias")

    if failures:
        raise SystemExit(1)


# ==========================================
# BENCH
# ==========================================

def _invalidate_all_caches():
    from src import symring, vertexops, weyldet
    symring.invalidate_caches()
    weyldet.invalidate_caches()
    vertexops.invalidate_caches()


@cli.command('bench')
@click.argument('kind', type=click.Choice(KINDS, case_sensitive=False))
@click.argument('lam', metavar='PARTITION', type=PARTITION)
@click.option('--repetitions', default=10, type=click.IntRange(min=1), help='Repeticiones por realización')
def bench_command(kind, lam, repetitions):
    """Tiempos del determinante frente a la palabra de modos, tras comprobar que coinciden."""
    kind = kind.lower()
    det_value = realize(kind, lam, 'det:h')
    vertex_value = realize(kind, lam, 'vertex')
    if det_value != vertex_value:
        click.echo(f"❌ Las realizaciones difieren para {kind}_{format_partition(lam)}")
        raise SystemExit(1)

    table = Table(title=f"{kind}_{format_partition(lam)} ({repetitions} repeticiones, cachés vacías)")
    table.add_column('Realización')
    table.add_column('media (ms)', justify='right')
    table.add_column('mín (ms)', justify='right')
    table.add_column('máx (ms)', justify='right')
    for via in ('det:h', 'vertex'):
        timings = []
        for _ in range(repetitions):
            _invalidate_all_caches()
            start = time.perf_counter()
            realize(kind, lam, via)
            timings.append((time.perf_counter() - start) * 1000)
        table.add_row(via, f"{statistics.mean(timings):.2f}", f"{min(timings):.2f}", f"{max(timings):.2f}")
    click.echo(f"✅ Resultados iguales: {render_text(det_value)[:60]}")
    Console(highlight=False).print(table)


if __name__ == '__main__':
    cli()
