"""
Determinantes sin división sobre Λ y todas las fórmulas de tipo Weyl:
Jacobi–Trudi, sp_λ y o_λ con generadores h, e, ĥ, ê, ȟ, ě, y los tres
núcleos tipo Vandermonde.

Las entradas se construyen en la base multiplicativa del generador (H para la
familia h, E para la familia e): cada entrada es a lo sumo un par de monomios y
el desarrollo de Laplace se reduce a concatenar partes. El valor final se
devuelve en P.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from src.partition import Partition, conjugate
from src.symring import (
    Basis,
    SymFunc,
    gen_e,
    gen_echeck,
    gen_ehat,
    gen_h,
    gen_hcheck,
    gen_hhat,
    scale,
    to_p,
)

logger = logging.getLogger(__name__)


class InadmissibleFormulaError(ValueError):
    """Combinación (carácter, generador, forma) que no corresponde a ninguna fórmula válida."""


class DegeneratePointError(ValueError):
    """Punto con ceros, valores repetidos o productos z_i z_j = 1."""


class Character(str, Enum):
    SP = "sp"
    O = "o"
    SCHUR = "schur"


class Generator(str, Enum):
    H = "h"
    E = "e"
    HHAT = "hhat"
    EHAT = "ehat"
    HCHECK = "hcheck"
    ECHECK = "echeck"


class Shape(str, Enum):
    PLUS = "plus"      # ½·det(g_{λi−i+j} + g_{λi−i−j+2})
    MINUS = "minus"    # det(g_{λi−i+j} − g_{λi−i−j})
    PLAIN = "plain"    # det(g_{λi−i+j})


_GENERATORS = {
    Generator.H: (gen_h, Basis.H),
    Generator.E: (gen_e, Basis.E),
    Generator.HHAT: (gen_hhat, Basis.H),
    Generator.EHAT: (gen_ehat, Basis.E),
    Generator.HCHECK: (gen_hcheck, Basis.H),
    Generator.ECHECK: (gen_echeck, Basis.E),
}


@dataclass(frozen=True)
class DetFormula:
    character: Character
    generator: Generator
    shape: Shape
    conjugated: bool

    @property
    def label(self):
        index = "λ′" if self.conjugated else "λ"
        return f"{self.character.value}:{self.generator.value}-{self.shape.value}[{index}]"


SP_H_PLUS = DetFormula(Character.SP, Generator.H, Shape.PLUS, False)
SP_HCHECK_MINUS = DetFormula(Character.SP, Generator.HCHECK, Shape.MINUS, False)
SP_E_MINUS = DetFormula(Character.SP, Generator.E, Shape.MINUS, True)
SP_EHAT_PLUS = DetFormula(Character.SP, Generator.EHAT, Shape.PLUS, True)
O_H_MINUS = DetFormula(Character.O, Generator.H, Shape.MINUS, False)
O_HHAT_PLUS = DetFormula(Character.O, Generator.HHAT, Shape.PLUS, False)
O_E_PLUS = DetFormula(Character.O, Generator.E, Shape.PLUS, True)
O_ECHECK_MINUS = DetFormula(Character.O, Generator.ECHECK, Shape.MINUS, True)
SCHUR_H = DetFormula(Character.SCHUR, Generator.H, Shape.PLAIN, False)
SCHUR_E = DetFormula(Character.SCHUR, Generator.E, Shape.PLAIN, True)

SP_FORMULAS = (SP_H_PLUS, SP_HCHECK_MINUS, SP_E_MINUS, SP_EHAT_PLUS)
O_FORMULAS = (O_H_MINUS, O_HHAT_PLUS, O_E_PLUS, O_ECHECK_MINUS)
ADMISSIBLE = frozenset(SP_FORMULAS + O_FORMULAS + (SCHUR_H, SCHUR_E))


def formula_for(character, generator):
    """La única fórmula admisible para (carácter, generador)."""
    for formula in ADMISSIBLE:
        if formula.character is Character(character) and formula.generator is Generator(generator):
            return formula
    raise InadmissibleFormulaError(
        f"No hay fórmula de determinante para {Character(character).value} con {Generator(generator).value}"
    )


# ==========================================
# MATRICES Y DETERMINANTE
# ==========================================

@dataclass(frozen=True)
class RingMatrix:
    """Matriz cuadrada k×k sobre un anillo conmutativo; ``unit`` es el 1 del anillo."""

    entries: tuple
    unit: object

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("RingMatrix debe ser cuadrada")
        object.__setattr__(self, "entries", rows)

    @property
    def k(self):
        return len(self.entries)

    @classmethod
    def build(cls, k, entry, unit):
        """``entry(i, j)`` con índices 1-based."""
        return cls(tuple(tuple(entry(i, j) for j in range(1, k + 1)) for i in range(1, k + 1)), unit)


def det_over_ring(matrix):
    """
    Laplace por la primera fila restante, memoizado por subconjunto de columnas usadas.

    O(2^k·k) productos del anillo; no necesita dividir.
    """
    k = matrix.k
    unit = matrix.unit
    if k == 0:
        return unit
    zero = unit * 0
    entries = matrix.entries
    full = (1 << k) - 1
    memo = {full: unit}

    def minor(mask):
        if mask in memo:
            return memo[mask]
        row = entries[bin(mask).count("1")]
        total = zero
        position = 0
        for j in range(k):
            if mask >> j & 1:
                continue
            entry = row[j]
            if entry:
                sub = minor(mask | (1 << j))
                if sub:
                    term = entry * sub
                    total = total - term if position % 2 else total + term
            position += 1
        memo[mask] = total
        return total

    return minor(0)


# ==========================================
# FÓRMULAS DE DETERMINANTE
# ==========================================

@lru_cache(maxsize=4096)
def _generator_value(generator, m):
    function, basis = _GENERATORS[generator]
    return function(m, basis)


def _shape_matrix(index, generator, shape):
    g = lambda m: _generator_value(generator, m)  # noqa: E731
    _, basis = _GENERATORS[generator]

    def entry(i, j):
        a = index.part(i) - i
        if shape is Shape.PLUS:
            return g(a + j) + g(a - j + 2)
        if shape is Shape.MINUS:
            return g(a + j) - g(a - j)
        return g(a + j)

    return RingMatrix.build(len(index), entry, SymFunc.one(basis))


def _shape_det(index, generator, shape):
    """Valor del determinante en la base nativa del generador, con el ½ de PLUS aplicado."""
    matrix = _shape_matrix(index, generator, shape)
    value = det_over_ring(matrix)
    if shape is Shape.PLUS and matrix.k:
        value = scale(value, Fraction(1, 2))
    return value


def evaluate_formula(lam, formula):
    """Valor en P de una fórmula admisible sobre λ."""
    if formula not in ADMISSIBLE:
        raise InadmissibleFormulaError(f"Fórmula no admisible: {formula.label}")
    return _evaluate_formula(Partition(lam), formula)


@lru_cache(maxsize=4096)
def _evaluate_formula(lam, formula):
    index = conjugate(lam) if formula.conjugated else lam
    return to_p(_shape_det(index, formula.generator, formula.shape))


def sp_det(lam, formula=SP_H_PLUS):
    if formula.character is not Character.SP:
        raise InadmissibleFormulaError(f"{formula.label} no es una fórmula simpléctica")
    return evaluate_formula(Partition(lam), formula)


def o_det(lam, formula=O_H_MINUS):
    if formula.character is not Character.O:
        raise InadmissibleFormulaError(f"{formula.label} no es una fórmula ortogonal")
    return evaluate_formula(Partition(lam), formula)


def schur_det(lam, formula=SCHUR_H):
    if formula.character is not Character.SCHUR:
        raise InadmissibleFormulaError(f"{formula.label} no es una fórmula de Jacobi–Trudi")
    return evaluate_formula(Partition(lam), formula)


def jacobi_trudi(lam, basis=Basis.H):
    """s_λ = det(h_{λi−i+j}) en H, o det(e_{λ′i−i+j}) en E."""
    lam = Partition(lam)
    if Basis(basis) is Basis.H:
        return _shape_det(lam, Generator.H, Shape.PLAIN)
    if Basis(basis) is Basis.E:
        return _shape_det(conjugate(lam), Generator.E, Shape.PLAIN)
    raise InadmissibleFormulaError(f"Jacobi–Trudi solo en h o e, no en {Basis(basis).value}")


def ystar_word_det(lam):
    """(−1)^{|λ|}·det(e_{λi−i+j} − e_{λi−i−j}), el valor de Y*_{λ1}⋯Y*_{λl}.1."""
    lam = Partition(lam)
    return scale(to_p(_shape_det(lam, Generator.E, Shape.MINUS)), (-1) ** lam.weight)


def ystar_word_det_reversed(lam):
    """Misma matriz con las columnas invertidas: (−1)^{|λ|+k(k−1)/2}·det(e_{λi−i−j+k+1} − e_{λi−i+j−k−1})."""
    lam = Partition(lam)
    k = len(lam)

    def entry(i, j):
        a = lam.part(i) - i
        return gen_e(a - j + k + 1, Basis.E) - gen_e(a + j - k - 1, Basis.E)

    value = det_over_ring(RingMatrix.build(k, entry, SymFunc.one(Basis.E)))
    return scale(to_p(value), (-1) ** (lam.weight + k * (k - 1) // 2))


def wstar_word_det(lam):
    """(−1)^{|λ|}/2·det(e_{λi−i+j} + e_{λi−i−j+2}), el valor de W*_{λ1}⋯W*_{λl}.1."""
    lam = Partition(lam)
    return scale(to_p(_shape_det(lam, Generator.E, Shape.PLUS)), (-1) ** lam.weight)


def det_from_entries(k, entry, prefactor=1, basis=Basis.P):
    """Determinante k×k de entradas arbitrarias ``entry(i, j)`` (1-based) en ``basis``, devuelto en P."""
    value = det_over_ring(RingMatrix.build(k, entry, SymFunc.one(basis)))
    return to_p(scale(value, prefactor))


# ==========================================
# NÚCLEOS TIPO VANDERMONDE
# ==========================================

class Kernel(str, Enum):
    D_TYPE = "d"
    C_TYPE = "c"
    C_REVERSED = "c-reversed"


@dataclass(frozen=True)
class KernelValues:
    lhs: object
    rhs_product: object
    rhs_sum: object

    @property
    def agree(self):
        return self.lhs == self.rhs_product == self.rhs_sum


def _permutation_sign(perm):
    inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return -1 if inversions % 2 else 1


def _prod(values, one):
    result = one
    for v in values:
        result = result * v
    return result


def _kernel_forms(kind, zs, one, det):
    """Las tres formas del núcleo; sirve igual para Fraction que para símbolos de sympy."""
    k = len(zs)
    pairs_lt = [(a, b) for a in range(k) for b in range(a + 1, k)]
    pairs_le = [(a, b) for a in range(k) for b in range(a, k)]
    total_product = _prod(zs, one)
    signed = list(product((1, -1), repeat=k))
    perms = [(perm, _permutation_sign(perm)) for perm in permutations(range(1, k + 1))]

    if kind is Kernel.D_TYPE:
        lhs = det(k, lambda i, j: zs[i - 1] ** (k - j) + zs[i - 1] ** (k + j - 2))
        rhs_product = 2 * _prod(((zs[a] - zs[b]) * (1 - zs[a] * zs[b]) for a, b in pairs_lt), one)
        inner = sum(
            (sign * _prod((zs[i] ** (eps[i] * (perm[i] - 1)) for i in range(k)), one)
             for perm, sign in perms for eps in signed),
            one * 0,
        )
        rhs_sum = total_product ** (k - 1) * inner
    elif kind is Kernel.C_TYPE:
        lhs = det(k, lambda i, j: zs[i - 1] ** (k - j) - zs[i - 1] ** (k + j))
        rhs_product = _prod((zs[a] - zs[b] for a, b in pairs_lt), one) * _prod(
            (1 - zs[a] * zs[b] for a, b in pairs_le), one
        )
        rhs_sum = sum(
            (sign * _prod(eps, 1) * _prod((zs[i] ** (k - eps[i] * perm[i]) for i in range(k)), one)
             for perm, sign in perms for eps in signed),
            one * 0,
        )
    else:
        lhs = det(k, lambda i, j: zs[i - 1] ** (j - 1) - zs[i - 1] ** (2 * k - j + 1))
        rhs_product = _prod((zs[b] - zs[a] for a, b in pairs_lt), one) * _prod(
            (1 - zs[a] * zs[b] for a, b in pairs_le), one
        )
        inner = sum(
            (sign * _prod(eps, 1) * _prod((zs[i] ** (eps[i] * (perm[i] - 1 - k)) for i in range(k)), one)
             for perm, sign in perms for eps in signed),
            one * 0,
        )
        rhs_sum = total_product ** k * inner
    return lhs, rhs_product, rhs_sum


def check_kernel_point(kind, point):
    zs = [Fraction(z) for z in point]
    if any(z == 0 for z in zs):
        raise DegeneratePointError(f"El punto contiene ceros: {point}")
    if len(set(zs)) != len(zs):
        raise DegeneratePointError(f"El punto tiene valores repetidos: {point}")
    diagonal = Kernel(kind) is not Kernel.D_TYPE
    for a in range(len(zs)):
        for b in range(a if diagonal else a + 1, len(zs)):
            if zs[a] * zs[b] == 1:
                raise DegeneratePointError(f"z_{a + 1}·z_{b + 1} = 1 en {point}")
    return zs


def vandermonde_kernel(kind, k, point):
    """Evalúa determinante, producto y suma con signo en un punto racional exacto."""
    kind = Kernel(kind)
    if len(point) != k:
        raise DegeneratePointError(f"Se esperaban {k} coordenadas, recibidas {len(point)}")
    zs = check_kernel_point(kind, point)
    det = lambda size, entry: det_over_ring(RingMatrix.build(size, entry, Fraction(1)))  # noqa: E731
    values = KernelValues(*_kernel_forms(kind, zs, Fraction(1), det))
    if not values.agree:
        logger.warning(
            f"Núcleo {kind.value} no coincide en {point}",
            extra={"event.action": "kernel-mismatch", "weylschur.kernel": kind.value},
        )
    return values


def kernel_symbolic_residuals(kind, k):
    """
    Desarrollo simbólico exacto con sympy: devuelve (det − producto, det − suma),
    ya simplificados. Ambos deben ser 0.
    """
    import sympy

    zs = list(sympy.symbols(f"z1:{k + 1}"))
    det = lambda size, entry: sympy.Matrix(size, size, lambda i, j: entry(i + 1, j + 1)).det()  # noqa: E731
    lhs, rhs_product, rhs_sum = _kernel_forms(Kernel(kind), zs, sympy.Integer(1), det)
    return (
        sympy.cancel(sympy.together(sympy.expand(lhs - rhs_product))),
        sympy.cancel(sympy.together(sympy.expand(lhs - rhs_sum))),
    )


def random_kernel_point(rng, kind, k):
    """Punto racional pequeño no degenerado, sacado de ``rng`` con rechazo."""
    while True:
        point = [Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5)) for _ in range(k)]
        try:
            check_kernel_point(kind, point)
        except DegeneratePointError:
            continue
        return point


def invalidate_caches():
    _generator_value.cache_clear()
    _evaluate_formula.cache_clear()
