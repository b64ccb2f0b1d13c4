"""
Especializaciones Λ → ℚ inducidas por multiconjuntos finitos de variables y
oráculos de caracteres de Weyl por fuerza bruta sobre permutaciones con signo.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product

from src.partition import Partition
from src.symring import to_p
from src.weyldet import o_det, sp_det

logger = logging.getLogger(__name__)


class MissingPowerSumError(ValueError):
    """El punto no define p_n para algún n que aparece en el elemento."""


class DegenerateCharacterError(ValueError):
    """Denominador de Weyl nulo en el punto; hay que reintentar con otro punto."""

    retry = True


class RankError(ValueError):
    """ℓ(λ) no cabe en el rango pedido."""


class Provenance(str, Enum):
    SYMPLECTIC = "symplectic"
    ODD_ORTHOGONAL = "odd-orthogonal"
    EVEN_ORTHOGONAL = "even-orthogonal"
    RAW = "raw"


@dataclass(frozen=True)
class EvalPoint:
    """p_n ↦ p_values[n−1] para 1 ≤ n ≤ N."""

    p_values: tuple
    provenance: Provenance
    variables: tuple = ()

    @property
    def N(self):
        return len(self.p_values)

    def p(self, n):
        if not 1 <= n <= len(self.p_values):
            raise MissingPowerSumError(f"p_{n} no está definido (N = {self.N})")
        return self.p_values[n - 1]

    @classmethod
    def _paired(cls, xs, N, provenance, constant):
        xs = tuple(Fraction(x) for x in xs)
        if any(x == 0 for x in xs):
            raise ValueError(f"Las variables deben ser no nulas: {xs}")
        values = tuple(constant + sum(x ** n + x ** -n for x in xs) for n in range(1, N + 1))
        return cls(values, provenance, xs)

    @classmethod
    def symplectic(cls, xs, N):
        """p_n = Σ (x_i^n + x_i^{−n})"""
        return cls._paired(xs, N, Provenance.SYMPLECTIC, 0)

    @classmethod
    def odd_orthogonal(cls, xs, N):
        """p_n = 1 + Σ (x_i^n + x_i^{−n})"""
        return cls._paired(xs, N, Provenance.ODD_ORTHOGONAL, 1)

    @classmethod
    def even_orthogonal(cls, xs, N):
        """p_n = Σ (x_i^n + x_i^{−n})"""
        return cls._paired(xs, N, Provenance.EVEN_ORTHOGONAL, 0)

    @classmethod
    def raw(cls, values):
        return cls(tuple(Fraction(v) for v in values), Provenance.RAW, ())

    def with_unit_pair(self):
        """Añade el par (t, t^{−1}) con t = 1: p_n += 2."""
        return EvalPoint(
            tuple(v + 2 for v in self.p_values),
            self.provenance,
            self.variables + (Fraction(1),),
        )


def evaluate(f, pt):
    """Homomorfismo de anillos p_n ↦ pt.p(n)."""
    total = Fraction(0)
    for lam, coeff in to_p(f).terms.items():
        value = coeff
        for part in lam:
            value *= pt.p(part)
        total += value
    return total


# ==========================================
# GRUPOS DE WEYL
# ==========================================

@dataclass(frozen=True)
class SignedPermutation:
    """w actúa como (wμ)_i = ε_i·μ_{σ(i)}; σ en notación 1-based."""

    perm: tuple
    signs: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"No es una permutación: {self.perm}")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"Signos inválidos: {self.signs}")

    @property
    def n(self):
        return len(self.perm)

    @property
    def is_even_signed(self):
        return self.signs.count(-1) % 2 == 0

    def sign(self):
        """det de la matriz de permutación con signo: sgn(σ)·∏ε."""
        inversions = sum(
            1 for a in range(self.n) for b in range(a + 1, self.n) if self.perm[a] > self.perm[b]
        )
        result = -1 if inversions % 2 else 1
        for s in self.signs:
            result *= s
        return result

    def act(self, weight):
        return tuple(self.signs[i] * weight[self.perm[i] - 1] for i in range(self.n))

    def compose(self, other):
        """(self ∘ other)μ = self(other(μ))."""
        perm = tuple(other.perm[self.perm[i] - 1] for i in range(self.n))
        signs = tuple(self.signs[i] * other.signs[self.perm[i] - 1] for i in range(self.n))
        return SignedPermutation(perm, signs)

    def inverse(self):
        perm = [0] * self.n
        signs = [1] * self.n
        for i in range(self.n):
            perm[self.perm[i] - 1] = i + 1
            signs[self.perm[i] - 1] = self.signs[i]
        return SignedPermutation(tuple(perm), tuple(signs))

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)), (1,) * n)


def weyl_group(group_type, n):
    """B/C: 2^n·n! elementos; D: solo cambios de signo pares, 2^{n−1}·n!."""
    group_type = group_type.upper()
    elements = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            w = SignedPermutation(perm, signs)
            if group_type == "D" and not w.is_even_signed:
                continue
            elements.append(w)
    return elements


def rho(group_type, n):
    group_type = group_type.upper()
    if group_type == "C":
        return tuple(Fraction(n - i) for i in range(n))
    if group_type == "B":
        return tuple(Fraction(2 * (n - i) - 1, 2) for i in range(n))
    if group_type == "D":
        return tuple(Fraction(n - 1 - i) for i in range(n))
    raise ValueError(f"Tipo de grupo desconocido: {group_type}")


def _alternant(group, weight, xs, shift, scale):
    total = Fraction(0)
    for w in group:
        term = Fraction(w.sign())
        for x, e in zip(xs, w.act(weight)):
            exponent = (e - shift) * scale
            term *= x ** int(exponent)
        total += term
    return total


def _weyl_ratio(group_type, n, weight, xs, ys=None):
    group_type = group_type.upper()
    group = weyl_group(group_type, n)
    r = rho(group_type, n)
    shifted = tuple(Fraction(weight[i]) + r[i] for i in range(n))
    if group_type == "B" and ys is not None:
        # x_i = y_i²: exponentes duplicados, todos enteros
        variables, shift, scale = tuple(Fraction(y) for y in ys), 0, 2
    elif group_type == "B":
        # el factor común (x_1⋯x_n)^{1/2} se cancela entre numerador y denominador
        variables, shift, scale = tuple(Fraction(x) for x in xs), Fraction(1, 2), 1
    else:
        variables, shift, scale = tuple(Fraction(x) for x in xs), 0, 1
    denominator = _alternant(group, r, variables, shift, scale)
    if denominator == 0:
        raise DegenerateCharacterError(f"Denominador de Weyl nulo en {list(map(str, variables))}")
    return _alternant(group, shifted, variables, shift, scale) / denominator


def weyl_character(group_type, n, lam, xs, ys=None):
    """
    Σ_w sgn(w) x^{w(λ+ρ)} / Σ_w sgn(w) x^{wρ} sumando sobre el grupo de Weyl.

    En tipo B se pueden pasar ``ys`` con x_i = y_i².
    """
    lam = Partition(lam)
    if len(lam) > n:
        raise RankError(f"ℓ({list(lam)}) = {len(lam)} > rango {n}")
    if ys is not None:
        if group_type.upper() != "B":
            raise ValueError("ys solo tiene sentido en tipo B")
        if len(ys) != n:
            raise RankError(f"Se esperaban {n} valores y, recibidos {len(ys)}")
    elif len(xs) != n:
        raise RankError(f"Se esperaban {n} variables, recibidas {len(xs)}")
    if any(Fraction(x) == 0 for x in (ys if ys is not None else xs)):
        raise DegenerateCharacterError("Variables nulas")
    weight = tuple(lam.part(i) for i in range(1, n + 1))
    return _weyl_ratio(group_type, n, weight, xs, ys)


# ==========================================
# CONTRASTE UNIVERSAL / ORÁCULO
# ==========================================

class CheckKind(str, Enum):
    SP = "sp"
    O_ODD = "o-odd"
    O_EVEN = "o-even"


_GROUP_LABELS = {CheckKind.SP: "Sp", CheckKind.O_ODD: "SO_odd", CheckKind.O_EVEN: "SO_even"}
_GROUP_TYPES = {CheckKind.SP: "C", CheckKind.O_ODD: "B", CheckKind.O_EVEN: "D"}


@dataclass(frozen=True)
class CrossCheck:
    kind: CheckKind
    lam: Partition
    point: tuple
    universal: Fraction
    oracle: Fraction

    @property
    def agree(self):
        return self.universal == self.oracle

    def to_json(self):
        from src.utils import format_fraction
        return {
            "lambda": list(self.lam),
            "group": _GROUP_LABELS[self.kind],
            "rank": len(self.point),
            "point": [format_fraction(x) for x in self.point],
            "universal": format_fraction(self.universal),
            "oracle": format_fraction(self.oracle),
        }


def _universal(kind, lam, xs):
    N = max(Partition(lam).weight, 1)
    if kind is CheckKind.SP:
        return evaluate(sp_det(lam), EvalPoint.symplectic(xs, N))
    if kind is CheckKind.O_ODD:
        return evaluate(o_det(lam), EvalPoint.odd_orthogonal(xs, N))
    return evaluate(o_det(lam), EvalPoint.even_orthogonal(xs, N))


def character_crosscheck(kind, lam, xs):
    """Pareja (especialización de sp_λ / o_λ, carácter de Weyl) en el punto xs."""
    kind = CheckKind(kind)
    lam = Partition(lam)
    xs = tuple(Fraction(x) for x in xs)
    n = len(xs)
    # 1. En tipo D solo cabe ℓ(λ) < n
    limit = n - 1 if kind is CheckKind.O_EVEN else n
    if len(lam) > limit:
        raise RankError(f"ℓ({list(lam)}) = {len(lam)} excede el máximo {limit} para {kind.value} de rango {n}")
    # 2. Oráculo de Weyl frente a la especialización universal
    oracle = weyl_character(_GROUP_TYPES[kind], n, lam, xs)
    return CrossCheck(kind, lam, xs, _universal(kind, lam, xs), oracle)


@dataclass(frozen=True)
class EvenOrthogonalReport:
    lam: Partition
    point: tuple
    universal: Fraction
    chi: Fraction
    chi_sigma: Fraction

    @property
    def matches_sum(self):
        return self.universal == self.chi + self.chi_sigma

    @property
    def matches_single(self):
        return self.universal == self.chi


def even_orthogonal_report(lam, xs):
    """
    Para ℓ(λ) = n en tipo D: o_λ especializado junto a χ_λ y χ_{σ(λ)}, con σ
    cambiando el signo de la última coordenada. No afirma nada, solo informa.
    """
    lam = Partition(lam)
    xs = tuple(Fraction(x) for x in xs)
    n = len(xs)
    if len(lam) > n:
        raise RankError(f"ℓ({list(lam)}) > rango {n}")
    weight = tuple(lam.part(i) for i in range(1, n + 1))
    flipped = weight[:-1] + (-weight[-1],)
    report = EvenOrthogonalReport(
        lam,
        xs,
        _universal(CheckKind.O_EVEN, lam, xs),
        _weyl_ratio("D", n, weight, xs),
        _weyl_ratio("D", n, flipped, xs),
    )
    logger.info(
        f"O(2n) λ={list(lam)}: universal={report.universal}, χ={report.chi}, χσ={report.chi_sigma}",
        extra={
            "event.action": "even-orthogonal-report",
            "weylschur.matches_sum": report.matches_sum,
            "weylschur.matches_single": report.matches_single,
        },
    )
    return report


def random_generic_point(rng, n, group_type="C"):
    """Racionales pequeños distintos y no nulos con denominador de Weyl ≠ 0."""
    while True:
        xs = [Fraction(rng.choice([-1, 1]) * rng.randint(1, 7), rng.randint(1, 4)) for _ in range(n)]
        try:
            _weyl_ratio(group_type, n, (0,) * n, xs)
        except DegenerateCharacterError:
            logger.debug("Punto degenerado descartado", extra={"event.action": "point-retry"})
            continue
        return xs


def symplectic_h_series(xs, m):
    """h_m evaluado directamente en las 2n variables {x_i, x_i^{−1}}."""
    if m < 0:
        return Fraction(0)
    variables = [Fraction(x) for x in xs] + [1 / Fraction(x) for x in xs]
    total = Fraction(0)
    for combo in combinations_with_replacement(range(len(variables)), m):
        term = Fraction(1)
        for index in combo:
            term *= variables[index]
        total += term
    return total
