"""
Acción de los operadores de vértice S, S*, Y, Y*, W, W* sobre Λ.

Cada operador es prefactor(z)·C(z)·exp(anihilación). En la base P la
exponencial de anihilación es una sustitución p_n ↦ p_n ± (z^{−n} [+ z^{n}]),
así que aplicar un modo se reduce a desarrollar esa sustitución en un
polinomio de Laurent finito y leer un coeficiente.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from src.partition import Partition, conjugate, to_frobenius
from src.symring import (
    Basis,
    SymFunc,
    gen_e,
    gen_h,
    linear_combination,
    multiply,
    to_p,
)

logger = logging.getLogger(__name__)


class Family(str, Enum):
    S = "S"
    S_STAR = "S*"
    Y = "Y"
    Y_STAR = "Y*"
    W = "W"
    W_STAR = "W*"


@dataclass(frozen=True)
class OperatorSpec:
    """
    Descriptor de un operador de vértice.

    ``prefactor`` es un polinomio de Laurent entero como tupla de pares
    (exponente, coeficiente). ``lowering`` indica si el modo n es el
    coeficiente de z^{−n} (S, Y, W) o de z^{n} (familias con estrella).
    """

    family: Family
    creation_sign: int
    annih_sign: int
    symmetric_shift: bool
    prefactor: tuple
    lowering: bool

    @property
    def annih_pattern(self):
        return "z^{-n}+z^{n}" if self.symmetric_shift else "z^{-n}"

    def target_exponent(self, n):
        return -n if self.lowering else n

    def __str__(self):
        return self.family.value


_ONE = ((0, 1),)
_ONE_MINUS_Z2 = ((0, 1), (2, -1))

S = OperatorSpec(Family.S, +1, -1, False, _ONE, True)
S_STAR = OperatorSpec(Family.S_STAR, -1, +1, False, _ONE, False)
Y = OperatorSpec(Family.Y, +1, -1, True, _ONE, True)
Y_STAR = OperatorSpec(Family.Y_STAR, -1, +1, True, _ONE_MINUS_Z2, False)
W = OperatorSpec(Family.W, +1, -1, True, _ONE_MINUS_Z2, True)
W_STAR = OperatorSpec(Family.W_STAR, -1, +1, True, _ONE, False)

SPECS = {spec.family: spec for spec in (S, S_STAR, Y, Y_STAR, W, W_STAR)}


def spec_for(family):
    return SPECS[Family(family)]


@dataclass(frozen=True)
class LaurentSlice:
    """Polinomio de Laurent finito en z con coeficientes SymFunc (exponente → SymFunc)."""

    coeffs: tuple

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(sorted((e, f) for e, f in data.items() if f)))

    def as_dict(self):
        return dict(self.coeffs)

    def exponents(self):
        return [e for e, _ in self.coeffs]

    def __getitem__(self, exponent):
        return self.as_dict().get(exponent, SymFunc.zero(Basis.P))


# ==========================================
# ANIQUILACIÓN
# ==========================================

@lru_cache(maxsize=65536)
def _shifted_monomial(lam, sign, symmetric):
    """
    Desarrollo de ∏ (p_{λi} + sign·u_{λi}) con u_n = z^{−n} (+ z^{n}).

    Devuelve tuplas (exponente, partición restante, coeficiente entero).
    """
    acc = {(0, Partition()): 1}
    for part, mult in Counter(lam).items():
        factor = {}
        for taken in range(mult + 1):
            # C(m, j)·p^{m−j}·(sign·u)^j
            base = comb(mult, taken) * sign ** taken
            rest = Partition.trusted((part,) * (mult - taken))
            if symmetric:
                for plus in range(taken + 1):
                    exponent = part * (2 * plus - taken)
                    key = (exponent, rest)
                    factor[key] = factor.get(key, 0) + base * comb(taken, plus)
            else:
                key = (-part * taken, rest)
                factor[key] = factor.get(key, 0) + base
        merged = {}
        for (e1, mu1), c1 in acc.items():
            for (e2, mu2), c2 in factor.items():
                if not c2:
                    continue
                key = (e1 + e2, mu1.concat(mu2))
                merged[key] = merged.get(key, 0) + c1 * c2
        acc = {key: c for key, c in merged.items() if c}
    return tuple((e, mu, c) for (e, mu), c in acc.items())


def _annihilate(spec, f):
    out = {}
    for lam, coeff in to_p(f).terms.items():
        for exponent, mu, c in _shifted_monomial(lam, spec.annih_sign, spec.symmetric_shift):
            bucket = out.setdefault(exponent, {})
            bucket[mu] = bucket.get(mu, 0) + coeff * c
    return {
        e: SymFunc._raw(Basis.P, {mu: c for mu, c in terms.items() if c})
        for e, terms in out.items()
    }


def apply_annihilation(spec, f):
    """Exponencial de anihilación como sustitución p_n ↦ p_n + annih_sign·(z^{−n} [+ z^{n}])."""
    return LaurentSlice.from_dict(_annihilate(spec, f))


def annihilation_by_series(spec, f):
    """
    Misma exponencial calculada directamente: exp(annih_sign·Σ_n (∂/∂p_n)·u_n),
    con u_n = z^{−n} (+ z^{n}), sumando potencias del operador hasta que se anulan.

    Solo como referencia independiente de la sustitución.
    """
    f = to_p(f)
    degree = max(f.degree, 0)
    # término k de la serie: (1/k!)·D^k f con D = sign·Σ u_n ∂_n
    current = {0: f}
    total = {0: f}
    k = 0
    while current:
        k += 1
        following = {}
        for exponent, g in current.items():
            for lam, c in g.terms.items():
                for n, mult in Counter(lam).items():
                    derived = list(lam)
                    derived.remove(n)
                    mu = Partition.trusted(derived)
                    value = Fraction(c * mult * spec.annih_sign, k)
                    shifts = (-n, n) if spec.symmetric_shift else (-n,)
                    for shift in shifts:
                        bucket = following.setdefault(exponent + shift, {})
                        bucket[mu] = bucket.get(mu, 0) + value
        current = {
            e: SymFunc(Basis.P, terms) for e, terms in following.items()
        }
        current = {e: g for e, g in current.items() if g}
        for e, g in current.items():
            total[e] = total[e] + g if e in total else g
        if k > degree:
            break
    return LaurentSlice.from_dict(total)


# ==========================================
# MODOS
# ==========================================

@lru_cache(maxsize=512)
def _creation_coefficient(sign, m):
    """c_m de la serie de creación: h_m si sign = +1, (−1)^m e_m si sign = −1."""
    if sign > 0:
        return gen_h(m)
    value = gen_e(m)
    return -value if m % 2 else value


def mode(spec, n, f):
    """
    Coeficiente de z^{−n} (o z^{n}) en prefactor·C(z)·apply_annihilation(spec, f).

    Resultado en P; puede ser 0.
    """
    target = spec.target_exponent(n)
    pieces = []
    for a, slice_coeff in _annihilate(spec, f).items():
        for b, pi in spec.prefactor:
            m = target - a - b
            if m < 0:
                continue
            pieces.append((pi, multiply(_creation_coefficient(spec.creation_sign, m), slice_coeff)))
    return linear_combination(Basis.P, pieces)


def mode_word(word, f=None):
    """Aplica [(spec, n), …] de derecha a izquierda sobre f (por defecto el vacío 1)."""
    value = SymFunc.one(Basis.P) if f is None else to_p(f)
    for spec, n in reversed(list(word)):
        if not value:
            break
        value = mode(spec, n, value)
    return value


def degree_bound(spec, n, f):
    """Cota del grado de mode(spec, n, f): deg f ∓ n, más 2 si el prefactor es 1 − z²."""
    d = max(to_p(f).degree, 0)
    bump = 2 if len(spec.prefactor) > 1 else 0
    return d - n + bump if spec.lowering else d + n + bump


# ==========================================
# REALIZACIONES
# ==========================================

def _lowering_word(spec, lam):
    return mode_word([(spec, -part) for part in Partition(lam)])


def _dual_word(spec, lam):
    lam = Partition(lam)
    value = mode_word([(spec, part) for part in conjugate(lam)])
    return -value if lam.weight % 2 else value


def sp_vertex(lam):
    """Y_{−λ1}⋯Y_{−λk}.1"""
    return _lowering_word(Y, lam)


def o_vertex(lam):
    """W_{−λ1}⋯W_{−λk}.1"""
    return _lowering_word(W, lam)


def schur_vertex(lam):
    """S_{−λ1}⋯S_{−λk}.1"""
    return _lowering_word(S, lam)


def sp_dual_vertex(lam):
    """(−1)^{|λ|}·Y*_{λ′1}⋯Y*_{λ′l}.1"""
    return _dual_word(Y_STAR, lam)


def o_dual_vertex(lam):
    """(−1)^{|λ|}·W*_{λ′1}⋯W*_{λ′l}.1"""
    return _dual_word(W_STAR, lam)


def schur_dual_vertex(lam):
    """(−1)^{|λ|}·S*_{λ′1}⋯S*_{λ′l}.1"""
    return _dual_word(S_STAR, lam)


class FrobeniusVariant(str, Enum):
    CREATION_FIRST = "creation"
    ANNIHILATION_FIRST = "annihilation"
    ANNIHILATION_FIRST_AS_PRINTED = "annihilation-printed"


_KIND_SPECS = {
    "sp": (Y, Y_STAR),
    "o": (W, W_STAR),
    "schur": (S, S_STAR),
}


def frobenius_word(kind, fc, variant):
    """Signo y palabra [(spec, n), …] de la realización en coordenadas de Frobenius."""
    lower, upper = _KIND_SPECS[str(getattr(kind, "value", kind)).lower()]
    alpha, beta, r = fc.alpha, fc.beta, fc.rank
    variant = FrobeniusVariant(variant)
    if variant is FrobeniusVariant.CREATION_FIRST:
        # (−1)^{|β|+r(r−1)/2} X_{−α1−1}⋯X_{−αr−r} X*_{β1−(r−1)}⋯X*_{βr}
        sign = (-1) ** (sum(beta) + r * (r - 1) // 2)
        word = [(lower, -alpha[i] - (i + 1)) for i in range(r)]
        word += [(upper, beta[i] - (r - 1 - i)) for i in range(r)]
    elif variant is FrobeniusVariant.ANNIHILATION_FIRST:
        # (−1)^{|β|+r(r+1)/2} X*_{β1+1}⋯X*_{βr+r} X_{−α1+(r−1)}⋯X_{−αr}
        sign = (-1) ** (sum(beta) + r * (r + 1) // 2)
        word = [(upper, beta[i] + i + 1) for i in range(r)]
        word += [(lower, -alpha[i] + (r - 1 - i)) for i in range(r)]
    else:
        # (−1)^{|β|+r} X*_{β1−1}⋯X*_{βr−r} X_{−α1+(r−1)}⋯X_{−αr}; se anula ya en λ = (1)
        sign = (-1) ** (sum(beta) + r)
        word = [(upper, beta[i] - (i + 1)) for i in range(r)]
        word += [(lower, -alpha[i] + (r - 1 - i)) for i in range(r)]
    return sign, word


def frobenius_vertex(kind, fc, variant=FrobeniusVariant.CREATION_FIRST):
    if isinstance(fc, (tuple, list)) and not hasattr(fc, "alpha"):
        fc = to_frobenius(fc)
    sign, word = frobenius_word(kind, fc, variant)
    value = mode_word(word)
    return -value if sign < 0 else value


# ==========================================
# RELACIONES DE CLIFFORD
# ==========================================

class CliffordPair(str, Enum):
    YY = "YY"
    YSTAR_YSTAR = "YSTAR_YSTAR"
    Y_YSTAR = "Y_YSTAR"
    WW = "WW"
    WSTAR_WSTAR = "WSTAR_WSTAR"
    W_WSTAR = "W_WSTAR"
    SS = "SS"
    SSTAR_SSTAR = "SSTAR_SSTAR"
    S_SSTAR = "S_SSTAR"


_PAIR_SPECS = {
    CliffordPair.YY: (Y, Y),
    CliffordPair.YSTAR_YSTAR: (Y_STAR, Y_STAR),
    CliffordPair.Y_YSTAR: (Y, Y_STAR),
    CliffordPair.WW: (W, W),
    CliffordPair.WSTAR_WSTAR: (W_STAR, W_STAR),
    CliffordPair.W_WSTAR: (W, W_STAR),
    CliffordPair.SS: (S, S),
    CliffordPair.SSTAR_SSTAR: (S_STAR, S_STAR),
    CliffordPair.S_SSTAR: (S, S_STAR),
}


def clifford_residual(pair, m, n, f):
    """
    (LHS − RHS)(f) para:
      X_m X_n + X_{n+1} X_{m−1} = 0
      X*_m X*_n + X*_{n−1} X*_{m+1} = 0
      X_m X*_n + X*_{n+1} X_{m+1} = δ_{m,n}
    """
    pair = CliffordPair(pair)
    first, second = _PAIR_SPECS[pair]
    f = to_p(f)
    if first is second and first.lowering:
        lhs = mode_word([(first, m), (first, n)], f) + mode_word([(first, n + 1), (first, m - 1)], f)
        return lhs
    if first is second:
        lhs = mode_word([(first, m), (first, n)], f) + mode_word([(first, n - 1), (first, m + 1)], f)
        return lhs
    lhs = mode_word([(first, m), (second, n)], f) + mode_word([(second, n + 1), (first, m + 1)], f)
    return lhs - f if m == n else lhs


# ==========================================
# RELACIONES ENTRE W E Y
# ==========================================

class ModeRelation(str, Enum):
    W_FROM_Y = "W_FROM_Y"                                  # W_n = Y_n − Y_{n+2}
    W_FROM_Y_PRINTED = "W_FROM_Y_PRINTED"                  # W_n = Y_n − Y_{n−2}
    Y_FROM_W = "Y_FROM_W"                                  # Y_n = Σ_k W_{n+2k}
    Y_FROM_W_PRINTED = "Y_FROM_W_PRINTED"                  # Y_n = Σ_k W_{n−2k}
    YSTAR_FROM_WSTAR = "YSTAR_FROM_WSTAR"                  # Y*_n = W*_n − W*_{n−2}
    YSTAR_FROM_WSTAR_PRINTED = "YSTAR_FROM_WSTAR_PRINTED"  # Y*_n = W*_n − W*_{n+2}
    WSTAR_FROM_YSTAR = "WSTAR_FROM_YSTAR"                  # W*_n = Σ_k Y*_{n−2k}
    WSTAR_FROM_YSTAR_PRINTED = "WSTAR_FROM_YSTAR_PRINTED"  # W*_n = Σ_k Y*_{n+2k}


def _series(spec, start, step, f, max_terms):
    """Σ_{k≥0} X_{start+k·step} f, cortando donde los modos se anulan sobre f o tras max_terms."""
    d = max(f.degree, 0)
    total = SymFunc.zero(Basis.P)
    for k in range(max_terms):
        index = start + k * step
        if spec.lowering and step > 0 and index > d:
            break
        if not spec.lowering and step < 0 and index < -d:
            break
        total = total + mode(spec, index, f)
    return total


def mode_relation_residual(relation_id, n, f, max_terms=64):
    """Lado izquierdo menos lado derecho de la relación aplicada a f."""
    relation = ModeRelation(relation_id)
    f = to_p(f)
    if relation is ModeRelation.W_FROM_Y:
        return mode(W, n, f) - (mode(Y, n, f) - mode(Y, n + 2, f))
    if relation is ModeRelation.W_FROM_Y_PRINTED:
        return mode(W, n, f) - (mode(Y, n, f) - mode(Y, n - 2, f))
    if relation is ModeRelation.Y_FROM_W:
        return mode(Y, n, f) - _series(W, n, 2, f, max_terms)
    if relation is ModeRelation.Y_FROM_W_PRINTED:
        return mode(Y, n, f) - _series(W, n, -2, f, max_terms)
    if relation is ModeRelation.YSTAR_FROM_WSTAR:
        return mode(Y_STAR, n, f) - (mode(W_STAR, n, f) - mode(W_STAR, n - 2, f))
    if relation is ModeRelation.YSTAR_FROM_WSTAR_PRINTED:
        return mode(Y_STAR, n, f) - (mode(W_STAR, n, f) - mode(W_STAR, n + 2, f))
    if relation is ModeRelation.WSTAR_FROM_YSTAR:
        return mode(W_STAR, n, f) - _series(Y_STAR, n, -2, f, max_terms)
    return mode(W_STAR, n, f) - _series(Y_STAR, n, 2, f, max_terms)


def relation_report(n, f, max_terms=16):
    """Qué relaciones se cumplen sobre f; se registra en el log."""
    report = {}
    for relation in ModeRelation:
        holds = not mode_relation_residual(relation, n, f, max_terms)
        report[relation.value] = holds
        logger.info(
            f"Relación {relation.value} en n={n}: {'se cumple' if holds else 'falla'}",
            extra={"event.action": "mode-relation", "weylschur.relation": relation.value, "weylschur.holds": holds},
        )
    return report


def invalidate_caches():
    _shifted_monomial.cache_clear()
    _creation_coefficient.cache_clear()
