"""
El anillo Λ de funciones simétricas sobre ℚ.

Un elemento es un mapa disperso partición → Fraction en una base declarada
(p, h, e o s). La base canónica es P: los operadores de vértice actúan por
sustitución ahí y el producto de Hall es diagonal. H y E también son bases
multiplicativas, así que el producto se hace concatenando partes; SCHUR pasa
por P.
"""
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

from src.partition import EMPTY, Partition, partitions_of, z_of


class Basis(str, Enum):
    P = "p"
    H = "h"
    E = "e"
    SCHUR = "s"


MULTIPLICATIVE = (Basis.P, Basis.H, Basis.E)


class BasisMismatchError(ValueError):
    """Operación entre elementos de bases distintas sin conversión previa."""


class SymFunc:
    """
    Elemento inmutable de Λ.

    ``terms`` nunca contiene coeficientes nulos; el grado de un término es |λ|.
    """

    __slots__ = ("basis", "_terms", "_hash")

    def __init__(self, basis, terms=None):
        basis = Basis(basis)
        clean = {}
        for lam, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                key = lam if isinstance(lam, Partition) else Partition(lam)
                clean[key] = clean.get(key, 0) + coeff
        self.basis = basis
        self._terms = {lam: c for lam, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, basis, terms):
        # terms ya limpio: claves Partition, Fraction no nulas
        obj = cls.__new__(cls)
        obj.basis = basis
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, basis=Basis.P):
        return cls._raw(Basis(basis), {})

    @classmethod
    def one(cls, basis=Basis.P):
        return cls._raw(Basis(basis), {EMPTY: Fraction(1)})

    @classmethod
    def monomial(cls, basis, lam, coeff=1):
        return cls(basis, {Partition(lam): coeff})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coefficient(self, lam):
        return self._terms.get(Partition(lam), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    # ==========================================
    # GRADUACIÓN
    # ==========================================

    @property
    def degree(self):
        """Grado máximo; −1 para el cero."""
        return max((lam.weight for lam in self._terms), default=-1)

    def weights(self):
        return sorted({lam.weight for lam in self._terms})

    def truncate(self, d):
        return SymFunc._raw(self.basis, {lam: c for lam, c in self._terms.items() if lam.weight <= d})

    def component(self, n):
        return SymFunc._raw(self.basis, {lam: c for lam, c in self._terms.items() if lam.weight == n})

    def is_homogeneous(self):
        return len(self.weights()) <= 1

    def sorted_terms(self):
        """Términos por (peso, partición) descendente, el orden de la salida serializada."""
        return sorted(self._terms.items(), key=lambda item: (item[0].weight, tuple(item[0])), reverse=True)

    # ==========================================
    # ARITMÉTICA
    # ==========================================

    def _check_basis(self, other):
        if self.basis is not other.basis:
            raise BasisMismatchError(
                f"Bases distintas: {self.basis.value} y {other.basis.value}; convierte antes"
            )

    def __add__(self, other):
        if isinstance(other, SymFunc):
            return add(self, other)
        if isinstance(other, (int, Fraction)):
            return add(self, scale(SymFunc.one(self.basis), other))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return scale(self, -1)

    def __sub__(self, other):
        if isinstance(other, (SymFunc, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, Fraction(1) / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.basis is other.basis and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {EMPTY: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            # las constantes son == a su número, así que hashean igual que él
            if not self._terms:
                self._hash = hash(0)
            elif len(self._terms) == 1 and EMPTY in self._terms:
                self._hash = hash(self._terms[EMPTY])
            else:
                self._hash = hash((self.basis, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from src.utils import render_text
        return f"SymFunc<{self.basis.value}>({render_text(self)})"

    # ==========================================
    # SERIALIZACIÓN
    # ==========================================

    def to_json(self):
        from src.utils import format_fraction
        return {
            "basis": self.basis.value,
            "terms": [
                {"partition": list(lam), "coeff": format_fraction(coeff)}
                for lam, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["basis"],
            {Partition(term["partition"]): Fraction(term["coeff"]) for term in data["terms"]},
        )


# ==========================================
# ESTRUCTURA DE ANILLO
# ==========================================

def add(f, g):
    f._check_basis(g)
    if not g._terms:
        return f
    if not f._terms:
        return g
    out = dict(f._terms)
    for lam, c in g._terms.items():
        total = out.get(lam, 0) + c
        if total:
            out[lam] = total
        else:
            out.pop(lam, None)
    return SymFunc._raw(f.basis, out)


def scale(f, c):
    c = Fraction(c)
    if not c:
        return SymFunc.zero(f.basis)
    if c == 1:
        return f
    return SymFunc._raw(f.basis, {lam: coeff * c for lam, coeff in f._terms.items()})


def multiply(f, g):
    """Producto exacto. En P, H y E los monomios se concatenan; SCHUR se multiplica en P."""
    f._check_basis(g)
    if f.basis is Basis.SCHUR:
        return to_schur_expansion(multiply(to_p(f), to_p(g)))
    out = {}
    for lam, a in f._terms.items():
        for mu, b in g._terms.items():
            key = lam.concat(mu)
            out[key] = out.get(key, 0) + a * b
    return SymFunc._raw(f.basis, {lam: c for lam, c in out.items() if c})


def linear_combination(basis, pairs):
    """Σ c_i·f_i acumulado en un solo diccionario."""
    out = {}
    for coeff, f in pairs:
        if not coeff:
            continue
        for lam, c in f._terms.items():
            out[lam] = out.get(lam, 0) + coeff * c
    return SymFunc._raw(Basis(basis), {lam: c for lam, c in out.items() if c})


# ==========================================
# GENERADORES
# ==========================================

@lru_cache(maxsize=256)
def _h_in_p(n):
    # h_n = Σ_{λ⊢n} p_λ / z_λ
    return SymFunc._raw(Basis.P, {lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)})


@lru_cache(maxsize=256)
def _e_in_p(n):
    # e_n = Σ_{λ⊢n} (−1)^{n−ℓ(λ)} p_λ / z_λ
    return SymFunc._raw(
        Basis.P,
        {lam: Fraction((-1) ** (n - len(lam)), z_of(lam)) for lam in partitions_of(n)},
    )


def gen_h(n, basis=Basis.P):
    """h_n con h_0 = 1 y h_n = 0 para n < 0."""
    basis = Basis(basis)
    if n < 0:
        return SymFunc.zero(basis)
    if n == 0:
        return SymFunc.one(basis)
    if basis is Basis.H:
        return SymFunc._raw(Basis.H, {Partition.trusted((n,)): Fraction(1)})
    return convert(_h_in_p(n), basis)


def gen_e(n, basis=Basis.P):
    """e_n con e_0 = 1 y e_n = 0 para n < 0."""
    basis = Basis(basis)
    if n < 0:
        return SymFunc.zero(basis)
    if n == 0:
        return SymFunc.one(basis)
    if basis is Basis.E:
        return SymFunc._raw(Basis.E, {Partition.trusted((n,)): Fraction(1)})
    return convert(_e_in_p(n), basis)


def gen_hhat(n, basis=Basis.P):
    """ĥ_n = h_n − h_{n−2}."""
    return gen_h(n, basis) - gen_h(n - 2, basis)


def gen_ehat(n, basis=Basis.P):
    """ê_n = e_n − e_{n−2}."""
    return gen_e(n, basis) - gen_e(n - 2, basis)


def gen_hcheck(n, basis=Basis.P):
    """ȟ_n = h_n + h_{n−2} + h_{n−4} + ⋯"""
    basis = Basis(basis)
    return linear_combination(basis, [(1, gen_h(m, basis)) for m in range(n, -1, -2)])


def gen_echeck(n, basis=Basis.P):
    """ě_n = e_n + e_{n−2} + e_{n−4} + ⋯"""
    basis = Basis(basis)
    return linear_combination(basis, [(1, gen_e(m, basis)) for m in range(n, -1, -2)])


def gen_p(n, basis=Basis.P):
    """Suma de potencias p_n (n ≥ 1) en la base pedida."""
    basis = Basis(basis)
    if basis is Basis.P:
        return SymFunc._raw(Basis.P, {Partition.trusted((n,)): Fraction(1)})
    if basis is Basis.H:
        return _p_in_h(n)
    if basis is Basis.E:
        return _p_in_e(n)
    return to_schur_expansion(gen_p(n))


@lru_cache(maxsize=256)
def _p_in_h(n):
    # Newton: p_n = n·h_n − Σ_{k=1}^{n−1} p_k·h_{n−k}
    acc = scale(gen_h(n, Basis.H), n)
    for k in range(1, n):
        acc = acc - multiply(_p_in_h(k), gen_h(n - k, Basis.H))
    return acc


@lru_cache(maxsize=256)
def _p_in_e(n):
    # Newton: (−1)^{n−1} p_n = n·e_n − Σ_{k=1}^{n−1} (−1)^{k−1} p_k·e_{n−k}
    acc = scale(gen_e(n, Basis.E), n)
    for k in range(1, n):
        acc = acc - scale(multiply(_p_in_e(k), gen_e(n - k, Basis.E)), (-1) ** (k - 1))
    return scale(acc, (-1) ** (n - 1))


# ==========================================
# CAMBIOS DE BASE
# ==========================================

@lru_cache(maxsize=8192)
def _monomial_to_p(basis, lam):
    if not lam:
        return SymFunc.one(Basis.P)
    if basis is Basis.SCHUR:
        return schur(lam)
    if basis is Basis.P:
        return SymFunc._raw(Basis.P, {lam: Fraction(1)})
    generator = _h_in_p if basis is Basis.H else _e_in_p
    if len(lam) == 1:
        return generator(lam[0])
    return multiply(generator(lam[0]), _monomial_to_p(basis, Partition.trusted(lam[1:])))


@lru_cache(maxsize=8192)
def _p_monomial_to(basis, lam):
    if not lam:
        return SymFunc.one(basis)
    single = _p_in_h if basis is Basis.H else _p_in_e
    if len(lam) == 1:
        return single(lam[0])
    return multiply(single(lam[0]), _p_monomial_to(basis, Partition.trusted(lam[1:])))


def to_p(f):
    if f.basis is Basis.P:
        return f
    if not f._terms:
        return SymFunc.zero(Basis.P)
    return linear_combination(Basis.P, [(c, _monomial_to_p(f.basis, lam)) for lam, c in f._terms.items()])


def convert(f, basis):
    """Cambio de base exacto; todo pasa por P."""
    basis = Basis(basis)
    if f.basis is basis:
        return f
    f_p = to_p(f)
    if basis is Basis.P:
        return f_p
    if basis is Basis.SCHUR:
        return to_schur_expansion(f_p)
    if not f_p._terms:
        return SymFunc.zero(basis)
    return linear_combination(basis, [(c, _p_monomial_to(basis, lam)) for lam, c in f_p._terms.items()])


# ==========================================
# INVOLUCIÓN Y PRODUCTO ESCALAR
# ==========================================

def omega(f):
    """ω(p_n) = (−1)^{n−1} p_n, ω(h_λ) = e_λ, ω(s_λ) = s_{λ′}."""
    if f.basis is Basis.P:
        return SymFunc._raw(
            Basis.P,
            {lam: c if (lam.weight - len(lam)) % 2 == 0 else -c for lam, c in f._terms.items()},
        )
    if f.basis is Basis.H:
        return SymFunc._raw(Basis.E, dict(f._terms))
    if f.basis is Basis.E:
        return SymFunc._raw(Basis.H, dict(f._terms))
    return SymFunc._raw(Basis.SCHUR, {lam.conjugate(): c for lam, c in f._terms.items()})


def hall_inner(f, g):
    """⟨p_λ, p_μ⟩ = z_λ δ_{λμ}."""
    f_p, g_p = to_p(f), to_p(g)
    if len(g_p) < len(f_p):
        f_p, g_p = g_p, f_p
    total = Fraction(0)
    for lam, c in f_p._terms.items():
        d = g_p._terms.get(lam)
        if d:
            total += c * d * z_of(lam)
    return total


# ==========================================
# FUNCIONES DE SCHUR
# ==========================================

def schur(lam):
    """s_λ en P mediante Jacobi–Trudi con h."""
    return _schur_in_p(Partition(lam))


@lru_cache(maxsize=4096)
def _schur_in_p(lam):
    from src.weyldet import jacobi_trudi
    return to_p(jacobi_trudi(lam, Basis.H))


def to_schur_expansion(f):
    """c_μ = ⟨f_n, s_μ⟩ para cada componente homogénea f_n."""
    f_p = to_p(f)
    out = {}
    for n in f_p.weights():
        piece = f_p.component(n)
        for mu in partitions_of(n):
            c = hall_inner(piece, _schur_in_p(mu))
            if c:
                out[mu] = c
    return SymFunc._raw(Basis.SCHUR, out)


def is_integral(f):
    return all(c.denominator == 1 for c in f._terms.values())


def invalidate_caches():
    """Vacía las tablas de memoización (para medir tiempos en frío)."""
    for cached in (_h_in_p, _e_in_p, _p_in_h, _p_in_e, _monomial_to_p, _p_monomial_to, _schur_in_p):
        cached.cache_clear()
