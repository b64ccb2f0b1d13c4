"""
Combinatoria de particiones: validación, conjugada, coordenadas de Frobenius,
z_λ y enumeración.
"""
import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial


class InvalidPartitionError(ValueError):
    """La secuencia no es una partición (no decreciente o con partes no enteras)."""


class InvalidFrobeniusError(ValueError):
    """Coordenadas de Frobenius mal formadas."""


class Partition(tuple):
    """
    Partición como tupla de partes positivas en orden débilmente decreciente.

    Es una tupla de verdad: se puede hashear, comparar e indexar. Los ceros
    finales de la entrada se descartan; ∅ es ``Partition()``.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for i, part in enumerate(parts):
            if isinstance(part, bool) or not isinstance(part, int):
                raise InvalidPartitionError(f"Parte no entera en posición {i}: {part!r}")
            if part < 1:
                raise InvalidPartitionError(f"Parte no positiva en posición {i}: {part}")
            if i and parts[i - 1] < part:
                raise InvalidPartitionError(f"Partes no decrecientes: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def trusted(cls, parts):
        """Construye sin validar. Solo para partes ya ordenadas y positivas."""
        return tuple.__new__(cls, parts)

    @classmethod
    def from_unsorted(cls, parts):
        return tuple.__new__(cls, sorted((p for p in parts if p), reverse=True))

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def conjugate(self):
        return conjugate(self)

    def part(self, i):
        """λ_i con índice 1-based; 0 fuera de rango."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def concat(self, other):
        """Partición de la unión de partes (p_λ·p_μ = p_{λ∪μ})."""
        if not other:
            return self
        if not self:
            return other
        return Partition.trusted(sorted(self + other, reverse=True))

    def __repr__(self):
        return f"Partition({list(self)})"


EMPTY = Partition()


@dataclass(frozen=True)
class FrobeniusCoords:
    """(α|β) con α_i = λ_i − i y β_i = λ′_i − i."""

    alpha: tuple
    beta: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        if len(self.alpha) != len(self.beta):
            raise InvalidFrobeniusError(
                f"α y β deben tener la misma longitud: {self.alpha} | {self.beta}"
            )
        for name, seq in (("alpha", self.alpha), ("beta", self.beta)):
            if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in seq):
                raise InvalidFrobeniusError(f"{name} debe contener enteros ≥ 0: {seq}")
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise InvalidFrobeniusError(f"{name} debe ser estrictamente decreciente: {seq}")

    @property
    def rank(self):
        return len(self.alpha)

    def __str__(self):
        return f"({','.join(map(str, self.alpha))}|{','.join(map(str, self.beta))})"


def conjugate(lam):
    """λ′_j = #{i : λ_i ≥ j}."""
    return _conjugate(_as_partition(lam))


@lru_cache(maxsize=4096)
def _conjugate(lam):
    if not lam:
        return EMPTY
    return Partition.trusted(tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1)))


def to_frobenius(lam):
    lam = _as_partition(lam)
    conj = conjugate(lam)
    r = frobenius_rank(lam)
    return FrobeniusCoords(
        alpha=tuple(lam[i] - (i + 1) for i in range(r)),
        beta=tuple(conj[i] - (i + 1) for i in range(r)),
    )


def from_frobenius(fc):
    """
    Reconstruye λ desde (α|β).

    Las r primeras filas son α_i + i; las columnas j ≤ r miden β_j + j y, por
    debajo de la diagonal, fijan cuántas celdas tiene cada fila i > r.
    """
    r = fc.rank
    rows = [fc.alpha[i] + i + 1 for i in range(r)]
    if r:
        columns = [fc.beta[j] + j + 1 for j in range(r)]
        for i in range(r + 1, columns[0] + 1):
            rows.append(sum(1 for c in columns if c >= i))
    lam = Partition(rows)
    if to_frobenius(lam) != fc:
        raise InvalidFrobeniusError(f"Coordenadas inconsistentes: {fc}")
    return lam


def frobenius_rank(lam):
    """Longitud de la diagonal principal."""
    return sum(1 for i, part in enumerate(lam, start=1) if part >= i)


def multiplicities(lam):
    """m_i(λ): parte ↦ número de veces que aparece."""
    return dict(Counter(lam))


def z_of(lam):
    """z_λ = ∏ i^{m_i} m_i!"""
    return _z_of(_as_partition(lam))


@lru_cache(maxsize=4096)
def _z_of(lam):
    z = 1
    for part, m in multiplicities(lam).items():
        z *= part ** m * factorial(m)
    return z


@lru_cache(maxsize=64)
def partitions_of(n):
    """Todas las particiones de n en orden lexicográfico inverso: (n), (n−1,1), …, (1^n)."""
    if n < 0:
        raise InvalidPartitionError(f"n debe ser ≥ 0, recibido {n}")
    return tuple(Partition.trusted(p) for p in _descending(n, n))


def partitions_up_to(n):
    """Particiones de peso 0, 1, …, n concatenadas en orden."""
    return tuple(lam for k in range(n + 1) for lam in partitions_of(k))


def _descending(n, cap):
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def _as_partition(lam):
    return lam if isinstance(lam, Partition) else Partition(lam)


def to_json(lam):
    return json.dumps(list(lam))


def from_json(text):
    data = json.loads(text)
    if not isinstance(data, list):
        raise InvalidPartitionError(f"Se esperaba un array JSON: {text!r}")
    return Partition(data)
