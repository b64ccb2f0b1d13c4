import json
from fractions import Fraction

from src.partition import InvalidPartitionError, Partition


def format_fraction(value):
    """
    Convierte un racional exacto a texto "num/den", omitiendo "/1".
    Fraction(1, 2) -> "1/2", Fraction(3) -> "3".
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_partition(lam):
    return f"[{','.join(map(str, lam))}]"


def render_monomial(basis, lam):
    """p[2,1], h[3], s[] ... El monomio vacío es la constante salvo en la base de Schur."""
    if not lam and basis.value != "s":
        return ""
    return f"{basis.value}{format_partition(lam)}"


def render_text(f):
    """
    Representación canónica de un SymFunc, términos por (peso, partición) descendente.

    Ejemplos: "s[1,1] - s[]", "h[2] - 1", "1/2*p[2] + 1/2*p[1,1]".
    """
    pieces = []
    for lam, coeff in f.sorted_terms():
        monomial = render_monomial(f.basis, lam)
        magnitude = abs(coeff)
        if not monomial:
            body = format_fraction(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{format_fraction(magnitude)}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"{'-' if coeff < 0 else '+'} {body}")
    return " ".join(pieces) if pieces else "0"


def parse_partition(text):
    """
    Acepta "[3,1]", "3,1", "3 1", "[]", "" o "∅".
    Lanza InvalidPartitionError si la entrada no es una partición.
    """
    text = (text or "").strip()
    if text in ("", "∅", "[]"):
        return Partition()
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidPartitionError(f"JSON inválido: {text!r}") from exc
        if not isinstance(data, list):
            raise InvalidPartitionError(f"Se esperaba una lista: {text!r}")
        return Partition(data)
    try:
        parts = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InvalidPartitionError(f"Partes no enteras: {text!r}") from exc
    return Partition(parts)


def parse_fraction(text):
    """"2", "-3/4", "0.5" -> Fraction exacta."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"No es un racional: {text!r}") from exc
