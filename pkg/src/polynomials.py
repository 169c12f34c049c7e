"""
Exact integer polynomials.

Two small value types with arbitrary-precision integer coefficients:

- XYPolynomial: sparse bivariate polynomial in x and y (Tutte polynomials).
- QPolynomial: dense univariate polynomial in q (Poincaré polynomials).

Both are immutable, never store zero coefficients, and serialise to JSON with
coefficients as decimal strings so no precision is lost.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from src.errors import ParameterError


def _superscript(power: int) -> str:
    return "" if power == 1 else f"^{power}"


class XYPolynomial:
    """
    Sparse polynomial in x and y with integer coefficients.

    Attributes:
        terms (dict[tuple[int, int], int]): Maps ``(i, j)`` to the coefficient
            of ``x^i y^j``; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Tuple[int, int], int] = None):
        cleaned = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ParameterError(f"negative exponent ({i}, {j})")
            if c:
                cleaned[(int(i), int(j))] = int(c)
        self._terms = cleaned

    @classmethod
    def constant(cls, value: int) -> "XYPolynomial":
        return cls({(0, 0): value})

    @classmethod
    def x(cls) -> "XYPolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "XYPolynomial":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> Dict[Tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def x_degree(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def __add__(self, other):
        if isinstance(other, int):
            other = XYPolynomial.constant(other)
        result = dict(self._terms)
        for key, c in other._terms.items():
            result[key] = result.get(key, 0) + c
        return XYPolynomial(result)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = XYPolynomial.constant(other)
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, int):
            return XYPolynomial({key: c * other for key, c in self._terms.items()})
        result = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                result[key] = result.get(key, 0) + c1 * c2
        return XYPolynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ParameterError("negative powers are not polynomials")
        result = XYPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = XYPolynomial.constant(other)
        return isinstance(other, XYPolynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self._terms.items())

    def sorted_terms(self) -> Iterable[Tuple[int, int, int]]:
        """Terms as ``(i, j, c)`` in decreasing total degree, then decreasing i."""
        for i, j in sorted(self._terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
            yield i, j, self._terms[(i, j)]

    def to_json(self) -> dict:
        return {"terms": [[i, j, str(c)] for i, j, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, payload: dict) -> "XYPolynomial":
        return cls({(int(i), int(j)): int(c) for i, j, c in payload["terms"]})

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for i, j, c in self.sorted_terms():
            monomial = ""
            if i:
                monomial += "x" + _superscript(i)
            if j:
                monomial += ("*" if monomial else "") + "y" + _superscript(j)
            if not monomial:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(monomial)
            else:
                pieces.append(f"{c}*{monomial}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"XYPolynomial({self})"


class QPolynomial:
    """
    Dense polynomial in q with integer coefficients.

    Attributes:
        coeffs (tuple[int]): ``coeffs[k]`` is the coefficient of ``q^k``; the
            last entry is nonzero unless the polynomial is zero (empty tuple).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs = tuple(values)

    @classmethod
    def constant(cls, value: int) -> "QPolynomial":
        return cls((value,))

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        a, b = self._coeffs, other._coeffs
        length = max(len(a), len(b))
        return QPolynomial(
            (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)
            for k in range(length)
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial(c * other for c in self._coeffs)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return QPolynomial()
        result = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    result[i + j] += ca * cb
        return QPolynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ParameterError("negative powers are not polynomials")
        result = QPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        return isinstance(other, QPolynomial) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def evaluate(self, q: int) -> int:
        total = 0
        for c in reversed(self._coeffs):
            total = total * q + c
        return total

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, payload: dict) -> "QPolynomial":
        return cls(int(c) for c in payload["coeffs"])

    def __str__(self):
        pieces = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                pieces.append(str(c))
            else:
                monomial = "q" + _superscript(k)
                pieces.append(monomial if c == 1 else f"{c}*{monomial}")
        return " + ".join(pieces).replace("+ -", "- ") if pieces else "0"

    def __repr__(self):
        return f"QPolynomial({self})"


@dataclass(frozen=True)
class QInteger:
    """
    The q-integer [d] = 1 + q + ... + q^(d-1).

    Attributes:
        d (int): A positive integer.
    """

    d: int

    def __post_init__(self):
        if int(self.d) < 1:
            raise ParameterError(f"q-integers need d >= 1, got {self.d}")

    @property
    def expansion(self) -> QPolynomial:
        return QPolynomial([1] * int(self.d))


def q_integer(d: int) -> QPolynomial:
    """Expansion of the q-integer [d]; rejects d < 1."""
    return QInteger(d).expansion
