"""
Q(√2) 정확 연산

a + b·√2 (a, b 는 유리수) 형태의 원소. 18-모드 집합의 상태/벡터/확률 계수는 대부분
이 체 안에 있으므로 정확(exact) 백엔드의 스칼라로 사용한다.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

from src.common.errors import ScalarError

SQRT2_FLOAT = math.sqrt(2.0)

RationalLike = Union[int, Fraction]
ScalarLike = Union[int, Fraction, "QSqrt2"]

_R = r"-?\d+(?:/\d+)?"
_LITERAL = re.compile(
    rf"^\s*(?:(?P<a>{_R})(?:\s*(?P<op>[+-])\s*(?P<b>{_R})\s*\*\s*s2)?"
    rf"|(?P<bonly>{_R})\s*\*\s*s2)\s*$"
)


def _rational(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ScalarError(f"zero denominator in scalar literal {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def _rational_literal(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """유리수 제곱근이 유리수이면 반환, 아니면 None"""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@total_ordering
class QSqrt2:
    """a + b·√2, a 와 b 는 약분된 Fraction"""

    __slots__ = ("_a", "_b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0) -> None:
        self._a = Fraction(a)
        self._b = Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, value: Union[ScalarLike, str]) -> QSqrt2:
        if isinstance(value, QSqrt2):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        if isinstance(value, str):
            return parse_scalar(value)
        raise TypeError(f"cannot convert {type(value).__name__} to QSqrt2")

    @classmethod
    def sqrt2(cls) -> QSqrt2:
        return cls(0, 1)

    def __repr__(self) -> str:
        return f"QSqrt2({self._a}, {self._b})"

    def __str__(self) -> str:
        return self.to_literal()

    def to_literal(self) -> str:
        if self._b == 0:
            return _rational_literal(self._a)
        if self._a == 0:
            return f"{_rational_literal(self._b)}*s2"
        op = "+" if self._b > 0 else "-"
        return f"{_rational_literal(self._a)} {op} {_rational_literal(abs(self._b))}*s2"

    def __reduce__(self):
        return (QSqrt2, (self._a, self._b))

    # --- 비교 ---

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        if isinstance(other, QSqrt2):
            return self._a == other._a and self._b == other._b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __lt__(self, other: ScalarLike) -> bool:
        if not isinstance(other, (int, Fraction, QSqrt2)):
            return NotImplemented
        return (self - other).sign() < 0

    def sign(self) -> int:
        """a + b√2 의 부호 (-1, 0, 1). √2 가 무리수이므로 정확히 결정된다."""
        a, b = self._a, self._b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # 부호가 다르면 크기 비교: |a| 대 |b|√2
        return sa if a * a > 2 * b * b else sb

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __abs__(self) -> QSqrt2:
        return -self if self.sign() < 0 else self

    # --- 체 연산 ---

    def __add__(self, other: ScalarLike) -> QSqrt2:
        if isinstance(other, (int, Fraction)):
            return QSqrt2(self._a + other, self._b)
        if isinstance(other, QSqrt2):
            return QSqrt2(self._a + other._a, self._b + other._b)
        return NotImplemented

    def __radd__(self, other: ScalarLike) -> QSqrt2:
        return self + other

    def __neg__(self) -> QSqrt2:
        return QSqrt2(-self._a, -self._b)

    def __sub__(self, other: ScalarLike) -> QSqrt2:
        if not isinstance(other, (int, Fraction, QSqrt2)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> QSqrt2:
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> QSqrt2:
        if isinstance(other, (int, Fraction)):
            return QSqrt2(self._a * other, self._b * other)
        if isinstance(other, QSqrt2):
            return QSqrt2(
                self._a * other._a + 2 * self._b * other._b,
                self._a * other._b + self._b * other._a,
            )
        return NotImplemented

    def __rmul__(self, other: ScalarLike) -> QSqrt2:
        return self * other

    def conj(self) -> QSqrt2:
        """√2 → -√2 켤레"""
        return QSqrt2(self._a, -self._b)

    def norm(self) -> Fraction:
        """체 노름 a² - 2b² (0 이 아닌 원소는 항상 0 이 아님)"""
        return self._a * self._a - 2 * self._b * self._b

    def inverse(self) -> QSqrt2:
        n = self.norm()
        if n == 0:
            raise ScalarError("division by zero in Q(sqrt2)")
        return QSqrt2(self._a / n, -self._b / n)

    def __truediv__(self, other: ScalarLike) -> QSqrt2:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ScalarError("division by zero in Q(sqrt2)")
            return QSqrt2(self._a / other, self._b / other)
        if isinstance(other, QSqrt2):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: ScalarLike) -> QSqrt2:
        return QSqrt2.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> QSqrt2:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** -exponent
        result = QSqrt2(1)
        base = self
        n = exponent
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sqrt(self) -> QSqrt2:
        """
        양의 제곱근. 결과가 Q(√2) 밖이면 ScalarError.

        (x + y√2)² = (x² + 2y²) + 2xy√2 를 풀어 구한다.
        """
        if self.sign() < 0:
            raise ScalarError(f"square root of negative scalar {self}")
        if self.is_zero():
            return QSqrt2()
        a, b = self._a, self._b
        if b == 0:
            r = rational_sqrt(a)
            if r is not None:
                return QSqrt2(r, 0)
            r = rational_sqrt(a / 2)
            if r is not None:
                return QSqrt2(0, r)
            raise ScalarError(f"square root of {self} is not in Q(sqrt2)")

        disc = rational_sqrt(self.norm())
        if disc is not None:
            for x2 in ((a + disc) / 2, (a - disc) / 2):
                x = rational_sqrt(x2)
                if not x:
                    continue
                root = QSqrt2(x, b / (2 * x))
                if root * root == self:
                    return abs(root)
        raise ScalarError(f"square root of {self} is not in Q(sqrt2)")

    def to_float(self) -> float:
        return float(self._a) + float(self._b) * SQRT2_FLOAT

    def __float__(self) -> float:
        return self.to_float()


def parse_scalar(text: str) -> QSqrt2:
    """
    스칼라 리터럴 파싱: `R` | `R*s2` | `R + R*s2` | `R - R*s2`

    예) "1/2", "-1/4*s2", "3/4 - 1/2*s2"
    """
    match = _LITERAL.match(text)
    if not match:
        raise ScalarError(f"malformed scalar literal {text!r}")
    if match.group("bonly") is not None:
        return QSqrt2(0, _rational(match.group("bonly")))
    a = _rational(match.group("a"))
    if match.group("b") is None:
        return QSqrt2(a, 0)
    b = _rational(match.group("b"))
    return QSqrt2(a, b if match.group("op") == "+" else -b)
