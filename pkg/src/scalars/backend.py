"""
스칼라 백엔드

- ExactBackend: QSqrt2, 영 판정은 정확
- FloatBackend: float, 허용오차(기본 1e-9) 안이면 0

모드 벡터/상태 계산 코드는 백엔드에 독립적으로 +, -, *, / 만 쓰고
영 판정·제곱근·직렬화만 백엔드에 위임한다.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Iterable, Union

from src.common.errors import ScalarError

from .qsqrt2 import QSqrt2, parse_scalar

Scalar = Union[QSqrt2, float]

DEFAULT_TOLERANCE = 1e-9


class ScalarBackend(ABC):
    name: str = ""

    @abstractmethod
    def coerce(self, value: Any) -> Scalar:
        ...

    @abstractmethod
    def is_zero(self, value: Scalar) -> bool:
        ...

    @abstractmethod
    def sqrt(self, value: Scalar) -> Scalar:
        ...

    @abstractmethod
    def to_literal(self, value: Scalar) -> str:
        ...

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def equal(self, x: Scalar, y: Scalar) -> bool:
        return self.is_zero(x - y)

    def is_positive(self, value: Scalar) -> bool:
        return not self.is_zero(value) and value > 0

    def to_float(self, value: Scalar) -> float:
        return float(value)

    def total(self, values: Iterable[Scalar]) -> Scalar:
        acc = self.zero()
        for v in values:
            acc = acc + v
        return acc


class ExactBackend(ScalarBackend):
    name = "exact"

    def coerce(self, value: Any) -> QSqrt2:
        if isinstance(value, float):
            raise ScalarError("float values cannot enter the exact backend")
        return QSqrt2.coerce(value)

    def is_zero(self, value: Scalar) -> bool:
        return QSqrt2.coerce(value).is_zero()

    def sqrt(self, value: Scalar) -> QSqrt2:
        return QSqrt2.coerce(value).sqrt()

    def to_literal(self, value: Scalar) -> str:
        return QSqrt2.coerce(value).to_literal()


class FloatBackend(ScalarBackend):
    name = "float"

    def __init__(self, tolerance: float = DEFAULT_TOLERANCE) -> None:
        self.tolerance = tolerance

    def coerce(self, value: Any) -> float:
        if isinstance(value, str):
            return parse_scalar(value).to_float()
        if isinstance(value, (QSqrt2, Fraction, int, float)):
            return float(value)
        raise TypeError(f"cannot convert {type(value).__name__} to float")

    def is_zero(self, value: Scalar) -> bool:
        return abs(float(value)) <= self.tolerance

    def sqrt(self, value: Scalar) -> float:
        v = float(value)
        if v < -self.tolerance:
            raise ScalarError(f"square root of negative scalar {v}")
        return math.sqrt(max(v, 0.0))

    def to_literal(self, value: Scalar) -> str:
        return repr(float(value))


EXACT = ExactBackend()
FLOAT = FloatBackend()


def get_backend(name: str, tolerance: float = DEFAULT_TOLERANCE) -> ScalarBackend:
    if name == "exact":
        return EXACT
    if name == "float":
        return FLOAT if tolerance == DEFAULT_TOLERANCE else FloatBackend(tolerance)
    raise ValueError(f"unknown backend {name!r}")


def backend_of(*values: Scalar) -> ScalarBackend:
    """값 타입으로 백엔드 추론 (float 가 하나라도 있으면 float)"""
    if any(isinstance(v, float) for v in values):
        return FLOAT
    return EXACT
