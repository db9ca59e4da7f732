"""행렬식 / 퍼머넌트 (정확 스칼라 위에서)"""

from itertools import combinations, permutations
from math import factorial
from typing import List, Sequence

from src.scalars import Scalar, ScalarBackend


def _parity(perm: Sequence[int]) -> int:
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def determinant(m: List[List[Scalar]], backend: ScalarBackend) -> Scalar:
    """라이프니츠 전개. N ≤ 6 정도의 작은 행렬 전용."""
    n = len(m)
    total = backend.zero()
    for perm in permutations(range(n)):
        term = backend.one()
        for i, j in enumerate(perm):
            term = term * m[i][j]
        total = total + term if _parity(perm) > 0 else total - term
    return total


def permanent(m: List[List[Scalar]], backend: ScalarBackend) -> Scalar:
    """
    Ryser 포함-배제 공식
    per(A) = (-1)^n Σ_{S ⊆ 열} (-1)^{|S|} Π_i Σ_{j∈S} a_ij
    """
    n = len(m)
    if n == 0:
        return backend.one()
    total = backend.zero()
    for size in range(1, n + 1):
        sign = (-1) ** (n - size)
        for cols in combinations(range(n), size):
            prod = backend.one()
            for row in m:
                prod = prod * backend.total(row[j] for j in cols)
            total = total + prod * sign
    return total


def multiplicity_factorial(counts: Sequence[int]) -> int:
    out = 1
    for c in counts:
        out *= factorial(c)
    return out
