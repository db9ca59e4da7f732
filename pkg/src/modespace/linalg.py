"""작은 d×d 행렬 연산 (정확 백엔드는 순수 파이썬, float 백엔드는 numpy)"""

from typing import List, Sequence

import numpy as np

from src.scalars import FLOAT, Scalar, ScalarBackend

Matrix = List[List[Scalar]]


def identity(d: int, backend: ScalarBackend) -> Matrix:
    return [[backend.one() if i == j else backend.zero() for j in range(d)] for i in range(d)]


def as_matrix(rows: Sequence[Sequence], backend: ScalarBackend) -> Matrix:
    return [[backend.coerce(x) for x in row] for row in rows]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_mul(x: Matrix, y: Matrix, backend: ScalarBackend) -> Matrix:
    yt = transpose(y)
    return [[backend.total(a * b for a, b in zip(row, col)) for col in yt] for row in x]


def mat_vec(m: Matrix, v: Sequence[Scalar], backend: ScalarBackend) -> List[Scalar]:
    return [backend.total(a * b for a, b in zip(row, v)) for row in m]


def dot(u: Sequence[Scalar], w: Sequence[Scalar], backend: ScalarBackend) -> Scalar:
    return backend.total(a * b for a, b in zip(u, w))


def is_orthogonal(m: Matrix, backend: ScalarBackend) -> bool:
    """UᵀU = I (정확: 정확히 일치, float: 원소별 허용오차)"""
    d = len(m)
    if any(len(row) != d for row in m):
        return False
    if backend is FLOAT or backend.name == "float":
        arr = np.array(m, dtype=float)
        return bool(np.allclose(arr.T @ arr, np.eye(d), atol=backend.tolerance, rtol=0.0))
    gram = mat_mul(transpose(m), m, backend)
    eye = identity(d, backend)
    return all(backend.equal(gram[i][j], eye[i][j]) for i in range(d) for j in range(d))


def is_scalar_multiple_of_identity(m: Matrix, backend: ScalarBackend):
    """m = λI 이면 λ, 아니면 None"""
    d = len(m)
    lam = m[0][0]
    for i in range(d):
        for j in range(d):
            target = lam if i == j else backend.zero()
            if not backend.equal(m[i][j], target):
                return None
    return lam
