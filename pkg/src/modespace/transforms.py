"""
정확한 직교 행렬 생성기

부호 있는 치환 행렬과 π/4 Givens 회전(성분 ±1/√2)의 곱은
모두 Q(√2) 안에 머무르므로 정확 백엔드에서 그대로 쓸 수 있다.
"""

import random
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from src.scalars import EXACT, QSqrt2

from .linalg import Matrix, identity, mat_mul

INV_SQRT2 = QSqrt2(0, Fraction(1, 2))


def signed_permutation(perm: Sequence[int], signs: Optional[Sequence[int]] = None) -> Matrix:
    """열 j 의 1 을 행 perm[j] 에 두고 signs[j] 를 곱한 행렬"""
    d = len(perm)
    if sorted(perm) != list(range(d)):
        raise ValueError(f"not a permutation: {list(perm)}")
    signs = signs or [1] * d
    m = identity(d, EXACT)
    for r in range(d):
        for c in range(d):
            m[r][c] = QSqrt2(0)
    for c, r in enumerate(perm):
        m[r][c] = QSqrt2(signs[c])
    return m


def givens(d: int, i: int, j: int, sign: int = 1) -> Matrix:
    """좌표 (i, j) 평면의 π/4 회전"""
    if i == j:
        raise ValueError("givens rotation needs two distinct coordinates")
    m = identity(d, EXACT)
    m[i][i] = INV_SQRT2
    m[j][j] = INV_SQRT2
    m[i][j] = -INV_SQRT2 * sign
    m[j][i] = INV_SQRT2 * sign
    return m


def random_signed_permutation(d: int, rng: random.Random) -> Matrix:
    perm = list(range(d))
    rng.shuffle(perm)
    return signed_permutation(perm, [rng.choice((-1, 1)) for _ in range(d)])


def random_exact_orthogonal(d: int, rng: random.Random, depth: int = 3) -> Matrix:
    """부호 치환과 Givens 회전을 depth 번 번갈아 곱한 정확 직교 행렬"""
    m = random_signed_permutation(d, rng)
    for _ in range(depth):
        i, j = rng.sample(range(d), 2)
        m = mat_mul(givens(d, i, j, rng.choice((-1, 1))), m, EXACT)
        m = mat_mul(random_signed_permutation(d, rng), m, EXACT)
    return m


def random_float_orthogonal(d: int, seed: Optional[int] = None) -> Matrix:
    """QR 분해 기반 임의 직교 행렬 (float 백엔드용)"""
    gen = np.random.default_rng(seed)
    q, r = np.linalg.qr(gen.normal(size=(d, d)))
    q = q * np.sign(np.diag(r))
    return [[float(x) for x in row] for row in q]
