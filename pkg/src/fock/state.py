"""
2차 양자화 상태: 생성 연산자 곱의 선형결합

상태 = (1/√scale) · Σ_t c_t · a†(w_t1) … a†(w_tN) |0⟩
인자 벡터는 정규화된 모드를 뜻하고, 진폭은 인자와 측정 패턴 사이의
overlap 행렬의 행렬식(페르미온)/퍼머넌트(보손)이다.

정규화 인자의 제곱근이 Q(√2) 안에 있으면 계수에 흡수하고(scale = 1),
아니면 scale 로 따로 들고 다닌다. 확률은 항상 정확히 계산된다.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.common.errors import (
    ModeSetError,
    PauliExclusionError,
    ScalarError,
    StatisticsError,
    TransformError,
)
from src.modespace import ModeHypergraph, ModeVector, overlap
from src.modespace.linalg import as_matrix, is_orthogonal
from src.occupancy import Statistics
from src.scalars import Scalar, ScalarBackend, backend_of

from .amplitudes import determinant, multiplicity_factorial, permanent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OccupationPattern:
    context_id: str
    counts: Tuple[int, ...]

    @property
    def n_particles(self) -> int:
        return sum(self.counts)

    def occupied(self, h: ModeHypergraph) -> Dict[str, int]:
        """{모드 ID: 개수} (0 제외)"""
        ids = h.context(self.context_id).mode_ids
        return {mid: c for mid, c in zip(ids, self.counts) if c}

    def as_dict(self, h: ModeHypergraph) -> Dict[str, int]:
        return dict(zip(h.context(self.context_id).mode_ids, self.counts))


@dataclass(frozen=True)
class ProductTerm:
    coefficient: Scalar
    factors: Tuple[ModeVector, ...]


@dataclass(frozen=True)
class FockState:
    n_particles: int
    statistics: Statistics
    terms: Tuple[ProductTerm, ...]
    scale: Scalar = 1

    @property
    def backend(self) -> ScalarBackend:
        values = [t.coefficient for t in self.terms]
        values += [c for t in self.terms for f in t.factors for c in f.components]
        return backend_of(*values)

    def norm_squared(self) -> Scalar:
        backend = self.backend
        total = backend.zero()
        for s in self.terms:
            for t in self.terms:
                total = total + s.coefficient * t.coefficient * _overlap_function(
                    s.factors, t.factors, self.statistics, backend
                )
        return total / self.scale


def _overlap_function(
    left: Sequence[ModeVector], right: Sequence[ModeVector], stats: Statistics, backend: ScalarBackend
) -> Scalar:
    """⟨0| a(l_N)…a(l_1) a†(r_1)…a†(r_N) |0⟩ = det / per [⟨l_i|r_j⟩]"""
    matrix = [[overlap(u, w) for w in right] for u in left]
    if stats is Statistics.FERMION:
        return determinant(matrix, backend)
    return permanent(matrix, backend)


def product_state(vectors: Sequence[ModeVector], stats: Statistics) -> FockState:
    """
    a†(v_1)…a†(v_N)|0⟩ 을 정규화한 상태

    보손: 같은 벡터 m 번 반복 → 1/√(m!) (예: b†²/√2)
    페르미온: 정규직교 인자면 계수 1, 선형 종속이면 PauliExclusionError
    """
    vectors = tuple(vectors)
    backend = backend_of(*[c for v in vectors for c in v.components])
    gram = _overlap_function(vectors, vectors, stats, backend)
    if backend.is_zero(gram):
        if stats is Statistics.FERMION:
            ids = ", ".join(v.id for v in vectors)
            raise PauliExclusionError(f"fermionic product of linearly dependent modes ({ids}) vanishes")
        raise StatisticsError("bosonic product state has zero norm")
    try:
        coefficient = backend.one() / backend.sqrt(gram)
        scale = 1
    except ScalarError:
        # 정규화 인자가 체 밖이면 (√3!, √(3/4) 등) scale 로 분리
        coefficient = backend.one()
        scale = gram
    return FockState(len(vectors), stats, (ProductTerm(coefficient, vectors),), scale)


def _pattern_modes(state: FockState, pattern: OccupationPattern, h: ModeHypergraph) -> List[ModeVector]:
    vectors = h.context_vectors(pattern.context_id)
    if len(pattern.counts) != len(vectors):
        raise StatisticsError(
            f"pattern for {pattern.context_id} has {len(pattern.counts)} counts, context has {len(vectors)} modes"
        )
    if any(c < 0 for c in pattern.counts) or pattern.n_particles != state.n_particles:
        raise StatisticsError(
            f"pattern counts {pattern.counts} do not sum to the particle number {state.n_particles}"
        )
    modes: List[ModeVector] = []
    for v, c in zip(vectors, pattern.counts):
        modes.extend([v] * c)
    return modes


def _amplitude_parts(state: FockState, pattern: OccupationPattern, h: ModeHypergraph) -> Tuple[Scalar, Scalar, ScalarBackend]:
    """진폭 = core / √denom 로 분해해 (core, denom, backend) 반환"""
    modes = _pattern_modes(state, pattern, h)
    backend = backend_of(
        *[c for m in modes for c in m.components],
        *[t.coefficient for t in state.terms],
        *[c for t in state.terms for f in t.factors for c in f.components],
    )
    if state.statistics is Statistics.FERMION and any(c > 1 for c in pattern.counts):
        return backend.zero(), 1, backend

    core = backend.zero()
    for term in state.terms:
        core = core + term.coefficient * _overlap_function(modes, term.factors, state.statistics, backend)
    denom = state.scale
    if state.statistics is Statistics.BOSON:
        denom *= multiplicity_factorial(pattern.counts)
    return core, denom, backend


def amplitude(state: FockState, pattern: OccupationPattern, h: ModeHypergraph) -> Scalar:
    """⟨pattern|state⟩. 페르미온 패턴에 개수 ≥ 2 가 있으면 정확히 0."""
    core, denom, backend = _amplitude_parts(state, pattern, h)
    if denom == 1 or backend.is_zero(core):
        return core
    return core / backend.sqrt(backend.coerce(denom))


def probability(state: FockState, pattern: OccupationPattern, h: ModeHypergraph) -> Scalar:
    """|⟨pattern|state⟩|², 진폭이 체 밖이어도 정확"""
    core, denom, _ = _amplitude_parts(state, pattern, h)
    return core * core / denom


def is_supported(state: FockState, pattern: OccupationPattern, h: ModeHypergraph) -> bool:
    core, _, backend = _amplitude_parts(state, pattern, h)
    return not backend.is_zero(core)


def amplitude_sign(state: FockState, pattern: OccupationPattern, h: ModeHypergraph) -> int:
    """진폭의 부호 (-1, 0, 1). 진폭이 체 밖이어도 정해진다."""
    core, _, backend = _amplitude_parts(state, pattern, h)
    if backend.is_zero(core):
        return 0
    return 1 if backend.is_positive(core) else -1


def context_patterns(h: ModeHypergraph, context_id: str, n_particles: int, stats: Statistics) -> List[OccupationPattern]:
    """컨텍스트의 모든 점유 패턴 (개수 튜플 사전순)"""
    size = len(h.context(context_id).mode_ids)
    top = stats.max_value(n_particles)

    def compositions(remaining: int, slots: int):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for first in range(min(remaining, top) + 1):
            for rest in compositions(remaining - first, slots - 1):
                yield (first,) + rest

    return [OccupationPattern(context_id, counts) for counts in compositions(n_particles, size)]


def outcome_distribution(state: FockState, context_id: str, h: ModeHypergraph) -> Dict[OccupationPattern, Scalar]:
    """컨텍스트 측정 결과 분포 (모든 패턴, 확률 합 = 1)"""
    return {
        pattern: probability(state, pattern, h)
        for pattern in context_patterns(h, context_id, state.n_particles, state.statistics)
    }


def expand_in_context(state: FockState, context_id: str, h: ModeHypergraph) -> List[Tuple[OccupationPattern, Scalar]]:
    """0 이 아닌 진폭을 가진 패턴만 남긴 컨텍스트 전개"""
    out = []
    for pattern in context_patterns(h, context_id, state.n_particles, state.statistics):
        if is_supported(state, pattern, h):
            out.append((pattern, amplitude(state, pattern, h)))
    return out


def synthesize(
    expansion: Sequence[Tuple[OccupationPattern, Scalar]], h: ModeHypergraph, stats: Statistics
) -> FockState:
    """컨텍스트 전개로부터 상태 재구성: Σ amp · Π a†(u)^n / √(Π n!)"""
    if not expansion:
        raise StatisticsError("cannot synthesize a state from an empty expansion")
    backend = h.backend
    terms = []
    for pattern, amp in expansion:
        factors: List[ModeVector] = []
        for v, c in zip(h.context_vectors(pattern.context_id), pattern.counts):
            factors.extend([v] * c)
        coefficient = amp
        if stats is Statistics.BOSON:
            norm = multiplicity_factorial(pattern.counts)
            if norm != 1:
                coefficient = amp / backend.sqrt(backend.coerce(norm))
        terms.append(ProductTerm(coefficient, tuple(factors)))
    return FockState(expansion[0][0].n_particles, stats, tuple(terms))


def number_expectation(
    state: FockState, mode_id: str, h: ModeHypergraph, context_id: Optional[str] = None
) -> Scalar:
    """
    모드 점유수 연산자의 기댓값: 모드를 포함하는 컨텍스트에서 Σ count·prob.
    어느 포함 컨텍스트를 써도 같은 값이 나온다.
    """
    containing = h.contexts_of(mode_id)
    if not containing:
        raise ModeSetError(f"mode {mode_id!r} is not in any context")
    ctx_id = context_id or containing[0]
    if ctx_id not in containing:
        raise ModeSetError(f"mode {mode_id!r} is not in context {ctx_id!r}")
    pos = h.context(ctx_id).mode_ids.index(mode_id)
    backend = state.backend
    total = backend.zero()
    for pattern, prob in outcome_distribution(state, ctx_id, h).items():
        if pattern.counts[pos]:
            total = total + prob * pattern.counts[pos]
    return total


def transform_state(state: FockState, u: Sequence[Sequence]) -> FockState:
    """모든 인자 벡터를 U 로 변환"""
    backend = state.backend
    matrix = as_matrix(u, backend)
    if not is_orthogonal(matrix, backend):
        raise TransformError("transform matrix is not orthogonal")
    terms = tuple(
        ProductTerm(t.coefficient, tuple(f.transformed(matrix) for f in t.factors)) for t in state.terms
    )
    return FockState(state.n_particles, state.statistics, terms, state.scale)
