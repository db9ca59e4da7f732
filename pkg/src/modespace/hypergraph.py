"""
모드 벡터, 측정 컨텍스트, 모드 하이퍼그래프

벡터는 정규화하지 않은 채 저장하고, 정규화 인자는 overlap 안에서만 등장한다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from src.common.errors import ModeSetError, TransformError
from src.scalars import EXACT, Scalar, ScalarBackend, backend_of, get_backend

from .linalg import Matrix, as_matrix, dot, identity, is_orthogonal, mat_vec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModeVector:
    id: str
    components: Tuple[Scalar, ...]

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def backend(self) -> ScalarBackend:
        return backend_of(*self.components)

    @cached_property
    def norm_squared(self) -> Scalar:
        return dot(self.components, self.components, self.backend)

    def transformed(self, u: Matrix) -> "ModeVector":
        return ModeVector(self.id, tuple(mat_vec(u, self.components, self.backend)))


@dataclass(frozen=True)
class Context:
    id: str
    mode_ids: Tuple[str, ...]


def overlap(u: ModeVector, w: ModeVector) -> Scalar:
    """정규화된 내적 ⟨u|w⟩ = Σ u_k w_k / (‖u‖‖w‖)"""
    if u.dim != w.dim:
        raise ModeSetError(f"dimension mismatch: {u.id} has {u.dim}, {w.id} has {w.dim}")
    backend = backend_of(*u.components, *w.components)
    raw = dot(u.components, w.components, backend)
    if backend.is_zero(raw):
        return backend.zero()
    # ‖u‖‖w‖ 곱을 한 번에 제곱근: 각각은 체 밖이어도 곱은 안일 수 있다
    return raw / backend.sqrt(u.norm_squared * w.norm_squared)


@dataclass(frozen=True)
class ModeHypergraph:
    dim: int
    modes: Tuple[ModeVector, ...]
    contexts: Tuple[Context, ...]

    @cached_property
    def backend(self) -> ScalarBackend:
        comps = [c for m in self.modes for c in m.components]
        return backend_of(*comps) if comps else EXACT

    @cached_property
    def _mode_index(self) -> Dict[str, ModeVector]:
        return {m.id: m for m in self.modes}

    @cached_property
    def _context_index(self) -> Dict[str, Context]:
        return {c.id: c for c in self.contexts}

    @cached_property
    def _membership(self) -> Dict[str, Tuple[str, ...]]:
        member: Dict[str, List[str]] = {m.id: [] for m in self.modes}
        for ctx in self.contexts:
            for mid in ctx.mode_ids:
                member.setdefault(mid, []).append(ctx.id)
        return {k: tuple(v) for k, v in member.items()}

    @property
    def mode_ids(self) -> Tuple[str, ...]:
        return tuple(m.id for m in self.modes)

    @property
    def context_ids(self) -> Tuple[str, ...]:
        return tuple(c.id for c in self.contexts)

    def mode(self, mode_id: str) -> ModeVector:
        try:
            return self._mode_index[mode_id]
        except KeyError:
            raise ModeSetError(f"unknown mode id {mode_id!r}") from None

    def context(self, context_id: str) -> Context:
        try:
            return self._context_index[context_id]
        except KeyError:
            raise ModeSetError(f"unknown context id {context_id!r}") from None

    def contexts_of(self, mode_id: str) -> Tuple[str, ...]:
        """모드가 속한 컨텍스트 ID (선언 순서)"""
        self.mode(mode_id)
        return self._membership.get(mode_id, ())

    def context_vectors(self, context_id: str) -> List[ModeVector]:
        return [self.mode(mid) for mid in self.context(context_id).mode_ids]

    def to_backend(self, name: str, tolerance: float = 1e-9) -> "ModeHypergraph":
        """성분을 다른 스칼라 백엔드로 변환한 복사본"""
        backend = get_backend(name, tolerance)
        modes = tuple(
            ModeVector(m.id, tuple(backend.coerce(c) for c in m.components)) for m in self.modes
        )
        return ModeHypergraph(self.dim, modes, self.contexts)


@dataclass(frozen=True)
class ValidationIssue:
    kind: str
    detail: str
    context_id: str = ""
    mode_ids: Tuple[str, ...] = ()


@dataclass
class ValidationReport:
    issues: List[ValidationIssue] = field(default_factory=list)
    n_modes: int = 0
    n_contexts: int = 0
    multiplicity: Dict[str, int] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.issues

    def add(self, kind: str, detail: str, context_id: str = "", mode_ids: Sequence[str] = ()) -> None:
        self.issues.append(ValidationIssue(kind, detail, context_id, tuple(mode_ids)))


def validate(h: ModeHypergraph) -> ValidationReport:
    """
    하이퍼그래프 검증. 문제는 예외가 아니라 리포트 항목으로 남긴다.

    검사 항목: 벡터 차원/영벡터, 컨텍스트 크기, 미지 모드 ID,
    쌍별 직교성, 항등 분해(Σ|v⟩⟨v|/‖v‖² = I), 모드 다중도(≥ 2)
    """
    report = ValidationReport(n_modes=len(h.modes), n_contexts=len(h.contexts))
    backend = h.backend
    known = set()

    for m in h.modes:
        if m.id in known:
            report.add("duplicate-mode", f"mode {m.id} declared twice", mode_ids=[m.id])
        known.add(m.id)
        if m.dim != h.dim:
            report.add("dimension", f"mode {m.id} has {m.dim} components, expected {h.dim}", mode_ids=[m.id])
        elif backend.is_zero(m.norm_squared):
            report.add("zero-vector", f"mode {m.id} is the zero vector", mode_ids=[m.id])

    counts = {m.id: 0 for m in h.modes}
    for ctx in h.contexts:
        unknown = [mid for mid in ctx.mode_ids if mid not in known]
        if unknown:
            report.add("unknown-mode", f"context {ctx.id} references unknown modes", ctx.id, unknown)
            continue
        if len(set(ctx.mode_ids)) != len(ctx.mode_ids):
            report.add("repeated-mode", f"context {ctx.id} lists a mode twice", ctx.id, ctx.mode_ids)
        if len(ctx.mode_ids) != h.dim:
            report.add("context-size", f"context {ctx.id} has {len(ctx.mode_ids)} modes, expected {h.dim}", ctx.id)
        for mid in set(ctx.mode_ids):
            counts[mid] += 1

        vectors = h.context_vectors(ctx.id)
        if any(v.dim != h.dim or backend.is_zero(v.norm_squared) for v in vectors):
            continue
        for i in range(len(vectors)):
            for j in range(i + 1, len(vectors)):
                inner = dot(vectors[i].components, vectors[j].components, backend)
                if not backend.is_zero(inner):
                    report.add(
                        "orthogonality",
                        f"<{vectors[i].id}|{vectors[j].id}> = {backend.to_literal(inner)} != 0",
                        ctx.id,
                        [vectors[i].id, vectors[j].id],
                    )
        if not _resolves_identity(vectors, h.dim, backend):
            report.add("completeness", f"projectors of context {ctx.id} do not sum to the identity", ctx.id)

    report.multiplicity = counts
    for mid, n in counts.items():
        if n < 2:
            report.add("multiplicity", f"mode {mid} appears in {n} context(s), need at least 2", mode_ids=[mid])

    if report.valid:
        logger.info(f"✓ 모드 집합 검증 통과: 모드 {report.n_modes}개, 컨텍스트 {report.n_contexts}개")
    else:
        logger.warning(f"⚠ 모드 집합 검증 실패: {len(report.issues)}건")
    return report


def projector_matrix(vectors: Sequence[ModeVector], d: int, backend: ScalarBackend) -> Matrix:
    """Σ |v⟩⟨v| / ‖v‖² (d×d)"""
    total = [[backend.zero() for _ in range(d)] for _ in range(d)]
    for v in vectors:
        inv = backend.one() / v.norm_squared
        for r in range(d):
            for c in range(d):
                total[r][c] = total[r][c] + v.components[r] * v.components[c] * inv
    return total


def _resolves_identity(vectors: Sequence[ModeVector], d: int, backend: ScalarBackend) -> bool:
    summed = projector_matrix(vectors, d, backend)
    eye = identity(d, backend)
    return all(backend.equal(summed[r][c], eye[r][c]) for r in range(d) for c in range(d))


def apply_transform(h: ModeHypergraph, u: Sequence[Sequence]) -> ModeHypergraph:
    """모든 모드 벡터에 U 를 적용. 컨텍스트 구조는 그대로."""
    backend = h.backend
    matrix = as_matrix(u, backend)
    if len(matrix) != h.dim or not is_orthogonal(matrix, backend):
        raise TransformError("transform matrix is not orthogonal")
    modes = tuple(m.transformed(matrix) for m in h.modes)
    return ModeHypergraph(h.dim, modes, h.contexts)
