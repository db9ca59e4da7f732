"""
결과 → JSON 직렬화

스칼라는 정확 리터럴("3/4 - 1/2*s2")과 편의용 float 를 함께 싣는다.
모든 dict 는 선언 순서로 만들어지므로 같은 입력이면 출력 바이트가 같다.
"""

import json
import logging
import math
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.common.errors import ScalarError
from src.fock import FockState, OccupationPattern, amplitude, amplitude_sign, is_supported, outcome_distribution
from src.hardy import HardyChain, PartialAssignment, SupportTable
from src.modespace import ModeHypergraph, ValidationReport
from src.occupancy import Assignment, FeasibilityResult, SolveMode, Statistics, assignment_total
from src.scalars import Scalar, backend_of
from src.sic import SicReport

logger = logging.getLogger(__name__)


def scalar_json(value: Optional[Scalar]) -> Optional[Dict[str, Any]]:
    if value is None:
        return None
    backend = backend_of(value)
    return {"value": backend.to_literal(value), "float": backend.to_float(value)}


def pattern_json(pattern: OccupationPattern, h: ModeHypergraph) -> Dict[str, int]:
    return pattern.as_dict(h)


def assignment_json(a: Assignment) -> Dict[str, Any]:
    return {"values": a.as_dict(), "total": assignment_total(a)}


def validation_json(report: ValidationReport) -> Dict[str, Any]:
    return {
        "valid": report.valid,
        "modes": report.n_modes,
        "contexts": report.n_contexts,
        "multiplicity": report.multiplicity,
        "issues": [
            {"kind": i.kind, "detail": i.detail, "context": i.context_id or None, "modes": list(i.mode_ids)}
            for i in report.issues
        ],
    }


def feasibility_json(
    result: FeasibilityResult,
    n_particles: int,
    stats: Statistics,
    mode: SolveMode,
    max_solutions: Optional[int] = None,
) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "particles": n_particles,
        "statistics": stats.value,
        "mode": mode.value,
        "feasible": result.feasible,
        "certificate": result.certificate.text if result.certificate else None,
    }
    if result.count is not None:
        # 개수는 십진 문자열
        out["count"] = str(result.count)
    if result.solutions is not None:
        shown = result.solutions if max_solutions is None else result.solutions[:max_solutions]
        out["solutions"] = [assignment_json(a) for a in shown]
        out["solutions_total"] = str(len(result.solutions))
    return out


def amplitude_json(state: FockState, pattern: OccupationPattern, h: ModeHypergraph, prob: Scalar) -> Dict[str, Any]:
    """
    진폭이 Q(√2) 밖이면 value 는 null, 부호와 정확한 제곱(squared)을 싣고
    float 는 sign·√prob 로 채운다.
    """
    try:
        return scalar_json(amplitude(state, pattern, h))
    except ScalarError:
        backend = backend_of(prob)
        sign = amplitude_sign(state, pattern, h)
        logger.debug(f"{pattern.occupied(h)}: 진폭이 체 밖, 제곱 {backend.to_literal(prob)} 로 기록")
        return {
            "value": None,
            "float": sign * math.sqrt(backend.to_float(prob)),
            "sign": sign,
            "squared": backend.to_literal(prob),
        }


def expansion_json(state: FockState, context_id: str, h: ModeHypergraph) -> Dict[str, Any]:
    distribution = outcome_distribution(state, context_id, h)
    return {
        "context": context_id,
        "terms": [
            {
                "pattern": pattern_json(p, h),
                "amplitude": amplitude_json(state, p, h, distribution[p]),
                "probability": scalar_json(distribution[p]),
            }
            for p in distribution
            if is_supported(state, p, h)
        ],
    }


def state_json(state: FockState, h: ModeHypergraph, contexts: Sequence[str] = ()) -> Dict[str, Any]:
    """상태 요약 + 컨텍스트별 결과 분포 (확률 > 0 인 패턴만)"""
    ids = list(contexts) or list(h.context_ids)
    backend = state.backend
    return {
        "particles": state.n_particles,
        "statistics": state.statistics.value,
        "norm_squared": scalar_json(state.norm_squared()),
        "contexts": [
            {
                "context": cid,
                "outcomes": [
                    {"pattern": pattern_json(p, h), "probability": scalar_json(prob)}
                    for p, prob in outcome_distribution(state, cid, h).items()
                    if not backend.is_zero(prob)
                ],
            }
            for cid in ids
        ],
    }


def support_json(table: SupportTable, h: ModeHypergraph) -> Dict[str, Any]:
    return {
        cid: [pattern_json(p, h) for p in table.support(cid)] for cid in h.context_ids
    }


def chain_json(chain: HardyChain, h: ModeHypergraph) -> Dict[str, Any]:
    return {
        "trigger": {
            "context": chain.trigger_context,
            "pattern": pattern_json(chain.trigger, h),
            "probability": scalar_json(chain.probability),
        },
        "steps": [
            {
                "context": step.context_id,
                "forced": dict(step.forced),
                "justification": step.justification.value,
            }
            for step in chain.steps
        ],
        "contradiction": chain.contradiction,
        "contradictions": list(chain.contradictions),
        "assignments": chain.forced_contexts(h),
    }


def fixpoint_json(trigger: OccupationPattern, assignment: PartialAssignment, h: ModeHypergraph) -> Dict[str, Any]:
    return {
        "trigger": {"context": trigger.context_id, "pattern": pattern_json(trigger, h)},
        "fixpoint": {mid: assignment.values[mid] for mid in h.mode_ids if mid in assignment.values},
    }


def sic_json(report: SicReport) -> Dict[str, Any]:
    return {
        "particles": report.n_particles,
        "statistics": report.statistics.value,
        "lambda": scalar_json(report.lam),
        "nc_bound": report.nc_bound,
        "quantum_value": scalar_json(report.quantum_value),
        "violated": report.violated,
        "feasible": report.feasible,
    }


def dumps(payload: Any, indent: int = 2) -> str:
    return json.dumps(payload, indent=indent, ensure_ascii=False) + "\n"
