"""
기준값 (canonical_18, 모드 ID 기준)

전개 계수는 컨텍스트 선언 순서로 생성 연산자를 곱했을 때의 값이다.
컨텍스트마다 전역 부호 하나의 차이는 위상 규약 차이로 허용한다.
"""

from typing import Dict, Tuple

from src.scalars import QSqrt2, parse_scalar

# f†67 f†69 |0⟩
FERMION_PAIR = ("v67", "v69")

FERMION_EXPANSIONS: Dict[str, Dict[Tuple[str, ...], str]] = {
    "C3": {
        ("v39", "v23"): "1/4*s2",
        ("v37", "v23"): "1/4",
        ("v37", "v39"): "-1/4",
        ("v34", "v23"): "-3/4",
        ("v34", "v39"): "1/4",
        ("v34", "v37"): "-1/4*s2",
    },
    "C7": {
        ("v67", "v37"): "1/2",
        ("v67", "v47"): "1/2",
        ("v17", "v67"): "1/2*s2",
    },
    "C9": {
        ("v69", "v29"): "1/2",
        ("v69", "v39"): "-1/2",
        ("v69", "v59"): "-1/2*s2",
    },
}

FERMION_TRIGGER = ("C3", {"v37": 1, "v39": 1})
FERMION_TRIGGER_PROBABILITY = "1/16"

FERMION_CHAIN: Dict[str, Dict[str, int]] = {
    "C3": {"v34": 0, "v37": 1, "v39": 1, "v23": 0},
    "C7": {"v17": 0, "v67": 1, "v47": 0, "v37": 1},
    "C9": {"v69": 1, "v59": 0, "v39": 1, "v29": 0},
    "C6": {"v16": 0, "v67": 1, "v69": 1, "v56": 0},
    "C1": {"v12": 1, "v18": 1, "v17": 0, "v16": 0},
    "C5": {"v56": 0, "v59": 0, "v58": 1, "v45": 1},
    "C8": {"v18": 1, "v58": 1, "v48": 0, "v28": 0},
    "C2": {"v23": 0, "v29": 0, "v28": 0, "v12": 1},
    "C4": {"v45": 1, "v48": 0, "v47": 0, "v34": 0},
}
FERMION_CONTRADICTIONS = ("C2", "C4")

# b†16² / √2 |0⟩
BOSON_MODE = "v16"

# C4 에서 b†16 = b†45/2 + b†48/2 - b†47/√2 를 제곱해 얻은 값.
# 정규화된 패턴 진폭 (|45=2⟩ 등) 이므로 확률 합은 1.
BOSON_PAIR_EXPANSION_C4: Dict[Tuple[str, ...], str] = {
    ("v45", "v45"): "1/4",
    ("v45", "v48"): "1/4*s2",
    ("v45", "v47"): "-1/2",
    ("v48", "v48"): "1/4",
    ("v48", "v47"): "-1/2",
    ("v47", "v47"): "1/2",
}

BOSON_TRIGGER_CONTEXT = "C4"
BOSON_TRIGGER_MODE = "v45"


def boson_chain(n: int) -> Dict[str, Dict[str, int]]:
    """N 개 보손 체인: 값 2 자리에 N"""
    return {
        "C4": {"v45": n, "v48": 0, "v47": 0, "v34": 0},
        "C5": {"v56": 0, "v59": 0, "v58": 0, "v45": n},
        "C1": {"v12": 0, "v18": 0, "v17": 0, "v16": n},
        "C6": {"v16": n, "v67": 0, "v69": 0, "v56": 0},
        "C7": {"v17": 0, "v67": 0, "v47": 0, "v37": n},
        "C8": {"v18": 0, "v58": 0, "v48": 0, "v28": n},
        "C2": {"v23": 0, "v29": 0, "v28": n, "v12": 0},
        "C3": {"v34": 0, "v37": n, "v39": 0, "v23": 0},
        "C9": {"v69": 0, "v59": 0, "v39": 0, "v29": 0},
    }


BOSON_CONTRADICTION = "C9"


def boson_trigger_probability(n: int) -> QSqrt2:
    """v45 에 N 개 모두 있을 확률 = 1/4^N"""
    return QSqrt2(1) / QSqrt2(4) ** n


SIC_LAMBDA = parse_scalar("9/2")
SIC_BOUND = 9

# 페르미온 N = 0..4 / 보손 N = 0..2: (가능 여부, 해 개수 또는 None)
FERMION_FEASIBILITY = {0: (True, 1), 1: (False, 0), 2: (True, None), 3: (False, 0), 4: (True, 1)}
BOSON_FEASIBILITY = {0: (True, 1), 1: (False, 0), 2: (True, None)}
