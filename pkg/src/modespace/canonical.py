"""
내장 18-모드 집합 (d = 4, 컨텍스트 9개, 각 모드는 정확히 2개 컨텍스트에 속함)

모드 v_ij 는 컨텍스트 i, j 에 속한다. 벡터 성분은 18-벡터 KS 집합에서 가져왔고
아래 위상(부호) 규약을 쓴다:
  - f67 f69 상태의 컨텍스트 3 전개는 부호까지 기준값(reporting.expected)과 같다.
  - 컨텍스트 7, 9 전개는 전역 부호 -1 만큼 다르다.
  - b16 = b45/2 + b48/2 - b47/√2 는 부호까지 같다.
"""

from functools import lru_cache
from pathlib import Path

from .hypergraph import ModeHypergraph
from .io import load_modeset

CANONICAL_PATH = Path(__file__).resolve().parent / "data" / "canonical_18.json"


@lru_cache(maxsize=1)
def canonical_18() -> ModeHypergraph:
    return load_modeset(CANONICAL_PATH)
