"""
이름으로 상태 만들기 (CLI --state 문법)

  fermion-pair:v67,v69     f†67 f†69 |0⟩
  boson-pair:v16           b†16² / √2 |0⟩
  boson-n:v16:3            b†16³ / √3! |0⟩
  fermion:v12,v16,v17      임의 곱 상태 (boson: 도 동일)
  vacuum:fermion           N = 0

--kind / --modes / --n 플래그는 state_spec_text 로 같은 문자열이 된다.
"""

from typing import Optional, Sequence

from src.common.errors import StatisticsError
from src.modespace import ModeHypergraph
from src.occupancy import Statistics

from .state import FockState, product_state

STATE_KINDS = ("fermion-pair", "boson-pair", "boson-n", "fermion", "boson", "vacuum")


def product_of(h: ModeHypergraph, mode_ids: Sequence[str], stats: Statistics) -> FockState:
    stats.check(len(mode_ids), h.dim)
    return product_state([h.mode(mid) for mid in mode_ids], stats)


def fermion_pair(h: ModeHypergraph, first: str, second: str) -> FockState:
    return product_of(h, [first, second], Statistics.FERMION)


def boson_pair(h: ModeHypergraph, mode_id: str) -> FockState:
    return product_of(h, [mode_id, mode_id], Statistics.BOSON)


def boson_n(h: ModeHypergraph, mode_id: str, n_particles: int) -> FockState:
    return product_of(h, [mode_id] * n_particles, Statistics.BOSON)


def vacuum(stats: Statistics) -> FockState:
    return product_state([], stats)


def _ids(text: str) -> list:
    return [part.strip() for part in text.split(",") if part.strip()]


def parse_state_spec(text: str, h: ModeHypergraph) -> FockState:
    """'kind:args' 형식의 상태 지정 문자열 해석"""
    kind, _, rest = text.strip().partition(":")
    if kind not in STATE_KINDS:
        raise StatisticsError(f"state kind must be one of {', '.join(STATE_KINDS)}, got {kind!r}")

    if kind == "fermion-pair":
        ids = _ids(rest)
        if len(ids) != 2:
            raise StatisticsError(f"fermion-pair needs two mode ids, got {rest!r}")
        return fermion_pair(h, *ids)
    if kind == "boson-pair":
        ids = _ids(rest)
        if len(ids) != 1:
            raise StatisticsError(f"boson-pair needs one mode id, got {rest!r}")
        return boson_pair(h, ids[0])
    if kind == "boson-n":
        mode_id, _, count = rest.partition(":")
        if not count.strip().isdigit():
            raise StatisticsError(f"boson-n needs 'mode:N', got {rest!r}")
        return boson_n(h, mode_id.strip(), int(count))
    if kind == "vacuum":
        try:
            return vacuum(Statistics(rest.strip()))
        except ValueError:
            raise StatisticsError(f"vacuum needs 'fermion' or 'boson', got {rest!r}") from None
    return product_of(h, _ids(rest), Statistics(kind))


def state_spec_text(kind: str, modes: Optional[str] = None, n_particles: Optional[int] = None) -> str:
    """(--kind, --modes, --n) → 'kind:args'. 입자 수 일치 검사는 호출 쪽에서."""
    if kind not in STATE_KINDS:
        raise StatisticsError(f"state kind must be one of {', '.join(STATE_KINDS)}, got {kind!r}")
    modes = (modes or "").strip()
    if kind == "boson-n":
        if n_particles is None:
            raise StatisticsError("boson-n needs a particle count (--n)")
        return f"{kind}:{modes}:{n_particles}"
    return f"{kind}:{modes}"
