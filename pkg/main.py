#!/usr/bin/env python3
"""
Kochen-Specker Particles - 다입자 문맥성 검사기
모드 집합 검증 → 비문맥적 할당 탐색 → Fock 상태 전개 → Hardy 체인 / SIC 분석

사용 예:
    python main.py solve --particles 2 --stats fermion --mode decide
    python main.py expand --state fermion-pair:v67,v69 --context C9
    python main.py hardy --state boson-pair:v16 --out chains.json
    python main.py reproduce-paper
"""
import argparse
import logging
import os
import sys
from dataclasses import replace
from typing import List, Optional

# 프로젝트 루트를 Python 경로에 추가
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from dotenv import load_dotenv
load_dotenv()

from src.common import DomainError, ModeSetError, Settings, StatisticsError, load_settings, setup_logging
from src.fock import STATE_KINDS, FockState, parse_state_spec, state_spec_text
from src.hardy import HardyChain, hardy_search, propagate, support_table
from src.modespace import (
    ModeHypergraph,
    canonical_18,
    load_modeset,
    modeset_to_dict,
    validate,
)
from src.occupancy import SolveMode, Statistics, solve
from src.reporting import (
    chain_json,
    dumps,
    expansion_json,
    feasibility_json,
    fixpoint_json,
    pattern_of,
    reproduce,
    sic_json,
    state_json,
    support_json,
    validation_json,
)
from src.scalars import get_backend
from src.sic import sic_report

logger = logging.getLogger("ksp")

CANONICAL = "canonical"


def load_hypergraph(source: str, settings: Settings) -> ModeHypergraph:
    """'canonical' 이면 내장 18-모드 집합, 아니면 JSON 파일"""
    backend = get_backend(settings.backend, settings.float_tolerance)
    if source == CANONICAL:
        h = canonical_18()
        if settings.backend != "exact":
            h = h.to_backend(settings.backend, settings.float_tolerance)
        return h
    return load_modeset(source, backend)


def parse_trigger(text: str, h: ModeHypergraph):
    """'C3:v37,v39' 또는 'C4:v45=2' → OccupationPattern"""
    context_id, sep, rest = text.partition(":")
    if not sep:
        raise ModeSetError(f"trigger must look like 'C3:v37,v39', got {text!r}")
    modes: List[str] = []
    for part in rest.split(","):
        part = part.strip()
        if not part:
            continue
        mode_id, _, count = part.partition("=")
        if count and not count.isdigit():
            raise ModeSetError(f"trigger count for {mode_id} must be an integer, got {count!r}")
        modes.extend([mode_id] * (int(count) if count else 1))
    h.context(context_id)
    return pattern_of(h, context_id, modes)


def load_state(args, h: ModeHypergraph) -> FockState:
    """--state 문자열 또는 --kind/--modes/--n 조합"""
    text = args.state or state_spec_text(args.kind, args.modes, args.n)
    state = parse_state_spec(text, h)
    if args.n is not None and state.n_particles != args.n:
        raise StatisticsError(f"state {text!r} holds {state.n_particles} particles, not {args.n}")
    return state


def cmd_modeset(args, settings: Settings):
    if args.action == "dump-canonical":
        return modeset_to_dict(canonical_18())
    h = load_hypergraph(args.modeset, settings)
    report = validate(h)
    payload = validation_json(report)
    if not report.valid:
        first = report.issues[0]
        raise ModeSetError(f"mode set is invalid: {first.kind}: {first.detail}")
    return payload


def cmd_solve(args, settings: Settings):
    h = load_hypergraph(args.modeset, settings)
    stats = Statistics(args.stats)
    mode = SolveMode(args.mode)
    result = solve(h, args.particles, stats, mode, jobs=settings.jobs)
    return feasibility_json(result, args.particles, stats, mode, settings.solver.max_solutions)


def cmd_state(args, settings: Settings):
    h = load_hypergraph(args.modeset, settings)
    state = load_state(args, h)
    return state_json(state, h, args.context or ())


def cmd_expand(args, settings: Settings):
    h = load_hypergraph(args.modeset, settings)
    state = load_state(args, h)
    h.context(args.context)
    return expansion_json(state, args.context, h)


def cmd_hardy(args, settings: Settings):
    h = load_hypergraph(args.modeset, settings)
    state = load_state(args, h)

    if args.trigger:
        trigger = parse_trigger(args.trigger, h)
        table = support_table(state, h)
        result = propagate(table, trigger, h, state.n_particles, state.statistics)
        if isinstance(result, HardyChain):
            return {"chains": [chain_json(result, h)]}
        return {"chains": [], **fixpoint_json(trigger, result, h)}

    chains = hardy_search(state, h, jobs=settings.jobs)
    payload = {"chains": [chain_json(c, h) for c in chains]}
    if args.supports:
        payload["supports"] = support_json(support_table(state, h), h)
    return payload


def cmd_sic(args, settings: Settings):
    h = load_hypergraph(args.modeset, settings)
    report = sic_report(h, args.particles, Statistics(args.stats), jobs=settings.jobs)
    return sic_json(report)


def cmd_reproduce(args, settings: Settings):
    if settings.backend != "exact":
        logger.warning("⚠ 재현은 항상 exact 백엔드로 실행합니다")
    report = reproduce(jobs=settings.jobs)
    logger.info("\n" + report.to_frame().to_string(index=False))
    return report.to_dict()


COMMANDS = {
    "modeset": cmd_modeset,
    "solve": cmd_solve,
    "state": cmd_state,
    "expand": cmd_expand,
    "hardy": cmd_hardy,
    "sic": cmd_sic,
    "reproduce-paper": cmd_reproduce,
}


def add_state_arguments(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--state", help="e.g. fermion-pair:v67,v69, boson-n:v16:3")
    group.add_argument("--kind", choices=STATE_KINDS, help="state kind, used with --modes and --n")
    p.add_argument("--modes", help="comma separated mode ids for --kind")
    p.add_argument("--n", type=int, help="particle count (required for boson-n, checked otherwise)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ksp",
        description="Contextuality checks for identical particles in a mode hypergraph.",
    )
    parser.add_argument("--backend", choices=["exact", "float"], help="scalar backend (default from config)")
    parser.add_argument("--out", help="write JSON here instead of stdout")
    parser.add_argument("--jobs", type=int, help="worker processes for solver/search")
    parser.add_argument("--config", help="path to config.json")
    parser.add_argument("--log-level", help="override logging level")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("modeset", help="validate a mode set or dump the canonical one")
    p.add_argument("action", choices=["validate", "dump-canonical"])
    p.add_argument("--modeset", default=CANONICAL)

    p = sub.add_parser("solve", help="non-contextual occupation assignments")
    p.add_argument("--modeset", default=CANONICAL)
    p.add_argument("--particles", type=int, required=True)
    p.add_argument("--stats", choices=[s.value for s in Statistics], required=True)
    p.add_argument("--mode", choices=[m.value for m in SolveMode], default=SolveMode.DECIDE.value)

    p = sub.add_parser("state", help="outcome distributions of a state")
    p.add_argument("--modeset", default=CANONICAL)
    add_state_arguments(p)
    p.add_argument("--context", action="append", help="restrict to these contexts (repeatable)")

    p = sub.add_parser("expand", help="expansion of a state in one context")
    p.add_argument("--modeset", default=CANONICAL)
    add_state_arguments(p)
    p.add_argument("--context", required=True)

    p = sub.add_parser("hardy", help="Hardy-like contradiction chains")
    p.add_argument("--modeset", default=CANONICAL)
    add_state_arguments(p)
    p.add_argument("--trigger", help="single trigger, e.g. C3:v37,v39 or C4:v45=2")
    p.add_argument("--supports", action="store_true", help="include the support table")

    p = sub.add_parser("sic", help="simple SIC operator report")
    p.add_argument("--modeset", default=CANONICAL)
    p.add_argument("--particles", type=int, required=True)
    p.add_argument("--stats", choices=[s.value for s in Statistics], required=True)

    sub.add_parser("reproduce-paper", help="run every reference check and report pass/fail")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        settings = load_settings(args.config)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    settings = settings.with_overrides(backend=args.backend, jobs=args.jobs)
    if args.log_level:
        settings = settings.with_overrides(logging=replace(settings.logging, level=args.log_level))
    setup_logging(settings.logging)

    try:
        payload = COMMANDS[args.command](args, settings)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception:
        logger.exception("❌ 내부 오류")
        return 1

    text = dumps(payload, settings.indent)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"💾 저장 완료: {args.out}")
    else:
        sys.stdout.write(text)

    if args.command == "reproduce-paper" and not payload["overall"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
