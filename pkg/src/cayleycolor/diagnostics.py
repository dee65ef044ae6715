"""Desk-scale certification suite: every construction on small instances, one line per check."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .chroma.models import is_equitable
from .construct import (
    alt_graph,
    conformable_partition,
    gyro_edge_color,
    gyro_generators,
    gyro_total_color,
    gyro_vertex_color,
    lift_alt_coloring,
    total_color_alt,
    total_color_power_cycle,
    total_color_sym,
)
from .exceptions import CayleyColorError
from .gyrocore import build_table, structural_facts, verify_axioms
from .oracle.search import enumerate_colorings
from .services.coloring_service import ColoringService
from .utils.logging import get_logger, log_elapsed

logger = get_logger(__name__)

# (n, k) instances of the block total coloring beyond the golden tables
BLOCK_SWEEP = ((9, 3), (17, 3), (33, 3), (37, 5), (17, 7), (49, 5))
CONFORMABLE_MAX_N = 30


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _print_result(result: CheckResult) -> None:
    status = "OK" if result.ok else "FAIL"
    line = f"[{status}] {result.name}"
    if result.detail:
        line += f" - {result.detail}"
    print(line)


def _check_symmetric() -> tuple[bool, str]:
    c = total_color_sym(3)
    return c.report.ok and c.report.colors_used == 4, c.report.summary


def _check_lift() -> tuple[bool, str]:
    base = next(enumerate_colorings(alt_graph(4), 3))
    c = lift_alt_coloring(5, base)
    ok = c.report.ok and c.report.colors_used == 3
    return ok, f"stage {c.notes['stage']}, {c.notes['recolored']} recolored"


def _check_alternating_total() -> tuple[bool, str]:
    c = total_color_alt(4)
    vertex = c.coloring.vertex_coloring()
    ok = c.report.ok and c.report.colors_used == 5 and is_equitable(vertex)
    return ok, f"{c.report.summary} via {c.notes['path']}"


def _check_conformable() -> tuple[bool, str]:
    count = 0
    for n in range(5, CONFORMABLE_MAX_N + 1):
        for k in range(1, (n + 1) // 2):
            if n % 2 == 1 and 3 * (k + 1) >= n:
                continue
            conformable_partition(n, k)
            count += 1
    return True, f"{count} instances up to n={CONFORMABLE_MAX_N}"


def _check_golden() -> tuple[bool, str]:
    diffs = ColoringService().golden()
    bad = [d.name for d in diffs if not d.identical]
    return not bad, "differs: " + ", ".join(bad) if bad else "byte-identical"


def _check_block_sweep() -> tuple[bool, str]:
    for n, k in BLOCK_SWEEP:
        c = total_color_power_cycle(n, k)
        if c.report.colors_used != 2 * k + 2:
            return False, f"C_{n}^{k} used {c.report.colors_used} colors"
    return True, f"{len(BLOCK_SWEEP)} instances with 2k+2 colors"


def _check_gyro_axioms() -> tuple[bool, str]:
    t = build_table(8)
    report = verify_axioms(t)
    ok = report.passed and structural_facts(t).passed
    return ok, f"variant {t.variant.index}" if ok else f"failed: {', '.join(report.failed)}"


def _check_gyro_colorings() -> tuple[bool, str]:
    t = build_table(8)
    gens = gyro_generators(8, 2)
    vertex = gyro_vertex_color(t, gens)
    total = gyro_total_color(t, gens)
    edge = gyro_edge_color(t, [1, 7, 12])
    ok = vertex.report.ok and total.report.ok and edge.report.bound_class == "class I"
    return ok, (
        f"vertex {vertex.report.colors_used}, total {total.report.colors_used}, "
        f"edge {edge.report.bound_class}"
    )


CHECKS: tuple[tuple[str, Callable[[], tuple[bool, str]]], ...] = (
    ("symmetric group total coloring n=3", _check_symmetric),
    ("alternating lift A4 -> A5", _check_lift),
    ("alternating total coloring n=4", _check_alternating_total),
    ("conformable partitions", _check_conformable),
    ("golden tables", _check_golden),
    ("block total colorings", _check_block_sweep),
    ("gyrogroup axioms m=8", _check_gyro_axioms),
    ("gyrogroup colorings m=8", _check_gyro_colorings),
)


def run_checks() -> list[CheckResult]:
    results = []
    for name, check in CHECKS:
        try:
            with log_elapsed(logger, name):
                ok, detail = check()
        except CayleyColorError as exc:
            logger.warning("Certification check %r failed: %s", name, exc)
            ok, detail = False, str(exc)
        results.append(CheckResult(name, ok, detail))
    return results


def main() -> int:
    """Run every check, print OK/FAIL lines; 0 when all pass, else 2."""
    results = run_checks()
    for result in results:
        _print_result(result)
    return 0 if all(r.ok for r in results) else 2
