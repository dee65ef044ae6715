"""The order-2m 2-gyrogroup: operation tables, left inverses, gyrations and axiom checks.

Labels 0..m-1 form the cyclic part T1 and labels m..2m-1 form the reflection part T2.
Each case formula is evaluated on residues (label mod m); the variant decides which formula
serves which (T-part, T-part) argument class and whether that class lands in T2.
"""

import csv
import io
import itertools
import logging
from dataclasses import dataclass, field
from functools import cache, cached_property

import numpy as np

from .exceptions import GyroTableError, NoPassingVariantError

logger = logging.getLogger(__name__)

FORMULAS = ("sum", "mix", "twist_a", "twist_b")
FORMULA_TEXT = {
    "sum": "i+j",
    "mix": "i+(m/2-1)j",
    "twist_a": "(m/2-1)i+(m/2+1)j",
    "twist_b": "(m/2+1)i+(m/2-1)j",
}
# Class index of an argument pair: 2*[a in T2] + [b in T2]
ARG_CLASSES = ("T1,T1", "T1,T2", "T2,T1", "T2,T2")


@dataclass(frozen=True)
class GyroVariant:
    """One case assignment of the operation.

    ``formulas[c]`` serves argument class c; bit c of ``offsets`` adds m to that class.
    """

    formulas: tuple[str, str, str, str]
    offsets: int
    index: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.formulas) != 4 or any(f not in FORMULAS for f in self.formulas):
            raise GyroTableError(f"unknown formula assignment {self.formulas}")
        if not 0 <= self.offsets < 16:
            raise GyroTableError(f"offset mask {self.offsets} outside 0..15")

    def adds_m(self, arg_class: int) -> bool:
        return bool((self.offsets >> arg_class) & 1)

    def describe(self) -> str:
        parts = []
        for c, name in enumerate(ARG_CLASSES):
            suffix = " +m" if self.adds_m(c) else ""
            parts.append(f"({name}): {FORMULA_TEXT[self.formulas[c]]}{suffix}")
        return "; ".join(parts)


@cache
def enumerate_variants() -> tuple[GyroVariant, ...]:
    """All distinct case assignments, in a fixed order.

    For each two-argument twist (twist_a first), every ordering of the four right-hand sides
    over the argument classes, each with the 16 offset masks; duplicate orderings of the two
    i+j formulas are dropped.
    """
    seen: set[tuple[tuple[str, ...], int]] = set()
    out: list[GyroVariant] = []
    for twist in ("twist_a", "twist_b"):
        for perm in itertools.permutations(("sum", "sum", "mix", twist)):
            for offsets in range(16):
                key = (perm, offsets)
                if key in seen:
                    continue
                seen.add(key)
                formulas: tuple[str, str, str, str] = perm  # type: ignore[assignment]
                out.append(GyroVariant(formulas=formulas, offsets=offsets, index=len(out)))
    return tuple(out)


def _check_half_order(m: int) -> None:
    if m < 4 or m & (m - 1):
        raise GyroTableError(f"m must be a power of two and at least 4, got {m}")


def _formula_values(m: int, name: str, i: np.ndarray, j: np.ndarray) -> np.ndarray:
    h = m // 2
    match name:
        case "sum":
            return (i + j) % m
        case "mix":
            return (i + (h - 1) * j) % m
        case "twist_a":
            return ((h - 1) * i + (h + 1) * j) % m
        case "twist_b":
            return ((h + 1) * i + (h - 1) * j) % m
    raise GyroTableError(f"unknown formula {name!r}")


@dataclass(frozen=True, eq=False)
class GyroTable:
    """Operation table of one variant; ``add[a, b]`` is a (+) b."""

    m: int
    variant: GyroVariant
    add: np.ndarray

    @property
    def order(self) -> int:
        return 2 * self.m

    @property
    def reflection(self) -> int:
        """The element m/2 + m."""
        return self.m // 2 + self.m

    def op(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    @cached_property
    def inverses(self) -> np.ndarray | None:
        """Left inverses per label, or None when some label has none."""
        hits = self.add == 0
        if not hits.any(axis=0).all():
            return None
        # first x with x (+) a = 0, per column a
        return hits.argmax(axis=0)


def build_table(m: int, variant: GyroVariant | None = None) -> GyroTable:
    """Tabulate the operation for ``variant`` (default: ``select_variant(m)``).

    Raises:
        GyroTableError: m is not a power of two at least 4
    """
    _check_half_order(m)
    if variant is None:
        variant = select_variant(m)
    labels = np.arange(2 * m)
    a = labels[:, None]
    b = labels[None, :]
    i, j = a % m, b % m
    arg_class = 2 * (a >= m) + (b >= m)
    choices = [_formula_values(m, name, i, j) for name in variant.formulas]
    add = np.choose(arg_class, choices)
    add = add + m * np.choose(arg_class, [int(variant.adds_m(c)) for c in range(4)])
    add = np.ascontiguousarray(add, dtype=np.int64)
    add.flags.writeable = False
    return GyroTable(m=m, variant=variant, add=add)


def gyro_inverse(t: GyroTable, a: int) -> int:
    """Left inverse of ``a``: the x with x (+) a = 0.

    Raises:
        GyroTableError: no left inverse exists (the variant is broken)
    """
    inv = t.inverses
    if inv is None:
        raise GyroTableError(f"{a} has no left inverse under variant {t.variant.index}")
    return int(inv[a])


def gyr(t: GyroTable, a: int, b: int, c: int) -> int:
    """gyr[a,b]c = -(a (+) b) (+) (a (+) (b (+) c))."""
    ab = t.op(a, b)
    return t.op(gyro_inverse(t, ab), t.op(a, t.op(b, c)))


def left_translation(t: GyroTable, s: int) -> tuple[int, ...]:
    """x -> s (+) x as an image tuple."""
    return tuple(int(x) for x in t.add[s])


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    counterexample: tuple[int, ...] | None = None
    detail: str = ""


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts with the first counterexample of each failure."""

    m: int
    variant: GyroVariant
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    """Index of the first True entry of ``mask``."""
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(x) for x in hits[0])


def _gyration_tensor(add: np.ndarray, inv: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """G[a,b,c] = gyr[a,b]c and R[a,b,c] = a (+) (b (+) c)."""
    n = add.shape[0]
    right = add[np.arange(n)[:, None, None], add[None, :, :]]
    gyration = add[inv[add][:, :, None], right]
    return gyration, right


def verify_axioms(t: GyroTable) -> AxiomReport:
    """Exhaustively check the gyrogroup axioms; failures are report content."""
    add = t.add
    n = t.order
    labels = np.arange(n)
    checks: list[AxiomCheck] = []

    bad = add[0] != labels
    checks.append(AxiomCheck("left_identity", bool(not bad.any()), _first(bad)))

    bijective = (np.sort(add, axis=1) == labels).all(axis=1)
    checks.append(AxiomCheck("left_translations", bool(bijective.all()), _first(~bijective)))

    inv = t.inverses
    if inv is None:
        missing = ~(add == 0).any(axis=0)
        checks.append(AxiomCheck("left_inverse", False, _first(missing)))
        for name in ("gyroautomorphism", "gyroassociativity", "left_loop"):
            checks.append(AxiomCheck(name, False, detail="not checked: no left inverses"))
        return AxiomReport(m=t.m, variant=t.variant, checks=tuple(checks))
    checks.append(AxiomCheck("left_inverse", True))

    gyration, right = _gyration_tensor(add, inv)

    auto_cex: tuple[int, ...] | None = None
    for a in range(n):
        ga = gyration[a]
        not_bijective = (np.sort(ga, axis=1) != labels).any(axis=1)
        if not_bijective.any():
            auto_cex = (a, int(np.argmax(not_bijective)))
            break
        lhs = ga[labels[:, None, None], add[None, :, :]]
        rhs = add[ga[:, :, None], ga[:, None, :]]
        cex = _first(lhs != rhs)
        if cex is not None:
            auto_cex = (a, *cex)
            break
    checks.append(AxiomCheck("gyroautomorphism", auto_cex is None, auto_cex))

    assoc_bad = add[add[:, :, None], gyration] != right
    checks.append(AxiomCheck("gyroassociativity", bool(not assoc_bad.any()), _first(assoc_bad)))

    loop_bad = gyration[add, labels[None, :], :] != gyration
    checks.append(AxiomCheck("left_loop", bool(not loop_bad.any()), _first(loop_bad)))

    report = AxiomReport(m=t.m, variant=t.variant, checks=tuple(checks))
    logger.debug("Axioms for m=%d variant %s: failed=%s", t.m, t.variant.index, report.failed)
    return report


@dataclass(frozen=True)
class StructuralFacts:
    t1_closed: bool
    t2_pairs_in_t1: bool
    t2_involutive: bool
    t1_cyclic: bool

    @property
    def passed(self) -> bool:
        return self.t1_closed and self.t2_pairs_in_t1 and self.t2_involutive and self.t1_cyclic


def structural_facts(t: GyroTable) -> StructuralFacts:
    """The T1/T2 facts the colorings rely on."""
    m = t.m
    add = t.add
    t1_closed = bool((add[:m, :m] < m).all())
    cyclic = False
    if t1_closed:
        # 1 generates T1 under repeated left translation
        seen = {0}
        x = 0
        for _ in range(m):
            x = int(add[1, x])
            seen.add(x)
        cyclic = seen == set(range(m))
    diag = add[np.arange(m, 2 * m), np.arange(m, 2 * m)]
    return StructuralFacts(
        t1_closed=t1_closed,
        t2_pairs_in_t1=bool((add[m:, m:] < m).all()),
        t2_involutive=bool((diag == 0).all()),
        t1_cyclic=cyclic,
    )


@cache
def select_variant(m: int) -> GyroVariant:
    """First enumerated variant passing every axiom check and every structural fact.

    Raises:
        GyroTableError: m is not a power of two at least 4
        NoPassingVariantError: no variant qualifies
    """
    _check_half_order(m)
    labels = np.arange(2 * m)
    for variant in enumerate_variants():
        t = build_table(m, variant)
        if (t.add[0] != labels).any() or not structural_facts(t).passed:
            continue
        if verify_axioms(t).passed:
            logger.debug("Selected variant %d for m=%d: %s", variant.index, m, variant.describe())
            return variant
    raise NoPassingVariantError(f"no case assignment yields a 2-gyrogroup for m={m}")


def format_table(t: GyroTable) -> str:
    """CSV dump of the operation table with a leading variant comment line."""
    buf = io.StringIO()
    buf.write(f"# variant {t.variant.index} m={t.m}: {t.variant.describe()}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["", *range(t.order)])
    for a in range(t.order):
        writer.writerow([a, *(int(x) for x in t.add[a])])
    return buf.getvalue()
