"""Conformable colorings of powers of cycles."""

import logging

from ..chroma.models import VertexColoring
from ..chroma.verify import verify_conformable
from ..config import settings
from ..exceptions import InvalidParameterError, SearchExhaustedError
from ..graphcore import power_cycle
from .base import Construction, ensure_verified
from .power_cycle import segment_colors, segment_lengths

logger = logging.getLogger(__name__)


def _classes_from_colors(colors: list[int]) -> list[list[int]]:
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


def _even_classes(n: int, k: int) -> list[list[int]] | None:
    """Antipodal pairs {p, p + n/2}, colored as the pair cycle C_{n/2}^k."""
    half = n // 2
    pair_colors = segment_colors(segment_lengths(half, k))
    if max(pair_colors) >= 2 * k + 1:
        return None
    classes: list[list[int]] = [[] for _ in range(2 * k + 1)]
    for p, c in enumerate(pair_colors):
        classes[c] += [p, p + half]
    return classes


def _split_to_odd(classes: list[list[int]], target: int) -> list[list[int]] | None:
    """Split classes into exactly ``target`` odd-size parts, or None."""
    parts: list[list[int]] = []
    for c in classes:
        if len(c) % 2 == 0:
            if len(c) < 2:
                return None
            parts += [[c[0]], c[1:]]
        else:
            parts.append(list(c))
    while len(parts) < target:
        big = next((i for i, p in enumerate(parts) if len(p) >= 3), None)
        if big is None:
            return None
        p = parts[big]
        parts[big] = p[2:]
        parts += [[p[0]], [p[1]]]
    return parts if len(parts) == target else None


def _odd_classes(n: int, k: int, budget: int) -> list[list[int]] | None:
    """Segmentations with an odd number of segments, split until 2k+1 odd classes exist."""
    alpha = n // (k + 1)
    tried = 0
    for q in range(alpha, 0, -1):
        if q % 2 == 0:
            continue
        extra = n - q * (k + 1)
        if extra < 0 or extra > q * k:
            continue
        tried += 1
        if tried > budget:
            break
        base, rest = divmod(extra, q)
        lengths = [k + 1 + base + (1 if s < rest else 0) for s in range(q)]
        parts = _split_to_odd(_classes_from_colors(segment_colors(lengths)), 2 * k + 1)
        if parts is not None:
            logger.debug("Odd conformable partition of C_%d^%d from %d segments", n, k, q)
            return parts
    return None


def conformable_partition(
    n: int, k: int, *, search_budget: int | None = None
) -> Construction[VertexColoring]:
    """A proper coloring of C_n^k into 2k+1 classes whose sizes all share n's parity.

    Even n needs k < n/2 (empty classes allowed); odd n needs k+1 < n/3.

    Raises:
        InvalidParameterError: n, k outside the construction's range
        SearchExhaustedError: no partition found; a conformability counter-candidate
        VerificationError: the partition fails the conformability check
    """
    if n % 2 == 0:
        if k < 1 or 2 * k >= n:
            raise InvalidParameterError(f"even n needs 1 <= k < n/2, got n={n}, k={k}")
        classes = _even_classes(n, k)
    else:
        if k < 1 or 3 * (k + 1) >= n:
            raise InvalidParameterError(f"odd n needs k+1 < n/3, got n={n}, k={k}")
        classes = _odd_classes(n, k, search_budget or settings.search_node_budget)
    if classes is None:
        logger.warning("No conformable partition constructed for C_%d^%d", n, k)
        raise SearchExhaustedError(f"no conformable partition found for C_{n}^{k}")

    colors = [0] * n
    for c, members in enumerate(classes, start=1):
        for v in members:
            colors[v] = c
    g = power_cycle(n, k)
    coloring = VertexColoring(tuple(colors))
    report = ensure_verified(
        verify_conformable(g, coloring), f"conformable partition of C_{n}^{k}"
    )
    sizes = [len(c) for c in classes]
    return Construction("conformable", g, coloring, report, {"class_sizes": sizes})
