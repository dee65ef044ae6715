"""Colorings of powers of cycles: the stride vertex coloring and the block total coloring."""

import logging
from dataclasses import dataclass

from ..chroma.models import TotalColorMatrix, VertexColoring
from ..chroma.verify import verify_total, verify_vertex
from ..exceptions import InvalidParameterError
from ..graphcore import power_cycle
from .base import Construction, ensure_verified

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PseudoLatin:
    """Commutative idempotent Latin square of order k+2 with its last row and column removed.

    The remaining order-(k+1) array still carries all k+2 symbols.
    """

    k: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.k % 2 == 0:
            raise InvalidParameterError(f"pseudo-Latin square needs odd k >= 1, got {self.k}")

    @property
    def order(self) -> int:
        return self.k + 1

    @property
    def modulus(self) -> int:
        return self.k + 2

    @property
    def multiplier(self) -> int:
        # inverse of 2 modulo the odd modulus k+2
        return (self.k + 3) // 2

    def entry(self, i: int, j: int) -> int:
        """Symbol in 1..k+2; rows and columns may run up to k+1 for the full square."""
        return (self.multiplier * (i + j)) % self.modulus + 1


def segment_lengths(n: int, k: int) -> list[int]:
    """Cut n into q = max(1, n // (k+1)) consecutive segments of length >= k+1.

    The n - q(k+1) extra vertices are spread as evenly as possible, longer segments first.
    """
    q = max(1, n // (k + 1))
    extra = n - q * (k + 1)
    base, rest = divmod(extra, q)
    return [k + 1 + base + (1 if s < rest else 0) for s in range(q)]


def segment_colors(lengths: list[int]) -> list[int]:
    """0-based color of each vertex: its position inside its segment."""
    return [j for length in lengths for j in range(length)]


def power_cycle_stride_coloring(n: int, k: int) -> Construction[VertexColoring]:
    """The standard optimal vertex coloring of C_n^k with k+1+ceil(r/q) colors.

    Raises:
        GraphError: k outside 1 <= k < n/2
        VerificationError: the coloring is improper
    """
    g = power_cycle(n, k)
    coloring = VertexColoring(tuple(c + 1 for c in segment_colors(segment_lengths(n, k))))
    report = ensure_verified(verify_vertex(g, coloring), f"stride coloring of C_{n}^{k}")
    return Construction("stride", g, coloring, report)


def _check_block_parameters(n: int, k: int) -> int:
    if k < 3 or k % 2 == 0:
        raise InvalidParameterError(f"block total coloring needs odd k >= 3, got k={k}")
    if (n - 1) % (k + 1):
        raise InvalidParameterError(f"n - 1 = {n - 1} is not a multiple of k + 1 = {k + 1}")
    m = (n - 1) // (k + 1)
    if m < 2 or m % 2:
        raise InvalidParameterError(f"(n-1)/(k+1) = {m} must be even and at least 2")
    if 2 * k >= n:
        raise InvalidParameterError(f"k={k} must be below n/2")
    return m


def total_color_power_cycle(n: int, k: int) -> Construction[TotalColorMatrix]:
    """Total coloring of C_n^k with 2k+2 colors for n = m(k+1)+1, m even, k odd.

    Vertices are cut into m blocks of k+1 consecutive vertices, the last block taking the
    extra vertex. Same-block vertices and edges follow the pseudo-Latin square; an edge
    crossing into the next block with gap g gets 2k+3-g after an even block and k+2+g after
    an odd one; edges wrapping past vertex 0 get k+2+g.

    Raises:
        InvalidParameterError: n, k outside the construction's range
        VerificationError: the matrix is not a proper total coloring
    """
    m = _check_block_parameters(n, k)
    square = PseudoLatin(k)

    def block(i: int) -> int:
        return min(i // (k + 1), m - 1)

    rows: list[list[int | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            d = j - i
            if d and min(d, n - d) > k:
                continue
            bi, bj = block(i), block(j)
            if bi == bj:
                color = square.entry(i - bi * (k + 1), j - bj * (k + 1))
            elif d <= k:
                color = 2 * k + 3 - d if bi % 2 == 0 else k + 2 + d
            else:
                color = k + 2 + (n - d)
            rows[i][j] = rows[j][i] = color

    matrix = TotalColorMatrix(n=n, entries=tuple(tuple(r) for r in rows))
    g = power_cycle(n, k)
    report = ensure_verified(verify_total(g, matrix), f"total coloring of C_{n}^{k}")
    if report.colors_used != 2 * k + 2:
        logger.warning("C_%d^%d total coloring used %d colors", n, k, report.colors_used)
    return Construction("block-total", g, matrix, report, {"blocks": m})
