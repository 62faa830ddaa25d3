"""Two-row set partitions, crossing detection, their 0/1 tensor maps, and
exact ranks of families of such maps.

Points are encoded 0..k-1 for the upper row (left to right) and k..k+l-1 for
the lower row (left to right).  Crossings are decided on the boundary circle
that runs through the upper points left to right and then the lower points
right to left; two blocks cross when their points interleave in that cyclic
order.  Ranks are computed over the rationals by fraction-free elimination on
exact integers.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

import numpy as np

DEFAULT_MAX_POINTS = 10
DEFAULT_MAX_ENTRIES = 10 ** 6


class CapExceeded(RuntimeError):
    """An enumeration or matrix size cap was exceeded."""


class Partition:
    """Set partition of k upper and l lower points.

    Blocks are stored sorted, so equal partitions compare and hash equal.
    """

    __slots__ = ("k", "l", "blocks")

    def __init__(self, k: int, l: int, blocks):
        self.k = int(k)
        self.l = int(l)
        if self.k < 0 or self.l < 0:
            raise ValueError("negative point count")
        blocks = tuple(sorted(tuple(sorted(int(p) for p in b)) for b in blocks))
        total = self.k + self.l
        seen = [False] * total
        for block in blocks:
            if not block:
                raise ValueError("empty block")
            for p in block:
                if not 0 <= p < total:
                    raise ValueError(f"point {p} out of range for {total} points")
                if seen[p]:
                    raise ValueError(f"point {p} appears in two blocks")
                seen[p] = True
        if not all(seen):
            raise ValueError("blocks do not cover all points")
        self.blocks = blocks

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return (self.k, self.l, self.blocks) == (other.k, other.l, other.blocks)

    def __hash__(self):
        return hash((self.k, self.l, self.blocks))

    def boundary_position(self, point: int) -> int:
        """Position on the boundary circle (upper left-to-right, then lower
        right-to-left)."""
        if point < self.k:
            return point
        return self.k + (self.l - 1 - (point - self.k))

    def point_name(self, point: int) -> str:
        if point < self.k:
            return f"{point + 1}u"
        return f"{point - self.k + 1}d"

    def render(self) -> str:
        return "{" + "|".join(
            ",".join(self.point_name(p) for p in block) for block in self.blocks) + "}"

    __str__ = render

    def __repr__(self):
        return f"<Partition ({self.k},{self.l}) {self.render()}>"


def _set_partition_blocks(total: int):
    """All set partitions of ``range(total)`` in lexicographic
    restricted-growth-string order."""
    if total == 0:
        yield ()
        return
    code = [0] * total
    while True:
        groups = defaultdict(list)
        for point, c in enumerate(code):
            groups[c].append(point)
        yield tuple(tuple(g) for _, g in sorted(groups.items()))
        i = total - 1
        while i > 0:
            if code[i] <= max(code[:i]):
                code[i] += 1
                for j in range(i + 1, total):
                    code[j] = 0
                break
            i -= 1
        else:
            return


def enumerate_partitions(k: int, l: int, noncrossing_only: bool = False,
                         max_points: int = DEFAULT_MAX_POINTS) -> list[Partition]:
    """All partitions of the k+l points, in a fixed deterministic order."""
    total = k + l
    if total > max_points:
        raise CapExceeded(f"{total} points exceeds the cap of {max_points}")
    out = []
    for blocks in _set_partition_blocks(total):
        p = Partition(k, l, blocks)
        if noncrossing_only and not is_noncrossing(p):
            continue
        out.append(p)
    return out


def _interleaved(positions_a, positions_b) -> bool:
    # count ownership changes walking the merged positions cyclically;
    # two arcs give exactly two changes, interleaving gives four or more
    merged = sorted([(pos, 0) for pos in positions_a] + [(pos, 1) for pos in positions_b])
    owners = [owner for _, owner in merged]
    changes = sum(owners[i] != owners[i - 1] for i in range(len(owners)))
    return changes > 2


def is_noncrossing(p: Partition) -> bool:
    """True when no two blocks interleave on the boundary circle."""
    pos_blocks = [sorted(p.boundary_position(pt) for pt in block) for block in p.blocks]
    for a, b in itertools.combinations(pos_blocks, 2):
        if _interleaved(a, b):
            return False
    return True


def indicator(p: Partition, upper, lower, n: int) -> int:
    """1 when every block of the partition sees a single value under the
    assignment (upper values from ``upper``, lower from ``lower``), else 0."""
    upper = tuple(upper)
    lower = tuple(lower)
    if len(upper) != p.k or len(lower) != p.l:
        raise ValueError("multi-index lengths must match the partition shape")
    for value in itertools.chain(upper, lower):
        if not 1 <= value <= n:
            raise ValueError(f"index value {value} outside 1..{n}")
    return _indicator_unchecked(p, upper, lower)


def _indicator_unchecked(p: Partition, upper, lower) -> int:
    for block in p.blocks:
        first = block[0]
        first_value = upper[first] if first < p.k else lower[first - p.k]
        for point in block[1:]:
            value = upper[point] if point < p.k else lower[point - p.k]
            if value != first_value:
                return 0
    return 1


class PartitionMap:
    """Dense 0/1 matrix of a partition acting between tensor powers.

    Rows are indexed by lower multi-indices, columns by upper ones, both in
    lexicographic order with the leftmost tensor factor most significant.
    """

    __slots__ = ("partition", "n", "matrix")

    def __init__(self, partition: Partition, n: int, matrix):
        self.partition = partition
        self.n = n
        self.matrix = matrix

    def to_tsv(self) -> str:
        p = self.partition
        header = (f"# partition={p.render()}\tk={p.k}\tl={p.l}\tn={self.n}"
                  "\trows=lower-multi-indices\tcols=upper-multi-indices"
                  "\torder=lexicographic-leftmost-most-significant")
        rows = ["\t".join(str(int(x)) for x in row) for row in self.matrix]
        return "\n".join([header] + rows) + "\n"

    def __repr__(self):
        return f"<PartitionMap {self.partition.render()} n={self.n} shape={self.matrix.shape}>"


def partition_map(p: Partition, n: int,
                  max_entries: int = DEFAULT_MAX_ENTRIES) -> PartitionMap:
    """The full matrix of a partition at dimension n."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    rows, cols = n ** p.l, n ** p.k
    if rows * cols > max_entries:
        raise CapExceeded(f"matrix with {rows * cols} entries exceeds the cap of {max_entries}")
    matrix = np.zeros((rows, cols), dtype=np.int64)
    lowers = list(itertools.product(range(1, n + 1), repeat=p.l))
    for col, upper in enumerate(itertools.product(range(1, n + 1), repeat=p.k)):
        for row, lower in enumerate(lowers):
            if _indicator_unchecked(p, upper, lower):
                matrix[row, col] = 1
    return PartitionMap(p, n, matrix)


def _exact_rank(rows) -> int:
    """Rank of integer rows by Bareiss fraction-free elimination (exact)."""
    m = [[int(x) for x in row] for row in rows]
    m = [row for row in m if any(row)]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            row_r, row_p = m[r], m[rank]
            for c in range(col, ncols):
                row_r[c] = (row_r[c] * pivot - factor * row_p[c]) // prev
        prev = pivot
        rank += 1
    return rank


def span_rank(partitions, n: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> int:
    """Rank over the rationals of the flattened maps of a family of
    partitions with a common shape.

    Every map is flattened to a vector over all (upper, lower) multi-index
    pairs.  Duplicate coordinates never change the rank, so equal columns are
    collapsed before the exact elimination.
    """
    ps = list(partitions)
    if not ps:
        return 0
    k, l = ps[0].k, ps[0].l
    if any(p.k != k or p.l != l for p in ps):
        raise ValueError("partitions must share one (k, l) shape")
    total = n ** (k + l)
    if total > max_entries:
        raise CapExceeded(f"vectors with {total} entries exceed the cap of {max_entries}")
    vectors = np.zeros((len(ps), total), dtype=np.int8)
    for row, p in enumerate(ps):
        col = 0
        for upper in itertools.product(range(1, n + 1), repeat=k):
            for lower in itertools.product(range(1, n + 1), repeat=l):
                if _indicator_unchecked(p, upper, lower):
                    vectors[row, col] = 1
                col += 1
    reduced = np.unique(vectors, axis=1)
    return _exact_rank(reduced.tolist())
