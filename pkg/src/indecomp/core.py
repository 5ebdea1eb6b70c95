"""Bit-matrix digraphs with four-valued pair types.

A digraph lives on vertices 0..n-1 with arcs as ordered pairs of distinct
vertices (no loops).  Every ordered pair (x, y) carries one of four relation
types: forward arc only, backward arc only, both arcs (mutual), or no arc
(absent).  Nearly every algorithm in this package looks at pairs only through
that lens, so the representation keeps two bit matrices (out-rows and in-rows
as python ints): pair-type lookup is O(1) and homogeneity of a vertex against
a whole set is a couple of word operations.
"""

from __future__ import annotations

import itertools
from enum import IntEnum
from typing import Iterable, Iterator, Optional, Sequence


class DigraphError(ValueError):
    """Bad construction input (vertex out of range, loop arc, ...)."""


class DgFormatError(DigraphError):
    """Malformed .dg text."""


class CanonicalBoundError(DigraphError):
    """canonical_code called above its configured order bound."""


class PairType(IntEnum):
    """Relation of an ordered pair (x, y)."""

    ABSENT = 0    # no arc either way
    FORWARD = 1   # arc (x, y) only
    BACKWARD = 2  # arc (y, x) only
    MUTUAL = 3    # both arcs

    def reverse(self) -> "PairType":
        """Type of (y, x) given the type of (x, y)."""
        if self is PairType.FORWARD:
            return PairType.BACKWARD
        if self is PairType.BACKWARD:
            return PairType.FORWARD
        return self


FORWARD = PairType.FORWARD
BACKWARD = PairType.BACKWARD
MUTUAL = PairType.MUTUAL
ABSENT = PairType.ABSENT


class Digraph:
    """Immutable digraph on vertices 0..n-1 backed by two bit matrices.

    out_rows[i] has bit j set iff the arc (i, j) is present; in_rows[i] has
    bit j set iff (j, i) is present.  Instances hash and compare by the
    labelled arc set, not up to isomorphism.
    """

    __slots__ = ("n", "out_rows", "in_rows", "_canon", "_types")

    def __init__(self, n: int, out_rows: Sequence[int]):
        self.n = n
        self.out_rows = tuple(out_rows)
        in_rows = [0] * n
        for i, row in enumerate(self.out_rows):
            j = row
            while j:
                low = j & -j
                in_rows[low.bit_length() - 1] |= 1 << i
                j ^= low
        self.in_rows = tuple(in_rows)
        self._canon: Optional[bytes] = None
        self._types: Optional[list] = None

    # -- basics ------------------------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    def has_arc(self, x: int, y: int) -> bool:
        return bool(self.out_rows[x] >> y & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for x in range(self.n):
            row = self.out_rows[x]
            for y in range(self.n):
                if row >> y & 1:
                    yield (x, y)

    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.out_rows)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.out_rows == other.out_rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.out_rows))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs())})"

    def type_matrix(self) -> list:
        """n x n list of PairType values (diagonal ABSENT, never read)."""
        if self._types is None:
            n = self.n
            out = self.out_rows
            inn = self.in_rows
            mat = []
            for x in range(n):
                ox, ix = out[x], inn[x]
                mat.append(
                    [((ox >> y & 1) | ((ix >> y & 1) << 1)) for y in range(n)]
                )
            self._types = mat
        return self._types


def make_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph, validating every arc."""
    if n < 0:
        raise DigraphError(f"negative order {n}")
    rows = [0] * n
    for x, y in arcs:
        if not (0 <= x < n and 0 <= y < n):
            raise DigraphError(f"arc ({x}, {y}) out of range for order {n}")
        if x == y:
            raise DigraphError(f"loop arc ({x}, {y}) not allowed")
        rows[x] |= 1 << y
    return Digraph(n, rows)


def from_pair_types(n: int, types) -> Digraph:
    """Build from a mapping {(x, y): PairType} over pairs with x < y.

    Pairs missing from the mapping are ABSENT.
    """
    rows = [0] * n
    for (x, y), t in types.items():
        if not (0 <= x < y < n):
            raise DigraphError(f"pair ({x}, {y}) must satisfy x < y < n")
        t = PairType(t)
        if t is PairType.FORWARD or t is PairType.MUTUAL:
            rows[x] |= 1 << y
        if t is PairType.BACKWARD or t is PairType.MUTUAL:
            rows[y] |= 1 << x
    return Digraph(n, rows)


# -- pair relations ---------------------------------------------------------


def pair_type(g: Digraph, x: int, y: int) -> PairType:
    """Relation of the ordered pair (x, y)."""
    if x == y:
        raise DigraphError("pair_type needs two distinct vertices")
    a = g.out_rows[x] >> y & 1
    b = g.in_rows[x] >> y & 1
    return PairType(a | (b << 1))


def pairs_equivalent(
    g: Digraph, p: tuple[int, int], q: tuple[int, int]
) -> bool:
    """True iff the two ordered pairs carry the same relation type."""
    return pair_type(g, *p) == pair_type(g, *q)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def homogeneous(g: Digraph, x: int, ys: Iterable[int]) -> bool:
    """True iff every ordered pair (x, y) for y in ys has one common type."""
    m = mask_of(ys)
    if m >> x & 1:
        raise DigraphError("homogeneous: x must lie outside ys")
    o = g.out_rows[x] & m
    i = g.in_rows[x] & m
    return (o == 0 or o == m) and (i == 0 or i == m)


# -- derived graphs ----------------------------------------------------------


def complement(g: Digraph) -> Digraph:
    """Flip every off-diagonal arc bit."""
    n = g.n
    full = (1 << n) - 1
    return Digraph(n, [(~row & full) & ~(1 << i) for i, row in enumerate(g.out_rows)])


def dual(g: Digraph) -> Digraph:
    """Reverse every arc."""
    return Digraph(g.n, g.in_rows)


def induced(g: Digraph, vertices: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Induced subgraph on the given vertices, relabelled densely.

    Returns (subgraph, originals) where subgraph vertex i corresponds to
    originals[i] (ascending original ids).
    """
    verts = sorted(set(vertices))
    if verts and not (0 <= verts[0] and verts[-1] < g.n):
        raise DigraphError("induced: vertex out of range")
    rows = []
    for v in verts:
        row = 0
        src = g.out_rows[v]
        for j, w in enumerate(verts):
            if src >> w & 1:
                row |= 1 << j
        rows.append(row)
    return Digraph(len(verts), rows), tuple(verts)


def relabel(g: Digraph, perm: Sequence[int]) -> Digraph:
    """Apply a permutation: vertex i of g becomes perm[i] of the result."""
    n = g.n
    if sorted(perm) != list(range(n)):
        raise DigraphError("relabel: not a permutation")
    rows = [0] * n
    for x in range(n):
        src = g.out_rows[x]
        px = perm[x]
        for y in range(n):
            if src >> y & 1:
                rows[px] |= 1 << perm[y]
    return Digraph(n, rows)


# -- isomorphism and canonical codes -----------------------------------------


def _refine_colors(types: list, colors: list) -> list:
    """Iterated invariant refinement of a vertex colouring.

    Each round a vertex's signature is its colour plus the multiset of
    (pair type to w, colour of w); colours are re-ranked by sorted signature.
    Stops at a fixed point.  Deterministic, label-independent.
    """
    n = len(types)
    while True:
        sigs = []
        for v in range(n):
            row = types[v]
            counts: dict = {}
            for w in range(n):
                if w == v:
                    continue
                key = (row[w], colors[w])
                counts[key] = counts.get(key, 0) + 1
            sigs.append((colors[v], tuple(sorted(counts.items()))))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _individualize(colors: list, v: int) -> list:
    c = colors[v]
    return [
        2 * cw + (1 if (cw == c and w != v) else 0)
        for w, cw in enumerate(colors)
    ]


def canonical_code(g: Digraph, *, bound: int = 16) -> bytes:
    """Canonical byte string: equal codes iff the graphs are isomorphic.

    Minimizes the pair-type matrix over vertex orderings consistent with
    iterated profile refinement, branching on still-tied vertices.  The
    search degenerates on highly symmetric inputs, hence the order bound.
    """
    if g.n > bound:
        raise CanonicalBoundError(
            f"canonical_code: order {g.n} above bound {bound}"
        )
    if g._canon is not None:
        return g._canon
    n = g.n
    if n <= 1:
        g._canon = bytes([n])
        return g._canon
    types = g.type_matrix()

    def matrix_bytes(order: Sequence[int]) -> bytes:
        buf = bytearray([n])
        for i in order:
            row = types[i]
            for j in order:
                buf.append(0 if i == j else row[j])
        return bytes(buf)

    offdiag = {types[x][y] for x in range(n) for y in range(n) if x != y}
    if len(offdiag) == 1:
        g._canon = matrix_bytes(range(n))
        return g._canon

    best: Optional[bytes] = None

    def search(colors: list) -> None:
        nonlocal best
        # first colour class (by rank) that is still a tie
        by_color: dict = {}
        for v, c in enumerate(colors):
            by_color.setdefault(c, []).append(v)
        target = None
        for c in sorted(by_color):
            if len(by_color[c]) > 1:
                target = by_color[c]
                break
        if target is None:
            order = sorted(range(n), key=colors.__getitem__)
            cand = matrix_bytes(order)
            if best is None or cand < best:
                best = cand
            return
        for v in target:
            search(_refine_colors(types, _individualize(colors, v)))

    search(_refine_colors(types, [0] * n))
    assert best is not None
    g._canon = best
    return best


def find_isomorphism(g: Digraph, h: Digraph) -> Optional[tuple[int, ...]]:
    """Permutation p with relabel(g, p) == h, or None.

    Backtracking over refinement classes, candidates filtered by per-vertex
    pair-type profiles; the returned witness is re-checked arc for arc.
    """
    if g.n != h.n:
        return None
    n = g.n
    if n == 0:
        return ()
    tg = g.type_matrix()
    th = h.type_matrix()
    cg = _refine_colors(tg, [0] * n)
    ch = _refine_colors(th, [0] * n)
    if sorted(cg) != sorted(ch):
        return None
    cands = {c: [w for w in range(n) if ch[w] == c] for c in set(ch)}
    for c in set(cg):
        if len(cands.get(c, ())) != cg.count(c):
            return None
    order = sorted(range(n), key=lambda v: (len(cands[cg[v]]), cg[v], v))
    mapping = [-1] * n
    used = [False] * n

    def bt(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        tv = tg[v]
        for w in cands[cg[v]]:
            if used[w]:
                continue
            tw = th[w]
            ok = True
            for u in order[:idx]:
                if tv[u] != tw[mapping[u]]:
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if bt(idx + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    if not bt(0):
        return None
    for x in range(n):
        for y in range(n):
            if x != y and tg[x][y] != th[mapping[x]][mapping[y]]:
                return None  # pruning bug guard; never expected
    return tuple(mapping)


# -- text formats -------------------------------------------------------------


def serialize_dg(g: Digraph) -> str:
    """Adjacency-matrix text: order line, then n rows of n '0'/'1' chars."""
    lines = [str(g.n)]
    for x in range(g.n):
        row = g.out_rows[x]
        lines.append("".join("1" if row >> y & 1 else "0" for y in range(g.n)))
    return "\n".join(lines) + "\n"


def parse_dg(text: str) -> Digraph:
    """Inverse of serialize_dg.  Strict: rejects anything off-format."""
    if not text.endswith("\n"):
        raise DgFormatError("missing final newline")
    lines = text.split("\n")[:-1]
    if not lines:
        raise DgFormatError("empty input")
    header = lines[0]
    if not header.isdigit():
        raise DgFormatError(f"malformed header line {header!r}")
    n = int(header)
    body = lines[1:]
    if len(body) != n:
        raise DgFormatError(f"expected {n} rows, got {len(body)}")
    rows = []
    for i, line in enumerate(body):
        if len(line) != n:
            raise DgFormatError(f"row {i}: wrong length {len(line)} (want {n})")
        bad = set(line) - {"0", "1"}
        if bad:
            raise DgFormatError(f"row {i}: invalid characters {sorted(bad)}")
        if line[i] == "1":
            raise DgFormatError(f"row {i}: diagonal bit set")
        rows.append(sum(1 << j for j, ch in enumerate(line) if ch == "1"))
    return Digraph(n, rows)


def to_dot(g: Digraph, name: str = "g") -> str:
    """DOT text: one edge per arc-carrying pair, mutual pairs undirected-styled."""
    out = [f"digraph {name} {{"]
    for v in range(g.n):
        out.append(f"  {v};")
    for x, y in itertools.combinations(range(g.n), 2):
        t = pair_type(g, x, y)
        if t is PairType.FORWARD:
            out.append(f"  {x} -> {y};")
        elif t is PairType.BACKWARD:
            out.append(f"  {y} -> {x};")
        elif t is PairType.MUTUAL:
            out.append(f"  {x} -> {y} [dir=none];")
    out.append("}")
    return "\n".join(out) + "\n"
