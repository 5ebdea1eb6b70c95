"""Generators for the named digraphs and the parametric defect-one families.

Every enumerator returns FamilyMember records: the built graph plus the
claims made for it (which vertex is the unique noncritical one, and what
the pairwise-deletion graph looks like).  In checked mode the claims are
re-verified against the criticality module on construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .core import (
    ABSENT,
    BACKWARD,
    Digraph,
    DigraphError,
    FORWARD,
    MUTUAL,
    PairType,
    canonical_code,
    complement,
    dual,
    from_pair_types,
    make_digraph,
)
from .criticality import (
    ShapeDescriptor,
    critical_vertices,
    indecomposability_graph,
    make_symgraph,
    recognize_shape,
    shape_edges,
    support,
)
from .modular import TheoremViolation, is_indecomposable

# Fixed enumeration orders so that repeated runs list members identically.
ALL_TYPES = (FORWARD, BACKWARD, MUTUAL, ABSENT)
NONEMPTY_TYPES = (FORWARD, BACKWARD, MUTUAL)

TYPE_LETTER = {FORWARD: "F", BACKWARD: "B", MUTUAL: "M", ABSENT: "A"}

# Largest order enum_family_members will expand (canonical codes are exact
# up to this order).
MAX_ENUM_ORDER = 16

FAMILY_T = "gen_T"
FAMILY_U = "gen_U"
FAMILY_V = "gen_V"
FAMILY_R = "gen_R"
FAMILY_H = "gen_H"
FAMILY_Q5 = "gen_Q5"
FAMILY_F = "class_F"
FAMILY_G = "class_G"
FAMILY_GP = "class_Gprime"
FAMILY_GDP = "class_Gdprime"
FAMILY_STAR_ODD = "hstar_odd"
FAMILY_STAR_EVEN = "hstar_even"

# A pair-type assignment maps short labels of the free pairs of a class
# (e.g. "01", "0a") to the PairType realized for that pair.
PairTypeAssignment = dict


@dataclass(frozen=True)
class FamilyMember:
    """A generated graph together with the structural claims made for it.

    claimed_noncritical is the vertex expected to be the only noncritical
    one (None when no claim is made at this order); claimed_shape describes
    the expected pairwise-deletion graph, laid out on literal vertices, so
    shape_edges(claimed_shape) is its exact claimed edge set (every vertex
    outside it is claimed isolated).
    """

    graph: Digraph
    family: str
    params: dict = field(compare=False)
    claimed_noncritical: Optional[int] = None
    claimed_shape: Optional[ShapeDescriptor] = None


def verify_member_claims(member: FamilyMember) -> None:
    """Re-check a member's claims; raises TheoremViolation on mismatch."""
    g = member.graph
    if not is_indecomposable(g):
        raise TheoremViolation(
            "family member is decomposable",
            graph=g,
            context={"family": member.family, "params": member.params},
        )
    if member.claimed_noncritical is not None:
        report = critical_vertices(g)
        if report.noncritical != (member.claimed_noncritical,):
            raise TheoremViolation(
                "claimed noncritical vertex not matched",
                graph=g,
                context={
                    "family": member.family,
                    "params": member.params,
                    "claimed": member.claimed_noncritical,
                    "found": report.noncritical,
                },
            )
    if member.claimed_shape is not None:
        expected = shape_edges(member.claimed_shape)
        ig = indecomposability_graph(g)
        if ig.edges != expected:
            raise TheoremViolation(
                "claimed pairwise-deletion edges not matched",
                graph=g,
                context={
                    "family": member.family,
                    "params": member.params,
                    "claimed": sorted(expected),
                    "found": sorted(ig.edges),
                },
            )
        sup = support(ig)
        got = recognize_shape(ig, restricted_to=sup.component)
        if got != member.claimed_shape:
            raise TheoremViolation(
                "claimed shape not matched",
                graph=g,
                context={
                    "family": member.family,
                    "params": member.params,
                    "claimed": member.claimed_shape,
                    "found": got,
                },
            )


def _shape_of_edges(n: int, edges: Iterable[tuple[int, int]]) -> ShapeDescriptor:
    """Descriptor of the unique nontrivial component laid out by edges."""
    sym = make_symgraph(n, edges)
    comp = support(sym).component
    return recognize_shape(sym, restricted_to=comp)


def _member(
    graph: Digraph,
    family: str,
    params: dict,
    noncritical: Optional[int],
    ig_edges: Optional[list],
    checked: bool,
) -> FamilyMember:
    shape = None
    if ig_edges is not None:
        shape = _shape_of_edges(graph.n, ig_edges)
    member = FamilyMember(
        graph=graph,
        family=family,
        params=params,
        claimed_noncritical=noncritical,
        claimed_shape=shape,
    )
    if checked:
        verify_member_claims(member)
    return member


# -- named graphs -----------------------------------------------------------------


def gen_T(n: int) -> Digraph:
    """Tournament on 2n+1 vertices: two ascending chains 0..n and n+1..2n,
    with {i+1..n} beating i+n+1 beating {0..i}."""
    if n < 2:
        raise DigraphError("gen_T: need n >= 2")
    arcs = []
    for x in range(n + 1):
        for y in range(x + 1, n + 1):
            arcs.append((x, y))
    for x in range(n + 1, 2 * n + 1):
        for y in range(x + 1, 2 * n + 1):
            arcs.append((x, y))
    for i in range(n):
        j = i + n + 1
        for x in range(i + 1, n + 1):
            arcs.append((x, j))
        for y in range(i + 1):
            arcs.append((j, y))
    return make_digraph(2 * n + 1, arcs)


def gen_U(n: int) -> Digraph:
    """Like gen_T but with the second chain reversed (descending)."""
    if n < 2:
        raise DigraphError("gen_U: need n >= 2")
    arcs = []
    for x in range(n + 1):
        for y in range(x + 1, n + 1):
            arcs.append((x, y))
    for x in range(n + 1, 2 * n + 1):
        for y in range(x + 1, 2 * n + 1):
            arcs.append((y, x))
    for i in range(n):
        j = i + n + 1
        for x in range(i + 1, n + 1):
            arcs.append((x, j))
        for y in range(i + 1):
            arcs.append((j, y))
    return make_digraph(2 * n + 1, arcs)


def gen_V(n: int) -> Digraph:
    """Tournament on 2n+1 vertices: ascending chain 0..2n-1 with the odd
    vertices beating 2n and 2n beating the even ones."""
    if n < 2:
        raise DigraphError("gen_V: need n >= 2")
    arcs = []
    for x in range(2 * n):
        for y in range(x + 1, 2 * n):
            arcs.append((x, y))
    for i in range(n):
        arcs.append((2 * i + 1, 2 * n))
        arcs.append((2 * n, 2 * i))
    return make_digraph(2 * n + 1, arcs)


def gen_R(n: int) -> Digraph:
    """Digraph on 2n+1 vertices: odds beat 2n, 2n beats evens, and for
    x < y below 2n there is an arc (x, y) iff x is odd or y is even."""
    if n < 2:
        raise DigraphError("gen_R: need n >= 2")
    arcs = []
    for x in range(2 * n):
        if x % 2 == 1:
            arcs.append((x, 2 * n))
        else:
            arcs.append((2 * n, x))
    for x in range(2 * n):
        for y in range(x + 1, 2 * n):
            if x % 2 == 1 or y % 2 == 0:
                arcs.append((x, y))
    return make_digraph(2 * n + 1, arcs)


def gen_H(p: int) -> Digraph:
    """Digraph on 2p+1 vertices with arcs (x, y) exactly when x < y with x
    even and y odd, or x > y with x and y of the same parity."""
    if p < 1:
        raise DigraphError("gen_H: need p >= 1")
    arcs = []
    for x in range(2 * p + 1):
        for y in range(2 * p + 1):
            if x == y:
                continue
            if x < y and x % 2 == 0 and y % 2 == 1:
                arcs.append((x, y))
            elif x > y and x % 2 == y % 2:
                arcs.append((x, y))
    return make_digraph(2 * p + 1, arcs)


def gen_Q5() -> Digraph:
    """The 5-vertex symmetric boundary example: five mutual pairs around
    vertex 0, with an edgeless pairwise-deletion graph."""
    pairs = [(0, 1), (0, 2), (0, 4), (2, 4), (3, 4)]
    return from_pair_types(5, {p: MUTUAL for p in pairs})


# -- propagation helpers -----------------------------------------------------------


def _put_ordered(rules: dict, u: int, v: int, t: PairType) -> None:
    """Record the type of the ordered pair (u, v), demanding consistency."""
    if u == v:
        raise DigraphError("rule pair with equal endpoints")
    key = (min(u, v), max(u, v))
    val = t if u < v else t.reverse()
    old = rules.get(key)
    if old is not None and old is not val:
        raise DigraphError(f"conflicting rules for pair {key}")
    rules[key] = val


def _path_edges(count: int) -> list:
    return [(i, i + 1) for i in range(count)]


# -- class of path-backbone graphs with the noncritical vertex at an end ------------


def enum_class_F(m: int, ext_size: int, *, checked: bool = False) -> list:
    """Members on 0..m plus ext_size extra vertices, built by the parity
    propagation rule from the free pair types; claims: noncritical vertex m
    (order >= 4) and a path 0-1-...-m with isolated extras (order >= 7)."""
    if m < 2:
        raise DigraphError("enum_class_F: need m >= 2")
    if ext_size not in (0, 1, 2):
        raise DigraphError("enum_class_F: ext_size must be 0, 1 or 2")
    order = m + 1 + ext_size
    alpha, beta = m + 1, m + 2
    out: list = []
    seen: set = set()

    extras: list
    if ext_size == 0:
        extras = [()]
    elif ext_size == 1:
        extras = [(t0a,) for t0a in ALL_TYPES]
    else:
        extras = list(itertools.product(ALL_TYPES, ALL_TYPES, ALL_TYPES))

    for t01, t12, t02 in itertools.product(ALL_TYPES, repeat=3):
        if t01 is t12.reverse():
            continue
        if (t01 is t02) != (ext_size >= 1):
            continue
        for extra in extras:
            if ext_size == 0:
                if t02 is t12 or t12 is t01:
                    continue
            elif ext_size == 1:
                (t0a,) = extra
                if t01 is t12:
                    if t0a not in (MUTUAL, ABSENT):
                        continue
                elif t0a is t01 or t0a is t12:
                    continue
            else:
                t0a, t0b, tba = extra
                if t0a is not t12 or t0b is not t01:
                    continue
                if tba is t12 or t12 is t01:
                    continue

            types: dict = {}
            for x in range(m + 1):
                for y in range(x + 1, m + 1):
                    if x % 2 == 1:
                        types[(x, y)] = t12
                    elif y % 2 == 0:
                        types[(x, y)] = t02
                    else:
                        types[(x, y)] = t01
            labels = {"01": t01, "12": t12, "02": t02}
            if ext_size >= 1:
                t0a = extra[0]
                for i in range(m + 1):
                    types[(i, alpha)] = t12 if i % 2 == 1 else t0a
                labels["0a"] = t0a
            if ext_size == 2:
                _, t0b, tba = extra
                for i in range(m + 1):
                    types[(i, beta)] = t12 if i % 2 == 1 else t0b
                types[(alpha, beta)] = tba.reverse()
                labels["0b"] = t0b
                labels["ba"] = tba

            g = from_pair_types(order, types)
            code = canonical_code(g)
            if code in seen:
                continue
            seen.add(code)
            params = {
                "m": m,
                "ext_size": ext_size,
                "types": {k: TYPE_LETTER[v] for k, v in labels.items()},
            }
            out.append(
                _member(
                    g,
                    FAMILY_F,
                    params,
                    m if order >= 4 else None,
                    _path_edges(m) if order >= 7 else None,
                    checked,
                )
            )
    return out


# -- class of path-backbone graphs, odd noncritical position, odd-length path -------


def enum_class_G(n: int, k: int, with_alpha: bool, *, checked: bool = False) -> list:
    """Members on 0..2n+1 (plus one extra vertex when with_alpha), claims
    at order >= 7: noncritical vertex 2k+1 and the path 0-1-...-2n+1."""
    if n < 1 or not 0 <= k <= n - 1:
        raise DigraphError("enum_class_G: need n >= 1 and 0 <= k <= n-1")
    top = 2 * n + 1
    alpha = 2 * n + 2
    order = 2 * n + 2 + (1 if with_alpha else 0)
    out: list = []
    seen: set = set()

    t02_domain = ALL_TYPES if k >= 1 else (None,)
    t0a_domain = ALL_TYPES if with_alpha else (None,)

    for t01, t12, tn, t02, t0a in itertools.product(
        ALL_TYPES, ALL_TYPES, ALL_TYPES, t02_domain, t0a_domain
    ):
        if t01 is t12.reverse() or t12.reverse() is tn:
            continue
        if (t01 is t12) != with_alpha:
            continue
        # anchor pair (0, 2) as realized on the built graph
        c02 = t02 if k >= 1 else t12
        if not with_alpha:
            if c02 is t12 and tn is t01:
                continue
            if k == 0 and tn is t12:
                continue
            if k == n - 1 and t01 is c02:
                continue
        else:
            if t0a is t12:
                continue
            if c02 is t12 and t12 is tn and t0a not in (MUTUAL, ABSENT):
                continue

        types: dict = {}
        for x in range(top + 1):
            for y in range(x + 1, top + 1):
                if x % 2 == 0 and y % 2 == 1:
                    types[(x, y)] = t01 if x // 2 <= k else tn
                elif x % 2 == 0 and y % 2 == 0:
                    types[(x, y)] = t02 if y // 2 <= k else t12
                else:
                    types[(x, y)] = t12
        labels = {"01": t01, "12": t12, "nn": tn}
        if k >= 1:
            labels["02"] = t02
        if with_alpha:
            for v in range(top + 1):
                if v % 2 == 1:
                    types[(v, alpha)] = t12
                else:
                    types[(v, alpha)] = t0a if v // 2 <= k else t01.reverse()
            labels["0a"] = t0a

        g = from_pair_types(order, types)
        code = canonical_code(g)
        if code in seen:
            continue
        seen.add(code)
        params = {
            "n": n,
            "k": k,
            "with_alpha": with_alpha,
            "types": {kk: TYPE_LETTER[v] for kk, v in labels.items()},
        }
        claim = order >= 7
        out.append(
            _member(
                g,
                FAMILY_G,
                params,
                2 * k + 1 if claim else None,
                _path_edges(top) if claim else None,
                checked,
            )
        )
    return out


# -- class of path-backbone graphs on an even top vertex, no extensions -------------


def enum_class_Gprime(n: int, k: int, *, checked: bool = False) -> list:
    """Members on 0..2n exactly; claims at order >= 7: noncritical vertex
    2k+1 and the full path 0-1-...-2n with nothing isolated."""
    if n < 1 or not 0 <= k <= n - 1:
        raise DigraphError("enum_class_Gprime: need n >= 1 and 0 <= k <= n-1")
    order = 2 * n + 1
    out: list = []
    seen: set = set()

    ta_domain = ALL_TYPES if k >= 1 else (None,)
    tb_domain = ALL_TYPES if k <= n - 2 else (None,)

    for t12, ta, tb, tc in itertools.product(
        ALL_TYPES, ta_domain, tb_domain, ALL_TYPES
    ):
        if t12 is t12.reverse():
            continue
        # anchor pairs (0, 2) and (2n-2, 2n) as realized on the built graph
        c02 = ta if k >= 1 else tc
        cnn = tb if k <= n - 2 else tc
        if tc is t12:
            continue
        if tc is c02 and cnn is c02:
            continue
        if k == 0 and cnn is t12:
            continue
        if k == n - 1 and c02 is t12:
            continue

        types: dict = {}
        for x in range(order):
            for y in range(x + 1, order):
                if x % 2 == 1 or y % 2 == 1:
                    types[(x, y)] = t12
                elif y <= 2 * k:
                    types[(x, y)] = ta
                elif x >= 2 * k + 2:
                    types[(x, y)] = tb
                else:
                    types[(x, y)] = tc
        labels = {"12": t12, "mid": tc}
        if k >= 1:
            labels["low"] = ta
        if k <= n - 2:
            labels["high"] = tb

        g = from_pair_types(order, types)
        code = canonical_code(g)
        if code in seen:
            continue
        seen.add(code)
        params = {
            "n": n,
            "k": k,
            "types": {kk: TYPE_LETTER[v] for kk, v in labels.items()},
        }
        claim = order >= 7
        out.append(
            _member(
                g,
                FAMILY_GP,
                params,
                2 * k + 1 if claim else None,
                _path_edges(2 * n) if claim else None,
                checked,
            )
        )
    return out


# -- class of path-backbone graphs, even noncritical position, with extensions ------


def enum_class_Gdprime(
    n: int, k: int, ext_size: int, *, checked: bool = False
) -> list:
    """Members on 0..2n plus ext_size extra vertices; claims at every
    order: noncritical vertex 2k and the path 0-1-...-2n, extras isolated."""
    if n < 2 or not 1 <= k <= n - 1:
        raise DigraphError("enum_class_Gdprime: need n >= 2 and 1 <= k <= n-1")
    if ext_size not in (0, 1, 2):
        raise DigraphError("enum_class_Gdprime: ext_size must be 0, 1 or 2")
    order = 2 * n + 1 + ext_size
    alpha, beta = 2 * n + 1, 2 * n + 2
    out: list = []
    seen: set = set()

    extras: list
    if ext_size == 0:
        extras = [()]
    elif ext_size == 1:
        extras = [(t0a,) for t0a in ALL_TYPES]
    else:
        extras = list(itertools.product(ALL_TYPES, ALL_TYPES, ALL_TYPES))

    for t01, t12, t02, tn in itertools.product(ALL_TYPES, repeat=4):
        if t01 is t12.reverse() or t12.reverse() is tn:
            continue
        if (t02 is t12) != (ext_size >= 1):
            continue
        for extra in extras:
            if ext_size == 0:
                if t01 is t12 and tn is t12:
                    continue
                if k == 1 and t02 is tn:
                    continue
                if k == n - 1 and t02 is t01:
                    continue
            elif ext_size == 1:
                (t0a,) = extra
                if t0a is t12 or t0a is t12.reverse():
                    continue
            else:
                t0a, t0b, tba = extra
                if t0a is not t12 or t0b is not t12.reverse():
                    continue
                if tba is t0a or t12 is t12.reverse():
                    continue

            types: dict = {}
            for x in range(2 * n + 1):
                for y in range(x + 1, 2 * n + 1):
                    if x % 2 == 0 and y % 2 == 0:
                        types[(x, y)] = t02
                    elif x % 2 == 0 and y % 2 == 1 and y < 2 * k:
                        types[(x, y)] = t01
                    elif x % 2 == 1 and y % 2 == 0 and x > 2 * k:
                        types[(x, y)] = tn
                    else:
                        types[(x, y)] = t12
            labels = {"01": t01, "12": t12, "02": t02, "nn": tn}
            for pos, gamma in enumerate((alpha, beta)[:ext_size]):
                t0g = extra[0] if pos == 0 else extra[1]
                for x in range(2 * n + 1):
                    if x % 2 == 0:
                        types[(x, gamma)] = t0g
                    elif x < 2 * k:
                        types[(x, gamma)] = t12
                    else:
                        types[(x, gamma)] = t12.reverse()
                labels["0a" if pos == 0 else "0b"] = t0g
            if ext_size == 2:
                tba = extra[2]
                types[(alpha, beta)] = tba.reverse()
                labels["ba"] = tba

            g = from_pair_types(order, types)
            code = canonical_code(g)
            if code in seen:
                continue
            seen.add(code)
            params = {
                "n": n,
                "k": k,
                "ext_size": ext_size,
                "types": {kk: TYPE_LETTER[v] for kk, v in labels.items()},
            }
            out.append(
                _member(
                    g,
                    FAMILY_GDP,
                    params,
                    2 * k,
                    _path_edges(2 * n),
                    checked,
                )
            )
    return out


# -- starred-tree classes ------------------------------------------------------------


def _star_layout(branch_lengths: tuple) -> tuple:
    """Vertex indexing for a starred tree: source 0, then each branch laid
    out consecutively.  Returns (idx, order) with idx(branch, pos)."""
    offsets = []
    base = 1
    for length in branch_lengths:
        offsets.append(base)
        base += length

    def idx(branch: int, pos: int) -> int:
        return 0 if pos == 0 else offsets[branch - 1] + pos - 1

    return idx, base


def _star_tree_edges(branch_lengths: tuple, idx) -> list:
    edges = []
    for i, length in enumerate(branch_lengths, start=1):
        for pos in range(length):
            edges.append((idx(i, pos), idx(i, pos + 1)))
    return edges


def enum_Hstar_odd(branch_lengths: Iterable[int], *, checked: bool = False) -> list:
    """Members whose pairwise-deletion graph is claimed to be exactly the
    starred tree on the given profile: one odd branch (listed first, length
    >= 3) and at least two even branches, noncritical source 0."""
    bl = tuple(branch_lengths)
    if len(bl) < 3:
        raise DigraphError("enum_Hstar_odd: need at least 3 branches")
    if bl[0] % 2 == 0 or bl[0] < 3:
        raise DigraphError("enum_Hstar_odd: first branch length must be odd >= 3")
    if any(b % 2 == 1 or b < 2 for b in bl[1:]):
        raise DigraphError("enum_Hstar_odd: other branch lengths must be even >= 2")
    k = len(bl)
    n1 = (bl[0] - 1) // 2
    halves = {i: bl[i - 1] // 2 for i in range(2, k + 1)}
    idx, order = _star_layout(bl)
    tree = _star_tree_edges(bl, idx)
    out: list = []
    seen: set = set()

    for seeds in itertools.product(
        NONEMPTY_TYPES, *([NONEMPTY_TYPES] * (k - 1)), ALL_TYPES
    ):
        t01 = seeds[0]
        ts = {i: seeds[i - 1] for i in range(2, k + 1)}
        ta1 = seeds[k]

        rules: dict = {}
        for l in range(n1 + 1):
            for j in range(l + 1, n1 + 1):
                _put_ordered(rules, idx(1, 2 * l + 1), idx(1, 2 * j + 1), ta1)
        for i in range(2, k + 1):
            ni = halves[i]
            for l in range(ni + 1):
                for j in range(l + 1, ni + 1):
                    _put_ordered(rules, idx(i, 2 * l + 1), idx(i, 2 * j), ts[i])
        for i in range(2, k + 1):
            for j in range(halves[i] + 1):
                for l in range(n1 + 1):
                    _put_ordered(rules, idx(i, 2 * j), idx(1, 2 * l + 1), t01)
        for j in range(n1 + 1):
            for l in range(j, n1 + 1):
                _put_ordered(rules, idx(1, 2 * j), idx(1, 2 * l + 1), t01)

        g = from_pair_types(order, rules)
        code = canonical_code(g)
        if code in seen:
            continue
        seen.add(code)
        params = {
            "branches": list(bl),
            "source_type": TYPE_LETTER[t01],
            "odd_anchor": TYPE_LETTER[ta1],
            "branch_types": [TYPE_LETTER[ts[i]] for i in range(2, k + 1)],
        }
        out.append(_member(g, FAMILY_STAR_ODD, params, 0, tree, checked))
    return out


def enum_Hstar_even(
    branch_lengths: Iterable[int], with_gamma: bool, *, checked: bool = False
) -> list:
    """Members whose pairwise-deletion graph is claimed to be the starred
    tree on the given all-even profile (noncritical source 0), with the
    optional extra vertex isolated."""
    bl = tuple(branch_lengths)
    if len(bl) < 3:
        raise DigraphError("enum_Hstar_even: need at least 3 branches")
    if any(b % 2 == 1 or b < 2 for b in bl):
        raise DigraphError("enum_Hstar_even: branch lengths must be even >= 2")
    k = len(bl)
    idx, base = _star_layout(bl)
    gamma = base if with_gamma else None
    order = base + (1 if with_gamma else 0)
    tree = _star_tree_edges(bl, idx)
    vertices = [(i, p) for i in range(1, k + 1) for p in range(1, bl[i - 1] + 1)]
    out: list = []
    seen: set = set()

    tg_domain = NONEMPTY_TYPES if with_gamma else (None,)
    for seeds in itertools.product(*([NONEMPTY_TYPES] * k), tg_domain):
        ts = {i: seeds[i - 1] for i in range(1, k + 1)}
        tg = seeds[k]

        types: dict = {}
        for i, p in vertices:
            u = idx(i, p)
            # pair with the shared source (position 0, even)
            if p % 2 == 0 and not with_gamma:
                types[(0, u)] = MUTUAL
        for a in range(len(vertices)):
            i, p = vertices[a]
            for b in range(a + 1, len(vertices)):
                j, q = vertices[b]
                u, v = idx(i, p), idx(j, q)
                if p % 2 == 0 and q % 2 == 0 and not with_gamma:
                    types[(u, v)] = MUTUAL
                elif i == j and p % 2 == 1 and q % 2 == 0 and p < q:
                    types[(u, v)] = ts[i]
        if with_gamma:
            types[(0, gamma)] = tg.reverse()
            for i, p in vertices:
                if p % 2 == 0:
                    types[(idx(i, p), gamma)] = tg.reverse()

        g = from_pair_types(order, types)
        code = canonical_code(g)
        if code in seen:
            continue
        seen.add(code)
        params = {
            "branches": list(bl),
            "with_gamma": with_gamma,
            "branch_types": [TYPE_LETTER[ts[i]] for i in range(1, k + 1)],
        }
        if with_gamma:
            params["gamma_type"] = TYPE_LETTER[tg]
        out.append(_member(g, FAMILY_STAR_EVEN, params, 0, tree, checked))
    return out


# -- order-indexed union ---------------------------------------------------------------


def _ascending_partitions(total: int, parts: int, minimum: int) -> Iterator[tuple]:
    """Ascending part lists of a fixed length summing to total."""
    if parts == 1:
        if total >= minimum:
            yield (total,)
        return
    for first in range(minimum, total // parts + 1):
        for rest in _ascending_partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _star_profiles_odd(total: int) -> Iterator[tuple]:
    """Branch profiles (odd first >= 3, ascending evens >= 2) summing to total."""
    if total % 2 == 0:
        return
    for first in range(3, total - 3, 2):
        rest = total - first
        for parts in range(2, rest // 2 + 1):
            for halves in _ascending_partitions(rest // 2, parts, 1):
                yield (first,) + tuple(2 * h for h in halves)


def _star_profiles_even(total: int) -> Iterator[tuple]:
    """Ascending all-even branch profiles (>= 3 branches) summing to total."""
    if total % 2 == 1:
        return
    for parts in range(3, total // 2 + 1):
        for halves in _ascending_partitions(total // 2, parts, 1):
            yield tuple(2 * h for h in halves)


def _closure_variants(g: Digraph) -> list:
    return [
        ("base", g),
        ("complement", complement(g)),
        ("dual", dual(g)),
        ("complement_dual", complement(dual(g))),
    ]


def enum_family_members(order: int, *, checked: bool = False) -> list:
    """Every defect-one graph of the given order, up to isomorphism: the
    union of all generators at matching parameters, closed under complement
    and dual, deduplicated by canonical code."""
    if not 7 <= order <= MAX_ENUM_ORDER:
        raise DigraphError(
            f"enum_family_members: order must be in 7..{MAX_ENUM_ORDER}"
        )
    base: list = []

    if order % 2 == 1:
        p = (order - 1) // 2
        cycle = _path_edges(2 * p) + [(0, 2 * p)]
        base.append(
            _member(gen_H(p), FAMILY_H, {"p": p}, 0, cycle, checked)
        )
        n = (order - 1) // 2
        base.append(
            _member(
                gen_R(n),
                FAMILY_R,
                {"n": n},
                2 * n,
                _path_edges(2 * n - 1),
                checked,
            )
        )

    for ext_size in (0, 1, 2):
        m = order - 1 - ext_size
        if m >= 2:
            base.extend(enum_class_F(m, ext_size, checked=checked))

    for with_alpha in (False, True):
        rem = order - 2 - (1 if with_alpha else 0)
        if rem % 2 == 0 and rem >= 2:
            n = rem // 2
            for k in range(n):
                base.extend(enum_class_G(n, k, with_alpha, checked=checked))

    if order % 2 == 1:
        n = (order - 1) // 2
        for k in range(n):
            base.extend(enum_class_Gprime(n, k, checked=checked))

    for ext_size in (0, 1, 2):
        rem = order - 1 - ext_size
        if rem % 2 == 0 and rem >= 4:
            n = rem // 2
            for k in range(1, n):
                base.extend(enum_class_Gdprime(n, k, ext_size, checked=checked))

    for profile in _star_profiles_odd(order - 1):
        base.extend(enum_Hstar_odd(profile, checked=checked))
    if order % 2 == 1:
        for profile in _star_profiles_even(order - 1):
            base.extend(enum_Hstar_even(profile, False, checked=checked))
    else:
        for profile in _star_profiles_even(order - 2):
            base.extend(enum_Hstar_even(profile, True, checked=checked))

    out: list = []
    seen: set = set()
    for mem in base:
        for variant, graph in _closure_variants(mem.graph):
            code = canonical_code(graph)
            if code in seen:
                continue
            seen.add(code)
            if variant == "base":
                out.append(mem)
            else:
                twin = FamilyMember(
                    graph=graph,
                    family=mem.family,
                    params={**mem.params, "variant": variant},
                    claimed_noncritical=mem.claimed_noncritical,
                    claimed_shape=mem.claimed_shape,
                )
                if checked:
                    verify_member_claims(twin)
                out.append(twin)
    return out
