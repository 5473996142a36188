"""Hirzebruch-Jung resolution chains and blow-down of curve configurations.

The central objects are CurveConfig dual graphs: vertices are curves on a
smooth surface (components of the fiber over 0, the directrix sigma, and
the main curve C) labeled by self-intersection, edges are intersection
points labeled by the local intersection multiplicity (an edge of
multiplicity k is a single k-fold contact; parallel unit edges are
distinct transverse points).

contract_minus_ones blows down exceptional (-1)-curves.  The arithmetic
is done at the level of intersection points: blowing down v merges all
points on v into one image point, each surviving branch pair gaining
d*e contact (d, e the branches' contacts with v), while distinct
branches stay distinct (this is what produces the tangency cells in the
golden diagrams).  Eligible vertices are the (-1)-vertices other than
the main curve; among them the one with the smallest total intersection
with the main curve is contracted first (ties broken by position along
the chain, reading from the directrix end).
Free choice among all (-1)-vertices is genuinely not confluent, so the
selection rule is part of the contraction's definition; with it the
choice is unique at every step of the thirteen golden diagrams.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, gcd
from typing import Iterable, Optional, Sequence, Union

from .orbiscroll import CQSData as CQS
from .orbiscroll import FracLike, coarse_singularities, frac


class ResolveError(ValueError):
    """Structured domain error for resolution/genus computations."""


# ---------------------------------------------------------------------------
# Hirzebruch-Jung chains


@dataclass(frozen=True)
class Chain:
    """Self-intersection chain b_1..b_k of a minimal CQS resolution."""

    ints: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b < 2 for b in self.ints):
            raise ResolveError("chain entries must all be >= 2")


def hj_expand(r: int, q: int) -> Chain:
    """The chain with r/q = b1 - 1/(b2 - 1/(...)), all bi >= 2."""
    if r == 1 and q == 0:
        return Chain(())
    if not (0 < q < r):
        raise ResolveError(f"need 0 < q < r, got ({r}, {q})")
    if gcd(r, q) != 1:
        raise ResolveError(f"({r}, {q}) not coprime")
    ints = []
    while q > 0:
        b = -(-r // q)  # ceil(r/q)
        ints.append(b)
        r, q = q, b * q - r
    return Chain(tuple(ints))


def hj_reconstruct(chain: Chain | Sequence[int]) -> tuple[int, int]:
    """Inverse of hj_expand; the empty chain is the smooth marker (1, 0)."""
    ints = chain.ints if isinstance(chain, Chain) else tuple(chain)
    if any(b < 2 for b in ints):
        raise ResolveError("chain entries must all be >= 2")
    r, q = 1, 0
    for b in reversed(ints):
        r, q = b * r - q, r
    return r, q


# ---------------------------------------------------------------------------
# Curve configurations


class Role(enum.Enum):
    FIBER = "FiberComponent"
    DIRECTRIX = "Directrix"
    MAIN = "MainCurve"


@dataclass(frozen=True)
class Vertex:
    id: str
    self_int: int
    role: Role


@dataclass(frozen=True)
class Edge:
    v: str
    w: str
    mult: int


@dataclass
class CurveConfig:
    """Dual graph of a curve configuration; edges form a multiset."""

    vertices: list[Vertex] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)

    def __post_init__(self) -> None:
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise ResolveError("duplicate vertex ids")
        for role in (Role.DIRECTRIX, Role.MAIN):
            if sum(1 for v in self.vertices if v.role is role) > 1:
                raise ResolveError(f"at most one {role.value} vertex")
        idset = set(ids)
        for e in self.edges:
            if e.v == e.w:
                raise ResolveError("self-loops are not allowed")
            if e.mult < 1:
                raise ResolveError("edge multiplicities must be >= 1")
            if e.v not in idset or e.w not in idset:
                raise ResolveError(f"edge references unknown vertex: {e}")

    def vertex(self, vid: str) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    # -- serialization ------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"v {v.id} {v.self_int} {v.role.value}" for v in self.vertices]
        for e in sorted(self.edges, key=lambda e: (e.v, e.w, e.mult)):
            lines.append(f"e {e.v} {e.w} {e.mult}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CurveConfig":
        vertices, edges = [], []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "v" and len(parts) == 4:
                vertices.append(Vertex(parts[1], int(parts[2]), Role(parts[3])))
            elif parts[0] == "e" and len(parts) == 4:
                edges.append(Edge(parts[1], parts[2], int(parts[3])))
            else:
                raise ResolveError(f"bad config line: {line!r}")
        return cls(vertices, edges)

    def to_dot(self) -> str:
        lines = ["graph config {"]
        for v in self.vertices:
            shape = {"Directrix": "box", "MainCurve": "doublecircle"}.get(
                v.role.value, "circle"
            )
            lines.append(
                f'  "{v.id}" [label="{v.id} ({v.self_int})", shape={shape}];'
            )
        for e in sorted(self.edges, key=lambda e: (e.v, e.w, e.mult)):
            label = f' [label="{e.mult}"]' if e.mult != 1 else ""
            lines.append(f'  "{e.v}" -- "{e.w}"{label};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def config_isomorphic(c1: CurveConfig, c2: CurveConfig) -> bool:
    """Graph isomorphism respecting roles, self-intersections, and edge
    multiplicity multisets.  Brute force; configs here are tiny."""
    if len(c1.vertices) != len(c2.vertices) or len(c1.edges) != len(c2.edges):
        return False

    def sig(v: Vertex) -> tuple:
        return (v.role.value, v.self_int)

    if sorted(map(sig, c1.vertices)) != sorted(map(sig, c2.vertices)):
        return False

    def edge_multiset(c: CurveConfig, mapping: dict[str, str]) -> list:
        return sorted(
            (*sorted((mapping.get(e.v, e.v), mapping.get(e.w, e.w))), e.mult)
            for e in c.edges
        )

    target = edge_multiset(c2, {})
    ids2 = [v.id for v in c2.vertices]
    for perm in itertools.permutations(ids2):
        mapping = {}
        ok = True
        for v1, id2 in zip(c1.vertices, perm):
            if sig(v1) != sig(c2.vertex(id2)):
                ok = False
                break
            mapping[v1.id] = id2
        if ok and edge_multiset(c1, mapping) == target:
            return True
    return False


# ---------------------------------------------------------------------------
# Building the resolved central-fiber configuration

AttachSpec = Sequence[tuple[str, int]]


def build_coarse_fiber_config(
    r: int, a: FracLike, attach_spec: AttachSpec = ()
) -> CurveConfig:
    """Central fiber of the minimal resolution of the coarse scroll F_a.

    Vertices: directrix "sigma" (self-int -ceil(a)), the sigma-side
    Hirzebruch-Jung chain "s1".. (resolution chain read from sigma
    toward the fiber: hj_expand(r, (-ra) mod r)), the fiber proper
    transform "F" (-1), the tau-side chain "t1".. (hj_expand(r, ra mod
    r), read from F outward), and, when attach_spec is nonempty, the
    main curve "C" attached at the listed (vertex, multiplicity) points
    (repeated entries are distinct transverse points; multiplicity k > 1
    is a single k-fold tangency).  For r = 1 (or integral a) the fiber
    is the single 0-vertex.
    """
    a = frac(a)
    sings = coarse_singularities(r, a)
    vertices: list[Vertex] = []
    edges: list[Edge] = []

    if sings.at_sigma.smooth and sings.at_tau.smooth:
        vertices.append(Vertex("F", 0, Role.FIBER))
    else:
        ra = (r * a).numerator
        schain = hj_expand(r, (-ra) % r).ints
        tchain = hj_expand(r, ra % r).ints
        vertices.append(Vertex("sigma", -ceil(a), Role.DIRECTRIX))
        path = ["sigma"]
        for i, b in enumerate(schain, 1):
            vertices.append(Vertex(f"s{i}", -b, Role.FIBER))
            path.append(f"s{i}")
        vertices.append(Vertex("F", -1, Role.FIBER))
        path.append("F")
        for i, b in enumerate(tchain, 1):
            vertices.append(Vertex(f"t{i}", -b, Role.FIBER))
            path.append(f"t{i}")
        edges.extend(Edge(v, w, 1) for v, w in zip(path, path[1:]))

    if attach_spec:
        vertices.append(Vertex("C", 0, Role.MAIN))
        known = {v.id for v in vertices}
        for target, mult in attach_spec:
            if target not in known:
                raise ResolveError(f"attach_spec references unknown vertex {target!r}")
            edges.append(Edge("C", target, mult))
    return CurveConfig(vertices, edges)


# ---------------------------------------------------------------------------
# Blow-down

class _Point:
    """An intersection point: branches (curve ids, one entry per branch)
    and pairwise contact orders between branches."""

    __slots__ = ("branches", "contacts")

    def __init__(self) -> None:
        self.branches: list[str] = []
        self.contacts: dict[tuple[int, int], int] = {}

    def add_edge(self, v: str, w: str, mult: int) -> None:
        i, j = len(self.branches), len(self.branches) + 1
        self.branches += [v, w]
        self.contacts[(i, j)] = mult

    def contact(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.contacts.get((i, j), 0)


def contract_minus_ones(config: CurveConfig) -> CurveConfig:
    """Repeatedly blow down eligible (-1)-curves until none remain.

    Eligible: self-intersection -1, role Directrix or FiberComponent.
    The main curve is never contracted; if it is the unique (-1)-vertex
    the configuration is already final.  Selection among eligible
    vertices: minimal total intersection with the main curve, then
    position along the resolution chain from the directrix end (encoded
    in the canonical vertex ids sigma, s1.., F, t1..), so the result is
    independent of the presentation order of vertices and edges.  The
    main curve's self-intersection entry is not tracked (the source
    diagrams never label it); it stays as given.
    """

    def chain_rank(vid: str) -> tuple:
        m = re.fullmatch(r"(sigma|s|F|t)(\d*)", vid)
        if not m:
            return (4, 0, vid)
        group = {"sigma": 0, "s": 1, "F": 2, "t": 3}[m.group(1)]
        return (group, int(m.group(2) or 0), vid)

    order = {v.id: i for i, v in enumerate(config.vertices)}
    self_int = {v.id: v.self_int for v in config.vertices}
    role = {v.id: v.role for v in config.vertices}
    main = next((v.id for v in config.vertices if v.role is Role.MAIN), None)

    points: list[_Point] = []
    for e in config.edges:
        p = _Point()
        p.add_edge(e.v, e.w, e.mult)
        points.append(p)

    def main_contact(vid: str) -> int:
        if main is None:
            return 0
        total = 0
        for p in points:
            for i, b in enumerate(p.branches):
                if b != vid:
                    continue
                for j, c in enumerate(p.branches):
                    if c == main:
                        total += p.contact(i, j)
        return total

    alive = [v.id for v in config.vertices]
    while True:
        eligible = [
            vid
            for vid in alive
            if self_int[vid] == -1 and role[vid] is not Role.MAIN
        ]
        if not eligible:
            break
        vid = min(eligible, key=lambda u: (main_contact(u), chain_rank(u)))

        on_v = [p for p in points if vid in p.branches]
        points = [p for p in points if vid not in p.branches]

        # Image point: all non-v branches survive; each gains d*e contact
        # with every other (d, e their contacts with v), on top of any
        # contact they already had at the same source point.
        new = _Point()
        src: list[tuple[_Point, int]] = []  # (source point, source branch idx)
        vcontact: list[int] = []
        for p in on_v:
            vidx = [i for i, b in enumerate(p.branches) if b == vid]
            for i, b in enumerate(p.branches):
                if b == vid:
                    continue
                new.branches.append(b)
                src.append((p, i))
                vcontact.append(sum(p.contact(i, k) for k in vidx))
        for i in range(len(new.branches)):
            for j in range(i + 1, len(new.branches)):
                pi, bi = src[i]
                pj, bj = src[j]
                existing = pi.contact(bi, bj) if pi is pj else 0
                c = existing + vcontact[i] * vcontact[j]
                if c:
                    new.contacts[(i, j)] = c
        # total intersection of each neighbor with v, for self-int updates
        totals: dict[str, int] = {}
        for b, c in zip(new.branches, vcontact):
            totals[b] = totals.get(b, 0) + c
        for b, d in totals.items():
            if role[b] is not Role.MAIN:
                self_int[b] += d * d
        if len(new.branches) >= 2 and new.contacts:
            points.append(new)
        alive.remove(vid)

    vertices = [
        Vertex(vid, self_int[vid], role[vid]) for vid in alive
    ]
    edges = []
    for p in points:
        for (i, j), c in sorted(p.contacts.items()):
            b1, b2 = p.branches[i], p.branches[j]
            if b1 == b2:
                continue  # self-contact of one curve: not a drawn edge
            v, w = sorted((b1, b2), key=lambda u: order[u])
            edges.append(Edge(v, w, c))
    return CurveConfig(vertices, edges)


# ---------------------------------------------------------------------------
# A_k singularities and genus arithmetic


@dataclass(frozen=True)
class AkSing:
    """A_k curve singularity germ; A_{-1} is a smooth unramified double
    point datum and A_0 a smooth ramified one."""

    k: int

    def __post_init__(self) -> None:
        if self.k < -1:
            raise ResolveError("k must be >= -1")


def delta_invariant(sing: AkSing | int) -> int:
    """delta(A_k) = ceil(k/2); zero for the degenerate labels A_{-1}, A_0."""
    k = sing.k if isinstance(sing, AkSing) else AkSing(k=sing).k
    if k <= 0:
        return 0
    return (k + 1) // 2


def pa_hirzebruch(l: int, n: int, m: int) -> int:
    """Arithmetic genus of a curve in |n sigma + m F| on the Hirzebruch
    surface F_l: (n-1)(m-1) - l n(n-1)/2."""
    if l < 0 or n < 0:
        raise ResolveError("need l, n >= 0")
    return (n - 1) * (m - 1) - l * n * (n - 1) // 2


def geometric_genus(pa: int, sings: Iterable[AkSing | int]) -> int:
    """pa minus the total delta invariant of the imposed singularities."""
    g = pa - sum(delta_invariant(s) for s in sings)
    if g < 0:
        raise ResolveError(f"negative geometric genus {g}")
    return g


def genus_rh(deg: int, base_genus: int, ram_total: int) -> int:
    """Genus from Riemann-Hurwitz: 2g - 2 = deg(2 base_genus - 2) + ram."""
    if ram_total < 0:
        raise ResolveError("ramification total must be >= 0")
    two_g = deg * (2 * base_genus - 2) + ram_total + 2
    if two_g % 2 != 0:
        raise ResolveError(f"non-integral genus: 2g = {two_g}")
    g = two_g // 2
    if g < 0:
        raise ResolveError(f"negative genus {g}")
    return g


# ---------------------------------------------------------------------------
# The 13 resolution-contraction diagram items


@dataclass(frozen=True)
class DiagramItem:
    """Left-hand side of a resolution-contraction diagram: the central
    fiber of the resolved coarse scroll F_a over P^1(r-th root of 0),
    with the main curve attached at the listed (vertex, multiplicity)
    points."""

    r: int
    a: Fraction
    attach: tuple[tuple[str, int], ...]

    def build(self) -> CurveConfig:
        return build_coarse_fiber_config(self.r, self.a, self.attach)

    def contract(self) -> CurveConfig:
        return contract_minus_ones(self.build())


DIAGRAM_ITEMS: dict[int, DiagramItem] = {
    1: DiagramItem(2, Fraction(1, 2), (("F", 1), ("F", 1))),
    2: DiagramItem(2, Fraction(1, 2), (("s1", 1), ("F", 1), ("t1", 1))),
    3: DiagramItem(2, Fraction(1, 2), (("sigma", 1), ("F", 1), ("F", 1))),
    4: DiagramItem(2, Fraction(1, 2), (("s1", 1), ("F", 1), ("t1", 1), ("sigma", 1))),
    5: DiagramItem(3, Fraction(1, 3), (("s1", 1), ("F", 1))),
    6: DiagramItem(3, Fraction(1, 3), (("sigma", 1), ("F", 1), ("t1", 1))),
    7: DiagramItem(3, Fraction(2, 3), (("F", 1), ("t2", 1))),
    8: DiagramItem(3, Fraction(2, 3), (("s1", 1), ("F", 1))),
    9: DiagramItem(4, Fraction(1, 4), (("sigma", 1), ("F", 1))),
    10: DiagramItem(4, Fraction(3, 4), (("F", 1),)),
    11: DiagramItem(2, Fraction(3, 2), (("F", 1), ("t1", 1))),
    12: DiagramItem(3, Fraction(4, 3), (("F", 1),)),
    13: DiagramItem(3, Fraction(5, 3), (("F", 1),)),
}
