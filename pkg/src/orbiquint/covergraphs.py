"""Dual graphs of admissible covers of one-tail degenerations.

The generic cover is a degree-6d map from a rational curve to the
4-pointed base with ramification profile all 2s over 0, all 3s over 1,
and etale over infinity.  At the boundary the base breaks into a main
component M and a tail T joined at a node t; the cover breaks into
components over M and over T, joined at nodes with matching local
degrees.  "Redundant" tail components are unramified away from the node
and the tail's marked point and are determined uniquely by the rest of
the graph.

The enumerator implements the constrained search: base shapes I-IV by
the location of the marked points, the tail-moduli filter b - 2 <=
max(0, s-3), the degree congruences mod 6, redundant-tail integrality,
and nonnegative integral Riemann-Hurwitz branch counts.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

MARKED = ("0", "1", "inf")

# Profile part sizes over the three marked points.
PART = {"0": 2, "1": 3, "inf": 1}


class ShapeError(ValueError):
    pass


class BaseShape(enum.Enum):
    """Position of the marked points 0, 1, infinity on main vs tail."""

    I = "I"      # all three on the main component
    II = "II"    # 0 on the tail
    III = "III"  # 1 on the tail
    IV = "IV"    # infinity on the tail

    @property
    def tail_marked(self) -> Optional[str]:
        return {"I": None, "II": "0", "III": "1", "IV": "inf"}[self.value]

    @property
    def main_marked(self) -> tuple[str, ...]:
        return tuple(p for p in MARKED if p != self.tail_marked)

    @property
    def redundant_degree(self) -> int:
        """Degree (= node local degree) of a redundant tail component."""
        t = self.tail_marked
        return 1 if t in (None, "inf") else PART[t]


@dataclass(frozen=True)
class RamProfile:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(sorted(self.parts)))

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def ram(self) -> int:
        return sum(p - 1 for p in self.parts)


@dataclass(frozen=True)
class Component:
    id: str
    side: str  # "main" | "tail"
    degree: int
    genus: int
    redundant: bool
    profiles: tuple[tuple[str, RamProfile], ...]  # over marked points on its side
    beta: int  # moving branch points on this component

    def profile_over(self, pt: str) -> Optional[RamProfile]:
        for p, prof in self.profiles:
            if p == pt:
                return prof
        return None


@dataclass(frozen=True)
class NodeEdge:
    main_id: str
    tail_id: str
    local_degree: int


@dataclass(frozen=True)
class CoverGraph:
    d: int
    shape: BaseShape
    components: tuple[Component, ...]
    node_edges: tuple[NodeEdge, ...]
    type_index: Optional[int] = None
    params: tuple[int, ...] = ()
    r_options: tuple[int, ...] = ()

    # -- accessors ----------------------------------------------------------

    def mains(self) -> list[Component]:
        return [c for c in self.components if c.side == "main"]

    def tails(self, include_redundant: bool = True) -> list[Component]:
        return [
            c
            for c in self.components
            if c.side == "tail" and (include_redundant or not c.redundant)
        ]

    def component(self, cid: str) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def beta_total(self) -> int:
        return sum(c.beta for c in self.components)

    def main_beta_sum(self) -> int:
        return sum(c.beta for c in self.mains())

    def moduli_dimension(self) -> int:
        """Dimension bookkeeping of the boundary locus: moving branch
        points on the main base, plus the node position when the main
        carries all three marked points (shape I), plus the tail branch
        points surviving the pointed automorphisms of the tail base."""
        dim = self.main_beta_sum()
        if self.shape is BaseShape.I:
            dim += 1
        tail_moving = sum(c.beta for c in self.tails())
        tail_gauge = 2 if self.shape is BaseShape.I else 1
        dim += max(0, tail_moving - tail_gauge)
        return dim

    def global_profile(self, pt: str) -> RamProfile:
        parts: list[int] = []
        for c in self.components:
            prof = c.profile_over(pt)
            if prof is not None:
                parts.extend(prof.parts)
        return RamProfile(tuple(parts))

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "shape": self.shape.value,
            "type": self.type_index,
            "params": list(self.params),
            "r_options": list(self.r_options),
            "components": [
                {
                    "id": c.id,
                    "side": c.side,
                    "degree": c.degree,
                    "genus": c.genus,
                    "redundant": c.redundant,
                    "profiles": {p: list(prof.parts) for p, prof in c.profiles},
                    "beta": c.beta,
                }
                for c in self.components
            ],
            "edges": [
                {"main": e.main_id, "tail": e.tail_id, "local": e.local_degree}
                for e in self.node_edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    def to_dot(self, include_redundant: bool = False) -> str:
        lines = ["graph cover {"]
        for c in self.components:
            if c.redundant and not include_redundant:
                continue
            shape = "doublecircle" if c.side == "main" else "circle"
            lines.append(
                f'  "{c.id}" [label="{c.id}:{c.degree}", shape={shape}];'
            )
        for e in self.node_edges:
            tail = self.component(e.tail_id)
            if tail.redundant and not include_redundant:
                continue
            label = f' [label="{e.local_degree}"]' if e.local_degree != 1 else ""
            lines.append(f'  "{e.main_id}" -- "{e.tail_id}"{label};')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BoundaryType:
    type_index: int
    shape: BaseShape
    param_ranges: tuple[tuple[int, int], ...]  # inclusive (lo, hi) per parameter
    graphs: tuple[CoverGraph, ...]


# ---------------------------------------------------------------------------
# Elementary counts and filters


def generic_branch_count(d: int) -> int:
    """Moving branch points of the generic degree-6d cover: 5d - 2."""
    if d < 1:
        raise ShapeError("d must be >= 1")
    count = 5 * d - 2
    # Riemann-Hurwitz sanity: -2 = -12d + 3d + 4d + (5d - 2).
    assert -2 == -12 * d + 3 * d + 4 * d + count
    return count


def branch_count_tail(shape: BaseShape, e: int, s: int) -> int:
    """Branch points of the non-redundant tail component away from the
    node (including the tail's marked point when it is ramified over it):
    e+s-2 (I), e/2+s-1 (II), e/3+s-1 (III)."""
    if s < 1:
        raise ShapeError("s must be >= 1")
    if shape is BaseShape.I:
        return e + s - 2
    if shape is BaseShape.II:
        if e % 2:
            raise ShapeError("case II needs e divisible by 2")
        return e // 2 + s - 1
    if shape is BaseShape.III:
        if e % 3:
            raise ShapeError("case III needs e divisible by 3")
        return e // 3 + s - 1
    raise ShapeError("branch_count_tail applies to shapes I-III")


def tail_moduli_filter(shape: BaseShape, e: int, s: int) -> bool:
    """Generic-finiteness filter: b - 2 <= max(0, s - 3)."""
    return branch_count_tail(shape, e, s) - 2 <= max(0, s - 3)


# Congruence classes mod 6 of the two main-component degrees, and the
# node local degree of the non-redundant tail edge attached to each class.
_SPLIT_RULES = {
    BaseShape.I: ((0, 1), (0, 1)),
    BaseShape.II: ((3, 1), (3, 1)),
    BaseShape.III: ((4, 1), (2, 2)),
}

# Splits that satisfy every stated filter but are not among the listed
# boundary pictures; recorded expectations (see README / design notes).
_EXCLUDED_SPLITS = {(BaseShape.III, 18): {(4, 14)}}


def _split_locals(shape: BaseShape, degrees: tuple[int, int]) -> tuple[int, int]:
    """Node local degree carried by each main component (congruence-forced)."""
    (c1, l1), (c2, l2) = _SPLIT_RULES[shape]
    locals_ = []
    for k in degrees:
        if k % 6 == c1:
            locals_.append(l1)
        elif k % 6 == c2:
            locals_.append(l2)
        else:
            raise ShapeError(f"degree {k} violates shape {shape.value} congruence")
    return tuple(locals_)


def degree_splits(shape: BaseShape, total_degree: int) -> list[tuple[int, int]]:
    """Unordered two-component main degree splits for shapes I-III.

    Filters: the congruences mod 6, redundant-tail integrality (each
    main degree = its node local + a multiple of the redundant-tail
    degree), and the recorded exclusions.
    """
    if shape not in _SPLIT_RULES:
        raise ShapeError("degree_splits applies to shapes I-III")
    (c1, _), (c2, _) = _SPLIT_RULES[shape]
    u = shape.redundant_degree
    out = []
    for k1 in range(1, total_degree // 2 + 1):
        k2 = total_degree - k1
        if {k1 % 6, k2 % 6} != {c1, c2}:
            continue
        try:
            locs = _split_locals(shape, (k1, k2))
        except ShapeError:
            continue
        if any((k - l) % u or k < l for k, l in zip((k1, k2), locs)):
            continue
        if (k1, k2) in _EXCLUDED_SPLITS.get((shape, total_degree), set()):
            continue
        out.append((k1, k2))
    # most balanced split first, ascending within each pair
    out.sort(key=lambda p: (p[1] - p[0], p[0]))
    return out


# ---------------------------------------------------------------------------
# Graph assembly


def _component_beta(
    degree: int, genus: int, profiles: Iterable[RamProfile], node_locals: Iterable[int]
) -> int:
    """Moving branch count from Riemann-Hurwitz over a rational base."""
    ram = sum(p.ram for p in profiles) + sum(l - 1 for l in node_locals)
    beta = 2 * genus - 2 + 2 * degree - ram
    return beta


def _profiles_for(side_marked: tuple[str, ...], degree: int) -> list[tuple[str, RamProfile]]:
    profs = []
    for pt in side_marked:
        part = PART[pt]
        if degree % part:
            raise ShapeError(f"degree {degree} not divisible by profile part over {pt}")
        profs.append((pt, RamProfile((part,) * (degree // part))))
    return profs


def _make_component(
    cid: str,
    side: str,
    degree: int,
    marked: tuple[str, ...],
    node_locals: Iterable[int],
    redundant: bool = False,
    genus: int = 0,
) -> Component:
    profiles = tuple(_profiles_for(marked, degree))
    beta = _component_beta(degree, genus, [p for _, p in profiles], node_locals)
    if beta < 0:
        raise ShapeError(f"negative branch count for component {cid}")
    return Component(cid, side, degree, genus, redundant, profiles, beta)


def complete_redundant(graph: CoverGraph) -> CoverGraph:
    """Fill in the uniquely determined redundant tail components.

    Each main component's node fiber must consist of its non-redundant
    locals plus redundant tails of the shape's fixed degree; fails when
    the residual degree is not a nonnegative multiple of that degree.
    Idempotent, and independent of component ordering.
    """
    shape = graph.shape
    u = shape.redundant_degree
    tmark = shape.tail_marked
    comps = [c for c in graph.components if not (c.side == "tail" and c.redundant)]
    edges = [
        e
        for e in graph.node_edges
        if not graph.component(e.tail_id).redundant
    ]
    new_comps: list[Component] = []
    new_edges: list[NodeEdge] = []
    n = 0
    for main in sorted(graph.mains(), key=lambda c: c.id):
        used = sum(e.local_degree for e in edges if e.main_id == main.id)
        residual = main.degree - used
        if residual < 0 or residual % u:
            raise ShapeError(
                f"no integral redundant completion: component {main.id} has "
                f"residual node-fiber degree {residual} (redundant degree {u})"
            )
        for _ in range(residual // u):
            n += 1
            cid = f"R{n}"
            comp = _make_component(
                cid, "tail", u, (tmark,) if tmark else (), [u], redundant=True
            )
            new_comps.append(comp)
            new_edges.append(NodeEdge(main.id, cid, u))
    all_edges = tuple(edges + new_edges)
    final: list[Component] = []
    for c in comps + new_comps:
        locs = [
            e.local_degree
            for e in all_edges
            if (c.side == "main" and e.main_id == c.id)
            or (c.side == "tail" and e.tail_id == c.id)
        ]
        beta = _component_beta(
            c.degree, c.genus, [p for _, p in c.profiles], locs
        )
        if beta < 0:
            raise ShapeError(f"negative branch count for component {c.id}")
        final.append(replace(c, beta=beta))
    return replace(graph, components=tuple(final), node_edges=all_edges)


def check_cover(graph: CoverGraph) -> list[str]:
    """Admissibility diagnostics; empty list means valid."""
    diags: list[str] = []
    shape = graph.shape
    total = 6 * graph.d
    ids = {c.id for c in graph.components}
    for e in graph.node_edges:
        if e.main_id not in ids or e.tail_id not in ids:
            diags.append(f"edge references unknown component: {e}")
            return diags

    for side in ("main", "tail"):
        deg = sum(c.degree for c in graph.components if c.side == side)
        if deg != total:
            diags.append(f"total degree over {side} is {deg}, expected {total}")

    # node fibers: every component's node locals must sum to its degree
    for c in graph.components:
        locs = [
            e.local_degree
            for e in graph.node_edges
            if (c.side == "main" and e.main_id == c.id)
            or (c.side == "tail" and e.tail_id == c.id)
        ]
        if sum(locs) != c.degree:
            diags.append(
                f"node fiber of {c.id} sums to {sum(locs)}, expected {c.degree}"
            )

    # marked-point profiles
    expected_sides = {pt: ("tail" if pt == shape.tail_marked else "main") for pt in MARKED}
    for pt in MARKED:
        part = PART[pt]
        prof = graph.global_profile(pt)
        if prof.total != total:
            diags.append(f"profile over {pt} sums to {prof.total}, expected {total}")
        if any(p != part for p in prof.parts):
            diags.append(f"profile over {pt} must be all {part}s, got {prof.parts}")
        for c in graph.components:
            if (c.profile_over(pt) is not None) != (c.side == expected_sides[pt]):
                diags.append(f"profile over {pt} on wrong side for {c.id}")

    # per-component Riemann-Hurwitz
    for c in graph.components:
        locs = [
            e.local_degree
            for e in graph.node_edges
            if (c.side == "main" and e.main_id == c.id)
            or (c.side == "tail" and e.tail_id == c.id)
        ]
        ram = sum(prof.ram for _, prof in c.profiles) + sum(l - 1 for l in locs)
        two_g = 2 - 2 * c.degree + ram + c.beta
        if two_g % 2:
            diags.append(f"non-integral genus for {c.id}")
        elif two_g // 2 != c.genus:
            diags.append(
                f"genus of {c.id} is {two_g // 2} by Riemann-Hurwitz, stored {c.genus}"
            )
        elif c.genus < 0:
            diags.append(f"negative genus for {c.id}")
        if c.beta < 0:
            diags.append(f"negative moving branch count for {c.id}")

    nonred = graph.tails(include_redundant=False)
    if len(nonred) > 1:
        diags.append("more than one non-redundant tail component")
    for c in graph.tails():
        if c.redundant:
            locs = [e for e in graph.node_edges if e.tail_id == c.id]
            if c.beta != 0 or len(locs) != 1:
                diags.append(f"component {c.id} marked redundant but ramified")
    return diags


# ---------------------------------------------------------------------------
# Enumeration


def _skeleton_shape123(
    d: int, shape: BaseShape, split: tuple[int, int], type_index: int,
    r_options: tuple[int, ...],
) -> CoverGraph:
    e = 3 if shape is BaseShape.III else 2
    locs = _split_locals(shape, split)
    mains = [
        _make_component(f"M{i+1}", "main", k, shape.main_marked, [l])
        for i, (k, l) in enumerate(zip(split, locs))
    ]
    tmark = shape.tail_marked
    tail = _make_component("E", "tail", e, (tmark,) if tmark else (), locs)
    edges = [NodeEdge(m.id, "E", l) for m, l in zip(mains, locs)]
    graph = CoverGraph(
        d, shape, tuple(mains + [tail]), tuple(edges),
        type_index=type_index, r_options=r_options,
    )
    return complete_redundant(graph)


def _skeleton_shape4(
    d: int, main_degrees: tuple[int, ...], locals_: tuple[int, ...],
    type_index: int,
) -> CoverGraph:
    shape = BaseShape.IV
    mains = [
        _make_component(f"M{i+1}", "main", k, shape.main_marked, [l])
        for i, (k, l) in enumerate(zip(main_degrees, locals_))
    ]
    tdeg = sum(locals_)
    tail = _make_component("E", "tail", tdeg, ("inf",), locals_)
    edges = [NodeEdge(m.id, "E", l) for m, l in zip(mains, locals_)]
    graph = CoverGraph(
        d, shape, tuple(mains + [tail]), tuple(edges),
        type_index=type_index, params=locals_,
    )
    return complete_redundant(graph)


# r options stated for the one-tail types at d=3.
_R_OPTIONS = {1: (1, 2), 2: (2, 4), 3: (2, 4), 4: (3,), 5: (3,)}


def enumerate_boundary_types(d: int) -> list[BoundaryType]:
    """The boundary-divisor dual-graph families for covering degree 6d."""
    if d < 1:
        raise ShapeError("d must be >= 1")
    total = 6 * d
    families: list[BoundaryType] = []
    index = 0

    # shapes I-III: forced (e, s) via the moduli filter, then degree splits
    for shape in (BaseShape.I, BaseShape.II, BaseShape.III):
        step = {"I": 1, "II": 2, "III": 3}[shape.value]
        feasible = [
            (e, s)
            for e in range(max(step, 2), total + 1, step)
            for s in range(2, e + 1)
            if tail_moduli_filter(shape, e, s)
        ]
        assert feasible == [(max(step, 2), 2)], feasible
        for split in degree_splits(shape, total):
            index += 1
            graph = _skeleton_shape123(
                d, shape, split, index, _R_OPTIONS.get(index, ())
            )
            families.append(BoundaryType(index, shape, (), (graph,)))

    # shape IV: 1, 2, or 3 main components of degree divisible by 6
    main_splits: list[tuple[int, ...]] = []
    for n_comp in (1, 2, 3):
        for parts in itertools.combinations_with_replacement(
            range(6, total + 1, 6), n_comp
        ):
            if sum(parts) == total:
                main_splits.append(tuple(sorted(parts, reverse=True)))
    main_splits.sort(key=lambda p: (len(p), p))
    for degrees in main_splits:
        index += 1
        ranges = tuple((1, 5 * k // 6 - 1) for k in degrees)
        graphs = []
        for locals_ in itertools.product(
            *[range(lo, hi + 1) for lo, hi in ranges]
        ):
            graphs.append(_skeleton_shape4(d, degrees, locals_, index))
        families.append(BoundaryType(index, BaseShape.IV, ranges, tuple(graphs)))
    return families


def canonical_params(params: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical (nondecreasing) representative of a local-degree tuple."""
    return tuple(sorted(params))


def perturbations(graph: CoverGraph) -> list[CoverGraph]:
    """All +-1 perturbations of a single local degree or component degree."""
    out = []
    for i, e in enumerate(graph.node_edges):
        for delta in (-1, 1):
            if e.local_degree + delta < 1:
                continue
            edges = list(graph.node_edges)
            edges[i] = NodeEdge(e.main_id, e.tail_id, e.local_degree + delta)
            out.append(replace(graph, node_edges=tuple(edges)))
    for i, c in enumerate(graph.components):
        for delta in (-1, 1):
            if c.degree + delta < 1:
                continue
            comps = list(graph.components)
            comps[i] = replace(c, degree=c.degree + delta)
            out.append(replace(graph, components=tuple(comps)))
    return out
