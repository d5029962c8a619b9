"""Unique planar realization of combinatorial types (Melzak construction).

The merge phase collapses cherries (two placed leaves on one Steiner vertex)
into equilateral third points, picking the side from the stored ccw cyclic
order; the reconstruction phase walks the records backwards and places each
Steiner vertex by intersecting a segment with the recorded circumarc.
Realizability of a type at a configuration is exactly "this construction
succeeds", which makes `is_realizable` the membership predicate for the
type's realizability cell.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateInput, NotRealizable
from .geom import (
    GEOM_TOL,
    TWO_PI,
    Arc,
    Point,
    angle_at,
    as_point,
    intersect_segment_arc,
    segments_cross,
    third_equilateral_point,
)
from .topology import CombinatorialType, full_components

ANGLE_TOL = 1e-7
STEINER_ANGLE = 2.0 * math.pi / 3.0

Configuration = tuple[Point, ...]


def make_configuration(points) -> Configuration:
    """Validate and freeze a labeled point configuration (pairwise distinct)."""
    pts = tuple(as_point(p) for p in points)
    if len(pts) < 2:
        raise DegenerateInput("a configuration needs at least 2 points")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if abs(pts[i] - pts[j]) <= GEOM_TOL:
                raise DegenerateInput(f"points {i} and {j} coincide")
    return pts


@dataclass
class RealizedTree:
    """Concrete planar embedding of a type: positions, edges, total length."""

    type_ref: CombinatorialType
    positions: dict[int, Point]
    edges: list[tuple[int, int]]
    total_length: float

    def edge_length(self, e: tuple[int, int]) -> float:
        return abs(self.positions[e[0]] - self.positions[e[1]])

    def terminal_directions(self) -> dict[int, list[Point]]:
        """Outgoing unit vectors from each terminal into the tree."""
        out: dict[int, list[Point]] = {}
        for v in range(1, self.type_ref.n_terminals + 1):
            dirs = []
            for w in self.type_ref.adjacency[v]:
                d = self.positions[w] - self.positions[v]
                dirs.append(d / abs(d))
            out[v] = dirs
        return out

    def to_json(self) -> dict:
        return {
            "type": self.type_ref.to_json(),
            "positions": {str(v): [p.real, p.imag] for v, p in sorted(self.positions.items())},
            "length": self.total_length,
        }


def _cyclic_matches(stored: tuple[int, ...], embedded: list[int]) -> bool:
    k = len(stored)
    return any(tuple(embedded[i:] + embedded[:i]) == stored for i in range(k))


def _check_embedding(t: CombinatorialType, pos: dict[int, Point]) -> None:
    """Validate angles, stored cyclic orders and planarity of an embedding."""
    n = t.n_terminals
    for v, nbrs in t.adjacency.items():
        if len(nbrs) < 2:
            continue
        if v > n:
            for a, b in ((0, 1), (1, 2), (0, 2)):
                ang = angle_at(pos[v], pos[nbrs[a]], pos[nbrs[b]])
                if abs(ang - STEINER_ANGLE) > ANGLE_TOL:
                    raise NotRealizable(f"angle {ang} at Steiner vertex {v}")
        else:
            for i in range(len(nbrs)):
                for j in range(i + 1, len(nbrs)):
                    ang = angle_at(pos[v], pos[nbrs[i]], pos[nbrs[j]])
                    if ang < STEINER_ANGLE - ANGLE_TOL:
                        raise NotRealizable(f"angle {ang} at terminal {v}")
        if len(nbrs) == 3:
            embedded = sorted(nbrs, key=lambda w: cmath.phase(pos[w] - pos[v]))
            if not _cyclic_matches(nbrs, embedded):
                raise NotRealizable(f"embedded cyclic order at {v} differs from stored")
    edges = t.edges()
    for e in edges:
        if abs(pos[e[0]] - pos[e[1]]) <= GEOM_TOL:
            raise NotRealizable(f"collapsed edge {e}")
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            a, b = edges[i], edges[j]
            if set(a) & set(b):
                continue
            if segments_cross(pos[a[0]], pos[a[1]], pos[b[0]], pos[b[1]]):
                raise NotRealizable(f"edges {a} and {b} cross")


def _record_arc(u: Point, v: Point, e: Point) -> Arc:
    """Circumarc of the equilateral triangle (u, v, e) from u to v avoiding e."""
    center = (u + v + e) / 3.0
    radius = abs(u - v) / math.sqrt(3.0)
    tu = cmath.phase(u - center)
    tv = cmath.phase(v - center)
    te = cmath.phase(e - center)
    sweep_uv = (tv - tu) % TWO_PI
    if (te - tu) % TWO_PI < sweep_uv:
        start, sweep = tv, (tu - tv) % TWO_PI
    else:
        start, sweep = tu, sweep_uv
    return Arc(center, radius, start, start + sweep)


def realize_full(t: CombinatorialType, p: Configuration) -> RealizedTree:
    """Realize a full type, or raise NotRealizable.

    The construction is deterministic: the lexicographically smallest
    available cherry is merged first, and the equilateral side comes from
    the cyclic order, so repeated runs are bit-identical.
    """
    if not t.is_full:
        raise DegenerateInput("realize_full requires a full type")
    cfg = make_configuration(p)
    n = t.n_terminals
    if len(cfg) != n:
        raise DegenerateInput(f"type has {n} terminals, configuration has {len(cfg)}")

    placed: dict[int, Point] = {i + 1: cfg[i] for i in range(n)}
    adj: dict[int, list[int]] = {v: list(nbrs) for v, nbrs in t.adjacency.items()}
    next_id = max(adj) + 1
    records = []  # (steiner, u, v, w, pseudo_id, arc)

    while len(adj) > 2:
        best = None
        for s in adj:
            if s in placed:
                continue
            nbrs = adj[s]
            unplaced = [x for x in nbrs if x not in placed]
            if len(unplaced) > 1:
                continue
            for k in range(3):
                u, v, w = nbrs[k], nbrs[(k + 1) % 3], nbrs[(k + 2) % 3]
                if u in placed and v in placed and (not unplaced or w == unplaced[0]):
                    if best is None or (s, u, v) < best[:3]:
                        best = (s, u, v, w)
        if best is None:
            raise NotRealizable("no cherry available (inconsistent full type)")
        s, u, v, w = best
        try:
            e_pos = third_equilateral_point(placed[u], placed[v], "right")
        except DegenerateInput:
            raise NotRealizable("merged points collapsed")
        arc = _record_arc(placed[u], placed[v], e_pos)
        eid = next_id
        next_id += 1
        placed[eid] = e_pos
        adj[w] = [eid if x == s else x for x in adj[w]]
        adj[eid] = [w]
        del adj[u], adj[v], adj[s]
        records.append((s, u, v, w, eid, arc))

    (x, y) = sorted(adj)
    if abs(placed[x] - placed[y]) <= GEOM_TOL:
        raise NotRealizable("backbone collapsed")

    steiner_pos: dict[int, Point] = {}

    def resolve(vid: int) -> Point:
        if vid in steiner_pos:
            return steiner_pos[vid]
        return placed[vid]

    for s, u, v, w, eid, arc in reversed(records):
        anchor = resolve(w)
        e_pos = placed[eid]
        if abs(e_pos - anchor) <= GEOM_TOL:
            raise NotRealizable("degenerate reconstruction segment")
        hits = intersect_segment_arc(e_pos, anchor, arc)
        if len(hits) != 1:
            raise NotRealizable("reconstruction segment misses the arc")
        s_pos = hits[0]
        # the arc endpoints are the merged pair; landing on one collapses an edge
        if abs(s_pos - placed[u]) <= GEOM_TOL or abs(s_pos - placed[v]) <= GEOM_TOL:
            raise NotRealizable("Steiner point collapsed onto a merged leaf")
        if abs(s_pos - anchor) <= GEOM_TOL:
            raise NotRealizable("Steiner point collapsed onto its anchor")
        steiner_pos[s] = s_pos

    positions = {i + 1: cfg[i] for i in range(n)}
    positions.update(steiner_pos)
    _check_embedding(t, positions)
    edges = t.edges()
    total = sum(abs(positions[a] - positions[b]) for a, b in edges)
    return RealizedTree(t, positions, edges, total)


def realize(t: CombinatorialType, p: Configuration) -> RealizedTree:
    """Realize any type by realizing its full components and gluing them.

    Shared terminals must meet every incident edge pair at >= 2*pi/3 (within
    ANGLE_TOL slack), otherwise the glued tree is not locally minimal and the
    type does not realize here.
    """
    cfg = make_configuration(p)
    n = t.n_terminals
    if len(cfg) != n:
        raise DegenerateInput(f"type has {n} terminals, configuration has {len(cfg)}")
    if t.is_full:
        return realize_full(t, cfg)

    decomp = full_components(t)
    positions: dict[int, Point] = {i + 1: cfg[i] for i in range(n)}
    for piece in decomp.components:
        sub_cfg = tuple(cfg[pid - 1] for pid in piece.terminal_ids)
        rt = realize_full(piece.type, sub_cfg)
        m = len(piece.terminal_ids)
        for j, pid in enumerate(piece.steiner_ids):
            positions[pid] = rt.positions[m + j + 1]
    _check_embedding(t, positions)
    edges = t.edges()
    total = sum(abs(positions[a] - positions[b]) for a, b in edges)
    return RealizedTree(t, positions, edges, total)


def is_realizable(t: CombinatorialType, p: Configuration) -> bool:
    """Membership predicate for the realizability cell of t."""
    try:
        realize(t, p)
        return True
    except NotRealizable:
        return False
