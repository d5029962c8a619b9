"""Combinatorial types of planar Steiner trees on labeled terminals.

A type is an abstract tree on terminal ids 1..n plus Steiner ids, with a
counterclockwise cyclic neighbor order stored per vertex. Terminals are
labeled, Steiner vertices are interchangeable. Mirror images (all cyclic
orders reversed) are distinct values with distinct canonical codes; the
enumerators return one representative orientation per abstract tree and
`orientation_variants` expands the rest on demand.
"""

import functools
import itertools
import json
import os
from dataclasses import dataclass

from .errors import DegenerateInput, LimitExceeded

DEFAULT_CAP = 8


def type_cap() -> int:
    """Enumeration cap on n; the STEINER_TYPE_CAP env var overrides the default 8."""
    raw = os.environ.get("STEINER_TYPE_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise DegenerateInput(f"STEINER_TYPE_CAP must be an integer, got {raw!r}")


@dataclass
class CombinatorialType:
    """Labeled tree with a ccw cyclic neighbor order at every vertex.

    Treat instances as immutable; enumerators may hand out shared objects.
    """

    n_terminals: int
    adjacency: dict[int, tuple[int, ...]]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def steiner_ids(self) -> tuple[int, ...]:
        return tuple(v for v in sorted(self.adjacency) if v > self.n_terminals)

    @property
    def is_full(self) -> bool:
        n = self.n_terminals
        if n == 2:
            return len(self.adjacency) == 2
        return all(self.degree(i) == 1 for i in range(1, n + 1)) and len(
            self.steiner_ids
        ) == n - 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v, nbrs in self.adjacency.items():
            for w in nbrs:
                if v < w:
                    out.append((v, w))
        out.sort()
        return out

    def validate(self) -> None:
        """Raise DegenerateInput if the tree/degree/planarity invariants fail."""
        n = self.n_terminals
        if n < 2:
            raise DegenerateInput("a type needs at least 2 terminals")
        verts = set(self.adjacency)
        if set(range(1, n + 1)) - verts:
            raise DegenerateInput("missing terminal vertices")
        for v, nbrs in self.adjacency.items():
            if len(set(nbrs)) != len(nbrs):
                raise DegenerateInput(f"repeated neighbor at vertex {v}")
            for w in nbrs:
                if w not in verts or v not in self.adjacency[w]:
                    raise DegenerateInput(f"asymmetric adjacency at edge ({v},{w})")
        n_edges = sum(len(x) for x in self.adjacency.values()) // 2
        if n_edges != len(verts) - 1:
            raise DegenerateInput("edge count does not match a tree")
        # connectivity
        seen = {1}
        stack = [1]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != verts:
            raise DegenerateInput("graph is not connected")
        steiner = [v for v in verts if v > n]
        if len(steiner) > n - 2 and n >= 2:
            raise DegenerateInput("more than n-2 Steiner vertices")
        for v in steiner:
            if self.degree(v) != 3:
                raise DegenerateInput(f"Steiner vertex {v} has degree {self.degree(v)} != 3")
        for v in range(1, n + 1):
            if not 1 <= self.degree(v) <= 3:
                raise DegenerateInput(f"terminal {v} has degree {self.degree(v)}")

    def to_json(self) -> dict:
        return {
            "n": self.n_terminals,
            "steiner": len(self.steiner_ids),
            "edges": [list(e) for e in self.edges()],
            "cyclic": {str(v): list(nbrs) for v, nbrs in sorted(self.adjacency.items())},
        }

    @staticmethod
    def from_json(obj: dict) -> "CombinatorialType":
        adj = {int(v): tuple(int(w) for w in nbrs) for v, nbrs in obj["cyclic"].items()}
        t = CombinatorialType(int(obj["n"]), adj)
        t.validate()
        if {tuple(sorted(e)) for e in obj.get("edges", t.edges())} != set(t.edges()):
            raise DegenerateInput("edge list disagrees with cyclic adjacency")
        return t


def canonical_code(t: CombinatorialType) -> bytes:
    """Canonical byte string: equal iff the types are isomorphic under a
    terminal-label-preserving, cyclic-order-preserving map (Steiner ids free).
    """
    adj = t.adjacency
    n = t.n_terminals

    def enc(v: int, parent: int) -> str:
        nbrs = adj[v]
        i = nbrs.index(parent)
        children = nbrs[i + 1 :] + nbrs[:i]
        label = str(v) if v <= n else "s"
        if not children:
            return label
        return label + "(" + ",".join(enc(c, v) for c in children) + ")"

    root_nbrs = adj[1]
    best = None
    for k in range(len(root_nbrs)):
        rot = root_nbrs[k:] + root_nbrs[:k]
        code = "1(" + ",".join(enc(c, 1) for c in rot) + ")"
        if best is None or code < best:
            best = code
    return best.encode("ascii")


def mirrored(t: CombinatorialType) -> CombinatorialType:
    """Mirror image: every cyclic order reversed."""
    return CombinatorialType(
        t.n_terminals, {v: tuple(reversed(nbrs)) for v, nbrs in t.adjacency.items()}
    )


def orientation_variants(t: CombinatorialType) -> list[CombinatorialType]:
    """All cyclic-order assignments at degree-3 vertices (2^k planar variants).

    Degree-1 and degree-2 vertices admit a single cyclic order, so flipping
    the degree-3 vertices covers every plane embedding of the abstract tree.
    """
    flippable = [v for v in sorted(t.adjacency) if len(t.adjacency[v]) == 3]
    out = []
    for mask in itertools.product((False, True), repeat=len(flippable)):
        adj = dict(t.adjacency)
        for v, flip in zip(flippable, mask):
            if flip:
                adj[v] = tuple(reversed(adj[v]))
        out.append(CombinatorialType(t.n_terminals, adj))
    return out


def _double_factorial_cap_check(n: int, cap: int | None) -> None:
    limit = type_cap() if cap is None else cap
    if n > limit:
        raise LimitExceeded(f"n={n} exceeds the type enumeration cap {limit}")


def _relabel_steiner(n: int, adjacency: dict[int, tuple[int, ...]]) -> dict[int, tuple[int, ...]]:
    """Renumber Steiner vertices to n+1.. in BFS-from-terminal-1 discovery order."""
    mapping: dict[int, int] = {}
    nxt = n + 1
    seen = {1}
    queue = [1]
    while queue:
        v = queue.pop(0)
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
                if w > n or w < 0:
                    mapping[w] = nxt
                    nxt += 1
    def m(v: int) -> int:
        return mapping.get(v, v)
    return {m(v): tuple(m(w) for w in nbrs) for v, nbrs in adjacency.items()}


def _full_adjacencies(terminals: tuple[int, ...]) -> list[dict[int, tuple[int, ...]]]:
    """Full topologies on the given labeled terminals via edge splitting.

    Inserting terminal k+1 into each of the 2k-3 edges of every topology on
    k terminals yields the (2m-5)!! full topologies. Steiner vertices get
    temporary negative ids; callers relabel.
    """
    m = len(terminals)
    a, b = terminals[0], terminals[1]
    tops: list[dict[int, tuple[int, ...]]] = [{a: (b,), b: (a,)}]
    next_steiner = -1
    for k in range(2, m):
        t_new = terminals[k]
        grown: list[dict[int, tuple[int, ...]]] = []
        for adj in tops:
            edges = sorted(
                (v, w) for v, nbrs in adj.items() for w in nbrs if v < w
            )
            for u, v in edges:
                s = next_steiner
                new = dict(adj)
                new[u] = tuple(s if x == v else x for x in new[u])
                new[v] = tuple(s if x == u else x for x in new[v])
                new[s] = (u, v, t_new)
                new[t_new] = (s,)
                grown.append(new)
        next_steiner -= 1
        tops = grown
    return tops


@functools.lru_cache(maxsize=32)
def _enumerate_full_cached(n: int) -> tuple[CombinatorialType, ...]:
    out = []
    for adj in _full_adjacencies(tuple(range(1, n + 1))):
        t = CombinatorialType(n, _relabel_steiner(n, adj))
        t.validate()
        out.append(t)
    return tuple(out)


def enumerate_full_types(n: int, cap: int | None = None) -> list[CombinatorialType]:
    """All full types on terminals 1..n, one orientation per abstract tree."""
    if n < 3:
        raise DegenerateInput("full type enumeration needs n >= 3")
    _double_factorial_cap_check(n, cap)
    return list(_enumerate_full_cached(n))


def _covers(n: int) -> list[frozenset[frozenset[int]]]:
    """Connected covers of 1..n by terminal subsets gluing into a tree.

    Each cover is a set of components; a new component shares exactly one
    already-covered terminal (more would close a loop), every terminal lies
    in at most 3 components, and sum(|S|-1) = n-1 holds by construction.
    """
    all_terms = frozenset(range(1, n + 1))
    results: list[frozenset[frozenset[int]]] = []
    seen: set[frozenset[frozenset[int]]] = set()
    frontier: list[frozenset[frozenset[int]]] = []
    others = sorted(all_terms - {1})
    for r in range(1, n):
        for extra in itertools.combinations(others, r):
            state = frozenset([frozenset((1,) + extra)])
            frontier.append(state)
            seen.add(state)
    while frontier:
        state = frontier.pop()
        covered = frozenset().union(*state)
        if covered == all_terms:
            results.append(state)
            continue
        uncovered = sorted(all_terms - covered)
        attach_ok = [
            t for t in sorted(covered) if sum(t in c for c in state) < 3
        ]
        for t in attach_ok:
            for r in range(1, len(uncovered) + 1):
                for extra in itertools.combinations(uncovered, r):
                    comp = frozenset((t,) + extra)
                    nxt = state | {comp}
                    if nxt not in seen:
                        seen.add(nxt)
                        frontier.append(nxt)
    return results


@functools.lru_cache(maxsize=32)
def _enumerate_all_cached(n: int) -> tuple[CombinatorialType, ...]:
    out: list[CombinatorialType] = []
    codes: set[bytes] = set()
    for cover in sorted(
        _covers(n), key=lambda c: sorted((min(s), tuple(sorted(s))) for s in c)
    ):
        comps = sorted(cover, key=lambda s: (min(s), tuple(sorted(s))))
        choices = [_full_adjacencies(tuple(sorted(s))) for s in comps]
        for combo in itertools.product(*choices):
            adj: dict[int, list[int]] = {}
            shift = 0
            for part in combo:
                # give this component's temporary Steiner ids a private range
                ren = {v: v - shift if v < 0 else v for v in part}
                shift += sum(1 for v in part if v < 0)
                for v, nbrs in part.items():
                    adj.setdefault(ren[v], [])
                    adj[ren[v]].extend(ren.get(w, w) for w in nbrs)
            merged = {v: tuple(nbrs) for v, nbrs in adj.items()}
            t = CombinatorialType(n, _relabel_steiner(n, merged))
            t.validate()
            code = canonical_code(t)
            if code in codes:
                continue
            codes.add(code)
            out.append(t)
    out.sort(key=canonical_code)
    return tuple(out)


def enumerate_types(n: int, cap: int | None = None) -> list[CombinatorialType]:
    """All types (full and degenerate) on terminals 1..n, canonical orientations."""
    if n < 2:
        raise DegenerateInput("type enumeration needs n >= 2")
    _double_factorial_cap_check(n, cap)
    return list(_enumerate_all_cached(n))


@dataclass
class ComponentPiece:
    """One full component of a decomposition, relabeled to local ids 1..m."""

    type: CombinatorialType
    terminal_ids: tuple[int, ...]  # local terminal i+1 -> parent vertex id
    steiner_ids: tuple[int, ...]  # local Steiner m+j -> parent vertex id


@dataclass
class FullComponentDecomposition:
    components: list[ComponentPiece]
    shared_terminals: dict[int, list[int]]  # parent terminal id -> component indices


def full_components(t: CombinatorialType) -> FullComponentDecomposition:
    """Split a type at every terminal of degree >= 2 into maximal full subtypes."""
    n = t.n_terminals
    cut = {v for v in range(1, n + 1) if t.degree(v) >= 2}
    edges = t.edges()
    parent = list(range(len(edges)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    incident: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        for x in (u, v):
            if x not in cut:
                incident.setdefault(x, []).append(i)
    for group in incident.values():
        for i in group[1:]:
            parent[find(i)] = find(group[0])

    groups: dict[int, list[int]] = {}
    for i in range(len(edges)):
        groups.setdefault(find(i), []).append(i)

    pieces: list[ComponentPiece] = []
    shared: dict[int, list[int]] = {}
    for root in sorted(groups, key=lambda r: min(groups[r])):
        idxs = groups[root]
        verts = sorted({x for i in idxs for x in edges[i]})
        terms = [v for v in verts if v <= n]
        steiner = [v for v in verts if v > n]
        local = {v: i + 1 for i, v in enumerate(terms)}
        local.update({v: len(terms) + j + 1 for j, v in enumerate(steiner)})
        edge_set = {edges[i] for i in idxs}
        adj: dict[int, tuple[int, ...]] = {}
        for v in verts:
            kept = tuple(
                local[w] for w in t.adjacency[v] if (min(v, w), max(v, w)) in edge_set
            )
            adj[local[v]] = kept
        sub = CombinatorialType(len(terms), adj)
        sub.validate()
        if not sub.is_full:
            raise DegenerateInput("component decomposition produced a non-full piece")
        pieces.append(ComponentPiece(sub, tuple(terms), tuple(steiner)))
    for ci, piece in enumerate(pieces):
        for v in piece.terminal_ids:
            if v in cut:
                shared.setdefault(v, []).append(ci)
    return FullComponentDecomposition(pieces, shared)


def reglue(decomp: FullComponentDecomposition, n: int) -> CombinatorialType:
    """Reassemble a decomposition into a type on the parent ids (round-trip check)."""
    adj: dict[int, list[int]] = {}
    for piece in pieces_sorted(decomp):
        back = {i + 1: pid for i, pid in enumerate(piece.terminal_ids)}
        m = len(piece.terminal_ids)
        back.update({m + j + 1: pid for j, pid in enumerate(piece.steiner_ids)})
        for v, nbrs in piece.type.adjacency.items():
            adj.setdefault(back[v], [])
            adj[back[v]].extend(back[w] for w in nbrs)
    merged = {v: tuple(nbrs) for v, nbrs in adj.items()}
    t = CombinatorialType(n, _relabel_steiner(n, merged))
    t.validate()
    return t


def pieces_sorted(decomp: FullComponentDecomposition) -> list[ComponentPiece]:
    return sorted(decomp.components, key=lambda p: p.terminal_ids)


def type_from_json_str(s: str) -> CombinatorialType:
    return CombinatorialType.from_json(json.loads(s))
