"""Commuting graphs with centralizer-class compression.

Vertices are the non-central elements of a group; two distinct vertices are
adjacent iff they commute.  Elements sharing a centralizer pairwise commute
(each lies in the other's centralizer), so the graph is a blow-up of its
quotient by centralizer-equality classes: BFS runs on the class graph and
distances lift back losslessly, with the one special case that two distinct
elements of the same class are at distance 1.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .errors import EmptyGraph, NotAVertex
from .groups import GroupHandle, center


@dataclass
class DistanceReport:
    source: object
    target: object
    distance: int | float
    path: list = field(default_factory=list)


class CommutingGraph:
    """Quotient-compressed commuting graph of a materialized group."""

    def __init__(self, group: GroupHandle, classes, class_of, adjacency):
        self.group = group
        self.classes = classes          # list of element lists
        self.class_of = class_of        # element -> class index
        self.adjacency = adjacency     # class index -> sorted list of class indices
        self.reps = [cls[0] for cls in classes]

    @property
    def vertex_count(self) -> int:
        return sum(len(c) for c in self.classes)

    def class_index(self, x) -> int:
        try:
            return self.class_of[x]
        except KeyError:
            raise NotAVertex(f"{x!r} is not a vertex (central or not a member)") from None

    def adjacent(self, x, y) -> bool:
        """The adjacency rule: distinct commuting non-central elements."""
        cx, cy = self.class_index(x), self.class_index(y)
        if x == y:
            return False
        return cx == cy or cy in self.adjacency[cx]

    def to_json(self) -> dict:
        res = diameter_and_components(self)
        diam = res["diameter"]
        return {
            "classes": [
                {"size": len(cls), "rep": rep.to_json()}
                for cls, rep in zip(self.classes, self.reps)
            ],
            "edges": [[i, j] for i in range(len(self.classes)) for j in self.adjacency[i] if i < j],
            "diameter": None if diam == math.inf else diam,
            "components": len(res["components"]),
        }


def build_graph(G: GroupHandle) -> CommutingGraph:
    """Group the non-central elements by centralizer equality and link classes."""
    G.materialize()
    elems = G.elements
    central = center(G).member_set
    vertices = [g for g in elems if g not in central]
    if not vertices:
        raise EmptyGraph("every element is central")

    cent_of = {}
    for v in vertices:
        cent_of[v] = frozenset(i for i, g in enumerate(elems) if g * v == v * g)
    buckets: dict[frozenset, list] = {}
    for v in vertices:
        buckets.setdefault(cent_of[v], []).append(v)

    classes = sorted(
        (sorted(members, key=lambda e: e.key()) for members in buckets.values()),
        key=lambda cls: cls[0].key(),
    )
    class_of = {v: i for i, cls in enumerate(classes) for v in cls}
    adjacency = []
    reps = [cls[0] for cls in classes]
    rep_idx = [G.index_of(r) for r in reps]
    for i, r in enumerate(reps):
        cent = cent_of[r]
        adjacency.append(sorted(j for j in range(len(classes)) if j != i and rep_idx[j] in cent))
    return CommutingGraph(G, classes, class_of, adjacency)


def _class_bfs(graph: CommutingGraph, start: int):
    """Distances and BFS parents from one class over the class graph."""
    dist = {start: 0}
    parent = {start: None}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for n in graph.adjacency[c]:
            if n not in dist:
                dist[n] = dist[c] + 1
                parent[n] = c
                queue.append(n)
    return dist, parent


def distance(graph: CommutingGraph, x, y) -> DistanceReport:
    """BFS distance between two vertices, with a commuting witness path."""
    cx, cy = graph.class_index(x), graph.class_index(y)
    if x == y:
        return DistanceReport(x, y, 0, [x])
    if cx == cy or cy in graph.adjacency[cx]:
        # same centralizer class, or adjacent classes: the elements commute
        return DistanceReport(x, y, 1, [x, y])
    dist, parent = _class_bfs(graph, cx)
    if cy not in dist:
        return DistanceReport(x, y, math.inf, [])
    chain = []
    c = cy
    while c is not None:
        chain.append(c)
        c = parent[c]
    chain.reverse()
    path = [x] + [graph.reps[c] for c in chain[1:-1]] + [y]
    return DistanceReport(x, y, dist[cy], path)


def diameter_and_components(graph: CommutingGraph) -> dict:
    """Connected components (as class-index sets) and the diameter.

    The diameter is the maximum finite class eccentricity when the graph is
    connected and Infinity otherwise; a lone class of size >= 2 still has
    internal diameter 1.
    """
    n = len(graph.classes)
    unseen = set(range(n))
    components = []
    while unseen:
        start = min(unseen)
        dist, _ = _class_bfs(graph, start)
        comp = sorted(dist)
        components.append(comp)
        unseen -= set(comp)
    if len(components) > 1:
        return {"components": components, "diameter": math.inf}
    diam = 0
    for c in range(n):
        dist, _ = _class_bfs(graph, c)
        ecc = max(dist.values())
        diam = max(diam, ecc)
    if diam == 0 and graph.vertex_count > 1:
        diam = 1
    return {"components": components, "diameter": diam}
