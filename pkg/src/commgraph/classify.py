"""Frobenius / 2-Frobenius detection and the classification verdict.

A group X with proper nontrivial normal subgroup J is Frobenius with kernel J
iff C_X(j) <= J for every nonidentity j in J.  Frobenius kernels coincide
with the Fitting subgroup, so only J = F(X) needs testing; likewise the
2-Frobenius candidates are K = F(G) and the preimage L of F(G/K).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import build_graph, diameter_and_components
from .groups import (
    GroupHandle,
    SubgroupHandle,
    center,
    fitting_subgroup,
    is_metacyclic,
    is_soluble,
    quotient_group,
)

KIND_HAS_CENTRE = "HasCentre"
KIND_NOT_SOLUBLE = "NotSoluble"
KIND_FROBENIUS = "Frobenius"
KIND_TWO_FROBENIUS = "TwoFrobenius"
KIND_CONNECTED = "ConnectedDiameter"
KIND_DISCONNECTED_OTHER = "DisconnectedOther"


@dataclass
class ClassificationVerdict:
    kind: str
    order: int
    kernel: SubgroupHandle | None = None
    K: SubgroupHandle | None = None
    L: SubgroupHandle | None = None
    diameter: int | None = None
    components: int | None = None
    gk_metacyclic: bool | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "order": self.order}
        if self.kernel is not None:
            out["kernel_order"] = self.kernel.order()
        if self.K is not None:
            out["K_order"] = self.K.order()
        if self.L is not None:
            out["L_order"] = self.L.order()
        if self.diameter is not None:
            out["diameter"] = self.diameter
        if self.components is not None:
            out["components"] = self.components
        if self.gk_metacyclic is not None:
            out["gk_metacyclic"] = self.gk_metacyclic
        return out


def _kernel_condition(members, kernel_set, centralizer_pool) -> bool:
    """C(j) <= kernel for every nonidentity j of the kernel, inside the pool."""
    for j in members:
        if j.is_identity():
            continue
        for g in centralizer_pool:
            if g * j == j * g and g not in kernel_set:
                return False
    return True


def is_frobenius(G: GroupHandle) -> SubgroupHandle | None:
    """The Frobenius kernel F(G) if G is Frobenius, else None."""
    G.materialize()
    J = fitting_subgroup(G)
    if J.is_trivial() or J.order() == G.order():
        return None
    if _kernel_condition(J.members, J.member_set, G.elements):
        return J
    return None


def is_two_frobenius(G: GroupHandle):
    """(K, L) with K = F(G), L the preimage of F(G/K), when G is 2-Frobenius."""
    G.materialize()
    K = fitting_subgroup(G)
    if K.is_trivial() or K.order() == G.order():
        return None
    Q = quotient_group(G, K)
    FQ = fitting_subgroup(Q)
    # g lies in the preimage L iff its image permutation is in F(Q)
    L = SubgroupHandle(G, [g for g in G.elements if Q.project(g) in FQ.member_set])
    if L.order() <= K.order() or L.order() >= G.order():
        return None
    # L Frobenius with kernel K
    if not _kernel_condition(K.members, K.member_set, L.members):
        return None
    # G/K Frobenius with kernel L/K
    image = {Q.project(m) for m in L.members}
    if not _kernel_condition(sorted(image, key=lambda e: e.key()), image, Q.elements):
        return None
    return K, L


def classify_group(G: GroupHandle) -> ClassificationVerdict:
    """Structural verdict for a finite group.

    Priority: HasCentre > NotSoluble > Frobenius > TwoFrobenius > graph
    analysis.  DisconnectedOther is a sentinel that must never fire for a
    soluble trivial-centre group.
    """
    G.materialize()
    order = G.order()
    if not center(G).is_trivial():
        return ClassificationVerdict(KIND_HAS_CENTRE, order)
    if not is_soluble(G):
        return ClassificationVerdict(KIND_NOT_SOLUBLE, order)
    kernel = is_frobenius(G)
    if kernel is not None:
        return ClassificationVerdict(KIND_FROBENIUS, order, kernel=kernel)
    two = is_two_frobenius(G)
    if two is not None:
        K, L = two
        meta = is_metacyclic(quotient_group(G, K))
        return ClassificationVerdict(KIND_TWO_FROBENIUS, order, K=K, L=L, gk_metacyclic=meta)
    graph = build_graph(G)
    res = diameter_and_components(graph)
    ncomp = len(res["components"])
    if res["diameter"] == math.inf:
        return ClassificationVerdict(KIND_DISCONNECTED_OTHER, order, components=ncomp)
    return ClassificationVerdict(
        KIND_CONNECTED, order, diameter=res["diameter"], components=ncomp
    )
