"""Finite group backends and generic structure algorithms.

Two element backends: permutations (image arrays) and matrices over GF(p^k)
carrying a Frobenius twist.  Groups are handles around a generating set and
are materialized by breadth-first closure before any structural query runs.
All algorithms here are exhaustive and meant for desk-scale groups.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import (
    BackendMismatch,
    CapExceeded,
    NotMember,
    NotNormal,
)
from .fields import FieldElement, FieldSpec, is_prime, factorize

DEFAULT_GROUP_CAP = 200000


class PermutationElement:
    """A permutation of {0..n-1} stored as its image array."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        self.images = tuple(images)
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {images}")
        self._hash = hash(self.images)

    def __mul__(self, other: "PermutationElement") -> "PermutationElement":
        # (a*b)(i) = a(b(i)): right factor acts first
        a, b = self.images, other.images
        out = PermutationElement.__new__(PermutationElement)
        out.images = tuple(a[j] for j in b)
        out._hash = hash(out.images)
        return out

    def inverse(self) -> "PermutationElement":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return PermutationElement(inv)

    def identity(self) -> "PermutationElement":
        return PermutationElement(range(len(self.images)))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def key(self):
        return self.images

    def ambient(self):
        return ("perm", len(self.images))

    def to_json(self):
        return list(self.images)

    def __eq__(self, other):
        return isinstance(other, PermutationElement) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Perm{self.images}"


class MatrixAutElement:
    """Invertible matrix over GF(p^k) together with a Frobenius twist.

    The twist exponent i stands for the i-th power of the Frobenius
    automorphism of the entry field.  Multiplication follows
    (A, i) * (B, j) = (A * beta^{-i}(B), i + j mod k), which makes
    conjugation by the pure twist element apply beta to matrix entries:
    (B, 0) ^ (1, i) = (beta^i(B), 0).
    """

    __slots__ = ("spec", "mat", "twist", "_hash")

    def __init__(self, spec: FieldSpec, mat, twist: int = 0):
        self.spec = spec
        self.mat = tuple(tuple(row) for row in mat)
        self.twist = twist % spec.k
        self._hash = hash((self.twist, tuple(e.coeffs for row in self.mat for e in row)))

    @property
    def dim(self) -> int:
        return len(self.mat)

    def __mul__(self, other: "MatrixAutElement") -> "MatrixAutElement":
        b = _mat_frob(other.spec, other.mat, -self.twist)
        return MatrixAutElement(
            self.spec, _mat_mul(self.spec, self.mat, b), self.twist + other.twist
        )

    def inverse(self) -> "MatrixAutElement":
        inv = _mat_inv(self.spec, self.mat)
        return MatrixAutElement(self.spec, _mat_frob(self.spec, inv, self.twist), -self.twist)

    def identity(self) -> "MatrixAutElement":
        return MatrixAutElement(self.spec, _mat_identity(self.spec, self.dim), 0)

    def is_identity(self) -> bool:
        if self.twist:
            return False
        one, zero = self.spec.one(), self.spec.zero()
        return all(
            self.mat[i][j] == (one if i == j else zero)
            for i in range(self.dim)
            for j in range(self.dim)
        )

    def key(self):
        return (self.twist,) + tuple(e.coeffs for row in self.mat for e in row)

    def ambient(self):
        return ("mat", self.spec, self.dim)

    def to_json(self):
        return {
            "twist": self.twist,
            "matrix": [[list(e.coeffs) for e in row] for row in self.mat],
        }

    def __eq__(self, other):
        return (
            isinstance(other, MatrixAutElement)
            and self.twist == other.twist
            and self.mat == other.mat
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MatAut(twist={self.twist}, {self.mat})"


def _mat_identity(spec, dim):
    one, zero = spec.one(), spec.zero()
    return tuple(tuple(one if i == j else zero for j in range(dim)) for i in range(dim))


def _mat_mul(spec, a, b):
    dim = len(a)
    zero = spec.zero()
    out = []
    for i in range(dim):
        row = []
        arow = a[i]
        for j in range(dim):
            acc = None
            for k in range(dim):
                x = arow[k]
                if x.is_zero():
                    continue
                y = b[k][j]
                if y.is_zero():
                    continue
                term = x * y
                acc = term if acc is None else acc + term
            row.append(zero if acc is None else acc)
        out.append(tuple(row))
    return tuple(out)


def _mat_frob(spec, a, i):
    i %= spec.k
    if i == 0:
        return a
    return tuple(
        tuple(FieldElement(spec, spec.frob_t(e.coeffs, i)) for e in row) for row in a
    )


def _mat_inv(spec, a):
    """Gaussian elimination; raises on singular input."""
    dim = len(a)
    one, zero = spec.one(), spec.zero()
    aug = [list(a[i]) + [one if i == j else zero for j in range(dim)] for i in range(dim)]
    for col in range(dim):
        piv = next((r for r in range(col, dim) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [e * inv for e in aug[col]]
        for r in range(dim):
            if r != col and not aug[r][col].is_zero():
                fac = aug[r][col]
                aug[r] = [aug[r][i] - fac * aug[col][i] for i in range(2 * dim)]
    return tuple(tuple(aug[i][dim:]) for i in range(dim))


def conjugate(x, g):
    """x^g = g^{-1} x g."""
    return g.inverse() * x * g


def commutator(a, b):
    """[a, b] = a^{-1} b^{-1} a b."""
    return a.inverse() * b.inverse() * a * b


def element_order(x) -> int:
    n = 1
    acc = x
    while not acc.is_identity():
        acc = acc * x
        n += 1
    return n


# ---------------------------------------------------------------------------


def generate_elements(generators: Sequence, cap: int = DEFAULT_GROUP_CAP) -> list:
    """Close a generating set under multiplication, breadth-first.

    Order is deterministic: identity first, then discovery order (BFS level,
    frontier position, generator position).  Raises CapExceeded as soon as
    more than `cap` elements are seen.
    """
    if not generators:
        raise ValueError("empty generating set")
    ambient = generators[0].ambient()
    for g in generators[1:]:
        if g.ambient() != ambient:
            raise BackendMismatch("generators live in different ambient groups")
    ident = generators[0].identity()
    seen = {ident}
    ordered = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in generators:
                h = e * g
                if h not in seen:
                    seen.add(h)
                    if len(seen) > cap:
                        raise CapExceeded(f"closure exceeds cap {cap}")
                    ordered.append(h)
                    nxt.append(h)
        frontier = nxt
    return ordered


class GroupHandle:
    """A finite group given by generators, with a lazily materialized element list."""

    def __init__(self, generators: Sequence, cap: int = DEFAULT_GROUP_CAP, name: str = ""):
        if not generators:
            raise ValueError("a group handle needs at least one generator")
        self.generators = list(generators)
        self.cap = cap
        self.name = name
        self._elements: list | None = None
        self._index: dict | None = None

    def materialize(self) -> "GroupHandle":
        if self._elements is None:
            self._elements = generate_elements(self.generators, self.cap)
            self._index = {e: i for i, e in enumerate(self._elements)}
        return self

    @property
    def elements(self) -> list:
        self.materialize()
        return self._elements

    @property
    def identity(self):
        return self.generators[0].identity()

    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        self.materialize()
        return x in self._index

    def index_of(self, x) -> int:
        self.materialize()
        try:
            return self._index[x]
        except KeyError:
            raise NotMember(f"{x!r} is not an element of this group") from None

    def subgroup(self, members: Iterable) -> "SubgroupHandle":
        return SubgroupHandle(self, members)

    def whole(self) -> "SubgroupHandle":
        return SubgroupHandle(self, self.elements)

    def trivial_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, [self.identity])

    # -- group file format

    def to_json(self) -> dict:
        g0 = self.generators[0]
        if isinstance(g0, PermutationElement):
            return {
                "type": "permutation",
                "degree": len(g0.images),
                "generators": [g.to_json() for g in self.generators],
            }
        return {
            "type": "matrix",
            "field": g0.spec.to_json(),
            "dim": g0.dim,
            "aut_order": g0.spec.k,
            "generators": [g.to_json() for g in self.generators],
        }

    @classmethod
    def from_json(cls, obj: dict, cap: int = DEFAULT_GROUP_CAP, name: str = "") -> "GroupHandle":
        kind = obj.get("type")
        if kind == "permutation":
            degree = int(obj["degree"])
            gens = []
            for images in obj["generators"]:
                if len(images) != degree:
                    raise ValueError("generator degree mismatch")
                gens.append(PermutationElement(images))
            return cls(gens, cap=cap, name=name)
        if kind == "matrix":
            spec = FieldSpec.from_json(obj["field"])
            if int(obj.get("aut_order", spec.k)) != spec.k:
                raise ValueError("aut_order must equal the field extension degree")
            dim = int(obj["dim"])
            gens = []
            for gen in obj["generators"]:
                rows = gen["matrix"]
                if len(rows) != dim or any(len(r) != dim for r in rows):
                    raise ValueError("matrix shape mismatch")
                mat = tuple(
                    tuple(
                        spec.element(e if isinstance(e, list) else int(e)) for e in row
                    )
                    for row in rows
                )
                elem = MatrixAutElement(spec, mat, int(gen.get("twist", 0)))
                _mat_inv(spec, elem.mat)  # reject singular generators
                gens.append(elem)
            return cls(gens, cap=cap, name=name)
        raise ValueError(f"unknown group file type {kind!r}")

    def __repr__(self):
        n = len(self._elements) if self._elements is not None else "?"
        label = self.name or "group"
        return f"GroupHandle({label}, order={n})"


class SubgroupHandle:
    """A subgroup of a materialized parent, stored as an explicit member set."""

    def __init__(self, parent: GroupHandle, members: Iterable):
        self.parent = parent
        self.members = tuple(sorted(set(members), key=lambda e: e.key()))
        self.member_set = frozenset(self.members)

    def order(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return x in self.member_set

    def __eq__(self, other):
        return isinstance(other, SubgroupHandle) and self.member_set == other.member_set

    def __hash__(self):
        return hash(self.member_set)

    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def small_generating_set(self) -> list:
        gens: list = []
        current = {self.parent.identity}
        for m in self.members:
            if m not in current:
                gens.append(m)
                current = set(generate_elements(gens, cap=len(self.members)))
                if len(current) == len(self.members):
                    break
        return gens or [self.parent.identity]

    def as_group(self) -> GroupHandle:
        """View this subgroup as a standalone materialized handle."""
        g = GroupHandle(self.small_generating_set(), cap=self.parent.cap)
        g.materialize()
        assert g.order() == len(self.members)
        return g

    def __repr__(self):
        return f"Subgroup(order={len(self.members)})"


def subgroup_closure(G: GroupHandle, seed: Iterable) -> SubgroupHandle:
    """Subgroup of G generated by `seed` (closure under multiplication)."""
    seed = list(seed)
    if not seed:
        return G.trivial_subgroup()
    return SubgroupHandle(G, generate_elements(seed, cap=G.cap))


# ---------------------------------------------------------------------------
# centralizers, centre, series


def centralizer(G: GroupHandle, x) -> SubgroupHandle:
    if x not in G:
        raise NotMember("centralizer of a non-member")
    return SubgroupHandle(G, [g for g in G.elements if g * x == x * g])


def center(G: GroupHandle) -> SubgroupHandle:
    # commuting with every generator is commuting with the whole group
    gens = G.generators
    return SubgroupHandle(
        G, [g for g in G.elements if all(g * h == h * g for h in gens)]
    )


def _derived_members(G: GroupHandle, members) -> tuple:
    comms = {commutator(a, b) for a in members for b in members}
    return tuple(generate_elements(sorted(comms, key=lambda e: e.key()), cap=G.cap))


def derived_subgroup(G: GroupHandle, H: SubgroupHandle | None = None) -> SubgroupHandle:
    members = H.members if H is not None else tuple(G.elements)
    return SubgroupHandle(G, _derived_members(G, members))


def is_soluble(G: GroupHandle) -> bool:
    members = tuple(G.elements)
    while len(members) > 1:
        nxt = _derived_members(G, members)
        if len(nxt) == len(members):
            return False
        members = nxt
    return True


def is_nilpotent(G: GroupHandle | SubgroupHandle) -> bool:
    if isinstance(G, SubgroupHandle):
        G = G.as_group()
    whole = tuple(G.elements)
    members = whole
    while len(members) > 1:
        comms = {commutator(a, b) for a in whole for b in members}
        nxt = tuple(generate_elements(sorted(comms, key=lambda e: e.key()), cap=G.cap))
        if len(nxt) == len(members):
            return False
        members = nxt
    return True


# ---------------------------------------------------------------------------
# normality, Sylow machinery, Fitting subgroup


def is_normal(G: GroupHandle, H: SubgroupHandle) -> bool:
    gens = H.small_generating_set()
    return all(conjugate(h, g) in H.member_set for g in G.generators for h in gens)


def conjugate_subgroup(G: GroupHandle, H: SubgroupHandle, g) -> SubgroupHandle:
    return SubgroupHandle(G, [conjugate(h, g) for h in H.members])


def normal_closure(G: GroupHandle, x) -> SubgroupHandle:
    conj = {conjugate(x, g) for g in G.elements}
    return SubgroupHandle(G, generate_elements(sorted(conj, key=lambda e: e.key()), cap=G.cap))


def normalizer(G: GroupHandle, H: SubgroupHandle) -> SubgroupHandle:
    gens = H.small_generating_set()
    return SubgroupHandle(
        G, [g for g in G.elements if all(conjugate(h, g) in H.member_set for h in gens)]
    )


def sylow_subgroup(G: GroupHandle, p: int) -> SubgroupHandle:
    """A Sylow p-subgroup by greedy normalizer extension.

    Start from a p-element; while the current p-subgroup P is smaller than
    the full p-part of |G|, some p-element of N_G(P) lies outside P and
    extends P.  Scans run in canonical element order, so the result is
    deterministic.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = G.order()
    p_part = 1
    while n % (p_part * p) == 0:
        p_part *= p
    if p_part == 1:
        return G.trivial_subgroup()

    def p_elements(pool):
        for g in sorted(pool, key=lambda e: e.key()):
            if g.is_identity():
                continue
            o = element_order(g)
            while o % p == 0:
                o //= p
            if o == 1:
                yield g

    seed = next(p_elements(G.elements))
    P = subgroup_closure(G, [seed])
    while P.order() < p_part:
        ngp = normalizer(G, P)
        ext = next(g for g in p_elements(ngp.members) if g not in P.member_set)
        P = subgroup_closure(G, list(P.small_generating_set()) + [ext])
    return P


def p_core(G: GroupHandle, p: int) -> SubgroupHandle:
    """O_p(G): intersection of all conjugates of one Sylow p-subgroup."""
    P = sylow_subgroup(G, p)
    if P.is_trivial():
        return P
    core = set(P.member_set)
    for g in G.elements:
        core &= {conjugate(h, g) for h in P.members}
        if len(core) == 1:
            break
    return SubgroupHandle(G, core)


def fitting_subgroup(G: GroupHandle) -> SubgroupHandle:
    """F(G) as the product of the p-cores over primes dividing |G|."""
    members = {G.identity}
    for p in sorted(factorize(G.order())):
        members |= p_core(G, p).member_set
    return SubgroupHandle(G, generate_elements(sorted(members, key=lambda e: e.key()), cap=G.cap))


def minimal_normal_subgroups(G: GroupHandle) -> list[SubgroupHandle]:
    """Minimal members of {normal closure of <x>: x != 1} under containment."""
    closures: dict = {}
    for x in G.elements:
        if x.is_identity():
            continue
        nc = normal_closure(G, x)
        closures[nc.member_set] = nc
    minimal = []
    for key, sub in closures.items():
        if not any(other < key for other in closures if other != key):
            minimal.append(sub)
    minimal.sort(key=lambda s: (s.order(), s.members[0].key() if s.members else ()))
    return minimal


# ---------------------------------------------------------------------------
# quotients


def quotient_group(G: GroupHandle, N: SubgroupHandle) -> GroupHandle:
    """G/N as the permutation action of G's generators on left cosets of N.

    Coset labels are deterministic: cosets are sorted by their least
    canonical member.  The returned handle carries `coset_index_of` (element
    key -> coset label) and `project` (element -> PermutationElement image).
    """
    if not is_normal(G, N):
        raise NotNormal("quotient by a non-normal subgroup")
    elems = G.elements
    coset_of: dict = {}
    cosets: list[list] = []
    for g in elems:
        if g in coset_of:
            continue
        coset = [g * n for n in N.members]
        cid = len(cosets)
        cosets.append(coset)
        for m in coset:
            coset_of[m] = cid
    # relabel by least canonical member
    order_keys = sorted(range(len(cosets)), key=lambda c: min(m.key() for m in cosets[c]))
    relabel = {old: new for new, old in enumerate(order_keys)}
    coset_of = {m: relabel[c] for m, c in coset_of.items()}
    reps = [None] * len(cosets)
    for old, new in relabel.items():
        reps[new] = min(cosets[old], key=lambda m: m.key())

    def project(g) -> PermutationElement:
        return PermutationElement([coset_of[g * rep] for rep in reps])

    Q = GroupHandle([project(g) for g in G.generators], cap=G.cap, name=f"{G.name}/N")
    Q.materialize()
    Q.coset_index_of = coset_of
    Q.coset_reps = reps
    Q.project = project
    return Q


# ---------------------------------------------------------------------------
# structural predicates


def is_cyclic_members(members) -> bool:
    n = len(members)
    return any(element_order(g) == n for g in members)


def sylow_profile_cyclic_or_quaternion(H: SubgroupHandle) -> bool:
    """True iff every Sylow subgroup of H is cyclic or generalized quaternion.

    Generalized quaternion means: a 2-group of order >= 8 with a unique
    involution and a cyclic subgroup of index 2.
    """
    Hg = H.as_group()
    for p in factorize(Hg.order()):
        S = sylow_subgroup(Hg, p)
        if is_cyclic_members(S.members):
            continue
        if p != 2 or S.order() < 8:
            return False
        involutions = sum(1 for g in S.members if not g.is_identity() and element_order(g) == 2)
        if involutions != 1:
            return False
        if not any(element_order(g) == S.order() // 2 for g in S.members):
            return False
    return True


def is_metacyclic(G: GroupHandle) -> bool:
    """True iff G has a normal cyclic subgroup with cyclic quotient."""
    seen = set()
    for g in G.elements:
        H = subgroup_closure(G, [g])
        if H.member_set in seen:
            continue
        seen.add(H.member_set)
        if not is_normal(G, H):
            continue
        Q = quotient_group(G, H)
        if is_cyclic_members(Q.elements):
            return True
    return False


def find_frobenius_complement(G: GroupHandle, K: SubgroupHandle, max_order: int = 500):
    """Search for a complement to K: a subgroup H with |H| = [G:K], H cap K = 1.

    Exhaustive over one- and two-generator subgroups, first hit in canonical
    order; diagnostics only, capped at |G| <= max_order.
    """
    if G.order() > max_order:
        return None
    m = G.order() // K.order()
    elems = sorted(G.elements, key=lambda e: e.key())
    singles = [g for g in elems if not g.is_identity() and g not in K.member_set]
    for g in singles:
        if m % element_order(g) != 0:
            continue
        H = subgroup_closure(G, [g])
        if H.order() == m and len(H.member_set & K.member_set) == 1:
            return H
    for g, h in itertools.combinations(singles, 2):
        try:
            H = subgroup_closure(G, [g, h])
        except CapExceeded:
            continue
        if H.order() == m and len(H.member_set & K.member_set) == 1:
            return H
    return None
