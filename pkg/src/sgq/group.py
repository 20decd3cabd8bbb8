"""Exact permutation groups with a deterministic stabilizer chain.

The chain is built by the classical (non-randomized) Schreier-Sims
procedure so that orders, transversals and reported generators are
reproducible across runs.  Base points may be prescribed up front, which
is how pointwise stabilizers (and through them kernels of actions) are
extracted as chain suffixes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SgqError
from .perm import (
    check_perm,
    format_cycles,
    identity,
    inverse,
    is_identity,
    mul,
    perm_order,
)

ENUMERATION_BOUND = 10**5


class _Level:
    __slots__ = ("point", "gens", "orbit", "order_found", "_done")

    def __init__(self, point):
        self.point = point
        self.gens = []
        # orbit maps point -> transversal element u with base^u = point;
        # None stands for the identity to avoid needless products.
        self.orbit = {point: None}
        self.order_found = [point]
        self._done = set()

    def extend_orbit(self):
        # Extends (never rebuilds) the orbit, so transversals assigned to
        # previously discovered points stay fixed; Schreier generators
        # already processed against them remain valid.
        queue = self.order_found
        i = 0
        while i < len(queue):
            p = queue[i]
            i += 1
            u = self.orbit[p]
            for s in self.gens:
                q = s[p]
                if q not in self.orbit:
                    self.orbit[q] = s if u is None else mul(u, s)
                    queue.append(q)


class StabilizerChain:
    """Base and strong generating set for a group of permutations."""

    def __init__(self, degree: int, generators, base_prefix=()):
        self.degree = degree
        self.levels = [_Level(b) for b in base_prefix]
        for g in generators:
            if not is_identity(g):
                self._add(tuple(g), 0)

    def strip(self, g, start=0):
        """Sift g through levels >= start; returns (residue, level index)."""
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            img = g[lv.point]
            if img == lv.point:
                continue
            u = lv.orbit.get(img)
            if u is None:
                if img not in lv.orbit:
                    return g, i
                continue
            g = mul(g, inverse(u))
        return g, len(self.levels)

    def _add(self, g, start):
        h, i = self.strip(g, start)
        if is_identity(h):
            return
        if i == len(self.levels):
            b = min(p for p in range(self.degree) if h[p] != p)
            self.levels.append(_Level(b))
        lv = self.levels[i]
        lv.gens.append(h)
        lv.extend_orbit()
        # Close under Schreier generators; new residues always belong to
        # deeper levels because u_p * s * u_{p^s}^-1 fixes this base point.
        gen_count = len(lv.gens)
        for p in list(lv.order_found):
            u = lv.orbit[p]
            for si in range(gen_count):
                key = (p, si)
                if key in lv._done:
                    continue
                lv._done.add(key)
                s = lv.gens[si]
                q = s[p]
                sg = s if u is None else mul(u, s)
                uq = lv.orbit[q]
                if uq is not None:
                    sg = mul(sg, inverse(uq))
                if not is_identity(sg):
                    self._add(sg, i + 1)

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.orbit)
        return n

    def contains(self, g) -> bool:
        if len(g) != self.degree:
            return False
        h, _ = self.strip(tuple(g))
        return is_identity(h)

    def strong_generators(self, from_level=0):
        out = []
        for lv in self.levels[from_level:]:
            out.extend(lv.gens)
        return out

    def base(self):
        return [lv.point for lv in self.levels]

    def iter_elements(self):
        """All elements, deterministically ordered by transversal choice."""
        ident = identity(self.degree)

        def rec(i):
            if i == len(self.levels):
                yield ident
                return
            lv = self.levels[i]
            for p in lv.order_found:
                u = lv.orbit[p]
                for h in rec(i + 1):
                    if u is None:
                        yield h
                    else:
                        yield mul(h, u)

        return rec(0)


class PermGroup:
    """A finitely generated permutation group on {0..degree-1}."""

    def __init__(self, degree: int, generators=()):
        self.degree = degree
        seen = set()
        gens = []
        for g in generators:
            g = tuple(g)
            check_perm(g, degree)
            if not is_identity(g) and g not in seen:
                seen.add(g)
                gens.append(g)
        self.generators = tuple(gens)
        self._chain = None
        self._chains_prefixed = {}

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, ())

    def __repr__(self):
        gens = ", ".join(format_cycles(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, <{gens}>)"

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators)
        return self._chain

    def chain_with_prefix(self, prefix) -> StabilizerChain:
        key = tuple(prefix)
        if key not in self._chains_prefixed:
            self._chains_prefixed[key] = StabilizerChain(
                self.degree, self.generators, base_prefix=key
            )
        return self._chains_prefixed[key]

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, g) -> bool:
        return self.chain.contains(g)

    def elements(self, bound: int = ENUMERATION_BOUND):
        n = self.order()
        if n > bound:
            raise SgqError(f"refusing to enumerate group of order {n} > {bound}")
        return list(self.chain.iter_elements())

    def element_order_profile(self, bound: int = ENUMERATION_BOUND) -> dict:
        profile = {}
        for g in self.elements(bound):
            k = perm_order(g)
            profile[k] = profile.get(k, 0) + 1
        return profile

    # -- orbits on points ------------------------------------------------

    def orbit_of_point(self, point: int) -> frozenset:
        orb = {point}
        queue = [point]
        while queue:
            p = queue.pop()
            for g in self.generators:
                q = g[p]
                if q not in orb:
                    orb.add(q)
                    queue.append(q)
        return frozenset(orb)

    def point_orbits(self):
        seen = set()
        out = []
        for p in range(self.degree):
            if p not in seen:
                orb = self.orbit_of_point(p)
                seen |= orb
                out.append(frozenset(orb))
        return out

    def is_transitive(self) -> bool:
        return self.degree > 0 and len(self.orbit_of_point(0)) == self.degree

    # -- stabilizers ------------------------------------------------------

    def point_stabilizer(self, point: int) -> "PermGroup":
        if not 0 <= point < self.degree:
            raise SgqError(f"point {point} out of range")
        chain = self.chain_with_prefix([point])
        return PermGroup(self.degree, chain.strong_generators(from_level=1))

    def pointwise_stabilizer(self, points) -> "PermGroup":
        pts = list(points)
        chain = self.chain_with_prefix(pts)
        return PermGroup(self.degree, chain.strong_generators(from_level=len(pts)))

    def setwise_stabilizer(self, subset) -> "PermGroup":
        """Stabilizer of a point set, via Schreier generators on its orbit."""
        seed = frozenset(subset)
        if any(not 0 <= p < self.degree for p in seed):
            raise SgqError("subset not within the point range")
        orbit = {seed: None}
        queue = [seed]
        i = 0
        while i < len(queue):
            cur = queue[i]
            i += 1
            u = orbit[cur]
            for s in self.generators:
                img = frozenset(s[p] for p in cur)
                if img not in orbit:
                    orbit[img] = s if u is None else mul(u, s)
                    queue.append(img)
        gens = []
        seen = set()
        for cur in queue:
            u = orbit[cur]
            for s in self.generators:
                img = frozenset(s[p] for p in cur)
                sg = s if u is None else mul(u, s)
                uq = orbit[img]
                if uq is not None:
                    sg = mul(sg, inverse(uq))
                if not is_identity(sg) and sg not in seen:
                    seen.add(sg)
                    gens.append(sg)
        return PermGroup(self.degree, gens)

    # -- identification ---------------------------------------------------

    def identify(self) -> "GroupTag":
        return identify_group(self)


@dataclass(frozen=True)
class GroupTag:
    """Invariant-based identification of a small transitive group.

    ``kind`` is one of A4, S4, PSL32, dihedral, trivial, cyclic, other.
    Identification never claims more than (order, degree, transitivity,
    regularity, element orders) can distinguish at desk scale.
    """

    kind: str
    order: int
    degree: int
    transitivity: int
    regular: bool
    n: int | None = None

    def label(self) -> str:
        if self.kind == "dihedral":
            return f"dihedral({self.n})"
        if self.kind == "other":
            return f"other(order={self.order}, transitivity={self.transitivity})"
        return self.kind

    def to_json(self) -> dict:
        return {
            "tag": self.label(),
            "kind": self.kind,
            "order": self.order,
            "degree": self.degree,
            "transitivity": self.transitivity,
            "regular": self.regular,
        }


def transitivity_on_points(group: PermGroup):
    """Largest k with a k-transitive point action, plus regular-at-k flag."""
    if group.degree == 0:
        raise SgqError("transitivity undefined on an empty domain")
    k = 0
    current = group
    remaining = list(range(group.degree))
    while remaining:
        orb = current.orbit_of_point(remaining[0])
        if not all(p in orb for p in remaining):
            break
        k += 1
        fixed = remaining.pop(0)
        current = current.point_stabilizer(fixed)
    return k, current.order() == 1


def identify_group(group: PermGroup) -> GroupTag:
    order = group.order()
    degree = group.degree
    k, regular = transitivity_on_points(group)
    if order == 1:
        return GroupTag("trivial", order, degree, k, regular)
    profile = None
    if order <= 10**4:
        profile = group.element_order_profile()

    def orders_within(allowed):
        return profile is not None and set(profile) <= set(allowed)

    if order == 12 and degree in (4, 6) and k >= 1 and orders_within({1, 2, 3}):
        return GroupTag("A4", order, degree, k, regular)
    if order == 24 and degree in (4, 6, 8) and k >= 1 and orders_within({1, 2, 3, 4}):
        return GroupTag("S4", order, degree, k, regular)
    if order == 168 and degree == 7 and k >= 2:
        return GroupTag("PSL32", order, degree, k, regular)
    n = degree
    if order == 2 * n and n >= 3 and k >= 1 and profile is not None:
        tag = _dihedral_tag(group, n, k, regular)
        if tag is not None:
            return tag
    return GroupTag("other", order, degree, k, regular)


def _dihedral_tag(group: PermGroup, n: int, k: int, regular: bool):
    """Dihedral test: an n-cycle generating a cyclic normal subgroup that
    every outside element inverts."""
    elements = group.elements()
    cycle = None
    for g in sorted(elements):
        if perm_order(g) == n and len(set(g)) == n and all(
            g[p] != p for p in range(n)
        ):
            # single n-cycle on the whole domain
            orbit = {0}
            p = g[0]
            while p != 0:
                orbit.add(p)
                p = g[p]
            if len(orbit) == n:
                cycle = g
                break
    if cycle is None:
        return None
    cyc_subgroup = set()
    p = identity(n)
    for _ in range(n):
        cyc_subgroup.add(p)
        p = mul(p, cycle)
    inv_cycle = inverse(cycle)
    for t in elements:
        if t in cyc_subgroup:
            continue
        if mul(mul(inverse(t), cycle), t) != inv_cycle:
            return None
    return GroupTag("dihedral", 2 * n, n, k, regular, n=n)
