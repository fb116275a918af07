"""Permutations on {1,...,d} and permutation groups stored as explicit element lists.

Points are 1-based throughout.  ``compose(a, b)`` applies ``b`` first, so the
induced coordinate action on tuples is a left action.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .caps import Caps, CapExceeded, DEFAULT_CAPS


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1,...,d}; ``images[s-1]`` is the image of the point s."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"images {self.images} are not a bijection of 1..{len(self.images)}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, s: int) -> int:
        return self.images[s - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for s, t in enumerate(self.images, start=1):
            inv[t - 1] = s
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(t == s for s, t in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            t = self(start)
            while t != start:
                cyc.append(t)
                seen[t - 1] = True
                t = self(t)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def __repr__(self):
        return f"Permutation[{self.degree}]{self.cycle_string()}"


def identity(degree: int) -> Permutation:
    return Permutation(tuple(range(1, degree + 1)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """a after b: (compose(a, b))(s) = a(b(s))."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")
    return Permutation(tuple(a.images[t - 1] for t in b.images))


def cycle_type(sigma: Permutation) -> tuple[int, ...]:
    """(c_1,...,c_d) where c_s counts the s-cycles of sigma, fixed points included."""
    d = sigma.degree
    counts = [0] * d
    counts[0] = d
    for cyc in sigma.cycles():
        counts[len(cyc) - 1] += 1
        counts[0] -= len(cyc)
    return tuple(counts)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def perm_from_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycle notation like ``(1 2 3)(4 5)``; omitted points are fixed."""
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(1, degree + 1))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(stripped):
        entries = body.replace(",", " ").split()
        if not entries:
            raise ValueError(f"empty cycle in {text!r}")
        try:
            points = [int(e) for e in entries]
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
        for p in points:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} out of range 1..{degree}")
            if p in used:
                raise ValueError(f"repeated point {p} in {text!r}")
            used.add(p)
        for i, p in enumerate(points):
            images[p - 1] = points[(i + 1) % len(points)]
    return Permutation(tuple(images))


class PermGroup:
    """A permutation group given by its full element list, identity first."""

    def __init__(self, degree: int, elements: Sequence[Permutation],
                 generators: Sequence[Permutation], label: str | None = None):
        self.degree = degree
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        self.label = label
        self._index = {p: i for i, p in enumerate(self.elements)}
        if not self.elements or not self.elements[0].is_identity():
            raise ValueError("element list must start with the identity")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._index

    def index(self, p: Permutation) -> int:
        return self._index[p]

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and set(self.elements) == set(other.elements)

    def __hash__(self):
        return hash((self.degree, frozenset(self.elements)))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.elements)

    @staticmethod
    def from_elements(elements: Iterable[Permutation], label: str | None = None) -> "PermGroup":
        """Build a group from a closed element set; generators are reduced greedily."""
        elems = list(dict.fromkeys(elements))
        if not elems:
            raise ValueError("empty element list")
        degree = elems[0].degree
        elems.sort(key=lambda p: p.images)  # identity sorts first
        elem_set = set(elems)
        for a in elems:
            if compose(a, a.inverse()) not in elem_set or a.inverse() not in elem_set:
                raise ValueError("element set not closed under inversion")
        gens: list[Permutation] = []
        generated = {identity(degree)}
        for p in elems:
            if p not in generated:
                gens.append(p)
                generated = _close(gens, degree, DEFAULT_CAPS)
        if generated != elem_set:
            raise ValueError("element set is not closed under composition")
        ordered = _bfs_order(gens, degree)
        return PermGroup(degree, ordered, gens, label=label)


def _close(generators: Sequence[Permutation], degree: int, caps: Caps) -> set[Permutation]:
    elems = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        nxt = []
        for e in frontier:
            for g in generators:
                p = compose(e, g)
                if p not in elems:
                    if len(elems) >= caps.group_order:
                        raise CapExceeded(f"group order exceeds cap {caps.group_order}")
                    elems.add(p)
                    nxt.append(p)
        frontier = nxt
    return elems


def _bfs_order(generators: Sequence[Permutation], degree: int) -> list[Permutation]:
    """Deterministic element order: breadth-first products in generator order."""
    start = identity(degree)
    order = [start]
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for e in frontier:
            for g in generators:
                p = compose(e, g)
                if p not in seen:
                    seen.add(p)
                    order.append(p)
                    nxt.append(p)
        frontier = nxt
    return order


def group_closure(generators: Iterable[Permutation], degree: int | None = None,
                  caps: Caps = DEFAULT_CAPS, label: str | None = None) -> PermGroup:
    """Smallest group containing the generators, elements in BFS order from the identity."""
    gens = list(dict.fromkeys(g for g in generators if not g.is_identity()))
    if gens:
        degrees = {g.degree for g in gens}
        if len(degrees) != 1:
            raise ValueError(f"generators of mixed degrees {sorted(degrees)}")
        if degree is not None and degree != gens[0].degree:
            raise ValueError("degree does not match generators")
        degree = gens[0].degree
    elif degree is None:
        raise ValueError("no generators and no degree given")
    if degree < 1:
        raise ValueError("degree must be positive")
    _close(gens, degree, caps)  # enforces the order cap
    return PermGroup(degree, _bfs_order(gens, degree), gens, label=label)


def named_group(kind: str, d: int, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Catalog groups: symmetric, alternating, cyclic, dihedral (orders d!, d!/2, d, 2d)."""
    if d < 1:
        raise ValueError(f"unsupported degree {d}")
    label = {"symmetric": "S", "alternating": "A", "cyclic": "C", "dihedral": "D"}.get(kind)
    if label is None:
        raise ValueError(f"unknown group kind {kind!r}")
    label = f"{label}({d})"
    if kind == "symmetric":
        gens = [] if d == 1 else [perm_from_cycles("(1 2)", d)]
        if d >= 3:
            gens.append(Permutation(tuple(list(range(2, d + 1)) + [1])))
    elif kind == "alternating":
        if d < 3:
            if d > 2:
                raise ValueError(f"unsupported degree {d}")
            gens = []
        else:
            gens = [perm_from_cycles(f"(1 2 {k})", d) for k in range(3, d + 1)]
    elif kind == "cyclic":
        gens = [] if d == 1 else [Permutation(tuple(list(range(2, d + 1)) + [1]))]
    else:  # dihedral
        if d < 3:
            raise ValueError(f"dihedral group needs degree >= 3, got {d}")
        rot = Permutation(tuple(list(range(2, d + 1)) + [1]))
        refl = Permutation(tuple(range(d, 0, -1)))
        gens = [rot, refl]
    return group_closure(gens, degree=d, caps=caps, label=label)


def embed_pair(sigma: Permutation, tau: Permutation, d: int, r: int) -> Permutation:
    """(sigma, tau) as the permutation of 1..d+r acting on the two blocks separately."""
    return Permutation(tuple(sigma.images) + tuple(t + d for t in tau.images))


def direct_product_embed(W: PermGroup, V: PermGroup) -> PermGroup:
    """W x V inside S_{d+r}: s -> sigma(s) for s <= d, d+t -> d+tau(t)."""
    d, r = W.degree, V.degree
    elements = [embed_pair(s, t, d, r) for s in W.elements for t in V.elements]
    gens = [embed_pair(g, identity(r), d, r) for g in W.generators]
    gens += [embed_pair(identity(d), g, d, r) for g in V.generators]
    return PermGroup(d + r, elements, gens)


def split_product_element(g: Permutation, d: int, r: int) -> tuple[Permutation, Permutation]:
    """Inverse of embed_pair; raises if g does not preserve the two blocks."""
    if any(img > d for img in g.images[:d]) or any(img <= d for img in g.images[d:]):
        raise ValueError(f"{g!r} does not preserve the blocks 1..{d} / {d + 1}..{d + r}")
    return Permutation(g.images[:d]), Permutation(tuple(t - d for t in g.images[d:]))


def _block_perm(w: Permutation, r: int) -> Permutation:
    """w permuting d blocks of size r: (s-1)r+t -> (w(s)-1)r+t."""
    images = [0] * (w.degree * r)
    for s in range(1, w.degree + 1):
        for t in range(1, r + 1):
            images[(s - 1) * r + t - 1] = (w(s) - 1) * r + t
    return Permutation(tuple(images))


def _in_block_perm(v: Permutation, block: int, d: int) -> Permutation:
    """v acting inside the given block (1-based), all other points fixed."""
    r = v.degree
    images = list(range(1, d * r + 1))
    for t in range(1, r + 1):
        images[(block - 1) * r + t - 1] = (block - 1) * r + v(t)
    return Permutation(tuple(images))


def wreath_embed(V: PermGroup, W: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Wreath product of V (block group, degree r) by W (top group on d blocks) inside S_{dr}.

    Generated by copies of V's generators inside every block together with W's
    generators permuting the blocks; the order must come out as |V|^d * |W|.
    """
    r, d = V.degree, W.degree
    gens = [_in_block_perm(v, block, d) for block in range(1, d + 1) for v in V.generators]
    gens += [_block_perm(w, r) for w in W.generators]
    group = group_closure(gens, degree=d * r, caps=caps)
    expected = V.order ** d * W.order
    if group.order != expected:
        raise AssertionError(f"wreath order {group.order} != |V|^d*|W| = {expected}")
    return group


def decompose_wreath_element(g: Permutation, r: int, d: int,
                             V: PermGroup, W: PermGroup
                             ) -> tuple[Permutation, tuple[Permutation, ...]]:
    """Split g in wreath(V, W) into the block permutation sigma and per-block maps.

    g sends (s-1)r+t to (sigma(s)-1)r+tau_s(t); returns (sigma, (tau_1,...,tau_d)).
    """
    if g.degree != d * r:
        raise ValueError(f"degree {g.degree} != d*r = {d * r}")
    sigma_images = []
    taus = []
    for s in range(1, d + 1):
        target_block = (g((s - 1) * r + 1) - 1) // r + 1
        tau_images = []
        for t in range(1, r + 1):
            img = g((s - 1) * r + t)
            if (img - 1) // r + 1 != target_block:
                raise ValueError(f"{g!r} does not map block {s} into a single block")
            tau_images.append(img - (target_block - 1) * r)
        sigma_images.append(target_block)
        taus.append(Permutation(tuple(tau_images)))
    sigma = Permutation(tuple(sigma_images))
    if sigma not in W:
        raise ValueError(f"block permutation {sigma!r} not in the top group")
    for tau in taus:
        if tau not in V:
            raise ValueError(f"within-block map {tau!r} not in the block group")
    return sigma, tuple(taus)


def reconstruct_wreath_element(sigma: Permutation, taus: Sequence[Permutation],
                               r: int, d: int) -> Permutation:
    """Inverse of decompose_wreath_element."""
    images = [0] * (d * r)
    for s in range(1, d + 1):
        for t in range(1, r + 1):
            images[(s - 1) * r + t - 1] = (sigma(s) - 1) * r + taus[s - 1](t)
    return Permutation(tuple(images))


def derived_subgroup(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Commutator subgroup, generated by all g^-1 h^-1 g h."""
    commutators = []
    for g in G.elements:
        gi = g.inverse()
        for h in G.elements:
            commutators.append(compose(compose(gi, h.inverse()), compose(g, h)))
    return group_closure(commutators, degree=G.degree, caps=caps)
