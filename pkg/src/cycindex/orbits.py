"""Brute-force enumeration of W-orbits on the hypercube [0,n]^d.

Hypercube coordinates are 0-based.  The coordinate action is the left action
sigma . (j_1,...,j_d) = (j_{sigma^-1(1)}, ..., j_{sigma^-1(d)}).  Points are
scanned in lexicographic order and orbits flood-filled, so the first point of
each orbit is automatically its lexicographically minimal representative.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .caps import Caps, CapExceeded, DEFAULT_CAPS
from .characters import LinearCharacter
from .cyclo import Cyclotomic
from .perms import PermGroup, Permutation
from .polys import MonomialPoly, PowerSumPoly, cycle_index, specialize

Point = tuple[int, ...]


def apply_perm(sigma: Permutation, point: Point) -> Point:
    inv = sigma.inverse().images
    return tuple(point[inv[s] - 1] for s in range(len(point)))


def _action_table(W: PermGroup) -> list[tuple[int, ...]]:
    """For each group element, the 0-based source position for each target position."""
    return [tuple(i - 1 for i in g.inverse().images) for g in W.elements]


@dataclass(frozen=True)
class OrbitRecord:
    rep: Point
    size: int
    stabilizer_order: int
    is_chi_orbit: bool | None = None
    tau_H: int | None = None
    h_orbit_length: int | None = None


@dataclass(frozen=True)
class OrbitTable:
    group: PermGroup
    n: int
    records: tuple[OrbitRecord, ...]

    @property
    def degree(self) -> int:
        return self.group.degree


def enumerate_orbits(W: PermGroup, n: int, caps: Caps = DEFAULT_CAPS) -> OrbitTable:
    d = W.degree
    npoints = (n + 1) ** d
    if npoints * W.order > caps.orbit_work:
        raise CapExceeded(
            f"(n+1)^d * |W| = {npoints * W.order} exceeds work cap {caps.orbit_work}")
    table = _action_table(W)
    radix = n + 1
    visited = bytearray(npoints)
    records = []
    point = [0] * d
    for code in range(npoints):
        if not visited[code]:
            p = tuple(point)
            orbit = set()
            stab = 0
            for row in table:
                q = tuple(p[row[s]] for s in range(d))
                orbit.add(q)
                if q == p:
                    stab += 1
            for q in orbit:
                qcode = 0
                for v in q:
                    qcode = qcode * radix + v
                visited[qcode] = 1
            size = len(orbit)
            if size * stab != W.order:
                raise AssertionError("orbit-stabilizer identity violated")
            records.append(OrbitRecord(rep=p, size=size, stabilizer_order=stab))
        # advance the mixed-radix counter in lex order
        for i in range(d - 1, -1, -1):
            point[i] += 1
            if point[i] < radix:
                break
            point[i] = 0
    total = sum(r.size for r in records)
    if total != npoints:
        raise AssertionError("orbit sizes do not partition the hypercube")
    return OrbitTable(group=W, n=n, records=tuple(records))


def stabilizer_elements(W: PermGroup, point: Point) -> list[Permutation]:
    return [g for g in W.elements if apply_perm(g, point) == point]


def chi_orbit_filter(table: OrbitTable, chi: LinearCharacter) -> OrbitTable:
    """Mark each orbit whose stabilizers lie in the kernel of chi."""
    if chi.group != table.group:
        raise ValueError("character is defined on a different group")
    W = table.group
    records = []
    for rec in table.records:
        stab = stabilizer_elements(W, rec.rep)
        records.append(replace(rec, is_chi_orbit=chi.is_trivial_on(stab)))
    return replace(table, records=tuple(records))


def index_set_J(W: PermGroup, chi: LinearCharacter, n: int,
                caps: Caps = DEFAULT_CAPS) -> list[Point]:
    """Lex-sorted representatives of the chi-orbits on [0,n]^d."""
    table = chi_orbit_filter(enumerate_orbits(W, n, caps=caps), chi)
    return [rec.rep for rec in table.records if rec.is_chi_orbit]


def weighted_sum_g(W: PermGroup, chi: LinearCharacter, n: int,
                   caps: Caps = DEFAULT_CAPS) -> MonomialPoly:
    """g_n = sum of x_{j_1}...x_{j_d} over J(n, d, chi)."""
    nvars = n + 1
    terms: dict[tuple[int, ...], Cyclotomic] = {}
    for rep in index_set_J(W, chi, n, caps=caps):
        exps = [0] * nvars
        for j in rep:
            exps[j] += 1
        key = tuple(exps)
        prev = terms.get(key)
        terms[key] = Cyclotomic.one() if prev is None else prev + 1
    return MonomialPoly(nvars, terms)


def h_orbit_census(table: OrbitTable, H: PermGroup) -> OrbitTable:
    """Count H-orbits inside each W-orbit and check the index identity at the rep."""
    W = table.group
    if not H.is_subgroup_of(W):
        raise ValueError("H is not a subgroup of W")
    index_WH = W.order // H.order
    records = []
    for rec in table.records:
        orbit = sorted({apply_perm(g, rec.rep) for g in W.elements})
        remaining = set(orbit)
        lengths = []
        while remaining:
            seed = min(remaining)
            h_orbit = {apply_perm(h, seed) for h in H.elements}
            lengths.append(len(h_orbit))
            remaining -= h_orbit
        if len(set(lengths)) != 1:
            raise AssertionError(f"H-orbit lengths differ inside the orbit of {rec.rep}")
        tau, h_len = len(lengths), lengths[0]
        if tau * h_len != rec.size:
            raise AssertionError("H-orbits do not partition the W-orbit")
        # |G:H| |H:H_i| = |G:G_i| |G_i:H_i| at the representative
        stab = stabilizer_elements(W, rec.rep)
        h_stab_order = sum(1 for g in stab if g in H)
        lhs = index_WH * (H.order // h_stab_order)
        rhs = rec.size * (len(stab) // h_stab_order)
        if lhs != rhs:
            raise AssertionError(f"index identity fails at {rec.rep}")
        records.append(replace(rec, tau_H=tau, h_orbit_length=h_len))
    return replace(table, records=tuple(records))


def full_census(W: PermGroup, chi: LinearCharacter, n: int,
                caps: Caps = DEFAULT_CAPS) -> OrbitTable:
    """Orbit table annotated with both the chi-orbit flag and the kernel census."""
    from .characters import kernel

    table = chi_orbit_filter(enumerate_orbits(W, n, caps=caps), chi)
    return h_orbit_census(table, kernel(chi))


@dataclass(frozen=True)
class IdentityReport:
    lhs: MonomialPoly
    rhs: MonomialPoly
    equal: bool
    Z: PowerSumPoly


def verify_orbit_identity(W: PermGroup, chi: LinearCharacter, n: int,
                          caps: Caps = DEFAULT_CAPS) -> IdentityReport:
    """Compare the combinatorial g_n with the specialized cycle index."""
    lhs = weighted_sum_g(W, chi, n, caps=caps)
    Z = cycle_index(W, chi)
    rhs = specialize(Z, n, caps=caps)
    return IdentityReport(lhs=lhs, rhs=rhs, equal=lhs == rhs, Z=Z)


TSV_COLUMNS = ("rep", "size", "stab_order", "tau_H", "h_len", "chi_orbit")


def census_tsv(table: OrbitTable) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    for rec in table.records:
        lines.append("\t".join([
            ",".join(str(v) for v in rec.rep),
            str(rec.size),
            str(rec.stabilizer_order),
            "" if rec.tau_H is None else str(rec.tau_H),
            "" if rec.h_orbit_length is None else str(rec.h_orbit_length),
            "" if rec.is_chi_orbit is None else str(rec.is_chi_orbit).lower(),
        ]))
    return "\n".join(lines) + "\n"


def census_json(table: OrbitTable) -> str:
    payload = {
        "degree": table.degree,
        "n": table.n,
        "group_order": table.group.order,
        "orbits": [
            {
                "rep": list(rec.rep),
                "size": rec.size,
                "stab_order": rec.stabilizer_order,
                "tau_H": rec.tau_H,
                "h_len": rec.h_orbit_length,
                "chi_orbit": rec.is_chi_orbit,
            }
            for rec in table.records
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
