"""Exact verification of the averaging projector on monomial modules.

The module basis is indexed by the points of [0,n]^d; the group acts by
permuting points, twisted by an optional cocycle family gamma.  Matrices are
kept as sparse columns of cyclotomic entries; rank uses division-free exact
elimination (rows are rescaled by pivots, which preserves rank over a field).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .caps import Caps, CapExceeded, DEFAULT_CAPS
from .characters import LinearCharacter, enumerate_linear_characters
from .cyclo import Cyclotomic
from .orbits import apply_perm
from .perms import PermGroup, Permutation, compose

Column = dict[int, Cyclotomic]


class MonomialModule:
    """Basis v_i over the points i of [0,n]^d with the twisted permutation action."""

    def __init__(self, group: PermGroup, n: int,
                 gamma: dict[tuple[int, int], Cyclotomic] | None = None,
                 caps: Caps = DEFAULT_CAPS):
        self.group = group
        self.n = n
        self.d = group.degree
        self.dim = (n + 1) ** self.d
        if self.dim > caps.projector_dim:
            raise CapExceeded(f"dimension {self.dim} exceeds cap {caps.projector_dim}")
        self.points = list(iter_product(range(n + 1), repeat=self.d))
        self._point_index = {p: i for i, p in enumerate(self.points)}
        self.gamma = gamma
        # point_map[g][i] = index of g . point_i
        self.point_map = [
            [self._point_index[apply_perm(g, p)] for p in self.points]
            for g in group.elements
        ]
        if gamma is not None:
            self.validate_cocycle()
        self.validate_representation()

    def index(self, point) -> int:
        return self._point_index[tuple(point)]

    def gamma_value(self, gi: int, i: int) -> Cyclotomic:
        if self.gamma is None:
            return Cyclotomic.one()
        return self.gamma[(gi, i)]

    def matrix(self, g: Permutation) -> "SparseMatrix":
        """The action of g: column i has the single entry gamma_i(g) at row g.i."""
        gi = self.group.index(g)
        cols: list[Column] = []
        for i in range(self.dim):
            cols.append({self.point_map[gi][i]: self.gamma_value(gi, i)})
        return SparseMatrix(self.dim, cols)

    def validate_cocycle(self) -> None:
        """gamma_i(gh) = gamma_{h.i}(g) gamma_i(h) for all g, h, i (exhaustive)."""
        G = self.group
        for a, g in enumerate(G.elements):
            for b, h in enumerate(G.elements):
                gh = G.index(compose(g, h))
                for i in range(self.dim):
                    hi = self.point_map[b][i]
                    if self.gamma_value(gh, i) != self.gamma_value(a, hi) * self.gamma_value(b, i):
                        raise ValueError(f"cocycle law fails at (g={g!r}, h={h!r}, i={i})")

    def validate_representation(self) -> None:
        """matrix(g) matrix(h) = matrix(gh) on the group generators."""
        for g in self.group.generators:
            for h in self.group.generators:
                lhs = self.matrix(g).matmul(self.matrix(h))
                if lhs != self.matrix(compose(g, h)):
                    raise ValueError(f"monomial action is not a representation at ({g!r}, {h!r})")

    def qualifying_indices(self, alpha: LinearCharacter) -> list[int]:
        """I(M, alpha): points whose stabilizer satisfies gamma_i = alpha^-1."""
        out = []
        trivial_gamma = self.gamma is None
        for i in range(self.dim):
            ok = True
            for gi, g in enumerate(self.group.elements):
                if self.point_map[gi][i] == i:
                    if trivial_gamma:
                        if alpha.exponent(g) != 0:
                            ok = False
                            break
                    elif self.gamma_value(gi, i) * alpha.value(g) != Cyclotomic.one():
                        ok = False
                        break
            if ok:
                out.append(i)
        return out

    def orbit_transversal(self) -> tuple[list[int], dict[int, int], dict[int, int]]:
        """Lex-min orbit reps, a rep index per point, and a transversal element per point."""
        reps: list[int] = []
        rep_of: dict[int, int] = {}
        via: dict[int, int] = {}  # point -> group element index with g . rep = point
        for i in range(self.dim):
            if i in rep_of:
                continue
            reps.append(i)
            for gi in range(self.group.order):
                j = self.point_map[gi][i]
                if j not in rep_of:
                    rep_of[j] = i
                    via[j] = gi
        return reps, rep_of, via


class SparseMatrix:
    """Square matrix stored as sparse columns."""

    def __init__(self, dim: int, cols: list[Column]):
        self.dim = dim
        self.cols = [{r: v for r, v in col.items() if v} for col in cols]

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def entry(self, row: int, col: int) -> Cyclotomic:
        return self.cols[col].get(row, Cyclotomic.zero())

    def trace(self) -> Cyclotomic:
        total = Cyclotomic.zero()
        for i, col in enumerate(self.cols):
            v = col.get(i)
            if v is not None:
                total = total + v
        return total

    def apply(self, vector: Column) -> Column:
        out: Column = {}
        for col_idx, coeff in vector.items():
            for row, value in self.cols[col_idx].items():
                add = coeff * value
                prev = out.get(row)
                new = add if prev is None else prev + add
                if new:
                    out[row] = new
                elif prev is not None:
                    del out[row]
        return out

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        return SparseMatrix(self.dim, [self.apply(col) for col in other.cols])

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if self.dim != other.dim:
            return False
        for a, b in zip(self.cols, other.cols):
            if a.keys() != b.keys():
                return False
            if any(a[r] != b[r] for r in a):
                return False
        return True

    __hash__ = None

    def rank(self) -> int:
        return rank_of_columns(self.cols)


def rank_of_columns(columns: list[Column]) -> int:
    """Exact rank by division-free elimination; pivot on the first nonzero row."""
    pivots: dict[int, Column] = {}  # pivot row -> reduced column
    rank = 0
    for col in columns:
        work = dict(col)
        while work:
            lead = min(work)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = work
                rank += 1
                break
            # work <- pivot[lead] * work - work[lead] * pivot
            scale_w, scale_p = pivot[lead], work[lead]
            merged: Column = {}
            for r, v in work.items():
                merged[r] = scale_w * v
            for r, v in pivot.items():
                sub = scale_p * v
                prev = merged.get(r)
                new = -sub if prev is None else prev - sub
                if new:
                    merged[r] = new
                elif prev is not None:
                    del merged[r]
            work = merged
    return rank


def build_projector(M: MonomialModule, alpha: LinearCharacter) -> SparseMatrix:
    """a_alpha = |G|^-1 sum over g of alpha(g) g, as a matrix in the v_i basis."""
    G = M.group
    scale = Fraction(1, G.order)
    cols: list[Column] = [{} for _ in range(M.dim)]
    for gi, g in enumerate(G.elements):
        weight = alpha.value(g) * scale
        pm = M.point_map[gi]
        for i in range(M.dim):
            row = pm[i]
            add = weight * M.gamma_value(gi, i)
            col = cols[i]
            prev = col.get(row)
            new = add if prev is None else prev + add
            if new:
                col[row] = new
            elif prev is not None:
                del col[row]
    return SparseMatrix(M.dim, cols)


def check_idempotent(A: SparseMatrix) -> bool:
    return A.matmul(A) == A


def check_annihilation(M: MonomialModule, alpha: LinearCharacter,
                       A: SparseMatrix | None = None) -> bool:
    """Columns outside I(M, alpha) vanish, and a_alpha g = alpha(g)^-1 a_alpha.

    The intertwining relation is checked on generators, which extends to the
    whole group multiplicatively; it makes every difference alpha^-1(g) z - g z
    a kernel element.
    """
    if A is None:
        A = build_projector(M, alpha)
    qualifying = set(M.qualifying_indices(alpha))
    for i in range(M.dim):
        if i not in qualifying and A.cols[i]:
            return False
    for g in M.group.generators:
        gi = M.group.index(g)
        inv_value = alpha.inverse_value(g)
        for i in range(M.dim):
            twisted = {r: M.gamma_value(gi, i) * v
                       for r, v in A.cols[M.point_map[gi][i]].items()}
            expected = {r: inv_value * v for r, v in A.cols[i].items()}
            if twisted.keys() != expected.keys():
                return False
            if any(twisted[r] != expected[r] for r in twisted):
                return False
    return True


@dataclass(frozen=True)
class BasisReport:
    group_order: int
    n: int
    d: int
    dim: int
    trace: Fraction
    rank: int
    J_size: int
    idempotent: bool
    annihilation_ok: bool
    independent: bool
    kernel_ok: bool
    ok: bool

    def to_json(self):
        return {
            "group_order": self.group_order,
            "n": self.n,
            "d": self.d,
            "dim": self.dim,
            "trace": {"num": str(self.trace.numerator), "den": str(self.trace.denominator)},
            "rank": self.rank,
            "J_size": self.J_size,
            "idempotent": self.idempotent,
            "annihilation_ok": self.annihilation_ok,
            "independent": self.independent,
            "kernel_ok": self.kernel_ok,
            "ok": self.ok,
        }


def verify_basis_prop(M: MonomialModule, alpha: LinearCharacter) -> BasisReport:
    """Rank, trace, |J| and the basis statements for the projector a_alpha."""
    A = build_projector(M, alpha)
    idempotent = check_idempotent(A)
    annihilation_ok = check_annihilation(M, alpha, A=A)
    trace = A.trace().as_rational()
    rank = A.rank()

    qualifying = set(M.qualifying_indices(alpha))
    reps, rep_of, via = M.orbit_transversal()
    J = [i for i in reps if i in qualifying]
    J0 = [i for i in reps if i not in qualifying]

    image_cols = [A.cols[j] for j in J]
    independent = rank_of_columns(image_cols) == len(J)

    # families (1.2.4) and (1.2.5): differences along the transversal plus the
    # excluded representatives; they must lie in ker a_alpha and span dim - |J|
    kernel_cols: list[Column] = []
    kernel_ok = True
    for i in range(M.dim):
        rep = rep_of[i]
        if i == rep:
            continue
        gi = via[i]
        g = M.group.elements[gi]
        factor = alpha.value(g) * M.gamma_value(gi, rep)
        kernel_cols.append({rep: Cyclotomic.one(), i: -factor})
    for i in J0:
        kernel_cols.append({i: Cyclotomic.one()})
    for vec in kernel_cols:
        if A.apply(vec):
            kernel_ok = False
            break
    if kernel_ok:
        kernel_ok = rank_of_columns(kernel_cols) == M.dim - len(J)

    ok = (idempotent and annihilation_ok and independent and kernel_ok
          and rank == len(J) and trace == len(J))
    return BasisReport(
        group_order=M.group.order, n=M.n, d=M.d, dim=M.dim,
        trace=trace, rank=rank, J_size=len(J),
        idempotent=idempotent, annihilation_ok=annihilation_ok,
        independent=independent, kernel_ok=kernel_ok, ok=ok,
    )


def random_gamma_family(W: PermGroup, n: int, seed: int,
                        caps: Caps = DEFAULT_CAPS) -> MonomialModule:
    """A valid random cocycle family, built orbit by orbit.

    Each orbit gets arbitrary root-of-unity values on a transversal and a
    linear character of the representative's stabilizer; transporting them
    through the orbit satisfies the cocycle law by construction (the law is
    still validated exhaustively when the module is assembled).
    """
    rng = random.Random(seed)
    base = MonomialModule(W, n, caps=caps)
    transversal_order = 12
    gamma: dict[tuple[int, int], Cyclotomic] = {}
    reps, rep_of, via = base.orbit_transversal()
    for rep in reps:
        members = [i for i in range(base.dim) if rep_of[i] == rep]
        stab_elems = [g for gi, g in enumerate(W.elements)
                      if base.point_map[gi][rep] == rep]
        stab = PermGroup.from_elements(stab_elems)
        stab_chars = enumerate_linear_characters(stab, caps=caps)
        lam = stab_chars[rng.randrange(len(stab_chars))]
        u_exp = {i: (0 if i == rep else rng.randrange(transversal_order))
                 for i in members}
        for i in members:
            g_i = W.elements[via[i]]
            for gj, g in enumerate(W.elements):
                target = base.point_map[gj][i]
                g_t = W.elements[via[target]]
                inner = compose(compose(g_t.inverse(), g), g_i)
                if base.point_map[W.index(inner)][rep] != rep:
                    raise AssertionError("transversal transport left the stabilizer")
                value = (Cyclotomic.root_of_unity(transversal_order,
                                                  u_exp[target] - u_exp[i])
                         * lam.value(inner))
                gamma[(gj, i)] = value
    return MonomialModule(W, n, gamma=gamma, caps=caps)
