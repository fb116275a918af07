"""Sparse exact polynomials: cycle indices in power sums and their expansions.

PowerSumPoly lives in p_1..p_d with cyclotomic coefficients and is isobaric:
every exponent vector (c_1,...,c_d) satisfies sum(s * c_s) = weight.
MonomialPoly lives in x_0..x_n.  Term order for printing is reverse
lexicographic on padded exponent vectors, which is graded for the isobaric and
homogeneous polynomials produced here.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .caps import Caps, CapExceeded, DEFAULT_CAPS
from .characters import LinearCharacter
from .cyclo import Cyclotomic
from .perms import PermGroup, cycle_type


def _trim(exponents: Iterable[int]) -> tuple[int, ...]:
    exps = list(exponents)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


class PowerSumPoly:
    """Sparse isobaric polynomial in the power sums p_1, p_2, ..."""

    def __init__(self, weight: int, terms: Mapping[tuple[int, ...], Cyclotomic]):
        self.weight = weight
        clean: dict[tuple[int, ...], Cyclotomic] = {}
        for exps, coeff in terms.items():
            exps = _trim(exps)
            if not coeff:
                continue
            if sum(s * c for s, c in enumerate(exps, start=1)) != weight:
                raise ValueError(f"term {exps} is not isobaric of weight {weight}")
            clean[exps] = coeff
        self.terms = clean

    @staticmethod
    def unit() -> "PowerSumPoly":
        return PowerSumPoly(0, {(): Cyclotomic.one()})

    @staticmethod
    def zero(weight: int) -> "PowerSumPoly":
        return PowerSumPoly(weight, {})

    @staticmethod
    def single(weight: int) -> "PowerSumPoly":
        """The bare power sum p_weight."""
        exps = [0] * weight
        exps[weight - 1] = 1
        return PowerSumPoly(weight, {tuple(exps): Cyclotomic.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Iterable[int]) -> Cyclotomic:
        return self.terms.get(_trim(exps), Cyclotomic.zero())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Cyclotomic]]:
        width = max((len(e) for e in self.terms), default=0)
        return sorted(self.terms.items(),
                      key=lambda kv: kv[0] + (0,) * (width - len(kv[0])),
                      reverse=True)

    def __eq__(self, other):
        if not isinstance(other, PowerSumPoly):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def render_text(self) -> str:
        return _render(self.sorted_terms(), lambda e: _monomial_text(e, "p", offset=1))

    def to_json(self):
        return {
            "weight": self.weight,
            "terms": [{"exponents": list(exps), "coeff": coeff.to_json()}
                      for exps, coeff in self.sorted_terms()],
        }

    def __repr__(self):
        return f"PowerSumPoly({self.render_text() or '0'})"


class MonomialPoly:
    """Sparse polynomial in x_0, ..., x_{nvars-1}."""

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Cyclotomic]):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Cyclotomic] = {}
        for exps, coeff in terms.items():
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            if coeff:
                clean[tuple(exps)] = coeff
        self.terms = clean

    @staticmethod
    def zero(nvars: int) -> "MonomialPoly":
        return MonomialPoly(nvars, {})

    @staticmethod
    def one(nvars: int) -> "MonomialPoly":
        return MonomialPoly(nvars, {(0,) * nvars: Cyclotomic.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Iterable[int]) -> Cyclotomic:
        return self.terms.get(tuple(exps), Cyclotomic.zero())

    def add(self, other: "MonomialPoly") -> "MonomialPoly":
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            out[exps] = out.get(exps, Cyclotomic.zero()) + coeff
        return MonomialPoly(self.nvars, out)

    def scale(self, factor) -> "MonomialPoly":
        return MonomialPoly(self.nvars,
                            {e: c * factor for e, c in self.terms.items()})

    def mul(self, other: "MonomialPoly", caps: Caps = DEFAULT_CAPS) -> "MonomialPoly":
        if len(self.terms) * len(other.terms) > caps.specialize_terms:
            raise CapExceeded("monomial product exceeds the term cap")
        out: dict[tuple[int, ...], Cyclotomic] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                prev = out.get(key)
                out[key] = ca * cb if prev is None else prev + ca * cb
        return MonomialPoly(self.nvars, out)

    def substitute(self, assignments: Mapping[int, Fraction]) -> "MonomialPoly":
        """Replace the given variables by exact rational values."""
        out: dict[tuple[int, ...], Cyclotomic] = {}
        for exps, coeff in self.terms.items():
            factor = Fraction(1)
            new_exps = list(exps)
            for i, value in assignments.items():
                factor *= Fraction(value) ** exps[i]
                new_exps[i] = 0
            key = tuple(new_exps)
            add = coeff * factor
            prev = out.get(key)
            out[key] = add if prev is None else prev + add
        return MonomialPoly(self.nvars, out)

    def evaluate_all_ones(self) -> Cyclotomic:
        total = Cyclotomic.zero()
        for coeff in self.terms.values():
            total = total + coeff
        return total

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Cyclotomic]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __eq__(self, other):
        if not isinstance(other, MonomialPoly):
            return NotImplemented
        if self.nvars != other.nvars or self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def render_text(self) -> str:
        return _render(self.sorted_terms(), lambda e: _monomial_text(e, "x", offset=0))

    def to_json(self):
        return {
            "nvars": self.nvars,
            "terms": [{"exponents": list(exps), "coeff": coeff.to_json()}
                      for exps, coeff in self.sorted_terms()],
        }

    def __repr__(self):
        return f"MonomialPoly({self.render_text() or '0'})"


def _monomial_text(exps: tuple[int, ...], var: str, offset: int) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"{var}{i + offset}")
        elif e > 1:
            parts.append(f"{var}{i + offset}^{e}")
    return "*".join(parts)


def _coeff_text(coeff: Cyclotomic) -> str:
    if coeff.is_rational():
        q = coeff.as_rational()
        return str(q.numerator) if q.denominator == 1 else f"({q.numerator}/{q.denominator})"
    return f"({coeff})"


def _render(sorted_terms, monomial) -> str:
    pieces = []
    for exps, coeff in sorted_terms:
        mono = monomial(exps)
        negative = coeff.is_rational() and coeff.as_rational() < 0
        shown = -coeff if negative else coeff
        if not mono:
            body = _coeff_text(shown)
        elif shown == Cyclotomic.one():
            body = mono
        else:
            body = f"{_coeff_text(shown)}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces) if pieces else "0"


def cycle_index(G: PermGroup, chi: LinearCharacter) -> PowerSumPoly:
    """Generalized cycle index: |W|^-1 sum over sigma of chi(sigma) p^cycle_type(sigma)."""
    if chi.group != G:
        raise ValueError("character is defined on a different group")
    d = G.degree
    acc: dict[tuple[int, ...], Cyclotomic] = {}
    for sigma in G.elements:
        key = _trim(cycle_type(sigma))
        value = chi.value(sigma)
        prev = acc.get(key)
        acc[key] = value if prev is None else prev + value
    scale = Fraction(1, G.order)
    return PowerSumPoly(d, {k: v * scale for k, v in acc.items()})


def power_sum_in_vars(s: int, nvars: int) -> MonomialPoly:
    """p_s = x_0^s + ... + x_{n}^s in nvars = n+1 variables."""
    terms = {}
    for i in range(nvars):
        exps = [0] * nvars
        exps[i] = s
        terms[tuple(exps)] = Cyclotomic.one()
    return MonomialPoly(nvars, terms)


def specialize(Z: PowerSumPoly, n: int, caps: Caps = DEFAULT_CAPS) -> MonomialPoly:
    """Substitute p_s -> x_0^s + ... + x_n^s and expand exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    nvars = n + 1
    psums = {}
    result = MonomialPoly.zero(nvars)
    for exps, coeff in Z.sorted_terms():
        prod = MonomialPoly.one(nvars)
        for s, c in enumerate(exps, start=1):
            if c:
                if s not in psums:
                    psums[s] = power_sum_in_vars(s, nvars)
                for _ in range(c):
                    prod = prod.mul(psums[s], caps=caps)
        result = result.add(prod.scale(coeff))
    if not is_symmetric(result):
        raise AssertionError("specialized cycle index is not symmetric")
    return result


def psum_mul(A: PowerSumPoly, B: PowerSumPoly) -> PowerSumPoly:
    out: dict[tuple[int, ...], Cyclotomic] = {}
    for ea, ca in A.terms.items():
        for eb, cb in B.terms.items():
            width = max(len(ea), len(eb))
            key = tuple((ea[i] if i < len(ea) else 0) + (eb[i] if i < len(eb) else 0)
                        for i in range(width))
            add = ca * cb
            prev = out.get(key)
            out[key] = add if prev is None else prev + add
    return PowerSumPoly(A.weight + B.weight, out)


def psum_sub(A: PowerSumPoly, B: PowerSumPoly) -> PowerSumPoly:
    if A.weight != B.weight:
        raise ValueError(f"weight mismatch: {A.weight} != {B.weight}")
    out = dict(A.terms)
    for exps, coeff in B.terms.items():
        prev = out.get(exps)
        out[exps] = -coeff if prev is None else prev - coeff
    return PowerSumPoly(A.weight, out)


def psum_reindex(Z: PowerSumPoly, s: int) -> PowerSumPoly:
    """p_k -> p_{ks} inside Z, giving an isobaric polynomial of weight s * Z.weight."""
    out: dict[tuple[int, ...], Cyclotomic] = {}
    for exps, coeff in Z.terms.items():
        new = [0] * (len(exps) * s)
        for k, c in enumerate(exps, start=1):
            if c:
                new[k * s - 1] = c
        out[tuple(new)] = coeff
    return PowerSumPoly(Z.weight * s, out)


def plethysm_insert(Z_outer: PowerSumPoly, Z_inner: PowerSumPoly) -> PowerSumPoly:
    """Insertion: substitute p_s -> Z_inner(p_s, p_2s, ..., p_rs) inside Z_outer."""
    d, r = Z_outer.weight, Z_inner.weight
    inserted = {s: psum_reindex(Z_inner, s) for s in range(1, d + 1)}
    result = PowerSumPoly.zero(d * r)
    for exps, coeff in Z_outer.sorted_terms():
        prod = PowerSumPoly.unit()
        for s, c in enumerate(exps, start=1):
            for _ in range(c):
                prod = psum_mul(prod, inserted[s])
        scaled = PowerSumPoly(prod.weight, {e: c * coeff for e, c in prod.terms.items()})
        result = _psum_add(result, scaled)
    return result


def _psum_add(A: PowerSumPoly, B: PowerSumPoly) -> PowerSumPoly:
    out = dict(A.terms)
    for exps, coeff in B.terms.items():
        prev = out.get(exps)
        out[exps] = coeff if prev is None else prev + coeff
    return PowerSumPoly(A.weight, out)


def elementary_symmetric(d: int, n: int) -> MonomialPoly:
    """e_d in the n+1 variables x_0..x_n; zero when d > n+1."""
    nvars = n + 1
    terms = {}
    for subset in combinations(range(nvars), d):
        exps = [0] * nvars
        for i in subset:
            exps[i] = 1
        terms[tuple(exps)] = Cyclotomic.one()
    return MonomialPoly(nvars, terms)


def is_symmetric(P: MonomialPoly) -> bool:
    """Invariance under every adjacent transposition of the variables."""
    for i in range(P.nvars - 1):
        for exps, coeff in P.terms.items():
            swapped = list(exps)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if P.coefficient(swapped) != coeff:
                return False
    return True
