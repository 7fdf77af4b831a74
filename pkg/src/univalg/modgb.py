"""Groebner bases for submodules of free modules over a polynomial ring.

The term order is position-over-term: terms are compared first by free-module
position (lower index wins) and then by the ring's monomial order.  Folding the
generators of a ring ideal into every position makes the resulting normal forms
canonical representatives over the quotient ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .poly import (
    DEFAULT_PAIR_BUDGET,
    GroebnerBasis,
    Monomial,
    PolyRing,
    Polynomial,
    ResourceBudgetError,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class FreeModule:
    ring: PolyRing
    rank: int

    def zero(self) -> "ModuleVector":
        return ModuleVector(self, {})

    def basis_vector(self, pos: int) -> "ModuleVector":
        return ModuleVector(self, {pos: self.ring.one()})

    def from_components(self, comps: dict[int, Polynomial]) -> "ModuleVector":
        return ModuleVector(self, comps)


class ModuleVector:
    """Element of a free module; ``components`` maps positions to nonzero
    polynomials."""

    __slots__ = ("module", "components")

    def __init__(self, module: FreeModule, components: dict[int, Polynomial]):
        self.module = module
        self.components = {p: q for p, q in components.items() if not q.is_zero()}

    def is_zero(self) -> bool:
        return not self.components

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        comps = dict(self.components)
        for p, q in other.components.items():
            comps[p] = comps[p] + q if p in comps else q
        return ModuleVector(self.module, comps)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        comps = dict(self.components)
        for p, q in other.components.items():
            comps[p] = comps[p] - q if p in comps else -q
        return ModuleVector(self.module, comps)

    def __neg__(self) -> "ModuleVector":
        return ModuleVector(self.module, {p: -q for p, q in self.components.items()})

    def scale(self, c: Fraction) -> "ModuleVector":
        return ModuleVector(
            self.module, {p: q.scale(c) for p, q in self.components.items()}
        )

    def poly_mul(self, f: Polynomial) -> "ModuleVector":
        return ModuleVector(
            self.module, {p: q * f for p, q in self.components.items()}
        )

    def mul_term(self, m: Monomial, c: Fraction) -> "ModuleVector":
        return ModuleVector(
            self.module, {p: q.mul_term(m, c) for p, q in self.components.items()}
        )

    def lead(self) -> tuple[int, Monomial]:
        """Lead term position and monomial under position-over-term."""
        pos = min(self.components)
        return pos, self.components[pos].lead_monomial()

    def lead_coeff(self) -> Fraction:
        pos, mono = self.lead()
        return self.components[pos].terms[mono]

    def monic(self) -> "ModuleVector":
        if self.is_zero():
            return self
        return self.scale(ONE / self.lead_coeff())

    def __eq__(self, other):
        return (
            isinstance(other, ModuleVector)
            and self.module == other.module
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.module, frozenset(
            (p, frozenset(q.terms.items())) for p, q in self.components.items()
        )))

    def __repr__(self):
        from .poly import render

        if self.is_zero():
            return "ModuleVector(0)"
        parts = [f"({render(q)})*e{p + 1}" for p, q in sorted(self.components.items())]
        return "ModuleVector(" + " + ".join(parts) + ")"


@dataclass(frozen=True)
class ModuleGroebnerBasis:
    module: FreeModule
    generators: tuple[ModuleVector, ...]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _sort_key(module: FreeModule):
    okey = module.ring.order.key

    def key(term: tuple[int, Monomial]):
        pos, mono = term
        return (-pos, okey(mono))  # lower position and larger monomial = larger

    return key


def _reduce_vector(v: ModuleVector, basis: list[ModuleVector]) -> ModuleVector:
    """Full reduction: no term of the result is divisible by any basis lead."""
    module = v.module
    by_pos: dict[int, list[tuple[Monomial, Fraction, ModuleVector]]] = {}
    for g in basis:
        lpos, lmono = g.lead()
        by_pos.setdefault(lpos, []).append((lmono, g.lead_coeff(), g))
    key = _sort_key(module)
    remainder: dict[int, dict[Monomial, Fraction]] = {}
    work: dict[tuple[int, Monomial], Fraction] = {}
    for p, q in v.components.items():
        for m, c in q.terms.items():
            work[(p, m)] = c
    while work:
        term = max(work, key=key)
        c = work.pop(term)
        if not c:
            continue
        pos, mono = term
        for lmono, lc, g in by_pos.get(pos, ()):
            if mono_divides(lmono, mono):
                qmono = mono_div(mono, lmono)
                factor = c / lc
                for gp, gq in g.components.items():
                    for gm, gc in gq.terms.items():
                        t = (gp, mono_mul(gm, qmono))
                        if t == term:
                            continue
                        work[t] = work.get(t, ZERO) - factor * gc
                break
        else:
            remainder.setdefault(pos, {})[mono] = (
                remainder.get(pos, {}).get(mono, ZERO) + c
            )
    ring = module.ring
    return ModuleVector(
        module, {p: Polynomial(ring, ts) for p, ts in remainder.items()}
    )


def module_normal_form(v: ModuleVector, mgb: ModuleGroebnerBasis) -> ModuleVector:
    if v.module != mgb.module:
        raise ValueError("vector and module basis live in different free modules")
    return _reduce_vector(v, list(mgb.generators))


def _s_vector(f: ModuleVector, g: ModuleVector) -> ModuleVector:
    (pf, mf), (pg, mg) = f.lead(), g.lead()
    assert pf == pg
    lcm = mono_lcm(mf, mg)
    return f.mul_term(mono_div(lcm, mf), ONE / f.lead_coeff()) - g.mul_term(
        mono_div(lcm, mg), ONE / g.lead_coeff()
    )


def module_buchberger(
    gens: Iterable[ModuleVector],
    ring_ideal: GroebnerBasis | None,
    module: FreeModule,
    budget: int = DEFAULT_PAIR_BUDGET,
) -> ModuleGroebnerBasis:
    """Reduced Groebner basis of the submodule generated by ``gens`` together
    with j*e_p for every ring-ideal generator j and position p."""
    basis = [g.monic() for g in gens if not g.is_zero()]
    ring_tagged: set[int] = set()
    if ring_ideal is not None:
        for j in ring_ideal.generators:
            for p in range(module.rank):
                ring_tagged.add(len(basis))
                basis.append(ModuleVector(module, {p: j}))
    # Pairs of two ring-ideal copies at the same position are skipped: their
    # S-vector is a ring S-polynomial times a basis vector, which reduces to
    # zero against the ring basis copies because that basis is already
    # confluent.
    pairs = {
        (i, j)
        for i in range(len(basis))
        for j in range(i)
        if basis[i].lead()[0] == basis[j].lead()[0]
        and not (i in ring_tagged and j in ring_tagged)
    }
    key = _sort_key(module)
    processed = 0
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: key(
                (
                    basis[ij[0]].lead()[0],
                    mono_lcm(basis[ij[0]].lead()[1], basis[ij[1]].lead()[1]),
                )
            ),
        )
        pairs.discard((i, j))
        processed += 1
        if processed > budget:
            raise ResourceBudgetError(
                f"S-pair budget of {budget} exceeded in module_buchberger"
            )
        r = _reduce_vector(_s_vector(basis[i], basis[j]), basis)
        if not r.is_zero():
            k = len(basis)
            basis.append(r.monic())
            pairs.update(
                (k, t) for t in range(k) if basis[t].lead()[0] == r.lead()[0]
            )
    return _interreduce_module(module, basis)


def _interreduce_module(
    module: FreeModule, basis: list[ModuleVector]
) -> ModuleGroebnerBasis:
    leads = [g.lead() for g in basis]
    kept: list[ModuleVector] = []
    for idx, g in enumerate(basis):
        pos, mono = leads[idx]
        redundant = any(
            other != idx
            and leads[other][0] == pos
            and mono_divides(leads[other][1], mono)
            and (leads[other][1] != mono or other < idx)
            for other in range(len(basis))
        )
        if not redundant:
            kept.append(g)
    reduced: list[ModuleVector] = []
    for idx, g in enumerate(kept):
        others = kept[:idx] + kept[idx + 1 :]
        r = _reduce_vector(g, others)
        if not r.is_zero():
            reduced.append(r.monic())
    key = _sort_key(module)
    reduced.sort(key=lambda g: key(g.lead()))
    return ModuleGroebnerBasis(module, tuple(reduced))
