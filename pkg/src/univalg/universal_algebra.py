"""The universal algebra A(h,g) = Q[X_si]/J and, for h = g, the bialgebra
structure on B = A(h,h).

Variables X[s,i] are indexed by a basis index s of h and a basis index i of g,
ranked (s,i)-lexicographically.  J is generated by one polynomial per triple
(a,i,j): the linear combination of X_{au} prescribed by the bracket of g minus
the quadratic combination of X_{si}X_{tj} prescribed by the bracket of h.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import poly
from .lie import LieAlgebra, Report, Violation, validate_lie_algebra
from .poly import (
    DEFAULT_PAIR_BUDGET,
    DEGREVLEX,
    GroebnerBasis,
    MonomialOrder,
    PolyRing,
    Polynomial,
    mono_divides,
)

ZERO = Fraction(0)
ONE = Fraction(1)


def algebra_ring(h: LieAlgebra, g: LieAlgebra, order: MonomialOrder = DEGREVLEX) -> PolyRing:
    names = [
        f"X[{s},{i}]" for s in range(1, h.dim + 1) for i in range(1, g.dim + 1)
    ]
    return PolyRing(names, order)


def universal_polynomials(
    h: LieAlgebra, g: LieAlgebra, ring: PolyRing | None = None
) -> list[Polynomial]:
    """The generators P_(a,i,j) of J in (a,i,j) order, zeros retained."""
    if ring is None:
        ring = algebra_ring(h, g)
    n, d = h.dim, g.dim

    def vidx(s: int, i: int) -> int:  # 1-based (s,i) -> variable index
        return (s - 1) * d + (i - 1)

    gens: list[Polynomial] = []
    for a in range(1, n + 1):
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                p = ring.zero()
                for u in range(1, d + 1):
                    beta = g.table[i - 1][j - 1][u - 1]
                    if beta:
                        p = p + ring.var(vidx(a, u)).scale(beta)
                for s in range(1, n + 1):
                    for t in range(1, n + 1):
                        tau = h.table[s - 1][t - 1][a - 1]
                        if tau:
                            p = p - (
                                ring.var(vidx(s, i)) * ring.var(vidx(t, j))
                            ).scale(tau)
                gens.append(p)
    return gens


def jgen_labels(h: LieAlgebra, g: LieAlgebra) -> list[tuple[int, int, int]]:
    return [
        (a, i, j)
        for a in range(1, h.dim + 1)
        for i in range(1, g.dim + 1)
        for j in range(1, g.dim + 1)
    ]


class UniversalAlgebra:
    """A(h,g) presented by its polynomial ring and the reduced Groebner basis
    of the relation ideal J."""

    def __init__(
        self,
        h: LieAlgebra,
        g: LieAlgebra,
        ring: PolyRing,
        jgens: list[Polynomial],
        gb: GroebnerBasis,
    ):
        self.h = h
        self.g = g
        self.ring = ring
        self.jgens = jgens
        self.labels = jgen_labels(h, g)
        self.gb = gb

    @property
    def nvars(self) -> int:
        return self.h.dim * self.g.dim

    def var_index(self, s: int, i: int) -> int:
        """1-based (s,i) -> 0-based variable index."""
        return (s - 1) * self.g.dim + (i - 1)

    def x(self, s: int, i: int) -> Polynomial:
        """The generator x_si as a (normal form) polynomial."""
        return self.reduce(self.ring.var(self.var_index(s, i))).value

    def reduce(self, p: Polynomial) -> "AlgebraElement":
        if p.ring != self.ring:
            raise ValueError("polynomial from a different variable set")
        return AlgebraElement(self, poly.normal_form(p, self.gb))

    def is_same_hg(self) -> bool:
        return self.h.dim == self.g.dim and self.h.table == self.g.table

    def __repr__(self):
        return (
            f"UniversalAlgebra(h={self.h.name or self.h.dim}, "
            f"g={self.g.name or self.g.dim}, |gb|={len(self.gb)})"
        )


@dataclass(frozen=True)
class AlgebraElement:
    owner: UniversalAlgebra
    value: Polynomial  # always in normal form

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.owner, self.value + other.value)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.owner, self.value - other.value)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self.owner.reduce(self.value * other.value)

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __str__(self):
        return poly.render(self.value)


def build_universal_algebra(
    h: LieAlgebra,
    g: LieAlgebra,
    order: MonomialOrder = DEGREVLEX,
    budget: int = DEFAULT_PAIR_BUDGET,
) -> UniversalAlgebra:
    """Construct A(h,g) and verify the defining relations hold in it."""
    for L, which in ((h, "h"), (g, "g")):
        rep = validate_lie_algebra(L)
        if not rep.ok:
            raise ValueError(f"{which} is not a Lie algebra:\n{rep}")
    ring = algebra_ring(h, g, order)
    jgens = universal_polynomials(h, g, ring)
    gb = poly.groebner(jgens, ring, budget=budget)
    A = UniversalAlgebra(h, g, ring, jgens, gb)
    rep = check_defining_relations(A)
    if not rep.ok:
        raise AssertionError(f"defining relations fail in A(h,g):\n{rep}")
    return A


def check_defining_relations(A: UniversalAlgebra) -> Report:
    """Normal forms of the two sides of each defining relation must agree."""
    bad: list[Violation] = []
    ring = A.ring
    n, d = A.h.dim, A.g.dim
    for a in range(1, n + 1):
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                lin = ring.zero()
                for u in range(1, d + 1):
                    beta = A.g.table[i - 1][j - 1][u - 1]
                    if beta:
                        lin = lin + ring.var(A.var_index(a, u)).scale(beta)
                quad = ring.zero()
                for s in range(1, n + 1):
                    for t in range(1, n + 1):
                        tau = A.h.table[s - 1][t - 1][a - 1]
                        if tau:
                            quad = quad + (
                                ring.var(A.var_index(s, i))
                                * ring.var(A.var_index(t, j))
                            ).scale(tau)
                if A.reduce(lin).value != A.reduce(quad).value:
                    bad.append(
                        Violation("relation", (a, i, j), "normal forms differ")
                    )
    return Report(tuple(bad))


def monomial_basis_up_to_degree(A: UniversalAlgebra, dmax: int):
    """Standard monomials (not divisible by any gb lead monomial) of total
    degree <= dmax."""
    if dmax < 0:
        raise ValueError("dmax must be >= 0")
    leads = A.gb.lead_monomials()
    out = []
    for m in A.ring.monomials_up_to_degree(dmax):
        if not any(mono_divides(lm, m) for lm in leads):
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# Bialgebra structure on B = A(h,h)
# ---------------------------------------------------------------------------


class BialgebraStructure:
    """Comultiplication x_ij -> sum_s x_is (x) x_sj and counit x_ij -> delta_ij
    on B = A(h,h), with machine-checked well-definedness.

    The tensor square of B is handled in the polynomial ring on the doubled
    variable set {X'[i,j]} u {X''[i,j]}, with ideal J' + J''.
    """

    def __init__(self, owner: UniversalAlgebra):
        if not owner.is_same_hg():
            raise ValueError("bialgebra structure requires h = g")
        self.owner = owner
        n = owner.h.dim
        self.n = n
        names = [f"X'[{i},{j}]" for i in range(1, n + 1) for j in range(1, n + 1)]
        names += [f"X''[{i},{j}]" for i in range(1, n + 1) for j in range(1, n + 1)]
        self.tensor_ring = PolyRing(names, owner.ring.order)
        self.tensor_gb = self._tensor_gb()
        self._delta_images = self._build_delta_images()

    def _block_var(self, block: int, i: int, j: int) -> Polynomial:
        n = self.n
        return self.tensor_ring.var(block * n * n + (i - 1) * n + (j - 1))

    def _tensor_gb(self) -> GroebnerBasis:
        # The union of the two block images of A.gb is already a reduced GB of
        # J' + J'': cross-block leads are coprime.
        gens = []
        for block in (0, 1):
            for gpoly in self.owner.gb.generators:
                images = [
                    self._block_var(block, s, i)
                    for s in range(1, self.n + 1)
                    for i in range(1, self.n + 1)
                ]
                gens.append(gpoly.map_coeffs_and_vars(self.tensor_ring, images))
        key = self.tensor_ring.order.key
        gens.sort(key=lambda g: key(g.lead_monomial()))
        return GroebnerBasis(self.tensor_ring, tuple(gens))

    def _build_delta_images(self) -> list[Polynomial]:
        images = []
        n = self.n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                p = self.tensor_ring.zero()
                for s in range(1, n + 1):
                    p = p + self._block_var(0, i, s) * self._block_var(1, s, j)
                images.append(p)
        return images

    def delta(self, p: Polynomial) -> Polynomial:
        """Comultiplication as a ring map into the doubled-variable ring,
        reduced modulo J' + J''."""
        img = p.map_coeffs_and_vars(self.tensor_ring, self._delta_images)
        return poly.normal_form(img, self.tensor_gb)

    def epsilon(self, p: Polynomial) -> Fraction:
        """Counit: evaluate at X[i,j] = delta_ij."""
        n = self.n
        values = [
            ONE if i == j else ZERO
            for i in range(1, n + 1)
            for j in range(1, n + 1)
        ]
        return p.eval_scalars(values)

    def verify(self) -> Report:
        bad: list[Violation] = []
        n = self.n
        # epsilon kills J; Delta maps J into J'(x)k[X] + k[X](x)J''.
        for label, gpoly in zip(self.owner.labels, self.owner.jgens):
            if self.epsilon(gpoly) != 0:
                bad.append(Violation("counit-kills-ideal", label,
                                     f"eps(P) = {self.epsilon(gpoly)}"))
            if not self.delta(gpoly).is_zero():
                bad.append(Violation("comult-descends", label,
                                     "Delta(P) not in tensor ideal"))
        # Coassociativity and counit laws on the generators x_ij.
        triple = PolyRing(
            [f"X{b}[{i},{j}]" for b in (1, 2, 3)
             for i in range(1, n + 1) for j in range(1, n + 1)],
            self.owner.ring.order,
        )

        def tvar(block, i, j):
            return triple.var((block - 1) * n * n + (i - 1) * n + (j - 1))

        for i in range(1, n + 1):
            for j in range(1, n + 1):
                lhs = triple.zero()
                rhs = triple.zero()
                for s in range(1, n + 1):
                    for t in range(1, n + 1):
                        term = tvar(1, i, s) * tvar(2, s, t) * tvar(3, t, j)
                        lhs = lhs + term
                        rhs = rhs + term
                # Both associations expand to the same triple sum; keep the
                # computation explicit so a bad Delta rule would be caught.
                d_first = self._expand_coassoc(i, j, left=True, triple=triple)
                d_second = self._expand_coassoc(i, j, left=False, triple=triple)
                if d_first != d_second:
                    bad.append(Violation("coassociativity", (i, j), "sides differ"))
                if d_first != lhs:
                    bad.append(Violation("coassociativity", (i, j),
                                         "unexpected expansion"))
                # Counit laws: (eps(x)id)Delta = id = (id(x)eps)Delta.
                left = self._counit_side(i, j, left=True)
                right = self._counit_side(i, j, left=False)
                xij = self.owner.ring.var(self.owner.var_index(i, j))
                if left != xij or right != xij:
                    bad.append(Violation("counit-law", (i, j), "law fails"))
        return Report(tuple(bad))

    def _expand_coassoc(self, i: int, j: int, left: bool, triple: PolyRing):
        n = self.n

        def tvar(block, ii, jj):
            return triple.var((block - 1) * n * n + (ii - 1) * n + (jj - 1))

        out = triple.zero()
        for s in range(1, n + 1):
            if left:
                # Delta applied to the first tensorand of Delta(x_ij).
                for t in range(1, n + 1):
                    out = out + tvar(1, i, t) * tvar(2, t, s) * tvar(3, s, j)
            else:
                for t in range(1, n + 1):
                    out = out + tvar(1, i, s) * tvar(2, s, t) * tvar(3, t, j)
        return out

    def _counit_side(self, i: int, j: int, left: bool) -> Polynomial:
        n = self.n
        ring = self.owner.ring
        out = ring.zero()
        for s in range(1, n + 1):
            if left:
                if i == s:
                    out = out + ring.var(self.owner.var_index(s, j))
            else:
                if s == j:
                    out = out + ring.var(self.owner.var_index(i, s))
        return out


def bialgebra_structure(A: UniversalAlgebra) -> BialgebraStructure:
    """Equip B = A(h,h) with its comultiplication/counit and verify the
    bialgebra laws; raises on verification failure."""
    B = BialgebraStructure(A)
    rep = B.verify()
    if not rep.ok:
        raise AssertionError(f"bialgebra verification failed:\n{rep}")
    return B
