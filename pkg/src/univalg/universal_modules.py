"""The universal A-module U(U,Z) and the universal Lie h-module V(V,W),
their structure maps, factorization through finite-dimensional targets, the
adjunction bijections, functoriality, and direct-sum preservation.

U(U,Z) is a finitely presented module over the polynomial ring of A with the
ideal folded into the module Groebner basis, so element equality is decidable.
V(V,W) is kept as a presentation over the enveloping algebra of h with PBW
normal forms on the free side; it is probed only through finite-dimensional
factorization targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg, modgb, poly
from .lie import LieModule, LinearMap, Report, Violation, direct_sum, is_module_morphism
from .linalg import Vec
from .modgb import FreeModule, ModuleGroebnerBasis, ModuleVector
from .pbw import PBWElement
from .poly import DEFAULT_PAIR_BUDGET, Polynomial
from .representations import MatrixARep, tensor_lie_module
from .universal_algebra import UniversalAlgebra

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# The universal A-module U(U,Z)
# ---------------------------------------------------------------------------


class TensorElement:
    """Formal element of U (x) U(U,Z): one ModuleVector per basis vector of U,
    kept in normal form."""

    def __init__(self, um: "UniversalAModule", components: list[ModuleVector]):
        self.um = um
        self.components = [um.nf(c) for c in components]

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.um is other.um
            and self.components == other.components
        )

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(
            self.um, [a - b for a, b in zip(self.components, other.components)]
        )

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)


class UniversalAModule:
    """U(U,Z) presented over the polynomial ring of A by the relation vectors
    of its defining family, with the ideal of A folded into the module basis."""

    def __init__(self, A: UniversalAlgebra, U: LieModule, Z: LieModule,
                 budget: int = DEFAULT_PAIR_BUDGET):
        if U.algebra != A.h:
            raise ValueError("U must be a Lie module over h")
        if Z.algebra != A.g:
            raise ValueError("Z must be a Lie module over g")
        self.A = A
        self.U = U
        self.Z = Z
        self.rank = U.dim * Z.dim
        self.free = FreeModule(A.ring, self.rank)
        self.relgens, self.rel_labels = self._relations()
        self.mgb = modgb.module_buchberger(self.relgens, A.gb, self.free, budget=budget)

    # generator ordering (s,r) lexicographic
    def pos(self, s: int, r: int) -> int:
        """1-based (U index s, Z index r) -> 0-based free-module position."""
        return (s - 1) * self.Z.dim + (r - 1)

    def _relations(self) -> tuple[list[ModuleVector], list[tuple[int, int, int]]]:
        A, U, Z = self.A, self.U, self.Z
        gens: list[ModuleVector] = []
        labels: list[tuple[int, int, int]] = []
        for s in range(1, U.dim + 1):
            for i in range(1, Z.dim + 1):
                for j in range(1, A.g.dim + 1):
                    comps: dict[int, Polynomial] = {}
                    for p in range(1, Z.dim + 1):
                        eta = Z.action[j - 1][i - 1][p - 1]
                        if eta:
                            k = self.pos(s, p)
                            add = A.ring.const(eta)
                            comps[k] = comps[k] + add if k in comps else add
                    for t in range(1, U.dim + 1):
                        for r in range(1, A.h.dim + 1):
                            omega = U.action[r - 1][t - 1][s - 1]
                            if omega:
                                k = self.pos(t, i)
                                sub = A.ring.var(A.var_index(r, j)).scale(-omega)
                                comps[k] = comps[k] + sub if k in comps else sub
                    gens.append(ModuleVector(self.free, comps))
                    labels.append((s, i, j))
        return gens, labels

    def nf(self, v: ModuleVector) -> ModuleVector:
        return modgb.module_normal_form(v, self.mgb)

    def generator(self, s: int, r: int) -> ModuleVector:
        return self.nf(self.free.basis_vector(self.pos(s, r)))

    def act(self, p: Polynomial, v: ModuleVector) -> ModuleVector:
        return self.nf(v.poly_mul(p))

    def rho(self, z: Vec) -> TensorElement:
        """The structure map: z_r maps to sum_s u_s (x) y_sr."""
        if len(z) != self.Z.dim:
            raise ValueError("vector length does not match Z")
        comps = []
        for s in range(1, self.U.dim + 1):
            acc = self.free.zero()
            for r, c in enumerate(z, start=1):
                if c:
                    acc = acc + self.free.basis_vector(self.pos(s, r)).mul_term(
                        self.A.ring._one_mono, c
                    )
            comps.append(acc)
        return TensorElement(self, comps)

    def tensor_act(self, j: int, t: TensorElement) -> TensorElement:
        """Action of the j-th basis element of g on U (x) U(U,Z)."""
        A, U = self.A, self.U
        out = [self.free.zero() for _ in range(U.dim)]
        for sidx in range(1, U.dim + 1):
            v = t.components[sidx - 1]
            if v.is_zero():
                continue
            for r in range(1, A.h.dim + 1):
                xrj = A.ring.var(A.var_index(r, j))
                moved = v.poly_mul(xrj)
                for tgt in range(1, U.dim + 1):
                    omega = U.action[r - 1][sidx - 1][tgt - 1]
                    if omega:
                        out[tgt - 1] = out[tgt - 1] + moved.scale(omega)
        return TensorElement(self, out)

    def check_relations(self) -> Report:
        """Normal form of every defining relation vector must vanish."""
        bad = tuple(
            Violation("module-relation", label, "nonzero normal form")
            for label, gen in zip(self.rel_labels, self.relgens)
            if not self.nf(gen).is_zero()
        )
        return Report(bad)

    def check_rho_equivariance(self) -> Report:
        """rho(f_j act z_r) = f_j act rho(z_r) for all basis (j, r)."""
        bad: list[Violation] = []
        for j in range(1, self.A.g.dim + 1):
            fj = self.A.g.basis_vector(j)
            for r in range(1, self.Z.dim + 1):
                zr = self.Z.basis_vector(r)
                lhs = self.rho(self.Z.act(fj, zr))
                rhs = self.tensor_act(j, self.rho(zr))
                if not (lhs - rhs).is_zero():
                    bad.append(Violation("rho-equivariance", (j, r), "nonzero"))
        return Report(tuple(bad))

    def is_collapsed(self) -> bool:
        """True when every generator reduces to zero (degenerate but legal)."""
        return all(
            self.generator(s, r).is_zero()
            for s in range(1, self.U.dim + 1)
            for r in range(1, self.Z.dim + 1)
        )


def build_universal_amodule(
    A: UniversalAlgebra, U: LieModule, Z: LieModule,
    budget: int = DEFAULT_PAIR_BUDGET,
) -> UniversalAModule:
    """Construct U(U,Z) and verify its defining relations and the equivariance
    of the structure map."""
    um = UniversalAModule(A, U, Z, budget=budget)
    rep = um.check_relations()
    if not rep.ok:
        raise AssertionError(f"defining relations fail in U(U,Z):\n{rep}")
    rep = um.check_rho_equivariance()
    if not rep.ok:
        raise AssertionError(f"structure map is not equivariant:\n{rep}")
    return um


def rho_apply(um: UniversalAModule, z: Vec) -> TensorElement:
    return um.rho(z)


# ---------------------------------------------------------------------------
# Factorization through a finite-dimensional A-module
# ---------------------------------------------------------------------------


@dataclass
class FactorizationResult:
    """Unique factoring map given on generators, with zero-reduction witnesses
    per relation and the diagram-commutes flag."""

    images: dict[tuple[int, int], Vec]  # generator (1-based pair) -> target vector
    witnesses: dict[tuple[int, int, int], Vec]
    commutes: bool
    unique: bool

    @property
    def ok(self) -> bool:
        return (
            self.commutes
            and self.unique
            and all(not any(w) for w in self.witnesses.values())
        )


def _apply_on_generators(
    um: UniversalAModule, v: ModuleVector, images: dict[int, Vec], X: MatrixARep
) -> Vec:
    """Image of a free-module vector under the A-module map sending position p
    to images[p] in the matrix module X."""
    out = [ZERO] * X.dim
    mats = X.all_matrices()
    for p, q in v.components.items():
        m = q.eval_matrices(mats)
        out = [a + b for a, b in zip(out, linalg.mat_vec(m, images[p]))]
    return out


def factorize_through_universal(
    um: UniversalAModule, X: MatrixARep, f: LinearMap
) -> FactorizationResult:
    """Factor an equivariant f: Z -> U (x) X through the universal module."""
    TX = tensor_lie_module(um.U, X, verify=False)
    if not is_module_morphism(f, um.Z, TX.result):
        raise ValueError("f is not a morphism of Lie g-modules into U (x) X")
    m, q = um.U.dim, X.dim
    # f(z_r) = sum_s u_s (x) w_sr: read w_sr off the (s,t) tensor coordinates.
    w: dict[tuple[int, int], Vec] = {}
    for r in range(1, um.Z.dim + 1):
        col = f.apply(um.Z.basis_vector(r))
        for s in range(1, m + 1):
            w[(s, r)] = [col[TX.position(s, t + 1)] for t in range(q)]
    images = {um.pos(s, r): w[(s, r)] for (s, r) in w}
    witnesses = {
        label: _apply_on_generators(um, gen, images, X)
        for label, gen in zip(um.rel_labels, um.relgens)
    }
    commutes = _gamma_matrix(um, X, w) == f.mat()
    unique = _determination_system_unique(um, X)
    return FactorizationResult(w, witnesses, commutes, unique)


def _gamma_matrix(um: UniversalAModule, X: MatrixARep,
                  theta: dict[tuple[int, int], Vec]) -> list[list[Fraction]]:
    """Matrix of (Id_U (x) theta) o rho as a map Z -> U (x) X."""
    m, q = um.U.dim, X.dim
    rows = m * q
    mat = linalg.zeros(rows, um.Z.dim)
    for r in range(1, um.Z.dim + 1):
        for s in range(1, m + 1):
            vec = theta[(s, r)]
            for t in range(q):
                mat[(s - 1) * q + t][r - 1] = vec[t]
    return mat


def _determination_system_unique(um: UniversalAModule, X: MatrixARep) -> bool:
    """The diagram determines the generator images through a linear system;
    uniqueness holds iff that system has full column rank."""
    m, q = um.U.dim, X.dim
    unknowns = um.rank * q
    if unknowns == 0:
        return True
    rows = []
    for r in range(1, um.Z.dim + 1):
        for s in range(1, m + 1):
            for t in range(q):
                row = [ZERO] * unknowns
                row[um.pos(s, r) * q + t] = ONE
                rows.append(row)
    return linalg.rank(rows) == unknowns


def gamma(um: UniversalAModule, X: MatrixARep,
          theta: dict[tuple[int, int], Vec]) -> LinearMap:
    """The adjunction bijection: a well-defined A-module map theta on the
    generators of U(U,Z) yields the equivariant map (Id_U (x) theta) o rho."""
    images = {um.pos(s, r): v for (s, r), v in theta.items()}
    for label, gen in zip(um.rel_labels, um.relgens):
        img = _apply_on_generators(um, gen, images, X)
        if any(img):
            raise ValueError(f"theta is ill-defined: relation {label} maps to {img}")
    f = LinearMap.from_matrix(_gamma_matrix(um, X, theta), um.Z.dim)
    TX = tensor_lie_module(um.U, X, verify=False)
    if not is_module_morphism(f, um.Z, TX.result):
        raise AssertionError("gamma produced a non-equivariant map")
    return f


# ---------------------------------------------------------------------------
# Functoriality in the Lie g-module argument
# ---------------------------------------------------------------------------


@dataclass
class PresentedMap:
    """A-module map between presented modules, given by normal-form images of
    the source generators."""

    source: UniversalAModule
    target: UniversalAModule
    images: dict[int, ModuleVector]

    def apply(self, v: ModuleVector) -> ModuleVector:
        out = self.target.free.zero()
        for p, q in v.components.items():
            out = out + self.images[p].poly_mul(q)
        return self.target.nf(out)

    def compose(self, other: "PresentedMap") -> "PresentedMap":
        """self after other."""
        if other.target is not self.source:
            raise ValueError("composition mismatch")
        return PresentedMap(
            other.source,
            self.target,
            {p: self.apply(v) for p, v in other.images.items()},
        )

    def equals_on_generators(self, other: "PresentedMap") -> bool:
        return set(self.images) == set(other.images) and all(
            self.images[p] == other.images[p] for p in self.images
        )


def identity_presented_map(um: UniversalAModule) -> PresentedMap:
    return PresentedMap(
        um, um, {p: um.nf(um.free.basis_vector(p)) for p in range(um.rank)}
    )


def functor_on_morphism_U(
    um_x: UniversalAModule, um_y: UniversalAModule, f: LinearMap
) -> PresentedMap:
    """The induced map U(U,X) -> U(U,Y) of an equivariant f: X -> Y, with
    relation preservation and structure-map compatibility verified."""
    if um_x.A is not um_y.A and um_x.A.ring != um_y.A.ring:
        raise ValueError("universal modules over different algebras")
    if um_x.U != um_y.U:
        raise ValueError("the Lie h-module argument must coincide")
    if not is_module_morphism(f, um_x.Z, um_y.Z):
        raise ValueError("f is not a morphism of Lie g-modules")
    images: dict[int, ModuleVector] = {}
    for s in range(1, um_x.U.dim + 1):
        for r in range(1, um_x.Z.dim + 1):
            acc = um_y.free.zero()
            col = f.apply(um_x.Z.basis_vector(r))
            for rp, c in enumerate(col, start=1):
                if c:
                    acc = acc + um_y.free.basis_vector(um_y.pos(s, rp)).mul_term(
                        um_y.A.ring._one_mono, c
                    )
            images[um_x.pos(s, r)] = um_y.nf(acc)
    fbar = PresentedMap(um_x, um_y, images)
    for label, gen in zip(um_x.rel_labels, um_x.relgens):
        if not fbar.apply(gen).is_zero():
            raise AssertionError(f"relation {label} not preserved by induced map")
    # (Id_U (x) fbar) o rho_X = rho_Y o f on the basis of X.
    for r in range(1, um_x.Z.dim + 1):
        lhs = [fbar.apply(c) for c in um_x.rho(um_x.Z.basis_vector(r)).components]
        rhs = um_y.rho(f.apply(um_x.Z.basis_vector(r))).components
        if lhs != rhs:
            raise AssertionError("structure maps do not commute with induced map")
    return fbar


# ---------------------------------------------------------------------------
# Direct-sum preservation
# ---------------------------------------------------------------------------


@dataclass
class DirectSumCertificate:
    """Mutually inverse generator-level maps between U(U, W1 (+) W2) and
    U(U,W1) (+) U(U,W2), with relation-preservation witnesses both ways."""

    forward_ok: bool      # relations of the sum map to zero in the summands
    backward_ok: bool     # relations of each summand map to zero in the sum
    round_trip_ok: bool   # both composites are the identity on generators

    @property
    def ok(self) -> bool:
        return self.forward_ok and self.backward_ok and self.round_trip_ok


def direct_sum_check(
    A: UniversalAlgebra, U: LieModule, W1: LieModule, W2: LieModule,
    budget: int = DEFAULT_PAIR_BUDGET,
) -> DirectSumCertificate:
    ds = direct_sum(W1, W2)
    um_sum = build_universal_amodule(A, U, ds.module, budget=budget)
    um_1 = build_universal_amodule(A, U, W1, budget=budget)
    um_2 = build_universal_amodule(A, U, W2, budget=budget)
    d1 = W1.dim

    def split(pos_sum: int) -> tuple[int, int, int]:
        """Position in the sum presentation -> (summand, s, r) 1-based."""
        s = pos_sum // ds.module.dim + 1
        r = pos_sum % ds.module.dim + 1
        if r <= d1:
            return 1, s, r
        return 2, s, r - d1

    # Forward: generator of the sum -> the matching summand generator; a
    # relation of the sum splits into one relation in each summand.
    def forward_image(v: ModuleVector) -> tuple[ModuleVector, ModuleVector]:
        c1: dict[int, Polynomial] = {}
        c2: dict[int, Polynomial] = {}
        for p, q in v.components.items():
            which, s, r = split(p)
            if which == 1:
                c1[um_1.pos(s, r)] = q
            else:
                c2[um_2.pos(s, r)] = q
        return (
            um_1.nf(ModuleVector(um_1.free, c1)),
            um_2.nf(ModuleVector(um_2.free, c2)),
        )

    forward_ok = all(
        a.is_zero() and b.is_zero()
        for a, b in (forward_image(gen) for gen in um_sum.relgens)
    )

    # Backward: summand generators -> the corresponding sum generator.
    def back_pos(which: int, s: int, r: int) -> int:
        rr = r if which == 1 else d1 + r
        return (s - 1) * ds.module.dim + (rr - 1)

    def backward_image(which: int, v: ModuleVector) -> ModuleVector:
        um = um_1 if which == 1 else um_2
        comps: dict[int, Polynomial] = {}
        for p, q in v.components.items():
            s = p // um.Z.dim + 1
            r = p % um.Z.dim + 1
            comps[back_pos(which, s, r)] = q
        return um_sum.nf(ModuleVector(um_sum.free, comps))

    backward_ok = all(
        backward_image(1, gen).is_zero() for gen in um_1.relgens
    ) and all(backward_image(2, gen).is_zero() for gen in um_2.relgens)

    # Round trips on generators.
    round_trip_ok = True
    for p in range(um_sum.rank):
        a, b = forward_image(um_sum.free.basis_vector(p))
        back = backward_image(1, a) + backward_image(2, b)
        if back != um_sum.nf(um_sum.free.basis_vector(p)):
            round_trip_ok = False
    for which, um in ((1, um_1), (2, um_2)):
        for p in range(um.rank):
            s = p // um.Z.dim + 1
            r = p % um.Z.dim + 1
            fwd = forward_image(um_sum.free.basis_vector(back_pos(which, s, r)))
            chk = fwd[0] if which == 1 else fwd[1]
            other = fwd[1] if which == 1 else fwd[0]
            if chk != um.nf(um.free.basis_vector(p)) or not other.is_zero():
                round_trip_ok = False
    return DirectSumCertificate(forward_ok, backward_ok, round_trip_ok)


# ---------------------------------------------------------------------------
# The universal Lie h-module V(V,W)
# ---------------------------------------------------------------------------


class PBWVector:
    """Element of the free module over the enveloping algebra of h:
    map from generator position to PBWElement."""

    __slots__ = ("vm", "components")

    def __init__(self, vm: "UniversalLieHModule", components: dict[int, PBWElement]):
        self.vm = vm
        self.components = {p: e for p, e in components.items() if not e.is_zero()}

    def __add__(self, other: "PBWVector") -> "PBWVector":
        comps = dict(self.components)
        for p, e in other.components.items():
            comps[p] = comps[p] + e if p in comps else e
        return PBWVector(self.vm, comps)

    def __sub__(self, other: "PBWVector") -> "PBWVector":
        comps = dict(self.components)
        for p, e in other.components.items():
            comps[p] = comps[p] - e if p in comps else -e
        return PBWVector(self.vm, comps)

    def scale(self, c: Fraction) -> "PBWVector":
        return PBWVector(self.vm, {p: e.scale(c) for p, e in self.components.items()})

    def act_generator(self, t: int) -> "PBWVector":
        """Left action of the t-th basis element of h."""
        gen = PBWElement.generator(self.vm.A.h, t)
        return PBWVector(self.vm, {p: gen * e for p, e in self.components.items()})

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other):
        return isinstance(other, PBWVector) and self.components == other.components


class UniversalLieHModule:
    """V(V,W) as a presentation over the enveloping algebra of h; element
    equality in the quotient is not decided, only factorization through
    finite-dimensional Lie h-modules."""

    def __init__(self, A: UniversalAlgebra, V: MatrixARep, W: LieModule):
        if V.owner is not A and V.owner.ring != A.ring:
            raise ValueError("V is a module over a different universal algebra")
        if W.algebra != A.g:
            raise ValueError("W must be a Lie module over g")
        self.A = A
        self.V = V
        self.W = W
        self.rank = W.dim * V.dim
        self.relgens, self.rel_labels = self._relations()

    # generator ordering (r,s) lexicographic
    def pos(self, r: int, s: int) -> int:
        """1-based (W index r, V index s) -> 0-based generator position."""
        return (r - 1) * self.V.dim + (s - 1)

    def generator(self, r: int, s: int) -> PBWVector:
        return PBWVector(self, {self.pos(r, s): PBWElement.unit(self.A.h)})

    def _relations(self) -> tuple[list[PBWVector], list[tuple[int, int, int]]]:
        A, V, W = self.A, self.V, self.W
        gens: list[PBWVector] = []
        labels: list[tuple[int, int, int]] = []
        for s in range(1, V.dim + 1):
            for r in range(1, W.dim + 1):
                for j in range(1, A.g.dim + 1):
                    acc = PBWVector(self, {})
                    for p in range(1, W.dim + 1):
                        sigma = W.action[j - 1][r - 1][p - 1]
                        if sigma:
                            acc = acc + self.generator(p, s).scale(sigma)
                    for k in range(1, V.dim + 1):
                        for t in range(1, A.h.dim + 1):
                            gam = V.matrix(t, j)[s - 1][k - 1]
                            if gam:
                                acc = acc - self.generator(r, k).act_generator(
                                    t
                                ).scale(gam)
                    gens.append(acc)
                    labels.append((s, r, j))
        return gens, labels

    def tau_images(self) -> dict[int, list[tuple[int, int]]]:
        """tau(w_r) = sum_s y_rs (x) v_s, recorded as generator index pairs."""
        return {
            r: [(self.pos(r, s), s) for s in range(1, self.V.dim + 1)]
            for r in range(1, self.W.dim + 1)
        }


def build_universal_lie_hmodule(
    A: UniversalAlgebra, V: MatrixARep, W: LieModule
) -> UniversalLieHModule:
    return UniversalLieHModule(A, V, W)


def _pbw_vector_image(vm: UniversalLieHModule, v: PBWVector, Y: LieModule,
                      images: dict[int, Vec]) -> Vec:
    """Image of a free PBW vector under the h-equivariant map sending each
    generator position to a vector of the Lie h-module Y."""
    out = [ZERO] * Y.dim
    mats = [Y.action_matrix(i) for i in range(1, Y.algebra.dim + 1)]
    for p, e in v.components.items():
        m = e.act_matrix(mats, Y.dim)
        out = [a + b for a, b in zip(out, linalg.mat_vec(m, images[p]))]
    return out


def factorize_lie(
    vm: UniversalLieHModule, Y: LieModule, f: LinearMap
) -> FactorizationResult:
    """Factor an equivariant f: W -> Y (x) V through the universal Lie
    h-module."""
    if Y.algebra != vm.A.h:
        raise ValueError("target must be a Lie module over h")
    TY = tensor_lie_module(Y, vm.V, verify=False)
    if not is_module_morphism(f, vm.W, TY.result):
        raise ValueError("f is not a morphism of Lie g-modules into Y (x) V")
    l = vm.V.dim
    c: dict[tuple[int, int], Vec] = {}
    for r in range(1, vm.W.dim + 1):
        col = f.apply(vm.W.basis_vector(r))
        for s in range(1, l + 1):
            c[(r, s)] = [col[TY.position(a + 1, s)] for a in range(Y.dim)]
    images = {vm.pos(r, s): c[(r, s)] for (r, s) in c}
    witnesses = {
        label: _pbw_vector_image(vm, gen, Y, images)
        for label, gen in zip(vm.rel_labels, vm.relgens)
    }
    commutes = _gamma_lie_matrix(vm, Y, c) == f.mat()
    unique = _lie_determination_unique(vm, Y)
    return FactorizationResult(c, witnesses, commutes, unique)


def _gamma_lie_matrix(vm: UniversalLieHModule, Y: LieModule,
                      theta: dict[tuple[int, int], Vec]) -> list[list[Fraction]]:
    """Matrix of (theta (x) Id_V) o tau as a map W -> Y (x) V."""
    l = vm.V.dim
    rows = Y.dim * l
    mat = linalg.zeros(rows, vm.W.dim)
    for r in range(1, vm.W.dim + 1):
        for s in range(1, l + 1):
            vec = theta[(r, s)]
            for a in range(Y.dim):
                mat[a * l + (s - 1)][r - 1] = vec[a]
    return mat


def _lie_determination_unique(vm: UniversalLieHModule, Y: LieModule) -> bool:
    unknowns = vm.rank * Y.dim
    if unknowns == 0:
        return True
    rows = []
    for r in range(1, vm.W.dim + 1):
        for s in range(1, vm.V.dim + 1):
            for a in range(Y.dim):
                row = [ZERO] * unknowns
                row[vm.pos(r, s) * Y.dim + a] = ONE
                rows.append(row)
    return linalg.rank(rows) == unknowns


def gamma_lie(vm: UniversalLieHModule, Y: LieModule,
              theta: dict[tuple[int, int], Vec]) -> LinearMap:
    """Adjunction bijection for V(V,W): theta on generators, well-defined,
    yields the equivariant map (theta (x) Id_V) o tau."""
    images = {vm.pos(r, s): v for (r, s), v in theta.items()}
    for label, gen in zip(vm.rel_labels, vm.relgens):
        img = _pbw_vector_image(vm, gen, Y, images)
        if any(img):
            raise ValueError(f"theta is ill-defined: relation {label} maps to {img}")
    f = LinearMap.from_matrix(_gamma_lie_matrix(vm, Y, theta), vm.W.dim)
    TY = tensor_lie_module(Y, vm.V, verify=False)
    if not is_module_morphism(f, vm.W, TY.result):
        raise AssertionError("gamma_lie produced a non-equivariant map")
    return f


@dataclass
class LiePresentedMap:
    """Generator-level map between V(V,X) and V(V,Y) presentations induced by
    an equivariant map of the Lie g-module arguments."""

    source: UniversalLieHModule
    target: UniversalLieHModule
    images: dict[int, PBWVector]

    def apply(self, v: PBWVector) -> PBWVector:
        out = PBWVector(self.target, {})
        for p, e in v.components.items():
            img = self.images[p]
            moved = {
                tp: e * te for tp, te in img.components.items()
            }
            out = out + PBWVector(self.target, moved)
        return out

    def push_to_module(self, Y: LieModule, images: dict[int, Vec]) -> dict[int, Vec]:
        """Compose with a factorization target map given on target generators."""
        return {
            p: _pbw_vector_image(self.target, img, Y, images)
            for p, img in self.images.items()
        }


def functor_on_morphism_V(
    vm_x: UniversalLieHModule, vm_y: UniversalLieHModule, f: LinearMap
) -> LiePresentedMap:
    """Induced map V(V,X) -> V(V,Y) of an equivariant f: X -> Y; structure-map
    compatibility holds at generator level by construction and is re-checked."""
    if vm_x.V is not vm_y.V and vm_x.V.mats != vm_y.V.mats:
        raise ValueError("the A-module argument must coincide")
    if not is_module_morphism(f, vm_x.W, vm_y.W):
        raise ValueError("f is not a morphism of Lie g-modules")
    images: dict[int, PBWVector] = {}
    for r in range(1, vm_x.W.dim + 1):
        col = f.apply(vm_x.W.basis_vector(r))
        for s in range(1, vm_x.V.dim + 1):
            acc = PBWVector(vm_y, {})
            for rp, cc in enumerate(col, start=1):
                if cc:
                    acc = acc + vm_y.generator(rp, s).scale(cc)
            images[vm_x.pos(r, s)] = acc
    fbar = LiePresentedMap(vm_x, vm_y, images)
    # (fbar (x) Id_V) o tau_X = tau_Y o f at generator level.
    for r in range(1, vm_x.W.dim + 1):
        col = f.apply(vm_x.W.basis_vector(r))
        for s in range(1, vm_x.V.dim + 1):
            lhs = fbar.apply(vm_x.generator(r, s))
            rhs = PBWVector(vm_y, {})
            for rp, cc in enumerate(col, start=1):
                if cc:
                    rhs = rhs + vm_y.generator(rp, s).scale(cc)
            if lhs != rhs:
                raise AssertionError("structure maps do not commute at generators")
    return fbar
