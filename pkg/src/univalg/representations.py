"""Finite-dimensional modules over the universal algebra as matrix tuples, and
the tensor-product Lie module construction they induce.

A matrix representation assigns a square matrix to each generator x_si; it is
valid when the matrices commute pairwise and every defining relation of A
evaluates to the zero matrix.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .lie import (
    LieAlgebra,
    LieModule,
    LinearMap,
    Report,
    Violation,
    validate_lie_module,
)
from .linalg import Mat
from .universal_algebra import UniversalAlgebra

ZERO = Fraction(0)
ONE = Fraction(1)


class MatrixARep:
    """A-module of dimension ``dim``: one matrix per variable X[s,i], column
    convention (column j = image of the j-th basis vector)."""

    def __init__(self, owner: UniversalAlgebra, dim: int, mats: dict[tuple[int, int], Mat],
                 name: str = ""):
        self.owner = owner
        self.dim = dim
        self.mats = {
            key: [[Fraction(x) for x in row] for row in m] for key, m in mats.items()
        }
        self.name = name
        for s in range(1, owner.h.dim + 1):
            for i in range(1, owner.g.dim + 1):
                if (s, i) not in self.mats:
                    self.mats[(s, i)] = linalg.zeros(dim, dim)

    @classmethod
    def zero_dimensional(cls, owner: UniversalAlgebra) -> "MatrixARep":
        return cls(owner, 0, {}, name="0")

    @classmethod
    def counit(cls, owner: UniversalAlgebra) -> "MatrixARep":
        """The 1-dimensional module through the counit of B = A(h,h):
        x_si acts as delta_si."""
        if not owner.is_same_hg():
            raise ValueError("counit representation requires h = g")
        mats = {
            (s, i): [[ONE if s == i else ZERO]]
            for s in range(1, owner.h.dim + 1)
            for i in range(1, owner.g.dim + 1)
        }
        return cls(owner, 1, mats, name="counit")

    @classmethod
    def from_lie_homomorphism(cls, owner: UniversalAlgebra, images: list[list]) -> "MatrixARep":
        """1-dimensional module from a Lie algebra map g -> h: x_si acts by the
        s-th coordinate of the image of f_i."""
        mats = {
            (s, i): [[Fraction(images[i - 1][s - 1])]]
            for s in range(1, owner.h.dim + 1)
            for i in range(1, owner.g.dim + 1)
        }
        return cls(owner, 1, mats, name="scalar")

    def matrix(self, s: int, i: int) -> Mat:
        return self.mats[(s, i)]

    def all_matrices(self) -> list[Mat]:
        """Matrices in the ring's variable order."""
        return [
            self.mats[(s, i)]
            for s in range(1, self.owner.h.dim + 1)
            for i in range(1, self.owner.g.dim + 1)
        ]

    def act_poly(self, p, v: list) -> list:
        """Action of a polynomial (class in A) on a vector."""
        if self.dim == 0:
            return []
        m = p.eval_matrices(self.all_matrices())
        return linalg.mat_vec(m, v)

    def direct_sum(self, other: "MatrixARep") -> "MatrixARep":
        if self.owner is not other.owner and self.owner.ring != other.owner.ring:
            raise ValueError("representations of different universal algebras")
        mats = {}
        for key, m1 in self.mats.items():
            m2 = other.mats[key]
            d1, d2 = self.dim, other.dim
            blk = linalg.zeros(d1 + d2, d1 + d2)
            for r in range(d1):
                for c in range(d1):
                    blk[r][c] = m1[r][c]
            for r in range(d2):
                for c in range(d2):
                    blk[d1 + r][d1 + c] = m2[r][c]
            mats[key] = blk
        return MatrixARep(self.owner, self.dim + other.dim, mats,
                          name=f"{self.name}(+){other.name}")


def validate_arep(R: MatrixARep) -> Report:
    """Empty report iff all relation evaluations vanish and the generator
    matrices commute pairwise."""
    bad: list[Violation] = []
    if R.dim == 0:
        return Report()
    mats = R.all_matrices()
    for m in mats:
        if len(m) != R.dim or any(len(row) != R.dim for row in m):
            return Report((Violation("shape", (), "matrices must be dim x dim"),))
    keys = list(R.mats)
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            if not linalg.is_zero_mat(
                linalg.commutator(R.mats[keys[a]], R.mats[keys[b]])
            ):
                bad.append(
                    Violation("commutativity", keys[a] + keys[b], "nonzero commutator")
                )
    for label, gen in zip(R.owner.labels, R.owner.jgens):
        if gen.is_zero():
            continue
        if not linalg.is_zero_mat(gen.eval_matrices(mats)):
            bad.append(Violation("relation", label, "relation matrix nonzero"))
    return Report(tuple(bad))


class TensorGModule:
    """The Lie g-module on U (x) V: the action of f_i sends u_l (x) v_t to
    sum_j (e_j act u_l) (x) (x_ji . v_t).

    Basis ordering is (l,t) lexicographic: u_l (x) v_t sits at position
    (l-1)*dim(V) + t.
    """

    def __init__(self, U: LieModule, V: MatrixARep):
        A = V.owner
        if U.algebra != A.h:
            raise ValueError("U must be a Lie module over the h of V's algebra")
        self.U = U
        self.V = V
        self.result = self._build()

    def _build(self) -> LieModule:
        A = self.V.owner
        m, l = self.U.dim, self.V.dim
        g = A.g
        dim = m * l
        action = [
            [[ZERO] * dim for _ in range(dim)] for _ in range(g.dim)
        ]
        for i in range(1, g.dim + 1):
            for lidx in range(1, m + 1):
                for t in range(1, l + 1):
                    col = (lidx - 1) * l + (t - 1)
                    for j in range(1, A.h.dim + 1):
                        mat = self.V.matrix(j, i)
                        for s in range(1, m + 1):
                            w = self.U.action[j - 1][lidx - 1][s - 1]
                            if not w:
                                continue
                            for p in range(1, l + 1):
                                c = mat[p - 1][t - 1]
                                if c:
                                    row = (s - 1) * l + (p - 1)
                                    action[i - 1][col][row] += w * c
        return LieModule(g, dim, action,
                         name=f"{self.U.name or 'U'}(x){self.V.name or 'V'}")

    def position(self, l: int, t: int) -> int:
        """1-based (l,t) -> 0-based tensor basis position."""
        return (l - 1) * self.V.dim + (t - 1)


def tensor_lie_module(U: LieModule, V: MatrixARep, verify: bool = True) -> TensorGModule:
    """Endow U (x) V with its Lie g-module structure; optionally re-verify the
    Lie module axiom on all basis data."""
    T = TensorGModule(U, V)
    if verify:
        rep = validate_lie_module(T.result)
        if not rep.ok:
            raise AssertionError(f"tensor module fails the Lie axiom:\n{rep}")
    return T


def is_arep_morphism(f: LinearMap, V: MatrixARep, W: MatrixARep) -> bool:
    """True iff f intertwines the generator matrices of V and W."""
    if f.source_dim != V.dim or f.target_dim != W.dim:
        raise ValueError("map dimensions do not match the representations")
    fm = f.mat()
    for key in V.mats:
        lhs = linalg.mat_mul(fm, V.mats[key]) if fm else []
        rhs = linalg.mat_mul(W.mats[key], fm) if fm else []
        if lhs != rhs:
            return False
    return True


def tensor_on_morphism(U: LieModule, g: LinearMap, V: MatrixARep, W: MatrixARep,
                       verify: bool = True) -> LinearMap:
    """id_U (x) g as a map between the two tensor Lie modules."""
    if not is_arep_morphism(g, V, W):
        raise ValueError("g is not an A-module map")
    out = LinearMap.from_matrix(
        linalg.kron(linalg.identity(U.dim), g.mat()), U.dim * V.dim
    ) if U.dim and g.matrix else LinearMap.zero(U.dim * V.dim, U.dim * W.dim)
    if verify:
        TV = tensor_lie_module(U, V, verify=False).result
        TW = tensor_lie_module(U, W, verify=False).result
        from .lie import is_module_morphism

        if not is_module_morphism(out, TV, TW):
            raise AssertionError("id (x) g failed the equivariance check")
    return out


def induced_g_module_from_scalar_rep(
    g: LieAlgebra, mats: list[Mat], verify: bool = True
) -> LieModule:
    """Lie g-module from commuting matrices (one per basis element of g)
    satisfying the bracket relations sum_u beta^u_{ij} M_u = 0.

    This is the h = Q case: A is the symmetric algebra of g modulo its derived
    subalgebra, f_t acts as the matrix of x_t.
    """
    dim = len(mats[0]) if mats else 0
    mats = [[[Fraction(x) for x in row] for row in m] for m in mats]
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            if not linalg.is_zero_mat(linalg.commutator(mats[a], mats[b])):
                raise ValueError(f"matrices {a + 1} and {b + 1} do not commute")
    for i in range(g.dim):
        for j in range(g.dim):
            acc = linalg.zeros(dim, dim)
            for u in range(g.dim):
                beta = g.table[i][j][u]
                if beta:
                    acc = linalg.mat_add(acc, linalg.mat_scale(beta, mats[u]))
            if not linalg.is_zero_mat(acc):
                raise ValueError(
                    f"bracket relation violated at (i,j)=({i + 1},{j + 1})"
                )
    M = LieModule.from_matrices(g, mats, name="induced")
    if verify:
        rep = validate_lie_module(M)
        if not rep.ok:
            raise AssertionError(f"induced module fails the Lie axiom:\n{rep}")
    return M
