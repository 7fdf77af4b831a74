"""Shared pools of small exact instances and random-but-valid morphism
generators for the property suites."""

from fractions import Fraction
from random import Random

from univalg import linalg
from univalg.lie import LieAlgebra, LieModule, LinearMap, direct_sum, sl2
from univalg.representations import MatrixARep

ZERO = Fraction(0)
ONE = Fraction(1)


def is_abelian(L: LieAlgebra) -> bool:
    return all(c == 0 for plane in L.table for row in plane for c in row)


def solvable2() -> LieAlgebra:
    """The 2-dimensional non-abelian algebra: [e1, e2] = e2."""
    return LieAlgebra.from_brackets(
        2, {(1, 2): {2: ONE}}, name="solvable2", antisymmetrize=True
    )


def heisenberg() -> LieAlgebra:
    """3-dimensional: [e1, e2] = e3, e3 central."""
    return LieAlgebra.from_brackets(
        3, {(1, 2): {3: ONE}}, name="heisenberg", antisymmetrize=True
    )


def natural2(L: LieAlgebra) -> LieModule:
    """The 2-dimensional module of sl(2): e1, e2 the nilpotents, e3 diagonal."""
    mats = [
        [[ZERO, ONE], [ZERO, ZERO]],
        [[ZERO, ZERO], [ONE, ZERO]],
        [[ONE, ZERO], [ZERO, -ONE]],
    ]
    return LieModule.from_matrices(L, mats, name="natural2")


def algebra_pool() -> list[LieAlgebra]:
    return [
        LieAlgebra.abelian(1),
        LieAlgebra.abelian(2),
        LieAlgebra.abelian(3),
        sl2(),
        solvable2(),
        heisenberg(),
    ]


def module_pool(L: LieAlgebra, rng: Random, max_dim: int = 3) -> LieModule:
    """A random valid Lie module over L of dimension <= max_dim."""
    options = [LieModule.trivial(L, rng.randint(1, max_dim))]
    if L.dim <= max_dim:
        options.append(LieModule.adjoint(L))
    if L.name == "sl2" and max_dim >= 2:
        options.append(natural2(L))
    if L.name == "abelian1":
        # Any single matrix is a module over the 1-dim abelian algebra.
        d = rng.randint(1, max_dim)
        m = [[Fraction(rng.randint(-2, 2)) for _ in range(d)] for _ in range(d)]
        options.append(LieModule.from_matrices(L, [m], name="random1"))
    small = [M for M in options if M.dim <= max_dim]
    return rng.choice(small)


def rep_pool(A, rng: Random, max_dim: int = 3) -> MatrixARep:
    """A random valid matrix module over the universal algebra A."""
    options = [MatrixARep.from_lie_homomorphism(
        A, [[ZERO] * A.h.dim for _ in range(A.g.dim)]
    )]
    if A.is_same_hg():
        options.append(MatrixARep.counit(A))
    if is_abelian(A.h) and is_abelian(A.g):
        # All relations vanish identically, so commuting (diagonal) matrices
        # of any size are valid.
        d = rng.randint(1, max_dim)
        mats = {
            (s, i): [
                [Fraction(rng.randint(-2, 2)) if r == c else ZERO for c in range(d)]
                for r in range(d)
            ]
            for s in range(1, A.h.dim + 1)
            for i in range(1, A.g.dim + 1)
        }
        options.append(MatrixARep(A, d, mats, name="diag"))
    base = rng.choice(options)
    if base.dim < max_dim and rng.random() < 0.5:
        other = rng.choice(options)
        if base.dim + other.dim <= max_dim:
            return base.direct_sum(other)
    return base


def _solution_space(rows: list[list[Fraction]], n_unknowns: int) -> list[list[Fraction]]:
    if not rows:
        return [
            [ONE if i == j else ZERO for j in range(n_unknowns)]
            for i in range(n_unknowns)
        ]
    return linalg.nullspace(rows)


def random_equivariant_map(rng: Random, M: LieModule, N: LieModule) -> LinearMap:
    """A random morphism of Lie modules M -> N: exact nullspace of the
    intertwining constraints, then a random integer combination."""
    src, tgt = M.dim, N.dim
    n_unknowns = tgt * src
    rows: list[list[Fraction]] = []
    for i in range(1, M.algebra.dim + 1):
        a_m = M.action_matrix(i)
        a_n = N.action_matrix(i)
        for j in range(src):
            for t in range(tgt):
                row = [ZERO] * n_unknowns
                # (F a_m)[t][j] - (a_n F)[t][j] = 0
                for s in range(src):
                    row[t * src + s] += a_m[s][j]
                for u in range(tgt):
                    row[u * src + j] -= a_n[t][u]
                rows.append(row)
    basis = _solution_space(rows, n_unknowns)
    flat = [ZERO] * n_unknowns
    for b in basis:
        c = Fraction(rng.randint(-2, 2))
        if c:
            flat = [x + c * y for x, y in zip(flat, b)]
    mat = [[flat[t * src + s] for s in range(src)] for t in range(tgt)]
    return LinearMap.from_matrix(mat, src)


def random_arep_morphism(rng: Random, V: MatrixARep, W: MatrixARep) -> LinearMap:
    """A random A-module map V -> W (intertwines every generator matrix)."""
    src, tgt = V.dim, W.dim
    n_unknowns = tgt * src
    rows: list[list[Fraction]] = []
    for key in V.mats:
        a_v = V.mats[key]
        a_w = W.mats[key]
        for j in range(src):
            for t in range(tgt):
                row = [ZERO] * n_unknowns
                for s in range(src):
                    row[t * src + s] += a_v[s][j]
                for u in range(tgt):
                    row[u * src + j] -= a_w[t][u]
                rows.append(row)
    basis = _solution_space(rows, n_unknowns)
    flat = [ZERO] * n_unknowns
    for b in basis:
        c = Fraction(rng.randint(-2, 2))
        if c:
            flat = [x + c * y for x, y in zip(flat, b)]
    mat = [[flat[t * src + s] for s in range(src)] for t in range(tgt)]
    return LinearMap.from_matrix(mat, src)
