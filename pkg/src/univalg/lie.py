"""Lie algebras and their finite-dimensional modules as structure-constant
tables, with exhaustive axiom validators.

All indices are 1-based in reports to match the usual e_1..e_n conventions;
internally tables are 0-based dense nested lists of Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .linalg import Mat, Vec

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Violation:
    check: str
    location: tuple[int, ...]
    witness: str

    def __str__(self):
        return f"{self.check} at {self.location}: {self.witness}"


@dataclass(frozen=True)
class Report:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "pass"
        return "fail\n" + "\n".join(f"  {v}" for v in self.violations)


def _table(dim1: int, dim2: int, dim3: int) -> list[list[list[Fraction]]]:
    return [[[ZERO] * dim3 for _ in range(dim2)] for _ in range(dim1)]


class LieAlgebra:
    """Lie algebra given by its bracket table c[i][j][s] with
    [b_i, b_j] = sum_s c[i][j][s] b_s (0-based internally)."""

    def __init__(self, dim: int, bracket: list[list[list[Fraction]]], name: str = ""):
        if dim <= 0:
            raise ValueError("dim must be positive")
        self.dim = dim
        self.table = bracket
        self.name = name

    @classmethod
    def abelian(cls, dim: int, name: str = "") -> "LieAlgebra":
        return cls(dim, _table(dim, dim, dim), name or f"abelian{dim}")

    @classmethod
    def from_brackets(
        cls, dim: int, entries: dict[tuple[int, int], dict[int, Fraction]],
        name: str = "", antisymmetrize: bool = False,
    ) -> "LieAlgebra":
        """Build from 1-based sparse entries {(i,j): {s: c}}.

        With ``antisymmetrize`` the (j,i) entries are filled in automatically.
        """
        table = _table(dim, dim, dim)
        for (i, j), row in entries.items():
            for s, c in row.items():
                table[i - 1][j - 1][s - 1] = Fraction(c)
                if antisymmetrize:
                    table[j - 1][i - 1][s - 1] = -Fraction(c)
        return cls(dim, table, name)

    def bracket(self, x: Vec, y: Vec) -> Vec:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length does not match algebra dimension")
        out = [ZERO] * self.dim
        for i in range(self.dim):
            if not x[i]:
                continue
            for j in range(self.dim):
                if not y[j]:
                    continue
                c = x[i] * y[j]
                for s in range(self.dim):
                    if self.table[i][j][s]:
                        out[s] += c * self.table[i][j][s]
        return out

    def basis_vector(self, i: int) -> Vec:
        """1-based basis vector."""
        v = [ZERO] * self.dim
        v[i - 1] = ONE
        return v

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.dim, self.name))

    def __repr__(self):
        return f"LieAlgebra({self.name or 'dim=%d' % self.dim})"


def sl2() -> LieAlgebra:
    """sl(2) with [e1,e2]=e3, [e3,e2]=-2e2, [e3,e1]=2e1."""
    return LieAlgebra.from_brackets(
        3,
        {(1, 2): {3: ONE}, (3, 2): {2: Fraction(-2)}, (3, 1): {1: Fraction(2)}},
        name="sl2",
        antisymmetrize=True,
    )


def validate_lie_algebra(L: LieAlgebra) -> Report:
    """Report every violated antisymmetry / Jacobi instance."""
    bad: list[Violation] = []
    n = L.dim
    for i in range(n):
        for j in range(n):
            for s in range(n):
                if L.table[i][j][s] != -L.table[j][i][s]:
                    bad.append(
                        Violation(
                            "antisymmetry",
                            (i + 1, j + 1, s + 1),
                            f"c[{i+1}][{j+1}][{s+1}]={L.table[i][j][s]} vs "
                            f"-c[{j+1}][{i+1}][{s+1}]={-L.table[j][i][s]}",
                        )
                    )
    for i in range(n):
        ei = L.basis_vector(i + 1)
        for j in range(i + 1, n):
            ej = L.basis_vector(j + 1)
            for k in range(j + 1, n):
                ek = L.basis_vector(k + 1)
                acc = L.bracket(L.bracket(ei, ej), ek)
                acc = [a + b for a, b in zip(acc, L.bracket(L.bracket(ej, ek), ei))]
                acc = [a + b for a, b in zip(acc, L.bracket(L.bracket(ek, ei), ej))]
                if any(acc):
                    bad.append(
                        Violation("jacobi", (i + 1, j + 1, k + 1), f"residual {acc}")
                    )
    return Report(tuple(bad))


class LieModule:
    """Module over a Lie algebra: action[i][j][s] with
    b_i acting on u_j = sum_s action[i][j][s] u_s (0-based)."""

    def __init__(
        self,
        algebra: LieAlgebra,
        dim: int,
        action: list[list[list[Fraction]]],
        name: str = "",
    ):
        if dim < 0:
            raise ValueError("dim must be non-negative")
        self.algebra = algebra
        self.dim = dim
        self.action = action
        self.name = name

    @classmethod
    def trivial(cls, algebra: LieAlgebra, dim: int, name: str = "") -> "LieModule":
        return cls(algebra, dim, _table(algebra.dim, dim, dim), name or "trivial")

    @classmethod
    def adjoint(cls, algebra: LieAlgebra) -> "LieModule":
        return cls(algebra, algebra.dim, algebra.table, name="adjoint")

    @classmethod
    def from_matrices(
        cls, algebra: LieAlgebra, mats: list[Mat], name: str = ""
    ) -> "LieModule":
        """Matrices give the action of each basis element (column convention)."""
        dim = len(mats[0]) if mats else 0
        action = _table(algebra.dim, dim, dim)
        for i, m in enumerate(mats):
            for s in range(dim):
                for j in range(dim):
                    action[i][j][s] = Fraction(m[s][j])
        return cls(algebra, dim, action, name)

    def action_matrix(self, i: int) -> Mat:
        """Matrix of the 1-based basis element b_i (column convention)."""
        return [
            [self.action[i - 1][j][s] for j in range(self.dim)]
            for s in range(self.dim)
        ]

    def act(self, x: Vec, v: Vec) -> Vec:
        if len(x) != self.algebra.dim or len(v) != self.dim:
            raise ValueError("vector length mismatch in module action")
        out = [ZERO] * self.dim
        for i in range(self.algebra.dim):
            if not x[i]:
                continue
            for j in range(self.dim):
                if not v[j]:
                    continue
                c = x[i] * v[j]
                for s in range(self.dim):
                    if self.action[i][j][s]:
                        out[s] += c * self.action[i][j][s]
        return out

    def basis_vector(self, j: int) -> Vec:
        v = [ZERO] * self.dim
        v[j - 1] = ONE
        return v

    def __eq__(self, other):
        return (
            isinstance(other, LieModule)
            and self.algebra == other.algebra
            and self.dim == other.dim
            and self.action == other.action
        )

    def __repr__(self):
        return f"LieModule({self.name or ''} dim={self.dim} over {self.algebra!r})"


def validate_lie_module(M: LieModule) -> Report:
    """Check [x,y] act v = x act (y act v) - y act (x act v) on all basis data."""
    bad: list[Violation] = []
    n = M.algebra.dim
    for i in range(1, n + 1):
        xi = M.algebra.basis_vector(i)
        for j in range(1, n + 1):
            xj = M.algebra.basis_vector(j)
            bij = M.algebra.bracket(xi, xj)
            for r in range(1, M.dim + 1):
                v = M.basis_vector(r)
                lhs = M.act(bij, v)
                rhs_a = M.act(xi, M.act(xj, v))
                rhs_b = M.act(xj, M.act(xi, v))
                resid = [a - (b - c) for a, b, c in zip(lhs, rhs_a, rhs_b)]
                if any(resid):
                    bad.append(
                        Violation("lie-module", (i, j, r), f"residual {resid}")
                    )
    return Report(tuple(bad))


@dataclass(frozen=True)
class LinearMap:
    """Linear map given by its matrix; column j is the image of the j-th
    source basis vector."""

    source_dim: int
    target_dim: int
    matrix: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_matrix(cls, m: Mat, source_dim: int | None = None) -> "LinearMap":
        rows = len(m)
        cols = len(m[0]) if m else (source_dim or 0)
        return cls(cols, rows, tuple(tuple(Fraction(x) for x in r) for r in m))

    @classmethod
    def identity(cls, dim: int) -> "LinearMap":
        return cls.from_matrix(linalg.identity(dim))

    @classmethod
    def zero(cls, source_dim: int, target_dim: int) -> "LinearMap":
        return cls(source_dim, target_dim,
                   tuple(tuple([ZERO] * source_dim) for _ in range(target_dim)))

    def mat(self) -> Mat:
        return [list(r) for r in self.matrix]

    def apply(self, v: Vec) -> Vec:
        if len(v) != self.source_dim:
            raise ValueError("vector length does not match map source")
        if self.target_dim == 0:
            return []
        return linalg.mat_vec(self.mat(), v)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        if other.target_dim != self.source_dim:
            raise ValueError("composition dimension mismatch")
        if not self.matrix or not other.matrix:
            return LinearMap.zero(other.source_dim, self.target_dim)
        return LinearMap.from_matrix(linalg.mat_mul(self.mat(), other.mat()),
                                     other.source_dim)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.source_dim, self.target_dim, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.matrix, other.matrix)
        ))


def is_module_morphism(f: LinearMap, M: LieModule, N: LieModule) -> bool:
    """True iff f(x act v) = x act f(v) on all basis pairs."""
    if M.algebra != N.algebra:
        raise ValueError("modules over different algebras")
    if f.source_dim != M.dim or f.target_dim != N.dim:
        raise ValueError("map dimensions do not match the modules")
    for i in range(1, M.algebra.dim + 1):
        x = M.algebra.basis_vector(i)
        for j in range(1, M.dim + 1):
            v = M.basis_vector(j)
            if f.apply(M.act(x, v)) != N.act(x, f.apply(v)):
                return False
    return True


@dataclass(frozen=True)
class DirectSum:
    module: LieModule
    inj1: LinearMap
    inj2: LinearMap
    proj1: LinearMap
    proj2: LinearMap


def direct_sum(M1: LieModule, M2: LieModule) -> DirectSum:
    """Block-diagonal direct sum with injections and projections."""
    if M1.algebra != M2.algebra:
        raise ValueError("direct sum requires modules over the same algebra")
    n = M1.algebra.dim
    d1, d2 = M1.dim, M2.dim
    action = _table(n, d1 + d2, d1 + d2)
    for i in range(n):
        for j in range(d1):
            for s in range(d1):
                action[i][j][s] = M1.action[i][j][s]
        for j in range(d2):
            for s in range(d2):
                action[i][d1 + j][d1 + s] = M2.action[i][j][s]
    M = LieModule(M1.algebra, d1 + d2, action,
                  name=f"{M1.name or '?'}(+){M2.name or '?'}")
    i1 = LinearMap.from_matrix(
        [[ONE if r == c else ZERO for c in range(d1)] for r in range(d1 + d2)], d1)
    i2 = LinearMap.from_matrix(
        [[ONE if r == d1 + c else ZERO for c in range(d2)] for r in range(d1 + d2)], d2)
    p1 = LinearMap.from_matrix(
        [[ONE if c == r else ZERO for c in range(d1 + d2)] for r in range(d1)], d1 + d2)
    p2 = LinearMap.from_matrix(
        [[ONE if c == d1 + r else ZERO for c in range(d1 + d2)] for r in range(d2)],
        d1 + d2)
    return DirectSum(M, i1, i2, p1, p2)
