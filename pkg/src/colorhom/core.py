"""Graded bases, even/homogeneous linear maps, and algebras by structure constants.

Conventions used everywhere in the package:
  * vectors are coordinate tuples over the basis, tuple index = basis index;
  * a map's matrix is stored row-major, matrix[k][i] = coefficient of e_k in
    the image of e_i (so columns are images of basis vectors);
  * the product tensor is structure[i][j][k] = coefficient of e_k in e_i * e_j.

All containers are tuples and all dataclasses frozen; operations return new
objects and never mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import SingularMapError, StructureError
from .grading import (
    Bicharacter,
    GradeGroup,
    GroupElement,
    bicharacter_eval,
    validate_bicharacter,
)
from .scalars import ScalarField

__all__ = [
    "GradedBasis",
    "trivial_basis",
    "GradedLinearMap",
    "ColorHomAlgebra",
    "make_algebra",
    "make_map",
    "identity_map",
    "scalar_map",
    "eval_map",
    "compose_maps",
    "map_power",
    "invert_map",
    "map_commutes_with_alpha",
    "eval_product",
    "commutator_tensor",
    "unit_vector",
    "zero_vector",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "vec_is_zero",
    "homogeneous_components",
    "determinant",
    "matrix_rank",
]


@dataclass(frozen=True)
class GradedBasis:
    """An ordered basis with a degree per index, over a fixed scalar field."""

    field: ScalarField
    group: GradeGroup
    degrees: tuple[GroupElement, ...]

    def __post_init__(self):
        degrees = tuple(self.degrees)
        if not degrees:
            raise StructureError("basis dimension must be at least 1")
        for d in degrees:
            if not isinstance(d, GroupElement) or d.group != self.group:
                raise StructureError(f"degree {d!r} not in the grading group")
        object.__setattr__(self, "degrees", degrees)

    @property
    def dim(self) -> int:
        return len(self.degrees)


def trivial_basis(field: ScalarField, dim: int) -> GradedBasis:
    """Everything in degree 0 of the trivial group."""
    g = GradeGroup(0)
    return GradedBasis(field, g, tuple(g.zero() for _ in range(dim)))


@dataclass(frozen=True)
class GradedLinearMap:
    """A homogeneous linear endomap of a graded basis.

    Homogeneity of degree d means matrix[k][i] != 0 forces
    deg(e_k) = deg(e_i) + d; maps of degree 0 are called even.
    """

    basis: GradedBasis
    matrix: tuple
    degree: GroupElement | None = None

    def __post_init__(self):
        basis = self.basis
        n = basis.dim
        deg = self.degree if self.degree is not None else basis.group.zero()
        if not isinstance(deg, GroupElement) or deg.group != basis.group:
            raise StructureError("map degree not in the grading group")
        rows = tuple(tuple(basis.field.coerce(v) for v in row) for row in self.matrix)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise StructureError(f"matrix must be {n}x{n}")
        for k, i in iproduct(range(n), repeat=2):
            if rows[k][i] != 0 and basis.degrees[k] != basis.degrees[i] + deg:
                raise StructureError(
                    f"entry ({k},{i}) breaks homogeneity of degree {deg}",
                    indices=(k, i),
                )
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "degree", deg)

    @property
    def is_even(self) -> bool:
        return self.degree.is_zero

    def column(self, i: int) -> tuple:
        return tuple(row[i] for row in self.matrix)


def make_map(basis: GradedBasis, rows, degree: GroupElement | None = None) -> GradedLinearMap:
    return GradedLinearMap(basis, tuple(tuple(r) for r in rows), degree)


def identity_map(basis: GradedBasis) -> GradedLinearMap:
    one, zero = basis.field.one, basis.field.zero
    n = basis.dim
    return GradedLinearMap(
        basis, tuple(tuple(one if k == i else zero for i in range(n)) for k in range(n))
    )


def scalar_map(basis: GradedBasis, s) -> GradedLinearMap:
    s = basis.field.coerce(s)
    zero = basis.field.zero
    n = basis.dim
    return GradedLinearMap(
        basis, tuple(tuple(s if k == i else zero for i in range(n)) for k in range(n))
    )


def eval_map(m: GradedLinearMap, x) -> tuple:
    n = m.basis.dim
    if len(x) != n:
        raise StructureError(f"vector length {len(x)} != dim {n}")
    zero = m.basis.field.zero
    out = [zero] * n
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for k in range(n):
            mki = m.matrix[k][i]
            if mki != 0:
                out[k] = out[k] + mki * xi
    return tuple(out)


def compose_maps(m: GradedLinearMap, n: GradedLinearMap) -> GradedLinearMap:
    """m after n; degrees add."""
    if m.basis != n.basis:
        raise StructureError("composition needs a shared basis")
    dim = m.basis.dim
    zero = m.basis.field.zero
    rows = []
    for k in range(dim):
        row = []
        for i in range(dim):
            acc = zero
            for l in range(dim):
                a, b = m.matrix[k][l], n.matrix[l][i]
                if a != 0 and b != 0:
                    acc = acc + a * b
            row.append(acc)
        rows.append(tuple(row))
    return GradedLinearMap(m.basis, tuple(rows), m.degree + n.degree)


def map_power(m: GradedLinearMap, n: int) -> GradedLinearMap:
    if not isinstance(n, int) or n < 0:
        raise StructureError(f"map power wants n >= 0, got {n!r}")
    out = identity_map(m.basis)
    for _ in range(n):
        out = compose_maps(m, out)
    return out


def _gauss_rank_inverse(field: ScalarField, rows):
    """Exact Gauss-Jordan; returns (rank, inverse-or-None for square input)."""
    n = len(rows)
    m = [list(r) for r in rows]
    square = all(len(r) == n for r in m)
    aug = None
    if square:
        one, zero = field.one, field.zero
        aug = [[one if i == j else zero for j in range(n)] for i in range(n)]
    ncols = len(m[0]) if m else 0
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, n):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        if aug is not None:
            aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = field.one / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        if aug is not None:
            aug[rank] = [v * inv for v in aug[rank]]
        for r in range(n):
            if r == rank or m[r][col] == 0:
                continue
            f = m[r][col]
            m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
            if aug is not None:
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[rank])]
        rank += 1
    if square and rank == n:
        return rank, tuple(tuple(r) for r in aug)
    return rank, None


def matrix_rank(field: ScalarField, rows) -> int:
    coerced = [[field.coerce(v) for v in r] for r in rows]
    return _gauss_rank_inverse(field, coerced)[0]


def determinant(field: ScalarField, rows):
    """Bareiss fraction-free elimination; every intermediate division is exact."""
    n = len(rows)
    if n == 0:
        return field.one
    m = [[field.coerce(v) for v in r] for r in rows]
    if any(len(r) != n for r in m):
        raise StructureError("determinant needs a square matrix")
    sign = 1
    prev = field.one
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return field.zero
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = field.zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def invert_map(m: GradedLinearMap) -> GradedLinearMap:
    """Exact inverse of an even map; raises SingularMapError if not regular."""
    if not m.is_even:
        raise StructureError("only even maps are inverted here")
    rank, inv = _gauss_rank_inverse(m.basis.field, m.matrix)
    if inv is None:
        raise SingularMapError("map is singular: not regular")
    return GradedLinearMap(m.basis, inv, m.basis.group.zero())


@dataclass(frozen=True)
class ColorHomAlgebra:
    """A graded algebra (A, *, eps, alpha) given by structure constants.

    structure[i][j][k] is the e_k coefficient of e_i * e_j; alpha is the even
    twisting endomap.  Instances are built through make_algebra, which
    enforces evenness of the product and validity of the bicharacter.
    """

    basis: GradedBasis
    bicharacter: Bicharacter
    structure: tuple
    alpha: GradedLinearMap

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def field(self) -> ScalarField:
        return self.basis.field

    @property
    def group(self) -> GradeGroup:
        return self.basis.group

    @property
    def degrees(self) -> tuple:
        return self.basis.degrees

    def eps(self, a: GroupElement, c: GroupElement):
        return bicharacter_eval(self.bicharacter, a, c)


def make_algebra(basis: GradedBasis, bichar: Bicharacter, structure, alpha: GradedLinearMap) -> ColorHomAlgebra:
    """Validate and assemble.  Raises StructureError on:

      * field or group mismatch between basis and bicharacter,
      * a bicharacter failing its axioms,
      * a product tensor of the wrong shape,
      * an evenness violation (the first offending (i, j, k) is named),
      * alpha on the wrong basis or of nonzero degree.
    """
    if bichar.group != basis.group:
        raise StructureError("bicharacter and basis use different grading groups")
    if bichar.field != basis.field:
        raise StructureError("bicharacter and basis use different scalar fields")
    report = validate_bicharacter(bichar)
    if not report.ok:
        raise StructureError(
            f"bicharacter axiom '{report.axiom}' fails at generator pair "
            f"{report.pair}: {report.detail}"
        )
    n = basis.dim
    rows = tuple(
        tuple(tuple(basis.field.coerce(v) for v in cell) for cell in plane)
        for plane in structure
    )
    if len(rows) != n or any(
        len(plane) != n or any(len(cell) != n for cell in plane) for plane in rows
    ):
        raise StructureError(f"product tensor must be {n}x{n}x{n}")
    degs = basis.degrees
    for i, j, k in iproduct(range(n), repeat=3):
        if rows[i][j][k] != 0 and degs[k] != degs[i] + degs[j]:
            raise StructureError(
                f"product not even: c[{i}][{j}][{k}] != 0 but "
                f"deg(e_{k}) != deg(e_{i}) + deg(e_{j})",
                indices=(i, j, k),
            )
    if alpha.basis != basis:
        raise StructureError("alpha lives on a different basis")
    if not alpha.is_even:
        raise StructureError("alpha must be even (degree 0)")
    return ColorHomAlgebra(basis, bichar, rows, alpha)


def eval_product(a: ColorHomAlgebra, x, y) -> tuple:
    """Bilinear extension of the structure constants to arbitrary vectors."""
    n = a.dim
    if len(x) != n or len(y) != n:
        raise StructureError(f"vectors must have length {n}")
    zero = a.field.zero
    out = [zero] * n
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            coeff = xi * yj
            cell = a.structure[i][j]
            for k in range(n):
                ck = cell[k]
                if ck != 0:
                    out[k] = out[k] + coeff * ck
    return tuple(out)


def commutator_tensor(a: ColorHomAlgebra) -> tuple:
    """b[i][j][k] = c[i][j][k] - eps(deg_i, deg_j) * c[j][i][k]."""
    n = a.dim
    degs = a.degrees
    rows = []
    for i in range(n):
        plane = []
        for j in range(n):
            e = a.eps(degs[i], degs[j])
            plane.append(
                tuple(
                    a.structure[i][j][k] - e * a.structure[j][i][k]
                    for k in range(n)
                )
            )
        rows.append(tuple(plane))
    return tuple(rows)


def unit_vector(field: ScalarField, dim: int, i: int) -> tuple:
    return tuple(field.one if k == i else field.zero for k in range(dim))


def zero_vector(field: ScalarField, dim: int) -> tuple:
    return (field.zero,) * dim


def vec_add(x, y) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x, y) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(s, x) -> tuple:
    return tuple(s * a for a in x)


def vec_is_zero(x) -> bool:
    return all(a == 0 for a in x)


def homogeneous_components(basis: GradedBasis, x):
    """Split a vector into its homogeneous parts.

    Returns (degree, vector) pairs ordered by first occurrence of the degree
    along the basis; parts that vanish are dropped.
    """
    n = basis.dim
    if len(x) != n:
        raise StructureError(f"vector length {len(x)} != dim {n}")
    zero = basis.field.zero
    parts: list = []
    seen: dict = {}
    for i, d in enumerate(basis.degrees):
        if x[i] == 0:
            continue
        if d not in seen:
            seen[d] = len(parts)
            parts.append((d, [zero] * n))
        parts[seen[d]][1][i] = x[i]
    return [(d, tuple(v)) for d, v in parts]


def map_commutes_with_alpha(a: ColorHomAlgebra, m: GradedLinearMap) -> bool:
    return compose_maps(a.alpha, m).matrix == compose_maps(m, a.alpha).matrix
