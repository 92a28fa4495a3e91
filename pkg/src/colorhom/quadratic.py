"""Invariant bilinear forms and the quadratic versions of the constructions.

A quadratic structure on (A, *, eps, alpha) is an even bilinear form B with
a companion even map beta satisfying, in the order they are checked:

  epsilon-symmetry   B(x, y) = eps(x, y) B(y, x)
  nondegeneracy      det(Gram) != 0 (Bareiss), cross-checked against rank
  invariance         B(x*y, beta(z)) = B(beta(x), y*z)
  twist-b-symmetry   B(alpha(x), y) = B(x, alpha(y))

Evenness (B(x, y) = 0 unless deg x + deg y = 0) is a property of the form
object itself and is enforced at construction; require_even=False turns
that restriction off for experiments.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .checks import (
    PASS,
    Verdict,
    Witness,
    check_hom_novikov,
    check_involutive,
    check_multiplicative,
    is_morphism,
)
from .constructions import commutator_algebra, untwist_involutive, yau_twist
from .core import (
    ColorHomAlgebra,
    GradedBasis,
    GradedLinearMap,
    determinant,
    identity_map,
    invert_map,
    matrix_rank,
)
from .errors import HypothesisError, SingularMapError, StructureError

__all__ = [
    "BilinearFormStructure",
    "form_value",
    "check_quadratic_structure",
    "is_symmetric_automorphism",
    "quadratic_yau_twist",
    "quadratic_commutator",
    "regular_quadratic_commutator",
    "quadratic_untwist_involutive",
]


@dataclass(frozen=True)
class BilinearFormStructure:
    """An even bilinear form given by its Gram matrix, plus a companion map.

    gram[i][j] = B(e_i, e_j).  The companion is the even map appearing in
    the invariance clause; identity for the plain quadratic case, the
    twisting map itself for the twisted one.
    """

    basis: GradedBasis
    gram: tuple
    companion: GradedLinearMap
    require_even: bool = True

    def __post_init__(self):
        n = self.basis.dim
        field = self.basis.field
        rows = tuple(tuple(field.coerce(v) for v in row) for row in self.gram)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise StructureError(f"Gram matrix must be {n}x{n}")
        if self.companion.basis != self.basis:
            raise StructureError("companion lives on a different basis")
        if not self.companion.is_even:
            raise StructureError("companion must be even (degree 0)")
        if self.require_even:
            degs = self.basis.degrees
            for i, j in iproduct(range(n), repeat=2):
                if rows[i][j] != 0 and not (degs[i] + degs[j]).is_zero:
                    raise StructureError(
                        f"form not even: B[{i}][{j}] != 0 but "
                        f"deg(e_{i}) + deg(e_{j}) != 0",
                        indices=(i, j),
                    )
        object.__setattr__(self, "gram", rows)


def form_value(f: BilinearFormStructure, x, y):
    """B(x, y) by bilinear extension of the Gram matrix."""
    n = f.basis.dim
    if len(x) != n or len(y) != n:
        raise StructureError(f"vectors must have length {n}")
    acc = f.basis.field.zero
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            g = f.gram[i][j]
            if g != 0:
                acc = acc + xi * g * yj
    return acc


def _fail(identity, indices, left, right) -> Verdict:
    return Verdict(False, Witness(identity, tuple(indices), left, right))


def check_quadratic_structure(a: ColorHomAlgebra, f: BilinearFormStructure) -> Verdict:
    """Run the quadratic clauses in order; the witness names the failed one.

    Scalar-valued comparisons carry length-1 tuples as witness values.  The
    nondegeneracy clause computes the determinant (Bareiss) and the rank
    (Gauss-Jordan) independently and insists that they agree.
    """
    if f.basis != a.basis:
        raise StructureError("form lives on a different basis")
    n = a.dim
    degs = a.degrees
    gram = f.gram
    beta = f.companion
    for i, j in iproduct(range(n), repeat=2):
        left = gram[i][j]
        right = a.eps(degs[i], degs[j]) * gram[j][i]
        if left != right:
            return _fail("epsilon-symmetry", (i, j), (left,), (right,))
    det = determinant(a.field, gram)
    rank = matrix_rank(a.field, gram)
    if (det != 0) != (rank == n):
        raise StructureError(
            "internal disagreement between determinant and rank elimination"
        )
    if det == 0:
        return _fail("nondegeneracy", (), None, None)
    # z-major scan: for a fixed z the invariance clause pairs off products
    # against it, and the first reported failure follows that grouping
    for k in range(n):
        bz = beta.column(k)
        for j in range(n):
            for i in range(n):
                left = form_value(f, a.structure[i][j], bz)
                right = form_value(f, beta.column(i), a.structure[j][k])
                if left != right:
                    return _fail("invariance", (i, j, k), (left,), (right,))
    for i, j in iproduct(range(n), repeat=2):
        left = form_value(f, a.alpha.column(i), _unit(a, j))
        right = form_value(f, _unit(a, i), a.alpha.column(j))
        if left != right:
            return _fail("twist-b-symmetry", (i, j), (left,), (right,))
    return PASS


def _unit(a: ColorHomAlgebra, i: int):
    one, zero = a.field.one, a.field.zero
    return tuple(one if k == i else zero for k in range(a.dim))


def is_symmetric_automorphism(a: ColorHomAlgebra, f: BilinearFormStructure, phi: GradedLinearMap) -> Verdict:
    """phi invertible, an algebra morphism of a, and B-symmetric.

    B-symmetry means B(phi(x), y) = B(x, phi(y)) on all basis pairs.
    """
    if f.basis != a.basis:
        raise StructureError("form lives on a different basis")
    if phi.basis != a.basis:
        raise StructureError("map lives on a different basis")
    if not phi.is_even:
        raise StructureError("map must be even (degree 0)")
    if matrix_rank(a.field, phi.matrix) != a.dim:
        return _fail("invertibility", (), None, None)
    v = is_morphism(a, a, phi)
    if not v:
        return v
    n = a.dim
    for i, j in iproduct(range(n), repeat=2):
        left = form_value(f, phi.column(i), _unit(a, j))
        right = form_value(f, _unit(a, i), phi.column(j))
        if left != right:
            return _fail("b-symmetry", (i, j), (left,), (right,))
    return PASS


def _require(op, requirement, verdict):
    if not verdict:
        raise HypothesisError(op, requirement, verdict)


def _require_identity_companion(op: str, f: BilinearFormStructure):
    if f.companion.matrix != identity_map(f.basis).matrix:
        raise StructureError(f"{op} expects a form with identity companion")


def _require_alpha_companion(op: str, a: ColorHomAlgebra, f: BilinearFormStructure):
    if f.companion.matrix != a.alpha.matrix:
        raise StructureError(f"{op} expects the twisting map as companion")


def _transpose_times(field, m, g):
    """rows of m^T g: result[i][j] = sum_a m[a][i] g[a][j]."""
    n = len(g)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = field.zero
            for a_ in range(n):
                v, w = m[a_][i], g[a_][j]
                if v != 0 and w != 0:
                    acc = acc + v * w
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def quadratic_yau_twist(a: ColorHomAlgebra, f: BilinearFormStructure, beta: GradedLinearMap, *, checked: bool = True):
    """Twist a quadratic Hom-Novikov algebra along a symmetric automorphism.

    Output: the Yau twist of a along beta, together with the form
    B'(x, y) = B(beta(x), y) whose companion is again the identity.
    Returns (algebra, form).
    """
    _require_identity_companion("quadratic_yau_twist", f)
    if checked:
        _require("quadratic_yau_twist", "hom-novikov", check_hom_novikov(a))
        _require(
            "quadratic_yau_twist", "quadratic-structure", check_quadratic_structure(a, f)
        )
        _require(
            "quadratic_yau_twist",
            "symmetric-automorphism",
            is_symmetric_automorphism(a, f, beta),
        )
    twisted = yau_twist(a, beta, checked=False)
    gram = _transpose_times(a.field, beta.matrix, f.gram)
    form = BilinearFormStructure(
        a.basis, gram, identity_map(a.basis), require_even=f.require_even
    )
    return twisted, form


def quadratic_commutator(a: ColorHomAlgebra, f: BilinearFormStructure, *, checked: bool = True):
    """Commutator bracket of a quadratic Hom-Novikov algebra, same form.

    The form stays invariant for the bracket; returns (algebra, form).
    """
    _require_identity_companion("quadratic_commutator", f)
    if checked:
        _require("quadratic_commutator", "hom-novikov", check_hom_novikov(a))
        _require(
            "quadratic_commutator", "quadratic-structure", check_quadratic_structure(a, f)
        )
    return commutator_algebra(a), f


def regular_quadratic_commutator(a: ColorHomAlgebra, f: BilinearFormStructure, *, checked: bool = True):
    """Bracket of a regular Hom-Novikov algebra quadratic with companion alpha.

    Output form B'(x, y) = B(alpha(x), y), companion alpha; returns
    (algebra, form).  Requires alpha invertible.
    """
    _require_alpha_companion("regular_quadratic_commutator", a, f)
    if checked:
        _require("regular_quadratic_commutator", "hom-novikov", check_hom_novikov(a))
        _require(
            "regular_quadratic_commutator",
            "quadratic-structure",
            check_quadratic_structure(a, f),
        )
    try:
        invert_map(a.alpha)
    except SingularMapError:
        raise HypothesisError(
            "regular_quadratic_commutator", "invertible-twist",
            detail="alpha is singular",
        ) from None
    gram = _transpose_times(a.field, a.alpha.matrix, f.gram)
    form = BilinearFormStructure(a.basis, gram, a.alpha, require_even=f.require_even)
    return commutator_algebra(a), form


def quadratic_untwist_involutive(a: ColorHomAlgebra, f: BilinearFormStructure, *, checked: bool = True):
    """Undo an involutive twist while keeping the form.

    Input: involutive multiplicative Hom-Novikov algebra quadratic with
    companion alpha.  Output: the untwisted algebra (product alpha(x*y),
    identity map) with the same Gram matrix and identity companion.
    Returns (algebra, form).
    """
    _require_alpha_companion("quadratic_untwist_involutive", a, f)
    if checked:
        _require("quadratic_untwist_involutive", "involutive", check_involutive(a))
        _require(
            "quadratic_untwist_involutive", "multiplicative", check_multiplicative(a)
        )
        _require("quadratic_untwist_involutive", "hom-novikov", check_hom_novikov(a))
        _require(
            "quadratic_untwist_involutive",
            "quadratic-structure",
            check_quadratic_structure(a, f),
        )
    plain = untwist_involutive(a, checked=False)
    form = BilinearFormStructure(
        a.basis, f.gram, identity_map(a.basis), require_even=f.require_even
    )
    return plain, form
