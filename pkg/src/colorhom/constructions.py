"""Constructions that manufacture new algebras from verified ingredients.

Every construction validates its stated hypotheses before computing
(checked=False skips that validation for experiments; structural sanity and
product evenness are still enforced by make_algebra on the way out).  All
outputs are assembled through make_algebra, so no construction can emit an
ill-formed algebra.
"""

from __future__ import annotations

from itertools import product as iproduct

from .checks import (
    check_epsilon_commutative,
    check_hom_associative,
    check_hom_lie,
    check_hom_novikov,
    check_involutive,
    check_multiplicative,
    commutes_with_twist,
    is_averaging,
    is_centroid,
    is_derivation,
    is_weak_morphism,
)
from .core import (
    ColorHomAlgebra,
    GradedBasis,
    GradedLinearMap,
    commutator_tensor,
    compose_maps,
    eval_map,
    eval_product,
    homogeneous_components,
    identity_map,
    invert_map,
    make_algebra,
    map_power,
    unit_vector,
)
from .errors import HypothesisError, SingularMapError, StructureError

__all__ = [
    "yau_twist",
    "power_twist",
    "centroid_twist",
    "xi_square_twist",
    "commutator_algebra",
    "derivation_product",
    "composed_derivation_product",
    "averaging_product",
    "bracket_operator_product",
    "direct_sum",
    "tensor_product",
    "untwist_involutive",
    "regular_lie_untwist",
]


def _require(op: str, requirement: str, verdict):
    if not verdict:
        raise HypothesisError(op, requirement, verdict)


def _map_structure(f: GradedLinearMap, a: ColorHomAlgebra) -> tuple:
    """Apply f to every product: c'[i][j] = f(e_i * e_j)."""
    return tuple(
        tuple(eval_map(f, a.structure[i][j]) for j in range(a.dim))
        for i in range(a.dim)
    )


def yau_twist(a: ColorHomAlgebra, beta: GradedLinearMap, *, checked: bool = True) -> ColorHomAlgebra:
    """Twist along a weak self-morphism: product beta(x*y), map beta.alpha.

    For Hom-Novikov input the twist is Hom-Novikov again; the hypothesis
    check enforces exactly that input class.
    """
    if checked:
        _require("yau_twist", "weak-morphism", is_weak_morphism(a, a, beta))
        _require("yau_twist", "hom-novikov", check_hom_novikov(a))
    return make_algebra(
        a.basis,
        a.bicharacter,
        _map_structure(beta, a),
        compose_maps(beta, a.alpha),
    )


def power_twist(a: ColorHomAlgebra, n: int, *, checked: bool = True) -> ColorHomAlgebra:
    """n-th self-twist of a multiplicative algebra: alpha^n(x*y), map alpha^(n+1)."""
    if not isinstance(n, int) or n < 0:
        raise StructureError(f"power_twist wants n >= 0, got {n!r}")
    if checked:
        _require("power_twist", "multiplicative", check_multiplicative(a))
        _require("power_twist", "hom-novikov", check_hom_novikov(a))
    an = map_power(a.alpha, n)
    return make_algebra(
        a.basis, a.bicharacter, _map_structure(an, a), map_power(a.alpha, n + 1)
    )


def centroid_twist(a: ColorHomAlgebra, beta: GradedLinearMap, *, checked: bool = True) -> ColorHomAlgebra:
    """Product beta(x*y) for a two-sided centroid element; twisting map kept."""
    if checked:
        _require("centroid_twist", "centroid", is_centroid(a, beta, "both"))
        _require("centroid_twist", "hom-novikov", check_hom_novikov(a))
    return make_algebra(a.basis, a.bicharacter, _map_structure(beta, a), a.alpha)


def xi_square_twist(a: ColorHomAlgebra, xi, *, checked: bool = True) -> ColorHomAlgebra:
    """x ∘ y = xi * (x * y) with twisting map alpha^2.

    Hypotheses: a is eps-commutative Hom-associative and xi is homogeneous
    of degree 0.
    """
    if len(xi) != a.dim:
        raise StructureError(f"xi must have length {a.dim}")
    xi = tuple(a.field.coerce(v) for v in xi)
    if checked:
        parts = homogeneous_components(a.basis, xi)
        if any(not d.is_zero for d, _ in parts):
            raise HypothesisError(
                "xi_square_twist", "xi-degree-zero",
                detail="xi has a component of nonzero degree",
            )
        _require(
            "xi_square_twist", "epsilon-commutative", check_epsilon_commutative(a)
        )
        _require("xi_square_twist", "hom-associative", check_hom_associative(a))
    structure = tuple(
        tuple(eval_product(a, xi, a.structure[i][j]) for j in range(a.dim))
        for i in range(a.dim)
    )
    return make_algebra(
        a.basis, a.bicharacter, structure, map_power(a.alpha, 2)
    )


def commutator_algebra(a: ColorHomAlgebra) -> ColorHomAlgebra:
    """Bracket algebra [x,y] = x*y - eps(x,y) y*x with the same twisting map.

    Total: no hypotheses.  The bracket of a Hom-Novikov algebra is Hom-Lie;
    that conclusion is a check on the output, not a precondition here.
    """
    return make_algebra(a.basis, a.bicharacter, commutator_tensor(a), a.alpha)


def derivation_product(a: ColorHomAlgebra, d: GradedLinearMap, *, checked: bool = True) -> ColorHomAlgebra:
    """x ∘ y = x * d(y) on an eps-commutative Hom-associative algebra.

    d must be an even derivation commuting with alpha; the output is
    Hom-Novikov with the same twisting map.
    """
    if checked:
        _require(
            "derivation_product", "epsilon-commutative", check_epsilon_commutative(a)
        )
        _require("derivation_product", "hom-associative", check_hom_associative(a))
        if not d.is_even:
            raise HypothesisError(
                "derivation_product", "even-derivation", detail="derivation has nonzero degree"
            )
        _require("derivation_product", "derivation", is_derivation(a, d))
        _require(
            "derivation_product", "twist-commutation", commutes_with_twist(a, d)
        )
    structure = tuple(
        tuple(
            eval_product(a, unit_vector(a.field, a.dim, i), d.column(j))
            for j in range(a.dim)
        )
        for i in range(a.dim)
    )
    return make_algebra(a.basis, a.bicharacter, structure, a.alpha)


def composed_derivation_product(a: ColorHomAlgebra, d: GradedLinearMap, *, checked: bool = True) -> ColorHomAlgebra:
    """x ∘ y = m(x * d(y)) where m is carried in a's twisting-map slot.

    Hypotheses: the product of a (with the twisting map replaced by the
    identity) is eps-commutative and associative, m is a weak self-morphism
    of it, and d is an even derivation commuting with m.  The output is the
    Yau twist of the derivation product along m, so it is Hom-Novikov with
    twisting map m.
    """
    m = a.alpha
    plain = make_algebra(a.basis, a.bicharacter, a.structure, identity_map(a.basis))
    if checked:
        _require(
            "composed_derivation_product",
            "epsilon-commutative",
            check_epsilon_commutative(plain),
        )
        _require(
            "composed_derivation_product",
            "associative",
            check_hom_associative(plain),
        )
        _require(
            "composed_derivation_product",
            "weak-morphism",
            is_weak_morphism(plain, plain, m),
        )
        if not d.is_even:
            raise HypothesisError(
                "composed_derivation_product", "even-derivation",
                detail="derivation has nonzero degree",
            )
        _require("composed_derivation_product", "derivation", is_derivation(plain, d))
        if compose_maps(d, m).matrix != compose_maps(m, d).matrix:
            raise HypothesisError(
                "composed_derivation_product", "twist-commutation",
                detail="derivation does not commute with the morphism",
            )
    structure = tuple(
        tuple(
            eval_map(m, eval_product(a, unit_vector(a.field, a.dim, i), d.column(j)))
            for j in range(a.dim)
        )
        for i in range(a.dim)
    )
    return make_algebra(a.basis, a.bicharacter, structure, m)


def averaging_product(a: ColorHomAlgebra, f: GradedLinearMap, *, checked: bool = True) -> ColorHomAlgebra:
    """x ∘ y = x * f(y) for a two-sided averaging operator f.

    Hypotheses: a is eps-commutative Hom-Novikov; output keeps alpha.
    """
    if checked:
        _require(
            "averaging_product", "epsilon-commutative", check_epsilon_commutative(a)
        )
        _require("averaging_product", "hom-novikov", check_hom_novikov(a))
        _require("averaging_product", "averaging", is_averaging(a, f, "both"))
    structure = tuple(
        tuple(
            eval_product(a, unit_vector(a.field, a.dim, i), f.column(j))
            for j in range(a.dim)
        )
        for i in range(a.dim)
    )
    return make_algebra(a.basis, a.bicharacter, structure, a.alpha)


def bracket_operator_product(l: ColorHomAlgebra, f: GradedLinearMap, *, checked: bool = True) -> ColorHomAlgebra:
    """x ∘ y = [f(x), y] on a Hom-Lie algebra, f even and alpha-commuting.

    The Hom-Novikov conclusion needs the two bracket-operator conditions;
    they are checks on f run by callers or test suites, not silently assumed
    here, so checked mode validates only Hom-Lie-ness and commutation.
    """
    if not f.is_even:
        raise StructureError("operator must be even (degree 0)")
    if f.basis != l.basis:
        raise StructureError("operator lives on a different basis")
    if checked:
        _require("bracket_operator_product", "hom-lie", check_hom_lie(l))
        _require(
            "bracket_operator_product", "twist-commutation", commutes_with_twist(l, f)
        )
    structure = tuple(
        tuple(
            eval_product(l, f.column(i), unit_vector(l.field, l.dim, j))
            for j in range(l.dim)
        )
        for i in range(l.dim)
    )
    return make_algebra(l.basis, l.bicharacter, structure, l.alpha)


def direct_sum(a: ColorHomAlgebra, b: ColorHomAlgebra) -> ColorHomAlgebra:
    """Block-diagonal sum; requires identical field, group, and bicharacter.

    mixed products vanish, alpha acts blockwise; Hom-Novikov when both
    summands are (a conclusion, checked by callers).
    """
    if a.field != b.field:
        raise StructureError("direct sum needs a shared scalar field")
    if a.group != b.group:
        raise StructureError("direct sum needs a shared grading group")
    if a.bicharacter != b.bicharacter:
        raise StructureError("direct sum needs a shared bicharacter")
    na, nb = a.dim, b.dim
    n = na + nb
    basis = GradedBasis(a.field, a.group, a.degrees + b.degrees)
    zero = a.field.zero
    structure = []
    for i in range(n):
        plane = []
        for j in range(n):
            cell = [zero] * n
            if i < na and j < na:
                for k in range(na):
                    cell[k] = a.structure[i][j][k]
            elif i >= na and j >= na:
                for k in range(nb):
                    cell[na + k] = b.structure[i - na][j - na][k]
            plane.append(tuple(cell))
        structure.append(tuple(plane))
    alpha_rows = []
    for k in range(n):
        row = [zero] * n
        for i in range(n):
            if k < na and i < na:
                row[i] = a.alpha.matrix[k][i]
            elif k >= na and i >= na:
                row[i] = b.alpha.matrix[k - na][i - na]
        alpha_rows.append(tuple(row))
    alpha = GradedLinearMap(basis, tuple(alpha_rows))
    return make_algebra(basis, a.bicharacter, tuple(structure), alpha)


def tensor_product(s: ColorHomAlgebra, a: ColorHomAlgebra, *, checked: bool = True) -> ColorHomAlgebra:
    """(x ⊗ u) ∘ (y ⊗ v) = eps(u, y) (x*y) ⊗ (u*v).

    First factor s: Hom-Novikov; second factor a: eps-commutative
    Hom-associative, over the same field, group, and bicharacter.  Basis
    pairs are ordered row-major: index (i, p) -> i * dim(a) + p.
    """
    if s.field != a.field:
        raise StructureError("tensor product needs a shared scalar field")
    if s.group != a.group:
        raise StructureError("tensor product needs a shared grading group")
    if s.bicharacter != a.bicharacter:
        raise StructureError("tensor product needs a shared bicharacter")
    if checked:
        _require("tensor_product", "hom-novikov(first factor)", check_hom_novikov(s))
        _require(
            "tensor_product",
            "epsilon-commutative(second factor)",
            check_epsilon_commutative(a),
        )
        _require(
            "tensor_product", "hom-associative(second factor)", check_hom_associative(a)
        )
    ns, na = s.dim, a.dim
    n = ns * na
    degrees = tuple(
        s.degrees[i] + a.degrees[p] for i in range(ns) for p in range(na)
    )
    basis = GradedBasis(s.field, s.group, degrees)
    zero = s.field.zero
    structure = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for i, p, j, q in iproduct(range(ns), range(na), range(ns), range(na)):
        sign = s.eps(a.degrees[p], s.degrees[j])
        row = i * na + p
        col = j * na + q
        scell = s.structure[i][j]
        acell = a.structure[p][q]
        for k in range(ns):
            sk = scell[k]
            if sk == 0:
                continue
            for r in range(na):
                ar = acell[r]
                if ar == 0:
                    continue
                structure[row][col][k * na + r] = (
                    structure[row][col][k * na + r] + sign * sk * ar
                )
    alpha_rows = [[zero] * n for _ in range(n)]
    for k, r, i, p in iproduct(range(ns), range(na), range(ns), range(na)):
        v = s.alpha.matrix[k][i] * a.alpha.matrix[r][p]
        if v != 0:
            alpha_rows[k * na + r][i * na + p] = v
    alpha = GradedLinearMap(basis, tuple(tuple(r) for r in alpha_rows))
    return make_algebra(
        basis,
        s.bicharacter,
        tuple(tuple(tuple(c) for c in plane) for plane in structure),
        alpha,
    )


def untwist_involutive(a: ColorHomAlgebra, *, checked: bool = True) -> ColorHomAlgebra:
    """Recover an untwisted algebra from an involutive multiplicative one.

    Product alpha(x*y), twisting map identity.  For involutive
    multiplicative Hom-Novikov input the output is Novikov with identity
    map (plain right-commutative left-symmetric).
    """
    if checked:
        _require("untwist_involutive", "involutive", check_involutive(a))
        _require("untwist_involutive", "multiplicative", check_multiplicative(a))
        _require("untwist_involutive", "hom-novikov", check_hom_novikov(a))
    return make_algebra(
        a.basis, a.bicharacter, _map_structure(a.alpha, a), identity_map(a.basis)
    )


def regular_lie_untwist(a: ColorHomAlgebra, *, checked: bool = True) -> ColorHomAlgebra:
    """Untwisted bracket alpha^{-1}([x, y]) from a regular Hom-Novikov algebra.

    Requires alpha invertible; output carries the identity twisting map.
    """
    if checked:
        _require("regular_lie_untwist", "hom-novikov", check_hom_novikov(a))
    try:
        inv = invert_map(a.alpha)
    except SingularMapError:
        raise HypothesisError(
            "regular_lie_untwist", "invertible-twist",
            detail="alpha is singular",
        ) from None
    bracket = commutator_tensor(a)
    structure = tuple(
        tuple(eval_map(inv, bracket[i][j]) for j in range(a.dim))
        for i in range(a.dim)
    )
    return make_algebra(a.basis, a.bicharacter, structure, identity_map(a.basis))
