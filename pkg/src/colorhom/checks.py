"""Identity checks with exact witnesses.

Every check quantifies an identity over basis tuples (sufficient by
multilinearity: once degrees are fixed, both sides are linear in each slot).
A failing check returns the first offending tuple in lexicographic slot
order together with the exactly evaluated left and right sides, so every
reported failure can be replayed.

The same two-sided identity evaluators back identity_residual_on_vectors,
which evaluates an identity on arbitrary (non-homogeneous) vectors by
splitting them into homogeneous components; it is the independent route the
test-suite compares the basis scans against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .core import (
    ColorHomAlgebra,
    GradedLinearMap,
    commutator_tensor,
    compose_maps,
    eval_map,
    eval_product,
    homogeneous_components,
    identity_map,
    make_algebra,
    matrix_rank,
    unit_vector,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    zero_vector,
)
from .errors import StructureError

__all__ = [
    "Witness",
    "Verdict",
    "PASS",
    "check_epsilon_commutative",
    "check_hom_associative",
    "check_hom_novikov",
    "check_right_commutative",
    "check_left_symmetric",
    "check_hom_lie",
    "check_lie_admissible",
    "check_cyclic_commutator_products",
    "check_multiplicative",
    "check_regular",
    "check_involutive",
    "is_weak_morphism",
    "is_morphism",
    "is_derivation",
    "is_averaging",
    "is_centroid",
    "is_rota_baxter",
    "in_alpha_center",
    "commutes_with_twist",
    "check_bracket_operator_conditions",
    "IDENTITY_ARITY",
    "IDENTITIES_BY_CHECK",
    "identity_sides",
    "identity_residual_on_vectors",
]


@dataclass(frozen=True)
class Witness:
    """A replayable counterexample: which identity, where, and both sides.

    left/right are coordinate tuples (scalar comparisons use length-1
    tuples); checks that fail for a non-evaluative reason (a singular map)
    carry left = right = None.
    """

    identity: str
    indices: tuple[int, ...]
    left: tuple | None
    right: tuple | None


@dataclass(frozen=True)
class Verdict:
    passes: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.passes


PASS = Verdict(True)


def _fail(identity: str, indices, left, right) -> Verdict:
    return Verdict(False, Witness(identity, tuple(indices), left, right))


# ---------------------------------------------------------------------------
# two-sided identity evaluators on homogeneous arguments
#
# Each takes (algebra, degrees, vectors) where vectors[s] is homogeneous of
# degree degrees[s], and returns (left, right) as coordinate tuples.

def _mul(a, x, y):
    return eval_product(a, x, y)


def _al(a, x):
    return eval_map(a.alpha, x)


def _bracket(a, dx, dy, x, y):
    # x*y - eps(x,y) y*x, formed from a's own product
    return vec_sub(_mul(a, x, y), vec_scale(a.eps(dx, dy), _mul(a, y, x)))


def _sides_epsilon_commutativity(a, degs, vecs):
    (dx, dy), (x, y) = degs, vecs
    return _mul(a, x, y), vec_scale(a.eps(dx, dy), _mul(a, y, x))


def _sides_hom_associativity(a, degs, vecs):
    x, y, z = vecs
    return _mul(a, _al(a, x), _mul(a, y, z)), _mul(a, _mul(a, x, y), _al(a, z))


def _sides_right_commutativity(a, degs, vecs):
    (dx, dy, dz), (x, y, z) = degs, vecs
    left = _mul(a, _mul(a, x, y), _al(a, z))
    right = vec_scale(a.eps(dy, dz), _mul(a, _mul(a, x, z), _al(a, y)))
    return left, right


def _sides_left_symmetry(a, degs, vecs):
    (dx, dy, dz), (x, y, z) = degs, vecs
    left = vec_sub(_mul(a, _mul(a, x, y), _al(a, z)), _mul(a, _al(a, x), _mul(a, y, z)))
    assoc_yx = vec_sub(
        _mul(a, _mul(a, y, x), _al(a, z)), _mul(a, _al(a, y), _mul(a, x, z))
    )
    return left, vec_scale(a.eps(dx, dy), assoc_yx)


def _sides_skew_symmetry(a, degs, vecs):
    (dx, dy), (x, y) = degs, vecs
    return _mul(a, x, y), vec_scale(-a.eps(dx, dy), _mul(a, y, x))


def _sides_hom_jacobi(a, degs, vecs):
    (dx, dy, dz), (x, y, z) = degs, vecs
    acc = vec_scale(a.eps(dz, dx), _mul(a, _al(a, x), _mul(a, y, z)))
    acc = vec_add(acc, vec_scale(a.eps(dx, dy), _mul(a, _al(a, y), _mul(a, z, x))))
    acc = vec_add(acc, vec_scale(a.eps(dy, dz), _mul(a, _al(a, z), _mul(a, x, y))))
    return acc, zero_vector(a.field, a.dim)


def _sides_cyclic_right_products(a, degs, vecs):
    (dx, dy, dz), (x, y, z) = degs, vecs
    acc = vec_scale(a.eps(dz, dx), _mul(a, _bracket(a, dx, dy, x, y), _al(a, z)))
    acc = vec_add(
        acc, vec_scale(a.eps(dx, dy), _mul(a, _bracket(a, dy, dz, y, z), _al(a, x)))
    )
    acc = vec_add(
        acc, vec_scale(a.eps(dy, dz), _mul(a, _bracket(a, dz, dx, z, x), _al(a, y)))
    )
    return acc, zero_vector(a.field, a.dim)


def _sides_cyclic_left_products(a, degs, vecs):
    (dx, dy, dz), (x, y, z) = degs, vecs
    acc = vec_scale(a.eps(dz, dx), _mul(a, _al(a, x), _bracket(a, dy, dz, y, z)))
    acc = vec_add(
        acc, vec_scale(a.eps(dx, dy), _mul(a, _al(a, y), _bracket(a, dz, dx, z, x)))
    )
    acc = vec_add(
        acc, vec_scale(a.eps(dy, dz), _mul(a, _al(a, z), _bracket(a, dx, dy, x, y)))
    )
    return acc, zero_vector(a.field, a.dim)


_IDENTITIES = {
    "epsilon-commutativity": (2, _sides_epsilon_commutativity),
    "hom-associativity": (3, _sides_hom_associativity),
    "right-commutativity": (3, _sides_right_commutativity),
    "left-symmetry": (3, _sides_left_symmetry),
    "skew-symmetry": (2, _sides_skew_symmetry),
    "hom-jacobi": (3, _sides_hom_jacobi),
    "cyclic-right-products": (3, _sides_cyclic_right_products),
    "cyclic-left-products": (3, _sides_cyclic_left_products),
}

IDENTITY_ARITY = {name: arity for name, (arity, _) in _IDENTITIES.items()}

# which multilinear identities each algebra-level check quantifies
IDENTITIES_BY_CHECK = {
    "epsilon_commutative": ("epsilon-commutativity",),
    "hom_associative": ("hom-associativity",),
    "hom_novikov": ("right-commutativity", "left-symmetry"),
    "left_symmetric": ("left-symmetry",),
    "hom_lie": ("skew-symmetry", "hom-jacobi"),
    "cyclic_commutator_products": ("cyclic-right-products", "cyclic-left-products"),
}


def identity_sides(a: ColorHomAlgebra, name: str, degrees, vectors):
    """Evaluate one identity's two sides on homogeneous arguments."""
    if name not in _IDENTITIES:
        raise StructureError(f"unknown identity {name!r}")
    arity, sides = _IDENTITIES[name]
    if len(degrees) != arity or len(vectors) != arity:
        raise StructureError(f"identity {name!r} takes {arity} arguments")
    return sides(a, tuple(degrees), tuple(vectors))


def _scan(a: ColorHomAlgebra, name: str) -> Verdict:
    """Quantify one identity over basis tuples, lexicographic slot order."""
    arity, sides = _IDENTITIES[name]
    n = a.dim
    degs = a.degrees
    units = [unit_vector(a.field, n, i) for i in range(n)]
    for idx in iproduct(range(n), repeat=arity):
        left, right = sides(a, tuple(degs[i] for i in idx), tuple(units[i] for i in idx))
        if left != right:
            return _fail(name, idx, left, right)
    return PASS


def identity_residual_on_vectors(a: ColorHomAlgebra, name: str, vectors) -> tuple:
    """left - right on arbitrary vectors, via homogeneous decomposition.

    The identity only makes sense slotwise on homogeneous elements (the
    bicharacter needs degrees), so each argument is split into components
    and the residual summed over all component combinations.
    """
    if name not in _IDENTITIES:
        raise StructureError(f"unknown identity {name!r}")
    arity, sides = _IDENTITIES[name]
    if len(vectors) != arity:
        raise StructureError(f"identity {name!r} takes {arity} arguments")
    split = [homogeneous_components(a.basis, v) for v in vectors]
    total = zero_vector(a.field, a.dim)
    for combo in iproduct(*split):
        degs = tuple(d for d, _ in combo)
        vecs = tuple(v for _, v in combo)
        left, right = sides(a, degs, vecs)
        total = vec_add(total, vec_sub(left, right))
    return total


# ---------------------------------------------------------------------------
# algebra-level checks

def check_epsilon_commutative(a: ColorHomAlgebra) -> Verdict:
    """x*y = eps(x,y) y*x on all basis pairs."""
    return _scan(a, "epsilon-commutativity")


def check_hom_associative(a: ColorHomAlgebra) -> Verdict:
    """alpha(x)*(y*z) = (x*y)*alpha(z) on all basis triples."""
    return _scan(a, "hom-associativity")


def check_right_commutative(a: ColorHomAlgebra) -> Verdict:
    """(x*y)*alpha(z) = eps(y,z) (x*z)*alpha(y) on all basis triples."""
    return _scan(a, "right-commutativity")


def check_left_symmetric(a: ColorHomAlgebra) -> Verdict:
    """The twisted associator is eps-symmetric in its first two slots."""
    return _scan(a, "left-symmetry")


def check_hom_novikov(a: ColorHomAlgebra) -> Verdict:
    """Right-commutativity plus left-symmetry; witness names the failed one."""
    v = _scan(a, "right-commutativity")
    if not v:
        return v
    return _scan(a, "left-symmetry")


def check_hom_lie(a: ColorHomAlgebra) -> Verdict:
    """Skew-symmetry plus the twisted Jacobi sum, both with eps signs."""
    v = _scan(a, "skew-symmetry")
    if not v:
        return v
    return _scan(a, "hom-jacobi")


def check_cyclic_commutator_products(a: ColorHomAlgebra) -> Verdict:
    """Both cyclic sums of bracket-by-product mixtures vanish.

    The bracket is formed from a's own product; these are the two sums that
    make a right-commutative product Hom-Lie admissible.
    """
    v = _scan(a, "cyclic-right-products")
    if not v:
        return v
    return _scan(a, "cyclic-left-products")


def check_lie_admissible(a: ColorHomAlgebra) -> Verdict:
    """The commutator bracket of a satisfies the Hom-Lie axioms."""
    bracket = make_algebra(a.basis, a.bicharacter, commutator_tensor(a), a.alpha)
    return check_hom_lie(bracket)


# ---------------------------------------------------------------------------
# properties of the twisting map

def check_multiplicative(a: ColorHomAlgebra) -> Verdict:
    """alpha(x*y) = alpha(x)*alpha(y) on all basis pairs."""
    return is_weak_morphism(a, a, a.alpha)


def check_regular(a: ColorHomAlgebra) -> Verdict:
    """alpha is an algebra automorphism: multiplicative and invertible."""
    v = check_multiplicative(a)
    if not v:
        return v
    if matrix_rank(a.field, a.alpha.matrix) != a.dim:
        return _fail("invertibility", (), None, None)
    return PASS


def check_involutive(a: ColorHomAlgebra) -> Verdict:
    """alpha composed with itself is the identity."""
    sq = compose_maps(a.alpha, a.alpha)
    ident = identity_map(a.basis)
    for i in range(a.dim):
        if sq.column(i) != ident.column(i):
            return _fail("involution", (i,), sq.column(i), ident.column(i))
    return PASS


# ---------------------------------------------------------------------------
# operator predicates

def _require_shared_space(a: ColorHomAlgebra, b: ColorHomAlgebra):
    if a.basis != b.basis:
        raise StructureError("the two algebras must share a basis")
    if a.bicharacter != b.bicharacter:
        raise StructureError("the two algebras must share a bicharacter")


def _require_even_endo(a: ColorHomAlgebra, f: GradedLinearMap, role: str):
    if f.basis != a.basis:
        raise StructureError(f"{role} lives on a different basis")
    if not f.is_even:
        raise StructureError(f"{role} must be even (degree 0)")


def commutes_with_twist(a: ColorHomAlgebra, f: GradedLinearMap) -> Verdict:
    """f must commute with a's twisting map; witness compares columns."""
    left = compose_maps(a.alpha, f)
    right = compose_maps(f, a.alpha)
    for i in range(a.dim):
        if left.column(i) != right.column(i):
            return _fail("twist-commutation", (i,), left.column(i), right.column(i))
    return PASS


def is_weak_morphism(a: ColorHomAlgebra, b: ColorHomAlgebra, f: GradedLinearMap) -> Verdict:
    """f(x *_a y) = f(x) *_b f(y); both products live on the shared basis."""
    _require_shared_space(a, b)
    _require_even_endo(a, f, "morphism candidate")
    n = a.dim
    for i, j in iproduct(range(n), repeat=2):
        left = eval_map(f, a.structure[i][j])
        right = eval_product(b, f.column(i), f.column(j))
        if left != right:
            return _fail("product-morphism", (i, j), left, right)
    return PASS


def is_morphism(a: ColorHomAlgebra, b: ColorHomAlgebra, f: GradedLinearMap) -> Verdict:
    """Weak morphism that also intertwines the twisting maps: f.alpha_a = alpha_b.f."""
    v = is_weak_morphism(a, b, f)
    if not v:
        return v
    left = compose_maps(f, a.alpha)
    right = compose_maps(b.alpha, f)
    for i in range(a.dim):
        if left.column(i) != right.column(i):
            return _fail("twist-compatibility", (i,), left.column(i), right.column(i))
    return PASS


def is_derivation(a: ColorHomAlgebra, d: GradedLinearMap, degree=None) -> Verdict:
    """Colored Leibniz rule: d(x*y) = d(x)*y + eps(deg d, x) x*d(y)."""
    if d.basis != a.basis:
        raise StructureError("derivation candidate lives on a different basis")
    if degree is not None and degree != d.degree:
        raise StructureError("declared degree disagrees with the map's degree")
    n = a.dim
    degs = a.degrees
    for i, j in iproduct(range(n), repeat=2):
        left = eval_map(d, a.structure[i][j])
        first = eval_product(a, d.column(i), unit_vector(a.field, n, j))
        second = vec_scale(
            a.eps(d.degree, degs[i]),
            eval_product(a, unit_vector(a.field, n, i), d.column(j)),
        )
        right = vec_add(first, second)
        if left != right:
            return _fail("leibniz", (i, j), left, right)
    return PASS


def is_averaging(a: ColorHomAlgebra, f: GradedLinearMap, side: str = "both") -> Verdict:
    """Averaging operator: commutes with alpha and absorbs itself.

    left side:  f(x)*f(y) = f(f(x)*y);  right side:  f(x)*f(y) = f(x*f(y)).
    """
    _require_even_endo(a, f, "averaging candidate")
    if side not in ("left", "right", "both"):
        raise StructureError(f"side must be left/right/both, got {side!r}")
    v = commutes_with_twist(a, f)
    if not v:
        return v
    n = a.dim
    for i, j in iproduct(range(n), repeat=2):
        ff = eval_product(a, f.column(i), f.column(j))
        if side in ("left", "both"):
            right = eval_map(f, eval_product(a, f.column(i), unit_vector(a.field, n, j)))
            if ff != right:
                return _fail("left-averaging", (i, j), ff, right)
        if side in ("right", "both"):
            right = eval_map(f, eval_product(a, unit_vector(a.field, n, i), f.column(j)))
            if ff != right:
                return _fail("right-averaging", (i, j), ff, right)
    return PASS


def is_centroid(a: ColorHomAlgebra, f: GradedLinearMap, side: str = "both") -> Verdict:
    """Centroid element: commutes with alpha and slides out of the product."""
    _require_even_endo(a, f, "centroid candidate")
    if side not in ("left", "right", "both"):
        raise StructureError(f"side must be left/right/both, got {side!r}")
    v = commutes_with_twist(a, f)
    if not v:
        return v
    n = a.dim
    for i, j in iproduct(range(n), repeat=2):
        fxy = eval_map(f, a.structure[i][j])
        if side in ("left", "both"):
            right = eval_product(a, f.column(i), unit_vector(a.field, n, j))
            if fxy != right:
                return _fail("left-centroid", (i, j), fxy, right)
        if side in ("right", "both"):
            right = eval_product(a, unit_vector(a.field, n, i), f.column(j))
            if fxy != right:
                return _fail("right-centroid", (i, j), fxy, right)
    return PASS


def is_rota_baxter(l: ColorHomAlgebra, r: GradedLinearMap, weight) -> Verdict:
    """Weight-lambda identity on l's own product, plus twist-commutation.

    [r(x), r(y)] = r([r(x), y] + [x, r(y)] + lambda [x, y]), where [,] is
    l's product.  Whether that product is Hom-Lie is a separate check.
    """
    _require_even_endo(l, r, "operator")
    lam = l.field.coerce(weight)
    v = commutes_with_twist(l, r)
    if not v:
        return v
    n = l.dim
    for i, j in iproduct(range(n), repeat=2):
        left = eval_product(l, r.column(i), r.column(j))
        inner = vec_add(
            eval_product(l, r.column(i), unit_vector(l.field, n, j)),
            eval_product(l, unit_vector(l.field, n, i), r.column(j)),
        )
        inner = vec_add(inner, vec_scale(lam, tuple(l.structure[i][j])))
        right = eval_map(r, inner)
        if left != right:
            return _fail("rota-baxter", (i, j), left, right)
    return PASS


def in_alpha_center(l: ColorHomAlgebra, x) -> bool:
    """True when [x, alpha(y)] = 0 for every y (checked on basis images)."""
    for j in range(l.dim):
        if not vec_is_zero(eval_product(l, x, eval_map(l.alpha, unit_vector(l.field, l.dim, j)))):
            return False
    return True


def check_bracket_operator_conditions(l: ColorHomAlgebra, f: GradedLinearMap) -> Verdict:
    """The two conditions under which x*y = [f(x), y] is Hom-Novikov.

    defect-centrality: f([f(x),y] + [x,f(y)]) - [f(x),f(y)] lies in the
    alpha-center of l for all basis x, y; the witness, when one exists,
    names (x, y, z) with [defect, alpha(z)] != 0.
    operator-right-commutativity: [f([f(x),y]), alpha(z)] =
    eps(y,z) [f([f(x),z]), alpha(y)] on basis triples.
    """
    _require_even_endo(l, f, "operator")
    v = commutes_with_twist(l, f)
    if not v:
        return v
    n = l.dim
    degs = l.degrees
    units = [unit_vector(l.field, n, i) for i in range(n)]
    zero = zero_vector(l.field, n)
    for i, j in iproduct(range(n), repeat=2):
        inner = vec_add(
            eval_product(l, f.column(i), units[j]),
            eval_product(l, units[i], f.column(j)),
        )
        defect = vec_sub(eval_map(f, inner), eval_product(l, f.column(i), f.column(j)))
        if not vec_is_zero(defect):
            for k in range(n):
                probe = eval_product(l, defect, eval_map(l.alpha, units[k]))
                if not vec_is_zero(probe):
                    return _fail("defect-centrality", (i, j, k), probe, zero)
    for i, j, k in iproduct(range(n), repeat=3):
        fij = eval_map(f, eval_product(l, f.column(i), units[j]))
        fik = eval_map(f, eval_product(l, f.column(i), units[k]))
        left = eval_product(l, fij, eval_map(l.alpha, units[k]))
        right = vec_scale(
            l.eps(degs[j], degs[k]),
            eval_product(l, fik, eval_map(l.alpha, units[j])),
        )
        if left != right:
            return _fail("operator-right-commutativity", (i, j, k), left, right)
    return PASS
