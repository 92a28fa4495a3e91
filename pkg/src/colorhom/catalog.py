"""Deterministic factories for the concrete instances used in tests and suites.

Each entry carries a recipe (name + parameters) and a tuple of claims: the
checks the instance is asserted to pass.  Claims are re-verified by the test
suite, so the catalog certifies itself instead of citing anything.

Everything here is reproducible bit for bit: no randomness outside
search_maps, and search_maps takes an explicit seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product as iproduct

from .checks import (
    Verdict,
    check_cyclic_commutator_products,
    check_epsilon_commutative,
    check_hom_associative,
    check_hom_lie,
    check_hom_novikov,
    check_involutive,
    check_left_symmetric,
    check_lie_admissible,
    check_multiplicative,
    check_regular,
    is_averaging,
    is_centroid,
    is_derivation,
    is_morphism,
    is_rota_baxter,
    is_weak_morphism,
)
from .constructions import derivation_product, yau_twist
from .core import (
    ColorHomAlgebra,
    GradedBasis,
    GradedLinearMap,
    identity_map,
    make_algebra,
    make_map,
    scalar_map,
    trivial_basis,
)
from .errors import StructureError
from .grading import GradeGroup, make_bicharacter, trivial_bicharacter
from .quadratic import BilinearFormStructure, is_symmetric_automorphism
from .scalars import ScalarField, rationals

__all__ = [
    "InstanceRecipe",
    "CatalogEntry",
    "truncated_polynomial",
    "dt_derivation",
    "euler_derivation",
    "unit_projection",
    "scaling_morphism",
    "super_commutative_line",
    "pairing_form",
    "RECIPES",
    "build_entry",
    "standard_entries",
    "CHECKS_BY_NAME",
    "run_named_check",
    "search_maps",
]


@dataclass(frozen=True)
class InstanceRecipe:
    """Reproducible identity of a catalog instance."""

    name: str
    field_label: str
    params: tuple  # sorted (key, value) pairs, values already printable
    claims: tuple  # check names the instance passes


@dataclass
class CatalogEntry:
    recipe: InstanceRecipe
    algebra: ColorHomAlgebra
    maps: dict = dc_field(default_factory=dict)
    forms: dict = dc_field(default_factory=dict)


# ---------------------------------------------------------------------------
# building blocks

def truncated_polynomial(n: int, field: ScalarField | None = None) -> ColorHomAlgebra:
    """K[t]/(t^n) on basis 1, t, ..., t^(n-1); trivially graded, identity twist."""
    if not isinstance(n, int) or n < 1:
        raise StructureError(f"truncation order must be >= 1, got {n!r}")
    field = field or rationals()
    basis = trivial_basis(field, n)
    zero, one = field.zero, field.one
    structure = tuple(
        tuple(
            tuple(one if (i + j) == k else zero for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )
    bichar = trivial_bicharacter(field, basis.group)
    return make_algebra(basis, bichar, structure, identity_map(basis))


def dt_derivation(a: ColorHomAlgebra) -> GradedLinearMap:
    """d/dt on a truncated polynomial basis: e_i -> i * e_(i-1).

    Not a derivation of the truncated product unless the characteristic
    divides the truncation order: the quotient kills t^n but not n*t^(n-1).
    """
    n = a.dim
    field = a.field
    rows = [[field.zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i - 1][i] = field.from_int(i)
    return make_map(a.basis, rows)


def euler_derivation(a: ColorHomAlgebra) -> GradedLinearMap:
    """t*d/dt on a truncated polynomial basis: e_i -> i * e_i.

    A genuine derivation of the truncated product in every characteristic,
    since it scales each monomial by its degree and degrees add.
    """
    n = a.dim
    field = a.field
    rows = [[field.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = field.from_int(i)
    return make_map(a.basis, rows)


def unit_projection(a: ColorHomAlgebra) -> GradedLinearMap:
    """Projection onto the span of e_0; an averaging operator when e_0 is a unit."""
    n = a.dim
    field = a.field
    rows = [[field.zero] * n for _ in range(n)]
    rows[0][0] = field.one
    return make_map(a.basis, rows)


def scaling_morphism(a: ColorHomAlgebra, c, weights=None) -> GradedLinearMap:
    """diag(c^w_i) for declared integer weights; default weight of e_i is i.

    Whether the result is a (weak) morphism depends on the instance; run
    is_weak_morphism / is_morphism to find out.  c = 0 is allowed and gives
    a non-invertible candidate.
    """
    n = a.dim
    field = a.field
    c = field.coerce(c)
    if weights is None:
        weights = tuple(range(n))
    if len(weights) != n:
        raise StructureError(f"need {n} weights")
    rows = [[field.zero] * n for _ in range(n)]
    for i, w in enumerate(weights):
        rows[i][i] = c ** w
    return make_map(a.basis, rows)


def super_commutative_line(field: ScalarField | None = None) -> ColorHomAlgebra:
    """Z_2-graded line K[x]/(x^2), x odd: sign bicharacter, x*x = 0."""
    field = field or rationals()
    group = GradeGroup(0, (2,))
    basis = GradedBasis(field, group, (group.element((0,)), group.element((1,))))
    bichar = make_bicharacter(field, group, ((field.from_int(-1),),))
    zero, one = field.zero, field.one
    structure = (
        ((one, zero), (zero, one)),
        ((zero, one), (zero, zero)),
    )
    return make_algebra(basis, bichar, structure, identity_map(basis))


def pairing_form(a: ColorHomAlgebra, companion: GradedLinearMap | None = None) -> BilinearFormStructure:
    """Anti-diagonal pairing B(e_i, e_j) = [i + j = dim - 1] on a trivially graded basis."""
    n = a.dim
    field = a.field
    gram = tuple(
        tuple(field.one if i + j == n - 1 else field.zero for j in range(n))
        for i in range(n)
    )
    return BilinearFormStructure(
        a.basis, gram, companion if companion is not None else identity_map(a.basis)
    )


def _order3_element(field: ScalarField):
    """A deterministic element of multiplicative order 3 in F_p, p = 1 (mod 3)."""
    if field.characteristic == 0 or (field.p - 1) % 3 != 0:
        raise StructureError(
            "an order-3 bicharacter value needs a prime field with p = 1 (mod 3); "
            f"{field} has none"
        )
    e = (field.p - 1) // 3
    for x in range(2, field.p):
        g = pow(x, e, field.p)
        if g != 1:
            return field.from_int(g)
    raise StructureError("no order-3 element found")  # unreachable for valid p


# ---------------------------------------------------------------------------
# recipes

def _recipe_truncated_polynomial(field: ScalarField, n: int = 3) -> CatalogEntry:
    a = truncated_polynomial(n, field)
    claims = (
        "epsilon_commutative", "hom_associative", "hom_novikov", "left_symmetric",
        "lie_admissible", "cyclic_commutator_products", "multiplicative",
        "regular", "involutive",
    )
    maps = {
        "dt": dt_derivation(a),
        "euler": euler_derivation(a),
        "proj_unit": unit_projection(a),
        "scale2": scaling_morphism(a, 2),
        "sign": scaling_morphism(a, -1),
        "half": scalar_map(a.basis, Fraction(1, 2)),
    }
    forms = {"pairing": pairing_form(a)}
    return CatalogEntry(
        InstanceRecipe("truncated_polynomial", str(field), (("n", n),), claims),
        a, maps, forms,
    )


def _recipe_super_commutative_line(field: ScalarField) -> CatalogEntry:
    a = super_commutative_line(field)
    claims = (
        "epsilon_commutative", "hom_associative", "hom_novikov", "left_symmetric",
        "lie_admissible", "cyclic_commutator_products", "multiplicative",
        "regular", "involutive",
    )
    sign = make_map(
        a.basis,
        ((field.one, field.zero), (field.zero, field.from_int(-1))),
    )
    return CatalogEntry(
        InstanceRecipe("super_commutative_line", str(field), (), claims),
        a, {"sign": sign}, {},
    )


def _recipe_euler_novikov(field: ScalarField, n: int = 3) -> CatalogEntry:
    base = truncated_polynomial(n, field)
    a = derivation_product(base, euler_derivation(base))
    claims = (
        "hom_novikov", "left_symmetric", "lie_admissible",
        "cyclic_commutator_products", "multiplicative", "regular", "involutive",
    )
    return CatalogEntry(
        InstanceRecipe("euler_novikov", str(field), (("n", n),), claims),
        a, {"half": scalar_map(a.basis, Fraction(1, 2))}, {},
    )


def _recipe_scaled_polynomial(field: ScalarField, n: int = 3, c=2) -> CatalogEntry:
    base = truncated_polynomial(n, field)
    c = field.coerce(c)
    a = yau_twist(base, scaling_morphism(base, c))
    claims = [
        "epsilon_commutative", "hom_associative", "hom_novikov", "left_symmetric",
        "lie_admissible", "cyclic_commutator_products", "multiplicative",
    ]
    if c != 0:
        claims.append("regular")
    if c * c == field.one:
        claims.append("involutive")
    return CatalogEntry(
        InstanceRecipe(
            "scaled_polynomial", str(field),
            (("c", field.to_json(c)), ("n", n)), tuple(claims),
        ),
        a, {}, {},
    )


def _recipe_involutive_quadratic_polynomial(field: ScalarField, n: int = 3) -> CatalogEntry:
    if n % 2 == 0:
        raise StructureError("the sign twist is form-symmetric only for odd n")
    entry = _recipe_scaled_polynomial(field, n, field.from_int(-1))
    a = entry.algebra
    form = pairing_form(a, a.alpha)
    claims = entry.recipe.claims
    return CatalogEntry(
        InstanceRecipe(
            "involutive_quadratic_polynomial", str(field), (("n", n),), claims
        ),
        a, {}, {"pairing": form},
    )


def _recipe_z3_graded_nilpotent(field: ScalarField) -> CatalogEntry:
    """Z_3 x Z_3 graded: x*y = eps(x,y) z, y*x = z, everything else zero.

    The bicharacter takes a genuine cube root of unity, so this only exists
    over prime fields with p = 1 (mod 3).
    """
    g = _order3_element(field)
    group = GradeGroup(0, (3, 3))
    one = field.one
    bichar = make_bicharacter(field, group, ((one, g), (one / g, one)))
    degs = (group.element((1, 0)), group.element((0, 1)), group.element((1, 1)))
    basis = GradedBasis(field, group, degs)
    zero = field.zero
    structure = [[[zero] * 3 for _ in range(3)] for _ in range(3)]
    structure[0][1][2] = g
    structure[1][0][2] = one
    a = make_algebra(
        basis, bichar,
        tuple(tuple(tuple(c) for c in plane) for plane in structure),
        identity_map(basis),
    )
    claims = (
        "epsilon_commutative", "hom_associative", "hom_novikov", "left_symmetric",
        "lie_admissible", "cyclic_commutator_products", "multiplicative",
        "regular", "involutive",
    )
    return CatalogEntry(
        InstanceRecipe("z3_graded_nilpotent", str(field), (), claims), a, {}, {}
    )


def _recipe_solvable_bracket(field: ScalarField) -> CatalogEntry:
    """The 2-dim solvable bracket [e_0, e_1] = e_1 with identity twist.

    Comes with rb_proj = projection onto e_0, a weight-0 operator making
    [f(x), y] a (left-symmetric) product.
    """
    basis = trivial_basis(field, 2)
    zero, one = field.zero, field.one
    structure = (
        ((zero, zero), (zero, one)),
        ((zero, -one), (zero, zero)),
    )
    a = make_algebra(
        basis, trivial_bicharacter(field, basis.group), structure, identity_map(basis)
    )
    rows = ((one, zero), (zero, zero))
    claims = (
        "hom_lie", "lie_admissible", "cyclic_commutator_products",
        "multiplicative", "regular", "involutive",
    )
    return CatalogEntry(
        InstanceRecipe("solvable_bracket", str(field), (), claims),
        a, {"rb_proj": make_map(basis, rows)}, {},
    )


def _recipe_zero_algebra(field: ScalarField, dim: int = 2) -> CatalogEntry:
    basis = trivial_basis(field, dim)
    zero = field.zero
    structure = tuple(
        tuple((zero,) * dim for _ in range(dim)) for _ in range(dim)
    )
    a = make_algebra(
        basis, trivial_bicharacter(field, basis.group), structure, identity_map(basis)
    )
    claims = (
        "epsilon_commutative", "hom_associative", "hom_novikov", "left_symmetric",
        "hom_lie", "lie_admissible", "cyclic_commutator_products",
        "multiplicative", "regular", "involutive",
    )
    return CatalogEntry(
        InstanceRecipe("zero_algebra", str(field), (("dim", dim),), claims),
        a, {}, {},
    )


RECIPES = {
    "truncated_polynomial": (_recipe_truncated_polynomial, {"n": int}),
    "super_commutative_line": (_recipe_super_commutative_line, {}),
    "euler_novikov": (_recipe_euler_novikov, {"n": int}),
    "scaled_polynomial": (_recipe_scaled_polynomial, {"n": int, "c": "scalar"}),
    "involutive_quadratic_polynomial": (
        _recipe_involutive_quadratic_polynomial, {"n": int},
    ),
    "z3_graded_nilpotent": (_recipe_z3_graded_nilpotent, {}),
    "solvable_bracket": (_recipe_solvable_bracket, {}),
    "zero_algebra": (_recipe_zero_algebra, {"dim": int}),
}


def build_entry(name: str, field: ScalarField, **params) -> CatalogEntry:
    if name not in RECIPES:
        raise StructureError(f"unknown recipe {name!r}")
    builder, spec = RECIPES[name]
    unknown = set(params) - set(spec)
    if unknown:
        raise StructureError(f"recipe {name!r} takes no parameter {sorted(unknown)}")
    return builder(field, **params)


def standard_entries(field: ScalarField) -> list:
    """The fixed instance battery used by property tests."""
    entries = [
        build_entry("truncated_polynomial", field, n=1),
        build_entry("truncated_polynomial", field, n=2),
        build_entry("truncated_polynomial", field, n=3),
        build_entry("truncated_polynomial", field, n=4),
        build_entry("super_commutative_line", field),
        build_entry("euler_novikov", field, n=2),
        build_entry("euler_novikov", field, n=3),
        build_entry("scaled_polynomial", field, n=3, c=2),
        build_entry("scaled_polynomial", field, n=3, c=-1),
        build_entry("involutive_quadratic_polynomial", field, n=3),
        build_entry("solvable_bracket", field),
        build_entry("zero_algebra", field, dim=2),
    ]
    if field.characteristic != 0 and (field.p - 1) % 3 == 0:
        entries.append(build_entry("z3_graded_nilpotent", field))
    return entries


# unary checks addressable by name (CLI, claims, suites)
CHECKS_BY_NAME = {
    "epsilon_commutative": check_epsilon_commutative,
    "hom_associative": check_hom_associative,
    "hom_novikov": check_hom_novikov,
    "left_symmetric": check_left_symmetric,
    "hom_lie": check_hom_lie,
    "lie_admissible": check_lie_admissible,
    "cyclic_commutator_products": check_cyclic_commutator_products,
    "multiplicative": check_multiplicative,
    "regular": check_regular,
    "involutive": check_involutive,
}


def run_named_check(a: ColorHomAlgebra, name: str) -> Verdict:
    if name not in CHECKS_BY_NAME:
        raise StructureError(f"unknown check {name!r}")
    return CHECKS_BY_NAME[name](a)


# ---------------------------------------------------------------------------
# structure search

_SEARCH_PREDICATES = {
    "weak_morphism": lambda a, m, kw: is_weak_morphism(a, a, m),
    "morphism": lambda a, m, kw: is_morphism(a, a, m),
    "derivation": lambda a, m, kw: is_derivation(a, m),
    "averaging": lambda a, m, kw: is_averaging(a, m, kw.get("side", "both")),
    "centroid": lambda a, m, kw: is_centroid(a, m, kw.get("side", "both")),
    "rota_baxter": lambda a, m, kw: is_rota_baxter(a, m, kw.get("weight", 0)),
    "symmetric_automorphism": lambda a, m, kw: is_symmetric_automorphism(
        a, kw["form"], m
    ),
}


def search_maps(
    a: ColorHomAlgebra,
    predicate: str,
    *,
    seed: int = 0,
    budget: int = 10000,
    values=None,
    form: BilinearFormStructure | None = None,
    weight=None,
    side: str = "both",
) -> list:
    """Deterministic search for even maps satisfying a named predicate.

    Candidates are matrices supported on the even positions (deg e_k =
    deg e_i) with entries drawn from a small value set (default -1, 0, 1, 2).
    When the whole space fits in the budget it is enumerated exhaustively;
    otherwise `budget` candidates are sampled with the seeded generator.
    Hits come back deduplicated and sorted by matrix entries, so equal
    inputs give equal outputs.
    """
    if predicate not in _SEARCH_PREDICATES:
        raise StructureError(f"unknown search predicate {predicate!r}")
    if predicate == "symmetric_automorphism" and form is None:
        raise StructureError("symmetric_automorphism search needs form=...")
    kw = {"side": side}
    if form is not None:
        kw["form"] = form
    if weight is not None:
        kw["weight"] = weight
    field = a.field
    if values is None:
        values = (-1, 0, 1, 2)
    values = tuple(field.coerce(v) for v in values)
    n = a.dim
    degs = a.degrees
    positions = [
        (k, i) for k in range(n) for i in range(n) if degs[k] == degs[i]
    ]
    zero = field.zero
    pred = _SEARCH_PREDICATES[predicate]

    def candidate(assignment):
        rows = [[zero] * n for _ in range(n)]
        for (k, i), v in zip(positions, assignment):
            rows[k][i] = v
        return tuple(tuple(r) for r in rows)

    space = len(values) ** len(positions)
    seen = set()
    hits = []
    if space <= budget:
        assignments = iproduct(values, repeat=len(positions))
    else:
        rng = random.Random(seed)
        assignments = (
            tuple(rng.choice(values) for _ in positions) for _ in range(budget)
        )
    for assignment in assignments:
        rows = candidate(assignment)
        if rows in seen:
            continue
        seen.add(rows)
        m = GradedLinearMap(a.basis, rows)
        if pred(a, m, kw):
            hits.append(m)
    hits.sort(key=lambda m: tuple(field.sort_key(v) for row in m.matrix for v in row))
    return hits
