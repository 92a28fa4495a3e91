"""Grading groups and skew-symmetric bicharacters.

The grading group is finitely generated abelian, presented as
Z^r x Z_{n_1} x ... x Z_{n_t}.  A bicharacter is determined by its values on
generator pairs; evaluation extends those values biadditively:
eps(a, c) = prod_{i,j} E[i][j]^(a_i * c_j).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import StructureError
from .scalars import ScalarField

__all__ = [
    "GradeGroup",
    "GroupElement",
    "Bicharacter",
    "BicharacterReport",
    "make_bicharacter",
    "trivial_bicharacter",
    "validate_bicharacter",
    "bicharacter_eval",
]


@dataclass(frozen=True)
class GradeGroup:
    """Z^free_rank x Z_{n_1} x ... x Z_{n_t}, orders listed after the free part."""

    free_rank: int
    torsion_orders: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.free_rank, int) or self.free_rank < 0:
            raise StructureError(f"bad free rank {self.free_rank!r}")
        object.__setattr__(self, "torsion_orders", tuple(self.torsion_orders))
        for n in self.torsion_orders:
            if not isinstance(n, int) or n < 2:
                raise StructureError(f"bad torsion order {n!r}")

    @property
    def ngen(self) -> int:
        return self.free_rank + len(self.torsion_orders)

    def element(self, coords) -> "GroupElement":
        return GroupElement(self, tuple(coords))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.ngen)


@dataclass(frozen=True)
class GroupElement:
    """Element in canonical form: torsion coordinates reduced into [0, n_i)."""

    group: GradeGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        g = self.group
        coords = tuple(self.coords)
        if len(coords) != g.ngen:
            raise StructureError(
                f"element needs {g.ngen} coordinates, got {len(coords)}"
            )
        canon = []
        for i, c in enumerate(coords):
            if not isinstance(c, int):
                raise StructureError(f"coordinate {c!r} is not an integer")
            if i >= g.free_rank:
                c %= g.torsion_orders[i - g.free_rank]
            canon.append(c)
        object.__setattr__(self, "coords", tuple(canon))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.group != self.group:
            raise StructureError("cannot add degrees from different groups")
        return GroupElement(
            self.group, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-c for c in self.coords))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Bicharacter:
    """Generator value table E; entry E[i][j] is the value on (g_i, g_j).

    Construction normalizes entries into the field but does not check the
    axioms; run validate_bicharacter, or build through make_bicharacter.
    """

    field: ScalarField
    group: GradeGroup
    gen_table: tuple

    def __post_init__(self):
        rows = tuple(
            tuple(self.field.coerce(v) for v in row) for row in self.gen_table
        )
        object.__setattr__(self, "gen_table", rows)


@dataclass(frozen=True)
class BicharacterReport:
    """Outcome of validate_bicharacter: pass, or the first violated axiom.

    axiom is one of "invertibility", "skew", "torsion"; pair names the
    generator indices whose table entry witnesses the violation.
    """

    ok: bool
    axiom: str | None = None
    pair: tuple[int, int] | None = None
    detail: str = ""


def validate_bicharacter(b: Bicharacter) -> BicharacterReport:
    """Check the three bicharacter axioms on the generator table.

    Biadditivity holds by construction (values are defined on generators and
    extended by exponents), so the axioms reduce to: every entry invertible;
    E[i][j] * E[j][i] = 1; and for a torsion generator of order n, every
    entry in its row and column is an n-th root of unity.
    """
    g = b.group
    n = g.ngen
    table = b.gen_table
    if len(table) != n or any(len(row) != n for row in table):
        raise StructureError(f"generator table must be {n}x{n}")
    for i, j in product(range(n), repeat=2):
        if table[i][j] == 0:
            return BicharacterReport(
                False, "invertibility", (i, j), f"E[{i}][{j}] = 0"
            )
    for i, j in product(range(n), repeat=2):
        if table[i][j] * table[j][i] != b.field.one:
            return BicharacterReport(
                False,
                "skew",
                (i, j),
                f"E[{i}][{j}]*E[{j}][{i}] = "
                f"{b.field.format(table[i][j] * table[j][i])} != 1",
            )
    for t, order in enumerate(g.torsion_orders):
        i = g.free_rank + t
        for j in range(n):
            if table[i][j] ** order != b.field.one:
                return BicharacterReport(
                    False, "torsion", (i, j),
                    f"E[{i}][{j}] has no order dividing {order}",
                )
            if table[j][i] ** order != b.field.one:
                return BicharacterReport(
                    False, "torsion", (j, i),
                    f"E[{j}][{i}] has no order dividing {order}",
                )
    return BicharacterReport(True)


def make_bicharacter(field: ScalarField, group: GradeGroup, rows) -> Bicharacter:
    """Build and validate; raises StructureError on any axiom violation."""
    b = Bicharacter(field, group, tuple(tuple(r) for r in rows))
    report = validate_bicharacter(b)
    if not report.ok:
        raise StructureError(
            f"bicharacter axiom '{report.axiom}' fails at generator pair "
            f"{report.pair}: {report.detail}"
        )
    return b


def trivial_bicharacter(field: ScalarField, group: GradeGroup) -> Bicharacter:
    one = field.one
    n = group.ngen
    return Bicharacter(field, group, tuple((one,) * n for _ in range(n)))


def bicharacter_eval(b: Bicharacter, a: GroupElement, c: GroupElement):
    """eps(a, c) by square-and-multiply on generator values.

    Pre: b passed validation and a, c are canonical elements of b.group.
    Torsion lets exponents reduce mod the generator order, so free
    coordinates of any size stay cheap.
    """
    g = b.group
    if a.group != g or c.group != g:
        raise StructureError("degree from the wrong group")
    r = g.free_rank
    orders = g.torsion_orders
    out = b.field.one
    for i, ai in enumerate(a.coords):
        if ai == 0:
            continue
        for j, cj in enumerate(c.coords):
            if cj == 0:
                continue
            e = ai * cj
            if i >= r:
                e %= orders[i - r]
            elif j >= r:
                e %= orders[j - r]
            if e == 0:
                continue
            out = out * b.gen_table[i][j] ** e
    return out
