"""Closed subgroups of the maximal torus T of SU(3).

The maximal torus is the diagonal subgroup {diag(z1, z2, z3) : z1 z2 z3 = 1}.
Its character group X(T) = Z^3 / Z(1,1,1) is identified with Z^2 by the coset
representative with third coordinate zero, so the character (a, b) sends
diag(z1, z2, z3) to z1^a z2^b.  In these coordinates the three roots are

    alpha_12 = (1, -1)    (z1/z2)
    alpha_23 = (1, 2)     (z2/z3 = z1 z2^2 on the torus)
    alpha_13 = (2, 1)     (z1/z3 = z1^2 z2)

A closed subgroup S of T is encoded by its annihilator lattice ann(S), the
characters vanishing on S.  This is an exact duality: S <= S' iff
ann(S') <= ann(S), ann = Z^2 is the trivial subgroup, ann = 0 is T itself.

The symmetric group on the three diagonal entries acts on X(T) through six
explicit integer 2x2 matrices; Weyl orbits of annihilators give canonical
forms for conjugacy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import (
    IntLattice,
    LatticeError,
    lattice_intersect,
    lattice_sum,
    quotient_invariants,
    saturation,
)

ROOT_12 = (1, -1)
ROOT_23 = (1, 2)
ROOT_13 = (2, 1)
ROOTS = (ROOT_12, ROOT_23, ROOT_13)

# Permutations are stored as image tuples: PERMS[name][i-1] = sigma(i).
PERMS = {
    "e": (1, 2, 3),
    "s12": (2, 1, 3),
    "s13": (3, 2, 1),
    "s23": (1, 3, 2),
    "r123": (2, 3, 1),
    "r132": (3, 1, 2),
}

# Action on characters in the (a, b) coordinates (columns act on the left).
PERM_MATS = {
    "e": ((1, 0), (0, 1)),
    "s12": ((0, 1), (1, 0)),
    "s13": ((-1, 0), (-1, 1)),
    "s23": ((1, -1), (0, -1)),
    "r123": ((0, -1), (1, -1)),
    "r132": ((-1, 1), (-1, 0)),
}


def compose(p: str, q: str) -> str:
    """Name of the composite permutation p∘q (q first)."""
    pp, qq = PERMS[p], PERMS[q]
    img = tuple(pp[qq[i] - 1] for i in range(3))
    for name, val in PERMS.items():
        if val == img:
            return name
    raise AssertionError("closed under composition")


def inverse(p: str) -> str:
    pp = PERMS[p]
    img = [0, 0, 0]
    for i in range(3):
        img[pp[i] - 1] = i + 1
    for name, val in PERMS.items():
        if val == tuple(img):
            return name
    raise AssertionError


def conjugate_perm(w: str, f: str) -> str:
    """w f w^{-1}."""
    return compose(compose(w, f), inverse(w))


class WeylSubgroupId(Enum):
    """The subgroups of the Weyl group Sigma_3 used for orbits and blocks."""

    W1 = "1"
    C2 = "C2"
    C3 = "C3"
    S3 = "S3"

    @property
    def elements(self) -> tuple[str, ...]:
        return _WEYL_ELEMENTS[self]

    @property
    def order(self) -> int:
        return len(self.elements)


_WEYL_ELEMENTS = {
    WeylSubgroupId.W1: ("e",),
    WeylSubgroupId.C2: ("e", "s12"),
    WeylSubgroupId.C3: ("e", "r123", "r132"),
    WeylSubgroupId.S3: ("e", "s12", "s13", "s23", "r123", "r132"),
}


def conjugate_weyl_subgroup(w: str, f: WeylSubgroupId) -> frozenset:
    return frozenset(conjugate_perm(w, x) for x in f.elements)


def weyl_subgroup_transporter(f: WeylSubgroupId, ambient: WeylSubgroupId) -> list[str]:
    """Elements w of ``ambient`` with w f w^{-1} = f (as a set)."""
    target = frozenset(f.elements)
    return [w for w in ambient.elements if conjugate_weyl_subgroup(w, f) == target]


def apply_perm(w: str, lat: IntLattice) -> IntLattice:
    return lat.transformed(PERM_MATS[w])


@dataclass(frozen=True)
class ToralSubgroup:
    """A closed subgroup of T, given by its annihilator lattice in X(T)."""

    ann: IntLattice

    def __post_init__(self):
        if self.ann.ambient_rank != 2:
            raise LatticeError("annihilators live in the rank-2 character lattice")

    @classmethod
    def from_ann_rows(cls, rows: Iterable[Sequence[int]]) -> "ToralSubgroup":
        return cls(IntLattice.span(2, rows))

    @classmethod
    def full_torus(cls) -> "ToralSubgroup":
        return cls(IntLattice.zero(2))

    @classmethod
    def trivial(cls) -> "ToralSubgroup":
        return cls(IntLattice.full(2))

    @classmethod
    def centre(cls) -> "ToralSubgroup":
        # characters with a + b = 0 mod 3 kill diag(w, w, w), w^3 = 1
        return cls(IntLattice.span(2, [(1, 2), (0, 3)]))

    @property
    def dim(self) -> int:
        return 2 - self.ann.rank

    def contains(self, other: "ToralSubgroup") -> bool:
        """S >= S' iff ann(S) <= ann(S')."""
        return other.ann.contains_lattice(self.ann)

    def key(self) -> tuple:
        return self.ann.key()


CENTRE_ANN = IntLattice.span(2, [(1, 2), (0, 3)])


def identity_component(s: ToralSubgroup) -> ToralSubgroup:
    return ToralSubgroup(saturation(s.ann))


def component_group_invariants(s: ToralSubgroup) -> tuple[int, ...]:
    """Invariant factors of pi_0(S), computed as the torsion of X(T)/ann(S)."""
    return quotient_invariants(s.ann, IntLattice.full(2)).torsion


def is_singular(s: ToralSubgroup) -> bool:
    """True iff S lies in the kernel of some root, i.e. some root is in ann(S)."""
    return any(s.ann.contains_vector(r) for r in ROOTS)


def is_central(s: ToralSubgroup) -> bool:
    """True iff S is inside the order-3 centre (all three roots kill S)."""
    return s.ann.contains_lattice(CENTRE_ANN)


def weyl_orbit(s: ToralSubgroup, w: WeylSubgroupId) -> list[ToralSubgroup]:
    seen = {}
    for name in w.elements:
        t = ToralSubgroup(apply_perm(name, s.ann))
        seen[t.key()] = t
    return [seen[k] for k in sorted(seen)]


def weyl_orbit_canonical(s: ToralSubgroup, w: WeylSubgroupId) -> ToralSubgroup:
    """Lexicographically least HNF annihilator over the w-orbit of s."""
    return weyl_orbit(s, w)[0]


def is_cotoral_in(sub: ToralSubgroup, sup: ToralSubgroup) -> bool:
    """True iff sub <= sup with sup/sub a torus (annihilator quotient torsion-free)."""
    if not sup.contains(sub):
        return False
    return quotient_invariants(sup.ann, sub.ann).is_free


# --- elements -------------------------------------------------------------

TorusPoint = tuple[Fraction, Fraction]
"""A finite-order element diag(e(u), e(v), e(-u-v)) with e(x) = exp(2 pi i x)."""


def point_in(s: ToralSubgroup, point: TorusPoint) -> bool:
    u, v = point
    return all(a * u + b * v == int(a * u + b * v) for a, b in s.ann.rows)


def torsion_points(exponent: int) -> list[TorusPoint]:
    """All torus elements of order dividing ``exponent``."""
    pts = []
    for i in range(exponent):
        for j in range(exponent):
            pts.append((Fraction(i, exponent), Fraction(j, exponent)))
    return pts


def eigenvalue_multiset(point: TorusPoint) -> tuple[Fraction, Fraction, Fraction]:
    u, v = point
    return (u % 1, v % 1, (-u - v) % 1)


def element_is_singular(point: TorusPoint) -> bool:
    z1, z2, z3 = eigenvalue_multiset(point)
    return z1 == z2 or z2 == z3 or z1 == z3


# --- declared one-parameter families --------------------------------------


@dataclass(frozen=True)
class FamilyDescriptor:
    """A declared one-parameter family of toral subgroups.

    ``scaling`` families have members with annihilator ``base + n * step``;
    with ``step = Z^2`` these are the n-torsion subgroups of S(base), e.g.
    the cyclic groups filling out a chosen circle.  ``constant`` families sit
    at a single subgroup.
    """

    kind: str  # "torsion_in_circle" | "lattice_scaling" | "constant"
    base: IntLattice
    step: IntLattice | None = None

    def member(self, n: int) -> ToralSubgroup:
        if self.kind == "constant":
            return ToralSubgroup(self.base)
        step = self.step if self.step is not None else IntLattice.full(2)
        scaled = IntLattice.span(2, [tuple(n * x for x in row) for row in step.rows])
        return ToralSubgroup(lattice_sum(self.base, scaled))


def cyclic_in_circle_family(circle: ToralSubgroup) -> FamilyDescriptor:
    if circle.ann.rank != 1:
        raise ValueError("unsupported family: base of a torsion family must be a circle")
    return FamilyDescriptor("torsion_in_circle", circle.ann)


def lattice_scaling_family(base: IntLattice, step: IntLattice) -> FamilyDescriptor:
    return FamilyDescriptor("lattice_scaling", base, step)


def constant_family(s: ToralSubgroup) -> FamilyDescriptor:
    return FamilyDescriptor("constant", s.ann)


def limit_point(family: FamilyDescriptor) -> ToralSubgroup:
    """The h-limit of the declared family (the subgroup the members fill out)."""
    if family.kind in ("torsion_in_circle", "lattice_scaling"):
        return ToralSubgroup(family.base)
    if family.kind == "constant":
        return ToralSubgroup(family.base)
    raise ValueError(f"unsupported family: {family.kind!r}")


# --- handy named subgroups -------------------------------------------------

def singular_circle() -> ToralSubgroup:
    """The circle diag(z, z, z^-2), the centre of the principal U(2)."""
    return ToralSubgroup.from_ann_rows([ROOT_12])


def su2_circle() -> ToralSubgroup:
    """The circle diag(z, z^-1, 1), the maximal torus of the principal SU(2)."""
    return ToralSubgroup.from_ann_rows([(1, 1)])


def cyclic_in_circle(circle: ToralSubgroup, n: int) -> ToralSubgroup:
    """The n-torsion subgroup of a circle in T."""
    return cyclic_in_circle_family(circle).member(n)
