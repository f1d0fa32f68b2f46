"""Tagged-union encodings of conjugacy classes of closed subgroups.

A class value is one of:

* ``Toral``         -- a subgroup of the shared maximal torus (rank-2 ambients);
* ``FullToral``     -- a full subgroup of a torus normalizer: toral part plus
                       lifts of a nontrivial block subgroup of the Weyl group;
* ``CentralProduct``-- the central products K = core . Z[2m] inside U(2),
                       where core is SU(2) or a binary polyhedral group and
                       Z is the central circle (``z_torsion=None`` is core.Z);
* ``ConnectedClass``-- the named connected subgroups SU(2), SO(3), U(2), SU(3);
* ``FiniteClass``   -- parameterized finite families (cyclic, dihedral,
                       quaternion) and the isolated finite classes, including
                       the seven exceptional finite subgroups of SU(3);
* ``NamedClass``    -- the circle maximal torus and its normalizer inside the
                       rank-1 ambients.

Values are immutable; equality of canonical forms is equality of classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .lattice import IntLattice
from .torus import ToralSubgroup, WeylSubgroupId


@dataclass(frozen=True)
class Toral:
    subgroup: ToralSubgroup

    @property
    def ann(self) -> IntLattice:
        return self.subgroup.ann

    def key(self):
        return ("toral", self.subgroup.key())


@dataclass(frozen=True)
class FullToral:
    """H(A, F): toral part A (F-invariant) together with lifts of F."""

    toral_part: ToralSubgroup
    block: WeylSubgroupId

    @property
    def ann(self) -> IntLattice:
        return self.toral_part.ann

    def key(self):
        return ("full", self.block.value, self.toral_part.key())


class CentralCore(Enum):
    """Cores of the central-product families inside U(2)."""

    A5T = "A5t"   # binary icosahedral
    S4T = "S4t"   # binary octahedral
    A4T = "A4t"   # binary tetrahedral
    D4T = "D4t"   # quaternion group of order 8 (binary Klein group)
    SU2 = "SU2"   # the connected core, giving the determinant-power kernels

    @property
    def binary_order(self) -> int | None:
        return {"A5t": 120, "S4t": 48, "A4t": 24, "D4t": 8, "SU2": None}[self.value]


@dataclass(frozen=True)
class CentralProduct:
    core: CentralCore
    z_torsion: int | None  # K meets the central circle Z in Z[2m]; None = all of Z

    def key(self):
        return ("cp", self.core.value, -1 if self.z_torsion is None else self.z_torsion)


class ConnKind(Enum):
    SU2 = "SU2"
    SO3 = "SO3"
    U2 = "U2"
    SU3 = "SU3"


@dataclass(frozen=True)
class ConnectedClass:
    kind: ConnKind

    def key(self):
        return ("conn", self.kind.value)


class FiniteKind(Enum):
    CYCLIC = "C"
    DIHEDRAL = "D"          # dihedral of the given order (order >= 2, even)
    KLEIN = "D4"            # dihedral of order 4, kept separate (own block)
    A4 = "A4"
    S4 = "S4"
    A5 = "A5"
    QUATERNION = "Q"        # binary dihedral of the given order (4m)
    Q8T = "D4t"             # quaternion group of order 8 (binary Klein)
    A4T = "A4t"
    S4T = "S4t"
    A5T = "A5t"
    PSL27 = "PSL27"
    PSL27xC3 = "PSL27xC3"
    A6 = "A6"
    A6x3 = "A6x3"
    G36x3 = "G36x3"
    G72x3 = "G72x3"
    G216x3 = "G216x3"


EXCEPTIONAL_SU3_KINDS = (
    FiniteKind.PSL27, FiniteKind.PSL27xC3, FiniteKind.A6x3, FiniteKind.A6,
    FiniteKind.G36x3, FiniteKind.G72x3, FiniteKind.G216x3,
)

PARAMETRIC_KINDS = (FiniteKind.CYCLIC, FiniteKind.DIHEDRAL, FiniteKind.QUATERNION)


@dataclass(frozen=True)
class FiniteClass:
    kind: FiniteKind
    param: int | None = None  # the order, for the parameterized families

    def __post_init__(self):
        if (self.kind in PARAMETRIC_KINDS) != (self.param is not None):
            raise ValueError("param is exactly for cyclic/dihedral/quaternion kinds")

    def key(self):
        return ("fin", self.kind.value, self.param or 0)


class NamedKind(Enum):
    CIRCLE = "circle"      # the maximal torus of a rank-1 ambient
    O2_FULL = "O2"         # O(2) inside O(2) or SO(3)
    PIN2_FULL = "Pin2"     # Pin(2) inside Pin(2) or SU(2)


@dataclass(frozen=True)
class NamedClass:
    kind: NamedKind

    def key(self):
        return ("named", self.kind.value)


SubgroupClass = Union[Toral, FullToral, CentralProduct, ConnectedClass,
                      FiniteClass, NamedClass]


def class_sort_key(s: SubgroupClass):
    return s.key()


class NotRepresentable(ValueError):
    """The class cannot be expressed in the requested ambient group."""
