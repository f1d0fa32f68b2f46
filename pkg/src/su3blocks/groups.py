"""Ambient groups, finite-group marks and Weyl-group descriptors."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .torus import WeylSubgroupId


class AmbientGroup(Enum):
    """The groups whose subgroup conjugacy classes the library models.

    Each value knows where it sits: rank-2 members share the diagonal
    maximal torus of SU(3); rank-1 members have a circle maximal torus.
    """

    SO2 = "SO2"
    O2 = "O2"
    SPIN2 = "Spin2"
    PIN2 = "Pin2"
    SO3 = "SO3"
    SU2 = "SU2"
    U2 = "U2"
    T2 = "T2"
    TNORM_C2 = "TNormC2"
    TNORM_C3 = "TNormC3"
    TNORM_S3 = "TNormS3"
    SU3 = "SU3"

    @property
    def label(self) -> str:
        return self.value

    @property
    def is_rank_two(self) -> bool:
        return self in _TORUS_WEYL

    @property
    def torus_weyl(self) -> WeylSubgroupId:
        """Weyl subgroup of Sigma_3 acting on the shared maximal torus."""
        return _TORUS_WEYL[self]

    @classmethod
    def from_label(cls, text: str) -> "AmbientGroup":
        for g in cls:
            if g.value.lower() == text.lower():
                return g
        raise KeyError(f"unknown group {text!r}")


_TORUS_WEYL = {
    AmbientGroup.T2: WeylSubgroupId.W1,
    AmbientGroup.TNORM_C2: WeylSubgroupId.C2,
    AmbientGroup.TNORM_C3: WeylSubgroupId.C3,
    AmbientGroup.TNORM_S3: WeylSubgroupId.S3,
    AmbientGroup.U2: WeylSubgroupId.C2,
    AmbientGroup.SU3: WeylSubgroupId.S3,
}

# Containment DAG of the declared inclusions (source: target).
CONTAINMENTS = {
    AmbientGroup.SO2: (AmbientGroup.O2,),
    AmbientGroup.SPIN2: (AmbientGroup.PIN2, AmbientGroup.SU2),
    AmbientGroup.SU2: (AmbientGroup.U2,),
    AmbientGroup.T2: (AmbientGroup.TNORM_C2, AmbientGroup.TNORM_C3,
                      AmbientGroup.TNORM_S3, AmbientGroup.U2),
    AmbientGroup.TNORM_C2: (AmbientGroup.U2, AmbientGroup.SU3),
    AmbientGroup.TNORM_C3: (AmbientGroup.SU3,),
    AmbientGroup.TNORM_S3: (AmbientGroup.SU3,),
    AmbientGroup.U2: (AmbientGroup.SU3,),
    AmbientGroup.O2: (AmbientGroup.SO3,),
    AmbientGroup.PIN2: (AmbientGroup.SU2,),
    AmbientGroup.SO3: (AmbientGroup.SU3,),
}


class IdentityComponent(Enum):
    """Identity component of a Weyl group W_G(H), up to the cases that occur."""

    TRIVIAL = "1"
    CIRCLE = "S1"
    TWO_TORUS = "T2"
    SO3 = "SO3"
    SU2 = "SU2"
    U2 = "U2"
    PSU3 = "PSU3"
    SU3 = "SU3"

    @property
    def rank(self) -> int:
        return _IDC_RANK[self]

    @property
    def is_trivial(self) -> bool:
        return self is IdentityComponent.TRIVIAL


_IDC_RANK = {
    IdentityComponent.TRIVIAL: 0,
    IdentityComponent.CIRCLE: 1,
    IdentityComponent.TWO_TORUS: 2,
    IdentityComponent.SO3: 1,
    IdentityComponent.SU2: 1,
    IdentityComponent.U2: 2,
    IdentityComponent.PSU3: 2,
    IdentityComponent.SU3: 2,
}


def torus_component(rank: int) -> IdentityComponent:
    return (IdentityComponent.TRIVIAL, IdentityComponent.CIRCLE,
            IdentityComponent.TWO_TORUS)[rank]


@dataclass(frozen=True)
class FiniteGroupMark:
    """A small finite group named up to isomorphism, with its order."""

    name: str
    order: int

    def __str__(self):
        return self.name

    @classmethod
    def trivial(cls) -> "FiniteGroupMark":
        return cls("1", 1)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroupMark":
        return cls.trivial() if n == 1 else cls(f"C{n}", n)

    @classmethod
    def symmetric3(cls) -> "FiniteGroupMark":
        return cls("S3", 6)

    @classmethod
    def from_abelian_invariants(cls, invariants: tuple[int, ...]) -> "FiniteGroupMark":
        chain = _divisor_chain(invariants)
        if not chain:
            return cls.trivial()
        order = 1
        for d in chain:
            order *= d
        if len(chain) == 1:
            return cls.cyclic(chain[0])
        return cls("x".join(f"C{d}" for d in chain), order)

    @classmethod
    def other(cls, order: int) -> "FiniteGroupMark":
        return cls(f"other({order})", order)

    @classmethod
    def from_weyl_subgroup(cls, w: WeylSubgroupId) -> "FiniteGroupMark":
        return {WeylSubgroupId.W1: cls.trivial(),
                WeylSubgroupId.C2: cls.cyclic(2),
                WeylSubgroupId.C3: cls.cyclic(3),
                WeylSubgroupId.S3: cls.symmetric3()}[w]


def _divisor_chain(invariants: tuple[int, ...]) -> tuple[int, ...]:
    """Normalize a list of cyclic orders to the invariant-factor chain d_1 | d_2 | ..."""
    factors = [d for d in invariants if d > 1]
    changed = True
    while changed:
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                g = gcd(a, b)
                l = a * b // g
                if (g, l) != (a, b) and (g, l) != (b, a):
                    factors[i], factors[j] = g, l
                    changed = True
        factors = [d for d in factors if d > 1]
    return tuple(sorted(factors))


@dataclass(frozen=True)
class WeylDescriptor:
    """W_G(H) = N_G(H)/H: identity component plus component group."""

    identity_component: IdentityComponent
    component_group: FiniteGroupMark

    @property
    def is_finite(self) -> bool:
        return self.identity_component.is_trivial

    @property
    def order(self) -> int | None:
        return self.component_group.order if self.is_finite else None

    def as_strings(self) -> tuple[str, str]:
        return (self.identity_component.value, self.component_group.name)


def finite_weyl(mark: FiniteGroupMark) -> WeylDescriptor:
    return WeylDescriptor(IdentityComponent.TRIVIAL, mark)
