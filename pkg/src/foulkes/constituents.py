"""Theorem engines: extremal constituents of the characters phi and psi.

phi^(m^n)_nu is the twisted Foulkes character (plethysm s_nu o s_(m)); psi is
its sign-twisted companion (s_nu o s_(1^m)).  Minimal constituents of phi are
the dominance-minimal types of set family tuples, maximal constituents are the
conjugates of minimal multiset-tuple types, and psi swaps the two block kinds.
All even/odd-m bookkeeping (kappa = nu or nu') is centralized here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .families import (
    BlockKind,
    FamilyTuple,
    enumerate_minimal_tuple_types,
    tuple_is_closed,
    tuple_type,
)
from .partitions import Partition

__all__ = [
    "CharacterFlavor",
    "Extremum",
    "CharacterSpec",
    "ConstituentReport",
    "kappa_partition",
    "minimal_constituents_phi",
    "maximal_constituents_phi",
    "minimal_constituents_psi",
    "maximal_constituents_psi",
    "certificate_from_closed_tuple",
    "sign_twist_labels",
]


class CharacterFlavor(str, Enum):
    PHI = "phi"
    PSI = "psi"


class Extremum(str, Enum):
    MINIMAL = "minimal"
    MAXIMAL = "maximal"


@dataclass(frozen=True)
class CharacterSpec:
    """One character phi^(m^n)_nu or psi^(m^n)_nu."""

    m: int
    nu: Partition
    flavor: CharacterFlavor = CharacterFlavor.PHI

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if self.nu.weight < 1:
            raise ValueError("nu must be a nonempty partition")
        object.__setattr__(self, "flavor", CharacterFlavor(self.flavor))

    @property
    def degree(self) -> int:
        return self.m * self.nu.weight


@dataclass(frozen=True)
class ConstituentReport:
    """Extremal labels of one character together with witness tuples.

    Labels are pairwise dominance-incomparable and sorted in descending
    lexicographic order.  For maximal reports the witness tuple's type
    conjugates to its label; for minimal reports it equals the label.
    """

    spec: CharacterSpec
    extremum: Extremum
    labels: tuple[Partition, ...]
    witnesses: Mapping[Partition, FamilyTuple] = field(repr=False)


def kappa_partition(m: int, nu: Partition) -> Partition:
    """nu when m is even, its conjugate when m is odd."""
    return nu if m % 2 == 0 else nu.conjugate()


def _shape_counts(p: Partition) -> tuple[int, ...]:
    """Block counts kappa'_1 >= ... >= kappa'_k, where k is the first part."""
    return p.conjugate().parts


def minimal_constituents_phi(m: int, nu: Partition) -> ConstituentReport:
    """Labels of the dominance-minimal constituents of phi^(m^n)_nu.

    These are exactly the minimal types of set family tuples whose j-th
    component has kappa'_j blocks, kappa = nu or nu' by the parity of m.
    """
    spec = CharacterSpec(m, nu, CharacterFlavor.PHI)
    shapes = _shape_counts(kappa_partition(m, nu))
    found = enumerate_minimal_tuple_types(m, shapes, BlockKind.SET)
    labels = tuple(sorted(found, reverse=True))
    return ConstituentReport(spec, Extremum.MINIMAL, labels, found)


def maximal_constituents_phi(m: int, nu: Partition) -> ConstituentReport:
    """Labels of the dominance-maximal constituents of phi^(m^n)_nu.

    Maximal labels are the conjugates of the minimal types of multiset family
    tuples with nu'_1, ..., nu'_l blocks (l = first part of nu; no parity
    adjustment here).
    """
    spec = CharacterSpec(m, nu, CharacterFlavor.PHI)
    found = enumerate_minimal_tuple_types(m, _shape_counts(nu), BlockKind.MULTISET)
    witnesses = {ty.conjugate(): t for ty, t in found.items()}
    labels = tuple(sorted(witnesses, reverse=True))
    return ConstituentReport(spec, Extremum.MAXIMAL, labels, witnesses)


def minimal_constituents_psi(m: int, nu: Partition) -> ConstituentReport:
    """Labels of the dominance-minimal constituents of psi^(m^n)_nu.

    Same component shapes as the phi minimum (kappa by parity), but over
    multiset families, and the minimal types are the labels themselves.
    """
    spec = CharacterSpec(m, nu, CharacterFlavor.PSI)
    shapes = _shape_counts(kappa_partition(m, nu))
    found = enumerate_minimal_tuple_types(m, shapes, BlockKind.MULTISET)
    labels = tuple(sorted(found, reverse=True))
    return ConstituentReport(spec, Extremum.MINIMAL, labels, found)


def maximal_constituents_psi(m: int, nu: Partition) -> ConstituentReport:
    """Labels of the dominance-maximal constituents of psi^(m^n)_nu.

    psi^(m^n)_nu is the sign twist of phi^(m^n)_nu (m even) or of
    phi^(m^n)_(nu') (m odd), so its maxima are the conjugated minima of the
    corresponding phi.
    """
    spec = CharacterSpec(m, nu, CharacterFlavor.PSI)
    partner = nu if m % 2 == 0 else nu.conjugate()
    base = minimal_constituents_phi(m, partner)
    witnesses = {lab.conjugate(): base.witnesses[lab] for lab in base.labels}
    labels = tuple(sorted(witnesses, reverse=True))
    return ConstituentReport(spec, Extremum.MAXIMAL, labels, witnesses)


def certificate_from_closed_tuple(spec: CharacterSpec, t: FamilyTuple) -> Partition:
    """Label guaranteed to appear with multiplicity >= 1 in the character.

    Any closed tuple of the right component shapes certifies a constituent:
    its type for phi with set families and for psi with multiset families,
    the conjugate of its type for phi with multiset families.  The label need
    not be extremal.
    """
    if t.m != spec.m:
        raise ValueError(f"tuple block size {t.m} does not match m={spec.m}")
    if spec.flavor is CharacterFlavor.PHI and t.kind is BlockKind.SET:
        expected = _shape_counts(kappa_partition(spec.m, spec.nu))
        conjugate_label = False
    elif spec.flavor is CharacterFlavor.PSI and t.kind is BlockKind.MULTISET:
        expected = _shape_counts(kappa_partition(spec.m, spec.nu))
        conjugate_label = False
    elif spec.flavor is CharacterFlavor.PHI and t.kind is BlockKind.MULTISET:
        expected = _shape_counts(spec.nu)
        conjugate_label = True
    else:
        raise ValueError("no certificate rule for psi with set families")
    if sorted(t.shapes) != sorted(expected):
        raise ValueError(
            f"component shapes {sorted(t.shapes)} do not match the required "
            f"{sorted(expected)} for {spec.flavor.value} with nu=({spec.nu})"
        )
    if not tuple_is_closed(t):
        raise ValueError("certificate requires a closed tuple")
    ty = tuple_type(t)
    if ty is None:
        raise ValueError("certificate requires a tuple with a defined type")
    return ty.conjugate() if conjugate_label else ty


def sign_twist_labels(labels: Iterable[Partition]) -> set[Partition]:
    """Conjugate every label: the effect of tensoring with the sign character."""
    return {lab.conjugate() for lab in labels}
