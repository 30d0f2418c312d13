"""Independent ground truth: exact Schur expansions of s_nu o s_(m) and s_nu o s_(1^m).

The main engine expands both factors in the power-sum basis, substitutes
p_r o p_s = p_{rs}, and reads off Schur coefficients with symmetric-group
character values computed by the border-strip (Murnaghan-Nakayama) recursion.
All arithmetic is exact: Fractions internally, integers out.

A second, slower engine (:func:`monomial_expansion`) counts semistandard
fillings by degree-m blocks and peels Schur coefficients off the monomial
counts by dominance triangularity.  It shares no code path with the power-sum
engine and exists to cross-check it at small degree.
"""

from __future__ import annotations

import json
import os
import warnings
from collections import Counter
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from pathlib import Path
from typing import Iterator, Mapping

from .errors import GuardExceededError, InternalConsistencyError
from .families import _colex_multisets_bounded, _colex_sets_bounded
from .partitions import (
    DominanceRelation,
    Partition,
    dimension,
    dominance_compare,
    parse_partition,
    partitions_of,
)

__all__ = [
    "DEFAULT_GUARD",
    "SINGLE_COEFFICIENT_LIMIT",
    "PlethysmFlavor",
    "SchurExpansion",
    "CharacterTable",
    "character_value",
    "z_order",
    "class_size",
    "expected_dimension",
    "plethysm_expansion",
    "multiplicity",
    "omega_check",
    "monomial_expansion",
]

DEFAULT_GUARD = 16
SINGLE_COEFFICIENT_LIMIT = 24


class PlethysmFlavor(str, Enum):
    ROW = "row"
    COLUMN = "column"


def z_order(rho: Partition) -> int:
    """Centralizer order of a permutation of cycle type ``rho``."""
    z = 1
    for value, count in Counter(rho.parts).items():
        z *= value**count * factorial(count)
    return z


def class_size(rho: Partition) -> int:
    """Size of the conjugacy class of cycle type ``rho``."""
    return factorial(rho.weight) // z_order(rho)


_CHAR_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _border_strip_char(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Character value by repeated border-strip removal.

    ``rho`` must be weakly decreasing; the largest cycle is stripped first,
    which keeps the branching small.  Strips are found on the beta-number
    (first-column hook length) encoding: removing a strip of length r moves
    one beta number down by r, and the sign is (-1)^(beta numbers jumped).
    """
    if not rho:
        return 1
    key = (lam, rho)
    cached = _CHAR_CACHE.get(key)
    if cached is not None:
        return cached
    r, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [lam[j] + (length - 1 - j) for j in range(length)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in beta_set:
            continue
        leg = sum(1 for x in beta if c < x < b)
        nb = sorted((beta_set - {b}) | {c}, reverse=True)
        mu = tuple(
            v - (length - 1 - j) for j, v in enumerate(nb) if v - (length - 1 - j) > 0
        )
        term = _border_strip_char(mu, rest)
        total += term if leg % 2 == 0 else -term
    _CHAR_CACHE[key] = total
    return total


def character_value(lam: Partition, rho: Partition) -> int:
    """The irreducible symmetric-group character value chi^lam(rho)."""
    if lam.weight != rho.weight:
        raise ValueError(
            f"character arguments must have equal weight: |{lam}| != |{rho}|"
        )
    return _border_strip_char(lam.parts, rho.parts)


class CharacterTable:
    """Character values for one degree, with optional on-disk persistence.

    The disk layout is JSON with a version header:
    ``{"schema": 1, "degree": n, "values": {"<lam>|<rho>": int, ...}}``
    where partitions are comma-separated part lists.
    """

    SCHEMA = 1

    def __init__(self, degree: int, values: dict[tuple[Partition, Partition], int] | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.degree = degree
        self.values: dict[tuple[Partition, Partition], int] = dict(values or {})

    def value(self, lam: Partition, rho: Partition) -> int:
        if lam.weight != self.degree or rho.weight != self.degree:
            raise ValueError(f"table holds degree {self.degree} only")
        key = (lam, rho)
        got = self.values.get(key)
        if got is None:
            got = character_value(lam, rho)
            self.values[key] = got
        return got

    def z(self, rho: Partition) -> int:
        return z_order(rho)

    def build_full(self) -> None:
        """Populate every (lam, rho) pair of this degree."""
        parts = list(partitions_of(self.degree))
        for lam in parts:
            for rho in parts:
                self.value(lam, rho)

    def verify_orthogonality(self) -> None:
        """Check column orthogonality exactly; raise on any failure."""
        parts = list(partitions_of(self.degree))
        nfac = factorial(self.degree)
        for i, lam in enumerate(parts):
            for mu in parts[i:]:
                acc = sum(
                    class_size(rho) * self.value(lam, rho) * self.value(mu, rho)
                    for rho in parts
                )
                want = nfac if lam == mu else 0
                if acc != want:
                    raise InternalConsistencyError(
                        f"orthogonality fails at ({lam}), ({mu}): {acc} != {want}"
                    )

    def save(self, path: str | os.PathLike) -> None:
        payload = {
            "schema": self.SCHEMA,
            "degree": self.degree,
            "values": {
                f"{lam}|{rho}": v
                for (lam, rho), v in sorted(
                    self.values.items(), key=lambda kv: (kv[0][0].parts, kv[0][1].parts)
                )
            },
        }
        Path(path).write_text(json.dumps(payload, indent=1) + "\n")

    @classmethod
    def load(cls, path: str | os.PathLike) -> "CharacterTable":
        payload = json.loads(Path(path).read_text())
        if payload.get("schema") != cls.SCHEMA:
            raise ValueError(f"unsupported character-table schema in {path}")
        table = cls(int(payload["degree"]))
        for key, v in payload["values"].items():
            lam_text, rho_text = key.split("|")
            table.values[(parse_partition(lam_text), parse_partition(rho_text))] = int(v)
        return table

    @staticmethod
    def cache_path(degree: int, cache_dir: str | os.PathLike) -> Path:
        return Path(cache_dir) / f"characters-n{degree}.json"

    @classmethod
    def load_or_create(cls, degree: int, cache_dir: str | os.PathLike | None) -> "CharacterTable":
        if cache_dir is not None:
            path = cls.cache_path(degree, cache_dir)
            if path.exists():
                return cls.load(path)
        return cls(degree)

    def save_to(self, cache_dir: str | os.PathLike) -> Path:
        path = self.cache_path(self.degree, cache_dir)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.save(path)
        return path


class SchurExpansion:
    """An integral linear combination of Schur functions of one degree."""

    __slots__ = ("degree", "coefficients")

    def __init__(self, degree: int, coefficients: Mapping[Partition, int]):
        coeffs: dict[Partition, int] = {}
        for lam in sorted(coefficients, reverse=True):
            mult = int(coefficients[lam])
            if mult == 0:
                continue
            if mult < 0:
                raise ValueError(f"multiplicities must be positive: {lam} -> {mult}")
            if lam.weight != degree:
                raise ValueError(f"label {lam} does not have weight {degree}")
            coeffs[lam] = mult
        self.degree = degree
        self.coefficients = coeffs

    def __getitem__(self, lam: Partition) -> int:
        return self.coefficients.get(lam, 0)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SchurExpansion)
            and self.degree == other.degree
            and self.coefficients == other.coefficients
        )

    def __repr__(self) -> str:
        body = ", ".join(f"({lam}): {v}" for lam, v in self.coefficients.items())
        return f"SchurExpansion(degree={self.degree}, {{{body}}})"

    def items(self) -> Iterator[tuple[Partition, int]]:
        return iter(self.coefficients.items())

    def support(self) -> tuple[Partition, ...]:
        """Labels with positive multiplicity, in descending lexicographic order."""
        return tuple(self.coefficients)

    def total_dimension(self) -> int:
        return sum(mult * dimension(lam) for lam, mult in self.coefficients.items())

    def conjugated(self) -> "SchurExpansion":
        """Image under the involution sending s_lam to s_{lam'}."""
        return SchurExpansion(
            self.degree, {lam.conjugate(): v for lam, v in self.coefficients.items()}
        )

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coefficients": {str(lab): v for lab, v in self.items()},
        }


def expected_dimension(nu: Partition, m: int) -> int:
    """Degree of the induced character: (mn)!/(m!^n n!) times dim chi^nu."""
    n = nu.weight
    index, rem = divmod(factorial(m * n), factorial(m) ** n * factorial(n))
    if rem:
        raise InternalConsistencyError("wreath-product index is not an integer")
    return index * dimension(nu)


@lru_cache(maxsize=None)
def _power_sum_coefficients(
    nu_parts: tuple[int, ...], m: int, flavor: PlethysmFlavor
) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """Coefficients of p_tau in the plethysm, as a sorted tuple of items.

    s_nu = sum_rho chi^nu(rho)/z_rho p_rho, while s_(m) (ROW) and s_(1^m)
    (COLUMN) expand over sigma with coefficient 1/z_sigma resp.
    sign(sigma)/z_sigma.  Substituting p_r o p_s = p_{rs} turns each choice of
    rho and one sigma per part of rho into the cycle type tau built from the
    stretched parts rho_j * sigma^{(j)}.
    """
    nu = Partition(nu_parts)
    n = nu.weight
    sigma_list = [s.parts for s in partitions_of(m)]
    sigma_weight = []
    for s in sigma_list:
        w = Fraction(1, z_order(Partition(s)))
        if flavor is PlethysmFlavor.COLUMN and (m - len(s)) % 2 == 1:
            w = -w
        sigma_weight.append(w)
    acc: dict[tuple[int, ...], Fraction] = {}
    for rho in partitions_of(n):
        chi = character_value(nu, rho)
        if chi == 0:
            continue
        base = Fraction(chi, z_order(rho))
        for combo in product(range(len(sigma_list)), repeat=len(rho)):
            w = base
            tau_parts: list[int] = []
            for rj, si in zip(rho.parts, combo):
                w *= sigma_weight[si]
                tau_parts.extend(rj * s for s in sigma_list[si])
            tau = tuple(sorted(tau_parts, reverse=True))
            acc[tau] = acc.get(tau, Fraction(0)) + w
    return tuple(sorted((tau, c) for tau, c in acc.items() if c))


def _check_dimension(expansion: SchurExpansion, nu: Partition, m: int) -> None:
    want = expected_dimension(nu, m)
    got = expansion.total_dimension()
    if got != want:
        raise InternalConsistencyError(
            f"dimension check failed for nu=({nu}), m={m}: {got} != {want}"
        )


def plethysm_expansion(
    nu: Partition,
    m: int,
    flavor: PlethysmFlavor | str = PlethysmFlavor.ROW,
    *,
    guard: int = DEFAULT_GUARD,
    table: CharacterTable | None = None,
) -> SchurExpansion:
    """Exact Schur expansion of s_nu o s_(m) (ROW) or s_nu o s_(1^m) (COLUMN).

    Refuses degrees above ``guard``.  Every coefficient is checked to be a
    nonnegative integer and the full expansion must pass the dimension
    identity; failures raise :class:`InternalConsistencyError`.
    """
    flavor = PlethysmFlavor(flavor)
    if m < 1:
        raise ValueError("inner degree m must be at least 1")
    degree = m * nu.weight
    if degree > guard:
        raise GuardExceededError(
            f"degree {degree} exceeds the guard {guard}; raise the guard to proceed"
        )
    terms = _power_sum_coefficients(nu.parts, m, flavor)
    coeffs: dict[Partition, int] = {}
    for lam in partitions_of(degree):
        value = Fraction(0)
        for tau, c in terms:
            chi = (
                table.value(lam, Partition(tau))
                if table is not None
                else _border_strip_char(lam.parts, tau)
            )
            if chi:
                value += c * chi
        if value.denominator != 1 or value < 0:
            raise InternalConsistencyError(
                f"coefficient of ({lam}) is not a nonnegative integer: {value}"
            )
        if value:
            coeffs[lam] = int(value)
    expansion = SchurExpansion(degree, coeffs)
    _check_dimension(expansion, nu, m)
    return expansion


def multiplicity(
    nu: Partition,
    m: int,
    lam: Partition,
    flavor: PlethysmFlavor | str = PlethysmFlavor.ROW,
    *,
    guard: int = DEFAULT_GUARD,
    table: CharacterTable | None = None,
) -> int:
    """Single Schur coefficient without expanding the whole degree.

    Permitted past the guard up to degree ``SINGLE_COEFFICIENT_LIMIT`` with a
    runtime warning.
    """
    flavor = PlethysmFlavor(flavor)
    if m < 1:
        raise ValueError("inner degree m must be at least 1")
    degree = m * nu.weight
    if lam.weight != degree:
        raise ValueError(f"label must have weight {degree}, got {lam.weight}")
    if degree > guard:
        if degree > max(guard, SINGLE_COEFFICIENT_LIMIT):
            raise GuardExceededError(
                f"degree {degree} exceeds the single-coefficient limit "
                f"{max(guard, SINGLE_COEFFICIENT_LIMIT)}"
            )
        warnings.warn(
            f"single-coefficient mode at degree {degree} beyond the guard {guard}; "
            "this may take a while",
            RuntimeWarning,
            stacklevel=2,
        )
    value = Fraction(0)
    for tau, c in _power_sum_coefficients(nu.parts, m, flavor):
        chi = (
            table.value(lam, Partition(tau))
            if table is not None
            else _border_strip_char(lam.parts, tau)
        )
        if chi:
            value += c * chi
    if value.denominator != 1 or value < 0:
        raise InternalConsistencyError(
            f"coefficient of ({lam}) is not a nonnegative integer: {value}"
        )
    return int(value)


def omega_check(nu: Partition, m: int, *, guard: int = DEFAULT_GUARD) -> bool:
    """Verify the omega-involution identity on labels.

    Conjugating every label of s_nu o s_(m) must give s_{nu'} o s_(1^m) when
    ``m`` is odd and s_nu o s_(1^m) when ``m`` is even.
    """
    row = plethysm_expansion(nu, m, PlethysmFlavor.ROW, guard=guard)
    partner = nu.conjugate() if m % 2 == 1 else nu
    col = plethysm_expansion(partner, m, PlethysmFlavor.COLUMN, guard=guard)
    return row.conjugated() == col


# ---------------------------------------------------------------------------
# Monomial-expansion cross-oracle.


def _block_alphabet(m: int, flavor: PlethysmFlavor, gamma: tuple[int, ...]) -> list[tuple[int, ...]]:
    k = len(gamma)
    if flavor is PlethysmFlavor.COLUMN and m > k:
        return []
    raw = (
        _colex_sets_bounded(m, k)
        if flavor is PlethysmFlavor.COLUMN
        else _colex_multisets_bounded(m, k)
    )
    out = []
    for b in raw:
        counts = Counter(b)
        if all(counts[v] <= gamma[v - 1] for v in counts):
            out.append(b)
    return out


def _plethystic_tableau_count(
    nu: tuple[int, ...], m: int, flavor: PlethysmFlavor, gamma: tuple[int, ...]
) -> int:
    """Number of semistandard fillings of shape nu by degree-m blocks with
    total variable content gamma.

    The block alphabet is totally ordered by colex; any total order yields
    the same monomial coefficient because Schur polynomials are symmetric in
    the alphabet.
    """
    if not nu:
        return 1 if not gamma else 0
    alphabet = _block_alphabet(m, flavor, gamma)
    if not alphabet:
        return 0
    elem_lists = [tuple(Counter(b).items()) for b in alphabet]
    cells: list[tuple[int, int]] = []  # (left neighbor index, upper neighbor index)
    index_of: dict[tuple[int, int], int] = {}
    for i, row in enumerate(nu):
        for j in range(row):
            left = index_of.get((i, j - 1), -1)
            up = index_of.get((i - 1, j), -1)
            index_of[(i, j)] = len(cells)
            cells.append((left, up))
    budget = list(gamma)
    entries = [0] * len(cells)
    n_letters = len(alphabet)

    def fill(pos: int) -> int:
        if pos == len(cells):
            return 1
        left, up = cells[pos]
        start = 0
        if left >= 0:
            start = entries[left]
        if up >= 0:
            start = max(start, entries[up] + 1)
        total = 0
        for e in range(start, n_letters):
            ok = True
            for v, c in elem_lists[e]:
                if budget[v - 1] < c:
                    ok = False
                    break
            if not ok:
                continue
            for v, c in elem_lists[e]:
                budget[v - 1] -= c
            entries[pos] = e
            total += fill(pos + 1)
            for v, c in elem_lists[e]:
                budget[v - 1] += c
        return total

    return fill(0)


def _horizontal_strip_predecessors(shape: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Partitions mu inside shape with shape/mu a horizontal strip of the size."""
    rows = len(shape)
    buf: list[int] = []

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if remaining == 0:
                yield tuple(p for p in buf if p)
            return
        lo = shape[i + 1] if i + 1 < rows else 0
        hi = shape[i] if i == 0 else min(shape[i], buf[-1])
        for mu_i in range(hi, lo - 1, -1):
            removed = shape[i] - mu_i
            if removed > remaining:
                break
            buf.append(mu_i)
            yield from rec(i + 1, remaining - removed)
            buf.pop()

    yield from rec(0, size)


@lru_cache(maxsize=None)
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of the shape with the given content."""
    if not content:
        return 1 if not shape else 0
    total = 0
    for smaller in _horizontal_strip_predecessors(shape, content[-1]):
        total += _kostka(smaller, content[:-1])
    return total


def monomial_expansion(
    nu: Partition, m: int, flavor: PlethysmFlavor | str = PlethysmFlavor.ROW
) -> SchurExpansion:
    """Brute-force Schur expansion via monomial coefficients.

    Counts plethystic fillings to get the coefficient of x^gamma for each
    partition gamma, then peels off Schur coefficients in descending
    lexicographic order using Kostka triangularity with respect to dominance.
    Independent of the character-theoretic engine; intended for small degree.
    """
    flavor = PlethysmFlavor(flavor)
    if m < 1:
        raise ValueError("inner degree m must be at least 1")
    degree = m * nu.weight
    mono: dict[Partition, int] = {}
    for gamma in partitions_of(degree):
        cnt = _plethystic_tableau_count(nu.parts, m, flavor, gamma.parts)
        if cnt:
            mono[gamma] = cnt
    coeffs: dict[Partition, int] = {}
    for lam in partitions_of(degree):
        c = mono.get(lam, 0)
        for kappa, ck in coeffs.items():
            if dominance_compare(kappa, lam) is DominanceRelation.STRICTLY_ABOVE:
                c -= ck * _kostka(kappa.parts, lam.parts)
        if c < 0:
            raise InternalConsistencyError(
                f"monomial peel produced a negative coefficient at ({lam})"
            )
        if c:
            coeffs[lam] = c
    return SchurExpansion(degree, coeffs)
