"""Numerical semigroups stored by their gaps.

A semigroup is kept as the sorted tuple of its gaps together with an integer
bitmask of the same gaps (bit ``x`` set iff ``x`` is a gap).  Everything above
the Frobenius number is a member, so membership never needs a table lookup
there.  All sets handled here are small nonnegative integer sets, so Python
ints double as fixed-width bit tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Optional, Sequence

from .errors import (
    DomainError,
    GapsetViolation,
    MalformedInputError,
    NotCofiniteError,
)

#: Largest Frobenius number / generator accepted anywhere in the package.
MAX_VALUE = 2**31 - 2


def mask_of(values: Iterable[int]) -> int:
    mask = 0
    for v in values:
        mask |= 1 << v
    return mask


def elements_of(mask: int) -> list[int]:
    """Return the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_gap_list(gaps: Sequence[int]) -> None:
    prev = 0
    for x in gaps:
        if not isinstance(x, int) or isinstance(x, bool):
            raise MalformedInputError(f"gap {x!r} is not an integer")
        if x <= 0:
            raise MalformedInputError(f"gaps must be positive, got {x}")
        if x <= prev:
            raise MalformedInputError("gaps must be strictly increasing (sorted, no duplicates)")
        prev = x
    if gaps and gaps[-1] > MAX_VALUE:
        raise MalformedInputError(f"Frobenius number {gaps[-1]} exceeds {MAX_VALUE}")


def _first_violation(gapmask: int) -> Optional[tuple[int, int]]:
    """Smallest ``a`` (then smallest ``b``) with a+b a gap and a, b members."""
    if not gapmask:
        return None
    top = gapmask.bit_length() - 1
    members = ~gapmask & ((1 << (top + 1)) - 1)
    # members includes bit 0; a + 0 = a is never a gap when a is a member.
    rest = members & ~1
    while rest:
        low = rest & -rest
        a = low.bit_length() - 1
        if 2 * a > top:
            break
        hit = (members << a) & gapmask
        if hit:
            z = (hit & -hit).bit_length() - 1
            return a, z - a
        rest ^= low
    return None


def validate_gapset(gaps: Sequence[int]) -> Optional[tuple[int, int]]:
    """Check the gapset closure condition.

    Returns ``None`` when ``gaps`` is a gapset, otherwise a witness pair
    ``(a, b)`` with ``a <= b``, ``a + b`` in ``gaps`` and neither ``a`` nor
    ``b`` in ``gaps``.

    Raises :class:`MalformedInputError` for unsorted, duplicated or
    nonpositive input.
    """
    gaps = list(gaps)
    _check_gap_list(gaps)
    return _first_violation(mask_of(gaps))


@total_ordering
class NumericalSemigroup:
    """An immutable numerical semigroup, identified by its set of gaps.

    Instances compare equal iff their gap sets are equal and are ordered
    lexicographically by their sorted gap lists.
    """

    __slots__ = ("_gapmask", "_gaps", "_frobenius", "_pf")

    def __init__(self, gapmask: int, _gaps: Optional[tuple[int, ...]] = None):
        # Trusted constructor; use from_gaps / from_generators for checked input.
        self._gapmask = gapmask
        self._gaps = tuple(elements_of(gapmask)) if _gaps is None else _gaps
        self._frobenius = gapmask.bit_length() - 1 if gapmask else -1
        self._pf: Optional[tuple[int, ...]] = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSemigroup":
        gaps = tuple(gaps)
        _check_gap_list(gaps)
        gapmask = mask_of(gaps)
        witness = _first_violation(gapmask)
        if witness is not None:
            raise GapsetViolation(witness)
        return cls(gapmask, gaps)

    @classmethod
    def from_gap_mask(cls, gapmask: int, check: bool = True) -> "NumericalSemigroup":
        if gapmask < 0 or gapmask & 1:
            raise MalformedInputError("gap mask must be nonnegative with bit 0 clear")
        if check:
            if gapmask.bit_length() - 1 > MAX_VALUE:
                raise MalformedInputError(f"Frobenius number exceeds {MAX_VALUE}")
            witness = _first_violation(gapmask)
            if witness is not None:
                raise GapsetViolation(witness)
        return cls(gapmask)

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        """Smallest numerical semigroup containing ``gens``.

        Members are sieved in increasing order until a run of ``min(gens)``
        consecutive members appears; from there on every integer is a member.
        """
        gens = sorted(set(gens))
        if not gens:
            raise MalformedInputError("generator list is empty")
        for g in gens:
            if not isinstance(g, int) or isinstance(g, bool) or g <= 0:
                raise MalformedInputError(f"generators must be positive integers, got {g!r}")
            if g > MAX_VALUE:
                raise MalformedInputError(f"generator {g} exceeds {MAX_VALUE}")
        if math.gcd(*gens) != 1:
            raise NotCofiniteError(f"gcd of {gens} is {math.gcd(*gens)}, not 1")
        m = gens[0]
        if m == 1:
            return cls(0, ())
        # Schur's bound F <= (m - 1)(max - 1) - 1 caps the sieve.
        bound = (m - 1) * (gens[-1] - 1) + m
        member = bytearray(bound + 1)
        member[0] = 1
        gapmask = 0
        run = 1
        x = 0
        while run < m:
            x += 1
            if x > bound:
                raise AssertionError("sieve bound exceeded")  # unreachable by Schur's bound
            if any(g <= x and member[x - g] for g in gens):
                member[x] = 1
                run += 1
            else:
                gapmask |= 1 << x
                run = 0
        if gapmask.bit_length() - 1 > MAX_VALUE:
            raise MalformedInputError(f"Frobenius number exceeds {MAX_VALUE}")
        return cls(gapmask)

    @classmethod
    def naturals(cls) -> "NumericalSemigroup":
        return cls(0, ())

    # -- basic data -------------------------------------------------------

    @property
    def gaps(self) -> tuple[int, ...]:
        return self._gaps

    @property
    def gap_mask(self) -> int:
        return self._gapmask

    @property
    def member_mask(self) -> int:
        """Bit table of members over ``[0, F]``."""
        return ~self._gapmask & ((1 << (self._frobenius + 1)) - 1)

    @property
    def frobenius(self) -> int:
        return self._frobenius

    @property
    def genus(self) -> int:
        return len(self._gaps)

    @property
    def multiplicity(self) -> int:
        # Smallest positive non-gap: the lowest clear bit above bit 0.
        x = 1
        while self._gapmask >> x & 1:
            x += 1
        return x

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int):
            return False
        if x > self._frobenius:
            return True
        if x < 0:
            return False
        return not (self._gapmask >> x) & 1

    def members_upto(self, n: int) -> list[int]:
        return [x for x in range(n + 1) if x in self]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._gapmask == other._gapmask

    def __lt__(self, other: "NumericalSemigroup") -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._gaps < other._gaps

    def __hash__(self) -> int:
        return hash(self._gapmask)

    def __repr__(self) -> str:
        return f"NumericalSemigroup(gaps={list(self._gaps)})"

    # -- invariants -------------------------------------------------------

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Gaps ``x`` with ``x + s`` a member for every nonzero member ``s``."""
        if self._pf is None:
            if not self._gapmask:
                raise DomainError("pseudo-Frobenius numbers are undefined for the full monoid")
            nonzero = self.member_mask & ~1
            g = self._gapmask
            self._pf = tuple(x for x in self._gaps if not (nonzero << x) & g)
        return self._pf

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius())

    @property
    def depth(self) -> int:
        return -(-(self._frobenius + 1) // self.multiplicity)

    def minimal_generators(self) -> list[int]:
        # No minimal generator exceeds F + m; the +1 covers the full monoid.
        top = self._frobenius + self.multiplicity + 1
        window = (1 << (top + 1)) - 1
        nonzero = ~self._gapmask & window & ~1
        sums = 0
        rest = nonzero
        while rest:
            low = rest & -rest
            a = low.bit_length() - 1
            if 2 * a > top:
                break
            sums |= nonzero << a
            rest ^= low
        return elements_of(nonzero & ~sums & window)

    def invariants(self) -> "InvariantSummary":
        return invariants(self)


@dataclass(frozen=True)
class InvariantSummary:
    frobenius: int
    genus: int
    multiplicity: int
    type: int
    depth: int


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_gaps(gaps)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def pseudo_frobenius(S: NumericalSemigroup) -> tuple[int, ...]:
    return S.pseudo_frobenius()


def minimal_generators(S: NumericalSemigroup) -> list[int]:
    return S.minimal_generators()


def invariants(S: NumericalSemigroup) -> InvariantSummary:
    """Frobenius number, genus, multiplicity, type and depth of ``S``.

    The full monoid gets ``F = -1``, ``m = 1``, and type and depth 0.
    """
    t = S.type if S.genus else 0
    return InvariantSummary(S.frobenius, S.genus, S.multiplicity, t, S.depth)


def _require_gaps(S: NumericalSemigroup) -> None:
    if not S.genus:
        raise DomainError("operation needs a semigroup of genus >= 1")


def is_almost_symmetric(S: NumericalSemigroup) -> bool:
    """True iff ``2 g = F + t``."""
    _require_gaps(S)
    return 2 * S.genus == S.frobenius + S.type


def is_almost_symmetric_definitional(S: NumericalSemigroup) -> bool:
    """Gap-by-gap test: each gap ``a`` has ``F - a`` a nonzero member or is pseudo-Frobenius."""
    _require_gaps(S)
    F = S.frobenius
    pf = set(S.pseudo_frobenius())
    for a in S.gaps:
        if a in pf:
            continue
        if F - a == 0 or F - a not in S:
            return False
    return True


def is_symmetric(S: NumericalSemigroup) -> bool:
    _require_gaps(S)
    return 2 * S.genus == S.frobenius + 1
