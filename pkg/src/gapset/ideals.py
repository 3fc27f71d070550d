"""Relative ideals of a numerical semigroup.

Only two kinds of ideal are needed: the shifted canonical ideal
``K_S(s) = {F(S) + s - z : z not in S}`` and the dual ``S* = S u PF(S)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import DomainError, InternalConsistencyError
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class RelativeIdeal:
    """A cofinite, bounded-below set of integers attached to ``owner``.

    Normal form: ``bound`` is the largest integer missing from the ideal
    above its minimum (or the minimum itself when nothing is missing), and
    ``small_elements`` lists every element ``<= bound``.  Every integer
    greater than ``bound`` belongs to the ideal.  Two ideals are equal iff
    their normal forms are.
    """

    owner: NumericalSemigroup
    small_elements: tuple[int, ...]
    bound: int

    @classmethod
    def normalized(cls, owner: NumericalSemigroup, elements: Iterable[int], bound: int) -> "RelativeIdeal":
        """Build from the elements ``<= bound``; everything above ``bound`` is implied."""
        elems = sorted({x for x in elements if x <= bound})
        if not elems:
            return cls(owner, (bound + 1,), bound + 1)
        present = set(elems)
        holes = [x for x in range(elems[0], bound + 1) if x not in present]
        if not holes:
            return cls(owner, (elems[0],), elems[0])
        top = holes[-1]
        return cls(owner, tuple(x for x in elems if x <= top), top)

    @property
    def minimum(self) -> int:
        return self.small_elements[0]

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int):
            return False
        return x > self.bound or x in self._small_set()

    def _small_set(self) -> frozenset[int]:
        # Cheap enough to rebuild; the dataclass is frozen.
        return frozenset(self.small_elements)

    def elements_upto(self, n: int) -> list[int]:
        small = self._small_set()
        return [x for x in range(self.minimum, n + 1) if x > self.bound or x in small]

    def positive_gaps(self) -> tuple[int, ...]:
        """Positive integers not in the ideal."""
        small = self._small_set()
        return tuple(x for x in range(1, self.bound + 1) if x not in small)

    def as_semigroup(self) -> NumericalSemigroup:
        """The ideal viewed as a numerical semigroup (its positive gaps must form a gapset)."""
        if self.minimum < 0:
            raise DomainError("ideal has negative elements; it is not a numerical semigroup")
        return NumericalSemigroup.from_gaps(self.positive_gaps())


def shifted_canonical(S: NumericalSemigroup, s: int) -> RelativeIdeal:
    """``K_S(s)``: integers ``F(S) + s - z`` for ``z`` outside ``S``.

    Negative ``z`` contribute exactly the integers above ``F(S) + s``, so the
    listed part comes from the gaps alone.
    """
    top = S.frobenius + s
    return RelativeIdeal.normalized(S, (top - z for z in S.gaps), top)


def gaps_of_shifted_canonical(S: NumericalSemigroup, F: int) -> tuple[int, ...]:
    """``{1..F}`` minus ``{F - a : a a gap of S}``; the positive non-members of ``K_S(F - F(S))``."""
    if F <= S.frobenius:
        raise DomainError(f"need F > F(S) = {S.frobenius}, got {F}")
    removed = {F - a for a in S.gaps}
    return tuple(x for x in range(1, F + 1) if x not in removed)


def _dual_bruteforce(S: NumericalSemigroup) -> list[int]:
    # {z : z + (S minus 0) inside S}, scanned over a window that provably holds
    # every element not above F(S).
    F, m = S.frobenius, S.multiplicity
    nonzero = [s for s in range(1, F + m + 1) if s in S]
    return [z for z in range(-(F + m + 1), F + 1) if all(z + s in S for s in nonzero)]


def star_dual(S: NumericalSemigroup, validate: bool = False) -> RelativeIdeal:
    """``S* = S u PF(S)``.

    With ``validate`` set, also recomputes ``{z : z + (S minus 0) in S}``
    by brute force and raises :class:`InternalConsistencyError` on mismatch.
    """
    if not S.genus:
        raise DomainError("the dual needs a semigroup of genus >= 1")
    F = S.frobenius
    elems = [x for x in range(F + 1) if x in S] + list(S.pseudo_frobenius())
    ideal = RelativeIdeal.normalized(S, elems, F)
    if validate:
        other = RelativeIdeal.normalized(S, _dual_bruteforce(S), F)
        if other != ideal:
            raise InternalConsistencyError(f"dual of {S!r} disagrees with S u PF(S)")
    return ideal


def is_relative_ideal(
    candidate: Union[RelativeIdeal, tuple[Iterable[int], int]],
    S: NumericalSemigroup,
) -> bool:
    """Check ``I + S`` inside ``I`` and ``a + I`` inside ``S`` for some member ``a``.

    ``candidate`` is a :class:`RelativeIdeal` or a pair ``(elements <= bound, bound)``.
    """
    if isinstance(candidate, RelativeIdeal):
        small, bound = list(candidate.small_elements), candidate.bound
    else:
        elems, bound = candidate
        small = sorted({x for x in elems if x <= bound})
    present = set(small)

    def inside(x: int) -> bool:
        return x > bound or x in present

    lowest = small[0] if small else bound + 1
    for x in small:
        for s in range(0, bound - x + 1):
            if s in S and not inside(x + s):
                return False
    # Shift the whole ideal past F(S); the shift must itself be a member.
    a = max(0, S.frobenius + 1 - lowest)
    while a not in S:
        a += 1
    if a + bound + 1 <= S.frobenius:
        return False
    return all(a + x in S for x in small)
