"""Brute-force reference enumerations.

These deliberately avoid the machinery of the other modules: the genus tree
walks minimal generators, the Frobenius scan decides membership element by
element, and PF sets come from maximality under ``a <= b iff b - a in S``.
They are exponential and only meant for small parameters.
"""

from __future__ import annotations

import os

from .errors import DomainError
from .semigroup import NumericalSemigroup, is_almost_symmetric_definitional

DEFAULT_GENUS_CEILING = 22
DEFAULT_FROBENIUS_CEILING = 26


def genus_ceiling() -> int:
    return int(os.environ.get("GAPSET_CEILING_GENUS", DEFAULT_GENUS_CEILING))


def frobenius_ceiling() -> int:
    return int(os.environ.get("GAPSET_CEILING_FROBENIUS", DEFAULT_FROBENIUS_CEILING))


def _min_gens_above(members: set[int], F: int, limit: int) -> list[int]:
    # Minimal generators in (F, limit]; a member x is minimal iff it is not
    # a sum of two smaller nonzero members.
    out = []
    for x in range(max(F + 1, 1), limit + 1):
        if not any(a in members and (x - a) in members for a in range(1, x // 2 + 1)):
            out.append(x)
    return out


def tree_counts(g: int, ceiling: int | None = None) -> list[int]:
    """Number of semigroups of each genus ``0..g``, by walking the genus tree."""
    return [len(level) for level in _tree_levels(g, ceiling)]


def _tree_levels(g: int, ceiling: int | None) -> list[list[frozenset[int]]]:
    ceiling = genus_ceiling() if ceiling is None else ceiling
    if not 0 <= g <= ceiling:
        raise DomainError(f"genus must be in [0, {ceiling}], got {g}")
    # A node is its set of gaps; a child removes one minimal generator larger
    # than the current Frobenius number from the semigroup.
    levels = [[frozenset()]]
    for _ in range(g):
        nxt = []
        for gaps in levels[-1]:
            F = max(gaps, default=-1)
            m = next(x for x in range(1, F + 3) if x not in gaps)
            # No minimal generator exceeds F + m; the +1 covers the full monoid.
            limit = F + m + 1
            members = {x for x in range(limit + 1) if x not in gaps}
            for x in _min_gens_above(members, F, limit):
                nxt.append(gaps | {x})
        levels.append(nxt)
    return levels


def tree_enumerate_by_genus(g: int, ceiling: int | None = None) -> list[NumericalSemigroup]:
    return sorted(NumericalSemigroup.from_gaps(sorted(gaps)) for gaps in _tree_levels(g, ceiling)[-1])


def enumerate_by_frobenius(F: int, ceiling: int | None = None) -> list[NumericalSemigroup]:
    """All semigroups with Frobenius number ``F``.

    Decides membership of ``1 .. F-1`` in increasing order.  A number that
    is a sum of two chosen members is forced in; a member ``x`` is rejected
    when ``F - x`` is already a member (their sum would be ``F``).
    """
    ceiling = frobenius_ceiling() if ceiling is None else ceiling
    if not 1 <= F <= ceiling:
        raise DomainError(f"Frobenius number must be in [1, {ceiling}], got {F}")
    found: list[NumericalSemigroup] = []
    inside = [False] * (F + 1)
    inside[0] = True

    def place(x: int) -> None:
        if x == F:
            found.append(NumericalSemigroup.from_gaps([y for y in range(1, F + 1) if not inside[y]]))
            return
        forced = any(inside[a] and inside[x - a] for a in range(1, x // 2 + 1))
        clash = 2 * x == F or (F - x < x and inside[F - x])
        if not clash:
            inside[x] = True
            place(x + 1)
            inside[x] = False
        if not forced:
            place(x + 1)

    place(1)
    return sorted(found)


def pf_bruteforce(S: NumericalSemigroup) -> tuple[int, ...]:
    """Gaps that are maximal under ``a <= b iff b - a in S``."""
    gaps = list(S.gaps)
    if not gaps:
        raise DomainError("pseudo-Frobenius numbers are undefined for the full monoid")
    return tuple(x for x in gaps if not any(y != x and (y - x) in S for y in gaps))


def enumerate_as_by_frobenius(
    F: int, t_filter: int | None = None, ceiling: int | None = None
) -> list[NumericalSemigroup]:
    out = [S for S in enumerate_by_frobenius(F, ceiling) if is_almost_symmetric_definitional(S)]
    if t_filter is not None:
        out = [S for S in out if len(pf_bruteforce(S)) == t_filter]
    return out
