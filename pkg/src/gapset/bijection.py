"""Genus-g semigroups versus almost symmetric semigroups of Frobenius F, type F - 2g.

``forward(S, F)`` sends ``S`` to the semigroup ``{0} u K_S(F - F(S))`` whose
gaps are ``{1..F}`` minus ``{F - a : a a gap of S}``.  For ``F >= 4g - 1``
this is a bijection onto the almost symmetric semigroups with Frobenius
number ``F`` and type ``F - 2g``; ``inverse`` undoes it with the dual
``T* = T u PF(T)``.
"""

from __future__ import annotations

import logging
from typing import Iterable

from .errors import DomainError, GapsetViolation, InternalConsistencyError, InvalidPFError
from .ideals import star_dual
from .semigroup import NumericalSemigroup, is_almost_symmetric, mask_of

log = logging.getLogger(__name__)


def in_bijection_regime(genus: int, F: int) -> bool:
    return F >= 4 * genus - 1


def forward(S: NumericalSemigroup, F: int, strict: bool = False) -> NumericalSemigroup:
    """Image of ``S`` with Frobenius number ``F``.

    Any ``F > 2 F(S)`` is accepted (the image is then almost symmetric of
    type ``F - 2g``).  Below ``F = 4g - 1`` the map need not be onto; with
    ``strict`` that case raises, otherwise it is only logged.
    """
    f = S.frobenius
    if F < 1 or F <= 2 * f:
        raise DomainError(f"need F > 2 F(S) = {2 * f} and F >= 1, got F={F}")
    if not in_bijection_regime(S.genus, F):
        if strict:
            raise DomainError(f"F={F} < 4g-1={4 * S.genus - 1}: outside the bijection range")
        log.debug("forward(%r, %d): image only, bijection contract not guaranteed", S, F)
    full = ((1 << (F + 1)) - 1) & ~1
    # Reversing the gap bits inside [0, F] maps a to F - a.
    removed = mask_of(F - a for a in S.gaps)
    return NumericalSemigroup(full & ~removed)


def image_pf(S: NumericalSemigroup, F: int) -> tuple[int, ...]:
    """Pseudo-Frobenius numbers of ``forward(S, F)`` by the closed formula.

    Three bands: members of ``S`` in ``(0, f]``, the run ``f+1 .. F-f-1``,
    and ``F - a`` for members ``a`` of ``S`` in ``[0, f]``, where ``f = F(S)``.
    For the full monoid (``f = -1``) the run starts at 1.
    """
    f = S.frobenius
    if F < 1 or F <= 2 * f:
        raise DomainError(f"need F > 2 F(S) = {2 * f} and F >= 1, got F={F}")
    low = [a for a in range(1, f + 1) if a in S]
    middle = list(range(max(f + 1, 1), F - f))
    high = [F - a for a in range(0, f + 1) if a in S]
    return tuple(sorted(low + middle + high))


def _check_high_type(T: NumericalSemigroup) -> tuple[int, int]:
    if not T.genus:
        raise DomainError("the full monoid has no Frobenius number or type")
    F, t = T.frobenius, T.type
    if 2 * t < F - 1 or (F - t) % 2:
        raise DomainError(f"need t >= (F-1)/2 and F-t even, got F={F}, t={t}")
    return F, t


def inverse(T: NumericalSemigroup) -> NumericalSemigroup:
    """The preimage ``T*`` of a high-type almost symmetric ``T``."""
    F, t = _check_high_type(T)
    if not is_almost_symmetric(T):
        raise DomainError(f"{T!r} is not almost symmetric")
    try:
        S = star_dual(T).as_semigroup()
    except GapsetViolation as exc:
        raise InternalConsistencyError(f"dual of {T!r} is not a semigroup") from exc
    if 2 * S.genus != F - t:
        raise InternalConsistencyError(f"dual of {T!r} has genus {S.genus}, expected {(F - t) // 2}")
    return S


def high_type_as_characterization(T: NumericalSemigroup) -> bool:
    """For ``t >= (F-1)/2``, ``F - t`` even: ``T*`` is a semigroup of genus ``(F - t)/2``.

    Under those hypotheses this is equivalent to ``T`` being almost symmetric.
    """
    F, t = _check_high_type(T)
    try:
        S = star_dual(T).as_semigroup()
    except GapsetViolation:
        return False
    return 2 * S.genus == F - t


def recover_from_pf(pf: Iterable[int], g: int) -> NumericalSemigroup:
    """Genus-``g`` preimage read off a pseudo-Frobenius set: gaps ``{1..2g-1}`` minus ``pf``."""
    pf = set(pf)
    gaps = [x for x in range(1, 2 * g) if x not in pf]
    try:
        S = NumericalSemigroup.from_gaps(gaps)
    except GapsetViolation as exc:
        raise InvalidPFError(f"{sorted(pf)} is not the PF set of a high-type almost symmetric semigroup") from exc
    if S.genus != g:
        raise InvalidPFError(f"recovered genus {S.genus} != {g}")
    return S
