"""Counting semigroups by genus through pseudo-Frobenius descent.

Start from the PF set ``{1..F}`` of ``{0, F+1, F+2, ...}`` and repeatedly
adjoin an element ``i`` to the semigroup, which removes the pair
``{i, F - i}`` from its PF set and lowers the type by two.  While the type
stays at least ``(F - 1)/2`` a child is valid exactly when no element of the
remaining PF set lands back in it after adding ``i``.  After ``j`` levels at
``F = 4g - 1`` the frontier size is ``n_j``, the number of semigroups of
genus ``j``.

A state is a PF set packed into an int bitmask (bit ``x`` set iff ``x`` is a
pseudo-Frobenius number) plus ``mult``, an exclusive upper limit for the next
adjoined element.  It is the multiplicity of the semigroup the state stands
for, except at the root where it is ``F`` rather than ``F + 1``.  Capping
``i`` this way is what keeps siblings from producing duplicates.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .bijection import forward, recover_from_pf
from .errors import DomainError, MalformedInputError
from .semigroup import NumericalSemigroup, elements_of, is_almost_symmetric, mask_of

DEFAULT_GENUS_CEILING = 30
# Below this many states a level is expanded in-process even with workers > 1.
PARALLEL_THRESHOLD = 4096


@dataclass(frozen=True, order=True)
class DescentState:
    pf: int
    mult: int

    @classmethod
    def from_pf(cls, pf: Iterable[int], mult: int) -> "DescentState":
        return cls(mask_of(pf), mult)

    @property
    def frobenius(self) -> int:
        return self.pf.bit_length() - 1

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(elements_of(self.pf))

    def __len__(self) -> int:
        return self.pf.bit_count()


@dataclass
class CountReport:
    F: int
    counts: list[int]
    elapsed: list[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"F": self.F, "counts": list(self.counts)}


def initial_state(F: int) -> DescentState:
    """PF set ``{1..F}`` of ``{0, F+1, ...}``, with ``mult = F``."""
    if F < 1:
        raise DomainError(f"need F >= 1, got {F}")
    return DescentState(((1 << (F + 1)) - 1) & ~1, F)


def _level_params(F: int, size: int) -> tuple[int, int]:
    if size < 3:
        raise DomainError(f"PF set of size {size} cannot descend further")
    t = size - 2
    if 2 * t < F - 1:
        raise DomainError(f"child type t={t} < (F-1)/2 for F={F}")
    return t, t // 2


def _children(pf: int, mult: int, F: int, t: int, s: int, full_check: bool) -> list[tuple[int, int]]:
    out = []
    if full_check:
        for i in range(t + 1, mult):
            pf1 = pf & ~((1 << i) | (1 << (F - i)))
            if not (pf1 << i) & pf1:
                out.append((pf1, i))
        return out
    # cum[k]: mask of the k smallest PF elements; pos: their ranks.
    head = []
    rest = pf
    while rest and len(head) < s + 2:
        low = rest & -rest
        head.append(low)
        rest ^= low
    cum = [0]
    for b in head:
        cum.append(cum[-1] | b)
    pos = {b.bit_length() - 1: r for r, b in enumerate(head)}
    for i in range(t + 1, mult):
        j = F - i
        rem = (1 << i) | (1 << j)
        pf1 = pf & ~rem
        pi, pj = pos.get(i), pos.get(j)
        # Smallest k whose first k PF elements, minus i and F - i, number s.
        k = s
        while True:
            c = (pi is not None and pi < k) + (pj is not None and pj < k)
            if s + c == k:
                break
            k = s + c
        if not ((cum[k] & ~rem) << i) & pf1:
            out.append((pf1, i))
    return out


def descent_step(state: DescentState, full_check: bool = False) -> list[DescentState]:
    """Children of ``state``, one per admissible adjoined element ``i``.

    ``i`` ranges over ``[t + 1, mult - 1]`` where ``t = |pf| - 2``.  By default
    only the ``t // 2`` smallest remaining PF elements are tested against
    ``a + i``; ``full_check`` tests all of them.
    """
    F = state.frobenius
    t, s = _level_params(F, len(state))
    return [DescentState(p, i) for p, i in _children(state.pf, state.mult, F, t, s, full_check)]


def descent_step_general(S: NumericalSemigroup, i: int) -> Optional[NumericalSemigroup]:
    """Adjoin ``i`` to almost symmetric ``S`` when the general descent conditions hold.

    Conditions: every gap ``z`` of ``S u {i}`` has ``z - i`` outside
    ``S u {i}``, and ``i + p`` lies in ``S u {i}`` for every ``p`` in
    ``PF(S)`` other than ``i`` and ``F - i``.  Returns ``None`` when they fail,
    and also for ``i = F`` (possible only from ``{0, F+1, ...}``), where the
    union would no longer have Frobenius number ``F``.
    """
    if not S.genus:
        raise DomainError("the full monoid cannot descend")
    F = S.frobenius
    t = S.type - 2
    m = S.multiplicity
    if F < 5 or t < 1 or t + 2 > F or (F + t) % 2:
        raise DomainError(f"need F >= 5, 1 <= t, t+2 <= F, F+t even; got F={F}, t={t}")
    if not is_almost_symmetric(S):
        raise DomainError(f"{S!r} is not almost symmetric")
    if not t + 1 <= i <= m - 1:
        raise DomainError(f"i={i} outside [{t + 1}, {m - 1}]")
    if i == F:
        return None
    gapmask = S.gap_mask & ~(1 << i)

    def member(x: int) -> bool:
        return x >= 0 and (x > F or not (gapmask >> x) & 1)

    for z in elements_of(gapmask):
        if member(z - i):
            return None
    for p in S.pseudo_frobenius():
        if p != i and p != F - i and not member(p + i):
            return None
    return NumericalSemigroup(gapmask)


# -- frontier driver ---------------------------------------------------------


def _expand_chunk(args) -> Union[list[tuple[int, int]], int]:
    chunk, F, t, s, full_check, count_only = args
    if count_only:
        return sum(len(_children(pf, m, F, t, s, full_check)) for pf, m in chunk)
    out: list[tuple[int, int]] = []
    for pf, m in chunk:
        out.extend(_children(pf, m, F, t, s, full_check))
    return out


def _split(items: Sequence, parts: int) -> list[Sequence]:
    size = -(-len(items) // parts)
    return [items[k : k + size] for k in range(0, len(items), size)]


def write_checkpoint(path: Union[str, Path], F: int, level: int, counts: Sequence[int], frontier: Sequence[tuple[int, int]]) -> None:
    """One state per line as ``<pf bits hex>,<mult>`` under a ``F=.. level=..`` header."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w") as fh:
        fh.write(f"F={F} level={level} counts={','.join(map(str, counts))}\n")
        for pf, m in frontier:
            fh.write(f"{pf:x},{m}\n")
    os.replace(tmp, path)


def read_checkpoint(path: Union[str, Path]) -> tuple[int, int, list[int], list[tuple[int, int]]]:
    with open(path) as fh:
        header = fh.readline().split()
        try:
            fields = dict(item.split("=", 1) for item in header)
            F, level = int(fields["F"]), int(fields["level"])
            counts = [int(c) for c in fields.get("counts", "").split(",") if c]
            frontier = []
            for line in fh:
                line = line.strip()
                if line:
                    hexpf, m = line.split(",")
                    frontier.append((int(hexpf, 16), int(m)))
        except (KeyError, ValueError) as exc:
            raise MalformedInputError(f"bad checkpoint file {path}") from exc
    return F, level, counts, frontier


def run_descent(
    F: int,
    levels: int,
    workers: int = 1,
    full_check: bool = False,
    keep_last: bool = True,
    checkpoint: Optional[Union[str, Path]] = None,
) -> tuple[CountReport, list[tuple[int, int]]]:
    """Breadth-first descent from ``{1..F}`` for ``levels`` levels.

    Returns the report and the final frontier as sorted ``(pf mask, mult)``
    pairs (empty when ``keep_last`` is off, in which case the last level is
    only counted).  The result does not depend on ``workers``.
    """
    if workers < 1:
        raise DomainError("workers must be positive")
    start_level = 0
    counts: list[int] = []
    root = initial_state(F)
    frontier = [(root.pf, root.mult)]
    if checkpoint is not None and Path(checkpoint).exists():
        cF, clevel, ccounts, cfrontier = read_checkpoint(checkpoint)
        if cF != F or clevel > levels:
            raise DomainError(f"checkpoint {checkpoint} is for F={cF} level={clevel}")
        start_level, frontier = clevel, cfrontier
        counts = ccounts if len(ccounts) == clevel else [0] * clevel
    elapsed = [0.0] * start_level
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for level in range(start_level + 1, levels + 1):
            t0 = time.perf_counter()
            t, s = _level_params(F, F - 2 * (level - 1))
            count_only = level == levels and not keep_last
            if pool is None or len(frontier) < PARALLEL_THRESHOLD:
                results = [_expand_chunk((frontier, F, t, s, full_check, count_only))]
            else:
                chunks = _split(frontier, workers * 4)
                results = list(pool.map(_expand_chunk, [(c, F, t, s, full_check, count_only) for c in chunks]))
            if count_only:
                counts.append(sum(results))
                frontier = []
            else:
                frontier = [st for part in results for st in part]
                frontier.sort()
                counts.append(len(frontier))
            elapsed.append(time.perf_counter() - t0)
            if checkpoint is not None and not count_only:
                write_checkpoint(checkpoint, F, level, counts, frontier)
    finally:
        if pool is not None:
            pool.shutdown()
    return CountReport(F, counts, elapsed), frontier


def _count_dfs(F: int, levels: int, full_check: bool) -> CountReport:
    counts = [0] * levels
    params = [_level_params(F, F - 2 * j) for j in range(levels)]
    t0 = time.perf_counter()
    root = initial_state(F)
    stack = [(root.pf, root.mult, 0)]
    while stack:
        pf, m, depth = stack.pop()
        t, s = params[depth]
        kids = _children(pf, m, F, t, s, full_check)
        counts[depth] += len(kids)
        if depth + 1 < levels:
            stack.extend((p, i, depth + 1) for p, i in kids)
    # Per-level times are not separable in depth-first order.
    return CountReport(F, counts, [time.perf_counter() - t0])


def count_by_genus(
    g_max: int,
    workers: int = 1,
    full_check: bool = False,
    mode: str = "bfs",
    checkpoint: Optional[Union[str, Path]] = None,
    ceiling: int = DEFAULT_GENUS_CEILING,
) -> CountReport:
    """``n_1 .. n_{g_max}`` by descent at ``F = 4 g_max - 1``.

    ``mode="dfs"`` walks the tree depth first and keeps no frontier; it only
    counts and ignores ``workers`` and ``checkpoint``.
    """
    if not 1 <= g_max <= ceiling:
        raise DomainError(f"genus must be in [1, {ceiling}], got {g_max}")
    F = 4 * g_max - 1
    if mode == "dfs":
        return _count_dfs(F, g_max, full_check)
    if mode != "bfs":
        raise DomainError(f"unknown mode {mode!r}")
    report, _ = run_descent(F, g_max, workers, full_check, keep_last=False, checkpoint=checkpoint)
    return report


def enumerate_genus(g: int, workers: int = 1, full_check: bool = False) -> list[NumericalSemigroup]:
    """All semigroups of genus ``g``, read off the final descent frontier, sorted."""
    if g < 1:
        raise DomainError(f"need g >= 1, got {g}")
    _, frontier = run_descent(4 * g - 1, g, workers, full_check)
    return sorted(recover_from_pf(elements_of(pf), g) for pf, _ in frontier)


def enumerate_almost_symmetric_high_type(F: int, t: int, workers: int = 1) -> list[NumericalSemigroup]:
    """Almost symmetric semigroups with Frobenius ``F`` and type ``t >= (F-1)/2``.

    Descends ``g = (F - t)/2`` levels directly at ``F`` and maps each
    recovered genus-``g`` semigroup forward.
    """
    if F < 1 or t > F or 2 * t < F - 1 or (F - t) % 2:
        raise DomainError(f"need 1 <= F, (F-1)/2 <= t <= F, F-t even; got F={F}, t={t}")
    g = (F - t) // 2
    if g == 0:
        return [forward(NumericalSemigroup.naturals(), F)]
    _, frontier = run_descent(F, g, workers)
    return sorted(forward(recover_from_pf(elements_of(pf), g), F) for pf, _ in frontier)
