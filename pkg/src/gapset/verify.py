"""Cross-checks between the fast paths and the brute-force oracles.

Each suite returns a :class:`SuiteResult`; a failing suite carries its first
counterexample in the ``gaps:...`` text format.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import oracle
from .bijection import forward, high_type_as_characterization, image_pf, inverse, recover_from_pf
from .descent import (
    DescentState,
    descent_step,
    descent_step_general,
    enumerate_genus,
    initial_state,
    count_by_genus,
)
from .formats import format_gaps
from .ideals import gaps_of_shifted_canonical, shifted_canonical
from .semigroup import (
    NumericalSemigroup,
    is_almost_symmetric,
    is_almost_symmetric_definitional,
    mask_of,
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int = 0
    counterexample: Optional[str] = None
    skipped: bool = False

    def line(self) -> str:
        if self.skipped:
            return f"SKIP {self.name}"
        if self.passed:
            return f"PASS {self.name} ({self.checked} checks)"
        return f"FAIL {self.name}: {self.counterexample}"


class _Fail(Exception):
    pass


def _suite(name: str, body: Callable[[], int]) -> SuiteResult:
    try:
        return SuiteResult(name, True, body())
    except _Fail as exc:
        return SuiteResult(name, False, counterexample=str(exc))


def _expect(ok: bool, what: str) -> None:
    if not ok:
        raise _Fail(what)


def round_trip_failure(S: NumericalSemigroup, F: int) -> Optional[str]:
    """First broken property of ``forward(S, F)``, or ``None``."""
    g, f = S.genus, S.frobenius
    T = forward(S, F)
    where = f"{format_gaps(S)} F={F}"
    if T.frobenius != F:
        return f"{where}: image Frobenius {T.frobenius}"
    if T.genus != F - g:
        return f"{where}: image genus {T.genus}"
    if T.type != F - 2 * g:
        return f"{where}: image type {T.type}"
    if T.multiplicity != F - f:
        return f"{where}: image multiplicity {T.multiplicity}"
    # The image {0, F+1, ...} of the full monoid has depth 1.
    if T.depth != (2 if g else 1):
        return f"{where}: image depth {T.depth}"
    if not is_almost_symmetric_definitional(T):
        return f"{where}: image {format_gaps(T)} not almost symmetric"
    if inverse(T) != S:
        return f"{where}: inverse gives {format_gaps(inverse(T))}"
    if image_pf(S, F) != oracle.pf_bruteforce(T):
        return f"{where}: PF formula {image_pf(S, F)} vs {oracle.pf_bruteforce(T)}"
    return None


def round_trip_fs(g: int) -> list[int]:
    return [F for F in (4 * g - 1, 4 * g, 4 * g + 1, 4 * g + 5) if F >= 1]


def suite_round_trip(max_genus: int) -> SuiteResult:
    def body() -> int:
        n = 0
        for g in range(max_genus + 1):
            for S in oracle.tree_enumerate_by_genus(g):
                for F in round_trip_fs(g):
                    _expect(round_trip_failure(S, F) is None, round_trip_failure(S, F) or "")
                    ideal = shifted_canonical(S, F - S.frobenius)
                    _expect(ideal.positive_gaps() == gaps_of_shifted_canonical(S, F), f"{format_gaps(S)} F={F}: ideal gaps")
                    n += 1
        return n

    return _suite("round-trip", body)


def suite_surjectivity(max_frobenius: int) -> SuiteResult:
    def body() -> int:
        n = 0
        by_genus: dict[int, list[NumericalSemigroup]] = {}
        for F in range(1, max_frobenius + 1):
            almost = oracle.enumerate_as_by_frobenius(F)
            for g in range(0, (F + 1) // 4 + 1):
                if by_genus.get(g) is None:
                    by_genus[g] = oracle.tree_enumerate_by_genus(g)
                images = {forward(S, F) for S in by_genus[g]}
                target = {T for T in almost if T.type == F - 2 * g}
                _expect(images == target, f"F={F} g={g}: {len(images)} images vs {len(target)} almost symmetric")
                n += 1
        return n

    return _suite("surjectivity", body)


def suite_pf_uniqueness(max_frobenius: int) -> SuiteResult:
    def body() -> int:
        n = 0
        for F in range(1, max_frobenius + 1):
            almost = oracle.enumerate_as_by_frobenius(F)
            for t in range(F, -1, -2):
                if 2 * t < F - 1:
                    break
                seen: dict[tuple[int, ...], NumericalSemigroup] = {}
                for T in (T for T in almost if T.type == t):
                    pf = T.pseudo_frobenius()
                    _expect(pf not in seen, f"{format_gaps(T)} and {format_gaps(seen.get(pf, T))} share PF")
                    seen[pf] = T
                    g = (F - t) // 2
                    back = forward(recover_from_pf(pf, g), F)
                    _expect(back == T, f"{format_gaps(T)}: PF recovery gives {format_gaps(back)}")
                    n += 1
        return n

    return _suite("pf-uniqueness", body)


def suite_high_type(max_frobenius: int) -> SuiteResult:
    def body() -> int:
        n = 0
        for F in range(1, max_frobenius + 1):
            for T in oracle.enumerate_by_frobenius(F):
                t = T.type
                if 2 * t < F - 1 or (F - t) % 2:
                    continue
                _expect(
                    high_type_as_characterization(T) == is_almost_symmetric(T),
                    f"{format_gaps(T)}: dual test disagrees with almost symmetry",
                )
                n += 1
        return n

    return _suite("high-type-characterization", body)


def frontier_levels(g_max: int, full_check: bool = False) -> list[list[DescentState]]:
    """Every level of the descent at ``F = 4 g_max - 1``, root first."""
    levels = [[initial_state(4 * g_max - 1)]]
    for _ in range(g_max):
        levels.append([c for st in levels[-1] for c in descent_step(st, full_check)])
    return levels


def general_children(T: NumericalSemigroup) -> list[tuple[int, int]]:
    """``(PF mask, i)`` for each admissible ``i`` under the general descent conditions."""
    t = T.type - 2
    out = []
    for i in range(t + 1, T.multiplicity):
        child = descent_step_general(T, i)
        if child is not None:
            out.append((mask_of(child.pseudo_frobenius()), i))
    return out


def state_semigroup(state: DescentState, level: int) -> NumericalSemigroup:
    F = state.frobenius
    return forward(recover_from_pf(state.elements, level), F)


def suite_descent(max_genus: int, general_limit: int = 8) -> SuiteResult:
    def body() -> int:
        n = 0
        for g_max in range(1, max_genus + 1):
            levels = frontier_levels(g_max)
            F = 4 * g_max - 1
            for level, states in enumerate(levels[:-1]):
                for st in states:
                    quick = descent_step(st)
                    full = descent_step(st, full_check=True)
                    _expect(quick == full, f"F={F} pf={list(st.elements)}: prefix check differs from full check")
                    if g_max <= general_limit and F >= 5 and len(st) - 2 >= 1:
                        T = state_semigroup(st, level)
                        # The root keeps mult = F although {0, F+1, ...} has multiplicity F + 1.
                        _expect(T.multiplicity == (st.mult if level else F + 1), f"F={F} pf={list(st.elements)}: multiplicity {T.multiplicity}")
                        mine = sorted((c.pf, c.mult) for c in quick)
                        _expect(mine == sorted(general_children(T)), f"{format_gaps(T)}: general descent differs")
                    n += 1
            for st in levels[-1]:
                _expect(len(st) == F - 2 * g_max, f"F={F}: wrong PF size")
            _expect(len(set(levels[-1])) == len(levels[-1]), f"F={F}: duplicate states")
        return n

    return _suite("descent-optimization", body)


def suite_counts(max_genus: int, enum_limit: int = 12) -> SuiteResult:
    def body() -> int:
        if max_genus < 1:
            return 0
        tree = oracle.tree_counts(max_genus)
        descent = count_by_genus(max_genus).counts
        _expect(descent == tree[1:], f"descent counts {descent} vs tree {tree[1:]}")
        for g in range(1, min(max_genus, enum_limit) + 1):
            mine = enumerate_genus(g)
            ref = oracle.tree_enumerate_by_genus(g)
            _expect(mine == ref, f"genus {g}: enumeration differs from tree")
        return max_genus
    return _suite("oracle-counts", body)


def suite_pf_oracle(max_frobenius: int) -> SuiteResult:
    def body() -> int:
        n = 0
        for F in range(1, max_frobenius + 1):
            for S in oracle.enumerate_by_frobenius(F):
                _expect(S.pseudo_frobenius() == oracle.pf_bruteforce(S), f"{format_gaps(S)}: PF mismatch")
                _expect(
                    is_almost_symmetric(S) == is_almost_symmetric_definitional(S),
                    f"{format_gaps(S)}: almost symmetric tests disagree",
                )
                n += 1
        if max_frobenius >= 20:
            almost = oracle.enumerate_as_by_frobenius(20)
            distinct = len({oracle.pf_bruteforce(T) for T in almost})
            _expect((len(almost), distinct) == (103, 62), f"F=20: count={len(almost)} distinct_pf={distinct}")
        return n

    return _suite("oracle-pf", body)


GENUS_SUITES = [("round-trip", suite_round_trip), ("descent-optimization", suite_descent), ("oracle-counts", suite_counts)]
FROBENIUS_SUITES = [
    ("surjectivity", suite_surjectivity),
    ("pf-uniqueness", suite_pf_uniqueness),
    ("high-type-characterization", suite_high_type),
    ("oracle-pf", suite_pf_oracle),
]


def run_all(max_genus: int, max_frobenius: int) -> list[SuiteResult]:
    """Genus suites run when ``max_genus > 0``, Frobenius suites when ``max_frobenius > 0``."""
    results = []
    for bound, suites in ((max_genus, GENUS_SUITES), (max_frobenius, FROBENIUS_SUITES)):
        for name, suite in suites:
            results.append(suite(bound) if bound > 0 else SuiteResult(name, True, skipped=True))
    return results
