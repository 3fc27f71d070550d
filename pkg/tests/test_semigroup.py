import pytest
from hypothesis import given, settings

from conftest import naive_gaps, semigroups, generator_sets
from gapset import (
    DomainError,
    GapsetViolation,
    InvariantSummary,
    MalformedInputError,
    NotCofiniteError,
    NumericalSemigroup,
    from_gaps,
    from_generators,
    invariants,
    is_almost_symmetric,
    is_almost_symmetric_definitional,
    minimal_generators,
    pseudo_frobenius,
    validate_gapset,
)
from gapset.formats import format_gaps, from_dict, parse_semigroup, to_dict, to_json
from gapset.oracle import enumerate_by_frobenius, pf_bruteforce
from gapset.semigroup import is_symmetric


@pytest.mark.parametrize(
    "gaps, expected",
    [([1, 2, 3, 4, 5, 7], None), ([], None), ([2], (1, 1)), ([1, 3, 4], (2, 2)), ([1, 2, 4, 8], (3, 5))],
)
def test_validate_gapset(gaps, expected):
    assert validate_gapset(gaps) == expected


def test_validate_gapset_witness_is_genuine():
    a, b = validate_gapset([1, 2, 4, 8])
    assert a + b in {1, 2, 4, 8} and a not in {1, 2, 4, 8} and b not in {1, 2, 4, 8}


@pytest.mark.parametrize("bad", [[0, 1], [2, 1], [1, 1], [-3]])
def test_validate_gapset_malformed(bad):
    with pytest.raises(MalformedInputError):
        validate_gapset(bad)


def test_from_gaps():
    S = from_gaps([1])
    assert S == from_generators([2, 3])
    assert S.frobenius == 1
    N = from_gaps([])
    assert N.frobenius == -1 and N.genus == 0 and 0 in N and 1 in N
    T = from_gaps([1, 2, 3, 4, 5, 7])
    assert T.members_upto(10) == [0, 6, 8, 9, 10]


def test_from_gaps_rejects_violation():
    with pytest.raises(GapsetViolation) as info:
        from_gaps([2])
    assert info.value.witness == (1, 1)


@pytest.mark.parametrize(
    "gens, gaps",
    [([2, 3], [1]), ([1], []), ([4, 5, 11], [1, 2, 3, 6, 7]), ([3, 5, 7], [1, 2, 4]), ([6, 10, 15], None), ([4, 6, 101], None)],
)
def test_from_generators(gens, gaps):
    expected = naive_gaps(gens) if gaps is None else gaps
    assert list(from_generators(gens).gaps) == expected


def test_from_generators_bound_beyond_two_smallest():
    # Frobenius number far above the product of the two smallest generators.
    S = from_generators([4, 6, 101])
    assert S.frobenius > 24
    assert list(S.gaps) == naive_gaps([4, 6, 101], 600)


def test_from_generators_errors():
    with pytest.raises(NotCofiniteError):
        from_generators([4, 6])
    with pytest.raises(MalformedInputError):
        from_generators([])
    with pytest.raises(MalformedInputError):
        from_generators([0, 3])
    with pytest.raises(MalformedInputError):
        from_generators([2**31, 3])


@pytest.mark.parametrize(
    "gaps, summary",
    [
        ([1, 2, 3, 6, 7], InvariantSummary(7, 5, 4, 2, 2)),
        ([1], InvariantSummary(1, 1, 2, 1, 1)),
        ([1, 2, 3, 4, 5, 7], InvariantSummary(7, 6, 6, 5, 2)),
        ([], InvariantSummary(-1, 0, 1, 0, 0)),
    ],
)
def test_invariants(gaps, summary):
    assert invariants(from_gaps(gaps)) == summary


@pytest.mark.parametrize(
    "gaps, pf",
    [([1], (1,)), ([1, 2, 3, 4, 5, 7], (2, 3, 4, 5, 7)), ([1, 2, 3, 6, 7], (6, 7)), ([1, 2, 3, 5, 7], (2, 5, 7))],
)
def test_pseudo_frobenius(gaps, pf):
    assert pseudo_frobenius(from_gaps(gaps)) == pf


def test_pseudo_frobenius_full_monoid():
    with pytest.raises(DomainError):
        pseudo_frobenius(NumericalSemigroup.naturals())


@pytest.mark.parametrize("gaps, expected", [([1, 2], True), ([1], True), ([1, 2, 3, 6, 7], False)])
def test_almost_symmetric(gaps, expected):
    S = from_gaps(gaps)
    assert is_almost_symmetric(S) is expected
    assert is_almost_symmetric_definitional(S) is expected


def test_almost_symmetric_full_monoid():
    with pytest.raises(DomainError):
        is_almost_symmetric(NumericalSemigroup.naturals())


@pytest.mark.parametrize("gaps, gens", [([1], [2, 3]), ([], [1]), ([1, 2, 3, 6, 7], [4, 5, 11])])
def test_minimal_generators(gaps, gens):
    assert minimal_generators(from_gaps(gaps)) == gens


def test_ordering_and_hash():
    a, b = from_gaps([1, 2]), from_gaps([1, 3])
    assert a < b and sorted([b, a]) == [a, b]
    assert len({a, from_gaps([1, 2])}) == 1


def test_text_formats():
    assert format_gaps(parse_semigroup("gens:3,5,7")) == "gaps:1,2,4"
    assert parse_semigroup("gaps:1,2,4") == from_generators([3, 5, 7])
    assert format_gaps(parse_semigroup("gaps:")) == "gaps:"
    for bad in ["1,2", "foo:1", "gaps:1,x", "gaps:2"]:
        with pytest.raises((MalformedInputError, GapsetViolation)):
            parse_semigroup(bad)


def test_json_schema():
    S = from_generators([4, 5, 11])
    d = to_dict(S)
    assert d == {
        "frobenius": 7, "genus": 5, "multiplicity": 4, "type": 2, "depth": 2,
        "gaps": [1, 2, 3, 6, 7], "pf": [6, 7], "min_gens": [4, 5, 11],
    }
    import json

    assert from_dict(json.loads(to_json(S))) == S
    with pytest.raises(MalformedInputError):
        from_dict({**d, "type": 3})


@settings(max_examples=200, deadline=None)
@given(generator_sets())
def test_matches_naive_sieve_and_round_trips(gens):
    S = from_generators(gens)
    assert list(S.gaps) == naive_gaps(gens)
    assert from_gaps(S.gaps) == S
    assert from_generators(minimal_generators(S)) == S
    assert set(minimal_generators(S)) <= set(gens)


@settings(max_examples=200, deadline=None)
@given(semigroups())
def test_invariant_inequalities(S):
    if S.genus == 0:
        return
    F, g, t, m = S.frobenius, S.genus, S.type, S.multiplicity
    assert F <= 2 * g - 1
    assert F + t <= 2 * g
    assert F + 1 <= 2 * g
    assert 1 <= m <= F + 1
    pf = pseudo_frobenius(S)
    assert pf and pf[-1] == F
    assert (S.depth - 1) * m < F + 1 <= S.depth * m


def test_exhaustive_small_frobenius():
    for F in range(1, 17):
        for S in enumerate_by_frobenius(F):
            assert is_almost_symmetric(S) == is_almost_symmetric_definitional(S)
            assert (S.type == 1) == is_symmetric(S)
            assert pf_bruteforce(S) == S.pseudo_frobenius()
