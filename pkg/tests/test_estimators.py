import pytest
from hypothesis import given
from hypothesis import strategies as st

from meaning_automata.errors import InvalidRounds, ParseError
from meaning_automata.estimators import (
    BORIS,
    HEURISTIC_LABEL,
    MINCAL,
    QUESTION_MODES,
    Slot,
    SlotSchema,
    TaskProfile,
    answer_space_size,
    calendar_schema,
    emit_profile,
    iterated_what_is_estimate,
    parse_profile,
    profile_breakdown,
    profile_estimate,
    profile_point_estimate,
    range_cardinality,
    word_to_fact_estimate,
)


def test_label_marks_estimates_as_heuristic():
    assert "heuristic" in HEURISTIC_LABEL


# -- iterated what-is --------------------------------------------------------


def test_closed_vocabulary_t():
    assert iterated_what_is_estimate(16, 2) == 20
    assert 16 <= iterated_what_is_estimate(16, 2) <= 24


def test_open_vocabulary_s():
    value = iterated_what_is_estimate(24, 2, tokens_per_fact=10, open_vocabulary=True)
    assert 200 <= value <= 300
    assert abs(value - 250) <= 0.2 * 250


def test_one_round_is_the_seed():
    assert iterated_what_is_estimate(16, 1) == 16
    assert iterated_what_is_estimate(24, 1, open_vocabulary=True) == 24


def test_invalid_rounds():
    with pytest.raises(InvalidRounds):
        iterated_what_is_estimate(16, 0)


@given(st.integers(0, 500), st.integers(1, 5), st.integers(0, 12), st.booleans())
def test_iterated_estimate_is_monotone(seed, rounds, tpf, open_vocab):
    value = iterated_what_is_estimate(seed, rounds, tpf, open_vocab)
    assert value >= seed
    assert iterated_what_is_estimate(seed, rounds + 1, tpf, open_vocab) >= value
    assert iterated_what_is_estimate(seed + 1, rounds, tpf, open_vocab) >= value


def test_word_to_fact_estimate():
    assert word_to_fact_estimate(350) == 35
    assert word_to_fact_estimate(0) == 0
    assert word_to_fact_estimate(5) == 1
    assert word_to_fact_estimate(4) == 0
    with pytest.raises(ValueError):
        word_to_fact_estimate(-1)


# -- answer spaces -----------------------------------------------------------


def test_calendar_answer_space():
    assert answer_space_size(calendar_schema()) == 3_721_501
    date, time = calendar_schema().slots
    assert date.cardinality == 12 * 31 * 10_000
    assert time.cardinality == 25 * 60


def test_empty_schema_has_only_bottom():
    assert answer_space_size(SlotSchema()) == 1


@given(st.lists(st.integers(1, 1000), max_size=5), st.lists(st.integers(1, 1000), max_size=5))
def test_schema_union_adds_sizes(a, b):
    sa = SlotSchema(tuple(Slot(f"a{i}", n) for i, n in enumerate(a)))
    sb = SlotSchema(tuple(Slot(f"b{i}", n) for i, n in enumerate(b)))
    assert answer_space_size(sa.union(sb)) == answer_space_size(sa) + answer_space_size(sb) - 1


def test_range_cardinality_errors():
    assert range_cardinality() == 1
    with pytest.raises(ValueError):
        range_cardinality((5, 4))
    with pytest.raises(ValueError):
        Slot("x", 0)


# -- task profiles -----------------------------------------------------------


def test_boris_range():
    low, high = profile_estimate(BORIS)
    assert 10**5 <= low <= high <= 10**7


def test_mincal_range():
    low, high = profile_estimate(MINCAL)
    assert high < 10**4
    assert low <= profile_point_estimate(MINCAL) <= high


def test_zero_profile():
    assert profile_estimate(TaskProfile(0, 0, 0)) == (0, 0)


def test_exact_power_of_ten_is_its_own_bracket():
    assert profile_estimate(TaskProfile(0, 100, 0)) == (100, 100)


profiles = st.builds(
    TaskProfile,
    vocabulary_size=st.integers(0, 10_000),
    fact_count=st.integers(0, 10_000),
    construction_count=st.integers(0, 1000),
    question_modes=st.frozensets(st.sampled_from(sorted(QUESTION_MODES))),
    rounds=st.integers(1, 4),
    tokens_per_fact=st.integers(1, 12),
)


@given(profiles)
def test_profile_bounds_are_ordered(profile):
    low, high = profile_estimate(profile)
    assert low <= profile_point_estimate(profile) <= high
    assert low <= high


@given(profiles, st.sampled_from(sorted(QUESTION_MODES)))
def test_adding_a_mode_never_lowers_the_estimate(profile, mode):
    richer = TaskProfile(
        profile.vocabulary_size, profile.fact_count, profile.construction_count,
        profile.question_modes | {mode}, profile.rounds, profile.tokens_per_fact,
    )
    low, high = profile_estimate(profile)
    low2, high2 = profile_estimate(richer)
    assert low2 >= low and high2 >= high


@given(profiles)
def test_profile_text_round_trip(profile):
    assert parse_profile(emit_profile(profile)) == profile


def test_breakdown_fields():
    b = profile_breakdown(BORIS)
    assert b["base_facts"] == 500
    assert b["point_estimate"] == 500 * 10**4
    assert (b["low"], b["high"]) == profile_estimate(BORIS)


def test_profile_validation():
    with pytest.raises(InvalidRounds):
        TaskProfile(1, 1, 1, rounds=0)
    with pytest.raises(ValueError):
        TaskProfile(1, 1, 1, frozenset({"telepathy"}))
    with pytest.raises(ValueError):
        TaskProfile(-1, 1, 1)


@pytest.mark.parametrize(
    "text",
    [
        "vocabulary_size = 1\n",
        "vocabulary_size = 1\nvocabulary_size = 2\n",
        "colour = blue\n",
        "vocabulary_size = x\nfact_count = 1\nconstruction_count = 0\nmodes =\nrounds = 1\n",
    ],
)
def test_profile_parse_errors(text):
    with pytest.raises(ParseError):
        parse_profile(text)


def test_profile_file_without_tokens_per_fact():
    profile = parse_profile(
        "# mincal\nvocabulary_size = 350\nfact_count = 200\nconstruction_count = 100\n"
        "modes = yes-no, what-is\nrounds = 1\n"
    )
    assert profile == MINCAL
