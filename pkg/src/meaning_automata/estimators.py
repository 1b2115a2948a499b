"""Heuristic Q-complexity estimates.

These are fixed formulas calibrated once against the published targets
(about 20 and 250 facts for two rounds of what-is questions on T and S,
under 10^4 for a calendar interface, 10^5..10^7 for narrative
understanding).  Outputs are estimates, not measurements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidRounds, ParseError

HEURISTIC_LABEL = "heuristic estimate (paper-calibrated)"

TOKENS_PER_FACT = 10
WORDS_PER_FACT = 10
# Share of a closed vocabulary whose explanations need a genuinely new fact
# in each further round; the rest reuse terms that are already explained.
CLOSED_NEW_TERM_RATE = 4  # one in four

QUESTION_MODES = frozenset({"yes-no", "what-is", "iterated-what-is", "iterated-why", "alternative"})
ITERATED_MODES = frozenset({"iterated-what-is", "iterated-why"})


def iterated_what_is_estimate(
    seed_terms: int, rounds: int, tokens_per_fact: int = TOKENS_PER_FACT, open_vocabulary: bool = False
) -> int:
    """Facts needed to answer ``rounds`` rounds of "what is" questions.

    Round one needs a fact per seed term.  With an open vocabulary every fact
    introduced in a round brings ``tokens_per_fact`` new terms that must be
    explained in the next round.  With a closed vocabulary each further round
    adds facts for a quarter of the seed terms, rounded up.
    """
    if rounds < 1:
        raise InvalidRounds(f"rounds must be at least 1, got {rounds}")
    if seed_terms < 0 or tokens_per_fact < 0:
        raise ValueError("seed_terms and tokens_per_fact must be nonnegative")
    if not open_vocabulary:
        return seed_terms + (rounds - 1) * -(-seed_terms // CLOSED_NEW_TERM_RATE)
    total = new = seed_terms
    for _ in range(rounds - 1):
        new *= tokens_per_fact
        total += new
    return total


def word_to_fact_estimate(word_count: int) -> int:
    """Background facts for a vocabulary, at ten words per fact (halves round up)."""
    if word_count < 0:
        raise ValueError("word_count must be nonnegative")
    return (word_count + WORDS_PER_FACT // 2) // WORDS_PER_FACT


# -- answer spaces -----------------------------------------------------------


@dataclass(frozen=True)
class Slot:
    name: str
    cardinality: int

    def __post_init__(self):
        if self.cardinality < 1:
            raise ValueError(f"slot {self.name!r} needs a nonempty answer domain")


def range_cardinality(*ranges: tuple[int, int]) -> int:
    """Number of tuples with each component in an inclusive ``(lo, hi)`` range."""
    total = 1
    for lo, hi in ranges:
        if hi < lo:
            raise ValueError(f"empty range {lo}..{hi}")
        total *= hi - lo + 1
    return total


@dataclass(frozen=True)
class SlotSchema:
    """Questions asking for slot values; every schema also admits ⊥ once."""

    slots: tuple[Slot, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(self.slots))

    def union(self, other: "SlotSchema") -> "SlotSchema":
        return SlotSchema(self.slots + other.slots)


def answer_space_size(schema: SlotSchema) -> int:
    return sum(slot.cardinality for slot in schema.slots) + 1


def calendar_schema() -> SlotSchema:
    """Date? and Time? with dates [Mo, Day, Yr] and times [Hour:Min]."""
    return SlotSchema(
        (
            Slot("date", range_cardinality((1, 12), (1, 31), (1, 10_000))),
            Slot("time", range_cardinality((0, 24), (0, 59))),
        )
    )


# -- task profiles -----------------------------------------------------------


@dataclass(frozen=True)
class TaskProfile:
    vocabulary_size: int
    fact_count: int
    construction_count: int
    question_modes: frozenset[str] = field(default_factory=frozenset)
    rounds: int = 1
    tokens_per_fact: int = TOKENS_PER_FACT

    def __post_init__(self):
        object.__setattr__(self, "question_modes", frozenset(self.question_modes))
        for name in ("vocabulary_size", "fact_count", "construction_count", "tokens_per_fact"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.rounds < 1:
            raise InvalidRounds(f"rounds must be at least 1, got {self.rounds}")
        unknown = self.question_modes - QUESTION_MODES
        if unknown:
            raise ValueError(f"unknown question modes: {sorted(unknown)}")


# BORIS: 50 knowledge structures of at most 10 clauses each.  Iterated why
# and what-is questions in a narrative chain through at least three rounds.
BORIS = TaskProfile(350, 500, 0, frozenset({"iterated-what-is", "iterated-why"}), rounds=3)
MINCAL = TaskProfile(350, 200, 100, frozenset({"yes-no", "what-is"}), rounds=1)
BUILTIN_PROFILES = {"boris": BORIS, "mincal": MINCAL}


def profile_point_estimate(profile: TaskProfile) -> int:
    """Facts plus constructions, multiplied by ``tokens_per_fact`` for every
    iterated question mode in every round after the first."""
    iterated = len(profile.question_modes & ITERATED_MODES)
    base = profile.fact_count + profile.construction_count
    return base * profile.tokens_per_fact ** (iterated * (profile.rounds - 1))


def profile_estimate(profile: TaskProfile) -> tuple[int, int]:
    """The powers of ten bracketing :func:`profile_point_estimate`."""
    point = profile_point_estimate(profile)
    if point == 0:
        return (0, 0)
    low = 10 ** (len(str(point)) - 1)
    return (low, low if point == low else low * 10)


def profile_breakdown(profile: TaskProfile) -> dict[str, int]:
    low, high = profile_estimate(profile)
    iterated = len(profile.question_modes & ITERATED_MODES)
    return {
        "base_facts": profile.fact_count + profile.construction_count,
        "iterated_modes": iterated,
        "growth_factor": profile.tokens_per_fact ** (iterated * (profile.rounds - 1)),
        "point_estimate": profile_point_estimate(profile),
        "vocabulary_facts": word_to_fact_estimate(profile.vocabulary_size),
        "low": low,
        "high": high,
    }


_PROFILE_KEYS = ("vocabulary_size", "fact_count", "construction_count", "modes", "rounds", "tokens_per_fact")


def parse_profile(text: str) -> TaskProfile:
    """``key = value`` lines; ``modes`` is a comma list.  ``tokens_per_fact``
    is optional."""
    values: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in _PROFILE_KEYS:
            raise ParseError(f"expected one of {', '.join(_PROFILE_KEYS)} = value", number)
        if key in values:
            raise ParseError(f"{key} given twice", number)
        values[key] = value
    missing = [k for k in _PROFILE_KEYS[:-1] if k not in values]
    if missing:
        raise ParseError(f"missing keys: {', '.join(missing)}")
    try:
        return TaskProfile(
            vocabulary_size=int(values["vocabulary_size"]),
            fact_count=int(values["fact_count"]),
            construction_count=int(values["construction_count"]),
            question_modes=frozenset(m.strip() for m in values["modes"].split(",") if m.strip()),
            rounds=int(values["rounds"]),
            tokens_per_fact=int(values.get("tokens_per_fact", TOKENS_PER_FACT)),
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def emit_profile(profile: TaskProfile) -> str:
    return (
        f"vocabulary_size = {profile.vocabulary_size}\n"
        f"fact_count = {profile.fact_count}\n"
        f"construction_count = {profile.construction_count}\n"
        f"modes = {','.join(sorted(profile.question_modes))}\n"
        f"rounds = {profile.rounds}\n"
        f"tokens_per_fact = {profile.tokens_per_fact}\n"
    )
