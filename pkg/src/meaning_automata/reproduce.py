"""End-to-end reproduction of the published numbers as a checked report."""

from __future__ import annotations

import itertools
import random

from . import corpora
from .automata import (
    MINIMIZATION_ALGORITHM,
    minimize_moore,
    moore_equivalent,
    random_moore_machine,
    run_moore,
    run_stack_machine,
    run_table_machine,
    state_count,
    table_size,
)
from .estimators import (
    BORIS,
    HEURISTIC_LABEL,
    MINCAL,
    answer_space_size,
    calendar_schema,
    iterated_what_is_estimate,
    profile_estimate,
)
from .machines import (
    COUNTER_TAPE,
    all_machine,
    ask_yes_no,
    eliza_model,
    eliza_q_complexity,
    most_machine,
    overgeneralizing_comparator,
    what_is_complexity,
    yes_no_machine,
)
from .meaning import SMALLEST_CONSTRUCTED, pair_complexity, q_complexity, tables_isomorphic
from .report import ComplexityReport, Measure

RANDOM_SEED = 1995
RANDOM_MACHINES = 1000


def _words(max_length: int, min_length: int = 0):
    for n in range(min_length, max_length + 1):
        for letters in itertools.product("ab", repeat=n):
            yield "".join(letters)


def _approx(value: int, target: int, tolerance: float = 0.2) -> bool:
    return target * (1 - tolerance) <= value <= target * (1 + tolerance)


def check_pair_complexity(first: str, second: str) -> Measure:
    values = {n: pair_complexity(corpora.yes_no_table(corpora.builtin_corpus(n))) for n in (first, second)}
    return Measure(
        "pair-complexity", values, "defined cells of the yes/no QA tables",
        expected="576 each (24^2)", passed=all(v == 576 for v in values.values()),
    )


def check_table_sizes() -> Measure:
    values = {"yesno-tm": table_size(yes_no_machine()), "comparator": table_size(overgeneralizing_comparator())}
    return Measure(
        "table-size", values, "rows x columns of the printed transition tables",
        expected="30 and 25", passed=values == {"yesno-tm": 30, "comparator": 25},
    )


def check_yes_no_equality() -> Measure:
    machine = yes_no_machine()
    strings = ["".join(bits) for bits in itertools.product("01", repeat=5)]
    agree = 0
    for x, y in itertools.product(strings, repeat=2):
        answer = run_table_machine(machine, [x, y, COUNTER_TAPE]).answer
        agree += answer == ("yes" if x == y else "no")
    return Measure(
        "yesno-equality", f"{agree}/1024", "yes/no machine vs string equality, all 5-bit pairs",
        expected="1024/1024", passed=agree == 1024,
    )


def check_comparator() -> Measure:
    tm, comp = yes_no_machine(), overgeneralizing_comparator()
    agree = sum(
        ask_yes_no(tm, q, s).answer == ask_yes_no(comp, q, s).answer
        for q, s in itertools.product(range(1, 25), repeat=2)
    )
    beyond = ask_yes_no(comp, 25, 25).answer
    return Measure(
        "comparator-overgeneralization", {"agree_1_24": f"{agree}/576", "q25_s25": beyond},
        "comparator vs yes/no machine on indices 1..24, plus the pair (25, 25)",
        expected="576/576 and yes", passed=agree == 576 and beyond == "yes",
    )


def check_what_is() -> Measure:
    values = {n: what_is_complexity(corpora.builtin_whatis(n)) for n in ("T", "S")}
    return Measure(
        "what-is-complexity", values, "askable tokens with one-token definitions",
        expected="T=16, S=26", passed=values == {"T": 16, "S": 26},
    )


def check_iterated() -> Measure:
    t = iterated_what_is_estimate(16, 2, open_vocabulary=False)
    s = iterated_what_is_estimate(24, 2, tokens_per_fact=10, open_vocabulary=True)
    return Measure(
        "iterated-what-is", {"T": t, "S": s}, f"{HEURISTIC_LABEL}; two rounds, within ±20%",
        expected="T≈20 in [16,24], S≈250 in [200,300]", passed=_approx(t, 20) and _approx(s, 250),
    )


def check_eliza() -> Measure:
    value = eliza_q_complexity(eliza_model())
    return Measure(
        "eliza-q-complexity", value, "50 keywords x 2 key list structures + 18 control states",
        expected="118", passed=value == 118,
    )


def check_most() -> Measure:
    machine = most_machine()
    words = list(_words(12, min_length=1))
    agree = sum(run_stack_machine(machine, w) == (w.count("b") > w.count("a")) for w in words)
    states = state_count(machine)
    return Measure(
        "most-pda", {"states": states, "agree": f"{agree}/{len(words)}"},
        "cancellation stack machine vs count(b) > count(a), words of length 1..12",
        expected="states <= 5, 8190/8190", passed=states <= 5 and agree == len(words) == 8190,
    )


def check_all() -> Measure:
    machine = all_machine()
    words = list(_words(12))
    agree = sum(run_moore(machine, w) == ("no" if "a" in w else "yes") for w in words)
    states = state_count(minimize_moore(machine))
    return Measure(
        "all-fsa", {"minimized_states": states, "agree": f"{agree}/{len(words)}"},
        "Moore machine vs 'no a occurs', words of length 0..12",
        expected="2 states, all agree", passed=states == 2 and agree == len(words),
    )


def check_isomorphism(first: str, second: str) -> Measure:
    t1 = corpora.yes_no_table(corpora.builtin_corpus(first))
    t2 = corpora.yes_no_table(corpora.builtin_corpus(second))
    witness = tables_isomorphic(t1, t2)
    r1, r2 = q_complexity(t1), q_complexity(t2)
    values = {
        "isomorphic": witness is not None,
        f"{first}_states": r1.minimized_state_count,
        f"{second}_states": r2.minimized_state_count,
    }
    return Measure(
        "isomorphism", values,
        f"exact backtracking witness; states by {MINIMIZATION_ALGORITHM} ({SMALLEST_CONSTRUCTED})",
        expected="isomorphic, equal state counts",
        passed=witness is not None and r1.minimized_state_count == r2.minimized_state_count,
    )


def check_random_minimization(count: int = RANDOM_MACHINES, seed: int = RANDOM_SEED) -> Measure:
    rng = random.Random(seed)
    good = 0
    for _ in range(count):
        m = random_moore_machine(rng, rng.randint(1, 64), rng.randint(1, 4), rng.randint(1, 3))
        once = minimize_moore(m)
        twice = minimize_moore(once)
        good += moore_equivalent(m, once) and state_count(twice) == state_count(once)
    return Measure(
        "minimize-random", f"{good}/{count}",
        f"random complete machines (<= 64 states, <= 4 symbols, seed {seed}): equivalent and idempotent",
        expected=f"{count}/{count}", passed=good == count,
    )


def check_profiles() -> Measure:
    boris, mincal = profile_estimate(BORIS), profile_estimate(MINCAL)
    return Measure(
        "profile-estimates", {"boris": list(boris), "mincal": list(mincal)}, HEURISTIC_LABEL,
        expected="boris within [1e5, 1e7], mincal high < 1e4",
        passed=10**5 <= boris[0] <= boris[1] <= 10**7 and mincal[1] < 10**4,
    )


def check_answer_space() -> Measure:
    value = answer_space_size(calendar_schema())
    return Measure(
        "calendar-answer-space", value, "12*31*10000 dates + 25*60 times + bottom",
        expected="3721501", passed=value == 3_721_501,
    )


def reproduce(swap: bool = False) -> ComplexityReport:
    """Run every check; ``swap`` exchanges the roles of T and S in the
    symmetric checks."""
    first, second = ("S", "T") if swap else ("T", "S")
    checks = [
        ("pair-complexity", lambda: check_pair_complexity(first, second)),
        ("table-size", check_table_sizes),
        ("yesno-equality", check_yes_no_equality),
        ("comparator-overgeneralization", check_comparator),
        ("what-is-complexity", check_what_is),
        ("iterated-what-is", check_iterated),
        ("eliza-q-complexity", check_eliza),
        ("most-pda", check_most),
        ("all-fsa", check_all),
        ("isomorphism", lambda: check_isomorphism(first, second)),
        ("minimize-random", check_random_minimization),
        ("profile-estimates", check_profiles),
        ("calendar-answer-space", check_answer_space),
    ]
    measures = []
    for name, check in checks:
        try:
            measures.append(check())
        except Exception as exc:  # a broken input must show up as a failed check
            measures.append(Measure(name, f"error: {exc}", "check raised an exception", passed=False))
    return ComplexityReport(
        subject="reproduction of published semantic-complexity numbers",
        measures=measures,
        caveats=(
            f"state counts come from {MINIMIZATION_ALGORITHM}: {SMALLEST_CONSTRUCTED}",
            f"approximate targets are checked at ±20% and labeled {HEURISTIC_LABEL}",
        ),
    )
