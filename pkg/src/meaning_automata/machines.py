"""Named machines: the yes/no Turing table and its overgeneralizing
comparator, what-is lookup machines, quantifier automata for "all" and
"most", the ELIZA complexity model and dialog-state constants."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .automata import (
    BLANK,
    END,
    NO,
    NOOP,
    POP,
    PUSH_A,
    PUSH_B,
    STACK_BOTTOM,
    MooreMachine,
    RunOutcome,
    StackMachine,
    StackRule,
    TransitionRow,
    TransitionTable,
    run_table_machine,
)
from .errors import HourOutOfRange
from .meaning import BOTTOM

COUNTER_TAPE = "11111"
INDEX_WIDTH = 5


def yes_no_machine() -> TransitionTable:
    """Two-state machine answering "is X = Y?" on bit-encoded indices.

    Read tapes are (question bits, sentence bits, counter).  Each step writes
    ``no`` on a mismatch and a blank otherwise; all blanks ends in ``acc``.
    The counter holds five 1's, so inputs longer than five bits find no row.
    Printed form is 6 rows by 5 columns.
    """
    rows = [
        TransitionRow("1", ("1", "1", "1"), BLANK, "1"),
        TransitionRow("1", ("0", "0", "1"), BLANK, "1"),
        TransitionRow("1", ("1", "0", "1"), NO, "1"),
        TransitionRow("1", ("0", "1", "1"), NO, "1"),
        TransitionRow("1", (BLANK, BLANK, BLANK), BLANK, "acc"),
    ]
    return TransitionTable(3, rows, {"acc"}, counted_rows=6, counted_columns=5)


def overgeneralizing_comparator() -> TransitionTable:
    """The yes/no machine without its counter: compares two bit strings of
    any length, so it also answers pairs of indices beyond the corpus."""
    rows = [
        TransitionRow("1", ("1", "1"), BLANK, "1"),
        TransitionRow("1", ("0", "0"), BLANK, "1"),
        TransitionRow("1", ("1", "0"), NO, "1"),
        TransitionRow("1", ("0", "1"), NO, "1"),
        TransitionRow("1", (BLANK, BLANK), BLANK, "acc"),
    ]
    return TransitionTable(2, rows, {"acc"}, counted_rows=5, counted_columns=5)


def index_to_bits(index: int, width: int = INDEX_WIDTH) -> str:
    """Tape form of a 1-based index: ``index - 1`` with bit weights 1, 2, 4, ...
    from the first cell on.  Widens beyond ``width`` when needed."""
    if index < 1:
        raise ValueError("indices are 1-based")
    value = index - 1
    width = max(width, value.bit_length())
    return "".join(str((value >> k) & 1) for k in range(width))


def bits_to_index(bits: str) -> int:
    return sum(int(c) << k for k, c in enumerate(bits)) + 1


def ask_yes_no(machine: TransitionTable, question_index: int, sentence_index: int) -> RunOutcome:
    """Run a comparator machine on a (question, sentence) index pair."""
    tapes = [index_to_bits(question_index), index_to_bits(sentence_index)]
    if machine.tape_count == 3:
        tapes.append(COUNTER_TAPE)
    return run_table_machine(machine, tapes)


def canonicalize_time(hour: int, meridiem: str) -> int:
    """Hour index of "X am" / "X pm": pm adds 12, so 12 pm is 24."""
    if not 1 <= hour <= 12:
        raise HourOutOfRange(f"hour must be in 1..12, got {hour}")
    meridiem = meridiem.lower()
    if meridiem == "am":
        return hour
    if meridiem == "pm":
        return hour + 12
    raise ValueError(f"meridiem must be 'am' or 'pm', got {meridiem!r}")


# -- what-is machines --------------------------------------------------------


@dataclass(frozen=True)
class WhatIsMachine:
    """Maps each askable token to a one-token definition."""

    definitions: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "definitions", MappingProxyType(dict(self.definitions)))
        for token, definition in self.definitions.items():
            if not definition or len(definition.split()) != 1 or definition == BOTTOM:
                raise ValueError(f"definition of {token!r} must be a single token")

    @property
    def askable_tokens(self) -> frozenset[str]:
        return frozenset(self.definitions)

    def union(self, other: "WhatIsMachine") -> "WhatIsMachine":
        shared = self.askable_tokens & other.askable_tokens
        if shared:
            raise ValueError(f"askable sets overlap: {sorted(shared)}")
        return WhatIsMachine({**self.definitions, **other.definitions})


def what_is_complexity(machine: WhatIsMachine) -> int:
    return len(machine.definitions)


def answer_what_is(machine: WhatIsMachine, token: str) -> str:
    return machine.definitions.get(token, BOTTOM)


# -- quantifier automata -----------------------------------------------------
#
# A word over {a, b} enumerates the elements of A: `a` marks an element of
# A - B, `b` an element of A ∩ B.


def all_machine() -> MooreMachine:
    """"All A are B": yes until the first ``a``, then no forever."""
    return MooreMachine(
        states={"all-b", "seen-a"},
        alphabet={"a", "b"},
        transition={
            ("all-b", "a"): "seen-a",
            ("all-b", "b"): "all-b",
            ("seen-a", "a"): "seen-a",
            ("seen-a", "b"): "seen-a",
        },
        output={"all-b": "yes", "seen-a": "no"},
        start="all-b",
    )


def most_machine() -> StackMachine:
    """"Most A are B" by cancellation.

    Symbols are pushed while they match the stack top and cancel the top
    otherwise, so the stack always holds the surplus of one letter.  At the
    end of input the machine moves to ``done`` and accepts iff only ``b``'s
    remain.
    """
    rules = [
        StackRule("scan", "a", STACK_BOTTOM, "scan", PUSH_A),
        StackRule("scan", "a", "a", "scan", PUSH_A),
        StackRule("scan", "a", "b", "scan", POP),
        StackRule("scan", "b", STACK_BOTTOM, "scan", PUSH_B),
        StackRule("scan", "b", "b", "scan", PUSH_B),
        StackRule("scan", "b", "a", "scan", POP),
        StackRule("scan", END, STACK_BOTTOM, "done", NOOP),
        StackRule("scan", END, "a", "done", NOOP),
        StackRule("scan", END, "b", "done", NOOP),
    ]
    return StackMachine(
        states={"scan", "done"},
        start="scan",
        rules=rules,
        accept_states={"done"},
        accept_stack="b",
    )


def most_bounded_fsa(bound: int) -> MooreMachine:
    """Finite-state attempt at "most": tracks #b - #a clipped to
    ``[-bound, bound]``.  Correct only while the surplus stays in range."""
    if bound < 1:
        raise ValueError("bound must be positive")
    states = range(-bound, bound + 1)

    def clip(v):
        return max(-bound, min(bound, v))

    return MooreMachine(
        states={str(v) for v in states},
        alphabet={"a", "b"},
        transition={
            (str(v), sym): str(clip(v + (1 if sym == "b" else -1)))
            for v in states
            for sym in "ab"
        },
        output={str(v): "yes" if v > 0 else "no" for v in states},
        start="0",
    )


# -- ELIZA and dialog models -------------------------------------------------

# Keywords of the DOCTOR script; only their number and structure counts matter.
ELIZA_KEYWORDS = (
    "sorry", "remember", "if", "dreamt", "dreamed", "dream", "dreams", "how",
    "when", "alike", "same", "certainly", "feel", "think", "believe", "wish",
    "perhaps", "maybe", "name", "deutsch", "francais", "italiano", "espanol",
    "xfremd", "hello", "computer", "machine", "machines", "computers", "am",
    "are", "your", "was", "were", "you", "i", "yes", "no", "my", "can",
    "what", "because", "why", "everyone", "everybody", "nobody", "noone",
    "always", "like", "dit",
)


@dataclass(frozen=True)
class ElizaModel:
    keywords: tuple[tuple[str, int], ...]  # (keyword, key list structures)
    control_state_count: int
    default_rule: bool = True

    def __post_init__(self):
        object.__setattr__(self, "keywords", tuple((k, int(n)) for k, n in self.keywords))
        for keyword, structures in self.keywords:
            if not 0 <= structures <= 2:
                raise ValueError(f"keyword {keyword!r} has {structures} structures; at most 2 allowed")
        if self.control_state_count < 0:
            raise ValueError("control_state_count must be nonnegative")
        if not self.default_rule:
            raise ValueError("an ELIZA model always has a default rule")

    def structures_for(self, keyword: str) -> int | None:
        for k, n in self.keywords:
            if k == keyword:
                return n
        return None


def eliza_model() -> ElizaModel:
    return ElizaModel(tuple((k, 2) for k in ELIZA_KEYWORDS), control_state_count=18)


def eliza_q_complexity(model: ElizaModel) -> int:
    return sum(n for _, n in model.keywords) + model.control_state_count


@dataclass(frozen=True)
class DialogConstants:
    conversation_for_action_states: int = 9
    bunt_dialog_acts: int = 18


DIALOG_CONSTANTS = DialogConstants()
