"""Machine representations: table-driven multi-tape machines, Moore machines
and pushdown (stack) machines, with execution, size metrics and minimization.

All machines are immutable after construction and validated eagerly, so every
operation below is a pure function of its arguments.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (
    AlphabetMismatch,
    AlphabetViolation,
    IncompleteMachine,
    NondeterministicMachine,
)

BLANK = "b"
NO = "no"

# Stack machine vocabulary.
END = "$"
STACK_BOTTOM = "bottom"
PUSH_A, PUSH_B, POP, NOOP = "push:a", "push:b", "pop", "noop"

MINIMIZATION_ALGORITHM = "Hopcroft partition refinement seeded on the output map"


# ---------------------------------------------------------------------------
# Table-driven multi-tape machines
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TransitionRow:
    state: str
    reads: tuple[str, ...]
    output: str
    next: str

    def __post_init__(self):
        object.__setattr__(self, "reads", tuple(self.reads))


@dataclass(frozen=True)
class TransitionTable:
    """A deterministic machine whose heads all move right one cell per step.

    ``tape_count`` counts the read tapes; the output tape is implicit and
    receives one symbol per step.  The start state is the state of the first
    row.  ``counted_rows`` and ``counted_columns`` are the dimensions of the
    machine's canonical printed form and define :func:`table_size`; they are
    stored rather than derived because the printed conventions are not
    uniform across machines.
    """

    tape_count: int
    rows: tuple[TransitionRow, ...]
    accepting_states: frozenset[str]
    counted_rows: int
    counted_columns: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "accepting_states", frozenset(self.accepting_states))
        if self.tape_count < 1:
            raise ValueError("tape_count must be positive")
        if not self.rows:
            raise ValueError("a transition table needs at least one row")
        seen = set()
        for row in self.rows:
            if len(row.reads) != self.tape_count:
                raise ValueError(
                    f"row {row} reads {len(row.reads)} symbols, expected {self.tape_count}"
                )
            key = (row.state, row.reads)
            if key in seen:
                raise NondeterministicMachine(f"two rows for state {row.state!r} reading {row.reads}")
            seen.add(key)
        if self.counted_rows < len(self.states):
            raise ValueError("counted_rows is smaller than the number of states")
        if self.counted_columns < 2:
            raise ValueError("counted_columns must be at least 2")

    @property
    def start(self) -> str:
        return self.rows[0].state

    @property
    def states(self) -> frozenset[str]:
        found = {row.state for row in self.rows} | {row.next for row in self.rows}
        return frozenset(found | self.accepting_states)

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(sym for row in self.rows for sym in row.reads)


@dataclass(frozen=True)
class RunOutcome:
    """Result of :func:`run_table_machine`.

    ``halt`` is ``"accept"`` when an accepting state was entered,
    ``"no-matching-row"`` when the machine stopped because no row applied, and
    ``"loop"`` when it cycled forever on blank input.
    """

    accepted: bool
    output_tape: tuple[str, ...]
    steps: int
    halt: str

    @property
    def answer(self) -> str | None:
        """``"yes"`` for accept with a blank output tape, ``"no"`` for accept
        with ``no`` written, otherwise None."""
        if not self.accepted:
            return None
        if NO in self.output_tape:
            return "no"
        if all(sym == BLANK for sym in self.output_tape):
            return "yes"
        return None


def run_table_machine(machine: TransitionTable, tapes: Sequence[str]) -> RunOutcome:
    if len(tapes) != machine.tape_count:
        raise ValueError(f"expected {machine.tape_count} tapes, got {len(tapes)}")
    alphabet = machine.alphabet
    for tape in tapes:
        for sym in tape:
            if sym not in alphabet:
                raise AlphabetViolation(f"symbol {sym!r} is not in the tape alphabet")

    lookup = {(row.state, row.reads): row for row in machine.rows}
    length = max((len(t) for t in tapes), default=0)
    state = machine.start
    output: list[str] = []
    blank_states: set[str] = set()
    pos = 0
    while state not in machine.accepting_states:
        if pos >= length:
            # Past every input: reads are all blank, so a repeated state never halts.
            if state in blank_states:
                return RunOutcome(False, tuple(output), pos, "loop")
            blank_states.add(state)
        reads = tuple(t[pos] if pos < len(t) else BLANK for t in tapes)
        row = lookup.get((state, reads))
        if row is None:
            return RunOutcome(False, tuple(output), pos, "no-matching-row")
        output.append(row.output)
        state = row.next
        pos += 1
    return RunOutcome(True, tuple(output), pos, "accept")


def table_size(machine: TransitionTable) -> int:
    return machine.counted_rows * machine.counted_columns


# ---------------------------------------------------------------------------
# Moore machines
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MooreMachine:
    """Complete deterministic finite-state machine with state outputs."""

    states: frozenset
    alphabet: frozenset
    transition: Mapping[tuple[Hashable, Hashable], Hashable]
    output: Mapping[Hashable, Hashable]
    start: Hashable

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "transition", MappingProxyType(dict(self.transition)))
        object.__setattr__(self, "output", MappingProxyType(dict(self.output)))
        if self.start not in self.states:
            raise IncompleteMachine(f"start state {self.start!r} is not a state")
        for state in self.states:
            if state not in self.output:
                raise IncompleteMachine(f"state {state!r} has no output")
            for sym in self.alphabet:
                target = self.transition.get((state, sym))
                if target is None:
                    raise IncompleteMachine(f"no transition from {state!r} on {sym!r}")
                if target not in self.states:
                    raise IncompleteMachine(f"transition to unknown state {target!r}")
        extra = set(self.transition) - {(s, a) for s in self.states for a in self.alphabet}
        if extra:
            raise IncompleteMachine(f"transitions outside states x alphabet: {sorted(map(str, extra))}")

    def step(self, state, symbol):
        return self.transition[(state, symbol)]


def _sorted(items: Iterable) -> list:
    return sorted(items, key=lambda x: (type(x).__name__, str(x)))


def run_moore(machine: MooreMachine, word: Iterable) -> Hashable:
    state = machine.start
    for sym in word:
        if sym not in machine.alphabet:
            raise AlphabetViolation(f"symbol {sym!r} is not in the input alphabet")
        state = machine.transition[(state, sym)]
    return machine.output[state]


def _bfs_order(machine: MooreMachine) -> list:
    symbols = _sorted(machine.alphabet)
    order = [machine.start]
    seen = {machine.start}
    queue = deque(order)
    while queue:
        state = queue.popleft()
        for sym in symbols:
            nxt = machine.transition[(state, sym)]
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


def prune(machine: MooreMachine) -> MooreMachine:
    """Drop states unreachable from the start state."""
    reachable = set(_bfs_order(machine))
    if reachable == machine.states:
        return machine
    return MooreMachine(
        states=reachable,
        alphabet=machine.alphabet,
        transition={k: v for k, v in machine.transition.items() if k[0] in reachable},
        output={s: machine.output[s] for s in reachable},
        start=machine.start,
    )


def relabel(machine: MooreMachine, mapping: Mapping) -> MooreMachine:
    """Rename states through the injective ``mapping``."""
    if len(set(mapping[s] for s in machine.states)) != len(machine.states):
        raise ValueError("relabeling must be injective")
    return MooreMachine(
        states={mapping[s] for s in machine.states},
        alphabet=machine.alphabet,
        transition={(mapping[s], a): mapping[t] for (s, a), t in machine.transition.items()},
        output={mapping[s]: o for s, o in machine.output.items()},
        start=mapping[machine.start],
    )


def canonical_labels(machine: MooreMachine) -> MooreMachine:
    """Relabel reachable states ``"0", "1", ...`` in breadth-first order."""
    pruned = prune(machine)
    return relabel(pruned, {s: str(i) for i, s in enumerate(_bfs_order(pruned))})


def minimize_moore(machine: MooreMachine) -> MooreMachine:
    """Smallest Moore machine with the same input/output behavior.

    Unreachable states are pruned first.  The partition starts from the
    output classes and is refined with Hopcroft's splitter worklist; the
    resulting states are labeled in breadth-first order so equivalent inputs
    give identical outputs.
    """
    m = prune(machine)
    order = _bfs_order(m)
    index = {s: i for i, s in enumerate(order)}
    symbols = _sorted(m.alphabet)
    n, k = len(order), len(symbols)

    delta = [[index[m.transition[(s, a)]] for a in symbols] for s in order]
    preimage = [[[] for _ in range(n)] for _ in range(k)]
    for p in range(n):
        for j in range(k):
            preimage[j][delta[p][j]].append(p)

    by_output: dict = {}
    for p, s in enumerate(order):
        by_output.setdefault(m.output[s], []).append(p)
    blocks = [set(group) for group in by_output.values()]
    block_of = [0] * n
    for b, members in enumerate(blocks):
        for p in members:
            block_of[p] = b

    work = {(b, j) for b in range(len(blocks)) for j in range(k)}
    while work:
        b, j = work.pop()
        pre = set()
        for q in blocks[b]:
            pre.update(preimage[j][q])
        touched: dict[int, set] = {}
        for p in pre:
            touched.setdefault(block_of[p], set()).add(p)
        for y, inside in touched.items():
            if len(inside) == len(blocks[y]):
                continue
            outside = blocks[y] - inside
            blocks[y] = inside
            new = len(blocks)
            blocks.append(outside)
            for p in outside:
                block_of[p] = new
            for jj in range(k):
                if (y, jj) in work:
                    work.add((new, jj))
                elif len(inside) <= len(outside):
                    work.add((y, jj))
                else:
                    work.add((new, jj))

    quotient = MooreMachine(
        states=range(len(blocks)),
        alphabet=m.alphabet,
        transition={
            (block_of[p], a): block_of[delta[p][j]]
            for p in range(n)
            for j, a in enumerate(symbols)
        },
        output={block_of[p]: m.output[s] for p, s in enumerate(order)},
        start=block_of[0],
    )
    return canonical_labels(quotient)


def distinguishing_string(m1: MooreMachine, m2: MooreMachine) -> tuple | None:
    """Shortest input on which the two machines disagree, or None.

    Breadth-first search over the reachable part of the product machine.
    """
    if m1.alphabet != m2.alphabet:
        raise AlphabetMismatch("machines have different input alphabets")
    symbols = _sorted(m1.alphabet)
    start = (m1.start, m2.start)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        if m1.output[pair[0]] != m2.output[pair[1]]:
            word = []
            while parent[pair] is not None:
                pair, sym = parent[pair]
                word.append(sym)
            return tuple(reversed(word))
        for sym in symbols:
            nxt = (m1.transition[(pair[0], sym)], m2.transition[(pair[1], sym)])
            if nxt not in parent:
                parent[nxt] = (pair, sym)
                queue.append(nxt)
    return None


def moore_equivalent(m1: MooreMachine, m2: MooreMachine) -> bool:
    return distinguishing_string(m1, m2) is None


def random_moore_machine(
    rng: random.Random, n_states: int, alphabet_size: int, output_count: int = 2
) -> MooreMachine:
    """Uniformly random complete machine; used for property checks."""
    states = [f"s{i}" for i in range(n_states)]
    alphabet = [chr(ord("a") + i) for i in range(alphabet_size)]
    outputs = [f"o{i}" for i in range(output_count)]
    return MooreMachine(
        states=states,
        alphabet=alphabet,
        transition={(s, a): rng.choice(states) for s in states for a in alphabet},
        output={s: rng.choice(outputs) for s in states},
        start=states[0],
    )


# ---------------------------------------------------------------------------
# Stack machines
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StackRule:
    state: str
    symbol: str  # an input symbol, or END once the input is exhausted
    top: str
    next: str
    action: str  # PUSH_A, PUSH_B, POP or NOOP


@dataclass(frozen=True)
class StackMachine:
    """Deterministic pushdown machine over ``{a, b}``.

    Input is followed by the END marker.  A run rejects as soon as no rule
    applies.  It accepts when it finishes in one of ``accept_states`` and, if
    ``accept_stack`` is set, the stack above the bottom marker is nonempty
    and consists only of that symbol.
    """

    states: frozenset[str]
    start: str
    rules: tuple[StackRule, ...]
    accept_states: frozenset[str]
    accept_stack: str | None = None
    input_alphabet: frozenset[str] = field(default=frozenset({"a", "b"}))

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "accept_states", frozenset(self.accept_states))
        object.__setattr__(self, "input_alphabet", frozenset(self.input_alphabet))
        if self.start not in self.states or not self.accept_states <= self.states:
            raise ValueError("start and accept states must be states")
        stack_symbols = self.input_alphabet | {STACK_BOTTOM}
        seen = set()
        for rule in self.rules:
            key = (rule.state, rule.symbol, rule.top)
            if key in seen:
                raise NondeterministicMachine(f"two rules for {key}")
            seen.add(key)
            if rule.state not in self.states or rule.next not in self.states:
                raise ValueError(f"rule {rule} uses an unknown state")
            if rule.symbol not in self.input_alphabet | {END}:
                raise AlphabetViolation(f"rule {rule} reads an unknown symbol")
            if rule.top not in stack_symbols:
                raise AlphabetViolation(f"rule {rule} inspects an unknown stack symbol")
            if rule.action == POP:
                if rule.top == STACK_BOTTOM:
                    raise ValueError(f"rule {rule} would pop the bottom marker")
            elif rule.action != NOOP:
                pushed = rule.action.removeprefix("push:")
                if not rule.action.startswith("push:") or pushed not in self.input_alphabet:
                    raise ValueError(f"rule {rule} has an invalid action")

    def accepts_configuration(self, state: str, stack: Sequence[str]) -> bool:
        if state not in self.accept_states:
            return False
        if self.accept_stack is None:
            return True
        body = stack[1:]
        return bool(body) and all(sym == self.accept_stack for sym in body)


def run_stack_machine(machine: StackMachine, word: Iterable[str]) -> bool:
    symbols = list(word)
    for sym in symbols:
        if sym not in machine.input_alphabet:
            raise AlphabetViolation(f"symbol {sym!r} is not in the input alphabet")
    lookup = {(r.state, r.symbol, r.top): r for r in machine.rules}
    state = machine.start
    stack = [STACK_BOTTOM]
    for sym in symbols + [END]:
        rule = lookup.get((state, sym, stack[-1]))
        if rule is None:
            return False
        if rule.action == POP:
            stack.pop()
        elif rule.action != NOOP:
            stack.append(rule.action.removeprefix("push:"))
        state = rule.next
    return machine.accepts_configuration(state, stack)


def state_count(machine: MooreMachine | StackMachine) -> int:
    return len(machine.states)
