"""Tab-separated text forms of the machine types.

Transition table::

    tapes=<n> rows=<r> cols=<c>
    <state>\t<read 1>\t...\t<read n>\t<output>\t<next>
    ...
    accept=<label>[,<label>...]

Moore machine (one line per state; successors in header alphabet order,
start state first)::

    states=<n> alphabet=<sym>[,<sym>...] start=<label>
    <state>\t<output>\t<next on sym 1>\t...\t<next on sym k>

Stack machine (``stack=-`` means no stack requirement on acceptance)::

    states=<label>,... start=<label> accept=<label>,... stack=<sym|->
    <state>\t<input or $>\t<stack top>\t<next>\t<push:x|pop|noop>

Labels and symbols may not contain whitespace, commas or ``=``.  Blank lines
and lines starting with ``#`` are ignored.  Emitting a parsed canonical
document reproduces it byte for byte.
"""

from __future__ import annotations

import re

from .automata import (
    MooreMachine,
    StackMachine,
    StackRule,
    TransitionRow,
    TransitionTable,
    _bfs_order,
    _sorted,
)
from .errors import MeaningAutomataError, ParseError

_BAD = re.compile(r"[\s,=]")


def _check_label(label) -> str:
    text = str(label)
    if not text or _BAD.search(text):
        raise ValueError(f"label {text!r} cannot be written in the text format")
    return text


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield number, line


def _header(number: int, line: str, keys: tuple[str, ...]) -> dict[str, str]:
    fields = {}
    for part in line.split():
        key, sep, value = part.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {part!r}", number)
        fields[key] = value
    if set(fields) != set(keys):
        raise ParseError(f"header must have exactly the keys {', '.join(keys)}", number)
    return fields


def _int(value: str, number: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"expected an integer, got {value!r}", number) from None


def _build(factory, number, *args, **kwargs):
    try:
        return factory(*args, **kwargs)
    except (MeaningAutomataError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), number) from exc


# -- transition tables -------------------------------------------------------


def emit_table(machine: TransitionTable) -> str:
    lines = [
        f"tapes={machine.tape_count} rows={machine.counted_rows} cols={machine.counted_columns}"
    ]
    for row in machine.rows:
        cells = [row.state, *row.reads, row.output, row.next]
        lines.append("\t".join(_check_label(c) for c in cells))
    accept = ",".join(_check_label(s) for s in sorted(machine.accepting_states))
    lines.append(f"accept={accept}")
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> TransitionTable:
    lines = list(_content_lines(text))
    if len(lines) < 2:
        raise ParseError("a transition table needs a header and an accept line")
    number, line = lines[0]
    head = _header(number, line, ("tapes", "rows", "cols"))
    tapes = _int(head["tapes"], number)
    rows = []
    for number, line in lines[1:-1]:
        cells = line.split("\t")
        if len(cells) != tapes + 3:
            raise ParseError(f"expected {tapes + 3} tab-separated cells, got {len(cells)}", number)
        rows.append(TransitionRow(cells[0], tuple(cells[1:-2]), cells[-2], cells[-1]))
    number, line = lines[-1]
    if not line.startswith("accept="):
        raise ParseError("last line must be accept=<labels>", number)
    accepting = [s for s in line[len("accept="):].split(",") if s]
    return _build(
        TransitionTable,
        number,
        tape_count=tapes,
        rows=rows,
        accepting_states=accepting,
        counted_rows=_int(head["rows"], lines[0][0]),
        counted_columns=_int(head["cols"], lines[0][0]),
    )


# -- Moore machines ----------------------------------------------------------


def emit_moore(machine: MooreMachine) -> str:
    symbols = _sorted(machine.alphabet)
    reachable = _bfs_order(machine)
    rest = _sorted(machine.states - set(reachable))
    order = reachable + rest
    lines = [
        f"states={len(order)} alphabet={','.join(_check_label(a) for a in symbols)} "
        f"start={_check_label(machine.start)}"
    ]
    for state in order:
        cells = [state, machine.output[state]] + [machine.transition[(state, a)] for a in symbols]
        lines.append("\t".join(_check_label(c) for c in cells))
    return "\n".join(lines) + "\n"


def parse_moore(text: str) -> MooreMachine:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty Moore machine document")
    number, line = lines[0]
    head = _header(number, line, ("states", "alphabet", "start"))
    symbols = [a for a in head["alphabet"].split(",") if a]
    declared = _int(head["states"], number)
    if declared != len(lines) - 1:
        raise ParseError(f"header declares {declared} states, found {len(lines) - 1}", number)
    transition, output = {}, {}
    for number, line in lines[1:]:
        cells = line.split("\t")
        if len(cells) != len(symbols) + 2:
            raise ParseError(f"expected {len(symbols) + 2} tab-separated cells, got {len(cells)}", number)
        state = cells[0]
        if state in output:
            raise ParseError(f"state {state!r} listed twice", number)
        output[state] = cells[1]
        for sym, nxt in zip(symbols, cells[2:]):
            transition[(state, sym)] = nxt
    return _build(
        MooreMachine,
        None,
        states=output.keys(),
        alphabet=symbols,
        transition=transition,
        output=output,
        start=head["start"],
    )


# -- stack machines ----------------------------------------------------------


def emit_stack(machine: StackMachine) -> str:
    states = [machine.start] + sorted(machine.states - {machine.start})
    accept = sorted(machine.accept_states)
    stack = machine.accept_stack if machine.accept_stack is not None else "-"
    lines = [
        f"states={','.join(_check_label(s) for s in states)} start={_check_label(machine.start)} "
        f"accept={','.join(_check_label(s) for s in accept)} stack={_check_label(stack)}"
    ]
    for r in machine.rules:
        lines.append("\t".join(_check_label(c) for c in (r.state, r.symbol, r.top, r.next, r.action)))
    return "\n".join(lines) + "\n"


def parse_stack(text: str) -> StackMachine:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty stack machine document")
    number, line = lines[0]
    head = _header(number, line, ("states", "start", "accept", "stack"))
    rules = []
    for number, line in lines[1:]:
        cells = line.split("\t")
        if len(cells) != 5:
            raise ParseError(f"expected 5 tab-separated cells, got {len(cells)}", number)
        rules.append(StackRule(*cells))
    return _build(
        StackMachine,
        None,
        states=[s for s in head["states"].split(",") if s],
        start=head["start"],
        rules=rules,
        accept_states=[s for s in head["accept"].split(",") if s],
        accept_stack=None if head["stack"] == "-" else head["stack"],
    )
