import pytest
from hypothesis import given, settings

from meaning_automata.automata import run_table_machine, table_size
from meaning_automata.errors import ParseError
from meaning_automata.machines import (
    all_machine,
    most_bounded_fsa,
    most_machine,
    overgeneralizing_comparator,
    yes_no_machine,
)
from meaning_automata.textformats import (
    emit_moore,
    emit_stack,
    emit_table,
    parse_moore,
    parse_stack,
    parse_table,
)

from strategies import moore_machines

YES_NO_TEXT = (
    "tapes=3 rows=6 cols=5\n"
    "1\t1\t1\t1\tb\t1\n"
    "1\t0\t0\t1\tb\t1\n"
    "1\t1\t0\t1\tno\t1\n"
    "1\t0\t1\t1\tno\t1\n"
    "1\tb\tb\tb\tb\tacc\n"
    "accept=acc\n"
)


def test_yes_no_machine_text_form():
    assert emit_table(yes_no_machine()) == YES_NO_TEXT


@pytest.mark.parametrize("factory", [yes_no_machine, overgeneralizing_comparator])
def test_table_round_trip(factory):
    machine = factory()
    text = emit_table(machine)
    parsed = parse_table(text)
    assert parsed == machine
    assert emit_table(parsed) == text
    assert table_size(parsed) == table_size(machine)


def test_parsed_table_runs():
    machine = parse_table(YES_NO_TEXT)
    assert run_table_machine(machine, ["101", "101", "111"]).answer == "yes"


def test_table_parse_errors_carry_line_numbers():
    bad = YES_NO_TEXT.replace("1\t0\t0\t1\tb\t1\n", "1\t0\t0\tb\t1\n")
    with pytest.raises(ParseError) as info:
        parse_table(bad)
    assert info.value.line == 3
    with pytest.raises(ParseError):
        parse_table(YES_NO_TEXT.replace("tapes=3", "tapes=three"))
    with pytest.raises(ParseError):
        parse_table(YES_NO_TEXT.replace("accept=acc", "acc"))


def test_duplicate_rows_in_text_are_parse_errors():
    text = YES_NO_TEXT.replace("accept=acc", "1\t1\t1\t1\tno\t1\naccept=acc")
    with pytest.raises(ParseError):
        parse_table(text)


@pytest.mark.parametrize("machine", [all_machine(), most_bounded_fsa(2)])
def test_moore_round_trip(machine):
    text = emit_moore(machine)
    parsed = parse_moore(text)
    assert parsed == machine
    assert emit_moore(parsed) == text


@settings(max_examples=100, deadline=None)
@given(moore_machines())
def test_moore_round_trip_random(machine):
    text = emit_moore(machine)
    assert emit_moore(parse_moore(text)) == text
    assert parse_moore(text) == machine


def test_moore_text_layout():
    assert emit_moore(all_machine()) == (
        "states=2 alphabet=a,b start=all-b\n"
        "all-b\tyes\tseen-a\tall-b\n"
        "seen-a\tno\tseen-a\tseen-a\n"
    )


def test_moore_parse_errors():
    text = emit_moore(all_machine())
    with pytest.raises(ParseError):
        parse_moore(text.replace("states=2", "states=3"))
    with pytest.raises(ParseError):
        parse_moore(text.replace("seen-a\tno\tseen-a\tseen-a", "seen-a\tno\tseen-a"))
    with pytest.raises(ParseError):
        parse_moore(text.replace("start=all-b", "start=nowhere"))


def test_stack_round_trip():
    machine = most_machine()
    text = emit_stack(machine)
    parsed = parse_stack(text)
    assert parsed == machine
    assert emit_stack(parsed) == text


def test_stack_parse_rejects_bottom_pop():
    text = emit_stack(most_machine()).replace("scan\ta\tbottom\tscan\tpush:a", "scan\ta\tbottom\tscan\tpop")
    with pytest.raises(ParseError):
        parse_stack(text)


def test_labels_with_whitespace_cannot_be_written():
    from meaning_automata.automata import MooreMachine

    m = MooreMachine({"a b"}, {"x"}, {("a b", "x"): "a b"}, {"a b": "yes"}, "a b")
    with pytest.raises(ValueError):
        emit_moore(m)
