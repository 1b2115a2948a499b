import io

import pytest

from meaning_automata import corpora
from meaning_automata.corpora import (
    builtin_corpus,
    builtin_whatis,
    emit_corpus,
    load_corpus,
    parse_corpus,
    time_corpus,
    whatis_from_corpus,
    yes_no_questions,
    yes_no_table,
)
from meaning_automata.errors import EmptyCorpus, ParseError, UnknownCorpus
from meaning_automata.meaning import NO, YES, pair_complexity


def test_builtin_sizes():
    assert len(builtin_corpus("T")) == 24
    assert len(builtin_corpus("S")) == 24


def test_builtin_names_are_case_insensitive():
    assert builtin_corpus("t") == builtin_corpus("T")
    with pytest.raises(UnknownCorpus):
        builtin_corpus("U")


def test_t_file_matches_generated_corpus():
    assert builtin_corpus("T") == time_corpus()


def test_t_indices_cover_1_to_24():
    assert sorted(s.index for s in builtin_corpus("T").sentences) == list(range(1, 25))


def test_s_listing_order():
    s = builtin_corpus("S")
    assert s.sentences[0].text == ("john", "is", "at_breakfast")
    assert s.sentences[18].text == ("john", "is", "at_grass")
    assert [x.index for x in s.sentences] == list(range(1, 25))


def test_question_13_on_one_pm():
    t = builtin_corpus("T")
    q13 = yes_no_questions(t, [13])[0]
    one_pm = next(s for s in t.sentences if s.text[-2:] == ("1", "pm"))
    assert q13(one_pm) == YES
    assert q13.text == ("is", "the", "meeting", "at", "1", "pm", "?")
    assert sum(a == YES for a in q13.extension.values()) == 1


def test_question_25_is_answered_no_everywhere():
    t = builtin_corpus("T")
    q25 = yes_no_questions(t, [25])[0]
    assert set(q25.extension.values()) == {NO}
    assert q25.text == ("is", "the", "meeting", "at", "25", "?")


def test_empty_question_range():
    with pytest.raises(ValueError):
        yes_no_questions(builtin_corpus("T"), range(5, 5))
    assert yes_no_table(builtin_corpus("T"), []).questions == ()


def test_whatis_from_corpus_counts_distinct_tokens():
    corpus = parse_corpus("a b c\nb c d\n")
    assert len(whatis_from_corpus(corpus).definitions) == 4


def test_builtin_whatis_entries():
    t = builtin_whatis("T")
    assert {str(h) for h in range(1, 13)} <= t.askable_tokens
    assert {"am", "pm", "is"} <= t.askable_tokens


def test_round_trip():
    for name in ("T", "S"):
        corpus = builtin_corpus(name)
        assert parse_corpus(emit_corpus(corpus), name) == corpus


def test_load_from_stream_and_path(tmp_path):
    path = tmp_path / "mini.txt"
    path.write_text("one two index=2\nthree\n", encoding="utf-8")
    from_path = load_corpus(path)
    assert from_path.name == "mini"
    assert [s.index for s in from_path.sentences] == [2, 2]
    assert load_corpus(io.StringIO(path.read_text()), name="mini") == from_path


def test_lowercasing():
    corpus = parse_corpus("John IS Here\n")
    assert corpus.sentences[0].text == ("john", "is", "here")


@pytest.mark.parametrize(
    "text, line",
    [
        ("a b index=1\nc d index=1\n", 2),
        ("a b\n\nc index=x\n", 3),
        ("index=4\n", 1),
        ("a index=1 b\n", 1),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_corpus(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_empty_corpus():
    with pytest.raises(EmptyCorpus):
        parse_corpus("# nothing\n")
    corpus = parse_corpus("", allow_empty=True)
    assert len(corpus) == 0
    assert pair_complexity(yes_no_table(corpus)) == 0


def test_three_line_file():
    corpus = parse_corpus("x one\nx two\nx three\n")
    table = yes_no_table(corpus)
    assert pair_complexity(table) == 9


def test_data_directory_override(tmp_path, monkeypatch):
    (tmp_path / "T.txt").write_text("only one index=1\n", encoding="utf-8")
    monkeypatch.setenv(corpora.DATA_ENV, str(tmp_path))
    assert len(builtin_corpus("T")) == 1
    monkeypatch.delenv(corpora.DATA_ENV)
    assert len(builtin_corpus("T")) == 24
