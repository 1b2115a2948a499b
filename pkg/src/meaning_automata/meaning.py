"""Sentences, questions and the question-answer table ``M(s, q) = q(s)``.

A sentence's meaning is the set of answers it gets across a fixed question
set.  Complexity of a table is measured two ways: by the number of defined
(sentence, question) cells, and by the state count of the smallest Moore
machine we construct that reproduces the table.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .automata import MINIMIZATION_ALGORITHM, MooreMachine, minimize_moore, state_count
from .errors import (
    DuplicateId,
    ExtensionOutOfRange,
    MeaningAutomataError,
    ParseError,
    UnknownSentence,
    WidthTooSmall,
)

BOTTOM = "⊥"
YES = "yes"
NO = "no"
QUESTION_KINDS = ("yes-no", "wh", "alternative")

SMALLEST_CONSTRUCTED = "smallest constructed, not proven smallest"


@dataclass(frozen=True)
class Sentence:
    id: int
    text: tuple[str, ...]
    canonical_index: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "text", tuple(self.text))
        if not self.text:
            raise ValueError(f"sentence {self.id} has no tokens")

    @property
    def index(self) -> int:
        """The canonical index if one was assigned, else the id."""
        return self.id if self.canonical_index is None else self.canonical_index

    def __str__(self):
        return " ".join(self.text)


@dataclass(frozen=True)
class Question:
    """A partial function from sentence ids to answers."""

    id: int
    text: tuple[str, ...]
    kind: str
    extension: Mapping[int, str]

    def __post_init__(self):
        object.__setattr__(self, "text", tuple(self.text))
        object.__setattr__(self, "extension", MappingProxyType(dict(self.extension)))
        if self.kind not in QUESTION_KINDS:
            raise ValueError(f"question kind must be one of {QUESTION_KINDS}, got {self.kind!r}")
        if BOTTOM in self.extension.values():
            raise ValueError(f"{BOTTOM} is reserved and cannot appear in a question extension")

    def __call__(self, sentence: Sentence) -> str:
        return self.extension.get(sentence.id, BOTTOM)


@dataclass(frozen=True)
class QATable:
    """The meaning automaton as data: a total map (sentence id, question id) -> answer."""

    sentences: tuple[Sentence, ...]
    questions: tuple[Question, ...]
    cells: Mapping[tuple[int, int], str]

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        object.__setattr__(self, "questions", tuple(self.questions))
        object.__setattr__(self, "cells", MappingProxyType(dict(self.cells)))
        sids = _unique_ids(self.sentences, "sentence")
        qids = _unique_ids(self.questions, "question")
        for q in self.questions:
            for sid in q.extension:
                if sid not in sids:
                    raise ExtensionOutOfRange(f"question {q.id} answers unknown sentence {sid}")
        expected = {(s, q) for s in sids for q in qids}
        if set(self.cells) != expected:
            raise ValueError("cells must cover every (sentence, question) pair exactly")
        for q in self.questions:
            for sid, answer in q.extension.items():
                if self.cells[(sid, q.id)] != answer:
                    raise ValueError(f"cell ({sid}, {q.id}) disagrees with the question's answer")

    def answer(self, sentence_id: int, question_id: int) -> str:
        return self.cells[(sentence_id, question_id)]

    def rows(self) -> list[tuple[str, ...]]:
        return [tuple(self.cells[(s.id, q.id)] for q in self.questions) for s in self.sentences]

    def sentence(self, sentence_id: int) -> Sentence:
        for s in self.sentences:
            if s.id == sentence_id:
                return s
        raise UnknownSentence(sentence_id)


def _unique_ids(items, what: str) -> set[int]:
    ids = [item.id for item in items]
    dupes = sorted(i for i, c in Counter(ids).items() if c > 1)
    if dupes:
        raise DuplicateId(f"duplicate {what} ids: {dupes}")
    return set(ids)


def build_qa_table(sentences: Iterable[Sentence], questions: Iterable[Question]) -> QATable:
    sentences = tuple(sentences)
    questions = tuple(questions)
    sids = _unique_ids(sentences, "sentence")
    _unique_ids(questions, "question")
    for q in questions:
        unknown = sorted(set(q.extension) - sids)
        if unknown:
            raise ExtensionOutOfRange(f"question {q.id} answers unknown sentences {unknown}")
    cells = {(s.id, q.id): q(s) for s in sentences for q in questions}
    return QATable(sentences, questions, cells)


def meaning_of(sentence: Sentence | int, table: QATable) -> frozenset[tuple[int, str]]:
    """The answers ``sentence`` receives, keyed by question id."""
    sid = sentence.id if isinstance(sentence, Sentence) else sentence
    if not any(s.id == sid for s in table.sentences):
        raise UnknownSentence(sid)
    return frozenset((q.id, table.cells[(sid, q.id)]) for q in table.questions)


def pair_complexity(table: QATable) -> int:
    return sum(1 for answer in table.cells.values() if answer != BOTTOM)


# -- isomorphism -------------------------------------------------------------


@dataclass(frozen=True)
class Isomorphism:
    sentence_map: Mapping[int, int]
    question_map: Mapping[int, int]


def tables_isomorphic(t1: QATable, t2: QATable) -> Isomorphism | None:
    """Find bijections of sentences and of questions that carry ``t1`` onto ``t2``.

    Exact backtracking over sentence assignments.  Rows are only matched with
    rows of the same answer multiset, and after each assignment the multiset
    of partial column vectors must agree on both sides, which prunes almost
    everything on tables with distinct rows.
    """
    n, m = len(t1.sentences), len(t1.questions)
    if (n, m) != (len(t2.sentences), len(t2.questions)):
        return None
    rows1, rows2 = t1.rows(), t2.rows()
    row_sig1 = [tuple(sorted(Counter(r).items())) for r in rows1]
    row_sig2 = [tuple(sorted(Counter(r).items())) for r in rows2]
    cols1 = [tuple(r[j] for r in rows1) for j in range(m)]
    cols2 = [tuple(r[j] for r in rows2) for j in range(m)]
    col_sig1 = [tuple(sorted(Counter(c).items())) for c in cols1]
    col_sig2 = [tuple(sorted(Counter(c).items())) for c in cols2]
    if Counter(row_sig1) != Counter(row_sig2) or Counter(col_sig1) != Counter(col_sig2):
        return None

    candidates = {
        i: [j for j in range(n) if row_sig2[j] == row_sig1[i]] for i in range(n)
    }
    order = sorted(range(n), key=lambda i: (len(candidates[i]), i))
    image: dict[int, int] = {}
    used: set[int] = set()

    def keys(cols_sig, rows, assigned):
        return Counter(
            (cols_sig[j],) + tuple(rows[r][j] for r in assigned) for j in range(m)
        )

    def search(depth: int) -> bool:
        if depth == n:
            return True
        i = order[depth]
        for j in candidates[i]:
            if j in used:
                continue
            image[i] = j
            used.add(j)
            done = order[: depth + 1]
            if keys(col_sig1, rows1, done) == keys(col_sig2, rows2, [image[k] for k in done]):
                if search(depth + 1):
                    return True
            del image[i]
            used.discard(j)
        return False

    if not search(0):
        return None

    pool: dict[tuple, list[int]] = {}
    for j in range(m):
        key = (col_sig2[j],) + tuple(rows2[image[i]][j] for i in range(n))
        pool.setdefault(key, []).append(j)
    col_image = {}
    for j in range(m):
        key = (col_sig1[j],) + tuple(rows1[i][j] for i in range(n))
        col_image[j] = pool[key].pop(0)

    return Isomorphism(
        sentence_map=MappingProxyType(
            {t1.sentences[i].id: t2.sentences[image[i]].id for i in range(n)}
        ),
        question_map=MappingProxyType(
            {t1.questions[j].id: t2.questions[col_image[j]].id for j in range(m)}
        ),
    )


# -- finite-state encoding ---------------------------------------------------


def required_width(table: QATable) -> int:
    """Fewest bits that index every sentence and every question position."""
    largest = max(len(table.sentences), len(table.questions), 1)
    return max(1, (largest - 1).bit_length())


def encode_pair(question_pos: int, sentence_pos: int, width: int) -> str:
    """Big-endian bits of the 0-based question position, then the sentence position."""
    return format(question_pos, f"0{width}b") + format(sentence_pos, f"0{width}b")


def encode_as_moore(table: QATable, width: int | None = None) -> MooreMachine:
    """Moore machine over ``{"0", "1"}`` that answers the table.

    After reading :func:`encode_pair` of a (question, sentence) position it
    outputs that cell; every other input (a proper prefix, an index outside
    the table, or anything longer) yields ``BOTTOM``.  Positions follow the
    order of ``table.sentences`` and ``table.questions``.
    """
    need = required_width(table)
    if width is None:
        width = need
    elif width < need:
        raise WidthTooSmall(f"width {width} cannot index {need}-bit positions")
    nq, ns = len(table.questions), len(table.sentences)

    def valid(bits: str) -> bool:
        qbits, sbits = bits[:width], bits[width:]
        if qbits and int(qbits, 2) << (width - len(qbits)) >= nq:
            return False
        if sbits and int(sbits, 2) << (width - len(sbits)) >= ns:
            return False
        return True

    sink = "sink"
    states = [sink]
    transition = {(sink, "0"): sink, (sink, "1"): sink}
    output = {sink: BOTTOM}
    frontier = [""] if valid("") else []
    while frontier:
        bits = frontier.pop()
        label = "p" + bits
        states.append(label)
        if len(bits) == 2 * width:
            q = table.questions[int(bits[:width], 2)]
            s = table.sentences[int(bits[width:], 2)]
            output[label] = table.cells[(s.id, q.id)]
            transition[(label, "0")] = transition[(label, "1")] = sink
            continue
        output[label] = BOTTOM
        for sym in "01":
            nxt = bits + sym
            if valid(nxt):
                transition[(label, sym)] = "p" + nxt
                frontier.append(nxt)
            else:
                transition[(label, sym)] = sink
    start = "p" if "p" in output else sink
    return MooreMachine(states, {"0", "1"}, transition, output, start)


@dataclass(frozen=True)
class ComplexityRecord:
    pair_count: int
    minimized_state_count: int
    encoding_width: int
    algorithm: str = MINIMIZATION_ALGORITHM
    caveat: str = SMALLEST_CONSTRUCTED


def q_complexity(table: QATable) -> ComplexityRecord:
    width = required_width(table)
    machine = minimize_moore(encode_as_moore(table, width))
    return ComplexityRecord(
        pair_count=pair_complexity(table),
        minimized_state_count=state_count(machine),
        encoding_width=width,
    )


# -- table file format -------------------------------------------------------


def emit_qa_table(table: QATable) -> str:
    """Header ``sentences=<n> questions=<m>`` then one ``sid<TAB>qid<TAB>answer``
    line per defined cell.  Ids are written as 1-based positions."""
    lines = [f"sentences={len(table.sentences)} questions={len(table.questions)}"]
    for i, s in enumerate(table.sentences, start=1):
        for j, q in enumerate(table.questions, start=1):
            answer = table.cells[(s.id, q.id)]
            if answer != BOTTOM:
                lines.append(f"{i}\t{j}\t{answer}")
    return "\n".join(lines) + "\n"


def parse_qa_table(text: str) -> QATable:
    lines = [(n, line) for n, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise ParseError("empty table document")
    number, header = lines[0]
    fields = dict(part.partition("=")[::2] for part in header.split())
    try:
        n, m = int(fields["sentences"]), int(fields["questions"])
    except (KeyError, ValueError):
        raise ParseError("header must be sentences=<n> questions=<m>", number) from None
    extensions: dict[int, dict[int, str]] = {q: {} for q in range(1, m + 1)}
    for number, line in lines[1:]:
        cells = line.split("\t")
        if len(cells) != 3:
            raise ParseError(f"expected 3 tab-separated cells, got {len(cells)}", number)
        try:
            sid, qid = int(cells[0]), int(cells[1])
        except ValueError:
            raise ParseError("sentence and question ids must be integers", number) from None
        answer = cells[2].strip()
        if not (1 <= sid <= n and 1 <= qid <= m):
            raise ParseError(f"cell ({sid}, {qid}) is outside the declared table", number)
        if not answer or answer == BOTTOM:
            raise ParseError("answers must be nonempty and not the reserved bottom token", number)
        if sid in extensions[qid]:
            raise ParseError(f"cell ({sid}, {qid}) defined twice", number)
        extensions[qid][sid] = answer
    sentences = [Sentence(i, (f"s{i}",)) for i in range(1, n + 1)]
    questions = []
    for qid, ext in extensions.items():
        kind = "yes-no" if set(ext.values()) <= {YES, NO} else "wh"
        questions.append(Question(qid, (f"q{qid}",), kind, ext))
    try:
        return build_qa_table(sentences, questions)
    except MeaningAutomataError as exc:
        raise ParseError(str(exc)) from exc
