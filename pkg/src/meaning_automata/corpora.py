"""Sentence corpora: the built-in sets T and S, yes/no question generators,
and reading/writing the corpus file format.

Corpus files are UTF-8, one sentence per line, tokens separated by spaces.
Lines starting with ``#`` are comments, except ``# template: ...`` which
records the corpus template.  A trailing ``index=<n>`` token sets the
sentence's canonical index.  Text is lowercased on load.

Built-in data lives in the package ``data`` directory unless the
``MEANING_AUTOMATA_DATA`` environment variable names another one.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, TextIO

from .errors import EmptyCorpus, ParseError, UnknownCorpus
from .machines import WhatIsMachine, canonicalize_time
from .meaning import NO, YES, QATable, Question, Sentence, build_qa_table

DATA_ENV = "MEANING_AUTOMATA_DATA"
BUILTIN_NAMES = ("T", "S")
# Builtin T uses a closed vocabulary of time words; S is open-ended.
CLOSED_VOCABULARY = {"T": True, "S": False}

_INDEX = re.compile(r"^index=(.*)$")
_TEMPLATE = "# template:"


@dataclass(frozen=True)
class Corpus:
    name: str
    sentences: tuple[Sentence, ...]
    template: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))

    def __len__(self):
        return len(self.sentences)

    def by_index(self, index: int) -> Sentence | None:
        for s in self.sentences:
            if s.index == index:
                return s
        return None


def data_dir() -> Path:
    override = os.environ.get(DATA_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("meaning_automata") / "data"))


def _normalize_name(name: str) -> str:
    upper = name.upper()
    if upper not in BUILTIN_NAMES:
        raise UnknownCorpus(f"no builtin corpus named {name!r}; choose T or S")
    return upper


def builtin_corpus(name: str) -> Corpus:
    return _load_builtin(_normalize_name(name), str(data_dir()))


@lru_cache(maxsize=None)
def _load_builtin(name: str, directory: str) -> Corpus:
    return load_corpus(Path(directory) / f"{name}.txt", name=name)


def builtin_whatis(name: str) -> WhatIsMachine:
    return _load_whatis(_normalize_name(name), str(data_dir()))


@lru_cache(maxsize=None)
def _load_whatis(name: str, directory: str) -> WhatIsMachine:
    path = Path(directory) / f"{name}.whatis"
    definitions = {}
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not all(p.strip() for p in parts):
            raise ParseError("expected token<TAB>definition", number)
        token, definition = parts[0].strip(), parts[1].strip()
        if token in definitions:
            raise ParseError(f"token {token!r} defined twice", number)
        definitions[token] = definition
    return WhatIsMachine(definitions)


def whatis_from_corpus(corpus: Corpus) -> WhatIsMachine:
    """What-is machine that can be asked about every distinct token."""
    tokens = sorted({tok for s in corpus.sentences for tok in s.text})
    return WhatIsMachine({tok: f"def_{tok}" for tok in tokens})


def time_corpus() -> Corpus:
    """Set T generated from its template rather than read from disk."""
    sentences = []
    for meridiem in ("am", "pm"):
        for hour in range(1, 13):
            text = ("the", "meeting", "is", "at", str(hour), meridiem)
            sentences.append(
                Sentence(len(sentences) + 1, text, canonicalize_time(hour, meridiem))
            )
    return Corpus("T", sentences, "the meeting is at X")


# -- file format -------------------------------------------------------------


def parse_corpus(text: str, name: str = "corpus", allow_empty: bool = False) -> Corpus:
    sentences = []
    template = None
    seen_index: dict[int, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith(_TEMPLATE):
            template = line[len(_TEMPLATE):].strip() or None
            continue
        if not line or line.startswith("#"):
            continue
        tokens = line.lower().split()
        index = None
        match = _INDEX.match(tokens[-1])
        if match:
            try:
                index = int(match.group(1))
            except ValueError:
                raise ParseError(f"bad index {match.group(1)!r}", number) from None
            tokens = tokens[:-1]
            if index in seen_index:
                raise ParseError(f"index {index} already used on line {seen_index[index]}", number)
            seen_index[index] = number
        if not tokens:
            raise ParseError("line has an index but no sentence", number)
        if any(_INDEX.match(tok) for tok in tokens):
            raise ParseError("index= may only appear once, at the end of a line", number)
        sentences.append(Sentence(len(sentences) + 1, tuple(tokens), index))
    if not sentences and not allow_empty:
        raise EmptyCorpus(f"corpus {name!r} has no sentences")
    return Corpus(name, sentences, template)


def load_corpus(
    source: str | os.PathLike | TextIO, name: str | None = None, allow_empty: bool = False
) -> Corpus:
    if hasattr(source, "read"):
        text = source.read()
        name = name or Path(str(getattr(source, "name", "corpus"))).stem
    else:
        path = Path(source)
        text = path.read_text(encoding="utf-8")
        name = name or path.stem
    return parse_corpus(text, name, allow_empty)


def emit_corpus(corpus: Corpus) -> str:
    lines = []
    if corpus.template:
        lines.append(f"{_TEMPLATE} {corpus.template}")
    for s in corpus.sentences:
        line = " ".join(s.text)
        if s.canonical_index is not None:
            line += f" index={s.canonical_index}"
        lines.append(line)
    return "\n".join(lines) + "\n"


# -- questions ---------------------------------------------------------------


def _question_text(corpus: Corpus, index: int) -> tuple[str, ...]:
    sentence = corpus.by_index(index)
    if sentence is not None:
        tokens = list(sentence.text)
    elif corpus.template:
        tokens = corpus.template.replace("X", str(index)).split()
    else:
        tokens = ["it", "is", f"#{index}"]
    if "is" in tokens:
        tokens.remove("is")
    return ("is", *tokens, "?")


def yes_no_questions(corpus: Corpus, indices: Iterable[int]) -> list[Question]:
    """One question per index, "is <sentence X>?", answered yes exactly by
    the sentence whose canonical index is X.  Indices need not occur in the
    corpus; such questions are answered no throughout."""
    indices = list(indices)
    if not indices:
        raise ValueError("need at least one question index")
    return [
        Question(
            id=x,
            text=_question_text(corpus, x),
            kind="yes-no",
            extension={s.id: YES if s.index == x else NO for s in corpus.sentences},
        )
        for x in indices
    ]


def yes_no_table(corpus: Corpus, indices: Iterable[int] | None = None) -> QATable:
    """QA table of the corpus against its yes/no questions (by default one per
    sentence index, in increasing order)."""
    if indices is None:
        indices = sorted({s.index for s in corpus.sentences})
    indices = list(indices)
    questions = yes_no_questions(corpus, indices) if indices else []
    return build_qa_table(corpus.sentences, questions)
