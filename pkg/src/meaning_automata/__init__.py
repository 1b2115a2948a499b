"""Meaning automata: question-answer semantics and semantic complexity measures."""

from .automata import (
    MooreMachine,
    StackMachine,
    TransitionRow,
    TransitionTable,
    minimize_moore,
    moore_equivalent,
    run_moore,
    run_stack_machine,
    run_table_machine,
    state_count,
    table_size,
)
from .corpora import Corpus, builtin_corpus, load_corpus, yes_no_questions, yes_no_table
from .estimators import (
    TaskProfile,
    answer_space_size,
    iterated_what_is_estimate,
    profile_estimate,
    word_to_fact_estimate,
)
from .meaning import (
    BOTTOM,
    QATable,
    Question,
    Sentence,
    build_qa_table,
    encode_as_moore,
    meaning_of,
    pair_complexity,
    q_complexity,
    tables_isomorphic,
)
from .report import ComplexityReport

__version__ = "0.1.0"
