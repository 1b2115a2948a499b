"""Command-line interface.

Exit codes: 0 success, 1 failed check or verification, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpora
from .automata import (
    MINIMIZATION_ALGORITHM,
    MooreMachine,
    StackMachine,
    TransitionTable,
    minimize_moore,
    moore_equivalent,
    run_moore,
    run_stack_machine,
    run_table_machine,
    state_count,
)
from .errors import (
    CheckFailed,
    EquivalenceCheckFailed,
    MeaningAutomataError,
    UnknownCorpus,
    UnknownMachine,
    UnknownMeasure,
)
from .estimators import (
    BUILTIN_PROFILES,
    HEURISTIC_LABEL,
    iterated_what_is_estimate,
    parse_profile,
    profile_breakdown,
)
from .machines import (
    COUNTER_TAPE,
    ElizaModel,
    WhatIsMachine,
    all_machine,
    answer_what_is,
    eliza_model,
    eliza_q_complexity,
    most_machine,
    overgeneralizing_comparator,
    what_is_complexity,
    yes_no_machine,
)
from .meaning import SMALLEST_CONSTRUCTED, encode_as_moore, pair_complexity, q_complexity
from .report import ComplexityReport, Measure
from .reproduce import reproduce
from .textformats import emit_moore, emit_stack, emit_table, parse_moore

MACHINES = {
    "yesno-tm": yes_no_machine,
    "comparator": overgeneralizing_comparator,
    "whatis-T": lambda: corpora.builtin_whatis("T"),
    "whatis-S": lambda: corpora.builtin_whatis("S"),
    "all-fsa": all_machine,
    "most-pda": most_machine,
    "eliza-model": eliza_model,
}
MEASURES = ("pairs", "yesno-states", "whatis", "iterated")


def get_machine(name: str):
    try:
        return MACHINES[name]()
    except KeyError:
        raise UnknownMachine(f"unknown machine {name!r}; choose from {', '.join(MACHINES)}") from None


def export_machine(machine) -> str:
    if isinstance(machine, TransitionTable):
        return emit_table(machine)
    if isinstance(machine, MooreMachine):
        return emit_moore(machine)
    if isinstance(machine, StackMachine):
        return emit_stack(machine)
    if isinstance(machine, WhatIsMachine):
        return "".join(f"{t}\t{d}\n" for t, d in sorted(machine.definitions.items()))
    if isinstance(machine, ElizaModel):
        lines = [f"control_states={machine.control_state_count} default_rule=yes"]
        lines += [f"{k}\t{n}" for k, n in machine.keywords]
        return "\n".join(lines) + "\n"
    raise TypeError(f"cannot export {type(machine).__name__}")


def _resolve_corpus(spec: str) -> corpora.Corpus:
    try:
        return corpora.builtin_corpus(spec)
    except UnknownCorpus:
        pass
    path = Path(spec)
    if not path.exists():
        raise UnknownCorpus(f"{spec!r} is neither T, S nor an existing corpus file")
    return corpora.load_corpus(path, allow_empty=True)


# -- commands ----------------------------------------------------------------


def cmd_reproduce(swap: bool = False) -> ComplexityReport:
    return reproduce(swap=swap)


def cmd_complexity(corpus_spec: str, measure: str, rounds: int = 2, vocabulary: str | None = None) -> ComplexityReport:
    if measure not in MEASURES:
        raise UnknownMeasure(f"unknown measure {measure!r}; choose from {', '.join(MEASURES)}")
    corpus = _resolve_corpus(corpus_spec)
    builtin = corpus_spec.upper() in corpora.BUILTIN_NAMES
    subject = f"corpus {corpus.name} ({len(corpus)} sentences)"
    caveats: list[str] = []

    if measure in ("pairs", "yesno-states"):
        table = corpora.yes_no_table(corpus)
        if measure == "pairs":
            m = Measure("pairs", pair_complexity(table), "defined cells of the yes/no QA table")
        else:
            record = q_complexity(table)
            m = Measure(
                "yesno-states", record.minimized_state_count,
                f"minimized Moore encoding, width {record.encoding_width}, {MINIMIZATION_ALGORITHM}",
            )
            caveats.append(SMALLEST_CONSTRUCTED)
        return ComplexityReport(subject, [m], caveats)

    whatis = corpora.builtin_whatis(corpus.name) if builtin else corpora.whatis_from_corpus(corpus)
    terms = what_is_complexity(whatis)
    source = "curated askable tokens" if builtin else "distinct corpus tokens"
    if measure == "whatis":
        return ComplexityReport(subject, [Measure("whatis", terms, source)])

    if vocabulary is None:
        closed = corpora.CLOSED_VOCABULARY.get(corpus.name, False) if builtin else False
    else:
        closed = vocabulary == "closed"
    facts = iterated_what_is_estimate(terms, rounds, open_vocabulary=not closed)
    return ComplexityReport(
        subject,
        [
            Measure("whatis", terms, source),
            Measure(
                "iterated", facts,
                f"{'closed' if closed else 'open'} vocabulary, {rounds} rounds, {HEURISTIC_LABEL}",
            ),
        ],
    )


def cmd_run_machine(name: str, text: str) -> ComplexityReport:
    machine = get_machine(name)
    subject = f"run {name} on {text!r}"
    if isinstance(machine, TransitionTable):
        tapes = text.split()
        if machine.tape_count == 3 and len(tapes) == 2:
            tapes.append(COUNTER_TAPE)
        out = run_table_machine(machine, tapes)
        measures = [
            Measure("accepted", out.accepted, f"halt: {out.halt}"),
            Measure("answer", out.answer or "none", "blank output tape = yes, 'no' written = no"),
            Measure("steps", out.steps, "one cell per step on every tape"),
        ]
    elif isinstance(machine, MooreMachine):
        measures = [
            Measure("answer", run_moore(machine, text), "output of the state reached"),
            Measure("steps", len(text), "one transition per symbol"),
        ]
    elif isinstance(machine, StackMachine):
        accepted = run_stack_machine(machine, text)
        measures = [
            Measure("accepted", accepted, "only b's left on the stack"),
            Measure("answer", "yes" if accepted else "no", "most A are B"),
            Measure("steps", len(text) + 1, "one move per symbol plus the end marker"),
        ]
    elif isinstance(machine, WhatIsMachine):
        measures = [
            Measure("answer", answer_what_is(machine, text.strip()), "one-token definition"),
            Measure("steps", 1, "single lookup"),
        ]
    else:
        structures = machine.structures_for(text.strip())
        measures = [
            Measure(
                "structures", structures if structures is not None else "default rule",
                "key list structures for the keyword",
            ),
            Measure("q-complexity", eliza_q_complexity(machine), "structures + control states"),
        ]
    return ComplexityReport(subject, measures)


def cmd_minimize(source: Path, target: Path) -> ComplexityReport:
    machine = parse_moore(source.read_text(encoding="utf-8"))
    minimal = minimize_moore(machine)
    if not moore_equivalent(machine, minimal):
        raise EquivalenceCheckFailed("minimized machine differs from its input; nothing written")
    target.write_text(emit_moore(minimal), encoding="utf-8")
    before, after = state_count(machine), state_count(minimal)
    return ComplexityReport(
        f"minimize {source}",
        [
            Measure("states-before", before, "input machine"),
            Measure("states-after", after, MINIMIZATION_ALGORITHM),
            Measure("delta", before - after, "states removed"),
            Measure("equivalent", True, "product-machine reachability check"),
        ],
        [SMALLEST_CONSTRUCTED],
    )


def cmd_estimate(profile_spec: str) -> ComplexityReport:
    if profile_spec in BUILTIN_PROFILES:
        profile = BUILTIN_PROFILES[profile_spec]
    else:
        profile = parse_profile(Path(profile_spec).read_text(encoding="utf-8"))
    parts = profile_breakdown(profile)
    notes = {
        "base_facts": "facts + constructions",
        "iterated_modes": "iterated question modes",
        "growth_factor": "tokens_per_fact per iterated mode per extra round",
        "point_estimate": "base x growth",
        "vocabulary_facts": "vocabulary / 10",
        "low": "power of ten below the estimate",
        "high": "power of ten above the estimate",
    }
    measures = [Measure("range", [parts["low"], parts["high"]], HEURISTIC_LABEL)]
    measures += [Measure(k, v, notes[k]) for k, v in parts.items()]
    return ComplexityReport(f"estimate {profile_spec}", measures, [HEURISTIC_LABEL])


def cmd_encode(corpus_spec: str, target: Path) -> ComplexityReport:
    corpus = _resolve_corpus(corpus_spec)
    machine = encode_as_moore(corpora.yes_no_table(corpus))
    target.write_text(emit_moore(machine), encoding="utf-8")
    return ComplexityReport(
        f"encode {corpus.name}",
        [Measure("states", state_count(machine), "question bits then sentence bits, big-endian")],
    )


# -- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="print nothing on success")

    parser = argparse.ArgumentParser(
        prog="meaning-automata", description="Meaning automata and semantic complexity measures.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reproduce", parents=[common], help="check every published number")
    p.add_argument("--swap", action="store_true", help="exchange T and S in symmetric checks")

    p = sub.add_parser("complexity", parents=[common], help="measure a corpus")
    p.add_argument("--corpus", required=True, help="T, S or a corpus file")
    p.add_argument("--measure", required=True, help=", ".join(MEASURES))
    p.add_argument("--rounds", type=int, default=2, help="rounds for the iterated measure")
    p.add_argument("--vocabulary", choices=("open", "closed"), help="override vocabulary kind")

    p = sub.add_parser("run-machine", parents=[common], help="run a named machine")
    p.add_argument("--machine", required=True, help=", ".join(MACHINES))
    p.add_argument("--input", required=True, help="input word; tapes separated by spaces")

    p = sub.add_parser("minimize", parents=[common], help="minimize a Moore machine file")
    p.add_argument("--in", dest="source", required=True, type=Path)
    p.add_argument("--out", dest="target", required=True, type=Path)

    p = sub.add_parser("estimate", parents=[common], help="heuristic profile estimate")
    p.add_argument("--profile", required=True, help="boris, mincal or a profile file")

    p = sub.add_parser("export", parents=[common], help="write a named machine in text form")
    p.add_argument("--machine", required=True, help=", ".join(MACHINES))
    p.add_argument("--out", dest="target", type=Path, help="file to write (default stdout)")

    p = sub.add_parser("encode", parents=[common], help="write the Moore encoding of a corpus's yes/no table")
    p.add_argument("--corpus", required=True, help="T, S or a corpus file")
    p.add_argument("--out", dest="target", required=True, type=Path)
    return parser


def _dispatch(args) -> ComplexityReport | str:
    if args.command == "reproduce":
        return cmd_reproduce(args.swap)
    if args.command == "complexity":
        return cmd_complexity(args.corpus, args.measure, args.rounds, args.vocabulary)
    if args.command == "run-machine":
        return cmd_run_machine(args.machine, args.input)
    if args.command == "minimize":
        return cmd_minimize(args.source, args.target)
    if args.command == "estimate":
        return cmd_estimate(args.profile)
    if args.command == "export":
        text = export_machine(get_machine(args.machine))
        if args.target is None:
            return text
        args.target.write_text(text, encoding="utf-8")
        return ComplexityReport(f"export {args.machine}", [Measure("written", str(args.target), "text format")])
    if args.command == "encode":
        return cmd_encode(args.corpus, args.target)
    raise AssertionError(args.command)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    quiet = getattr(args, "quiet", False)

    def show(report: ComplexityReport):
        if not quiet:
            sys.stdout.write(report.to_json() if as_json else report.to_text())

    try:
        result = _dispatch(args)
    except EquivalenceCheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MeaningAutomataError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        if not quiet:
            sys.stdout.write(result)
        return 0
    show(result)
    if result.failed:
        print(f"error: {CheckFailed(result.failed)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
