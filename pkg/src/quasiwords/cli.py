"""Batch command line front end.

Exit codes: 0 success, 1 domain error (invalid table, failed check, ...),
2 usage error or malformed input (bad term syntax, malformed JSON).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from . import finiteqg, homrep, linss, numeval, revaut
from .finiteqg import Homotopy, QuasigroupError, Report
from .revaut import AutomatonError
from .term import S3Element, TermSyntaxError, parse, to_sexpr, to_text


class UsageError(Exception):
    pass


class DomainError(Exception):
    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif text:
        print(text)


def _term(text: str):
    try:
        return parse(text)
    except TermSyntaxError as exc:
        raise UsageError(f"{exc}\n  {exc.text}\n  {' ' * exc.pos}^") from exc


def _load(path: str):
    try:
        raw = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _field(data, key: str, where: str):
    if not isinstance(data, dict) or key not in data:
        raise DomainError(f"{where}: missing field {key!r}")
    return data[key]


def _quasigroup(data, where: str = "input"):
    return finiteqg.validate(_field(data, "mul", where), data.get("elements"))


def _report_result(args, report: Report, extra: dict | None = None) -> None:
    payload = report.to_json() | (extra or {})
    if not report.ok:
        raise DomainError(str(report), payload)
    _emit(args, str(report), payload)


# -- term verbs ---------------------------------------------------------------

def cmd_parse(args) -> None:
    t = _term(args.term)
    _emit(args, to_text(t), {"text": to_text(t), "sexpr": to_sexpr(t)})


def cmd_rep(args) -> None:
    rep = homrep.represent(_term(args.term))
    _emit(args, str(rep) or "0", rep.to_json())


def cmd_eq(args) -> None:
    same = homrep.equal(_term(args.left), _term(args.right))
    _emit(args, "equal" if same else "not equal", {"equal": same})


def cmd_eliminate(args) -> None:
    gone = sorted(homrep.eliminated_arguments(_term(args.term)))
    _emit(args, "\n".join(gone), {"eliminated": gone})


def cmd_patterns(args) -> None:
    hits = homrep.find_elimination_patterns(_term(args.term))
    _emit(args, "\n".join(h.describe() for h in hits), [
        {"generator": h.generator, "leaves": list(h.leaves), "meet": list(h.meet),
         "paths": [str(p) for p in h.paths], "pattern": h.pattern, "index": h.index}
        for h in hits])


def cmd_enumerate(args) -> None:
    gens = [g for g in args.generators.split(",") if g]
    try:
        classes = homrep.enumerate_words(gens, args.max_leaves, args.ops)
    except (ValueError, homrep.EnumerationLimitError) as exc:
        raise DomainError(str(exc)) from exc
    _emit(args, "\n".join(to_text(t) for t, _ in classes),
          [{"word": to_text(t), "rep": rep.to_json()} for t, rep in classes])


def cmd_plot16(args) -> None:
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    rows, csv_text, svg = numeval.shortest_words_plot(args.count)
    if args.out:
        Path(args.out + ".csv").write_text(csv_text)
        Path(args.out + ".svg").write_text(svg)
    if args.json:
        _emit(args, "", [{"word": w, "x": float(x), "y": float(y)} for w, (x, y) in rows])
    elif not args.out:
        sys.stdout.write(csv_text)


# -- finite quasigroups -----------------------------------------------------------

def cmd_check_quasigroup(args) -> None:
    q = _quasigroup(_load(args.file))
    ids = finiteqg.check_identities(q)
    semi = finiteqg.is_semisymmetric(q)
    if args.json:
        _emit(args, "", {"order": q.order, "identities": ids, "semisymmetric": semi})
    else:
        print(f"quasigroup of order {q.order}")
        for name, ok in ids.items():
            print(f"{name}: {'holds' if ok else 'fails'}")
        print(f"semisymmetric: {'yes' if semi else 'no'}")


def cmd_conjugate(args) -> None:
    try:
        g = S3Element.from_word(args.g)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    q = _quasigroup(_load(args.file))
    print(json.dumps(finiteqg.conjugate(q, g).to_json()))


def cmd_semisymmetrize(args) -> None:
    q = _quasigroup(_load(args.file))
    print(json.dumps(finiteqg.semisymmetrize(q).to_json()))


def cmd_check_homotopy(args) -> None:
    data = _load(args.file)
    h = Homotopy(_quasigroup(_field(data, "source", "input"), "source"),
                 _quasigroup(_field(data, "target", "input"), "target"),
                 *(_field(data, f, "input") for f in ("f1", "f2", "f3")))
    report = Report()
    report.add("homotopy", finiteqg.is_homotopy(h))
    result = {"homomorphism": finiteqg.is_homomorphism(h), "isotopy": finiteqg.is_isotopy(h)}
    if args.json:
        _report_result(args, report, result)
    else:
        _report_result(args, report)
        for name, ok in result.items():
            print(f"{name}: {'yes' if ok else 'no'}")


# -- automata -----------------------------------------------------------------

def _automaton(data):
    for key in ("S1", "S2", "S3", "mul", "rdiv", "ldiv"):
        _field(data, key, "automaton")
    return revaut.from_json(data)


def cmd_check_automaton(args) -> None:
    a = _automaton(_load(args.file))
    p = revaut.purity_analysis(a)
    kind = "pure" if p.pure else "degenerate"
    _emit(args, f"valid automaton with state spaces of sizes {a.sizes}; {kind}",
          {"valid": True, "sizes": list(a.sizes), "pure": p.pure})


def cmd_automaton_to_quasigroup(args) -> None:
    a = _automaton(_load(args.file))
    n1, n2, _ = a.sizes
    if not (0 <= args.s1 < max(n1, 1) and 0 <= args.s2 < max(n2, 1)):
        raise UsageError("--s1/--s2 out of range")
    p = revaut.purity_analysis(a, args.s1, args.s2)
    if not p.pure:
        raise DomainError("degenerate automaton: no quasigroup can be extracted")
    l1, l2, l3 = revaut.carrier_bijections(p)
    q = revaut.extract_quasigroup(a, l1, l2, l3, a.S3)
    print(json.dumps(q.to_json()))


# -- linear semisymmetric algebras -------------------------------------------

def _linss(data):
    for key in ("modulus", "rho", "idempotents"):
        _field(data, key, "algebra")
    alg = linss.LinSSAlgebra.from_json(data)
    if alg.size > linss.MAX_ELEMENTS:
        raise DomainError(f"n^k = {alg.size} exceeds the limit of {linss.MAX_ELEMENTS}")
    return alg


def cmd_check_linss(args) -> None:
    alg = _linss(_load(args.file))
    failures = linss.condition_failures(alg)
    if failures:
        raise DomainError("\n".join(f"FAIL {f}" for f in failures),
                          {"ok": False, "conditions": failures})
    _report_result(args, linss.verify_semisymmetrized_axioms(alg, seed=args.seed))


def cmd_linss_automaton(args) -> None:
    alg = linss.check_conditions(_linss(_load(args.file)))
    print(json.dumps(linss.to_automaton(linss.extract_thetas(alg)).to_json()))


def cmd_linss_identify(args) -> None:
    alg = linss.check_conditions(_linss(_load(args.file)))
    ident = linss.identify_semisymmetrization(alg)
    extra = {"quasigroup": ident.quasigroup.to_json(),
             "l1": ident.l1.tolist(), "l2": ident.l2.tolist(), "l3": ident.l3.tolist()}
    _report_result(args, ident.report, extra)


# -- driver ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quasiwords",
        description="Words in central quasigroups, finite quasigroups and their automata.",
        epilog="Quote terms for the shell: single quotes keep \\ literal, e.g. 'a\\(a*b)'.",
    )
    sub = ap.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name: str, fn: Callable, help: str, *positional: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        for arg in positional:
            p.add_argument(arg)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(fn=fn)
        return p

    verb("parse", cmd_parse, "parse and pretty-print a term", "term")
    verb("rep", cmd_rep, "normalized representation of a term", "term")
    verb("eq", cmd_eq, "decide equality of two terms", "left", "right")
    verb("eliminate", cmd_eliminate, "generators that occur but cancel", "term")
    verb("patterns", cmd_patterns, "locate cancelling leaf pairs", "term")
    p = verb("enumerate", cmd_enumerate, "one representative per class")
    p.add_argument("--generators", default="a", help="comma-separated names (default: a)")
    p.add_argument("--max-leaves", type=int, default=3)
    p.add_argument("--ops", choices=("basic", "all"), default="basic")
    p = verb("plot16", cmd_plot16, "shortest one-generator words in the matrix model")
    p.add_argument("--count", type=int, default=16)
    p.add_argument("--out", help="write PREFIX.csv and PREFIX.svg")
    verb("check-quasigroup", cmd_check_quasigroup, "validate a multiplication table", "file")
    p = verb("conjugate", cmd_conjugate, "conjugate quasigroup for an S3 element", "file")
    p.add_argument("--g", required=True, help="word in s, t (e.g. st); 1 for the identity")
    verb("semisymmetrize", cmd_semisymmetrize, "semisymmetrization of a quasigroup", "file")
    verb("check-homotopy", cmd_check_homotopy, "check a homotopy between quasigroups", "file")
    verb("check-automaton", cmd_check_automaton, "validate a reversible automaton", "file")
    p = verb("automaton-to-quasigroup", cmd_automaton_to_quasigroup,
             "extract a quasigroup from a pure automaton", "file")
    p.add_argument("--s1", type=int, default=0, help="index of the base state in S1")
    p.add_argument("--s2", type=int, default=0, help="index of the base state in S2")
    p = verb("check-linss", cmd_check_linss, "check a linear semisymmetric algebra", "file")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    verb("linss-automaton", cmd_linss_automaton, "automaton of a linear algebra", "file")
    verb("linss-identify", cmd_linss_identify, "identify as a semisymmetrization", "file")
    return ap


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        if getattr(args, "json", False) and exc.payload is not None:
            print(json.dumps(exc.payload, sort_keys=True))
        else:
            print(exc, file=sys.stderr)
        return 1
    except (QuasigroupError, AutomatonError, linss.LinSSError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
