"""Command-line front end.

    qsem run SCRIPT [--format text|json]
    qsem hardy [--format text|json]

Exit status: 0 success, 2 unreadable file, 3 parse or check error,
4 evaluation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from qsem import dsl, hardy

EXIT_OK = 0
EXIT_NO_FILE = 2
EXIT_BAD_SCRIPT = 3
EXIT_EVAL = 4


def dumps(doc: dict[str, Any]) -> str:
    """Canonical JSON text: insertion-ordered keys, two-space indent, ASCII, trailing newline."""
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def queries_document(results: Sequence[dsl.QueryResult]) -> dict[str, Any]:
    return {
        "queries": [
            {
                "query": r.text,
                "semantics": r.query.semantics.value,
                "result-kind": r.result.kind,
                "value": r.result.value_text(),
            }
            for r in results
        ]
    }


def render_queries(results: Sequence[dsl.QueryResult]) -> str:
    return "".join(f"{r.text} => {r.result}\n" for r in results)


def hardy_document() -> dict[str, Any]:
    return {"hardy_report": hardy.report_to_dict(hardy.paradox_report(hardy.build_scenario()))}


def _emit(text: str) -> None:
    # bytes, so the output is identical on every platform
    sys.stdout.flush()
    sys.stdout.buffer.write(text.encode("utf-8"))
    sys.stdout.buffer.flush()


def cmd_run(path: str, fmt: str) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            source = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"qsem: cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_NO_FILE
    try:
        checked = dsl.check(dsl.parse(source))
    except (dsl.DslSyntaxError, dsl.DslCheckError) as exc:
        print(f"{path}:{exc}", file=sys.stderr)
        return EXIT_BAD_SCRIPT
    try:
        results = dsl.run(checked)
    except dsl.DslEvalError as exc:
        print(f"{path}:{exc}", file=sys.stderr)
        return EXIT_EVAL
    _emit(dumps(queries_document(results)) if fmt == "json" else render_queries(results))
    return EXIT_OK


def cmd_hardy(fmt: str) -> int:
    if fmt == "json":
        _emit(dumps(hardy_document()))
    else:
        _emit(hardy.render_text(hardy.paradox_report(hardy.build_scenario())))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsem", description="Evaluate quantum propositions under non-classical semantics."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a proposition script")
    run.add_argument("file")
    run.add_argument("--format", choices=("text", "json"), default="text")

    h = sub.add_parser("hardy", help="print the Hardy paradox report")
    h.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return cmd_run(args.file, args.format)
    return cmd_hardy(args.format)


if __name__ == "__main__":
    sys.exit(main())
