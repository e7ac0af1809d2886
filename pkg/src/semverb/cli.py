"""Command-line front end.

Reads RDF (Turtle), OWL (Manchester syntax) or SPARQL SELECT input and
writes English sentences, one per line; resource descriptions in rdf mode
are separated by blank lines. Exit status 0 on success, 1 on malformed
input, 2 on constructs outside the supported subsets.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .deptree import format_tree
from .errors import ParseError, UnsupportedError, VerbalizerError
from .lexicalizer import FrequencyLexicon, Lexicalizer, LexicalizerConfig
from .pipeline import verbalize_owl_text, verbalize_rdf_text, verbalize_sparql_text

_EXTENSIONS = {".ttl": "rdf", ".omn": "owl", ".rq": "sparql"}

EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_UNSUPPORTED = 2


@dataclass
class RunConfig:
    input_path: Optional[str] = None      # None or "-" reads stdin
    format: str = "auto"                  # rdf | owl | sparql | auto
    lexicon_path: Optional[str] = None    # None uses the bundled lexicon
    theta: float = 1.0
    fanout_limit: int = 5
    emit_trees: bool = False
    output_path: Optional[str] = None     # None writes stdout


def default_lexicon() -> FrequencyLexicon:
    text = resources.files("semverb").joinpath("data/lexicon.tsv").read_text(encoding="utf-8")
    return FrequencyLexicon.from_text(text, source="semverb/data/lexicon.tsv")


def _resolve_format(config: RunConfig, name: str) -> str:
    if config.format != "auto":
        return config.format
    suffix = Path(name).suffix.lower()
    if suffix in _EXTENSIONS:
        return _EXTENSIONS[suffix]
    raise ValueError(
        f"cannot infer format from {name!r}; pass --format rdf|owl|sparql"
    )


def run(config: RunConfig) -> tuple[int, str, str]:
    """Execute one verbalization run; returns (exit status, output, diagnostics)."""
    name = config.input_path if config.input_path and config.input_path != "-" else "<stdin>"
    try:
        if name == "<stdin>":
            text = sys.stdin.read()
        else:
            text = Path(name).read_text(encoding="utf-8")
    except OSError as exc:
        return EXIT_PARSE_ERROR, "", f"{name}: {exc}\n"

    try:
        fmt = _resolve_format(config, name)
    except ValueError as exc:
        return EXIT_PARSE_ERROR, "", f"{name}: {exc}\n"

    try:
        if config.lexicon_path is None:
            lexicon = default_lexicon()
        else:
            lexicon = FrequencyLexicon.load(config.lexicon_path)
    except (OSError, ValueError) as exc:
        return EXIT_PARSE_ERROR, "", f"{exc}\n"

    lex = Lexicalizer(lexicon, LexicalizerConfig(theta=config.theta))

    try:
        if fmt == "rdf":
            blocks = verbalize_rdf_text(text, lex, config.fanout_limit)
        elif fmt == "owl":
            blocks = [verbalize_owl_text(text, lex, config.fanout_limit)]
        elif fmt == "sparql":
            blocks = [verbalize_sparql_text(text, lex)]
        else:
            return EXIT_PARSE_ERROR, "", f"unknown format {fmt!r}\n"
    except ParseError as exc:
        return (EXIT_PARSE_ERROR, "",
                f"{name}:{exc.line}:{exc.column}: expected {exc.expected}, found {exc.found}\n")
    except UnsupportedError as exc:
        location = f":{exc.line}:{exc.column}" if exc.line is not None else ""
        return EXIT_UNSUPPORTED, "", f"{name}{location}: unsupported: {exc.message}\n"
    except VerbalizerError as exc:
        return EXIT_PARSE_ERROR, "", f"{name}: {exc}\n"

    rendered_blocks = []
    for block in blocks:
        if config.emit_trees:
            rendered_blocks.append("\n\n".join(format_tree(tree) for tree, _ in block))
        else:
            rendered_blocks.append("\n".join(sentence for _, sentence in block))
    body = "\n\n".join(b for b in rendered_blocks if b)
    output = body + "\n" if body else ""
    return EXIT_OK, output, ""


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semverb",
        description="Verbalize RDF triples, OWL class expressions/axioms or "
                    "SPARQL SELECT queries as English sentences.",
    )
    parser.add_argument("input", nargs="?", default=None,
                        help="input file (.ttl, .omn, .rq); '-' or absent reads stdin")
    parser.add_argument("--format", choices=["rdf", "owl", "sparql", "auto"], default="auto",
                        help="input language (default: by file extension)")
    parser.add_argument("--lexicon", default=None, metavar="PATH",
                        help="frequency lexicon TSV (default: bundled lexicon)")
    parser.add_argument("--theta", type=float, default=1.0,
                        help="verb/noun ratio threshold for property classification")
    parser.add_argument("--fanout-limit", type=int, default=5, metavar="N",
                        help="max objects per subject+predicate before 'and N others'")
    parser.add_argument("--emit-trees", action="store_true",
                        help="print dependency-tree debug dumps instead of sentences")
    parser.add_argument("--output", default=None, metavar="PATH",
                        help="write output here instead of stdout")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_arg_parser().parse_args(argv)
    if args.theta <= 0:
        print("semverb: --theta must be positive", file=sys.stderr)
        return EXIT_PARSE_ERROR
    if args.fanout_limit < 1:
        print("semverb: --fanout-limit must be at least 1", file=sys.stderr)
        return EXIT_PARSE_ERROR
    config = RunConfig(
        input_path=args.input,
        format=args.format,
        lexicon_path=args.lexicon,
        theta=args.theta,
        fanout_limit=args.fanout_limit,
        emit_trees=args.emit_trees,
        output_path=args.output,
    )
    status, output, diagnostics = run(config)
    if diagnostics:
        sys.stderr.write(diagnostics)
    if config.output_path:
        Path(config.output_path).write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
