"""Command-line surface: enumeration, primitivity checking, palindromic
factorization, Farey queries, cutting diagrams and the oracle cross-check.

Every subcommand can emit a machine-readable JSON envelope with the fields
command, input, result and version; the default format comes from the
PRIMWORDS_FORMAT environment variable (text when unset).  Exit codes: 0 on
success, 1 on a domain error such as a malformed rational, 2 on usage
errors.
"""

import argparse
import json
import os
import sys

from . import __version__
from .farey import (
    INFINITY,
    ExtRational,
    approximants,
    continued_fraction,
    farey_path,
    is_neighbor,
    level,
)
from .words import Word
from .enumerate import (
    MixedSignsError,
    cf_word,
    e_word,
    enumerate_primitives,
    is_primitive,
    palindromic_parts,
    primitive_exponents,
    v_sequence,
    w_word,
)
from .cutting import CuttingSpec, cutting_word, emit_svg, strand_diagram
from .oracle import cross_check, is_generating_pair

MAX_ENUM_LEVEL = 20

_START_NAMES = {
    "lowest-a": "lowest_a",
    "bottom": "rightmost_bottom",
    "middle": "middle_strand",
}


def _parse_rational(text: str) -> ExtRational:
    return ExtRational.parse(text)


def _parse_word(text: str) -> Word:
    for ch in text:
        if ch not in "ABab":
            raise ValueError(f"invalid letter {ch!r} in word {text!r}")
    return Word(text)


def _cf_digits(x: ExtRational):
    return None if x.is_infinite else list(continued_fraction(x).digits)


def _cmd_word(args) -> tuple:
    x = _parse_rational(args.rational)
    digits = _cf_digits(x)
    cf_text = "[" + ",".join(map(str, digits)) + "]" if digits is not None else None
    result = {"rational": str(x), "level": level(x)}
    if args.scheme in (None, "w"):
        result["w"] = str(w_word(x))
    if args.scheme in (None, "e"):
        result["e"] = str(e_word(x))
    if args.scheme in (None, "cf"):
        result["cf"] = digits
        if args.scheme == "cf":
            result["w"] = str(cf_word(x))
    if args.scheme == "v":
        result["v"] = [str(v) for v in v_sequence(x)]
    if args.scheme is None and not x.is_infinite and x != ExtRational(0, 1):
        exps = primitive_exponents(w_word(x))
        result["exponents"] = {
            "slope_class": exps.slope_class,
            "values": list(exps.exponents),
            "separator_sign": exps.separator_sign,
        }
    if args.scheme == "v":
        text = "V=" + ",".join(result["v"])
    elif args.scheme == "w":
        text = f"W={result['w']}"
    elif args.scheme == "e":
        text = f"E={result['e']}"
    elif args.scheme == "cf":
        text = f"cf={cf_text} W={result['w']}"
    else:
        parts = [f"W={result['w']}", f"E={result['e']}"]
        if cf_text is not None:
            parts.append(f"cf={cf_text}")
        parts.append(f"level={result['level']}")
        text = " ".join(parts)
    return result, text


def _cmd_check(args) -> tuple:
    w = _parse_word(args.word)
    verdict = is_primitive(w)
    result = {
        "word": str(w),
        "primitive": verdict.primitive,
        "rational": str(verdict.x) if verdict.x is not None else None,
        "rotation": verdict.rotation,
        "symmetry": verdict.symmetry,
        "reason": verdict.reason,
    }
    text = f"primitive p/q={verdict.x}" if verdict.primitive else "not primitive"
    return result, text


def _cmd_palindrome(args) -> tuple:
    x = _parse_rational(args.rational)
    parts = palindromic_parts(x)
    result = {
        "rational": str(x),
        "kind": parts.kind,
        "first": str(parts.first),
        "second": str(parts.second) if len(parts.second) else None,
    }
    if parts.kind == "single_palindrome":
        text = f"single P={parts.first}"
    else:
        text = f"pair P={parts.first} Q={parts.second}"
    return result, text


def _cmd_farey(args) -> tuple:
    x = _parse_rational(args.rational)
    path = farey_path(x)
    digits = _cf_digits(x)
    approx = [str(a) for a in approximants(continued_fraction(x))] if digits else []
    result = {
        "rational": str(x),
        "level": path.level,
        "sequence": [str(v) for v in path.vertices],
        "left_neighbor": str(path.left_neighbor) if path.left_neighbor else None,
        "right_neighbor": str(path.right_neighbor) if path.right_neighbor else None,
        "cf": digits,
        "approximants": approx,
    }
    text = (
        f"sequence={','.join(result['sequence']) or '-'}"
        f" level={path.level}"
        f" neighbors={result['left_neighbor']},{result['right_neighbor']}"
        f" approximants={','.join(approx) or '-'}"
    )
    return result, text


def _cmd_cutseq(args) -> tuple:
    if (args.rational is None) == (args.word is None):
        raise ValueError("give exactly one of a slope p/q or --word")
    if args.word is not None:
        w = _parse_word(args.word)
        source = args.word
    else:
        x = _parse_rational(args.rational)
        start = _START_NAMES.get(args.start)
        if start is None:
            try:
                start = int(args.start)
            except ValueError:
                raise ValueError(f"invalid start {args.start!r}") from None
        w = cutting_word(CuttingSpec(x, start))
        source = args.rational
    core, _ = w.cyclic_reduce()
    diagram = strand_diagram(core)
    result = {"input": source, "cutting": str(w)}
    result.update(diagram.to_json_dict())
    text = (
        f"cutting={w} vertical={diagram.counts.vertical}"
        f" horizontal={diagram.counts.horizontal} corner={diagram.counts.corner}"
        f" simple={'yes' if diagram.simple else 'no'}"
    )
    if args.svg:
        svg = emit_svg(diagram)
        with open(args.svg, "w", encoding="utf-8") as f:
            f.write(svg)
        result["svg"] = args.svg
        text += f" svg={args.svg}"
    return result, text


def _cmd_associates(args) -> tuple:
    x = _parse_rational(args.x)
    y = _parse_rational(args.y)
    neighbor = is_neighbor(x, y)
    generates = is_generating_pair(w_word(x), w_word(y))
    result = {
        "x": str(x),
        "y": str(y),
        "neighbors": neighbor,
        "generating_pair": generates,
    }
    text = f"neighbors={'yes' if neighbor else 'no'} generating={'yes' if generates else 'no'}"
    return result, text


def _cmd_enumerate(args) -> tuple:
    if args.max_level > MAX_ENUM_LEVEL:
        raise ValueError(f"--max-level is capped at {MAX_ENUM_LEVEL}")
    rows = []
    for x, w, e in enumerate_primitives(args.max_level):
        rows.append({"rational": str(x), "w": str(w), "e": str(e), "level": level(x)})
    result = {"max_level": args.max_level, "count": len(rows), "items": rows}
    text = "\n".join(f"{r['rational']}\t{r['w']}\t{r['e']}\t{r['level']}" for r in rows)
    return result, text


def _cmd_cross_check(args) -> tuple:
    report = cross_check(args.max_len)
    result = report.to_json_dict()
    text = (
        f"checked={report.checked} primitives={report.primitives}"
        f" disagreements={len(report.disagreements)}"
        f" pairs={report.pairs_checked}"
        f" pair_disagreements={len(report.pair_disagreements)}"
    )
    return result, text


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primwords",
        description="Primitive words, palindromes and cutting sequences in the rank-2 free group.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("text", "json", "tsv"),
            default=os.environ.get("PRIMWORDS_FORMAT", "text"),
        )

    p = sub.add_parser("word", help="enumeration-scheme words for a slope")
    p.add_argument("rational")
    p.add_argument("--scheme", choices=("w", "e", "cf", "v"))
    add_format(p)
    p.set_defaults(handler=_cmd_word)

    p = sub.add_parser("check", help="primitivity verdict for a word")
    p.add_argument("word")
    add_format(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("palindrome", help="palindromic factorization of a slope word")
    p.add_argument("rational")
    add_format(p)
    p.set_defaults(handler=_cmd_palindrome)

    p = sub.add_parser("farey", help="Farey sequence, level, neighbors, approximants")
    p.add_argument("rational")
    add_format(p)
    p.set_defaults(handler=_cmd_farey)

    p = sub.add_parser("cutseq", help="cutting word and strand diagram")
    p.add_argument("rational", nargs="?")
    p.add_argument("--word")
    p.add_argument("--start", default="lowest-a", help="lowest-a|bottom|middle|<offset>")
    p.add_argument("--svg", metavar="FILE")
    add_format(p)
    p.set_defaults(handler=_cmd_cutseq)

    p = sub.add_parser("associates", help="neighbor / generating-pair verdict")
    p.add_argument("x")
    p.add_argument("y")
    add_format(p)
    p.set_defaults(handler=_cmd_associates)

    p = sub.add_parser("enumerate", help="stream all slopes up to a Farey level")
    p.add_argument("--max-level", type=int, default=8)
    add_format(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("cross-check", help="oracle agreement report")
    p.add_argument("--max-len", type=int, default=8)
    add_format(p)
    p.set_defaults(handler=_cmd_cross_check)

    return parser


def run(argv=None) -> int:
    """Execute one command; returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    primary = next(
        (getattr(args, name) for name in ("rational", "word", "x") if getattr(args, name, None)),
        "",
    )
    try:
        result, text = args.handler(args)
    except (ValueError, MixedSignsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        envelope = {
            "command": args.command,
            "input": primary,
            "result": result,
            "version": __version__,
        }
        print(json.dumps(envelope, sort_keys=True, separators=(",", ":")))
    else:
        print(text)
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
