"""Command-line interface.

Subcommands: ``concepts`` (enumerate a concept family), ``define``
(definability verdict for a granule), ``approx`` (tightest definable
bounds), ``convert`` (complement / negation apposition), ``validate``
(parse and check a context file).

Exit codes: 0 success or definable, 1 indefinable, 2 input or usage
errors, 3 size-guard refusal, 4 inapplicable.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from granudesc import approximation as approx_ops
from granudesc import definability as defin
from granudesc.context import (
    CompoundContext,
    Flavor,
    FormalContext,
    appose_negation,
    complement_context,
    make_cn_context,
    parse_compound,
    parse_context,
    serialize_compound,
    serialize_context,
)
from granudesc.errors import (
    ContextFormatError,
    FlavorMismatch,
    GranuleDescError,
    Inapplicable,
    SizeGuardExceeded,
)
from granudesc.formula import Conj, ConjDisj, Description, Disj, render
from granudesc.lattice import (
    concept_json_obj,
    concepts_to_text,
    enumerate_cn,
    enumerate_formal,
    enumerate_object_oriented,
    enumerate_three_way,
    lattice_to_dot,
)

EXIT_OK = 0
EXIT_INDEFINABLE = 1
EXIT_INPUT = 2
EXIT_GUARD = 3
EXIT_INAPPLICABLE = 4


class _CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_any(path: str) -> FormalContext | CompoundContext:
    text = _read_text(path)
    stripped = text.lstrip()
    if stripped.startswith("{") and '"flavor"' in text:
        return parse_compound(text)
    return parse_context(text)


def _as_formal(loaded: object, what: str) -> FormalContext:
    if isinstance(loaded, FormalContext):
        return loaded
    raise _CliError(f"{what} needs a plain formal context")


def _resolve_compound(
    loaded: FormalContext | CompoundContext,
    compound_path: str | None,
    flavor: Flavor,
) -> CompoundContext:
    if isinstance(loaded, CompoundContext):
        if loaded.flavor is not flavor:
            raise _CliError(
                f"expected a {flavor.value} compound, got {loaded.flavor.value}"
            )
        if compound_path:
            raise _CliError("--compound conflicts with a compound input file")
        return loaded
    if flavor is Flavor.THREE_WAY:
        if compound_path:
            raise _CliError("three-way mode derives its compound; drop --compound")
        return appose_negation(loaded)
    if not compound_path:
        raise _CliError(
            "this mode needs a second attribute block: pass a compound JSON "
            "input or --compound PATH"
        )
    second = _load_any(compound_path)
    return make_cn_context(loaded, _as_formal(second, "--compound"))


def _parse_granule(spec: str, objects: tuple[str, ...]) -> frozenset[int]:
    chosen = set()
    for token in (t.strip() for t in spec.split(",")):
        if not token:
            continue
        if token in objects:
            idx = objects.index(token)
            if token.isdigit():
                as_index = int(token) - 1
                if 0 <= as_index < len(objects) and as_index != idx:
                    print(
                        f"warning: {token!r} matches both an object name and a "
                        "1-based index; using the name",
                        file=sys.stderr,
                    )
            chosen.add(idx)
        elif token.isdigit() and 1 <= int(token) <= len(objects):
            chosen.add(int(token) - 1)
        else:
            raise _CliError(f"unknown object {token!r}")
    return frozenset(chosen)


def _pick_format(requested: str | None, choices: tuple[str, ...]) -> str:
    if requested:
        if requested not in choices:
            raise _CliError(
                f"format must be one of {', '.join(choices)}; got {requested!r}"
            )
        return requested
    return "text" if sys.stdout.isatty() else "json"


def _names(objects: tuple[str, ...], granule: frozenset[int]) -> str:
    if not granule:
        return "∅"
    return "{" + ",".join(objects[i] for i in sorted(granule)) + "}"


def _one_based(granule: frozenset[int]) -> list[int]:
    return [i + 1 for i in sorted(granule)]


def _description_json(d: Description | None) -> dict | None:
    if d is None:
        return None
    conj: list[str] = []
    disj: list[str] = []
    negated: list[str] = []
    if isinstance(d, Conj):
        for a in sorted(d.atoms, key=lambda a: (a.negated, a.index)):
            (negated if a.negated else conj).append(a.name)
    elif isinstance(d, Disj):
        disj = [a.name for a in sorted(d.atoms, key=lambda a: a.index)]
    elif isinstance(d, ConjDisj):
        conj = [a.name for a in sorted(d.conj_atoms, key=lambda a: a.index)]
        disj = [a.name for a in sorted(d.disj_atoms, key=lambda a: a.index)]
    return {"conj": conj, "disj": disj, "negated": negated}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_concepts(args: argparse.Namespace) -> int:
    loaded = _load_any(args.input)
    variant = args.variant.replace("-", "_")
    fmt = _pick_format(args.format, ("text", "json", "dot"))
    if variant == "formal":
        lattice = enumerate_formal(_as_formal(loaded, "variant formal"), args.force)
        concepts = lattice.concepts
    elif variant == "object_oriented":
        lattice = enumerate_object_oriented(
            _as_formal(loaded, "variant object-oriented"), args.force
        )
        concepts = lattice.concepts
    elif variant == "three_way":
        cctx = _resolve_compound(loaded, None, Flavor.THREE_WAY)
        lattice = enumerate_three_way(cctx, args.force)
        concepts = lattice.concepts
    elif variant == "cn":
        cctx = _resolve_compound(loaded, args.compound, Flavor.COMMON_NECESSARY)
        lattice = None
        concepts = tuple(enumerate_cn(cctx, args.force))
    else:
        raise _CliError(f"unknown variant {args.variant!r}")
    if fmt == "dot":
        if lattice is None:
            raise _CliError("the cn family carries no lattice; use text or json")
        sys.stdout.write(lattice_to_dot(lattice, args.ascii))
    elif fmt == "json":
        payload = [concept_json_obj(c) for c in concepts]
        sys.stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(concepts_to_text(concepts, args.ascii))
    return EXIT_OK


_MODES = ("wedge", "three_way", "vee", "cn")


def _mode_of(raw: str) -> str:
    mode = raw.replace("-", "_")
    if mode not in _MODES:
        raise _CliError(f"mode must be one of wedge, three-way, vee, cn; got {raw!r}")
    return mode


def _context_for_mode(
    loaded: FormalContext | CompoundContext, mode: str, compound_path: str | None
):
    if mode in ("wedge", "vee"):
        if compound_path:
            raise _CliError(f"mode {mode} takes no --compound")
        return _as_formal(loaded, f"mode {mode}")
    if mode == "three_way":
        return _resolve_compound(loaded, compound_path, Flavor.THREE_WAY)
    return _resolve_compound(loaded, compound_path, Flavor.COMMON_NECESSARY)


def _verdict_payload(
    verdict: defin.Verdict, ascii_ops: bool
) -> tuple[dict, list[str]]:
    payload = {
        "status": verdict.status.value,
        "description": _description_json(verdict.description),
        "reason": verdict.reason.value if verdict.reason else None,
        "witness": _one_based(verdict.witness) if verdict.witness is not None else None,
    }
    if verdict.status is defin.Status.DEFINABLE:
        lines = [f"definable: {render(verdict.description, ascii_ops)}"]
    elif verdict.status is defin.Status.INDEFINABLE:
        lines = ["indefinable"]
    else:
        lines = [f"inapplicable: {verdict.reason.value}"]
    return payload, lines


def _cmd_define(args: argparse.Namespace) -> int:
    loaded = _load_any(args.input)
    mode = _mode_of(args.mode)
    ctx = _context_for_mode(loaded, mode, args.compound)
    granule = _parse_granule(args.granule, ctx.objects)
    fmt = _pick_format(args.format, ("text", "json"))
    try:
        if mode == "wedge":
            verdict = defin.is_wedge_definable(ctx, granule)
        elif mode == "three_way":
            verdict = defin.is_three_way_definable(ctx, granule)
        elif mode == "vee":
            verdict = defin.is_vee_definable(ctx, granule)
        else:
            verdict = defin.is_cn_definable(ctx, granule)
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    payload, lines = _verdict_payload(verdict, args.ascii)
    if verdict.witness is not None:
        lines[0] += f" (closure {_names(ctx.objects, verdict.witness)})"
    minimal: list[Description] = []
    if args.minimal and verdict.status is defin.Status.DEFINABLE:
        minimal = defin.minimal_descriptions(ctx, granule, mode)
        payload["minimal"] = [render(d, args.ascii) for d in minimal]
        lines.extend(f"minimal: {render(d, args.ascii)}" for d in minimal)
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    if verdict.status is defin.Status.DEFINABLE:
        return EXIT_OK
    if verdict.status is defin.Status.INDEFINABLE:
        return EXIT_INDEFINABLE
    return EXIT_INAPPLICABLE


def _cmd_approx(args: argparse.Namespace) -> int:
    loaded = _load_any(args.input)
    mode = _mode_of(args.mode)
    direction = args.direction
    ctx = _context_for_mode(loaded, mode, args.compound)
    granule = _parse_granule(args.granule, ctx.objects)
    fmt = _pick_format(args.format, ("text", "json"))
    table = {
        ("upper", "wedge"): approx_ops.upper_wedge,
        ("lower", "wedge"): approx_ops.lower_wedge,
        ("upper", "three_way"): approx_ops.upper_three_way,
        ("lower", "three_way"): approx_ops.lower_three_way,
        ("upper", "vee"): approx_ops.upper_vee,
        ("lower", "vee"): approx_ops.lower_vee,
        ("upper", "cn"): approx_ops.upper_cn,
    }
    op = table.get((direction, mode))
    if op is None:
        raise _CliError(f"no {direction} approximation is defined for mode {args.mode}")
    try:
        result = op(ctx, granule)
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    payload = {
        "direction": result.direction.value,
        "mode": result.mode.value,
        "exact": result.exact,
        "results": [
            {
                "granule": _one_based(g),
                "description": render(d, args.ascii) if d is not None else None,
            }
            for g, d in result.granules
        ],
    }
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        lines = [f"exact: {'true' if result.exact else 'false'}"]
        for g, d in result.granules:
            text = render(d, args.ascii) if d is not None else "(no description)"
            lines.append(f"{_names(ctx.objects, g)}: {text}")
        if not result.granules:
            lines.append("(no granules)")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_convert(args: argparse.Namespace) -> int:
    loaded = _load_any(args.input)
    ctx = _as_formal(loaded, f"convert --op {args.op}")
    fmt = args.format or "cxt"
    if args.op == "complement":
        out_ctx = complement_context(ctx, args.prefix)
        text = serialize_context(out_ctx, fmt)
    elif args.op == "appose":
        cctx = appose_negation(ctx, args.prefix)
        if fmt == "cxt":
            text = serialize_context(cctx.flattened, "cxt")
        else:
            text = serialize_compound(cctx)
    else:
        raise _CliError(f"unknown conversion {args.op!r}")
    if args.output and args.output != "-":
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise _CliError(f"cannot write {args.output}: {exc.strerror or exc}") from None
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    loaded = _load_any(args.input)
    if isinstance(loaded, CompoundContext):
        cells = sum(sum(row) for row in loaded.a_incidence) + sum(
            sum(row) for row in loaded.b_incidence
        )
        sys.stdout.write(
            f"ok: {loaded.flavor.value} compound, {len(loaded.objects)} objects, "
            f"{len(loaded.a_attributes)}+{len(loaded.b_attributes)} attributes, "
            f"{cells} incidences\n"
        )
    else:
        cells = sum(sum(row) for row in loaded.incidence)
        sys.stdout.write(
            f"ok: {loaded.n_objects} objects, {loaded.n_attributes} attributes, "
            f"{cells} incidences\n"
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="granudesc",
        description="Definability and descriptions of object sets in binary tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
        p.add_argument("input", help="context file (cxt or JSON); '-' for stdin")
        p.add_argument("--format", choices=formats, default=None)
        p.add_argument("--ascii", action="store_true", help="ASCII connectives")

    p = sub.add_parser("concepts", help="enumerate a concept family")
    common(p, ("text", "json", "dot"))
    p.add_argument(
        "--variant",
        default="formal",
        help="formal, object-oriented, three-way or cn",
    )
    p.add_argument("--compound", help="second attribute block for the cn variant")
    p.add_argument("--force", action="store_true", help="override the size guard")
    p.set_defaults(func=_cmd_concepts)

    p = sub.add_parser("define", help="definability verdict for a granule")
    common(p, ("text", "json"))
    p.add_argument("--granule", required=True, help="comma list of names or 1-based indices")
    p.add_argument("--mode", required=True, help="wedge, three-way, vee or cn")
    p.add_argument("--compound", help="second attribute block for cn mode")
    p.add_argument("--minimal", action="store_true", help="also list minimal descriptions")
    p.set_defaults(func=_cmd_define)

    p = sub.add_parser("approx", help="tightest definable bounds for a granule")
    common(p, ("text", "json"))
    p.add_argument("--granule", required=True, help="comma list of names or 1-based indices")
    p.add_argument("--mode", required=True, help="wedge, three-way, vee or cn")
    p.add_argument("--direction", required=True, choices=("upper", "lower"))
    p.add_argument("--compound", help="second attribute block for cn mode")
    p.add_argument(
        "--all",
        action="store_true",
        help="emit every result (already the default; kept for compatibility)",
    )
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("convert", help="derive the complement or apposed table")
    p.add_argument("input", help="context file (cxt or JSON); '-' for stdin")
    p.add_argument("--op", required=True, choices=("complement", "appose"))
    p.add_argument("--format", choices=("cxt", "json"), default=None)
    p.add_argument("--output", help="output path; stdout when omitted")
    p.add_argument("--prefix", default="not_", help="name prefix for complemented attributes")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("validate", help="parse a context file and report its shape")
    p.add_argument("input", help="context file (cxt or JSON); '-' for stdin")
    p.set_defaults(func=_cmd_validate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ContextFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeGuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except Inapplicable as exc:
        reason = getattr(exc.reason, "value", exc.reason)
        print(f"inapplicable: {exc.message} ({reason})", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except (FlavorMismatch, GranuleDescError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def console() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console()
