"""Command line front end: ``hilbertdepth VERB FILE [options]``.

Exit status is 0 on success (including "no partition exists"), 2 on
unreadable input and 3 when an algorithm's precondition fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .lattice import DomainError, as_degree, format_varset
from .module_spec import (
    HilbertTable,
    ModuleSpec,
    SpecError,
    UnsupportedSpecError,
    dump_spec,
    extend_scalars,
    hilbert_table,
    parse_spec,
    specialize_ideal_spec,
)
from .partitions import (
    HilbertComponent,
    HilbertDecomposition,
    HilbertPartition,
    InconsistentPartitionError,
    count_partitions,
    hdepth,
    induced_decomposition,
    iter_partitions,
)
from .stanley import (
    PreconditionError,
    StanleyCandidate,
    StanleyDecomposition,
    diagnose_candidate,
    stdepth,
    stdepth_dim1,
)

EXIT_INPUT = 2
EXIT_PRECONDITION = 3


class InputError(Exception):
    pass


def _load_json_arg(value: str):
    """A JSON literal, or the path of a file holding one."""
    path = Path(value)
    text = path.read_text() if not value.lstrip().startswith(("{", "[")) and path.exists() else value
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON argument: {exc}") from exc


def _read_spec(path: str) -> ModuleSpec:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_spec(data)


def _table_json(table: HilbertTable) -> list:
    return [[list(c), v] for c, v in table.items()]


def _components_json(dec: HilbertDecomposition) -> list:
    return [{"vars": sorted(c.vars), "shift": list(c.shift)} for c in dec.components]


def _stanley_json(sd: StanleyDecomposition) -> list:
    return [
        {
            "shift": list(p.generator.degree),
            "vars": sorted(p.vars),
            "generator": [[k, str(c)] for k, c in p.generator.coefficients],
        }
        for p in sd.parts
    ]


def _fmt_degree(c) -> str:
    return "(" + ",".join(str(x) for x in c) + ")"


def _fmt_component(c: HilbertComponent, names) -> str:
    return f"{format_varset(c.vars, names)}(-{_fmt_degree(c.shift)})"


def _fmt_decomposition(dec: HilbertDecomposition, names) -> str:
    return " + ".join(_fmt_component(c, names) for c in dec.components) or "0"


def _fmt_partition(p: HilbertPartition) -> str:
    return " + ".join(f"[{_fmt_degree(iv.lower)},{_fmt_degree(iv.upper)}]" for iv in p.intervals) or "(empty)"


def _fmt_element(m, names) -> str:
    terms = []
    for k, c in m.coefficients:
        coef = "" if c == 1 else f"{c}*"
        terms.append(f"{coef}e{k + 1}")
    return " + ".join(terms)


def _fmt_stanley(sd: StanleyDecomposition, names) -> list[str]:
    return [
        f"  ({_fmt_element(p.generator, names)}) in degree {_fmt_degree(p.generator.degree)}"
        f" * {format_varset(p.vars, names)}"
        for p in sd.parts
    ]


def _header(spec: ModuleSpec, table: HilbertTable) -> list[str]:
    return [f"g = {_fmt_degree(table.g)}", f"H_M truncated at g = {table.to_polynomial(spec.var_names)}"]


def cmd_hdepth(args, out) -> None:
    spec = _read_spec(args.file)
    table = hilbert_table(spec)
    d, p = hdepth(table)
    dec = induced_decomposition(p)
    if args.json:
        report = {
            "g": list(table.g),
            "table": _table_json(table),
            "depth": d,
            "witness": p.to_dict(),
            "components": _components_json(dec),
        }
        out.write(json.dumps(report) + "\n")
        return
    lines = _header(spec, table)
    lines.append(f"Hilbert depth = {d}")
    lines.append(f"witness partition: {_fmt_partition(p)}")
    lines.append(f"induced decomposition: {_fmt_decomposition(dec, spec.var_names)}")
    out.write("\n".join(lines) + "\n")


def cmd_stdepth(args, out) -> None:
    spec = _read_spec(args.file)
    table = hilbert_table(spec)
    d, sd = stdepth_dim1(spec) if args.dim1 else stdepth(spec)
    if args.json:
        report = {"g": list(table.g), "table": _table_json(table), "depth": d, "witness": _stanley_json(sd)}
        out.write(json.dumps(report) + "\n")
        return
    lines = _header(spec, table)
    lines.append(f"Stanley depth = {d}")
    lines.append("witness Stanley decomposition (e_k = canonical generator of summand k):")
    lines.extend(_fmt_stanley(sd, spec.var_names))
    out.write("\n".join(lines) + "\n")


def cmd_partitions(args, out) -> None:
    spec = _read_spec(args.file)
    table = hilbert_table(spec)
    if not 0 <= args.min_depth <= spec.n:
        raise PreconditionError(f"--min-depth must lie in 0..{spec.n}")
    if args.list:
        report = {"g": list(table.g), "depth": args.min_depth, "witness": []}
        shown = 0
        for p in iter_partitions(table, args.min_depth):
            if shown == args.limit:
                break
            shown += 1
            if args.json:
                report["witness"].append(p.to_dict())
            else:
                out.write(f"{_fmt_partition(p)}\n")
                out.flush()
        if args.json:
            report["count"] = shown
            out.write(json.dumps(report) + "\n")
        return
    n = count_partitions(table, args.min_depth)
    if args.json:
        out.write(json.dumps({"g": list(table.g), "depth": args.min_depth, "count": n}) + "\n")
    else:
        out.write(f"{n}\n")


def cmd_decompose(args, out) -> None:
    spec = _read_spec(args.file)
    table = hilbert_table(spec)
    try:
        p = HilbertPartition.from_dict(_load_json_arg(args.partition))
    except (ValueError, DomainError) as exc:
        raise InputError(str(exc)) from exc
    if not p.is_partition_of(table):
        raise InconsistentPartitionError("the intervals do not sum to the module's truncated Hilbert polynomial")
    dec = induced_decomposition(p)
    if args.json:
        report = {"g": list(table.g), "depth": dec.depth, "witness": p.to_dict(), "components": _components_json(dec)}
        out.write(json.dumps(report) + "\n")
        return
    out.write(f"depth = {dec.depth}\n{_fmt_decomposition(dec, spec.var_names)}\n")


def _parse_candidate(data) -> StanleyCandidate:
    try:
        comps, choices = [], []
        for raw in data["components"]:
            comps.append(HilbertComponent(frozenset(int(j) for j in raw["vars"]), as_degree(raw["shift"])))
            choices.append(tuple(Fraction(str(x)) for x in raw["choice"]))
        n = len(comps[0].shift) if comps else int(data.get("n", 0))
        return StanleyCandidate(HilbertDecomposition(n, tuple(comps)), tuple(choices))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed candidate: {exc}") from exc


def cmd_check(args, out) -> None:
    spec = _read_spec(args.file)
    cand = _parse_candidate(_load_json_arg(args.candidate))
    if cand.decomposition.n != spec.n and cand.decomposition.components:
        raise InputError("candidate and module disagree on the number of variables")
    try:
        reason = diagnose_candidate(spec, cand)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise InputError(str(exc)) from exc
    if args.json:
        report = {
            "g": list(spec.g),
            "depth": cand.decomposition.depth,
            "components": _components_json(cand.decomposition),
            "valid": reason is None,
            "reason": reason,
        }
        out.write(json.dumps(report) + "\n")
        return
    out.write("pass\n" if reason is None else f"fail: {reason}\n")


def cmd_extend(args, out) -> None:
    spec = _read_spec(args.file)
    if args.m < 1:
        raise PreconditionError("-m must be at least 1")
    out.write(dump_spec(extend_scalars(spec, args.m)) + "\n")


def cmd_specialize(args, out) -> None:
    spec = _read_spec(args.file)
    out.write(dump_spec(specialize_ideal_spec(spec, args.keep)) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbertdepth", description="Hilbert depth and Stanley depth of multigraded monomial modules."
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="module description (JSON)")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.set_defaults(func=func)
        return p

    verb("hdepth", cmd_hdepth, "Hilbert depth with a witness partition")
    p = verb("stdepth", cmd_stdepth, "Stanley depth with a witness decomposition")
    p.add_argument("--dim1", action="store_true", help="force the algorithm for dim M_a <= 1")
    p = verb("partitions", cmd_partitions, "count or list Hilbert partitions")
    p.add_argument("--min-depth", type=int, default=0)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the number of partitions (default)")
    mode.add_argument("--list", action="store_true", help="list partitions in canonical order")
    p.add_argument("--limit", type=int, default=1000, help="maximum partitions listed")
    p = verb("decompose", cmd_decompose, "induced Hilbert decomposition of a partition")
    p.add_argument("--partition", required=True, help="partition JSON, or a file holding it")
    p = verb("check", cmd_check, "check explicit Stanley generators")
    p.add_argument("--candidate", required=True, help="candidate JSON, or a file holding it")
    p = verb("extend", cmd_extend, "scalar extension by m new variables")
    p.add_argument("-m", type=int, required=True)
    p = verb("specialize", cmd_specialize, "set trailing variables to 1 (ideals only)")
    p.add_argument("--keep", type=int, required=True)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (InputError, SpecError) as exc:
        if isinstance(exc, UnsupportedSpecError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, DomainError, InconsistentPartitionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return 0


if __name__ == "__main__":
    sys.exit(main())
