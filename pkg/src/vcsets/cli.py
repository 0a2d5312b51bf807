"""Command line front end.

Set systems travel between commands as ``.ssys`` text on standard streams, so
``vcsets gen k-subsets 8 3 | vcsets vcdim`` works without temporary files.

Exit codes: 0 success, 2 usage error, 3 parse error, 4 precondition violation,
5 cap exceeded.  Predicate commands print ``true``/``false`` and exit 0.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Any

from . import compression, oracle, stability, vc
from .core import (MAX_CONCEPTS, MAX_ELEMENTS, PartialType, SetSystem, bitstring,
                   delta_shift, dual)
from .errors import CapExceededError, ParseError, PreconditionError, VCSetsError
from .formats import (parse_lin, parse_pts, parse_system, serialize_system,
                      system_to_json)
from .generators import (LinearFamilySpec, PointConfig, circle_spec, gen_circles,
                         gen_interval_unions, gen_k_subsets, gen_nonempty_k_subsets,
                         gen_pos_family, gen_prefixes, gen_random_maximal, gen_rectangles,
                         validate_general_position)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_CAP = 0, 2, 3, 4, 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _labels_arg(system: SetSystem, tokens: list[str]) -> PartialType:
    """``a=1 b=0`` style labeling (commas also separate)."""
    mapping = {}
    for tok in " ".join(tokens).replace(",", " ").split():
        name, sep, val = tok.partition("=")
        if not sep or val not in ("0", "1"):
            raise _UsageError(f"expected ELEMENT=0|1, got {tok!r}")
        mapping[name] = int(val)
    return PartialType.from_mapping(system, mapping)


def _subset_arg(tokens: list[str]) -> list[str]:
    return [t for tok in tokens for t in tok.replace(",", " ").split() if t != "-"]


def _system_payload(system: SetSystem) -> dict:
    return system_to_json(system)


def _emit_system(system: SetSystem, args) -> tuple[Any, str]:
    fmt = "json" if args.json else args.format
    return _system_payload(system), serialize_system(system, fmt or "ssys")


def _fl_payload(fl: vc.ForbiddenLabel) -> dict:
    return {"witness_set": list(fl.witness_set), "pattern": fl.pattern,
            "forbidden_subset": list(fl.forbidden_subset)}


def _read_input(args) -> tuple[SetSystem, str]:
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    system = parse_system(text, args.format)
    system.check_caps(args.cap, MAX_CONCEPTS)
    return system, text


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["ssys", "mat", "json"], default=None,
                        help="input/output set-system format (input is sniffed if omitted)")
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--cap", type=int, default=MAX_ELEMENTS,
                        help=f"maximum domain size (default {MAX_ELEMENTS})")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    common.add_argument("-i", "--input", default=None,
                        help="set-system file (default: standard input)")

    p = _Parser(prog="vcsets", description="Exact analysis of finite set systems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, **kw):
        return sub.add_parser(name, help=help_, parents=[common], **kw)

    add("vcdim", "VC dimension")
    add("shatter", "does the family shatter a subset").add_argument("subset", nargs="*")
    add("maximum", "is the family maximum").add_argument(
        "--definitional", action="store_true", help="check every subset")
    add("maximal", "is the family maximal").add_argument("d", nargs="?", type=int)
    add("labels", "all forbidden labels (maximum families only)")
    add("member", "membership via forbidden labels").add_argument("elements", nargs="*")
    add("helly", "is a partial labeling extendable").add_argument("labels", nargs="*")
    add("complete", "greedy maximal completion").add_argument("d", nargs="?", type=int)
    add("ladder", "ladder (order property) index").add_argument("limit", nargs="?", type=int)
    add("normal-form", "center and radius of the family").add_argument(
        "--exhaustive", action="store_true", help="allow centers outside the family")
    add("dual", "dual system")
    add("delta", "symmetric-difference shift").add_argument("subset", nargs="*")
    sp = add("compress", "compress a realizable partial type")
    sp.add_argument("labels", nargs="*")
    sp.add_argument("--d", type=int, default=None)
    sp = add("reconstruct", "reconstruct a type from a compression record")
    sp.add_argument("--kept", default="", help="kept labels, e.g. a=1,b=0")
    sp.add_argument("--support", required=True, help="reconstruction support, e.g. a,b,c")
    add("verify-scheme", "verify the internal-shattering compression scheme").add_argument(
        "d", nargs="?", type=int)
    add("report", "summary of all analyses")
    sp = add("validate-gp", "general-position check of a point configuration")
    sp.add_argument("points", help=".pts file")
    sp.add_argument("--lin", default=None, help=".lin linear family (default: circles)")

    gen = sub.add_parser("gen", help="generate a family")
    gsub = gen.add_subparsers(dest="family", required=True, parser_class=_Parser)

    def gadd(name, help_):
        return gsub.add_parser(name, help=help_, parents=[common])

    g = gadd("k-subsets", "all subsets of size <= d")
    g.add_argument("n", type=int)
    g.add_argument("d", type=int)
    g = gadd("nonempty", "nonempty subsets of size <= d")
    g.add_argument("n", type=int)
    g.add_argument("d", type=int)
    g = gadd("intervals", "unions of at most m intervals of the n-chain")
    g.add_argument("n", type=int)
    g.add_argument("m", type=int)
    gadd("prefixes", "initial segments of the n-chain").add_argument("n", type=int)
    g = gadd("pos", "pos(f0 - H) family")
    g.add_argument("points", help=".pts file")
    g.add_argument("lin", help=".lin file with rows 'f0 : h1 ... hn'")
    gadd("circles", "circle family on a point configuration").add_argument("points")
    gadd("rectangles", "axis-parallel rectangle traces").add_argument("points")
    g = gadd("random-maximal", "seeded greedy d-maximal family")
    g.add_argument("n", type=int)
    g.add_argument("d", type=int)
    return p


def _generate(args) -> SetSystem:
    cap = args.cap
    fam = args.family
    if fam == "k-subsets":
        return gen_k_subsets(args.n, args.d, max_elements=cap)
    if fam == "nonempty":
        return gen_nonempty_k_subsets(args.n, args.d, max_elements=cap)
    if fam == "intervals":
        return gen_interval_unions(args.n, args.m, max_elements=cap)
    if fam == "prefixes":
        return gen_prefixes(args.n, max_elements=cap)
    if fam == "random-maximal":
        return gen_random_maximal(args.n, args.d, args.seed, max_elements=cap)
    config = PointConfig(tuple(parse_pts(_read_text(args.points))))
    if fam == "circles":
        return gen_circles(config, max_elements=cap)
    if fam == "rectangles":
        return gen_rectangles(config, max_elements=cap)
    f0, rows = parse_lin(_read_text(args.lin))
    return gen_pos_family(config, LinearFamilySpec(tuple(map(tuple, rows)), tuple(f0)),
                          max_elements=cap)


def _dispatch(args) -> tuple[Any, str, str | None]:
    """Return ``(payload, text, input_text)``."""
    cmd = args.command
    if cmd == "gen":
        payload, text = _emit_system(_generate(args), args)
        return payload, text, None
    if cmd == "validate-gp":
        config = PointConfig(tuple(parse_pts(_read_text(args.points))))
        if args.lin:
            f0, rows = parse_lin(_read_text(args.lin))
            spec = LinearFamilySpec(tuple(map(tuple, rows)), tuple(f0))
        else:
            spec = circle_spec(config)
        rep = validate_general_position(config, spec)
        payload = {"ok": rep.ok, "kind": rep.kind,
                   "subset": None if rep.subset is None else [f"p{i + 1}" for i in rep.subset]}
        text = "true\n" if rep.ok else f"false\n{rep.describe()}\n"
        return payload, text, None

    system, source = _read_input(args)
    use_oracle = args.oracle

    if cmd == "vcdim":
        d = oracle.oracle_vc(system) if use_oracle else vc.vc_dimension(system)
        return d, f"{d}\n", source
    if cmd == "shatter":
        r = vc.shatters(system, _subset_arg(args.subset))
        return r, _tf(r), source
    if cmd == "maximum":
        if use_oracle:
            r = oracle.oracle_is_maximum(system)
        elif args.definitional:
            r = vc.is_maximum_definitional(system)
        else:
            r = vc.is_maximum(system)
        return r, _tf(r), source
    if cmd == "maximal":
        d = vc.vc_dimension(system) if args.d is None else args.d
        r = oracle.oracle_is_maximal(system) if use_oracle else vc.is_maximal(system, d)
        return r, _tf(r), source
    if cmd == "labels":
        labels = vc.all_forbidden_labels(system)
        text = "".join(f"{' '.join(fl.witness_set)}: {fl.pattern}\n" for fl in labels)
        return [_fl_payload(fl) for fl in labels], text, source
    if cmd == "member":
        r = vc.membership_by_forbidden_labels(system, _subset_arg(args.elements))
        return r, _tf(r), source
    if cmd == "helly":
        r = vc.helly_consistency(system, _labels_arg(system, args.labels))
        return r, _tf(r), source
    if cmd == "complete":
        d = vc.vc_dimension(system) if args.d is None else args.d
        payload, text = _emit_system(vc.maximal_completion(system, d, max_elements=args.cap), args)
        return payload, text, source
    if cmd == "ladder":
        if use_oracle:
            n = oracle.oracle_ladder(system)
            return {"index": n, "points": None, "witnesses": None}, f"{n}\n", source
        n, w = stability.ladder_index(system, args.limit)
        payload = {"index": n, "points": list(w.points),
                   "witnesses": [list(system.domain.members(c)) for c in w.witnesses]}
        text = f"{n}\n" + "".join(
            f"{p}: {' '.join(system.domain.members(c)) or '-'}\n"
            for p, c in zip(w.points, w.witnesses))
        return payload, text, source
    if cmd == "normal-form":
        nf = stability.stable_normal_form(system, exhaustive=args.exhaustive)
        center = list(system.domain.members(nf.center))
        return ({"radius": nf.radius, "center": center},
                f"radius {nf.radius}\ncenter {' '.join(center) or '-'}\n", source)
    if cmd == "dual":
        payload, text = _emit_system(dual(system), args)
        return payload, text, source
    if cmd == "delta":
        payload, text = _emit_system(delta_shift(system, _subset_arg(args.subset)), args)
        return payload, text, source
    if cmd == "compress":
        d = vc.vc_dimension(system) if args.d is None else args.d
        rec = compression.compress_type(system, _labels_arg(system, args.labels), d)
        text = " ".join(f"{e}={b}" for e, b in zip(rec.kept, rec.kept_labels))
        return {"kept": list(rec.kept), "kept_labels": rec.kept_labels}, text + "\n", source
    if cmd == "reconstruct":
        kept = _labels_arg(system, [args.kept]) if args.kept else PartialType((), "")
        rec = compression.CompressionRecord(kept.support, kept.labels)
        support = _subset_arg([args.support])
        p = (oracle.oracle_reconstruct if use_oracle else compression.reconstruct_type)(
            system, rec, support)
        text = " ".join(f"{e}={b}" for e, b in zip(p.support, p.labels))
        return {"support": list(p.support), "labels": p.labels}, text + "\n", source
    if cmd == "verify-scheme":
        d = vc.vc_dimension(system) if args.d is None else args.d
        kappa, rhos = compression.l2_scheme(system, d)
        res = compression.verify_extended_compression(system, d, kappa, rhos)
        cex = None if res.counterexample is None else res.counterexample.as_dict()
        text = _tf(res.ok) + ("" if res.ok else f"counterexample {cex}: {res.reason}\n")
        return {"ok": res.ok, "counterexample": cex, "reason": res.reason}, text, source
    if cmd == "report":
        payload = _report(system)
        text = "".join(f"{k}: {_plain(v)}\n" for k, v in payload.items())
        return payload, text, source
    raise _UsageError(f"unknown command {cmd!r}")


def _report(system: SetSystem) -> dict:
    d = vc.vc_dimension(system)
    maximum = vc.is_maximum(system)
    nf = stability.stable_normal_form(system)
    ladder, _ = stability.ladder_index(system)
    return {
        "elements": system.n,
        "concepts": len(system),
        "vc_dimension": d,
        "sauer_bound": vc.sauer_phi(d, system.n),
        "maximum": maximum,
        "maximal": vc.is_maximal(system, d),
        "forbidden_labels": ([fl.pattern for fl in vc.all_forbidden_labels(system)]
                             if maximum else None),
        "ladder_index": ladder,
        "normal_form_radius": nf.radius,
        "normal_form_center": bitstring(nf.center, system.n),
        "dual_vc_dimension": vc.vc_dimension(dual(system)),
    }


def _plain(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, list):
        return " ".join(map(str, v)) or "-"
    return str(v)


def _tf(value: bool) -> str:
    return "true\n" if value else "false\n"


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    start = time.perf_counter()
    try:
        args = parser.parse_args(argv)
        payload, text, source = _dispatch(args)
    except _UsageError as exc:
        print(f"vcsets: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except ParseError as exc:
        print(f"vcsets: parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"vcsets: cap exceeded: {exc}", file=stderr)
        return EXIT_CAP
    except PreconditionError as exc:
        print(f"vcsets: precondition violated: {exc}", file=stderr)
        return EXIT_PRECONDITION
    except (VCSetsError, OSError) as exc:
        print(f"vcsets: error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.json:
        report = {
            "command": [args.command] + ([args.family] if args.command == "gen" else []),
            "input_digest": (None if source is None
                             else hashlib.sha256(source.encode("utf-8")).hexdigest()),
            "result": payload,
        }
        stdout.write(json.dumps(report, sort_keys=True) + "\n")
        print(f"# elapsed {time.perf_counter() - start:.3f}s", file=stderr)
    else:
        stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
