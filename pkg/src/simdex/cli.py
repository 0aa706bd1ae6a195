"""Command-line front end.

Every subcommand is a thin client over the HTTP service: with no
``--server`` the requests run against the in-process app, so the tool
works standalone; pointing ``--server`` at a running instance sends
the identical requests over the network.

Exit codes: 0 success, 2 usage or parse error, 3 domain error,
4 I/O or transport error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Tuple

import httpx

from .errors import BothZeroError, FormatError, SimdexError
from .fileio import (
    fmt_float,
    read_function_csv,
    read_mset_csv,
    read_vector_csv,
    slide_csv_text,
)
from .kinds import BoundaryMode, IndexKind, SlideDirection, SupportMode
from .service.client import ServiceClient, ServiceError

_KINDS = [k.value for k in IndexKind]
_COMPARISONS = _KINDS + ["interiority", "coincidence"]


def _client(args: argparse.Namespace) -> ServiceClient:
    return ServiceClient(base_url=args.server)


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _cmd_eval(args: argparse.Namespace) -> int:
    try:
        value = _client(args).scalar_eval(IndexKind(args.kind), args.x, args.y)
    except BothZeroError:
        print("error: (0,0) undefined for s1-s3", file=sys.stderr)
        return 2
    print(fmt_float(value))
    return 0


def _cmd_heatmap(args: argparse.Namespace) -> int:
    kind = IndexKind(args.kind)
    prefix = args.out if args.out is not None else f"heatmap_{kind.value}"
    csv_text, pgm = _client(args).heatmap(kind, resolution=args.resolution)
    _write_text(prefix + ".csv", csv_text)
    _write_text(prefix + ".pgm", pgm)
    print(f"wrote {prefix}.csv and {prefix}.pgm")
    return 0


def _cmd_scatter(args: argparse.Namespace) -> int:
    csv_text = _client(args).scatter(samples=args.samples, seed=args.seed)
    _write_text(args.out, csv_text)
    print(f"wrote {args.out}")
    return 0


def _cmd_sincos(args: argparse.Namespace) -> int:
    csv_text = _client(args).sincos(resolution=args.resolution)
    _write_text(args.out, csv_text)
    print(f"wrote {args.out}")
    return 0


def _resolve_comparison(args: argparse.Namespace) -> Tuple[str, IndexKind, str, str]:
    """Sort the positional slots into (op, kind, file_a, file_b).

    The comparison name is an optional first positional, so with two
    files it is absent and with three it must name an index kind,
    'interiority', or 'coincidence'.  It is reconciled with ``--kind``.
    """
    if args.third is None:
        what, file_a, file_b = None, args.first, args.second
    else:
        what, file_a, file_b = args.first, args.second, args.third
        if what not in _COMPARISONS:
            args.parser.error(f"unknown comparison {what!r} (choose from {', '.join(_COMPARISONS)})")
    if what is None:
        return "index", IndexKind(args.kind or "s1"), file_a, file_b
    if what in ("interiority", "coincidence"):
        if args.kind is not None:
            args.parser.error(f"--kind does not apply to {what}")
        return what, IndexKind.S1, file_a, file_b
    if args.kind is not None and args.kind != what:
        args.parser.error(f"conflicting kinds: positional {what!r} vs --kind {args.kind!r}")
    return "index", IndexKind(what), file_a, file_b


def _cmd_compare(args: argparse.Namespace) -> int:
    op, kind, file_a, file_b = _resolve_comparison(args)
    mode = SupportMode(args.mode)
    client = _client(args)
    if args.tier == "mset":
        a, b = read_mset_csv(file_a), read_mset_csv(file_b)
        value = client.compare_mset(op, kind, mode, a, b)
    elif args.tier == "vec":
        a, b = read_vector_csv(file_a), read_vector_csv(file_b)
        value = client.compare_vector(op, kind, mode, a, b)
    else:
        a, b = read_function_csv(file_a), read_function_csv(file_b)
        value = client.compare_function(op, kind, mode, a, b)
    print(fmt_float(value))
    return 0


def _cmd_slide(args: argparse.Namespace) -> int:
    f = read_function_csv(args.file_f)
    g = read_function_csv(args.file_g)
    result = _client(args).slide(
        IndexKind(args.kind),
        f,
        g,
        direction=SlideDirection(args.dir),
        boundary=BoundaryMode(args.boundary),
    )
    _write_text(args.out, slide_csv_text(result))
    best_lag, _ = result.best()
    print(f"best_lag={best_lag}")
    return 0


def _cmd_match(args: argparse.Namespace) -> int:
    signal = read_function_csv(args.signal)
    template = read_function_csv(args.template)
    best_lag, score, sweep = _client(args).match(signal, template)
    if args.out is not None:
        _write_text(args.out, slide_csv_text(sweep))
    print(f"best_lag={best_lag} score={fmt_float(score)}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simdex",
        description="Signed similarity indices for scalars, multisets, vectors, and sampled functions.",
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="base URL of a running service (default: run in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a scalar index")
    p.add_argument("--kind", choices=_KINDS, default="s1")
    p.add_argument("x", type=float)
    p.add_argument("y", type=float)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("heatmap", help="write an index grid over [-1,1]^2 as CSV and PGM")
    p.add_argument("--kind", choices=_KINDS, default="s1")
    p.add_argument("--resolution", type=int, default=201)
    p.add_argument("--out", metavar="PREFIX", default=None, help="output prefix (default: heatmap_<kind>)")
    p.set_defaults(func=_cmd_heatmap)

    p = sub.add_parser("scatter", help="write sampled joint index values as CSV")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", default="scatter.csv")
    p.set_defaults(func=_cmd_scatter)

    p = sub.add_parser("sincos", help="write elementwise index columns for sine vs cosine as CSV")
    p.add_argument("--resolution", type=int, default=4096)
    p.add_argument("--out", default="sincos.csv")
    p.set_defaults(func=_cmd_sincos)

    p = sub.add_parser(
        "compare",
        help="compare two files (multisets, vectors, or functions)",
        usage="simdex compare [-h] [--kind {s1,s2,s3,s4}] [--mode {restricted,full}]\n"
              "                      {mset,vec,func} [what] file_a file_b",
    )
    p.add_argument("tier", choices=["mset", "vec", "func"])
    p.add_argument("first", metavar="[what] file_a",
                   help="optional comparison name (an index kind, 'interiority', or"
                        " 'coincidence'), then the two input files")
    p.add_argument("second", metavar="file_b")
    p.add_argument("third", nargs="?", default=None, help=argparse.SUPPRESS)
    p.add_argument("--kind", choices=_KINDS, default=None)
    p.add_argument("--mode", choices=[m.value for m in SupportMode], default="restricted")
    p.set_defaults(func=_cmd_compare, parser=p)

    p = sub.add_parser("slide", help="sweep an index across lags and write the sweep CSV")
    p.add_argument("--kind", choices=_KINDS, default="s1")
    p.add_argument("file_f")
    p.add_argument("file_g")
    p.add_argument("--dir", choices=[d.value for d in SlideDirection], default="corr")
    p.add_argument("--boundary", choices=[b.value for b in BoundaryMode], default="full")
    p.add_argument("--out", default="slide.csv")
    p.set_defaults(func=_cmd_slide)

    p = sub.add_parser("match", help="locate a template inside a signal")
    p.add_argument("signal")
    p.add_argument("template")
    p.add_argument("--out", default=None, help="optionally write the sweep CSV")
    p.set_defaults(func=_cmd_match)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return int(args.func(args))
    except SystemExit as exc:
        return int(exc.code or 0)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SimdexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ServiceError, httpx.HTTPError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
