"""Command line front end.

Exit codes: 0 success / 3-edge-connected / valid, 1 invalid certificate,
2 not 3-edge-connected (or not 2-edge-connected for the cactus commands),
64 usage, 65 unparsable input, 70 internal assertion.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .bench import run_bench
from .cactus import (
    Cactus,
    CactusFormatError,
    NotTwoEdgeConnected,
    blob_certificates,
    build_cactus,
    read_blob_certificates,
    three_edge_components,
    verify_cactus,
    write_blob_certificates,
)
from .certificate import Certificate, CertificateFormatError
from .chains import chain_decomposition, format_chains
from .graph import GraphFormatError, dumps_graph, read_graph_file
from .greedy import run_greedy
from .linear import run as run_linear
from .oracle import random_3ec
from .verify import verify_certificate

EX_USAGE = 64
EX_DATAERR = 65
EX_SOFTWARE = 70


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_text(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    try:
        return read_graph_file(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_certify(args) -> int:
    g = _load(args.graph)
    cert = run_greedy(g, args.root) if args.algo == "greedy" else run_linear(g, args.root)
    _emit(cert.to_text(), args.output)
    return 0 if cert.is_mader else 2


def cmd_verify(args) -> int:
    g = _load(args.graph)
    cert = Certificate.from_text(_read_text(args.cert))
    verdict = verify_certificate(g, cert)
    if verdict:
        return 0
    print(verdict, file=sys.stderr)
    return 1


def cmd_chains(args) -> int:
    g = _load(args.graph)
    cd, cert = chain_decomposition(g, args.root)
    if cert is not None:
        print(f"not 2-edge-connected: {cert.to_text().strip()}", file=sys.stderr)
        return 2
    sys.stdout.write(format_chains(cd))
    return 0


def _cactus_or_fail(g, root: int) -> Optional[Cactus]:
    try:
        return build_cactus(g, root)
    except NotTwoEdgeConnected as exc:
        print(exc, file=sys.stderr)
        sys.stdout.write(exc.certificate.to_text())
        return None


def cmd_cactus(args) -> int:
    g = _load(args.graph)
    cx = _cactus_or_fail(g, args.root)
    if cx is None:
        return 2
    _emit(cx.to_text(), args.output)
    if args.certs:
        write_blob_certificates(blob_certificates(g, cx), args.certs)
    return 0


def cmd_components(args) -> int:
    g = _load(args.graph)
    cx = _cactus_or_fail(g, args.root)
    if cx is None:
        return 2
    for comp in three_edge_components(cx):
        print(" ".join(map(str, comp)))
    return 0


def cmd_verify_cactus(args) -> int:
    g = _load(args.graph)
    cx = Cactus.from_text(_read_text(args.cactus))
    certs = read_blob_certificates(args.certs, cx) if args.certs else {}
    verdict = verify_cactus(g, cx, certs)
    if verdict:
        return 0
    print(verdict, file=sys.stderr)
    return 1


def cmd_gen(args) -> int:
    g = random_3ec(args.n, args.seed, m_target=args.m)
    _emit(dumps_graph(g), args.output)
    return 0


def cmd_bench(args) -> int:
    print("algo,seed,n,m,seconds")
    for row in run_bench(args.sizes, args.algo, args.seeds, args.repeat):
        print(f"{row.algo},{row.seed},{row.n},{row.m},{row.seconds:.6f}", flush=True)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mader3ec", description="Certifying 3-edge-connectivity tools.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("certify", help="certify 3-edge-connectivity")
    s.add_argument("graph")
    s.add_argument("--algo", choices=("linear", "greedy"), default="linear")
    s.add_argument("--root", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("verify", help="check a certificate")
    s.add_argument("graph")
    s.add_argument("cert")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("chains", help="print the chain decomposition")
    s.add_argument("graph")
    s.add_argument("--root", type=int, default=0)
    s.set_defaults(func=cmd_chains)

    s = sub.add_parser("cactus", help="cactus of all 2-edge-cuts")
    s.add_argument("graph")
    s.add_argument("--root", type=int, default=0)
    s.add_argument("-o", "--output")
    s.add_argument("--certs", help="directory for per-blob Mader sequences")
    s.set_defaults(func=cmd_cactus)

    s = sub.add_parser("components", help="3-edge-connected components, one per line")
    s.add_argument("graph")
    s.add_argument("--root", type=int, default=0)
    s.set_defaults(func=cmd_components)

    s = sub.add_parser("verify-cactus", help="check a cactus and its per-blob certificates")
    s.add_argument("graph")
    s.add_argument("cactus")
    s.add_argument("--certs")
    s.set_defaults(func=cmd_verify_cactus)

    s = sub.add_parser("gen", help="random 3-edge-connected multigraph")
    s.add_argument("--n", type=int, default=10)
    s.add_argument("--m", type=int, help="grow to this many edges instead of --n vertices")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="CSV of wall time per size")
    s.add_argument("--sizes", type=int, nargs="+", default=[10_000, 20_000, 100_000, 200_000])
    s.add_argument("--algo", nargs="+", choices=("linear", "greedy"), default=["linear"])
    s.add_argument("--seeds", type=int, nargs="+", default=[1])
    s.add_argument("--repeat", type=int, default=2)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"mader3ec: {exc}", file=sys.stderr)
        return EX_USAGE
    except (GraphFormatError, CertificateFormatError, CactusFormatError) as exc:
        print(f"mader3ec: {exc}", file=sys.stderr)
        return EX_DATAERR
    except (ValueError, IndexError) as exc:
        # e.g. a root outside the graph
        print(f"mader3ec: {exc}", file=sys.stderr)
        return EX_USAGE
    except AssertionError as exc:
        print(f"mader3ec: internal error: {exc}", file=sys.stderr)
        return EX_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
