"""Command-line entry point.

Exit codes: 0 success, 1 the answer is no / none, 2 usage or input error.
Graph arguments are a file path, ``-`` for stdin, or a literal graph6 string.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import claims
from .generators import FAMILIES, FamilySpec, make
from .graph import Graph, GraphError, TraceError, apply_trace, compact, is_bipartite, is_connected
from .io import FormatError, edge_list, format_certificate, from_graph6, parse_edge_list, parse_trace, to_graph6
from .leveling import clique_number, exact_coloring, longest_induced_path
from .search import is_pivot_minor, is_vertex_minor, verify_witness

LEMMAS = ("shorten", "ladder-to-fan", "consecutive", "odd-gap", "kl-fan", "incomplete-fan")


class UsageError(Exception):
    pass


def _read_text(arg: str, stdin) -> str:
    if arg == "-":
        return stdin.read()
    if os.path.exists(arg):
        with open(arg) as f:
            return f.read()
    return arg


def read_graph(arg: str, stdin) -> Graph:
    text = _read_text(arg, stdin)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("no graph given", 0)
    first = lines[0].split()
    if len(first) == 2 and all(t.isdigit() for t in first):
        return parse_edge_list(text)
    return from_graph6(lines[0])


def write_graph(g: Graph, fmt: str) -> str:
    g = compact(g)[0]
    return edge_list(g) if fmt == "edges" else to_graph6(g)


def _emit_certificate(cert, out) -> int:
    if cert is None:
        print("none", file=out)
        return 1
    v = verify_witness(cert)
    if not v:
        raise AssertionError(f"self-check failed: {v.reason}")
    out.write(format_certificate(cert))
    return 0


def _parse_param(tok: str):
    if "," in tok:
        try:
            return tuple(int(x) for x in tok.split(",") if x)
        except ValueError:
            raise UsageError(f"parameter {tok!r} is not a list of integers") from None
    for conv in (int, float):
        try:
            return conv(tok)
        except ValueError:
            pass
    raise UsageError(f"parameter {tok!r} is not a number")


# -- subcommands ------------------------------------------------------------------

def cmd_gen(a, stdin, out) -> int:
    params = [_parse_param(p) for p in a.params]
    if a.family == "random":
        params = params[:2] + [a.seed]
    g = make(FamilySpec(a.family, tuple(params)))
    print(write_graph(g, a.format), file=out)
    return 0


def cmd_apply(a, stdin, out) -> int:
    g = read_graph(a.graph, stdin)
    trace = parse_trace(_read_text(a.trace, stdin) if a.trace == "-" or os.path.exists(a.trace) else a.trace.replace(";", "\n"))
    print(write_graph(apply_trace(g, trace), a.format), file=out)
    return 0


def cmd_check(a, stdin, out) -> int:
    if a.pattern == "-" and a.host == "-":
        raise UsageError("only one graph can come from stdin")
    pattern = read_graph(a.pattern, stdin)
    host = read_graph(a.host, stdin)
    search = is_vertex_minor if a.kind == "vm" else is_pivot_minor
    return _emit_certificate(search(pattern, host), out)


def cmd_extract(a, stdin, out) -> int:
    from . import extraction as ex

    k = a.k
    needs_host = a.what not in ("ladder-to-fan", "consecutive")
    if needs_host and a.host is None:
        raise UsageError(f"extract {a.what} needs a host graph")
    g = read_graph(a.host, stdin) if needs_host else None
    budget = ex.Budget(nodes=a.budget_nodes, path_len=a.budget_path_len)
    if a.what == "fan":
        res = ex.pipeline_fan(g, k, budget)
        for note in res.notes if a.verbose else ():
            print(f"# {note}", file=sys.stderr)
        return _emit_certificate(res.certificate, out)
    if a.what == "cycle":
        res = ex.pipeline_cycle(g, k, budget)
        for note in res.notes if a.verbose else ():
            print(f"# {note}", file=sys.stderr)
        return _emit_certificate(res.certificate, out)
    if a.what == "shorten":
        return _emit_certificate(ex.shorten_to(g, k), out)
    if a.what == "ladder-to-fan":
        from .extraction.common import certify
        from .generators import fan

        host, trace = ex.ladder_to_fan(k)
        return _emit_certificate(certify(host, trace, fan(k)), out)
    if a.what == "consecutive":
        odd, even = ex.consecutive_fan_to_cycles(k)
        return _emit_certificate(even if a.even else odd, out)
    if a.what == "odd-gap":
        return _emit_certificate(ex.odd_gap_extract(g), out)
    if a.what == "kl-fan":
        if a.l is None:
            raise UsageError("extract kl-fan needs -l")
        return _emit_certificate(ex.kl_fan_reduce(g, k, a.l), out)
    if a.what == "incomplete-fan":
        return _emit_certificate(ex.incomplete_fan_to_cycle(g, k), out)
    raise UsageError(f"unknown extraction {a.what!r}")


def cmd_color(a, stdin, out) -> int:
    g = read_graph(a.graph, stdin)
    col = exact_coloring(g)
    chi = len(set(col.values()))
    print(f"chi {chi}", file=out)
    print(f"omega {clique_number(g)}", file=out)
    print("coloring " + " ".join(f"{v}:{col[v]}" for v in sorted(col)), file=out)
    return 0


def cmd_analyze(a, stdin, out) -> int:
    g = read_graph(a.graph, stdin)
    lp = longest_induced_path(g, a.budget_nodes)
    col = exact_coloring(g)
    rows = [
        ("order", g.order),
        ("size", g.size),
        ("connected", is_connected(g)),
        ("bipartite", is_bipartite(g)),
        ("omega", clique_number(g)),
        ("chi", len(set(col.values()))),
        ("longest-induced-path", f"{len(lp.path)}{'' if lp.complete else '+'}"),
    ]
    for key, val in rows:
        print(f"{key} {str(val).lower() if isinstance(val, bool) else val}", file=out)
    return 0


def cmd_verify(a, stdin, out) -> int:
    names = a.suite or list(claims.SUITES)
    unknown = [n for n in names if n not in claims.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; known: {', '.join(claims.SUITES)}")
    if a.jobs > 1:
        with ProcessPoolExecutor(a.jobs) as pool:
            results = list(pool.map(claims.run_suite, names))
    else:
        results = []
        for n in names:
            r = claims.run_suite(n)
            print(r.line(), file=out, flush=True)
            results.append(r)
    if a.jobs > 1:
        for r in results:
            print(r.line(), file=out)
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} suites passed", file=out)
    return 0 if passed == len(results) else 1


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget-nodes", type=int, default=200_000, help="DFS node cap for path searches")
    common.add_argument("--budget-path-len", type=int, default=24, help="longest induced path tried")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--format", choices=("g6", "edges"), default="g6")

    p = argparse.ArgumentParser(prog="vminor", description="vertex-minor and pivot-minor toolkit")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("gen", parents=[common], help="generate a named graph")
    s.add_argument("family", help=f"one of {', '.join([*FAMILIES, 'incomplete-fan', 'kl-fan', 'random'])}")
    s.add_argument("params", nargs="*", help="integers; comma lists for gap or apex sets")
    s.set_defaults(fn=cmd_gen)

    s = sub.add_parser("apply", parents=[common], help="replay a trace on a graph")
    s.add_argument("graph")
    s.add_argument("trace", help="trace file, '-', or ops separated by ';'")
    s.set_defaults(fn=cmd_apply)

    s = sub.add_parser("check", parents=[common], help="decide containment and print a certificate")
    s.add_argument("kind", choices=("vm", "pm"))
    s.add_argument("pattern")
    s.add_argument("host")
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("extract", parents=[common], help="run a constructive extraction")
    s.add_argument("what", choices=("fan", "cycle", *LEMMAS))
    s.add_argument("host", nargs="?")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("-l", type=int, help="odd gap count for kl-fan")
    s.add_argument("--even", action="store_true", help="consecutive: the even cycle")
    s.add_argument("-v", "--verbose", action="store_true", help="pipeline notes on stderr")
    s.set_defaults(fn=cmd_extract)

    s = sub.add_parser("color", parents=[common], help="chromatic number, clique number, colouring")
    s.add_argument("graph")
    s.set_defaults(fn=cmd_color)

    s = sub.add_parser("analyze", parents=[common], help="basic invariants")
    s.add_argument("graph")
    s.set_defaults(fn=cmd_analyze)

    s = sub.add_parser("verify-claims", parents=[common], help="run the acceptance suites")
    s.add_argument("--suite", action="append", help=f"repeatable; one of {', '.join(claims.SUITES)}")
    s.set_defaults(fn=cmd_verify)
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr):
            a = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        with contextlib.redirect_stderr(stderr):
            return a.fn(a, stdin, stdout)
    except TraceError as e:
        print(f"error: trace op {e.index} ({e.op.kind} {' '.join(map(str, e.op.args))}): {e.reason}", file=stderr)
    except FormatError as e:
        print(f"error: malformed input: {e}", file=stderr)
    except (UsageError, GraphError) as e:
        print(f"error: {e}", file=stderr)
    return 2


def run(argv, stdin_text: str = "") -> tuple[int, str, str]:
    """Run the CLI in-process; returns ``(exit code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), io.StringIO(stdin_text), out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
