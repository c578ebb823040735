"""Acceptance suites, shared by ``vminor verify-claims`` and the test suite.

Each suite returns ``(ok, detail)``; :func:`run_suite` times it and fails it
when it overruns its limit.  Suites are deterministic (fixed seeds).
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from .canon import is_isomorphic
from .generators import (
    cycle, fan, incomplete_fan, ladder, one_subdivision, random_bipartite_connected,
    random_connected, random_graph, random_kl_fan, random_tree,
)
from .graph import (
    Graph, Op, apply_trace, delete_vertex, is_connected, local_complement, pivot, pivot_by_classes,
)
from .io import format_trace, from_graph6, parse_trace, to_graph6
from .leveling import (
    chromatic_number, clique_number, degree_or_path, monotone_subsequence,
)
from .oracles import all_graphs, hereditary_corpus
from .search import Kind, is_pivot_minor, is_vertex_minor, verify_witness


@dataclass(frozen=True)
class ClaimResult:
    name: str
    title: str
    ok: bool
    detail: str
    seconds: float
    limit: float

    @property
    def passed(self) -> bool:
        return self.ok and self.seconds <= self.limit

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        late = "" if self.seconds <= self.limit else " (over time limit)"
        return f"{mark}  {self.name:<15} {self.seconds:7.2f}s / {self.limit:.0f}s  {self.detail}{late}"


def _all_verify(certs) -> bool:
    return all(c is not None and verify_witness(c).ok for c in certs)


# -- 1. algebra --------------------------------------------------------------------

def algebra(n_graphs: int = 500, seed: int = 0):
    rng = random.Random(seed)
    bad = []
    for i in range(n_graphs):
        g = random_graph(rng.randint(2, 12), rng.random(), rng.randrange(1 << 30))
        for v in g.labels:
            if local_complement(local_complement(g, v), v) != g:
                bad.append((i, "lc involution", v))
        for u, v in g.edges():
            if pivot(pivot(g, u, v), u, v) != g:
                bad.append((i, "pivot involution", (u, v)))
            a = local_complement(local_complement(local_complement(g, u), v), u)
            b = local_complement(local_complement(local_complement(g, v), u), v)
            if a != b:
                bad.append((i, "uvu = vuv", (u, v)))
            if pivot(g, u, v) != pivot_by_classes(g, u, v):
                bad.append((i, "pivot by classes", (u, v)))
    return not bad, f"{n_graphs} graphs, {len(bad)} failures" + (f"; first {bad[0]}" if bad else "")


# -- 2. parity table ---------------------------------------------------------------

def parity_table(max_k: int = 10) -> dict[tuple[int, int], bool]:
    """``(l, k) -> C_l is a pivot-minor of C_k`` for ``3 <= l < k <= max_k``."""
    out = {}
    for k in range(4, max_k + 1):
        for l in range(3, k):
            cert = is_pivot_minor(cycle(l), cycle(k))
            assert cert is None or verify_witness(cert).ok
            out[(l, k)] = cert is not None
    return out


def parity():
    table = parity_table(10)
    wrong = sorted(p for p, found in table.items() if found != ((p[1] - p[0]) % 2 == 0))
    detail = f"{len(table)} pairs, {len(table) - len(wrong)} follow parity"
    if wrong:
        detail += "; C_l <=pm C_k despite odd difference for (l,k) in " + ", ".join(map(str, wrong))
    return not wrong, detail


# -- 3. cycle shortening -------------------------------------------------------------

def shorten():
    from .extraction import shorten_to

    count = 0
    for n in range(3, 13):
        for k in range(3, n + 1, 1):
            if (n - k) % 2:
                continue
            cert = shorten_to(cycle(n), k)
            if not verify_witness(cert).ok or not is_isomorphic(cert.result(), cycle(k)):
                return False, f"C_{n} -> C_{k} failed"
            count += 1
    return True, f"{count} (n, k) pairs verified"


# -- 4. ladder to fan ---------------------------------------------------------------

def ladder_fan():
    from .extraction import ladder_to_fan

    for k in range(2, 7):
        g, trace = ladder_to_fan(k)
        if not is_isomorphic(apply_trace(g, trace), fan(k)):
            return False, f"k={k}: replay is not F_{k}"
    for k in (2, 3):
        cert = is_vertex_minor(fan(k), one_subdivision(ladder(k))[0])
        if cert is None or not verify_witness(cert).ok:
            return False, f"k={k}: search disagrees"
    return True, "k=2..6 replayed, k<=3 confirmed by search"


# -- 5. connectivity after elimination -----------------------------------------------

def connectivity(max_n: int = 7):
    checked = 0
    for n in range(2, max_n + 1):
        for g in all_graphs(n, connected=True):
            for v in g.labels:
                checked += 1
                if is_connected(delete_vertex(g, v)):
                    continue
                if not is_connected(delete_vertex(local_complement(g, v), v)):
                    return False, f"counterexample {to_graph6(g)} at {v}"
    return True, f"{checked} (graph, vertex) pairs, no counterexample"


# -- 6. consecutive and evenly spaced fans ------------------------------------------

def fan_cycles():
    from .extraction import consecutive_fan_to_cycles, even_spaced_fan_to_cycles

    n = 0
    for k in (1, 2, 3):
        odd, even = consecutive_fan_to_cycles(k)
        if not _all_verify([odd, even]):
            return False, f"consecutive k={k}"
        if not (is_isomorphic(odd.pattern, cycle(2 * k + 1)) and is_isomorphic(even.pattern, cycle(2 * k + 2))):
            return False, f"consecutive k={k}: wrong cycles"
        n += 2
    for k in (1, 2):
        for last in (1, 2, 3, 4):
            gaps = [2] * (2 * k - 1) + [last]
            certs = even_spaced_fan_to_cycles(gaps, k)
            want = 2 if last % 2 else 1
            if len(certs) != want or not _all_verify(certs):
                return False, f"even-spaced k={k} gaps={gaps}"
            n += len(certs)
    return True, f"{n} certificates verified"


# -- 7. (k, l)-fans ------------------------------------------------------------------

def kl_fans(count: int = 100, seed: int = 7):
    from .extraction import kl_fan_reduce

    rng = random.Random(seed)
    for i in range(count):
        k = rng.randint(1, 3)
        l = rng.randint(k, 8)
        g, gaps = random_kl_fan(k, l, 5, rng)
        cert = kl_fan_reduce(g, k, l)
        m = k + (l - k) // 3
        if not verify_witness(cert).ok or cert.kind is not Kind.PIVOT or not is_isomorphic(cert.pattern, fan(m)):
            return False, f"instance {i}: gaps {gaps}"
    return True, f"{count} random fans reduced"


# -- 8. incomplete fans ----------------------------------------------------------------

def incomplete_fans(max_n: int = 9, oracle_n: int = 7, samples: int = 50, seed: int = 3):
    from .extraction import incomplete_fan_to_cycle

    total = 0
    for n in range(1, max_n + 1, 2):
        for mid in itertools.product((0, 1), repeat=n - 1):
            s = [0, n] + [i + 1 for i, b in enumerate(mid) if b]
            g = incomplete_fan(n, s)
            cert = incomplete_fan_to_cycle(g, 3)
            if cert is None or not verify_witness(cert).ok:
                return False, f"k=3, n={n}, apex set {sorted(s)}"
            if n <= oracle_n and is_pivot_minor(cycle(3), g) is None:
                return False, f"search disagrees at n={n}, apex set {sorted(s)}"
            total += 1
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.choice((4, 6, 8))
        s = {0, n} | {i for i in range(1, n) if rng.random() < 0.5}
        cert = incomplete_fan_to_cycle(incomplete_fan(n, s), 4)
        if cert is None or not verify_witness(cert).ok:
            return False, f"k=4, n={n}, apex set {sorted(s)}"
    return True, f"{total} instances for k=3, {samples} samples for k=4"


# -- 9. induced matchings ------------------------------------------------------------

def matchings(seeds: int = 100, n: int = 60, k: int = 3):
    from .extraction import HighDegree, induced_matching_from_path, random_patched_host

    stats = {"matching": 0, "high-degree": 0}
    for seed in range(seeds):
        g, S, T = random_patched_host(n, k, seed)
        if seed % 5 == 0:
            # one extra vertex seeing k path vertices forces the other outcome
            hub = g.max_label() + 1
            g = Graph.from_edges(g.edges() + [(hub, q) for q in T[seed % 7::9][:k]], g.labels)
            S = [*S, hub]
        tset = set(T)
        for ell in (1, 2, 3):
            res = induced_matching_from_path(g, S, T, ell, k)
            if isinstance(res, HighDegree):
                if sum(g.has_edge(res.vertex, q) for q in T) < k:
                    return False, f"seed {seed}: weak high-degree vertex"
                stats["high-degree"] += 1
                continue
            if res is None:
                return False, f"seed {seed}, l={ell}: no result"
            if not verify_witness(res.certificate).ok:
                return False, f"seed {seed}: certificate does not verify"
            if any(op.kind != "del" and not set(op.args) <= tset for op in res.certificate.trace):
                return False, f"seed {seed}: op outside T"
            h = res.certificate.result()
            for i, s in enumerate(res.S):
                for j, q in enumerate(res.T):
                    if h.has_edge(s, q) != (i == j):
                        return False, f"seed {seed}: matching not induced"
            if len(res.S) != ell:
                return False, f"seed {seed}: matching of size {len(res.S)}"
            stats["matching"] += 1
    return True, f"{stats['matching']} matchings, {stats['high-degree']} high-degree outcomes"


# -- 10. Ramsey-type dichotomies -------------------------------------------------------

def gyarfas_bound(t: int, omega: int) -> int:
    """Colouring bound for P_t-free graphs with clique number ``omega``."""
    return (t - 1) ** (omega - 1)


def dichotomies(samples: int = 200, seed: int = 11):
    n = 2
    for seq in itertools.product(range(3), repeat=n * n + 1):
        m = monotone_subsequence(seq, n)
        if len(m.indices) < n + 1:
            return False, f"monotone subsequence too short for {seq}"
    corpus = 0
    for t in (4, 5):
        for g in hereditary_corpus(8, t):
            corpus += 1
            if g.order and chromatic_number(g) > gyarfas_bound(t, clique_number(g)):
                return False, f"colouring bound fails for P_{t}-free {to_graph6(g)}"
    rng = random.Random(seed)
    for i in range(samples):
        k, ell = rng.choice([(2, 3), (2, 4), (3, 3), (3, 4), (4, 3), (2, 5)])
        n = k ** (ell - 2) + 1 + rng.randint(0, 4)
        g = random_connected(n, rng.uniform(0.0, 0.3), rng.randrange(1 << 30))
        r = degree_or_path(g, k, ell)
        if r.tag == "notfound":
            return False, f"no high degree vertex or path for k={k}, l={ell}, {to_graph6(g)}"
    return True, f"243 sequences, {corpus} hereditary graphs, {samples} dichotomy samples"


# -- 11. pipelines -------------------------------------------------------------------

def fan_gadget(r: int) -> Graph:
    """Root ``0`` with children ``w_i``, each with a private child ``x_i``, and
    an induced path on the grandchildren ``y_i`` of ``x_i``."""
    e = [(0, i) for i in range(1, r + 1)]
    e += [(i, r + i) for i in range(1, r + 1)]
    e += [(r + i, 2 * r + i) for i in range(1, r + 1)]
    e += [(2 * r + i, 2 * r + i + 1) for i in range(1, r)]
    return Graph.from_edges(e, range(3 * r + 1))


def cycle_gadget() -> Graph:
    """Two levels above an induced path ``5..9``: ``3`` sees ``5, 6`` and
    ``4`` sees ``7, 8, 9``; ``3`` and ``4`` hang from ``1`` and ``2`` under ``0``."""
    e = [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (3, 6), (4, 7), (4, 8), (4, 9)]
    e += [(i, i + 1) for i in range(5, 9)]
    return Graph.from_edges(e, range(10))


def pipelines():
    from .extraction import pipeline_cycle, pipeline_fan

    out = pipeline_cycle(cycle_gadget(), 4)
    if not out or not verify_witness(out.certificate).ok:
        return False, "no C_4 on the cycle gadget"
    for s in range(50):
        g = random_bipartite_connected(4, 5, 0.4, s)
        if pipeline_cycle(g, 3):
            return False, f"C_3 claimed in a bipartite graph (seed {s})"
    for r, k in ((6, 2), (8, 3)):
        out = pipeline_fan(fan_gadget(r), k)
        if not out or not verify_witness(out.certificate).ok:
            return False, f"no F_{k} on the fan gadget"
    for s in range(30):
        if pipeline_fan(random_tree(9, s), 3):
            return False, f"F_3 claimed in a tree (seed {s})"
    return True, "gadgets solved; none reported on 50 bipartite graphs (k=3) and 30 trees (k=3)"


# -- 12. I/O --------------------------------------------------------------------------

CLI_CONTRACT = [
    # (argv, stdin, exit code, first stdout line or None)
    (["gen", "cycle", "5"], "", 0, "Dhc"),
    (["gen", "fan", "2"], "", 0, "Bw"),
    (["check", "pm", "-", "Bw"], "Dhc\n", 1, "none"),
    (["check", "pm", "Bw", "Dhc"], "", 0, "# pivot-minor"),
    (["check", "vm", "Bw", "Bw"], "", 0, "# vertex-minor"),
    (["check", "pm", "-", "-"], "Bw\n", 2, None),
    (["apply", "Dhc", "-"], "pv 0 1\ndel 0\ndel 1\n", 0, "Bw"),
    (["apply", "Dhc", "-"], "sm 0\ndel 9\n", 2, None),
    (["check", "pm", "D!!", "Dhc"], "", 2, None),
    (["gen", "nosuchfamily"], "", 2, None),
    (["extract", "cycle", "Dhc", "-k", "3"], "", 0, "# pivot-minor"),
    (["extract", "cycle", "Ch", "-k", "3"], "", 1, "none"),
]


def io_roundtrip(count: int = 1000, seed: int = 5):
    from .cli import run

    rng = random.Random(seed)
    for i in range(count):
        n = rng.choice([rng.randint(0, 12), rng.randint(13, 80)])
        g = random_graph(n, rng.random(), i)
        s = to_graph6(g)
        h = from_graph6(s)
        if h != g or to_graph6(h) != s:
            return False, f"graph6 round trip fails on graph {i}"
        ops = [Op(rng.choice(["lc", "del", "sm"]), (rng.randrange(99),)) for _ in range(5)]
        ops.append(Op("pv", (rng.randrange(99), rng.randrange(99))))
        if parse_trace(format_trace(ops)) != tuple(ops):
            return False, "trace round trip fails"
    for argv, stdin, code, first in CLI_CONTRACT:
        got, out, _ = run(argv, stdin)
        line = out.splitlines()[0] if out else None
        if got != code or (first is not None and line != first):
            return False, f"cli {' '.join(argv)}: exit {got}, first line {line!r}"
    return True, f"{count} graphs and traces round-tripped, {len(CLI_CONTRACT)} cli cases"


# -- registry ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Suite:
    title: str
    limit: float
    fn: Callable[[], tuple[bool, str]]


SUITES: dict[str, Suite] = {
    "algebra": Suite("LC and pivot identities", 10, algebra),
    "parity": Suite("cycle pivot-minor parity table", 300, parity),
    "shorten": Suite("cycle shortening", 1, shorten),
    "ladder": Suite("subdivided ladder to fan", 60, ladder_fan),
    "connectivity": Suite("connected elimination", 120, connectivity),
    "fan-cycles": Suite("cycles from consecutive and spaced fans", 1, fan_cycles),
    "kl-fans": Suite("(k,l)-fan reduction", 60, kl_fans),
    "incomplete-fans": Suite("incomplete fan to cycle", 600, incomplete_fans),
    "matchings": Suite("patched paths to induced matchings", 60, matchings),
    "dichotomies": Suite("monotone, colouring and degree/path dichotomies", 600, dichotomies),
    "pipelines": Suite("fan and cycle pipelines", 300, pipelines),
    "io": Suite("graph6, traces and cli contract", 10, io_roundtrip),
}


def run_suite(name: str) -> ClaimResult:
    s = SUITES[name]
    t = time.perf_counter()
    try:
        ok, detail = s.fn()
    except Exception as e:  # a crash is a failure, reported like one
        ok, detail = False, f"raised {type(e).__name__}: {e}"
    return ClaimResult(name, s.title, ok, detail, time.perf_counter() - t, s.limit)
