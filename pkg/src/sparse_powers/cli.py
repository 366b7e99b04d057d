"""``sparse-powers`` command line.

Every command prints one JSON report on stdout and writes artifacts (graphs,
colourings, clique lists) to ``--output``. Exit status: 0 when every
assertion holds, 1 when one fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import verify
from .cliques import (
    SEMI_LADDER_AUTO_LIMIT,
    apx_clique,
    bron_kerbosch,
    enumerate_maximal_cliques_semiladder,
    is_clique,
    max_clique_exact,
    semi_ladder_index,
)
from .clustering import build_clustering, verify_clustering_bound
from .errors import DomainError, FormatError, SizeLimitError, ValidationError
from .gadgets import DEFAULT_BUDGET, gadget_power_cliques, planar_subchromatic_family
from .graph import Graph, format_graph, parse_graph_with_stats, power
from .oracles import EXACT_CHROMATIC_LIMIT, check_sandwich, exact_chromatic, validate_elimination_forest
from .orderings import (
    EXACT_WCOL_LIMIT,
    VertexOrdering,
    degeneracy_ordering,
    exact_wcol,
    parse_ordering,
    wcol_of_ordering,
)
from .subcoloring import (
    EXACT_SUBCHROMATIC_LIMIT,
    exact_subchromatic,
    subcolor_via_quotient,
    validate_subcoloring,
    xi_subcolor,
)

SCHEMA = "sparse-powers/1"
OMEGA_LIMIT = 200


class Run:
    """Collects the pieces of one report."""

    def __init__(self, argv: list[str], args: argparse.Namespace):
        self.argv = argv
        self.args = args
        self.digests: dict[str, str] = {}
        self.results: dict = {}
        self.assertions: list[dict] = []
        self.outputs: list[str] = []
        self.started = time.perf_counter()

    def read(self, path: str) -> str:
        data = Path(path).read_bytes()
        self.digests[path] = hashlib.sha256(data).hexdigest()
        return data.decode("utf-8")

    def write(self, path: str, text: str) -> None:
        Path(path).write_text(text, encoding="utf-8")
        self.outputs.append(path)

    def check(self, name: str, claim: str, passed: bool, **detail) -> None:
        self.assertions.append({"name": name, "claim": claim, "passed": bool(passed), **detail})

    def report(self, params: dict) -> dict:
        out = {
            "schema": SCHEMA,
            "command": self.argv,
            "input_digest": self.digests,
            "parameters": params,
            "results": self.results,
            "assertions": self.assertions,
            "outputs": self.outputs,
            "passed": all(a["passed"] for a in self.assertions),
        }
        if getattr(self.args, "timing", False):
            out["wall_time_s"] = round(time.perf_counter() - self.started, 3)
        return out


def _load_graph(run: Run, path: str | None) -> Graph:
    if not path:
        raise DomainError("--input is required")
    g, dups = parse_graph_with_stats(run.read(path))
    run.results["input"] = {"n": g.n, "m": g.m, "duplicate_edges": dups}
    return g


def _ordering(run: Run, g: Graph, spec: str, radius: int) -> VertexOrdering:
    if spec == "degeneracy":
        order = degeneracy_ordering(g)[0] if g.n else VertexOrdering.identity(0)
    elif spec == "exhaustive":
        _, order = exact_wcol(g, radius, run.args.limit_wcol)
    elif spec.startswith("file:"):
        order = parse_ordering(run.read(spec[5:]))
        order.check(g)
    else:
        raise DomainError(f"unknown ordering {spec!r}")
    run.results["ordering"] = {"kind": spec.split(":")[0], "radius_optimised": radius if spec == "exhaustive" else None}
    return order


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_power(run: Run) -> dict:
    a = run.args
    g = _load_graph(run, a.input)
    gd = power(g, a.d)
    if a.output:
        run.write(a.output, format_graph(gd))
    run.results["power"] = {"d": a.d, "n": gd.n, "m": gd.m}
    return {"d": a.d}


def cmd_cluster(run: Run) -> dict:
    a = run.args
    g = _load_graph(run, a.input)
    order = _ordering(run, g, a.ordering, 2 * a.d * a.r)
    clustering = build_clustering(g, order, a.d)
    gd = power(g, a.d)
    rep = verify_clustering_bound(g, order, a.d, a.r, clustering, gd)
    if a.output:
        run.write(a.output, clustering.format())
    run.results["bound"] = rep.as_dict()
    run.check(
        "blocks-are-cliques-in-power",
        "leader fibres are cliques of G^d",
        all(is_clique(gd, b) for b in clustering.blocks),
    )
    run.check(
        "quotient-wreach-bound-per-block",
        "|WReach_r[G^d/X, tau, A]| <= |WReach_2dr[G, sigma, lead(A)]|",
        not rep.per_block_violations,
    )
    run.check("quotient-wcol-bound", "wcol_r(G^d/X, tau) <= wcol_2dr(G, sigma)", rep.lhs <= rep.rhs)
    run.check(
        "leader-in-common-wreach",
        "lead(A) in WReach_{floor(d/2)}[a] for all a in A",
        not rep.leader_not_common,
    )
    return {"d": a.d, "r": a.r, "ordering": a.ordering}


def cmd_subcolor(run: Run) -> dict:
    a = run.args
    g = _load_graph(run, a.input)
    radius = 2 * a.d if a.method == "quotient" else a.d
    order = _ordering(run, g, a.ordering, radius)
    if a.method == "quotient":
        sc = subcolor_via_quotient(g, order, a.d)
    else:
        sc = xi_subcolor(g, order, a.d)
    gd = power(g, a.d)
    val = validate_subcoloring(gd, sc)
    if a.output:
        run.write(a.output, sc.format())
    wcol = wcol_of_ordering(g, order, radius)
    run.results["subcoloring"] = {"method": a.method, "palette": sc.palette, f"wcol_{radius}": wcol}
    run.results["validation"] = val.as_dict()
    run.check("subcoloring-valid", "every colour class induces a cluster graph in G^d", val.valid)
    if a.method == "quotient":
        run.check("quotient-palette-le-wcol-2d", "palette <= wcol_2d(G, sigma)", sc.palette <= wcol)
    return {"d": a.d, "method": a.method, "ordering": a.ordering}


def cmd_apxclique(run: Run) -> dict:
    a = run.args
    h = _load_graph(run, a.input)
    rep = apx_clique(h)
    if h.n <= a.limit_omega:
        rep.omega = len(max_clique_exact(h))
    if a.output:
        run.write(a.output, " ".join(map(str, rep.clique)) + "\n")
    run.results["clique"] = rep.as_dict()
    run.check("apx-clique-is-clique", "ApxClique returns a clique", is_clique(h, rep.clique))
    run.check(
        "apx-witness-semi-ladder",
        "picked vertices and recorded non-neighbours form a semi-ladder",
        rep.witness.is_valid(h) and len(rep.witness) == rep.rounds,
    )
    return {}


def cmd_cliques(run: Run) -> dict:
    a = run.args
    h = _load_graph(run, a.input)
    index = None
    if a.q == "auto":
        if h.n > a.limit_semiladder:
            raise DomainError(f"--q auto needs n <= {a.limit_semiladder} (got {h.n}); pass an explicit --q")
        ladder = semi_ladder_index(h)
        index = ladder.k
        q = max(1, ladder.k)
        complete = ladder.complete
    else:
        try:
            q = int(a.q)
        except ValueError:
            raise DomainError(f"--q must be 'auto' or an integer, got {a.q!r}") from None
        complete = False
    enum = enumerate_maximal_cliques_semiladder(h, q)
    cliques = sorted(sorted(c) for c in enum.cliques)
    if a.output:
        run.write(a.output, "".join(" ".join(map(str, c)) + "\n" for c in cliques))
    run.results["enumeration"] = {
        "q": q,
        "semi_ladder_index": index,
        "complete": complete,
        "cliques": len(cliques),
        "examined_subsets": enum.examined,
        "skipped_subsets": enum.skipped,
    }
    if a.crosscheck == "on":
        bk = bron_kerbosch(h)
        run.results["enumeration"]["bron_kerbosch"] = len(bk)
        if complete:
            run.check("enumeration-equals-bron-kerbosch", "complete enumeration finds every maximal clique", bk == enum.cliques)
        run.check("enumeration-sound", "every enumerated set is a maximal clique", enum.cliques <= bk)
    return {"q": a.q, "crosscheck": a.crosscheck}


def cmd_gadget(run: Run) -> dict:
    a = run.args
    if a.kind == "power-cliques":
        out = gadget_power_cliques(a.n, a.d, a.budget)
    else:
        out = planar_subchromatic_family(a.branching, a.depth, a.budget)
    g = out.graph
    if a.output:
        run.write(a.output, format_graph(g))
        run.write(a.output + ".labels", out.format_labels())
        if out.certificate is not None:
            run.write(a.output + ".forest", out.certificate.format())
    res = {"kind": a.kind, **out.params, "n_vertices": g.n, "m": g.m}
    if out.certificate is not None:
        ok = validate_elimination_forest(g, out.certificate)
        res["certificate_depth"] = out.certificate.depth
        run.check(
            "gadget-treedepth-certificate",
            "elimination forest valid with depth <= 2d + 2",
            ok and out.certificate.depth <= 2 * a.d + 2,
        )
    if out.planar is not None:
        res["planar"] = out.planar
        run.check("planar-family-planar", "tree-plus-gadget family is planar", out.planar)
    run.results["gadget"] = res
    return dict(out.params)


def cmd_verify(run: Run) -> dict:
    a = run.args
    run.results = verify.run_suite(a.suite, a.seed, a.count, a.size)
    run.assertions = run.results.pop("assertions")
    return {"suite": a.suite, "seed": a.seed, "count": a.count, "size": a.size}


def cmd_oracle(run: Run) -> dict:
    a = run.args
    g = _load_graph(run, a.input)
    h = power(g, a.d) if a.d > 1 else g
    if a.kind == "chi":
        value = exact_chromatic(h, a.limit_chi)
    elif a.kind == "omega":
        value = len(max_clique_exact(h))
    elif a.kind == "chisub":
        value = exact_subchromatic(h, a.limit_chisub)
    elif a.kind == "wcol":
        value, order = exact_wcol(h, a.r, a.limit_wcol)
        run.results["witness"] = list(order.sequence)
    else:
        rep = check_sandwich(h, a.limit_chi)
        run.results["sandwich"] = rep.as_dict()
        run.check("omega-chi-col-sandwich", "omega <= chi <= col", rep.passed)
        value = None
    run.results["value"] = value
    return {"kind": a.kind, "d": a.d, "r": a.r if a.kind == "wcol" else None}


COMMANDS = {
    "power": cmd_power,
    "cluster": cmd_cluster,
    "subcolor": cmd_subcolor,
    "apxclique": cmd_apxclique,
    "cliques": cmd_cliques,
    "gadget": cmd_gadget,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sparse-powers", description="Clustering and colouring powers of sparse graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="edge-list file")
    common.add_argument("--output", help="artifact file to write")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")
    common.add_argument("--limit-chi", type=int, default=EXACT_CHROMATIC_LIMIT)
    common.add_argument("--limit-chisub", type=int, default=EXACT_SUBCHROMATIC_LIMIT)
    common.add_argument("--limit-wcol", type=int, default=EXACT_WCOL_LIMIT)
    common.add_argument("--limit-omega", type=int, default=OMEGA_LIMIT)
    common.add_argument("--limit-semiladder", type=int, default=SEMI_LADDER_AUTO_LIMIT)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    s = add("power", "write the d-th power of the input graph")
    s.add_argument("--d", type=int, required=True)

    ordering_help = "degeneracy | exhaustive | file:<path>"
    s = add("cluster", "leader clustering of G^d and its quotient bound")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--ordering", default="degeneracy", help=ordering_help)

    s = add("subcolor", "subcolouring of G^d")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--method", choices=["quotient", "xi"], default="quotient")
    s.add_argument("--ordering", default="degeneracy", help=ordering_help)

    add("apxclique", "approximate maximum clique")

    s = add("cliques", "enumerate maximal cliques via neighbourhood intersections")
    s.add_argument("--q", default="auto")
    s.add_argument("--crosscheck", choices=["on", "off"], default="off")

    s = add("gadget", "generate an explicit construction")
    s.add_argument("--kind", choices=["power-cliques", "planar5"], required=True)
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--branching", type=int, default=2)
    s.add_argument("--depth", type=int, default=2)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    s = add("verify", "seeded batch verification")
    s.add_argument("--suite", choices=list(verify.SUITES), required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=20)
    s.add_argument("--size", type=int, default=60)

    s = add("oracle", "exact value of a graph parameter")
    s.add_argument("--kind", choices=["chi", "omega", "chisub", "wcol", "sandwich"], required=True)
    s.add_argument("--d", type=int, default=1, help="apply to the d-th power of the input")
    s.add_argument("--r", type=int, default=1)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    run = Run(argv, args)
    try:
        params = COMMANDS[args.command](run)
    except (FormatError, DomainError, SizeLimitError, OSError, UnicodeDecodeError) as exc:
        print(f"sparse-powers: error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        run.check("internal-validation", "constructed structure satisfies its invariants", False, error=str(exc))
        params = {}
    report = run.report(params)
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
