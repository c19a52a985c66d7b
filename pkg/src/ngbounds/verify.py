"""Per-graph bound evaluation and corpus sweeps.

A report is a pure function of the graph and the ``(k, j)`` ranges, so sweeps
can be split across worker processes and merged in any order.
"""

from __future__ import annotations

import csv
import io
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import invariants as inv
from .constructions import (
    HypothesisNotMet,
    ProofViolation,
    in_gamma_family,
    is_matching_graph,
    is_pi_isolate_pair,
    is_pi_plus_matching_decomposition,
    thm21_witness,
    thm22_witness,
    thm35_extremal_pair,
)
from .graph import (
    INFINITE,
    Graph,
    complement,
    diameter,
    from_edge_list,
    max_degree,
    min_degree,
    vertex_connectivity,
)
from .graph6 import Graph6Error, read_graph6, to_graph6
from .iso import enumerate_graphs

REPORT_SCHEMA = "ngbounds.report/1"
SUMMARY_SCHEMA = "ngbounds.summary/1"

THEOREM_IDS = (
    "T2.1", "T2.1-vs-Ineq1", "T2.2", "Ineq1", "Ineq2", "Ineq4", "Volkmann", "Prince",
    "T3.1-sum", "T3.1-prod", "T3.2-sum", "T3.2-prod", "T3.3-sum", "T3.3-prod",
    "T3.4-sum", "T3.4-prod", "T3.5-sum", "T3.5-prod", "L2-bound",
    "Edgeless-sum", "Edgeless-prod",
    "Aux-rho-le-gamma", "Aux-rho_o-le-gamma_t", "Aux-rho1-iff-diam2",
)

DEFAULT_K = (1, 2, 3)
DEFAULT_J = (0, 1)


@dataclass
class TheoremCheck:
    theorem_id: str
    hypothesis_met: bool
    lhs: int | None
    rhs: int | None
    holds: bool | None
    equality: bool | None
    recognizer_agrees: bool | None = None
    k: int | None = None
    j: int | None = None
    detail: dict = field(default_factory=dict)

    @property
    def counterexample(self) -> bool:
        return self.hypothesis_met and not self.holds

    @property
    def mismatch(self) -> bool:
        return self.hypothesis_met and (
            self.recognizer_agrees is False or self.detail.get("r_plus_s_positive") is False
        )

    def to_json(self) -> dict:
        out = {
            "theorem_id": self.theorem_id,
            "hypothesis_met": self.hypothesis_met,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "equality": self.equality,
            "recognizer_agrees": self.recognizer_agrees,
        }
        if self.k is not None:
            out["k"] = self.k
        if self.j is not None:
            out["j"] = self.j
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class TheoremReport:
    graph6: str
    n: int
    delta: int
    Delta: int
    kappa: int
    diam: float
    co_kappa: int
    co_diam: float
    params: dict
    checks: list

    def check(self, theorem_id: str, k: int | None = None, j: int | None = None) -> TheoremCheck:
        for c in self.checks:
            if c.theorem_id == theorem_id and c.k == k and c.j == j:
                return c
        raise KeyError((theorem_id, k, j))

    def to_json(self) -> dict:
        def d(x):
            return "INFINITE" if x == INFINITE else int(x)

        return {
            "schema": REPORT_SCHEMA,
            "graph6": self.graph6,
            "n": self.n,
            "delta": self.delta,
            "Delta": self.Delta,
            "kappa": self.kappa,
            "diam": d(self.diam),
            "complement": {"kappa": self.co_kappa, "diam": d(self.co_diam)},
            "params": {side: {k: r.to_json() for k, r in t.items()} for side, t in self.params.items()},
            "checks": [c.to_json() for c in self.checks],
        }


# -- parameter table ---------------------------------------------------------

def parameter_table(g: Graph, ks: Iterable[int] = DEFAULT_K, js: Iterable[int] = DEFAULT_J) -> dict:
    """Named parameters of ``g``; repeated ``(k, k', k'')`` triples are solved once."""
    ks, js = sorted(set(ks)), sorted(set(js))
    cache: dict = {}

    def kkk(a, b, c):
        if (a, b, c) not in cache:
            cache[a, b, c] = inv.gamma_kkk(g, a, b, c)
        return cache[a, b, c]

    table = {
        "gamma": kkk(0, 1, 0),
        "gamma_t": kkk(1, 1, 0),
        "dd": kkk(1, 2, 0),
        "gamma_r": kkk(0, 1, 1),
        "gamma_2r": kkk(1, 2, 1),
        "rho": inv.rho(g),
        "rho_o": inv.rho_o(g),
    }
    for k in sorted({2, *ks}):
        table[f"gamma_{k}"] = kkk(0, k, 0)
        table[f"L_{k}"] = inv.L_k(g, k)
    for k in ks:
        table[f"gamma_x{k}"] = kkk(k - 1, k, 0)
        table[f"L_{k},t"] = inv.L_kt(g, k)
        for j in js:
            table[f"gamma({k - 1},{k},{j})"] = kkk(k - 1, k, j)
    return table


def _v(table: dict, key: str) -> int | None:
    return table[key].value


def _sum(a, b):
    return None if a is None or b is None else a + b


def _bound_check(tid, hyp, lhs, rhs, recognizer=None, *, exact=False, k=None, j=None, **detail):
    if lhs is None or rhs is None:
        holds = None if not hyp else False
        eq = None
    else:
        holds = lhs == rhs if exact else lhs <= rhs
        eq = lhs == rhs
    agrees = None if recognizer is None or eq is None else (eq == recognizer)
    return TheoremCheck(tid, hyp, lhs, rhs, holds, eq, agrees, k, j, detail)


def _witness_detail(builder, g, co, *args) -> dict:
    out = {}
    for side, graph in (("G", g), ("co", co)):
        try:
            cert = builder(graph, *args)
            out[side] = cert.to_json()
        except ProofViolation as exc:
            out[side] = {"proof_violation": str(exc), "details": exc.details}
        except HypothesisNotMet as exc:
            out[side] = {"hypothesis_not_met": str(exc)}
    return out


def _witness_ok(detail: dict) -> bool:
    for side in ("G", "co"):
        w = detail[side]
        if "result_set" not in w or w["size"] != w["claimed_bound"]:
            return False
    return True


def evaluate_graph(g: Graph, ks: Iterable[int] = DEFAULT_K, js: Iterable[int] = DEFAULT_J,
                   gamma_variant: str = "literal") -> TheoremReport:
    """Evaluate every bound and equality characterisation on ``g`` and its complement."""
    ks, js = sorted(set(ks)), sorted(set(js))
    repaired = gamma_variant == "repaired"
    co = complement(g)
    n = g.n
    tg, tc = parameter_table(g, ks, js), parameter_table(co, ks, js)
    dg, dc = min_degree(g), min_degree(co)
    Dg, Dc = max_degree(g), max_degree(co)
    kg, kc = vertex_connectivity(g), vertex_connectivity(co)
    diam_g, diam_c = diameter(g), diameter(co)
    gg, gc = _v(tg, "gamma"), _v(tc, "gamma")
    checks: list[TheoremCheck] = []

    def both(key):
        return _sum(_v(tg, key), _v(tc, key))

    def prod(key):
        a, b = _v(tg, key), _v(tc, key)
        return None if a is None or b is None else a * b

    for k in ks:
        for j in js:
            hyp = gg >= k + j + 2 and gc >= k + j + 2
            rhs = dg + dc - (gg + gc) + 2 * k + 4
            detail = _witness_detail(thm21_witness, g, co, k, j) if hyp else {}
            c = _bound_check("T2.1", hyp, both(f"gamma({k - 1},{k},{j})"), rhs, k=k, j=j, **detail)
            if hyp and not _witness_ok(detail):
                c.holds = False
            checks.append(c)
            if (k, j) == (2, 0):
                # Stated improvement over Ineq1: rhs(T2.1) <= rhs(Ineq1) - (gamma + co-gamma - 8).
                checks.append(_bound_check(
                    "T2.1-vs-Ineq1", hyp, rhs, dg + dc - (gg + gc - 8), k=k, j=j,
                    below_delta_sum_minus_2=(rhs <= dg + dc - 2) if gg >= 5 and gc >= 5 else None,
                ))

    for k in ks:
        hyp = gg >= k + 2 and gc >= k + 2
        rhs = kg + kc - (gg + gc) + 2 * k + 4
        detail = _witness_detail(thm22_witness, g, co, k) if hyp else {}
        c = _bound_check("T2.2", hyp, both(f"gamma_{k}"), rhs, k=k, **detail)
        if hyp and not _witness_ok(detail):
            c.holds = False
        checks.append(c)

    checks.append(_bound_check("Ineq1", gg >= 5 and gc >= 5, both("dd"), dg + dc))
    checks.append(_bound_check("Ineq2", gg >= 4 and gc >= 4, both("dd"), dg + dc))
    for k in ks:
        checks.append(_bound_check("Ineq4", gg >= k + 2 and gc >= k + 2, both(f"gamma_x{k}"),
                                   dg + dc, k=k))
    checks.append(_bound_check("Volkmann", True, both("gamma_2"), n + 2))
    for k in ks:
        checks.append(_bound_check("Prince", True, both(f"gamma_{k}"), n + 2 * k - 1, k=k))

    # Packing number, split on the complement's domination number.
    hyp = Dg >= 1 and Dc >= 1
    if hyp:
        if gc == 1:
            rs, rp = n - Dg + 1, n - Dg
            rec = bool(in_gamma_family(g, repaired))
        elif gc == 2:
            rs, rp = n - Dg + 2, 2 * n - 2 * Dg
            rec = bool(in_gamma_family(g, repaired)) and diam_c >= 3
        else:
            rs, rp = dg + 2, dg + 1
            rec = bool(in_gamma_family(co, repaired))
        case = {"gamma_complement": gc, "gamma_variant": gamma_variant}
        checks.append(_bound_check("T3.1-sum", True, both("rho"), rs, rec, **case))
        checks.append(_bound_check("T3.1-prod", True, prod("rho"), rp, rec, **case))
    else:
        checks.append(_bound_check("T3.1-sum", False, both("rho"), None))
        checks.append(_bound_check("T3.1-prod", False, both("rho"), None))

    hyp = gc >= 3
    dec = is_pi_plus_matching_decomposition(co)
    extra = {}
    if dec.member:
        _, r, s = dec.decomposition
        extra = {"r": r, "s": s, "r_plus_s_positive": r + s >= 1}
    checks.append(_bound_check("T3.2-sum", hyp, both("rho_o"), dg + 3, dec.member, **extra))
    checks.append(_bound_check("T3.2-prod", hyp, prod("rho_o"), dg + 2, dec.member, **extra))

    hyp = n >= 3
    rec = is_pi_isolate_pair(g)
    checks.append(_bound_check("T3.3-sum", hyp, both("rho_o"), n - Dg + dg + 3, rec))
    checks.append(_bound_check("T3.3-prod", hyp, prod("rho_o"), (n - Dg + 1) * (dg + 2), rec))

    hyp = dg >= 1 and dc >= 1
    rec = is_matching_graph(g) or is_matching_graph(co)
    checks.append(_bound_check("T3.4-sum", hyp, both("gamma_t"), n + 2, rec))
    checks.append(_bound_check("T3.4-prod", hyp, prod("gamma_t"), 2 * n, rec))

    rec = thm35_extremal_pair(g)
    checks.append(_bound_check("T3.5-sum", True, both("rho_o"), n + 2, rec))
    checks.append(_bound_check("T3.5-prod", True, prod("rho_o"), 2 * n, rec))

    checks.append(_bound_check("L2-bound", True, both("L_2"), n + 2))

    hyp = Dg == 0 or Dc == 0
    checks.append(_bound_check("Edgeless-sum", hyp, both("rho_o"), n + 2 if n == 2 else n + 1,
                               exact=True))
    checks.append(_bound_check("Edgeless-prod", hyp, prod("rho_o"), n + 2 if n == 2 else n,
                               exact=True))

    checks.append(_bound_check("Aux-rho-le-gamma", True, _v(tg, "rho"), gg))
    checks.append(_bound_check("Aux-rho_o-le-gamma_t", dg >= 1, _v(tg, "rho_o"), _v(tg, "gamma_t")))
    rho_is_one = _v(tg, "rho") == 1
    checks.append(TheoremCheck("Aux-rho1-iff-diam2", True, _v(tg, "rho"), None,
                               rho_is_one == (diam_g <= 2), None,
                               detail={"diam": "INFINITE" if diam_g == INFINITE else int(diam_g)}))

    return TheoremReport(to_graph6(g), n, dg, Dg, kg, diam_g, kc, diam_c,
                         {"G": tg, "co": tc}, checks)


# -- corpus sweeps -----------------------------------------------------------

@dataclass
class TheoremTally:
    evaluated: int = 0
    hypothesis_hits: int = 0
    holds: int = 0
    counterexamples: list = field(default_factory=list)
    equality_graphs: list = field(default_factory=list)
    recognizer_checked: int = 0
    mismatches: list = field(default_factory=list)


@dataclass
class Summary:
    graphs: int = 0
    malformed: list = field(default_factory=list)
    tallies: dict = field(default_factory=dict)
    proof_violations: int = 0

    def add(self, report: TheoremReport) -> None:
        self.graphs += 1
        for c in report.checks:
            key = c.theorem_id if c.k is None else f"{c.theorem_id}[k={c.k}" + (
                f",j={c.j}]" if c.j is not None else "]")
            t = self.tallies.setdefault(key, TheoremTally())
            t.evaluated += 1
            if not c.hypothesis_met:
                continue
            t.hypothesis_hits += 1
            if c.holds:
                t.holds += 1
            else:
                t.counterexamples.append(report.graph6)
            if c.equality:
                t.equality_graphs.append(report.graph6)
            if c.recognizer_agrees is not None:
                t.recognizer_checked += 1
            if c.mismatch:
                t.mismatches.append(report.graph6)
            for side in ("G", "co"):
                if "proof_violation" in c.detail.get(side, {}):
                    self.proof_violations += 1

    @property
    def counterexample_count(self) -> int:
        return sum(len(t.counterexamples) for t in self.tallies.values())

    @property
    def mismatch_count(self) -> int:
        return sum(len(t.mismatches) for t in self.tallies.values())

    @property
    def exit_code(self) -> int:
        return 1 if self.counterexample_count or self.mismatch_count or self.proof_violations else 0

    def to_json(self) -> dict:
        return {
            "schema": SUMMARY_SCHEMA,
            "graphs": self.graphs,
            "malformed": self.malformed,
            "counterexamples": self.counterexample_count,
            "recognizer_mismatches": self.mismatch_count,
            "proof_violations": self.proof_violations,
            "theorems": {
                key: {
                    "evaluated": t.evaluated,
                    "hypothesis_hits": t.hypothesis_hits,
                    "counterexamples": t.counterexamples,
                    "equality_cases": len(t.equality_graphs),
                    "recognizer_checked": t.recognizer_checked,
                    "recognizer_mismatches": t.mismatches,
                }
                for key, t in sorted(self.tallies.items())
            },
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["schema_id", "theorem_id", "evaluated", "hypothesis_hits", "holds",
                    "counterexamples", "equality_cases", "recognizer_checked",
                    "recognizer_mismatches"])
        for key, t in sorted(self.tallies.items()):
            w.writerow([SUMMARY_SCHEMA, key, t.evaluated, t.hypothesis_hits, t.holds,
                        len(t.counterexamples), len(t.equality_graphs), t.recognizer_checked,
                        len(t.mismatches)])
        return buf.getvalue()

    def table(self) -> str:
        lines = [f"{'theorem':<28}{'evaluated':>10}{'hyp-hits':>10}{'cex':>6}{'equal':>7}{'mism':>6}"]
        for key, t in sorted(self.tallies.items()):
            lines.append(f"{key:<28}{t.evaluated:>10}{t.hypothesis_hits:>10}"
                         f"{len(t.counterexamples):>6}{len(t.equality_graphs):>7}{len(t.mismatches):>6}")
        lines.append(f"graphs={self.graphs} malformed={len(self.malformed)} "
                     f"counterexamples={self.counterexample_count} "
                     f"mismatches={self.mismatch_count} proof_violations={self.proof_violations}")
        return "\n".join(lines)


@dataclass(frozen=True)
class CorpusSpec:
    orders: tuple[int, ...] = ()
    iso: bool = True
    path: str | None = None


def iter_corpus(spec: CorpusSpec) -> Iterator[Graph | Graph6Error]:
    """Graphs from the built-in enumerator or a graph6 file (errors yielded in place)."""
    if spec.path is not None:
        with open(spec.path, encoding="ascii", errors="replace") as fh:
            for _, item in read_graph6(fh):
                yield item
        return
    for n in spec.orders:
        yield from enumerate_graphs(n, spec.iso)


def _evaluate_task(args):
    g, ks, js, variant = args
    return evaluate_graph(g, ks, js, variant)


def verify_corpus(spec: CorpusSpec, ks=DEFAULT_K, js=DEFAULT_J, jobs: int = 1,
                  gamma_variant: str = "literal", summary: Summary | None = None,
                  ) -> Iterator[TheoremReport]:
    """Stream reports in corpus order; ``summary`` (if given) is updated as they arrive."""
    summary = summary if summary is not None else Summary()
    ks, js = tuple(ks), tuple(js)
    graphs = []
    for item in iter_corpus(spec):
        if isinstance(item, Graph6Error):
            summary.malformed.append(str(item))
        else:
            graphs.append(item)
    tasks = ((g, ks, js, gamma_variant) for g in graphs)
    if jobs <= 1:
        results = map(_evaluate_task, tasks)
        for rep in results:
            summary.add(rep)
            yield rep
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for rep in pool.map(_evaluate_task, tasks, chunksize=16):
            summary.add(rep)
            yield rep


# -- randomised hypothesis hunt ----------------------------------------------

MAX_HUNT_ORDER = 24


def parse_target(target: str) -> tuple[str, int, int]:
    """``T2.1[:k[,j]]`` or ``T2.2[:k]`` -> (theorem, k, j)."""
    name, _, rest = target.partition(":")
    nums = [int(x) for x in rest.split(",") if x.strip()] if rest else []
    if name == "T2.1" and len(nums) <= 2:
        k, j = (nums + [1, 0][len(nums):])[:2]
        return name, k, j
    if name == "T2.2" and len(nums) <= 1:
        return name, (nums[0] if nums else 1), 0
    raise ValueError(f"unknown hunt target {target!r}")


def random_graph(n: int, rng: random.Random) -> Graph:
    """Each pair joined with probability 1/2, pairs drawn in column-major order."""
    return from_edge_list(n, [(i, j) for j in range(1, n) for i in range(j) if rng.random() < 0.5])


def hunt(n: int, trials: int, seed: int, target: str = "T2.1") -> dict:
    """First random graph meeting the target hypothesis, with its certificates."""
    if not 1 <= n <= MAX_HUNT_ORDER:
        raise ValueError(f"hunt order must be in 1..{MAX_HUNT_ORDER}")
    theorem, k, j = parse_target(target)
    need = k + j + 2 if theorem == "T2.1" else k + 2
    rng = random.Random(seed)
    for trial in range(trials):
        g = random_graph(n, rng)
        if inv.gamma(g).value < need:
            continue
        co = complement(g)
        if inv.gamma(co).value < need:
            continue
        builder = thm21_witness if theorem == "T2.1" else thm22_witness
        args = (k, j) if theorem == "T2.1" else (k,)
        return {
            "found": True,
            "target": target,
            "n": n,
            "seed": seed,
            "trial": trial,
            "graph6": to_graph6(g),
            "certificates": _witness_detail(builder, g, co, *args),
        }
    return {"found": False, "target": target, "n": n, "seed": seed, "trials": trials}
