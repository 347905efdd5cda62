"""Executable theorem checks and exchange-graph enumeration.

Sign-coherence, unimodularity of cluster bases, injectivity of the
variable -> g-vector map, and the base-change transformation rule are all
checked with exact integer arithmetic over enumerated or sampled data.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import gvectors
from .gvectors import GCluster, GVector, phi_step
from .laurent import LaurentPoly, poly_text
from .oracle import PrincipalOracle
from .quiver import SkewMatrix, canonical_key, mutate

REPORT_FORMAT = "qlab-report-v1"


@dataclass(frozen=True)
class SignCoherenceResult:
    ok: bool
    coord: int | None = None
    pair: tuple[GVector, GVector] | None = None

    def witness_obj(self) -> dict | None:
        if self.ok:
            return None
        v, w = self.pair
        return {"coord": self.coord, "vectors": [list(v), list(w)]}


def check_sign_coherent(vectors: Iterable[GVector]) -> SignCoherenceResult:
    """Do the vectors lie in a single closed hyperquadrant?

    Fails with the first coordinate that is strictly positive in one
    vector and strictly negative in another, returning the offending pair.
    """
    vecs = list(vectors)
    if not vecs:
        return SignCoherenceResult(True)
    n = len(vecs[0])
    for i in range(n):
        pos = next((v for v in vecs if v[i] > 0), None)
        neg = next((v for v in vecs if v[i] < 0), None)
        if pos is not None and neg is not None:
            return SignCoherenceResult(False, i, (pos, neg))
    return SignCoherenceResult(True)


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    n = len(rows)
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        for r in range(c + 1, n):
            for c2 in range(c + 1, n):
                m[r][c2] = (m[r][c2] * m[c][c] - m[r][c] * m[c][c2]) // prev
            m[r][c] = 0
        prev = m[c][c]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class UnimodularResult:
    ok: bool
    det: int


def check_unimodular(cluster: GCluster) -> UnimodularResult:
    """Does the cluster form a basis of the free abelian group (|det| = 1)?"""
    cols = cluster.columns()
    n = len(cols)
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    d = int_det(rows)
    return UnimodularResult(d in (1, -1), d)


@dataclass
class NodeRecord:
    """One visited exchange-graph node, keyed by its first BFS path."""

    path: tuple[str, ...]
    b: SkewMatrix
    cluster: GCluster
    sign: SignCoherenceResult
    unimodular: UnimodularResult
    polys: dict[str, LaurentPoly] | None = None


@dataclass
class ExchangeGraphReport:
    base: SkewMatrix
    max_depth: int
    closed: bool
    nodes: list[NodeRecord]

    @property
    def clusters(self) -> int:
        return len(self.nodes)

    @property
    def variables(self) -> int:
        return len({v.coords for rec in self.nodes for v in rec.cluster.vectors.values()})

    @property
    def with_oracle(self) -> bool:
        return bool(self.nodes) and self.nodes[0].polys is not None

    def distinct_polynomials(self) -> int:
        if not self.with_oracle:
            raise ValueError("enumeration ran without the oracle")
        return len({p.key() for rec in self.nodes for p in rec.polys.values()})


def enumerate_graph(
    b0: SkewMatrix, max_depth: int, with_oracle: bool = False
) -> ExchangeGraphReport:
    """BFS over exchange-graph nodes up to the given tree depth.

    Node identity is the canonical key of (B, g-dagger cluster) up to
    simultaneous vertex permutation.  Immediate backtracking is skipped
    (tree edges are involutive).  The report is marked closed only if the
    frontier emptied before the depth cutoff.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    oracle = PrincipalOracle(b0) if with_oracle else None

    def probe(path: tuple[str, ...]) -> tuple[bytes, SkewMatrix, GCluster]:
        b = gvectors.walk(b0, path).b_at_node
        cluster = gvectors.g_dagger_cluster(b0, path)
        return canonical_key(b, cluster.columns()), b, cluster

    def make_record(path, b, cluster) -> NodeRecord:
        polys = None
        if oracle is not None:
            polys = {l: oracle.cluster_variable(path, l) for l in b0.vertices}
        return NodeRecord(
            path, b, cluster, check_sign_coherent(cluster.vectors.values()),
            check_unimodular(cluster), polys,
        )

    def children(path: tuple[str, ...]):
        last = path[-1] if path else None
        return (path + (k,) for k in b0.vertices if k != last)

    visited: set[bytes] = set()
    nodes: list[NodeRecord] = []
    key, b, cluster = probe(())
    visited.add(key)
    root = make_record((), b, cluster)
    nodes.append(root)
    level = [root]
    closed = False
    for _ in range(max_depth):
        next_level: list[NodeRecord] = []
        for rec in level:
            for child_path in children(rec.path):
                child_key, b, cluster = probe(child_path)
                if child_key in visited:
                    continue
                visited.add(child_key)
                child = make_record(child_path, b, cluster)
                nodes.append(child)
                next_level.append(child)
        if not next_level:
            closed = True
            break
        level = next_level
    else:
        # depth exhausted; closed only if the cutoff frontier has nothing new
        closed = all(
            probe(child_path)[0] in visited
            for rec in level
            for child_path in children(rec.path)
        )
    return ExchangeGraphReport(b0, max_depth, closed, nodes)


@dataclass(frozen=True)
class InjectivityResult:
    ok: bool
    witnesses: tuple[dict, ...] = ()


def check_injectivity(report: ExchangeGraphReport) -> InjectivityResult:
    """Equal Laurent polynomials <=> equal g-dagger vectors over all (node, slot)."""
    if not report.with_oracle:
        raise ValueError("injectivity requires an enumeration run with the oracle")
    by_poly: dict[tuple, dict] = {}
    by_gvec: dict[tuple[int, ...], dict] = {}
    witnesses: list[dict] = []
    for rec in report.nodes:
        for l in report.base.vertices:
            poly = rec.polys[l]
            gvec = rec.cluster.vectors[l]
            occurrence = {"path": list(rec.path), "slot": l}
            entry = by_poly.setdefault(poly.key(), {"gvec": gvec, "at": occurrence})
            if entry["gvec"].coords != gvec.coords:
                witnesses.append(
                    {
                        "kind": "not_well_defined",
                        "polynomial": poly_text(poly),
                        "gvectors": [list(entry["gvec"]), list(gvec)],
                        "occurrences": [entry["at"], occurrence],
                    }
                )
            entry2 = by_gvec.setdefault(
                gvec.coords, {"poly": poly, "at": occurrence}
            )
            if entry2["poly"].key() != poly.key():
                witnesses.append(
                    {
                        "kind": "collision",
                        "gvector": list(gvec),
                        "polynomials": [poly_text(entry2["poly"]), poly_text(poly)],
                        "occurrences": [entry2["at"], occurrence],
                    }
                )
    return InjectivityResult(not witnesses, tuple(witnesses))


@dataclass(frozen=True)
class TransformCheckResult:
    ok: bool
    checked: int
    mismatches: tuple[dict, ...] = ()


def transform_check(
    b0: SkewMatrix, k: str, samples: Iterable[tuple[Sequence[str], str]]
) -> TransformCheckResult:
    """Base-change rule: re-basing the oracle at mu_k matches the phi edge map.

    For each sampled (path, slot): the oracle g-vector from the mutated
    base, along the re-expressed path, must equal phi applied to the
    oracle g-vector from the original base.
    """
    b0.vertices.index(k)
    oracle0 = PrincipalOracle(b0)
    oracle1 = PrincipalOracle(mutate(b0, k))
    mismatches: list[dict] = []
    checked = 0
    for path, l in samples:
        steps = tuple(path)
        checked += 1
        g = oracle0.g_vector(steps, l)
        rebased = steps[1:] if steps and steps[0] == k else (k,) + steps
        g_new_base = oracle1.g_vector(rebased, l)
        expected = phi_step(g, b0, k)
        if g_new_base.coords != expected.coords:
            mismatches.append(
                {
                    "path": list(steps),
                    "slot": l,
                    "g": list(g),
                    "phi_image": list(expected),
                    "rebased_g": list(g_new_base),
                }
            )
    return TransformCheckResult(not mismatches, checked, tuple(mismatches))


def sample_transform_pairs(
    b0: SkewMatrix, count: int, max_len: int, seed: int = 0
) -> list[tuple[tuple[str, ...], str]]:
    """Deterministic (path, slot) sample for transform checks."""
    rng = random.Random(seed)
    labels = list(b0.vertices)
    out = []
    for _ in range(count):
        length = rng.randint(0, max_len)
        path = tuple(rng.choice(labels) for _ in range(length))
        out.append((path, rng.choice(labels)))
    return out


SUITES = ("sign", "basis", "inject", "transform", "all")


def run_suites(
    b0: SkewMatrix,
    suites: Sequence[str] = ("all",),
    depth: int = 8,
    transform_samples: int = 50,
    transform_max_len: int = 6,
    seed: int = 0,
) -> dict:
    """Run the requested verifier suites and assemble a qlab-report-v1 object."""
    wanted = set(suites)
    if "all" in wanted:
        wanted = {"sign", "basis", "inject", "transform"}
    unknown = wanted - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")

    report = enumerate_graph(b0, depth, with_oracle="inject" in wanted)
    checks: list[dict] = []
    if "sign" in wanted:
        failures = [
            {"path": list(rec.path), **rec.sign.witness_obj()}
            for rec in report.nodes
            if not rec.sign.ok
        ]
        checks.append({"name": "sign_coherence", "ok": not failures, "failures": failures})
    if "basis" in wanted:
        failures = [
            {"path": list(rec.path), "det": rec.unimodular.det}
            for rec in report.nodes
            if not rec.unimodular.ok
        ]
        checks.append({"name": "unimodular", "ok": not failures, "failures": failures})
    if "inject" in wanted:
        inj = check_injectivity(report)
        checks.append(
            {"name": "injectivity", "ok": inj.ok, "failures": list(inj.witnesses)}
        )
    if "transform" in wanted:
        failures = []
        ok = True
        for k in b0.vertices:
            pairs = sample_transform_pairs(b0, transform_samples, transform_max_len, seed)
            result = transform_check(b0, k, pairs)
            ok = ok and result.ok
            failures.extend({"k": k, **m} for m in result.mismatches)
        checks.append({"name": "transform", "ok": ok, "failures": failures})

    return {
        "format": REPORT_FORMAT,
        "vertices": list(b0.vertices.labels),
        "depth": depth,
        "closed": report.closed,
        "clusters": report.clusters,
        "variables": report.variables,
        "checks": checks,
        "nodes": [
            {
                "path": list(rec.path),
                "sign_coherent": rec.sign.ok,
                "det": rec.unimodular.det,
            }
            for rec in report.nodes
        ],
    }


def report_dumps(report_obj: dict) -> str:
    """Byte-stable report serialization (fixed field order, no whitespace)."""
    return json.dumps(report_obj, separators=(",", ":"))


def report_ok(report_obj: dict) -> bool:
    return all(check["ok"] for check in report_obj["checks"])
