"""Skew-symmetric integer matrices, their quiver view, and mutation.

A quiver without loops or 2-cycles on a labeled vertex set is the same
data as a skew-symmetric integer matrix B = (b_ij): the number of arrows
i -> j is max(b_ij, 0).  Everything here is exact integer arithmetic on
immutable values.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence

QUIVER_FORMAT = "qlab-quiver-v1"

# canonical_key enumerates all vertex permutations; beyond this it refuses
CANONICAL_KEY_MAX_VERTICES = 9


class QuiverError(Exception):
    """Base class for malformed quiver/matrix input."""


class UnknownVertex(QuiverError):
    """A vertex label outside the ambient vertex set."""

    def __init__(self, label: object):
        super().__init__(f"unknown vertex label {label!r}")
        self.label = label


class MalformedQuiver(QuiverError):
    """Structurally invalid quiver, matrix, or serialized input."""


def positive_part(x: int) -> int:
    """[x]_+ = max(x, 0)."""
    return x if x > 0 else 0


@dataclass(frozen=True)
class VertexSet:
    """Ordered finite set of distinct vertex labels.

    The creation order fixes the coordinate order used by every matrix,
    vector, and JSON array downstream; it is never re-sorted.
    """

    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise MalformedQuiver("vertex set must be non-empty")
        if len(set(self.labels)) != len(self.labels):
            raise MalformedQuiver(f"duplicate vertex labels in {self.labels!r}")
        if not all(isinstance(l, str) for l in self.labels):
            raise MalformedQuiver("vertex labels must be strings")
        object.__setattr__(self, "_pos", {l: i for i, l in enumerate(self.labels)})

    def index(self, label: str) -> int:
        try:
            return self._pos[label]
        except KeyError:
            raise UnknownVertex(label) from None

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._pos


@dataclass(frozen=True)
class SkewMatrix:
    """Skew-symmetric integer matrix over a labeled vertex set.

    Entries are stored sparsely as a sorted tuple of (i, j, b_ij) triples
    carrying both orientations and never a zero, so equality and hashing
    are structural.
    """

    vertices: VertexSet
    entries: tuple[tuple[str, str, int], ...]

    def __post_init__(self):
        lookup: dict[tuple[str, str], int] = {}
        for i, j, v in self.entries:
            self.vertices.index(i)
            self.vertices.index(j)
            if i == j:
                raise MalformedQuiver(f"loop entry at vertex {i!r}")
            if not isinstance(v, int) or isinstance(v, bool):
                raise MalformedQuiver(f"non-integer entry b[{i!r},{j!r}] = {v!r}")
            if v == 0:
                raise MalformedQuiver(f"explicit zero entry at ({i!r},{j!r})")
            if (i, j) in lookup:
                raise MalformedQuiver(f"duplicate entry at ({i!r},{j!r})")
            lookup[(i, j)] = v
        for (i, j), v in lookup.items():
            if lookup.get((j, i)) != -v:
                raise MalformedQuiver(
                    f"not skew-symmetric: b[{i!r},{j!r}]={v} but b[{j!r},{i!r}]={lookup.get((j, i), 0)}"
                )
        if self.entries != tuple(sorted(self.entries)):
            object.__setattr__(self, "entries", tuple(sorted(self.entries)))
        object.__setattr__(self, "_lookup", lookup)

    @classmethod
    def from_entries(
        cls, vertices: VertexSet, entries: Mapping[tuple[str, str], int]
    ) -> "SkewMatrix":
        """Build from any consistent subset of entries; the skew part is derived."""
        full: dict[tuple[str, str], int] = {}
        for (i, j), v in entries.items():
            if v == 0:
                continue
            if i == j:
                raise MalformedQuiver(f"loop entry at vertex {i!r}")
            for key, val in (((i, j), v), ((j, i), -v)):
                if key in full and full[key] != val:
                    raise MalformedQuiver(
                        f"conflicting entries at ({key[0]!r},{key[1]!r}): {full[key]} vs {val}"
                    )
                full[key] = val
        return cls(vertices, tuple(sorted((i, j, v) for (i, j), v in full.items())))

    @classmethod
    def from_rows(cls, labels: Sequence[str], rows: Sequence[Sequence[int]]) -> "SkewMatrix":
        vs = VertexSet(tuple(labels))
        n = len(vs)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise MalformedQuiver(f"expected a {n}x{n} matrix")
        entries = {}
        for a, i in enumerate(vs):
            for b, j in enumerate(vs):
                if rows[a][b]:
                    entries[(i, j)] = rows[a][b]
        return cls.from_entries(vs, entries)

    def entry(self, i: str, j: str) -> int:
        self.vertices.index(i)
        self.vertices.index(j)
        return self._lookup.get((i, j), 0)

    def rows(self) -> list[list[int]]:
        """Dense rows in vertex order."""
        return [
            [self._lookup.get((i, j), 0) for j in self.vertices] for i in self.vertices
        ]

    def items(self) -> Iterator[tuple[str, str, int]]:
        return iter(self.entries)


def mutate(b: SkewMatrix, k: str) -> SkewMatrix:
    """Fomin-Zelevinsky mutation at vertex k.

    b'_ij = -b_ij when i = k or j = k, and otherwise
    b'_ij = b_ij + sgn(b_ik) * [b_ik * b_kj]_+.  Involutive and
    skew-symmetry preserving.
    """
    b.vertices.index(k)
    new: dict[tuple[str, str], int] = {}
    col: dict[str, int] = {}  # i -> b_ik
    row: dict[str, int] = {}  # j -> b_kj
    for i, j, v in b.entries:
        new[(i, j)] = -v if (i == k or j == k) else v
        if j == k:
            col[i] = v
        elif i == k:
            row[j] = v
    for i, bik in col.items():
        sign = 1 if bik > 0 else -1
        for j, bkj in row.items():
            if i == j:
                continue
            prod = bik * bkj
            if prod > 0:
                new[(i, j)] = new.get((i, j), 0) + sign * prod
    return SkewMatrix(
        b.vertices, tuple(sorted((i, j, v) for (i, j), v in new.items() if v))
    )


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph without loops or 2-cycles."""

    vertices: VertexSet
    arrows: tuple[tuple[str, str], ...]

    def __post_init__(self):
        for s, t in self.arrows:
            self.vertices.index(s)
            self.vertices.index(t)
            if s == t:
                raise MalformedQuiver(f"loop at vertex {s!r}")
        pairs = {(s, t) for s, t in self.arrows}
        for s, t in pairs:
            if (t, s) in pairs:
                raise MalformedQuiver(f"2-cycle between {s!r} and {t!r}")
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))

    def arrow_counts(self) -> Counter:
        return Counter(self.arrows)


def quiver_of(b: SkewMatrix) -> Quiver:
    """The quiver with [b_ij]_+ arrows i -> j."""
    arrows: list[tuple[str, str]] = []
    for i, j, v in b.entries:
        if v > 0:
            arrows.extend([(i, j)] * v)
    return Quiver(b.vertices, tuple(sorted(arrows)))


def matrix_of(q: Quiver) -> SkewMatrix:
    """Inverse of quiver_of: b_ij = (number of arrows i -> j) - (arrows j -> i)."""
    entries = {pair: count for pair, count in q.arrow_counts().items()}
    return SkewMatrix.from_entries(q.vertices, entries)


def canonical_key(
    b: SkewMatrix, extra: Sequence[Sequence[int]] | None = None
) -> bytes:
    """Deduplication key, invariant under simultaneous vertex relabeling.

    Minimizes the (matrix, attached-vector list) pair over all vertex
    permutations; the permutation acts on matrix rows/columns and on the
    positions of the attached vectors, never on their coordinates.  Exact
    by construction (no hashing), exponential in the vertex count, hence
    the hard size limit.
    """
    n = len(b.vertices)
    if n > CANONICAL_KEY_MAX_VERTICES:
        raise ValueError(
            f"canonical_key supports at most {CANONICAL_KEY_MAX_VERTICES} vertices, got {n}"
        )
    rows = b.rows()
    vecs: tuple[tuple[int, ...], ...] | None = None
    if extra is not None:
        vecs = tuple(tuple(getattr(v, "coords", v)) for v in extra)
        if len(vecs) != n:
            raise ValueError(f"expected {n} attached vectors, got {len(vecs)}")
    best = None
    for perm in permutations(range(n)):
        mat = tuple(tuple(rows[perm[a]][perm[c]] for c in range(n)) for a in range(n))
        cand = (mat,) if vecs is None else (mat, tuple(vecs[perm[a]] for a in range(n)))
        if best is None or cand < best:
            best = cand
    return repr(best).encode("ascii")


def quiver_to_obj(b: SkewMatrix) -> dict:
    """JSON object in the qlab-quiver-v1 format (positive entries only, sorted)."""
    triples = sorted([i, j, v] for i, j, v in b.entries if v > 0)
    return {
        "format": QUIVER_FORMAT,
        "vertices": list(b.vertices.labels),
        "b": triples,
    }


def quiver_from_obj(obj: object) -> SkewMatrix:
    if not isinstance(obj, dict):
        raise MalformedQuiver("quiver JSON must be an object")
    if obj.get("format") != QUIVER_FORMAT:
        raise MalformedQuiver(f"expected format {QUIVER_FORMAT!r}, got {obj.get('format')!r}")
    labels = obj.get("vertices")
    if not isinstance(labels, list) or not all(isinstance(l, str) for l in labels):
        raise MalformedQuiver("'vertices' must be a list of strings")
    vs = VertexSet(tuple(labels))
    triples = obj.get("b")
    if not isinstance(triples, list):
        raise MalformedQuiver("'b' must be a list of [i, j, b_ij] triples")
    entries: dict[tuple[str, str], int] = {}
    for t in triples:
        if not (isinstance(t, list) and len(t) == 3):
            raise MalformedQuiver(f"bad triple {t!r}")
        i, j, v = t
        if not (isinstance(i, str) and isinstance(j, str)):
            raise MalformedQuiver(f"bad labels in triple {t!r}")
        if i not in vs:
            raise UnknownVertex(i)
        if j not in vs:
            raise UnknownVertex(j)
        if not isinstance(v, int) or isinstance(v, bool) or v <= 0:
            raise MalformedQuiver(f"entry b[{i!r},{j!r}] must be a positive integer, got {v!r}")
        if (i, j) in entries or (j, i) in entries:
            raise MalformedQuiver(f"duplicate or two-sided pair ({i!r},{j!r})")
        entries[(i, j)] = v
    return SkewMatrix.from_entries(vs, entries)


def quiver_dumps(b: SkewMatrix) -> str:
    """Bit-exact serialization: fixed field order, sorted triples, no whitespace."""
    return json.dumps(quiver_to_obj(b), separators=(",", ":"))


def quiver_loads(text: str | bytes) -> SkewMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedQuiver(f"invalid JSON: {exc}") from None
    return quiver_from_obj(obj)
