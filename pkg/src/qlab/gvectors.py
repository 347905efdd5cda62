"""Walks in the mutation tree and the piecewise-linear g-dagger machinery.

Nodes of the regular tree carry mutated matrices; each edge at vertex k
carries a piecewise-linear map whose two linear branches differ in using
column k or row k of the source node's matrix.  Composing the edge maps
from a node back to the base node sends the standard basis vectors to the
g-dagger vectors of that node.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .quiver import SkewMatrix, UnknownVertex, VertexSet, mutate, positive_part


@dataclass(frozen=True)
class MutationPath:
    """Finite walk in the mutation tree, as a sequence of vertex labels."""

    steps: tuple[str, ...]

    @classmethod
    def parse(cls, text: str) -> "MutationPath":
        """Parse the comma-separated path literal, e.g. ``1,2,1``; '' is empty."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(part.strip() for part in text.split(",")))

    def __iter__(self) -> Iterator[str]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def literal(self) -> str:
        return ",".join(self.steps)


PathLike = "MutationPath | Sequence[str]"


def _steps(b: SkewMatrix, path) -> tuple[str, ...]:
    steps = tuple(path)
    for k in steps:
        b.vertices.index(k)
    return steps


@dataclass(frozen=True)
class GVector:
    """Integer vector in the coordinate order of the base vertex set."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, n: int) -> "GVector":
        return cls((0,) * n)

    @classmethod
    def basis(cls, n: int, i: int) -> "GVector":
        return cls(tuple(1 if j == i else 0 for j in range(n)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __len__(self) -> int:
        return len(self.coords)


def pos_neg_split(g: GVector) -> tuple[GVector, GVector]:
    """Unique decomposition g = p - q with p, q >= 0 of disjoint support."""
    p = tuple(positive_part(c) for c in g.coords)
    q = tuple(positive_part(-c) for c in g.coords)
    return GVector(p), GVector(q)


@dataclass(frozen=True)
class NodeState:
    """Endpoint of a walk: mutated matrix plus positional label tracking.

    Slots keep their vertex label; ``label_map`` records which initial
    indecomposable a slot still holds (the bare label) or that it has been
    replaced, with one star per replacement along the backtrack-free core
    of the walk.
    """

    path: MutationPath
    b_at_node: SkewMatrix
    label_map: Mapping[str, str]


def walk(b0: SkewMatrix, path) -> NodeState:
    steps = _steps(b0, path)
    b = b0
    for k in steps:
        b = mutate(b, k)
    # adjacent repeats cross the same tree edge twice, so they cancel
    reduced: list[str] = []
    for k in steps:
        if reduced and reduced[-1] == k:
            reduced.pop()
        else:
            reduced.append(k)
    stars = Counter(reduced)
    label_map = {l: l + "*" * stars[l] for l in b0.vertices}
    return NodeState(MutationPath(steps), b, label_map)


def prefix_matrices(b0: SkewMatrix, path) -> list[SkewMatrix]:
    """Matrices at every node along the walk, [B_t0, B_t1, ..., B_tN]."""
    steps = _steps(b0, path)
    mats = [b0]
    for k in steps:
        mats.append(mutate(mats[-1], k))
    return mats


def phi_plus(g: GVector, bt: SkewMatrix, k: str) -> GVector:
    """Linear branch: g'_k = -g_k and g'_j = g_j + [b_jk]_+ g_k for j != k."""
    pos = bt.vertices.index(k)
    if len(g) != len(bt.vertices):
        raise ValueError(f"vector of length {len(g)} against {len(bt.vertices)} vertices")
    gk = g[pos]
    out = [
        -gk if a == pos else g[a] + positive_part(bt.entry(j, k)) * gk
        for a, j in enumerate(bt.vertices)
    ]
    return GVector(tuple(out))


def phi_minus(g: GVector, bt: SkewMatrix, k: str) -> GVector:
    """Linear branch: g'_k = -g_k and g'_j = g_j + [b_kj]_+ g_k for j != k."""
    pos = bt.vertices.index(k)
    if len(g) != len(bt.vertices):
        raise ValueError(f"vector of length {len(g)} against {len(bt.vertices)} vertices")
    gk = g[pos]
    out = [
        -gk if a == pos else g[a] + positive_part(bt.entry(k, j)) * gk
        for a, j in enumerate(bt.vertices)
    ]
    return GVector(tuple(out))


def phi_step(g: GVector, bt: SkewMatrix, k: str) -> GVector:
    """Piecewise-linear edge map: the plus branch on g_k >= 0, minus on g_k <= 0.

    The branches agree on the wall g_k = 0; ties route through the plus
    branch for determinism.
    """
    pos = bt.vertices.index(k)
    if g[pos] >= 0:
        return phi_plus(g, bt, k)
    return phi_minus(g, bt, k)


def phi_path(g: GVector, b0: SkewMatrix, path) -> GVector:
    """Compose edge maps along the walk, each using its source node's matrix."""
    steps = _steps(b0, path)
    mats = prefix_matrices(b0, steps)
    for i, k in enumerate(steps):
        g = phi_step(g, mats[i], k)
    return g


def g_dagger_vector(b0: SkewMatrix, path, l: str) -> GVector:
    """g-dagger vector of slot l at the walk's endpoint.

    Image of the basis vector e_l under the edge maps composed from the
    endpoint back to the base node: the prefix matrices of the forward
    walk are consumed in reverse, the step crossing edge i using the
    matrix at node i (the source of that step in the reverse direction).
    """
    steps = _steps(b0, path)
    b0.vertices.index(l)
    mats = prefix_matrices(b0, steps)
    g = GVector.basis(len(b0.vertices), b0.vertices.index(l))
    for i in range(len(steps), 0, -1):
        g = phi_step(g, mats[i], steps[i - 1])
    return g


@dataclass(frozen=True)
class GCluster:
    """One g-dagger vector per vertex slot; vectors are pairwise distinct."""

    vertices: VertexSet
    vectors: Mapping[str, GVector]

    def __post_init__(self):
        if set(self.vectors) != set(self.vertices.labels):
            raise ValueError("cluster must assign exactly one vector per vertex")
        vecs = list(self.vectors.values())
        if len({v.coords for v in vecs}) != len(vecs):
            raise ValueError("cluster vectors must be pairwise distinct")

    def columns(self) -> list[tuple[int, ...]]:
        """Vector coordinates in slot order."""
        return [self.vectors[l].coords for l in self.vertices]


def g_dagger_cluster(b0: SkewMatrix, path) -> GCluster:
    steps = _steps(b0, path)
    mats = prefix_matrices(b0, steps)
    n = len(b0.vertices)
    vectors = {}
    for pos, l in enumerate(b0.vertices):
        g = GVector.basis(n, pos)
        for i in range(len(steps), 0, -1):
            g = phi_step(g, mats[i], steps[i - 1])
        vectors[l] = g
    return GCluster(b0.vertices, vectors)
