"""Independent ground truth: the cluster algebra with principal coefficients.

Cluster variables are computed as exact Laurent polynomials; coefficients
are realized tropically through an integer C-matrix, so seed mutation is
exact integer linear algebra plus one polynomial exchange division.  The
g-vector of a variable is its degree under the grading fixed by the
initial matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .gvectors import GVector
from .laurent import ExactDivisionError, LaurentPoly, exact_div, poly_text
from .quiver import SkewMatrix, VertexSet, mutate, positive_part


class OracleCorruption(Exception):
    """Internal-state violation that theory rules out (e.g. sign-incoherent C column)."""


class InhomogeneousPolynomial(Exception):
    """A polynomial expected to be graded-homogeneous is not."""


@dataclass(frozen=True)
class Grading:
    """Z^n-grading with deg(x_i) = e_i and deg(y_j) = -(column j of the initial B)."""

    vertices: VertexSet
    y_degrees: tuple[tuple[int, ...], ...]

    @classmethod
    def from_matrix(cls, b0: SkewMatrix) -> "Grading":
        rows = b0.rows()
        n = len(b0.vertices)
        cols = tuple(tuple(-rows[i][j] for i in range(n)) for j in range(n))
        return cls(b0.vertices, cols)

    def term_degree(self, xexp, yexp) -> tuple[int, ...]:
        deg = list(xexp)
        for j, e in enumerate(yexp):
            if e:
                for i, d in enumerate(self.y_degrees[j]):
                    deg[i] += e * d
        return tuple(deg)


def degree(p: LaurentPoly, grading: Grading) -> GVector:
    """Common degree of all terms; inhomogeneity is a hard correctness failure."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no degree")
    it = iter(sorted(p.terms))
    first = next(it)
    deg = grading.term_degree(*first)
    for key in it:
        other = grading.term_degree(*key)
        if other != deg:
            labels = p.vertices.labels
            raise InhomogeneousPolynomial(
                "inhomogeneous polynomial: term "
                f"{_term_text(labels, first)} has degree {deg} but "
                f"{_term_text(labels, key)} has degree {other}"
            )
    return GVector(deg)


def _term_text(labels, key) -> str:
    from .laurent import _monomial_text

    return _monomial_text(labels, key[0], key[1])


@dataclass(frozen=True)
class ExtendedSeed:
    """Seed data at a tree node: B-matrix, C-matrix columns, cluster variables."""

    b: SkewMatrix
    c: Mapping[str, tuple[int, ...]]
    xs: Mapping[str, LaurentPoly]

    @classmethod
    def initial(cls, b0: SkewMatrix) -> "ExtendedSeed":
        n = len(b0.vertices)
        c = {
            l: tuple(1 if a == i else 0 for a in range(n))
            for i, l in enumerate(b0.vertices)
        }
        xs = {l: LaurentPoly.x_var(b0.vertices, l) for l in b0.vertices}
        return cls(b0, c, xs)


def seed_mutate(seed: ExtendedSeed, k: str) -> ExtendedSeed:
    """Principal-coefficient seed mutation at vertex k.

    The C column at k must be sign-coherent; the exchange division is
    exact whenever the Laurent phenomenon holds, so an inexact division
    surfaces as a hard error rather than being patched over.
    """
    vs = seed.b.vertices
    vs.index(k)
    ck = seed.c[k]
    nonneg = all(v >= 0 for v in ck)
    nonpos = all(v <= 0 for v in ck)
    if not (nonneg or nonpos):
        raise OracleCorruption(f"sign-incoherent C column at {k!r}: {ck}")

    new_c: dict[str, tuple[int, ...]] = {}
    for j in vs:
        if j == k:
            new_c[j] = tuple(-v for v in ck)
        else:
            bkj = seed.b.entry(k, j)
            coeff = positive_part(bkj) if nonneg else positive_part(-bkj)
            new_c[j] = tuple(a + coeff * b for a, b in zip(seed.c[j], ck))

    pos_side = LaurentPoly.monomial(vs, yexp=tuple(positive_part(v) for v in ck))
    neg_side = LaurentPoly.monomial(vs, yexp=tuple(positive_part(-v) for v in ck))
    for i in vs:
        bik = seed.b.entry(i, k)
        if bik > 0:
            pos_side = pos_side * seed.xs[i] ** bik
        elif bik < 0:
            neg_side = neg_side * seed.xs[i] ** (-bik)
    new_xk = exact_div(pos_side + neg_side, seed.xs[k])

    new_xs = dict(seed.xs)
    new_xs[k] = new_xk
    return ExtendedSeed(mutate(seed.b, k), new_c, new_xs)


class PrincipalOracle:
    """Memoized seed pattern rooted at a fixed initial matrix.

    Seeds are cached by path prefix; cached entries are immutable, so the
    memo behaves as an idempotent insert-only map.
    """

    def __init__(self, b0: SkewMatrix):
        self.b0 = b0
        self.grading = Grading.from_matrix(b0)
        self._seeds: dict[tuple[str, ...], ExtendedSeed] = {(): ExtendedSeed.initial(b0)}

    def seed(self, path) -> ExtendedSeed:
        steps = tuple(path)
        for i in range(len(steps)):
            prefix = steps[: i + 1]
            if prefix not in self._seeds:
                self._seeds[prefix] = seed_mutate(self._seeds[prefix[:-1]], steps[i])
        return self._seeds[steps]

    def cluster_variable(self, path, l: str) -> LaurentPoly:
        seed = self.seed(path)
        self.b0.vertices.index(l)
        return seed.xs[l]

    def g_vector(self, path, l: str) -> GVector:
        return degree(self.cluster_variable(path, l), self.grading)


def cluster_variable(b0: SkewMatrix, path, l: str) -> LaurentPoly:
    """Cluster variable in slot l at the end of the walk (fresh, unmemoized)."""
    return PrincipalOracle(b0).cluster_variable(path, l)


def g_oracle(b0: SkewMatrix, path, l: str) -> GVector:
    """Ground-truth g-vector: the graded degree of the slot's cluster variable."""
    oracle = PrincipalOracle(b0)
    return oracle.g_vector(path, l)
