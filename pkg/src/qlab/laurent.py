"""Sparse exact arithmetic in Z[x_1^{+-1}, ..., x_n^{+-1}, y_1, ..., y_n].

Terms are keyed by an (x-exponent tuple, y-exponent tuple) pair indexed by
the ambient vertex set; coefficients are arbitrary-precision integers and
zero coefficients are never stored.  y-exponents must stay non-negative
(the y's are not invertible).
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .quiver import VertexSet

TermKey = tuple[tuple[int, ...], tuple[int, ...]]


class ExactDivisionError(ArithmeticError):
    """Division that was required to be exact left a remainder."""

    def __init__(self, message: str, remainder: "LaurentPoly | None" = None):
        super().__init__(message)
        self.remainder = remainder


class LaurentPoly:
    """Immutable sparse Laurent polynomial over a fixed vertex set."""

    __slots__ = ("vertices", "terms", "_hash")

    def __init__(self, vertices: VertexSet, terms: Mapping[TermKey, int]):
        n = len(vertices)
        clean: dict[TermKey, int] = {}
        for (xe, ye), c in terms.items():
            if c == 0:
                continue
            xe = tuple(xe)
            ye = tuple(ye)
            if len(xe) != n or len(ye) != n:
                raise ValueError(f"exponent tuples must have length {n}")
            if any(e < 0 for e in ye):
                raise ValueError(f"negative y-exponent in term {(xe, ye)}")
            clean[(xe, ye)] = c
        self.vertices = vertices
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, vertices: VertexSet) -> "LaurentPoly":
        return cls(vertices, {})

    @classmethod
    def one(cls, vertices: VertexSet) -> "LaurentPoly":
        return cls.monomial(vertices)

    @classmethod
    def monomial(
        cls,
        vertices: VertexSet,
        xexp: Iterable[int] | None = None,
        yexp: Iterable[int] | None = None,
        coef: int = 1,
    ) -> "LaurentPoly":
        n = len(vertices)
        xe = tuple(xexp) if xexp is not None else (0,) * n
        ye = tuple(yexp) if yexp is not None else (0,) * n
        return cls(vertices, {(xe, ye): coef})

    @classmethod
    def x_var(cls, vertices: VertexSet, label: str) -> "LaurentPoly":
        i = vertices.index(label)
        n = len(vertices)
        return cls.monomial(vertices, tuple(1 if a == i else 0 for a in range(n)))

    @classmethod
    def y_var(cls, vertices: VertexSet, label: str) -> "LaurentPoly":
        i = vertices.index(label)
        n = len(vertices)
        return cls.monomial(vertices, yexp=tuple(1 if a == i else 0 for a in range(n)))

    def is_zero(self) -> bool:
        return not self.terms

    def key(self) -> tuple:
        """Canonical hashable form (sorted term list)."""
        return tuple(sorted(self.terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vertices == other.vertices and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, self.key()))
        return self._hash

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_ambient(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return LaurentPoly(self.vertices, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.vertices, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_ambient(other)
        out: dict[TermKey, int] = {}
        for (xa, ya), ca in self.terms.items():
            for (xb, yb), cb in other.terms.items():
                key = (
                    tuple(a + b for a, b in zip(xa, xb)),
                    tuple(a + b for a, b in zip(ya, yb)),
                )
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return LaurentPoly(self.vertices, out)

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            raise ValueError("negative powers are only defined for monomials; use exact_div")
        result = LaurentPoly.one(self.vertices)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def _check_ambient(self, other: "LaurentPoly") -> None:
        if self.vertices != other.vertices:
            raise ValueError("polynomials over different vertex sets")

    def __repr__(self) -> str:
        return f"LaurentPoly({poly_text(self)!r})"


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def _content(p: LaurentPoly) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Componentwise minimum exponents over all terms (the monomial gcd)."""
    keys = list(p.terms)
    xmins = [min(xe[i] for xe, _ in keys) for i in range(len(keys[0][0]))]
    ymins = [min(ye[i] for _, ye in keys) for i in range(len(keys[0][1]))]
    return tuple(xmins), tuple(ymins)


def _shift(terms: Mapping[TermKey, int], dx, dy) -> dict[TermKey, int]:
    return {
        (
            tuple(a + b for a, b in zip(xe, dx)),
            tuple(a + b for a, b in zip(ye, dy)),
        ): c
        for (xe, ye), c in terms.items()
    }


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient p / q in the Laurent ring; raises if a remainder is left.

    Monomial content is invertible in the x's, so it is stripped from both
    operands first; the reduced operands are divided in the ordinary
    polynomial ring by repeated cancellation of lex-leading terms (exact
    quotients make every leading term divisible, so any failure proves
    inexactness).
    """
    p._check_ambient(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero(p.vertices)
    cpx, cpy = _content(p)
    cqx, cqy = _content(q)
    dqy = tuple(a - b for a, b in zip(cpy, cqy))
    if any(e < 0 for e in dqy):
        raise ExactDivisionError(
            f"inexact division: remainder {poly_text(p)} (quotient would need negative y-exponents)",
            remainder=p,
        )
    # reduced operands live in N^(2n); concatenated-lex leading-term division
    rem = _shift(p.terms, tuple(-e for e in cpx), tuple(-e for e in cpy))
    qred = _shift(q.terms, tuple(-e for e in cqx), tuple(-e for e in cqy))
    lead_q = max(qred)
    coef_q = qred[lead_q]
    quo: dict[TermKey, int] = {}
    while rem:
        lead_r = max(rem)
        coef_r = rem[lead_r]
        dx = tuple(a - b for a, b in zip(lead_r[0], lead_q[0]))
        dy = tuple(a - b for a, b in zip(lead_r[1], lead_q[1]))
        if any(e < 0 for e in dx) or any(e < 0 for e in dy) or coef_r % coef_q != 0:
            raise ExactDivisionError(
                f"inexact division: remainder {poly_text(LaurentPoly(p.vertices, rem))}",
                remainder=LaurentPoly(p.vertices, rem),
            )
        c = coef_r // coef_q
        quo[(dx, dy)] = quo.get((dx, dy), 0) + c
        for (xe, ye), cq in qred.items():
            key = (
                tuple(a + b for a, b in zip(xe, dx)),
                tuple(a + b for a, b in zip(ye, dy)),
            )
            s = rem.get(key, 0) - c * cq
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    dx = tuple(a - b for a, b in zip(cpx, cqx))
    return LaurentPoly(p.vertices, _shift(quo, dx, dqy))


def _factor_text(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _monomial_text(labels: tuple[str, ...], xe, ye, coef: int = 1) -> str:
    parts: list[str] = []
    for label, e in zip(labels, ye):
        if e:
            parts.append(_factor_text(f"y{label}", e))
    for label, e in zip(labels, xe):
        if e:
            parts.append(_factor_text(f"x{label}", e))
    if not parts:
        return str(coef)
    body = "*".join(parts)
    if coef == 1:
        return body
    if coef == -1:
        return "-" + body
    return f"{coef}*{body}"


def poly_text(p: LaurentPoly) -> str:
    """Canonical rendering: sorted monomials with the common monomial factored out.

    Terms are ordered by ascending lex on (x-exponents, y-exponents), y
    factors precede x factors inside a monomial, and a multi-term
    polynomial is parenthesized with its monomial content appended, e.g.
    ``(y1+x2)*x1^-1``.
    """
    labels = p.vertices.labels
    if p.is_zero():
        return "0"
    if len(p.terms) == 1:
        ((xe, ye), c) = next(iter(p.terms.items()))
        return _monomial_text(labels, xe, ye, c)
    cx, cy = _content(p)
    reduced = sorted(
        (
            (
                tuple(a - b for a, b in zip(xe, cx)),
                tuple(a - b for a, b in zip(ye, cy)),
            ),
            c,
        )
        for (xe, ye), c in p.terms.items()
    )
    chunks: list[str] = []
    for (xe, ye), c in reduced:
        text = _monomial_text(labels, xe, ye, c)
        if chunks and not text.startswith("-"):
            chunks.append("+")
        chunks.append(text)
    body = "(" + "".join(chunks) + ")"
    if any(cx) or any(cy):
        body += "*" + _monomial_text(labels, cx, cy)
    return body
