"""Exact linear algebra for graded spans of forms.

Ranks over F_p run on int64 matrices: with p < 2^31 every intermediate
product stays below 2^62, so vectorized row reduction is exact.  The
optional rational pass reruns the same eliminations with Fraction
arithmetic to certify a characteristic-zero statement.

A derivative tower walks a set of degree-e generators down to degree 0,
reducing the stacked partial derivatives of each basis in turn.  Its
per-degree dimensions are exactly the h-vector of the module the
generators span.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from levellab.forms import Form, monomials_of_degree


def rref_mod_p(matrix: np.ndarray, p: int) -> np.ndarray:
    """Reduced row echelon form over F_p; returns only the nonzero rows.

    The result is canonical for the row space, so any generating set of
    the same span reduces to byte-identical rows.
    """
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2d matrix")
    a %= p
    nrows, ncols = a.shape
    pivot = 0
    for col in range(ncols):
        if pivot >= nrows:
            break
        stuck = np.nonzero(a[pivot:, col])[0]
        if stuck.size == 0:
            continue
        first = pivot + int(stuck[0])
        if first != pivot:
            a[[pivot, first]] = a[[first, pivot]]
        inv = pow(int(a[pivot, col]), p - 2, p)
        a[pivot] = a[pivot] * inv % p
        others = np.nonzero(a[:, col])[0]
        others = others[others != pivot]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, col], a[pivot])) % p
        pivot += 1
    return a[:pivot]


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    return len(rref_mod_p(matrix, p))


def rref_rational(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form over the rationals, for the exact pass."""
    a = [list(map(Fraction, row)) for row in rows]
    if not a:
        return []
    ncols = len(a[0])
    pivot = 0
    for col in range(ncols):
        if pivot >= len(a):
            break
        hit = next((r for r in range(pivot, len(a)) if a[r][col]), None)
        if hit is None:
            continue
        a[pivot], a[hit] = a[hit], a[pivot]
        inv = 1 / a[pivot][col]
        a[pivot] = [v * inv for v in a[pivot]]
        for r in range(len(a)):
            if r != pivot and a[r][col]:
                f = a[r][col]
                a[r] = [vr - f * vp for vr, vp in zip(a[r], a[pivot])]
        pivot += 1
    return a[:pivot]


@dataclass(frozen=True)
class SpanBasis:
    """Canonical basis (RREF rows over the grevlex monomial order) of the
    degree ``degree`` component of a span of forms."""

    nvars: int
    degree: int
    p: int
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def forms(self) -> list[Form]:
        order = monomials_of_degree(self.nvars, self.degree)
        out = []
        for row in self.matrix:
            items = [(order[j], int(c)) for j, c in enumerate(row) if c]
            out.append(Form.from_terms(self.nvars, self.degree, items, self.p))
        return out


def coefficient_matrix(forms: Sequence[Form], nvars: int, degree: int, p: int) -> np.ndarray:
    n = len(monomials_of_degree(nvars, degree))
    mat = np.zeros((len(forms), n), dtype=np.int64)
    for i, f in enumerate(forms):
        if f.nvars != nvars or f.p != p:
            raise ValueError("forms live in different rings")
        if f.degree != degree:
            raise ValueError(f"mixed degrees: expected {degree}, found {f.degree}")
        mat[i] = f.coefficient_vector()
    return mat


def span_dimension(forms: Sequence[Form], degree: int | None = None) -> int:
    """Dimension of the linear span of the given forms (all one degree)."""
    if not forms:
        return 0
    first = forms[0]
    d = first.degree if degree is None else degree
    return rank_mod_p(coefficient_matrix(forms, first.nvars, d, first.p), first.p)


@lru_cache(maxsize=None)
def _derivative_map(nvars: int, degree: int, var: int):
    """Index arrays mapping degree-d monomial coordinates to their degree
    d-1 images under d/dy_var, with the exponent multipliers."""
    source = monomials_of_degree(nvars, degree)
    target = {m: i for i, m in enumerate(monomials_of_degree(nvars, degree - 1))}
    src, dst, mult = [], [], []
    for i, mono in enumerate(source):
        if mono[var] == 0:
            continue
        lowered = list(mono)
        lowered[var] -= 1
        src.append(i)
        dst.append(target[tuple(lowered)])
        mult.append(mono[var])
    return (
        np.array(src, dtype=np.intp),
        np.array(dst, dtype=np.intp),
        np.array(mult, dtype=np.int64),
    )


def _stacked_derivatives(basis: SpanBasis) -> np.ndarray:
    """All first partials of the basis rows, one block per variable."""
    lower = len(monomials_of_degree(basis.nvars, basis.degree - 1))
    blocks = []
    for var in range(basis.nvars):
        src, dst, mult = _derivative_map(basis.nvars, basis.degree, var)
        block = np.zeros((basis.dim, lower), dtype=np.int64)
        if src.size:
            block[:, dst] = basis.matrix[:, src] * mult % basis.p
        blocks.append(block)
    return np.vstack(blocks)


def derivative_spaces(generators: Sequence[Form]) -> list[SpanBasis]:
    """Canonical bases of every graded piece of the span closed under
    differentiation, listed by degree 0..e.

    An empty generator list is the zero module and yields an empty list.
    """
    if not generators:
        return []
    first = generators[0]
    nvars, e, p = first.nvars, first.degree, first.p
    top = rref_mod_p(coefficient_matrix(generators, nvars, e, p), p)
    spans = [SpanBasis(nvars, e, p, top)]
    for degree in range(e, 0, -1):
        stacked = _stacked_derivatives(spans[-1])
        spans.append(SpanBasis(nvars, degree - 1, p, rref_mod_p(stacked, p)))
    spans.reverse()
    return spans


def derivative_dims_rational(generators: Sequence[Form]) -> tuple[int, ...]:
    """Per-degree span dimensions of the same tower computed over Q,
    treating the stored residues as integers.  Used to upgrade a mod-p
    certificate to a characteristic-zero statement when the dimensions
    agree (rational ranks dominate mod-p ranks, so equality certifies)."""
    if not generators:
        return ()
    first = generators[0]
    nvars, e = first.nvars, first.degree
    order = {m: i for i, m in enumerate(monomials_of_degree(nvars, e))}
    rows = []
    for f in generators:
        row = [Fraction(0)] * len(order)
        for mono, coeff in f.terms.items():
            row[order[mono]] = Fraction(coeff)
        rows.append(row)
    basis = rref_rational(rows)
    dims = [len(basis)]
    for degree in range(e, 0, -1):
        lower = len(monomials_of_degree(nvars, degree - 1))
        stacked = []
        for var in range(nvars):
            src, dst, mult = _derivative_map(nvars, degree, var)
            for row in basis:
                image = [Fraction(0)] * lower
                for s, t, m in zip(src.tolist(), dst.tolist(), mult.tolist()):
                    image[t] = row[s] * m
                stacked.append(image)
        basis = rref_rational(stacked)
        dims.append(len(basis))
    dims.reverse()
    return tuple(dims)
