"""Exact linear algebra over GF(p^e) on lists of canonical integers."""

from __future__ import annotations

from typing import Sequence

from .errors import RankDeficientGeneratorError
from .gf import FieldSpec

Matrix = Sequence[Sequence[int]]


def columns(G: Matrix, cols: Sequence[int]) -> list[list[int]]:
    """Submatrix of ``G`` keeping ``cols`` in the given order."""
    return [[row[c] for c in cols] for row in G]


def _reduce(F: FieldSpec, basis: list[tuple[int, list[int]]], v: list[int]) -> list[int]:
    """Reduce ``v`` against an echelon basis of (pivot, normalised row) pairs."""
    v = list(v)
    for piv, row in basis:
        c = v[piv]
        if c:
            for i in range(len(v)):
                if row[i]:
                    v[i] = F.sub(v[i], F.mul(c, row[i]))
    return v


def _insert(F: FieldSpec, basis: list[tuple[int, list[int]]], v: list[int]) -> bool:
    v = _reduce(F, basis, v)
    piv = next((i for i, c in enumerate(v) if c), None)
    if piv is None:
        return False
    inv = F.inv(v[piv])
    basis.append((piv, [F.mul(inv, c) for c in v]))
    return True


def rank(F: FieldSpec, M: Matrix) -> int:
    basis: list[tuple[int, list[int]]] = []
    for row in M:
        _insert(F, basis, row)
    return len(basis)


def column_rank(F: FieldSpec, G: Matrix, cols: Sequence[int]) -> int:
    if not cols:
        return 0
    return rank(F, [[row[c] for row in G] for c in cols])


def greedy_independent_columns(F: FieldSpec, G: Matrix, candidates: Sequence[int], target: int) -> list[int]:
    """First columns (in candidate order) that raise the rank, stopping at ``target``."""
    basis: list[tuple[int, list[int]]] = []
    chosen = []
    for c in candidates:
        if _insert(F, basis, [row[c] for row in G]):
            chosen.append(c)
            if len(chosen) == target:
                break
    return chosen


def solve_left(F: FieldSpec, A: Matrix, b: Sequence[int]) -> list[int]:
    """Solve ``x A = b`` for square nonsingular ``A``."""
    k = len(A)
    # transpose so the unknowns are columns: A^T x^T = b^T
    aug = [[A[r][c] for r in range(k)] + [b[c]] for c in range(k)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col]), None)
        if piv is None:
            raise RankDeficientGeneratorError("selected columns are singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = F.inv(aug[col][col])
        aug[col] = [F.mul(inv, v) for v in aug[col]]
        for r in range(k):
            c = aug[r][col]
            if r != col and c:
                aug[r] = [F.sub(v, F.mul(c, w)) for v, w in zip(aug[r], aug[col])]
    return [aug[r][k] for r in range(k)]


def vec_mat(F: FieldSpec, x: Sequence[int], G: Matrix) -> list[int]:
    n = len(G[0]) if G else 0
    out = [0] * n
    for xr, row in zip(x, G):
        if xr:
            for c in range(n):
                if row[c]:
                    out[c] = F.add(out[c], F.mul(xr, row[c]))
    return out
