"""Singleton-type bounds for hierarchical LRCs and their rank certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .errors import InvalidParamsError, RankDeficientGeneratorError
from .gf import FieldSpec
from .linalg import Matrix, column_rank, rank

if TYPE_CHECKING:
    from .code import CodeInstance


def _check_locality(a: int, b: int, lam: int) -> None:
    if min(a, b, lam) < 1:
        raise InvalidParamsError("a, b and lambda must be positive")
    if not 2 <= lam <= b:
        raise InvalidParamsError(f"need 2 <= lambda <= b, got lambda={lam}, b={b}")
    if (a + lam) % (b + 1):
        raise InvalidParamsError(f"b+1={b + 1} does not divide a+lambda={a + lam}")


@dataclass(frozen=True)
class HlrcParams:
    n: int
    k: int
    b: int
    a: int
    lam: int

    def __post_init__(self):
        if min(self.n, self.k) < 1:
            raise InvalidParamsError("n and k must be positive")
        _check_locality(self.a, self.b, self.lam)
        if self.n % (self.a + self.lam):
            raise InvalidParamsError(f"a+lambda={self.a + self.lam} does not divide n={self.n}")
        if self.k >= self.n:
            raise InvalidParamsError(f"need k < n, got k={self.k}, n={self.n}")

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "b": self.b, "a": self.a, "lambda": self.lam}


@dataclass(frozen=True)
class BoundReport:
    rho: int
    k1: int
    d_max_hlrc: int
    d_max_classical: int
    d: int | None = None
    optimal: bool | None = None

    def to_dict(self) -> dict:
        out = {
            "rho": self.rho,
            "k1": self.k1,
            "d_max_hlrc": self.d_max_hlrc,
            "d_max_classical": self.d_max_classical,
        }
        if self.d is not None:
            out["d"] = self.d
            out["optimal"] = self.optimal
        return out


def rho(a: int, b: int, lam: int) -> int:
    """Largest possible rank of the columns of one nest: b(a+lambda)/(b+1) - (lambda-1)."""
    _check_locality(a, b, lam)
    return b * (a + lam) // (b + 1) - (lam - 1)


def hlrc_bound(p: HlrcParams, d: int | None = None) -> BoundReport:
    r = rho(p.a, p.b, p.lam)
    blocks, k1 = divmod(p.k - 1, r)
    d_max = p.n - (blocks * (p.a + p.lam) + k1 + k1 // p.b)
    classical = p.n - p.k - -(-p.k // p.b) + 2
    optimal = None if d is None else d == d_max
    return BoundReport(r, k1, d_max, classical, d, optimal)


def is_optimal(p: HlrcParams, d: int) -> bool:
    return hlrc_bound(p).d_max_hlrc == d


def singleton_certificate(F: FieldSpec, G: Matrix, cols: Sequence[int]) -> int | None:
    """Upper bound ``n - |cols|`` on d when the selected columns have rank < k.

    Column indices are 0-based. Returns None when the columns have full rank.
    """
    k, n = len(G), len(G[0])
    if rank(F, G) != k:
        raise RankDeficientGeneratorError("generator matrix does not have full row rank")
    cols = sorted(set(cols))
    if any(not 0 <= c < n for c in cols):
        raise InvalidParamsError("column index out of range")
    if column_rank(F, G, cols) <= k - 1:
        return n - len(cols)
    return None


def build_deficient_set(code: CodeInstance) -> list[int]:
    """The column set from the bound's proof: rank at most k-1, size n - d_max.

    Takes whole nests first, then whole sub-nests of the next nest, then a
    partial sub-nest.
    """
    p = code.params
    r = rho(p.a, p.b, p.lam)
    whole_nests, k1 = divmod(p.k - 1, r)
    whole_subnests, partial = divmod(k1, p.b)
    cols: list[int] = []
    for i in range(whole_nests):
        cols.extend(code.nest_columns(i))
    if whole_subnests or partial:
        nest = whole_nests
        for j in range(whole_subnests):
            cols.extend(code.subnest_columns(nest, j))
        if partial:
            cols.extend(code.subnest_columns(nest, whole_subnests)[:partial])
    return cols
