"""Brute-force cross-checks of a constructed code.

The minimum distance is found by enumerating messages and counting, for each,
how many evaluation points are roots of its message polynomial (equivalently,
zero coordinates of its codeword). Scalar multiples share a weight, so only
messages whose first nonzero coefficient is 1 are visited:
``(q^k - 1) / (q - 1)`` of them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .bounds import build_deficient_set, hlrc_bound, is_optimal, singleton_certificate
from .code import CodeInstance, dimension, max_degree
from .errors import TooLargeError
from .gf import FieldSpec
from .linalg import column_rank, rank
from .repair import tolerance_check

ENUM_CAP = 10**8
FULL_SCAN_LIMIT = 10**7
_BLOCK = 2**21


def message_count(q: int, k: int) -> int:
    """Messages visited by the projective enumeration."""
    return (q**k - 1) // (q - 1)


def max_zero_count(F: FieldSpec, G: Sequence[Sequence[int]], stop_at: int | None = None) -> int:
    """Largest number of zero coordinates over all nonzero codewords of ``G``.

    Stops as soon as ``stop_at`` zeros have been seen, when given.
    """
    k, n = len(G), len(G[0])
    q = F.q
    Garr = np.array(G, dtype=np.int64)
    mult = np.empty((k, q, n), dtype=np.int64)
    for r in range(k):
        for v in range(q):
            mult[r, v] = [F.mul(v, g) for g in G[r]]
    best = -1
    for lead in range(k):
        rest = list(range(lead + 1, k))
        t = 0
        while t < len(rest) and q ** (t + 1) * n <= _BLOCK:
            t += 1
        outer, inner = rest[: len(rest) - t], rest[len(rest) - t:]
        table = np.zeros((1, n), dtype=np.int64)
        for r in inner:
            table = F.vadd(table[:, None, :], mult[r][None, :, :]).reshape(-1, n)
        for combo in itertools.product(range(q), repeat=len(outer)):
            vec = Garr[lead]
            for r, v in zip(outer, combo):
                if v:
                    vec = F.vadd(vec, mult[r, v])
            zeros = int((F.vadd(table, vec) == 0).sum(axis=1).max())
            if zeros > best:
                best = zeros
                if stop_at is not None and best >= stop_at:
                    return best
    return best


def exact_distance(code: CodeInstance, cap: int = ENUM_CAP, mode: str = "auto") -> int:
    """Minimum Hamming weight over all nonzero codewords.

    ``mode`` is ``"paranoid"`` (always scan everything), ``"early"`` (stop once a
    codeword of the designed weight ``d`` turns up) or ``"auto"`` (paranoid up to
    ``FULL_SCAN_LIMIT`` messages, early above).
    """
    if mode not in ("auto", "paranoid", "early"):
        raise ValueError(f"unknown mode {mode!r}")
    count = message_count(code.field.q, code.k)
    if count > cap:
        raise TooLargeError(f"{count} messages to enumerate exceeds the cap {cap}")
    if mode == "auto":
        mode = "paranoid" if count <= FULL_SCAN_LIMIT else "early"
    stop = code.n - code.d if mode == "early" else None
    return code.n - max_zero_count(code.field, code.generator, stop)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)
    exact_d: int | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "checks": [c.to_dict() for c in self.checks],
            "exact_d": self.exact_d,
            "pass": self.passed,
        }


def verify_instance(code: CodeInstance, cap: int = ENUM_CAP, mode: str = "auto") -> VerifyReport:
    """Re-derive every parameter of ``code`` and report pass/fail per check.

    Works on ``code.generator`` as stored, so a tampered matrix is caught.
    """
    F, G, plan = code.field, code.generator, code.plan
    report = VerifyReport()
    add = report.checks.append

    k_formula = dimension(plan)
    add(Check("dimension_formula", k_formula == code.k == len(code.basis), f"formula {k_formula}, code k={code.k}"))

    delta = max_degree(plan)
    top = max(m.degree(plan.deg_f, plan.deg_h) for m in code.basis)
    add(Check("degree_formula", top <= delta and code.d == code.n - delta, f"max basis degree {top}, delta {delta}"))

    expected = tuple(
        tuple(p(x) for x in code.eval_points) for p in code.basis_polys
    )
    add(Check("generator_matches_basis", expected == tuple(map(tuple, G)), "rows are basis evaluations"))

    r = rank(F, G)
    add(Check("generator_rank", r == code.k, f"rank {r}, k={code.k}"))

    sub_ranks = [
        column_rank(F, G, code.subnest_columns(i, j))
        for i in range(code.ell)
        for j in range(code.subnests_per_nest)
    ]
    add(Check("subnest_block_rank", max(sub_ranks) <= code.b, f"max {max(sub_ranks)}, b={code.b}"))
    nest_ranks = [column_rank(F, G, code.nest_columns(i)) for i in range(code.ell)]
    add(Check("nest_block_rank", max(nest_ranks) <= code.rho, f"max {max(nest_ranks)}, rho={code.rho}"))

    bad_sub = [
        (i, j)
        for i in range(code.ell)
        for j in range(code.subnests_per_nest)
        if not tolerance_check(code, code.subnest_columns(i, j), 1)
    ]
    add(Check("subnest_tolerance", not bad_sub, f"failing sub-nests {bad_sub}" if bad_sub else "1 erasure on every sub-nest"))
    bad_nest = [i for i in range(code.ell) if not tolerance_check(code, code.nest_columns(i), code.lam)]
    add(Check("nest_tolerance", not bad_nest, f"failing nests {bad_nest}" if bad_nest else f"{code.lam} erasures on every nest"))

    bound = hlrc_bound(code.params)
    add(Check("optimal", is_optimal(code.params, code.d), f"d={code.d}, bound {bound.d_max_hlrc}"))

    try:
        cert = singleton_certificate(F, G, build_deficient_set(code))
    except Exception as exc:  # rank-deficient tampered generators land here
        cert, why = None, str(exc)
    else:
        why = f"certified d <= {cert}"
    add(Check("singleton_certificate", cert == code.d, why))

    count = message_count(F.q, code.k)
    if count <= cap:
        report.exact_d = exact_distance(code, cap=cap, mode=mode)
        add(Check("exact_distance", report.exact_d == code.d, f"enumerated d={report.exact_d}, designed {code.d}"))
    else:
        add(Check("exact_distance", True, f"skipped: {count} messages exceeds cap {cap}"))
    return report
