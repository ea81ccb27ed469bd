"""Three-tier erasure recovery: sub-nest, nest, then global."""

from __future__ import annotations

import enum
import math
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .code import CodeInstance, encode
from .errors import (
    InconsistentWordError,
    LengthMismatchError,
    TooLargeError,
    TooManyErasuresError,
    ValidationError,
)
from .linalg import column_rank, columns, greedy_independent_columns, solve_left
from .poly import interpolate

SUBSET_CAP = 10**6


class Tier(str, enum.Enum):
    SUBNEST = "SUBNEST"
    NEST = "NEST"
    GLOBAL = "GLOBAL"


@dataclass(frozen=True)
class RepairStep:
    tier: Tier
    targets: tuple[int, ...]
    helpers: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"tier": self.tier.value, "targets": list(self.targets), "helpers": list(self.helpers)}


@dataclass(frozen=True)
class RepairPlan:
    steps: tuple[RepairStep, ...]
    total_access: int

    def to_dict(self) -> dict:
        return {"steps": [s.to_dict() for s in self.steps], "total_access": self.total_access}


def _validate_pattern(code: CodeInstance, erased: Iterable[int]) -> list[int]:
    erased = sorted(set(erased))
    if any(not 0 <= c < code.n for c in erased):
        raise ValidationError("erased index out of range")
    if len(erased) >= code.d:
        raise TooManyErasuresError(f"{len(erased)} erasures, code only tolerates d-1 = {code.d - 1}")
    return erased


def plan_repair(code: CodeInstance, erased: Iterable[int]) -> RepairPlan:
    """Cheapest tier per nest; a single GLOBAL step if any nest exceeds lambda."""
    erased = _validate_pattern(code, erased)
    erased_set = set(erased)
    by_nest: dict[int, list[int]] = defaultdict(list)
    for c in erased:
        by_nest[code.locate(c)[0]].append(c)

    steps: list[RepairStep] = []
    for i in sorted(by_nest):
        targets = by_nest[i]
        by_sub: dict[int, list[int]] = defaultdict(list)
        for c in targets:
            by_sub[code.locate(c)[1]].append(c)
        if all(len(v) == 1 for v in by_sub.values()):
            for j in sorted(by_sub):
                helpers = [c for c in code.subnest_columns(i, j) if c not in erased_set]
                steps.append(RepairStep(Tier.SUBNEST, tuple(by_sub[j]), tuple(helpers)))
        elif len(targets) <= code.lam:
            # survivors ordered by canonical point value, smallest a of them
            survivors = [c for c in code.nest_columns(i) if c not in erased_set]
            survivors.sort(key=lambda c: code.eval_points[c])
            steps.append(RepairStep(Tier.NEST, tuple(targets), tuple(sorted(survivors[: code.a]))))
        else:
            survivors = [c for c in range(code.n) if c not in erased_set]
            helpers = greedy_independent_columns(code.field, code.generator, survivors, code.k)
            if len(helpers) < code.k:
                raise TooManyErasuresError("surviving columns do not have full rank")
            steps = [RepairStep(Tier.GLOBAL, tuple(erased), tuple(helpers))]
            break
    touched = {c for s in steps for c in s.helpers}
    return RepairPlan(tuple(steps), len(touched))


def repair(
    code: CodeInstance, word: Sequence[int | None], erased: Iterable[int] | None = None
) -> list[int]:
    """Fill the ``None`` entries of ``word`` and return the full codeword."""
    if len(word) != code.n:
        raise LengthMismatchError(f"word has length {len(word)}, expected n={code.n}")
    missing = [c for c, v in enumerate(word) if v is None]
    if erased is None:
        erased = missing
    elif sorted(set(erased)) != missing:
        raise ValidationError("erasure pattern does not match the missing positions of the word")
    F = code.field
    out = [None if v is None else F.check(v) for v in word]
    plan = plan_repair(code, erased)
    pts = code.eval_points
    for step in plan.steps:
        if step.tier is Tier.GLOBAL:
            helpers = list(step.helpers)
            msg = solve_left(F, columns(code.generator, helpers), [out[c] for c in helpers])
            full = encode(code, msg)
            if any(v is not None and v != full[c] for c, v in enumerate(out)):
                raise InconsistentWordError("surviving symbols are not consistent with any codeword")
            return full
        local = interpolate(F, [(pts[c], out[c]) for c in step.helpers])
        for c in step.targets:
            out[c] = local(pts[c])
    return out


def tolerance_check(code: CodeInstance, S: Sequence[int], x: int, cap: int = SUBSET_CAP) -> bool:
    """True iff every x-subset of S is determined by the rest of S.

    For a linear code that means the erased columns of the generator lie in the
    span of the surviving columns of S, i.e. removing them keeps the rank of S.
    """
    S = sorted(set(S))
    if not 0 <= x <= len(S):
        raise ValidationError("need 0 <= x <= |S|")
    if math.comb(len(S), x) > cap:
        raise TooLargeError(f"C({len(S)}, {x}) subsets exceeds the cap {cap}")
    F, G = code.field, code.generator
    full = column_rank(F, G, S)
    for E in combinations(S, x):
        rest = [c for c in S if c not in E]
        if column_rank(F, G, rest) != full:
            return False
    return True
