"""Totally split values of f(h(X)) and the nest / sub-nest partition they induce.

A value ``t0`` is totally split when ``f(h(X)) - t0`` has ``deg f * deg h``
distinct roots in the field. Its root set (a *nest*) breaks into ``deg f``
*sub-nests* of ``deg h`` points each, one per value taken by ``h``.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstantPolynomialError, FieldMismatchError, NotEnoughNestsError, ValidationError
from .gf import FieldSpec
from .poly import Poly


@dataclass(frozen=True)
class SubNest:
    h_value: int
    points: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"h": self.h_value, "points": list(self.points)}


@dataclass(frozen=True)
class Nest:
    t0: int
    subnests: tuple[SubNest, ...]

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(x for b in self.subnests for x in b.points)

    def to_dict(self) -> dict:
        return {"t0": self.t0, "subnests": [b.to_dict() for b in self.subnests]}


@dataclass(frozen=True)
class NestSystem:
    field: FieldSpec
    f: Poly
    h: Poly
    nests: tuple[Nest, ...]

    @property
    def ell(self) -> int:
        return len(self.nests)

    @property
    def points(self) -> tuple[int, ...]:
        """All nest points in canonical order: nest, then sub-nest, then point."""
        return tuple(x for a in self.nests for x in a.points)

    def to_dict(self) -> list[dict]:
        return [a.to_dict() for a in self.nests]


def _check_pair(F: FieldSpec, f: Poly, h: Poly) -> None:
    if f.field != F or h.field != F:
        raise FieldMismatchError("f and h must live over the given field")
    if f.is_constant() or h.is_constant():
        raise ConstantPolynomialError("f and h must both be nonconstant")


def _fibers(F: FieldSpec, f: Poly, h: Poly) -> dict[int, list[int]]:
    buckets: dict[int, list[int]] = defaultdict(list)
    for x in F.elements():
        buckets[f(h(x))].append(x)
    return buckets


def split_values(F: FieldSpec, f: Poly, h: Poly) -> list[int]:
    """Totally split values of ``f(h(X))`` in ascending canonical order.

    One pass over the field buckets every ``x`` by ``f(h(x))``; a value
    qualifies iff its fiber has exactly ``deg f * deg h`` members.
    """
    _check_pair(F, f, h)
    D = f.degree * h.degree
    return sorted(t for t, fiber in _fibers(F, f, h).items() if len(fiber) == D)


def build_nest_system(F: FieldSpec, f: Poly, h: Poly, ell: int | None = None) -> NestSystem:
    """Nests for the first ``ell`` split values (all of them when ``ell`` is None)."""
    _check_pair(F, f, h)
    D = f.degree * h.degree
    fibers = _fibers(F, f, h)
    split = sorted(t for t, fiber in fibers.items() if len(fiber) == D)
    if ell is None:
        ell = len(split)
    if ell < 1 or ell > len(split):
        raise NotEnoughNestsError(ell, len(split))
    nests = []
    for t0 in split[:ell]:
        groups: dict[int, list[int]] = defaultdict(list)
        for x in fibers[t0]:
            groups[h(x)].append(x)
        subnests = tuple(SubNest(c, tuple(sorted(pts))) for c, pts in sorted(groups.items()))
        # a fiber of deg f * deg h distinct roots always splits evenly under h
        assert len(subnests) == f.degree and all(len(b.points) == h.degree for b in subnests)
        nests.append(Nest(t0, subnests))
    return NestSystem(F, f, h, tuple(nests))


def nest_system_from_dict(F: FieldSpec, f: Poly, h: Poly, data: list[dict]) -> NestSystem:
    nests = tuple(
        Nest(int(a["t0"]), tuple(SubNest(int(b["h"]), tuple(b["points"])) for b in a["subnests"]))
        for a in data
    )
    return NestSystem(F, f, h, nests)


@dataclass(frozen=True)
class SplitEstimate:
    """Explicit lower bound on the number of totally split values.

    Only advisory: it is asymptotic in ``q`` and often negative at small sizes.
    """

    q: int
    deg_f: int
    deg_h: int
    ord_Gf: int
    ord_Gh: int
    genus: int
    lower_bound: Fraction

    @property
    def vacuous(self) -> bool:
        return self.lower_bound <= 0

    @property
    def leading_coefficient(self) -> Fraction:
        return Fraction(1, self.ord_Gh**self.deg_f * self.ord_Gf)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "deg_f": self.deg_f,
            "deg_h": self.deg_h,
            "ord_Gf": self.ord_Gf,
            "ord_Gh": self.ord_Gh,
            "genus": self.genus,
            "lower_bound": str(self.lower_bound),
            "lower_bound_float": float(self.lower_bound),
            "vacuous": self.vacuous,
        }


def ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def chebotarev_estimate(q: int, deg_f: int, deg_h: int, ord_Gf: int, ord_Gh: int, genus: int = 0) -> SplitEstimate:
    """((q+1) - 2 g sqrt(q)) / (|G_h|^deg_f |G_f|) - deg_f deg_h / 2, exactly.

    sqrt(q) is rounded up to an integer so the bound only gets more conservative.
    Group orders and genus are caller-supplied.
    """
    if min(q, deg_f, deg_h, ord_Gf, ord_Gh) < 1 or genus < 0:
        raise ValidationError("q, degrees and group orders must be positive; genus nonnegative")
    numer = (q + 1) - 2 * genus * ceil_sqrt(q)
    bound = Fraction(numer, ord_Gh**deg_f * ord_Gf) - Fraction(deg_f * deg_h, 2)
    return SplitEstimate(q, deg_f, deg_h, ord_Gf, ord_Gh, genus, bound)
