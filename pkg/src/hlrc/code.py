"""Evaluation codes on nests: message space, generator matrix and encoder.

Messages are polynomials

    m(X) = sum_i [ sum_{j <= deg f - 2} g_ij(X) h(X)^j + gt_i(X) h(X)^(deg f - 1) ] f(h(X))^i

with ``deg g_ij <= deg h - 2`` and ``deg gt_i <= deg h - lambda - 1``, evaluated
at every point of the first ``ell`` nests. The basis is the set of products
``X^u h^j (f o h)^i`` allowed by those degree windows.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .bounds import HlrcParams, rho
from .errors import InvalidPlanError, LengthMismatchError, NotEnoughNestsError, ValidationError
from .gf import FieldSpec
from .linalg import vec_mat
from .nests import NestSystem, build_nest_system, split_values
from .poly import Poly

SCHEMA = "hlrc/1"


@dataclass(frozen=True)
class CodePlan:
    field: FieldSpec
    f: Poly
    h: Poly
    s: int
    lam: int
    ell: int

    def __post_init__(self):
        if self.f.field != self.field or self.h.field != self.field:
            raise InvalidPlanError("f and h must be defined over the plan's field")
        df, dh = self.f.degree, self.h.degree
        if dh < 3:
            raise InvalidPlanError(f"deg h must be at least 3, got {dh}")
        if df < 2:
            raise InvalidPlanError(f"deg f must be at least 2, got {df}")
        if not 2 <= self.lam <= dh - 1:
            raise InvalidPlanError(f"need 2 <= lambda <= deg h - 1 = {dh - 1}, got {self.lam}")
        if self.s < 0:
            raise InvalidPlanError("s must be nonnegative")
        if self.ell < 1 or self.s + 1 > self.ell:
            raise InvalidPlanError(f"need s + 1 <= ell, got s={self.s}, ell={self.ell}")

    @property
    def deg_f(self) -> int:
        return self.f.degree

    @property
    def deg_h(self) -> int:
        return self.h.degree


def make_plan(f: Poly, h: Poly, lam: int = 2, s: int | None = None, ell: int | None = None) -> CodePlan:
    """Fill in defaults: ``ell`` as large as the field allows, ``s = ell - 1``."""
    F = f.field
    available = len(split_values(F, f, h))
    if ell is None:
        ell = available
    if ell > available or available == 0:
        raise NotEnoughNestsError(max(ell, 1), available)
    if s is None:
        s = ell - 1
    return CodePlan(F, f, h, s, lam, ell)


@dataclass(frozen=True)
class BasisMonomial:
    """The basis element ``X^u h(X)^j f(h(X))^i``; ``tilde`` marks the top h-power."""

    i: int
    j: int
    u: int
    tilde: bool

    def degree(self, deg_f: int, deg_h: int) -> int:
        return self.u + self.j * deg_h + self.i * deg_f * deg_h

    def poly(self, f: Poly, h: Poly) -> Poly:
        F = f.field
        return Poly.monomial(F, self.u) * h**self.j * f.compose(h) ** self.i

    def to_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "u": self.u, "tilde": self.tilde}


def enumerate_basis(plan: CodePlan) -> list[BasisMonomial]:
    df, dh = plan.deg_f, plan.deg_h
    out = []
    for i in range(plan.s + 1):
        for j in range(df - 1):
            for u in range(dh - 1):
                out.append(BasisMonomial(i, j, u, False))
        for u in range(dh - plan.lam):
            out.append(BasisMonomial(i, df - 1, u, True))
    return out


def dimension(plan: CodePlan) -> int:
    return (plan.s + 1) * ((plan.deg_f - 1) * (plan.deg_h - 1) + plan.deg_h - plan.lam)


def max_degree(plan: CodePlan) -> int:
    """Largest degree of a message polynomial, hence the most zeros it can have."""
    return (plan.s + 1) * plan.deg_h * plan.deg_f - plan.lam - 1


@dataclass(frozen=True)
class CodeInstance:
    plan: CodePlan
    nest_system: NestSystem
    eval_points: tuple[int, ...]
    basis: tuple[BasisMonomial, ...]
    generator: tuple[tuple[int, ...], ...]
    params: HlrcParams
    d: int

    # -- shorthand -----------------------------------------------------------

    @property
    def field(self) -> FieldSpec:
        return self.plan.field

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def b(self) -> int:
        return self.params.b

    @property
    def a(self) -> int:
        return self.params.a

    @property
    def lam(self) -> int:
        return self.params.lam

    @property
    def rho(self) -> int:
        return rho(self.a, self.b, self.lam)

    @property
    def ell(self) -> int:
        return self.nest_system.ell

    @property
    def nest_size(self) -> int:
        return self.a + self.lam

    @property
    def subnest_size(self) -> int:
        return self.b + 1

    @property
    def subnests_per_nest(self) -> int:
        return self.nest_size // self.subnest_size

    # -- coordinate layout ---------------------------------------------------

    def nest_columns(self, i: int) -> list[int]:
        D = self.nest_size
        return list(range(i * D, (i + 1) * D))

    def subnest_columns(self, i: int, j: int) -> list[int]:
        start = i * self.nest_size + j * self.subnest_size
        return list(range(start, start + self.subnest_size))

    def locate(self, c: int) -> tuple[int, int]:
        """(nest, sub-nest) of coordinate ``c``."""
        i, r = divmod(c, self.nest_size)
        return i, r // self.subnest_size

    @cached_property
    def index_of_point(self) -> dict[int, int]:
        return {x: c for c, x in enumerate(self.eval_points)}

    @cached_property
    def basis_polys(self) -> tuple[Poly, ...]:
        return tuple(m.poly(self.plan.f, self.plan.h) for m in self.basis)


def build_code(plan: CodePlan) -> CodeInstance:
    F, f, h = plan.field, plan.f, plan.h
    system = build_nest_system(F, f, h, plan.ell)
    points = system.points
    basis = enumerate_basis(plan)
    hx = [h(x) for x in points]
    tx = [f(v) for v in hx]
    G = tuple(
        tuple(F.mul(F.mul(F.pow(x, m.u), F.pow(hv, m.j)), F.pow(tv, m.i)) for x, hv, tv in zip(points, hx, tx))
        for m in basis
    )
    df, dh = plan.deg_f, plan.deg_h
    n = plan.ell * df * dh
    params = HlrcParams(n=n, k=len(basis), b=dh - 1, a=df * dh - plan.lam, lam=plan.lam)
    return CodeInstance(plan, system, points, tuple(basis), G, params, n - max_degree(plan))


def encode(code: CodeInstance, message: Sequence[int]) -> list[int]:
    if len(message) != code.k:
        raise LengthMismatchError(f"message has length {len(message)}, expected k={code.k}")
    F = code.field
    return vec_mat(F, [F.check(m) for m in message], code.generator)


def message_poly(code: CodeInstance, message: Sequence[int]) -> Poly:
    if len(message) != code.k:
        raise LengthMismatchError(f"message has length {len(message)}, expected k={code.k}")
    F = code.field
    acc = Poly.zero(F)
    for c, b in zip(message, code.basis_polys):
        if c:
            acc = acc + b.scale(c)
    return acc


# -- descriptors -------------------------------------------------------------

def format_matrix(G: Sequence[Sequence[int]]) -> str:
    """Right-aligned plain-text grid, one matrix row per line."""
    width = max((len(str(v)) for row in G for v in row), default=1)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in G)


def code_to_dict(code: CodeInstance, include_matrix: bool = False) -> dict:
    plan = code.plan
    out = {
        "schema": SCHEMA,
        "field": code.field.to_dict(),
        "f": plan.f.to_dict(),
        "h": plan.h.to_dict(),
        "s": plan.s,
        "lambda": plan.lam,
        "ell": plan.ell,
        "params": {
            "n": code.n,
            "k": code.k,
            "d": code.d,
            "b": code.b,
            "a": code.a,
            "lambda": code.lam,
            "rho": code.rho,
        },
        "eval_points": list(code.eval_points),
        "nests": code.nest_system.to_dict(),
    }
    if include_matrix:
        out["generator"] = [list(r) for r in code.generator]
    return out


def code_from_dict(d: dict) -> CodeInstance:
    """Rebuild a code from its descriptor and check the stored layout still matches."""
    try:
        F = FieldSpec.from_dict(d["field"])
        f = Poly.from_dict(F, d["f"])
        h = Poly.from_dict(F, d["h"])
        plan = CodePlan(F, f, h, int(d["s"]), int(d["lambda"]), int(d["ell"]))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed code descriptor: {exc}") from exc
    code = build_code(plan)
    if "eval_points" in d and tuple(d["eval_points"]) != code.eval_points:
        raise ValidationError("descriptor evaluation points do not match the construction")
    stored = d.get("params", {})
    for key in ("n", "k", "d", "b", "a"):
        if key in stored and stored[key] != getattr(code, key):
            raise ValidationError(f"descriptor parameter {key}={stored[key]} does not match {getattr(code, key)}")
    return code
