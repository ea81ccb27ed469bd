"""Dense univariate polynomials over a :class:`~hlrc.gf.FieldSpec`."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateAbscissaError,
    EmptyInputError,
    FieldMismatchError,
    ValidationError,
    ZeroPolynomialError,
)
from .gf import FieldSpec

ZERO_DEGREE = -1


@dataclass(frozen=True)
class Poly:
    """Coefficients in ascending degree with no trailing zeros.

    The zero polynomial has ``coeffs == ()`` and degree ``ZERO_DEGREE`` (-1).
    """

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = [self.field.check(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, F: FieldSpec) -> Poly:
        return cls(F, ())

    @classmethod
    def constant(cls, F: FieldSpec, c: int) -> Poly:
        return cls(F, (c,))

    @classmethod
    def monomial(cls, F: FieldSpec, degree: int, c: int = 1) -> Poly:
        return cls(F, (0,) * degree + (c,))

    @classmethod
    def x(cls, F: FieldSpec) -> Poly:
        return cls.monomial(F, 1)

    # -- basic properties ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"Poly(0 over {self.field})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{'' if c == 1 else c}X" + (f"^{i}" if i > 1 else ""))
        return f"Poly({' + '.join(reversed(terms))} over {self.field})"

    def _same_field(self, other: Poly) -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: Poly) -> Poly:
        self._same_field(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self) -> Poly:
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(other)
        self._same_field(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> Poly:
        F = self.field
        c = F.check(c)
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def __pow__(self, m: int) -> Poly:
        if m < 0:
            raise ValidationError("negative polynomial power")
        out = Poly.constant(self.field, 1)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    # -- evaluation / composition ---------------------------------------------

    def __call__(self, x: int) -> int:
        F = self.field
        F.check(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    eval = __call__

    def compose(self, inner: Poly) -> Poly:
        """Return ``self(inner(X))`` by Horner's scheme on polynomials."""
        self._same_field(inner)
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(self.field, c)
        return acc

    # -- serialisation -------------------------------------------------------

    def to_dict(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_dict(cls, F: FieldSpec, d: dict | Sequence[int]) -> Poly:
        coeffs = d["coeffs"] if isinstance(d, dict) else d
        return cls(F, tuple(coeffs))


def interpolate(F: FieldSpec, points: Iterable[tuple[int, int]]) -> Poly:
    """Lagrange interpolation: the unique polynomial of degree < len(points)."""
    pts = [(F.check(x), F.check(y)) for x, y in points]
    if not pts:
        raise EmptyInputError("interpolation needs at least one point")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissaError("interpolation abscissae must be distinct")
    t = len(pts)
    # master = prod (X - x_i), ascending coefficients
    master = [1]
    for x in xs:
        nx = F.neg(x)
        nxt = [0] * (len(master) + 1)
        for i, c in enumerate(master):
            nxt[i] = F.add(nxt[i], F.mul(c, nx))
            nxt[i + 1] = F.add(nxt[i + 1], c)
        master = nxt
    result = [0] * t
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        # master / (X - xi) by synthetic division
        quot = [0] * t
        carry = 0
        for deg in range(t, 0, -1):
            carry = F.add(master[deg], F.mul(carry, xi))
            quot[deg - 1] = carry
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                denom = F.mul(denom, F.sub(xi, xj))
        w = F.div(yi, denom)
        for d in range(t):
            result[d] = F.add(result[d], F.mul(w, quot[d]))
    return Poly(F, result)


def distinct_roots(m: Poly) -> set[int]:
    """All roots of ``m`` in its field, by exhaustive evaluation."""
    if m.is_zero():
        raise ZeroPolynomialError("the zero polynomial vanishes everywhere")
    return {x for x in m.field.elements() if m(x) == 0}
