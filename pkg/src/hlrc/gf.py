"""Arithmetic in GF(p^e).

Elements are plain integers in ``[0, q)``. An element's base-p digits are the
coefficients of its residue polynomial modulo ``modulus``, least significant
digit first, so ``0`` and ``1`` are the additive and multiplicative identities
and the prime field GF(p) is just ``range(p)`` with modular arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CapacityExceededError,
    DivisionByZeroError,
    InvalidParamsError,
    NotPrimeError,
    ReducibleError,
    ValidationError,
)

MAX_ORDER = 2**20
TABLE_LIMIT = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def to_digits(x: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        x, r = divmod(x, p)
        out.append(r)
    return out


def from_digits(digits: Iterable[int], p: int) -> int:
    x = 0
    for c in reversed(list(digits)):
        x = x * p + c
    return x


# -- coefficient-list polynomials over GF(p), used for the modulus only --------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by b over GF(p); b must have a nonzero leading coefficient."""
    r = _trim(list(a))
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(r) - 1 >= db and r:
        c = r[-1] * inv_lead % p
        shift = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bc) % p
        _trim(r)
    return r


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    e = len(modulus) - 1
    if e <= 1:
        return e == 1
    for d in range(1, e // 2 + 1):
        for low in range(p**d):
            divisor = to_digits(low, p, d) + [1]
            if not _polymod_p(modulus, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e over GF(p) with the smallest canonical encoding."""
    for low in range(p**e):
        cand = to_digits(low, p, e) + [1]
        if cand[0] == 0:
            continue
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible of degree {e} over GF({p})")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """A finite field GF(p^e); build instances with :func:`field_new`."""

    p: int
    e: int
    modulus: tuple[int, ...] | None
    _exp: tuple[int, ...] | None = field(default=None, repr=False, compare=False)
    _log: tuple[int, ...] | None = field(default=None, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __str__(self) -> str:
        return f"GF({self.q})"

    # -- validation / enumeration -------------------------------------------

    def check(self, x: int) -> int:
        if not isinstance(x, (int, np.integer)) or isinstance(x, bool) or not 0 <= x < self.q:
            raise ValidationError(f"{x!r} is not an element of {self}")
        return int(x)

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic ----------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        p = self.p
        out, scale = 0, 1
        while x or y:
            x, a = divmod(x, p)
            y, b = divmod(y, p)
            out += ((a + b) % p) * scale
            scale *= p
        return out

    def neg(self, x: int) -> int:
        if self.e == 1:
            return -x % self.p
        if self.p == 2:
            return x
        p = self.p
        out, scale = 0, 1
        while x:
            x, a = divmod(x, p)
            out += (-a % p) * scale
            scale *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.e == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[x] + self._log[y]]
        return self._slow_mul(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZeroError(f"0 has no inverse in {self}")
        if self.e == 1:
            return pow(x, -1, self.p)
        if self._log is not None:
            return self._exp[(self.q - 1) - self._log[x]]
        return self._slow_pow(x, self.q - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, m: int) -> int:
        if m < 0:
            return self.pow(self.inv(x), -m)
        if m == 0:
            return 1
        if x == 0:
            return 0
        if self.e == 1:
            return pow(x, m, self.p)
        if self._log is not None:
            return self._exp[self._log[x] * m % (self.q - 1)]
        return self._slow_pow(x, m)

    def _slow_mul(self, x: int, y: int) -> int:
        p, e = self.p, self.e
        if p == 2:
            mod = from_digits(self.modulus, 2)
            acc = 0
            while y:
                if y & 1:
                    acc ^= x
                y >>= 1
                x <<= 1
                if x >> e & 1:
                    x ^= mod
            return acc
        a, b = to_digits(x, p, e), to_digits(y, p, e)
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        return from_digits(_polymod_p(prod, self.modulus, p), p)

    def _slow_pow(self, x: int, m: int) -> int:
        acc = 1
        while m:
            if m & 1:
                acc = self._slow_mul(acc, x)
            x = self._slow_mul(x, x)
            m >>= 1
        return acc

    # -- vectorised helpers (numpy integer arrays of canonical elements) ------

    def vadd(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.e == 1:
            return (x + y) % self.p
        if self.p == 2:
            return np.bitwise_xor(x, y)
        p = self.p
        out = np.zeros(np.broadcast_shapes(np.shape(x), np.shape(y)), dtype=np.int64)
        scale = 1
        for _ in range(self.e):
            out += ((x // scale % p + y // scale % p) % p) * scale
            scale *= p
        return out

    # -- serialisation -------------------------------------------------------

    def to_dict(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus) if self.modulus else None}

    @classmethod
    def from_dict(cls, d: dict) -> FieldSpec:
        try:
            p, e = int(d["p"]), int(d.get("e", 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed field descriptor: {d!r}") from exc
        modulus = d.get("modulus")
        return field_new(p, e, tuple(modulus) if modulus else None)


def _build_tables(F: FieldSpec) -> tuple[tuple[int, ...], tuple[int, ...]]:
    q = F.q
    order_factors = prime_factors(q - 1)
    for g in range(2, q):
        if all(F._slow_pow(g, (q - 1) // r) != 1 for r in order_factors):
            break
    else:  # pragma: no cover
        raise AssertionError("multiplicative group has no generator")
    exp = [0] * (2 * (q - 1))
    log = [0] * q
    x = 1
    for i in range(q - 1):
        exp[i] = exp[i + q - 1] = x
        log[x] = i
        x = F._slow_mul(x, g)
    return tuple(exp), tuple(log)


def field_new(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validate and build GF(p^e).

    With ``e > 1`` and no modulus, the monic irreducible of degree ``e`` with the
    smallest canonical encoding is used (x^6 + x + 1 for GF(64)). The modulus is
    ignored for prime fields. Results are cached, so equal arguments share tables.
    """
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    if e == 1:
        modulus = None
    return _field_new(p, e, modulus)


@lru_cache(maxsize=None)
def _field_new(p: int, e: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if not isinstance(p, int) or not isinstance(e, int) or e < 1:
        raise InvalidParamsError(f"need integer p and e >= 1, got p={p!r}, e={e!r}")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p**e > MAX_ORDER:
        raise CapacityExceededError(f"{p}^{e} exceeds the field size cap {MAX_ORDER}")
    if e == 1:
        return FieldSpec(p, 1, None)
    if modulus is None:
        mod = smallest_irreducible(p, e)
    else:
        mod = modulus
        if len(mod) != e + 1 or mod[-1] != 1 or any(not 0 <= c < p for c in mod):
            raise InvalidParamsError(f"modulus must be monic of degree {e} with digits in [0, {p})")
        if not is_irreducible(mod, p):
            raise ReducibleError(f"modulus {list(mod)} is reducible over GF({p})")
    F = FieldSpec(p, e, mod)
    if F.q <= TABLE_LIMIT:
        exp, log = _build_tables(F)
        F = FieldSpec(p, e, mod, exp, log)
    return F
