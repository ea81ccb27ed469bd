"""Reference computations written independently of the package internals."""

import itertools


def gf2_polymod(a: int, b: int) -> int:
    """Remainder of bit-encoded GF(2) polynomials."""
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def gf2_irreducibles(max_degree: int) -> list[int]:
    out = []
    for deg in range(1, max_degree + 1):
        for cand in range(1 << deg, 1 << (deg + 1)):
            if all(gf2_polymod(cand, g) for g in out if g.bit_length() - 1 <= deg // 2):
                out.append(cand)
    return out


def first_irreducible_sextic() -> list[int]:
    """Ascending coefficient list of the smallest irreducible degree-6 polynomial over GF(2)."""
    small = [g for g in gf2_irreducibles(3)]
    for cand in range(1 << 6, 1 << 7):
        if all(gf2_polymod(cand, g) for g in small):
            return [(cand >> i) & 1 for i in range(7)]
    raise AssertionError


def gf_pe_mul(x: int, y: int, p: int, modulus: list[int]) -> int:
    """Schoolbook product of digit vectors reduced by the modulus."""
    e = len(modulus) - 1
    a = [(x // p**i) % p for i in range(e)]
    b = [(y // p**i) % p for i in range(e)]
    prod = [0] * (2 * e)
    for i in range(e):
        for j in range(e):
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p
    for top in range(2 * e - 1, e - 1, -1):
        c = prod[top]
        if c:
            for i in range(e + 1):
                prod[top - e + i] = (prod[top - e + i] - c * modulus[i]) % p
    return sum(prod[i] * p**i for i in range(e))


def weights_by_enumeration(F, G):
    """Minimum weight over every nonzero message (no projective shortcut)."""
    k, n = len(G), len(G[0])
    best = n
    for msg in itertools.product(range(F.q), repeat=k):
        if not any(msg):
            continue
        word = [0] * n
        for m, row in zip(msg, G):
            if m:
                for c in range(n):
                    word[c] = F.add(word[c], F.mul(m, row[c]))
        best = min(best, sum(1 for v in word if v))
    return best


def split_count_by_roots(F, f, h):
    """Count t0 where f(h(X)) - t0 has deg f * deg h distinct roots, one t0 at a time."""
    from hlrc.poly import Poly, distinct_roots

    comp = f.compose(h)
    D = f.degree * h.degree
    return [t for t in F.elements() if len(distinct_roots(comp - Poly.constant(F, t))) == D]
