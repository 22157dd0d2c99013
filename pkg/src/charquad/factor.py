"""Polynomial factorization over GF(2^k) and GF(2^k)[x].

Univariate polynomials over GF(2^k) are handled by squarefree
decomposition, distinct-degree splitting and Cantor-Zassenhaus
equal-degree splitting (trace form, characteristic 2).  Bivariate
polynomials (the place polynomials of two-variable towers) are factored
by Kronecker substitution into a single variable, factoring there, and
recombining sub-multisets of factors.  Randomness is seeded from the
input so results are reproducible.
"""

from __future__ import annotations

import itertools
import random

from .errors import DomainError, UnsupportedLevel
from .gf2k import GF2k
from .poly import Poly, poly_gcd

# ---------------------------------------------------------------------------
# dense univariate polynomials over GF(2^k): list[int], low to high, trimmed
# ---------------------------------------------------------------------------


def fp_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def fp_deg(f: list[int]) -> int:
    return len(f) - 1


def fp_add(f: list[int], g: list[int]) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] ^= c
    return fp_trim(out)


def fp_mul(F: GF2k, f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] ^= F.mul(a, b)
    return fp_trim(out)


def fp_divmod(F: GF2k, f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("univariate division by zero")
    r = list(f)
    dg = fp_deg(g)
    inv_lc = F.inv(g[-1])
    q = [0] * max(0, len(f) - dg)
    while fp_trim(r) and fp_deg(r) >= dg:
        shift = fp_deg(r) - dg
        c = F.mul(r[-1], inv_lc)
        q[shift] = c
        for i, b in enumerate(g):
            r[i + shift] ^= F.mul(c, b)
    return fp_trim(q), fp_trim(r)


def fp_gcd(F: GF2k, f: list[int], g: list[int]) -> list[int]:
    while g:
        f, g = g, fp_divmod(F, f, g)[1]
    return fp_monic(F, f)


def fp_monic(F: GF2k, f: list[int]) -> list[int]:
    if not f or f[-1] == 1:
        return list(f)
    inv = F.inv(f[-1])
    return [F.mul(c, inv) for c in f]


def fp_mulmod(F: GF2k, f: list[int], g: list[int], m: list[int]) -> list[int]:
    return fp_divmod(F, fp_mul(F, f, g), m)[1]


def fp_sqr_mod(F: GF2k, f: list[int], m: list[int]) -> list[int]:
    out = [0] * (2 * len(f) - 1) if f else []
    for i, c in enumerate(f):
        if c:
            out[2 * i] ^= F.sqr(c)
    return fp_divmod(F, fp_trim(out), m)[1]


def fp_eval(F: GF2k, f: list[int], a: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.mul(acc, a) ^ c
    return acc


def fp_derivative(f: list[int]) -> list[int]:
    return fp_trim([f[i] if i % 2 == 1 else 0 for i in range(1, len(f))])


def fp_sqrt(F: GF2k, f: list[int]) -> list[int]:
    if any(f[i] for i in range(1, len(f), 2)):
        raise DomainError("fpoly is not a square")
    return fp_trim([F.sqrt(c) for c in f[::2]])


def fp_is_square(f: list[int]) -> bool:
    return all(f[i] == 0 for i in range(1, len(f), 2))


def _frobenius_powers(F: GF2k, m: list[int]) -> list[int]:
    """x^(2^k) mod m, i.e. the q-power Frobenius image of x."""
    x = [0, 1]
    h = fp_divmod(F, x, m)[1]
    for _ in range(F.k):
        h = fp_sqr_mod(F, h, m)
    return h


def fp_is_irreducible(F: GF2k, f: list[int]) -> bool:
    d = fp_deg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    f = fp_monic(F, f)
    x = fp_divmod(F, [0, 1], f)[1]
    h = x
    for _ in range(d):  # h = x^(q^d) mod f by iterating q-Frobenius
        for _ in range(F.k):
            h = fp_sqr_mod(F, h, f)
    if fp_add(h, x):
        return False
    from .gf2k import _prime_divisors
    for p in _prime_divisors(d):
        h = x
        for _ in range(d // p):
            for _ in range(F.k):
                h = fp_sqr_mod(F, h, f)
        if fp_deg(fp_gcd(F, fp_add(h, x), f)) > 0:
            return False
    return True


def _fp_squarefree_parts(F: GF2k, f: list[int]) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of monic f: list of (monic squarefree, multiplicity)."""
    out: list[tuple[list[int], int]] = []
    der = fp_trim([f[i] if i % 2 == 1 else 0 for i in range(1, len(f))])
    if not der:
        # all odd coefficients vanish: f = g(x)^2
        g = fp_sqrt(F, f)
        for h, m in _fp_squarefree_parts(F, g):
            out.append((h, 2 * m))
        return out
    c = fp_gcd(F, f, der)
    w = fp_divmod(F, f, c)[0]
    i = 1
    while fp_deg(w) > 0:
        y = fp_gcd(F, w, c)
        z = fp_divmod(F, w, y)[0]
        if fp_deg(z) > 0:
            out.append((fp_monic(F, z), i))
        w = y
        c = fp_divmod(F, c, y)[0]
        i += 1
    if fp_deg(c) > 0:
        for h, m in _fp_squarefree_parts(F, fp_sqrt(F, c)):
            out.append((h, 2 * m))
    return out


def _fp_distinct_degree(F: GF2k, f: list[int]) -> list[tuple[list[int], int]]:
    """Split monic squarefree f into products of irreducibles of equal degree."""
    out = []
    x = fp_divmod(F, [0, 1], f)[1]
    h = x
    d = 0
    rest = f
    while fp_deg(rest) > 2 * d:
        d += 1
        for _ in range(F.k):
            h = fp_sqr_mod(F, h, rest)
        g = fp_gcd(F, fp_add(h, x), rest)
        if fp_deg(g) > 0:
            out.append((g, d))
            rest = fp_divmod(F, rest, g)[0]
            h = fp_divmod(F, h, rest)[1]
    if fp_deg(rest) > 0:
        out.append((rest, fp_deg(rest)))
    return out


def _fp_equal_degree(F: GF2k, f: list[int], d: int, rng: random.Random) -> list[list[int]]:
    """Factor monic squarefree f whose irreducible factors all have degree d."""
    n = fp_deg(f)
    if n == d:
        return [f]
    while True:
        h = [rng.randrange(F.order) for _ in range(n)]
        h = fp_trim(h)
        if fp_deg(h) < 1:
            continue
        # absolute trace to GF(2) of h inside GF(q^d)[x]/(f)
        t = fp_divmod(F, h, f)[1]
        acc = t
        for _ in range(F.k * d - 1):
            t = fp_sqr_mod(F, t, f)
            acc = fp_add(acc, t)
        g = fp_gcd(F, acc, f)
        if 0 < fp_deg(g) < n:
            return (_fp_equal_degree(F, g, d, rng)
                    + _fp_equal_degree(F, fp_divmod(F, f, g)[0], d, rng))


def fp_factor(F: GF2k, f: list[int]) -> tuple[int, list[tuple[list[int], int]]]:
    """Full factorization: (leading unit, [(monic irreducible, multiplicity)...])."""
    if not f:
        raise DomainError("zero input")
    unit = f[-1]
    f = fp_monic(F, f)
    if fp_deg(f) == 0:
        return unit, []
    seed = hash((F.k, tuple(f)))
    rng = random.Random(seed)
    out = []
    for sf, mult in _fp_squarefree_parts(F, f):
        for block, d in _fp_distinct_degree(F, sf):
            for irr in _fp_equal_degree(F, block, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda p: (fp_deg(p[0]), p[0][::-1]))
    return unit, out


def fp_roots(F: GF2k, f: list[int]) -> list[int]:
    _, facs = fp_factor(F, f)
    roots = [g[0] for g, _ in facs if fp_deg(g) == 1]
    return sorted(roots)


# ---------------------------------------------------------------------------
# Poly-level factorization for one- and two-variable polynomials
# ---------------------------------------------------------------------------


def poly_to_fp(p: Poly, j: int) -> list[int]:
    out = [0] * (p.deg_in(j) + 1)
    for m, c in p.terms.items():
        if any(e for i, e in enumerate(m) if i != j):
            raise DomainError("polynomial is not univariate in the requested variable")
        out[m[j]] = c
    return fp_trim(out)


def fp_to_poly(F: GF2k, nvars: int, j: int, f: list[int]) -> Poly:
    terms = {}
    for e, c in enumerate(f):
        if c:
            mono = tuple(e if i == j else 0 for i in range(nvars))
            terms[mono] = c
    return Poly(F, nvars, terms)


def _kronecker_factor_squarefree(P: Poly, main: int, param: int) -> list[Poly]:
    """Irreducible factors of P, primitive and squarefree in `main`, two variables."""
    F = P.field
    D = P.deg_in(param) + 1
    # substitute main -> param^D
    subst_terms: dict = {}
    for m, c in P.terms.items():
        e = m[param] + D * m[main]
        mono = tuple(e if i == param else 0 for i in range(P.nvars))
        subst_terms[mono] = subst_terms.get(mono, 0) ^ c
    U = Poly(F, P.nvars, {m: c for m, c in subst_terms.items() if c})
    unit, facs = fp_factor(F, poly_to_fp(U, param))
    pool: list[list[int]] = []
    for g, mult in facs:
        pool.extend([g] * mult)

    def unkron(prod_fp: list[int]) -> Poly:
        terms: dict = {}
        for e, c in enumerate(prod_fp):
            if c:
                mono = [0] * P.nvars
                mono[param] = e % D
                mono[main] = e // D
                mono = tuple(mono)
                terms[mono] = terms.get(mono, 0) ^ c
        return Poly(F, P.nvars, {m: c for m, c in terms.items() if c})

    found: list[Poly] = []
    remaining = P
    while remaining.deg_in(main) > 0:
        hit = None
        for size in range(1, len(pool) + 1):
            for idxs in itertools.combinations(range(len(pool)), size):
                prod = [1]
                for i in idxs:
                    prod = fp_mul(F, prod, pool[i])
                G = unkron(prod)
                if G.deg_in(main) < 1:
                    continue
                cont = G.content_in(main)
                G = G.divexact(cont)
                try:
                    q = remaining.divexact(G)
                except DomainError:
                    continue
                hit = (G, q, set(idxs))
                break
            if hit:
                break
        if hit is None:
            found.append(remaining)
            break
        G, remaining, used = hit
        found.append(G)
        pool = [g for i, g in enumerate(pool) if i not in used]
    return found


def factor_poly_in(P: Poly, main: int) -> tuple[Poly, list[tuple[Poly, int]]]:
    """Factor P into irreducibles over GF(q)(other vars), w.r.t. variable `main`.

    Returns (content, factors): content is the part of P of degree 0 in `main`
    (a unit of the coefficient field), and each factor is primitive in `main`
    with multiplicity.  Supports at most one parameter variable besides `main`
    (UnsupportedLevel otherwise).
    """
    if P.is_zero:
        raise DomainError("zero input")
    others = P.vars_used() - {main}
    if len(others) > 1:
        raise UnsupportedLevel("factorization supports at most one parameter variable")
    cont = P.content_in(main)
    P = P.divexact(cont)
    if P.deg_in(main) < 1:
        return cont, []
    out: dict = {}

    def add(f: Poly, m: int):
        out[f] = out.get(f, 0) + m

    def rec(W: Poly, mult: int):
        if W.deg_in(main) < 1:
            return
        der = W.derivative(main)
        if der.is_zero:
            if W.is_square():
                rec(W.sqrt(), 2 * mult)
                return
            # all main-exponents even but not a square: substitute s = main^2
            half = Poly(W.field, W.nvars,
                        {m[:main] + (m[main] // 2,) + m[main + 1:]: c
                         for m, c in W.terms.items()})
            sub: dict = {}
            _, hfacs = factor_poly_in(half, main)
            for f, m in hfacs:
                doubled = Poly(f.field, f.nvars,
                               {mm[:main] + (2 * mm[main],) + mm[main + 1:]: c
                                for mm, c in f.terms.items()})
                if doubled.is_square():
                    add(doubled.sqrt(), 2 * m * mult)
                else:
                    add(doubled, m * mult)
            return
        g = poly_gcd(W, der)
        sf = W.divexact(g)  # separable squarefree part (odd-multiplicity factors)
        sf = sf.divexact(sf.content_in(main))
        if not others:
            unit, facs = fp_factor(W.field, poly_to_fp(sf, main))
            irreducibles = [fp_to_poly(W.field, W.nvars, main, f) for f, _ in facs]
        else:
            irreducibles = _kronecker_factor_squarefree(sf, main, next(iter(others)))
        rest = W
        for q in irreducibles:
            e = 0
            while True:
                try:
                    rest = rest.divexact(q)
                    e += 1
                except DomainError:
                    break
            add(q.monic() if not others else q, e * mult)
        cont2 = rest.content_in(main)
        rest = rest.divexact(cont2)
        if rest.deg_in(main) > 0:
            rec(rest, mult)

    rec(P, 1)
    facs = sorted(out.items(), key=lambda kv: (kv[0].deg_in(main), sorted(kv[0].terms)))
    return cont, facs
