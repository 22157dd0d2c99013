"""Sparse multivariate polynomials over GF(2^k).

A Poly is an immutable dict from exponent tuples to nonzero GF(2^k)
coefficients (ints).  The monomial order used everywhere is graded
lexicographic in the declared variable order; leading coefficients, monic
normalization and string forms all refer to that order, which keeps every
downstream representation canonical.
"""

from __future__ import annotations

from .errors import DomainError
from .gf2k import GF2k


def _grlex_key(mono: tuple[int, ...]):
    return (sum(mono), mono)


class Poly:
    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: GF2k, nvars: int, terms: dict):
        self.field = field
        self.nvars = nvars
        self.terms = terms  # not mutated after construction
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def const(field: GF2k, nvars: int, c: int) -> "Poly":
        return Poly(field, nvars, {} if c == 0 else {(0,) * nvars: c})

    @staticmethod
    def var(field: GF2k, nvars: int, j: int, e: int = 1) -> "Poly":
        mono = tuple(e if i == j else 0 for i in range(nvars))
        return Poly(field, nvars, {mono: 1})

    def zero(self) -> "Poly":
        return Poly(self.field, self.nvars, {})

    def one(self) -> "Poly":
        return Poly.const(self.field, self.nvars, 1)

    # -- predicates -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self) -> int:
        if self.is_zero:
            return 0
        if not self.is_constant():
            raise DomainError("not a constant polynomial")
        return self.terms[(0,) * self.nvars]

    # -- degrees and leading data ----------------------------------------------

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def deg_in(self, j: int) -> int:
        return max((m[j] for m in self.terms), default=-1)

    def leading_monomial(self) -> tuple[int, ...]:
        return max(self.terms, key=_grlex_key)

    def leading_coeff(self) -> int:
        return self.terms[self.leading_monomial()]

    def lc_in(self, j: int) -> "Poly":
        """Leading coefficient w.r.t. variable j, with slot j zeroed."""
        d = self.deg_in(j)
        out = {}
        for m, c in self.terms.items():
            if m[j] == d:
                mm = m[:j] + (0,) + m[j + 1:]
                out[mm] = c
        return Poly(self.field, self.nvars, out)

    def coeff_in(self, j: int, e: int) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            if m[j] == e:
                mm = m[:j] + (0,) + m[j + 1:]
                out[mm] = c
        return Poly(self.field, self.nvars, out)

    def vars_used(self) -> set[int]:
        used = set()
        for m in self.terms:
            for j, e in enumerate(m):
                if e:
                    used.add(j)
        return used

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) ^ c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(self.field, self.nvars, out)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return self.zero()
        F = self.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) ^ F.mul(c1, c2)
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly(F, self.nvars, out)

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return self.zero()
        if c == 1:
            return self
        F = self.field
        return Poly(F, self.nvars, {m: F.mul(v, c) for m, v in self.terms.items()})

    def shift(self, j: int, e: int) -> "Poly":
        """Multiply by x_j^e."""
        if e == 0 or self.is_zero:
            return self
        out = {}
        for m, c in self.terms.items():
            out[m[:j] + (m[j] + e,) + m[j + 1:]] = c
        return Poly(self.field, self.nvars, out)

    def square(self) -> "Poly":
        F = self.field
        return Poly(F, self.nvars,
                    {tuple(2 * e for e in m): F.sqr(c) for m, c in self.terms.items()})

    # -- division ------------------------------------------------------------------

    def divexact(self, d: "Poly") -> "Poly":
        """Exact division; raises DomainError if d does not divide self."""
        if d.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return self
        F = self.field
        rem = self
        dm = d.leading_monomial()
        dc = d.terms[dm]
        q: dict = {}
        while not rem.is_zero:
            rm = rem.leading_monomial()
            if any(a < b for a, b in zip(rm, dm)):
                raise DomainError("not an exact division")
            qm = tuple(a - b for a, b in zip(rm, dm))
            qc = F.div(rem.terms[rm], dc)
            q[qm] = qc
            rem = rem + d * Poly(F, self.nvars, {qm: qc})
        return Poly(F, self.nvars, q)

    def _prem(self, other: "Poly", j: int) -> "Poly":
        """Sloppy pseudo-remainder of self by other w.r.t. variable j."""
        dB = other.deg_in(j)
        lB = other.lc_in(j)
        R = self
        while not R.is_zero and R.deg_in(j) >= dB:
            dR = R.deg_in(j)
            lR = R.lc_in(j)
            R = R * lB + other * lR.shift(j, dR - dB)
        return R

    # -- gcd ----------------------------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.leading_coeff()))

    def content_in(self, j: int) -> "Poly":
        g = self.zero()
        for e in range(self.deg_in(j) + 1):
            c = self.coeff_in(j, e)
            if not c.is_zero:
                g = poly_gcd(g, c)
        return g

    def derivative(self, j: int) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            if m[j] % 2 == 1:  # char 2: even exponents die
                mm = m[:j] + (m[j] - 1,) + m[j + 1:]
                out[mm] = out.get(mm, 0) ^ c
                if not out[mm]:
                    del out[mm]
        return Poly(self.field, self.nvars, out)

    def is_square(self) -> bool:
        return all(all(e % 2 == 0 for e in m) for m in self.terms)

    def sqrt(self) -> "Poly":
        if not self.is_square():
            raise DomainError("polynomial is not a square")
        F = self.field
        return Poly(F, self.nvars,
                    {tuple(e // 2 for e in m): F.sqrt(c) for m, c in self.terms.items()})

    # -- structure ------------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.field == self.field
                and other.nvars == self.nvars and other.terms == self.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.k, self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self.to_str(tuple('t%d' % (i + 1) for i in range(self.nvars)))})"

    def to_str(self, names: tuple[str, ...]) -> str:
        if self.is_zero:
            return "0"
        F = self.field
        parts = []
        for m in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[m]
            factors = []
            for j, e in enumerate(m):
                if e == 1:
                    factors.append(names[j])
                elif e > 1:
                    factors.append(f"{names[j]}^{e}")
            cs = F.to_str(c)
            if not factors:
                parts.append(f"({cs})" if "+" in cs else cs)
            elif c == 1:
                parts.append("*".join(factors))
            else:
                cs = f"({cs})" if "+" in cs or "^" in cs else cs
                parts.append("*".join([cs] + factors))
        return "+".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (leading grlex coefficient 1) via primitive PRS."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    used = a.vars_used() | b.vars_used()
    if not used:
        return a.one()
    j = max(used)
    ca, cb = a.content_in(j), b.content_in(j)
    g_cont = poly_gcd(ca, cb)
    A = a.divexact(ca)
    B = b.divexact(cb)
    if A.deg_in(j) < B.deg_in(j):
        A, B = B, A
    while not B.is_zero:
        R = A._prem(B, j)
        if not R.is_zero:
            R = R.divexact(R.content_in(j))
        A, B = B, R
    return (g_cont * A).monic()
