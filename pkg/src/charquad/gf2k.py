"""Arithmetic in the finite fields GF(2^k).

Elements are plain ints: bit i holds the coefficient of g^i where g is a
root of the field's defining polynomial over GF(2).  Addition is xor.  The
defining polynomial of degree k is the lexicographically smallest monic
irreducible, found once by brute force and cached, so a given k always
denotes the same concrete field.
"""

from __future__ import annotations

import functools

from .errors import DomainError


def _gf2_mulmod(a: int, b: int, mod: int) -> int:
    deg = mod.bit_length() - 1
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> deg & 1:
            a ^= mod
    return r


def _gf2_powmod(a: int, e: int, mod: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _gf2_mulmod(r, a, mod)
        a = _gf2_mulmod(a, a, mod)
        e >>= 1
    return r


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        while a.bit_length() >= b.bit_length() and a:
            a ^= b << (a.bit_length() - b.bit_length())
        a, b = b, a
    return a


def _prime_divisors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(mask: int) -> bool:
    d = mask.bit_length() - 1
    if d < 1:
        return False
    x = 0b10
    if _gf2_powmod(x, 1 << d, mask) != (x % mask if d == 1 else x):
        return False
    for p in _prime_divisors(d):
        t = _gf2_powmod(x, 1 << (d // p), mask) ^ x
        if _gf2_gcd(t, mask).bit_length() > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _modulus(k: int) -> int:
    if k == 1:
        return 0b10  # x itself: GF(2)[x]/(x) = GF(2)
    for mask in range(1 << k, 1 << (k + 1)):
        if mask & 1 == 0:
            continue  # must have nonzero constant term
        if _is_irreducible(mask):
            return mask
    raise AssertionError("no irreducible of degree %d" % k)


@functools.lru_cache(maxsize=None)
def GF(k: int) -> "GF2k":
    """The finite field of order 2^k (cached; ints are its elements)."""
    return GF2k(k)


class GF2k:
    """GF(2^k) with int-encoded elements; construct via the GF() factory."""

    __slots__ = ("k", "order", "modulus", "_wp_table", "_embeddings")

    def __init__(self, k: int):
        if k < 1:
            raise DomainError("field degree must be >= 1")
        self.k = k
        self.order = 1 << k
        self.modulus = _modulus(k)
        self._wp_table = None
        self._embeddings = {}

    def __repr__(self):
        return f"GF(2^{self.k})"

    def __eq__(self, other):
        return isinstance(other, GF2k) and other.k == self.k

    def __hash__(self):
        return hash(("GF2k", self.k))

    # -- arithmetic ---------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return _gf2_mulmod(a, b, self.modulus)

    def sqr(self, a: int) -> int:
        return _gf2_mulmod(a, a, self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.sqr(a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in %r" % self)
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def sqrt(self, a: int) -> int:
        # Frobenius is bijective: sqrt(a) = a^(2^(k-1))
        return self.pow(a, 1 << (self.k - 1)) if self.k > 1 else a

    def trace(self, a: int) -> int:
        """Absolute trace to GF(2); the result is Frobenius-fixed, so 0 or 1."""
        t = 0
        x = a
        for _ in range(self.k):
            t ^= x
            x = self.sqr(x)
        return t

    def elements(self):
        return range(self.order)

    # -- Artin-Schreier structure -------------------------------------------

    def wp(self, a: int) -> int:
        return self.sqr(a) ^ a

    def wp_solve(self, c: int) -> int | None:
        """Some y with y^2 + y = c, or None if c has nonzero trace."""
        if self._wp_table is None:
            table = {}
            for y in range(self.order):
                img = self.wp(y)
                table.setdefault(img, y)
            self._wp_table = table
        return self._wp_table.get(c)

    # -- embeddings ----------------------------------------------------------

    def embed_into(self, big: "GF2k"):
        """Field embedding GF(2^k) -> GF(2^K) for k | K, as a callable on ints.

        Deterministic: g maps to the smallest root of this field's defining
        polynomial in the big field.
        """
        if big.k % self.k:
            raise DomainError(f"no embedding {self!r} -> {big!r}")
        key = big.k
        fn = self._embeddings.get(key)
        if fn is not None:
            return fn
        if self.k == big.k:
            fn = lambda a: a
            self._embeddings[key] = fn
            return fn
        root = None
        for cand in range(big.order):
            acc = 0
            for i in range(self.modulus.bit_length() - 1, -1, -1):
                acc = big.mul(acc, cand)
                if self.modulus >> i & 1:
                    acc ^= 1
            if acc == 0:
                root = cand
                break
        if root is None:
            raise AssertionError("embedding root not found")
        powers = [1]
        for _ in range(1, self.k):
            powers.append(big.mul(powers[-1], root))

        def fn(a: int, _powers=tuple(powers), _big=big) -> int:
            r = 0
            i = 0
            while a:
                if a & 1:
                    r ^= _powers[i]
                a >>= 1
                i += 1
            return r

        self._embeddings[key] = fn
        return fn

    # -- printing -------------------------------------------------------------

    def to_str(self, a: int) -> str:
        if self.k == 1 or a in (0, 1):
            return str(a)
        terms = []
        for i in range(a.bit_length() - 1, -1, -1):
            if a >> i & 1:
                if i == 0:
                    terms.append("1")
                elif i == 1:
                    terms.append("w")
                else:
                    terms.append(f"w^{i}")
        return "+".join(terms)

    def from_str(self, s: str) -> int:
        s = s.replace(" ", "")
        val = 0
        for part in s.split("+"):
            if part == "1":
                val ^= 1
            elif part == "0":
                pass
            elif part == "w":
                val ^= 2
            elif part.startswith("w^"):
                val ^= 1 << int(part[2:])
            else:
                raise DomainError(f"bad field constant {s!r}")
        return val
