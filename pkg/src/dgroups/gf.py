"""Small finite fields: prime order, and 2^k via fixed irreducible moduli.

Elements are plain ints: residues mod p in the prime case, bit vectors
of polynomial coefficients in the binary case.  Only what the group
builders need is here; other prime powers raise UnsupportedOrder.
"""

from __future__ import annotations

__all__ = ["UnsupportedOrder", "Field", "is_prime", "BINARY_MODULI"]

# Low-weight irreducible polynomials over GF(2), bit k set for x^k.
BINARY_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}


class UnsupportedOrder(ValueError):
    """Field order is neither a supported prime nor a supported 2^k."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """GF(q) arithmetic for prime q or q = 2^k with k in the moduli table."""

    def __init__(self, q: int):
        if q >= 2 and q & (q - 1) == 0:
            k = q.bit_length() - 1
            if k not in BINARY_MODULI:
                raise UnsupportedOrder(f"no modulus on file for GF(2^{k})")
            self.q = q
            self.char = 2
            self.k = k
            self._modulus = BINARY_MODULI[k]
        elif is_prime(q):
            self.q = q
            self.char = q
            self.k = 1
            self._modulus = None
        else:
            raise UnsupportedOrder(f"order {q} is not a prime or supported 2^k")

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._modulus is not None:
            return a ^ b
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        if self._modulus is not None:
            return a ^ b
        return (a - b) % self.q

    def neg(self, a: int) -> int:
        if self._modulus is not None:
            return a
        return (-a) % self.q

    def mul(self, a: int, b: int) -> int:
        if self._modulus is None:
            return (a * b) % self.q
        acc = 0
        x, y = a, b
        while y:
            if y & 1:
                acc ^= x
            x <<= 1
            if x & self.q:
                x ^= self._modulus
            y >>= 1
        return acc

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        acc, x = 1, a
        while e:
            if e & 1:
                acc = self.mul(acc, x)
            x = self.mul(x, x)
            e >>= 1
        return acc

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # -- structure ----------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        order = 1
        x = a
        while x != 1:
            x = self.mul(x, a)
            order += 1
        return order

    def primitive_element(self) -> int:
        for a in range(2, self.q):
            if self.element_order(a) == self.q - 1:
                return a
        if self.q == 2:
            return 1
        raise AssertionError("no primitive element found; field broken")
