from functools import cached_property
from typing import List, Optional, Sequence

import galois
import numpy as np


class ResidueField:
    """The residue field F_q with elements encoded as ints in [0, q).

    For f > 1 the encoding is galois' integer representation of F_p[X]/(m):
    the element a_{f-1} X^{f-1} + ... + a_0 is the int sum a_i p^i.
    """

    def __init__(self, p: int, f: int = 1, modulus: Optional[Sequence[int]] = None):
        self.p = p
        self.f = f
        self.q = p**f
        if f == 1:
            self.gf = galois.GF(p)
            self._add = self._mul = None
        else:
            irreducible = galois.Poly(list(modulus), field=galois.GF(p))
            self.gf = galois.GF(self.q, irreducible_poly=irreducible)
            elements = self.gf.elements
            self._add = (elements[:, None] + elements[None, :]).view(np.ndarray).tolist()
            self._mul = (elements[:, None] * elements[None, :]).view(np.ndarray).tolist()
            self._neg = (-elements).view(np.ndarray).tolist()
            self._inv = [0] + (elements[1:] ** -1).view(np.ndarray).tolist()

    def add(self, a: int, b: int) -> int:
        if self._add is None:
            return (a + b) % self.p
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        if self._mul is None:
            return (a * b) % self.p
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        if self._add is None:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in the residue field")
        if self._add is None:
            return pow(a, -1, self.p)
        return self._inv[a]

    def power(self, a: int, n: int) -> int:
        if n < 0:
            return self.power(self.inv(a), -n)
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the rational integer n; F_p sits in F_q as the ints 0..p-1."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def sqrt_all(self, a: int) -> List[int]:
        return [r for r in range(self.q) if self.mul(r, r) == a]

    def is_square(self, a: int) -> bool:
        return bool(self.sqrt_all(a))

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    @cached_property
    def generator(self) -> int:
        """The class of X in F_p[X]/(m); only meaningful for f > 1."""
        return self.p

    @cached_property
    def primitive_element(self) -> int:
        return int(self.gf.primitive_element)

    def element_of_order(self, n: int) -> Optional[int]:
        if (self.q - 1) % n:
            return None
        return self.power(self.primitive_element, (self.q - 1) // n)

    def render(self, a: int) -> str:
        if a < self.p:
            return str(a)
        digits = []
        x = a
        while x:
            digits.append(x % self.p)
            x //= self.p
        terms = []
        for i in reversed(range(len(digits))):
            c = digits[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "X" if i == 1 else f"X^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "(" + " + ".join(terms) + ")"
