"""Exact polynomials in one indeterminate over the integers.

Dimensions of corepresentation classes are kept as polynomials in the matrix
size n instead of evaluated integers, so that dimension identities can be
checked exactly.  The class is deliberately tiny: dense coefficient tuples,
arbitrary-precision arithmetic, deterministic rendering.
"""

from __future__ import annotations


class IntPoly:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of the i-th power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def var(cls) -> "IntPoly":
        """The indeterminate itself."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        result = IntPoly((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, value: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def render(self, var: str = "n") -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            if power == 0:
                body = str(abs(c))
            else:
                base = var if power == 1 else f"{var}^{power}"
                body = base if abs(c) == 1 else f"{abs(c)}*{base}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append((" + " if c > 0 else " - ") + body)
        return "".join(chunks)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"IntPoly({self.coeffs!r})"
