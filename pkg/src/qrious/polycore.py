"""Exact dense polynomial arithmetic over arbitrary-precision integers.

A polynomial is a dense sequence of integer coefficients, ascending by
exponent.  Everything here is exact: no floating point, no modular
reduction.  Products above a size threshold are routed through a single
big-integer multiplication (coefficients packed into fixed-width slots),
which delegates the heavy lifting to gmpy2 when available.

Besides the generic ring operations this module provides the q-analogue
building blocks: q-numbers, q-factorials, Gaussian binomials and
cyclotomic polynomials.
"""

from __future__ import annotations

import functools
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpz = int

#: Operand length (in coefficient slots) up to which schoolbook convolution
#: is used; larger products go through big-integer packing.
MUL_THRESHOLD = 64


class NonExactDivision(ArithmeticError):
    """Division left a remainder or a fractional coefficient.

    Raised whenever an integrality assumption fails, e.g. when a
    factorial ratio is not actually a polynomial over the integers.
    """


class Poly:
    """Dense integer polynomial, coefficient of q^i at index i.

    The zero polynomial is the empty sequence; otherwise the trailing
    coefficient is nonzero.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> int:
        """Coefficient of q^i; zero beyond the stored range."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: Poly) -> Poly:
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: Poly) -> Poly:
        return poly_mul(self, other)

    def shift(self, k: int) -> Poly:
        """Multiply by q^k."""
        if self.is_zero():
            return self
        return Poly([0] * k + list(self.coeffs))

    def evaluate(self, x: int) -> int:
        """Exact evaluation at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def max_coeff_bits(self) -> int:
        """Bit length of the largest coefficient magnitude."""
        return max((abs(c).bit_length() for c in self.coeffs), default=0)

    def as_strings(self) -> list[str]:
        """Serialize as decimal strings, ascending exponent.

        Decimal strings because coefficients routinely exceed the 64-bit
        range at large degree.
        """
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> Poly:
        return cls(int(s) for s in items)

    def __repr__(self) -> str:
        if len(self.coeffs) <= 8:
            return f"Poly({list(self.coeffs)})"
        head = ", ".join(map(str, self.coeffs[:4]))
        return f"Poly([{head}, ...]; degree={self.degree})"


ZERO = Poly()
ONE = Poly((1,))


# ---------------------------------------------------------------------------
# multiplication


def _school_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) > len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            seg = out[i : i + len(b)]
            out[i : i + len(b)] = [x + ca * cb for x, cb in zip(seg, b)]
    return out


def _packed_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact product via Kronecker-style packing into one big integer.

    Coefficients (possibly negative) are laid out in fixed-width byte
    slots wide enough that no convolution sum can overflow into its
    neighbour; a single big-integer multiply then performs the whole
    convolution at once.  Slot values are recovered with an offset trick
    so that signed coefficients round-trip exactly.
    """
    max_a = max(abs(c) for c in a)
    max_b = max(abs(c) for c in b)
    bound = max_a * max_b * min(len(a), len(b))
    slot_bits = bound.bit_length() + 1
    width = (slot_bits + 7) // 8
    half = 1 << (8 * width - 1)

    def pack(cs: Sequence[int]) -> int:
        pos = bytearray(len(cs) * width)
        neg = bytearray(len(cs) * width)
        for i, c in enumerate(cs):
            if c > 0:
                pos[i * width : i * width + width] = c.to_bytes(width, "little")
            elif c < 0:
                neg[i * width : i * width + width] = (-c).to_bytes(width, "little")
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    value = int(_mpz(pack(a)) * _mpz(pack(b)))

    n_out = len(a) + len(b) - 1
    # Per-slot offset of 2^(bits-1): keeps every slot of the sum nonnegative
    # without inter-slot carries, so byte slicing recovers the coefficients.
    offset_pattern = bytes(width - 1) + b"\x80"
    value += int.from_bytes(offset_pattern * n_out, "little")
    raw = value.to_bytes(n_out * width, "little")
    return [
        int.from_bytes(raw[i * width : (i + 1) * width], "little") - half
        for i in range(n_out)
    ]


def _mul_lists(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) * len(b) <= MUL_THRESHOLD * MUL_THRESHOLD:
        return _school_mul(a, b)
    return _packed_mul(a, b)


def poly_mul(p: Poly, r: Poly) -> Poly:
    """Exact convolution product."""
    return Poly(_mul_lists(p.coeffs, r.coeffs))


def poly_pow(p: Poly, e: int) -> Poly:
    """p**e by binary exponentiation, e >= 0."""
    if e < 0:
        raise ValueError("negative exponent")
    result = ONE
    base = p
    while e:
        if e & 1:
            result = poly_mul(result, base)
        base_needed = e > 1
        if base_needed:
            base = poly_mul(base, base)
        e >>= 1
    return result


def poly_prod(factors: Iterable[Poly]) -> Poly:
    """Product of many polynomials by balanced pairwise reduction.

    Pairwise reduction keeps the operands of each multiplication close
    in size, which matters once products reach degrees in the tens of
    thousands.
    """
    items = list(factors)
    if not items:
        return ONE
    while len(items) > 1:
        nxt = [
            poly_mul(items[i], items[i + 1]) if i + 1 < len(items) else items[i]
            for i in range(0, len(items), 2)
        ]
        items = nxt
    return items[0]


# ---------------------------------------------------------------------------
# division


def _exact_div_lists(num: Sequence[int], den: Sequence[int]) -> list[int]:
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if not num:
        return []
    if len(num) < len(den):
        raise NonExactDivision("dividend degree below divisor degree")
    lead = den[-1]
    dn = len(den)
    rem = list(num)
    quot = [0] * (len(num) - dn + 1)
    for i in reversed(range(len(quot))):
        c = rem[i + dn - 1]
        if c % lead:
            raise NonExactDivision(f"coefficient {c} not divisible by {lead}")
        t = c // lead
        quot[i] = t
        if t:
            for j in range(dn):
                rem[i + j] -= t * den[j]
    if any(rem[: dn - 1]):
        raise NonExactDivision("nonzero remainder")
    return quot


def poly_exact_div(p: Poly, r: Poly) -> Poly:
    """Quotient s with p = r*s exactly over the integers.

    Raises NonExactDivision when no such s exists; that always signals a
    violated integrality assumption upstream.
    """
    return Poly(_exact_div_lists(p.coeffs, r.coeffs))


# ---------------------------------------------------------------------------
# binomial-factor ladder
#
# Multiplying or dividing by 1 - q^k is a single O(degree) pass, and every
# q-number is a ratio of two such factors.  All q-factorial products and
# ratios below are chains of these passes, which keeps their cost linear
# in the result degree per factor instead of quadratic.


def _mul_one_minus_qk(cs: list[int], k: int) -> list[int]:
    if not cs:
        return cs
    out = cs + [0] * k
    out[k:] = [x - y for x, y in zip(out[k:], cs)]
    return out


def _div_one_minus_qk(cs: list[int], k: int) -> list[int]:
    """Exact division by 1 - q^k via the recurrence s[i] = p[i] + s[i-k]."""
    if not cs:
        return cs
    n = len(cs) - k
    if n <= 0:
        raise NonExactDivision("dividend degree below divisor degree")
    out = cs[:n]
    if k == 1:
        out = list(accumulate(out))
    else:
        for r in range(k):
            seg = out[r::k]
            if len(seg) > 1:
                out[r::k] = accumulate(seg)
    for i in range(n, len(cs)):
        prev = out[i - k] if i - k >= 0 else 0
        if cs[i] != -prev:
            raise NonExactDivision("nonzero remainder")
    return out


def _mul_q_number(cs: list[int], k: int) -> list[int]:
    # times [k] = (1 - q^k)/(1 - q); exact for any polynomial input
    if k <= 1:
        return cs
    return _div_one_minus_qk(_mul_one_minus_qk(cs, k), 1)


def _div_q_number(cs: list[int], k: int) -> list[int]:
    # by [k]; multiply by 1 - q first so the division is the last step
    if k <= 1:
        return cs
    return _div_one_minus_qk(_mul_one_minus_qk(cs, 1), k)


def factorial_ratio_coeffs(
    nums: Iterable[int], dens: Iterable[int]
) -> list[int]:
    """Coefficients of prod [a]! / prod [b]! computed factor by factor.

    Numerator factorials are folded in smallest first, denominator
    factorials divided out largest first; within each factorial the
    q-numbers go in ascending order.  Any processing order keeps the
    intermediate values in Z[q] whenever the full ratio is, so a
    NonExactDivision here proves the ratio is not a polynomial.
    """
    out = [1]
    for a in sorted(nums):
        for k in range(2, a + 1):
            out = _mul_q_number(out, k)
    for b in sorted(dens, reverse=True):
        for k in range(2, b + 1):
            out = _div_q_number(out, k)
    return out


# ---------------------------------------------------------------------------
# q-analogue building blocks


def q_number(n: int) -> Poly:
    """[n] = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q-number of a negative integer")
    return Poly([1] * n)


def q_factorial(n: int) -> Poly:
    """[n]! = [1][2]...[n]; the empty product for n = 0.

    Degree n(n-1)/2.
    """
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    return Poly(factorial_ratio_coeffs([n], []))


def gauss_binomial(m: int, n: int) -> Poly:
    """[m+n]! / ([m]! [n]!), the Gaussian binomial coefficient.

    Degree m*n; the coefficient of q^i counts partitions of i fitting
    inside an m x n rectangle.
    """
    if m < 0 or n < 0:
        raise ValueError("Gaussian binomial needs nonnegative arguments")
    return Poly(factorial_ratio_coeffs([m + n], [m, n]))


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> Poly:
    """The d-th cyclotomic polynomial.

    Computed by exactly dividing q^d - 1 by the cyclotomic polynomials of
    the proper divisors of d.  Results are memoized for the lifetime of
    the process; concurrent insertion of the same key is harmless because
    the value is identical.
    """
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    cs = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            cs = _exact_div_lists(cs, cyclotomic(e).coeffs)
    return Poly(cs)
