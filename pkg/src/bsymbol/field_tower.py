"""Exact arithmetic in the tower F_p < F_q < F_{q^r}.

Every element lives in a single degree-(e*r) extension of F_p, stored as its
polynomial-basis coordinates (constant term first).  F_q is recognised as the
subfield fixed by the e-th power of Frobenius.

Scalar operations (``FieldElement`` arithmetic, :func:`trace`,
:func:`is_square`) go through plain polynomial arithmetic.  The ``*_values``
methods on :class:`Tower` are vectorised numpy kernels working on integer
encodings ``sum(c_i * p**i)`` and backed by discrete-log tables; the test
suite checks the two routes against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .conway import conway_polynomial
from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    NonPrime,
    NotInSubfield,
    OddExtension,
    ReducibleModulus,
    ZeroInput,
)

# Log/antilog tables are refused above this field size.
TABLE_LIMIT = 1 << 24


# ---------------------------------------------------------------------------
# integer helpers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


# ---------------------------------------------------------------------------
# polynomials over F_p: tuples of coefficients, constant term first, trimmed

def _trim(a: Sequence[int]) -> tuple[int, ...]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _poly_divmod(a, b, p):
    a = list(_trim(a))
    b = _trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = (a[k + len(b) - 1] * inv_lead) % p
        quot[k] = c
        if c:
            for i, bi in enumerate(b):
                a[k + i] = (a[k + i] - c * bi) % p
    return _trim(quot), _trim(a[: len(b) - 1])


def _poly_mulmod(a, b, f, p):
    prod = [0] * max(len(a) + len(b) - 1, 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _poly_divmod([c % p for c in prod], f, p)[1]


def _poly_powmod(a, k, f, p):
    result: tuple[int, ...] = (1,)
    base = _poly_divmod(a, f, p)[1]
    while k:
        if k & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        k >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple((c * inv) % p for c in a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    f = _trim(modulus)
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    x = _poly_divmod((0, 1), f, p)[1]

    def frob_power(k):
        h = x
        for _ in range(k):
            h = _poly_powmod(h, p, f, p)
        return h

    if _poly_sub(frob_power(m), x, p) != ():
        return False
    for ell in factorize(m):
        g = _poly_gcd(f, _poly_sub(frob_power(m // ell), x, p), p)
        if len(g) != 1:
            return False
    return True


def is_primitive_polynomial(modulus: Sequence[int], p: int) -> bool:
    f = _trim(modulus)
    if not is_irreducible(f, p):
        return False
    order = p ** (len(f) - 1) - 1
    x = _poly_divmod((0, 1), f, p)[1]
    return all(_poly_powmod(x, order // ell, f, p) != (1,) for ell in factorize(order))


def smallest_primitive_polynomial(p: int, m: int) -> tuple[int, ...]:
    """First primitive monic polynomial of degree m, ordering the non-leading
    coefficients as a base-p integer with the constant term least significant."""
    for code in range(1, p**m):
        coeffs = [(code // p**i) % p for i in range(m)]
        if coeffs[0] == 0:
            continue
        f = tuple(coeffs) + (1,)
        if is_primitive_polynomial(f, p):
            return f
    raise RuntimeError(f"no primitive polynomial of degree {m} over F_{p}")  # pragma: no cover


def parse_modulus(text: str) -> tuple[int, ...]:
    """Parse a comma-separated coefficient list, constant term first."""
    return tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok != "")


def format_modulus(coeffs: Sequence[int]) -> str:
    return ",".join(str(c) for c in coeffs)


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Tower:
    """The chain F_p < F_q < F_{q^r} with a fixed primitive element ``eta``.

    Build instances with :func:`build_tower`; the constructor does not
    validate.  Immutable: the cached tables are pure functions of the fields.
    """

    p: int
    e: int
    r: int
    modulus: tuple[int, ...]
    eta_coeffs: tuple[int, ...]

    @property
    def m(self) -> int:
        return self.e * self.r

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def Q(self) -> int:
        return self.p**self.m

    # -- element construction ------------------------------------------------

    def element(self, coeffs: Sequence[int] | int) -> FieldElement:
        if isinstance(coeffs, (int, np.integer)):
            return self.from_value(int(coeffs))
        c = [int(v) % self.p for v in coeffs]
        if len(c) > self.m:
            c = list(_poly_divmod(c, self.modulus, self.p)[1])
        return FieldElement(self, tuple(c + [0] * (self.m - len(c))))

    def from_value(self, value: int) -> FieldElement:
        if not 0 <= value < self.Q:
            raise ValueError(f"encoding {value} outside [0, {self.Q})")
        return FieldElement(self, tuple((value // self.p**i) % self.p for i in range(self.m)))

    def constant(self, c: int) -> FieldElement:
        return self.element([c])

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.m)

    @property
    def one(self) -> FieldElement:
        return self.constant(1)

    @property
    def eta(self) -> FieldElement:
        return FieldElement(self, self.eta_coeffs)

    @cached_property
    def order_factors(self) -> dict[int, int]:
        return factorize(self.Q - 1)

    # -- scalar kernels ------------------------------------------------------

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, m, f = self.p, self.m, self.modulus
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        # x^m = -(f_0 + ... + f_{m-1} x^{m-1})
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k] % p
            if c:
                base = k - m
                for i in range(m):
                    if f[i]:
                        prod[base + i] -= c * f[i]
        return tuple(v % p for v in prod[:m])

    def _pow(self, a: tuple[int, ...], k: int) -> tuple[int, ...]:
        if not any(a):
            if k < 0:
                raise DivisionByZero("zero has no inverse")
            return self.one.coeffs if k == 0 else a
        k %= self.Q - 1
        result = self.one.coeffs
        while k:
            if k & 1:
                result = self._mul(result, a)
            a = self._mul(a, a)
            k >>= 1
        return result

    def is_primitive(self, x: FieldElement) -> bool:
        if x.is_zero:
            return False
        n = self.Q - 1
        return all((x ** (n // ell)) != self.one for ell in self.order_factors)

    # -- lookup tables -------------------------------------------------------

    def _require_tables(self) -> None:
        if self.Q > TABLE_LIMIT:
            raise MemoryError(f"field of size {self.Q} exceeds the table limit {TABLE_LIMIT}")

    @cached_property
    def place_values(self) -> np.ndarray:
        return self.p ** np.arange(self.m, dtype=np.int64)

    @cached_property
    def digits(self) -> np.ndarray:
        """(Q, m) array: coordinates of every element, indexed by encoding."""
        self._require_tables()
        vals = np.arange(self.Q, dtype=np.int64)[:, None]
        return ((vals // self.place_values) % self.p).astype(np.int8)

    def _mul_matrix(self, y: tuple[int, ...]) -> np.ndarray:
        # row i holds the coordinates of x^i * y
        rows = []
        for i in range(self.m):
            basis = [0] * self.m
            basis[i] = 1
            rows.append(self._mul(tuple(basis), y))
        return np.array(rows, dtype=np.int64)

    @cached_property
    def exp_table(self) -> np.ndarray:
        """exp_table[k] = encoding of eta**k for 0 <= k < Q - 1."""
        self._require_tables()
        p, n = self.p, self.Q - 1
        step = self._mul_matrix(self.eta_coeffs)
        block = max(1, math.isqrt(n))
        first = np.zeros((block, self.m), dtype=np.int64)
        first[0, 0] = 1
        for i in range(1, block):
            first[i] = first[i - 1] @ step % p
        jump = self._mul_matrix(self._pow(self.eta_coeffs, block))
        out = np.empty(n, dtype=np.int64)
        cur = first
        for start in range(0, n, block):
            stop = min(start + block, n)
            out[start:stop] = (cur[: stop - start] @ self.place_values)
            cur = cur @ jump % p
        return out

    @cached_property
    def log_table(self) -> np.ndarray:
        """log_table[v] = k with eta**k encoded by v; log_table[0] = -1."""
        log = np.full(self.Q, -1, dtype=np.int64)
        log[self.exp_table] = np.arange(self.Q - 1, dtype=np.int64)
        return log

    def _linear_map_matrix(self, fn) -> np.ndarray:
        rows = []
        for i in range(self.m):
            basis = [0] * self.m
            basis[i] = 1
            rows.append(fn(FieldElement(self, tuple(basis))).coeffs)
        return np.array(rows, dtype=np.int64)

    @cached_property
    def trace_matrix_q(self) -> np.ndarray:
        return self._linear_map_matrix(lambda x: trace(x, "q"))

    @cached_property
    def trace_matrix_p(self) -> np.ndarray:
        return self._linear_map_matrix(lambda x: trace(x, "p"))

    @cached_property
    def trace_q_table(self) -> np.ndarray:
        """Tr_{q^r/q} of every element, indexed by encoding."""
        return self.trace_values(np.arange(self.Q, dtype=np.int64), "q")

    # -- vectorised kernels on encodings ------------------------------------

    def encode(self, digits: np.ndarray) -> np.ndarray:
        return np.asarray(digits, dtype=np.int64) @ self.place_values

    def add_values(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        s = (self.digits[a].astype(np.int64) + self.digits[b]) % self.p
        return s @ self.place_values

    def neg_values(self, a) -> np.ndarray:
        return ((-self.digits[np.asarray(a, dtype=np.int64)].astype(np.int64)) % self.p) @ self.place_values

    def mul_values(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        la, lb = self.log_table[a], self.log_table[b]
        out = self.exp_table[(la + lb) % (self.Q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def power_values(self, exponents) -> np.ndarray:
        """Encodings of eta**k for an array of integer exponents."""
        return self.exp_table[np.asarray(exponents, dtype=np.int64) % (self.Q - 1)]

    def trace_values(self, values, sub: str = "q") -> np.ndarray:
        mat = {"q": self.trace_matrix_q, "p": self.trace_matrix_p}[sub]
        d = self.digits[np.asarray(values, dtype=np.int64)].astype(np.int64)
        return (d @ mat % self.p) @ self.place_values

    def square_mask(self, values) -> np.ndarray:
        """Boolean mask of squares; rejects zero like :func:`is_square`."""
        logs = self.log_table[np.asarray(values, dtype=np.int64)]
        if np.any(logs < 0):
            raise ZeroInput("squareness is undefined for 0")
        return logs % 2 == 0

    def subfield_values(self, which: str = "q") -> np.ndarray:
        return np.array([z.value for z in subfield_elements(self, which)], dtype=np.int64)

    # -- provenance ----------------------------------------------------------

    def provenance(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "r": self.r,
            "modulus": format_modulus(self.modulus),
            "eta": format_modulus(self.eta_coeffs),
        }


@dataclass(frozen=True)
class FieldElement:
    """An element of F_{q^r}; ``coeffs`` are polynomial-basis coordinates."""

    tower: Tower = field(repr=False)
    coeffs: tuple[int, ...]

    @property
    def value(self) -> int:
        p = self.tower.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __int__(self) -> int:
        return self.value

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.tower != self.tower:
                raise ValueError("elements belong to different towers")
            return other
        if isinstance(other, (int, np.integer)):
            return self.tower.constant(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.tower.p
        return FieldElement(self.tower, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.tower.p
        return FieldElement(self.tower, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.tower, self.tower._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return FieldElement(self.tower, self.tower._pow(self.coeffs, int(k)))

    def inverse(self) -> FieldElement:
        if self.is_zero:
            raise DivisionByZero("zero has no inverse")
        return self ** (self.tower.Q - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def frobenius(self, k: int = 1) -> FieldElement:
        """x -> x**(p**k)."""
        return self ** (self.tower.p ** k)

    def __repr__(self) -> str:
        terms = [
            (str(c) if i == 0 else f"{'' if c == 1 else c}x{'' if i == 1 else '^' + str(i)}")
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return "FieldElement(" + (" + ".join(reversed(terms)) or "0") + ")"


# ---------------------------------------------------------------------------
# operations

def build_tower(p: int, e: int, r: int, modulus: Sequence[int] | str | None = None) -> Tower:
    """Construct the tower F_p < F_{p^e} < F_{p^(e r)}.

    Without an explicit modulus the Conway polynomial of degree e*r is used
    when tabulated, otherwise the smallest primitive polynomial.  ``eta`` is
    the class of x when the modulus is primitive, else the primitive element
    with the smallest encoding.
    """
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported; p must be odd")
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("e must be a positive integer")
    if r < 2 or r % 2:
        raise OddExtension(f"r must be an even integer >= 2, got {r}")
    m = e * r
    if modulus is None:
        f = conway_polynomial(p, m) or smallest_primitive_polynomial(p, m)
    else:
        f = parse_modulus(modulus) if isinstance(modulus, str) else tuple(int(c) for c in modulus)
        f = tuple(c % p for c in f)
        if len(_trim(f)) != m + 1:
            raise ReducibleModulus(f"modulus must have degree {m}")
        if f[-1] != 1:
            raise ReducibleModulus("modulus must be monic")
    if not is_irreducible(f, p):
        raise ReducibleModulus(f"{format_modulus(f)} is not irreducible over F_{p}")

    x = (0, 1) + (0,) * (m - 2)
    tower = Tower(p, e, r, tuple(f), x)
    if not tower.is_primitive(tower.eta):
        eta = next(z for z in (tower.from_value(v) for v in range(2, tower.Q)) if tower.is_primitive(z))
        tower = Tower(p, e, r, tuple(f), eta.coeffs)
    return tower


def arithmetic(x: FieldElement, y: FieldElement | int, op: str) -> FieldElement:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "pow":
        return x ** int(y)
    raise ValueError(f"unknown operation {op!r}")


def trace(x: FieldElement, sub: str = "q", source: str | None = None) -> FieldElement:
    """Trace of x down to F_q (``sub="q"``) or F_p (``sub="p"``).

    With ``source="q"`` and ``sub="p"`` the input is taken as an element of
    F_q and Tr_{q/p} is returned; inputs outside F_q raise NotInSubfield.
    """
    t = x.tower
    if sub == "q":
        if source not in (None, "qr"):
            raise ValueError("trace to F_q is only defined from F_{q^r}")
        steps, k = t.r, t.e
    elif sub == "p":
        if source == "q":
            if x.frobenius(t.e) != x:
                raise NotInSubfield("element is not fixed by x -> x^q")
            steps, k = t.e, 1
        elif source in (None, "qr"):
            steps, k = t.m, 1
        else:
            raise ValueError(f"unknown source field {source!r}")
    else:
        raise ValueError(f"unknown subfield {sub!r}")
    total = x
    conj = x
    for _ in range(steps - 1):
        conj = conj.frobenius(k)
        total = total + conj
    return total


def is_square(x: FieldElement) -> bool:
    if x.is_zero:
        raise ZeroInput("squareness is undefined for 0")
    return x ** ((x.tower.Q - 1) // 2) == x.tower.one


def subfield_elements(tower: Tower, which: str = "q") -> list[FieldElement]:
    """Elements of F_q (``which="q"``) or F_p (``"p"``), sorted by encoding."""
    if which == "p":
        return [tower.constant(c) for c in range(tower.p)]
    if which != "q":
        raise ValueError(f"unknown subfield {which!r}")
    omega = tower.eta ** ((tower.Q - 1) // (tower.q - 1))
    elems = [tower.zero]
    cur = tower.one
    for _ in range(tower.q - 1):
        elems.append(cur)
        cur = cur * omega
    return sorted(elems, key=lambda z: z.value)


def elements(tower: Tower) -> Iterable[FieldElement]:
    for v in range(tower.Q):
        yield tower.from_value(v)
