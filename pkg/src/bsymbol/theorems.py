"""Closed-form b-symbol weights and executable checks of the supporting identities.

All character sums are replaced by exact fibre counts: for a set S of field
elements with N_t = #{y in S : Tr_{q^r/p}(y) = t} constant over t != 0,
sum_{y in S} zeta_p^{Tr(y)} = N_0 - N_1.  Closed forms are evaluated with
:class:`fractions.Fraction` and never rounded.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .code_core import CodeParams, WeightEnumerator, _codeword_values, b_weight
from .errors import BOutOfRange, NonIntegralResult, ZeroInput
from .field_tower import FieldElement, Tower, is_square
from .pb_mu import build_pb, mu as compute_mu, mu_closed_r


class QuadraticClass(enum.Enum):
    SQUARE = "square"
    NONSQUARE = "nonsquare"

    @classmethod
    def of(cls, a: FieldElement) -> QuadraticClass:
        return cls.SQUARE if is_square(a) else cls.NONSQUARE


@dataclass(frozen=True)
class ClosedFormWeight:
    value: Fraction
    case_tag: str
    inputs: dict = field(compare=False)

    @property
    def as_integer(self) -> int | None:
        return int(self.value) if self.value.denominator == 1 else None


@dataclass(frozen=True)
class ZCount:
    a: FieldElement
    z: int


@dataclass(frozen=True)
class GaussReport:
    which: str
    fiber_counts: dict[int, int]
    constancy_ok: bool
    sum_value: int
    expected: Fraction

    @property
    def ok(self) -> bool:
        return self.constancy_ok and self.sum_value == self.expected


@dataclass(frozen=True)
class KernelReport:
    kernel_size: int
    expected_size: int
    intersection_size: int
    intersection_is_h0: bool
    gcd_value: int

    @property
    def ok(self) -> bool:
        return (
            self.kernel_size == self.expected_size
            and self.intersection_size == self.expected_size
            and self.intersection_is_h0
            and self.gcd_value == self.expected_size
        )


def sign(tower: Tower) -> int:
    """+1 when p = 1 mod 4, else (-1)^(e r / 2)."""
    if tower.p % 4 == 1:
        return 1
    return -1 if (tower.m // 2) % 2 else 1


def z_closed(params: CodeParams, cls: QuadraticClass) -> Fraction:
    """Closed form of Z(a) for a nonzero a of the given class."""
    t = params.tower
    q, Q, half = t.q, t.Q, t.q ** (t.r // 2)
    s = -1 if cls is QuadraticClass.SQUARE else 1
    return Fraction(Q + s * sign(t) * (q - 1) * half, q)


def z_count(params: CodeParams, a: FieldElement) -> ZCount:
    """Z(a) = #{x in F_{q^r} : Tr(a x^N) = 0}, counted directly."""
    tower = params.tower
    if a.is_zero:
        return ZCount(a, tower.Q)
    la = int(tower.log_table[a.value])
    ks = np.arange(tower.Q - 1, dtype=np.int64)
    traces = tower.trace_q_table[tower.power_values(la + params.N * ks)]
    # x = 0 always contributes
    return ZCount(a, 1 + int(np.count_nonzero(traces == 0)))


def hamming_weight_closed(params: CodeParams, cls: QuadraticClass) -> Fraction:
    """w(c(a)) = (q^r - Z(a)) / N."""
    return (params.tower.Q - z_closed(params, cls)) / params.N


def closed_weight_value(params: CodeParams, b: int, cls: QuadraticClass, mu: Fraction | int) -> Fraction:
    """Raw closed-form value with no range or integrality checks (mu may be fractional)."""
    t = params.tower
    q, Q, N = t.q, t.Q, params.N
    eps = sign(t)
    s = 1 if cls is QuadraticClass.SQUARE else -1
    half = q ** (t.r // 2)
    lead = Fraction(q**b - 1, N * (q - 1) * q ** (b - 1))
    return lead * (Q - Fraction(Q + s * eps * (q - 1) * half, q)) + s * Fraction(2 * mu * eps * (q - 1) * half, N * q**b)


def theorem31(params: CodeParams, b: int, cls: QuadraticClass, mu: int) -> ClosedFormWeight:
    """Closed-form w_b(c(a)) for 2 <= b < r, given mu = mu(b)."""
    t = params.tower
    if not 2 <= b < t.r:
        raise BOutOfRange(f"b={b} outside [2, r-1={t.r - 1}]")
    q, N, eps = t.q, params.N, sign(t)
    value = closed_weight_value(params, b, cls, mu)
    tag = f"p{'1' if t.p % 4 == 1 else '3'}mod4_{cls.value}"
    inputs = {
        "q": q, "r": t.r, "N": N, "b": b, "mu": mu, "e": t.e,
        "p_mod_4": t.p % 4, "sign": eps,
    }
    result = ClosedFormWeight(value, tag, inputs)
    if result.as_integer is None:
        raise NonIntegralResult(f"closed form gives {value} for {inputs}; is mu correct?")
    if not 0 <= value <= params.n:
        raise NonIntegralResult(f"closed form {value} outside [0, n={params.n}]")
    return result


def theorem33(params: CodeParams, b: int) -> int:
    """w_b(c(a)) = n for every nonzero a once r <= b <= n - 1."""
    if not params.tower.r <= b <= params.n - 1:
        raise BOutOfRange(f"b={b} outside [r={params.tower.r}, n-1={params.n - 1}]")
    return params.n


def corollary_enumerator(params: CodeParams, b: int, mu: int | None = None) -> WeightEnumerator:
    """Closed-form enumerator: two weights for b < r, the single weight n for b >= r.

    ``mu`` defaults to the locally computed mu(b).
    """
    t = params.tower
    half_count = (t.Q - 1) // 2
    if t.r <= b <= params.n - 1:
        return WeightEnumerator(b, {0: 1, theorem33(params, b): t.Q - 1}, params)
    if not 2 <= b < t.r:
        raise BOutOfRange(f"b={b} outside [2, n-1={params.n - 1}]")
    if mu is None:
        mu = compute_mu(params, b).mu
    counts = {0: 1}
    for cls in QuadraticClass:
        w = theorem31(params, b, cls, mu).as_integer
        counts[w] = counts.get(w, 0) + half_count
    return WeightEnumerator(b, counts, params)


def hamming_enumerator_closed(params: CodeParams) -> WeightEnumerator:
    """b = 1 companion of :func:`corollary_enumerator`, from the Z(a) closed forms."""
    counts = {0: 1}
    for cls in QuadraticClass:
        w = hamming_weight_closed(params, cls)
        if w.denominator != 1:
            raise NonIntegralResult(f"Hamming weight {w} is not an integer")
        counts[int(w)] = counts.get(int(w), 0) + (params.tower.Q - 1) // 2
    return WeightEnumerator(1, counts, params)


def decomposition_sides(
    params: CodeParams,
    b: int,
    a: FieldElement,
    pb_values: np.ndarray | None = None,
    direct: bool = False,
) -> tuple[int, int]:
    """(q^(b-1) * w_b(c(a)), sum over theta in P(b) of w_1(c(theta a))).

    By default the right-hand side uses that c(a eta^N) is a cyclic shift of
    c(a), so w_1(c(eta^k)) only depends on k mod N and the N class weights
    are computed once by brute force.  ``direct=True`` builds every
    c(theta a) instead.
    """
    t = params.tower
    if not 2 <= b <= t.r:
        raise BOutOfRange(f"b={b} outside [2, r={t.r}]")
    if a.is_zero:
        raise ZeroInput("the decomposition identity concerns nonzero a")
    if pb_values is None:
        pb_values = build_pb(params, b).values
    lhs = t.q ** (b - 1) * b_weight(_codeword_values(params, a.value, params.n), b)
    if direct:
        products = t.mul_values(pb_values, a.value)
        rhs = sum(b_weight(_codeword_values(params, int(v), params.n), 1) for v in products)
        return lhs, rhs
    w1 = _residue_hamming_weights(params)
    la = int(t.log_table[a.value])
    residues = (t.log_table[pb_values] + la) % params.N
    rhs = int(w1[residues].sum())
    return lhs, rhs


@functools.lru_cache(maxsize=32)
def _residue_hamming_weights(params: CodeParams) -> np.ndarray:
    t = params.tower
    w = np.array(
        [b_weight(_codeword_values(params, int(t.exp_table[k]), params.n), 1) for k in range(params.N)],
        dtype=np.int64,
    )
    w.flags.writeable = False
    return w


def verify_decomposition(params: CodeParams, b: int, a: FieldElement, pb_values: np.ndarray | None = None) -> bool:
    lhs, rhs = decomposition_sides(params, b, a, pb_values)
    return lhs == rhs


def gauss_expected(tower: Tower, which: str) -> Fraction:
    s = -1 if which == "squares" else 1
    return Fraction(s * sign(tower) * tower.q ** (tower.r // 2) - 1, 2)


def gauss_counts(tower: Tower, which: str = "squares") -> GaussReport:
    """Trace fibres N_t over one quadratic class of F_{q^r}^*."""
    if which not in ("squares", "nonsquares"):
        raise ValueError(f"unknown class {which!r}")
    start = 0 if which == "squares" else 1
    ys = tower.exp_table[start::2]
    traces = tower.trace_values(ys, "p")  # encodings of constants are 0..p-1
    fibers = np.bincount(traces, minlength=tower.p)
    counts = {t: int(fibers[t]) for t in range(tower.p)}
    constancy = len({counts[t] for t in range(1, tower.p)}) == 1
    return GaussReport(which, counts, constancy, counts[0] - counts[1], gauss_expected(tower, which))


def _subgroup_H(params: CodeParams) -> np.ndarray:
    """Exponents of H = <eta^N>, the subgroup of order (q^r - 1)/N."""
    return params.N * np.arange(params.n, dtype=np.int64)


def _fq_star_logs(tower: Tower) -> np.ndarray:
    step = (tower.Q - 1) // (tower.q - 1)
    return step * np.arange(tower.q - 1, dtype=np.int64)


def verify_lemma41(params: CodeParams) -> KernelReport:
    """Kernel of (y, z) -> yz on F_q^* x H, enumerated pair by pair."""
    t = params.tower
    Qm1, q = t.Q - 1, t.q
    ly = _fq_star_logs(t)
    lz = _subgroup_H(params)
    products = (ly[:, None] + lz[None, :]) % Qm1
    kernel = int(np.count_nonzero(products == 0))
    expected = 2 * (q - 1) // params.N
    common = np.intersect1d(ly % Qm1, lz % Qm1)
    # H_0: the unique subgroup of order 2(q-1)/N, i.e. the exponents divisible by Qm1/expected
    h0 = (Qm1 // expected) * np.arange(expected, dtype=np.int64)
    return KernelReport(
        kernel_size=kernel,
        expected_size=expected,
        intersection_size=int(common.size),
        intersection_is_h0=bool(np.array_equal(np.sort(common), np.sort(h0))),
        gcd_value=math.gcd(q - 1, params.n),
    )


def lemma42_multiset(params: CodeParams, a: FieldElement) -> tuple[np.ndarray, np.ndarray]:
    """Multiplicity vectors (indexed by encoding) of {* a y z *} and of the claimed multiset."""
    t = params.tower
    if a.is_zero:
        raise ZeroInput("the multiset identity concerns nonzero a")
    Qm1 = t.Q - 1
    la = int(t.log_table[a.value])
    logs = (la + _fq_star_logs(t)[:, None] + _subgroup_H(params)[None, :]) % Qm1
    actual = np.bincount(t.exp_table[logs.ravel()], minlength=t.Q)
    claimed = np.zeros(t.Q, dtype=np.int64)
    cls_start = 0 if is_square(a) else 1
    claimed[t.exp_table[cls_start::2]] = 2 * (t.q - 1) // params.N
    return actual, claimed


def verify_lemma42(params: CodeParams, a: FieldElement) -> bool:
    actual, claimed = lemma42_multiset(params, a)
    return bool(np.array_equal(actual, claimed))


def brute_weight(params: CodeParams, a: FieldElement, b: int) -> int:
    return b_weight(_codeword_values(params, a.value, params.n), b)


def mu_r_matches(params: CodeParams) -> bool:
    return compute_mu(params, params.tower.r).mu == mu_closed_r(params)
