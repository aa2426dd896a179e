"""Irreducible cyclic codes, the b-symbol read map and b-symbol weights.

Vectors over F_q are numpy integer arrays holding element encodings from the
ambient tower (for q = p these are just the integers 0..p-1).  Weights only
look at which entries are zero, so any encoding with 0 as zero works for
:func:`pi_b`, :func:`b_weight` and :func:`b_distance`.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BOutOfRange, GcdNotTwo, LengthMismatch, LengthTooShort, NotDivisor
from .field_tower import FieldElement, Tower

# keeps the (batch, n) codeword matrix of the full enumerator around 32 MB
_BATCH_CELLS = 4_000_000


@dataclass(frozen=True)
class CodeParams:
    tower: Tower
    N: int

    @property
    def n(self) -> int:
        return (self.tower.Q - 1) // self.N

    @property
    def etaN(self) -> FieldElement:
        return self.tower.eta ** self.N

    @property
    def b_range(self) -> tuple[int, int]:
        return 2, self.n - 1

    def provenance(self) -> dict:
        return {**self.tower.provenance(), "N": self.N, "n": self.n, "q": self.tower.q}


@dataclass(frozen=True, eq=False)
class Codeword:
    entries: np.ndarray
    source_a: FieldElement


@dataclass(frozen=True, eq=False)
class ExtendedCodeword:
    entries: np.ndarray
    source_a: FieldElement


@dataclass(frozen=True)
class BSymbolImage:
    windows: tuple[tuple[int, ...], ...]
    b: int


@dataclass
class WeightEnumerator:
    """Exact b-symbol weight distribution: ``counts[w]`` codewords of weight w."""

    b: int
    counts: dict[int, int]
    params: CodeParams | None = field(default=None, compare=False, repr=False)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, c in self.counts.items() if w and c)

    def merge(self, other: WeightEnumerator) -> WeightEnumerator:
        if other.b != self.b:
            raise ValueError("cannot merge enumerators for different b")
        counts = dict(self.counts)
        for w, c in other.counts.items():
            counts[w] = counts.get(w, 0) + c
        return WeightEnumerator(self.b, counts, self.params or other.params)

    def polynomial(self) -> str:
        terms = []
        for w in sorted(self.counts):
            c = self.counts[w]
            if w == 0:
                terms.append(str(c))
            else:
                terms.append(f"{'' if c == 1 else c}T^{w}")
        return " + ".join(terms)

    def to_dict(self) -> dict:
        out = {"b": self.b, "counts": {str(w): self.counts[w] for w in sorted(self.counts)}}
        if self.params is not None:
            out["params"] = self.params.provenance()
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight", "count"])
        for w in sorted(self.counts):
            writer.writerow([w, self.counts[w]])
        return buf.getvalue()


@dataclass(frozen=True)
class MdsReport:
    b: int
    d_b: int
    M: int
    singleton_exponent: int
    is_mds: bool
    q: int

    @property
    def singleton_rhs(self) -> int:
        return self.q**self.singleton_exponent


# ---------------------------------------------------------------------------

def validate_params(tower: Tower, N: int) -> CodeParams:
    Q, q = tower.Q, tower.q
    if N < 1 or (Q - 1) % N:
        raise NotDivisor(f"N={N} does not divide q^r - 1 = {Q - 1}")
    g = math.gcd((Q - 1) // (q - 1), N)
    if g != 2:
        raise GcdNotTwo(g)
    if (Q - 1) // N < 3:
        raise LengthTooShort(f"code length n={(Q - 1) // N} is below 3")
    return CodeParams(tower, N)


def _check_b(b: int, n: int, low: int = 1) -> None:
    if not low <= b <= n - 1:
        raise BOutOfRange(f"b={b} outside [{low}, {n - 1}]")


def _codeword_values(params: CodeParams, a_value: int, length: int) -> np.ndarray:
    tower = params.tower
    if a_value == 0:
        return np.zeros(length, dtype=np.int64)
    la = int(tower.log_table[a_value])
    points = tower.power_values(la + params.N * np.arange(length, dtype=np.int64))
    return tower.trace_q_table[points]


def codeword(params: CodeParams, a: FieldElement) -> Codeword:
    """c(a) = (Tr(a eta^{jN}))_{0 <= j < n}."""
    entries = _codeword_values(params, a.value, params.n)
    entries.flags.writeable = False
    return Codeword(entries, a)


def extended_codeword(params: CodeParams, a: FieldElement) -> ExtendedCodeword:
    """The length-(q^r - 1) word (Tr(a eta^{jN}))_j, i.e. N periods of c(a)."""
    entries = _codeword_values(params, a.value, params.tower.Q - 1)
    entries.flags.writeable = False
    return ExtendedCodeword(entries, a)


def pi_b(x: Sequence[int], b: int) -> BSymbolImage:
    x = [int(v) for v in x]
    n = len(x)
    _check_b(b, n)
    return BSymbolImage(tuple(tuple(x[(i + k) % n] for k in range(b)) for i in range(n)), b)


def b_weight(x: Sequence[int], b: int) -> int:
    """Number of cyclic length-b windows of x that are not all zero.

    Linear-time scan over the maximal cyclic runs of zeros: a run of length
    L < n contains max(0, L - b + 1) all-zero windows.
    """
    z = np.asarray(x) == 0
    n = z.size
    _check_b(b, n)
    if z.all():
        return 0
    if not z.any():
        return n
    start = int(np.argmin(z))  # first nonzero entry
    z = np.roll(z, -start)
    edges = np.diff(np.concatenate(([0], z.astype(np.int8), [0])))
    runs = np.flatnonzero(edges == -1) - np.flatnonzero(edges == 1)
    return n - int(np.maximum(runs - b + 1, 0).sum())


def b_weights(rows: np.ndarray, b: int) -> np.ndarray:
    """Row-wise b-symbol weights of a 2-D array via windowed prefix sums."""
    z = np.asarray(rows) == 0
    n = z.shape[1]
    _check_b(b, n)
    ext = np.concatenate([z, z[:, : b - 1]], axis=1).astype(np.int32)
    cs = np.concatenate([np.zeros((z.shape[0], 1), dtype=np.int32), np.cumsum(ext, axis=1)], axis=1)
    zero_windows = (cs[:, b : b + n] - cs[:, :n]) == b
    return n - zero_windows.sum(axis=1)


def b_distance(x: Sequence[int], y: Sequence[int], b: int) -> int:
    x, y = np.asarray(x), np.asarray(y)
    if x.shape != y.shape:
        raise LengthMismatch(f"lengths {x.size} and {y.size} differ")
    # x - y vanishes exactly where the entries agree
    return b_weight((x != y).astype(np.int8), b)


def _class_weights(params: CodeParams, b: int) -> tuple[int, int]:
    """b-weights of c(1) (a square) and c(eta) (a non-square)."""
    tower = params.tower
    w_sq = b_weight(_codeword_values(params, tower.one.value, params.n), b)
    w_nsq = b_weight(_codeword_values(params, tower.eta.value, params.n), b)
    return w_sq, w_nsq


def _enumerate_chunk(params: CodeParams, b: int, ks: np.ndarray) -> WeightEnumerator:
    tower, n = params.tower, params.n
    idx = ks[:, None] + params.N * np.arange(n, dtype=np.int64)[None, :]
    rows = tower.trace_q_table[tower.power_values(idx)]
    weights, counts = np.unique(b_weights(rows, b), return_counts=True)
    return WeightEnumerator(b, {int(w): int(c) for w, c in zip(weights, counts)})


def enumerator(params: CodeParams, b: int, mode: str = "full", threads: int = 1) -> WeightEnumerator:
    """b-symbol weight enumerator of C.

    ``full`` evaluates every codeword.  ``by_class`` evaluates one square and
    one non-square representative and gives each weight (q^r - 1)/2 words;
    only use it for (p, e) where it has been checked against ``full``.
    """
    n, Q = params.n, params.tower.Q
    _check_b(b, n)
    if mode == "by_class":
        w_sq, w_nsq = _class_weights(params, b)
        result = WeightEnumerator(b, {0: 1}, params)
        return result.merge(WeightEnumerator(b, {w_sq: (Q - 1) // 2})).merge(
            WeightEnumerator(b, {w_nsq: (Q - 1) // 2})
        )
    if mode != "full":
        raise ValueError(f"unknown enumeration mode {mode!r}")

    batch = max(1, _BATCH_CELLS // n)
    chunks = [np.arange(s, min(s + batch, Q - 1), dtype=np.int64) for s in range(0, Q - 1, batch)]
    result = WeightEnumerator(b, {0: 1}, params)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda ks: _enumerate_chunk(params, b, ks), chunks))
    else:
        parts = [_enumerate_chunk(params, b, ks) for ks in chunks]
    for part in parts:
        result = result.merge(part)
    return result


def mds_check(params: CodeParams, b: int, mode: str = "full", threads: int = 1) -> MdsReport:
    """Compare |C| = q^r with the Singleton-type bound q^(n - d_b + b)."""
    _check_b(b, params.n, low=2)
    enum = enumerator(params, b, mode=mode, threads=threads)
    d_b = enum.nonzero_weights[0]
    exponent = params.n - d_b + b
    return MdsReport(b, d_b, params.tower.Q, exponent, params.tower.r == exponent, params.tower.q)
