"""Coset representatives P(b) and the square count mu(b).

P(b) is a set of F_q^*-coset representatives for the nonzero vectors of
V = span_{F_q}(1, g, ..., g^(b-1)) with g = eta^N, listed in the normal form
"first nonzero coordinate equal to 1".  mu(b) counts its squares.

Every routine takes an optional ``eta_exponent`` k: the computation then uses
the primitive element eta^k in place of eta, which is how :func:`mu_scan`
explores the dependence of mu(b) on the choice of primitive element.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .code_core import CodeParams, validate_params
from .errors import BOutOfRange
from .field_tower import FieldElement, build_tower

# Published (p, q, r, N, b, mu) rows, reproduced by the ``table22`` command.
REFERENCE_MU_TABLE: list[tuple[int, int, int, int, int, int]] = [
    (3, 3, 2, 2, 2, 2),
    (3, 3, 4, 2, 2, 3),
    (3, 3, 4, 2, 3, 8),
    (3, 3, 4, 2, 4, 20),
    (5, 5, 2, 2, 2, 3),
    (5, 5, 4, 2, 2, 4),
    (5, 5, 4, 2, 3, 18),
    (5, 5, 4, 2, 4, 78),
    (3, 9, 2, 2, 2, 5),
    (3, 9, 4, 2, 2, 4),
    (3, 9, 4, 2, 3, 50),
    (3, 9, 4, 2, 4, 410),
    (3, 9, 6, 2, 2, 4),
    (3, 9, 6, 2, 3, 51),
    (3, 9, 6, 2, 4, 401),
    (3, 9, 6, 2, 5, 3728),
    (3, 9, 6, 2, 6, 33215),
    (5, 25, 2, 2, 2, 13),
    (5, 25, 4, 2, 2, 11),
    (5, 25, 4, 2, 3, 338),
    (5, 25, 4, 2, 4, 8138),
]


@dataclass(frozen=True, eq=False)
class PbSet:
    b: int
    values: np.ndarray
    params: CodeParams = field(repr=False)
    eta_exponent: int = 1

    @property
    def elements(self) -> list[FieldElement]:
        tower = self.params.tower
        return [tower.from_value(int(v)) for v in self.values]

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class MuReport:
    b: int
    mu: int
    pb_size: int
    eta_provenance: dict
    square_flags: tuple[bool, ...] = field(repr=False)

    @property
    def midpoint(self) -> Fraction:
        return Fraction(self.pb_size, 2)

    @property
    def deviation(self) -> Fraction:
        """|mu(b) - (q^b - 1)/(2(q - 1))|, logged as a diagnostic only."""
        return abs(self.mu - self.midpoint)

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "mu": self.mu,
            "pb_size": self.pb_size,
            "deviation_from_half": str(self.deviation),
            "eta_provenance": self.eta_provenance,
        }


@dataclass(frozen=True)
class MuScan:
    b: int
    distribution: dict[int, int]
    primitive_count: int
    scanned: int
    seed: int | None

    @property
    def min(self) -> int:
        return min(self.distribution)

    @property
    def max(self) -> int:
        return max(self.distribution)

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "distribution": {str(k): v for k, v in sorted(self.distribution.items())},
            "min": self.min,
            "max": self.max,
            "primitive_count": self.primitive_count,
            "scanned": self.scanned,
            "seed": self.seed,
        }


def _check_b(params: CodeParams, b: int) -> None:
    if not 2 <= b <= params.tower.r:
        raise BOutOfRange(f"b={b} outside [2, r={params.tower.r}]")


def _span_generators(params: CodeParams, b: int, eta_exponent: int) -> np.ndarray:
    return params.tower.power_values(eta_exponent * params.N * np.arange(b, dtype=np.int64))


def _rank_mod_p(rows: np.ndarray, p: int) -> int:
    a = np.array(rows, dtype=np.int64) % p
    rank = 0
    for col in range(a.shape[1]):
        pivot = next((i for i in range(rank, a.shape[0]) if a[i, col]), None)
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        a[rank] = a[rank] * pow(int(a[rank, col]), -1, p) % p
        for i in range(a.shape[0]):
            if i != rank and a[i, col]:
                a[i] = (a[i] - a[i, col] * a[rank]) % p
        rank += 1
    return rank


def independence_check(params: CodeParams, b: int, eta_exponent: int = 1) -> bool:
    """F_q-independence of 1, g, ..., g^(b-1), g = eta^N.

    Vectors are F_q-independent iff their products with an F_p-basis
    1, w, ..., w^(e-1) of F_q (w a generator of F_q^*) have F_p-rank e*b.
    """
    _check_b(params, b)
    tower = params.tower
    gens = _span_generators(params, b, eta_exponent)
    omega = tower.power_values((tower.Q - 1) // (tower.q - 1))
    basis = tower.power_values(int(tower.log_table[omega]) * np.arange(tower.e))
    products = tower.mul_values(gens[:, None], basis[None, :]).ravel()
    return _rank_mod_p(tower.digits[products], tower.p) == tower.e * b


def build_pb(params: CodeParams, b: int, eta_exponent: int = 1) -> PbSet:
    """P(b) = union over j of {g^(j-1) + x_1 g^j + ... + x_(b-j) g^(b-1)} plus {g^(b-1)}."""
    _check_b(params, b)
    tower = params.tower
    gens = _span_generators(params, b, eta_exponent)
    fq = tower.subfield_values("q")
    blocks = []
    for j in range(1, b):
        acc = gens[j - 1 : j]
        for i in range(j, b):
            acc = tower.add_values(acc[:, None], tower.mul_values(fq, gens[i])[None, :]).ravel()
        blocks.append(acc)
    blocks.append(gens[b - 1 : b])
    values = np.concatenate(blocks)
    values.flags.writeable = False
    return PbSet(b, values, params, eta_exponent)


def _eta_provenance(params: CodeParams, eta_exponent: int) -> dict:
    tower = params.tower
    eta = tower.eta ** eta_exponent
    return {
        "modulus": tower.provenance()["modulus"],
        "eta": ",".join(map(str, eta.coeffs)),
        "eta_exponent": eta_exponent,
    }


def mu(params: CodeParams, b: int, eta_exponent: int = 1) -> MuReport:
    pb = build_pb(params, b, eta_exponent)
    flags = params.tower.square_mask(pb.values)
    return MuReport(
        b=b,
        mu=int(flags.sum()),
        pb_size=len(pb),
        eta_provenance=_eta_provenance(params, eta_exponent),
        square_flags=tuple(bool(f) for f in flags),
    )


def mu_closed_r(params: CodeParams) -> int:
    q, Q = params.tower.q, params.tower.Q
    num, den = Q - 1, 2 * (q - 1)
    assert num % den == 0, "(q^r - 1)/(q - 1) must be even"
    return num // den


def primitive_exponents(params: CodeParams) -> np.ndarray:
    n = params.tower.Q - 1
    ks = np.arange(1, n, dtype=np.int64)
    return ks[np.gcd(ks, n) == 1]


def mu_scan(
    params: CodeParams,
    b: int,
    samples: int | None = None,
    seed: int = 0,
    threads: int = 1,
) -> MuScan:
    """Distribution of mu(b) over primitive elements eta^k, gcd(k, q^r - 1) = 1.

    All primitive elements are scanned unless ``samples`` caps the count, in
    which case a seeded random subset is used.
    """
    _check_b(params, b)
    ks = primitive_exponents(params)
    total = int(ks.size)
    used_seed = None
    if samples is not None and samples < total:
        ks = np.sort(np.random.default_rng(seed).choice(ks, size=samples, replace=False))
        used_seed = seed

    def one(k):
        return mu(params, b, int(k)).mu

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(one, ks))
    else:
        values = [one(k) for k in ks]
    dist: dict[int, int] = {}
    for v in values:
        dist[v] = dist.get(v, 0) + 1
    return MuScan(b, dist, total, int(ks.size), used_seed)


@dataclass(frozen=True)
class TableRow:
    p: int
    q: int
    r: int
    N: int
    b: int
    mu: int
    published_mu: int
    closed_form: int | None
    eta_provenance: dict

    @property
    def matches_published(self) -> bool:
        return self.mu == self.published_mu

    @property
    def closed_form_ok(self) -> bool | None:
        return None if self.closed_form is None else self.closed_form == self.mu


def reference_table(rows=REFERENCE_MU_TABLE) -> list[TableRow]:
    towers: dict[tuple[int, int, int], CodeParams] = {}
    out = []
    for p, q, r, N, b, published_mu in rows:
        e = next(k for k in range(1, 64) if p**k == q)
        key = (p, e, r, N)
        if key not in towers:
            towers[key] = validate_params(build_tower(p, e, r), N)
        params = towers[key]
        report = mu(params, b)
        closed = mu_closed_r(params) if b == r else None
        out.append(TableRow(p, q, r, N, b, report.mu, published_mu, closed, report.eta_provenance))
    return out
