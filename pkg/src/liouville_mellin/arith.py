"""Sieve-backed tables of the arithmetic functions lambda, mu, d, beta, nu.

For odd n with squarefree-times-square decomposition n = k*h^2 (k squarefree)
the signed square-part function is

    beta(n) = mu(k) * h,      |beta(n)| = h,

and nu is the weighted Moebius transform determined by

    n * nu(n) = sum_{k*l = n} mu(k) * beta(l) / sqrt(l)     (odd n),

equivalently  sum_{l | n} l * nu(l) = beta(n)/sqrt(n).  Both beta and nu are
stored as 0 at even indices so full-range Dirichlet sums need no parity
branching; the point API for beta still rejects even arguments.

Everything is built from one pass of prime sieves:

    lambda(n) = (-1)^Omega(n)           (Omega counted with multiplicity)
    h(n)      = product of p^floor(e/2) over p^e || n
    beta(n)   = lambda(n) * h(n)        (odd n; mu(k) = lambda(k) for
                                         squarefree k, and lambda(h^2) = 1)

nu is then a single Dirichlet-convolution sweep, accumulated in increasing
order of the beta-carrying divisor to limit cancellation error.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .errors import CacheFormatError, DomainError, InvalidArgumentError, RangeError

__all__ = ["ArithTable", "build_table", "liouville", "mobius", "divisor_count",
           "beta_value", "nu_value", "nu_partial_sum", "sqfree_square_split",
           "save_table", "load_table"]

CACHE_MAGIC = b"ARITHv1"

# fixed on-disk order: (name, dtype)
_CACHE_FIELDS = (
    ("spf", np.int32),
    ("liouville", np.int8),
    ("mobius", np.int8),
    ("dcount", np.int32),
    ("beta", np.int32),
    ("nu", np.float64),
    ("nu_cumsum", np.float64),
)


@dataclass
class ArithTable:
    """Immutable-by-convention bundle of sieve arrays covering 1..limit.

    Index 0 of every array is a placeholder.  A finished table is safe to
    share across threads: all point operations are pure reads.
    """

    limit: int
    spf: np.ndarray          # smallest prime factor, int32
    liouville: np.ndarray    # lambda(n) in {-1,+1}, int8
    mobius: np.ndarray       # mu(n) in {-1,0,+1}, int8
    dcount: np.ndarray       # number of divisors, int32
    beta: np.ndarray         # beta(n) for odd n, 0 for even, int32
    nu: np.ndarray           # nu(n), float64, 0 for even n
    nu_cumsum: np.ndarray    # S(n) = sum_{m<=n} nu(m), float64
    # suffix envelope sup_{m>=n} |S(m)| within the table; derived, rebuilt on load
    s_tail_max: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if self.s_tail_max is None:
            self.s_tail_max = suffix_abs_max(self.nu_cumsum)


def suffix_abs_max(values: np.ndarray) -> np.ndarray:
    return np.maximum.accumulate(np.abs(values)[::-1])[::-1]


def _primes_and_spf(limit: int) -> tuple[np.ndarray, np.ndarray]:
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p::p] = False
    primes = np.nonzero(is_p)[0]

    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in primes:
        if p * p > limit:
            break
        sl = spf[p * p::p]
        sl[sl == 0] = p
    untouched = spf == 0
    untouched[:2] = False
    spf[untouched] = np.nonzero(untouched)[0]
    return primes, spf


def build_table(limit: int, config=None) -> ArithTable:
    """Sieve every arithmetic array up to `limit` (inclusive).

    `config` is accepted for interface symmetry with the series evaluators
    and is currently unused: every quantity here is a finite exact sum.

    Raises:
        InvalidArgumentError: for limit < 1.
        MemoryError: propagated from numpy with the requested size when the
            arrays do not fit.
    """
    if limit < 1:
        raise InvalidArgumentError(f"table limit must be >= 1, got {limit}")
    n = int(limit)

    primes, spf = _primes_and_spf(n)

    # Omega(n) with multiplicity, via one pass per prime power
    omega = np.zeros(n + 1, dtype=np.int8)
    for p in primes:
        pk = int(p)
        while pk <= n:
            omega[pk::pk] += 1
            pk *= int(p)
    lam = np.where(omega & 1, -1, 1).astype(np.int8)
    lam[0] = 0

    mu = np.ones(n + 1, dtype=np.int8)
    mu[0] = 0
    for p in primes:
        mu[p::p] *= -1
        p2 = int(p) * int(p)
        if p2 <= n:
            mu[p2::p2] = 0

    # d(n): multiply (e_p + 1) per prime, exponents counted over prime powers
    dcount = np.ones(n + 1, dtype=np.int32)
    dcount[0] = 0
    for p in primes:
        expo = np.ones(n // int(p), dtype=np.int32)
        pk = int(p) * int(p)
        while pk <= n:
            step = pk // int(p)
            expo[step - 1::step] += 1
            pk *= int(p)
        dcount[p::p] *= expo + 1

    # h(n) = sqrt of the largest square divisor: one factor p per p^(2j) | n
    h = np.ones(n + 1, dtype=np.int64)
    h[0] = 0
    for p in primes:
        q = int(p) * int(p)
        if q > n:
            break
        while q <= n:
            h[q::q] *= int(p)
            q *= int(p) * int(p)

    beta = (lam.astype(np.int64) * h)
    beta[0::2] = 0
    beta = beta.astype(np.int32)

    # n*nu(n) = sum over factorizations n = k*l (both odd) of mu(k)*beta(l)/sqrt(l),
    # accumulated with the beta-carrying divisor l increasing
    idx = np.arange(n + 1, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        weighted_beta = np.where(idx > 0, beta / np.sqrt(idx), 0.0)
    mu_odd = mu[1::2].astype(np.float64)
    conv = np.zeros(n + 1, dtype=np.float64)
    for l in range(1, n + 1, 2):
        cl = weighted_beta[l]
        if cl == 0.0:
            continue
        count = (n // l - 1) // 2 + 1  # odd cofactors k with k*l <= n
        conv[l::2 * l] += cl * mu_odd[:count]
    nu = np.zeros(n + 1, dtype=np.float64)
    nu[1:] = conv[1:] / idx[1:]
    nu_cumsum = np.cumsum(nu)

    return ArithTable(limit=n, spf=spf, liouville=lam, mobius=mu,
                      dcount=dcount, beta=beta, nu=nu, nu_cumsum=nu_cumsum)


def _check_range(table: ArithTable, n: int) -> int:
    n = int(n)
    if n < 1 or n > table.limit:
        raise RangeError(f"n={n} outside table range 1..{table.limit}")
    return n


def liouville(table: ArithTable, n: int) -> int:
    """lambda(n) = (-1)^Omega(n); completely multiplicative, lambda(1) = 1."""
    return int(table.liouville[_check_range(table, n)])


def mobius(table: ArithTable, n: int) -> int:
    """mu(n): 0 on non-squarefree n, else (-1)^(number of prime factors)."""
    return int(table.mobius[_check_range(table, n)])


def divisor_count(table: ArithTable, n: int) -> int:
    """d(n) = number of divisors of n."""
    return int(table.dcount[_check_range(table, n)])


def beta_value(table: ArithTable, n: int) -> int:
    """beta(n) = mu(k)*h for odd n = k*h^2 with k squarefree.

    Raises:
        DomainError: for even n (the table stores 0 there by convention,
            but beta is only defined on odd integers).
    """
    n = _check_range(table, n)
    if n % 2 == 0:
        raise DomainError(f"beta is defined on odd integers, got n={n}")
    return int(table.beta[n])


def nu_value(table: ArithTable, n: int) -> float:
    """nu(n); zero on even n."""
    return float(table.nu[_check_range(table, n)])


def nu_partial_sum(table: ArithTable, n: int) -> float:
    """S(n) = sum_{m<=n} nu(m), read from the cached cumulative array."""
    return float(table.nu_cumsum[_check_range(table, n)])


def sqfree_square_split(table: ArithTable, n: int) -> tuple[int, int]:
    """The unique decomposition n = k*h^2 with k squarefree, via the spf sieve.

    Exact integer arithmetic: h = product of p^floor(e/2) over p^e || n.
    """
    n = _check_range(table, n)
    h = 1
    m = n
    while m > 1:
        p = int(table.spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        h *= p ** (e // 2)
    return n // (h * h), h


# ---------------------------------------------------------------------------
# table cache file
# ---------------------------------------------------------------------------

def save_table(table: ArithTable, path: str | os.PathLike) -> None:
    """Dump the table so later runs can skip the sieve.

    Layout: magic, one JSON header line (limit, array dtypes/lengths,
    sha256 of the payload), then the raw little-endian array bytes in fixed
    field order.  Integers round-trip exactly and nu/nu_cumsum bitwise.
    """
    blobs = []
    meta = []
    for name, dtype in _CACHE_FIELDS:
        arr = np.ascontiguousarray(getattr(table, name), dtype=dtype)
        blobs.append(arr.tobytes())
        meta.append({"name": name, "dtype": np.dtype(dtype).str, "len": int(arr.shape[0])})
    payload = b"".join(blobs)
    header = {
        "limit": table.limit,
        "fields": meta,
        "sha256": hashlib.sha256(payload).hexdigest(),
    }
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC + b"\n")
        fh.write(json.dumps(header, sort_keys=True).encode("ascii") + b"\n")
        fh.write(payload)


def load_table(path: str | os.PathLike) -> ArithTable:
    """Read a table written by save_table, verifying magic and checksum."""
    with open(path, "rb") as fh:
        magic = fh.readline().rstrip(b"\n")
        if magic != CACHE_MAGIC:
            raise CacheFormatError(f"bad magic {magic!r} in {path}")
        try:
            header = json.loads(fh.readline().decode("ascii"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise CacheFormatError(f"unreadable header in {path}: {exc}") from exc
        payload = fh.read()
    if hashlib.sha256(payload).hexdigest() != header.get("sha256"):
        raise CacheFormatError(f"checksum mismatch in {path}")
    expected = [(name, np.dtype(dtype).str) for name, dtype in _CACHE_FIELDS]
    got = [(f["name"], f["dtype"]) for f in header["fields"]]
    if got != expected:
        raise CacheFormatError(f"unexpected field layout in {path}")
    arrays = {}
    offset = 0
    for f in header["fields"]:
        dt = np.dtype(f["dtype"])
        nbytes = dt.itemsize * f["len"]
        arrays[f["name"]] = np.frombuffer(payload[offset:offset + nbytes], dtype=dt).copy()
        offset += nbytes
    if offset != len(payload):
        raise CacheFormatError(f"trailing bytes in {path}")
    return ArithTable(limit=int(header["limit"]), **arrays)
