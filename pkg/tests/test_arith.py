"""Sieve tables against brute-force oracles, invariants, and the cache file."""

import math

import numpy as np
import pytest

from liouville_mellin import (DomainError, InvalidArgumentError, RangeError,
                              beta_value, build_table, divisor_count,
                              liouville, load_table, mobius, nu_partial_sum,
                              nu_value, save_table, sqfree_square_split)
from liouville_mellin.arith import CACHE_MAGIC

from oracles import (beta_brute, dcount_brute, liouville_brute, mobius_brute,
                     nu_brute, sqfree_square_brute)


def test_single_entry_base_case():
    t = build_table(1)
    assert liouville(t, 1) == 1
    assert mobius(t, 1) == 1
    assert beta_value(t, 1) == 1
    assert nu_value(t, 1) == 1.0
    assert nu_partial_sum(t, 1) == 1.0


def test_liouville_first_ten(table_small):
    # brute-force Omega parity by trial division
    expected = [liouville_brute(n) for n in range(1, 11)]
    assert expected == [1, -1, -1, 1, -1, 1, -1, -1, 1, 1]
    assert [liouville(table_small, n) for n in range(1, 11)] == expected


def test_liouville_point_values(table_small):
    assert liouville(table_small, 1) == 1
    assert liouville(table_small, 7) == -1       # prime
    assert liouville(table_small, 12) == -1      # 2*2*3, Omega = 3


def test_arrays_match_brute_force(table_small):
    for n in range(1, 3002 if False else 1202):
        assert liouville(table_small, n) == liouville_brute(n), n
        assert mobius(table_small, n) == mobius_brute(n), n
    for n in range(1, 202):
        assert divisor_count(table_small, n) == dcount_brute(n), n
    for n in range(1, 1202, 2):
        assert beta_value(table_small, n) == beta_brute(n), n


def test_liouville_completely_multiplicative(table_small):
    rng = np.random.default_rng(7)
    for _ in range(300):
        a = int(rng.integers(1, 54))
        b = int(rng.integers(1, 54))
        assert (liouville(table_small, a * b)
                == liouville(table_small, a) * liouville(table_small, b))


def test_beta_examples(table_small):
    assert beta_value(table_small, 1) == 1      # k=1, h=1
    assert beta_value(table_small, 9) == 3      # 9 = 1*3^2
    assert beta_value(table_small, 45) == -3    # 45 = 5*3^2, mu(5) = -1


def test_beta_even_rejected_but_stored_zero(table_small):
    with pytest.raises(DomainError):
        beta_value(table_small, 10)
    assert table_small.beta[10] == 0
    assert np.all(table_small.beta[2::2] == 0)
    assert np.all(table_small.nu[2::2] == 0.0)


def test_sqfree_square_split(table_small):
    for n in (1, 9, 45, 121, 2023, 720, 1024):
        assert sqfree_square_split(table_small, n) == sqfree_square_brute(n)


def test_beta_magnitude_is_square_root_part(table_small):
    for n in range(1, 1202, 2):
        _, h = sqfree_square_split(table_small, n)
        assert abs(beta_value(table_small, n)) == h


def test_nu_values(table_small):
    assert nu_value(table_small, 1) == 1.0
    assert nu_value(table_small, 2) == 0.0
    # 3 nu(3) = mu(1) beta(3)/sqrt(3) + mu(3) beta(1) = -1/sqrt(3) - 1
    closed = -(1.0 + 3.0 ** -0.5) / 3.0
    assert nu_value(table_small, 3) == pytest.approx(closed, abs=1e-15)
    for n in list(range(1, 90)) + [99, 105, 315, 525, 1001, 2925]:
        assert nu_value(table_small, n) == pytest.approx(nu_brute(n), abs=1e-13)


def test_nu_partial_sums(table_small):
    assert nu_partial_sum(table_small, 1) == 1.0
    assert nu_partial_sum(table_small, 2) == 1.0
    expected = 1.0 - (1.0 + 3.0 ** -0.5) / 3.0
    assert nu_partial_sum(table_small, 3) == pytest.approx(expected, abs=1e-15)
    diffs = np.diff(table_small.nu_cumsum)
    assert np.allclose(diffs, table_small.nu[1:], rtol=0, atol=1e-16)


def test_convolution_identity(table_small):
    # sum_{l|n} l nu(l) = beta(n)/sqrt(n) for odd n
    for n in range(1, 3001, 2):
        acc = sum(l * nu_value(table_small, l)
                  for l in range(1, n + 1) if n % l == 0)
        assert acc == pytest.approx(beta_value(table_small, n) / math.sqrt(n),
                                    abs=1e-12), n


def test_bound_scans_small(table_small):
    n = np.arange(1, 3002, 2, dtype=np.float64)
    ratio = table_small.beta[1::2] / np.sqrt(n)
    assert ratio.min() > -1.0
    assert ratio.max() <= 1.0 + 1e-12
    sq = np.sqrt(n).astype(np.int64) ** 2 == n.astype(np.int64)
    assert np.array_equal(np.abs(ratio - 1.0) < 1e-12, sq)
    idx = np.arange(1, 3002, dtype=np.float64)
    assert np.all(np.abs(table_small.nu[1:]) <= table_small.dcount[1:] / idx + 1e-15)


def test_argument_validation(table_small):
    with pytest.raises(InvalidArgumentError):
        build_table(0)
    with pytest.raises(RangeError):
        liouville(table_small, 0)
    with pytest.raises(RangeError):
        nu_value(table_small, 3002)
    with pytest.raises(RangeError):
        nu_partial_sum(table_small, -5)


def test_cache_round_trip_bit_exact(table_small, tmp_path):
    path = tmp_path / "arith.bin"
    save_table(table_small, path)
    loaded = load_table(path)
    assert loaded.limit == table_small.limit
    for name in ("spf", "liouville", "mobius", "dcount", "beta"):
        assert np.array_equal(getattr(loaded, name), getattr(table_small, name)), name
    # float arrays must round-trip bitwise
    assert table_small.nu.tobytes() == loaded.nu.tobytes()
    assert table_small.nu_cumsum.tobytes() == loaded.nu_cumsum.tobytes()
    assert path.read_bytes().startswith(CACHE_MAGIC)


def test_cache_rejects_corruption(table_small, tmp_path):
    from liouville_mellin import CacheFormatError
    path = tmp_path / "arith.bin"
    save_table(table_small, path)
    raw = bytearray(path.read_bytes())
    raw[-1] ^= 0xFF
    path.write_bytes(bytes(raw))
    with pytest.raises(CacheFormatError):
        load_table(path)
    path.write_bytes(b"NOTMAGIC\n{}\n")
    with pytest.raises(CacheFormatError):
        load_table(path)
