"""Prime windows, modular arithmetic, truncated multiple harmonic sums mod p,
and Bernoulli numbers mod p.

Moduli are restricted below 2^31 so that products of two residues always fit
in native 64-bit intermediates; windows in day-to-day use stay far smaller.
Per-prime tables (batch inverses, inverse-power rows, Bernoulli tables) are
memoized, and the harmonic-sum evaluator is memoized per (index, prime), so
large verification batteries share almost all of their arithmetic.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .words import NCPolynomial, in_h1, index_of_word

MAX_MODULUS = 2**31

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)  # deterministic below 3.3e24


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the supported modulus range."""
    if n < 2:
        return False
    for small in _MR_BASES:
        if n % small == 0:
            return n == small
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        v = pow(a, d, n)
        if v in (1, n - 1):
            continue
        for _ in range(s - 1):
            v = v * v % n
            if v == n - 1:
                break
        else:
            return False
    return True


def ensure_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p >= MAX_MODULUS:
        raise ValueError(f"modulus {p} exceeds the supported bound {MAX_MODULUS}")
    return p


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending; a segmented sieve over the window."""
    if not 2 <= lo <= hi <= MAX_MODULUS:
        raise ValueError(f"window must satisfy 2 <= lo <= hi <= {MAX_MODULUS}, got [{lo}, {hi}]")
    root = math.isqrt(hi)
    base = bytearray([1]) * (root + 1)
    base[:2] = b"\x00\x00"
    for q in range(2, math.isqrt(root) + 1):
        if base[q]:
            base[q * q :: q] = b"\x00" * len(base[q * q :: q])
    small = [q for q in range(2, root + 1) if base[q]]
    seg = bytearray([1]) * (hi - lo + 1)
    for q in small:
        start = max(q * q, (lo + q - 1) // q * q)
        for multiple in range(start, hi + 1, q):
            seg[multiple - lo] = 0
    return [lo + i for i, keep in enumerate(seg) if keep and lo + i >= 2]


def pow_mod(a: int, e: int, p: int) -> int:
    """a^e mod p for e >= 0."""
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    return pow(a % p, e, p)


def inv_mod(a: int, p: int) -> int:
    """Multiplicative inverse of a mod prime p; a must be nonzero mod p."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


@functools.lru_cache(maxsize=None)
def inverse_table(p: int) -> tuple[int, ...]:
    """inv[m] = m^(-1) mod p for 1 <= m < p, via the standard O(p) recurrence."""
    ensure_prime(p)
    inv = [0] * p
    if p > 1:
        inv[1] = 1
    for m in range(2, p):
        inv[m] = (p - p // m) * inv[p % m] % p
    return tuple(inv)


@functools.lru_cache(maxsize=None)
def _inv_pow_row(p: int, e: int) -> tuple[int, ...]:
    # row[m] = m^(-e) mod p for 1 <= m < p; e already reduced mod p-1
    if e == 0:
        return tuple(1 if m else 0 for m in range(p))
    if e == 1:
        return inverse_table(p)
    inv = inverse_table(p)
    if e > 32:
        # large exponents are rare; power directly instead of materializing
        # every intermediate row
        return tuple(pow(a, e, p) for a in inv)
    prev = _inv_pow_row(p, e - 1)
    return tuple(a * b % p for a, b in zip(prev, inv))


def _reduced_exponents(k: Sequence[int], p: int) -> list[int]:
    # Fermat reduction: m^(-k) = m^(-(k mod (p-1))), and exponent 0 with k > 0
    # means the full power collapses to 1.
    out = []
    for kj in k:
        e = kj % (p - 1) if p > 2 else 0
        out.append(e)
    return out


@functools.lru_cache(maxsize=None)
def zeta_mod_p(k: tuple[int, ...], p: int) -> int:
    """The truncated nested harmonic sum for the index ``k`` at the prime p:
    sum over p > m_1 > ... > m_r > 0 of prod m_j^(-k_j), reduced mod p.

    Evaluated by a single left-to-right sweep over m with one running
    partial sum per tail of the index, costing O(p * depth) multiplications.
    An index with depth >= p has an empty summation range and gives 0.
    """
    k = tuple(k)
    ensure_prime(p)
    if not k or any(kj < 1 for kj in k):
        raise ValueError(f"index parts must be >= 1, got {k}")
    r = len(k)
    if r >= p:
        return 0
    rows = [_inv_pow_row(p, e) for e in _reduced_exponents(k, p)]
    # g[j] holds the sum over upper > m_(j+1) > ... > m_r with the current
    # upper bound; g[r] is the empty product 1.
    g = [0] * r + [1]
    for m in range(1, p):
        for j in range(r):
            g[j] = (g[j] + rows[j][m] * g[j + 1]) % p
    return g[0]


def zeta_mod_p_naive(k: tuple[int, ...], p: int) -> int:
    """Independent brute-force evaluation of the same nested sum.

    Enumerates the decreasing tuples directly (via combinations) when that
    is affordable, falling back to a top-down memoized recursion otherwise;
    both paths use only builtin modular exponentiation and share nothing
    with the sweep in :func:`zeta_mod_p`.
    """
    k = tuple(k)
    ensure_prime(p)
    r = len(k)
    if r >= p:
        return 0
    if math.comb(p - 1, r) <= 2_000_000:
        total = 0
        # combinations are ascending; reversing gives m_1 > ... > m_r
        for combo in itertools.combinations(range(1, p), r):
            t = 1
            for m, e in zip(reversed(combo), k):
                t = t * pow(m, -e, p) % p
            total = (total + t) % p
        return total

    @functools.lru_cache(maxsize=None)
    def tail(j: int, upper: int) -> int:
        if j == r:
            return 1
        return sum(pow(m, -k[j], p) * tail(j + 1, m) for m in range(1, upper)) % p

    return tail(0, p)


def zeta_poly_mod_p(P: NCPolynomial, p: int, zeta=zeta_mod_p) -> int:
    """Linear extension over a word polynomial: each word contributes its
    index's harmonic sum, the empty word contributes 1."""
    total = 0
    for w, c in P.terms.items():
        if not in_h1(w):
            raise ValueError(f"word {w!r} does not encode an index (must end in 'y')")
        value = 1 if w == "" else zeta(index_of_word(w), p)
        total = (total + c * value) % p
    return total


@functools.lru_cache(maxsize=None)
def _bernoulli_table(p: int) -> tuple[int, ...]:
    # B_0 .. B_(p-2) mod p (B_1 = -1/2 convention) via the defining recurrence
    # B_m = -(m+1)^(-1) * sum_{j<m} binom(m+1, j) B_j, all arithmetic mod p.
    ensure_prime(p)
    fact = [1] * p
    for i in range(1, p):
        fact[i] = fact[i - 1] * i % p
    inv_fact = [1] * p
    inv_fact[p - 1] = pow(fact[p - 1], p - 2, p)
    for i in range(p - 1, 0, -1):
        inv_fact[i - 1] = inv_fact[i] * i % p

    def binom(a: int, b: int) -> int:
        return fact[a] * inv_fact[b] % p * inv_fact[a - b] % p

    table = [0] * max(p - 1, 1)
    table[0] = 1 % p
    for m in range(1, p - 1):
        s = 0
        for j in range(m):
            if table[j]:
                s = (s + binom(m + 1, j) * table[j]) % p
        table[m] = -inv_mod(m + 1, p) * s % p
    return tuple(table)


def bernoulli_mod_p(k: int, p: int) -> int:
    """B_(p-k) mod p, for 2 <= k <= p-2 (which keeps the number p-integral)."""
    ensure_prime(p)
    if not 2 <= k <= p - 2:
        raise ValueError(f"need 2 <= k <= p-2, got k={k}, p={p}")
    return _bernoulli_table(p)[p - k]


@dataclass(eq=False)
class AdeleSlice:
    """One residue per prime over a finite window, with a disagreement floor.

    Models a cofinite-equality element restricted to the window: two slices
    over the same window are considered equal when their residues agree at
    every prime at or above the larger of the two floors.
    """

    primes: tuple[int, ...]
    residues: tuple[int, ...]
    floor: int

    __hash__ = None  # equality ignores sub-floor residues

    def __post_init__(self):
        self.primes = tuple(self.primes)
        self.residues = tuple(self.residues)
        if not self.primes:
            raise ValueError("a slice needs at least one prime")
        if len(self.primes) != len(self.residues):
            raise ValueError("one residue per prime required")
        if list(self.primes) != sorted(set(self.primes)):
            raise ValueError("primes must be strictly increasing")
        for p, a in zip(self.primes, self.residues):
            ensure_prime(p)
            if not 0 <= a < p:
                raise ValueError(f"residue {a} out of range for prime {p}")

    @classmethod
    def zero(cls, primes: Iterable[int], floor: int) -> "AdeleSlice":
        primes = tuple(primes)
        return cls(primes, (0,) * len(primes), floor)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdeleSlice):
            return NotImplemented
        if self.primes != other.primes:
            raise ValueError("slices over different prime windows are not comparable")
        cut = max(self.floor, other.floor)
        return all(
            a == b
            for p, a, b in zip(self.primes, self.residues, other.residues)
            if p >= cut
        )

    def items(self) -> list[tuple[int, int]]:
        return list(zip(self.primes, self.residues))


def adele_zeta(
    k: Sequence[int], window: tuple[int, int], floor: int | None = None
) -> AdeleSlice:
    """Evaluate the harmonic sum of ``k`` at every prime in the window."""
    lo, hi = window
    ps = primes_in(lo, hi)
    if not ps:
        raise ValueError(f"no primes in window [{lo}, {hi}]")
    k = tuple(k)
    if floor is None:
        floor = sum(k) + 3
    return AdeleSlice(tuple(ps), tuple(zeta_mod_p(k, p) for p in ps), floor)


def clear_modp_caches() -> None:
    """Drop all per-prime memoized tables."""
    inverse_table.cache_clear()
    _inv_pow_row.cache_clear()
    zeta_mod_p.cache_clear()
    _bernoulli_table.cache_clear()
