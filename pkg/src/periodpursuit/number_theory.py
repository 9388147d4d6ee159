"""Integer arithmetic underpinning the Ramanujan sums.

The Ramanujan sum of period q is the integer-valued sequence

    c_q(n) = sum_{k=1..q, gcd(k,q)=1} exp(j*2*pi*k*n/q)

i.e. the sum of the n-th powers of the primitive q-th roots of unity.
Rather than evaluating the complex exponentials, c_q is computed exactly
in integer arithmetic from the prime-power factorization of q:

  * for a prime power p^a,
        c_{p^a}(n) = p^(a-1)*(p-1)   if p^a | n
                   = -p^(a-1)        if p^(a-1) | n but p^a does not divide n
                   = 0               otherwise
    (a = 1 reduces to c_p(n) = p-1 when p | n, else -1);
  * c is multiplicative across coprime factors:
        c_{q1*q2}(n) = c_{q1}(n) * c_{q2}(n)  when gcd(q1, q2) = 1.

Factorization is by trial division, which is plenty for the period range
this library targets (a few thousand).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "factorize",
    "euler_totient",
    "divisors",
    "totient_summatory",
    "ramanujan_sums",
    "is_prime",
]


def _check_positive(q: int, name: str = "q") -> int:
    q = int(q)
    if q < 1:
        raise ValueError(f"{name} must be a positive integer, got {q}")
    return q


@lru_cache(maxsize=None)
def _factorize_cached(q: int) -> tuple[tuple[int, int], ...]:
    factors = []
    n = q
    p = 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            factors.append((p, a))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


def factorize(q: int) -> list[tuple[int, int]]:
    """Prime-power factorization of q as [(p1, a1), (p2, a2), ...].

    Primes appear in strictly increasing order; the product of p**a over
    all entries reproduces q.  factorize(1) == [].
    """
    q = _check_positive(q)
    return list(_factorize_cached(q))


def is_prime(n: int) -> bool:
    """Trial-division primality check (intended for small n)."""
    n = int(n)
    if n < 2:
        return False
    f = _factorize_cached(n)
    return len(f) == 1 and f[0][1] == 1


def euler_totient(q: int) -> int:
    """Euler's totient phi(q): count of k in [1, q] with gcd(k, q) = 1.

    Computed as q * prod(1 - 1/p) over the distinct primes p dividing q.
    """
    q = _check_positive(q)
    t = q
    for p, _ in _factorize_cached(q):
        t -= t // p
    return t


def divisors(q: int) -> list[int]:
    """All positive divisors of q in ascending order (1 and q included)."""
    q = _check_positive(q)
    divs = [1]
    for p, a in _factorize_cached(q):
        divs = [d * p**e for d in divs for e in range(a + 1)]
    return sorted(divs)


def totient_summatory(q_max: int) -> int:
    """Summatory totient Phi(Q) = sum_{q=1..Q} phi(q).

    Phi(Q) is the total dimension of the candidate subspaces with periods
    up to Q; Phi(Q) >= N is the condition for those subspaces to cover a
    length-N signal space.
    """
    q_max = _check_positive(q_max, "q_max")
    return sum(euler_totient(q) for q in range(1, q_max + 1))


@lru_cache(maxsize=None)
def _ramanujan_sums_cached(q: int) -> tuple[int, ...]:
    n = np.arange(q)
    values = np.ones(q, dtype=np.int64)
    for p, a in _factorize_cached(q):
        pa = p**a
        pa1 = p ** (a - 1)
        factor = np.where(
            n % pa1 != 0,
            0,
            np.where(n % pa == 0, pa1 * (p - 1), -pa1),
        )
        values *= factor
    return tuple(int(v) for v in values)


def ramanujan_sums(q: int) -> np.ndarray:
    """One period of the Ramanujan sums c_q(n), n = 0..q-1, as exact int64.

    c_q(0) = phi(q), the values sum to 0 for q > 1, and the sequence is
    symmetric: c_q(n) = c_q(q - n).
    """
    q = _check_positive(q)
    return np.array(_ramanujan_sums_cached(q), dtype=np.int64)
