"""Prime fields and primality."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Miller-Rabin with the bases above is deterministic below this bound.
_DETERMINISTIC_BOUND = 3317044064679887385961981


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Miller-Rabin, deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _SMALL_PRIMES
    if n >= _DETERMINISTIC_BOUND:
        # probabilistic beyond the bound; no input in scope gets here
        bases = bases + tuple(range(43, 43 + 2 * 64, 2))
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class PrimeField:
    """The field F_p. Construction fails unless p is prime."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"{self.p!r} is not a prime")

    def __call__(self, value: int) -> int:
        return value % self.p

    def inv(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(value, -1, self.p)

    def __repr__(self):
        return f"F_{self.p}"


def as_field(p: int | PrimeField) -> PrimeField:
    return p if isinstance(p, PrimeField) else PrimeField(p)
