"""Lucas sequences U_n(P,Q), square detection, and brute-force square searches.

U_0 = 0, U_1 = 1, U_n = P*U_{n-1} - Q*U_{n-2} for coprime nonzero integers
P, Q.  Everything here is exact integer arithmetic; squares are detected
with math.isqrt, never floating point.  The convention throughout the
package is that "square" means square of a *nonzero* integer; U_n = 0 is
tracked separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator


class ParamRejection(ValueError):
    """Raised when a parameter pair violates the Lucas parameter invariants."""


@dataclass(frozen=True, order=True)
class LucasParams:
    """A coprime pair of nonzero integers (P, Q) defining a Lucas sequence."""

    p: int
    q: int

    def __post_init__(self):
        if self.p == 0 or self.q == 0:
            raise ParamRejection(f"P and Q must be nonzero, got ({self.p}, {self.q})")
        if math.gcd(self.p, self.q) != 1:
            raise ParamRejection(f"P and Q must be coprime, got ({self.p}, {self.q})")


@dataclass(frozen=True)
class SquareWitness:
    """Result of an exact integer square test.

    ``root`` is present iff ``value`` is a perfect square (including 0).
    A value of 0 carries root 0 but does not count as a nonzero square.
    """

    value: int
    root: int | None

    @property
    def is_nonzero_square(self) -> bool:
        return self.root is not None and self.value != 0


def square_root_if_square(v: int) -> SquareWitness:
    """Exact square test via integer square root."""
    if v < 0:
        return SquareWitness(v, None)
    r = math.isqrt(v)
    return SquareWitness(v, r if r * r == v else None)


def lucas_u(params: LucasParams, n: int) -> int:
    """U_n(P,Q) by the defining linear recurrence."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    a, b = 0, 1  # U_0, U_1
    for _ in range(n):
        a, b = b, params.p * b - params.q * a
    return a


def lucas_u_doubling(params: LucasParams, n: int) -> int:
    """U_n(P,Q) by binary powering of the companion matrix [[P, -Q], [1, 0]]."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    # M^n = [[U_{n+1}, -Q U_n], [U_n, -Q U_{n-1}]]; read U_n off the lower left.
    m = (params.p, -params.q, 1, 0)
    acc = (1, 0, 0, 1)
    while n:
        if n & 1:
            acc = _mat_mul(acc, m)
        m = _mat_mul(m, m)
        n >>= 1
    return acc[2]


def _mat_mul(a, b):
    return (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )


def is_degenerate(params: LucasParams) -> bool:
    """True iff the root ratio of x^2 - Px + Q is a root of unity or repeated.

    Closed form: P^2 lies in {0, Q, 2Q, 3Q, 4Q}.  Degenerate sequences are
    periodic up to sign or vanish along an arithmetic progression.
    """
    p2 = params.p * params.p
    return p2 in (0, params.q, 2 * params.q, 3 * params.q, 4 * params.q)


def coprime_pairs(bound: int) -> Iterator[LucasParams]:
    """All coprime nonzero pairs with |P|, |Q| <= bound in lexicographic order."""
    if bound < 1:
        raise ValueError("bound must be positive")
    values = [v for v in range(-bound, bound + 1) if v != 0]
    for p in values:
        for q in values:
            if math.gcd(p, q) == 1:
                yield LucasParams(p, q)


def search_square_terms(n: int, bound: int) -> list[tuple[LucasParams, int]]:
    """Scan the coprime box |P|,|Q| <= bound for pairs with U_n a nonzero square.

    Returns (params, root) in lexicographic parameter order.  Pairs whose U_n
    is zero are excluded here; see search_zero_terms.
    """
    if n < 2:
        raise ValueError("index must be at least 2")
    hits = []
    for params in coprime_pairs(bound):
        w = square_root_if_square(lucas_u(params, n))
        if w.is_nonzero_square:
            hits.append((params, w.root))
    return hits


def search_zero_terms(n: int, bound: int) -> list[LucasParams]:
    """Pairs in the coprime box whose U_n vanishes (degenerate hits)."""
    if n < 2:
        raise ValueError("index must be at least 2")
    return [params for params in coprime_pairs(bound) if lucas_u(params, n) == 0]


def theorem2_family(kind: str, a: int, b: int) -> LucasParams:
    """Construct the parameterized pair whose U_3 (resp. U_6) is a square.

    kind "u3": (P, Q) = (a, a^2 - b^2), so U_3 = P^2 - Q = b^2.
    kind "u6": (P, Q) = (3a^2b^2, (-a^8 + 12a^4b^4 - 9b^8)/2), which needs
    a, b odd for Q to be integral.  Invalid parameters raise ParamRejection
    with the reason.
    """
    if kind == "u3":
        return LucasParams(a, a * a - b * b)
    if kind == "u6":
        num = -(a**8) + 12 * a**4 * b**4 - 9 * b**8
        if num % 2 != 0:
            raise ParamRejection(f"Q = {num}/2 is not an integer (need a, b odd)")
        return LucasParams(3 * a * a * b * b, num // 2)
    raise ValueError(f"unknown family kind {kind!r}")
