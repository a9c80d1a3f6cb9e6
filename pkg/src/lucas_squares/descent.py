"""Descent layer: factor the U_12 / U_9 square conditions into systems of
multiplier constraints "form(P,Q) = m * square", filter them by real
solvability and elementary congruences, and expose the reduced problems
(the three-equation genus-9 system, and the norm-form sextics at n = 9).

A constraint system is a conjunction of conditions form_i(P,Q) = m_i * s_i^2
with s_i a nonzero rational, together with the standing side condition
gcd(P, Q) = 1.  Verdicts are certificates: a congruence elimination stores
the modulus and can be re-checked by an exhaustive residue scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lucas import LucasParams, lucas_u

# ---------------------------------------------------------------------------
# Quadratic forms in (P, Q)

FORM_EVALUATORS = {
    "P": lambda p, q: p,
    "P^2-3Q": lambda p, q: p * p - 3 * q,
    "P^2-2Q": lambda p, q: p * p - 2 * q,
    "P^2-Q": lambda p, q: p * p - q,
    "P^4-4P^2Q+Q^2": lambda p, q: p**4 - 4 * p * p * q + q * q,
    "P^6-6P^4Q+9P^2Q^2-Q^3": lambda p, q: p**6 - 6 * p**4 * q + 9 * p * p * q * q - q**3,
}

#: Sign of each form as a function of t = Q / P^2 (valid for P != 0): the
#: form divided by the appropriate power of P is a polynomial in t.
_FORM_IN_T = {
    "P": None,  # sign equals sign(P), independent of t
    "P^2-3Q": (Fraction(1), Fraction(-3)),
    "P^2-2Q": (Fraction(1), Fraction(-2)),
    "P^2-Q": (Fraction(1), Fraction(-1)),
    "P^4-4P^2Q+Q^2": (Fraction(1), Fraction(-4), Fraction(1)),
}

#: Sample values of t = Q/P^2 hitting every sign region cut out by the roots
#: of the t-polynomials above (1/3, 1/2, 1, 2 +- sqrt(3)).
_T_SAMPLES = (
    Fraction(-1),
    Fraction(3, 10),
    Fraction(2, 5),
    Fraction(7, 10),
    Fraction(2),
    Fraction(4),
)

SQUAREFREE_MULTIPLIERS = (1, -1, 2, -2, 3, -3, 6, -6)


def evaluate_form(label: str, p: int, q: int) -> int:
    return FORM_EVALUATORS[label](p, q)


@dataclass(frozen=True)
class Condition:
    """One condition form(P,Q) = multiplier * (nonzero square)."""

    form: str
    multiplier: int

    def __post_init__(self):
        if self.form not in FORM_EVALUATORS:
            raise ValueError(f"unknown form {self.form!r}")
        if self.multiplier not in SQUAREFREE_MULTIPLIERS:
            raise ValueError(f"multiplier must be squarefree in +-{{1,2,3,6}}, got {self.multiplier}")

    def __str__(self):
        return f"{self.form}={self.multiplier}[]"


@dataclass(frozen=True)
class ConstraintSystem:
    """A conjunction of conditions; gcd(P,Q) = 1 is always implied."""

    conditions: tuple[Condition, ...]

    @classmethod
    def of(cls, *pairs: tuple[str, int]) -> "ConstraintSystem":
        return cls(tuple(Condition(f, m) for f, m in pairs))

    def multipliers(self) -> tuple[int, ...]:
        return tuple(c.multiplier for c in self.conditions)

    def __str__(self):
        return " & ".join(str(c) for c in self.conditions)


@dataclass(frozen=True)
class SolvabilityVerdict:
    status: str  # "real_unsolvable" | "congruence_unsolvable" | "survives"
    modulus: int | None = None
    witness: tuple[int, int] | None = None

    @property
    def survives(self) -> bool:
        return self.status == "survives"


# ---------------------------------------------------------------------------
# Factorizations of U_12 and U_9

U12_FACTOR_ORDER = ("P", "P^2-3Q", "P^2-2Q", "P^2-Q", "P^4-4P^2Q+Q^2")
U12_TABLE_ORDER = ("P", "P^2-3Q", "P^2-Q", "P^2-2Q", "P^4-4P^2Q+Q^2")
U9_FACTOR_ORDER = ("P^2-Q", "P^6-6P^4Q+9P^2Q^2-Q^3")


def factor_u12(params: LucasParams) -> tuple[int, int, int, int, int]:
    """The five integer factors of U_12; their product is U_12(P,Q)."""
    values = tuple(evaluate_form(f, params.p, params.q) for f in U12_FACTOR_ORDER)
    assert math.prod(values) == lucas_u(params, 12)
    return values


def factor_u9(params: LucasParams) -> tuple[int, int]:
    """The two integer factors of U_9; their product is U_9(P,Q)."""
    values = tuple(evaluate_form(f, params.p, params.q) for f in U9_FACTOR_ORDER)
    assert math.prod(values) == lucas_u(params, 9)
    return values


def pairwise_gcd_bound(params: LucasParams) -> int:
    """gcd(P(P^2-3Q), P^4-4P^2Q+Q^2) for coprime (P,Q); always divides 2.

    This is the co-factor form of the bound that lets U_12 = square be split
    into two halves sharing at most a factor of 2.
    """
    g = math.gcd(
        params.p * evaluate_form("P^2-3Q", params.p, params.q),
        evaluate_form("P^4-4P^2Q+Q^2", params.p, params.q),
    )
    return g


def product_gcd(params: LucasParams) -> int:
    """gcd of the two published three/two-factor products (shares P^2-Q)."""
    p, q = params.p, params.q
    g1 = p * evaluate_form("P^2-3Q", p, q) * evaluate_form("P^2-Q", p, q)
    g2 = evaluate_form("P^2-Q", p, q) * evaluate_form("P^4-4P^2Q+Q^2", p, q)
    return math.gcd(g1, g2)


# ---------------------------------------------------------------------------
# Enumeration of the raw U_12 systems

def enumerate_u12_systems() -> list[ConstraintSystem]:
    """All unfiltered sign/multiplier splits of the two U_12 halves.

    The halves are P(P^2-3Q)(P^2-Q) = 2[] and (P^2-2Q)(P^4-4P^2Q+Q^2) = 2[].
    Splitting the first across its factors gives 24 three-condition systems
    (two shapes, delta in {+-1, +-3}); splitting the second gives 8 pairs.
    """
    systems = []
    for delta in (1, -1, 3, -3):
        # shape A: P absorbs the residual 2 or not, P^2-Q = +-[]
        for row in (
            ((delta, 2 * delta, 1)),
            ((delta, -2 * delta, -1)),
            ((2 * delta, delta, 1)),
            ((2 * delta, -delta, -1)),
        ):
            systems.append(_triple(row))
    for delta in (1, -1, 3, -3):
        # shape B: P^2-Q absorbs the 2
        systems.append(_triple((delta, delta, 2)))
        systems.append(_triple((delta, -delta, -2)))
    for eta in (1, -1, 3, -3):
        systems.append(_pair((eta, 2 * eta)))
        systems.append(_pair((2 * eta, eta)))
    return systems


def _triple(ms) -> ConstraintSystem:
    return ConstraintSystem.of(("P", ms[0]), ("P^2-3Q", ms[1]), ("P^2-Q", ms[2]))


def _pair(ms) -> ConstraintSystem:
    return ConstraintSystem.of(("P^2-2Q", ms[0]), ("P^4-4P^2Q+Q^2", ms[1]))


# ---------------------------------------------------------------------------
# Local solvability

DEFAULT_MODULI = (16, 9, 5, 7, 11, 13)


def _real_solvable(system: ConstraintSystem) -> bool:
    """Existence of real (P, Q), P != 0, matching every multiplier sign.

    Signs of all supported forms depend only on sign(P) and on which of the
    finitely many root-cut regions t = Q/P^2 lies in; _T_SAMPLES hits every
    region, so scanning samples decides existence exactly.
    """
    for sp in (1, -1):
        for t in _T_SAMPLES:
            ok = True
            for cond in system.conditions:
                poly = _FORM_IN_T[cond.form]
                if poly is None:
                    sign = sp
                else:
                    value = sum(c * t**k for k, c in enumerate(poly))
                    sign = (value > 0) - (value < 0)
                if sign != (1 if cond.multiplier > 0 else -1):
                    ok = False
                    break
            if ok:
                return True
    return False


def _residue_classes(multiplier: int, modulus: int) -> frozenset[int]:
    """The set {multiplier * s^2 mod modulus}; membership is a necessary
    condition for form = multiplier * square over the integers."""
    return frozenset((multiplier * s * s) % modulus for s in range(modulus))


def _congruence_solvable(system: ConstraintSystem, modulus: int) -> tuple[bool, tuple[int, int] | None]:
    """Exhaustive residue scan mod a prime power, honoring gcd(P,Q)=1."""
    prime = _radical(modulus)
    targets = [
        (FORM_EVALUATORS[c.form], _residue_classes(c.multiplier, modulus))
        for c in system.conditions
    ]
    for p in range(modulus):
        for q in range(modulus):
            if p % prime == 0 and q % prime == 0:
                continue  # a common prime factor would violate coprimality
            if all(ev(p, q) % modulus in classes for ev, classes in targets):
                return True, (p, q)
    return False, None


def _radical(modulus: int) -> int:
    for prime in (2, 3, 5, 7, 11, 13, 17, 19):
        if modulus % prime == 0:
            power = prime
            while power < modulus:
                power *= prime
            if power == modulus:
                return prime
    raise ValueError(f"modulus {modulus} is not a supported prime power")


def local_solvability(system: ConstraintSystem, moduli=DEFAULT_MODULI) -> SolvabilityVerdict:
    """First failing certificate (real signs, then congruences), or survives."""
    if not moduli:
        raise ValueError("moduli list must be nonempty")
    if not _real_solvable(system):
        return SolvabilityVerdict("real_unsolvable")
    for modulus in moduli:
        ok, _ = _congruence_solvable(system, modulus)
        if not ok:
            return SolvabilityVerdict("congruence_unsolvable", modulus=modulus)
    return SolvabilityVerdict("survives", witness=_small_witness(system))


def recheck_congruence(system: ConstraintSystem, modulus: int) -> bool:
    """Independent full residue scan; True means the elimination certificate
    is valid (no admissible residue pair satisfies the system)."""
    prime = _radical(modulus)
    for p in range(modulus):
        for q in range(modulus):
            if p % prime == 0 and q % prime == 0:
                continue
            good = True
            for cond in system.conditions:
                value = evaluate_form(cond.form, p, q) % modulus
                hit = any((cond.multiplier * s * s - value) % modulus == 0 for s in range(modulus))
                if not hit:
                    good = False
                    break
            if good:
                return False
    return True


def _small_witness(system: ConstraintSystem, bound: int = 12) -> tuple[int, int] | None:
    """A small coprime integer pair satisfying every condition with a nonzero
    square, if one exists in the box; purely informational."""
    for p in range(-bound, bound + 1):
        for q in range(-bound, bound + 1):
            if p == 0 or q == 0 or math.gcd(p, q) != 1:
                continue
            if all(_is_m_square(evaluate_form(c.form, p, q), c.multiplier) for c in system.conditions):
                return (p, q)
    return None


def _is_m_square(value: int, multiplier: int) -> bool:
    if value == 0 or value % multiplier != 0:
        return False
    ratio = value // multiplier
    if ratio <= 0:
        return False
    r = math.isqrt(ratio)
    return r * r == ratio


# ---------------------------------------------------------------------------
# The surviving U_12 table

#: Presentation order of the four surviving rows, in table column order
#: (P, P^2-3Q, P^2-Q, P^2-2Q, P^4-4P^2Q+Q^2).  The set of survivors is
#: computed; this constant fixes only the display order of the result.
_U12_TABLE_PRESENTATION = (
    (-1, -2, 1, -1, -2),
    (6, 3, 1, 2, 1),
    (1, -2, -1, -1, -2),
    (1, 1, 2, 3, 6),
)


def surviving_u12_table(moduli=DEFAULT_MODULI) -> list[ConstraintSystem]:
    """Compose surviving triples with surviving pairs and filter again.

    Returns the full five-condition systems that survive every elimination,
    as rows in table column order.  Raises if the computed survivor set ever
    deviates from the published four rows (loud failure, never silent).
    """
    triples = [s for s in enumerate_u12_systems() if len(s.conditions) == 3]
    pairs = [s for s in enumerate_u12_systems() if len(s.conditions) == 2]
    live_triples = [s for s in triples if local_solvability(s, moduli).survives]
    live_pairs = [s for s in pairs if local_solvability(s, moduli).survives]

    rows = []
    for t in live_triples:
        for pr in live_pairs:
            combined = ConstraintSystem(t.conditions + pr.conditions)
            if local_solvability(combined, moduli).survives:
                mt = t.multipliers()
                mp = pr.multipliers()
                rows.append((mt[0], mt[1], mt[2], mp[0], mp[1]))

    if set(rows) != set(_U12_TABLE_PRESENTATION):
        raise RuntimeError(f"survivor set {sorted(rows)} deviates from the expected table")
    ordered = sorted(rows, key=_U12_TABLE_PRESENTATION.index)
    return [
        ConstraintSystem.of(*zip(U12_TABLE_ORDER, row))
        for row in ordered
    ]


def survival_report(moduli=DEFAULT_MODULI) -> dict:
    """Machine-readable record of every system, its verdict and certificate."""
    systems = enumerate_u12_systems()
    entries = []
    for system in systems:
        verdict = local_solvability(system, moduli)
        entries.append(
            {
                "conditions": [[c.form, c.multiplier] for c in system.conditions],
                "status": verdict.status,
                "modulus": verdict.modulus,
                "witness": list(verdict.witness) if verdict.witness else None,
            }
        )
    table = surviving_u12_table(moduli)
    return {
        "moduli": list(moduli),
        "raw_system_count": len(systems),
        "systems": entries,
        "table": [[[c.form, c.multiplier] for c in row.conditions] for row in table],
    }


# ---------------------------------------------------------------------------
# The genus-9 system and the U_9 norm-form split

def genus9_check(u: Fraction | int) -> bool:
    """True iff 3u^2-1 = 2*sq, 4u^2-1 = 3*sq, 2u^4+2u^2-1 = 3*sq with all
    squares of nonzero rationals."""
    u = Fraction(u)
    conditions = (
        (3 * u * u - 1, 2),
        (4 * u * u - 1, 3),
        (2 * u**4 + 2 * u * u - 1, 3),
    )
    return all(is_rational_m_square(v, m) for v, m in conditions)


def is_rational_m_square(value: Fraction, multiplier: int) -> bool:
    """value = multiplier * (nonzero rational)^2, exactly."""
    ratio = Fraction(value) / multiplier
    if ratio <= 0:
        return False
    rn, rd = math.isqrt(ratio.numerator), math.isqrt(ratio.denominator)
    return rn * rn == ratio.numerator and rd * rd == ratio.denominator


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    value = Fraction(value)
    if value < 0:
        return None
    rn, rd = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if rn * rn == value.numerator and rd * rd == value.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class SexticCase:
    """One sign case of the U_9 norm-form reduction.

    Records delta with Q = P^2 - delta*R^2, and evaluates the sextic in
    (P, R) whose square values correspond to U_9 = square solutions.
    """

    delta: int

    def __post_init__(self):
        if self.delta not in (3, -3):
            raise ValueError("the norm-form split applies to delta = +-3 only")

    def coefficients(self) -> tuple[int, int, int, int]:
        # (3/delta) P^6 - 9 P^4 R^2 + 6 delta P^2 R^4 + delta^2 R^6
        return (3 // self.delta if self.delta > 0 else -1, -9, 6 * self.delta, self.delta**2)

    def evaluate(self, p: int, r: int) -> int:
        c6, c4, c2, c0 = self.coefficients()
        return c6 * p**6 + c4 * p**4 * r**2 + c2 * p**2 * r**4 + c0 * r**6

    def q_of(self, p: int, r: int) -> int:
        return p * p - self.delta * r * r


def u9_norm_split(delta: int) -> tuple[SexticCase, SexticCase]:
    """The two sextic sign cases for |delta| = 3, requested sign first."""
    if delta not in (3, -3):
        raise ValueError("delta must be +3 or -3")
    return SexticCase(delta), SexticCase(-delta)


# ---------------------------------------------------------------------------
# Bounded rational point search on auxiliary genus-one models

@dataclass(frozen=True)
class CurveModel:
    """y^2 = multiplier^{-1} * poly(x): a cubic or quartic multiplier model."""

    poly: tuple[Fraction, ...]  # ascending coefficients
    multiplier: int

    def value(self, x: Fraction) -> Fraction:
        return sum(c * x**k for k, c in enumerate(self.poly))


@dataclass(frozen=True)
class PointHit:
    x: Fraction
    value: Fraction
    sqrt: Fraction | None  # sqrt of value/multiplier when a nonzero square; None for value 0

    @property
    def is_zero(self) -> bool:
        return self.value == 0


def delta_family(delta: int) -> CurveModel:
    """(1-2x)(1-4x+x^2) = delta * square, x = Q/P^2."""
    return CurveModel((Fraction(1), Fraction(-6), Fraction(9), Fraction(-2)), delta)


def u12_rank0_companion(kind: str) -> CurveModel:
    """The three rank-0 cubic models attached to the first table rows."""
    if kind == "-1:-2":  # (-x+1)(x^2-4x+1) = -2 sq
        return CurveModel((Fraction(1), Fraction(-5), Fraction(5), Fraction(-1)), -2)
    if kind == "-3:3":  # (-3x+1)(x^2-4x+1) = 3 sq
        return CurveModel((Fraction(1), Fraction(-7), Fraction(13), Fraction(-3)), 3)
    if kind == "-1:2":  # (-x+1)(x^2-4x+1) = 2 sq
        return CurveModel((Fraction(1), Fraction(-5), Fraction(5), Fraction(-1)), 2)
    raise ValueError(f"unknown companion {kind!r}")


def u9_cover(delta: int) -> CurveModel:
    """(3/delta) - 9x + 6 delta x^2 + delta^2 x^3 = square, x = R^2/P^2."""
    if delta not in (1, -1, 3, -3):
        raise ValueError("delta must be in {1,-1,3,-3}")
    return CurveModel(
        (Fraction(3, delta), Fraction(-9), Fraction(6 * delta), Fraction(delta**2)), 1
    )


def small_point_search(model: CurveModel, height_bound: int) -> list[PointHit]:
    """Enumerate x = a/b with |a|, b <= height_bound, gcd(a,b) = 1, and return
    every x whose model value is zero or multiplier * (nonzero square).

    Evidence-level only: a nonempty nonzero-hit list witnesses positive rank,
    an empty one is consistent with (never a proof of) rank 0.
    """
    hits = []
    for b in range(1, height_bound + 1):
        for a in range(-height_bound, height_bound + 1):
            if math.gcd(a, b) != 1:
                continue
            x = Fraction(a, b)
            v = model.value(x)
            if v == 0:
                hits.append(PointHit(x, v, None))
            elif is_rational_m_square(v, model.multiplier):
                hits.append(PointHit(x, v, rational_sqrt(v / model.multiplier)))
    hits.sort(key=lambda h: (h.x.denominator, h.x))
    return hits
