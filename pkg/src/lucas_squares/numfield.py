"""Exact arithmetic in Q(alpha) for a monic irreducible integer polynomial,
together with the machinery the square classification needs on top of it:

* field elements as reduced rational coordinate vectors over the power basis;
* norms (multiplication-matrix determinant, cross-checked by resultant);
* the order-3 Galois action on the cyclic cubic field;
* rigorous real-embedding signs via interval bisection (no machine floats
  ever decide a sign);
* completions at an inert prime p: coordinate vectors mod p^N with tracked
  precision and valuations, which is faithful exactly because the minimal
  polynomial stays irreducible mod p;
* the norm-(+1) unit square-class representatives and their sign filter.

The two shipped fields are K (x^2 - 3) and the cyclic cubic L (x^3 - 3x - 1),
loaded from a versioned data file together with their units and trusted
annotations.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from importlib import resources


class PrecisionError(ArithmeticError):
    """An exact decision could not be certified at the working precision."""


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# Number fields and exact elements

class NumberField:
    """Q(alpha) for a monic irreducible integer polynomial of degree 2 or 3."""

    def __init__(self, name: str, min_poly, units=(), unit_norms=(), sigma_images=None, trusted=None):
        self.name = name
        self.min_poly = tuple(int(c) for c in min_poly)
        if self.min_poly[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.degree = len(self.min_poly) - 1
        if self.degree not in (2, 3):
            raise ValueError("only degrees 2 and 3 are supported")
        if not self._is_irreducible():
            raise ValueError(f"{self.min_poly} is reducible over Q")
        self.trusted = dict(trusted or {})
        self._power_table = self._build_power_table()
        self.zero = self.element([0] * self.degree)
        self.one = self.element([1] + [0] * (self.degree - 1))
        self.alpha = self.element([0, 1] + [0] * (self.degree - 2))
        self.units = tuple(self.element(u) for u in units)
        self.unit_norms = tuple(unit_norms)
        for u, n in zip(self.units, self.unit_norms):
            if u.norm() != n:
                raise ValueError(f"declared unit norm mismatch for {u}")
        self._sigma_matrix = None
        if sigma_images is not None:
            self._sigma_matrix = tuple(tuple(Fraction(c) for c in img) for img in sigma_images)
            self._check_sigma()
        self._roots = None

    # -- construction helpers

    def element(self, coords) -> "NfElement":
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(coords)}")
        return NfElement(self, coords)

    def from_int(self, n) -> "NfElement":
        return self.element([n] + [0] * (self.degree - 1))

    def _is_irreducible(self) -> bool:
        # degree <= 3: irreducible over Q iff there is no rational root
        c0, lead = self.min_poly[0], self.min_poly[-1]
        if c0 == 0:
            return False
        for num in _divisors(abs(c0)):
            for den in _divisors(abs(lead)):
                for s in (1, -1):
                    r = Fraction(s * num, den)
                    if sum(c * r**k for k, c in enumerate(self.min_poly)) == 0:
                        return False
        return True

    def _build_power_table(self):
        # coordinates of alpha^d .. alpha^(2d-2) over the power basis
        d = self.degree
        table = []
        current = [Fraction(-c) for c in self.min_poly[:-1]]  # alpha^d
        table.append(tuple(current))
        for _ in range(d - 2):
            shifted = [Fraction(0)] + current[: d - 1]
            overflow = current[d - 1]
            current = [shifted[i] - overflow * self.min_poly[i] for i in range(d)]
            table.append(tuple(current))
        return table

    # -- core arithmetic on coordinate vectors

    def _mul_coords(self, a, b):
        d = self.degree
        conv = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] += ai * bj
        out = list(conv[:d])
        for k in range(d, 2 * d - 1):
            ck = conv[k]
            if ck:
                row = self._power_table[k - d]
                for i in range(d):
                    out[i] += ck * row[i]
        return tuple(out)

    def mult_matrix(self, a: "NfElement"):
        """Columns are the coordinates of a * alpha^j."""
        cols = []
        basis = [Fraction(0)] * self.degree
        for j in range(self.degree):
            e = list(basis)
            e[j] = Fraction(1)
            cols.append(self._mul_coords(a.coords, tuple(e)))
        return [[cols[j][i] for j in range(self.degree)] for i in range(self.degree)]

    def inverse(self, a: "NfElement") -> "NfElement":
        if a.is_zero():
            raise ZeroDivisionError("number field division by zero")
        m = self.mult_matrix(a)
        rhs = [Fraction(1)] + [Fraction(0)] * (self.degree - 1)
        return self.element(_solve_linear(m, rhs))

    # -- norms

    def norm(self, a: "NfElement") -> Fraction:
        return _det(self.mult_matrix(a))

    def norm_via_resultant(self, a: "NfElement") -> Fraction:
        """Resultant of the minimal polynomial with the coordinate polynomial;
        equals the norm for monic min_poly.  Independent of mult_matrix."""
        return _resultant(
            [Fraction(c) for c in self.min_poly],
            list(a.coords),
        )

    # -- Galois action (cyclic cubic only)

    def sigma(self, a: "NfElement") -> "NfElement":
        if self._sigma_matrix is None:
            raise ValueError(f"field {self.name} has no stored Galois action")
        d = self.degree
        out = [Fraction(0)] * d
        for j, cj in enumerate(a.coords):
            if cj:
                img = self._sigma_matrix[j]
                for i in range(d):
                    out[i] += cj * img[i]
        return self.element(out)

    def _check_sigma(self):
        a = self.element(self._sigma_matrix[1])
        images = [self.one, a, a * a]
        for j in range(self.degree):
            if images[j].coords != self._sigma_matrix[j]:
                raise ValueError("stored Galois images are not the powers of sigma(alpha)")
        x = a
        for _ in range(2):
            x = self.sigma(x)
        if x != self.alpha:
            raise ValueError("stored Galois action does not have order 3")

    # -- real embeddings

    def real_roots(self):
        """Isolating intervals for all real roots of min_poly, ascending."""
        if self._roots is None:
            self._roots = _isolate_real_roots(self.min_poly)
            if len(self._roots) != self.degree:
                # both shipped fields are totally real; anything else would
                # need complex embeddings we do not implement
                raise ValueError("field is not totally real")
        return self._roots

    def embedding_interval(self, a: "NfElement", index: int, width: Fraction):
        """An interval around the value of a at the index-th real root, at
        most `width` wide (refining the root as needed)."""
        root = self.real_roots()[index]
        while True:
            lo, hi = _interval_poly_eval(a.coords, root.lo, root.hi)
            if hi - lo <= width:
                return (lo, hi)
            root.refine()

    def embedding_sign(self, a: "NfElement", index: int) -> int:
        """Exact sign of a at the index-th real embedding."""
        if a.is_zero():
            return 0
        root = self.real_roots()[index]
        for _ in range(2000):
            lo, hi = _interval_poly_eval(a.coords, root.lo, root.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            root.refine()
        raise PrecisionError(f"sign of {a} undecided after deep refinement")

    # -- p-adic lift

    def lift(self, a: "NfElement", p: int, precision: int) -> "PadicNfElement":
        return PadicNfElement.from_exact(a, p, precision)

    def __repr__(self):
        return f"NumberField({self.name}, {self.min_poly})"


class NfElement:
    """An element of Q(alpha) as a reduced rational coordinate vector."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.coords = coords

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        return NfElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._coerce(other)
        return NfElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return NfElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NfElement(self.field, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        return NfElement(self.field, self.field._mul_coords(self.coords, other.coords))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return (-self) + other

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return NfElement(self.field, tuple(a / other for a in self.coords))
        other = self._coerce(other)
        return self * self.field.inverse(other)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.field.inverse(self) ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, NfElement):
            if other.field is not self.field:
                raise ValueError("elements live in different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_int(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_int(other)
        return isinstance(other, NfElement) and self.field is other.field and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.field), self.coords))

    def norm(self) -> Fraction:
        return self.field.norm(self)

    def sigma(self) -> "NfElement":
        return self.field.sigma(self)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def valuation(self, p: int):
        """p-adic valuation, valid when p is inert: min over coordinates of
        the rational valuations.  math.inf for zero."""
        if self.is_zero():
            return math.inf
        return min(_rational_valuation(c, p) for c in self.coords if c != 0)

    def __repr__(self):
        names = {2: ("1", "a"), 3: ("1", "a", "a^2")}[self.field.degree]
        parts = [f"{c}*{n}" for c, n in zip(self.coords, names) if c != 0]
        return " + ".join(parts) if parts else "0"


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def _rational_valuation(x: Fraction, p: int) -> int:
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


# ---------------------------------------------------------------------------
# Small exact linear algebra

def _det(m) -> Fraction:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    raise ValueError("determinant supported up to 3x3")


def _solve_linear(matrix, rhs):
    n = len(matrix)
    m = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def _resultant(f, g) -> Fraction:
    """Resultant of two rational polynomials via the Sylvester determinant."""
    f = _strip(f)
    g = _strip(g)
    if not g:
        return Fraction(0)
    df, dg = len(f) - 1, len(g) - 1
    if dg == 0:
        return g[0] ** df
    size = df + dg
    rows = []
    for i in range(dg):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(df):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return _generic_det(rows)


def _generic_det(m) -> Fraction:
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def _strip(poly):
    poly = [Fraction(c) for c in poly]
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


# ---------------------------------------------------------------------------
# Real root isolation and interval evaluation

class _RootInterval:
    """A bisection-refinable isolating interval with exact endpoints."""

    __slots__ = ("poly", "lo", "hi")

    def __init__(self, poly, lo: Fraction, hi: Fraction):
        self.poly = poly
        self.lo = lo
        self.hi = hi

    def refine(self, steps: int = 4):
        for _ in range(steps):
            mid = (self.lo + self.hi) / 2
            value = sum(c * mid**k for k, c in enumerate(self.poly))
            if value == 0:
                # cannot happen for an irreducible poly of degree >= 2, but
                # nudge instead of dividing by zero if it ever did
                mid += (self.hi - self.lo) / 4
                value = sum(c * mid**k for k, c in enumerate(self.poly))
            lo_val = sum(c * self.lo**k for k, c in enumerate(self.poly))
            if _sign(lo_val) != _sign(value):
                self.hi = mid
            else:
                self.lo = mid

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def _isolate_real_roots(poly):
    bound = 1 + max(abs(c) for c in poly[:-1])
    points = [Fraction(k, 2) for k in range(-2 * bound, 2 * bound + 1)]
    values = [sum(c * x**k for k, c in enumerate(poly)) for x in points]
    roots = []
    for i in range(len(points) - 1):
        if values[i] == 0:
            raise ValueError("rational root encountered; polynomial reducible")
        if _sign(values[i]) != _sign(values[i + 1]) and values[i + 1] != 0:
            roots.append(_RootInterval(list(map(Fraction, poly)), points[i], points[i + 1]))
    return roots


def _interval_poly_eval(coords, lo: Fraction, hi: Fraction):
    """Evaluate sum coords[k] * x^k over the interval [lo, hi] by interval
    Horner; returns exact rational bounds."""
    vlo = vhi = Fraction(0)
    for c in reversed(coords):
        # multiply current interval by [lo, hi]
        candidates = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
        vlo, vhi = min(candidates), max(candidates)
        vlo += c
        vhi += c
    return vlo, vhi


# ---------------------------------------------------------------------------
# p-adic completion at an inert prime

def is_inert(min_poly, p: int) -> bool:
    """Irreducibility of min_poly mod p, which certifies inertness for the
    shipped degrees (a cubic or quadratic is reducible iff it has a root)."""
    d = len(min_poly) - 1
    if d not in (2, 3):
        raise ValueError("inertness certificate implemented for degrees 2 and 3 only")
    for x in range(p):
        if sum(c * x**k for k, c in enumerate(min_poly)) % p == 0:
            return False
    return True


class PadicNfElement:
    """An integral element of the completion Z_p[alpha], stored as integer
    coordinates mod p^N.  Requires the prime to be inert so that coordinate
    reduction is a faithful quotient and the valuation is the coordinate
    minimum."""

    __slots__ = ("field", "p", "precision", "coords")

    def __init__(self, field: NumberField, p: int, precision: int, coords):
        self.field = field
        self.p = p
        self.precision = precision
        mod = p**precision
        self.coords = tuple(int(c) % mod for c in coords)

    @classmethod
    def from_exact(cls, a: NfElement, p: int, precision: int) -> "PadicNfElement":
        if not is_inert(a.field.min_poly, p):
            raise ValueError(f"{p} is not inert in {a.field.name}; refusing to complete")
        mod = p**precision
        coords = []
        for c in a.coords:
            if c.denominator % p == 0:
                raise ValueError(f"{a} is not p-integral at p={p}")
            coords.append(c.numerator * pow(c.denominator, -1, mod) % mod)
        return cls(a.field, p, precision, coords)

    def _check(self, other: "PadicNfElement"):
        if self.field is not other.field or self.p != other.p:
            raise ValueError("mixed p-adic contexts")

    def _with(self, coords, precision):
        return PadicNfElement(self.field, self.p, precision, coords)

    def __add__(self, other):
        other = self._coerce(other)
        prec = min(self.precision, other.precision)
        return self._with([a + b for a, b in zip(self.coords, other.coords)], prec)

    def __sub__(self, other):
        other = self._coerce(other)
        prec = min(self.precision, other.precision)
        return self._with([a - b for a, b in zip(self.coords, other.coords)], prec)

    def __neg__(self):
        return self._with([-a for a in self.coords], self.precision)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._with([a * other for a in self.coords], self.precision)
        other = self._coerce(other)
        prec = min(self.precision, other.precision)
        mod = self.p**prec
        d = self.field.degree
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(self.coords):
            if ai:
                for j, bj in enumerate(other.coords):
                    if bj:
                        conv[i + j] = (conv[i + j] + ai * bj) % mod
        out = list(conv[:d])
        for k in range(d, 2 * d - 1):
            ck = conv[k]
            if ck:
                row = self.field._power_table[k - d]
                for i in range(d):
                    # power table entries are integers for monic integer polys
                    out[i] = (out[i] + ck * int(row[i])) % mod
        return self._with(out, prec)

    __radd__ = __add__
    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, PadicNfElement):
            self._check(other)
            return other
        if isinstance(other, int):
            return PadicNfElement(
                self.field, self.p, self.precision, [other] + [0] * (self.field.degree - 1)
            )
        raise TypeError(f"cannot coerce {other!r}")

    def __eq__(self, other):
        if not isinstance(other, PadicNfElement):
            return NotImplemented
        self._check(other)
        prec = min(self.precision, other.precision)
        mod = self.p**prec
        return all((a - b) % mod == 0 for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        raise TypeError("p-adic elements are precision-fuzzy; not hashable")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def valuation(self):
        """min coordinate valuation; math.inf means >= working precision."""
        best = math.inf
        for c in self.coords:
            if c == 0:
                continue
            v = 0
            while c % self.p == 0:
                c //= self.p
                v += 1
            best = min(best, v)
            if best == 0:
                return 0
        return best

    def is_unit(self) -> bool:
        return self.valuation() == 0

    def unit_inverse(self) -> "PadicNfElement":
        """Inverse of a unit: residue-field inversion then Hensel doubling."""
        if not self.is_unit():
            raise ZeroDivisionError("p-adic inverse requires a unit")
        rf = ResidueField(self.field, self.p)
        x = rf.inverse(rf.element(self.coords))
        inv = PadicNfElement(self.field, self.p, 1, x.coords)
        prec = 1
        while prec < self.precision:
            prec = min(2 * prec, self.precision)
            lifted = PadicNfElement(self.field, self.p, prec, inv.coords)
            two = PadicNfElement(self.field, self.p, prec, [2] + [0] * (self.field.degree - 1))
            here = PadicNfElement(self.field, self.p, prec, self.coords)
            inv = lifted * (two - here * lifted)
        return inv

    def scale_down(self, k: int) -> "PadicNfElement":
        """Exact division by p^k; precision drops by k."""
        if k == 0:
            return self
        pk = self.p**k
        if any(c % pk for c in self.coords):
            raise ValueError(f"not divisible by p^{k}")
        return PadicNfElement(
            self.field, self.p, self.precision - k, [c // pk for c in self.coords]
        )

    def __repr__(self):
        return f"Padic({self.coords} mod {self.p}^{self.precision})"


# ---------------------------------------------------------------------------
# Residue field GF(p^d) for an inert prime

class ResidueField:
    """GF(p^d) realized as polynomials mod (p, min_poly)."""

    def __init__(self, field: NumberField, p: int):
        if not is_inert(field.min_poly, p):
            raise ValueError(f"{p} is not inert in {field.name}")
        self.field = field
        self.p = p
        self.degree = field.degree
        self.size = p**field.degree
        self.zero = self.element([0] * self.degree)
        self.one = self.element([1] + [0] * (self.degree - 1))

    def element(self, coords) -> "ResidueElement":
        return ResidueElement(self, tuple(int(c) % self.p for c in coords))

    def from_int(self, n: int) -> "ResidueElement":
        return self.element([n] + [0] * (self.degree - 1))

    def mul(self, a, b):
        d = self.degree
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a.coords):
            if ai:
                for j, bj in enumerate(b.coords):
                    if bj:
                        conv[i + j] = (conv[i + j] + ai * bj) % self.p
        out = list(conv[:d])
        for k in range(d, 2 * d - 1):
            ck = conv[k]
            if ck:
                row = self.field._power_table[k - d]
                for i in range(d):
                    out[i] = (out[i] + ck * int(row[i])) % self.p
        return self.element(out)

    def inverse(self, a: "ResidueElement") -> "ResidueElement":
        if a.is_zero():
            raise ZeroDivisionError("residue field division by zero")
        return a ** (self.size - 2)

    def is_square(self, a: "ResidueElement") -> bool:
        if a.is_zero():
            return True
        if self.p == 2:
            return True  # squaring is a bijection in characteristic 2
        return (a ** ((self.size - 1) // 2)) == self.one

    def all_elements(self):
        def rec(k):
            if k == 0:
                yield ()
                return
            for rest in rec(k - 1):
                for c in range(self.p):
                    yield (c,) + rest

        for coords in rec(self.degree):
            yield self.element(coords)


class ResidueElement:
    __slots__ = ("rf", "coords")

    def __init__(self, rf: ResidueField, coords):
        self.rf = rf
        self.coords = coords

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        return self.rf.element([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        other = self._coerce(other)
        return self.rf.element([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return self.rf.element([-a for a in self.coords])

    def __mul__(self, other):
        other = self._coerce(other)
        return self.rf.mul(self, other)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * self.rf.inverse(other)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, n: int):
        result = self.rf.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, ResidueElement):
            return other
        if isinstance(other, int):
            return self.rf.from_int(other)
        raise TypeError(f"cannot coerce {other!r}")

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.rf.from_int(other)
        return isinstance(other, ResidueElement) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"GF({self.rf.p}^{self.rf.degree}){self.coords}"


# ---------------------------------------------------------------------------
# Unit square classes and the sign filter

def lambda_candidates(field: NumberField) -> list[NfElement]:
    """Square-class representatives of norm +1 built from the fundamental
    units: {1, e1, -e2, -e1*e2} for unit norms (+1, -1)."""
    if len(field.units) != 2 or field.unit_norms != (1, -1):
        raise ValueError("candidate list needs units of norms (+1, -1)")
    e1, e2 = field.units
    candidates = [field.one, e1, -e2, -(e1 * e2)]
    for c in candidates:
        if field.norm(c) != 1:
            raise AssertionError(f"candidate {c} does not have norm +1")
    return candidates


def positivity_filter(candidates, required_signs) -> list[NfElement]:
    """Keep candidates matching the required sign at each listed embedding.

    required_signs: iterable of (embedding_index, +-1).
    """
    kept = []
    for c in candidates:
        if all(c.field.embedding_sign(c, i) == s for i, s in required_signs):
            kept.append(c)
    return kept


def norm_equation_sign_constraints(field: NumberField, p2_sign: int, coefficient: NfElement):
    """Sign constraints on lambda in p2_sign*P^2 + coefficient*R^2 = lambda*U^2.

    At a real embedding where both terms of the left side have the same
    strict sign, lambda must match it; mixed signs constrain nothing.
    """
    constraints = []
    for i in range(field.degree):
        c_sign = field.embedding_sign(coefficient, i)
        if c_sign == p2_sign:
            constraints.append((i, c_sign))
    return constraints


# ---------------------------------------------------------------------------
# Shipped field specs

@lru_cache(maxsize=None)
def load_fields() -> dict:
    raw = json.loads(resources.files("lucas_squares.data").joinpath("fields.json").read_text())
    if raw.get("version") != 1:
        raise ValueError("unsupported fields data version")
    fields = {}
    for name, spec in raw["fields"].items():
        fields[name] = NumberField(
            name,
            spec["min_poly"],
            units=spec.get("units", ()),
            unit_norms=tuple(spec.get("unit_norms", ())),
            sigma_images=spec.get("sigma_images"),
            trusted=spec.get("trusted"),
        )
    return fields


def field_k() -> NumberField:
    return load_fields()["K"]


def field_l() -> NumberField:
    return load_fields()["L"]
