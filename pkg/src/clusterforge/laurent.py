"""Sparse exact Laurent polynomials in x_1..x_n (exponents in Z) and
y_1..y_n (exponents in Z_{>=0}).

Coefficients are exact rationals.  They are kept as plain ints whenever the
value is integral (the usual case: cluster variables have integer
coefficients) and fall back to Fraction when a division demands it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class NotHomogeneous(ValueError):
    pass


class InexactDivision(ArithmeticError):
    pass


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class LaurentPoly:
    """Terms map (x-exponent tuple, y-exponent tuple) -> nonzero coefficient."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[tuple[int, ...], tuple[int, ...]], object] | None = None,
                 _validate: bool = True):
        self.n = n
        clean = {}
        if terms:
            for key, c in terms.items():
                c = _norm_coeff(c if isinstance(c, (int, Fraction)) else Fraction(c))
                if c == 0:
                    continue
                xe, ye = key
                if _validate:
                    if len(xe) != n or len(ye) != n:
                        raise ValueError("exponent vector length mismatch")
                    if any(e < 0 for e in ye):
                        raise ValueError("y-exponents must be nonnegative")
                clean[(tuple(xe), tuple(ye))] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "LaurentPoly":
        return LaurentPoly(n, {})

    @staticmethod
    def one(n: int) -> "LaurentPoly":
        z = (0,) * n
        return LaurentPoly(n, {(z, z): 1})

    @staticmethod
    def x_var(n: int, i: int, power: int = 1) -> "LaurentPoly":
        xe = tuple(power if t == i - 1 else 0 for t in range(n))
        return LaurentPoly(n, {(xe, (0,) * n): 1})

    @staticmethod
    def y_var(n: int, j: int, power: int = 1) -> "LaurentPoly":
        ye = tuple(power if t == j - 1 else 0 for t in range(n))
        return LaurentPoly(n, {((0,) * n, ye): 1})

    # -- basic structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"LaurentPoly({self.to_text()})"

    def copy_terms(self):
        return dict(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = _norm_coeff(s)
        return LaurentPoly(self.n, out, _validate=False)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {k: -c for k, c in self.terms.items()}, _validate=False)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        out: dict = {}
        for (xa, ya), ca in small.items():
            for (xb, yb), cb in big.items():
                key = (tuple(p + q for p, q in zip(xa, xb)),
                       tuple(p + q for p, q in zip(ya, yb)))
                s = out.get(key, 0) + ca * cb
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        return LaurentPoly(self.n, {k: _norm_coeff(c) for k, c in out.items()}, _validate=False)

    @staticmethod
    def _key_order(key):
        xe, ye = key
        return (sum(xe) + sum(ye), xe, ye)

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division in Z[x^{+-1}, y]; raises InexactDivision when the
        quotient is not a Laurent polynomial (which signals a bug: the Laurent
        phenomenon guarantees exactness for every exchange step)."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.n)
        rem = dict(self.terms)
        lead_d = max(divisor.terms, key=self._key_order)
        cd = divisor.terms[lead_d]
        dxe, dye = lead_d
        quot: dict = {}
        while rem:
            lead_r = max(rem, key=self._key_order)
            cr = rem[lead_r]
            rxe, rye = lead_r
            ye = tuple(a - b for a, b in zip(rye, dye))
            if any(e < 0 for e in ye):
                raise InexactDivision("y-exponent underflow in quotient")
            xe = tuple(a - b for a, b in zip(rxe, dxe))
            if isinstance(cr, int) and isinstance(cd, int) and cr % cd == 0:
                c = cr // cd
            else:
                c = _norm_coeff(Fraction(cr) / Fraction(cd))
            quot[(xe, ye)] = c
            for (xb, yb), cb in divisor.terms.items():
                key = (tuple(p + q for p, q in zip(xe, xb)),
                       tuple(p + q for p, q in zip(ye, yb)))
                s = rem.get(key, 0) - c * cb
                if s == 0:
                    rem.pop(key, None)
                else:
                    rem[key] = _norm_coeff(s)
        return LaurentPoly(self.n, quot, _validate=False)

    # -- inspection ---------------------------------------------------------

    def x_min_exponents(self) -> tuple[int, ...]:
        mins = [None] * self.n
        for (xe, _ye) in self.terms:
            for i, e in enumerate(xe):
                if mins[i] is None or e < mins[i]:
                    mins[i] = e
        return tuple(0 if m is None else m for m in mins)

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def all_positive(self) -> bool:
        return all((c > 0) for c in self.terms.values())

    def grading_degree(self, B0: list[list[int]]) -> tuple[int, ...]:
        """Common multidegree under deg(x_i) = e_i, deg(y_j) = -column j of B0.

        Raises NotHomogeneous when terms disagree (that would mean a wrong
        sign convention or a corrupted variable).
        """
        if self.is_zero():
            raise NotHomogeneous("zero polynomial has no degree")
        n = self.n
        deg = None
        for (xe, ye) in self.terms:
            d = list(xe)
            for j in range(n):
                if ye[j]:
                    for i in range(n):
                        d[i] -= B0[i][j] * ye[j]
            d = tuple(d)
            if deg is None:
                deg = d
            elif deg != d:
                raise NotHomogeneous(f"terms of degree {deg} and {d}")
        return deg

    def to_text(self) -> str:
        """Canonical term-sorted text form, used for golden files."""
        if not self.terms:
            return "0"
        bits = []
        for (xe, ye) in sorted(self.terms, key=self._key_order, reverse=True):
            c = self.terms[(xe, ye)]
            factors = []
            for i, e in enumerate(xe):
                if e == 1:
                    factors.append(f"x{i+1}")
                elif e != 0:
                    factors.append(f"x{i+1}^{e}")
            for j, e in enumerate(ye):
                if e == 1:
                    factors.append(f"y{j+1}")
                elif e != 0:
                    factors.append(f"y{j+1}^{e}")
            body = "*".join(factors)
            if not factors:
                bits.append(str(c))
            elif c == 1:
                bits.append(body)
            elif c == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{c}*{body}")
        out = bits[0]
        for b in bits[1:]:
            out += ("-" + b[1:]) if b.startswith("-") else ("+" + b)
        return out


def product(n: int, polys: Iterable[LaurentPoly]) -> LaurentPoly:
    acc = LaurentPoly.one(n)
    for p in polys:
        acc = acc * p
    return acc


def check_laurent(p: LaurentPoly) -> bool:
    """True iff p is of the shape F / x^d with d integral and F a polynomial
    in x, y over Z not divisible by any x_i.  For validly constructed values
    this amounts to integrality of the coefficients: clearing each variable's
    minimal exponent always produces the reduced numerator."""
    if p.is_zero():
        return False
    if not p.has_integer_coefficients():
        return False
    # y-exponent nonnegativity is a construction invariant, but tolerate raw
    # term dicts injected by tests.
    for (_xe, ye) in p.terms:
        if any(e < 0 for e in ye):
            return False
    mins = p.x_min_exponents()
    # numerator F = p * x^(-mins); F is not divisible by x_i iff some term
    # attains the minimum, which is automatic -- unless the term data was
    # built with an explicit common factor, which we re-check here.
    for i in range(p.n):
        if not any(xe[i] == mins[i] for (xe, _ye) in p.terms):
            return False
    return True
