"""Exact arithmetic in Z[q].

q-integers, q-factorial products, q-binomial/multinomial coefficients,
cyclotomic polynomials, and evaluation at roots of unity.  Everything is done
with arbitrary-precision integers; a value "at a primitive d-th root of unity"
is obtained algebraically by reducing modulo the cyclotomic polynomial Phi_d,
never by floating-point approximation.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
import json
from fractions import Fraction


class NotPolynomial(ValueError):
    """Division of a product expression left a non-zero remainder."""


class NonIntegerValue(ValueError):
    """A polynomial does not reduce to an integer constant modulo Phi_d."""


class PoleAtRoot(ValueError):
    """A product expression has a pole at the requested root of unity."""


@dataclasses.dataclass(frozen=True, init=False)
class QPolynomial:
    """Dense polynomial in q with integer coefficients, constant term first.

    The coefficient tuple never has trailing zeros; the zero polynomial is the
    empty tuple.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: "tuple[int, ...] | list[int]" = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "QPolynomial | int") -> "QPolynomial":
        oc = (other,) if isinstance(other, int) else other.coeffs
        return QPolynomial([a + b for a, b in itertools.zip_longest(self.coeffs, oc, fillvalue=0)])

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "QPolynomial | int") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def shifted(self, s: int) -> "QPolynomial":
        """Multiply by q^s."""
        if self.is_zero():
            return self
        return QPolynomial((0,) * s + self.coeffs)

    def __divmod__(self, d: "QPolynomial") -> "tuple[QPolynomial, QPolynomial]":
        """Long division over Z; every elimination step must divide exactly."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q: list[int] = [0] * max(0, len(self.coeffs) - len(d.coeffs) + 1)
        r = list(self.coeffs)
        lead = d.coeffs[-1]
        while len(r) >= len(d.coeffs):
            if r[-1] == 0:
                r.pop()
                continue
            t, rem = divmod(r[-1], lead)
            if rem:
                raise NotPolynomial(f"leading coefficient {r[-1]} not divisible by {lead}")
            pos = len(r) - len(d.coeffs)
            q[pos] = t
            for i, c in enumerate(d.coeffs):
                r[pos + i] -= t * c
            assert r[-1] == 0
            r.pop()
        return QPolynomial(q), QPolynomial(r)

    def __floordiv__(self, d: "QPolynomial") -> "QPolynomial":
        quo, rem = divmod(self, d)
        if not rem.is_zero():
            raise NotPolynomial(f"remainder {rem} is non-zero")
        return quo

    def __mod__(self, d: "QPolynomial") -> "QPolynomial":
        return divmod(self, d)[1]

    def at_one(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        """Ascending powers, e.g. '1 + 2q^2 + q^3'."""
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if i == 0:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> str:
        return json.dumps({"coeffs": [str(c) for c in self.coeffs]})

    @staticmethod
    def from_json(text: str) -> "QPolynomial":
        return QPolynomial([int(c) for c in json.loads(text)["coeffs"]])


ONE = QPolynomial((1,))


def q_int(m: int) -> QPolynomial:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    if m < 1:
        raise ValueError(f"q_int requires m >= 1, got {m}")
    return QPolynomial((1,) * m)


@dataclasses.dataclass(frozen=True, init=False)
class QProductExpr:
    """scalar * q^shift * prod [a]_q / prod [b]_q, with a, b positive integers.

    The index multisets are kept sorted; equal indices on both sides are *not*
    cancelled eagerly so that the expression mirrors how it was built.
    """

    shift: int
    num: tuple[int, ...]
    den: tuple[int, ...]
    scalar: Fraction

    def __init__(self, shift: int = 0, num=(), den=(), scalar=Fraction(1)):
        if shift < 0:
            raise ValueError("shift must be non-negative")
        num = tuple(sorted(num))
        den = tuple(sorted(den))
        if num and num[0] < 1 or den and den[0] < 1:
            raise ValueError("q-integer indices must be >= 1")
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "scalar", Fraction(scalar))

    def __mul__(self, other: "QProductExpr") -> "QProductExpr":
        return QProductExpr(self.shift + other.shift, self.num + other.num,
                            self.den + other.den, self.scalar * other.scalar)

    def at_one(self) -> Fraction:
        """Value at q = 1: each [a]_q degenerates to a."""
        val = self.scalar
        for a in self.num:
            val *= a
        for b in self.den:
            val /= b
        return val

    def to_json(self) -> str:
        return json.dumps({"shift": self.shift, "num": list(self.num),
                           "den": list(self.den), "scalar": str(self.scalar)})

    @staticmethod
    def from_json(text: str) -> "QProductExpr":
        d = json.loads(text)
        return QProductExpr(d["shift"], d["num"], d["den"], Fraction(d["scalar"]))


def q_factorial_indices(m: int) -> tuple[int, ...]:
    """Index multiset of [m]_q! = [1]_q [2]_q ... [m]_q."""
    if m < 0:
        raise ValueError("negative factorial index")
    return tuple(range(1, m + 1))


def q_multinomial(M: int, parts) -> QProductExpr:
    """[M; N1, N2, ...]_q as a product expression; two parts give the q-binomial."""
    parts = tuple(parts)
    if any(p < 0 for p in parts) or M < 0:
        raise ValueError("q_multinomial parts must be non-negative")
    if sum(parts) != M:
        raise ValueError(f"parts {parts} do not sum to {M}")
    den: tuple[int, ...] = ()
    for p in parts:
        den += q_factorial_indices(p)
    return QProductExpr(0, q_factorial_indices(M), den)


def q_binomial(M: int, k: int) -> QProductExpr:
    if not 0 <= k <= M:
        raise ValueError(f"q_binomial requires 0 <= k <= M, got ({M}, {k})")
    return q_multinomial(M, (k, M - k))


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> QPolynomial:
    """Phi_d(q), by exact division of q^d - 1 by the Phi_k for proper divisors k."""
    if d < 1:
        raise ValueError("cyclotomic order must be >= 1")
    poly = QPolynomial((-1,) + (0,) * (d - 1) + (1,))
    for k in range(1, d):
        if d % k == 0:
            poly //= cyclotomic(k)
    return poly


def to_polynomial(expr: QProductExpr) -> QPolynomial:
    """Expand the product expression and perform the exact division."""
    # Ascending-degree multiplication keeps intermediate polynomials small.
    num = ONE
    for a in expr.num:
        num *= q_int(a)
    den = ONE
    for b in expr.den:
        den *= q_int(b)
    quo = num // den
    quo = quo.shifted(expr.shift)
    if expr.scalar != 1:
        scaled = [expr.scalar * c for c in quo.coeffs]
        if any(c.denominator != 1 for c in scaled):
            raise NotPolynomial(f"scalar {expr.scalar} does not clear: {quo}")
        quo = QPolynomial([int(c) for c in scaled])
    return quo


def phi_multiplicity(expr: QProductExpr, d: int) -> int:
    """Multiplicity of Phi_d in the expression: multiples of d above minus below."""
    if d < 2:
        raise ValueError("phi_multiplicity requires d >= 2")
    return (sum(1 for a in expr.num if a % d == 0)
            - sum(1 for b in expr.den if b % d == 0))


def eval_at_primitive_root(p: QPolynomial, d: int) -> int:
    """P at a primitive d-th root of unity, provided the value is an integer.

    Reduces modulo Phi_d and insists on a constant residue; d = 1 means q = 1.
    """
    if d < 1:
        raise ValueError("root order must be >= 1")
    if d == 1:
        return p.at_one()
    res = p % cyclotomic(d)
    if res.degree > 0:
        raise NonIntegerValue(f"residue mod Phi_{d} is not constant: {res}")
    return res.coeffs[0] if res.coeffs else 0


def eval_expr_at_root(expr: QProductExpr, d: int) -> int:
    """Independent oracle for eval_at_primitive_root(to_polynomial(expr), d).

    Pairs numerator and denominator q-integers congruent modulo d: a matched
    pair [a]_q/[b]_q contributes a/b at the root when d divides both, and 1
    otherwise (both factors take the same non-zero value).  Falls back to the
    polynomial route when the residue classes cannot be paired off.
    """
    if d < 1:
        raise ValueError("root order must be >= 1")
    if d == 1:
        val = expr.at_one()
        if val.denominator != 1:
            raise NonIntegerValue(f"value at q=1 is {val}")
        return int(val)
    mult = phi_multiplicity(expr, d)
    if mult < 0:
        raise PoleAtRoot(f"expression has a pole of order {-mult} at a primitive {d}-th root")
    if mult > 0:
        return 0
    by_class_num: dict[int, list[int]] = {}
    by_class_den: dict[int, list[int]] = {}
    for a in expr.num:
        by_class_num.setdefault(a % d, []).append(a)
    for b in expr.den:
        by_class_den.setdefault(b % d, []).append(b)
    ratio = Fraction(expr.scalar)
    for r in set(by_class_num) | set(by_class_den):
        ns = sorted(by_class_num.get(r, ()), reverse=True)
        ds = sorted(by_class_den.get(r, ()), reverse=True)
        if len(ns) != len(ds):
            # Unpaired factors evaluate to irrational units; let division decide.
            return eval_at_primitive_root(to_polynomial(expr), d)
        if r == 0:
            for a, b in zip(ns, ds):
                ratio *= Fraction(a, b)
        # r != 0: matched factors share the same value, ratio 1.
    root_power = QPolynomial((0,) * (expr.shift % d) + (1,)) % cyclotomic(d)
    if root_power.degree > 0:
        return eval_at_primitive_root(to_polynomial(expr), d)
    ratio *= root_power.coeffs[0] if root_power.coeffs else 0
    if ratio.denominator != 1:
        raise NonIntegerValue(f"paired evaluation gave non-integer {ratio}")
    return int(ratio)


def shape_predicates(p: QPolynomial) -> dict:
    """Reciprocal (palindromic), unimodal (single peak), non-negative."""
    cs = p.coeffs
    nonneg = all(c >= 0 for c in cs)
    reciprocal = cs == cs[::-1]
    rises = True
    unimodal = True
    for prev, cur in zip(cs, cs[1:]):
        if rises:
            if cur < prev:
                rises = False
        elif cur > prev:
            unimodal = False
            break
    return {"is_reciprocal": reciprocal, "is_unimodal": unimodal, "nonneg": nonneg}
