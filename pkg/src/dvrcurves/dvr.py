"""Exact arithmetic in three discrete valuation ring models.

Supported models (``CoeffConfig.model``):

  ``"Fp[t]"``  O = F_p[t] localized at (t), K = F_p(t), residue field F_p
  ``"Q[t]"``   O = Q[t] localized at (t),  K = Q(t),    residue field Q
  ``"Zp"``     O = Z localized at (p),     K = Q,       residue field F_p;
               the uniformizer t is identified with the prime p.

All arithmetic is exact.  Elements are kept in a canonical reduced form
(coprime numerator/denominator, monic polynomial denominator or positive
integer denominator), so equality is structural and hashing is safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeValuationError, NotUnitError

EQUICHAR_P = "Fp[t]"
EQUICHAR_0 = "Q[t]"
MIXED_CHAR = "Zp"

_MODELS = (EQUICHAR_P, EQUICHAR_0, MIXED_CHAR)


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class CoeffConfig:
    """Choice of coefficient model; p is required for Fp[t] and Zp."""

    model: str
    p: int | None = None

    def __post_init__(self):
        if self.model not in _MODELS:
            raise ValueError(f"unknown coefficient model {self.model!r}")
        if self.model in (EQUICHAR_P, MIXED_CHAR):
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"model {self.model} needs a prime p, got {self.p}")
        elif self.p is not None:
            raise ValueError("model Q[t] takes no p")

    @property
    def char_exponent(self):
        """Characteristic exponent of the fraction field K (p, or 1 in char 0)."""
        return self.p if self.model == EQUICHAR_P else 1

    @property
    def residue_char(self):
        """Characteristic of the residue field k."""
        return self.p if self.model in (EQUICHAR_P, MIXED_CHAR) else 0

    def describe(self):
        if self.model == EQUICHAR_P:
            return f"F_{self.p}[t] localized at (t)"
        if self.model == EQUICHAR_0:
            return "Q[t] localized at (t)"
        return f"Z localized at ({self.p})"


# ---------------------------------------------------------------------------
# dense univariate polynomials in t, as coefficient tuples (index = degree).
# scalar field: F_p for p > 0, Q (Fraction) for p == 0.  zero is ().

def _trim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


def _padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    if p:
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
    else:
        for i, c in enumerate(b):
            out[i] = out[i] + c
    return _trim(out)


def _pneg(a, p):
    if p:
        return tuple((-c) % p for c in a)
    return tuple(-c for c in a)


def _psub(a, b, p):
    return _padd(a, _pneg(b, p), p)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    if p:
        out = [c % p for c in out]
    return _trim(out)


def _pdivmod(a, b, p):
    """Euclidean division over the coefficient field; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if p:
        inv_lead = pow(b[-1], -1, p)
    else:
        inv_lead = Fraction(1) / b[-1]
    rem = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    db = len(b) - 1
    while len(rem) >= len(b):
        while rem and not rem[-1]:
            rem.pop()
        if len(rem) < len(b):
            break
        shift = len(rem) - 1 - db
        coef = rem[-1] * inv_lead
        if p:
            coef %= p
        q[shift] = coef
        for j, cb in enumerate(b):
            rem[shift + j] -= coef * cb
            if p:
                rem[shift + j] %= p
        rem.pop()
    return _trim(q), _trim(rem)


def _pgcd(a, b, p):
    """Monic gcd; gcd((), ()) = ()."""
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if not a:
        return ()
    return _pmonic(a, p)


def _pmonic(a, p):
    if not a or a[-1] == 1:
        return a
    if p:
        inv = pow(a[-1], -1, p)
        return tuple((c * inv) % p for c in a)
    inv = Fraction(1) / a[-1]
    return tuple(c * inv for c in a)


def _pord(a):
    """t-adic order of a nonzero coefficient tuple."""
    for i, c in enumerate(a):
        if c:
            return i
    raise ValueError("order of zero polynomial")


def _int_ord(n, p):
    """p-adic order of a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class DvrField:
    """The fraction field K of one DVR model; a factory for its elements."""

    def __init__(self, config):
        if not isinstance(config, CoeffConfig):
            config = CoeffConfig(*config) if isinstance(config, tuple) else CoeffConfig(config)
        self.config = config
        self.model = config.model
        self.p = config.p
        self._scalar_p = config.p if config.model == EQUICHAR_P else 0
        self._zero = None
        self._one = None
        self._t = None
        self._residue = None

    def __eq__(self, other):
        return isinstance(other, DvrField) and self.config == other.config

    def __hash__(self):
        return hash(self.config)

    def __repr__(self):
        return f"DvrField({self.config.describe()})"

    @property
    def char_exponent(self):
        return self.config.char_exponent

    # -- constructors -------------------------------------------------

    def zero(self):
        if self._zero is None:
            self._zero = self.from_int(0)
        return self._zero

    def one(self):
        if self._one is None:
            self._one = self.from_int(1)
        return self._one

    def t(self):
        """The uniformizer: the variable t, or the prime p in the Zp model."""
        if self._t is None:
            if self.model == MIXED_CHAR:
                self._t = self.from_int(self.p)
            else:
                one = 1 if self.model == EQUICHAR_P else Fraction(1)
                self._t = DvrElement(self, (0, one), (self._unit_scalar(),))
        return self._t

    def _unit_scalar(self):
        return 1 if self.model == EQUICHAR_P else Fraction(1)

    def from_int(self, n):
        if self.model == MIXED_CHAR:
            return DvrElement(self, Fraction(n), None)
        if self.model == EQUICHAR_P:
            n %= self.p
            num = (n,) if n else ()
        else:
            num = (Fraction(n),) if n else ()
        return DvrElement(self, num, (self._unit_scalar(),))

    def from_fraction(self, q):
        q = Fraction(q)
        if self.model == MIXED_CHAR:
            return DvrElement(self, q, None)
        if self.model == EQUICHAR_P:
            if q.denominator % self.p == 0 and q.numerator % self.p != 0:
                raise ZeroDivisionError(f"1/{q.denominator} undefined in F_{self.p}")
            return self.from_int(q.numerator) / self.from_int(q.denominator)
        num = (q,) if q else ()
        return DvrElement(self, num, (Fraction(1),))

    def from_t_coeffs(self, num, den=None):
        """Element from ascending coefficient tuples in t (poly models only)."""
        if self.model == MIXED_CHAR:
            p = self.p
            val_n = sum(c * p**i for i, c in enumerate(num))
            val_d = sum(c * p**i for i, c in enumerate(den)) if den else 1
            return DvrElement(self, Fraction(val_n, val_d), None)
        conv = (lambda c: c % self.p) if self.model == EQUICHAR_P else Fraction
        num = _trim(tuple(conv(c) for c in num))
        if den is None:
            den = (self._unit_scalar(),)
        else:
            den = _trim(tuple(conv(c) for c in den))
        return self._make(num, den)

    def _make(self, num, den):
        """Normalize a raw fraction of coefficient tuples."""
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return DvrElement(self, (), (self._unit_scalar(),))
        p = self._scalar_p
        g = _pgcd(num, den, p)
        if len(g) > 1 or (g and g[0] != 1):
            num = _pdivmod(num, g, p)[0]
            den = _pdivmod(den, g, p)[0]
        if den[-1] != 1:
            if p:
                inv = pow(den[-1], -1, p)
                num = tuple((c * inv) % p for c in num)
                den = tuple((c * inv) % p for c in den)
            else:
                inv = Fraction(1) / den[-1]
                num = tuple(c * inv for c in num)
                den = tuple(c * inv for c in den)
        return DvrElement(self, num, den)

    @property
    def residue_field(self):
        if self._residue is None:
            self._residue = ResidueField(self.config)
        return self._residue

    def __str__(self):
        return self.config.describe()


class DvrElement:
    """Exact element of K (or of O when valuation >= 0), canonical form."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    # -- basics ---------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        if self.field.model == MIXED_CHAR:
            return self.num == 1
        return self.num == self.den

    def __eq__(self, other):
        if not isinstance(other, DvrElement):
            return NotImplemented
        return (self.field == other.field and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.config, self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"<{self} : {self.field.model}>"

    # -- ring operations --------------------------------------------------

    def _check(self, other):
        if not isinstance(other, DvrElement) or other.field != self.field:
            raise TypeError("mixed coefficient fields")

    def __add__(self, other):
        self._check(other)
        f = self.field
        if f.model == MIXED_CHAR:
            return DvrElement(f, self.num + other.num, None)
        p = f._scalar_p
        if self.den == other.den:
            return f._make(_padd(self.num, other.num, p), self.den)
        num = _padd(_pmul(self.num, other.den, p), _pmul(other.num, self.den, p), p)
        return f._make(num, _pmul(self.den, other.den, p))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        if f.model == MIXED_CHAR:
            return DvrElement(f, -self.num, None)
        return DvrElement(f, _pneg(self.num, f._scalar_p), self.den)

    def __mul__(self, other):
        self._check(other)
        f = self.field
        if f.model == MIXED_CHAR:
            return DvrElement(f, self.num * other.num, None)
        p = f._scalar_p
        return f._make(_pmul(self.num, other.num, p), _pmul(self.den, other.den, p))

    def __truediv__(self, other):
        return self * other.invert()

    def __pow__(self, n):
        f = self.field
        if n < 0:
            return self.invert() ** (-n)
        result = f.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def invert(self):
        """Inverse in K; ZeroDivisionError on 0."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        f = self.field
        if f.model == MIXED_CHAR:
            return DvrElement(f, 1 / self.num, None)
        return f._make(self.den, self.num)

    def invert_in_O(self):
        """Inverse inside O; requires valuation exactly 0."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.valuation() != 0:
            raise NotUnitError(f"{self} has positive valuation, not a unit of O")
        return self.invert()

    # -- valuation structure ------------------------------------------------

    def valuation(self):
        """t-adic (or p-adic) order; +infinity for 0."""
        if not self:
            return math.inf
        f = self.field
        if f.model == MIXED_CHAR:
            q = self.num
            if q.numerator % f.p == 0:
                return _int_ord(q.numerator, f.p)
            if q.denominator % f.p == 0:
                return -_int_ord(q.denominator, f.p)
            return 0
        # canonical form: num and den are coprime, so at most one has t | .
        v = _pord(self.num)
        return v if v else -_pord(self.den) if not self.den[0] else 0

    def in_O(self):
        return self.valuation() >= 0

    def is_unit_in_O(self):
        return self.valuation() == 0

    def residue(self):
        """Image in the residue field k; defined for valuation >= 0."""
        v = self.valuation()
        if v < 0:
            raise NegativeValuationError(f"{self} is not in O")
        f = self.field
        kf = f.residue_field
        if v > 0:
            return kf.zero()
        if f.model == MIXED_CHAR:
            q = self.num
            return kf.element((q.numerator * pow(q.denominator, -1, f.p)) % f.p)
        n0, d0 = self.num[0], self.den[0]
        if f.model == EQUICHAR_P:
            return kf.element((n0 * pow(d0, -1, f.p)) % f.p)
        return kf.element(Fraction(n0, 1) / d0)

    def __str__(self):
        from .parse import render_coeff
        return render_coeff(self)


class ResidueField:
    """The residue field k = O/(t): F_p or Q."""

    def __init__(self, config):
        self.config = config
        self.p = config.residue_char  # 0 means k = Q

    def __eq__(self, other):
        return isinstance(other, ResidueField) and self.config == other.config

    def __hash__(self):
        return hash(("residue", self.config))

    def __repr__(self):
        return f"ResidueField({'Q' if not self.p else f'F_{self.p}'})"

    @property
    def char_exponent(self):
        return self.p if self.p else 1

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def from_int(self, n):
        return self.element(n)

    def element(self, value):
        if self.p:
            return ResidueElement(self, int(value) % self.p)
        return ResidueElement(self, Fraction(value))

    def lift(self, relt, field):
        """Canonical lift k -> O into the given fraction field."""
        if self.p:
            return field.from_int(relt.value)
        return field.from_fraction(relt.value)


class ResidueElement:
    """Element of the residue field; exact scalar arithmetic."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def __bool__(self):
        return bool(self.value)

    def is_one(self):
        return self.value == 1

    def __eq__(self, other):
        if not isinstance(other, ResidueElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field.config, self.value))

    def __add__(self, other):
        return self.field.element(self.value + other.value)

    def __sub__(self, other):
        return self.field.element(self.value - other.value)

    def __neg__(self):
        return self.field.element(-self.value)

    def __mul__(self, other):
        return self.field.element(self.value * other.value)

    def __truediv__(self, other):
        return self * other.invert()

    def invert(self):
        if not self.value:
            raise ZeroDivisionError("inverse of zero residue")
        if self.field.p:
            return self.field.element(pow(self.value, -1, self.field.p))
        return self.field.element(1 / Fraction(self.value))

    def __pow__(self, n):
        if n < 0:
            return self.invert() ** (-n)
        if self.field.p:
            return self.field.element(pow(self.value, n, self.field.p))
        return self.field.element(Fraction(self.value) ** n)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"<{self.value} in {self.field!r}>"
