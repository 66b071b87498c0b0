"""Exact arithmetic over prime fields: the polynomial ring F_p[t] and
finite extensions F_{p^d} presented as F_p[x]/(pi).

Polynomials are dense, immutable coefficient tuples (low degree first).
The zero polynomial has degree -inf (a float sentinel, never -1), so that
valuation arithmetic and degree comparisons stay total without special
cases.  All values here are hashable and safe to share across threads.
"""

from __future__ import annotations

import math
import re

NEG_INF = float("-inf")

_TERM_RE = re.compile(r"^(\d+)?\*?(?:([a-zA-Z])(?:\^(\d+))?)?$")


def is_prime(n: int) -> bool:
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


class Polynomial:
    """A univariate polynomial over F_p, coefficients reduced mod p."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "Polynomial":
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> "Polynomial":
        return cls(p, (1,))

    @classmethod
    def constant(cls, p: int, c: int) -> "Polynomial":
        return cls(p, (c,))

    @classmethod
    def t(cls, p: int) -> "Polynomial":
        return cls(p, (0, 1))

    @classmethod
    def parse(cls, p: int, text: str) -> "Polynomial":
        """Parse an ASCII sum of terms ``c*t^k`` (the ``*`` is optional).

        Examples: ``t^3 + 2t + 1``, ``83t^2-199t+432``, ``0``.
        Coefficients are reduced mod p.
        """
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        s = s.replace("-", "+-")
        coeffs: dict[int, int] = {}
        var_seen = None
        for raw in s.split("+"):
            if not raw:
                continue
            sign = 1
            if raw.startswith("-"):
                sign = -1
                raw = raw[1:]
            m = _TERM_RE.match(raw)
            if not m or raw == "":
                raise ValueError(f"cannot parse polynomial term {raw!r} in {text!r}")
            cstr, var, estr = m.groups()
            if cstr is None and var is None:
                raise ValueError(f"cannot parse polynomial term {raw!r} in {text!r}")
            c = int(cstr) if cstr is not None else 1
            if var is None:
                k = 0
            else:
                if var_seen is None:
                    var_seen = var
                elif var != var_seen:
                    raise ValueError(f"mixed variables {var_seen!r}/{var!r} in {text!r}")
                k = int(estr) if estr is not None else 1
            coeffs[k] = coeffs.get(k, 0) + sign * c
        if not coeffs:
            return cls.zero(p)
        size = max(coeffs) + 1
        out = [0] * size
        for k, c in coeffs.items():
            out[k] = c
        return cls(p, out)

    # -- basic queries ------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.p != self.p:
                raise ValueError("mixed characteristics")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.p, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return Polynomial(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Polynomial.zero(self.p)
        a, b = self.coeffs, o.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        rem = list(self.coeffs)
        db = len(o.coeffs) - 1
        lead_inv = pow(o.coeffs[-1], -1, p)
        q = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] % p
            if c:
                factor = (c * lead_inv) % p
                q[i - db] = factor
                for j, cb in enumerate(o.coeffs):
                    rem[i - db + j] = (rem[i - db + j] - factor * cb) % p
        return Polynomial(p, q), Polynomial(p, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor (zero if both arguments are zero)."""
        a, b = self, self._coerce(other)
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def monic(self) -> "Polynomial":
        if self.is_zero or self.coeffs[-1] == 1:
            return self
        inv = pow(self.coeffs[-1], -1, self.p)
        return Polynomial(self.p, [c * inv for c in self.coeffs])

    def derivative(self) -> "Polynomial":
        return Polynomial(self.p, [k * c for k, c in enumerate(self.coeffs)][1:])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by t^k."""
        if self.is_zero:
            return self
        return Polynomial(self.p, (0,) * k + self.coeffs)

    def reverse(self, bound: int) -> "Polynomial":
        """t^bound * f(1/t), a polynomial when deg f <= bound."""
        if self.degree > bound:
            raise ValueError("degree exceeds reversal bound")
        padded = list(self.coeffs) + [0] * (bound + 1 - len(self.coeffs))
        return Polynomial(self.p, padded[::-1])

    def compose(self, other: "Polynomial") -> "Polynomial":
        o = self._coerce(other)
        result = Polynomial.zero(self.p)
        for c in reversed(self.coeffs):
            result = result * o + c
        return result

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def valuation_at(self, pi: "Polynomial"):
        """Multiplicity of the (nonconstant) factor pi; inf for the zero polynomial."""
        if pi.is_zero or pi.degree < 1:
            raise ValueError("valuation requires a nonconstant polynomial")
        if self.is_zero:
            return math.inf
        v = 0
        f = self
        while True:
            q, r = divmod(f, pi)
            if not r.is_zero:
                return v
            v += 1
            f = q

    def pth_root(self) -> "Polynomial":
        """The p-th root of a polynomial whose derivative vanishes.

        Over F_p the coefficients are their own p-th roots, so this just
        contracts exponents by p.
        """
        if any(c and k % self.p for k, c in enumerate(self.coeffs)):
            raise ValueError("not a p-th power")
        return Polynomial(self.p, self.coeffs[:: self.p])

    # -- comparisons and display --------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.p, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def sort_key(self):
        return (len(self.coeffs), self.coeffs)

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                var = "t" if k == 1 else f"t^{k}"
                terms.append(head + var)
        return " + ".join(terms)

    def __repr__(self):
        return f"Polynomial(F_{self.p}: {self})"


def powmod(base: Polynomial, e: int, modulus: Polynomial) -> Polynomial:
    """base**e reduced mod modulus, by repeated squaring."""
    result = Polynomial.one(base.p)
    base = base % modulus
    while e:
        if e & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return result


def ext_gcd(a: Polynomial, b: Polynomial):
    """Extended gcd: returns (g, u, v) with g = u*a + v*b, g monic."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = Polynomial.one(p), Polynomial.zero(p)
    t0, t1 = Polynomial.zero(p), Polynomial.one(p)
    while not r1.is_zero:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    lc_inv = pow(r0.leading, -1, p)
    return r0 * lc_inv, s0 * lc_inv, t0 * lc_inv


def is_irreducible(f: Polynomial) -> bool:
    """Rabin irreducibility test over F_p."""
    d = f.degree
    if d is NEG_INF or d < 1:
        return False
    if d == 1:
        return True
    f = f.monic()
    p = f.p
    x = Polynomial.t(p)
    # x^(p^k) mod f for k = 1..d, computed incrementally
    frob = [x % f]
    h = frob[0]
    for _ in range(d):
        h = powmod(h, p, f)
        frob.append(h)
    if frob[d] != x % f:
        return False
    for r in _prime_divisors(d):
        g = f.gcd(frob[d // r] - x)
        if g.degree != 0:
            return False
    return True


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """F_{p^d} presented as F_p[x]/(pi) for a fixed monic irreducible pi.

    d = 1 uses pi = x, so elements are plain residues mod p.  The modulus
    is checked for irreducibility at construction.
    """

    __slots__ = ("p", "modulus", "degree", "order")

    def __init__(self, p: int, modulus: Polynomial):
        if modulus.p != p:
            raise ValueError("modulus characteristic mismatch")
        if not modulus.is_monic or not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus} is not monic irreducible over F_{p}")
        self.p = p
        self.modulus = modulus
        self.degree = int(modulus.degree)
        self.order = p ** self.degree

    @classmethod
    def prime_field(cls, p: int) -> "FiniteField":
        return cls(p, Polynomial.t(p))

    @classmethod
    def extension(cls, p: int, d: int) -> "FiniteField":
        """F_{p^d} with the lexicographically smallest monic irreducible modulus.

        Candidates x^d + sum c_i x^i are scanned with (c_0, ..., c_{d-1})
        running through base-p digit order, so the choice is reproducible.
        """
        if d < 1:
            raise ValueError("extension degree must be >= 1")
        if d == 1:
            return cls.prime_field(p)
        for n in range(p**d):
            digits = []
            m = n
            for _ in range(d):
                digits.append(m % p)
                m //= p
            cand = Polynomial(p, digits + [1])
            if is_irreducible(cand):
                return cls(p, cand)
        raise AssertionError("no irreducible polynomial found")  # pragma: no cover

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element from a different field")
            return value
        if isinstance(value, int):
            value = Polynomial.constant(self.p, value)
        if isinstance(value, (list, tuple)):
            value = Polynomial(self.p, value)
        if not isinstance(value, Polynomial):
            raise TypeError(f"cannot coerce {value!r} into {self!r}")
        rep = value % self.modulus
        coeffs = list(rep.coeffs) + [0] * (self.degree - len(rep.coeffs))
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.degree)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    def element_from_index(self, i: int) -> "FieldElement":
        """The i-th element in base-p digit order, 0 <= i < order."""
        digits = []
        for _ in range(self.degree):
            digits.append(i % self.p)
            i //= self.p
        return FieldElement(self, tuple(digits))

    def elements(self):
        for i in range(self.order):
            yield self.element_from_index(i)

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return self.p == other.p and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.degree == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.degree} = F_{self.p}[x]/({self.modulus})"


class FieldElement:
    """An element of a FiniteField, stored as its reduced representative."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.field.p, self.coeffs)

    def lift(self) -> Polynomial:
        """The obvious section to F_p[t]: the representative of degree < d."""
        return Polynomial(self.field.p, self.coeffs)

    def value(self) -> int:
        """Integer value for prime-field elements."""
        if self.field.degree != 1:
            raise ValueError("value() only applies to prime-field elements")
        return self.coeffs[0]

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = (self.as_polynomial() * o.as_polynomial()) % self.field.modulus
        return self.field.element(prod)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        g, u, _ = ext_gcd(self.as_polynomial(), self.field.modulus)
        if g.degree != 0:
            raise AssertionError("modulus not irreducible")  # pragma: no cover
        return self.field.element(u)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def pth_root(self) -> "FieldElement":
        """The unique p-th root (finite fields are perfect): a^(p^(d-1))."""
        d = self.field.degree
        return self ** (self.field.p ** (d - 1))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        if self.field.degree == 1:
            return str(self.coeffs[0])
        return str(self.as_polynomial()).replace("t", "x").replace(" ", "")

    def __repr__(self):
        return f"FieldElement({self} in {self.field!r})"
