"""Factorization in F_p[t] and root finding over F_{p^d}.

The pipeline is squarefree decomposition (with p-th power extraction when
the derivative vanishes), then distinct-degree splitting, then equal-degree
splitting.  Splitting elements are enumerated deterministically instead of
sampled, so factorizations are reproducible bit for bit.
"""

from __future__ import annotations

import math

from .gfpoly import FieldElement, FiniteField, Polynomial, is_irreducible, powmod

EXHAUSTIVE_ROOT_LIMIT = 10_000


def squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Write a monic f as a product of pairwise-coprime squarefree parts.

    Returns [(g, m), ...] with f = prod g^m, the g monic squarefree and
    pairwise coprime.  Factors whose multiplicity is divisible by p are
    recovered through the p-th root of the derivative-free part.
    """
    if not f.is_monic:
        raise ValueError("squarefree decomposition needs a monic polynomial")
    p = f.p
    out: list[tuple[Polynomial, int]] = []
    if f.degree < 1:
        return out
    d = f.derivative()
    if d.is_zero:
        for g, m in squarefree_decomposition(f.pth_root()):
            out.append((g, m * p))
        return out
    c = f.gcd(d)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        for g, m in squarefree_decomposition(c.pth_root()):
            out.append((g, m * p))
    return out


def distinct_degree_factorization(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Split a monic squarefree f into products of equal-degree irreducibles.

    Returns [(g, k), ...] where g is the product of all irreducible factors
    of degree exactly k.
    """
    p = f.p
    out = []
    x = Polynomial.t(p)
    h = x % f
    k = 0
    g = f
    while g.degree >= 2 * (k + 1):
        k += 1
        h = powmod(h, p, g)
        d = g.gcd(h - x)
        if d.degree > 0:
            out.append((d, k))
            g = g // d
            h = h % g
    if g.degree > 0:
        out.append((g, int(g.degree)))
    return out


def _poly_from_index(p: int, idx: int, max_len: int) -> Polynomial:
    digits = []
    while idx:
        digits.append(idx % p)
        idx //= p
    if len(digits) > max_len:
        raise ValueError("splitter enumeration exhausted")
    return Polynomial(p, digits)


def _split_once(g: Polynomial, k: int) -> Polynomial:
    """Find a proper monic factor of g, a product of >= 2 irreducibles of degree k."""
    p = g.p
    deg = int(g.degree)
    e = (p**k - 1) // 2
    idx = p  # skip constants: they never separate the factors
    while True:
        u = _poly_from_index(p, idx, deg)
        idx += 1
        d = g.gcd(u)
        if 0 < d.degree < deg:
            return d
        if p == 2:
            # additive splitting via the trace to F_2
            tr = Polynomial.zero(p)
            v = u % g
            for _ in range(k):
                tr = (tr + v) % g
                v = (v * v) % g
            d = g.gcd(tr)
        else:
            w = powmod(u, e, g)
            d = g.gcd(w - 1)
        if 0 < d.degree < deg:
            return d


def equal_degree_factorization(g: Polynomial, k: int) -> list[Polynomial]:
    """Fully split a monic product of distinct irreducibles of degree k."""
    if g.degree == k:
        return [g.monic()]
    d = _split_once(g, k)
    return equal_degree_factorization(d, k) + equal_degree_factorization(g // d, k)


def factorize(f: Polynomial) -> tuple[int, list[tuple[Polynomial, int]]]:
    """Factor f into unit * prod (monic irreducible)^multiplicity.

    Returns (unit, factors) with factors sorted by (degree, coefficients).
    Raises on the zero polynomial.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    unit = f.leading
    monic = f.monic()
    factors: list[tuple[Polynomial, int]] = []
    for part, mult in squarefree_decomposition(monic):
        for prod, k in distinct_degree_factorization(part):
            for irr in equal_degree_factorization(prod, k):
                factors.append((irr, mult))
    factors.sort(key=lambda fm: fm[0].sort_key())
    check = Polynomial.constant(f.p, unit)
    for g, m in factors:
        check = check * g**m
    if check != f:
        raise AssertionError("factorization does not multiply back")  # pragma: no cover
    return unit, factors


# ---------------------------------------------------------------------------
# dense polynomials with coefficients in an extension field
# ---------------------------------------------------------------------------


def ff_trim(coeffs: list[FieldElement]) -> list[FieldElement]:
    out = list(coeffs)
    while out and out[-1].is_zero:
        out.pop()
    return out


def ff_deg(coeffs: list[FieldElement]):
    return len(coeffs) - 1 if coeffs else -math.inf


def ff_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return ff_trim(out)


def ff_neg(a):
    return [-c for c in a]


def ff_sub(a, b):
    return ff_add(a, ff_neg(b))


def ff_mul(a, b, field: FiniteField):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero:
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return ff_trim(out)


def ff_divmod(a, b, field: FiniteField):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    rem = list(a)
    db = len(b) - 1
    inv = b[-1].inverse()
    q = [field.zero] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c.is_zero:
            continue
        factor = c * inv
        q[i - db] = factor
        for j, cb in enumerate(b):
            rem[i - db + j] = rem[i - db + j] - factor * cb
    return ff_trim(q), ff_trim(rem[:db])


def ff_monic(a, field: FiniteField):
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def ff_gcd(a, b, field: FiniteField):
    a, b = ff_trim(list(a)), ff_trim(list(b))
    while b:
        a, b = b, ff_divmod(a, b, field)[1]
    return ff_monic(a, field)


def ff_powmod(base, e: int, modulus, field: FiniteField):
    result = [field.one]
    base = ff_divmod(base, modulus, field)[1]
    while e:
        if e & 1:
            result = ff_divmod(ff_mul(result, base, field), modulus, field)[1]
        base = ff_divmod(ff_mul(base, base, field), modulus, field)[1]
        e >>= 1
    return result


def ff_eval(a, x: FieldElement, field: FiniteField) -> FieldElement:
    acc = field.zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


def ff_derivative(a, field: FiniteField):
    return ff_trim([k * c for k, c in enumerate(a)][1:])


def base_poly_in_field(f: Polynomial, field: FiniteField):
    """View an F_p[t] polynomial as a polynomial with coefficients in field."""
    return ff_trim([field.element(c) for c in f.coeffs])


def _linear_probes(field: FiniteField):
    """Deterministic stream of degree-one probes b*x + c, b != 0."""
    for s in range(1, 2 * field.order):
        for i in range(1, min(s, field.order - 1) + 1):
            j = s - i
            if j >= field.order:
                continue
            yield [field.element_from_index(j), field.element_from_index(i)]


def _root_split(g, field: FiniteField) -> list[FieldElement]:
    """Distinct roots of g = prod (x - r_i), pairwise distinct r_i."""
    if not g:
        raise AssertionError("zero polynomial in root splitting")  # pragma: no cover
    if len(g) == 1:
        return []
    if len(g) == 2:
        return [-(g[0] * g[1].inverse())]
    q = field.order
    for u in _linear_probes(field):
        if field.p == 2:
            tr = []
            v = ff_divmod(u, g, field)[1]
            for _ in range(field.degree):
                tr = ff_add(tr, v)
                v = ff_divmod(ff_mul(v, v, field), g, field)[1]
            d = ff_gcd(tr, g, field)
        else:
            w = ff_powmod(u, (q - 1) // 2, g, field)
            d = ff_gcd(ff_sub(w, [field.one]), g, field)
        if 0 < len(d) - 1 < len(g) - 1:
            rest = ff_divmod(g, d, field)[0]
            return _root_split(d, field) + _root_split(rest, field)
    raise AssertionError("root splitting exhausted probes")  # pragma: no cover


def roots_in_field(coeffs, field: FiniteField | None = None) -> list[tuple[FieldElement, int]]:
    """All roots of f in its coefficient field, with multiplicities.

    Small fields are searched exhaustively; larger ones go through
    gcd(f, x^q - x) followed by equal-degree splitting of the linear part.
    """
    cs = ff_trim(list(coeffs))
    if not cs:
        raise ValueError("zero polynomial has every element as a root")
    if field is None:
        field = cs[0].field
    if len(cs) == 1:
        return []
    roots: list[FieldElement] = []
    if field.order <= EXHAUSTIVE_ROOT_LIMIT:
        for e in field.elements():
            if ff_eval(cs, e, field).is_zero:
                roots.append(e)
    else:
        f = ff_monic(cs, field)
        xq = ff_powmod([field.zero, field.one], field.order, f, field)
        lin = ff_gcd(ff_sub(xq, [field.zero, field.one]), f, field)
        roots = _root_split(lin, field)
    out = []
    for r in sorted(roots, key=lambda e: e.coeffs[::-1]):
        mult = 0
        g = cs
        while True:
            q, rem = ff_divmod(g, [-r, field.one], field)
            if rem:
                break
            mult += 1
            g = q
        out.append((r, mult))
    return out


__all__ = [
    "EXHAUSTIVE_ROOT_LIMIT",
    "base_poly_in_field",
    "distinct_degree_factorization",
    "equal_degree_factorization",
    "factorize",
    "ff_add",
    "ff_deg",
    "ff_derivative",
    "ff_divmod",
    "ff_eval",
    "ff_gcd",
    "ff_monic",
    "ff_mul",
    "ff_neg",
    "ff_powmod",
    "ff_sub",
    "ff_trim",
    "is_irreducible",
    "roots_in_field",
    "squarefree_decomposition",
]
