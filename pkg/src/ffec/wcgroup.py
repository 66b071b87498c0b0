"""Desk-scale finite abelian groups: element orders, linear independence
over Z/nZ, and the pigeonhole extraction of order-n images under a
homomorphism with finite kernel.

Groups are given by invariant factors d_1 | d_2 | ... | d_k; elements are
plain integer tuples reduced componentwise.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class FiniteAbelianGroup:
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = self.invariant_factors
        if not fs or any(d < 1 for d in fs):
            raise ValueError("invariant factors must be positive")
        for a, b in zip(fs, fs[1:]):
            if b % a:
                raise ValueError(f"invariant factors must form a divisor chain, got {fs}")

    @classmethod
    def from_orders(cls, orders) -> "FiniteAbelianGroup":
        """Normal form of a direct sum of cyclic groups of the given orders."""
        primary: dict[int, list[int]] = {}
        for n in orders:
            if n < 1:
                raise ValueError("cyclic orders must be positive")
            d = 2
            while d * d <= n:
                if n % d == 0:
                    e = 0
                    while n % d == 0:
                        n //= d
                        e += 1
                    primary.setdefault(d, []).append(d**e)
                d += 1
            if n > 1:
                primary.setdefault(n, []).append(n)
        if not primary:
            return cls((1,))
        width = max(len(v) for v in primary.values())
        factors = []
        for i in range(width):
            f = 1
            for q, powers in primary.items():
                powers_sorted = sorted(powers, reverse=True)
                if i < len(powers_sorted):
                    f *= powers_sorted[i]
            factors.append(f)
        return cls(tuple(sorted(factors)))

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.invariant_factors)

    def element(self, coords) -> tuple[int, ...]:
        coords = tuple(coords)
        if len(coords) != len(self.invariant_factors):
            raise ValueError("coordinate length mismatch")
        return tuple(c % d for c, d in zip(coords, self.invariant_factors))

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.invariant_factors))

    def neg(self, a) -> tuple[int, ...]:
        return tuple((-x) % d for x, d in zip(a, self.invariant_factors))

    def smul(self, k: int, a) -> tuple[int, ...]:
        return tuple((k * x) % d for x, d in zip(a, self.invariant_factors))

    def elements(self):
        for coords in itertools.product(*[range(d) for d in self.invariant_factors]):
            yield coords

    def subgroup_generated(self, gens) -> set:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.add(cur, g)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return seen


def element_order(group: FiniteAbelianGroup, g) -> int:
    order = 1
    for x, d in zip(g, group.invariant_factors):
        order = math.lcm(order, d // math.gcd(d, x))
    return order


def period_of_sum(group: FiniteAbelianGroup, elements) -> int:
    """Order of a sum of elements with pairwise coprime orders.

    Equals the product of the individual orders; the pairwise-coprimality
    precondition is checked.
    """
    elements = list(elements)
    orders = [element_order(group, g) for g in elements]
    for i in range(len(orders)):
        for j in range(i + 1, len(orders)):
            if math.gcd(orders[i], orders[j]) != 1:
                raise ValueError(f"orders {orders[i]} and {orders[j]} are not coprime")
    total = group.identity
    for g in elements:
        total = group.add(total, g)
    return element_order(group, total)


def is_r_li(group: FiniteAbelianGroup, subset, n: int, r: int) -> bool:
    """Whether every r-element subset is linearly independent over Z/nZ.

    A subset {e_1, ..., e_r} is dependent when some (a_1, ..., a_r) not all
    zero mod n kills it; equivalently the r elements generate a subgroup of
    order n^r.  Every element must be n-torsion.
    """
    subset = list(subset)
    for g in subset:
        if group.smul(n, g) != group.identity:
            raise ValueError(f"element {g} is not killed by n={n}")
    for combo in itertools.combinations(subset, r):
        for coeffs in itertools.product(range(n), repeat=r):
            if not any(coeffs):
                continue
            total = group.identity
            for a, g in zip(coeffs, combo):
                total = group.add(total, group.smul(a, g))
            if total == group.identity:
                return False
    return True


@dataclass(frozen=True, slots=True)
class Homomorphism:
    """A map between finite abelian groups, given by generator images."""

    source: FiniteAbelianGroup
    target: FiniteAbelianGroup
    images: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.images) != len(self.source.invariant_factors):
            raise ValueError("one image per source generator is required")
        images = tuple(self.target.element(im) for im in self.images)
        object.__setattr__(self, "images", images)
        for d, im in zip(self.source.invariant_factors, images):
            if self.target.smul(d, im) != self.target.identity:
                raise ValueError(f"image {im} has order not dividing the generator order {d}")

    def apply(self, g) -> tuple[int, ...]:
        out = self.target.identity
        for x, im in zip(g, self.images):
            out = self.target.add(out, self.target.smul(x, im))
        return out

    def kernel(self) -> list:
        return [g for g in self.source.elements() if self.apply(g) == self.target.identity]


def lilemma_extract(hom: Homomorphism, subset, n: int) -> list:
    """Given a 2-LI over Z/nZ subset, keep the elements whose images have
    order exactly n.

    The pigeonhole argument guarantees that among any #ker+1 elements at
    least one survives, so at most #ker elements are dropped.
    """
    subset = list(subset)
    if not is_r_li(hom.source, subset, n, 2):
        raise ValueError("subset is not 2-LI over Z/nZ")
    kernel_size = len(hom.kernel())
    kept = [g for g in subset if element_order(hom.target, hom.apply(g)) == n]
    dropped = len(subset) - len(kept)
    if dropped > kernel_size:  # pragma: no cover
        raise AssertionError("pigeonhole bound violated: more than #ker elements dropped")
    return kept


__all__ = [
    "FiniteAbelianGroup",
    "Homomorphism",
    "element_order",
    "is_r_li",
    "lilemma_extract",
    "period_of_sum",
]
