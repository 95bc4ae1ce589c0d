"""Factorisation of rational primes in Z[zeta] and associate normalisation.

A rational prime p behaves in one of three ways here: p = 5 ramifies as the
fourth power of lambda; p = 1 (mod 5) splits into four conjugate primes
pi_1..pi_4 with pi_{1+j} = tau^j(pi_1); p = +-2 (mod 5) stays inert.  Primes
p = 4 (mod 5) split into two degree-2 factors, which no caller here needs,
so they are rejected outright.

Conventions fixed by this module (recorded in reports):
  - pi_1 is cut out by the smallest root r of X^4+X^3+X^2+X+1 mod p, via
    gcd(p, zeta - r); then pi_3 = tau^2(pi_1) and the pairing used by the
    capitulation tables holds exactly, not just up to units.
  - the unit group of Z[zeta] is (+-zeta^a) * (1+zeta)^t; 1+zeta has norm 1
    and generates the units modulo torsion, so scanning a in 0..4, t in
    -B..B, both signs, covers every associate class the search bound allows.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .cyclotomic import (
    CycInt,
    LAMBDA,
    ONE,
    ZETA,
    congruent_mod_lambda_pow,
    gcd,
    lambda_expand,
)


class UnsupportedPrimeError(ValueError):
    """Raised for primes whose splitting type is outside the supported cases."""


class AssociateNotFound(Exception):
    """The bounded associate search failed.

    ``proven_impossible`` distinguishes a finished decision procedure (the
    full image of the unit group modulo lambda^k was enumerated and no
    element works) from exhaustion of the scan bound.
    """

    def __init__(self, message: str, *, proven_impossible: bool) -> None:
        super().__init__(message)
        self.proven_impossible = proven_impossible


class PrimeKind(Enum):
    SPLIT = "split"
    INERT = "inert"
    LAMBDA = "lambda"


@dataclass(frozen=True)
class PrimeElement:
    """A prime of Z[zeta] with its Galois label.

    ``label`` is 1..4 for the split conjugates, 5 for an inert prime and 0
    for lambda.  ``root`` is the residue-field image of zeta (split only).
    """

    value: CycInt
    kind: PrimeKind
    label: int
    rational_below: int
    root: int | None = None


@dataclass(frozen=True)
class SplittingData:
    prime: int
    factors: tuple[PrimeElement, ...]
    root: int | None


def is_rational_prime(n: int) -> bool:
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


def _factor_into_primes(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def smallest_primitive_root(p: int) -> int:
    qs = _factor_into_primes(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ArithmeticError(f"no primitive root found for {p}")


def fifth_roots_of_unity(p: int) -> list[int]:
    """The four primitive fifth roots of unity in F_p, ascending (p = 1 mod 5)."""
    g = smallest_primitive_root(p)
    x = pow(g, (p - 1) // 5, p)
    return sorted(pow(x, i, p) for i in range(1, 5))


def factor_rational_prime(p: int) -> SplittingData:
    """Factor p in Z[zeta] and label the factors.

    Split case: pi_1 = gcd(p, zeta - r) for the smallest root r, and
    pi_{1+j} = tau^j(pi_1).  The stored residue root of pi_{1+j} is
    r^(inverse of 2^j mod 5), so each factor carries its own evaluation map.
    """
    if not is_rational_prime(p):
        raise ValueError(f"{p} is not a rational prime")
    if p == 5:
        lam = PrimeElement(LAMBDA, PrimeKind.LAMBDA, 0, 5)
        return SplittingData(5, (lam,), None)
    m = p % 5
    if m in (2, 3):
        inert = PrimeElement(CycInt(p), PrimeKind.INERT, 5, p)
        return SplittingData(p, (inert,), None)
    if m == 4:
        raise UnsupportedPrimeError(
            f"p = {p} = 4 (mod 5) splits into degree-2 factors; unsupported"
        )
    r = fifth_roots_of_unity(p)[0]
    pi1 = gcd(CycInt(p), ZETA - CycInt(r))
    if pi1.norm() != p:
        raise ArithmeticError(f"gcd did not produce a degree-1 prime above {p}")
    factors = []
    for j in range(4):
        inv = pow(pow(2, j, 5), -1, 5)
        factors.append(
            PrimeElement(pi1.galois(j), PrimeKind.SPLIT, j + 1, p, pow(r, inv, p))
        )
    return SplittingData(p, tuple(factors), r)


def residue_field_reduce(x: CycInt, pi: PrimeElement) -> int:
    """Evaluate x under zeta -> root in F_p; the kernel is exactly (pi)."""
    if pi.kind is not PrimeKind.SPLIT or pi.root is None:
        raise UnsupportedPrimeError("residue reduction needs a split prime with a root")
    p = pi.rational_below
    r = pi.root
    c = x.coords
    return (c[0] + c[1] * r + c[2] * r * r + c[3] * r * r * r) % p


# --- unit search ---------------------------------------------------------

ONE_PLUS_ZETA = ONE + ZETA
_INV_ONE_PLUS_ZETA = (
    ONE_PLUS_ZETA.galois(1) * ONE_PLUS_ZETA.galois(2) * ONE_PLUS_ZETA.galois(3)
)

DEFAULT_UNIT_BOUND = 8


@dataclass(frozen=True)
class UnitWord:
    """A unit written as sign * zeta^zeta_exp * (1+zeta)^fund_exp."""

    zeta_exp: int
    fund_exp: int
    sign: int

    def value(self) -> CycInt:
        base = _INV_ONE_PLUS_ZETA if self.fund_exp < 0 else ONE_PLUS_ZETA
        u = ONE
        for _ in range(abs(self.fund_exp)):
            u = u * base
        u = u * (ZETA ** self.zeta_exp)
        return u if self.sign > 0 else -u

    def render(self) -> str:
        parts = [] if self.sign > 0 else ["-1"]
        if self.zeta_exp:
            parts.append(f"zeta^{self.zeta_exp}" if self.zeta_exp > 1 else "zeta")
        if self.fund_exp:
            parts.append(f"(1+zeta)^{self.fund_exp}")
        return "*".join(parts) if parts else "1"


def iter_units(bound: int = DEFAULT_UNIT_BOUND) -> Iterator[tuple[UnitWord, CycInt]]:
    """Scan units +-zeta^a (1+zeta)^t: a ascending, t by absolute value, then sign."""
    t_order = [0]
    for t in range(1, bound + 1):
        t_order.append(t)
        t_order.append(-t)
    fund_powers = {0: ONE}
    pos = neg = ONE
    for t in range(1, bound + 1):
        pos = pos * ONE_PLUS_ZETA
        neg = neg * _INV_ONE_PLUS_ZETA
        fund_powers[t] = pos
        fund_powers[-t] = neg
    for a in range(5):
        za = ZETA ** a
        for t in t_order:
            base = za * fund_powers[t]
            for sign in (1, -1):
                yield UnitWord(a, t, sign), (base if sign > 0 else -base)


def unit_residues_mod_lambda_pow(k: int) -> dict[tuple[int, ...], CycInt]:
    """The full image of the unit group in (Z[zeta]/lambda^k)^*.

    Computed by closure under the generators; the keys are canonical digit
    tuples, the values small representatives.  Used to turn a failed bounded
    search into a finished impossibility proof.
    """
    gens = (-ONE, ZETA, ONE_PLUS_ZETA, _INV_ONE_PLUS_ZETA)
    seed = lambda_expand(ONE, k)
    seen: dict[tuple[int, ...], CycInt] = {seed.digits: ONE}
    frontier = [ONE]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                key = lambda_expand(y, k).digits
                if key not in seen:
                    rep = lambda_expand(y, k).reassemble()
                    seen[key] = rep
                    nxt.append(rep)
        frontier = nxt
    return seen


def _coerce_targets(targets: Iterable[int | CycInt]) -> list[CycInt]:
    out = []
    for t in targets:
        out.append(t if isinstance(t, CycInt) else CycInt(t))
    if not out:
        raise ValueError("empty target set")
    return out


@dataclass(frozen=True)
class AssociateNormalization:
    unit: CycInt
    unit_word: UnitWord
    normalized: CycInt
    residue: CycInt


def normalize_associate(
    pi: PrimeElement,
    k: int,
    targets: Sequence[int | CycInt],
    bound: int = DEFAULT_UNIT_BOUND,
) -> AssociateNormalization:
    """Find a unit u with u*pi congruent to one of ``targets`` mod lambda^k.

    Scans the bounded unit family in the fixed order and returns the first
    hit.  On failure the full unit-image subgroup mod lambda^k is enumerated:
    if no subgroup element works either, the congruence is impossible for
    every associate, and AssociateNotFound carries proven_impossible=True.
    """
    if pi.kind is not PrimeKind.SPLIT:
        raise UnsupportedPrimeError("associate normalisation is defined for split primes")
    if not 1 <= k <= 5:
        raise ValueError("modulus exponent must be in 1..5")
    target_vals = _coerce_targets(targets)
    for word, u in iter_units(bound):
        v = u * pi.value
        for t in target_vals:
            if congruent_mod_lambda_pow(v, t, k):
                return AssociateNormalization(u, word, v, t)
    for urep in unit_residues_mod_lambda_pow(k).values():
        v = urep * pi.value
        for t in target_vals:
            if congruent_mod_lambda_pow(v, t, k):
                raise AssociateNotFound(
                    f"a unit exists mod lambda^{k} but lies outside the scan bound {bound}",
                    proven_impossible=False,
                )
    raise AssociateNotFound(
        f"no associate of the prime above {pi.rational_below} meets the congruence"
        f" mod lambda^{k}; the full unit image was exhausted",
        proven_impossible=True,
    )
