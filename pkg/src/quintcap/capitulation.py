"""Genus generators, the six unramified quintic extensions, their subgroup
correspondence, and the enumeration of possible capitulation types.

Everything here is formal linear algebra over F_5.  An extension of the
degree-20 base field is described by a radical word: exponents of pi_1,
pi_3 and an auxiliary symbol w, which is the inert prime (p^e*q shape) or
lambda (5^e*p shape) and is absent for the p^e shape.  Two radical words
describe the same extension exactly when one is a nonzero scalar multiple
of the other, so RadicalWord compares projectively.  Ideal-class words
(ClassWord) are genuine group elements and compare exactly.

The class group is (5,5), generated by a tau^2-fixed class A and a
tau^2-inverted class X.  Its six order-5 subgroups H_1..H_6 correspond to
the six extensions K_1..K_6; H_1 = <A>, H_6 = <X>.  The capitulation type
(i_1,...,i_6) records, for each K_j, which subgroup's classes die in K_j
(0 meaning all of them).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .classify import RadicandClass, RadicandForm
from .cyclotomic import CycInt, LAMBDA, congruent_mod_lambda_pow, div_lambda_exact
from .primes import (
    DEFAULT_UNIT_BOUND,
    PrimeElement,
    PrimeKind,
    UnitWord,
    UnsupportedPrimeError,
    iter_units,
    unit_residues_mod_lambda_pow,
)


class WSymbol(Enum):
    """How the auxiliary base symbol is realised per radicand shape."""

    PI5 = ("pi5", "P5")
    LAMBDA = ("lambda", "I")

    @property
    def radical_name(self) -> str:
        return self.value[0]

    @property
    def ideal_name(self) -> str:
        return self.value[1]


def w_symbol_for(rc: RadicandClass) -> WSymbol | None:
    if rc.form is RadicandForm.PRIME_POWER_TIMES_Q:
        return WSymbol.PI5
    if rc.form is RadicandForm.FIVE_POWER_TIMES_P:
        return WSymbol.LAMBDA
    if rc.form is RadicandForm.PRIME_POWER:
        return None
    raise ValueError("unclassified radicand has no extension data")


def _render_word(e1: int, e3: int, ew: int, names: tuple[str, str, str]) -> str:
    parts = []
    for e, name in zip((e1, e3, ew), names):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _proj_key(e1: int, e3: int, ew: int) -> tuple[int, int, int]:
    for lead in (e1, e3, ew):
        if lead:
            inv = pow(lead, -1, 5)
            return ((e1 * inv) % 5, (e3 * inv) % 5, (ew * inv) % 5)
    return (0, 0, 0)


@dataclass(frozen=True)
class RadicalWord:
    """Formal fifth-root generator pi_1^e1 * pi_3^e3 * w^ew, compared projectively."""

    e1: int
    e3: int
    ew: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "e1", self.e1 % 5)
        object.__setattr__(self, "e3", self.e3 % 5)
        object.__setattr__(self, "ew", self.ew % 5)

    def is_zero(self) -> bool:
        return self.e1 == self.e3 == self.ew == 0

    def proj_key(self) -> tuple[int, int, int]:
        return _proj_key(self.e1, self.e3, self.ew)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RadicalWord):
            return self.proj_key() == other.proj_key()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.proj_key())

    def combine(self, other: "RadicalWord", times: int = 1) -> "RadicalWord":
        return RadicalWord(
            self.e1 + times * other.e1,
            self.e3 + times * other.e3,
            self.ew + times * other.ew,
        )

    def exponents(self) -> dict[str, int]:
        return {"pi1": self.e1, "pi3": self.e3, "w": self.ew}

    def render(self, w: WSymbol | None) -> str:
        wname = w.radical_name if w else "w"
        return _render_word(self.e1, self.e3, self.ew, ("pi1", "pi3", wname))


@dataclass(frozen=True)
class ClassWord:
    """Ideal-class word P1^e1 * P3^e3 * Pw^ew; a group element, compared exactly."""

    e1: int
    e3: int
    ew: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "e1", self.e1 % 5)
        object.__setattr__(self, "e3", self.e3 % 5)
        object.__setattr__(self, "ew", self.ew % 5)

    def is_zero(self) -> bool:
        return self.e1 == self.e3 == self.ew == 0

    def generates_same_subgroup(self, other: "ClassWord") -> bool:
        return _proj_key(self.e1, self.e3, self.ew) == _proj_key(
            other.e1, other.e3, other.ew
        )

    def power(self, k: int) -> "ClassWord":
        return ClassWord(self.e1 * k, self.e3 * k, self.ew * k)

    def times(self, other: "ClassWord") -> "ClassWord":
        return ClassWord(self.e1 + other.e1, self.e3 + other.e3, self.ew + other.ew)

    def exponents(self) -> dict[str, int]:
        return {"P1": self.e1, "P3": self.e3, "Pw": self.ew}

    def render(self, w: WSymbol | None) -> str:
        wname = w.ideal_name if w else "Pw"
        return "[" + _render_word(self.e1, self.e3, self.ew, ("P1", "P3", wname)) + "]"


class Character(Enum):
    PLUS = "plus"
    MINUS = "minus"
    MIXED = "mixed"


@dataclass(frozen=True)
class SubgroupDescriptor:
    index: int
    generator: ClassWord
    character: Character

    @property
    def label(self) -> str:
        return f"H{self.index}"


@dataclass(frozen=True)
class ExtensionDescriptor:
    index: int
    candidates: tuple[RadicalWord, ...]
    resolved: bool

    @property
    def label(self) -> str:
        return f"K{self.index}"

    def primary(self) -> RadicalWord:
        return self.candidates[0]


@dataclass(frozen=True)
class CapitulationType:
    """The 6-tuple (i_1,...,i_6); entry 0 means every class capitulates."""

    entries: tuple[int, int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.entries) != 6 or any(not 0 <= i <= 6 for i in self.entries):
            raise ValueError("capitulation type needs six entries in 0..6")

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self) -> str:
        return "(" + ",".join(str(i) for i in self.entries) + ")"


def satisfies_pair_parity(ct: CapitulationType) -> bool:
    """Positions (2,5) and (3,4) are each both zero or both nonzero."""
    e = ct.entries
    return ((e[1] == 0) == (e[4] == 0)) and ((e[2] == 0) == (e[3] == 0))


def _require_h1(rc: RadicandClass, h1: int | None) -> int:
    if h1 is None:
        raise ValueError(f"h1 is required for the {rc.form.value} shape")
    if not 1 <= h1 % 5 <= 4:
        raise ValueError("h1 must be nonzero mod 5")
    return h1 % 5


def hilbert_class_field_generators(
    rc: RadicandClass, h1: int | None = None
) -> tuple[RadicalWord, RadicalWord]:
    """The two radical generators (x1, x2) of the genus field over the base.

    p^e shape: (pi_1, pi_3).  Other shapes: (pi_1 * w^h1, pi_1 * pi_3^4),
    with w = pi_5 or lambda respectively; the pi_3-exponent 4 is the fixed
    labelling convention used by every table downstream.
    """
    if rc.form is RadicandForm.NO_MATCH:
        raise ValueError("no generators for an unclassified radicand")
    if rc.form is RadicandForm.PRIME_POWER:
        return RadicalWord(1, 0, 0), RadicalWord(0, 1, 0)
    h = _require_h1(rc, h1)
    return RadicalWord(1, 0, h), RadicalWord(1, 4, 0)


def six_extensions(x1: RadicalWord, x2: RadicalWord) -> list[RadicalWord]:
    """The six projective classes x1, x2, x1*x2, ..., x1*x2^4.

    Combined words are rescaled so their first nonzero exponent is 1; the
    projective equality of RadicalWord makes the choice immaterial.
    """
    if x1.is_zero() or x2.is_zero() or x1 == x2:
        raise ValueError("generators must be projectively independent")
    out = [x1, x2]
    for j in range(1, 5):
        combined = x1.combine(x2, j)
        lead = _proj_key(combined.e1, combined.e3, combined.ew)
        out.append(RadicalWord(*lead))
    return out


def tau2_orbit(word: RadicalWord) -> RadicalWord:
    """The image of a radical word under tau^2: swap the pi_1, pi_3 exponents."""
    return RadicalWord(word.e3, word.e1, word.ew)


_CASE1_SUBGROUPS = (
    (1, (1, 1, 0), Character.PLUS),
    (2, (1, 0, 0), Character.MIXED),
    (3, (1, 3, 0), Character.MIXED),
    (4, (1, 2, 0), Character.MIXED),
    (5, (0, 1, 0), Character.MIXED),
    (6, (1, 4, 0), Character.MINUS),
)


def subgroup_table(rc: RadicandClass, h1: int | None = None) -> list[SubgroupDescriptor]:
    """The six labelled order-5 subgroups with their standard generators.

    p^e shape: H1=<[P1P3]>, H2=<[P1]>, H3=<[P1P3^3]>, H4=<[P1P3^2]>,
    H5=<[P3]>, H6=<[P1P3^4]>.  Other shapes carry w-exponents: H1 gains
    Pw^(2*h1), H2..H5 gain Pw^h1, and H6 stays [P1P3^4].
    """
    if rc.form is RadicandForm.NO_MATCH:
        raise ValueError("no subgroup table for an unclassified radicand")
    if rc.form is RadicandForm.PRIME_POWER:
        return [
            SubgroupDescriptor(i, ClassWord(*exps), ch)
            for i, exps, ch in _CASE1_SUBGROUPS
        ]
    h = _require_h1(rc, h1)
    rows = (
        (1, (1, 1, 2 * h), Character.PLUS),
        (2, (1, 0, h), Character.MIXED),
        (3, (2, 4, h), Character.MIXED),
        (4, (4, 2, h), Character.MIXED),
        (5, (0, 1, h), Character.MIXED),
        (6, (1, 4, 0), Character.MINUS),
    )
    return [SubgroupDescriptor(i, ClassWord(*exps), ch) for i, exps, ch in rows]


def subgroup_index(word: ClassWord, table: Iterable[SubgroupDescriptor]) -> int:
    """The label j of the unique H_j whose generator is a power of ``word``."""
    if word.is_zero():
        raise ValueError("the trivial class generates no order-5 subgroup")
    for desc in table:
        if word.generates_same_subgroup(desc.generator):
            return desc.index
    raise ValueError(f"{word!r} lies outside the span of the class-group generators")


def correspondence(
    rc: RadicandClass, symbol_exponent: int | None, h1: int | None = None
) -> list[ExtensionDescriptor]:
    """Assign radical words to K_1..K_6.

    p^e shape: the symbol (pi_1/pi_3) resolves K_2 and K_5 (exponent 0 puts
    K_2 = fifth root of pi_3, otherwise of pi_1); the K_1/K_6 and K_3/K_4
    assignments stay two-candidate.  Other shapes: all six stay
    two-candidate, ordered as the tables state them.
    """
    if rc.form is RadicandForm.NO_MATCH:
        raise ValueError("no correspondence for an unclassified radicand")
    if rc.form is RadicandForm.PRIME_POWER:
        if symbol_exponent is None:
            raise ValueError("the p^e shape needs the (pi_1/pi_3) symbol exponent")
        pi1 = RadicalWord(1, 0, 0)
        pi3 = RadicalWord(0, 1, 0)
        k2, k5 = (pi3, pi1) if symbol_exponent % 5 == 0 else (pi1, pi3)
        return [
            ExtensionDescriptor(1, (RadicalWord(1, 1, 0), RadicalWord(1, 4, 0)), False),
            ExtensionDescriptor(2, (k2,), True),
            ExtensionDescriptor(3, (RadicalWord(1, 2, 0), RadicalWord(1, 3, 0)), False),
            ExtensionDescriptor(4, (RadicalWord(1, 3, 0), RadicalWord(1, 2, 0)), False),
            ExtensionDescriptor(5, (k5,), True),
            ExtensionDescriptor(6, (RadicalWord(1, 4, 0), RadicalWord(1, 1, 0)), False),
        ]
    h = _require_h1(rc, h1)
    x1 = RadicalWord(1, 0, h)
    x2 = RadicalWord(1, 4, 0)
    plus_word = RadicalWord(1, 1, 2 * h)
    k3a, k4a = RadicalWord(2, 4, h), RadicalWord(4, 2, h)
    k5a = RadicalWord(0, 1, h)
    return [
        ExtensionDescriptor(1, (x2, plus_word), False),
        ExtensionDescriptor(2, (x1, k5a), False),
        ExtensionDescriptor(3, (k3a, k4a), False),
        ExtensionDescriptor(4, (k4a, k3a), False),
        ExtensionDescriptor(5, (k5a, x1), False),
        ExtensionDescriptor(6, (plus_word, x2), False),
    ]


def guaranteed_capitulations(
    rc: RadicandClass, h1: int | None = None
) -> dict[RadicalWord, ClassWord]:
    """For each of the six extension words, the class that provably dies there.

    The fifth power of the class word equals the radicand of the extension,
    so extending the ideal makes it principal: the class [P1^a P3^b Pw^c]
    capitulates in the fifth-root field of pi_1^a pi_3^b w^c.
    """
    if rc.form is RadicandForm.NO_MATCH:
        raise ValueError("no capitulation data for an unclassified radicand")
    if rc.form is RadicandForm.PRIME_POWER:
        words = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 2, 0), (1, 3, 0), (1, 4, 0)]
    else:
        h = _require_h1(rc, h1)
        words = [
            (1, 0, h),
            (1, 4, 0),
            (1, 1, 2 * h),
            (2, 4, h),
            (4, 2, h),
            (0, 1, h),
        ]
    return {RadicalWord(*w): ClassWord(*w) for w in words}


# Possible-type tables.  Brace alternatives in the source tables are already
# expanded into separate tuples; order follows the statements.
_CASE1_BASE = (
    (0, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (0, 2, 0, 0, 5, 0),
    (1, 2, 0, 0, 5, 0),
    (0, 0, 3, 4, 0, 0),
    (0, 0, 4, 3, 0, 0),
    (1, 0, 3, 4, 0, 0),
    (1, 0, 4, 3, 0, 0),
    (0, 2, 3, 4, 5, 0),
    (0, 2, 4, 3, 5, 0),
    (1, 2, 3, 4, 5, 0),
    (1, 2, 4, 3, 5, 0),
)

_CASE2_BASE = (
    (0, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (0, 5, 0, 0, 2, 0),
    (0, 2, 0, 0, 5, 0),
    (1, 5, 0, 0, 2, 0),
    (1, 2, 0, 0, 5, 0),
    (0, 5, 4, 3, 2, 0),
    (0, 2, 4, 3, 5, 0),
    (1, 5, 4, 3, 2, 0),
    (1, 2, 4, 3, 5, 0),
    (0, 5, 3, 4, 2, 0),
    (0, 2, 3, 4, 5, 0),
    (1, 5, 3, 4, 2, 0),
    (1, 2, 3, 4, 5, 0),
    (0, 0, 3, 4, 0, 0),
    (0, 0, 4, 3, 0, 0),
    (1, 0, 3, 4, 0, 0),
    (1, 0, 4, 3, 0, 0),
)


def _alternate_k6_expansion(base: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    # When the tau^2-fixed pair (K_1, K_6) takes the other assignment, the
    # guaranteed deaths swap roles: i_1 becomes 0 or 6 and i_6 becomes 0 or 1.
    out = []
    seen = set()
    for t in base:
        i1 = 6 if t[0] else 0
        for i6 in (0, 1):
            tup = (i1, t[1], t[2], t[3], t[4], i6)
            if tup not in seen:
                seen.add(tup)
                out.append(tup)
    return out


def _swap_positions_and_values_2_5(t: tuple[int, ...]) -> tuple[int, ...]:
    swapped = (t[0], t[4], t[2], t[3], t[1], t[5])
    relabel = {2: 5, 5: 2}
    return tuple(relabel.get(v, v) for v in swapped)


def possible_types(
    rc: RadicandClass,
    symbol_exponent: int | None,
    k6_choice: RadicalWord,
    h1: int | None = None,
) -> list[CapitulationType]:
    """Enumerate the admissible capitulation types for a given K_6 assignment.

    ``k6_choice`` must be one of the two K_6 candidate words.  For the p^e
    shape a nonzero symbol exponent exchanges the roles of positions 2 and 5
    (values included); for the other shapes the symbol plays no role.
    """
    if rc.form is RadicandForm.NO_MATCH:
        raise ValueError("no capitulation types for an unclassified radicand")
    if rc.form is RadicandForm.PRIME_POWER:
        minus_word = RadicalWord(1, 4, 0)
        plus_word = RadicalWord(1, 1, 0)
    else:
        h = _require_h1(rc, h1)
        minus_word = RadicalWord(1, 4, 0)
        plus_word = RadicalWord(1, 1, 2 * h)
    if k6_choice == minus_word:
        tuples: list[tuple[int, ...]] = list(
            _CASE1_BASE if rc.form is RadicandForm.PRIME_POWER else _CASE2_BASE
        )
    elif k6_choice == plus_word:
        base = _CASE1_BASE if rc.form is RadicandForm.PRIME_POWER else _CASE2_BASE
        tuples = _alternate_k6_expansion(base)
    else:
        raise ValueError("k6_choice is not one of the two K6 candidates")
    if rc.form is RadicandForm.PRIME_POWER:
        if symbol_exponent is None:
            raise ValueError("the p^e shape needs the (pi_1/pi_3) symbol exponent")
        if symbol_exponent % 5 != 0:
            tuples = [_swap_positions_and_values_2_5(t) for t in tuples]
    return [CapitulationType(t) for t in tuples]


# --- the h1 search --------------------------------------------------------

_H1_TARGETS = (1, 7, 18, 24)


class H1SearchExhausted(Exception):
    """The bounded joint (unit, h) search found no admissible witness.

    ``proven_impossible`` means the failure is proved, not a bound
    artefact: for lambda the product u*pi_1*lambda^h has positive valuation
    while every target is a lambda-unit; for an inert w the full unit image
    modulo lambda^5 was exhausted.  ``norm_condition_h1`` carries the unique
    exponent solving the norm-level necessary condition, which callers may
    use as an explicitly unverified stand-in.
    """

    def __init__(
        self, message: str, *, proven_impossible: bool, norm_condition_h1: int | None
    ) -> None:
        super().__init__(message)
        self.proven_impossible = proven_impossible
        self.norm_condition_h1 = norm_condition_h1


@dataclass(frozen=True)
class H1Witness:
    h1: int
    unit: CycInt
    unit_word: UnitWord
    residue: int
    product: CycInt

    def verify(self) -> bool:
        return congruent_mod_lambda_pow(self.product, CycInt(self.residue), 5)


def norm_condition_h1(p: int, w: PrimeElement, e: int = 1) -> int | None:
    """The unique h in 1..4 solving the norm-level congruence, if any.

    Inert w = q: the witness congruence forces p * q^(4h) = 1 (mod 25);
    q != +-1, +-7 (mod 25) makes q^4 an order-5 element, so the solution is
    unique, and it is nonzero exactly when p != 1 (mod 25).  Lambda: the
    lambda-free twist of pi_1 * lambda^h by n^j has norm p^(1+4j); killing it
    mod 25 forces j = 1, i.e. h = e (mod 5).
    """
    if w.kind is PrimeKind.LAMBDA:
        h = e % 5
        return h if 1 <= h <= 4 else None
    q = w.rational_below
    q4 = pow(q, 4, 25)
    if q4 == 1:
        return None
    target = pow(p, -1, 25)
    acc = 1
    for h in range(1, 5):
        acc = (acc * q4) % 25
        if acc == target:
            return h
    return None


def find_h1(
    pi1: PrimeElement,
    w: PrimeElement,
    *,
    e: int = 1,
    unit_bound: int = DEFAULT_UNIT_BOUND,
) -> H1Witness:
    """Joint bounded search for (h, u) with u * pi_1 * w^h = +-1, +-7 (mod lambda^5).

    Scans h ascending, units in the normalize_associate order, and returns
    the first hit.  On exhaustion the failure is classified before raising:
    no silent default is ever produced.
    """
    if pi1.kind is not PrimeKind.SPLIT:
        raise UnsupportedPrimeError("pi_1 must be a split prime")
    if w.kind not in (PrimeKind.INERT, PrimeKind.LAMBDA):
        raise UnsupportedPrimeError("w must be an inert prime or lambda")
    targets = [CycInt(r) for r in _H1_TARGETS]
    for h in range(1, 5):
        wh = w.value ** h
        for word, u in iter_units(unit_bound):
            v = u * pi1.value * wh
            for r, t in zip(_H1_TARGETS, targets):
                if congruent_mod_lambda_pow(v, t, 5):
                    return H1Witness(h, u, word, r, v)
    fallback = norm_condition_h1(pi1.rational_below, w, e)
    if w.kind is PrimeKind.LAMBDA:
        raise H1SearchExhausted(
            "no witness exists: u*pi_1*lambda^h has lambda-valuation h >= 1 while"
            " every target is a unit mod lambda, so the congruence fails for all"
            " units and exponents",
            proven_impossible=True,
            norm_condition_h1=fallback,
        )
    unit_image = unit_residues_mod_lambda_pow(5).values()
    for h in range(1, 5):
        wh = w.value ** h
        for urep in unit_image:
            v = urep * pi1.value * wh
            for t in targets:
                if congruent_mod_lambda_pow(v, t, 5):
                    raise H1SearchExhausted(
                        f"a witness exists at h={h} but its unit lies beyond the"
                        f" scan bound {unit_bound}",
                        proven_impossible=False,
                        norm_condition_h1=fallback,
                    )
    raise H1SearchExhausted(
        f"no unit in the full image mod lambda^5 makes u*pi_1*{w.rational_below}^h"
        " congruent to +-1, +-7 for any h in 1..4; the congruence is impossible",
        proven_impossible=True,
        norm_condition_h1=fallback,
    )


def lambda_coprime_twist(
    value: CycInt, n: int, e: int, h: int
) -> tuple[CycInt, int, int]:
    """Divide value * lambda^h * n^j by lambda^(5m) to reach a lambda-unit.

    j is the unique exponent in 0..4 with 4*e*j + h = 0 (mod 5).  Returns
    the twisted element together with (j, m).  Exact throughout; raises if
    the division leaves the ring.
    """
    j = (-h * pow(4 * e, -1, 5)) % 5
    total = h + 4 * e * j
    if total % 5:
        raise ArithmeticError("twist exponent bookkeeping failed")
    m = total // 5
    v = value * (LAMBDA ** h) * (CycInt(n) ** j)
    for _ in range(5 * m):
        v = div_lambda_exact(v)
    return v, j, m
