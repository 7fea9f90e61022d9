"""Intuitionistic fuzzy subsets over a finite carrier, in exact arithmetic.

A subject is a pair of grade maps (mu, nu) with mu(x) + nu(x) <= 1 at every
point. All grades are ``fractions.Fraction``; equality and ordering are
exact, never tolerance-based, because the properties we check downstream
are equalities and inequalities of sup/min expressions where any rounding
would manufacture false counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CarrierMismatch,
    EmptySubset,
    GradeOutOfRange,
    ParseError,
    SumConstraintViolation,
)
from .semigroups import ElementSubset

Grade = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_grade(value, point="grade") -> Fraction:
    """Coerce a string/int/Fraction to an exact grade in [0, 1].

    Strings may be 'p/q' rationals or decimal literals; decimals parse
    exactly (0.25 -> 1/4). Floats are rejected: their binary values are
    usually not the decimal the caller meant.
    """
    if isinstance(value, float):
        raise ParseError(
            f"refusing float {value!r}: pass a string or Fraction for an exact grade"
        )
    try:
        g = Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot parse {value!r} as an exact rational") from None
    if g < 0 or g > 1:
        raise GradeOutOfRange(point, g)
    return g


@dataclass(frozen=True)
class IFSubset:
    """Paired grade maps over the carrier {0..carrier_order-1}."""

    carrier_order: int
    mu: tuple[Fraction, ...]
    nu: tuple[Fraction, ...]

    def __post_init__(self):
        n = self.carrier_order
        if len(self.mu) != n or len(self.nu) != n:
            raise CarrierMismatch(
                f"grade maps have {len(self.mu)}/{len(self.nu)} points, carrier has {n}"
            )
        for x in range(n):
            m, v = self.mu[x], self.nu[x]
            if m < 0 or m > 1:
                raise GradeOutOfRange(x, m)
            if v < 0 or v > 1:
                raise GradeOutOfRange(x, v)
            # cross-multiplied m + v <= 1 to avoid Fraction allocation in hot paths
            if m.numerator * v.denominator + v.numerator * m.denominator > (
                m.denominator * v.denominator
            ):
                raise SumConstraintViolation(x, m + v)


def validate_ifs(carrier_order: int, mu, nu) -> IFSubset:
    """Build an IFSubset from grade-like entries (strings, ints, Fractions)."""
    mu_t = tuple(as_grade(g, x) for x, g in enumerate(mu))
    nu_t = tuple(as_grade(g, x) for x, g in enumerate(nu))
    return IFSubset(carrier_order, mu_t, nu_t)


def _same_carrier(A: IFSubset, B: IFSubset) -> None:
    if A.carrier_order != B.carrier_order:
        raise CarrierMismatch(
            f"carriers differ: {A.carrier_order} vs {B.carrier_order}"
        )


def ifs_leq(A: IFSubset, B: IFSubset) -> bool:
    """Containment: mu_A <= mu_B and nu_A >= nu_B pointwise."""
    _same_carrier(A, B)
    return all(a <= b for a, b in zip(A.mu, B.mu)) and all(
        a >= b for a, b in zip(A.nu, B.nu)
    )


def ifs_eq(A: IFSubset, B: IFSubset) -> bool:
    _same_carrier(A, B)
    return A.mu == B.mu and A.nu == B.nu


def complement(A: IFSubset) -> IFSubset:
    """Swap membership and non-membership; an involution."""
    return IFSubset(A.carrier_order, A.nu, A.mu)


def intersect(A: IFSubset, B: IFSubset) -> IFSubset:
    """Pointwise min on mu, max on nu."""
    _same_carrier(A, B)
    return IFSubset(
        A.carrier_order,
        tuple(min(a, b) for a, b in zip(A.mu, B.mu)),
        tuple(max(a, b) for a, b in zip(A.nu, B.nu)),
    )


def union(A: IFSubset, B: IFSubset) -> IFSubset:
    """Pointwise max on mu, min on nu."""
    _same_carrier(A, B)
    return IFSubset(
        A.carrier_order,
        tuple(max(a, b) for a, b in zip(A.mu, B.mu)),
        tuple(min(a, b) for a, b in zip(A.nu, B.nu)),
    )


def characteristic_pair(carrier_order: int, A: ElementSubset) -> IFSubset:
    """View a crisp subset as the pair (indicator, 1 - indicator)."""
    if A.carrier_order != carrier_order:
        raise CarrierMismatch("subset carrier does not match requested carrier")
    if not A.members:
        raise EmptySubset("characteristic pair of an empty subset")
    mu = tuple(ONE if x in A.members else ZERO for x in range(carrier_order))
    nu = tuple(ZERO if x in A.members else ONE for x in range(carrier_order))
    return IFSubset(carrier_order, mu, nu)


def is_nonempty(A: IFSubset) -> bool:
    """Non-empty means the membership map is somewhere positive."""
    return any(m > 0 for m in A.mu)


def is_constant(A: IFSubset) -> bool:
    """Both grade maps take a single value across the carrier."""
    return len(set(A.mu)) <= 1 and len(set(A.nu)) <= 1


# ---------------------------------------------------------------------------
# grade-map file format: '#' comments; one line per element, `<index> <mu>
# <nu>`; every carrier element exactly once; grades as p/q or exact decimals


def parse_ifs(text: str) -> IFSubset:
    rows: dict[int, tuple[Fraction, Fraction]] = {}
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 3:
            raise ParseError(f"expected '<index> <mu> <nu>', got {stripped!r}")
        try:
            idx = int(parts[0])
        except ValueError:
            raise ParseError(f"bad element index in {stripped!r}") from None
        if idx in rows:
            raise ParseError(f"element {idx} appears twice")
        rows[idx] = (as_grade(parts[1], idx), as_grade(parts[2], idx))
    if not rows:
        raise ParseError("no data lines in grade-map input")
    n = max(rows) + 1
    if set(rows) != set(range(n)):
        missing = sorted(set(range(n)) - set(rows))
        raise ParseError(f"carrier elements missing from input: {missing}")
    mu = tuple(rows[x][0] for x in range(n))
    nu = tuple(rows[x][1] for x in range(n))
    return IFSubset(n, mu, nu)


def format_ifs(A: IFSubset) -> str:
    """Serialize with canonical reduced p/q grades; re-parses to an equal value."""
    lines = [f"{x} {A.mu[x]} {A.nu[x]}" for x in range(A.carrier_order)]
    return "\n".join(lines) + "\n"
