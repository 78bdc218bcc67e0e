"""Exact arithmetic for star-shaped plumbing graphs.

A star-shaped plumbing graph is one central vertex of weight s0 with
m >= 1 linear legs attached, every leg weight at most -2.  This module
holds the graph and continued-fraction types, the associated
intersection form, and two independent negative-definiteness tests:
the Sylvester leading-minor test on the full matrix, and the closed
form special to star shapes, s0 + r_1 + ... + r_m < 0, where r_i is
the negative reciprocal of the leg's continued-fraction value.

Every quantity is an exact rational; no verdict ever touches floating
point.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "StarPlumbing",
    "ContinuedFraction",
    "cf_evaluate",
    "cf_expand",
    "leg_r",
    "intersection_matrix",
    "is_negative_definite_matrix",
    "is_negative_definite_star",
    "fraction_to_str",
    "fraction_from_str",
]

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?$")


def fraction_to_str(x) -> str:
    """Serialize an exact rational as "p/q" (or bare "p" for integers)."""
    assert isinstance(x, (int, Fraction)), "refusing to serialize a float"
    return str(Fraction(x))


def fraction_from_str(s: str) -> Fraction:
    """Parse "p/q" or "p".  Decimals and anything else are rejected."""
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise ValueError(f"not an exact rational: {s!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {s!r}") from None


def _int_field(value, what):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class StarPlumbing:
    """Central weight plus ordered legs, each written center-outward.

    Leg weights must all be <= -2; the central weight is unconstrained
    (definiteness is a separate question).  Legs are stored in the
    given order; use canonical() when comparing graphs up to leg
    permutation.
    """

    central: int
    legs: tuple

    def __post_init__(self):
        _int_field(self.central, "central weight")
        legs = tuple(tuple(leg) for leg in self.legs)
        object.__setattr__(self, "legs", legs)
        if not legs:
            raise ValueError("a star graph needs at least one leg")
        for leg in legs:
            if not leg:
                raise ValueError("empty legs are not allowed")
            for w in leg:
                _int_field(w, "leg weight")
                if w > -2:
                    raise ValueError(f"leg weight {w} > -2")

    @property
    def vertex_count(self) -> int:
        return 1 + sum(len(leg) for leg in self.legs)

    def canonical(self) -> "StarPlumbing":
        """Same graph with legs sorted; equality of canonical forms is
        graph isomorphism (legs may be listed in any order)."""
        return StarPlumbing(self.central, tuple(sorted(self.legs)))

    def to_json_dict(self) -> dict:
        return {"central": self.central, "legs": [list(leg) for leg in self.legs]}

    @classmethod
    def from_json_dict(cls, d) -> "StarPlumbing":
        if not isinstance(d, dict) or set(d) != {"central", "legs"}:
            raise ValueError('graph JSON must be {"central": int, "legs": [[int,...],...]}')
        legs = d["legs"]
        if not isinstance(legs, list) or not all(isinstance(l, list) for l in legs):
            raise ValueError("'legs' must be a list of lists of integers")
        return cls(d["central"], tuple(tuple(leg) for leg in legs))


@dataclass(frozen=True)
class ContinuedFraction:
    """Coefficients [a1, ..., ak] of a1 - 1/(a2 - ... - 1/ak).

    All coefficients must be <= -2; with that constraint the expansion
    of any rational below -1 is unique.
    """

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise ValueError("need at least one coefficient")
        for a in coeffs:
            _int_field(a, "coefficient")
            if a > -2:
                raise ValueError(f"coefficient {a} > -2")


def cf_evaluate(cf: ContinuedFraction) -> Fraction:
    """Exact value of the continued fraction; always < -1.

    Evaluated right to left.  Every tail value is < -1, so the nested
    divisions never hit zero.
    """
    val = Fraction(cf.coeffs[-1])
    for a in reversed(cf.coeffs[:-1]):
        val = a - Fraction(1) / val
    return val


def cf_expand(x) -> ContinuedFraction:
    """Expand a rational x < -1 with every coefficient <= -2.

    Splits off a = floor(x) and recurses into 1/(a - x); the remaining
    denominator strictly shrinks, so this terminates, and the result is
    the unique such expansion.
    """
    if isinstance(x, float):
        raise ValueError("cf_expand needs an exact rational, not a float")
    x = Fraction(x)
    if x >= -1:
        raise ValueError(f"{x} >= -1 has no expansion with coefficients <= -2")
    coeffs = []
    while x.denominator != 1:
        a = x.numerator // x.denominator
        coeffs.append(a)
        x = 1 / (a - x)
    coeffs.append(x.numerator)
    return ContinuedFraction(tuple(coeffs))


def leg_r(leg) -> Fraction:
    """The leg's ratio r = -1/(s1 - 1/(s2 - ... - 1/sn)), in (0,1)."""
    return -1 / cf_evaluate(ContinuedFraction(tuple(leg)))


def intersection_matrix(g: StarPlumbing) -> tuple:
    """Symmetric integer form of the graph: weights on the diagonal,
    a 1 for every plumbing edge.

    Vertex order: central first, then each leg center-outward.
    """
    n = g.vertex_count
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = g.central
    k = 1
    for leg in g.legs:
        prev = 0
        for w in leg:
            rows[k][k] = w
            rows[k][prev] = rows[prev][k] = 1
            prev = k
            k += 1
    return tuple(tuple(row) for row in rows)


def is_negative_definite_matrix(m) -> bool:
    """Sylvester test: (-1)^k det(leading k x k minor) > 0 for all k.

    Fraction-free Bareiss elimination on an integer matrix; after step
    k the pivot equals the k-th leading principal minor, so a pivot of
    the wrong sign settles the verdict immediately and no row exchange
    is ever needed.
    """
    n = len(m)
    a = [list(row) for row in m]
    for i in range(n):
        assert len(a[i]) == n, "matrix must be square"
        for j in range(i):
            assert a[i][j] == a[j][i], "matrix must be symmetric"
    prev = 1
    sign = -1
    for k in range(n):
        piv = a[k][k]
        if piv * sign <= 0:
            return False
        ak = a[k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ai = a[i]
            # every entry is rescaled by piv/prev, even in zero rows
            for j in range(k + 1, n):
                ai[j] = (piv * ai[j] - aik * ak[j]) // prev
        prev = piv
        sign = -sign
    return True


def is_negative_definite_star(g: StarPlumbing) -> bool:
    """Closed-form test for star graphs: definite iff s0 + sum r_i < 0."""
    return g.central + sum(leg_r(leg) for leg in g.legs) < 0
