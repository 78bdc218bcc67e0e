"""Three parameterized families of star graphs and their recognizer.

Each family is a three-legged star indexed by nonnegative (p, q, r)
with p + q + r + 4 vertices in total:

  Gamma_{p,q,r}: central -4, legs
      (-2)^q, -(p+3)   |   (-2)^r, -(q+3)   |   (-2)^p, -(r+3)
  Delta_{p,q,r}: central -3, legs
      p >= 1:  -(p+2)  |  (-2)^r, -(q+4)  |  (-2)^q, -3, (-2)^{p-1}, -(r+3)
      p  = 0:  -2      |  (-2)^r, -(q+4)  |  (-2)^q, -(r+4)
  Lambda_{p,q,r}: central -2, legs
      p,r >= 1:  -(p+2)  |  -(r+3)  |  (-2)^q, -3, (-2)^{r-1}, -3, (-2)^{p-1}, -(q+4)
      p=0,r>=1:  -2      |  -(r+3)  |  (-2)^q, -3, (-2)^{r-1}, -(q+5)
      p>=1,r=0:  -(p+2)  |  -3      |  (-2)^q, -4, (-2)^{p-1}, -(q+4)
      p=0,r=0:   -2      |  -3      |  (-2)^q, -(q+6)

(-2)^k means k copies of -2.  generate() emits exactly these graphs;
recognize() inverts it up to leg permutation.
"""

from dataclasses import dataclass

from .graph_core import StarPlumbing

__all__ = ["FamilyTag", "FAMILY_NAMES", "generate", "recognize"]

FAMILY_NAMES = ("Delta", "Gamma", "Lambda")  # alphabetical, the tie-break order

_CENTRAL = {"Gamma": -4, "Delta": -3, "Lambda": -2}


@dataclass(frozen=True)
class FamilyTag:
    family: str
    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.family not in _CENTRAL:
            raise ValueError(f"unknown family {self.family!r}: use Gamma, Delta or Lambda")
        for name in ("p", "q", "r"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")

    def to_json_dict(self) -> dict:
        return {"family": self.family, "p": self.p, "q": self.q, "r": self.r}

    @classmethod
    def from_json_dict(cls, d) -> "FamilyTag":
        if not isinstance(d, dict) or set(d) != {"family", "p", "q", "r"}:
            raise ValueError('family JSON must be {"family": str, "p": int, "q": int, "r": int}')
        return cls(d["family"], d["p"], d["q"], d["r"])


def _twos(k):
    return (-2,) * k


def generate(tag: FamilyTag) -> StarPlumbing:
    """The graph of the module docstring table, legs in the listed order."""
    p, q, r = tag.p, tag.q, tag.r
    if tag.family == "Gamma":
        legs = (
            _twos(q) + (-(p + 3),),
            _twos(r) + (-(q + 3),),
            _twos(p) + (-(r + 3),),
        )
        return StarPlumbing(-4, legs)
    if tag.family == "Delta":
        if p >= 1:
            legs = (
                (-(p + 2),),
                _twos(r) + (-(q + 4),),
                _twos(q) + (-3,) + _twos(p - 1) + (-(r + 3),),
            )
        else:
            legs = (
                (-2,),
                _twos(r) + (-(q + 4),),
                _twos(q) + (-(r + 4),),
            )
        return StarPlumbing(-3, legs)
    if p >= 1 and r >= 1:
        legs = (
            (-(p + 2),),
            (-(r + 3),),
            _twos(q) + (-3,) + _twos(r - 1) + (-3,) + _twos(p - 1) + (-(q + 4),),
        )
    elif r >= 1:
        legs = (
            (-2,),
            (-(r + 3),),
            _twos(q) + (-3,) + _twos(r - 1) + (-(q + 5),),
        )
    elif p >= 1:
        legs = (
            (-(p + 2),),
            (-3,),
            _twos(q) + (-4,) + _twos(p - 1) + (-(q + 4),),
        )
    else:
        legs = (
            (-2,),
            (-3,),
            _twos(q) + (-(q + 6),),
        )
    return StarPlumbing(-2, legs)


def recognize(g: StarPlumbing):
    """Tag whose generate() output matches g up to leg permutation, or None.

    The total vertex count pins p + q + r, so only O(count^2) candidate
    tags exist; ties go to the lexicographically least (family, p, q, r).
    """
    if len(g.legs) != 3:
        return None
    total = g.vertex_count - 4
    if total < 0:
        return None
    target = g.canonical()
    for family in FAMILY_NAMES:
        if g.central != _CENTRAL[family]:
            continue
        for p in range(total + 1):
            for q in range(total + 1 - p):
                tag = FamilyTag(family, p, q, total - p - q)
                if generate(tag).canonical() == target:
                    return tag
    return None
