"""Normalized Seifert invariants and their star plumbings.

The boundary data (e0; r_1, ..., r_m) with every r_i in (0,1) matches
the star graph whose central weight is e0 and whose i-th leg carries
the continued-fraction coefficients of -1/r_i.  Both directions of the
conversion are exact, and they invert each other on the nose because
legs with all weights <= -2 are already canonical expansions.
"""

from dataclasses import dataclass
from fractions import Fraction

from .graph_core import (
    StarPlumbing,
    cf_expand,
    fraction_from_str,
    fraction_to_str,
    leg_r,
)

__all__ = ["SeifertData", "seifert_to_plumbing", "plumbing_to_seifert"]


@dataclass(frozen=True)
class SeifertData:
    """Normalized invariants: integer e0 and ratios r_i in (0,1).

    Unnormalized input is rejected rather than silently shifted into
    range; callers must normalize first.
    """

    e0: int
    ratios: tuple

    def __post_init__(self):
        if not isinstance(self.e0, int) or isinstance(self.e0, bool):
            raise ValueError(f"e0 must be an integer, got {self.e0!r}")
        ratios = tuple(Fraction(r) for r in self.ratios)
        object.__setattr__(self, "ratios", ratios)
        if not ratios:
            raise ValueError("need at least one ratio")
        for r in ratios:
            if not 0 < r < 1:
                raise ValueError(f"ratio {r} is not normalized (need 0 < r < 1)")

    def to_json_dict(self) -> dict:
        return {"e0": self.e0, "ratios": [fraction_to_str(r) for r in self.ratios]}

    @classmethod
    def from_json_dict(cls, d) -> "SeifertData":
        if not isinstance(d, dict) or set(d) != {"e0", "ratios"}:
            raise ValueError('Seifert JSON must be {"e0": int, "ratios": ["p/q",...]}')
        ratios = d["ratios"]
        if not isinstance(ratios, list):
            raise ValueError("'ratios' must be a list of \"p/q\" strings")
        return cls(d["e0"], tuple(fraction_from_str(r) for r in ratios))


def seifert_to_plumbing(sd: SeifertData) -> StarPlumbing:
    """Star graph with central weight e0 and leg i = expansion of -1/r_i."""
    # r in (0,1) puts -1/r below -1, inside cf_expand's domain
    legs = tuple(cf_expand(-1 / r).coeffs for r in sd.ratios)
    return StarPlumbing(sd.e0, legs)


def plumbing_to_seifert(g: StarPlumbing) -> SeifertData:
    """Invariants of a star graph: e0 = central, r_i = leg ratio."""
    return SeifertData(g.central, tuple(leg_r(leg) for leg in g.legs))
