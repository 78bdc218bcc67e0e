"""Moment-polygon templates for negative-definite star plumbings.

Given a star graph and a positive rational area for every edge sphere,
build_template places one polygonal chain per leg in the upper half
plane.  Edge directions are primitive integer vectors obeying

    tau_0 = (1, 0),   tau_1 = (u_1, 1),
    tau_{j+1} = -tau_{j-1} - s_j tau_j,

the u_1's are any integers summing to -s0 (a balanced split by
default), the line of the last edge of every chain passes through the
origin, and the first chain points all sit on one row y = y0.  Those
constraints have exactly one rational solution once the areas are
fixed, and the solution exists precisely when the graph is negative
definite.

Areas come in as lambda = area / (2 pi), so every coordinate stays an
exact rational.  verify_template re-derives all directions from the
point data alone and re-checks every condition and readback formula;
it reports rather than raises, so tampered templates come back with a
named failing check.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .graph_core import (
    StarPlumbing,
    fraction_from_str,
    fraction_to_str,
    is_negative_definite_star,
    leg_r,
)

__all__ = [
    "TemplateError",
    "Condition4Error",
    "LegTemplate",
    "Template",
    "Check",
    "VerifyReport",
    "det2",
    "tau_sequence",
    "sigma_of",
    "mobius_step",
    "choose_u_split",
    "build_template",
    "verify_template",
    "template_to_json_dict",
    "template_from_json_dict",
]


class TemplateError(ValueError):
    """No template can be built from the given data."""


class Condition4Error(TemplateError):
    """A chain point landed on the wrong side of its edge line.

    Condition 4 of verify_template requires det(tau_j, P_j) > 0 along
    every chain; leg_index and point_index locate the first violation.
    """

    def __init__(self, leg_index, point_index, value):
        self.leg_index = leg_index
        self.point_index = point_index
        self.value = value
        super().__init__(
            f"condition 4 violated on leg {leg_index} at point {point_index}: "
            f"det(tau, P) = {value} <= 0"
        )


@dataclass(frozen=True)
class LegTemplate:
    taus: tuple     # tau_0 .. tau_{n+1}, primitive integer pairs
    points: tuple   # P_0 .. P_{n+2}, exact rational pairs
    lambdas: tuple  # lambda_0 .. lambda_{n+1}, positive rationals
    sigma: Fraction  # reciprocal slope u/v of the last direction
    K: Fraction      # offset in x_1 = sigma * y0 + K; always < 0


@dataclass(frozen=True)
class Template:
    legs: tuple     # one LegTemplate per graph leg, same order
    u_split: tuple  # the chosen u_1 per leg, summing to -central
    y0: Fraction
    lambda0: Fraction  # central area / 2 pi


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    actual: str
    ok: bool


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    checks: tuple

    def failed(self):
        return [c for c in self.checks if not c.ok]

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "expected": c.expected, "actual": c.actual, "ok": c.ok}
                for c in self.checks
            ],
        }


def det2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _exact(x, what="value"):
    if isinstance(x, float):
        raise TemplateError(f"{what} must be an exact rational (int, Fraction or 'p/q'), not a float")
    return Fraction(x)


def tau_sequence(leg, u1: int):
    """Directions tau_0 .. tau_{n+1} for a leg of weights s_1 .. s_n.

    Starts from (1,0) and (u1,1) and applies the two-term recurrence.
    Consecutive pairs always have det +1, every vector is primitive,
    and -det(tau_{j-1}, tau_{j+1}) returns the weight s_j.
    """
    taus = [(1, 0), (u1, 1)]
    for s in leg:
        (a0, b0), (a1, b1) = taus[-2], taus[-1]
        taus.append((-a0 - s * a1, -b0 - s * b1))
    return taus


def sigma_of(taus) -> Fraction:
    """Reciprocal slope u/v of the last direction.

    Equals u1 - leg_r(leg) for any tau_sequence(leg, u1).
    """
    u, v = taus[-1]
    if v == 0:
        raise ValueError("horizontal terminal edge: its line cannot pass through the origin "
                         "while the chain stays in y > 0")
    return Fraction(u, v)


def mobius_step(sigma, u: int) -> Fraction:
    """u - 1/sigma: the reciprocal slope after the basis change
    (x, y) -> (u x - y, x), which sends slope sigma to u - 1/sigma."""
    sigma = _exact(sigma, "sigma")
    if sigma == 0:
        raise ValueError("sigma = 0 has no image under u - 1/sigma")
    return u - 1 / sigma


def choose_u_split(s0: int, m: int):
    """Balanced integers summing to -s0; the first -s0 mod m entries
    take the extra unit."""
    assert m >= 1
    base, extra = divmod(-s0, m)
    return [base + 1] * extra + [base] * (m - extra)


def build_template(g: StarPlumbing, lambdas, lambda0, u_split=None) -> Template:
    """Construct the template of a negative-definite star graph.

    lambdas[i] lists the areas (over 2 pi) of leg i's spheres, one per
    leg vertex; lambda0 is the central area.  u_split overrides the
    balanced split with any integers summing to -central.

    For each leg the offset K_i = sigma_i * S_y - S_x (S = sum of
    lambda_j tau_j) makes the last edge line pass through the origin
    independent of y0, and then y0 = (lambda0 - sum K_i) / sum sigma_i
    gives the central region its area.  Negative definiteness is
    exactly what makes sum sigma_i positive, hence y0 > 0.

    Raises TemplateError for an indefinite graph, bad areas, or a bad
    split, and Condition4Error if a chain point falls on the wrong
    side of its edge line (see verify_template's condition list).
    """
    m = len(g.legs)
    if len(lambdas) != m:
        raise TemplateError(f"need one area list per leg: got {len(lambdas)} for {m} legs")
    lam = []
    for i, (leg, row) in enumerate(zip(g.legs, lambdas)):
        if len(row) != len(leg):
            raise TemplateError(f"leg {i} has {len(leg)} vertices but {len(row)} areas")
        row = tuple(_exact(x, f"area (leg {i})") for x in row)
        if any(x <= 0 for x in row):
            raise TemplateError(f"areas must be positive (leg {i})")
        lam.append(row)
    lambda0 = _exact(lambda0, "central area")
    if lambda0 <= 0:
        raise TemplateError("central area must be positive")

    total = g.central + sum(leg_r(leg) for leg in g.legs)
    if total >= 0:
        raise TemplateError(
            "graph is not negative definite (Neumann-Raymond criterion: "
            f"s0 + r_1 + ... + r_m = {total} >= 0), so the sigma sum {-total} <= 0 "
            "leaves no room for a positive central area"
        )

    if u_split is None:
        u_split = choose_u_split(g.central, m)
    u_split = tuple(u_split)
    if len(u_split) != m or any(not isinstance(u, int) for u in u_split) \
            or sum(u_split) != -g.central:
        raise TemplateError(
            f"u-split {list(u_split)} must be {m} integers summing to {-g.central}")

    all_taus = [tau_sequence(leg, u) for leg, u in zip(g.legs, u_split)]
    sigmas = [sigma_of(taus) for taus in all_taus]
    ks = []
    for taus, row, sigma in zip(all_taus, lam, sigmas):
        sx = sum(l * t[0] for l, t in zip(row, taus[1:-1]))
        sy = sum(l * t[1] for l, t in zip(row, taus[1:-1]))
        ks.append(sigma * sy - sx)
    assert all(k < 0 for k in ks), "K_i < 0 whenever the leg is nonempty"

    sigma_sum = sum(sigmas)
    assert sigma_sum == -total > 0
    y0 = (lambda0 - sum(ks)) / sigma_sum
    assert y0 > 0, "y0 is positive for a definite graph and positive areas"

    # half of min(1, y0, lambda0/m) keeps every x_{i,0} within reach and
    # the sum of the x_{i,0} at least lambda0/2 > 0
    lam_first = min(Fraction(1), y0, Fraction(lambda0, m)) / 2

    legs_out = []
    for i, (taus, row, sigma, k) in enumerate(zip(all_taus, lam, sigmas, ks)):
        x1 = sigma * y0 + k
        pts = [(x1, y0)]
        for l, t in zip(row, taus[1:-1]):
            x, y = pts[-1]
            pts.append((x + l * t[0], y + l * t[1]))
        assert det2(taus[-1], pts[-1]) == 0, "last edge line passes through the origin"
        term = taus[-1]
        assert term[1] > 0, "the last direction points upward for a nonempty leg"
        points = [(x1 - lam_first, y0)] + pts + [(pts[-1][0] + term[0], pts[-1][1] + term[1])]
        for j, tau in enumerate(taus[:-1]):
            d = det2(tau, points[j])
            if d <= 0:
                raise Condition4Error(i, j, d)
        legs_out.append(LegTemplate(
            taus=tuple(taus),
            points=tuple(points),
            lambdas=(lam_first,) + row + (Fraction(1),),
            sigma=sigma,
            K=k,
        ))
    return Template(legs=tuple(legs_out), u_split=u_split, y0=y0, lambda0=lambda0)


def _primitive(dx, dy):
    """Write an exact step as lam * (a, b) with (a, b) primitive integral
    and lam > 0; None for the zero step."""
    if dx == 0 and dy == 0:
        return None
    den = lcm(dx.denominator, dy.denominator)
    a, b = int(dx * den), int(dy * den)
    d = gcd(a, b)
    a //= d
    b //= d
    lam = dx / a if a else dy / b
    if lam < 0:
        a, b, lam = -a, -b, -lam
    return (a, b), lam


def _show(v):
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(_show(x) for x in v) + ")"
    return str(v)


def verify_template(t: Template, g: StarPlumbing, lambdas, lambda0) -> VerifyReport:
    """Re-check a template against its graph and the prescribed areas.

    Every direction is re-derived from point differences and
    re-primitivized, so the stored taus, sigmas, K's and areas are
    cross-checked rather than trusted.  Failures become report entries;
    this function does not raise on a bad template.

    The four chain conditions, as named in the checks:
      1. the first direction of every chain is (1, 0);
      2. the line of the last edge passes through the origin;
      3. consecutive directions have det(tau_j, tau_{j+1}) = +1;
      4. det(tau_j, P_j) > 0 at every chain point up to the last corner.

    On top of those: all points in the upper half plane, first points
    on the common row y0, sum of the x_{i,0} positive, weight readback
    -det(tau_{j-1}, tau_{j+1}) = s_j, area readback, central area
    sum x_{i,1} = lambda0, and central weight -sum u_{i,1} = s0.
    """
    checks = []

    def check(name, expected, actual, ok=None):
        if ok is None:
            ok = expected == actual
        checks.append(Check(name, _show(expected), _show(actual), bool(ok)))
        return ok

    lam = [tuple(_exact(x, "area") for x in row) for row in lambdas]
    lambda0 = _exact(lambda0, "central area")
    m = len(g.legs)
    shape_ok = (
        len(t.legs) == m
        and len(t.u_split) == m
        and len(lam) == m
        and all(
            len(lt.points) == len(leg) + 3
            and len(lt.taus) == len(leg) + 2
            and len(lt.lambdas) == len(leg) + 2
            and len(row) == len(leg)
            for lt, leg, row in zip(t.legs, g.legs, lam)
        )
    )
    if not check("structure", "points/taus/lambdas sized n+3/n+2/n+2 on each of "
                 f"{m} legs", "consistent" if shape_ok else "mismatch", shape_ok):
        return VerifyReport(False, tuple(checks))

    derived = []
    for i, lt in enumerate(t.legs):
        taus2, lams2 = [], []
        for j in range(len(lt.points) - 1):
            step = _primitive(lt.points[j + 1][0] - lt.points[j][0],
                              lt.points[j + 1][1] - lt.points[j][1])
            if step is None:
                break
            taus2.append(step[0])
            lams2.append(step[1])
        else:
            derived.append((taus2, lams2))
            continue
        check(f"tau-readback[leg{i}]", "nonzero edge steps", "zero step", False)
        derived.append(None)

    for i, (leg, lt, row) in enumerate(zip(g.legs, t.legs, lam)):
        if derived[i] is None:
            continue
        taus2, lams2 = derived[i]
        n = len(leg)
        check(f"upper-half-plane[leg{i}]", "all y > 0",
              "ok" if all(p[1] > 0 for p in lt.points) else
              [_show(p) for p in lt.points if p[1] <= 0][0],
              all(p[1] > 0 for p in lt.points))
        check(f"y-row[leg{i}]", (t.y0, t.y0), (lt.points[0][1], lt.points[1][1]))
        check(f"cond1-first-direction[leg{i}]", (1, 0), taus2[0])
        check(f"cond2-origin-line[leg{i}]", 0, det2(taus2[-1], lt.points[n + 1]))
        check(f"cond3-unimodular[leg{i}]", [1] * (n + 1),
              [det2(taus2[j], taus2[j + 1]) for j in range(n + 1)])
        cond4 = [det2(taus2[j], lt.points[j]) for j in range(n + 1)]
        check(f"cond4-positive-side[leg{i}]", "all > 0", cond4,
              all(d > 0 for d in cond4))
        check(f"tau-readback[leg{i}]", tuple(lt.taus), tuple(taus2))
        check(f"weight-readback[leg{i}]", tuple(leg),
              tuple(-det2(taus2[j - 1], taus2[j + 1]) for j in range(1, n + 1)))
        check(f"lambda-readback[leg{i}]", tuple(row), tuple(lams2[1:n + 1]))
        check(f"lambda-stored[leg{i}]", tuple(lt.lambdas), tuple(lams2))
        check(f"u-split-stored[leg{i}]", t.u_split[i], taus2[1][0])
        if taus2[-1][1] == 0:
            check(f"sigma-K[leg{i}]", "upward last direction", taus2[-1], False)
        else:
            sig = Fraction(taus2[-1][0], taus2[-1][1])
            k2 = lt.points[1][0] - sig * t.y0
            check(f"sigma-K[leg{i}]",
                  (sig, k2, "K < 0"),
                  (lt.sigma, lt.K, "K < 0" if lt.K < 0 else f"K = {lt.K}"),
                  lt.sigma == sig and lt.K == k2 and lt.K < 0)

    if all(d is not None for d in derived):
        x0_sum = sum(lt.points[0][0] for lt in t.legs)
        check("x0-sum-positive", "> 0", x0_sum, x0_sum > 0)
        check("central-area", lambda0, sum(lt.points[1][0] for lt in t.legs))
        check("central-weight", g.central, -sum(d[0][1][0] for d in derived))
    else:
        check("x0-sum-positive", "> 0", "unavailable", False)
        check("central-area", lambda0, "unavailable", False)
        check("central-weight", g.central, "unavailable", False)

    return VerifyReport(all(c.ok for c in checks), tuple(checks))


def template_to_json_dict(t: Template, g: StarPlumbing) -> dict:
    """JSON form of a template; embeds the graph so the file is
    self-contained for later verification and rendering."""
    return {
        "graph": g.to_json_dict(),
        "u_split": list(t.u_split),
        "y0": fraction_to_str(t.y0),
        "lambda0": fraction_to_str(t.lambda0),
        "legs": [
            {
                "taus": [[u, v] for (u, v) in lt.taus],
                "points": [[fraction_to_str(x), fraction_to_str(y)] for (x, y) in lt.points],
                "lambdas": [fraction_to_str(l) for l in lt.lambdas],
                "sigma": fraction_to_str(lt.sigma),
                "K": fraction_to_str(lt.K),
            }
            for lt in t.legs
        ],
    }


def _int_pair(v, what):
    if (not isinstance(v, list) or len(v) != 2
            or any(not isinstance(x, int) or isinstance(x, bool) for x in v)):
        raise ValueError(f"{what} must be a pair of integers, got {v!r}")
    return (v[0], v[1])


def _rat_pair(v, what):
    if not isinstance(v, list) or len(v) != 2:
        raise ValueError(f"{what} must be a pair of rational strings, got {v!r}")
    return (fraction_from_str(v[0]), fraction_from_str(v[1]))


def template_from_json_dict(d):
    """Parse a template file; returns (Template, StarPlumbing).

    Raises ValueError with the offending field on malformed input; the
    parsed template is not verified here.
    """
    required = {"graph", "u_split", "y0", "lambda0", "legs"}
    if not isinstance(d, dict) or set(d) != required:
        raise ValueError(f"template JSON must have exactly the keys {sorted(required)}")
    g = StarPlumbing.from_json_dict(d["graph"])
    u_split = d["u_split"]
    if not isinstance(u_split, list) or any(not isinstance(u, int) or isinstance(u, bool)
                                            for u in u_split):
        raise ValueError("'u_split' must be a list of integers")
    raw_legs = d["legs"]
    if not isinstance(raw_legs, list):
        raise ValueError("'legs' must be a list")
    leg_keys = {"taus", "points", "lambdas", "sigma", "K"}
    legs = []
    for i, rl in enumerate(raw_legs):
        if not isinstance(rl, dict) or set(rl) != leg_keys:
            raise ValueError(f"leg {i} must have exactly the keys {sorted(leg_keys)}")
        for key in ("taus", "points", "lambdas"):
            if not isinstance(rl[key], list):
                raise ValueError(f"leg {i}: '{key}' must be a list")
        legs.append(LegTemplate(
            taus=tuple(_int_pair(v, f"leg {i} tau") for v in rl["taus"]),
            points=tuple(_rat_pair(v, f"leg {i} point") for v in rl["points"]),
            lambdas=tuple(fraction_from_str(v) for v in rl["lambdas"]),
            sigma=fraction_from_str(rl["sigma"]),
            K=fraction_from_str(rl["K"]),
        ))
    t = Template(
        legs=tuple(legs),
        u_split=tuple(u_split),
        y0=fraction_from_str(d["y0"]),
        lambda0=fraction_from_str(d["lambda0"]),
    )
    return t, g
