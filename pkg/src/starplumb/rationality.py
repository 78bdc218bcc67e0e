"""Fundamental cycles and the rationality certificate.

Laufer's algorithm on a negative-definite plumbing: start from the
all-ones cycle and repeatedly bump a vertex whose pairing with the
cycle is still positive; the process stops at the least positive cycle
Z with Z . E_i <= 0 for every vertex class.  The arithmetic genus

    p_a(Z) = 1 + (Z.Z + Z.K) / 2,    K . E_i = -s_i - 2,

is zero exactly when the singularity resolved by the graph is
rational, and the link of a rational singularity is an L-space.
"""

from fractions import Fraction

from .graph_core import StarPlumbing, intersection_matrix, is_negative_definite_star

__all__ = ["fundamental_cycle", "is_rational"]


def fundamental_cycle(g: StarPlumbing, scan_order=None):
    """Least positive cycle Z with Z . E_i <= 0 at every vertex.

    Vertices are ordered as in intersection_matrix (central first, then
    legs center-outward).  scan_order, a permutation of the vertex
    indices, only changes which offending vertex gets bumped first; the
    final cycle is the same for every order.
    """
    if not is_negative_definite_star(g):
        raise ValueError("fundamental cycle needs a negative definite graph "
                         "(the bumping loop may not terminate otherwise)")
    mat = intersection_matrix(g)
    n = len(mat)
    order = tuple(range(n)) if scan_order is None else tuple(scan_order)
    if sorted(order) != list(range(n)):
        raise ValueError("scan_order must be a permutation of the vertex indices")
    z = [1] * n
    while True:
        for i in order:
            if sum(zj * a for zj, a in zip(z, mat[i])) > 0:
                z[i] += 1
                break
        else:
            return tuple(z)


def is_rational(g: StarPlumbing):
    """(p_a(Z) == 0, p_a(Z)) for the fundamental cycle Z, exactly.

    A True verdict certifies that the graph's boundary is an L-space.
    """
    z = fundamental_cycle(g)
    mat = intersection_matrix(g)
    zz = sum(zi * sum(zj * a for zj, a in zip(z, row)) for zi, row in zip(z, mat))
    weights = [g.central] + [w for leg in g.legs for w in leg]
    zk = sum(zi * (-w - 2) for zi, w in zip(z, weights))
    assert (zz + zk) % 2 == 0, "Z.Z + Z.K is even (adjunction parity)"
    pa = 1 + Fraction(zz + zk, 2)
    assert pa.denominator == 1
    return pa == 0, pa
