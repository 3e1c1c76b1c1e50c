"""Repeated gonal numbers with 7 <= r < m-3.

Shape: r-1 unweighted slots followed by ceil((m-3)/r) - 1 slots of weight r.
Each n is split as n = (m-2)k1 + r*k2 + k3 with 0 <= k2 <= floor((m-3)/r)
and -5 <= k3 <= r-6.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .. import tables
from ..errors import DomainError, InvariantError
from ..gonal import RepeatShape, _pm, triangular_neg
from .quaternary import multiple_args
from .shaped import ShapedRepresentation, build

# step x -> (dC, dD) removed when walking from a node to its parent
WALK_PARENT = {
    -1: (1, -1),
    1: (0, 1),
    2: (1, 2),
    -2: (3, -2),
    -4: (10, -4),
}


@dataclass(frozen=True)
class GraphWalkEntry:
    C: int
    D: int
    depth: int
    step: int

    def parent(self) -> tuple[int, int]:
        dc, dd = WALK_PARENT[self.step]
        return self.C - dc, self.D - dd


@lru_cache(maxsize=1)
def walk_entries() -> dict[tuple[int, int], GraphWalkEntry]:
    out = {}
    for rec in tables.records("walk"):
        e = GraphWalkEntry(rec.int("C"), rec.int("D"), rec.int("d"), rec.int("x"))
        out[e.C, e.D] = e
    return out


def walk_args(C: int, D: int) -> list[int]:
    """Arguments for C(m-2) + D read back from the graph, last step last."""
    table = walk_entries()
    e = table[C, D]
    path = []
    while True:
        path.append(e.step)
        if e.depth == 1:
            if (C, D) != (triangular_neg(e.step), e.step):
                raise InvariantError(f"depth-1 node ({C},{D}) is not P_m({e.step})")
            break
        C, D = e.parent()
        parent = table.get((C, D))
        if parent is None or parent.depth != e.depth - 1:
            raise InvariantError(f"broken graph walk at ({C},{D})")
        e = parent
    path.reverse()
    return path


def _check_domain(m: int, r: int) -> None:
    if not 7 <= r < m - 3:
        raise DomainError(f"needs 7 <= r < m-3, got m={m}, r={r}")


def represent_k1_k3(m: int, r: int, k1: int, k3: int) -> list[int] | None:
    """At most r-1 arguments for k1(m-2) + k3, or None in the exceptional region.

    The exceptional region is -5 <= k3 <= -1 with k1 <= |k3| - 1.
    """
    _check_domain(m, r)
    if not -5 <= k3 <= r - 6 or k1 < 0:
        raise ValueError(f"need k1 >= 0 and -5 <= k3 <= r-6, got k1={k1}, k3={k3}")
    if k3 < 0 and k1 <= -k3 - 1:
        return None
    if k1 * (m - 2) + k3 < 0:
        raise ValueError("k1(m-2) + k3 must be nonnegative")
    if k3 >= 0:
        return multiple_args(m, k1) + [1] * k3
    tri = triangular_neg(k3)
    if k1 >= tri:
        # P_m(k3) = (m-2) P_3(-k3) + k3
        return multiple_args(m, k1 - tri) + [k3]
    return walk_args(k1, k3)


def exceptional_parts(r: int, k1: int, k2: int, k3: int) -> tuple[list[int], list[int], int]:
    a = -k3 + 2 * k1
    if a <= 6:
        j = 0
    elif a <= 10:
        j = 1
    else:
        j = 2
    ones = [2] * (k1 - j) + [-1] * j + [1] * (r + k3 - 2 * k1 + 3 * j)
    return ones, [1] * (k2 - 1), j


def represent_exceptional(m: int, r: int, k1: int, k2: int, k3: int) -> ShapedRepresentation:
    """k1(m-2) + r*k2 + k3 in the exceptional region, using k2 - 1 weight-r slots."""
    _check_domain(m, r)
    if not (-5 <= k3 <= -1 and 0 <= k1 <= -k3 - 1 and k2 >= 1):
        raise ValueError(f"outside the exceptional region: k1={k1}, k2={k2}, k3={k3}")
    ones, reps, j = exceptional_parts(r, k1, k2, k3)
    n = k1 * (m - 2) + r * k2 + k3
    return build(m, RepeatShape(r, r - 1, k2 - 1), ones, reps, n, f"exceptional j={j}")


def _k2_zero(m: int, r: int, k1: int, k3: int) -> tuple[list[int], list[int], str]:
    """k1(m-2) + k3 for 1 <= k1 <= |k3|-1 with no r-multiple to lean on."""
    s, t = divmod(m, r)
    a = -k3
    if t + k3 - 2 * k1 >= 0:
        return [2] * (k1 - 1) + [1] * (t + k3 - 2 * k1), [1] * s, "k2=0 direct"
    if t <= a + k1:
        # j in (0, 1) is not always enough (m=16, r=7, n=51 needs j=2)
        for j in range(k1):
            if (
                t + k3 - 2 * k1 + r + 3 * j >= 0
                and k1 - j - 1 >= 0
                and t + k3 - k1 + 3 * j <= 0
            ):
                ones = [2] * (k1 - j - 1) + [-1] * j + [1] * (t + k3 - 2 * k1 + 3 * j + r)
                return ones, [1] * (s - 1), f"k2=0 split j={j}"
        raise InvariantError(f"no admissible j for m={m} r={r} k1={k1} k3={k3}")
    # a + k1 < t < a + 2*k1
    tp = t - k1 - a
    delta = 1 if tp == k1 - 1 else 0
    j = tp - delta
    ones = [-1] * (k1 - 1 - j) + [2] * j + [1] * (t - 3 - 3 * j + k1 + k3)
    return ones, [1] * s, f"k2=0 t' j={j}"


def large_shape(m: int, r: int) -> RepeatShape:
    return RepeatShape(r, r - 1, -(-(m - 3) // r) - 1)


def split_large(m: int, r: int, n: int) -> tuple[int, int, int]:
    """n = (m-2)k1 + r*k2 + k3 with -5 <= k3 <= r-6 and k2 within the shape.

    The residue of n mod m-2 is taken in [-5, r*(ell2+1) - 6].  When r divides
    m-3 that window misses exactly the residue m-8, which comes back as
    k2 = (m-3)/r, k3 = -5, one more weight-r slot than the shape has.
    """
    ell2 = large_shape(m, r).ell2
    k1, rho = divmod(n, m - 2)
    if rho > r * (ell2 + 1) - 6 and rho - (m - 2) >= -5:
        rho -= m - 2
        k1 += 1
    k2, k3 = divmod(rho + 5, r)
    return k1, k2, k3 - 5


def represent_repeat_large(m: int, r: int, n: int) -> ShapedRepresentation:
    _check_domain(m, r)
    if n < 1:
        raise ValueError("n must be positive")
    shape = large_shape(m, r)
    k1, k2, k3 = split_large(m, r, n)

    if k2 > shape.ell2:
        # r | m-3 and n = (k1+1)(m-2) - 6 = (k1-1)(m-2) + P_m(2) + (r-7) + r(s-1)
        s = (m - 3) // r
        if k1 == 0:
            return build(m, shape, [1] * (r - 5), [1] * (s - 1), n, "k2=s m-8")
        ones = multiple_args(m, k1 - 1) + [2] + [1] * (r - 7)
        return build(m, shape, ones, [1] * (s - 1), n, "k2=s fold")

    args = represent_k1_k3(m, r, k1, k3)
    if args is not None:
        return build(m, shape, args, [1] * k2, n, "graph")
    if k2 >= 1:
        ones, reps, j = exceptional_parts(r, k1, k2, k3)
        return build(m, shape, ones, reps, n, f"exceptional j={j}")
    ones, reps, how = _k2_zero(m, r, k1, k3)
    return build(m, shape, ones, reps, n, how)


def guy_lower(m: int, r: int, ell1: int) -> int:
    """Lower bound on ell for (1^ell1, r^(ell-ell1)) from representing m-4.

    Below m-3 the only generalized m-gonal numbers are 0 and 1, so m-4 needs
    ell1 + r*ell2 >= m-4.  For ell1 = r-1 this is ceil((m-3)/r) + r - 2.
    """
    if r < 1 or ell1 < 0:
        raise ValueError("need r >= 1, ell1 >= 0")
    if r == 1:
        return max(m - 4, 0)
    need = m - 4 - ell1
    return ell1 + max(0, -(-need // r))
