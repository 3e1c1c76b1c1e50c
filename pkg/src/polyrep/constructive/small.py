"""Repeated gonal numbers with 2 <= r <= 6 under the shape (1^(r-1), r^ell2).

The weight-r slots carry r(m-2)k1 through the hyperplane identity; what is
left over is smaller than r(m-2) and is handled per r.  Residues that the
case analysis leaves to a finite check are settled by the oracle and cached.
"""

from __future__ import annotations

from functools import lru_cache

from .. import tables
from ..errors import DomainError, InvariantError
from ..gonal import RepeatShape, _pm
from ..oracle import find_representation
from .large import represent_k1_k3
from .quaternary import multiple_args
from .r1 import represent_r1
from .shaped import ShapedRepresentation, build


def small_domain_ok(m: int, r: int) -> bool:
    if r == 2:
        return m >= 14
    if r == 3:
        return m >= 14 or (m >= 10 and m % 3 != 2)
    return {4: 62, 5: 78, 6: 93}.get(r, 10**18) <= m


def small_total(m: int, r: int) -> int:
    """Length of the shortest universal (1^(r-1), r^ell2) form on the domain."""
    if r == 2:
        return m // 2
    if r == 3:
        return m - 2 if m % 3 != 2 else (2 * m - 4) // 3
    if r == 4:
        return -(-(m - 2) // 4) + 2
    if r == 5:
        return -(-(m - 3) // 5) + 3
    if r == 6:
        return -(-(m - 3) // 6) + 4
    raise DomainError(f"r must be in 2..6, got {r}")


def small_shape(m: int, r: int) -> RepeatShape:
    return RepeatShape(r, r - 1, small_total(m, r) - (r - 1))


def _check_domain(m: int, r: int) -> None:
    if r not in (2, 3, 4, 5, 6):
        raise DomainError(f"r must be in 2..6, got {r}")
    if not small_domain_ok(m, r):
        raise DomainError(
            f"m={m} is outside the proved range for r={r}; use the oracle instead"
        )


def _split(rep_args: tuple[int, ...], ell1: int) -> tuple[list[int], list[int]]:
    return list(rep_args[:ell1]), list(rep_args[ell1:])


RESIDUAL_SPAN = 16


@lru_cache(maxsize=4096)
def _residual(m: int, r: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    shape = small_shape(m, r)
    rep = find_representation(shape.form(m), n)
    if rep is None:
        return None
    ones, reps = _split(rep.args, shape.ell1)
    return tuple(ones), tuple(reps)


def _oracle(m: int, r: int, n: int, why: str) -> ShapedRepresentation:
    # residual cases all sit below a few multiples of r(m-2)
    if n > RESIDUAL_SPAN * r * (m - 2):
        raise InvariantError(f"m={m} r={r}: no branch covers n={n} ({why})")
    hit = _residual(m, r, n)
    if hit is None:
        raise InvariantError(f"m={m} r={r}: {n} is not represented ({why})")
    return build(m, small_shape(m, r), list(hit[0]), list(hit[1]), n, f"oracle {why}")


@lru_cache(maxsize=4096)
def _units(m: int, count: int, s: int) -> tuple[int, ...] | None:
    """At most ``count`` unweighted arguments for s, if any."""
    if count == 0:
        return () if s == 0 else None
    rep = find_representation(RepeatShape(1, count, 0).form(m), s)
    return None if rep is None else rep.args


# r = 2


def _table1_rows(m: int, n: int):
    for rec in tables.records("r2case"):
        lo, hi = rec.span("n")
        if not lo(m) <= n <= hi(m):
            continue
        parity = rec["parity"]
        if parity == "odd" and m % 2 == 0 or parity == "even" and m % 2 == 1:
            continue
        steps = [] if rec["steps"] == "-" else rec.ints("steps")
        yield rec.ints("x1"), steps


def _r2_table(m: int, n: int, shape: RepeatShape) -> ShapedRepresentation | None:
    for x1s, steps in _table1_rows(m, n):
        for x1 in x1s:
            rest = n - _pm(m, x1) - 2 * sum(_pm(m, x) for x in steps)
            room = shape.ell2 - len(steps)
            if rest >= 0 and rest % 2 == 0 and rest // 2 <= room:
                return build(m, shape, [x1], steps + [1] * (rest // 2), n, "table r=2")
    return None


def _represent_r2(m: int, n: int) -> ShapedRepresentation:
    shape = small_shape(m, 2)
    ell = shape.ell
    k1, rho = divmod(n, 2 * (m - 2))
    k2, k3 = divmod(rho, 2)
    if k2 > m - 8:
        k1, k2 = k1 + 1, k2 - (m - 2)
    if 0 <= k2 <= ell - 6:
        return build(m, shape, [k3], multiple_args(m, k1) + [1] * k2, n, "r=2 direct")
    if k2 > 0:
        # trade one unit slot for P_m(-1) = m-3 or P_m(2) = m to fix parity
        j = -1 if (m - 3) % 2 == k3 else 2
        k = k2 + (k3 - _pm(m, j)) // 2
        if k >= 0:
            return build(m, shape, [j], multiple_args(m, k1) + [1] * k, n, "r=2 parity")
        args = represent_k1_k3(m, 7, k1, k)
        if args is not None:
            return build(m, shape, [j], args, n, "r=2 parity graph")
    else:
        args = represent_k1_k3(m, 7, k1, k2)
        if args is not None:
            return build(m, shape, [k3], args, n, "r=2 negative graph")
    hit = _r2_table(m, n, shape)
    if hit is not None:
        return hit
    return _oracle(m, 2, n, "r=2 residual")


# r = 3


_UNIT_PAIRS = ((0, 0), (1, 1), (-1, -1))


@lru_cache(maxsize=64)
def _k3_set(m: int) -> frozenset[int]:
    return frozenset(v for rec in tables.records("k3") for v in rec.values("n", m))


def _r3_base(m: int, v: int, budget: int) -> tuple[list[int], list[int]] | None:
    """v < 3(m-2) with two unit slots and ``budget`` weight-3 slots."""
    for x1 in (0, 1, -1, 2, -2, 3):
        for x2 in (0, 1, -1, 2, -2, 3):
            rest = v - _pm(m, x1) - _pm(m, x2)
            if rest < 0 or rest % 3:
                continue
            q = rest // 3
            # below m-2 the only gonal values are 0, 1 and m-3
            if q >= m - 3 and q - (m - 3) + 1 <= budget:
                return [x1, x2], [-1] + [1] * (q - (m - 3))
            if q <= budget:
                return [x1, x2], [1] * q
    return None


def _represent_r3(m: int, n: int) -> ShapedRepresentation:
    shape = small_shape(m, 3)
    if m % 3 != 2:
        q, rho = divmod(n, 3)
        reps = list(represent_r1(m, q).args) if q else []
        return build(m, shape, [1] * rho, reps, n, "r=3 units + r=1")

    ell2 = shape.ell2
    k1, k3 = divmod(n, 3 * (m - 2))
    if k3 not in _k3_set(m):
        base = _r3_base(m, k3, ell2 - 5 if k1 else ell2)
        if base is not None:
            ones, reps = base
            return build(m, shape, ones, multiple_args(m, k1) + reps, n, "r=3 base")
    else:
        # k3 = 3(j0(m-2) - k) + alpha, alpha from the unit pair
        for pair in _UNIT_PAIRS:
            alpha = _pm(m, pair[0]) + _pm(m, pair[1])
            if (k3 - alpha) % 3:
                continue
            t = (k3 - alpha) // 3
            for j0 in (0, 1):
                k = j0 * (m - 2) - t
                if 0 <= k <= 5:
                    args = represent_k1_k3(m, 7, k1 + j0, -k) if k else multiple_args(m, k1 + j0)
                    if args is not None and len(args) <= ell2:
                        return build(m, shape, list(pair), args, n, "r=3 K3 graph")
        if k3 == 3 * m - 22 and k1 >= 5:
            # 3((k1+1)(m-2) - 6) + 2 = 3(k1(m-2) - 5 + P_m(-1)) + 2
            args = represent_k1_k3(m, 7, k1, -5)
            if args is not None and len(args) + 1 <= ell2:
                return build(m, shape, [1, 1], args + [-1], n, "r=3 3m-22")
    lifted = _r3_lift(m, n, shape)
    if lifted is not None:
        return lifted
    return _oracle(m, 3, n, "r=3 residual")


def _r3_lift(m: int, n: int, shape: RepeatShape) -> ShapedRepresentation | None:
    """Pick the unit pair so (n - u)/3 = K(m-2) + c with -5 <= c <= 1, then six parts."""
    for x1 in (0, 1, -1, 2, -2):
        for x2 in (0, 1, -1, 2, -2):
            rest = n - _pm(m, x1) - _pm(m, x2)
            if rest < 0 or rest % 3:
                continue
            K, c = divmod(rest // 3, m - 2)
            if c > 1:
                K, c = K + 1, c - (m - 2)
            if c < -5:
                continue
            args = represent_k1_k3(m, 7, K, c)
            if args is not None and len(args) <= shape.ell2:
                return build(m, shape, [x1, x2], args, n, "r=3 lift")
    return None


# r = 4, 5, 6


@lru_cache(maxsize=64)
def _dispatch_rows(m: int, r: int) -> tuple[tuple[int, int, tuple[int, ...], int], ...]:
    out = []
    for rec in tables.records("dispatch"):
        if rec.int("r") != r:
            continue
        lo, hi = rec.span("n")
        out.append((lo(m), hi(m), tuple(rec.values("s", m)), rec.quotient("k2max", m)))
    return tuple(out)


def _pick_s(m: int, r: int, v: int, ell2: int) -> tuple[int, int, str] | None:
    """s represented by r-1 units with v - s = r*k2, k2 minimal; rows first."""
    for lo, hi, svals, k2max in _dispatch_rows(m, r):
        if not lo <= v <= hi:
            continue
        fits = [
            s for s in svals
            if s <= v and (v - s) % r == 0 and _units(m, r - 1, s) is not None
        ]
        if fits:
            s = max(fits)
            if (v - s) // r <= min(k2max, ell2):
                return s, (v - s) // r, "dispatch"
        break
    # the row has no usable s; scan every s of the right residue
    for k2 in range(min(ell2, v // r) + 1):
        if _units(m, r - 1, v - r * k2) is not None:
            return v - r * k2, k2, "widened"
    return None


def _represent_r456(m: int, r: int, n: int) -> ShapedRepresentation:
    shape = small_shape(m, r)
    ell2 = shape.ell2
    k1, v = divmod(n, r * (m - 2))
    pick = _pick_s(m, r, v, ell2)
    if pick is None:
        return _oracle(m, r, n, f"r={r} residual")
    s, k2, how = pick
    ones = list(_units(m, r - 1, s))
    if k1 == 0 or k2 <= ell2 - 5:
        return build(m, shape, ones, multiple_args(m, k1) + [1] * k2, n, f"r={r} {how}")
    # r(m-2)k1 + r k2 = r(m-2)(k1-k) + r k P_m(2) + r(k2-2k) P_m(1)
    k = min(5, k1)
    reps = multiple_args(m, k1 - k) + [2] * k + [1] * (k2 - 2 * k)
    return build(m, shape, ones, reps, n, f"r={r} {how} shift k={k}")


def represent_repeat_small(m: int, r: int, n: int) -> ShapedRepresentation:
    _check_domain(m, r)
    if n < 1:
        raise ValueError("n must be positive")
    if r == 2:
        return _represent_r2(m, n)
    if r == 3:
        return _represent_r3(m, n)
    return _represent_r456(m, r, n)
