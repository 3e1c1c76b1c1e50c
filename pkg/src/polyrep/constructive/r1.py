"""Every positive integer as a sum of m-4 generalized m-gonal numbers (m >= 10)."""

from __future__ import annotations

from functools import lru_cache

from .. import tables
from ..errors import DomainError, InvariantError
from ..gonal import Representation, WeightedForm
from .quaternary import multiple_args


@lru_cache(maxsize=1)
def _certificates() -> dict[tuple[int, int], tuple[int, ...]]:
    return {(r.int("m"), r.int("n")): tuple(r.ints("args")) for r in tables.records("r1cert")}


def r1_branch(m: int, n: int) -> tuple[str, list[int]]:
    """Which branch of the ladder handles n, and the (unpadded) arguments."""
    k1, k2 = divmod(n, m - 2)
    if k2 <= m - 9:
        return "direct", multiple_args(m, k1) + [1] * k2
    if k2 == m - 3:
        return "direct", multiple_args(m, k1) + [-1]
    k = m - 2 - k2  # 2 <= k <= 6
    if m >= k + 9:
        if k1 >= k - 1:
            # (m-2)(k1-k+1) + k * P_m(-1)
            return "shift", multiple_args(m, k1 - k + 1) + [-1] * k
        if m >= 2 + 2 * k1 + k:
            # k1 copies of P_m(2) = m, the rest ones
            return "small-k1", [2] * k1 + [1] * (m - 2 - 2 * k1 - k)
    else:
        tri = (k * k + k) // 2
        if k1 >= tri - 1:
            # (m-2)(k1+1-tri) + P_m(-k)
            return "neg-k", multiple_args(m, k1 + 1 - tri) + [-k]
    cert = _certificates().get((m, n))
    if cert is None:
        raise InvariantError(f"no stored certificate for m={m}, n={n}")
    return "table", list(cert)


def represent_r1(m: int, n: int) -> Representation:
    if m < 10:
        raise DomainError(f"the r=1 construction needs m >= 10, got m={m}")
    if n < 1:
        raise ValueError("n must be positive")
    _, args = r1_branch(m, n)
    size = m - 4
    if len(args) > size:
        raise InvariantError(f"m={m}, n={n}: {len(args)} parts exceed {size}")
    args = args + [0] * (size - len(args))
    rep = Representation(WeightedForm(m, (1,) * size), tuple(args))
    if rep.value != n:
        raise InvariantError(f"m={m}: certificate evaluates to {rep.value}, not {n}")
    return rep
