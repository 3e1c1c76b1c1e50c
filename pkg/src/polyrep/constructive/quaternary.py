"""The universal quaternary form and the hyperplane trick.

On the hyperplane x1 + ... + x5 = 0 the sum of five m-gonal numbers collapses
to (m-2) * Q(x1, x2, x3, x4) with Q(x) = sum_{i<=j} x_i x_j, and Q is
universal. So every multiple of m-2 is a sum of five generalized m-gonal
numbers.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import isqrt

import numpy as np

from ..errors import InvariantError
from ..gonal import _pm, check_order


def quaternary(x: tuple[int, int, int, int]) -> int:
    """Q(x) = ((sum x)^2 + sum x^2) / 2."""
    s = sum(x)
    return (s * s + sum(v * v for v in x)) // 2


def _shell(radius: int):
    """Triples with max |entry| == radius, in (0, 1, -1, 2, -2, ...) product order."""
    if radius == 0:
        yield (0, 0, 0)
        return
    order = [0]
    for k in range(1, radius + 1):
        order += [k, -k]
    edge = [radius, -radius]
    for a, b in product(order, repeat=2):
        for c in order if max(abs(a), abs(b)) == radius else edge:
            yield a, b, c


# discriminants below this are handled exactly in int64 / float64
_NUMPY_LIMIT = 1 << 50


def _shell_array(radius: int) -> np.ndarray:
    """The triples of ``_shell(radius)`` as an (N, 3) array, same order."""
    order = np.array([0] + [v for k in range(1, radius + 1) for v in (k, -k)], dtype=np.int64)
    size = len(order)
    idx = np.arange(size)
    edge = np.array([size - 2, size - 1])
    i, j = np.meshgrid(idx, idx, indexing="ij")
    i, j = i.ravel(), j.ravel()
    outer = np.maximum(abs(order[i]), abs(order[j])) == radius
    parts = [
        np.stack([np.repeat(i[outer], size), np.repeat(j[outer], size), np.tile(idx, outer.sum())]),
        np.stack([np.repeat(i[~outer], 2), np.repeat(j[~outer], 2), np.tile(edge, (~outer).sum())]),
    ]
    key = np.concatenate(parts, axis=1)
    key = key[:, np.argsort((key[0] * size + key[1]) * size + key[2], kind="stable")]
    return order[key].T


def _shell_terms(radius: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    t = _shell_array(radius)
    s = t.sum(axis=1)
    q3 = (t * t).sum(axis=1) + t[:, 0] * t[:, 1] + t[:, 0] * t[:, 2] + t[:, 1] * t[:, 2]
    return t, s, q3


# shells up to this radius are kept (a few MB); larger ones are rebuilt
_cached_terms = lru_cache(maxsize=None)(_shell_terms)
_CACHE_RADIUS = 48


def _solve_shell_numpy(n: int, radius: int) -> tuple[int, int, int, int] | None:
    t, s, q3 = _cached_terms(radius) if radius <= _CACHE_RADIUS else _shell_terms(radius)
    disc = s * s - 4 * (q3 - n)
    root = np.sqrt(np.maximum(disc, 0).astype(np.float64)).round().astype(np.int64)
    hit = np.flatnonzero((disc >= 0) & (root * root == disc))
    if len(hit) == 0:
        return None
    k = hit[0]
    x2, x3, x4 = (int(v) for v in t[k])
    return (int(root[k]) - int(s[k])) // 2, x2, x3, x4


def solve_quaternary(n: int) -> tuple[int, int, int, int]:
    """Some x in Z^4 with Q(x) = n.

    Deterministic search: (x2, x3, x4) run through shells of growing sup-norm
    and within a shell through the product of (0, 1, -1, 2, -2, ...); x1 is
    the larger root of x1^2 + x1*(x2+x3+x4) + Q(0,x2,x3,x4) = n when that
    root is an integer.  Since Q(x) >= |x|^2 / 2 every solution lies in the
    box |x_i| <= isqrt(2n) + 1, so the search is exhaustive over that box.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    box = isqrt(2 * n) + 1
    for radius in range(box + 1):
        if 4 * n + 16 * radius * radius < _NUMPY_LIMIT and radius > 2:
            sol = _solve_shell_numpy(n, radius)
            if sol is not None:
                if quaternary(sol) != n:
                    raise InvariantError(f"quaternary solver produced {sol} for {n}")
                return sol
            continue
        for x2, x3, x4 in _shell(radius):
            s = x2 + x3 + x4
            q3 = x2 * x2 + x3 * x3 + x4 * x4 + x2 * x3 + x2 * x4 + x3 * x4
            disc = s * s - 4 * (q3 - n)
            if disc < 0:
                continue
            root = isqrt(disc)
            if root * root != disc:
                continue
            # disc = s^2 (mod 4), so root and s share parity
            x1 = (root - s) // 2
            sol = (x1, x2, x3, x4)
            if quaternary(sol) != n:
                raise InvariantError(f"quaternary solver produced {sol} for {n}")
            return sol
    raise InvariantError(f"no solution of Q(x) = {n} in the box |x_i| <= {box}")


def represent_multiple(m: int, k: int) -> tuple[int, int, int, int, int]:
    """Five arguments summing to 0 whose m-gonal numbers add up to (m-2)k."""
    check_order(m)
    if k < 0:
        raise ValueError("k must be nonnegative")
    x1, x2, x3, x4 = solve_quaternary(k)
    x = (x1, x2, x3, x4, -(x1 + x2 + x3 + x4))
    if sum(_pm(m, v) for v in x) != (m - 2) * k:
        raise InvariantError(f"hyperplane identity failed for m={m}, k={k}")
    return x


def multiple_args(m: int, k: int) -> list[int]:
    """Arguments for (m-2)k, or nothing at all when k == 0."""
    if k == 0:
        return []
    return list(represent_multiple(m, k))
