"""Brute-force ground truth for weighted polygonal forms.

Two independent routes are provided. ``reach_table`` is a sumset DP on
big-int bitsets; ``find_representation`` is a memoized depth-first search.
Tests check each against the other.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ResourceLimitError
from .gonal import RepeatShape, Representation, WeightedForm, _pm, values_upto

DEFAULT_MAX_BYTES = 512 * 2**20


def _slot_values(m: int, weight: int, bound: int) -> list[int]:
    return [weight * v for v, _ in values_upto(m, bound // weight)]


def _estimate_bytes(bound: int) -> int:
    # two live bitsets plus a shifted temporary
    return 3 * ((bound + 1 + 7) // 8) + 1024


@dataclass(frozen=True)
class ReachabilityTable:
    """Which n in [0, bound] the form represents, stored as an int bitset."""

    form: WeightedForm
    bound: int
    bits: int

    def __getitem__(self, n: int) -> bool:
        if not 0 <= n <= self.bound:
            raise IndexError(n)
        return bool(self.bits >> n & 1)

    def __iter__(self) -> Iterator[bool]:
        return (bool(self.bits >> n & 1) for n in range(self.bound + 1))

    def represented(self) -> list[int]:
        return [n for n in range(self.bound + 1) if self.bits >> n & 1]

    def missing(self) -> list[int]:
        return [n for n in range(self.bound + 1) if not self.bits >> n & 1]

    def is_full(self) -> bool:
        return self.bits == (1 << (self.bound + 1)) - 1


def _add_slot(bits: int, values: Iterable[int], mask: int) -> int:
    out = 0
    for v in values:
        out |= bits << v
    return out & mask


def reach_table(
    form: WeightedForm, bound: int, *, max_bytes: int = DEFAULT_MAX_BYTES
) -> ReachabilityTable:
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    need = _estimate_bytes(bound)
    if need > max_bytes:
        raise ResourceLimitError(need, max_bytes)
    mask = (1 << (bound + 1)) - 1
    bits = 1
    for a in form.weights:
        bits = _add_slot(bits, _slot_values(form.m, a, bound), mask)
    return ReachabilityTable(form, bound, bits)


class _Searcher:
    """Depth-first search over slots with a per-form memo of dead ends."""

    def __init__(self, form: WeightedForm):
        self.form = form
        self.m = form.m
        self.dead: set[tuple[int, int]] = set()
        # dp[j][rem] count cache for count_reps
        self.counts: dict[tuple[int, int], int] = {}

    def _options(self, slot: int, rem: int) -> list[tuple[int, int]]:
        a = self.form.weights[slot]
        return [(a * v, x) for v, x in values_upto(self.m, rem // a)]

    def solve(self, n: int) -> list[int] | None:
        args: list[int] = []
        if self._dfs(0, n, args):
            return args
        return None

    def _dfs(self, slot: int, rem: int, args: list[int]) -> bool:
        if slot == len(self.form.weights):
            return rem == 0
        if (slot, rem) in self.dead:
            return False
        for v, x in self._options(slot, rem):
            args.append(x)
            if self._dfs(slot + 1, rem - v, args):
                return True
            args.pop()
        self.dead.add((slot, rem))
        return False

    def count(self, slot: int, rem: int) -> int:
        if slot == len(self.form.weights):
            return 1 if rem == 0 else 0
        key = (slot, rem)
        hit = self.counts.get(key)
        if hit is not None:
            return hit
        a = self.form.weights[slot]
        total = 0
        k = 0
        # every signed argument counted separately, duplicates included
        while True:
            hi = a * _pm(self.m, k)
            lo = a * _pm(self.m, -k)
            if hi > rem and lo > rem:
                break
            if hi <= rem:
                total += self.count(slot + 1, rem - hi)
            if k and lo <= rem:
                total += self.count(slot + 1, rem - lo)
            k += 1
        self.counts[key] = total
        return total


@lru_cache(maxsize=256)
def _searcher(form: WeightedForm) -> _Searcher:
    return _Searcher(form)


def find_representation(form: WeightedForm, n: int) -> Representation | None:
    """First representation of n in (slot order, values_upto order), or None."""
    if n < 0:
        raise ValueError("target must be nonnegative")
    limit = sys.getrecursionlimit()
    if limit < len(form.weights) + 100:
        sys.setrecursionlimit(len(form.weights) + 100)
    args = _searcher(form).solve(n)
    if args is None:
        return None
    rep = Representation(form, tuple(args))
    if rep.value != n:
        raise AssertionError("search returned a wrong representation")
    return rep


def count_reps(form: WeightedForm, n: int) -> int:
    """Number of x in Z^len(form) with form(x) == n."""
    if n < 0:
        raise ValueError("target must be nonnegative")
    return _searcher(form).count(0, n)


@dataclass(frozen=True)
class GapReport:
    form: WeightedForm
    bound: int
    first_gap: int | None
    gap_count: int

    @property
    def universal_to_bound(self) -> bool:
        return self.first_gap is None


def gap_report(table: ReachabilityTable) -> GapReport:
    inv = ~table.bits & ((1 << (table.bound + 1)) - 1)
    if inv == 0:
        return GapReport(table.form, table.bound, None, 0)
    first = (inv & -inv).bit_length() - 1
    return GapReport(table.form, table.bound, first, bin(inv).count("1"))


def first_gap(form: WeightedForm, bound: int, **kw) -> GapReport:
    return gap_report(reach_table(form, bound, **kw))


@dataclass(frozen=True)
class EmpiricalMin:
    """Smallest slot count universal up to ``bound``. Not a proof beyond it."""

    m: int
    r: int
    ell1: int
    bound: int
    ell: int | None
    label: str = "empirical"

    @property
    def shape(self) -> RepeatShape | None:
        if self.ell is None:
            return None
        if self.r == 1:
            return RepeatShape(1, self.ell, 0)
        return RepeatShape(self.r, self.ell1, self.ell - self.ell1)


def grow_family(m: int, r: int, ell1: int, bound: int, ell_max: int):
    """Yield (ell, bits) for the family (1^ell1, r^ell2), ell2 = 0, 1, ...

    The bits are built incrementally; each step appends one slot.  For r == 1
    the family is just 1^ell and ell1 is ignored.
    """
    if r == 1:
        ell1 = 0
    mask = (1 << (bound + 1)) - 1
    bits = 1
    unit = _slot_values(m, 1, bound)
    for ell in range(1, ell_max + 1):
        weight = 1 if ell <= ell1 or r == 1 else r
        vals = unit if weight == 1 else _slot_values(m, weight, bound)
        bits = _add_slot(bits, vals, mask)
        if ell >= max(ell1, 1):
            yield ell, bits


def empirical_min_len(
    m: int, r: int, ell1: int, bound: int, ell_max: int, *, max_bytes: int = DEFAULT_MAX_BYTES
) -> EmpiricalMin:
    """Smallest ell <= ell_max with (1^ell1, r^(ell-ell1)) hitting every 1..bound.

    Every ell is checked, bottom up; appending a slot never shrinks the
    reachable set, so the first hit is the minimum.
    """
    if bound < 1 or ell_max < 1:
        raise ValueError("bound and ell_max must be >= 1")
    need = _estimate_bytes(bound)
    if need > max_bytes:
        raise ResourceLimitError(need, max_bytes)
    full = (1 << (bound + 1)) - 1
    for ell, bits in grow_family(m, r, ell1, bound, ell_max):
        if bits == full:
            return EmpiricalMin(m, r, 0 if r == 1 else ell1, bound, ell)
    return EmpiricalMin(m, r, 0 if r == 1 else ell1, bound, None)


def family_form(m: int, r: int, ell1: int, ell: int) -> WeightedForm:
    if r == 1:
        return WeightedForm(m, (1,) * ell)
    return RepeatShape(r, ell1, ell - ell1).form(m)


def quaternary_reach(bound: int, box: int | None = None) -> int:
    """Bitset of values <= bound hit by Q(x) = sum_{i<=j} x_i x_j.

    Sieve: every (x2, x3, x4) in a box, with x1 swept over its full range.
    Starts from a small box and widens until every n <= bound is covered or
    the box reaches the a-priori limit |x_i| <= isqrt(2*bound) + 1.
    """
    import numpy as np
    from math import isqrt

    limit = isqrt(2 * bound) + 1
    box = box or 4
    hit = np.zeros(bound + 1, dtype=bool)
    done = -1
    x1 = np.arange(-limit, limit + 1, dtype=np.int64)
    while True:
        b = min(box, limit)
        rng = range(-b, b + 1)
        for x2 in rng:
            for x3 in rng:
                for x4 in rng:
                    if max(abs(x2), abs(x3), abs(x4)) <= done:
                        continue
                    s = x2 + x3 + x4
                    q3 = x2 * x2 + x3 * x3 + x4 * x4 + x2 * x3 + x2 * x4 + x3 * x4
                    q = x1 * x1 + x1 * s + q3
                    q = q[(q >= 0) & (q <= bound)]
                    hit[q] = True
        done = b
        if hit.all() or b >= limit:
            break
        box *= 2
    packed = np.packbits(hit, bitorder="little").tobytes()
    return int.from_bytes(packed, "little")
