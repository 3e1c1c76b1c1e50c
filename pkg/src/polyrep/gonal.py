"""Generalized polygonal numbers and weighted sums of them.

All arithmetic is on Python ints, so nothing overflows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import count
from math import isqrt
from typing import Sequence


def check_order(m: int) -> int:
    """Validate a polygon order and return it."""
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError(f"order must be an int, got {type(m).__name__}")
    if m < 3:
        raise ValueError(f"order must be >= 3, got {m}")
    return m


def eval_pm(m: int, x: int) -> int:
    """The x-th generalized m-gonal number ((m-2)x^2 - (m-4)x)/2."""
    check_order(m)
    return ((m - 2) * x * x - (m - 4) * x) // 2


def _pm(m: int, x: int) -> int:
    # unchecked fast path for inner loops
    return ((m - 2) * x * x - (m - 4) * x) // 2


def signed_order():
    """Yield 0, 1, -1, 2, -2, ... forever."""
    yield 0
    for k in count(1):
        yield k
        yield -k


@lru_cache(maxsize=4096)
def _values_upto(m: int, bound: int) -> tuple[tuple[int, int], ...]:
    best: dict[int, int] = {}
    k = 0
    while True:
        hi = _pm(m, k)
        lo = _pm(m, -k)
        if hi > bound and lo > bound:
            break
        # positive argument first: ties in |x| go to the positive one
        for x, v in ((k, hi), (-k, lo)):
            if v <= bound and v not in best:
                best[v] = x
        k += 1
    return tuple(sorted(best.items()))


def values_upto(m: int, bound: int) -> list[tuple[int, int]]:
    """All distinct values P_m(x) <= bound, increasing, as (value, x) pairs.

    When two arguments give the same value (only for m = 3, 4) the one with
    the smaller absolute value is kept, ties going to the positive one.
    """
    check_order(m)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    return list(_values_upto(m, bound))


def invert_pm(m: int, v: int) -> set[int]:
    """Every integer x with P_m(x) == v (possibly empty)."""
    check_order(m)
    if v < 0:
        raise ValueError("value must be nonnegative")
    b = m - 4
    disc = b * b + 8 * (m - 2) * v
    root = isqrt(disc)
    if root * root != disc:
        return set()
    den = 2 * (m - 2)
    out = set()
    for num in (b + root, b - root):
        if num % den == 0:
            out.add(num // den)
    return out


@dataclass(frozen=True)
class WeightedForm:
    """The weighted sum  sum_j a_j * P_m(x_j)."""

    m: int
    weights: tuple[int, ...]

    def __post_init__(self):
        check_order(self.m)
        w = tuple(int(a) for a in self.weights)
        if not w:
            raise ValueError("a form needs at least one slot")
        if any(a < 1 for a in w):
            raise ValueError(f"weights must be positive, got {w}")
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return len(self.weights)

    def __call__(self, args: Sequence[int]) -> int:
        return eval_form(self, args)

    def appended(self, *weights: int) -> WeightedForm:
        return WeightedForm(self.m, self.weights + tuple(weights))

    def __str__(self) -> str:
        return f"P_{self.m}[{','.join(map(str, self.weights))}]"


def eval_form(form: WeightedForm, args: Sequence[int]) -> int:
    if len(args) != len(form.weights):
        raise ValueError(
            f"form has {len(form.weights)} slots but got {len(args)} arguments"
        )
    m = form.m
    return sum(a * _pm(m, x) for a, x in zip(form.weights, args))


@dataclass(frozen=True)
class RepeatShape:
    """Weight vector (1,...,1, r,...,r) with ell1 ones and ell2 copies of r."""

    r: int
    ell1: int
    ell2: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if self.ell1 < 0 or self.ell2 < 0:
            raise ValueError("slot counts must be nonnegative")
        if self.ell1 + self.ell2 < 1:
            raise ValueError("shape needs at least one slot")

    @property
    def ell(self) -> int:
        return self.ell1 + self.ell2

    @property
    def weights(self) -> tuple[int, ...]:
        return (1,) * self.ell1 + (self.r,) * self.ell2

    def form(self, m: int) -> WeightedForm:
        return WeightedForm(m, self.weights)


@dataclass(frozen=True)
class Representation:
    """An argument vector together with the value it produces under ``form``."""

    form: WeightedForm
    args: tuple[int, ...]
    value: int = field(default=-1)

    def __post_init__(self):
        args = tuple(int(x) for x in self.args)
        object.__setattr__(self, "args", args)
        actual = eval_form(self.form, args)
        if self.value == -1:
            object.__setattr__(self, "value", actual)
        elif actual != self.value:
            raise ValueError(f"arguments evaluate to {actual}, not {self.value}")

    def verify(self) -> bool:
        return eval_form(self.form, self.args) == self.value

    def parts(self) -> list[int]:
        """Gonal values of each slot, weight not applied."""
        return [_pm(self.form.m, x) for x in self.args]


def triangular_neg(x: int) -> int:
    """P_3(-x), the coefficient in P_m(x) = (m-2) * P_3(-x) + x."""
    return (x * x - x) // 2
