from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvariantError
from ..gonal import RepeatShape, WeightedForm, _pm


@dataclass(frozen=True)
class ShapedRepresentation:
    """A representation under the shape (1^ell1, r^ell2).

    ``method`` names the branch of the construction that produced it and
    ``regime`` is ``"proved"`` for the constructive paths and ``"empirical"``
    when a search filled in.
    """

    m: int
    shape: RepeatShape
    ones_args: tuple[int, ...]
    rep_args: tuple[int, ...]
    value: int
    method: str = ""
    regime: str = "proved"

    @property
    def form(self) -> WeightedForm:
        return self.shape.form(self.m)

    @property
    def args(self) -> tuple[int, ...]:
        return self.ones_args + self.rep_args

    def evaluate(self) -> int:
        m = self.m
        return sum(_pm(m, x) for x in self.ones_args) + self.shape.r * sum(
            _pm(m, x) for x in self.rep_args
        )

    def verify(self) -> bool:
        return (
            len(self.ones_args) <= self.shape.ell1
            and len(self.rep_args) <= self.shape.ell2
            and self.evaluate() == self.value
        )

    def parts(self) -> list[tuple[int, int]]:
        """(weight, gonal value) for every nonzero slot."""
        m = self.m
        out = [(1, _pm(m, x)) for x in self.ones_args]
        out += [(self.shape.r, _pm(m, x)) for x in self.rep_args]
        return [p for p in out if p[1]]


def build(
    m: int,
    shape: RepeatShape,
    ones: list[int],
    reps: list[int],
    n: int,
    method: str,
    regime: str = "proved",
) -> ShapedRepresentation:
    """Pad to the shape, then check lengths and value. Always on."""
    if len(ones) > shape.ell1 or len(reps) > shape.ell2:
        raise InvariantError(
            f"{method}: m={m} n={n} uses {len(ones)}+{len(reps)} slots, "
            f"shape allows {shape.ell1}+{shape.ell2}"
        )
    ones_t = tuple(ones) + (0,) * (shape.ell1 - len(ones))
    reps_t = tuple(reps) + (0,) * (shape.ell2 - len(reps))
    rep = ShapedRepresentation(m, shape, ones_t, reps_t, n, method, regime)
    if rep.evaluate() != n:
        raise InvariantError(f"{method}: m={m} certificate evaluates to {rep.evaluate()}, not {n}")
    return rep
