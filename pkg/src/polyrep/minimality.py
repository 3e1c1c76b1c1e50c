"""Closed-form minimal lengths, oracle cross-checks and lower-bound witnesses."""

from __future__ import annotations

from dataclasses import dataclass

from . import tables
from .constructive.large import guy_lower
from .constructive.small import small_domain_ok, small_total
from .gonal import RepeatShape, check_order
from .oracle import grow_family, reach_table


@dataclass(frozen=True)
class TheoremValue:
    quantity: str
    m: int
    r: int
    ell1: int
    value: int | None
    provenance: str
    domain_ok: bool

    def __post_init__(self):
        if not self.domain_ok and self.value is not None:
            raise ValueError("a value outside the domain must be absent")


def ell_theorem(m: int) -> TheoremValue:
    """Shortest universal sum of m-gonal numbers with all weights 1."""
    check_order(m)
    if m >= 10:
        value, why = m - 4, "m >= 10: m-4"
    elif m in (3, 5, 6):
        value, why = 3, "m in {3,5,6}: 3"
    elif m in (4, 8):
        value, why = 4, "m in {4,8}: 4"
    else:
        return TheoremValue("ell_m", m, 1, 0, None, "m in {7,9}: not covered", False)
    return TheoremValue("ell_m", m, 1, 0, value, why, True)


def ell_repeat_theorem(m: int, r: int, ell1: int) -> TheoremValue:
    """Shortest universal (1^(r-1), r^ell2) form, where one is known in closed form."""
    check_order(m)
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if ell1 != r - 1:
        raise ValueError(f"only ell1 = r-1 is covered, got r={r}, ell1={ell1}")
    if r == 1:
        return ell_theorem(m)
    q = f"ell_m,{r},{r - 1}"
    if r >= 7:
        if r < m - 3:
            return TheoremValue(q, m, r, ell1, guy_lower(m, r, ell1), "ceil((m-3)/r)+r-2", True)
        return TheoremValue(q, m, r, ell1, None, "needs r < m-3", False)
    why = {
        2: "floor(m/2), m >= 14",
        3: "m-2 (m != 2 mod 3, m >= 10) or (2m-4)/3 (m = 2 mod 3, m >= 14)",
        4: "ceil((m-2)/4)+2, m >= 62",
        5: "ceil((m-3)/5)+3, m >= 78",
        6: "ceil((m-3)/6)+4, m >= 93",
    }[r]
    if not small_domain_ok(m, r):
        return TheoremValue(q, m, r, ell1, None, why, False)
    return TheoremValue(q, m, r, ell1, small_total(m, r), why, True)


def gamma_lower_bound(m: int) -> TheoremValue:
    """3m-12 unless m = 2 mod 3, then 2m-9; from the r = 3 lower-bound argument."""
    check_order(m)
    if m < 14:
        return TheoremValue("gamma_m lower bound", m, 3, 2, None, "needs m >= 14", False)
    value = 2 * m - 9 if m % 3 == 2 else 3 * m - 12
    return TheoremValue("gamma_m lower bound", m, 3, 2, value, "3m-12 or 2m-9", True)


_REFERENCE_GAMMA = {3: 8, 6: 8, 4: 15, 5: 109, 8: 60}


def reference_gamma(m: int) -> int | None:
    """Literature values; reference only, nothing here checks them."""
    return _REFERENCE_GAMMA.get(m)


def default_bound(m: int) -> int:
    return max(20_000, 6 * (m - 2) ** 2)


def expected_witness(m: int, r: int) -> int | None:
    """The integer the lower-bound argument says is missed at one slot fewer."""
    if r == 1:
        return m - 4 if m >= 10 else None
    if r >= 7:
        return m - 4
    if r == 2:
        return m - 2
    if r == 3:
        return gamma_lower_bound(m).value if m >= 14 else 3 * m - 12
    for rec in tables.records("guy"):
        if rec.int("r") == r and m % r in rec.ints("mod"):
            return rec.lin("n")(m)
    return None


@dataclass(frozen=True)
class CrossCheck:
    m: int
    r: int
    ell1: int
    theorem: int | None
    domain_ok: bool
    empirical: int | None
    bound: int
    witness: int | None
    first_gap: int | None
    witness_unrepresented: bool | None
    status: str

    @property
    def witness_ok(self) -> bool:
        return bool(self.witness_unrepresented)


def _first_zero(bits: int, bound: int) -> int | None:
    inv = ~bits & ((1 << (bound + 1)) - 1)
    if inv == 0:
        return None
    return (inv & -inv).bit_length() - 1


def cross_check(
    m: int, r: int = 1, ell1: int | None = None, bound: int | None = None, ell_max: int | None = None
) -> CrossCheck:
    """Theorem value against the oracle, plus the gap one slot below it.

    Out of the proved range there is no theorem value; the empirical minimum
    is still reported and the status is EMPIRICAL-ONLY.
    """
    if ell1 is None:
        ell1 = 0 if r == 1 else r - 1
    tv = ell_repeat_theorem(m, r, ell1)
    bound = default_bound(m) if bound is None else bound
    guy = guy_lower(m, r, ell1)
    if ell_max is None:
        ell_max = tv.value + 1 if tv.domain_ok else max(2 * guy, guy + 8, 8)
    full = (1 << (bound + 1)) - 1
    empirical = None
    layers = {}
    for ell, bits in grow_family(m, r, ell1, bound, ell_max):
        layers[ell] = bits
        if bits == full:
            empirical = ell
            break
    probe = tv.value if tv.domain_ok else empirical
    first_gap = witness_missing = None
    witness = expected_witness(m, r) if tv.domain_ok else None
    below = None if probe is None else layers.get(probe - 1)
    if below is not None:
        first_gap = _first_zero(below, bound)
        if witness is not None and witness <= bound:
            witness_missing = not (below >> witness) & 1
    if not tv.domain_ok:
        status = "EMPIRICAL-ONLY"
    else:
        status = "PASS" if empirical == tv.value else "FAIL"
    return CrossCheck(
        m, r, ell1, tv.value, tv.domain_ok, empirical, bound, witness, first_gap,
        witness_missing, status,
    )


@dataclass(frozen=True)
class WitnessReport:
    m: int
    shape: RepeatShape
    target: int
    represented_below: bool
    target_unrepresented: bool
    bound: int
    first_gap: int | None

    @property
    def valid(self) -> bool:
        return self.represented_below and self.target_unrepresented


def gamma_witness(m: int, bound: int | None = None, target: int | None = None) -> WitnessReport:
    """Check that (1^2, 3^(ell-3)) with ell one below the minimum misses ``target``
    while hitting every 1..target-1.

    The target defaults to the stated lower bound for gamma_m.  For m = 0 mod 3
    that integer is in fact represented and the first gap sits at 3m-10; the
    report carries the first gap so the discrepancy is visible.
    """
    lb = gamma_lower_bound(m)
    if not lb.domain_ok:
        raise ValueError(f"needs m >= 14, got {m}")
    target = lb.value if target is None else target
    bound = target if bound is None else bound
    if bound < target:
        raise ValueError(f"bound {bound} is below the target {target}")
    shape = RepeatShape(3, 2, small_total(m, 3) - 1 - 2)
    table = reach_table(shape.form(m), bound)
    gap = _first_zero(table.bits, bound)
    below = all(table[n] for n in range(1, target))
    return WitnessReport(m, shape, target, below, not table[target], bound, gap)
