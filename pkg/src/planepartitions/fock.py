"""Linear combinations of Young diagrams and the operators acting on them.

States are finitely supported maps from partitions to truncated q-series.
Three operators matter: the diagonal box-counting weight (multiplication by
q^size on each basis diagram), and the two interlacing transfer operators
that expand a diagram over everything interlacing above or below it.  Their
alternating product computes the plane-partition generating function, and
their commutation law is verified exactly at rational points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian

from .partitions import Partition, contains, interlaces, make_partition
from .qseries import QSeries


class FockState:
    """Finitely supported combination of basis diagrams at one truncation order.

    Diagrams whose coefficient is identically zero mod q^order are absent.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: dict[Partition, QSeries] | None = None):
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        self.order = order
        self.terms = dict(terms) if terms else {}

    def __eq__(self, other):
        if not isinstance(other, FockState):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        entries = ", ".join(f"{mu}: {s.coeffs}" for mu, s in sorted(self.terms.items()))
        return f"FockState(order={self.order}, {{{entries}}})"


def vacuum(order: int) -> FockState:
    """The state supported on the empty diagram with coefficient 1."""
    return FockState(order, {(): QSeries.one(order)})


def vacuum_amplitude(state: FockState) -> QSeries:
    """Coefficient of the empty diagram (zero series if absent)."""
    return state.terms.get((), QSeries.zero(state.order))


def apply_weight(state: FockState) -> FockState:
    """Scale each basis diagram by q^size; terms pushed past the order vanish."""
    terms = {}
    for mu, series in state.terms.items():
        shifted = series.shift(sum(mu))
        if not shifted.is_zero():
            terms[mu] = shifted
    return FockState(state.order, terms)


@lru_cache(maxsize=None)
def interlacings_above(mu: Partition, size_bound: int) -> tuple[Partition, ...]:
    """All nu interlacing above mu (nu over mu) with fewer than size_bound boxes.

    Row ranges are independent: nu_1 >= mu_1, and nu_(i+1) lies between
    mu_(i+1) and mu_i, so only the first row is unbounded and the size cap
    makes the expansion finite.
    """
    out = []
    if not mu:
        for v in range(size_bound):
            out.append((v,) if v else ())
        return tuple(out)
    finite = [range(mu[i], mu[i - 1] + 1) for i in range(1, len(mu))]
    finite.append(range(0, mu[-1] + 1))
    for combo in cartesian(*finite):
        rest = sum(combo)
        tail = combo[:-1] if combo[-1] == 0 else combo
        for first in range(mu[0], size_bound - rest):
            out.append((first,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def interlacings_below(mu: Partition) -> tuple[Partition, ...]:
    """All nu interlacing below mu (mu over nu); always a finite set."""
    if not mu:
        return ((),)
    ranges = [
        range((mu[i + 1] if i + 1 < len(mu) else 0), mu[i] + 1)
        for i in range(len(mu))
    ]
    out = []
    for combo in cartesian(*ranges):
        out.append(combo[:-1] if combo[-1] == 0 else combo)
    return tuple(out)


def _expand(state: FockState, neighbors) -> FockState:
    order = state.order
    acc: dict[Partition, list[int]] = {}
    for mu, series in state.terms.items():
        co = series.coeffs
        for nu in neighbors(mu):
            cur = acc.get(nu)
            if cur is None:
                acc[nu] = list(co)
            else:
                acc[nu] = [a + b for a, b in zip(cur, co)]
    terms = {}
    for nu, co in acc.items():
        if any(co):
            terms[nu] = QSeries._make(order, co)
    return FockState(order, terms)


def apply_raising(state: FockState) -> FockState:
    """Expand each diagram over everything interlacing above it (truncated)."""
    order = state.order
    return _expand(state, lambda mu: interlacings_above(mu, order))


def apply_lowering(state: FockState) -> FockState:
    """Expand each diagram over everything interlacing below it."""
    return _expand(state, interlacings_below)


def _descent_cost(mu: Partition) -> int:
    """Fewest boxes any interlacing descent from mu to the empty diagram weighs.

    The cheapest step below mu is the row shift (mu_2, mu_3, ...), so the
    cheapest full descent costs sum over k >= 2 of (k-1) * mu_k.
    """
    return sum(i * mu[i] for i in range(1, len(mu)))


def _prune_hopeless(state: FockState) -> FockState:
    terms = {}
    for mu, series in state.terms.items():
        d = series.min_degree()
        if d is not None and d + _descent_cost(mu) < state.order:
            terms[mu] = series
    return FockState(state.order, terms)


def transfer_partition_function(order: int, steps: int | None = None, prune: str = "plain") -> QSeries:
    """Sum of q^volume over all plane partitions, mod q^order.

    Every plane partition is built once as its chain of diagonal slices:
    `steps` raising applications climb from the empty diagram to the main
    slice, weighting each new slice by q^size, and the matching descent
    weights every slice strictly right of the center, so the center slice is
    counted exactly once.  steps defaults to order; any steps >= order gives
    the same series, since deeper slices contribute at least `order` boxes.

    prune="sharp" additionally discards diagrams whose accumulated exponent
    plus the cheapest possible descent already reaches the order.  The output
    is identical; only the intermediate states shrink.
    """
    if steps is None:
        steps = order
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if prune not in ("plain", "sharp"):
        raise ValueError(f"unknown prune mode {prune!r}")
    sharp = prune == "sharp"
    state = vacuum(order)
    for _ in range(steps):
        state = apply_weight(apply_raising(state))
        if sharp:
            state = _prune_hopeless(state)
    for _ in range(steps - 1):
        state = apply_weight(apply_lowering(state))
        if sharp:
            state = _prune_hopeless(state)
    state = apply_lowering(state)
    return vacuum_amplitude(state)


@dataclass(frozen=True)
class CommutationReport:
    """Exact matrix elements of the two operator orderings at one rational point.

    holds is True iff lhs * factor == rhs, where factor = 1 - x*y.
    """

    lhs: Fraction
    rhs: Fraction
    factor: Fraction
    holds: bool


def _row_bounds(mu: Partition, mu1: Partition) -> tuple[list[int], list[int]]:
    r = max(len(mu), len(mu1))
    hi = [max(mu[i] if i < len(mu) else 0, mu1[i] if i < len(mu1) else 0) for i in range(r + 1)]
    lo = [min(mu[i] if i < len(mu) else 0, mu1[i] if i < len(mu1) else 0) for i in range(r + 1)]
    return hi, lo


def commutation_check(mu: Partition, mu1: Partition, x: Fraction, y: Fraction) -> CommutationReport:
    """Verify the transfer-operator commutation law between two diagrams.

    lhs sums x^(|nu|-|mu1|) * y^(|nu|-|mu|) over all nu interlacing above
    both mu and mu1 (an infinite family, evaluated in closed form: the rows
    of nu range independently, with only the first row unbounded, so the sum
    factors into one geometric series times finite row sums).  rhs sums
    x^(|mu|-|nu|) * y^(|mu1|-|nu|) over the finite family of nu interlacing
    below both.  The law states lhs * (1 - x*y) == rhs.

    Requires 0 < |x*y| < 1 so the geometric direction converges.
    """
    mu = make_partition(mu)
    mu1 = make_partition(mu1)
    x = Fraction(x)
    y = Fraction(y)
    z = x * y
    if not 0 < abs(z) < 1:
        raise ValueError(f"need 0 < |x*y| < 1, got x*y = {z}")
    sigma, tau = _row_bounds(mu, mu1)
    r = max(len(mu), len(mu1))

    finite_factor = Fraction(1)
    empty = False
    for i in range(1, r + 1):
        lo, hi = sigma[i], tau[i - 1]
        if lo > hi:
            empty = True
            break
        finite_factor *= sum(z**v for v in range(lo, hi + 1))
    if empty:
        lhs = Fraction(0)
    else:
        lhs = x ** (-sum(mu1)) * y ** (-sum(mu)) * z ** sigma[0] / (1 - z) * finite_factor

    rhs = Fraction(0)
    ranges = [range(sigma[i + 1], tau[i] + 1) for i in range(r)]
    for combo in cartesian(*ranges):
        s = sum(combo)
        rhs += x ** (sum(mu) - s) * y ** (sum(mu1) - s)

    factor = 1 - z
    return CommutationReport(lhs=lhs, rhs=rhs, factor=factor, holds=lhs * factor == rhs)


def commutation_lhs_truncated(mu: Partition, mu1: Partition, x: Fraction, y: Fraction, max_size: int) -> Fraction:
    """Brute-force partial sum of the geometric side over nu with at most max_size boxes.

    Candidates are generated row by row straight from the chain inequalities
    and re-checked with the interlacing predicate; every admitted term is
    added individually, so no geometric-series evaluation is involved.
    """
    mu = make_partition(mu)
    mu1 = make_partition(mu1)
    x = Fraction(x)
    y = Fraction(y)
    base = x ** (-sum(mu1)) * y ** (-sum(mu))
    z = x * y
    zpow = [Fraction(1)]
    for _ in range(max_size):
        zpow.append(zpow[-1] * z)
    sigma, _ = _row_bounds(mu, mu1)
    maxlen = max(len(mu), len(mu1)) + 1

    total = Fraction(0)

    def admit(nu: Partition) -> None:
        nonlocal total
        if interlaces(nu, mu) and interlaces(nu, mu1):
            total += base * zpow[sum(nu)]

    def rec(i: int, prefix: tuple[int, ...], used: int) -> None:
        if i >= len(sigma) or sigma[i] == 0:
            admit(prefix)
        if i == maxlen:
            return
        lo = max(sigma[i] if i < len(sigma) else 0, 1)
        hi = min(prefix[-1] if prefix else max_size, max_size - used)
        if i >= 1:
            upper = min(
                mu[i - 1] if i - 1 < len(mu) else 0,
                mu1[i - 1] if i - 1 < len(mu1) else 0,
            )
            hi = min(hi, upper)
        for v in range(lo, hi + 1):
            rec(i + 1, prefix + (v,), used + v)

    rec(0, (), 0)
    return total


def commutation_tail_bound(mu: Partition, mu1: Partition, x: Fraction, y: Fraction, max_size: int) -> Fraction:
    """Analytic bound on the mass the size cutoff discards from the geometric side.

    At most C diagrams share any given size, where C is the number of joint
    choices for the bounded rows, and each contributes |x|^(-|mu1|) *
    |y|^(-|mu|) * |xy|^size, so the tail is a geometric series.
    """
    mu = make_partition(mu)
    mu1 = make_partition(mu1)
    x = Fraction(x)
    y = Fraction(y)
    z = abs(x * y)
    if not 0 < z < 1:
        raise ValueError(f"need 0 < |x*y| < 1, got |x*y| = {z}")
    sigma, tau = _row_bounds(mu, mu1)
    r = max(len(mu), len(mu1))
    combos = 1
    for i in range(1, r + 1):
        combos *= max(0, tau[i - 1] - sigma[i] + 1)
    scale = abs(x) ** (-sum(mu1)) * abs(y) ** (-sum(mu))
    return combos * scale * z ** (max_size + 1) / (1 - z)


def _interlacings_above_within(mu: Partition, lam: Partition) -> tuple[Partition, ...]:
    """All nu with nu interlacing above mu and nu contained in lam."""
    width = min(len(lam), len(mu) + 1)
    ranges = []
    for i in range(width):
        lo = mu[i] if i < len(mu) else 0
        hi = lam[i]
        if i >= 1:
            hi = min(hi, mu[i - 1])
        ranges.append(range(lo, hi + 1))
    out = []
    for combo in cartesian(*ranges):
        while combo and combo[-1] == 0:
            combo = combo[:-1]
        out.append(combo)
    return tuple(out)


def chain_matrix_element(lam: Partition, mu: Partition, weights, order: int) -> QSeries:
    """Sum over interlacing chains mu = v(0) under v(1) under ... under v(k) = lam
    of q^(sum_i weights[i-1] * (size(v(i)) - size(v(i-1)))), truncated at order.

    This is the matrix element of a product of weighted raising steps; it
    agrees with the semistandard-tableau census of the skew shape lam/mu by
    the branching rule for skew Schur functions.
    """
    lam = make_partition(lam)
    mu = make_partition(mu)
    for w in weights:
        if w < 0:
            raise ValueError("weights must be nonnegative")
    if not contains(lam, mu):
        return QSeries.zero(order)
    front: dict[Partition, QSeries] = {mu: QSeries.one(order)}
    for w in weights:
        nxt: dict[Partition, QSeries] = {}
        for nu, series in front.items():
            for nu2 in _interlacings_above_within(nu, lam):
                contrib = series.shift(w * (sum(nu2) - sum(nu)))
                if contrib.is_zero():
                    continue
                cur = nxt.get(nu2)
                nxt[nu2] = contrib if cur is None else cur + contrib
        front = nxt
    return front.get(lam, QSeries.zero(order))
