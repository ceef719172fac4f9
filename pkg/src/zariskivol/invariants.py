"""Slope invariants of a negative part.

Given a decomposition with negative part N supported on classes with
pairwise nonnegative intersections, these functions compute the exceptional
solutions attached to an intersection pattern, the per-divisor slope, its
supremum over the pattern cone, and the coarse diagonal bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    InvariantViolationError,
    NegativeOffDiagonalError,
    NegativePatternError,
    NotNEquivalentError,
    NotNNefError,
    NotPseudoEffectiveError,
    SupportTooLargeError,
    ValidationError,
)
from .lattice import (
    DivisorClass,
    IntersectionLattice,
    _require_lattice,
    is_negative_definite,
    off_diagonal_nonnegative,
    pair,
    pair_with_basis,
    solve_against_gram,
)
from .zariski import ZariskiDecomposition, star_lift, zariski_decompose


@dataclass(frozen=True)
class ExceptionalSolution:
    capped: bool
    support: tuple[int, ...]
    coeffs: tuple[Fraction, ...]
    pattern: tuple[Fraction, ...]
    divisor: DivisorClass


def _check_support(lattice: IntersectionLattice, support: Sequence[int]) -> None:
    if not support:
        return
    if not off_diagonal_nonnegative(lattice, support):
        raise NegativeOffDiagonalError(
            "support classes pair negatively with each other"
        )
    if not is_negative_definite(lattice, support):
        raise NotPseudoEffectiveError("support Gram is not negative definite")


def _solve_pattern(
    lattice: IntersectionLattice,
    support: Sequence[int],
    pattern: Sequence[Fraction],
    capped: bool,
) -> list[Fraction]:
    targets = [
        -min(Fraction(1), t) if capped else -t for t in pattern
    ]
    sol = solve_against_gram(lattice, support, targets)
    return [sol.coeffs[i] for i in support]


def exceptional_solution(
    lattice: IntersectionLattice,
    decomposition: ZariskiDecomposition,
    pattern: Sequence[int],
    capped: bool = True,
) -> ExceptionalSolution:
    """Class on Supp(N) whose pairings realize minus the (capped) pattern.

    With capped=True the target against the i-th support class is
    -min(1, t_i), otherwise -t_i.  Coefficients are certified nonnegative
    and bounded below by min(1, t_i)/e_i resp. t_i/e_i where e_i is minus
    the self-intersection.
    """
    sup = decomposition.support
    if len(pattern) != len(sup):
        raise ValidationError(
            f"pattern length {len(pattern)} does not match support size {len(sup)}"
        )
    pat: list[Fraction] = []
    for t in pattern:
        if not isinstance(t, int) or isinstance(t, bool):
            raise ValidationError(f"pattern entries must be integers, got {t!r}")
        if t < 0:
            raise NegativePatternError(f"pattern entry {t} is negative")
        pat.append(Fraction(t))
    _check_support(lattice, sup)
    if not sup:
        return ExceptionalSolution(capped, (), (), (), lattice.zero())
    coeffs = _solve_pattern(lattice, sup, pat, capped)
    for i, (idx, c) in enumerate(zip(sup, coeffs)):
        e_i = Fraction(-lattice.gram[idx][idx])
        floor = (min(Fraction(1), pat[i]) if capped else pat[i]) / e_i
        if c < 0 or c < floor:
            raise InvariantViolationError(
                "exceptional solution coefficient below its certified floor"
            )
    full = [Fraction(0)] * lattice.rank
    for idx, c in zip(sup, coeffs):
        full[idx] = c
    return ExceptionalSolution(
        capped, sup, tuple(coeffs), tuple(pat), DivisorClass(lattice, tuple(full))
    )


def _pattern_of(
    lattice: IntersectionLattice,
    decomposition: ZariskiDecomposition,
    a: DivisorClass,
) -> list[Fraction]:
    pat = []
    for i in decomposition.support:
        t = pair_with_basis(a, i)
        if t < 0:
            raise NotNNefError(
                f"divisor pairs negatively with support class {lattice.names[i]!r}"
            )
        pat.append(t)
    return pat


def e_of_divisor_pair(
    lattice: IntersectionLattice,
    decomposition: ZariskiDecomposition,
    a: DivisorClass,
) -> Fraction:
    """Slope of a against N: (a.N) / (a.E) for the capped exceptional E.

    Zero when a.N = 0.  The denominator is certified positive whenever
    a.N is positive.
    """
    _require_lattice(lattice, a)
    sup = decomposition.support
    pat = _pattern_of(lattice, decomposition, a)
    a_dot_n = sum(
        (g * t for g, t in zip(decomposition.gamma, pat)), Fraction(0)
    )
    if a_dot_n == 0:
        return Fraction(0)
    _check_support(lattice, sup)
    beta = _solve_pattern(lattice, sup, pat, capped=True)
    denom = sum((b * t for b, t in zip(beta, pat)), Fraction(0))
    if denom <= 0:
        raise InvariantViolationError("capped pairing denominator is not positive")
    return a_dot_n / denom


def e_zero(decomposition: ZariskiDecomposition) -> Fraction:
    """Coarse diagonal bound: max over support of gamma_i times e_i."""
    lattice = decomposition.negative.lattice
    best = Fraction(0)
    for idx, g in zip(decomposition.support, decomposition.gamma):
        val = g * Fraction(-lattice.gram[idx][idx])
        if val > best:
            best = val
    return best


@dataclass(frozen=True)
class EInvariantResult:
    value: Fraction
    attained: bool
    witness_pattern: Optional[tuple[int, ...]]
    witness_ray: Optional[tuple[tuple[int, ...], int]]
    e_zero: Fraction


def e_sup(
    lattice: IntersectionLattice,
    decomposition: ZariskiDecomposition,
    max_support: int = 16,
) -> EInvariantResult:
    """Supremum of the slope over all nonzero nonnegative integer patterns.

    For a fixed support subset of the pattern the slope is a ratio of two
    linear forms, so its extreme values sit at the all-ones vertex of the
    subset and in the limits along its coordinate rays.  All candidates are
    enumerated exactly.  The witness is the lexicographically smallest
    maximizing vertex pattern; a ray witness is reported only if no vertex
    attains the value.
    """
    sup = decomposition.support
    s = len(sup)
    if s > max_support:
        raise SupportTooLargeError(
            f"support size {s} exceeds the cap {max_support}"
        )
    ez = e_zero(decomposition)
    if s == 0:
        return EInvariantResult(Fraction(0), True, (), None, ez)
    _check_support(lattice, sup)
    gamma = decomposition.gamma

    best = Fraction(0)
    vertex_hits: list[tuple[int, ...]] = []
    ray_hits: list[tuple[tuple[int, ...], int]] = []
    for mask in range(1, 1 << s):
        sigma = [k for k in range(s) if mask >> k & 1]
        pat = tuple(Fraction(1 if k in sigma else 0) for k in range(s))
        beta = _solve_pattern(lattice, sup, pat, capped=True)
        vertex_pat = tuple(1 if k in sigma else 0 for k in range(s))
        num = sum((gamma[k] for k in sigma), Fraction(0))
        den = sum((beta[k] for k in sigma), Fraction(0))
        if den <= 0:
            raise InvariantViolationError("vertex denominator is not positive")
        vval = num / den
        if vval > best:
            best = vval
            vertex_hits = [vertex_pat]
            ray_hits = []
        elif vval == best:
            vertex_hits.append(vertex_pat)
        for k in sigma:
            if beta[k] <= 0:
                raise InvariantViolationError("ray denominator is not positive")
            rval = gamma[k] / beta[k]
            if rval > best:
                best = rval
                vertex_hits = []
                ray_hits = [(vertex_pat, k)]
            elif rval == best:
                ray_hits.append((vertex_pat, k))

    if best > ez:
        raise InvariantViolationError("slope supremum exceeded the diagonal bound")
    if vertex_hits:
        witness = min(vertex_hits)
        return EInvariantResult(best, True, witness, None, ez)
    ray = min(ray_hits)
    return EInvariantResult(best, False, None, ray, ez)


@dataclass(frozen=True)
class ESlackReport:
    e_value: Fraction
    a_dot_n: Fraction
    a_dot_uncapped: Fraction
    base_slack: Fraction
    fibre_multiple: Optional[int]
    scaled_slack: Optional[Fraction]


def verify_e_inequality(
    lattice: IntersectionLattice,
    decomposition: ZariskiDecomposition,
    a: DivisorClass,
    fibre_data: Optional[tuple[int, DivisorClass]] = None,
) -> ESlackReport:
    """Slack of the slope inequality, optionally in its scaled fibre form.

    base slack is e_A times (a paired with the uncapped exceptional class)
    minus a.N, always nonnegative.  When fibre_data = (n, F) is given, a is
    required to pair like n times F against every support class, and the
    slack scaled by 1/n is checked as well.
    """
    _require_lattice(lattice, a)
    sup = decomposition.support
    pat = _pattern_of(lattice, decomposition, a)
    e_val = e_of_divisor_pair(lattice, decomposition, a)
    a_dot_n = sum(
        (g * t for g, t in zip(decomposition.gamma, pat)), Fraction(0)
    )
    if sup:
        _check_support(lattice, sup)
        b = _solve_pattern(lattice, sup, pat, capped=False)
        a_unc = sum((bi * t for bi, t in zip(b, pat)), Fraction(0))
    else:
        a_unc = Fraction(0)
    base_slack = e_val * a_unc - a_dot_n
    if base_slack < 0:
        raise InvariantViolationError("slope inequality slack is negative")

    n_mult = None
    scaled = None
    if fibre_data is not None:
        n_mult, fibre = fibre_data
        if not isinstance(n_mult, int) or n_mult < 1:
            raise ValidationError("fibre multiple must be a positive integer")
        _require_lattice(lattice, fibre)
        for i in sup:
            fv = pair_with_basis(fibre, i)
            if fv < 0 or fv.denominator != 1:
                raise NotNEquivalentError(
                    "fibre class must pair like a fibre: nonnegative integers on the support"
                )
            if pair_with_basis(a, i) != n_mult * fv:
                raise NotNEquivalentError(
                    "divisor does not pair like the stated fibre multiple on the support"
                )
        scaled = (e_val / n_mult) * a_unc - a_dot_n
        if scaled < 0:
            raise InvariantViolationError("scaled slope inequality slack is negative")
    return ESlackReport(e_val, a_dot_n, a_unc, base_slack, n_mult, scaled)


@dataclass(frozen=True)
class SquareInequality:
    lhs: Fraction
    terms: tuple[Fraction, Fraction, Fraction, Fraction]
    rhs: Fraction
    ok: bool
    equality: bool


def weighted_square_inequality(
    lattice: IntersectionLattice, m: DivisorClass, z: DivisorClass
) -> SquareInequality:
    """Slope-weighted square bound for the split D = M + Z.

    With e the slope of M against the negative part of D, evaluates

        (1 + e) P^2  >=  (1 + e) M^2 + M.Z + (1 + e) P.Z + e M.Z*

    exactly and reports each right-hand term.  M must pair nonnegatively
    with the support.
    """
    _require_lattice(lattice, m)
    _require_lattice(lattice, z)
    d = m + z
    dec = zariski_decompose(lattice, d)
    e_m = e_of_divisor_pair(lattice, dec, m)
    zs = star_lift(lattice, z, dec.support)
    p = dec.positive
    lhs = (1 + e_m) * pair(p, p)
    terms = (
        (1 + e_m) * pair(m, m),
        pair(m, z),
        (1 + e_m) * pair(p, z),
        e_m * pair(m, zs.lifted),
    )
    rhs = sum(terms, Fraction(0))
    return SquareInequality(lhs, terms, rhs, lhs >= rhs, lhs == rhs)
