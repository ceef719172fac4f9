"""Volume lower bounds and structured audits.

Closed-form bound families are plain functions of small integer and
rational inputs.  The audits take an actual lattice workspace, recompute
every quantity exactly, evaluate the applicable bound, and report named
sub-checks plus the assumptions they relied on.  Audits report verdicts;
they raise only for malformed input, never for a bound that simply fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    DTooSmallError,
    GenusCheckFailedError,
    H0TooSmallError,
    InconsistentTripleError,
    InvariantViolationError,
    IterationDivergedError,
    NonIntegralMultipleError,
    NotFibreMultipleError,
    NotPseudoEffectiveError,
    PencilScenarioError,
    PmTooSmallError,
    SplitMismatchError,
    ValidationError,
)
from .invariants import e_of_divisor_pair, e_zero
from .lattice import (
    DivisorClass,
    IntersectionLattice,
    RationalLike,
    _require_lattice,
    arithmetic_genus,
    as_rational,
    build_lattice,
    is_negative_definite,
    pair,
    pair_with_basis,
    solve_against_gram,
)
from .zariski import ZariskiDecomposition, is_nef_on, star_lift, zariski_decompose


@dataclass(frozen=True)
class Scenario:
    """Facts about the geometry that the lattice alone cannot carry."""

    h0: int
    pencil: bool = False
    df: Optional[int] = None
    kappa_nonneg: Optional[bool] = None
    ruled: Optional[bool] = None
    minus_one_classes: tuple[str, ...] = ()
    base_genus: Optional[int] = None


def validate_scenario(lattice: IntersectionLattice, scenario: Scenario) -> None:
    if not isinstance(scenario.h0, int) or scenario.h0 < 0:
        raise ValidationError("h0 must be a nonnegative integer")
    if scenario.df is not None:
        if not scenario.pencil:
            raise ValidationError("DF is only meaningful in a pencil scenario")
        if not isinstance(scenario.df, int) or scenario.df < 1:
            raise ValidationError("DF must be a positive integer")
    if scenario.base_genus is not None and (
        not isinstance(scenario.base_genus, int) or scenario.base_genus < 0
    ):
        raise ValidationError("base_genus must be a nonnegative integer")
    for label in scenario.minus_one_classes:
        idx = lattice.index(label)
        if lattice.gram[idx][idx] != -1:
            raise ValidationError(
                f"declared class {label!r} has self-intersection "
                f"{lattice.gram[idx][idx]}, expected -1"
            )


def pencil_bound(h0: int, e: RationalLike) -> Fraction:
    """(h0-1)^2 / (h0-1+e), the pencil-type volume lower bound."""
    if not isinstance(h0, int) or h0 < 2:
        raise H0TooSmallError(f"pencil bound needs h0 >= 2, got {h0!r}")
    ev = as_rational(e)
    if ev < 0:
        raise ValidationError("the slope invariant must be nonnegative")
    return Fraction((h0 - 1) ** 2) / (h0 - 1 + ev)


@dataclass(frozen=True)
class SurfaceBounds:
    """Bound family when the image of the map is a surface."""

    base: Fraction
    refined: Fraction
    nonruled_applies: bool
    nonruled_base: Optional[Fraction]
    nonruled_refined_weak: Optional[Fraction]
    nonruled_refined_strong: Optional[Fraction]


def surface_bounds(
    h0: int,
    e: RationalLike,
    kappa_nonneg: Optional[bool] = None,
    ruled: Optional[bool] = None,
) -> SurfaceBounds:
    """Volume bounds for non-pencil systems, with the non-ruled refinements.

    Two refined non-ruled variants circulate, subtracting (3+4e)/(1+e)
    resp. (1+2e)/(1+e) from 2*h0; both are reported, labeled weak and
    strong by their size, and no side is taken between them.
    """
    if not isinstance(h0, int) or h0 < 3:
        raise H0TooSmallError(f"surface bounds need h0 >= 3, got {h0!r}")
    ev = as_rational(e)
    if ev < 0:
        raise ValidationError("the slope invariant must be nonnegative")
    base = Fraction(h0 - 2)
    refined = h0 - (1 + 2 * ev) / (1 + ev)
    applies = kappa_nonneg is True or ruled is False
    if applies:
        nb = Fraction(2 * h0 - 4)
        weak = 2 * h0 - (3 + 4 * ev) / (1 + ev)
        strong = 2 * h0 - (1 + 2 * ev) / (1 + ev)
    else:
        nb = weak = strong = None
    return SurfaceBounds(base, refined, applies, nb, weak, strong)


@dataclass
class BoundReport:
    bound: Fraction
    volume: Fraction
    satisfied: bool
    equality: bool
    refined_bound: Optional[Fraction]
    checks: dict
    annotations: tuple[str, ...]
    assumptions: dict


def _split_and_decompose(lattice, d, m, z):
    for cls in (d, m, z):
        _require_lattice(lattice, cls)
    if m + z != d:
        raise SplitMismatchError("M + Z does not equal D")
    return zariski_decompose(lattice, d)


def pencil_audit(
    lattice: IntersectionLattice,
    d: DivisorClass,
    m: DivisorClass,
    z: DivisorClass,
    scenario: Scenario,
    fibre: tuple[int, DivisorClass],
) -> BoundReport:
    """Audit a split D = M + Z whose moving part composes with a pencil.

    Recomputes the decomposition, the slope of M, the star lift of Z and
    the fibre pairings, then evaluates the pencil bound and every named
    sub-check exactly.
    """
    validate_scenario(lattice, scenario)
    if not scenario.pencil:
        raise PencilScenarioError("pencil audit requires a pencil scenario")
    h0 = scenario.h0
    if h0 < 2:
        raise H0TooSmallError(f"pencil audit needs h0 >= 2, got {h0}")
    n_mult, f = fibre
    if not isinstance(n_mult, int) or n_mult < 1:
        raise ValidationError("fibre multiple must be a positive integer")
    _require_lattice(lattice, f)
    dec = _split_and_decompose(lattice, d, m, z)

    diff = m - n_mult * f
    if all(pair_with_basis(diff, i) == 0 for i in range(lattice.rank)):
        scope = "full"
    elif all(pair_with_basis(diff, i) == 0 for i in dec.support):
        scope = "support_only"
    else:
        raise NotFibreMultipleError(
            "M does not pair like the stated fibre multiple, even against the support"
        )

    e_m = e_of_divisor_pair(lattice, dec, m)
    p_sq = pair(dec.positive, dec.positive)
    m_sq = pair(m, m)
    df_val = pair(d, f)
    if scenario.df is not None and Fraction(scenario.df) != df_val:
        raise ValidationError(
            f"scenario says D.F = {scenario.df} but the lattice gives {df_val}"
        )
    zs = star_lift(lattice, z, dec.support)
    fz_star = pair(f, zs.lifted)
    pz = pair(dec.positive, z)
    supports_equal = set(dec.support) == set(z.support())

    annotations: list[str] = []
    checks: dict = {}

    rhs = (
        Fraction(n_mult**2, 1) / (n_mult + e_m) * df_val
        + Fraction(n_mult, 1) * e_m / (n_mult + e_m) * fz_star
        + pz
    )
    relation = "=" if p_sq == rhs else ("<" if p_sq < rhs else ">")
    checks["split_identity"] = {"rhs": rhs, "relation": relation}

    kernel_conditions = (fz_star == 0, zs.lifted.is_zero(), supports_equal)
    checks["fibre_kernel"] = {
        "fz_star": fz_star,
        "conditions": kernel_conditions,
        "all_equal": kernel_conditions[0] == kernel_conditions[1] == kernel_conditions[2],
        "pz": pz,
        "pz_zero": pz == 0,
    }

    checks["degree_lower_bound"] = {
        "n": n_mult,
        "h0_minus_1": h0 - 1,
        "ok": n_mult >= h0 - 1,
        "equality": n_mult == h0 - 1,
    }
    if n_mult == h0 - 1:
        annotations.append("degree equality: the base curve of the pencil is rational")

    if m_sq == 0:
        free_bound = Fraction(n_mult**2, 1) / (n_mult + e_m)
        checks["base_point_free"] = {
            "bound": free_bound,
            "ok": p_sq >= free_bound,
            "equality": p_sq == free_bound,
            "df_is_one": df_val == 1,
            "supports_equal": supports_equal,
        }
        if p_sq == free_bound:
            annotations.append(
                "minimal volume case: needs degree one against the fibre and matching supports"
            )
        bound = pencil_bound(h0, e_m) * df_val
        refined = pencil_bound(h0, e_m)
    else:
        sq_bound = Fraction((h0 - 1) ** 2)
        checks["base_locus"] = {
            "m_squared": m_sq,
            "bound": sq_bound,
            "ok": m_sq >= sq_bound,
            "equality": m_sq == sq_bound,
        }
        bound = sq_bound
        refined = sq_bound + Fraction(1) / (1 + e_m)
        eq_case = {
            "numeric": p_sq == bound,
            "m_equals_p": m == dec.positive,
            "z_equals_n": z == dec.negative,
        }
        eq_case["certified"] = all(eq_case.values())
        checks["equality_case"] = eq_case
        if eq_case["certified"]:
            annotations.append(
                "volume equality with M = P and Z = N: the base curve of the pencil is rational"
            )

    if is_nef_on(lattice, d):
        d_sq = pair(d, d)
        nef_bound = max(Fraction(h0 - 1) * df_val, Fraction(h0))
        checks["nef_degree"] = {
            "d_squared": d_sq,
            "bound": nef_bound,
            "ok": d_sq >= nef_bound,
        }

    return BoundReport(
        bound=bound,
        volume=p_sq,
        satisfied=p_sq >= bound,
        equality=p_sq == bound,
        refined_bound=refined,
        checks=checks,
        annotations=tuple(annotations),
        assumptions={
            "h0": h0,
            "pencil": True,
            "df": df_val,
            "fibre_multiple": n_mult,
            "fibre_equivalence": scope,
            "e_m": e_m,
            "m_squared": m_sq,
            "kappa_nonneg": scenario.kappa_nonneg,
            "ruled": scenario.ruled,
        },
    )


def surface_audit(
    lattice: IntersectionLattice,
    d: DivisorClass,
    m: DivisorClass,
    z: DivisorClass,
    scenario: Scenario,
) -> BoundReport:
    """Audit a split whose moving part maps onto a surface.

    Evaluates the base bound h0 - 2 (plus the non-ruled branch when the
    scenario allows it), reports the lattice-checkable equality conditions,
    and screens the declared (-1)-classes: the bound hypotheses need D to
    pair positively with each of them, and classes contracted by P while
    meeting N are listed.
    """
    validate_scenario(lattice, scenario)
    if scenario.pencil:
        raise PencilScenarioError("surface audit requires a non-pencil scenario")
    h0 = scenario.h0
    if h0 < 3:
        raise H0TooSmallError(f"surface audit needs h0 >= 3, got {h0}")
    dec = _split_and_decompose(lattice, d, m, z)
    vol = pair(dec.positive, dec.positive)
    e_m = e_of_divisor_pair(lattice, dec, m)

    annotations: list[str] = []
    checks: dict = {}

    family = surface_bounds(h0, e_m, scenario.kappa_nonneg, scenario.ruled)
    bound = family.base
    eq_case = {
        "numeric": vol == bound,
        "m_equals_p": m == dec.positive,
        "z_equals_n": z == dec.negative,
    }
    eq_case["certified"] = all(eq_case.values())
    checks["equality_case"] = eq_case
    if eq_case["certified"]:
        annotations.append(
            "volume equality with M = P and Z = N: image is a surface of minimal degree"
        )

    if family.nonruled_applies:
        nr = {
            "bound": family.nonruled_base,
            "satisfied": vol >= family.nonruled_base,
            "equality": vol == family.nonruled_base,
            "refined_weak": family.nonruled_refined_weak,
            "refined_strong": family.nonruled_refined_strong,
        }
        checks["nonruled"] = nr
        if nr["equality"]:
            annotations.append(
                "doubled-bound equality: image of degree 2*h0-4 of K3 type, "
                "or a double cover of a rational surface of degree h0-2"
            )

    violations = []
    contracted = []
    for label in scenario.minus_one_classes:
        idx = lattice.index(label)
        if pair_with_basis(d, idx) <= 0:
            violations.append(label)
        if (
            pair_with_basis(dec.positive, idx) == 0
            and pair_with_basis(dec.negative, idx) > 0
        ):
            contracted.append(label)
    checks["exceptional_classes"] = {
        "declared": scenario.minus_one_classes,
        "violations": tuple(violations),
        "contracted": tuple(contracted),
        "ok": not violations,
    }
    if violations:
        annotations.append(
            "hypothesis violation: D does not pair positively with "
            + ", ".join(violations)
        )

    return BoundReport(
        bound=bound,
        volume=vol,
        satisfied=vol >= bound,
        equality=vol == bound,
        refined_bound=family.refined,
        checks=checks,
        annotations=tuple(annotations),
        assumptions={
            "h0": h0,
            "pencil": False,
            "e_m": e_m,
            "kappa_nonneg": scenario.kappa_nonneg,
            "ruled": scenario.ruled,
            "minus_one_classes": scenario.minus_one_classes,
        },
    )


@dataclass(frozen=True)
class ComponentCheck:
    label: str
    alpha: Fraction
    coefficient: Fraction
    alpha_within_coefficient: bool
    drop: Fraction
    drop_within_double: bool
    genus: Fraction
    genus_zero: bool


@dataclass(frozen=True)
class LogPairResult:
    alphas: tuple[Fraction, ...]
    steps: tuple[tuple[str, Fraction, str], ...]
    negative_part: DivisorClass
    decomposition: ZariskiDecomposition
    checks: tuple[ComponentCheck, ...]
    n: int
    e_zero_scaled: Fraction
    e_zero_cap: int


def log_pair_iterate(
    lattice: IntersectionLattice,
    k: DivisorClass,
    delta: Sequence[tuple[Union[str, int], RationalLike]],
    n: int,
) -> LogPairResult:
    """Peel the negative part of K + Delta one component at a time.

    Each step picks the lowest-index component the running class pairs
    negatively with and subtracts exactly enough of it to restore
    orthogonality.  When components of the eventual support meet each
    other this greedy walk converges only in the limit, so on the first
    revisited component whose step shrank the tail is completed exactly by
    solving the orthogonality system on everything visited so far; a
    revisit whose step did not shrink means the mass diverges and the pair
    is not pseudo-effective in the configuration.  The accumulated totals
    are cross-checked against the Zariski negative part, which also
    certifies that the iteration's limit is order-independent.
    """
    _require_lattice(lattice, k)
    if not isinstance(n, int) or n < 1:
        raise ValidationError("the multiple n must be a positive integer")
    positions: list[int] = []
    coefficients: list[Fraction] = []
    seen = set()
    for ref, a in delta:
        idx = lattice.index(ref) if isinstance(ref, str) else ref
        if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < lattice.rank:
            raise ValidationError(f"bad component reference {ref!r}")
        if idx in seen:
            raise ValidationError(
                f"component {lattice.names[idx]!r} listed twice"
            )
        seen.add(idx)
        av = as_rational(a)
        if not 0 < av <= 1:
            raise ValidationError(
                f"coefficient of {lattice.names[idx]!r} must lie in (0, 1], got {av}"
            )
        positions.append(idx)
        coefficients.append(av)

    kd = k
    for idx, av in zip(positions, coefficients):
        kd = kd + av * lattice.basis(idx)
    for c in (n * kd).coeffs:
        if c.denominator != 1:
            raise NonIntegralMultipleError(
                f"n (K + Delta) is not integral: coefficient {c} at n = {n}"
            )

    r = len(positions)
    acc = [Fraction(0)] * r
    last_alpha: dict[int, Fraction] = {}
    visited: list[int] = []
    steps: list[tuple[str, Fraction, str]] = []
    current = kd
    guard = 0
    while True:
        guard += 1
        if guard > 4 * (r + 1) ** 2 + 8:
            raise IterationDivergedError("iteration failed to settle")
        pos = None
        for p in range(r):
            if pair_with_basis(current, positions[p]) < 0:
                pos = p
                break
        if pos is None:
            break
        idx = positions[pos]
        c_sq = lattice.gram[idx][idx]
        if c_sq >= 0:
            raise IterationDivergedError(
                f"component {lattice.names[idx]!r} has nonnegative self-intersection"
            )
        alpha = pair_with_basis(current, idx) / c_sq
        if pos in last_alpha:
            if alpha >= last_alpha[pos]:
                raise IterationDivergedError(
                    f"step on {lattice.names[idx]!r} grew from "
                    f"{last_alpha[pos]} to {alpha}"
                )
            sup = sorted(positions[p] for p in visited)
            if not is_negative_definite(lattice, sup):
                raise NotPseudoEffectiveError(
                    "visited components do not span a negative definite subset"
                )
            targets = [pair_with_basis(kd, i) for i in sup]
            solved = solve_against_gram(lattice, sup, targets)
            for p in visited:
                total = solved.coeffs[positions[p]]
                if total < acc[p]:
                    raise NotPseudoEffectiveError(
                        "exact completion fell below the accumulated total"
                    )
                inc = total - acc[p]
                if inc != 0:
                    steps.append((lattice.names[positions[p]], inc, "batch"))
                acc[p] = total
            current = kd
            for p in range(r):
                if acc[p] != 0:
                    current = current - acc[p] * lattice.basis(positions[p])
            last_alpha.clear()
            continue
        last_alpha[pos] = alpha
        if pos not in visited:
            visited.append(pos)
        acc[pos] += alpha
        current = current - alpha * lattice.basis(idx)
        steps.append((lattice.names[idx], alpha, "single"))

    negative = lattice.zero()
    for p in range(r):
        if acc[p] != 0:
            negative = negative + acc[p] * lattice.basis(positions[p])
    dec = zariski_decompose(lattice, kd)
    if dec.negative != negative:
        raise InvariantViolationError(
            "component iteration disagrees with the direct decomposition; "
            "the class pairs negatively with something outside the declared components"
        )

    comp_checks: list[ComponentCheck] = []
    for p in range(r):
        if acc[p] == 0:
            continue
        idx = positions[p]
        a_p = coefficients[p]
        drop = acc[p] * Fraction(-lattice.gram[idx][idx])
        genus = arithmetic_genus(lattice, k, idx)
        check = ComponentCheck(
            label=lattice.names[idx],
            alpha=acc[p],
            coefficient=a_p,
            alpha_within_coefficient=acc[p] <= a_p,
            drop=drop,
            drop_within_double=drop <= 2 * a_p,
            genus=genus,
            genus_zero=genus == 0,
        )
        if not check.genus_zero:
            raise GenusCheckFailedError(
                f"component {check.label!r} has arithmetic genus {genus}, expected 0"
            )
        if not check.alpha_within_coefficient or not check.drop_within_double:
            raise InvariantViolationError(
                f"component {check.label!r} violates the coefficient bounds "
                f"(alpha = {acc[p]}, a = {a_p})"
            )
        comp_checks.append(check)

    ez_scaled = n * e_zero(dec)
    cap = 2 * n
    if ez_scaled > cap:
        raise InvariantViolationError(
            f"diagonal bound {ez_scaled} exceeds the cap {cap}"
        )
    return LogPairResult(
        alphas=tuple(acc),
        steps=tuple(steps),
        negative_part=negative,
        decomposition=dec,
        checks=tuple(comp_checks),
        n=n,
        e_zero_scaled=ez_scaled,
        e_zero_cap=cap,
    )


def log_pair_bounds(
    pm: int, m: int, pencil: bool, kappa_nonneg: bool = False
) -> Fraction:
    """Closed-form volume bound for multiples of a log canonical class."""
    if not isinstance(m, int) or m < 1:
        raise ValidationError("m must be a positive integer")
    if pencil:
        if not isinstance(pm, int) or pm < 2:
            raise PmTooSmallError(f"pencil case needs pm >= 2, got {pm!r}")
        return Fraction((pm - 1) ** 2) / (m**2 * (pm - 1 + 2 * m))
    if not isinstance(pm, int) or pm < 3:
        raise PmTooSmallError(f"non-pencil case needs pm >= 3, got {pm!r}")
    if kappa_nonneg:
        return Fraction(2 * pm - 4, m**2)
    return Fraction(pm - 2, m**2)


def foliation_bounds(
    pm: int, m: int, pencil: bool, kappa_nonneg: bool = False
) -> Fraction:
    """Closed-form volume bound for multiples of a foliated canonical class.

    The pencil form bakes in the sharp slope cap for scaled chain
    assemblies, which is the scale m itself.
    """
    if not isinstance(m, int) or m < 1:
        raise ValidationError("m must be a positive integer")
    if pencil:
        if not isinstance(pm, int) or pm < 2:
            raise PmTooSmallError(f"pencil case needs pm >= 2, got {pm!r}")
        return Fraction((pm - 1) ** 2) / (m**2 * (pm - 1 + m))
    if not isinstance(pm, int) or pm < 3:
        raise PmTooSmallError(f"non-pencil case needs pm >= 3, got {pm!r}")
    if kappa_nonneg:
        return Fraction(2 * pm - 4, m**2)
    return Fraction(pm - 2, m**2)


def ps_index_bound(lam: RationalLike) -> Fraction:
    """1 / (lam^2 (1 + lam)), cross-derived from the pencil bound at h0 = 2."""
    lv = as_rational(lam)
    if lv <= 0:
        raise ValidationError("the index parameter must be positive")
    value = Fraction(1) / (lv**2 * (1 + lv))
    via_pencil = pencil_bound(2, lv) / lv**2
    if value != via_pencil:
        raise InvariantViolationError("index bound derivations disagree")
    return value


@dataclass(frozen=True)
class CliffordReport:
    branch: str
    degree_bound_tight: bool
    rational_base: bool


def clifford_check(deg: int, h0: int, genus: int) -> CliffordReport:
    """Validate a (degree, sections, genus) triple for a curve divisor.

    Above the canonical degree the section count is forced exactly; in the
    special range it obeys the classical halving bound; degree zero allows
    only the trivial section.  In all cases deg >= h0 - 1, and tightness
    with deg >= 1 forces genus zero.
    """
    for name, v in (("deg", deg), ("h0", h0), ("genus", genus)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValidationError(f"{name} must be an integer, got {v!r}")
    if deg < 0 or genus < 0 or h0 < 1:
        raise ValidationError("need deg >= 0, genus >= 0, h0 >= 1")
    if deg > 2 * genus - 2:
        expected = deg - genus + 1
        if h0 != expected:
            raise InconsistentTripleError(
                f"degree {deg} above the canonical range forces h0 = {expected}, got {h0}"
            )
        branch = "nonspecial"
    elif deg > 0:
        if Fraction(h0) > Fraction(deg, 2) + 1:
            raise InconsistentTripleError(
                f"special divisor of degree {deg} allows at most h0 = {Fraction(deg, 2) + 1}"
            )
        branch = "special"
    else:
        if h0 != 1:
            raise InconsistentTripleError(
                f"degree zero allows only h0 = 1, got {h0}"
            )
        branch = "degree_zero"
    if deg < h0 - 1:
        raise InconsistentTripleError(
            f"deg = {deg} is below h0 - 1 = {h0 - 1}"
        )
    tight = deg == h0 - 1
    return CliffordReport(branch, tight, tight and deg >= 1)


@dataclass(frozen=True)
class CatalogEntry:
    case_id: int
    d: int
    surface: str
    e: Optional[int]
    m0_description: str
    m0_squared: int


def catalog_degree_dminus1(d: int) -> tuple[CatalogEntry, ...]:
    """All model classes of self-intersection d - 1 on the listed surfaces.

    Every entry's self-intersection is recomputed on the surface's actual
    lattice rather than trusted from the closed form.
    """
    if not isinstance(d, int) or d < 2:
        raise DTooSmallError(f"catalog starts at d = 2, got {d!r}")
    entries: list[CatalogEntry] = []

    def plane_entry(case_id: int, mult: int) -> CatalogEntry:
        plane = build_lattice(("L",), ((1,),))
        m0 = mult * plane.basis(0)
        sq = pair(m0, m0)
        if sq != d - 1:
            raise InvariantViolationError("plane model self-intersection mismatch")
        desc = "L" if mult == 1 else f"{mult}L"
        return CatalogEntry(case_id, d, "P2", None, desc, int(sq))

    def ruled_entry(case_id: int, e: int, fmult: int) -> CatalogEntry:
        surf = build_lattice(("C", "F"), ((-e, 1), (1, 0)))
        m0 = surf.basis(0) + fmult * surf.basis(1)
        sq = pair(m0, m0)
        if sq != d - 1:
            raise InvariantViolationError("ruled model self-intersection mismatch")
        return CatalogEntry(case_id, d, f"F{e}", e, f"C + {fmult}F", int(sq))

    if d == 2:
        entries.append(plane_entry(1, 1))
    if d == 5:
        entries.append(plane_entry(2, 2))
    for e in range(0, d - 2):
        if (d - e - 3) >= 0 and (d - e - 3) % 2 == 0:
            entries.append(ruled_entry(3, e, (d + e - 1) // 2))
    if d >= 3:
        entries.append(ruled_entry(4, d - 1, d - 1))
    return tuple(entries)
