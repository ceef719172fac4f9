"""Hirzebruch-Jung chains and block assemblies of them.

A chain is a sequence [e_1, ..., e_r] of integers at least 2, realized as a
string of rational curves with self-intersections -e_i and consecutive
intersections 1.  Chain determinants follow the continued fraction
recursion, and the canonical negative part of the chain has coefficients
given by suffix determinants over the full determinant.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidChainError, InvariantViolationError, ValidationError
from .invariants import ExceptionalSolution, e_sup, exceptional_solution
from .lattice import (
    DivisorClass,
    IntersectionLattice,
    build_lattice,
    det_int,
    is_negative_definite,
    solve_against_gram,
)
from .zariski import ZariskiDecomposition


def hj_determinant(e_seq: Sequence[int]) -> int:
    """Continued fraction determinant [e_1, ..., e_r].

    Empty product is 1.  Values below 2 are allowed here (with a warning)
    because the recursion itself is defined for any integers; chain
    construction is where validity is enforced.
    """
    seq = list(e_seq)
    for e in seq:
        if not isinstance(e, int) or isinstance(e, bool):
            raise ValidationError(f"chain entries must be integers, got {e!r}")
    if any(e < 2 for e in seq):
        warnings.warn("chain entry below 2; determinant recursion still applies", stacklevel=2)
    value = _suffix_determinants(seq)[0]
    check = det_int(_tridiagonal(seq)) * (-1) ** len(seq)
    if value != check:
        raise InvariantViolationError("determinant recursion disagrees with elimination")
    return value


def _suffix_determinants(seq: Sequence[int]) -> list[int]:
    # dets[k] is the determinant of [e_{k+1}, ..., e_r]; dets[r] = 1.
    r = len(seq)
    dets = [0] * (r + 2)
    dets[r] = 1
    dets[r + 1] = 0
    for k in range(r - 1, -1, -1):
        dets[k] = seq[k] * dets[k + 1] - dets[k + 2]
    return dets[: r + 1]


def _tridiagonal(seq: Sequence[int]) -> list[list[int]]:
    r = len(seq)
    return [
        [
            -seq[i] if i == j else (1 if abs(i - j) == 1 else 0)
            for j in range(r)
        ]
        for i in range(r)
    ]


@dataclass(frozen=True)
class ChainSpec:
    e_seq: tuple[int, ...]
    n: int
    lambdas: tuple[int, ...]
    gamma: tuple[Fraction, ...]
    lattice: IntersectionLattice

    def negative_part(self) -> ZariskiDecomposition:
        """The canonical negative part of the chain as a decomposition."""
        coeffs = tuple(self.gamma)
        negative = DivisorClass(self.lattice, coeffs)
        support = tuple(range(len(self.e_seq)))
        return ZariskiDecomposition(self.lattice.zero(), negative, support, coeffs)


def chain_spec(e_seq: Sequence[int], label_prefix: str = "C") -> ChainSpec:
    """Validate a chain and compute its determinant data.

    The coefficient formula (suffix determinant over full determinant) is
    cross-checked against the direct linear solve that characterizes the
    canonical negative part: pairing -1 with the first curve and 0 with the
    rest.
    """
    seq = tuple(e_seq)
    if not seq:
        raise InvalidChainError("a chain needs at least one curve")
    for e in seq:
        if not isinstance(e, int) or isinstance(e, bool):
            raise InvalidChainError(f"chain entries must be integers, got {e!r}")
        if e < 2:
            raise InvalidChainError(f"chain entry {e} is below 2")
    dets = _suffix_determinants(seq)
    n = dets[0]
    lambdas = tuple(dets[1:])
    values = (n,) + lambdas
    for a, b in zip(values, values[1:]):
        if a <= b:
            raise InvalidChainError("chain determinants fail to decrease strictly")
    if lambdas[-1] != 1:
        raise InvalidChainError("last suffix determinant is not 1")
    gamma = tuple(Fraction(lam, n) for lam in lambdas)

    r = len(seq)
    names = tuple(f"{label_prefix}{i + 1}" for i in range(r))
    lattice = build_lattice(names, _tridiagonal(seq))
    if not is_negative_definite(lattice, range(r)):
        raise InvalidChainError("chain Gram matrix is not negative definite")
    targets = [Fraction(-1)] + [Fraction(0)] * (r - 1)
    solved = solve_against_gram(lattice, range(r), targets)
    if tuple(solved.coeffs) != gamma:
        raise InvariantViolationError("suffix determinant formula disagrees with the solve")
    return ChainSpec(seq, n, lambdas, gamma, lattice)


def chain_exceptional(spec: ChainSpec, pattern: Sequence[int], capped: bool = True) -> ExceptionalSolution:
    """Exceptional solution for a pattern against the chain's own curves."""
    return exceptional_solution(spec.lattice, spec.negative_part(), pattern, capped)


@dataclass(frozen=True)
class ChainEqualityCase:
    kind: str
    slack: Fraction


def classify_chain_equality(spec: ChainSpec, pattern: Sequence[int]) -> ChainEqualityCase:
    """Classify the slack of the chain slope inequality at a pattern.

    The slack sum((beta_i - gamma_i) t_i) is zero exactly when the pattern
    is zero (case_i) or touches only the first curve (case_ii); any other
    pattern gives strictly positive slack.  Both facts are enforced.
    """
    sol = chain_exceptional(spec, pattern, capped=True)
    slack = sum(
        ((b - g) * t for b, g, t in zip(sol.coeffs, spec.gamma, sol.pattern)),
        Fraction(0),
    )
    if all(t == 0 for t in sol.pattern):
        kind = "case_i"
    elif sol.pattern[0] >= 1 and all(t == 0 for t in sol.pattern[1:]):
        kind = "case_ii"
    else:
        kind = "strict"
    if slack < 0:
        raise InvariantViolationError("chain slope slack is negative")
    if (slack == 0) != (kind != "strict"):
        raise InvariantViolationError(
            f"slack {slack} does not match classification {kind}"
        )
    return ChainEqualityCase(kind, slack)


def foliation_negative_part(
    chain_specs: Sequence[ChainSpec],
) -> tuple[IntersectionLattice, ZariskiDecomposition]:
    """Assemble disjoint chains into one lattice with block negative part."""
    if not chain_specs:
        raise ValidationError("need at least one chain")
    names: list[str] = []
    sizes = [len(s.e_seq) for s in chain_specs]
    total = sum(sizes)
    gram = [[0] * total for _ in range(total)]
    offset = 0
    gamma: list[Fraction] = []
    for j, spec in enumerate(chain_specs):
        r = len(spec.e_seq)
        for i in range(r):
            names.append(f"T{j + 1}.C{i + 1}")
            for k in range(r):
                gram[offset + i][offset + k] = spec.lattice.gram[i][k]
        gamma.extend(spec.gamma)
        offset += r
    lattice = build_lattice(names, gram)
    negative = DivisorClass(lattice, tuple(gamma))
    support = tuple(range(total))
    dec = ZariskiDecomposition(lattice.zero(), negative, support, tuple(gamma))
    return lattice, dec


def foliation_e(chain_specs: Sequence[ChainSpec], m: int = 1) -> Fraction:
    """Slope supremum of m times the assembled negative part.

    Scaling the negative part scales the supremum linearly, and the value
    at m = 1 is 1 for any chain assembly; both facts are asserted before
    the scaled value is returned.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValidationError("scale must be a positive integer")
    lattice, dec = foliation_negative_part(chain_specs)
    base = e_sup(lattice, dec, max_support=max(16, len(dec.support)))
    scaled_dec = ZariskiDecomposition(
        dec.positive,
        m * dec.negative,
        dec.support,
        tuple(m * g for g in dec.gamma),
    )
    scaled = e_sup(lattice, scaled_dec, max_support=max(16, len(dec.support)))
    if scaled.value != m * base.value:
        raise InvariantViolationError("slope supremum did not scale linearly")
    if scaled.value > m:
        raise InvariantViolationError("scaled slope supremum exceeds the scale")
    return scaled.value
