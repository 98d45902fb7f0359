"""Analytic bounds on complement spanning-tree counts, plus certificates.

Floats appear here and only here, always in log space with compensated
summation; every verification decision elsewhere is exact-integer. Equality
detection is structural (union of complete graphs), never a float test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .enumeration import canonical_form
from .errors import InternalConsistencyError
from .graphs import (Graph, complement, degree_info, girth, girth_and_cycles,
                     is_clique_union, is_connected)
from .linalg import char_poly, laplacian, spanning_tree_count
from .sequences import gap_sequence, nu

REL_TOL = 1e-9  # documented tolerance for float-vs-exact comparisons

CERTIFIED_UNIQUE = "CERTIFIED_UNIQUE"
CERTIFIED_BY_CYCLE_COUNTS = "CERTIFIED_BY_CYCLE_COUNTS"
INCONCLUSIVE = "INCONCLUSIVE"


def f_of(degrees: Sequence[int], x: float) -> float:
    """prod_i (1 - (d_i+1)/x)^(d_i/(d_i+1)), in log space.

    x must exceed max(d_i) + 1 whenever that d_i is positive; hitting it
    exactly gives 0, going below raises.
    """
    terms = []
    for d in degrees:
        if d == 0:
            continue
        base = 1.0 - (d + 1) / x
        if base == 0.0:
            return 0.0
        if base < 0.0:
            raise ValueError(f"evaluation point {x} below degree {d} + 1")
        terms.append(d / (d + 1) * math.log(base))
    return math.exp(math.fsum(terms))


@dataclass(frozen=True)
class BoundReport:
    bound_value: float
    exact_t: int
    slack: float
    equality_flag: bool  # structural: complement of a clique union attains the bound
    c_used: int
    connected_complement: bool


def _bound_report(g: Graph, gap_terms: list[float], c_used: int) -> BoundReport:
    n = g.n
    degs = g.degrees()
    comp = complement(g)
    connected = is_connected(comp)
    exact_t = spanning_tree_count(comp) if connected else 0
    f_val = f_of(degs, float(n))
    if f_val == 0.0:
        bound = 0.0
    else:
        log_bound = (n - 2) * math.log(n) - math.fsum(gap_terms) + math.log(f_val)
        bound = math.exp(log_bound)
    return BoundReport(
        bound_value=bound,
        exact_t=exact_t,
        slack=bound - exact_t,
        equality_flag=is_clique_union(g),
        c_used=c_used,
        connected_complement=connected,
    )


def base_bound(g: Graph) -> BoundReport:
    """n^(n-2) * exp(-2 nu / (3 n^3)) * f(d, n); tight exactly on clique unions."""
    n = g.n
    return _bound_report(g, [2 * nu(g) / (3 * n ** 3)], c_used=3)


def improved_bound(g: Graph, c: int) -> BoundReport:
    """Same shape with the first c gap terms: exp(-sum g_k / (k n^k))."""
    if c < 1:
        raise ValueError("c must be >= 1")
    n = g.n
    gaps = gap_sequence(g, c).values
    terms = [gaps[k - 1] / (k * n ** k) for k in range(1, c + 1)]
    return _bound_report(g, terms, c_used=c)


@dataclass(frozen=True)
class FamilyTreeCount:
    """Complement tree count of a clique-extended graph, both evaluation paths."""

    direct: int  # matrix-tree on the complement
    via_polynomial: int  # rational product formula, exact

    @property
    def agree(self) -> bool:
        return self.direct == self.via_polynomial

    @property
    def value(self) -> int:
        if not self.agree:
            raise InternalConsistencyError(
                f"family count paths disagree: {self.direct} vs {self.via_polynomial}")
        return self.direct


def family_tree_count(g0: Graph, d: int, p: int, q: int) -> FamilyTreeCount:
    """t(complement(g0 + p K_{d+1} + q K_d)) along two independent routes."""
    from .graphs import extend_g0

    big = extend_g0(g0, d, p, q)  # validates the degree precondition
    np_ = big.n
    direct = spanning_tree_count(complement(big))
    poly = char_poly(laplacian(g0))
    val = Fraction(np_) ** (np_ - 2 - p * d - q * (d - 1)) \
        * Fraction(np_ - d - 1) ** (p * d) \
        * Fraction(np_ - d) ** (q * (d - 1)) \
        * Fraction(poly.evaluate(np_), np_ ** g0.n)
    if val.denominator != 1:
        raise InternalConsistencyError(f"family product {val} is not an integer")
    return FamilyTreeCount(direct=direct, via_polynomial=int(val))


def n0_threshold(g0_order: int, d: int, c: int) -> int:
    """Order beyond which the c-term bound separates the family; the c = 1
    exponent from the remark coincides with c + 2, so one formula serves."""
    if g0_order < 0 or d < 1 or c < 1:
        raise ValueError("need g0_order >= 0, d >= 1, c >= 1")
    return 2 * d + g0_order * (2 * d) ** (c + 2)


def abrego_feasibility(n: int, delta: int, tau_value: int) -> tuple[Fraction, bool]:
    """Exact right-hand side rho((delta+1)^2 - rho^2)/4 + (3/2) tau, and
    whether n <= that bound. tau_value is supplied by the caller; it is the
    least triangle count over the rho-regular class on delta+1+rho vertices."""
    if delta < 3:
        raise ValueError("delta must be at least 3")
    if tau_value < 0:
        raise ValueError("tau_value must be nonnegative")
    rho = n % (delta + 1)
    rhs = Fraction(rho * ((delta + 1) ** 2 - rho ** 2), 4) + Fraction(3, 2) * tau_value
    return rhs, n <= rhs


def girth_certificate(candidate: Graph, members: Iterable[Graph]) -> str:
    """Cheap minimality certificate from girth and cycle counts.

    CERTIFIED_UNIQUE when the candidate is the unique girth maximizer of its
    class; CERTIFIED_BY_CYCLE_COUNTS when every other member's first
    diverging cycle count (lengths 3..2*girth-1) is strictly larger;
    INCONCLUSIVE otherwise. Inconclusive is not a refutation.
    """
    pool = list(members)
    cand_form = canonical_form(candidate)
    others = [g for g in pool if canonical_form(g) != cand_form]
    if len(others) == len(pool):
        raise ValueError("candidate is not a member of the class")
    g_girth = girth(candidate)
    other_girths = [girth(h) for h in others]
    if all(gh < g_girth for gh in other_girths):
        return CERTIFIED_UNIQUE
    if any(gh > g_girth for gh in other_girths):
        return INCONCLUSIVE
    if g_girth == math.inf:  # ties among acyclic members: no cycle counts to compare
        return INCONCLUSIVE
    window = min(2 * int(g_girth) - 1, candidate.n)
    _, cand_cyc = girth_and_cycles(candidate, window)
    for h, gh in zip(others, other_girths):
        if gh < g_girth:
            continue  # diverges at its own girth, in the candidate's favor
        _, h_cyc = girth_and_cycles(h, window)
        diverged = False
        for a, b in zip(cand_cyc, h_cyc):
            if a != b:
                diverged = a < b
                break
        if not diverged:
            return INCONCLUSIVE
    return CERTIFIED_BY_CYCLE_COUNTS
