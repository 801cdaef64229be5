"""The headline formulas: gamma-polynomials, h*-polynomials and normalized
volumes of the suspension polytope (type A) and the type-B polytope of a
graph, with the closed forms for wheels and cycles kept as regression
targets.

Every result is packaged as a SepResult whose invariants (palindromic h*,
h*(1) = volume = 2^dim gamma(1/4)) hold by construction and are re-checked
by the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import PreconditionError
from .graphs import (Graph, bipartition_of, classify, cycle_graph,
                     delete_vertices, even_cycle_families, suspension)
from .interior import cut_sum_gamma, interior_tilde_fast
from .matching import gen_poly
from .polynomials import Poly, gamma_to_hstar, hstar_to_gamma


@dataclass(frozen=True)
class SepResult:
    """gamma, h*, normalized volume and dimension of one polytope, plus the
    method that produced it (formula | cut_sum | interior | ehrhart).
    gamma is None only for ehrhart results on non-reflexive polytopes."""

    gamma: Optional[Poly]
    hstar: Poly
    volume: int
    dim: int
    method: str


def _pack(gamma: Poly, dim: int, method: str) -> SepResult:
    hstar = gamma_to_hstar(gamma, dim)
    return SepResult(gamma, hstar, hstar(1), dim, method)


# ---------------------------------------------------------------------------
# Type A (suspension)
# ---------------------------------------------------------------------------

def suspension_gamma_formula(g: Graph) -> Poly:
    """gamma of the suspension polytope when no edge lies in two even
    cycles:  g(G,2x) + sum_R (-2)^c(R) g(G-R,2x) x^(|E(R)|/2) over families
    R of vertex-disjoint even cycles."""
    if not classify(g).unique_even_cycle_condition:
        raise PreconditionError("an edge lies in two even cycles; "
                                "use the cut-sum route")
    total = gen_poly(g).scale_arg(2)
    for fam in even_cycle_families(g):
        sub = delete_vertices(g, fam.vertices()).graph
        term = gen_poly(sub).scale_arg(2).shift(fam.edge_count // 2)
        total = total + term * ((-2) ** fam.c)
    return total


def gamma_a_suspension(g: Graph) -> SepResult:
    """Type-A result for the suspension of g by the matching formula.
    The polytope has dimension n (the suspension is connected)."""
    return _pack(suspension_gamma_formula(g), g.n, "formula")


def gamma_a_suspension_noeven(g: Graph) -> SepResult:
    """Even-cycle-free specialization: gamma = g(G,2x) outright."""
    if any(len(c) % 2 == 0 for c in classify(g).simple_cycles):
        raise PreconditionError("graph has an even cycle")
    return _pack(gen_poly(g).scale_arg(2), g.n, "formula")


def gamma_a_cut_sum(g: Graph, max_n: int = 20) -> SepResult:
    """Type-A result by the cut-sum formula; valid for every graph."""
    return _pack(cut_sum_gamma(g, max_n=max_n), g.n, "cut_sum")


def gamma_a_oracle(g: Graph, **kw) -> SepResult:
    """Type-A result from lattice-point counts of the suspension polytope."""
    from .ehrhart import oracle_hstar_a

    data = oracle_hstar_a(suspension(g), **kw)
    hstar = data.hstar
    if hstar.degree != g.n:
        raise PreconditionError(
            f"suspension polytope came out {hstar.degree}-dimensional, expected {g.n}")
    return SepResult(hstar_to_gamma(hstar), hstar, hstar(1), g.n, "ehrhart")


def gamma_a(g: Graph, method: str = "auto", **kw) -> SepResult:
    """Dispatch: auto prefers the matching formula when its even-cycle
    condition holds and falls back to the cut sum otherwise."""
    if method == "auto":
        if classify(g).unique_even_cycle_condition:
            return gamma_a_suspension(g)
        return gamma_a_cut_sum(g, **kw)
    if method == "formula":
        return gamma_a_suspension(g)
    if method == "cuts":
        return gamma_a_cut_sum(g, **kw)
    if method == "ehrhart":
        return gamma_a_oracle(g, **kw)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Type B
# ---------------------------------------------------------------------------

def gamma_b(g: Graph) -> SepResult:
    """Type-B result for a bipartite cactus by the matching formula:
    g(G,4x) + sum_R (-1)^c(R) g(G-R,4x) (4x)^(|E(R)|/2)."""
    cls = classify(g)
    if not cls.bipartite:
        raise PreconditionError("type-B formula needs a bipartite graph")
    if not cls.cactus:
        raise PreconditionError("type-B formula needs a cactus graph")
    total = gen_poly(g).scale_arg(4)
    for fam in even_cycle_families(g):
        half = fam.edge_count // 2
        sub = delete_vertices(g, fam.vertices()).graph
        term = gen_poly(sub).scale_arg(4).shift(half)
        total = total + term * ((-1) ** fam.c * 4 ** half)
    return _pack(total, g.n, "formula")


def gamma_b_interior(g: Graph, max_n: int = 16) -> SepResult:
    """Type-B result for any bipartite graph: gamma = I~(4x), realized as
    sum_k |M(G,k)| (4x)^k."""
    b = bipartition_of(g)
    if b is None:
        raise PreconditionError("type-B interior route needs a bipartite graph")
    gamma = interior_tilde_fast(g, b, max_n=max_n).scale_arg(4)
    return _pack(gamma, g.n, "interior")


def gamma_b_oracle(g: Graph, **kw) -> SepResult:
    """Type-B result from lattice-point counts; gamma is defined only when
    the h*-polynomial is palindromic of full degree (bipartite inputs)."""
    from .ehrhart import oracle_hstar_b, reflexivity_check

    data = oracle_hstar_b(g, **kw)
    hstar = data.hstar
    gamma = hstar_to_gamma(hstar) if reflexivity_check(hstar, g.n) else None
    return SepResult(gamma, hstar, hstar(1), g.n, "ehrhart")


def gamma_b_dispatch(g: Graph, method: str = "auto", **kw) -> SepResult:
    if method == "auto":
        cls = classify(g)
        if not cls.bipartite:
            raise PreconditionError("type-B polytope of a non-bipartite graph "
                                    "is not reflexive; only method=ehrhart applies")
        if cls.cactus:
            return gamma_b(g)
        return gamma_b_interior(g, **kw)
    if method == "formula":
        return gamma_b(g)
    if method == "interior":
        return gamma_b_interior(g, **kw)
    if method == "ehrhart":
        return gamma_b_oracle(g, **kw)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Closed forms kept as regression targets
# ---------------------------------------------------------------------------

class WheelData(NamedTuple):
    gamma: Poly
    volume: int


def wheel_closed_form(n: int) -> WheelData:
    """Wheel on n+1 vertices = suspension of the n-cycle.  The volume is the
    integer sequence a_k = 2a_(k-1) + 2a_(k-2), a_0 = a_1 = 2 (realizing
    (1+sqrt 3)^n + (1-sqrt 3)^n), minus 2 when n is even; gamma comes from
    the matching formula."""
    if n < 3:
        raise PreconditionError(f"wheel rim needs >= 3 vertices, got {n}")
    prev, cur = 2, 2
    for _ in range(n - 1):
        prev, cur = cur, 2 * cur + 2 * prev
    volume = cur - 2 if n % 2 == 0 else cur
    return WheelData(gamma_a_suspension(cycle_graph(n)).gamma, volume)


def gamma_a_cycle_reference(n: int) -> Poly:
    """gamma of the type-A polytope of the plain n-cycle:
    sum_{i <= (n-1)/2} C(2i, i) x^i.  Reference values for the oracle."""
    if n < 3:
        raise PreconditionError(f"cycle needs >= 3 vertices, got {n}")
    return Poly([math.comb(2 * i, i) for i in range((n - 1) // 2 + 1)])
