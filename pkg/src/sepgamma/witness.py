"""Flag simplicial complexes witnessing gamma-polynomials as f-polynomials.

The witness graph is the complement of the line graph blown up by a clique
(K_2 for type A, K_4 for type B); its clique-count polynomial must equal
the target gamma-polynomial, and the constructors verify that equality
rather than assume it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExceededError, PreconditionError, VerificationError
from .graphs import (Graph, classify, complement, lex_product,
                     lex_product_complete, line_graph)
from .matching import gen_poly, independence_poly
from .polynomials import Poly

MAX_CLIQUES = 10 ** 7


def clique_f_poly(g: Graph, max_cliques: int = MAX_CLIQUES) -> Poly:
    """f-polynomial of the clique complex: coefficient of x^k counts the
    k-cliques, with 1 for the empty clique.  Ordered-extension enumeration,
    guarded by a total-clique bound."""
    masks = g.adjacency_masks()
    counts = [1]
    total = 1

    def rec(cand: int, size: int):
        nonlocal total
        m = cand
        while m:
            bit = m & -m
            m ^= bit
            v = bit.bit_length() - 1
            if size + 1 == len(counts):
                counts.append(0)
            counts[size + 1] += 1
            total += 1
            if total > max_cliques:
                raise BoundExceededError(f"more than {max_cliques} cliques")
            above = ~((bit << 1) - 1)
            rec(cand & masks[v] & above, size + 1)

    rec((1 << g.n) - 1, 0)
    return Poly(counts)


@dataclass(frozen=True)
class FlagWitness:
    """A verified witness: clique complex of witness_graph has f_poly equal
    to the target gamma-polynomial; m is the blow-up size used."""

    witness_graph: Graph
    f_poly: Poly
    m: int
    target: Poly


def _build_witness(g: Graph, m: int, target: Poly,
                   max_cliques: int = MAX_CLIQUES) -> FlagWitness:
    w = complement(lex_product_complete(line_graph(g), m))
    f = clique_f_poly(w, max_cliques)
    if f != target:
        raise VerificationError(
            f"witness f-polynomial {f.coeff_list()} != target {target.coeff_list()}")
    return FlagWitness(w, f, m, target)


def witness_a(g: Graph, max_cliques: int = MAX_CLIQUES) -> FlagWitness:
    """For even-cycle-free g: the clique complex of the complement of
    L(g)[K_2] has f-polynomial g(G,2x), the suspension gamma-polynomial."""
    if any(len(c) % 2 == 0 for c in classify(g).simple_cycles):
        raise PreconditionError("witness construction needs no even cycles")
    return _build_witness(g, 2, gen_poly(g).scale_arg(2), max_cliques)


def witness_b(g: Graph, max_cliques: int = MAX_CLIQUES) -> FlagWitness:
    """For a forest g: the clique complex of the complement of L(g)[K_4]
    has f-polynomial g(G,4x), the type-B gamma-polynomial."""
    if classify(g).simple_cycles:
        raise PreconditionError("witness construction needs a forest")
    return _build_witness(g, 4, gen_poly(g).scale_arg(4), max_cliques)


def independence_composition_check(g: Graph, h: Graph, max_n: int = 24) -> bool:
    """Composition law for independence polynomials over the lexicographic
    product: i(G[H], x) = i(G, i(H,x) - 1), checked by direct computation."""
    left = independence_poly(lex_product(g, h), max_n=max_n)
    inner = independence_poly(h, max_n=max_n) - Poly.one()
    right = independence_poly(g, max_n=max_n).compose(inner)
    return left == right
