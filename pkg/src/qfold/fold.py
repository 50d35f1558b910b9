"""Diagram folding at the character level.

For a non-simply laced g with simply-laced cover g' and automorphism
sigma, this module provides the sigma-action on g'-monomials, extraction
of the sigma-invariant part (regrouped over g-nodes), the folded
t-character homomorphism Y_{j,a} -> Y_{orbit(j),a}, and the classical
cross-checks: the first fundamental T_1 lists for B_l and D_{l+1} and
the rational factor f_l(q,t) with its two limits.
"""

import sympy

from . import charalg, liealg
from .ring import Character, Monomial, mono


class RegroupFailed(ValueError):
    """A sigma-invariant monomial is not orbit-balanced."""


def sigma_act(fold, m):
    """Relabel nodes of a g'-monomial by sigma; parameters unchanged."""
    return Monomial(m.kind, [((fold.sigma_of(i), p), v)
                             for (i, p), v in m.exps.items()])


def invariant_part(fold, char):
    """The sigma-invariant monomials, rewritten over g-nodes.

    Orbit partners must carry equal exponents at equal parameters (which
    sigma-invariance guarantees); the orbit's common variable is kept
    once, at the g-node index.
    """
    out = {}
    for m, c in char.terms.items():
        if sigma_act(fold, m) != m:
            continue
        exps = {}
        for (i, p), v in m.exps.items():
            a = fold.node_of(i)
            key = (a, p)
            if key in exps and exps[key] != v:
                raise RegroupFailed("unbalanced orbit at node %d" % a)
            exps[key] = v
        grouped = Monomial(m.kind, exps)
        if grouped in out:
            out[grouped] = out[grouped] + c
        else:
            out[grouped] = c
    return Character(out)


def folded_tchar(fold, char):
    """Identify Y_{j,a} with Y_{orbit(j),a} and merge terms."""
    out = Character()
    for m, c in char.terms.items():
        img = Monomial(m.kind, [((fold.node_of(i), p), v)
                                for (i, p), v in m.exps.items()])
        out = out + Character({img: c})
    return out


def dual_weight(fold, m):
    """Weight of a sigma-invariant g'-monomial on the dual-side lattice."""
    return liealg.lattice_maps(fold).gprime_to_dual(
        m.weight(fold.gprime.rank))


# ---------------------------------------------------------------------------
# the first-fundamental T_1 lists (q -> 1 limits)

def t1_list_b(el):
    """T_1 for B_el as a folded t-character: 2*el + 2 terms, one doubled."""
    terms = []
    for i in range(1, el):
        terms.append((1, [(i, i - 1, 1), (i - 1, i, -1)]))
    terms.append((1, [(el, el - 1, 2), (el - 1, el, -1)]))
    terms.append((2, [(el, el - 1, 1), (el, el + 1, -1)]))
    terms.append((1, [(el - 1, el, 1), (el, el + 1, -2)]))
    for i in range(1, el):
        terms.append((1, [(i - 1, 2 * el - i, 1), (i, 2 * el - i + 1, -1)]))
    return _assemble(terms)


def t1_list_d(el):
    """T_1 for D_{el+1} as a t-character: 2*el + 2 terms.

    Uses the chain numbering 1..el-1 with fork nodes el, el+1; for el = 3
    the rank-4 datum numbers the trivalent node first, so nodes are
    remapped accordingly.
    """
    if el == 3:
        relabel = {0: 0, 1: 2, 2: 1, 3: 3, 4: 4}.get
    else:
        relabel = lambda i: i
    terms = []
    for i in range(1, el):
        terms.append((1, [(i, i - 1, 1), (i - 1, i, -1)]))
    terms.append((1, [(el + 1, el - 1, 1), (el, el - 1, 1),
                      (el - 1, el, -1)]))
    terms.append((1, [(el + 1, el - 1, 1), (el, el + 1, -1)]))
    terms.append((1, [(el, el - 1, 1), (el + 1, el + 1, -1)]))
    terms.append((1, [(el - 1, el, 1), (el, el + 1, -1),
                      (el + 1, el + 1, -1)]))
    for i in range(1, el):
        terms.append((1, [(i - 1, 2 * el - i, 1), (i, 2 * el - i + 1, -1)]))
    return _assemble(terms, relabel)


def _assemble(terms, relabel=lambda i: i):
    out = Character()
    for coeff, factors in terms:
        factors = [(relabel(i), n, v) for i, n, v in factors if i >= 1]
        m = Monomial("Y", [((i, (0, 0, n)), v) for i, n, v in factors])
        out = out + Character({m: coeff})
    return out


def f_factor():
    """The rational coefficient of the Lambda_0 term, and its two limits."""
    q, t = sympy.symbols("q t")
    f = (q + 1 / q) * (q / t - t / q) / (q ** 2 / t - t / q ** 2)
    return (f, sympy.simplify(sympy.limit(f, t, 1)),
            sympy.simplify(sympy.limit(f, q, 1)))


def check_fold_lemma(g):
    """Folding consistency: F(Y_{1,1}) computed directly in the folded
    ring equals the folded t-character closure from the simply-laced
    cover. Returns True/False.
    """
    if isinstance(g, str):
        g = liealg.build_algebra(g)
    fold = liealg.folding_data(g)
    direct = charalg.fm_closure(charalg.FoldedT(g),
                                mono("Y", (1, 0, 0, 0)))
    rep = fold.orbit(1)[0]
    cover = charalg.fm_closure(charalg.FoldedT(fold.gprime),
                               mono("Y", (rep, 0, 0, 0)))
    return folded_tchar(fold, cover) == direct
