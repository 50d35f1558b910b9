"""Bethe-Ansatz systems, the folded QQ-system and Bethe vectors.

Multiplicative (XXZ-type) systems are stored factor-by-factor so that
folding — identifying root variables along the diagram automorphism —
is a purely syntactic operation, certified afterwards by rational
normal forms.  Additive (Gaudin-type) systems carry numeric or symbolic
weight pairings and are solved by a damped Newton iteration.  The
QQ-system is handled as exact polynomial identities, and the Bethe
vector lives in a free algebra of lowering words with a partial
commutation rule for folding limits.
"""

import itertools
import random

import numpy
import sympy

from . import liealg


class PoleDetected(ArithmeticError):
    """A Laurent coefficient at a negative power of eps survived."""


class NoConvergence(RuntimeError):
    """Newton iteration failed for one seed (reported, not fatal)."""


class Infeasible(ValueError):
    """No complementary polynomials within the given degree bounds."""


KINDS = ("standard", "folded", "twisted", "gaudin")


def _root_symbol(i, r):
    return sympy.Symbol("w_%d_%d" % (i, r))


class BAESystem:
    """One Bethe-Ansatz system: per-node roots plus equation factors.

    kind: standard|folded|twisted (multiplicative, one rational equation
    LHS = RHS per root) or gaudin (additive, LHS - RHS stored the same
    way).  counts maps node -> number of roots; drinfeld maps node ->
    list of Drinfeld polynomials (sympy expressions in z).  For gaudin
    kind, data carries points z_k, pairings <alpha_i, mu_k-check> and
    twist <alpha_i, chi>.
    """

    def __init__(self, kind, g, counts, param, drinfeld=None, gaudin=None):
        if kind not in KINDS:
            raise ValueError("unknown BAE kind %r" % (kind,))
        self.kind = kind
        self.g = g
        self.counts = dict(counts)
        if set(self.counts) - set(g.nodes):
            raise ValueError("root counts name nodes outside the diagram")
        self.param = param
        self.drinfeld = drinfeld or {}
        self.gaudin = gaudin
        if kind == "gaudin" and gaudin is None:
            raise ValueError("gaudin kind needs points/pairings/twist data")

    def roots(self):
        return [(i, r) for i in sorted(self.counts)
                for r in range(self.counts[i])]

    def symbol(self, i, r):
        return _root_symbol(i, r)

    # -- multiplicative factors -------------------------------------------
    def _qi(self, i):
        # the folded system lives uniformly on the t-lattice
        if self.kind == "folded":
            return self.param
        return self.param ** self.g.di_of(i)

    def _lhs(self, i, r):
        qi = self._qi(i)
        w = self.symbol(i, r)
        out = sympy.Integer(1)
        for poly in self.drinfeld.get(i, ()):
            z = sympy.Symbol("z")
            deg = sympy.degree(poly, z)
            out *= qi ** deg * poly.subs(z, 1 / (qi * w)) \
                / poly.subs(z, qi / w)
        return out

    def _cross_factor(self, i, j, wi, wj):
        q = self.param
        g = self.g
        if self.kind == "standard":
            b = g.di_of(i) * g.c(i, j)
            if not b:
                return sympy.Integer(1)
            return (wi - wj * q ** (-b)) / (wi - wj * q ** b)
        c = -g.c(j, i)
        if not c:
            return sympy.Integer(1)
        if self.kind == "folded":
            return ((wi - wj * q) / (wi - wj / q)) ** c
        # twisted: the spectral parameter is raised to the lacing power
        return (wi ** c - (wj * q) ** c) / (wi ** c - (wj / q) ** c)

    def _rhs(self, i, r):
        qi = self._qi(i)
        w = self.symbol(i, r)
        out = -sympy.Integer(1)
        for s in range(self.counts[i]):
            if s == r:
                continue
            ws = self.symbol(i, s)
            out *= (w - ws * qi ** -2) / (w - ws * qi ** 2)
        for j in sorted(self.counts):
            if j == i:
                continue
            for s in range(self.counts[j]):
                out *= self._cross_factor(i, j, w, self.symbol(j, s))
        return out

    # -- additive equations ------------------------------------------------
    def _gaudin_expr(self, i, r):
        points, pairings, twist = (self.gaudin["points"],
                                   self.gaudin["pairings"],
                                   self.gaudin["twist"])
        w = self.symbol(i, r)
        out = -sympy.sympify(twist[i])
        for k, z in enumerate(points):
            out += sympy.sympify(pairings[i][k]) / (w - z)
        for j in sorted(self.counts):
            pair = self.g.c(j, i)
            if not pair:
                continue
            for s in range(self.counts[j]):
                if (j, s) == (i, r):
                    continue
                out -= pair / (w - self.symbol(j, s))
        return out

    def equations(self):
        """List of ((i, r), expr) with expr == 0 the Bethe equation."""
        out = []
        for i, r in self.roots():
            if self.kind == "gaudin":
                out.append(((i, r), self._gaudin_expr(i, r)))
            else:
                out.append(((i, r), self._lhs(i, r) - self._rhs(i, r)))
        return out

    def residuals(self, assignment, substitutions=None):
        """Numeric residual per equation at a root assignment.

        assignment maps (i, r) -> value; substitutions maps extra
        symbols (the deformation parameter, Drinfeld coefficients) to
        values for the multiplicative kinds.
        """
        subs = {self.symbol(i, r): v for (i, r), v in assignment.items()}
        if substitutions:
            subs.update(substitutions)
        return [complex(sympy.N(expr.subs(subs)))
                for _, expr in self.equations()]


def build_bae(kind, g, counts, param=None, drinfeld=None, gaudin=None):
    if isinstance(g, str):
        g = liealg.build_algebra(g)
    if param is None:
        param = sympy.Symbol("t" if kind in ("folded", "gaudin") else "q")
    return BAESystem(kind, g, counts, param, drinfeld, gaudin)


def _orbit_rep(fold, j):
    return fold.node_of(j)


def fold_bae(sys, fold, certify=True):
    """Fold a simply-laced system along sigma and certify the result.

    The roots of orbit-partner nodes are identified, equations of the
    orbit representatives are kept, and the result is compared as a
    rational expression against the directly built system over g
    (kind folded for multiplicative input, kind gaudin over the
    Langlands dual for additive input).  Returns (system, certified).
    """
    gp = sys.g
    reps = {}
    for j in gp.nodes:
        a = _orbit_rep(fold, j)
        if sys.counts.get(j, 0) != sys.counts.get(fold.orbit(a)[0], 0):
            raise ValueError("orbit root counts differ at node %d" % j)
        reps.setdefault(a, j)
    counts = {a: sys.counts[j] for a, j in reps.items()}
    if sys.kind == "standard":
        target = build_bae("folded", fold.g, counts, sys.param,
                           drinfeld={a: sys.drinfeld.get(j, ())
                                     for a, j in reps.items()})
    elif sys.kind == "gaudin":
        # the folded equations pair with the coroots of g itself (the
        # weights are g-coweights, i.e. weights of its Langlands dual)
        data = sys.gaudin
        gaudin = {
            "points": list(data["points"]),
            "pairings": {a: data["pairings"][j] for a, j in reps.items()},
            "twist": {a: data["twist"][j] for a, j in reps.items()},
        }
        target = build_bae("gaudin", fold.g, counts, sys.param, gaudin=gaudin)
    else:
        raise ValueError("only standard/gaudin systems can be folded")
    certified = True
    if certify:
        ident = {_root_symbol(j, r): _root_symbol(_orbit_rep(fold, j), r)
                 for j in gp.nodes for r in range(sys.counts.get(j, 0))}
        folded_eqs = {key: expr.subs(ident, simultaneous=True)
                      for key, expr in sys.equations()}
        target_eqs = dict(target.equations())
        for a, j in reps.items():
            for r in range(counts[a]):
                diff = folded_eqs[(j, r)] - target_eqs[(a, r)]
                if sympy.cancel(sympy.together(diff)) != 0:
                    certified = False
        # orbit partners must fold onto the representative equation
        for j in gp.nodes:
            a = _orbit_rep(fold, j)
            if j == reps[a]:
                continue
            for r in range(sys.counts[j]):
                diff = folded_eqs[(j, r)] - folded_eqs[(reps[a], r)]
                if sympy.cancel(sympy.together(diff)) != 0:
                    certified = False
    return target, certified


# ---------------------------------------------------------------------------
# numeric Gaudin solver

def _gaudin_fx(counts, points, pairings, twist, cartan_pair):
    roots = [(i, r) for i in sorted(counts) for r in range(counts[i])]
    index = {key: k for k, key in enumerate(roots)}

    def fx(w):
        # diverging Newton iterates may overflow before being rejected;
        # the caller screens non-finite values, so keep that silent
        with numpy.errstate(all="ignore"):
            return _fx_arrays(w)

    def _fx_arrays(w):
        out = numpy.zeros(len(roots), dtype=complex)
        jac = numpy.zeros((len(roots), len(roots)), dtype=complex)
        for (i, r), j in index.items():
            acc = -twist[i]
            for k, z in enumerate(points):
                acc += pairings[i][k] / (w[j] - z)
                jac[j, j] -= pairings[i][k] / (w[j] - z) ** 2
            for (i2, r2), s in index.items():
                if s == j:
                    continue
                pair = cartan_pair(i2, i)
                if not pair:
                    continue
                acc -= pair / (w[j] - w[s])
                jac[j, j] += pair / (w[j] - w[s]) ** 2
                jac[j, s] -= pair / (w[j] - w[s]) ** 2
            out[j] = acc
        return out, jac

    return roots, fx


def solve_gaudin(sys, seeds=40, tol=1e-10, rng=None, max_iter=60):
    """Damped-Newton solutions of an additive system, deduplicated.

    Solutions are equivalence classes under permutations of the roots
    within each node; near-collisions (root-root or root-point) are
    rejected as degenerate.  Returns a list of {(i, r): complex}.
    """
    if sys.kind != "gaudin":
        raise ValueError("numeric solver handles the gaudin kind only")
    rng = rng or random.Random(0)
    data = sys.gaudin
    points = [complex(z) for z in data["points"]]
    pairings = {i: [complex(v) for v in row]
                for i, row in data["pairings"].items()}
    twist = {i: complex(v) for i, v in data["twist"].items()}
    roots, fx = _gaudin_fx(sys.counts, points, pairings, twist,
                           lambda a, b: sys.g.c(a, b))
    scale = max([abs(z) for z in points] + [abs(v) for v in twist.values()]
                + [1.0])
    solutions = []
    seen = set()
    for _ in range(seeds):
        w = numpy.array([complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
                         * scale for _ in roots])
        ok = True
        for _ in range(max_iter):
            val, jac = fx(w)
            err = numpy.max(numpy.abs(val))
            if err < tol:
                break
            try:
                step = numpy.linalg.solve(jac, -val)
            except numpy.linalg.LinAlgError:
                ok = False
                break
            lam = 1.0
            while lam > 1e-12:
                cand = w + lam * step
                if not _degenerate(cand, roots, points, scale):
                    cval, _ = fx(cand)
                    if numpy.max(numpy.abs(cval)) < err:
                        w = cand
                        break
                lam /= 2
            else:
                ok = False
                break
        else:
            ok = False
        if not ok:
            continue
        val, _ = fx(w)
        if numpy.max(numpy.abs(val)) >= tol:
            continue
        if _degenerate(w, roots, points, scale):
            continue
        key = _solution_key(w, roots)
        if key not in seen:
            seen.add(key)
            solutions.append({roots[k]: complex(w[k])
                              for k in range(len(roots))})
    return sorted(solutions, key=lambda sol: _solution_key(
        numpy.array([sol[k] for k in roots]), roots))


def _degenerate(w, roots, points, scale, margin=1e-6):
    for a in range(len(roots)):
        for z in points:
            if abs(w[a] - z) < margin * scale:
                return True
        for b in range(a + 1, len(roots)):
            if abs(w[a] - w[b]) < margin * scale:
                return True
    return False


def _solution_key(w, roots):
    by_node = {}
    for k, (i, _) in enumerate(roots):
        by_node.setdefault(i, []).append(w[k])
    out = []
    for i in sorted(by_node):
        for v in sorted(by_node[i], key=lambda z: (round(z.real, 6),
                                                   round(z.imag, 6))):
            out.append((i, round(v.real, 6), round(v.imag, 6)))
    return tuple(out)


# ---------------------------------------------------------------------------
# QQ-system

def _qq_sides(g, Q, Qt, u, i, q, z):
    lhs = (Q[i].subs(z, z / q) * Qt[i].subs(z, z * q) / u[i]
           - u[i] * Q[i].subs(z, z * q) * Qt[i].subs(z, z / q))
    rhs = sympy.Integer(1)
    for j in g.nodes:
        if j != i and g.c(j, i):
            rhs *= Q[j] ** (-g.c(j, i))
    return sympy.expand(lhs), sympy.expand(rhs)


def qq_check(g, Q, Qt, u, q, samples=None):
    """Exact verification of the folded QQ-system.

    Q, Qt map node -> sympy polynomial in z; u maps node -> nonzero
    scalar; q is an exact scalar.  Optional samples pre-filter by
    evaluation before the full coefficient comparison.  Returns (ok,
    witness) where witness names the node and offending coefficient.
    """
    if isinstance(g, str):
        g = liealg.build_algebra(g)
    z = sympy.Symbol("z")
    for i in g.nodes:
        lhs, rhs = _qq_sides(g, Q, Qt, u, i, sympy.sympify(q), z)
        if samples:
            for a in samples:
                if sympy.simplify((lhs - rhs).subs(z, a)) != 0:
                    return False, (i, ("sample", a))
        diff = sympy.Poly(sympy.simplify(lhs - rhs), z)
        if not diff.is_zero:
            deg = diff.degree()
            for k, c in enumerate(reversed(diff.all_coeffs())):
                if sympy.simplify(c) != 0:
                    return False, (i, ("coefficient", k, c))
            return False, (i, ("degree", deg))
    return True, None


def qq_twist(g, Q, q):
    """Twist scalars u_i forced by the QQ-system at the roots of Q_i.

    Evaluating the system at z = w q^{+-1} for a root w of Q_i and
    eliminating Qt_i(w) pins u_i^2; the consistency of that value
    across the roots of Q_i is precisely the Bethe equation.  Returns
    {node: u_i} (a square root, kept exact by sympy) or raises
    Infeasible on an inconsistent root system.
    """
    if isinstance(g, str):
        g = liealg.build_algebra(g)
    z = sympy.Symbol("z")
    q = sympy.sympify(q)
    out = {}
    for i in g.nodes:
        roots = sympy.roots(sympy.Poly(Q[i], z))
        u_sq = None
        for w in roots:
            rhs_hi = sympy.Integer(1)
            rhs_lo = sympy.Integer(1)
            for j in g.nodes:
                if j != i and g.c(j, i):
                    rhs_hi *= Q[j].subs(z, w * q) ** (-g.c(j, i))
                    rhs_lo *= Q[j].subs(z, w / q) ** (-g.c(j, i))
            val = sympy.simplify(
                -rhs_hi * Q[i].subs(z, w / q**2)
                / (rhs_lo * Q[i].subs(z, w * q**2)))
            if u_sq is None:
                u_sq = val
            elif sympy.simplify(u_sq - val) != 0:
                raise Infeasible("roots of Q_%d disagree on the twist" % i)
        if u_sq is None:
            raise Infeasible("Q_%d has no roots to pin the twist" % i)
        out[i] = sympy.sqrt(u_sq)
    return out


def qq_solve_tilde(g, Q, u, q, degree_bounds):
    """Solve the QQ-system linearly for the complementary polynomials.

    degree_bounds maps node -> max degree of Qt_i.  Returns {node:
    polynomial} or raises Infeasible with the residual system.
    """
    if isinstance(g, str):
        g = liealg.build_algebra(g)
    z = sympy.Symbol("z")
    q = sympy.sympify(q)
    out = {}
    for i in g.nodes:
        coeffs = sympy.symbols("c0:%d" % (degree_bounds[i] + 1))
        qt = sum(c * z ** k for k, c in enumerate(coeffs))
        lhs = (Q[i].subs(z, z / q) * qt.subs(z, z * q) / u[i]
               - u[i] * Q[i].subs(z, z * q) * qt.subs(z, z / q))
        rhs = sympy.Integer(1)
        for j in g.nodes:
            if j != i and g.c(j, i):
                rhs *= Q[j] ** (-g.c(j, i))
        eqs = sympy.Poly(sympy.expand(lhs - rhs), z).all_coeffs()
        sols = sympy.linsolve(eqs, coeffs)
        if not sols:
            raise Infeasible("no Qt_%d within degree %d"
                             % (i, degree_bounds[i]))
        sol = next(iter(sols))
        if any(v.free_symbols & set(coeffs) for v in sol):
            sol = [v.subs({c: 0 for c in coeffs}) for v in sol]
        out[i] = sympy.expand(sum(v * z ** k for k, v in enumerate(sol)))
    return out


# ---------------------------------------------------------------------------
# Bethe vectors in the free lowering algebra

def bethe_vector(labels, ws):
    """The permutation-sum Bethe covector coefficients.

    labels: node labels i_1..i_m; ws: values or symbols w_1..w_m.
    Returns {word tuple: coefficient}, the word being the sequence of
    lowering indices applied left-to-right to the highest vector.
    """
    m = len(labels)
    out = {}
    for tau in itertools.permutations(range(m)):
        coeff = sympy.Integer(1)
        for a in range(m - 1):
            coeff /= ws[tau[a]] - ws[tau[a + 1]]
        coeff /= ws[tau[m - 1]]
        word = tuple(labels[k] for k in tau)
        out[word] = out.get(word, 0) + coeff
    return out


def _normal_form(word, commutes):
    """Bubble into the lexicographically least word of the trace class."""
    word = list(word)
    changed = True
    while changed:
        changed = False
        for a in range(len(word) - 1):
            x, y = word[a], word[a + 1]
            if x > y and commutes(x, y):
                word[a], word[a + 1] = y, x
                changed = True
    return tuple(word)


def bethe_fold_limit(fold, labels, base_ws, pairs, order=2):
    """Coincidence limit of the Bethe vector along sigma-pairs.

    pairs lists (a, b): position b's root is set to base_ws[a] + eps.
    Lowering symbols at sigma-paired distinct nodes commute; after
    imposing that normal form, each word's coefficient is expanded as a
    Laurent series in eps.  Returns {word: eps^0 coefficient}; raises
    PoleDetected if any negative power survives.
    """
    eps = sympy.Symbol("epsilon")
    ws = [sympy.sympify(v) for v in base_ws]
    for a, b in pairs:
        ws[b] = ws[a] + eps

    def commutes(x, y):
        return x != y and fold.sigma_of(x) == y

    raw = bethe_vector(labels, ws)
    merged = {}
    for word, coeff in raw.items():
        key = _normal_form(word, commutes)
        merged[key] = merged.get(key, 0) + coeff
    out = {}
    for word, coeff in merged.items():
        num, den = sympy.cancel(sympy.together(coeff)).as_numer_denom()
        vnum = sympy.Poly(num, eps).monoms()[-1][0] if num != 0 else None
        vden = sympy.Poly(den, eps).monoms()[-1][0]
        if num == 0:
            continue
        if vnum < vden:
            raise PoleDetected("word %r has a pole of order %d"
                               % (word, vden - vnum))
        value = sympy.cancel((num / den).subs(eps, 0))
        if value != 0:
            out[word] = value
    return out
