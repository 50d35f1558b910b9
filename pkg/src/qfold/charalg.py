"""Character rings and the closure algorithm.

Four ring flavors share one engine:

- StandardQ: q-characters on the lattice q^Z (variables Y).
- FoldedT: folded t-characters on t^Z (variables Y, blocks with the
  symmetric A-monomials).
- TwistedT: twisted t-characters on eps^Z t^Z (variables Z).
- InterpQT: interpolating (q,t)-characters on q^Z t^Z with coefficients
  in Z[a] (variables Y, generator blocks anchored on W-strings).

The closure operator F(m) completes a dominant monomial to an element of
the intersection of the node subrings, mimicking the standard algorithm
for q-characters.
"""

import heapq
import itertools
import os
from fractions import Fraction

from . import liealg
from .ring import ALPHA, ONE, AlphaPoly, Character, Monomial

DEFAULT_CAP = 10 ** 6
CAP_ENV = "QFOLD_CLOSURE_CAP"


class NotInRing(ValueError):
    """The element is not expressible in the ring's generators."""


class BlockFactorizationFailed(ValueError):
    """Node content does not factor into generator blocks."""


class CapExceeded(RuntimeError):
    """The closure exceeded its step budget."""


class VerificationFailed(RuntimeError):
    """Closure bookkeeping produced inconsistent multiplicities."""


def closure_cap(cap=None):
    if cap is not None:
        return cap
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


# ---------------------------------------------------------------------------
# flavors

class RingFlavor:
    kind = "Y"

    def __init__(self, g):
        if isinstance(g, str):
            g = liealg.build_algebra(g)
        self.g = g

    @property
    def rank(self):
        return self.g.rank

    def weight_algebra(self):
        """Algebra whose root system grades monomial weights."""
        return self.g

    def phase_period(self):
        return 2 * self.g.d

    def height_drop(self, top_weight, weight):
        """ht(wt(top) - wt(M)), a nonnegative rational for descendants."""
        diff = tuple(top_weight[k] - weight[k] for k in range(len(weight)))
        return sum(liealg.root_coords(self.weight_algebra(), diff),
                   Fraction(0))

    # -- interface implemented by subclasses
    def is_dominant(self, mono_, i, coeff=ONE):
        raise NotImplementedError

    def node_blocks(self, mono_, i):
        """Factor positive node-i content into (tail_terms, power) blocks.

        Returns a list of block expansions; each is a list of
        (AlphaPoly, Monomial multiplier) pairs starting with (1, id).
        """
        raise NotImplementedError

    def node_expand(self, mono_, i):
        blocks = self.node_blocks(mono_, i)
        out = Character(mono_)
        for terms in blocks:
            out = out * Character({mult: c for c, mult in terms})
        return out


def _positive_greedy_strings(content, length):
    """Greedily factor {m: exp} into strings of `length` q-steps of 2.

    Returns (list of (anchor_m, count) strings, dict of leftover singles).
    Only positive exponents participate; negative entries are ignored.
    """
    work = {m: v for m, v in content.items() if v > 0}
    strings = []
    singles = {}
    for m in sorted(work):
        while work.get(m, 0) > 0:
            positions = [m + 2 * k for k in range(length)]
            if length > 1 and all(work.get(p, 0) > 0 for p in positions):
                count = min(work[p] for p in positions)
                for p in positions:
                    work[p] -= count
                strings.append((m, count))
            else:
                singles[m] = singles.get(m, 0) + work[m]
                work[m] = 0
    return strings, singles


def _sl2_string_blocks(content, step, tail_fn, kind):
    """Expand positive node content as a product of sl2 string characters.

    content: {position: count} (negatives ignored); maximal strings with
    the given step are extracted greedily from the bottom; tail_fn(pos)
    is the inverse generator monomial that flips the variable at pos.
    The (k+1)-term string character flips variables from the top down,
    which keeps products of strings free of extra dominant monomials.
    """
    work = {p: v for p, v in content.items() if v > 0}
    blocks = []
    while work:
        b = min(work)
        chain = [b]
        while chain[-1] + step in work:
            chain.append(chain[-1] + step)
        count = min(work[p] for p in chain)
        for p in chain:
            work[p] -= count
            if not work[p]:
                del work[p]
        acc = Monomial(kind)
        terms = [(ONE, acc)]
        for p in reversed(chain):
            acc = acc * tail_fn(p)
            terms.append((ONE, acc))
        blocks.append(_pow_terms(terms, count))
    return blocks


def _pow_terms(terms, power):
    """Raise a block expansion [(coeff, mono)] to an integer power >= 1."""
    out = [(ONE, Monomial(terms[0][1].kind))]
    for _ in range(power):
        nxt = {}
        for c1, m1 in out:
            for c2, m2 in terms:
                m = m1 * m2
                c = c1 * c2
                if m in nxt:
                    nxt[m] = nxt[m] + c
                else:
                    nxt[m] = c
        out = [(c, m) for m, c in nxt.items() if c]
    return out


class StandardQ(RingFlavor):
    """q-characters: Y-variables on the lattice q^Z."""

    def a_monomial(self, i, m):
        g = self.g
        exps = [((i, (0, m + g.di_of(i), 0)), 1),
                ((i, (0, m - g.di_of(i), 0)), 1)]
        for j in g.nodes:
            if j == i:
                continue
            c = g.c(j, i)
            if c == -1:
                exps.append(((j, (0, m, 0)), -1))
            elif c == -2:
                exps.append(((j, (0, m - 1, 0)), -1))
                exps.append(((j, (0, m + 1, 0)), -1))
            elif c == -3:
                exps.append(((j, (0, m - 2, 0)), -1))
                exps.append(((j, (0, m, 0)), -1))
                exps.append(((j, (0, m + 2, 0)), -1))
        return Monomial("Y", exps)

    def is_dominant(self, mono_, i, coeff=ONE):
        content = mono_.node_exps(i)
        return bool(content) and all(v > 0 for v in content.values())

    def node_blocks(self, mono_, i):
        qi = self.g.di_of(i)
        content = {}
        for (e, m, n), v in mono_.node_exps(i).items():
            content[m] = content.get(m, 0) + v
        return _sl2_string_blocks(
            content, 2 * qi,
            lambda m: self.a_monomial(i, m + qi).inverse(), "Y")


class FoldedT(RingFlavor):
    """Folded t-characters: Y-variables on t^Z, symmetric A-monomials."""

    def a_monomial(self, i, n):
        g = self.g
        exps = [((i, (0, 0, n + 1)), 1), ((i, (0, 0, n - 1)), 1)]
        for j in g.nodes:
            if j != i and g.c(j, i):
                exps.append(((j, (0, 0, n)), g.c(j, i)))
        return Monomial("Y", exps)

    def is_dominant(self, mono_, i, coeff=ONE):
        content = mono_.node_exps(i)
        return bool(content) and all(v > 0 for v in content.values())

    def node_blocks(self, mono_, i):
        content = {}
        for (e, m, n), v in mono_.node_exps(i).items():
            content[n] = content.get(n, 0) + v
        return _sl2_string_blocks(
            content, 2,
            lambda n: self.a_monomial(i, n + 1).inverse(), "Y")


class InterpQT(RingFlavor):
    """Interpolating (q,t)-characters on the lattice q^Z t^Z."""

    def a_tilde(self, i, m, n):
        g = self.g
        di = g.di_of(i)
        exps = [((i, (0, m - di, n - 1)), 1), ((i, (0, m + di, n + 1)), 1)]
        for j in g.nodes:
            if j == i:
                continue
            c = g.c(j, i)
            if c == -1:
                exps.append(((j, (0, m, n)), -1))
            elif c == -2:
                exps.append(((j, (0, m - 1, n)), -1))
                exps.append(((j, (0, m + 1, n)), -1))
            elif c == -3:
                exps.append(((j, (0, m - 2, n)), -1))
                exps.append(((j, (0, m, n)), -1))
                exps.append(((j, (0, m + 2, n)), -1))
        return Monomial("Y", exps)

    def w_block(self, i, m, n):
        """The W-string monomial for node i anchored at center (m, n)."""
        gap = self.g.d - self.g.di_of(i)
        return Monomial("Y", [((i, (0, m + 2 * k - gap, n)), 1)
                              for k in range(gap + 1)])

    def w_tail_terms(self, i, m, n):
        """Tail of the W-block generator anchored at center (m, n)."""
        d, di = self.g.d, self.g.di_of(i)
        ident = Monomial("Y")
        if di == d:
            return [(ONE, ident),
                    (ONE, self.a_tilde(i, m + d, n + 1).inverse())]
        if di == d - 1:
            a2 = self.a_tilde(i, m + 2, n + 1).inverse()
            a0 = self.a_tilde(i, m, n + 1).inverse()
            return [(ONE, ident), (ALPHA, a2), (ONE, a2 * a0)]
        a3 = self.a_tilde(i, m + 3, n + 1).inverse()
        a1 = self.a_tilde(i, m + 1, n + 1).inverse()
        am = self.a_tilde(i, m - 1, n + 1).inverse()
        return [(ONE, ident), (ALPHA, a3), (ALPHA, a3 * a1),
                (ONE, a3 * a1 * am)]

    def single_tail_terms(self, i, m, n):
        """Tail of the alpha*Y generator at (m, n)."""
        di = self.g.di_of(i)
        return [(ONE, Monomial("Y")),
                (ONE, self.a_tilde(i, m + di, n + 1).inverse())]

    def _layered_content(self, mono_, i):
        layers = {}
        for (e, m, n), v in mono_.node_exps(i).items():
            layers.setdefault(n, {})[m] = v
        return layers

    def is_dominant(self, mono_, i, coeff=ONE):
        content = mono_.node_exps(i)
        if not any(v > 0 for v in content.values()):
            return False
        # q-specialization image: collapse t
        qsums = {}
        for (e, m, n), v in content.items():
            qsums[m] = qsums.get(m, 0) + v
        if any(v < 0 for v in qsums.values()):
            return False
        # t-specialization image: collapse q
        tsums = {}
        for (e, m, n), v in content.items():
            tsums[n] = tsums.get(n, 0) + v
        if any(v < 0 for v in tsums.values()):
            return False
        if not coeff.alpha_multiple():
            # twisted image must exist and be dominant
            try:
                zexps = _z_image_node(self.g, i, mono_)
            except NotInRing:
                return False
            if any(v < 0 for v in zexps.values()):
                return False
        return True

    def node_blocks(self, mono_, i):
        gap = self.g.d - self.g.di_of(i)
        blocks = []
        for n, content in sorted(self._layered_content(mono_, i).items()):
            strings, singles = _positive_greedy_strings(content, gap + 1)
            for anchor, count in strings:
                terms = self.w_tail_terms(i, anchor + gap, n)
                blocks.append(_pow_terms(terms, count))
            for m, count in sorted(singles.items()):
                terms = self.single_tail_terms(i, m, n)
                blocks.append(_pow_terms(terms, count))
        return blocks


class TwistedT(RingFlavor):
    """Twisted t-characters: Z-variables on the lattice eps^Z t^Z.

    Constructed from the folding of a non-simply laced g; the ring hosts
    characters of the twisted quantum affine algebra dual to g-hat.
    """
    kind = "Z"

    def __init__(self, g):
        super().__init__(g)
        if self.g.simply_laced:
            raise ValueError("twisted ring requires non-simply laced g")
        self._interp = InterpQT(self.g)

    def weight_algebra(self):
        return liealg.langlands_dual(self.g)

    def b_tail(self, i, e, n):
        """Inverse B-monomial attached to a positive Z_{i, eps^e t^n}.

        Built by specializing the interpolating block tail product, which
        keeps the eps-phases consistent with the displayed twisted
        characters.
        """
        g = self.g
        dv = g.di_dual(i)
        period = 2 * g.d
        # recover an underlying anchor: e0 * dv = e mod 2d, n0 * dv = n
        if n % dv:
            raise NotInRing("parameter t^%d not on the node-%d lattice"
                            % (n, i))
        n0 = n // dv
        for e0 in range(period):
            if (e0 * dv) % period == e % period:
                break
        else:
            raise NotInRing("phase E^%d not on the node-%d lattice" % (e, i))
        m_center = e0 + (g.d - g.di_of(i))
        prod = Monomial("Y")
        gap = g.d - g.di_of(i)
        for k in range(gap + 1):
            shift = g.di_of(i) + gap - 2 * k
            prod = prod * self._interp.a_tilde(i, m_center + shift, n0 + 1)
        bhat = specialize(self._interp, Character(prod), "Pi_t")
        [(bm, bc)] = bhat.terms.items()
        if bc != ONE:
            raise VerificationFailed("twisted block tail not monomial")
        return bm.inverse()

    def is_dominant(self, mono_, i, coeff=ONE):
        content = mono_.node_exps(i)
        return bool(content) and all(v > 0 for v in content.values())

    def node_blocks(self, mono_, i):
        dv = self.g.di_dual(i)
        layers = {}
        for (e, m, n), v in mono_.node_exps(i).items():
            lay = layers.setdefault(e, {})
            lay[n] = lay.get(n, 0) + v
        blocks = []
        for e, content in sorted(layers.items()):
            blocks.extend(_sl2_string_blocks(
                content, 2 * dv,
                lambda n, e=e: self.b_tail(i, e, n), "Z"))
        return blocks


# ---------------------------------------------------------------------------
# specializations of interpolating characters

def _w_divide_layer(content, gap):
    """Divide {m: exp} by the string polynomial sum x^(2k - gap), exactly.

    Raises NotInRing when the division leaves a remainder.
    """
    if gap == 0:
        return dict(content)
    work = {m: v for m, v in content.items() if v}
    if not work:
        return {}
    top = max(work)
    out = {}
    while work:
        m0 = min(work)
        c = work.pop(m0)
        center = m0 + gap
        if center + gap > top:
            raise NotInRing("content is not a product of W-strings")
        out[center] = out.get(center, 0) + c
        for k in range(1, gap + 1):
            p = m0 + 2 * k
            v = work.get(p, 0) - c
            if v:
                work[p] = v
            elif p in work:
                del work[p]
    return {m: v for m, v in out.items() if v}


def _w_divide_node(g, i, layers):
    """W-factor a node's layered content; returns {(m_center, n): exp}.

    Raises NotInRing when the content is not a product of W-strings.
    """
    gap = g.d - g.di_of(i)
    out = {}
    for n, content in layers.items():
        try:
            divided = _w_divide_layer(content, gap)
        except NotInRing:
            raise NotInRing("node %d content has no W-factorization" % i)
        for m, v in divided.items():
            out[(m, n)] = v
    return {k: v for k, v in out.items() if v}


def _z_image_node(g, i, mono_):
    """Node-i content of the twisted image: {(phase, t-exp): exp}.

    Phases are reduced modulo 2d, where W-strings at different q-centers
    can land on the same Z-variable and cancel.
    """
    layers = {}
    for (e, m, n), v in mono_.node_exps(i).items():
        layers.setdefault(n, {})[m] = v
    blocks = _w_divide_node(g, i, layers)
    gap = g.d - g.di_of(i)
    dv = g.di_dual(i)
    period = 2 * g.d
    out = {}
    for (mc, n), v in blocks.items():
        key = (((mc - gap) * dv) % period, n * dv)
        out[key] = out.get(key, 0) + v
    return {k: v for k, v in out.items() if v}


SPECIALIZATIONS = ("Pi_q", "Pi_t", "Pibar_t", "Pi_t_prime", "Pibar_q")


def specialize(flavor, char, which):
    """Apply one of the five specializations to an InterpQT character."""
    if which not in SPECIALIZATIONS:
        raise ValueError("unknown specialization %r" % (which,))
    g = flavor.g
    d = g.d
    period = 2 * d
    out = Character()
    for m, c in char.terms.items():
        if which == "Pi_q":
            val = c.eval_at(1)
            if not val:
                continue
            img = Monomial("Y", [((i, (0, mm, 0)), v)
                                 for (i, (e, mm, n)), v in m.exps.items()])
            out = out + Character({img: AlphaPoly(val)})
            continue
        if which == "Pibar_t":
            val = c.eval_at(d)
            if not val:
                continue
            img = Monomial("Y", [((i, (0, 0, n)), v)
                                 for (i, (e, mm, n)), v in m.exps.items()])
            out = out + Character({img: AlphaPoly(val)})
            continue
        val = c.const()
        if not val:
            continue
        if which == "Pibar_q":
            # t -> 1 first, then factor into W-strings
            exps = []
            for i in g.nodes:
                content = {}
                for (j, (e, mm, n)), v in m.exps.items():
                    if j == i:
                        content[mm] = content.get(mm, 0) + v
                blocks = _w_divide_node(g, i, {0: content} if content else {})
                for (mc, _n), v in blocks.items():
                    exps.append(((i, (0, mc, 0)), v))
            img = Monomial("W", exps)
            out = out + Character({img: AlphaPoly(val)})
            continue
        # Pi_t / Pi_t_prime: factor per t-layer, then map anchors
        exps = []
        for i in g.nodes:
            layers = {}
            for (j, (e, mm, n)), v in m.exps.items():
                if j == i:
                    lay = layers.setdefault(n, {})
                    lay[mm] = lay.get(mm, 0) + v
            blocks = _w_divide_node(g, i, layers)
            gap = d - g.di_of(i)
            dv = g.di_dual(i)
            for (mc, n), v in blocks.items():
                if which == "Pi_t":
                    phase = ((mc - gap) * dv) % period
                    exps.append(((i, (phase, 0, n * dv)), v))
                else:
                    exps.append(((i, (0, 0, n)), v))
        img = Monomial("Z" if which == "Pi_t" else "Yb", exps)
        out = out + Character({img: AlphaPoly(val)})
    return out


def quotient_equal(flavor, x, y):
    """Equality in the quotient ring: all five specializations agree."""
    diff = x - y
    if not diff:
        return True
    for which in SPECIALIZATIONS:
        try:
            if specialize(flavor, diff, which):
                return False
        except NotInRing:
            return False
    return True


def _image_node_free(flavor, coeff, mono_, i, which):
    """True when the specialized image of coeff*mono has no node-i content."""
    g = flavor.g
    if which == "Pi_q":
        if coeff.eval_at(1) == 0:
            return True
        sums = {}
        for (e, m, n), v in mono_.node_exps(i).items():
            sums[m] = sums.get(m, 0) + v
        return not any(sums.values())
    if which == "Pibar_t":
        if coeff.eval_at(g.d) == 0:
            return True
        sums = {}
        for (e, m, n), v in mono_.node_exps(i).items():
            sums[n] = sums.get(n, 0) + v
        return not any(sums.values())
    # Pi_t
    if coeff.const() == 0:
        return True
    try:
        zexps = _z_image_node(g, i, mono_)
    except NotInRing:
        return False
    return not zexps


def node_negligible(flavor, coeff, mono_, i):
    """coeff*mono contributes nothing at node i in any specialization."""
    if not coeff:
        return True
    return all(_image_node_free(flavor, coeff, mono_, i, w)
               for w in ("Pi_q", "Pibar_t", "Pi_t"))


# ---------------------------------------------------------------------------
# the closure algorithm

def fm_closure(flavor, m, cap=None, top_coeff=ONE):
    """Complete a dominant monomial to an element of the node-kernel
    intersection, by repeated node expansion of dominant monomials.

    Multiplicity bookkeeping: demands from expansions accumulate per
    (monomial, node); a monomial's final coefficient must agree with each
    node's demand, exactly for the integer flavors and up to node-wise
    negligible corrections for InterpQT.

    top_coeff scales the whole closure; an alpha top coefficient also
    relaxes dominance at the top (needed for the alpha-flavored single-Y
    generators of the interpolating ring).
    """
    cap = closure_cap(cap)
    interp = isinstance(flavor, InterpQT)
    wg_rank = flavor.weight_algebra().rank
    top_weight = m.weight(wg_rank)

    demands = {}                 # mono -> {node: AlphaPoly}
    coeffs = {}                  # finalized coefficients
    counter = itertools.count()
    heap = [(Fraction(0), next(counter), m)]
    queued = {m}
    steps = 0

    while heap:
        height, _tie, cur = heapq.heappop(heap)
        if cur in coeffs:
            continue
        if cur == m and not demands.get(cur):
            coeff = top_coeff
        else:
            coeff = _merge_demands(flavor, cur, demands.get(cur, {}), interp)
        coeffs[cur] = coeff
        for i in flavor.g.nodes:
            if not flavor.is_dominant(cur, i, coeff):
                continue
            steps += 1
            if steps > cap:
                raise CapExceeded("closure exceeded %d expansions" % cap)
            expansion = flavor.node_expand(cur, i)
            for child, w in expansion.terms.items():
                if child == cur:
                    continue
                dem = demands.setdefault(child, {})
                add = coeff * w
                dem[i] = dem.get(i, AlphaPoly()) + add
                if child not in queued:
                    ch = flavor.height_drop(top_weight,
                                            child.weight(wg_rank))
                    heapq.heappush(heap, (ch, next(counter), child))
                    queued.add(child)
                elif child in coeffs:
                    # a demand arrived after finalization: heights must be
                    # strictly decreasing along expansions
                    raise VerificationFailed(
                        "demand after finalization at %r" % (child,))
    return Character(coeffs)


def _merge_demands(flavor, mono_, demands, interp):
    if not demands:
        raise VerificationFailed("monomial with no demands: %r" % (mono_,))
    values = list(demands.values())
    first = values[0]
    if all(v == first for v in values[1:]):
        return first
    if not interp:
        # integer multiplicities: take the pointwise maximum
        top = max(len(v.c) for v in values)
        merged = tuple(max((v.c[k] if k < len(v.c) else 0) for v in values)
                       for k in range(top))
        return AlphaPoly(merged)
    # InterpQT: find a single coefficient compatible with every node's
    # demand up to node-wise negligible corrections in the quotient.
    candidates = sorted(set(values), key=lambda p: (p.degree(), p.c))
    total = values[0]
    for v in values[1:]:
        total = total + v
    top = max(len(v.c) for v in values)
    pmax = AlphaPoly(tuple(
        max((v.c[k] if k < len(v.c) else 0) for v in values)
        for k in range(top)))
    for cand in candidates + [total, pmax]:
        if all(node_negligible(flavor, cand - dem, mono_, i)
               for i, dem in demands.items()):
            return cand
    raise VerificationFailed(
        "no coefficient reconciles node demands for %r: %r"
        % (mono_, demands))


# ---------------------------------------------------------------------------
# kernel membership and screenings

def membership(flavor, char, cap=None):
    """True iff char lies in the intersection of the node subrings.

    Greedy top-down: repeatedly expand the highest monomial with positive
    node-i content and subtract; accept a remainder free of node-i
    variables.
    """
    cap = closure_cap(cap)
    wg_rank = flavor.weight_algebra().rank
    for i in flavor.g.nodes:
        rem = Character(dict(char.terms))
        steps = 0
        while True:
            acting = [mm for mm in rem.terms if mm.node_exps(i)]
            if not acting:
                break
            # highest first: smallest height drop from the top weight
            top = max(mm.weight(wg_rank) for mm in rem.terms)
            acting.sort(key=lambda mm: flavor.height_drop(
                top, mm.weight(wg_rank)))
            target = None
            for mm in acting:
                if any(v > 0 for v in mm.node_exps(i).values()):
                    target = mm
                    break
            if target is None:
                # only non-positive node content left: must be negligible
                ok = all(node_negligible(flavor, rem.terms[mm], mm, i)
                         if isinstance(flavor, InterpQT) else False
                         for mm in acting)
                if not ok:
                    return False
                break
            steps += 1
            if steps > cap:
                raise CapExceeded("membership exceeded %d steps" % cap)
            try:
                expansion = flavor.node_expand(target, i)
            except (NotInRing, BlockFactorizationFailed):
                return False
            rem = rem - expansion.scale(rem.terms[target])
    return True


def screening_apply(flavor, char, i):
    """Apply the i-th screening derivation to a FoldedT character.

    Returns (c0, c1): characters multiplying the two parity
    representatives of the screening current. Both vanish iff char is in
    the kernel.
    """
    if not isinstance(flavor, FoldedT):
        raise ValueError("screenings act on the folded t-character ring")
    buckets = {0: Character(), 1: Character()}
    for m, c in char.terms.items():
        for (e, mm, n), v in m.node_exps(i).items():
            carrier = Monomial("Y")
            k = n
            while k >= 2:
                carrier = carrier * flavor.a_monomial(i, k - 1)
                k -= 2
            while k < 0:
                carrier = carrier * flavor.a_monomial(i, k + 1).inverse()
                k += 2
            contrib = Character({m * carrier: c * v})
            buckets[k] = buckets[k] + contrib
    return buckets[0], buckets[1]


def finite_char(char, rank, alpha_value=1):
    """Collapse a character to g-weight multiplicities: weight -> int."""
    out = {}
    for m, c in char.terms.items():
        w = m.weight(rank)
        out[w] = out.get(w, 0) + c.eval_at(alpha_value)
    return {w: v for w, v in out.items() if v}
