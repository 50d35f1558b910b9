"""Regression corpus of displayed characters and stated counts.

Each FixtureCase recomputes a character (or a verdict) from scratch and
compares it with transcribed expected data: either an exact fixture file
in the ring grammar, a (distinct, total) count pair, or a boolean
verdict.  Fixture files live in qfold/fixtures and must carry a
non-empty provenance note; the loader rejects files without one.
"""

import concurrent.futures
import importlib.resources
import sympy

from . import charalg, crystal, fold, interp, liealg, ring
from .ring import ALPHA, Character


class CorpusError(ValueError):
    """A fixture file is malformed or missing its provenance note."""


def load_fixture(name):
    """Read a fixture file; returns (note, Character)."""
    res = importlib.resources.files("qfold").joinpath("fixtures/%s.txt" % name)
    try:
        text = res.read_text()
    except FileNotFoundError:
        raise CorpusError("no fixture named %s" % name) from None
    note = None
    body = []
    for line in text.splitlines():
        if line.startswith("# note:"):
            note = line[len("# note:"):].strip()
        elif line.startswith("#") or not line.strip():
            continue
        else:
            body.append(line)
    if not note:
        raise CorpusError("fixture %s has no provenance note" % name)
    return note, ring.parse_character("\n".join(body))


class FixtureCase:
    """One corpus entry: identifier, provenance note, recomputation.

    mode is one of "exact" (compare with a fixture file), "counts"
    (compare (distinct, total)), or "verdict" (compute returns a bool).
    """

    def __init__(self, identifier, note, compute, mode, expected=None):
        self.identifier = identifier
        self.note = note
        self.compute = compute
        self.mode = mode
        self.expected = expected

    def run(self):
        try:
            got = self.compute()
        except Exception as exc:  # report, never crash the runner
            return (self.identifier, False, "error: %r" % (exc,))
        if self.mode == "exact":
            note, want = load_fixture(self.expected)
            if got == want:
                return (self.identifier, True,
                        "exact match (%d monomials)" % want.num_monomials())
            return (self.identifier, False, _diff(want, got))
        if self.mode == "counts":
            counts = (got.num_monomials(), got.total_multiplicity())
            ok = counts == tuple(self.expected)
            return (self.identifier, ok,
                    "counts %r vs expected %r" % (counts, tuple(self.expected)))
        ok = bool(got)
        return (self.identifier, ok, "verdict %s" % ok)


def _diff(want, got):
    missing = [m for m in want.terms if m not in got.terms]
    extra = [m for m in got.terms if m not in want.terms]
    changed = [m for m in want.terms
               if m in got.terms and want.terms[m] != got.terms[m]]
    return ("mismatch: %d missing, %d extra, %d coefficient diffs"
            % (len(missing), len(extra), len(changed)))


# ---------------------------------------------------------------------------
# recomputations

def _mono(text):
    return ring.parse_monomial(text)[1]


def _folded_F(gname, i):
    g = liealg.build_algebra(gname)
    return charalg.fm_closure(charalg.FoldedT(g), _mono("Y[%d;1]" % i))


def _interp_fun():
    g = liealg.build_algebra("C2")
    return interp.interp_F(g, charalg.InterpQT(g).w_block(2, 0, 0))


def _interp_fdeux():
    g = liealg.build_algebra("C2")
    return interp.interp_F(g, charalg.InterpQT(g).w_block(1, 1, 0))


def _interp_ftrois():
    g = liealg.build_algebra("C2")
    return interp.interp_F(g, _mono("Y[1;1]"), top_coeff=ALPHA)


def _spec(build, which):
    def compute():
        g = liealg.build_algebra("C2")
        return interp.five_specializations(g, build()).images[which]
    return compute


def _spec_zero(build, which):
    def compute():
        g = liealg.build_algebra("C2")
        img = interp.five_specializations(g, build()).images[which]
        return not img.terms
    return compute


def _cover_qchar(gname, tops):
    g = liealg.build_algebra(gname)
    fd = liealg.folding_data(g)
    flavor = charalg.StandardQ(fd.gprime)
    out = None
    for top in tops:
        ch = charalg.fm_closure(flavor, _mono(top))
        out = ch if out is None else out * ch
    return fd, out


def _invariants(gname, tops):
    fd, ch = _cover_qchar(gname, tops)
    return fold.invariant_part(fd, ch)


def _interp_node(gname, i):
    g = liealg.build_algebra(gname)
    flavor = charalg.InterpQT(g)
    top = flavor.w_block(i, g.d - g.di_of(i), 0)
    return interp.interp_F(g, top)


def _interp_split(gname, i, plain, with_alpha):
    def compute():
        x = _interp_node(gname, i)
        na = sum(1 for c in x.terms.values() if len(c.c) > 1)
        return (x.num_monomials() - na, na) == (plain, with_alpha)
    return compute


def _spec_of_node(gname, i, which):
    def compute():
        g = liealg.build_algebra(gname)
        x = _interp_node(gname, i)
        return interp.five_specializations(g, x).images[which]
    return compute


def _ex7_5_wtilde():
    fd, prod = _cover_qchar("B2", ["Y[2;1]", "Y[2;1]", "Y[3;1]", "Y[3;1]"])
    return fold.invariant_part(fd, prod)


def _ex7_5_square():
    inv = _invariants("B2", ["Y[2;1]*Y[3;1]"])
    return inv * inv


def _ex7_5_difference():
    big = _ex7_5_wtilde()
    sq = _ex7_5_square()
    key = _mono("Y[1;q]^2*Y[2;1]*Y[2;q^2]^-1")
    def val(ch, m):
        c = ch.terms.get(m, 0)
        return c if isinstance(c, int) else c.eval_at(0)
    return (big.terms.get(key) == 4 and sq.terms.get(key) == 2
            and all(val(big, m) - val(sq, m) >= 0
                    for m in set(big.terms) | set(sq.terms)))


def _ex7_1_finite():
    inv = _invariants("B2", ["Y[1;1]"])
    fin = charalg.finite_char(inv, 2)
    want = {(1, 0): 1, (-1, 1): 1, (1, -1): 1, (-1, 0): 1}
    return fin == want


def _ex7_2_finite():
    inv = _invariants("B2", ["Y[2;1]*Y[3;1]"])
    fin = charalg.finite_char(inv, 2)
    return sum(fin.values()) == 6 and fin.get((0, 0)) == 2


def _crystal_set(gname, mtext):
    g = liealg.build_algebra(gname)
    cl = crystal.crystal_closure(g, crystal.anchor(g, _mono(mtext)))
    return Character({m: 1 for m in cl})


def _conjcrys(gname, i):
    def compute():
        g = liealg.build_algebra(gname)
        res = crystal.conjcrys_test(g, i)
        return res["subcrystal"] and res["matches_crystal"]
    return compute


def _f_factor_limits():
    expr, lim_t1, lim_q1 = fold.f_factor()
    q, t = sympy.symbols("q t")
    return (sympy.simplify(sympy.limit(expr, t, 1) - lim_t1) == 0
            and sympy.simplify(sympy.limit(expr, q, 1) - lim_q1) == 0)


def cases():
    """The full registry, in deterministic identifier order."""
    out = []

    def exact(identifier, fixture, compute):
        note, _ = load_fixture(fixture)
        out.append(FixtureCase(identifier, note, compute, "exact", fixture))

    def counts(identifier, note, compute, expected):
        out.append(FixtureCase(identifier, note, compute, "counts", expected))

    def verdict(identifier, note, compute):
        out.append(FixtureCase(identifier, note, compute, "verdict"))

    exact("intmoins.B2.Y1", "intmoins_b2_y1", lambda: _folded_F("B2", 1))
    exact("intmoins.B2.Y2", "intmoins_b2_y2", lambda: _folded_F("B2", 2))
    exact("intmoins.G2.Y1", "intmoins_g2_y1", lambda: _folded_F("G2", 1))
    exact("intmoins.G2.Y2", "intmoins_g2_y2", lambda: _folded_F("G2", 2))

    exact("fun.C2", "fun_c2", _interp_fun)
    exact("fdeux.C2", "fdeux_c2", _interp_fdeux)
    exact("ftrois.C2", "ftrois_c2", _interp_ftrois)

    for w in ("Pi_q", "Pi_t", "Pibar_t", "Pi_t_prime", "Pibar_q"):
        exact("funex.%s" % w.lower(), "funex_%s" % w.lower(),
              _spec(_interp_fun, w))
        exact("fdeuxex.%s" % w.lower(), "fdeuxex_%s" % w.lower(),
              _spec(_interp_fdeux, w))
    exact("ftroisex.pi_q", "ftroisex_pi_q", _spec(_interp_ftrois, "Pi_q"))
    exact("ftroisex.pibar_t", "ftroisex_pibar_t",
          _spec(_interp_ftrois, "Pibar_t"))
    for w in ("Pi_t", "Pi_t_prime", "Pibar_q"):
        verdict("ftroisex.zero_%s" % w.lower(),
                "stated zero specialization of the alpha-flavored generator "
                "(third example of section 6.4)",
                _spec_zero(_interp_ftrois, w))

    counts("ex7_1.qchar",
           "stated six-term cover fundamental q-character (section 7.1)",
           lambda: _cover_qchar("B2", ["Y[1;1]"])[1], (6, 6))
    exact("ex7_1.invariants", "ex7_1_invariants",
          lambda: _invariants("B2", ["Y[1;1]"]))
    verdict("ex7_1.finite",
            "displayed four-term finite character of the invariant part "
            "(section 7.1)", _ex7_1_finite)

    counts("ex7_2.cover",
           "stated 16-dimensional cover module (section 7.2, n=2)",
           lambda: _cover_qchar("B2", ["Y[2;1]*Y[3;1]"])[1], (15, 16))
    exact("ex7_2.invariants", "ex7_2_invariants",
          lambda: _invariants("B2", ["Y[2;1]*Y[3;1]"]))
    verdict("ex7_2.finite",
            "stated six-dimensional finite character with a 2-dimensional "
            "weight-zero space (section 7.2)", _ex7_2_finite)

    counts("ex7_3.cover",
           "stated 20-monomial third-fundamental q-character over the A5 "
           "cover (section 7.3)",
           lambda: _cover_qchar("C3", ["Y[3;1]"])[1], (20, 20))
    counts("ex7_3.invariants",
           "stated eight sigma-invariant monomials (section 7.3)",
           lambda: _invariants("C3", ["Y[3;1]"]), (8, 8))
    verdict("ex7_3.interp",
            "stated 14-monomial interpolating character split 8 plain / 6 "
            "alpha (section 7.3)", _interp_split("C3", 3, 8, 6))
    exact("ex7_3.pi_t", "ex7_3_pi_t", _spec_of_node("C3", 3, "Pi_t"))
    exact("ex7_3.pi_t_prime", "ex7_3_pi_t_prime",
          _spec_of_node("C3", 3, "Pi_t_prime"))
    counts("ex7_3.pibar_t",
           "stated 20-term folded specialization, counted with multiplicity "
           "(section 7.3)",
           _spec_of_node("C3", 3, "Pibar_t"), (14, 20))

    counts("ex7_4.cover",
           "first-fundamental q-character over the D4 cover: 28 distinct "
           "monomials of total multiplicity 29 (section 7.4; the source "
           "text's count of 27 contradicts its own weight-space data)",
           lambda: _cover_qchar("G2", ["Y[1;1]"])[1], (28, 29))
    exact("ex7_4.invariants", "ex7_4_invariants",
          lambda: _invariants("G2", ["Y[1;1]"]))
    verdict("ex7_4.interp",
            "stated 15-monomial interpolating character split 8 plain / 7 "
            "alpha (section 7.4)", _interp_split("G2", 1, 8, 7))
    exact("ex7_4.pi_t", "ex7_4_pi_t", _spec_of_node("G2", 1, "Pi_t"))
    exact("ex7_4.pi_t_prime", "ex7_4_pi_t_prime",
          _spec_of_node("G2", 1, "Pi_t_prime"))
    counts("ex7_4.pibar_t",
           "stated 29-term folded specialization, counted with multiplicity "
           "(section 7.4)",
           _spec_of_node("G2", 1, "Pibar_t"), (14, 29))

    exact("ex7_5.wtilde", "ex7_5_wtilde", _ex7_5_wtilde)
    counts("ex7_5.square",
           "squared invariant character of stated dimension 36 "
           "(section 7.5)", _ex7_5_square, (14, 36))
    verdict("ex7_5.difference",
            "displayed coefficient 4 vs 2 at the distinguished weight-zero "
            "monomial, nonnegative difference profile (section 7.5)",
            _ex7_5_difference)

    for gname in ("B2", "B3", "C2", "C3"):
        verdict("lemma_identi.%s" % gname,
                "folded character of the cover first fundamental equals the "
                "stated classical list (section 4.3)",
                lambda gname=gname: fold.check_fold_lemma(
                    liealg.build_algebra(gname)))
    exact("t1_list.B2", "t1_b2", lambda: fold.t1_list_b(2))
    verdict("f_factor.limits",
            "stated limits 1 (t to 1) and 2 (q to 1) of the rational factor "
            "(section 4.3)", _f_factor_limits)

    exact("crystal.mca2", "crystal_mca2", lambda: _crystal_set("A2", "Y[1;1]"))
    exact("crystal.mcc2", "crystal_mcc2", lambda: _crystal_set("C2", "Y[2;1]"))
    verdict("crystal.conjcrys_C2",
            "folded fundamental monomial set is a crystal closure "
            "(section 8 worked identification)", _conjcrys("C2", 2))

    out.sort(key=lambda c: c.identifier)
    return out


def verify_corpus(filter_text=""):
    """Run every matching case; returns (results, all_ok).

    results is ordered by identifier; cases run concurrently.
    """
    selected = [c for c in cases() if filter_text in c.identifier]
    if not selected:
        return [], True
    with concurrent.futures.ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda c: c.run(), selected))
    results.sort(key=lambda r: r[0])
    return results, all(ok for _, ok, _ in results)
