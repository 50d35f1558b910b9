"""Sparse Laurent-monomial and character arithmetic.

Variables are Y/W/Z/Ybar-kind symbols indexed by a Dynkin node and a
spectral parameter eps^e q^m t^n (eps a primitive 2d-th root of unity).
Coefficients live in Z[a] where `a` is the interpolation marker alpha.

A Character is a finite Z[a]-combination of monomials of one kind.
"""

import re


class ParseError(ValueError):
    def __init__(self, text, pos, msg):
        super().__init__("%s at position %d in %r" % (msg, pos, text))
        self.pos = pos


# ---------------------------------------------------------------------------
# coefficients: Z[a]

class AlphaPoly:
    """Polynomial in alpha with integer coefficients, index = power."""

    __slots__ = ("c",)

    def __init__(self, c=()):
        if isinstance(c, int):
            c = (c,)
        c = tuple(c)
        while c and c[-1] == 0:
            c = c[:-1]
        self.c = c

    @classmethod
    def alpha(cls, power=1, coeff=1):
        return cls((0,) * power + (coeff,))

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = AlphaPoly(other)
        return isinstance(other, AlphaPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        if isinstance(other, int):
            other = AlphaPoly(other)
        n = max(len(self.c), len(other.c))
        return AlphaPoly(tuple(
            (self.c[i] if i < len(self.c) else 0)
            + (other.c[i] if i < len(other.c) else 0) for i in range(n)))

    def __neg__(self):
        return AlphaPoly(tuple(-x for x in self.c))

    def __sub__(self, other):
        if isinstance(other, int):
            other = AlphaPoly(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = AlphaPoly(other)
        if not self.c or not other.c:
            return AlphaPoly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            for j, y in enumerate(other.c):
                out[i + j] += x * y
        return AlphaPoly(tuple(out))

    def eval_at(self, value):
        acc = 0
        for x in reversed(self.c):
            acc = acc * value + x
        return acc

    def const(self):
        """Coefficient of alpha^0."""
        return self.c[0] if self.c else 0

    def alpha_multiple(self):
        return not self.c or self.c[0] == 0

    def degree(self):
        return len(self.c) - 1 if self.c else -1

    def __repr__(self):
        return "AlphaPoly(%r)" % (self.c,)

    def format(self):
        """Canonical text: plain int, or a parenthesized alpha polynomial."""
        if not self.c:
            return "0"
        if len(self.c) == 1:
            return str(self.c[0])
        parts = []
        for k, x in enumerate(self.c):
            if x == 0:
                continue
            if k == 0:
                term = str(abs(x))
            else:
                base = "a" if k == 1 else "a^%d" % k
                term = base if abs(x) == 1 else "%d*%s" % (abs(x), base)
            if not parts:
                parts.append(term if x > 0 else "-" + term)
            else:
                parts.append(("+" if x > 0 else "-") + term)
        return "(" + "".join(parts) + ")"


ONE = AlphaPoly(1)
ALPHA = AlphaPoly.alpha()


def parse_alphapoly(text):
    """Parse the inside of a coefficient: e.g. '2-a', 'a^2', '3*a+1'."""
    tokens = re.findall(r"\d+|a|\^|\*|\+|-|\S", text)
    pos = 0
    coeffs = {}
    sign = 1
    while pos < len(tokens):
        tok = tokens[pos]
        if tok == "+":
            sign = 1
            pos += 1
            continue
        if tok == "-":
            sign = -1
            pos += 1
            continue
        mag = 1
        power = 0
        seen = False
        if tok.isdigit():
            mag = int(tok)
            pos += 1
            seen = True
            if pos < len(tokens) and tokens[pos] == "*":
                pos += 1
        if pos < len(tokens) and tokens[pos] == "a":
            power = 1
            pos += 1
            seen = True
            if pos < len(tokens) and tokens[pos] == "^":
                pos += 1
                if pos >= len(tokens) or not tokens[pos].isdigit():
                    raise ParseError(text, pos, "expected exponent after ^")
                power = int(tokens[pos])
                pos += 1
        if not seen:
            raise ParseError(text, pos, "unexpected token %r" % tok)
        coeffs[power] = coeffs.get(power, 0) + sign * mag
        sign = 1
    if not coeffs:
        raise ParseError(text, 0, "empty coefficient")
    top = max(coeffs)
    return AlphaPoly(tuple(coeffs.get(k, 0) for k in range(top + 1)))


# ---------------------------------------------------------------------------
# spectral parameters and monomials

KINDS = ("Y", "W", "Z", "Yb")


class Monomial:
    """A Laurent monomial: kind plus a sparse exponent map.

    Keys of exps are (node, (e, m, n)) with nonzero integer values.
    Immutable and hashable; coefficients live in the enclosing Character.
    """

    __slots__ = ("kind", "exps", "_key")

    def __init__(self, kind, exps=()):
        if kind not in KINDS:
            raise ValueError("bad kind %r" % (kind,))
        if isinstance(exps, dict):
            exps = exps.items()
        d = {}
        for key, v in exps:
            if v:
                d[key] = d.get(key, 0) + v
                if not d[key]:
                    del d[key]
        self.kind = kind
        self.exps = d
        self._key = (kind, tuple(sorted(d.items())))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __mul__(self, other):
        if self.kind != other.kind:
            raise ValueError("kind mismatch %s/%s" % (self.kind, other.kind))
        d = dict(self.exps)
        for key, v in other.exps.items():
            d[key] = d.get(key, 0) + v
            if not d[key]:
                del d[key]
        return Monomial(self.kind, d)

    def inverse(self):
        return Monomial(self.kind, {k: -v for k, v in self.exps.items()})

    def __pow__(self, n):
        if n == 0:
            return Monomial(self.kind)
        return Monomial(self.kind, {k: v * n for k, v in self.exps.items()})

    def is_identity(self):
        return not self.exps

    def node_exps(self, node):
        """The node's content as a dict param -> exponent."""
        return {p: v for (i, p), v in self.exps.items() if i == node}

    def nodes(self):
        return sorted({i for (i, _p) in self.exps})

    def weight(self, rank):
        """g-weight in fundamental-weight coordinates."""
        w = [0] * rank
        for (i, _p), v in self.exps.items():
            w[i - 1] += v
        return tuple(w)

    def reduce_phases(self, period):
        """Reduce all phases e modulo 2d (period = 2d)."""
        return Monomial(self.kind, [((i, (e % period, m, n)), v)
                                    for (i, (e, m, n)), v in self.exps.items()])

    def __repr__(self):
        return "Monomial(%r)" % (format_monomial(ONE, self),)


def mono(kind, *factors):
    """Convenience builder: factors are (node, e, m, n[, exp])."""
    exps = []
    for f in factors:
        if len(f) == 4:
            node, e, m, n = f
            v = 1
        else:
            node, e, m, n, v = f
        exps.append(((node, (e, m, n)), v))
    return Monomial(kind, exps)


# ---------------------------------------------------------------------------
# text grammar

_VAR_RE = re.compile(r"(Yb|Y|W|Z)\[(\d+);([^\]]*)\](?:\^(-?\d+))?")


def parse_param(text, default_phase_period=None):
    """Parse a spectral parameter like 'q^2 t', '-t^2', 'E^3 q t^4', '1'."""
    s = text.strip()
    if s == "1":
        return (0, 0, 0)
    e = m = n = 0
    if s.startswith("-"):
        # '-' abbreviates the phase eps^d; the caller rewrites e later if
        # its lattice uses a different convention.
        e = -1  # sentinel: half turn
        s = s[1:].strip()
    for part in s.split():
        mm = re.fullmatch(r"(E|q|t)(?:\^(-?\d+))?", part)
        if not mm:
            raise ParseError(text, 0, "bad parameter factor %r" % part)
        val = int(mm.group(2)) if mm.group(2) is not None else 1
        if mm.group(1) == "E":
            if e == -1:
                raise ParseError(text, 0, "mixed - and E^ phases")
            e = val
        elif mm.group(1) == "q":
            m = val
        else:
            n = val
    return (e, m, n)


def parse_monomial(text, phase_period=None):
    """Parse one term: returns (AlphaPoly, Monomial).

    phase_period (= 2d) resolves the '-' phase shorthand to e = d and
    canonicalizes phases; pass None for phase-free lattices.
    """
    s = text.strip()
    if not s:
        raise ParseError(text, 0, "empty monomial")
    coeff = ONE
    first = s.split("*", 1)[0].strip()
    if first and "[" not in first:
        if first.startswith("("):
            # find matching close paren in original string
            close = s.index(")")
            coeff = parse_alphapoly(s[1:close])
            s = s[close + 1:].lstrip()
            if s.startswith("*"):
                s = s[1:]
        else:
            try:
                coeff = AlphaPoly(int(first))
            except ValueError:
                raise ParseError(text, 0, "bad coefficient %r" % first)
            s = s.split("*", 1)[1] if "*" in s else ""
    kind = None
    exps = []
    pos = 0
    s = s.strip()
    while pos < len(s):
        mvar = _VAR_RE.match(s, pos)
        if not mvar:
            raise ParseError(text, pos, "expected variable")
        k, node, param, expo = mvar.group(1), int(mvar.group(2)), \
            mvar.group(3), mvar.group(4)
        if kind is None:
            kind = k
        elif k != kind:
            raise ParseError(text, pos, "mixed variable kinds")
        e, m, n = parse_param(param)
        if e == -1:
            if phase_period is None:
                raise ParseError(text, pos, "phase shorthand without lattice")
            e = phase_period // 2
        elif phase_period is not None:
            e %= phase_period
        exps.append(((node, (e, m, n)), int(expo) if expo else 1))
        pos = mvar.end()
        if pos < len(s):
            if s[pos] != "*":
                raise ParseError(text, pos, "expected '*'")
            pos += 1
    if kind is None:
        # bare coefficient: the identity monomial (kind defaults to Y)
        return coeff, Monomial("Y")
    return coeff, Monomial(kind, exps)


def format_param(param, phase_period=None):
    e, m, n = param
    if (e, m, n) == (0, 0, 0):
        return "1"
    parts = []
    prefix = ""
    if e:
        if phase_period is not None and e == phase_period // 2:
            prefix = "-"
        else:
            parts.append("E" if e == 1 else "E^%d" % e)
    if m:
        parts.append("q" if m == 1 else "q^%d" % m)
    if n:
        parts.append("t" if n == 1 else "t^%d" % n)
    if not parts and prefix:
        return "-1"
    return prefix + " ".join(parts)


def _var_sort_key(item):
    (node, (e, m, n)), _v = item
    return (node, n, m, e)


def format_monomial(coeff, monomial, phase_period=None):
    if not coeff:
        return "0"
    vars_txt = "*".join(
        "%s[%d;%s]%s" % (monomial.kind, node,
                         format_param(p, phase_period),
                         "" if v == 1 else "^%d" % v)
        for (node, p), v in sorted(monomial.exps.items(), key=_var_sort_key))
    if not vars_txt:
        return coeff.format()
    if coeff == ONE:
        return vars_txt
    return coeff.format() + "*" + vars_txt


# ---------------------------------------------------------------------------
# characters

class Character:
    """A finite Z[a]-combination of monomials of a common kind."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        if isinstance(terms, Monomial):
            terms = {terms: ONE}
        if isinstance(terms, dict):
            terms = terms.items()
        d = {}
        for m, c in terms:
            if isinstance(c, int):
                c = AlphaPoly(c)
            if not c:
                continue
            if m in d:
                d[m] = d[m] + c
                if not d[m]:
                    del d[m]
            else:
                d[m] = c
        self.terms = d

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Character) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        d = dict(self.terms)
        for m, c in other.terms.items():
            if m in d:
                d[m] = d[m] + c
                if not d[m]:
                    del d[m]
            else:
                d[m] = c
        out = Character.__new__(Character)
        out.terms = d
        return out

    def __neg__(self):
        out = Character.__new__(Character)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            c = AlphaPoly(c)
        if not c:
            return Character()
        out = Character.__new__(Character)
        out.terms = {m: cc * c for m, cc in self.terms.items()}
        return out

    def mul_monomial(self, mono_, coeff=ONE):
        return Character([(m * mono_, c * coeff)
                          for m, c in self.terms.items()])

    def __mul__(self, other):
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                c = c1 * c2
                if m in acc:
                    acc[m] = acc[m] + c
                    if not acc[m]:
                        del acc[m]
                else:
                    acc[m] = c
        return Character(acc)

    def num_monomials(self):
        return len(self.terms)

    def total_multiplicity(self, alpha_value=1):
        return sum(c.eval_at(alpha_value) for c in self.terms.values())

    def coefficient(self, monomial):
        return self.terms.get(monomial, AlphaPoly())

    def format(self, phase_period=None):
        lines = []
        for m, c in self.terms.items():
            mono_txt = format_monomial(ONE, m, phase_period)
            lines.append((mono_txt, c.format() + "\t" + mono_txt))
        return "\n".join(txt for _k, txt in sorted(lines))


def parse_character(text, phase_period=None):
    """Parse a character: either 'coeff<TAB>monomial' lines or '+'-joined."""
    terms = []
    for raw in text.strip().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" in line:
            coeff_txt, mono_txt = line.split("\t", 1)
            coeff_txt = coeff_txt.strip()
            if coeff_txt.startswith("("):
                coeff = parse_alphapoly(coeff_txt[1:-1])
            else:
                coeff = parse_alphapoly(coeff_txt)
            c2, m = parse_monomial(mono_txt, phase_period)
            terms.append((m, coeff * c2))
        else:
            for chunk in re.split(r"\s\+\s", line):
                c, m = parse_monomial(chunk, phase_period)
                terms.append((m, c))
    return Character(terms)
