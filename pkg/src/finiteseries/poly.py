"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as a mapping from exponent tuples to :class:`fractions.Fraction`.
Instances are treated as immutable values.

The text format is a sum of terms ``c*x1^a1*...*xd^ad``; coefficients may be
integers or ``p/q``. Parentheses, ``**`` for powers and the names ``x, y, z``
(for up to three variables) are accepted as well.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm

from .errors import NotDivisible, ParseError

__all__ = ["MultiPoly", "default_names", "parse_poly", "parse_rational_parts"]


def default_names(nvars):
    if nvars <= 3:
        return ("x", "y", "z")[:nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


class MultiPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms=None, nvars=1):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"monomial {exp} does not have {nvars} exponents")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls({}, nvars)

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def one(cls, nvars):
        return cls.constant(1, nvars)

    @classmethod
    def monomial(cls, exp, c=1):
        exp = tuple(exp)
        return cls({exp: c}, len(exp))

    @classmethod
    def var(cls, i, nvars):
        exp = [0] * nvars
        exp[i] = 1
        return cls({tuple(exp): 1}, nvars)

    @classmethod
    def from_coeffs(cls, coeffs):
        """Univariate polynomial from an ascending coefficient list."""
        return cls({(i,): c for i, c in enumerate(coeffs)}, 1)

    @classmethod
    def parse(cls, text, nvars=None, names=None):
        return parse_poly(text, nvars=nvars, names=names)

    # -- inspection ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, exp):
        return self.terms.get(tuple(exp), Fraction(0))

    def constant_term(self):
        return self.coeff((0,) * self.nvars)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def max_exponents(self):
        """Componentwise maximum exponent over all terms (zeros for the zero polynomial)."""
        out = [0] * self.nvars
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e > out[i]:
                    out[i] = e
        return tuple(out)

    def min_exponents(self):
        if not self.terms:
            return (0,) * self.nvars
        exps = list(self.terms)
        return tuple(min(e[i] for e in exps) for i in range(self.nvars))

    def degree(self, axis=None):
        if not self.terms:
            return -1
        if axis is None:
            return max(sum(e) for e in self.terms)
        return max(e[axis] for e in self.terms)

    def sorted_terms(self):
        """Terms in ascending total degree, then lexicographically descending exponents."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))

    def univariate_coeffs(self):
        if self.nvars != 1:
            raise ValueError("not a univariate polynomial")
        if not self.terms:
            return []
        out = [Fraction(0)] * (self.degree() + 1)
        for (e,), c in self.terms.items():
            out[e] = c
        return out

    def valuation(self):
        """Lowest exponent of a univariate polynomial (``None`` for zero)."""
        if self.nvars != 1:
            raise ValueError("not a univariate polynomial")
        if not self.terms:
            return None
        return min(e for (e,) in self.terms)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            return MultiPoly.constant(other, self.nvars)
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return MultiPoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _as_fraction(other)
            return MultiPoly({e: c * v for e, v in self.terms.items()}, self.nvars)
        other = self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp):
        """Multiply by the monomial ``x^exp``."""
        return MultiPoly(
            {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()}, self.nvars
        )

    def divexact(self, other):
        """Exact quotient ``q`` with ``q * other == self``; raises :class:`NotDivisible`."""
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_exp, lead_c = max(other.terms.items())
        rem = dict(self.terms)
        quot = {}
        while rem:
            exp = max(rem)
            diff = tuple(a - b for a, b in zip(exp, lead_exp))
            if any(d < 0 for d in diff):
                raise NotDivisible(f"{self} is not divisible by {other}")
            c = rem[exp] / lead_c
            quot[diff] = c
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(diff, e2))
                v = rem.get(e, 0) - c * c2
                if v:
                    rem[e] = v
                else:
                    rem.pop(e, None)
        return MultiPoly(quot, self.nvars)

    def __call__(self, *point):
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values")
        total = 0
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                if e:
                    v = v * x**e
            total = total + v
        return Fraction(total)

    def embed(self, nvars, axes):
        """Re-express in ``nvars`` variables, sending variable ``i`` to ``axes[i]``."""
        out = {}
        for exp, c in self.terms.items():
            new = [0] * nvars
            for i, e in zip(axes, exp):
                new[i] += e
            out[tuple(new)] = c
        return MultiPoly(out, nvars)

    def integer_content(self):
        """Return ``(scale, primitive)`` with integer primitive coefficients of content 1."""
        if not self.terms:
            return Fraction(0), self
        den = lcm(*(c.denominator for c in self.terms.values()))
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        return Fraction(g, den), MultiPoly({e: Fraction(v, g) for e, v in ints.items()}, self.nvars)

    # -- comparison & display -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.constant(other, self.nvars).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def to_string(self, names=None):
        names = names or default_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                (n if e == 1 else f"{n}^{e}") for n, e in zip(names, exp) if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"MultiPoly({self.to_string()!r}, nvars={self.nvars})"


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    text = text.replace("−", "-").replace("·", "*")
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            ws = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + ws]!r}", *_line_col(text, pos + ws))
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def _line_col(text, pos):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _Parser:
    """Recursive-descent parser producing (numerator, denominator) pairs."""

    def __init__(self, text, nvars, names):
        self.text = text
        self.nvars = nvars
        self.index = {}
        for i, n in enumerate(names):
            self.index[n] = i
        for i in range(nvars):
            self.index.setdefault(f"x{i + 1}", i)
        self.tokens = _tokenize(text)
        self.pos = 0

    def error(self, msg, tok=None):
        tok = tok or self.tokens[self.pos]
        raise ParseError(msg, *_line_col(self.text, tok[2]))

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def run(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            n1, d1 = value
            n2, d2 = rhs
            if d1 == d2:
                value = (n1 + n2 if op == "+" else n1 - n2, d1)
            else:
                num = n1 * d2 + n2 * d1 if op == "+" else n1 * d2 - n2 * d1
                value = (num, d1 * d2)
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            n2, d2 = self.factor()
            n1, d1 = value
            if tok[1] == "*":
                value = (n1 * n2, d1 * d2)
            else:
                if n2.is_zero():
                    self.error("division by zero", tok)
                value = (n1 * d2, d1 * n2)
        return value

    def factor(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            n, d = self.factor()
            return (-n if tok[1] == "-" else n, d)
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            exp_tok = self.take()
            if exp_tok[0] != "num":
                self.error("expected a nonnegative integer exponent", exp_tok)
            k = exp_tok[1]
            base = (base[0] ** k, base[1] ** k)
        return base

    def atom(self):
        tok = self.take()
        one = MultiPoly.one(self.nvars)
        if tok[0] == "num":
            return (MultiPoly.constant(tok[1], self.nvars), one)
        if tok[0] == "name":
            if tok[1] not in self.index:
                self.error(f"unknown variable {tok[1]!r}", tok)
            return (MultiPoly.var(self.index[tok[1]], self.nvars), one)
        if tok[0] == "op" and tok[1] == "(":
            value = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                self.error("expected ')'", close)
            return value
        self.error("unexpected end of input" if tok[0] == "end" else f"unexpected token {tok[1]!r}", tok)


def _resolve(nvars, names):
    if names is not None:
        names = tuple(names)
        nvars = len(names) if nvars is None else nvars
    else:
        nvars = 1 if nvars is None else nvars
        names = default_names(nvars)
    return nvars, names


def parse_rational_parts(text, nvars=None, names=None):
    """Parse a rational expression into ``(numerator, denominator)`` polynomials."""
    nvars, names = _resolve(nvars, names)
    return _Parser(text, nvars, names).run()


def parse_poly(text, nvars=None, names=None):
    """Parse polynomial text; division is allowed only by nonzero constants."""
    num, den = parse_rational_parts(text, nvars, names)
    if not den.is_constant():
        raise ParseError("expected a polynomial, got a rational expression", 1, 1)
    return num * (1 / den.constant_term())
