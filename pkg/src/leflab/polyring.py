"""Exact multivariate polynomials over QQ in variables x0 > x1 > ... > xn.

Monomials are plain exponent tuples.  Every ordering question is answered by
degrevlex; ``degrevlex_key`` turns a monomial into a tuple whose natural order
is degrevlex, so ``max(terms, key=degrevlex_key)`` is the leading monomial.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping

import gmpy2

QQ = gmpy2.mpq

Monomial = tuple  # tuple[int, ...]

LETTER_VARS = {"x": 0, "y": 1, "z": 2, "w": 3}


# --- monomials ----------------------------------------------------------------


def degrevlex_key(m: Monomial) -> tuple:
    return (sum(m),) + tuple(-e for e in reversed(m))


def degrevlex_compare(a: Monomial, b: Monomial) -> int:
    """Return 1, 0 or -1 as ``a`` is greater than, equal to or less than ``b``."""
    if len(a) != len(b):
        raise ValueError(f"monomials of different lengths: {len(a)} vs {len(b)}")
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    for ea, eb in zip(reversed(a), reversed(b)):
        if ea != eb:
            return 1 if ea < eb else -1
    return 0


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def unit_vector(i: int, nvars: int, e: int = 1) -> Monomial:
    m = [0] * nvars
    m[i] = e
    return tuple(m)


@lru_cache(maxsize=None)
def graded_basis(d: int, nvars: int) -> tuple:
    """All monomials of degree ``d`` in ``nvars`` variables, degrevlex descending."""
    if d < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        m = [0] * nvars
        for v in combo:
            m[v] += 1
        out.append(tuple(m))
    out.sort(key=degrevlex_key, reverse=True)
    return tuple(out)


def format_monomial(m: Monomial, names=None) -> str:
    parts = []
    for i, e in enumerate(m):
        if e:
            name = names[i] if names else f"x{i}"
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# --- polynomials ----------------------------------------------------------------


_SCALARS = (int, type(gmpy2.mpq(0)), type(gmpy2.mpz(0)))


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero mpq."""

    __slots__ = ("nvars", "terms", "_lm", "_hash")

    def __init__(self, nvars: int, terms: Mapping | None = None, *, _trusted=False):
        self.nvars = nvars
        if _trusted:
            self.terms = terms
        else:
            clean = {}
            for m, c in (terms or {}).items():
                m = tuple(m)
                if len(m) != nvars:
                    raise ValueError(f"monomial {m} has wrong length for {nvars} variables")
                if any(e < 0 for e in m):
                    raise ValueError(f"negative exponent in {m}")
                c = QQ(c)
                if c:
                    clean[m] = clean.get(m, 0) + c
            self.terms = {m: c for m, c in clean.items() if c}
        self._lm = None
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {}, _trusted=True)

    @classmethod
    def constant(cls, c, nvars):
        c = QQ(c)
        return cls(nvars, {(0,) * nvars: c} if c else {}, _trusted=True)

    @classmethod
    def variable(cls, i, nvars):
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        return cls(nvars, {unit_vector(i, nvars): QQ(1)}, _trusted=True)

    @classmethod
    def monomial(cls, m, nvars=None, coeff=1):
        m = tuple(m)
        return cls(len(m) if nvars is None else nvars, {m: coeff})

    @classmethod
    def linear_form(cls, coeffs):
        n = len(coeffs)
        return cls(n, {unit_vector(i, n): c for i, c in enumerate(coeffs)})

    # basic properties
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_degree(self):
        degs = {sum(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def leading_monomial(self) -> Monomial:
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=degrevlex_key)
        return self._lm

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        return Polynomial(self.nvars, {m: c / lc for m, c in self.terms.items()}, _trusted=True)

    def coefficient(self, m):
        return self.terms.get(tuple(m), QQ(0))

    # arithmetic
    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.nvars, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = QQ(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {m: c * v for m, v in self.terms.items()}, _trusted=True)

    def mul_monomial(self, u: Monomial, c=1):
        c = QQ(c)
        return Polynomial(self.nvars, {mono_mul(m, u): c * v for m, v in self.terms.items()},
                          _trusted=True)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.nvars, {m: c for m, c in out.items() if c}, _trusted=True)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, _SCALARS):
            return self.terms == Polynomial.constant(other, self.nvars).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def to_string(self, names=None) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            neg = c < 0
            a = -c if neg else c
            mon = format_monomial(m, names)
            if mon == "1":
                body = str(a)
            elif a == 1:
                body = mon
            else:
                body = f"{a}*{mon}"
            pieces.append(("- " if neg else "+ ") + body)
        s = " ".join(pieces)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    __str__ = to_string

    def partial(self, i: int) -> "Polynomial":
        return partial_derivative(self, i)

    def evaluate(self, point):
        total = QQ(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= QQ(x) ** e
            total += v
        return total

    def content_normalized(self):
        """Primitive integer multiple with positive leading coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = gmpy2.lcm(den, c.denominator)
        ints = {m: c * den for m, c in self.terms.items()}
        g = 0
        for c in ints.values():
            g = gmpy2.gcd(g, c.numerator)
        if ints[self.leading_monomial()] < 0:
            g = -g
        return Polynomial(self.nvars, {m: c / g for m, c in ints.items()}, _trusted=True)


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    if not 0 <= i < f.nvars:
        raise ValueError(f"variable index {i} out of range")
    out = {}
    for m, c in f.terms.items():
        e = m[i]
        if e:
            mm = list(m)
            mm[i] = e - 1
            out[tuple(mm)] = c * e
    return Polynomial(f.nvars, out, _trusted=True)


def product(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    result = Polynomial.constant(1, nvars)
    for p in polys:
        result = result * p
    return result


# --- linear changes of coordinates -----------------------------------------------


def _invert(matrix):
    n = len(matrix)
    a = [[QQ(x) for x in row] + [QQ(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


class LinearChange:
    """Invertible substitution x_i -> sum_j matrix[i][j] * x_j."""

    __slots__ = ("matrix", "inverse_matrix")

    def __init__(self, matrix, _inverse=None):
        rows = tuple(tuple(QQ(x) for x in row) for row in matrix)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("change of coordinates must be a square matrix")
        inv = _inverse if _inverse is not None else _invert(rows)
        if inv is None:
            raise ValueError("change of coordinates is singular")
        self.matrix = rows
        self.inverse_matrix = inv

    @property
    def nvars(self):
        return len(self.matrix)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, perm):
        n = len(perm)
        return cls([[int(perm[i] == j) for j in range(n)] for i in range(n)])

    def inverse(self) -> "LinearChange":
        return LinearChange(self.inverse_matrix, _inverse=self.matrix)

    def compose(self, other: "LinearChange") -> "LinearChange":
        """The change equal to applying ``self`` and then ``other``."""
        # apply_change(apply_change(f, a), b): x_i -> sum_j a_ij (sum_k b_jk x_k)
        n = self.nvars
        m = [[sum((self.matrix[i][j] * other.matrix[j][k] for j in range(n)), QQ(0))
              for k in range(n)] for i in range(n)]
        return LinearChange(m)

    def image_of_variable(self, i) -> Polynomial:
        return Polynomial.linear_form(self.matrix[i])

    def __eq__(self, other):
        return isinstance(other, LinearChange) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LinearChange({[[str(x) for x in r] for r in self.matrix]})"


def apply_change(f: Polynomial, g: LinearChange) -> Polynomial:
    if g.nvars != f.nvars:
        raise ValueError(f"change acts on {g.nvars} variables, polynomial has {f.nvars}")
    n = f.nvars
    forms = [Polynomial.linear_form(row) for row in g.matrix]
    powers: dict = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = forms[i] if e == 1 else power(i, e - 1) * forms[i]
        return powers[key]

    out: dict = {}
    for m, c in f.terms.items():
        term = Polynomial.constant(c, n)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        for mm, cc in term.terms.items():
            out[mm] = out.get(mm, 0) + cc
    return Polynomial(n, {m: c for m, c in out.items() if c}, _trusted=True)


# --- text grammar -------------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<var>x\d+|[xyzw])|(?P<op>[-+*/^()]))"
)


def _tokenize(text, line=1, col0=1):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ParseError(f"unexpected character {text[bad]!r}", line, col0 + bad)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), col0 + start))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, nvars=None, line=1, col0=1):
        self.tokens = _tokenize(text, line, col0)
        self.i = 0
        self.line = line
        self.end_col = col0 + len(text)
        self.nvars = nvars
        self.seen = -1

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end_col)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    # terms are built as dict polynomials over a growing variable list, then
    # widened to nvars at the end
    def expr(self):
        kind, val, _ = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = _scale(self.term(), sign)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = _add(acc, _scale(t, -1 if val == "-" else 1))
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = _mul(acc, self.factor())
            elif kind == "op" and val == "/":
                tok = self.take()
                f = self.factor()
                if any(any(m) for m in f) or not f:
                    self.error("division only by nonzero constants", tok)
                acc = _scale(acc, 1 / next(iter(f.values())))
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                acc = _mul(acc, self.factor())
            else:
                return acc

    def factor(self):
        base = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k, v, c = self.take()
            if k != "num":
                self.error("expected integer exponent", (k, v, c))
            e = int(v)
            result = {(): QQ(1)}
            for _ in range(e):
                result = _mul(result, base)
            return result
        return base

    def base(self):
        kind, val, col = self.take()
        if kind == "num":
            return {(): QQ(int(val))}
        if kind == "var":
            idx = LETTER_VARS[val] if len(val) == 1 else int(val[1:])
            if self.nvars is not None and idx >= self.nvars:
                raise ParseError(f"variable {val} out of range for {self.nvars} variables",
                                 self.line, col)
            self.seen = max(self.seen, idx)
            return {tuple([0] * idx + [1]): QQ(1)}
        if kind == "op" and val == "(":
            inner = self.expr()
            k, v, c = self.take()
            if not (k == "op" and v == ")"):
                self.error("expected ')'", (k, v, c))
            return inner
        if kind == "op" and val == "-":
            return _scale(self.factor(), -1)
        if kind is None:
            raise ParseError("unexpected end of input", self.line, col)
        raise ParseError(f"unexpected token {val!r}", self.line, col)


def _pad(m, n):
    return m + (0,) * (n - len(m))


def _add(a, b):
    out = {}
    for src in (a, b):
        for m, c in src.items():
            out[m] = out.get(m, 0) + c
    n = max((len(m) for m in out), default=0)
    merged = {}
    for m, c in out.items():
        k = _pad(m, n)
        merged[k] = merged.get(k, 0) + c
    return {m: c for m, c in merged.items() if c}


def _scale(a, s):
    return {m: c * s for m, c in a.items() if c * s}


def _mul(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            n = max(len(m1), len(m2))
            m = tuple(x + y for x, y in zip(_pad(m1, n), _pad(m2, n)))
            out[m] = out.get(m, 0) + c1 * c2
    return _add(out, {})


def parse_polynomial(text: str, nvars: int | None = None, *, line=1, column=1) -> Polynomial:
    """Parse e.g. ``"x^2 - 3/4*x1*z + (y-z)^2"``; x,y,z,w alias x0..x3."""
    p = _Parser(text, nvars, line, column)
    if not p.tokens:
        raise ParseError("empty polynomial", line, column)
    raw = p.expr()
    if p.i < len(p.tokens):
        p.error(f"unexpected token {p.peek()[1]!r}")
    n = nvars if nvars is not None else max(p.seen + 1, 1)
    return Polynomial(n, {_pad(m, n): c for m, c in raw.items()})


def parse_polynomials(text: str, nvars: int | None = None) -> tuple:
    """Parse a comma/newline separated list; ``#`` comments and an optional
    ``nvars: N`` header line are allowed.  Returns (polys, nvars)."""
    chunks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        head = body.strip().lower()
        m = re.fullmatch(r"nvars\s*[:=]?\s*(\d+)", head)
        if m:
            nvars = int(m.group(1)) if nvars is None else nvars
            continue
        col = 0
        for piece in body.split(","):
            if piece.strip():
                chunks.append((piece, lineno, col + 1))
            col += len(piece) + 1
    if not chunks:
        raise ParseError("no polynomials found", 1, 1)
    parsed = []
    width = 1
    for piece, lineno, col in chunks:
        p = _Parser(piece, nvars, lineno, col)
        raw = p.expr()
        if p.i < len(p.tokens):
            p.error(f"unexpected token {p.peek()[1]!r}")
        width = max(width, p.seen + 1)
        parsed.append(raw)
    n = nvars if nvars is not None else width
    return [Polynomial(n, {_pad(m, n): c for m, c in raw.items()}) for raw in parsed], n
