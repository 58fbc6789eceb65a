"""The free algebra with trace.

Elements are exact-rational linear combinations of monomials
``c * x_{i1}...x_{ik} * tr(w_1)...tr(w_m)`` where the word part is a
noncommutative product of variables and each trace symbol is indexed by a
cyclic equivalence class of words.  The canonical encoding (least rotation
for trace words, sorted trace multiset, no zero coefficients) makes equality
of normal forms a dict comparison.

``tr(1)``, the trace of the empty word, is kept as a formal symbol here;
it only becomes the matrix size at evaluation time (genmat / findim).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Word = tuple  # tuple[int, ...] of positive variable indices


def least_rotation(word: Word) -> Word:
    """Lexicographically least rotation, Booth's algorithm, O(len)."""
    n = len(word)
    if n <= 1:
        return word
    s = word + word
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return word[k:] + word[:k]


@dataclass(frozen=True)
class CyclicWord:
    """A rotation class of words; ``representative`` is the least rotation."""

    representative: Word
    length: int

    @classmethod
    def of(cls, letters) -> "CyclicWord":
        w = tuple(letters)
        return cls(least_rotation(w), len(w))

    def __str__(self):
        return "tr(" + ("1" if not self.representative else _word_str(self.representative)) + ")"


def normalize(letters) -> CyclicWord:
    """Canonical cyclic form of a word; the empty word is the tr(1) symbol."""
    return CyclicWord.of(letters)


def _trace_key(w: Word):
    return (len(w), w)


def _sort_traces(traces) -> tuple:
    return tuple(sorted(traces, key=_trace_key))


class TracePoly:
    """Normal-form element of the free trace algebra.

    terms maps (word, traces) -> nonzero Fraction, where word is a tuple of
    variable indices and traces is the sorted tuple of canonical cyclic words.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: c for k, c in terms.items() if c != 0}

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls) -> "TracePoly":
        return cls()

    @classmethod
    def one(cls) -> "TracePoly":
        return cls({((), ()): Fraction(1)})

    @classmethod
    def scalar(cls, c) -> "TracePoly":
        return cls({((), ()): Fraction(c)})

    @classmethod
    def variable(cls, i: int) -> "TracePoly":
        if i < 1:
            raise ValueError("variable indices are positive integers")
        return cls({((i,), ()): Fraction(1)})

    @classmethod
    def word(cls, letters) -> "TracePoly":
        return cls({(tuple(letters), ()): Fraction(1)})

    @classmethod
    def trace_symbol(cls, letters) -> "TracePoly":
        """The pure trace monomial tr(letters), cyclically normalized."""
        return cls({((), (least_rotation(tuple(letters)),)): Fraction(1)})

    # -- ring structure --------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, TracePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return TracePoly.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TracePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TracePoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for (w1, t1), c1 in self.terms.items():
            for (w2, t2), c2 in other.terms.items():
                key = (w1 + w2, _sort_traces(t1 + t2))
                v = out.get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return TracePoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = TracePoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- trace and substitution -------------------------------------------
    def trace(self) -> "TracePoly":
        """Formal trace: linear, kills the word part into a new trace symbol."""
        out = {}
        for (w, traces), c in self.terms.items():
            key = ((), _sort_traces(traces + (least_rotation(w),)))
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return TracePoly(out)

    def variables(self) -> set:
        out = set()
        for (w, traces) in self.terms:
            out.update(w)
            for t in traces:
                out.update(t)
        return out

    def substitute(self, mapping) -> "TracePoly":
        """Apply the trace-compatible endomorphism x_i -> mapping[i].

        Every variable occurring in self must be mapped; traces of substituted
        words are re-expanded and re-normalized.
        """
        missing = sorted(v for v in self.variables() if v not in mapping)
        if missing:
            raise ValueError(f"variable x{missing[0]} is not mapped in substitution")
        out = TracePoly.zero()
        word_cache = {}

        def expand(word):
            got = word_cache.get(word)
            if got is None:
                got = TracePoly.one()
                for letter in word:
                    got = got * mapping[letter]
                word_cache[word] = got
            return got

        for (w, traces), c in self.terms.items():
            acc = TracePoly.scalar(c) * expand(w)
            for t in traces:
                acc = acc * expand(t).trace()
            out = out + acc
        return out

    # -- term inspection ----------------------------------------------------
    def is_pure_trace(self) -> bool:
        return all(not w for (w, _) in self.terms)

    def degree_in(self, i: int) -> int:
        """Largest occurrence count of variable i over all monomials."""
        best = 0
        for (w, traces) in self.terms:
            d = w.count(i) + sum(t.count(i) for t in traces)
            best = max(best, d)
        return best

    def term_degrees(self):
        """Set of total degrees (word letters plus trace letters) of terms."""
        return {len(w) + sum(len(t) for t in traces) for (w, traces) in self.terms}

    def multilinear_part(self, variables) -> "TracePoly":
        """Terms in which each listed variable occurs exactly once."""
        out = {}
        for (w, traces), c in self.terms.items():
            counts = {}
            for letter in w:
                counts[letter] = counts.get(letter, 0) + 1
            for t in traces:
                for letter in t:
                    counts[letter] = counts.get(letter, 0) + 1
            if all(counts.get(v, 0) == 1 for v in variables) and \
                    sum(counts.values()) == len(variables):
                out[(w, traces)] = c
        return TracePoly(out)

    # -- rendering -----------------------------------------------------------
    def sorted_terms(self):
        """Terms in canonical display order: longer words first, then traces."""
        def key(item):
            (w, traces), _ = item
            return (-len(w), w, tuple(_trace_key(t) for t in traces))
        return sorted(self.terms.items(), key=key)

    def render(self, var_names=None) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (w, traces), c in self.sorted_terms():
            body = _monomial_str(w, traces, var_names)
            if body:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                text = mag + body
            else:
                text = str(abs(c))
            if not chunks:
                chunks.append(text if c > 0 else "-" + text)
            else:
                chunks.append(("+ " if c > 0 else "- ") + text)
        return " ".join(chunks)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"TracePoly({self.render()})"


def _word_str(w: Word, var_names=None) -> str:
    names = var_names or {}
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        name = names.get(w[i], f"x{w[i]}")
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)


def _monomial_str(w: Word, traces, var_names=None) -> str:
    parts = []
    i = 0
    while i < len(traces):
        j = i
        while j < len(traces) and traces[j] == traces[i]:
            j += 1
        inner = "1" if not traces[i] else _word_str(traces[i], var_names)
        sym = f"tr({inner})"
        parts.append(sym if j - i == 1 else f"{sym}^{j - i}")
        i = j
    if w:
        parts.append(_word_str(w, var_names))
    return "*".join(parts)


# -- module-level operation aliases ------------------------------------------

def mul(p: TracePoly, q: TracePoly) -> TracePoly:
    return p * q


def formal_trace(p: TracePoly) -> TracePoly:
    return p.trace()


def substitute(p: TracePoly, mapping) -> TracePoly:
    return p.substitute(mapping)


def x(i: int) -> TracePoly:
    return TracePoly.variable(i)


# -- parser -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d*)|(tr)|([()+\-*^/]))")


class _Parser:
    """Recursive descent for the rendering grammar.

    expr   := ['-'] term (('+'|'-') term)*
    term   := power ('*' power)*
    power  := atom ('^' INT)*
    atom   := INT ['/' INT] | VAR | 'tr' '(' expr ')' | '(' expr ')'
    """

    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise ValueError(f"cannot tokenize input at: {text[pos:]!r}")
                break
            pos = m.end()
            self.tokens.append(m.group(m.lastindex))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of input")
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> TracePoly:
        p = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input at token {self.peek()!r}")
        return p

    def expr(self) -> TracePoly:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        elif self.peek() == "+":
            self.take()
        total = sign * self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def term(self) -> TracePoly:
        out = self.power()
        while self.peek() == "*":
            self.take()
            out = out * self.power()
        return out

    def power(self) -> TracePoly:
        base = self.atom()
        while self.peek() == "^":
            self.take()
            e = self.take()
            if not e.isdigit():
                raise ValueError(f"expected integer exponent, got {e!r}")
            base = base ** int(e)
        return base

    def atom(self) -> TracePoly:
        tok = self.take()
        if tok.isdigit():
            if self.peek() == "/":
                self.take()
                den = self.take()
                if not den.isdigit():
                    raise ValueError(f"expected denominator, got {den!r}")
                return TracePoly.scalar(Fraction(int(tok), int(den)))
            return TracePoly.scalar(int(tok))
        if tok.startswith("x"):
            idx = int(tok[1:]) if len(tok) > 1 else 1
            return TracePoly.variable(idx)
        if tok == "tr":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner.trace()
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ValueError(f"unexpected token {tok!r}")


def parse_trace_poly(text: str) -> TracePoly:
    """Parse the textual grammar produced by TracePoly.render."""
    return _Parser(text).parse()
