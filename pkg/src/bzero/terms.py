"""Words, polynomials, their text syntax and canonical forms.

A word is a nonempty tuple of letter names.  A polynomial is a finite
nonempty set of words kept in length-lexicographic order, so equal
polynomials always have equal representations (addition is commutative,
associative and idempotent).

Grammar (whitespace between tokens is ignored)::

    poly   := term ('+' term)*
    term   := factor (('*')? factor)*
    factor := letter ('^' nat)?
    letter := [a-z][0-9_]*
    nat    := [1-9][0-9]*
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

Word = Tuple[str, ...]

LETTER_RE = re.compile(r"[a-z][0-9_]*\Z")
_TOKEN_RE = re.compile(r"\s*(?:(?P<letter>[a-z][0-9_]*)|(?P<nat>[0-9]+)|(?P<op>[+*^])|(?P<bad>\S))")


class ParseError(ValueError):
    """Syntax error; ``offset`` is the byte offset of the offending token."""

    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.text = text


def is_letter(name: str) -> bool:
    return bool(LETTER_RE.match(name))


def word_key(w: Word):
    return (len(w), w)


@dataclass(frozen=True)
class Polynomial:
    """A canonical sum of words."""

    summands: Tuple[Word, ...]

    def __init__(self, words: Iterable[Iterable[str]]):
        ws = set()
        for w in words:
            w = tuple(w)
            if not w:
                raise ValueError("empty word in polynomial")
            for a in w:
                if not isinstance(a, str) or not is_letter(a):
                    raise ValueError(f"invalid letter {a!r}")
            ws.add(w)
        if not ws:
            raise ValueError("polynomial needs at least one summand")
        object.__setattr__(self, "summands", tuple(sorted(ws, key=word_key)))

    @classmethod
    def of(cls, *words: Word) -> "Polynomial":
        return cls(words)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(self.summands + other.summands)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(u + v for u in self.summands for v in other.summands)

    def lmul(self, w: Word) -> "Polynomial":
        """The product ``w * self`` distributed over the summands."""
        return Polynomial(tuple(w) + u for u in self.summands)

    def rmul(self, w: Word) -> "Polynomial":
        return Polynomial(u + tuple(w) for u in self.summands)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.summands

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def content(self) -> frozenset:
        return frozenset(a for w in self.summands for a in w)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Polynomial({render(self)!r})"


def content(p: Polynomial) -> frozenset:
    """Set of letters occurring in ``p``."""
    return p.content()


def letterwise_square(w: Word) -> Word:
    """``x1 x2 ... xn -> x1 x1 x2 x2 ... xn xn``."""
    return tuple(a for a in w for _ in (0, 1))


def render_word(w: Word) -> str:
    if not w:
        return ""
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return "".join(out)


def render(p: Polynomial) -> str:
    return " + ".join(render_word(w) for w in p.summands)


def _tokens(text: str):
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", _byte_offset(text, start), text)
        yield kind, m.group(kind), _byte_offset(text, start)
        pos = m.end()
    yield "end", "", _byte_offset(text, n)


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = list(_tokens(text))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def poly(self):
        terms = [self.term()]
        while self.peek()[1] == "+":
            self.take()
            terms.append(self.term())
        return terms

    def term(self):
        word = list(self.factor())
        while True:
            kind, val, _ = self.peek()
            if val == "*":
                self.take()
                word.extend(self.factor())
            elif kind == "letter":
                word.extend(self.factor())
            else:
                return tuple(word)

    def factor(self):
        kind, val, _ = tok = self.take()
        if kind != "letter":
            self.error("expected a letter", tok)
        if self.peek()[1] == "^":
            self.take()
            nkind, nval, _ = ntok = self.take()
            if nkind != "nat":
                self.error("expected an exponent", ntok)
            if nval.startswith("0"):
                self.error("exponent must be a positive integer", ntok)
            return (val,) * int(nval)
        return (val,)


def parse_words(text: str) -> list:
    p = _Parser(text)
    if p.peek()[0] == "end":
        p.error("empty input")
    terms = p.poly()
    if p.peek()[0] != "end":
        p.error("unexpected token")
    return terms


def parse_polynomial(text: str) -> Polynomial:
    return Polynomial(parse_words(text))


def parse_word(text: str) -> Word:
    """Parse a single word; the empty string is rejected."""
    terms = parse_words(text)
    if len(terms) != 1:
        raise ParseError("expected a single word", 0, text)
    return terms[0]


_RELATIONS = [("<=", "leq"), ("≤", "leq"), ("≈", "eq"), ("=", "eq")]


def parse_claim(text: str):
    """Parse ``"p = q"`` / ``"p <= q"`` (``≈``/``≤`` accepted) into ``(p, rel, q)``."""
    for sym, rel in _RELATIONS:
        if sym in text:
            left, _, right = text.partition(sym)
            if any(s in right for s, _ in _RELATIONS):
                raise ParseError("more than one relation symbol", len(left.encode()), text)
            try:
                rhs = parse_polynomial(right)
            except ParseError as exc:
                offset = len((left + sym).encode("utf-8")) + exc.offset
                raise ParseError(str(exc).rsplit(" at offset", 1)[0], offset, text) from None
            return parse_polynomial(left), rel, rhs
    raise ParseError("expected '=' or '<='", 0, text)
