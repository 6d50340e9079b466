"""Text syntax for the CLI: generator words, spectrum points, and elements.

Grammar (whitespace between tokens is ignored; an adjoint ``*`` must follow
its atom with no intervening space, all other ``*`` are multiplication):

    expr     := term (("+" | "-") term)*
    term     := factor+                      juxtaposition is multiplication
    factor   := scalar | atom | "(" expr ")" ["*"] ["^" int]
    atom     := ("s" | "v"p | "v_"p | "w(" m "," a ")") ["*"] ["^" int]
    scalar   := int ["/" int]

Points are ``A(m;N)`` and ``B(r;N)`` with N a supernatural -- a decimal
integer, ``nabla``, or factors ``p^e`` joined by ``*`` with ``e`` decimal or
``inf`` -- and r either an integer or a coherent table ``a1:r1,a2:r2,...``.
Group elements are ``(r,a)`` with rational entries ``p/q``.

Laurent elements are sums of ``c i^n`` terms (``n`` may be negative);
Toeplitz-span elements are sums of ``c S^m S*^n`` terms.
"""

from __future__ import annotations

from fractions import Fraction

from axb.arithmetic import INF, ProfiniteResidue, Supernatural, is_prime
from axb.operators import WordSum, adjoint_word, word_sum
from axb.semigroup import GroupElement, SemigroupElement
from axb.spectrum import OmegaPoint, PointA, PointB
from axb.transfer import LaurentPoly, ToeplitzElement


class ParseError(ValueError):
    """Syntax error with the offending position."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def peek_raw(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.text, self.pos)
        self.pos += 1

    def take_int(self, allow_sign: bool = False) -> int:
        self.skip_ws()
        start = self.pos
        if allow_sign and self.peek_raw() in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] in "+-":
            raise ParseError("expected an integer", self.text, start)
        return int(self.text[start : self.pos])

    def take_word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start : self.pos]

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)


def _take_adjoint(sc: _Scanner) -> bool:
    # an adjoint star binds with no whitespace
    if sc.peek_raw() == "*":
        sc.pos += 1
        return True
    return False


def _take_exponent(sc: _Scanner) -> int:
    if sc.peek() == "^":
        sc.pos += 1
        e = sc.take_int(allow_sign=True)
        if e < 0:
            raise sc.error("exponents of words must be nonnegative")
        return e
    return 1


def _mul_sums(a: WordSum, b: WordSum) -> WordSum:
    return word_sum(*((ca * cb, wa + wb) for ca, wa in a for cb, wb in b))


def _pow_sum(a: WordSum, e: int) -> WordSum:
    out = word_sum((1, ()))
    for _ in range(e):
        out = _mul_sums(out, a)
    return out


def _adjoint_sum(a: WordSum) -> WordSum:
    return word_sum(*((c, adjoint_word(w)) for c, w in a))


def _parse_scalar(sc: _Scanner) -> Fraction:
    n = sc.take_int()
    if sc.peek() == "/":
        sc.pos += 1
        d = sc.take_int()
        return Fraction(n, d)
    return Fraction(n)


def _parse_atom(sc: _Scanner) -> WordSum:
    ch = sc.peek()
    if ch == "(":
        sc.expect("(")
        inner = _parse_expr(sc)
        sc.expect(")")
        if _take_adjoint(sc):
            inner = _adjoint_sum(inner)
        return _pow_sum(inner, _take_exponent(sc))
    if ch.isdigit():
        return word_sum((_parse_scalar(sc), ()))
    name = sc.take_word()
    if name == "s":
        gen = SemigroupElement(1, 1)
    elif name == "v":
        if sc.peek_raw() == "_":
            sc.pos += 1
        p = sc.take_int()
        if not is_prime(p):
            raise sc.error(f"subscript {p} of v must be prime")
        gen = SemigroupElement(0, p)
    elif name == "w":
        sc.expect("(")
        m = sc.take_int()
        sc.expect(",")
        a = sc.take_int()
        sc.expect(")")
        gen = SemigroupElement(m, a)
    elif name and name[0] == "v" and name[1:].isdigit():
        p = int(name[1:])
        if not is_prime(p):
            raise sc.error(f"subscript {p} of v must be prime")
        gen = SemigroupElement(0, p)
    else:
        raise sc.error(f"unknown generator {name!r}" if name else "expected a factor")
    word: WordSum = word_sum((1, ((gen, False),)))
    if _take_adjoint(sc):
        word = _adjoint_sum(word)
    return _pow_sum(word, _take_exponent(sc))


def _starts_factor(sc: _Scanner) -> bool:
    ch = sc.peek()
    return ch.isdigit() or ch == "(" or ch.isalpha()


def _parse_term(sc: _Scanner) -> WordSum:
    out = _parse_atom(sc)
    while True:
        if sc.peek() == "*":  # explicit multiplication (adjoints were consumed already)
            sc.pos += 1
            out = _mul_sums(out, _parse_atom(sc))
        elif _starts_factor(sc):
            out = _mul_sums(out, _parse_atom(sc))
        else:
            return out


def _parse_expr(sc: _Scanner) -> WordSum:
    sign = Fraction(1)
    if sc.peek() in ("+", "-"):
        if sc.peek() == "-":
            sign = Fraction(-1)
        sc.pos += 1
    out = word_sum(*((sign * c, w) for c, w in _parse_term(sc)))
    while sc.peek() in ("+", "-"):
        sign = Fraction(1 if sc.peek() == "+" else -1)
        sc.pos += 1
        out = WordSum(tuple(out) + tuple((sign * c, w) for c, w in _parse_term(sc)))
    return out


def parse_word_expr(text: str) -> WordSum:
    """Parse a generator-word expression into a rational combination of words."""
    sc = _Scanner(text)
    out = _parse_expr(sc)
    if not sc.eof():
        raise sc.error("trailing input")
    return out


def format_word_sum(ws: WordSum) -> str:
    """Canonical text for a word sum; parses back to an equal word sum."""

    def fmt_word(word):
        if not word:
            return "1"
        bits = []
        for gen, star in word:
            if gen == SemigroupElement(1, 1):
                base = "s"
            elif gen.m == 0 and is_prime(gen.a):
                base = f"v{gen.a}"
            else:
                base = f"w({gen.m},{gen.a})"
            bits.append(base + ("*" if star else ""))
        return " ".join(bits)

    if not ws:
        return "0"
    parts = []
    for i, (c, word) in enumerate(ws):
        sign = "-" if c < 0 else ("+" if i else "")
        mag = abs(c)
        body = fmt_word(word)
        if mag != 1 or body == "1":
            body = f"{mag} {body}" if body != "1" else str(mag)
        parts.append(f"{sign} {body}".strip() if sign else body)
    return " ".join(parts)


def parse_supernatural(text: str) -> Supernatural:
    text = text.strip()
    if not text:
        raise ParseError("empty supernatural", text, 0)
    if text == "nabla":
        return Supernatural.nabla()
    if text.isdigit():
        return Supernatural.from_int(int(text))
    exponents: dict[int, object] = {}
    for chunk in text.split("*"):
        chunk = chunk.strip()
        if "^" in chunk:
            base, _, exp = chunk.partition("^")
            base, exp = base.strip(), exp.strip()
            if not base.isdigit():
                raise ParseError("expected a prime base", text, text.find(chunk))
            e = INF if exp == "inf" else (int(exp) if exp.isdigit() else None)
            if e is None:
                raise ParseError(f"bad exponent {exp!r}", text, text.find(chunk))
        elif chunk.isdigit():
            base, e = chunk, 1
        else:
            raise ParseError(f"bad factor {chunk!r}", text, text.find(chunk))
        p = int(base)
        if not is_prime(p):
            raise ParseError(f"factor base {p} is not prime", text, text.find(chunk))
        prev = exponents.get(p, 0)
        if prev is INF or e is INF:
            exponents[p] = INF
        else:
            exponents[p] = prev + e
    return Supernatural(0, exponents)


def parse_point(text: str) -> OmegaPoint:
    text = text.strip()
    if len(text) < 4 or text[0] not in "AB" or text[1] != "(" or text[-1] != ")":
        raise ParseError("expected A(m;N) or B(r;N)", text, 0)
    body = text[2:-1]
    if ";" not in body:
        raise ParseError("expected ';' between the data and the modulus", text, 2)
    data, _, modulus_text = body.rpartition(";")
    modulus = parse_supernatural(modulus_text)
    if text[0] == "A":
        if not data.strip().isdigit():
            raise ParseError("A-point data must be a nonnegative integer", text, 2)
        return PointA(int(data), modulus)
    data = data.strip()
    try:
        if ":" in data:
            entries = {}
            for item in data.split(","):
                a_txt, _, r_txt = item.partition(":")
                entries[int(a_txt)] = int(r_txt)
            residue = ProfiniteResidue.from_table(entries, modulus)
        else:
            residue = ProfiniteResidue.from_integer(int(data), modulus)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"bad residue {data!r}: {exc}", text, 2) from None
    return PointB(residue, modulus)


def format_point(point: OmegaPoint) -> str:
    if isinstance(point, PointA):
        return f"A({point.m};{point.N})"
    from axb.arithmetic import IntegerResidue

    r = point.r
    if isinstance(r, IntegerResidue):
        data = str(r.value)
    elif point.N.is_finite:
        data = str(r.query(point.N.to_int()))
    else:
        data = repr(r)
    return f"B({data};{point.N})"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {text!r}", text, 0) from None


def parse_group_element(text: str) -> GroupElement:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError("expected (r,a)", text, 0)
    parts = text[1:-1].split(",")
    if len(parts) != 2:
        raise ParseError("expected two components", text, 0)
    try:
        return GroupElement(_parse_fraction(parts[0]), _parse_fraction(parts[1]))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None


def parse_semigroup_element(text: str) -> SemigroupElement:
    g = parse_group_element(text)
    if not g.in_positive_cone():
        raise ParseError("element is not in N x| Nx", text, 0)
    return g.to_semigroup()


def parse_laurent(text: str) -> LaurentPoly:
    """Sums of Laurent terms: e.g. ``i^4 - 2/3 i^-1 + 5``."""
    sc = _Scanner(text)
    out = LaurentPoly.zero()
    first = True
    while not sc.eof():
        sign = Fraction(1)
        if sc.peek() in ("+", "-"):
            sign = Fraction(-1 if sc.peek() == "-" else 1)
            sc.pos += 1
        elif not first:
            raise sc.error("expected '+' or '-'")
        coeff = Fraction(1)
        if sc.peek().isdigit():
            coeff = _parse_scalar(sc)
        n = 0
        if sc.peek() == "i":
            sc.pos += 1
            n = 1
            if sc.peek() == "^":
                sc.pos += 1
                n = sc.take_int(allow_sign=True)
        elif coeff == 1 and not sc.peek().isdigit():
            raise sc.error("expected a coefficient or i^n")
        out = out + LaurentPoly.iota(n, sign * coeff)
        first = False
    return out


def parse_toeplitz(text: str) -> ToeplitzElement:
    """Sums of Toeplitz-span terms: e.g. ``S^3 S*^1 - 2 S*^2 + 1``."""
    sc = _Scanner(text)
    out = ToeplitzElement.zero()
    first = True
    while not sc.eof():
        sign = Fraction(1)
        if sc.peek() in ("+", "-"):
            sign = Fraction(-1 if sc.peek() == "-" else 1)
            sc.pos += 1
        elif not first:
            raise sc.error("expected '+' or '-'")
        coeff = Fraction(1)
        if sc.peek().isdigit():
            coeff = _parse_scalar(sc)
        m = n = 0
        if sc.peek() == "S":
            sc.pos += 1
            star = _take_adjoint(sc)
            e = _take_exponent(sc)
            if star:
                n = e
            else:
                m = e
                if sc.peek() == "S":
                    sc.pos += 1
                    if not _take_adjoint(sc):
                        raise sc.error("expected S* after the S power")
                    n = _take_exponent(sc)
        out = out + ToeplitzElement.shift(m, n, sign * coeff)
        first = False
    return out
