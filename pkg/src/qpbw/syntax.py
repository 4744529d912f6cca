"""
Text format for algebra presentations, and the expression grammar.

A presentation file is line based; ``#`` starts a comment::

    algebra uq_sl2
    coeffs laurent q K          # or: coeffs field q
    vars F E
    q[2,1] = 1
    sigma[1]: K -> q^2*K
    sigma[2]: K -> q^-2*K
    rel[2,1] = (K - K^-1)/(q - q^-1)

plus an optional ``invert x1 .. xt`` line declaring the first t variables
invertible (quantum tori and mixed localizations; tail-free files only).

Expressions use ``+ - * / ^ ( )`` with integers, ``q``, coefficient
variables and algebra variables. ``*`` is noncommutative and left
associative; there is no implicit multiplication. ``/`` divides by units of
the coefficient ring, ``^`` takes an integer exponent (negative exponents
only on units). Tails are evaluated in the tail-free skew ring defined by
the q and sigma lines, so they should be written as standard polynomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .pbw import AlgebraPresentation, CoeffDomain, Poly, poly_str
from .scalars import ONE, DiagonalAutomorphism, Laurent, Q, Scalar


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        where = f"line {line}, column {col}: " if line else (f"column {col}: " if col else "")
        super().__init__(where + message)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(->|[-+*/^()\[\],=:]))")


@dataclass
class Token:
    kind: str  # 'num', 'name', 'op', 'end'
    text: str
    col: int


def tokenize(text: str, line: int = 0) -> List[Token]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = "num" if m.group(1) else "name" if m.group(2) else "op"
        tok = m.group(m.lastindex)
        out.append(Token(kind, tok, m.start(m.lastindex) + 1))
        pos = m.end()
    out.append(Token("end", "", len(text) + 1))
    return out


# ---------------------------------------------------------------------------
# expressions -> AST

class _Parser:
    def __init__(self, tokens, line):
        self.toks = tokens
        self.i = 0
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        tok = self.next()
        if tok.text != text:
            got = tok.text or "end of line"
            raise ParseError(f"expected {text!r}, got {got!r}", self.line, tok.col)
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok.col)

    def expr(self):
        node = self.term()
        while self.peek().text in ("+", "-"):
            op = self.next()
            node = (op.text, op.col, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek().text in ("*", "/"):
            op = self.next()
            node = (op.text, op.col, node, self.unary())
        return node

    def unary(self):
        if self.peek().text == "-":
            op = self.next()
            return ("neg", op.col, self.unary())
        if self.peek().text == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().text == "^":
            op = self.next()
            sign = 1
            if self.peek().text == "-":
                self.next()
                sign = -1
            tok = self.next()
            if tok.kind != "num":
                self.error("exponent must be an integer", tok)
            return ("^", op.col, base, sign * int(tok.text))
        return base

    def atom(self):
        tok = self.next()
        if tok.kind == "num":
            return ("num", tok.col, int(tok.text))
        if tok.kind == "name":
            return ("name", tok.col, tok.text)
        if tok.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        self.error(f"unexpected {tok.text or 'end of line'!r}", tok)

    def finish(self):
        tok = self.peek()
        if tok.kind != "end":
            self.error(f"unexpected {tok.text!r} after expression", tok)


def parse_expr(text: str, line: int = 0, col_offset: int = 0):
    toks = tokenize(text, line)
    for t in toks:
        t.col += col_offset
    p = _Parser(toks, line)
    node = p.expr()
    p.finish()
    return node


# ---------------------------------------------------------------------------
# evaluation

class _Evaluator:
    """Evaluates an AST inside an algebra (``A``) or inside Lambda only."""

    def __init__(self, A: AlgebraPresentation, line: int, allow_vars: bool = True):
        self.A = A
        self.line = line
        self.allow_vars = allow_vars
        self.coeff_index = {n: k for k, n in enumerate(A.domain.names)}
        self.var_index = {n: k for k, n in enumerate(A.names)}

    def err(self, msg, col):
        raise ParseError(msg, self.line, col)

    def const_of(self, f: Poly, col) -> Optional[Laurent]:
        zero = (0,) * self.A.s
        if not f:
            return Laurent(self.A.t, {})
        if set(f) != {zero}:
            return None
        return f[zero]

    def ev(self, node) -> Poly:
        A = self.A
        kind, col = node[0], node[1]
        if kind == "num":
            return A.const(node[2])
        if kind == "name":
            name = node[2]
            if name == "q":
                return A.const(Q)
            if name in self.coeff_index:
                return A.coeff_var(self.coeff_index[name])
            if name in self.var_index:
                if not self.allow_vars:
                    self.err(f"algebra variable {name!r} not allowed in a coefficient", col)
                return A.var(self.var_index[name])
            self.err(f"unknown identifier {name!r}", col)
        if kind == "neg":
            return {e: -c for e, c in self.ev(node[2]).items()}
        if kind in ("+", "-"):
            f, g = self.ev(node[2]), self.ev(node[3])
            if kind == "-":
                g = {e: -c for e, c in g.items()}
            out = dict(f)
            for e, c in g.items():
                v = out.get(e)
                v = c if v is None else v + c
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
            return out
        if kind == "*":
            return A.multiply(self.ev(node[2]), self.ev(node[3]))
        if kind == "/":
            f, g = self.ev(node[2]), self.ev(node[3])
            c = self.const_of(g, col)
            if c is None or not c.is_unit():
                self.err("division only by units of the coefficient ring", col)
            return A.multiply(f, A.const(c.inv()))
        if kind == "^":
            f, k = self.ev(node[2]), node[3]
            if k < 0:
                c = self.const_of(f, col)
                if c is None or not c.is_unit():
                    self.err("negative exponent on a non-unit", col)
                return A.const(c.inv() ** (-k))
            return A.power(f, k)
        raise AssertionError(kind)


def parse_poly(A: AlgebraPresentation, text: str) -> Poly:
    """Parse an expression and return its standard representation in ``A``."""
    return _Evaluator(A, 0).ev(parse_expr(text))


# ---------------------------------------------------------------------------
# presentation files

@dataclass
class PresentationDocument:
    algebra: AlgebraPresentation
    inverted: int = 0
    lines: Dict[str, int] = field(default_factory=dict)


_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")
_INDEXED = re.compile(r"\s*(q|rel|sigma)\s*\[")


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def parse_document(text: str) -> PresentationDocument:
    name = None
    domain = None
    names: Optional[List[str]] = None
    inverted = 0
    q_lines: Dict[Tuple[int, int], Tuple] = {}
    sigma_lines: Dict[Tuple[int, int], Tuple] = {}
    rel_lines: Dict[Tuple[int, int], Tuple] = {}

    def header_words(line, lineno, raw):
        words = line.split()
        cols, pos = [], 0
        for w in words:
            pos = raw.index(w, pos)
            cols.append(pos + 1)
            pos += len(w)
        return words, cols

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        m = _INDEXED.match(line)
        if m:
            if names is None:
                raise ParseError("'vars' must be declared before relations", lineno, 1)
            kw = m.group(1)
            toks = tokenize(line, lineno)
            p = _Parser(toks, lineno)
            p.next()
            p.expect("[")
            a = p.next()
            if a.kind != "num":
                p.error("expected an index", a)
            if kw == "sigma":
                p.expect("]")
                k = int(a.text)
                if not 1 <= k <= len(names):
                    p.error(f"variable index {k} out of range 1..{len(names)}", a)
                p.expect(":")
                z = p.next()
                if z.kind != "name" or z.text not in domain.names:
                    p.error(f"expected a coefficient variable, got {z.text!r}", z)
                p.expect("->")
                node = p.expr()
                p.finish()
                zi = domain.names.index(z.text)
                if (k - 1, zi) in sigma_lines:
                    raise ParseError(f"duplicate sigma[{k}] for {z.text}", lineno, 1)
                sigma_lines[k - 1, zi] = (node, lineno, z.col)
                continue
            p.expect(",")
            b = p.next()
            if b.kind != "num":
                p.error("expected an index", b)
            p.expect("]")
            p.expect("=")
            node = p.expr()
            p.finish()
            j, i = int(a.text), int(b.text)
            for tok, v in ((a, j), (b, i)):
                if not 1 <= v <= len(names):
                    p.error(f"variable index {v} out of range 1..{len(names)}", tok)
            if not j > i:
                raise ParseError(f"{kw}[{j},{i}] requires j>i", lineno, a.col)
            table = q_lines if kw == "q" else rel_lines
            if (j - 1, i - 1) in table:
                raise ParseError(f"duplicate {kw}[{j},{i}]", lineno, 1)
            table[j - 1, i - 1] = (node, lineno, a.col)
            continue

        words, cols = header_words(line, lineno, raw)
        kw = words[0]
        if kw == "algebra":
            if len(words) != 2 or not _IDENT.match(words[1]):
                raise ParseError("expected 'algebra NAME'", lineno, cols[0])
            name = words[1]
        elif kw == "coeffs":
            if len(words) < 3 or words[2] != "q" or words[1] not in ("field", "laurent"):
                raise ParseError("expected 'coeffs field q' or 'coeffs laurent q z1 .. zt'",
                                 lineno, cols[0])
            if words[1] == "field" and len(words) != 3:
                raise ParseError("'coeffs field q' takes no further names", lineno, cols[3])
            zs = words[3:]
            if words[1] == "laurent" and not zs:
                raise ParseError("'coeffs laurent' needs at least one variable", lineno, cols[0])
            for w, c in zip(zs, cols[3:]):
                if not _IDENT.match(w) or w == "q":
                    raise ParseError(f"bad coefficient variable name {w!r}", lineno, c)
            if len(set(zs)) != len(zs):
                raise ParseError("duplicate coefficient variable", lineno, cols[0])
            domain = CoeffDomain(tuple(zs))
        elif kw == "vars":
            if domain is None:
                raise ParseError("'coeffs' must come before 'vars'", lineno, cols[0])
            vs = words[1:]
            if not vs:
                raise ParseError("'vars' needs at least one variable", lineno, cols[0])
            for w, c in zip(vs, cols[1:]):
                if not _IDENT.match(w) or w == "q" or w in domain.names:
                    raise ParseError(f"bad or clashing variable name {w!r}", lineno, c)
            if len(set(vs)) != len(vs):
                raise ParseError("duplicate variable name", lineno, cols[0])
            names = vs
        elif kw == "invert":
            if names is None:
                raise ParseError("'vars' must come before 'invert'", lineno, cols[0])
            inv = words[1:]
            if inv != names[:len(inv)]:
                raise ParseError("'invert' must list a prefix of the variables", lineno, cols[0])
            inverted = len(inv)
        else:
            raise ParseError(f"unknown directive {kw!r}", lineno, cols[0])

    if name is None:
        raise ParseError("missing 'algebra NAME' line", 1, 1)
    if domain is None:
        raise ParseError("missing 'coeffs' line", 1, 1)
    if names is None:
        raise ParseError("missing 'vars' line", 1, 1)

    s, t = len(names), domain.t
    scratch = AlgebraPresentation(names, domain, name=name)
    q = {}
    for (j, i), (node, lineno, col) in sorted(q_lines.items()):
        v = _Evaluator(scratch, lineno, allow_vars=False).ev(node)
        c = _Evaluator(scratch, lineno).const_of(v, col)
        if c is None or not c.is_unit():
            raise ParseError(f"q[{j + 1},{i + 1}] is a non-unit", lineno, col)
        q[j, i] = c
    scale = [[ONE] * t for _ in range(s)]
    for (k, zi), (node, lineno, col) in sorted(sigma_lines.items()):
        v = _Evaluator(scratch, lineno, allow_vars=False).ev(node)
        c = _Evaluator(scratch, lineno).const_of(v, col)
        z = Laurent.var(t, zi)
        lam = None if c is None else c / z
        if lam is None or not lam.is_scalar() or not lam.scalar():
            raise ParseError(f"sigma[{k + 1}] must map {domain.names[zi]} to "
                             f"(nonzero scalar)*{domain.names[zi]}", lineno, col)
        scale[k][zi] = lam.scalar()
    sigma = [DiagonalAutomorphism(row) for row in scale]
    skew = AlgebraPresentation(names, domain, q=q, sigma=sigma, name=name)
    tails = {}
    for (j, i), (node, lineno, col) in sorted(rel_lines.items()):
        tails[j, i] = _Evaluator(skew, lineno).ev(node)
    if inverted and tails:
        raise ParseError("'invert' is only supported for tail-free presentations", 1, 1)
    A = AlgebraPresentation(names, domain, q=q, sigma=sigma, tails=tails, name=name)
    return PresentationDocument(A, inverted)


def parse_presentation(text: str) -> AlgebraPresentation:
    return parse_document(text).algebra


def serialize_presentation(A: AlgebraPresentation, inverted: int = 0) -> str:
    lines = [f"algebra {A.name or 'unnamed'}"]
    if A.domain.is_field:
        lines.append("coeffs field q")
    else:
        lines.append("coeffs laurent q " + " ".join(A.domain.names))
    lines.append("vars " + " ".join(A.names))
    if inverted:
        lines.append("invert " + " ".join(A.names[:inverted]))
    for (j, i) in sorted(A.q):
        v = A.q[j, i]
        if not v.is_one():
            lines.append(f"q[{j + 1},{i + 1}] = {_coeff_str(A, v)}")
    for k, sg in enumerate(A.sigma):
        for zi, lam in enumerate(sg.scale):
            if lam != ONE:
                z = A.domain.names[zi]
                lam_s = str(lam)
                if not _atomic(lam):
                    lam_s = f"({lam_s})"
                lines.append(f"sigma[{k + 1}]: {z} -> {lam_s}*{z}")
    for (j, i) in sorted(A.tails):
        lines.append(f"rel[{j + 1},{i + 1}] = {poly_str(A, A.tails[j, i])}")
    return "\n".join(lines) + "\n"


def _atomic(c: Scalar) -> bool:
    return c.den == (1,) and len([x for x in c.num if x]) == 1 and c.num[-1] > 0


def _coeff_str(A, v: Laurent) -> str:
    return v.to_str(A.domain.names)
