"""Text syntax and the ``cycgrad/1`` interchange format.

Grammar (whitespace-insensitive)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := var ('^' posint)? | '(' expr ')'
    coeff  := integer | integer '/' posint
    var    := 'X' posint

Products keep their written order.  ``print_poly`` emits terms sorted by
degree, then lexicographically, so ``parse_poly(print_poly(p)) == p``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .algebra import AlgebraContext, GradientVec, Poly, TensorPoly, Word, mul
from .errors import FormatError, IndexOutOfRangeError, ParseError

__all__ = [
    "FORMAT_VERSION",
    "parse_poly",
    "max_variable_index",
    "print_poly",
    "print_tensor",
    "format_coefficient",
    "serialize",
    "deserialize",
    "to_document",
    "from_document",
]

FORMAT_VERSION = "cycgrad/1"

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>X\d+)|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: AlgebraContext):
        self.text = text
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, expected: str):
        kind, val, pos = self.peek()
        found = "end of input" if kind == "eof" else repr(val)
        raise ParseError(f"expected {expected}, found {found}", self.text, pos)

    def at_op(self, op: str) -> bool:
        kind, val, _ = self.peek()
        return kind == "op" and val == op

    def expect_op(self, op: str):
        if not self.at_op(op):
            self.error(repr(op))
        self.take()

    def parse(self) -> Poly:
        p = self.expr()
        if self.peek()[0] != "eof":
            self.error("'+', '-', '*' or end of input")
        return p

    def expr(self) -> Poly:
        negate = False
        if self.at_op("-"):
            self.take()
            negate = True
        p = self.term()
        if negate:
            p = -p
        while self.at_op("+") or self.at_op("-"):
            sign = self.take()[1]
            t = self.term()
            p = p + t if sign == "+" else p - t
        return p

    def term(self) -> Poly:
        kind, _, _ = self.peek()
        if kind == "int":
            p = self.ctx.const(self.coeff())
        else:
            p = self.factor()
        while self.at_op("*"):
            self.take()
            p = mul(p, self.factor())
        return p

    def coeff(self) -> Fraction:
        _, num, _ = self.take()
        if self.at_op("/"):
            self.take()
            kind, den, pos = self.peek()
            if kind != "int":
                self.error("positive integer denominator")
            if int(den) == 0:
                raise ParseError("zero denominator", self.text, pos)
            self.take()
            return Fraction(int(num), int(den))
        return Fraction(int(num))

    def factor(self) -> Poly:
        kind, val, pos = self.peek()
        if kind == "var":
            self.take()
            j = int(val[1:])
            if not 1 <= j <= self.ctx.n:
                raise IndexOutOfRangeError(
                    f"variable X{j} outside X1..X{self.ctx.n} at column {pos + 1}"
                )
            power = 1
            if self.at_op("^"):
                self.take()
                k, e, epos = self.peek()
                if k != "int":
                    self.error("positive integer exponent")
                if int(e) == 0:
                    raise ParseError("exponent must be positive", self.text, epos)
                self.take()
                power = int(e)
            return Poly._raw(self.ctx, {(j,) * power: Fraction(1)})
        if kind == "op" and val == "(":
            self.take()
            p = self.expr()
            self.expect_op(")")
            if self.at_op("^"):
                self.error("'*' or ')' ('^' applies to variables only)")
            return p
        self.error("variable or '('")


def _as_ctx(ctx) -> AlgebraContext:
    return ctx if isinstance(ctx, AlgebraContext) else AlgebraContext(int(ctx))


def parse_poly(text: str, ctx: AlgebraContext | int) -> Poly:
    """Parse ``text`` into a Poly over ``ctx`` (an AlgebraContext or an int ``n``).

    >>> print(parse_poly("1/2*X1^2 - (X2 + 1)*X1", 2))
    -X1 + 1/2*X1*X1 - X2*X1
    """
    return _Parser(text, _as_ctx(ctx)).parse()


def max_variable_index(text: str) -> int:
    """Largest ``k`` among the ``Xk`` tokens of ``text`` (0 if none)."""
    return max((int(v[1:]) for kind, v, _ in _tokenize(text) if kind == "var"), default=0)


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_word(w: Word) -> str:
    return "*".join(f"X{i}" for i in w)


def _format_terms(items) -> str:
    parts: list[str] = []
    for body, c in items:
        neg = c < 0
        a = -c if neg else c
        if not body:
            text = format_coefficient(a)
        elif a == 1:
            text = body
        else:
            text = f"{format_coefficient(a)}*{body}"
        if not parts:
            parts.append(f"-{text}" if neg else text)
        else:
            parts.append(f"{'-' if neg else '+'} {text}")
    return " ".join(parts) if parts else "0"


def print_poly(p: Poly) -> str:
    """Canonical text: ``(degree, lex)`` term order, ``a/b`` coefficients, unit coefficients elided."""
    return _format_terms((_format_word(w), c) for w, c in p.sorted_terms())


def print_tensor(t: TensorPoly) -> str:
    def leg(w):
        return _format_word(w) or "1"

    return _format_terms((f"{leg(u)} (x) {leg(v)}", c) for (u, v), c in t.sorted_terms())


# ---------------------------------------------------------------- interchange


def _terms_out(p: Poly) -> list:
    return [[list(w), c.numerator, c.denominator] for w, c in p.sorted_terms()]


def _frac(num, den) -> Fraction:
    if not isinstance(num, int) or not isinstance(den, int) or isinstance(num, bool) or den <= 0:
        raise FormatError(f"bad coefficient {num!r}/{den!r}")
    return Fraction(num, den)


def _terms_in(ctx: AlgebraContext, raw) -> Poly:
    if not isinstance(raw, list):
        raise FormatError("term list must be an array")
    terms: dict[Word, Fraction] = {}
    for item in raw:
        try:
            w, num, den = item
        except (TypeError, ValueError):
            raise FormatError(f"malformed term {item!r}") from None
        if not isinstance(w, list) or not all(isinstance(i, int) for i in w):
            raise FormatError(f"malformed word {w!r}")
        w = tuple(w)
        if w in terms:
            raise FormatError(f"duplicate word {list(w)}")
        terms[w] = _frac(num, den)
    try:
        return Poly(ctx, terms)
    except IndexOutOfRangeError as e:
        raise FormatError(str(e)) from None


def _tensor_out(t: TensorPoly) -> list:
    return [[list(u), list(v), c.numerator, c.denominator] for (u, v), c in t.sorted_terms()]


def _tensor_in(ctx, raw) -> TensorPoly:
    if not isinstance(raw, list):
        raise FormatError("term list must be an array")
    terms = {}
    for item in raw:
        try:
            u, v, num, den = item
            key = (tuple(u), tuple(v))
        except (TypeError, ValueError):
            raise FormatError(f"malformed tensor term {item!r}") from None
        terms[key] = _frac(num, den)
    try:
        return TensorPoly(ctx, terms)
    except (IndexOutOfRangeError, TypeError, ValueError) as e:
        raise FormatError(str(e)) from None


def to_document(obj) -> dict[str, Any]:
    """Plain-JSON dictionary for any domain object."""
    from .exactness import ExactnessReport
    from .oracle import NumericReport
    from .solver import GradientCertificate, KernelDecomposition
    from .verify import VerifyReport

    if isinstance(obj, Poly):
        return {"format": FORMAT_VERSION, "kind": "poly", "n": obj.ctx.n, "terms": _terms_out(obj)}
    if isinstance(obj, TensorPoly):
        return {"format": FORMAT_VERSION, "kind": "tensor", "n": obj.ctx.n, "terms": _tensor_out(obj)}
    if isinstance(obj, GradientVec):
        return {
            "format": FORMAT_VERSION,
            "kind": "gradient",
            "n": obj.ctx.n,
            "entries": [_terms_out(p) for p in obj.entries],
        }
    if isinstance(obj, KernelDecomposition):
        c = Fraction(obj.constant)
        return {
            "format": FORMAT_VERSION,
            "kind": "kernel_decomposition",
            "n": obj.ctx.n,
            "constant": [c.numerator, c.denominator],
            "commutants": [_terms_out(q) for q in obj.commutants],
        }
    if isinstance(obj, GradientCertificate):
        return {
            "format": FORMAT_VERSION,
            "kind": "gradient_certificate",
            "n": obj.obstruction.ctx.n,
            "is_gradient": obj.is_gradient,
            "obstruction": _terms_out(obj.obstruction),
            "potential": None if obj.potential is None else _terms_out(obj.potential),
        }
    if isinstance(obj, ExactnessReport):
        return {
            "format": FORMAT_VERSION,
            "kind": "exactness_report",
            "n": obj.n,
            "trials": obj.trials,
            "max_degree": obj.max_degree,
            "seed": obj.seed,
            "failures": dict(obj.failures),
            "examples": list(obj.examples),
        }
    if isinstance(obj, NumericReport):
        return {
            "format": FORMAT_VERSION,
            "kind": "numeric_report",
            "quantity": obj.quantity,
            "deviation": obj.deviation,
            "tolerance": obj.tolerance,
            "passed": obj.passed,
            "metadata": dict(obj.metadata),
        }
    if isinstance(obj, VerifyReport):
        return {
            "format": FORMAT_VERSION,
            "kind": "verify_report",
            "exactness": to_document(obj.exactness),
            "numeric": [to_document(r) for r in obj.numeric],
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _require(doc: dict, key: str, kinds):
    if key not in doc:
        raise FormatError(f"missing field {key!r}")
    val = doc[key]
    # bool subclasses int; only accept it where bool is asked for
    if not isinstance(val, kinds) or (isinstance(val, bool) and kinds is not bool):
        raise FormatError(f"field {key!r} has wrong type {type(val).__name__}")
    return val


def _ctx_of(doc) -> AlgebraContext:
    n = _require(doc, "n", int)
    if n < 1:
        raise FormatError(f"n must be positive, got {n}")
    return AlgebraContext(n)


def from_document(doc: dict):
    from .exactness import ExactnessReport
    from .oracle import NumericReport
    from .solver import GradientCertificate, KernelDecomposition
    from .verify import VerifyReport

    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    version = doc.get("format")
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported format version {version!r}; expected {FORMAT_VERSION!r}")
    kind = doc.get("kind")

    if kind == "poly":
        return _terms_in(_ctx_of(doc), doc.get("terms"))
    if kind == "tensor":
        return _tensor_in(_ctx_of(doc), doc.get("terms"))
    if kind == "gradient":
        ctx = _ctx_of(doc)
        entries = _require(doc, "entries", list)
        if len(entries) != ctx.n:
            raise FormatError(f"gradient has {len(entries)} entries for n={ctx.n}")
        return GradientVec(ctx, [_terms_in(ctx, e) for e in entries])
    if kind == "kernel_decomposition":
        ctx = _ctx_of(doc)
        const = _require(doc, "constant", list)
        if len(const) != 2:
            raise FormatError("constant must be [numerator, denominator]")
        comms = _require(doc, "commutants", list)
        if len(comms) != ctx.n:
            raise FormatError(f"{len(comms)} commutants for n={ctx.n}")
        return KernelDecomposition(_frac(*const), tuple(_terms_in(ctx, q) for q in comms))
    if kind == "gradient_certificate":
        ctx = _ctx_of(doc)
        pot = doc.get("potential")
        try:
            return GradientCertificate(
                _require(doc, "is_gradient", bool),
                _terms_in(ctx, doc.get("obstruction")),
                None if pot is None else _terms_in(ctx, pot),
            )
        except ValueError as e:
            raise FormatError(str(e)) from None
    if kind == "exactness_report":
        failures = _require(doc, "failures", dict)
        return ExactnessReport(
            trials=_require(doc, "trials", int),
            max_degree=_require(doc, "max_degree", int),
            n=_require(doc, "n", int),
            seed=_require(doc, "seed", int),
            failures={str(k): int(v) for k, v in failures.items()},
            examples=[str(e) for e in _require(doc, "examples", list)],
        )
    if kind == "numeric_report":
        try:
            return NumericReport(
                quantity=_require(doc, "quantity", str),
                deviation=float(_require(doc, "deviation", (int, float))),
                tolerance=float(_require(doc, "tolerance", (int, float))),
                passed=_require(doc, "passed", bool),
                metadata=dict(_require(doc, "metadata", dict)),
            )
        except ValueError as e:
            raise FormatError(str(e)) from None
    if kind == "verify_report":
        return VerifyReport(
            exactness=from_document(_require(doc, "exactness", dict)),
            numeric=[from_document(d) for d in _require(doc, "numeric", list)],
        )
    raise FormatError(f"unknown document kind {kind!r}")


def serialize(obj) -> str:
    """One-line JSON document tagged ``cycgrad/1``."""
    return json.dumps(to_document(obj), separators=(",", ":"))


def deserialize(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not valid JSON: {e}") from None
    return from_document(doc)
