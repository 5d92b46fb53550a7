"""Text format for structure equations.

A document is optional ``key: value`` metadata lines followed by a
parenthesized list of differentials, one per basis covector::

    name: tau30_x_tau30
    nilradical: 1,2,3,4
    (-f25, f15, -f46, f36, 0, 0)

Each differential is ``0`` or a signed sum of terms ``[q*][s*sqrt(d)*]B``
where ``B`` is ``eij``/``fij`` (single-digit indices) or ``[i,j]``.  The
bracketed form is required once the dimension reaches 10, since ``e110``
could mean e^{1,10} or e^{11,0}.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DslSyntaxError, JacobiFailure
from .exterior import KForm
from .liealg import LieAlgebra
from .scalar import QuadSurd, Scalar, sqrt

__all__ = [
    "DslDocument",
    "parse_document",
    "parse_structure",
    "parse_form",
    "serialize",
    "format_form",
]


@dataclass
class DslDocument:
    forms: list[KForm]
    metadata: dict[str, str] = field(default_factory=dict)
    letter: str = "e"  # basis letter used in the source, kept on re-serialization

    @property
    def dimension(self) -> int:
        return len(self.forms)

    def algebra(self, validate: bool = True) -> LieAlgebra:
        return LieAlgebra.from_differentials(
            self.forms, validate=validate, name=self.metadata.get("name", "")
        )

    def nilradical_candidate(self) -> list[int] | None:
        """1-based indices from the ``nilradical`` metadata key, if present."""
        raw = self.metadata.get("nilradical")
        if raw is None:
            return None
        return parse_index_list(raw)

    def to_text(self) -> str:
        return serialize(self.forms, self.metadata, letter=self.letter)


def parse_index_list(raw: str) -> list[int]:
    try:
        idx = [int(x) for x in re.split(r"[,\s]+", raw.strip()) if x]
    except ValueError:
        raise DslSyntaxError(f"bad index list {raw!r}") from None
    if not idx:
        raise DslSyntaxError("empty index list")
    return idx


class _Lexer:
    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = 0
        self.offset = offset

    def error(self, msg: str) -> DslSyntaxError:
        return DslSyntaxError(msg, position=self.pos + self.offset)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, s: str) -> bool:
        self.skip_ws()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.accept(s):
            found = self.peek() or "end of input"
            raise self.error(f"expected {s!r}, found {found!r}")

    def match(self, pattern: re.Pattern):
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m


_RATIONAL = re.compile(r"\d+(?:/\d+)?")
_SQRT = re.compile(r"sqrt\(\s*(\d+)\s*\)")
_LETTER_IDX = re.compile(r"[ef](\d+)")
_BRACKET_IDX = re.compile(r"\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]")


def _parse_term_basis(lx: _Lexer, n: int, degree: int | None) -> tuple[tuple[int, ...], int]:
    """Returns (0-based index tuple in given order, position)."""
    start = lx.pos
    m = lx.match(_LETTER_IDX)
    if m:
        digits = m.group(1)
        if n >= 10:
            lx.pos = start
            lx.skip_ws()
            raise lx.error(
                f"ambiguous index {m.group(0)!r}: use [i,j] notation in dimension {n} >= 10"
            )
        idx = tuple(int(ch) for ch in digits)
    else:
        m = lx.match(_BRACKET_IDX)
        if not m:
            raise lx.error("expected a basis form like e12, f12 or [1,2]")
        idx = tuple(int(x) for x in re.split(r"\s*,\s*", m.group(1)))
    if degree is not None and len(idx) != degree:
        lx.pos = start
        lx.skip_ws()
        raise lx.error(f"expected a {degree}-form term, got {len(idx)} indices")
    for i in idx:
        if not 1 <= i <= n:
            lx.pos = start
            lx.skip_ws()
            raise lx.error(f"index {i} out of range 1..{n}")
    if len(set(idx)) != len(idx):
        lx.pos = start
        lx.skip_ws()
        raise lx.error("repeated index in basis form")
    return tuple(i - 1 for i in idx), start


def _parse_coefficient(lx: _Lexer) -> Scalar | None:
    """Optional ``q*``, ``q*sqrt(d)*``, ``sqrt(d)*`` prefix; '*' is optional."""
    coeff: Scalar | None = None
    m = lx.match(_RATIONAL)
    if m:
        coeff = Fraction(m.group(0))
        lx.accept("*")
    m = lx.match(_SQRT)
    if m:
        root = sqrt(int(m.group(1)))
        coeff = root if coeff is None else coeff * root
        lx.accept("*")
    return coeff


def _parse_expr(lx: _Lexer, n: int, degree: int | None) -> KForm:
    terms: dict[tuple[int, ...], Scalar] = {}
    deg = degree
    first = True
    saw_zero = False
    while True:
        sgn = 1
        if lx.accept("+"):
            pass
        elif lx.accept("-"):
            sgn = -1
        elif not first:
            break
        save = lx.pos
        coeff = _parse_coefficient(lx)
        nxt = lx.peek()
        if coeff is not None and nxt in ("", ",", ")", "+", "-"):
            if coeff == 0 and first and sgn == 1:
                saw_zero = True
                first = False
                continue
            lx.pos = save
            lx.skip_ws()
            raise lx.error("constant term is not allowed in a differential")
        if coeff == 0:
            lx.pos = save
            lx.skip_ws()
            raise lx.error("zero coefficient on a basis form")
        key, _ = _parse_term_basis(lx, n, deg)
        deg = len(key)
        c = (coeff if coeff is not None else Fraction(1)) * sgn
        # reorder indices with the permutation sign
        f = KForm(n, deg, {key: c})
        for k2, v in f.terms.items():
            terms[k2] = terms.get(k2, Fraction(0)) + v
        first = False
    if saw_zero and terms:
        raise lx.error("'0' cannot be combined with other terms")
    if deg is None:
        deg = 2
    return KForm(n, deg, {k: v for k, v in terms.items() if v != 0})


def _split_header(text: str) -> tuple[dict[str, str], str, int]:
    """Strip comments, collect metadata; return (metadata, body, body offset)."""
    meta: dict[str, str] = {}
    lines = text.splitlines(keepends=True)
    pos = 0
    body_start = None
    cleaned = []
    for line in lines:
        raw = line
        if "#" in line:
            line = line[: line.index("#")] + ("\n" if raw.endswith("\n") else "")
        stripped = line.strip()
        if body_start is None:
            if not stripped:
                pos += len(raw)
                continue
            if stripped.startswith("("):
                body_start = pos
            else:
                m = re.match(r"^([A-Za-z_][\w\-]*)\s*:\s*(.*)$", stripped)
                if not m:
                    raise DslSyntaxError(f"bad metadata line {stripped!r}", position=pos)
                meta[m.group(1).lower()] = m.group(2).strip()
                pos += len(raw)
                continue
        cleaned.append(line.ljust(len(raw)))
    if body_start is None:
        raise DslSyntaxError("no structure equation list found", position=len(text))
    return meta, "".join(cleaned), body_start


def parse_document(text: str) -> DslDocument:
    meta, body, offset = _split_header(text)
    # dimension = number of top-level entries
    n = _count_entries(body, offset)
    lx = _Lexer(body, offset)
    lx.expect("(")
    forms = []
    for k in range(n):
        if k:
            lx.expect(",")
        f = _parse_expr(lx, n, 2)
        forms.append(f)
    lx.expect(")")
    if lx.peek():
        raise lx.error("unexpected text after the structure equations")
    m = _LETTER.search(body)
    return DslDocument(forms, meta, letter=m.group(1) if m else "e")


_LETTER = re.compile(r"(?<![A-Za-z_])([ef])\d")


def _count_entries(body: str, offset: int) -> int:
    depth = 0
    count = 1
    seen_open = False
    for ch in body:
        if ch in "([":
            depth += 1
            seen_open = True
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 1:
            count += 1
    if not seen_open:
        raise DslSyntaxError("missing '('", position=offset)
    return count


def parse_structure(text: str) -> LieAlgebra:
    """Parse and validate; a Jacobi failure is reported with the failing triple."""
    doc = parse_document(text)
    try:
        return doc.algebra(validate=True)
    except JacobiFailure as exc:
        raise JacobiFailure(f"structure equations violate Jacobi: {exc}", **exc.details) from None


def parse_form(text: str, n: int) -> KForm:
    """A single form such as ``-e123-2*e456`` or ``[1,2,3]`` in dimension n."""
    lx = _Lexer(text)
    f = _parse_expr(lx, n, None)
    if lx.peek():
        raise lx.error("unexpected trailing text")
    return f


# -- serialization ----------------------------------------------------------


def _mono(key: tuple[int, ...], n: int, letter: str) -> str:
    if n >= 10:
        return "[" + ",".join(str(i + 1) for i in key) + "]"
    return letter + "".join(str(i + 1) for i in key)


def _rational_term(c: Fraction, mono: str, tail: str = "") -> str:
    body = f"{tail}{mono}"
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def format_form(f: KForm, letter: str = "e") -> str:
    """Canonical text: sorted terms, surd coefficients split into two terms."""
    if not f.terms:
        return "0"
    parts = []
    for key in sorted(f.terms):
        c = f.terms[key]
        mono = _mono(key, f.n, letter)
        if isinstance(c, QuadSurd):
            if c.a != 0:
                parts.append(_rational_term(c.a, mono))
            parts.append(_rational_term(c.b, mono, f"sqrt({c.d})*"))
        else:
            parts.append(_rational_term(c, mono))
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def serialize(forms, metadata: dict | None = None, letter: str = "e") -> str:
    if isinstance(forms, LieAlgebra):
        forms = forms.differentials()
    lines = [f"{k}: {v}" for k, v in (metadata or {}).items()]
    lines.append("(" + ", ".join(format_form(f, letter) for f in forms) + ")")
    return "\n".join(lines) + "\n"
