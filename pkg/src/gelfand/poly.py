"""Sparse exact multivariate polynomials.

Terms are kept in descending graded-lexicographic order with no zero
coefficients, so the representation is canonical: two polynomials are
equal exactly when their term tuples are equal, and printing followed
by parsing is a bit-exact round trip.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    ArityMismatch,
    MixedFields,
    NotMonic,
    ParseError,
    ZeroPolynomial,
)
from .field_core import (
    FieldDescriptor,
    FieldElement,
    format_element,
    parse_element,
)

Monomial = tuple  # tuple of non-negative integer exponents


def _grlex_key(mono):
    # descending total degree, then descending lexicographic
    return (-sum(mono), tuple(-e for e in mono))


@dataclass(frozen=True)
class MultiPoly:
    """A sparse polynomial over one field, with fixed arity."""

    field: FieldDescriptor
    arity: int
    terms: tuple  # ((monomial, coefficient), ...) in canonical order

    @classmethod
    def from_dict(cls, field, arity, coeffs):
        """Build from a {monomial: FieldElement} mapping, dropping zeros."""
        items = [(tuple(m), c) for m, c in coeffs.items() if not c.is_zero]
        for m, _ in items:
            if len(m) != arity or any(e < 0 for e in m):
                raise ArityMismatch(f"monomial {m} does not fit arity {arity}")
        items.sort(key=lambda mc: _grlex_key(mc[0]))
        return cls(field, arity, tuple(items))

    @classmethod
    def zero(cls, field, arity):
        return cls(field, arity, ())

    @classmethod
    def constant(cls, field, arity, c):
        return cls.from_dict(field, arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, field, arity, index):
        """The coordinate polynomial x_{index+1}."""
        if not 0 <= index < arity:
            raise ArityMismatch(f"variable index {index} out of range")
        mono = tuple(1 if i == index else 0 for i in range(arity))
        return cls.from_dict(field, arity, {mono: field.one()})

    @property
    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        """Max total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return sum(self.terms[0][0])

    def coefficient(self, mono):
        for m, c in self.terms:
            if m == tuple(mono):
                return c
        return self.field.zero()

    def constant_term(self):
        return self.coefficient((0,) * self.arity)

    def is_homogeneous(self):
        if not self.terms:
            return True
        d = self.degree
        return all(sum(m) == d for m, _ in self.terms)

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if other.field != self.field:
            raise MixedFields(f"{self.field} vs {other.field}")
        if other.arity != self.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    def __add__(self, other):
        self._check(other)
        acc = {m: c for m, c in self.terms}
        for m, c in other.terms:
            acc[m] = acc[m] + c if m in acc else c
        return MultiPoly.from_dict(self.field, self.arity, acc)

    def __neg__(self):
        return MultiPoly(self.field, self.arity,
                         tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"{self.field} vs {other.field}")
            return MultiPoly.from_dict(
                self.field, self.arity,
                {m: c * other for m, c in self.terms})
        self._check(other)
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                acc[m] = acc[m] + c if m in acc else c
        return MultiPoly.from_dict(self.field, self.arity, acc)

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self * other
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(self.field, self.arity, self.field.one())
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, point):
        """Exact evaluation at a tuple of field elements."""
        point = tuple(point)
        if len(point) != self.arity:
            raise ArityMismatch(
                f"point has {len(point)} coordinates, arity is {self.arity}")
        for x in point:
            if x.field != self.field:
                raise MixedFields(f"{self.field} vs {x.field}")
        acc = self.field.zero()
        for m, c in self.terms:
            term = c
            for x, e in zip(point, m):
                if e:
                    term = term * x ** e
            acc = acc + term
        return acc

    def extend_arity(self, new_arity):
        """Reinterpret in more variables; the new trailing ones are unused."""
        if new_arity < self.arity:
            raise ArityMismatch("cannot shrink arity")
        pad = (0,) * (new_arity - self.arity)
        return MultiPoly(self.field, new_arity,
                         tuple((m + pad, c) for m, c in self.terms))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r} over {self.field})"


def univariate(field, coeffs):
    """Univariate polynomial from coefficients, low degree first.

    Integer coefficients are lifted into the field.
    """
    acc = {}
    for i, c in enumerate(coeffs):
        if isinstance(c, int):
            c = field.from_int(c)
        if not c.is_zero:
            acc[(i,)] = c
    return MultiPoly.from_dict(field, 1, acc)


def homogenize2(f: MultiPoly) -> MultiPoly:
    """y^m * f(x/y) for monic univariate f of degree m >= 1."""
    if f.arity != 1:
        raise ArityMismatch("homogenization takes a univariate polynomial")
    if f.is_zero:
        raise ZeroPolynomial("cannot homogenize the zero polynomial")
    m = f.degree
    if m < 1:
        raise ZeroPolynomial("degree must be at least 1")
    if not (f.coefficient((m,)) - f.field.one()).is_zero:
        raise NotMonic(f"leading coefficient is {f.coefficient((m,))}")
    return MultiPoly.from_dict(
        f.field, 2, {(e[0], m - e[0]): c for e, c in f.terms})


def compose_last(g2: MultiPoly, h: MultiPoly) -> MultiPoly:
    """g2(h(x_1..x_n), x_{n+1}) expanded to canonical form."""
    if g2.arity != 2:
        raise ArityMismatch("outer polynomial must be bivariate")
    if g2.field != h.field:
        raise MixedFields(f"{g2.field} vs {h.field}")
    n = h.arity
    field = h.field
    h_ext = h.extend_arity(n + 1)
    last = MultiPoly.variable(field, n + 1, n)
    h_pows = {0: MultiPoly.constant(field, n + 1, field.one())}
    last_pows = {0: h_pows[0]}
    result = MultiPoly.zero(field, n + 1)
    for (i, j), c in g2.terms:
        if i not in h_pows:
            h_pows[i] = h_ext ** i
        if j not in last_pows:
            last_pows[j] = last ** j
        result = result + h_pows[i] * last_pows[j] * c
    return result


# ---------------------------------------------------------------------------
# text form


_ATOMIC_COEFF = re.compile(r"^\d+(/\d+)?$")


def format_poly(f: MultiPoly) -> str:
    if f.is_zero:
        return "0"
    parts = []
    for mono, c in f.terms:
        vars_txt = "*".join(
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
            for i, e in enumerate(mono) if e)
        c_txt = format_element(c)
        if not _ATOMIC_COEFF.match(c_txt):
            c_txt = f"({c_txt})"
        if not vars_txt:
            parts.append(c_txt)
        elif c_txt == "1":
            parts.append(vars_txt)
        else:
            parts.append(f"{c_txt}*{vars_txt}")
    return " + ".join(parts)


_VAR_RE = re.compile(r"^x(\d*)(?:\^(\d+))?$")


def _split_terms(text):
    """Split on top-level '+' and '-'; a minus is kept with its term."""
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(text, i, "balanced parentheses")
        elif depth == 0 and ch in "+-" and i > start:
            terms.append(text[start:i])
            start = i + 1 if ch == "+" else i
    if depth != 0:
        raise ParseError(text, len(text), "')'")
    terms.append(text[start:])
    return [t for t in terms if t]


def _parse_term(field, term, full_text):
    negate = False
    if term.startswith("-"):
        negate = True
        term = term[1:]
        if not term:
            raise ParseError(full_text, 0, "a term after '-'")
    coeff = field.one()
    pos = 0
    if term.startswith("("):
        depth, end = 0, -1
        for i, ch in enumerate(term):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    end = i
                    break
        if end < 0:
            raise ParseError(full_text, 0, "')'")
        coeff = parse_element(field, term[1:end])
        pos = end + 1
        if pos < len(term) and term[pos] == "*":
            pos += 1
    elif term[0] != "x":
        m = re.match(r"\d+(?:/\d+)?", term)
        if not m:
            raise ParseError(full_text, 0, "a coefficient or variable")
        coeff = parse_element(field, m.group(0))
        pos = m.end()
        if pos < len(term) and term[pos] == "*":
            pos += 1
    exps = {}
    if pos < len(term):
        for piece in term[pos:].split("*"):
            vm = _VAR_RE.match(piece)
            if not vm:
                raise ParseError(full_text, 0,
                                 f"a variable like x1 or x2^3 (got {piece!r})")
            idx = int(vm.group(1)) if vm.group(1) else 1
            if idx < 1:
                raise ParseError(full_text, 0, "variable indices start at 1")
            e = int(vm.group(2)) if vm.group(2) else 1
            exps[idx - 1] = exps.get(idx - 1, 0) + e
    if negate:
        coeff = -coeff
    return coeff, exps


def parse_poly(field, text, arity=None) -> MultiPoly:
    """Parse the polynomial text form, e.g. 'x1^2 + x1*x2 + x2^2'.

    A bare 'x' is accepted as an alias for 'x1'. The arity is inferred
    from the largest variable index unless given explicitly.
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ParseError(text, 0, "a polynomial")
    parsed = [_parse_term(field, t, text) for t in _split_terms(compact)]
    max_idx = max((max(e) + 1 for _, e in parsed if e), default=1)
    if arity is None:
        arity = max_idx
    elif max_idx > arity:
        raise ParseError(text, 0, f"variables within arity {arity}")
    acc = {}
    for coeff, exps in parsed:
        mono = tuple(exps.get(i, 0) for i in range(arity))
        acc[mono] = acc[mono] + coeff if mono in acc else coeff
    return MultiPoly.from_dict(field, arity, acc)
