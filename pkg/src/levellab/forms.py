"""Homogeneous forms over a prime field, with differentiation.

Forms live in a divided-power style polynomial ring k[y1..yr] on which the
dual ring acts by partial differentiation.  Coefficients are residues
modulo a prime p, kept as plain integers in [1, p-1]; zero coefficients
are never stored.  Monomials are exponent tuples, ordered by graded
reverse lexicographic order (grevlex), which fixes every printed and
serialized representation.

The default prime 2^31 - 1 keeps products inside 64-bit integers so the
elimination kernel can vectorize; any prime larger than the degrees in
play gives the same generic answers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from random import Random
from typing import Iterable, Mapping

from levellab.errors import ParseError

DEFAULT_PRIME = 2**31 - 1

Monomial = tuple[int, ...]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def validate_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def grevlex_key(mono: Monomial) -> tuple[int, ...]:
    """Sort key whose ascending order is descending grevlex."""
    return tuple(reversed(mono))


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, degree: int) -> tuple[Monomial, ...]:
    """All exponent tuples of the given total degree, in descending grevlex
    order.  The order is what makes printed forms and stored certificate
    payloads reproducible byte for byte."""
    if nvars <= 0:
        raise ValueError(f"need at least one variable, got {nvars}")
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    monos = []
    for bars in combinations(range(degree + nvars - 1), nvars - 1):
        cuts = (-1,) + bars + (degree + nvars - 1,)
        monos.append(tuple(cuts[i + 1] - cuts[i] - 1 for i in range(nvars)))
    monos.sort(key=grevlex_key)
    return tuple(monos)


@lru_cache(maxsize=None)
def monomial_positions(nvars: int, degree: int) -> Mapping[Monomial, int]:
    return {m: i for i, m in enumerate(monomials_of_degree(nvars, degree))}


@dataclass(frozen=True, eq=True)
class Form:
    """A homogeneous polynomial with coefficients in F_p.

    ``terms`` maps exponent tuples to residues in [1, p-1].  The degree is
    carried explicitly so the zero form of any degree is representable.
    """

    nvars: int
    degree: int
    p: int
    terms: dict

    def __post_init__(self):
        for mono, coeff in self.terms.items():
            if len(mono) != self.nvars:
                raise ValueError(f"monomial {mono} does not have {self.nvars} exponents")
            if sum(mono) != self.degree:
                raise ValueError(
                    f"monomial {mono} has degree {sum(mono)}, form declares {self.degree}"
                )
            if not 0 < coeff < self.p:
                raise ValueError(f"coefficient {coeff} out of range for p={self.p}")

    @classmethod
    def zero(cls, nvars: int, degree: int, p: int = DEFAULT_PRIME) -> "Form":
        return cls(nvars, degree, p, {})

    @classmethod
    def from_terms(
        cls, nvars: int, degree: int, items: Iterable[tuple[Monomial, int]], p: int = DEFAULT_PRIME
    ) -> "Form":
        acc: dict[Monomial, int] = {}
        for mono, coeff in items:
            c = (acc.get(mono, 0) + coeff) % p
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        return cls(nvars, degree, p, acc)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "Form"):
        if self.nvars != other.nvars or self.p != other.p:
            raise ValueError("forms live in different rings")

    def __add__(self, other: "Form") -> "Form":
        self._check_compatible(other)
        if self.degree != other.degree:
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        return Form.from_terms(
            self.nvars, self.degree, list(self.terms.items()) + list(other.terms.items()), self.p
        )

    def __sub__(self, other: "Form") -> "Form":
        return self + other.scaled(-1)

    def scaled(self, c: int) -> "Form":
        c %= self.p
        if c == 0:
            return Form.zero(self.nvars, self.degree, self.p)
        return Form(
            self.nvars, self.degree, self.p,
            {m: (v * c) % self.p for m, v in self.terms.items()},
        )

    def __mul__(self, other: "Form") -> "Form":
        self._check_compatible(other)
        items = []
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                items.append((tuple(a + b for a, b in zip(m1, m2)), c1 * c2))
        return Form.from_terms(self.nvars, self.degree + other.degree, items, self.p)

    def __pow__(self, exponent: int) -> "Form":
        if exponent < 0:
            raise ValueError("negative powers are not defined for forms")
        result = Form(self.nvars, 0, self.p, {(0,) * self.nvars: 1})
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        # square-and-multiply leaves the right degree even for zero forms
        return Form(result.nvars, self.degree * exponent, self.p, result.terms)

    def derivative(self, var: int) -> "Form":
        """Partial derivative with respect to y_{var+1} (0-based index)."""
        if not 0 <= var < self.nvars:
            raise ValueError(f"variable index {var} out of range")
        if self.degree == 0:
            return Form.zero(self.nvars, 0, self.p)
        items = []
        for mono, coeff in self.terms.items():
            if mono[var] == 0:
                continue
            lowered = list(mono)
            lowered[var] -= 1
            items.append((tuple(lowered), coeff * mono[var]))
        return Form.from_terms(self.nvars, self.degree - 1, items, self.p)

    def embedded(self, nvars: int) -> "Form":
        """The same form viewed in a ring with extra trailing variables."""
        if nvars < self.nvars:
            raise ValueError("cannot embed into fewer variables")
        pad = (0,) * (nvars - self.nvars)
        return Form(nvars, self.degree, self.p, {m + pad: c for m, c in self.terms.items()})

    def coefficient_vector(self) -> list[int]:
        order = monomial_positions(self.nvars, self.degree)
        vec = [0] * len(order)
        for mono, coeff in self.terms.items():
            vec[order[mono]] = coeff
        return vec

    def __str__(self) -> str:
        return format_form(self)

    def __repr__(self) -> str:
        return f"Form({self.nvars} vars, deg {self.degree}, {format_form(self)})"


def differentiate(form: Form, var: int) -> Form:
    """Module-level alias for :meth:`Form.derivative`."""
    return form.derivative(var)


def random_linear_form(nvars: int, rng: Random, p: int = DEFAULT_PRIME) -> Form:
    """A uniformly random nonzero linear form."""
    while True:
        coeffs = [rng.randrange(p) for _ in range(nvars)]
        if any(coeffs):
            break
    items = []
    for var, c in enumerate(coeffs):
        if c:
            mono = tuple(1 if k == var else 0 for k in range(nvars))
            items.append((mono, c))
    return Form.from_terms(nvars, 1, items, p)


def random_form(nvars: int, degree: int, rng: Random, p: int = DEFAULT_PRIME) -> Form:
    """A dense random form: every monomial gets a uniform residue."""
    while True:
        items = [(m, rng.randrange(p)) for m in monomials_of_degree(nvars, degree)]
        form = Form.from_terms(nvars, degree, [(m, c) for m, c in items if c], p)
        if not form.is_zero:
            return form


# ------------------------------------------------------------------ text


def format_monomial(mono: Monomial) -> str:
    parts = []
    for var, exp in enumerate(mono):
        if exp == 0:
            continue
        parts.append(f"y{var + 1}" if exp == 1 else f"y{var + 1}^{exp}")
    return "*".join(parts)


def format_form(form: Form) -> str:
    """Canonical text: terms in descending grevlex, coefficients as plain
    residues, unit coefficients omitted.  ``parse_form`` inverts this."""
    if form.is_zero:
        return "0"
    parts = []
    for mono in sorted(form.terms, key=grevlex_key):
        coeff = form.terms[mono]
        body = format_monomial(mono)
        if not body:
            parts.append(str(coeff))
        elif coeff == 1:
            parts.append(body)
        else:
            parts.append(f"{coeff}*{body}")
    return " + ".join(parts)


_TOKEN = re.compile(r"(?:(?P<num>\d+)|(?P<var>y(?P<idx>\d+)(?:\^(?P<exp>\d+))?)|(?P<op>[+\-*]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", position=pos)
        if match.group("num") is not None:
            out.append(("num", int(match.group("num")), pos))
        elif match.group("var") is not None:
            out.append(("var", (int(match.group("idx")), int(match.group("exp") or 1)), pos))
        else:
            out.append((match.group("op"), None, pos))
        pos = match.end()
    return out


def parse_form(
    text: str, nvars: int, p: int = DEFAULT_PRIME, expected_degree: int | None = None
) -> Form:
    """Parse one form from text like ``y1^4 + 3*y2^3*y3``.

    Terms are separated by + or -, factors inside a term by *.  A bare
    integer is a constant term.  Homogeneity is enforced: all terms must
    share one degree (the zero constant 0 is accepted for any degree).
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty form text", position=0)
    items: list[tuple[Monomial, int]] = []
    degree: int | None = None
    i = 0
    sign = 1
    if tokens[0][0] in "+-":
        sign = -1 if tokens[0][0] == "-" else 1
        i = 1
    while i < len(tokens):
        kind, value, pos = tokens[i]
        coeff = 1
        exps = [0] * nvars
        saw_factor = False
        if kind == "num":
            coeff = value
            i += 1
            saw_factor = True
            if i < len(tokens) and tokens[i][0] == "var":
                raise ParseError("missing '*' between coefficient and variable", position=tokens[i][2])
            if i < len(tokens) and tokens[i][0] == "*":
                i += 1
                kind = tokens[i][0] if i < len(tokens) else None
                if kind != "var":
                    raise ParseError("expected a variable after '*'", position=tokens[i - 1][2])
        while i < len(tokens) and tokens[i][0] == "var":
            idx, exp = tokens[i][1]
            if not 1 <= idx <= nvars:
                raise ParseError(f"variable y{idx} out of range 1..{nvars}", position=tokens[i][2])
            exps[idx - 1] += exp
            saw_factor = True
            i += 1
            if i < len(tokens) and tokens[i][0] == "var":
                raise ParseError("missing '*' between factors", position=tokens[i][2])
            if i < len(tokens) and tokens[i][0] == "*":
                star_pos = tokens[i][2]
                i += 1
                if i >= len(tokens) or tokens[i][0] != "var":
                    raise ParseError("expected a variable after '*'", position=star_pos)
        if not saw_factor:
            raise ParseError("expected a term", position=pos)
        term_degree = sum(exps)
        if coeff % p != 0:
            if degree is None:
                degree = term_degree
            elif degree != term_degree:
                raise ParseError(
                    f"mixed degrees {degree} and {term_degree} in one form", position=pos
                )
        items.append((tuple(exps), sign * coeff))
        if i < len(tokens):
            kind = tokens[i][0]
            if kind not in "+-":
                raise ParseError("expected '+' or '-' between terms", position=tokens[i][2])
            sign = -1 if kind == "-" else 1
            i += 1
            if i >= len(tokens):
                raise ParseError("dangling sign at end of form", position=tokens[i - 1][2])
    if degree is None:
        degree = expected_degree if expected_degree is not None else 0
    if expected_degree is not None and degree != expected_degree:
        raise ParseError(f"form has degree {degree}, expected {expected_degree}", position=0)
    return Form.from_terms(nvars, degree, [(m, c) for m, c in items], p)
