"""Exact Laurent-polynomial arithmetic in q, s, t over arbitrary-precision ints.

Everything downstream computes in the ring Z[q^{±1}, s^{±1}]; the variable t
is adjoined transiently for local-system bookkeeping and eliminated by the
``set_t`` specialization. Polynomials are immutable, hashable, and always kept
in canonical form (no stored zero coefficients). The canonical text rendering
orders terms lexicographically descending on the exponent vector
(e_q, e_s, e_t) and round-trips through :meth:`LaurentPoly.parse`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

Key = tuple[int, int, int]  # (e_q, e_s, e_t)

_FACTOR_RE = re.compile(r"^(?:(-?\d+)|([qst])(?:\^(-?\d+))?)$")

# sanity cap for exact_div: an exact quotient never needs this many steps
_DIV_STEP_CAP = 100_000


class LaurentPoly:
    """Multivariate Laurent polynomial with integer coefficients.

    Terms are stored as a map from exponent vectors (e_q, e_s, e_t) to
    nonzero integer coefficients, so equal polynomials have identical term
    maps. Exponents are plain Python ints.
    """

    __slots__ = ("_terms", "_key")

    def __init__(self, terms: dict[Key, int] | None = None):
        clean: dict[Key, int] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[key] = coeff
        self._terms = clean
        self._key: tuple | None = None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0, 0): 1})

    @classmethod
    def integer(cls, value: int) -> "LaurentPoly":
        return cls({(0, 0, 0): value})

    @classmethod
    def monomial(cls, coeff: int, e_q: int = 0, e_s: int = 0, e_t: int = 0) -> "LaurentPoly":
        return cls({(e_q, e_s, e_t): coeff})

    @classmethod
    def q_power(cls, exponent: int) -> "LaurentPoly":
        return cls({(exponent, 0, 0): 1})

    @classmethod
    def s_power(cls, exponent: int) -> "LaurentPoly":
        return cls({(0, exponent, 0): 1})

    @classmethod
    def t_power(cls, exponent: int) -> "LaurentPoly":
        return cls({(0, 0, exponent): 1})

    # ------------------------------------------------------------------
    # structure

    def items(self):
        """Terms as (exponent-vector, coefficient) pairs, unordered."""
        return self._terms.items()

    def sorted_items(self):
        """Terms in the canonical descending lexicographic order."""
        return [(k, self._terms[k]) for k in sorted(self._terms, reverse=True)]

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def coefficient(self, key: Key) -> int:
        return self._terms.get(key, 0)

    def involves(self, variable: str) -> bool:
        slot = {"q": 0, "s": 1, "t": 2}[variable]
        return any(key[slot] for key in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True iff the polynomial is a unit of the ring, i.e. ±(monomial)."""
        if len(self._terms) != 1:
            return False
        (coeff,) = self._terms.values()
        return coeff in (1, -1)

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ArithmeticError(f"not a unit: {self}")
        ((key, coeff),) = self._terms.items()
        return LaurentPoly({(-key[0], -key[1], -key[2]): coeff})

    def as_int(self) -> int:
        """The value of a constant polynomial; raises if any variable remains."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and (0, 0, 0) in self._terms:
            return self._terms[(0, 0, 0)]
        raise ArithmeticError(f"not a constant polynomial: {self}")

    # ------------------------------------------------------------------
    # arithmetic

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            value = terms.get(key, 0) + coeff
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = terms
        result._key = None
        return result

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            value = terms.get(key, 0) - coeff
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = terms
        result._key = None
        return result

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly()
        # multiply the shorter polynomial into the longer one
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict[Key, int] = {}
        for (q1, s1, t1), c1 in a.items():
            for (q2, s2, t2), c2 in b.items():
                key = (q1 + q2, s1 + s2, t1 + t2)
                value = terms.get(key, 0) + c1 * c2
                if value:
                    terms[key] = value
                else:
                    del terms[key]
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = terms
        result._key = None
        return result

    def scale(self, factor: int) -> "LaurentPoly":
        if factor == 0:
            return LaurentPoly()
        return LaurentPoly({k: c * factor for k, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            return self.unit_inverse() ** (-exponent)
        result = LaurentPoly.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; raises ArithmeticError if not exact.

        Greedy elimination of the lex-leading term. For an exact quotient this
        terminates in one step per quotient term.
        """
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly()
        rem = dict(self._terms)
        lead_d = max(other._terms)
        coeff_d = other._terms[lead_d]
        quotient: dict[Key, int] = {}
        steps = 0
        while rem:
            steps += 1
            if steps > _DIV_STEP_CAP:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            lead_r = max(rem)
            coeff_r = rem[lead_r]
            if coeff_r % coeff_d:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            qkey = (lead_r[0] - lead_d[0], lead_r[1] - lead_d[1], lead_r[2] - lead_d[2])
            qco = coeff_r // coeff_d
            quotient[qkey] = quotient.get(qkey, 0) + qco
            for key2, coeff2 in other._terms.items():
                key = (qkey[0] + key2[0], qkey[1] + key2[1], qkey[2] + key2[2])
                value = rem.get(key, 0) - qco * coeff2
                if value:
                    rem[key] = value
                else:
                    rem.pop(key, None)
        return LaurentPoly(quotient)

    def substitute_q_inverse(self) -> "LaurentPoly":
        """The image under q -> q^{-1} (s and t untouched)."""
        return LaurentPoly({(-eq, es, et): c for (eq, es, et), c in self._terms.items()})

    # ------------------------------------------------------------------
    # equality / hashing

    def _sort_key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted(self._terms.items()))
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._sort_key())

    # ------------------------------------------------------------------
    # text form

    def render(self) -> str:
        """Canonical text: descending lex order on (e_q, e_s, e_t)."""
        if not self._terms:
            return "0"
        pieces = []
        for key, coeff in self.sorted_items():
            mono = _monomial_str(key)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the canonical rendering back into a polynomial."""
        src = text.strip()
        if not src:
            raise ValueError("empty polynomial text")
        if src == "0":
            return cls.zero()
        terms: dict[Key, int] = {}
        for chunk in src.replace(" - ", " + -").split(" + "):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError(f"empty term in {text!r}")
            coeff = 1
            if chunk.startswith("-"):
                coeff = -1
                chunk = chunk[1:].strip()
            elif chunk.startswith("+"):
                chunk = chunk[1:].strip()
            exps = [0, 0, 0]
            for factor in chunk.split("*"):
                match = _FACTOR_RE.match(factor.strip())
                if match is None:
                    raise ValueError(f"bad factor {factor!r} in term {chunk!r}")
                if match.group(1) is not None:
                    coeff *= int(match.group(1))
                else:
                    slot = {"q": 0, "s": 1, "t": 2}[match.group(2)]
                    exps[slot] += int(match.group(3)) if match.group(3) else 1
            key = (exps[0], exps[1], exps[2])
            terms[key] = terms.get(key, 0) + coeff
        return cls(terms)


def _monomial_str(key: Key) -> str:
    e_q, e_s, e_t = key
    parts = []
    for name, e in (("s", e_s), ("t", e_t), ("q", e_q)):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


# ----------------------------------------------------------------------
# specializations


@dataclass(frozen=True)
class Specialization:
    """A ring morphism between coefficient rings.

    kind "aug" sends s -> q^l (the color-l specialization), "set_t" sends
    t -> -q^{-2}, "classical" sends q -> 1. Specializations compose as plain
    functions: apply one, then the next.
    """

    kind: str
    l: int | None = None

    def apply(self, poly: LaurentPoly) -> LaurentPoly:
        if self.kind == "aug":
            terms: dict[Key, int] = {}
            for (e_q, e_s, e_t), coeff in poly.items():
                key = (e_q + self.l * e_s, 0, e_t)
                value = terms.get(key, 0) + coeff
                if value:
                    terms[key] = value
                else:
                    del terms[key]
            return LaurentPoly(terms)
        if self.kind == "set_t":
            terms = {}
            for (e_q, e_s, e_t), coeff in poly.items():
                key = (e_q - 2 * e_t, e_s, 0)
                signed = coeff if e_t % 2 == 0 else -coeff
                value = terms.get(key, 0) + signed
                if value:
                    terms[key] = value
                else:
                    del terms[key]
            return LaurentPoly(terms)
        if self.kind == "classical":
            if poly.involves("t"):
                raise ValueError("classical specialization requires a t-free polynomial")
            terms = {}
            for (e_q, e_s, e_t), coeff in poly.items():
                key = (0, e_s, 0)
                value = terms.get(key, 0) + coeff
                if value:
                    terms[key] = value
                else:
                    del terms[key]
            return LaurentPoly(terms)
        raise ValueError(f"unknown specialization kind {self.kind!r}")


def aug(l: int) -> Specialization:
    """The morphism s -> q^l linking the generic ring to color N = l+1."""
    if l < 0:
        raise ValueError("aug requires a nonnegative parameter")
    return Specialization("aug", l)


SET_T = Specialization("set_t")
CLASSICAL = Specialization("classical")


def specialize(poly: LaurentPoly, morphism: Specialization) -> LaurentPoly:
    """Image of ``poly`` under the given ring morphism, canonicalized."""
    return morphism.apply(poly)


# ----------------------------------------------------------------------
# quantum combinatorics


def quantum_int(i: int) -> LaurentPoly:
    """The balanced quantum integer q^{i-1} + q^{i-3} + ... + q^{1-i}.

    By convention the empty sum at i = 0 is the zero polynomial; negative i
    is rejected. Division by q - q^{-1} never occurs.
    """
    if i < 0:
        raise ValueError("quantum_int requires a nonnegative argument")
    return LaurentPoly({(i - 1 - 2 * k, 0, 0): 1 for k in range(i)})


def quantum_factorial(k: int) -> LaurentPoly:
    """Product of quantum_int(1..k); the empty product at k = 0 is 1."""
    if k < 0:
        raise ValueError("quantum_factorial requires a nonnegative argument")
    result = ONE
    for i in range(1, k + 1):
        result = result * quantum_int(i)
    return result


# The only mutable ring-level state. Polynomials are immutable, so a racing
# duplicate insert is benign; CPython dict operations keep this safe to share
# across the per-degree workers.
_QBIN_CACHE: dict[tuple[int, int], LaurentPoly] = {}


def quantum_binomial(k: int, l: int) -> LaurentPoly:
    """Balanced Gaussian binomial, by the q-Pascal recurrence (never division).

    Satisfies quantum_binomial(k, l) * [l]! * [k-l]! = [k]! and the symmetry
    l <-> k - l.
    """
    if l < 0 or k < 0 or l > k:
        raise ValueError(f"quantum_binomial requires 0 <= l <= k, got ({k}, {l})")
    if l == 0 or l == k:
        return ONE
    key = (k, l)
    cached = _QBIN_CACHE.get(key)
    if cached is None:
        # [k l] = q^{-(k-l)} [k-1 l-1] + q^{l} [k-1 l]
        cached = quantum_binomial(k - 1, l - 1) * LaurentPoly.q_power(l - k) + (
            quantum_binomial(k - 1, l) * LaurentPoly.q_power(l)
        )
        _QBIN_CACHE[key] = cached
    return cached
