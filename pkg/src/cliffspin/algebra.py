"""Exact arithmetic in the real Clifford algebra Cl(p,q).

Blades are stored as integer bit masks: bit ``i-1`` set means the generator
``e_i`` occurs.  Generators ``e_1..e_p`` square to +1 and ``e_{p+1}..e_{p+q}``
square to -1.  Coefficients are :class:`fractions.Fraction` throughout, so
every identity checked with this module is checked exactly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Signature:
    """Signature (p, q) of a nondegenerate real quadratic form."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"signature must be nonnegative, got ({self.p},{self.q})")
        if self.p + self.q > 62:
            raise ValueError("dimension too large for a bit-mask representation")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def neg_mask(self) -> int:
        """Mask of the generators that square to -1."""
        return ((1 << self.q) - 1) << self.p

    @cached_property
    def blades(self) -> tuple[int, ...]:
        return blade_order(self.n)

    @cached_property
    def blade_index(self) -> dict[int, int]:
        return {b: i for i, b in enumerate(self.blades)}

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


def all_signatures(max_dim: int, min_dim: int = 1) -> list[Signature]:
    return [Signature(p, n - p) for n in range(min_dim, max_dim + 1) for p in range(n + 1)]


# --- blades -----------------------------------------------------------------

def grade(mask: int) -> int:
    return mask.bit_count()


def indices(mask: int) -> tuple[int, ...]:
    """Generator indices (1-based, ascending) of a blade."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(idx: Iterable[int]) -> int:
    m = 0
    for i in idx:
        if i < 1:
            raise ValueError(f"generator index must be positive, got {i}")
        bit = 1 << (i - 1)
        if m & bit:
            raise ValueError(f"repeated generator e{i}")
        m |= bit
    return m


def blade_order(n: int) -> tuple[int, ...]:
    """All 2^n blades in graded-lex order: by grade, then by index tuple."""
    return tuple(sorted(range(1 << n), key=lambda m: (m.bit_count(), indices(m))))


def _swap_parity(a: int, b: int) -> int:
    # number of pairs (i in a, j in b) with i > j, i.e. transpositions
    # needed to bring e_A e_B into ascending order
    a >>= 1
    s = 0
    while a:
        s += (a & b).bit_count()
        a >>= 1
    return s & 1


def blade_mul(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Geometric product of two unit blades: returns (sign, mask)."""
    odd = _swap_parity(a, b) ^ ((a & b & sig.neg_mask).bit_count() & 1)
    return (-1 if odd else 1), a ^ b


def blade_square(a: int, sig: Signature) -> int:
    """e_A e_A as a sign."""
    g = a.bit_count()
    odd = ((g * (g - 1) // 2) ^ (a & sig.neg_mask).bit_count()) & 1
    return -1 if odd else 1


def blades_commute(a: int, b: int) -> bool:
    """e_A e_B = (-1)^(|A||B| - |A n B|) e_B e_A, independent of signature."""
    return (a.bit_count() * b.bit_count() - (a & b).bit_count()) % 2 == 0


def commutation_sign(a: int, b: int) -> int:
    return 1 if blades_commute(a, b) else -1


def format_blade(mask: int, n: int | None = None) -> str:
    if mask == 0:
        return "1"
    idx = indices(mask)
    wide = (n if n is not None else max(idx)) > 9
    if wide:
        return "e{" + ",".join(map(str, idx)) + "}"
    return "e" + "".join(map(str, idx))


_BLADE_RE = re.compile(r"e\{(\d+(?:\s*,\s*\d+)*)\}|e(\d+)|1(?![\d/])")


def parse_blade(text: str, sig: Signature | None = None) -> int:
    t = text.strip()
    m = _BLADE_RE.fullmatch(t)
    if not m:
        raise ParseError(f"not a blade: {text!r}", 0)
    if m.group(1) is not None:
        mask = mask_of(int(x) for x in m.group(1).split(","))
    elif m.group(2) is not None:
        mask = mask_of(int(c) for c in m.group(2))
    else:
        mask = 0
    if sig is not None and mask >> sig.n:
        raise ParseError(f"blade {text!r} outside {sig}", 0)
    return mask


class SignedBlade(NamedTuple):
    """An element +-e_A of the vee group."""

    sign: int
    mask: int

    def mul(self, other: "SignedBlade", sig: Signature) -> "SignedBlade":
        s, m = blade_mul(self.mask, other.mask, sig)
        return SignedBlade(self.sign * other.sign * s, m)

    def inverse(self, sig: Signature) -> "SignedBlade":
        # (e_A)^{-1} = e_A^2 * e_A since e_A^2 = +-1
        return SignedBlade(self.sign * blade_square(self.mask, sig), self.mask)

    def to_multivector(self, sig: Signature) -> "Multivector":
        return Multivector(sig, {self.mask: Fraction(self.sign)})

    def format(self, n: int | None = None) -> str:
        b = format_blade(self.mask, n)
        return b if self.sign > 0 else "-" + b


# --- multivectors -----------------------------------------------------------

class Multivector:
    """Element of Cl(p,q) as a sparse map blade -> Fraction.

    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: Signature, terms: Mapping[int, Scalar] | None = None):
        self.sig = sig
        clean: dict[int, Fraction] = {}
        if terms:
            top = 1 << sig.n
            for m, c in terms.items():
                if not 0 <= m < top:
                    raise ValueError(f"blade mask {m} outside {sig}")
                c = Fraction(c)
                if c:
                    clean[m] = c
        self._terms = clean

    @classmethod
    def _raw(cls, sig: Signature, terms: dict[int, Fraction]) -> "Multivector":
        obj = cls.__new__(cls)
        obj.sig = sig
        obj._terms = terms
        return obj

    @classmethod
    def scalar(cls, sig: Signature, c: Scalar = 1) -> "Multivector":
        return cls(sig, {0: c})

    @classmethod
    def blade(cls, sig: Signature, mask: int, c: Scalar = 1) -> "Multivector":
        return cls(sig, {mask: c})

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls._raw(sig, {})

    @classmethod
    def from_coefficients(cls, sig: Signature, coeffs: Iterable[Scalar]) -> "Multivector":
        """Build from a coefficient list in monomial order."""
        coeffs = list(coeffs)
        if len(coeffs) != sig.dim:
            raise ValueError(f"expected {sig.dim} coefficients, got {len(coeffs)}")
        return cls(sig, dict(zip(sig.blades, coeffs)))

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return self._terms

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Terms in monomial order."""
        idx = self.sig.blade_index
        return iter(sorted(self._terms.items(), key=lambda kv: idx[kv[0]]))

    def coefficient(self, mask: int) -> Fraction:
        return self._terms.get(mask, Fraction(0))

    def coefficients(self) -> list[Fraction]:
        return [self.coefficient(b) for b in self.sig.blades]

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self._terms)

    def scalar_part(self) -> Fraction:
        return self.coefficient(0)

    def grade_part(self, g: int) -> "Multivector":
        return Multivector._raw(self.sig, {m: c for m, c in self._terms.items() if m.bit_count() == g})

    def _check(self, other: "Multivector") -> None:
        if other.sig != self.sig:
            raise ValueError(f"signature mismatch: {self.sig} vs {other.sig}")

    def _coerce(self, other) -> "Multivector | None":
        if isinstance(other, Multivector):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Multivector.scalar(self.sig, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Multivector._raw(self.sig, out)

    __radd__ = __add__

    def __neg__(self) -> "Multivector":
        return Multivector._raw(self.sig, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Multivector.zero(self.sig)
            return Multivector._raw(self.sig, {m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check(other)
        sig = self.sig
        neg = sig.neg_mask
        out: dict[int, Fraction] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                odd = _swap_parity(a, b) ^ ((a & b & neg).bit_count() & 1)
                m = a ^ b
                v = out.get(m, 0) + (-ca * cb if odd else ca * cb)
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Multivector._raw(sig, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(self.sig, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.sig, frozenset(self._terms.items())))

    def _map_signs(self, sign_of) -> "Multivector":
        return Multivector._raw(self.sig, {m: (c if sign_of(m) > 0 else -c) for m, c in self._terms.items()})

    def grade_involution(self) -> "Multivector":
        return grade_involution(self)

    def reversion(self) -> "Multivector":
        return reversion(self)

    def conjugation(self) -> "Multivector":
        return conjugation(self)

    def transposition(self) -> "Multivector":
        return transposition(self)

    def format(self) -> str:
        return format_multivector(self)

    def __str__(self) -> str:
        return format_multivector(self)

    def __repr__(self) -> str:
        return f"Multivector({self.sig}, {format_multivector(self)!r})"


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_multivector(u: Multivector) -> str:
    """Canonical text: terms in monomial order, e.g. ``1/2 + 1/2*e13``."""
    parts: list[str] = []
    for m, c in u.items():
        neg = c < 0
        a = -c if neg else c
        if m == 0:
            body = _fmt_rational(a)
        elif a == 1:
            body = format_blade(m, u.sig.n)
        else:
            body = f"{_fmt_rational(a)}*{format_blade(m, u.sig.n)}"
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


# --- involutions ------------------------------------------------------------

def _grade_sign(g: int) -> int:
    return -1 if g & 1 else 1


def _reversion_sign(g: int) -> int:
    return -1 if (g * (g - 1) // 2) & 1 else 1


def _conjugation_sign(g: int) -> int:
    return -1 if (g * (g + 1) // 2) & 1 else 1


def grade_involution(u: Multivector) -> Multivector:
    return u._map_signs(lambda m: _grade_sign(m.bit_count()))


def reversion(u: Multivector) -> Multivector:
    return u._map_signs(lambda m: _reversion_sign(m.bit_count()))


def conjugation(u: Multivector) -> Multivector:
    return u._map_signs(lambda m: _conjugation_sign(m.bit_count()))


def transposition(u: Multivector) -> Multivector:
    """The anti-involution T sending each blade to its inverse."""
    sig = u.sig
    return u._map_signs(lambda m: blade_square(m, sig))


def blade_inverse(mask: int, sig: Signature) -> Multivector:
    return Multivector._raw(sig, {mask: Fraction(blade_square(mask, sig))})


# --- parsing ----------------------------------------------------------------

class ParseError(ValueError):
    """Malformed expression; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<blade>e\{[^}]*\}|e\d+)"
    r"|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<op>[+\-*])"
    r")"
)


def parse_multivector(text: str, sig: Signature) -> Multivector:
    """Parse ``term (('+'|'-') term)*`` with ``term := [rational ['*']] blade``.

    A bare rational is a scalar term and the blade ``1`` is also accepted.
    """
    toks: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos + len(text[pos:]) - len(text[pos:].lstrip()))
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    if not toks:
        raise ParseError("empty expression", 0)

    terms: dict[int, Fraction] = {}
    i = 0

    def add(mask: int, c: Fraction) -> None:
        v = terms.get(mask, 0) + c
        if v:
            terms[mask] = v
        else:
            terms.pop(mask, None)

    first = True
    while i < len(toks):
        sign = 1
        kind, val, at = toks[i]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-'", at)
        if i >= len(toks):
            raise ParseError("dangling operator", len(text))
        kind, val, at = toks[i]
        coef = Fraction(1)
        if kind == "num":
            num, _, den = val.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", at)
            coef = Fraction(int(num), int(den) if den else 1)
            i += 1
            star = i < len(toks) and toks[i][0] == "op" and toks[i][1] == "*"
            if star:
                i += 1
                if i >= len(toks) or toks[i][0] != "blade":
                    raise ParseError("expected blade after '*'",
                                     toks[i][2] if i < len(toks) else len(text))
            if i < len(toks) and toks[i][0] == "blade":
                mask = _parse_blade_token(toks[i][1], toks[i][2], sig)
                i += 1
            else:
                mask = 0
        elif kind == "blade":
            mask = _parse_blade_token(val, at, sig)
            i += 1
        else:
            raise ParseError(f"unexpected {val!r}", at)
        add(mask, sign * coef)
        first = False
    return Multivector._raw(sig, terms)


def _parse_blade_token(tok: str, at: int, sig: Signature) -> int:
    if tok.startswith("e{"):
        body = tok[2:-1]
        try:
            idx = [int(x) for x in body.split(",")]
        except ValueError:
            raise ParseError(f"bad blade {tok!r}", at) from None
    else:
        idx = [int(c) for c in tok[1:]]
    try:
        mask = mask_of(idx)
    except ValueError as exc:
        raise ParseError(str(exc), at) from None
    if mask >> sig.n:
        raise ParseError(f"blade {tok} outside {sig}", at)
    return mask


# --- matrices ---------------------------------------------------------------

class RationalMatrix:
    """Dense matrix of Fractions, rows stored as tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.rows[r][c]

    @classmethod
    def _raw(cls, rows: tuple[tuple[Fraction, ...], ...]) -> "RationalMatrix":
        obj = cls.__new__(cls)
        obj.rows = rows
        return obj

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix._raw(tuple(zip(*self.rows)))

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        cols = list(zip(*other.rows))
        return RationalMatrix(
            [sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols] for r in self.rows
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def rank(self) -> int:
        return sparse_rank({c: v for c, v in enumerate(r) if v} for r in self.rows)

    def __repr__(self) -> str:
        return f"RationalMatrix({[[str(x) for x in r] for r in self.rows]})"


def sparse_rank(rows: Iterable[Mapping[int, Fraction]]) -> int:
    """Rank of a matrix given as sparse rows, by exact elimination."""
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                rank += 1
                break
            factor = r[c] / p[c]
            for cc, pv in p.items():
                v = r.get(cc, 0) - factor * pv
                if v:
                    r[cc] = v
                else:
                    r.pop(cc, None)
    return rank


def left_regular_rows(u: Multivector) -> list[dict[int, Fraction]]:
    """Sparse rows of L_u in the monomial basis (row r, column c)."""
    sig = u.sig
    order = sig.blades
    pos = sig.blade_index
    rows: list[dict[int, Fraction]] = [dict() for _ in order]
    # L_u e_c = sum_a u_a e_a e_c, and e_a e_c lands on blade a^c
    for c_idx, c in enumerate(order):
        for a, ua in u.terms.items():
            s, r = blade_mul(a, c, sig)
            rows[pos[r]][c_idx] = ua if s > 0 else -ua
    return rows


def left_regular_matrix(u: Multivector) -> RationalMatrix:
    sig = u.sig
    pos = sig.blade_index
    zero = Fraction(0)
    rows = [[zero] * sig.dim for _ in range(sig.dim)]
    terms = [(a, ua, -ua) for a, ua in u.terms.items()]
    for c_idx, c in enumerate(sig.blades):
        for a, ua, neg in terms:
            s, r = blade_mul(a, c, sig)
            rows[pos[r]][c_idx] = ua if s > 0 else neg
    return RationalMatrix._raw(tuple(map(tuple, rows)))


def left_regular_rank(u: Multivector) -> int:
    return sparse_rank(left_regular_rows(u))
