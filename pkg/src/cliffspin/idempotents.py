"""Classification data and primitive idempotents of Cl(p,q)."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .algebra import (
    Multivector,
    Signature,
    blade_square,
    blades_commute,
    format_blade,
    grade_involution,
    left_regular_rank,
    parse_blade,
)


class RingType(enum.Enum):
    REAL = "R"
    COMPLEX = "C"
    QUATERNION = "H"
    DOUBLE_REAL = "R+R"
    DOUBLE_QUATERNION = "H+H"

    @property
    def base(self) -> "RingType":
        """The division ring of a single simple component."""
        if self is RingType.DOUBLE_REAL:
            return RingType.REAL
        if self is RingType.DOUBLE_QUATERNION:
            return RingType.QUATERNION
        return self

    @property
    def k_dim(self) -> int:
        return {RingType.REAL: 1, RingType.COMPLEX: 2, RingType.QUATERNION: 4}[self.base]


_RH_BASE = (0, 1, 2, 2, 3, 3, 3, 3)

_RING_BY_RESIDUE = {
    0: RingType.REAL,
    1: RingType.DOUBLE_REAL,
    2: RingType.REAL,
    3: RingType.COMPLEX,
    4: RingType.QUATERNION,
    5: RingType.DOUBLE_QUATERNION,
    6: RingType.QUATERNION,
    7: RingType.COMPLEX,
}


def radon_hurwitz(i: int) -> int:
    """Radon-Hurwitz number r_i, with r_{i+8} = r_i + 4 for every integer i."""
    return _RH_BASE[i % 8] + 4 * (i // 8)


@dataclass(frozen=True)
class AlgebraStructure:
    sig: Signature
    simple: bool
    k: int
    ring: RingType

    @property
    def matrix_dim(self) -> int:
        """Size N of the matrices over the division ring K."""
        return 1 << (self.k if self.simple else self.k - 1)

    @property
    def spinor_dim(self) -> int:
        """Number of spinor basis vectors m_i f, i.e. 2^(q - r_{q-p})."""
        return 1 << self.k

    def describe(self) -> str:
        N = self.matrix_dim
        base = {RingType.REAL: "R", RingType.COMPLEX: "C", RingType.QUATERNION: "H"}[self.ring.base]
        one = f"Mat({N},{base})"
        return one if self.simple else f"{one} + {one}"


def classify(sig: Signature) -> AlgebraStructure:
    p, q = sig.p, sig.q
    k = q - radon_hurwitz(q - p)
    simple = (p - q) % 4 != 1
    return AlgebraStructure(sig, simple, k, _RING_BY_RESIDUE[(p - q) % 8])


def _f2_independent(masks: list[int], new: int) -> bool:
    """True when ``new`` is not in the F2-span of ``masks``."""
    basis: list[int] = []
    for m in masks + [new]:
        x = m
        for b in basis:
            x = min(x, x ^ b)
        if x == 0:
            return False
        basis.append(x)
    return True


def find_commuting_set(sig: Signature) -> tuple[int, ...]:
    """First set of k commuting, F2-independent blades squaring to +1.

    Candidates are the non-scalar blades in monomial order; the search is a
    depth-first backtrack so the answer is deterministic.
    """
    k = classify(sig).k
    cands = [b for b in sig.blades[1:] if blade_square(b, sig) == 1]
    chosen: list[int] = []

    def extend(start: int) -> bool:
        if len(chosen) == k:
            return True
        for j in range(start, len(cands)):
            b = cands[j]
            if all(blades_commute(b, c) for c in chosen) and _f2_independent(chosen, b):
                chosen.append(b)
                if extend(j + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        raise RuntimeError(f"no commuting set of size {k} in {sig}")
    return tuple(chosen)


@dataclass(frozen=True)
class Idempotent:
    """f = prod_j (1 + s_j e_{t_j}) / 2 for commuting blades t_j squaring to +1."""

    sig: Signature
    factors: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.signs) != len(self.factors):
            raise ValueError("one sign per factor is required")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        for i, t in enumerate(self.factors):
            if t == 0 or t >> self.sig.n:
                raise ValueError(f"bad factor blade {t}")
            if blade_square(t, self.sig) != 1:
                raise ValueError(f"{format_blade(t)} does not square to +1")
            for u in self.factors[:i]:
                if not blades_commute(t, u):
                    raise ValueError(f"{format_blade(t)} and {format_blade(u)} anticommute")
            if not _f2_independent(list(self.factors[:i]), t):
                raise ValueError(f"{format_blade(t)} is dependent on earlier factors")

    @cached_property
    def value(self) -> Multivector:
        half = Fraction(1, 2)
        f = Multivector.scalar(self.sig, 1)
        for t, s in zip(self.factors, self.signs):
            f = f * Multivector(self.sig, {0: half, t: half * s})
        return f

    @property
    def k(self) -> int:
        return len(self.factors)

    def with_signs(self, signs: tuple[int, ...]) -> "Idempotent":
        return Idempotent(self.sig, self.factors, tuple(signs))

    def conjugated_by(self, g: int) -> "Idempotent":
        """e_g f e_g^{-1}: each factor sign flips when the factor anticommutes with e_g."""
        return self.with_signs(tuple(s if blades_commute(g, t) else -s for t, s in zip(self.factors, self.signs)))

    def family(self) -> list["Idempotent"]:
        """All 2^k sign choices for the same factors."""
        return [self.with_signs(s) for s in itertools.product((1, -1), repeat=self.k)]

    def format_factors(self) -> str:
        n = self.sig.n
        parts = []
        for t, s in zip(self.factors, self.signs):
            parts.append(("" if s > 0 else "-") + format_blade(t, n))
        return ",".join(parts)

    def __str__(self) -> str:
        n = self.sig.n
        body = "".join(f"(1{'+' if s > 0 else '-'}{format_blade(t, n)})" for t, s in zip(self.factors, self.signs))
        return f"1/{1 << self.k}{body}" if self.k else "1"


def primitive_idempotent(sig: Signature, factors: tuple[int, ...] | None = None,
                         signs: tuple[int, ...] | None = None) -> Idempotent:
    """Primitive idempotent from k factors (found automatically when omitted)."""
    k = classify(sig).k
    if factors is None:
        factors = find_commuting_set(sig)
    factors = tuple(factors)
    if len(factors) != k:
        raise ValueError(f"{sig} needs exactly {k} factors, got {len(factors)}")
    if signs is None:
        signs = (1,) * k
    return Idempotent(sig, factors, tuple(signs))


def parse_factor_list(text: str, sig: Signature) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parse ``"e1,-e23"`` into factor masks and signs."""
    factors, signs = [], []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        sign = 1
        if part[0] in "+-":
            sign = -1 if part[0] == "-" else 1
            part = part[1:]
        factors.append(parse_blade(part, sig))
        signs.append(sign)
    return tuple(factors), tuple(signs)


def is_idempotent(u: Multivector) -> bool:
    return u * u == u


def is_primitive(f: Multivector) -> bool:
    """Primitivity test via the rank of the left-regular matrix of f.

    A primitive idempotent generates a minimal left ideal, whose dimension
    is 2^(n-k) in both the simple and the semisimple case.
    """
    if not is_idempotent(f):
        raise ValueError("not an idempotent")
    if f.is_zero():
        return False
    sig = f.sig
    return left_regular_rank(f) == 1 << (sig.n - classify(sig).k)


def central_idempotents(sig: Signature) -> tuple[Multivector, Multivector] | None:
    """(J+, J-) = ((1 +- e_{1..n})/2) in the semisimple case, else None."""
    if classify(sig).simple:
        return None
    top = (1 << sig.n) - 1
    half = Fraction(1, 2)
    return Multivector(sig, {0: half, top: half}), Multivector(sig, {0: half, top: -half})


def hat(f: Multivector) -> Multivector:
    """Grade involution, used for the second simple component."""
    return grade_involution(f)
