"""K-valued inner products on a spinor ideal S = Cl f.

Three forms are compared: the transposition product T(psi) phi, and the
forms s reversion(psi) phi and s conjugation(psi) phi for a suitable blade s
that moves the values into K.
"""
from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Callable

from .algebra import (
    Multivector,
    Signature,
    blade_square,
    conjugation,
    reversion,
    transposition,
)
from .spinor import KBasis, KElement, SpinorBasis, decompose_spinor, k_conj, k_mul

Involution = Callable[[Multivector], Multivector]

INVOLUTIONS: dict[str, Involution] = {
    "T": transposition,
    "+": reversion,
    "-": conjugation,
}


def in_K(x: Multivector, f: Multivector) -> bool:
    """x lies in f Cl f exactly when x - f x f vanishes."""
    return (x - f * x * f).is_zero()


def to_K(x: Multivector, S: SpinorBasis) -> KElement:
    if not in_K(x, S.f.value):
        raise ValueError("value does not lie in K = f Cl f")
    return S.K.coordinates(x)


def t_inner(psi: Multivector, phi: Multivector, S: SpinorBasis) -> KElement:
    """T(psi) phi, an element of K."""
    return to_K(transposition(psi) * phi, S)


def t_inner_coordinates(psi: Multivector, phi: Multivector, S: SpinorBasis) -> KElement:
    """sum_i conj(lambda_i) mu_i from the spinor coordinates of psi and phi."""
    lam = decompose_spinor(psi, S)
    mu = decompose_spinor(phi, S)
    acc = S.K.zero()
    for a, b in zip(lam, mu):
        acc = acc + k_mul(k_conj(a), b)
    return acc


def find_witness(S: SpinorBasis, kind: str) -> int:
    """Smallest blade s (monomial order) with s inv(psi) phi in K for all basis spinors.

    ``kind`` is ``"+"`` for reversion or ``"-"`` for Clifford conjugation.
    Raises LookupError if no blade works.
    """
    inv = INVOLUTIONS[kind]
    fv = S.f.value
    sig = S.sig
    basis = [S.elements[i] * kb.as_multivector() for i in range(S.N) for kb in _k_units(S)]
    pairs = [inv(a) * b for a in basis for b in basis]
    for s in sig.blades:
        sv = Multivector.blade(sig, s)
        if all(in_K(sv * x, fv) for x in pairs):
            return s
    raise LookupError(f"no blade witness for beta{kind} in {sig}")


def _k_units(S: SpinorBasis) -> list[KElement]:
    return [S.K.unit(a) for a in range(S.K.dim)]


def beta(psi: Multivector, phi: Multivector, S: SpinorBasis, kind: str = "+",
         witness: int | None = None) -> KElement:
    """s inv(psi) phi with inv = reversion ("+") or conjugation ("-")."""
    if witness is None:
        witness = find_witness(S, kind)
    x = Multivector.blade(S.sig, witness) * INVOLUTIONS[kind](psi) * phi
    return to_K(x, S)


def beta_plus(psi: Multivector, phi: Multivector, S: SpinorBasis, witness: int | None = None) -> KElement:
    return beta(psi, phi, S, "+", witness)


def beta_minus(psi: Multivector, phi: Multivector, S: SpinorBasis, witness: int | None = None) -> KElement:
    return beta(psi, phi, S, "-", witness)


def form_tensor(S: SpinorBasis, form: Callable[[Multivector, Multivector], KElement]
                ) -> dict[tuple[tuple[int, int], tuple[int, int]], KElement]:
    """Values of a real-bilinear form on the real basis m_i kappa_a f.

    Keys are ((i, a), (j, b)); zero values are omitted.  Two forms agree
    exactly when their tensors agree.
    """
    units = _k_units(S)
    basis = {(i, a): S.elements[i] * units[a].as_multivector()
             for i in range(S.N) for a in range(S.K.dim)}
    out = {}
    for ka, x in basis.items():
        for kb, y in basis.items():
            v = form(x, y)
            if not v.is_zero():
                out[(ka, kb)] = v
    return out


def pure_spinor(S: SpinorBasis, witness: int) -> Multivector:
    """s f for a witness blade s."""
    return Multivector.blade(S.sig, witness) * S.f.value


# --- the group G^eps ----------------------------------------------------------------

def rational_rotor(sig: Signature, mask: int, t: Fraction) -> Multivector:
    """c + s e_A with e_A^2 = -1 and (c, s) a rational point on the unit circle.

    T(c + s e_A) = c - s e_A, so the product with its transpose is c^2 + s^2 = 1.
    """
    if blade_square(mask, sig) != -1:
        raise ValueError("rotor blade must square to -1")
    d = 1 + t * t
    return Multivector(sig, {0: (1 - t * t) / d, mask: 2 * t / d})


def sample_g_eps(sig: Signature, rng: random.Random, factors: int = 3) -> Multivector:
    """Random element of G^eps = {g : T(g) g = 1}: product of signed blades and rotors."""
    g = Multivector.scalar(sig, 1)
    blades = sig.blades
    neg = [b for b in blades if blade_square(b, sig) == -1]
    for _ in range(factors):
        if neg and rng.random() < 0.6:
            t = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            g = g * rational_rotor(sig, rng.choice(neg), t)
        else:
            g = g * Multivector.blade(sig, rng.choice(blades), rng.choice((1, -1)))
    return g


def in_g_eps(g: Multivector) -> bool:
    return transposition(g) * g == Multivector.scalar(g.sig, 1)


# --- printed forms ----------------------------------------------------------------

FormTensor = dict[tuple[tuple[int, int], tuple[int, int]], KElement]

_GROUP_RE = re.compile(r"\(([^()]*)\)\s*(f|e\d+|e\{[\d,]+\})?")
_TERM_RE = re.compile(
    r"([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?"
    r"psi(?:\{(\d+)(?:,(\d+))?\}|(\d)(\d)?)\s*\*?\s*"
    r"phi(?:\{(\d+)(?:,(\d+))?\}|(\d)(\d)?)"
)


def _var(name: str, i: int, a: int, K: KBasis, wide: bool) -> str:
    if wide:
        return f"{name}{{{i + 1}}}" if K.dim == 1 else f"{name}{{{i + 1},{a + 1}}}"
    return f"{name}{i + 1}" if K.dim == 1 else f"{name}{i + 1}{a + 1}"


def format_form(tensor: FormTensor, K: KBasis, N: int | None = None) -> str:
    """Render a form as ``(c psi_i phi_j + ...)f`` or ``(...) + (...)e23``.

    Terms are sorted by (i, a, j, b).  Indices are concatenated digits when
    they are all below 10 and written ``psi{10,2}`` otherwise.
    """
    wide = N is not None and N > 9
    groups = []
    for a in range(K.dim):
        terms = sorted((key, v.coords[a]) for key, v in tensor.items() if v.coords[a])
        body = ""
        for ((i, ia), (j, jb)), c in terms:
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            coef = "" if mag == 1 else f"{mag}*"
            term = coef + _var("psi", i, ia, K, wide) + "*" + _var("phi", j, jb, K, wide)
            body += (("-" if sign == "-" else "") if not body else f" {sign} ") + term
        if body:
            groups.append((a, body))
    if not groups:
        return "0"
    if K.dim == 1:
        return f"({groups[0][1]})f"
    names = K.names()
    return " + ".join(f"({body})" + (names[a] if a else "") for a, body in groups)


def parse_form(text: str, K: KBasis) -> FormTensor:
    """Inverse of :func:`format_form`; term order and spacing do not matter."""
    out: dict = {}
    names = K.names()
    pos = 0
    text = text.strip()
    for m in _GROUP_RE.finditer(text):
        between = text[pos:m.start()].strip()
        if between not in ("", "+"):
            raise ValueError(f"unexpected {between!r} in form")
        pos = m.end()
        suffix = m.group(2)
        a = 0 if suffix in (None, "f") else names.index(suffix)
        body = m.group(1).replace(" ", "")
        tpos = 0
        while tpos < len(body):
            t = _TERM_RE.match(body, tpos)
            if not t or t.end() == tpos:
                raise ValueError(f"cannot read term at {body[tpos:]!r}")
            tpos = t.end()
            sign, coef = t.group(1), Fraction(t.group(2) or 1)
            i = int(t.group(3) or t.group(5)) - 1
            ia = int(t.group(4) or t.group(6) or 1) - 1
            j = int(t.group(7) or t.group(9)) - 1
            jb = int(t.group(8) or t.group(10) or 1) - 1
            key = ((i, ia), (j, jb))
            coords = list(out.get(key, K.zero()).coords)
            coords[a] += -coef if sign == "-" else coef
            out[key] = K.element(coords)
    if text[pos:].strip():
        raise ValueError(f"unexpected {text[pos:]!r} in form")
    return {k: v for k, v in out.items() if not v.is_zero()}
