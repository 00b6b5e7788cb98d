"""Spinor ideals S = Cl f as right K-modules and the matrices they induce.

For a primitive idempotent f with stabilizer H and transversal
m_1 = 1, m_2, ..., m_N, the ideal S has K-basis m_i f where
K = f Cl f is spanned by f and a few blades of H.  Every blade times f
is a signed basis vector times a unit of K, so most computations here are
table lookups; :func:`decompose_spinor` and :func:`rep_matrix` verify their
results against honest multivector products where that is cheap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .algebra import (
    Multivector,
    Signature,
    blade_mul,
    blade_square,
    commutation_sign,
    format_blade,
    transposition,
)
from .idempotents import AlgebraStructure, Idempotent, RingType, classify
from .vee import Subgroup, Transversal, stabilizer, transversal

# --- the division ring K -------------------------------------------------------

@dataclass(frozen=True)
class KBasis:
    """Basis kappa_a f of K = f Cl f, with kappa_1 = 1.

    ``blades`` are positive blades of the stabilizer.  For the quaternions the
    last blade is the product of the middle two, so i j = k holds exactly.
    """

    f: Idempotent
    ring: RingType
    blades: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.blades)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {b: a for a, b in enumerate(self.blades)}

    @cached_property
    def table(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """table[a][b] = (sign, c) with kappa_a kappa_b = sign kappa_c."""
        sig = self.f.sig
        rows = []
        for a in self.blades:
            row = []
            for b in self.blades:
                s, m = blade_mul(a, b, sig)
                row.append((s, self._index[m]))
            rows.append(tuple(row))
        return tuple(rows)

    def element(self, coords: Sequence) -> "KElement":
        return KElement(self, tuple(Fraction(c) for c in coords))

    def zero(self) -> "KElement":
        return KElement(self, (Fraction(0),) * self.dim)

    def one(self) -> "KElement":
        return KElement(self, (Fraction(1),) + (Fraction(0),) * (self.dim - 1))

    def unit(self, a: int, sign: int = 1) -> "KElement":
        c = [Fraction(0)] * self.dim
        c[a] = Fraction(sign)
        return KElement(self, tuple(c))

    def names(self) -> list[str]:
        n = self.f.sig.n
        return [format_blade(b, n) for b in self.blades]

    def coordinates(self, x: Multivector) -> "KElement":
        """Coordinates of x in f Cl f; raises ValueError if x is not there."""
        scale = 1 << self.f.k
        coords = tuple(x.coefficient(b) * scale for b in self.blades)
        el = KElement(self, coords)
        if el.times_f() != x:
            raise ValueError("element does not lie in K = f Cl f")
        return el


class KElement:
    """Element sum_a c_a kappa_a of K (coordinates exact)."""

    __slots__ = ("basis", "coords")

    def __init__(self, basis: KBasis, coords: tuple[Fraction, ...]):
        self.basis = basis
        self.coords = coords

    def __add__(self, other: "KElement") -> "KElement":
        return KElement(self.basis, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "KElement") -> "KElement":
        return KElement(self.basis, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "KElement":
        return KElement(self.basis, tuple(-a for a in self.coords))

    def scale(self, c) -> "KElement":
        return KElement(self.basis, tuple(a * c for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, KElement):
            return NotImplemented
        return k_mul(self, other)

    __rmul__ = __mul__  # only reached for scalars

    def conj(self) -> "KElement":
        return k_conj(self)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_real(self) -> bool:
        return not any(self.coords[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.coords[0] == other and self.is_real()
        if not isinstance(other, KElement):
            return NotImplemented
        return self.basis.blades == other.basis.blades and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.basis.blades, self.coords))

    def as_multivector(self) -> Multivector:
        """sum_a c_a kappa_a, without the idempotent."""
        return Multivector(self.basis.f.sig, dict(zip(self.basis.blades, self.coords)))

    def times_f(self) -> Multivector:
        return self.as_multivector() * self.basis.f.value

    def format(self) -> str:
        names = self.basis.names()
        parts = []
        for c, name in zip(self.coords, names):
            if not c:
                continue
            neg = c < 0
            a = -c if neg else c
            num = str(a)
            if name == "1":
                body = num
            else:
                body = name if a == 1 else f"{num}*{name}"
            if parts:
                parts.append(("- " if neg else "+ ") + body)
            else:
                parts.append(("-" if neg else "") + body)
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"KElement({self.format()})"


def k_mul(x: KElement, y: KElement) -> KElement:
    table = x.basis.table
    out = [Fraction(0)] * x.basis.dim
    for a, ca in enumerate(x.coords):
        if not ca:
            continue
        row = table[a]
        for b, cb in enumerate(y.coords):
            if cb:
                s, c = row[b]
                out[c] += ca * cb if s > 0 else -ca * cb
    return KElement(x.basis, tuple(out))


def k_conj(x: KElement) -> KElement:
    """Complex or quaternionic conjugation; every kappa_a other than 1 squares to -1."""
    c = x.coords
    return KElement(x.basis, (c[0],) + tuple(-a for a in c[1:]))


def division_ring_basis(f: Idempotent, H: Subgroup | None = None) -> KBasis:
    """Pick blades of the stabilizer spanning f Cl f modulo the factors of f."""
    from .vee import F2Space

    sig = f.sig
    if H is None:
        H = stabilizer(f)
    ring = classify(sig).ring.base
    space = F2Space(f.factors)
    needed = {RingType.REAL: 0, RingType.COMPLEX: 1, RingType.QUATERNION: 2}[ring]
    picked: list[int] = []
    for b in H.positive_blades():
        if len(picked) == needed:
            break
        if space.add(b):
            if blade_square(b, sig) != -1:
                raise RuntimeError(f"{format_blade(b)} f is not a unit of square -1")
            picked.append(b)
    if ring is RingType.QUATERNION:
        i, j = picked
        s, k = blade_mul(i, j, sig)
        if s < 0:
            i, j = j, i
        blades = (0, i, j, k)
    else:
        blades = (0, *picked)
    if len(blades) != ring.k_dim:
        raise RuntimeError("stabilizer too small for the expected division ring")
    return KBasis(f, ring, blades)


# --- spinor bases ---------------------------------------------------------------

@dataclass(frozen=True)
class BladeImage:
    """e_mask f_k = sign * m_row * kappa_a * f_k."""

    row: int
    sign: int
    kappa: int


class SpinorBasis:
    """Ordered K-basis m_1 f, ..., m_N f of S = Cl f (or of Cl f_k, see ``for_orbit``)."""

    def __init__(self, f: Idempotent, H: Subgroup | None = None, T: Transversal | None = None):
        self.f = f
        self.sig: Signature = f.sig
        self.structure: AlgebraStructure = classify(f.sig)
        self.H = H if H is not None else stabilizer(f)
        self.transversal = T if T is not None else transversal(f, self.H)
        self.K = division_ring_basis(f, self.H)

    @property
    def reps(self) -> tuple[int, ...]:
        return self.transversal.reps

    @property
    def N(self) -> int:
        return len(self.transversal)

    @cached_property
    def elements(self) -> list[Multivector]:
        fv = self.f.value
        return [Multivector.blade(self.sig, m) * fv for m in self.reps]

    @cached_property
    def orbit_idempotents(self) -> list[Idempotent]:
        """f_k = m_k f m_k^{-1} as idempotents with flipped signs."""
        return [self.f.conjugated_by(m) for m in self.reps]

    def for_orbit(self, k: int) -> "SpinorBasis":
        """Basis m_i f_k of Cl f_k with the same transversal."""
        if k == 0:
            return self
        return SpinorBasis(self.orbit_idempotents[k], self.H, self.transversal)

    def hat(self) -> "SpinorBasis":
        """Basis built on the grade involution of f (other simple component)."""
        f = self.f
        signs = tuple(s if t.bit_count() % 2 == 0 else -s for t, s in zip(f.factors, f.signs))
        fh = f.with_signs(signs)
        return SpinorBasis(fh, self.H, self.transversal)

    @cached_property
    def constants(self) -> "StructConstants":
        return structure_constants(self)

    @cached_property
    def hatted(self) -> "SpinorBasis":
        return self.hat()

    @cached_property
    def _h_action(self) -> dict[int, tuple[int, int]]:
        """For blades h of H: e_h f = sign kappa_a f, stored as (sign, a)."""
        fv = self.f.value
        scale = 1 << self.f.k
        out = {}
        for h in self.H.positive_blades():
            x = Multivector.blade(self.sig, h) * fv
            for a, kb in enumerate(self.K.blades):
                c = x.coefficient(kb)
                if c:
                    s = int(c * scale)
                    if x != Multivector.blade(self.sig, kb, s) * fv:
                        raise RuntimeError("stabilizer blade does not act through K")
                    out[h] = (s, a)
                    break
            else:
                raise RuntimeError("stabilizer blade annihilates f")
        return out

    def blade_image(self, mask: int, k: int = 0) -> BladeImage:
        """Write e_mask f_k as sign * m_i * kappa_a * f_k.

        With h = m_i^{-1} e_mask in H and f_k = m_k f m_k^{-1}, one has
        h f_k = c(m_k,h) c(m_k,kappa) (h f) conjugated, where c is the
        commutation sign of two blades.
        """
        sig = self.sig
        T = self.transversal
        i = T.coset_of(mask)
        mi = T.reps[i]
        s, h = blade_mul(mi, mask, sig)
        s *= T.squares[i]  # m_i^{-1} = m_i^2 m_i
        sh, a = self._h_action[h]
        sign = s * sh
        if k:
            mk = T.reps[k]
            sign *= commutation_sign(mk, h) * commutation_sign(mk, self.K.blades[a])
        return BladeImage(i, sign, a)

    @cached_property
    def _images(self) -> list[dict[int, BladeImage]]:
        return [{b: self.blade_image(b, k) for b in self.sig.blades} for k in range(self.N)]

    def coordinates(self, psi: Multivector, k: int = 0) -> list[KElement]:
        """K-coordinates of psi = sum_i m_i f_k lambda_i, assuming psi f_k = psi.

        Each lambda_i is returned in the blades of K, i.e. as
        sum_a c_a kappa_a with lambda_i = sum_a c_a kappa_a f_k.
        """
        terms = psi.terms
        # integer numerators over a common denominator, to avoid Fraction sums
        L = math.lcm(*(c.denominator for c in terms.values())) if terms else 1
        acc = [[0] * self.K.dim for _ in range(self.N)]
        img = self._images[k]
        for b, c in terms.items():
            im = img[b]
            v = c.numerator * (L // c.denominator)
            acc[im.row][im.kappa] += v if im.sign > 0 else -v
        return [KElement(self.K, tuple(Fraction(v, L) for v in row)) for row in acc]

    def assemble(self, lambdas: Sequence[KElement], k: int = 0) -> Multivector:
        """sum_i m_i f_k lambda_i."""
        fk = self.orbit_idempotents[k].value
        out = Multivector.zero(self.sig)
        for m, lam in zip(self.reps, lambdas):
            if not lam.is_zero():
                out = out + Multivector.blade(self.sig, m) * lam.as_multivector() * fk
        return out

    @cached_property
    def kappa_twist(self) -> list[tuple[int, ...]]:
        """kappa_twist[k][a] = sign with m_k^{-1} kappa_a m_k = sign kappa_a."""
        return [tuple(commutation_sign(m, kb) for kb in self.K.blades) for m in self.reps]

    def twist(self, lam: KElement, k: int) -> KElement:
        """lambda_{i,k} = m_k^{-1} lambda m_k, read in the basis of K (for f)."""
        tw = self.kappa_twist[k]
        return KElement(self.K, tuple(c if s > 0 else -c for c, s in zip(lam.coords, tw)))


def spinor_basis(f: Idempotent) -> SpinorBasis:
    return SpinorBasis(f)


def decompose_spinor(psi: Multivector, S: SpinorBasis) -> list[KElement]:
    """Unique lambda_i in K with psi = sum_i m_i f lambda_i.

    Raises ValueError when psi is not in the ideal Cl f.
    """
    lambdas = S.coordinates(psi)
    if S.assemble(lambdas) != psi:
        raise ValueError("element is not in the spinor ideal Cl f")
    return lambdas


def project_coordinates(x: Multivector, S: SpinorBasis) -> list[KElement]:
    """Coordinates via lambda_i f = f T(m_i) x, by multivector products only."""
    fv = S.f.value
    out = []
    for m in S.reps:
        y = fv * transposition(Multivector.blade(S.sig, m)) * x
        out.append(S.K.coordinates(y))
    return out


# --- structure constants -----------------------------------------------------------

@dataclass(frozen=True)
class StructConstants:
    """m_l m_k f = m_j f c, stored as target[l][k] = j and value[l][k] = c."""

    target: tuple[tuple[int, ...], ...]
    value: tuple[tuple[KElement, ...], ...]

    def c(self, l: int, k: int) -> KElement:
        return self.value[l][k]

    def matrix(self) -> list[list[KElement]]:
        """C[j][k] = c^j_{l,k}, the unique nonzero constant landing in row j of column k."""
        N = len(self.target)
        C: list[list[KElement | None]] = [[None] * N for _ in range(N)]
        for l in range(N):
            for k in range(N):
                C[self.target[l][k]][k] = self.value[l][k]
        return C  # type: ignore[return-value]


def structure_constants(S: SpinorBasis) -> StructConstants:
    sig = S.sig
    target, value = [], []
    for ml in S.reps:
        trow, vrow = [], []
        for mk in S.reps:
            s, b = blade_mul(ml, mk, sig)
            im = S.blade_image(b)
            trow.append(im.row)
            vrow.append(S.K.unit(im.kappa, s * im.sign))
        target.append(tuple(trow))
        value.append(tuple(vrow))
    return StructConstants(tuple(target), tuple(value))


# --- matrices over K -----------------------------------------------------------

class RepMatrix:
    """Square matrix over K acting on column vectors of K-coordinates.

    Products multiply entries in the order (A B)_{jl} = sum_k A_{jk} B_{kl},
    matching the right K-module structure of S.
    """

    __slots__ = ("K", "rows")

    def __init__(self, K: KBasis, rows: Iterable[Iterable[KElement]]):
        self.K = K
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def N(self) -> int:
        return len(self.rows)

    def __getitem__(self, jk: tuple[int, int]) -> KElement:
        j, k = jk
        return self.rows[j][k]

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        N = self.N
        out = []
        for j in range(N):
            row = []
            for l in range(N):
                acc = self.K.zero()
                for k in range(N):
                    a, b = self.rows[j][k], other.rows[k][l]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + k_mul(a, b)
                row.append(acc)
            out.append(row)
        return RepMatrix(self.K, out)

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(self.K, ([a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def adjoint(self) -> "RepMatrix":
        return adjoint(self)

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def format(self) -> str:
        cells = [[x.format() for x in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self) -> str:
        return f"RepMatrix(\n{self.format()}\n)"


def adjoint(M: RepMatrix) -> RepMatrix:
    """Conjugate transpose (plain transpose over the reals)."""
    N = M.N
    return RepMatrix(M.K, ([k_conj(M.rows[k][j]) for k in range(N)] for j in range(N)))


def identity_matrix(K: KBasis, N: int) -> RepMatrix:
    return RepMatrix(K, ([K.one() if j == k else K.zero() for k in range(N)] for j in range(N)))


def rep_matrix(u: Multivector, S: SpinorBasis) -> RepMatrix:
    """Matrix of left multiplication by u on S.

    Built column by column from the pieces psi_k = u f_k: writing
    psi_k = sum_i m_i f_k lambda_i, column k has the entry
    c^j_{i,k} lambda_{i,k} in row j, where m_i m_k f = m_j f c^j_{i,k}
    and lambda_{i,k} = m_k^{-1} lambda_i m_k.
    """
    C = S.constants
    N = S.N
    cols: list[list[KElement]] = []
    for k in range(N):
        lam = S.coordinates(u, k)  # coordinates of u f_k = psi_k
        col = [S.K.zero() for _ in range(N)]
        for i in range(N):
            if lam[i].is_zero():
                continue
            j = C.target[i][k]
            col[j] = col[j] + k_mul(C.value[i][k], S.twist(lam[i], k))
        cols.append(col)
    return RepMatrix(S.K, ([cols[k][j] for k in range(N)] for j in range(N)))


def rep_matrix_direct(u: Multivector, S: SpinorBasis) -> RepMatrix:
    """Same matrix from the definition u m_k f = sum_j m_j f gamma_{jk}.

    Uses only multivector products and projections, no group tables.
    """
    N = S.N
    cols = [project_coordinates(u * S.elements[k], S) for k in range(N)]
    return RepMatrix(S.K, ([cols[k][j] for k in range(N)] for j in range(N)))


class RepPair:
    """Matrices of u on S and on the second ideal S^ in the semisimple case."""

    __slots__ = ("first", "second")

    def __init__(self, first: RepMatrix, second: RepMatrix):
        self.first = first
        self.second = second

    @property
    def N(self) -> int:
        return self.first.N

    def __getitem__(self, jk: tuple[int, int]) -> tuple[KElement, KElement]:
        return self.first[jk], self.second[jk]

    def __matmul__(self, other: "RepPair") -> "RepPair":
        return RepPair(self.first @ other.first, self.second @ other.second)

    def __add__(self, other: "RepPair") -> "RepPair":
        return RepPair(self.first + other.first, self.second + other.second)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepPair):
            return NotImplemented
        return self.first == other.first and self.second == other.second

    def __hash__(self) -> int:
        return hash((self.first, self.second))

    def adjoint(self) -> "RepPair":
        return RepPair(adjoint(self.first), adjoint(self.second))

    def is_zero(self) -> bool:
        return self.first.is_zero() and self.second.is_zero()

    def format(self) -> str:
        cells = [[f"({a.format()}, {b.format()})" for a, b in zip(r, s)]
                 for r, s in zip(self.first.rows, self.second.rows)]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def semisimple_rep_matrix(u: Multivector, S: SpinorBasis, S_hat: SpinorBasis | None = None) -> RepPair:
    """Faithful pair (gamma(u), gamma^(u)) on S = Cl f and S^ = Cl f^."""
    if S.structure.simple:
        raise ValueError(f"{S.sig} is simple")
    if S_hat is None:
        S_hat = S.hatted
    return RepPair(rep_matrix(u, S), rep_matrix(u, S_hat))


def represent(u: Multivector, S: SpinorBasis) -> RepMatrix | RepPair:
    """rep_matrix in the simple case, the faithful pair otherwise."""
    return rep_matrix(u, S) if S.structure.simple else semisimple_rep_matrix(u, S)


def transposed_rep(u: Multivector, S: SpinorBasis) -> RepMatrix | RepPair:
    return represent(transposition(u), S)


# --- symbolic matrices ----------------------------------------------------------

def generic_rep_matrix(S: SpinorBasis, hat: bool = False) -> list[list[list[dict[int, Fraction]]]]:
    """Matrix of a generic u = sum_b u_b e_b as linear forms.

    Entry [j][k][a] maps the 1-based position of a blade in monomial order to
    the coefficient of u_b in coordinate a of gamma(u)_{jk}.
    """
    basis = S.hatted if hat else S
    N, d = S.N, S.K.dim
    out = [[[dict() for _ in range(d)] for _ in range(N)] for _ in range(N)]
    for pos, b in enumerate(S.sig.blades, start=1):
        M = rep_matrix(Multivector.blade(S.sig, b), basis)
        for j in range(N):
            for k in range(N):
                for a, c in enumerate(M.rows[j][k].coords):
                    if c:
                        out[j][k][a][pos] = c
    return out


def format_linear_form(form: dict[int, Fraction], var: str = "u") -> str:
    parts = []
    for pos in sorted(form):
        c = form[pos]
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        body = f"{var}{pos}" if a == 1 else f"{a}*{var}{pos}"
        parts.append((sign, body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += sign + body
    return s


def format_generic_entry(coords: Sequence[dict[int, Fraction]], names: Sequence[str], var: str = "u") -> str:
    pieces = []
    for form, name in zip(coords, names):
        if not form:
            continue
        neg = all(c < 0 for c in form.values())
        body = format_linear_form({p: -c for p, c in form.items()} if neg and pieces else form, var)
        if len(form) > 1:
            body = f"({body})"
        if name != "1":
            body += name
        if not pieces:
            pieces.append(body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces) if pieces else "0"


def spinor_dimension_check(S: SpinorBasis) -> bool:
    """N * dim K equals the real dimension 2^(n-k) of the ideal."""
    return S.N * S.K.dim == 1 << (S.sig.n - S.f.k)
