"""Executable checks of the structural results, grouped into suites.

Every check returns a :class:`Check`; nothing here raises on a failed
property, so a whole suite can be reported at once.  Three suites exist:

``props``     lemmas and propositions on one signature (random data seeded)
``tables``    the stored stabilizer tables against recomputation
``examples``  the worked examples for the signatures that have one
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .algebra import (
    Multivector,
    Signature,
    SignedBlade,
    blade_mul,
    blade_square,
    commutation_sign,
    format_blade,
    grade_involution,
    parse_blade,
    transposition,
)
from .idempotents import RingType, is_primitive, primitive_idempotent
from .norms import (
    beta,
    find_witness,
    form_tensor,
    format_form,
    in_g_eps,
    parse_form,
    sample_g_eps,
    t_inner,
    t_inner_coordinates,
)
from .spinor import (
    KElement,
    SpinorBasis,
    adjoint,
    format_generic_entry,
    generic_rep_matrix,
    rep_matrix,
    rep_matrix_direct,
    represent,
    semisimple_rep_matrix,
)
from .tables import REFERENCE_ROWS, compute_row
from .vee import (
    StructureLabel,
    coset_permutation,
    expected_stabilizer_order,
    fingerprint,
    is_normal,
    orbit,
    orbit_by_sweep,
    orbit_sum_target,
    pointwise_stabilizes,
    stabilizer,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _check(name: str, fn: Callable[[], "bool | tuple[bool, str]"]) -> Check:
    try:
        out = fn()
    except Exception as exc:  # a crash is a failed check, reported with its message
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        return Check(name, bool(out[0]), out[1])
    return Check(name, bool(out))


# --- random data --------------------------------------------------------------

def random_dyadic(sig: Signature, rng: random.Random, density: float = 1.0, bound: int = 8) -> Multivector:
    """Random element with coefficients m / 2^e, |m| <= bound, e <= 3."""
    terms = {}
    for b in sig.blades:
        if rng.random() < density:
            terms[b] = Fraction(rng.randint(-bound, bound), 1 << rng.randint(0, 3))
    return Multivector(sig, terms)


def random_k(S: SpinorBasis, rng: random.Random) -> KElement:
    return S.K.element([Fraction(rng.randint(-6, 6), 1 << rng.randint(0, 2)) for _ in range(S.K.dim)])


def random_spinor(S: SpinorBasis, rng: random.Random) -> tuple[Multivector, list[KElement]]:
    lam = [random_k(S, rng) for _ in range(S.N)]
    return S.assemble(lam), lam


def default_basis(sig: Signature) -> SpinorBasis:
    return SpinorBasis(primitive_idempotent(sig))


# --- property suite -------------------------------------------------------------

def check_lemma1(S: SpinorBasis, rng: random.Random) -> list[Check]:
    sig = S.sig
    one = Multivector.scalar(sig, 1)

    def inverse_and_sign():
        for b in sig.blades:
            e = Multivector.blade(sig, b)
            t = transposition(e)
            if e * t != one or t * e != one:
                return False, f"T({format_blade(b)}) is not the inverse"
            if t != e * blade_square(b, sig):
                return False, f"T({format_blade(b)}) has the wrong sign"
        return True, f"{sig.dim} blades"

    def anti_automorphism():
        for _ in range(3):
            u, v = random_dyadic(sig, rng, 0.3), random_dyadic(sig, rng, 0.3)
            if transposition(u * v) != transposition(v) * transposition(u):
                return False
            if transposition(transposition(u)) != u:
                return False
        return True

    checks = [
        _check("Lemma 1(i,ii) T(e_A) = e_A^-1 = e_A^2 e_A", inverse_and_sign),
        _check("T is an anti-involution", anti_automorphism),
        _check("Lemma 1(iii) T(f) = f", lambda: transposition(S.f.value) == S.f.value),
    ]
    if sig.p == 0 or sig.q == 0:
        def vectors():
            for _ in range(5):
                coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(sig.n)]
                v = Multivector(sig, {1 << i: c for i, c in enumerate(coeffs)})
                norm = sum(c * c for c in coeffs)
                if v * transposition(v) != norm or transposition(v) * v != norm:
                    return False
                if norm and v * (transposition(v) / norm) != one:
                    return False
            return True
        checks.append(_check("Lemma 1(iv) v T(v) = sum v_i^2 and the inverse formula", vectors))
    return checks


def check_stabilizer(S: SpinorBasis) -> list[Check]:
    sig = S.sig
    st = S.structure
    H = S.H
    ring = st.ring.base
    fp = fingerprint(H)
    want_abelian = ring is not RingType.QUATERNION
    s = st.k + (2 if ring is RingType.QUATERNION else 1)
    checks = [
        _check("Prop 3(i) stabilizer is normal", lambda: is_normal(H)),
        _check("Prop 3(i) stabilizer order",
               lambda: (H.order == expected_stabilizer_order(sig), f"|G(f)| = {H.order}")),
        _check("Prop 3(ii) abelian exactly in the real and complex cases",
               lambda: (fp.abelian == want_abelian, f"abelian = {fp.abelian}")),
        _check("Prop 3(iii) minimal number of generators",
               lambda: (len(fp.generators) == s, f"{len(fp.generators)} generators, expected {s}")),
        _check("Prop 3(iv) generator orders are 2 or 4", lambda: set(fp.gen_orders) <= {2, 4}),
        _check("Prop 3(v) factors of f are fixed pointwise", lambda: pointwise_stabilizes(H, S.f.factors)),
        _check("structure label resolved", lambda: (isinstance(fp.label, StructureLabel), str(fp.label))),
    ]
    if not st.simple:
        fh = grade_involution(S.f.value)
        checks.append(_check("stabilizers of f and its grade involution agree",
                             lambda: stabilizer(fh).elements == H.elements))
    return checks


def check_orbit(S: SpinorBasis) -> list[Check]:
    sig = S.sig
    fv = S.f.value
    orb = orbit(fv, S.transversal)

    def accounting():
        if len(orb) * S.H.order != 2 * sig.dim:
            return False, f"{len(orb)} * {S.H.order} != {2 * sig.dim}"
        return True, f"|O(f)| = {len(orb)}"

    def annihilating():
        for i, a in enumerate(orb):
            if a * a != a:
                return False, f"f_{i + 1} is not idempotent"
            for j, b in enumerate(orb):
                if i != j and not (a * b).is_zero():
                    return False, f"f_{i + 1} f_{j + 1} != 0"
        return True

    def total():
        acc = Multivector.zero(sig)
        for x in orb:
            acc = acc + x
        return acc == orbit_sum_target(sig, fv)

    def signs_match():
        return [x for x in orb] == [g.value for g in S.orbit_idempotents]

    return [
        _check("orbit-stabilizer count", accounting),
        _check("orbit via transversal equals orbit by sweep", lambda: set(orb) == set(orbit_by_sweep(fv))),
        _check("orbit idempotents pairwise annihilate", annihilating),
        _check("orbit sums to 1 or to the central idempotent", total),
        _check("conjugates are sign flips of the factors", signs_match),
        _check("f is primitive (left-regular rank)", lambda: is_primitive(fv)),
    ]


def check_k(S: SpinorBasis) -> list[Check]:
    sig = S.sig

    def same_blades():
        for k in range(1, S.N):
            if S.for_orbit(k).K.blades != S.K.blades:
                return False, f"f_{k + 1} gives a different K basis"
        return True

    def ring_shape():
        K = S.K
        if K.dim != S.structure.ring.k_dim:
            return False
        for a in range(1, K.dim):
            if K.table[a][a] != (-1, 0):
                return False
        return K.dim != 4 or K.table[1][2] == (1, 3)

    return [
        _check("dim K matches the classification", ring_shape),
        _check("all orbit members share the K blades", same_blades),
        _check("N dim K equals dim S", lambda: S.N * S.K.dim == 1 << (sig.n - S.f.k)),
    ]


def check_lemma2(S: SpinorBasis, rng: random.Random) -> list[Check]:
    sig = S.sig
    fv = S.f.value
    T = S.transversal
    C = S.constants
    N = S.N
    reps = T.reps
    orb = [g.value for g in S.orbit_idempotents]

    def a_blade_images():
        # every e_b f is a signed basis vector times a unit of K, and only
        # blades of one coset land on the same basis vector
        for b in sig.blades:
            im = S.blade_image(b)
            want = Multivector.blade(sig, reps[im.row]) * Multivector.blade(sig, S.K.blades[im.kappa], im.sign) * fv
            if Multivector.blade(sig, b) * fv != want:
                return False, f"e_{format_blade(b)} f"
            if im.row != T.coset_of(b):
                return False
        return True, f"{sig.dim} blades"

    def b_products():
        triples = list(itertools.product(range(N), repeat=3))
        # exhaustive up to n = 6, sampled above
        limit = len(triples) if sig.n <= 6 else (32 if sig.n >= 8 else 128)
        if len(triples) > limit:
            triples = rng.sample(triples, limit)
        for l, k, i in triples:
            x = Multivector.blade(sig, reps[l]) * orb[k] * Multivector.blade(sig, reps[i]) * fv
            if i != k:
                if not x.is_zero():
                    return False, f"(m_{l + 1} f_{k + 1})(m_{i + 1} f) != 0"
            else:
                j = C.target[l][k]
                want = Multivector.blade(sig, reps[j]) * fv * C.value[l][k].as_multivector()
                if x != want:
                    return False, f"(m_{l + 1} f_{k + 1})(m_{k + 1} f)"
        return True, f"{len(triples)} triples"

    def unit_constants():
        return all(c.is_real() and abs(c.coords[0]) == 1 for row in C.value for c in row)

    def c_commutators():
        for k, l in itertools.product(range(N), repeat=2):
            if C.target[k][l] != C.target[l][k]:
                return False
            prod = C.value[k][l].coords[0] * C.value[l][k].coords[0]
            if prod != commutation_sign(reps[k], reps[l]):
                return False
        return True

    def d_relation():
        for i, j in itertools.product(range(N), repeat=2):
            k = C.target[i][j]
            if C.target[i][k] != j:
                return False
            alpha = T.squares[i]
            if C.value[i][j].coords[0] != alpha * C.value[i][k].coords[0]:
                return False
        return True

    def e_columns():
        ks = list(range(N))
        if sig.n >= 8 and N > 2:
            ks = [0] + rng.sample(ks[1:], 1)
        for k in ks:
            lam = [random_k(S, rng) for _ in range(N)]
            psi_k = S.assemble(lam, k)
            M = rep_matrix_direct(psi_k, S)
            for j in range(N):
                for l in range(N):
                    if l != k and not M[j, l].is_zero():
                        return False, f"column {l + 1} of [psi_{k + 1}]"
            for i in range(N):
                j = C.target[i][k]
                want = C.value[i][k] * S.twist(lam[i], k)
                if M[j, k] != want:
                    return False, f"entry ({j + 1},{k + 1}) of [psi_{k + 1}]"
        return True, f"{len(ks)} of {N} columns"

    def twist_both_ways():
        for k, m in enumerate(reps):
            e = Multivector.blade(sig, m)
            einv = transposition(e)
            for _ in range(2):
                lam = random_k(S, rng)
                x = lam.as_multivector()
                if einv * x * e != e * x * einv:
                    return False
                if einv * x * e != S.twist(lam, k).as_multivector():
                    return False
        return True

    return [
        _check("Lemma 2(a) blade images respect the cosets", a_blade_images),
        _check("Lemma 2(b) products of basis spinors", b_products),
        _check("structure constants are +-1", unit_constants),
        _check("Lemma 2(c) commutators from structure constants", c_commutators),
        _check("Lemma 2(d) c^k_{i,j} = alpha_i c^j_{i,k}", d_relation),
        _check("Lemma 2(e) matrix of psi_k", e_columns),
        _check("m_k^-1 lambda m_k = m_k lambda m_k^-1", twist_both_ways),
    ]


def check_prop4(S: SpinorBasis) -> list[Check]:
    sig = S.sig
    T = S.transversal
    fv = S.f.value
    group = [SignedBlade(1, b) for b in sig.blades]

    def homomorphism():
        perms = {g.mask: coset_permutation(g, T, fv)[0] for g in group}
        for a in sig.blades:
            for m in T.reps:
                _, ab = blade_mul(a, m, sig)
                pa, pm, pab = perms[a], perms[m], perms[ab]
                if any(pab[i] != pa[pm[i]] for i in range(T.__len__())):
                    return False, f"{format_blade(a)} * {format_blade(m)}"
        return True

    def signed_permutation():
        for m in T.reps:
            perm, signs = coset_permutation(SignedBlade(1, m), T, fv)
            if sorted(perm) != list(range(len(T))):
                return False
        return True

    return [
        _check("Prop 4 left translations permute the basis up to sign", signed_permutation),
        _check("Prop 4 coset permutation is a homomorphism", homomorphism),
    ]


def check_norms(S: SpinorBasis, rng: random.Random, samples: int = 3) -> list[Check]:
    sig = S.sig

    def in_k():
        for _ in range(samples):
            psi, _ = random_spinor(S, rng)
            phi, _ = random_spinor(S, rng)
            if t_inner(psi, phi, S) != t_inner_coordinates(psi, phi, S):
                return False
        return True

    def real_on_diagonal():
        for _ in range(samples):
            psi, _ = random_spinor(S, rng)
            if not t_inner(psi, psi, S).is_real():
                return False
        return True

    def vee_in_geps():
        return all(in_g_eps(Multivector.blade(sig, b, s)) for b in sig.blades for s in (1, -1))

    def invariance():
        for _ in range(samples):
            g = sample_g_eps(sig, rng)
            if not in_g_eps(g):
                return False, "sample not in G^eps"
            psi, _ = random_spinor(S, rng)
            phi, _ = random_spinor(S, rng)
            if t_inner(g * psi, g * phi, S) != t_inner(psi, phi, S):
                return False
        return True

    return [
        _check("Prop 5 T(psi) phi lies in K and equals sum conj(lambda_i) mu_i", in_k),
        _check("Cor 1 T(psi) psi is real", real_on_diagonal),
        _check("Cor 2(ii) vee group lies in G^eps", vee_in_geps),
        _check("Cor 2(i) invariance under G^eps", invariance),
    ]


def check_adjoint(S: SpinorBasis, rng: random.Random, samples: int = 5, direct: bool = True) -> list[Check]:
    sig = S.sig
    bases = [S] if S.structure.simple else [S, S.hatted]

    def adjoint_thm():
        for _ in range(samples):
            u = random_dyadic(sig, rng)
            A, B = represent(u, S), represent(transposition(u), S)
            if B != A.adjoint():
                return False
        return True, f"{samples} elements"

    def two_routes():
        for _ in range(2):
            u = random_dyadic(sig, rng, 0.5)
            for basis in bases:
                if rep_matrix(u, basis) != rep_matrix_direct(u, basis):
                    return False
        return True

    def multiplicative():
        u, v = random_dyadic(sig, rng, 0.4), random_dyadic(sig, rng, 0.4)
        return represent(u * v, S) == represent(u, S) @ represent(v, S)

    checks = [
        _check("Prop 6/7 [T(u)] is the conjugate transpose of [u]", adjoint_thm),
        _check("representation is multiplicative", multiplicative),
    ]
    if direct:
        checks.insert(1, _check("matrix from Lemma 2(e) equals the definition", two_routes))
    return checks


def props_suite(sig: Signature, seed: int = 0, light: bool = False) -> list[Check]:
    """All property checks on one signature."""
    rng = random.Random(f"{seed}:{sig.p},{sig.q}")
    S = default_basis(sig)
    out: list[Check] = []
    out += check_lemma1(S, rng)
    out += check_stabilizer(S)
    out += check_orbit(S)
    out += check_k(S)
    out += check_lemma2(S, rng)
    out += check_prop4(S)
    out += check_norms(S, rng, samples=1 if (light or sig.n >= 8) else 3)
    out += check_adjoint(S, rng, samples=2 if light else 5, direct=sig.n <= 7)
    return out


# --- tables suite ----------------------------------------------------------------

def tables_suite(sig: Signature | None = None) -> list[Check]:
    """Recompute every stored table row (or the one for ``sig``)."""
    out = []
    for ref in REFERENCE_ROWS:
        if sig is not None and ref.sig != sig:
            continue
        out.append(_check(f"Table {ref.table} {ref.sig}", lambda ref=ref: _table_row_ok(ref)))
    return out


def _table_row_ok(ref) -> tuple[bool, str]:
    sig = ref.sig
    row = compute_row(sig, tuple(parse_blade(t, sig) for t in ref.factors))
    printed = StructureLabel.parse(ref.label)
    msgs = []
    ok = row.stab_order == ref.order
    if not ok:
        msgs.append(f"order {row.stab_order} != {ref.order}")
    if Counter(row.gen_orders) != Counter(ref.gen_orders):
        ok = False
        msgs.append(f"generator orders {row.gen_orders} vs {ref.gen_orders}")
    if row.label != ref.label:
        if printed.order == ref.order:
            ok = False
            msgs.append(f"label {row.label} vs {ref.label}")
        else:
            msgs.append(f"stored label {ref.label} has order {printed.order}, computed {row.label}")
    # the stored generators must generate the same group
    gens = [_parse_signed(t, sig) for t in ref.generators]
    from .vee import generate
    H = stabilizer(primitive_idempotent(sig, tuple(parse_blade(t, sig) for t in ref.factors)))
    if generate(sig, gens) != H.elements:
        ok = False
        msgs.append("stored generators do not generate the stabilizer")
    return ok, "; ".join(msgs) or f"{row.label}, |G(f)| = {row.stab_order}"


def _parse_signed(text: str, sig: Signature) -> SignedBlade:
    if text == "-1":
        return SignedBlade(-1, 0)
    if text.startswith("-"):
        return SignedBlade(-1, parse_blade(text[1:], sig))
    return SignedBlade(1, parse_blade(text, sig))


# --- worked examples -----------------------------------------------------------------

def _basis_from(sig: Signature, factors: Iterable[str]) -> SpinorBasis:
    return SpinorBasis(primitive_idempotent(sig, tuple(parse_blade(t, sig) for t in factors)))


def _real_matrix(M) -> list[list[Fraction]]:
    return [[x.coords[0] for x in r] for r in M.rows]


# printed forms, transcribed term by term in their original order
CL22_FORMS = {
    "T": "(psi1*phi1 + psi2*phi2 + psi3*phi3 + psi4*phi4)f",
    "+": "(-psi1*phi4 + psi3*phi2 + psi4*phi1 - psi2*phi3)f",
    "-": "(-psi1*phi4 - psi3*phi2 + psi4*phi1 + psi2*phi3)f",
}
CL30_FORMS = {
    "T": "(psi11*phi11 + psi22*phi22 + psi21*phi21 + psi12*phi12)"
         " + (-psi22*phi21 - psi12*phi11 + psi21*phi22 + psi11*phi12)e23",
    "-": "(psi22*phi12 - psi21*phi11 - psi12*phi22 + psi11*phi21)"
         " + (-psi22*phi11 - psi21*phi12 + psi12*phi21 + psi11*phi22)e23",
}


def example_cl22(seed: int = 0, points: int = 20) -> list[Check]:
    sig = Signature(2, 2)
    S = _basis_from(sig, ["e13", "e24"])
    rng = random.Random(seed)

    def transversal_ok():
        return [format_blade(m) for m in S.reps] == ["1", "e1", "e2", "e12"]

    def c_matrix():
        C = [[c.coords[0] for c in r] for r in S.constants.matrix()]
        return C == [[1, 1, 1, -1], [1, 1, 1, -1], [1, -1, 1, 1], [1, -1, 1, 1]]

    def sum_of_spinors():
        for _ in range(points):
            p = [Fraction(rng.randint(-9, 9), 1 << rng.randint(0, 2)) for _ in range(4)]
            psi = Multivector.zero(sig)
            for k in range(4):
                psi = psi + S.assemble([S.K.element([x]) for x in p], k)
            want = [[p[0], p[1], p[2], -p[3]],
                    [p[1], p[0], p[3], -p[2]],
                    [p[2], -p[3], p[0], p[1]],
                    [p[3], -p[2], p[1], p[0]]]
            if _real_matrix(rep_matrix(psi, S)) != want:
                return False
        return True, f"{points} points"

    def second_column():
        p = [Fraction(rng.randint(-9, 9)) for _ in range(4)]
        psi = S.assemble([S.K.element([x]) for x in p], 1)
        M = _real_matrix(rep_matrix(psi, S))
        MT = _real_matrix(rep_matrix(transposition(psi), S))
        col = [p[1], p[0], -p[3], -p[2]]
        want = [[0, c, 0, 0] for c in col]
        return M == want and MT == [list(r) for r in zip(*want)]

    def norms():
        tin = form_tensor(S, lambda x, y: t_inner(x, y, S))
        wp, wm = find_witness(S, "+"), find_witness(S, "-")
        bp = form_tensor(S, lambda x, y: beta(x, y, S, "+", wp))
        bm = form_tensor(S, lambda x, y: beta(x, y, S, "-", wm))
        ok = tin == parse_form(CL22_FORMS["T"], S.K)
        ok &= bp == parse_form(CL22_FORMS["+"], S.K) and bm == parse_form(CL22_FORMS["-"], S.K)
        ok &= format_form(tin, S.K) == "(psi1*phi1 + psi2*phi2 + psi3*phi3 + psi4*phi4)f"
        ok &= format_form(bp, S.K) == "(-psi1*phi4 - psi2*phi3 + psi3*phi2 + psi4*phi1)f"
        ok &= format_form(bm, S.K) == "(-psi1*phi4 + psi2*phi3 - psi3*phi2 + psi4*phi1)f"
        ok &= tin != bp and tin != bm
        return ok and wp == wm == parse_blade("e12"), "s = e12 for both"

    return [
        _check("Cl(2,2) transversal [1, e1, e2, e12]", transversal_ok),
        _check("Cl(2,2) structure constant matrix C", c_matrix),
        _check("Cl(2,2) matrix of sum of psi_k", sum_of_spinors),
        _check("Cl(2,2) spinor in S_2 and its transpose", second_column),
        _check("Cl(2,2) T-product and beta+- forms", norms),
    ]


def example_cl30(seed: int = 0, points: int = 20) -> list[Check]:
    sig = Signature(3, 0)
    S = _basis_from(sig, ["e1"])
    rng = random.Random(seed + 1)
    K = S.K

    def units():
        f1, f2 = (g.value for g in S.orbit_idempotents)
        e2 = Multivector.blade(sig, parse_blade("e2"))
        z, o = K.zero(), K.one()
        cases = [(f1, [[o, z], [z, z]]), (e2 * f2, [[z, o], [z, z]]),
                 (e2 * f1, [[z, z], [o, z]]), (f2, [[z, z], [z, o]])]
        return all(rep_matrix(x, S).rows == tuple(map(tuple, m)) for x, m in cases)

    def generic_u():
        for _ in range(points):
            u = [Fraction(rng.randint(-9, 9), 1 << rng.randint(0, 2)) for _ in range(8)]
            x = Multivector.from_coefficients(sig, u)
            u1, u2, u3, u4, u5, u6, u7, u8 = u
            want = [[K.element([u1 + u2, u8 + u7]), K.element([u5 + u3, -(u4 + u6)])],
                    [K.element([-u5 + u3, u4 - u6]), K.element([u1 - u2, u8 - u7])]]
            M = rep_matrix(x, S)
            if [list(r) for r in M.rows] != want:
                return False
            if rep_matrix(transposition(x), S) != adjoint(M):
                return False
        return True, f"{points} points"

    def generic_text():
        g = generic_rep_matrix(S)
        names = K.names()
        text = [[format_generic_entry(e, names) for e in r] for r in g]
        return text == [["(u1+u2) + (u7+u8)e23", "(u3+u5) - (u4+u6)e23"],
                        ["(u3-u5) + (u4-u6)e23", "(u1-u2) + (-u7+u8)e23"]]

    def norms():
        tin = form_tensor(S, lambda x, y: t_inner(x, y, S))
        wp, wm = find_witness(S, "+"), find_witness(S, "-")
        bp = form_tensor(S, lambda x, y: beta(x, y, S, "+", wp))
        bm = form_tensor(S, lambda x, y: beta(x, y, S, "-", wm))
        ok = tin == parse_form(CL30_FORMS["T"], K) and bp == tin
        ok &= bm == parse_form(CL30_FORMS["-"], K) and bm != tin
        return ok and wp == 0 and wm == parse_blade("e2"), "T-product = beta+ (s=1), beta- with s=e2"

    return [
        _check("Cl(3,0) transversal [1, e2] and K = span{1, e23}",
               lambda: list(S.reps) == [0, 2] and K.names() == ["1", "e23"]),
        _check("Cl(3,0) matrix units", units),
        _check("Cl(3,0) generic [u] and [T(u)]", generic_u),
        _check("Cl(3,0) symbolic [u]", generic_text),
        _check("Cl(3,0) T-product and beta+- forms", norms),
    ]


def example_cl21(seed: int = 0) -> list[Check]:
    sig = Signature(2, 1)
    S = _basis_from(sig, ["e1", "e23"])
    rng = random.Random(seed + 2)
    Sh = S.hatted

    def group():
        want = {SignedBlade(s, parse_blade(b)) for b in ("1", "e1", "e23", "e123") for s in (1, -1)}
        return set(S.H.elements) == want and list(S.reps) == [0, 2]

    def pair_display():
        p1, p2 = Fraction(rng.randint(1, 9)), Fraction(rng.randint(1, 9))
        psi = S.assemble([S.K.element([p1]), S.K.element([p2])])
        both = psi + grade_involution(psi)
        M = semisimple_rep_matrix(both, S, Sh)
        MT = semisimple_rep_matrix(transposition(both), S, Sh)
        cell = lambda R, j, k: (R[j, k][0].coords[0], R[j, k][1].coords[0])
        ok = [[cell(M, j, k) for k in range(2)] for j in range(2)] == [[(p1, p1), (0, 0)], [(p2, -p2), (0, 0)]]
        ok &= [[cell(MT, j, k) for k in range(2)] for j in range(2)] == [[(p1, p1), (p2, -p2)], [(0, 0), (0, 0)]]
        return ok

    def separation():
        J = orbit_sum_target(sig, S.f.value)
        fh = grade_involution(S.f.value)
        return (S.f.value * J == S.f.value and (fh * J).is_zero()
                and stabilizer(fh).elements == S.H.elements)

    def norm():
        tin = form_tensor(S, lambda x, y: t_inner(x, y, S))
        return tin == {((0, 0), (0, 0)): S.K.one(), ((1, 0), (1, 0)): S.K.one()}

    return [
        _check("Cl(2,1) stabilizer and transversal", group),
        _check("Cl(2,1) pair matrices of psi + psi^ and of T", pair_display),
        _check("Cl(2,1) f and f^ lie in different simple ideals", separation),
        _check("Cl(2,1) T-product psi1 phi1 + psi2 phi2", norm),
    ]


def example_cl24() -> list[Check]:
    sig = Signature(2, 4)
    S = _basis_from(sig, ["e15", "e26"])
    rng = random.Random(3)

    def shapes():
        return K_names(S) == ["1", "e3", "e4", "e34"] and [format_blade(m) for m in S.reps] == ["1", "e1", "e2", "e12"]

    def hermitian():
        for k in range(S.N):
            psi = S.assemble([random_k(S, rng) for _ in range(S.N)], k)
            if rep_matrix(transposition(psi), S) != adjoint(rep_matrix(psi, S)):
                return False
        return True

    return [
        _check("Cl(2,4) K = span{1, e3, e4, e34}, transversal [1, e1, e2, e12]", shapes),
        _check("Cl(2,4) [T(psi_k)] is the quaternionic adjoint", hermitian),
    ]


def K_names(S: SpinorBasis) -> list[str]:
    return S.K.names()


EXAMPLES: dict[tuple[int, int], Callable[[int], list[Check]]] = {
    (2, 2): lambda seed: example_cl22(seed),
    (3, 0): lambda seed: example_cl30(seed),
    (2, 1): lambda seed: example_cl21(seed),
    (2, 4): lambda seed: example_cl24(),
}


def examples_suite(sig: Signature | None = None, seed: int = 0) -> list[Check]:
    out = []
    for key, fn in EXAMPLES.items():
        if sig is None or key == (sig.p, sig.q):
            out += fn(seed)
    return out
