"""Acceptance gate: one test per criterion, exact arithmetic, zero tolerance.

Each test prints a PASS/FAIL line and the lines are collected again in the
terminal summary under "acceptance criteria".
"""
import csv
import io
import itertools
import random
import time
from contextlib import redirect_stdout
from fractions import Fraction

from cliffspin.algebra import (
    Multivector,
    Signature,
    all_signatures,
    left_regular_matrix,
    parse_blade,
    transposition,
)
from cliffspin.cli import main
from cliffspin.idempotents import central_idempotents, classify, primitive_idempotent
from cliffspin.norms import (
    beta,
    find_witness,
    form_tensor,
    format_form,
    parse_form,
    t_inner,
)
from cliffspin.spinor import (
    SpinorBasis,
    adjoint,
    rep_matrix,
    represent,
    structure_constants,
)
from cliffspin.tables import REFERENCE_ROWS
from cliffspin.vee import (
    StructureLabel,
    VeeGroup,
    expected_stabilizer_order,
    orbit,
    stabilizer,
)
from cliffspin.verify import props_suite

ALL = all_signatures(9)

# Printed labels whose group order disagrees with the order stated in the same
# row; the computed label is compared with the corrected value instead.
LABEL_ERRATA = {
    (0, 5): "(Z2)^2 x Z4",
    (1, 6): "(Z2)^3 x Z4",
    (7, 0): "(Z2)^3 x Z4",
    (2, 7): "(Z2)^4 x Z4",
    (8, 1): "(Z2)^4 x Z4",
}


def basis(p, q, *factors):
    sig = Signature(p, q)
    return SpinorBasis(primitive_idempotent(sig, tuple(parse_blade(t, sig) for t in factors)))


def dyadic(rng, k=4):
    return Fraction(rng.randint(-16, 16), 1 << rng.randint(0, k))


def real_entries(M):
    return [[x.coords[0] for x in row] for row in M.rows]


# --- 1 ----------------------------------------------------------------------------

def test_criterion_1_table_regeneration(criterion):
    with criterion(1, "table regeneration (orders, labels, generator orders), n <= 9") as rec:
        buf = io.StringIO()
        start = time.perf_counter()
        with redirect_stdout(buf):
            code = main(["tables", "all", "--format", "csv"])
        elapsed = time.perf_counter() - start
        assert code == 0
        rows = {(int(r["p"]), int(r["q"])): r for r in csv.DictReader(io.StringIO(buf.getvalue()))}
        assert len(rows) == len(REFERENCE_ROWS)
        errata_seen = []
        for ref in REFERENCE_ROWS:
            row = rows[(ref.p, ref.q)]
            key = f"Cl({ref.p},{ref.q})"
            assert int(row["stab_order"]) == ref.order == expected_stabilizer_order(ref.sig), key
            assert sorted(map(int, row["gen_orders"].split())) == sorted(ref.gen_orders), key
            printed = StructureLabel.parse(ref.label)
            if printed.order == ref.order:
                assert row["label"] == str(printed), f"{key}: {row['label']} != {ref.label}"
            else:
                assert (ref.p, ref.q) in LABEL_ERRATA, f"{key}: printed label has order {printed.order}"
                assert row["label"] == LABEL_ERRATA[(ref.p, ref.q)], key
                errata_seen.append(key)
        assert sorted(errata_seen) == sorted(f"Cl({p},{q})" for p, q in LABEL_ERRATA)
        assert elapsed < 60, f"{elapsed:.1f} s"
        rec.detail = (f"{len(REFERENCE_ROWS)} rows in {elapsed:.1f} s; "
                      f"{len(errata_seen)} printed labels inconsistent with their order, matched to corrections")


# --- 2 ----------------------------------------------------------------------------

def test_criterion_2_cl22_example(criterion):
    with criterion(2, "Cl(2,2) structure constants and summed spinor matrix") as rec:
        S = basis(2, 2, "e13", "e24")
        assert [S.sig.blade_index[m] for m in S.reps] == [0, 1, 2, 5]  # 1, e1, e2, e12
        C = real_entries_from(structure_constants(S).matrix())
        assert C == [[1, 1, 1, -1], [1, 1, 1, -1], [1, -1, 1, 1], [1, -1, 1, 1]]
        rng = random.Random("criterion-2")
        for _ in range(20):
            p = [dyadic(rng) for _ in range(4)]
            psi = Multivector.zero(S.sig)
            for k in range(4):
                psi = psi + S.assemble([S.K.element([x]) for x in p], k)
            want = [[p[0], p[1], p[2], -p[3]],
                    [p[1], p[0], p[3], -p[2]],
                    [p[2], -p[3], p[0], p[1]],
                    [p[3], -p[2], p[1], p[0]]]
            assert real_entries(rep_matrix(psi, S)) == want
        rec.detail = "C matrix entry-for-entry, 20 random points"


def real_entries_from(C):
    return [[x.coords[0] for x in row] for row in C]


# --- 3 ----------------------------------------------------------------------------

def test_criterion_3_cl30_examples(criterion):
    with criterion(3, "Cl(3,0) matrix units, generic [u] and [T(u)]") as rec:
        S = basis(3, 0, "e1")
        sig, K = S.sig, S.K
        f1, f2 = (g.value for g in S.orbit_idempotents)
        e2 = Multivector.blade(sig, parse_blade("e2"))
        z, o = K.zero(), K.one()
        units = [(f1, [[o, z], [z, z]]), (e2 * f1, [[z, z], [o, z]]),
                 (f2, [[z, z], [z, o]]), (e2 * f2, [[z, o], [z, z]])]
        for x, want in units:
            assert [list(r) for r in rep_matrix(x, S).rows] == want
        rng = random.Random("criterion-3")
        for _ in range(20):
            u = [dyadic(rng) for _ in range(8)]
            x = Multivector.from_coefficients(sig, u)
            u1, u2, u3, u4, u5, u6, u7, u8 = u
            want = [[K.element([u1 + u2, u8 + u7]), K.element([u5 + u3, -u4 - u6])],
                    [K.element([-u5 + u3, u4 - u6]), K.element([u1 - u2, u8 - u7])]]
            want_t = [[K.element([u1 + u2, -u8 - u7]), K.element([-u5 + u3, -u4 + u6])],
                      [K.element([u5 + u3, u4 + u6]), K.element([u1 - u2, -u8 + u7])]]
            assert [list(r) for r in rep_matrix(x, S).rows] == want
            assert [list(r) for r in rep_matrix(transposition(x), S).rows] == want_t
        rec.detail = "4 matrix units, 20 random points"


# --- 4 ----------------------------------------------------------------------------

def test_criterion_4_adjoint_theorem(criterion):
    with criterion(4, "rep(T(u)) = adjoint(rep(u)), 100 dyadic u per signature, n <= 9") as rec:
        kinds = set()
        for sig in ALL:
            S = SpinorBasis(primitive_idempotent(sig))
            rng = random.Random(f"criterion-4:{sig.p},{sig.q}")
            for _ in range(100):
                u = Multivector(sig, {b: dyadic(rng) for b in sig.blades})
                M = represent(u, S)
                assert represent(transposition(u), S) == M.adjoint(), str(sig)
            kinds.add(classify(sig).ring.value)
        rec.detail = f"{len(ALL)} signatures, rings {', '.join(sorted(kinds))}"


# --- 5 ----------------------------------------------------------------------------

def test_criterion_5_left_regular_transpose(criterion):
    with criterion(5, "[L_T(u)] = [L_u]^T, 50 u per signature, n <= 6") as rec:
        sigs = all_signatures(6)
        start = time.perf_counter()
        for sig in sigs:
            rng = random.Random(f"criterion-5:{sig.p},{sig.q}")
            for _ in range(50):
                u = Multivector(sig, {b: dyadic(rng) for b in sig.blades})
                assert left_regular_matrix(transposition(u)) == left_regular_matrix(u).T, str(sig)
        elapsed = time.perf_counter() - start
        assert elapsed < 10, f"{elapsed:.1f} s"
        rec.detail = f"{len(sigs)} signatures in {elapsed:.1f} s"


# --- 6 ----------------------------------------------------------------------------

def test_criterion_6_orbit_accounting(criterion):
    with criterion(6, "orbit sizes, orbit-stabilizer product, annihilation and sums, n <= 9") as rec:
        cases = 0
        for sig in ALL:
            st = classify(sig)
            f = primitive_idempotent(sig)
            fv = f.value
            idems = [fv] if st.simple else [fv, fv.grade_involution()]
            J = central_idempotents(sig)
            members = []
            for g in idems:
                O = orbit(g)
                H = stabilizer(g)
                assert len(O) == len(set(O)) == (1 << f.k if st.simple else 1 << (f.k - 1)), str(sig)
                assert len(O) * H.order == 1 << (sig.n + 1), str(sig)
                total = sum(O, Multivector.zero(sig))
                if st.simple:
                    assert total == Multivector.scalar(sig, 1), str(sig)
                else:
                    assert total in J, str(sig)
                members += O
                cases += 1
            if not st.simple:
                assert sum(members, Multivector.zero(sig)) == Multivector.scalar(sig, 1)
            for x, y in itertools.permutations(members, 2):
                assert (x * y).is_zero(), str(sig)
        rec.detail = f"{cases} orbits over {len(ALL)} signatures"


# --- 7 ----------------------------------------------------------------------------

def test_criterion_7_semisimple_separation(criterion):
    with criterion(7, "semisimple separation for Cl(2,1), Cl(0,3), Cl(3,2)") as rec:
        for p, q in ((2, 1), (0, 3), (3, 2)):
            sig = Signature(p, q)
            f = primitive_idempotent(sig).value
            fh = f.grade_involution()
            O, Oh = orbit(f), set(orbit(fh))
            G = VeeGroup(sig)
            for g in G.elements():
                for x in O:
                    assert G.conjugate(g, x) not in Oh, str(sig)
            assert stabilizer(f).elements == stabilizer(fh).elements, str(sig)
        rec.detail = "every g in G and every orbit member checked"


# --- 8 ----------------------------------------------------------------------------

def test_criterion_8_property_suites(criterion):
    with criterion(8, "Lemma/Proposition property suites, n <= 9") as rec:
        total = 0
        failed = []
        for sig in ALL:
            for c in props_suite(sig):
                total += 1
                if not c.passed:
                    failed.append(f"{sig}: {c.name} {c.detail}")
        assert not failed, "; ".join(failed[:3])
        rec.detail = f"{total} checks over {len(ALL)} signatures"


# --- 9 ----------------------------------------------------------------------------

CL22_BETA_PLUS = "(-psi1*phi4+psi3*phi2+psi4*phi1-psi2*phi3)f"
CL22_BETA_MINUS = "(-psi1*phi4-psi3*phi2+psi4*phi1+psi2*phi3)f"
CL30_BETA_MINUS = ("(psi22*phi12-psi21*phi11-psi12*phi22+psi11*phi21)"
                   " + (-psi22*phi11-psi21*phi12+psi12*phi21+psi11*phi22)e23")


def test_criterion_9_norm_comparisons(criterion):
    with criterion(9, "norm comparisons: Cl(2,2) beta+-, Cl(3,0), (anti-)Euclidean n <= 5") as rec:
        S = basis(2, 2, "e13", "e24")
        s = find_witness(S, "+")
        assert s == find_witness(S, "-") == parse_blade("e12")
        bp = form_tensor(S, lambda x, y: beta(x, y, S, "+", s))
        bm = form_tensor(S, lambda x, y: beta(x, y, S, "-", s))
        tin = form_tensor(S, lambda x, y: t_inner(x, y, S))
        # same terms and signs as printed, in canonical term order
        assert format_form(bp, S.K) == "(-psi1*phi4 - psi2*phi3 + psi3*phi2 + psi4*phi1)f"
        assert format_form(bm, S.K) == "(-psi1*phi4 + psi2*phi3 - psi3*phi2 + psi4*phi1)f"
        assert bp == parse_form(CL22_BETA_PLUS, S.K) and bm == parse_form(CL22_BETA_MINUS, S.K)
        assert tin != bp and tin != bm

        S3 = basis(3, 0, "e1")
        tin3 = form_tensor(S3, lambda x, y: t_inner(x, y, S3))
        bp3 = form_tensor(S3, lambda x, y: beta(x, y, S3, "+"))
        bm3 = form_tensor(S3, lambda x, y: beta(x, y, S3, "-"))
        assert tin3 == bp3
        assert bm3 == parse_form(CL30_BETA_MINUS, S3.K)
        assert tin3 != bm3

        n_sigs = 0
        for sig in all_signatures(5):
            if sig.p and sig.q:
                continue
            Sx = SpinorBasis(primitive_idempotent(sig))
            kind = "+" if sig.q == 0 else "-"
            w = find_witness(Sx, kind)
            t = form_tensor(Sx, lambda x, y: t_inner(x, y, Sx))
            assert t == form_tensor(Sx, lambda x, y: beta(x, y, Sx, kind, w)), str(sig)
            n_sigs += 1
        rec.detail = f"Cl(2,2) and Cl(3,0) formulas, {n_sigs} (anti-)Euclidean signatures"


def test_adjoint_helper_matches_method():
    # small guard that the function and the method agree
    S = basis(3, 0, "e1")
    u = Multivector(S.sig, {0b10: 1, 0b110: Fraction(1, 2)})
    M = rep_matrix(u, S)
    assert adjoint(M) == M.adjoint()
