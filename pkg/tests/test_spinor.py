import random
from fractions import Fraction

import pytest

from cliffspin.algebra import (
    Multivector,
    Signature,
    all_signatures,
    mask_of,
    sparse_rank,
    transposition,
)
from cliffspin.idempotents import central_idempotents, classify, primitive_idempotent
from cliffspin.spinor import (
    RepMatrix,
    RepPair,
    SpinorBasis,
    adjoint,
    decompose_spinor,
    generic_rep_matrix,
    identity_matrix,
    k_conj,
    project_coordinates,
    rep_matrix,
    rep_matrix_direct,
    represent,
    semisimple_rep_matrix,
    structure_constants,
)


def basis(p, q, *names):
    sig = Signature(p, q)
    factors = tuple(mask_of(int(c) for c in name[1:]) for name in names) if names else None
    return SpinorBasis(primitive_idempotent(sig, factors))


def rand_mv(sig, rng, density=0.6):
    return Multivector(sig, {b: Fraction(rng.randint(-4, 4), rng.choice((1, 2)))
                             for b in sig.blades if rng.random() < density})


def flat(M):
    """Real coordinates of a matrix (or pair of matrices) as a sparse row."""
    mats = [M.first, M.second] if isinstance(M, RepPair) else [M]
    out, pos = {}, 0
    for A in mats:
        for row in A.rows:
            for x in row:
                for c in x.coords:
                    if c:
                        out[pos] = c
                    pos += 1
    return out


# --- division ring -----------------------------------------------------------------

def test_k_basis_examples():
    assert basis(2, 2, "e13", "e24").K.names() == ["1"]
    assert basis(3, 0, "e1").K.names() == ["1", "e23"]
    assert basis(2, 4, "e15", "e26").K.names() == ["1", "e3", "e4", "e34"]


def test_quaternion_relations():
    K = basis(2, 4, "e15", "e26").K
    one, i, j, k = (K.unit(a) for a in range(4))
    assert i * i == -one and j * j == -one and k * k == -one
    assert i * j == k and j * i == -k
    assert j * k == i and k * i == j
    x = K.element([1, 2, -3, Fraction(1, 2)])
    assert k_conj(x) == K.element([1, -2, 3, Fraction(-1, 2)])
    assert (x * k_conj(x)).is_real()


def test_complex_unit():
    K = basis(3, 0, "e1").K
    i = K.unit(1)
    assert i * i == -K.one()
    fv = K.f.value
    # the product of the multivectors matches the K product
    assert (i.as_multivector() * fv) * (i.as_multivector() * fv) == (i * i).times_f()


@pytest.mark.parametrize("sig", all_signatures(6), ids=str)
def test_k_is_closed_under_products(sig):
    S = SpinorBasis(primitive_idempotent(sig))
    fv = S.f.value
    units = [S.K.unit(a) for a in range(S.K.dim)]
    assert S.K.dim == classify(sig).ring.k_dim
    for x in units:
        for y in units:
            assert x.times_f() * y.times_f() == (x * y).times_f()
            assert fv * x.times_f() * fv == x.times_f()


# --- spinor coordinates ----------------------------------------------------------

def test_decompose_round_trip_cl24():
    S = basis(2, 4, "e15", "e26")
    sig = S.sig
    fv = S.f.value
    rng = random.Random(24)
    for _ in range(50):
        psi = rand_mv(sig, rng) * fv
        lam = decompose_spinor(psi, S)
        assert S.assemble(lam) == psi
        assert lam == project_coordinates(psi, S)


def test_decompose_rejects_non_spinor():
    S = basis(3, 0, "e1")
    with pytest.raises(ValueError):
        decompose_spinor(Multivector.scalar(S.sig, 1), S)


def test_cl30_spinor_coordinates():
    S = basis(3, 0, "e1")
    sig = S.sig
    fv = S.f.value
    a, b, c, d = (Fraction(x) for x in (3, -1, 2, 5))
    e2 = Multivector.blade(sig, 0b10)
    e23 = Multivector.blade(sig, 0b110)
    psi = fv * (a + e23 * b) + e2 * fv * (c + e23 * d)
    lam = decompose_spinor(psi, S)
    assert [x.coords for x in lam] == [(a, b), (c, d)]


@pytest.mark.parametrize("sig", all_signatures(5), ids=str)
def test_coordinates_for_every_orbit_member(sig):
    S = SpinorBasis(primitive_idempotent(sig))
    rng = random.Random(str(sig))
    for k in range(S.N):
        fk = S.orbit_idempotents[k].value
        psi = rand_mv(sig, rng) * fk
        assert S.assemble(S.coordinates(psi, k), k) == psi


# --- structure constants -----------------------------------------------------------

def test_cl22_structure_constants():
    S = basis(2, 2, "e13", "e24")
    C = structure_constants(S).matrix()
    signs = [[int(x.coords[0]) for x in row] for row in C]
    assert signs == [[1, 1, 1, -1], [1, 1, 1, -1], [1, -1, 1, 1], [1, -1, 1, 1]]


@pytest.mark.parametrize("sig", all_signatures(6), ids=str)
def test_structure_constants_by_products(sig):
    S = SpinorBasis(primitive_idempotent(sig))
    C = structure_constants(S)
    for l, ml in enumerate(S.reps):
        for k, mk in enumerate(S.reps):
            lhs = Multivector.blade(sig, ml) * Multivector.blade(sig, mk) * S.f.value
            j = C.target[l][k]
            rhs = S.elements[j] * C.c(l, k).as_multivector()
            assert lhs == rhs


# --- representation matrices ---------------------------------------------------------

@pytest.mark.parametrize("sig", all_signatures(6), ids=str)
def test_two_routes_agree(sig):
    S = SpinorBasis(primitive_idempotent(sig))
    rng = random.Random(str(sig) + "rep")
    for _ in range(4):
        u = rand_mv(sig, rng)
        assert rep_matrix(u, S) == rep_matrix_direct(u, S)
        if not S.structure.simple:
            assert rep_matrix(u, S.hatted) == rep_matrix_direct(u, S.hatted)


@pytest.mark.parametrize("sig", all_signatures(5), ids=str)
def test_representation_is_homomorphism(sig):
    S = SpinorBasis(primitive_idempotent(sig))
    rng = random.Random(str(sig) + "hom")
    one = Multivector.scalar(sig, 1)
    I = represent(one, S)
    if isinstance(I, RepPair):
        assert I.first == identity_matrix(S.K, S.N) == I.second
    else:
        assert I == identity_matrix(S.K, S.N)
    for _ in range(3):
        u, v = rand_mv(sig, rng), rand_mv(sig, rng)
        assert represent(u * v, S) == represent(u, S) @ represent(v, S)
        assert represent(u + v, S) == represent(u, S) + represent(v, S)


@pytest.mark.parametrize("sig", all_signatures(6), ids=str)
def test_representation_is_faithful(sig):
    S = SpinorBasis(primitive_idempotent(sig))
    rows = [flat(represent(Multivector.blade(sig, b), S)) for b in sig.blades]
    assert sparse_rank(rows) == sig.dim


@pytest.mark.parametrize("sig", all_signatures(6), ids=str)
def test_adjoint_small(sig):
    S = SpinorBasis(primitive_idempotent(sig))
    rng = random.Random(str(sig) + "adj")
    for _ in range(5):
        u = rand_mv(sig, rng)
        assert represent(transposition(u), S) == represent(u, S).adjoint()


@pytest.mark.parametrize("p, q", [(2, 1), (0, 3), (3, 2), (1, 4)])
def test_semisimple_pair_separates_components(p, q):
    S = SpinorBasis(primitive_idempotent(Signature(p, q)))
    Jp, Jm = central_idempotents(S.sig)
    I = identity_matrix(S.K, S.N)
    Z = RepMatrix(S.K, [[S.K.zero()] * S.N for _ in range(S.N)])
    assert Z.is_zero()
    f_in_plus = S.f.value * Jp == S.f.value
    first, second = semisimple_rep_matrix(Jp, S), semisimple_rep_matrix(Jm, S)
    if f_in_plus:
        assert (first.first, first.second) == (I, Z)
        assert (second.first, second.second) == (Z, I)
    else:
        assert (first.first, first.second) == (Z, I)
        assert (second.first, second.second) == (I, Z)


def test_semisimple_rejects_simple():
    with pytest.raises(ValueError):
        semisimple_rep_matrix(Multivector.scalar(Signature(2, 2), 1), basis(2, 2))


def test_adjoint_conjugates_entries():
    S = basis(3, 0, "e1")
    u = Multivector(S.sig, {0b10: 1, 0b111: 2})
    M = rep_matrix(u, S)
    A = adjoint(M)
    for j in range(S.N):
        for k in range(S.N):
            assert A[j, k] == k_conj(M[k, j])


def test_generic_matrix_evaluates_to_rep():
    S = basis(3, 0, "e1")
    sig = S.sig
    forms = generic_rep_matrix(S)
    rng = random.Random(30)
    u = rand_mv(sig, rng, density=1.0)
    vals = {pos: u.coefficient(b) for pos, b in enumerate(sig.blades, start=1)}
    M = rep_matrix(u, S)
    for j in range(S.N):
        for k in range(S.N):
            coords = tuple(sum((c * vals[p] for p, c in form.items()), Fraction(0)) for form in forms[j][k])
            assert M[j, k].coords == coords
