from fractions import Fraction

import pytest

from cliffspin.algebra import (
    Multivector,
    Signature,
    all_signatures,
    blade_mul,
    blade_square,
    blades_commute,
    parse_multivector,
    sparse_rank,
)
from cliffspin.idempotents import (
    Idempotent,
    RingType,
    central_idempotents,
    classify,
    find_commuting_set,
    is_idempotent,
    is_primitive,
    parse_factor_list,
    primitive_idempotent,
    radon_hurwitz,
)

ALL = all_signatures(9)
UP_TO_6 = all_signatures(6)


def corner_dim(f):
    """dim f Cl f, from the rank of the spanning set f e_b f."""
    sig = f.sig
    rows = []
    for b in sig.blades:
        x = f * Multivector.blade(sig, b) * f
        rows.append(dict(x.terms))
    return sparse_rank(rows)


def pseudoscalar_splits(sig):
    """The algebra has two simple components iff e_{1..n} is central and squares to +1."""
    top = (1 << sig.n) - 1
    central = all(blade_mul(top, 1 << i, sig) == blade_mul(1 << i, top, sig) for i in range(sig.n))
    return central and blade_square(top, sig) == 1


def test_radon_hurwitz_values():
    assert [radon_hurwitz(i) for i in range(17)] == [0, 1, 2, 2, 3, 3, 3, 3, 4, 5, 6, 6, 7, 7, 7, 7, 8]
    # periodic extension below zero
    assert [radon_hurwitz(i) for i in range(-8, 0)] == [-4, -3, -2, -2, -1, -1, -1, -1]
    for i in range(-20, 20):
        assert radon_hurwitz(i + 8) == radon_hurwitz(i) + 4


@pytest.mark.parametrize("sig", ALL, ids=str)
def test_simplicity_matches_pseudoscalar(sig):
    assert classify(sig).simple == (not pseudoscalar_splits(sig))


@pytest.mark.parametrize("sig", ALL, ids=str)
def test_dimension_count(sig):
    st = classify(sig)
    N, d = st.matrix_dim, st.ring.k_dim
    copies = 1 if st.simple else 2
    assert copies * N * N * d == sig.dim


@pytest.mark.parametrize("sig", UP_TO_6, ids=str)
def test_default_idempotent_is_primitive(sig):
    f = primitive_idempotent(sig)
    fv = f.value
    assert is_idempotent(fv)
    assert fv.transposition() == fv
    assert is_primitive(fv)
    assert corner_dim(fv) == classify(sig).ring.k_dim


@pytest.mark.parametrize("sig", ALL, ids=str)
def test_commuting_set_constraints(sig):
    T = find_commuting_set(sig)
    assert len(T) == classify(sig).k
    for i, t in enumerate(T):
        assert blade_square(t, sig) == 1
        for u in T[:i]:
            assert blades_commute(t, u)


def test_ring_examples():
    cases = {
        (2, 2): ("Mat(4,R)", RingType.REAL),
        (3, 0): ("Mat(2,C)", RingType.COMPLEX),
        (0, 2): ("Mat(1,H)", RingType.QUATERNION),
        (2, 1): ("Mat(2,R) + Mat(2,R)", RingType.DOUBLE_REAL),
        (0, 3): ("Mat(1,H) + Mat(1,H)", RingType.DOUBLE_QUATERNION),
        (2, 4): ("Mat(4,H)", RingType.QUATERNION),
    }
    for (p, q), (text, ring) in cases.items():
        st = classify(Signature(p, q))
        assert st.describe() == text
        assert st.ring is ring


def test_cl22_example_idempotent():
    sig = Signature(2, 2)
    f = primitive_idempotent(sig, (0b101, 0b1010))
    assert str(f) == "1/4(1+e13)(1+e24)"
    assert f.value == parse_multivector("1/4 + 1/4*e13 + 1/4*e24 - 1/4*e1234", sig)


def test_non_primitive_idempotent_rejected():
    sig = Signature(2, 2)
    g = parse_multivector("1/2 + 1/2*e13", sig)
    assert is_idempotent(g)
    assert not is_primitive(g)
    assert corner_dim(g) > 1


def test_is_primitive_requires_idempotent():
    with pytest.raises(ValueError):
        is_primitive(parse_multivector("e1", Signature(2, 0)))


def test_family_sums_to_one():
    sig = Signature(2, 4)
    f = primitive_idempotent(sig)
    total = Multivector.zero(sig)
    for g in f.family():
        total = total + g.value
        assert is_primitive(g.value)
    assert total == Multivector.scalar(sig, 1)


def test_conjugation_flips_signs():
    sig = Signature(2, 2)
    f = primitive_idempotent(sig, (0b101, 0b1010))
    g = f.conjugated_by(0b11)
    assert g.signs == (-1, -1)
    e12 = Multivector.blade(sig, 0b11)
    e12_inv = Multivector.blade(sig, 0b11, blade_square(0b11, sig))
    assert e12 * f.value * e12_inv == g.value


@pytest.mark.parametrize("factors, error", [
    ((0b1,), "needs exactly"),
    ((0b11, 0b101), "square"),
    ((0b101, 0b101), "dependent"),
])
def test_invalid_factor_sets(factors, error):
    with pytest.raises(ValueError, match=error):
        primitive_idempotent(Signature(2, 2), factors)


def test_anticommuting_factors_rejected():
    with pytest.raises(ValueError, match="anticommute"):
        Idempotent(Signature(2, 0), (0b1, 0b10), (1, 1))


def test_parse_factor_list():
    sig = Signature(2, 2)
    assert parse_factor_list("e13,-e24", sig) == ((0b101, 0b1010), (1, -1))


def test_central_idempotents():
    sig = Signature(2, 1)
    Jp, Jm = central_idempotents(sig)
    one = Multivector.scalar(sig, 1)
    assert Jp + Jm == one
    assert Jp * Jm == Multivector.zero(sig)
    assert is_idempotent(Jp) and is_idempotent(Jm)
    for b in sig.blades:
        e = Multivector.blade(sig, b)
        assert e * Jp == Jp * e
    assert central_idempotents(Signature(2, 2)) is None
    assert Jp.coefficient(0) == Fraction(1, 2)
