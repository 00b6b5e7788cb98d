"""The vee group G = {+-e_A} of Cl(p,q) and its action on idempotents.

Group elements are :class:`SignedBlade` pairs.  Inverses come from the
transposition anti-involution, and conjugation of a multivector is an honest
triple product g u T(g) so that the group-theoretic shortcuts used elsewhere
can be checked against it.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .algebra import (
    Multivector,
    Signature,
    SignedBlade,
    blade_mul,
    blade_square,
    blades_commute,
    format_blade,
    transposition,
)
from .idempotents import Idempotent, central_idempotents, classify

ONE = SignedBlade(1, 0)
MINUS_ONE = SignedBlade(-1, 0)


class F2Space:
    """Subspace of GF(2)^n spanned by blade masks, kept in echelon form."""

    def __init__(self, masks: Iterable[int] = ()):
        self._basis: dict[int, int] = {}  # leading bit -> vector
        for m in masks:
            self.add(m)

    def reduce(self, x: int) -> int:
        for lead in sorted(self._basis, reverse=True):
            if x & lead:
                x ^= self._basis[lead]
        return x

    def add(self, x: int) -> bool:
        x = self.reduce(x)
        if not x:
            return False
        lead = 1 << (x.bit_length() - 1)
        # keep the basis fully reduced so that reduce() is canonical
        for k in list(self._basis):
            if self._basis[k] & lead:
                self._basis[k] ^= x
        self._basis[lead] = x
        return True

    def __contains__(self, x: int) -> bool:
        return self.reduce(x) == 0

    @property
    def dim(self) -> int:
        return len(self._basis)


class VeeGroup:
    """The finite 2-group of signed blades of a signature (order 2^(n+1))."""

    def __init__(self, sig: Signature):
        self.sig = sig

    @property
    def order(self) -> int:
        return 2 * self.sig.dim

    def elements(self) -> list[SignedBlade]:
        return [SignedBlade(s, b) for b in self.sig.blades for s in (1, -1)]

    def mul(self, a: SignedBlade, b: SignedBlade) -> SignedBlade:
        return a.mul(b, self.sig)

    def inverse(self, a: SignedBlade) -> SignedBlade:
        return a.inverse(self.sig)

    def element_order(self, a: SignedBlade) -> int:
        if a.mask == 0:
            return 1 if a.sign > 0 else 2
        return 2 if blade_square(a.mask, self.sig) == 1 else 4

    def conjugate(self, g: SignedBlade, u: Multivector) -> Multivector:
        """g u g^{-1}, with g^{-1} computed as T(g)."""
        gm = g.to_multivector(self.sig)
        return gm * u * transposition(gm)


def _commute(a: SignedBlade, b: SignedBlade) -> bool:
    return blades_commute(a.mask, b.mask)


def generate(sig: Signature, gens: Iterable[SignedBlade]) -> frozenset[SignedBlade]:
    """Closure of a set of signed blades under multiplication."""
    gens = list(gens)
    seen = {ONE}
    frontier = [ONE]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x.mul(g, sig)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


@dataclass(frozen=True)
class Subgroup:
    sig: Signature
    elements: frozenset[SignedBlade]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: SignedBlade) -> bool:
        return g in self.elements

    @cached_property
    def masks(self) -> frozenset[int]:
        return frozenset(g.mask for g in self.elements)

    @cached_property
    def mask_space(self) -> F2Space:
        return F2Space(self.masks)

    def sorted_elements(self) -> list[SignedBlade]:
        idx = self.sig.blade_index
        return sorted(self.elements, key=lambda g: (idx[g.mask], -g.sign))

    def positive_blades(self) -> list[int]:
        """Masks of H in monomial order (each mask once)."""
        idx = self.sig.blade_index
        return sorted(self.masks, key=idx.__getitem__)

    def is_abelian(self) -> bool:
        ms = self.positive_blades()
        return all(blades_commute(a, b) for a, b in itertools.combinations(ms, 2))

    def center(self) -> "Subgroup":
        ms = self.positive_blades()
        return Subgroup(self.sig, frozenset(g for g in self.elements
                                            if all(blades_commute(g.mask, m) for m in ms)))


def stabilizer(f: Idempotent | Multivector) -> Subgroup:
    """{g in G : g f g^{-1} = f}, by checking every signed blade."""
    fv = f.value if isinstance(f, Idempotent) else f
    G = VeeGroup(fv.sig)
    out = set()
    for b in fv.sig.blades:
        g = SignedBlade(1, b)
        if G.conjugate(g, fv) == fv:
            out.add(g)
            out.add(SignedBlade(-1, b))
    return Subgroup(fv.sig, frozenset(out))


def pointwise_stabilizes(H: Subgroup, T: Sequence[int]) -> bool:
    """True when every element of H commutes with every blade in T."""
    return all(blades_commute(h, t) for h in H.masks for t in T)


def commutator_subgroup(H: Subgroup) -> Subgroup:
    sig = H.sig
    comms = set()
    for a in H.elements:
        for b in H.elements:
            ab = a.mul(b, sig)
            comms.add(ab.mul(a.inverse(sig), sig).mul(b.inverse(sig), sig))
    return Subgroup(sig, generate(sig, comms))


def is_normal(H: Subgroup) -> bool:
    sig = H.sig
    for g in VeeGroup(sig).elements():
        gi = g.inverse(sig)
        for h in H.elements:
            if g.mul(h, sig).mul(gi, sig) not in H.elements:
                return False
    return True


@dataclass(frozen=True)
class Transversal:
    """Left coset representatives m_i of H in G, with m_1 = 1."""

    sig: Signature
    reps: tuple[int, ...]
    squares: tuple[int, ...]
    H: Subgroup = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.reps)

    @cached_property
    def _key_index(self) -> dict[int, int]:
        space = self.H.mask_space
        return {space.reduce(m): i for i, m in enumerate(self.reps)}

    def coset_of(self, mask: int) -> int:
        """Index i with e_mask in m_i H."""
        return self._key_index[self.H.mask_space.reduce(mask)]

    def format(self) -> list[str]:
        return [format_blade(m, self.sig.n) for m in self.reps]


def transversal(f: Idempotent | Multivector, H: Subgroup | None = None) -> Transversal:
    """Greedy sweep of the positive blades in monomial order, one per new coset."""
    fv = f.value if isinstance(f, Idempotent) else f
    sig = fv.sig
    if H is None:
        H = stabilizer(fv)
    space = H.mask_space
    seen: set[int] = set()
    reps = []
    for b in sig.blades:
        key = space.reduce(b)
        if key not in seen:
            seen.add(key)
            reps.append(b)
    return Transversal(sig, tuple(reps), tuple(blade_square(m, sig) for m in reps), H)


def orbit(f: Idempotent | Multivector, T: Transversal | None = None) -> list[Multivector]:
    """The conjugacy orbit m_i f m_i^{-1}, in transversal order."""
    fv = f.value if isinstance(f, Idempotent) else f
    if T is None:
        T = transversal(fv)
    G = VeeGroup(fv.sig)
    return [G.conjugate(SignedBlade(1, m), fv) for m in T.reps]


def orbit_by_sweep(f: Idempotent | Multivector) -> list[Multivector]:
    """Orbit computed without a stabilizer: conjugate by every blade, keep new ones."""
    fv = f.value if isinstance(f, Idempotent) else f
    G = VeeGroup(fv.sig)
    out: list[Multivector] = []
    seen = set()
    for b in fv.sig.blades:
        x = G.conjugate(SignedBlade(1, b), fv)
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def orbit_sum_target(sig: Signature, f: Multivector) -> Multivector:
    """What the orbit of f sums to: 1, or the central idempotent J+- with f J = f."""
    cs = central_idempotents(sig)
    if cs is None:
        return Multivector.scalar(sig, 1)
    jp, jm = cs
    return jp if f * jp == f else jm


# --- structure labels ---------------------------------------------------------

@dataclass(frozen=True)
class StructureLabel:
    """Isomorphism type core x (Z2)^z2 x (Z4)^z4 with core in {None, F2, F3}.

    F2 is the quaternion group of order 8, F3 the order-16 group generated
    by three pairwise anticommuting elements of order 4.
    """

    core: str | None
    z2: int
    z4: int

    @property
    def order(self) -> int:
        base = {None: 1, "F2": 8, "F3": 16}[self.core]
        return base * 2 ** self.z2 * 4 ** self.z4

    def __str__(self) -> str:
        parts = [self.core] if self.core else []
        for name, e in (("Z2", self.z2), ("Z4", self.z4)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"({name})^{e}")
        return " x ".join(parts) if parts else "1"

    @classmethod
    def parse(cls, text: str) -> "StructureLabel":
        core, z2, z4 = None, 0, 0
        for part in text.replace("×", "x").split(" x "):
            part = part.strip()
            if part in ("F2", "F3"):
                core = part
                continue
            base, _, exp = part.partition("^")
            base = base.strip("()")
            e = int(exp) if exp else 1
            if base == "Z2":
                z2 += e
            elif base == "Z4":
                z4 += e
            else:
                raise ValueError(f"unknown factor {part!r}")
        return cls(core, z2, z4)


UNRESOLVED = "UNRESOLVED"


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    abelian: bool
    center_order: int
    order_histogram: tuple[tuple[int, int], ...]
    generators: tuple[SignedBlade, ...]
    gen_orders: tuple[int, ...]
    label: StructureLabel | str

    def format_generators(self, n: int | None = None) -> str:
        return ", ".join(g.format(n) for g in self.generators)


def _element_order(g: SignedBlade, sig: Signature) -> int:
    return VeeGroup(sig).element_order(g)


def greedy_generators(H: Subgroup) -> list[SignedBlade]:
    """Minimal generating set: blades of H in monomial order whose masks are
    F2-independent, with -1 put first when it is not already generated."""
    sig = H.sig
    chosen: list[SignedBlade] = []
    space = F2Space()
    for m in H.positive_blades():
        if m and space.add(m):
            chosen.append(SignedBlade(1, m))
    if MINUS_ONE in H.elements and MINUS_ONE not in generate(sig, chosen):
        chosen.insert(0, MINUS_ONE)
    return chosen


def find_generating_set(H: Subgroup, orders: Sequence[int]) -> list[SignedBlade] | None:
    """A generating set of H whose element orders match ``orders`` as a multiset.

    The masks of such a set form an F2-basis of the mask space of H, plus -1
    when the profile has one slot more than that dimension.  Bases with a
    given number of order-4 blades are reached by single exchanges walking
    from a basis with the fewest of them to one with the most; each step
    changes the count by at most one.  Returns None when no such set exists.
    """
    sig = H.sig
    want = Counter(orders)
    if set(want) - {2, 4}:
        return None
    d = H.mask_space.dim
    size = sum(want.values())
    use_minus = size == d + 1
    if use_minus:
        if not want[2] or MINUS_ONE not in H.elements:
            return None
        want[2] -= 1
    elif size != d:
        return None
    pool = [g for g in H.sorted_elements() if g.sign > 0 and g.mask]
    order = {g: _element_order(g, sig) for g in pool}

    def greedy(first: int) -> list[SignedBlade]:
        space = F2Space()
        return [g for g in sorted(pool, key=lambda g: order[g] != first) if space.add(g.mask)]

    def independent(gs: list[SignedBlade]) -> bool:
        return F2Space(g.mask for g in gs).dim == len(gs)

    X, Y = greedy(2), greedy(4)
    count = lambda gs: sum(1 for g in gs if order[g] == 4)
    while count(X) != want[4]:
        missing = [g for g in Y if g not in X]
        if not missing:
            return None
        a = missing[0]
        for x in [g for g in X if g not in Y]:
            trial = [a if g == x else g for g in X]
            if independent(trial):
                X = trial
                break
        else:
            return None
    gens = ([MINUS_ONE] if use_minus else []) + sorted(X, key=lambda g: sig.blade_index[g.mask])
    return gens if len(generate(sig, gens)) == H.order else None


def _clean_presentation(sig: Signature, gens: Sequence[SignedBlade], H: Subgroup) -> StructureLabel | None:
    """Label from a generating set of pairwise anticommuting order-4 elements
    and central involutions, when the set has that shape and is independent."""
    fours = [g for g in gens if _element_order(g, sig) == 4]
    twos = [g for g in gens if _element_order(g, sig) == 2]
    if len(fours) not in (2, 3):
        return None
    if not all(not _commute(a, b) for a, b in itertools.combinations(fours, 2)):
        return None
    if not all(_commute(z, h) for z in twos for h in gens):
        return None
    core = "F2" if len(fours) == 2 else "F3"
    label = StructureLabel(core, len(twos), 0)
    return label if label.order == H.order == len(generate(sig, gens)) else None


def _search_presentation(H: Subgroup) -> StructureLabel | None:
    sig = H.sig
    elems = [g for g in H.sorted_elements() if g.sign > 0 and g.mask]
    fours = [g for g in elems if _element_order(g, sig) == 4]
    center = H.center()
    cz = [g for g in center.sorted_elements() if g.sign > 0 and g.mask and _element_order(g, sig) == 2]
    for size in (3, 2):
        for combo in itertools.combinations(fours, size):
            if any(_commute(a, b) for a, b in itertools.combinations(combo, 2)):
                continue
            gens = list(combo)
            space = F2Space(g.mask for g in gens)
            if space.dim != size:
                continue
            for z in cz:
                if space.add(z.mask):
                    gens.append(z)
            lab = _clean_presentation(sig, gens, H)
            if lab is not None:
                return lab
    return None


def _abelian_certificate(H: Subgroup) -> tuple[list[SignedBlade], StructureLabel]:
    sig = H.sig
    elems = H.sorted_elements()
    inv = sum(1 for g in elems if g.mask == 0 or _element_order(g, sig) <= 2)
    log_order = H.order.bit_length() - 1
    log_inv = inv.bit_length() - 1
    z4 = log_order - log_inv
    z2 = log_inv - z4
    gens: list[SignedBlade] = []
    cur = generate(sig, gens)
    # order-4 generators first, then involutions, each outside the span so far
    for want in (4, 2):
        for g in elems:
            if sum(1 for x in gens if _element_order(x, sig) == want) == (z4 if want == 4 else z2):
                break
            if _element_order(g, sig) != want or g in cur:
                continue
            new = generate(sig, gens + [g])
            if len(new) == len(cur) * want:
                gens.append(g)
                cur = new
    label = StructureLabel(None, z2, z4)
    if len(cur) != H.order:
        raise RuntimeError("could not certify abelian decomposition")
    return gens, label


def fingerprint(H: Subgroup, gen_orders: Sequence[int] | None = None) -> GroupFingerprint:
    """Isomorphism data for a subgroup of the vee group.

    ``gen_orders`` requests a generating set with that order profile; the
    canonical greedy set is used otherwise.
    """
    sig = H.sig
    elems = H.sorted_elements()
    hist = Counter(1 if g == ONE else _element_order(g, sig) for g in elems)
    abelian = H.is_abelian()
    if gen_orders is not None:
        gens = find_generating_set(H, gen_orders)
        if gens is None:
            raise ValueError(f"no generating set with orders {sorted(gen_orders)}")
    else:
        gens = greedy_generators(H)
    if abelian:
        _, label = _abelian_certificate(H)
    else:
        label = _clean_presentation(sig, gens, H) or _search_presentation(H) or UNRESOLVED
    return GroupFingerprint(
        order=H.order,
        abelian=abelian,
        center_order=H.center().order,
        order_histogram=tuple(sorted(hist.items())),
        generators=tuple(gens),
        gen_orders=tuple(_element_order(g, sig) for g in gens),
        label=label,
    )


def expected_stabilizer_order(sig: Signature) -> int:
    from .idempotents import radon_hurwitz

    st = classify(sig)
    r = radon_hurwitz(sig.q - sig.p)
    return 2 ** ((1 if st.simple else 2) + sig.p + r)


def coset_permutation(m: SignedBlade, T: Transversal, f: Multivector) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Permutation of the transversal induced by left multiplication with m.

    Entry i of the permutation is j with m m_i in m_j H.  The signs are those
    of the coset representative r of m: r m_i f = sign_i m_j f.
    """
    sig = T.sig
    perm = []
    for mi in T.reps:
        _, b = blade_mul(m.mask, mi, sig)
        perm.append(T.coset_of(b))
    r = T.reps[T.coset_of(m.mask)]
    rv = Multivector.blade(sig, r)
    signs = []
    for i, mi in enumerate(T.reps):
        lhs = rv * Multivector.blade(sig, mi) * f
        rhs = Multivector.blade(sig, T.reps[perm[i]]) * f
        if lhs == rhs:
            signs.append(1)
        elif lhs == -rhs:
            signs.append(-1)
        else:
            raise ValueError("representative does not permute the spinor basis up to sign")
    return tuple(perm), tuple(signs)
