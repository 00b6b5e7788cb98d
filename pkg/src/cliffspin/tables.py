"""Stabilizer tables for n <= 9.

Five classes are tabulated: real simple, complex, quaternionic simple, real
semisimple and quaternionic semisimple.  Each reference row stores the
factors of a primitive idempotent together with the published generating
set, generator orders and isomorphism label of its stabilizer.  Rows can be
regenerated from those factors or from the engine's own idempotent search.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

from .algebra import Signature, parse_blade
from .idempotents import RingType, classify, primitive_idempotent
from .vee import expected_stabilizer_order, fingerprint, stabilizer

CLASS_NAMES = {
    1: "real simple",
    2: "complex",
    3: "quaternionic simple",
    4: "real semisimple",
    5: "quaternionic semisimple",
}


@dataclass(frozen=True)
class ReferenceRow:
    table: int
    p: int
    q: int
    factors: tuple[str, ...]
    generators: tuple[str, ...]
    gen_orders: tuple[int, ...]
    label: str

    @property
    def sig(self) -> Signature:
        return Signature(self.p, self.q)

    @property
    def order(self) -> int:
        """The stabilizer order stated for this row (the product formula)."""
        return expected_stabilizer_order(self.sig)


def _row(table, p, q, factors, gens, orders, label):
    return ReferenceRow(table, p, q, tuple(factors.split()), tuple(gens.split()), tuple(orders), label)


def _real(table, p, q, factors):
    k = len(factors.split())
    return _row(table, p, q, factors, "-1 " + factors, (2,) * (k + 1),
                f"(Z2)^{k + 1}" if k else "Z2")


REFERENCE_ROWS: tuple[ReferenceRow, ...] = (
    _real(1, 1, 1, "e12"),
    _real(1, 2, 0, "e1"),
    _real(1, 2, 2, "e13 e24"),
    _real(1, 3, 1, "e1 e34"),
    _real(1, 0, 6, "e123 e146 e345"),
    _real(1, 3, 3, "e14 e25 e36"),
    _real(1, 4, 2, "e1 e35 e46"),
    _real(1, 0, 8, "e123 e146 e345 e367"),
    _real(1, 1, 7, "e18 e234 e257 e456"),
    _real(1, 4, 4, "e15 e26 e37 e48"),
    _real(1, 5, 3, "e1 e36 e47 e58"),
    _real(1, 8, 0, "e1 e2345 e2468 e4567"),

    _row(2, 1, 2, "e13", "e2 e13", (4, 2), "Z2 x Z4"),
    _row(2, 3, 0, "e1", "e1 e23", (2, 4), "Z2 x Z4"),
    _row(2, 0, 5, "e123 e345", "e3 e12 e45", (4, 4, 4), "(Z4)^3"),
    _row(2, 2, 3, "e14 e25", "e3 e14 e25", (4, 2, 2), "(Z2)^2 x Z4"),
    _row(2, 4, 1, "e1 e45", "e1 e23 e45", (2, 4, 2), "(Z2)^2 x Z4"),
    _row(2, 1, 6, "e17 e234 e456", "e4 e17 e23 e56", (4, 2, 4, 4), "Z2 x (Z4)^3"),
    _row(2, 3, 4, "e15 e26 e37", "e4 e15 e26 e37", (4, 2, 2, 2), "(Z2)^3 x Z4"),
    _row(2, 5, 2, "e1 e46 e57", "e1 e23 e46 e57", (2, 4, 2, 2), "(Z2)^3 x Z4"),
    _row(2, 7, 0, "e1 e2345 e4567", "e1 e23 e45 e67", (2, 4, 4, 4), "Z2 x (Z4)^3"),
    _row(2, 0, 9, "e123 e146 e345 e367", "e89 e123 e146 e157 e256", (4, 2, 2, 2, 2), "(Z2)^4 x Z4"),
    _row(2, 2, 7, "e18 e29 e345 e567", "e5 e18 e29 e34 e67", (4, 2, 2, 4, 4), "(Z2)^2 x (Z4)^3"),
    _row(2, 4, 5, "e16 e27 e38 e49", "e5 e16 e27 e38 e49", (4, 2, 2, 2, 2), "(Z2)^4 x Z4"),
    _row(2, 6, 3, "e1 e47 e58 e69", "e1 e23 e47 e58 e69", (2, 4, 2, 2, 2), "(Z2)^4 x Z4"),
    _row(2, 8, 1, "e1 e89 e2345 e4567", "e1 e23 e45 e67 e89", (2, 4, 4, 4, 2), "(Z2)^2 x (Z4)^3"),

    _row(3, 0, 4, "e123", "e1 e2 e3", (4, 4, 4), "F3"),
    _row(3, 1, 3, "e14", "e2 e3 e14", (4, 4, 2), "F2 x Z2"),
    _row(3, 4, 0, "e1", "e1 e23 e24", (2, 4, 4), "F2 x Z2"),
    _row(3, 1, 5, "e16 e234", "e2 e3 e4 e16", (4, 4, 4, 2), "F3 x Z2"),
    _row(3, 2, 4, "e15 e26", "e3 e4 e15 e26", (4, 4, 2, 2), "F2 x (Z2)^2"),
    _row(3, 5, 1, "e1 e56", "e1 e23 e24 e56", (2, 4, 4, 2), "F2 x (Z2)^2"),
    _row(3, 6, 0, "e1 e2345", "e1 e23 e24 e25", (2, 4, 4, 4), "F3 x Z2"),
    _row(3, 2, 6, "e17 e28 e345", "e3 e4 e5 e17 e28", (4, 4, 4, 2, 2), "F3 x (Z2)^2"),
    _row(3, 3, 5, "e16 e27 e38", "e4 e5 e16 e27 e38", (4, 4, 2, 2, 2), "F2 x (Z2)^3"),
    _row(3, 6, 2, "e1 e57 e68", "e1 e23 e34 e57 e68", (2, 4, 4, 2, 2), "F2 x (Z2)^3"),
    _row(3, 7, 1, "e1 e78 e2345", "e1 e23 e24 e25 e78", (2, 4, 4, 4, 2), "F3 x (Z2)^2"),

    _real(4, 2, 1, "e1 e23"),
    _real(4, 3, 2, "e1 e24 e35"),
    _real(4, 0, 7, "e123 e146 e345 e367"),
    _real(4, 4, 3, "e1 e25 e36 e47"),
    _real(4, 5, 4, "e1 e26 e37 e48 e59"),
    _real(4, 9, 0, "e1 e2345 e2367 e2389 e2468"),
    _real(4, 1, 8, "e1 e2345 e2367 e2389 e2468"),

    _row(5, 0, 3, "e123", "e1 e2 e3", (4, 4, 4), "F3"),
    _row(5, 5, 0, "e1 e2345", "e1 e23 e24 e25", (2, 4, 4, 4), "F3 x Z2"),
    _row(5, 1, 4, "e15 e234", "e2 e3 e4 e15", (4, 4, 4, 2), "F3 x Z2"),
    _row(5, 2, 5, "e16 e27 e345", "e3 e4 e5 e16 e27", (4, 4, 4, 2, 2), "F3 x (Z2)^2"),
    _row(5, 6, 1, "e1 e67 e2345", "e1 e23 e24 e25 e67", (2, 4, 4, 4, 2), "F3 x (Z2)^2"),
    _row(5, 7, 2, "e1 e28 e39 e4567", "e1 e28 e39 e45 e56 e57", (2, 2, 2, 4, 4, 4), "F3 x (Z2)^3"),
    _row(5, 3, 6, "e1 e24 e35 e6789", "e1 e24 e35 e67 e68 e69", (2, 2, 2, 4, 4, 4), "F3 x (Z2)^3"),
)


def reference_rows(table: int | None = None) -> list[ReferenceRow]:
    return [r for r in REFERENCE_ROWS if table is None or r.table == table]


def table_of(sig: Signature) -> int:
    st = classify(sig)
    if st.simple:
        return {RingType.REAL: 1, RingType.COMPLEX: 2, RingType.QUATERNION: 3}[st.ring]
    return 4 if st.ring is RingType.DOUBLE_REAL else 5


@dataclass(frozen=True)
class TableRow:
    table: int
    p: int
    q: int
    idempotent: str
    stab_order: int
    label: str
    generators: tuple[str, ...]
    gen_orders: tuple[int, ...]


def compute_row(sig: Signature, factors: tuple[int, ...] | None = None,
                gen_orders: tuple[int, ...] | None = None) -> TableRow:
    """Stabilizer data of the idempotent with the given factors (all signs +)."""
    f = primitive_idempotent(sig, factors)
    H = stabilizer(f)
    fp = fingerprint(H, gen_orders)
    return TableRow(
        table=table_of(sig),
        p=sig.p,
        q=sig.q,
        idempotent=str(f),
        stab_order=fp.order,
        label=str(fp.label),
        generators=tuple(g.format(sig.n) for g in fp.generators),
        gen_orders=fp.gen_orders,
    )


def regenerate(table: int | None = None, source: str = "reference") -> list[TableRow]:
    """Recompute the rows of one table (or all five).

    ``source="reference"`` uses the tabulated factors; ``"search"`` uses the
    engine's own commuting-set search for each signature instead.
    """
    out = []
    for ref in reference_rows(table):
        sig = ref.sig
        if source == "reference":
            factors = tuple(parse_blade(t, sig) for t in ref.factors)
        elif source == "search":
            factors = None
        else:
            raise ValueError(f"unknown source {source!r}")
        out.append(compute_row(sig, factors))
    return out


CSV_COLUMNS = ("p", "q", "idempotent", "stab_order", "label", "gen_orders")


def render(rows: list[TableRow], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow([r.p, r.q, r.idempotent, r.stab_order, r.label, " ".join(map(str, r.gen_orders))])
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    current = None
    for r in rows:
        if r.table != current:
            if current is not None:
                lines.append("")
            current = r.table
            lines.append(f"Table {r.table}: {CLASS_NAMES[r.table]}")
            lines.append(f"{'Cl(p,q)':<9} {'f':<40} {'|G(f)|':>6}  {'generators':<28} {'orders':<14} label")
        lines.append(
            f"Cl({r.p},{r.q})".ljust(9) + " "
            + r.idempotent.ljust(40) + " "
            + str(r.stab_order).rjust(6) + "  "
            + ", ".join(r.generators).ljust(28) + " "
            + ",".join(map(str, r.gen_orders)).ljust(14) + " "
            + r.label
        )
    return "\n".join(lines) + "\n"
