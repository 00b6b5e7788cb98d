"""Exact spinor representations of real Clifford algebras Cl(p,q)."""
