"""Exact arithmetic with Hodge diamonds.

A Hodge diamond records the Hodge numbers ``h^{p,q}`` of a smooth projective
variety of complex dimension ``n``, for ``0 <= p, q <= n``.  Geometric
diamonds satisfy two symmetries:

* Hodge symmetry:  ``h^{p,q} = h^{q,p}``
* Serre duality:   ``h^{p,q} = h^{n-p,n-q}``

The operations here are the numerical shadows of standard constructions:
products (Kunneth), Tate twists (multiplication by a power of the Lefschetz
class, shifting bidegree by ``(i, i)``), projective bundles, blowups, graded
symmetric squares with the Koszul sign rule, and the Hilbert square

    H*(X^[2]) = Sym^2 H*(X)  (+)  H*(X)(1)  (+) ... (+)  H*(X)(n-1),

the twisted summands coming from the exceptional divisor of the blowup of
``X x X`` along the diagonal, which is a ``P^{n-1}``-bundle over ``X``.

Everything is exact integer arithmetic on sparse tables; entries are
dimensions only (no lattice or torsion information is modelled).  Values are
immutable after construction and all operations are pure functions.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

Bidegree = tuple[int, int]


class HodgeDiamond:
    """A bigraded table of nonnegative integers supported on ``[0, dim]^2``.

    A diamond is either *raw* (any nonnegative table) or *validated*
    (checked to satisfy Hodge symmetry and Serre duality).  Intermediate
    results such as Tate twists are raw on purpose: Serre duality is
    relative to a dimension that a twist intentionally breaks.
    """

    __slots__ = ("dim", "_entries", "validated")

    def __init__(
        self,
        dim: int,
        entries: Mapping[Bidegree, int] | Iterable[tuple[int, int, int]] = (),
        validated: bool = False,
    ):
        if dim < 0:
            raise ValueError(f"dimension must be nonnegative, got {dim}")
        table: dict[Bidegree, int] = {}
        items: Iterable
        if isinstance(entries, Mapping):
            items = (((p, q), v) for (p, q), v in entries.items())
        else:
            items = (((p, q), v) for p, q, v in entries)
        for (p, q), v in items:
            if v < 0:
                raise ValueError(f"negative entry h^({p},{q}) = {v}")
            if v and not (0 <= p <= dim and 0 <= q <= dim):
                raise ValueError(f"entry h^({p},{q}) outside [0,{dim}]^2")
            if v:
                table[(p, q)] = table.get((p, q), 0) + v
        self.dim = dim
        self._entries = table
        self.validated = validated

    def hodge(self, p: int, q: int) -> int:
        """Return ``h^{p,q}``; absent entries are zero."""
        return self._entries.get((p, q), 0)

    def entries(self) -> dict[Bidegree, int]:
        """A copy of the nonzero entries."""
        return dict(self._entries)

    def __eq__(self, other) -> bool:
        # the validated flag is bookkeeping, not part of the value
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        return self.dim == other.dim and self._entries == other._entries

    def __hash__(self):
        return hash((self.dim, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        cells = ", ".join(
            f"({p},{q}): {v}" for (p, q), v in sorted(self._entries.items())
        )
        return f"HodgeDiamond(dim={self.dim}, {{{cells}}})"

    def __add__(self, other: "HodgeDiamond") -> "HodgeDiamond":
        """Entrywise sum (disjoint union); dimensions must agree."""
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {other.dim}")
        return _accumulate(self.dim, [self, other],
                           validated=self.validated and other.validated)

    def __mul__(self, other: "HodgeDiamond") -> "HodgeDiamond":
        return kunneth(self, other)

    # -- symmetry checks ---------------------------------------------------

    def is_hodge_symmetric(self) -> bool:
        return all(v == self.hodge(q, p) for (p, q), v in self._entries.items())

    def is_serre_dual(self) -> bool:
        n = self.dim
        return all(
            v == self.hodge(n - p, n - q) for (p, q), v in self._entries.items()
        )

    def validate(self) -> "HodgeDiamond":
        """Check both symmetries and return a diamond marked geometric."""
        if not self.is_hodge_symmetric():
            raise ValueError("table is not Hodge-symmetric")
        if not self.is_serre_dual():
            raise ValueError("table is not Serre-dual")
        return HodgeDiamond(self.dim, self._entries, validated=True)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "entries": [[p, q, v] for (p, q), v in sorted(self._entries.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "HodgeDiamond":
        try:
            dim = data["dim"]
            raw = data["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"diamond JSON needs 'dim' and 'entries': {exc}")
        if not isinstance(dim, int):
            raise ValueError("'dim' must be an integer")
        entries = []
        for row in raw:
            if not (isinstance(row, (list, tuple)) and len(row) == 3
                    and all(isinstance(x, int) for x in row)):
                raise ValueError(f"bad entry row {row!r}; want [p, q, value]")
            entries.append(tuple(row))
        return cls(dim, entries)

    @classmethod
    def from_json(cls, text: str) -> "HodgeDiamond":
        return cls.from_json_dict(json.loads(text))


def _accumulate(dim: int, parts: Iterable[HodgeDiamond], validated: bool = False
                ) -> HodgeDiamond:
    """Sum entry tables into a fresh diamond of the given dimension."""
    table: dict[Bidegree, int] = {}
    for part in parts:
        for key, v in part._entries.items():
            table[key] = table.get(key, 0) + v
    return HodgeDiamond(dim, table, validated=validated)


# -- operations --------------------------------------------------------------


def kunneth(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    """Hodge diamond of a product: bigraded convolution of the two tables."""
    table: dict[Bidegree, int] = {}
    for (p1, q1), v1 in a._entries.items():
        for (p2, q2), v2 in b._entries.items():
            key = (p1 + p2, q1 + q2)
            table[key] = table.get(key, 0) + v1 * v2
    return HodgeDiamond(a.dim + b.dim, table,
                        validated=a.validated and b.validated)


def tate_twist(a: HodgeDiamond, i: int) -> HodgeDiamond:
    """Shift every entry by ``(i, i)``: multiplication by the i-th power of
    the Lefschetz class.  The result is a raw table of dimension ``dim + i``
    (Serre duality relative to the new dimension is intentionally broken).
    """
    if i < 0:
        raise ValueError(f"twist must be nonnegative, got {i}")
    return HodgeDiamond(
        a.dim + i,
        {(p + i, q + i): v for (p, q), v in a._entries.items()},
        validated=False,
    )


def sym2(a: HodgeDiamond) -> HodgeDiamond:
    """Graded symmetric square with the Koszul sign rule.

    This is the table of Z/2-coinvariants of ``H*(X) (x) H*(X)`` under the
    swap with sign ``(-1)^{|x||y|}``.  Two distinct bidegrees contribute the
    product of their entries; a bidegree paired with itself contributes
    ``m(m+1)/2`` in even total degree and ``m(m-1)/2`` in odd total degree
    (Sym^2 of the even part, even (x) odd, and Lambda^2 of the odd part).
    """
    items = sorted(a._entries.items())
    table: dict[Bidegree, int] = {}
    for i, ((p1, q1), m1) in enumerate(items):
        # self-pairing
        key = (2 * p1, 2 * q1)
        c = m1 * (m1 + 1) // 2 if (p1 + q1) % 2 == 0 else m1 * (m1 - 1) // 2
        if c:
            table[key] = table.get(key, 0) + c
        for (p2, q2), m2 in items[i + 1:]:
            key = (p1 + p2, q1 + q2)
            table[key] = table.get(key, 0) + m1 * m2
    return HodgeDiamond(2 * a.dim, table, validated=a.validated)


def alt2(a: HodgeDiamond) -> HodgeDiamond:
    """Anti-invariant complement of :func:`sym2` inside the self-product.

    Same pairing rule with the parities exchanged, so that
    ``sym2(a) + alt2(a) == kunneth(a, a)`` entry by entry.
    """
    items = sorted(a._entries.items())
    table: dict[Bidegree, int] = {}
    for i, ((p1, q1), m1) in enumerate(items):
        key = (2 * p1, 2 * q1)
        c = m1 * (m1 - 1) // 2 if (p1 + q1) % 2 == 0 else m1 * (m1 + 1) // 2
        if c:
            table[key] = table.get(key, 0) + c
        for (p2, q2), m2 in items[i + 1:]:
            key = (p1 + p2, q1 + q2)
            table[key] = table.get(key, 0) + m1 * m2
    return HodgeDiamond(2 * a.dim, table, validated=False)


def hilbert_square(a: HodgeDiamond) -> HodgeDiamond:
    """Hodge diamond of the Hilbert scheme of two points.

    For ``n = dim >= 1`` this is ``sym2(a)`` plus one Tate twist of ``a`` for
    each ``i = 1, ..., n-1``.  The twists account for the exceptional divisor
    of ``Bl_diag(X x X)``, a ``P^{n-1}``-bundle over the diagonal; for a
    curve there is no correction and ``(P^1)^[2] = P^2`` comes out of the
    symmetric square alone.
    """
    n = a.dim
    if n < 1:
        raise ValueError("Hilbert square of a 0-dimensional variety is not modelled")
    parts = [sym2(a)] + [tate_twist(a, i) for i in range(1, n)]
    return _accumulate(2 * n, parts, validated=a.validated)


def projective_bundle(base: HodgeDiamond, fiber_rank: int) -> HodgeDiamond:
    """Diamond of a projectivized rank-``fiber_rank`` bundle over ``base``:
    the direct sum of twists ``base(i)`` for ``i = 0, ..., fiber_rank - 1``.
    """
    if fiber_rank < 1:
        raise ValueError(f"fiber rank must be positive, got {fiber_rank}")
    parts = [tate_twist(base, i) for i in range(fiber_rank)]
    return _accumulate(base.dim + fiber_rank - 1, parts,
                       validated=base.validated)


def blowup(total: HodgeDiamond, center: HodgeDiamond, codim: int) -> HodgeDiamond:
    """Diamond of the blowup of ``total`` along a ``center`` of codimension
    ``codim >= 2``: adds ``center(i)`` for ``i = 1, ..., codim - 1``.
    """
    if codim < 2:
        raise ValueError(f"blowup codimension must be >= 2, got {codim}")
    if center.dim + codim != total.dim:
        raise ValueError(
            f"dimension mismatch: center dim {center.dim} + codim {codim} "
            f"!= total dim {total.dim}"
        )
    parts = [total] + [tate_twist(center, i) for i in range(1, codim)]
    return _accumulate(total.dim, parts,
                       validated=total.validated and center.validated)


def hh0(a: HodgeDiamond) -> int:
    """Sum of the diagonal entries ``h^{p,p}``: the dimension of degree-zero
    Hochschild homology via Hochschild--Kostant--Rosenberg.
    """
    return sum(v for (p, q), v in a._entries.items() if p == q)


def diagonal(a: HodgeDiamond) -> list[int]:
    """The column ``[h^{0,0}, h^{1,1}, ..., h^{n,n}]``."""
    return [a.hodge(p, p) for p in range(a.dim + 1)]


def euler(a: HodgeDiamond) -> int:
    """Topological Euler characteristic: alternating sum over ``p + q``."""
    return sum(v if (p + q) % 2 == 0 else -v
               for (p, q), v in a._entries.items())


def format_diamond(a: HodgeDiamond) -> str:
    """Render as the classical centered diamond, ``h^{n,n}`` on top."""
    n = a.dim
    rows = []
    for total in range(2 * n, -1, -1):
        lo = max(0, total - n)
        hi = min(n, total)
        rows.append([a.hodge(p, total - p) for p in range(hi, lo - 1, -1)])
    width = max((len(str(v)) for row in rows for v in row), default=1) + 2
    lines = []
    full = (2 * n + 1) * width
    for row in rows:
        text = "".join(str(v).center(width) for v in row)
        lines.append(text.center(full).rstrip())
    return "\n".join(lines)
