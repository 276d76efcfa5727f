"""A fragment of the Grothendieck ring of varieties.

Elements are integer-coefficient polynomials in the Lefschetz class ``L``
(the class of the affine line) over formal generator atoms such as ``X``,
``F`` or ``C``.  The atom ``pt`` is the multiplicative unit and is absorbed
on sight.  Atoms carry no relations; the geometric identities used here are
explicit operations:

* ``[P^n] = 1 + L + ... + L^n``
* blowup relation  ``[Bl_Z X] = [X] + [Z] ([P^{c-1}] - 1)`` for codimension c
* the standard-flip relation ``[X] - [X'] = [F] ([P^r] - [P^s])``, obtained
  by writing the common blowup ``Bl_Z X = Bl_{Z'} X'`` in both ways with
  ``Z = P_F(E)`` of codimension ``s + 1`` and ``Z' = P_F(E')`` of
  codimension ``r + 1``
* a symmetric-square rule on the fragment of sums of terms ``L^i * g``
  (``g`` one atom or 1): ``Sym^2`` distributes over sums via
  ``Sym^2(A + B) = Sym^2 A + A B + Sym^2 B`` and sends ``L^i g`` to
  ``L^{2i} Sym2_g``, where ``Sym2_g`` is a declared atom.  There is no
  division by 2 anywhere: the ring has no 1/2.

The Hilbert-square class is then
``[X^[2]] = Sym^2 [X] + ([P^{n-1}] - 1) [X]``.
"""

from __future__ import annotations

from typing import Iterable, Mapping

# a monomial is a sorted tuple of atom names; "pt" never appears
Monomial = tuple[str, ...]
TermKey = tuple[int, Monomial]  # (power of L, monomial)

RESERVED_ATOMS = ("L", "Sym2")


class FragmentError(ValueError):
    """Input lies outside the fragment an operation supports."""


def _mul_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(sorted(m1 + m2))


class MotiveExpr:
    """Polynomial in ``L`` over commuting formal atoms, exact integers."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[TermKey, int] | None = None):
        clean: dict[TermKey, int] = {}
        if terms:
            for (lp, mono), c in terms.items():
                if c:
                    clean[(lp, tuple(mono))] = c
        self.terms = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "MotiveExpr":
        return cls({(0, ()): c})

    @classmethod
    def lefschetz(cls, power: int = 1) -> "MotiveExpr":
        if power < 0:
            raise ValueError("negative powers of L are not in the ring")
        return cls({(power, ()): 1})

    @classmethod
    def atom(cls, name: str) -> "MotiveExpr":
        if name in RESERVED_ATOMS:
            raise ValueError(f"{name!r} is reserved")
        if name == "pt":
            return cls.const(1)  # the unit atom
        return cls({(0, (name,)): 1})

    # -- ring structure --------------------------------------------------

    def __add__(self, other) -> "MotiveExpr":
        other = _coerce(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return MotiveExpr(terms)

    __radd__ = __add__

    def __neg__(self) -> "MotiveExpr":
        return MotiveExpr({key: -c for key, c in self.terms.items()})

    def __sub__(self, other) -> "MotiveExpr":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "MotiveExpr":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "MotiveExpr":
        other = _coerce(other)
        terms: dict[TermKey, int] = {}
        for (l1, m1), c1 in self.terms.items():
            for (l2, m2), c2 in other.terms.items():
                key = (l1 + l2, _mul_monomials(m1, m2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return MotiveExpr(terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MotiveExpr.const(other)
        if not isinstance(other, MotiveExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        from . import dsl

        return f"MotiveExpr({dsl.print_canonical(self)!r})"

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def atoms(self) -> set[str]:
        return {name for (_, mono) in self.terms for name in mono}

    def coefficient(self, l_power: int, monomial: Iterable[str] = ()) -> int:
        return self.terms.get((l_power, tuple(sorted(monomial))), 0)

    def l_coefficients(self) -> list[int]:
        """Coefficients of ``1, L, L^2, ...`` of the atom-free part."""
        top = max((lp for (lp, mono) in self.terms if not mono), default=-1)
        return [self.coefficient(i) for i in range(top + 1)]

    def specialize(self, assignment: Mapping[str, int], l_value: int = 1) -> int:
        """Ring homomorphism to the integers: ``L`` to ``l_value`` and every
        atom to the assigned integer (e.g. its Euler characteristic).
        """
        total = 0
        for (lp, mono), c in self.terms.items():
            value = c * l_value**lp
            for name in mono:
                if name not in assignment:
                    raise KeyError(f"no value assigned to atom {name!r}")
                value *= assignment[name]
            total += value
        return total

    def to_json_list(self) -> list:
        """Term list ``[[coeff, l_power, [atoms...]], ...]`` sorted by
        (monomial, L-power)."""
        out = []
        for (lp, mono) in sorted(self.terms, key=lambda k: (k[1], k[0])):
            out.append([self.terms[(lp, mono)], lp, list(mono)])
        return out


def _coerce(value) -> MotiveExpr:
    if isinstance(value, MotiveExpr):
        return value
    if isinstance(value, int):
        return MotiveExpr.const(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to MotiveExpr")


ZERO = MotiveExpr()
ONE = MotiveExpr.const(1)
L = MotiveExpr.lefschetz()


def atom(name: str) -> MotiveExpr:
    return MotiveExpr.atom(name)


def class_of_pn(n: int) -> MotiveExpr:
    """``[P^n] = 1 + L + ... + L^n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return MotiveExpr({(i, ()): 1 for i in range(n + 1)})


def blowup_class(x: MotiveExpr, z: MotiveExpr, c: int) -> MotiveExpr:
    """``[Bl_Z X] = [X] + [Z] ([P^{c-1}] - 1)`` for codimension ``c >= 2``."""
    if c < 2:
        raise ValueError(f"blowup codimension must be >= 2, got {c}")
    return x + z * (class_of_pn(c - 1) - ONE)


def flip_difference(f: MotiveExpr, r: int, s: int) -> MotiveExpr:
    """``[X] - [X']`` across a standard flip with center base class ``f``
    and projective-bundle fiber dimensions ``(r, s)``:
    ``f * ([P^r] - [P^s])``.  Antisymmetric in ``(r, s)``; zero for a flop.
    """
    if r < 0 or s < 0:
        raise ValueError("fiber dimensions must be nonnegative")
    return f * (class_of_pn(r) - class_of_pn(s))


def sym2_atom_name(name: str) -> str:
    return f"Sym2_{name}"


def sym2_class(x: MotiveExpr) -> MotiveExpr:
    """Symmetric square on the fragment of sums of terms ``L^i * g``.

    Coefficients must be nonnegative (a coefficient ``m`` counts ``m``
    copies of the term); each monomial must be empty or one atom to the
    first power.  Squares of single copies become declared ``Sym2_*`` atoms,
    ``Sym^2(L^i) = L^{2i}``, and cross terms multiply out.
    """
    items = []
    for (lp, mono), c in sorted(x.terms.items()):
        if c < 0:
            raise FragmentError(
                f"negative coefficient {c} at L^{lp}: not an effective class"
            )
        if len(mono) > 1:
            raise FragmentError(
                f"monomial {'*'.join(mono)} is not a single atom"
            )
        items.append((lp, mono, c))

    result = MotiveExpr()
    for i, (lp, mono, m) in enumerate(items):
        if mono:
            sym_part = MotiveExpr({(2 * lp, (sym2_atom_name(mono[0]),)): 1})
            square = MotiveExpr({(2 * lp, _mul_monomials(mono, mono)): 1})
        else:
            sym_part = MotiveExpr({(2 * lp, ()): 1})
            square = sym_part
        result = result + m * sym_part + (m * (m - 1) // 2) * square
        for (lp2, mono2, m2) in items[i + 1:]:
            cross = MotiveExpr({(lp + lp2, _mul_monomials(mono, mono2)): m * m2})
            result = result + cross
    return result


def hilbert_square_class(x: MotiveExpr, n: int) -> MotiveExpr:
    """``[X^[2]] = Sym^2 [X] + ([P^{n-1}] - 1) [X]`` for ``dim X = n >= 1``."""
    if n < 1:
        raise ValueError("dimension must be positive")
    return sym2_class(x) + (class_of_pn(n - 1) - ONE) * x
