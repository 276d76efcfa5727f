"""Semiorthogonal-decomposition ledgers.

A ledger forgets the ordering and gluing data of a semiorthogonal
decomposition and records only its multiset of components: a map from
category atoms (``Dpt`` for the derived category of a point, ``DC`` for that
of a curve ``C``, ``DSym2C``, ...) to nonnegative multiplicities.  Every
check performed here - component counts and additive invariants such as
``HH_0`` - depends on that content alone.

Symmetric squares expand component by component:

    Sym^2 <A_1, ..., A_m>  =  (Sym^2 A_i for each i)  +  (A_i (x) A_j, i<j)

with ``Sym^2 A`` and ``A (x) B`` resolved through an explicit rule table.
The defaults are the two root-stack rewrites ``Sym^2 DC -> {DSym2C, DC}``
and ``Sym^2 Dpt -> {Dpt: 2}`` together with the tensor rules
``DC (x) Dpt = DC`` and ``Dpt (x) Dpt = Dpt``; unknown pairs are errors,
never guesses.

For the Hilbert square of an ``n``-fold whose derived category has the given
components, the ledger is ``Sym^2`` of the components plus ``n - 2`` extra
copies of each component (the projective-bundle part of the exceptional
divisor).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Sequence, Union

from . import hodge as hodge_mod
from .hodge import HodgeDiamond
from .motive import sym2_atom_name


class UnresolvedPairError(ValueError):
    """A Sym^2 or tensor pair has neither a rule nor a declared atom."""


class NegativeMultiplicityError(ValueError):
    """Ledger subtraction went below zero."""


class UnassignedAtomError(ValueError):
    """An additive-invariant evaluation met an atom without a value."""


class RewriteLoopError(RuntimeError):
    """Rewriting exceeded the step budget; the rule system does not terminate."""


@dataclass(frozen=True)
class CategoryAtom:
    """A named component with an optional attached hh0 invariant, given
    either directly or through a Hodge diamond (they must agree)."""

    name: str
    hh0: int | None = None
    diamond: HodgeDiamond | None = None

    def __post_init__(self):
        if self.hh0 is not None and self.hh0 < 0:
            raise ValueError("hh0 must be nonnegative")
        if self.hh0 is not None and self.diamond is not None:
            if hodge_mod.hh0(self.diamond) != self.hh0:
                raise ValueError(
                    f"atom {self.name!r}: attached hh0 {self.hh0} disagrees "
                    f"with its diamond ({hodge_mod.hh0(self.diamond)})"
                )

    def invariant(self) -> int | None:
        if self.hh0 is not None:
            return self.hh0
        if self.diamond is not None:
            return hodge_mod.hh0(self.diamond)
        return None


def _atom_name(a: Union[str, CategoryAtom]) -> str:
    return a.name if isinstance(a, CategoryAtom) else a


class SodLedger:
    """Multiset of category atoms; zero multiplicities are never stored."""

    __slots__ = ("multiplicities",)

    def __init__(self, multiplicities: Mapping[str, int] | None = None):
        clean: dict[str, int] = {}
        if multiplicities:
            for name, m in multiplicities.items():
                if m < 0:
                    raise NegativeMultiplicityError(
                        f"negative multiplicity {m} for {name!r}"
                    )
                if m:
                    clean[name] = clean.get(name, 0) + m
        self.multiplicities = clean

    def __eq__(self, other) -> bool:
        if not isinstance(other, SodLedger):
            return NotImplemented
        return self.multiplicities == other.multiplicities

    def __hash__(self):
        return hash(frozenset(self.multiplicities.items()))

    def __add__(self, other: "SodLedger") -> "SodLedger":
        out = dict(self.multiplicities)
        for name, m in other.multiplicities.items():
            out[name] = out.get(name, 0) + m
        return SodLedger(out)

    def __rmul__(self, k: int) -> "SodLedger":
        if k < 0:
            raise NegativeMultiplicityError("cannot scale a ledger negatively")
        return SodLedger({name: k * m for name, m in self.multiplicities.items()})

    __mul__ = __rmul__

    def __contains__(self, name: str) -> bool:
        return name in self.multiplicities

    def count(self, name: str) -> int:
        return self.multiplicities.get(name, 0)

    def total(self) -> int:
        return sum(self.multiplicities.values())

    def atoms(self) -> list[str]:
        return sorted(self.multiplicities)

    def is_empty(self) -> bool:
        return not self.multiplicities

    def __repr__(self) -> str:
        from . import dsl

        return f"SodLedger({dsl.print_canonical(self)!r})"

    def to_json_dict(self) -> dict:
        return {
            "atoms": [
                {"name": name, "mult": m}
                for name, m in sorted(self.multiplicities.items())
            ]
        }


def ledger(multiplicities: Mapping[str, int] | None = None) -> SodLedger:
    return SodLedger(multiplicities)


def ledger_equal(a: SodLedger, b: SodLedger) -> bool:
    return a == b


def ledger_subtract(a: SodLedger, b: SodLedger) -> SodLedger:
    """Multiset difference; raises if ``b`` is not contained in ``a``."""
    out = dict(a.multiplicities)
    for name, m in b.multiplicities.items():
        have = out.get(name, 0)
        if m > have:
            raise NegativeMultiplicityError(
                f"cannot remove {m} copies of {name!r}; only {have} present"
            )
        out[name] = have - m
    return SodLedger(out)


def substitute(ledger: SodLedger, atom: Union[str, CategoryAtom],
               replacement: SodLedger) -> SodLedger:
    """Replace every copy of ``atom`` by the replacement multiset."""
    name = _atom_name(atom)
    m = ledger.count(name)
    if m == 0:
        raise KeyError(f"atom {name!r} not present in ledger")
    rest = {k: v for k, v in ledger.multiplicities.items() if k != name}
    return SodLedger(rest) + m * replacement


# -- rewrite rules ------------------------------------------------------------


@dataclass(frozen=True)
class RewriteRule:
    """One rewrite: ``kind`` is "atom", "sym2" or "tensor"; ``args`` is the
    atom name (atom/sym2) or the pair of names (tensor); ``rhs`` a ledger."""

    kind: str
    args: tuple[str, ...]
    rhs: SodLedger

    def __post_init__(self):
        if self.kind not in ("atom", "sym2", "tensor"):
            raise ValueError(f"unknown rule kind {self.kind!r}")
        want = 2 if self.kind == "tensor" else 1
        if len(self.args) != want:
            raise ValueError(f"{self.kind} rule needs {want} argument(s)")

    def lhs_name(self) -> str:
        """The ledger-atom name this rule rewrites (tensor pairs have none)."""
        if self.kind == "atom":
            return self.args[0]
        if self.kind == "sym2":
            return sym2_atom_name(self.args[0])
        raise ValueError("tensor rules do not rewrite a single atom")


def tensor_atom_name(a: str, b: str) -> str:
    a, b = sorted((a, b))
    return f"Tensor_{a}_{b}"


class RuleTable:
    """Rule set for resolving Sym^2 atoms, tensor pairs and substitutions.

    If ``order`` (a well-order on atom names, smallest first) is supplied,
    every added rule must produce strictly smaller atoms than the name it
    rewrites, which makes exhaustive rewriting terminate by construction.
    A step budget guards normalization regardless.
    """

    def __init__(self, rules: Iterable[RewriteRule] = (),
                 declared: Iterable[str] = (),
                 order: Sequence[str] | None = None):
        self.atom_rules: dict[str, SodLedger] = {}
        self.sym2_rules: dict[str, SodLedger] = {}
        self.tensor_rules: dict[tuple[str, str], SodLedger] = {}
        self.declared: set[str] = set(declared)
        self._rank = {name: i for i, name in enumerate(order)} if order else None
        for rule in rules:
            self.add(rule)

    def _check_descending(self, lhs_name: str, rhs: SodLedger) -> None:
        if self._rank is None:
            return
        if lhs_name not in self._rank:
            raise ValueError(f"{lhs_name!r} is not in the declared well-order")
        bound = self._rank[lhs_name]
        for name in rhs.multiplicities:
            if self._rank.get(name, len(self._rank)) >= bound:
                raise ValueError(
                    f"rule for {lhs_name!r} produces {name!r}, which is not "
                    "smaller in the declared well-order"
                )

    def add(self, rule: RewriteRule) -> None:
        if rule.kind == "atom":
            self._check_descending(rule.args[0], rule.rhs)
            self.atom_rules[rule.args[0]] = rule.rhs
        elif rule.kind == "sym2":
            self._check_descending(sym2_atom_name(rule.args[0]), rule.rhs)
            self.sym2_rules[rule.args[0]] = rule.rhs
        else:
            key = tuple(sorted(rule.args))
            self._check_descending(tensor_atom_name(*rule.args), rule.rhs)
            self.tensor_rules[key] = rule.rhs

    def declare(self, *names: str) -> None:
        self.declared.update(names)

    def resolve_sym2(self, a: Union[str, CategoryAtom]) -> SodLedger:
        name = _atom_name(a)
        if name in self.sym2_rules:
            return self.sym2_rules[name]
        fallback = sym2_atom_name(name)
        if fallback in self.declared:
            return SodLedger({fallback: 1})
        raise UnresolvedPairError(f"no rule or declared atom for Sym2({name})")

    def resolve_tensor(self, a: Union[str, CategoryAtom],
                       b: Union[str, CategoryAtom]) -> SodLedger:
        key = tuple(sorted((_atom_name(a), _atom_name(b))))
        if key in self.tensor_rules:
            return self.tensor_rules[key]
        fallback = tensor_atom_name(*key)
        if fallback in self.declared:
            return SodLedger({fallback: 1})
        raise UnresolvedPairError(
            f"no rule or declared atom for {key[0]} (x) {key[1]}"
        )

    def substitution_for(self, name: str) -> SodLedger | None:
        """The ledger an atom rewrites to, if any (atom rules, plus sym2
        rules addressing their mangled ``Sym2_*`` ledger atom)."""
        if name in self.atom_rules:
            return self.atom_rules[name]
        for base, rhs in self.sym2_rules.items():
            if sym2_atom_name(base) == name:
                return rhs
        return None

    def normalize(self, led: SodLedger, max_steps: int = 10_000) -> SodLedger:
        """Apply atom substitutions to a fixpoint (deterministic order)."""
        current = led
        for _ in range(max_steps):
            target = None
            for name in sorted(current.multiplicities):
                if self.substitution_for(name) is not None:
                    target = name
                    break
            if target is None:
                return current
            current = substitute(current, target,
                                 self.substitution_for(target))
        raise RewriteLoopError(f"rewriting did not terminate in {max_steps} steps")


def default_rules() -> RuleTable:
    """The rules the symmetric-square calculus of curve-plus-exceptional
    decompositions needs: root-stack rewrites for Sym^2 and the two standard
    tensor rules."""
    table = RuleTable()
    table.add(RewriteRule("sym2", ("DC",), SodLedger({"DSym2C": 1, "DC": 1})))
    table.add(RewriteRule("sym2", ("Dpt",), SodLedger({"Dpt": 2})))
    table.add(RewriteRule("tensor", ("DC", "Dpt"), SodLedger({"DC": 1})))
    table.add(RewriteRule("tensor", ("Dpt", "Dpt"), SodLedger({"Dpt": 1})))
    return table


# -- symmetric squares and Hilbert squares of component lists -----------------


def sym2_ledger(components: Sequence[Union[str, CategoryAtom]],
                rules: RuleTable | None = None) -> SodLedger:
    """Ledger of ``Sym^2`` of a decomposition with the given components:
    one ``Sym^2 A_i`` per component plus one ``A_i (x) A_j`` for each pair
    ``i < j``, all resolved through the rule table."""
    rules = rules if rules is not None else default_rules()
    names = [_atom_name(a) for a in components]
    out = SodLedger()
    for i, a in enumerate(names):
        out = out + rules.resolve_sym2(a)
        for b in names[i + 1:]:
            out = out + rules.resolve_tensor(a, b)
    return out


def hilb2_ledger(x_components: Sequence[Union[str, CategoryAtom]],
                 n: int, rules: RuleTable | None = None) -> SodLedger:
    """Ledger for the Hilbert square of an ``n``-fold (``n >= 2``) whose
    derived category has the given components: the symmetric square plus
    ``n - 2`` further copies of every component."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    out = sym2_ledger(x_components, rules)
    per_copy: dict[str, int] = {}
    for a in x_components:
        name = _atom_name(a)
        per_copy[name] = per_copy.get(name, 0) + 1
    return out + (n - 2) * SodLedger(per_copy)


# -- additive invariants and the obstruction check ----------------------------


def additive_invariant(led: SodLedger, assignment: Mapping[str, int]) -> int:
    """Evaluate an additive invariant: sum of multiplicity times value."""
    total = 0
    for name, m in led.multiplicities.items():
        if name not in assignment:
            raise UnassignedAtomError(f"no invariant assigned to atom {name!r}")
        total += m * assignment[name]
    return total


class Verdict(enum.Enum):
    OBSTRUCTED = "OBSTRUCTED"
    INCONCLUSIVE = "INCONCLUSIVE"

    def __str__(self) -> str:
        return self.value


def embedding_obstruction(candidate: Union[int, SodLedger],
                          ambient: Union[int, HodgeDiamond],
                          assignment: Mapping[str, int] | None = None) -> Verdict:
    """Can a category with the candidate's hh0 sit inside the ambient one?

    hh0 is additive across semiorthogonal components, so candidate hh0
    exceeding ambient hh0 obstructs any embedding.  The comparison is
    one-directional: anything else is INCONCLUSIVE, never "embeddable".
    """
    if isinstance(candidate, SodLedger):
        candidate_hh0 = additive_invariant(candidate, assignment or {})
    else:
        candidate_hh0 = candidate
    if isinstance(ambient, HodgeDiamond):
        ambient_hh0 = hodge_mod.hh0(ambient)
    else:
        ambient_hh0 = ambient
    if candidate_hh0 < 0 or ambient_hh0 < 0:
        raise ValueError("hh0 values must be nonnegative")
    if candidate_hh0 > ambient_hh0:
        return Verdict.OBSTRUCTED
    return Verdict.INCONCLUSIVE


# -- the intersection-of-two-quadrics ledgers ----------------------------------


def two_quadrics_components(n: int) -> list[str]:
    """Components of the derived category of a smooth intersection of two
    quadrics in P^{n+2}: the hyperelliptic curve category and ``n - 1``
    exceptional objects."""
    if n < 2:
        raise ValueError("need n >= 2")
    return ["DC"] + ["Dpt"] * (n - 1)


def hilb2_two_quadrics_ledger(n: int) -> SodLedger:
    """Hilbert-square ledger for the intersection of two quadrics:
    ``{DSym2C: 1, DC: 2n-2, Dpt: C(n-1,2) + 2(n-1) + (n-1)(n-2)}``."""
    return hilb2_ledger(two_quadrics_components(n), n)


def fano_scheme_conjecture_ledger(n: int) -> SodLedger:
    """Conjectural ledger for the Fano scheme of lines on the intersection
    of two quadrics (n odd): ``{DSym2C: 1, DC: n-3, Dpt: C(n-4,2) + 2(n-4)}``.
    The counts go negative below ``n = 5`` and are clamped at zero there;
    see :func:`conjecture_consistency` for the range flag."""
    if n < 3:
        raise ValueError("need n >= 3")
    points = (comb(n - 4, 2) if n >= 4 else 0) + max(2 * (n - 4), 0)
    return SodLedger({"DSym2C": 1, "DC": max(n - 3, 0), "Dpt": points})


def ogr_pencil_conjecture_ledger(n: int) -> SodLedger:
    """Conjectural ledger for the relative orthogonal Grassmannian of
    isotropic planes of a pencil of quadrics (n odd):
    ``{DC: n+1, Dpt: (n-1)(n+1)}``."""
    return SodLedger({"DC": n + 1, "Dpt": (n - 1) * (n + 1)})


def clifford_conjecture_ledger(n: int) -> SodLedger:
    """Ledger template for orthogonal-Grassmannian fibrations over a base
    ``S`` with even Clifford algebra ``Cl0``:
    ``{DCl0: n+1, DS: (n-1)(n+1)/2}`` for odd ``n``."""
    if n % 2 == 0:
        raise ValueError("n must be odd")
    return SodLedger({"DCl0": n + 1, "DS": (n - 1) * (n + 1) // 2})


@dataclass(frozen=True)
class ConsistencyResult:
    n: int
    holds: bool
    in_stated_range: bool  # False for n < 5: counts were clamped
    hilb2: SodLedger
    fano_plus_ogr: SodLedger


def conjecture_consistency(n: int) -> ConsistencyResult:
    """Check ``hilb2 = fano + ogr`` as ledgers for odd ``n >= 3``.

    For ``n = 3`` the Fano-scheme counts are negative as written and are
    clamped, so the result is flagged as outside the stated range rather
    than asserted."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    lhs = hilb2_two_quadrics_ledger(n)
    rhs = fano_scheme_conjecture_ledger(n) + ogr_pencil_conjecture_ledger(n)
    return ConsistencyResult(
        n=n,
        holds=ledger_equal(lhs, rhs),
        in_stated_range=n >= 5,
        hilb2=lhs,
        fano_plus_ogr=rhs,
    )
