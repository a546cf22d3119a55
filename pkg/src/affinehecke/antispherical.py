"""Spherical and antispherical right modules, the Demazure-Lusztig closed
form, and the decategorified K-theory action on the flag-variety side.

Both modules are free of rank one over the lattice part, so an element
is just a ``GroupAlgebraElt`` plus a side tag: "hecke" for elements
written in the theta-basis of sgn (x) H or triv (x) H, "ktheory" for
classes of equivariant line bundles written e^lambda.

Every reflection-dependent operation receives a ``ReflectionDatum``
fixing, per finite simple reflection, the lattice element a and
covector a* with s(x) = x - <x, a*> a and <a, a*> = 2.  This settles
mechanically which of the root/coroot pair enters each formula:

* ``hecke_side``   -- lattice X^, a = alpha^, a* = alpha: matches the
  lattice part of the Hecke algebra of the same datum, so the closed
  form can be tested against brute-force module induction.
* ``ktheory_side`` -- lattice X, a = alpha, a* = alpha^: the flag
  variety of the datum's own group, where e^lambda is a line bundle
  class and translation by -a is twisting by O(-alpha).

The intertwining map theta_lambda -> e^{lambda + sign*rho} only
typechecks when both actions live on one lattice; the K-theory of a
group is matched with the Hecke algebra of the Langlands-dual datum,
whose lattice part is again X.  ``intertwiner_check`` therefore runs
the Demazure-Lusztig action with the ktheory-side reflection datum and
sweeps all four (rho sign, a sign) conventions, reporting which pass.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Mapping

from . import hecke as hk
from .errors import InputError
from .laurent import (ONE, V, V_INV, ZERO, GroupAlgebraElt, LaurentPoly,
                      Vector, dot, vadd, vneg, vsub)
from .rootdata import RootDatum, root_system

SIDES = ("hecke", "ktheory")


@dataclasses.dataclass(frozen=True)
class ModuleElt:
    """A rank-one module element: a group algebra element plus a side tag."""

    side: str
    elt: GroupAlgebraElt

    def __post_init__(self):
        if self.side not in SIDES:
            raise InputError(f"side must be one of {SIDES}")

    @staticmethod
    def basis(side: str, vec: Iterable[int], coeff: LaurentPoly | int = 1) -> ModuleElt:
        return ModuleElt(side, GroupAlgebraElt.monomial(tuple(vec), coeff))

    @staticmethod
    def zero(side: str, rank: int) -> ModuleElt:
        return ModuleElt(side, GroupAlgebraElt.zero(rank))

    def is_zero(self) -> bool:
        return self.elt.is_zero()

    def _match(self, other: ModuleElt) -> None:
        if self.side != other.side:
            raise InputError("module elements on different sides")

    def __add__(self, other: ModuleElt) -> ModuleElt:
        self._match(other)
        return ModuleElt(self.side, self.elt + other.elt)

    def __sub__(self, other: ModuleElt) -> ModuleElt:
        self._match(other)
        return ModuleElt(self.side, self.elt - other.elt)

    def scale(self, c: LaurentPoly | int) -> ModuleElt:
        return ModuleElt(self.side, self.elt * c)

    def __repr__(self) -> str:
        sym = "theta" if self.side == "hecke" else "x"
        return f"ModuleElt[{self.side}]({self.elt!s})".replace("e[", sym + "[")

    def to_json(self) -> dict:
        return {"side": self.side, "terms": self.elt.to_json()}

    @staticmethod
    def from_json(rank: int, data: Mapping) -> ModuleElt:
        try:
            return ModuleElt(str(data["side"]),
                             GroupAlgebraElt.from_json(rank, data["terms"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad module element encoding: {data!r}") from exc


@dataclasses.dataclass(frozen=True)
class ReflectionDatum:
    """Per simple reflection: the translation element a and covector a*."""

    datum: RootDatum
    side: str
    pairs: tuple[tuple[Vector, Vector], ...]  # (a_s, a_s*) per finite simple s

    def __post_init__(self):
        for a, astar in self.pairs:
            if dot(a, astar) != 2:
                raise InputError("reflection datum needs <a, a*> = 2")

    def reflect(self, i: int, vec: Vector) -> Vector:
        a, astar = self.pairs[i]
        k = dot(vec, astar)
        return vsub(tuple(vec), tuple(k * x for x in a))

    def pairing(self, i: int, vec: Vector) -> int:
        return dot(vec, self.pairs[i][1])

    def negated(self) -> ReflectionDatum:
        """Flip a -> -a, a* -> -a* (the opposite sign convention)."""
        return ReflectionDatum(self.datum, self.side,
                               tuple((vneg(a), vneg(b)) for a, b in self.pairs))


def hecke_side(datum: RootDatum) -> ReflectionDatum:
    """Module lattice X^ with a = alpha^, matching the Hecke lattice part."""
    return ReflectionDatum(datum, "hecke", tuple(
        (cv, rt) for rt, cv in zip(datum.simple_roots, datum.simple_coroots)))


def ktheory_side(datum: RootDatum) -> ReflectionDatum:
    """Module lattice X with a = alpha, for the flag-variety side."""
    return ReflectionDatum(datum, "ktheory", tuple(
        (rt, cv) for rt, cv in zip(datum.simple_roots, datum.simple_coroots)))


def dual_hecke_side(datum: RootDatum) -> ReflectionDatum:
    """The hecke-side reflection datum of the Langlands-dual datum: same
    lattice X and pairs as ktheory_side, but tagged for theta-basis acts."""
    return ReflectionDatum(datum, "hecke", ktheory_side(datum).pairs)


# ---------------------------------------------------------------------
# Divided (geometric string) sums.
# ---------------------------------------------------------------------

def divided_sum(refl: ReflectionDatum, lam: Vector, i: int,
                shift: str = "none") -> GroupAlgebraElt:
    """Closed form of (e^lam - e^{s lam}) / (1 - e^{-a})          (shift="none")
    or            (e^lam - e^{s lam - a}) / (1 - e^{-a})          (shift="minus_a"),

    by case analysis on k = <lam, a*>: a k-term (resp. (k+1)-term)
    geometric string down the a-direction, empty or negated-reversed as
    k crosses zero.  Multiplying back by (1 - e^{-a}) recovers the
    numerator exactly; tests do so on every call pattern.
    """
    lam = tuple(int(x) for x in lam)
    a, _ = refl.pairs[i]
    k = refl.pairing(i, lam)
    if shift == "none":
        top = k - 1
    elif shift == "minus_a":
        top = k
    else:
        raise InputError("shift must be 'none' or 'minus_a'")
    rank = refl.datum.rank
    acc = GroupAlgebraElt.zero(rank)
    if top >= 0:
        for j in range(top + 1):
            acc = acc + GroupAlgebraElt.monomial(vsub(lam, tuple(j * x for x in a)))
    else:
        for j in range(1, -top):
            acc = acc - GroupAlgebraElt.monomial(vadd(lam, tuple(j * x for x in a)))
    return acc


def divided_sum_elt(refl: ReflectionDatum, m: ModuleElt, i: int,
                    shift: str = "none") -> ModuleElt:
    acc = GroupAlgebraElt.zero(refl.datum.rank)
    for vec, c in m.elt.terms:
        acc = acc + divided_sum(refl, vec, i, shift) * c
    return ModuleElt(m.side, acc)


# ---------------------------------------------------------------------
# Actions.
# ---------------------------------------------------------------------

def dl_action_bs(refl: ReflectionDatum, i: int, m: ModuleElt) -> ModuleElt:
    """Demazure-Lusztig closed form for the right action of b_s on the
    antispherical module:

        theta_lam . b_s = (v^-1 - v theta_{-a}) (theta_lam - theta_{s lam}) / (1 - theta_{-a}).
    """
    if m.side != refl.side or refl.side != "hecke":
        raise InputError("dl_action_bs acts on hecke-side module elements")
    rank = refl.datum.rank
    acc = GroupAlgebraElt.zero(rank)
    for vec, c in m.elt.terms:
        string = divided_sum(refl, vec, i, "none")
        a, _ = refl.pairs[i]
        factor = (GroupAlgebraElt.one(rank) * V_INV
                  - GroupAlgebraElt.monomial(vneg(a), V))
        acc = acc + factor * string * c
    return ModuleElt("hecke", acc)


def induced_action(h: hk.HeckeElt, m: ModuleElt, sign: str = "sgn") -> ModuleElt:
    """Brute-force right action of h on the induced module sgn (x) H or
    triv (x) H: multiply in the Hecke algebra, pass to the finite-left
    normal form, and evaluate the finite parts at -v (sgn) or v^-1 (triv).

    This is the oracle the closed form is tested against.
    """
    if m.side != "hecke":
        raise InputError("induced_action acts on hecke-side module elements")
    if sign not in ("sgn", "triv"):
        raise InputError("sign must be 'sgn' or 'triv'")
    datum = h.datum
    rs = root_system(datum)
    from .rootdata import identity_weyl
    scalar = LaurentPoly({1: -1}) if sign == "sgn" else V_INV
    start = hk.BernsteinElt(
        datum, {(identity_weyl(datum.rank), tuple(vec)): c
                for vec, c in m.elt.terms})
    acc = GroupAlgebraElt.zero(datum.rank)
    for (w, mu), d in hk.bern_mul_hecke(start, h).terms.items():
        acc = acc + GroupAlgebraElt.monomial(mu, d * scalar ** rs.finite_length(w))
    return ModuleElt("hecke", acc)


def ktheory_action_qs(refl: ReflectionDatum, i: int, m: ModuleElt,
                      scale: str = "minus_v", alpha_sign: int = 1) -> ModuleElt:
    """Push-pull along the P^1-fibration for the simple reflection s,
    composed with the Koszul twist:

        e^lam -> (e^{-a} - v^-2) * (e^lam - e^{s lam - a}) / (1 - e^{-a})

    (scale="raw"); scale="minus_v" multiplies by -v, the normalization
    matching b_s on the Hecke side.  alpha_sign=-1 flips a -> -a
    throughout (the opposite twisting convention).
    """
    if m.side != refl.side or refl.side != "ktheory":
        raise InputError("ktheory_action_qs acts on ktheory-side module elements")
    if scale not in ("raw", "minus_v"):
        raise InputError("scale must be 'raw' or 'minus_v'")
    if alpha_sign not in (1, -1):
        raise InputError("alpha_sign must be +1 or -1")
    use = refl if alpha_sign == 1 else refl.negated()
    rank = refl.datum.rank
    acc = GroupAlgebraElt.zero(rank)
    for vec, c in m.elt.terms:
        string = divided_sum(use, vec, i, "minus_a")
        a, _ = use.pairs[i]
        factor = (GroupAlgebraElt.monomial(vneg(a))
                  - GroupAlgebraElt.one(rank) * LaurentPoly({-2: 1}))
        acc = acc + factor * string * c
    if scale == "minus_v":
        acc = acc * LaurentPoly({1: -1})
    return ModuleElt("ktheory", acc)


def euler_characteristic(refl: ReflectionDatum, i: int, m: int) -> int:
    """chi of the line bundle class e^{m*omega} on the P^1 of the simple
    reflection: the push-pull string evaluated at the trivial character
    and v = 1.  Equals m + 1 for every integer m."""
    a, _ = refl.pairs[i]
    lam = tuple(m * x // 2 for x in a)
    if any(2 * (m * x // 2) != m * x for x in a):
        raise InputError("a/2 is not integral; pick a lattice where it is")
    total = divided_sum(refl, lam, i, "minus_a").counit()
    return int(total.evaluate(1))


# ---------------------------------------------------------------------
# Intertwiner sweep.
# ---------------------------------------------------------------------

def shift_exponents(m: ModuleElt, delta_vec: Vector, new_side: str) -> ModuleElt:
    return ModuleElt(new_side, m.elt.map_exponents(lambda v: vadd(v, delta_vec)))


def intertwiner_check(datum: RootDatum, lams: Iterable[Vector] | None = None,
                      bound: int = 3,
                      conventions: Iterable[tuple[int, int]] | None = None) -> dict:
    """Sweep the four (rho sign, a sign) conventions of the map
    theta_lam -> e^{lam + rho_sign*rho}, testing for every lam and every
    simple reflection that it carries the Demazure-Lusztig action of b_s
    to -v times the K-theory push-pull operator.

    Both actions are realized on the weight lattice X: the theta-side
    uses the root/coroot pairs of X (the Hecke algebra of the
    Langlands-dual datum).  Returns a report mapping each convention to
    a pass flag plus the first counterexample, if any.
    """
    if datum.rho_weight is None:
        raise InputError(f"datum {datum.name!r} has no rho_weight; "
                         "the intertwining map needs one")
    refl_h = dual_hecke_side(datum)
    refl_k = ktheory_side(datum)
    if lams is None:
        lams = [vec for vec in _box(datum.rank, bound)]
    lams = [tuple(int(x) for x in v) for v in lams]
    if conventions is None:
        conventions = [(1, 1), (1, -1), (-1, 1), (-1, -1)]

    report: dict[tuple[int, int], dict] = {}
    for rho_sign, alpha_sign in conventions:
        shift = tuple(rho_sign * x for x in datum.rho_weight)
        ok, witness = True, None
        for lam in lams:
            for i in range(datum.n_simple):
                lhs = shift_exponents(
                    dl_action_bs(refl_h, i, ModuleElt.basis("hecke", lam)),
                    shift, "ktheory")
                rhs = ktheory_action_qs(
                    refl_k, i,
                    ModuleElt.basis("ktheory", vadd(lam, shift)),
                    "minus_v", alpha_sign)
                if lhs != rhs:
                    ok, witness = False, {"lambda": list(lam), "s": i}
                    break
            if not ok:
                break
        report[(rho_sign, alpha_sign)] = {"passes": ok, "witness": witness}
    return report


def _box(rank: int, bound: int):
    def rec(prefix):
        if len(prefix) == rank:
            yield prefix
            return
        for x in range(-bound, bound + 1):
            yield from rec(prefix + (x,))
    yield from rec(())
