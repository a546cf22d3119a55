"""The extended affine Weyl group W_ext = Z X^ x| W_f.

Elements are stored in the normal form t_lambda * w (a coweight
translation followed by a finite part), so equality is structural.  The
group acts on X^ (x) R by affine transformations; its Coxeter subgroup W
is generated by the finite simple reflections together with one affine
reflection per irreducible component, namely s_{theta,1} = t_{theta^} s_theta
through the wall <x, theta> = 1 of the fundamental alcove (theta the
highest root of the component).

Lengths come in two independent flavours that must agree: the
Iwahori-Matsumoto closed formula

    l(t_lambda w) = sum_{a>0, w^-1 a>0} |<lambda,a>| + sum_{a>0, w^-1 a<0} |<lambda,a>-1|

and a direct count of the reflecting hyperplanes H_{a,m} separating the
interior of the fundamental alcove from its image.  The subgroup of
length-zero elements is written Omega; W_ext = Omega x| W.  Beware that
the literature is not consistent about the definition of W_ext and
Omega for non-adjoint data; here any finite-type datum is accepted.
"""

from __future__ import annotations

import dataclasses
import math
import threading
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (DatumMismatchError, InputError, InternalError,
                     SearchBoundExceededError)
from .laurent import Vector, dot, vadd, vneg, vsub
from . import linalg
from .rootdata import (FiniteWeylElt, RootDatum, identity_weyl, root_system)


@dataclasses.dataclass(frozen=True)
class AffineElt:
    """t_translation * finite, an element of the extended affine Weyl group."""

    datum: RootDatum
    translation: Vector
    finite: FiniteWeylElt

    def __post_init__(self):
        if len(self.translation) != self.datum.rank:
            raise InputError("translation has wrong rank")

    def __mul__(self, other: AffineElt) -> AffineElt:
        if self.datum != other.datum:
            raise DatumMismatchError("cannot multiply elements over different data")
        # (t_l u)(t_m w) = t_{l + u(m)} (u w)
        t = vadd(self.translation, self.finite.apply(other.translation))
        return AffineElt(self.datum, t, self.finite.compose(other.finite))

    def inv(self) -> AffineElt:
        u = self.finite.inverse()
        return AffineElt(self.datum, vneg(u.apply(self.translation)), u)

    def is_identity(self) -> bool:
        return all(x == 0 for x in self.translation) and self.finite.is_identity()

    def apply(self, point: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        """Affine action on a rational point of X^ (x) R."""
        moved = tuple(sum(Fraction(row[j]) * point[j] for j in range(len(point)))
                      for row in self.finite.matrix)
        return tuple(Fraction(t) + m for t, m in zip(self.translation, moved))

    def __repr__(self) -> str:
        return f"AffineElt(t={list(self.translation)}, w={self.finite!r})"

    def to_json(self) -> dict:
        rs = root_system(self.datum)
        w = rs.canonical(self.finite)
        return {"t": list(self.translation), "w": [i + 1 for i in (w.word or ())]}

    @staticmethod
    def from_json(datum: RootDatum, data: dict) -> AffineElt:
        try:
            t = tuple(int(x) for x in data.get("t", [0] * datum.rank))
            word = [int(i) for i in data.get("w", [])]
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad element encoding: {data!r}") from exc
        rs = root_system(datum)
        w = identity_weyl(datum.rank)
        for i in word:
            if not 1 <= i <= datum.n_simple:
                raise InputError(f"finite simple index {i} out of range 1..{datum.n_simple}")
            w = w.compose(rs.simple_reflections[i - 1])
        return AffineElt(datum, t, rs.canonical(w))


def identity(datum: RootDatum) -> AffineElt:
    return AffineElt(datum, (0,) * datum.rank, identity_weyl(datum.rank))


def translation(datum: RootDatum, coweight: Iterable[int]) -> AffineElt:
    return AffineElt(datum, tuple(int(x) for x in coweight),
                     identity_weyl(datum.rank))


# ---------------------------------------------------------------------
# Simple affine reflections (Coxeter generators of W).
# ---------------------------------------------------------------------

GenId = tuple[str, int]  # ("f", simple index) or ("a", component index)


@dataclasses.dataclass(frozen=True)
class SimpleAffineReflection:
    """A Coxeter generator of W: a wall reflection of the fundamental alcove.

    kind ("f", i) fixes the origin (the finite simple reflection s_i);
    kind ("a", c) is t_{theta^} s_theta for the highest root theta of
    component c, fixing the wall <x, theta> = 1.
    """

    kind: GenId
    element: AffineElt

    @property
    def label(self) -> str:
        return generator_label(self.kind)


def generator_label(kind: GenId) -> str:
    family, i = kind
    if family == "f":
        return f"s{i + 1}"
    return "s0" if i == 0 else f"s0_{i}"


def parse_generator_label(datum: RootDatum, label: str) -> GenId:
    label = label.strip()
    if label == "s":
        return ("f", 0)
    if label == "s0":
        return ("a", 0)
    if label.startswith("s0_"):
        return ("a", int(label[3:]))
    if label.startswith("s") and label[1:].isdigit():
        i = int(label[1:])
        if 1 <= i <= datum.n_simple:
            return ("f", i - 1)
    raise InputError(f"unknown generator label {label!r}")


def simple_affine_reflections(datum: RootDatum) -> list[SimpleAffineReflection]:
    """Finite generators first (by index), then one affine generator per
    irreducible component; this order is the tie-break everywhere."""
    rs = root_system(datum)
    cached = rs.memo.get("gens")
    if cached is not None:
        return list(cached)
    gens: list[SimpleAffineReflection] = []
    for i in range(datum.n_simple):
        elt = AffineElt(datum, (0,) * datum.rank,
                        rs.canonical(rs.simple_reflections[i]))
        gens.append(SimpleAffineReflection(("f", i), elt))
    for c, (theta, theta_cv) in enumerate(rs.highest_roots):
        s_theta = rs.reflection(theta)
        elt = AffineElt(datum, theta_cv, s_theta)
        gens.append(SimpleAffineReflection(("a", c), elt))
    with rs.memo_lock:
        rs.memo["gens"] = tuple(gens)
    return gens


# ---------------------------------------------------------------------
# Length, two ways.
# ---------------------------------------------------------------------

def length(a: AffineElt) -> int:
    """Iwahori-Matsumoto closed formula for the length (memoized)."""
    rs = root_system(a.datum)
    key = ("len", a.translation, a.finite.matrix)
    cached = rs.memo.get(key)
    if cached is not None:
        return cached
    lam = a.translation
    w = a.finite
    total = 0
    pos = set(rs.positive_roots)
    for alpha in rs.positive_roots:
        k = dot(lam, alpha)
        # coapply is the adjoint, i.e. w^-1 acting on the root.
        if w.coapply(alpha) in pos:
            total += abs(k)
        else:
            total += abs(k - 1)
    with rs.memo_lock:
        rs.memo[key] = total
    return total


def length_by_hyperplanes(a: AffineElt) -> int:
    """Independent length: count reflecting hyperplanes H_{alpha,m}
    separating the open fundamental alcove from its image under a.

    Uses an exact rational interior point p (0 < <p,alpha> < 1 for all
    positive alpha); no pairing of p or a(p) with a root is ever an
    integer, so open/closed distinctions cannot bite.
    """
    rs = root_system(a.datum)
    # <regular, alpha> is a positive integer (the height) for alpha > 0;
    # dividing by 1 + max height puts the basepoint strictly inside A_0.
    heights = [sum(x * Fraction(ai) for x, ai in zip(rs.regular_coweight, alpha))
               for alpha in rs.positive_roots]
    denom = 1 + max(heights)
    p = tuple(x / denom for x in rs.regular_coweight)
    q = a.apply(p)
    total = 0
    for alpha in rs.positive_roots:
        x = sum(pi * Fraction(ai) for pi, ai in zip(p, alpha))
        y = sum(qi * Fraction(ai) for qi, ai in zip(q, alpha))
        lo, hi = min(x, y), max(x, y)
        if lo.denominator == 1 or hi.denominator == 1:
            raise InternalError("alcove basepoint landed on a wall")
        total += math.floor(hi) - math.floor(lo)
    return total


def is_length_zero(a: AffineElt) -> bool:
    return length(a) == 0


# ---------------------------------------------------------------------
# Omega and reduced words.
# ---------------------------------------------------------------------

_omega_cache: dict[RootDatum, dict[Vector, AffineElt]] = {}
_omega_lock = threading.Lock()


def _coroot_lattice_coords(datum: RootDatum, vec: Vector) -> tuple[int, ...] | None:
    """Integer coordinates of vec in the simple coroots, or None."""
    cols = [[datum.simple_coroots[j][k] for j in range(datum.n_simple)]
            for k in range(datum.rank)]
    return linalg.solve_int(cols, list(vec))


def in_coxeter_subgroup(a: AffineElt) -> bool:
    """True iff the element lies in W = Z R^ x| W_f."""
    return _coroot_lattice_coords(a.datum, a.translation) is not None


def omega_decompose(a: AffineElt, bound: int | None = None) -> tuple[AffineElt, AffineElt]:
    """Write a = omega * y with l(omega) = 0 and y in the Coxeter subgroup W.

    omega is found by a cached search over length-zero elements t_mu w
    with mu in the class of a's translation modulo Z R^; representatives
    are minuscule-like, so a norm bound of 4*rank (doubled once on a
    miss) always suffices for a valid datum.
    """
    datum = a.datum
    if bound is None:
        bound = 4 * max(datum.rank, 1)
    with _omega_lock:
        cache = _omega_cache.setdefault(datum, {})
    for mu, cached in list(cache.items()):
        if _coroot_lattice_coords(datum, vsub(a.translation, mu)) is not None:
            omega = cached
            break
    else:
        omega = _find_omega(a, bound)
        with _omega_lock:
            cache[omega.translation] = omega
    y = omega.inv() * a
    if not in_coxeter_subgroup(y):
        raise InternalError("omega factor did not reduce to the Coxeter subgroup")
    return omega, y


def _find_omega(a: AffineElt, bound: int) -> AffineElt:
    datum = a.datum
    rs = root_system(datum)
    for attempt in range(2):
        b = bound * (attempt + 1)
        for mu in _lattice_box(datum.rank, b):
            if _coroot_lattice_coords(datum, vsub(a.translation, mu)) is None:
                continue
            for w in rs.weyl_elements():
                cand = AffineElt(datum, mu, w)
                if length(cand) == 0:
                    return cand
    raise SearchBoundExceededError(
        "no length-zero representative found within the search bound; "
        "the root datum is likely inconsistent")


def _lattice_box(rank: int, bound: int) -> Iterator[Vector]:
    def rec(prefix: tuple[int, ...]) -> Iterator[Vector]:
        if len(prefix) == rank:
            yield prefix
            return
        for x in range(-bound, bound + 1):
            yield from rec(prefix + (x,))
    # Scan smaller boxes first so representatives are minimal-norm.
    seen: set[Vector] = set()
    for b in range(bound + 1):
        for vec in rec(()):
            if max((abs(x) for x in vec), default=0) == b and vec not in seen:
                seen.add(vec)
                yield vec


def omega_elements(datum: RootDatum, bound: int = 2) -> list[AffineElt]:
    """All length-zero elements with translation sup-norm <= bound.

    Omega can be infinite (gl2), so this is always a bounded window.
    """
    rs = root_system(datum)
    out = []
    for mu in _lattice_box(datum.rank, bound):
        for w in rs.weyl_elements():
            cand = AffineElt(datum, mu, w)
            if length(cand) == 0:
                out.append(cand)
    return sorted(out, key=element_sort_key)


def reduced_word(a: AffineElt) -> tuple[AffineElt, list[SimpleAffineReflection]]:
    """Factor a = omega * s_1 ... s_k with k = l(a).

    Greedy right-descent: repeatedly strip the lowest-index generator
    that shortens the element.  Memoized per datum.
    """
    rs = root_system(a.datum)
    key = ("rw", a.translation, a.finite.matrix)
    cached = rs.memo.get(key)
    if cached is not None:
        return cached[0], list(cached[1])
    gens = simple_affine_reflections(a.datum)
    letters: list[SimpleAffineReflection] = []
    cur = a
    cur_len = length(cur)
    while cur_len > 0:
        for g in gens:
            nxt = cur * g.element
            nxt_len = length(nxt)
            if nxt_len < cur_len:
                letters.append(g)
                cur, cur_len = nxt, nxt_len
                break
        else:
            raise InternalError("positive-length element with no right descent")
    letters.reverse()
    if not is_length_zero(cur):
        raise InternalError("reduced word peeled to a non-length-zero prefix")
    with rs.memo_lock:
        rs.memo[key] = (cur, tuple(letters))
    return cur, letters


def element_sort_key(a: AffineElt):
    """Total order used for all serialized output: (length, translation
    lex, finite-part reduced word lex)."""
    rs = root_system(a.datum)
    w = rs.canonical(a.finite)
    return (length(a), a.translation, w.word or ())


def descends_on_left(a: AffineElt, g: SimpleAffineReflection) -> bool:
    return length(g.element * a) < length(a)


def is_min_coset_rep(a: AffineElt) -> bool:
    """True iff a is the minimal-length element of W_f * a (no finite
    simple reflection descends on the left)."""
    gens = simple_affine_reflections(a.datum)
    return not any(descends_on_left(a, g) for g in gens if g.kind[0] == "f")


# ---------------------------------------------------------------------
# Bruhat order.
# ---------------------------------------------------------------------

def bruhat_leq(x: AffineElt, y: AffineElt) -> bool:
    """Bruhat order on W_ext: comparable only within one Omega-component,
    where it is the Coxeter Bruhat order of the W-parts."""
    if x.datum != y.datum:
        raise DatumMismatchError("cannot compare elements over different data")
    ox, wx = omega_decompose(x)
    oy, wy = omega_decompose(y)
    if ox != oy:
        return False
    return _bruhat_leq_coxeter(wx, wy)


def _bruhat_leq_coxeter(x: AffineElt, y: AffineElt) -> bool:
    """Lifting-property recursion on l(y); x, y in the Coxeter subgroup."""
    lx, ly = length(x), length(y)
    if lx > ly:
        return False
    if ly == 0:
        return x.is_identity()
    if x == y:
        return True
    gens = simple_affine_reflections(y.datum)
    for g in gens:
        ys = y * g.element
        if length(ys) < ly:
            xs = x * g.element
            if length(xs) < lx:
                return _bruhat_leq_coxeter(xs, ys)
            return _bruhat_leq_coxeter(x, ys)
    raise InternalError("positive-length element with no right descent")


def bruhat_leq_by_subwords(x: AffineElt, y: AffineElt) -> bool:
    """Brute-force subword test (oracle for bruhat_leq): x <= y iff some
    subword of a reduced word of y multiplies to x."""
    if x.datum != y.datum:
        raise DatumMismatchError("cannot compare elements over different data")
    ox, wx = omega_decompose(x)
    oy, wy = omega_decompose(y)
    if ox != oy:
        return False
    _, letters = reduced_word(wy)
    n = len(letters)
    for mask in range(1 << n):
        prod = identity(x.datum)
        for i in range(n):
            if mask & (1 << i):
                prod = prod * letters[i].element
        if prod == wx:
            return True
    return False
