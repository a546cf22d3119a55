"""The Iwahori-Matsumoto Hecke algebra of an extended affine Weyl group.

Free Z[v, v^-1]-module on the group, standard basis {delta_x}, with

    delta_x delta_y = delta_xy        when l(xy) = l(x) + l(y),
    delta_s^2 = delta_id + (v^-1 - v) delta_s   for Coxeter generators s.

On top of the standard basis this module provides: inverses of basis
elements, the commuting lattice elements theta_lambda (products
delta_{t_{lambda+}} delta_{t_{lambda-}}^{-1} over a dominant
decomposition, independent of the choice), the finite-left normal form
sum c_{w,mu} delta_w theta_mu (``BernsteinElt``), orbit-sum central
elements z_lambda, the bar involution, and the Kazhdan-Lusztig basis
b_x characterized by bar-invariance and unitriangularity with
coefficients in vZ[v].

For length-zero omega the convention b_{omega y} := delta_omega b_y is
used; it is forced by l(omega y) = l(y) together with bar-invariance.
"""

from __future__ import annotations

import threading
from typing import Iterable, Mapping

from .affine import (AffineElt, GenId, SimpleAffineReflection, element_sort_key,
                     identity, in_coxeter_subgroup, length, omega_decompose,
                     omega_elements, reduced_word, simple_affine_reflections,
                     translation)
from .errors import (DatumMismatchError, InputError, InternalError,
                     NonDominantError, SearchBoundExceededError)
from .laurent import (ONE, V, V_INV, ZERO, LaurentPoly, Vector, coerce, dot,
                      vadd, vneg, vsub)
from .rootdata import (FiniteWeylElt, RootDatum, identity_weyl,
                       is_dominant_coweight, reflect, root_system)

_KL_LENGTH_CAP = 64


class HeckeElt:
    """A finitely supported Z[v,v^-1]-combination of standard basis elements."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum: RootDatum,
                 terms: Mapping[AffineElt, LaurentPoly | int] | Iterable = ()):
        self.datum = datum
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[AffineElt, LaurentPoly] = {}
        for x, c in items:
            c = coerce(c)
            prev = acc.get(x)
            c = c if prev is None else prev + c
            acc[x] = c
        self.terms = {x: c for x, c in acc.items() if not c.is_zero()}

    # -- basics -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, x: AffineElt) -> LaurentPoly:
        return self.terms.get(x, ZERO)

    def support(self) -> list[AffineElt]:
        return sorted(self.terms, key=element_sort_key)

    def __eq__(self, other) -> bool:
        return (isinstance(other, HeckeElt) and self.datum == other.datum
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.datum, tuple(sorted(
            ((x.translation, x.finite.matrix, c.terms) for x, c in self.terms.items())))))

    def _check(self, other: HeckeElt) -> None:
        if self.datum != other.datum:
            raise DatumMismatchError("Hecke elements over different root data")

    def __add__(self, other: HeckeElt) -> HeckeElt:
        self._check(other)
        return HeckeElt(self.datum, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> HeckeElt:
        return HeckeElt(self.datum, [(x, -c) for x, c in self.terms.items()])

    def __sub__(self, other: HeckeElt) -> HeckeElt:
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> HeckeElt:
        c = coerce(c)
        return HeckeElt(self.datum, [(x, d * c) for x, d in self.terms.items()])

    def __mul__(self, other: HeckeElt) -> HeckeElt:
        return h_mul(self, other)

    def __repr__(self) -> str:
        if not self.terms:
            return "HeckeElt(0)"
        bits = []
        for x in self.support():
            bits.append(f"({self.terms[x]})*d[{list(x.translation)};{x.finite!r}]")
        return " + ".join(bits)

    def to_json(self) -> list[dict]:
        return [{"elt": x.to_json(), "coeff": self.terms[x].to_json()}
                for x in self.support()]

    @staticmethod
    def from_json(datum: RootDatum, data: Iterable[Mapping]) -> HeckeElt:
        try:
            return HeckeElt(datum, [
                (AffineElt.from_json(datum, item["elt"]),
                 LaurentPoly.from_json(item["coeff"])) for item in data])
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad Hecke element encoding: {data!r}") from exc


def delta(x: AffineElt) -> HeckeElt:
    return HeckeElt(x.datum, {x: ONE})


def one(datum: RootDatum) -> HeckeElt:
    return delta(identity(datum))


def generator_delta(datum: RootDatum, kind: GenId) -> HeckeElt:
    for g in simple_affine_reflections(datum):
        if g.kind == kind:
            return delta(g.element)
    raise InputError(f"no Coxeter generator {kind!r}")


# ---------------------------------------------------------------------
# Multiplication and standard-basis inverses.
# ---------------------------------------------------------------------

def _mul_basis_gen(a: HeckeElt, g: SimpleAffineReflection) -> HeckeElt:
    """Right multiplication by delta_s for one Coxeter generator s."""
    out: dict[AffineElt, LaurentPoly] = {}
    vdiff = V_INV - V
    for x, c in a.terms.items():
        xs = x * g.element
        if length(xs) > length(x):
            out[xs] = out.get(xs, ZERO) + c
        else:
            out[xs] = out.get(xs, ZERO) + c
            out[x] = out.get(x, ZERO) + c * vdiff
    return HeckeElt(a.datum, out)


def _mul_basis_gen_left(g: SimpleAffineReflection, a: HeckeElt) -> HeckeElt:
    """Left multiplication by delta_s."""
    out: dict[AffineElt, LaurentPoly] = {}
    vdiff = V_INV - V
    for x, c in a.terms.items():
        sx = g.element * x
        if length(sx) > length(x):
            out[sx] = out.get(sx, ZERO) + c
        else:
            out[sx] = out.get(sx, ZERO) + c
            out[x] = out.get(x, ZERO) + c * vdiff
    return HeckeElt(a.datum, out)


def _mul_basis_omega(a: HeckeElt, omega: AffineElt) -> HeckeElt:
    return HeckeElt(a.datum, [(x * omega, c) for x, c in a.terms.items()])


def h_mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Product, by reduced-word factorization of whichever factor has the
    smaller support (the other side is folded through it one Coxeter
    letter at a time)."""
    a._check(b)
    total = HeckeElt(a.datum)
    if len(a.terms) <= len(b.terms):
        for x, c in a.terms.items():
            omega, letters = reduced_word(x)
            part = b
            for g in reversed(letters):  # delta_x b = delta_om delta_s1 ... delta_sk b
                part = _mul_basis_gen_left(g, part)
            part = HeckeElt(a.datum, [(omega * z, d) for z, d in part.terms.items()])
            total = total + part.scale(c)
    else:
        for y, c in b.terms.items():
            omega, letters = reduced_word(y)
            part = _mul_basis_omega(a, omega)
            for g in letters:
                part = _mul_basis_gen(part, g)
            total = total + part.scale(c)
    return total


def h_inv_std(x: AffineElt) -> HeckeElt:
    """Inverse of the standard basis element delta_x (memoized).

    Built along a reduced word via delta_s^-1 = delta_s + (v - v^-1) and
    delta_omega^-1 = delta_{omega^-1}.
    """
    rs = root_system(x.datum)
    key = ("hinv", x.translation, x.finite.matrix)
    cached = rs.memo.get(key)
    if cached is not None:
        return cached
    omega, letters = reduced_word(x)
    acc = one(x.datum)
    vdiff = V - V_INV
    for g in reversed(letters):  # (omega s_1...s_k)^-1 = s_k^-1 ... s_1^-1 omega^-1
        acc = _mul_basis_gen(acc, g) + acc.scale(vdiff)
    acc = _mul_basis_omega(acc, omega.inv())
    with rs.memo_lock:
        rs.memo[key] = acc
    return acc


# ---------------------------------------------------------------------
# theta elements.
# ---------------------------------------------------------------------

def dominant_decomposition(datum: RootDatum, lam: Vector) -> tuple[Vector, Vector]:
    """A deterministic lam = lam_plus - lam_minus with both parts dominant:
    lam_minus is the smallest multiple of a fixed strictly dominant
    coweight that pushes lam into the dominant cone."""
    lam = tuple(int(x) for x in lam)
    rs = root_system(datum)
    nu = rs.strictly_dominant_coweight
    k = 0
    for alpha in datum.simple_roots:
        num, den = -dot(lam, alpha), dot(nu, alpha)
        if num > 0:
            k = max(k, -(-num // den))
    minus = tuple(k * x for x in nu)
    return vadd(lam, minus), minus


def _theta_minus_power(datum: RootDatum, k: int) -> HeckeElt:
    """theta_{-k nu} for the fixed strictly dominant nu, built incrementally
    (each step multiplies by one short inverse, keeping supports small)."""
    rs = root_system(datum)
    key = ("thpow", k)
    cached = rs.memo.get(key)
    if cached is not None:
        return cached
    if k == 0:
        out = one(datum)
    else:
        nu = rs.strictly_dominant_coweight
        out = h_mul(_theta_minus_power(datum, k - 1),
                    h_inv_std(translation(datum, nu)))
    with rs.memo_lock:
        rs.memo[key] = out
    return out


def theta(datum: RootDatum, lam: Iterable[int]) -> HeckeElt:
    """The commuting lattice element theta_lambda."""
    lam = tuple(int(x) for x in lam)
    rs = root_system(datum)
    key = ("theta", lam)
    cached = rs.memo.get(key)
    if cached is not None:
        return cached
    plus, minus = dominant_decomposition(datum, lam)
    out = delta(translation(datum, plus))
    if any(minus):
        nu = rs.strictly_dominant_coweight
        k = minus[_first_nonzero(nu)] // nu[_first_nonzero(nu)]
        out = h_mul(out, _theta_minus_power(datum, k))
    with rs.memo_lock:
        rs.memo[key] = out
    return out


def _first_nonzero(vec: Vector) -> int:
    return next(i for i, x in enumerate(vec) if x)


def theta_string(datum: RootDatum, lam: Vector, i: int) -> list[tuple[Vector, int]]:
    """Signed exponent list of (theta_lam - theta_{s_i lam}) / (1 - theta_{-alpha_i^}),
    the geometric string along the alpha_i^-direction."""
    lam = tuple(int(x) for x in lam)
    a = datum.simple_coroots[i]
    k = dot(lam, datum.simple_roots[i])
    if k > 0:
        return [(vsub(lam, tuple(j * x for x in a)), 1) for j in range(k)]
    if k == 0:
        return []
    return [(vadd(lam, tuple(j * x for x in a)), -1) for j in range(1, -k + 1)]


# ---------------------------------------------------------------------
# Finite-Hecke helpers (dict FiniteWeylElt -> LaurentPoly).
# ---------------------------------------------------------------------

def _fmul_gen(datum: RootDatum, terms: dict, i: int, side: str) -> dict:
    rs = root_system(datum)
    s = rs.simple_reflections[i]
    out: dict[FiniteWeylElt, LaurentPoly] = {}
    vdiff = V_INV - V
    for w, c in terms.items():
        ws = rs.canonical(w.compose(s) if side == "right" else s.compose(w))
        if rs.finite_length(ws) > rs.finite_length(w):
            out[ws] = out.get(ws, ZERO) + c
        else:
            out[ws] = out.get(ws, ZERO) + c
            out[w] = out.get(w, ZERO) + c * vdiff
    return {w: c for w, c in out.items() if not c.is_zero()}


def _finite_delta_inv(datum: RootDatum, w: FiniteWeylElt) -> dict:
    """delta_w^-1 inside the finite Hecke algebra (memoized)."""
    rs = root_system(datum)
    w = rs.canonical(w)
    key = ("finv", w.matrix)
    cached = rs.memo.get(key)
    if cached is not None:
        return cached
    acc = {identity_weyl(datum.rank): ONE}
    vdiff = V - V_INV
    for i in reversed(w.word or ()):
        folded = _fmul_gen(datum, acc, i, "right")
        for u, c in acc.items():
            folded[u] = folded.get(u, ZERO) + c * vdiff
        acc = {u: c for u, c in folded.items() if not c.is_zero()}
    with rs.memo_lock:
        rs.memo[key] = acc
    return acc


def _push_theta(datum: RootDatum, nu: Vector, word: tuple[int, ...]) -> dict:
    """theta_nu * delta_{s_word} as a dict {(w, mu): coeff} in normal form."""
    if not word:
        return {(identity_weyl(datum.rank), nu): ONE}
    rs = root_system(datum)
    key = ("push", nu, word)
    cached = rs.memo.get(key)
    if cached is not None:
        return cached
    i, rest = word[0], word[1:]
    out: dict[tuple[FiniteWeylElt, Vector], LaurentPoly] = {}
    # theta_nu delta_i = delta_i theta_{s_i nu} - (v - v^-1) * string(nu, i)
    sub = _push_theta(datum, reflect(datum, i, nu), rest)
    for (w, mu), c in sub.items():
        for w2, c2 in _fmul_gen(datum, {w: c}, i, "left").items():
            out[(w2, mu)] = out.get((w2, mu), ZERO) + c2
    vdiff = V - V_INV
    for nu2, sign in theta_string(datum, nu, i):
        for (w, mu), c in _push_theta(datum, nu2, rest).items():
            out[(w, mu)] = out.get((w, mu), ZERO) - c * (sign * vdiff)
    out = {k: c for k, c in out.items() if not c.is_zero()}
    with rs.memo_lock:
        rs.memo[key] = out
    return out


# ---------------------------------------------------------------------
# Bernstein normal form.
# ---------------------------------------------------------------------

class BernsteinElt:
    """sum c_{w,mu} delta_w theta_mu with the finite part on the left."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum: RootDatum,
                 terms: Mapping | Iterable = ()):
        self.datum = datum
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[tuple[FiniteWeylElt, Vector], LaurentPoly] = {}
        for key, c in items:
            c = coerce(c)
            prev = acc.get(key)
            acc[key] = c if prev is None else prev + c
        self.terms = {k: c for k, c in acc.items() if not c.is_zero()}

    def __eq__(self, other) -> bool:
        return (isinstance(other, BernsteinElt) and self.datum == other.datum
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.datum, frozenset((w.matrix, mu, c.terms)
                                           for (w, mu), c in self.terms.items())))

    def sorted_items(self):
        rs = root_system(self.datum)
        return sorted(self.terms.items(),
                      key=lambda kv: (rs.finite_length(kv[0][0]),
                                      rs.canonical(kv[0][0]).word or (), kv[0][1]))

    def expand(self) -> HeckeElt:
        """Back to the standard basis: sum c * delta_w * theta_mu."""
        total = HeckeElt(self.datum)
        for (w, mu), c in self.terms.items():
            dw = delta(AffineElt(self.datum, (0,) * self.datum.rank,
                                 root_system(self.datum).canonical(w)))
            total = total + h_mul(dw, theta(self.datum, mu)).scale(c)
        return total

    def __repr__(self) -> str:
        bits = [f"({c})*d[{w!r}]*theta{list(mu)}" for (w, mu), c in self.sorted_items()]
        return " + ".join(bits) if bits else "BernsteinElt(0)"

    def to_json(self) -> list[dict]:
        rs = root_system(self.datum)
        return [{"w": [i + 1 for i in (rs.canonical(w).word or ())],
                 "mu": list(mu),
                 "coeff": c.to_json()}
                for (w, mu), c in self.sorted_items()]


def _bern_of_omega(datum: RootDatum, omega: AffineElt) -> dict:
    """delta_omega = theta_mu * delta_{u^-1}^-1 in normal form, for
    omega = t_mu u of length zero (mu is then dominant)."""
    rs = root_system(datum)
    key = ("bom", omega.translation, omega.finite.matrix)
    cached = rs.memo.get(key)
    if cached is not None:
        return cached
    mu, u = omega.translation, omega.finite
    if not is_dominant_coweight(datum, mu):
        raise InternalError("length-zero element with non-dominant translation")
    out: dict[tuple[FiniteWeylElt, Vector], LaurentPoly] = {}
    for w, c in _finite_delta_inv(datum, u.inverse()).items():
        for (w2, nu), c2 in _push_theta(datum, mu, rs.canonical(w).word or ()).items():
            k2 = (w2, nu)
            out[k2] = out.get(k2, ZERO) + c * c2
    with rs.memo_lock:
        rs.memo[key] = out
    return out


def _bern_fold_gen(datum: RootDatum, terms: dict, g: SimpleAffineReflection) -> dict:
    rs = root_system(datum)
    out: dict[tuple[FiniteWeylElt, Vector], LaurentPoly] = {}

    def add(w, mu, c):
        if not c.is_zero():
            key = (w, mu)
            prev = out.get(key)
            out[key] = c if prev is None else prev + c

    if g.kind[0] == "f":
        i = g.kind[1]
        vdiff = V - V_INV
        for (w, mu), c in terms.items():
            for w2, c2 in _fmul_gen(datum, {w: ONE}, i, "right").items():
                add(w2, reflect(datum, i, mu), c * c2)
            for nu, sign in theta_string(datum, mu, i):
                add(w, nu, -c * (sign * vdiff))
    else:
        comp = g.kind[1]
        theta_root, theta_cv = rs.highest_roots[comp]
        s_theta = rs.reflection(theta_root)
        sinv = _finite_delta_inv(datum, s_theta)
        for (w, mu), c in terms.items():
            nu = vadd(mu, theta_cv)
            for u, d in sinv.items():
                for (wp, mup), e in _push_theta(datum, nu,
                                                rs.canonical(u).word or ()).items():
                    # left-multiply delta_w * delta_wp
                    left = {w: ONE}
                    for j in rs.canonical(wp).word or ():
                        left = _fmul_gen(datum, left, j, "right")
                    for w2, f in left.items():
                        add(w2, mup, c * d * e * f)
    return {k: c for k, c in out.items() if not c.is_zero()}


def _bernstein_of_basis(datum: RootDatum, x: AffineElt) -> dict:
    """Normal form of one standard basis element delta_x (memoized)."""
    rs = root_system(datum)
    key = ("bofx", x.translation, x.finite.matrix)
    cached = rs.memo.get(key)
    if cached is not None:
        return cached
    omega, letters = reduced_word(x)
    part = _bern_of_omega(datum, omega)
    for g in letters:
        part = _bern_fold_gen(datum, part, g)
    with rs.memo_lock:
        rs.memo[key] = part
    return part


def to_bernstein(a: HeckeElt) -> BernsteinElt:
    """Rewrite into the finite-left normal form; expand() inverts exactly."""
    datum = a.datum
    total: dict[tuple[FiniteWeylElt, Vector], LaurentPoly] = {}
    for x, c in a.terms.items():
        for key, d in _bernstein_of_basis(datum, x).items():
            total[key] = total.get(key, ZERO) + c * d
    return BernsteinElt(datum, total)


def bern_mul_hecke(bern: BernsteinElt, h: HeckeElt) -> BernsteinElt:
    """Right-multiply a normal form by a Hecke element without leaving
    normal form (h is factored into length-zero parts and Coxeter letters)."""
    datum = bern.datum
    rs = root_system(datum)
    total: dict[tuple[FiniteWeylElt, Vector], LaurentPoly] = {}
    for y, c in h.terms.items():
        omega, letters = reduced_word(y)
        part = bern.terms
        if not omega.is_identity():
            bom = _bern_of_omega(datum, omega)
            nxt: dict[tuple[FiniteWeylElt, Vector], LaurentPoly] = {}
            for (w, nu), d in part.items():
                for (u, mu2), e in bom.items():
                    # delta_w theta_nu delta_u theta_mu2
                    for (u2, nu2), f in _push_theta(
                            datum, nu, rs.canonical(u).word or ()).items():
                        left = {w: ONE}
                        for j in rs.canonical(u2).word or ():
                            left = _fmul_gen(datum, left, j, "right")
                        for w2, g2 in left.items():
                            key = (w2, vadd(nu2, mu2))
                            total_c = d * e * f * g2
                            nxt[key] = nxt.get(key, ZERO) + total_c
            part = {k: v for k, v in nxt.items() if not v.is_zero()}
        for g in letters:
            part = _bern_fold_gen(datum, part, g)
        for key, d in part.items():
            total[key] = total.get(key, ZERO) + c * d
    return BernsteinElt(datum, total)


# ---------------------------------------------------------------------
# Center.
# ---------------------------------------------------------------------

def weyl_orbit(datum: RootDatum, lam: Vector) -> list[Vector]:
    rs = root_system(datum)
    return sorted({w.apply(tuple(lam)) for w in rs.weyl_elements()})


def z_center(datum: RootDatum, lam: Iterable[int]) -> HeckeElt:
    """The orbit sum z_lambda = sum over the Weyl orbit of theta_mu;
    a central element for dominant lambda."""
    lam = tuple(int(x) for x in lam)
    if not is_dominant_coweight(datum, lam):
        raise NonDominantError(f"{lam} is not a dominant coweight")
    total = HeckeElt(datum)
    for mu in weyl_orbit(datum, lam):
        total = total + theta(datum, mu)
    return total


def is_central(a: HeckeElt, bound: int = 2) -> bool:
    """Test commutation against a generating set: every simple Coxeter
    generator, the length-zero elements with translation norm <= bound,
    and theta of each lattice basis vector."""
    datum = a.datum
    tests: list[HeckeElt] = []
    for g in simple_affine_reflections(datum):
        tests.append(delta(g.element))
    for omega in omega_elements(datum, bound):
        if not omega.is_identity():
            tests.append(delta(omega))
    for i in range(datum.rank):
        e = tuple(1 if j == i else 0 for j in range(datum.rank))
        tests.append(theta(datum, e))
    return all(h_mul(a, t) == h_mul(t, a) for t in tests)


# ---------------------------------------------------------------------
# Bar involution and the Kazhdan-Lusztig basis.
# ---------------------------------------------------------------------

def h_bar(a: HeckeElt) -> HeckeElt:
    """The ring involution with v -> v^-1 and delta_x -> (delta_{x^-1})^-1."""
    total = HeckeElt(a.datum)
    for x, c in a.terms.items():
        total = total + h_inv_std(x.inv()).scale(c.bar())
    return total


_kl_cache: dict[tuple[RootDatum, AffineElt], HeckeElt] = {}
_kl_lock = threading.Lock()


def kl_b(x: AffineElt) -> HeckeElt:
    """The Kazhdan-Lusztig basis element b_x: the unique bar-invariant
    element delta_x + sum_{y < x} h_{y,x} delta_y with h_{y,x} in vZ[v].

    Computed by the generator recursion with mu-coefficient corrections;
    for x = omega*y with omega of length zero, b_x = delta_omega * b_y.
    """
    datum = x.datum
    with _kl_lock:
        cached = _kl_cache.get((datum, x))
    if cached is not None:
        return cached
    if length(x) > _KL_LENGTH_CAP:
        raise SearchBoundExceededError(f"KL recursion capped at length {_KL_LENGTH_CAP}")

    omega, y = omega_decompose(x)
    if not omega.is_identity():
        # delta_omega * b_y; lengths are unchanged by omega, so this stays
        # a standard-basis relabelling.
        out = HeckeElt(datum, [(omega * z, c) for z, c in kl_b(y).terms.items()])
    elif y.is_identity():
        out = delta(y)
    else:
        g = next(g for g in simple_affine_reflections(datum)
                 if length(y * g.element) < length(y))
        b_s = delta(g.element) + delta(identity(datum)).scale(V)
        cand = h_mul(kl_b(y * g.element), b_s)
        out = _kl_correct(cand, y)
    with _kl_lock:
        _kl_cache[(datum, x)] = out
    return out


def _kl_correct(cand: HeckeElt, x: AffineElt) -> HeckeElt:
    """Subtract constant-term multiples of lower b_z until unitriangular
    with coefficients in vZ[v]."""
    for _ in range(len(cand.terms) + 1):
        bad = [(length(z), z, c) for z, c in cand.terms.items()
               if z != x and c.coefficient(0) != 0]
        if not bad:
            break
        bad.sort(key=lambda t: -t[0])
        _, z, c = bad[0]
        cand = cand - kl_b(z).scale(c.coefficient(0))
    else:
        raise InternalError("KL correction loop failed to stabilize")
    if cand.coefficient(x) != ONE:
        raise InternalError("KL candidate is not unitriangular")
    for z, c in cand.terms.items():
        if z != x and not c.in_v_times_nonneg():
            raise InternalError(f"KL coefficient {c} for {z!r} escapes vZ[v]")
    return cand


def b_generator(datum: RootDatum, kind: GenId) -> HeckeElt:
    """b_s = delta_s + v for a Coxeter generator."""
    return generator_delta(datum, kind) + one(datum).scale(V)
