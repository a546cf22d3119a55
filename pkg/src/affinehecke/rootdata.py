"""Root data, finite Weyl groups, dominance order and Weyl characters.

A root datum is a pair of dual lattices X (weights) and X^ (coweights),
both realized as Z^rank with the standard dot product as the perfect
pairing, together with simple roots in X and simple coroots in X^.  The
finite Weyl group acts on coweights by the stored matrices and on
weights by their transposes.

Conventions differ across the literature on which of the two dual groups
a datum labels (the Langlands-dual datum swaps roots and coroots), so
each shipped preset documents which group its lattices belong to rather
than leaving it implicit.

``rho_weight`` is supplied with the datum rather than computed: the
half-sum of positive roots need not lie in X (it does not for an adjoint
datum like pgl2), while for a group like GL2 any weight pairing to 1
with every simple coroot works, the central discrepancy cancelling from
the Weyl character formula.  Presets that admit no such weight carry
none, and character computations on them are rejected.
"""

from __future__ import annotations

import dataclasses
import json
import threading
from fractions import Fraction

from . import linalg
from .errors import InputError, InternalError, NonDominantError
from .laurent import GroupAlgebraElt, Vector, dot, vadd, vsub

_ROOT_CLOSURE_CAP = 1000
_WEYL_CLOSURE_CAP = 100000


@dataclasses.dataclass(frozen=True)
class RootDatum:
    """A finite-type root datum on the lattice Z^rank.

    simple_roots live in X, simple_coroots in X^; the pairing of a
    coweight with a weight is the dot product.  rho_weight, when
    present, is a weight pairing to 1 with every simple coroot.
    """

    name: str
    rank: int
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    rho_weight: Vector | None = None

    def __post_init__(self):
        n = len(self.simple_roots)
        if len(self.simple_coroots) != n:
            raise InputError("need equally many simple roots and coroots")
        if any(len(a) != self.rank for a in self.simple_roots + self.simple_coroots):
            raise InputError("simple (co)roots must have length = rank")
        for i in range(n):
            for j in range(n):
                c = dot(self.simple_coroots[j], self.simple_roots[i])
                if i == j and c != 2:
                    raise InputError(f"Cartan entry <a{j}^,a{i}> = {c}, expected 2")
                if i != j and c > 0:
                    raise InputError(f"Cartan entry <a{j}^,a{i}> = {c} is positive")
        if self.rho_weight is not None:
            if len(self.rho_weight) != self.rank:
                raise InputError("rho_weight has wrong rank")
            for cv in self.simple_coroots:
                if dot(cv, self.rho_weight) != 1:
                    raise InputError("rho_weight must pair to 1 with every simple coroot")

    @property
    def n_simple(self) -> int:
        return len(self.simple_roots)

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Entries c[i][j] = <alpha_j^, alpha_i>."""
        return tuple(
            tuple(dot(cv, rt) for cv in self.simple_coroots)
            for rt in self.simple_roots)

    def pair(self, coweight: Vector, weight: Vector) -> int:
        return dot(coweight, weight)

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "rank": self.rank,
            "simple_roots": [list(a) for a in self.simple_roots],
            "simple_coroots": [list(a) for a in self.simple_coroots],
            "rho_weight": list(self.rho_weight) if self.rho_weight else None,
        }
        return out

    @staticmethod
    def from_json(data: dict) -> RootDatum:
        try:
            rho = data.get("rho_weight")
            return RootDatum(
                name=str(data.get("name", "custom")),
                rank=int(data["rank"]),
                simple_roots=tuple(tuple(int(x) for x in a) for a in data["simple_roots"]),
                simple_coroots=tuple(tuple(int(x) for x in a) for a in data["simple_coroots"]),
                rho_weight=tuple(int(x) for x in rho) if rho else None,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad root datum file: {exc}") from exc


@dataclasses.dataclass(frozen=True)
class FiniteWeylElt:
    """A finite Weyl group element as its integer matrix acting on coweights.

    The cached reduced word (indices of simple reflections) is not part
    of equality or hashing; two elements are equal iff their matrices are.
    """

    matrix: tuple[tuple[int, ...], ...]
    word: tuple[int, ...] | None = dataclasses.field(default=None, compare=False)

    def apply(self, coweight: Vector) -> Vector:
        return tuple(dot(row, coweight) for row in self.matrix)

    def coapply(self, weight: Vector) -> Vector:
        """The transpose action on weights.

        Since the Weyl action preserves the pairing, the adjoint of w is
        w^-1: coapply computes the *inverse* element acting on a weight.
        For involutions (in particular simple reflections) this is the
        action of w itself.
        """
        n = len(self.matrix)
        return tuple(sum(self.matrix[i][j] * weight[i] for i in range(n))
                     for j in range(n))

    def apply_weight(self, weight: Vector) -> Vector:
        """w acting on a weight, i.e. the inverse-transpose matrix."""
        return self.inverse().coapply(weight)

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return all(self.matrix[i][j] == (1 if i == j else 0)
                   for i in range(n) for j in range(n))

    def compose(self, other: FiniteWeylElt) -> FiniteWeylElt:
        a, b = self.matrix, other.matrix
        n = len(a)
        mat = tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                    for i in range(n))
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word  # a word, not necessarily reduced
        return FiniteWeylElt(mat, word)

    def inverse(self) -> FiniteWeylElt:
        word = tuple(reversed(self.word)) if self.word is not None else None
        return FiniteWeylElt(linalg.invert_int_matrix(self.matrix), word)

    def __repr__(self) -> str:
        if self.word is not None:
            return "w[" + " ".join(f"s{i+1}" for i in self.word) + "]" if self.word else "w[e]"
        return f"FiniteWeylElt({self.matrix})"


def identity_weyl(rank: int) -> FiniteWeylElt:
    mat = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    return FiniteWeylElt(mat, ())


# ---------------------------------------------------------------------
# Derived, cached data about a root datum.
# ---------------------------------------------------------------------

class RootSystem:
    """Saturated root/coroot data for one datum: all roots with their
    coroots, positivity, simple reflection matrices, components, and the
    highest root of each component."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        n, r = datum.n_simple, datum.rank

        # Reflection matrices on coweights: s_i = 1 - alpha_i^ (alpha_i .)
        self.simple_reflections: list[FiniteWeylElt] = []
        for i in range(n):
            a, av = datum.simple_roots[i], datum.simple_coroots[i]
            mat = tuple(tuple((1 if p == q else 0) - av[p] * a[q] for q in range(r))
                        for p in range(r))
            self.simple_reflections.append(FiniteWeylElt(mat, (i,)))

        # Saturate the set of (root, coroot) pairs under simple reflections.
        pairs = {(datum.simple_roots[i], datum.simple_coroots[i]) for i in range(n)}
        frontier = set(pairs)
        while frontier:
            if len(pairs) > _ROOT_CLOSURE_CAP:
                raise InputError("root system does not close up: datum not of finite type")
            new = set()
            for root, coroot in frontier:
                for i in range(n):
                    s = self.simple_reflections[i]
                    img = (s.coapply(root), s.apply(coroot))  # s is an involution
                    if img not in pairs:
                        pairs.add(img)
                        new.add(img)
            frontier = new
        self.root_pairs = sorted(pairs)
        self.coroot_of = dict(self.root_pairs)

        # Positivity: a root is positive iff its (unique, rational)
        # expansion in the simple roots is nonnegative.
        rows = [[Fraction(datum.simple_roots[j][k]) for j in range(n)] for k in range(r)]
        self.positive_roots: list[Vector] = []
        for root, _ in self.root_pairs:
            coeffs = linalg.solve(rows, [Fraction(x) for x in root])
            if coeffs is None:
                raise InternalError(f"root {root} outside span of simple roots")
            if all(c >= 0 for c in coeffs):
                self.positive_roots.append(root)
        self.positive_coroots = [self.coroot_of[a] for a in self.positive_roots]
        self._pos_coroot_set = set(self.positive_coroots)
        if 2 * len(self.positive_roots) != len(self.root_pairs):
            raise InternalError("positive roots are not half of all roots")

        # Strictly dominant rational weight (pairs to 1 with every simple
        # coroot's...): solve <x, alpha_i> = 1, i.e. dot(x, alpha_i) = 1
        # viewing x as a coweight. Used as an alcove-interior basepoint.
        sol = linalg.solve([[Fraction(x) for x in a] for a in datum.simple_roots],
                           [Fraction(1)] * n)
        if sol is None:
            raise InputError("simple roots are linearly dependent")
        self.regular_coweight: tuple[Fraction, ...] = tuple(sol)
        lcm = 1
        for x in sol:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        self.strictly_dominant_coweight: Vector = tuple(int(x * lcm) for x in sol)

        # Same on the weight side: integral weight pairing > 0 with every
        # simple coroot (for dominant decompositions in X).
        solw = linalg.solve([[Fraction(x) for x in a] for a in datum.simple_coroots],
                            [Fraction(1)] * n)
        if solw is None:
            raise InputError("simple coroots are linearly dependent")
        lcm = 1
        for x in solw:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        self.strictly_dominant_weight: Vector = tuple(int(x * lcm) for x in solw)

        # Irreducible components of the Dynkin diagram.
        adj = {i: set() for i in range(n)}
        cart = datum.cartan_matrix()
        for i in range(n):
            for j in range(n):
                if i != j and cart[i][j] != 0:
                    adj[i].add(j)
        seen: set[int] = set()
        self.components: list[tuple[int, ...]] = []
        for i in range(n):
            if i in seen:
                continue
            comp, stack = [], [i]
            while stack:
                k = stack.pop()
                if k in seen:
                    continue
                seen.add(k)
                comp.append(k)
                stack.extend(adj[k] - seen)
            self.components.append(tuple(sorted(comp)))

        # Highest root of each component: the unique root whose expansion
        # dominates every other root of the component coefficientwise.
        self.highest_roots: list[tuple[Vector, Vector]] = []
        for comp in self.components:
            comp_roots = []
            for root, coroot in self.root_pairs:
                coeffs = linalg.solve(rows, [Fraction(x) for x in root])
                if all(c >= 0 for c in coeffs) and \
                        all(coeffs[j] == 0 for j in range(n) if j not in comp):
                    comp_roots.append((tuple(coeffs), root, coroot))
            best = max(comp_roots, key=lambda t: t[0])
            for co, _, _ in comp_roots:
                if any(c > b for c, b in zip(co, best[0])):
                    raise InternalError("no highest root: component not irreducible?")
            self.highest_roots.append((best[1], best[2]))

        self._weyl_lock = threading.Lock()
        self._weyl_elements: list[FiniteWeylElt] | None = None
        self._weyl_index: dict | None = None
        # Shared memo tables for the affine layer (lengths, inverses, ...),
        # all keyed by immutable value keys; guarded by one lock.
        self.memo_lock = threading.Lock()
        self.memo: dict = {}

    def weyl_elements(self) -> list[FiniteWeylElt]:
        """The full finite Weyl group, BFS order (reduced words attached)."""
        with self._weyl_lock:
            if self._weyl_elements is None:
                self._weyl_elements = _enumerate_weyl(self)
                self._weyl_index = {w.matrix: w for w in self._weyl_elements}
            return self._weyl_elements

    def canonical(self, w: FiniteWeylElt) -> FiniteWeylElt:
        """The stored copy of w, with its BFS-reduced word attached."""
        self.weyl_elements()
        try:
            return self._weyl_index[w.matrix]
        except KeyError:
            raise InputError("matrix does not belong to the finite Weyl group")

    def finite_length(self, w: FiniteWeylElt) -> int:
        """Number of positive coroots sent negative (= reduced word length)."""
        return sum(1 for cv in self.positive_coroots
                   if w.apply(cv) not in self._pos_coroot_set)

    def reflection(self, root: Vector) -> FiniteWeylElt:
        """The reflection attached to any root, as a canonical group element."""
        coroot = self.coroot_of[root]
        r = self.datum.rank
        mat = tuple(tuple((1 if p == q else 0) - coroot[p] * root[q] for q in range(r))
                    for p in range(r))
        return self.canonical(FiniteWeylElt(mat))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _enumerate_weyl(rs: RootSystem) -> list[FiniteWeylElt]:
    ident = identity_weyl(rs.datum.rank)
    seen = {ident.matrix: ident}
    frontier = [ident]
    while frontier:
        new = []
        for w in frontier:
            for i, s in enumerate(rs.simple_reflections):
                ws = w.compose(s)
                if ws.matrix not in seen:
                    elt = FiniteWeylElt(ws.matrix, (w.word or ()) + (i,))
                    seen[ws.matrix] = elt
                    new.append(elt)
        frontier = new
        if len(seen) > _WEYL_CLOSURE_CAP:
            raise InputError("Weyl group does not close up: datum not of finite type")
    return sorted(seen.values(), key=lambda w: (len(w.word), w.word))


_system_cache: dict[RootDatum, RootSystem] = {}
_system_by_id: dict[int, tuple[RootDatum, RootSystem]] = {}
_system_lock = threading.Lock()


def root_system(datum: RootDatum) -> RootSystem:
    # Identity fast path: hashing a datum on every elementary operation
    # would dominate the running time of long computations.
    hit = _system_by_id.get(id(datum))
    if hit is not None and hit[0] is datum:
        return hit[1]
    with _system_lock:
        rs = _system_cache.get(datum)
        if rs is None:
            rs = RootSystem(datum)
            _system_cache[datum] = rs
        _system_by_id[id(datum)] = (datum, rs)
        return rs


# ---------------------------------------------------------------------
# Operations.
# ---------------------------------------------------------------------

def reflect(datum: RootDatum, i: int, coweight: Vector) -> Vector:
    """Simple reflection on a coweight: s_i(x) = x - <x, alpha_i> alpha_i^."""
    if not 0 <= i < datum.n_simple:
        raise InputError(f"simple index {i} out of range")
    k = dot(coweight, datum.simple_roots[i])
    return vsub(tuple(coweight), tuple(k * a for a in datum.simple_coroots[i]))


def reflect_weight(datum: RootDatum, i: int, weight: Vector) -> Vector:
    """Simple reflection on a weight: s_i(x) = x - <alpha_i^, x> alpha_i."""
    if not 0 <= i < datum.n_simple:
        raise InputError(f"simple index {i} out of range")
    k = dot(datum.simple_coroots[i], weight)
    return vsub(tuple(weight), tuple(k * a for a in datum.simple_roots[i]))


def enumerate_weyl(datum: RootDatum) -> list[FiniteWeylElt]:
    """All elements of the finite Weyl group, with reduced words attached."""
    return list(root_system(datum).weyl_elements())


def is_dominant_weight(datum: RootDatum, weight: Vector) -> bool:
    return all(dot(cv, weight) >= 0 for cv in datum.simple_coroots)


def is_dominant_coweight(datum: RootDatum, coweight: Vector) -> bool:
    return all(dot(coweight, a) >= 0 for a in datum.simple_roots)


def weyl_character(datum: RootDatum, weight: Vector) -> GroupAlgebraElt:
    """The Weyl character of the dominant weight, as an element of Z[X].

    Computed as the alternant ratio
    sum_w (-1)^l(w) e^{w(weight + rho)}  /  sum_w (-1)^l(w) e^{w(rho)},
    which is exact in the group algebra.
    """
    weight = tuple(int(x) for x in weight)
    if not is_dominant_weight(datum, weight):
        raise NonDominantError(f"{weight} is not a dominant weight")
    if datum.rho_weight is None:
        raise InputError(
            f"datum {datum.name!r} carries no rho_weight; "
            "Weyl characters need a weight pairing to 1 with every simple coroot")
    rs = root_system(datum)

    def alternant(mu: Vector) -> GroupAlgebraElt:
        # coapply(w) is w^-1 on weights; summing over the whole group with
        # l(w^-1) = l(w) makes the reindexing harmless.
        acc = GroupAlgebraElt.zero(datum.rank)
        for w in rs.weyl_elements():
            sign = -1 if rs.finite_length(w) % 2 else 1
            acc = acc + GroupAlgebraElt.monomial(w.coapply(mu), sign)
        return acc

    from .laurent import ga_exact_divide
    num = alternant(vadd(weight, datum.rho_weight))
    den = alternant(datum.rho_weight)
    return ga_exact_divide(num, den)


def dominance_leq(datum: RootDatum, mu: Vector, lam: Vector,
                  side: str = "coweight") -> bool:
    """True iff lam - mu is a nonnegative integer combination of the simple
    coroots (side="coweight") or simple roots (side="weight")."""
    if side == "coweight":
        gens = datum.simple_coroots
    elif side == "weight":
        gens = datum.simple_roots
    else:
        raise InputError("side must be 'coweight' or 'weight'")
    diff = vsub(tuple(lam), tuple(mu))
    cols = [[gens[j][k] for j in range(len(gens))] for k in range(datum.rank)]
    coeffs = linalg.solve_int(cols, list(diff))
    return coeffs is not None and all(c >= 0 for c in coeffs)


# ---------------------------------------------------------------------
# Presets.
# ---------------------------------------------------------------------

def _preset_dir():
    from importlib import resources
    return resources.files(__package__) / "data"


PRESET_NAMES = ("sl2", "pgl2", "gl2", "sl3", "c2")

_preset_cache: dict[str, RootDatum] = {}


def load_datum(name_or_path: str) -> RootDatum:
    """Load a preset by name, or any root-datum JSON file by path.

    Presets are interned: repeated loads return the same object, so
    derived caches are shared.
    """
    if name_or_path in PRESET_NAMES:
        cached = _preset_cache.get(name_or_path)
        if cached is None:
            text = (_preset_dir() / f"{name_or_path}.json").read_text()
            cached = RootDatum.from_json(json.loads(text))
            _preset_cache[name_or_path] = cached
        return cached
    else:
        try:
            with open(name_or_path) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read root datum {name_or_path!r}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"root datum file is not valid JSON: {exc}") from exc
    return RootDatum.from_json(data)
