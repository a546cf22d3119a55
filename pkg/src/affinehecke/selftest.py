"""The acceptance suite: every advertised identity, exactly, tolerance zero.

Each criterion is a function returning (ok, detail).  ``run_all``
executes them in order, enforcing each criterion's wall-clock budget,
and is what both the CLI ``selftest`` subcommand and the test suite
drive.  Everything here is pure computation on the presets; nothing
touches the network or writes files.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from typing import Callable

from . import affine as af
from . import antispherical as asp
from . import hecke as hk
from . import rootdata as rd
from . import springer as sp
from .laurent import ONE, V, V_INV, GroupAlgebraElt, LaurentPoly

SEED = 20260810
FOUR_PRESETS = ("sl2", "pgl2", "gl2", "sl3")

# Frozen by the convention sweep (criterion 9) before anything trusted it:
# theta_lam -> e^{lam - rho}, with the twisting direction as implemented.
GOLDEN_CONVENTION = (-1, 1)


def _load(name: str) -> rd.RootDatum:
    return rd.load_datum(name)


def _box(rank: int, bound: int):
    return itertools.product(range(-bound, bound + 1), repeat=rank)


def _finite_gen(datum, i=0):
    rs = rd.root_system(datum)
    return af.AffineElt(datum, (0,) * datum.rank,
                        rs.canonical(rs.simple_reflections[i]))


def _coxeter_ball(datum, max_len: int) -> list[af.AffineElt]:
    """All elements of the Coxeter subgroup W with length <= max_len."""
    gens = [g.element for g in af.simple_affine_reflections(datum)]
    seen = {af.identity(datum): 0}
    frontier = [af.identity(datum)]
    for ell in range(1, max_len + 1):
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen and af.length(y) == ell:
                    seen[y] = ell
                    new.append(y)
        frontier = new
    return list(seen)


# ---------------------------------------------------------------------
# Criteria.
# ---------------------------------------------------------------------

def criterion_1_pgl2_lengths() -> tuple[bool, str]:
    """PGL2: l(t_m) = |m|, l(t_m s) = |m-1|; Omega = {id, t_1 s}."""
    datum = _load("pgl2")
    s = _finite_gen(datum)
    for m in range(-10, 11):
        t = af.translation(datum, (m,))
        if af.length(t) != abs(m) or af.length(t * s) != abs(m - 1):
            return False, f"length mismatch at m={m}"
    omega = af.omega_elements(datum, bound=3)
    expected = {af.identity(datum), af.translation(datum, (1,)) * s}
    if set(omega) != expected:
        return False, f"Omega(pgl2) = {omega}"
    return True, "lengths |m|, |m-1| for -10..10; Omega = {id, t_1 s}"


def criterion_2_length_oracle() -> tuple[bool, str]:
    """Closed-formula length == separating-hyperplane count everywhere."""
    checked = 0
    for name in ("sl2", "sl3", "c2", "gl2"):
        datum = _load(name)
        rs = rd.root_system(datum)
        for t in _box(datum.rank, 5):
            for w in rs.weyl_elements():
                x = af.AffineElt(datum, t, w)
                if af.length(x) != af.length_by_hyperplanes(x):
                    return False, f"{name}: disagreement at {x}"
                checked += 1
    return True, f"{checked} elements across sl2, sl3, c2, gl2"


def criterion_3_hecke_relations() -> tuple[bool, str]:
    """Quadratic relation, 200 length-additive products, braid reassembly."""
    rng = random.Random(SEED)
    for name in FOUR_PRESETS + ("c2",):
        datum = _load(name)
        for g in af.simple_affine_reflections(datum):
            d = hk.delta(g.element)
            if hk.h_mul(d, d) != hk.one(datum) + d.scale(V_INV - V):
                return False, f"{name}: quadratic relation fails at {g.kind}"

    # Random length-additive pairs.
    additive = 0
    pool: list[tuple] = []
    for name in FOUR_PRESETS:
        datum = _load(name)
        ball = _coxeter_ball(datum, 4)
        omegas = af.omega_elements(datum, 1)
        pool.extend((datum, x, o) for x in ball for o in omegas)
    while additive < 200:
        datum, x, o = pool[rng.randrange(len(pool))]
        _, y, _ = pool[rng.randrange(len(pool))]
        if y.datum != datum:
            continue
        x = o * x
        if af.length(x * y) != af.length(x) + af.length(y):
            continue
        if hk.h_mul(hk.delta(x), hk.delta(y)) != hk.delta(x * y):
            return False, f"{datum.name}: delta_x delta_y != delta_xy for {x}, {y}"
        additive += 1

    # Braid relations: alternating products of generator pairs agree, in the
    # group and in the algebra, whenever the pair has finite order.
    for name in FOUR_PRESETS + ("c2",):
        datum = _load(name)
        gens = af.simple_affine_reflections(datum)
        for a, b in itertools.combinations(gens, 2):
            order = _pair_order(a.element, b.element, cap=8)
            if order is None:
                continue
            w1 = _alternating(a.element, b.element, order)
            w2 = _alternating(b.element, a.element, order)
            if w1 != w2:
                return False, f"{name}: braid words differ in the group"
            d1 = _fold_deltas([a, b], order, datum)
            d2 = _fold_deltas([b, a], order, datum)
            if d1 != d2:
                return False, f"{name}: braid words differ in the algebra"

    # Reduced-word reassembly on random extended elements.
    for name in FOUR_PRESETS:
        datum = _load(name)
        for _ in range(20):
            t = tuple(rng.randint(-3, 3) for _ in range(datum.rank))
            rs = rd.root_system(datum)
            w = rng.choice(rs.weyl_elements())
            x = af.AffineElt(datum, t, w)
            omega, letters = af.reduced_word(x)
            back = omega
            for g in letters:
                back = back * g.element
            if back != x or len(letters) != af.length(x):
                return False, f"{name}: reduced word does not reassemble {x}"
    return True, "quadratic + 200 additive products + braid + reassembly"


def _pair_order(a, b, cap):
    prod = a * b
    acc = prod
    for k in range(1, cap + 1):
        if acc.is_identity():
            return k
        acc = acc * prod
    return None


def _alternating(a, b, order):
    out = None
    for k in range(order):
        g = a if k % 2 == 0 else b
        out = g if out is None else out * g
    return out


def _fold_deltas(pair, order, datum):
    out = hk.one(datum)
    for k in range(order):
        out = hk.h_mul(out, hk.delta(pair[k % 2].element))
    return out


def criterion_4_theta_well_defined() -> tuple[bool, str]:
    """theta_lam is independent of the dominant decomposition: for every
    random lam = gamma - gamma' with both parts dominant,
    theta_lam * delta_{t_gamma'} = delta_{t_gamma} (an equivalent form of
    delta_{t_gamma} delta_{t_gamma'}^{-1} = theta_lam, inversion-free)."""
    rng = random.Random(SEED + 4)
    checked = 0
    for name in FOUR_PRESETS:
        datum = _load(name)
        dominants = [v for v in _box(datum.rank, 3)
                     if rd.is_dominant_coweight(datum, v)]
        for lam in _box(datum.rank, 3):
            base = hk.theta(datum, lam)
            plus, minus = hk.dominant_decomposition(datum, lam)
            for _ in range(20):
                d = rng.choice(dominants)
                gamma = tuple(p + x for p, x in zip(plus, d))
                gamma2 = tuple(m + x for m, x in zip(minus, d))
                lhs = hk.h_mul(base, hk.delta(af.translation(datum, gamma2)))
                if lhs != hk.delta(af.translation(datum, gamma)):
                    return False, f"{name}: theta_{lam} depends on decomposition"
                checked += 1
    return True, f"{checked} random decompositions agree"


def criterion_5_bernstein_relation() -> tuple[bool, str]:
    """delta_s theta_{s lam} - theta_lam delta_s = (v - v^-1) * string(lam)."""
    for name in FOUR_PRESETS:
        datum = _load(name)
        for i in range(datum.n_simple):
            s = _finite_gen(datum, i)
            ds = hk.delta(s)
            for lam in _box(datum.rank, 3):
                slam = rd.reflect(datum, i, lam)
                lhs = hk.h_mul(ds, hk.theta(datum, slam)) \
                    - hk.h_mul(hk.theta(datum, lam), ds)
                rhs = hk.HeckeElt(datum)
                for mu, sign in hk.theta_string(datum, lam, i):
                    rhs = rhs + hk.theta(datum, mu).scale(sign)
                if lhs != rhs.scale(V - V_INV):
                    return False, f"{name}: relation fails at lam={lam}, s={i}"
    # The rank-one worked instance: lam the fundamental coweight of pgl2.
    datum = _load("pgl2")
    s = _finite_gen(datum)
    lhs = hk.h_mul(hk.delta(s), hk.theta(datum, (-1,))) \
        - hk.h_mul(hk.theta(datum, (1,)), hk.delta(s))
    if lhs != hk.theta(datum, (1,)).scale(V - V_INV):
        return False, "pgl2 fundamental-coweight instance broken"
    return True, "holds for all |lam| <= 3 on four presets; pgl2 instance exact"


def criterion_6_center() -> tuple[bool, str]:
    """Orbit sums are central; the GL2 natural-representation identities."""
    for name in FOUR_PRESETS:
        datum = _load(name)
        doms = [v for v in _box(datum.rank, 3)
                if rd.is_dominant_coweight(datum, v)]
        for lam in doms:
            if not hk.is_central(hk.z_center(datum, lam)):
                return False, f"{name}: z_{lam} is not central"
    datum = _load("gl2")
    rs = rd.root_system(datum)
    s = _finite_gen(datum)
    pi = af.AffineElt(datum, (1, 0), rs.canonical(rs.simple_reflections[0]))
    s0 = next(g.element for g in af.simple_affine_reflections(datum)
              if g.kind[0] == "a")
    znat = hk.z_center(datum, (1, 0))
    dpi = hk.delta(pi)
    forms = [
        hk.theta(datum, (1, 0)) + hk.theta(datum, (0, 1)),
        hk.h_mul(dpi, hk.delta(s) + hk.h_inv_std(s0)),
        hk.h_mul(dpi, hk.h_inv_std(s) + hk.delta(s0)),
    ]
    if any(f != znat for f in forms):
        return False, "z_nat four-way equality fails"
    bs = hk.b_generator(datum, ("f", 0))
    if hk.h_mul(znat, bs) != hk.h_mul(dpi, hk.kl_b(s0 * s)):
        return False, "z_nat * b_s != delta_pi * b_{s0 s}"
    return True, "z_lam central (|lam| <= 3, four presets); GL2 identities exact"


def criterion_7_kl_suite() -> tuple[bool, str]:
    """KL basis: generators, longest-element formula, bar-invariance,
    degree bounds, positivity, and the xs < x recursion identity."""
    for name in FOUR_PRESETS + ("c2",):
        datum = _load(name)
        for g in af.simple_affine_reflections(datum):
            if hk.kl_b(g.element) != hk.b_generator(datum, g.kind):
                return False, f"{name}: b_s != delta_s + v at {g.kind}"

    for name in ("sl2", "sl3", "c2"):
        datum = _load(name)
        rs = rd.root_system(datum)
        wf = max(rs.weyl_elements(), key=rs.finite_length)
        top = rs.finite_length(wf)
        expect = hk.HeckeElt(datum, [
            (af.AffineElt(datum, (0,) * datum.rank, w),
             LaurentPoly({top - rs.finite_length(w): 1}))
            for w in rs.weyl_elements()])
        if hk.kl_b(af.AffineElt(datum, (0,) * datum.rank, wf)) != expect:
            return False, f"{name}: b_(longest) formula fails"

    counted = 0
    for name, max_len in (("sl2", 8), ("sl3", 6)):
        datum = _load(name)
        gens = af.simple_affine_reflections(datum)
        for x in _coxeter_ball(datum, max_len):
            b = hk.kl_b(x)
            if hk.h_bar(b) != b:
                return False, f"{name}: b_x not bar-invariant at {x}"
            for y, c in b.terms.items():
                if y == x:
                    if c != ONE:
                        return False, f"{name}: b_x not unitriangular at {x}"
                elif not c.in_v_times_nonneg() or any(co < 0 for _, co in c.terms):
                    return False, f"{name}: coefficient {c} out of vN[v] at {x}"
            for g in gens:
                if af.length(x * g.element) < af.length(x):
                    prod = hk.h_mul(b, hk.b_generator(datum, g.kind))
                    if prod != b.scale(V + V_INV):
                        return False, f"{name}: b_x b_s != (v+v^-1) b_x at {x}"
            counted += 1
    return True, f"KL checks on {counted} elements (lengths 8/6)"


def criterion_8_dl_oracle() -> tuple[bool, str]:
    """Closed-form b_s action == brute-force induced sgn-module action."""
    checked = 0
    for name in FOUR_PRESETS:
        datum = _load(name)
        refl = asp.hecke_side(datum)
        for lam in _box(datum.rank, 3):
            m = asp.ModuleElt.basis("hecke", lam)
            for i in range(datum.n_simple):
                closed = asp.dl_action_bs(refl, i, m)
                oracle = asp.induced_action(hk.b_generator(datum, ("f", i)), m, "sgn")
                if closed != oracle:
                    return False, f"{name}: mismatch at lam={lam}, s={i}"
                checked += 1
    return True, f"{checked} (lam, s) pairs agree on four presets"


def criterion_9_intertwiner() -> tuple[bool, str]:
    """Rank 1: theta_m -> x^{m-1} intertwines exactly.  Rank 2: exactly one
    sign convention passes, and it is the frozen golden one."""
    datum = _load("sl2")
    report = asp.intertwiner_check(datum, lams=[(m,) for m in range(-6, 7)])
    if not report[GOLDEN_CONVENTION]["passes"]:
        return False, "sl2: golden convention fails"
    for name in ("sl3", "c2"):
        rep = asp.intertwiner_check(_load(name), bound=3)
        passing = [conv for conv, r in rep.items() if r["passes"]]
        if passing != [GOLDEN_CONVENTION]:
            return False, f"{name}: passing conventions {passing}"
    return True, f"golden convention {GOLDEN_CONVENTION} unique on sl3, c2; sl2 exact"


def criterion_10_euler_characteristic() -> tuple[bool, str]:
    """Push-pull at the character level: chi(O(m)) = m + 1, m = -5..5."""
    refl = asp.ktheory_side(_load("sl2"))
    for m in range(-5, 6):
        if asp.euler_characteristic(refl, 0, m) != m + 1:
            return False, f"chi(O({m})) != {m + 1}"
    return True, "chi(O(m)) = m+1 for -5 <= m <= 5, including negatives"


def criterion_11_characters() -> tuple[bool, str]:
    """Rank-1 Clebsch-Gordan ladder; GL2 center image of z_nat."""
    datum = _load("sl2")
    chi = {m: rd.weyl_character(datum, (m,)) for m in range(0, 10)}
    for m in range(1, 9):
        if chi[1] * chi[m] != chi[m + 1] + chi[m - 1]:
            return False, f"chi_1 * chi_{m} decomposition fails"
    gl2 = _load("gl2")
    znat = hk.z_center(gl2, (1, 0))
    bern = hk.to_bernstein(znat)
    image = GroupAlgebraElt.zero(gl2.rank)
    for (w, mu), c in bern.terms.items():
        if not w.is_identity():
            return False, "z_nat has a non-lattice Bernstein term"
        image = image + GroupAlgebraElt.monomial(mu, c)
    if image != rd.weyl_character(gl2, (1, 0)):
        return False, "center image of z_nat is not e1 + e2"
    return True, "chi_1 chi_m = chi_{m+1} + chi_{m-1} (m <= 8); z_nat -> e1 + e2"


def criterion_12_springer() -> tuple[bool, str]:
    """The three orbit tables, RS bijectivity and symmetry, parities."""
    tables = {
        2: ([2, 0], [0, 2], [0, 1]),
        3: ([6, 4, 0], [0, 2, 6], [0, 1, 3]),
        4: ([12, 10, 8, 6, 0], [0, 2, 4, 6, 12], [0, 1, 2, 3, 6]),
    }
    for n, (dims, codims, fibers) in tables.items():
        rows = sp.orbit_table(n)
        if [r["dim_orbit"] for r in rows] != dims or \
           [r["codim"] for r in rows] != codims or \
           [r["fiber_dim"] for r in rows] != fibers:
            return False, f"orbit table n={n} does not match"
    for n in range(1, 8):
        if sum(sp.syt_count(l) ** 2 for l in sp.partitions(n)) != math.factorial(n):
            return False, f"sum of squares != {n}!"
    for n in range(1, 7):
        seen = set()
        for w in itertools.permutations(range(1, n + 1)):
            pq = sp.rs(w)
            if pq in seen:
                return False, f"rs not injective at n={n}"
            seen.add(pq)
            wi = tuple(w.index(i) + 1 for i in range(1, n + 1))
            if sp.rs(wi) != (pq[1], pq[0]):
                return False, f"rs inverse symmetry fails at {w}"
    for n in range(1, 9):
        if any(sp.orbit_dim(l) % 2 for l in sp.partitions(n)):
            return False, f"odd orbit dimension at n={n}"
    return True, "tables n=2,3,4; sum f^2 = n! (n<=7); rs bijection (n<=6); parity (n<=8)"


CRITERIA: list[tuple[str, Callable[[], tuple[bool, str]], float | None]] = [
    ("1 pgl2 lengths and Omega", criterion_1_pgl2_lengths, 1.0),
    ("2 length formula == hyperplane count", criterion_2_length_oracle, 30.0),
    ("3 Hecke algebra relations", criterion_3_hecke_relations, 10.0),
    ("4 theta well-definedness", criterion_4_theta_well_defined, None),
    ("5 Bernstein commutation relation", criterion_5_bernstein_relation, None),
    ("6 Bernstein center", criterion_6_center, None),
    ("7 Kazhdan-Lusztig suite", criterion_7_kl_suite, 60.0),
    ("8 Demazure-Lusztig oracle equivalence", criterion_8_dl_oracle, None),
    ("9 intertwiner conventions", criterion_9_intertwiner, None),
    ("10 Euler characteristics on P1", criterion_10_euler_characteristic, None),
    ("11 character identities", criterion_11_characters, None),
    ("12 Springer combinatorics", criterion_12_springer, 20.0),
]

TOTAL_BUDGET_SECONDS = 180.0


def run_all(emit=print) -> bool:
    """Run every criterion; one PASS/FAIL line each; overall wall clock
    must stay under the total budget (criterion 13)."""
    t0 = time.monotonic()
    all_ok = True
    for name, func, budget in CRITERIA:
        start = time.monotonic()
        try:
            ok, detail = func()
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        elapsed = time.monotonic() - start
        if budget is not None and elapsed > budget:
            ok = False
            detail += f" [over budget: {elapsed:.1f}s > {budget:.0f}s]"
        all_ok &= ok
        emit(f"{'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f}s)  {detail}")
    total = time.monotonic() - t0
    ok13 = total < TOTAL_BUDGET_SECONDS
    all_ok &= ok13
    emit(f"{'PASS' if ok13 else 'FAIL'}  13 total wall clock  ({total:.2f}s < {TOTAL_BUDGET_SECONDS:.0f}s)")
    return all_ok
