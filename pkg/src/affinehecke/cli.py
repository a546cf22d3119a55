"""Batch command-line front end.

Subcommands mirror the library: ``datum validate``, ``wext
length|word|mul``, ``hecke mul|theta|kl|center|bernstein|bar``, ``mod
act|intertwine``, ``springer table|rs|syt``, ``char`` and ``selftest``.
Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 malformed input (bad JSON, bad datum, non-dominant weight, unknown
flag), 2 violated internal invariant.

Output is deterministic: identical invocations produce byte-identical
bytes.  Serialized maps are ordered by fixed total orders (lattice
vectors lexicographically; group elements by length, then translation,
then finite reduced word).

Element arguments accept raw JSON or shorthands for the worked
generators: ``d_id``, ``d_s``/``d_s1``/``d_s2``, ``d_s0``, ``pi``
(the length-zero element translating by the first basis vector),
``b_s``/``b_s0``/..., and ``theta_[1,0]``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import affine as af
from . import antispherical as asp
from . import hecke as hk
from . import rootdata as rd
from . import selftest as st
from . import springer as sp
from .errors import InputError, InternalError
from .laurent import LaurentPoly


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); bad input is exit 1
        raise InputError(message)


def _dump(obj, args) -> None:
    text = obj if isinstance(obj, str) else json.dumps(obj)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_datum(args) -> rd.RootDatum:
    return rd.load_datum(args.datum)


# ---------------------------------------------------------------------
# Element parsing.
# ---------------------------------------------------------------------

def _normalize(text: str) -> str:
    return (text.strip()
            .replace("δ", "d").replace("ϖ", "pi")
            .replace("θ", "theta").replace("{", "").replace("}", ""))


def parse_affine(datum: rd.RootDatum, text: str) -> af.AffineElt:
    text = text.strip()
    if text.startswith("{"):
        return af.AffineElt.from_json(datum, _json(text))
    word = _normalize(text)
    if word == "id":
        return af.identity(datum)
    if word == "pi":
        return _pi_element(datum)
    kind = af.parse_generator_label(datum, word)
    for g in af.simple_affine_reflections(datum):
        if g.kind == kind:
            return g.element
    raise InputError(f"unknown group element {text!r}")


def _pi_element(datum: rd.RootDatum) -> af.AffineElt:
    e1 = tuple(1 if i == 0 else 0 for i in range(datum.rank))
    for omega in af.omega_elements(datum, 1):
        if omega.translation == e1:
            return omega
    raise InputError(f"datum {datum.name!r} has no length-zero element "
                     "translating by the first basis vector")


def parse_hecke(datum: rd.RootDatum, text: str) -> hk.HeckeElt:
    text = text.strip()
    if text.startswith("["):
        return hk.HeckeElt.from_json(datum, _json(text))
    word = _normalize(text)
    if word.startswith("theta_"):
        return hk.theta(datum, _vector(word[len("theta_"):]))
    if word.startswith("b_"):
        kind = af.parse_generator_label(datum, word[2:])
        return hk.b_generator(datum, kind)
    if word.startswith("d_") or word in ("pi", "id"):
        label = word[2:] if word.startswith("d_") else word
        if label == "id":
            return hk.one(datum)
        if label == "pi" or word == "pi":
            return hk.delta(_pi_element(datum))
        kind = af.parse_generator_label(datum, label)
        return hk.generator_delta(datum, kind)
    raise InputError(f"unknown Hecke element {text!r}")


def _json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON argument: {exc}") from exc


def _vector(text: str) -> tuple[int, ...]:
    data = _json(text)
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise InputError(f"expected an integer vector, got {text!r}")
    return tuple(data)


# ---------------------------------------------------------------------
# Subcommand handlers.
# ---------------------------------------------------------------------

def cmd_datum_validate(args) -> None:
    datum = _load_datum(args)
    rs = rd.root_system(datum)
    _dump({
        "name": datum.name,
        "rank": datum.rank,
        "cartan_matrix": [list(row) for row in datum.cartan_matrix()],
        "n_positive_roots": len(rs.positive_roots),
        "weyl_order": len(rs.weyl_elements()),
        "components": [list(c) for c in rs.components],
        "has_rho_weight": datum.rho_weight is not None,
    }, args)


def cmd_wext_length(args) -> None:
    x = parse_affine(_load_datum(args), args.elt)
    _dump(str(af.length(x)), args)


def cmd_wext_word(args) -> None:
    x = parse_affine(_load_datum(args), args.elt)
    omega, letters = af.reduced_word(x)
    _dump({
        "omega": omega.to_json(),
        "word": [g.label for g in letters],
        "length": af.length(x),
    }, args)


def cmd_wext_mul(args) -> None:
    datum = _load_datum(args)
    x = parse_affine(datum, args.a) * parse_affine(datum, args.b)
    _dump(x.to_json(), args)


def cmd_hecke_mul(args) -> None:
    datum = _load_datum(args)
    out = hk.h_mul(parse_hecke(datum, args.a), parse_hecke(datum, args.b))
    _dump(out.to_json(), args)


def cmd_hecke_theta(args) -> None:
    datum = _load_datum(args)
    _dump(hk.theta(datum, _vector(args.weight)).to_json(), args)


def cmd_hecke_kl(args) -> None:
    datum = _load_datum(args)
    _dump(hk.kl_b(parse_affine(datum, args.elt)).to_json(), args)


def cmd_hecke_center(args) -> None:
    datum = _load_datum(args)
    _dump(hk.z_center(datum, _vector(args.weight)).to_json(), args)


def cmd_hecke_bernstein(args) -> None:
    datum = _load_datum(args)
    _dump(hk.to_bernstein(parse_hecke(datum, args.elt)).to_json(), args)


def cmd_hecke_bar(args) -> None:
    datum = _load_datum(args)
    _dump(hk.h_bar(parse_hecke(datum, args.elt)).to_json(), args)


def cmd_mod_act(args) -> None:
    datum = _load_datum(args)
    m = asp.ModuleElt.from_json(datum.rank, _json(args.elt))
    if m.side != args.side:
        raise InputError(f"element is on side {m.side!r}, --side says {args.side!r}")
    if args.op == "bs":
        refl = asp.hecke_side(datum)
        out = asp.dl_action_bs(refl, args.s, m)
    elif args.op == "qs":
        refl = asp.ktheory_side(datum)
        out = asp.ktheory_action_qs(refl, args.s, m, scale=args.scale)
    elif args.op == "h":
        if args.h is None:
            raise InputError("--op h needs --h <hecke element>")
        out = asp.induced_action(parse_hecke(datum, args.h), m, sign=args.sign)
    else:
        raise InputError(f"unknown op {args.op!r}")
    _dump(out.to_json(), args)


def cmd_mod_intertwine(args) -> None:
    datum = _load_datum(args)
    report = asp.intertwiner_check(datum, bound=args.bound)
    rows = [{"rho_sign": rho, "alpha_sign": alpha,
             "passes": rep["passes"], "witness": rep["witness"]}
            for (rho, alpha), rep in sorted(report.items())]
    if args.format == "csv":
        lines = ["rho_sign,alpha_sign,passes"]
        lines += [f"{r['rho_sign']},{r['alpha_sign']},{str(r['passes']).lower()}"
                  for r in rows]
        _dump("\n".join(lines), args)
    else:
        _dump(rows, args)


def cmd_springer_table(args) -> None:
    rows = sp.orbit_table(args.n)
    wig = sp.wiggins_divisibility(args.n)
    print(f"note: dim T*B = {wig['dim_cotangent_flag']} divisible by all "
          f"nonzero codims: {wig['holds']}", file=sys.stderr)
    if args.format == "json":
        _dump([{**r, "partition": list(r["partition"])} for r in rows], args)
    else:
        lines = ["partition,dim_orbit,codim,fiber_dim,n_components"]
        for r in rows:
            part = "+".join(str(p) for p in r["partition"])
            lines.append(f"{part},{r['dim_orbit']},{r['codim']},"
                         f"{r['fiber_dim']},{r['n_components']}")
        _dump("\n".join(lines), args)


def cmd_springer_rs(args) -> None:
    p, q = sp.rs(args.w)
    _dump({"P": [list(r) for r in p], "Q": [list(r) for r in q]}, args)


def cmd_springer_syt(args) -> None:
    _dump(str(sp.syt_count(tuple(args.partition))), args)


def cmd_char(args) -> None:
    datum = _load_datum(args)
    _dump(rd.weyl_character(datum, _vector(args.weight)).to_json(), args)


def cmd_selftest(args) -> None:
    ok = st.run_all(emit=print)
    if not ok:
        raise SystemExit(1)


# ---------------------------------------------------------------------
# Wiring.
# ---------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="affinehecke")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(p, *flags):
        if "datum" in flags:
            p.add_argument("--datum", required=True,
                           help="preset name (sl2, pgl2, gl2, sl3, c2) or JSON path")
        if "out" in flags:
            p.add_argument("--out", default=None, help="write output to a file")
        if "format" in flags:
            p.add_argument("--format", choices=("json", "csv"), default="csv")

    p = sub.add_parser("datum"); ps = p.add_subparsers(dest="sub", required=True)
    q = ps.add_parser("validate"); add(q, "datum", "out"); q.set_defaults(func=cmd_datum_validate)

    p = sub.add_parser("wext"); ps = p.add_subparsers(dest="sub", required=True)
    q = ps.add_parser("length"); add(q, "datum", "out")
    q.add_argument("--elt", required=True); q.set_defaults(func=cmd_wext_length)
    q = ps.add_parser("word"); add(q, "datum", "out")
    q.add_argument("--elt", required=True); q.set_defaults(func=cmd_wext_word)
    q = ps.add_parser("mul"); add(q, "datum", "out")
    q.add_argument("--a", required=True); q.add_argument("--b", required=True)
    q.set_defaults(func=cmd_wext_mul)

    p = sub.add_parser("hecke"); ps = p.add_subparsers(dest="sub", required=True)
    q = ps.add_parser("mul"); add(q, "datum", "out")
    q.add_argument("--a", required=True); q.add_argument("--b", required=True)
    q.set_defaults(func=cmd_hecke_mul)
    q = ps.add_parser("theta"); add(q, "datum", "out")
    q.add_argument("--weight", required=True); q.set_defaults(func=cmd_hecke_theta)
    q = ps.add_parser("kl"); add(q, "datum", "out")
    q.add_argument("--elt", required=True); q.set_defaults(func=cmd_hecke_kl)
    q = ps.add_parser("center"); add(q, "datum", "out")
    q.add_argument("--weight", required=True); q.set_defaults(func=cmd_hecke_center)
    q = ps.add_parser("bernstein"); add(q, "datum", "out")
    q.add_argument("--elt", required=True); q.set_defaults(func=cmd_hecke_bernstein)
    q = ps.add_parser("bar"); add(q, "datum", "out")
    q.add_argument("--elt", required=True); q.set_defaults(func=cmd_hecke_bar)

    p = sub.add_parser("mod"); ps = p.add_subparsers(dest="sub", required=True)
    q = ps.add_parser("act"); add(q, "datum", "out")
    q.add_argument("--side", choices=asp.SIDES, required=True)
    q.add_argument("--op", choices=("bs", "qs", "h"), required=True)
    q.add_argument("--s", type=int, default=0, help="simple reflection index (0-based)")
    q.add_argument("--elt", required=True, help="module element JSON")
    q.add_argument("--h", default=None, help="Hecke element for --op h")
    q.add_argument("--sign", choices=("sgn", "triv"), default="sgn")
    q.add_argument("--scale", choices=("raw", "minus_v"), default="minus_v")
    q.set_defaults(func=cmd_mod_act)
    q = ps.add_parser("intertwine"); add(q, "datum", "out", "format")
    q.add_argument("--bound", type=int, default=3)
    q.set_defaults(func=cmd_mod_intertwine)

    p = sub.add_parser("springer"); ps = p.add_subparsers(dest="sub", required=True)
    q = ps.add_parser("table"); add(q, "out", "format")
    q.add_argument("n", type=int); q.set_defaults(func=cmd_springer_table)
    q = ps.add_parser("rs"); add(q, "out")
    q.add_argument("w", type=int, nargs="+"); q.set_defaults(func=cmd_springer_rs)
    q = ps.add_parser("syt"); add(q, "out")
    q.add_argument("partition", type=int, nargs="+"); q.set_defaults(func=cmd_springer_syt)

    q = sub.add_parser("char"); add(q, "datum", "out")
    q.add_argument("--weight", required=True); q.set_defaults(func=cmd_char)

    q = sub.add_parser("selftest"); q.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)
    return 0


if __name__ == "__main__":
    sys.exit(main())
