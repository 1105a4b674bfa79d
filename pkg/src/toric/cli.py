"""Command-line interface.

Configurations come from a matrix file (format: "d n", d rows, optional
"labels:" line) or from the gallery by name, with family parameters
attached by colons (birkhoff:4, hexagon:1:2:3, graph:1-2,2-3,3-1).
Exit codes: 0 ok, 1 fact mismatch, 2 input error, 3 cap exceeded.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import gallery, matrixio
from .binomials import format_vector_binomial, polynomial_coeffs_to_string
from .distinguished import (circuits, degree_bound_report, graver, lawrence,
                            universal_gb)
from .errors import CapExceededError, InputError, ToricError
from .groebner import (hilbert_function, hilbert_polynomial,
                       minimal_generators, radical_membership_bounded,
                       toric_ideal)
from .orders import TermOrder
from .polytopes import (convex_hull, ehrhart_polynomial, face_poset,
                        normal_fan_equal, normalized_volume)
from .semigroups import (is_hereditarily_normal, is_normal,
                         is_normal_projective, is_smooth, is_unimodular,
                         semigroup_report)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def load_config(spec):
    """A Configuration from a file path or a gallery spec like name:p1:p2."""
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return matrixio.parse_matrix(fh.read())
    parts = spec.split(":")
    name, raw = parts[0], parts[1:]
    if name == "graph":
        if len(raw) != 1:
            raise InputError("graph wants one parameter: edges like 1-2,2-3")
        edges = []
        for tok in raw[0].split(","):
            a, _, b = tok.partition("-")
            try:
                edges.append((int(a), int(b)))
            except ValueError:
                raise InputError(f"bad edge {tok!r}") from None
        return gallery.make_config("graph", edges)
    if name == "matroid_bases":
        if len(raw) < 2:
            raise InputError("matroid_bases wants ground size then bases like 12,13,23")
        ground = int(raw[0])
        bases = [[int(ch) for ch in tok] for tok in raw[1].split(",")]
        return gallery.make_config("matroid_bases", ground, bases)
    params = []
    for p in raw:
        try:
            params.append(int(p))
        except ValueError:
            raise InputError(f"non-integer parameter {p!r} in {spec!r}") from None
    return gallery.make_config(name, *params)


def build_order(args, n):
    perm = None
    if getattr(args, "tiebreak", None):
        perm = [int(x) - 1 for x in args.tiebreak.split(",")]
    name = getattr(args, "order", None) or "grevlex"
    if name == "grevlex":
        return TermOrder.grevlex(n, perm)
    if name == "lex":
        return TermOrder.lex(n, perm)
    if name.startswith("weight"):
        _, _, rest = name.partition(":")
        w = [int(x) for x in rest.split(",")]
        if len(w) != n:
            raise InputError(f"weight vector needs {n} entries")
        return TermOrder.weight(w, perm=perm)
    raise InputError(f"unknown order {name!r}")


def emit(args, payload, human):
    if args.json:
        print(json.dumps(payload, indent=2, default=_json_default))
    else:
        print(human)


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, frozenset):
        return sorted(x)
    return str(x)


def _binomial_lines(vectors, labels):
    return [format_vector_binomial(u, labels) for u in vectors]


def cmd_kernel(args):
    config = load_config(args.config)
    basis = config.kernel().basis
    emit(args, {"rank": len(basis), "basis": [list(v) for v in basis]},
         "\n".join(" ".join(str(x) for x in v) for v in basis)
         or "(zero lattice)")


def cmd_ideal(args):
    config = load_config(args.config)
    G = toric_ideal(config, build_order(args, config.n))
    emit(args, G.to_json(config.labels), "\n".join(G.to_strings(config.labels))
         or "(zero ideal)")


def cmd_mingen(args):
    config = load_config(args.config)
    gens = minimal_generators(config)
    lines = _binomial_lines([b.u for b in gens], config.labels)
    emit(args, {"count": len(gens), "degrees": [b.degree for b in gens],
                "elements": lines}, "\n".join(lines) or "(zero ideal)")


def cmd_circuits(args):
    config = load_config(args.config)
    C = circuits(config)
    emit(args, {"count": len(C), "maxdeg": C.maxdeg,
                "elements": _binomial_lines(C.sorted_vectors(), config.labels),
                "metadata": C.metadata()},
         "\n".join(_binomial_lines(C.sorted_vectors(), config.labels)) or "(none)")


def cmd_graver(args):
    config = load_config(args.config)
    G = graver(config)
    emit(args, {"count": len(G), "maxdeg": G.maxdeg, "provenance": G.provenance,
                "elements": _binomial_lines(G.sorted_vectors(), config.labels)},
         "\n".join(_binomial_lines(G.sorted_vectors(), config.labels)) or "(none)")


def cmd_ugb(args):
    config = load_config(args.config)
    mode, count = "exhaustive", 20
    if args.ugb.startswith("sampled"):
        mode = "sampled"
        _, _, k = args.ugb.partition(":")
        count = int(k) if k else 20
    U = universal_gb(config, mode, sample_count=count)
    emit(args, {"count": len(U), "maxdeg": U.maxdeg, "provenance": U.provenance,
                "distinct_reduced_gbs": U.gb_count, "lower_bound": U.lower_bound,
                "elements": _binomial_lines(U.sorted_vectors(), config.labels)},
         "\n".join(_binomial_lines(U.sorted_vectors(), config.labels)) or "(none)")


def cmd_lawrence(args):
    config = load_config(args.config)
    L = lawrence(config)
    emit(args, {"matrix": [list(r) for r in L.entries], "labels": list(L.labels)},
         matrixio.serialize_matrix(L).rstrip("\n"))


def cmd_degree(args):
    config = load_config(args.config)
    v = normalized_volume(config)
    emit(args, {"degree": v}, str(v))


def cmd_ehrhart(args):
    config = load_config(args.config)
    coeffs = ehrhart_polynomial(config, s_cap=args.smax, lattice=args.lattice)
    emit(args, {"coefficients": [str(c) for c in coeffs], "lattice": args.lattice},
         polynomial_coeffs_to_string(coeffs))


def cmd_hilbert(args):
    config = load_config(args.config)
    coeffs = hilbert_polynomial(config, s_cap=args.smax)
    values = [hilbert_function(config, s) for s in range(6)]
    emit(args, {"coefficients": [str(c) for c in coeffs],
                "function_values": values},
         polynomial_coeffs_to_string(coeffs)
         + "\nfunction at s=0..5: " + " ".join(str(v) for v in values))


def cmd_normal(args):
    config = load_config(args.config)
    rep = semigroup_report(config)
    lines = [f"pointed: {rep['pointed']}",
             f"projectively normal (NA = pos meet ZA): {rep['normal']}",
             f"variety normal (vertex charts): {rep['variety_normal']}"]
    if rep.get("witness"):
        lines.append(f"witness outside NA: {rep['witness']}")
    emit(args, rep, "\n".join(lines))


def cmd_smooth(args):
    config = load_config(args.config)
    out = {"affine_smooth": is_normal(config).is_smooth if config.pointed else None,
           "projective_smooth": (is_smooth(config, projective=True)["smooth"]
                                 if config.graded else None)}
    emit(args, out, "\n".join(f"{k}: {v}" for k, v in out.items()))


def cmd_unimodular(args):
    config = load_config(args.config)
    rep = is_unimodular(config)
    human = f"unimodular: {rep['unimodular']}"
    if rep["violating_circuit"]:
        human += ("\nviolating circuit: "
                  + format_vector_binomial(rep["violating_circuit"], config.labels))
    emit(args, rep, human)


def cmd_hereditary(args):
    config = load_config(args.config)
    rep = is_hereditarily_normal(config)
    human = f"hereditarily normal: {rep['hereditarily_normal']}"
    if rep["violating_circuit"]:
        human += ("\nviolating circuit: "
                  + format_vector_binomial(rep["violating_circuit"], config.labels))
    emit(args, rep, human)


def cmd_faces(args):
    config = load_config(args.config)
    rep = face_poset(config)
    emit(args, rep,
         f"{rep['object']} of dimension {rep['dim']}\n"
         f"f-vector: {rep['f_vector']}\n"
         + "\n".join(f"dim {d}: {sorted(f)}" for f, d in rep["faces"]))


def cmd_normalfan_eq(args):
    a = load_config(args.config)
    b = load_config(args.other)
    eq = normal_fan_equal(a, b)
    emit(args, {"equal": eq}, str(eq))


def cmd_bounds(args):
    config = load_config(args.config)
    rep = degree_bound_report(config)
    human = "\n".join(f"{k}: {v}" for k, v in rep.items())
    emit(args, rep, human)


def cmd_radical(args):
    config = load_config(args.config)
    from .binomials import parse_binomial
    b = parse_binomial(args.binomial, config.labels)
    C = circuits(config)
    k = radical_membership_bounded(b, list(C.sorted_vectors()), args.kmax)
    emit(args, {"k": k, "verdict": "yes" if k else "inconclusive"},
         f"yes({k})" if k else "inconclusive")


def cmd_gallery(args):
    rows = []
    for name, entry in sorted(gallery.ENTRIES.items()):
        rows.append({"name": name, "aliases": list(entry.aliases),
                     "params": entry.params_doc, "description": entry.description})
    emit(args, rows, "\n".join(
        f"{r['name']}{(' [' + ','.join(r['aliases']) + ']') if r['aliases'] else ''}"
        f"{(' <' + r['params'] + '>') if r['params'] else ''}: {r['description']}"
        for r in rows))


def cmd_verify(args):
    params = tuple(int(p) for p in args.params) if args.params else None
    ok, results = gallery.verify(args.name, params, include_slow=args.slow or None)
    payload = [{"fact": f, "ok": g, "got": str(got), "want": str(want)}
               for f, g, got, want in results]
    lines = []
    for f, g, got, want in results:
        if g is None:
            lines.append(f"SKIP {f}")
        elif g:
            lines.append(f"ok   {f}")
        else:
            lines.append(f"FAIL {f}: got {got!r} want {want!r}")
    emit(args, {"ok": ok, "facts": payload}, "\n".join(lines))
    if not ok:
        sys.exit(EXIT_MISMATCH)


def make_parser():
    p = argparse.ArgumentParser(
        prog="toric",
        description="Toric ideals, Groebner and Graver bases, polytopes and "
                    "semigroup normality in exact arithmetic.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, fn, config=True, **extra):
        sp = sub.add_parser(name)
        if config:
            sp.add_argument("config", help="matrix file or gallery name[:params]")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(fn=fn)
        return sp

    add("kernel", cmd_kernel)
    sp = add("ideal", cmd_ideal)
    sp.add_argument("--order", default="grevlex",
                    help="lex | grevlex | weight:w1,w2,...")
    sp.add_argument("--tiebreak", help="permutation like 2,1,3")
    add("mingen", cmd_mingen)
    add("circuits", cmd_circuits)
    add("graver", cmd_graver)
    sp = add("ugb", cmd_ugb)
    sp.add_argument("--ugb", default="exhaustive",
                    help="exhaustive | sampled:K")
    add("lawrence", cmd_lawrence)
    add("degree", cmd_degree)
    sp = add("ehrhart", cmd_ehrhart)
    sp.add_argument("--smax", type=int, default=40)
    sp.add_argument("--lattice", choices=["ambient", "affine"], default="ambient")
    sp = add("hilbert", cmd_hilbert)
    sp.add_argument("--smax", type=int, default=60)
    add("normal", cmd_normal)
    add("smooth", cmd_smooth)
    add("unimodular", cmd_unimodular)
    add("hereditary", cmd_hereditary)
    add("faces", cmd_faces)
    sp = add("normalfan-eq", cmd_normalfan_eq)
    sp.add_argument("other", help="second configuration")
    add("bounds", cmd_bounds)
    sp = add("radical", cmd_radical)
    sp.add_argument("binomial", help="binomial like x1*x4 - x2*x3")
    sp.add_argument("--kmax", type=int, default=6)
    add("gallery", cmd_gallery, config=False)
    sp = sub.add_parser("verify")
    sp.add_argument("name")
    sp.add_argument("params", nargs="*")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--slow", action="store_true")
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        args.fn(args)
    except CapExceededError as e:
        print(json.dumps({"error": "cap-exceeded", "message": str(e)}),
              file=sys.stderr)
        sys.exit(EXIT_CAP)
    except (InputError, OSError) as e:
        print(json.dumps({"error": "input", "message": str(e)}), file=sys.stderr)
        sys.exit(EXIT_INPUT)
    except ToricError as e:
        print(json.dumps({"error": e.__class__.__name__, "message": str(e)}),
              file=sys.stderr)
        sys.exit(EXIT_INPUT)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
