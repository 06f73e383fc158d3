"""
Command-line interface.  Every subcommand reads JSON (a file path, or "-"
for standard input) or inline arguments and prints sorted JSON.

Exit codes: 0 success, 1 input/output or parse error, 2 domain error (the
error class name is reported under "error").
"""

import argparse
import json
import sys
from fractions import Fraction

from . import configurations as cf
from . import grassmann as gr
from . import hypersimplex as hs
from . import schubert as sc
from . import secondary as sec
from . import trees as tr
from . import veronese as vr
from .errors import DomainError
from .exactcore import MultiPoly, RationalMatrix, kernel_basis, minor, poly_det, rank
from .exactcore.rational import format_rational, parse_rational


def _load(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _ints(text):
    return [int(x) for x in text.replace(",", " ").split()] if text.strip() else []


def _rats(values):
    return [parse_rational(str(v)) for v in values]


def _rat(x):
    return format_rational(x) if isinstance(x, (int, Fraction)) else x


def _matrix(data):
    return RationalMatrix.from_json(data["rows"] if isinstance(data, dict) else data)


# exactcore

def cmd_exact_rank(args):
    return {"rank": rank(_matrix(_load(args.file)))}


def cmd_exact_kernel(args):
    return {"kernel": kernel_basis(_matrix(_load(args.file))).to_json()}


def cmd_exact_minor(args):
    m = _matrix(_load(args.file))
    rows = [i - 1 for i in _ints(args.rows)]
    cols = [j - 1 for j in _ints(args.cols)]
    return {"minor": _rat(minor(m, rows, cols))}


def cmd_exact_poly_det(args):
    data = _load(args.file)
    nv = data["num_vars"]
    m = [[MultiPoly.from_json(nv, p) for p in row] for row in data["matrix"]]
    return {"num_vars": nv, "det": poly_det(m).to_json()}


# grassmann

def _subspace(path):
    return gr.Subspace.from_json(_load(path))


def cmd_grassmann_plucker(args):
    return gr.plucker(_subspace(args.file)).to_json()


def cmd_grassmann_generic(args):
    return {"generic": gr.is_generic(_subspace(args.file))}


def cmd_grassmann_matroid(args):
    return {"bases": [gr.subset_key(I) for I in sorted(gr.matroid_bases(_subspace(args.file)))]}


def cmd_grassmann_intersect(args):
    return gr.intersect_coord_hyperplane(_subspace(args.file), args.i).to_json()


def cmd_grassmann_project(args):
    return gr.project_away(_subspace(args.file), args.i).to_json()


def cmd_grassmann_gm(args):
    return gr.gm_configuration(_subspace(args.file)).to_json()


# hypersimplex

def cmd_hypersimplex_vertices(args):
    return {"vertices": [gr.subset_key(I) for I in hs.hypersimplex_vertices(args.k, args.n)]}


def cmd_hypersimplex_facet(args):
    p, relabel = hs.facet(args.k, args.n, args.i, args.sign)
    k2, n2 = hs.facet_target(args.k, args.n, args.sign)
    return {"facet": p.to_json(),
            "relabel": {gr.subset_key(I): gr.subset_key(relabel(I)) for I in sorted(p.vertices)},
            "target": {"k": k2, "n": n2}}


def cmd_hypersimplex_is_matroid(args):
    return {"matroid": hs.is_matroid_polytope(hs.MatroidPolytope.from_json(_load(args.file)))}


def cmd_hypersimplex_of_subspace(args):
    return hs.matroid_polytope_of(_subspace(args.file)).to_json()


def cmd_hypersimplex_volume(args):
    return {"volume": hs.normalized_volume(hs.MatroidPolytope.from_json(_load(args.file)))}


def cmd_hypersimplex_validate(args):
    d = hs.MatroidDecomposition.from_json(_load(args.file))
    report = hs.decomposition_report(d, jobs=args.jobs)
    return {"valid": all(report.values()), "checks": report}


def cmd_hypersimplex_restrict(args):
    d = hs.MatroidDecomposition.from_json(_load(args.file))
    return hs.restrict_to_facet(d, args.i, args.sign).to_json()


# trees

def _tree(path):
    return tr.LabeledTree.from_json(_load(path))


def cmd_trees_enumerate(args):
    return [t.to_json() for t in tr.enumerate_trees(args.n)]


def cmd_trees_relation(args):
    t = _tree(args.file)
    return {"blocks": [sorted(b) for b in tr.vertex_relation(t, args.v)]}


def cmd_trees_to_decomposition(args):
    return tr.tree_to_decomposition(_tree(args.file)).to_json()


def cmd_trees_from_decomposition(args):
    d = hs.MatroidDecomposition.from_json(_load(args.file))
    return tr.decomposition_to_tree(d).to_json()


def cmd_trees_stratum(args):
    t = _tree(args.file)
    return {"stable": tr.is_stable_tree(t), "dimension": tr.stratum_dimension(t)}


def cmd_trees_forget(args):
    return tr.forget_point(_tree(args.file), args.i).to_json()


# secondary

def _config(path):
    return sec.PointConfig.from_json(_load(path))


def cmd_secondary_triangulations(args):
    a = _config(args.file)
    ts = sec.enumerate_triangulations(a)
    if args.count:
        return {"triangulations": len(ts)}
    return {"triangulations": [t.to_json()["simplices"] for t in ts]}


def cmd_secondary_char_function(args):
    a = _config(args.config)
    t = sec.Triangulation.from_json(_load(args.triangulation))
    return {"values": sec.char_function(t, a).to_json()}


def cmd_secondary_vertices(args):
    verts, dim = sec.secondary_hull(_config(args.file))
    return {"vertices": [f.to_json() for f in verts], "dimension": dim}


def cmd_secondary_prism(args):
    a = sec.prism_points(args.k)
    ts = sec.enumerate_triangulations(a)
    if args.count:
        return {"triangulations": len(ts)}
    return {"points": a.to_json()["points"],
            "triangulations": [t.to_json()["simplices"] for t in ts]}


def cmd_secondary_prism_triangulation(args):
    k = args.k
    w = _ints(args.perm) if args.perm else list(range(k + 1))
    if len(w) != k + 1:
        raise DomainError(f"permutation must have {k + 1} entries")
    t = sec.prism_triangulation_of_permutation(w)
    return {"simplices": t.to_json()["simplices"],
            "values": sec.char_function(t, sec.prism_points(k)).to_json()}


def cmd_secondary_permutohedron(args):
    return {"vertices": [list(v) for v in sec.permutohedron_vertices(args.k)]}


# configurations

def _configuration(path):
    return cf.Configuration.from_json(_load(path))


def cmd_config_general_position(args):
    return {"general_position": cf.is_general_position(_configuration(args.file))}


def cmd_config_cross_ratio(args):
    pts = [cf.INF if p.lower() in ("inf", "∞") else parse_rational(p) for p in args.points]
    return {"cross_ratio": _rat(cf.cross_ratio(*pts))}


def cmd_config_associate(args):
    return cf.associate(_configuration(args.file)).to_json()


def cmd_config_circuit(args):
    data = _load(args.file)
    pts = data["points"] if isinstance(data, dict) else data
    return {"circuit": cf.is_circuit([_rats(p) for p in pts])}


def cmd_config_normal_form6(args):
    a, b, c, d = cf.six_point_normal_form(_configuration(args.file))
    return {"a": _rat(a), "b": _rat(b), "c": _rat(c), "d": _rat(d), "psi": _rat(cf.psi(a, b, c, d))}


def cmd_config_psi(args):
    return {"psi": _rat(cf.psi(*_rats(args.values)))}


def cmd_config_conic_test(args):
    c = _configuration(args.file)
    nf = cf.six_point_normal_form(c)
    return {"on_conic": cf.lies_on_conic(c), "psi": _rat(cf.psi(*nf))}


# veronese

def _arrangement(path):
    return vr.HyperplaneArrangement.from_json(_load(path))


def cmd_veronese_gauss(args):
    arr = _arrangement(args.file)
    return vr.log_gauss(arr, _rats(args.at)).to_json()


def cmd_veronese_pluckerpolys(args):
    arr = _arrangement(args.file)
    return {"k": arr.k, "n": arr.n,
            "polys": {gr.subset_key(I): p.to_json() for I, p in vr.plucker_polys(arr).items()}}


def cmd_veronese_marked_point(args):
    return vr.marked_point(_arrangement(args.file), _ints(args.indices)).to_json()


def cmd_veronese_steiner(args):
    arr = _arrangement(args.file)
    return {"matrix": vr.steiner_matrix(arr, _rats(args.at)).to_json()}


def cmd_veronese_sweep_test(args):
    arr = _arrangement(args.file)
    t = _rats(args.t)
    m = vr.sweep_matrix(arr, t)
    return {"matrix": m.to_json(), "rank": rank(m), "on_sweep": vr.on_sweep(arr, t)}


def cmd_veronese_tangent_rank(args):
    a, b, c, d = _rats(args.values)
    return {"rank": vr.tangent_system_rank(a, b, c, d), "psi": _rat(cf.psi(a, b, c, d))}


def cmd_veronese_tetra(args):
    return {"ratio": _rat(vr.tetrahedral_ratio(_subspace(args.file)))}


# schubert

def _diagram(text):
    return sc.partition(_ints(text))


def cmd_schubert_conjugate(args):
    return {"conjugate": list(sc.conjugate(_diagram(args.alpha)))}


def cmd_schubert_heights(args):
    return {"heights": sc.heights(_diagram(args.alpha), args.p, args.q)}


def cmd_schubert_schur_dim(args):
    return {"dim": sc.schur_dim(_diagram(args.alpha), args.m)}


def cmd_schubert_kostka(args):
    return {"kostka": sc.kostka(_ints(args.weight), _diagram(args.alpha))}


def cmd_schubert_lr(args):
    return {"lr": sc.littlewood_richardson(_diagram(args.alpha), _diagram(args.beta), _diagram(args.gamma))}


def cmd_schubert_pushforward(args):
    c = sc.direct_sum_pushforward(_diagram(args.alpha), _diagram(args.beta), args.p, args.q)
    return {**c.to_json(), "dropped": c.dropped}


def cmd_schubert_weight(args):
    return {"weight": list(sc.weight_of_subset(_ints(args.indices), args.n))}


def cmd_schubert_component_class(args):
    return sc.component_class(_ints(args.weight), args.k, args.n).to_json()


def cmd_schubert_veronese_class(args):
    return sc.veronese_class(args.k, args.n).to_json()


def cmd_schubert_klyachko_class(args):
    return sc.klyachko_contour_class(args.k, args.n).to_json()


def cmd_schubert_lie_class(args):
    return sc.lie_complex_class(args.k, args.n).to_json()


def cmd_schubert_crosscheck(args):
    bad = sc.crosscheck(args.kmax, args.nmax)
    return {"kmax": args.kmax, "nmax": args.nmax, "equal": not bad,
            "mismatches": [list(x) for x in bad]}


def cmd_selftest(args):
    from .acceptance import run_all

    results = run_all()
    for r in results:
        mark = "PASS" if r["ok"] else "FAIL"
        print(f"[{mark}] criterion {r['criterion']:>2} {r['name']} ({r['seconds']}s)", file=sys.stderr)
    return {"passed": all(r["ok"] for r in results), "results": results}


def _file(p):
    p.add_argument("file", help="JSON input file, or - for standard input")


def _kn(p):
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)


def _sign(p):
    p.add_argument("sign", choices=["+", "-"])


# (group, name): (library operation(s), handler, argument setup, help)
REGISTRY = {
    ("exact", "rank"): ("exactcore.rank", cmd_exact_rank, _file, "rank of a matrix"),
    ("exact", "kernel"): ("exactcore.kernel_basis", cmd_exact_kernel, _file, "basis of the right kernel"),
    ("exact", "minor"): ("exactcore.minor", cmd_exact_minor,
                         lambda p: (_file(p), p.add_argument("--rows", required=True, help="1-based, e.g. 1,2"),
                                    p.add_argument("--cols", required=True, help="1-based, e.g. 2,4")),
                         "minor on the given rows and columns"),
    ("exact", "poly-det"): ("exactcore.poly_det", cmd_exact_poly_det, _file, "determinant of a polynomial matrix"),
    ("grassmann", "plucker"): ("grassmann.plucker", cmd_grassmann_plucker, _file, "Plücker coordinates"),
    ("grassmann", "generic"): ("grassmann.is_generic", cmd_grassmann_generic, _file, "all Plücker coordinates nonzero"),
    ("grassmann", "matroid"): ("grassmann.matroid_bases", cmd_grassmann_matroid, _file, "matroid bases"),
    ("grassmann", "intersect"): ("grassmann.intersect_coord_hyperplane", cmd_grassmann_intersect,
                                 lambda p: (p.add_argument("i", type=int), _file(p)), "intersect with x_i = 0"),
    ("grassmann", "project"): ("grassmann.project_away", cmd_grassmann_project,
                               lambda p: (p.add_argument("i", type=int), _file(p)), "forget coordinate i"),
    ("grassmann", "gm-config"): ("grassmann.gm_configuration", cmd_grassmann_gm, _file, "columns as a configuration"),
    ("hypersimplex", "vertices"): ("hypersimplex.hypersimplex_vertices", cmd_hypersimplex_vertices, _kn,
                                   "vertices of Δ(k, n)"),
    ("hypersimplex", "facet"): ("hypersimplex.facet", cmd_hypersimplex_facet,
                                lambda p: (_kn(p), p.add_argument("i", type=int), _sign(p)), "facet Γ_i^±"),
    ("hypersimplex", "is-matroid"): ("hypersimplex.is_matroid_polytope", cmd_hypersimplex_is_matroid, _file,
                                     "matroid polytope test"),
    ("hypersimplex", "of-subspace"): ("hypersimplex.matroid_polytope_of", cmd_hypersimplex_of_subspace, _file,
                                      "matroid polytope of a subspace"),
    ("hypersimplex", "volume"): ("hypersimplex.normalized_volume", cmd_hypersimplex_volume, _file,
                                 "normalised volume"),
    ("hypersimplex", "validate-decomposition"): ("hypersimplex.is_matroid_decomposition", cmd_hypersimplex_validate,
                                                 _file, "check a matroid decomposition"),
    ("hypersimplex", "restrict"): ("hypersimplex.restrict_to_facet", cmd_hypersimplex_restrict,
                                   lambda p: (p.add_argument("i", type=int), _sign(p), _file(p)),
                                   "restrict a decomposition to a facet"),
    ("trees", "enumerate"): ("trees.enumerate_trees", cmd_trees_enumerate,
                             lambda p: p.add_argument("n", type=int), "all trees with n leaves"),
    ("trees", "relation"): ("trees.vertex_relation", cmd_trees_relation,
                            lambda p: (p.add_argument("v"), _file(p)), "blocks at an internal vertex"),
    ("trees", "to-decomposition"): ("trees.tree_to_decomposition", cmd_trees_to_decomposition, _file,
                                    "matroid decomposition of Δ(2, n)"),
    ("trees", "from-decomposition"): ("trees.decomposition_to_tree", cmd_trees_from_decomposition, _file,
                                      "tree of a decomposition"),
    ("trees", "stratum"): (("trees.is_stable_tree", "trees.stratum_dimension"), cmd_trees_stratum, _file, "stability and stratum dimension"),
    ("trees", "forget"): ("trees.forget_point", cmd_trees_forget,
                          lambda p: (p.add_argument("i", type=int), _file(p)), "forget leaf i"),
    ("secondary", "triangulations"): ("secondary.enumerate_triangulations", cmd_secondary_triangulations,
                                      lambda p: (_file(p), p.add_argument("--count", action="store_true")),
                                      "all triangulations"),
    ("secondary", "char-function"): ("secondary.char_function", cmd_secondary_char_function,
                                     lambda p: (p.add_argument("config"), p.add_argument("triangulation")),
                                     "characteristic function"),
    ("secondary", "vertices"): ("secondary.secondary_vertices", cmd_secondary_vertices, _file,
                                "vertices of the secondary polytope"),
    ("secondary", "prism"): ("secondary.prism_points", cmd_secondary_prism,
                             lambda p: (p.add_argument("k", type=int), p.add_argument("--count", action="store_true")),
                             "triangulations of Δ^1 x Δ^k"),
    ("secondary", "prism-triangulation"): (("secondary.prism_standard_triangulation", "secondary.prism_triangulation_of_permutation"),
                                           cmd_secondary_prism_triangulation,
                                           lambda p: (p.add_argument("k", type=int),
                                                      p.add_argument("--perm", help="permutation of 0..k")),
                                           "staircase triangulation for a permutation"),
    ("secondary", "permutohedron"): ("secondary.permutohedron_vertices", cmd_secondary_permutohedron,
                                     lambda p: p.add_argument("k", type=int), "permutohedron vertices"),
    ("config", "general-position"): ("configurations.is_general_position", cmd_config_general_position, _file,
                                     "general position test"),
    ("config", "cross-ratio"): ("configurations.cross_ratio", cmd_config_cross_ratio,
                                lambda p: p.add_argument("points", nargs=4, help="rationals or inf"),
                                "cross-ratio of four points of P^1"),
    ("config", "associate"): ("configurations.associate", cmd_config_associate, _file, "associated configuration"),
    ("config", "circuit"): ("configurations.is_circuit", cmd_config_circuit, _file, "circuit test"),
    ("config", "normal-form6"): ("configurations.six_point_normal_form", cmd_config_normal_form6, _file,
                                 "normal form (a, b, c, d) of six points"),
    ("config", "psi"): ("configurations.psi", cmd_config_psi,
                        lambda p: p.add_argument("values", nargs=4), "Ψ(a, b, c, d)"),
    ("config", "conic-test"): ("configurations.lies_on_conic", cmd_config_conic_test, _file,
                               "do six points lie on a conic"),
    ("veronese", "gauss"): ("veronese.log_gauss", cmd_veronese_gauss,
                            lambda p: (_file(p), p.add_argument("--at", nargs="+", required=True)),
                            "logarithmic Gauss map"),
    ("veronese", "pluckerpolys"): ("veronese.plucker_polys", cmd_veronese_pluckerpolys, _file,
                                   "Plücker polynomials"),
    ("veronese", "marked-point"): ("veronese.marked_point", cmd_veronese_marked_point,
                                   lambda p: (_file(p), p.add_argument("--indices", required=True)),
                                   "image of an intersection of hyperplanes"),
    ("veronese", "steiner"): ("veronese.steiner_matrix", cmd_veronese_steiner,
                              lambda p: (_file(p), p.add_argument("--at", nargs="+", required=True)),
                              "Steiner matrix at a point"),
    ("veronese", "sweep-test"): (("veronese.sweep_matrix", "veronese.on_sweep"), cmd_veronese_sweep_test,
                                 lambda p: (_file(p), p.add_argument("--t", nargs="+", required=True)),
                                 "sweep matrix and membership"),
    ("veronese", "tangent-rank"): ("veronese.tangent_system_rank", cmd_veronese_tangent_rank,
                                   lambda p: p.add_argument("values", nargs=4), "rank of the tangent system"),
    ("veronese", "tetra"): ("veronese.tetrahedral_ratio", cmd_veronese_tetra, _file,
                            "tetrahedral complex parameter"),
    ("schubert", "conjugate"): ("schubert.conjugate", cmd_schubert_conjugate,
                                lambda p: p.add_argument("alpha"), "conjugate diagram"),
    ("schubert", "heights"): ("schubert.heights", cmd_schubert_heights,
                              lambda p: (p.add_argument("alpha"), p.add_argument("p", type=int),
                                         p.add_argument("q", type=int)), "height sequence"),
    ("schubert", "schur-dim"): ("schubert.schur_dim", cmd_schubert_schur_dim,
                                lambda p: (p.add_argument("alpha"), p.add_argument("m", type=int)),
                                "dimension of a Schur functor"),
    ("schubert", "kostka"): ("schubert.kostka", cmd_schubert_kostka,
                             lambda p: (p.add_argument("weight"), p.add_argument("alpha")), "Kostka number"),
    ("schubert", "lr"): ("schubert.littlewood_richardson", cmd_schubert_lr,
                         lambda p: (p.add_argument("alpha"), p.add_argument("beta"), p.add_argument("gamma")),
                         "Littlewood-Richardson coefficient"),
    ("schubert", "pushforward"): ("schubert.direct_sum_pushforward", cmd_schubert_pushforward,
                                  lambda p: (p.add_argument("alpha"), p.add_argument("beta"),
                                             p.add_argument("p", type=int), p.add_argument("q", type=int)),
                                  "direct-sum pushforward"),
    ("schubert", "weight"): ("schubert.weight_of_subset", cmd_schubert_weight,
                             lambda p: (p.add_argument("indices"), p.add_argument("n", type=int)),
                             "weight of an index subset"),
    ("schubert", "component-class"): ("schubert.component_class", cmd_schubert_component_class,
                                      lambda p: (p.add_argument("weight"), _kn(p)), "class of a component"),
    ("schubert", "veronese-class"): ("schubert.veronese_class", cmd_schubert_veronese_class, _kn,
                                     "class of the special Veronese variety"),
    ("schubert", "klyachko-class"): ("schubert.klyachko_contour_class", cmd_schubert_klyachko_class, _kn,
                                     "alternating-sum contour class"),
    ("schubert", "lie-class"): ("schubert.lie_complex_class", cmd_schubert_lie_class, _kn,
                                "class of a generic torus orbit closure"),
    ("schubert", "crosscheck"): ("schubert.crosscheck", cmd_schubert_crosscheck,
                                 lambda p: (p.add_argument("--kmax", type=int, default=4),
                                            p.add_argument("--nmax", type=int, default=9)),
                                 "compare the two contour formulas"),
    ("selftest",): ("acceptance.run_all", cmd_selftest, lambda p: None, "run the acceptance checks"),
}


def operations(entry):
    ops = entry[0]
    return (ops,) if isinstance(ops, str) else ops


def build_parser():
    parser = argparse.ArgumentParser(prog="chowquot", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--jobs", type=int, default=1, help="worker threads where supported")
    parser.add_argument("--output", help="write JSON here instead of standard output")
    parser.add_argument("--format", choices=["json"], default="json")
    top = parser.add_subparsers(dest="group", required=True)
    groups = {}
    for key, (_, handler, setup, helptext) in REGISTRY.items():
        if len(key) == 1:
            p = top.add_parser(key[0], help=helptext)
        else:
            if key[0] not in groups:
                g = top.add_parser(key[0])
                groups[key[0]] = g.add_subparsers(dest="command", required=True)
            p = groups[key[0]].add_parser(key[1], help=helptext)
        setup(p)
        p.set_defaults(handler=handler)
    return parser


def _emit(obj, output):
    text = json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        result = args.handler(args)
    except DomainError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, args.output)
        return 2
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    try:
        _emit(result, args.output)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.handler is cmd_selftest and not result["passed"]:
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
