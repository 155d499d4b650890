"""Command-line interface: verify pentad documents, build graded algebras,
extend modules, and certify chain-rule isomorphisms.

Exit codes: 0 all checks pass, 1 a validation failed, 2 input error.
"""

from __future__ import annotations

import argparse
import sys

from .chain import build_chain, verify_local_equivalence
from .document import DocumentError, dumps, parse_document, pentad_to_document
from .gmodule import (
    build_lifted_phi,
    build_pairing,
    check_graded_module,
    extend_negative,
    extend_positive,
    lifted_pentad,
    module_irreducibility_probe,
    module_transitivity,
)
from .graded import build_BL, build_graduations, check_graded_algebra, check_transitivity
from .liealg import validate_representation
from .pentad import validate_pentad
from .scalars import format_scalar


def _matrix_out(m):
    return [[format_scalar(x) for x in row] for row in m.data]


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc))
    return parse_document(text)


def _option(args, loaded, name, default):
    value = getattr(args, name, None)
    if value is not None:
        return value
    return loaded["options"].get(name, default)


def cmd_verify(args):
    loaded = _load(args.file)
    pentad = loaded["pentad"]
    report = validate_pentad(pentad)
    print("pentad standard:", report)
    if loaded["module"] is not None:
        pi, varpi, pairing0 = loaded["module"]
        mrep = validate_representation(pi)
        mrep.merge(validate_representation(varpi), "dual: ")
        print("module blocks:", mrep)
        if not mrep.ok:
            return 1
    return 0 if report.ok else 1


def cmd_build(args):
    loaded = _load(args.file)
    pentad = loaded["pentad"]
    report = validate_pentad(pentad)
    if not report.ok:
        print("pentad not standard:", report)
        return 1
    depth = _option(args, loaded, "depth", 3)
    seed = _option(args, loaded, "seed", 0)
    samples = _option(args, loaded, "samples", 200)
    G = build_graduations(pentad, depth)
    checks = check_graded_algebra(G)
    trans = check_transitivity(G)
    bl_report = None
    if pentad.b0.symmetric:
        bl_report = build_BL(G, seed=seed, samples=samples)
    dims = [G.dims[n] for n in range(-depth, depth + 1)]
    # transitivity is a reported property of the algebra, not a failure
    ok = checks.ok and (bl_report is None or bl_report.ok)
    if args.format == "structured":
        doc = pentad_to_document(pentad, module=loaded["module"],
                                 options={"depth": depth, "seed": seed,
                                          "samples": samples})
        doc["build"] = {
            "dims": {str(n): G.dims[n] for n in sorted(G.dims)},
            "total": G.total_dim(),
            "finite": G.finite,
            "bracket_checks": checks.violations,
            "transitive": trans["transitive"],
            "tables": {
                "%d,%d" % key: [[ [format_scalar(pentad.field.coerce(c)) for c in vec]
                                  for vec in row] for row in table]
                for key, table in sorted(G.tables.items())
            },
        }
        if bl_report is not None:
            doc["build"]["bl"] = {str(n): _matrix_out(G.bl[n])
                                  for n in sorted(G.bl)}
            doc["build"]["bl_checks"] = bl_report.violations
        else:
            doc["build"]["bl"] = None
        print(dumps(doc))
    else:
        print("field:", pentad.field.name)
        print("dims (%d..%d):" % (-depth, depth), ", ".join(str(d) for d in dims))
        print("total:", G.total_dim())
        if G.finite:
            print("finite: yes")
        else:
            print("finite: inconclusive at depth %d" % depth)
        print("bracket checks:", checks)
        if bl_report is None:
            print("B_L: skipped (B0 not symmetric)")
        else:
            print("B_L:", bl_report)
        print("transitive:", "yes" if trans["transitive"] else "no")
    return 0 if ok else 1


def cmd_extend(args):
    loaded = _load(args.file)
    if loaded["module"] is None:
        raise DocumentError("document has no module block; extend needs pi, "
                            "varpi and pairing0")
    pentad = loaded["pentad"]
    report = validate_pentad(pentad)
    if not report.ok:
        print("pentad not standard:", report)
        return 1
    depth = _option(args, loaded, "depth", 3)
    seed = _option(args, loaded, "seed", 0)
    samples = _option(args, loaded, "samples", 10)
    pi, varpi, pairing0 = loaded["module"]
    G = build_graduations(pentad, depth)
    Gp = extend_positive(G, pi)
    Gn = extend_negative(G, varpi)
    pos_dims = [Gp.dims[m] for m in Gp.level_list()]
    neg_dims = [Gn.dims[m] for m in Gn.level_list()]
    prep = check_graded_module(Gp)
    nrep = check_graded_module(Gn)
    ptrans = module_transitivity(Gp)
    ntrans = module_transitivity(Gn)
    verdict, detail = module_irreducibility_probe(Gp, samples=samples, seed=seed)
    # transitivity/irreducibility are reported properties, not failures
    ok = prep.ok and nrep.ok
    results = {
        "positive_levels": pos_dims,
        "negative_levels": neg_dims,
        "action_law": prep.violations + nrep.violations,
        "transitive": ptrans["transitive"] and ntrans["transitive"],
        "irreducibility": verdict,
    }
    if pentad.b0.symmetric:
        bl_report = build_BL(G, seed=seed)
        pairing, pair_rep = build_pairing(Gp, Gn, pairing0)
        lphi, phi_rep = build_lifted_phi(Gp, Gn, pairing, pi, varpi, pairing0)
        lifted, _, _, cert = lifted_pentad(G, Gp, Gn, pairing, lphi)
        if lifted is not None and cert.ok:
            cert.merge(validate_pentad(lifted), "standardness: ")
        ok = ok and bl_report.ok and pair_rep.ok and phi_rep.ok and cert.ok
        results["pairing"] = pair_rep.violations
        results["pairing_grams"] = {str(i): _matrix_out(g)
                                    for i, g in sorted(pairing.grams.items())}
        results["lifted_phi"] = phi_rep.violations
        results["lifted_pentad"] = cert.violations
        pair_msg = str(pair_rep)
        phi_msg = str(phi_rep)
        lifted_msg = str(cert)
    else:
        results["pairing"] = results["lifted_phi"] = results["lifted_pentad"] = \
            "refused: B0 is not symmetric"
        pair_msg = phi_msg = lifted_msg = "refused (B0 is not symmetric)"
    if args.format == "structured":
        doc = pentad_to_document(pentad, module=loaded["module"],
                                 options={"depth": depth, "seed": seed,
                                          "samples": samples})
        doc["extend"] = results
        print(dumps(doc))
    else:
        print("positive levels:", ", ".join(str(d) for d in pos_dims),
              " total", sum(pos_dims))
        print("negative levels:", ", ".join(str(d) for d in neg_dims),
              " total", sum(neg_dims))
        print("action law:", prep if not prep.ok else nrep)
        print("transitive:", "yes" if results["transitive"] else "no")
        if verdict == "probably-irreducible":
            print("irreducibility: irreducible (degree-0 reduction, %d samples)"
                  % detail)
        else:
            print("irreducibility: reducible (invariant subspace of dim %d)"
                  % detail.dim)
        print("pairing:", pair_msg)
        print("lifted Phi-map:", phi_msg)
        print("lifted pentad:", lifted_msg)
    return 0 if ok else 1


def cmd_chain(args):
    loaded = _load(args.file)
    if loaded["module"] is None:
        raise DocumentError("document has no module block; chain needs pi, "
                            "varpi and pairing0")
    pentad = loaded["pentad"]
    report = validate_pentad(pentad)
    if not report.ok:
        print("pentad not standard:", report)
        return 1
    depth = _option(args, loaded, "depth", 3)
    seed = _option(args, loaded, "seed", 0)
    samples = _option(args, loaded, "samples", 200)
    pi, varpi, pairing0 = loaded["module"]
    cert = build_chain(pentad, pi, varpi, pairing0, depth,
                       seed=seed, samples=samples)
    local = verify_local_equivalence(cert) if cert.rhs is not None else None
    ok = cert.ok and (local is None or local.ok)
    if args.format == "structured":
        doc = pentad_to_document(pentad, module=loaded["module"],
                                 options={"depth": depth, "seed": seed,
                                          "samples": samples})
        doc["chain"] = {
            "dim_table": {str(k): list(v) for k, v in sorted(cert.dim_table.items())},
            "verdict": cert.verdict,
            "report": cert.report.violations,
            "local_equivalence": local.violations if local is not None else None,
        }
        print(dumps(doc))
    else:
        if cert.rhs is None:
            print("chain:", cert.report)
            print("verdict:", cert.verdict["status"])
            return 1
        degs = sorted(cert.dim_table)
        lhs_dims = ",".join(str(cert.dim_table[k][0]) for k in degs)
        rhs_dims = ",".join(str(cert.dim_table[k][1]) for k in degs)
        total = sum(cert.dim_table[k][1] for k in degs)
        if lhs_dims == rhs_dims:
            print("both sides: %s (%d)" % (rhs_dims, total))
        else:
            print("lhs: %s   rhs: %s" % (lhs_dims, rhs_dims))
        print("sigma residual:",
              "zero" if cert.verdict["residual_zero"] else "nonzero")
        qualifier = "exact, finite" if cert.verdict["finite"] else \
            "exact, inconclusive at depth %d" % depth
        print("verdict: %s (%s)" % (cert.verdict["status"], qualifier))
        if local is not None:
            print("local equivalence:", local)
        if not cert.report.ok:
            print("details:", cert.report)
    return 0 if ok else 1


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="gradedlie",
        description="Graded Lie algebras from standard pentads, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, func, helptext in (
        ("verify", cmd_verify, "validate a pentad document"),
        ("build", cmd_build, "build the graded algebra and its form"),
        ("extend", cmd_extend, "build graded module extensions"),
        ("chain", cmd_chain, "certify the chain-rule isomorphism"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file", help="pentad document (JSON)")
        p.add_argument("--depth", type=int, default=None,
                       help="truncation depth (default: document option or 3)")
        p.add_argument("--format", choices=("text", "structured"), default="text",
                       help="output format")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for randomized probes (default 0)")
        p.add_argument("--samples", type=int, default=None,
                       help="sample count for randomized probes")
        p.set_defaults(func=func)
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
