"""Command-line front end: JSON and CSV reports over the library.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on bad usage or unreadable/invalid input.  JSON output is sorted and
seed-deterministic; timings appear only behind --timings so reports
stay byte-identical across runs.
"""

import argparse
import csv
import json
import sys
import time

from . import __version__
from . import verify as verify_mod
from .errors import AxiomsFail, CobaltError, InputError
from .fgl import (
    FormalGroupLaw,
    _MSeries,
    fgl_additive,
    fgl_check_axioms,
    fgl_multiplicative,
    fgl_universal_rational,
    p_series,
)
from .grassmann import (
    complex_report,
    determinant_identities,
    gram_report,
    grassmannian,
    partitions_in_box,
)
from .hopf import induced_hopf, mumu_rational_truncated, verify_hopf_axioms
from .landweber import (
    ModulePresentation,
    check_regular,
    sequence_for_prime,
)
from .lr import lr_multiply
from .oriented import FreeModuleOnSchur, thom_class, zero_section_report
from .rings import (
    laurent_ring,
    load_presentation,
    parse_expression,
    polynomial_ring,
)
from .tables import (
    FieldDescriptor,
    mgl_rational_table,
    verify_finite_field_table,
    verify_number_field_corollary,
)


# -- small parsers ----------------------------------------------------------


def _parse_span(text):
    """'lo:hi' -> (lo, hi) with lo <= hi."""
    lo, sep, hi = text.partition(":")
    if not sep:
        raise InputError(f"window piece {text!r} must look like lo:hi")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise InputError(f"window bounds in {text!r} must be integers")
    if lo > hi:
        raise InputError(f"window {text!r} is empty")
    return lo, hi


def _parse_window_pair(text):
    """'plo:phi,qlo:qhi' -> ((plo, phi), (qlo, qhi))."""
    first, sep, second = text.partition(",")
    if not sep:
        raise InputError(
            f"window {text!r} must look like plo:phi,qlo:qhi")
    return _parse_span(first), _parse_span(second)


def _parse_primes(text):
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        try:
            p = int(piece)
        except ValueError:
            raise InputError(f"prime list entry {piece!r} is not an integer")
        if p < 2:
            raise InputError(f"prime list entry {p} must be at least 2")
        out.append(p)
    if not out:
        raise InputError("the prime list is empty")
    return out


def _parse_field(text):
    if text == "Q":
        return FieldDescriptor.rationals()
    if text.startswith("number:"):
        pieces = text[len("number:"):].split(",")
        if len(pieces) != 2:
            raise InputError("number fields are written number:r1,r2")
        try:
            r1, r2 = int(pieces[0]), int(pieces[1])
        except ValueError:
            raise InputError("number field signature must be two integers")
        return FieldDescriptor.number_field(r1, r2)
    if text[:1] == "F" and text[1:].isdigit():
        return FieldDescriptor.finite(int(text[1:]))
    raise InputError(
        f"unknown field {text!r}; use Q, F<q>, or number:r1,r2")


def _read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")


def _coefficient_value(value, ring):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError("coefficient values must be integers or "
                         "expression strings")
    if isinstance(value, int):
        return ring.const(value)
    return parse_expression(value, ring)


def _custom_law(doc, ring):
    """A law from an explicit coefficient table over `ring`.

    Schema: {"order": int, "exact": bool?, "ring": presentation?,
             "coefficients": [{"i": int, "j": int, "value": int|str}]}.
    The (1,0) and (0,1) coefficients are fixed at 1; each listed entry
    is mirrored to (j,i) since any group law is commutative.
    """
    extra = set(doc) - {"order", "exact", "ring", "coefficients"}
    if extra:
        raise InputError(f"unknown law fields {sorted(extra)}")
    order = doc.get("order")
    if not isinstance(order, int) or order < 2:
        raise InputError("a custom law needs an integer order >= 2")
    coeffs = {(1, 0): ring.one(), (0, 1): ring.one()}
    for entry in doc.get("coefficients", []):
        keys = set(entry) - {"i", "j", "value"}
        if keys:
            raise InputError(f"unknown coefficient fields {sorted(keys)}")
        try:
            i, j = int(entry["i"]), int(entry["j"])
        except (KeyError, TypeError, ValueError):
            raise InputError("each coefficient needs integer 'i' and 'j'")
        if i < 0 or j < 0 or i + j < 2:
            raise InputError(f"coefficient ({i},{j}) is not settable")
        value = _coefficient_value(entry.get("value", 0), ring)
        for key in ((i, j), (j, i)):
            if key in coeffs and coeffs[key] != value:
                raise InputError(
                    f"conflicting values for coefficient {key}")
            coeffs[key] = value
    series = _MSeries(ring, 2, order, coeffs)
    law = FormalGroupLaw(ring, series, order,
                         exact=bool(doc.get("exact", False)))
    axioms = fgl_check_axioms(law)
    if not axioms["ok"]:
        bad = sorted(k for k, v in axioms.items() if k != "ok" and not v)
        raise AxiomsFail(f"custom law fails: {', '.join(bad)}")
    return law


def _load_module(doc):
    """(ring, module) from {"ring", "generators"?, "relations"?}."""
    if not isinstance(doc, dict):
        raise InputError("module file must hold a JSON object")
    extra = set(doc) - {"ring", "generators", "relations"}
    if extra:
        raise InputError(f"unknown module fields {sorted(extra)}")
    if "ring" not in doc:
        raise InputError("module file needs a 'ring' presentation")
    ring = load_presentation(doc["ring"])
    generators = []
    for g in doc.get("generators", [{"name": "e", "adams_degree": 0}]):
        if "name" not in g or "adams_degree" not in g:
            raise InputError(
                "module generator needs 'name' and 'adams_degree'")
        generators.append((g["name"], g["adams_degree"]))
    relations = []
    for rel in doc.get("relations", []):
        if not isinstance(rel, dict):
            raise InputError("each module relation is a {generator: "
                             "coefficient} object")
        relations.append({name: _coefficient_value(value, ring)
                          for name, value in rel.items()})
    return ring, ModulePresentation(ring, generators, relations)


def _report(command, **fields):
    out = {"schema": 1, "tool_version": __version__, "command": command}
    out.update(fields)
    return out


# -- grass -------------------------------------------------------------------


def _grass_check(token, n, d, G):
    if token == "complex":
        rep = complex_report(n, d)
        check = {"name": "complex", "pass": rep["ok"]}
        if not rep["ok"]:
            check["witness"] = sorted(
                deg for deg, res in rep["degrees"].items()
                if not all(res.values()))
        return check
    if token == "identities":
        ok, witness = determinant_identities(n, d)
        check = {"name": "identities", "pass": ok}
        if not ok:
            check["witness"] = {"identity": witness[0],
                                "partition": list(witness[1])}
        return check
    if token == "pairing":
        ok, witness = gram_report(n, d)
        check = {"name": "pairing", "pass": ok}
        if not ok:
            check["witness"] = str(witness)
        return check
    if token == "products":
        box = partitions_in_box(d, n - d)
        for a in box:
            for b in box:
                if G.multiply(a, b) != lr_multiply(a, b, d, n - d):
                    return {"name": "products", "pass": False,
                            "witness": {"a": list(a), "b": list(b)}}
        return {"name": "products", "pass": True}
    raise InputError(f"unknown verification {token!r}")


def _cmd_grass(args):
    G = grassmannian(args.n, args.d)
    report = _report("grass", n=args.n, d=args.d, rank=G.rank,
                     basis=[list(lam) for lam in G.partitions()])
    checks = []
    if args.verify:
        if args.verify == "all":
            tokens = ["identities", "pairing", "products"]
            if args.d < args.n:
                tokens.insert(0, "complex")
        else:
            tokens = [args.verify]
        checks = [_grass_check(t, args.n, args.d, G) for t in tokens]
        report["checks"] = checks
    return report, all(c["pass"] for c in checks)


# -- fgl ---------------------------------------------------------------------


def _builtin_law(token, order):
    if token == "additive":
        return fgl_additive(polynomial_ring("Z", []), order)
    if token == "multiplicative":
        return fgl_multiplicative(laurent_ring("Z", "beta"), order)
    return fgl_universal_rational(order)


def _cmd_fgl(args):
    order = args.N
    if order < 2:
        raise InputError("need a truncation order N >= 2")
    law = _builtin_law(args.law, order)
    coefficients = {f"{i},{j}": str(c)
                    for (i, j), c in sorted(law.series.coeffs.items())
                    if not c.is_zero()}
    report = _report("fgl", law=args.law, order=order,
                     coefficients=coefficients)
    ok = True
    if args.check:
        axioms = fgl_check_axioms(law, order=order)
        report["axioms"] = axioms
        ok = axioms["ok"]
    if args.p_series is not None:
        series = p_series(law, args.p_series, order)
        report["p_series"] = {
            "p": args.p_series,
            "coefficients": {str(k): str(c)
                             for k, c in sorted(series.coeffs.items())
                             if not c.is_zero()}}
    if args.landweber is not None:
        prime, height = args.landweber
        sequence = sequence_for_prime(law, prime, height)
        report["landweber_generators"] = {
            "prime": prime, "height": height,
            "sequence": [str(v) for v in sequence]}
    return report, ok


# -- landweber ----------------------------------------------------------------


def _cmd_landweber(args):
    window = _parse_span(args.window)
    primes = _parse_primes(args.primes)
    if args.height < 0:
        raise InputError("height must be nonnegative")
    module_doc = _read_json(args.module) if args.module else None

    if args.law in ("additive", "multiplicative"):
        if module_doc is not None:
            ring, module = _load_module(module_doc)
        elif args.law == "multiplicative":
            ring = laurent_ring("Z", "beta")
            module = ModulePresentation.free(ring)
        else:
            ring = polynomial_ring("Z", [])
            module = ModulePresentation.free(ring)
        builder = fgl_additive if args.law == "additive" \
            else fgl_multiplicative
        law = builder(ring)
    else:
        law_doc = _read_json(args.law)
        if module_doc is not None:
            ring, module = _load_module(module_doc)
        elif isinstance(law_doc, dict) and "ring" in law_doc:
            ring = load_presentation(law_doc["ring"])
            module = ModulePresentation.free(ring)
        else:
            raise InputError(
                "a custom law needs a 'ring' field or a --module file")
        law = _custom_law(law_doc, ring)

    verdicts = {}
    for p in primes:
        sequence = sequence_for_prime(law, p, args.height)
        verdicts[str(p)] = check_regular(module, sequence, p,
                                         window).to_dict()
    exact = all(v["exact"] for v in verdicts.values())
    report = _report("landweber", law=args.law, height=args.height,
                     window=list(window), primes=primes,
                     verdicts=verdicts, exact=exact)
    return report, exact


# -- oriented ------------------------------------------------------------------


def _cmd_oriented(args):
    if args.coeff:
        coeff = load_presentation(_read_json(args.coeff))
    else:
        coeff = polynomial_ring("Z", [])
    module = FreeModuleOnSchur(coeff, args.n, args.d)
    report = _report(
        "oriented", n=args.n, d=args.d, rank=module.rank,
        basis=[list(lam) for lam in module.grass.partitions()],
        coefficient_ring={"base": coeff.base,
                          "generators": [g.name for g in coeff.gens]})
    ok = True
    if args.thom:
        _, th = thom_class(args.n, args.d)
        report["thom_class"] = {f"x^{k}": str(c)
                                for k, c in enumerate(th.vec)
                                if not c.is_zero()}
        section = zero_section_report(args.n, args.d)
        report["zero_section"] = section
        ok = section["ok"]
    return report, ok


# -- hopf ----------------------------------------------------------------------


def _cmd_hopf(args):
    if args.N < 2:
        raise InputError("need a truncation order N >= 2")
    if args.induced:
        doc = _read_json(args.induced)
        if not isinstance(doc, dict):
            raise InputError("induced law file must hold a JSON object")
        extra = set(doc) - {"ring", "law"}
        if extra:
            raise InputError(f"unknown induced fields {sorted(extra)}")
        if "ring" not in doc:
            raise InputError("induced law file needs a 'ring'")
        ring = load_presentation(doc["ring"])
        spec = doc.get("law")
        if spec == "additive":
            law = fgl_additive(ring, args.N)
        elif spec == "multiplicative":
            law = fgl_multiplicative(ring, args.N)
        elif isinstance(spec, dict):
            law = _custom_law(spec, ring)
        else:
            raise InputError("'law' must be additive, multiplicative, "
                             "or a coefficient table")
        result = induced_hopf(ring, law, args.N)
        collapse = result.collapse_identifies_units()
        report = _report("hopf", N=args.N, induced=result.to_dict(),
                         collapse_identifies_units=collapse)
        return report, collapse

    H = mumu_rational_truncated(args.N)
    axioms = verify_hopf_axioms(H)
    report = _report(
        "hopf", N=args.N,
        algebra_generators=H.a_generators(),
        gamma_generators=H.gamma_generators(),
        right_unit={k: str(v) for k, v in sorted(H.eta_R.items())},
        counit={k: str(v) for k, v in sorted(H.counit.items())},
        comult={k: str(v) for k, v in sorted(H.comult.items())},
        conjugation={k: str(v) for k, v in sorted(H.conjugation.items())},
        axioms=axioms.to_dict())
    return report, axioms.ok


# -- cobordism -------------------------------------------------------------------


def _cmd_cobordism(args):
    field = _parse_field(args.field)
    p_span, q_span = _parse_window_pair(args.window)
    table = mgl_rational_table(field, p_span, q_span)
    p_values = list(range(p_span[0], p_span[1] + 1))
    q_values = list(range(q_span[0], q_span[1] + 1))
    cells = [[table[(p, q)].effective(field).render() for q in q_values]
             for p in p_values]
    report = _report("cobordism", field=field.label,
                     window={"p": list(p_span), "q": list(q_span)},
                     p_values=p_values, q_values=q_values, cells=cells)
    ok = True
    if args.verify:
        if field.kind == "finite":
            outcome = verify_finite_field_table(field.q, p_span, q_span)
        else:
            outcome = verify_number_field_corollary(field.r1, field.r2,
                                                    p_span, q_span)
        report["verification"] = outcome
        ok = outcome["pass"]
    return report, ok


def _emit_cobordism_csv(report, stream):
    writer = csv.writer(stream)
    writer.writerow(["p\\q"] + [str(q) for q in report["q_values"]])
    for p, row in zip(report["p_values"], report["cells"]):
        writer.writerow([str(p)] + row)


# -- verify-all -------------------------------------------------------------------


def _cmd_verify_all(args):
    start = time.monotonic()
    checks = []
    timings = []
    for fn in verify_mod.ALL_CHECKS:
        t = time.monotonic()
        if fn is verify_mod.check_landweber_suite:
            result = fn(seed=args.seed)
        else:
            result = fn()
        timings.append(int((time.monotonic() - t) * 1000))
        checks.append(result)
    elapsed = time.monotonic() - start
    within_budget = elapsed <= args.budget
    ok = all(c["pass"] for c in checks) and within_budget
    if args.timings:
        for check, ms in zip(checks, timings):
            check["timing_ms"] = ms
    report = _report("verify-all", seed=args.seed,
                     budget_seconds=args.budget,
                     within_budget=within_budget,
                     checks=checks)
    report["pass"] = ok
    if args.timings:
        report["timing_ms"] = int(elapsed * 1000)
    return report, ok


# -- driver -----------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cobalt",
        description="Exact Schur calculus, formal group laws, and "
                    "Landweber regularity reports.")
    parser.add_argument("--version", action="version",
                        version=f"cobalt {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("grass",
                       help="Schur basis and checks for one (n, d)")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--verify",
                   choices=["all", "complex", "identities", "pairing",
                            "products"])

    f = sub.add_parser("fgl", help="formal group law coefficient tables")
    f.add_argument("--law", required=True,
                   choices=["additive", "multiplicative", "universal-q"])
    f.add_argument("--N", type=int, default=8,
                   help="truncation order (default 8)")
    f.add_argument("--check", action="store_true",
                   help="verify the group-law axioms")
    f.add_argument("--p-series", type=int, metavar="P", dest="p_series")
    f.add_argument("--landweber", nargs=2, type=int, metavar=("P", "H"),
                   help="emit the sequence p, v_1, .., v_H")

    l = sub.add_parser("landweber", help="regular-sequence verdicts")
    l.add_argument("--module", metavar="FILE",
                   help="module presentation (default: free of rank one)")
    l.add_argument("--law", default="multiplicative",
                   help="additive, multiplicative, or a JSON law file")
    l.add_argument("--primes", default="2,3,5")
    l.add_argument("--height", type=int, default=3)
    l.add_argument("--window", default="-10:10", metavar="LO:HI")

    o = sub.add_parser("oriented",
                       help="Schur-class modules with general coefficients")
    o.add_argument("--coeff", metavar="FILE",
                   help="coefficient ring presentation (default: Z)")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--d", type=int, required=True)
    o.add_argument("--thom", action="store_true",
                   help="include the Thom class and zero-section checks")

    h = sub.add_parser("hopf", help="Hopf algebroid reports")
    h.add_argument("--N", type=int, required=True,
                   help="truncation order")
    h.add_argument("--induced", metavar="FILE",
                   help="build the induced algebroid of a law file")

    c = sub.add_parser("cobordism", help="rational dimension tables")
    c.add_argument("--field", required=True,
                   help="Q, F<q>, or number:r1,r2")
    c.add_argument("--window", default="-10:10,-5:5",
                   metavar="PLO:PHI,QLO:QHI")
    c.add_argument("--verify", action="store_true",
                   help="check the table against the closed form")
    c.add_argument("--format", choices=["json", "csv"], default="json")

    v = sub.add_parser("verify-all", help="run the whole check suite")
    v.add_argument("--seed", type=int, default=0,
                   help="seed for the perturbation checks (default 0)")
    v.add_argument("--budget", type=float, default=300.0,
                   help="wall-clock limit in seconds (default 300)")
    v.add_argument("--timings", action="store_true",
                   help="include timing fields (breaks byte-identity)")
    return parser


_HANDLERS = {
    "grass": _cmd_grass,
    "fgl": _cmd_fgl,
    "landweber": _cmd_landweber,
    "oriented": _cmd_oriented,
    "hopf": _cmd_hopf,
    "cobordism": _cmd_cobordism,
    "verify-all": _cmd_verify_all,
}


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    for i, token in enumerate(argv[:-1]):
        # windows often start with "-"; join so argparse keeps the value
        if token == "--window":
            argv[i:i + 2] = [f"--window={argv[i + 1]}"]
            break
    args = build_parser().parse_args(argv)
    try:
        report, ok = _HANDLERS[args.command](args)
    except CobaltError as exc:
        print(f"cobalt: error: {exc}", file=sys.stderr)
        return 2
    if args.command == "cobordism" and args.format == "csv":
        _emit_cobordism_csv(report, sys.stdout)
    else:
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
