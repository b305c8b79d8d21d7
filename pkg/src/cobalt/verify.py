"""One-shot verification suite behind `cobalt verify-all`.

Each function runs one acceptance-grade check and returns a dict
{"name", "pass", "details"} with deterministic, JSON-ready content.
All checks are exact; the only randomness is the seeded perturbation
pass in the regularity suite.
"""

import random

from . import tables
from .fgl import (
    chern_reparam,
    fgl_additive,
    fgl_check_axioms,
    fgl_multiplicative,
    fgl_universal_rational,
    is_pushforward,
)
from .grassmann import (
    complex_report,
    determinant_identities,
    gram_report,
    grassmannian,
    partitions_in_box,
    verify_ranks,
)
from .hopf import (
    cooperations_poincare,
    mumu_rational_truncated,
    verify_hopf_axioms,
)
from .landweber import (
    ModulePresentation,
    check_regular,
    perturb_sequence,
    sequence_for_prime,
)
from .lr import lr_multiply
from .oriented import zero_section_report
from .rings import laurent_ring, polynomial_ring


def check_grassmann_ranks(max_n=7):
    """Graded ranks of every R(n, d) against binomial/partition counts."""
    failures = []
    for n in range(max_n + 1):
        for d in range(n + 1):
            G = grassmannian(n, d)
            expected = 1
            for i in range(1, d + 1):
                expected = expected * (n - d + i) // i
            if G.rank != expected or len(G.partitions()) != expected:
                failures.append({"n": n, "d": d, "kind": "total rank"})
                continue
            ok, witness = verify_ranks(n, d)
            if not ok:
                failures.append({"n": n, "d": d, "witness": list(witness)})
    return {"name": "grassmann_ranks", "pass": not failures,
            "details": {"max_n": max_n, "failures": failures}}


def check_restriction_complex(max_n=6):
    """Exactness of the inclusion/restriction complex per degree."""
    failures = []
    for n in range(1, max_n + 1):
        for d in range(n):
            report = complex_report(n, d)
            if not report["ok"]:
                bad = [deg for deg, res in report["degrees"].items()
                       if not all(res.values())]
                failures.append({"n": n, "d": d, "degrees": bad})
    return {"name": "restriction_complex", "pass": not failures,
            "details": {"max_n": max_n, "failures": failures}}


def check_determinant_identities(max_n=6):
    """Padding and prepending identities for Schur determinants."""
    failures = []
    for n in range(1, max_n + 1):
        for d in range(n):
            ok, witness = determinant_identities(n, d)
            if not ok:
                failures.append({"n": n, "d": d,
                                 "witness": [witness[0], list(witness[1])]})
    return {"name": "determinant_identities", "pass": not failures,
            "details": {"max_n": max_n, "failures": failures}}


def check_structure_constants(max_n=5):
    """Ring structure constants against the tableau-counting route."""
    failures = []
    for n in range(1, max_n + 1):
        for d in range(n + 1):
            G = grassmannian(n, d)
            box = partitions_in_box(d, n - d)
            for a in box:
                for b in box:
                    if G.multiply(a, b) != lr_multiply(a, b, d, n - d):
                        failures.append({"n": n, "d": d,
                                         "a": list(a), "b": list(b)})
    pieri = grassmannian(4, 2).multiply((1,), (1,))
    pinned = pieri == {(2,): 1, (1, 1): 1}
    if not pinned:
        failures.append({"pinned_pieri": str(pieri)})
    return {"name": "structure_constants", "pass": not failures,
            "details": {"max_n": max_n, "pinned_pieri": pinned,
                        "failures": failures}}


def check_gram_matrices(max_n=6):
    """Complement-pairing Gram matrices are permutation matrices."""
    failures = []
    for n in range(max_n + 1):
        for d in range(n + 1):
            ok, witness = gram_report(n, d)
            if not ok:
                failures.append({"n": n, "d": d, "witness": str(witness)})
    return {"name": "gram_matrices", "pass": not failures,
            "details": {"max_n": max_n, "failures": failures}}


def check_fgl_axioms(order=8, chern_order=10):
    """Law axioms to the stated order; exp carries additive to
    multiplicative."""
    results = {}
    Z = polynomial_ring("Z", [])
    kgl = laurent_ring("Z", "beta")
    results["additive"] = fgl_check_axioms(fgl_additive(Z, order),
                                           order=order)["ok"]
    results["multiplicative"] = fgl_check_axioms(
        fgl_multiplicative(kgl, order), order=order)["ok"]
    results["universal_rational"] = fgl_check_axioms(
        fgl_universal_rational(order), order=order)["ok"]

    kq = laurent_ring("Q", "beta")
    phi = chern_reparam(kq, chern_order)
    results["chern_exp_carries_additive_to_multiplicative"] = \
        is_pushforward(fgl_additive(kq, chern_order),
                       fgl_multiplicative(kq, chern_order), phi)
    return {"name": "fgl_axioms", "pass": all(results.values()),
            "details": {"order": order, "chern_order": chern_order,
                        "results": results}}


def _regularity_cases():
    """The fixed suite of regularity verdicts, one entry per case."""
    cases = []

    kgl = laurent_ring("Z", "beta")
    kgl_law = fgl_multiplicative(kgl, order=6)
    for p in (2, 3, 5):
        cases.append({
            "label": f"KGL p={p}",
            "module": ModulePresentation.free(kgl),
            "law": kgl_law, "prime": p, "height": 3,
            "window": (-6, 6),
            "expected": ["regular", "regular",
                         "quotient_vanishes", "quotient_vanishes"],
            "exact": True})

    rationals = polynomial_ring("Q", [])
    rational_law = fgl_additive(rationals, order=6)
    for p in (2, 3):
        cases.append({
            "label": f"Q additive p={p}",
            "module": ModulePresentation.free(rationals),
            "law": rational_law, "prime": p, "height": 1,
            "window": (0, 4),
            "expected": ["regular", "quotient_vanishes"],
            "exact": True})

    integers = polynomial_ring("Z", [])
    additive = fgl_additive(integers, order=6)
    for p in (2, 3, 5, 7):
        cases.append({
            "label": f"Z additive p={p}",
            "module": ModulePresentation.free(integers),
            "law": additive, "prime": p, "height": 1,
            "window": (0, 4),
            "expected": ["regular", "fails"],
            "exact": False})

    for p in (2, 3):
        torsion = ModulePresentation(integers, [("e", 0)], [{"e": p}])
        cases.append({
            "label": f"Z/{p} p={p}",
            "module": torsion,
            "law": additive, "prime": p, "height": 0,
            "window": (0, 4),
            "expected": ["fails"],
            "exact": False})
    return cases


def check_landweber_suite(seed=0, perturbations=5):
    """Fixed regularity verdicts plus seeded perturbation invariance."""
    failures = []
    cases = _regularity_cases()
    for index, case in enumerate(cases):
        sequence = sequence_for_prime(case["law"], case["prime"],
                                      case["height"])
        verdict = check_regular(case["module"], sequence, case["prime"],
                                case["window"])
        statuses = [s.status for s in verdict.stages]
        if statuses != case["expected"]:
            failures.append({"case": case["label"], "got": statuses})
            continue
        if verdict.exact != case["exact"]:
            failures.append({"case": case["label"],
                             "exact": verdict.exact})
            continue
        rng = random.Random(seed * 1000003 + index)
        for trial in range(perturbations):
            other = perturb_sequence(case["module"], sequence, rng)
            again = check_regular(case["module"], other, case["prime"],
                                  case["window"])
            if [s.status for s in again.stages] != statuses:
                failures.append({"case": case["label"],
                                 "perturbation": trial})
                break
    return {"name": "landweber_suite", "pass": not failures,
            "details": {"seed": seed, "perturbations": perturbations,
                        "cases": len(cases), "failures": failures}}


def check_zero_section(max_n=6):
    """Thom class restriction and zero-section identities."""
    failures = []
    for n in range(1, max_n + 1):
        for d in range(n):
            report = zero_section_report(n, d)
            if not report["ok"]:
                failures.append({"n": n, "d": d})
    return {"name": "thom_zero_section", "pass": not failures,
            "details": {"max_n": max_n, "failures": failures}}


def check_hopf_algebroid(max_order=6, poincare_degree=12):
    """Algebroid axioms, a corruption control, and cooperations dims."""
    details = {"orders": {}, "negative_control": False}
    ok = True
    for N in range(2, max_order + 1):
        report = verify_hopf_axioms(mumu_rational_truncated(N))
        details["orders"][str(N)] = report.ok
        ok = ok and report.ok

    corrupted = mumu_rational_truncated(4)
    corrupted.comult["b2"] = corrupted.comult["b2"] \
        + corrupted.square.ring.gen("bL2")
    control = not verify_hopf_axioms(corrupted).ok
    details["negative_control"] = control
    ok = ok and control

    dims = cooperations_poincare(poincare_degree)
    conv = [sum(tables.partition_count(i) * tables.partition_count(k - i)
                for i in range(k + 1)) for k in range(poincare_degree + 1)]
    details["poincare"] = dims
    poincare_ok = dims == conv
    details["poincare_matches_convolution"] = poincare_ok
    ok = ok and poincare_ok
    return {"name": "hopf_algebroid", "pass": ok, "details": details}


def check_cobordism_tables():
    """Number-field corollary on the stated window; finite-field table."""
    details = {"number_fields": {}, "finite_field": False}
    ok = True
    for r1, r2 in ((1, 0), (0, 1), (2, 1)):
        report = tables.verify_number_field_corollary(
            r1, r2, (-10, 10), (-5, 5))
        details["number_fields"][f"r1={r1},r2={r2}"] = report["pass"]
        ok = ok and report["pass"]
    finite = tables.verify_finite_field_table(5, (-10, 10), (-5, 5))
    details["finite_field"] = finite["pass"]
    ok = ok and finite["pass"]
    return {"name": "cobordism_tables", "pass": ok, "details": details}


ALL_CHECKS = [
    check_grassmann_ranks,
    check_restriction_complex,
    check_determinant_identities,
    check_structure_constants,
    check_gram_matrices,
    check_fgl_axioms,
    check_landweber_suite,
    check_zero_section,
    check_hopf_algebroid,
    check_cobordism_tables,
]


def verify_all(seed=0):
    """Run every check; the landweber suite consumes the seed."""
    checks = []
    for fn in ALL_CHECKS:
        if fn is check_landweber_suite:
            checks.append(fn(seed=seed))
        else:
            checks.append(fn())
    return {"pass": all(c["pass"] for c in checks), "checks": checks}
