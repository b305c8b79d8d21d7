"""Stagewise regularity verdicts on the built-in suite and custom modules."""

import pytest

from cobalt.errors import InhomogeneousRelation, InputError
from cobalt.fgl import fgl_additive, fgl_multiplicative
from cobalt.landweber import (
    ModulePresentation,
    check_exact,
    check_regular,
    perturb_sequence,
    run_builtin_suite,
    sequence_for_prime,
)
from cobalt.rings import Ring, laurent_ring, polynomial_ring


def statuses(verdict):
    return [s.status for s in verdict.stages]


def test_builtin_suite_all_expected():
    cases, ok = run_builtin_suite()
    assert ok
    by_name = {}
    for case in cases:
        by_name.setdefault(case.name, []).append(case)
        assert case.passed, (case.name, case.prime,
                             statuses(case.verdict), case.expected_statuses)
    assert set(by_name) == {"KGL", "LQ", "HZ", "Z/2", "Z/3",
                            "KU_(2)", "KU_(3)"}


def test_kgl_statuses():
    ring = laurent_ring("Z", "beta")
    law = fgl_multiplicative(ring)
    module = ModulePresentation.free(ring)
    for p in (2, 3):
        seq = sequence_for_prime(law, p, 3)
        verdict = check_regular(module, seq, p, (-6, 6))
        assert statuses(verdict) == ["regular", "regular",
                                     "quotient_vanishes", "quotient_vanishes"]
        assert verdict.exact


def test_hz_fails_with_witness():
    ring = polynomial_ring("Z", [])
    law = fgl_additive(ring)
    module = ModulePresentation.free(ring)
    verdict = check_regular(module, sequence_for_prime(law, 2, 1), 2, (-2, 2))
    assert statuses(verdict) == ["regular", "fails"]
    assert verdict.stages[1].witness_degree == 0
    assert not verdict.exact
    # one more stage stays broken
    verdict = check_regular(module, sequence_for_prime(law, 2, 2), 2, (-2, 2))
    assert statuses(verdict) == ["regular", "fails", "fails"]


def test_torsion_module_fails_at_stage_zero():
    ring = polynomial_ring("Z", [])
    module = ModulePresentation(ring, [("e", 0)], [{"e": 5}])
    verdict = check_regular(module, [5], 5, (-1, 1))
    assert statuses(verdict) == ["fails"]
    assert verdict.stages[0].witness_degree == 0


def test_ku_p_local_is_exact():
    for p in (2, 3, 5):
        ring = Ring("Z", [], localized_at=p)
        law = fgl_multiplicative(ring, beta=1)
        module = ModulePresentation.free(ring)
        seq = sequence_for_prime(law, p, 1)
        assert seq[1] == ring.const((-1) ** (p + 1))
        verdict = check_regular(module, seq, p, (-2, 2))
        assert statuses(verdict) == ["regular", "regular"]


def test_p_local_sees_other_primes_as_units():
    ring = Ring("Z", [], localized_at=3)
    module = ModulePresentation(ring, [("e", 0)], [{"e": 2}])
    # e is killed by 2, a 3-local unit, so the module is locally zero
    verdict = check_regular(module, [3], 3, (-1, 1))
    assert statuses(verdict) == ["quotient_vanishes"]


def test_nilpotent_multiplier_fails():
    ring = polynomial_ring("Z", [("t", 1)])
    ring.impose(ring.gen("t") ** 2)
    module = ModulePresentation.free(ring)
    verdict = check_regular(module, [2, ring.gen("t")], 2, (-1, 3))
    assert statuses(verdict) == ["regular", "fails"]
    assert verdict.stages[1].witness_degree == 1


def test_window_inconclusive():
    ring = laurent_ring("Z", "beta")
    law = fgl_multiplicative(ring)
    module = ModulePresentation.free(ring)
    seq = sequence_for_prime(law, 2, 1)
    verdict = check_regular(module, seq, 2, (0, 0))
    assert statuses(verdict) == ["regular", "window_inconclusive"]
    assert "window" in verdict.stages[1].detail


def test_rational_paths():
    ring = polynomial_ring("Q", [("x", 1)])
    module = ModulePresentation.free(ring)
    verdict = check_regular(module, [2, ring.gen("x")], 2, (0, 3))
    assert statuses(verdict) == ["regular", "quotient_vanishes"]

    killed = ModulePresentation(ring, [("e", 0)], [{"e": ring.gen("x")}])
    verdict = check_regular(killed, [ring.gen("x")], 2, (0, 2))
    assert statuses(verdict) == ["fails"]
    assert verdict.stages[0].witness_degree == 0


def test_check_exact_driver():
    ring = laurent_ring("Z", "beta")
    law = fgl_multiplicative(ring)
    module = ModulePresentation.free(ring)
    verdicts, exact = check_exact(module, law, (2, 3), 2, (-6, 6))
    assert exact
    assert set(verdicts) == {2, 3}

    hz = polynomial_ring("Z", [])
    verdicts, exact = check_exact(ModulePresentation.free(hz),
                                  fgl_additive(hz), (2,), 1, (-2, 2))
    assert not exact


def test_perturbation_invariance():
    import random
    ring = laurent_ring("Z", "beta")
    law = fgl_multiplicative(ring)
    module = ModulePresentation.free(ring)
    seq = sequence_for_prime(law, 3, 3)
    base = statuses(check_regular(module, seq, 3, (-6, 6)))
    rng = random.Random(99)
    for _ in range(3):
        alt = perturb_sequence(module, seq, rng)
        assert statuses(check_regular(module, alt, 3, (-6, 6))) == base


def test_seeded_suite_with_perturbations():
    cases, ok = run_builtin_suite(seed=42, perturbations=2)
    assert ok


def test_input_validation():
    ring = polynomial_ring("Z", [("t", 1)])
    module = ModulePresentation.free(ring)
    with pytest.raises(InputError):
        check_regular(module, [2], 2, (3, 1))
    with pytest.raises(InputError):
        check_regular(module, [ring.gen("t") + 1], 2, (0, 1))
    with pytest.raises(InputError):
        ModulePresentation(ring, [("e", 0)], [{"bogus": 2}])
    with pytest.raises(InhomogeneousRelation):
        ModulePresentation(ring, [("e", 0), ("f", 1)],
                           [{"e": 2, "f": 3}])
    with pytest.raises(InputError):
        ModulePresentation(ring, [("e", 0), ("e", 1)])
