"""Acceptance gate: the eight primary criteria, each run at its
reference configuration with a wall-clock budget.  One printed line per
criterion."""

import time

from uqsl2.uq_algebra import algebra
from uqsl2.suites import (suite_center, suite_drinfeld, suite_genus2,
                          suite_gta, suite_handle, suite_hopf, suite_lm,
                          suite_ribbon, suite_skein, suite_sl2z,
                          suite_wilson)


def _gate(label, budget, *configs):
    t0 = time.monotonic()
    checks = {}
    for alg, suite in configs:
        result = suite(alg, 1e-9)
        for name, ok in result["checks"].items():
            checks[f"p{alg.p}.{name}"] = ok
    elapsed = time.monotonic() - t0
    ok = all(checks.values()) and (budget is None or elapsed < budget)
    bad = [k for k, v in checks.items() if not v]
    print(f"{'PASS' if ok else 'FAIL'}  {label}  "
          f"({len(checks)} checks, {elapsed:.1f}s)"
          + (f"  failing: {bad}" if bad else ""))
    assert not bad, f"{label}: failing checks {bad}"
    if budget is not None:
        assert elapsed < budget, f"{label}: {elapsed:.1f}s over budget"


def test_criterion_1_hopf_structure():
    _gate("criterion 1: Hopf axioms and closed coproduct (p=5)", 30,
          (algebra(5), suite_hopf))


def test_criterion_2_ribbon_structure():
    _gate("criterion 2: R-matrix, monodromy and ribbon (p=3)", 120,
          (algebra(2), suite_ribbon), (algebra(3), suite_ribbon))


def test_criterion_3_center_and_gta():
    _gate("criterion 3: center and GTA basis with full table (p=4)", 60,
          (algebra(4), suite_center), (algebra(4), suite_gta))


def test_criterion_4_drinfeld_map():
    _gate("criterion 4: Drinfeld map on symmetric forms (p<=4)", None,
          (algebra(2), suite_drinfeld), (algebra(3), suite_drinfeld),
          (algebra(4), suite_drinfeld))


def test_criterion_5_handle_algebra():
    _gate("criterion 5: handle algebra relations and faithfulness", None,
          (algebra(2), suite_handle), (algebra(3), suite_handle),
          (algebra(2), suite_wilson), (algebra(3), suite_wilson))


def test_criterion_6_modular_action():
    _gate("criterion 6: projective SL2(Z) action on SLF", None,
          (algebra(2), suite_sl2z), (algebra(3), suite_sl2z),
          (algebra(4), suite_sl2z), (algebra(5), suite_sl2z),
          (algebra(2), suite_lm), (algebra(3), suite_lm))


def test_criterion_7_skein_representation():
    _gate("criterion 7: skein representation of the torus", None,
          (algebra(2), suite_skein), (algebra(3), suite_skein))


def test_criterion_8_genus_two():
    _gate("criterion 8: genus-two presentation and twists (p=2)", 600,
          (algebra(2), suite_genus2))
