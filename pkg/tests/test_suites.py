"""Suite runner reports (the heavy scan suite is exercised in the
acceptance tests)."""

import pytest

from freehopf import run_suite
from freehopf.suites import SUITE_NAMES


def _check_shape(report, name):
    assert report["suite"] == name
    assert isinstance(report["config"], dict)
    for case in report["cases"]:
        assert {"name", "expected", "actual", "pass"} <= set(case)
    assert report["pass"] == all(c["pass"] for c in report["cases"])


def test_suite_names_frozen():
    assert SUITE_NAMES == ("axioms", "confluence", "examples", "lemma-grid",
                           "primitives", "scan-gf2")
    with pytest.raises(ValueError):
        run_suite("nope")


def test_axioms_suite():
    report = run_suite("axioms", n=2, variant="ord:1", field="f2", maxlen=2)
    _check_shape(report, "axioms")
    assert report["pass"]
    assert any(c["name"] == "residual_coassociativity" for c in report["cases"])


def test_confluence_suite():
    report = run_suite("confluence", n=2, variant="ord:1")
    _check_shape(report, "confluence")
    assert report["pass"]


def test_examples_suite():
    report = run_suite("examples")
    _check_shape(report, "examples")
    assert report["pass"]
    assert len(report["cases"]) == 10


def test_primitives_suite():
    report = run_suite("primitives")
    _check_shape(report, "primitives")
    assert report["pass"]
    assert len(report["cases"]) == 6


def test_lemma_grid_suite():
    report = run_suite("lemma-grid")
    _check_shape(report, "lemma-grid")
    assert report["pass"]
    # 2 free configs over 3 levels, 1 + 3 modular configs over 2/4 levels
    expected_cases = 2 * (9 + 27) + (4 + 8) + 3 * (16 + 64)
    assert len(report["cases"]) == expected_cases
