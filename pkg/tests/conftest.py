import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

ACCEPTANCE_TITLES = {
    "test_c01_braiding_matrix_reproduction": "16x16 braiding matrix reproduced entry for entry (< 1 s)",
    "test_c02_not_involutive": "the matrix does not square to the identity",
    "test_c03_ybe_exact": "Yang-Baxter equation holds exactly (< 5 s)",
    "test_c04_shelf_formula_symbolic": "unital shelf coefficients match symbolically",
    "test_c05_classical_recovery": "invariants bracket returns input structure constants, tau = flip",
    "test_c06_rack_bracket_suite": "rack bracket q = p - 1 passes all checks (< 5 s)",
    "test_c07_biconditional_corpus": "check_yd iff check_ybe across the corpus (>= 10 instances, >= 2 broken)",
    "test_c08_restriction_lemma_suite": "restriction lemma parts 1-3 at degree 2; counit(phi) = 0 on invariants",
    "test_c09_ker_counit_modules": "ker(counit) is Yetter-Drinfel'd for Z/2, Z/3, S3, S4 (< 5 s)",
    "test_c10_function_dual": "pullback p* respects (co)module structure for Z/2 and S3",
}


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                results[rep.nodeid.split("::")[-1]] = status
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for idx, (name, title) in enumerate(sorted(ACCEPTANCE_TITLES.items()), start=1):
        status = results.get(name)
        if status is None:
            continue
        verdict = "PASS" if status == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {idx:2d} [{verdict}] {title}")
