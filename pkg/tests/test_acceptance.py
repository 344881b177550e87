"""One test per acceptance criterion; each prints a PASS/FAIL line with its runtime budget."""

import time

import pytest

from linecong.report import CHECKS, sub_seed

BUDGET_S = {1: 1, 2: 6 * 60, 3: 60, 4: 2 * 5 * 60, 5: 5 * 60, 6: 10 * 60, 7: 5 * 60, 8: 10 * 60,
            9: 2 * 60, 10: 60, 11: 10 * 60, 12: 60, 13: 5 * 60, 14: 15 * 60, 15: 1, 16: 10 * 60}


def _checks_for(n):
    return [c for c in CHECKS if c.criterion == n]


@pytest.mark.parametrize("criterion", sorted(BUDGET_S))
def test_criterion(criterion, workspace, acceptance_log):
    checks = _checks_for(criterion)
    assert checks, f"no certificate registered for criterion {criterion}"
    start = time.perf_counter()
    outcomes = [(c, c.run(workspace, sub_seed(workspace.seed, c.id))) for c in checks]
    elapsed = time.perf_counter() - start
    ok = all(o.ok for _, o in outcomes)
    in_budget = elapsed <= BUDGET_S[criterion]
    status = "PASS" if ok and in_budget else "FAIL"
    ids = ",".join(c.id for c in checks)
    line = f"criterion {criterion:2d} {status} [{ids}] {elapsed:.1f}s (budget {BUDGET_S[criterion]}s)"
    print(line)
    acceptance_log.append(line)
    for c, o in outcomes:
        assert o.ok, f"{c.id}: expected {o.expected}, computed {o.computed}"
    assert in_budget, f"criterion {criterion} took {elapsed:.1f}s"
