"""The eleven acceptance criteria, each at its stated tolerance.

Every criterion prints one ``[PASS]``/``[FAIL]`` line; the lines are also
collected and repeated in the pytest terminal summary (see ``conftest.py``).
Run directly with ``python3 tests/test_acceptance.py`` for the lines alone.
"""

from __future__ import annotations

import sys

import pytest

from unihyper.suites import SUITES, run_suite

#: criterion name -> summary line, filled as the tests run
RESULTS: dict[str, str] = {}


@pytest.mark.parametrize("name", list(SUITES))
def test_acceptance_criterion(name):
    result = run_suite(name, seed=0)
    RESULTS[name] = result.summary()
    print(result.summary())
    for line in result.notes:
        print(f"    note: {line}")
    assert result.passed, "\n".join(f"{c.label}: {c.value:.3e} vs {c.tol:.0e}" for c in result.failures())


def main() -> int:
    ok = True
    for name in SUITES:
        result = run_suite(name, seed=0)
        print(result.summary(), flush=True)
        ok &= result.passed
    print("ALL PASS" if ok else "SOME CRITERIA FAILED")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
