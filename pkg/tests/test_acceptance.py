"""Acceptance suite: one test per criterion, each printing a pass/fail line.

The criteria live in conifold_flop.verify so the CLI ``verify-all``
subcommand runs exactly the same checks.
"""

import pytest

from conifold_flop.verify import CRITERIA


@pytest.mark.parametrize("name,check", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_criterion(name, check):
    ok, detail = check()
    print("%s criterion %s: %s" % ("PASS" if ok else "FAIL", name, detail))
    assert ok, detail


def test_verify_all_cli_exit_code(capsys):
    from conifold_flop.cli import main

    assert main(["verify-all"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == len(CRITERIA)
