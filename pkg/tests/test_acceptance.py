"""Acceptance gate: one check per top-level capability, each printing a
single PASS/FAIL line and holding a wall-clock budget."""

import subprocess
import sys
import time

import pytest

from permdec import selfcheck


def _run(name, budget, fns):
    start = time.monotonic()
    results = []
    for fn in fns:
        results.extend(fn())
    elapsed = time.monotonic() - start
    bad = [label for label, ok in results if not ok]
    status = "PASS" if not bad and elapsed < budget else "FAIL"
    print(f"{status} {name}: {len(results) - len(bad)}/{len(results)} checks, "
          f"{elapsed:.2f}s (budget {budget}s)", flush=True)
    assert not bad, f"{name} failed checks: {bad}"
    assert elapsed < budget, f"{name} exceeded {budget}s ({elapsed:.2f}s)"


def test_criterion_1_encodings_and_representations():
    _run("criterion-1 encodings/representations", 5,
         [selfcheck.criterion_core, selfcheck.criterion_representations])


def test_criterion_2_conjugators():
    _run("criterion-2 conjugators", 10, [selfcheck.criterion_conjugators])


def test_criterion_3_normalization():
    _run("criterion-3 normalization", 10, [selfcheck.criterion_normalize])


def test_criterion_4_permutability():
    _run("criterion-4 permutability", 10, [selfcheck.criterion_permutability])


def test_criterion_5_halting_fixtures():
    _run("criterion-5 halting fixtures", 5, [selfcheck.criterion_halting])


def test_criterion_6_interreductions():
    _run("criterion-6 interreductions", 10, [selfcheck.criterion_interred])


def test_criterion_7_conjugacy_reduction():
    _run("criterion-7 conjugacy reduction", 5,
         [selfcheck.criterion_conjreduction])


def test_criterion_8_transposition_products():
    _run("criterion-8 transposition products", 15,
         [selfcheck.criterion_products])


def test_criterion_9_cli_determinism(tmp_path):
    from permdec import even_zigzag, CycleEqOf
    from permdec.serialize import dump

    start = time.monotonic()
    g = str(tmp_path / "g.json")
    eq = str(tmp_path / "eq.json")
    dump(even_zigzag(), g)
    dump(CycleEqOf(even_zigzag(), "one_infinite"), eq)

    def cli(*args):
        return subprocess.run([sys.executable, "-m", "permdec.cli", *args],
                              capture_output=True, text=True)

    ok = True
    r = cli("selfcheck")
    ok &= r.returncode == 0 and r.stdout.count("FAIL") == 0
    for args in (("eval", g, "2"), ("orbit", g, "0", "--steps", "6"),
                 ("decide", eq, "0", "8"), ("dot", g, "--window", "12")):
        a, b = cli(*args), cli(*args)
        ok &= a.returncode == 0 and a.stdout == b.stdout
    elapsed = time.monotonic() - start
    status = "PASS" if ok and elapsed < 90 else "FAIL"
    print(f"{status} criterion-9 cli determinism: {elapsed:.2f}s "
          f"(budget 90s)", flush=True)
    assert ok
    assert elapsed < 90
