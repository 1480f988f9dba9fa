import subprocess
import sys

import pytest

from permdec import CycleEqOf, Modulo, even_zigzag
from permdec.serialize import dump


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "permdec.cli", *args],
        capture_output=True, text=True)


@pytest.fixture(scope="module")
def fixtures(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    paths = {
        "g": str(d / "g.json"),
        "parity": str(d / "parity.json"),
        "cycles": str(d / "g-cycles.json"),
    }
    dump(even_zigzag(), paths["g"])
    dump(Modulo(2), paths["parity"])
    dump(CycleEqOf(even_zigzag(), "one_infinite"), paths["cycles"])
    paths["dir"] = str(d)
    return paths


def test_eval(fixtures):
    r = run_cli("eval", fixtures["g"], "2")
    assert r.returncode == 0 and r.stdout == "0\n"
    r = run_cli("eval", fixtures["g"], "0", "--inv")
    assert r.returncode == 0 and r.stdout == "2\n"


def test_orbit(fixtures):
    r = run_cli("orbit", fixtures["g"], "0", "--steps", "5")
    assert r.returncode == 0
    assert r.stdout == "0\t0\n-1\t2\n1\t4\n-2\t6\n2\t8\n"


def test_decide(fixtures):
    r = run_cli("decide", fixtures["parity"], "4", "7")
    assert r.returncode == 0 and r.stdout == "false\n"
    r = run_cli("decide", fixtures["cycles"], "0", "8")
    assert r.returncode == 0 and r.stdout == "true\n"


def test_normalize_roundtrip(fixtures):
    out = fixtures["dir"] + "/normal.json"
    r = run_cli("normalize", fixtures["g"], "--witness", fixtures["cycles"],
                "-o", out)
    assert r.returncode == 0
    r2 = run_cli("eval", out, "6")
    assert r2.returncode == 0 and r2.stdout == "2\n"


def test_dot_output_and_stability(fixtures):
    r1 = run_cli("dot", fixtures["g"], "--window", "8")
    r2 = run_cli("dot", fixtures["g"], "--window", "8")
    assert r1.returncode == 0
    assert r1.stdout == r2.stdout
    assert r1.stdout.startswith("digraph permutation {\n")
    assert '  "2" -> "0";\n' in r1.stdout
    assert '"…"' in r1.stdout  # 6 maps to 10, outside the window
    assert r1.stdout.rstrip("\n").endswith("}")


def test_gadget_modes_exit_clean():
    for mode in ("halting", "oddlength", "interred-cd2cf",
                 "interred-cf2cd", "conjreduction"):
        r = run_cli("gadget", mode)
        assert r.returncode == 0, (mode, r.stderr)
        assert r.stdout


def test_selfcheck_core_suite():
    r = run_cli("selfcheck", "--suite", "core")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert all(l.startswith("PASS\t") for l in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_malformed_input_exit_code(fixtures, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ nope")
    r = run_cli("eval", str(bad), "0")
    assert r.returncode == 1
    r = run_cli("eval", fixtures["g"], "-3")
    assert r.returncode == 1
    r = run_cli("eval", "/no/such/file.json", "0")
    assert r.returncode == 1
    r = run_cli("no-such-command")
    assert r.returncode == 1


def test_fuel_exhaustion_exit_code(fixtures):
    r = run_cli("decide", fixtures["cycles"], "0", "200", "--fuel", "5")
    assert r.returncode == 3
