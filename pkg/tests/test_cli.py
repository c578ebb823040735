import json
import shutil
import subprocess
from pathlib import Path

import pytest

from vminor.cli import run
from vminor.io import parse_certificate
from vminor.search import verify_witness

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case):
    code, out, err = run(case["argv"], case["stdin"])
    assert code == case["code"]
    assert out == (GOLDEN / f"{case['name']}.out").read_text()
    assert err == (GOLDEN / f"{case['name']}.err").read_text()


def test_printed_certificates_verify():
    for case in CASES:
        if case["code"] == 0 and (GOLDEN / f"{case['name']}.out").read_text().startswith("#"):
            cert = parse_certificate((GOLDEN / f"{case['name']}.out").read_text())
            assert verify_witness(cert), case["name"]


def test_exit_codes_cover_the_contract():
    assert {c["code"] for c in CASES} == {0, 1, 2}


def test_verify_claims_single_suite():
    code, out, _ = run(["verify-claims", "--suite", "shorten", "--suite", "fan-cycles"])
    assert code == 0 and out.count("PASS") == 2 and "2/2 suites passed" in out
    code, _, err = run(["verify-claims", "--suite", "nope"])
    assert code == 2 and "unknown suite" in err


def test_verify_claims_parallel():
    code, out, _ = run(["verify-claims", "--suite", "shorten", "--suite", "algebra", "--jobs", "2"])
    assert code == 0 and "2/2" in out


@pytest.mark.skipif(shutil.which("vminor") is None, reason="console script not installed")
def test_console_script_pipeline():
    c5 = subprocess.run(["vminor", "gen", "cycle", "5"], capture_output=True, text=True, check=True).stdout
    c3 = subprocess.run(["vminor", "gen", "cycle", "3"], capture_output=True, text=True, check=True).stdout.strip()
    r = subprocess.run(["vminor", "check", "pm", "-", c3], input=c5, capture_output=True, text=True)
    assert r.returncode == 1 and r.stdout.strip() == "none"
