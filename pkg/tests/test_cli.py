"""Command-line interface: reports, exit codes, determinism, self-check battery."""
import io
import json
import os
import subprocess
import sys
from contextlib import redirect_stdout

import pytest

from torelli import checks, cli, mod2, splittings as spl
from torelli.quadratic import SpQuadraticForm


def run(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(list(argv))
    return code, buf.getvalue()


def report(*argv):
    code, out = run(*argv)
    return code, json.loads(out)


@pytest.fixture
def standard_json(tmp_path):
    path = tmp_path / "standard.json"
    path.write_text(json.dumps(spl.standard_splitting().to_json()))
    return path


class TestReports:
    def test_orbit_count(self):
        code, r = report("census", "orbit-count", "--g", "3")
        assert code == 0 and r["outputs"]["orbits"] == 36
        assert set(r) == {"command", "inputs", "outputs", "checks", "seed", "elapsed_ms"}
        assert r["command"] == "census orbit-count" and r["elapsed_ms"] is None

    def test_sp_order(self):
        assert report("census", "sp-order", "--g", "3")[1]["outputs"]["order"] == 1451520

    def test_enumerate_forms_count(self):
        code, r = report("forms", "enumerate", "--g", "3", "--arf", "0")
        assert code == 0 and r["outputs"]["count"] == 36 and len(r["outputs"]["forms"]) == 36

    def test_forms_arf_and_bc(self):
        assert report("forms", "arf")[1]["outputs"]["arf"] == 0
        assert report("forms", "bc")[1]["outputs"]["value"] == 1
        assert report("forms", "arf", "--values", "1,1,0,0,0,0")[1]["outputs"]["arf"] == 1

    def test_euclid_refined(self):
        code, r = report("euclid", "reduce", "--refined", "--matrix", "[[3,1],[2,1]]")
        assert code == 0 and r["outputs"]["verified"] is True
        assert all(e % 2 == 0 for g, e in r["outputs"]["word"] if g == "R1")

    def test_splitting_check(self, standard_json):
        code, r = report("splitting", "check", "--json", str(standard_json))
        assert code == 0 and r["outputs"] == {"orthogonal": True, "arf_pattern": [1, 0, 1], "symmetric": True}

    def test_splitting_canonical(self, standard_json):
        r = report("splitting", "canonical", "--json", str(standard_json))[1]
        assert r["outputs"]["sign"] == 1

    def test_sample_then_generic_class(self, tmp_path):
        r = report("splitting", "sample", "--n", "3", "--seed", "2")[1]
        path = tmp_path / "family.json"
        path.write_text(json.dumps(r["outputs"]))
        code, g = report("splitting", "generic-class", "--json", str(path), "--seed", "2")
        assert code == 0 and len(g["outputs"]["x"]) == 6

    def test_torus_modes(self, tmp_path):
        svg = tmp_path / "pair.svg"
        code, r = report("torus", "realize", "--class", "1,0", "--mode", "t22", "--svg", str(svg))
        assert code == 0 and len(r["outputs"]["lines"]) == 2
        assert svg.read_text().startswith("<svg")
        assert report("torus", "realize", "--class", "0,-1", "--mode", "t21")[0] == 0
        assert report("torus", "realize", "--class", "3,5", "--mode", "t1")[0] == 0

    def test_cert_find_standard(self, standard_json, tmp_path):
        out = tmp_path / "cert.json"
        code, r = report("cert", "find", "--cycles", str(standard_json), "--seed", "0", "--out", str(out))
        assert code == 0 and r["outputs"]["value_matrix"] == [[-1]]
        code, v = report("cert", "verify", str(out))
        assert code == 0 and v["outputs"]["valid"] is True

    def test_cert_find_family(self, tmp_path):
        fam = report("splitting", "sample", "--n", "3", "--seed", "0")[1]["outputs"]
        path = tmp_path / "family.json"
        path.write_text(json.dumps({"cycles": fam["family"]}))
        code, r = report("cert", "find", "--cycles", str(path), "--hints", "none")
        assert code == 0 and r["outputs"]["rank"] == 3

    def test_census_orbits(self):
        code, r = report("census", "orbits", "--g", "2")
        assert code == 0 and r["outputs"]["census"] == {"0": 10, "1": 6}

    def test_timing_fills_elapsed(self):
        assert isinstance(report("census", "sp-order", "--timing")[1]["elapsed_ms"], int)


class TestExitCodes:
    def test_usage_unknown_command(self):
        code, r = report("frobnicate")
        assert code == 2 and r["error"] == "usage"

    def test_usage_missing_flag(self):
        assert report("euclid", "reduce")[0] == 2

    def test_usage_malformed_json(self):
        assert report("euclid", "reduce", "--matrix", "[[1,0]")[0] == 2

    def test_usage_missing_file(self, tmp_path):
        assert report("cert", "verify", str(tmp_path / "nope.json"))[0] == 2

    def test_library_error_precondition(self):
        code, r = report("euclid", "reduce", "--refined", "--matrix", "[[1,0],[1,1]]")
        assert code == 3 and r["error"] == "precondition"

    def test_library_error_resource(self):
        code, r = report("census", "enumerate", "--g", "5")
        assert code == 3 and r["error"] == "resource"

    def test_library_error_arithmetic(self):
        with pytest.warns(UserWarning):
            code, r = report("census", "orbit-count", "--g", "1")
        assert code == 3

    def test_failed_check(self, tmp_path, standard_json):
        cert = json.loads(run("cert", "find", "--cycles", str(standard_json))[1])["outputs"]
        cert["value_matrix"][0][0] = 1
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(cert))
        code, r = report("cert", "verify", str(path))
        assert code == 1 and r["outputs"]["valid"] is False

    def test_malformed_certificate(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"cycles": []}))
        assert report("cert", "verify", str(path))[0] == 2


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ("splitting", "sample", "--n", "4", "--seed", "9"),
        ("forms", "enumerate", "--g", "2"),
        ("euclid", "reduce", "--matrix", "[[7,3],[2,1]]"),
    ])
    def test_byte_identical(self, argv):
        assert run(*argv) == run(*argv)

    def test_paper_check_byte_identical(self):
        assert run("paper-check", "--seed", "0") == run("paper-check", "--seed", "0")

    def test_subprocess_byte_identical(self):
        argv = [sys.executable, "-m", "torelli", "splitting", "sample", "--seed", "3"]
        env = dict(os.environ)
        outs = [subprocess.run(argv, capture_output=True, env=env, check=True).stdout for _ in range(2)]
        assert outs[0] == outs[1] and json.loads(outs[0])["command"] == "splitting sample"


class TestSelfCheckCommand:
    def test_all_checks_pass(self):
        code, r = report("paper-check")
        assert code == 0
        assert r["outputs"]["passed"] == r["outputs"]["total"] == len(r["checks"])
        names = {c["name"] for c in r["checks"]}
        assert {"form-census", "orbit-count", "bc-uniqueness", "morita-pairing", "certificate-rank3"} <= names

    def test_corrupted_cache_is_regenerated(self):
        path = mod2.cache_path(3)
        mod2.enumerate_sp_mod2(3)
        data = bytearray(path.read_bytes())
        data[100] ^= 0x55
        path.write_bytes(bytes(data))
        code, r = report("paper-check")
        assert code == 0
        assert mod2.read_cache(path, 3).size == 1451520

    def test_tampered_reference_fails_named_check(self):
        tampered = SpQuadraticForm((1, 1, 1, 1, 0, 0))
        results = {r["name"]: r for r in checks.run_battery(reference=tampered)}
        assert results["bc-uniqueness"]["pass"] is False
        assert results["bc-three-term"]["pass"] is True
