import json
import math
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from trigsmooth import modulus_p2_exact, power_law_series
from trigsmooth.cli import main, parse_flat_config

REPO_ROOT = Path(__file__).resolve().parents[1]

BASE_CFG = """\
series.generator = power:2:256
series.tag = monotone
params.p = 2
params.theta = 1
params.r = 0.5
params.lambda = 0.3
params.k = 1
phi.kind = power
phi.alpha = 0.4
sweep.n_values = 2,4,8
sweep.t_values = 0.5,1.0
"""


def write_cfg(tmp_path, text, name="run.cfg"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestConfigParsing:
    def test_flat_sections_and_types(self):
        cfg = parse_flat_config("a.b = 1\na.c = 2.5,3\nd = hello  # comment\n")
        assert cfg == {"a": {"b": 1, "c": [2.5, 3]}, "d": "hello"}

    def test_flat_and_json_configs_agree(self, tmp_path):
        flat = write_cfg(tmp_path, BASE_CFG)
        as_json = {
            "series": {"generator": "power:2:256", "tag": "monotone"},
            "params": {"p": 2, "theta": 1, "r": 0.5, "lambda": 0.3, "k": 1},
            "phi": {"kind": "power", "alpha": 0.4},
            "sweep": {"n_values": [2, 4, 8], "t_values": [0.5, 1.0]},
        }
        jpath = tmp_path / "run.json"
        jpath.write_text(json.dumps(as_json))
        out_a, out_b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["best-approx", "--config", flat, "--out", str(out_a), "--quiet"]) == 0
        assert main(["best-approx", "--config", str(jpath), "--out", str(out_b), "--quiet"]) == 0
        assert out_a.read_bytes() == out_b.read_bytes()

    def test_missing_config_file_exits_2(self, capsys):
        assert main(["modulus", "--config", "/nonexistent/nope.cfg"]) == 2
        assert "not found" in capsys.readouterr().err

    def test_config_flag_required(self):
        assert main(["modulus"]) == 2

    def test_bad_params_exit_2(self, tmp_path):
        cfg = write_cfg(tmp_path, BASE_CFG.replace("params.k = 1", "params.k = 0"))
        assert main(["modulus", "--config", cfg]) == 2


class TestModulusCommand:
    def test_zero_series_gives_zero_column(self, tmp_path, capsys):
        cfg = write_cfg(tmp_path, BASE_CFG.replace(
            "series.generator = power:2:256", "series.coeffs = 0,0,0").replace(
            "series.tag = monotone", "series.tag = general"))
        out = tmp_path / "mod.csv"
        assert main(["modulus", "--config", cfg, "--out", str(out), "--quiet"]) == 0
        rows = [l for l in out.read_text().splitlines() if l and not l.startswith(("#", "t,"))]
        assert all(float(r.split(",")[1]) == 0.0 for r in rows)

    def test_cosine_fixture_matches_exact_column(self, tmp_path):
        cfg = write_cfg(tmp_path, BASE_CFG.replace(
            "series.generator = power:2:256", "series.coeffs = 1").replace(
            "series.tag = monotone", "series.tag = general"))
        out = tmp_path / "mod.csv"
        assert main(["modulus", "--config", cfg, "--out", str(out), "--quiet"]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "t,omega,omega_p2_exact"
        for line in lines[1:]:
            if line.startswith("#"):
                continue
            t, omega, exact = (float(v) for v in line.split(","))
            assert omega == pytest.approx(exact, rel=1e-9)
            assert omega == pytest.approx(modulus_p2_exact(
                power_law_series(2.0, 1, with_tail=False), 1, t), rel=1e-9)

    def test_alias_misconfiguration_exits_3(self, tmp_path):
        cfg = write_cfg(tmp_path, BASE_CFG + "sweep.grid_n = 64\n")
        assert main(["modulus", "--config", cfg]) == 3


class TestEquivalenceCommand:
    def test_tag_mismatch_exits_3(self, tmp_path, capsys):
        cfg = write_cfg(tmp_path, BASE_CFG.replace(
            "series.generator = power:2:256", "series.coeffs = 0.5,1"))
        assert main(["equivalence", "--config", cfg]) == 3
        assert "monotone" in capsys.readouterr().err

    def test_lacunary_coeff_column_equals_unreduced_sum(self, tmp_path):
        cfg = BASE_CFG.replace("series.generator = power:2:256",
                               "series.generator = lacunary_geometric:0.5:12")
        cfg = cfg.replace("series.tag = monotone", "series.tag = lacunary")
        out = tmp_path / "eq.csv"
        assert main(["equivalence", "--config", write_cfg(tmp_path, cfg),
                     "--out", str(out), "--quiet"]) == 0
        from trigsmooth import lacunary_geometric_series
        ser = lacunary_geometric_series(0.5, 12)
        coeffs = ser.coeffs
        nus = np.arange(1, coeffs.size + 1, dtype=float)
        th, r, lam = 1.0, 0.5, 0.3
        for line in out.read_text().splitlines()[1:]:
            if line.startswith("#"):
                continue
            cells = line.split(",")
            m = int(cells[0])
            got = float(cells[3])
            tail = float(np.sum(coeffs[m:] ** th * nus[m:] ** (r * th)))
            head = float(np.sum(coeffs[:m] ** th * nus[:m] ** ((r + lam) * th)))
            want = (tail + float(m) ** (-lam * th) * head) ** (1.0 / th)
            assert got == pytest.approx(want, rel=1e-12)

    def test_zero_series_gives_zero_functional_columns(self, tmp_path):
        cfg = BASE_CFG.replace("series.generator = power:2:256", "series.coeffs = 0,0")
        cfg = cfg.replace("series.tag = monotone", "series.tag = general")
        out = tmp_path / "eq.csv"
        assert main(["equivalence", "--config", write_cfg(tmp_path, cfg),
                     "--out", str(out), "--quiet"]) == 0
        for line in out.read_text().splitlines()[1:]:
            if line.startswith("#"):
                continue
            cells = line.split(",")
            assert float(cells[1]) == 0.0 and float(cells[2]) == 0.0

    def test_truncation_budget_exceeded_exits_4(self, tmp_path):
        cfg = BASE_CFG + "tolerances.truncation_budget = 1e-6\nsweep.n_values = 64,128,256\n"
        assert main(["equivalence", "--config", write_cfg(tmp_path, cfg)]) == 4

    def test_membership_summary_lines_present(self, tmp_path):
        out = tmp_path / "eq.csv"
        assert main(["equivalence", "--config", write_cfg(tmp_path, BASE_CFG),
                     "--out", str(out), "--quiet"]) == 0
        text = out.read_text()
        assert "# membership series_form vs power(0.4):" in text
        assert "# membership coeff_form vs power(0.4):" in text
        assert "# omega_path=p2_exact" in text
        # full-pipeline regression: the series/integral ratio column stays in
        # the band recorded for this fixture
        for line in text.splitlines()[1:]:
            if line.startswith("#"):
                continue
            ratio = float(line.split(",")[6])
            assert 0.95 < ratio < 1.25

    def test_max_nu_flag_controls_truncation_range(self, tmp_path):
        out = tmp_path / "eq.csv"
        assert main(["equivalence", "--config", write_cfg(tmp_path, BASE_CFG),
                     "--max-nu", "2048", "--out", str(out), "--quiet"]) == 0
        assert "nu_max=2048" in out.read_text()


class TestExampleCommand:
    def test_rows_and_verdicts(self, tmp_path):
        out = tmp_path / "ex.csv"
        assert main(["example", "--max-n", "60", "--out", str(out), "--quiet"]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "n,t1,t2,d_m,d_value"
        data = [l.split(",") for l in lines[1:] if not l.startswith("#")]
        assert len(data) == 60
        assert int(data[-1][3]) == 2 ** 60
        comments = [l for l in lines if l.startswith("#")]
        assert any("inv_log(0.5): verdict=bounded" in c for c in comments)
        assert any("constant: verdict=bounded" in c for c in comments)
        assert any("power(0.1): verdict=unbounded-trend" in c for c in comments)
        assert any("power(0.25): verdict=unbounded-trend" in c for c in comments)


class TestIneqSweep:
    SWEEP_CFG = """\
ineq.lemmas = jensen,hardy_upper,reverse_copson
ineq.families = power,random
ineq.alpha_values = 1
ineq.lambda_values = 0
ineq.p_values = 2
ineq.m_values = 2
ineq.n_values = 32,64
ineq.variants = tail,head
ineq.jensen_cases = 50
ineq.jensen_len = 16
"""

    def test_seeded_runs_are_byte_identical(self, tmp_path):
        cfg = write_cfg(tmp_path, self.SWEEP_CFG)
        out1, out2 = tmp_path / "s1.csv", tmp_path / "s2.csv"
        assert main(["ineq-sweep", "--config", cfg, "--seed", "7",
                     "--out", str(out1), "--quiet"]) == 0
        assert main(["ineq-sweep", "--config", cfg, "--seed", "7",
                     "--out", str(out2), "--quiet"]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_thread_count_does_not_change_output(self, tmp_path):
        cfg = write_cfg(tmp_path, self.SWEEP_CFG)
        out1, out8 = tmp_path / "t1.csv", tmp_path / "t8.csv"
        assert main(["ineq-sweep", "--config", cfg, "--seed", "3", "--threads", "1",
                     "--out", str(out1), "--quiet"]) == 0
        assert main(["ineq-sweep", "--config", cfg, "--seed", "3", "--threads", "8",
                     "--out", str(out8), "--quiet"]) == 0
        assert out1.read_bytes() == out8.read_bytes()

    def test_different_seed_changes_random_rows(self, tmp_path):
        cfg = write_cfg(tmp_path, self.SWEEP_CFG)
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["ineq-sweep", "--config", cfg, "--seed", "1", "--out", str(out1), "--quiet"])
        main(["ineq-sweep", "--config", cfg, "--seed", "2", "--out", str(out2), "--quiet"])
        assert out1.read_bytes() != out2.read_bytes()

    def test_gap_violations_become_skip_rows(self, tmp_path):
        cfg = write_cfg(tmp_path, self.SWEEP_CFG.replace(
            "ineq.n_values = 32,64", "ineq.n_values = 8"))
        out = tmp_path / "skip.csv"
        assert main(["ineq-sweep", "--config", cfg, "--seed", "1",
                     "--out", str(out), "--quiet"]) == 0
        lines = out.read_text().splitlines()
        copson_rows = [l for l in lines if l.startswith("reverse_copson")]
        assert copson_rows and all(",skip," in l for l in copson_rows)
        hardy_rows = [l for l in lines if l.startswith("hardy_upper")]
        assert hardy_rows and all(",ok," in l for l in hardy_rows)

    def test_jensen_rows_never_violate(self, tmp_path):
        cfg = write_cfg(tmp_path, self.SWEEP_CFG.replace(
            "ineq.jensen_cases = 50", "ineq.jensen_cases = 300"))
        out = tmp_path / "j.csv"
        main(["ineq-sweep", "--config", cfg, "--seed", "9", "--out", str(out), "--quiet"])
        jensen_rows = [l for l in out.read_text().splitlines() if l.startswith("jensen")]
        assert len(jensen_rows) == 300
        assert all(float(l.split(",")[9]) <= 1.0 + 1e-12 for l in jensen_rows)

    def test_all_numeric_cells_finite(self, tmp_path):
        cfg = write_cfg(tmp_path, self.SWEEP_CFG)
        out = tmp_path / "fin.csv"
        main(["ineq-sweep", "--config", cfg, "--seed", "5", "--out", str(out), "--quiet"])
        for line in out.read_text().splitlines()[1:]:
            if line.startswith("#"):
                continue
            for cell in line.split(","):
                try:
                    value = float(cell)
                except ValueError:
                    continue
                assert math.isfinite(value)

    def test_json_format(self, tmp_path):
        cfg = write_cfg(tmp_path, self.SWEEP_CFG)
        out = tmp_path / "sweep.json"
        assert main(["ineq-sweep", "--config", cfg, "--seed", "5", "--format", "json",
                     "--out", str(out), "--quiet"]) == 0
        doc = json.loads(out.read_text())
        assert doc["command"] == "ineq-sweep"
        assert doc["columns"][0] == "lemma_id"
        assert len(doc["rows"]) > 0


class TestPhiCheckCommand:
    def test_power_phi_report(self, tmp_path):
        out = tmp_path / "phi.csv"
        assert main(["phi-check", "--config", write_cfg(tmp_path, BASE_CFG),
                     "--out", str(out), "--quiet"]) == 0
        header, row = out.read_text().splitlines()[:2]
        assert header == "kind,alpha,c1,c2,pass"
        cells = row.split(",")
        assert cells[0] == "power" and cells[4] == "true"
        assert float(cells[3]) == pytest.approx(2 ** 0.4, abs=1e-12)


def test_module_entry_point_smoke(tmp_path):
    out = tmp_path / "smoke.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "trigsmooth.cli", "example", "--max-n", "8",
         "--out", str(out), "--quiet"],
        cwd=REPO_ROOT, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert out.exists() and out.read_text().startswith("n,t1,t2,d_m,d_value")
