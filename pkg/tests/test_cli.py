import json
import os
import subprocess
import sys

CLI = [sys.executable, "-m", "floorfull"]


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        CLI + list(args), capture_output=True, env=env, timeout=120
    )


def run_json(*args, **kwargs):
    proc = run_cli(*args, **kwargs)
    assert proc.returncode == 0, proc.stderr.decode()
    return json.loads(proc.stdout)


def test_theorem1_construct_case_i():
    payload = run_json("theorem1", "construct", "--r", "2", "--ell", "2")
    assert payload["result"] == {"r": 2, "ell": 2, "case": "I", "k": 10, "witness": {}}


def test_config_header_reports_defaults():
    payload = run_json("theorem1", "construct", "--r", "2", "--ell", "2")
    config = payload["config"]
    assert config["K"] == 300
    assert config["M"] == 60
    assert config["s_max"] == 10_000
    assert config["j_max"] == 20
    assert config["seed"] == 0


def test_thm2_verify_passes_and_fails_by_exit_code():
    proc = run_cli("thm2", "verify", "--gamma", "3/2", "--j", "3", "--K", "50")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["result"]["overall"] is True

    proc = run_cli("thm2", "verify", "--gamma", "3/2", "--j", "1", "--K", "50")
    assert proc.returncode == 1
    assert b"verification failed" in proc.stdout
    # the failing report still comes out, rows included
    first_line = proc.stdout.decode().splitlines()[0]
    report = json.loads(first_line)
    assert report["result"]["overall"] is False
    assert any(not row["passed"] for row in report["result"]["rows"])


def test_usage_error_exits_2():
    proc = run_cli("thm2", "verify", "--j", "3")  # missing --gamma
    assert proc.returncode == 2

    proc = run_cli("no-such-command")
    assert proc.returncode == 2


def test_config_error_names_cap():
    proc = run_cli(
        "sieve", "--limit", "10000", "--r", "2",
        env_extra={"FLOORFULL_SIEVE_CAP": "1000"},
    )
    assert proc.returncode == 2
    assert b"cap" in proc.stderr


def test_gamma_domain_error_exits_2():
    proc = run_cli("thm2", "symbolic", "--gamma", "7/5", "--j", "3")
    assert proc.returncode == 2


def test_byte_identical_reruns():
    args = ("thm2", "verify", "--gamma", "3/2", "--j", "3", "--K", "40")
    assert run_cli(*args).stdout == run_cli(*args).stdout


def test_grid_output_independent_of_jobs():
    base = (
        "theorem1", "grid", "--r-min", "2", "--r-max", "3",
        "--ell-min", "2", "--ell-max", "8", "--max-m", "10",
    )
    single = run_cli(*base, "--jobs", "1")
    double = run_cli(*base, "--jobs", "2")
    assert single.returncode == double.returncode == 0
    assert single.stdout == double.stdout
    payload = json.loads(single.stdout)
    assert payload["result"]["all_passed"] is True


def test_seq_gen_csv_one_integer_per_row():
    proc = run_cli("seq", "gen", "--kind", "pow32", "--n", "10", "--format", "csv")
    assert proc.returncode == 0
    lines = proc.stdout.decode().splitlines()
    assert lines[0].startswith("# ")
    assert lines[1:] == ["1", "2", "3", "5", "7", "11", "17", "25", "38", "57"]


def test_seq_salpha_decimal_alpha_is_exact():
    a = run_cli("seq", "salpha", "--alpha", "0.3", "--n", "8")
    b = run_cli("seq", "salpha", "--alpha", "3/10", "--n", "8")
    assert a.stdout == b.stdout
    assert json.loads(a.stdout)["result"]["alpha"] == "3/10"


def test_seq_preimage_interval_json():
    payload = run_json("seq", "preimage", "--t", "8", "--s", "17")
    assert payload["result"] == {"lo": "8/17", "hi": "9/17", "closed_open": True}


def test_seq_ratio():
    payload = run_json("seq", "ratio", "--kind", "squares", "--n", "50")
    assert payload["result"]["violations"] == [1, 2]


def test_classify_subcommand():
    payload = run_json("classify", "--n", "72", "--r", "2")
    assert payload["result"]["factorization"] == [[2, 3], [3, 2]]
    assert payload["result"]["is_r_full"] is True
    assert payload["result"]["is_r_free"] is False


def test_sieve_methods_agree():
    spf = run_json("sieve", "--limit", "500", "--r", "2")
    a2b3 = run_json("sieve", "--limit", "500", "--r", "2", "--method", "a2b3")
    assert spf["result"]["values"] == a2b3["result"]["values"]
    proc = run_cli("sieve", "--limit", "500", "--r", "3", "--method", "a2b3")
    assert proc.returncode == 2  # a2b3 route only enumerates square-full


def test_series_payload_shape():
    payload = run_json(
        "series", "--kind", "squarefree", "--ell", "2", "--terms", "5", "--digits", "12"
    )
    assert set(payload["result"]) == {"base", "digits", "partial_sum"}
    assert payload["result"]["base"] == 2
    assert len(payload["result"]["digits"]) == 12


def test_theorem1_certificate_file_pipeline(tmp_path):
    payload = run_json("theorem1", "construct", "--r", "2", "--ell", "15")
    cert_file = tmp_path / "cert.json"
    cert_file.write_text(json.dumps(payload["result"]))

    ok = run_json("theorem1", "validate", "--cert", str(cert_file))
    assert ok["result"]["ok"] is True

    verified = run_json("theorem1", "verify", "--cert", str(cert_file), "--max-m", "25")
    assert verified["result"]["all_passed"] is True
    assert len(verified["result"]["lines"]) == 25

    # tamper with the shift and the validator must reject with exit 1
    broken = dict(payload["result"])
    broken["k"] = broken["k"] + 1
    cert_file.write_text(json.dumps(broken))
    proc = run_cli("theorem1", "validate", "--cert", str(cert_file))
    assert proc.returncode == 1
    assert b"k_formula_mismatch" in proc.stdout


def test_thm2_gamma_search():
    payload = run_json("thm2", "gamma-search", "--gamma", "8/5")
    assert payload["result"]["j"] == 3


def test_thm2_scan_empty_for_baseline_pair():
    payload = run_json("thm2", "scan", "--t1", "8", "--t2", "16", "--n", "80")
    assert payload["result"]["empty"] is True
    assert payload["result"]["intervals"] == []


def test_pset_cli_round_trip(tmp_path):
    terms = tmp_path / "terms.txt"
    terms.write_text("2\n3\n")
    payload = run_json("pset", "compute", "--terms", str(terms), "--bound", "10")
    assert payload["result"] == {"bound": 10, "runs": [[0, 1], [2, 2], [5, 1]]}

    bit_out = tmp_path / "bitmap.bin"
    run_json(
        "pset", "compute", "--terms", str(terms), "--bound", "10",
        "--bit-out", str(bit_out),
    )
    blob = bit_out.read_bytes()
    assert int.from_bytes(blob[:8], "little") == 11

    payload = run_json("pset", "complete", "--terms", str(terms), "--bound", "10")
    assert payload["result"]["covered"] is False

    payload = run_json("pset", "brown", "--terms", str(terms))
    assert payload["result"]["brown"] is False


def test_pset_witness():
    payload = run_json("pset", "witness", "--m", "2")
    assert payload["result"]["alpha"] == "1/20"
    assert [line["n_i"] for line in payload["result"]["lines"]] == [5, 7, 9]


def test_table_format_has_header_and_rows():
    proc = run_cli(
        "thm2", "verify", "--gamma", "3/2", "--j", "3", "--K", "12",
        "--format", "table",
    )
    assert proc.returncode == 0
    text = proc.stdout.decode()
    assert text.startswith("# ")
    assert "K=300" not in text  # header reflects the effective K
    assert "K=12" in text
    assert "max_floor_next" in text


def test_missing_terms_file_is_config_error():
    proc = run_cli("pset", "compute", "--terms", "/nonexistent", "--bound", "10")
    assert proc.returncode == 2


def test_closed_pipe_does_not_traceback():
    command = " ".join(CLI) + " thm2 verify --gamma 3/2 --j 3 --K 300 --format table | head -3"
    proc = subprocess.run(
        ["sh", "-c", command], capture_output=True, timeout=120
    )
    assert proc.returncode == 0  # head's status
    assert b"Traceback" not in proc.stderr
    assert len(proc.stdout.splitlines()) == 3
