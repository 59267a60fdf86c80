import json
import math
import subprocess
import sys

import jsonschema
import pytest

from isoperim.cli import ERROR_SCHEMA, OUTPUT_SCHEMA, main

from conftest import CE_MARGIN, THETA_3, X0_3, sign_changes


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def record_of(out: str) -> dict:
    record = json.loads(out)
    jsonschema.validate(record, OUTPUT_SCHEMA)
    return record


def walk_numbers(value):
    if isinstance(value, float):
        yield value
    elif isinstance(value, dict):
        for v in value.values():
            yield from walk_numbers(v)
    elif isinstance(value, list):
        for v in value:
            yield from walk_numbers(v)


# ------------------------------------------------------------------ perim


def test_perim_hyperbolic_counterexample_value(capsys):
    code, out, _ = run_cli(capsys, "perim", "hyperbolic", "3", "--area", "1.5707963267948966")
    assert code == 0
    record = record_of(out)
    assert record["command"] == "perim"
    assert record["results"]["perimeter"] == pytest.approx(
        3 * math.acosh(3 + 2 * math.sqrt(3)), rel=1e-12
    )
    assert record["results"]["angle"] == pytest.approx(math.pi / 6, rel=1e-12)
    assert all(math.isfinite(v) for v in walk_numbers(record))


def test_perim_euclidean_square(capsys):
    code, out, _ = run_cli(capsys, "perim", "euclidean", "4", "--area", "1")
    assert code == 0
    assert record_of(out)["results"]["perimeter"] == pytest.approx(4.0, rel=1e-12)


def test_perim_from_angle(capsys):
    code, out, _ = run_cli(capsys, "perim", "spherical", "3", "--angle", str(math.pi / 2))
    assert code == 0
    record = record_of(out)
    assert record["results"]["area"] == pytest.approx(math.pi / 2, rel=1e-12)
    assert record["results"]["perimeter"] == pytest.approx(1.5 * math.pi, rel=1e-12)


def test_perim_euclidean_angle_rejected(capsys):
    code, out, err = run_cli(capsys, "perim", "euclidean", "4", "--angle", "1.57")
    assert code == 2
    assert out == ""
    error = json.loads(err)
    jsonschema.validate(error, ERROR_SCHEMA)
    assert error["error"]["type"] == "DomainError"


def test_perim_degrees_flag(capsys):
    code1, out1, _ = run_cli(capsys, "perim", "spherical", "3", "--angle", "90", "--degrees")
    code2, out2, _ = run_cli(capsys, "perim", "spherical", "3", "--angle", str(math.pi / 2))
    assert code1 == code2 == 0
    assert out1 == out2


def test_perim_unknown_geometry(capsys):
    code, _, err = run_cli(capsys, "perim", "elliptic", "4", "--area", "1")
    assert code == 2
    assert "geometry" in json.loads(err)["error"]["message"]


# ------------------------------------------------------------------ theta


def test_theta_single(capsys):
    code, out, _ = run_cli(capsys, "theta", "3")
    assert code == 0
    record = record_of(out)
    assert record["results"]["theta"] == pytest.approx(THETA_3, rel=1e-10)
    assert record["results"]["x0"] == pytest.approx(X0_3, rel=1e-10)
    assert record["results"]["max_area"] == pytest.approx(math.pi - 3 * THETA_3, rel=1e-10)
    assert record["diagnostics"]["residual"] <= 1e-10


def test_theta_range_csv(capsys):
    code, out, _ = run_cli(capsys, "theta", "--range", "3", "50")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,theta,x0,max_area"
    assert len(lines) == 1 + 48
    for line in lines[1:]:
        n_str, theta, x0, max_area = line.split(",")
        n = int(n_str)
        assert 0.0 < float(theta) < (n - 2) * math.pi / n
        assert float(theta) < float(x0)
        assert float(max_area) == pytest.approx((n - 2) * math.pi - n * float(theta), rel=1e-12)


def test_theta_rejects_small_n(capsys):
    code, _, err = run_cli(capsys, "theta", "2")
    assert code == 2
    jsonschema.validate(json.loads(err), ERROR_SCHEMA)


def test_theta_needs_exactly_one_mode(capsys):
    assert run_cli(capsys, "theta")[0] == 2
    assert run_cli(capsys, "theta", "4", "--range", "3", "5")[0] == 2


def test_theta_single_csv_format(capsys):
    code, out, _ = run_cli(capsys, "theta", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,theta,x0,max_area"
    assert len(lines) == 2


def test_theta_range_json_format(capsys):
    code, out, _ = run_cli(capsys, "theta", "--range", "3", "5", "--format", "json")
    assert code == 0
    record = record_of(out)
    assert len(record["results"]["rows"]) == 3


# ------------------------------------------------------------------ split


def test_split_euclidean_pythagorean(capsys):
    code, out, _ = run_cli(
        capsys, "split", "euclidean", "4", "--total-area", "25", "--areas", "9,16"
    )
    assert code == 0
    record = record_of(out)
    assert record["results"]["verdict"] == "single_optimal_strict"
    assert record["results"]["part_perimeters"][0] == pytest.approx(12.0, rel=1e-12)
    assert record["results"]["part_perimeters"][1] == pytest.approx(16.0, rel=1e-12)
    assert record["results"]["single_perimeter"] == pytest.approx(20.0, rel=1e-12)


def test_split_spherical_strict(capsys):
    code, out, _ = run_cli(
        capsys,
        "split", "spherical", "3",
        "--total-area", "1.5707963",
        "--areas", "0.7853981,0.7853982",
    )
    assert code == 0
    record = record_of(out)
    assert record["results"]["verdict"] == "single_optimal_strict"


def test_split_hyperbolic_below_threshold(capsys):
    code, out, _ = run_cli(capsys, "split", "hyperbolic", "3", "--total-area", "2.8415926")
    assert code == 0
    record = record_of(out)
    assert record["results"]["verdict"] == "split_beats_single"
    assert "witness_areas" in record["results"]
    halves = record["results"]["witness_areas"]
    assert halves[0] == pytest.approx(2.8415926 / 2, rel=1e-12)


def test_split_hyperbolic_multi_part(capsys):
    code, out, _ = run_cli(
        capsys,
        "split", "hyperbolic", "3",
        "--total-area", "1.2",
        "--areas", "0.3,0.4,0.5",
    )
    assert code == 0
    record = record_of(out)
    assert record["results"]["verdict"] == "single_optimal_strict"
    assert len(record["results"]["part_perimeters"]) == 3


def test_split_sum_mismatch(capsys):
    code, _, err = run_cli(
        capsys, "split", "euclidean", "4", "--total-area", "25", "--areas", "9,15"
    )
    assert code == 2
    assert "sum" in json.loads(err)["error"]["message"]


# ------------------------------------------------------------------- scan


def test_scan_phi_single_sign_change(capsys):
    code, out, _ = run_cli(capsys, "scan", "--phi", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,value"
    assert len(lines) == 1 + 1000
    values = [float(line.split(",")[1]) for line in lines[1:]]
    assert len(sign_changes(values)) == 1


def test_scan_g_strictly_decreasing(capsys):
    code, out, _ = run_cli(capsys, "scan", "--g", "3")
    assert code == 0
    values = [float(line.split(",")[1]) for line in out.strip().splitlines()[1:]]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_scan_h_symmetric(capsys):
    c = math.pi / 3 + 0.5
    code, out, _ = run_cli(capsys, "scan", "--h", "3", str(c))
    assert code == 0
    values = [float(line.split(",")[1]) for line in out.strip().splitlines()[1:]]
    assert len(values) == 1000
    for i in range(500):
        assert values[i] == pytest.approx(values[999 - i], abs=1e-10)


def test_scan_json_format(capsys):
    code, out, _ = run_cli(capsys, "scan", "--phi", "4", "--format", "json")
    assert code == 0
    record = record_of(out)
    assert len(record["results"]["x"]) == 1000
    assert len(record["results"]["value"]) == 1000


def test_scan_mode_required(capsys):
    code, _, err = run_cli(capsys, "scan")
    assert code == 2
    code, _, err = run_cli(capsys, "scan", "--phi", "3", "--g", "4")
    assert code == 2


def test_scan_invalid_n(capsys):
    assert run_cli(capsys, "scan", "--phi", "2")[0] == 2


# --------------------------------------------------------- counterexample


def test_counterexample(capsys):
    code, out, _ = run_cli(capsys, "counterexample", "--epsilon", "0.1")
    assert code == 0
    record = record_of(out)
    assert record["results"]["margin"] == pytest.approx(CE_MARGIN, rel=1e-10)
    assert record["results"]["split_perimeter"] < record["results"]["single_perimeter"]


def test_counterexample_large_epsilon_reported(capsys):
    code, out, _ = run_cli(capsys, "counterexample", "--epsilon", "0.5")
    assert code == 0
    assert record_of(out)["results"]["margin"] < 0.0


def test_counterexample_out_of_range(capsys):
    assert run_cli(capsys, "counterexample", "--epsilon", "0.6")[0] == 2
    assert run_cli(capsys, "counterexample", "--epsilon", "-0.1")[0] == 2


# ----------------------------------------------------------- determinism


def test_repeat_invocations_byte_identical(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "theta", "7")
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_subprocess_byte_identical():
    cmd = [sys.executable, "-m", "isoperim", "scan", "--phi", "5"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.returncode == 0


def test_numbers_round_trip_through_json(capsys):
    _, out, _ = run_cli(capsys, "theta", "3")
    record = json.loads(out)
    again = json.loads(json.dumps(record))
    assert again == record
