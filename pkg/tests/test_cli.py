import json

from ffec.cli import build_parser, config_from_args, main, run, RunConfig


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_mod_83(capsys):
    code, out, _ = run_cli(capsys, "--paper-curve", "-p", "83", "--paper-table")
    assert code == 0
    assert "2(t) + (t+2) + (1/t)" in out
    assert "1/1 primes fully certified" in out


def test_json_reports_small_range(capsys):
    code, out, _ = run_cli(capsys, "--paper-curve", "--primes", "2..13", "--format", "json")
    assert code == 0
    docs = json.loads(out)
    assert [d["prime"] for d in docs] == [2, 3, 5, 7, 11, 13]
    assert all(d["sha"] == 1 for d in docs)
    assert all(d["conductor"]["degree"] == 4 for d in docs)


def test_json_byte_identical_across_runs_and_jobs(capsys):
    _, out1, _ = run_cli(capsys, "--paper-curve", "--primes", "2..11", "--format", "json")
    _, out2, _ = run_cli(capsys, "--paper-curve", "--primes", "2..11", "--format", "json")
    assert out1 == out2
    _, out3, _ = run_cli(capsys, "--paper-curve", "--primes", "2..11", "--format", "json", "--jobs", "3")
    assert out1 == out3


def test_exemption_for_47(capsys):
    code, out, _ = run_cli(capsys, "--paper-curve", "-p", "47", "--paper-table")
    assert code == 0
    assert "rank externally certified" in out


def test_custom_constant_curve(capsys):
    code, out, _ = run_cli(
        capsys, "-p", "5", "--a1", "0", "--a2", "0", "--a3", "0", "--a4", "0", "--a6", "1"
    )
    assert code == 0
    assert "isotrivial" in out
    assert "good reduction everywhere" in out


def test_parse_errors_exit_2(capsys):
    assert run_cli(capsys, "--paper-curve", "-p", "6")[0] == 2
    assert run_cli(capsys, "--paper-curve", "-p", "10007")[0] == 2
    assert run_cli(capsys, "-p", "5", "--a1", "t")[0] == 2  # missing coefficients
    assert run_cli(capsys, "--paper-curve", "--primes", "10..2")[0] == 2
    assert run_cli(capsys, "-p", "5", "--a1", "t^^", "--a2", "0", "--a3", "0", "--a4", "0", "--a6", "1")[0] == 2
    assert run_cli(capsys, "--paper-curve", "--a1", "t", "--a2", "0", "--a3", "0", "--a4", "0", "--a6", "1", "-p", "5")[0] == 2


def test_singular_curve_exit_2(capsys):
    code, _, err = run_cli(capsys, "-p", "5", "--a1", "0", "--a2", "0", "--a3", "0", "--a4", "0", "--a6", "0")
    assert code == 2
    assert "singular" in err.lower()


def test_config_range_parsing():
    parser = build_parser()
    args = parser.parse_args(["--paper-curve", "--primes", "2..13", "-p", "29"])
    config = config_from_args(args)
    assert config.primes == (2, 3, 5, 7, 11, 13, 29)
    assert config.curve is None


def test_run_config_direct_text(capsys):
    config = RunConfig(primes=(2,), curve=None, fmt="text")
    assert run(config) == 0
    out = capsys.readouterr().out
    assert "conductor = 3(t) + (t+1)" in out


def test_full_sweep_to_100(capsys):
    code, out, _ = run_cli(capsys, "--paper-curve", "--primes", "2..100", "--format", "json")
    assert code == 0
    docs = json.loads(out)
    assert len(docs) == 25
    for d in docs:
        assert d["conductor"]["degree"] == 4
        if d["prime"] != 47:
            assert d["sha"] == 1 and d["rank_geom"] == 0 and d["torsion"] == 1
