import subprocess
import sys

import pytest

from snzeros.cli import parse_partition, parse_range, run


def invoke(capsys, *argv):
    status = run(list(argv))
    out = capsys.readouterr().out
    return status, out.strip()


class TestParsing:
    def test_partition(self):
        assert parse_partition("6,5,3,2,1,1").parts == (6, 5, 3, 2, 1, 1)
        assert parse_partition("").parts == ()

    def test_partition_rejects_bad_order(self):
        import argparse

        with pytest.raises(argparse.ArgumentTypeError):
            parse_partition("1,3")

    def test_range(self):
        assert parse_range("1:5") == [1, 2, 3, 4, 5]
        assert parse_range("100:400:100") == [100, 200, 300, 400]
        assert parse_range("10,20,50") == [10, 20, 50]


class TestCommands:
    def test_eval(self, capsys):
        assert invoke(capsys, "eval", "--lambda", "3,1", "--mu", "2,2") == (0, "-1")

    def test_encode(self, capsys):
        assert invoke(capsys, "encode", "--lambda", "6,5,3,2,1,1") == (0, "0b100101011010")

    def test_decode(self, capsys):
        assert invoke(capsys, "decode", "--code", "0b100101011010") == (0, "(6,5,3,2,1,1)")

    def test_pn(self, capsys):
        assert invoke(capsys, "pn", "--n", "50") == (0, "204226")

    def test_cores(self, capsys):
        assert invoke(capsys, "cores", "--n", "5", "--t", "3") == (0, "1")

    def test_count_type1(self, capsys):
        assert invoke(capsys, "count-type1", "--n", "4") == (0, "3")

    def test_classify(self, capsys):
        status, out = invoke(capsys, "classify", "--lambda", "2,2", "--mu", "4")
        assert status == 0
        assert out == "zero=1 type1=1 type2=1 evaluated=1"

    def test_scan(self, capsys):
        status, out = invoke(capsys, "scan", "--n", "4")
        assert status == 0
        header, row = out.splitlines()
        fields = row.split(",")
        assert fields[0:6] == ["4", "exact", "exact", "4", "3", "3"]

    def test_sample_is_seed_stable(self, capsys):
        _, first = invoke(capsys, "sample", "--n", "20", "--count", "3", "--seed", "9")
        _, second = invoke(capsys, "sample", "--n", "20", "--count", "3", "--seed", "9")
        assert first == second

    def test_sweep_stdout(self, capsys):
        status, out = invoke(
            capsys,
            "sweep", "--n", "5,6", "--samples", "50", "--seed", "3", "--mode", "full-eval",
        )
        assert status == 0
        lines = out.splitlines()
        assert lines[0].startswith("n,samples,mode")
        assert len(lines) == 3

    def test_sweep_out_file_and_sidecar(self, tmp_path, capsys):
        out = tmp_path / "sweep.csv"
        status, _ = invoke(
            capsys,
            "sweep", "--n", "5", "--samples", "20", "--seed", "1", "--out", str(out),
        )
        assert status == 0
        assert out.read_text().count("\n") == 2
        assert (tmp_path / "sweep.csv.meta.json").exists()

    def test_ptable_cache_flag(self, tmp_path, capsys):
        cache = tmp_path / "p.txt"
        assert invoke(capsys, "pn", "--n", "30", "--ptable", str(cache))[1] == "5604"
        assert cache.exists()
        assert invoke(capsys, "pn", "--n", "30", "--ptable", str(cache))[1] == "5604"

    def test_identical_sweeps_byte_identical(self, capsys):
        args = ["sweep", "--n", "8,9", "--samples", "100", "--seed", "11", "--mode", "full-eval"]
        _, a = invoke(capsys, *args)
        _, b = invoke(capsys, *args)
        # wall-clock column may differ; counts must not
        strip = lambda text: [",".join(l.split(",")[:-1]) for l in text.splitlines()]
        assert strip(a) == strip(b)


class TestExitCodes:
    def test_usage_error_is_1(self):
        proc = subprocess.run(
            [sys.executable, "-m", "snzeros.cli", "eval", "--lambda", "3,1"],
            capture_output=True,
        )
        assert proc.returncode == 1

    def test_resource_limit_is_2(self):
        proc = subprocess.run(
            [sys.executable, "-m", "snzeros.cli", "scan", "--n", "25"],
            capture_output=True,
        )
        assert proc.returncode == 2
        assert b"resource limit" in proc.stderr

    def test_help_exits_0(self):
        for sub in ["eval", "sweep", "scan", "sample"]:
            proc = subprocess.run(
                [sys.executable, "-m", "snzeros.cli", sub, "--help"], capture_output=True
            )
            assert proc.returncode == 0
            assert b"--" in proc.stdout
