import random
import string

import pytest

from resitan import (NotRepresentable, ScanConfig, VerificationRecord,
                     emit_report, parse_report, scan, verify_cor11,
                     verify_cor12)
from resitan.harness import CHECK_NAMES, PMD_X_GRID


class TestCor11:
    def test_p31(self):
        rec = verify_cor11(31, 1)
        assert rec.status == "pass"
        assert rec.expected == "32"          # (-1)^1 * (-2)^5
        assert rec.actual == "32"

    def test_p43(self):
        rec = verify_cor11(43, 1)
        assert rec.status == "pass"
        assert rec.expected == "-128"        # (+1) * (-2)^7

    def test_a_divisible_by_p(self):
        with pytest.raises(ValueError):
            verify_cor11(31, 31)

    def test_not_representable(self):
        with pytest.raises(NotRepresentable):
            verify_cor11(7, 1)


class TestCor12:
    def test_p113(self):
        rec = verify_cor12(113, 1)
        assert rec.status == "pass"
        assert rec.expected == "-16384"      # (-1)^1 * (-2)^14

    def test_p337(self):
        rec = verify_cor12(337, 1)
        assert rec.status == "pass"
        assert rec.expected == str(2 ** 42)  # y = 2 is even

    def test_p17_not_representable(self):
        # exhaustive: 17 - 64*y^2 < 0 already for y = 1
        with pytest.raises(NotRepresentable):
            verify_cor12(17, 1)


class TestScan:
    def test_lemma21_range_all_pass(self):
        recs = scan(ScanConfig(5, 50, checks=("lemma21",)))
        assert recs and all(r.status == "pass" for r in recs)

    def test_gi_m_policy_all_on_31(self):
        recs = scan(ScanConfig(31, 31, checks=("gi",)))
        by_m = {}
        for r in recs:
            by_m.setdefault(r.m, set()).add(r.status)
        # 2 has order 5 mod 31: 2^(30/m) = 1 iff 5 | 30/m, so m in {1, 3}
        assert set(by_m) == {1, 3, 5, 15}
        assert by_m[1] == {"pass"} and by_m[3] == {"pass"}
        assert by_m[5] == {"skipped(hypothesis)"} == by_m[15]

    def test_explicit_m_policy_yields_skips_not_omissions(self):
        recs = scan(ScanConfig(13, 13, m_policy=(5,), checks=("gi",)))
        assert recs and all(r.status == "skipped(hypothesis)" for r in recs)

    def test_empty_range(self):
        assert scan(ScanConfig(24, 28)) == []

    def test_every_triple_once_per_check(self):
        cfg = ScanConfig(3, 60, a_count=3)
        recs = scan(cfg)
        keys = [(r.p, r.m, r.a, r.check) for r in recs]
        assert len(keys) == len(set(keys))
        assert keys == sorted(keys)
        # spot-check the requested grid for one prime and check
        p = 13
        a_grid = sorted({1, 2, 3} | {12})
        m_grid = [m for m in range(1, 7) if 6 % m == 0]
        want = {(p, m, a, "gi") for m in m_grid for a in a_grid}
        assert {k for k in keys if k[0] == p and k[3] == "gi"} == want
        want_pmd = {(p, 1, j, "pmd_lemma") for j in range(1, len(PMD_X_GRID) + 1)}
        assert {k for k in keys if k[0] == p and k[3] == "pmd_lemma"} == want_pmd

    def test_no_failures_in_clean_sweep(self):
        recs = scan(ScanConfig(3, 60, a_count=3))
        assert not [r for r in recs if r.status == "fail" or r.status.startswith("error(")]

    def test_elapsed_zeroed(self):
        recs = scan(ScanConfig(3, 20))
        assert all(r.elapsed_ms == 0.0 for r in recs)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            ScanConfig(2, 10)
        with pytest.raises(ValueError):
            ScanConfig(3, 10, a_count=0)
        with pytest.raises(ValueError):
            ScanConfig(3, 10, checks=("nope",))
        with pytest.raises(ValueError):
            ScanConfig(3, 10, fmt="xml")
        with pytest.raises(ValueError):
            ScanConfig(3, 10, m_policy=(0,))


def random_records(count, rng):
    statuses = ["pass", "fail", "skipped(hypothesis)", "error(boom, quoted \"txt\")"]
    alphabet = string.ascii_letters + string.digits + " ,;\"'*^+-=()"
    out = []
    for _ in range(count):
        text = lambda: "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 30)))
        out.append(VerificationRecord(
            p=rng.randrange(3, 10 ** 6), m=rng.randrange(1, 50),
            a=rng.randrange(0, 100), check=rng.choice(CHECK_NAMES),
            status=rng.choice(statuses), expected=text(), actual=text(),
            elapsed_ms=rng.random() * 1000))
    return out


class TestReports:
    def test_csv_header_only(self, tmp_path):
        path = tmp_path / "empty.csv"
        emit_report([], "csv", path)
        assert path.read_bytes() == b"p,m,a,check,status,expected,actual,elapsed_ms\r\n"

    def test_single_jsonl_record(self, tmp_path):
        import json
        rec = VerificationRecord(31, 3, 1, "gi", "pass", "-1*z^31", "-1*z^31", 1.25)
        path = tmp_path / "one.jsonl"
        emit_report([rec], "jsonl", path)
        lines = path.read_text().splitlines()
        assert len(lines) == 1
        obj = json.loads(lines[0])
        assert obj["status"] == "pass" and obj["p"] == 31
        assert list(obj) == ["p", "m", "a", "check", "status", "expected",
                             "actual", "elapsed_ms"]

    @pytest.mark.parametrize("fmt", ["jsonl", "csv"])
    def test_round_trip(self, fmt, tmp_path):
        rng = random.Random(99)
        records = random_records(100, rng)
        path = tmp_path / f"report.{fmt}"
        emit_report(records, fmt, path)
        assert parse_report(path, fmt) == records

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ValueError):
            emit_report([], "xml", tmp_path / "x")
        with pytest.raises(ValueError):
            parse_report(tmp_path / "x", "xml")


class TestDeterminism:
    @pytest.mark.parametrize("fmt", ["jsonl", "csv"])
    def test_repeated_scans_byte_identical(self, fmt, tmp_path):
        out1, out2 = tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"
        scan(ScanConfig(3, 40, out=str(out1), fmt=fmt))
        scan(ScanConfig(3, 40, out=str(out2), fmt=fmt))
        b1, b2 = out1.read_bytes(), out2.read_bytes()
        assert b1 and b1 == b2

    def test_parallel_matches_serial(self, tmp_path, monkeypatch):
        out1, out2 = tmp_path / "serial.jsonl", tmp_path / "par.jsonl"
        monkeypatch.setenv("RESITAN_THREADS", "1")
        scan(ScanConfig(3, 40, out=str(out1)))
        monkeypatch.setenv("RESITAN_THREADS", "2")
        scan(ScanConfig(3, 40, out=str(out2)))
        assert out1.read_bytes() == out2.read_bytes()
