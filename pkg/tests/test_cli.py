"""Command line interface: documents, exit codes, CSV output."""

import json
import math
import subprocess
import sys

import pytest

from compulse import ErrorModel, compose
from compulse.cli import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_UNSOLVABLE,
    EXIT_UNWRITABLE,
    EXIT_USAGE,
    DocumentError,
    build_document,
    document_to_sequence,
    main,
    parse_document,
    serialize_document,
)
from compulse.sequences import build

from conftest import maxdiff

PI = math.pi


def run_main(*argv):
    return main(list(argv))


class TestDocuments:
    def test_round_trip_exact(self):
        for name in ("bb1", "corpse", "sk2", "or-second-xz", "simultaneous"):
            doc = build_document(build(name, PI))
            assert parse_document(serialize_document(doc)) == doc

    def test_document_fields(self):
        doc = build_document(build("bb1", PI / 2))
        assert doc.schema_version == 1
        assert doc.convention == "chronological"
        assert doc.error_model == "ple"
        assert doc.target_theta_deg == pytest.approx(90.0)
        assert len(doc.pulses) == 4

    def test_document_to_sequence_matches_propagator(self):
        seq = build("sk2", PI)
        doc = build_document(seq)
        back = document_to_sequence(parse_document(serialize_document(doc)))
        m = ErrorModel.pulse_length(0.05)
        assert maxdiff(compose(seq.pulses, m), compose(back.pulses, m)) < 1e-9

    def test_degree_round_trip_precision(self):
        seq = build("bb1", PI)
        doc = build_document(seq)
        back = document_to_sequence(doc)
        for orig, rec in zip(seq.pulses, back.pulses):
            assert abs(math.degrees(orig.phase) - math.degrees(rec.phase)) < 1e-9

    @pytest.mark.parametrize(
        "mutation",
        [
            lambda d: d.pop("pulses"),
            lambda d: d.update(schema_version=99),
            lambda d: d.update(convention="reversed"),
            lambda d: d.update(error_model="xyz"),
            lambda d: d.update(pulses=[]),
            lambda d: d.update(pulses=[{"angle_deg": 1.0}]),
        ],
    )
    def test_malformed_documents_rejected(self, mutation):
        doc = json.loads(serialize_document(build_document(build("bb1", PI))))
        mutation(doc)
        with pytest.raises(DocumentError):
            parse_document(json.dumps(doc))

    def test_not_json(self):
        with pytest.raises(DocumentError):
            parse_document("{not json")


class TestSynth:
    def test_bb1_90(self, capsys):
        assert run_main("synth", "bb1", "--theta", "90") == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["pulses"]) == 4
        assert doc["metadata"]["phi_a"] == pytest.approx(97.1808, abs=1e-3)

    def test_corpse_180_angles(self, capsys):
        assert run_main("synth", "corpse", "--theta", "180") == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert [p["angle_deg"] for p in doc["pulses"]] == pytest.approx([420.0, 300.0, 60.0])

    def test_sk3_metadata(self, capsys):
        assert run_main("synth", "sk3") == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["pulses"]) == 24
        assert "phi3" in doc["metadata"] and "delta" in doc["metadata"]

    def test_unknown_name(self, capsys):
        assert run_main("synth", "nosuch") == EXIT_USAGE

    def test_unsolvable_theta(self, capsys):
        assert run_main("synth", "sk3", "--theta", "90") == EXIT_UNSOLVABLE
        assert run_main("synth", "bb1", "--theta", "900") == EXIT_UNSOLVABLE

    def test_write_to_file(self, tmp_path, capsys):
        out = tmp_path / "seq.json"
        assert run_main("synth", "bb1", "--out", str(out)) == EXIT_OK
        doc = parse_document(out.read_text())
        assert doc.name == "bb1"


class TestVerify:
    def test_bb1_order_three(self, capsys):
        assert run_main("verify", "bb1", "--model", "ple", "--expect-order", "3") == EXIT_OK
        out = capsys.readouterr().out
        assert "series order:    3" in out
        assert "OK" in out

    def test_simple_wrong_expectation(self, capsys):
        assert run_main("verify", "simple", "--model", "ore", "--expect-order", "2") == EXIT_MISMATCH

    def test_or_second_xz(self, capsys):
        assert run_main("verify", "or-second-xz", "--model", "ore", "--expect-order", "3") == EXIT_OK

    def test_from_file(self, tmp_path, capsys):
        out = tmp_path / "seq.json"
        assert run_main("synth", "bb1", "--out", str(out)) == EXIT_OK
        assert run_main("verify", str(out), "--expect-order", "3") == EXIT_OK

    def test_malformed_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{}")
        assert run_main("verify", str(bad), "--expect-order", "1") == EXIT_USAGE

    def test_missing_file(self, capsys):
        assert run_main("verify", "/no/such/file.json", "--expect-order", "1") == EXIT_USAGE

    def test_inconsistent_target_rejected(self, tmp_path, capsys):
        # document whose declared target does not match its pulses
        doc = json.loads(serialize_document(build_document(build("bb1", PI))))
        doc["target_theta_deg"] = 30.0
        bad = tmp_path / "bad_target.json"
        bad.write_text(json.dumps(doc))
        assert run_main("verify", str(bad), "--expect-order", "3") == EXIT_USAGE

    def test_sim_model_needs_axis(self, capsys):
        assert run_main("verify", "simultaneous", "--expect-order", "3") == EXIT_USAGE

    def test_order_alias_and_json_report(self, capsys):
        assert run_main("verify", "bb1", "--order", "3", "--json") == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["series_order"] == 3
        assert report["numeric_order"] == 3
        assert report["match"] is True
        assert run_main("verify", "bb1", "--order", "2", "--json") == EXIT_MISMATCH


class TestSweep:
    def test_bb1_point_value(self, capsys):
        assert run_main("sweep", "bb1", "--model", "ple", "--grid", "0.1:0.1:1") == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "error_value,infidelity"
        x, y = lines[1].split(",")
        assert float(x) == pytest.approx(0.1)
        assert float(y) == pytest.approx(5 * PI**6 / 1024 * 0.1**6, rel=0.1)

    def test_zero_point(self, capsys):
        assert run_main("sweep", "bb1", "--model", "ple", "--grid", "0:0:1") == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert float(lines[1].split(",")[1]) <= 1e-14

    def test_two_d_row_count(self, capsys):
        assert run_main("sweep", "simultaneous", "--grid", "0.01:0.1:3") == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "epsilon,f,infidelity"
        assert len(lines) == 1 + 3 * 3

    def test_default_grid_rows(self, capsys):
        assert run_main("sweep", "simple", "--model", "ple") == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 1 + 25

    def test_unwritable_output(self, capsys):
        code = run_main(
            "sweep", "bb1", "--model", "ple", "--out", "/nonexistent-dir/x.csv"
        )
        assert code == EXIT_UNWRITABLE

    def test_write_csv_file(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert run_main("sweep", "corpse", "--grid", "1e-3:1e-1:5", "--out", str(out)) == EXIT_OK
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "error_value,infidelity"
        assert len(lines) == 6
        values = [float(r.split(",")[1]) for r in lines[1:]]
        assert all(v >= 0.0 for v in values)
        assert values[-1] > values[0]

    def test_bad_grid(self, capsys):
        with pytest.raises(SystemExit) as err:
            run_main("sweep", "bb1", "--grid", "1:2")
        assert err.value.code == EXIT_USAGE


class TestCompare:
    def test_crossover_reported(self, capsys):
        assert (
            run_main("compare", "--variants", "bb1", "sk2rot", "--theta-range", "150:180:7")
            == EXIT_OK
        )
        out = capsys.readouterr().out
        assert out.startswith("theta_deg,bb1,sk2rot")
        assert "crossover of bb1 vs sk2rot at 168" in out

    def test_identical_variants_flagged(self, capsys):
        assert (
            run_main("compare", "--variants", "bb1,bb1", "--theta-range", "90:180:4")
            == EXIT_OK
        )
        assert "no crossover" in capsys.readouterr().out

    def test_single_variant_rejected(self, capsys):
        assert run_main("compare", "--variants", "bb1") == EXIT_USAGE

    def test_unknown_variant(self, capsys):
        assert run_main("compare", "--variants", "bb1", "nosuch") == EXIT_USAGE

    def test_ratio_recorded_for_direct_variant(self, capsys):
        # direct vs rotated second-order construction at 180 degrees: the
        # magnitudes are printed for inspection, no ranking is asserted
        assert (
            run_main("compare", "--variants", "bb1", "sk2", "--theta-range", "180:180:1")
            == EXIT_OK
        )
        row = capsys.readouterr().out.strip().splitlines()[1].split(",")
        ratio = float(row[2]) / float(row[1])
        assert ratio > 1.0


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "compulse.cli", "synth", "bb1", "--theta", "90"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        assert doc["name"] == "bb1"
