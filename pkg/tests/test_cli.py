"""End-to-end CLI behaviour: exit codes, text output, JSON payloads.

Every command runs in-process through main(argv).  Exit code contract:
0 = predicate true / success, 1 = predicate false / not found,
2 = input error, 3 = audit found discrepancies.
"""

import json

import jsonschema
import pytest

from kconnseq import is_k_connected, parse_edge_list, read_edge_list
from kconnseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_true_predicate_exits_zero(self, capsys):
        code, out, _ = run(capsys, "check", "--seq", "2,2,2,2,2", "--k", "2")
        assert code == 0
        assert "agreement: theorem1=AGREE" in out

    def test_witness_bound_line(self, capsys):
        code, out, _ = run(capsys, "check", "--seq", "6,4,4,4,4,2,2", "--k", "2")
        assert code == 0  # existence holds; necessity does not
        assert "epsilon = 13 <= C(phi-2,2) + 2k - 1 = 13" in out

    def test_false_predicate_exits_one(self, capsys):
        code, _, _ = run(capsys, "check", "--seq", "2,2,2", "--k", "3")
        assert code == 1

    def test_ground_truth_flips_the_exit(self, capsys):
        # {3,3,1,1} passes the counting conditions but is not graphic
        code, _, _ = run(capsys, "check", "--seq", "3,3,1,1", "--k", "1")
        assert code == 0
        code, out, _ = run(
            capsys, "check", "--seq", "3,3,1,1", "--k", "1", "--ground-truth"
        )
        assert code == 1
        assert "DISAGREE" in out
        assert "warning" in out

    def test_oracle_skipped_beyond_limit(self, capsys):
        seq = ",".join(["2"] * 9)
        code, out, _ = run(capsys, "check", "--seq", seq, "--k", "2")
        assert code == 0
        assert "oracle: skipped" in out

    def test_raised_limit_revives_the_oracle(self, capsys):
        seq = ",".join(["2"] * 9)
        code, out, _ = run(
            capsys, "check", "--seq", seq, "--k", "2", "--oracle-limit", "9"
        )
        assert code == 0
        assert "oracle: skipped" not in out

    def test_ground_truth_needs_the_oracle(self, capsys):
        seq = ",".join(["2"] * 9)
        code, _, err = run(capsys, "check", "--seq", seq, "--k", "2", "--ground-truth")
        assert code == 2
        assert "error:" in err

    def test_limit_hard_cap(self, capsys):
        code, _, err = run(
            capsys, "check", "--seq", "2,2,2", "--k", "1", "--oracle-limit", "11"
        )
        assert code == 2
        assert "hard cap" in err or "10" in err

    @pytest.mark.parametrize("seq", ["", "2,x", "2,0,2", "2,-1"])
    def test_malformed_sequence(self, capsys, seq):
        code, _, err = run(capsys, "check", "--seq", seq, "--k", "1")
        assert code == 2
        assert err.startswith("error:")

    def test_k_zero_rejected(self, capsys):
        code, _, _ = run(capsys, "check", "--seq", "2,2,2", "--k", "0")
        assert code == 2

    def test_json_payload_validates(self, capsys, load_schema):
        code, out, _ = run(
            capsys, "check", "--seq", "2,2,2,2,2", "--k", "2", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload["theorem1"], load_schema("condition_report"))
        jsonschema.validate(payload["theorem2"], load_schema("condition_report"))
        jsonschema.validate(payload["oracle"], load_schema("sequence_verdict"))
        assert payload["agreement"] == {
            "theorem1_vs_exists": True,
            "theorem2_vs_all": False,
        }


class TestRealize:
    def test_exact_sequence_realization(self, capsys, tmp_path):
        out_file = tmp_path / "c5.edges"
        code, out, _ = run(
            capsys,
            "realize", "--seq", "2,2,2,2,2", "--k", "2", "--output", str(out_file),
        )
        assert code == 0
        assert "method=exact" in out
        g = read_edge_list(out_file)
        assert is_k_connected(g, 2)
        assert sorted(g.degree(v) for v in range(g.n)) == [2] * 5

    def test_exact_negative(self, capsys):
        code, out, _ = run(capsys, "realize", "--seq", "3,3,1,1", "--k", "1")
        assert code == 1
        assert "no realization exists (exact)" in out

    def test_not_found_json_shape(self, capsys):
        code, out, _ = run(
            capsys, "realize", "--seq", "1,1,1,1", "--k", "1", "--format", "json"
        )
        assert code == 1
        payload = json.loads(out)
        assert payload["found"] is False
        assert payload["method"] == "exact"

    def test_chain_mode(self, capsys):
        code, out, _ = run(
            capsys, "realize", "--n", "5", "--k", "2", "--epsilon", "7",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["method"] == "chain"
        assert payload["epsilon"] == 7
        assert [row["epsilon"] for row in payload["chain"]] == [5, 6, 7]
        g = parse_edge_list(
            "\n".join(f"{a} {b}" for a, b in payload["graph"]["edges"])
        )
        assert is_k_connected(g, 2)

    def test_chain_stuck_is_not_found(self, capsys):
        # 1-regular base on 6 vertices is disconnected: chain cannot start
        code, out, _ = run(capsys, "realize", "--n", "6", "--k", "1", "--epsilon", "10")
        assert code == 1
        assert "chain construction failed" in out

    def test_mode_flags_are_exclusive(self, capsys):
        code, _, err = run(
            capsys, "realize", "--seq", "2,2,2", "--n", "5", "--k", "1",
            "--epsilon", "5",
        )
        assert code == 2
        code, _, err = run(capsys, "realize", "--k", "1")
        assert code == 2
        code, _, err = run(capsys, "realize", "--n", "5", "--k", "1")
        assert code == 2

    def test_chain_target_out_of_range(self, capsys):
        code, _, err = run(
            capsys, "realize", "--n", "5", "--k", "2", "--epsilon", "99"
        )
        assert code == 2
        assert "outside feasible range" in err


class TestWitness:
    def test_files_and_summary(self, capsys, tmp_path, load_schema):
        code, out, _ = run(
            capsys,
            "witness", "--n", "7", "--k", "2", "--out-dir", str(tmp_path),
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, load_schema("witness_summary"))
        assert payload["epsilon"]["numerator"] == 13
        assert payload["g1"]["vertex_connectivity"] == 1
        assert payload["g2"]["vertex_connectivity"] == 2
        assert payload["g1_maximally_non_k_connected"] is True
        g1 = read_edge_list(payload["g1"]["path"])
        g2 = read_edge_list(payload["g2"]["path"])
        assert g1.edge_count == g2.edge_count == 13

    def test_disconnected_instance(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "witness", "--n", "6", "--k", "1", "--out-dir", str(tmp_path)
        )
        assert code == 0
        assert "connectivity=0" in out

    def test_explicit_paths(self, capsys, tmp_path):
        p1, p2 = tmp_path / "a.edges", tmp_path / "b.edges"
        code, _, _ = run(
            capsys,
            "witness", "--n", "6", "--k", "2", "--g1", str(p1), "--g2", str(p2),
        )
        assert code == 0
        assert p1.exists() and p2.exists()

    def test_n_too_small(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "witness", "--n", "5", "--k", "3", "--out-dir", str(tmp_path)
        )
        assert code == 2
        assert "error:" in err


class TestAudit:
    def test_discrepancies_exit_three(self, capsys):
        code, out, _ = run(capsys, "audit", "--theorem", "1", "--n", "4", "--kmax", "2")
        assert code == 3
        assert "discrepancies: 3" in out

    def test_clean_audit_exits_zero(self, capsys):
        code, out, _ = run(
            capsys, "audit", "--theorem", "corollary", "--n", "6", "--k", "2"
        )
        assert code == 0
        assert "violations: 0" in out

    def test_output_matches_the_golden_bytes(self, capsys, tmp_path, golden_dir):
        report_file = tmp_path / "t1.json"
        code, _, _ = run(
            capsys,
            "audit", "--theorem", "1", "--n", "4", "--kmax", "3",
            "--output", str(report_file),
        )
        assert code == 3
        assert report_file.read_bytes() == (
            golden_dir / "theorem1_n4_kmax3.json"
        ).read_bytes()

    def test_parallel_run_matches_the_golden_bytes(self, capsys, tmp_path, golden_dir):
        report_file = tmp_path / "t2.json"
        code, _, _ = run(
            capsys,
            "audit", "--theorem", "2", "--n", "5", "--kmax", "3",
            "--jobs", "2", "--output", str(report_file),
        )
        assert code == 3
        assert report_file.read_bytes() == (
            golden_dir / "theorem2_n5_kmax3.json"
        ).read_bytes()

    def test_no_min_degree_flag(self, capsys, tmp_path, golden_dir):
        report_file = tmp_path / "c.json"
        code, _, _ = run(
            capsys,
            "audit", "--theorem", "corollary", "--n", "5", "--k", "1",
            "--no-min-degree", "--output", str(report_file),
        )
        golden = (golden_dir / "corollary_n5_k1_all.json").read_bytes()
        assert report_file.read_bytes() == golden
        expected = 3 if json.loads(golden)["summary"]["violations"] else 0
        assert code == expected

    def test_text_mode_elides_long_entry_lists(self, capsys):
        code, out, _ = run(capsys, "audit", "--theorem", "1", "--n", "6")
        assert code == 3
        assert "more entries" in out

    def test_json_payload_validates(self, capsys, load_schema):
        code, out, _ = run(
            capsys,
            "audit", "--theorem", "2", "--n", "4", "--format", "json",
        )
        jsonschema.validate(json.loads(out), load_schema("discrepancy_report"))

    def test_oversized_n_rejected(self, capsys):
        code, _, err = run(capsys, "audit", "--theorem", "1", "--n", "11")
        assert code == 2
        assert "error:" in err

    def test_bad_flags(self, capsys):
        assert run(capsys, "audit", "--theorem", "1", "--n", "4", "--jobs", "0")[0] == 2
        assert run(capsys, "audit", "--theorem", "1", "--n", "4", "--kmax", "0")[0] == 2
        assert (

            run(capsys, "audit", "--theorem", "corollary", "--n", "4", "--k", "0")[0]
            == 2
        )


class TestConnectivity:
    def write(self, tmp_path, text):
        path = tmp_path / "g.edges"
        path.write_text(text)
        return str(path)

    def test_complete_graph(self, capsys, tmp_path):
        path = self.write(
            tmp_path, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
        )
        code, out, _ = run(capsys, "connectivity", path)
        assert code == 0
        assert "vertex connectivity: 3" in out

    def test_pair_query(self, capsys, tmp_path):
        path = self.write(tmp_path, "0 1\n1 2\n2 3\n3 0\n")
        code, out, _ = run(capsys, "connectivity", path, "--pair", "0", "2")
        assert code == 0
        assert "internally disjoint paths 0-2: 2" in out

    def test_json_shape(self, capsys, tmp_path):
        path = self.write(tmp_path, "0 1\n1 2\n")
        code, out, _ = run(capsys, "connectivity", path, "--format", "json")
        payload = json.loads(out)
        assert payload["degree_sequence"] == [2, 1, 1]
        assert payload["vertex_connectivity"] == 1
        assert payload["pair"] is None

    def test_loop_reports_line_number(self, capsys, tmp_path):
        path = self.write(tmp_path, "0 1\n3 3\n")
        code, _, err = run(capsys, "connectivity", path)
        assert code == 2
        assert "self-loop" in err and "line 2" in err

    def test_isolated_vertex_rejected(self, capsys, tmp_path):
        path = self.write(tmp_path, "# n=3\n0 1\n")
        code, _, err = run(capsys, "connectivity", path)
        assert code == 2

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "connectivity", str(tmp_path / "absent.edges"))
        assert code == 2
        assert "error:" in err


class TestParserSurface:
    @pytest.mark.parametrize(
        "cmd", ["check", "realize", "witness", "audit", "connectivity"]
    )
    def test_help_available(self, capsys, cmd):
        with pytest.raises(SystemExit) as exc:
            main([cmd, "--help"])
        assert exc.value.code == 0

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2
