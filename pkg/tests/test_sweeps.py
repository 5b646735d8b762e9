"""Sweep plumbing: ranges, registry dispatch, thread fan-out, failure paths."""

import json

from tmzv.cli import main
from tmzv.identities import VerifyReport
from tmzv.sweeps import (
    SWEEPS,
    indices_up_to,
    run_statement,
    sweep_alternating,
    sweep_head_tail,
    sweep_recursive,
)


class TestRanges:
    def test_recursive_default_count(self):
        # m, u, p in {1..3} and n, v in {0..3}
        assert len(sweep_recursive(3)) == 3 * 3 * 3 * 4 * 4

    def test_head_tail_default_count(self):
        # head in {2,3}, p in {1,2}, k in {0..2}, m in {0..4}
        assert len(sweep_head_tail(3)) == 2 * 2 * 3 * 5

    def test_alternating_default_range(self):
        reports = sweep_alternating(3)
        ks = {r.params["k"] for r in reports if r.statement == "alternating"}
        ps = {r.params["p"] for r in reports if r.statement == "alternating"}
        assert ks == set(range(1, 9))
        assert ps == {1, 2}

    def test_indices_enumeration_is_deterministic(self):
        first = list(indices_up_to(2, 2, include_empty=True))
        assert first == [(), (1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]


class TestRegistry:
    def test_every_statement_dispatches(self):
        for name in SWEEPS:
            if name in ("box-map", "decomposition"):
                continue  # exercised in the acceptance suite at full cutoff
            reports = run_statement(name, max_size=1, cases=5)
            assert reports and all(isinstance(r, VerifyReport) for r in reports)

    def test_numeric_cutoff_override(self):
        reports = run_statement("decomposition", cutoff=1_000)
        assert all(r.passed for r in reports)
        assert all(r.params["cutoff"] == 1_000 for r in reports)


class TestThreads:
    def test_fanout_matches_single_thread(self, monkeypatch):
        single = [r.to_json_obj() for r in sweep_recursive(2)]
        monkeypatch.setenv("TMZV_THREADS", "4")
        fanned = [r.to_json_obj() for r in sweep_recursive(2)]
        assert fanned == single


class TestFailurePaths:
    def test_verify_exit_code_on_failure(self, capsys, monkeypatch):
        import tmzv.cli as cli

        def fake_check(m, u, p, n, v):
            return VerifyReport(
                "recursive", {"m": m}, False, {"lhs": {"terms": []}, "rhs": {"terms": []}}
            )

        monkeypatch.setattr(cli, "check_recursive", fake_check)
        code = main(["verify", "recursive", "--params", "m=2,u=2,p=1,n=1,v=0"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL" in out

    def test_sweep_failure_prints_first_witness(self, capsys, monkeypatch):
        import tmzv.sweeps as sweeps

        bad = VerifyReport("factorial", {"k": 2}, False, {"lhs": "0", "rhs": "1"})
        monkeypatch.setitem(sweeps.SWEEPS, "factorial", lambda: [bad])
        code = main(["verify", "factorial"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FIRST FAILURE" in out
        assert json.loads(out.splitlines()[-1]) == {"lhs": "0", "rhs": "1"}
