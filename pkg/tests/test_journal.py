"""Tests for the sweep journal."""

from chordcert.journal import SweepJournal


def test_journal_round_trip(tmp_path):
    """Entries come back in order, each with an action and a timestamp."""
    journal = SweepJournal(str(tmp_path / "logs" / "sweep.jsonl"))
    assert journal.read_entries() == []

    journal.log_sweep_start(["p=2"], "abc")
    journal.log_curve_done("p=2", "0,0,1,0,0", 27, {"obvious:case1": 27})
    journal.log_failure("p=2", "0,0,1,0,0", "AxiomFailure", {"witness": "(0,0)"})
    journal.log_sweep_finish(1, 27, 1)

    entries = journal.read_entries()
    actions = [e["action"] for e in entries]
    assert actions == ["sweep_start", "curve_done", "failure", "sweep_finish"]
    assert all("timestamp" in e for e in entries)
    assert entries[0]["config_hash"] == "abc"
    assert entries[1]["paths"] == {"obvious:case1": 27}
    assert entries[2]["details"] == {"witness": "(0,0)"}
    assert entries[3]["failures"] == 1
