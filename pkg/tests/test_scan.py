"""Range scanning: chunked execution, worker-count independence,
checkpoint/resume, the prime survey, and the reference tables."""

from __future__ import annotations

import json

import pytest

from conftest import load_data
from monomod.classify import omega_count, predict_quasi
from monomod.modring import ResidueRing
from monomod.scan import (
    CheckpointError,
    ScanJob,
    checkpoint_resume,
    emit_appendix,
    rows_to_csv,
    run_scan,
    scan_class,
    scan_conjecture,
    scan_conjecture_checked,
    semi_family,
)
from monomod._numbers import euler_phi


def test_scan_job_validates_fields():
    with pytest.raises(ValueError):
        ScanJob(kind="quasi", lo=1, hi=10)
    with pytest.raises(ValueError):
        ScanJob(kind="quasi", lo=10, hi=9)
    with pytest.raises(ValueError):
        ScanJob(kind="quasi", lo=2, hi=10, chunk=0)
    with pytest.raises(ValueError):
        ScanJob(kind="quasi", lo=2, hi=10, workers=0)
    with pytest.raises(ValueError):
        ScanJob(kind="sideways", lo=2, hi=10)


def test_run_scan_rejects_non_range_kinds():
    with pytest.raises(ValueError):
        run_scan(ScanJob(kind="conjecture", lo=2, hi=10))
    with pytest.raises(ValueError):
        scan_class("omega", 2, 10)


def test_scan_rows_are_ordered_and_anomaly_free():
    result = scan_class("quasi", 2, 120)
    assert [row["N"] for row in result.rows] == list(range(2, 121))
    assert result.anomalies == []
    assert result.completed_to == 120
    for row in result.rows:
        assert row["verdict"] == predict_quasi(row["N"])
        if row["verdict"]:
            assert "counterexample" not in row
        else:
            assert set(row["counterexample"]) == {"k", "x", "len"}


def test_semi_scan_skips_odd_moduli_by_default():
    even_only = run_scan(ScanJob(kind="semi", lo=4, hi=40))
    assert all(row["N"] % 2 == 0 for row in even_only.rows)
    with_odd = run_scan(ScanJob(kind="semi", lo=4, hi=40, include_odd=True))
    assert [row["N"] for row in with_odd.rows] == list(range(4, 41))
    evens = [row for row in with_odd.rows if row["N"] % 2 == 0]
    assert evens == even_only.rows


def test_omega_scan_rows():
    result = run_scan(ScanJob(kind="omega", lo=2, hi=20))
    for row in result.rows:
        ring = ResidueRing(row["N"])
        assert row["phi"] == euler_phi(row["N"])
        assert row["omega"] == omega_count(ring)


def test_worker_count_does_not_change_output():
    single = run_scan(ScanJob(kind="quasi", lo=2, hi=120, chunk=8, workers=1))
    pooled = run_scan(ScanJob(kind="quasi", lo=2, hi=120, chunk=8, workers=3))
    assert json.dumps(single.rows) == json.dumps(pooled.rows)
    assert single.anomalies == pooled.anomalies


def test_worker_env_cap_rejects_garbage(monkeypatch):
    monkeypatch.setenv("MONOMOD_MAX_WORKERS", "three")
    with pytest.raises(ValueError, match="MONOMOD_MAX_WORKERS"):
        run_scan(ScanJob(kind="quasi", lo=2, hi=20, workers=2))


def test_worker_env_cap_limits_pool(monkeypatch):
    monkeypatch.setenv("MONOMOD_MAX_WORKERS", "1")
    capped = run_scan(ScanJob(kind="quasi", lo=2, hi=60, workers=8))
    plain = run_scan(ScanJob(kind="quasi", lo=2, hi=60, workers=1))
    assert capped.rows == plain.rows


def test_streaming_callback_sees_every_row_in_order():
    streamed: list[dict] = []
    result = run_scan(
        ScanJob(kind="monomial", lo=2, hi=50, chunk=7), on_rows=streamed.extend
    )
    assert streamed == result.rows


def test_checkpoint_resume_round_trip(tmp_path):
    path = str(tmp_path / "scan.ckpt")
    job = ScanJob(kind="quasi", lo=2, hi=90, chunk=10, checkpoint=path)
    full = run_scan(ScanJob(kind="quasi", lo=2, hi=90, chunk=10))

    partial = run_scan(job, max_chunks=3)
    assert partial.completed_to == 31  # 3 chunks of 10 from lo=2
    records = [json.loads(line) for line in open(path)]
    assert len(records) == 3
    assert records[-1]["completed_to"] == 31

    resumed = run_scan(job)
    assert resumed.completed_to == 90
    assert json.dumps(partial.rows + resumed.rows) == json.dumps(full.rows)
    # a further run has nothing left to do
    idle = run_scan(job)
    assert idle.rows == [] and idle.completed_to == 90


def test_checkpoint_resume_reconstructs_job(tmp_path):
    path = str(tmp_path / "scan.ckpt")
    with open(path, "w") as fh:
        fh.write(
            json.dumps(
                {"job": "quasi", "lo": 2, "hi": 1000, "completed_to": 500, "anomalies": []}
            )
            + "\n"
        )
    job = checkpoint_resume(path)
    assert (job.kind, job.lo, job.hi, job.checkpoint) == ("quasi", 2, 1000, path)
    # running the reconstructed job picks up at 501
    resumed = run_scan(job, max_chunks=1)
    assert [row["N"] for row in resumed.rows] == list(range(501, 501 + job.chunk))
    fresh = run_scan(ScanJob(kind="quasi", lo=501, hi=500 + job.chunk))
    assert resumed.rows == fresh.rows


def test_fresh_checkpoint_starts_at_lo(tmp_path):
    path = str(tmp_path / "fresh.ckpt")
    result = run_scan(ScanJob(kind="monomial", lo=5, hi=20, checkpoint=path))
    assert result.rows[0]["N"] == 5
    assert checkpoint_resume(path).lo == 5


def test_corrupt_checkpoint_names_the_line(tmp_path):
    path = str(tmp_path / "bad.ckpt")
    good = {"job": "quasi", "lo": 2, "hi": 50, "completed_to": 10, "anomalies": []}
    with open(path, "w") as fh:
        fh.write(json.dumps(good) + "\n")
        fh.write("{truncated\n")
    with pytest.raises(CheckpointError, match="line 2"):
        run_scan(ScanJob(kind="quasi", lo=2, hi=50, checkpoint=path))
    with open(path, "w") as fh:
        fh.write(json.dumps({"job": "quasi", "lo": 2}) + "\n")
    with pytest.raises(CheckpointError, match="line 1"):
        checkpoint_resume(path)


def test_checkpoint_for_different_job_is_rejected(tmp_path):
    path = str(tmp_path / "scan.ckpt")
    run_scan(ScanJob(kind="quasi", lo=2, hi=40, checkpoint=path), max_chunks=1)
    with pytest.raises(CheckpointError, match="describes job"):
        run_scan(ScanJob(kind="monomial", lo=2, hi=40, checkpoint=path))
    with pytest.raises(CheckpointError):
        run_scan(ScanJob(kind="quasi", lo=2, hi=99, checkpoint=path))


def test_empty_checkpoint_file_errors_on_resume(tmp_path):
    path = tmp_path / "empty.ckpt"
    path.touch()
    with pytest.raises(CheckpointError, match="no checkpoint records"):
        checkpoint_resume(str(path))


def test_conjecture_examples():
    assert scan_conjecture(10) == [3, 5, 7]
    assert scan_conjecture(200) == [3, 5, 7, 17, 31, 127]
    with pytest.raises(ValueError):
        scan_conjecture(2)


def test_conjecture_sampled_cross_check_is_clean():
    primes, anomalies = scan_conjecture_checked(2000, sample_den=3)
    assert primes == [3, 5, 7, 17, 31, 127, 257]
    assert anomalies == []


@pytest.mark.parametrize(
    "n,family",
    [
        (6, "twice_prime_power"),
        (50, "twice_prime_power"),
        (64, "twice_prime_power"),
        (48, "product_closure"),
        (2540, "product_closure"),
        (30, "product_closure"),
        (66, None),
        (44, None),
        (27, "odd_prime_power"),
        (15, None),
    ],
)
def test_semi_family_tags(n, family):
    assert semi_family(n) == family


def test_appendix_c_matches_frozen_table():
    table = emit_appendix("C")
    frozen = load_data("reducible_k")
    assert [row["N"] for row in table] == [48, 108, 192, 216, 384, 864]
    for row in table:
        assert row["reducible"] == frozen[str(row["N"])]
    with pytest.raises(ValueError):
        emit_appendix("E")


def test_rows_to_csv_flattens_structures():
    rows = [
        {"N": 10, "kind": "quasi", "verdict": True},
        {
            "N": 14,
            "kind": "quasi",
            "verdict": False,
            "counterexample": {"k": 3, "x": 7, "len": 4},
        },
        {"N": 48, "reducible": [0, 4, 12]},
    ]
    text = rows_to_csv(rows)
    lines = text.strip().splitlines()
    assert lines[0] == "N,kind,verdict,k,x,len,reducible"
    assert lines[2] == "14,quasi,False,3,7,4,"
    assert lines[3].endswith('"0 4 12"') or lines[3].endswith("0 4 12")
