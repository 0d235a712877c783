"""One test per acceptance criterion; runtime limits are pinned where the criterion states one."""

import subprocess
import sys
import time

from coalglab import acceptance

LIMIT_1 = 300.0
LIMIT_2 = 60.0
LIMIT_8 = 300.0


def timed(fn, **kw):
    t0 = time.perf_counter()
    res = fn(**kw)
    return res, time.perf_counter() - t0


def report(res):
    return "\n".join(res.details)


def test_criterion_1_recursion_matches_oracle():
    res, secs = timed(acceptance.criterion_1)
    assert res.passed, report(res)
    assert secs < LIMIT_1, f"{secs:.1f}s"


def test_criterion_2_wedge_duality():
    res, secs = timed(acceptance.criterion_2)
    assert res.passed, report(res)
    assert secs < LIMIT_2, f"{secs:.1f}s"


def test_criterion_3_extension_inclusion():
    res = acceptance.criterion_3()
    assert res.passed, report(res)


def test_criterion_4_orthogonal_of_cf_is_annihilator():
    res = acceptance.criterion_4()
    assert res.passed, report(res)


def test_criterion_5_ext_round_trip():
    res = acceptance.criterion_5()
    assert res.passed, report(res)


def test_criterion_6_wildness_witness():
    res = acceptance.criterion_6()
    assert res.passed, report(res)


def test_criterion_7_localization():
    res = acceptance.criterion_7()
    assert res.passed, report(res)


def test_criterion_8_embedding_harness():
    res, secs = timed(acceptance.criterion_8)
    assert res.passed, report(res)
    assert secs < LIMIT_8, f"{secs:.1f}s"


def test_criterion_9_bounded_quiver_embedding():
    res = acceptance.criterion_9()
    assert res.passed, report(res)


def test_criterion_10_acceptance_report_is_deterministic(tmp_path):
    outs = []
    for run in range(2):
        path = tmp_path / f"report{run}.json"
        proc = subprocess.run([sys.executable, "-m", "coalglab.cli", "acceptance",
                               "--out", str(path)], capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert outs[0]
