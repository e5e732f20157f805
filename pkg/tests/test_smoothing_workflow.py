import math

import pytest

import arcspline.workflow.smoothing_workflow as smoothing_workflow
from arcspline.errors import ArcDomainError
from arcspline.geometry.polycurve import make_family
from arcspline.geometry.symplectic2d import Vec2
from arcspline.models.types import GssConfig, Objective
from arcspline.optimize.objectives import smooth
from arcspline.workflow.smoothing_workflow import SmoothingWorkflow

DEFAULTS = {"lo_deg": -344.0, "up_deg": 344.0, "tol_deg": 0.6, "max_iter": 200, "ei": 1.0}
ZIGZAG = [Vec2(0, 0), Vec2(2, 1), Vec2(3, 3), Vec2(5, 2), Vec2(6, 4)]


def test_rows_for_every_criterion():
    fam = make_family(ZIGZAG)
    out = SmoothingWorkflow(DEFAULTS).run(fam)

    assert [r["objective"] for r in out["rows"]] == ["length", "area", "energy"]
    assert set(out["results"]) == {"length", "area", "energy"}
    for row in out["rows"]:
        res = out["results"][row["objective"]]
        assert row["theta0"] == res.theta0
        assert row["theta0_deg"] == pytest.approx(math.degrees(res.theta0))
        assert row["length"] == res.report.length
        assert row["area"] == res.report.area
        assert row["energy"] == res.report.energy


def test_matches_direct_smoothing():
    fam = make_family(ZIGZAG)
    out = SmoothingWorkflow(DEFAULTS).run(fam, [Objective.AREA])
    direct = smooth(fam, Objective.AREA, GssConfig())
    assert out["results"]["area"].theta0 == pytest.approx(direct.theta0, abs=1e-15)
    assert len(out["rows"]) == 1


def test_metadata():
    fam = make_family(ZIGZAG)
    out = SmoothingWorkflow(DEFAULTS).run(fam)
    meta = out["metadata"]

    assert set(meta["timings"]) == {"length", "area", "energy"}
    assert all(v >= 0 for v in meta["timings"].values())
    assert meta["reductions"] == {"length": 15, "area": 15, "energy": 15}
    assert meta["evaluations"] == {"length": 30, "area": 30, "energy": 30}
    assert meta["latency_ms"] >= 0
    assert meta["segments"] == 4
    assert meta["ei"] == 1.0
    assert meta["search"]["tol"] == pytest.approx(math.radians(0.6))


def test_rigidity_scales_energy_only():
    fam = make_family(ZIGZAG)
    base = SmoothingWorkflow(DEFAULTS).run(fam)
    stiff = SmoothingWorkflow({**DEFAULTS, "ei": 4.0}).run(fam)
    by_obj = {r["objective"]: r for r in base["rows"]}
    stiff_by_obj = {r["objective"]: r for r in stiff["rows"]}
    # scaling the objective does not move its minimiser
    assert stiff_by_obj["energy"]["theta0"] == by_obj["energy"]["theta0"]
    assert stiff_by_obj["energy"]["energy"] == pytest.approx(4.0 * by_obj["energy"]["energy"])
    for name in ("length", "area"):
        for key in ("theta0", "length", "area"):
            assert stiff_by_obj[name][key] == by_obj[name][key]
        assert stiff_by_obj[name]["energy"] == pytest.approx(4.0 * by_obj[name]["energy"])


def test_rejects_non_positive_rigidity():
    with pytest.raises(ArcDomainError):
        SmoothingWorkflow({**DEFAULTS, "ei": 0.0})
    with pytest.raises(ArcDomainError):
        SmoothingWorkflow({**DEFAULTS, "ei": -1.0})


def test_search_range_from_config():
    wf = SmoothingWorkflow({"lo_deg": -90, "up_deg": 90, "tol_deg": 0.1})
    assert wf.search.lo == pytest.approx(-math.pi / 2)
    assert wf.search.tol == pytest.approx(math.radians(0.1))
    assert wf.ei == 1.0


def test_config_loaded_when_not_given(monkeypatch):
    calls = []

    def fake_load_config(section=None, path=None):
        calls.append(section)
        return {"tol_deg": 1.0, "ei": 2.0}

    monkeypatch.setattr(smoothing_workflow, "load_config", fake_load_config)
    wf = SmoothingWorkflow()
    assert calls == ["smoothing"]
    assert wf.search.tol == pytest.approx(math.radians(1.0))
    assert wf.ei == 2.0
