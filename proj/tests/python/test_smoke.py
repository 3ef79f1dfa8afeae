import math

import pytest

import eikon


def test_disk_distance_and_gradient():
    disk = eikon.Shape.disk((0.0, 0.0), 1.0)
    assert disk.kind == "disk"
    assert eikon.signed_distance(disk, (0.3, 0.4)) == pytest.approx(0.5, abs=1e-15)
    assert eikon.signed_distance(disk, [2.0, 0.0]) == pytest.approx(-1.0, abs=1e-15)
    gx, gy = eikon.gradient(disk, (0.3, 0.4))
    assert (gx, gy) == pytest.approx((-0.6, -0.8), abs=1e-15)
    assert eikon.gradient(disk, (0.0, 0.0)) is None
    assert eikon.is_medial(disk, (0.0, 0.0))


def test_square_from_json():
    sq = eikon.Shape.from_json('{"type": "polygon", "vertices": [[-1,-1],[1,-1],[1,1],[-1,1]]}')
    assert sq.contains((0.5, 0.5))
    assert not sq.contains((1.0, 0.3))
    assert eikon.nearest_points(sq, (0.0, 0.0))["multiplicity"] == 4
    assert '"polygon"' in sq.to_json()


def test_errors_carry_the_code():
    with pytest.raises(eikon.EikonError) as info:
        eikon.Shape.disk((0.0, 0.0), -1.0)
    assert info.value.args[1] == "InvalidSpec"
    disk = eikon.Shape.disk((0.0, 0.0), 1.0)
    with pytest.raises(ValueError):
        eikon.signed_distance(disk, (0.0, 0.0, 0.0))
    with pytest.raises(TypeError):
        eikon.signed_distance(disk, (0.0,))


def test_trace_and_fmm():
    disk = eikon.Shape.disk((0.0, 0.0), 1.0)
    path = eikon.trace(disk, (0.3, 0.4))
    assert path["stop_reason"] == "MedialHit"
    assert path["max_line_deviation"] < 1e-9
    field = eikon.solve_fmm(disk, (-1.5, -1.5), (1.5, 1.5), [64, 64])
    assert field["values"].shape == (64, 64)
    assert field["h"] == pytest.approx(3.0 / 64)
    exact = eikon.sample_signed_distance(disk, (-1.5, -1.5), (1.5, 1.5), [64, 64])
    assert abs(field["values"] - exact["values"]).max() <= 2 * field["h"]


def test_regularity_reports():
    disk = eikon.Shape.disk((0.0, 0.0), 1.0)
    chi = eikon.chi_estimate(disk, (1.0, 0.0), [0.1, 0.01])
    assert chi["estimates"]["chi"] == pytest.approx(1.0, abs=1e-9)
    c1 = eikon.c1_margin(disk, (1.0, 0.0), 0.1)
    assert 0.5 <= c1["estimates"]["ratio_sup"] <= 0.5 / 0.9 + 1e-6
    rep = eikon.differentiability_test(disk, (0.0, 1.0))
    assert rep["verdicts"]["differentiable"]


def test_spiral_ratio():
    spiral = eikon.Shape.spiral(theta_max=4000.0)
    rows = eikon.spiral_ratio_sequence(spiral, [100.0])
    assert rows[0]["bound"] == pytest.approx(math.pi / 101, abs=1e-15)
    assert rows[0]["measured_ratio"] <= rows[0]["bound"]
