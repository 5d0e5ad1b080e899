import pytest

import planepaths as pp


def test_generate_is_deterministic():
    assert pp.generate("random", 12, 5) == pp.generate("random", 12, 5)
    assert len(pp.convex_hull(pp.generate("convex", 9, 1))) == 9


def test_three_paths_verify():
    pts = pp.generate("random", 20, 3)
    r = pp.three_paths(pts)
    assert len(r["paths"]) == 3
    assert pp.verify(pts, r["paths"])["ok"]
    assert r["witness"]["kind"] in ("crossing-pair", "switchable-plus-bridged", "wheel")


def test_two_paths_and_hull():
    pts = [(0, 0), (10, -2), (14, 8), (6, 14), (-3, 9)]
    r = pp.two_paths(pts, 0, 2)
    assert r["p"][0] == 0 and r["q"][0] == 2
    assert pp.verify(pts, [r["p"], r["q"]])["ok"]


def test_wheel():
    pts = pp.generate("wheel", 8, 2)
    center = pp.is_wheel(pts)
    assert center == 7
    assert len(pp.wheel_paths(pts, center)) == 3
    assert pp.max_disjoint_paths(pp.generate("wheel", 6, 1)) == (2, True)
    assert pp.structural_search(pts)["kind"] == "wheel"


def test_oracle_and_render():
    pts = pp.generate("random", 8, 1)
    status, paths, nodes = pp.find_paths(pts, 3)
    assert status == "found" and len(paths) == 3 and nodes > 0
    svg = pp.render_svg(pts, paths, hull=True)
    assert svg.count("<polyline") == 3


def test_errors():
    with pytest.raises(pp.InputError, match="CollinearTriple"):
        pp.validate([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(ValueError):
        pp.three_paths(pp.generate("random", 6, 1))
    verdict = pp.verify([(0, 0), (4, 0), (4, 4), (0, 4)], [[0, 2, 1, 3]])
    assert not verdict["ok"] and "cross" in verdict["summary"]
