import json
import math
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yaoradius.cli import main
from yaoradius.counterexamples import ConstructionParams, gen_y4_lower, y4_eps_range
from yaoradius.formats import (
    FormatError,
    edges_from_dict,
    graph_to_dict,
    pointset_from_dict,
    pointset_to_dict,
    read_edges,
    read_pointset,
    write_graph,
    write_pointset,
)
from yaoradius.graphs import PointSet, disk_graph, yao_directed
from yaoradius.svg import render

SVG = "{http://www.w3.org/2000/svg}"
finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


@settings(max_examples=200)
@given(st.lists(st.tuples(finite, finite), max_size=12, unique=True))
def test_pointset_round_trip_is_bit_exact(pts):
    s = PointSet(pts)
    back, meta = pointset_from_dict(json.loads(json.dumps(pointset_to_dict(s, {"a": 1}))))
    assert back == s
    assert meta == {"a": 1}
    for p, q in zip(s, back):
        assert p.x.hex() == q.x.hex() and p.y.hex() == q.y.hex()


def test_file_round_trip_keeps_labels(tmp_path):
    s = gen_y4_lower(ConstructionParams("y4-lb", 1.3, 0.1, 1e-4, 2))
    write_pointset(tmp_path / "s.json", s, {"family": "y4-lb"})
    back, meta = read_pointset(tmp_path / "s.json")
    assert back == s and back.labels == s.labels
    assert meta["family"] == "y4-lb"


@pytest.mark.parametrize("doc", [
    {"format": "other", "version": "1", "points": []},
    {"format": "yaoradius.pointset", "version": "9", "points": []},
    {"format": "yaoradius.pointset", "version": "1", "points": [[0, 0, 0]]},
    {"format": "yaoradius.pointset", "version": "1", "points": [[0, 0], [0, 0]]},
    {"format": "yaoradius.pointset", "version": "1", "points": [[0, 0]], "labels": ["a", "b"]},
])
def test_bad_pointset_documents(doc):
    with pytest.raises(FormatError):
        pointset_from_dict(doc)


def test_unreadable_files(tmp_path):
    with pytest.raises(FormatError):
        read_pointset(tmp_path / "missing.json")
    (tmp_path / "bad.json").write_text("{")
    with pytest.raises(FormatError):
        read_pointset(tmp_path / "bad.json")


def test_edge_list_round_trip(tmp_path):
    s = PointSet([(0, 0), (1, 0), (0.5, 0.8)])
    g = yao_directed(disk_graph(s, 1.0), 3)
    write_graph(tmp_path / "e.json", g)
    doc = read_edges(tmp_path / "e.json", s)
    assert {(u, v) for u, v, _ in doc["edges"]} == g.edge_set()
    assert doc["directed"] is True


@pytest.mark.parametrize("edges", [[[0, 3, 1.0]], [[1, 1, 0.0]], [[0, 1]], [[0, 1, 2.0]]])
def test_edge_list_validation(edges):
    s = PointSet([(0, 0), (1, 0), (2, 0)])
    doc = graph_to_dict(disk_graph(s, 1.0))
    doc["edges"] = edges
    with pytest.raises(FormatError):
        edges_from_dict(doc, s)


def test_edge_list_node_count_must_match():
    doc = graph_to_dict(disk_graph(PointSet([(0, 0), (1, 0)]), 1.0))
    with pytest.raises(FormatError):
        edges_from_dict(doc, PointSet([(0, 0)]))


def test_svg_structure():
    s = PointSet([(0, 0), (1, 0), (0.5, 1)], ["a", "b", "c"])
    root = ET.fromstring(render(s, [[(0, 1)], [(1, 2), (0, 2)]], labels=True))
    assert len(root.findall(f".//{SVG}circle")) == 3
    groups = [g for g in root.findall(f"{SVG}g") if g.get("stroke")]
    assert len(groups) == 2 and groups[0].get("stroke") != groups[1].get("stroke")
    assert [len(g.findall(f"{SVG}line")) for g in groups] == [1, 2]
    assert [t.text for t in root.iter(f"{SVG}text")] == ["a", "b", "c"]


def test_svg_rejects_bad_edges():
    with pytest.raises(ValueError):
        render(PointSet([(0, 0)]), [[(0, 1)]])


def test_svg_single_point():
    root = ET.fromstring(render(PointSet([(3, 3)])))
    assert len(root.findall(f".//{SVG}circle")) == 1


# command line

def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_y4(tmp_path, capsys):
    code, _, err = run(["gen", "--family", "y4-lb", "--d", 1.3, "--out", tmp_path / "s.json"], capsys)
    assert code == 0
    assert "master seed: 0" in err
    s, meta = read_pointset(tmp_path / "s.json")
    assert len(s) == 8
    lo, hi = y4_eps_range(1.3)
    assert meta["eps"] == pytest.approx((lo + hi) / 2)
    assert meta["r"] == 3 and meta["family"] == "y4-lb"


def test_gen_random(tmp_path, capsys):
    code, _, _ = run(["gen", "--family", "random", "--n", 50, "--seed", 7, "--out", tmp_path / "r.json"], capsys)
    assert code == 0
    s, meta = read_pointset(tmp_path / "r.json")
    assert len(s) == 50 and meta["seed"] == 7


def test_gen_random_needs_n(tmp_path, capsys):
    code, _, err = run(["gen", "--family", "random", "--out", tmp_path / "r.json"], capsys)
    assert code == 1 and "--n" in err


def test_gen_y3_out_of_range_names_the_bound(tmp_path, capsys):
    code, _, err = run(["gen", "--family", "y3-lb", "--d", 1.2, "--out", tmp_path / "s.json"], capsys)
    assert code == 1
    assert "5 - (2/3)sqrt(35)" in err
    assert not (tmp_path / "s.json").exists()


def test_gen_rejects_eps_outside_range(tmp_path, capsys):
    code, _, err = run(["gen", "--family", "y4-lb", "--d", 1.3, "--eps", 0.5, "--out", tmp_path / "s.json"],
                       capsys)
    assert code == 1 and "eps" in err


def test_yao_two_points(tmp_path, capsys):
    write_pointset(tmp_path / "s.json", PointSet([(0, 0), (1, 0)]))
    code, _, _ = run(["yao", "--k", 4, "--d", 1, "--in", tmp_path / "s.json", "--out", tmp_path / "e.json"], capsys)
    assert code == 0
    assert read_edges(tmp_path / "e.json")["edges"] == [[0, 1, 1.0]]


def test_yao_drops_pq(tmp_path, capsys):
    s = gen_y4_lower(ConstructionParams("y4-lb", 1.3, 0.1, 1e-4, 2))
    write_pointset(tmp_path / "s.json", s)
    run(["yao", "--k", 4, "--d", 1.3, "--in", tmp_path / "s.json", "--out", tmp_path / "e.json"], capsys)
    pairs = {(u, v) for u, v, _ in read_edges(tmp_path / "e.json", s)["edges"]}
    p, q = s.index("p"), s.index("q")
    assert (min(p, q), max(p, q)) not in pairs


def test_yao_directed_arc_budget(tmp_path, capsys):
    run(["gen", "--family", "random", "--n", 30, "--seed", 1, "--out", tmp_path / "s.json"], capsys)
    code, _, _ = run(["yao", "--k", 4, "--d", 1, "--directed", "--in", tmp_path / "s.json",
                      "--out", tmp_path / "e.json"], capsys)
    doc = read_edges(tmp_path / "e.json")
    assert code == 0 and doc["directed"] and len(doc["edges"]) <= 4 * 30


def test_radius_reports_bound(tmp_path, capsys):
    write_pointset(tmp_path / "s.json", gen_y4_lower(ConstructionParams("y4-lb", 1.3, 0.1, 1e-4, 2)))
    code, out, _ = run(["radius", "--k", 4, "--in", tmp_path / "s.json", "--cap", 2], capsys)
    assert code == 0
    record = json.loads(out.splitlines()[0])
    assert 1.3 < record["radius"] <= math.sqrt(2)


def test_radius_unbounded_exit_code(tmp_path, capsys):
    run(["gen", "--family", "y2-lb", "--d", 3, "--out", tmp_path / "s.json"], capsys)
    code, out, _ = run(["radius", "--k", 2, "--in", tmp_path / "s.json", "--cap", 3], capsys)
    assert code == 2
    assert json.loads(out.splitlines()[0])["radius"] == "unbounded above cap"


def test_radius_rejects_bad_cap(tmp_path, capsys):
    write_pointset(tmp_path / "s.json", PointSet([(0, 0), (1, 0)]))
    code, _, _ = run(["radius", "--k", 3, "--in", tmp_path / "s.json", "--cap", -1], capsys)
    assert code == 1


def test_radius_missing_file(tmp_path, capsys):
    code, _, err = run(["radius", "--k", 3, "--in", tmp_path / "nope.json"], capsys)
    assert code == 1 and "cannot read" in err


def test_verify_theorem1(tmp_path, capsys):
    code, out, _ = run(["verify", "--theorem", "1", "--dump-dir", tmp_path], capsys)
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_lemmas_small(tmp_path, capsys):
    code, out, _ = run(["verify", "--theorem", "lemmas", "--samples", 2000, "--dump-dir", tmp_path], capsys)
    assert code == 0 and "FAIL" not in out


def test_study(capsys):
    code, out, _ = run(["study", "--k", 4, "--trials", 20, "--n", 15, "--seed", 3], capsys)
    summary = json.loads(out)
    assert code == 0 and summary["trials"] == 20
    assert summary["max"] <= math.sqrt(2) + 1e-9


def test_plot(tmp_path, capsys):
    s = gen_y4_lower(ConstructionParams("y4-lb", 1.3, 0.1, 1e-4, 2))
    write_pointset(tmp_path / "s.json", s)
    write_graph(tmp_path / "disk.json", disk_graph(s, 1.3))
    run(["yao", "--k", 4, "--d", 1.3, "--in", tmp_path / "s.json", "--out", tmp_path / "yao.json"], capsys)
    code, _, _ = run(["plot", "--in", tmp_path / "s.json", "--edges", tmp_path / "disk.json", tmp_path / "yao.json",
                      "--labels", "--out", tmp_path / "p.svg"], capsys)
    assert code == 0
    root = ET.parse(tmp_path / "p.svg").getroot()
    assert len(root.findall(f".//{SVG}circle")) == len(s)
    assert {g.get("id") for g in root.findall(f"{SVG}g")} >= {"disk", "yao"}


def test_plot_rejects_inconsistent_edges(tmp_path, capsys):
    write_pointset(tmp_path / "s.json", PointSet([(0, 0), (1, 0)]))
    doc = graph_to_dict(disk_graph(PointSet([(0, 0), (1, 0)]), 1.0))
    doc["edges"] = [[0, 5, 1.0]]
    (tmp_path / "e.json").write_text(json.dumps(doc))
    code, _, err = run(["plot", "--in", tmp_path / "s.json", "--edges", tmp_path / "e.json",
                        "--out", tmp_path / "p.svg"], capsys)
    assert code == 1 and "inconsistent" in err
    assert not (tmp_path / "p.svg").exists()


def test_outputs_are_byte_identical(tmp_path, capsys):
    for tag in ("a", "b"):
        d = tmp_path / tag
        d.mkdir()
        run(["gen", "--family", "random", "--n", 40, "--seed", 5, "--model", "perturbed-grid",
             "--out", d / "s.json"], capsys)
        run(["yao", "--k", 3, "--d", 1, "--in", d / "s.json", "--out", d / "e.json"], capsys)
        run(["plot", "--in", d / "s.json", "--edges", d / "e.json", "--out", d / "p.svg"], capsys)
    for name in ("s.json", "p.svg"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    ea, eb = (read_edges(tmp_path / t / "e.json") for t in ("a", "b"))
    assert ea["edges"] == eb["edges"]
