import pytest

import superpoly as sp


def test_parse_emit_round_trip():
    p = sp.parse_polyomino("gr\n.r\n")
    assert p.size() == 3
    assert p.width() == 2 and p.height() == 2
    assert p.color_at(0, 1) == 0  # gray
    assert p.color_at(1, 0) == 2  # red
    assert p.color_at(5, 5) == -1
    assert sp.emit_polyomino(p) == "gr\n.r\n"
    assert sp.parse_polyomino(sp.emit_polyomino(p)) == p


def test_make_polyomino_from_cells():
    p = sp.make_polyomino({(0, 0): 0, (1, 0): 2})
    assert p == sp.parse_polyomino("gr")
    assert p.cells() == {(0, 0): 0, (1, 0): 2}


def test_relations():
    bar = sp.parse_polyomino("ggg")
    stub = sp.parse_polyomino("gg")
    assert sp.compatible(bar, stub, (1, 0))
    assert sp.is_superpolyomino(bar, stub) == [(0, 0), (1, 0)]
    offset, count = sp.max_overlap(bar, bar)
    assert (offset, count) == ((0, 0), 3)


def test_solve_exact_tiny():
    inst = sp.Instance([("a", sp.parse_polyomino("gg")),
                        ("b", sp.parse_polyomino("gk"))])
    res = sp.solve_exact(inst)
    assert res["size"] == 3 and res["optimal"]
    assert sp.evaluate_layout(inst, res["layout"]) == 3
    assert sp.solve_brute(inst)["size"] == 3
    assert sp.solve_exact(inst, mode="steiner")["size"] == 3
    assert sp.solve_greedy(inst)["size"] >= 3


def test_coloring_pipeline():
    g = sp.Graph(3, [(0, 1), (0, 2), (1, 2)])
    ci = sp.build_coloring_instance(g)
    res = sp.deck_solve(ci)
    assert res["size"] == 54
    assert res["layout"] == [(0, 0), (6, 0), (12, 0)]
    assert sp.threshold_k(res["size"], g.n) == 3
    assert sp.chromatic_number(g)[0] == 3
    assert sp.extract_coloring(ci, res["layout"]) == [[0], [1], [2]]


def test_two_color_blocks():
    p = sp.parse_polyomino("gr")
    big = sp.to_two_color(p)
    assert big.size() == 64 * p.size()
    assert sp.from_two_color(big) == p


def test_setcover_pipeline():
    sc = sp.SetCoverInstance(4, [[1, 2], [1, 4], [2, 3, 4], [2, 4]])
    res, cover = sp.aligned_solve(sc)
    assert res["size"] == 169
    assert cover == [1, 3]
    assert sp.min_set_cover(sc)[0] == 2
    assert sp.extract_cover(sc, res["layout"]) == [1, 3]


def test_instance_text_round_trip():
    inst = sp.Instance([("a", sp.parse_polyomino("gg")),
                        ("b", sp.parse_polyomino("k"))])
    text = sp.emit_instance(inst)
    parsed, kind, two_color = sp.parse_instance(text)
    assert kind == "none" and not two_color
    assert parsed.piece_count() == 2
    assert parsed.piece(0) == inst.piece(0)
    lay = [(0, 0), (2, 0)]
    assert sp.parse_layout(sp.emit_layout(inst, lay), inst) == lay


def test_render_svg():
    svg = sp.render_svg(sp.parse_polyomino("gk"), id="pair")
    assert svg.startswith("<svg") and 'id="pair"' in svg


def test_errors_surface_as_superpoly_error():
    with pytest.raises(sp.SuperpolyError):
        sp.parse_polyomino("g.x\n")
    with pytest.raises(sp.SuperpolyError):
        sp.build_coloring_instance(sp.Graph(2, [(0, 1)]))
