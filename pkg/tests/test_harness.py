import json
import random
from fractions import Fraction

import pytest

from rectadd.cli import main
from rectadd.geometry import Rect, dyadic_inner_cover
from rectadd.harness import (
    EVIDENCE,
    VERIFIED,
    VIOLATED,
    WITNESS_RECT,
    cmd_counterexample,
    cmd_decompose,
    cmd_dyadic_approx,
    cmd_probe,
    cmd_proptest,
    inner_cover_sum,
    report_to_dict,
    shrink_bound,
    write_decomposition_svg,
)
from rectadd.decompose import decompose
from rectadd.numeric import QNum, ZERO
from rectadd.suites import rand_rect, rand_table_function, _rect_corner_points

F = Fraction


def test_cmd_counterexample_verified():
    rep = cmd_counterexample(samples=200, seed=7)
    assert rep.exit_status == 0
    statuses = [f.status for f in rep.findings]
    assert statuses == [VERIFIED, VERIFIED, VERIFIED]
    witness = rep.findings[1]
    assert witness.exact_values == ("-1",)


def test_cmd_counterexample_product_violates_negativity():
    rep = cmd_counterexample(samples=50, seed=1, function="product")
    assert rep.findings[0].status == VERIFIED  # product == area on dyadic squares
    assert rep.findings[1].status == VIOLATED  # no negative witness
    assert rep.exit_status == 1


def test_cmd_counterexample_constant_violates_positivity():
    rep = cmd_counterexample(samples=20, seed=1, function="constant:1")
    assert rep.findings[0].status == VIOLATED  # corner difference is 0, not area
    assert rep.exit_status == 1


def test_cmd_counterexample_determinism():
    a = report_to_dict(cmd_counterexample(samples=100, seed=42), timestamp="T")
    b = report_to_dict(cmd_counterexample(samples=100, seed=42), timestamp="T")
    assert json.dumps(a) == json.dumps(b)
    c = report_to_dict(cmd_counterexample(samples=100, seed=43), timestamp="T")
    assert a["findings"] == c["findings"]  # all-pass findings don't depend on the draw


def test_cmd_counterexample_validates():
    with pytest.raises(ValueError):
        cmd_counterexample(samples=0)
    with pytest.raises(ValueError):
        cmd_counterexample(min_order=5, max_order=2)


def test_cmd_decompose_rational(tmp_path):
    svg = tmp_path / "out.svg"
    rep = cmd_decompose(rect="[0,8]x[0,5]", max_steps=20, svg_path=str(svg))
    assert rep.exit_status == 0
    text = svg.read_text()
    assert text.count('class="square"') == 5
    assert 'class="remainder"' not in text
    assert text.startswith("<?xml")


def test_cmd_decompose_silver_svg_has_remainder(tmp_path):
    svg = tmp_path / "silver.svg"
    rep = cmd_decompose(
        rect="[0,1+1*sqrt2]x[0,1]", max_steps=12, function="product", svg_path=str(svg)
    )
    assert rep.exit_status == 0
    text = svg.read_text()
    assert text.count('class="square"') == 24  # two per step
    assert text.count('class="remainder"') == 1


def test_svg_square_count_matches_decomposition(tmp_path):
    rng = random.Random(501)
    for i in range(12):
        d = decompose(rand_rect(rng, i), rng.randint(1, 10))
        path = tmp_path / f"r{i}.svg"
        drawn = write_decomposition_svg(d, str(path))
        text = path.read_text()
        assert drawn == d.total_squares == text.count('class="square"')
        assert (d.remainder is not None) == ('class="remainder"' in text)


def test_inner_cover_sum_matches_enumeration():
    rng = random.Random(502)
    for i in range(40):
        r = rand_rect(rng, i)
        order = rng.randint(0, 3)
        cover = dyadic_inner_cover(r, order)
        pts = _rect_corner_points([sq.to_rect() for sq in cover] + [r])
        Ft = rand_table_function(rng, pts)
        brute = sum((Ft.value(sq.to_rect()) for sq in cover), ZERO)
        assert inner_cover_sum(Ft, r, order) == brute


def test_cmd_dyadic_approx_product_verified():
    rep = cmd_dyadic_approx(rect=WITNESS_RECT, function="product", max_order=8)
    assert rep.exit_status == 0
    assert rep.findings[0].status == VERIFIED
    assert rep.findings[1].status == EVIDENCE


def test_cmd_dyadic_approx_counterexample_gaps_exact():
    rep = cmd_dyadic_approx(rect=WITNESS_RECT, function="counterexample", max_order=6)
    assert rep.exit_status == 1
    assert rep.findings[0].status == VIOLATED
    gaps = rep.findings[1].exact_values
    assert gaps == ("-1", "-5/4", "-11/8", "-11/8", "-45/32", "-45/32")


def test_cmd_dyadic_approx_dyadic_square_gap_zero():
    rep = cmd_dyadic_approx(rect="[0,1/4]x[0,1/4]", function="counterexample", max_order=4)
    assert rep.exit_status == 0
    # from order 2 on the cover is the square itself
    assert rep.findings[1].exact_values[1:] == ("0", "0", "0")


def test_shrink_bound_value():
    r = Rect(ZERO, QNum(1), ZERO, QNum(1))
    assert shrink_bound(r, 1) == QNum(3)  # 2*(1+1)/2 + 4/4


def test_cmd_probe_only_evidence():
    rep = cmd_probe(function="product", point=("1/2", "1/2"), alpha=F(1), depth=6)
    assert rep.exit_status == 0
    assert all(f.status == EVIDENCE for f in rep.findings)
    mins = rep.findings[-1].exact_values
    assert mins == ("1",) * 6


def test_cmd_probe_within_flag_round_trip():
    rep = cmd_probe(
        function="counterexample",
        point=("1/2", "1/2"),
        alpha=F(1),
        depth=2,
        offsets=2,
        within="[0,1]x[0,1]",
    )
    assert rep.inputs["within"] == "[0,1]x[0,1]"
    assert all(f.status == EVIDENCE for f in rep.findings)


def test_cmd_probe_rejects_bad_alpha():
    with pytest.raises(ValueError):
        cmd_probe(alpha=F(5, 2))


def test_cmd_proptest_all_suites_pass():
    for suite, cases in [
        ("field", 500),
        ("additivity", 100),
        ("tiling", 60),
        ("halving", 60),
        ("oracle", 200),
        ("telescope", 40),
    ]:
        rep = cmd_proptest(suite=suite, cases=cases, seed=11)
        assert rep.exit_status == 0, suite
        assert rep.findings[0].status == VERIFIED


def test_cmd_proptest_unknown_suite():
    with pytest.raises(ValueError):
        cmd_proptest(suite="bogus")


def test_report_json_schema(tmp_path):
    rep = cmd_decompose(rect="[0,2]x[0,1]", max_steps=4)
    d = report_to_dict(rep)
    assert d["schema"] == 1
    assert d["command"] == "decompose"
    assert d["exit_status"] == 0
    assert {"claim", "status", "exact_values", "approximations"} <= set(
        d["findings"][0].keys()
    )


def test_cli_end_to_end(tmp_path):
    out = tmp_path / "report.json"
    code = main(
        [
            "decompose",
            "--rect",
            "[0,8]x[0,5]",
            "--max-steps",
            "20",
            "--json",
            str(out),
        ]
    )
    assert code == 0
    data = json.loads(out.read_text())
    assert data["schema"] == 1
    assert data["exit_status"] == 0


def test_cli_counterexample_product_exits_nonzero():
    assert main(["counterexample", "--samples", "20", "--function", "product"]) == 1


def test_cli_probe_and_proptest():
    assert main(["probe", "--alpha", "1", "--depth", "3"]) == 0
    assert main(["proptest", "--suite", "field", "--cases", "50"]) == 0


def test_cli_rejects_bad_literal():
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--rect", "not-a-rect"])
    assert exc.value.code == 2


def test_cli_rejects_bad_alpha():
    with pytest.raises(SystemExit) as exc:
        main(["probe", "--alpha", "7/2"])
    assert exc.value.code == 2


def test_cli_json_determinism(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    for p in (p1, p2):
        assert main(["counterexample", "--samples", "60", "--seed", "5", "--json", str(p)]) == 0
    d1, d2 = json.loads(p1.read_text()), json.loads(p2.read_text())
    d1.pop("generated_at")
    d2.pop("generated_at")
    assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)
