import json

import pytest

from oscext.cli import (
    CommandRequest,
    ParseError,
    main,
    parse_diagram_spec,
    parse_multiset_spec,
    run,
)
from oscext.maya import IntegerMultiset, MayaDiagram


class TestDiagramGrammar:
    def test_empty_index_set(self):
        assert parse_diagram_spec("K:{}") == MayaDiagram()

    def test_index_set(self):
        assert parse_diagram_spec("K:{-2,0}") == MayaDiagram([-2, 0])
        assert parse_diagram_spec("K:{ -2 , 0 }") == MayaDiagram([-2, 0])

    def test_unicode_minus_tolerated(self):
        assert parse_diagram_spec("K:{−2,0}") == MayaDiagram([-2, 0])

    def test_block_coordinates(self):
        m = parse_diagram_spec("B:(2,3,5,7,10)")
        assert m == MayaDiagram([0, 1, 3, 4, 7, 8, 9])
        assert parse_diagram_spec("B:(0)") == MayaDiagram()

    def test_malformed_prefix(self):
        with pytest.raises(ParseError) as exc:
            parse_diagram_spec("Q:{1}")
        assert "position 0" in str(exc.value)

    def test_malformed_item_reports_position(self):
        with pytest.raises(ParseError) as exc:
            parse_diagram_spec("K:{1,,2}")
        assert "position 5" in str(exc.value)

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_diagram_spec("K:{1}x")

    def test_duplicate_elements(self):
        with pytest.raises(ParseError):
            parse_diagram_spec("K:{1,1}")

    def test_even_block_tuple(self):
        with pytest.raises(ParseError) as exc:
            parse_diagram_spec("B:(1,2)")
        assert "odd" in str(exc.value)

    def test_non_increasing_block_tuple(self):
        with pytest.raises(ParseError) as exc:
            parse_diagram_spec("B:(3,2,5)")
        assert "increasing" in str(exc.value)

    def test_multiset_allows_repeats(self):
        assert parse_multiset_spec("K:{0,0,1}") == IntegerMultiset({0: 2, 1: 1})

    def test_round_trip_through_str(self):
        for ks in [(), (0,), (-2, 0), (1, 2, 5)]:
            m = MayaDiagram(ks)
            assert parse_diagram_spec(str(m)) == m


class TestCommands:
    def test_render(self):
        code, out = run(CommandRequest("render", "K:{-2,0}", lo=-3, hi=2))
        assert code == 0
        assert out == "●○●|●○○"

    def test_render_ascii_safe(self):
        code, out = run(CommandRequest(
            "render", "K:{}", lo=-2, hi=2, ascii_safe=True))
        assert (code, out) == (0, "##|...")

    def test_info_json(self):
        code, out = run(CommandRequest("info", "B:(2,3,5,7,10)", fmt="json"))
        assert code == 0
        doc = json.loads(out)
        assert doc["indexSet"] == [0, 1, 3, 4, 7, 8, 9]
        assert doc["sigma"] == 7
        assert doc["genus"] == 2
        assert doc["blockCoordinates"] == [2, 3, 5, 7, 10]

    def test_hm_json(self):
        code, out = run(CommandRequest("hm", "K:{1,2}", fmt="json"))
        assert code == 0
        doc = json.loads(out)
        assert doc == {"H": "8*x^2+4", "Hhat": "4*x^2+2",
                       "sigma": 2, "genus": 1}

    def test_potential_json_round_trips(self):
        from oscext.algebra import RationalFunction
        from oscext.extension import potential
        code, out = run(CommandRequest("potential", "K:{1,2}", fmt="json"))
        assert code == 0
        doc = json.loads(out)
        assert RationalFunction.from_json(doc["potential"]) == \
            potential(MayaDiagram([1, 2]))

    def test_eigencheck_passes(self):
        code, out = run(CommandRequest("eigencheck", "K:{1,2}", k=3))
        assert code == 0
        assert "holds" in out

    def test_intertwiner_json(self):
        from oscext.intertwining import intertwiner
        from oscext.operators import LinearDifferentialOperator
        code, out = run(CommandRequest(
            "intertwiner", "K:{}", flips="K:{0}", fmt="json"))
        assert code == 0
        doc = json.loads(out)
        assert doc["order"] == 1
        assert doc["intertwines"] is True
        op = LinearDifferentialOperator.from_json(doc["operator"])
        assert op == intertwiner(MayaDiagram(), [0])

    def test_ladder(self):
        code, out = run(CommandRequest("ladder", "K:{-2}", n=1, fmt="json"))
        assert code == 0
        doc = json.loads(out)
        assert doc["flipSet"] == [-2, -1, 0]
        assert doc["order"] == 3
        assert doc["predictedOrder"] == 3

    def test_syzygy_reports_structure(self):
        code, out = run(CommandRequest("syzygy", "K:{-2}", n=2, fmt="json"))
        assert code == 0
        doc = json.loads(out)
        assert doc["evenPart"] == [[-1, 1], [0, 1]]
        assert doc["roots"] == [-1, 1]
        assert doc["identityHolds"] is True

    def test_regular(self):
        code, out = run(CommandRequest("regular", "K:{1}", fmt="json"))
        assert code == 0
        doc = json.loads(out)
        assert doc["regular"] is False
        assert doc["realRootsOfH"] == 1
        assert doc["routesAgree"] is True

    def test_usage_error_exit_2(self):
        code, out = run(CommandRequest("info", "K:{1,,2}"))
        assert code == 2
        assert "position" in out

    def test_unknown_command(self):
        code, _ = run(CommandRequest("frobnicate"))
        assert code == 2

    def test_domain_error_exit_2(self):
        code, out = run(CommandRequest("ladder", "K:{}", n=0))
        assert code == 2
        assert "nonzero" in out


class TestDeterminism:
    def test_identical_requests_identical_bytes(self):
        req = CommandRequest("hm", "K:{-2,0}", fmt="json")
        assert run(req) == run(req)
        req = CommandRequest("syzygy", "K:{-3}", n=2, fmt="json")
        assert run(req) == run(req)

    def test_verify_all_tiny_bounds(self):
        req = CommandRequest("verify-all", window=1, max_size=1, max_shift=1,
                             fmt="json")
        code, out = run(req)
        assert code == 0
        doc = json.loads(out)
        assert doc["allPassed"] is True
        assert all(c["passed"] for c in doc["checks"])
        assert run(req) == (code, out)


class TestSeedCorpus:
    def test_byte_identical_reruns(self, tmp_path):
        d1 = tmp_path / "a"
        d2 = tmp_path / "b"
        assert run(CommandRequest("seed-corpus", directory=str(d1)))[0] == 0
        assert run(CommandRequest("seed-corpus", directory=str(d2)))[0] == 0
        files1 = sorted(p.name for p in d1.iterdir())
        files2 = sorted(p.name for p in d2.iterdir())
        assert files1 == files2 == [f"one_gap_n{n}.json" for n in (1, 2, 3, 4)]
        for name in files1:
            assert (d1 / name).read_bytes() == (d2 / name).read_bytes()

    def test_fixture_content(self, tmp_path):
        run(CommandRequest("seed-corpus", directory=str(tmp_path)))
        doc = json.loads((tmp_path / "one_gap_n3.json").read_text())
        assert doc["diagram"]["indexSet"] == [-3]
        assert doc["diagram"]["genus"] == 1
        assert doc["elementaryLadder"]["order"] == 3
        assert doc["minimalLadder"]["order"] == 3
        assert doc["minimalLadder"]["flipSet"] == [-3, 1, 2]
        assert doc["syzygy"]["identityHolds"] is True
        assert len(doc["factorization"]) == 3


class TestMainEntry:
    def test_main_exit_codes(self, capsys):
        assert main(["hm", "K:{1,2}"]) == 0
        out = capsys.readouterr().out
        assert "8*x^2+4" in out

    def test_main_parse_error_to_stderr(self, capsys):
        assert main(["info", "K:{zzz}"]) == 2
        err = capsys.readouterr().err
        assert "position" in err

    def test_argparse_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["eigencheck", "K:{}"])  # missing required -k
        assert exc.value.code == 2
