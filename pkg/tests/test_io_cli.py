"""Text formats, rendering, and the command-line pipeline."""

import pytest

from untangling import DistIcorInstance, ThreePartitionInstance, gen_fig5, gen_random, render_svg
from untangling.cli import main
from untangling.errors import FormatError
from untangling.io_formats import (
    format_3p,
    format_drawing,
    format_icor,
    format_moves,
    parse_3p,
    parse_drawing,
    parse_icor,
    parse_moves,
)
from untangling.model import Untangling, VertexMove


def test_drawing_roundtrip():
    d = gen_fig5(8)
    text = format_drawing(d, comments=["hello"])
    back = parse_drawing(text)
    assert back.order == d.order
    assert {frozenset(e) for e in back.graph.edges} == {frozenset(e) for e in d.graph.edges}
    # one serialization pass canonicalizes; after that the round trip is the
    # byte identity (up to dropped comments)
    canonical = format_drawing(back)
    assert format_drawing(parse_drawing(canonical)) == canonical
    assert "# hello" in text and "# hello" not in canonical


def test_drawing_parse_tolerates_whitespace_and_comments():
    text = "# intro\n\n  vertices 3\norder  a b c\n edge a b\n# trailing\n"
    d = parse_drawing(text)
    assert d.order == ("a", "b", "c")
    assert d.graph.edges == frozenset({("a", "b")})


@pytest.mark.parametrize(
    "text",
    [
        "order a b\nedge a b\n",                      # missing vertices line
        "vertices 2\norder a a\n",                    # duplicate vertex
        "vertices 3\norder a b\n",                    # count mismatch
        "vertices 2\norder a b\nedge a c\n",          # unknown endpoint
        "vertices 2\norder a b\nwat a b\n",           # unknown keyword
    ],
)
def test_drawing_parse_errors(text):
    with pytest.raises(FormatError):
        parse_drawing(text)


def test_moves_roundtrip():
    u = Untangling((VertexMove("a", "b"), VertexMove("c", "a")))
    text = format_moves(u, fixed=["b", "d"])
    assert "# moved=2 fixed=b,d" in text
    assert parse_moves(text) == u
    with pytest.raises(FormatError):
        parse_moves("move a to b\n")


def test_instance_file_roundtrips():
    inst = ThreePartitionInstance((9, 9, 12), 30)
    assert parse_3p(format_3p(inst)) == inst
    di = DistIcorInstance(((2, 5), (1, 8, 4)), 3)
    assert parse_icor(format_icor(di)) == di
    with pytest.raises(FormatError):
        parse_3p("3p 1 30 9 9\n")
    with pytest.raises(FormatError):
        parse_icor("chunk 1 2\n")


def test_render_svg_deterministic_and_highlighted():
    d = gen_fig5(6)
    a = render_svg(d)
    b = render_svg(d)
    assert a == b
    assert a.count("#cc2222") == 4  # crossing edges drawn in red
    assert render_svg(d, moved=("v3",)).count("#ff9933") == 1


def test_cli_untangle_verify_pipeline(tmp_path, capsys):
    drawing = tmp_path / "fig5.cdr"
    moves = tmp_path / "out.mv"
    assert main(["generate", "fig5", "--n", "6"]) == 0
    drawing.write_text(capsys.readouterr().out)

    assert main(["check", str(drawing)]) == 0
    out = capsys.readouterr().out
    assert "kind almost-planar" in out

    assert main(["untangle", str(drawing), "--algorithm", "min"]) == 0
    captured = capsys.readouterr()
    moves.write_text(captured.out)
    assert "# moved=2" in captured.out

    assert main(["verify", str(drawing), str(moves)]) == 0
    assert "planarOk true" in capsys.readouterr().out


@pytest.mark.parametrize("algo", ["general", "one-side", "edge-fixed", "min", "exact"])
def test_cli_all_algorithms_untangle(tmp_path, capsys, algo):
    drawing = tmp_path / "d.cdr"
    main(["generate", "random", "--n", "8", "--seed", "3", "--profile", "almost-planar"])
    drawing.write_text(capsys.readouterr().out)
    moves = tmp_path / "m.mv"
    assert main(["untangle", str(drawing), "--algorithm", algo]) == 0
    moves.write_text(capsys.readouterr().out)
    assert main(["verify", str(drawing), str(moves)]) == 0
    capsys.readouterr()


def test_cli_generate_deterministic(capsys):
    main(["generate", "random", "--n", "12", "--seed", "9"])
    first = capsys.readouterr().out
    main(["generate", "random", "--n", "12", "--seed", "9"])
    assert capsys.readouterr().out == first


def test_cli_reductions(tmp_path, capsys):
    f3 = tmp_path / "i.3p"
    f3.write_text("3p 1 30 9 9 12\n")
    assert main(["generate", "reduce-3p", str(f3)]) == 0
    icor_text = capsys.readouterr().out
    assert icor_text.startswith("icor 300\n")

    fic = tmp_path / "i.icor"
    fic.write_text("icor 5\nchunk 2 5\nchunk 1 8 4\nchunk 6 7 9 3\n")
    assert main(["generate", "reduce-icor", str(fic)]) == 0
    out = capsys.readouterr().out
    assert "# budget K=4" in out and "vertices 10" in out


def test_cli_render(tmp_path, capsys):
    drawing = tmp_path / "d.cdr"
    main(["generate", "fig5", "--n", "6"])
    drawing.write_text(capsys.readouterr().out)
    out = tmp_path / "d.svg"
    assert main(["render", str(drawing), "-o", str(out)]) == 0
    assert out.read_text().startswith("<svg")


def test_cli_exit_codes(tmp_path, capsys):
    # 2: unparsable input file
    bad = tmp_path / "bad.cdr"
    bad.write_text("vertices 2\norder a\n")
    assert main(["check", str(bad)]) == 2
    capsys.readouterr()

    # 3: algorithmic precondition (not almost-planar)
    nap = tmp_path / "nap.cdr"
    nap.write_text(
        "vertices 8\norder v1 v2 v3 v4 v5 v6 v7 v8\n"
        "edge v1 v3\nedge v2 v4\nedge v5 v7\nedge v6 v8\n"
    )
    assert main(["untangle", str(nap), "--algorithm", "min"]) == 3
    capsys.readouterr()

    # 4: oracle budget exceeded
    d = tmp_path / "d.cdr"
    main(["generate", "fig5", "--n", "6"])
    d.write_text(capsys.readouterr().out)
    assert main(["untangle", str(d), "--algorithm", "exact", "--oracle-max-n", "4"]) == 4
    capsys.readouterr()

    # 1: verify reports non-planar result
    mv = tmp_path / "noop.mv"
    mv.write_text("move v1 after v2\n")
    assert main(["verify", str(d), str(mv)]) == 1
    capsys.readouterr()


def test_verification_pipeline_random(tmp_path, capsys):
    for seed in (1, 2):
        d = gen_random(10, seed, "almost-planar")
        f = tmp_path / f"r{seed}.cdr"
        f.write_text(format_drawing(d))
        m = tmp_path / f"r{seed}.mv"
        assert main(["untangle", str(f), "--algorithm", "one-side"]) == 0
        m.write_text(capsys.readouterr().out)
        assert main(["verify", str(f), str(m)]) == 0
        capsys.readouterr()
