import io
import subprocess
import sys

import pytest

from graphjac.cli import run
from graphjac.gluing import cycles_path_embedding, fan_embedding, three_cycle_embedding
from graphjac.multigraph import format_graph
from graphjac.planar import format_embedding


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_jac_golden(data_dir):
    assert call("jac", data_dir / "k3k3_edge.graph") == (0, "Z/8\n", "")
    assert call("jac", data_dir / "k3k3_edge.graph", "--removed", "3")[1] == "Z/8\n"
    assert call("jac", data_dir / "k3k3_edge.graph", "--picard")[1] == "Z/8 x Z\n"


def test_snf_golden(data_dir):
    assert call("snf", data_dir / "example32.mat")[1] == "1 1 8\n"


def test_glue_golden():
    assert call("glue", "chain", 4, 6, 5, 3)[1] == "Z/310\n"
    assert call("glue", "cycles_path", 8, 10, 4)[1] == "Z/2 x Z/32\n"
    code, out, _ = call("glue", "doubled_cycle", 3, "--emit", "both")
    assert code == 0 and out.startswith("n 3\n") and out.endswith("\n")


def test_glue_vertex_files(data_dir):
    g = data_dir / "k3k3_edge.graph"
    assert call("glue", "vertex_glue", g, 0, g, 0)[1] == "Z/8 x Z/8\n"


@pytest.mark.parametrize("emb", [fan_embedding(5), cycles_path_embedding(8, 10, 4),
                                 three_cycle_embedding(14, 2, 3, 5)])
def test_jac_faces_matches_laplacian(tmp_path, emb):
    gfile, efile = tmp_path / "g.graph", tmp_path / "g.emb"
    gfile.write_text(format_graph(emb.graph))
    efile.write_text(format_embedding(emb))
    plain = call("jac", gfile)
    faces = call("jac", "--faces", gfile, efile)
    assert plain[0] == faces[0] == 0 and plain[1] == faces[1]


def test_four_face(data_dir):
    assert call("jac", "--faces", data_dir / "four_face.graph", data_dir / "four_face.emb")[1] == "Z/476\n"
    code, out, _ = call("faces", data_dir / "four_face.emb")
    assert code == 0 and len(out.splitlines()) == 5
    assert "face 0 len 7 outer" in call("faces", data_dir / "four_face.emb", "--outer", "0")[1]


def test_dual_round_trips_into_jac(tmp_path, data_dir):
    code, out, _ = call("dual", data_dir / "four_face.emb")
    assert code == 0 and out.startswith("n 5\n")
    dual = tmp_path / "dual.graph"
    dual.write_text(out)
    assert call("jac", dual)[1] == "Z/476\n"


def test_faces_mismatched_graph(data_dir):
    code, _, err = call("jac", "--faces", data_dir / "k3k3_edge.graph", data_dir / "four_face.emb")
    assert code == 1 and "different graph" in err
    assert call("jac", "--faces", data_dir / "k3k3_edge.graph")[0] == 1
    assert call("jac", data_dir / "k3k3_edge.graph", data_dir / "four_face.emb")[0] == 1


def test_chip(tmp_path, data_dir):
    d = tmp_path / "d.div"
    d.write_text("0 0 -1 1\n")
    g = data_dir / "k3k3_edge.graph"
    code, out, _ = call("chip", "reduce", g, d)
    assert code == 0 and len(out.split()) == 4
    assert sum(map(int, out.split())) == 0
    assert call("chip", "winnable", g, d)[1] == "not winnable\n"
    d.write_text("2 0 -1 0\n")
    assert call("chip", "winnable", g, d)[1] == "winnable\n"


def test_rotor_verify(tmp_path):
    s = tmp_path / "s.graph"
    s.write_text("n 3\ne 0 1\ne 1 2\ne 1 2\n")
    a = tmp_path / "s.attach"
    a.write_text("attach 0 0\nattach 1 1\nattach 2 2\n")
    code, out, _ = call("rotor", "verify", "bundled", s, a, "--tutte", "--iso")
    assert code == 0
    assert "groups_match=true" in out and "tutte_match=true" in out
    assert "graphs_isomorphic=false" in out
    code, out, _ = call("rotor", "verify", "bundled", s, a, "--mode", "edge-join")
    assert "mode=edge_join" in out and "tutte_match=skipped" in out


def test_rotor_file(tmp_path, data_dir):
    a = tmp_path / "s.attach"
    a.write_text("attach 0 0\nattach 1 1\nattach 2 1\n")
    code, out, _ = call("rotor", "verify", data_dir / "tutte.rotor", data_dir / "back4.graph", a)
    assert code == 0 and "groups_match=true" in out


def test_tutte(data_dir):
    assert call("tutte", data_dir / "k3k3_edge.graph")[1] == "0 1 1\n0 2 1\n1 0 1\n1 1 2\n2 0 2\n3 0 1\n"


def test_exit_codes(data_dir, tmp_path):
    assert call("jac", data_dir / "disconnected.graph")[0] == 2
    assert call("jac", data_dir / "bad.graph")[0] == 1
    assert call("jac", tmp_path / "missing.graph")[0] == 1
    assert call("bogus")[0] == 1
    assert call("glue", "fan", "5")[0] == 1
    assert call("glue", "three_cycle_chords", 10, 2, 3, 1)[0] == 1
    bad = tmp_path / "bad.emb"
    bad.write_text("n 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 2 3\ne 3 1\n"
                   "rot 0 0:0 1:0 2:0\nrot 1 0:1 3:0 5:1\nrot 2 1:1 3:1 4:0\nrot 3 2:1 4:1 5:0\n")
    assert call("faces", bad)[0] == 2


def test_help_documents_formats(capsys):
    assert run(["--help"]) == 0
    text = capsys.readouterr().out
    for word in ("graph", "matrix", "embedding", "divisor", "rotor", "attachment"):
        assert word in text


@pytest.mark.parametrize("name", ["k3k3_edge.graph", "four_face.graph", "four_face.emb",
                                  "example32.mat", "tutte.rotor", "back4.attach"])
def test_data_files_round_trip(data_dir, name):
    from graphjac.intlinalg import format_matrix, parse_matrix
    from graphjac.multigraph import parse_graph
    from graphjac.planar import parse_embedding
    from graphjac.rotor import format_attachment, format_rotor, parse_attachment, parse_rotor
    codecs = {".graph": (parse_graph, format_graph), ".emb": (parse_embedding, format_embedding),
              ".mat": (parse_matrix, format_matrix), ".rotor": (parse_rotor, format_rotor),
              ".attach": (parse_attachment, format_attachment)}
    text = (data_dir / name).read_text()
    parse, emit = codecs[name[name.rindex("."):]]
    assert emit(parse(text)) == text


def test_console_script_deterministic(data_dir):
    cmd = [sys.executable, "-m", "graphjac", "tutte", str(data_dir / "four_face.graph")]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
