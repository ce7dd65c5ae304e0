import json

import pytest

from gkgraph.cli import EXIT_CAP, EXIT_INVALID, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out.strip() else None, err


# -- classify ---------------------------------------------------------------------------

def test_classify_preset(capsys):
    code, doc, _ = run_json(capsys, "classify", "--preset", "PGL2_7")
    assert code == EXIT_OK and doc["no_3_coclique"] is True
    assert sorted(map(sorted, doc["certificate"]["cliques"])) == [[2, 3], [7]]


def test_classify_3d4_2(capsys):
    code, doc, _ = run_json(capsys, "classify", "--family", "exceptional", "--type", "3D4", "--q", "2")
    assert code == EXIT_OK
    assert doc["certificate"]["cliques"] == [[2, 3, 7], [13]]


def test_classify_orthodd(capsys):
    code, doc, _ = run_json(capsys, "classify", "--family", "orthodd", "--n", "7", "--q", "3")
    assert code == EXIT_OK and doc["no_3_coclique"] is False


def test_classify_text_and_dot(capsys):
    code, out, _ = run(capsys, "classify", "--preset", "J2", "--format", "text")
    assert code == EXIT_OK and "no 3-coclique: True" in out
    code, out, _ = run(capsys, "classify", "--family", "exceptional", "--type", "E8", "--q", "2", "--format", "dot")
    assert code == EXIT_OK and out.startswith("graph G {") and "41;" in out


def test_classify_descriptor_file(capsys, tmp_path):
    from gkgraph.descriptors import presets

    path = tmp_path / "d.json"
    path.write_text(presets("M10").to_json())
    code, doc, _ = run_json(capsys, "classify", "--descriptor", str(path))
    assert code == EXIT_OK and doc["group"] == "M10"


def test_classify_list_presets(capsys):
    code, out, _ = run(capsys, "classify", "--list-presets")
    assert code == EXIT_OK and "Aut(PSL2(8))" in out.splitlines()


def test_classify_reading_switch(capsys):
    base = ("classify", "--family", "unitary", "--n", "3", "--q", "32", "--even-index")
    assert run_json(capsys, *base)[1]["no_3_coclique"] is False
    assert run_json(capsys, *base, "--unitary-reading", "q-1")[1]["no_3_coclique"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ("classify",),
        ("classify", "--preset", "nonsense"),
        ("classify", "--family", "linear", "--n", "2", "--q", "6"),
        ("classify", "--family", "linear", "--n", "2", "--q", "8", "--even-index"),
        ("classify", "--family", "alternating", "--q", "3"),
        ("classify", "--preset", "J2", "--cap", "0"),
        ("classify", "--bogus-flag"),
        ("no-such-command",),
    ],
)
def test_invalid_input_exits_1(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_INVALID


def test_unsupported_exits_2(capsys):
    code, _, err = run(capsys, "classify", "--family", "linear", "--n", "3", "--q", "4", "--even-index", "--inndiag")
    assert code == EXIT_CAP and "error" in err


# -- realize / graph-check ----------------------------------------------------------------

def test_realize_pgl27(capsys):
    code, doc, _ = run_json(capsys, "realize", "--edges", "2-3", "--vertices", "7", "--partition", "7|2,3")
    assert code == EXIT_OK
    assert doc["group_order"] == 42 and doc["analytic_match"] and doc["enumerated_match"]


def test_realize_from_verdict(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", "--preset", "J2")
    path = tmp_path / "v.json"
    path.write_text(out)
    code, doc, _ = run_json(capsys, "realize", str(path), "--partition", "2,3,5|7")
    assert code == EXIT_OK and doc["analytic_match"]


def test_realize_refuses_a6(capsys):
    code, doc, _ = run_json(capsys, "realize", "--edges", "", "--vertices", "2,3,5")
    assert code == EXIT_INVALID
    assert doc["graph_check"]["certificate"]["obstruction"] == [2, 3, 5]


def test_realize_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO('{"vertices":[2,3,5],"edges":[[2,3],[3,5]]}'))
    code, doc, _ = run_json(capsys, "realize", "-", "--partition", "5|2,3")
    assert code == EXIT_OK and doc["group_order"] == 30


def test_graph_check(capsys, tmp_path):
    code, doc, _ = run_json(capsys, "graph-check", "--edges", "2-3,5-7")
    assert code == EXIT_OK and doc["realizable"] is True
    code, doc, _ = run_json(capsys, "oracle", "--psl2", "11")
    path = tmp_path / "g.json"
    path.write_text(json.dumps(doc["graph"]))
    code, doc, _ = run_json(capsys, "graph-check", str(path))
    assert doc["realizable"] is False and doc["certificate"]["obstruction"] == [2, 5, 11]


def test_bad_graph_file(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text("{not json")
    assert run(capsys, "graph-check", str(path))[0] == EXIT_INVALID
    assert run(capsys, "graph-check", str(tmp_path / "missing.json"))[0] == EXIT_INVALID


# -- oracle ----------------------------------------------------------------------------------

def test_oracle_alt9(capsys):
    code, out, _ = run(capsys, "oracle", "--alt", "9", "--format", "text")
    assert code == EXIT_OK and "two-clique partition: [2, 3, 5] | [7]" in out


def test_oracle_pgl27(capsys):
    code, doc, _ = run_json(capsys, "oracle", "--psl2", "7", "--ext", "pgl")
    assert doc["omega"] == [1, 2, 3, 4, 6, 7, 8]


def test_oracle_blueprint(capsys, tmp_path):
    code, out, _ = run(capsys, "realize", "--edges", "2-3", "--vertices", "7", "--partition", "7|2,3")
    path = tmp_path / "r.json"
    path.write_text(out)
    code, doc, _ = run_json(capsys, "oracle", "--blueprint", str(path))
    assert code == EXIT_OK and doc["omega"] == [1, 2, 3, 6, 7]


def test_oracle_cap(capsys):
    assert run(capsys, "oracle", "--psl2", "49", "--cap", "100")[0] == EXIT_CAP


def test_oracle_is_deterministic(capsys):
    a = run(capsys, "oracle", "--classical", "PSU3", "--q", "3")[1]
    b = run(capsys, "oracle", "--classical", "PSU3", "--q", "3")[1]
    assert a == b


# -- question-probe -------------------------------------------------------------------------

def test_question_probe_grotzsch(capsys):
    code, doc, _ = run_json(capsys, "question-probe", "--generator", "grotzsch-complement")
    assert code == EXIT_OK and doc["count"] == 1
    assert doc["candidates"][0]["vertices"] == 11
    assert doc["group_side"].startswith("open")


def test_question_probe_mycielski_matches_grotzsch(capsys):
    a = run_json(capsys, "question-probe", "--generator", "grotzsch-complement")[1]
    b = run_json(capsys, "question-probe", "--generator", "mycielski-complement-3")[1]
    assert a["candidates"][0]["graph"] == b["candidates"][0]["graph"]


def test_question_probe_bounds(capsys):
    assert run_json(capsys, "question-probe", "--bound", "4")[1]["count"] == 0
    assert run(capsys, "question-probe", "--bound", "7")[0] == EXIT_CAP
    assert run(capsys, "question-probe", "--generator", "petersen")[0] == EXIT_INVALID
