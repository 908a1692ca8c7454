import json

import pytest

from galoiskit.cli import main


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_b2_to_one_is_not_special_homogeneous(capsys, write):
    f = write("f.hom", "hom B2 1\n0 0\n")
    code, out, _ = run(capsys, "classify", "--ctx", "mon-gp", "--property", "special-homogeneous", f)
    assert code == 1
    assert "false" in out and "witness" in out


def test_classify_json(capsys, write):
    f = write("f.hom", "hom Z2 1\n0 0\n")
    code, out, _ = run(capsys, "classify", "--property", "central", "--bound", "4", "--json", f)
    data = json.loads(out)
    assert code == 0 and data["value"] is True and data["extra"]["witness_track"]["found"]


def test_classify_point_property(capsys, write):
    text = "hom K3 B2\n0 1 1\n\nhom B2 K3\n0 2\n"
    code, out, _ = run(capsys, "classify", "--property", "schreier", write("p.txt", text))
    assert code == 1 and "false" in out


def test_classify_object_property(capsys, write):
    code, _, _ = run(capsys, "classify", "--ctx", "mon-ab", "--property", "s-special", write("m.mon", "monoid 2 0\n0 1\n1 0\n"))
    assert code == 0


def test_complete_z2(capsys, write):
    code, out, _ = run(capsys, "complete", write("m.mon", "monoid 2 0\n0 1\n1 0\n"))
    assert code == 0 and "0 1\n1 0" in out


def test_complete_inconclusive(capsys, write):
    z5 = "monoid 5 0\n" + "\n".join(" ".join(str((a + b) % 5) for b in range(5)) for a in range(5)) + "\n"
    code, _, err = run(capsys, "complete", "--general", "--bound", "2", write("z5.mon", z5))
    assert code == 2 and "inconclusive" in err


def test_abelianize_and_ring_complete(capsys, write):
    code, out, _ = run(capsys, "abelianize", "--json", write("lz.mon", "monoid 3 0\n0 1 2\n1 1 1\n2 2 2\n"))
    assert code == 0 and json.loads(out)["object"]["size"] == 1
    code, out, _ = run(capsys, "ring-complete", "--json", write("b.sr", "semiring 2 0\n0 1\n1 1\n\n0 0\n0 1\n"))
    assert code == 0 and json.loads(out)["object"]["size"] == 1
    code, _, _ = run(capsys, "ring-complete", write("m.mon", "monoid 1 0\n0\n"))
    assert code == 3


def test_normalize_with_verification(capsys, write):
    code, out, _ = run(capsys, "normalize", "--ctx", "mon-ab", "--verify", "4", "--json", write("f.hom", "hom B2 1\n0 0\n"))
    data = json.loads(out)
    assert code == 0 and data["normal"] is True and data["universal"]["passed"]


def test_survey(capsys):
    code, out, _ = run(capsys, "survey", "normal-central-equivalence", "--ctx", "mon-gp", "--max-order", "3")
    assert code == 0 and "counterexamples: 0" in out


def test_survey_in_wrong_context_is_usage_error(capsys):
    code, _, _ = run(capsys, "survey", "gamma-ab-prop66", "--ctx", "mon-gp")
    assert code == 3


def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-order", "3", "--count", "--json")
    assert code == 0 and json.loads(out)["counts"] == {"1": 1, "2": 2, "3": 7}


def test_validate(capsys, write):
    code, out, _ = run(capsys, "validate", write("ok.txt", "monoid 2 0 M\n0 1\n1 1\n\nhom M B2\n0 1\n"))
    assert code == 0 and "1 algebra(s), 1 hom(s)" in out


def test_errors_and_usage(capsys, write):
    code, _, err = run(capsys, "validate", "/nonexistent/file")
    assert code == 1 and "no such file" in err
    code, out, _ = run(capsys, "validate", "--json", write("bad.txt", "monoid 2 0\n0 1\n1 x\n"))
    data = json.loads(out)
    assert code == 1 and (data["line"], data["column"]) == (3, 3)
    code, _, _ = run(capsys, "validate", write("law.txt", "monoid 2 1\n0 1\n1 1\n"))
    assert code == 1
    assert run(capsys, "classify", "--property", "bogus", "x")[0] == 3
    assert run(capsys, "frobnicate")[0] == 3
    assert run(capsys, "enumerate", "--no-such-flag")[0] == 3
