import json

import pytest

from qgrass.cli import main
from qgrass.repmod import rep_of_partition
from conftest import A2


@pytest.fixture
def files(tmp_path):
    specs = {"a1": {"vertices": 1, "arrows": []},
             "a2": {"vertices": 2, "arrows": [[1, 2]]},
             "a2rev": {"vertices": 2, "arrows": [[2, 1]]},
             "a3sink": {"vertices": 3, "arrows": [[1, 2], [3, 2]]},
             "cyclic": {"vertices": 2, "arrows": [[1, 2], [2, 1]]}}
    out = {}
    for name, spec in specs.items():
        out[name] = tmp_path / f"{name}.json"
        out[name].write_text(json.dumps(spec))
    out["garbage"] = tmp_path / "garbage.json"
    out["garbage"].write_text("not json")
    out["dir"] = tmp_path
    return out


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("quiver,total,sub,expected", [
    ("a1", "2", "1", "normalized: 1 + q^2"),
    ("a2", "2,1", "1,1", "normalized: 1 + q^2"),
    ("a2", "1,1", "1,0", "normalized: 0"),
])
def test_poincare_golden(capsys, files, quiver, total, sub, expected):
    code, out, _ = run(capsys, "poincare", "-q", files[quiver], "--total", total, "--sub", sub)
    assert code == 0 and out.splitlines()[0] == expected


def test_poincare_report(capsys, files):
    code, out, _ = run(capsys, "poincare", "-q", files["a1"], "--total", "4", "--sub", "2",
                       "--primes", "2,3")
    assert code == 0
    assert out.splitlines() == ["normalized: 1 + q^2 + 2q^4 + q^6 + q^8",
                                "raw: q^-6 + q^-4 + 2q^-2 + 1 + q^2", "shift: 6",
                                "partition: 1 | 1 | 1 | 1", "euler characteristic: 6",
                                "points over F_2: 35", "points over F_3: 130"]


def test_poincare_json(capsys, files):
    code, out, _ = run(capsys, "poincare", "-q", files["a2"], "--total", "2,1", "--sub", "1,1",
                       "--json")
    data = json.loads(out)
    assert code == 0 and data["normalized"] == "1 + q^2" and data["partition"] == "1,2 | 1"


def test_poincare_dual_canonical_file(capsys, files):
    element = {"weight": [1, 1], "terms": [{"word": "1,2", "coeff": "1"}]}
    path = files["dir"] / "elem.json"
    path.write_text(json.dumps(element))
    code, out, _ = run(capsys, "poincare", "-q", files["a2"], "--total", "1,1", "--sub", "0,1",
                       "--dual-canonical", path)
    assert code == 0 and out.startswith("normalized: 1\n")


def test_relabeling_printed(capsys, files):
    code, out, _ = run(capsys, "decompose", "-q", files["a2rev"], "--dim", "2,1")
    assert code == 0
    assert out.splitlines() == ["relabeled vertices (old->new): 1->2, 2->1", "1,2 | 1"]


def test_fallback_note(capsys, files):
    code, out, _ = run(capsys, "poincare", "-q", files["a3sink"], "--total", "1,1,1",
                       "--sub", "0,0,1")
    assert code == 0 and "dual canonical label: 2 | 1,3" in out and "note:" in out
    code, _, err = run(capsys, "poincare", "-q", files["a3sink"], "--total", "1,1,1",
                       "--sub", "0,0,1", "--strict")
    assert code == 2 and "OrderAssumptionFails" in err


def test_algebra_commands(capsys, files):
    assert run(capsys, "shuffle", "-q", files["a2"], "--words", "1,2|1")[1] == \
        "[1,2,1] + (q^-1 + q)·[1,1,2]\n"
    assert run(capsys, "lyndon", "-q", files["a2"])[1].splitlines() == \
        ["0,1 -> [2]", "1,0 -> [1]", "1,1 -> [1,2]"]
    assert run(capsys, "decompose", "-q", files["a2"], "--dim", "2,1")[1] == "1,2 | 1\n"
    assert run(capsys, "pbw", "-q", files["a2"], "--partition", "1,2|1")[1] == \
        "1,2 | 1: [1,2,1] + (q^-1 + q)·[1,1,2]\n"
    assert run(capsys, "dualcanonical", "-q", files["a2"], "--dim", "1,1")[1].splitlines() == \
        ["2 | 1: [2,1]", "1,2: [1,2]"]


def test_json_roundtrips(capsys, files):
    from qgrass.quiver import load_quiver
    from qgrass.shuffle import ShuffleElement, shuffle_words
    _, out, _ = run(capsys, "shuffle", "-q", files["a2"], "--words", "1,2|1", "--json")
    assert ShuffleElement.from_json(json.loads(out)) == shuffle_words((1, 2), (1,), A2)
    _, out, _ = run(capsys, "dualcanonical", "-q", files["a2"], "--dim", "2,1", "--json")
    for entry in json.loads(out)["elements"]:
        assert entry["element"]["weight"] == [2, 1]
        ShuffleElement.from_json(entry["element"])


def test_count_points(capsys, files):
    path = files["dir"] / "rep.json"
    path.write_text(json.dumps({**rep_of_partition(A2, ((1, 1), (1, 0))).to_json(), "prime": 3}))
    code, out, _ = run(capsys, "count-points", "-r", path, "--sub", "1,1")
    assert code == 0 and out == "4\n"


def test_verify(capsys, files):
    code, out, _ = run(capsys, "verify", "-q", files["a2"], "--max-height", "5",
                       "--primes", "2,3")
    assert code == 0 and "125 cases verified" in out
    assert run(capsys, "verify", "-q", files["a1"], "--max-height", "6", "--primes", "2,3")[0] == 0
    assert run(capsys, "verify", "-q", files["a3sink"], "--max-height", "3")[0] == 0


def test_verify_reports_mismatch(capsys, files, monkeypatch):
    import qgrass.cli as cli
    from qgrass.grass import PoincareResult
    from qgrass.laurent import ONE

    real = cli.poincare_for

    def wrong(*args, **kw):
        res = real(*args, **kw)
        return PoincareResult(res.raw, res.normalized + ONE, res.shift, res.nu, res.mu)

    monkeypatch.setattr(cli, "poincare_for", wrong)
    code, out, _ = run(capsys, "verify", "-q", files["a2"], "--max-height", "2")
    assert code == 1 and "MISMATCH total 0,2 sub 0,1" in out


@pytest.mark.parametrize("argv", [
    ["verify", "-q", "cyclic"],
    ["verify", "-q", "garbage"],
    ["poincare", "-q", "a2", "--total", "1,1", "--sub", "2,0"],
    ["poincare", "-q", "a2", "--total", "1,x", "--sub", "0,0"],
    ["poincare", "-q", "a2", "--total", "1,1,1", "--sub", "0,0,0"],
    ["shuffle", "-q", "a2", "--words", "1,3"],
    ["pbw", "-q", "a2"],
    ["verify", "-q", "a2", "--primes", "4"],
])
def test_input_errors(capsys, files, argv):
    argv = [str(files[a]) if a in files else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith(f"qgrass {argv[0]}:")


def test_malformed_quiver_names_error(capsys, files):
    _, _, err = run(capsys, "verify", "-q", files["garbage"])
    assert "MalformedSpec" in err
