import json
import subprocess
import sys

import pytest

from ncflips.cli import main
from ncflips.core import Tree, hull_path
from ncflips.families import flip_family, hernando_example
from ncflips.flipmodel import FlipSequence, verify_sequence


@pytest.fixture
def pair_dir(tmp_path):
    assert main(["gen", "--family", "flip", "--k", "1", "--out-dir", str(tmp_path)]) == 0
    return tmp_path


def write_tree(path, tree):
    path.write_text(tree.dumps())
    return str(path)


class TestGen:
    def test_files(self, pair_dir):
        t1, t2 = flip_family(1)
        assert Tree.loads((pair_dir / "t1.json").read_text()) == t1
        assert Tree.loads((pair_dir / "t2.json").read_text()) == t2

    def test_stdout(self, capsys):
        assert main(["gen", "--family", "hernando"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert [Tree.loads(s) for s in lines] == list(hernando_example())

    def test_bad_k(self, capsys):
        assert main(["gen", "--family", "ncflip", "--k", "0"]) == 2


class TestTransform:
    def test_round_trip(self, pair_dir, capsys):
        out = pair_dir / "seq.json"
        code = main(["transform", str(pair_dir / "t1.json"), str(pair_dir / "t2.json"), "-o", str(out)])
        assert code == 0
        assert json.loads(capsys.readouterr().out) == {"delta": 3, "length": 5, "bound_check": True}
        data = json.loads(out.read_text())
        seq = FlipSequence.from_json(data["sequence"])
        assert verify_sequence(seq, flip_family(1)[1])
        assert main(["verify", str(out), "--target", str(pair_dir / "t2.json")]) == 0
        assert json.loads(capsys.readouterr().out)["ok"] is True

    def test_ncflip(self, pair_dir, capsys):
        code = main(["transform", str(pair_dir / "t1.json"), str(pair_dir / "t2.json"), "--model", "ncflip"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["sequence"]["model"] == "ncflip"
        assert data["certificate"]["bound_check"] is True

    def test_mismatch(self, tmp_path):
        a = write_tree(tmp_path / "a.json", hull_path(5))
        b = write_tree(tmp_path / "b.json", hull_path(6))
        assert main(["transform", a, b]) == 3

    def test_unreadable(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["transform", str(bad), str(bad)]) == 2
        assert main(["transform", str(tmp_path / "missing.json"), str(bad)]) == 2

    def test_crossing_tree(self, tmp_path):
        bad = tmp_path / "x.json"
        bad.write_text('{"n": 4, "edges": [[0, 2], [1, 3], [0, 1]]}')
        assert main(["transform", str(bad), str(bad)]) == 2


class TestVerify:
    def test_wrong_target(self, pair_dir, capsys):
        out = pair_dir / "seq.json"
        main(["transform", str(pair_dir / "t1.json"), str(pair_dir / "t2.json"), "-o", str(out)])
        capsys.readouterr()
        assert main(["verify", str(out), "--target", str(pair_dir / "t1.json")]) == 1
        assert json.loads(capsys.readouterr().out)["ok"] is False

    def test_bare_sequence_without_target(self, tmp_path, capsys):
        seq = FlipSequence.from_json({
            "model": "flip",
            "start": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]},
            "steps": [{"remove": [1, 2], "add": [0, 2]}],
        })
        path = tmp_path / "s.json"
        path.write_text(seq.dumps())
        assert main(["verify", str(path)]) == 0
        assert json.loads(capsys.readouterr().out) == {
            "ok": True, "length": 1, "failed_index": None, "reason": None,
        }

    def test_invalid_step(self, tmp_path, capsys):
        path = tmp_path / "s.json"
        path.write_text(json.dumps({
            "model": "rotation",
            "start": {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]},
            "steps": [{"remove": [2, 3], "add": [1, 4]}],
        }))
        assert main(["verify", str(path)]) == 1
        out = json.loads(capsys.readouterr().out)
        assert out["failed_index"] == 0 and "ModelViolation" in out["reason"]


class TestOracleCommands:
    def test_distance(self, pair_dir, capsys):
        assert main(["distance", str(pair_dir / "t1.json"), str(pair_dir / "t2.json")]) == 0
        assert capsys.readouterr().out.strip() == "5"

    def test_distance_cap(self, pair_dir):
        assert main(["distance", str(pair_dir / "t1.json"), str(pair_dir / "t2.json"), "--cap", "6"]) == 2

    def test_enumerate(self, capsys):
        assert main(["enumerate", "10", "--count-only"]) == 0
        assert capsys.readouterr().out.strip() == "246675"
        assert main(["enumerate", "4"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 12 and len({Tree.loads(s) for s in lines}) == 12


class TestOtherCommands:
    def test_render_sequence(self, pair_dir, capsys):
        seq = pair_dir / "seq.json"
        main(["transform", str(pair_dir / "t1.json"), str(pair_dir / "t2.json"), "-o", str(seq)])
        capsys.readouterr()
        frames = pair_dir / "frames"
        assert main(["render", str(seq), "-o", str(frames)]) == 0
        assert capsys.readouterr().out.strip() == "6"
        assert sorted(p.name for p in frames.iterdir())[0] == "frame_000.svg"

    def test_render_pair(self, pair_dir, capsys):
        frames = pair_dir / "pair"
        assert main(["render", str(pair_dir / "t1.json"), str(pair_dir / "t2.json"), "-o", str(frames),
                     "--size", "200"]) == 0
        svg = (frames / "frame_000.svg").read_text()
        assert 'width="200"' in svg

    def test_bench(self, capsys):
        assert main(["bench", "--sizes", "8", "12", "--pairs", "3"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert [r["n"] for r in report["rows"]] == [8, 12]
        assert report["all_within_c"] is True

    def test_analyze(self, pair_dir, capsys):
        assert main(["analyze", str(pair_dir / "t1.json"), str(pair_dir / "t2.json")]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["delta"] == 3 and report["nice"] is True
        assert report["tau_extremal"]["tree"] in (1, 2)
        assert {s["classification"] for s in report["sides"]} <= {"Plain", "Good", "VeryGood"}


def test_module_entry_point(pair_dir):
    out = subprocess.run(
        [sys.executable, "-m", "ncflips", "distance", str(pair_dir / "t1.json"), str(pair_dir / "t2.json")],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "5"


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2
