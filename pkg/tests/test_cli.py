import json
import subprocess
import sys

import pytest

import decltrace.cli as cli
from decltrace.cli import main

MIXED_THREE = "activities a b c\nresp c a\nprec b a\n"
MIXED_FIVE = (
    "activities a b c d e\n"
    "resp b a\nresp c a\nresp d e\nresp e c\n"
    "prec a d\nprec b d\nprec d e\n"
)
PREC_SIX = "activities a b c d e f\nprec a c\nprec b c\nprec c d\nprec d e\nprec e d\nprec d f\n"


@pytest.fixture
def proc_file(tmp_path):
    def write(text, name="input.proc"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


class TestTraces:
    def test_text_output(self, proc_file, capsys):
        assert main(["traces", proc_file(MIXED_THREE)]) == 0
        assert capsys.readouterr().out == "-\nb\nb a\nb c a\nc b a\n"

    def test_json_output_encodes_the_same_traces(self, proc_file, capsys):
        assert main(["traces", "--format", "json", proc_file(MIXED_THREE)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == [[], ["b"], ["b", "a"], ["b", "c", "a"], ["c", "b", "a"]]

    def test_parallel_flag_does_not_change_bytes(self, proc_file, capsys):
        assert main(["traces", proc_file(MIXED_FIVE)]) == 0
        plain = capsys.readouterr().out
        assert main(["traces", "--parallel", proc_file(MIXED_FIVE)]) == 0
        assert capsys.readouterr().out == plain


class TestCount:
    def test_count_without_enumeration(self, proc_file, capsys):
        assert main(["count", proc_file(PREC_SIX)]) == 0
        assert capsys.readouterr().out == "7\n"

    def test_count_equals_traces_line_count(self, proc_file, capsys):
        for text in (MIXED_THREE, MIXED_FIVE, PREC_SIX, "activities a\n"):
            path = proc_file(text)
            assert main(["count", path]) == 0
            count = int(capsys.readouterr().out)
            assert main(["traces", path]) == 0
            assert count == len(capsys.readouterr().out.splitlines())


class TestPossim:
    def test_five_activity_example(self, proc_file, capsys):
        assert main(["possim", proc_file(MIXED_FIVE)]) == 0
        assert capsys.readouterr().out == (
            "{}\n"
            "{a}\n"
            "{a,b} b<a\n"
            "{a,c} c<a\n"
            "{a,b,c} b<a c<a\n"
        )


class TestClassify:
    @pytest.mark.parametrize(
        "text,expected",
        [
            (PREC_SIX, "precedence-only"),
            ("activities a b\nresp a b\n", "response-only"),
            ("activities a b\nsucc a b\n", "successor-only"),
            (MIXED_THREE, "general"),
            ("activities a\n", "precedence-only"),
        ],
    )
    def test_labels(self, proc_file, capsys, text, expected):
        assert main(["classify", proc_file(text)]) == 0
        assert capsys.readouterr().out == expected + "\n"


class TestCheck:
    def test_agreement(self, proc_file, capsys):
        assert main(["check", proc_file(MIXED_THREE)]) == 0
        assert capsys.readouterr().out == "ok: 5 traces\n"

    def test_size_limit(self, proc_file, capsys):
        names = " ".join("abcdefghi")
        assert main(["check", proc_file(f"activities {names}\n")]) == 3
        assert "error" in capsys.readouterr().err

    def test_mismatch_exits_two(self, proc_file, capsys, monkeypatch):
        monkeypatch.setattr(cli, "traces", lambda process, parallel=False: [])
        assert main(["check", proc_file(MIXED_THREE)]) == 2
        assert "mismatch" in capsys.readouterr().err


class TestFailureModes:
    def test_parse_error_exits_one(self, proc_file, capsys):
        assert main(["traces", proc_file("activities a b\nprec a a\n")]) == 1
        err = capsys.readouterr().err
        assert "line 2" in err

    def test_missing_file_exits_one(self, capsys):
        assert main(["count", "/nonexistent/path.proc"]) == 1
        assert "error" in capsys.readouterr().err

    def test_usage_error_exits_one(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["not-a-command"])
        assert info.value.code == 1


def test_module_entry_point(tmp_path):
    path = tmp_path / "p.proc"
    path.write_text(MIXED_THREE, encoding="utf-8")
    result = subprocess.run(
        [sys.executable, "-m", "decltrace", "count", str(path)],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == "5\n"
