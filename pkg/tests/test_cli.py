from __future__ import annotations

import json
from typing import TYPE_CHECKING, Any

import pytest

from strong_blocking_sets import (
    LinearCode,
    code_from_pointset,
    read_pointsets,
    write_code,
    write_pointsets,
)
from strong_blocking_sets.cli import main
from strong_blocking_sets.errors import InputValidationError
from strong_blocking_sets.formats import parse_pointsets
from strong_blocking_sets.reports import (
    SCHEMA_VERSION,
    BoundPayload,
    Report,
    SearchPayload,
    report_schema,
)

if TYPE_CHECKING:
    from pathlib import Path

    from strong_blocking_sets import Geometry


def run(
    capsys: pytest.CaptureFixture[str],
    *argv: str,
) -> tuple[int, dict[str, Any]]:
    code = main(["--quiet", *argv])
    out = capsys.readouterr().out
    if not out:
        return code, {}
    Report.model_validate_json(out)
    return code, json.loads(out)


class TestReports:
    def test_bound(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, report = run(capsys, "bound", "--k", "4")
        assert code == 0
        assert list(report) == ["command", "version", "inputs", "payload", "elapsed"]
        assert report["command"] == "bound"
        assert report["inputs"] == {"k": 4, "q": 2}
        assert report["payload"] == {"lower_bound": 9}

    def test_output_file(
        self,
        capsys: pytest.CaptureFixture[str],
        tmp_path: Path,
    ) -> None:
        path = tmp_path / "report.json"
        assert main(["--quiet", "--output", str(path), "bound", "--k", "5"]) == 0
        assert capsys.readouterr().out == ""
        report = json.loads(path.read_text(encoding="utf-8"))
        assert report["payload"]["lower_bound"] == 12

    def test_bad_field(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(capsys, "bound", "--k", "4", "--q", "4") == (2, {})

    def test_version(self, capsys: pytest.CaptureFixture[str]) -> None:
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0
        assert capsys.readouterr().out.strip()

    def test_missing_command(self) -> None:
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2

    def test_schema(self, capsys: pytest.CaptureFixture[str]) -> None:
        with pytest.raises(SystemExit) as info:
            main(["--schema"])
        assert info.value.code == 0
        schema = json.loads(capsys.readouterr().out)
        assert schema == json.loads(json.dumps(report_schema()))
        assert schema["$id"].endswith(f"v{SCHEMA_VERSION}")
        assert schema["required"] == ["command", "inputs", "payload", "elapsed"]
        assert {
            "VerifyPayload",
            "CodeCheckPayload",
            "ClassifyPayload",
            "SearchPayload",
            "QuadricPayload",
            "BoundPayload",
        } <= set(schema["$defs"])

    def test_payload_must_match_command(self) -> None:
        report = Report(
            command="bound",
            inputs={},
            payload=BoundPayload(lower_bound=9),
            elapsed=0.0,
        )
        assert report.model_dump(mode="json")["payload"] == {"lower_bound": 9}
        with pytest.raises(InputValidationError):
            Report(
                command="bound",
                inputs={},
                payload=SearchPayload(found=0, nodes_explored=0, exhausted=True),
                elapsed=0.0,
            )


class TestVerify:
    def test_quadric(
        self,
        capsys: pytest.CaptureFixture[str],
        tmp_path: Path,
        quadric,
    ) -> None:
        path = tmp_path / "quadric.txt"
        write_pointsets(path, [quadric])
        code, report = run(capsys, "verify", str(path))
        assert code == 0
        payload = report["payload"]
        assert payload["blocking"]["is_strong"]
        assert payload["lower_bound"] == 9
        assert payload["plane_sections"]["holds"]
        assert payload["contained_lines"]["holds"]

    def test_plane(
        self,
        capsys: pytest.CaptureFixture[str],
        tmp_path: Path,
        pg32: Geometry,
    ) -> None:
        path = tmp_path / "plane.txt"
        write_pointsets(path, [pg32.pointset(pg32.hyperplanes[0].mask)])
        code, report = run(capsys, "verify", str(path))
        assert code == 1
        assert len(report["payload"]["blocking"]["failing_hyperplanes"]) == 14
        assert "plane_sections" not in report["payload"]

    def test_malformed(
        self,
        capsys: pytest.CaptureFixture[str],
        tmp_path: Path,
    ) -> None:
        path = tmp_path / "bad.txt"
        path.write_text("pg 3 2\n0,0,0\n", encoding="utf-8")
        assert run(capsys, "verify", str(path)) == (2, {})
        assert run(capsys, "verify", str(tmp_path / "missing.txt")) == (2, {})

    def test_binary_file(
        self,
        capsys: pytest.CaptureFixture[str],
        tmp_path: Path,
    ) -> None:
        path = tmp_path / "binary.txt"
        path.write_bytes(b"pg 4 2\n1,0,0,0\n\xff\xfe,1\n")
        assert run(capsys, "verify", str(path)) == (2, {})
        assert run(capsys, "code-check", str(path)) == (2, {})


class TestCodeCheck:
    def test_not_minimal(
        self,
        capsys: pytest.CaptureFixture[str],
        tmp_path: Path,
    ) -> None:
        path = tmp_path / "gen.txt"
        write_code(path, LinearCode(generator=((1, 1, 0), (0, 0, 1)), q=2))
        code, report = run(capsys, "code-check", str(path))
        assert code == 1
        payload = report["payload"]
        assert payload["code"]["witnesses"][0]["codeword"]["vector"] == [1, 1, 1]
        assert payload["collapsed"] == [1]
        assert payload["agree"]

    def test_quadric_code(
        self,
        capsys: pytest.CaptureFixture[str],
        tmp_path: Path,
        quadric,
    ) -> None:
        path = tmp_path / "gen.txt"
        write_code(path, code_from_pointset(quadric))
        code, report = run(capsys, "code-check", str(path))
        assert code == 0
        assert report["payload"]["code"]["minimal"]
        assert report["payload"]["blocking"]["is_strong"]

    def test_degenerate(
        self,
        capsys: pytest.CaptureFixture[str],
        tmp_path: Path,
    ) -> None:
        path = tmp_path / "gen.txt"
        write_code(path, LinearCode(generator=((1, 0, 1, 0), (0, 1, 1, 0)), q=2))
        code, report = run(capsys, "code-check", str(path))
        assert code == 0
        assert report["payload"]["degenerate"]
        assert "blocking" not in report["payload"]


class TestClassify:
    def test_fano_plane(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, report = run(capsys, "classify", "--k", "3", "--size", "6")
        assert code == 0
        assert report["payload"]["group_order"] == 168
        assert report["payload"]["total"] == 7

    def test_golden(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, report = run(capsys, "classify", "--k", "4", "--size", "9", "--golden")
        assert code == 0
        golden = report["payload"]["golden"]
        assert golden["matched"]
        assert golden["configurations"]["quadric"] == 280

    def test_golden_needs_pg32(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(capsys, "classify", "--k", "3", "--size", "6", "--golden") == (2, {})

    def test_group_table_budget(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(capsys, "classify", "--k", "5", "--size", "1") == (3, {})


class TestSearch:
    def test_exhaustive(
        self,
        capsys: pytest.CaptureFixture[str],
        tmp_path: Path,
    ) -> None:
        path = tmp_path / "found.txt"
        code, report = run(
            capsys, "search", "--k", "3", "--size", "6", "--emit", str(path)
        )
        assert code == 0
        assert report["payload"] == {
            "found": 7,
            "nodes_explored": 7,
            "exhausted": True,
        }
        assert len(read_pointsets(path)) == 7

    def test_pruned_nonexistence(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, report = run(
            capsys, "search", "--k", "4", "--size", "8", "--mode", "pruned-exhaustive"
        )
        assert code == 0
        assert report["payload"]["found"] == 0
        assert report["payload"]["exhausted"]

    def test_pruned_budget(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, report = run(
            capsys,
            "search",
            "--k",
            "5",
            "--size",
            "12",
            "--mode",
            "pruned-exhaustive",
            "--budget",
            "1",
        )
        assert code == 3
        assert report["payload"]["found"] == 0
        assert not report["payload"]["exhausted"]

    def test_line_union_miss(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, report = run(
            capsys,
            "search",
            "--k",
            "3",
            "--size",
            "6",
            "--mode",
            "randomized-line-union",
            "--budget",
            "10",
        )
        assert code == 1
        assert not report["payload"]["exhausted"]

    def test_line_union_size(self, capsys: pytest.CaptureFixture[str]) -> None:
        argv = ("search", "--k", "4", "--size", "8", "--mode", "randomized-line-union")
        assert run(capsys, *argv) == (2, {})

    def test_budget(
        self,
        capsys: pytest.CaptureFixture[str],
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        monkeypatch.setenv("SBS_BUDGET_SUBSETS", "10")
        assert run(capsys, "search", "--k", "4", "--size", "9") == (3, {})

    def test_invalid_config(self, capsys: pytest.CaptureFixture[str]) -> None:
        argv = ("search", "--k", "5", "--size", "12", "--up-to-orbit")
        assert run(capsys, *argv) == (2, {})
        argv = ("search", "--k", "3", "--size", "6", "--seed", "-1")
        assert run(capsys, *argv) == (2, {})


class TestQuadric:
    def test_stdout_fixture(self, capsys: pytest.CaptureFixture[str], quadric) -> None:
        assert main(["--quiet", "quadric"]) == 0
        assert parse_pointsets(capsys.readouterr().out) == [quadric]

    def test_emit(
        self,
        capsys: pytest.CaptureFixture[str],
        tmp_path: Path,
    ) -> None:
        path = tmp_path / "q42.txt"
        code, report = run(capsys, "quadric", "--k", "5", "--emit", str(path))
        assert code == 0
        assert report["payload"]["size"] == 15
        assert report["payload"]["is_strong"]
        assert len(read_pointsets(path)[0]) == 15
