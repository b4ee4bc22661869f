"""Unit tests for the command-line surface: subcommands, exit codes,
deterministic output."""

import json
import random

import pytest

from homotopes.cli import main
from homotopes.families import sample_in_subspace, sym_space
from homotopes.scalars import Q


def run(tmp_path, *argv):
    out = tmp_path / "out.json"
    code = main(list(argv) + ["--out", str(out)])
    text = out.read_text() if out.exists() else ""
    return code, text


class TestAxioms:
    def test_pass_exit_zero(self, tmp_path):
        code, text = run(tmp_path, "axioms", "--family", "1.a",
                         "--p", "2", "--q", "2", "--samples", "4", "--seed", "1")
        assert code == 0
        assert json.loads(text)["pass"] is True

    def test_unknown_family_exit_two(self, tmp_path):
        code, _ = run(tmp_path, "axioms", "--family", "bogus", "--p", "1", "--q", "1")
        assert code == 2

    def test_missing_sizes_exit_two(self, tmp_path):
        code, _ = run(tmp_path, "axioms", "--family", "1.a")
        assert code == 2

    def test_zero_samples(self, tmp_path):
        code, text = run(tmp_path, "axioms", "--family", "2.a", "--n", "2",
                         "--samples", "0")
        assert code == 0
        assert json.loads(text)["results"] == []


class TestTable:
    def test_verified_exit_zero(self, tmp_path):
        code, text = run(tmp_path, "table", "--construction", "quat2",
                         "--n", "1", "--samples", "2", "--seed", "0")
        assert code == 0
        assert json.loads(text)["verified"] is True

    def test_bad_size_exit_two(self, tmp_path):
        code, _ = run(tmp_path, "table", "--construction", "quat2", "--n", "0")
        assert code == 2

    def test_markdown(self, tmp_path):
        code, text = run(tmp_path, "table", "--construction", "proj",
                         "--p", "1", "--q", "1", "--samples", "2",
                         "--format", "md")
        assert code == 0
        assert text.startswith("#")


class TestEigenspaces:
    def test_quat1_dims(self, tmp_path):
        code, text = run(tmp_path, "eigenspaces", "--construction", "quat1",
                         "--n", "1")
        assert code == 0
        assert json.loads(text)["dims"] == [1, 2, 0, 1]

    def test_quat2_dims(self, tmp_path):
        code, text = run(tmp_path, "eigenspaces", "--construction", "quat2",
                         "--n", "1")
        assert code == 0
        assert json.loads(text)["dims"] == [3, 1, 3, 1]


class TestGroup:
    @pytest.mark.parametrize("check", ["axioms", "tangent", "membership"])
    def test_checks(self, tmp_path, check):
        code, text = run(tmp_path, "group", "--check", check, "--n", "2",
                         "--samples", "3", "--seed", "2")
        assert code == 0
        assert json.loads(text)["pass"] is True


class TestNormalForm:
    def test_symmetric(self, tmp_path):
        m = sample_in_subspace(sym_space(2, Q), random.Random(5))
        inp = tmp_path / "m.json"
        inp.write_text(json.dumps(m.to_json()))
        code, text = run(tmp_path, "normal-form", "--kind", "symmetric",
                         "--input", str(inp))
        assert code == 0
        data = json.loads(text)
        assert data["verified"] is True and data["intertwines"] is True

    def test_missing_file_exit_two(self, tmp_path):
        code, _ = run(tmp_path, "normal-form", "--kind", "symmetric",
                      "--input", str(tmp_path / "nope.json"))
        assert code == 2


class TestListFamilies:
    def test_json(self, tmp_path):
        code, text = run(tmp_path, "list-families")
        assert code == 0
        data = json.loads(text)
        assert len(data["families"]) == 50
        assert data["constructions"] == ["proj", "siegel", "quat1", "quat2"]


class TestDeterminism:
    def test_byte_identical_repeats(self, tmp_path):
        outputs = []
        for rep in range(2):
            code, text = run(tmp_path, "axioms", "--family", "3.a", "--n", "2",
                             "--samples", "4", "--seed", "9")
            assert code == 0
            outputs.append(text)
        assert outputs[0] == outputs[1]
