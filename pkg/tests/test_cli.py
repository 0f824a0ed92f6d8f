import numpy as np
import pytest
from click.testing import CliRunner

from seedseg import (
    load_ppm,
    parse_labels,
    parse_mask,
    parse_model,
)
from seedseg.cli import main

from conftest import two_region_image

TRAIN_ARGS = [
    "--noise-p", "10", "--noise-runs", "5", "--hidden", "8",
    "--epochs", "30", "--lr", "0.5", "--seed", "3",
]


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def workspace(tmp_path, tmp_ppm):
    img = two_region_image(16, 16, (30, 30, 30), (220, 220, 220))
    return {
        "img": img,
        "img_path": str(tmp_ppm(img)),
        "dir": tmp_path,
    }


def train_model(runner, workspace, name="model.msf", extra=()):
    model_path = str(workspace["dir"] / name)
    result = runner.invoke(
        main,
        ["train", "-i", workspace["img_path"], "-o", model_path, *TRAIN_ARGS, *extra],
    )
    assert result.exit_code == 0, result.output
    return model_path


class TestTrainCommand:
    def test_writes_parseable_model(self, runner, workspace):
        model_path = train_model(runner, workspace)
        model = parse_model(open(model_path, "rb").read())
        assert model.hidden_size == 8

    def test_deterministic_output(self, runner, workspace):
        a = train_model(runner, workspace, "a.msf")
        b = train_model(runner, workspace, "b.msf")
        assert open(a, "rb").read() == open(b, "rb").read()

    def test_dump_samples(self, runner, workspace):
        dump = str(workspace["dir"] / "samples.tsv")
        train_model(runner, workspace, extra=["--dump-samples", dump])
        lines = open(dump).read().strip().split("\n")
        assert len(lines) > 100
        assert all(line.split("\t")[6] in "JR" for line in lines)

    def test_reports_progress(self, runner, workspace):
        model_path = str(workspace["dir"] / "m.msf")
        result = runner.invoke(
            main, ["train", "-i", workspace["img_path"], "-o", model_path, *TRAIN_ARGS]
        )
        assert "trained on" in result.output
        assert "final mean loss" in result.output


class TestAutoCommand:
    def test_two_region_segmentation(self, runner, workspace):
        model_path = train_model(runner, workspace)
        labels_path = str(workspace["dir"] / "out.smap")
        contours_path = str(workspace["dir"] / "contours.ppm")
        result = runner.invoke(main, [
            "auto", "-i", workspace["img_path"], "-m", model_path,
            "-o", labels_path, "--contours", contours_path, "--seed", "7",
        ])
        assert result.exit_code == 0, result.output
        lm = parse_labels(open(labels_path, "rb").read())
        assert lm.max_label == 2
        contours = load_ppm(open(contours_path, "rb").read())
        assert (contours.width, contours.height) == (16, 16)

    def test_deterministic(self, runner, workspace):
        model_path = train_model(runner, workspace)
        outputs = []
        for name in ("x.smap", "y.smap"):
            path = str(workspace["dir"] / name)
            result = runner.invoke(main, [
                "auto", "-i", workspace["img_path"], "-m", model_path,
                "-o", path, "--seed", "11",
            ])
            assert result.exit_code == 0, result.output
            outputs.append(open(path, "rb").read())
        assert outputs[0] == outputs[1]


class TestGrowCommand:
    def test_mask_contains_seed(self, runner, workspace):
        model_path = train_model(runner, workspace)
        mask_path = str(workspace["dir"] / "mask.pbm")
        result = runner.invoke(main, [
            "grow", "-i", workspace["img_path"], "-m", model_path,
            "--at", "12,7", "-o", mask_path,
        ])
        assert result.exit_code == 0, result.output
        width, height, mask = parse_mask(open(mask_path, "rb").read())
        assert (width, height) == (16, 16)
        assert (12, 7) in mask

    def test_bad_at_is_usage_error(self, runner, workspace):
        result = runner.invoke(main, [
            "grow", "-i", workspace["img_path"], "-m", workspace["img_path"],
            "--at", "12;7", "-o", "x.pbm",
        ])
        assert result.exit_code == 2

    def test_out_of_bounds_is_processing_error(self, runner, workspace):
        model_path = train_model(runner, workspace)
        result = runner.invoke(main, [
            "grow", "-i", workspace["img_path"], "-m", model_path,
            "--at", "99,99", "-o", str(workspace["dir"] / "m.pbm"),
        ])
        assert result.exit_code == 1
        assert "bounds" in result.output


class TestCorruptCommand:
    def test_writes_noisy_copy(self, runner, workspace):
        out_path = str(workspace["dir"] / "noisy.ppm")
        result = runner.invoke(main, [
            "corrupt", "-i", workspace["img_path"], "-o", out_path,
            "--noise-p", "10", "--seed", "5",
        ])
        assert result.exit_code == 0, result.output
        assert "damaged 25 pixels" in result.output  # floor(10 * 256 / 100)
        noisy = load_ppm(open(out_path, "rb").read())
        diff = np.any(noisy.pixels != workspace["img"].pixels, axis=2)
        assert int(diff.sum()) == 25

    def test_too_small_image_is_processing_error(self, runner, tmp_ppm, tmp_path):
        from conftest import make_image

        small = make_image(np.zeros((2, 2, 3), dtype=np.uint8))
        path = str(tmp_ppm(small, "small.ppm"))
        result = runner.invoke(main, [
            "corrupt", "-i", path, "-o", str(tmp_path / "o.ppm"), "--noise-p", "10",
        ])
        assert result.exit_code == 1
        assert "zero pixels" in result.output


class TestStatsCommand:
    def test_histogram(self, runner, workspace):
        model_path = train_model(runner, workspace)
        labels_path = str(workspace["dir"] / "out.smap")
        runner.invoke(main, [
            "auto", "-i", workspace["img_path"], "-m", model_path,
            "-o", labels_path, "--seed", "7",
        ])
        result = runner.invoke(main, ["stats", "-i", labels_path])
        assert result.exit_code == 0
        lines = result.output.strip().split("\n")
        assert "1\t128" in lines
        assert "2\t128" in lines
        assert lines[-1].startswith("# 2 segments")


class TestUsageErrors:
    def test_missing_required_flag(self, runner):
        result = runner.invoke(main, ["train", "-o", "m.msf"])
        assert result.exit_code == 2

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(main, [
            "train", "-i", str(tmp_path / "nope.ppm"), "-o", str(tmp_path / "m.msf"),
        ])
        assert result.exit_code == 2

    def test_malformed_image_is_processing_error(self, runner, tmp_path):
        bad = tmp_path / "bad.ppm"
        bad.write_bytes(b"P5\n1 1\n255\n\x00")
        result = runner.invoke(main, [
            "train", "-i", str(bad), "-o", str(tmp_path / "m.msf"),
        ])
        assert result.exit_code == 1
        assert "magic" in result.output

    def test_help_runs(self, runner):
        assert runner.invoke(main, ["--help"]).exit_code == 0
        for cmd in ("train", "auto", "grow", "corrupt", "stats", "serve"):
            assert runner.invoke(main, [cmd, "--help"]).exit_code == 0
