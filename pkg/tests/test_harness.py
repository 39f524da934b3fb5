import json
import math
import pytest

from lorentzmin.cli import main
from lorentzmin.errors import ConstraintViolationError, InvalidInputError
from lorentzmin.harness import (
    SurfaceSpec,
    dumps_json,
    export_samples,
    list_families,
    sweep,
    verify,
)

SPHERE_71 = {
    "family": "sphere_b",
    "curves": [{"family_id": "Ex7_1", "params": {"a": 1, "p": 3, "q": 1, "r": 2}}],
}
HYP_82 = {
    "family": "hyp_iii",
    "curves": [{
        "family_id": "Ex8_2",
        "params": {"a": 1 / math.sqrt(2), "b": 1 / math.sqrt(2),
                   "p": 1.1, "q": 1.5, "r": 1.1, "s": 1.5},
    }],
}
TRANSLATION = {
    "family": "translation",
    "curves": [{"name": "hyp6"}, {"name": "trig6"}],
}


class TestSpecValidation:
    def test_unknown_family(self):
        with pytest.raises(InvalidInputError):
            SurfaceSpec.from_dict({"family": "moebius"})

    def test_bad_arity(self):
        with pytest.raises(InvalidInputError):
            verify({"family": "sphere_b", "curves": [{"name": "hyp4"}, {"name": "hyp4"}]})

    def test_pair_family_counts_as_two(self):
        spec = SurfaceSpec.from_dict(HYP_82)
        report = verify(spec)
        assert report.surface["constructed"]

    def test_unknown_spec_key(self):
        with pytest.raises(InvalidInputError):
            SurfaceSpec.from_dict({"family": "sphere_b", "grdi": [3, 3]})

    def test_unknown_tolerance_key(self):
        with pytest.raises(InvalidInputError):
            SurfaceSpec.from_dict({"family": "sphere_b", "tolerances": {"bogus": 1.0}})

    def test_bad_domain_shape(self):
        with pytest.raises(InvalidInputError):
            SurfaceSpec.from_dict({"family": "sphere_b", "domain": [0, 1]})

    def test_unknown_builtin_curve(self):
        with pytest.raises(InvalidInputError):
            verify({"family": "sphere_b", "curves": [{"name": "nope"}]})

    def test_constraint_violation_propagates(self):
        bad = {"family": "sphere_c",
               "curves": [{"family_id": "Ex7_2", "params": {"p": 1.6, "q": 1.5, "r": 1.0}}]}
        with pytest.raises(ConstraintViolationError):
            verify(bad)


class TestVerify:
    def test_sphere_example_passes(self):
        report = verify(SPHERE_71)
        assert report.overall_pass
        ids = {c.condition_id for c in report.checks}
        assert {"lightcone-z", "speed-z", "acc-null-z", "jerk-nonzero-z",
                "quadric", "metric-match", "metric-null-form", "minimality",
                "curvature", "xi-recovery", "gauss-equation", "fd-partials",
                "pde-xy", "pde-yy", "tangency", "frame-normalization"} <= ids
        assert report.curve_validations[0].ok

    def test_de_sitter_control_fails_minimality_only(self):
        report = verify({"family": "de_sitter_control"})
        assert not report.overall_pass
        assert report.failed_checks() == ["minimality"]

    def test_premise_failure_skips_construction(self):
        report = verify({"family": "sphere_b", "curves": [{"name": "trig3"}]})
        assert not report.overall_pass
        assert not report.surface["constructed"]
        # trig3 is null, so its speed is 0 instead of 2
        assert "speed-z" in report.failed_checks()

    def test_translation_passes(self):
        report = verify(TRANSLATION)
        assert report.overall_pass
        assert "pairing-nonzero" in {c.condition_id for c in report.checks}

    def test_pairing_sign_change_reported_not_thrown(self):
        # 1 - sinh x sinh y changes sign on the default [-1,1]^2 domain
        report = verify({"family": "translation",
                         "curves": [{"name": "hyp4"}, {"name": "hyp4_mirror"}]})
        assert not report.overall_pass
        assert "pairing-nonzero" in report.failed_checks()
        assert not report.surface["constructed"]

    def test_alt_pairing_descriptor(self):
        # the mismatched-partner variant leaves the light cone, which the
        # premise phase reports without throwing
        report = verify({
            "family": "hyp_ii",
            "curves": [{"family_id": "Ex8_1",
                        "params": {"a": 1, "b": 1.2, "p": 1.2, "q": 1.5},
                        "alt_pairing": True}],
        })
        assert not report.overall_pass
        assert "lightcone-z" in report.failed_checks()
        assert not report.surface["constructed"]

    def test_geodesic_boundary_flagged_and_failed(self):
        report = verify({"family": "sphere_b", "curves": [{"name": "quadratic3"}]})
        assert report.surface["constructed"]
        assert "totally-geodesic-boundary" in report.surface["flags"]
        assert report.failed_checks() == ["jerk-nonzero-z"]

    def test_tolerance_override(self):
        spec = dict(SPHERE_71)
        spec["tolerances"] = {"minimality": 1e-30}
        report = verify(spec)
        assert "minimality" in report.failed_checks()

    def test_determinism_excluding_timings(self):
        a = verify(SPHERE_71).to_dict(include_timings=False)
        b = verify(SPHERE_71).to_dict(include_timings=False)
        assert dumps_json(a) == dumps_json(b)

    def test_report_roundtrip_idempotent(self):
        text = dumps_json(verify(TRANSLATION).to_dict(include_timings=False))
        again = dumps_json(json.loads(text))
        assert text == again

    def test_floats_in_scientific_17_digits(self):
        text = dumps_json({"v": 0.1})
        assert text == '{"v":1.00000000000000006e-01}'
        assert json.loads(text)["v"] == 0.1

    def test_env_tolerance_override(self, monkeypatch):
        monkeypatch.setenv("LMS_DEFAULT_TOL", "1e-3")
        report = verify(SPHERE_71)
        by_id = {c.condition_id: c for c in report.checks}
        assert by_id["quadric"].tol == 1e-3
        assert by_id["lightcone-z"].tol == 1e-3
        assert by_id["minimality"].tol == 1e-6  # other tiers untouched

    def test_env_tolerance_invalid(self, monkeypatch):
        monkeypatch.setenv("LMS_DEFAULT_TOL", "banana")
        with pytest.raises(ValueError):
            verify(SPHERE_71)


class TestSweep:
    def test_ex71_sorted_box(self):
        summary = sweep("Ex7_1", sampler_config={"grid": [7, 7]}, n=50, rng_seed=3)
        assert summary["valid"] == 50
        assert summary["passed"] == 50
        assert summary["failed"] == 0

    def test_deterministic(self):
        a = sweep("Ex7_1", n=4, rng_seed=5)
        b = sweep("Ex7_1", n=4, rng_seed=5)
        assert dumps_json(a) == dumps_json(b)

    def test_ex72_chain_has_no_valid_draws(self):
        summary = sweep("Ex7_2", n=500, rng_seed=1)
        assert summary["valid"] == 0
        assert summary["invalid"] == 500

    def test_ex82_box_around_reference_values(self):
        summary = sweep("Ex8_2", sampler_config={"grid": [7, 7]}, n=50, rng_seed=2)
        assert summary["valid"] + summary["invalid"] == 50
        assert summary["failed"] == 0
        assert summary["valid"] >= 10

    def test_bad_family(self):
        with pytest.raises(InvalidInputError):
            sweep("Ex0_0", n=1)


class TestExport:
    def test_csv_contract(self, tmp_path):
        out = tmp_path / "surface.csv"
        spec = {"family": "hyp_ii",
                "curves": [{"family_id": "Ex8_1",
                            "params": {"a": 1, "b": 1.1, "p": 1, "q": 1.5}}]}
        export_samples(spec, str(out), "csv")
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "x,y," + ",".join(f"L_{i}" for i in range(1, 9)) + ",residual"
        assert len(lines) == 1 + 21 * 21

    def test_obj_quad_mesh(self, tmp_path):
        out = tmp_path / "plane.obj"
        spec = dict(TRANSLATION, grid=[5, 4])
        export_samples(spec, str(out), "obj")
        lines = out.read_text().strip().split("\n")
        vs = [l for l in lines if l.startswith("v ")]
        fs = [l for l in lines if l.startswith("f ")]
        assert len(vs) == 20
        assert len(fs) == 4 * 3
        assert all(len(l.split()) == 5 for l in fs)

    def test_bad_format(self, tmp_path):
        with pytest.raises(InvalidInputError):
            export_samples(TRANSLATION, str(tmp_path / "x"), "stl")


class TestShippedSpecs:
    def test_spec_files_parse_and_resolve(self):
        import pathlib

        spec_dir = pathlib.Path(__file__).resolve().parent.parent / "specs"
        paths = sorted(spec_dir.glob("*.json"))
        assert len(paths) == 6
        families = set()
        for path in paths:
            spec = SurfaceSpec.from_dict(json.loads(path.read_text()))
            families.add(spec.family)
        assert families == {"translation", "sphere_b", "sphere_c",
                            "hyp_ii", "hyp_iii", "de_sitter_control"}


class TestListFamilies:
    def test_catalog_shape(self):
        cat = list_families()
        assert set(cat["surface_families"]) == {
            "translation", "sphere_b", "sphere_c", "hyp_ii", "hyp_iii",
            "de_sitter_control"}
        assert cat["curve_families"]["Ex7_1"]["params"] == ["a", "p", "q", "r"]
        assert "hyp4" in cat["builtin_curves"]


class TestCli:
    def _write_spec(self, tmp_path, spec):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(spec))
        return str(path)

    def test_verify_pass_exit_0(self, tmp_path, capsys):
        code = main(["verify", "--spec", self._write_spec(tmp_path, SPHERE_71)])
        assert code == 0
        out = capsys.readouterr().out
        assert json.loads(out)["overall_pass"] is True

    def test_verify_failure_exit_1(self, tmp_path):
        spec = self._write_spec(tmp_path, {"family": "de_sitter_control"})
        assert main(["verify", "--spec", spec]) == 1

    def test_verify_json_out(self, tmp_path):
        report_path = tmp_path / "report.json"
        spec = self._write_spec(tmp_path, TRANSLATION)
        code = main(["verify", "--spec", spec, "--json-out", str(report_path)])
        assert code == 0
        assert json.loads(report_path.read_text())["overall_pass"] is True

    def test_invalid_spec_exit_2(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"family": "nope"}')
        assert main(["verify", "--spec", str(path)]) == 2

    def test_missing_file_exit_2(self):
        assert main(["verify", "--spec", "/nonexistent.json"]) == 2

    def test_malformed_json_exit_2(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert main(["verify", "--spec", str(path)]) == 2

    def test_bad_usage_exit_2(self):
        assert main(["verify"]) == 2

    def test_sweep_exit_0(self, capsys):
        assert main(["sweep", "--family", "Ex7_2", "--n", "50", "--seed", "0"]) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["valid"] == 0

    def test_export_exit_0(self, tmp_path):
        spec = self._write_spec(tmp_path, TRANSLATION)
        out = tmp_path / "mesh.csv"
        assert main(["export", "--spec", spec, "--format", "csv",
                     "--out", str(out)]) == 0
        assert out.exists()

    def test_export_unwritable_exit_2(self, tmp_path):
        spec = self._write_spec(tmp_path, TRANSLATION)
        assert main(["export", "--spec", spec, "--format", "csv",
                     "--out", "/nonexistent_dir/mesh.csv"]) == 2

    def test_list_families_exit_0(self, capsys):
        assert main(["list-families"]) == 0
        assert "surface_families" in json.loads(capsys.readouterr().out)
