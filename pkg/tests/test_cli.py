import json

import pytest

from cycindex import sign_character
from cycindex.catalog import default_catalog, load_catalog
from cycindex.cli import (EXIT_CAP, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE,
                          JobSpec, main, run, run_suite)
from cycindex.grammar import SpecError, parse_character, parse_group


class TestGroupGrammar:
    @pytest.mark.parametrize("expr,order,degree", [
        ("S(3)", 6, 3), ("A(4)", 12, 4), ("C(5)", 5, 5), ("D(4)", 8, 4),
        ("gen[4]{(1 2)(3 4),(1 3)(2 4)}", 4, 4),
        ("product(S(2),S(2))", 4, 4),
        ("wreath(S(2),S(2))", 8, 4),
    ])
    def test_parse(self, expr, order, degree):
        spec = parse_group(expr)
        assert spec.group.order == order and spec.group.degree == degree
        assert spec.text == expr

    def test_nested_expression(self):
        spec = parse_group("product(wreath(S(2),S(2)),C(3))")
        assert spec.kind == "product"
        assert spec.group.order == 8 * 3 and spec.group.degree == 7

    def test_whitespace_tolerated(self):
        assert parse_group("  S(3) ").group.order == 6

    @pytest.mark.parametrize("bad", [
        "", "S(3", "E(3)", "S(-1)", "gen[3]{(1 4)}", "product(S(2))",
        "wreath(S(2),S(2),S(2))",
    ])
    def test_rejects(self, bad):
        with pytest.raises(SpecError):
            parse_group(bad)

    def test_empty_generator_list_is_trivial_group(self):
        spec = parse_group("gen[2]{}")
        assert spec.group.order == 1 and spec.group.degree == 2


class TestCharacterGrammar:
    def test_unit_sign_index(self):
        spec = parse_group("S(3)")
        assert parse_character("unit", spec).is_unit()
        assert parse_character("sign", spec) == sign_character(spec.group)
        assert parse_character("index:1", spec) == sign_character(spec.group)

    def test_vals_selector(self):
        spec = parse_group("C(4)")
        chi = parse_character("vals{(1 2 3 4):1}", spec)
        assert chi.image_order() == 4

    def test_vals_ambiguous(self):
        spec = parse_group("gen[4]{(1 2)(3 4),(1 3)(2 4)}")
        with pytest.raises(SpecError, match="match"):
            parse_character("vals{(1 2)(3 4):0}", spec)

    def test_vals_inconsistent(self):
        spec = parse_group("S(3)")
        with pytest.raises(SpecError, match="extend"):
            parse_character("vals{(1 2 3):1}", spec)

    def test_compound_selector_on_product(self):
        spec = parse_group("product(S(2),S(2))")
        chi = parse_character("sign(x)unit", spec)
        from cycindex import perm_from_cycles
        assert chi.value(perm_from_cycles("(1 2)", 4)) == -1
        assert chi.value(perm_from_cycles("(3 4)", 4)) == 1

    def test_index_out_of_range(self):
        with pytest.raises(SpecError, match="out of range"):
            parse_character("index:9", parse_group("S(3)"))

    def test_garbage(self):
        with pytest.raises(SpecError):
            parse_character("frobenius", parse_group("S(3)"))


class TestRun:
    def test_cycle_index_text(self):
        code, out = run(JobSpec("cycle-index", "S(3)", "sign"))
        assert code == EXIT_OK
        assert out == "(1/6)*p1^3 - (1/2)*p1*p2 + (1/3)*p3\n"

    def test_characters_listing(self):
        code, out = run(JobSpec("characters", "C(4)"))
        assert code == EXIT_OK
        assert "4 linear character(s)" in out and "Q(zeta_4)" in out

    def test_gn(self):
        code, out = run(JobSpec("gn", "C(4)", "index:1", n=1))
        assert code == EXIT_OK
        assert out == "x0^3*x1 + x0^2*x1^2 + x0*x1^3\n"

    def test_orbits_tsv(self):
        code, out = run(JobSpec("orbits", "S(3)", "sign", n=1))
        assert code == EXIT_OK
        assert out.splitlines()[0] == "rep\tsize\tstab_order\ttau_H\th_len\tchi_orbit"

    def test_verify_ok(self):
        code, out = run(JobSpec("verify", "D(4)", "index:1", n=2))
        assert code == EXIT_OK

    def test_verify_json(self):
        code, out = run(JobSpec("verify", "C(4)", "index:1", n=1, fmt="json"))
        assert code == EXIT_OK
        assert json.loads(out)["equal"] is True

    def test_tampered_table_is_caught(self):
        code, out = run(JobSpec("verify", "C(4)", "index:1", n=1, tamper=True))
        assert code == EXIT_MISMATCH and "MISMATCH" in out

    def test_missing_n_is_usage_error(self):
        code, out = run(JobSpec("verify", "S(3)", "unit"))
        assert code == EXIT_USAGE and "usage error" in out

    def test_bad_group_is_usage_error(self):
        code, out = run(JobSpec("cycle-index", "Q(8)"))
        assert code == EXIT_USAGE

    def test_cap_exit_code(self):
        from cycindex.caps import Caps
        code, out = run(JobSpec("orbits", "S(4)", "unit", n=3,
                                caps=Caps(orbit_work=10)))
        assert code == EXIT_CAP and "cap exceeded" in out

    def test_verify_basis(self):
        code, out = run(JobSpec("verify-basis", "C(4)", "index:1", n=1))
        assert code == EXIT_OK
        assert json.loads(out)["rank"] == 3

    def test_verify_product(self):
        code, out = run(JobSpec("verify-product", "S(3)", "sign",
                                group2_expr="C(4)", char2_sel="index:1", n=1))
        assert code == EXIT_OK and "ok" in out

    def test_verify_plethysm_flagship(self):
        code, out = run(JobSpec("verify-plethysm", "S(2)", "unit",
                                group2_expr="S(2)", char2_sel="unit"))
        assert code == EXIT_OK and "ok" in out


class TestSuite:
    def test_small_catalog_passes(self):
        from cycindex.caps import caps_from_env
        jobs = [
            {"command": "verify", "group": "S(3)", "char": "sign", "n": 2},
            {"command": "verify", "group": "C(4)", "char": "index:1", "n": 1},
            {"command": "verify-basis", "group": "S(2)", "char": "sign", "n": 1},
        ]
        code, out = run_suite(jobs, caps_from_env())
        assert code == EXIT_OK
        assert out.rstrip().endswith("suite: 3/3 jobs passed")

    def test_empty_catalog(self):
        from cycindex.caps import caps_from_env
        code, out = run_suite([], caps_from_env())
        assert code == EXIT_USAGE

    def test_tampered_job_fails_whole_suite(self):
        from cycindex.caps import caps_from_env
        jobs = [
            {"command": "verify", "group": "S(3)", "char": "sign", "n": 1},
            {"command": "verify", "group": "C(4)", "char": "index:1", "n": 1,
             "tamper_character": True},
        ]
        code, out = run_suite(jobs, caps_from_env())
        assert code == EXIT_MISMATCH
        assert "1/2 jobs passed" in out

    def test_parallel_output_matches_serial(self):
        from cycindex.caps import caps_from_env
        jobs = default_catalog()[:12]
        serial = run_suite(jobs, caps_from_env(), workers=1)
        parallel = run_suite(jobs, caps_from_env(), workers=4)
        assert serial == parallel

    def test_load_catalog(self, tmp_path):
        path = tmp_path / "catalog.json"
        path.write_text(json.dumps([
            {"command": "verify", "group": "S(3)", "char": "unit", "n": 1}]))
        jobs = load_catalog(str(path))
        assert jobs[0]["group"] == "S(3)"

    def test_load_catalog_rejects_non_list(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"command": "verify"}')
        with pytest.raises(ValueError):
            load_catalog(str(path))


class TestMain:
    def test_verify_via_argv(self, capsys):
        code = main(["verify", "--group", "C(4)", "--char", "index:1", "--n", "1"])
        assert code == EXIT_OK
        assert capsys.readouterr().out == "x0^3*x1 + x0^2*x1^2 + x0*x1^3\n"

    def test_missing_catalog_file(self, capsys):
        code = main(["suite", "--catalog", "/nonexistent/catalog.json"])
        assert code == EXIT_USAGE
        assert "usage error" in capsys.readouterr().out

    def test_cap_flag(self, capsys):
        code = main(["orbits", "--group", "S(4)", "--n", "3", "--cap", "10"])
        assert code == EXIT_CAP

    def test_json_format_flag(self, capsys):
        code = main(["cycle-index", "--group", "S(3)", "--char", "sign",
                     "--format", "json"])
        assert code == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["weight"] == 3
