import json

import pytest

from galcremona import cli, corpus
from galcremona.pipeline import parse_job_text, report, run_build

SCHEMA_KEYS = ["id", "status", "degree", "multiplicity", "projection_degree", "is_galois",
               "group_order", "sigma_rep", "moebius", "dejonquieres", "diagnostics"]
LIFT_KEYS = ["components", "degree", "birational", "order", "preserves_curve"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_cubic_model(capsys):
    code, out, _ = run(capsys, "build", "--json", "kummer = 3; q = t; c = [0, 1, 1]")
    assert code == 0
    rep = json.loads(out)
    assert rep["fiber"] == "X^3 - 3*t*X - t^2 - t"
    assert rep["status"] == "ok"
    assert rep["projection_degree"] == 3


def test_build_rejects_curve_input(capsys):
    code, _, err = run(capsys, "build", "curve = x^3 - y")
    assert code == 2 and "Kummer input" in err


def test_analyze_json_schema_and_values(capsys):
    code, out, _ = run(capsys, "analyze", "--json", "curve = (x + y)^3 - x^3*y; point = (1 : 0 : 0)")
    assert code == 0
    rep = json.loads(out)
    assert list(rep)[:len(SCHEMA_KEYS)] == SCHEMA_KEYS
    assert list(rep)[len(SCHEMA_KEYS):] == ["curve", "fiber"]
    assert rep["is_galois"] is True and rep["group_order"] == 3
    assert rep["dejonquieres"] is None
    assert len(rep["moebius"]["entries"]) == 4


def test_extend_output_is_deterministic(capsys):
    argv = ("extend", "--json", "curve = x^4 - y^3; point = (0 : 1 : 0)")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    rep = json.loads(first[1])
    assert list(rep["dejonquieres"]) == LIFT_KEYS
    assert rep["dejonquieres"]["order"] == 3
    assert rep["dejonquieres"]["birational"] is True
    assert rep["dejonquieres"]["preserves_curve"] is True


def test_extend_not_galois(capsys):
    code, out, _ = run(capsys, "extend", "--json", "curve = x^4 - x^2 - y")
    assert code == 0
    rep = json.loads(out)
    assert rep["is_galois"] is False and rep["status"] == "not galois"


def test_unsupported_degree(capsys):
    code, out, _ = run(capsys, "analyze", "--json", "curve = x^5 - y")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "unsupported degree"


def test_non_geometric_kummer_is_inconclusive(capsys):
    code, out, _ = run(capsys, "extend", "--json", "kummer = 4; q = t; c = [0, 1, 1, 0]")
    rep = json.loads(out)
    assert code == 0
    assert rep["status"] == "no moebius representation"
    assert any(d.startswith("inconclusive") for d in rep["diagnostics"])


def test_text_report(capsys):
    code, out, _ = run(capsys, "extend", "kummer = 3; q = t; c = [0, 1, 0]")
    assert code == 0
    assert out.startswith("[input] status: ok")
    assert "birational: True  order: 3" in out


def test_input_file_with_several_blocks(tmp_path, capsys):
    path = tmp_path / "jobs.txt"
    path.write_text("# two jobs\ncurve = x^3 + y^3 + 1\n\nkummer = 3; q = t; c = [0, 1, 0]\n",
                    encoding="utf-8")
    code, out, _ = run(capsys, "analyze", "--json", "--input", str(path))
    reps = json.loads(out)
    assert code == 0
    assert [r["id"] for r in reps] == ["input", "input-2"]
    assert [r["group_order"] for r in reps] == [3, 3]


def test_field_flag(capsys):
    code, out, _ = run(capsys, "analyze", "--json", "--field", "4", "kummer = 4; q = t; c = [0, 1, 0, 0]")
    assert code == 0 and json.loads(out)["group_order"] == 4
    code, _, err = run(capsys, "analyze", "--field", "5", "kummer = 3; q = t; c = [0, 1, 0]")
    assert code == 2 and "roots of unity" in err


@pytest.mark.parametrize("argv, needle", [
    (("analyze", "curve = x^-1 + y"), "parse error"),
    (("analyze", "curve = x^2 + w"), "parse error"),
    (("analyze", "shape = circle"), "unknown keys"),
    (("build", "kummer = 3; q = t"), "needs q and c"),
    (("analyze", "--input", "/nonexistent/file"), "error"),
])
def test_bad_input_exits_2(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert needle in err


def test_parse_check(capsys):
    code, out, _ = run(capsys, "parse-check", "(t^2 - 1)/(2*t - 2)")
    assert code == 0 and out.strip() == "1/2*t + 1/2"
    code, out, _ = run(capsys, "parse-check", "--json", "y*x + x^2")
    assert json.loads(out) == {"input": "y*x + x^2", "canonical": "x^2 + x*y"}
    code, _, err = run(capsys, "parse-check", "x^")
    assert code == 2 and "column" in err


# -- corpus ---------------------------------------------------------------------

def test_corpus_all_pass(capsys):
    code, out, _ = run(capsys, "corpus")
    assert code == 0
    n = sum(len(e.checks) for e in corpus.CORPUS)
    assert out.strip().endswith(f"{n}/{n} checks passed")


def test_corpus_single_entry_json(capsys):
    code, out, _ = run(capsys, "corpus", "--json", "--entry", "cusp-b-diag4")
    rows = json.loads(out)
    assert code == 0
    assert {r["entry"] for r in rows} == {"cusp-b-diag4"}
    assert all(r["passed"] for r in rows)


def test_corpus_unknown_entry(capsys):
    code, _, err = run(capsys, "corpus", "--entry", "nope")
    assert code == 2 and "unknown corpus entry" in err


def test_perturbed_entry_fails_with_diff(capsys, monkeypatch):
    entry = corpus.get_entry("cubic-kummer-011").with_expected("fiber", "X^3 - 3*t*X - t^2 + t")
    monkeypatch.setattr(corpus, "CORPUS", (entry,))
    code, out, _ = run(capsys, "corpus")
    assert code == 1
    assert "FAIL" in out
    assert "expected X^3 - 3*t*X - t^2 + t, got X^3 - 3*t*X - t^2 - t" in out


def test_empty_corpus_selection(capsys, monkeypatch):
    assert corpus.format_table(corpus.run_corpus(corpus.CORPUS, only="")) == \
        "(no corpus entries selected)"
    monkeypatch.setattr(corpus, "CORPUS", ())
    code, out, _ = run(capsys, "corpus")
    assert code == 0 and out.strip() == "(no corpus entries selected)"


def test_failing_check_records_exceptions():
    def boom(ctx):
        raise ZeroDivisionError("boom")
    entry = corpus.CorpusEntry("x", "raises", None, (corpus.Check("c", "definition", 1, boom),))
    (res,) = corpus.run_entry(entry)
    assert not res.passed and "ZeroDivisionError" in res.diff


def test_report_key_order_from_pipeline():
    (job,) = parse_job_text("kummer = 3; q = t; c = [0, 1, 0]")
    assert list(report(run_build(job))) == SCHEMA_KEYS


def test_extend_config_flags(capsys):
    code, out, _ = run(capsys, "extend", "--json", "--skip-curve-check", "--order-bound", "20",
                       "kummer = 4; q = 1/t^3; c = [0, 1, 0, 0]")
    lift = json.loads(out)["dejonquieres"]
    assert code == 0
    assert lift["preserves_curve"] is None and lift["order"] == 4


def test_run_config_defaults():
    from galcremona.pipeline import RunConfig, run_extend
    res = run_extend(parse_job_text("kummer = 3; q = t; c = [0, 1, 1]")[0], RunConfig(check_curve=False))
    assert res.preserves_curve is None and res.lift_order == 3
    assert RunConfig() == RunConfig(order_bound=12, check_curve=True)
