import json

import pytest

from promweb.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def call_json(capsys, *argv):
    code, out = call(capsys, *argv)
    return code, json.loads(out)


def test_syt_count(capsys):
    assert call_json(capsys, "syt", "count", "--shape", "3x4") == \
        (0, {"shape": "4,4,4", "count": 462})


def test_syt_enumerate_and_promote(capsys):
    code, data = call_json(capsys, "syt", "enumerate", "--shape", "2,2")
    assert code == 0 and data == [[[1, 2], [3, 4]], [[1, 3], [2, 4]]]
    code, data = call_json(capsys, "syt", "promote", "--tableau", "[[1,2,4,8],[3,6,7],[5]]")
    assert code == 0 and data == [[1, 3, 6, 7], [2, 5, 8], [4]]


def test_syt_promote_bad_tableau(capsys):
    code, data = call_json(capsys, "syt", "promote", "--tableau", "[[2,1]]")
    assert code == 1 and data["error"] == "contract"


def test_word_promote_labels(capsys):
    code, data = call_json(capsys, "word", "promote", "--word", "1 1 1 0 0 -1 0 -1 -1",
                           "--alphabet", "labels")
    assert code == 0 and data == "1 1 0 0 -1 1 -1 0 -1"


def test_word_validate_reports_violation(capsys):
    code, data = call_json(capsys, "word", "validate", "--word", "1221")
    assert code == 1
    assert data["first_violation"] == 3 and not data["yamanouchi"]


def test_web_grow_word_round_trip(capsys, tmp_path):
    code, data = call_json(capsys, "web", "grow", "--word", "111223233")
    assert code == 0 and data["word"] == "111223233"
    path = tmp_path / "web.json"
    path.write_text(json.dumps(data))
    assert call_json(capsys, "web", "word", "--web", str(path)) == (0, "111223233")
    code, rotated = call_json(capsys, "web", "rotate", "--web", str(path))
    assert rotated["word"] == "112231323"
    code, report = call_json(capsys, "web", "validate", "--web", str(path))
    assert code == 0 and report["ok"]


def test_web_grow_stall(capsys):
    code, data = call_json(capsys, "web", "grow", "--word", "1112213")
    assert code == 1 and data["error"] == "growth_stall"


def test_web_render(capsys, tmp_path):
    code, out = call(capsys, "web", "render", "--word", "123", "--pretty")
    assert code == 0 and out.startswith("digraph")
    target = tmp_path / "w.svg"
    code, data = call_json(capsys, "web", "render", "--word", "123", "--format", "svg",
                           "--output", str(target))
    assert code == 0 and target.read_text().startswith("<svg")


def test_spider_apply(capsys):
    assert call_json(capsys, "spider", "apply", "--word", "123", "--gen", "1",
                     "--uncrossing") == (0, {"123": -2})
    assert call_json(capsys, "spider", "apply", "--word", "1122", "--rank", "A1",
                     "--gen", "1") == (0, {"1122": 1, "1212": 1})
    code, data = call_json(capsys, "spider", "apply", "--word", "123", "--gen", "5")
    assert code == 1


def test_spider_longcycle_is_signed_rotation(capsys):
    assert call_json(capsys, "spider", "longcycle", "--word", "1212", "--rank", "A1") == \
        (0, {"1122": -1})
    assert call_json(capsys, "spider", "longcycle", "--sum", '{"111223233": 2}') == \
        (0, {"112231323": 2})


def test_spider_reduce_irreducible(capsys):
    assert call_json(capsys, "spider", "reduce", "--word", "112233") == (0, {"112233": 1})


def test_qpoly(capsys):
    code, data = call_json(capsys, "qpoly", "eval", "--shape", "4,4,4")
    assert list(data["values"].values()) == [462, 0, 0, 6, 12, 0, 30, 0, 12, 6, 0, 0]
    code, data = call_json(capsys, "qpoly", "hook", "--shape", "2,2")
    assert data["coeffs"] == [1, 0, 1]
    code, data = call_json(capsys, "qpoly", "eval", "--shape", "2,2", "--m", "3", "--d", "1")
    assert code == 1 and data["error"] == "contract"


def test_verify_commands(capsys):
    code, data = call_json(capsys, "verify", "csp", "--shape", "4,4,4")
    assert code == 0 and all(row["pass"] for row in data.values())
    code, data = call_json(capsys, "verify", "rotation-promotion", "--n", "3")
    assert code == 0 and data["violations"] == []
    code, data = call_json(capsys, "verify", "rotcyc", "--n", "3", "--rank", "A1")
    assert code == 0 and data["sign"] == -1
    code, data = call_json(capsys, "verify", "coxeter", "--n", "2")
    assert code == 0 and data["dimension"] == 5
    code, data = call_json(capsys, "verify", "growth-confluence", "--n", "2", "--trials", "5")
    assert code == 0 and data["violations"] == []


def test_verify_csp_rejects_non_rectangle(capsys):
    code, data = call_json(capsys, "verify", "csp", "--shape", "3,2")
    assert code == 1


def test_orbits_pretty(capsys):
    code, out = call(capsys, "orbits", "--shape", "4,4,4", "--pretty")
    assert out.split("\n")[:4] == ["o_3 = 2", "o_4 = 3", "o_6 = 4", "o_12 = 35"]


def test_envelope(capsys):
    code, data = call_json(capsys, "syt", "count", "--shape", "2,2", "--envelope")
    assert data == {"schema_version": 1, "command": "syt count", "status": "ok",
                    "result": {"shape": "2,2", "count": 2}}


def test_enumeration_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("PROMWEB_ENUM_CAP", "10")
    code, data = call_json(capsys, "syt", "enumerate", "--shape", "3,3,3", "--envelope")
    assert code == 3
    assert data["status"] == "guard" and data["result"]["override"] == "PROMWEB_ENUM_CAP"


@pytest.mark.parametrize("argv", [[], ["syt"], ["syt", "count"], ["web", "grow", "--bogus"]])
def test_usage_errors(capsys, argv):
    assert run(argv) == 2


def test_output_is_deterministic(capsys):
    first = call(capsys, "verify", "growth-confluence", "--n", "2", "--trials", "3", "--seed", "4")
    second = call(capsys, "verify", "growth-confluence", "--n", "2", "--trials", "3", "--seed", "4")
    assert first == second
