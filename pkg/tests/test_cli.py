import json

import pytest

from jacklr.alpha import AlphaPoly, AlphaRat, Factored
from jacklr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_degree_three(capsys):
    code, out, _ = run(capsys, "expand", "--lambda", "3")
    assert code == 0
    assert "J_3 = (1 + 3*alpha + 2*alpha^2) m_3 + (3 + 3*alpha) m_21 + 6 m_111" in out
    assert "J_3 = 2*alpha^2 p_3 + 3*alpha p_21 + p_111" in out
    code, out, _ = run(capsys, "expand", "--lambda", "2,1", "--basis", "powersum", "--unicode")
    assert out.strip() == "J_21 = -α p_3 + (-1 + α) p_21 + p_111"


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "--lambda", "1,1,1", "--format", "json")
    data = json.loads(out)
    assert data["lambda"] == [1, 1, 1]
    assert [e["basis"] for e in data["expansions"]] == ["monomial", "powersum"]
    assert data["expansions"][0]["terms"] == [{"partition": [1, 1, 1], "coeff": {"num": [[6, 1]], "den": [[1, 1]]}}]


def test_stanley_json_factored(capsys):
    code, out, _ = run(
        capsys, "stanley", "--mu", "4,2,2,1,1", "--nu", "2,1,1", "--lambda", "4,3,3,3,1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    fac = data["factored"]
    assert fac["constant"] == [4608, 1]
    assert fac["factors"] == [[1, 0, 6], [1, -1, 4], [1, -2, 1], [1, -3, 2], [1, -4, 2],
                              [2, -1, 1], [3, -1, 1], [3, -2, 2], [3, -5, 1]]
    value = AlphaRat.from_json(data["value"])
    f = Factored(4608, tuple(tuple(x) for x in fac["factors"]))
    assert value == f.expand()


def test_stanley_text(capsys):
    code, out, _ = run(capsys, "stanley", "--mu", "1", "--nu", "1", "--lambda", "2")
    assert out.strip() == "<J_1 J_1, J_2> = 2 * alpha^2"


def test_lr_table(capsys):
    code, out, _ = run(capsys, "lr", "--mu", "1", "--nu", "1")
    assert code == 0
    assert out.splitlines() == [
        "J_1 * J_1:",
        "  2: g = 1/(1 + alpha); stanley = 2 * alpha^2",
        "  11: g = alpha/(1 + alpha); stanley = 2 * alpha^2",
    ]
    code, out, _ = run(capsys, "lr", "--mu", "2,1,1", "--nu", "2,2,1", "--format", "json")
    rows = json.loads(out)["table"]
    assert rows[0]["gamma"] == [4, 3, 2]
    assert all(r["stanley"] is not None for r in rows)


def test_hooks_commands(capsys):
    code, out, _ = run(capsys, "hooks", "rect", "--mu", "2,1,1", "--m", "3", "--n", "3")
    assert code == 0
    assert "[333]\nU U L\nU L L\nU L L" in out
    code, out, _ = run(capsys, "hooks", "rect-union", "--mu", "4,2,2,1,1", "--m", "3", "--n", "4",
                       "--format", "json")
    data = json.loads(out)
    assert data["balanced"] is True
    assert data["lambda"]["shape"] == [4, 3, 3, 3, 1]
    assert "factored_form" in data
    code, out, _ = run(capsys, "hooks", "rect", "--mu", "1", "--m", "2", "--n", "1", "--form", "lr")
    assert "g for mu=1, nu=1, lambda=2" in out


def test_verify_smallest_suite(capsys):
    code, out, _ = run(capsys, "verify", "sum-product", "--max-size", "2")
    assert code == 0
    assert out.startswith("sum-product: ok")
    code, out, _ = run(capsys, "verify", "flip", "--m", "2", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and [r["suite"] for r in data["reports"]] == ["flip", "mirror"]


def test_verify_parallel_is_deterministic(capsys):
    _, serial, _ = run(capsys, "verify", "pieri", "--max-size", "4", "--format", "json")
    _, parallel, _ = run(capsys, "verify", "pieri", "--max-size", "4", "--format", "json", "--jobs", "2")
    assert serial == parallel


def test_verify_failure_exit_code(capsys, monkeypatch):
    from jacklr import suites

    gen, _ = suites.SUITES["pieri"]
    monkeypatch.setitem(suites.SUITES, "pieri", (gen, lambda case: {"forced": True}))
    code, out, _ = run(capsys, "verify", "pieri", "--max-size", "2")
    assert code == 1
    assert "pieri: fail" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["expand"],
        ["expand", "--lambda", "1,2"],
        ["stanley", "--mu", "1", "--nu", "1", "--lambda", "3"],
        ["hooks", "rect", "--mu", "4", "--m", "3", "--n", "3"],
        ["hooks", "rect-union", "--mu", "4,4", "--m", "3", "--n", "1"],
        ["hooks", "rect", "--mu", "1", "--m", "0", "--n", "1"],
        ["verify", "flip", "--m", "2"],
        ["verify", "norms", "--jobs", "0"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_repeatable_output(capsys):
    first = run(capsys, "lr", "--mu", "2,1", "--nu", "1,1", "--format", "json")
    second = run(capsys, "lr", "--mu", "2,1", "--nu", "1,1", "--format", "json")
    assert first == second
