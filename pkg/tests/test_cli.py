import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from invhilb.cli import main
from invhilb.document import (
    OutputDocument,
    decode_series,
    dump_class_data,
    encode,
    load_class_data,
    parse_class_data,
)
from invhilb.molien import hilbert_double_classsum, symmetric_group_class_data
from invhilb.series import FactoredSeries, expand, factored_equal, phi

GOLDEN = Path(__file__).parent / "golden"
DATA = Path(__file__).parents[1] / "src" / "invhilb" / "data"


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def structured(*argv):
    code, text = run(*argv, "--format", "structured")
    return code, json.loads(text), text


@pytest.mark.parametrize("n", [2, 3, 4])
def test_latex_golden(n):
    code, text = run("hilbert", "--gamma", str(n), "--latex")
    assert code == 0
    want = (GOLDEN / f"hilbert_s{n}.tex").read_text()
    assert "".join(text.splitlines()[-1].split()) == "".join(want.split())


def test_hilbert_gamma2_expansion():
    code, doc, _ = structured("hilbert", "--gamma", "2", "--order", "4")
    assert code == 0
    assert doc["result"]["expansion"] == ["1", "2", "6", "10", "19"]
    series = decode_series(doc["result"]["series"])
    assert factored_equal(series, FactoredSeries([1, 0, 1], {1: 2, 2: 2}))
    assert doc["inputs"] == {"gamma": ["2"], "order": "4", "route": "a"}


def test_hilbert_default_order():
    _, doc, _ = structured("hilbert", "--gamma", "2,3")
    assert doc["inputs"]["order"] == str(2 + 6 + 10)
    assert len(doc["result"]["expansion"]) == 19


def test_hilbert_all_routes():
    code, doc, _ = structured("hilbert", "--gamma", "3", "--route", "all")
    assert code == 0 and doc["status"] == "pass" and doc["result"]["routes_equal"] is True


def test_schur_examples():
    _, doc, _ = structured("schur", "--partition", "3")
    assert factored_equal(decode_series(doc["result"]["series"]), FactoredSeries([1], {1: 1, 2: 1, 3: 1}))
    _, doc, _ = structured("schur", "--partition", "1,1")
    assert factored_equal(decode_series(doc["result"]["series"]), FactoredSeries([0, 1], {1: 1, 2: 1}))
    _, doc, _ = structured("schur", "--partition", "2,1", "--order", "10")
    assert doc["result"]["character_route_agrees"] is True
    assert len(doc["result"]["expansion"]) == 11


def test_schur_autosorts(caplog):
    code, doc, _ = structured("schur", "--partition", "1,2")
    assert code == 0
    assert doc["inputs"]["partition"] == ["2", "1"]
    assert "sorted" in caplog.text


def test_fmaj():
    _, doc, _ = structured("fmaj", "--n", "3")
    assert doc["result"]["coefficients"] == ["1", "0", "1", "2", "1", "0", "1"]
    assert doc["result"]["value_at_1"] == "6" and doc["result"]["degree"] == "6"
    _, doc, _ = structured("fmaj", "--n", "1")
    assert doc["result"]["coefficients"] == ["1"]
    assert run("fmaj", "--n", "6", "--jobs", "4")[1] == run("fmaj", "--n", "6", "--jobs", "1")[1]


def test_stats():
    _, doc, _ = structured("stats", "--n", "3")
    assert doc["result"]["secondary_count"] == "6"
    assert doc["result"]["max_secondary_degree"] == "6"


@pytest.mark.parametrize("suite,n_max", [("identities", 5), ("orbit", 3), ("characters", 6)])
def test_verify_suites(suite, n_max):
    code, doc, _ = structured("verify", "--suite", suite, "--n-max", str(n_max))
    assert code == 0 and doc["status"] == "pass"
    assert doc["result"]["checks"] and all(c["pass"] for c in doc["result"]["checks"])


def test_general_s3_matches_hilbert():
    _, gen, _ = structured("general", "--class-data", str(DATA / "s3.yaml"), "--order", "12")
    _, hil, _ = structured("hilbert", "--gamma", "3", "--order", "12")
    assert gen["result"]["hilbert_double"] == hil["result"]["expansion"]
    assert gen["result"]["molien_direct_agrees"] is True


def test_general_c2():
    code, doc, _ = structured("general", "--class-data", str(DATA / "c2_sign.yaml"), "--order", "6")
    assert code == 0
    assert doc["result"]["hilbert_double"] == ["1", "0", "3", "0", "5", "0", "7"]


def test_general_bad_sizes(tmp_path, capsys):
    bad = (DATA / "s3.yaml").read_text().replace("order: 6", "order: 7")
    assert "order: 7" in bad
    path = tmp_path / "bad.yaml"
    path.write_text(bad)
    code, text = run("general", "--class-data", str(path))
    assert code == 1
    assert "class sizes must sum to |G|" in text


def test_general_parse_error(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("order: [unclosed\n")
    assert run("general", "--class-data", str(path))[0] == 2
    assert run("general", "--class-data", str(tmp_path / "missing.yaml"))[0] == 2
    path.write_text("order: 2\nclasses: []\n")
    assert run("general", "--class-data", str(path))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["hilbert", "--gamma", "2,x"],
        ["hilbert", "--gamma", "0"],
        ["hilbert", "--gamma", "11"],
        ["hilbert", "--gamma", "2", "--order", "-1"],
        ["schur", "--partition", "a"],
        ["fmaj", "--n", "11"],
        ["fmaj", "--n", "0"],
        ["fmaj", "--n", "4", "--jobs", "0"],
        ["nonsense"],
        [],
    ],
)
def test_invalid_input_exit_2(argv):
    assert run(*argv)[0] == 2


def test_env_limit_applies_to_cli(monkeypatch):
    # the environment override wins over the opt-in default
    monkeypatch.setenv("INVHILB_MAX_ENUM", "10")
    assert run("fmaj", "--n", "11", "--allow-large")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["hilbert", "--gamma", "2,3", "--latex"],
        ["schur", "--partition", "3,1", "--latex"],
        ["fmaj", "--n", "4"],
        ["stats", "--n", "4"],
        ["verify", "--suite", "characters", "--n-max", "4"],
    ],
)
def test_structured_round_trip_and_repeatable(argv):
    _, doc, text = structured(*argv)
    assert OutputDocument.loads(text).dumps() == text
    assert structured(*argv)[2] == text
    assert list(doc) == sorted(doc)


def test_numbers_serialize_as_strings():
    big = 2**80
    doc = OutputDocument("x", {"n": big}, {"v": [1, 2]})
    assert json.loads(doc.dumps())["inputs"]["n"] == str(big)
    with pytest.raises(TypeError):
        encode(object())


def test_class_data_round_trip():
    data = symmetric_group_class_data(4)
    again = parse_class_data(dump_class_data(data))
    assert again == data
    again.validate()


def test_shipped_class_data_loads():
    s3 = load_class_data(DATA / "s3.yaml")
    s3.validate()
    assert s3.order == 6 and s3.dim == 3


def test_text_output():
    code, text = run("hilbert", "--gamma", "2", "--order", "3")
    assert code == 0
    assert "1, 2, 6, 10" in text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "invhilb", "fmaj", "--n", "3", "--format", "structured"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "fmaj"
