import json
from pathlib import Path

import pytest

from utils.config_utils import ENV_OVERRIDES
from weil_tools.weil_tools import main
from weil_tools.weil_tools_types import EXIT_FAIL, EXIT_OK, EXIT_USAGE, RunConfig, UsageError
from weil_tools.weil_tools_utils import (
    audit_grid,
    cache_statistics,
    default_audit_bound,
    resolve_weight,
    weil_sizes,
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for env_var in ENV_OVERRIDES:
        monkeypatch.delenv(env_var, raising=False)


@pytest.fixture
def config_path(tmp_path) -> str:
    path = tmp_path / "config.toml"
    path.write_text('[weil_tools]\nlogging_level = "errors_only"\n')
    return str(path)


def run(args: list[str], config_path: str, output: Path) -> tuple[int, dict]:
    code = main(args + ["--config", config_path, "--output", str(output)])
    document = json.loads(output.read_text()) if output.exists() else {}
    return code, document


@pytest.mark.parametrize(
    "args,code,answer",
    [
        (["classify", "C", "4", "5", "0,0,0,1"], EXIT_FAIL, "NO"),
        (["classify", "A", "1", "7", "5"], EXIT_OK, "YES"),
        (["classify", "C", "2", "3", "0,1"], EXIT_OK, "YES"),
        (["classify", "C", "3", "2", "2,0,1"], EXIT_FAIL, "NO"),
        (["classify", "G", "2", "3", "ω_1+3ω_2"], EXIT_OK, "YES"),
    ],
)
def test_classify(args: list[str], code: int, answer: str, config_path: str, tmp_path) -> None:
    exit_code, document = run(args, config_path, tmp_path / "out.json")
    assert exit_code == code
    assert document["schema"] == 1
    assert document["command"] == "classify"
    assert document["result"]["answer"] == answer


def test_classify_strict_flag(config_path: str, tmp_path) -> None:
    relaxed, _ = run(["classify", "C", "3", "5", "0,0,1"], config_path, tmp_path / "a.json")
    strict, document = run(
        ["classify", "C", "3", "5", "0,0,1", "--omega-cn-strict"],
        config_path,
        tmp_path / "b.json",
    )
    assert relaxed == EXIT_OK
    assert strict == EXIT_FAIL
    assert document["result"]["layers"][0]["rule"] == "outside-table"


@pytest.mark.parametrize("shortcut,distinct", [("ω″", 5), ("w''", 5), ("ω′", 4), ("w'", 4)])
def test_weights_shortcuts(shortcut: str, distinct: int, config_path: str, tmp_path) -> None:
    code, document = run(
        ["weights", "C", "2", shortcut, "--p", "3"], config_path, tmp_path / "out.json"
    )
    assert code == EXIT_OK
    result = document["result"]
    assert result["distinct"] == distinct
    assert result["expected_distinct"] == distinct
    assert result["passed"] is True


def test_weights_document(config_path: str, tmp_path) -> None:
    code, document = run(["weights", "A", "2", "1,1"], config_path, tmp_path / "out.json")
    assert code == EXIT_OK
    result = document["result"]
    assert result["dimension"] == 8
    assert result["mass"] == 8
    assert result["distinct"] == 7
    assert result["multiplicity_free"] is False
    assert "passed" not in result


def test_dim(config_path: str, tmp_path) -> None:
    code, document = run(["dim", "G", "2", "1,0"], config_path, tmp_path / "out.json")
    assert code == EXIT_OK
    assert document["result"]["dimension"] == 7
    assert document["result"]["distinct"] == 7


@pytest.mark.parametrize(
    "args",
    [
        ["weights", "C", "2", "ω″"],
        ["weights", "G", "2", "ω″", "--p", "3"],
        ["classify", "C", "2", "4", "1,0"],
        ["classify", "C", "2", "3", "1,-1"],
        ["classify", "A", "9", "3", "0"],
        ["dim", "E", "8", "0"],
        ["branch", "1", "3"],
        ["weilcheck", "2", "5"],
        ["brauer", "11"],
        ["audit", "A", "1", "3", "--export", "grid.xlsx"],
    ],
)
def test_usage_errors(args: list[str], config_path: str, tmp_path) -> None:
    code, document = run(args, config_path, tmp_path / "out.json")
    assert code == EXIT_USAGE
    assert document == {}


def test_missing_config_file(tmp_path) -> None:
    assert main(["dim", "A", "1", "1", "--config", str(tmp_path / "absent.toml")]) == EXIT_USAGE


def test_invalid_config_value(tmp_path) -> None:
    path = tmp_path / "config.toml"
    path.write_text('[weil_tools]\noutput_format = "yaml"\n')
    assert main(["dim", "A", "1", "1", "--config", str(path)]) == EXIT_USAGE


def test_env_caps_rank(monkeypatch, config_path: str, tmp_path) -> None:
    monkeypatch.setenv("WEIL_TOOLS_MAX_RANK", "2")
    code, _ = run(["dim", "A", "3", "1,0,0"], config_path, tmp_path / "out.json")
    assert code == EXIT_USAGE


def test_stdout_json(config_path: str, capsys) -> None:
    assert main(["dim", "C", "2", "0,1", "--config", config_path]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["result"]["dimension"] == 5


def test_text_format(config_path: str, capsys) -> None:
    args = ["classify", "C", "3", "2", "2,0,1", "--format", "text", "--config", config_path]
    assert main(args) == EXIT_FAIL
    out = capsys.readouterr().out
    assert "NO" in out
    assert "adjacency" in out


def test_branch(config_path: str, tmp_path) -> None:
    code, document = run(["branch", "3", "3"], config_path, tmp_path / "out.json")
    assert code == EXIT_OK
    result = document["result"]
    assert result["passed"] is True
    assert len(result["levi"]) == 3
    assert result["parity"]["holds"] is True


def test_weilcheck_and_brauer(config_path: str, tmp_path) -> None:
    code, document = run(
        ["weilcheck", "1", "3", "--samples", "50"], config_path, tmp_path / "weil.json"
    )
    assert code == EXIT_OK
    assert document["result"]["group_order"] == 24
    assert document["result"]["dims"] == [1, 2]

    code, document = run(["brauer", "5"], config_path, tmp_path / "brauer.json")
    assert code == EXIT_OK
    assert document["result"]["regular_elements"] == 72


def test_audit_same_output_for_any_parallelism(config_path: str, tmp_path) -> None:
    args = ["audit", "G", "2", "3", "--bound", "5"]
    serial, first = run(args + ["--parallelism", "1"], config_path, tmp_path / "one.json")
    pooled, second = run(args + ["--parallelism", "4"], config_path, tmp_path / "four.json")
    assert serial == pooled == EXIT_OK
    assert first == second
    assert first["result"]["grid_size"] == 36


def test_audit_export(config_path: str, tmp_path) -> None:
    export = tmp_path / "audit" / "a1.csv"
    code, document = run(
        ["audit", "A", "1", "5", "--export", str(export)], config_path, tmp_path / "out.json"
    )
    assert code == EXIT_OK
    assert document["result"]["export"] == str(export)
    header = export.read_text().splitlines()[0]
    assert header == "type,p,weight,answer,layers,rules,violations,boundary"
    # default bound for rank 1 is p^2 - 1
    assert document["result"]["grid_size"] == 25


@pytest.mark.slow
def test_quick_report_is_deterministic(config_path: str, tmp_path) -> None:
    args = ["report", "--quick", "--no-timings"]
    first_code, first = run(args, config_path, tmp_path / "1.json")
    second_code, _ = run(args, config_path, tmp_path / "2.json")
    assert first_code == second_code == EXIT_OK
    assert (tmp_path / "1.json").read_text() == (tmp_path / "2.json").read_text()
    checks = first["result"]["checks"]
    assert all("seconds" not in check for check in checks)
    assert [c["name"] for c in checks][:5] == [
        "weight_counts",
        "multiplicity_facts",
        "classifier_audit",
        "difference_witnesses",
        "branching",
    ]
    assert first["result"]["failed"] == []


def test_run_config_validation() -> None:
    assert RunConfig().primes == [3, 5, 7, 11, 13]
    with pytest.raises(ValueError, match="primes"):
        RunConfig(primes=[2, 3])
    assert RunConfig(primes=[2, 3], allow_even_prime=True).primes == [2, 3]
    with pytest.raises(ValueError, match="primes"):
        RunConfig(primes=[9])
    with pytest.raises(ValueError, match="parallelism"):
        RunConfig(parallelism=0)
    with pytest.raises(ValueError, match="logging_level"):
        RunConfig.from_dict({"logging_level": "loud"})
    with pytest.raises(ValueError, match="max_pn"):
        RunConfig.from_dict({"max_pn": "big"})
    config = RunConfig().with_overrides(parallelism=4, output_format=None)
    assert config.parallelism == 4
    assert config.output_format == "json"


def test_resolve_weight() -> None:
    assert resolve_weight("ω′", "C", 3, 5) == (0, 1, 1)
    assert resolve_weight("omega''", "c", 3, 5) == (0, 0, 2)
    assert resolve_weight("w''", "A", 1, 7) == (3,)
    assert resolve_weight("1,2", "C", 2, None) == (1, 2)
    with pytest.raises(UsageError):
        resolve_weight("ω′", "B", 3, 5)
    with pytest.raises(UsageError):
        resolve_weight("ω′", "C", 3, None)


def test_grid_helpers() -> None:
    assert default_audit_bound(1, 3) == 8
    assert default_audit_bound(2, 7) == 48
    assert default_audit_bound(3, 5) == 24
    assert default_audit_bound(3, 7) == 48
    assert default_audit_bound(4, 2) == 2
    assert default_audit_bound(6, 7) == 1
    quick = audit_grid(8, quick=True)
    assert all(rank <= 4 and p in (2, 3) for _, rank, p, _ in quick)
    full = audit_grid(8)
    assert ("E", 7, 7, 1) in full
    assert ("G", 2, 7, 48) in full
    assert ("C", 3, 5, 24) in full
    assert ("C", 4, 3, 2) in full
    # the quick grid keeps one p-adic layer
    assert ("C", 3, 3, 3) in quick
    assert weil_sizes(RunConfig(), quick=True) == [(1, 3), (1, 5), (1, 7)]
    assert weil_sizes(RunConfig(group_cap=1000)) == [(1, 3), (1, 5), (1, 7)]
    assert (2, 3) in weil_sizes(RunConfig())


def test_cache_statistics(config_path: str, tmp_path) -> None:
    run(["dim", "B", "2", "1,1"], config_path, tmp_path / "out.json")
    stats = cache_statistics()
    assert set(stats) == {
        "root_systems",
        "dominant_characters",
        "weil_weights",
        "weil_representations",
    }
    assert stats["root_systems"]["currsize"] >= 1
