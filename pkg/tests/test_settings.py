import numpy as np
import pytest
from pydantic import ValidationError

from algebra import PrimeField
from glossary import glossary_dict, help_dict, help_str
from scenarios import call_scenarios, custom_scenario, scenarios_dict
from settings import RunConfig, defaults
from utils.cache import CACHE_ENV, EvaluationCache, MemoryCache, open_cache
from utils.helper_functions import check_range, parse_int_list, seeded_rng
from utils.pipeline import Pipeline, datablock_write


def test_defaults():
    config = RunConfig()
    assert (config.n, config.prime, config.seed) == (9, 32003, 0)
    assert config.max_order == 18
    assert config.ring() == PrimeField(32003)
    assert defaults["margin_floor"] == 10


@pytest.mark.parametrize("dim, margin", [(0, 10), (8, 10), (200, 10), (1000, 50), (3811, 191)])
def test_margin(dim, margin):
    assert RunConfig().margin(dim) == margin


@pytest.mark.parametrize("fields", [
    {"prime": 4},
    {"prime": 2},
    {"prime": 11},
    {"margin_fraction": 1.5},
    {"threads": 0},
    {"n": 0},
    {"output": "xml"},
])
def test_invalid_settings(fields):
    with pytest.raises(ValidationError):
        RunConfig(**fields)


def test_small_prime_for_small_forms():
    assert RunConfig(n=3, prime=11).prime == 11


def test_cache_dir(monkeypatch, tmp_path):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    assert RunConfig().resolved_cache_dir == str(tmp_path)
    assert RunConfig(cache_dir="elsewhere").resolved_cache_dir == "elsewhere"


def test_check_range():
    settings = {"x": {"label": "Some x", "min_value": 1, "max_value": 3, "value": 2, "key": "x"}}
    assert check_range(settings, "x", 3) == 3
    with pytest.raises(ValueError, match="Some x"):
        check_range(settings, "x", 4)


def test_seeded_rng():
    assert seeded_rng(5, 1, 0).integers(1000) == seeded_rng((5,), 1, 0).integers(1000)
    draws = {int(seeded_rng(5, purpose, 0).integers(10**9)) for purpose in range(1, 6)}
    assert len(draws) == 5


@pytest.mark.parametrize("text, values", [("8, 12,36", [8, 12, 36]), ("", []), (None, []), ((4, 8), [4, 8])])
def test_parse_int_list(text, values):
    assert parse_int_list(text) == values


def test_pipeline_runs_steps_in_order():
    def append(datablock, value):
        datablock["seen"].append(value)
        return datablock

    pipeline = Pipeline({"seen": []})
    pipeline.add_step(append, {"value": 1})
    pipeline.add_step(append, {"value": 2})
    assert pipeline.run()["seen"] == [1, 2]


def test_datablock_write():
    datablock = datablock_write({}, ["dm", 4], "entry")
    assert datablock == {"dm": {4: "entry"}}
    datablock_write(datablock, ["dm", 8], "next")
    assert datablock == {"dm": {4: "entry", 8: "next"}}


def test_pipeline_threads_the_datablock():
    def write(datablock, m):
        return datablock_write(datablock, ["dm", m], m * m)

    pipeline = Pipeline()
    for m in (2, 4):
        pipeline.add_step(write, {"m": m})
    assert pipeline.run() == {"dm": {2: 4, 4: 16}}


def test_evaluation_cache(tmp_path):
    cache = EvaluationCache(tmp_path, 0, 32003, 9)
    assert cache.origin == ((0,), 32003, 9)
    assert cache.get("@j_4", 2) is None
    cache.put("@j_4", [1, 2, 3])
    assert cache.get("@j_4", 2).tolist() == [1, 2]
    assert cache.get("@j_4", 4) is None
    cache.put("@j_4", [9])
    assert cache.get("@j_4", 3).tolist() == [1, 2, 3]
    assert EvaluationCache(tmp_path, 1, 32003, 9).get("@j_4", 1) is None


def test_open_cache(tmp_path):
    assert open_cache(RunConfig(use_cache=False), 9) is None
    cache = open_cache(RunConfig(cache_dir=str(tmp_path), seed=4), 9)
    assert cache.origin == ((4,), 32003, 9)


def test_memory_cache():
    cache = MemoryCache("origin")
    cache.put("k", np.array([4, 5]))
    cache.put("k", np.array([7]))
    assert cache.get("k", 2).tolist() == [4, 5]
    assert cache.get("k", 3) is None


def test_scenarios():
    assert call_scenarios("thm").degrees == (4, 8, 10, 12, 12, 14, 16)
    assert call_scenarios("small_7").n == 7
    assert set(scenarios_dict) >= {"thm", "thm_prime", "nullsmall", "nine_set"}
    with pytest.raises(KeyError):
        call_scenarios("unknown")


def test_custom_scenario():
    scenario = custom_scenario(9, ["@j_4", "(pow @j_4 2)"])
    assert scenario.labels == ("j_4", "(pow @j_4 2)")
    assert scenario.degrees == (4, 8)


def test_help_texts():
    assert set(help_dict) >= {"poincare", "ecriture", "nullcone", "basis", "hsop"}
    assert "\n" not in help_str("basis")
    assert help_str("Nullcone").startswith("The forms")
    assert "Transvectant" in glossary_dict
