# Encoding: utf8
import pytest
from   twistcert.config import RunConfig, ConfigError, DEFAULTS

def test_defaults():
	config = RunConfig()
	assert config.asDict() == DEFAULTS
	assert config.family == "thm51"
	assert config.relation_bound == 3

def test_merge_ignores_none():
	config = RunConfig(doublings=6)
	config.merge({"doublings": None, "workers": 2})
	assert (config.doublings, config.workers) == (6, 2)

@pytest.mark.parametrize("values", [
	{"unknown": 1},
	{"tolerance": 0},
	{"doublings": 0},
	{"workers": 1.5},
	{"walk_limit": True},
	{"family": "thm52"},
	{"primes": []},
	{"primes": [2, 7]},
	{"csv": "yes"},
])
def test_invalid( values ):
	with pytest.raises(ConfigError):
		RunConfig(**values)

def test_loads():
	config = RunConfig.Loads('{"relation_bound": 4, "primes": [7, 11, 13]}')
	assert config.relation_bound == 4
	assert config.primes == [7, 11, 13]
	for text in ("[1, 2]", "{relation_bound: 4}"):
		with pytest.raises(ConfigError):
			RunConfig.Loads(text)

def test_load( tmp_path ):
	path = tmp_path / "run.json"
	path.write_text('{"family": "thm53", "out": "twists.jsonl"}')
	config = RunConfig.Load(str(path))
	assert (config.family, config.out) == ("thm53", "twists.jsonl")
	with pytest.raises(ConfigError):
		RunConfig.Load(str(tmp_path / "missing.json"))

# EOF - vim: tw=80 ts=4 sw=4 noet
