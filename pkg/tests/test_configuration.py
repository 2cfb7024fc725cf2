
import logging

import pytest

import schubCalc
import schubCalc.logging as sc_logging
from schubCalc import constants as const
from schubCalc.helpers import ConfigError
from schubCalc.configuration import config, get_config, set_config, find_config_file


def write(path, text: str):
    path.write_text(text)
    return path


## configuration

def test_defaults():
    conf = config()
    assert conf.engine.max_n == const.DEFAULT_MAX_N
    assert conf.engine.cross_check
    assert conf.output.mode == "text"
    assert conf.output.indent is None
    assert conf.logger.level == "WARNING"
    assert conf.filePath is None

def test_file_entries(tmp_path):
    file = write(tmp_path / "conf.yaml", "engine:\n  max_n: 5\n  cross_check: false\noutput:\n  mode: json\n  indent: 2\n")
    conf = config(file)
    assert conf.engine.max_n == 5
    assert not conf.engine.cross_check
    assert conf.output.mode == "json"
    assert conf.output.indent == 2
    assert conf.baseFolder == tmp_path.resolve()
    assert conf["engine"] == {"max_n": 5, "cross_check": False}

def test_empty_file_uses_defaults(tmp_path):
    conf = config(write(tmp_path / "empty.yml", ""))
    assert conf.engine.max_n == const.DEFAULT_MAX_N

@pytest.mark.parametrize("text", [
    "colors: red\n",
    "engine:\n  speed: 3\n",
    "output:\n  mode: xml\n",
    "engine:\n  max_n: many\n",
    "engine: 5\n",
    "- a list\n",
])
def test_bad_files(tmp_path, text):
    with pytest.raises(ConfigError):
        config(write(tmp_path / "bad.yaml", text))

def test_file_checks(tmp_path):
    with pytest.raises(ConfigError):
        config(tmp_path / "absent.yaml")
    with pytest.raises(ConfigError):
        config(write(tmp_path / "conf.txt", "engine: {}\n"))

def test_environment_overrides_max_n(tmp_path, monkeypatch):
    file = write(tmp_path / "conf.yaml", "engine:\n  max_n: 5\n")
    monkeypatch.setenv(const.ENV_MAX_N, "9")
    assert config(file).engine.max_n == 9
    assert config().engine.max_n == 9

@pytest.mark.parametrize("value", ["abc", "0"])
def test_environment_value_checked(monkeypatch, value):
    monkeypatch.setenv(const.ENV_MAX_N, value)
    with pytest.raises(ConfigError):
        config()

def test_env_tag(tmp_path, monkeypatch):
    file = write(tmp_path / "conf.yaml", "engine:\n  max_n: !env SCHUBCALC_TEST_SIZE 4\n")
    monkeypatch.delenv("SCHUBCALC_TEST_SIZE", raising=False)
    assert config(file).engine.max_n == 4
    monkeypatch.setenv("SCHUBCALC_TEST_SIZE", "6")
    assert config(file).engine.max_n == 6

def test_substitutions(tmp_path):
    file = write(tmp_path / "conf.yaml", "substitutions:\n  size: 6\n  mode: json\nengine:\n  max_n: ${size}\noutput:\n  mode: ${mode}\n")
    conf = config(file)
    assert conf.engine.max_n == 6
    assert conf.output.mode == "json"

def test_include(tmp_path):
    write(tmp_path / "engine.yaml", "max_n: 3\n")
    conf = config(write(tmp_path / "conf.yaml", "engine: !include engine.yaml\n"))
    assert conf.engine.max_n == 3

def test_active_config():
    conf = config()
    set_config(conf)
    assert get_config() is conf
    set_config(None)
    assert get_config() is not conf

def test_find_config_file(tmp_path):
    assert find_config_file() is None
    write(tmp_path / const.DEFAULT_CONFIG, "engine: {}\n")
    assert find_config_file() == tmp_path / const.DEFAULT_CONFIG
    assert str(find_config_file("other.yaml")) == "other.yaml"


## logging

@pytest.fixture
def restore_root_level():
    level = logging.root.level
    yield
    logging.root.setLevel(level)

@pytest.mark.parametrize("args,level", [
    (("DEBUG", False, False), logging.DEBUG),
    ((None, False, True), sc_logging.VERBOSE),
    ((None, True, False), logging.CRITICAL),
    ((None, False, False), logging.WARNING),
    (("INFO", True, True), logging.INFO),
])
def test_init_logging_levels(restore_root_level, args, level):
    sc_logging.init_logging(*args)
    assert logging.root.level == level

def test_verbose_level(restore_root_level, caplog):
    assert logging.getLevelName(sc_logging.VERBOSE) == "VERBOSE"
    logger = schubCalc.getLogger("schubCalc.tests")
    with caplog.at_level(sc_logging.VERBOSE):
        logger.verbose("fine grained")
    assert [r.levelname for r in caplog.records] == ["VERBOSE"]

def test_setup_logging_hands_back_handlers(restore_root_level):
    before = list(logging.root.handlers)
    conf = config()
    handler = sc_logging.setup_logging(conf.logger, conf.baseFolder)
    assert logging.root.handlers == [handler]
    sc_logging.shutdown_logging()
    assert set(logging.root.handlers) == set(before)

def test_logger_levels_from_config(tmp_path, restore_root_level):
    conf = config(write(tmp_path / "conf.yaml", "logger:\n  level: ERROR\n  logs:\n    schubCalc.flags: DEBUG\n"))
    sc_logging.setup_logging(conf.logger, conf.baseFolder)
    try:
        assert logging.root.level == logging.ERROR
        assert logging.getLogger("schubCalc.flags").level == logging.DEBUG
    finally:
        sc_logging.shutdown_logging()
        logging.getLogger("schubCalc.flags").setLevel(logging.NOTSET)

def test_level_locked_keeps_the_root_level(restore_root_level):
    logging.root.setLevel(logging.INFO)
    sc_logging.setup_logging(config().logger, level_locked=True)
    sc_logging.shutdown_logging()
    assert logging.root.level == logging.INFO

def test_log_to_file(tmp_path, restore_root_level):
    conf = config(write(tmp_path / "conf.yaml", "logger:\n  log_to_file: true\n"))
    sc_logging.setup_logging(conf.logger, conf.baseFolder)
    schubCalc.getLogger("schubCalc.tests").warning("written to the file")
    sc_logging.shutdown_logging()
    line = (tmp_path / "logs" / "schubcalc.log").read_text()
    assert "written to the file" in line
    assert "test_log_to_file" in line
