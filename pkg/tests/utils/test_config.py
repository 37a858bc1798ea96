import pytest

from src.engine.config import EngineConfig
from src.utils.config_loader import DEFAULT_CONFIG, load_config
from src.utils.errors import ConfigError


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ('QUADLABEL_SEED', 'QUADLABEL_LABEL_BITS', 'LOG_LEVEL'):
        monkeypatch.delenv(name, raising=False)
    # keep a developer's .env out of the tests
    monkeypatch.setattr('src.utils.config_loader.load_dotenv', lambda *a, **k: False)


def test_missing_file_uses_defaults(tmp_path):
    config = load_config(tmp_path / 'absent.yaml')
    assert config == DEFAULT_CONFIG
    assert config is not DEFAULT_CONFIG


def test_yaml_merges_over_defaults(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text("engine:\n  label_bits: 12\nfuzz:\n  frames: 5\n")
    config = load_config(path)
    assert config['engine']['label_bits'] == 12
    assert config['engine']['fps'] == 60
    assert config['fuzz']['frames'] == 5


def test_env_overrides(tmp_path, monkeypatch):
    monkeypatch.setenv('QUADLABEL_SEED', '99')
    monkeypatch.setenv('QUADLABEL_LABEL_BITS', '12')
    config = load_config(tmp_path / 'absent.yaml')
    assert config['fuzz']['seed'] == 99
    assert config['engine']['label_bits'] == 12


def test_invalid_env_value_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv('QUADLABEL_SEED', 'seven')
    config = load_config(tmp_path / 'absent.yaml')
    assert config['fuzz']['seed'] == DEFAULT_CONFIG['fuzz']['seed']


def test_engine_config_from_config():
    cfg = EngineConfig.from_config(DEFAULT_CONFIG, label_bits=16, fps=None)
    assert cfg.label_bits == 16
    assert cfg.fps == 60
    assert cfg.table_size == 65536
    assert cfg.budget_cycles == 2_221_666


@pytest.mark.parametrize('settings', [
    {'label_bits': 0},
    {'label_bits': 17},
    {'fps': 0},
    {'drain_order': 'random'},
    {'bogus': 1},
])
def test_engine_config_rejects(settings):
    with pytest.raises(ConfigError):
        EngineConfig.from_config({'engine': settings})
