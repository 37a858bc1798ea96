import json

import numpy as np
import pytest

import main
from src.analysis.fuzz_runner import FuzzReport
from src.utils.image_io import read_pgm16, write_pbm
from src.patterns.pattern_manager import gen_pattern


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    for name in ('QUADLABEL_SEED', 'QUADLABEL_LABEL_BITS', 'LOG_LEVEL'):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr('src.utils.config_loader.load_dotenv', lambda *a, **k: False)
    monkeypatch.chdir(tmp_path)


def run(*argv):
    return main.run(['--config', 'absent.yaml', *argv])


def pbm(tmp_path, kind, *size, **params):
    path = tmp_path / f"{kind}.pbm"
    write_pbm(path, gen_pattern(kind, *size, **params))
    return path


def parse(text):
    return dict(line.split('=', 1) for line in text.strip().splitlines())


def test_label_background(tmp_path, capsys):
    src = pbm(tmp_path, 'background', 16, 4)
    out = tmp_path / 'labels.pgm'
    assert run('label', str(src), '-o', str(out), '--stats') == 0

    assert not read_pgm16(out).data.any()
    stats = parse(capsys.readouterr().out)
    assert stats['pause_cycles'] == '0'
    assert stats['drain_cycles'] == '8'
    assert stats['verdict'] == 'pass'


def test_label_dump_table(tmp_path):
    src = pbm(tmp_path, 'ascending_chain')
    table = tmp_path / 'table.txt'
    assert run('label', str(src), '-o', str(tmp_path / 'l.pgm'), '--dump-table', str(table)) == 0

    lines = table.read_text().splitlines()
    assert lines[0] == '0 0'
    assert lines[9] == '9 2'
    assert len(lines) == 10


def test_compare_ascending_chain(tmp_path, capsys):
    src = pbm(tmp_path, 'ascending_chain')
    assert run('compare', str(src)) == 0
    assert parse(capsys.readouterr().out)['equivalent'] == 'true'


def test_label_exhaustion_exit_code(tmp_path, capsys):
    src = pbm(tmp_path, 'max_labels', count=1024)
    assert run('label', str(src), '-o', str(tmp_path / 'l.pgm'), '--bits', '10', '--stats') == 1
    assert parse(capsys.readouterr().out)['valid'] == 'false'


def test_bench_double_merger(capsys):
    assert run('bench', '--pattern', 'double_merger', '--width', '12', '--height', '5') == 0
    stats = parse(capsys.readouterr().out)
    assert stats['pattern'] == 'double_merger'
    assert stats['pause_cycles'] == '1'
    assert stats['budget'] == '2221666'


def test_bench_json_and_clock(capsys):
    assert run('--json', 'bench', '--pattern', 'comb', '--width', '16', '--height', '4',
               '--clock', '1000', '--fps', '10') == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats['budget'] == 100
    assert stats['verdict'] == 'fail'


def test_bench_is_byte_identical(capsys):
    argv = ('bench', '--pattern', 'random', '--width', '32', '--height', '16', '--seed', '5')
    run(*argv)
    first = capsys.readouterr().out
    run(*argv)
    assert capsys.readouterr().out == first


def test_gen_writes_pbm(tmp_path):
    out = tmp_path / 'g.pbm'
    assert run('gen', '--pattern', 'group_chain', '-o', str(out), '--plain') == 0
    assert out.read_bytes().startswith(b'P1\n12 4\n')


def test_fuzz_small(tmp_path, capsys):
    assert run('fuzz', '--frames', '4', '--max-size', '32', '32', '--seed', '3',
               '--reproducer-dir', str(tmp_path / 'repro')) == 0
    summary = parse(capsys.readouterr().out)
    assert summary['frames'] == '4'
    assert summary['failures'] == '0'


def test_env_seed_overrides_flag(monkeypatch, capsys):
    seen = {}

    def fake_run_fuzz(settings, cfg, **kwargs):
        seen.update(settings)
        return FuzzReport(frames=None, summary={'frames': 0})

    monkeypatch.setattr(main, 'run_fuzz', fake_run_fuzz)
    monkeypatch.setenv('QUADLABEL_SEED', '42')
    assert run('fuzz', '--seed', '7') == 0
    assert seen['seed'] == 42

    monkeypatch.delenv('QUADLABEL_SEED')
    assert run('fuzz', '--seed', '7') == 0
    assert seen['seed'] == 7


def test_fuzz_failure_reports_reproducer(monkeypatch, tmp_path, capsys):
    repro = tmp_path / 'case.pbm'

    def fake_run_fuzz(settings, cfg, **kwargs):
        return FuzzReport(frames=None, summary={'frames': 1}, first_failure={'ok': False}, reproducer=repro)

    monkeypatch.setattr(main, 'run_fuzz', fake_run_fuzz)
    assert run('fuzz') == 1
    assert parse(capsys.readouterr().out)['reproducer'] == str(repro)


@pytest.mark.parametrize('argv', [
    (),
    ('label',),
    ('bench', '--pattern', 'nope', '--width', '16', '--height', '4'),
    ('compare', 'missing.pbm'),
])
def test_usage_errors(argv):
    assert run(*argv) == 2


def test_width_not_multiple_of_four(tmp_path):
    path = tmp_path / 'odd.pbm'
    path.write_bytes(b'P1\n2 1\n1 0\n')
    assert run('label', str(path), '-o', str(tmp_path / 'x.pgm')) == 2


def test_help_exits_zero():
    assert run('--help') == 0
