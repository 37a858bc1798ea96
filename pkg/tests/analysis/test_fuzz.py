import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.analysis.frame_report import format_record, get_frame_statistics, stats_record, summarise_frames
from src.analysis.fuzz_runner import make_case, make_cases, run_case, run_fuzz
from src.engine.config import EngineConfig
from src.engine.pipeline import FrameStats, RealtimeVerdict, process_frame
from src.stream.stream_model import BinaryImage
from src.utils.config_loader import DEFAULT_CONFIG
from src.verification.oracle import UnionFind, equivalent_up_to_relabeling, label_reference

FUZZ = DEFAULT_CONFIG['fuzz']


@st.composite
def frames(draw, max_groups=8, max_height=24):
    groups = draw(st.integers(1, max_groups))
    height = draw(st.integers(1, max_height))
    density = draw(st.floats(0.05, 0.95))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    return BinaryImage.from_array(rng.random((height, 4 * groups)) < density)


@settings(max_examples=200, deadline=None)
@given(frames())
def test_engine_matches_reference(img):
    result = process_frame(img, EngineConfig(label_bits=16, trace=False))
    assert equivalent_up_to_relabeling(result.final, label_reference(img))
    assert result.final_table.is_idempotent()
    assert result.stats.consumed_groups == img.groups_per_row * img.height
    assert result.stats.total == (
        result.stats.active_cycles + result.stats.pause_cycles + result.stats.drain_cycles
    )


@settings(max_examples=50, deadline=None)
@given(frames(max_groups=4, max_height=8), st.sampled_from(['fifo', 'lifo']))
def test_drain_order_does_not_change_partition(img, order):
    result = process_frame(img, EngineConfig(label_bits=16, drain_order=order))
    assert equivalent_up_to_relabeling(result.final, label_reference(img))


@settings(max_examples=100, deadline=None)
@given(frames(), st.sampled_from(['fifo', 'lifo']))
def test_row_labels_one_step_from_root_after_drain(img, order):
    # traced frames check every stored label after each line drain
    result = process_frame(img, EngineConfig(label_bits=16, drain_order=order, trace=True))
    assert result.stats.valid
    assert result.stats.stack_high_water <= 2 * img.groups_per_row


@settings(max_examples=100, deadline=None)
@given(frames())
def test_merger_replay_matches_final_table(img):
    result = process_frame(img, EngineConfig(label_bits=16, trace=True))
    peak = result.stats.peak_label
    sets = UnionFind(peak + 1)
    for _, _, m in result.trace.mergers:
        sets.union(m.larger, m.smaller)

    t = result.final_table
    for x in range(1, peak + 1):
        assert t[x] == sets.find(x)


def test_cases_depend_only_on_seed_and_index():
    assert make_case(17, 2021, FUZZ) == make_cases(20, 2021, FUZZ)[17]
    for case in make_cases(50, 2021, FUZZ):
        assert case.width % 4 == 0 and 16 <= case.width <= 256
        assert 16 <= case.height <= 256
        assert 0.05 <= case.density <= 0.95


def test_run_case_record():
    record = run_case(make_case(0, 2021, FUZZ), EngineConfig(label_bits=16, trace=False))
    assert record['ok'], record['reason']
    assert record['consumed_groups'] == record['width'] // 4 * record['height']


def test_small_corpus(tmp_path):
    settings_ = dict(FUZZ, frames=25, max_width=64, max_height=64, reproducer_dir=str(tmp_path))
    report = run_fuzz(settings_, EngineConfig(label_bits=16, trace=False))
    assert report.ok
    assert report.summary['frames'] == 25
    assert report.summary['failures'] == 0
    assert report.reproducer is None
    assert list(tmp_path.iterdir()) == []


def test_failure_writes_reproducer(tmp_path):
    # a single label bit cannot hold two components
    settings_ = dict(FUZZ, frames=3, density_min=0.2, density_max=0.4, reproducer_dir=str(tmp_path))
    report = run_fuzz(settings_, EngineConfig(label_bits=1, trace=False))
    assert not report.ok
    assert 'LabelExhaustionError' in report.first_failure['reason']
    assert report.reproducer.exists()
    assert report.summary['frames'] == 1


@pytest.mark.slow
def test_full_corpus():
    settings_ = dict(FUZZ, workers=4)
    report = run_fuzz(settings_, EngineConfig(label_bits=FUZZ['label_bits'], trace=False))
    assert report.ok, report.first_failure
    assert report.summary['frames'] == FUZZ['frames']
    assert int(report.frames['conflicts_2'].sum()) >= 0


def test_stats_record_key_value_lines():
    stats = FrameStats(active_cycles=8, pause_cycles=1, drain_cycles=4, conflict_histogram=[6, 1, 1])
    verdict = RealtimeVerdict(budget=100, used=13, slack=87, passed=True)
    record = stats_record(stats, verdict, {'pattern': 'comb'})
    text = format_record(record)
    lines = text.splitlines()
    assert lines[0] == 'pattern=comb'
    assert 'total_cycles=13' in lines
    assert 'conflicts_2=1' in lines
    assert 'valid=true' in lines
    assert lines[-1] == 'verdict=pass'
    assert format_record(record, as_json=True).startswith('{"pattern": "comb"')


def test_frame_statistics_empty_and_filled():
    assert get_frame_statistics(summarise_frames([]))['frames'] == 0
    frames_ = summarise_frames([
        {'ok': True, 'pause_cycles': 2, 'peak_label': 9, 'chain_recodes': 0},
        {'ok': False, 'pause_cycles': 4, 'peak_label': 3, 'chain_recodes': 1},
    ])
    summary = get_frame_statistics(frames_)
    assert summary == {
        'frames': 2,
        'failures': 1,
        'mean_pause_cycles': 3.0,
        'max_pause_cycles': 4,
        'max_peak_label': 9,
        'chain_recodes': 1,
    }
