import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from somino.dyck import (
    DyckPath,
    PathError,
    enumerate_paths,
    is_valid_order,
    order_blocks,
    path_to_tower,
    tower_to_path,
    validate_path,
)
from somino.enumerator import EnumSpec, enumerate_towers, nvecs
from somino.exact import HnSpec, count_dyck
from somino.tower import Block, ClassSpec, Tower, TowerError

from conftest import dominoes

# worked by hand: level before each up-step is the block offset
MIXED_WORD = (2, 3, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 1, 3, 0, 0, 0, 0)


def test_mixed_block_order(mixed_tower):
    order = order_blocks(mixed_tower)
    assert order[0] == Block(0, 0, 3)
    assert [(b.offset, b.row) for b in order] == [(0, 0), (2, 1), (4, 2), (5, 3), (1, 2), (3, 4), (0, 3), (1, 5)]
    assert is_valid_order(mixed_tower, order)


def test_mixed_word(mixed_tower):
    p = tower_to_path(mixed_tower)
    assert p.word == MIXED_WORD
    assert validate_path(p)
    assert p.spec == HnSpec([(1, 1), (5, 2), (2, 3)])
    assert path_to_tower(p, (2, 3, 4)) == mixed_tower


def test_small_words():
    assert str(tower_to_path(dominoes([(0, 0)]))) == "1,0"
    assert tower_to_path(dominoes([(0, 0), (0, 1)])).word == (1, 0, 1, 0)
    assert tower_to_path(dominoes([(0, 0), (1, 1)])).word == (1, 1, 0, 0)


def test_validate_path():
    spec = HnSpec([(2, 1)])
    assert validate_path(DyckPath(spec, [1, 0, 1, 0]))
    assert not validate_path(DyckPath(spec, [0, 1, 1, 0]))
    assert not validate_path(DyckPath(spec, [1, 1, 0]))
    assert not validate_path(DyckPath(spec, [1, 2, 0, 0]))


def test_bad_inputs():
    with pytest.raises(PathError):
        path_to_tower(DyckPath(HnSpec([(1, 1)]), [0, 1]))
    with pytest.raises(TowerError):
        tower_to_path(dominoes([(0, 0), (-1, 1)]))
    with pytest.raises(TowerError):
        tower_to_path(Tower((1,), [Block(0, 0, 1)]))


def test_enumerate_paths_sorted_and_counted():
    spec = HnSpec([(2, 1), (1, 2)])
    paths = list(enumerate_paths(spec))
    assert [p.word for p in paths] == sorted(p.word for p in paths)
    assert len(paths) == count_dyck(spec)
    assert all(validate_path(p) for p in paths)


@pytest.mark.parametrize("ws", [(2,), (3,), (2, 3)])
def test_round_trips(ws):
    for n in range(1, 5):
        for nv in nvecs(len(ws), n):
            towers = enumerate_towers(EnumSpec(ws, nv, ClassSpec.U()))
            spec = HnSpec.from_towers(ws, nv)
            assert len(towers) == count_dyck(spec)
            images = {tower_to_path(t) for t in towers}
            assert len(images) == len(towers)
            assert all(path_to_tower(tower_to_path(t), ws) == t for t in towers)
            for p in enumerate_paths(spec):
                assert tower_to_path(path_to_tower(p, ws)) == p


def test_greedy_order_is_unique_valid_order():
    from itertools import permutations

    t = dominoes([(0, 0), (1, 1), (0, 2)])
    valid = [o for o in permutations(t.blocks) if is_valid_order(t, o)]
    assert valid == [tuple(order_blocks(t))]


paths = st.sampled_from(list(enumerate_paths(HnSpec([(2, 1), (2, 2)]))))


@settings(derandomize=True, max_examples=100)
@given(paths)
def test_prefix_sums(p):
    levels = p.levels()
    assert all(h >= 0 for h in levels)
    assert levels[-1] == 0
    assert len(p.word) == p.spec.length
    assert sum(c if c else -1 for c in p.word) == 0


@settings(derandomize=True, max_examples=100)
@given(paths, st.integers(0, 9))
def test_swapping_in_a_leading_down_step_breaks_path(p, i):
    word = list(p.word)
    if word[i] == 0:
        word.insert(0, word.pop(i))
        assert not validate_path(DyckPath(p.spec, word))
