import json
import math
from fractions import Fraction

import numpy as np
import pytest

from boards import SizeLimitError
from exactnum import factorial
from shuffle import STANDARD_DECK, DeckComposition, perfect_shuffle_count
from verify import (SimulationResult, block_generators, block_sizes, count_perfect, draw_below,
                    format_simulation, shuffle_block, simulate, z_score)

DECK52_PROBABILITY = Fraction(672058204939482014438623912695190927357,
                             14778213400262135041705388361938994140625)

# numpy's published PCG64 test vectors (random/tests/data/pcg64-testset-*.csv).
REFERENCE_SEED = 0xDEADBEAF
REFERENCE_WORDS = [0x60d24054e17a0698, 0xd5e79d89856e4f12, 0xd254972fe64bd782,
                   0xf1e3072a53c72571, 0xd7c1d7393d4115c9]
ZERO_SEED_WORDS = [0xa30febcfd9c2825f, 0x4510bdf882d9d721, 0x0a7d3da94ecde8b8]

# Fisher-Yates rows for n=4, 10 rows, drawn from the REFERENCE_SEED stream.
REFERENCE_ROWS = [
    [3, 0, 2, 1], [1, 0, 2, 3], [2, 1, 0, 3], [2, 0, 1, 3], [2, 1, 0, 3],
    [2, 0, 3, 1], [1, 0, 2, 3], [2, 1, 3, 0], [2, 3, 1, 0], [2, 3, 1, 0],
]


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in partitions(n - part, part):
            yield (part,) + rest


def exact_probability(deck):
    return Fraction(perfect_shuffle_count(deck), factorial(deck.n))


def test_trivial_decks():
    assert simulate(DeckComposition((1, 1, 1)), trials=1000, seed=1).estimate == 1.0
    assert simulate(DeckComposition((3,)), trials=1000, seed=1).estimate == 0.0
    assert simulate(DeckComposition((1,)), trials=5, seed=0).successes == 5


def test_result_fields():
    result = simulate(DeckComposition((2, 2)), trials=10_000, seed=7)
    assert 0 <= result.successes <= result.trials == 10_000
    assert result.estimate == result.successes / result.trials
    assert result.stderr == pytest.approx(math.sqrt(result.estimate * (1 - result.estimate) / 10_000))
    assert result.seed == 7


def test_same_seed_same_result():
    deck = DeckComposition((3, 3, 2))
    first = simulate(deck, trials=50_000, seed=2024, block_size=4096)
    second = simulate(deck, trials=50_000, seed=2024, block_size=4096)
    assert first == second


def test_worker_count_does_not_change_result():
    deck = DeckComposition((4, 4, 4))
    serial = simulate(deck, trials=40_000, seed=99, workers=1, block_size=3000)
    parallel = simulate(deck, trials=40_000, seed=99, workers=4, block_size=3000)
    assert serial == parallel


def test_different_seeds_differ():
    deck = DeckComposition((4, 4, 4))
    counts = {simulate(deck, trials=20_000, seed=seed).successes for seed in range(1, 6)}
    assert len(counts) > 1


def test_argument_validation():
    deck = DeckComposition((2, 2))
    with pytest.raises(ValueError):
        simulate(deck, trials=0, seed=1)
    with pytest.raises(ValueError):
        simulate(deck, trials=10, seed=-1)
    with pytest.raises(ValueError):
        simulate(deck, trials=10, seed=2 ** 64)
    with pytest.raises(ValueError):
        simulate(deck, trials=10, seed=1, workers=0)


def test_block_sizes():
    assert block_sizes(10, 4) == [4, 4, 2]
    assert block_sizes(8, 4) == [4, 4]
    assert block_sizes(3, 4) == [3]


def test_shuffle_block_rows_are_permutations():
    perms = shuffle_block(6, 500, np.random.PCG64(5))
    assert perms.shape == (500, 6)
    assert (np.sort(perms, axis=1) == np.arange(6)).all()


def test_bit_generator_matches_published_stream():
    assert np.random.PCG64(REFERENCE_SEED).random_raw(5).tolist() == REFERENCE_WORDS
    assert np.random.PCG64(0).random_raw(3).tolist() == ZERO_SEED_WORDS


def test_block_generators_chain_jumps():
    first, second, third = block_generators(REFERENCE_SEED, 3)
    assert first.random_raw(5).tolist() == REFERENCE_WORDS
    jumped = np.random.PCG64(REFERENCE_SEED).jumped()
    assert second.random_raw(4).tolist() == jumped.random_raw(4).tolist()
    assert third.random_raw(4).tolist() == jumped.jumped().random_raw(4).tolist()
    assert len(block_generators(1, 1)) == 1


@pytest.mark.parametrize("word, bound, expected", [
    (0x60d24054e17a0698, 4, 1),
    (0xd5e79d89856e4f12, 4, 3),
    (2 ** 63, 3, 1),
    (0, 7, 0),
    (2 ** 64 - 1, 52, 51),
    (2 ** 64 - 1, 2 ** 32, 2 ** 32 - 1),
    (2 ** 64 - 1, 1, 0),
])
def test_draw_below(word, bound, expected):
    assert draw_below(np.array([word], dtype=np.uint64), bound).tolist() == [expected]


def test_draw_below_rejects_bounds():
    words = np.zeros(1, dtype=np.uint64)
    with pytest.raises(ValueError):
        draw_below(words, 0)
    with pytest.raises(ValueError):
        draw_below(words, 2 ** 32 + 1)


def test_shuffle_block_reference_rows():
    perms = shuffle_block(4, 10, np.random.PCG64(REFERENCE_SEED))
    assert perms.tolist() == REFERENCE_ROWS


def test_simulate_reference_successes():
    result = simulate(DeckComposition((2, 2)), trials=10, seed=REFERENCE_SEED, block_size=10)
    assert result.successes == 3
    result = simulate(DeckComposition((2, 2, 2)), trials=8, seed=REFERENCE_SEED, block_size=8)
    assert result.successes == 2


def test_shuffle_block_wide_labels():
    perms = shuffle_block(33_000, 1, np.random.PCG64(3))
    assert (np.sort(perms[0]) == np.arange(33_000)).all()


def test_simulate_deck_size_guard():
    with pytest.raises(SizeLimitError, match="deck too large"):
        simulate(DeckComposition((1,) * 501), trials=1, seed=0)


def test_count_perfect():
    colors = np.array([0, 0, 1], dtype=np.int16)
    perms = np.array([[0, 2, 1], [0, 1, 2], [2, 0, 1]])
    assert count_perfect(colors, perms) == 1


@pytest.mark.slow
def test_shuffle_is_unbiased_for_four_cards():
    trials = 10 ** 6
    perms = shuffle_block(4, trials, np.random.PCG64(314)).astype(np.int64)
    codes = perms @ np.array([64, 16, 4, 1])
    _, freq = np.unique(codes, return_counts=True)
    assert len(freq) == 24
    p = 1 / 24
    sigma = math.sqrt(trials * p * (1 - p))
    assert np.all(np.abs(freq - trials * p) <= 5 * sigma)


@pytest.mark.parametrize("counts", [c for n in range(1, 9) for c in partitions(n)])
def test_estimate_close_to_exact_for_small_decks(counts):
    deck = DeckComposition(counts)
    result = simulate(deck, trials=10 ** 5, seed=sum(counts) * 1000 + len(counts))
    assert abs(z_score(result, exact_probability(deck))) <= 4


@pytest.mark.slow
def test_standard_deck_within_three_stderr():
    result = simulate(STANDARD_DECK, trials=10 ** 6, seed=42)
    assert abs(result.estimate - float(DECK52_PROBABILITY)) <= 3 * result.stderr
    assert simulate(STANDARD_DECK, trials=10 ** 6, seed=42) == result


def test_z_score_degenerate_cases():
    never = SimulationResult(trials=10, successes=0, seed=0, block_size=10)
    assert z_score(never, Fraction(0)) == 0.0
    assert z_score(never, Fraction(1, 2)) == math.inf


def test_format_simulation():
    result = SimulationResult(trials=10, successes=10, seed=1, block_size=10)
    text = format_simulation(result, exact=Fraction(1))
    assert "estimate: 1.000000000000" in text
    assert "exact: 1.000000000000" in text
    data = json.loads(format_simulation(result, as_json=True))
    assert data['estimate'] == 1.0
    assert data['seed'] == 1
