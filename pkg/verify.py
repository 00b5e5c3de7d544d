"""Monte Carlo cross-check of the exact perfect-shuffle probability.

Generator: numpy's PCG64 (PCG XSL RR 128/64). Only its raw 64-bit output
(`random_raw`) is consumed, so results follow numpy's bit-generator stream
guarantee and not the version-dependent Generator methods.

Trials are cut into fixed-size blocks. Block 0 draws from PCG64(seed); block
i + 1 draws from block i's generator `.jumped()`. The merged count depends only
on (deck, trials, seed, block_size) and never on how many worker threads ran
the blocks.

Within a block every row starts as 0..n-1 and is shuffled by Fisher-Yates from
the last position down: for i = n-1, ..., 1 one raw word per row (rows in
order) picks j = floor(word * (i + 1) / 2^64) and positions i and j swap.
Multiply-shift without rejection; each draw is off uniform by at most
(i + 1) / 2^64.
"""

import concurrent.futures
import json
import math
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

import config_loader
from exactnum import decimal_string
from shuffle import DeckComposition, check_deck_size

MAX_SEED = 2 ** 64
MAX_BOUND = 2 ** 32

_LOW32 = np.uint64(0xFFFFFFFF)
_SHIFT32 = np.uint64(32)


@dataclass(frozen=True)
class SimulationResult:
    trials: int
    successes: int
    seed: int
    block_size: int

    @property
    def estimate(self) -> float:
        return self.successes / self.trials

    @property
    def stderr(self) -> float:
        p = self.estimate
        return math.sqrt(p * (1 - p) / self.trials)


def block_sizes(trials: int, block_size: int) -> List[int]:
    full, rest = divmod(trials, block_size)
    return [block_size] * full + ([rest] if rest else [])


def block_generators(seed: int, blocks: int) -> List[np.random.PCG64]:
    """PCG64(seed) followed by successive jumps, one generator per block."""
    generators = [np.random.PCG64(seed)]
    while len(generators) < blocks:
        generators.append(generators[-1].jumped())
    return generators[:blocks]


def draw_below(words: np.ndarray, bound: int) -> np.ndarray:
    """floor(word * bound / 2^64) for each uint64 word, computed in 32-bit halves."""
    if not 1 <= bound <= MAX_BOUND:
        raise ValueError(f"bound must be in [1, 2^32], got {bound}")
    m = np.uint64(bound)
    high = words >> _SHIFT32
    low = words & _LOW32
    return ((high * m + ((low * m) >> _SHIFT32)) >> _SHIFT32).astype(np.intp)


def shuffle_block(n: int, size: int, bit_generator: np.random.PCG64) -> np.ndarray:
    """size x n array; each row a random permutation of 0..n-1."""
    labels = np.tile(np.arange(n, dtype=np.intp), (size, 1))
    rows = np.arange(size)
    for i in range(n - 1, 0, -1):
        j = draw_below(bit_generator.random_raw(size), i + 1)
        picked = labels[rows, j]
        labels[rows, j] = labels[:, i]
        labels[:, i] = picked
    return labels


def count_perfect(colors: np.ndarray, perms: np.ndarray) -> int:
    """Rows of perms whose colour sequence has no two equal neighbours."""
    dealt = colors[perms]
    touching = (dealt[:, 1:] == dealt[:, :-1]).any(axis=1)
    return int(np.count_nonzero(~touching))


def _run_block(colors: np.ndarray, size: int, bit_generator: np.random.PCG64) -> int:
    return count_perfect(colors, shuffle_block(len(colors), size, bit_generator))


def simulate(deck: DeckComposition, trials: Optional[int] = None, seed: Optional[int] = None,
             workers: Optional[int] = None, block_size: Optional[int] = None,
             verbose: bool = False) -> SimulationResult:
    """Shuffle a labelled deck `trials` times and count perfect shuffles."""
    defaults = config_loader.get_simulation_defaults()
    trials = defaults['trials'] if trials is None else trials
    seed = defaults['seed'] if seed is None else seed
    workers = defaults['workers'] if workers is None else workers
    block_size = defaults['block_size'] if block_size is None else block_size

    check_deck_size(deck)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if not 0 <= seed < MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned value, got {seed}")
    if workers < 1 or block_size < 1:
        raise ValueError("workers and block_size must be >= 1")

    colors = np.asarray(deck.colors, dtype=np.intp)
    sizes = block_sizes(trials, block_size)
    jobs: List[Tuple[int, np.random.PCG64]] = list(zip(sizes, block_generators(seed, len(sizes))))

    if verbose:
        print(f"🎲 Simulating deck {deck.spec()}: {trials:,} trials in {len(jobs)} blocks "
              f"on {workers} worker(s), seed {seed}", file=sys.stderr)

    if workers == 1:
        successes = sum(_run_block(colors, size, bit_generator) for size, bit_generator in jobs)
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            successes = sum(pool.map(lambda job: _run_block(colors, *job), jobs))

    if verbose:
        print(f"✅ {successes:,} perfect shuffles out of {trials:,}", file=sys.stderr)
    return SimulationResult(trials=trials, successes=successes, seed=seed, block_size=block_size)


def z_score(result: SimulationResult, exact: Fraction) -> float:
    """(estimate - exact) / stderr; 0 when equal, inf when stderr is 0 and they differ."""
    diff = result.estimate - float(exact)
    if result.stderr == 0:
        return 0.0 if Fraction(result.successes, result.trials) == exact else math.inf
    return diff / result.stderr


def format_simulation(result: SimulationResult, exact: Optional[Fraction] = None,
                      as_json: bool = False, digits: Optional[int] = None) -> str:
    digits = config_loader.get_decimal_digits() if digits is None else digits
    data = asdict(result)
    data['estimate'] = result.estimate
    data['stderr'] = result.stderr
    if exact is not None:
        data['exact'] = decimal_string(exact, digits)
        data['z'] = z_score(result, exact)
    if as_json:
        return json.dumps(data, indent=2)

    lines = [
        f"trials: {result.trials}",
        f"successes: {result.successes}",
        f"estimate: {result.estimate:.{digits}f}",
        f"stderr: {result.stderr:.{digits}f}",
        f"seed: {result.seed}",
    ]
    if exact is not None:
        lines.append(f"exact: {data['exact']}")
        lines.append(f"z: {data['z']:.3f}")
    return '\n'.join(lines)
