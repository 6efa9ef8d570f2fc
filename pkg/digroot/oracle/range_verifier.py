import os
import random
import time
from multiprocessing import Pool
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from digroot.engine import RootKind, extract_root
from digroot.natural import DecimalNatural, NaturalLike, as_natural
from digroot.oracle.oracle import floor_root_int
from digroot.utils.utils_config import get_setting
from digroot.utils.utils_io import get_logger

logger = get_logger()


class Mismatch(NamedTuple):
    """An input on which the engine and the oracle disagree."""

    x: int
    k: int
    engine_root: int
    engine_remainder: int
    oracle_root: int
    oracle_remainder: int

    def describe(self) -> str:
        x, engine_root, engine_remainder, oracle_root, oracle_remainder = (
            DecimalNatural.from_int(v)
            for v in (self.x, self.engine_root, self.engine_remainder, self.oracle_root, self.oracle_remainder)
        )
        return (
            f"x={x} k={self.k}: engine gives {engine_root} r {engine_remainder}, "
            f"oracle gives {oracle_root} r {oracle_remainder}"
        )


class VerificationReport(NamedTuple):
    """How many inputs were checked, and the smallest mismatching input if there was one."""

    k: int
    checked: int
    mismatch: Optional[Mismatch]

    @property
    def success(self) -> bool:
        return self.mismatch is None

    def describe(self) -> str:
        if self.success:
            return f"OK: {self.checked} values checked for k={self.k}, no mismatch."
        assert self.mismatch is not None
        return f"MISMATCH after {self.checked} values checked: {self.mismatch.describe()}"


def check_value(x: int, k: int, check_invariants: bool = False) -> Optional[Mismatch]:
    """Compare the engine against the oracle on root and remainder for one input."""
    result = extract_root(x, k, check_invariants=check_invariants)
    oracle_root = floor_root_int(x, k)
    oracle_remainder = x - oracle_root**k
    engine_root, engine_remainder = int(result.root), int(result.remainder)
    if engine_root == oracle_root and engine_remainder == oracle_remainder:
        return None
    return Mismatch(x, k, engine_root, engine_remainder, oracle_root, oracle_remainder)


def _check_batch(args: Tuple[int, Sequence[int], bool]) -> VerificationReport:
    """Worker entry point: check every value of one batch and keep the smallest mismatch."""
    k, values, check_invariants = args
    smallest: Optional[Mismatch] = None
    for x in values:
        mismatch = check_value(x, k, check_invariants)
        if mismatch is not None and (smallest is None or mismatch.x < smallest.x):
            smallest = mismatch
    return VerificationReport(k, len(values), smallest)


def merge_reports(k: int, reports: Sequence[VerificationReport]) -> VerificationReport:
    """Sum the counts and keep the smallest mismatching input over all batches."""
    mismatches = [r.mismatch for r in reports if r.mismatch is not None]
    smallest = min(mismatches, key=lambda m: m.x) if mismatches else None
    return VerificationReport(k, sum(r.checked for r in reports), smallest)


class DifferentialVerifier:
    """
    Runs engine and oracle side by side over many inputs.

    Attributes:
    - k (int): root exponent, 2 or 3.
    - threads (int): worker processes. 1 runs in-process, 0 uses one worker per CPU.
    - batch_size (int): values handed to a worker at a time.
    - check_invariants (bool): also run the in-engine loop invariant assertions. Off by default.
    """

    def __init__(
        self,
        k: int,
        threads: Optional[int] = None,
        batch_size: Optional[int] = None,
        check_invariants: bool = False,
    ) -> None:
        self.kind = RootKind.from_exponent(k)
        self.k = self.kind.k
        self.threads = threads if threads is not None else int(get_setting("verify", "threads", 1))
        if self.threads < 1:
            self.threads = os.cpu_count() or 1
        self.batch_size = batch_size if batch_size is not None else int(get_setting("verify", "batch_size", 10000))
        self.batch_size = max(self.batch_size, 1)
        self.check_invariants = check_invariants
        self.t = 0.0

    def verify_range(self, lo: NaturalLike, hi: NaturalLike) -> VerificationReport:
        """Check every x in [lo, hi]."""
        lo_n, hi_n = as_natural(lo), as_natural(hi)
        if lo_n > hi_n:
            error_msg = f"Invalid range [{lo_n}, {hi_n}]: need lo <= hi."
            logger.error(error_msg)
            raise ValueError(error_msg)
        logger.info(f"Verifying k={self.k} on [{lo_n}, {hi_n}] with {self.threads} worker(s).")
        return self._run(self._range_batches(int(lo_n), int(hi_n)))

    def verify_values(self, values: Sequence[int]) -> VerificationReport:
        """Check an explicit list of inputs."""
        batches = [list(values[j : j + self.batch_size]) for j in range(0, len(values), self.batch_size)]
        return self._run(iter(batches))

    def verify_random(self, count: int, digits: int, seed: Optional[int] = None) -> VerificationReport:
        """Check `count` random inputs of 1 to `digits` digits, the digit count drawn uniformly."""
        if count < 0 or digits < 1:
            error_msg = f"Need count >= 0 and digits >= 1, got count={count}, digits={digits}."
            logger.error(error_msg)
            raise ValueError(error_msg)
        seed = seed if seed is not None else int(get_setting("verify", "seed", 1729))
        logger.info(f"Verifying k={self.k} on {count} random values of up to {digits} digits (seed {seed}).")
        return self.verify_values(random_inputs(count, digits, seed))

    def _range_batches(self, lo: int, hi: int) -> Iterator[List[int]]:
        for start in range(lo, hi + 1, self.batch_size):
            yield list(range(start, min(start + self.batch_size, hi + 1)))

    def _run(self, batches: Iterator[List[int]]) -> VerificationReport:
        self.t = time.time()
        tasks = ((self.k, batch, self.check_invariants) for batch in batches)
        if self.threads == 1:
            reports = [_check_batch(task) for task in tasks]
        else:
            with Pool(processes=self.threads) as pool:
                reports = pool.map(_check_batch, list(tasks))
        report = merge_reports(self.k, reports)
        elapsed_time = time.time() - self.t
        logger.info(f"{report.describe()} ({elapsed_time:.2f} seconds)")
        return report


def random_inputs(count: int, digits: int, seed: int) -> List[int]:
    """Reproducible random naturals; the digit count is drawn first so short and long inputs both appear."""
    rng = random.Random(seed)
    values = []
    for _ in range(count):
        length = rng.randint(1, digits)
        low = 0 if length == 1 else 10 ** (length - 1)
        values.append(rng.randint(low, 10**length - 1))
    return values


def verify_range(lo: NaturalLike, hi: NaturalLike, k: int, threads: Optional[int] = None) -> VerificationReport:
    return DifferentialVerifier(k, threads=threads).verify_range(lo, hi)


def verify_random(count: int, digits: int, k: int, seed: Optional[int] = None) -> VerificationReport:
    return DifferentialVerifier(k).verify_random(count, digits, seed)
