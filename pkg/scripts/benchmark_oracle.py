import argparse
import sys
import time
from pathlib import Path

import numpy as np
from tqdm import tqdm

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.btree import ball_size, displacement_oracle  # noqa: E402
from src.localfield import FieldConfig, get_field  # noqa: E402
from src.psl2 import ProjectiveMatrix, translation_length  # noqa: E402


def _random_sl2(field, rng):
    def scalar():
        u = int(rng.integers(1, field.p)) + field.p * int(rng.integers(0, field.p))
        return field.base(u) * field.pi ** int(rng.integers(-2, 3))

    a, b, c = scalar(), scalar(), scalar()
    return ProjectiveMatrix(a, b, c, (1 + b * c) / a)


def benchmark_oracle(p: int, radius: int, num_matrices: int, seed: int):
    field = get_field(FieldConfig(kind="padic", p=p))
    print("Benchmarking displacement oracle:")
    print(f"  Field: {field}")
    print(f"  Radius: {radius} ({ball_size(p, radius)} vertices)")
    print(f"  Matrices: {num_matrices}")

    rng = np.random.default_rng(seed)
    matrices = [_random_sl2(field, rng) for _ in range(num_matrices)]

    start_time = time.time()
    agree, unstable = 0, 0
    for M in tqdm(matrices, desc="oracle"):
        result = displacement_oracle(M, radius)
        if not result.stable:
            unstable += 1
        elif result.value == translation_length(M):
            agree += 1
    oracle_time = time.time() - start_time

    start_time = time.time()
    for M in matrices:
        translation_length(M)
    formula_time = time.time() - start_time

    print(f"\n{'='*60}")
    print("Benchmark Results:")
    print(f"{'='*60}")
    print(f"Oracle time: {oracle_time:.2f}s ({oracle_time/num_matrices*1000:.2f}ms per matrix)")
    print(f"Formula time: {formula_time*1000:.2f}ms total")
    print(f"Stable and equal to the formula: {agree}/{num_matrices}")
    print(f"Lower bounds only: {unstable}")
    return 0 if agree + unstable == num_matrices else 1


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Benchmark the tree displacement oracle against the trace formula")
    parser.add_argument("--p", type=int, default=3, help="Residue characteristic")
    parser.add_argument("--radius", type=int, default=4, help="Probe radius")
    parser.add_argument("--num-matrices", type=int, default=100, help="Number of random matrices")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    sys.exit(benchmark_oracle(args.p, args.radius, args.num_matrices, args.seed))
