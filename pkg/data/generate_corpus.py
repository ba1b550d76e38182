#!/usr/bin/env python3
"""
Generate the exhaustive simplicial corpus used by the theorem sweep.

Writes every presheaf on Δ_≤k with at most N elements per stage (one per
isomorphism class) to data/corpus/ as a JSON list.
"""

import argparse
import sys
import time
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.append(str(project_root))

from data.generators.simplicial_generator import SimplicialGenerator  # noqa: E402


def generate_corpus(max_dim: int, max_per_stage: int, cap: int, output_dir: Path) -> bool:
    start_time = time.time()

    print("=" * 60)
    print("Simplicial Corpus Generation")
    print("=" * 60)
    print(f"   Base: Δ_≤{max_dim} | elements per stage: ≤ {max_per_stage} | cap: {cap}")

    generator = SimplicialGenerator(max_dim=max_dim, max_per_stage=max_per_stage, cap=cap)
    presheaves = generator.generate()
    if not presheaves:
        print("✗ No presheaves generated")
        return False
    path = generator.save(presheaves, str(output_dir))

    elapsed_time = time.time() - start_time
    print("\n" + "=" * 60)
    print("GENERATION COMPLETE")
    print("=" * 60)
    print(f"Time elapsed: {elapsed_time:.2f} seconds")
    print(f"Candidates: {generator.metrics['candidates']:,}")
    print(f"Duplicates: {generator.metrics['duplicates']:,}")
    print(f"Kept: {generator.metrics['kept']:,}")
    if generator.metrics['capped']:
        print(f"⚠️ Stopped at the cap of {cap}")
    print(f"\nOutput file: {path}")
    return True


def main() -> int:
    parser = argparse.ArgumentParser(description='Generate the exhaustive simplicial corpus')
    parser.add_argument('--max-dim', type=int, default=2, help='Truncation of Δ (default: 2)')
    parser.add_argument('--max-per-stage', type=int, default=3, help='Elements per stage (default: 3)')
    parser.add_argument('--cap', type=int, default=5000, help='Maximum number of presheaves (default: 5000)')
    parser.add_argument('--output-dir', default=str(Path(__file__).parent / "corpus"),
                        help='Output directory (default: data/corpus)')
    args = parser.parse_args()
    ok = generate_corpus(args.max_dim, args.max_per_stage, args.cap, Path(args.output_dir))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
