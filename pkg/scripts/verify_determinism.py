import argparse
import sys
from pathlib import Path

from tqdm import tqdm

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.decide import decide  # noqa: E402
from src.document import InputDocument  # noqa: E402
from src.psl2 import ProjectiveMatrix, conjugate  # noqa: E402


def verify_documents(paths, conjugator):
    """Decide each document twice, swapped and conjugated; every verdict must agree."""
    failures = 0
    for path in tqdm(paths, desc="documents"):
        A, B = InputDocument.load(path).matrices()
        first = decide(A, B)
        second = decide(A, B)
        if first.to_dict() != second.to_dict():
            print(f"✗ {path}: two runs differ")
            failures += 1
            continue

        swapped = decide(B, A)
        if (swapped.discrete, swapped.case) != (first.discrete, first.case):
            print(f"✗ {path}: swapping A and B gives {swapped.render()} instead of {first.render()}")
            failures += 1

        C = ProjectiveMatrix.from_rows(A.field, conjugator)
        moved = decide(conjugate(A, C), conjugate(B, C))
        if moved.render() != first.render() or moved.isomorphism != first.isomorphism:
            print(f"✗ {path}: conjugation gives {moved.render()} instead of {first.render()}")
            failures += 1

    print(f"\nChecked {len(paths)} documents, {failures} failures")
    if failures:
        print("✗ Verdicts are NOT deterministic and invariant")
        sys.exit(1)
    print("✓ Verdicts are deterministic, swap invariant and conjugation invariant")
    sys.exit(0)


def main():
    parser = argparse.ArgumentParser(description="Verify that decide is deterministic and invariant")
    parser.add_argument(
        "documents",
        type=str,
        nargs="+",
        help="Input documents or directories of them",
    )
    parser.add_argument(
        "--conjugator",
        type=str,
        nargs=4,
        default=["1", "1", "0", "1"],
        metavar=("A", "B", "C", "D"),
        help="Entries of the conjugating matrix",
    )
    args = parser.parse_args()

    paths = []
    for item in args.documents:
        p = Path(item)
        paths.extend(sorted(p.glob("*.yaml")) if p.is_dir() else [p])
    c = args.conjugator
    verify_documents(paths, [[c[0], c[1]], [c[2], c[3]]])


if __name__ == "__main__":
    main()
