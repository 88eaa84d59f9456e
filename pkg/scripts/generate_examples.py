import argparse
import sys
from pathlib import Path

from tqdm import tqdm

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.document import InputDocument  # noqa: E402
from src.errors import ExampleUnavailable  # noqa: E402
from src.examples import generate_specs, make_example  # noqa: E402
from src.localfield import FieldConfig, get_field  # noqa: E402


def _slug(label: str) -> str:
    keep = [c if c.isalnum() else "_" for c in label]
    return "_".join(filter(None, "".join(keep).split("_")))


def generate_examples(output_dir: Path, configs):
    """Write one input document per realizable menu row, with the expected verdict as a header."""
    output_dir.mkdir(parents=True, exist_ok=True)
    written, skipped = 0, []
    specs = [spec for cfg in configs for spec in generate_specs(get_field(cfg))]
    for spec in tqdm(specs, desc="examples"):
        try:
            example = make_example(spec)
        except ExampleUnavailable as exc:
            skipped.append(f"{spec.label}: {exc}")
            continue
        doc = InputDocument.model_validate(example.document())
        path = output_dir / f"{_slug(spec.label)}.yaml"
        path.write_text(f"# {spec.label}\n# expected: {example.expected.render()} {spec.expected}\n" + doc.dump())
        written += 1

    print(f"Wrote {written} documents to {output_dir}")
    if skipped:
        print(f"Skipped {len(skipped)} unavailable rows:")
        for line in skipped:
            print(f"  ✗ {line}")


def _parse_field(text: str) -> FieldConfig:
    # "Q5" or "F9"
    kind = "padic" if text[0].upper() == "Q" else "laurent"
    q = int(text[1:])
    if kind == "padic":
        return FieldConfig(kind=kind, p=q)
    for p in range(2, q + 1):
        f, r = 0, q
        while r % p == 0:
            r //= p
            f += 1
        if f and r == 1:
            return FieldConfig(kind=kind, p=p, f=f)
    raise ValueError(f"{q} is not a prime power")


def main():
    parser = argparse.ArgumentParser(description="Generate input documents for every case the congruence menu admits")
    parser.add_argument(
        "--output-dir",
        type=str,
        default="outputs/examples",
        help="Output directory for the documents",
    )
    parser.add_argument(
        "--fields",
        type=str,
        nargs="+",
        default=["Q2", "Q3", "Q5", "Q7", "Q13", "F5", "F9"],
        help="Fields as Q<p> or F<q>",
    )
    args = parser.parse_args()

    generate_examples(Path(args.output_dir), [_parse_field(f) for f in args.fields])


if __name__ == "__main__":
    main()
