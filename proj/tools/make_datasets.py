#!/usr/bin/env python3
"""Export the bundled scikit-learn copies of the Iris, Wine and Breast-cancer
datasets to plain CSV files under data/.

Output format matches what the CLI's `--data` loader expects: a header row,
numeric feature columns, and the class label as the last column (string names,
mapped to dense integers in first-appearance order by the loader).

Usage: python3 tools/make_datasets.py [out_dir]
"""
import sys
from pathlib import Path

from sklearn.datasets import load_breast_cancer, load_iris, load_wine


def export(bunch, path: Path, label_name: str = "label") -> None:
    names = [n.replace(" ", "_").replace("(", "").replace(")", "") for n in bunch.feature_names]
    with path.open("w", newline="\n") as f:
        f.write(",".join(names + [label_name]) + "\n")
        for row, target in zip(bunch.data, bunch.target):
            cells = [repr(float(v)) for v in row]
            cells.append(str(bunch.target_names[target]))
            f.write(",".join(cells) + "\n")
    print(f"wrote {path} ({len(bunch.target)} rows, {len(names)} features)")


def main() -> None:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    out.mkdir(parents=True, exist_ok=True)
    export(load_iris(), out / "iris.csv")
    export(load_wine(), out / "wine.csv")
    export(load_breast_cancer(), out / "breast_cancer.csv")


if __name__ == "__main__":
    main()
