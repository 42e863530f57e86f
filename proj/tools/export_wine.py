#!/usr/bin/env python3
"""Export the UCI Wine dataset bundled with scikit-learn to a CSV file.

Writes 13 feature columns plus a trailing integer class column (0/1/2).
Usage: python3 export_wine.py OUTPUT.csv
"""
import sys

try:
    from sklearn.datasets import load_wine
except ImportError:
    sys.stderr.write("scikit-learn is not installed; cannot export the Wine dataset\n")
    sys.exit(1)


def main() -> int:
    if len(sys.argv) != 2:
        sys.stderr.write(f"usage: {sys.argv[0]} OUTPUT.csv\n")
        return 1
    data = load_wine()
    with open(sys.argv[1], "w", encoding="ascii") as out:
        for row, label in zip(data.data, data.target):
            out.write(",".join(repr(float(v)) for v in row))
            out.write(f",{int(label)}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
