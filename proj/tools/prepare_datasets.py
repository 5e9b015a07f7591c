#!/usr/bin/env python3
"""Rebuild the CSV files under datasets/ from locally installed copies.

Inputs:
  - scikit-learn's bundled iris.csv and wine_data.csv
  - the keel-ds 0.2.5 wheel (raw/heart.dat, raw/australian.dat)

Writes datasets/<name>.csv (header row, label last) and refreshes the
checksums in datasets/MANIFEST.json.
"""
import argparse
import csv
import hashlib
import io
import json
import pathlib
import zipfile

import sklearn

SKLEARN_DATA = pathlib.Path(sklearn.__file__).parent / "datasets" / "data"

IRIS_FEATURES = ["sepal_length", "sepal_width", "petal_length", "petal_width"]
WINE_FEATURES = [
    "alcohol", "malic_acid", "ash", "alcalinity_of_ash", "magnesium", "total_phenols",
    "flavanoids", "nonflavanoid_phenols", "proanthocyanins", "color_intensity", "hue",
    "od280_od315", "proline",
]
HEART_FEATURES = [
    "age", "sex", "chest_pain", "resting_bp", "cholesterol", "fasting_blood_sugar",
    "resting_ecg", "max_heart_rate", "exercise_angina", "oldpeak", "slope",
    "major_vessels", "thal",
]
AUSTRALIAN_FEATURES = [f"A{i}" for i in range(1, 15)]


def sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def sklearn_table(filename, features):
    text = (SKLEARN_DATA / filename).read_text()
    rows = list(csv.reader(io.StringIO(text)))
    names = rows[0][2:]
    out = []
    for row in rows[1:]:
        out.append(row[:-1] + [names[int(row[-1])]])
    return features, out, sha256(text.encode())


def keel_table(wheel, member):
    with zipfile.ZipFile(wheel) as z:
        raw = z.read(member)
    rows = [line.split(",") for line in raw.decode().splitlines() if line and not line.startswith("@")]
    return rows, sha256(raw)


def fmt(value: float) -> str:
    return repr(value).removesuffix(".0") if value == int(value) else repr(value)


def write_csv(path, header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header + ["label"])
    writer.writerows(rows)
    data = buf.getvalue().encode()
    path.write_bytes(data)
    return sha256(data), len(rows)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--keel-wheel", type=pathlib.Path, required=True)
    parser.add_argument("--out", type=pathlib.Path, default=pathlib.Path(__file__).parent.parent / "datasets")
    args = parser.parse_args()
    args.out.mkdir(exist_ok=True)

    manifest_path = args.out / "MANIFEST.json"
    manifest = json.loads(manifest_path.read_text()) if manifest_path.exists() else {"datasets": {}}
    results = {}

    header, rows, src = sklearn_table("iris.csv", IRIS_FEATURES)
    results["iris"] = (header, rows, src)
    header, rows, src = sklearn_table("wine_data.csv", WINE_FEATURES)
    results["wine"] = (header, rows, src)

    raw, src = keel_table(args.keel_wheel, "keel_ds/data/balanced/raw/heart.dat")
    rows = []
    for r in raw:
        values = [float(v) for v in r]
        # oldpeak lost its decimal point in this redistribution; every
        # original value has exactly one decimal digit.
        values[9] /= 10.0
        label = "absent" if values[13] == 1 else "present"
        rows.append([fmt(v) for v in values[:13]] + [label])
    results["heart"] = (HEART_FEATURES, rows, src)

    raw, src = keel_table(args.keel_wheel, "keel_ds/data/balanced/raw/australian.dat")
    rows = [[fmt(float(v)) for v in r[:14]] + [r[14].strip()] for r in raw]
    results["australian"] = (AUSTRALIAN_FEATURES, rows, src)

    for name, (header, rows, src) in results.items():
        digest, count = write_csv(args.out / f"{name}.csv", header, rows)
        entry = manifest["datasets"].setdefault(name, {})
        entry.update({"file": f"{name}.csv", "rows": count, "features": len(header),
                      "sha256": digest, "source_sha256": src})
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")


if __name__ == "__main__":
    main()
