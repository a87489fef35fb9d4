"""Reading and writing attribute manifests and age label files.

Attribute manifest follows the CelebA text convention:

    line 1: image count
    line 2: attribute names, space separated
    rest:   "<filename> <flag> ... <flag>"   with flags in {-1, 1}

Age labels are CSV rows "filename,age_years[,identity_id]".
"""

from __future__ import annotations

import csv
import os

from ..exceptions import ManifestParseError, SchemaError
from .records import AttributeVector, DatasetRecord


def load_attribute_manifest(manifest_path: str, schema: list[str]) -> list[DatasetRecord]:
    """Parse a CelebA-style manifest, keeping only the schema attributes.

    Flags are remapped +1 -> 1, -1 -> 0 and ordered per the schema, not per
    the manifest header.
    """
    with open(manifest_path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if len(lines) < 2:
        raise ManifestParseError("manifest needs a count line and a header line", manifest_path)
    try:
        declared = int(lines[0].strip())
    except ValueError:
        raise ManifestParseError("first line is not an image count", manifest_path, 1) from None
    header = lines[1].split()
    missing = [name for name in schema if name not in header]
    if missing:
        raise SchemaError(f"schema names {missing} not in manifest header")
    columns = [header.index(name) for name in schema]

    records = []
    for lineno, line in enumerate(lines[2:], start=3):
        if not line.strip():
            continue
        parts = line.split()
        filename, flags = parts[0], parts[1:]
        if len(flags) != len(header):
            raise ManifestParseError(
                f"row has {len(flags)} flags, header declares {len(header)}",
                manifest_path,
                lineno,
            )
        values = []
        for col in columns:
            flag = flags[col]
            if flag == "1":
                values.append(1.0)
            elif flag == "-1":
                values.append(0.0)
            else:
                raise ManifestParseError(f"flag {flag!r} is not +1/-1", manifest_path, lineno)
        image_path = os.path.join(os.path.dirname(manifest_path), "images", filename)
        records.append(DatasetRecord(image_path=image_path, attributes=AttributeVector(values, schema)))
    if declared != len(records):
        raise ManifestParseError(
            f"count line declares {declared} images, found {len(records)} rows", manifest_path, 1
        )
    return records


def load_age_labels(csv_path: str) -> dict[str, tuple[int, str | None]]:
    """Return filename -> (age_years, identity_id or None)."""
    ages: dict[str, tuple[int, str | None]] = {}
    with open(csv_path, "r", encoding="utf-8", newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row:
                continue
            if len(row) not in (2, 3):
                raise ManifestParseError("expected filename,age[,identity]", csv_path, lineno)
            try:
                age = int(row[1])
            except ValueError:
                raise ManifestParseError(f"age {row[1]!r} is not an integer", csv_path, lineno) from None
            identity = row[2] if len(row) == 3 else None
            ages[row[0]] = (age, identity)
    return ages


def attach_age_labels(records: list[DatasetRecord], ages: dict[str, tuple[int, str | None]]) -> list[DatasetRecord]:
    """Fill age/identity on records whose filename appears in the label map."""
    out = []
    for rec in records:
        key = os.path.basename(rec.image_path)
        if key in ages:
            age, identity = ages[key]
            out.append(
                DatasetRecord(
                    image_path=rec.image_path,
                    attributes=rec.attributes,
                    age_years=age,
                    identity_id=identity,
                )
            )
        else:
            out.append(rec)
    return out


def write_attribute_manifest(manifest_path: str, records: list[DatasetRecord], schema: list[str]) -> None:
    lines = [str(len(records)), " ".join(schema)]
    for rec in records:
        flags = " ".join("1" if rec.attributes.get(name) >= 0.5 else "-1" for name in schema)
        lines.append(f"{os.path.basename(rec.image_path)} {flags}")
    with open(manifest_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def write_age_labels(csv_path: str, records: list[DatasetRecord]) -> None:
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        for rec in records:
            if rec.age_years is None:
                continue
            row = [os.path.basename(rec.image_path), str(rec.age_years)]
            if rec.identity_id is not None:
                row.append(rec.identity_id)
            writer.writerow(row)
