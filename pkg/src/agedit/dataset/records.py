"""Dataset records, age clusters and attribute vectors."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..exceptions import SchemaError

# Attribute names used for real CelebA-style runs. The source material
# announces thirteen names but enumerates twelve; the schema therefore stays
# configurable and these twelve are only a default.
CELEBA_DEFAULT_SCHEMA = [
    "Bald",
    "Bangs",
    "Black_Hair",
    "Blond_Hair",
    "Brown_Hair",
    "Bushy_Eyebrows",
    "Eyeglasses",
    "Male",
    "Mouth_Slightly_Open",
    "Mustache",
    "No_Beard",
    "Pale_Skin",
]

# Attributes rendered by the synthetic corpus; each one maps to exactly one
# visible overlay so a region test can read the bit back.
SYNTHETIC_SCHEMA = [
    "Bangs",
    "Blond_Hair",
    "Eyeglasses",
    "Mouth_Open",
    "Mustache",
    "Pale_Skin",
]

MAX_AGE_YEARS = 120


class AgeCluster(enum.Enum):
    """Ten-year age buckets conditioning the aging generator."""

    C0_30 = "C0_30"
    C31_40 = "C31_40"
    C41_50 = "C41_50"
    C51_PLUS = "C51_PLUS"

    @property
    def label(self):
        return _CLUSTER_LABELS[self]

    @classmethod
    def from_age(cls, age_years: int) -> "AgeCluster":
        if age_years < 0 or age_years > MAX_AGE_YEARS:
            raise ValueError(f"age {age_years} outside [0, {MAX_AGE_YEARS}]")
        if age_years <= 30:
            return cls.C0_30
        if age_years <= 40:
            return cls.C31_40
        if age_years <= 50:
            return cls.C41_50
        return cls.C51_PLUS

    @classmethod
    def parse(cls, text: str) -> "AgeCluster":
        """Accept the enum tag ("C51_PLUS") or the human label ("51+")."""
        t = text.strip()
        for member in cls:
            if t == member.value or t == member.label:
                return member
        raise ValueError(f"unknown age cluster {text!r}")


_CLUSTER_LABELS = {
    AgeCluster.C0_30: "0-30",
    AgeCluster.C31_40: "31-40",
    AgeCluster.C41_50: "41-50",
    AgeCluster.C51_PLUS: "51+",
}

# Older target clusters, in ascending age order (the young bucket is the
# aging source domain, never a target).
TARGET_CLUSTERS = [AgeCluster.C31_40, AgeCluster.C41_50, AgeCluster.C51_PLUS]


@dataclass
class AttributeVector:
    """Ordered attribute values tied to a fixed schema.

    Training values are binary; test-time values may be anywhere in [0, 1]
    (intensity-graded edits).
    """

    values: list[float]
    schema: list[str]

    def __post_init__(self):
        if len(self.values) != len(self.schema):
            raise SchemaError(
                f"attribute vector length {len(self.values)} != schema length {len(self.schema)}"
            )
        for name, v in zip(self.schema, self.values):
            if not 0.0 <= float(v) <= 1.0:
                raise SchemaError(f"attribute {name!r} value {v} outside [0, 1]")

    def get(self, name: str) -> float:
        try:
            return self.values[self.schema.index(name)]
        except ValueError:
            raise SchemaError(f"attribute {name!r} not in schema {self.schema}") from None

    def with_bits(self, edits: dict[str, float]) -> "AttributeVector":
        """Copy with the named entries replaced."""
        values = list(self.values)
        for name, bit in edits.items():
            if name not in self.schema:
                raise SchemaError(f"attribute {name!r} not in schema {self.schema}")
            values[self.schema.index(name)] = float(bit)
        return AttributeVector(values, self.schema)


@dataclass
class DatasetRecord:
    image_path: str
    attributes: AttributeVector
    age_years: int | None = None
    identity_id: str | None = None

    def __post_init__(self):
        if self.age_years is not None and not 0 <= self.age_years <= MAX_AGE_YEARS:
            raise ValueError(f"age {self.age_years} outside [0, {MAX_AGE_YEARS}]")

    @property
    def cluster(self) -> AgeCluster | None:
        if self.age_years is None:
            return None
        return AgeCluster.from_age(self.age_years)


@dataclass
class BucketedRecords:
    """Age-cluster partition plus the records that could not be bucketed."""

    buckets: dict[AgeCluster, list[DatasetRecord]]
    rejects: list[DatasetRecord] = field(default_factory=list)

    def __getitem__(self, cluster: AgeCluster) -> list[DatasetRecord]:
        return self.buckets[cluster]


def bucket_by_age(records: list[DatasetRecord]) -> BucketedRecords:
    """Partition records into age clusters.

    Records without an age go to the rejects list instead of being dropped;
    they are usable for attribute training but not for aging training.
    """
    buckets: dict[AgeCluster, list[DatasetRecord]] = {c: [] for c in AgeCluster}
    rejects: list[DatasetRecord] = []
    for rec in records:
        if rec.age_years is None:
            rejects.append(rec)
        else:
            buckets[AgeCluster.from_age(rec.age_years)].append(rec)
    return BucketedRecords(buckets=buckets, rejects=rejects)
