from .batching import batch_stream, make_batches
from .images import decode_png, encode_png, load_image, normalize_u8, quantize_u8, save_png
from .manifest import (
    attach_age_labels,
    load_age_labels,
    load_attribute_manifest,
    write_age_labels,
    write_attribute_manifest,
)
from .records import (
    AgeCluster,
    AttributeVector,
    BucketedRecords,
    CELEBA_DEFAULT_SCHEMA,
    DatasetRecord,
    SYNTHETIC_SCHEMA,
    TARGET_CLUSTERS,
    bucket_by_age,
)
from .synthetic import (
    SyntheticCorpusSpec,
    count_wrinkle_strokes,
    detect_attributes,
    generate_synthetic_corpus,
    render_face,
    wrinkle_count_for_age,
)

__all__ = [
    "AgeCluster",
    "AttributeVector",
    "BucketedRecords",
    "CELEBA_DEFAULT_SCHEMA",
    "DatasetRecord",
    "SYNTHETIC_SCHEMA",
    "SyntheticCorpusSpec",
    "TARGET_CLUSTERS",
    "attach_age_labels",
    "batch_stream",
    "bucket_by_age",
    "count_wrinkle_strokes",
    "decode_png",
    "detect_attributes",
    "encode_png",
    "generate_synthetic_corpus",
    "load_age_labels",
    "load_attribute_manifest",
    "load_image",
    "make_batches",
    "normalize_u8",
    "quantize_u8",
    "render_face",
    "save_png",
    "wrinkle_count_for_age",
]
