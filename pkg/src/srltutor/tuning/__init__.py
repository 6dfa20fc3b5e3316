"""Chat tuning dataset construction, validation, and persistence."""

from .builder import BuildFailed, SkipEntry, build_records
from .io import (
    IoError,
    ParseError,
    emit_dataset,
    load_corpus,
    load_dataset,
    record_from_dict,
    record_to_dict,
)
from .records import (
    SCENARIO_VERSION,
    CorpusUnit,
    TuningRecord,
    ValidationReport,
    dataset_stats,
    message_hash,
    validate_dataset,
    validate_record,
)

__all__ = [
    "BuildFailed",
    "CorpusUnit",
    "IoError",
    "ParseError",
    "SCENARIO_VERSION",
    "SkipEntry",
    "TuningRecord",
    "ValidationReport",
    "build_records",
    "dataset_stats",
    "emit_dataset",
    "load_corpus",
    "load_dataset",
    "message_hash",
    "record_from_dict",
    "record_to_dict",
    "validate_dataset",
    "validate_record",
]
