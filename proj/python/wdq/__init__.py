"""Structural and semantic quality measures for web directories."""

from wdq._core import (
    AggregateReport,
    BatchFailure,
    BatchResult,
    BrowseSession,
    Category,
    CategoryGap,
    ConceptBag,
    IdealityReport,
    InconsistentSessionError,
    NavConfig,
    ParseError,
    Policy,
    Resource,
    SemanticsConfig,
    SessionFormatError,
    SessionMetrics,
    SimConfig,
    Stats,
    UnreachableError,
    ValidationError,
    Violation,
    WebDirectory,
    aggregate,
    audit_ideality,
    bag_difference,
    bag_gap,
    bag_jaccard,
    bag_union,
    batch_simulate,
    ddp,
    derive_seed,
    distance,
    is_ideal,
    is_realistically_ideal,
    load_directory,
    load_directory_file,
    max_revisit,
    parse_directory,
    path_ratio,
    read_sessions_text,
    score_session,
    semantic_content,
    session_to_json,
    similarity,
    simulate,
    skip_level,
    validate,
)

__all__ = [
    "AggregateReport",
    "BatchFailure",
    "BatchResult",
    "BrowseSession",
    "Category",
    "CategoryGap",
    "ConceptBag",
    "IdealityReport",
    "InconsistentSessionError",
    "NavConfig",
    "ParseError",
    "Policy",
    "Resource",
    "SemanticsConfig",
    "SessionFormatError",
    "SessionMetrics",
    "SimConfig",
    "Stats",
    "UnreachableError",
    "ValidationError",
    "Violation",
    "WebDirectory",
    "aggregate",
    "audit_ideality",
    "bag_difference",
    "bag_gap",
    "bag_jaccard",
    "bag_union",
    "batch_simulate",
    "ddp",
    "derive_seed",
    "distance",
    "is_ideal",
    "is_realistically_ideal",
    "load_directory",
    "load_directory_file",
    "max_revisit",
    "parse_directory",
    "path_ratio",
    "read_sessions_text",
    "score_session",
    "semantic_content",
    "session_to_json",
    "similarity",
    "simulate",
    "skip_level",
    "validate",
]
