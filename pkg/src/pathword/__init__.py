"""Grid-based secret paths: diagrams, derivation, strength analysis, service."""

from .alphabet import Alphabet, make_alphabet
from .analysis import (
    AttackerModel,
    OracleReport,
    RatioBounds,
    StrengthReport,
    adequacy,
    bits_of_strength,
    compensation_length,
    entropy_comparison,
    enumerate_oracle,
    expected_guesses,
    injective_sequence_count,
    ratio,
    strength_report,
    total_strings,
)
from .diagram import (
    CoverageReport,
    Diagram,
    decode_diagram,
    diagram_from_dict,
    diagram_from_rows,
    diagram_to_dict,
    encode_diagram,
    generate_diagram,
    render_diagram,
    validate_diagram,
)
from .errors import (
    AlphabetError,
    AnalysisError,
    BudgetError,
    CoverageError,
    DiagramError,
    DuplicateEnrollmentError,
    PathError,
    PathwordError,
    SchemaError,
    StoreError,
    UnknownEnrollmentError,
)
from .path import (
    Coordinate,
    Password,
    Path,
    canonicalize_password,
    derive,
    format_path,
    make_path,
    parse_path,
    path_from_dict,
    path_to_dict,
    random_path,
    render_path_overlay,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetError",
    "AnalysisError",
    "AttackerModel",
    "BudgetError",
    "Coordinate",
    "CoverageError",
    "CoverageReport",
    "Diagram",
    "DiagramError",
    "DuplicateEnrollmentError",
    "OracleReport",
    "Password",
    "Path",
    "PathError",
    "PathwordError",
    "RatioBounds",
    "SchemaError",
    "StoreError",
    "StrengthReport",
    "UnknownEnrollmentError",
    "adequacy",
    "bits_of_strength",
    "canonicalize_password",
    "compensation_length",
    "decode_diagram",
    "derive",
    "diagram_from_dict",
    "diagram_from_rows",
    "diagram_to_dict",
    "encode_diagram",
    "entropy_comparison",
    "enumerate_oracle",
    "expected_guesses",
    "format_path",
    "generate_diagram",
    "injective_sequence_count",
    "make_alphabet",
    "make_path",
    "parse_path",
    "path_from_dict",
    "path_to_dict",
    "random_path",
    "ratio",
    "render_diagram",
    "render_path_overlay",
    "strength_report",
    "total_strings",
    "validate_diagram",
]
