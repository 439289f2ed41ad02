"""Domino tableau combinatorics: the 2-quotient, four tableau families, the
split/merge bijections between them, and exact verification of the resulting
product formulas for Schur-type generating functions."""

from .partitions import (
    beta_vector,
    inverse_two_quotient,
    is_partition,
    is_pavable,
    two_quotient,
)
from .pavings import (
    Domino,
    Paving,
    RegionSplit,
    crossing_diagonal,
    domino_type,
    enumerate_pavings,
    is_shifted_pavable,
    is_shifted_paving,
    region_split,
)
from .tableaux import (
    FAMILIES,
    PLAIN,
    SET_VALUED,
    SHIFTED,
    SHIFTED_SET_VALUED,
    Family,
    ReadingWord,
    Tableau,
    cardinality,
    enumerate_tableaux,
    make_tableau,
    reading_word,
    tableau_from_reading_word,
    validate_tableau,
    weight,
)
from .domino_tableaux import (
    DominoTableau,
    diagonal_reading,
    dt_cardinality,
    dt_weight,
    enumerate_domino_tableaux,
    make_domino_tableau,
    up_fingerprint,
    validate_domino_tableau,
    weakly_southeast,
)
from .bijections import gamma_merge, gamma_split
from .polyring import Polynomial, domino_genfun, genfun, poly_mul
from .verify import VerificationReport, verify_identity, verify_sweep

__version__ = "0.1.0"

__all__ = [
    "beta_vector",
    "inverse_two_quotient",
    "is_partition",
    "is_pavable",
    "two_quotient",
    "Domino",
    "Paving",
    "RegionSplit",
    "crossing_diagonal",
    "domino_type",
    "enumerate_pavings",
    "is_shifted_pavable",
    "is_shifted_paving",
    "region_split",
    "FAMILIES",
    "PLAIN",
    "SET_VALUED",
    "SHIFTED",
    "SHIFTED_SET_VALUED",
    "Family",
    "ReadingWord",
    "Tableau",
    "cardinality",
    "enumerate_tableaux",
    "make_tableau",
    "reading_word",
    "tableau_from_reading_word",
    "validate_tableau",
    "weight",
    "DominoTableau",
    "diagonal_reading",
    "dt_cardinality",
    "dt_weight",
    "enumerate_domino_tableaux",
    "make_domino_tableau",
    "up_fingerprint",
    "validate_domino_tableau",
    "weakly_southeast",
    "gamma_merge",
    "gamma_split",
    "Polynomial",
    "domino_genfun",
    "genfun",
    "poly_mul",
    "VerificationReport",
    "verify_identity",
    "verify_sweep",
]
