"""Exact verification of SKT, balanced, Kahler and generalized Kahler
structures on Lie algebras given by structure constants."""

from .catalog import catalog_check, catalog_entry, catalog_list
from .constructions import (
    ExtensionSpec,
    family_base,
    g2n_family,
    nilpotent_family,
    skt_extension,
    standard_structure,
)
from .dsl import parse_document, parse_form, parse_structure, serialize
from .errors import SKTLieError
from .exterior import KForm, contract, endo_star, j_transform, wedge, wedge_power
from .hermitian import (
    ComplexStructure,
    HermitianData,
    Metric,
    bismut_torsion,
    chern_lee,
    chern_ricci,
    dc_form,
    fundamental_form,
    is_balanced,
    is_generalized_kahler,
    is_integrable,
    is_kahler,
    is_skt,
    lee_form,
    property_report,
)
from .liealg import LieAlgebra, Subspace, semidirect_product
from .linalg import Endomorphism
from .nilradical import verify_nilradical
from .scalar import QuadSurd, sqrt
from .search import kahler_metric_search, skt_metric_search

__version__ = "0.1.0"

__all__ = [
    "ComplexStructure",
    "Endomorphism",
    "ExtensionSpec",
    "HermitianData",
    "KForm",
    "LieAlgebra",
    "Metric",
    "QuadSurd",
    "SKTLieError",
    "Subspace",
    "bismut_torsion",
    "catalog_check",
    "catalog_entry",
    "catalog_list",
    "chern_lee",
    "chern_ricci",
    "contract",
    "dc_form",
    "endo_star",
    "family_base",
    "fundamental_form",
    "g2n_family",
    "is_balanced",
    "is_generalized_kahler",
    "is_integrable",
    "is_kahler",
    "is_skt",
    "j_transform",
    "kahler_metric_search",
    "lee_form",
    "nilpotent_family",
    "parse_document",
    "parse_form",
    "parse_structure",
    "property_report",
    "semidirect_product",
    "serialize",
    "skt_extension",
    "skt_metric_search",
    "sqrt",
    "standard_structure",
    "verify_nilradical",
    "wedge",
    "wedge_power",
]
