"""Orbits of pencils of plane conics: exact classification and the classes
of the orbit closures in the Chow ring of G(1,5)."""

from .classifier import (
    Certificate,
    OrbitLabel,
    Pencil,
    canonical_representative,
    classify,
    det_form,
    make_pencil,
    random_pencil,
)
from .flag_chern import FlagElement, chern_top_principal_parts, chern_top_sym3_dual, orbit7_class, pushforward
from .schubert import ChowElement, integral, multiply, parse_class, pieri, plucker_degree, schubert_degree

__version__ = "0.1.0"
