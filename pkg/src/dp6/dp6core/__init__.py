"""Degree-6 Del Pezzo surfaces: construction, hexagon, descent, round trip."""
from __future__ import annotations

from .data import DataTriple, RoundtripReport, extract_data_triple, input_data_triple, roundtrip_compare
from .descent import SemilinearSwap, corrupted_descent_map, descent_report, descent_verify, switch_descent_map
from .hexagon import (LABELS, Curve, HexagonAction, blow_down_cocycles, exceptional_curves,
                      galois_hexagon_action, hexagon_incidence, triangle_field, verify_opposite)
from .picard import PicardLattice, picard_check
from .surface import Dp6Surface, dp6_construct

__all__ = [
    "DataTriple", "RoundtripReport", "extract_data_triple", "input_data_triple", "roundtrip_compare",
    "SemilinearSwap", "corrupted_descent_map", "descent_report", "descent_verify", "switch_descent_map",
    "LABELS", "Curve", "HexagonAction", "blow_down_cocycles", "exceptional_curves",
    "galois_hexagon_action", "hexagon_incidence", "triangle_field", "verify_opposite",
    "PicardLattice", "picard_check", "Dp6Surface", "dp6_construct",
]
