"""Odd diagrams of permutations, their classes, and Bruhat-order structure."""

from .perms import Permutation, PositionTransposition, ValueTransposition, parse, format_perm
from .diagrams import OddDiagram, odd_diagram, diagram, canonical_key
from .classes import DiagramClass, class_of, class_min, class_max, partition
from .counting import count_odd_diagrams, bell_number

__all__ = [
    "Permutation", "PositionTransposition", "ValueTransposition", "parse", "format_perm",
    "OddDiagram", "odd_diagram", "diagram", "canonical_key",
    "DiagramClass", "class_of", "class_min", "class_max", "partition",
    "count_odd_diagrams", "bell_number",
]
