"""
Graph-product arithmetic: vertex labels, canonical words, parabolic subgroups
"""

from .labels import VertexLabel
from .words import Element, Presentation, Syllable, normalize
from .parabolics import Parabolic, canonicalize, intersect, normalizer, parabolic_support

__all__ = [
    'VertexLabel', 'Element', 'Presentation', 'Syllable', 'normalize',
    'Parabolic', 'canonicalize', 'intersect', 'normalizer', 'parabolic_support',
]
