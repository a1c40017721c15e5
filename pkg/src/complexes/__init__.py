"""
Finite balls in the extension graph and in the right-angled building
"""

from .extension import ExtensionBall, extension_ball, untransvectable_extension_ball
from .building import BuildingBall, Coset, building_ball
from .bijection import (
    CombinedBijection,
    combined_bijection,
    verify_building_isomorphism,
    verify_extension_isomorphism,
)

__all__ = [
    'ExtensionBall', 'extension_ball', 'untransvectable_extension_ball',
    'BuildingBall', 'Coset', 'building_ball',
    'CombinedBijection', 'combined_bijection', 'verify_building_isomorphism', 'verify_extension_isomorphism',
]
