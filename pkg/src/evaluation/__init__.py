"""
Selftest suites and the reference oracles they check against
"""

from .oracles import ParabolicBallOracle, TitsRepresentation, green_canonical, green_closure
from .suite_runner import SuiteResult, SuiteRunner

__all__ = ['SuiteRunner', 'SuiteResult', 'ParabolicBallOracle', 'TitsRepresentation', 'green_canonical',
           'green_closure']
