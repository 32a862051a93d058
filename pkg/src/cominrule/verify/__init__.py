"""Independent checks: a type A oracle, the exceptional recursions and property suites."""
from .oracle import lr_coefficient, lr_oracle_typeA
from .recursion import RECURSIONS, build_recursion, check_recursion
from .suites import SUITES, SuiteConfig, SuiteReport, check_cross_isomorphisms, run_suite

__all__ = [
    "RECURSIONS",
    "SUITES",
    "SuiteConfig",
    "SuiteReport",
    "build_recursion",
    "check_cross_isomorphisms",
    "check_recursion",
    "lr_coefficient",
    "lr_oracle_typeA",
    "run_suite",
]
