from .objects import CAP, DistinguishingSet, ConstraintSystem, \
    FarkasCertificate, FeasibilityResult, satisfies, fraction_to_json

from .system import distinguishing_sets, build_system, dependency_shortcut, \
    amplitude_beta

from .solver import lp_feasible
