"""Exact rational points on x^2 - y^3 = f(z) and related surfaces.

Every rational crosses the boundary as a fractions.Fraction; inputs may also
be ints or "p/q" strings.
"""

from ._core import (
    DegenerateFiber,
    DelPezzoError,
    DomainError,
    IdentityFailure,
    NoSeedPoint,
    ParamPole,
    ParseError,
    SingularAuxiliary,
    add,
    auxiliary_curve,
    cor3_point,
    cor4_point,
    discriminant,
    generate,
    genus0_point,
    lift_point,
    on_curve,
    polynomial_solution,
    psi,
    scalar_mul,
    search_points,
    section_point,
    singular_family,
    thm2_point,
    torsion_of_mordell,
    torsion_order,
    verify_identities,
    verify_record,
)

__all__ = [name for name in dir() if not name.startswith("_")]
