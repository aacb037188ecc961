"""Densities of coprime m-tuples in holomorphy rings of function fields over F_q.

Exact values come from the zeta function of the ring; empirical values come
from exhaustive enumeration or Monte Carlo sampling of Riemann-Roch spaces.
"""

from holodense._guard import GuardExceeded
from holodense.curves import (
    AffinePoint,
    EllipticCurve,
    LPoly,
    Place,
    count_points_bruteforce,
    curve_place_counts,
    enumerate_affine_places,
    evaluate_at_place,
    l_polynomial,
    place_counts,
    traces_and_counts,
    validate_curve,
)
from holodense.density import (
    DensityEnclosure,
    density_elliptic,
    density_enclosure,
    density_finite_complement,
    density_rational,
    generic_enclosure,
    tail_bound,
    truncated_density,
)
from holodense.experiments import (
    ExperimentReport,
    convergence_scan,
    cross_oracle_check,
    exhaustive_density,
    monte_carlo_density,
)
from holodense.fields import FieldElem, FiniteField, frobenius, make_extension, make_field, make_prime_field
from holodense.oracles import coprime_divisor_oracle, coprime_gcd_oracle, coprime_place_oracle
from holodense.poly import Poly, enumerate_monic_irreducibles, gcd, is_irreducible
from holodense.rrspace import RRElement, RRSpace, enumerate_space, pole_degree, rr_basis, rr_dimension, sample_uniform

__version__ = "0.1.0"
