"""
Doppler-resilient sequence families, their ambiguity functions, zero and
low ambiguity zones, and the lower bounds those zones obey.
"""

from .seqcore import (AmbiguityGrid, PolyphaseSequence, SequenceFamily, SpectralMask, Zone,
                      make_polyphase, validate_family)
from .af import (ThetaStats, aperiodic_af, aperiodic_grid, aperiodic_grid_naive, correlation, dft, f_pi,
                 family_grid, frequency_domain_af, idft, periodic_af, periodic_grid, periodic_grid_naive,
                 theta_stats)
from .bounds import (BoundValue, Certificate, aperiodic_laz_bound, certify, ding_af_bound,
                     global_af_bound, laz_bound_unimodular, sarwate_af_deficit,
                     sarwate_tradeoff_deficit, scs_correlation_bound, scs_global_bounds,
                     scs_laz_bound, scs_lcz_bound, welch_bound, zaz_capacity)
from .constructions import (DifferenceSet, comb_scs_family, cubic_family, dft_orthogonal_family,
                            difference_set_catalog, example5_sequence, generic_cubic,
                            predicted_cubic_cross_af, predicted_quadratic_zaz, quadratic_family,
                            quadratic_sequence, scs_from_difference_set, verify_difference_set)
from .zones import is_zone, max_zone, zone_report

__version__ = "0.1.0"
