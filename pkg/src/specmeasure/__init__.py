"""Certified upper bounds on the Lebesgue measure of band spectra of matrix symbols."""
from .bounds import (
    BandEnclosure,
    BoundReport,
    GapInterval,
    band_enclosures,
    build_center_matrices,
    certified_gaps,
    ds_comparison_bound,
    theorem1_bound,
    trivial_bound,
)
from .geometry import EnclosingCircle, PlanarSet, diameter, min_enclosing_circle
from .linalg import (
    eig_hermitian,
    is_psd,
    lemma1_sandwich_check,
    matrix_abs,
    nuclear_norm,
    operator_norm,
)
from .operators import (
    JacobiSpec,
    Schrodinger2DSpec,
    finite_periodic_truncation,
    jacobi_best_shift,
    jacobi_restricted_bound,
    jacobi_symbol,
    large_spectrum_potential,
    schrodinger2d_symbol,
    sharpness_spec,
)
from .oracle import SampledBands, ValidationVerdict, sample_bands, union_measure, validate_report
from .specfile import OperatorSpec, SpecError, dump_spec, load_spec, parse_spec
from .symbol import FourierSymbol, KDomain, PhiFunction, evaluate, phi_image, sample_grid

__version__ = "0.1.0"
