"""Transient fluorescence spectra and entanglement dynamics of a two-atom
pair decaying into a broadband squeezed vacuum.

The heavy lifting lives in the compiled extension `phasespec._core`; this
package re-exports its public surface.
"""

from ._core import (
    Channel,
    ChannelCoherenceVector,
    CollectiveState,
    ConfigError,
    DensityMatrix,
    DomainError,
    EsdTimes,
    HoleInterval,
    NotXState,
    PhysicalityViolation,
    QuadratureNotConverged,
    RangeViolation,
    SingularSystem,
    SpectrumGrid,
    SteadyState,
    Superoperator,
    SystemParams,
    UnknownFigure,
    analytic_dicke_spectrum,
    bell_initial_state,
    broadband_spectrum,
    build_liouvillian,
    collective_damping,
    concurrence_general,
    concurrence_xstate,
    correlation,
    detect_hole,
    esd_times,
    evolve_channel,
    evolve_populations,
    figure_params,
    line_shape_grid,
    line_shape_spectrum,
    physical_spectrum,
    physical_spectrum_grid,
    regression_seed,
    reproduce_figure,
    run_scan_config,
    steady_state,
    validate_params,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
