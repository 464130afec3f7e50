//! Convergence tolerances, term caps and other fixed numerical settings.
//!
//! Every iterative routine in the crate takes its limits from here.

/// Distance from a non-positive integer at which the Gamma function reports a pole.
pub const GAMMA_POLE_TOL: f64 = 1e-14;

/// Relative size of the last series term at which a power series is truncated.
pub const SERIES_REL_TOL: f64 = 1e-17;
/// Maximum number of terms in the confluent (Kummer) series.
pub const KUMMER_MAX_TERMS: usize = 5000;
/// Maximum number of terms in the Bessel power series.
pub const BESSEL_SERIES_MAX_TERMS: usize = 500;
/// Extra orders added on top of `max(order, |z|)` when starting Miller's recurrence.
pub const MILLER_EXTRA_ORDERS: usize = 40;

/// Relative tolerance of the double-exponential quadrature used for the Tricomi integral.
pub const DE_QUAD_REL_TOL: f64 = 1e-14;
/// Maximum refinement levels (step halvings) of the double-exponential quadrature.
pub const DE_QUAD_MAX_LEVELS: usize = 9;

/// Relative tolerance of adaptive Gauss-Kronrod quadrature used by the oracles.
pub const ADAPTIVE_QUAD_REL_TOL: f64 = 1e-11;
/// Maximum number of subintervals in adaptive Gauss-Kronrod quadrature.
pub const ADAPTIVE_QUAD_MAX_INTERVALS: usize = 4000;

/// Relative distance to 1+2rho integer below which the log case of W is flagged.
pub const WHITTAKER_LOG_CASE_TOL: f64 = 1e-6;

/// Relative threshold at which eps is treated as equal to eps0.
pub const THRESHOLD_REL_TOL: f64 = 1e-12;

/// Distance to a Gamma pole (in the argument) that the radial kernels reject.
pub const KERNEL_POLE_TOL: f64 = 1e-8;

/// Minimum separation of kernel arguments, in units of the model length scale.
pub const MIN_SEPARATION: f64 = 1e-6;

/// Tolerance on the partner relation residual checked by `assemble_dirac_state`.
pub const PARTNER_RESIDUAL_TOL: f64 = 1e-5;

/// Ratio of boundary to peak amplitude above which a radial function is "not supported" on the grid.
pub const BOUNDARY_SUPPORT_TOL: f64 = 1e-8;

/// Tail fraction of the norm allowed beyond the grid end.
pub const GRID_TAIL_TOL: f64 = 1e-10;

/// Minimum number of samples per oscillation of a radial function.
pub const MIN_POINTS_PER_OSCILLATION: f64 = 8.0;

/// Default number of points in a model grid.
pub const DEFAULT_GRID_POINTS: usize = 4000;
/// Default grid extent in units of the model length scale.
pub const DEFAULT_GRID_EXTENT: f64 = 20.0;

/// Maximum number of eigenpairs returned by the finite-difference eigensolvers.
pub const FD_MAX_COUNT: usize = 20;

/// Imaginary offset used by the generic peak scan for poles.
pub const POLE_SCAN_ETA: f64 = 1e-6;
/// Maximum number of poles returned before a window is truncated.
pub const POLE_SCAN_MAX_POLES: usize = 64;

/// Relative eigenvalue tolerance of the finite-difference eigensolvers; doubling the point
/// count may move a level by at most ten times this.
pub const FD_EIGEN_TOL: f64 = 1e-4;
/// Point counts used for Richardson extrapolation of finite-difference eigenvalues.
pub const RICHARDSON_POINT_COUNTS: [usize; 3] = [2000, 4000, 8000];

/// Relative tolerance of the promotor time-integral quadrature.
pub const PROMOTOR_QUAD_REL_TOL: f64 = 1e-11;
/// Minimum width of the admissible ray sector when rotating the promotor contour.
pub const PROMOTOR_RAY_MARGIN: f64 = 0.005;
/// `|sinh(wτ)|` below which a promotor time is treated as singular.
pub const SINGULAR_TIME_TOL: f64 = 1e-10;
/// Decay exponent at which a rotated promotor integral is truncated (`e^{-40}`).
pub const PROMOTOR_TAIL_EXPONENT: f64 = 40.0;
/// Maximum number of pieces of a rotated promotor integral.
pub const PROMOTOR_MAX_PIECES: usize = 4000;
/// Relative agreement of quadrature and closed-form kernels at randomized parameters.
pub const PROMOTOR_RANDOM_TOL: f64 = 1e-5;

/// Default number of Strang steps of the Trotter propagator check.
pub const TROTTER_DEFAULT_STEPS: usize = 1024;
/// Trotter vs promotor deviation allowed for the free channel.
pub const TROTTER_FREE_TOL: f64 = 1e-5;
/// Trotter vs promotor deviation allowed for the oscillator channel.
pub const TROTTER_OSCILLATOR_TOL: f64 = 1e-4;
/// Fraction of the kernel peak above which a point enters the Trotter comparison.
pub const TROTTER_SIGNIFICANT: f64 = 1e-3;

/// Trapezoid points on the circle used for contour residues.
pub const RESIDUE_CONTOUR_POINTS: usize = 32;
/// Relative agreement required between contour residues and eigenfunction products.
pub const RESIDUE_TOL: f64 = 1e-5;

/// Relative defect allowed in the discretized identity `H_D² = {Q,Q†} + M0²`.
pub const ALGEBRA_IDENTITY_TOL: f64 = 1e-10;
/// Relative agreement of discretized `H_D` levels with the SUSY energy map.
pub const ALGEBRA_SPECTRUM_TOL: f64 = 1e-5;
/// Residual allowed in the per-pair FW rotation, relative to `E`.
pub const ALGEBRA_FW_TOL: f64 = 1e-8;
/// Levels per branch compared in the algebra check.
pub const ALGEBRA_LEVELS: usize = 6;
/// Largest grid diagonalized densely (broken free model).
pub const ALGEBRA_DENSE_MAX_POINTS: usize = 256;
/// Relative stencil residual of the free Dirac Green's function at separated points.
pub const FREE_GREEN_RESIDUAL_TOL: f64 = 1e-6;
/// Five-point stencil step for the free Green's function check, in Compton lengths.
pub const FREE_GREEN_STENCIL: f64 = 1e-3;
/// Relative tolerance of the closed-form vs FD spectra.
pub const SPECTRA_FD_TOL: f64 = 1e-4;
/// Tolerance of pole locations against closed-form spectra.
pub const POLE_MATCH_TOL: f64 = 1e-8;
/// Tolerance of the intertwining relations on analytic basis functions.
pub const INTERTWINING_TOL: f64 = 1e-6;
/// Residual norm of `D†` on the zero modes.
pub const ZERO_MODE_RESIDUAL_TOL: f64 = 1e-8;
/// Spin-spherical-harmonic orthonormality tolerance.
pub const ANGULAR_ORTHO_TOL: f64 = 1e-10;
/// Pointwise tolerance of the σ·e_r flip relation.
pub const ANGULAR_FLIP_TOL: f64 = 1e-12;
/// Tolerance of the one-dimensional oscillator spectrum through the Dirac map.
pub const WITTEN_MAP_TOL: f64 = 1e-6;
/// Allowed deviation of the fitted non-relativistic convergence order from −2.
pub const NONREL_ORDER_TOL: f64 = 0.2;
