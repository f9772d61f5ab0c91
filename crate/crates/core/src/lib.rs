//! Closed-form evaluation of improper integrals on `[0, ∞)` built on the
//! Gamma function, together with an independent quadrature oracle and the
//! geometry of the Euler spiral whose pole they locate.
//!
//! ```
//! use eulerint_core::{theorem2_sin, IntegralSpec};
//!
//! // ∫₀^∞ sin(x) / √x dx
//! let v = theorem2_sin(&IntegralSpec::sine(0.5, 0.0, 1.0)).unwrap();
//! assert!((v - (std::f64::consts::PI / 2.0).sqrt()).abs() < 1e-15);
//! ```

pub mod closed_forms;
pub mod clothoid;
pub mod error;
pub mod gamma;
pub mod polar;
pub mod quadrature;

pub use closed_forms::{
    beta_reciprocal, closed_form, fresnel_general, theorem1_cos, theorem2_sin, theorem3_log_sine,
    BetaSpec, IntegralSpec, Oscillator,
};
pub use clothoid::{point_at, pole, sample_polyline, ClothoidParams, ClothoidPoint};
pub use error::{Error, Result};
pub use gamma::{gamma, log_gamma, GammaArgument};
pub use polar::{half_angle, to_polar, PolarDecomposition};
pub use quadrature::{
    adaptive_segment, euler_transform, integrate_beta_reciprocal, integrate_decaying,
    integrate_log_sine, integrate_oscillatory_alternating, integrate_spec, QuadratureResult,
    SeriesTail,
};
