//! The Euler spiral `r · s = a²`.
//!
//! With tangent angle `φ` (the amplitude) and `a = c√2`, the arc length is
//! `s = 2c√φ` and the osculating radius `r = ds/dφ = c/√φ`. The coordinates
//!
//! ```text
//! x = c ∫₀^φ cos φ / √φ dφ,   y = c ∫₀^φ sin φ / √φ dφ
//! ```
//!
//! are evaluated as `2c ∫₀^{√φ} cos t² dt` and `2c ∫₀^{√φ} sin t² dt`. As
//! `φ → ∞` the curve winds into the pole at `(c√(π/2), c√(π/2))`.

use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{require_finite, Error, Result};
use crate::quadrature::adaptive_segment;

/// Tolerance of the incomplete Fresnel integrals behind [`point_at`].
pub const POINT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClothoidParams {
    /// Length scale; `s = 2c√φ`.
    pub c: f64,
}

impl ClothoidParams {
    pub fn new(c: f64) -> Result<Self> {
        require_finite("c", c)?;
        if c <= 0.0 {
            return Err(Error::InvalidArgument(format!("scale c = {c} must be positive")));
        }
        Ok(ClothoidParams { c })
    }

    /// `a²` in `r · s = a²`.
    pub fn radius_arc_product(&self) -> f64 {
        2.0 * self.c * self.c
    }
}

/// A point on the spiral. `r` is `f64::INFINITY` at the start, where the
/// curvature vanishes; it serializes as the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClothoidPoint {
    pub phi: f64,
    pub s: f64,
    pub x: f64,
    pub y: f64,
    #[serde(serialize_with = "serialize_radius", deserialize_with = "deserialize_radius")]
    pub r: f64,
}

fn serialize_radius<S: Serializer>(r: &f64, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    if r.is_infinite() {
        serializer.serialize_str("inf")
    } else {
        serializer.serialize_f64(*r)
    }
}

fn deserialize_radius<'de, D: Deserializer<'de>>(deserializer: D) -> std::result::Result<f64, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Radius {
        Finite(f64),
        Marker(String),
    }
    match Radius::deserialize(deserializer)? {
        Radius::Finite(r) => Ok(r),
        Radius::Marker(s) if s == "inf" => Ok(f64::INFINITY),
        Radius::Marker(s) => Err(serde::de::Error::custom(format!("invalid radius `{s}`"))),
    }
}

/// `(∫₀^t cos u² du, ∫₀^t sin u² du)`.
fn unit_fresnel(t: f64) -> Result<(f64, f64)> {
    if t == 0.0 {
        return Ok((0.0, 0.0));
    }
    let cos = adaptive_segment(|u| (u * u).cos(), 0.0, t, POINT_TOLERANCE)?;
    let sin = adaptive_segment(|u| (u * u).sin(), 0.0, t, POINT_TOLERANCE)?;
    Ok((cos.value, sin.value))
}

pub fn point_at(params: &ClothoidParams, phi: f64) -> Result<ClothoidPoint> {
    require_finite("phi", phi)?;
    if phi < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "amplitude phi = {phi} must be nonnegative"
        )));
    }
    let c = params.c;
    let root = phi.sqrt();
    let (fc, fs) = unit_fresnel(root)?;
    Ok(ClothoidPoint {
        phi,
        s: 2.0 * c * root,
        x: 2.0 * c * fc,
        y: 2.0 * c * fs,
        r: if phi == 0.0 { f64::INFINITY } else { c / root },
    })
}

/// Limit point `(c√(π/2), c√(π/2))` of the spiral.
pub fn pole(params: &ClothoidParams) -> (f64, f64) {
    let v = params.c * FRAC_PI_2.sqrt();
    (v, v)
}

/// `count` points from `φ = 0` to `φ = phi_max`, equally spaced in `√φ` and
/// therefore in arc length.
pub fn sample_polyline(params: &ClothoidParams, phi_max: f64, count: usize) -> Result<Vec<ClothoidPoint>> {
    require_finite("phi_max", phi_max)?;
    if phi_max <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "phi_max = {phi_max} must be positive"
        )));
    }
    if count < 2 {
        return Err(Error::InvalidArgument(format!(
            "count = {count} must be at least 2"
        )));
    }
    let root_max = phi_max.sqrt();
    let last = count - 1;
    (0..count)
        .into_par_iter()
        .map(|i| {
            let phi = if i == last {
                phi_max
            } else {
                let t = root_max * i as f64 / last as f64;
                t * t
            };
            point_at(params, phi)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn start_point() {
        let p = point_at(&ClothoidParams::new(1.0).unwrap(), 0.0).unwrap();
        assert_eq!((p.s, p.x, p.y), (0.0, 0.0, 0.0));
        assert!(p.r.is_infinite());
    }

    #[test]
    fn quarter_turn() {
        let p = point_at(&ClothoidParams::new(1.0).unwrap(), FRAC_PI_2).unwrap();
        assert!((p.s - 2.0 * FRAC_PI_2.sqrt()).abs() < 1e-15);
        // 2∫₀^{√(π/2)} cos t² dt and 2∫₀^{√(π/2)} sin t² dt, high-precision reference
        assert!((p.x - 1.954_902_848_582_659_5).abs() < 1e-9);
        assert!((p.y - 1.098_552_770_464_338_3).abs() < 1e-9);
    }

    #[test]
    fn radius_arc_relation() {
        let params = ClothoidParams::new(2.0).unwrap();
        let p = point_at(&params, 1.0).unwrap();
        assert_eq!(p.s, 4.0);
        assert_eq!(p.r, 2.0);
        assert_eq!(p.r * p.s, params.radius_arc_product());
    }

    #[test]
    fn pole_values() {
        let (x, y) = pole(&ClothoidParams::new(1.0).unwrap());
        assert!((x - 1.253_314_137_3).abs() < 1e-10);
        assert_eq!(x, y);
        let (x2, _) = pole(&ClothoidParams::new(2.0).unwrap());
        assert_eq!(x2, 2.0 * x);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(ClothoidParams::new(0.0).is_err());
        assert!(ClothoidParams::new(-1.0).is_err());
        let params = ClothoidParams::new(1.0).unwrap();
        assert!(point_at(&params, -0.1).is_err());
        assert!(sample_polyline(&params, 0.0, 10).is_err());
        assert!(sample_polyline(&params, 1.0, 1).is_err());
    }

    #[test]
    fn polyline_endpoints_and_spacing() {
        let params = ClothoidParams::new(1.0).unwrap();
        let pts = sample_polyline(&params, 1.0, 2).unwrap();
        assert_eq!(pts[0], point_at(&params, 0.0).unwrap());
        assert_eq!(pts[1], point_at(&params, 1.0).unwrap());

        let pts = sample_polyline(&params, 4.0, 5).unwrap();
        let phis: Vec<f64> = pts.iter().map(|p| p.phi).collect();
        assert_eq!(phis, vec![0.0, 0.25, 1.0, 2.25, 4.0]);
    }

    #[test]
    fn radius_serializes_as_marker() {
        let p = point_at(&ClothoidParams::new(1.0).unwrap(), 0.0).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains("\"r\":\"inf\""), "{json}");
        let back: ClothoidPoint = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
