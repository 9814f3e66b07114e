//! Thin-shell pressure-vessel mechanical design: wall thickness from the
//! design pressure and allowable stress, the resulting pressure stresses,
//! and the dead-weight load of the shell.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Minimum recommended wall thickness for a satisfactory design, mm.
pub const MIN_RECOMMENDED_THICKNESS_MM: f64 = 3.0;

/// Geometry, load and material inputs for one vessel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VesselSpec {
    /// Internal diameter, m
    pub d_inner: f64,
    /// Tangent-to-tangent height, m
    pub height_tangent: f64,
    /// Design pressure, absolute bar
    pub p_design: f64,
    /// Allowable design stress, bar
    pub f_design_stress: f64,
    /// Welded-joint efficiency, (0, 1]
    pub joint_efficiency: f64,
    /// Shell material density, kg/m³
    pub rho_material: f64,
    /// Weight factor covering manholes and internal supports
    pub c_v: f64,
    /// Gravitational acceleration, m/s²
    pub g: f64,
}

impl VesselSpec {
    /// Spec with carbon-steel defaults: design stress 344.7 bar
    /// (5000 psi), joint efficiency 1.0, density 7800 kg/m³, weight
    /// factor 1.08, g = 9.81 m/s².
    pub fn new(d_inner: f64, height_tangent: f64, p_design: f64) -> Self {
        VesselSpec {
            d_inner,
            height_tangent,
            p_design,
            f_design_stress: 344.7,
            joint_efficiency: 1.0,
            rho_material: 7800.0,
            c_v: 1.08,
            g: 9.81,
        }
    }
}

/// Computed mechanical design numbers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VesselDesign {
    /// Shell wall thickness, mm
    pub thickness: f64,
    /// Circumferential (hoop) stress, MN/m²
    pub f_circumferential: f64,
    /// Axial stress, MN/m² (always half the hoop stress)
    pub f_axial: f64,
    /// Shell weight, N
    pub shell_weight: f64,
    /// Compressive stress due to shell weight, MN/m²
    pub f_weight: f64,
    /// Mean shell diameter, m
    pub d_mean: f64,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VesselError {
    #[error("design pressure {p} bar reaches the joint stress limit 2·f·J = {limit} bar")]
    StressLimitExceeded { p: f64, limit: f64 },
}

/// Rule converting an operating/design gauge pressure into the design
/// pressure used by the thickness formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DesignPressureRule {
    /// Absolute pressure at the stated design gauge: gauge + 1 bar.
    #[default]
    GaugePlusAmbient,
    /// Flat 10% margin over the stated pressure.
    TenPercentMargin,
}

/// Design pressure in bar from a gauge pressure in bar.
pub fn design_pressure(p_operating_gauge: f64, rule: DesignPressureRule) -> f64 {
    match rule {
        DesignPressureRule::GaugePlusAmbient => p_operating_gauge + 1.0,
        DesignPressureRule::TenPercentMargin => 1.1 * p_operating_gauge,
    }
}

/// Shell wall thickness t = P·Dᵢ/(2·f·J − P), returned in mm. Strictly
/// increasing in both design pressure and diameter.
pub fn wall_thickness(spec: &VesselSpec) -> Result<f64, VesselError> {
    let limit = 2.0 * spec.f_design_stress * spec.joint_efficiency;
    let denominator = limit - spec.p_design;
    if denominator <= 0.0 {
        return Err(VesselError::StressLimitExceeded {
            p: spec.p_design,
            limit,
        });
    }
    Ok(spec.p_design * spec.d_inner / denominator * 1000.0)
}

/// Stresses due to internal pressure for a wall of `t_mm`:
/// hoop f_c = P·Dᵢ/(2t) and axial f_a = f_c/2, both MN/m².
pub fn stresses(spec: &VesselSpec, t_mm: f64) -> (f64, f64) {
    let t_m = t_mm * 1e-3;
    let p_pa = spec.p_design * 1e5;
    let f_c = p_pa * spec.d_inner / (2.0 * t_m) / 1e6;
    (f_c, f_c * 0.5)
}

/// Shell weight W = C_v·π·ρ·D_m·g·(H + 0.8·D_m)·t (N, t in m) and the
/// compressive stress it causes, f_w = W/(π·(Dᵢ+t)·t) in MN/m².
pub fn shell_weight(spec: &VesselSpec, t_mm: f64) -> (f64, f64) {
    let t_m = t_mm * 1e-3;
    let d_mean = spec.d_inner + t_m;
    let weight = spec.c_v
        * std::f64::consts::PI
        * spec.rho_material
        * d_mean
        * spec.g
        * (spec.height_tangent + 0.8 * d_mean)
        * t_m;
    let f_w = weight / (std::f64::consts::PI * (spec.d_inner + t_m) * t_m) / 1e6;
    (weight, f_w)
}

/// Full design pass: thickness, pressure stresses, shell weight.
pub fn design(spec: &VesselSpec) -> Result<VesselDesign, VesselError> {
    let thickness = wall_thickness(spec)?;
    let (f_circumferential, f_axial) = stresses(spec, thickness);
    let (weight, f_weight) = shell_weight(spec, thickness);
    Ok(VesselDesign {
        thickness,
        f_circumferential,
        f_axial,
        shell_weight: weight,
        f_weight,
        d_mean: spec.d_inner + thickness * 1e-3,
    })
}
