//! Physical constants (CODATA 2018) and the multistability threshold.

/// Reduced Planck constant ħ (J·s).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Speed of light in vacuum c (m/s).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Critical Kerr gain ζ₀ = −8/(3√3) at which the cavity turns multistable.
///
/// Stored as the evaluated exact expression, never as a rounded literal.
pub fn zeta_critical() -> f64 {
    -8.0 / (3.0 * 3.0_f64.sqrt())
}
