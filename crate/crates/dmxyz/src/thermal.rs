//! Partition functions and thermal (Gibbs) density matrices ρ(T) =
//! e^{−H/T}/Z for the three analytic DM orientations, plus the generic
//! spectral route every closed form is tested against.
//!
//! Closed-form entries are assembled from the Boltzmann probabilities
//! pᵢ = e^{−Eᵢ/T}/Z computed with the minimum energy subtracted, so both
//! the analytic and the generic path share the same conditioning down to
//! the T → 0 limit.

use crate::model::{
    build_hamiltonian, energies_xy, energies_y, energies_z, phi_sincos_y, xi_z, zeta_xy, Couplings,
};
use crate::numerics::{
    boltzmann_probs, gibbs_from_spectrum, hermitian_eig, Complex, ComplexMatrix4,
};
use crate::{Error, Result};

/// A thermal density matrix together with the inputs that produced it.
#[derive(Debug, Clone)]
pub struct ThermalState {
    pub rho: ComplexMatrix4,
    pub temperature: f64,
    pub couplings: Couplings,
    /// Z = Σᵢ e^{−Eᵢ/T}. May overflow to +∞ at extremely small T; the
    /// density matrix itself stays finite.
    pub partition_value: f64,
}

/// Entries of ρ_Z: corners (r, s), centre block (u, v, v*, u); r + u = 1/2.
#[derive(Debug, Clone, Copy)]
pub struct ZEntries {
    pub r: f64,
    pub s: f64,
    pub u: f64,
    pub v: Complex,
}

/// Entries of ρ_Y; all real, with r₁ + u₁ = 1/2.
#[derive(Debug, Clone, Copy)]
pub struct YEntries {
    pub r1: f64,
    pub r2: f64,
    pub u1: f64,
    pub u2: f64,
    pub q: f64,
}

/// Entries of the in-plane state ρ_XY; 2(z₁ + z₂) = 1.
#[derive(Debug, Clone, Copy)]
pub struct XYEntries {
    pub z1: f64,
    pub z2: f64,
    pub z3: Complex,
    pub z4: Complex,
    pub z5: f64,
}

fn check_temperature(t: f64) -> Result<()> {
    if !(t > 0.0) {
        return Err(Error::NonPositiveTemperature(t));
    }
    Ok(())
}

/// Σ e^{−Eᵢ/t} evaluated directly; shared by the closed partition forms.
fn partition_sum(energies: &[f64; 4], t: f64) -> f64 {
    energies.iter().map(|&e| (-e / t).exp()).sum()
}

/// Z_Z = 2e^{−βJz} cosh[β(Jx−Jy)] + 2e^{βJz} cosh(βξ).
pub fn partition_z(c: &Couplings, t: f64) -> Result<f64> {
    if !c.is_dm_z() {
        return Err(Error::WrongDmCase { expected: "dx = dy = 0" });
    }
    check_temperature(t)?;
    let b = 1.0 / t;
    Ok(2.0 * (-b * c.jz).exp() * (b * (c.jx - c.jy)).cosh()
        + 2.0 * (b * c.jz).exp() * (b * xi_z(c)).cosh())
}

/// Z_Y = 2e^{−βJy} cosh[β(Jx−Jz)] + 2e^{βJy} cosh(βη).
pub fn partition_y(c: &Couplings, t: f64) -> Result<f64> {
    if !c.is_dm_y() {
        return Err(Error::WrongDmCase { expected: "dx = dz = 0" });
    }
    check_temperature(t)?;
    let b = 1.0 / t;
    Ok(2.0 * (-b * c.jy).exp() * (b * (c.jx - c.jz)).cosh()
        + 2.0 * (b * c.jy).exp() * (b * crate::model::eta_y(c)).cosh())
}

/// Z_XY = 2e^{−βJ} cosh[β(J−Jz)] + 2e^{βJ} cosh(βζ).
pub fn partition_xy(c: &Couplings, t: f64) -> Result<f64> {
    if !c.is_dm_xy() {
        return Err(Error::WrongDmCase { expected: "dz = 0 and jx = jy" });
    }
    check_temperature(t)?;
    let b = 1.0 / t;
    Ok(2.0 * (-b * c.jx).exp() * (b * (c.jx - c.jz)).cosh()
        + 2.0 * (b * c.jx).exp() * (b * zeta_xy(c)).cosh())
}

/// ρ_Z(T) with its closed-form entries.
///
/// In terms of the level probabilities p₁…p₄ (closed-form energy order):
/// r = (p₁+p₂)/2, s = (p₁−p₂)/2, u = (p₃+p₄)/2,
/// v = −(Jx+Jy+2iDz)/ξ · (p₄−p₃)/2.
pub fn thermal_state_z(c: &Couplings, t: f64) -> Result<(ThermalState, ZEntries)> {
    if !c.is_dm_z() {
        return Err(Error::WrongDmCase { expected: "dx = dy = 0" });
    }
    check_temperature(t)?;
    let e = energies_z(c);
    let p = boltzmann_probs(&e, t);
    let xi = xi_z(c);
    let r = 0.5 * (p[0] + p[1]);
    let s = 0.5 * (p[0] - p[1]);
    let u = 0.5 * (p[2] + p[3]);
    let v = if xi == 0.0 {
        Complex::new(0.0, 0.0)
    } else {
        -Complex::new(c.jx + c.jy, 2.0 * c.dz) / xi * (0.5 * (p[3] - p[2]))
    };

    let zero = Complex::new(0.0, 0.0);
    let rc = Complex::new(r, 0.0);
    let sc = Complex::new(s, 0.0);
    let uc = Complex::new(u, 0.0);
    let rho = ComplexMatrix4::from_rows([
        [rc, zero, zero, sc],
        [zero, uc, v, zero],
        [zero, v.conj(), uc, zero],
        [sc, zero, zero, rc],
    ]);
    let state = ThermalState {
        rho,
        temperature: t,
        couplings: *c,
        partition_value: partition_sum(&e, t),
    };
    Ok((state, ZEntries { r, s, u, v }))
}

/// ρ_Y(T) with its closed-form entries (all real).
pub fn thermal_state_y(c: &Couplings, t: f64) -> Result<(ThermalState, YEntries)> {
    if !c.is_dm_y() {
        return Err(Error::WrongDmCase { expected: "dx = dz = 0" });
    }
    check_temperature(t)?;
    let e = energies_y(c);
    let p = boltzmann_probs(&e, t);
    let (s1, c1, s2, c2) = phi_sincos_y(c);

    let r1 = 0.5 * (p[1] + s1 * s1 * p[2] + s2 * s2 * p[3]);
    let r2 = 0.5 * (-p[1] + s1 * s1 * p[2] + s2 * s2 * p[3]);
    let u1 = 0.5 * (p[0] + c1 * c1 * p[2] + c2 * c2 * p[3]);
    let u2 = 0.5 * (p[0] - c1 * c1 * p[2] - c2 * c2 * p[3]);
    let q = 0.5 * (s1 * c1 * p[2] + s2 * c2 * p[3]);

    let re = |x: f64| Complex::new(x, 0.0);
    let rho = ComplexMatrix4::from_rows([
        [re(r1), re(-q), re(q), re(r2)],
        [re(-q), re(u1), re(u2), re(-q)],
        [re(q), re(u2), re(u1), re(q)],
        [re(r2), re(-q), re(q), re(r1)],
    ]);
    let state = ThermalState {
        rho,
        temperature: t,
        couplings: *c,
        partition_value: partition_sum(&e, t),
    };
    Ok((state, YEntries { r1, r2, u1, u2, q }))
}

/// ρ_XY(T) with its closed-form entries.
///
/// With w± = (p₄ ± p₃)/2 and k = (J+Jz)/ζ:
/// z₁ = (p₂ + w₊ − k·w₋)/2, z₂ = (p₁ + w₊ + k·w₋)/2,
/// z₃ = −i(Dx−iDy) w₋/ζ, z₄ = e^{−2iα}(p₂ − w₊ + k·w₋)/2,
/// z₅ = (p₁ − w₊ − k·w₋)/2, where α = atan2(Dy, Dx).
pub fn thermal_state_xy(c: &Couplings, t: f64) -> Result<(ThermalState, XYEntries)> {
    if !c.is_dm_xy() {
        return Err(Error::WrongDmCase { expected: "dz = 0 and jx = jy" });
    }
    if c.dx == 0.0 && c.dy == 0.0 {
        return Err(Error::DegenerateDmPhase);
    }
    check_temperature(t)?;
    let e = energies_xy(c);
    let p = boltzmann_probs(&e, t);
    let zeta = zeta_xy(c);
    let k = (c.jx + c.jz) / zeta;
    let w_plus = 0.5 * (p[3] + p[2]);
    let w_minus = 0.5 * (p[3] - p[2]);

    let z1 = 0.5 * (p[1] + w_plus - k * w_minus);
    let z2 = 0.5 * (p[0] + w_plus + k * w_minus);
    let z5 = 0.5 * (p[0] - w_plus - k * w_minus);
    let z3 = Complex::new(0.0, -1.0) * Complex::new(c.dx, -c.dy) / zeta * w_minus;
    let alpha = f64::atan2(c.dy, c.dx);
    let z4 = Complex::from_polar(0.5 * (p[1] - w_plus + k * w_minus), -2.0 * alpha);

    let re = |x: f64| Complex::new(x, 0.0);
    let rho = ComplexMatrix4::from_rows([
        [re(z1), z3, -z3, z4],
        [z3.conj(), re(z2), re(z5), z3],
        [-z3.conj(), re(z5), re(z2), -z3],
        [z4.conj(), z3.conj(), -z3.conj(), re(z1)],
    ]);
    let state = ThermalState {
        rho,
        temperature: t,
        couplings: *c,
        partition_value: partition_sum(&e, t),
    };
    Ok((state, XYEntries { z1, z2, z3, z4, z5 }))
}

/// The reference route for arbitrary couplings: numerically diagonalize H
/// and exponentiate the spectrum. Every closed form above is tested
/// against this.
pub fn thermal_state_generic(c: &Couplings, t: f64) -> Result<ThermalState> {
    check_temperature(t)?;
    let spectrum = hermitian_eig(&build_hamiltonian(c))?;
    let rho = gibbs_from_spectrum(&spectrum, t)?;
    Ok(ThermalState {
        rho,
        temperature: t,
        couplings: *c,
        partition_value: partition_sum(&spectrum.eigenvalues, t),
    })
}
