//! Critical temperatures of entanglement sudden death and the
//! phase-boundary DM strengths D* where T_c hits zero.
//!
//! For DM along z the vanishing of concurrence is equivalent to a
//! two-branch transcendental condition: with ξ = √(4Dz²+(Jx+Jy)²) and
//! w = |Jx−Jy|,
//!
//! ```text
//! e^{2Jz/T} sinh(ξ/T) / cosh(w/T) = 1    when 2Jz + ξ ≥ w
//! e^{−2Jz/T} sinh(w/T) / cosh(ξ/T) = 1   when 2Jz + ξ < w
//! ```
//!
//! (the y-orientation mirrors this with η and |Jx−Jz|). Both branch
//! functions are strictly monotone in 1/T on their branch, so a bracketed
//! bisection is exact and robust; near the branch boundary the root runs
//! to zero, which is why D* is special-cased. A generic bisection on the
//! spin-flip concurrence provides the direction-independent oracle.

use crate::entanglement::concurrence_wootters;
use crate::model::{eta_y, xi_z, Couplings};
use crate::thermal::thermal_state_generic;
use crate::{Error, Result};

/// Which of the two branch equations produced a critical temperature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TcBranch {
    FirstEq,
    SecondEq,
    /// |D| sits on the phase boundary D*; T_c = 0 exactly.
    ZeroAtBoundary,
}

impl TcBranch {
    pub fn label(&self) -> &'static str {
        match self {
            TcBranch::FirstEq => "first-eq",
            TcBranch::SecondEq => "second-eq",
            TcBranch::ZeroAtBoundary => "zero-at-boundary",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CriticalResult {
    pub tc: f64,
    pub branch: TcBranch,
    /// |LHS − 1| of the branch equation at the returned T_c (0 for the
    /// boundary case).
    pub residual: f64,
}

/// DM strength at which the two branch conditions coincide, when it
/// exists: D* = √((Jref − J>)(Jref + J<)) for both factors negative.
#[derive(Debug, Clone, Copy)]
pub struct PhaseBoundary {
    pub d_star: Option<f64>,
    pub j_greater: f64,
    pub j_less: f64,
}

fn boundary(j_ref: f64, j_greater: f64, j_less: f64) -> PhaseBoundary {
    let f1 = j_ref - j_greater;
    let f2 = j_ref + j_less;
    // the second-equation region is nonempty only when both factors are
    // negative, i.e. j_ref < min(j_greater, −j_less)
    let d_star = if f1 < 0.0 && f2 < 0.0 {
        Some((f1 * f2).sqrt())
    } else {
        None
    };
    PhaseBoundary {
        d_star,
        j_greater,
        j_less,
    }
}

/// Boundary DM strength for the z orientation:
/// D_z* = √((Jz − J>)(Jz + J<)), J> = max(Jx,Jy), J< = min(Jx,Jy).
pub fn d_z_star(c: &Couplings) -> PhaseBoundary {
    boundary(c.jz, c.jx.max(c.jy), c.jx.min(c.jy))
}

/// Boundary DM strength for the y orientation:
/// D_y* = √((Jy − J̃>)(Jy + J̃<)), J̃> = max(Jx,Jz), J̃< = min(Jx,Jz).
pub fn d_y_star(c: &Couplings) -> PhaseBoundary {
    boundary(c.jy, c.jx.max(c.jz), c.jx.min(c.jz))
}

/// ln cosh(x), overflow-safe.
fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// ln sinh(x) for x > 0, overflow-safe.
fn ln_sinh(x: f64) -> f64 {
    x + (-(-2.0 * x).exp()).ln_1p() - std::f64::consts::LN_2
}

/// Solves g(1/T) = 0 by bisection in T for a g that is strictly
/// increasing in β = 1/T. Expands the bracket upward by doubling and, if
/// needed, downward by halving from the 1e-6 floor.
fn bisect_branch(g: impl Fn(f64) -> f64) -> Result<(f64, f64)> {
    let f = |t_val: f64| g(1.0 / t_val);
    let mut hi = 1.0;
    let mut doublings = 0;
    while f(hi) > 0.0 {
        hi *= 2.0;
        doublings += 1;
        if doublings > 60 {
            return Err(Error::NoTransition);
        }
    }
    let mut lo = 1e-6_f64.min(hi / 2.0);
    while f(lo) < 0.0 {
        lo /= 2.0;
        if lo < 1e-300 {
            // the root has collapsed to T = 0 (boundary degeneracy)
            return Ok((0.0, 0.0));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo) <= 1e-15 * mid {
            break;
        }
    }
    let tc = 0.5 * (lo + hi);
    let residual = (f(tc).exp() - 1.0).abs();
    Ok((tc, residual))
}

fn critical_temperature_two_branch(
    j_par: f64,
    split: f64,
    w: f64,
    at_boundary: bool,
) -> Result<CriticalResult> {
    if at_boundary {
        return Ok(CriticalResult {
            tc: 0.0,
            branch: TcBranch::ZeroAtBoundary,
            residual: 0.0,
        });
    }
    let disc = 2.0 * j_par + split - w;
    if disc == 0.0 {
        return Ok(CriticalResult {
            tc: 0.0,
            branch: TcBranch::ZeroAtBoundary,
            residual: 0.0,
        });
    }
    if disc > 0.0 {
        // e^{2 j β} sinh(β split) / cosh(β w) = 1
        if split == 0.0 {
            // the first-branch LHS is identically zero: no root, and the
            // concurrence never turns positive in this regime
            return Err(Error::NoTransition);
        }
        let g = |b: f64| 2.0 * j_par * b + ln_sinh(b * split) - ln_cosh(b * w);
        let (tc, residual) = bisect_branch(g)?;
        Ok(CriticalResult {
            tc,
            branch: TcBranch::FirstEq,
            residual,
        })
    } else {
        // e^{−2 j β} sinh(β w) / cosh(β split) = 1
        if w == 0.0 {
            // with Jx = Jy (or Jx = Jz) the second equation has no
            // solution; verified here rather than assumed
            return Err(Error::NoTransition);
        }
        let g = |b: f64| -2.0 * j_par * b + ln_sinh(b * w) - ln_cosh(b * split);
        let (tc, residual) = bisect_branch(g)?;
        Ok(CriticalResult {
            tc,
            branch: TcBranch::SecondEq,
            residual,
        })
    }
}

/// Critical temperature for DM along z from the branch equations.
pub fn critical_temperature_z(c: &Couplings) -> Result<CriticalResult> {
    if !c.is_dm_z() {
        return Err(Error::WrongDmCase { expected: "dx = dy = 0" });
    }
    let at_boundary = d_z_star(c)
        .d_star
        .is_some_and(|ds| (c.dz.abs() - ds).abs() < 1e-12);
    critical_temperature_two_branch(c.jz, xi_z(c), (c.jx - c.jy).abs(), at_boundary)
}

/// Critical temperature for DM along y from the branch equations.
pub fn critical_temperature_y(c: &Couplings) -> Result<CriticalResult> {
    if !c.is_dm_y() {
        return Err(Error::WrongDmCase { expected: "dx = dz = 0" });
    }
    let at_boundary = d_y_star(c)
        .d_star
        .is_some_and(|ds| (c.dy.abs() - ds).abs() < 1e-12);
    critical_temperature_two_branch(c.jy, eta_y(c), (c.jx - c.jz).abs(), at_boundary)
}

/// Direction-independent T_c oracle: the largest temperature at which the
/// spin-flip concurrence of the generic Gibbs state is still positive,
/// located by doubling from t = 1e-3 and bisecting to 1e-8 absolute.
pub fn critical_temperature_oracle(c: &Couplings) -> Result<f64> {
    let conc = |t: f64| -> Result<f64> {
        Ok(concurrence_wootters(&thermal_state_generic(c, t)?.rho)?.value)
    };
    let mut lo = 1e-3;
    if conc(lo)? <= 0.0 {
        // look for entanglement at lower temperatures before giving up
        let mut found = false;
        while lo > 1e-9 {
            lo /= 2.0;
            if conc(lo)? > 0.0 {
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::NoTransition);
        }
    }
    let mut hi = lo;
    let mut doublings = 0;
    while conc(hi)? > 0.0 {
        hi *= 2.0;
        doublings += 1;
        if doublings > 200 {
            return Err(Error::NoTransition);
        }
    }
    lo = hi / 2.0;
    while hi - lo > 1e-8 {
        let mid = 0.5 * (lo + hi);
        if conc(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
