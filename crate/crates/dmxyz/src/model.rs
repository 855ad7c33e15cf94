//! The two-qubit Heisenberg XYZ Hamiltonian with a Dzyaloshinskii-Moriya
//! term, and its analytic spectra for the three special DM orientations.
//!
//! In the computational basis |00⟩,|01⟩,|10⟩,|11⟩ the general Hamiltonian
//! has matrix
//!
//! ```text
//! H = Jx σˣ⊗σˣ + Jy σʸ⊗σʸ + Jz σᶻ⊗σᶻ
//!   + Dx (σʸ⊗σᶻ − σᶻ⊗σʸ) + Dy (σᶻ⊗σˣ − σˣ⊗σᶻ) + Dz (σˣ⊗σʸ − σʸ⊗σˣ)
//! ```
//!
//! For D along z, along y, or in the xy-plane (with Jx = Jy) the spectrum
//! factors into Bell-type eigenvectors with a single mixing angle; those
//! closed forms are what [`spectrum_z`], [`spectrum_y`] and [`spectrum_xy`]
//! provide, and the generic eigensolver cross-checks them.

use crate::numerics::{Complex, ComplexMatrix4, SpectralDecomposition};
use crate::{Error, Result};

const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Exchange couplings Jx, Jy, Jz and DM vector (Dx, Dy, Dz), all in the
/// same energy units, with k_B = 1 throughout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Couplings {
    pub jx: f64,
    pub jy: f64,
    pub jz: f64,
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
}

impl Couplings {
    pub const fn new(jx: f64, jy: f64, jz: f64, dx: f64, dy: f64, dz: f64) -> Self {
        Couplings { jx, jy, jz, dx, dy, dz }
    }

    /// XYZ exchange with DM along z.
    pub const fn with_dm_z(jx: f64, jy: f64, jz: f64, dz: f64) -> Self {
        Self::new(jx, jy, jz, 0.0, 0.0, dz)
    }

    /// XYZ exchange with DM along y.
    pub const fn with_dm_y(jx: f64, jy: f64, jz: f64, dy: f64) -> Self {
        Self::new(jx, jy, jz, 0.0, dy, 0.0)
    }

    /// XXZ exchange (Jx = Jy = j) with DM in the xy-plane.
    pub const fn with_dm_xy(j: f64, jz: f64, dx: f64, dy: f64) -> Self {
        Self::new(j, j, jz, dx, dy, 0.0)
    }

    pub fn dm_norm(&self) -> f64 {
        (self.dx * self.dx + self.dy * self.dy + self.dz * self.dz).sqrt()
    }

    /// DM restricted to the z-axis (Dx = Dy = 0). Comparisons are exact:
    /// these are user inputs, not computed values.
    pub fn is_dm_z(&self) -> bool {
        self.dx == 0.0 && self.dy == 0.0
    }

    /// DM restricted to the y-axis (Dx = Dz = 0).
    pub fn is_dm_y(&self) -> bool {
        self.dx == 0.0 && self.dz == 0.0
    }

    /// DM in the xy-plane with symmetric in-plane exchange (Dz = 0, Jx = Jy).
    pub fn is_dm_xy(&self) -> bool {
        self.dz == 0.0 && self.jx == self.jy
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("jx", self.jx),
            ("jy", self.jy),
            ("jz", self.jz),
            ("dx", self.dx),
            ("dy", self.dy),
            ("dz", self.dz),
        ] {
            if !v.is_finite() {
                return Err(Error::OutOfRange(format!("coupling {name} = {v} is not finite")));
            }
        }
        Ok(())
    }
}

/// Which analytic family a coupling set falls into. Overlapping cases
/// (e.g. D = 0 satisfies several) resolve in the order Z, Y, XY-plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DmCase {
    ZOnly,
    YOnly,
    XYPlane,
    General,
}

impl DmCase {
    pub fn label(&self) -> &'static str {
        match self {
            DmCase::ZOnly => "dm-z",
            DmCase::YOnly => "dm-y",
            DmCase::XYPlane => "dm-xy-plane",
            DmCase::General => "general",
        }
    }
}

pub fn classify(c: &Couplings) -> DmCase {
    if c.is_dm_z() {
        DmCase::ZOnly
    } else if c.is_dm_y() {
        DmCase::YOnly
    } else if c.is_dm_xy() {
        DmCase::XYPlane
    } else {
        DmCase::General
    }
}

fn cx(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Assembles H in the computational basis. Hermitian by construction and
/// traceless (all Pauli products are traceless).
pub fn build_hamiltonian(c: &Couplings) -> ComplexMatrix4 {
    let mut h = ComplexMatrix4::zeros();
    // diagonal: Jz σᶻ⊗σᶻ
    h[(0, 0)] = cx(c.jz, 0.0);
    h[(1, 1)] = cx(-c.jz, 0.0);
    h[(2, 2)] = cx(-c.jz, 0.0);
    h[(3, 3)] = cx(c.jz, 0.0);
    // anti-diagonal: Jx σˣ⊗σˣ + Jy σʸ⊗σʸ and the Dz term
    h[(0, 3)] = cx(c.jx - c.jy, 0.0);
    h[(3, 0)] = cx(c.jx - c.jy, 0.0);
    h[(1, 2)] = cx(c.jx + c.jy, 2.0 * c.dz);
    h[(2, 1)] = cx(c.jx + c.jy, -2.0 * c.dz);
    // Dx, Dy couple the diagonal and anti-diagonal sectors
    let w = cx(c.dy, c.dx); // D_y + i D_x
    h[(0, 1)] = w;
    h[(1, 0)] = w.conj();
    h[(0, 2)] = -w;
    h[(2, 0)] = -w.conj();
    h[(1, 3)] = w;
    h[(3, 1)] = w.conj();
    h[(2, 3)] = -w;
    h[(3, 2)] = -w.conj();
    h
}

/// ξ = √(4Dz² + (Jx+Jy)²), the level splitting of the |01⟩/|10⟩ sector
/// for DM along z.
pub fn xi_z(c: &Couplings) -> f64 {
    (4.0 * c.dz * c.dz + (c.jx + c.jy) * (c.jx + c.jy)).sqrt()
}

/// η = √(4Dy² + (Jx+Jz)²) for DM along y.
pub fn eta_y(c: &Couplings) -> f64 {
    (4.0 * c.dy * c.dy + (c.jx + c.jz) * (c.jx + c.jz)).sqrt()
}

/// ζ = √(4(Dx²+Dy²) + (J+Jz)²) for in-plane DM with Jx = Jy = J.
pub fn zeta_xy(c: &Couplings) -> f64 {
    let d2 = c.dx * c.dx + c.dy * c.dy;
    (4.0 * d2 + (c.jx + c.jz) * (c.jx + c.jz)).sqrt()
}

/// Energies of the z-orientation spectrum in closed-form order:
/// {Jx−Jy+Jz, −Jx+Jy+Jz, −Jz+ξ, −Jz−ξ}.
pub(crate) fn energies_z(c: &Couplings) -> [f64; 4] {
    let xi = xi_z(c);
    [
        c.jx - c.jy + c.jz,
        -c.jx + c.jy + c.jz,
        -c.jz + xi,
        -c.jz - xi,
    ]
}

/// Energies of the y-orientation spectrum in closed-form order:
/// {Jy+(Jx−Jz), Jy−(Jx−Jz), −Jy+η, −Jy−η}.
pub(crate) fn energies_y(c: &Couplings) -> [f64; 4] {
    let eta = eta_y(c);
    [
        c.jy + (c.jx - c.jz),
        c.jy - (c.jx - c.jz),
        -c.jy + eta,
        -c.jy - eta,
    ]
}

/// Energies of the in-plane spectrum in closed-form order:
/// {2J−Jz, Jz, −J+ζ, −J−ζ}.
pub(crate) fn energies_xy(c: &Couplings) -> [f64; 4] {
    let zeta = zeta_xy(c);
    [2.0 * c.jx - c.jz, c.jz, -c.jx + zeta, -c.jx - zeta]
}

/// (sin φ₁, cos φ₁, sin φ₂, cos φ₂) for the y-orientation eigenvectors,
/// from the cancellation-free (numerator, denominator) pair for the sign
/// of Jx+Jz, so the Dy → 0 limit pairs each energy with the correct
/// Bell-type vector and sin φ₁ sin φ₂ + cos φ₁ cos φ₂ = 0 holds exactly.
pub(crate) fn phi_sincos_y(c: &Couplings) -> (f64, f64, f64, f64) {
    let a = c.jx + c.jz;
    let eta = eta_y(c);
    if eta == 0.0 {
        // Dy = 0 and Jx + Jz = 0: the sector is fully degenerate and any
        // orthonormal pair will do.
        return (1.0, 0.0, 0.0, 1.0);
    }
    let two_dy = 2.0 * c.dy;
    if a >= 0.0 {
        let n = f64::hypot(eta + a, two_dy);
        ((eta + a) / n, -two_dy / n, two_dy / n, (eta + a) / n)
    } else {
        let n = f64::hypot(two_dy, eta - a);
        (two_dy / n, (a - eta) / n, (eta - a) / n, two_dy / n)
    }
}

/// Mixing angles (φ₁, φ₂) of the y-orientation eigenvectors; tangents agree
/// with tan φ₁ = −2Dy/(η−(Jx+Jz)) and tan φ₂ = 2Dy/(η+(Jx+Jz)).
pub fn phi_angles_y(c: &Couplings) -> (f64, f64) {
    let (s1, c1, s2, c2) = phi_sincos_y(c);
    (f64::atan2(s1, c1), f64::atan2(s2, c2))
}

fn decomposition(energies: [f64; 4], vectors: [[Complex; 4]; 4]) -> SpectralDecomposition {
    SpectralDecomposition {
        eigenvalues: energies,
        eigenvectors: vectors,
    }
    .sorted()
}

/// Closed-form spectrum for DM along z.
///
/// Eigenvectors are (|00⟩±|11⟩)/√2 and (|01⟩ ± e^{iθ}|10⟩)/√2 with
/// θ = atan2(−2Dz, Jx+Jy).
pub fn spectrum_z(c: &Couplings) -> Result<SpectralDecomposition> {
    if !c.is_dm_z() {
        return Err(Error::WrongDmCase { expected: "dx = dy = 0" });
    }
    let theta = f64::atan2(-2.0 * c.dz, c.jx + c.jy);
    let ph = Complex::from_polar(SQRT_HALF, theta);
    let h = cx(SQRT_HALF, 0.0);
    let zero = cx(0.0, 0.0);
    let vectors = [
        [h, zero, zero, h],
        [h, zero, zero, -h],
        [zero, h, ph, zero],
        [zero, h, -ph, zero],
    ];
    Ok(decomposition(energies_z(c), vectors))
}

/// Closed-form spectrum for DM along y. All eigenvectors are real; the
/// |00⟩+|11⟩ / |01⟩−|10⟩ sector mixes through φ₁ and φ₂.
pub fn spectrum_y(c: &Couplings) -> Result<SpectralDecomposition> {
    if !c.is_dm_y() {
        return Err(Error::WrongDmCase { expected: "dx = dz = 0" });
    }
    let (s1, c1, s2, c2) = phi_sincos_y(c);
    let h = SQRT_HALF;
    let v = |x: f64| cx(x * h, 0.0);
    let zero = cx(0.0, 0.0);
    let vectors = [
        [zero, v(1.0), v(1.0), zero],
        [v(1.0), zero, zero, v(-1.0)],
        [v(s1), v(-c1), v(c1), v(s1)],
        [v(s2), v(-c2), v(c2), v(s2)],
    ];
    Ok(decomposition(energies_y(c), vectors))
}

/// Closed-form spectrum for in-plane DM (Jx = Jy = J, Dz = 0).
///
/// The |00⟩/|11⟩ coefficients of the Jz eigenvector carry the in-plane
/// phase e^{∓iα} with α = atan2(Dy, Dx); the two ζ-split vectors carry
/// normalizations N₃² = 4ζ(ζ−(J+Jz)) and N₄² = 4ζ(ζ+(J+Jz)), evaluated
/// through the cancellation-free form 4(Dx²+Dy²)/(ζ±(J+Jz)).
///
/// At Dx = Dy = 0 the phase is undefined and the closed form is
/// unavailable ([`Error::DegenerateDmPhase`]); that point is covered by
/// [`spectrum_z`] and the generic eigensolver.
pub fn spectrum_xy(c: &Couplings) -> Result<SpectralDecomposition> {
    if !c.is_dm_xy() {
        return Err(Error::WrongDmCase { expected: "dz = 0 and jx = jy" });
    }
    if c.dx == 0.0 && c.dy == 0.0 {
        return Err(Error::DegenerateDmPhase);
    }
    let j = c.jx;
    let q = j + c.jz;
    let d2 = c.dx * c.dx + c.dy * c.dy;
    let zeta = zeta_xy(c);

    // ζ − q and ζ + q without cancellation
    let big = zeta + q.abs();
    let small = 4.0 * d2 / big;
    let (zeta_minus_q, zeta_plus_q) = if q >= 0.0 { (small, big) } else { (big, small) };

    let alpha = f64::atan2(c.dy, c.dx);
    let h = SQRT_HALF;
    let zero = cx(0.0, 0.0);

    let e1 = [zero, cx(h, 0.0), cx(h, 0.0), zero];
    let e2 = [
        Complex::from_polar(h, -alpha),
        zero,
        zero,
        Complex::from_polar(h, alpha),
    ];
    // unnormalized: 2(−Dx+iDy)|00⟩ − i(q−ζ)(|01⟩−|10⟩) + 2(Dx+iDy)|11⟩
    let mk = |gap: f64| {
        let mid = cx(0.0, gap); // −i(q−ζ) = i(ζ−q) for gap = ζ−q
        let v = [
            cx(-2.0 * c.dx, 2.0 * c.dy),
            mid,
            -mid,
            cx(2.0 * c.dx, 2.0 * c.dy),
        ];
        let norm = (v.iter().map(|z| z.norm_sqr()).sum::<f64>()).sqrt();
        v.map(|z| z / norm)
    };
    let e3 = mk(zeta_minus_q);
    let e4 = mk(-zeta_plus_q);

    Ok(decomposition(energies_xy(c), [e1, e2, e3, e4]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::hermitian_eig;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hamiltonian_matches_printed_z_form() {
        let h = build_hamiltonian(&Couplings::with_dm_z(1.0, 1.5, 0.2, 0.5));
        assert_eq!(h[(0, 0)], cx(0.2, 0.0));
        assert_eq!(h[(1, 1)], cx(-0.2, 0.0));
        assert_eq!(h[(2, 2)], cx(-0.2, 0.0));
        assert_eq!(h[(3, 3)], cx(0.2, 0.0));
        assert_eq!(h[(0, 3)], cx(-0.5, 0.0));
        assert_eq!(h[(1, 2)], cx(2.5, 1.0));
        assert_eq!(h[(2, 1)], cx(2.5, -1.0));
        assert_eq!(h[(0, 1)], cx(0.0, 0.0));
    }

    #[test]
    fn hamiltonian_matches_printed_y_form() {
        let h = build_hamiltonian(&Couplings::with_dm_y(1.0, 1.5, 2.0, 1.0));
        assert_eq!(h[(0, 1)], cx(1.0, 0.0));
        assert_eq!(h[(0, 2)], cx(-1.0, 0.0));
        assert_eq!(h[(1, 3)], cx(1.0, 0.0));
        assert_eq!(h[(2, 3)], cx(-1.0, 0.0));
        assert_eq!(h[(1, 2)], cx(2.5, 0.0));
        assert_eq!(h[(0, 3)], cx(-0.5, 0.0));
    }

    #[test]
    fn hamiltonian_matches_printed_xy_form() {
        let h = build_hamiltonian(&Couplings::with_dm_xy(1.0, 2.0, 1.0, 2.0));
        // (0,1) entry is i·Dx + Dy = 2 + i
        assert_eq!(h[(0, 1)], cx(2.0, 1.0));
        assert_eq!(h[(1, 0)], cx(2.0, -1.0));
        assert_eq!(h[(0, 2)], cx(-2.0, -1.0));
        assert_eq!(h[(1, 2)], cx(2.0, 0.0));
        assert_eq!(h[(0, 3)], cx(0.0, 0.0));
        assert_eq!(h[(3, 2)], cx(-2.0, 1.0));
    }

    #[test]
    fn hamiltonian_is_hermitian_and_traceless() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let c = Couplings::new(
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
            );
            let h = build_hamiltonian(&c);
            assert_eq!(h.hermiticity_deviation(), 0.0);
            assert_eq!(h.trace(), cx(0.0, 0.0));
        }
    }

    #[test]
    fn classify_cases() {
        assert_eq!(classify(&Couplings::with_dm_z(1.0, 2.0, 3.0, 0.5)), DmCase::ZOnly);
        assert_eq!(classify(&Couplings::with_dm_y(1.0, 2.0, 3.0, 1.0)), DmCase::YOnly);
        assert_eq!(classify(&Couplings::with_dm_xy(1.0, 3.0, 1.0, 2.0)), DmCase::XYPlane);
        assert_eq!(
            classify(&Couplings::new(1.0, 2.0, 3.0, 1.0, 2.0, 0.0)),
            DmCase::General
        );
        // all-zero DM resolves to the z family
        assert_eq!(classify(&Couplings::with_dm_z(1.0, 2.0, 3.0, 0.0)), DmCase::ZOnly);
    }

    fn check_against_numeric(c: &Couplings, s: &SpectralDecomposition, tol: f64) {
        let h = build_hamiltonian(c);
        let n = hermitian_eig(&h).unwrap();
        for k in 0..4 {
            assert!(
                (s.eigenvalues[k] - n.eigenvalues[k]).abs() < tol,
                "{c:?}: eigenvalue {k}: {} vs {}",
                s.eigenvalues[k],
                n.eigenvalues[k]
            );
        }
        assert!(s.reconstruct().max_abs_diff(&h) < 1e-10, "{c:?}");
        assert!(s.gram_deviation() < 1e-12, "{c:?}");
    }

    #[test]
    fn spectrum_z_isotropic_xx() {
        let c = Couplings::with_dm_z(1.0, 1.0, 0.2, 0.0);
        let s = spectrum_z(&c).unwrap();
        assert!((s.eigenvalues[0] + 2.2).abs() < 1e-15);
        assert!((s.eigenvalues[1] - 0.2).abs() < 1e-15);
        assert!((s.eigenvalues[2] - 0.2).abs() < 1e-15);
        assert!((s.eigenvalues[3] - 1.8).abs() < 1e-15);
        // ground state is the singlet
        let g = s.eigenvectors[0];
        assert!(g[0].norm() < 1e-15 && g[3].norm() < 1e-15);
        assert!((g[1] + g[2]).norm() < 1e-15);
        check_against_numeric(&c, &s, 1e-12);
    }

    #[test]
    fn spectrum_z_example() {
        let c = Couplings::with_dm_z(1.0, 1.5, 0.2, 0.5);
        let s = spectrum_z(&c).unwrap();
        let xi = 7.25f64.sqrt();
        assert!((s.eigenvalues[3] - (-0.2 + xi)).abs() < 1e-15);
        check_against_numeric(&c, &s, 1e-12);
    }

    #[test]
    fn spectrum_z_equal_couplings_real_vectors() {
        // jx = jy makes θ = 0: vectors reduce to (|01⟩ ± |10⟩)/√2
        let s = spectrum_z(&Couplings::with_dm_z(1.2, 1.2, 0.4, 0.0)).unwrap();
        for v in &s.eigenvectors {
            for z in v {
                assert!(z.im.abs() < 1e-15);
            }
        }
    }

    #[test]
    fn spectrum_y_examples() {
        let c = Couplings::with_dm_y(1.0, 1.5, 2.0, 0.0);
        let s = spectrum_y(&c).unwrap();
        check_against_numeric(&c, &s, 1e-12);
        assert!((s.eigenvalues[0] + 4.5).abs() < 1e-12);

        let c = Couplings::with_dm_y(-1.0, -1.5, -2.0, 7f64.sqrt() / 2.0);
        let s = spectrum_y(&c).unwrap();
        check_against_numeric(&c, &s, 1e-12);
        // E1 = jy + (jx − jz) = −0.5 and E4 = −jy − η = −2.5
        assert!(s.eigenvalues.iter().any(|&e| (e + 0.5).abs() < 1e-12));
        assert!((s.eigenvalues[0] + 2.5).abs() < 1e-12);
    }

    #[test]
    fn spectrum_y_phi_orthogonality_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let c = Couplings::with_dm_y(
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
            );
            // cos(φ₁ − φ₂) = 0 is the orthogonality of the mixed pair;
            // the sin/cos construction makes it exact, not just small.
            let (s1, c1, s2, c2) = phi_sincos_y(&c);
            assert_eq!(s1 * s2 + c1 * c2, 0.0, "{c:?}");
            let (p1, p2) = phi_angles_y(&c);
            assert!((p1 - p2).cos().abs() < 1e-15, "{c:?}");
        }
    }

    #[test]
    fn spectrum_xy_example_and_trace() {
        let c = Couplings::with_dm_xy(1.0, 2.0, 1.0, 2.0);
        let s = spectrum_xy(&c).unwrap();
        assert!((zeta_xy(&c) - 29f64.sqrt()).abs() < 1e-15);
        check_against_numeric(&c, &s, 1e-12);
        let sum: f64 = s.eigenvalues.iter().sum();
        assert!(sum.abs() < 1e-12); // trace(H) = 0
    }

    #[test]
    fn spectrum_xy_degenerate_phase_is_an_error() {
        let c = Couplings::with_dm_xy(1.0, 0.2, 0.0, 0.0);
        assert!(matches!(spectrum_xy(&c), Err(Error::DegenerateDmPhase)));
    }

    #[test]
    fn spectrum_xy_small_dm_recovers_xxz_levels() {
        // dx = dy → 0⁺ approaches the Dz = 0 XXZ spectrum continuously
        let c0 = Couplings::with_dm_z(1.0, 1.0, 0.2, 0.0);
        let s0 = spectrum_z(&c0).unwrap();
        let c = Couplings::with_dm_xy(1.0, 0.2, 1e-7, 1e-7);
        let s = spectrum_xy(&c).unwrap();
        for k in 0..4 {
            assert!((s.eigenvalues[k] - s0.eigenvalues[k]).abs() < 1e-12);
        }
        check_against_numeric(&c, &s, 1e-12);
    }

    #[test]
    fn analytic_spectra_match_numeric_over_random_draws() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..1000 {
            let j: [f64; 3] = [
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
            ];
            let d = rng.gen_range(-3.0..3.0);
            let cz = Couplings::with_dm_z(j[0], j[1], j[2], d);
            check_against_numeric(&cz, &spectrum_z(&cz).unwrap(), 1e-10);
            let cy = Couplings::with_dm_y(j[0], j[1], j[2], d);
            check_against_numeric(&cy, &spectrum_y(&cy).unwrap(), 1e-10);
            let cxy =
                Couplings::with_dm_xy(j[0], j[2], rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            if !(cxy.dx == 0.0 && cxy.dy == 0.0) {
                check_against_numeric(&cxy, &spectrum_xy(&cxy).unwrap(), 1e-10);
            }
        }
    }

    #[test]
    fn wrong_case_errors() {
        let c = Couplings::new(1.0, 2.0, 3.0, 1.0, 1.0, 1.0);
        assert!(matches!(spectrum_z(&c), Err(Error::WrongDmCase { .. })));
        assert!(matches!(spectrum_y(&c), Err(Error::WrongDmCase { .. })));
        assert!(matches!(spectrum_xy(&c), Err(Error::WrongDmCase { .. })));
    }
}
