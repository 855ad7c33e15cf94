//! Dense complex linear algebra for 4×4 (and reduced 2×2) Hermitian
//! matrices, plus the scalar primitives the rest of the crate builds on:
//! a cyclic complex Jacobi eigensolver, overflow-safe Gibbs weights,
//! von Neumann entropy, partial traces and a real-root cubic solver.
//!
//! Everything here is sized at compile time; there is no general n×n path.

use num_complex::Complex64;

use crate::{Error, Result};

pub type Complex = Complex64;

/// Temperatures below this are treated as the T → 0 limit (ground-state
/// projector) to avoid overflowing Boltzmann weights.
pub const MIN_TEMPERATURE: f64 = 1e-9;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Dense N×N complex matrix stored by rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMat<const N: usize> {
    e: [[Complex; N]; N],
}

pub type ComplexMatrix4 = CMat<4>;
pub type ComplexMatrix2 = CMat<2>;

impl<const N: usize> CMat<N> {
    pub fn zeros() -> Self {
        CMat { e: [[ZERO; N]; N] }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.e[i][i] = ONE;
        }
        m
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> Complex) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.e[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: [[Complex; N]; N]) -> Self {
        CMat { e: rows }
    }

    /// Diagonal matrix from real entries.
    pub fn from_diag(d: [f64; N]) -> Self {
        Self::from_fn(|i, j| if i == j { Complex::new(d[i], 0.0) } else { ZERO })
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.e[j][i].conj())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.e[i][j].conj())
    }

    pub fn trace(&self) -> Complex {
        (0..N).map(|i| self.e[i][i]).sum()
    }

    pub fn scale(&self, a: f64) -> Self {
        Self::from_fn(|i, j| self.e[i][j] * a)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.e[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..N {
                    out.e[i][j] += a * rhs.e[k][j];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| self.e[i][j] + rhs.e[i][j])
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| self.e[i][j] - rhs.e[i][j])
    }

    /// Largest entry magnitude of `self − rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..N {
            for j in 0..N {
                d = d.max((self.e[i][j] - rhs.e[i][j]).norm());
            }
        }
        d
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..N {
            for j in 0..N {
                s += self.e[i][j].norm_sqr();
            }
        }
        s.sqrt()
    }

    /// Largest entry magnitude of `self − self†`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..N {
            for j in 0..N {
                d = d.max((self.e[i][j] - self.e[j][i].conj()).norm());
            }
        }
        d
    }

    /// (self + self†)/2.
    pub fn hermitized(&self) -> Self {
        Self::from_fn(|i, j| (self.e[i][j] + self.e[j][i].conj()) * 0.5)
    }

    pub fn rows(&self) -> &[[Complex; N]; N] {
        &self.e
    }
}

impl<const N: usize> std::ops::Index<(usize, usize)> for CMat<N> {
    type Output = Complex;
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.e[i][j]
    }
}

impl<const N: usize> std::ops::IndexMut<(usize, usize)> for CMat<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.e[i][j]
    }
}

/// Kronecker product of two qubit operators, first factor on the left,
/// computational basis order |00⟩,|01⟩,|10⟩,|11⟩.
pub fn kron(a: &ComplexMatrix2, b: &ComplexMatrix2) -> ComplexMatrix4 {
    ComplexMatrix4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

/// Which qubit survives a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Eigenvalues (ascending) and matching orthonormal eigenvectors of a
/// 4×4 Hermitian matrix.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: [f64; 4],
    /// `eigenvectors[k]` is the eigenvector for `eigenvalues[k]`.
    pub eigenvectors: [[Complex; 4]; 4],
}

impl SpectralDecomposition {
    /// Σ λᵢ |vᵢ⟩⟨vᵢ|.
    pub fn reconstruct(&self) -> ComplexMatrix4 {
        let mut m = ComplexMatrix4::zeros();
        for k in 0..4 {
            let v = &self.eigenvectors[k];
            for i in 0..4 {
                for j in 0..4 {
                    m[(i, j)] += v[i] * v[j].conj() * self.eigenvalues[k];
                }
            }
        }
        m
    }

    /// Largest |⟨vᵢ|vⱼ⟩ − δᵢⱼ|.
    pub fn gram_deviation(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let mut g = ZERO;
                for k in 0..4 {
                    g += self.eigenvectors[i][k].conj() * self.eigenvectors[j][k];
                }
                let expect = if i == j { ONE } else { ZERO };
                d = d.max((g - expect).norm());
            }
        }
        d
    }

    /// Sorts eigenpairs so that eigenvalues ascend.
    pub fn sorted(mut self) -> Self {
        let mut idx = [0usize, 1, 2, 3];
        idx.sort_by(|&a, &b| self.eigenvalues[a].total_cmp(&self.eigenvalues[b]));
        let vals = self.eigenvalues;
        let vecs = self.eigenvectors;
        for (k, &i) in idx.iter().enumerate() {
            self.eigenvalues[k] = vals[i];
            self.eigenvectors[k] = vecs[i];
        }
        self
    }
}

/// Cyclic complex Jacobi diagonalization. Returns eigenvalues (ascending)
/// with matching orthonormal eigenvectors. The input is symmetrized first;
/// callers are responsible for the Hermiticity precondition.
fn jacobi_eig<const N: usize>(m: &CMat<N>) -> ([f64; N], [[Complex; N]; N]) {
    let mut a = m.hermitized();
    let mut v = CMat::<N>::identity();

    let off_diag_norm = |a: &CMat<N>| {
        let mut s = 0.0;
        for i in 0..N {
            for j in 0..N {
                if i != j {
                    s += a[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let tol = 1e-14 * a.frobenius_norm().max(1.0);
    let mut sweeps = 0;
    while off_diag_norm(&a) > tol && sweeps < 60 {
        sweeps += 1;
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                let phase = apq / mag; // e^{iφ}
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (aqq - app) / (2.0 * mag);
                // smaller-magnitude root of t² + 2τt − 1 = 0
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let s_f = phase * s; // s·e^{iφ}

                // A ← U† A U with U = I except U[p,p]=c, U[p,q]=s·e^{iφ},
                // U[q,p]=−s·e^{−iφ}, U[q,q]=c.
                for k in 0..N {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - akq * s_f.conj();
                    a[(k, q)] = akp * s_f + akq * c;
                }
                for k in 0..N {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c - aqk * s_f;
                    a[(q, k)] = apk * s_f.conj() + aqk * c;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                for k in 0..N {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * s_f.conj();
                    v[(k, q)] = vkp * s_f + vkq * c;
                }
            }
        }
    }

    let mut vals = [0.0; N];
    for i in 0..N {
        vals[i] = a[(i, i)].re;
    }
    let mut idx: Vec<usize> = (0..N).collect();
    idx.sort_by(|&x, &y| vals[x].total_cmp(&vals[y]));

    let mut evals = [0.0; N];
    let mut evecs = [[ZERO; N]; N];
    for (k, &i) in idx.iter().enumerate() {
        evals[k] = vals[i];
        for r in 0..N {
            evecs[k][r] = v[(r, i)];
        }
    }
    (evals, evecs)
}

/// Full spectral decomposition of a Hermitian 4×4 matrix.
///
/// Fails with [`Error::NonHermitianInput`] when max |m − m†| exceeds 1e-10.
pub fn hermitian_eig(m: &ComplexMatrix4) -> Result<SpectralDecomposition> {
    let deviation = m.hermiticity_deviation();
    if deviation > 1e-10 {
        return Err(Error::NonHermitianInput { deviation });
    }
    let (eigenvalues, eigenvectors) = jacobi_eig(m);
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Boltzmann probabilities e^{−Eᵢ/t} / Σⱼ e^{−Eⱼ/t}, computed with the
/// minimum energy subtracted before exponentiation. Below
/// [`MIN_TEMPERATURE`] the ground level(s) get equal weight directly.
pub(crate) fn boltzmann_probs(energies: &[f64; 4], t: f64) -> [f64; 4] {
    let e_min = energies.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut w = [0.0; 4];
    if t < MIN_TEMPERATURE {
        let tol = 1e-12 * (1.0 + e_min.abs());
        let mut count = 0usize;
        for (i, &e) in energies.iter().enumerate() {
            if e - e_min <= tol {
                w[i] = 1.0;
                count += 1;
            }
        }
        for x in &mut w {
            *x /= count as f64;
        }
        return w;
    }
    let mut z = 0.0;
    for (i, &e) in energies.iter().enumerate() {
        w[i] = (-(e - e_min) / t).exp();
        z += w[i];
    }
    for x in &mut w {
        *x /= z;
    }
    w
}

/// Gibbs state Σ pᵢ |vᵢ⟩⟨vᵢ| at temperature `t` from a spectral
/// decomposition, with pᵢ the shifted Boltzmann weights.
pub fn gibbs_from_spectrum(s: &SpectralDecomposition, t: f64) -> Result<ComplexMatrix4> {
    if !(t > 0.0) {
        return Err(Error::NonPositiveTemperature(t));
    }
    let p = boltzmann_probs(&s.eigenvalues, t);
    let mut rho = ComplexMatrix4::zeros();
    for k in 0..4 {
        if p[k] == 0.0 {
            continue;
        }
        let v = &s.eigenvectors[k];
        for i in 0..4 {
            for j in 0..4 {
                rho[(i, j)] += v[i] * v[j].conj() * p[k];
            }
        }
    }
    Ok(rho)
}

/// x·log₂x with the 0·log 0 = 0 convention.
pub(crate) fn xlog2x(x: f64) -> f64 {
    if x > 0.0 {
        x * x.log2()
    } else {
        0.0
    }
}

/// Checks Hermiticity, unit trace and (optionally) positivity; on success
/// hands back the eigenvalues so callers do not re-diagonalize.
pub(crate) fn density_eigenvalues<const N: usize>(rho: &CMat<N>, tol: f64) -> Result<[f64; N]> {
    let dev = rho.hermiticity_deviation();
    if dev > tol {
        return Err(Error::InvalidDensityMatrix(format!(
            "Hermiticity deviation {dev:.3e}"
        )));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
        return Err(Error::InvalidDensityMatrix(format!(
            "trace = {} + {}i",
            tr.re, tr.im
        )));
    }
    let (vals, _) = jacobi_eig(rho);
    if vals.iter().any(|&l| l < -tol) {
        return Err(Error::InvalidDensityMatrix(format!(
            "negative eigenvalue {:.3e}",
            vals.iter().cloned().fold(f64::INFINITY, f64::min)
        )));
    }
    Ok(vals)
}

/// Von Neumann entropy −Tr ρ log₂ ρ in bits, for 4×4 or 2×2 states.
pub fn von_neumann_entropy<const N: usize>(rho: &CMat<N>) -> Result<f64> {
    let vals = density_eigenvalues(rho, 1e-9)?;
    let mut s = 0.0;
    for &l in &vals {
        s -= xlog2x(l.max(0.0));
    }
    Ok(s.clamp(0.0, (N as f64).log2()))
}

/// Reduced state of one qubit of a two-qubit density matrix.
pub fn partial_trace(rho: &ComplexMatrix4, keep: Subsystem) -> Result<ComplexMatrix2> {
    let dev = rho.hermiticity_deviation();
    if dev > 1e-9 {
        return Err(Error::InvalidDensityMatrix(format!(
            "Hermiticity deviation {dev:.3e}"
        )));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > 1e-9 || tr.im.abs() > 1e-9 {
        return Err(Error::InvalidDensityMatrix(format!(
            "trace = {} + {}i",
            tr.re, tr.im
        )));
    }
    // basis index = 2a + b
    let out = match keep {
        Subsystem::A => ComplexMatrix2::from_fn(|a, ap| {
            rho[(2 * a, 2 * ap)] + rho[(2 * a + 1, 2 * ap + 1)]
        }),
        Subsystem::B => {
            ComplexMatrix2::from_fn(|b, bp| rho[(b, bp)] + rho[(2 + b, 2 + bp)])
        }
    };
    Ok(out)
}

/// Real roots of Λ³ − a₁Λ² + a₂Λ − a₃ = 0, in descending order.
///
/// Uses the trigonometric (Viète) form when the discriminant allows three
/// real roots and Cardano otherwise, then polishes the dominant root with
/// Newton steps and recovers the other two from the deflated quadratic so
/// that roots of very different magnitudes keep relative accuracy.
/// An imaginary part above 1e-9 is an error; below that it is discarded
/// (near-degenerate pair).
pub fn solve_cubic_real(a1: f64, a2: f64, a3: f64) -> Result<[f64; 3]> {
    let poly = |x: f64| ((x - a1) * x + a2) * x - a3;
    let dpoly = |x: f64| (3.0 * x - 2.0 * a1) * x + a2;

    // depressed form x³ + px + q with Λ = x + a1/3
    let shift = a1 / 3.0;
    let p = a2 - a1 * a1 / 3.0;
    let q = -2.0 * a1 * a1 * a1 / 27.0 + a1 * a2 / 3.0 - a3;

    if p == 0.0 && q == 0.0 {
        return Ok([shift, shift, shift]);
    }

    let disc = -4.0 * p * p * p - 27.0 * q * q;
    let mut dominant = if disc >= 0.0 && p < 0.0 {
        // three real roots; take the one of largest magnitude as seed
        let r = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let theta = arg.acos();
        let mut best = 0.0f64;
        for k in 0..3 {
            let x = r * ((theta - 2.0 * std::f64::consts::PI * k as f64) / 3.0).cos() + shift;
            if x.abs() > best.abs() {
                best = x;
            }
        }
        best
    } else {
        // one real root via Cardano
        let sq = (q * q / 4.0 + p * p * p / 27.0).max(0.0).sqrt();
        let u = (-q / 2.0 + sq).cbrt();
        let v = (-q / 2.0 - sq).cbrt();
        u + v + shift
    };

    for _ in 0..3 {
        let f = poly(dominant);
        let d = dpoly(dominant);
        if d != 0.0 {
            let step = f / d;
            if step.is_finite() {
                dominant -= step;
            }
        }
    }

    if dominant == 0.0 {
        // largest-magnitude root zero means all three vanish
        return Ok([0.0, 0.0, 0.0]);
    }

    // deflate: (Λ − dominant)(Λ² − sΛ + prod)
    let prod = a3 / dominant;
    let s = (a2 - prod) / dominant;
    let disc2 = s * s - 4.0 * prod;
    let (r1, r2) = if disc2 < 0.0 {
        let imag = (-disc2).sqrt() / 2.0;
        if imag > 1e-9 {
            return Err(Error::ComplexRootsDetected { imag });
        }
        (s / 2.0, s / 2.0)
    } else {
        let sq = disc2.sqrt();
        let big = if s >= 0.0 { (s + sq) / 2.0 } else { (s - sq) / 2.0 };
        if big == 0.0 {
            (0.0, 0.0)
        } else {
            (big, prod / big)
        }
    };

    let mut roots = [dominant, r1, r2];
    roots.sort_by(|a, b| b.total_cmp(a));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    pub(crate) fn random_hermitian(rng: &mut impl Rng) -> ComplexMatrix4 {
        let mut m = ComplexMatrix4::zeros();
        for i in 0..4 {
            m[(i, i)] = c(rng.gen_range(-5.0..5.0), 0.0);
            for j in (i + 1)..4 {
                let z = c(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
                m[(i, j)] = z;
                m[(j, i)] = z.conj();
            }
        }
        m
    }

    #[test]
    fn eig_identity() {
        let s = hermitian_eig(&ComplexMatrix4::identity()).unwrap();
        for &l in &s.eigenvalues {
            assert!((l - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn eig_diagonal() {
        let m = ComplexMatrix4::from_diag([1.0, -1.0, -1.0, 1.0]);
        let s = hermitian_eig(&m).unwrap();
        assert_eq!(s.eigenvalues.map(|x| x.round()), [-1.0, -1.0, 1.0, 1.0]);
    }

    #[test]
    fn eig_hz_example() {
        // H for (jx, jy, jz) = (1, 1.5, 0.2), dz = 0.5; analytic spectrum
        // {-0.3, 0.7, -0.2 ± sqrt(7.25)}
        let m = crate::model::build_hamiltonian(&crate::model::Couplings::new(
            1.0, 1.5, 0.2, 0.0, 0.0, 0.5,
        ));
        let s = hermitian_eig(&m).unwrap();
        let xi = 7.25f64.sqrt();
        let expect = [-0.2 - xi, -0.3, 0.7, -0.2 + xi];
        for k in 0..4 {
            assert!(
                (s.eigenvalues[k] - expect[k]).abs() < 1e-12,
                "eigenvalue {k}: {} vs {}",
                s.eigenvalues[k],
                expect[k]
            );
        }
    }

    #[test]
    fn eig_random_reconstruction() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let m = random_hermitian(&mut rng);
            let s = hermitian_eig(&m).unwrap();
            assert!(s.reconstruct().max_abs_diff(&m.hermitized()) < 1e-10);
            assert!(s.gram_deviation() < 1e-12);
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let mut m = ComplexMatrix4::identity();
        m[(0, 1)] = c(1.0, 0.0); // m[(1,0)] stays zero
        assert!(matches!(
            hermitian_eig(&m),
            Err(Error::NonHermitianInput { .. })
        ));
    }

    #[test]
    fn gibbs_limits() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = random_hermitian(&mut rng);
        let s = hermitian_eig(&m).unwrap();

        let hot = gibbs_from_spectrum(&s, 1e9).unwrap();
        assert!(hot.max_abs_diff(&ComplexMatrix4::identity().scale(0.25)) < 1e-6);

        let cold = gibbs_from_spectrum(&s, 1e-9).unwrap();
        let v = &s.eigenvectors[0];
        let proj = ComplexMatrix4::from_fn(|i, j| v[i] * v[j].conj());
        assert!(cold.max_abs_diff(&proj) < 1e-9);

        assert!(matches!(
            gibbs_from_spectrum(&s, 0.0),
            Err(Error::NonPositiveTemperature(_))
        ));
    }

    #[test]
    fn gibbs_trace_one_over_wide_temperatures() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let s = hermitian_eig(&random_hermitian(&mut rng)).unwrap();
            for &t in &[1e-6, 1e-3, 0.05, 1.0, 37.0, 1e6] {
                let rho = gibbs_from_spectrum(&s, t).unwrap();
                assert!((rho.trace().re - 1.0).abs() < 1e-13);
                assert!(rho.trace().im.abs() < 1e-13);
            }
        }
    }

    #[test]
    fn entropy_values() {
        let quarter = ComplexMatrix4::identity().scale(0.25);
        assert!((von_neumann_entropy(&quarter).unwrap() - 2.0).abs() < 1e-12);

        let pure = ComplexMatrix4::from_diag([1.0, 0.0, 0.0, 0.0]);
        assert!(von_neumann_entropy(&pure).unwrap().abs() < 1e-12);

        let half = ComplexMatrix4::from_diag([0.5, 0.5, 0.0, 0.0]);
        assert!((von_neumann_entropy(&half).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn entropy_unitary_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            // random density matrix from normalized squared Hermitian
            let h = random_hermitian(&mut rng);
            let sq = h.mul(&h.adjoint());
            let rho = sq.scale(1.0 / sq.trace().re);
            // unitary from the eigenbasis of another random Hermitian
            let u_src = hermitian_eig(&random_hermitian(&mut rng)).unwrap();
            let u = ComplexMatrix4::from_fn(|i, j| u_src.eigenvectors[j][i]);
            let rotated = u.mul(&rho).mul(&u.adjoint());
            let s0 = von_neumann_entropy(&rho).unwrap();
            let s1 = von_neumann_entropy(&rotated).unwrap();
            assert!((s0 - s1).abs() < 1e-10, "{s0} vs {s1}");
        }
    }

    #[test]
    fn entropy_rejects_invalid() {
        let not_normalized = ComplexMatrix4::identity();
        assert!(von_neumann_entropy(&not_normalized).is_err());
    }

    #[test]
    fn partial_trace_cases() {
        let quarter = ComplexMatrix4::identity().scale(0.25);
        let half = ComplexMatrix2::identity().scale(0.5);
        assert!(partial_trace(&quarter, Subsystem::A)
            .unwrap()
            .max_abs_diff(&half)
            < 1e-15);

        // Bell state (|00⟩+|11⟩)/√2
        let mut bell = ComplexMatrix4::zeros();
        for &i in &[0usize, 3] {
            for &j in &[0usize, 3] {
                bell[(i, j)] = c(0.5, 0.0);
            }
        }
        for keep in [Subsystem::A, Subsystem::B] {
            assert!(partial_trace(&bell, keep).unwrap().max_abs_diff(&half) < 1e-15);
        }
    }

    #[test]
    fn cubic_factored() {
        assert_eq!(solve_cubic_real(6.0, 11.0, 6.0).unwrap(), [3.0, 2.0, 1.0]);
    }

    #[test]
    fn cubic_triple_root() {
        assert_eq!(solve_cubic_real(6.0, 12.0, 8.0).unwrap(), [2.0, 2.0, 2.0]);
    }

    #[test]
    fn cubic_complex_detection() {
        // (Λ − 1)(Λ² + 1): roots 1, ±i
        let err = solve_cubic_real(1.0, 1.0, 1.0).unwrap_err();
        assert!(matches!(err, Error::ComplexRootsDetected { imag } if (imag - 1.0).abs() < 1e-9));
    }

    #[test]
    fn cubic_residuals_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..10_000 {
            let r: [f64; 3] = [
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
            ];
            let a1 = r[0] + r[1] + r[2];
            let a2 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
            let a3 = r[0] * r[1] * r[2];
            let roots = solve_cubic_real(a1, a2, a3).unwrap();
            let scale = a1.abs().max(a2.abs()).max(a3.abs()).max(1.0);
            for &x in &roots {
                let res = ((x - a1) * x + a2) * x - a3;
                assert!(res.abs() / scale < 1e-8, "residual {res} at root {x}");
            }
        }
    }

    #[test]
    fn cubic_tiny_roots_keep_relative_accuracy() {
        let r = [1.0, 1e-7, 3e-8];
        let a1 = r[0] + r[1] + r[2];
        let a2 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
        let a3 = r[0] * r[1] * r[2];
        let roots = solve_cubic_real(a1, a2, a3).unwrap();
        assert!((roots[0] - 1.0).abs() < 1e-12);
        assert!((roots[1] - 1e-7).abs() / 1e-7 < 1e-6);
        assert!((roots[2] - 3e-8).abs() / 3e-8 < 1e-6);
    }
}
