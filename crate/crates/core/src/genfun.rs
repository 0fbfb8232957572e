//! Closed forms of the generating functions on the complex plane.
//!
//! `G_+(z) = Σ_{n≥1} ζ_q(n) z^n` is continued to `ℂ ∖ Ω⁺` and
//! `G_-(z) = Σ_{n≥0} ζ_q(-n) z^n` to `ℂ ∖ Ω⁻`, where `Ω⁺ = [(√q-1)², (√q+1)²]`
//! is the spectrum of the Laplacian and `Ω⁻` its image under `z ↦ 1/z`.
//!
//! The radicals are products of two principal square roots, so the only cut
//! is the spectral segment itself. Each closed form is evaluated after
//! rationalising the numerator: the textbook quotients are `0/0` at
//! `z = 1/(2(q+1))` for `G_-`, at `z = 2(q+1)` for `G_+` and at
//! `z = ±1/(q+1)` for `F`, while the rationalised quotients have
//! denominators that never vanish off the cut.

use num_complex::Complex64;

use crate::algebra::{IntPoly, PolySeries, RatPoly};
use crate::{Error, Result};

/// Width of the exclusion zone around the spectral cuts.
pub const EPS_CUT: f64 = 1e-3;

/// The spectral segment `Ω⁺ = [r₋, r₊]` for a given `q ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumCut {
    q: u64,
    r_minus: f64,
    r_plus: f64,
}

impl SpectrumCut {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::domain(alloc::format!("q must be at least 2, got {q}")));
        }
        let qf = q as f64;
        let r_plus = qf + 1.0 + 2.0 * libm::sqrt(qf);
        // (√q-1)² without the cancellation in q+1-2√q
        let r_minus = (qf - 1.0) * (qf - 1.0) / r_plus;
        Ok(Self { q, r_minus, r_plus })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn r_minus(&self) -> f64 {
        self.r_minus
    }

    pub fn r_plus(&self) -> f64 {
        self.r_plus
    }

    /// Euclidean distance from `z` to the segment `[r₋, r₊]`.
    pub fn distance(&self, z: Complex64) -> f64 {
        let x = z.re.clamp(self.r_minus, self.r_plus);
        libm::hypot(z.re - x, z.im)
    }

    /// Cut violation error if `z` lies within `eps` of the segment.
    pub fn check(&self, z: Complex64, eps: f64) -> Result<()> {
        if self.distance(z) < eps {
            return Err(Error::CutViolation {
                re: z.re,
                im: z.im,
                eps,
            });
        }
        Ok(())
    }

    /// Same check for the inverted segment `Ω⁻`, expressed through `1/z`.
    pub fn check_inverted(&self, z: Complex64, eps: f64) -> Result<()> {
        if z == Complex64::new(0.0, 0.0) {
            return Ok(());
        }
        self.check(z.inv(), eps).map_err(|_| Error::CutViolation {
            re: z.re,
            im: z.im,
            eps,
        })
    }
}

fn finite(z: Complex64) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite)
    }
}

/// Branch of `√((z - r₋)(z - r₊))` analytic off `Ω⁺` with value `q - 1` at 0.
///
/// On the real axis it is positive left of the cut and negative right of it
/// (it behaves like `-z` at infinity).
pub fn cut_sqrt(q: u64, z: Complex64) -> Result<Complex64> {
    let cut = SpectrumCut::new(q)?;
    cut.check(z, EPS_CUT)?;
    Ok(cut_sqrt_unchecked(&cut, z))
}

fn cut_sqrt_unchecked(cut: &SpectrumCut, z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    (cut.q as f64 - 1.0) * (one - z / cut.r_minus).sqrt() * (one - z / cut.r_plus).sqrt()
}

/// `√(1 - 2(q+1)z + (q-1)²z²) = √(1 - r₋z)·√(1 - r₊z)`, analytic off `Ω⁻`,
/// equal to 1 at the origin.
fn inverted_radical(cut: &SpectrumCut, z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    (one - cut.r_minus * z).sqrt() * (one - cut.r_plus * z).sqrt()
}

/// Kesten's return generating function
/// `F(z) = Σ c_q(n) z^n = ((q+1)√(1-4qz²) - (q-1)) / (2(1-(q+1)²z²))`.
///
/// The cut of `√(1-4qz²)` is the real half-lines `|z| ≥ 1/(2√q)`.
pub fn eval_f(q: u64, z: Complex64) -> Result<Complex64> {
    if q < 1 {
        return Err(Error::domain("q must be at least 1"));
    }
    let qf = q as f64;
    let edge = 0.5 / libm::sqrt(qf);
    let gap = libm::hypot((z.re.abs() - edge).min(0.0), z.im);
    if gap < EPS_CUT {
        return Err(Error::CutViolation {
            re: z.re,
            im: z.im,
            eps: EPS_CUT,
        });
    }
    let root = (Complex64::new(1.0, 0.0) - 4.0 * qf * z * z).sqrt();
    finite(2.0 * qf / ((qf + 1.0) * root + (qf - 1.0)))
}

/// `G_-(z) = ((q+1)R + z(q²-1) - (q-1)) / (2(1 - 2(q+1)z))` with
/// `R = √(1 - 2(q+1)z + (q-1)²z²)`, evaluated as
/// `2q / ((q+1)R - (q-1)((q+1)z - 1))`.
pub fn eval_g_minus(q: u64, z: Complex64) -> Result<Complex64> {
    let cut = SpectrumCut::new(q)?;
    cut.check_inverted(z, EPS_CUT)?;
    let qf = q as f64;
    let r = inverted_radical(&cut, z);
    finite(2.0 * qf / ((qf + 1.0) * r - (qf - 1.0) * ((qf + 1.0) * z - 1.0)))
}

/// `G_+(z) = ((q+1)W + z(q-1) - (q²-1)) / (2(z - 2(q+1)))` with
/// `W = cut_sqrt(q, z)`, evaluated as `2qz / ((q+1)W - (q-1)(z - q - 1))`.
pub fn eval_g_plus(q: u64, z: Complex64) -> Result<Complex64> {
    let cut = SpectrumCut::new(q)?;
    cut.check(z, EPS_CUT)?;
    let qf = q as f64;
    let w = cut_sqrt_unchecked(&cut, z);
    finite(2.0 * qf * z / ((qf + 1.0) * w - (qf - 1.0) * (z - qf - 1.0)))
}

/// `G_+(z) + G_-(1/z)`, which vanishes off the spectrum.
pub fn symmetry_defect(q: u64, z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::domain("symmetry defect is undefined at z = 0"));
    }
    Ok(eval_g_plus(q, z)? + eval_g_minus(q, z.inv())?)
}

/// `ℰ(z) = G_-(z/(q-1))(1 - 2kz) + G_+((q-1)z)(2k - z)` with `k = (q+1)/(q-1)`.
/// Its closed form is `z + 1`.
///
/// Both constituents are cut along `[β, 1/β]`, `β = (√q-1)/(√q+1)`, but `ℰ`
/// itself is entire. Points within [`EPS_CUT`] of that segment are evaluated
/// as the mean of `ℰ` over a circle around `z` that encloses the segment.
pub fn eval_script_e(q: u64, z: Complex64) -> Result<Complex64> {
    let cut = SpectrumCut::new(q)?;
    let qm1 = q as f64 - 1.0;
    let beta = cut.r_minus() / qm1;
    let inv_beta = cut.r_plus() / qm1;
    let gap = libm::hypot(z.re - z.re.clamp(beta, inv_beta), z.im);
    if gap >= EPS_CUT {
        return script_e_direct(q, z);
    }
    // every node stays at distance >= 1 from the segment
    let radius = (z.re - beta).abs().max((z.re - inv_beta).abs()) + z.im.abs() + 1.0;
    const NODES: usize = 256;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..NODES {
        let phase = core::f64::consts::TAU * (j as f64 + 0.5) / NODES as f64;
        acc += script_e_direct(q, z + Complex64::from_polar(radius, phase))?;
    }
    finite(acc / NODES as f64)
}

fn script_e_direct(q: u64, z: Complex64) -> Result<Complex64> {
    let qm1 = q as f64 - 1.0;
    let k = (q as f64 + 1.0) / qm1;
    let minus = eval_g_minus(q, z / qm1)?;
    let plus = eval_g_plus(q, z * qm1)?;
    finite(minus * (1.0 - 2.0 * k * z) + plus * (2.0 * k - z))
}

/// Residual of `(2(q+1) - z)G² + (q-1)(z - (q+1))G + zq = 0` at `G = G_+(z)`.
pub fn g_plus_quadratic_residual(q: u64, z: Complex64) -> Result<Complex64> {
    let g = eval_g_plus(q, z)?;
    let qf = q as f64;
    Ok((2.0 * (qf + 1.0) - z) * g * g + (qf - 1.0) * (z - (qf + 1.0)) * g + z * qf)
}

/// Substitutes `T(z) = Σ_{n≥1} P_n z^{n-1}` built from the recursion into
/// `qz(2 - z(q-1)²)T² + (z(q-1)² - 1)T + 1` and returns the truncated
/// result, which is the zero series of order `n_max` when the recursion and
/// the quadratic agree.
pub fn t_series_residual(n_max: usize) -> PolySeries<RatPoly> {
    t_series_residual_of(&crate::special_values::p_polynomials(n_max))
}

/// As [`t_series_residual`], for caller-supplied `P_1, P_2, …` (so a
/// corrupted table can be checked too). The order equals `p.len()`.
pub fn t_series_residual_of(p: &[IntPoly]) -> PolySeries<RatPoly> {
    let order = p.len();
    let t = PolySeries::new(order, p.iter().map(IntPoly::to_rat_poly).collect());
    let q = RatPoly::from_i64s(&[0, 1]);
    let sq = RatPoly::from_i64s(&[1, -2, 1]);
    // qz(2 - z(q-1)²)
    let quad = PolySeries::new(order, alloc::vec![RatPoly::zero(), q.scale(&crate::algebra::rat(2, 1)), -&(&q * &sq)]);
    let lin = PolySeries::new(order, alloc::vec![RatPoly::from_i64s(&[-1]), sq]);
    let t2 = &t * &t;
    &(&(&quad * &t2) + &(&lin * &t)) + &PolySeries::one(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_values::{a_sequence, moments_series, zeta_neg_table, NegMethod};
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Textbook quotient for G_+, used away from its removable point.
    fn g_plus_direct(q: u64, z: Complex64) -> Complex64 {
        let qf = q as f64;
        let w = cut_sqrt(q, z).unwrap();
        0.5 * ((qf + 1.0) * w + z * (qf - 1.0) - (qf * qf - 1.0)) / (z - 2.0 * (qf + 1.0))
    }

    fn g_minus_direct(q: u64, z: Complex64) -> Complex64 {
        let qf = q as f64;
        let cut = SpectrumCut::new(q).unwrap();
        let r = inverted_radical(&cut, z);
        0.5 * ((qf + 1.0) * r + z * (qf * qf - 1.0) - (qf - 1.0)) / (1.0 - 2.0 * (qf + 1.0) * z)
    }

    fn poly_series_sum(coeffs: &[IntPoly], q: u64, z: Complex64) -> Complex64 {
        let mut acc = c(0.0, 0.0);
        let mut zn = c(1.0, 0.0);
        for p in coeffs {
            acc += zn * p.eval_f64(q as f64);
            zn *= z;
        }
        acc
    }

    #[test]
    fn cut_geometry() {
        let cut = SpectrumCut::new(2).unwrap();
        assert!(cut.r_minus() > 0.0 && cut.r_minus() < cut.r_plus());
        assert!((cut.r_minus() * cut.r_plus() - 1.0).abs() < 1e-14);
        assert!(SpectrumCut::new(1).is_err());
        assert!(cut.check(c(1.0, 0.0), EPS_CUT).is_err());
        assert!(cut.check(c(1.0, 2e-3), EPS_CUT).is_ok());
    }

    #[test]
    fn cut_sqrt_branch() {
        assert_eq!(cut_sqrt(2, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        assert_eq!(cut_sqrt(5, c(0.0, 0.0)).unwrap(), c(4.0, 0.0));
        let cut = SpectrumCut::new(2).unwrap();
        let (rm, rp) = (cut.r_minus(), cut.r_plus());
        let left = cut_sqrt(2, c(-1.0, 0.0)).unwrap();
        assert!((left.re - ((1.0 + rm) * (1.0 + rp)).sqrt()).abs() < 1e-14 && left.im == 0.0);
        // right of the cut the branch is negative, continuous from both half-planes
        let expected = -((10.0 - rm) * (10.0 - rp)).sqrt();
        for im in [0.0, 1e-9, -1e-9] {
            let w = cut_sqrt(2, c(10.0, im)).unwrap();
            assert!((w.re - expected).abs() < 1e-8 && w.im.abs() < 1e-8, "{w}");
        }
        assert!(cut_sqrt(2, c(3.0, 0.0)).is_err());
    }

    #[test]
    fn cut_sqrt_squares_back() {
        for q in [2, 3, 5] {
            let cut = SpectrumCut::new(q).unwrap();
            for z in [c(-3.0, 0.5), c(2.0, 1.0), c(20.0, -4.0), c(0.1, 0.0), c(1.0, -0.01)] {
                let w = cut_sqrt(q, z).unwrap();
                let target = (z - cut.r_minus()) * (z - cut.r_plus());
                assert!((w * w - target).norm() <= 1e-13 * target.norm(), "q={q} z={z}");
            }
        }
    }

    #[test]
    fn f_matches_moment_series() {
        let moments = moments_series(60).unwrap();
        for z in [c(0.1, 0.0), c(0.0, 0.2), c(-0.15, 0.05)] {
            let got = eval_f(2, z).unwrap();
            let want = poly_series_sum(&moments, 2, z);
            assert!((got - want).norm() < 1e-12, "z={z}: {got} vs {want}");
        }
        assert_eq!(eval_f(3, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        assert!(eval_f(2, c(0.5, 0.0)).is_err());
        // the apparent pole at 1/(q+1) is removable
        assert!(eval_f(2, c(1.0 / 3.0, 0.0)).unwrap().re.is_finite());
    }

    #[test]
    fn g_minus_matches_negative_values() {
        let neg = zeta_neg_table(80, NegMethod::Cjks).unwrap();
        assert_eq!(eval_g_minus(2, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        for (q, z) in [(2, c(0.05, 0.0)), (3, c(0.03, 0.02))] {
            let got = eval_g_minus(q, z).unwrap();
            let want = poly_series_sum(&neg, q, z);
            assert!((got - want).norm() < 1e-12, "q={q}: {got} vs {want}");
        }
    }

    #[test]
    fn g_plus_matches_positive_values() {
        // inside the disc of convergence |z| < r₋ ≈ 0.1716
        let a = a_sequence(&BigInt::from(2), 120).unwrap();
        let z = c(0.1, 0.0);
        let mut want = 0.0;
        let mut zn = 1.0;
        for an in a.iter().skip(1) {
            zn *= 0.1;
            want += an.to_f64().unwrap() * zn;
        }
        assert!((eval_g_plus(2, z).unwrap().re - want).abs() < 1e-12);
        assert!(eval_g_plus(2, c(0.5, 0.0)).is_err());
        assert_eq!(eval_g_plus(2, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn rationalised_forms_agree_with_textbook_quotients() {
        for q in [2, 3, 5] {
            for z in [c(-4.0, 0.0), c(0.3, 0.7), c(12.0, -3.0), c(-0.5, -2.0)] {
                let g = eval_g_plus(q, z).unwrap();
                assert!((g - g_plus_direct(q, z)).norm() < 1e-12);
                let h = eval_g_minus(q, z).unwrap();
                assert!((h - g_minus_direct(q, z)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn removable_points_are_regular() {
        for q in [2u64, 3, 7] {
            let qf = q as f64;
            let z0 = 1.0 / (2.0 * (qf + 1.0));
            let at = eval_g_minus(q, c(z0, 0.0)).unwrap();
            let near = g_minus_direct(q, c(z0 + 1e-8, 1e-8));
            assert!((at - near).norm() < 1e-4, "q={q}: {at} vs {near}");
            let w0 = 2.0 * (qf + 1.0);
            let at = eval_g_plus(q, c(w0, 0.0)).unwrap();
            let near = g_plus_direct(q, c(w0 + 1e-8, 1e-8));
            assert!((at - near).norm() < 1e-4, "q={q}: {at} vs {near}");
        }
    }

    #[test]
    fn quadratic_residual_is_small() {
        for q in [2, 3, 5] {
            for z in [c(-4.0, 0.0), c(0.1, 0.0), c(7.0, 5.0), c(-1.0, 30.0), c(40.0, 0.0)] {
                let res = g_plus_quadratic_residual(q, z).unwrap();
                assert!(res.norm() <= 1e-10 * (1.0 + z.norm()).powi(3), "q={q} z={z}");
            }
        }
    }

    #[test]
    fn symmetry_examples() {
        for (q, z) in [(2, c(-1.0, 0.0)), (3, c(0.4, 0.0)), (2, c(7.0, 5.0))] {
            assert!(symmetry_defect(q, z).unwrap().norm() < 1e-12, "q={q} z={z}");
        }
        assert!(symmetry_defect(2, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn script_e_examples() {
        assert_eq!(eval_script_e(2, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        assert!((eval_script_e(2, c(0.3, 0.0)).unwrap() - c(1.3, 0.0)).norm() < 1e-12);
        assert!((eval_script_e(4, c(-2.0, 1.0)).unwrap() - c(-1.0, 1.0)).norm() < 1e-11);
        // on the cut of the constituents, through the contour mean
        assert!((eval_script_e(2, c(1.0, 0.0)).unwrap() - c(2.0, 0.0)).norm() < 1e-12);
        assert!(script_e_direct(2, c(0.3, 0.0)).is_err());
    }

    #[test]
    fn g_minus_transfer_from_f() {
        for q in [2u64, 3] {
            let qf = q as f64;
            for z in [c(0.01, 0.02), c(-0.3, 0.1), c(-1.0, -0.5)] {
                let lhs = eval_g_minus(q, z).unwrap();
                let rhs = eval_f(q, z / ((qf + 1.0) * z - 1.0)).unwrap() / (1.0 - (qf + 1.0) * z);
                assert!((lhs - rhs).norm() < 1e-11, "q={q} z={z}");
            }
        }
    }

    #[test]
    fn conjugate_symmetry() {
        for z in [c(0.3, 0.7), c(-2.0, 1.5), c(9.0, 0.2)] {
            let zc = z.conj();
            assert_eq!(eval_g_plus(3, zc).unwrap(), eval_g_plus(3, z).unwrap().conj());
            assert_eq!(eval_g_minus(3, zc).unwrap(), eval_g_minus(3, z).unwrap().conj());
        }
    }

    #[test]
    fn g_minus_radical_is_reflected_cut_sqrt() {
        let cut = SpectrumCut::new(3).unwrap();
        for z in [c(0.02, 0.0), c(0.3, 0.4), c(-2.0, 0.1)] {
            let r = inverted_radical(&cut, z);
            let via = -z * cut_sqrt(3, z.inv()).unwrap();
            assert!((r - via).norm() < 1e-13, "{r} vs {via}");
        }
    }

    #[test]
    fn t_residual() {
        assert!(t_series_residual(2).is_zero());
        assert!(t_series_residual(10).is_zero());
        let mut p = crate::special_values::p_polynomials(6);
        p[1] = IntPoly::from_i64s(&[1, 1, 1]);
        let res = t_series_residual_of(&p);
        assert_eq!(res.valuation(), Some(1));
    }
}
