//! Numeric evaluation of the tree zeta function at complex arguments.
//!
//! For `q ≥ 2` everything is an integral against the Kesten–McKay measure,
//! written in the angle variable `λ = q + 1 − 2√q·cos θ`:
//!
//! `ζ_q(s) = (2/π)·q(q+1)·∫₀^π λ(θ)^{-s}·sin²θ / ((q+1)² − 4q·cos²θ) dθ`.
//!
//! The integrand is smooth on `[0, π]` and `λ(θ) > 0`, so `λ^{-s}` uses the
//! real logarithm. The line (`q = 1`) and the semicircle limit (`q = ∞`) are
//! served by closed Gamma-function formulas.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::{gamma, rgamma};
use crate::genfun::{SpectrumCut, EPS_CUT};
use crate::quadrature::{graded_toward_start, integrate, level_history, QuadResult, QuadratureSpec};

/// Which tree a zeta value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeKind {
    /// The `(q+1)`-regular tree, `q ≥ 2`.
    Regular(u64),
    /// The discrete line, `q = 1`.
    Line,
    /// The semicircle law, `q → ∞`.
    SatoTate,
}

/// A numeric zeta value with its quadrature diagnostics. Closed-form routes
/// report `est_error = 0` and `nodes_used = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaEval {
    pub kind: TreeKind,
    pub s: Complex64,
    pub value: Complex64,
    pub est_error: f64,
    pub nodes_used: usize,
    pub converged: bool,
}

impl ZetaEval {
    fn from_quad(kind: TreeKind, s: Complex64, r: QuadResult) -> Self {
        ZetaEval {
            kind,
            s,
            value: r.value,
            est_error: r.est_error,
            nodes_used: r.nodes_used,
            converged: r.converged,
        }
    }

    fn exact(kind: TreeKind, s: Complex64, value: Complex64) -> Self {
        ZetaEval {
            kind,
            s,
            value,
            est_error: 0.0,
            nodes_used: 0,
            converged: true,
        }
    }

    /// The value, or a non-convergence error.
    pub fn converged_value(&self) -> Result<Complex64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::NonConverged {
                re: self.s.re,
                im: self.s.im,
                est_error: self.est_error,
            })
        }
    }
}

/// The measure in the angle variable: `λ(θ)` and the density weight.
#[derive(Clone, Copy, Debug)]
struct AngleMeasure {
    q: f64,
    two_sqrt_q: f64,
    scale: f64,
}

impl AngleMeasure {
    fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::domain(alloc::format!(
                "the angle integral needs q >= 2, got {q}; use the line formula for q = 1"
            )));
        }
        let qf = q as f64;
        Ok(AngleMeasure {
            q: qf,
            two_sqrt_q: 2.0 * libm::sqrt(qf),
            scale: 2.0 / PI * qf * (qf + 1.0),
        })
    }

    /// `(λ(θ), w(θ))` with `∫₀^π w dθ = 1`.
    fn at(&self, theta: f64) -> (f64, f64) {
        let (s, c) = (libm::sin(theta), libm::cos(theta));
        let q1 = self.q + 1.0;
        let lambda = q1 - self.two_sqrt_q * c;
        let weight = self.scale * s * s / (q1 * q1 - 4.0 * self.q * c * c);
        (lambda, weight)
    }
}

/// `λ^{-s}` for `λ > 0`.
fn real_power(lambda: f64, s: Complex64) -> Complex64 {
    (-s * libm::log(lambda)).exp()
}

fn check_s(s: Complex64) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

/// `ζ_q(s)` by quadrature in the angle variable.
pub fn zeta_numeric(q: u64, s: Complex64, spec: &QuadratureSpec) -> Result<ZetaEval> {
    check_s(s)?;
    let m = AngleMeasure::new(q)?;
    let r = integrate(
        |t| {
            let (lambda, w) = m.at(t);
            real_power(lambda, s) * w
        },
        &[0.0, PI],
        spec,
    )?;
    Ok(ZetaEval::from_quad(TreeKind::Regular(q), s, r))
}

/// Successive quadrature levels for `ζ_q(s)`, for convergence diagnostics.
pub fn zeta_level_history(q: u64, s: Complex64, levels: usize) -> Result<alloc::vec::Vec<Complex64>> {
    check_s(s)?;
    let m = AngleMeasure::new(q)?;
    level_history(
        |t| {
            let (lambda, w) = m.at(t);
            real_power(lambda, s) * w
        },
        &[0.0, PI],
        levels,
    )
}

/// `(q+1)^{s−1}·ζ_q(s)` computed independently from the normalized
/// Laplacian: `(1/2π)∫₀^π (1 − ρ cos φ)^{-s} ρ² sin²φ / (1 − ρ² cos²φ) dφ`
/// with `ρ = 2√q/(q+1)`.
pub fn zeta_normalized_numeric(q: u64, s: Complex64, spec: &QuadratureSpec) -> Result<ZetaEval> {
    check_s(s)?;
    if q < 2 {
        return Err(Error::domain(alloc::format!("q must be at least 2, got {q}")));
    }
    let qf = q as f64;
    let rho = 2.0 * libm::sqrt(qf) / (qf + 1.0);
    let r = integrate(
        |phi| {
            let (sn, c) = (libm::sin(phi), libm::cos(phi));
            let w = rho * rho * sn * sn / (1.0 - rho * rho * c * c) / (2.0 * PI);
            real_power(1.0 - rho * c, s) * w
        },
        &[0.0, PI],
        spec,
    )?;
    Ok(ZetaEval::from_quad(TreeKind::Regular(q), s, r))
}

/// `ξ_q(s) = (q−1)^s·(2(q+1)ζ_q(s) − ζ_q(s−1))`.
///
/// The bracket is integrated as one integral with the positive factor
/// `2(q+1) − λ = q + 1 + 2√q cos θ`, so nothing cancels between two
/// separately rounded zeta values.
pub fn xi(q: u64, s: Complex64, spec: &QuadratureSpec) -> Result<ZetaEval> {
    check_s(s)?;
    let m = AngleMeasure::new(q)?;
    let two_q1 = 2.0 * (q as f64 + 1.0);
    let r = integrate(
        |t| {
            let (lambda, w) = m.at(t);
            real_power(lambda, s) * ((two_q1 - lambda) * w)
        },
        &[0.0, PI],
        spec,
    )?;
    let prefactor = (s * libm::log(q as f64 - 1.0)).exp();
    let value = prefactor * r.value;
    Ok(ZetaEval {
        kind: TreeKind::Regular(q),
        s,
        value,
        est_error: prefactor.norm() * r.est_error,
        nodes_used: r.nodes_used,
        converged: r.converged,
    })
}

/// `ξ_q(1−s) − ξ_q(s)`.
pub fn xi_defect(q: u64, s: Complex64, spec: &QuadratureSpec) -> Result<Complex64> {
    let a = xi(q, 1.0 - s, spec)?.converged_value()?;
    let b = xi(q, s, spec)?.converged_value()?;
    Ok(a - b)
}

/// Heat trace `K_q(t) = ∫ e^{-tλ} dμ`.
pub fn heat_trace(q: u64, t: f64, spec: &QuadratureSpec) -> Result<ZetaEval> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::domain(alloc::format!("t must be finite and nonnegative, got {t}")));
    }
    let m = AngleMeasure::new(q)?;
    let r = integrate(
        |th| {
            let (lambda, w) = m.at(th);
            Complex64::new(libm::exp(-t * lambda) * w, 0.0)
        },
        &[0.0, PI],
        spec,
    )?;
    Ok(ZetaEval::from_quad(TreeKind::Regular(q), Complex64::new(t, 0.0), r))
}

/// Laplace transform of the heat trace at `−z`: `∫ (λ − z)^{-1} dμ`.
///
/// `z` must stay [`EPS_CUT`] away from the spectrum.
pub fn resolvent_transform(q: u64, z: Complex64, spec: &QuadratureSpec) -> Result<ZetaEval> {
    check_s(z)?;
    SpectrumCut::new(q)?.check(z, EPS_CUT)?;
    let m = AngleMeasure::new(q)?;
    let r = integrate(
        |th| {
            let (lambda, w) = m.at(th);
            (lambda - z).inv() * w
        },
        &[0.0, PI],
        spec,
    )?;
    Ok(ZetaEval::from_quad(TreeKind::Regular(q), z, r))
}

/// Reports a Gamma pole at the zeta argument rather than the Gamma argument.
fn pole_at(e: Error, s: Complex64) -> Error {
    match e {
        Error::Pole { .. } => Error::Pole { re: s.re, im: s.im },
        other => other,
    }
}

/// `ζ_ℤ(s) = Γ(1/2 − s) / (4^s √π Γ(1 − s))`. Poles at `s = 1/2, 3/2, ...`,
/// zeros at `s = 1, 2, ...`.
pub fn zeta_line(s: Complex64) -> Result<ZetaEval> {
    check_s(s)?;
    let num = gamma(0.5 - s).map_err(|e| pole_at(e, s))?;
    let value = num * rgamma(1.0 - s)? / ((s * libm::log(4.0)).exp() * libm::sqrt(PI));
    Ok(ZetaEval::exact(TreeKind::Line, s, value))
}

/// `ζ_∞(s) = ζ_ℤ(s−1)/(2−s)`, written as
/// `Γ(3/2 − s) / (4^{s−1} √π Γ(3 − s))` so that `s = 2` needs no limit.
/// Poles at `s = 3/2, 5/2, ...`.
pub fn zeta_sato_tate(s: Complex64) -> Result<ZetaEval> {
    check_s(s)?;
    let num = gamma(1.5 - s).map_err(|e| pole_at(e, s))?;
    let value =
        num * rgamma(3.0 - s)? / (((s - 1.0) * libm::log(4.0)).exp() * libm::sqrt(PI));
    Ok(ZetaEval::exact(TreeKind::SatoTate, s, value))
}

/// Depth of the geometric mesh toward the singular endpoint.
const SATO_TATE_GRADING: u32 = 100;

/// `ζ_∞(s)` by direct quadrature of the semicircle law, valid for
/// `Re s < 3/2`. With `u = 2cos φ`:
/// `ζ_∞(s) = (2/π)∫₀^π (4 sin²(φ/2))^{-s} sin²φ dφ`,
/// whose integrand behaves like `φ^{2−2s}` at `φ = 0`.
pub fn zeta_sato_tate_quadrature(s: Complex64, spec: &QuadratureSpec) -> Result<ZetaEval> {
    check_s(s)?;
    if s.re >= 1.5 {
        return Err(Error::domain(alloc::format!(
            "the semicircle integral diverges for Re s >= 3/2, got {s}"
        )));
    }
    let pts = graded_toward_start(0.0, PI, SATO_TATE_GRADING);
    let r = integrate(
        |phi| {
            let half = libm::sin(0.5 * phi);
            let sn = libm::sin(phi);
            real_power(4.0 * half * half, s) * (2.0 / PI * sn * sn)
        },
        &pts,
        spec,
    )?;
    Ok(ZetaEval::from_quad(TreeKind::SatoTate, s, r))
}

/// Distance below which `ξ_∞` switches to its pole-free form.
const ODD_POINT_GUARD: f64 = 1e-3;

/// `ξ_∞(s) = (2 − s)·2^s·cos(πs/2)·ζ_∞(1 + s/2)`.
///
/// At `s = 1, 3, 5, ...` the cosine zero meets a pole of `ζ_∞`; near those
/// points the reflection-simplified form
/// `(2 − s)·√π / (Γ((1+s)/2)·Γ(2 − s/2))` is used instead.
pub fn xi_sato_tate(s: Complex64) -> Result<Complex64> {
    check_s(s)?;
    let nearest_odd = 2.0 * libm::round(0.5 * (s.re - 1.0)) + 1.0;
    let near_odd = nearest_odd >= 1.0
        && libm::hypot(s.re - nearest_odd, s.im) < ODD_POINT_GUARD;
    if near_odd {
        return xi_sato_tate_entire(s);
    }
    let zeta = zeta_sato_tate(1.0 + 0.5 * s)?.value;
    let two_s = (s * core::f64::consts::LN_2).exp();
    Ok((2.0 - s) * two_s * crate::gamma::cospi(0.5 * s) * zeta)
}

/// The pole-free form of `ξ_∞`.
pub fn xi_sato_tate_entire(s: Complex64) -> Result<Complex64> {
    check_s(s)?;
    Ok((2.0 - s) * libm::sqrt(PI) * rgamma(0.5 * (1.0 + s))? * rgamma(2.0 - 0.5 * s)?)
}

/// `ξ_∞(1−s) − ξ_∞(s)`.
pub fn xi_sato_tate_defect(s: Complex64) -> Result<Complex64> {
    Ok(xi_sato_tate(1.0 - s)? - xi_sato_tate(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{eval_g_minus, eval_g_plus};
    use crate::special_values::{zeta_neg, zeta_pos, NegMethod};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, ToPrimitive, Zero};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    fn exact_at(q: u64, k: i64) -> f64 {
        let qb = BigInt::from(q);
        if k > 0 {
            zeta_pos(&qb, k as usize).unwrap().to_f64().unwrap()
        } else {
            let p = zeta_neg((-k) as usize, NegMethod::Cjks).unwrap();
            p.eval_int(&qb).to_f64().unwrap()
        }
    }

    #[test]
    fn integer_points() {
        let z = zeta_numeric(2, c(1.0, 0.0), &spec()).unwrap();
        assert!(z.converged);
        assert!((z.value.re - 2.0 / 3.0).abs() < 1e-11 * 2.0 / 3.0);
        assert!(z.value.im == 0.0);
        let z = zeta_numeric(2, c(0.0, 0.0), &spec()).unwrap();
        assert!((z.value.re - 1.0).abs() < 1e-12);
        let z = zeta_numeric(3, c(-2.0, 0.0), &spec()).unwrap();
        assert!((z.value.re - 20.0).abs() < 1e-10 * 20.0);
        for q in [2, 5] {
            for k in [-8i64, -3, 4, 8] {
                let want = exact_at(q, k);
                let got = zeta_numeric(q, c(k as f64, 0.0), &spec()).unwrap().value.re;
                assert!(((got - want) / want).abs() < 1e-10, "q={q} k={k}");
            }
        }
    }

    #[test]
    fn conjugate_symmetry() {
        for s in [c(0.3, 2.0), c(-3.0, -1.5), c(4.0, 0.7)] {
            let a = zeta_numeric(3, s, &spec()).unwrap().value;
            let b = zeta_numeric(3, s.conj(), &spec()).unwrap().value;
            assert!((a.conj() - b).norm() <= 1e-14 * a.norm());
        }
    }

    #[test]
    fn error_estimate_within_budget() {
        let sp = spec();
        for s in [c(2.5, 3.0), c(-4.0, 1.0)] {
            let z = zeta_numeric(4, s, &sp).unwrap();
            assert!(z.converged);
            assert!(z.est_error <= sp.budget(z.value.norm()));
            assert!(z.nodes_used.is_power_of_two());
        }
    }

    #[test]
    fn rejects_q_one() {
        assert!(zeta_numeric(1, c(0.0, 0.0), &spec()).is_err());
        assert!(zeta_numeric(2, c(f64::NAN, 0.0), &spec()).is_err());
    }

    #[test]
    fn normalized_form_agrees() {
        for (q, s) in [(2u64, c(0.0, 0.0)), (3, c(1.5, -2.0)), (5, c(-2.0, 0.5))] {
            let lhs = zeta_numeric(q, s, &spec()).unwrap().value
                * ((s - 1.0) * libm::log(q as f64 + 1.0)).exp();
            let rhs = zeta_normalized_numeric(q, s, &spec()).unwrap().value;
            assert!((lhs - rhs).norm() < 1e-10, "q={q} s={s}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn completed_function_matches_definition() {
        let q = 3;
        let s = c(0.7, 1.2);
        let z0 = zeta_numeric(q, s, &spec()).unwrap().value;
        let z1 = zeta_numeric(q, s - 1.0, &spec()).unwrap().value;
        let want = (s * libm::log(2.0)).exp() * (8.0 * z0 - z1);
        let got = xi(q, s, &spec()).unwrap().value;
        assert!((got - want).norm() < 1e-11 * want.norm());
    }

    #[test]
    fn functional_equation_examples() {
        assert_eq!(xi_defect(2, c(0.5, 0.0), &spec()).unwrap(), c(0.0, 0.0));
        for (q, s) in [(2u64, c(3.0, 0.0)), (5, c(2.0, 3.0))] {
            let d = xi_defect(q, s, &spec()).unwrap();
            let scale = xi(q, s, &spec()).unwrap().value.norm().max(
                xi(q, 1.0 - s, &spec()).unwrap().value.norm(),
            );
            assert!(d.norm() <= 1e-9 * scale.max(1.0), "q={q} s={s}: {d}");
        }
    }

    #[test]
    fn heat_trace_values() {
        let k0 = heat_trace(2, 0.0, &spec()).unwrap().value.re;
        assert!((k0 - 1.0).abs() < 1e-12);
        let h = 1e-4;
        let k1 = heat_trace(2, h, &spec()).unwrap().value.re;
        let k2 = heat_trace(2, 2.0 * h, &spec()).unwrap().value.re;
        let slope = (-3.0 * k0 + 4.0 * k1 - k2) / (2.0 * h);
        assert!((slope + 3.0).abs() < 1e-6, "{slope}");

        // Taylor series of the diagonal of e^{-tΔ}, summed exactly
        let q = BigInt::from(3);
        let mut sum = BigRational::zero();
        let mut fact = BigRational::one();
        for m in 0..80usize {
            if m > 0 {
                fact *= BigRational::from_integer(BigInt::from(m));
            }
            let v = BigRational::from_integer(zeta_neg(m, NegMethod::Cjks).unwrap().eval_int(&q));
            let term = v / &fact;
            if m % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let got = heat_trace(3, 1.0, &spec()).unwrap().value.re;
        assert!((got - sum.to_f64().unwrap()).abs() < 1e-13);
    }

    #[test]
    fn heat_trace_decays() {
        for q in [2u64, 3, 5] {
            let mut last = f64::INFINITY;
            for t in [0.0, 0.5, 1.0, 2.0, 5.0, 10.0] {
                let k = heat_trace(q, t, &spec()).unwrap().value.re;
                assert!(k > 0.0 && k < last);
                last = k;
            }
            let gap = (libm::sqrt(q as f64) - 1.0).powi(2);
            for t in [5.0, 10.0] {
                let k = heat_trace(q, t, &spec()).unwrap().value.re;
                assert!(k <= 2.0 * libm::exp(-t * gap));
            }
        }
    }

    #[test]
    fn resolvent_identities() {
        // z inside the disc |z| < r₋, where G_+ is its power series
        let z = c(0.1, 0.0);
        let r = resolvent_transform(2, z, &spec()).unwrap().value;
        assert!((z * r - eval_g_plus(2, z).unwrap()).norm() < 1e-10);
        let z = c(100.0, 0.0);
        let r = resolvent_transform(2, z, &spec()).unwrap().value;
        let want = eval_g_minus(2, z.inv()).unwrap() / z;
        assert!((-r - want).norm() < 1e-10);
        let r = resolvent_transform(3, c(0.0, 0.0), &spec()).unwrap().value;
        assert!((r.re - 0.375).abs() < 1e-11 * 0.375);
        assert!(resolvent_transform(2, c(0.5, 0.0), &spec()).is_err());
    }

    #[test]
    fn line_values() {
        assert!((zeta_line(c(-1.0, 0.0)).unwrap().value - c(2.0, 0.0)).norm() < 1e-13);
        assert!((zeta_line(c(0.0, 0.0)).unwrap().value - c(1.0, 0.0)).norm() < 1e-14);
        assert!((zeta_line(c(-2.0, 0.0)).unwrap().value - c(6.0, 0.0)).norm() < 6e-12);
        for k in 1..6 {
            assert_eq!(zeta_line(c(k as f64, 0.0)).unwrap().value, c(0.0, 0.0));
        }
        assert!(matches!(zeta_line(c(0.5, 0.0)), Err(Error::Pole { .. })));
        assert!(matches!(zeta_line(c(2.5, 0.0)), Err(Error::Pole { .. })));
    }

    #[test]
    fn sato_tate_values() {
        let one = c(1.0, 0.0);
        assert!((zeta_sato_tate(one).unwrap().value - one).norm() < 1e-14);
        assert!((zeta_sato_tate(c(0.0, 0.0)).unwrap().value - one).norm() < 1e-14);
        assert!((zeta_sato_tate(c(2.0, 0.0)).unwrap().value - c(-0.5, 0.0)).norm() < 1e-14);
        // moments of 2 − u under the semicircle law are Catalan numbers
        for (m, cat) in [(1, 2.0), (2, 5.0), (3, 14.0), (4, 42.0), (9, 16796.0)] {
            let v = zeta_sato_tate(c(-(m as f64), 0.0)).unwrap().value;
            assert!((v.re - cat).abs() < 1e-12 * cat, "m={m}: {v}");
        }
        let v = zeta_sato_tate_quadrature(one, &spec()).unwrap();
        assert!((v.value - one).norm() < 1e-10, "{v:?}");
        for s in [c(0.3, 0.0), c(1.1, 2.0), c(-2.0, -1.0)] {
            let a = zeta_sato_tate(s).unwrap().value;
            let b = zeta_sato_tate_quadrature(s, &spec()).unwrap().value;
            assert!((a - b).norm() < 1e-8 * a.norm().max(1.0), "{s}: {a} vs {b}");
        }
        assert!(zeta_sato_tate_quadrature(c(1.6, 0.0), &spec()).is_err());
    }

    #[test]
    fn sato_tate_functional_equation() {
        for s in [c(0.3, 0.0), c(0.2, 4.0), c(-2.7, 1.1), c(3.0, 0.0), c(1.0, 0.0)] {
            let d = xi_sato_tate_defect(s).unwrap();
            let scale = xi_sato_tate(s).unwrap().norm().max(1.0);
            assert!(d.norm() <= 1e-9 * scale, "{s}: {d}");
        }
        for s in [c(0.3, 0.2), c(-4.5, 1.0), c(2.2, -0.7)] {
            let a = xi_sato_tate(s).unwrap();
            let b = xi_sato_tate_entire(s).unwrap();
            assert!((a - b).norm() <= 1e-12 * a.norm().max(1.0));
        }
    }

    #[test]
    fn refinement_is_monotone() {
        for (q, s) in [(2u64, c(3.0, 1.0)), (5, c(-6.0, 0.0)), (3, c(0.5, 4.0))] {
            let hist = zeta_level_history(q, s, 5).unwrap();
            let best = zeta_numeric(q, s, &spec()).unwrap().value;
            let floor = 1e-14 * best.norm().max(1.0);
            let errs: alloc::vec::Vec<f64> = hist.iter().map(|v| (v - best).norm()).collect();
            for w in errs.windows(2) {
                assert!(w[1] <= w[0] || w[1] <= floor, "q={q} s={s}: {errs:?}");
            }
        }
    }
}
