//! Identity checks over fixed, deterministic sample sets.
//!
//! Each `check_*` function evaluates one identity and returns a
//! [`CheckOutcome`] holding the worst defect seen. Exact identities report an
//! exact rational defect, numeric ones a float compared with a tolerance.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::binomial;
use crate::dyck::verify_qn_equals_pn;
use crate::error::{Error, Result};
use crate::genfun::{eval_g_minus, eval_g_plus, eval_script_e, symmetry_defect, t_series_residual, SpectrumCut};
use crate::quadrature::QuadratureSpec;
use crate::special_values::{
    moments_bruteforce, moments_series, p_polynomials, p_polynomials_closed_form, two_step_defect,
    zeta_neg_table, zeta_pos, NegMethod,
};
use crate::spectral::{
    resolvent_transform, xi, xi_sato_tate, xi_sato_tate_defect, zeta_line, zeta_numeric,
    zeta_sato_tate, zeta_sato_tate_quadrature,
};

/// Size of the worst discrepancy found by a check.
#[derive(Clone, Debug, PartialEq)]
pub enum Defect {
    Exact(BigRational),
    Numeric(f64),
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::Exact(r) => write!(f, "{r}"),
            Defect::Numeric(x) => write!(f, "{x:e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub q: Option<u64>,
    pub points: usize,
    pub max_defect: Defect,
    /// `None` for exact checks, which pass only at zero defect.
    pub tolerance: Option<f64>,
    /// Where the worst defect (or the first failure) occurred.
    pub worst_at: Option<String>,
    pub passed: bool,
    pub non_converged: bool,
}

impl CheckOutcome {
    fn exact(name: &str, q: Option<u64>, points: usize, first: Option<(BigRational, String)>) -> Self {
        let (max_defect, worst_at, passed) = match first {
            None => (BigRational::zero(), None, true),
            Some((d, at)) => (d, Some(at), false),
        };
        CheckOutcome {
            name: name.into(),
            q,
            points,
            max_defect: Defect::Exact(max_defect),
            tolerance: None,
            worst_at,
            passed,
            non_converged: false,
        }
    }
}

/// Running maximum of a scaled numeric defect.
struct Worst {
    name: &'static str,
    q: Option<u64>,
    tol: f64,
    points: usize,
    defect: f64,
    at: Option<String>,
    non_converged: bool,
    failed: bool,
}

impl Worst {
    fn new(name: &'static str, q: Option<u64>, tol: f64) -> Self {
        Worst {
            name,
            q,
            tol,
            points: 0,
            defect: 0.0,
            at: None,
            non_converged: false,
            failed: false,
        }
    }

    /// Records `defect`, which passes when `defect <= tol`. The largest
    /// defect (NaN counts as largest) and its location are kept.
    fn record(&mut self, defect: f64, at: impl FnOnce() -> String) {
        self.points += 1;
        if defect.is_nan() || defect > self.tol {
            self.failed = true;
        }
        let replace =
            !self.defect.is_nan() && (defect.is_nan() || defect > self.defect || self.at.is_none());
        if replace {
            self.defect = defect;
            self.at = Some(at());
        }
    }

    /// Records an evaluation error; non-convergence is kept as a flag, any
    /// other error aborts the check.
    fn absorb<T>(&mut self, r: Result<T>, at: impl FnOnce() -> String) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(Error::NonConverged { .. }) => {
                self.points += 1;
                self.non_converged = true;
                self.failed = true;
                if self.at.is_none() {
                    self.at = Some(at());
                }
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name.into(),
            q: self.q,
            points: self.points,
            max_defect: Defect::Numeric(self.defect),
            tolerance: Some(self.tol),
            worst_at: self.at,
            passed: !self.failed,
            non_converged: self.non_converged,
        }
    }
}

fn fmt_c(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}

/// The ten directions used by the two-dimensional grids: ±18°, ±54°, ±90°,
/// ±126°, ±162°. None lies on the real axis.
fn grid_angles() -> [f64; 10] {
    let mut out = [0.0; 10];
    for k in 0..5 {
        let a = (18.0 + 36.0 * k as f64) * PI / 180.0;
        out[2 * k] = a;
        out[2 * k + 1] = -a;
    }
    out
}

fn log_spaced(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> {
    let (a, b) = (libm::log(lo), libm::log(hi));
    (0..count).map(move |k| libm::exp(a + (b - a) * k as f64 / (count - 1) as f64))
}

/// 200 points with `0.1 ≤ |z| ≤ 100`: 19 log-spaced radii in ten
/// directions, and ten real points including both sides of the spectrum
/// just outside the exclusion zone.
pub fn symmetry_grid(q: u64) -> Result<Vec<Complex64>> {
    let cut = SpectrumCut::new(q)?;
    let mut pts = Vec::with_capacity(200);
    for r in log_spaced(0.1, 100.0, 19) {
        for a in grid_angles() {
            pts.push(Complex64::from_polar(r, a));
        }
    }
    let (lo, hi) = (cut.r_minus(), cut.r_plus());
    for x in [
        -100.0,
        -10.0,
        -1.0,
        -0.1,
        0.1,
        lo - 2e-3,
        hi + 2e-3,
        0.5 * (hi + 100.0),
        100.0,
        -hi,
    ] {
        pts.push(Complex64::new(x, 0.0));
    }
    Ok(pts)
}

/// 100 points with `0.05 ≤ |z| ≤ 20` in ten directions off the real axis.
pub fn script_e_grid() -> Vec<Complex64> {
    let mut pts = Vec::with_capacity(100);
    for r in log_spaced(0.05, 20.0, 10) {
        for a in grid_angles() {
            pts.push(Complex64::from_polar(r, a));
        }
    }
    pts
}

const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

/// `count` points on a golden-angle spiral filling the disc `|s| ≤ radius`.
pub fn spiral(count: usize, radius: f64) -> Vec<Complex64> {
    (0..count)
        .map(|k| {
            let r = radius * libm::sqrt((k as f64 + 0.5) / count as f64);
            Complex64::from_polar(r, GOLDEN_ANGLE * k as f64)
        })
        .collect()
}

/// 50 points with `|s| ≤ 5` for the functional equation.
pub fn functional_equation_grid() -> Vec<Complex64> {
    spiral(50, 5.0)
}

/// 20 points with `|z| ≤ 0.9·r₋`, then 20 points with
/// `1.1·r₊ ≤ |z| ≤ 20·r₊`.
pub fn laplace_grids(q: u64) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    let cut = SpectrumCut::new(q)?;
    let inner = spiral(20, 0.9 * cut.r_minus());
    let outer = log_spaced(1.1 * cut.r_plus(), 20.0 * cut.r_plus(), 20)
        .enumerate()
        .map(|(k, r)| Complex64::from_polar(r, GOLDEN_ANGLE * k as f64))
        .collect();
    Ok((inner, outer))
}

/// The three negative-value routes agree for `m ≤ m_max`, and each value is
/// monic of degree `m` with nonnegative coefficients.
pub fn check_negative_values(m_max: usize) -> Result<CheckOutcome> {
    let tables: Vec<_> = NegMethod::ALL
        .iter()
        .map(|&m| zeta_neg_table(m_max, m))
        .collect::<Result<_>>()?;
    let mut first = None;
    'outer: for m in 0..=m_max {
        let base = &tables[0][m];
        for (method, table) in NegMethod::ALL.iter().zip(&tables).skip(1) {
            let other = &table[m];
            if other != base {
                let e = (0..=m.max(other.coeffs().len())).find(|&e| base.coeff(e) != other.coeff(e)).unwrap_or(0);
                let d = other.coeff(e) - base.coeff(e);
                first = Some((
                    BigRational::from_integer(d),
                    format!("m={m}, {} vs {} at q^{e}", method.name(), NegMethod::ALL[0].name()),
                ));
                break 'outer;
            }
        }
        if !base.is_monic() || base.degree().finite() != Some(m) || !base.has_nonnegative_coeffs() {
            first = Some((BigRational::from_integer(BigInt::from(1)), format!("m={m}, shape")));
            break;
        }
    }
    Ok(CheckOutcome::exact("negative values: three routes", None, m_max + 1, first))
}

/// Moments of the adjacency operator: the series route evaluated at `q`
/// against closed-walk counting.
pub fn check_moments(qs: &[u64], n_max: usize) -> Result<CheckOutcome> {
    let series = moments_series(n_max)?;
    let mut first = None;
    let mut points = 0;
    'outer: for &q in qs {
        for (n, poly) in series.iter().enumerate() {
            points += 1;
            let a = poly.eval_int(&BigInt::from(q));
            let b = moments_bruteforce(q, n);
            if a != b {
                first = Some((BigRational::from_integer(a - b), format!("q={q}, n={n}")));
                break 'outer;
            }
        }
    }
    Ok(CheckOutcome::exact("moments: series vs walk count", None, points, first))
}

/// The recursion and the closed form give the same `P_n`, each monic,
/// palindromic, of degree `2n − 2` with nonnegative coefficients.
pub fn check_p_polynomials(n_max: usize) -> Result<CheckOutcome> {
    let rec = p_polynomials(n_max);
    let closed = p_polynomials_closed_form(n_max)?;
    let mut first = None;
    for (i, (a, b)) in rec.iter().zip(&closed).enumerate() {
        let n = i + 1;
        if a != b {
            let e = (0..2 * n).find(|&e| a.coeff(e) != b.coeff(e)).unwrap_or(0);
            first = Some((
                BigRational::from_integer(a.coeff(e) - b.coeff(e)),
                format!("n={n}, recursion vs closed form at q^{e}"),
            ));
            break;
        }
        let shaped = a.is_monic()
            && a.degree().finite() == Some(2 * n - 2)
            && a.is_palindromic()?
            && a.has_nonnegative_coeffs();
        if !shaped {
            first = Some((BigRational::from_integer(BigInt::from(1)), format!("n={n}, shape")));
            break;
        }
    }
    Ok(CheckOutcome::exact("P polynomials: recursion vs closed form", None, n_max, first))
}

/// The two-step relation between values at `−n` and `n` is exactly zero.
pub fn check_two_step(q: u64, n_abs_max: i64) -> Result<CheckOutcome> {
    let qb = BigInt::from(q);
    let mut first = None;
    let mut points = 0;
    for n in -n_abs_max..=n_abs_max {
        points += 1;
        let d = two_step_defect(&qb, n)?;
        if !d.is_zero() {
            first = Some((d, format!("n={n}")));
            break;
        }
    }
    Ok(CheckOutcome::exact("two-step relation", Some(q), points, first))
}

/// The quadratic for `T(z) = Σ P_n z^{n−1}` holds through order `order − 1`.
pub fn check_t_quadratic(order: usize) -> Result<CheckOutcome> {
    let res = t_series_residual(order);
    let first = res.valuation().map(|k| {
        let c = res.coeff(k);
        let lead = c.leading().cloned().unwrap_or_else(BigRational::zero);
        (lead, format!("order {k}"))
    });
    Ok(CheckOutcome::exact("T quadratic residual", None, order, first))
}

/// Dyck weights: `Q_n = P_{n+1}` by the dynamic program for `n ≤ n_max`,
/// enumeration against the dynamic program for `n ≤ bruteforce_max`.
pub fn check_dyck(n_max: usize, bruteforce_max: Option<usize>) -> Result<CheckOutcome> {
    let report = verify_qn_equals_pn(n_max, bruteforce_max)?;
    let first = report.first_discrepancy().map(|d| {
        (
            BigRational::from_integer(&d.found - &d.expected),
            format!("n={}, {} at t^{}", d.n, d.comparison, d.exponent),
        )
    });
    Ok(CheckOutcome::exact("Dyck weights: Q_n = P_(n+1)", None, n_max + 1, first))
}

/// `|G_+(z) + G_−(1/z)|` over [`symmetry_grid`].
pub fn check_symmetry(q: u64, tol: f64) -> Result<CheckOutcome> {
    let mut w = Worst::new("generating-function symmetry", Some(q), tol);
    for z in symmetry_grid(q)? {
        let d = symmetry_defect(q, z)?.norm();
        w.record(d, || fmt_c(z));
    }
    Ok(w.finish())
}

/// `|ℰ(z) − (z + 1)|` over [`script_e_grid`].
pub fn check_script_e(q: u64, tol: f64) -> Result<CheckOutcome> {
    let mut w = Worst::new("E(z) = z + 1", Some(q), tol);
    for z in script_e_grid() {
        let d = (eval_script_e(q, z)? - (z + 1.0)).norm();
        w.record(d, || fmt_c(z));
    }
    Ok(w.finish())
}

/// `|ξ_q(1−s) − ξ_q(s)| / max(1, |ξ_q(s)|)` over
/// [`functional_equation_grid`].
pub fn check_functional_equation(q: u64, tol: f64, spec: &QuadratureSpec) -> Result<CheckOutcome> {
    let mut w = Worst::new("completed zeta functional equation", Some(q), tol);
    for s in functional_equation_grid() {
        let Some(a) = w.absorb(xi(q, s, spec).and_then(|e| e.converged_value()), || fmt_c(s))? else {
            continue;
        };
        let Some(b) = w.absorb(xi(q, 1.0 - s, spec).and_then(|e| e.converged_value()), || fmt_c(s))?
        else {
            continue;
        };
        w.record((b - a).norm() / a.norm().max(1.0), || fmt_c(s));
    }
    Ok(w.finish())
}

/// Quadrature against exact values at integers `k_min..=k_max`: relative
/// error, except absolute at `s = 0`.
pub fn check_integer_points(
    q: u64,
    k_min: i64,
    k_max: i64,
    tol: f64,
    spec: &QuadratureSpec,
) -> Result<CheckOutcome> {
    let qb = BigInt::from(q);
    let neg = zeta_neg_table(k_min.min(0).unsigned_abs() as usize, NegMethod::Cjks)?;
    let mut w = Worst::new("quadrature at integers", Some(q), tol);
    for k in k_min..=k_max {
        let exact = if k > 0 {
            zeta_pos(&qb, k as usize)?.to_f64().unwrap_or(f64::NAN)
        } else {
            neg[(-k) as usize].eval_int(&qb).to_f64().unwrap_or(f64::NAN)
        };
        let s = Complex64::new(k as f64, 0.0);
        let Some(v) = w.absorb(zeta_numeric(q, s, spec).and_then(|e| e.converged_value()), || {
            format!("s={k}")
        })?
        else {
            continue;
        };
        let d = if k == 0 {
            // absolute, with the relative tolerance rescaled to 1e-12
            (v - exact).norm() * (tol / 1e-12)
        } else {
            (v - exact).norm() / exact.abs()
        };
        w.record(d, || format!("s={k}"));
    }
    Ok(w.finish())
}

/// The Laplace identities `z·L(−z) = G_+(z)` for small `|z|` and
/// `−L(−z) = G_−(1/z)/z` for large `|z|`, over [`laplace_grids`].
pub fn check_laplace(q: u64, tol: f64, spec: &QuadratureSpec) -> Result<CheckOutcome> {
    let (inner, outer) = laplace_grids(q)?;
    let mut w = Worst::new("Laplace transform identities", Some(q), tol);
    for z in inner {
        let Some(l) = w.absorb(resolvent_transform(q, z, spec).and_then(|e| e.converged_value()), || {
            fmt_c(z)
        })?
        else {
            continue;
        };
        w.record((z * l - eval_g_plus(q, z)?).norm(), || fmt_c(z));
    }
    for z in outer {
        let Some(l) = w.absorb(resolvent_transform(q, z, spec).and_then(|e| e.converged_value()), || {
            fmt_c(z)
        })?
        else {
            continue;
        };
        w.record((-l - eval_g_minus(q, z.inv())? / z).norm(), || fmt_c(z));
    }
    Ok(w.finish())
}

/// `ζ_ℤ(−m) = C(2m, m)` for `m ≤ m_max`, relative error.
pub fn check_line_values(m_max: usize, tol: f64) -> Result<CheckOutcome> {
    let mut w = Worst::new("line zeta at negative integers", Some(1), tol);
    for m in 0..=m_max {
        let exact = binomial(2 * m as u64, m as u64).to_f64().unwrap_or(f64::NAN);
        let v = zeta_line(Complex64::new(-(m as f64), 0.0))?.value;
        w.record((v - exact).norm() / exact, || format!("m={m}"));
    }
    Ok(w.finish())
}

/// 20 points on a spiral of radius 6 around `1/2` for the semicircle
/// functional equation.
pub fn sato_tate_fe_grid() -> Vec<Complex64> {
    spiral(20, 6.0).into_iter().map(|s| s + 0.5).collect()
}

/// `|ξ_∞(1−s) − ξ_∞(s)| / max(1, |ξ_∞(s)|)` over [`sato_tate_fe_grid`].
pub fn check_sato_tate_fe(tol: f64) -> Result<CheckOutcome> {
    let mut w = Worst::new("semicircle functional equation", None, tol);
    for s in sato_tate_fe_grid() {
        let d = xi_sato_tate_defect(s)?.norm() / xi_sato_tate(s)?.norm().max(1.0);
        w.record(d, || fmt_c(s));
    }
    Ok(w.finish())
}

/// Ten points with `−2 ≤ Re s ≤ 1.1` for comparing the two semicircle routes.
pub fn sato_tate_route_grid() -> Vec<Complex64> {
    (0..10)
        .map(|k| {
            let re = -2.0 + 3.1 * k as f64 / 9.0;
            let im = if k % 3 == 0 { 0.0 } else { 1.5 * libm::sin(k as f64) };
            Complex64::new(re, im)
        })
        .collect()
}

/// The Gamma route for `ζ_∞` against direct quadrature, scaled by
/// `max(1, |ζ_∞|)`.
pub fn check_sato_tate_routes(tol: f64, spec: &QuadratureSpec) -> Result<CheckOutcome> {
    let mut w = Worst::new("semicircle zeta: Gamma vs quadrature", None, tol);
    for s in sato_tate_route_grid() {
        let a = zeta_sato_tate(s)?.value;
        let Some(b) = w.absorb(
            zeta_sato_tate_quadrature(s, spec).and_then(|e| e.converged_value()),
            || fmt_c(s),
        )?
        else {
            continue;
        };
        w.record((a - b).norm() / a.norm().max(1.0), || fmt_c(s));
    }
    Ok(w.finish())
}

/// Tolerances for [`run_all`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub symmetry: f64,
    pub script_e: f64,
    pub functional_equation: f64,
    pub integer_points: f64,
    pub laplace: f64,
    pub line_values: f64,
    pub sato_tate_fe: f64,
    pub sato_tate_routes: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            symmetry: 1e-11,
            script_e: 1e-11,
            functional_equation: 1e-9,
            integer_points: 1e-10,
            laplace: 1e-10,
            line_values: 1e-12,
            sato_tate_fe: 1e-9,
            sato_tate_routes: 1e-8,
        }
    }
}

impl Tolerances {
    /// Every tolerance replaced by `tol`.
    pub fn uniform(tol: f64) -> Self {
        Tolerances {
            symmetry: tol,
            script_e: tol,
            functional_equation: tol,
            integer_points: tol,
            laplace: tol,
            line_values: tol,
            sato_tate_fe: tol,
            sato_tate_routes: tol,
        }
    }
}

/// Groups of checks, selectable individually.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    NegativeValues,
    Moments,
    PPolynomials,
    TwoStep,
    TQuadratic,
    Symmetry,
    ScriptE,
    FunctionalEquation,
    IntegerPoints,
    Laplace,
    Boundary,
    Dyck,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::NegativeValues,
        Suite::Moments,
        Suite::PPolynomials,
        Suite::TwoStep,
        Suite::TQuadratic,
        Suite::Symmetry,
        Suite::ScriptE,
        Suite::FunctionalEquation,
        Suite::IntegerPoints,
        Suite::Laplace,
        Suite::Boundary,
        Suite::Dyck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::NegativeValues => "negvals",
            Suite::Moments => "moments",
            Suite::PPolynomials => "ppoly",
            Suite::TwoStep => "twostep",
            Suite::TQuadratic => "tquad",
            Suite::Symmetry => "symmetry",
            Suite::ScriptE => "escript",
            Suite::FunctionalEquation => "fe",
            Suite::IntegerPoints => "integers",
            Suite::Laplace => "laplace",
            Suite::Boundary => "boundary",
            Suite::Dyck => "dyck",
        }
    }
}

/// Parameters for [`run_suite`].
#[derive(Clone, Debug, PartialEq)]
pub struct RunOptions {
    /// Values of `q` for the per-`q` checks.
    pub qs: Vec<u64>,
    pub tolerances: Tolerances,
    pub quadrature: QuadratureSpec,
    /// Depth of the exact tables; `None` uses each check's standard depth.
    pub n_max: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            qs: alloc::vec![2, 3, 5],
            tolerances: Tolerances::default(),
            quadrature: QuadratureSpec::default(),
            n_max: None,
        }
    }
}

/// Runs one group of checks with the standard sample sizes.
pub fn run_suite(suite: Suite, opts: &RunOptions) -> Result<Vec<CheckOutcome>> {
    let t = &opts.tolerances;
    let spec = &opts.quadrature;
    let mut out = Vec::new();
    match suite {
        Suite::NegativeValues => out.push(check_negative_values(opts.n_max.unwrap_or(30))?),
        Suite::Moments => out.push(check_moments(&[1, 2, 3, 4], opts.n_max.unwrap_or(12))?),
        Suite::PPolynomials => out.push(check_p_polynomials(opts.n_max.unwrap_or(30))?),
        Suite::TwoStep => {
            for &q in &opts.qs {
                out.push(check_two_step(q, opts.n_max.unwrap_or(20) as i64)?);
            }
        }
        Suite::TQuadratic => out.push(check_t_quadratic(opts.n_max.unwrap_or(29))?),
        Suite::Symmetry => {
            for &q in &opts.qs {
                out.push(check_symmetry(q, t.symmetry)?);
            }
        }
        Suite::ScriptE => {
            for &q in &opts.qs {
                out.push(check_script_e(q, t.script_e)?);
            }
        }
        Suite::FunctionalEquation => {
            for &q in &opts.qs {
                out.push(check_functional_equation(q, t.functional_equation, spec)?);
            }
        }
        Suite::IntegerPoints => {
            let k = opts.n_max.unwrap_or(8) as i64;
            for &q in &opts.qs {
                out.push(check_integer_points(q, -k, k, t.integer_points, spec)?);
            }
        }
        Suite::Laplace => {
            for &q in &opts.qs {
                out.push(check_laplace(q, t.laplace, spec)?);
            }
        }
        Suite::Boundary => {
            out.push(check_line_values(opts.n_max.unwrap_or(10), t.line_values)?);
            out.push(check_sato_tate_fe(t.sato_tate_fe)?);
            out.push(check_sato_tate_routes(t.sato_tate_routes, spec)?);
        }
        Suite::Dyck => {
            let n = opts.n_max.unwrap_or(30);
            out.push(check_dyck(n, Some(n.min(crate::dyck::BRUTEFORCE_CAP)))?);
        }
    }
    Ok(out)
}

/// Every suite in [`Suite::ALL`] order.
pub fn run_all(opts: &RunOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for s in Suite::ALL {
        out.extend(run_suite(s, opts)?);
    }
    Ok(out)
}

/// Largest absolute value among exact defects, for summaries.
pub fn exact_magnitude(d: &Defect) -> Option<BigRational> {
    match d {
        Defect::Exact(r) => Some(r.abs()),
        Defect::Numeric(_) => None,
    }
}
