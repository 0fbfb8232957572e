//! Composite Gauss–Legendre quadrature with uniform panel doubling.
//!
//! An integral over `[a, b]` is split at caller-supplied breakpoints. Level
//! `L` subdivides every breakpoint interval into `2^L` equal panels and
//! applies a 16-point Gauss–Legendre rule on each panel. Levels are refined
//! until two successive estimates agree to within the requested tolerance.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Positive nodes and weights of the 16-point Gauss–Legendre rule on `[-1, 1]`.
const GL16: [(f64, f64); 8] = [
    (0.095_012_509_837_637_45, 0.189_450_610_455_068_59),
    (0.281_603_550_779_258_9, 0.182_603_415_044_923_6),
    (0.458_016_777_657_227_37, 0.169_156_519_395_002_62),
    (0.617_876_244_402_643_8, 0.149_595_988_816_576_76),
    (0.755_404_408_355_003, 0.124_628_971_255_534_03),
    (0.865_631_202_387_831_8, 0.095_158_511_682_492_59),
    (0.944_575_023_073_232_6, 0.062_253_523_938_647_706),
    (0.989_400_934_991_649_9, 0.027_152_459_411_754_037),
];

/// Nodes in one panel.
pub const PANEL_NODES: usize = 16;

/// Levels are only compared once the coarser one has at least this many nodes.
const MIN_COMPARED_NODES: usize = 64;

/// Stopping rule for [`integrate`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Upper bound on integrand evaluations in a single level.
    pub max_nodes: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-13,
            rel_tol: 1e-11,
            max_nodes: 1 << 20,
        }
    }
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_nodes: usize) -> Result<Self> {
        let spec = QuadratureSpec {
            abs_tol,
            rel_tol,
            max_nodes,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::domain(alloc::format!(
                "abs_tol must be positive, got {}",
                self.abs_tol
            )));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::domain(alloc::format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        if !self.max_nodes.is_power_of_two() {
            return Err(Error::domain(alloc::format!(
                "max_nodes must be a power of two, got {}",
                self.max_nodes
            )));
        }
        Ok(())
    }

    /// The error budget for an estimate of size `magnitude`.
    pub fn budget(&self, magnitude: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * magnitude)
    }
}

/// Outcome of an integration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    /// Difference between the last two levels.
    pub est_error: f64,
    /// Integrand evaluations in the final level.
    pub nodes_used: usize,
    pub converged: bool,
}

/// One composite rule evaluation: each interval between consecutive
/// breakpoints is cut into `panels` equal pieces.
fn composite<F>(f: &mut F, breakpoints: &[f64], panels: usize) -> Complex64
where
    F: FnMut(f64) -> Complex64,
{
    let mut total = Complex64::new(0.0, 0.0);
    for pair in breakpoints.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let width = (b - a) / panels as f64;
        for p in 0..panels {
            let lo = a + width * p as f64;
            let mid = lo + 0.5 * width;
            let half = 0.5 * width;
            let mut panel = Complex64::new(0.0, 0.0);
            for &(x, w) in GL16.iter() {
                panel += (f(mid - half * x) + f(mid + half * x)) * w;
            }
            total += panel * half;
        }
    }
    total
}

fn check_breakpoints(breakpoints: &[f64]) -> Result<()> {
    if breakpoints.len() < 2 {
        return Err(Error::domain("need at least two breakpoints"));
    }
    if breakpoints.iter().any(|x| !x.is_finite()) {
        return Err(Error::domain("breakpoints must be finite"));
    }
    if breakpoints.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::domain("breakpoints must be strictly increasing"));
    }
    Ok(())
}

/// Integrates `f` over `[breakpoints[0], breakpoints[last]]`.
///
/// Not reaching the tolerance is reported through `converged = false`, with
/// the finest estimate as the value. A non-finite estimate is an error.
pub fn integrate<F>(mut f: F, breakpoints: &[f64], spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: FnMut(f64) -> Complex64,
{
    spec.validate()?;
    check_breakpoints(breakpoints)?;
    let intervals = breakpoints.len() - 1;
    let nodes_at = |panels: usize| intervals * panels * PANEL_NODES;

    let mut panels = 1usize;
    while nodes_at(panels) < MIN_COMPARED_NODES {
        panels *= 2;
    }
    if nodes_at(panels) > spec.max_nodes {
        return Err(Error::CapExceeded {
            what: "quadrature nodes",
            requested: nodes_at(panels),
            cap: spec.max_nodes,
            hint: "use fewer breakpoints or raise max_nodes",
        });
    }
    let mut previous = composite(&mut f, breakpoints, panels);
    if !(previous.re.is_finite() && previous.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut est_error = f64::INFINITY;
    loop {
        if nodes_at(panels * 2) > spec.max_nodes {
            return Ok(QuadResult {
                value: previous,
                est_error,
                nodes_used: nodes_at(panels),
                converged: false,
            });
        }
        panels *= 2;
        let current = composite(&mut f, breakpoints, panels);
        if !(current.re.is_finite() && current.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        est_error = (current - previous).norm();
        previous = current;
        if est_error <= spec.budget(current.norm()) {
            return Ok(QuadResult {
                value: current,
                est_error,
                nodes_used: nodes_at(panels),
                converged: true,
            });
        }
    }
}

/// Estimates from `levels` successive doublings, starting at the first
/// level with at least 64 nodes.
pub fn level_history<F>(mut f: F, breakpoints: &[f64], levels: usize) -> Result<Vec<Complex64>>
where
    F: FnMut(f64) -> Complex64,
{
    check_breakpoints(breakpoints)?;
    let intervals = breakpoints.len() - 1;
    let mut panels = 1usize;
    while intervals * panels * PANEL_NODES < MIN_COMPARED_NODES {
        panels *= 2;
    }
    let mut out = Vec::with_capacity(levels);
    for _ in 0..levels {
        out.push(composite(&mut f, breakpoints, panels));
        panels *= 2;
    }
    Ok(out)
}

/// Breakpoints on `[a, b]` refined geometrically toward `a`: the interior
/// points sit at `a + (b - a)·2^-j` for `j = 1..=depth`.
pub fn graded_toward_start(a: f64, b: f64, depth: u32) -> Vec<f64> {
    let mut pts = Vec::with_capacity(depth as usize + 2);
    pts.push(a);
    for j in (1..=depth).rev() {
        pts.push(a + (b - a) * libm::ldexp(1.0, -(j as i32)));
    }
    pts.push(b);
    pts
}
