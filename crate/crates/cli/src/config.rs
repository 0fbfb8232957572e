//! Optional JSON configuration file. Every field may be omitted; command
//! line flags take precedence over the file.
//!
//! ```json
//! {
//!   "quadrature": { "abs_tol": 1e-13, "rel_tol": 1e-11, "max_nodes": 1048576 },
//!   "tolerances": { "symmetry": 1e-11, "functional_equation": 1e-9 }
//! }
//! ```

use std::path::Path;

use serde::Deserialize;
use treezeta_core::quadrature::QuadratureSpec;
use treezeta_core::verify::Tolerances;

use crate::args::GlobalOpts;
use crate::UsageError;

#[derive(Deserialize, Default, Debug)]
#[serde(default, deny_unknown_fields)]
pub struct ConfigFile {
    pub quadrature: QuadratureOverrides,
    pub tolerances: ToleranceOverrides,
}

#[derive(Deserialize, Default, Debug)]
#[serde(default, deny_unknown_fields)]
pub struct QuadratureOverrides {
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub max_nodes: Option<usize>,
}

#[derive(Deserialize, Default, Debug)]
#[serde(default, deny_unknown_fields)]
pub struct ToleranceOverrides {
    pub symmetry: Option<f64>,
    pub script_e: Option<f64>,
    pub functional_equation: Option<f64>,
    pub integer_points: Option<f64>,
    pub laplace: Option<f64>,
    pub line_values: Option<f64>,
    pub sato_tate_fe: Option<f64>,
    pub sato_tate_routes: Option<f64>,
}

/// Settings after merging defaults, the config file and flags.
#[derive(Debug, Clone)]
pub struct Settings {
    pub quadrature: QuadratureSpec,
    pub tolerances: Tolerances,
}

pub fn load(path: &Path) -> Result<ConfigFile, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| UsageError(format!("invalid config {}: {e}", path.display())))
}

pub fn resolve(global: &GlobalOpts) -> Result<Settings, UsageError> {
    let file = match &global.config {
        Some(p) => load(p)?,
        None => ConfigFile::default(),
    };
    let d = QuadratureSpec::default();
    let q = &file.quadrature;
    let quadrature = QuadratureSpec::new(
        global.abs_tol.or(q.abs_tol).unwrap_or(d.abs_tol),
        global.rel_tol.or(q.rel_tol).unwrap_or(d.rel_tol),
        global.max_nodes.or(q.max_nodes).unwrap_or(d.max_nodes),
    )
    .map_err(|e| UsageError(e.to_string()))?;

    let t = &file.tolerances;
    let d = Tolerances::default();
    let tolerances = Tolerances {
        symmetry: t.symmetry.unwrap_or(d.symmetry),
        script_e: t.script_e.unwrap_or(d.script_e),
        functional_equation: t.functional_equation.unwrap_or(d.functional_equation),
        integer_points: t.integer_points.unwrap_or(d.integer_points),
        laplace: t.laplace.unwrap_or(d.laplace),
        line_values: t.line_values.unwrap_or(d.line_values),
        sato_tate_fe: t.sato_tate_fe.unwrap_or(d.sato_tate_fe),
        sato_tate_routes: t.sato_tate_routes.unwrap_or(d.sato_tate_routes),
    };
    Ok(Settings {
        quadrature,
        tolerances,
    })
}
