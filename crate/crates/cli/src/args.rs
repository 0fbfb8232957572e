use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "treezeta",
    version,
    about = "Special values, generating functions and functional equation of the spectral zeta function of the (q+1)-regular tree"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// JSON file with quadrature and tolerance defaults.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Absolute quadrature tolerance.
    #[arg(long, global = true)]
    pub abs_tol: Option<f64>,

    /// Relative quadrature tolerance.
    #[arg(long, global = true)]
    pub rel_tol: Option<f64>,

    /// Maximum quadrature nodes per level (a power of two).
    #[arg(long, global = true)]
    pub max_nodes: Option<usize>,

    /// Include wall-clock timings in the report. Off by default so that
    /// repeated runs produce identical output.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The polynomials P_1..P_n carrying the positive special values.
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PolyMethod::Recursion)]
        method: PolyMethod,
    },
    /// Exact special values at negative and positive integers.
    Values {
        /// Evaluate at this q; without it values are printed as polynomials in q.
        #[arg(long)]
        q: Option<u64>,
        /// Largest m for zeta(-m).
        #[arg(long, default_value_t = 5)]
        neg: usize,
        /// Largest n for zeta(n).
        #[arg(long, default_value_t = 5)]
        pos: usize,
        #[arg(long, value_enum, default_value_t = NegRoute::Cjks)]
        route: NegRoute,
    },
    /// Numeric zeta (or completed zeta) at a complex point.
    Zeta(ZetaArgs),
    /// On-diagonal heat kernel K_q(t).
    Heat {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: f64,
    },
    /// Weight polynomial Q_n of 2-coloured Dyck words.
    Dyck {
        #[arg(long)]
        n: usize,
        /// List every word with its weight (enumeration only).
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = DyckMethod::Dp)]
        method: DyckMethod,
    },
    /// Run identity checks.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// Restrict per-q checks to this q.
        #[arg(long)]
        q: Option<u64>,
        /// Replace every numeric tolerance.
        #[arg(long)]
        tol: Option<f64>,
        /// Depth of exact tables or size of the integer range.
        #[arg(long)]
        n_max: Option<usize>,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("tree").required(true).args(["q", "line", "sato_tate"])))]
pub struct ZetaArgs {
    #[arg(long)]
    pub q: Option<u64>,
    /// The discrete line (q = 1).
    #[arg(long)]
    pub line: bool,
    /// The semicircle limit (q = infinity).
    #[arg(long)]
    pub sato_tate: bool,
    /// The point as RE,IM or RE.
    #[arg(long, allow_hyphen_values = true)]
    pub s: String,
    /// Evaluate the completed function xi instead.
    #[arg(long)]
    pub xi: bool,
    /// For --sato-tate: integrate the semicircle law directly.
    #[arg(long)]
    pub quadrature: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyMethod {
    Recursion,
    ClosedForm,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegRoute {
    Cjks,
    Binomial,
    Series,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum DyckMethod {
    Bruteforce,
    Dp,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyTarget {
    All,
    Negvals,
    Moments,
    Ppoly,
    Twostep,
    Tquad,
    Symmetry,
    Escript,
    Fe,
    Integers,
    Laplace,
    Boundary,
    Dyck,
}
