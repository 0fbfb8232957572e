//! Exact and numeric computation of the spectral zeta function of the
//! `(q+1)`-regular tree.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised by layer:
//!
//! - [`algebra`]: big-integer polynomials, rationals, rational functions and
//!   truncated power series over them. Everything there is exact.
//! - [`special_values`]: `ζ_q(-m)` as integer polynomials in `q` (three
//!   independent routes), the palindromic polynomials `P_n` and the exact
//!   positive values `ζ_q(n)`.
//! - [`genfun`]: closed forms of the generating functions `F`, `G_-`, `G_+`
//!   and `ℰ` on the complex plane, with the branch cut placed on the spectrum.
//! - [`spectral`]: quadrature evaluation of `ζ_q(s)` for complex `s`, the
//!   completed function `ξ_q`, the heat trace, the resolvent, and the two
//!   limiting cases `q = 1` (discrete line) and `q = ∞` (Sato–Tate).
//! - [`dyck`]: 2-coloured Dyck words and their weight polynomials `Q_n`.
//! - [`verify`]: ready-made identity checks over standard grids, shared by the
//!   command-line tool and the acceptance tests.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod dyck;
mod error;
pub mod gamma;
pub mod genfun;
pub mod quadrature;
pub mod special_values;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};

pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::BigRational;
