use alloc::string::{String, ToString};
use core::fmt;

use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyStyle {
    /// `q^6 + 3q^5 + 1`
    Plain,
    /// `q^{6} + 3q^{5} + 1`
    Latex,
}

/// Renders a low-to-high coefficient slice high-to-low, the way polynomials
/// are usually printed.
pub struct PolyDisplay<'a, T> {
    coeffs: &'a [T],
    var: &'a str,
    style: PolyStyle,
}

impl<'a, T> PolyDisplay<'a, T> {
    pub fn new(coeffs: &'a [T], var: &'a str, style: PolyStyle) -> Self {
        Self { coeffs, var, style }
    }
}

impl<T> fmt::Display for PolyDisplay<'_, T>
where
    T: Signed + Zero + One + fmt::Display + PartialEq,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                f.write_str(&self.magnitude(&mag))?;
            }
            match (k, self.style) {
                (0, _) => {}
                (1, _) => f.write_str(self.var)?,
                (_, PolyStyle::Plain) => write!(f, "{}^{}", self.var, k)?,
                (_, PolyStyle::Latex) => write!(f, "{}^{{{}}}", self.var, k)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> PolyDisplay<'_, T> {
    fn magnitude(&self, mag: &T) -> String {
        let s = mag.to_string();
        match (s.split_once('/'), self.style) {
            (None, _) => s,
            (Some(_), PolyStyle::Plain) => alloc::format!("({s})"),
            (Some((n, d)), PolyStyle::Latex) => alloc::format!("\\frac{{{n}}}{{{d}}}"),
        }
    }
}
