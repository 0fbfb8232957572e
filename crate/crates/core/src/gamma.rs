//! Complex Gamma function: Lanczos approximation (g = 7, nine terms) on the
//! right half-plane, reflection on the left.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `sin(πx)`, exactly zero at integers.
pub fn sinpi_real(x: f64) -> f64 {
    // r ∈ [-1, 1], sin(πx) = sin(πr)
    let r = x - 2.0 * libm::round(0.5 * x);
    let r = if r > 0.5 {
        1.0 - r
    } else if r < -0.5 {
        -1.0 - r
    } else {
        r
    };
    libm::sin(PI * r)
}

/// `cos(πx)`, exactly zero at half-integers.
pub fn cospi_real(x: f64) -> f64 {
    let r = (x - 2.0 * libm::round(0.5 * x)).abs();
    sinpi_real(0.5 - r)
}

/// `sin(πz)` for complex `z`.
pub fn sinpi(z: Complex64) -> Complex64 {
    let y = PI * z.im;
    Complex64::new(
        sinpi_real(z.re) * libm::cosh(y),
        cospi_real(z.re) * libm::sinh(y),
    )
}

/// `cos(πz)` for complex `z`.
pub fn cospi(z: Complex64) -> Complex64 {
    let y = PI * z.im;
    Complex64::new(
        cospi_real(z.re) * libm::cosh(y),
        -sinpi_real(z.re) * libm::sinh(y),
    )
}

fn lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    let sqrt_2pi = libm::sqrt(2.0 * PI);
    ((z + 0.5) * t.ln() - t).exp() * x * sqrt_2pi
}

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == libm::round(z.re)
}

/// `Γ(z)`. Nonpositive integers are poles.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    let v = if z.re < 0.5 {
        Complex64::new(PI, 0.0) / (sinpi(z) * lanczos(1.0 - z))
    } else {
        lanczos(z)
    };
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite)
    }
}

/// `1/Γ(z)`, entire; zero at nonpositive integers.
pub fn rgamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    if is_nonpositive_integer(z) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let v = if z.re < 0.5 {
        sinpi(z) * lanczos(1.0 - z) / PI
    } else {
        lanczos(z).inv()
    };
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite)
    }
}
