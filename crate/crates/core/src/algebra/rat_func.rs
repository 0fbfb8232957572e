use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{Coefficient, RatPoly};

/// Element of `ℚ(x)`, kept reduced with a monic denominator.
///
/// Only used where a series has a non-unit polynomial constant term, such as
/// `√((x-1)^2 - 2(x+1)z + z^2)`, whose coefficients have powers of `x-1` in the
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: RatPoly,
    den: RatPoly,
}

impl RatFunc {
    pub fn new(num: RatPoly, den: RatPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::from_poly(RatPoly::zero()));
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero denominator").recip();
        Some(Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn from_poly(p: RatPoly) -> Self {
        Self {
            num: p,
            den: RatPoly::one(),
        }
    }

    pub fn numer(&self) -> &RatPoly {
        &self.num
    }

    pub fn denom(&self) -> &RatPoly {
        &self.den
    }

    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        (!num_traits::Zero::is_zero(&d)).then(|| self.num.eval(x) / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num.display("x"))
        } else {
            write!(f, "({}) / ({})", self.num.display("x"), self.den.display("x"))
        }
    }
}

impl Coefficient for RatFunc {
    fn ring_zero() -> Self {
        Self::from_poly(RatPoly::zero())
    }
    fn ring_one() -> Self {
        Self::from_poly(RatPoly::one())
    }
    fn is_ring_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        Self::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_ring_zero() || rhs.is_ring_zero() {
            return Self::ring_zero();
        }
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
    fn neg_ref(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn from_rational(r: &BigRational) -> Self {
        Self::from_poly(RatPoly::constant(r.clone()))
    }
    fn inverse(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
    fn square_root(&self) -> Option<Self> {
        // reduced with monic denominator, so both parts must be squares
        let num = self.num.sqrt_exact()?;
        let den = self.den.sqrt_exact()?;
        let sign = match num.leading().zip(den.leading()) {
            Some((a, b)) if a.is_negative() != b.is_negative() => -BigRational::one(),
            _ => BigRational::one(),
        };
        Self::new(num.scale(&sign), den)
    }
}
