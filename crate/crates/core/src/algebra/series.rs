use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use super::{rat, Coefficient};
use crate::{Error, Result};

/// Truncated power series `c_0 + c_1 z + … + c_{N-1} z^{N-1} + O(z^N)`.
///
/// Binary operations first truncate both operands to the smaller order.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> PolySeries<C> {
    /// Series of the given order; `coeffs` is zero-padded or truncated.
    pub fn new(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order, C::ring_zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: C) -> Self {
        Self::new(order, alloc::vec![c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, C::ring_one())
    }

    /// `c z^k + O(z^order)`
    pub fn monomial(order: usize, c: C, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_ring_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_ring_zero())
    }

    /// Change the order, dropping terms or padding with zeros.
    pub fn with_order(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.iter().take(order).cloned().collect())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Multiply by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs: Vec<C> = (0..k.min(n)).map(|_| C::ring_zero()).collect();
        coeffs.extend(self.coeffs.iter().take(n.saturating_sub(k)).cloned());
        Self { coeffs }
    }

    /// `1 / self`; the constant term must be a unit of the coefficient ring.
    pub fn inverse(&self) -> Result<Self> {
        self.div_into(&Self::one(self.order()))
    }

    /// `self / divisor`; the divisor's constant term must be a unit.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        divisor.div_into(self)
    }

    fn div_into(&self, numer: &Self) -> Result<Self> {
        let n = self.order().min(numer.order());
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let inv0 = self.coeffs[0]
            .inverse()
            .ok_or_else(|| Error::domain("series divisor has no invertible constant term"))?;
        let mut out: Vec<C> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = numer.coeffs[k].clone();
            for j in 1..=k {
                let g = &self.coeffs[j];
                if !g.is_ring_zero() && !out[k - j].is_ring_zero() {
                    acc = acc.sub_ref(&g.mul_ref(&out[k - j]));
                }
            }
            out.push(acc.mul_ref(&inv0));
        }
        Ok(Self { coeffs: out })
    }

    /// Square root by Newton iteration `y ← (y + f/y)/2`, doubling the
    /// number of correct terms at each step.
    ///
    /// The constant term of the result is the canonical root of the constant
    /// term of `self` (positive leading coefficient), and must be a unit.
    pub fn sqrt(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let root0 = self.coeffs[0]
            .square_root()
            .ok_or_else(|| Error::domain("constant term is not a perfect square"))?;
        if root0.inverse().is_none() {
            return Err(Error::domain(
                "square root of the constant term is not invertible in the coefficient ring",
            ));
        }
        let half = C::from_rational(&rat(1, 2));
        let mut y = Self::constant(1, root0);
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            let y_ext = y.with_order(prec);
            let quotient = self.with_order(prec).div(&y_ext)?;
            y = (&y_ext + &quotient).scale(&half);
        }
        Ok(y)
    }

    /// Evaluate each coefficient with `f`, producing a series over another ring.
    pub fn map<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> PolySeries<D> {
        PolySeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<C: Coefficient> Add<&PolySeries<C>> for &PolySeries<C> {
    type Output = PolySeries<C>;
    fn add(self, rhs: &PolySeries<C>) -> PolySeries<C> {
        PolySeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }
}

impl<C: Coefficient> Sub<&PolySeries<C>> for &PolySeries<C> {
    type Output = PolySeries<C>;
    fn sub(self, rhs: &PolySeries<C>) -> PolySeries<C> {
        PolySeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }
}

impl<C: Coefficient> Mul<&PolySeries<C>> for &PolySeries<C> {
    type Output = PolySeries<C>;
    fn mul(self, rhs: &PolySeries<C>) -> PolySeries<C> {
        let n = self.order().min(rhs.order());
        let mut out: Vec<C> = (0..n).map(|_| C::ring_zero()).collect();
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_ring_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_ring_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        PolySeries { coeffs: out }
    }
}

impl<C: Coefficient> Neg for &PolySeries<C> {
    type Output = PolySeries<C>;
    fn neg(self) -> PolySeries<C> {
        PolySeries {
            coeffs: self.coeffs.iter().map(C::neg_ref).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{RatFunc, RatPoly};
    use num_rational::BigRational;

    fn poly(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn sqrt_of_one_minus_4qz2() {
        // 1 - 4q z^2  ->  1 - 2q z^2 - 2q^2 z^4
        let f = PolySeries::new(5, alloc::vec![poly(&[1]), poly(&[]), poly(&[0, -4])]);
        let g = f.sqrt().unwrap();
        let expected = PolySeries::new(
            5,
            alloc::vec![poly(&[1]), poly(&[]), poly(&[0, -2]), poly(&[]), poly(&[0, 0, -2])],
        );
        assert_eq!(g, expected);
    }

    #[test]
    fn sqrt_of_one() {
        let f: PolySeries<RatPoly> = PolySeries::one(6);
        assert_eq!(f.sqrt().unwrap(), f);
    }

    #[test]
    fn sqrt_with_polynomial_constant_term() {
        // (q-1)^2 - 2(q+1) z + z^2 over Q(q), order 3
        let f = PolySeries::new(
            3,
            alloc::vec![
                RatFunc::from_poly(poly(&[1, -2, 1])),
                RatFunc::from_poly(poly(&[-2, -2])),
                RatFunc::from_poly(poly(&[1])),
            ],
        );
        let g = f.sqrt().unwrap();
        let qm1 = poly(&[-1, 1]);
        assert_eq!(g.coeff(0), &RatFunc::from_poly(qm1.clone()));
        assert_eq!(g.coeff(1), &RatFunc::new(poly(&[-1, -1]), qm1.clone()).unwrap());
        assert_eq!(g.coeff(2), &RatFunc::new(poly(&[0, -2]), &(&qm1 * &qm1) * &qm1).unwrap());
        assert_eq!(&g * &g, f);
    }

    #[test]
    fn polynomial_ring_rejects_non_unit_root() {
        let f = PolySeries::new(3, alloc::vec![poly(&[1, -2, 1]), poly(&[-2, -2]), poly(&[1])]);
        assert!(f.sqrt().is_err());
        let g = PolySeries::new(3, alloc::vec![poly(&[0, 1]), poly(&[1])]);
        assert!(g.sqrt().is_err());
    }

    #[test]
    fn division_and_inverse() {
        let one_minus_z: PolySeries<BigRational> =
            PolySeries::new(6, alloc::vec![rat(1, 1), rat(-1, 1)]);
        let geometric = one_minus_z.inverse().unwrap();
        assert!(geometric.coeffs().iter().all(|c| *c == rat(1, 1)));
        let back = PolySeries::one(6).div(&geometric).unwrap();
        assert_eq!(back, one_minus_z);
        let bad: PolySeries<BigRational> = PolySeries::new(3, alloc::vec![rat(0, 1), rat(1, 1)]);
        assert!(bad.inverse().is_err());
    }

    #[test]
    fn mixed_orders_truncate_to_the_smaller() {
        let a: PolySeries<BigRational> = PolySeries::one(3);
        let b: PolySeries<BigRational> = PolySeries::one(5);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!(a.shift(2).coeffs(), &[rat(0, 1), rat(0, 1), rat(1, 1)]);
    }
}
