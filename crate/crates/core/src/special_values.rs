//! Exact special values `ζ_q(k)` at every integer `k`.
//!
//! Negative values are integer polynomials in `q` and are computed by three
//! independent routes (a closed double sum, the binomial transform of the
//! closed-walk counts, and the series expansion of `G_-`). Positive values are
//! rational in `q`; they are carried by the palindromic polynomials `P_n`,
//! built from an integer recursion and cross-checked against the closed form
//! of `G_+` expanded over `ℚ(q)`.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{binomial, rat, Degree, IntPoly, PolySeries, RatPoly};
use crate::{Error, Result};

/// Default depth of the `P_n` and `ζ_q(-m)` tables.
pub const DEFAULT_DEPTH: usize = 50;

/// Route used for `ζ_q(-m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NegMethod {
    /// Closed double sum over products of binomial coefficients.
    Cjks,
    /// `Σ_j C(m,j) (-1)^j c_q(j) (q+1)^{m-j}` over closed-walk counts.
    Binomial,
    /// Coefficients of the algebraic closed form of `G_-`.
    Series,
}

impl NegMethod {
    pub const ALL: [NegMethod; 3] = [NegMethod::Cjks, NegMethod::Binomial, NegMethod::Series];

    pub fn name(self) -> &'static str {
        match self {
            NegMethod::Cjks => "cjks",
            NegMethod::Binomial => "binomial",
            NegMethod::Series => "series",
        }
    }
}

fn q_poly() -> RatPoly {
    RatPoly::from_i64s(&[0, 1])
}

fn into_int_poly(p: &RatPoly, what: &str, index: usize) -> Result<IntPoly> {
    p.to_int_poly().ok_or_else(|| {
        Error::consistency(alloc::format!("{what}[{index}] = {} is not integral", p.display("q")))
    })
}

/// Closed-walk counts `c_q(0..=n_max)` at the root of the tree, as integer
/// polynomials in `q`, from the series expansion of
/// `F(z) = ((q+1)√(1-4qz²) - (q-1)) / (2(1-(q+1)²z²))` with `F(0) = 1`.
pub fn moments_series(n_max: usize) -> Result<Vec<IntPoly>> {
    let order = n_max + 1;
    let radicand = PolySeries::new(
        order,
        alloc::vec![RatPoly::one(), RatPoly::zero(), RatPoly::from_i64s(&[0, -4])],
    );
    let root = radicand.sqrt()?;
    let q_plus_1 = RatPoly::from_i64s(&[1, 1]);
    let numer = &root.scale(&q_plus_1) - &PolySeries::constant(order, RatPoly::from_i64s(&[-1, 1]));
    let denom = PolySeries::new(
        order,
        alloc::vec![RatPoly::one(), RatPoly::zero(), -&(&q_plus_1 * &q_plus_1)],
    );
    let f = numer.div(&denom)?.scale(&RatPoly::constant(rat(1, 2)));
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| into_int_poly(c, "c_q", n))
        .collect()
}

/// Number of closed walks of length `n` from the root of `T_{q+1}`, by dynamic
/// programming over the distance from the root.
pub fn moments_bruteforce(q: u64, n: usize) -> BigInt {
    // walks[d] = number of walks of the current length ending at distance d
    let mut walks = alloc::vec![BigInt::zero(); n + 2];
    walks[0] = BigInt::one();
    for _ in 0..n {
        let mut next = alloc::vec![BigInt::zero(); n + 2];
        for d in 0..=n {
            if walks[d].is_zero() {
                continue;
            }
            let out_degree = if d == 0 { q + 1 } else { q };
            next[d + 1] += &walks[d] * out_degree;
            if d > 0 {
                next[d - 1] += &walks[d];
            }
        }
        walks = next;
    }
    walks.swap_remove(0)
}

/// `ζ_q(-m)` as a polynomial in `q`.
pub fn zeta_neg(m: usize, method: NegMethod) -> Result<IntPoly> {
    match method {
        NegMethod::Cjks => Ok(zeta_neg_cjks(m)),
        _ => Ok(zeta_neg_table(m, method)?.swap_remove(m)),
    }
}

/// `ζ_q(0), ζ_q(-1), …, ζ_q(-m_max)` by the given route.
pub fn zeta_neg_table(m_max: usize, method: NegMethod) -> Result<Vec<IntPoly>> {
    match method {
        NegMethod::Cjks => Ok((0..=m_max).map(zeta_neg_cjks).collect()),
        NegMethod::Binomial => {
            let moments = moments_series(m_max)?;
            Ok((0..=m_max).map(|m| zeta_neg_binomial(m, &moments)).collect())
        }
        NegMethod::Series => zeta_neg_series(m_max),
    }
}

fn zeta_neg_cjks(m: usize) -> IntPoly {
    let mu = m as u64;
    let mut coeffs = alloc::vec![BigInt::zero(); m + 1];
    for k in 0..=m {
        let c = binomial(mu, k as u64);
        coeffs[m - k] += &c * &c;
    }
    let mut inner = alloc::vec![BigInt::zero(); m + 1];
    for j in 1..=m / 2 {
        for k in 0..=m - 2 * j {
            inner[m - 2 * j - k] += binomial(mu, k as u64) * binomial(mu, (2 * j + k) as u64);
        }
    }
    &IntPoly::new(coeffs) - &(&IntPoly::linear(-1) * &IntPoly::new(inner))
}

fn zeta_neg_binomial(m: usize, moments: &[IntPoly]) -> IntPoly {
    let q_plus_1 = IntPoly::linear(1);
    let mut acc = IntPoly::zero();
    for (j, c) in moments.iter().enumerate().take(m + 1) {
        let mut term = c * &q_plus_1.pow((m - j) as u32);
        term = term.scale(&binomial(m as u64, j as u64));
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Coefficients of
/// `G_-(z) = ((q+1)√(1-2(q+1)z+(q-1)²z²) + z(q²-1) - (q-1)) / (2(1-2(q+1)z))`.
fn zeta_neg_series(m_max: usize) -> Result<Vec<IntPoly>> {
    let order = m_max + 1;
    let q_plus_1 = RatPoly::from_i64s(&[1, 1]);
    let q_minus_1 = RatPoly::from_i64s(&[-1, 1]);
    let radicand = PolySeries::new(
        order,
        alloc::vec![
            RatPoly::one(),
            q_plus_1.scale(&rat(-2, 1)),
            &q_minus_1 * &q_minus_1,
        ],
    );
    let root = radicand.sqrt()?;
    let affine = PolySeries::new(order, alloc::vec![-&q_minus_1, &q_plus_1 * &q_minus_1]);
    let numer = &root.scale(&q_plus_1) + &affine;
    let denom = PolySeries::new(order, alloc::vec![RatPoly::one(), q_plus_1.scale(&rat(-2, 1))]);
    let g = numer.div(&denom)?.scale(&RatPoly::constant(rat(1, 2)));
    g.coeffs()
        .iter()
        .enumerate()
        .map(|(m, c)| into_int_poly(c, "zeta_q(-m)", m))
        .collect()
}

/// `P_1, …, P_{n_max}` (index `n-1` holds `P_n`) from the integer recursion
/// `P_{n+1} = 2q Σ_{j=1}^{n} P_j P_{n+1-j} - q(q-1)² Σ_{j=1}^{n-1} P_j P_{n-j} + (q-1)² P_n`.
pub fn p_polynomials(n_max: usize) -> Vec<IntPoly> {
    let two_q = IntPoly::from_i64s(&[0, 2]);
    let sq = IntPoly::from_i64s(&[1, -2, 1]);
    let q_sq = &IntPoly::from_i64s(&[0, 1]) * &sq;
    let mut p: Vec<IntPoly> = Vec::with_capacity(n_max);
    if n_max == 0 {
        return p;
    }
    p.push(IntPoly::one());
    for n in 1..n_max {
        // p[j-1] = P_j
        let mut conv_n = IntPoly::zero();
        for j in 1..=n {
            conv_n = &conv_n + &(&p[j - 1] * &p[n - j]);
        }
        let mut conv_prev = IntPoly::zero();
        for j in 1..n {
            conv_prev = &conv_prev + &(&p[j - 1] * &p[n - j - 1]);
        }
        let next = &(&(&two_q * &conv_n) - &(&q_sq * &conv_prev)) + &(&sq * &p[n - 1]);
        p.push(next);
    }
    p
}

/// `P_1, …, P_{n_max}` from the closed form
/// `G_+(z) = ((q+1)√((q-1)² - 2(q+1)z + z²) + z(q-1) - (q²-1)) / (2(z - 2(q+1)))`.
///
/// Substituting `z = (q-1)²(q+1)w` turns this into
/// `G_+ = (q-1) H(w)` with
/// `H(w) = -(S(w) - 1 + (q-1)²w) / (4(1 - (q-1)²w/2))`,
/// `S(w) = √(1 - 2(q+1)²w + (q-1)²(q+1)²w²)`,
/// whose coefficients lie in `ℚ[q]`. Then `P_n = [wⁿ]H / q`.
///
/// Slower than [`p_polynomials`]; kept as an independent cross-check.
pub fn p_polynomials_closed_form(n_max: usize) -> Result<Vec<IntPoly>> {
    let order = n_max + 1;
    let q_minus_1_sq = RatPoly::from_i64s(&[1, -2, 1]);
    let q_plus_1_sq = RatPoly::from_i64s(&[1, 2, 1]);
    let radicand = PolySeries::new(
        order,
        alloc::vec![
            RatPoly::one(),
            q_plus_1_sq.scale(&rat(-2, 1)),
            &q_minus_1_sq * &q_plus_1_sq,
        ],
    );
    let s = radicand.sqrt()?;
    let numer = &s + &PolySeries::new(order, alloc::vec![RatPoly::from_i64s(&[-1]), q_minus_1_sq.clone()]);
    let denom = PolySeries::new(
        order,
        alloc::vec![RatPoly::from_i64s(&[4]), q_minus_1_sq.scale(&rat(-2, 1))],
    );
    let h = numer.div(&denom)?.scale(&RatPoly::from_i64s(&[-1]));
    if !h.coeff(0).is_zero() {
        return Err(Error::consistency("G_+(0) != 0"));
    }
    (1..=n_max)
        .map(|n| {
            let (p, rem) = h.coeff(n).div_rem(&q_poly());
            if !rem.is_zero() {
                return Err(Error::consistency(alloc::format!(
                    "[w^{n}]H = {} is not divisible by q",
                    h.coeff(n).display("q")
                )));
            }
            into_int_poly(&p, "P", n)
        })
        .collect()
}

fn check_q(q: &BigInt) -> Result<()> {
    if *q < BigInt::from(2) {
        return Err(Error::domain(alloc::format!("q must be at least 2, got {q}")));
    }
    Ok(())
}

/// `q P_n(q) / ((q-1)^{2n-1} (q+1)^n)` for a given `P_n`.
pub fn zeta_pos_from(p_n: &IntPoly, q: &BigInt, n: usize) -> Result<BigRational> {
    check_q(q)?;
    if n == 0 {
        return Err(Error::domain("positive values start at n = 1"));
    }
    let qm1: BigInt = q - 1;
    let qp1: BigInt = q + 1;
    let den = num_traits::pow(qm1, 2 * n - 1) * num_traits::pow(qp1, n);
    Ok(BigRational::new(q * p_n.eval_int(q), den))
}

/// Exact `ζ_q(n)` for `q ≥ 2`, `n ≥ 1`.
pub fn zeta_pos(q: &BigInt, n: usize) -> Result<BigRational> {
    check_q(q)?;
    if n == 0 {
        return Err(Error::domain("positive values start at n = 1"));
    }
    let p = p_polynomials(n);
    zeta_pos_from(&p[n - 1], q, n)
}

/// `a_0, …, a_{n_max}` with `a_n = ζ_q(n)` from the quadratic recursion
/// `(q²-1) a_n = 2(q+1) Σ_{j=1}^{n-1} a_j a_{n-j} - Σ_{j=1}^{n-2} a_j a_{n-1-j} + (q-1) a_{n-1}`.
pub fn a_sequence(q: &BigInt, n_max: usize) -> Result<Vec<BigRational>> {
    check_q(q)?;
    let qr = BigRational::from_integer(q.clone());
    let one = BigRational::one();
    let two_qp1 = (&qr + &one) * BigRational::from_integer(2.into());
    let qm1 = &qr - &one;
    let inv = (&qr * &qr - &one).recip();
    let mut a: Vec<BigRational> = alloc::vec![one];
    if n_max >= 1 {
        a.push(&qr * &inv);
    }
    for n in 2..=n_max {
        let conv: BigRational = (1..n).map(|j| &a[j] * &a[n - j]).sum();
        let conv_prev: BigRational = (1..n - 1).map(|j| &a[j] * &a[n - 1 - j]).sum();
        let rhs = &two_qp1 * conv - conv_prev + &qm1 * &a[n - 1];
        a.push(rhs * &inv);
    }
    Ok(a)
}

/// Exact special values for one `q`, or symbolic negative values only.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialValueTable {
    pub q: Option<BigInt>,
    /// `neg_values[m] = ζ_q(-m)` as a polynomial in `q`.
    pub neg_values: Vec<IntPoly>,
    /// `pos_values[n-1] = ζ_q(n)` at the concrete `q`; empty when symbolic.
    pub pos_values: Vec<BigRational>,
    /// `p_polys[n-1] = P_n`.
    pub p_polys: Vec<IntPoly>,
}

impl SpecialValueTable {
    pub fn build(q: Option<BigInt>, m_max: usize, n_max: usize) -> Result<Self> {
        if let Some(q) = &q {
            check_q(q)?;
        }
        let neg_values = zeta_neg_table(m_max, NegMethod::Cjks)?;
        let p_polys = p_polynomials(n_max);
        let pos_values = match &q {
            Some(q) => p_polys
                .iter()
                .enumerate()
                .map(|(i, p)| zeta_pos_from(p, q, i + 1))
                .collect::<Result<_>>()?,
            None => Vec::new(),
        };
        Ok(Self {
            q,
            neg_values,
            pos_values,
            p_polys,
        })
    }

    /// `ζ_q(k)` for any integer `k` covered by the table.
    pub fn value(&self, k: i64) -> Option<BigRational> {
        let q = self.q.as_ref()?;
        if k <= 0 {
            let p = self.neg_values.get(k.unsigned_abs() as usize)?;
            Some(BigRational::from_integer(p.eval_int(q)))
        } else {
            self.pos_values.get(k as usize - 1).cloned()
        }
    }

    /// `a_{-n} - 2(q+1)a_{1-n} - (q-1)^{2n-1} [a_{n-1} - 2(q+1)a_n]`, zero when
    /// the two-step relation between positive and negative values holds.
    pub fn two_step_defect(&self, n: i64) -> Result<BigRational> {
        let q = self.q.as_ref().ok_or_else(|| Error::domain("table has no concrete q"))?;
        let get = |k: i64| {
            self.value(k)
                .ok_or_else(|| Error::domain(alloc::format!("index {k} outside the table")))
        };
        let two_qp1 = BigRational::from_integer((q + 1) * 2);
        let qm1 = BigRational::from_integer(q - 1);
        let exp = i32::try_from(2 * n - 1).map_err(|_| Error::domain("n too large"))?;
        let lhs = get(-n)? - &two_qp1 * get(1 - n)?;
        let rhs = qm1.pow(exp) * (get(n - 1)? - &two_qp1 * get(n)?);
        Ok(lhs - rhs)
    }
}

/// Two-step defect at a single `(q, n)`; builds a table just large enough.
pub fn two_step_defect(q: &BigInt, n: i64) -> Result<BigRational> {
    let depth = n.unsigned_abs() as usize + 1;
    SpecialValueTable::build(Some(q.clone()), depth, depth)?.two_step_defect(n)
}

/// Rational roots of a monic integer polynomial. By the rational root
/// theorem they are integer divisors of the constant term; candidates are
/// found by trial division, so the constant term must stay below `2^40`.
pub fn monic_rational_roots(p: &IntPoly) -> Result<Vec<BigInt>> {
    if !p.is_monic() {
        return Err(Error::domain("polynomial is not monic"));
    }
    let Degree::Finite(_) = p.degree() else {
        unreachable!("monic implies nonzero")
    };
    let lowest = p.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut roots = Vec::new();
    if lowest > 0 {
        roots.push(BigInt::zero());
    }
    let a0 = p.coeff(lowest).abs();
    let bound: u64 = 1 << 40;
    let a0: u64 = a0
        .to_string()
        .parse()
        .ok()
        .filter(|v| *v < bound)
        .ok_or_else(|| Error::domain("constant term too large for trial division"))?;
    for d in 1..=a0 {
        if d * d > a0 {
            break;
        }
        if a0 % d != 0 {
            continue;
        }
        let mut cands = alloc::vec![d, a0 / d];
        cands.dedup();
        for c in cands {
            for r in [BigInt::from(c), -BigInt::from(c)] {
                if p.eval_int(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}
