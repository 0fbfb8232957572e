//! Two-coloured Dyck words and the block-weight polynomials `Q_n`.
//!
//! A word over `{U, B, R}` is a Dyck word when, reading `U = +1` and
//! `B = R = −1`, every prefix sum is nonnegative and the total is zero. The
//! weight `h(w)` is the number of `U`s plus the number of maximal `B` runs
//! minus the number of maximal `R` runs, and `Q_n(t) = Σ t^{h(w)}` over words
//! of half-length `n`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::IntPoly;
use crate::error::{Error, Result};
use crate::special_values::p_polynomials;

/// Largest half-length accepted by exhaustive enumeration.
pub const BRUTEFORCE_CAP: usize = 9;
/// Largest half-length accepted by the dynamic program.
pub const DP_CAP: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    U,
    B,
    R,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::U => 'U',
            Letter::B => 'B',
            Letter::R => 'R',
        }
    }

    fn step(self) -> isize {
        match self {
            Letter::U => 1,
            Letter::B | Letter::R => -1,
        }
    }
}

/// A validated two-coloured Dyck word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord {
    letters: Vec<Letter>,
}

fn check_letters(letters: &[Letter]) -> Result<()> {
    let mut height = 0isize;
    for (i, l) in letters.iter().enumerate() {
        height += l.step();
        if height < 0 {
            return Err(Error::domain(alloc::format!(
                "prefix of length {} goes below zero",
                i + 1
            )));
        }
    }
    if height != 0 {
        return Err(Error::domain(alloc::format!("word ends at height {height}")));
    }
    Ok(())
}

impl DyckWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        check_letters(&letters)?;
        Ok(DyckWord { letters })
    }

    pub fn empty() -> Self {
        DyckWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of `U`s.
    pub fn half_length(&self) -> usize {
        self.letters.len() / 2
    }

    pub fn weight(&self) -> WeightProfile {
        profile(&self.letters)
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                'U' => Ok(Letter::U),
                'B' => Ok(Letter::B),
                'R' => Ok(Letter::R),
                other => Err(Error::domain(alloc::format!("unexpected letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckWord::new(letters)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters.iter().map(|l| l.as_char()).collect();
        f.write_str(&s)
    }
}

/// Block statistics of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    pub n: usize,
    pub r_b: usize,
    pub r_r: usize,
    pub h: usize,
}

fn profile(letters: &[Letter]) -> WeightProfile {
    let mut n = 0;
    let mut r_b = 0;
    let mut r_r = 0;
    let mut prev = None;
    for &l in letters {
        match l {
            Letter::U => n += 1,
            Letter::B if prev != Some(Letter::B) => r_b += 1,
            Letter::R if prev != Some(Letter::R) => r_r += 1,
            _ => {}
        }
        prev = Some(l);
    }
    // every R run follows at least one U, so r_r <= n
    WeightProfile {
        n,
        r_b,
        r_r,
        h: n + r_b - r_r,
    }
}

/// Weight profile of an arbitrary letter sequence, validated first.
pub fn weight_h(letters: &[Letter]) -> Result<WeightProfile> {
    check_letters(letters)?;
    Ok(profile(letters))
}

fn check_bruteforce_cap(n: usize) -> Result<()> {
    if n > BRUTEFORCE_CAP {
        return Err(Error::CapExceeded {
            what: "Dyck enumeration half-length",
            requested: n,
            cap: BRUTEFORCE_CAP,
            hint: "use the dp method for larger n",
        });
    }
    Ok(())
}

/// Lexicographic cursor over Dyck words of a fixed half-length.
struct Cursor {
    word: Vec<Letter>,
    heights: Vec<usize>,
}

impl Cursor {
    fn first(n: usize) -> Self {
        let mut word = vec![Letter::U; n];
        word.resize(2 * n, Letter::B);
        let mut c = Cursor {
            heights: vec![0; 2 * n + 1],
            word,
        };
        c.refresh_heights(0);
        c
    }

    fn refresh_heights(&mut self, from: usize) {
        for i in from..self.word.len() {
            self.heights[i + 1] = (self.heights[i] as isize + self.word[i].step()) as usize;
        }
    }

    /// Moves to the next word; false once the last word has been passed.
    fn advance(&mut self) -> bool {
        let len = self.word.len();
        for i in (0..len).rev() {
            let before = self.heights[i];
            let next = match self.word[i] {
                Letter::U if before >= 1 => Letter::B,
                Letter::B => Letter::R,
                _ => continue,
            };
            self.word[i] = next;
            let h = before - 1;
            let rem = len - i - 1;
            let ups = (rem - h) / 2;
            for (k, slot) in self.word[i + 1..].iter_mut().enumerate() {
                *slot = if k < ups { Letter::U } else { Letter::B };
            }
            self.refresh_heights(i);
            return true;
        }
        false
    }
}

/// Streams the Dyck words of half-length `n` in lexicographic order with
/// `U < B < R`.
pub struct DyckIter {
    cursor: Cursor,
    started: bool,
    done: bool,
}

impl Iterator for DyckIter {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        if self.done {
            return None;
        }
        if self.started && !self.cursor.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(DyckWord {
            letters: self.cursor.word.clone(),
        })
    }
}

pub fn enumerate_dyck(n: usize) -> Result<DyckIter> {
    check_bruteforce_cap(n)?;
    Ok(DyckIter {
        cursor: Cursor::first(n),
        started: false,
        done: false,
    })
}

/// Visits every Dyck word of half-length `n` without allocating per word.
pub fn for_each_dyck<F: FnMut(&[Letter])>(n: usize, mut f: F) -> Result<()> {
    check_bruteforce_cap(n)?;
    let mut cursor = Cursor::first(n);
    loop {
        f(&cursor.word);
        if !cursor.advance() {
            return Ok(());
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QMethod {
    Bruteforce,
    Dp,
}

impl QMethod {
    pub fn name(self) -> &'static str {
        match self {
            QMethod::Bruteforce => "bruteforce",
            QMethod::Dp => "dp",
        }
    }
}

pub fn q_polynomial(n: usize, method: QMethod) -> Result<IntPoly> {
    match method {
        QMethod::Bruteforce => q_bruteforce(n),
        QMethod::Dp => q_dp(n),
    }
}

fn q_bruteforce(n: usize) -> Result<IntPoly> {
    let mut counts = vec![0u64; 2 * n + 1];
    for_each_dyck(n, |w| counts[profile(w).h] += 1)?;
    Ok(IntPoly::new(counts.into_iter().map(BigInt::from).collect()))
}

const START: usize = 0;

fn last_index(l: Letter) -> usize {
    match l {
        Letter::U => 1,
        Letter::B => 2,
        Letter::R => 3,
    }
}

/// Prefix dynamic program over (height, last letter), one weight polynomial
/// per state. The weight of a prefix never drops below zero because each
/// `R` run is preceded by at least as many `U`s, so no exponent shift is
/// needed.
fn q_dp(n: usize) -> Result<IntPoly> {
    if n > DP_CAP {
        return Err(Error::CapExceeded {
            what: "Q polynomial half-length",
            requested: n,
            cap: DP_CAP,
            hint: "Q_n equals P_{n+1}; use the P recursion for larger n",
        });
    }
    let len = 2 * n;
    let width = len + 1;
    // table[height][last] = coefficients by weight
    let empty = || vec![vec![BigInt::zero(); width]; 4];
    let mut table = vec![empty(); n + 1];
    table[0][START][0] = BigInt::from(1);
    for step in 0..len {
        let remaining_after = len - step - 1;
        let mut next = vec![empty(); n + 1];
        for (height, row) in table.iter().enumerate() {
            for (last, coeffs) in row.iter().enumerate() {
                if coeffs.iter().all(Zero::is_zero) {
                    continue;
                }
                for letter in [Letter::U, Letter::B, Letter::R] {
                    let new_height = height as isize + letter.step();
                    if new_height < 0 || new_height as usize > remaining_after {
                        continue;
                    }
                    let shift: isize = match letter {
                        Letter::U => 1,
                        Letter::B if last != last_index(Letter::B) => 1,
                        Letter::R if last != last_index(Letter::R) => -1,
                        _ => 0,
                    };
                    let dest = &mut next[new_height as usize][last_index(letter)];
                    for (e, c) in coeffs.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let target = e as isize + shift;
                        debug_assert!(target >= 0 && (target as usize) < width);
                        dest[target as usize] += c;
                    }
                }
            }
        }
        table = next;
    }
    let mut total = vec![BigInt::zero(); width];
    for coeffs in &table[0] {
        for (t, c) in total.iter_mut().zip(coeffs) {
            *t += c;
        }
    }
    Ok(IntPoly::new(total))
}

/// The split `w = w₁ U w₂ β` where `w₁` is the prefix up to the last return
/// to height zero before the end and `β` is the final letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition<'a> {
    pub head: &'a [Letter],
    pub inner: &'a [Letter],
    pub last: Letter,
}

impl Decomposition<'_> {
    /// The contribution of the final letter to the weight: `+1` for a new
    /// `B` run, `−1` for a new `R` run, `0` when it extends a run.
    pub fn last_block_correction(&self) -> isize {
        let prev = self.inner.last().copied().unwrap_or(Letter::U);
        match self.last {
            Letter::B if prev != Letter::B => 1,
            Letter::R if prev != Letter::R => -1,
            _ => 0,
        }
    }

    pub fn reassemble(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.head.len() + self.inner.len() + 2);
        out.extend_from_slice(self.head);
        out.push(Letter::U);
        out.extend_from_slice(self.inner);
        out.push(self.last);
        out
    }
}

/// `None` for the empty word.
pub fn decompose(w: &DyckWord) -> Option<Decomposition<'_>> {
    let letters = w.letters();
    let last = *letters.last()?;
    let mut height = 0isize;
    let mut split = 0;
    for (i, l) in letters[..letters.len() - 1].iter().enumerate() {
        height += l.step();
        if height == 0 {
            split = i + 1;
        }
    }
    Some(Decomposition {
        head: &letters[..split],
        inner: &letters[split + 1..letters.len() - 1],
        last,
    })
}

/// First coefficient where two polynomials disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub n: usize,
    /// Which comparison failed, e.g. `"dp vs P"`.
    pub comparison: &'static str,
    pub exponent: usize,
    pub expected: BigInt,
    pub found: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QnReport {
    pub n_max: usize,
    pub bruteforce_max: Option<usize>,
    pub q: Vec<IntPoly>,
    pub discrepancies: Vec<Discrepancy>,
}

impl QnReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn first_discrepancy(&self) -> Option<&Discrepancy> {
        self.discrepancies.first()
    }
}

fn first_difference(expected: &IntPoly, found: &IntPoly) -> Option<(usize, BigInt, BigInt)> {
    let top = expected.coeffs().len().max(found.coeffs().len());
    (0..top).find_map(|e| {
        let (a, b) = (expected.coeff(e), found.coeff(e));
        (a != b).then_some((e, a, b))
    })
}

/// Checks `Q_n = P_{n+1}` by the dynamic program for `n ≤ n_max`, and the
/// dynamic program against enumeration for `n ≤ bruteforce_max`.
pub fn verify_qn_equals_pn(n_max: usize, bruteforce_max: Option<usize>) -> Result<QnReport> {
    let p = p_polynomials(n_max + 1);
    compare_with_p_table(&p, n_max, bruteforce_max)
}

/// As [`verify_qn_equals_pn`] against a caller-supplied table, where
/// `p_table[k]` is `P_{k+1}`.
pub fn compare_with_p_table(
    p_table: &[IntPoly],
    n_max: usize,
    bruteforce_max: Option<usize>,
) -> Result<QnReport> {
    if p_table.len() < n_max + 1 {
        return Err(Error::domain(alloc::format!(
            "need P_1..P_{} but the table has {} entries",
            n_max + 1,
            p_table.len()
        )));
    }
    if let Some(b) = bruteforce_max {
        check_bruteforce_cap(b)?;
    }
    let mut report = QnReport {
        n_max,
        bruteforce_max,
        q: Vec::with_capacity(n_max + 1),
        discrepancies: Vec::new(),
    };
    for (n, expected_q) in p_table.iter().enumerate().take(n_max + 1) {
        let q = q_dp(n)?;
        if let Some((exponent, expected, found)) = first_difference(expected_q, &q) {
            report.discrepancies.push(Discrepancy {
                n,
                comparison: "dp vs P",
                exponent,
                expected,
                found,
            });
        }
        if bruteforce_max.is_some_and(|b| n <= b) {
            let brute = q_bruteforce(n)?;
            if let Some((exponent, expected, found)) = first_difference(&brute, &q) {
                report.discrepancies.push(Discrepancy {
                    n,
                    comparison: "dp vs bruteforce",
                    exponent,
                    expected,
                    found,
                });
            }
        }
        report.q.push(q);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalan;
    use alloc::string::ToString;
    use std::collections::HashSet;

    fn word(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn small_enumerations() {
        let w0: Vec<_> = enumerate_dyck(0).unwrap().collect();
        assert_eq!(w0, vec![DyckWord::empty()]);
        let w1: Vec<String> = enumerate_dyck(1).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(w1, ["UB", "UR"]);
        let w3: Vec<DyckWord> = enumerate_dyck(3).unwrap().collect();
        assert_eq!(w3.len(), 40);
        assert!(w3.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(w3[0].to_string(), "UUUBBB");
        assert_eq!(w3[39].to_string(), "URURUR");
    }

    #[test]
    fn counts_match_catalan() {
        for n in 0..=7usize {
            let mut count = 0u64;
            for_each_dyck(n, |w| {
                assert!(check_letters(w).is_ok());
                count += 1;
            })
            .unwrap();
            assert_eq!(BigInt::from(count), catalan(n as u64) << n);
        }
    }

    #[test]
    fn refuses_above_cap() {
        assert!(matches!(enumerate_dyck(10), Err(Error::CapExceeded { .. })));
        assert!(q_polynomial(10, QMethod::Bruteforce).is_err());
        assert!(q_polynomial(201, QMethod::Dp).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(word("UB").weight().h, 2);
        assert_eq!(word("UR").weight().h, 0);
        assert_eq!(
            word("UUUBUUBRUBRB").weight(),
            WeightProfile { n: 6, r_b: 4, r_r: 2, h: 8 }
        );
        assert_eq!(DyckWord::empty().weight().h, 0);
        assert!(weight_h(&[Letter::B, Letter::U]).is_err());
        assert!("UBU".parse::<DyckWord>().is_err());
        assert!("UX".parse::<DyckWord>().is_err());
    }

    #[test]
    fn q_tables() {
        assert_eq!(q_polynomial(0, QMethod::Dp).unwrap(), IntPoly::from_i64s(&[1]));
        assert_eq!(q_polynomial(1, QMethod::Dp).unwrap(), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(
            q_polynomial(2, QMethod::Bruteforce).unwrap(),
            IntPoly::from_i64s(&[1, 1, 4, 1, 1])
        );
        assert_eq!(
            q_polynomial(4, QMethod::Dp).unwrap(),
            IntPoly::from_i64s(&[1, 6, 26, 46, 66, 46, 26, 6, 1])
        );
        for n in 0..=6 {
            assert_eq!(
                q_polynomial(n, QMethod::Dp).unwrap(),
                q_polynomial(n, QMethod::Bruteforce).unwrap()
            );
        }
    }

    #[test]
    fn q_shape() {
        for n in 0..=12 {
            let q = q_polynomial(n, QMethod::Dp).unwrap();
            assert!(q.is_monic());
            assert_eq!(q.degree().finite(), Some(2 * n));
            assert!(q.is_palindromic().unwrap());
            assert!(q.has_nonnegative_coeffs());
            assert_eq!(q.eval_int(&BigInt::from(1)), catalan(n as u64) << n);
        }
    }

    #[test]
    fn decomposition_is_a_bijection() {
        for n in 1..=6 {
            let words: Vec<DyckWord> = enumerate_dyck(n).unwrap().collect();
            let mut seen = HashSet::new();
            for w in &words {
                let d = decompose(w).unwrap();
                assert_eq!(d.reassemble(), w.letters());
                assert!(check_letters(d.head).is_ok());
                assert!(check_letters(d.inner).is_ok());
                let h = profile(d.head).h as isize
                    + 1
                    + profile(d.inner).h as isize
                    + d.last_block_correction();
                assert_eq!(h, w.weight().h as isize, "{w}");
                assert!(seen.insert((d.head.to_vec(), d.inner.to_vec(), d.last)));
            }
        }
        assert!(decompose(&DyckWord::empty()).is_none());
    }

    #[test]
    fn identity_report() {
        let r = verify_qn_equals_pn(4, None).unwrap();
        assert!(r.passed());
        let r = verify_qn_equals_pn(7, Some(5)).unwrap();
        assert!(r.passed());
        assert_eq!(r.q.len(), 8);
    }

    #[test]
    fn mutation_is_flagged() {
        let mut p = p_polynomials(5);
        let mut c = p[2].coeffs().to_vec();
        c[2] += 1;
        p[2] = IntPoly::new(c);
        let r = compare_with_p_table(&p, 4, None).unwrap();
        assert!(!r.passed());
        let d = r.first_discrepancy().unwrap();
        assert_eq!((d.n, d.exponent), (2, 2));
        assert_eq!(d.expected, BigInt::from(5));
        assert_eq!(d.found, BigInt::from(4));
        assert_eq!(r.discrepancies.len(), 1);
    }
}
