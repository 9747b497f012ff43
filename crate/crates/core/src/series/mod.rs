//! Exact truncated power series and rational generating functions over Q.

mod forms;

pub use forms::{gf_coefficients, star_identity_holds, GfForm, UnknownForm};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("divisor has zero constant term")]
    ZeroConstantTerm,
    #[error("series must have zero constant term")]
    NonzeroConstantTerm,
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Coefficients `c_0 ..= c_N`; the order `N` is the highest exponent kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * z^k`.
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The formal variable `z`.
    pub fn z(order: usize) -> Self {
        Self::monomial(BigRational::one(), 1, order)
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rational(c)).collect(), order)
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    /// Integer coefficients, or `None` if any coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `1 / (1 - self)`; requires a zero constant term.
    pub fn star(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        series_div(&Self::one(self.order()), &(&Self::one(self.order()) - self))
    }
}

/// Truncated to the smaller of the two orders.
pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
    TruncatedSeries { coeffs }
}

pub fn series_sub(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
    TruncatedSeries { coeffs }
}

/// Cauchy product, truncated to the smaller order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let order = a.order().min(b.order());
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (i, x) in a.coeffs[..=order].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs[..=order - i].iter().enumerate() {
            if !y.is_zero() {
                coeffs[i + j] += x * y;
            }
        }
    }
    TruncatedSeries { coeffs }
}

/// `a / b` by forward substitution: `c_n = (a_n - sum_{k=1..n} b_k c_{n-k}) / b_0`.
pub fn series_div(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
) -> Result<TruncatedSeries, SeriesError> {
    if b.coeffs[0].is_zero() {
        return Err(SeriesError::ZeroConstantTerm);
    }
    let order = a.order().min(b.order());
    let inv_b0 = b.coeffs[0].recip();
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = a.coeffs[n].clone();
        for k in 1..=n {
            if !b.coeffs[k].is_zero() {
                acc -= &b.coeffs[k] * &coeffs[n - k];
            }
        }
        coeffs.push(acc * &inv_b0);
    }
    Ok(TruncatedSeries { coeffs })
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        series_add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        series_sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        series_mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_coeffs(&self.coeffs))
    }
}

/// Dense polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::new(Vec::new());
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        Polynomial::new(coeffs)
    }
}

/// `numerator / denominator` with `denominator(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalGF {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self, SeriesError> {
        if denominator.coeff(0).is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        Ok(RationalGF {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn coefficients(&self, order: usize) -> Vec<BigRational> {
        rational_coeffs(self, order)
    }
}

/// Coefficients `0..=order` via the linear recurrence given by the
/// denominator; `O(order * deg)` exact operations.
pub fn rational_coeffs(gf: &RationalGF, order: usize) -> Vec<BigRational> {
    let q = gf.denominator.coeffs();
    let inv_q0 = q[0].recip();
    let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = gf.numerator.coeff(n);
        for (k, qk) in q.iter().enumerate().skip(1).take(n) {
            if !qk.is_zero() {
                acc -= qk * &out[n - k];
            }
        }
        out.push(acc * &inv_q0);
    }
    out
}

/// Comma-separated exact values; integers print without a denominator.
pub fn format_coeffs(coeffs: &[BigRational]) -> String {
    coeffs
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// `{"form": name, "coeffs": ["1","0",...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffRecord {
    pub form: String,
    pub coeffs: Vec<String>,
}

impl CoeffRecord {
    pub fn new(form: &str, coeffs: &[BigRational]) -> Self {
        CoeffRecord {
            form: form.to_string(),
            coeffs: coeffs.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn add_mul_basics() {
        let a = TruncatedSeries::from_ints(&[1, 1], 4);
        let b = TruncatedSeries::from_ints(&[1, -1], 4);
        assert_eq!(ints(&(&a * &b)), vec![1, 0, -1, 0, 0]);
        assert_eq!(ints(&(&a + &b)), vec![2, 0, 0, 0, 0]);

        let z2 = TruncatedSeries::from_ints(&[0, 0, 1], 6);
        let geo = TruncatedSeries::from_ints(&[1; 7], 6);
        assert_eq!(ints(&(&z2 * &geo)), vec![0, 0, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let a = TruncatedSeries::from_ints(&[1, 2, 3], 2);
        let b = TruncatedSeries::from_ints(&[1, 1, 1, 1, 1], 4);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn division() {
        let one = TruncatedSeries::one(6);
        let q = TruncatedSeries::from_ints(&[1, -1], 6);
        assert_eq!(ints(&series_div(&one, &q).unwrap()), vec![1; 7]);

        let fib = TruncatedSeries::from_ints(&[1, -1, -1], 6);
        assert_eq!(
            ints(&series_div(&one, &fib).unwrap()),
            vec![1, 1, 2, 3, 5, 8, 13]
        );
        let z2 = TruncatedSeries::from_ints(&[0, 0, 1], 6);
        assert_eq!(
            ints(&series_div(&z2, &fib).unwrap()),
            vec![0, 0, 1, 1, 2, 3, 5]
        );
        assert_eq!(
            series_div(&one, &TruncatedSeries::z(6)),
            Err(SeriesError::ZeroConstantTerm)
        );
    }

    #[test]
    fn division_by_non_monic() {
        // 1 / (2 - z) = sum z^n / 2^(n+1)
        let q = TruncatedSeries::from_ints(&[2, -1], 3);
        let r = series_div(&TruncatedSeries::one(3), &q).unwrap();
        assert_eq!(r.to_string(), "1/2, 1/4, 1/8, 1/16");
        assert!(r.to_integers().is_none());
    }

    #[test]
    fn rational_gf_streams() {
        let dyck = RationalGF::new(
            Polynomial::from_ints(&[1, -2]),
            Polynomial::from_ints(&[1, -3, 1]),
        )
        .unwrap();
        assert_eq!(format_coeffs(&dyck.coefficients(5)), "1, 1, 2, 5, 13, 34");

        let den = &Polynomial::from_ints(&[1, 1]) * &Polynomial::from_ints(&[1, -2]);
        let bundle = RationalGF::new(Polynomial::from_ints(&[1, -1, -1]), den).unwrap();
        assert_eq!(format_coeffs(&bundle.coefficients(5)), "1, 0, 1, 1, 3, 5");

        let unit = RationalGF::new(Polynomial::from_ints(&[1]), Polynomial::from_ints(&[1])).unwrap();
        assert_eq!(format_coeffs(&unit.coefficients(3)), "1, 0, 0, 0");

        assert_eq!(
            RationalGF::new(Polynomial::from_ints(&[1]), Polynomial::from_ints(&[0, 1])),
            Err(SeriesError::ZeroConstantTerm)
        );
    }

    #[test]
    fn polynomial_trims_and_multiplies() {
        let p = Polynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Polynomial::from_ints(&[0]).degree(), None);
        let sq = &p * &p;
        assert_eq!(sq, Polynomial::from_ints(&[1, 4, 4]));
    }

    #[test]
    fn star_requires_zero_constant() {
        assert_eq!(
            TruncatedSeries::one(3).star(),
            Err(SeriesError::NonzeroConstantTerm)
        );
        assert_eq!(ints(&TruncatedSeries::z(4).star().unwrap()), vec![1; 5]);
    }

    #[test]
    fn coeff_record_json() {
        let r = CoeffRecord::new("bundle", &[rational(1), rational(0), BigRational::new(1.into(), 4.into())]);
        assert_eq!(r.to_json(), r#"{"form":"bundle","coeffs":["1","0","1/4"]}"#);
    }
}
