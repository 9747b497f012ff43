use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::{rational_coeffs, series_div, Polynomial, RationalGF, SeriesError, TruncatedSeries};

/// The generating functions available by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfForm {
    /// Mountains by length: `z^2 / (1 - z - z^2)`.
    Mountain,
    /// Sequences of mountains: `(1 - z - z^2) / ((1 + z)(1 - 2z))`.
    Bundle,
    /// Nonempty non-decreasing paths as one rational function.
    Product,
    /// `1 + Product`.
    WithEmpty,
    PartialFractions,
    ContinuedFraction,
    /// `z^2 / (1 - z / (1 - z / (1 - z^2)))`: one backbone group ending in a double edge.
    Gamma,
    /// `1 / (1 - Gamma)`.
    CfClosure,
    /// The form read off the single/double edge trees.
    TreeForm,
    /// Non-decreasing Dyck paths by semilength: `(1 - 2z) / (1 - 3z + z^2)`.
    DyckNondecreasing,
    /// `1 / (1 - z / (1 - z^2))`: tilings whose first tile is a square.
    SquareFirstTilings,
    /// `z / (1 - z / (1 - z^2))`: a single edge or a hanging path.
    EdgeOrPath,
}

impl GfForm {
    pub const ALL: [GfForm; 12] = [
        GfForm::Mountain,
        GfForm::Bundle,
        GfForm::Product,
        GfForm::WithEmpty,
        GfForm::PartialFractions,
        GfForm::ContinuedFraction,
        GfForm::Gamma,
        GfForm::CfClosure,
        GfForm::TreeForm,
        GfForm::DyckNondecreasing,
        GfForm::SquareFirstTilings,
        GfForm::EdgeOrPath,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfForm::Mountain => "mountain",
            GfForm::Bundle => "bundle",
            GfForm::Product => "product",
            GfForm::WithEmpty => "with-empty",
            GfForm::PartialFractions => "partial-fractions",
            GfForm::ContinuedFraction => "continued-fraction",
            GfForm::Gamma => "gamma",
            GfForm::CfClosure => "cf-closure",
            GfForm::TreeForm => "tree-form",
            GfForm::DyckNondecreasing => "dyck-nondecreasing",
            GfForm::SquareFirstTilings => "square-first-tilings",
            GfForm::EdgeOrPath => "edge-or-path",
        }
    }

    /// The forms given directly as a single quotient of polynomials.
    pub fn rational(self) -> Option<RationalGF> {
        let p = Polynomial::from_ints;
        let (num, den) = match self {
            GfForm::Mountain => (p(&[0, 0, 1]), p(&[1, -1, -1])),
            GfForm::Bundle => (p(&[1, -1, -1]), &p(&[1, 1]) * &p(&[1, -2])),
            GfForm::Product => (
                &p(&[0, 0, 1]) * &p(&[1, -1, -1]),
                &(&p(&[1, 1]) * &p(&[1, -1])) * &p(&[1, -2, -1]),
            ),
            GfForm::DyckNondecreasing => (p(&[1, -2]), p(&[1, -3, 1])),
            _ => return None,
        };
        Some(RationalGF::new(num, den).expect("denominators have constant term 1"))
    }

    pub fn expand(self, order: usize) -> TruncatedSeries {
        if let Some(gf) = self.rational() {
            return TruncatedSeries::from_coeffs(rational_coeffs(&gf, order), order);
        }
        let n = order;
        let poly = |c: &[i64]| TruncatedSeries::from_ints(c, n);
        let one = TruncatedSeries::one(n);
        let z = TruncatedSeries::z(n);
        let z2 = poly(&[0, 0, 1]);
        match self {
            GfForm::WithEmpty => &one + &GfForm::Product.expand(n),
            GfForm::PartialFractions => {
                let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
                let half = BigRational::new(BigInt::from(1), BigInt::from(2));
                let a = div(&one, &poly(&[1, -1])).scale(&quarter);
                let b = div(&one, &poly(&[1, 1])).scale(&quarter);
                let c = div(&poly(&[1, -2]), &poly(&[1, -2, -1])).scale(&half);
                &(&a + &b) + &c
            }
            GfForm::ContinuedFraction => {
                continued_fraction(&[one.clone(), z2, z.clone(), z], &poly(&[1, 0, -1]))
            }
            GfForm::Gamma => gamma(n),
            GfForm::CfClosure => gamma(n).star().expect("gamma has no constant term"),
            GfForm::TreeForm => {
                let inner = &one - &div(&z2, &poly(&[1, -1, -1]));
                let middle = &one - &div(&poly(&[0, 1, 1]), &inner);
                let left = div(&z2, &middle);
                let right = div(&one, &inner);
                &one + &(&left * &right)
            }
            GfForm::SquareFirstTilings => {
                continued_fraction(&[one.clone(), z], &poly(&[1, 0, -1]))
            }
            GfForm::EdgeOrPath => continued_fraction(&[z.clone(), z], &poly(&[1, 0, -1])),
            GfForm::Mountain | GfForm::Bundle | GfForm::Product | GfForm::DyckNondecreasing => {
                unreachable!("handled as rational functions")
            }
        }
    }
}

fn div(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    series_div(a, b).expect("denominator has nonzero constant term")
}

/// `n0 / (1 - n1 / (1 - n2 / ( ... / tail)))`, evaluated innermost-out at
/// full order.
fn continued_fraction(numerators: &[TruncatedSeries], tail: &TruncatedSeries) -> TruncatedSeries {
    let (first, rest) = numerators.split_first().expect("at least one numerator");
    let one = TruncatedSeries::one(tail.order());
    let mut denom = tail.clone();
    for num in rest.iter().rev() {
        denom = &one - &div(num, &denom);
    }
    div(first, &denom)
}

fn gamma(order: usize) -> TruncatedSeries {
    let z = TruncatedSeries::z(order);
    continued_fraction(
        &[TruncatedSeries::from_ints(&[0, 0, 1], order), z.clone(), z],
        &TruncatedSeries::from_ints(&[1, 0, -1], order),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown generating function {0:?}")]
pub struct UnknownForm(pub String);

impl FromStr for GfForm {
    type Err = UnknownForm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GfForm::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownForm(s.to_string()))
    }
}

impl fmt::Display for GfForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact coefficients `0..=order` of a named form.
pub fn gf_coefficients(form: &str, order: usize) -> Result<Vec<BigRational>, UnknownForm> {
    Ok(form.parse::<GfForm>()?.expand(order).into_coeffs())
}

/// Checks `1/(1-A-B) == 1/(1-B) * 1/(1 - A/(1-B))` through order `order`.
pub fn star_identity_holds(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    order: usize,
) -> Result<bool, SeriesError> {
    let a = a.truncate(order);
    let b = b.truncate(order);
    let b_star = b.star()?;
    let lhs = (&a + &b).star()?;
    let rhs = &b_star * &(&a * &b_star).star()?;
    Ok(lhs == rhs)
}
