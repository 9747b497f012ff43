//! Cross-checks between the enumeration, tree, series and closed-form
//! routes, plus the count table behind the CLI.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closed::{
    binet_half_companion, binet_pell, count_nondecreasing_closed, count_nondecreasing_quadratic,
    count_square_first, count_tilings, delete_leading_domino, enumerate_tilings, fibonacci,
    half_companion_pell, mountain_sum_by_ups, mountain_sum_reindexed, pell, QuadraticNumber,
    Tile, Tiling,
};
use crate::path::{
    as_mountain, compose, decompose, enumerate_deutsch, enumerate_nondecreasing_direct,
    enumerate_nondecreasing_filter, Step, ValidatedPath,
};
use crate::series::{star_identity_holds, GfForm, TruncatedSeries, DEFAULT_ORDER};
use crate::tree::{enumerate_trees, path_to_tree, tree_to_path, EdgeMark};

pub const DEFAULT_BRUTE_CAP: usize = 14;

/// Unit-down paths are enumerated up to twice this length regardless of
/// the brute-force cap; the restricted family is small.
pub const DYCK_SEMILENGTH: usize = 8;

/// The six non-decreasing paths of length five, in no particular order.
pub const LENGTH_FIVE_PATHS: [&str; 6] = [
    "U D1 U U D2",
    "U U D1 U D2",
    "U U D2 U D1",
    "U U U D2 D1",
    "U U U D1 D2",
    "U U U U D4",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Closed,
    Series,
    Brute,
    Direct,
}

pub fn count_paths(n: usize, method: CountMethod) -> BigInt {
    match method {
        CountMethod::Closed => count_nondecreasing_closed(n as u32),
        CountMethod::Series => GfForm::WithEmpty.expand(n).coeff(n).to_integer(),
        CountMethod::Brute => enumerate_nondecreasing_filter(n).count().into(),
        CountMethod::Direct => enumerate_nondecreasing_direct(n).count().into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub closed: String,
    pub series: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute: Option<String>,
    pub agree: bool,
}

/// One row per length `0..=max`; the brute column only up to `brute_cap`.
pub fn count_table(max: usize, brute_cap: usize) -> Vec<TableRow> {
    let series = GfForm::WithEmpty.expand(max);
    (0..=max)
        .map(|n| {
            let closed = count_nondecreasing_closed(n as u32);
            let from_series = series.coeff(n);
            let brute = (n <= brute_cap).then(|| count_paths(n, CountMethod::Brute));
            let agree = from_series.is_integer()
                && from_series.to_integer() == closed
                && brute.as_ref().is_none_or(|b| *b == closed);
            TableRow {
                n,
                closed: closed.to_string(),
                series: from_series.to_string(),
                brute: brute.map(|b| b.to_string()),
                agree,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn from_result(name: &'static str, result: Result<String, String>) -> Self {
        match result {
            Ok(detail) => CheckOutcome {
                name,
                passed: true,
                detail,
            },
            Err(detail) => CheckOutcome {
                name,
                passed: false,
                detail,
            },
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Largest length (or index) exercised by the cheap checks.
    pub max: usize,
    /// Largest length exercised by exhaustive enumeration.
    pub brute_cap: usize,
    /// Truncation order for series identities.
    pub series_order: usize,
    pub star_cases: usize,
    pub seed: u64,
}

impl VerifyConfig {
    pub fn new(max: usize) -> Self {
        VerifyConfig {
            max,
            brute_cap: DEFAULT_BRUTE_CAP,
            series_order: DEFAULT_ORDER,
            star_cases: 100,
            seed: 0x5eed,
        }
    }

    fn brute_max(&self) -> usize {
        self.max.min(self.brute_cap)
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

/// Runs every cross-check and reports each one.
pub fn run_verification(config: &VerifyConfig) -> Vec<CheckOutcome> {
    type Check = fn(&VerifyConfig) -> Result<String, String>;
    let checks: [(&'static str, Check); 13] = [
        ("length-five-census", check_length_five),
        ("count-agreement", check_counts),
        ("filter-equals-direct", check_filter_direct),
        ("decomposition-round-trip", check_decomposition),
        ("gf-form-equality", check_forms),
        ("bundle-is-mountain-sequence", check_bundle),
        ("path-tree-bijection", check_bijection),
        ("tree-census", check_tree_census),
        ("mountain-law", check_mountains),
        ("dyck-specialization", check_dyck),
        ("pell-consistency", check_pell),
        ("tilings", check_tilings),
        ("star-identity", check_star),
    ];
    checks
        .iter()
        .map(|(name, check)| CheckOutcome::from_result(name, check(config)))
        .collect()
}

fn check_length_five(_: &VerifyConfig) -> Result<String, String> {
    let found: BTreeSet<String> = enumerate_nondecreasing_filter(5)
        .map(|p| p.to_string())
        .collect();
    let expected: BTreeSet<String> = LENGTH_FIVE_PATHS.iter().map(|s| s.to_string()).collect();
    ensure!(found == expected, "found {found:?}");
    Ok("6 paths match the reference list".into())
}

fn check_counts(config: &VerifyConfig) -> Result<String, String> {
    let series = GfForm::WithEmpty.expand(config.max);
    for n in 0..=config.max {
        let closed = count_nondecreasing_closed(n as u32);
        ensure!(
            series.coeff(n) == &BigRational::from_integer(closed.clone()),
            "n={n}: series {} vs closed {closed}",
            series.coeff(n)
        );
        let quad = count_nondecreasing_quadratic(n as u32).map_err(|e| e.to_string())?;
        ensure!(quad == closed, "n={n}: quadratic {quad} vs closed {closed}");
        if n <= config.brute_cap {
            let brute = count_paths(n, CountMethod::Brute);
            let direct = count_paths(n, CountMethod::Direct);
            ensure!(
                brute == closed && direct == closed,
                "n={n}: brute {brute}, direct {direct}, closed {closed}"
            );
        }
    }
    Ok(format!(
        "n <= {} (enumeration n <= {})",
        config.max,
        config.brute_max()
    ))
}

fn check_filter_direct(config: &VerifyConfig) -> Result<String, String> {
    for n in 0..=config.brute_max() {
        let filtered: Vec<_> = enumerate_nondecreasing_filter(n).collect();
        let direct: Vec<_> = enumerate_nondecreasing_direct(n).collect();
        ensure!(filtered == direct, "n={n}: ordered lists differ");
    }
    Ok(format!("n <= {}", config.brute_max()))
}

fn check_decomposition(config: &VerifyConfig) -> Result<String, String> {
    let mut total = 0usize;
    for n in 0..=config.brute_max() {
        for path in enumerate_nondecreasing_filter(n) {
            let dec = decompose(&path).map_err(|e| format!("{path}: {e}"))?;
            dec.check().map_err(|e| format!("{path}: {e}"))?;
            ensure!(compose(&dec) == path, "{path}: compose(decompose(p)) != p");
            ensure!(
                decompose(&compose(&dec)).as_ref() == Ok(&dec),
                "{path}: decompose(compose(d)) != d"
            );
            total += 1;
        }
    }
    Ok(format!("{total} paths"))
}

fn check_forms(config: &VerifyConfig) -> Result<String, String> {
    let order = config.series_order;
    let reference = GfForm::WithEmpty.expand(order);
    for form in [
        GfForm::PartialFractions,
        GfForm::ContinuedFraction,
        GfForm::CfClosure,
        GfForm::TreeForm,
    ] {
        ensure!(form.expand(order) == reference, "{form} differs from with-empty");
    }
    ensure!(
        reference.to_integers().is_some(),
        "with-empty has a fractional coefficient"
    );
    let product = GfForm::Product.expand(order);
    ensure!(
        &TruncatedSeries::one(order) + &product == reference,
        "with-empty != 1 + product"
    );
    Ok(format!("5 forms agree to order {order}"))
}

fn check_bundle(config: &VerifyConfig) -> Result<String, String> {
    let order = config.series_order;
    let mountain = GfForm::Mountain.expand(order);
    ensure!(
        mountain.star().map_err(|e| e.to_string())? == GfForm::Bundle.expand(order),
        "1/(1 - mountain) != bundle"
    );
    Ok(format!("order {order}"))
}

fn check_bijection(config: &VerifyConfig) -> Result<String, String> {
    let mut total = 0usize;
    for n in 0..=config.brute_max() {
        for path in enumerate_nondecreasing_filter(n) {
            let tree = path_to_tree(&path).map_err(|e| format!("{path}: {e}"))?;
            let back = tree_to_path(&tree).map_err(|e| format!("{path}: {e}"))?;
            ensure!(back == path, "{path}: round trip gave {back}");
            let stats = tree.stats();
            ensure!(stats.weight == n, "{path}: weight {}", stats.weight);
            ensure!(
                stats.edge_count == path.up_count() && stats.double_count == path.down_count(),
                "{path}: edges/doubles do not match ups/downs"
            );
            if is_dyck(&path) {
                let all_double = tree
                    .backbone
                    .iter()
                    .chain(tree.bundles.iter().flatten().flatten())
                    .all(|&m| m == EdgeMark::Double);
                ensure!(
                    all_double && stats.weight == 2 * stats.edge_count,
                    "{path}: unit-down path has a single edge"
                );
            }
            total += 1;
        }
    }
    Ok(format!("{total} paths"))
}

fn check_tree_census(config: &VerifyConfig) -> Result<String, String> {
    let cap = config.brute_max().min(12);
    for n in 0..=cap {
        let trees = enumerate_trees(n);
        let expected = count_nondecreasing_closed(n as u32);
        ensure!(
            BigInt::from(trees.len()) == expected,
            "weight {n}: {} trees, expected {expected}",
            trees.len()
        );
        for tree in &trees {
            let path = tree_to_path(tree).map_err(|e| e.to_string())?;
            let again = path_to_tree(&path).map_err(|e| e.to_string())?;
            ensure!(&again == tree, "tree of weight {n} does not round trip");
        }
    }
    Ok(format!("weight <= {cap}"))
}

fn mountain_census(k: usize) -> usize {
    enumerate_deutsch(k)
        .filter(|p| as_mountain(p).is_some())
        .count()
}

fn check_mountains(config: &VerifyConfig) -> Result<String, String> {
    let top = config.max.max(20);
    let series = GfForm::Mountain.expand(top);
    for k in 2..=top {
        let f = fibonacci(k as i64 - 1);
        let (by_ups, reindexed) = (mountain_sum_by_ups(k as u32), mountain_sum_reindexed(k as u32));
        ensure!(
            by_ups == f && reindexed == f,
            "k={k}: sums {by_ups}, {reindexed} vs F = {f}"
        );
        ensure!(
            series.coeff(k) == &BigRational::from_integer(f.clone()),
            "k={k}: series coefficient"
        );
        if k <= config.brute_cap {
            let brute = mountain_census(k);
            ensure!(BigInt::from(brute) == f, "k={k}: brute force {brute} vs {f}");
        }
    }
    Ok(format!(
        "k in 2..={top} (enumeration k <= {})",
        config.brute_cap.min(top)
    ))
}

fn is_dyck(path: &ValidatedPath) -> bool {
    path.steps()
        .iter()
        .all(|s| matches!(s, Step::Up) || *s == Step::down(1).unwrap())
}

fn check_dyck(_: &VerifyConfig) -> Result<String, String> {
    let half = DYCK_SEMILENGTH;
    let series = GfForm::DyckNondecreasing.expand(half);
    for n in 1..=half {
        let brute = enumerate_nondecreasing_filter(2 * n)
            .filter(is_dyck)
            .count();
        let f = fibonacci(2 * n as i64 - 1);
        ensure!(BigInt::from(brute) == f, "n={n}: {brute} vs F = {f}");
        ensure!(
            series.coeff(n) == &BigRational::from_integer(f.clone()),
            "n={n}: series coefficient"
        );
    }
    ensure!(series.coeff(0) == &BigRational::from_integer(fibonacci(-1)), "constant term");
    Ok(format!("semilength <= {half}"))
}

fn check_pell(config: &VerifyConfig) -> Result<String, String> {
    let top = config.max.max(64) as u32;
    for n in 0..=top {
        let p = binet_pell(n).map_err(|e| e.to_string())?;
        let q = binet_half_companion(n).map_err(|e| e.to_string())?;
        ensure!(p == pell(n), "n={n}: Pell {p} vs {}", pell(n));
        ensure!(
            q == half_companion_pell(n),
            "n={n}: companion {q} vs {}",
            half_companion_pell(n)
        );
    }
    let a = QuadraticNumber::silver();
    let b = QuadraticNumber::silver_conjugate();
    ensure!(&a * &b == QuadraticNumber::from_ints(-1, 0), "a*b != -1");
    ensure!(&a + &b == QuadraticNumber::from_ints(2, 0), "a+b != 2");
    Ok(format!("n <= {top}"))
}

fn check_tilings(config: &VerifyConfig) -> Result<String, String> {
    let top = config.max.max(20);
    let series = GfForm::SquareFirstTilings.expand(top);
    for n in 0..=top {
        let all = enumerate_tilings(n);
        ensure!(
            BigInt::from(all.len()) == count_tilings(n) && count_tilings(n) == fibonacci(n as i64 + 1),
            "n={n}: {} tilings",
            all.len()
        );
        let square_first = if n == 0 {
            1
        } else {
            all.iter().filter(|t| t.first() == Some(Tile::Square)).count()
        };
        ensure!(
            series.coeff(n) == &BigRational::from_integer(square_first.into())
                && count_square_first(n) == BigInt::from(square_first),
            "n={n}: square-first count {square_first}"
        );
        // domino-first tilings of length n + 1 versus all tilings of length n - 1
        if n >= 1 {
            let images: BTreeSet<Tiling> = enumerate_tilings(n + 1)
                .iter()
                .filter(|t| t.first() == Some(Tile::Domino))
                .map(|t| delete_leading_domino(t).expect("starts with a domino"))
                .collect();
            let targets: BTreeSet<Tiling> = enumerate_tilings(n - 1).into_iter().collect();
            ensure!(
                images == targets && BigInt::from(images.len()) == fibonacci(n as i64),
                "n={n}: domino deletion is not a bijection"
            );
        }
    }
    Ok(format!("n <= {top}"))
}

/// A random polynomial with zero constant term and small rational coefficients.
pub fn random_series(rng: &mut impl Rng, order: usize) -> TruncatedSeries {
    let degree = rng.gen_range(1..=6usize);
    let mut coeffs = vec![BigRational::zero(); degree + 1];
    for c in coeffs.iter_mut().skip(1) {
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = rng.gen_range(1..=5);
        *c = BigRational::new(num.into(), den.into());
    }
    TruncatedSeries::from_coeffs(coeffs, order)
}

fn check_star(config: &VerifyConfig) -> Result<String, String> {
    const ORDER: usize = 32;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for case in 0..config.star_cases {
        let a = random_series(&mut rng, ORDER);
        let b = random_series(&mut rng, ORDER);
        let holds = star_identity_holds(&a, &b, ORDER).map_err(|e| e.to_string())?;
        ensure!(holds, "case {case}: identity fails");
    }
    Ok(format!("{} random pairs at order {ORDER}", config.star_cases))
}
