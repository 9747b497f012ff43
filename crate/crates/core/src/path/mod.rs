//! Deutsch paths: up-steps of height one and down-steps of any positive size.
//!
//! A [`DeutschPath`] is an unchecked step sequence. [`validate`] turns it into
//! a [`ValidatedPath`], which never dips below ground and returns to it.

mod decomposition;
mod enumerate;
mod stats;

pub use decomposition::{compose, decompose, Decomposition, DecomposeError};
pub use enumerate::{
    compositions, enumerate_deutsch, enumerate_nondecreasing_direct,
    enumerate_nondecreasing_filter, DeutschPaths,
};
pub use stats::{statistics, PathStats, StatsSummary};

use std::fmt;
use std::num::NonZeroU32;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One step of a Deutsch path.
///
/// The derived ordering is the canonical token order `U < D1 < D2 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down(NonZeroU32),
}

impl Step {
    /// A down-step of the given size, or `None` for size zero.
    pub fn down(size: u32) -> Option<Step> {
        NonZeroU32::new(size).map(Step::Down)
    }

    /// Signed change in height.
    pub fn rise(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down(k) => -i64::from(k.get()),
        }
    }

    pub fn is_up(self) -> bool {
        matches!(self, Step::Up)
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Up => f.write_str("U"),
            Step::Down(k) => write!(f, "D{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed token {token:?} at position {position}")]
    MalformedToken { position: usize, token: String },
    #[error("down-step size must be >= 1 (token {position})")]
    ZeroDown { position: usize },
    #[error("down-step size in token {position} is out of range")]
    SizeOverflow { position: usize },
}

impl FromStr for Step {
    type Err = ParseError;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        parse_token(token, 0)
    }
}

fn parse_token(token: &str, position: usize) -> Result<Step, ParseError> {
    let malformed = || ParseError::MalformedToken {
        position,
        token: token.to_string(),
    };
    if token == "U" {
        return Ok(Step::Up);
    }
    let digits = token.strip_prefix('D').ok_or_else(malformed)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    if digits.bytes().all(|b| b == b'0') {
        return Err(ParseError::ZeroDown { position });
    }
    if digits.starts_with('0') {
        return Err(malformed());
    }
    let size: u32 = digits
        .parse()
        .map_err(|_| ParseError::SizeOverflow { position })?;
    Ok(Step::down(size).expect("nonzero checked above"))
}

/// An unvalidated sequence of steps.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeutschPath {
    steps: Vec<Step>,
}

impl DeutschPath {
    pub fn new(steps: Vec<Step>) -> Self {
        DeutschPath { steps }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PathRecord::from(self)).expect("path record serializes")
    }
}

/// Parses whitespace-separated `U` / `D<k>` tokens. Ground constraints are
/// not checked here; see [`validate`].
pub fn parse_path(text: &str) -> Result<DeutschPath, ParseError> {
    text.split_whitespace()
        .enumerate()
        .map(|(i, tok)| parse_token(tok, i + 1))
        .collect::<Result<Vec<_>, _>>()
        .map(DeutschPath::new)
}

/// Tokens joined by single spaces; the empty path renders as `""`.
pub fn render_path(path: &DeutschPath) -> String {
    path.to_string()
}

impl FromStr for DeutschPath {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_path(s)
    }
}

impl fmt::Display for DeutschPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

impl From<Vec<Step>> for DeutschPath {
    fn from(steps: Vec<Step>) -> Self {
        DeutschPath::new(steps)
    }
}

/// JSON form of a path: `{"steps": ["U","D1",...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub steps: Vec<String>,
}

impl From<&DeutschPath> for PathRecord {
    fn from(path: &DeutschPath) -> Self {
        PathRecord {
            steps: path.steps.iter().map(Step::to_string).collect(),
        }
    }
}

impl TryFrom<PathRecord> for DeutschPath {
    type Error = ParseError;

    fn try_from(record: PathRecord) -> Result<Self, Self::Error> {
        record
            .steps
            .iter()
            .enumerate()
            .map(|(i, tok)| parse_token(tok, i + 1))
            .collect::<Result<Vec<_>, _>>()
            .map(DeutschPath::new)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    /// `position` is 1-based.
    #[error("path goes below ground at step {position} (height {height})")]
    NegativeExcursion { position: usize, height: i64 },
    #[error("path ends at height {0}, not on the ground")]
    NonzeroEnd(i64),
}

/// A path known to stay weakly above ground and to end on it.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValidatedPath(DeutschPath);

impl ValidatedPath {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[Step] {
        self.0.steps()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_path(&self) -> &DeutschPath {
        &self.0
    }

    pub fn into_path(self) -> DeutschPath {
        self.0
    }

    /// Height after each step.
    pub fn heights(&self) -> Vec<u32> {
        let mut h = 0i64;
        self.steps()
            .iter()
            .map(|s| {
                h += s.rise();
                h as u32
            })
            .collect()
    }

    pub fn up_count(&self) -> usize {
        self.steps().iter().filter(|s| s.is_up()).count()
    }

    pub fn down_count(&self) -> usize {
        self.len() - self.up_count()
    }

    pub fn max_height(&self) -> u32 {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// Levels of the valleys, left to right.
    pub fn valley_levels(&self) -> Vec<u32> {
        valley_levels(self)
    }

    pub fn is_nondecreasing(&self) -> bool {
        is_nondecreasing(self)
    }

    /// Only for callers that have already established validity.
    pub(crate) fn new_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(validate(&DeutschPath::new(steps.clone())).is_ok());
        ValidatedPath(DeutschPath::new(steps))
    }
}

impl fmt::Display for ValidatedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl AsRef<DeutschPath> for ValidatedPath {
    fn as_ref(&self) -> &DeutschPath {
        &self.0
    }
}

pub fn validate(path: &DeutschPath) -> Result<ValidatedPath, ValidationError> {
    let mut height = 0i64;
    for (i, step) in path.steps().iter().enumerate() {
        height += step.rise();
        if height < 0 {
            return Err(ValidationError::NegativeExcursion {
                position: i + 1,
                height,
            });
        }
    }
    if height != 0 {
        return Err(ValidationError::NonzeroEnd(height));
    }
    Ok(ValidatedPath(path.clone()))
}

impl TryFrom<DeutschPath> for ValidatedPath {
    type Error = ValidationError;

    fn try_from(path: DeutschPath) -> Result<Self, Self::Error> {
        validate(&path).map(|_| ValidatedPath(path))
    }
}

/// A valley is an interior point reached by a down-step and left by an
/// up-step; its level is the height there.
pub fn valley_levels(path: &ValidatedPath) -> Vec<u32> {
    let steps = path.steps();
    let heights = path.heights();
    (1..steps.len())
        .filter(|&i| !steps[i - 1].is_up() && steps[i].is_up())
        .map(|i| heights[i - 1])
        .collect()
}

pub fn is_nondecreasing(path: &ValidatedPath) -> bool {
    valley_levels(path).windows(2).all(|w| w[0] <= w[1])
}

/// `ups` up-steps followed by down-steps whose sizes form `descent`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mountain {
    ups: u32,
    descent: Vec<u32>,
}

impl Mountain {
    /// `None` unless every part is positive and the parts sum to `ups >= 1`.
    pub fn new(ups: u32, descent: Vec<u32>) -> Option<Self> {
        let sum: u64 = descent.iter().map(|&d| u64::from(d)).sum();
        if ups == 0 || descent.contains(&0) || sum != u64::from(ups) {
            return None;
        }
        Some(Mountain { ups, descent })
    }

    pub fn ups(&self) -> u32 {
        self.ups
    }

    pub fn descent(&self) -> &[u32] {
        &self.descent
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.ups as usize + self.descent.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        std::iter::repeat_n(Step::Up, self.ups as usize)
            .chain(self.descent.iter().map(|&d| Step::down(d).expect("positive part")))
    }
}

/// Reads the path as `U^j` followed only by down-steps.
pub fn as_mountain(path: &ValidatedPath) -> Option<Mountain> {
    let steps = path.steps();
    let ups = steps.iter().take_while(|s| s.is_up()).count();
    if ups == 0 {
        return None;
    }
    let descent = steps[ups..]
        .iter()
        .map(|s| match s {
            Step::Down(k) => Some(k.get()),
            Step::Up => None,
        })
        .collect::<Option<Vec<_>>>()?;
    Mountain::new(ups as u32, descent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vp(s: &str) -> ValidatedPath {
        validate(&parse_path(s).unwrap()).unwrap()
    }

    fn d(k: u32) -> Step {
        Step::down(k).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_path("U D1 U U D2").unwrap().steps(),
            &[Step::Up, d(1), Step::Up, Step::Up, d(2)]
        );
        assert!(parse_path("").unwrap().is_empty());
        assert!(parse_path("   ").unwrap().is_empty());
        assert_eq!(
            parse_path("U D0"),
            Err(ParseError::ZeroDown { position: 2 })
        );
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["X", "D", "Dx", "D01", "u", "D-1", "UD1", "D+1"] {
            assert!(
                matches!(parse_path(bad), Err(ParseError::MalformedToken { .. })),
                "{bad}"
            );
        }
        assert!(matches!(
            parse_path("U D99999999999"),
            Err(ParseError::SizeOverflow { position: 2 })
        ));
    }

    #[test]
    fn render_examples() {
        assert_eq!(render_path(&DeutschPath::new(vec![Step::Up, d(2)])), "U D2");
        assert_eq!(render_path(&DeutschPath::empty()), "");
    }

    #[test]
    fn step_order_is_token_order() {
        assert!(Step::Up < d(1));
        assert!(d(1) < d(2));
        assert!(d(9) < d(10));
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&parse_path("U U D2").unwrap()).is_ok());
        assert_eq!(
            validate(&parse_path("U D2").unwrap()),
            Err(ValidationError::NegativeExcursion {
                position: 2,
                height: -1
            })
        );
        assert_eq!(
            validate(&parse_path("U U D1").unwrap()),
            Err(ValidationError::NonzeroEnd(1))
        );
        assert!(validate(&DeutschPath::empty()).is_ok());
    }

    #[test]
    fn valley_examples() {
        assert_eq!(vp("U D1 U U D2").valley_levels(), vec![0]);
        assert_eq!(vp("U U U D2 D1").valley_levels(), Vec::<u32>::new());
        assert_eq!(vp("U U D1 U D2").valley_levels(), vec![1]);
        assert_eq!(vp("U U D1 U D2 U D1").valley_levels(), vec![1, 0]);
    }

    #[test]
    fn nondecreasing_examples() {
        assert!(vp("U U D1 U D2").is_nondecreasing());
        assert!(vp("U U D1 D1 U D1").is_nondecreasing());
        assert!(!vp("U U D1 U D2 U D1").is_nondecreasing());
        assert!(ValidatedPath::empty().is_nondecreasing());
    }

    #[test]
    fn mountain_examples() {
        assert_eq!(as_mountain(&vp("U U D1 D1")), Mountain::new(2, vec![1, 1]));
        assert_eq!(as_mountain(&vp("U U U D2 D1")), Mountain::new(3, vec![2, 1]));
        assert_eq!(as_mountain(&vp("U D1 U D1")), None);
        assert_eq!(as_mountain(&ValidatedPath::empty()), None);
    }

    #[test]
    fn mountain_rejects_bad_compositions() {
        assert!(Mountain::new(0, vec![]).is_none());
        assert!(Mountain::new(2, vec![1]).is_none());
        assert!(Mountain::new(2, vec![2, 0]).is_none());
        let m = Mountain::new(3, vec![1, 2]).unwrap();
        assert_eq!(m.len(), 5);
        let path: Vec<_> = m.steps().collect();
        assert_eq!(DeutschPath::new(path).to_string(), "U U U D1 D2");
    }

    #[test]
    fn json_record() {
        let p = parse_path("U U D2").unwrap();
        assert_eq!(p.to_json(), r#"{"steps":["U","U","D2"]}"#);
        let rec: PathRecord = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(DeutschPath::try_from(rec).unwrap(), p);
    }
}
