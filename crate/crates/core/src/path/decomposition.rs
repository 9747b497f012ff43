use thiserror::Error;

use super::{Mountain, Step, ValidatedPath};

/// Structure of a non-decreasing path: a bundle of mountains at each level
/// `0..height`, one backbone up-step after each bundle, then the final
/// descent (the home run) back to ground.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub height: u32,
    /// `bundles[i]` holds the mountains based at level `i`, left to right.
    pub bundles: Vec<Vec<Mountain>>,
    /// Sizes of the final down-steps; sums to `height`.
    pub homerun: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("valley levels of the path are not non-decreasing")]
    NotNonDecreasing,
    #[error("decomposition is inconsistent: {0}")]
    Invalid(&'static str),
}

impl Decomposition {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn check(&self) -> Result<(), DecomposeError> {
        if self.bundles.len() != self.height as usize {
            return Err(DecomposeError::Invalid("one bundle per level required"));
        }
        if self.homerun.contains(&0) {
            return Err(DecomposeError::Invalid("home-run parts must be positive"));
        }
        let sum: u64 = self.homerun.iter().map(|&d| u64::from(d)).sum();
        if sum != u64::from(self.height) {
            return Err(DecomposeError::Invalid("home run must sum to the height"));
        }
        Ok(())
    }

    /// Total number of steps of the composed path.
    pub fn len(&self) -> usize {
        let mountains: usize = self.bundles.iter().flatten().map(Mountain::len).sum();
        mountains + self.height as usize + self.homerun.len()
    }

    pub fn is_empty(&self) -> bool {
        self.height == 0
    }
}

pub fn decompose(path: &ValidatedPath) -> Result<Decomposition, DecomposeError> {
    if !path.is_nondecreasing() {
        return Err(DecomposeError::NotNonDecreasing);
    }
    let steps = path.steps();
    if steps.is_empty() {
        return Ok(Decomposition::empty());
    }

    let prefix_len = steps.len() - steps.iter().rev().take_while(|s| !s.is_up()).count();
    let homerun: Vec<u32> = steps[prefix_len..]
        .iter()
        .map(|s| match s {
            Step::Down(k) => k.get(),
            Step::Up => unreachable!("trailing run holds only down-steps"),
        })
        .collect();
    let height: u32 = homerun.iter().sum();

    let heights = path.heights();
    let height_before = |i: usize| if i == 0 { 0 } else { heights[i - 1] };

    // Walk the prefix level by level. From level `level`, an up-step either
    // starts a mountain (the prefix comes back down to `level` later) or is
    // the backbone step (it never does).
    let mut bundles = vec![Vec::new(); height as usize];
    let mut pos = 0;
    for (level, bundle) in (0u32..).zip(bundles.iter_mut()) {
        loop {
            debug_assert_eq!(height_before(pos), level);
            let back = (pos..prefix_len).find(|&i| heights[i] <= level);
            match back {
                None => break,
                Some(end) if heights[end] < level => {
                    return Err(DecomposeError::NotNonDecreasing)
                }
                Some(end) => {
                    let segment = ValidatedPath::new_unchecked(
                        steps[pos..=end].to_vec(),
                    );
                    let mountain =
                        super::as_mountain(&segment).ok_or(DecomposeError::NotNonDecreasing)?;
                    bundle.push(mountain);
                    pos = end + 1;
                }
            }
        }
        // backbone up-step
        pos += 1;
    }
    debug_assert_eq!(pos, prefix_len);
    Ok(Decomposition {
        height,
        bundles,
        homerun,
    })
}

pub fn compose(dec: &Decomposition) -> ValidatedPath {
    debug_assert!(dec.check().is_ok());
    let mut steps = Vec::with_capacity(dec.len());
    for bundle in &dec.bundles {
        for mountain in bundle {
            steps.extend(mountain.steps());
        }
        steps.push(Step::Up);
    }
    steps.extend(
        dec.homerun
            .iter()
            .map(|&d| Step::down(d).expect("positive home-run part")),
    );
    ValidatedPath::new_unchecked(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{parse_path, validate};

    fn vp(s: &str) -> ValidatedPath {
        validate(&parse_path(s).unwrap()).unwrap()
    }

    fn m(ups: u32, descent: &[u32]) -> Mountain {
        Mountain::new(ups, descent.to_vec()).unwrap()
    }

    #[test]
    fn decompose_length_five_paths() {
        assert_eq!(
            decompose(&vp("U D1 U U D2")).unwrap(),
            Decomposition {
                height: 2,
                bundles: vec![vec![m(1, &[1])], vec![]],
                homerun: vec![2],
            }
        );
        assert_eq!(
            decompose(&vp("U U D2 U D1")).unwrap(),
            Decomposition {
                height: 1,
                bundles: vec![vec![m(2, &[2])]],
                homerun: vec![1],
            }
        );
        assert_eq!(decompose(&ValidatedPath::empty()).unwrap(), Decomposition::empty());
    }

    #[test]
    fn decompose_mountains_above_ground() {
        assert_eq!(
            decompose(&vp("U U D1 U U D1 U D3")).unwrap(),
            Decomposition {
                height: 3,
                bundles: vec![vec![], vec![m(1, &[1])], vec![m(1, &[1])]],
                homerun: vec![3],
            }
        );
    }

    #[test]
    fn decompose_rejects_decreasing_valleys() {
        assert_eq!(
            decompose(&vp("U U D1 U D2 U D1")),
            Err(DecomposeError::NotNonDecreasing)
        );
    }

    #[test]
    fn compose_length_five_decompositions() {
        let d = Decomposition {
            height: 3,
            bundles: vec![vec![], vec![], vec![]],
            homerun: vec![1, 2],
        };
        assert_eq!(compose(&d).to_string(), "U U U D1 D2");
        let d = Decomposition {
            height: 4,
            bundles: vec![vec![]; 4],
            homerun: vec![4],
        };
        assert_eq!(compose(&d).to_string(), "U U U U D4");
        assert!(compose(&Decomposition::empty()).is_empty());
    }

    #[test]
    fn check_reports_inconsistencies() {
        let bad = Decomposition {
            height: 2,
            bundles: vec![vec![]],
            homerun: vec![2],
        };
        assert!(bad.check().is_err());
        let bad = Decomposition {
            height: 2,
            bundles: vec![vec![], vec![]],
            homerun: vec![1],
        };
        assert!(bad.check().is_err());
    }
}
