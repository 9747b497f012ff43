use std::collections::BTreeMap;

use serde::Serialize;

use super::{enumerate_nondecreasing_filter, ValidatedPath};

/// Per-path record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathStats {
    pub length: usize,
    pub up_count: usize,
    pub downstep_count: usize,
    pub height: u32,
    pub valley_levels: Vec<u32>,
}

impl PathStats {
    pub fn of(path: &ValidatedPath) -> Self {
        PathStats {
            length: path.len(),
            up_count: path.up_count(),
            downstep_count: path.down_count(),
            height: path.max_height(),
            valley_levels: path.valley_levels(),
        }
    }
}

/// Records for every non-decreasing path of one length, with histograms
/// mapping each value of a parameter to the number of paths having it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatsSummary {
    pub length: usize,
    pub records: Vec<PathStats>,
    pub downsteps: BTreeMap<usize, u64>,
    pub heights: BTreeMap<u32, u64>,
    pub valleys: BTreeMap<usize, u64>,
}

pub fn statistics(len: usize) -> StatsSummary {
    let mut summary = StatsSummary {
        length: len,
        ..Default::default()
    };
    for path in enumerate_nondecreasing_filter(len) {
        let rec = PathStats::of(&path);
        *summary.downsteps.entry(rec.downstep_count).or_default() += 1;
        *summary.heights.entry(rec.height).or_default() += 1;
        *summary.valleys.entry(rec.valley_levels.len()).or_default() += 1;
        summary.records.push(rec);
    }
    summary
}
