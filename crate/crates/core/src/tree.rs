//! Marked trees: a backbone with hanging paths, every edge marked single
//! (weight 1) or double (weight 2).
//!
//! A down-step of size `d` turns into `d - 1` single edges followed by one
//! double edge, read from the attachment node downward. The backbone encodes
//! the home run and each hanging path encodes one mountain, so the total
//! weight of a tree equals the length of its path.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::path::{compose, decompose, DecomposeError, Decomposition, Mountain, ValidatedPath};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeMark {
    #[serde(rename = "s")]
    Single,
    #[serde(rename = "d")]
    Double,
}

impl EdgeMark {
    pub fn weight(self) -> usize {
        match self {
            EdgeMark::Single => 1,
            EdgeMark::Double => 2,
        }
    }
}

impl fmt::Display for EdgeMark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeMark::Single => "s",
            EdgeMark::Double => "d",
        })
    }
}

/// A path hanging from a backbone node, marks listed from the attachment
/// node downward.
pub type HangingPath = Vec<EdgeMark>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedTree {
    /// Backbone marks, root first.
    pub backbone: Vec<EdgeMark>,
    /// `bundles[i]` hangs from backbone node `i` (the root is node 0).
    pub bundles: Vec<Vec<HangingPath>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TreeStats {
    pub edge_count: usize,
    pub double_count: usize,
    pub weight: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("mark sequence ends with single edges")]
    DanglingSingles,
    #[error("last backbone mark must be double")]
    BackboneEndsSingle,
    #[error("expected {expected} bundles (one per backbone edge), found {found}")]
    BundleCount { expected: usize, found: usize },
    #[error("hanging path {path} at node {node} is empty")]
    EmptyHangingPath { node: usize, path: usize },
    #[error("hanging path {path} at node {node} ends with a single edge (mark {mark})")]
    HangingEndsSingle { node: usize, path: usize, mark: usize },
    #[error("invalid tree: {}", list(.0))]
    Invalid(Vec<TreeError>),
    #[error(transparent)]
    Path(#[from] DecomposeError),
    #[error("tree JSON: {0}")]
    Json(String),
}

fn list(errors: &[TreeError]) -> String {
    errors
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// Each part `d` becomes `d - 1` singles then a double.
pub fn composition_to_marks(parts: &[u32]) -> Vec<EdgeMark> {
    parts
        .iter()
        .flat_map(|&d| {
            debug_assert!(d >= 1);
            std::iter::repeat_n(EdgeMark::Single, d.saturating_sub(1) as usize)
                .chain(std::iter::once(EdgeMark::Double))
        })
        .collect()
}

/// Splits after every double; each block length is one part.
pub fn marks_to_composition(marks: &[EdgeMark]) -> Result<Vec<u32>, TreeError> {
    if marks.last() == Some(&EdgeMark::Single) {
        return Err(TreeError::DanglingSingles);
    }
    Ok(marks
        .split_inclusive(|&m| m == EdgeMark::Double)
        .map(|block| block.len() as u32)
        .collect())
}

pub fn validate_tree(tree: &MarkedTree) -> Result<(), Vec<TreeError>> {
    let mut errors = Vec::new();
    if tree.backbone.last() == Some(&EdgeMark::Single) {
        errors.push(TreeError::BackboneEndsSingle);
    }
    if tree.bundles.len() != tree.backbone.len() {
        errors.push(TreeError::BundleCount {
            expected: tree.backbone.len(),
            found: tree.bundles.len(),
        });
    }
    for (node, bundle) in tree.bundles.iter().enumerate() {
        for (path, marks) in bundle.iter().enumerate() {
            match marks.last() {
                None => errors.push(TreeError::EmptyHangingPath { node, path }),
                Some(EdgeMark::Single) => errors.push(TreeError::HangingEndsSingle {
                    node,
                    path,
                    mark: marks.len() - 1,
                }),
                Some(EdgeMark::Double) => {}
            }
        }
    }
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors)
    }
}

pub fn path_to_tree(path: &ValidatedPath) -> Result<MarkedTree, TreeError> {
    let dec = decompose(path)?;
    Ok(MarkedTree {
        backbone: composition_to_marks(&dec.homerun),
        bundles: dec
            .bundles
            .iter()
            .map(|bundle| {
                bundle
                    .iter()
                    .map(|m| composition_to_marks(m.descent()))
                    .collect()
            })
            .collect(),
    })
}

pub fn tree_to_path(tree: &MarkedTree) -> Result<ValidatedPath, TreeError> {
    validate_tree(tree).map_err(TreeError::Invalid)?;
    let to_mountain = |marks: &HangingPath| -> Result<Mountain, TreeError> {
        let descent = marks_to_composition(marks)?;
        Ok(Mountain::new(marks.len() as u32, descent).expect("blocks sum to the path length"))
    };
    let dec = Decomposition {
        height: tree.backbone.len() as u32,
        bundles: tree
            .bundles
            .iter()
            .map(|bundle| bundle.iter().map(to_mountain).collect())
            .collect::<Result<_, _>>()?,
        homerun: marks_to_composition(&tree.backbone)?,
    };
    Ok(compose(&dec))
}

pub fn tree_statistics(tree: &MarkedTree) -> TreeStats {
    let marks = tree
        .backbone
        .iter()
        .chain(tree.bundles.iter().flatten().flatten());
    let (edge_count, double_count) = marks.fold((0, 0), |(e, d), &m| {
        (e + 1, d + usize::from(m == EdgeMark::Double))
    });
    TreeStats {
        edge_count,
        double_count,
        weight: edge_count + double_count,
    }
}

impl MarkedTree {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn stats(&self) -> TreeStats {
        tree_statistics(self)
    }

    /// `{"backbone": [...], "bundles": [...]}` with no extra whitespace.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serializes")
    }

    /// Parses and validates tree JSON.
    pub fn from_json(text: &str) -> Result<Self, TreeError> {
        let tree: MarkedTree =
            serde_json::from_str(text).map_err(|e| TreeError::Json(e.to_string()))?;
        validate_tree(&tree).map_err(TreeError::Invalid)?;
        Ok(tree)
    }

    /// Plain-text outline: one line per backbone node listing the hanging
    /// paths there, then the mark of the backbone edge below it.
    pub fn outline(&self) -> String {
        let mut out = String::new();
        for node in 0..=self.backbone.len() {
            let _ = write!(out, "node {node}");
            let hanging = self.bundles.get(node).map(Vec::as_slice).unwrap_or(&[]);
            if !hanging.is_empty() {
                let paths: Vec<String> = hanging
                    .iter()
                    .map(|marks| marks.iter().map(ToString::to_string).collect::<Vec<_>>().join("-"))
                    .collect();
                let _ = write!(out, "  hangs: {}", paths.join(" | "));
            }
            out.push('\n');
            if let Some(mark) = self.backbone.get(node) {
                let _ = writeln!(out, "  |{mark}");
            }
        }
        out
    }
}

/// `seqs[w]`: every mark sequence of weight `w` ending in a double.
fn terminated_sequences(weight: usize) -> Vec<Vec<Vec<EdgeMark>>> {
    let mut seqs: Vec<Vec<Vec<EdgeMark>>> = vec![Vec::new(); weight + 1];
    for w in 2..=weight {
        let mut here = Vec::new();
        let prepend = |first: EdgeMark, rest: &[Vec<EdgeMark>], out: &mut Vec<Vec<EdgeMark>>| {
            out.extend(rest.iter().map(|r| {
                let mut v = vec![first];
                v.extend_from_slice(r);
                v
            }))
        };
        prepend(EdgeMark::Single, &seqs[w - 1], &mut here);
        if w == 2 {
            here.push(vec![EdgeMark::Double]);
        } else {
            prepend(EdgeMark::Double, &seqs[w - 2], &mut here);
        }
        seqs[w] = here;
    }
    seqs
}

/// Every valid marked tree of total weight `weight`, built directly from
/// mark sequences without going through paths.
pub fn enumerate_trees(weight: usize) -> Vec<MarkedTree> {
    if weight == 0 {
        return vec![MarkedTree::empty()];
    }
    let seqs = terminated_sequences(weight);
    // forests[w]: ordered lists of hanging paths with total weight w
    let mut forests: Vec<Vec<Vec<HangingPath>>> = vec![Vec::new(); weight + 1];
    forests[0].push(Vec::new());
    for w in 1..=weight {
        let mut here = Vec::new();
        for first_w in 2..=w {
            for first in &seqs[first_w] {
                for rest in &forests[w - first_w] {
                    let mut f = vec![first.clone()];
                    f.extend(rest.iter().cloned());
                    here.push(f);
                }
            }
        }
        forests[w] = here;
    }

    fn fill(
        forests: &[Vec<Vec<HangingPath>>],
        nodes: usize,
        budget: usize,
        acc: &mut Vec<Vec<HangingPath>>,
        out: &mut Vec<Vec<Vec<HangingPath>>>,
    ) {
        if acc.len() == nodes {
            if budget == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for spend in 0..=budget {
            for forest in &forests[spend] {
                acc.push(forest.clone());
                fill(forests, nodes, budget - spend, acc, out);
                acc.pop();
            }
        }
    }

    let mut trees = Vec::new();
    for (backbone_w, backbones) in seqs.iter().enumerate().take(weight + 1).skip(2) {
        for backbone in backbones {
            let mut assignments = Vec::new();
            fill(
                &forests,
                backbone.len(),
                weight - backbone_w,
                &mut Vec::new(),
                &mut assignments,
            );
            trees.extend(assignments.into_iter().map(|bundles| MarkedTree {
                backbone: backbone.clone(),
                bundles,
            }));
        }
    }
    trees
}
