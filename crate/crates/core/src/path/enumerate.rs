use std::iter::FusedIterator;

use super::{compose, Decomposition, Mountain, Step, ValidatedPath};

/// Whether `remaining` more steps can bring a path at `height` back to ground.
fn completable(height: u32, remaining: usize) -> bool {
    // a single down-step of any size returns from a positive height
    if height == 0 {
        remaining != 1
    } else {
        remaining >= 1
    }
}

/// Streaming generator of all Deutsch paths of a fixed length, in canonical
/// lexicographic order (`U < D1 < D2 < ...`).
#[derive(Clone, Debug)]
pub struct DeutschPaths {
    len: usize,
    steps: Vec<Step>,
    heights: Vec<u32>,
    state: State,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    First,
    Running,
    Done,
}

impl DeutschPaths {
    fn new(len: usize) -> Self {
        DeutschPaths {
            len,
            steps: Vec::with_capacity(len),
            heights: Vec::with_capacity(len),
            state: if completable(0, len) {
                State::First
            } else {
                State::Done
            },
        }
    }

    fn height(&self) -> u32 {
        self.heights.last().copied().unwrap_or(0)
    }

    fn push(&mut self, step: Step) {
        let h = match step {
            Step::Up => self.height() + 1,
            Step::Down(k) => self.height() - k.get(),
        };
        self.steps.push(step);
        self.heights.push(h);
    }

    /// Smallest step at or after `from` that keeps the path completable.
    fn next_step(&self, from: Step) -> Option<Step> {
        let h = self.height();
        let remaining = self.len - self.steps.len() - 1;
        if from == Step::Up && completable(h + 1, remaining) {
            return Some(Step::Up);
        }
        let first = match from {
            Step::Up => 1,
            Step::Down(k) => k.get(),
        };
        (first..=h)
            .find(|&k| completable(h - k, remaining))
            .and_then(Step::down)
    }

    /// Extends the current prefix with the smallest feasible steps.
    fn fill(&mut self) {
        while self.steps.len() < self.len {
            let step = self
                .next_step(Step::Up)
                .expect("a completable prefix always extends");
            self.push(step);
        }
    }

    /// Advances to the lexicographic successor; false when exhausted.
    fn advance(&mut self) -> bool {
        while let Some(last) = self.steps.pop() {
            self.heights.pop();
            let bumped = match last {
                Step::Up => Step::down(1),
                Step::Down(k) => Step::down(k.get() + 1),
            };
            if let Some(step) = bumped.and_then(|s| self.next_step(s)) {
                self.push(step);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for DeutschPaths {
    type Item = ValidatedPath;

    fn next(&mut self) -> Option<ValidatedPath> {
        match self.state {
            State::Done => return None,
            State::First => {
                self.fill();
                self.state = State::Running;
            }
            State::Running => {
                if !self.advance() {
                    self.state = State::Done;
                    return None;
                }
            }
        }
        Some(ValidatedPath::new_unchecked(self.steps.clone()))
    }
}

impl FusedIterator for DeutschPaths {}

pub fn enumerate_deutsch(len: usize) -> DeutschPaths {
    DeutschPaths::new(len)
}

/// All Deutsch paths of length `len` with non-decreasing valley levels,
/// in canonical order.
pub fn enumerate_nondecreasing_filter(len: usize) -> impl Iterator<Item = ValidatedPath> {
    enumerate_deutsch(len).filter(ValidatedPath::is_nondecreasing)
}

/// All compositions of `total`, in lexicographic order of parts.
pub fn compositions(total: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for part in 1..=left {
            cur.push(part);
            go(left - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, &mut Vec::new(), &mut out);
    out
}

/// `seqs[l]` lists every sequence of mountains of total length `l`.
fn mountain_sequences(max_len: usize) -> Vec<Vec<Vec<Mountain>>> {
    // mountains[l]: single mountains with exactly l steps (j ups, m parts, j + m = l)
    let mut mountains: Vec<Vec<Mountain>> = vec![Vec::new(); max_len + 1];
    for ups in 1..=max_len as u32 {
        for descent in compositions(ups) {
            let len = ups as usize + descent.len();
            if len <= max_len {
                mountains[len].push(Mountain::new(ups, descent).expect("composition"));
            }
        }
    }
    let mut seqs: Vec<Vec<Vec<Mountain>>> = vec![Vec::new(); max_len + 1];
    seqs[0].push(Vec::new());
    for len in 1..=max_len {
        let mut here = Vec::new();
        for first_len in 2..=len {
            for first in &mountains[first_len] {
                for rest in &seqs[len - first_len] {
                    let mut seq = Vec::with_capacity(rest.len() + 1);
                    seq.push(first.clone());
                    seq.extend(rest.iter().cloned());
                    here.push(seq);
                }
            }
        }
        seqs[len] = here;
    }
    seqs
}

/// Every decomposition whose composed path has `len` steps.
pub(crate) fn decompositions(len: usize) -> Vec<Decomposition> {
    if len == 0 {
        return vec![Decomposition::empty()];
    }
    let seqs = mountain_sequences(len);
    let mut out = Vec::new();
    // a height-h decomposition spends h backbone ups and at least one home-run step
    for height in 1..len as u32 {
        for homerun in compositions(height) {
            let fixed = height as usize + homerun.len();
            if fixed > len {
                continue;
            }
            let mut bundles = Vec::with_capacity(height as usize);
            distribute(&seqs, height as usize, len - fixed, &mut bundles, &mut |bundles| {
                out.push(Decomposition {
                    height,
                    bundles: bundles.to_vec(),
                    homerun: homerun.clone(),
                })
            });
        }
    }
    out
}

/// Calls `emit` for every way of filling `levels` bundles with mountain
/// sequences of total length exactly `budget`.
fn distribute(
    seqs: &[Vec<Vec<Mountain>>],
    levels: usize,
    budget: usize,
    bundles: &mut Vec<Vec<Mountain>>,
    emit: &mut dyn FnMut(&[Vec<Mountain>]),
) {
    if bundles.len() == levels {
        if budget == 0 {
            emit(bundles);
        }
        return;
    }
    for spend in 0..=budget {
        for seq in &seqs[spend] {
            bundles.push(seq.clone());
            distribute(seqs, levels, budget - spend, bundles, emit);
            bundles.pop();
        }
    }
}

/// Same set as [`enumerate_nondecreasing_filter`], generated from the
/// structure instead of by filtering, then sorted into canonical order.
pub fn enumerate_nondecreasing_direct(len: usize) -> impl Iterator<Item = ValidatedPath> {
    let mut paths: Vec<ValidatedPath> = decompositions(len).iter().map(compose).collect();
    paths.sort_unstable();
    paths.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{parse_path, validate, DeutschPath};

    fn strings(it: impl Iterator<Item = ValidatedPath>) -> Vec<String> {
        it.map(|p| p.to_string()).collect()
    }

    /// Every sequence over {U, D1..Dn} of length n, filtered by validation.
    fn oracle_all(n: usize) -> Vec<String> {
        let alphabet: Vec<Step> = std::iter::once(Step::Up)
            .chain((1..=n as u32).map(|k| Step::down(k).unwrap()))
            .collect();
        let base = alphabet.len();
        let total = base.pow(n as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut steps = vec![Step::Up; n];
            for slot in steps.iter_mut().rev() {
                *slot = alphabet[code % base];
                code /= base;
            }
            if validate(&DeutschPath::new(steps.clone())).is_ok() {
                out.push(DeutschPath::new(steps).to_string());
            }
        }
        out
    }

    #[test]
    fn small_lengths() {
        assert_eq!(strings(enumerate_deutsch(0)), vec![""]);
        assert!(strings(enumerate_deutsch(1)).is_empty());
        assert_eq!(strings(enumerate_deutsch(2)), vec!["U D1"]);
        assert_eq!(strings(enumerate_deutsch(3)), vec!["U U D2"]);
        assert_eq!(
            strings(enumerate_deutsch(4)),
            vec!["U U U D3", "U U D1 D1", "U D1 U D1"]
        );
    }

    #[test]
    fn matches_exhaustive_oracle_in_order() {
        for n in 0..=7 {
            assert_eq!(strings(enumerate_deutsch(n)), oracle_all(n), "n={n}");
        }
    }

    #[test]
    fn nondecreasing_small() {
        assert!(strings(enumerate_nondecreasing_filter(1)).is_empty());
        assert_eq!(enumerate_nondecreasing_filter(4).count(), 3);
        assert_eq!(
            strings(enumerate_nondecreasing_filter(5)),
            vec![
                "U U U U D4",
                "U U U D1 D2",
                "U U U D2 D1",
                "U U D1 U D2",
                "U U D2 U D1",
                "U D1 U U D2",
            ]
        );
    }

    #[test]
    fn direct_matches_filter() {
        for n in 0..=11 {
            assert_eq!(
                strings(enumerate_nondecreasing_direct(n)),
                strings(enumerate_nondecreasing_filter(n)),
                "n={n}"
            );
        }
    }

    #[test]
    fn compositions_small() {
        assert_eq!(compositions(0), vec![Vec::<u32>::new()]);
        assert_eq!(
            compositions(3),
            vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]
        );
        for n in 1..=10 {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn stream_is_lazy() {
        // length 40 has astronomically many paths; taking a few must be cheap
        let first: Vec<_> = enumerate_deutsch(40).take(3).collect();
        assert_eq!(first.len(), 3);
        let expected = format!("{}D39", "U ".repeat(39));
        assert_eq!(first[0].as_path(), &parse_path(&expected).unwrap());
    }
}
