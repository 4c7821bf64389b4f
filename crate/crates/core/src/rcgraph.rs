//! rc-graphs (reduced pipe dreams) and their bijection with increasing
//! chains to `w₀`.
//!
//! Crossings are cells `(k, b)` of the staircase `k + b <= n`. They are read
//! row by row, each row from the largest column down; the crossing `(k, b)`
//! contributes the simple reflection `s_{k+b-1}`, and reflections are
//! multiplied left to right starting from the identity.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chains::{increasing_chains_to_w0, ChainStep, ChainsToLongest, LabeledChain};
use crate::error::{Error, Result};
use crate::perm::{cover_positions, CoverLabel, Permutation};
use crate::poly::Monomial;

/// A set of crossings in the staircase of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RcGraph {
    n: usize,
    /// Sorted by `(k ascending, b descending)`.
    crossings: Vec<CoverLabel>,
}

/// Reading order on crossings: `(k, b) ≤ (j, a)` iff `k < j`, or `k = j` and
/// `b ≥ a`.
fn reading_key(c: &CoverLabel) -> (usize, std::cmp::Reverse<usize>) {
    (c.k, std::cmp::Reverse(c.b))
}

impl RcGraph {
    /// Builds the crossing set, rejecting cells outside the staircase and
    /// repeated cells. Does not check reducedness; see [`RcGraph::is_valid`].
    pub fn new(n: usize, crossings: impl IntoIterator<Item = CoverLabel>) -> Result<Self> {
        let mut cells: Vec<CoverLabel> = crossings.into_iter().collect();
        for c in &cells {
            if c.k == 0 || c.b == 0 || c.k + c.b > n {
                return Err(Error::InvalidRcGraph(format!("crossing {c} lies outside the staircase of S_{n}")));
            }
        }
        cells.sort_by_key(reading_key);
        if cells.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidRcGraph("repeated crossing".into()));
        }
        Ok(RcGraph { n, crossings: cells })
    }

    pub fn empty(n: usize) -> Self {
        RcGraph { n, crossings: Vec::new() }
    }

    /// Every cell of the staircase; the unique rc-graph of `w₀`.
    pub fn full(n: usize) -> Self {
        let cells = staircase_cells(n);
        RcGraph::new(n, cells).expect("staircase cells are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Crossings in reading order.
    pub fn crossings(&self) -> &[CoverLabel] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn contains(&self, cell: CoverLabel) -> bool {
        self.crossings.contains(&cell)
    }

    /// The reading word `d(R)` of simple-reflection indices.
    pub fn word(&self) -> Vec<usize> {
        self.crossings.iter().map(|c| c.k + c.b - 1).collect()
    }

    /// Product of the reading word and whether every factor raised the
    /// length.
    fn product(&self) -> (Permutation, bool) {
        let mut entries: Vec<usize> = (1..=self.n).collect();
        let mut reduced = true;
        for a in self.word() {
            if entries[a - 1] > entries[a] {
                reduced = false;
            }
            entries.swap(a - 1, a);
        }
        (Permutation::from_entries_unchecked(entries), reduced)
    }

    /// True iff the reading word is reduced.
    pub fn is_valid(&self) -> bool {
        let (w, _) = self.product();
        w.length() == self.crossings.len()
    }

    /// `w(R)`, for valid rc-graphs only.
    pub fn perm(&self) -> Result<Permutation> {
        let (w, reduced) = self.product();
        if !reduced {
            return Err(Error::InvalidRcGraph(format!("reading word {:?} is not reduced", self.word())));
        }
        Ok(w)
    }

    /// `x^R`: the exponent of `x_i` is the number of crossings in row `i`.
    pub fn monomial(&self) -> Monomial {
        let mut exps = vec![0u32; self.n];
        for c in &self.crossings {
            exps[c.k - 1] += 1;
        }
        Monomial::new(exps)
    }

    /// The increasing chain `γ(R)` from `w(R)` to `w₀`: staircase cells not in
    /// `R` are added one at a time, lexicographically smallest first, and each
    /// addition is a labeled cover.
    pub fn to_chain(&self) -> Result<LabeledChain> {
        let start = self.perm()?;
        let mut current: BTreeSet<CoverLabel> = self.crossings.iter().copied().collect();
        let missing: Vec<CoverLabel> = staircase_cells(self.n).into_iter().filter(|c| !current.contains(c)).collect();
        let mut prev = start.clone();
        let mut steps = Vec::with_capacity(missing.len());
        for cell in missing {
            current.insert(cell);
            let next = RcGraph { n: self.n, crossings: sorted_reading(&current) }.perm()?;
            let swap = cover_positions(&prev, &next)?;
            if !prev.labeled_edges(&next)?.contains(&cell) {
                return Err(Error::InvalidChain(format!("{cell} is not a label of {prev} -> {next}")));
            }
            steps.push(ChainStep { label: cell, swap });
            prev = next;
        }
        LabeledChain::new(start, steps)
    }

    /// Inverse of [`RcGraph::to_chain`]: the staircase cells that are not
    /// labels of `γ`.
    pub fn from_chain(chain: &LabeledChain) -> Result<Self> {
        let n = chain.start().n();
        if !chain.end().is_longest() {
            return Err(Error::InvalidChain(format!("chain ends at {}, not at w0", chain.end())));
        }
        if !chain.is_increasing() {
            return Err(Error::InvalidChain("chain is not increasing".into()));
        }
        chain.validate()?;
        let labels: BTreeSet<CoverLabel> = chain.labels().into_iter().collect();
        if let Some(l) = labels.iter().find(|l| l.k + l.b > n) {
            return Err(Error::InvalidChain(format!("label {l} lies outside the staircase")));
        }
        let graph = RcGraph::complement_of(n, &labels);
        if graph.perm()? != *chain.start() {
            return Err(Error::InvalidChain("complement does not represent the start of the chain".into()));
        }
        Ok(graph)
    }

    fn complement_of(n: usize, labels: &BTreeSet<CoverLabel>) -> Self {
        let crossings = staircase_cells(n).into_iter().filter(|c| !labels.contains(c)).collect::<Vec<_>>();
        let mut crossings = crossings;
        crossings.sort_by_key(reading_key);
        RcGraph { n, crossings }
    }

    /// Grid rendering: row `k` lists columns `1..=n-k`, `+` for a crossing.
    pub fn to_ascii(&self) -> String {
        let mut lines = Vec::new();
        for k in 1..self.n {
            let row: Vec<&str> =
                (1..=self.n - k).map(|b| if self.contains(CoverLabel { k, b }) { "+" } else { "." }).collect();
            lines.push(row.join(" "));
        }
        lines.join("\n")
    }

    pub fn to_json_value(&self) -> RcGraphJson {
        RcGraphJson { n: self.n, crossings: self.crossings.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("rc-graph JSON")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RcGraphJson = serde_json::from_str(s)?;
        RcGraph::new(raw.n, raw.crossings)
    }
}

fn sorted_reading(cells: &BTreeSet<CoverLabel>) -> Vec<CoverLabel> {
    let mut v: Vec<CoverLabel> = cells.iter().copied().collect();
    v.sort_by_key(reading_key);
    v
}

/// Cells `(k, b)` with `k + b <= n`, in lexicographic order.
pub fn staircase_cells(n: usize) -> Vec<CoverLabel> {
    (1..n).flat_map(|k| (1..=n - k).map(move |b| CoverLabel { k, b })).collect()
}

impl fmt::Debug for RcGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RcGraph(n={}, {:?})", self.n, self.crossings.iter().map(|c| (c.k, c.b)).collect::<Vec<_>>())
    }
}

/// Wire form `{"n": n, "crossings": [[k,b],…]}`, crossings in reading order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RcGraphJson {
    pub n: usize,
    pub crossings: Vec<CoverLabel>,
}

/// Stream of `R(w)`, obtained from `Γ(w, w₀)` by taking complements.
pub struct RcGraphs {
    chains: ChainsToLongest,
    n: usize,
}

impl Iterator for RcGraphs {
    type Item = RcGraph;

    fn next(&mut self) -> Option<RcGraph> {
        let chain = self.chains.next()?;
        let labels: BTreeSet<CoverLabel> = chain.steps().iter().map(|s| s.label).collect();
        Some(RcGraph::complement_of(self.n, &labels))
    }
}

impl RcGraphs {
    /// Work counter of the underlying tree search.
    pub fn work(&self) -> u64 {
        self.chains.work()
    }
}

/// All rc-graphs of `w`.
pub fn enumerate(w: &Permutation) -> RcGraphs {
    RcGraphs { chains: increasing_chains_to_w0(w), n: w.n() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn example() -> RcGraph {
        RcGraph::new(4, [(1, 2), (1, 3), (3, 1)].map(CoverLabel::from)).unwrap()
    }

    #[test]
    fn word_of_example() {
        assert_eq!(example().word(), vec![3, 2, 3]);
        assert!(RcGraph::empty(4).word().is_empty());
        let full = RcGraph::full(5);
        assert_eq!(full.word().len(), 10);
        assert_eq!(full.perm().unwrap(), Permutation::longest(5));
    }

    #[test]
    fn validity() {
        assert!(example().is_valid());
        let r = RcGraph::new(3, [(1, 1), (2, 1)].map(CoverLabel::from)).unwrap();
        assert!(r.is_valid());
        assert_eq!(r.perm().unwrap(), p("231"));
        // both crossings contribute s_2, so the word (2,2) is not reduced
        let bad = RcGraph::new(3, [(1, 2), (2, 1)].map(CoverLabel::from)).unwrap();
        assert_eq!(bad.word(), vec![2, 2]);
        assert!(!bad.is_valid());
        assert!(bad.perm().is_err());
        assert!(RcGraph::new(3, [CoverLabel::new(2, 2)]).is_err());
    }

    #[test]
    fn perm_and_monomial_of_example() {
        assert_eq!(example().perm().unwrap(), p("1432"));
        assert_eq!(RcGraph::empty(4).perm().unwrap(), Permutation::identity(4));
        assert_eq!(example().monomial(), Monomial::new(vec![2, 0, 1]));
        assert!(RcGraph::empty(3).monomial().is_one());
    }

    #[test]
    fn chain_of_example() {
        let chain = example().to_chain().unwrap();
        assert_eq!(chain.to_string(), "1432 -(1,1)-> 4132 -(2,1)-> 4231 -(2,2)-> 4321");
        assert_eq!(chain.start(), &p("1432"));
        assert_eq!(example().monomial().mul(&chain.monomial()), Monomial::staircase(4));
        assert_eq!(RcGraph::from_chain(&chain).unwrap(), example());
    }

    #[test]
    fn chain_of_extremes() {
        let chain = RcGraph::full(4).to_chain().unwrap();
        assert!(chain.is_empty());
        assert_eq!(RcGraph::from_chain(&chain).unwrap(), RcGraph::full(4));

        let chain = RcGraph::empty(3).to_chain().unwrap();
        assert_eq!(chain.labels(), vec![CoverLabel::new(1, 1), CoverLabel::new(1, 2), CoverLabel::new(2, 1)]);
        assert!(chain.is_increasing());
        assert_eq!(chain.end(), p("321"));
    }

    #[test]
    fn from_chain_rejects_bad_input() {
        let short = LabeledChain::from_path(&[p("1432"), p("4132")], &[CoverLabel::new(1, 1)]).unwrap();
        assert!(RcGraph::from_chain(&short).is_err());
    }

    #[test]
    fn enumerate_extremes() {
        let id: Vec<_> = enumerate(&Permutation::identity(4)).collect();
        assert_eq!(id, vec![RcGraph::empty(4)]);
        let top: Vec<_> = enumerate(&Permutation::longest(4)).collect();
        assert_eq!(top, vec![RcGraph::full(4)]);
    }

    #[test]
    fn ascii_and_json() {
        assert_eq!(example().to_ascii(), ". + +\n. .\n+");
        let js = example().to_json();
        assert_eq!(js, r#"{"n":4,"crossings":[[1,3],[1,2],[3,1]]}"#);
        assert_eq!(RcGraph::from_json(&js).unwrap(), example());
    }
}
