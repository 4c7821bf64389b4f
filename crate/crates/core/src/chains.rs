//! Saturated labeled chains in the Bruhat order and their enumeration.
//!
//! A chain is increasing when its labels are strictly increasing in the
//! lexicographic order on `(k, b)`. Two enumerators are provided:
//!
//! * [`IncreasingChains`] walks every labeled cover and works for any pair of
//!   endpoints `u ≤ w`;
//! * [`ChainsToLongest`] handles chains ending at `w₀`, where the branches at
//!   a node `u` are exactly the covers `u -> u·(k,l)` labeled `(k, u(k))` with
//!   `k` the first position such that `u(k) + k < n + 1`. Each node costs
//!   `O(n)`, for `O(n·l·c)` overall.
//!
//! Both are depth-first iterators pulled by the caller; no chain set is ever
//! materialized unless the caller collects it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{cover_partners, cover_positions, CoverLabel, Permutation};
use crate::poly::Monomial;

/// A weak composition `(α_1, …, α_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn zero(parts: usize) -> Self {
        Composition(vec![0; parts])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// The staircase `δ = (n-1, …, 1)` with `n - 1` parts.
    pub fn staircase(n: usize) -> Self {
        Composition((1..n).map(|i| n - i).collect())
    }

    /// All compositions with `parts` parts summing to `weight`, in
    /// lexicographic order.
    pub fn all_of_weight(weight: usize, parts: usize) -> Vec<Composition> {
        fn rec(left: usize, idx: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if idx + 1 == cur.len() {
                cur[idx] = left;
                out.push(Composition(cur.clone()));
                return;
            }
            for a in 0..=left {
                cur[idx] = a;
                rec(left - a, idx + 1, cur, out);
            }
        }
        let mut out = Vec::new();
        if parts == 0 {
            if weight == 0 {
                out.push(Composition(Vec::new()));
            }
            return out;
        }
        rec(weight, 0, &mut vec![0; parts], &mut out);
        out
    }

    /// Compositions `α ≤ δ` coordinatewise for the given `n`.
    pub fn below_staircase(n: usize) -> Vec<Composition> {
        let delta = Composition::staircase(n);
        let mut out = vec![Composition(Vec::new())];
        for &bound in delta.parts() {
            out = out
                .into_iter()
                .flat_map(|c| {
                    (0..=bound).map(move |a| {
                        let mut next = c.0.clone();
                        next.push(a);
                        Composition(next)
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `1,2,0`, `(1,2,0)` or `[1,2,0]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if inner.trim().is_empty() {
            return Ok(Composition(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidComposition(s.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }
}

/// One edge `u -(label)-> u·(i,j)` of a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainStep {
    pub label: CoverLabel,
    /// Swapped positions `i < j`.
    pub swap: (usize, usize),
}

/// A saturated chain in the labeled Bruhat order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledChain {
    start: Permutation,
    steps: Vec<ChainStep>,
}

impl LabeledChain {
    pub fn empty(start: Permutation) -> Self {
        LabeledChain { start, steps: Vec::new() }
    }

    /// Builds a chain, checking every step is a labeled cover.
    pub fn new(start: Permutation, steps: Vec<ChainStep>) -> Result<Self> {
        let chain = LabeledChain { start, steps };
        chain.validate()?;
        Ok(chain)
    }

    /// Builds a chain from the permutations it passes through and its labels.
    pub fn from_path(perms: &[Permutation], labels: &[CoverLabel]) -> Result<Self> {
        if perms.len() != labels.len() + 1 {
            return Err(Error::InvalidChain("need one more permutation than labels".into()));
        }
        let mut steps = Vec::with_capacity(labels.len());
        for (pair, &label) in perms.windows(2).zip(labels) {
            let swap = cover_positions(&pair[0], &pair[1])?;
            steps.push(ChainStep { label, swap });
        }
        LabeledChain::new(perms[0].clone(), steps)
    }

    /// Recovers a chain from its start, labels and (optionally) end point by
    /// searching the covers compatible with each label. Fails when no chain or
    /// more than one chain fits.
    pub fn resolve(start: Permutation, labels: &[CoverLabel], end: Option<&Permutation>) -> Result<Self> {
        fn rec(
            cur: &mut Permutation,
            labels: &[CoverLabel],
            end: Option<&Permutation>,
            path: &mut Vec<ChainStep>,
            found: &mut Vec<Vec<ChainStep>>,
        ) {
            if found.len() > 1 {
                return;
            }
            let Some((&label, rest)) = labels.split_first() else {
                if end.is_none_or(|e| e == cur) {
                    found.push(path.clone());
                }
                return;
            };
            if label.k == 0 || label.b == 0 || label.b > cur.n() || label.k >= cur.n() {
                return;
            }
            let i = cur.position_of(label.b);
            if i > label.k {
                return;
            }
            let partners: Vec<usize> = cover_partners(cur, i).filter(|&j| j > label.k).collect();
            for j in partners {
                cur.swap_in_place(i, j);
                path.push(ChainStep { label, swap: (i, j) });
                rec(cur, rest, end, path, found);
                path.pop();
                cur.swap_in_place(i, j);
            }
        }
        let mut found = Vec::new();
        rec(&mut start.clone(), labels, end, &mut Vec::new(), &mut found);
        match found.len() {
            0 => Err(Error::InvalidChain("no chain of labeled covers matches these labels".into())),
            1 => Ok(LabeledChain { start, steps: found.pop().unwrap() }),
            _ => Err(Error::InvalidChain("labels are ambiguous; the end point is required".into())),
        }
    }

    pub fn start(&self) -> &Permutation {
        &self.start
    }

    pub fn steps(&self) -> &[ChainStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn labels(&self) -> Vec<CoverLabel> {
        self.steps.iter().map(|s| s.label).collect()
    }

    /// `start, u_1, …, end`.
    pub fn permutations(&self) -> Vec<Permutation> {
        let mut cur = self.start.clone();
        let mut out = vec![cur.clone()];
        for step in &self.steps {
            cur.swap_in_place(step.swap.0, step.swap.1);
            out.push(cur.clone());
        }
        out
    }

    pub fn end(&self) -> Permutation {
        let mut cur = self.start.clone();
        for step in &self.steps {
            cur.swap_in_place(step.swap.0, step.swap.1);
        }
        cur
    }

    /// Checks that each step is a Bruhat cover carrying a valid label.
    pub fn validate(&self) -> Result<()> {
        let mut cur = self.start.clone();
        for (idx, step) in self.steps.iter().enumerate() {
            let (i, j) = step.swap;
            if i == 0 || i >= j || j > cur.n() {
                return Err(Error::InvalidChain(format!("step {idx}: bad positions ({i},{j})")));
            }
            let next = cur.swapped(i, j);
            let labels = cur.labeled_edges(&next)?;
            if !labels.contains(&step.label) {
                return Err(Error::InvalidChain(format!(
                    "step {idx}: {} is not a label of {cur} -> {next}",
                    step.label
                )));
            }
            cur = next;
        }
        Ok(())
    }

    pub fn is_increasing(&self) -> bool {
        self.steps.windows(2).all(|w| w[0].label < w[1].label)
    }

    /// The type `α`: `α_k` counts labels with first coordinate `k`. Has
    /// `n - 1` parts.
    pub fn chain_type(&self) -> Composition {
        let mut parts = vec![0; self.start.n().saturating_sub(1)];
        for step in &self.steps {
            parts[step.label.k - 1] += 1;
        }
        Composition(parts)
    }

    /// `x^γ`, equal to `x^α` for the type `α`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_usizes(self.chain_type().parts())
    }

    pub fn to_json_value(&self) -> ChainJson {
        ChainJson {
            start: self.start.clone(),
            steps: self.labels(),
            end: Some(self.end()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("chain JSON")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: ChainJson = serde_json::from_str(s)?;
        LabeledChain::resolve(raw.start, &raw.steps, raw.end.as_ref())
    }
}

impl fmt::Display for LabeledChain {
    /// `1432 -(1,1)-> 4132 -(2,1)-> 4231`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cur = self.start.clone();
        write!(f, "{cur}")?;
        for step in &self.steps {
            cur.swap_in_place(step.swap.0, step.swap.1);
            write!(f, " -{}-> {cur}", step.label)?;
        }
        Ok(())
    }
}

/// Wire form `{"start": "<perm>", "steps": [[k,b],…], "end": "<perm>"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub start: Permutation,
    pub steps: Vec<CoverLabel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub end: Option<Permutation>,
}

struct Frame {
    candidates: Vec<ChainStep>,
    next: usize,
}

/// All increasing chains from `u` to `w`, depth first, ordered
/// lexicographically by label sequence (ties broken by the swapped positions).
pub struct IncreasingChains {
    target: Permutation,
    target_len: usize,
    current: Permutation,
    current_len: usize,
    start: Permutation,
    stack: Vec<Frame>,
    path: Vec<ChainStep>,
    pending_empty: bool,
}

impl IncreasingChains {
    pub fn new(u: &Permutation, w: &Permutation) -> Self {
        let mut it = IncreasingChains {
            target: w.clone(),
            target_len: w.length(),
            current: u.clone(),
            current_len: u.length(),
            start: u.clone(),
            stack: Vec::new(),
            path: Vec::new(),
            pending_empty: false,
        };
        if u.n() == w.n() && u.bruhat_leq(w) {
            if u == w {
                it.pending_empty = true;
            } else {
                let candidates = it.candidates(None);
                it.stack.push(Frame { candidates, next: 0 });
            }
        }
        it
    }

    /// Labeled covers out of the current node whose label exceeds `last` and
    /// whose target still lies below `w`.
    fn candidates(&self, last: Option<CoverLabel>) -> Vec<ChainStep> {
        let u = &self.current;
        let n = u.n();
        let min_k = last.map_or(1, |l| l.k);
        let mut out = Vec::new();
        for i in 1..n {
            // labels (k, u(i)) need k >= i, and k < j
            for j in cover_partners(u, i) {
                if j <= min_k {
                    continue;
                }
                let b = u.at(i);
                let labels: Vec<CoverLabel> = (i.max(min_k)..j)
                    .map(|k| CoverLabel { k, b })
                    .filter(|l| last.is_none_or(|last| *l > last))
                    .collect();
                if labels.is_empty() || !u.swapped(i, j).bruhat_leq(&self.target) {
                    continue;
                }
                out.extend(labels.into_iter().map(|label| ChainStep { label, swap: (i, j) }));
            }
        }
        out.sort();
        out
    }
}

impl Iterator for IncreasingChains {
    type Item = LabeledChain;

    fn next(&mut self) -> Option<LabeledChain> {
        if self.pending_empty {
            self.pending_empty = false;
            return Some(LabeledChain::empty(self.start.clone()));
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.next == top.candidates.len() {
                self.stack.pop();
                if let Some(step) = self.path.pop() {
                    self.current.swap_in_place(step.swap.0, step.swap.1);
                    self.current_len -= 1;
                }
                continue;
            }
            let step = top.candidates[top.next];
            top.next += 1;
            self.current.swap_in_place(step.swap.0, step.swap.1);
            self.current_len += 1;
            self.path.push(step);
            if self.current_len == self.target_len {
                let hit = self.current == self.target;
                let chain = hit.then(|| LabeledChain { start: self.start.clone(), steps: self.path.clone() });
                self.path.pop();
                self.current.swap_in_place(step.swap.0, step.swap.1);
                self.current_len -= 1;
                if let Some(chain) = chain {
                    return Some(chain);
                }
            } else {
                let candidates = self.candidates(Some(step.label));
                self.stack.push(Frame { candidates, next: 0 });
            }
        }
    }
}

/// Lazily scanned branches at one node of the tree of chains to `w₀`.
struct BranchCursor {
    k: usize,
    b: usize,
    next_l: usize,
    ceiling: usize,
}

/// All increasing chains from `w` to `w₀`, generated by the tree search whose
/// branches at `u` are the covers `u -> u·(k,l)` labeled `(k, u(k))`, `k`
/// minimal with `u(k) + k < n + 1`, ordered by `l`.
pub struct ChainsToLongest {
    start: Permutation,
    prefix: Vec<ChainStep>,
    current: Permutation,
    stack: Vec<BranchCursor>,
    path: Vec<ChainStep>,
    done: bool,
    work: u64,
}

impl ChainsToLongest {
    pub fn new(w: &Permutation) -> Self {
        Self::with_prefix(w.clone(), Vec::new())
    }

    /// Enumerates the subtree below the node reached from `start` by
    /// `prefix`; emitted chains still begin at `start`.
    fn with_prefix(start: Permutation, prefix: Vec<ChainStep>) -> Self {
        let mut current = start.clone();
        for s in &prefix {
            current.swap_in_place(s.swap.0, s.swap.1);
        }
        let mut it = ChainsToLongest {
            start,
            prefix,
            current,
            stack: Vec::new(),
            path: Vec::new(),
            done: false,
            work: 0,
        };
        if let Some(cursor) = it.open_node() {
            it.stack.push(cursor);
        }
        it
    }

    /// Elementary position inspections performed so far.
    pub fn work(&self) -> u64 {
        self.work
    }

    /// Branch point of the current node, or `None` at `w₀`.
    fn open_node(&mut self) -> Option<BranchCursor> {
        let n = self.current.n();
        for i in 1..=n {
            self.work += 1;
            let b = self.current.at(i);
            if b + i < n + 1 {
                return Some(BranchCursor { k: i, b, next_l: i + 1, ceiling: usize::MAX });
            }
        }
        None
    }

    fn emit(&self) -> LabeledChain {
        let mut steps = self.prefix.clone();
        steps.extend_from_slice(&self.path);
        LabeledChain { start: self.start.clone(), steps }
    }

    /// First-level steps of the tree, in branch order.
    fn root_branches(w: &Permutation) -> Vec<ChainStep> {
        let n = w.n();
        match (1..=n).find(|&i| w.at(i) + i < n + 1) {
            None => Vec::new(),
            Some(k) => {
                let label = CoverLabel { k, b: w.at(k) };
                cover_partners(w, k).map(|l| ChainStep { label, swap: (k, l) }).collect()
            }
        }
    }
}

impl Iterator for ChainsToLongest {
    type Item = LabeledChain;

    fn next(&mut self) -> Option<LabeledChain> {
        if self.done {
            return None;
        }
        if self.stack.is_empty() {
            // the root is w₀ itself
            self.done = true;
            return Some(self.emit());
        }
        let n = self.current.n();
        loop {
            let Some(top) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            let mut branch = None;
            while top.next_l <= n {
                let l = top.next_l;
                top.next_l += 1;
                self.work += 1;
                let v = self.current.at(l);
                if v > top.b && v < top.ceiling {
                    top.ceiling = v;
                    branch = Some(ChainStep { label: CoverLabel { k: top.k, b: top.b }, swap: (top.k, l) });
                    break;
                }
            }
            match branch {
                None => {
                    self.stack.pop();
                    if let Some(step) = self.path.pop() {
                        self.current.swap_in_place(step.swap.0, step.swap.1);
                    }
                }
                Some(step) => {
                    self.current.swap_in_place(step.swap.0, step.swap.1);
                    self.path.push(step);
                    match self.open_node() {
                        Some(cursor) => self.stack.push(cursor),
                        None => {
                            let chain = self.emit();
                            self.path.pop();
                            self.current.swap_in_place(step.swap.0, step.swap.1);
                            return Some(chain);
                        }
                    }
                }
            }
        }
    }
}

/// Stream of `Γ(u, w)`.
pub fn increasing_chains(u: &Permutation, w: &Permutation) -> IncreasingChains {
    IncreasingChains::new(u, w)
}

/// Stream of `Γ(w, w₀)` using the specialized branching rule.
pub fn increasing_chains_to_w0(w: &Permutation) -> ChainsToLongest {
    ChainsToLongest::new(w)
}

/// `Γ(w, w₀)` collected in the same order as [`increasing_chains_to_w0`], with
/// the subtrees below the root's branches explored in parallel.
pub fn par_chains_to_w0(w: &Permutation) -> Vec<LabeledChain> {
    let roots = ChainsToLongest::root_branches(w);
    if roots.is_empty() {
        return vec![LabeledChain::empty(w.clone())];
    }
    roots
        .into_par_iter()
        .map(|step| ChainsToLongest::with_prefix(w.clone(), vec![step]).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// `I_α(u, w)`: the number of increasing chains from `u` to `w` of type `α`.
pub fn count_by_type(u: &Permutation, w: &Permutation, alpha: &Composition) -> usize {
    let want = padded(alpha, u.n());
    let Some(want) = want else { return 0 };
    increasing_chains(u, w).filter(|c| c.chain_type() == want).count()
}

/// Histogram of chain types over `Γ(u, w)`.
pub fn type_counts(u: &Permutation, w: &Permutation) -> BTreeMap<Composition, usize> {
    let mut counts = BTreeMap::new();
    let chains: Box<dyn Iterator<Item = LabeledChain>> = if w.is_longest() && u.n() == w.n() {
        Box::new(increasing_chains_to_w0(u))
    } else {
        Box::new(increasing_chains(u, w))
    };
    for chain in chains {
        *counts.entry(chain.chain_type()).or_insert(0) += 1;
    }
    counts
}

/// Pads `α` with zeros to `n - 1` parts; `None` if it has nonzero parts
/// beyond that.
fn padded(alpha: &Composition, n: usize) -> Option<Composition> {
    let parts = n.saturating_sub(1);
    if alpha.0.len() > parts {
        if alpha.0[parts..].iter().any(|&a| a != 0) {
            return None;
        }
        return Some(Composition(alpha.0[..parts].to_vec()));
    }
    let mut v = alpha.0.clone();
    v.resize(parts, 0);
    Some(Composition(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sample_chain() -> LabeledChain {
        LabeledChain::from_path(
            &[p("1432"), p("4132"), p("4231"), p("4321")],
            &[CoverLabel::new(1, 1), CoverLabel::new(2, 1), CoverLabel::new(2, 2)],
        )
        .unwrap()
    }

    #[test]
    fn monomial_and_type_of_example_chain() {
        let chain = sample_chain();
        assert!(chain.is_increasing());
        assert_eq!(chain.chain_type(), Composition(vec![1, 2, 0]));
        assert_eq!(chain.monomial(), Monomial::new(vec![1, 2]));
        assert_eq!(chain.monomial().degree() as usize, chain.len());
        let empty = LabeledChain::empty(p("2413"));
        assert_eq!(empty.chain_type(), Composition::zero(3));
        assert!(empty.monomial().is_one());
    }

    #[test]
    fn display_and_json() {
        let chain = sample_chain();
        assert_eq!(chain.to_string(), "1432 -(1,1)-> 4132 -(2,1)-> 4231 -(2,2)-> 4321");
        let js = chain.to_json();
        assert_eq!(js, r#"{"start":"1432","steps":[[1,1],[2,1],[2,2]],"end":"4321"}"#);
        assert_eq!(LabeledChain::from_json(&js).unwrap(), chain);
        let bare = r#"{"start":"1432","steps":[[1,1],[2,1],[2,2]]}"#;
        assert_eq!(LabeledChain::from_json(bare).unwrap(), chain);
    }

    #[test]
    fn ambiguous_labels_need_end() {
        // 2143 has two covers carrying the label (1,2)
        let bare = r#"{"start":"2143","steps":[[1,2]]}"#;
        assert!(LabeledChain::from_json(bare).is_err());
        let with_end = r#"{"start":"2143","steps":[[1,2]],"end":"3142"}"#;
        assert_eq!(LabeledChain::from_json(with_end).unwrap().end(), p("3142"));
    }

    #[test]
    fn invalid_chain_rejected() {
        let bad = LabeledChain::new(p("1234"), vec![ChainStep { label: CoverLabel::new(2, 1), swap: (1, 2) }]);
        assert!(bad.is_err());
    }

    #[test]
    fn trivial_interval_has_one_chain() {
        let u = p("2413");
        let chains: Vec<_> = increasing_chains(&u, &u).collect();
        assert_eq!(chains, vec![LabeledChain::empty(u.clone())]);
        let w0 = Permutation::longest(4);
        let chains: Vec<_> = increasing_chains_to_w0(&w0).collect();
        assert_eq!(chains, vec![LabeledChain::empty(w0)]);
    }

    #[test]
    fn incomparable_interval_is_empty() {
        assert_eq!(increasing_chains(&p("2413"), &p("1324")).count(), 0);
        assert_eq!(increasing_chains(&p("2143"), &p("1432")).count(), 0);
    }

    #[test]
    fn example_chain_is_enumerated() {
        let target = sample_chain();
        let generic: Vec<_> = increasing_chains(&p("1432"), &p("4321")).collect();
        assert!(generic.contains(&target));
        let special: Vec<_> = increasing_chains_to_w0(&p("1432")).collect();
        assert!(special.contains(&target));
        assert_eq!(special.len(), 5);
    }

    #[test]
    fn count_by_type_basics() {
        let u = p("1432");
        let w0 = Permutation::longest(4);
        assert_eq!(count_by_type(&u, &u, &Composition::zero(3)), 1);
        assert_eq!(count_by_type(&u, &u, &Composition(vec![1, 0, 0])), 0);
        assert_eq!(count_by_type(&u, &w0, &Composition(vec![1, 2, 0])), 1);
        let total: usize = type_counts(&u, &w0).values().sum();
        assert_eq!(total, increasing_chains(&u, &w0).count());
    }

    #[test]
    fn parallel_matches_sequential() {
        for w in Permutation::all(5) {
            let seq: Vec<_> = increasing_chains_to_w0(&w).collect();
            assert_eq!(par_chains_to_w0(&w), seq, "{w}");
        }
    }

    #[test]
    fn compositions() {
        assert_eq!(Composition::all_of_weight(2, 2).len(), 3);
        assert_eq!(Composition::all_of_weight(0, 0), vec![Composition(vec![])]);
        assert_eq!(Composition::below_staircase(4).len(), 24);
        assert_eq!("1,2,0".parse::<Composition>().unwrap(), Composition(vec![1, 2, 0]));
        assert_eq!("(1,2,0)".parse::<Composition>().unwrap(), Composition(vec![1, 2, 0]));
        assert!("1,x".parse::<Composition>().is_err());
    }
}
