//! Self-check suites over whole symmetric groups, shared by the CLI's
//! `verify` command and the acceptance tests.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::calc::{
    expand_in_schubert_basis, lr_coefficients, pieri, pieri_by_polynomial, psi_alpha, psi_alpha_by_normal_form,
    schubert, skew, stable_skew, SchubertExpansion, SchubertMethod, SkewMethod,
};
use crate::chains::{increasing_chains, increasing_chains_to_w0, type_counts, Composition, LabeledChain};
use crate::error::{Error, Result};
use crate::perm::{CoverLabel, Permutation};
use crate::poly::{elementary, normal_form, Monomial};
use crate::rcgraph::{staircase_cells, RcGraph};
use crate::schur::{schur_oracle, SkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Bijection,
    Routes,
    Corollary,
    Pieri,
    Stability,
    Construction,
    Grassmannian,
    Gates,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Bijection,
        Suite::Routes,
        Suite::Corollary,
        Suite::Pieri,
        Suite::Stability,
        Suite::Construction,
        Suite::Grassmannian,
        Suite::Gates,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::Routes => "routes",
            Suite::Corollary => "corollary",
            Suite::Pieri => "pieri",
            Suite::Stability => "stability",
            Suite::Construction => "construction",
            Suite::Grassmannian => "grassmannian",
            Suite::Gates => "gates",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub checks: usize,
    pub passed: bool,
    pub failures: Vec<String>,
}

/// Failures are capped so a broken invariant does not flood the report.
const MAX_FAILURES: usize = 20;

struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < MAX_FAILURES {
            self.failures.push(what());
        }
    }

    fn report(self, suite: Suite, n: usize) -> SuiteReport {
        SuiteReport { suite: suite.name().into(), n, checks: self.checks, passed: self.failures.is_empty(), failures: self.failures }
    }
}

/// Runs one suite on `S_n`. `seed` drives the sampled part of the routes
/// suite (used when `n >= 5`).
pub fn run_suite(suite: Suite, n: usize, seed: u64) -> Result<SuiteReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    match suite {
        Suite::Bijection => bijection(n),
        Suite::Routes => routes(n, seed, 100),
        Suite::Corollary => corollary(n),
        Suite::Pieri => pieri_suite(n, 3),
        Suite::Stability => stability(n),
        Suite::Construction => construction(n),
        Suite::Grassmannian => grassmannian(n),
        Suite::Gates => gates(n),
    }
}

/// rc-graphs of every `w ∈ S_n` by testing all subsets of the staircase.
pub fn brute_force_rcgraphs(n: usize) -> BTreeMap<Permutation, Vec<RcGraph>> {
    let cells = staircase_cells(n);
    assert!(cells.len() < 32, "brute force is limited to n <= 8");
    let mut out: BTreeMap<Permutation, Vec<RcGraph>> = BTreeMap::new();
    for mask in 0u32..(1u32 << cells.len()) {
        let chosen = cells.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &c)| c);
        let graph = RcGraph::new(n, chosen).expect("staircase cells");
        if graph.is_valid() {
            let w = graph.perm().expect("valid graph");
            out.entry(w).or_default().push(graph);
        }
    }
    out
}

/// Every step of a chain to `w₀` swaps positions `(k, l)` where `k` is the
/// first coordinate of its label.
fn has_star_property(chain: &LabeledChain) -> bool {
    chain.steps().iter().all(|s| s.swap.0 == s.label.k)
}

fn bijection(n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let delta = Monomial::staircase(n);
    let w0 = Permutation::longest(n);
    let brute = brute_force_rcgraphs(n);
    for w in Permutation::all(n) {
        let graphs = brute.get(&w).cloned().unwrap_or_default();
        let special: Vec<LabeledChain> = increasing_chains_to_w0(&w).collect();
        let generic: BTreeSet<Vec<CoverLabel>> = increasing_chains(&w, &w0).map(|c| c.labels()).collect();
        let special_labels: BTreeSet<Vec<CoverLabel>> = special.iter().map(|c| c.labels()).collect();

        t.check(graphs.len() == special.len(), || format!("{w}: |R(w)| = {} but |Γ(w,w0)| = {}", graphs.len(), special.len()));
        t.check(special_labels.len() == special.len(), || format!("{w}: repeated chains in the tree search"));
        t.check(special_labels == generic, || format!("{w}: tree search and generic enumeration disagree"));
        t.check(special.iter().all(has_star_property), || format!("{w}: a chain to w0 violates the star property"));
        t.check(special.iter().all(|c| c.is_increasing() && c.validate().is_ok() && c.end() == w0), || {
            format!("{w}: tree search emitted an invalid chain")
        });

        let mut image = BTreeSet::new();
        for graph in &graphs {
            match graph.to_chain() {
                Ok(chain) => {
                    t.check(graph.monomial().mul(&chain.monomial()) == delta, || format!("{w}: x^R x^γ != x^δ for {graph:?}"));
                    t.check(RcGraph::from_chain(&chain).as_ref() == Ok(graph), || format!("{w}: round trip fails for {graph:?}"));
                    image.insert(chain.labels());
                }
                Err(e) => t.check(false, || format!("{w}: chain of {graph:?} failed: {e}")),
            }
        }
        t.check(image == special_labels, || format!("{w}: chain_of_rcgraph is not onto Γ(w,w0)"));
        for chain in &special {
            let back = RcGraph::from_chain(chain).and_then(|g| g.to_chain());
            t.check(back.as_ref() == Ok(chain), || format!("{w}: round trip fails for chain {chain}"));
        }
    }
    Ok(t.report(Suite::Bijection, n))
}

fn comparable_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut out = Vec::new();
    for u in &perms {
        for w in &perms {
            if u.bruhat_leq(w) {
                out.push((u.clone(), w.clone()));
            }
        }
    }
    out
}

/// `samples` seeded random pairs `u ≤ w` in `S_n`.
pub fn random_pairs(n: usize, seed: u64, samples: usize) -> Vec<(Permutation, Permutation)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut base: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        base.shuffle(&mut rng);
        let a = Permutation::new(base.clone()).expect("shuffle of 1..=n");
        base.shuffle(&mut rng);
        let b = Permutation::new(base.clone()).expect("shuffle of 1..=n");
        if a.bruhat_leq(&b) {
            out.push((a, b));
        } else if b.bruhat_leq(&a) {
            out.push((b, a));
        }
    }
    out
}

fn routes(n: usize, seed: u64, samples: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let pairs = if n <= 4 { comparable_pairs(n) } else { random_pairs(n, seed, samples) };
    for (u, w) in pairs {
        let nf = skew(&w, &u, n, SkewMethod::NormalForm)?;
        let ch = skew(&w, &u, n, SkewMethod::Chains)?;
        let lr = skew(&w, &u, n, SkewMethod::Lr)?;
        t.check(nf == ch, || format!("S_{{{w}/{u}}}: normal form {nf} != chains {ch}"));
        t.check(nf == lr, || format!("S_{{{w}/{u}}}: normal form {nf} != lr {lr}"));
        let e = expand_in_schubert_basis(&nf, n)?;
        t.check(e.iter().all(|(_, c)| c > 0), || format!("S_{{{w}/{u}}} has a negative Schubert coefficient: {e}"));
    }
    Ok(t.report(Suite::Routes, n))
}

fn corollary(n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let w0 = Permutation::longest(n);
    let mut to_top: BTreeMap<Permutation, BTreeMap<Composition, usize>> = BTreeMap::new();
    for v in Permutation::all(n) {
        to_top.insert(v.clone(), type_counts(&v, &w0));
    }
    for (u, w) in comparable_pairs(n) {
        let lhs = type_counts(&u, &w);
        let c = expand_in_schubert_basis(&skew(&w, &u, n, SkewMethod::Lr)?, n)?;
        for alpha in Composition::all_of_weight(w.length() - u.length(), n - 1) {
            let left = lhs.get(&alpha).copied().unwrap_or(0) as i64;
            let right: i64 = c.iter().map(|(w0v, coef)| coef * to_top[w0v].get(&alpha).copied().unwrap_or(0) as i64).sum();
            t.check(left == right, || format!("I_{alpha}({u},{w}) = {left} but the sum is {right}"));
        }
    }
    Ok(t.report(Suite::Corollary, n))
}

/// Pieri products for `a <= max_degree` and every `k < n`, and `ψ_α` on each
/// Schubert class for every `α ≤ δ`.
fn pieri_suite(n: usize, max_degree: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    if n < 2 {
        return Ok(t.report(Suite::Pieri, n));
    }
    let alphas = Composition::below_staircase(n);
    for u in Permutation::all(n) {
        for a in 0..=max_degree {
            for k in 1..n {
                let chains = pieri(&u, a, k, n)?;
                let poly = pieri_by_polynomial(&u, a, k, n)?;
                t.check(chains == poly, || format!("σ_{u}·h_{a}(x1..x{k}): chains {chains} != polynomial {poly}"));
            }
        }
        let f = SchubertExpansion::basis(&u);
        for alpha in &alphas {
            let iterated = psi_alpha(&f, alpha, n)?;
            let coefficient = psi_alpha_by_normal_form(&f, alpha, n)?;
            t.check(iterated == coefficient, || format!("ψ_{alpha}(σ_{u}): Pieri {iterated} != normal form {coefficient}"));
        }
    }
    Ok(t.report(Suite::Pieri, n))
}

fn stability(n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for (u, w) in comparable_pairs(n) {
        let base = stable_skew(&w, &u, n)?;
        for m in [n + 1, n + 2] {
            let bigger = stable_skew(&w.embed(m)?, &u.embed(m)?, m)?;
            t.check(base == bigger, || format!("x^-δ S_{{{w}/{u}}} changes from n={n} to n={m}"));
        }
    }
    Ok(t.report(Suite::Stability, n))
}

fn construction(n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for w in Permutation::all(n) {
        let rc = schubert(&w, n, SchubertMethod::RcGraph)?;
        let ch = schubert(&w, n, SchubertMethod::Chain)?;
        t.check(rc == ch, || format!("S_{w}: rc-graph route {rc} != chain route {ch}"));
        t.check(normal_form(&rc, n)? == rc, || format!("S_{w} is not in normal form"));
    }
    for i in 1..=n {
        t.check(normal_form(&elementary(i, n), n)?.is_zero(), || format!("e_{i} does not reduce to 0"));
    }
    Ok(t.report(Suite::Construction, n))
}

fn grassmannian(n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for w in Permutation::all(n) {
        let Some((shape, k)) = w.grassmannian_shape() else { continue };
        let s = schubert(&w, n, SchubertMethod::RcGraph)?;
        let schur = schur_oracle(&SkewShape::straight(shape.clone())?, k)?;
        t.check(s == schur, || format!("S_{w} != s_{shape:?}(x1..x{k})"));
    }
    Ok(t.report(Suite::Grassmannian, n))
}

/// Leading monomial of `S_w` is `x^{code(w)}` with coefficient 1;
/// `c^w_{u,v} = c^w_{v,u}`; structure constants are nonnegative and graded.
fn gates(n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    for w in &perms {
        let s = schubert(w, n, SchubertMethod::RcGraph)?;
        let code = Monomial::from_usizes(&w.code());
        t.check(s.leading_term() == Some((&code, 1)), || format!("S_{w} does not lead with x^code = {code}"));
    }
    if n <= 4 {
        for u in &perms {
            for v in &perms {
                let uv = lr_coefficients(u, v, n)?;
                let vu = lr_coefficients(v, u, n)?;
                t.check(uv == vu, || format!("c_{{{u},{v}}} != c_{{{v},{u}}}"));
                t.check(uv.iter().all(|(_, c)| c > 0), || format!("negative structure constant in σ_{u}σ_{v}"));
                t.check(uv.iter().all(|(w, _)| w.length() == u.length() + v.length()), || {
                    format!("σ_{u}σ_{v} is not homogeneous")
                });
                if v.is_identity() {
                    t.check(uv == SchubertExpansion::basis(u), || format!("σ_{u}·1 != σ_{u}"));
                }
            }
        }
    }
    Ok(t.report(Suite::Gates, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_s3() {
        for suite in Suite::ALL {
            let report = run_suite(suite, 3, 0).unwrap();
            assert!(report.passed, "{suite}: {:?}", report.failures);
            assert!(report.checks > 0, "{suite}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn random_pairs_are_seeded() {
        let a = random_pairs(5, 7, 10);
        assert_eq!(a, random_pairs(5, 7, 10));
        assert!(a.iter().all(|(u, w)| u.bruhat_leq(w)));
    }
}
