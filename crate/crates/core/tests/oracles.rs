mod common;

use proptest::prelude::*;

use schubert::chains::{increasing_chains, increasing_chains_to_w0, par_chains_to_w0, LabeledChain};
use schubert::verify::brute_force_rcgraphs;
use schubert::{
    elementary, expand_in_schubert_basis, normal_form, rcgraph, schubert, skew, Monomial, Permutation, Polynomial,
    RcGraph, SchubertExpansion, SchubertMethod, SkewMethod,
};

#[test]
fn schubert_matches_divided_differences() {
    for n in 1..=6 {
        let oracle = common::schubert_by_divided_differences(n);
        assert_eq!(oracle.len(), (1..=n).product::<usize>());
        for (w, expected) in &oracle {
            assert_eq!(&schubert(w, n, SchubertMethod::RcGraph).unwrap(), expected, "S_{w}");
        }
    }
}

#[test]
fn rcgraphs_match_brute_force() {
    for n in 1..=6 {
        let brute = brute_force_rcgraphs(n);
        for w in Permutation::all(n) {
            let mut fast: Vec<RcGraph> = rcgraph::enumerate(&w).collect();
            fast.sort_by(|a, b| a.crossings().cmp(b.crossings()));
            let mut slow = brute.get(&w).cloned().unwrap_or_default();
            slow.sort_by(|a, b| a.crossings().cmp(b.crossings()));
            assert_eq!(fast, slow, "rc-graphs of {w}");
        }
    }
}

#[test]
fn bruhat_leq_matches_cover_closure() {
    for n in 1..=5 {
        let all: Vec<Permutation> = Permutation::all(n).collect();
        for u in &all {
            let up = common::bruhat_up_set(u);
            for w in &all {
                assert_eq!(u.bruhat_leq(w), up.contains(w), "{u} <= {w}");
            }
        }
    }
}

#[test]
fn specialized_tree_matches_generic_search() {
    for n in 1..=6 {
        let w0 = Permutation::longest(n);
        for w in Permutation::all(n) {
            let fast: Vec<LabeledChain> = increasing_chains_to_w0(&w).collect();
            let mut slow: Vec<LabeledChain> = increasing_chains(&w, &w0).collect();
            let mut sorted = fast.clone();
            sorted.sort_by_key(|c| c.labels());
            slow.sort_by_key(|c| c.labels());
            assert_eq!(sorted, slow, "Γ({w}, w0)");
            assert_eq!(par_chains_to_w0(&w), fast);
        }
    }
}

#[test]
fn chains_count_matches_skew_coefficient_sum() {
    // the number of increasing chains u -> w is S_{w/u}(1, ..., 1)
    let n = 4;
    let all: Vec<Permutation> = Permutation::all(n).collect();
    for u in &all {
        for w in all.iter().filter(|w| u.bruhat_leq(w)) {
            let count = increasing_chains(u, w).count() as i64;
            let p = skew(w, u, n, SkewMethod::NormalForm).unwrap();
            assert_eq!(count, p.eval_ones().unwrap(), "Γ({u},{w})");
        }
    }
    let p = skew(&"2413".parse().unwrap(), &"1324".parse().unwrap(), 4, SkewMethod::NormalForm).unwrap();
    assert_eq!(p.eval_ones().unwrap(), 4);
}

#[test]
fn chain_and_rcgraph_json_round_trip() {
    let w: Permutation = "21543".parse().unwrap();
    for chain in increasing_chains_to_w0(&w) {
        assert_eq!(LabeledChain::from_json(&chain.to_json()).unwrap(), chain);
        let r = RcGraph::from_chain(&chain).unwrap();
        assert_eq!(RcGraph::from_json(&r.to_json()).unwrap(), r);
    }
}

#[test]
fn elementary_symmetric_polynomials_vanish() {
    for n in 1..=6 {
        for i in 1..=n {
            assert!(normal_form(&elementary(i, n), n).unwrap().is_zero());
        }
    }
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn poly_strategy(nvars: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -5i64..=5), 0..6).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(e, c)| (Monomial::new(e), c))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn code_round_trip(w in (1usize..=8).prop_flat_map(perm_strategy)) {
        prop_assert_eq!(Permutation::from_code(&w.code(), w.n()).unwrap(), w.clone());
        prop_assert_eq!(w.code().iter().sum::<usize>(), w.length());
        prop_assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
    }

    #[test]
    fn normal_form_is_a_ring_map(f in poly_strategy(4, 4), g in poly_strategy(4, 4)) {
        let n = 4;
        let nf = |p: &Polynomial| normal_form(p, n).unwrap();
        prop_assert_eq!(nf(&f.add(&g).unwrap()), nf(&f).add(&nf(&g)).unwrap());
        prop_assert_eq!(nf(&f.mul(&g).unwrap()), nf(&nf(&f).mul(&nf(&g)).unwrap()));
        prop_assert_eq!(nf(&nf(&f)), nf(&f));
        prop_assert!(nf(&f).in_staircase(n));
    }

    #[test]
    fn polynomial_text_and_json_round_trip(f in poly_strategy(5, 3)) {
        prop_assert_eq!(f.to_string().parse::<Polynomial>().unwrap(), f.clone());
        prop_assert_eq!(Polynomial::from_json(&f.to_json(5)).unwrap(), f);
    }

    #[test]
    fn multiplication_laws(f in poly_strategy(3, 3), g in poly_strategy(3, 3), h in poly_strategy(3, 3)) {
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        let lhs = f.mul(&g.add(&h).unwrap()).unwrap();
        let rhs = f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_reconstructs_the_polynomial(f in poly_strategy(4, 4)) {
        let n = 4;
        let p = normal_form(&f, n).unwrap();
        let e = expand_in_schubert_basis(&p, n).unwrap();
        prop_assert_eq!(e.to_polynomial().unwrap(), p);
        prop_assert_eq!(SchubertExpansion::from_json(&e.to_json(), n).unwrap(), e);
    }
}
