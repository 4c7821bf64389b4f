//! Oracles shared by the integration tests. They avoid the library's own
//! constructions on purpose.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use schubert::{Monomial, Permutation, Polynomial};

/// `∂_i f = (f − s_i f) / (x_i − x_{i+1})`, term by term.
pub fn divided_difference(f: &Polynomial, i: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in f.terms() {
        let mut e = m.padded(i + 1);
        let (p, q) = (e[i - 1], e[i]);
        let (hi, lo, sign) = if p >= q { (p, q, 1) } else { (q, p, -1) };
        for j in 0..hi - lo {
            e[i - 1] = hi - 1 - j;
            e[i] = lo + j;
            out.add_term(Monomial::new(e.clone()), sign * c).unwrap();
        }
    }
    out
}

/// Schubert polynomials of `S_n` from `S_{w₀} = x^δ` by divided differences.
pub fn schubert_by_divided_differences(n: usize) -> BTreeMap<Permutation, Polynomial> {
    let w0 = Permutation::longest(n);
    let mut out = BTreeMap::new();
    out.insert(w0.clone(), Polynomial::term(Monomial::staircase(n), 1));
    let mut queue = VecDeque::from([w0]);
    while let Some(w) = queue.pop_front() {
        for i in 1..n {
            if w.at(i) > w.at(i + 1) {
                let v = w.swapped(i, i + 1);
                if !out.contains_key(&v) {
                    let p = divided_difference(&out[&w], i);
                    out.insert(v.clone(), p);
                    queue.push_back(v);
                }
            }
        }
    }
    out
}

/// Bruhat order as the transitive closure of `u -> u·t` with `ℓ` going up by
/// one, found by searching upward from `u`.
pub fn bruhat_up_set(u: &Permutation) -> Vec<Permutation> {
    let n = u.n();
    let mut seen = vec![u.clone()];
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(v) = queue.pop_front() {
        for i in 1..=n {
            for j in i + 1..=n {
                let x = v.swapped(i, j);
                if x.length() == v.length() + 1 && !seen.contains(&x) {
                    seen.push(x.clone());
                    queue.push_back(x);
                }
            }
        }
    }
    seen
}
