//! Schubert polynomials, skew Schubert polynomials, expansion in the Schubert
//! basis and Littlewood-Richardson coefficients.
//!
//! The skew Schubert polynomial `S_{w/u}` is the normal form of
//! `S_u · S_{w₀w}`. It is computed three ways, which must agree:
//!
//! * [`SkewMethod::NormalForm`]: multiply and reduce;
//! * [`SkewMethod::Chains`]: sum `x^δ / x^γ` over increasing chains `u -> w`;
//! * [`SkewMethod::Lr`]: `Σ_v c^w_{u,v} S_{w₀v}` with each `c^w_{u,v}` read off
//!   the Schubert expansion of `S_u · S_v`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::chains::{increasing_chains, Composition};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{check_below_staircase, complete_h, normal_form, LaurentPolynomial, Monomial, Polynomial};
use crate::rcgraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SchubertMethod {
    /// Sum of `x^R` over rc-graphs.
    #[default]
    RcGraph,
    /// Sum of `x^δ / x^γ` over increasing chains to `w₀`.
    Chain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SkewMethod {
    #[default]
    NormalForm,
    Chains,
    Lr,
}

/// An element of `H*(Fl_n)` in the Schubert basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchubertExpansion {
    n: usize,
    terms: BTreeMap<Permutation, i64>,
}

impl SchubertExpansion {
    pub fn new(n: usize) -> Self {
        SchubertExpansion { n, terms: BTreeMap::new() }
    }

    /// The basis element `σ_w`.
    pub fn basis(w: &Permutation) -> Self {
        let mut e = SchubertExpansion::new(w.n());
        e.terms.insert(w.clone(), 1);
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: &Permutation) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, i64)> + '_ {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Permutation, c: i64) -> Result<()> {
        if w.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: w.n() });
        }
        let entry = self.terms.entry(w.clone()).or_insert(0);
        *entry = entry.checked_add(c).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.terms.remove(&w);
        }
        Ok(())
    }

    /// `Σ c_w S_w` as a polynomial.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let mut p = Polynomial::zero();
        for (w, c) in self.iter() {
            p = p.add(&schubert(w, self.n, SchubertMethod::RcGraph)?.scale(c)?)?;
        }
        Ok(p)
    }

    /// Coefficients keyed by permutation word, sorted by that word.
    pub fn to_json_map(&self) -> BTreeMap<String, i64> {
        self.iter().map(|(w, c)| (w.to_word(), c)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_map()).expect("expansion JSON")
    }

    pub fn from_json(s: &str, n: usize) -> Result<Self> {
        let raw: BTreeMap<String, i64> = serde_json::from_str(s)?;
        let mut e = SchubertExpansion::new(n);
        for (w, c) in raw {
            e.add_term(w.parse()?, c)?;
        }
        Ok(e)
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

type SchubertCache = RwLock<HashMap<(Permutation, SchubertMethod), Polynomial>>;
type LrCache = RwLock<HashMap<(Permutation, Permutation), SchubertExpansion>>;

fn schubert_cache() -> &'static SchubertCache {
    static CACHE: OnceLock<SchubertCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn lr_cache() -> &'static LrCache {
    static CACHE: OnceLock<LrCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn embed_to(w: &Permutation, n: usize) -> Result<Permutation> {
    w.embed(n)
}

/// The Schubert polynomial `S_w`, with `w` embedded in `S_n`.
pub fn schubert(w: &Permutation, n: usize, method: SchubertMethod) -> Result<Polynomial> {
    let w = embed_to(w, n)?;
    let key = (w, method);
    if let Some(p) = schubert_cache().read().expect("schubert cache poisoned").get(&key) {
        return Ok(p.clone());
    }
    let (w, _) = &key;
    let p = match method {
        SchubertMethod::RcGraph => {
            Polynomial::from_terms(rcgraph::enumerate(w).map(|r| (r.monomial(), 1)))?
        }
        SchubertMethod::Chain => {
            let delta = Monomial::staircase(n);
            let w0 = Permutation::longest(n);
            let mut p = Polynomial::zero();
            for chain in increasing_chains(w, &w0) {
                let m = chain.monomial().quotient_of(&delta).ok_or_else(|| {
                    Error::InvalidChain(format!("chain type {} exceeds the staircase", chain.chain_type()))
                })?;
                p.add_term(m, 1)?;
            }
            p
        }
    };
    schubert_cache().write().expect("schubert cache poisoned").insert(key, p.clone());
    Ok(p)
}

fn require_leq(u: &Permutation, w: &Permutation) -> Result<()> {
    if !u.bruhat_leq(w) {
        return Err(Error::NotBruhatLeq { u: u.to_word(), w: w.to_word() });
    }
    Ok(())
}

/// The skew Schubert polynomial `S_{w/u}` for `u ≤ w` in `S_n`.
pub fn skew(w: &Permutation, u: &Permutation, n: usize, method: SkewMethod) -> Result<Polynomial> {
    let w = embed_to(w, n)?;
    let u = embed_to(u, n)?;
    require_leq(&u, &w)?;
    match method {
        SkewMethod::NormalForm => {
            let product = schubert(&u, n, SchubertMethod::RcGraph)?.mul(&schubert(&w.w0_times(), n, SchubertMethod::RcGraph)?)?;
            normal_form(&product, n)
        }
        SkewMethod::Chains => {
            let delta = Monomial::staircase(n);
            let mut p = Polynomial::zero();
            for chain in increasing_chains(&u, &w) {
                let m = chain.monomial().quotient_of(&delta).ok_or_else(|| {
                    Error::InvalidChain(format!("chain type {} exceeds the staircase", chain.chain_type()))
                })?;
                p.add_term(m, 1)?;
            }
            Ok(p)
        }
        SkewMethod::Lr => {
            let target = w.length() - u.length();
            let mut p = Polynomial::zero();
            for v in Permutation::all(n).filter(|v| v.length() == target) {
                let c = lr_coefficients(&u, &v, n)?.get(&w);
                if c != 0 {
                    p = p.add(&schubert(&v.w0_times(), n, SchubertMethod::RcGraph)?.scale(c)?)?;
                }
            }
            Ok(p)
        }
    }
}

/// `x^{-δ} S_{w/u}`, which does not depend on the ambient `n`.
pub fn stable_skew(w: &Permutation, u: &Permutation, n: usize) -> Result<LaurentPolynomial> {
    Ok(LaurentPolynomial::divide_by_staircase(&skew(w, u, n, SkewMethod::NormalForm)?, n))
}

/// Writes `p` in the basis `{S_w : w ∈ S_n}` by repeatedly peeling off the
/// order-maximal monomial `x^a`, which must be the leading monomial of
/// `S_w` for `w` with Lehmer code `a`.
pub fn expand_in_schubert_basis(p: &Polynomial, n: usize) -> Result<SchubertExpansion> {
    let mut rest = p.clone();
    let mut out = SchubertExpansion::new(n);
    while let Some((m, c)) = rest.leading_term() {
        if !m.in_staircase(n) {
            return Err(Error::NotInSpan { n, reason: format!("monomial {m} does not divide x^δ") });
        }
        let code: Vec<usize> = m.exponents().iter().map(|&e| e as usize).collect();
        let w = Permutation::from_code(&code, n)?;
        let s = schubert(&w, n, SchubertMethod::RcGraph)?;
        match s.leading_term() {
            Some((lead, 1)) if lead == m => {}
            _ => {
                return Err(Error::NotInSpan { n, reason: format!("S_{w} does not lead with {m}") });
            }
        }
        rest = rest.sub(&s.scale(c)?)?;
        out.add_term(w, c)?;
    }
    Ok(out)
}

/// `c^w_{u,v}` for all `w ∈ S_n`: the Schubert expansion of the normal form
/// of `S_u · S_v`.
pub fn lr_coefficients(u: &Permutation, v: &Permutation, n: usize) -> Result<SchubertExpansion> {
    let u = embed_to(u, n)?;
    let v = embed_to(v, n)?;
    let key = (u, v);
    if let Some(e) = lr_cache().read().expect("lr cache poisoned").get(&key) {
        return Ok(e.clone());
    }
    let (u, v) = &key;
    let product = schubert(u, n, SchubertMethod::RcGraph)?.mul(&schubert(v, n, SchubertMethod::RcGraph)?)?;
    let e = expand_in_schubert_basis(&normal_form(&product, n)?, n)?;
    lr_cache().write().expect("lr cache poisoned").insert(key, e.clone());
    Ok(e)
}

/// `σ_u · h_a(x_1..x_k)` by the Pieri rule: ends of increasing chains from
/// `u` of length `a` whose labels all have first coordinate `k`.
pub fn pieri(u: &Permutation, a: usize, k: usize, n: usize) -> Result<SchubertExpansion> {
    let u = embed_to(u, n)?;
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("Pieri column bound k = {k} must satisfy 1 <= k < n = {n}")));
    }
    fn rec(cur: &mut Permutation, left: usize, k: usize, last_b: usize, out: &mut SchubertExpansion) -> Result<()> {
        if left == 0 {
            return out.add_term(cur.clone(), 1);
        }
        for i in 1..=k {
            let b = cur.at(i);
            if b <= last_b {
                continue;
            }
            let partners: Vec<usize> = crate::perm::cover_partners(cur, i).filter(|&j| j > k).collect();
            for j in partners {
                cur.swap_in_place(i, j);
                rec(cur, left - 1, k, b, out)?;
                cur.swap_in_place(i, j);
            }
        }
        Ok(())
    }
    let mut out = SchubertExpansion::new(n);
    rec(&mut u.clone(), a, k, 0, &mut out)?;
    Ok(out)
}

/// Polynomial route for the Pieri product: expand the normal form of
/// `S_u · h_a(x_1..x_k)`.
pub fn pieri_by_polynomial(u: &Permutation, a: usize, k: usize, n: usize) -> Result<SchubertExpansion> {
    let product = schubert(u, n, SchubertMethod::RcGraph)?.mul(&complete_h(a, k))?;
    expand_in_schubert_basis(&normal_form(&product, n)?, n)
}

/// `ψ_α(f)`: the coefficient of `σ_{w₀}` in `f · h_α`, by iterated Pieri.
pub fn psi_alpha(f: &SchubertExpansion, alpha: &Composition, n: usize) -> Result<i64> {
    check_below_staircase(alpha.parts(), n)?;
    if f.n() != n {
        return Err(Error::SizeMismatch { expected: n, found: f.n() });
    }
    let mut cur = f.clone();
    for (idx, &a) in alpha.parts().iter().enumerate() {
        if a == 0 {
            continue;
        }
        let mut next = SchubertExpansion::new(n);
        for (v, c) in cur.iter() {
            for (x, d) in pieri(v, a, idx + 1, n)?.iter() {
                next.add_term(x.clone(), c.checked_mul(d).ok_or(Error::Overflow)?)?;
            }
        }
        cur = next;
    }
    Ok(cur.get(&Permutation::longest(n)))
}

/// The coefficient of `x^δ / x^α` in the normal form of `f`.
pub fn psi_alpha_by_normal_form(f: &SchubertExpansion, alpha: &Composition, n: usize) -> Result<i64> {
    check_below_staircase(alpha.parts(), n)?;
    let m = Monomial::from_usizes(alpha.parts())
        .quotient_of(&Monomial::staircase(n))
        .expect("α ≤ δ was checked");
    Ok(normal_form(&f.to_polynomial()?, n)?.coefficient(&m))
}

/// Checks `I_α(u,w) = Σ_v c^w_{u,v} I_α(w₀v, w₀)`, with the `c^w_{u,v}` read
/// off the Lr-route expansion of `S_{w/u}`.
pub fn verify_corollary(u: &Permutation, w: &Permutation, alpha: &Composition, n: usize) -> Result<bool> {
    let u = embed_to(u, n)?;
    let w = embed_to(w, n)?;
    require_leq(&u, &w)?;
    let w0 = Permutation::longest(n);
    let lhs = crate::chains::count_by_type(&u, &w, alpha) as i64;
    let expansion = expand_in_schubert_basis(&skew(&w, &u, n, SkewMethod::Lr)?, n)?;
    let mut rhs = 0i64;
    // keys of the expansion are w₀v
    for (w0v, c) in expansion.iter() {
        rhs += c * crate::chains::count_by_type(w0v, &w0, alpha) as i64;
    }
    Ok(lhs == rhs)
}
