//! Sparse multivariate polynomials over the integers and normal forms in the
//! coinvariant quotient `Z[x_1..x_n] / <e_1, …, e_n>`.
//!
//! Coefficients are `i64` with checked arithmetic: every operation that could
//! overflow returns [`Error::Overflow`] instead of wrapping.
//!
//! All modules share one monomial order, [`Monomial`]'s `Ord`: exponent
//! vectors are compared lexicographically starting from the highest-indexed
//! variable, so `x_n > x_{n-1} > … > x_1`. Normal-form reduction, Schubert
//! expansion, and the text/JSON renderings all use it.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `x_1^{a_1} ⋯ x_m^{a_m}`, stored without trailing zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    pub fn from_usizes(exps: &[usize]) -> Self {
        Monomial::new(exps.iter().map(|&e| e as u32).collect())
    }

    /// The single variable `x_i` (1-indexed).
    pub fn var(i: usize) -> Self {
        let mut exps = vec![0; i];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    /// `x^δ` with `δ = (n-1, …, 1, 0)`.
    pub fn staircase(n: usize) -> Self {
        Monomial::new((0..n).map(|i| (n - 1 - i) as u32).collect())
    }

    /// Exponent of `x_i` (1-indexed).
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    /// Exponents without trailing zeros.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponents padded with zeros to at least `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut v = self.exps.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    /// Index of the highest variable that occurs (0 for the constant).
    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() { (self, other) } else { (other, self) };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(&short.exps) {
            *e += s;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() <= other.exps.len() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().enumerate().map(|(i, &b)| b - self.exps.get(i).copied().unwrap_or(0)).collect();
        Some(Monomial::new(exps))
    }

    /// True iff the monomial divides `x^δ` for `δ = (n-1, …, 0)`.
    pub fn in_staircase(&self, n: usize) -> bool {
        self.exps.len() <= n && self.exps.iter().enumerate().all(|(i, &a)| (a as usize) + i < n)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Trailing zeros are trimmed, so a longer vector has a nonzero
        // exponent in a variable the shorter one lacks.
        self.exps.len().cmp(&other.exps.len()).then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

/// A polynomial with integer coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, i64>,
}

fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// The variable `x_i` (1-indexed).
    pub fn var(i: usize) -> Self {
        Polynomial::term(Monomial::var(i), 1)
    }

    /// Builds a polynomial from arbitrary terms, merging repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, i64)>>(terms: I) -> Result<Self> {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    /// The order-maximal term.
    pub fn leading_term(&self) -> Option<(&Monomial, i64)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Monomial::num_vars).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = checked_add(*o.get(), c)?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<Polynomial> {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> Result<Polynomial> {
        if c == 0 {
            return Ok(Polynomial::zero());
        }
        let terms = self.terms().map(|(m, a)| Ok((m.clone(), checked_mul(a, c)?))).collect::<Result<_>>()?;
        Ok(Polynomial { terms })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, a) in self.terms() {
            for (n, b) in other.terms() {
                out.add_term(m.mul(n), checked_mul(a, b)?)?;
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: i64) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (t, a) in self.terms() {
            out.add_term(t.mul(m), checked_mul(a, c)?)?;
        }
        Ok(out)
    }

    /// Value at `x_1 = … = x_n = 1`, i.e. the sum of coefficients.
    pub fn eval_ones(&self) -> Result<i64> {
        self.terms().try_fold(0i64, |acc, (_, c)| checked_add(acc, c))
    }

    /// True iff every monomial divides `x^δ` for the given `n`.
    pub fn in_staircase(&self, n: usize) -> bool {
        self.terms.keys().all(|m| m.in_staircase(n))
    }

    /// JSON value `[{"exp":[a1,…],"coef":c},…]` with exponent vectors padded
    /// to `nvars` entries, in increasing monomial order.
    pub fn to_json_terms(&self, nvars: usize) -> Vec<JsonTerm> {
        self.terms().map(|(m, c)| JsonTerm { exp: m.padded(nvars), coef: c }).collect()
    }

    pub fn to_json(&self, nvars: usize) -> String {
        serde_json::to_string(&self.to_json_terms(nvars)).expect("polynomial JSON")
    }

    pub fn from_json(s: &str) -> Result<Polynomial> {
        let terms: Vec<JsonTerm> = serde_json::from_str(s)?;
        Polynomial::from_terms(terms.into_iter().map(|t| (Monomial::new(t.exp), t.coef)))
    }
}

/// One entry of the JSON polynomial form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub exp: Vec<u32>,
    pub coef: i64,
}

impl fmt::Display for Polynomial {
    /// Terms in increasing monomial order, e.g. `x1^2*x2 + x1*x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let magnitude = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Polynomial::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (m, c) = parse_term(&body[..end])?;
            p.add_term(m, checked_mul(sign, c)?)?;
            rest = &body[end..];
        }
        Ok(p)
    }
}

fn parse_term(term: &str) -> Result<(Monomial, i64)> {
    let bad = || Error::Parse(format!("cannot parse term {term:?}"));
    if term.is_empty() {
        return Err(bad());
    }
    let mut coef: i64 = 1;
    let mut exps: Vec<u32> = Vec::new();
    for factor in term.split('*') {
        if let Some(var) = factor.strip_prefix('x') {
            let (idx, e) = match var.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
                None => (var, 1),
            };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx == 0 {
                return Err(bad());
            }
            if exps.len() < idx {
                exps.resize(idx, 0);
            }
            exps[idx - 1] += e;
        } else {
            let c: i64 = factor.parse().map_err(|_| bad())?;
            coef = checked_mul(coef, c)?;
        }
    }
    Ok((Monomial::new(exps), coef))
}

/// `e_i(x_1, …, x_n)`.
pub fn elementary(i: usize, n: usize) -> Polynomial {
    let mut p = Polynomial::zero();
    if i > n {
        return p;
    }
    let mut chosen = Vec::with_capacity(i);
    fn rec(start: usize, n: usize, left: usize, chosen: &mut Vec<usize>, p: &mut Polynomial) {
        if left == 0 {
            let mut exps = vec![0u32; n];
            for &c in chosen.iter() {
                exps[c] = 1;
            }
            p.terms.insert(Monomial::new(exps), 1);
            return;
        }
        for v in start..=n - left {
            chosen.push(v);
            rec(v + 1, n, left - 1, chosen, p);
            chosen.pop();
        }
    }
    rec(0, n, i, &mut chosen, &mut p);
    p
}

/// Exponent vectors of all degree-`a` monomials in `k` variables.
fn degree_monomials(a: usize, k: usize) -> Vec<Monomial> {
    fn rec(var: usize, k: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == k {
            cur[var] = left as u32;
            out.push(Monomial::new(cur.clone()));
            cur[var] = 0;
            return;
        }
        for e in 0..=left {
            cur[var] = e as u32;
            rec(var + 1, k, left - e, cur, out);
        }
        cur[var] = 0;
    }
    let mut out = Vec::new();
    if k == 0 {
        if a == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(0, k, a, &mut vec![0; k], &mut out);
    out
}

/// Complete homogeneous symmetric polynomial `h_a(x_1, …, x_k)`.
pub fn complete_h(a: usize, k: usize) -> Polynomial {
    Polynomial { terms: degree_monomials(a, k).into_iter().map(|m| (m, 1)).collect() }
}

/// `h_α = h_{α_1}(x_1) h_{α_2}(x_1,x_2) ⋯ h_{α_{n-1}}(x_1,…,x_{n-1})`.
///
/// `α` may have fewer than `n - 1` parts (missing parts are zero) but must
/// satisfy `α_i <= n - i`.
pub fn h_alpha(alpha: &[usize], n: usize) -> Result<Polynomial> {
    check_below_staircase(alpha, n)?;
    let mut p = Polynomial::one();
    for (i, &a) in alpha.iter().enumerate() {
        if a > 0 {
            p = p.mul(&complete_h(a, i + 1))?;
        }
    }
    Ok(p)
}

pub(crate) fn check_below_staircase(alpha: &[usize], n: usize) -> Result<()> {
    if alpha.len() > n.saturating_sub(1) {
        return Err(Error::InvalidComposition(format!("{alpha:?} has more than n-1 = {} parts", n.saturating_sub(1))));
    }
    if let Some((i, &a)) = alpha.iter().enumerate().find(|(i, &a)| a + i + 1 > n) {
        return Err(Error::InvalidComposition(format!("part {} of {alpha:?} is {a} > n - {} = {}", i + 1, i + 1, n - i - 1)));
    }
    Ok(())
}

/// Normal form modulo `<e_1, …, e_n>`.
///
/// Reduces by `G = { h_{n-i+1}(x_1, …, x_i) : i = 1..n }`, whose leading
/// monomials `x_i^{n-i+1}` are pairwise coprime, so `G` is a Gröbner basis of
/// the ideal and the normal form is supported on divisors of `x^δ`. The
/// order-maximal pending term is always reduced first; every term it spawns is
/// strictly smaller, so each monomial is settled once.
pub fn normal_form(p: &Polynomial, n: usize) -> Result<Polynomial> {
    if let Some(m) = p.terms.keys().find(|m| m.num_vars() > n) {
        return Err(Error::TooManyVariables { var: m.num_vars(), n });
    }
    // Non-leading terms of h_{n-i+1}(x_1..x_i), indexed by i - 1.
    let mut tails: Vec<Option<Vec<Monomial>>> = vec![None; n];
    let mut pending = p.terms.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = pending.pop_last() {
        let Some(i) = (1..=n).rev().find(|&i| m.exponent(i) as usize > n - i) else {
            out.insert(m, c);
            continue;
        };
        let power = (n - i + 1) as u32;
        let mut base = m.exps.clone();
        base[i - 1] -= power;
        let base = Monomial::new(base);
        let tail = tails[i - 1].get_or_insert_with(|| {
            degree_monomials(n - i + 1, i).into_iter().filter(|t| t.exponent(i) < power).collect()
        });
        // x_i^{n-i+1} ≡ -(sum of the other monomials of h_{n-i+1}(x_1..x_i))
        for t in tail.iter() {
            match pending.entry(base.mul(t)) {
                Entry::Vacant(v) => {
                    v.insert(-c);
                }
                Entry::Occupied(mut o) => {
                    let sum = checked_add(*o.get(), -c)?;
                    if sum == 0 {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
        }
    }
    Ok(Polynomial { terms: out })
}

/// Laurent polynomial with integer coefficients, used to compare skew
/// polynomials across different ambient sizes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Vec<i64>, i64>,
}

impl LaurentPolynomial {
    /// `x^{-δ_n} · p`.
    pub fn divide_by_staircase(p: &Polynomial, n: usize) -> Self {
        let delta = Monomial::staircase(n);
        let mut terms = BTreeMap::new();
        for (m, c) in p.terms() {
            let len = n.max(m.num_vars());
            let mut exps: Vec<i64> = (1..=len).map(|i| m.exponent(i) as i64 - delta.exponent(i) as i64).collect();
            while exps.last() == Some(&0) {
                exps.pop();
            }
            terms.insert(exps, c);
        }
        LaurentPolynomial { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }
}
