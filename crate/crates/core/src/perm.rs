//! Permutations in one-line notation, their statistics, and the covers of
//! the (labeled) Bruhat order.
//!
//! Everything here is 1-indexed: position `i` and value `w(i)` both range
//! over `1..=n`, exactly as in the one-line word `2413`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<usize>,
}

/// Label `(k, b)` of an edge in the labeled Bruhat order.
///
/// For a cover `u -> u·(i,j)` the labels are `(k, u(i))` with `i <= k < j`.
/// The same pair type doubles as a staircase cell of an rc-graph. The derived
/// order is lexicographic on `(k, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct CoverLabel {
    pub k: usize,
    pub b: usize,
}

impl CoverLabel {
    pub const fn new(k: usize, b: usize) -> Self {
        CoverLabel { k, b }
    }
}

impl From<(usize, usize)> for CoverLabel {
    fn from((k, b): (usize, usize)) -> Self {
        CoverLabel { k, b }
    }
}

impl From<CoverLabel> for (usize, usize) {
    fn from(label: CoverLabel) -> Self {
        (label.k, label.b)
    }
}

impl fmt::Display for CoverLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.b)
    }
}

impl Permutation {
    /// Builds a permutation from 1-indexed one-line entries.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{entries:?} is not a bijection of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation { entries }
    }

    /// `1 2 … n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation { entries: (1..=n).collect() }
    }

    /// The longest element `w₀ = n … 2 1`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation { entries: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `w(i)` for a 1-indexed position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// 1-indexed position of value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.entries.iter().position(|&x| x == v).expect("value out of range") + 1
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_longest(&self) -> bool {
        let n = self.n();
        self.entries.iter().enumerate().all(|(i, &v)| v == n - i)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let e = &self.entries;
        let mut count = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Lehmer code: `c_i = #{j > i : w(j) < w(i)}`.
    pub fn code(&self) -> Vec<usize> {
        let e = &self.entries;
        (0..e.len())
            .map(|i| e[i + 1..].iter().filter(|&&x| x < e[i]).count())
            .collect()
    }

    /// Inverse of [`Permutation::code`]. The code may be shorter than `n`;
    /// missing entries are zero. Rejects codes with `c_i > n - i`.
    pub fn from_code(code: &[usize], n: usize) -> Result<Self> {
        if n == 0 || code.len() > n {
            return Err(Error::InvalidCode { code: code.to_vec(), n });
        }
        let mut remaining: Vec<usize> = (1..=n).collect();
        let mut entries = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0);
            if c >= remaining.len() {
                return Err(Error::InvalidCode { code: code.to_vec(), n });
            }
            entries.push(remaining.remove(c));
        }
        Ok(Permutation { entries })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { entries: inv }
    }

    /// Composition `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: other.n() });
        }
        Ok(Permutation { entries: other.entries.iter().map(|&i| self.at(i)).collect() })
    }

    /// `self · (i, j)`: swaps the entries in positions `i` and `j`.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut entries = self.entries.clone();
        entries.swap(i - 1, j - 1);
        Permutation { entries }
    }

    pub(crate) fn swap_in_place(&mut self, i: usize, j: usize) {
        self.entries.swap(i - 1, j - 1);
    }

    /// Left multiplication by the longest element: `(w₀ w)(i) = n + 1 - w(i)`.
    pub fn w0_times(&self) -> Self {
        let n = self.n();
        Permutation { entries: self.entries.iter().map(|&v| n + 1 - v).collect() }
    }

    /// Appends the fixed points `n+1, …, m`.
    pub fn embed(&self, m: usize) -> Result<Self> {
        if m < self.n() {
            return Err(Error::Embed { from: self.n(), to: m });
        }
        let mut entries = self.entries.clone();
        entries.extend(self.n() + 1..=m);
        Ok(Permutation { entries })
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.entries.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1).collect()
    }

    /// For a permutation with exactly one descent, at `k`, returns the
    /// partition `(w(k) - k, …, w(1) - 1)` (trailing zeros dropped) and `k`.
    pub fn grassmannian_shape(&self) -> Option<(Vec<usize>, usize)> {
        let descents = self.descents();
        if descents.len() != 1 {
            return None;
        }
        let k = descents[0];
        let shape = (1..=k).rev().map(|i| self.at(i) - i).filter(|&p| p > 0).collect();
        Some((shape, k))
    }

    /// All Bruhat covers `self ⋖ self·(i,j)`, with the swapped positions
    /// `i < j`, ordered by `(i, j)`.
    pub fn bruhat_covers(&self) -> Vec<(Permutation, (usize, usize))> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..n {
            for j in cover_partners(self, i) {
                out.push((self.swapped(i, j), (i, j)));
            }
        }
        out
    }

    /// Labels of the edges `u -> w` in the labeled Bruhat order.
    pub fn labeled_edges(&self, w: &Permutation) -> Result<Vec<CoverLabel>> {
        let (i, j) = cover_positions(self, w)?;
        let b = self.at(i);
        Ok((i..j).map(|k| CoverLabel { k, b }).collect())
    }

    /// Bruhat comparison `self ≤ w` by the Ehresmann tableau criterion.
    pub fn bruhat_leq(&self, w: &Permutation) -> bool {
        if self.n() != w.n() {
            return false;
        }
        let n = self.n();
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        for p in 0..n {
            insert_sorted(&mut left, self.entries[p]);
            insert_sorted(&mut right, w.entries[p]);
            if left.iter().zip(&right).any(|(a, b)| a > b) {
                return false;
            }
        }
        true
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some(Permutation::identity(n)) }
    }

    /// Renders as a digit string when `n <= 9`, comma separated otherwise.
    pub fn to_word(&self) -> String {
        if self.n() <= 9 {
            self.entries.iter().map(|v| char::from(b'0' + *v as u8)).collect()
        } else {
            self.entries.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    let at = v.partition_point(|&y| y < x);
    v.insert(at, x);
}

/// Positions `j > i` such that `u ⋖ u·(i,j)`. A candidate is valid iff its
/// value exceeds `u(i)` and is smaller than every value above `u(i)` seen
/// strictly between, so one pass suffices.
pub(crate) fn cover_partners(u: &Permutation, i: usize) -> impl Iterator<Item = usize> + '_ {
    let base = u.at(i);
    let mut ceiling = usize::MAX;
    (i + 1..=u.n()).filter(move |&j| {
        let v = u.at(j);
        if v > base && v < ceiling {
            ceiling = v;
            true
        } else {
            false
        }
    })
}

/// Returns `(i, j)` with `w = u·(i,j)` if `u ⋖ w`.
pub(crate) fn cover_positions(u: &Permutation, w: &Permutation) -> Result<(usize, usize)> {
    let not_cover = || Error::NotACover { u: u.to_word(), w: w.to_word() };
    if u.n() != w.n() {
        return Err(not_cover());
    }
    let diff: Vec<usize> = (1..=u.n()).filter(|&p| u.at(p) != w.at(p)).collect();
    let &[i, j] = diff.as_slice() else {
        return Err(not_cover());
    };
    if u.at(i) != w.at(j) || u.at(j) != w.at(i) || u.at(i) > u.at(j) {
        return Err(not_cover());
    }
    let (lo, hi) = (u.at(i), u.at(j));
    if (i + 1..j).any(|p| u.at(p) > lo && u.at(p) < hi) {
        return Err(not_cover());
    }
    Ok((i, j))
}

/// Iterator over `S_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let e = &current.entries;
        if let Some(i) = (0..e.len().saturating_sub(1)).rev().find(|&i| e[i] < e[i + 1]) {
            let mut succ = e.clone();
            let j = (i + 1..e.len()).rev().find(|&j| succ[j] > succ[i]).unwrap();
            succ.swap(i, j);
            succ[i + 1..].reverse();
            self.next = Some(Permutation { entries: succ });
        }
        Some(current)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_word())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = || Error::Parse(format!("cannot parse permutation {s:?}"));
        let entries = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| parse_err())).collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(parse_err))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(entries)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_word())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
