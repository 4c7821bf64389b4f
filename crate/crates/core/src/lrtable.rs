//! Newline-delimited JSON cache of Littlewood-Richardson coefficients.
//!
//! Each line is one [`LrTableRecord`]. The file is only ever appended to;
//! duplicate lines are dropped when it is loaded.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::calc::SchubertExpansion;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One nonzero structure constant `c^w_{u,v}` in `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LrTableRecord {
    pub n: usize,
    pub u: String,
    pub v: String,
    pub w: String,
    pub c: i64,
}

impl LrTableRecord {
    /// Rows for the product `σ_u σ_v`, one per nonzero coefficient.
    pub fn rows(u: &Permutation, v: &Permutation, product: &SchubertExpansion) -> Vec<LrTableRecord> {
        let n = product.n();
        let (u, v) = (u.embed(n).unwrap_or_else(|_| u.clone()), v.embed(n).unwrap_or_else(|_| v.clone()));
        product
            .to_json_map()
            .into_iter()
            .map(|(w, c)| LrTableRecord { n, u: u.to_word(), v: v.to_word(), w, c })
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let parse = |s: &str| -> Result<Permutation> {
            let p: Permutation = s.parse()?;
            if p.n() != self.n {
                return Err(Error::SizeMismatch { expected: self.n, found: p.n() });
            }
            Ok(p)
        };
        let (u, v, w) = (parse(&self.u)?, parse(&self.v)?, parse(&self.w)?);
        if self.c <= 0 {
            return Err(Error::Parse(format!("LR record with non-positive coefficient {}", self.c)));
        }
        if u.length() + v.length() != w.length() {
            return Err(Error::Parse(format!("LR record {}·{} -> {} is not graded", self.u, self.v, self.w)));
        }
        Ok(())
    }
}

/// In-memory view of a cache file.
#[derive(Clone, Debug, Default)]
pub struct LrTable {
    records: BTreeSet<LrTableRecord>,
}

impl LrTable {
    /// Loads a cache file; a missing file is an empty table.
    pub fn load(path: &Path) -> Result<Self> {
        let mut records = BTreeSet::new();
        if !path.exists() {
            return Ok(LrTable { records });
        }
        for (idx, line) in BufReader::new(File::open(path)?).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let record: LrTableRecord = serde_json::from_str(&line)
                .map_err(|e| Error::Parse(format!("{}:{}: {e}", path.display(), idx + 1)))?;
            record.validate()?;
            records.insert(record);
        }
        Ok(LrTable { records })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> impl Iterator<Item = &LrTableRecord> {
        self.records.iter()
    }

    /// Cached rows for `σ_u σ_v` in `S_n`.
    pub fn lookup(&self, n: usize, u: &str, v: &str) -> Vec<LrTableRecord> {
        self.records.iter().filter(|r| r.n == n && r.u == u && r.v == v).cloned().collect()
    }

    /// Appends the records not already present to the file at `path`.
    /// Returns how many lines were written.
    pub fn append(&mut self, path: &Path, records: &[LrTableRecord]) -> Result<usize> {
        let fresh: Vec<&LrTableRecord> = records.iter().filter(|r| !self.records.contains(*r)).collect();
        if fresh.is_empty() {
            return Ok(0);
        }
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        for record in &fresh {
            let line = serde_json::to_string(record).expect("record JSON");
            writeln!(file, "{line}")?;
        }
        file.flush()?;
        let written = fresh.len();
        self.records.extend(fresh.into_iter().cloned());
        Ok(written)
    }
}
