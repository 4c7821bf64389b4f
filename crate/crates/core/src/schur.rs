//! Skew Schur polynomials by direct enumeration of semistandard tableaux.
//!
//! Only meant for small shapes; it backs the Grassmannian cross-checks.

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

/// A skew shape `λ/μ` given by two partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

impl SkewShape {
    pub fn new(outer: Vec<usize>, inner: Vec<usize>) -> Result<Self> {
        let is_partition = |p: &[usize]| p.windows(2).all(|w| w[0] >= w[1]);
        if !is_partition(&outer) || !is_partition(&inner) {
            return Err(Error::InvalidShape(format!("{outer:?}/{inner:?} is not a pair of partitions")));
        }
        if inner.len() > outer.len() || inner.iter().zip(&outer).any(|(m, l)| m > l) {
            return Err(Error::InvalidShape(format!("{inner:?} is not contained in {outer:?}")));
        }
        Ok(SkewShape { outer, inner })
    }

    /// A straight shape `λ`.
    pub fn straight(outer: Vec<usize>) -> Result<Self> {
        SkewShape::new(outer, Vec::new())
    }

    fn inner_at(&self, row: usize) -> usize {
        self.inner.get(row).copied().unwrap_or(0)
    }

    /// Cells `(row, col)` (0-indexed), row by row, left to right.
    fn cells(&self) -> Vec<(usize, usize)> {
        self.outer
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (self.inner_at(r)..len).map(move |c| (r, c)))
            .collect()
    }
}

/// `s_{λ/μ}(x_1, …, x_k) = Σ_T x^T` over semistandard tableaux of shape
/// `λ/μ` with entries at most `k`.
pub fn schur_oracle(shape: &SkewShape, k: usize) -> Result<Polynomial> {
    let cells = shape.cells();
    let rows = shape.outer.len();
    let width = shape.outer.first().copied().unwrap_or(0);
    // 0 marks an empty (or inner) cell
    let mut grid = vec![vec![0usize; width]; rows];
    let mut weight = vec![0u32; k];
    let mut out = Polynomial::zero();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        shape: &SkewShape,
        k: usize,
        grid: &mut [Vec<usize>],
        weight: &mut [u32],
        out: &mut Polynomial,
    ) -> Result<()> {
        let Some(&(r, c)) = cells.get(idx) else {
            return out.add_term(Monomial::new(weight.to_vec()), 1);
        };
        // weakly increasing along rows
        let mut lo = if c > shape.inner_at(r) { grid[r][c - 1] } else { 1 };
        // strictly increasing down columns
        if r > 0 && c >= shape.inner_at(r - 1) {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo.max(1)..=k {
            grid[r][c] = v;
            weight[v - 1] += 1;
            fill(idx + 1, cells, shape, k, grid, weight, out)?;
            weight[v - 1] -= 1;
        }
        grid[r][c] = 0;
        Ok(())
    }

    fill(0, &cells, shape, k, &mut grid, &mut weight, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn small_shapes() {
        let box1 = SkewShape::straight(vec![1]).unwrap();
        assert_eq!(schur_oracle(&box1, 2).unwrap(), poly("x1 + x2"));
        let hook = SkewShape::straight(vec![2, 1]).unwrap();
        assert_eq!(schur_oracle(&hook, 2).unwrap(), poly("x1^2*x2 + x1*x2^2"));
        let skew = SkewShape::new(vec![2, 1], vec![1]).unwrap();
        assert_eq!(schur_oracle(&skew, 2).unwrap(), poly("2*x1*x2 + x1^2 + x2^2"));
        let empty = SkewShape::straight(vec![]).unwrap();
        assert_eq!(schur_oracle(&empty, 3).unwrap(), Polynomial::one());
    }

    #[test]
    fn column_needs_enough_variables() {
        let column = SkewShape::straight(vec![1, 1, 1]).unwrap();
        assert!(schur_oracle(&column, 2).unwrap().is_zero());
        assert_eq!(schur_oracle(&column, 3).unwrap(), poly("x1*x2*x3"));
    }

    #[test]
    fn invalid_shapes() {
        assert!(SkewShape::straight(vec![1, 2]).is_err());
        assert!(SkewShape::new(vec![2, 1], vec![2, 2]).is_err());
        assert!(SkewShape::new(vec![2], vec![1, 1]).is_err());
    }
}
