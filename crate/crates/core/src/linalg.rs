//! Exact Gaussian elimination over the rationals.
//!
//! Small and straightforward: the section machinery works weight slice by
//! weight slice, so matrices stay modest and fraction growth is contained by
//! normalizing pivots to 1.

use num::{One, Zero};

use crate::poly::Rational;

pub type Row = Vec<Rational>;

/// Row-echelon row space with pivot bookkeeping. Rows are kept fully reduced
/// (pivot 1, zeros above and below), so membership tests are a single sweep.
#[derive(Debug, Clone, Default)]
pub struct RowSpace {
    rows: Vec<Row>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new() -> RowSpace {
        RowSpace::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the space in place; returns the pivot column if a
    /// nonzero remainder survives.
    pub fn reduce(&self, v: &mut Row) -> Option<usize> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (vi, ri) in v.iter_mut().zip(row) {
                    if !ri.is_zero() {
                        *vi -= &c * ri;
                    }
                }
            }
        }
        v.iter().position(|x| !x.is_zero())
    }

    pub fn contains(&self, v: &Row) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w).is_none()
    }

    /// Insert a vector; returns true when it enlarged the space.
    pub fn insert(&mut self, mut v: Row) -> bool {
        match self.reduce(&mut v) {
            None => false,
            Some(p) => {
                let inv = Rational::one() / v[p].clone();
                for x in v.iter_mut() {
                    if !x.is_zero() {
                        *x *= &inv;
                    }
                }
                // clear the new pivot column in the existing rows
                for row in self.rows.iter_mut() {
                    if !row[p].is_zero() {
                        let c = row[p].clone();
                        for (ri, vi) in row.iter_mut().zip(&v) {
                            if !vi.is_zero() {
                                *ri -= &c * vi;
                            }
                        }
                    }
                }
                let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.rows.len());
                self.rows.insert(at, v);
                self.pivots.insert(at, p);
                true
            }
        }
    }

    pub fn insert_all(&mut self, rows: impl IntoIterator<Item = Row>) {
        for r in rows {
            self.insert(r);
        }
    }

    /// Does this space contain the other one?
    pub fn contains_space(&self, other: &RowSpace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_space(&self, other: &RowSpace) -> bool {
        self.dim() == other.dim() && self.contains_space(other)
    }
}

/// Kernel basis of the linear map given by rows `matrix` acting on column
/// vectors of length `ncols` (i.e. solutions of `matrix · v = 0`).
pub fn kernel_basis(matrix: &[Row], ncols: usize) -> Vec<Row> {
    // Echelonize a working copy, tracking pivot columns.
    let mut rows: Vec<Row> = matrix.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let mut sel = None;
        for r in rank..rows.len() {
            if !rows[r][col].is_zero() {
                sel = Some(r);
                break;
            }
        }
        let Some(r) = sel else { continue };
        rows.swap(rank, r);
        let inv = Rational::one() / rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for rr in 0..rows.len() {
            if rr != rank && !rows[rr][col].is_zero() {
                let c = rows[rr][col].clone();
                let (head, tail) = if rr < rank {
                    let (a, b) = rows.split_at_mut(rank);
                    (&mut a[rr], &b[0])
                } else {
                    let (a, b) = rows.split_at_mut(rr);
                    (&mut b[0], &a[rank])
                };
                for (x, y) in head.iter_mut().zip(tail) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            let c = rows[r][free].clone();
            if !c.is_zero() {
                v[p] = -c;
            }
        }
        basis.push(v);
    }
    basis
}

pub fn rank(matrix: &[Row]) -> usize {
    let mut space = RowSpace::new();
    for r in matrix {
        space.insert(r.clone());
    }
    space.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn row(v: &[i64]) -> Row {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut s = RowSpace::new();
        assert!(s.insert(row(&[1, 2, 3])));
        assert!(s.insert(row(&[0, 1, 1])));
        assert!(!s.insert(row(&[1, 3, 4])));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&row(&[2, 5, 7])));
        assert!(!s.contains(&row(&[0, 0, 1])));
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel_basis(&[row(&[1, 2, 3])], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: Rational = v
                .iter()
                .zip([1i64, 2, 3])
                .map(|(a, b)| a * rat(b))
                .sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn kernel_trivial_for_identity() {
        let m = vec![row(&[1, 0]), row(&[0, 1])];
        assert!(kernel_basis(&m, 2).is_empty());
    }
}
