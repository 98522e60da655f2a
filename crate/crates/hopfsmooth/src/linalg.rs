//! Dense exact linear algebra over a coefficient field: rank and linear
//! solvability by Gaussian elimination.

use crate::error::Result;
use crate::field::{Coeff, FieldSpec};

#[derive(Clone, Debug)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Coeff>,
}

impl Matrix {
    pub fn zero(field: &FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<Coeff>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Coeff) {
        self.data[i * self.cols + j] = v;
    }

    /// Row-reduce in place; returns the pivot columns.
    fn eliminate(&mut self) -> Result<Vec<usize>> {
        let field = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(row * self.cols + j, p * self.cols + j);
                }
            }
            let inv = field.inv(self.get(row, col))?;
            for j in col..self.cols {
                let v = field.mul(self.get(row, j), &inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for j in col..self.cols {
                    let v = field.sub(self.get(r, j), &field.mul(&factor, self.get(row, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok(pivots)
    }

    pub fn rank(&self) -> Result<usize> {
        let mut m = self.clone();
        Ok(m.eliminate()?.len())
    }

    pub fn nullity(&self) -> Result<usize> {
        Ok(self.cols - self.rank()?)
    }
}

/// Decide solvability of A x = b and produce one solution when it exists.
pub fn solve(a: &Matrix, b: &[Coeff]) -> Result<Option<Vec<Coeff>>> {
    assert_eq!(a.rows, b.len());
    let field = a.field.clone();
    let mut aug = Matrix::zero(&field, a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols, b[i].clone());
    }
    let pivots = aug.eliminate()?;
    if pivots.contains(&a.cols) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); a.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, a.cols).clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Coeff {
        FieldSpec::Rationals.from_i64(v)
    }

    #[test]
    fn rank_of_singular_matrix() {
        let m = Matrix::from_rows(
            &FieldSpec::Rationals,
            vec![
                vec![q(1), q(2), q(3)],
                vec![q(2), q(4), q(6)],
                vec![q(0), q(1), q(1)],
            ],
        );
        assert_eq!(m.rank().unwrap(), 2);
        assert_eq!(m.nullity().unwrap(), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Matrix::from_rows(
            &FieldSpec::Rationals,
            vec![vec![q(1), q(1)], vec![q(1), q(-1)]],
        );
        let x = solve(&a, &[q(3), q(1)]).unwrap().unwrap();
        assert_eq!(x, vec![q(2), q(1)]);

        let sing = Matrix::from_rows(
            &FieldSpec::Rationals,
            vec![vec![q(1), q(1)], vec![q(2), q(2)]],
        );
        assert!(solve(&sing, &[q(1), q(3)]).unwrap().is_none());
        assert!(solve(&sing, &[q(1), q(2)]).unwrap().is_some());
    }

    #[test]
    fn rank_over_prime_field() {
        let f = FieldSpec::prime_field(5).unwrap();
        let m = Matrix::from_rows(
            &f,
            vec![
                vec![f.from_i64(2), f.from_i64(4)],
                vec![f.from_i64(1), f.from_i64(2)],
            ],
        );
        assert_eq!(m.rank().unwrap(), 1);
    }
}
