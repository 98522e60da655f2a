//! Shared oracles and generators for the integration suites. Everything here
//! is deliberately independent of the library's division/Buchberger path:
//! membership is decided by dense linear algebra, dimension by Hilbert
//! counting.

#![allow(dead_code)]

use hopfsmooth::field::{Coeff, FieldSpec};
use hopfsmooth::linalg::{solve, Matrix};
use hopfsmooth::monomial::Monomial;
use hopfsmooth::poly::{Polynomial, Ring};

/// Deterministic pseudo-random stream.
pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// All monomials of total degree <= bound.
pub fn monomials_up_to(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(n)];
    let mut frontier = out.clone();
    for _ in 0..bound {
        let mut next: Vec<Monomial> = Vec::new();
        for m in &frontier {
            for v in 0..n {
                let mut e = m.clone();
                e.0[v] += 1;
                if !next.contains(&e) {
                    next.push(e);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    out.dedup();
    out
}

/// A random polynomial with small coefficients.
pub fn random_poly(rng: &mut Rng, ring: &Ring, max_degree: u32, max_terms: u64) -> Polynomial {
    let monos = monomials_up_to(ring.nvars(), max_degree);
    let mut f = Polynomial::zero(ring);
    let terms = 1 + rng.below(max_terms);
    for _ in 0..terms {
        let m = monos[rng.below(monos.len() as u64) as usize].clone();
        let c = match ring.field {
            FieldSpec::PrimeField(p) => Coeff::Prime(rng.below(p)),
            _ => ring.field.from_i64(rng.below(7) as i64 - 3),
        };
        f.add_term(&m, &c);
    }
    f
}

/// Brute-force membership: is f a combination sum(q_i g_i) with
/// deg(q_i g_i) <= degree_bound? Decided by one dense linear system over all
/// monomials of degree <= degree_bound.
pub fn linear_member_oracle(
    f: &Polynomial,
    divisors: &[Polynomial],
    degree_bound: u32,
) -> bool {
    if f.is_zero() {
        return true;
    }
    let ring = f.ring();
    let n = ring.nvars();
    let rows_monos = monomials_up_to(n, degree_bound);
    let index = |m: &Monomial| rows_monos.binary_search(m).ok();
    let mut columns: Vec<Polynomial> = Vec::new();
    for g in divisors {
        if g.is_zero() {
            continue;
        }
        let gd = g.degree();
        if gd > degree_bound {
            continue;
        }
        for m in monomials_up_to(n, degree_bound - gd) {
            columns.push(g.mul_term(&m, &ring.field.one()));
        }
    }
    let mut matrix = Matrix::zero(&ring.field, rows_monos.len(), columns.len());
    for (c, col) in columns.iter().enumerate() {
        for (m, v) in col.terms() {
            if let Some(r) = index(m) {
                matrix.set(r, c, v.clone());
            }
        }
    }
    let mut rhs = vec![ring.field.zero(); rows_monos.len()];
    for (m, v) in f.terms() {
        match index(m) {
            Some(r) => rhs[r] = v.clone(),
            None => return false, // f exceeds the bound entirely
        }
    }
    solve(&matrix, &rhs).unwrap().is_some()
}

/// Affine Hilbert-function dimension oracle for a monomial ideal given by
/// generator exponent masks: count standard monomials of degree <= t and
/// read the polynomial growth degree off the difference table; -1 when the
/// ideal is the whole ring.
pub fn hilbert_dimension_oracle(n: usize, generators: &[Monomial]) -> i64 {
    if generators.iter().any(|m| m.is_one()) {
        return -1;
    }
    let t_max = 12u32;
    let all = monomials_up_to(n, t_max);
    let mut counts = vec![0u64; (t_max + 1) as usize];
    for m in &all {
        if !generators.iter().any(|g| g.divides(m)) {
            let d = m.degree() as usize;
            for t in d..=t_max as usize {
                counts[t] += 1;
            }
        }
    }
    // degree of polynomial growth via finite differences
    let mut table: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
    for k in 0..=(n as u32) {
        let tail = &table[table.len().saturating_sub(4)..];
        if tail.windows(2).all(|w| w[0] == w[1]) {
            return k as i64;
        }
        table = table.windows(2).map(|w| w[1] - w[0]).collect();
    }
    n as i64
}

/// Reduced row echelon form over a field; returns (matrix, pivot columns).
pub fn rref(field: &FieldSpec, mut rows: Vec<Vec<Coeff>>) -> (Vec<Vec<Coeff>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == rows.len() {
            break;
        }
        let Some(p) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = field.inv(&rows[row][col]).unwrap();
        for j in 0..ncols {
            rows[row][j] = field.mul(&rows[row][j], &inv);
        }
        for r in 0..rows.len() {
            if r != row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for j in 0..ncols {
                    let v = field.sub(&rows[r][j], &field.mul(&f, &rows[row][j]));
                    rows[r][j] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (rows, pivots)
}

/// Basis of the right nullspace of the matrix given as rows.
pub fn nullspace(field: &FieldSpec, rows: Vec<Vec<Coeff>>) -> Vec<Vec<Coeff>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let (r, pivots) = rref(field, rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (prow, &pcol) in pivots.iter().enumerate() {
            v[pcol] = field.neg(&r[prow][free]);
        }
        basis.push(v);
    }
    basis
}
