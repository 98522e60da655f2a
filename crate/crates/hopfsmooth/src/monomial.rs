//! Monomials, admissible monomial orders, and the graded enumeration
//! m_1 = 1 < m_2 < ... that identifies monomials with positive integers.
//!
//! Ranking within a total degree follows ascending lexicographic order with
//! the first declared variable most significant, so in k[x, y] the first six
//! monomials are 1, y, x, y^2, xy, x^2.

use crate::error::{Error, Result};
use std::cmp::Ordering;

/// Exponent vector; the ambient ring fixes the variable count and names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(i: usize, n: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, when self divides other.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
            ))
        } else {
            None
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when the monomial only involves variables from `vars`.
    pub fn supported_on(&self, vars: &[usize]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || vars.contains(&i))
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| (e > 0).then_some(i))
            .collect()
    }
}

/// Graded lexicographic comparison with declaration-order priority; this is
/// the canonical order used for storage, printing, and ranking.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        grlex(&self.0, &other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            // a_i > b_i at the first index where they differ means a is larger
            for (x, y) in a.iter().zip(b) {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}

/// An admissible monomial order.
///
/// `Block` compares the projection onto the heavy variables first (graded
/// lex), then the remaining variables (graded lex); every monomial involving
/// a heavy variable beats every monomial free of them, which is exactly the
/// elimination property.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GradedLex,
    /// Pure lexicographic order; `priority[0]` is the most significant
    /// variable index.
    Lex { priority: Vec<usize> },
    Block { heavy: Vec<usize> },
}

impl MonomialOrder {
    pub fn lex_default(n: usize) -> MonomialOrder {
        MonomialOrder::Lex {
            priority: (0..n).collect(),
        }
    }

    pub fn block(mut heavy: Vec<usize>) -> MonomialOrder {
        heavy.sort_unstable();
        heavy.dedup();
        MonomialOrder::Block { heavy }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::DimensionMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp_unchecked(a, b))
    }

    pub fn cmp_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GradedLex => grlex(&a.0, &b.0),
            MonomialOrder::Lex { priority } => {
                for &i in priority {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { heavy } => {
                let pa: Vec<u32> = heavy.iter().map(|&i| a.0[i]).collect();
                let pb: Vec<u32> = heavy.iter().map(|&i| b.0[i]).collect();
                match grlex(&pa, &pb) {
                    Ordering::Equal => {
                        let rest: Vec<usize> =
                            (0..a.nvars()).filter(|i| !heavy.contains(i)).collect();
                        let qa: Vec<u32> = rest.iter().map(|&i| a.0[i]).collect();
                        let qb: Vec<u32> = rest.iter().map(|&i| b.0[i]).collect();
                        grlex(&qa, &qb)
                    }
                    o => o,
                }
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp_unchecked(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

// ---- Graded enumeration ----

/// Binomial coefficient in u128 with overflow detection.
fn binom(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

/// Number of monomials in n variables of total degree exactly t.
fn count_of_degree(t: u64, n: u64) -> Option<u128> {
    if n == 0 {
        return Some(if t == 0 { 1 } else { 0 });
    }
    binom(t + n - 1, n - 1)
}

/// Number of monomials of degree at most t.
fn count_up_to(t: u64, n: u64) -> Option<u128> {
    binom(t + n, n)
}

/// 1-based rank of a monomial in the graded enumeration; m_1 = 1.
pub fn monomial_rank(m: &Monomial) -> Result<u64> {
    let n = m.nvars() as u64;
    let t = m.degree() as u64;
    let below = if t == 0 {
        0
    } else {
        count_up_to(t - 1, n).ok_or(Error::RankOverflow)?
    };
    let pos = position_in_degree(&m.0)?;
    let rank = below
        .checked_add(pos)
        .and_then(|r| r.checked_add(1))
        .ok_or(Error::RankOverflow)?;
    u64::try_from(rank).map_err(|_| Error::RankOverflow)
}

/// 0-based position of the exponent vector among vectors of its degree,
/// ascending lexicographic with the first variable most significant.
fn position_in_degree(e: &[u32]) -> Result<u128> {
    let n = e.len();
    if n <= 1 {
        return Ok(0);
    }
    let t: u64 = e.iter().map(|&x| x as u64).sum();
    let mut pos: u128 = 0;
    let mut rem = t;
    for (i, &a) in e.iter().enumerate() {
        if i + 1 == n {
            break;
        }
        let rest_vars = (n - i - 1) as u64;
        for c in 0..a as u64 {
            pos = pos
                .checked_add(count_of_degree(rem - c, rest_vars).ok_or(Error::RankOverflow)?)
                .ok_or(Error::RankOverflow)?;
        }
        rem -= a as u64;
    }
    Ok(pos)
}

/// Inverse of [`monomial_rank`]; k = 1 gives the constant monomial.
pub fn monomial_unrank(k: u64, n: usize) -> Result<Monomial> {
    if k == 0 {
        return Err(Error::ZeroRank);
    }
    if n == 0 {
        return if k == 1 {
            Ok(Monomial(vec![]))
        } else {
            Err(Error::RankOverflow)
        };
    }
    let nn = n as u64;
    let k128 = k as u128;
    // find the total degree: smallest t with C(t+n, n) >= k
    let mut t: u64 = 0;
    loop {
        let c = count_up_to(t, nn).ok_or(Error::RankOverflow)?;
        if c >= k128 {
            break;
        }
        t += 1;
    }
    let below = if t == 0 {
        0
    } else {
        count_up_to(t - 1, nn).unwrap()
    };
    let mut pos = k128 - below - 1;
    let mut e = vec![0u32; n];
    let mut rem = t;
    for i in 0..n - 1 {
        let rest_vars = (n - i - 1) as u64;
        let mut a = 0u64;
        loop {
            let c = count_of_degree(rem - a, rest_vars).ok_or(Error::RankOverflow)?;
            if pos < c {
                break;
            }
            pos -= c;
            a += 1;
        }
        e[i] = a as u32;
        rem -= a;
    }
    e[n - 1] = rem as u32;
    Ok(Monomial(e))
}
