//! The division algorithm, Buchberger's algorithm and criterion, reduced
//! bases, ideal membership, elimination ideals, Krull dimension from initial
//! terms, and degree bounds.

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{ring_owned, same_ring, Polynomial, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Mutex;

/// Resource ceilings for basis computations. Exceeding one is reported as an
/// explicit failure, never as wrong output.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Cap on the total degree of any intermediate basis element.
    pub max_degree: u32,
    /// Cap on the number of basis elements.
    pub max_basis: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 512,
            max_basis: 4096,
        }
    }
}

impl Limits {
    /// Default limits with the degree ceiling overridden by
    /// `HOPFSMOOTH_DEGREE_LIMIT` when set.
    pub fn from_env() -> Limits {
        let mut l = Limits::default();
        if let Ok(v) = std::env::var("HOPFSMOOTH_DEGREE_LIMIT") {
            if let Ok(d) = v.trim().parse::<u32>() {
                l.max_degree = d;
            }
        }
        l
    }
}

// ---- degree accounting ----

/// One basis computation: max input generator degree, variable count, and max
/// term degree across the output. Collected when the log is enabled so test
/// suites can audit every computed basis against the degree bound.
#[derive(Clone, Copy, Debug)]
pub struct DegreeRecord {
    pub input_degree: u32,
    pub nvars: u32,
    pub output_degree: u32,
}

static DEGREE_LOG_ENABLED: AtomicBool = AtomicBool::new(false);
static DEGREE_LOG: Mutex<Vec<DegreeRecord>> = Mutex::new(Vec::new());

pub fn enable_degree_log(on: bool) {
    DEGREE_LOG_ENABLED.store(on, AtomicOrdering::SeqCst);
}

pub fn drain_degree_log() -> Vec<DegreeRecord> {
    std::mem::take(&mut *DEGREE_LOG.lock().unwrap())
}

fn record_degrees(input: &[Polynomial], output: &[Polynomial]) {
    if !DEGREE_LOG_ENABLED.load(AtomicOrdering::SeqCst) {
        return;
    }
    let input_degree = input
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.degree())
        .max();
    let Some(input_degree) = input_degree else {
        return;
    };
    let output_degree = output.iter().map(|g| g.degree()).max().unwrap_or(0);
    let nvars = input.first().map_or(0, |g| g.ring().nvars() as u32);
    DEGREE_LOG.lock().unwrap().push(DegreeRecord {
        input_degree: input_degree.max(1),
        nvars,
        output_degree,
    });
}

// ---- division ----

#[derive(Clone, Debug, PartialEq)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Multivariate division: f = sum(q_i g_i) + h with no term of h divisible by
/// any leading monomial and in(q_i g_i) <= in(f).
///
/// Deterministic strategy: always reduce the largest reducible term by the
/// first applicable divisor. Zero divisors are skipped.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], ord: &MonomialOrder) -> Result<DivisionResult> {
    for g in divisors {
        if !same_ring(f.ring(), g.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    let field = f.ring().field.clone();
    let leads: Vec<Option<(Monomial, Coeff)>> = divisors
        .iter()
        .map(|g| g.leading_term(ord).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut work = f.clone();
    let mut remainder = Polynomial::zero(f.ring());
    let mut quotients = vec![Polynomial::zero(f.ring()); divisors.len()];
    while let Some((m, c)) = work
        .leading_term(ord)
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        let reducer = leads
            .iter()
            .position(|l| matches!(l, Some((lm, _)) if lm.divides(&m)));
        match reducer {
            Some(i) => {
                let (lm, lc) = leads[i].as_ref().unwrap();
                let qm = lm.div_into(&m).unwrap();
                let qc = field.div(&c, lc)?;
                quotients[i].add_term(&qm, &qc);
                work = work.sub(&divisors[i].mul_term(&qm, &qc));
            }
            None => {
                remainder.add_term(&m, &c);
                work.add_term(&m, &field.neg(&c));
            }
        }
    }
    Ok(DivisionResult {
        quotients,
        remainder,
    })
}

// ---- S-pairs ----

/// The monomial cofactors (with coefficients) of a critical pair:
/// m_ij = in(g_i)/gcd(in(g_i), in(g_j)), so that leading terms cancel in
/// m_ji * g_i - m_ij * g_j.
pub fn s_pair_data(
    gi: &Polynomial,
    gj: &Polynomial,
    ord: &MonomialOrder,
) -> Result<((Coeff, Monomial), (Coeff, Monomial))> {
    let (lmi, lci) = gi.leading_term(ord).ok_or(Error::ZeroInput)?;
    let (lmj, lcj) = gj.leading_term(ord).ok_or(Error::ZeroInput)?;
    let g = lmi.gcd(lmj);
    let mij = (lci.clone(), g.div_into(lmi).unwrap());
    let mji = (lcj.clone(), g.div_into(lmj).unwrap());
    Ok((mij, mji))
}

/// m_ji * g_i - m_ij * g_j; the leading terms cancel.
pub fn s_polynomial(gi: &Polynomial, gj: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
    let ((cij, mij), (cji, mji)) = s_pair_data(gi, gj, ord)?;
    Ok(gi.mul_term(&mji, &cji).sub(&gj.mul_term(&mij, &cij)))
}

fn coprime_leads(gi: &Polynomial, gj: &Polynomial, ord: &MonomialOrder) -> bool {
    match (gi.leading_monomial(ord), gj.leading_monomial(ord)) {
        (Some(a), Some(b)) => a.gcd(b).is_one(),
        _ => true,
    }
}

/// Buchberger's criterion: every S-pair remainder vanishes, with the
/// coprime-leading-monomial pairs skipped. Zero entries are permitted.
pub fn is_groebner(basis: &[Polynomial], ord: &MonomialOrder) -> Result<bool> {
    let nonzero: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            if coprime_leads(nonzero[i], nonzero[j], ord) {
                continue;
            }
            let s = s_polynomial(nonzero[i], nonzero[j], ord)?;
            let basis_vec: Vec<Polynomial> = nonzero.iter().map(|g| (*g).clone()).collect();
            if !divide(&s, &basis_vec, ord)?.remainder.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---- the basis type ----

/// An ordered generator list together with its monomial order, known to pass
/// Buchberger's criterion. Zero entries are permitted (padding).
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    gens: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
    ring: Option<Ring>,
}

impl GroebnerBasis {
    /// Wrap a list after running the criterion checker; errors if it fails.
    pub fn verify(gens: Vec<Polynomial>, order: MonomialOrder) -> Result<GroebnerBasis> {
        if !is_groebner(&gens, &order)? {
            return Err(Error::UnverifiedBasis);
        }
        let ring = gens.first().map(|g| g.ring().clone());
        Ok(GroebnerBasis {
            gens,
            order,
            reduced: false,
            ring,
        })
    }

    /// Construction path for outputs that are Groebner by a theorem
    /// (Buchberger output, elimination subsets, tensored bases).
    pub(crate) fn trusted(gens: Vec<Polynomial>, order: MonomialOrder, reduced: bool) -> GroebnerBasis {
        let ring = gens.first().map(|g| g.ring().clone());
        GroebnerBasis {
            gens,
            order,
            reduced,
            ring,
        }
    }

    /// Same, for cases where the generator list may be empty but the ambient
    /// ring is known.
    pub(crate) fn trusted_in(
        gens: Vec<Polynomial>,
        order: MonomialOrder,
        reduced: bool,
        ring: Ring,
    ) -> GroebnerBasis {
        GroebnerBasis {
            gens,
            order,
            reduced,
            ring: Some(ring),
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn ring(&self) -> Option<&Ring> {
        self.ring.as_ref()
    }

    /// A nonzero constant generator means the ideal is the whole ring.
    pub fn contains_unit(&self) -> bool {
        self.gens
            .iter()
            .any(|g| !g.is_zero() && g.is_constant())
    }

    pub fn max_term_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Least d such that every element is d-bounded.
    pub fn max_rank(&self) -> Result<u64> {
        let mut best = 0;
        for g in &self.gens {
            best = best.max(g.max_rank()?);
        }
        Ok(best)
    }
}

// ---- Buchberger ----

pub fn buchberger(gens: &[Polynomial], ord: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, ord, &Limits::default())
}

/// Buchberger's algorithm with the normal pair-selection strategy (smallest
/// lcm first) and both classical criteria (coprime leads, chain), followed by
/// auto-reduction to the unique reduced basis sorted by descending leading
/// monomial.
pub fn buchberger_with(
    gens: &[Polynomial],
    ord: &MonomialOrder,
    limits: &Limits,
) -> Result<GroebnerBasis> {
    let Some(first) = gens.first() else {
        return Ok(GroebnerBasis::trusted(Vec::new(), ord.clone(), true));
    };
    first.ring().field.require_field()?;
    for g in gens {
        if !same_ring(first.ring(), g.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    let ring = first.ring().clone();
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Ok(GroebnerBasis::trusted_in(Vec::new(), ord.clone(), true, ring));
    }

    // pending critical pairs, keyed for the normal selection strategy
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pending.insert((i, j));
        }
    }
    let lcm_of = |basis: &[Polynomial], i: usize, j: usize| -> Monomial {
        let a = basis[i].leading_monomial(ord).unwrap();
        let b = basis[j].leading_monomial(ord).unwrap();
        a.lcm(b)
    };

    while !pending.is_empty() {
        // normal strategy: smallest lcm of leading monomials first
        let &(i, j) = pending
            .iter()
            .min_by(|&&(a, b), &&(c, d)| {
                let l1 = lcm_of(&basis, a, b);
                let l2 = lcm_of(&basis, c, d);
                ord.cmp_unchecked(&l1, &l2)
                    .then(a.cmp(&c))
                    .then(b.cmp(&d))
            })
            .unwrap();
        pending.remove(&(i, j));

        if coprime_leads(&basis[i], &basis[j], ord) {
            continue;
        }
        // chain criterion: some k with in(g_k) | lcm(i, j) and both pairs
        // (i, k), (j, k) no longer pending
        let lcm_ij = lcm_of(&basis, i, j);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k]
                    .leading_monomial(ord)
                    .is_some_and(|lk| lk.divides(&lcm_ij))
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], ord)?;
        let rem = divide(&s, &basis, ord)?.remainder;
        if rem.is_zero() {
            continue;
        }
        if rem.degree() > limits.max_degree {
            return Err(Error::ResourceLimit(format!(
                "basis element degree {} exceeds ceiling {}",
                rem.degree(),
                limits.max_degree
            )));
        }
        let new_index = basis.len();
        basis.push(rem.monic(ord)?);
        if basis.len() > limits.max_basis {
            return Err(Error::ResourceLimit(format!(
                "basis size exceeds ceiling {}",
                limits.max_basis
            )));
        }
        for k in 0..new_index {
            pending.insert((k, new_index));
        }
    }

    let reduced = auto_reduce(basis, ord)?;
    record_degrees(gens, &reduced);
    Ok(GroebnerBasis::trusted_in(reduced, ord.clone(), true, ring))
}

/// Interreduce a Groebner basis to the unique reduced one: monic elements,
/// no term of any element divisible by another's leading monomial, sorted by
/// descending leading monomial.
fn auto_reduce(mut basis: Vec<Polynomial>, ord: &MonomialOrder) -> Result<Vec<Polynomial>> {
    // minimalize: drop elements whose lead is divisible by another lead
    basis.sort_by(|a, b| {
        let la = a.leading_monomial(ord).unwrap();
        let lb = b.leading_monomial(ord).unwrap();
        ord.cmp_unchecked(la, lb)
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial(ord).unwrap().clone();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial(ord).unwrap().divides(&lm))
        {
            minimal.push(g);
        }
    }
    // tail-reduce each against the rest
    let mut out: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let r = divide(&minimal[i], &others, ord)?.remainder;
        out.push(r.monic(ord)?);
    }
    out.sort_by(|a, b| {
        let la = a.leading_monomial(ord).unwrap();
        let lb = b.leading_monomial(ord).unwrap();
        ord.cmp_unchecked(lb, la)
    });
    Ok(out)
}

/// Cancel duplicate leading monomials per the bounded-basis reduction, then
/// pad with zeros to length exactly d when requested. The output is still a
/// Groebner basis of the same ideal with at most d nonzero elements.
pub fn reduce_to_d_bounded(basis: &GroebnerBasis, d: u64, pad: bool) -> Result<GroebnerBasis> {
    for g in basis.generators() {
        let r = g.max_rank()?;
        if r > d {
            return Err(Error::UnboundedTerm { rank: r, bound: d });
        }
    }
    let ord = basis.order().clone();
    let mut gens: Vec<Polynomial> = basis.generators().to_vec();
    loop {
        let mut changed = false;
        for i in 0..gens.len() {
            if gens[i].is_zero() {
                continue;
            }
            let lm_i = gens[i].leading_monomial(&ord).unwrap().clone();
            for j in i + 1..gens.len() {
                if gens[j].is_zero() {
                    continue;
                }
                if gens[j].leading_monomial(&ord).unwrap() == &lm_i {
                    // same leading monomial: subtract a multiple of the
                    // earlier element to lower the later one
                    let ci = gens[i].leading_term(&ord).unwrap().1.clone();
                    let cj = gens[j].leading_term(&ord).unwrap().1.clone();
                    let lambda = gens[i].ring().field.div(&cj, &ci)?;
                    gens[j] = gens[j].sub(&gens[i].scale(&lambda));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let nonzero = gens.iter().filter(|g| !g.is_zero()).count() as u64;
    debug_assert!(nonzero <= d);
    if pad {
        let ring = basis
            .ring()
            .cloned()
            .expect("padding requires a nonempty basis");
        while (gens.len() as u64) < d {
            gens.push(Polynomial::zero(&ring));
        }
    }
    Ok(GroebnerBasis::trusted(gens, ord, false))
}

/// Ideal membership through the division algorithm; the basis type is the
/// witness that the divisor list is Groebner.
pub fn member(f: &Polynomial, basis: &GroebnerBasis) -> Result<bool> {
    Ok(divide(f, basis.generators(), basis.order())?
        .remainder
        .is_zero())
}

// ---- elimination ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElimOrder {
    /// Eliminated variables in a heavy graded-lex block (the default).
    Block,
    /// Pure lexicographic with the eliminated variables most significant.
    Lex,
}

/// Groebner basis of (gens) intersected with k[kept variables].
///
/// `keep` lists variable indices of the ambient ring; the output lives in a
/// ring spanned by those variables in declaration order.
pub fn eliminate(gens: &[Polynomial], keep: &[usize]) -> Result<GroebnerBasis> {
    eliminate_with(gens, keep, ElimOrder::Block, &Limits::default())
}

pub fn eliminate_with(
    gens: &[Polynomial],
    keep: &[usize],
    strategy: ElimOrder,
    limits: &Limits,
) -> Result<GroebnerBasis> {
    let Some(first) = gens.first() else {
        return Ok(GroebnerBasis::trusted(
            Vec::new(),
            MonomialOrder::GradedLex,
            true,
        ));
    };
    let ring = first.ring();
    let n = ring.nvars();
    let mut keep: Vec<usize> = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let drop: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    let ord = match strategy {
        ElimOrder::Block => MonomialOrder::block(drop.clone()),
        ElimOrder::Lex => {
            let mut priority = drop.clone();
            priority.extend(keep.iter().copied());
            MonomialOrder::Lex { priority }
        }
    };
    let gb = buchberger_with(gens, &ord, limits)?;
    let kept_names: Vec<String> = keep.iter().map(|&i| ring.vars[i].clone()).collect();
    let target = ring_owned(ring.field.clone(), kept_names);
    let mut out = Vec::new();
    for g in gb.generators() {
        if g.terms().all(|(m, _)| m.supported_on(&keep)) {
            out.push(g.restrict(&target, &keep)?);
        }
    }
    // the induced order on the kept subring
    let sub_ord = match strategy {
        ElimOrder::Block => MonomialOrder::GradedLex,
        ElimOrder::Lex => MonomialOrder::lex_default(keep.len()),
    };
    out.sort_by(|a, b| {
        let la = a.leading_monomial(&sub_ord);
        let lb = b.leading_monomial(&sub_ord);
        match (la, lb) {
            (Some(la), Some(lb)) => sub_ord.cmp_unchecked(lb, la),
            _ => Ordering::Equal,
        }
    });
    Ok(GroebnerBasis::trusted_in(out, sub_ord, true, target))
}

// ---- dimension ----

/// Krull dimension of S/I from the initial ideal of a verified basis: the
/// maximal size of a variable subset X such that no nonzero leading monomial
/// is supported inside X; -1 for the unit ideal.
pub fn dimension(basis: &GroebnerBasis) -> Result<i64> {
    if basis.contains_unit() {
        return Ok(-1);
    }
    // an empty basis with no recorded ring leaves the variable count
    // undetermined
    let Some(ring) = basis.ring() else {
        return Err(Error::ZeroInput);
    };
    let n = ring.nvars();
    Ok(max_independent_subset(basis, n)?.len() as i64)
}

/// Lexicographically first maximum-size independent variable subset.
pub(crate) fn max_independent_subset(basis: &GroebnerBasis, n: usize) -> Result<Vec<usize>> {
    if n > 20 {
        return Err(Error::ResourceLimit(format!(
            "independent-set search over {} variables",
            n
        )));
    }
    let ord = basis.order();
    let leads: Vec<Vec<usize>> = basis
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.leading_monomial(ord).unwrap().support())
        .collect();
    for size in (0..=n).rev() {
        if let Some(sub) = first_subset(n, size, &|x: &[usize]| {
            !leads.iter().any(|s| s.iter().all(|v| x.contains(v)))
        }) {
            return Ok(sub);
        }
    }
    unreachable!("the empty set is always independent for proper ideals")
}

/// First size-k subset of {0..n-1} in lexicographic order satisfying `ok`.
fn first_subset(n: usize, k: usize, ok: &dyn Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
    fn rec(
        n: usize,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        ok: &dyn Fn(&[usize]) -> bool,
    ) -> Option<Vec<usize>> {
        if cur.len() == k {
            return ok(cur).then(|| cur.clone());
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            if let Some(found) = rec(n, k, v + 1, cur, ok) {
                return Some(found);
            }
            cur.pop();
        }
        None
    }
    rec(n, k, 0, &mut Vec::new(), ok)
}

// ---- degree bound ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DubeBound {
    /// ceil(2 (d^2/2 + d)^(2^(n-1)))
    pub fine: BigInt,
    /// 2 d^(2^n)
    pub coarse: BigInt,
}

/// Worst-case degree bound for Groebner basis elements given max input
/// degree d in n variables.
pub fn dube_bound(d: u32, n: u32) -> Result<DubeBound> {
    if d == 0 || n == 0 {
        return Err(Error::ParamOutOfRange("dube_bound needs d, n >= 1".into()));
    }
    if n > 32 {
        return Err(Error::ResourceLimit("dube_bound exponent 2^n".into()));
    }
    let d = BigInt::from(d);
    // fine bound: numerator (d^2 + 2d)^e over 2^e, times 2, rounded up
    let e = 1u32 << (n - 1);
    let num = (&d * &d + BigInt::from(2) * &d).pow(e);
    let den = BigInt::from(2).pow(e);
    let fine = (BigInt::from(2) * num).div_ceil(&den);
    let coarse = BigInt::from(2) * d.pow(1u32 << n);
    Ok(DubeBound { fine, coarse })
}

/// Check an output degree against 2 d^(2^n) without materializing the bound
/// when it is astronomically large.
pub fn within_coarse_bound(input_degree: u32, nvars: u32, output_degree: u32) -> bool {
    let d = input_degree.max(1);
    if nvars == 0 {
        return output_degree <= 2 * d;
    }
    if d >= 2 && nvars >= 6 {
        // bound >= 2^(2^6) which exceeds any u32 degree
        return true;
    }
    if d == 1 {
        return output_degree as u64 <= 2;
    }
    let exp = 1u64 << nvars.min(63);
    let mut bound: u128 = 2;
    for _ in 0..exp {
        bound = bound.saturating_mul(d as u128);
        if bound > u32::MAX as u128 {
            return true;
        }
    }
    (output_degree as u128) <= bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::{parse_poly, ring};

    fn qring2() -> Ring {
        ring(FieldSpec::Rationals, &["x", "y"])
    }

    fn p(text: &str, r: &Ring) -> Polynomial {
        parse_poly(text, r).unwrap()
    }

    #[test]
    fn divide_exact() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let res = divide(&p("x^2 + x", &r), &[p("x", &r)], &MonomialOrder::GradedLex).unwrap();
        assert_eq!(res.quotients[0], p("x + 1", &r));
        assert!(res.remainder.is_zero());
    }

    #[test]
    fn divide_degree_too_low() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let res = divide(&p("x", &r), &[p("x^2", &r)], &MonomialOrder::GradedLex).unwrap();
        assert!(res.quotients[0].is_zero());
        assert_eq!(res.remainder, p("x", &r));
    }

    /// Hand-run of the division algorithm, plus the f = sum(q_i g_i) + h
    /// identity checked by polynomial arithmetic.
    #[test]
    fn divide_two_divisors() {
        let r = qring2();
        let f = p("x^2*y + 1", &r);
        let g = [p("x*y - 1", &r), p("y", &r)];
        let res = divide(&f, &g, &MonomialOrder::GradedLex).unwrap();
        assert_eq!(res.remainder, p("x + 1", &r));
        assert_eq!(res.quotients[0], p("x", &r));
        assert!(res.quotients[1].is_zero());
        let recombined = res.quotients[0]
            .mul(&g[0])
            .add(&res.quotients[1].mul(&g[1]))
            .add(&res.remainder);
        assert_eq!(recombined, f);
    }

    #[test]
    fn division_invariants_on_fixed_cases() {
        let r = qring2();
        let ord = MonomialOrder::GradedLex;
        let f = p("x^3*y^2 - x^2*y^3 + x", &r);
        let g = [p("x*y^2 + x", &r), p("x^2*y - y^2", &r)];
        let res = divide(&f, &g, &ord).unwrap();
        let mut acc = res.remainder.clone();
        for (q, d) in res.quotients.iter().zip(&g) {
            acc = acc.add(&q.mul(d));
            // in(q_i g_i) <= in(f)
            if let Some(lm) = q.mul(d).leading_monomial(&ord) {
                assert_ne!(
                    ord.cmp_unchecked(lm, f.leading_monomial(&ord).unwrap()),
                    Ordering::Greater
                );
            }
        }
        assert_eq!(acc, f);
        // no term of the remainder divisible by a leading monomial
        for (m, _) in res.remainder.terms() {
            for d in &g {
                assert!(!d.leading_monomial(&ord).unwrap().divides(m));
            }
        }
    }

    #[test]
    fn s_pair_cofactors() {
        let r = qring2();
        let ord = MonomialOrder::GradedLex;
        let ((ci, mi), (cj, mj)) =
            s_pair_data(&p("x^2", &r), &p("x*y", &r), &ord).unwrap();
        // gcd(x^2, xy) = x, so m_ij = x and m_ji = y up to units
        assert_eq!(mi, Monomial(vec![1, 0]));
        assert_eq!(mj, Monomial(vec![0, 1]));
        assert!(ci.is_one() && cj.is_one());

        // identical pair: cancellation leaves only the lower-order tail
        let g = p("x^2 + y", &r);
        let s = s_polynomial(&g, &g, &ord).unwrap();
        assert!(s.is_zero());

        assert!(s_pair_data(&p("0", &r), &p("x", &r), &ord).is_err());
    }

    #[test]
    fn groebner_criterion_examples() {
        let r = qring2();
        let ord = MonomialOrder::GradedLex;
        assert!(is_groebner(&[p("x", &r)], &ord).unwrap());
        // S-pair of (x + y, x) leaves remainder y, which does not reduce
        assert!(!is_groebner(&[p("x + y", &r), p("x", &r)], &ord).unwrap());
        assert!(is_groebner(&[], &ord).unwrap());
        assert!(is_groebner(&[p("0", &r), p("0", &r)], &ord).unwrap());
        // coprime leads: the product criterion applies, no reduction needed
        assert!(is_groebner(&[p("x", &r), p("y", &r)], &ord).unwrap());
    }

    #[test]
    fn buchberger_single_element() {
        let r = qring2();
        let gb = buchberger(&[p("x", &r)], &MonomialOrder::GradedLex).unwrap();
        assert_eq!(gb.generators(), &[p("x", &r)]);
    }

    /// Oracle for the new element: y^3 = y (x^2 + y^2) - x (xy), and the
    /// output passes the criterion checker while both inputs reduce to zero.
    #[test]
    fn buchberger_circle_pair() {
        let r = qring2();
        let ord = MonomialOrder::GradedLex;
        let gens = [p("x^2 + y^2", &r), p("x*y", &r)];
        let gb = buchberger(&gens, &ord).unwrap();
        let texts: Vec<String> = gb.generators().iter().map(|g| g.to_text()).collect();
        // canonical output order is descending by leading monomial
        assert_eq!(texts, vec!["y^3", "x^2 + y^2", "x*y"]);
        let set: std::collections::BTreeSet<String> = texts.into_iter().collect();
        let expect: std::collections::BTreeSet<String> =
            ["x^2 + y^2", "x*y", "y^3"].iter().map(|s| s.to_string()).collect();
        assert_eq!(set, expect);
        let identity = p("y", &r)
            .mul(&gens[0])
            .sub(&p("x", &r).mul(&gens[1]));
        assert_eq!(identity, p("y^3", &r));
        assert!(is_groebner(gb.generators(), &ord).unwrap());
        for g in &gens {
            assert!(member(g, &gb).unwrap());
        }
    }

    #[test]
    fn buchberger_unit_ideal() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let gb = buchberger(&[p("x", &r), p("x + 1", &r)], &MonomialOrder::GradedLex).unwrap();
        assert_eq!(gb.generators(), &[p("1", &r)]);
        assert!(gb.contains_unit());
    }

    #[test]
    fn buchberger_rejects_integer_ring() {
        let r = ring(FieldSpec::Integers, &["x"]);
        assert!(matches!(
            buchberger(&[p("2*x", &r)], &MonomialOrder::GradedLex),
            Err(Error::NotAField(_))
        ));
    }

    #[test]
    fn reduce_to_bounded_examples() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let ord = MonomialOrder::GradedLex;
        let basis =
            GroebnerBasis::verify(vec![p("x", &r), p("2*x", &r)], ord.clone()).unwrap();
        let red = reduce_to_d_bounded(&basis, 2, true).unwrap();
        assert_eq!(red.generators(), &[p("x", &r), p("0", &r)]);
        assert!(is_groebner(red.generators(), &ord).unwrap());

        let triple =
            GroebnerBasis::verify(vec![p("x", &r), p("x", &r), p("x", &r)], ord.clone()).unwrap();
        let red3 = reduce_to_d_bounded(&triple, 3, true).unwrap();
        assert_eq!(red3.generators(), &[p("x", &r), p("0", &r), p("0", &r)]);

        // already distinct leading monomials: unchanged up to padding
        let r2 = qring2();
        let fine = GroebnerBasis::verify(vec![p("x", &r2), p("y", &r2)], ord.clone()).unwrap();
        let red2 = reduce_to_d_bounded(&fine, 3, false).unwrap();
        assert_eq!(red2.generators(), fine.generators());

        let big = GroebnerBasis::verify(vec![p("x^5", &r)], ord).unwrap();
        assert!(matches!(
            reduce_to_d_bounded(&big, 3, false),
            Err(Error::UnboundedTerm { rank: 6, bound: 3 })
        ));
    }

    #[test]
    fn member_examples() {
        let r = qring2();
        let ord = MonomialOrder::GradedLex;
        let gb = buchberger(&[p("x", &r), p("y", &r)], &ord).unwrap();
        assert!(member(&p("0", &r), &gb).unwrap());
        assert!(member(&p("x + y", &r), &gb).unwrap());

        let r1 = ring(FieldSpec::Rationals, &["x"]);
        let gb2 = buchberger(&[parse_poly("x^2", &r1).unwrap()], &ord).unwrap();
        // degree count: x = q x^2 would force deg(q x^2) >= 2 > 1
        assert!(!member(&parse_poly("x", &r1).unwrap(), &gb2).unwrap());
    }

    #[test]
    fn eliminate_examples() {
        let r = qring2();
        // graph ideal meets k[x] trivially
        let gb = eliminate(&[p("y - x^2", &r)], &[0]).unwrap();
        assert!(gb.generators().is_empty());

        // substitution: keep y from (x - 1, y - x)
        let gb2 = eliminate(&[p("x - 1", &r), p("y - x", &r)], &[1]).unwrap();
        let texts: Vec<String> = gb2.generators().iter().map(|g| g.to_text()).collect();
        assert_eq!(texts, vec!["y - 1"]);

        // keeping every variable is just a basis computation
        let gens = [p("x^2 + y^2", &r), p("x*y", &r)];
        let gb3 = eliminate(&gens, &[0, 1]).unwrap();
        let direct = buchberger(&gens, &MonomialOrder::GradedLex).unwrap();
        assert_eq!(gb3.generators(), direct.generators());
    }

    #[test]
    fn eliminate_lex_matches_block() {
        let r = qring2();
        let gens = [p("x - 1", &r), p("y - x", &r)];
        let a = eliminate_with(&gens, &[1], ElimOrder::Block, &Limits::default()).unwrap();
        let b = eliminate_with(&gens, &[1], ElimOrder::Lex, &Limits::default()).unwrap();
        assert_eq!(
            a.generators().iter().map(|g| g.to_text()).collect::<Vec<_>>(),
            b.generators().iter().map(|g| g.to_text()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn dimension_examples() {
        let r3 = ring(FieldSpec::Rationals, &["x", "y", "z"]);
        let ord = MonomialOrder::GradedLex;
        // a zero polynomial carries the ambient ring, so the zero ideal of
        // k[x, y, z] reports the full dimension; without any ring the
        // dimension is undetermined and rejected
        let zp = Polynomial::zero(&r3);
        let with_ring = GroebnerBasis::verify(vec![zp], ord.clone()).unwrap();
        assert_eq!(dimension(&with_ring).unwrap(), 3);
        let no_ring = GroebnerBasis::verify(vec![], ord.clone()).unwrap();
        assert!(matches!(dimension(&no_ring), Err(Error::ZeroInput)));

        let point = buchberger(
            &[p("x", &r3.clone()), p("y", &r3), p("z", &r3)],
            &ord,
        )
        .unwrap();
        assert_eq!(dimension(&point).unwrap(), 0);

        let r2 = qring2();
        let curve = buchberger(&[p("x*y", &r2)], &ord).unwrap();
        assert_eq!(dimension(&curve).unwrap(), 1);

        let unit = buchberger(&[p("1", &r2)], &ord).unwrap();
        assert_eq!(dimension(&unit).unwrap(), -1);
    }

    #[test]
    fn dimension_matches_initial_ideal() {
        let r = qring2();
        let ord = MonomialOrder::GradedLex;
        for gens in [
            vec![p("x^2 + y^2", &r), p("x*y", &r)],
            vec![p("y - x^2", &r)],
            vec![p("x^2 - 1", &r)],
        ] {
            let gb = buchberger(&gens, &ord).unwrap();
            let initial: Vec<Polynomial> = gb
                .generators()
                .iter()
                .map(|g| {
                    let (m, _) = g.leading_term(&ord).unwrap();
                    Polynomial::from_term(g.ring(), m.clone(), r.field.one())
                })
                .collect();
            let in_gb = buchberger(&initial, &ord).unwrap();
            assert_eq!(dimension(&gb).unwrap(), dimension(&in_gb).unwrap());
        }
    }

    #[test]
    fn dube_bound_values() {
        let b = dube_bound(2, 2).unwrap();
        assert_eq!(b.fine, BigInt::from(32));
        assert_eq!(b.coarse, BigInt::from(32));
        let b2 = dube_bound(1, 1).unwrap();
        assert_eq!(b2.fine, BigInt::from(3));
        assert_eq!(b2.coarse, BigInt::from(2));
        assert!(dube_bound(0, 1).is_err());
    }

    #[test]
    fn reduced_basis_ignores_generator_permutations() {
        let r = qring2();
        let ord = MonomialOrder::GradedLex;
        let gens = vec![
            p("x^2 - y", &r),
            p("x*y - 1", &r),
            p("y^2 - x", &r),
        ];
        let base = buchberger(&gens, &ord).unwrap();
        let perms: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![2, 1, 0],
            vec![1, 2, 0],
        ];
        for perm in perms {
            let shuffled: Vec<Polynomial> = perm.iter().map(|&i| gens[i].clone()).collect();
            let gb = buchberger(&shuffled, &ord).unwrap();
            assert_eq!(gb.generators(), base.generators());
        }
    }

    #[test]
    fn resource_limit_is_explicit() {
        let r = qring2();
        let limits = Limits {
            max_degree: 2,
            max_basis: 4096,
        };
        let res = buchberger_with(
            &[p("x^3 - y", &r), p("x*y^3 - x", &r), p("y^4 - x^2", &r)],
            &MonomialOrder::GradedLex,
            &limits,
        );
        assert!(matches!(res, Err(Error::ResourceLimit(_))));
    }
}
