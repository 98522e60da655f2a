//! Ideal-level operations: quotient, saturation with its stabilization
//! exponent, radical membership, intersection, and contraction from
//! localized rings.

use crate::error::{Error, Result};
use crate::gcd::{divide_exact, poly_lcm};
use crate::groebner::{buchberger, eliminate, member, GroebnerBasis};
use crate::monomial::MonomialOrder;
use crate::poly::{ring_owned, same_ring, Polynomial, Ring};
use std::sync::OnceLock;

/// A finitely generated ideal with a lazily cached reduced Groebner basis
/// (graded lex).
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    basis: OnceLock<Result<GroebnerBasis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cell = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = cell.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            basis: cell,
        }
    }
}

impl PartialEq for Ideal {
    /// Ideal equality (same generated ideal), not generator-list equality.
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring)
            && self.contains(other).unwrap_or(false)
            && other.contains(self).unwrap_or(false)
    }
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Ideal {
        debug_assert!(gens.iter().all(|g| same_ring(g.ring(), &ring)));
        Ideal {
            ring,
            gens,
            basis: OnceLock::new(),
        }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring.clone(), Vec::new())
    }

    pub fn from_basis(basis: GroebnerBasis) -> Ideal {
        let ring = basis
            .ring()
            .cloned()
            .unwrap_or_else(|| panic!("basis without a ring"));
        let gens = basis.generators().to_vec();
        let cell = OnceLock::new();
        if *basis.order() == MonomialOrder::GradedLex {
            let _ = cell.set(Ok(basis));
        }
        Ideal {
            ring,
            gens,
            basis: cell,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced graded-lex Groebner basis, computed once.
    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        self.basis
            .get_or_init(|| buchberger(&self.gens, &MonomialOrder::GradedLex))
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// Attach a basis after verifying it generates the same ideal in both
    /// directions.
    pub fn attach_basis(&mut self, basis: GroebnerBasis) -> Result<()> {
        for g in &self.gens {
            if !member(g, &basis)? {
                return Err(Error::BasisMismatch);
            }
        }
        let own = self.groebner()?;
        for b in basis.generators() {
            if !member(b, own)? {
                return Err(Error::BasisMismatch);
            }
        }
        self.basis = OnceLock::new();
        let _ = self.basis.set(Ok(basis));
        Ok(())
    }

    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        member(f, self.groebner()?)
    }

    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.contains_unit())
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.groebner()?.generators().iter().all(|g| g.is_zero()))
    }

    /// Canonical generator texts (from the reduced basis), for reports.
    pub fn canonical_texts(&self) -> Result<Vec<String>> {
        Ok(self
            .groebner()?
            .generators()
            .iter()
            .map(|g| g.to_text())
            .collect())
    }
}

/// Append a fresh variable to the ring and embed the polynomials.
fn adjoin_var(ring: &Ring, stem: &str, polys: &[&Polynomial]) -> (Ring, Vec<Polynomial>, usize) {
    let fresh = ring.fresh_var(stem);
    let mut vars = ring.vars.clone();
    vars.push(fresh);
    let big = ring_owned(ring.field.clone(), vars);
    let map: Vec<usize> = (0..ring.nvars()).collect();
    let embedded = polys.iter().map(|p| p.embed(&big, &map)).collect();
    (big, embedded, ring.nvars())
}

/// Saturation (I : f^infinity) together with the least exponent s such that
/// (I : f^s) already equals it.
///
/// Computed by adjoining a fresh variable y, forming (I, 1 - y f), and
/// eliminating y; s is found by incrementing and testing generator
/// membership.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<(Ideal, u32)> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let ring = ideal.ring();
    let refs: Vec<&Polynomial> = ideal.generators().iter().collect();
    let (big, mut embedded, yidx) = adjoin_var(ring, "y", &refs);
    let y = Polynomial::var(&big, yidx);
    let map: Vec<usize> = (0..ring.nvars()).collect();
    let one_minus_yf = Polynomial::one(&big).sub(&y.mul(&f.embed(&big, &map)));
    embedded.push(one_minus_yf);
    let keep: Vec<usize> = (0..ring.nvars()).collect();
    let elim = eliminate(&embedded, &keep)?;
    // the eliminated basis lives in a structurally identical ring; rebuild
    // over the original ring handle
    let gens: Vec<Polynomial> = elim
        .generators()
        .iter()
        .map(|g| g.embed(ring, &keep))
        .collect();
    let sat = Ideal::new(ring.clone(), gens);

    let own = ideal.groebner()?;
    let mut s = 0u32;
    let mut power = Polynomial::one(ring);
    loop {
        let stable = sat
            .generators()
            .iter()
            .try_fold(true, |acc, g| -> Result<bool> {
                Ok(acc && member(&g.mul(&power), own)?)
            })?;
        if stable {
            return Ok((sat, s));
        }
        s += 1;
        power = power.mul(f);
        if s > 512 {
            return Err(Error::ResourceLimit(
                "saturation exponent search".into(),
            ));
        }
    }
}

/// (I : f^s) via s-fold single quotients, each computed as (I ∩ (f)) f^{-1}.
pub fn quotient(ideal: &Ideal, f: &Polynomial, s: u32) -> Result<Ideal> {
    let mut current = ideal.clone();
    for _ in 0..s {
        current = single_quotient(&current, f)?;
    }
    Ok(current)
}

fn single_quotient(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        // (I : 0) is the whole ring
        return Ok(Ideal::new(
            ideal.ring().clone(),
            vec![Polynomial::one(ideal.ring())],
        ));
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    let meet = intersect(ideal, &Ideal::new(ideal.ring().clone(), vec![f.clone()]))?;
    let gens = meet
        .groebner()?
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| divide_exact(g, f).expect("intersection members are multiples of f"))
        .collect();
    Ok(Ideal::new(ideal.ring().clone(), gens))
}

/// Generators of I ∩ J via the fresh-variable construction
/// (t I, (1 - t) J) ∩ S.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    let all: Vec<&Polynomial> = a.generators().iter().chain(b.generators()).collect();
    let (big, embedded, tidx) = adjoin_var(ring, "t", &all);
    let t = Polynomial::var(&big, tidx);
    let one_minus_t = Polynomial::one(&big).sub(&t);
    let mut gens = Vec::new();
    for (i, g) in embedded.iter().enumerate() {
        if i < a.generators().len() {
            gens.push(t.mul(g));
        } else {
            gens.push(one_minus_t.mul(g));
        }
    }
    let keep: Vec<usize> = (0..ring.nvars()).collect();
    let elim = eliminate(&gens, &keep)?;
    let out: Vec<Polynomial> = elim
        .generators()
        .iter()
        .map(|g| g.embed(ring, &keep))
        .collect();
    Ok(Ideal::new(ring.clone(), out))
}

/// Radical membership by the Rabinowitsch trick: f in sqrt(I) iff
/// 1 in (I, 1 - y f). When true, also the least e with f^e in I, found by
/// doubling then bisection.
pub fn radical_member(f: &Polynomial, ideal: &Ideal) -> Result<(bool, Option<u32>)> {
    if f.is_zero() {
        return Ok((true, Some(1)));
    }
    let ring = ideal.ring();
    let refs: Vec<&Polynomial> = ideal.generators().iter().collect();
    let (big, mut embedded, yidx) = adjoin_var(ring, "y", &refs);
    let map: Vec<usize> = (0..ring.nvars()).collect();
    let y = Polynomial::var(&big, yidx);
    embedded.push(Polynomial::one(&big).sub(&y.mul(&f.embed(&big, &map))));
    let gb = buchberger(&embedded, &MonomialOrder::GradedLex)?;
    if !gb.contains_unit() {
        return Ok((false, None));
    }
    let own = ideal.groebner()?;
    let in_ideal = |e: u32| -> Result<bool> { member(&f.pow(e), own) };
    let mut hi = 1u32;
    while !in_ideal(hi)? {
        hi *= 2;
        if hi > 1 << 16 {
            return Err(Error::ResourceLimit("radical exponent search".into()));
        }
    }
    let mut lo = hi / 2; // in_ideal(lo) is false (or lo = 0)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if in_ideal(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((true, Some(hi)))
}

/// Contraction I^c = (I ⊗ K) ∩ S where K is the fraction field of the
/// parameter subring spanned by `independent`.
///
/// Computes a basis under a block order with the non-parameter variables
/// heavy, takes head coefficients as polynomials in the parameters, and
/// saturates by their lcm. Returns (I^c, f, s) with f the multiplier and s
/// the stabilization exponent.
pub fn contract_with_multiplier(
    ideal: &Ideal,
    independent: &[usize],
) -> Result<(Ideal, Polynomial, u32)> {
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    let ring = ideal.ring();
    let heavy: Vec<usize> = (0..ring.nvars())
        .filter(|i| !independent.contains(i))
        .collect();
    let ord = MonomialOrder::block(heavy.clone());
    let gb = buchberger(ideal.generators(), &ord)?;
    let mut f = Polynomial::one(ring);
    for g in gb.generators() {
        if g.is_zero() {
            continue;
        }
        let hc = head_coefficient(g, &heavy, &ord);
        f = poly_lcm(&f, &hc)?;
    }
    if f.is_constant() {
        return Ok((ideal.clone(), Polynomial::one(ring), 0));
    }
    let (sat, s) = saturate(ideal, &f)?;
    Ok((sat, f, s))
}

pub fn contract(ideal: &Ideal, independent: &[usize]) -> Result<Ideal> {
    Ok(contract_with_multiplier(ideal, independent)?.0)
}

/// Leading coefficient of g viewed as a polynomial in the heavy variables
/// with coefficients in the parameter subring (kept in the ambient ring).
pub(crate) fn head_coefficient(
    g: &Polynomial,
    heavy: &[usize],
    ord: &MonomialOrder,
) -> Polynomial {
    let lm = g.leading_monomial(ord).expect("nonzero");
    let head: Vec<u32> = heavy.iter().map(|&i| lm.0[i]).collect();
    let mut out = Polynomial::zero(g.ring());
    for (m, c) in g.terms() {
        let proj: Vec<u32> = heavy.iter().map(|&i| m.0[i]).collect();
        if proj == head {
            let mut rest = m.clone();
            for &i in heavy {
                rest.0[i] = 0;
            }
            out.add_term(&rest, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::{parse_poly, ring};

    fn r2() -> Ring {
        ring(FieldSpec::Rationals, &["x", "y"])
    }

    fn ideal(texts: &[&str], r: &Ring) -> Ideal {
        Ideal::new(
            r.clone(),
            texts.iter().map(|t| parse_poly(t, r).unwrap()).collect(),
        )
    }

    fn p(t: &str, r: &Ring) -> Polynomial {
        parse_poly(t, r).unwrap()
    }

    #[test]
    fn saturate_strips_the_multiplier() {
        let r = r2();
        let i = ideal(&["x^2*y"], &r);
        let (j, s) = saturate(&i, &p("x", &r)).unwrap();
        assert_eq!(j.canonical_texts().unwrap(), vec!["y"]);
        assert_eq!(s, 2);
        // membership verification: y x^2 in I, y x not in I
        assert!(i.member(&p("y*x^2", &r)).unwrap());
        assert!(!i.member(&p("y*x", &r)).unwrap());
    }

    #[test]
    fn saturate_zero_ideal() {
        let r = r2();
        let i = Ideal::zero(&r);
        let (j, s) = saturate(&i, &p("x", &r)).unwrap();
        assert!(j.is_zero().unwrap());
        assert_eq!(s, 0);
    }

    #[test]
    fn saturate_member_gives_unit() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let i = ideal(&["x"], &r);
        let (j, s) = saturate(&i, &p("x", &r)).unwrap();
        assert!(j.is_unit().unwrap());
        assert_eq!(s, 1);
    }

    #[test]
    fn saturation_is_idempotent() {
        let r = r2();
        for gens in [vec!["x^2*y"], vec!["x^2 - y^2", "x*y^2"]] {
            let i = ideal(&gens, &r);
            let f = p("x", &r);
            let (j, _) = saturate(&i, &f).unwrap();
            let (jj, s2) = saturate(&j, &f).unwrap();
            assert_eq!(jj, j);
            assert_eq!(s2, 0);
        }
    }

    #[test]
    fn quotient_examples() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let q1 = quotient(&ideal(&["x^2"], &r), &p("x", &r), 1).unwrap();
        assert_eq!(q1.canonical_texts().unwrap(), vec!["x"]);

        let r2v = r2();
        let i = ideal(&["x*y", "y^2"], &r2v);
        let q0 = quotient(&i, &p("y", &r2v), 0).unwrap();
        assert_eq!(q0, i);
        let q = quotient(&i, &p("y", &r2v), 1).unwrap();
        // both inclusions: (x, y) = (I : y)
        assert!(q.member(&p("x", &r2v)).unwrap());
        assert!(q.member(&p("y", &r2v)).unwrap());
        let expect = ideal(&["x", "y"], &r2v);
        assert!(expect.contains(&q).unwrap());
    }

    #[test]
    fn quotient_agrees_with_saturation_at_the_exponent() {
        let r = r2();
        let i = ideal(&["x^2*y"], &r);
        let f = p("x", &r);
        let (sat, s) = saturate(&i, &f).unwrap();
        let q = quotient(&i, &f, s).unwrap();
        assert_eq!(q, sat);
        let q_more = quotient(&i, &f, s + 2).unwrap();
        assert_eq!(q_more, sat);
    }

    #[test]
    fn intersect_examples() {
        let r = r2();
        let xy = intersect(&ideal(&["x"], &r), &ideal(&["y"], &r)).unwrap();
        assert_eq!(xy.canonical_texts().unwrap(), vec!["x*y"]);
        // two-way membership
        assert!(ideal(&["x"], &r).member(&p("x*y", &r)).unwrap());
        assert!(ideal(&["y"], &r).member(&p("x*y", &r)).unwrap());

        let i = ideal(&["x^2 - y"], &r);
        let unit = ideal(&["1"], &r);
        assert_eq!(intersect(&i, &unit).unwrap(), i);
        assert_eq!(intersect(&i, &i).unwrap(), i);
        assert_eq!(
            intersect(&ideal(&["x"], &r), &ideal(&["x"], &r)).unwrap(),
            ideal(&["x"], &r)
        );
    }

    #[test]
    fn radical_membership() {
        let r = r2();
        let (yes, e) = radical_member(&p("x", &r), &ideal(&["x^2"], &r)).unwrap();
        assert!(yes);
        assert_eq!(e, Some(2));

        let (no, none) = radical_member(&p("y", &r), &ideal(&["x"], &r)).unwrap();
        assert!(!no);
        assert_eq!(none, None);

        // binomial expansion: (x+y)^3 in (x^2, y^2) but (x+y)^2 is not
        let i = ideal(&["x^2", "y^2"], &r);
        let f = p("x + y", &r);
        let (yes3, e3) = radical_member(&f, &i).unwrap();
        assert!(yes3);
        assert_eq!(e3, Some(3));
        assert!(i.member(&f.pow(3)).unwrap());
        assert!(!i.member(&f.pow(2)).unwrap());
    }

    #[test]
    fn contract_examples() {
        let r = ring(FieldSpec::Rationals, &["t", "x"]);
        // parameter t: head coefficient of t x is t, saturate by t
        let i = ideal(&["t*x"], &r);
        let (c, f, s) = contract_with_multiplier(&i, &[0]).unwrap();
        assert_eq!(c.canonical_texts().unwrap(), vec!["x"]);
        assert_eq!(f, p("t", &r));
        assert_eq!(s, 1);
        assert!(i.member(&p("x*t", &r)).unwrap());

        // all head coefficients constant: contraction is the identity
        let j = ideal(&["x^2 - t"], &r);
        let (cj, fj, sj) = contract_with_multiplier(&j, &[0]).unwrap();
        assert_eq!(cj, j);
        assert!(fj.is_constant());
        assert_eq!(sj, 0);

        // already saturated: s = 0
        let k = ideal(&["t*x - 1"], &r);
        let (ck, _fk, sk) = contract_with_multiplier(&k, &[0]).unwrap();
        assert_eq!(sk, 0);
        assert_eq!(ck, k);
    }

    #[test]
    fn contract_rejects_unit_ideal() {
        let r = r2();
        assert!(matches!(
            contract(&ideal(&["1"], &r), &[1]),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn intersect_checks_rings() {
        let a = ideal(&["x"], &r2());
        let other = ring(FieldSpec::Rationals, &["u", "v"]);
        let b = ideal(&["u"], &other);
        assert!(matches!(intersect(&a, &b), Err(Error::RingMismatch)));
    }

    #[test]
    fn attach_basis_verifies_cross_membership() {
        let r = r2();
        let mut i = ideal(&["x^2 + y^2", "x*y"], &r);
        let good = buchberger(i.generators(), &MonomialOrder::GradedLex).unwrap();
        assert!(i.attach_basis(good).is_ok());

        let mut j = ideal(&["x"], &r);
        let wrong = buchberger(&[p("y", &r)], &MonomialOrder::GradedLex).unwrap();
        assert_eq!(j.attach_basis(wrong), Err(Error::BasisMismatch));
    }
}
