//! Exact multivariate polynomials: arithmetic, parsing and printing,
//! d-bounded coefficient vectors, and base change.
//!
//! Terms are stored in a `BTreeMap` keyed by graded-lex order, so iteration
//! is deterministic; the canonical printer walks the map in descending order.

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::monomial::{monomial_rank, monomial_unrank, Monomial, MonomialOrder};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Coefficient field plus named variables. Shared by reference; equality is
/// structural.
#[derive(Debug, PartialEq, Eq)]
pub struct RingSpec {
    pub field: FieldSpec,
    pub vars: Vec<String>,
}

pub type Ring = Arc<RingSpec>;

pub fn ring(field: FieldSpec, vars: &[&str]) -> Ring {
    Arc::new(RingSpec {
        field,
        vars: vars.iter().map(|s| s.to_string()).collect(),
    })
}

pub fn ring_owned(field: FieldSpec, vars: Vec<String>) -> Ring {
    Arc::new(RingSpec { field, vars })
}

impl RingSpec {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Fresh variable name not clashing with the existing ones.
    pub fn fresh_var(&self, stem: &str) -> String {
        if !self.vars.iter().any(|v| v == stem) {
            return stem.to_string();
        }
        let mut i = 0usize;
        loop {
            let cand = format!("{}{}", stem, i);
            if !self.vars.iter().any(|v| v == &cand) {
                return cand;
            }
            i += 1;
        }
    }
}

pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Coeff>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

/// Canonical printer: descending graded-lex terms, no `*1`, no `^1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        Polynomial::from_term(ring, Monomial::var(i, ring.nvars()), ring.field.one())
    }

    pub fn from_term(ring: &Ring, m: Monomial, c: Coeff) -> Polynomial {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms(ring: &Ring, iter: impl IntoIterator<Item = (Monomial, Coeff)>) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        for (m, c) in iter {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &FieldSpec {
        &self.ring.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn constant_coeff(&self) -> Coeff {
        self.coeff(&Monomial::one(self.ring.nvars()))
    }

    pub fn add_term(&mut self, m: &Monomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        let field = &self.ring.field;
        match self.terms.get_mut(m) {
            Some(existing) => {
                let sum = field.add(existing, c);
                if sum.is_zero() {
                    self.terms.remove(m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let field = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(&m1.mul(m2), &self.ring.field.mul(c1, c2));
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), field.mul(cc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term with respect to an order; None for zero. Graded lex hits
    /// the map's last entry; other orders scan.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        match ord {
            MonomialOrder::GradedLex => self.terms.iter().next_back(),
            _ => self
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| ord.cmp_unchecked(a, b)),
        }
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self, ord: &MonomialOrder) -> Result<Polynomial> {
        match self.leading_term(ord) {
            None => Ok(self.clone()),
            Some((_, c)) => {
                let inv = self.ring.field.inv(c)?;
                Ok(self.scale(&inv))
            }
        }
    }

    /// Formal partial derivative; the term-wise exponent rule kills p-th
    /// powers in characteristic p on its own.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = &self.ring.field;
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] = e - 1;
            out.add_term(&m2, &field.mul(c, &field.from_i64(e as i64)));
        }
        out
    }

    /// Evaluate at a point; values indexed by variable.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        let field = &self.ring.field;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = field.mul(&t, &field.pow(&point[i], e as u64));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Substitute a polynomial for every variable (algebra map into `target`).
    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Polynomial {
        debug_assert_eq!(images.len(), self.ring.nvars());
        let mut out = Polynomial::zero(target);
        // cache powers per variable; exponents are small at desk scale
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, convert_coeff(&self.ring.field, &target.field, c));
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let last = powers[i].last().unwrap().clone();
                    powers[i].push(last.mul(&images[i]));
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Move the polynomial into a ring with the same field whose variables
    /// are a superset; `map[i]` is the index of variable i in the new ring.
    pub fn embed(&self, target: &Ring, map: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] = x;
            }
            out.add_term(&Monomial(e), c);
        }
        out
    }

    /// Restrict to a subring spanned by `keep` (indices into this ring's
    /// variables). Errors if any term involves a dropped variable.
    pub fn restrict(&self, target: &Ring, keep: &[usize]) -> Result<Polynomial> {
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            if !m.supported_on(keep) {
                return Err(Error::RingMismatch);
            }
            let e: Vec<u32> = keep.iter().map(|&i| m.0[i]).collect();
            out.add_term(&Monomial(e), c);
        }
        Ok(out)
    }

    /// Maximal rank of any monomial of the polynomial; 0 for zero. This is
    /// the least d such that the polynomial is d-bounded.
    pub fn max_rank(&self) -> Result<u64> {
        let mut best = 0u64;
        for m in self.terms.keys() {
            best = best.max(monomial_rank(m)?);
        }
        Ok(best)
    }

    // ---- canonical text form ----

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let mono = monomial_text(&self.ring, m);
            if mono.is_empty() {
                out.push_str(&mag.to_literal());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&mag.to_literal());
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

fn monomial_text(ring: &RingSpec, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.vars[i].clone()),
            _ => parts.push(format!("{}^{}", ring.vars[i], e)),
        }
    }
    parts.join("*")
}

/// Clone a coefficient into another ring over the same field; reductions go
/// through `base_change` instead.
fn convert_coeff(from: &FieldSpec, to: &FieldSpec, c: &Coeff) -> Coeff {
    assert_eq!(from, to, "substitute requires matching coefficient fields");
    c.clone()
}

// ---- d-bounded encoding ----

/// Dense coefficient vector indexed by the first d monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedPoly {
    pub bound: u64,
    pub coeffs: Vec<Coeff>,
}

/// Encode f as (lambda_1, ..., lambda_d); errors with the offending rank if
/// some term lies beyond m_d.
pub fn to_bounded(f: &Polynomial, d: u64) -> Result<BoundedPoly> {
    let mut coeffs = vec![f.ring().field.zero(); d as usize];
    for (m, c) in f.terms() {
        let r = monomial_rank(m)?;
        if r > d {
            return Err(Error::UnboundedTerm { rank: r, bound: d });
        }
        coeffs[(r - 1) as usize] = c.clone();
    }
    Ok(BoundedPoly { bound: d, coeffs })
}

/// Decode a coefficient vector back into the sparse form.
pub fn from_bounded(b: &BoundedPoly, ring: &Ring) -> Result<Polynomial> {
    let mut p = Polynomial::zero(ring);
    for (i, c) in b.coeffs.iter().enumerate() {
        if !c.is_zero() {
            let m = monomial_unrank(i as u64 + 1, ring.nvars())?;
            p.add_term(&m, c);
        }
    }
    Ok(p)
}

// ---- base change ----

/// Coefficient-wise reduction modulo p of a polynomial over Z or Q; applying
/// it to data already reduced modulo the same p is the identity.
pub fn base_change(f: &Polynomial, p: u64) -> Result<Polynomial> {
    if let FieldSpec::PrimeField(q) = f.ring().field {
        return if q == p {
            Ok(f.clone())
        } else {
            Err(Error::FieldMismatch(format!("Fp:{}", q), format!("Fp:{}", p)))
        };
    }
    let target_field = FieldSpec::prime_field(p)?;
    let target = ring_owned(target_field.clone(), f.ring().vars.clone());
    let mut out = Polynomial::zero(&target);
    for (m, c) in f.terms() {
        out.add_term(&m.clone(), &target_field.reduce_mod(c, p)?);
    }
    Ok(out)
}

/// View an integer-coefficient polynomial over Q (for char-0 pipelines).
pub fn rationalize(f: &Polynomial) -> Result<Polynomial> {
    let target = ring_owned(FieldSpec::Rationals, f.ring().vars.clone());
    let mut out = Polynomial::zero(&target);
    for (m, c) in f.terms() {
        let q = match c {
            Coeff::Integer(v) => Coeff::Rational(num_rational::BigRational::from(v.clone())),
            Coeff::Rational(_) => c.clone(),
            Coeff::Prime(_) => {
                return Err(Error::FieldMismatch("F_p".into(), "Z or Q".into()))
            }
        };
        out.add_term(&m.clone(), &q);
    }
    Ok(out)
}

// ---- parser ----

/// Parse an ASCII polynomial expression over the given ring.
///
/// Grammar: a polynomial is a '+'/'-'-separated list of terms; a term is a
/// coefficient, a coefficient '*' monomials, or bare monomials; a monomial is
/// var('^'int)?; a coefficient is int or int'/'int (rationals only).
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    Parser {
        bytes: text.as_bytes(),
        pos: 0,
        ring,
    }
    .parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        self.skip_ws();
        if self.pos == self.bytes.len() {
            return self.err("empty input");
        }
        let mut sign_neg = false;
        if let Some(c) = self.peek() {
            if c == b'-' {
                sign_neg = true;
                self.pos += 1;
            } else if c == b'+' {
                self.pos += 1;
            }
        }
        loop {
            let term = self.parse_term()?;
            acc = if sign_neg { acc.sub(&term) } else { acc.add(&term) };
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    sign_neg = false;
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign_neg = true;
                    self.pos += 1;
                }
                Some(_) => return self.err("expected '+' or '-'"),
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut coeff = self.ring.field.one();
        let mut mono = Monomial::one(self.ring.nvars());
        // optional leading coefficient
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.parse_coeff()?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(Polynomial::from_term(self.ring, mono, coeff));
            }
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let (var, exp) = self.parse_var_power()?;
                    let mut e = vec![0u32; self.ring.nvars()];
                    e[var] = exp;
                    mono = mono.mul(&Monomial(e));
                }
                Some(c) if c.is_ascii_digit() => {
                    // a numeric factor inside a monomial product
                    let c2 = self.parse_coeff()?;
                    coeff = self.ring.field.mul(&coeff, &c2);
                }
                _ => return self.err("expected a variable or number"),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(Polynomial::from_term(self.ring, mono, coeff))
    }

    fn parse_var_power(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'\'')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let var = self
            .ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            exp = self.parse_uint()? as u32;
        }
        Ok((var, exp))
    }

    fn parse_uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer too large".into(),
            })
    }

    fn parse_coeff(&mut self) -> Result<Coeff> {
        let num = self.parse_uint()?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            if self.ring.field != FieldSpec::Rationals {
                return Err(Error::FractionOutsideRationals { pos: self.pos });
            }
            self.pos += 1;
            let den = self.parse_uint()?;
            if den == 0 {
                return self.err("zero denominator");
            }
            let field = &self.ring.field;
            return field.div(
                &field.from_bigint(&BigInt::from(num)),
                &field.from_bigint(&BigInt::from(den)),
            );
        }
        Ok(self.ring.field.from_bigint(&BigInt::from(num)))
    }
}

/// Parse a single field literal ("3", "-2", "1/2") as a constant.
pub fn parse_literal(text: &str, field: &FieldSpec) -> Result<Coeff> {
    let r = ring_owned(field.clone(), vec![]);
    let p = parse_poly(text, &r)?;
    Ok(p.constant_coeff())
}
