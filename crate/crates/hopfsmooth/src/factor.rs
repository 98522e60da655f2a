//! Exact polynomial factorization: squarefree/distinct-degree/equal-degree
//! splitting over prime fields, rational factorization through a good prime
//! with exhaustive recombination, and Kronecker substitution for multivariate
//! polynomials (hence for univariate polynomials over rational function
//! fields, after Gauss-lemma clearing).

use crate::error::{Error, Result};
use crate::field::{add_mod, inv_mod, is_prime_u64, mul_mod, next_prime, Coeff, FieldSpec};
use crate::gcd::divide_exact;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{ring_owned, Polynomial, Ring};
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `unit * product(factors[i]^mult[i])` equals the factored polynomial; the
/// factors are pairwise non-associate and irreducible, normalized primitive
/// with positive (or monic) leading coefficient.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub unit: Polynomial,
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    pub fn product(&self) -> Polynomial {
        let mut acc = self.unit.clone();
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }
}

/// Factor g viewed as a univariate polynomial in `main` over the fraction
/// field of the remaining variables. Factors of positive main-degree are
/// returned with polynomial (cleared-denominator, primitive) representatives;
/// the content in the other variables is folded into the unit.
pub fn factor_univariate(g: &Polynomial, main: usize) -> Result<Factorization> {
    if g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let full = factor_multivariate(g)?;
    let mut unit = full.unit.clone();
    let mut factors = Vec::new();
    for (f, m) in full.factors {
        if f.degree_in(main) > 0 {
            factors.push((f, m));
        } else {
            unit = unit.mul(&f.pow(m));
        }
    }
    Ok(Factorization { unit, factors })
}

/// Full multivariate factorization into irreducibles over Q or F_p.
pub fn factor_multivariate(f: &Polynomial) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    f.ring().field.require_field()?;
    let mut factors: Vec<(Polynomial, u32)> = Vec::new();
    factor_rec(f.clone(), &mut factors)?;
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.to_text().cmp(&b.0.to_text()))
    });
    // merge associates (same normalized representative)
    let mut merged: Vec<(Polynomial, u32)> = Vec::new();
    for (p, m) in factors {
        match merged.last_mut() {
            Some((q, mm)) if *q == p => *mm += m,
            _ => merged.push((p, m)),
        }
    }
    let mut prod = Polynomial::one(f.ring());
    for (p, m) in &merged {
        prod = prod.mul(&p.pow(*m));
    }
    let unit = divide_exact(f, &prod).expect("factor product divides input");
    debug_assert!(unit.is_constant());
    Ok(Factorization {
        unit,
        factors: merged,
    })
}

fn occurring_vars(f: &Polynomial) -> Vec<usize> {
    let n = f.ring().nvars();
    (0..n).filter(|&i| f.degree_in(i) > 0).collect()
}

fn factor_rec(f: Polynomial, out: &mut Vec<(Polynomial, u32)>) -> Result<()> {
    let vars = occurring_vars(&f);
    match vars.len() {
        0 => Ok(()), // constant: absorbed by the unit
        1 => factor_one_var(&f, vars[0], out),
        _ => factor_kronecker(&f, &vars, out),
    }
}

// ---- single-variable dispatch ----

fn factor_one_var(f: &Polynomial, var: usize, out: &mut Vec<(Polynomial, u32)>) -> Result<()> {
    let ring = f.ring();
    match &ring.field {
        FieldSpec::Rationals => {
            let dense = to_dense_q(f, var);
            let factors = factor_q(&dense)?;
            for (coeffs, m) in factors {
                out.push((from_dense_z(&coeffs, ring, var), m));
            }
            Ok(())
        }
        FieldSpec::PrimeField(p) => {
            let dense = to_dense_fp(f, var, *p);
            let factors = factor_fp(&dense, *p)?;
            for (coeffs, m) in factors {
                out.push((from_dense_fp(&coeffs, ring, var), m));
            }
            Ok(())
        }
        FieldSpec::Integers => Err(Error::NotAField("Z".into())),
    }
}

fn to_dense_q(f: &Polynomial, var: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); f.degree_in(var) as usize + 1];
    for (m, c) in f.terms() {
        let Coeff::Rational(q) = c else { unreachable!() };
        v[m.0[var] as usize] = q.clone();
    }
    v
}

fn from_dense_z(coeffs: &[BigInt], ring: &Ring, var: usize) -> Polynomial {
    let mut p = Polynomial::zero(ring);
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            let mut mono = Monomial::one(ring.nvars());
            mono.0[var] = e as u32;
            p.add_term(&mono, &ring.field.from_bigint(c));
        }
    }
    p
}

fn to_dense_fp(f: &Polynomial, var: usize, _p: u64) -> Vec<u64> {
    let mut v = vec![0u64; f.degree_in(var) as usize + 1];
    for (m, c) in f.terms() {
        let Coeff::Prime(x) = c else { unreachable!() };
        v[m.0[var] as usize] = *x;
    }
    v
}

fn from_dense_fp(coeffs: &[u64], ring: &Ring, var: usize) -> Polynomial {
    let mut p = Polynomial::zero(ring);
    for (e, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            let mut mono = Monomial::one(ring.nvars());
            mono.0[var] = e as u32;
            p.add_term(&mono, &Coeff::Prime(c));
        }
    }
    p
}

// ---- Kronecker substitution for several variables ----

/// Pack the occurring variables into one: exponents become base-radix digits
/// where each radix exceeds the per-variable degree. True factors of f have
/// componentwise smaller degrees, so packing is injective on them; spurious
/// unpackings simply fail the trial division.
fn factor_kronecker(
    f: &Polynomial,
    vars: &[usize],
    out: &mut Vec<(Polynomial, u32)>,
) -> Result<()> {
    let ring = f.ring();
    let radices: Vec<u64> = vars.iter().map(|&v| f.degree_in(v) as u64 + 1).collect();
    let packed_deg: u64 = vars
        .iter()
        .zip(&radices)
        .map(|(&v, _)| f.degree_in(v) as u64)
        .zip(cumulative(&radices))
        .map(|(d, mult)| d * mult)
        .sum();
    if packed_deg > 5000 {
        return Err(Error::ResourceLimit(format!(
            "Kronecker image degree {}",
            packed_deg
        )));
    }
    let xring = ring_owned(ring.field.clone(), vec!["X".to_string()]);
    let image = pack(f, vars, &radices, &xring);
    let image_factors = factor_multivariate(&image)?;

    // search submultisets of the image factors, smallest total size first
    let pool: Vec<(Polynomial, u32)> = image_factors.factors;
    let mut counts: Vec<u32> = pool.iter().map(|(_, m)| *m).collect();
    let mut remaining = f.clone();
    'restart: loop {
        let rvars = occurring_vars(&remaining);
        if rvars.len() <= 1 {
            return factor_rec(remaining, out);
        }
        let total: u32 = counts.iter().sum();
        for size in 1..=total {
            let mut pick = vec![0u32; counts.len()];
            if let Some(found) = search_submultiset(
                &mut pick,
                0,
                size,
                &counts,
                &pool,
                &remaining,
                vars,
                &radices,
                ring,
            )? {
                let (cand, used) = found;
                let mut mult = 0u32;
                while let Some(q) = divide_exact(&remaining, &cand) {
                    remaining = q;
                    mult += 1;
                }
                debug_assert!(mult > 0);
                out.push((cand, mult));
                for (i, &u) in used.iter().enumerate() {
                    counts[i] -= u.min(counts[i]);
                }
                continue 'restart;
            }
        }
        // no proper divisor: remaining is irreducible
        out.push((normalize_factor(&remaining), 1));
        return Ok(());
    }
}

fn cumulative(radices: &[u64]) -> Vec<u64> {
    let mut mults = Vec::with_capacity(radices.len());
    let mut acc = 1u64;
    for &r in radices {
        mults.push(acc);
        acc = acc.saturating_mul(r);
    }
    mults
}

fn pack(f: &Polynomial, vars: &[usize], radices: &[u64], xring: &Ring) -> Polynomial {
    let mults = cumulative(radices);
    let mut out = Polynomial::zero(xring);
    for (m, c) in f.terms() {
        let mut e = 0u64;
        for (k, &v) in vars.iter().enumerate() {
            e += m.0[v] as u64 * mults[k];
        }
        out.add_term(&Monomial(vec![e as u32]), c);
    }
    out
}

fn unpack(u: &Polynomial, vars: &[usize], radices: &[u64], ring: &Ring) -> Polynomial {
    let mut out = Polynomial::zero(ring);
    for (m, c) in u.terms() {
        let mut e = m.0[0] as u64;
        let mut mono = Monomial::one(ring.nvars());
        for (k, &v) in vars.iter().enumerate() {
            mono.0[v] = (e % radices[k]) as u32;
            e /= radices[k];
        }
        if e > 0 {
            // exponent beyond the packing range: candidate is spurious;
            // encode it as something that will fail trial division
            mono.0[vars[0]] += (e as u32) * radices[0] as u32;
        }
        out.add_term(&mono, c);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn search_submultiset(
    pick: &mut Vec<u32>,
    idx: usize,
    left: u32,
    counts: &[u32],
    pool: &[(Polynomial, u32)],
    target: &Polynomial,
    vars: &[usize],
    radices: &[u64],
    ring: &Ring,
) -> Result<Option<(Polynomial, Vec<u32>)>> {
    if left == 0 {
        // full product is the target itself; skip to keep factors proper
        let total_used: u32 = pick.iter().sum();
        let total_avail: u32 = counts.iter().sum();
        if total_used == total_avail {
            return Ok(None);
        }
        let mut prod = Polynomial::one(pool[0].0.ring());
        for (i, &k) in pick.iter().enumerate() {
            for _ in 0..k {
                prod = prod.mul(&pool[i].0);
            }
        }
        let cand = normalize_factor(&unpack(&prod, vars, radices, ring));
        if cand.is_constant() {
            return Ok(None);
        }
        if divide_exact(target, &cand).is_some() {
            return Ok(Some((cand, pick.clone())));
        }
        return Ok(None);
    }
    if idx >= counts.len() {
        return Ok(None);
    }
    let max_here = counts[idx].min(left);
    for take in 0..=max_here {
        pick[idx] = take;
        if let Some(found) = search_submultiset(
            pick,
            idx + 1,
            left - take,
            counts,
            pool,
            target,
            vars,
            radices,
            ring,
        )? {
            return Ok(Some(found));
        }
    }
    pick[idx] = 0;
    Ok(None)
}

/// Canonical representative of an associate class: over Q, clear
/// denominators to a primitive integer polynomial with positive leading
/// (graded-lex) coefficient; over F_p, monic.
pub fn normalize_factor(f: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return f.clone();
    }
    match &f.ring().field {
        FieldSpec::PrimeField(_) => f.monic(&MonomialOrder::GradedLex).unwrap(),
        FieldSpec::Rationals => {
            let mut den = BigInt::one();
            let mut num_gcd = BigInt::zero();
            for (_, c) in f.terms() {
                let Coeff::Rational(q) = c else { unreachable!() };
                den = den.lcm(q.denom());
            }
            for (_, c) in f.terms() {
                let Coeff::Rational(q) = c else { unreachable!() };
                num_gcd = num_gcd.gcd(&(q.numer() * &den / q.denom()));
            }
            let scale = BigRational::new(den, num_gcd);
            let scaled = f.scale(&Coeff::Rational(scale.abs()));
            let (_, lead) = scaled.leading_term(&MonomialOrder::GradedLex).unwrap();
            if lead.is_negative() {
                scaled.neg()
            } else {
                scaled
            }
        }
        FieldSpec::Integers => f.clone(),
    }
}

// ---- dense univariate factorization over F_p ----

/// Strip leading zeros.
fn norm(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn deg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn fp_monic(v: &[u64], p: u64) -> Vec<u64> {
    if v.is_empty() {
        return Vec::new();
    }
    let inv = inv_mod(*v.last().unwrap(), p).unwrap();
    v.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    norm(out)
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = add_mod(x, p - y % p, p);
    }
    norm(out)
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = norm(a.to_vec());
    let db = deg(b).expect("division by zero polynomial");
    let lead_inv = inv_mod(*b.last().unwrap(), p).unwrap();
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        let shift = dr - db;
        for (j, &bc) in b.iter().enumerate() {
            let idx = j + shift;
            r[idx] = add_mod(r[idx], p - mul_mod(c, bc, p) % p, p);
        }
        r = norm(r);
    }
    r
}

fn fp_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = norm(a.to_vec());
    let db = deg(b).expect("division by zero polynomial");
    let lead_inv = inv_mod(*b.last().unwrap(), p).unwrap();
    let mut q = vec![0u64; r.len().saturating_sub(db)];
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        let shift = dr - db;
        q[shift] = c;
        for (j, &bc) in b.iter().enumerate() {
            let idx = j + shift;
            r[idx] = add_mod(r[idx], p - mul_mod(c, bc, p) % p, p);
        }
        r = norm(r);
    }
    (norm(q), r)
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = norm(a.to_vec());
    let mut y = norm(b.to_vec());
    while !y.is_empty() {
        let r = fp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        fp_monic(&x, p)
    }
}

fn fp_derive(a: &[u64], p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for (i, &c) in a.iter().enumerate().skip(1) {
        out.push(mul_mod(c, (i as u64) % p, p));
    }
    norm(out)
}

fn fp_powmod(base: &[u64], e: &BigUint, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = fp_rem(base, f, p);
    for bit in 0..e.bits() {
        if e.bit(bit) {
            acc = fp_rem(&fp_mul(&acc, &b, p), f, p);
        }
        b = fp_rem(&fp_mul(&b, &b, p), f, p);
    }
    acc
}

/// p-th root of a polynomial whose derivative vanishes: exponents divide by
/// p, coefficients are fixed by Frobenius over F_p.
fn fp_pth_root(a: &[u64], p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for (i, &c) in a.iter().enumerate() {
        if c != 0 {
            debug_assert_eq!(i as u64 % p, 0);
            let j = i / p as usize;
            if out.len() <= j {
                out.resize(j + 1, 0);
            }
            out[j] = c;
        }
    }
    norm(out)
}

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

fn seed_from(f: &[u64], p: u64) -> u64 {
    let mut h = 0xcbf29ce484222325u64 ^ p;
    for &c in f {
        h = (h ^ c).wrapping_mul(0x100000001b3);
    }
    h
}

/// Full factorization over F_p (monic factors, unit in the scalar).
fn factor_fp(f: &[u64], p: u64) -> Result<Vec<(Vec<u64>, u32)>> {
    let f = norm(f.to_vec());
    if f.is_empty() {
        return Err(Error::ZeroInput);
    }
    let mut out: Vec<(Vec<u64>, u32)> = Vec::new();
    squarefree_decompose_fp(&fp_monic(&f, p), p, 1, &mut out)?;
    // split each squarefree part by distinct degree then equal degree
    let mut final_out = Vec::new();
    for (part, mult) in out {
        for (irr, _d) in distinct_degree_split(&part, p)? {
            final_out.push((irr, mult));
        }
    }
    final_out.sort();
    Ok(final_out)
}

fn squarefree_decompose_fp(
    f: &[u64],
    p: u64,
    scale: u32,
    out: &mut Vec<(Vec<u64>, u32)>,
) -> Result<()> {
    if deg(f) == Some(0) || f.is_empty() {
        return Ok(());
    }
    let d = fp_derive(f, p);
    if d.is_empty() {
        // f = g(x^p) = (pth_root)^p
        let root = fp_pth_root(f, p);
        return squarefree_decompose_fp(&root, p, scale * p as u32, out);
    }
    let mut g = fp_gcd(f, &d, p);
    let mut w = fp_divmod(f, &g, p).0;
    let mut i = 1u32;
    while deg(&w) != Some(0) {
        let y = fp_gcd(&w, &g, p);
        let z = fp_divmod(&w, &y, p).0;
        if deg(&z) != Some(0) {
            out.push((fp_monic(&z, p), i * scale));
        }
        i += 1;
        w = y;
        g = fp_divmod(&g, &w, p).0;
    }
    if deg(&g) != Some(0) {
        let root = fp_pth_root(&g, p);
        squarefree_decompose_fp(&root, p, scale * p as u32, out)?;
    }
    Ok(())
}

/// Distinct-degree stage: returns (irreducible factor, its degree) pairs for
/// a squarefree monic input, using equal-degree splitting on each block.
fn distinct_degree_split(f: &[u64], p: u64) -> Result<Vec<(Vec<u64>, usize)>> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let mut h = vec![0u64, 1]; // x
    let mut d = 0usize;
    while let Some(dr) = deg(&rest) {
        if dr == 0 {
            break;
        }
        d += 1;
        if dr < 2 * d {
            out.push((fp_monic(&rest, p), dr));
            break;
        }
        h = fp_powmod(&h, &BigUint::from(p), &rest, p);
        let hx = fp_sub(&h, &[0, 1], p);
        let block = fp_gcd(&hx, &rest, p);
        if deg(&block).is_some_and(|b| b > 0) {
            for irr in equal_degree_split(&block, d, p)? {
                out.push((irr, d));
            }
            rest = fp_divmod(&rest, &block, p).0;
            h = fp_rem(&h, &rest, p);
        }
    }
    Ok(out)
}

/// Cantor-Zassenhaus equal-degree splitting, seeded deterministically.
fn equal_degree_split(f: &[u64], d: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let df = deg(f).unwrap();
    if df == d {
        return Ok(vec![fp_monic(f, p)]);
    }
    let mut rng = SplitMix(seed_from(f, p));
    for _attempt in 0..256 {
        let mut r: Vec<u64> = (0..df).map(|_| rng.next() % p).collect();
        r = norm(r);
        if deg(&r).is_none_or(|dr| dr == 0) {
            continue;
        }
        let s = if p == 2 {
            // trace map r + r^2 + r^4 + ... over F_2
            let mut acc = Vec::new();
            let mut term = fp_rem(&r, f, p);
            for _ in 0..d {
                acc = fp_sub(&fp_sub(&acc, &[0u64], p), &fp_sub(&[0u64], &term, p), p);
                term = fp_rem(&fp_mul(&term, &term, p), f, p);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let pw = fp_powmod(&r, &e, f, p);
            fp_sub(&pw, &[1], p)
        };
        let g = fp_gcd(&s, f, p);
        if let Some(dg) = deg(&g) {
            if dg > 0 && dg < df {
                let rest = fp_divmod(f, &g, p).0;
                let mut out = equal_degree_split(&g, d, p)?;
                out.extend(equal_degree_split(&rest, d, p)?);
                return Ok(out);
            }
        }
    }
    Err(Error::ResourceLimit("equal-degree splitting attempts".into()))
}

// ---- dense univariate factorization over Q ----

/// Factor a dense rational univariate polynomial; returns primitive integer
/// factors with positive leading coefficients and multiplicities.
fn factor_q(f: &[BigRational]) -> Result<Vec<(Vec<BigInt>, u32)>> {
    let mut v = f.to_vec();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return Err(Error::ZeroInput);
    }
    // clear denominators and content
    let mut den = BigInt::one();
    for c in &v {
        den = den.lcm(c.denom());
    }
    let mut z: Vec<BigInt> = v.iter().map(|c| c.numer() * &den / c.denom()).collect();
    let mut content = BigInt::zero();
    for c in &z {
        content = content.gcd(c);
    }
    if !content.is_one() {
        for c in &mut z {
            *c /= &content;
        }
    }
    let mut out: Vec<(Vec<BigInt>, u32)> = Vec::new();
    // powers of x
    let mut shift = 0u32;
    while z.first().is_some_and(|c| c.is_zero()) {
        z.remove(0);
        shift += 1;
    }
    if shift > 0 {
        out.push((vec![BigInt::zero(), BigInt::one()], shift));
    }
    if z.len() <= 1 {
        return Ok(out);
    }
    // squarefree part, then recover multiplicities by trial division
    let sqfree = z_squarefree_part(&z);
    let irreducibles = factor_z_squarefree(&sqfree)?;
    for irr in irreducibles {
        let mut mult = 0u32;
        let mut cur = z.clone();
        while let Some(q) = z_divide_exact(&cur, &irr) {
            cur = q;
            mult += 1;
        }
        debug_assert!(mult > 0);
        out.push((irr, mult));
        z = z_divide_exact_pow(&z, &out.last().unwrap().0, mult);
    }
    Ok(out)
}

fn z_divide_exact_pow(f: &[BigInt], g: &[BigInt], m: u32) -> Vec<BigInt> {
    let mut cur = f.to_vec();
    for _ in 0..m {
        cur = z_divide_exact(&cur, g).expect("multiplicity counted by trial division");
    }
    cur
}

fn z_squarefree_part(f: &[BigInt]) -> Vec<BigInt> {
    let d: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let g = z_gcd_poly(f, &d);
    if g.len() <= 1 {
        return z_primitive(f);
    }
    z_primitive(&z_divide_exact(f, &g).expect("gcd divides"))
}

fn z_primitive(f: &[BigInt]) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in f {
        content = content.gcd(c);
    }
    if content.is_zero() || content.is_one() {
        return f.to_vec();
    }
    f.iter().map(|c| c / &content).collect()
}

/// Gcd of integer polynomials by rationalizing (denominator-free inputs).
fn z_gcd_poly(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    // subresultant-free: use rational monic Euclid, then clear denominators
    let to_q = |v: &[BigInt]| -> Vec<BigRational> {
        v.iter().map(|c| BigRational::from(c.clone())).collect()
    };
    let mut x = to_q(a);
    let mut y = to_q(b);
    let trim = |v: &mut Vec<BigRational>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        // x mod y
        let dy = y.len() - 1;
        let lead = y.last().unwrap().clone();
        while x.len() > dy {
            let c = x.last().unwrap() / &lead;
            let shift = x.len() - 1 - dy;
            for (j, yc) in y.iter().enumerate() {
                let idx = j + shift;
                let v = &x[idx] - &c * yc;
                x[idx] = v;
            }
            trim(&mut x);
            if x.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    let den = x
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    z_primitive(
        &x.iter()
            .map(|c| c.numer() * &den / c.denom())
            .collect::<Vec<_>>(),
    )
}

fn z_divide_exact(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    if g.is_empty() {
        return None;
    }
    let mut r: Vec<BigRational> = f.iter().map(|c| BigRational::from(c.clone())).collect();
    let dg = g.len() - 1;
    let lead = BigRational::from(g.last().unwrap().clone());
    let mut q = vec![BigRational::zero(); f.len().saturating_sub(dg)];
    let trim = |v: &mut Vec<BigRational>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    trim(&mut r);
    while r.len() > dg {
        let c = r.last().unwrap() / &lead;
        let shift = r.len() - 1 - dg;
        q[shift] = c.clone();
        for (j, gc) in g.iter().enumerate() {
            let idx = j + shift;
            let v = &r[idx] - &c * BigRational::from(gc.clone());
            r[idx] = v;
        }
        trim(&mut r);
    }
    if !r.is_empty() {
        return None;
    }
    if q.iter().any(|c| !c.denom().is_one()) {
        return None;
    }
    Some(q.iter().map(|c| c.numer().clone()).collect())
}

/// Zassenhaus-style: factor a primitive squarefree integer polynomial by
/// reduction modulo one prime past twice the coefficient bound, followed by
/// exhaustive subset recombination with symmetric lifts.
fn factor_z_squarefree(f: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let f = z_primitive(f);
    let n = f.len() - 1;
    if n == 0 {
        return Ok(vec![]);
    }
    if n == 1 {
        return Ok(vec![positive_lead(f)]);
    }
    // coefficient bound for lc * (any monic-scaled factor)
    let maxabs = f.iter().map(|c| c.abs()).max().unwrap();
    let lc = f.last().unwrap().clone();
    let bound: BigInt = BigInt::from(n + 1) * maxabs * BigInt::from(2).pow(n as u32) * lc.abs();
    let two_bound = BigInt::from(2) * &bound;
    let start: u64 = (&two_bound)
        .try_into()
        .map_err(|_| Error::ResourceLimit("rational factor coefficient bound".into()))?;
    if start >= (1 << 61) {
        return Err(Error::ResourceLimit("good prime beyond 2^61".into()));
    }
    let mut p = if start < 3 { 3 } else { next_prime(start) };
    let (fp_coeffs, units) = loop {
        let red: Vec<u64> = f
            .iter()
            .map(|c| {
                let (_q, r) = c.div_mod_floor(&BigInt::from(p));
                u64::try_from(r).unwrap()
            })
            .collect();
        let red = norm(red);
        if red.len() == f.len() {
            let d = fp_derive(&red, p);
            if !d.is_empty() && deg(&fp_gcd(&red, &d, p)) == Some(0) {
                break (red, p);
            }
        }
        p = next_prime(p);
        if !is_prime_u64(p) || p >= (1 << 61) {
            return Err(Error::ResourceLimit("good prime search".into()));
        }
    };
    let p = units;
    let modular = factor_fp(&fp_coeffs, p)?;
    let mut pool: Vec<Vec<u64>> = Vec::new();
    for (g, m) in modular {
        debug_assert_eq!(m, 1, "squarefree input");
        pool.push(g);
    }
    let mut out = Vec::new();
    let mut rest = f.clone();
    'outer: loop {
        if rest.len() <= 1 {
            break;
        }
        if pool.len() == 1 {
            out.push(positive_lead(z_primitive(&rest)));
            break;
        }
        let lc_rest = rest.last().unwrap().clone();
        let total = pool.len();
        for size in 1..=total / 2 {
            for subset in combinations(total, size) {
                let mut prod = vec![lc_to_fp(&lc_rest, p)];
                for &i in &subset {
                    prod = fp_mul(&prod, &pool[i], p);
                }
                let lifted: Vec<BigInt> = prod.iter().map(|&c| sym_lift(c, p)).collect();
                let cand = positive_lead(z_primitive(&lifted));
                if cand.len() <= 1 {
                    continue;
                }
                if let Some(q) = z_divide_exact(&rest, &cand) {
                    out.push(cand);
                    rest = q;
                    let mut keep = Vec::new();
                    for (i, g) in pool.into_iter().enumerate() {
                        if !subset.contains(&i) {
                            keep.push(g);
                        }
                    }
                    pool = keep;
                    continue 'outer;
                }
            }
        }
        out.push(positive_lead(z_primitive(&rest)));
        break;
    }
    Ok(out)
}

fn lc_to_fp(c: &BigInt, p: u64) -> u64 {
    let (_q, r) = c.div_mod_floor(&BigInt::from(p));
    u64::try_from(r).unwrap()
}

fn sym_lift(c: u64, p: u64) -> BigInt {
    if c > p / 2 {
        BigInt::from(c) - BigInt::from(p)
    } else {
        BigInt::from(c)
    }
}

fn positive_lead(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if v.last().is_some_and(|c| c.sign() == Sign::Minus) {
        for c in &mut v {
            *c = -c.clone();
        }
    }
    v
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, ring};

    fn fac_texts(f: &Factorization) -> Vec<(String, u32)> {
        f.factors
            .iter()
            .map(|(p, m)| (p.to_text(), *m))
            .collect()
    }

    #[test]
    fn difference_of_squares_over_q() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let f = parse_poly("x^2 - 1", &r).unwrap();
        let fac = factor_univariate(&f, 0).unwrap();
        assert_eq!(
            fac_texts(&fac),
            vec![("x + 1".to_string(), 1), ("x - 1".to_string(), 1)]
        );
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn x2_plus_1_over_f5() {
        let r = ring(FieldSpec::prime_field(5).unwrap(), &["x"]);
        let f = parse_poly("x^2 + 1", &r).unwrap();
        let fac = factor_univariate(&f, 0).unwrap();
        // 2^2 = 4 = -1 mod 5, so the roots are 2 and -2 = 3
        assert_eq!(
            fac_texts(&fac),
            vec![("x + 2".to_string(), 1), ("x + 3".to_string(), 1)]
        );
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn x2_minus_t_is_irreducible_over_f5_of_t() {
        let r = ring(FieldSpec::prime_field(5).unwrap(), &["t", "x"]);
        let f = parse_poly("x^2 - t", &r).unwrap();
        let fac = factor_univariate(&f, 1).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0].1, 1);
        assert_eq!(fac.product(), f);

        // independent oracle: a root a(t)/b(t) would force a^2 = t b^2, which
        // is impossible by degree parity; check no small root exists
        let tring = ring(FieldSpec::prime_field(5).unwrap(), &["t"]);
        let polys_up_to_deg3: Vec<Polynomial> = {
            let mut v = Vec::new();
            for c0 in 0..5u64 {
                for c1 in 0..5u64 {
                    for c2 in 0..5u64 {
                        let mut p = Polynomial::zero(&tring);
                        p.add_term(&Monomial(vec![0]), &Coeff::Prime(c0));
                        p.add_term(&Monomial(vec![1]), &Coeff::Prime(c1));
                        p.add_term(&Monomial(vec![2]), &Coeff::Prime(c2));
                        v.push(p);
                    }
                }
            }
            v
        };
        let t = parse_poly("t", &tring).unwrap();
        for a in &polys_up_to_deg3 {
            for b in &polys_up_to_deg3 {
                if b.is_zero() {
                    continue;
                }
                // a^2 = t b^2 has even left degree, odd right degree
                assert_ne!(a.mul(a), t.mul(&b.mul(b)));
            }
        }
    }

    #[test]
    fn sixth_cyclotomic_split_over_q() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let f = parse_poly("x^6 - 1", &r).unwrap();
        let fac = factor_univariate(&f, 0).unwrap();
        assert_eq!(
            fac_texts(&fac),
            vec![
                ("x + 1".to_string(), 1),
                ("x - 1".to_string(), 1),
                ("x^2 + x + 1".to_string(), 1),
                ("x^2 - x + 1".to_string(), 1),
            ]
        );
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn multiplicities_are_counted() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let f = parse_poly("x^3 - x^2", &r).unwrap();
        let fac = factor_univariate(&f, 0).unwrap();
        assert_eq!(
            fac_texts(&fac),
            vec![("x".to_string(), 2), ("x - 1".to_string(), 1)]
        );

        let r2 = ring(FieldSpec::prime_field(2).unwrap(), &["a"]);
        let g = parse_poly("a^2 + 1", &r2).unwrap(); // (a+1)^2 over F_2
        let fg = factor_univariate(&g, 0).unwrap();
        assert_eq!(fac_texts(&fg), vec![("a + 1".to_string(), 2)]);
    }

    #[test]
    fn full_split_over_f5() {
        let r = ring(FieldSpec::prime_field(5).unwrap(), &["x"]);
        let f = parse_poly("x^5 - x", &r).unwrap();
        let fac = factor_univariate(&f, 0).unwrap();
        assert_eq!(fac.factors.len(), 5);
        assert!(fac.factors.iter().all(|(g, m)| g.degree() == 1 && *m == 1));
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn multivariate_irreducible_graph() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        let f = parse_poly("y - x^2", &r).unwrap();
        let fac = factor_multivariate(&f).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0].1, 1);
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn multivariate_product_splits() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        let f = parse_poly("x^2*y - y^3", &r).unwrap(); // y (x-y) (x+y)
        let fac = factor_multivariate(&f).unwrap();
        assert_eq!(
            fac_texts(&fac),
            vec![
                ("x + y".to_string(), 1),
                ("x - y".to_string(), 1),
                ("y".to_string(), 1),
            ]
        );
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn zero_input_rejected() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let z = Polynomial::zero(&r);
        assert!(matches!(factor_univariate(&z, 0), Err(Error::ZeroInput)));
    }

    #[test]
    fn deterministic_across_runs() {
        let r = ring(FieldSpec::prime_field(97).unwrap(), &["x"]);
        let f = parse_poly("x^6 + 3*x^4 + x + 5", &r).unwrap();
        let a = factor_univariate(&f, 0).unwrap();
        let b = factor_univariate(&f, 0).unwrap();
        assert_eq!(fac_texts(&a), fac_texts(&b));
        assert_eq!(a.product(), f);
    }
}
