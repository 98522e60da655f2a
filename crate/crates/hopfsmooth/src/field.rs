//! Coefficient domains: the rationals, prime fields F_p, and the integers.
//!
//! The integers are only admitted as an input coefficient ring destined for
//! base change into Q or F_p; they are rejected wherever inverses are needed.
//! Rationals are kept in lowest terms with positive denominator (enforced by
//! `BigRational`), prime-field elements as canonical representatives 0..p-1.

use crate::error::{Error, Result};
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Largest supported prime modulus: p < 2^61.
pub const MAX_PRIME: u64 = 1 << 61;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
    Integers,
}

impl FieldSpec {
    /// Construct F_p, primality-testing p on construction.
    pub fn prime_field(p: u64) -> Result<FieldSpec> {
        if p >= MAX_PRIME {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, FieldSpec::Integers)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn require_field(&self) -> Result<()> {
        if self.is_field() {
            Ok(())
        } else {
            Err(Error::NotAField(self.to_string()))
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rational(BigRational::zero()),
            FieldSpec::PrimeField(_) => Coeff::Prime(0),
            FieldSpec::Integers => Coeff::Integer(BigInt::zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rational(BigRational::one()),
            FieldSpec::PrimeField(_) => Coeff::Prime(1),
            FieldSpec::Integers => Coeff::Integer(BigInt::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rational(BigRational::from(BigInt::from(v))),
            FieldSpec::PrimeField(p) => Coeff::Prime(mod_i64(v, *p)),
            FieldSpec::Integers => Coeff::Integer(BigInt::from(v)),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rational(BigRational::from(v.clone())),
            FieldSpec::PrimeField(p) => Coeff::Prime(mod_bigint(v, *p)),
            FieldSpec::Integers => Coeff::Integer(v.clone()),
        }
    }

    fn check(&self, c: &Coeff) -> bool {
        matches!(
            (self, c),
            (FieldSpec::Rationals, Coeff::Rational(_))
                | (FieldSpec::PrimeField(_), Coeff::Prime(_))
                | (FieldSpec::Integers, Coeff::Integer(_))
        )
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        debug_assert!(self.check(a) && self.check(b));
        match (self, a, b) {
            (_, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (FieldSpec::PrimeField(p), Coeff::Prime(x), Coeff::Prime(y)) => {
                Coeff::Prime(add_mod(*x, *y, *p))
            }
            (_, Coeff::Integer(x), Coeff::Integer(y)) => Coeff::Integer(x + y),
            _ => unreachable!("mixed coefficient kinds"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (_, Coeff::Rational(x)) => Coeff::Rational(-x),
            (FieldSpec::PrimeField(p), Coeff::Prime(x)) => {
                Coeff::Prime(if *x == 0 { 0 } else { p - x })
            }
            (_, Coeff::Integer(x)) => Coeff::Integer(-x),
            _ => unreachable!("mixed coefficient kinds"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        debug_assert!(self.check(a) && self.check(b));
        match (self, a, b) {
            (_, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (FieldSpec::PrimeField(p), Coeff::Prime(x), Coeff::Prime(y)) => {
                Coeff::Prime(mul_mod(*x, *y, *p))
            }
            (_, Coeff::Integer(x), Coeff::Integer(y)) => Coeff::Integer(x * y),
            _ => unreachable!("mixed coefficient kinds"),
        }
    }

    /// Multiplicative inverse; F_p inverses by extended Euclid.
    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, a) {
            (FieldSpec::Rationals, Coeff::Rational(x)) => Coeff::Rational(x.recip()).pipe_ok(),
            (FieldSpec::PrimeField(p), Coeff::Prime(x)) => {
                Ok(Coeff::Prime(inv_mod(*x, *p).expect("nonzero mod prime")))
            }
            (FieldSpec::Integers, _) => Err(Error::NotAField(self.to_string())),
            _ => unreachable!("mixed coefficient kinds"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Coeff, mut e: u64) -> Coeff {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Coefficient-wise reduction used by base change. Rationals with a
    /// denominator divisible by p are rejected.
    pub fn reduce_mod(&self, c: &Coeff, p: u64) -> Result<Coeff> {
        match c {
            Coeff::Integer(v) => Ok(Coeff::Prime(mod_bigint(v, p))),
            Coeff::Rational(q) => {
                let den = mod_bigint(q.denom(), p);
                if den == 0 {
                    return Err(Error::BadReductionDenominator(p));
                }
                let num = mod_bigint(q.numer(), p);
                Ok(Coeff::Prime(mul_mod(num, inv_mod(den, p).unwrap(), p)))
            }
            Coeff::Prime(_) => Err(Error::FieldMismatch(
                "F_p".into(),
                "Z or Q (base-change source)".into(),
            )),
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{}", p),
            FieldSpec::Integers => write!(f, "Z"),
        }
    }
}

/// Parse "Q", "Z" or "Fp:p".
pub fn parse_field(s: &str) -> Result<FieldSpec> {
    match s.trim() {
        "Q" => Ok(FieldSpec::Rationals),
        "Z" => Ok(FieldSpec::Integers),
        t if t.starts_with("Fp:") => {
            let p: u64 = t[3..]
                .parse()
                .map_err(|_| Error::BadInputFile(format!("bad field `{}`", s)))?;
            FieldSpec::prime_field(p)
        }
        _ => Err(Error::BadInputFile(format!("bad field `{}`", s))),
    }
}

/// An exact scalar. Arithmetic goes through [`FieldSpec`], which knows the
/// modulus for prime-field values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Prime(u64),
    Integer(BigInt),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(x) => x.is_zero(),
            Coeff::Prime(x) => *x == 0,
            Coeff::Integer(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(x) => x.is_one(),
            Coeff::Prime(x) => *x == 1,
            Coeff::Integer(x) => x.is_one(),
        }
    }

    /// Canonical text form: integers as-is, rationals as a/b.
    pub fn to_literal(&self) -> String {
        match self {
            Coeff::Rational(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Prime(x) => x.to_string(),
            Coeff::Integer(x) => x.to_string(),
        }
    }

    /// True when the canonical literal needs a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(x) => x.is_negative(),
            Coeff::Prime(_) => false,
            Coeff::Integer(x) => x.sign() == Sign::Minus,
        }
    }

    /// Absolute value, for printing `a - b` style.
    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Rational(x) => Coeff::Rational(x.abs()),
            Coeff::Prime(x) => Coeff::Prime(*x),
            Coeff::Integer(x) => Coeff::Integer(x.abs()),
        }
    }
}

trait PipeOk: Sized {
    fn pipe_ok(self) -> Result<Self> {
        Ok(self)
    }
}
impl PipeOk for Coeff {}

fn mod_i64(v: i64, p: u64) -> u64 {
    let m = v.rem_euclid(p as i64);
    m as u64
}

fn mod_bigint(v: &BigInt, p: u64) -> u64 {
    
    v.mod_floor_u64(p)
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}
impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let (_q, r) = self.div_mod_floor(&BigInt::from(p));
        r.try_into().expect("residue fits u64")
    }
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = (a as u128 + b as u128) % p as u128;
    s as u64
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Extended-Euclid inverse mod p; None for 0.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    Some(s0.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller-Rabin, exact for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than n.
pub fn next_prime(mut n: u64) -> u64 {
    loop {
        n += 1;
        if is_prime_u64(n) {
            return n;
        }
    }
}
