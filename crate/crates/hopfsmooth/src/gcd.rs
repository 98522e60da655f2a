//! Multivariate polynomial gcd by primitive pseudo-remainder sequences,
//! recursing one variable at a time, plus content/primitive-part splitting
//! and exact division.

use crate::error::Result;
use crate::groebner::divide;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

/// Exact quotient f/g, or None when g does not divide f.
pub fn divide_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if f.is_zero() {
        return Some(Polynomial::zero(f.ring()));
    }
    if g.is_zero() {
        return None;
    }
    let res = divide(f, std::slice::from_ref(g), &MonomialOrder::GradedLex).ok()?;
    res.remainder.is_zero().then(|| res.quotients.into_iter().next().unwrap())
}

/// Highest variable index occurring in f, if any.
fn main_variable(f: &Polynomial) -> Option<usize> {
    let mut best = None;
    for (m, _) in f.terms() {
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                best = Some(best.map_or(i, |b: usize| b.max(i)));
            }
        }
    }
    best
}

/// Coefficient of v^e in f viewed as univariate in variable v; lives in the
/// same ring with v-degree zero.
pub(crate) fn coeff_in(f: &Polynomial, v: usize, e: u32) -> Polynomial {
    let mut out = Polynomial::zero(f.ring());
    for (m, c) in f.terms() {
        if m.0[v] == e {
            let mut m2 = m.clone();
            m2.0[v] = 0;
            out.add_term(&m2, c);
        }
    }
    out
}

/// Content of f with respect to variable v: gcd of its v-coefficients.
fn content_in(f: &Polynomial, v: usize) -> Result<Polynomial> {
    let mut acc = Polynomial::zero(f.ring());
    for e in 0..=f.degree_in(v) {
        let c = coeff_in(f, v, e);
        if !c.is_zero() {
            acc = poly_gcd(&acc, &c)?;
        }
    }
    Ok(acc)
}

/// Pseudo-remainder of a by b with respect to variable v.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v);
    let lcb = coeff_in(b, v, db);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lcr = coeff_in(&r, v, dr);
        // lcb * r - lcr * v^(dr-db) * b
        let shift = Polynomial::var(r.ring(), v).pow(dr - db);
        r = r.mul(&lcb).sub(&lcr.mul(&shift).mul(b));
        if !r.is_zero() && r.degree_in(v) == dr {
            // the leading v-coefficient must have cancelled
            debug_assert!(coeff_in(&r, v, dr).is_zero());
        }
    }
    r
}

/// Normalize so the graded-lex leading coefficient is 1.
fn normalize(f: &Polynomial) -> Polynomial {
    f.monic(&MonomialOrder::GradedLex).expect("field coefficients")
}

/// Multivariate gcd over a coefficient field, normalized monic under graded
/// lex. gcd(0, g) = normalize(g).
pub fn poly_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Ok(normalize(g));
    }
    if g.is_zero() {
        return Ok(normalize(f));
    }
    let v = match main_variable(f).into_iter().chain(main_variable(g)).max() {
        None => return Ok(Polynomial::one(f.ring())), // both constants
        Some(v) => v,
    };
    if f.degree_in(v) == 0 || g.degree_in(v) == 0 {
        // one side is free of the main variable: gcd divides its content
        let (free, other) = if f.degree_in(v) == 0 { (f, g) } else { (g, f) };
        let cont = content_in(other, v)?;
        return poly_gcd(free, &cont);
    }
    let cf = content_in(f, v)?;
    let cg = content_in(g, v)?;
    let content_gcd = poly_gcd(&cf, &cg)?;
    let mut a = divide_exact(f, &cf).expect("content divides");
    let mut b = divide_exact(g, &cg).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            break;
        }
        let cr = content_in(&r, v)?;
        a = b;
        b = divide_exact(&r, &cr).expect("content divides");
    }
    // b is the primitive gcd in v
    let prim = divide_exact(&b, &content_in(&b, v)?).expect("content divides");
    Ok(normalize(&prim.mul(&content_gcd)))
}

/// Least common multiple, monic.
pub fn poly_lcm(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(f.ring()));
    }
    let d = poly_gcd(f, g)?;
    let q = divide_exact(f, &d).expect("gcd divides");
    Ok(normalize(&q.mul(g)))
}

/// Squarefree part f / gcd(f, df/dv) with respect to one variable.
pub fn squarefree_part_in(f: &Polynomial, v: usize) -> Result<Polynomial> {
    let d = f.derivative(v);
    if d.is_zero() {
        return Ok(normalize(f));
    }
    let g = poly_gcd(f, &d)?;
    Ok(normalize(&divide_exact(f, &g).expect("gcd divides")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::{parse_poly, ring, Ring};

    fn r2() -> Ring {
        ring(FieldSpec::Rationals, &["x", "y"])
    }

    fn p(t: &str, r: &Ring) -> Polynomial {
        parse_poly(t, r).unwrap()
    }

    #[test]
    fn univariate_gcd() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let g = poly_gcd(&p("x^2 - 1", &r), &p("x^2 - 2*x + 1", &r)).unwrap();
        assert_eq!(g, p("x - 1", &r));
    }

    #[test]
    fn multivariate_gcd() {
        let r = r2();
        let f = p("x + y", &r).mul(&p("x + y", &r)).mul(&p("x", &r));
        let g = p("x + y", &r).mul(&p("y", &r));
        assert_eq!(poly_gcd(&f, &g).unwrap(), p("x + y", &r));
    }

    #[test]
    fn gcd_over_prime_field() {
        let r = ring(FieldSpec::prime_field(5).unwrap(), &["x"]);
        // x^5 - x = x(x-1)(x-2)(x-3)(x-4) over F_5
        let g = poly_gcd(&p("x^5 - x", &r), &p("x^2 - x", &r)).unwrap();
        assert_eq!(g, p("x^2 - x", &r).monic(&MonomialOrder::GradedLex).unwrap());
    }

    #[test]
    fn coprime_gcd_is_one() {
        let r = r2();
        assert_eq!(poly_gcd(&p("x", &r), &p("y + 1", &r)).unwrap(), p("1", &r));
    }

    #[test]
    fn lcm_and_exact_division() {
        let r = r2();
        let l = poly_lcm(&p("x*y", &r), &p("x^2", &r)).unwrap();
        assert_eq!(l, p("x^2*y", &r));
        assert_eq!(
            divide_exact(&p("x^2 - y^2", &r), &p("x - y", &r)).unwrap(),
            p("x + y", &r)
        );
        assert!(divide_exact(&p("x^2 - y^2", &r), &p("x - 1", &r)).is_none());
    }

    #[test]
    fn squarefree_part() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let f = p("x^3 - x^2", &r); // x^2 (x - 1)
        assert_eq!(squarefree_part_in(&f, 0).unwrap(), p("x^2 - x", &r));
    }
}
