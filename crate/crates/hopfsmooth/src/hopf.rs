//! Hopf quadruples presenting affine group schemes: tensor-power
//! presentations, factor-through checks, the Hopf axioms, Lie-algebra
//! dimension via the Jacobian at the counit point, group dimension, and the
//! smoothness verdict dim G = dim Lie(G).

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::groebner::{buchberger, dimension, member, GroebnerBasis};
use crate::linalg::Matrix;
use crate::monomial::{monomial_rank, Monomial, MonomialOrder};
use crate::poly::{base_change, rationalize, ring_owned, same_ring, Polynomial, Ring};
use std::sync::OnceLock;

/// (relations, comultiplication, antipode, counit) presenting the coordinate
/// algebra k[x_1..x_n]/(relations) of an affine group scheme. The three
/// structure maps are algebra maps determined by their values on the
/// variables.
#[derive(Debug, Clone)]
pub struct HopfQuadruple {
    ring: Ring,
    relations: Vec<Polynomial>,
    comul: Vec<Polynomial>,
    antipode: Vec<Polynomial>,
    counit: Vec<Coeff>,
    check: OnceLock<HopfCheck>,
}

impl PartialEq for HopfQuadruple {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring)
            && self.relations == other.relations
            && self.comul == other.comul
            && self.antipode == other.antipode
            && self.counit == other.counit
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfAxiom {
    ComulFactors,
    AntipodeFactors,
    CounitFactors,
    Coassociativity,
    CounitLaw,
    AntipodeLaw,
}

impl std::fmt::Display for HopfAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            HopfAxiom::ComulFactors => "comultiplication does not preserve the ideal",
            HopfAxiom::AntipodeFactors => "antipode does not preserve the ideal",
            HopfAxiom::CounitFactors => "counit does not vanish on the ideal",
            HopfAxiom::Coassociativity => "coassociativity fails",
            HopfAxiom::CounitLaw => "counit law fails",
            HopfAxiom::AntipodeLaw => "antipode law fails",
        };
        f.write_str(s)
    }
}

/// Outcome of the axiom checker; an empty failure list means a valid Hopf
/// quadruple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfCheck {
    pub failures: Vec<HopfAxiom>,
}

impl HopfCheck {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Both dimensions and the verdict dim G = dim Lie(G).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SmoothnessReport {
    pub smooth: bool,
    pub group_dim: i64,
    pub lie_dim: i64,
    pub characteristic: u64,
}

// ---- tensor rings ----

/// The r-fold tensor power of the coordinate ring: slot j of r carries the
/// original variable names with j apostrophes appended (x', x'' for r = 2);
/// r = 1 is the ring itself.
pub fn tensor_ring(ring: &Ring, r: usize) -> Ring {
    if r <= 1 {
        return ring.clone();
    }
    let mut vars = Vec::with_capacity(ring.nvars() * r);
    for slot in 1..=r {
        for v in &ring.vars {
            let mut name = v.clone();
            for _ in 0..slot {
                name.push('\'');
            }
            vars.push(name);
        }
    }
    ring_owned(ring.field.clone(), vars)
}

/// Embed f into slot `slot` (1-based) of the r-fold tensor ring.
pub fn embed_slot(f: &Polynomial, target: &Ring, slot: usize, r: usize) -> Polynomial {
    let n = f.ring().nvars();
    if r <= 1 {
        debug_assert_eq!(slot, 1);
        return f.clone();
    }
    let map: Vec<usize> = (0..n).map(|i| (slot - 1) * n + i).collect();
    f.embed(target, &map)
}

/// Relations of the r-fold tensor power: every relation substituted into
/// every slot.
pub fn tensor_presentation(relations: &[Polynomial], r: usize) -> Vec<Polynomial> {
    let Some(first) = relations.first() else {
        return Vec::new();
    };
    let target = tensor_ring(first.ring(), r);
    let mut out = Vec::new();
    for slot in 1..=r {
        for f in relations {
            out.push(embed_slot(f, &target, slot, r));
        }
    }
    out
}

/// Tensor power of a verified basis: slot-wise disjoint leading monomials
/// keep Buchberger's criterion satisfied, so the result is again Groebner.
pub fn tensored_basis(basis: &GroebnerBasis, r: usize) -> GroebnerBasis {
    let gens = tensor_presentation(
        &basis
            .generators()
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect::<Vec<_>>(),
        r,
    );
    GroebnerBasis::trusted(gens, MonomialOrder::GradedLex, false)
}

/// An algebra map out of the coordinate ring, given by variable images.
pub enum AlgebraMap<'a> {
    /// Values in the base field (the counit, r = 0).
    Counit(&'a [Coeff]),
    /// Values in the r-fold tensor power (r >= 1).
    Tensor { power: usize, images: &'a [Polynomial] },
}

/// Does the map kill the ideal, i.e. factor through the quotient algebra?
/// Tested as membership of the image of every relation in the tensored
/// relation ideal; for the counit this degenerates to evaluation at a point.
pub fn factors_through(map: &AlgebraMap, relations: &[Polynomial]) -> Result<bool> {
    let nonzero: Vec<Polynomial> = relations.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(true);
    }
    match map {
        AlgebraMap::Counit(point) => {
            for f in &nonzero {
                if !f.eval(point).is_zero() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        AlgebraMap::Tensor { power, images } => {
            let gb = buchberger(&nonzero, &MonomialOrder::GradedLex)?;
            let jr = tensored_basis(&gb, *power);
            let target = tensor_ring(nonzero[0].ring(), *power);
            for f in &nonzero {
                let image = f.substitute(&target, images);
                if !member(&image, &jr)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

impl HopfQuadruple {
    pub fn new(
        ring: Ring,
        relations: Vec<Polynomial>,
        comul: Vec<Polynomial>,
        antipode: Vec<Polynomial>,
        counit: Vec<Coeff>,
    ) -> Result<HopfQuadruple> {
        let n = ring.nvars();
        if comul.len() != n || antipode.len() != n || counit.len() != n {
            return Err(Error::BadInputFile(
                "structure maps must assign every variable".into(),
            ));
        }
        Ok(HopfQuadruple {
            ring,
            relations,
            comul,
            antipode,
            counit,
            check: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn comul(&self) -> &[Polynomial] {
        &self.comul
    }

    pub fn antipode(&self) -> &[Polynomial] {
        &self.antipode
    }

    pub fn counit(&self) -> &[Coeff] {
        &self.counit
    }

    pub fn field(&self) -> &FieldSpec {
        &self.ring.field
    }

    /// Replace the relation list, keeping the ambient structure maps (used
    /// for subgroup schemes cut out inside the same coordinates).
    pub fn with_relations(&self, relations: Vec<Polynomial>) -> HopfQuadruple {
        HopfQuadruple {
            ring: self.ring.clone(),
            relations,
            comul: self.comul.clone(),
            antipode: self.antipode.clone(),
            counit: self.counit.clone(),
            check: OnceLock::new(),
        }
    }

    /// Least d such that the relations and all structure-map images are
    /// expressible within the first d monomials (per tensor slot).
    pub fn bound(&self) -> Result<u64> {
        let n = self.ring.nvars();
        let mut d = 1u64;
        for f in &self.relations {
            d = d.max(f.max_rank()?);
        }
        for f in &self.antipode {
            d = d.max(f.max_rank()?);
        }
        for image in &self.comul {
            for (m, _) in image.terms() {
                for slot in 0..2 {
                    let part = Monomial(m.0[slot * n..(slot + 1) * n].to_vec());
                    d = d.max(monomial_rank(&part)?);
                }
            }
        }
        Ok(d)
    }

    /// Run every axiom check, caching the outcome.
    pub fn check(&self) -> Result<&HopfCheck> {
        if let Some(c) = self.check.get() {
            return Ok(c);
        }
        let computed = self.run_checks()?;
        let _ = self.check.set(computed);
        Ok(self.check.get().unwrap())
    }

    pub fn is_hopf(&self) -> Result<bool> {
        Ok(self.check()?.is_valid())
    }

    fn require_valid(&self) -> Result<()> {
        let check = self.check()?;
        if let Some(first) = check.failures.first() {
            return Err(Error::InvalidQuadruple(first.to_string()));
        }
        Ok(())
    }

    fn run_checks(&self) -> Result<HopfCheck> {
        self.ring.field.require_field()?;
        let mut failures = Vec::new();
        let n = self.ring.nvars();
        let t3 = tensor_ring(&self.ring, 3);

        if !factors_through(
            &AlgebraMap::Tensor {
                power: 2,
                images: &self.comul,
            },
            &self.relations,
        )? {
            failures.push(HopfAxiom::ComulFactors);
        }
        if !factors_through(
            &AlgebraMap::Tensor {
                power: 1,
                images: &self.antipode,
            },
            &self.relations,
        )? {
            failures.push(HopfAxiom::AntipodeFactors);
        }
        if !factors_through(&AlgebraMap::Counit(&self.counit), &self.relations)? {
            failures.push(HopfAxiom::CounitFactors);
        }

        let nonzero: Vec<Polynomial> = self
            .relations
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect();
        let gb = buchberger(&nonzero, &MonomialOrder::GradedLex)?;
        let j1 = &gb;
        let j3 = tensored_basis(&gb, 3);

        // coassociativity: (comul ⊗ id) comul = (id ⊗ comul) comul in J_3
        let left_images: Vec<Polynomial> = {
            // slot 1 variables go through comul into slots (1, 2); slot 2
            // variables move to slot 3
            let mut v = Vec::with_capacity(2 * n);
            let t2_to_t3_12: Vec<usize> = (0..2 * n).collect();
            for i in 0..n {
                v.push(self.comul[i].embed(&t3, &t2_to_t3_12));
            }
            for i in 0..n {
                v.push(Polynomial::var(&t3, 2 * n + i));
            }
            v
        };
        let right_images: Vec<Polynomial> = {
            let mut v = Vec::with_capacity(2 * n);
            let t2_to_t3_23: Vec<usize> = (n..3 * n).collect();
            for i in 0..n {
                v.push(Polynomial::var(&t3, i));
            }
            for i in 0..n {
                v.push(self.comul[i].embed(&t3, &t2_to_t3_23));
            }
            v
        };
        let mut coassoc_ok = true;
        for i in 0..n {
            let left = self.comul[i].substitute(&t3, &left_images);
            let right = self.comul[i].substitute(&t3, &right_images);
            if !member(&left.sub(&right), &j3)? {
                coassoc_ok = false;
                break;
            }
        }
        if !coassoc_ok {
            failures.push(HopfAxiom::Coassociativity);
        }

        // counit law: evaluating either tensor leg of comul at the counit
        // point returns the variable, modulo the ideal
        let mut counit_ok = true;
        for i in 0..n {
            let xi = Polynomial::var(&self.ring, i);
            for side in 0..2 {
                let images: Vec<Polynomial> = (0..2 * n)
                    .map(|j| {
                        let (slot, var) = (j / n, j % n);
                        if slot == side {
                            Polynomial::constant(&self.ring, self.counit[var].clone())
                        } else {
                            Polynomial::var(&self.ring, var)
                        }
                    })
                    .collect();
                let folded = self.comul[i].substitute(&self.ring, &images);
                if !member(&folded.sub(&xi), j1)? {
                    counit_ok = false;
                }
            }
        }
        if !counit_ok {
            failures.push(HopfAxiom::CounitLaw);
        }

        // antipode law: applying the antipode to either leg and multiplying
        // out collapses to the counit value
        let mut antipode_ok = true;
        for i in 0..n {
            let target = Polynomial::constant(&self.ring, self.counit[i].clone());
            for side in 0..2 {
                let images: Vec<Polynomial> = (0..2 * n)
                    .map(|j| {
                        let (slot, var) = (j / n, j % n);
                        if slot == side {
                            self.antipode[var].clone()
                        } else {
                            Polynomial::var(&self.ring, var)
                        }
                    })
                    .collect();
                let folded = self.comul[i].substitute(&self.ring, &images);
                if !member(&folded.sub(&target), j1)? {
                    antipode_ok = false;
                }
            }
        }
        if !antipode_ok {
            failures.push(HopfAxiom::AntipodeLaw);
        }

        Ok(HopfCheck { failures })
    }
}

/// Nullity of the Jacobian of the relations at the counit point: the
/// dimension of the tangent space at the identity.
pub fn lie_dimension(h: &HopfQuadruple) -> Result<i64> {
    h.require_valid()?;
    let n = h.ring().nvars();
    let field = &h.ring().field;
    let rows: Vec<Vec<Coeff>> = h
        .relations()
        .iter()
        .map(|f| {
            (0..n)
                .map(|l| f.derivative(l).eval(h.counit()))
                .collect::<Vec<Coeff>>()
        })
        .collect();
    if rows.is_empty() {
        return Ok(n as i64);
    }
    let m = Matrix::from_rows(field, rows);
    Ok(m.nullity()? as i64)
}

/// Krull dimension of the group scheme, from a basis of the relation ideal.
pub fn group_dimension(h: &HopfQuadruple) -> Result<i64> {
    h.require_valid()?;
    let nonzero: Vec<Polynomial> = h
        .relations()
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    if nonzero.is_empty() {
        return Ok(h.ring().nvars() as i64);
    }
    let gb = buchberger(&nonzero, &MonomialOrder::GradedLex)?;
    dimension(&gb)
}

/// Smoothness verdict: a group scheme is smooth exactly when the group
/// dimension equals the Lie-algebra dimension.
pub fn is_smooth(h: &HopfQuadruple) -> Result<SmoothnessReport> {
    let group_dim = group_dimension(h)?;
    let lie_dim = lie_dimension(h)?;
    Ok(SmoothnessReport {
        smooth: group_dim == lie_dim,
        group_dim,
        lie_dim,
        characteristic: h.ring().field.characteristic(),
    })
}

/// Coefficient-wise reduction modulo p of every datum of the quadruple.
pub fn base_change_quadruple(h: &HopfQuadruple, p: u64) -> Result<HopfQuadruple> {
    let field = FieldSpec::prime_field(p)?;
    let ring = ring_owned(field.clone(), h.ring().vars.clone());
    let relations = h
        .relations()
        .iter()
        .map(|f| base_change(f, p))
        .collect::<Result<Vec<_>>>()?;
    let comul = h
        .comul()
        .iter()
        .map(|f| base_change(f, p))
        .collect::<Result<Vec<_>>>()?;
    let antipode = h
        .antipode()
        .iter()
        .map(|f| base_change(f, p))
        .collect::<Result<Vec<_>>>()?;
    let counit = h
        .counit()
        .iter()
        .map(|c| field.reduce_mod(c, p))
        .collect::<Result<Vec<_>>>()?;
    HopfQuadruple::new(ring, relations, comul, antipode, counit)
}

/// View an integer-coefficient quadruple over the rationals.
pub fn rationalize_quadruple(h: &HopfQuadruple) -> Result<HopfQuadruple> {
    let ring = ring_owned(FieldSpec::Rationals, h.ring().vars.clone());
    let conv = |c: &Coeff| -> Result<Coeff> {
        match c {
            Coeff::Integer(v) => Ok(Coeff::Rational(num_rational::BigRational::from(v.clone()))),
            Coeff::Rational(_) => Ok(c.clone()),
            Coeff::Prime(_) => Err(Error::FieldMismatch("F_p".into(), "Z or Q".into())),
        }
    };
    HopfQuadruple::new(
        ring,
        h.relations().iter().map(rationalize).collect::<Result<Vec<_>>>()?,
        h.comul().iter().map(rationalize).collect::<Result<Vec<_>>>()?,
        h.antipode().iter().map(rationalize).collect::<Result<Vec<_>>>()?,
        h.counit().iter().map(conv).collect::<Result<Vec<_>>>()?,
    )
}

/// Built-in group schemes used throughout the tests and the sweep.
pub mod catalog {
    use super::*;
    use crate::poly::parse_poly;

    fn build(
        field: FieldSpec,
        vars: &[&str],
        relations: &[&str],
        comul: &[&str],
        antipode: &[&str],
        counit: &[i64],
    ) -> HopfQuadruple {
        let ring = ring_owned(
            field.clone(),
            vars.iter().map(|s| s.to_string()).collect(),
        );
        let t2 = tensor_ring(&ring, 2);
        HopfQuadruple::new(
            ring.clone(),
            relations
                .iter()
                .map(|t| parse_poly(t, &ring).unwrap())
                .collect(),
            comul.iter().map(|t| parse_poly(t, &t2).unwrap()).collect(),
            antipode
                .iter()
                .map(|t| parse_poly(t, &ring).unwrap())
                .collect(),
            counit.iter().map(|&v| field.from_i64(v)).collect(),
        )
        .unwrap()
    }

    /// The additive group: `k[x]` with x primitive.
    pub fn additive(field: FieldSpec) -> HopfQuadruple {
        build(field, &["x"], &[], &["x' + x''"], &["-x"], &[0])
    }

    /// The multiplicative group: `k[x, y]/(xy - 1)` with x grouplike.
    pub fn multiplicative(field: FieldSpec) -> HopfQuadruple {
        build(
            field,
            &["x", "y"],
            &["x*y - 1"],
            &["x'*x''", "y'*y''"],
            &["y", "x"],
            &[1, 1],
        )
    }

    /// Roots of unity: `k[x]/(x^n - 1)` with x grouplike.
    pub fn roots_of_unity(n: u32, field: FieldSpec) -> HopfQuadruple {
        build(
            field,
            &["x"],
            &[&format!("x^{} - 1", n)],
            &["x'*x''"],
            &[&format!("x^{}", n - 1)],
            &[1],
        )
    }

    /// SL2 with the matrix coproduct.
    pub fn sl2(field: FieldSpec) -> HopfQuadruple {
        build(
            field,
            &["a", "b", "c", "d"],
            &["a*d - b*c - 1"],
            &[
                "a'*a'' + b'*c''",
                "a'*b'' + b'*d''",
                "c'*a'' + d'*c''",
                "c'*b'' + d'*d''",
            ],
            &["d", "-b", "-c", "a"],
            &[1, 0, 0, 1],
        )
    }

    /// GL2 presented with an inverted determinant variable u.
    pub fn gl2(field: FieldSpec) -> HopfQuadruple {
        build(
            field,
            &["a", "b", "c", "d", "u"],
            &["u*a*d - u*b*c - 1"],
            &[
                "a'*a'' + b'*c''",
                "a'*b'' + b'*d''",
                "c'*a'' + d'*c''",
                "c'*b'' + d'*d''",
                "u'*u''",
            ],
            &["d*u", "-b*u", "-c*u", "a*u", "a*d - b*c"],
            &[1, 0, 0, 1, 1],
        )
    }

    /// The infinitesimal kernel of Frobenius on the additive group:
    /// `k[x]/(x^p)` with x primitive. A Hopf quadruple only in characteristic
    /// p; over other fields the comultiplication fails to factor.
    pub fn frobenius_kernel(field: FieldSpec, p: u32) -> HopfQuadruple {
        build(
            field,
            &["x"],
            &[&format!("x^{}", p)],
            &["x' + x''"],
            &["-x"],
            &[0],
        )
    }

    /// The six-group catalog over a field: additive, multiplicative, fourth
    /// and sixth roots of unity, SL2, GL2.
    pub fn standard(field: FieldSpec) -> Vec<(&'static str, HopfQuadruple)> {
        vec![
            ("additive", additive(field.clone())),
            ("multiplicative", multiplicative(field.clone())),
            ("mu4", roots_of_unity(4, field.clone())),
            ("mu6", roots_of_unity(6, field.clone())),
            ("sl2", sl2(field.clone())),
            ("gl2", gl2(field)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::is_groebner;
    use crate::poly::parse_poly;

    #[test]
    fn tensor_presentation_examples() {
        let r = ring_owned(FieldSpec::Rationals, vec!["x".into()]);
        let x2 = parse_poly("x^2", &r).unwrap();
        let t = tensor_presentation(&[x2], 2);
        let t2 = tensor_ring(&r, 2);
        assert_eq!(
            t,
            vec![
                parse_poly("x'^2", &t2).unwrap(),
                parse_poly("x''^2", &t2).unwrap()
            ]
        );
        assert!(tensor_presentation(&[], 3).is_empty());
    }

    #[test]
    fn tensored_basis_still_groebner() {
        let r = ring_owned(FieldSpec::Rationals, vec!["x".into(), "y".into()]);
        let gens = [
            parse_poly("x^2 + y^2", &r).unwrap(),
            parse_poly("x*y", &r).unwrap(),
        ];
        let gb = buchberger(&gens, &MonomialOrder::GradedLex).unwrap();
        let t3 = tensored_basis(&gb, 3);
        assert!(is_groebner(t3.generators(), &MonomialOrder::GradedLex).unwrap());
    }

    #[test]
    fn factors_through_roots_of_unity() {
        // mu_2 = k[x]/(x^2 - 1): the grouplike comultiplication factors, the
        // additive one does not
        let r = ring_owned(FieldSpec::Rationals, vec!["x".into()]);
        let rel = [parse_poly("x^2 - 1", &r).unwrap()];
        let t2 = tensor_ring(&r, 2);
        let grouplike = [parse_poly("x'*x''", &t2).unwrap()];
        assert!(factors_through(
            &AlgebraMap::Tensor {
                power: 2,
                images: &grouplike
            },
            &rel
        )
        .unwrap());
        // identity witnessing membership:
        // x'^2 x''^2 - 1 = (x'^2 - 1) x''^2 + (x''^2 - 1)
        let lhs = parse_poly("x'^2*x''^2 - 1", &t2).unwrap();
        let rhs = parse_poly("x'^2 - 1", &t2)
            .unwrap()
            .mul(&parse_poly("x''^2", &t2).unwrap())
            .add(&parse_poly("x''^2 - 1", &t2).unwrap());
        assert_eq!(lhs, rhs);

        let additive = [parse_poly("x' + x''", &t2).unwrap()];
        assert!(!factors_through(
            &AlgebraMap::Tensor {
                power: 2,
                images: &additive
            },
            &rel
        )
        .unwrap());
        // the obstruction is the nonzero remainder of the substituted
        // relation modulo the doubled relation ideal:
        // x'^2 + 2 x' x'' + x''^2 - 1 reduces to 2 x' x'' + 1
        let gb = buchberger(&rel, &MonomialOrder::GradedLex).unwrap();
        let j2 = tensored_basis(&gb, 2);
        let substituted = parse_poly("x' + x''", &t2)
            .unwrap()
            .pow(2)
            .sub(&Polynomial::one(&t2));
        let rem = crate::groebner::divide(&substituted, j2.generators(), &MonomialOrder::GradedLex)
            .unwrap()
            .remainder;
        assert_eq!(rem, parse_poly("2*x'*x'' + 1", &t2).unwrap());

        // empty relations: everything factors
        assert!(factors_through(
            &AlgebraMap::Tensor {
                power: 2,
                images: &grouplike
            },
            &[]
        )
        .unwrap());
    }

    #[test]
    fn catalog_is_hopf_over_q() {
        for (name, h) in catalog::standard(FieldSpec::Rationals) {
            assert!(h.is_hopf().unwrap(), "{} failed the axiom checker", name);
        }
    }

    #[test]
    fn roots_of_unity_valid_over_many_fields() {
        for field in [
            FieldSpec::Rationals,
            FieldSpec::prime_field(2).unwrap(),
            FieldSpec::prime_field(3).unwrap(),
            FieldSpec::prime_field(7).unwrap(),
        ] {
            for n in [2u32, 3, 6] {
                let h = catalog::roots_of_unity(n, field.clone());
                assert!(h.is_hopf().unwrap(), "mu_{} over {}", n, field);
            }
        }
    }

    #[test]
    fn frobenius_kernel_needs_characteristic_p() {
        let over_q = catalog::frobenius_kernel(FieldSpec::Rationals, 2);
        let check = over_q.check().unwrap();
        assert!(!check.is_valid());
        assert!(check.failures.contains(&HopfAxiom::ComulFactors));

        let over_f2 = catalog::frobenius_kernel(FieldSpec::prime_field(2).unwrap(), 2);
        assert!(over_f2.is_hopf().unwrap());
    }

    #[test]
    fn lie_dimension_examples() {
        let ga = catalog::additive(FieldSpec::Rationals);
        assert_eq!(lie_dimension(&ga).unwrap(), 1);

        for n in [4u32, 6] {
            let mu = catalog::roots_of_unity(n, FieldSpec::Rationals);
            assert_eq!(lie_dimension(&mu).unwrap(), 0);
        }

        // 6 = 0 in characteristic 2 and 3: the Jacobian row vanishes
        for p in [2u64, 3] {
            let mu6 = catalog::roots_of_unity(6, FieldSpec::prime_field(p).unwrap());
            assert_eq!(lie_dimension(&mu6).unwrap(), 1);
        }
        let mu6f5 = catalog::roots_of_unity(6, FieldSpec::prime_field(5).unwrap());
        assert_eq!(lie_dimension(&mu6f5).unwrap(), 0);
    }

    #[test]
    fn group_dimension_examples() {
        assert_eq!(
            group_dimension(&catalog::additive(FieldSpec::Rationals)).unwrap(),
            1
        );
        assert_eq!(
            group_dimension(&catalog::sl2(FieldSpec::Rationals)).unwrap(),
            3
        );
        assert_eq!(
            group_dimension(&catalog::roots_of_unity(6, FieldSpec::Rationals)).unwrap(),
            0
        );
        assert_eq!(
            group_dimension(&catalog::gl2(FieldSpec::Rationals)).unwrap(),
            4
        );
    }

    #[test]
    fn smoothness_examples() {
        let mu6_f5 = catalog::roots_of_unity(6, FieldSpec::prime_field(5).unwrap());
        let rep = is_smooth(&mu6_f5).unwrap();
        assert!(rep.smooth);
        assert_eq!((rep.group_dim, rep.lie_dim), (0, 0));

        let mu6_f2 = catalog::roots_of_unity(6, FieldSpec::prime_field(2).unwrap());
        let rep2 = is_smooth(&mu6_f2).unwrap();
        assert!(!rep2.smooth);
        assert_eq!((rep2.group_dim, rep2.lie_dim), (0, 1));
    }

    #[test]
    fn base_change_keeps_axioms() {
        let sl2q = catalog::sl2(FieldSpec::Rationals);
        for p in [2u64, 3, 5, 7] {
            let slp = base_change_quadruple(&sl2q, p).unwrap();
            assert!(slp.is_hopf().unwrap(), "SL2 mod {}", p);
        }
        let mu6 = catalog::roots_of_unity(6, FieldSpec::Rationals);
        assert!(base_change_quadruple(&mu6, 5).unwrap().is_hopf().unwrap());
    }

    #[test]
    fn base_change_rejects_bad_denominator() {
        let r = ring_owned(FieldSpec::Rationals, vec!["x".into()]);
        let t2 = tensor_ring(&r, 2);
        let h = HopfQuadruple::new(
            r.clone(),
            vec![parse_poly("1/2*x", &r).unwrap()],
            vec![parse_poly("x' + x''", &t2).unwrap()],
            vec![parse_poly("-x", &r).unwrap()],
            vec![FieldSpec::Rationals.from_i64(0)],
        )
        .unwrap();
        assert!(matches!(
            base_change_quadruple(&h, 2),
            Err(Error::BadReductionDenominator(2))
        ));
    }

    #[test]
    fn lie_dim_never_below_group_dim_on_catalog() {
        for (name, h) in catalog::standard(FieldSpec::Rationals) {
            let rep = is_smooth(&h).unwrap();
            assert!(
                rep.lie_dim >= rep.group_dim,
                "{}: lie {} < group {}",
                name,
                rep.lie_dim,
                rep.group_dim
            );
        }
    }

    #[test]
    fn bound_is_recomputed_from_data() {
        let mu6 = catalog::roots_of_unity(6, FieldSpec::Rationals);
        // x^6 is the 7th monomial of k[x]
        assert_eq!(mu6.bound().unwrap(), 7);
        let ga = catalog::additive(FieldSpec::Rationals);
        assert_eq!(ga.bound().unwrap(), 2);
    }
}
