//! Centraliser subgroup schemes: fix points of an affine chart under a
//! polynomial action, pass to the closure and its identity component, and
//! reassemble a Hopf quadruple to decide smoothness.

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::groebner::eliminate;
use crate::hopf::{is_smooth, HopfQuadruple, SmoothnessReport};
use crate::idealops::Ideal;
use crate::poly::{parse_poly, ring_owned, Polynomial, Ring};
use crate::primdec::primdec;

/// Polynomial action data on one affine chart, with an optional principal
/// open locus D(f).
#[derive(Debug, Clone)]
pub struct ActionSpec {
    pub group: HopfQuadruple,
    /// Chart coordinate ring k[t_1..t_r].
    pub chart: Ring,
    /// Relations cutting the chart out of affine space (in the chart ring).
    pub chart_relations: Vec<Polynomial>,
    /// Combined ring k[x_1..x_n, t_1..t_r(, u)]; u is present iff localized.
    pub combined: Ring,
    /// Images of the chart coordinates, one per t_l, in the combined ring.
    pub action: Vec<Polynomial>,
    /// Denominator of the principal open, in the combined ring.
    pub localizer: Option<Polynomial>,
}

impl ActionSpec {
    /// Assemble an action from polynomial texts. The combined ring consists
    /// of the group variables, then the chart variables, then a fresh
    /// inverse variable when a localizer is declared.
    pub fn new(
        group: HopfQuadruple,
        chart_vars: &[&str],
        chart_relations: &[&str],
        action: &[&str],
        localizer: Option<&str>,
    ) -> Result<ActionSpec> {
        let field = group.ring().field.clone();
        let chart = ring_owned(
            field.clone(),
            chart_vars.iter().map(|s| s.to_string()).collect(),
        );
        let mut combined_vars = group.ring().vars.clone();
        for v in chart_vars {
            if combined_vars.iter().any(|w| w == v) {
                return Err(Error::BadInputFile(format!(
                    "chart variable `{}` clashes with a group variable",
                    v
                )));
            }
            combined_vars.push(v.to_string());
        }
        if localizer.is_some() {
            let probe = ring_owned(field.clone(), combined_vars.clone());
            combined_vars.push(probe.fresh_var("u"));
        }
        let combined = ring_owned(field, combined_vars);
        let chart_relations = chart_relations
            .iter()
            .map(|t| parse_poly(t, &chart))
            .collect::<Result<Vec<_>>>()?;
        if action.len() != chart.nvars() {
            return Err(Error::BadInputFile(
                "one action polynomial per chart variable is required".into(),
            ));
        }
        let action = action
            .iter()
            .map(|t| parse_poly(t, &combined))
            .collect::<Result<Vec<_>>>()?;
        let localizer = localizer
            .map(|t| parse_poly(t, &combined))
            .transpose()?;
        Ok(ActionSpec {
            group,
            chart,
            chart_relations,
            combined,
            action,
            localizer,
        })
    }

    fn nx(&self) -> usize {
        self.group.ring().nvars()
    }

    /// Max monomial rank of any action image in the group variables, all
    /// other generators treated as constants. Recomputed, never trusted.
    pub fn bound(&self) -> Result<u64> {
        let nx = self.nx();
        let mut d = 1u64;
        for f in &self.action {
            for (m, _) in f.terms() {
                let xpart = crate::monomial::Monomial(m.0[..nx].to_vec());
                d = d.max(crate::monomial::monomial_rank(&xpart)?);
            }
        }
        Ok(d)
    }

    /// Check that the action images respect the chart relations modulo the
    /// combined ideal (group relations, chart relations, localizer).
    pub fn respects_chart(&self) -> Result<bool> {
        if self.chart_relations.is_empty() {
            return Ok(true);
        }
        let nx = self.nx();
        let mut gens: Vec<Polynomial> = Vec::new();
        let xmap: Vec<usize> = (0..nx).collect();
        for g in self.group.relations() {
            gens.push(g.embed(&self.combined, &xmap));
        }
        let tmap: Vec<usize> = (0..self.chart.nvars()).map(|i| nx + i).collect();
        for h in &self.chart_relations {
            gens.push(h.embed(&self.combined, &tmap));
        }
        if let Some(f) = &self.localizer {
            let u = Polynomial::var(&self.combined, self.combined.nvars() - 1);
            gens.push(u.mul(f).sub(&Polynomial::one(&self.combined)));
        }
        let ideal = Ideal::new(self.combined.clone(), gens);
        for h in &self.chart_relations {
            let image = h.substitute(&self.combined, &self.action);
            if !ideal.member(&image)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Validate a point of the chart: correct arity, satisfies the chart
    /// relations exactly.
    pub fn check_point(&self, point: &[Coeff]) -> Result<()> {
        if point.len() != self.chart.nvars() {
            return Err(Error::PointOffChart);
        }
        for h in &self.chart_relations {
            if !h.eval(point).is_zero() {
                return Err(Error::PointOffChart);
            }
        }
        Ok(())
    }
}

/// Labelled points of the chart.
#[derive(Debug, Clone)]
pub struct PointList {
    pub points: Vec<Vec<Coeff>>,
    pub labels: Vec<String>,
}

impl PointList {
    pub fn new(points: Vec<Vec<Coeff>>) -> PointList {
        let labels = (0..points.len()).map(|i| format!("v{}", i)).collect();
        PointList { points, labels }
    }
}

/// The fixed-point ideal of one point, in the group variables plus the
/// localizer inverse when present.
pub struct FixedPointIdeal {
    pub ideal: Ideal,
    /// Index of the localizer inverse variable in the output ring, if any.
    pub localizer_var: Option<usize>,
}

/// Generators: the group relations, the conditions action(t_l)(v) = t_l(v),
/// and u f(v) - 1 when a localizer is present (omitted otherwise).
pub fn centraliser_ideal(spec: &ActionSpec, point: &[Coeff]) -> Result<FixedPointIdeal> {
    spec.check_point(point)?;
    let nx = spec.nx();
    let field = spec.group.ring().field.clone();
    let has_u = spec.localizer.is_some();
    let mut out_vars = spec.group.ring().vars.clone();
    if has_u {
        out_vars.push(spec.combined.vars.last().unwrap().clone());
    }
    let out_ring = ring_owned(field.clone(), out_vars);

    // substitution images: group variables stay, chart variables evaluate at
    // the point, the localizer inverse stays
    let images: Vec<Polynomial> = (0..spec.combined.nvars())
        .map(|i| {
            if i < nx {
                Polynomial::var(&out_ring, i)
            } else if i < nx + spec.chart.nvars() {
                Polynomial::constant(&out_ring, point[i - nx].clone())
            } else {
                Polynomial::var(&out_ring, nx)
            }
        })
        .collect();

    let mut gens: Vec<Polynomial> = Vec::new();
    let xmap: Vec<usize> = (0..nx).collect();
    for g in spec.group.relations() {
        gens.push(g.embed(&out_ring, &xmap));
    }
    for (l, alpha) in spec.action.iter().enumerate() {
        let evaluated = alpha.substitute(&out_ring, &images);
        let target = Polynomial::constant(&out_ring, point[l].clone());
        gens.push(evaluated.sub(&target));
    }
    let mut localizer_var = None;
    if let Some(f) = &spec.localizer {
        let fbar = f.substitute(&out_ring, &images);
        // the identity must lie on the principal open over this point
        let mut eps = spec.group.counit().to_vec();
        eps.push(field.zero()); // value of u is irrelevant below
        let mut fbar_at_eps = fbar.clone();
        // evaluate only the group variables at the counit
        let eval_images: Vec<Polynomial> = (0..out_ring.nvars())
            .map(|i| {
                if i < nx {
                    Polynomial::constant(&out_ring, spec.group.counit()[i].clone())
                } else {
                    Polynomial::var(&out_ring, i)
                }
            })
            .collect();
        fbar_at_eps = fbar_at_eps.substitute(&out_ring, &eval_images);
        if fbar_at_eps.is_zero() {
            return Err(Error::LocalizerVanishesAtIdentity);
        }
        let u = Polynomial::var(&out_ring, nx);
        gens.push(u.mul(&fbar).sub(&Polynomial::one(&out_ring)));
        localizer_var = Some(nx);
    }
    Ok(FixedPointIdeal {
        ideal: Ideal::new(out_ring, gens),
        localizer_var,
    })
}

/// The ideal of the closure: eliminate the localizer inverse; the identity
/// operation when no localizer was involved.
pub fn closure_ideal(fixed: &FixedPointIdeal) -> Result<Ideal> {
    let Some(u) = fixed.localizer_var else {
        return Ok(fixed.ideal.clone());
    };
    let ring = fixed.ideal.ring();
    let keep: Vec<usize> = (0..ring.nvars()).filter(|&i| i != u).collect();
    let gb = eliminate(fixed.ideal.generators(), &keep)?;
    let target = ring_owned(
        ring.field.clone(),
        keep.iter().map(|&i| ring.vars[i].clone()).collect(),
    );
    let gens: Vec<Polynomial> = gb
        .generators()
        .iter()
        .map(|g| g.embed(&target, &(0..keep.len()).collect::<Vec<_>>()))
        .collect();
    Ok(Ideal::new(target, gens))
}

/// Among the isolated primary components of J, the unique one whose
/// generators vanish at the counit point.
pub fn identity_component(j: &Ideal, counit: &[Coeff]) -> Result<Ideal> {
    for g in j.generators() {
        if !g.eval(counit).is_zero() {
            return Err(Error::IdentityNotOnScheme);
        }
    }
    let components = primdec(j)?;
    let mut through: Vec<&crate::primdec::PrimaryComponent> = Vec::new();
    for c in components.iter().filter(|c| c.isolated) {
        let vanishes = c
            .ideal
            .generators()
            .iter()
            .all(|g| g.eval(counit).is_zero());
        if vanishes {
            through.push(c);
        }
    }
    match through.len() {
        0 => Err(Error::IdentityNotOnScheme),
        1 => Ok(through[0].ideal.clone()),
        k => Err(Error::AmbiguousComponent(k)),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CentraliserOptions {
    /// Keep the full per-point centraliser instead of passing to its
    /// identity component.
    pub skip_identity_component: bool,
}

#[derive(Debug)]
pub struct CentraliserOutcome {
    pub quadruple: HopfQuadruple,
    pub report: SmoothnessReport,
    /// Max monomial rank realized by the output relations.
    pub realized_bound: u64,
}

/// Run the whole pipeline: per point, fixed-point ideal, closure, identity
/// component; sum the per-point ideals, take the reduced basis, reuse the
/// ambient structure maps, verify the Hopf axioms, and report smoothness.
pub fn centraliser_quadruple(
    spec: &ActionSpec,
    points: &PointList,
    options: CentraliserOptions,
) -> Result<CentraliserOutcome> {
    if points.points.is_empty() {
        return Err(Error::BadInputFile("empty point list".into()));
    }
    let group_ring = spec.group.ring().clone();
    let mut sum_gens: Vec<Polynomial> = Vec::new();
    for point in &points.points {
        let fixed = centraliser_ideal(spec, point)?;
        let closed = closure_ideal(&fixed)?;
        // move into the group ring handle (same variables by construction)
        let gens: Vec<Polynomial> = closed
            .generators()
            .iter()
            .map(|g| g.embed(&group_ring, &(0..group_ring.nvars()).collect::<Vec<_>>()))
            .collect();
        let in_group_ring = Ideal::new(group_ring.clone(), gens);
        let component = if options.skip_identity_component {
            in_group_ring
        } else {
            identity_component(&in_group_ring, spec.group.counit())?
        };
        sum_gens.extend(component.generators().iter().cloned());
    }
    let summed = Ideal::new(group_ring.clone(), sum_gens);
    let basis = summed.groebner()?;
    let relations: Vec<Polynomial> = basis
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    let quadruple = spec.group.with_relations(relations);
    let check = quadruple.check()?;
    if let Some(axiom) = check.failures.first() {
        return Err(Error::InvalidQuadruple(axiom.to_string()));
    }
    let report = is_smooth(&quadruple)?;
    let mut realized = 1u64;
    for g in quadruple.relations() {
        realized = realized.max(g.max_rank()?);
    }
    Ok(CentraliserOutcome {
        quadruple,
        report,
        realized_bound: realized,
    })
}

// ---- built-in example actions ----

/// GL2 acting on the affine plane by matrix multiplication.
pub fn gl2_natural_action(field: FieldSpec) -> Result<ActionSpec> {
    let group = crate::hopf::catalog::gl2(field);
    ActionSpec::new(
        group,
        &["t1", "t2"],
        &[],
        &["a*t1 + b*t2", "c*t1 + d*t2"],
        None,
    )
}

/// GL2 acting on the affine plane through the p-th power of each matrix
/// entry. In characteristic p every differential of the fixed-point
/// conditions vanishes, which is what makes the centralisers non-smooth.
pub fn gl2_frobenius_twist_action(p: u64) -> Result<ActionSpec> {
    let field = FieldSpec::prime_field(p)?;
    let group = crate::hopf::catalog::gl2(field);
    ActionSpec::new(
        group,
        &["t1", "t2"],
        &[],
        &[
            &format!("a^{p}*t1 + b^{p}*t2"),
            &format!("c^{p}*t1 + d^{p}*t2"),
        ],
        None,
    )
}

/// The do-nothing action of any group on the affine line; the centraliser
/// of any point is the group itself.
pub fn trivial_action(group: HopfQuadruple) -> Result<ActionSpec> {
    ActionSpec::new(group, &["t1"], &[], &["t1"], None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::hopf::catalog;
    use crate::poly::ring;

    fn q(v: i64) -> Coeff {
        FieldSpec::Rationals.from_i64(v)
    }

    #[test]
    fn natural_action_fixed_point_conditions() {
        let spec = gl2_natural_action(FieldSpec::Rationals).unwrap();
        assert!(spec.respects_chart().unwrap());
        let fixed = centraliser_ideal(&spec, &[q(1), q(0)]).unwrap();
        let r = fixed.ideal.ring().clone();
        let texts: Vec<String> = fixed
            .ideal
            .generators()
            .iter()
            .map(|g| g.to_text())
            .collect();
        assert!(texts.contains(&"a - 1".to_string()));
        assert!(texts.contains(&"c".to_string()));
        assert_eq!(r.vars, vec!["a", "b", "c", "d", "u"]);
        assert!(fixed.localizer_var.is_none());
    }

    #[test]
    fn trivial_action_returns_group_ideal() {
        let spec = trivial_action(catalog::sl2(FieldSpec::Rationals)).unwrap();
        let fixed = centraliser_ideal(&spec, &[q(3)]).unwrap();
        // fixed-point conditions are identically zero
        let nonzero: Vec<&Polynomial> = fixed
            .ideal
            .generators()
            .iter()
            .filter(|g| !g.is_zero())
            .collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].to_text(), "a*d - b*c - 1");
    }

    #[test]
    fn frobenius_twist_squares_entries_mod_2() {
        let spec = gl2_frobenius_twist_action(2).unwrap();
        let f2 = FieldSpec::prime_field(2).unwrap();
        let fixed = centraliser_ideal(&spec, &[f2.from_i64(1), f2.from_i64(0)]).unwrap();
        let texts: Vec<String> = fixed
            .ideal
            .generators()
            .iter()
            .map(|g| g.to_text())
            .collect();
        assert!(texts.contains(&"a^2 + 1".to_string()), "{:?}", texts);
        assert!(texts.contains(&"c^2".to_string()));
    }

    #[test]
    fn closure_eliminates_the_localizer() {
        // punctured line: (x u - 1) closes up to the whole line
        let group = catalog::additive(FieldSpec::Rationals);
        let spec = ActionSpec::new(group, &["t1"], &[], &["t1"], Some("x")).unwrap();
        // the localizer x vanishes at the identity (counit 0), so the
        // pipeline reports exactly that
        assert!(matches!(
            centraliser_ideal(&spec, &[q(0)]),
            Err(Error::LocalizerVanishesAtIdentity)
        ));

        // a localizer that stays nonzero at the identity: x + 1
        let group = catalog::additive(FieldSpec::Rationals);
        let spec = ActionSpec::new(group, &["t1"], &[], &["t1"], Some("x + 1")).unwrap();
        let fixed = centraliser_ideal(&spec, &[q(0)]).unwrap();
        assert!(fixed.localizer_var.is_some());
        let closed = closure_ideal(&fixed).unwrap();
        // (u(x+1) - 1) ∩ k[x] = (0): the closure is the whole line
        assert!(closed.is_zero().unwrap());
        // membership confirms no nonzero univariate member
        assert!(!closed
            .member(&parse_poly("x", closed.ring()).unwrap())
            .unwrap());
    }

    #[test]
    fn point_validation() {
        let group = catalog::multiplicative(FieldSpec::Rationals);
        // chart with a relation: the unit hyperbola s t = 1
        let spec = ActionSpec::new(group, &["s", "t"], &["s*t - 1"], &["x*s", "y*t"], None)
            .unwrap();
        assert!(matches!(
            centraliser_ideal(&spec, &[q(2), q(3)]),
            Err(Error::PointOffChart)
        ));
        assert!(centraliser_ideal(&spec, &[q(2), FieldSpec::Rationals
            .div(&q(1), &q(2))
            .unwrap()])
        .is_ok());
    }

    #[test]
    fn identity_component_examples() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        // two points: x (x - 1), identity at 0 picks (x)
        let j = Ideal::new(
            r.clone(),
            vec![parse_poly("x^2 - x", &r).unwrap()],
        );
        let comp = identity_component(&j, &[q(0)]).unwrap();
        assert_eq!(comp.canonical_texts().unwrap(), vec!["x"]);

        // mu_6 over Q viewed additively: component through x = 1
        let j6 = Ideal::new(r.clone(), vec![parse_poly("x^6 - 1", &r).unwrap()]);
        let comp6 = identity_component(&j6, &[q(1)]).unwrap();
        assert_eq!(comp6.canonical_texts().unwrap(), vec!["x - 1"]);

        // already primary and through the identity: returned unchanged
        let prim = Ideal::new(r.clone(), vec![parse_poly("x^2", &r).unwrap()]);
        let comp2 = identity_component(&prim, &[q(0)]).unwrap();
        assert_eq!(comp2, prim);

        // identity not on the scheme
        let off = Ideal::new(r.clone(), vec![parse_poly("x - 2", &r).unwrap()]);
        assert!(matches!(
            identity_component(&off, &[q(0)]),
            Err(Error::IdentityNotOnScheme)
        ));
    }

    #[test]
    fn several_components_through_the_identity_are_ambiguous() {
        // (x y) at the origin: both isolated components pass through it
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        let j = Ideal::new(r.clone(), vec![parse_poly("x*y", &r).unwrap()]);
        assert!(matches!(
            identity_component(&j, &[q(0), q(0)]),
            Err(Error::AmbiguousComponent(2))
        ));
    }

    #[test]
    fn action_bound_is_recomputed() {
        // natural action images involve the group variables a..d linearly;
        // within degree one the enumeration ascends u < d < c < b < a, so
        // the largest rank among them is rank(a) = 6
        let spec = gl2_natural_action(FieldSpec::Rationals).unwrap();
        assert_eq!(spec.bound().unwrap(), 6);
        // squaring the entries pushes the bound into the degree-2 range
        let twist = gl2_frobenius_twist_action(2).unwrap();
        assert!(twist.bound().unwrap() > 6);
    }

    #[test]
    fn natural_centraliser_over_q_is_smooth() {
        let spec = gl2_natural_action(FieldSpec::Rationals).unwrap();
        let points = PointList::new(vec![vec![q(1), q(0)]]);
        let out = centraliser_quadruple(&spec, &points, CentraliserOptions::default()).unwrap();
        assert!(out.report.smooth);
        assert_eq!(out.report.group_dim, 2);
        assert_eq!(out.report.lie_dim, 2);
        // the group relation is contained in the centraliser ideal
        let ideal = Ideal::new(
            out.quadruple.ring().clone(),
            out.quadruple.relations().to_vec(),
        );
        for g in spec.group.relations() {
            assert!(ideal.member(g).unwrap());
        }
    }

    #[test]
    fn trivial_centraliser_is_the_group() {
        let spec = trivial_action(catalog::roots_of_unity(6, FieldSpec::Rationals)).unwrap();
        let points = PointList::new(vec![vec![q(5)]]);
        let out = centraliser_quadruple(&spec, &points, CentraliserOptions::default()).unwrap();
        // identity component of mu_6 over Q is the trivial group x = 1
        assert_eq!(out.report.group_dim, 0);
        assert!(out.report.smooth);

        // with the component step skipped, the full mu_6 comes back
        let full = centraliser_quadruple(
            &spec,
            &points,
            CentraliserOptions {
                skip_identity_component: true,
            },
        )
        .unwrap();
        let ideal = Ideal::new(
            full.quadruple.ring().clone(),
            full.quadruple.relations().to_vec(),
        );
        let r = full.quadruple.ring().clone();
        assert!(ideal.member(&parse_poly("x^6 - 1", &r).unwrap()).unwrap());
        assert!(!ideal.member(&parse_poly("x - 1", &r).unwrap()).unwrap());
    }

    use crate::poly::parse_poly;
}
