//! Primary decomposition in the Gianni-Trager-Zacharias style: univariate
//! factorization drives a zero-dimensional decomposition over the fraction
//! field of a parameter subring, and the general case reduces to it through
//! contraction and the splitting I = (I + (f^s)) ∩ (I : f^s).

use crate::error::{Error, Result};
use crate::factor::{factor_univariate, normalize_factor};
use crate::gcd::{coeff_in, poly_gcd, squarefree_part_in};
use crate::groebner::{buchberger, eliminate, max_independent_subset, GroebnerBasis};
use crate::idealops::{contract_with_multiplier, intersect, radical_member, Ideal};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{same_ring, Polynomial, Ring};

// ---- fraction field ----

/// The field of fractions of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionField {
    pub base: Ring,
}

/// A reduced fraction: gcd(num, den) is a unit and the denominator is monic
/// under graded lex.
#[derive(Clone, Debug, PartialEq)]
pub struct Frac {
    num: Polynomial,
    den: Polynomial,
}

impl FractionField {
    pub fn new(base: Ring) -> FractionField {
        FractionField { base }
    }

    pub fn frac(&self, num: Polynomial, den: Polynomial) -> Result<Frac> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        debug_assert!(same_ring(num.ring(), &self.base) && same_ring(den.ring(), &self.base));
        Ok(reduce_frac(num, den))
    }

    pub fn from_poly(&self, num: Polynomial) -> Frac {
        reduce_frac(num, Polynomial::one(&self.base))
    }

    pub fn add(&self, a: &Frac, b: &Frac) -> Frac {
        reduce_frac(
            a.num.mul(&b.den).add(&b.num.mul(&a.den)),
            a.den.mul(&b.den),
        )
    }

    pub fn mul(&self, a: &Frac, b: &Frac) -> Frac {
        reduce_frac(a.num.mul(&b.num), a.den.mul(&b.den))
    }

    pub fn inv(&self, a: &Frac) -> Result<Frac> {
        if a.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(reduce_frac(a.den.clone(), a.num.clone()))
    }
}

impl Frac {
    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

fn reduce_frac(num: Polynomial, den: Polynomial) -> Frac {
    if num.is_zero() {
        return Frac {
            den: Polynomial::one(num.ring()),
            num,
        };
    }
    let g = poly_gcd(&num, &den).expect("field coefficients");
    let num = crate::gcd::divide_exact(&num, &g).expect("gcd divides");
    let den = crate::gcd::divide_exact(&den, &g).expect("gcd divides");
    // normalize the denominator monic under graded lex
    let lc = den
        .leading_term(&MonomialOrder::GradedLex)
        .map(|(_, c)| c.clone())
        .expect("nonzero denominator");
    let inv = den.ring().field.inv(&lc).expect("field coefficients");
    Frac {
        num: num.scale(&inv),
        den: den.scale(&inv),
    }
}

// ---- components ----

#[derive(Clone, Debug)]
pub struct PrimaryComponent {
    pub ideal: Ideal,
    /// Generators of the maximal ideal tracked by the zero-dimensional
    /// recursion, when it produced this component.
    pub witness_maximal_ideal: Option<Ideal>,
    pub isolated: bool,
}

impl PrimaryComponent {
    pub fn fingerprint(&self) -> String {
        self.ideal
            .canonical_texts()
            .map(|v| v.join(" ; "))
            .unwrap_or_default()
    }
}

/// Verdict of the bounded primary verifier; Unknown is explicitly distinct
/// from false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primality {
    Primary,
    /// (a, b) with a b in Q, a not in Q, and no power of b in Q.
    NotPrimary { witness: (String, String) },
    Unknown(String),
}

impl Primality {
    pub fn is_primary(&self) -> bool {
        matches!(self, Primality::Primary)
    }
}

// ---- maximal independent set ----

/// Deterministic maximally independent variable set of a proper ideal:
/// the lexicographically first among the maximum-size sets.
pub fn max_independent_set(basis: &GroebnerBasis) -> Result<Vec<usize>> {
    if basis.contains_unit() {
        return Err(Error::UnitIdeal);
    }
    let Some(ring) = basis.ring() else {
        return Ok(Vec::new());
    };
    max_independent_subset(basis, ring.nvars())
}

// ---- zero-dimensional decomposition ----

/// Leading coefficient of g viewed as univariate in variable v.
fn lead_coeff_in(g: &Polynomial, v: usize) -> Polynomial {
    coeff_in(g, v, g.degree_in(v))
}

/// True when (I ⊗ K) is zero-dimensional over K = k(params): the block-order
/// basis of the contraction has a pure power of every main variable among
/// its leading main-parts.
pub fn is_zero_dim_over_params(ideal: &Ideal, params: &[usize]) -> Result<bool> {
    let ring = ideal.ring();
    let mains: Vec<usize> = (0..ring.nvars()).filter(|i| !params.contains(i)).collect();
    if mains.is_empty() {
        return Ok(true);
    }
    let (sat, _, _) = contract_with_multiplier(ideal, params)?;
    let ord = MonomialOrder::block(mains.clone());
    let gb = buchberger(sat.generators(), &ord)?;
    for &v in &mains {
        let covered = gb.generators().iter().any(|g| {
            g.leading_monomial(&ord).is_some_and(|m| {
                let sup: Vec<usize> = m
                    .support()
                    .into_iter()
                    .filter(|i| mains.contains(i))
                    .collect();
                sup == vec![v]
            })
        });
        if !covered {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Branch {
    ideal: Ideal,
    maximal: Vec<Polynomial>,
}

/// Primary decomposition of I ⊗ K for K = k(params), assuming it is
/// zero-dimensional; returns contracted components (ideals of the ambient
/// polynomial ring) whose intersection is the contraction of I, together
/// with pairwise distinct maximal-ideal witnesses.
pub fn primdec_zero_dim(ideal: &Ideal, params: &[usize]) -> Result<Vec<PrimaryComponent>> {
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    if !is_zero_dim_over_params(ideal, params)? {
        return Err(Error::NotZeroDimensional);
    }
    let ring = ideal.ring().clone();
    let mains: Vec<usize> = (0..ring.nvars()).filter(|i| !params.contains(i)).collect();
    let mut branches = vec![Branch {
        ideal: ideal.clone(),
        maximal: Vec::new(),
    }];
    let mut processed: Vec<usize> = params.to_vec();
    for &x in &mains {
        processed.push(x);
        let mut next = Vec::new();
        for branch in branches {
            next.extend(split_branch(&branch, x, &processed, params, &ring)?);
        }
        branches = next;
        if branches.is_empty() {
            // every branch became the unit ideal over K, which contradicts
            // properness of the input
            return Err(Error::NoSplittingElement);
        }
    }
    let mut components = Vec::new();
    for branch in branches {
        let (q, _, _) = contract_with_multiplier(&branch.ideal, params)?;
        if q.is_unit()? {
            continue;
        }
        let canonical = Ideal::from_basis(q.groebner()?.clone());
        components.push(PrimaryComponent {
            ideal: canonical,
            witness_maximal_ideal: Some(Ideal::new(ring.clone(), branch.maximal.clone())),
            isolated: true,
        });
    }
    dedupe_components(&mut components);
    Ok(components)
}

/// One inductive step: adjoin main variable x, pick an elimination-basis
/// element with leading x-coefficient invertible modulo the branch maximal
/// ideal, factor it over the fraction field, and split the branch along the
/// factors.
fn split_branch(
    branch: &Branch,
    x: usize,
    keep: &[usize],
    params: &[usize],
    ring: &Ring,
) -> Result<Vec<Branch>> {
    // elimination basis of the contraction to the processed variables
    let elim = eliminate(branch.ideal.generators(), keep)?;
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    let elim_full: Vec<Polynomial> = elim
        .generators()
        .iter()
        .map(|g| g.embed(ring, &keep_sorted))
        .collect();
    let contracted = Ideal::new(ring.clone(), elim_full.clone());
    let (sat_elim, _, _) = contract_with_multiplier(&contracted, params)?;
    if sat_elim.is_unit()? {
        return Ok(Vec::new());
    }

    // candidates: x-leading coefficient must be a unit modulo the current
    // maximal ideal (tested through the contraction over the parameters)
    let m_ideal = Ideal::new(ring.clone(), branch.maximal.clone());
    let m_contracted = if branch.maximal.is_empty() {
        Ideal::zero(ring)
    } else {
        contract_with_multiplier(&m_ideal, params)?.0
    };
    let mut candidates: Vec<Polynomial> = Vec::new();
    candidates.extend(elim_full.iter().cloned());
    candidates.extend(sat_elim.generators().iter().cloned());
    let mut best: Option<(u32, String, Polynomial)> = None;
    for g in &candidates {
        if g.is_zero() {
            continue;
        }
        let q = g.degree_in(x);
        if q == 0 {
            continue;
        }
        let alpha = lead_coeff_in(g, x);
        if m_contracted.member(&alpha)? {
            continue;
        }
        let key = (q, g.to_text());
        if best
            .as_ref()
            .is_none_or(|(bq, bt, _)| (key.0, &key.1) < (*bq, bt))
        {
            best = Some((key.0, key.1, g.clone()));
        }
    }
    let Some((_, _, g)) = best else {
        return Err(Error::NoSplittingElement);
    };

    // factor over the fraction field of everything except x
    let factors = factor_univariate(&g, x)?;
    if factors.factors.is_empty() {
        return Err(Error::NoSplittingElement);
    }
    // h = product of the primitive irreducible factors with multiplicity
    let mut h = Polynomial::one(ring);
    for (p, m) in &factors.factors {
        h = h.mul(&p.pow(*m));
    }
    // least s with h^s in the contraction of the branch ideal
    let (sat_branch, _, _) = contract_with_multiplier(&branch.ideal, params)?;
    let mut s = 1u32;
    loop {
        if sat_branch.member(&h.pow(s))? {
            break;
        }
        s += 1;
        if s > 256 {
            return Err(Error::ResourceLimit("splitting exponent search".into()));
        }
    }

    // The intersection identity behind the split needs the splitting
    // elements pairwise comaximal modulo the branch maximal ideal, not just
    // coprime over the fraction field; factors that collide modulo it are
    // associates there and must travel together. Group them and split along
    // class products. A lumped class still sits under one maximal ideal, so
    // its component stays primary.
    let classes = group_factors_mod_maximal(&factors.factors, &branch.maximal, params, ring)?;

    let mut out = Vec::new();
    for class in &classes {
        let mut power = Polynomial::one(ring);
        for (p, mult) in class {
            power = power.mul(&p.pow(mult * s));
        }
        let mut gens = branch.ideal.generators().to_vec();
        gens.push(power);
        let candidate = Ideal::new(ring.clone(), gens);
        // drop branches that became the unit ideal over K
        match contract_with_multiplier(&candidate, params) {
            Err(Error::UnitIdeal) => continue,
            Err(e) => return Err(e),
            Ok((sat, _, _)) => {
                if sat.is_unit()? {
                    continue;
                }
            }
        }
        let mut maximal = branch.maximal.clone();
        maximal.push(normalize_factor(&class[0].0));
        out.push(Branch {
            ideal: candidate,
            maximal,
        });
    }
    Ok(out)
}

/// Partition irreducible factors into classes that are pairwise comaximal
/// modulo the maximal-ideal generators, over the fraction field of the
/// parameters (union-find on the non-comaximal relation).
fn group_factors_mod_maximal(
    factors: &[(Polynomial, u32)],
    maximal: &[Polynomial],
    params: &[usize],
    ring: &Ring,
) -> Result<Vec<Vec<(Polynomial, u32)>>> {
    let k = factors.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..k {
        for j in i + 1..k {
            let mut gens = vec![factors[i].0.clone(), factors[j].0.clone()];
            gens.extend(maximal.iter().cloned());
            let pair = Ideal::new(ring.clone(), gens);
            let comaximal = if pair.is_unit()? {
                true
            } else {
                match contract_with_multiplier(&pair, params) {
                    Err(Error::UnitIdeal) => true,
                    Err(e) => return Err(e),
                    Ok((sat, _, _)) => sat.is_unit()?,
                }
            };
            if !comaximal {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut classes: Vec<Vec<(Polynomial, u32)>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..k {
        let r = find(&mut parent, i);
        match roots.iter().position(|&x| x == r) {
            Some(idx) => classes[idx].push(factors[i].clone()),
            None => {
                roots.push(r);
                classes.push(vec![factors[i].clone()]);
            }
        }
    }
    Ok(classes)
}

// ---- general primary decomposition ----

/// Full primary decomposition of a proper ideal over a base field: contract
/// over a maximally independent variable set, decompose the zero-dimensional
/// part, split off I + (f^s), and recurse; the final list is irredundant and
/// its intersection is exactly the input.
pub fn primdec(ideal: &Ideal) -> Result<Vec<PrimaryComponent>> {
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero()? {
        return Ok(vec![PrimaryComponent {
            ideal: ideal.clone(),
            witness_maximal_ideal: None,
            isolated: true,
        }]);
    }
    let mut components = Vec::new();
    primdec_rec(ideal, 0, &mut components)?;
    dedupe_components(&mut components);
    remove_redundant(&mut components)?;
    classify_isolated(&mut components)?;
    components.sort_by_key(|c| c.fingerprint());
    Ok(components)
}

fn primdec_rec(ideal: &Ideal, depth: u32, out: &mut Vec<PrimaryComponent>) -> Result<()> {
    if depth > 64 {
        return Err(Error::ResourceLimit("primary decomposition depth".into()));
    }
    let basis = ideal.groebner()?;
    let params = max_independent_subset(basis, ideal.ring().nvars())?;
    out.extend(primdec_zero_dim(ideal, &params)?);
    let (_, f, s) = contract_with_multiplier(ideal, &params)?;
    if s == 0 || f.is_constant() {
        return Ok(());
    }
    let mut gens = ideal.generators().to_vec();
    gens.push(f.pow(s));
    let enlarged = Ideal::new(ideal.ring().clone(), gens);
    primdec_rec(&enlarged, depth + 1, out)
}

fn dedupe_components(components: &mut Vec<PrimaryComponent>) {
    components.sort_by_key(|c| c.fingerprint());
    components.dedup_by_key(|c| c.fingerprint());
}

/// Drop any component containing the intersection of the others.
fn remove_redundant(components: &mut Vec<PrimaryComponent>) -> Result<()> {
    'outer: loop {
        if components.len() <= 1 {
            return Ok(());
        }
        for j in 0..components.len() {
            let mut others: Option<Ideal> = None;
            for (k, c) in components.iter().enumerate() {
                if k == j {
                    continue;
                }
                others = Some(match others {
                    None => c.ideal.clone(),
                    Some(acc) => intersect(&acc, &c.ideal)?,
                });
            }
            let others = others.expect("at least two components");
            if components[j].ideal.contains(&others)? {
                components.remove(j);
                continue 'outer;
            }
        }
        return Ok(());
    }
}

/// Set isolated/embedded flags by pairwise radical containment:
/// a component is embedded when its radical properly contains another's.
pub fn classify_isolated(components: &mut Vec<PrimaryComponent>) -> Result<()> {
    let n = components.len();
    let mut radical_le = vec![vec![false; n]; n]; // radical_le[a][b]: sqrt(Qa) ⊆ sqrt(Qb)
    for a in 0..n {
        for b in 0..n {
            if a == b {
                radical_le[a][b] = true;
                continue;
            }
            let mut all = true;
            for g in components[a].ideal.generators() {
                if !radical_member(g, &components[b].ideal)?.0 {
                    all = false;
                    break;
                }
            }
            radical_le[a][b] = all;
        }
    }
    for j in 0..n {
        let embedded = (0..n).any(|k| k != j && radical_le[k][j] && !radical_le[j][k]);
        components[j].isolated = !embedded;
    }
    Ok(())
}

// ---- bounded primary verifier ----

/// Desk-scale primary test: exact for monomial ideals, principal ideals, and
/// zero-dimensional ideals whose radical it can certify maximal; otherwise a
/// bounded witness search that may return Unknown.
pub fn is_primary(q: &Ideal) -> Result<Primality> {
    if q.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    if q.is_zero()? {
        return Ok(Primality::Primary);
    }
    let basis = q.groebner()?;
    let gens: Vec<Polynomial> = basis
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();

    if gens.iter().all(|g| g.num_terms() == 1) {
        return Ok(monomial_primary(q, &gens));
    }
    if gens.len() == 1 {
        return principal_primary(q, &gens[0]);
    }
    let dim = crate::groebner::dimension(basis)?;
    if dim == 0 {
        return zero_dim_primary(q);
    }
    bounded_witness_search(q, 4)
}

/// A monomial ideal is primary iff every variable occurring in a minimal
/// generator has a pure power among the generators.
fn monomial_primary(q: &Ideal, gens: &[Polynomial]) -> Primality {
    let supports: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| g.terms().next().unwrap().0.support())
        .collect();
    let pure: Vec<usize> = supports
        .iter()
        .filter(|s| s.len() == 1)
        .map(|s| s[0])
        .collect();
    for (g, sup) in gens.iter().zip(&supports) {
        for &v in sup {
            if !pure.contains(&v) {
                // witness: a = g with v stripped, b = v
                let (m, _) = g.terms().next().unwrap();
                let mut a_mono = m.clone();
                a_mono.0[v] = 0;
                let a = Polynomial::from_term(
                    q.ring(),
                    a_mono,
                    q.ring().field.one(),
                );
                let b = Polynomial::var(q.ring(), v);
                return Primality::NotPrimary {
                    witness: (a.to_text(), b.to_text()),
                };
            }
        }
    }
    Primality::Primary
}

/// A principal ideal in a unique factorization domain is primary iff its
/// generator is (up to a unit) a prime power.
fn principal_primary(q: &Ideal, g: &Polynomial) -> Result<Primality> {
    let fac = crate::factor::factor_multivariate(g)?;
    if fac.factors.len() <= 1 {
        return Ok(Primality::Primary);
    }
    let (p0, m0) = &fac.factors[0];
    let a = p0.pow(*m0);
    let b = crate::gcd::divide_exact(g, &a).expect("factor divides");
    debug_assert!(!q.member(&a)? && !radical_member(&b, q)?.0);
    Ok(Primality::NotPrimary {
        witness: (a.to_text(), b.to_text()),
    })
}

/// Zero-dimensional case: the radical is exact (squarefree eliminants per
/// variable) and primary is equivalent to that radical being maximal.
fn zero_dim_primary(q: &Ideal) -> Result<Primality> {
    let ring = q.ring().clone();
    let n = ring.nvars();
    let mut radical_gens = q.generators().to_vec();
    let mut eliminants = Vec::new();
    for v in 0..n {
        let elim = eliminate(q.generators(), &[v])?;
        let gen = elim
            .generators()
            .iter()
            .find(|g| !g.is_zero())
            .cloned()
            .ok_or(Error::NotZeroDimensional)?;
        let uni = gen.embed(&ring, &[v]);
        let sf = squarefree_part_in(&uni, v)?;
        eliminants.push((v, sf.clone()));
        radical_gens.push(sf);
    }
    let radical = Ideal::new(ring.clone(), radical_gens);

    // a split eliminant splits the variety: not primary, exact witness
    for (v, sf) in &eliminants {
        let fac = factor_univariate(sf, *v)?;
        if fac.factors.len() >= 2 {
            let f1 = fac.factors[0].0.clone();
            let rest = crate::gcd::divide_exact(sf, &f1).expect("factor divides");
            let (_, e) = radical_member(sf, q)?;
            let e = e.expect("squarefree eliminant is in the radical");
            let a = f1.pow(e);
            let b = rest.pow(e);
            debug_assert!(q.member(&a.mul(&b))?);
            if !q.member(&a)? && !radical_member(&b, q)?.0 {
                return Ok(Primality::NotPrimary {
                    witness: (a.to_text(), b.to_text()),
                });
            }
            // fall through conservatively when the witness fails to verify
            return Ok(Primality::Unknown(
                "eliminant split without a verified witness".into(),
            ));
        }
    }
    // all eliminants irreducible; certify maximality when the residue
    // dimension matches one of them (the quotient then is that field)
    let dim_k = standard_monomial_count(&radical)?;
    if dim_k == 1 {
        return Ok(Primality::Primary);
    }
    for (v, sf) in &eliminants {
        if sf.degree_in(*v) as u64 == dim_k {
            return Ok(Primality::Primary);
        }
    }
    Ok(Primality::Unknown(format!(
        "radical of residue dimension {} not certified maximal",
        dim_k
    )))
}

/// Number of standard monomials of a zero-dimensional ideal.
fn standard_monomial_count(ideal: &Ideal) -> Result<u64> {
    let basis = ideal.groebner()?;
    let ord = basis.order().clone();
    let leads: Vec<Monomial> = basis
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.leading_monomial(&ord).unwrap().clone())
        .collect();
    let n = ideal.ring().nvars();
    // bounded box: per-variable pure-power degrees cap the standard set
    let mut caps = vec![0u32; n];
    for v in 0..n {
        let cap = leads
            .iter()
            .filter(|m| m.support() == vec![v])
            .map(|m| m.0[v])
            .min()
            .ok_or(Error::NotZeroDimensional)?;
        caps[v] = cap;
    }
    let mut count = 0u64;
    let mut stack = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == n {
            let mono = Monomial(prefix.clone());
            if !leads.iter().any(|l| l.divides(&mono)) {
                count += 1;
            }
            continue;
        }
        let v = prefix.len();
        for e in 0..caps[v] {
            let mut next = prefix.clone();
            next.push(e);
            stack.push(next);
        }
    }
    Ok(count)
}

/// Positive-dimensional fallback: search small monomial pairs (a, b) with
/// a b in Q, a outside Q, and b outside the radical.
fn bounded_witness_search(q: &Ideal, degree_bound: u32) -> Result<Primality> {
    let ring = q.ring().clone();
    let n = ring.nvars();
    let monos = monomials_up_to(n, degree_bound);
    for a in &monos {
        if a.is_one() {
            continue;
        }
        let pa = Polynomial::from_term(&ring, a.clone(), ring.field.one());
        if q.member(&pa)? {
            continue;
        }
        for b in &monos {
            if b.is_one() {
                continue;
            }
            let pb = Polynomial::from_term(&ring, b.clone(), ring.field.one());
            if q.member(&pa.mul(&pb))? && !radical_member(&pb, q)?.0 {
                return Ok(Primality::NotPrimary {
                    witness: (pa.to_text(), pb.to_text()),
                });
            }
        }
    }
    Ok(Primality::Unknown(format!(
        "no witness up to degree {}",
        degree_bound
    )))
}

fn monomials_up_to(n: usize, degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(n)];
    let mut frontier = out.clone();
    for _ in 0..degree {
        let mut next = Vec::new();
        for m in &frontier {
            for v in 0..n {
                let mut e = m.clone();
                e.0[v] += 1;
                if !next.contains(&e) && !out.contains(&e) {
                    next.push(e.clone());
                    out.push(e);
                }
            }
        }
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::{parse_poly, ring};

    fn ideal(texts: &[&str], r: &Ring) -> Ideal {
        Ideal::new(
            r.clone(),
            texts.iter().map(|t| parse_poly(t, r).unwrap()).collect(),
        )
    }

    fn fingerprints(comps: &[PrimaryComponent]) -> Vec<String> {
        comps.iter().map(|c| c.fingerprint()).collect()
    }

    #[test]
    fn fraction_field_reduces() {
        let r = ring(FieldSpec::prime_field(5).unwrap(), &["t"]);
        let ff = FractionField::new(r.clone());
        let a = ff
            .frac(
                parse_poly("t^2 - 1", &r).unwrap(),
                parse_poly("t - 1", &r).unwrap(),
            )
            .unwrap();
        assert_eq!(a.numerator(), &parse_poly("t + 1", &r).unwrap());
        assert_eq!(a.denominator(), &parse_poly("1", &r).unwrap());
        // denominator normalized monic
        let b = ff
            .frac(
                parse_poly("t", &r).unwrap(),
                parse_poly("2*t + 2", &r).unwrap(),
            )
            .unwrap();
        assert_eq!(b.denominator(), &parse_poly("t + 1", &r).unwrap());
        let prod = ff.mul(&b, &ff.inv(&b).unwrap());
        assert_eq!(prod, ff.from_poly(Polynomial::one(&r)));
    }

    #[test]
    fn max_independent_set_examples() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        let i = ideal(&["x*y"], &r);
        assert_eq!(max_independent_set(i.groebner().unwrap()).unwrap(), vec![0]);

        let z = Ideal::new(r.clone(), vec![Polynomial::zero(&r)]);
        assert_eq!(
            max_independent_set(z.groebner().unwrap()).unwrap(),
            vec![0, 1]
        );

        let pt = ideal(&["x", "y"], &r);
        assert!(max_independent_set(pt.groebner().unwrap())
            .unwrap()
            .is_empty());

        let unit = ideal(&["1"], &r);
        assert!(matches!(
            max_independent_set(unit.groebner().unwrap()),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn zero_dim_split_of_two_points() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let i = ideal(&["x^2 - 1"], &r);
        let comps = primdec_zero_dim(&i, &[]).unwrap();
        assert_eq!(fingerprints(&comps), vec!["x + 1", "x - 1"]);
        // intersection equals the input, both directions
        let inter = intersect(&comps[0].ideal, &comps[1].ideal).unwrap();
        assert_eq!(inter, i);
        // maximal witnesses pairwise distinct
        let w0 = comps[0].witness_maximal_ideal.as_ref().unwrap();
        let w1 = comps[1].witness_maximal_ideal.as_ref().unwrap();
        assert!(w0
            .generators()
            .iter()
            .any(|g| !w1.member(g).unwrap()));
    }

    #[test]
    fn zero_dim_already_primary() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let i = ideal(&["x^2"], &r);
        let comps = primdec_zero_dim(&i, &[]).unwrap();
        assert_eq!(fingerprints(&comps), vec!["x^2"]);
        let witness = comps[0].witness_maximal_ideal.as_ref().unwrap();
        assert_eq!(witness.canonical_texts().unwrap(), vec!["x"]);
    }

    #[test]
    fn zero_dim_with_parameter_stays_irreducible() {
        let r = ring(FieldSpec::prime_field(5).unwrap(), &["t", "x"]);
        let i = ideal(&["x^2 - t"], &r);
        let comps = primdec_zero_dim(&i, &[0]).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].ideal, i);
    }

    #[test]
    fn zero_dim_rejects_positive_dimension() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        let i = ideal(&["x*y"], &r);
        assert!(matches!(
            primdec_zero_dim(&i, &[]),
            Err(Error::NotZeroDimensional)
        ));
    }

    #[test]
    fn primdec_x2_xy() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        let i = ideal(&["x^2", "x*y"], &r);
        let comps = primdec(&i).unwrap();
        assert_eq!(fingerprints(&comps), vec!["x", "x^2 ; y"]);
        // exactness: intersection equals the input two ways
        let inter = intersect(&comps[0].ideal, &comps[1].ideal).unwrap();
        assert_eq!(inter, i);
        for c in &comps {
            assert!(is_primary(&c.ideal).unwrap().is_primary());
        }
        // (x) isolated, (x^2, y) embedded
        assert!(comps[0].isolated);
        assert!(!comps[1].isolated);
    }

    #[test]
    fn primdec_prime_input_is_itself() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        let i = ideal(&["y - x^2"], &r);
        let comps = primdec(&i).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].ideal, i);
        assert!(comps[0].isolated);
        assert!(is_primary(&comps[0].ideal).unwrap().is_primary());
    }

    #[test]
    fn primdec_zero_ideal() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        let i = Ideal::zero(&r);
        let comps = primdec(&i).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].ideal.is_zero().unwrap());
    }

    #[test]
    fn is_primary_examples() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        assert!(is_primary(&ideal(&["x^2"], &r)).unwrap().is_primary());
        match is_primary(&ideal(&["x*y"], &r)).unwrap() {
            Primality::NotPrimary { witness } => {
                // a b in Q, a outside Q, b outside the radical
                let q = ideal(&["x*y"], &r);
                let a = parse_poly(&witness.0, &r).unwrap();
                let b = parse_poly(&witness.1, &r).unwrap();
                assert!(q.member(&a.mul(&b)).unwrap());
                assert!(!q.member(&a).unwrap());
                assert!(!radical_member(&b, &q).unwrap().0);
            }
            other => panic!("expected a witnessed failure, got {:?}", other),
        }
        assert!(is_primary(&ideal(&["x^2", "y"], &r)).unwrap().is_primary());
        // radical (x, y) is maximal, so (x^2, xy, y^2)-like ideals pass too
        assert!(is_primary(&ideal(&["x^2", "x*y", "y^2"], &r))
            .unwrap()
            .is_primary());
        // principal with two distinct irreducible factors
        assert!(!is_primary(&ideal(&["x^2 - y^2"], &r))
            .unwrap()
            .is_primary());
    }

    #[test]
    fn classify_isolated_examples() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        // single component: isolated
        let mut single = vec![PrimaryComponent {
            ideal: ideal(&["x"], &r),
            witness_maximal_ideal: None,
            isolated: false,
        }];
        classify_isolated(&mut single).unwrap();
        assert!(single[0].isolated);

        // pairwise comaximal components: all isolated
        let mut pair = vec![
            PrimaryComponent {
                ideal: ideal(&["x - 1"], &r),
                witness_maximal_ideal: None,
                isolated: false,
            },
            PrimaryComponent {
                ideal: ideal(&["x + 1"], &r),
                witness_maximal_ideal: None,
                isolated: false,
            },
        ];
        classify_isolated(&mut pair).unwrap();
        assert!(pair.iter().all(|c| c.isolated));
    }

    #[test]
    fn primdec_is_permutation_invariant() {
        let r = ring(FieldSpec::Rationals, &["x", "y"]);
        let a = primdec(&ideal(&["x^2", "x*y"], &r)).unwrap();
        let b = primdec(&ideal(&["x*y", "x^2"], &r)).unwrap();
        assert_eq!(fingerprints(&a), fingerprints(&b));
    }

    #[test]
    fn primdec_rejects_unit() {
        let r = ring(FieldSpec::Rationals, &["x"]);
        assert!(matches!(
            primdec(&ideal(&["1"], &r)),
            Err(Error::UnitIdeal)
        ));
    }
}
