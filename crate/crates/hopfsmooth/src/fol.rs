//! First-order formulas in the language of rings {forall, exists, or, and,
//! not, +, -, *, 0, 1, =}, mirroring the algebraic predicates of the engine:
//! initial-term tests, the Groebner criterion, dimension, ideal membership,
//! factor-through conditions, the Hopf axioms, Lie dimension, smoothness,
//! characteristic tests, and the universal smoothness sentence.
//!
//! Bounded polynomial data enters through free variables: a d-bounded
//! polynomial is its coefficient tuple (l1..ld), a basis a d x d tuple, a
//! structure map its per-variable coefficient grids. Evaluation decides the
//! innermost existential blocks by exact linear algebra; universal
//! quantification is constructible and printable but rejected by the
//! evaluator.

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::groebner::s_polynomial;
use crate::hopf::HopfQuadruple;
use crate::linalg::{solve, Matrix};
use crate::monomial::{monomial_rank, monomial_unrank, Monomial, MonomialOrder};
use crate::poly::{ring_owned, to_bounded, Polynomial, Ring};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc as Rc;

// ---- terms and nodes ----

#[derive(Clone, Debug, PartialEq)]
pub enum Term {
    Zero,
    One,
    Var(String),
    /// A field literal; psi and friends spell integers as 1 + ... + 1
    /// instead, so literals only appear where a baked scalar is unavoidable.
    Literal(Coeff),
    Add(Rc<Term>, Rc<Term>),
    Sub(Rc<Term>, Rc<Term>),
    Mul(Rc<Term>, Rc<Term>),
}

#[derive(Clone, Debug)]
pub enum Node {
    Eq(Rc<Term>, Rc<Term>),
    Not(Rc<Node>),
    And(Vec<Rc<Node>>),
    Or(Vec<Rc<Node>>),
    Exists(Vec<String>, Rc<Node>),
    Forall(Vec<String>, Rc<Node>),
    /// Bounded ideal membership: target coefficients are linear expressions
    /// in frees; decided by one linear system over the monomial scale.
    Member(Rc<MemberSpec>),
    /// Standard-representation test for the S-polynomial of a pinned pair.
    StdRep(Rc<StdRepSpec>),
    /// The initial ideal of the basis admits an independent variable set of
    /// size exactly e.
    DimensionIs(Rc<DimSpec>),
    /// The Jacobian at the baked counit point has nullity e.
    NullityIs(Rc<NullSpec>),
}

/// What a free variable denotes in the bounded-data layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlotObject {
    PolyCoeff { rank: u64 },
    BasisCoeff { elem: usize, rank: u64 },
    MapCoeff { var: usize, ranks: Vec<u64> },
    CounitValue { var: usize },
    Opaque,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeVar {
    pub name: String,
    pub object: SlotObject,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FormulaKind {
    InitialTermIs { e: u64, d: u64 },
    IsGroebner { d: u64 },
    DimensionIs { e: u64, d: u64 },
    IdealMember { d: u64 },
    FactorsThrough { d: u64, r: u32 },
    IsHopf { d: u64 },
    LieDimensionIs { e: u64, d: u64 },
    IsSmooth { d: u64 },
    CharacteristicIs { p: u64 },
    AllBoundedSmooth { d: u64 },
    Parsed,
}

#[derive(Clone, Debug)]
pub struct Formula {
    pub kind: FormulaKind,
    pub nvars: usize,
    root: Rc<Node>,
    frees: Vec<FreeVar>,
}

impl Formula {
    pub fn free_variables(&self) -> &[FreeVar] {
        &self.frees
    }

    pub fn root(&self) -> &Rc<Node> {
        &self.root
    }
}

/// Build-time context: the coefficient field and the counit point baked into
/// Jacobian-based formulas (defaults to the origin).
#[derive(Clone, Debug)]
pub struct FormulaContext {
    pub field: FieldSpec,
    pub counit: Option<Vec<Coeff>>,
}

impl FormulaContext {
    pub fn new(field: FieldSpec) -> FormulaContext {
        FormulaContext {
            field,
            counit: None,
        }
    }

    fn counit_point(&self, n: usize) -> Vec<Coeff> {
        self.counit
            .clone()
            .unwrap_or_else(|| vec![self.field.zero(); n])
    }
}

// ---- structured node payloads ----

/// One linear membership block: assert that each target lies in the ideal of
/// the assembled basis, with cofactor monomials bounded by the target lead.
#[derive(Debug)]
pub struct MemberSpec {
    pub nvars: usize,
    pub d: u64,
    /// Basis free-variable prefix (the names g{i}_l{r}).
    pub basis_prefix: String,
    /// The targets, as symbolic polynomials over the free-variable ring.
    pub targets: Vec<SymPoly>,
    /// Variable count of the ring the membership lives in (tensor powers).
    pub target_nvars: usize,
    /// How basis elements map into the target ring: slot count r.
    pub tensor_power: usize,
}

#[derive(Debug)]
pub struct StdRepSpec {
    pub nvars: usize,
    pub d: u64,
    pub i: usize,
    pub j: usize,
    pub a: u64,
    pub b: u64,
}

#[derive(Debug)]
pub struct DimSpec {
    pub nvars: usize,
    pub d: u64,
    pub e: u64,
}

#[derive(Debug)]
pub struct NullSpec {
    pub nvars: usize,
    pub d: u64,
    pub e: u64,
    /// `counit_derivs[rank - 1][var]` is the counit evaluation of d(m_rank)/d(x_var)
    pub counit_derivs: Vec<Vec<Coeff>>,
}

/// A polynomial in the target ring whose coefficients are terms over the
/// free variables; the currency of the composite membership blocks.
#[derive(Clone, Debug)]
pub struct SymPoly {
    pub target_nvars: usize,
    pub coeffs: BTreeMap<Monomial, Rc<Term>>,
}

impl SymPoly {
    fn zero(target_nvars: usize) -> SymPoly {
        SymPoly {
            target_nvars,
            coeffs: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, m: Monomial, t: Rc<Term>) {
        match self.coeffs.remove(&m) {
            None => {
                self.coeffs.insert(m, t);
            }
            Some(old) => {
                self.coeffs.insert(m, Rc::new(Term::Add(old, t)));
            }
        }
    }

    fn mul(&self, other: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero(self.target_nvars);
        for (m1, t1) in &self.coeffs {
            for (m2, t2) in &other.coeffs {
                out.add_term(m1.mul(m2), Rc::new(Term::Mul(t1.clone(), t2.clone())));
            }
        }
        out
    }

    /// Evaluate every coefficient under an assignment, producing an honest
    /// polynomial.
    fn materialize(&self, ring: &Ring, assign: &Assignment) -> Result<Polynomial> {
        let mut out = Polynomial::zero(ring);
        for (m, t) in &self.coeffs {
            out.add_term(m, &eval_term(t, assign)?);
        }
        Ok(out)
    }
}

// ---- name helpers ----

fn poly_name(rank: u64) -> String {
    format!("l{}", rank)
}

fn basis_name(prefix: &str, elem: usize, rank: u64) -> String {
    format!("{}{}_l{}", prefix, elem, rank)
}

fn map_name(prefix: &str, var: usize, ranks: &[u64]) -> String {
    let mut s = format!("{}{}", prefix, var);
    for r in ranks {
        let _ = write!(s, "_{}", r);
    }
    s
}

fn var_term(name: String) -> Rc<Term> {
    Rc::new(Term::Var(name))
}

fn zero_t() -> Rc<Term> {
    Rc::new(Term::Zero)
}

// ---- builders ----

/// Profile-count ceiling for the dimension disjunction. The node itself is
/// structural, so construction and evaluation stay cheap below the ceiling;
/// printing a formula near the ceiling materializes a very large rendering.
const LIST_CEILING: u64 = 20_000_000;

/// Construct the formula for a predicate kind over n ring variables with a
/// default context (rationals, counit at the origin).
pub fn build(kind: FormulaKind, n: usize) -> Result<Formula> {
    build_with_context(kind, n, &FormulaContext::new(FieldSpec::Rationals))
}

pub fn build_with_context(kind: FormulaKind, n: usize, ctx: &FormulaContext) -> Result<Formula> {
    match kind.clone() {
        FormulaKind::InitialTermIs { e, d } => build_initial(e, d, n, kind),
        FormulaKind::IsGroebner { d } => build_groebner(d, n, kind),
        FormulaKind::DimensionIs { e, d } => build_dimension(e, d, n, kind),
        FormulaKind::IdealMember { d } => build_member(d, n, kind),
        FormulaKind::FactorsThrough { d, r } => build_factors(d, r, n, kind),
        FormulaKind::IsHopf { d } => build_hopf(d, n, kind),
        FormulaKind::LieDimensionIs { e, d } => build_nullity(e, d, n, ctx, kind),
        FormulaKind::IsSmooth { d } => build_smooth(d, n, ctx, kind),
        FormulaKind::CharacteristicIs { p } => build_char(p, n, kind),
        FormulaKind::AllBoundedSmooth { d } => build_sentence(d, n, ctx, kind),
        FormulaKind::Parsed => Err(Error::ParamOutOfRange("cannot build a parsed kind".into())),
    }
}

fn poly_frees(d: u64) -> Vec<FreeVar> {
    (1..=d)
        .map(|r| FreeVar {
            name: poly_name(r),
            object: SlotObject::PolyCoeff { rank: r },
        })
        .collect()
}

fn basis_frees(prefix: &str, d: u64) -> Vec<FreeVar> {
    let mut v = Vec::new();
    for i in 1..=d as usize {
        for r in 1..=d {
            v.push(FreeVar {
                name: basis_name(prefix, i, r),
                object: SlotObject::BasisCoeff { elem: i, rank: r },
            });
        }
    }
    v
}

/// (lambda_e != 0) and (lambda_{e+1} = 0) and ... and (lambda_d = 0).
fn initial_node(names: &dyn Fn(u64) -> String, e: u64, d: u64) -> Rc<Node> {
    let mut parts: Vec<Rc<Node>> = Vec::new();
    parts.push(Rc::new(Node::Not(Rc::new(Node::Eq(
        var_term(names(e)),
        zero_t(),
    )))));
    for r in e + 1..=d {
        parts.push(Rc::new(Node::Eq(var_term(names(r)), zero_t())));
    }
    if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        Rc::new(Node::And(parts))
    }
}

/// All coefficients vanish (the zero polynomial).
fn zero_node(names: &dyn Fn(u64) -> String, d: u64) -> Rc<Node> {
    let parts: Vec<Rc<Node>> = (1..=d)
        .map(|r| Rc::new(Node::Eq(var_term(names(r)), zero_t())))
        .collect();
    Rc::new(Node::And(parts))
}

fn build_initial(e: u64, d: u64, n: usize, kind: FormulaKind) -> Result<Formula> {
    if e == 0 || e > d {
        return Err(Error::ParamOutOfRange(format!(
            "initial-term index {} outside 1..={}",
            e, d
        )));
    }
    let root = initial_node(&|r| poly_name(r), e, d);
    Ok(Formula {
        kind,
        nvars: n,
        root,
        frees: poly_frees(d),
    })
}

fn build_groebner(d: u64, n: usize, kind: FormulaKind) -> Result<Formula> {
    if d == 0 {
        return Err(Error::ParamOutOfRange("d must be positive".into()));
    }
    if d * d > 10_000 {
        return Err(Error::FormulaSizeLimit(format!("{} basis slots", d * d)));
    }
    let mut pair_nodes: Vec<Rc<Node>> = Vec::new();
    for i in 1..=d as usize {
        for j in i + 1..=d as usize {
            let zi = zero_node(&|r| basis_name("g", i, r), d);
            let zj = zero_node(&|r| basis_name("g", j, r), d);
            let mut choices: Vec<Rc<Node>> = vec![zi, zj];
            for a in 1..=d {
                for b in 1..=d {
                    let ma = monomial_unrank(a, n)?;
                    let mb = monomial_unrank(b, n)?;
                    let chi: Rc<Node> = if ma.gcd(&mb).is_one() {
                        // coprime leads: the pair is skipped by fiat
                        Rc::new(Node::And(Vec::new()))
                    } else {
                        Rc::new(Node::StdRep(Rc::new(StdRepSpec {
                            nvars: n,
                            d,
                            i,
                            j,
                            a,
                            b,
                        })))
                    };
                    choices.push(Rc::new(Node::And(vec![
                        initial_node(&|r| basis_name("g", i, r), a, d),
                        initial_node(&|r| basis_name("g", j, r), b, d),
                        chi,
                    ])));
                }
            }
            pair_nodes.push(Rc::new(Node::Or(choices)));
        }
    }
    Ok(Formula {
        kind,
        nvars: n,
        root: Rc::new(Node::And(pair_nodes)),
        frees: basis_frees("g", d),
    })
}

fn build_dimension(e: u64, d: u64, n: usize, kind: FormulaKind) -> Result<Formula> {
    if d == 0 || e > d {
        return Err(Error::ParamOutOfRange(format!(
            "dimension index {} outside 0..={}",
            e, d
        )));
    }
    let lists = (d + 1).checked_pow(d as u32).unwrap_or(u64::MAX);
    if lists > LIST_CEILING {
        return Err(Error::FormulaSizeLimit(format!(
            "{} initial-term profiles",
            lists
        )));
    }
    Ok(Formula {
        kind,
        nvars: n,
        root: Rc::new(Node::DimensionIs(Rc::new(DimSpec { nvars: n, d, e }))),
        frees: basis_frees("g", d),
    })
}

fn build_member(d: u64, n: usize, kind: FormulaKind) -> Result<Formula> {
    if d == 0 {
        return Err(Error::ParamOutOfRange("d must be positive".into()));
    }
    let mut target = SymPoly::zero(n);
    for r in 1..=d {
        target.add_term(monomial_unrank(r, n)?, var_term(poly_name(r)));
    }
    let spec = MemberSpec {
        nvars: n,
        d,
        basis_prefix: "g".into(),
        targets: vec![target],
        target_nvars: n,
        tensor_power: 1,
    };
    let mut frees = basis_frees("g", d);
    frees.extend(poly_frees(d));
    Ok(Formula {
        kind,
        nvars: n,
        root: Rc::new(Node::Member(Rc::new(spec))),
        frees,
    })
}

/// Grids of index tuples (j_1..j_r) with entries in 1..=d.
fn rank_tuples(d: u64, r: u32) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..r {
        let mut next = Vec::new();
        for t in &out {
            for j in 1..=d {
                let mut tt = t.clone();
                tt.push(j);
                next.push(tt);
            }
        }
        out = next;
    }
    out
}

/// The image of variable `var` under the bounded map with name prefix
/// `prefix`, as a symbolic polynomial in the r-fold tensor ring.
fn map_image(prefix: &str, var: usize, d: u64, r: u32, n: usize) -> Result<SymPoly> {
    let target_nvars = if r == 0 { 0 } else { n * r as usize };
    let mut out = SymPoly::zero(target_nvars);
    if r == 0 {
        out.add_term(
            Monomial(vec![]),
            var_term(map_name(prefix, var + 1, &[])),
        );
        return Ok(out);
    }
    for tuple in rank_tuples(d, r) {
        let mut exps = vec![0u32; target_nvars];
        for (slot, &rank) in tuple.iter().enumerate() {
            let m = monomial_unrank(rank, n)?;
            for (v, &e) in m.0.iter().enumerate() {
                exps[slot * n + v] += e;
            }
        }
        out.add_term(
            Monomial(exps),
            var_term(map_name(prefix, var + 1, &tuple)),
        );
    }
    Ok(out)
}

/// Substitute symbolic images into a basis element: g_i(images), expanded in
/// the target ring with term coefficients over the frees.
fn substitute_sym(
    elem: usize,
    d: u64,
    n: usize,
    images: &[SymPoly],
    target_nvars: usize,
) -> Result<SymPoly> {
    let mut out = SymPoly::zero(target_nvars);
    for r in 1..=d {
        let m = monomial_unrank(r, n)?;
        // product of images^exponents
        let mut prod = SymPoly::zero(target_nvars);
        prod.add_term(
            Monomial(vec![0; target_nvars]),
            var_term(basis_name("g", elem, r)),
        );
        for (v, &e) in m.0.iter().enumerate() {
            for _ in 0..e {
                prod = prod.mul(&images[v]);
            }
        }
        for (mono, t) in prod.coeffs {
            out.add_term(mono, t);
        }
    }
    Ok(out)
}

fn factors_spec(prefix: &str, d: u64, r: u32, n: usize) -> Result<MemberSpec> {
    let target_nvars = if r == 0 { 0 } else { n * r as usize };
    let images: Vec<SymPoly> = (0..n)
        .map(|v| map_image(prefix, v, d, r, n))
        .collect::<Result<Vec<_>>>()?;
    let mut targets = Vec::new();
    for i in 1..=d as usize {
        targets.push(substitute_sym(i, d, n, &images, target_nvars)?);
    }
    Ok(MemberSpec {
        nvars: n,
        d,
        basis_prefix: "g".into(),
        targets,
        target_nvars,
        tensor_power: r.max(1) as usize,
    })
}

fn map_frees(prefix: &str, d: u64, r: u32, n: usize) -> Vec<FreeVar> {
    let mut out = Vec::new();
    for var in 1..=n {
        if r == 0 {
            out.push(FreeVar {
                name: map_name(prefix, var, &[]),
                object: SlotObject::CounitValue { var },
            });
            continue;
        }
        for tuple in rank_tuples(d, r) {
            out.push(FreeVar {
                name: map_name(prefix, var, &tuple),
                object: SlotObject::MapCoeff {
                    var,
                    ranks: tuple.clone(),
                },
            });
        }
    }
    out
}

fn build_factors(d: u64, r: u32, n: usize, kind: FormulaKind) -> Result<Formula> {
    if d == 0 {
        return Err(Error::ParamOutOfRange("d must be positive".into()));
    }
    let slots = (n as u64).saturating_mul(d.saturating_pow(r));
    if slots > 100_000 {
        return Err(Error::FormulaSizeLimit(format!("{} map slots", slots)));
    }
    let spec = factors_spec("L", d, r, n)?;
    let mut frees = basis_frees("g", d);
    frees.extend(map_frees("L", d, r, n));
    Ok(Formula {
        kind,
        nvars: n,
        root: Rc::new(Node::Member(Rc::new(spec))),
        frees,
    })
}

fn build_hopf(d: u64, n: usize, kind: FormulaKind) -> Result<Formula> {
    if d == 0 {
        return Err(Error::ParamOutOfRange("d must be positive".into()));
    }
    let slots = (n as u64).saturating_mul(d * d + d + 1);
    if slots > 100_000 {
        return Err(Error::FormulaSizeLimit(format!("{} map slots", slots)));
    }
    let comul_images: Vec<SymPoly> = (0..n)
        .map(|v| map_image("D", v, d, 2, n))
        .collect::<Result<Vec<_>>>()?;
    let antipode_images: Vec<SymPoly> = (0..n)
        .map(|v| map_image("s", v, d, 1, n))
        .collect::<Result<Vec<_>>>()?;
    let counit_images: Vec<SymPoly> = (0..n)
        .map(|v| map_image("e", v, d, 0, n))
        .collect::<Result<Vec<_>>>()?;

    let mut parts: Vec<Rc<Node>> = Vec::new();
    // the three factor-through conditions
    parts.push(Rc::new(Node::Member(Rc::new(MemberSpec {
        nvars: n,
        d,
        basis_prefix: "g".into(),
        targets: (1..=d as usize)
            .map(|i| substitute_sym(i, d, n, &comul_images, 2 * n))
            .collect::<Result<Vec<_>>>()?,
        target_nvars: 2 * n,
        tensor_power: 2,
    }))));
    parts.push(Rc::new(Node::Member(Rc::new(MemberSpec {
        nvars: n,
        d,
        basis_prefix: "g".into(),
        targets: (1..=d as usize)
            .map(|i| substitute_sym(i, d, n, &antipode_images, n))
            .collect::<Result<Vec<_>>>()?,
        target_nvars: n,
        tensor_power: 1,
    }))));
    // counit: evaluation at the point must vanish, a quantifier-free claim
    {
        let evaluated: Vec<SymPoly> = (1..=d as usize)
            .map(|i| substitute_sym(i, d, n, &counit_images, 0))
            .collect::<Result<Vec<_>>>()?;
        let mut eqs: Vec<Rc<Node>> = Vec::new();
        for sym in evaluated {
            let t = sym
                .coeffs
                .values()
                .cloned()
                .reduce(|a, b| Rc::new(Term::Add(a, b)))
                .unwrap_or_else(zero_t);
            eqs.push(Rc::new(Node::Eq(t, zero_t())));
        }
        parts.push(Rc::new(Node::And(eqs)));
    }

    // coassociativity in the triple tensor ring
    {
        let left: Vec<SymPoly> = (0..n)
            .map(|v| compose_comul(&comul_images, v, d, n, true))
            .collect::<Result<Vec<_>>>()?;
        let right: Vec<SymPoly> = (0..n)
            .map(|v| compose_comul(&comul_images, v, d, n, false))
            .collect::<Result<Vec<_>>>()?;
        let mut defects = Vec::new();
        for v in 0..n {
            let mut defect = left[v].clone();
            for (m, t) in &right[v].coeffs {
                defect.add_term(
                    m.clone(),
                    Rc::new(Term::Sub(zero_t(), t.clone())),
                );
            }
            defects.push(defect);
        }
        parts.push(Rc::new(Node::Member(Rc::new(MemberSpec {
            nvars: n,
            d,
            basis_prefix: "g".into(),
            targets: defects,
            target_nvars: 3 * n,
            tensor_power: 3,
        }))));
    }

    // counit law and antipode law: fold one leg, compare in the base ring
    {
        let mut law_targets = Vec::new();
        for v in 0..n {
            for side in 0..2 {
                // counit on `side`, identity on the other
                let mut defect = fold_leg_counit(&comul_images[v], n, side);
                let xv = Monomial::var(v, n);
                defect.add_term(xv, Rc::new(Term::Sub(zero_t(), Rc::new(Term::One))));
                law_targets.push(defect);
            }
        }
        parts.push(Rc::new(Node::Member(Rc::new(MemberSpec {
            nvars: n,
            d,
            basis_prefix: "g".into(),
            targets: law_targets,
            target_nvars: n,
            tensor_power: 1,
        }))));

        let mut anti_targets = Vec::new();
        for v in 0..n {
            for side in 0..2 {
                let mut defect =
                    fold_leg_antipode(&comul_images[v], n, side, &antipode_images);
                defect.add_term(
                    Monomial::one(n),
                    Rc::new(Term::Sub(zero_t(), var_term(map_name("e", v + 1, &[])))),
                );
                anti_targets.push(defect);
            }
        }
        parts.push(Rc::new(Node::Member(Rc::new(MemberSpec {
            nvars: n,
            d,
            basis_prefix: "g".into(),
            targets: anti_targets,
            target_nvars: n,
            tensor_power: 1,
        }))));
    }

    let mut frees = basis_frees("g", d);
    frees.extend(map_frees("D", d, 2, n));
    frees.extend(map_frees("s", d, 1, n));
    frees.extend(map_frees("e", d, 0, n));
    Ok(Formula {
        kind,
        nvars: n,
        root: Rc::new(Node::And(parts)),
        frees,
    })
}

/// (comul ⊗ id) or (id ⊗ comul) applied to comul(x_v), symbolically, in the
/// triple tensor ring.
fn compose_comul(
    comul_images: &[SymPoly],
    v: usize,
    d: u64,
    n: usize,
    left: bool,
) -> Result<SymPoly> {
    let t3 = 3 * n;
    // images of the 2n tensor variables inside the 3-fold ring
    let mut images: Vec<SymPoly> = Vec::with_capacity(2 * n);
    for slot in 0..2 {
        for var in 0..n {
            if (left && slot == 0) || (!left && slot == 1) {
                // route through comul into two adjacent slots
                let offset = if left { 0 } else { n };
                let mut img = SymPoly::zero(t3);
                for (m, t) in &comul_images[var].coeffs {
                    let mut exps = vec![0u32; t3];
                    for (i, &e) in m.0.iter().enumerate() {
                        exps[offset + i] += e;
                    }
                    img.add_term(Monomial(exps), t.clone());
                }
                images.push(img);
            } else {
                // a plain variable in the outer slot
                let target_slot = if left { 2 } else { 0 };
                let mut img = SymPoly::zero(t3);
                img.add_term(
                    Monomial::var(target_slot * n + var, t3),
                    Rc::new(Term::One),
                );
                images.push(img);
            }
        }
    }
    // substitute into comul(x_v), a polynomial in the 2n tensor variables
    let mut out = SymPoly::zero(t3);
    for (m, t) in &comul_images[v].coeffs {
        let mut prod = SymPoly::zero(t3);
        prod.add_term(Monomial(vec![0; t3]), t.clone());
        for (tv, &e) in m.0.iter().enumerate() {
            for _ in 0..e {
                prod = prod.mul(&images[tv]);
            }
        }
        for (mono, term) in prod.coeffs {
            out.add_term(mono, term);
        }
    }
    let _ = d;
    Ok(out)
}

/// Split a doubled monomial into the folded leg and the surviving leg.
fn split_legs(m: &Monomial, n: usize, side: usize) -> (Vec<u32>, Vec<u32>) {
    if side == 0 {
        (m.0[..n].to_vec(), m.0[n..].to_vec())
    } else {
        (m.0[n..].to_vec(), m.0[..n].to_vec())
    }
}

/// Evaluate one tensor leg at the counit point: multiply each coefficient by
/// the matching counit frees and keep the other leg's monomial.
fn fold_leg_counit(image: &SymPoly, n: usize, side: usize) -> SymPoly {
    let mut out = SymPoly::zero(n);
    for (m, t) in &image.coeffs {
        let (side_part, other_part) = split_legs(m, n, side);
        let mut coeff = t.clone();
        for (v, &e) in side_part.iter().enumerate() {
            for _ in 0..e {
                coeff = Rc::new(Term::Mul(coeff, var_term(map_name("e", v + 1, &[]))));
            }
        }
        out.add_term(Monomial(other_part), coeff);
    }
    out
}

/// Substitute the antipode image on one tensor leg and multiply it into the
/// surviving leg.
fn fold_leg_antipode(
    image: &SymPoly,
    n: usize,
    side: usize,
    antipode_images: &[SymPoly],
) -> SymPoly {
    let mut out = SymPoly::zero(n);
    for (m, t) in &image.coeffs {
        let (side_part, other_part) = split_legs(m, n, side);
        let mut acc = SymPoly::zero(n);
        acc.add_term(Monomial(other_part), t.clone());
        for (v, &e) in side_part.iter().enumerate() {
            for _ in 0..e {
                acc = acc.mul(&antipode_images[v]);
            }
        }
        for (mono, term) in acc.coeffs {
            out.add_term(mono, term);
        }
    }
    out
}

fn build_nullity(
    e: u64,
    d: u64,
    n: usize,
    ctx: &FormulaContext,
    kind: FormulaKind,
) -> Result<Formula> {
    if d == 0 || e > d {
        return Err(Error::ParamOutOfRange(format!(
            "nullity index {} outside 0..={}",
            e, d
        )));
    }
    let point = ctx.counit_point(n);
    let ring = ring_owned(
        ctx.field.clone(),
        (0..n).map(|i| format!("x{}", i)).collect(),
    );
    let mut counit_derivs = Vec::new();
    for r in 1..=d {
        let m = monomial_unrank(r, n)?;
        let poly = Polynomial::from_term(&ring, m, ctx.field.one());
        let row: Vec<Coeff> = (0..n).map(|v| poly.derivative(v).eval(&point)).collect();
        counit_derivs.push(row);
    }
    Ok(Formula {
        kind,
        nvars: n,
        root: Rc::new(Node::NullityIs(Rc::new(NullSpec {
            nvars: n,
            d,
            e,
            counit_derivs,
        }))),
        frees: basis_frees("g", d),
    })
}

fn build_smooth(d: u64, n: usize, ctx: &FormulaContext, kind: FormulaKind) -> Result<Formula> {
    let mut cases: Vec<Rc<Node>> = Vec::new();
    // arms run over the possible common value of dim G and dim Lie(G);
    // indices beyond d are not representable in d-bounded data
    for e in 0..=(n as u64).min(d) {
        let dim = build_dimension(e, d, n, FormulaKind::DimensionIs { e, d })?;
        let null = build_nullity(e, d, n, ctx, FormulaKind::LieDimensionIs { e, d })?;
        cases.push(Rc::new(Node::And(vec![dim.root, null.root])));
    }
    Ok(Formula {
        kind,
        nvars: n,
        root: Rc::new(Node::Or(cases)),
        frees: basis_frees("g", d),
    })
}

fn build_char(p: u64, n: usize, kind: FormulaKind) -> Result<Formula> {
    let mut sum = zero_t();
    for i in 0..p {
        sum = if i == 0 {
            Rc::new(Term::One)
        } else {
            Rc::new(Term::Add(sum, Rc::new(Term::One)))
        };
    }
    Ok(Formula {
        kind,
        nvars: n,
        root: Rc::new(Node::Eq(sum, zero_t())),
        frees: Vec::new(),
    })
}

fn build_sentence(d: u64, n: usize, ctx: &FormulaContext, kind: FormulaKind) -> Result<Formula> {
    let beta = build_groebner(d, n, FormulaKind::IsGroebner { d })?;
    let eta = build_hopf(d, n, FormulaKind::IsHopf { d })?;
    let theta = build_smooth(d, n, ctx, FormulaKind::IsSmooth { d })?;
    let names: Vec<String> = eta.frees.iter().map(|f| f.name.clone()).collect();
    let body = Rc::new(Node::And(vec![beta.root, eta.root, theta.root]));
    Ok(Formula {
        kind,
        nvars: n,
        root: Rc::new(Node::Forall(names, body)),
        frees: Vec::new(),
    })
}


// ---- assignments ----

/// A total map from free-variable names to field elements.
#[derive(Clone, Debug)]
pub struct Assignment {
    pub field: FieldSpec,
    values: BTreeMap<String, Coeff>,
}

impl Assignment {
    pub fn new(field: FieldSpec) -> Assignment {
        Assignment {
            field,
            values: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, name: &str, value: Coeff) {
        self.values.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Result<&Coeff> {
        self.values
            .get(name)
            .ok_or_else(|| Error::MissingAssignment(name.to_string()))
    }

    /// Bind the coefficients of a d-bounded polynomial to l1..ld.
    pub fn bind_poly(&mut self, f: &Polynomial, d: u64) -> Result<()> {
        let b = to_bounded(f, d)?;
        for (idx, c) in b.coeffs.iter().enumerate() {
            self.set(&poly_name(idx as u64 + 1), c.clone());
        }
        Ok(())
    }

    /// Bind a basis list to g{i}_l{r}, padding with zero rows up to length d.
    pub fn bind_basis(&mut self, polys: &[Polynomial], d: u64) -> Result<()> {
        if polys.len() as u64 > d {
            return Err(Error::UnboundedTerm {
                rank: polys.len() as u64,
                bound: d,
            });
        }
        for i in 1..=d as usize {
            match polys.get(i - 1) {
                Some(f) => {
                    let b = to_bounded(f, d)?;
                    for (idx, c) in b.coeffs.iter().enumerate() {
                        self.set(&basis_name("g", i, idx as u64 + 1), c.clone());
                    }
                }
                None => {
                    for r in 1..=d {
                        self.set(&basis_name("g", i, r), self.field.zero());
                    }
                }
            }
        }
        Ok(())
    }

    /// Bind a bounded algebra map (prefix L, D, s) given per-variable images
    /// in the r-fold tensor ring.
    pub fn bind_map(
        &mut self,
        prefix: &str,
        images: &[Polynomial],
        d: u64,
        r: u32,
        n: usize,
    ) -> Result<()> {
        for tuple in rank_tuples(d, r) {
            // precompute the tensor monomial for this tuple
            let mut exps = vec![0u32; n * r as usize];
            for (slot, &rank) in tuple.iter().enumerate() {
                let m = monomial_unrank(rank, n)?;
                for (v, &e) in m.0.iter().enumerate() {
                    exps[slot * n + v] += e;
                }
            }
            let mono = Monomial(exps);
            for (var, image) in images.iter().enumerate() {
                self.set(
                    &map_name(prefix, var + 1, &tuple),
                    image.coeff(&mono),
                );
            }
        }
        // reject images with terms outside the grid
        for image in images {
            for (m, _) in image.terms() {
                for slot in 0..r as usize {
                    let part = Monomial(m.0[slot * n..(slot + 1) * n].to_vec());
                    let rank = monomial_rank(&part)?;
                    if rank > d {
                        return Err(Error::UnboundedTerm { rank, bound: d });
                    }
                }
            }
        }
        Ok(())
    }

    /// Bind counit values to e1..en.
    pub fn bind_counit(&mut self, values: &[Coeff]) {
        for (var, c) in values.iter().enumerate() {
            self.set(&map_name("e", var + 1, &[]), c.clone());
        }
    }

    /// Bind a full quadruple: relations as the basis, then the three
    /// structure maps.
    pub fn bind_quadruple(&mut self, h: &HopfQuadruple, d: u64) -> Result<()> {
        self.bind_basis(h.relations(), d)?;
        let n = h.ring().nvars();
        self.bind_map("D", h.comul(), d, 2, n)?;
        self.bind_map("s", h.antipode(), d, 1, n)?;
        self.bind_counit(h.counit());
        Ok(())
    }
}

// ---- evaluation ----

fn eval_term(t: &Term, a: &Assignment) -> Result<Coeff> {
    Ok(match t {
        Term::Zero => a.field.zero(),
        Term::One => a.field.one(),
        Term::Literal(c) => coerce_literal(c, &a.field)?,
        Term::Var(name) => a.get(name)?.clone(),
        Term::Add(x, y) => a.field.add(&eval_term(x, a)?, &eval_term(y, a)?),
        Term::Sub(x, y) => a.field.sub(&eval_term(x, a)?, &eval_term(y, a)?),
        Term::Mul(x, y) => a.field.mul(&eval_term(x, a)?, &eval_term(y, a)?),
    })
}

/// Reinterpret a literal in the assignment's field (parsed literals carry
/// rational values).
fn coerce_literal(c: &Coeff, field: &FieldSpec) -> Result<Coeff> {
    match (c, field) {
        (Coeff::Rational(_), FieldSpec::Rationals)
        | (Coeff::Prime(_), FieldSpec::PrimeField(_))
        | (Coeff::Integer(_), FieldSpec::Integers) => Ok(c.clone()),
        (Coeff::Rational(_) | Coeff::Integer(_), FieldSpec::PrimeField(p)) => {
            field.reduce_mod(c, *p)
        }
        (Coeff::Integer(v), FieldSpec::Rationals) => {
            Ok(Coeff::Rational(num_rational::BigRational::from(v.clone())))
        }
        _ => Err(Error::FieldMismatch(
            "literal".into(),
            field.to_string(),
        )),
    }
}

/// Truth value of an evaluable formula under an assignment.
pub fn evaluate(f: &Formula, a: &Assignment) -> Result<bool> {
    eval_node(&f.root, a)
}

fn eval_node(node: &Node, a: &Assignment) -> Result<bool> {
    match node {
        Node::Eq(l, r) => Ok(eval_term(l, a)? == eval_term(r, a)?),
        Node::Not(x) => Ok(!eval_node(x, a)?),
        Node::And(xs) => {
            for x in xs {
                if !eval_node(x, a)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Node::Or(xs) => {
            for x in xs {
                if eval_node(x, a)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Node::Forall(_, _) => Err(Error::UnsupportedQuantifierShape(
            "universal quantification over field elements".into(),
        )),
        Node::Exists(vars, body) => eval_exists(vars, body, a),
        Node::Member(spec) => eval_member(spec, a),
        Node::StdRep(spec) => eval_std_rep(spec, a),
        Node::DimensionIs(spec) => eval_dimension(spec, a),
        Node::NullityIs(spec) => eval_nullity(spec, a),
    }
}

/// Reassemble a d-bounded polynomial from bound frees.
fn poly_from_assignment(
    names: &dyn Fn(u64) -> String,
    d: u64,
    ring: &Ring,
    a: &Assignment,
) -> Result<Polynomial> {
    let mut f = Polynomial::zero(ring);
    for r in 1..=d {
        let c = a.get(&names(r))?;
        if !c.is_zero() {
            f.add_term(&monomial_unrank(r, ring.nvars())?, c);
        }
    }
    Ok(f)
}

fn data_ring(field: &FieldSpec, n: usize) -> Ring {
    ring_owned(field.clone(), (0..n).map(|i| format!("x{}", i)).collect())
}

/// Solve the bounded membership system for each target: columns are
/// (basis element, cofactor monomial) pairs with in(g_u) m_w <= in(target),
/// rows are the monomials up to in(target).
fn eval_member(spec: &MemberSpec, a: &Assignment) -> Result<bool> {
    let base = data_ring(&a.field, spec.nvars);
    let target_ring = data_ring(&a.field, spec.target_nvars);
    // basis elements, tensored into the target ring in each slot
    let mut divisors: Vec<Polynomial> = Vec::new();
    for i in 1..=spec.d as usize {
        let g = poly_from_assignment(
            &|r| basis_name(&spec.basis_prefix, i, r),
            spec.d,
            &base,
            a,
        )?;
        if g.is_zero() {
            continue;
        }
        for slot in 1..=spec.tensor_power {
            let map: Vec<usize> = (0..spec.nvars)
                .map(|v| (slot - 1) * spec.nvars + v)
                .collect();
            if spec.target_nvars == 0 {
                continue;
            }
            divisors.push(g.embed(&target_ring, &map));
        }
    }
    let ord = MonomialOrder::GradedLex;
    for target_sym in &spec.targets {
        let target = target_sym.materialize(&target_ring, a)?;
        if target.is_zero() {
            continue;
        }
        if spec.target_nvars == 0 {
            // constants: membership in the zero ring means the value is zero
            return Ok(false);
        }
        let lead = target.leading_monomial(&ord).unwrap().clone();
        let lead_rank = monomial_rank(&lead)?;
        // columns
        let mut columns: Vec<Polynomial> = Vec::new();
        for g in &divisors {
            let glead = g.leading_monomial(&ord).unwrap();
            for w in 1..=lead_rank {
                let mw = monomial_unrank(w, spec.target_nvars)?;
                let prod = glead.mul(&mw);
                if monomial_rank(&prod)? <= lead_rank {
                    columns.push(g.mul_term(&mw, &a.field.one()));
                }
            }
        }
        // rows: all monomials with rank <= lead_rank
        let rows = lead_rank as usize;
        let mut matrix = Matrix::zero(&a.field, rows, columns.len());
        for (cidx, col) in columns.iter().enumerate() {
            for (m, c) in col.terms() {
                let r = monomial_rank(m)? as usize - 1;
                if r < rows {
                    matrix.set(r, cidx, c.clone());
                }
            }
        }
        let mut rhs = vec![a.field.zero(); rows];
        for (m, c) in target.terms() {
            let r = monomial_rank(m)? as usize - 1;
            rhs[r] = c.clone();
        }
        if solve(&matrix, &rhs)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Standard-representation check for the S-polynomial of the pinned pair:
/// solvable iff sum(lambda_{u,w} g_u m_w) = S with in(g_u m_w) <= in(S).
fn eval_std_rep(spec: &StdRepSpec, a: &Assignment) -> Result<bool> {
    let ring = data_ring(&a.field, spec.nvars);
    let mut basis: Vec<Polynomial> = Vec::new();
    for i in 1..=spec.d as usize {
        basis.push(poly_from_assignment(
            &|r| basis_name("g", i, r),
            spec.d,
            &ring,
            a,
        )?);
    }
    let ord = MonomialOrder::GradedLex;
    let gi = &basis[spec.i - 1];
    let gj = &basis[spec.j - 1];
    if gi.is_zero() || gj.is_zero() {
        return Ok(false); // the pinning conjuncts already exclude this
    }
    let ra = monomial_rank(gi.leading_monomial(&ord).unwrap())?;
    let rb = monomial_rank(gj.leading_monomial(&ord).unwrap())?;
    if ra != spec.a || rb != spec.b {
        return Ok(false);
    }
    let s = s_polynomial(gi, gj, &ord)?;
    if s.is_zero() {
        return Ok(true);
    }
    let lead = s.leading_monomial(&ord).unwrap().clone();
    let lead_rank = monomial_rank(&lead)?;
    let mut columns: Vec<Polynomial> = Vec::new();
    for g in basis.iter().filter(|g| !g.is_zero()) {
        let glead = g.leading_monomial(&ord).unwrap();
        for w in 1..=lead_rank {
            let mw = monomial_unrank(w, spec.nvars)?;
            if monomial_rank(&glead.mul(&mw))? <= lead_rank {
                columns.push(g.mul_term(&mw, &a.field.one()));
            }
        }
    }
    let rows = lead_rank as usize;
    let mut matrix = Matrix::zero(&a.field, rows, columns.len());
    for (cidx, col) in columns.iter().enumerate() {
        for (m, c) in col.terms() {
            let r = monomial_rank(m)? as usize - 1;
            if r < rows {
                matrix.set(r, cidx, c.clone());
            }
        }
    }
    let mut rhs = vec![a.field.zero(); rows];
    for (m, c) in s.terms() {
        rhs[monomial_rank(m)? as usize - 1] = c.clone();
    }
    Ok(solve(&matrix, &rhs)?.is_some())
}

fn eval_dimension(spec: &DimSpec, a: &Assignment) -> Result<bool> {
    let ring = data_ring(&a.field, spec.nvars);
    let mut lead_supports: Vec<Vec<usize>> = Vec::new();
    for i in 1..=spec.d as usize {
        let g = poly_from_assignment(&|r| basis_name("g", i, r), spec.d, &ring, a)?;
        if let Some(m) = g.leading_monomial(&MonomialOrder::GradedLex) {
            lead_supports.push(m.support());
        }
    }
    let n = spec.nvars;
    let mut best = 0usize;
    for mask in 0..(1u32 << n) {
        let x: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if lead_supports
            .iter()
            .any(|s| s.iter().all(|v| x.contains(v)))
        {
            continue;
        }
        best = best.max(x.len());
    }
    Ok(best as u64 == spec.e)
}

fn eval_nullity(spec: &NullSpec, a: &Assignment) -> Result<bool> {
    let rows: Result<Vec<Vec<Coeff>>> = (1..=spec.d as usize)
        .map(|k| {
            (0..spec.nvars)
                .map(|l| {
                    let mut acc = a.field.zero();
                    for r in 1..=spec.d {
                        let lam = a.get(&basis_name("g", k, r))?;
                        let c = &spec.counit_derivs[r as usize - 1][l];
                        acc = a.field.add(&acc, &a.field.mul(lam, c));
                    }
                    Ok(acc)
                })
                .collect()
        })
        .collect();
    let m = Matrix::from_rows(&a.field, rows?);
    Ok(m.nullity()? as u64 == spec.e)
}

/// Decide an existential block whose body is a conjunction of equations
/// linear in the quantified variables.
fn eval_exists(vars: &[String], body: &Node, a: &Assignment) -> Result<bool> {
    let mut bound: Vec<String> = vars.to_vec();
    let mut inner = body;
    loop {
        match inner {
            Node::Exists(more, next) => {
                bound.extend(more.iter().cloned());
                inner = next;
            }
            _ => break,
        }
    }
    let mut atoms: Vec<(&Term, &Term)> = Vec::new();
    collect_atoms(inner, &mut atoms)?;
    let names: Vec<&String> = bound.iter().collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (l, r) in atoms {
        // l - r = 0, linear in the bound variables
        let lin_l = linearize(l, &bound, a)?;
        let lin_r = linearize(r, &bound, a)?;
        let mut row = vec![a.field.zero(); names.len()];
        for (idx, name) in names.iter().enumerate() {
            let cl = lin_l.1.get(*name).cloned().unwrap_or_else(|| a.field.zero());
            let cr = lin_r.1.get(*name).cloned().unwrap_or_else(|| a.field.zero());
            row[idx] = a.field.sub(&cl, &cr);
        }
        rows.push(row);
        rhs.push(a.field.sub(&lin_r.0, &lin_l.0));
    }
    let matrix = Matrix::from_rows(&a.field, rows);
    Ok(solve(&matrix, &rhs)?.is_some())
}

fn collect_atoms<'n>(node: &'n Node, out: &mut Vec<(&'n Term, &'n Term)>) -> Result<()> {
    match node {
        Node::Eq(l, r) => {
            out.push((l, r));
            Ok(())
        }
        Node::And(xs) => {
            for x in xs {
                collect_atoms(x, out)?;
            }
            Ok(())
        }
        _ => Err(Error::UnsupportedQuantifierShape(
            "existential body must be a conjunction of equations".into(),
        )),
    }
}

/// Split a term into (constant, linear coefficients) over the bound names;
/// products of two bound-variable parts are rejected.
fn linearize(
    t: &Term,
    bound: &[String],
    a: &Assignment,
) -> Result<(Coeff, BTreeMap<String, Coeff>)> {
    let field = &a.field;
    Ok(match t {
        Term::Zero => (field.zero(), BTreeMap::new()),
        Term::One => (field.one(), BTreeMap::new()),
        Term::Literal(c) => (coerce_literal(c, field)?, BTreeMap::new()),
        Term::Var(name) => {
            if bound.contains(name) {
                let mut m = BTreeMap::new();
                m.insert(name.clone(), field.one());
                (field.zero(), m)
            } else {
                (a.get(name)?.clone(), BTreeMap::new())
            }
        }
        Term::Add(x, y) => {
            let (cx, mx) = linearize(x, bound, a)?;
            let (cy, my) = linearize(y, bound, a)?;
            let mut m = mx;
            for (k, v) in my {
                let cur = m.remove(&k).unwrap_or_else(|| field.zero());
                m.insert(k, field.add(&cur, &v));
            }
            (field.add(&cx, &cy), m)
        }
        Term::Sub(x, y) => {
            let (cx, mx) = linearize(x, bound, a)?;
            let (cy, my) = linearize(y, bound, a)?;
            let mut m = mx;
            for (k, v) in my {
                let cur = m.remove(&k).unwrap_or_else(|| field.zero());
                m.insert(k, field.sub(&cur, &v));
            }
            (field.sub(&cx, &cy), m)
        }
        Term::Mul(x, y) => {
            let (cx, mx) = linearize(x, bound, a)?;
            let (cy, my) = linearize(y, bound, a)?;
            if !mx.is_empty() && !my.is_empty() {
                return Err(Error::UnsupportedQuantifierShape(
                    "product of two quantified parts".into(),
                ));
            }
            let constant = field.mul(&cx, &cy);
            let (scalar, lin) = if mx.is_empty() { (cx, my) } else { (cy, mx) };
            let scaled = lin
                .into_iter()
                .map(|(k, v)| (k, field.mul(&scalar, &v)))
                .collect();
            (constant, scaled)
        }
    })
}

// ---- printing ----

/// Fully parenthesized ASCII rendering: atoms as (t=u), conjunction ` & `,
/// disjunction ` | `, negation `~`, quantifier prefixes `(exists v)` and
/// `(forall v)`. Structured blocks are expanded into explicit formulas.
pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    print_node(&f.root, &mut out);
    out
}

fn print_node(node: &Node, out: &mut String) {
    match node {
        Node::Eq(l, r) => {
            out.push('(');
            print_term(l, out, false);
            out.push('=');
            print_term(r, out, false);
            out.push(')');
        }
        Node::Not(x) => {
            out.push('~');
            print_grouped(x, out);
        }
        Node::And(xs) => {
            if xs.is_empty() {
                out.push_str("(0=0)");
                return;
            }
            if xs.len() == 1 {
                print_node(&xs[0], out);
                return;
            }
            out.push('(');
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    out.push_str(" & ");
                }
                print_grouped(x, out);
            }
            out.push(')');
        }
        Node::Or(xs) => {
            if xs.is_empty() {
                out.push_str("~(0=0)");
                return;
            }
            if xs.len() == 1 {
                print_node(&xs[0], out);
                return;
            }
            out.push('(');
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    out.push_str(" | ");
                }
                print_grouped(x, out);
            }
            out.push(')');
        }
        Node::Exists(vars, body) => {
            for v in vars {
                let _ = write!(out, "(exists {})", v);
            }
            print_grouped(body, out);
        }
        Node::Forall(vars, body) => {
            for v in vars {
                let _ = write!(out, "(forall {})", v);
            }
            print_grouped(body, out);
        }
        Node::Member(spec) => print_node(&expand_member(spec), out),
        Node::StdRep(spec) => print_node(&expand_std_rep(spec), out),
        Node::DimensionIs(spec) => print_node(&expand_dimension(spec), out),
        Node::NullityIs(spec) => print_node(&expand_nullity(spec), out),
    }
}

fn print_grouped(node: &Node, out: &mut String) {
    // atoms, negations and quantifier prefixes already read unambiguously
    match node {
        Node::Eq(_, _) | Node::Not(_) => print_node(node, out),
        Node::And(xs) | Node::Or(xs) if xs.len() != 1 => print_node(node, out),
        _ => {
            let mut inner = String::new();
            print_node(node, &mut inner);
            if inner.starts_with('(') {
                out.push_str(&inner);
            } else {
                out.push('(');
                out.push_str(&inner);
                out.push(')');
            }
        }
    }
}

fn print_term(t: &Term, out: &mut String, in_product: bool) {
    match t {
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Literal(c) => {
            let lit = c.to_literal();
            if lit.starts_with('-') {
                let _ = write!(out, "(0-{})", &lit[1..]);
            } else {
                out.push_str(&lit);
            }
        }
        Term::Var(v) => out.push_str(v),
        Term::Add(x, y) => {
            if in_product {
                out.push('(');
            }
            print_term(x, out, false);
            out.push('+');
            print_term(y, out, false);
            if in_product {
                out.push(')');
            }
        }
        Term::Sub(x, y) => {
            if in_product {
                out.push('(');
            }
            print_term(x, out, false);
            out.push('-');
            // right operand of - binds tighter
            match **y {
                Term::Add(_, _) | Term::Sub(_, _) => {
                    out.push('(');
                    print_term(y, out, false);
                    out.push(')');
                }
                _ => print_term(y, out, true),
            }
            if in_product {
                out.push(')');
            }
        }
        Term::Mul(x, y) => {
            print_term(x, out, true);
            out.push('*');
            print_term(y, out, true);
        }
    }
}

// ---- structural expansion of the opaque blocks ----

/// Expand a membership block into an explicit existential linear system over
/// the full structural column range (cofactor ranks up to the grid size).
fn expand_member(spec: &MemberSpec) -> Node {
    let n = spec.target_nvars;
    if n == 0 {
        // counit-style: the targets are scalars that must vanish
        let eqs: Vec<Rc<Node>> = spec
            .targets
            .iter()
            .map(|sym| {
                let t = sym
                    .coeffs
                    .values()
                    .cloned()
                    .reduce(|a, b| Rc::new(Term::Add(a, b)))
                    .unwrap_or_else(zero_t);
                Rc::new(Node::Eq(t, zero_t()))
            })
            .collect();
        return Node::And(eqs);
    }
    // structural ceilings: cofactor monomials up to the largest target
    // monomial, and equation rows up to the largest possible product of a
    // slot-embedded basis monomial with a cofactor monomial
    let max_target_rank = spec
        .targets
        .iter()
        .flat_map(|s| s.coeffs.keys())
        .map(|m| monomial_rank(m).unwrap_or(u64::MAX))
        .max()
        .unwrap_or(1);
    let mut row_ceiling = max_target_rank;
    for slot in 1..=spec.tensor_power {
        for br in 1..=spec.d {
            let Ok(base) = monomial_unrank(br, spec.nvars) else { continue };
            let mut exps = vec![0u32; n];
            for (v, &e) in base.0.iter().enumerate() {
                exps[(slot - 1) * spec.nvars + v] = e;
            }
            let embedded = Monomial(exps);
            for w in 1..=max_target_rank {
                let Ok(mw) = monomial_unrank(w, n) else { continue };
                if let Ok(rank) = monomial_rank(&embedded.mul(&mw)) {
                    row_ceiling = row_ceiling.max(rank);
                }
            }
        }
    }
    let mut blocks: Vec<Rc<Node>> = Vec::new();
    for (tidx, sym) in spec.targets.iter().enumerate() {
        let mut bound_names: Vec<String> = Vec::new();
        // columns: (basis element, slot, cofactor rank)
        let mut columns: Vec<(usize, usize, u64)> = Vec::new();
        for u in 1..=spec.d as usize {
            for slot in 1..=spec.tensor_power {
                for w in 1..=max_target_rank {
                    columns.push((u, slot, w));
                    bound_names.push(format!("q{}_{}_{}_{}", tidx + 1, u, slot, w));
                }
            }
        }
        // equations: one per monomial up to the product ceiling
        let mut eqs: Vec<Rc<Node>> = Vec::new();
        for rho in 1..=row_ceiling {
            let m_rho = match monomial_unrank(rho, n) {
                Ok(m) => m,
                Err(_) => break,
            };
            let mut lhs: Option<Rc<Term>> = None;
            for (cidx, (u, slot, w)) in columns.iter().enumerate() {
                let Ok(mw) = monomial_unrank(*w, n) else { continue };
                let Some(quot) = mw.div_into(&m_rho) else {
                    continue;
                };
                // the quotient must be a slot monomial of the basis element
                let base = Monomial(
                    quot.0[(slot - 1) * spec.nvars..slot * spec.nvars].to_vec(),
                );
                let outside: u32 = quot
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i < (slot - 1) * spec.nvars || *i >= slot * spec.nvars)
                    .map(|(_, &e)| e)
                    .sum();
                if outside > 0 {
                    continue;
                }
                let Ok(base_rank) = monomial_rank(&base) else {
                    continue;
                };
                if base_rank > spec.d {
                    continue;
                }
                let term = Rc::new(Term::Mul(
                    var_term(bound_names[cidx].clone()),
                    var_term(basis_name(&spec.basis_prefix, *u, base_rank)),
                ));
                lhs = Some(match lhs {
                    None => term,
                    Some(acc) => Rc::new(Term::Add(acc, term)),
                });
            }
            let rhs = sym.coeffs.get(&m_rho).cloned().unwrap_or_else(zero_t);
            eqs.push(Rc::new(Node::Eq(lhs.unwrap_or_else(zero_t), rhs)));
        }
        blocks.push(Rc::new(Node::Exists(
            bound_names,
            Rc::new(Node::And(eqs)),
        )));
    }
    Node::And(blocks)
}

fn expand_std_rep(spec: &StdRepSpec) -> Node {
    // S-polynomial coefficients as terms over the pinned leads, then the
    // same existential machinery as a membership block
    let n = spec.nvars;
    let ma = monomial_unrank(spec.a, n).expect("built in range");
    let mb = monomial_unrank(spec.b, n).expect("built in range");
    let g = ma.gcd(&mb);
    let ca = g.div_into(&ma).unwrap(); // m_ij monomial part
    let cb = g.div_into(&mb).unwrap(); // m_ji monomial part
    let mut s_sym = SymPoly::zero(n);
    // m_ji g_i - m_ij g_j with coefficients lc_j, lc_i
    for r in 1..=spec.d {
        let m = monomial_unrank(r, n).expect("in range");
        s_sym.add_term(
            m.mul(&cb),
            Rc::new(Term::Mul(
                var_term(basis_name("g", spec.j, spec.b)),
                var_term(basis_name("g", spec.i, r)),
            )),
        );
        let m2 = monomial_unrank(r, n).expect("in range");
        s_sym.add_term(
            m2.mul(&ca),
            Rc::new(Term::Sub(
                zero_t(),
                Rc::new(Term::Mul(
                    var_term(basis_name("g", spec.i, spec.a)),
                    var_term(basis_name("g", spec.j, r)),
                )),
            )),
        );
    }
    let member = MemberSpec {
        nvars: n,
        d: spec.d,
        basis_prefix: "g".into(),
        targets: vec![s_sym],
        target_nvars: n,
        tensor_power: 1,
    };
    expand_member(&member)
}

fn expand_dimension(spec: &DimSpec) -> Node {
    let n = spec.nvars;
    let d = spec.d;
    let mut lists: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for l in &lists {
            for a in 0..=d {
                let mut ll = l.clone();
                ll.push(a);
                next.push(ll);
            }
        }
        lists = next;
    }
    let mut cases: Vec<Rc<Node>> = Vec::new();
    for list in lists {
        let supports: Vec<Vec<usize>> = list
            .iter()
            .filter(|&&a| a != 0)
            .map(|&a| monomial_unrank(a, n).expect("in range").support())
            .collect();
        let mut best = 0usize;
        for mask in 0..(1u32 << n) {
            let x: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            if supports.iter().any(|s| s.iter().all(|v| x.contains(v))) {
                continue;
            }
            best = best.max(x.len());
        }
        if best as u64 != spec.e {
            continue;
        }
        let conj: Vec<Rc<Node>> = list
            .iter()
            .enumerate()
            .map(|(idx, &a)| {
                let i = idx + 1;
                if a == 0 {
                    zero_node(&|r| basis_name("g", i, r), d)
                } else {
                    initial_node(&|r| basis_name("g", i, r), a, d)
                }
            })
            .collect();
        cases.push(Rc::new(Node::And(conj)));
    }
    Node::Or(cases)
}

fn expand_nullity(spec: &NullSpec) -> Node {
    let n = spec.nvars;
    let d = spec.d as usize;
    // entries J_{k,l} as terms
    let entry = |k: usize, l: usize| -> Rc<Term> {
        let mut acc: Option<Rc<Term>> = None;
        for r in 1..=spec.d {
            let c = &spec.counit_derivs[r as usize - 1][l];
            if c.is_zero() {
                continue;
            }
            let prod = Rc::new(Term::Mul(
                var_term(basis_name("g", k, r)),
                Rc::new(Term::Literal(c.clone())),
            ));
            acc = Some(match acc {
                None => prod,
                Some(t) => Rc::new(Term::Add(t, prod)),
            });
        }
        acc.unwrap_or_else(zero_t)
    };
    // nullity e <=> all (n-e+1)-minors vanish and some (n-e)-minor is nonzero
    let rank = n as i64 - spec.e as i64;
    if rank < 0 {
        return Node::Or(Vec::new()); // impossible
    }
    let rank = rank as usize;
    let vanish = minors_vanish(&entry, d, n, rank + 1);
    if rank == 0 {
        return vanish;
    }
    let some_nonzero = Node::Not(Rc::new(minors_vanish(&entry, d, n, rank)));
    Node::And(vec![Rc::new(vanish), Rc::new(some_nonzero)])
}

/// Conjunction: every k x k minor of the d x n matrix vanishes.
fn minors_vanish(entry: &dyn Fn(usize, usize) -> Rc<Term>, d: usize, n: usize, k: usize) -> Node {
    if k > d || k > n {
        return Node::And(Vec::new()); // no minors: vacuously true
    }
    let rows = combinations_of(d, k);
    let cols = combinations_of(n, k);
    let mut eqs = Vec::new();
    for rs in &rows {
        for cs in &cols {
            let det = determinant_term(entry, rs, cs);
            eqs.push(Rc::new(Node::Eq(det, zero_t())));
        }
    }
    Node::And(eqs)
}

fn combinations_of(n: usize, k: usize) -> Vec<Vec<usize>> {
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

/// Leibniz expansion of a minor as a term (desk-scale k).
fn determinant_term(
    entry: &dyn Fn(usize, usize) -> Rc<Term>,
    rows: &[usize],
    cols: &[usize],
) -> Rc<Term> {
    let k = rows.len();
    let mut pos: Option<Rc<Term>> = None;
    let mut neg: Option<Rc<Term>> = None;
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut sign = 0usize;
        for i in 0..k {
            for j in i + 1..k {
                if perm[i] > perm[j] {
                    sign += 1;
                }
            }
        }
        let mut prod: Option<Rc<Term>> = None;
        for (i, &p) in perm.iter().enumerate() {
            let e = entry(rows[i] + 1, cols[p]);
            prod = Some(match prod {
                None => e,
                Some(t) => Rc::new(Term::Mul(t, e)),
            });
        }
        let prod = prod.unwrap_or_else(|| Rc::new(Term::One));
        if sign.is_multiple_of(2) {
            pos = Some(match pos {
                None => prod,
                Some(t) => Rc::new(Term::Add(t, prod)),
            });
        } else {
            neg = Some(match neg {
                None => prod,
                Some(t) => Rc::new(Term::Add(t, prod)),
            });
        }
        // next permutation
        if !next_permutation(&mut perm) {
            break;
        }
    }
    match (pos, neg) {
        (Some(p), Some(m)) => Rc::new(Term::Sub(p, m)),
        (Some(p), None) => p,
        (None, Some(m)) => Rc::new(Term::Sub(zero_t(), m)),
        (None, None) => zero_t(),
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

// ---- parsing ----

/// Parse the ASCII rendering back into a (generic) formula.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = FormulaParser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let root = p.parse_or()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(Error::Parse {
            pos: p.pos,
            msg: "trailing input".into(),
        });
    }
    let mut frees = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    collect_frees(&root, &mut Vec::new(), &mut seen);
    for name in seen {
        frees.push(FreeVar {
            name,
            object: SlotObject::Opaque,
        });
    }
    Ok(Formula {
        kind: FormulaKind::Parsed,
        nvars: 0,
        root,
        frees,
    })
}

fn collect_frees(node: &Node, bound: &mut Vec<String>, out: &mut std::collections::BTreeSet<String>) {
    match node {
        Node::Eq(l, r) => {
            collect_term_frees(l, bound, out);
            collect_term_frees(r, bound, out);
        }
        Node::Not(x) => collect_frees(x, bound, out),
        Node::And(xs) | Node::Or(xs) => {
            for x in xs {
                collect_frees(x, bound, out);
            }
        }
        Node::Exists(vs, body) | Node::Forall(vs, body) => {
            let depth = bound.len();
            bound.extend(vs.iter().cloned());
            collect_frees(body, bound, out);
            bound.truncate(depth);
        }
        _ => {}
    }
}

fn collect_term_frees(t: &Term, bound: &[String], out: &mut std::collections::BTreeSet<String>) {
    match t {
        Term::Var(v) => {
            if !bound.contains(v) {
                out.insert(v.clone());
            }
        }
        Term::Add(x, y) | Term::Sub(x, y) | Term::Mul(x, y) => {
            collect_term_frees(x, bound, out);
            collect_term_frees(y, bound, out);
        }
        _ => {}
    }
}

struct FormulaParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> FormulaParser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_or(&mut self) -> Result<Rc<Node>> {
        let mut parts = vec![self.parse_and()?];
        loop {
            self.skip_ws();
            if self.eat(b'|') {
                parts.push(self.parse_and()?);
            } else {
                break;
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Rc::new(Node::Or(parts))
        })
    }

    fn parse_and(&mut self) -> Result<Rc<Node>> {
        let mut parts = vec![self.parse_unary()?];
        loop {
            self.skip_ws();
            if self.eat(b'&') {
                parts.push(self.parse_unary()?);
            } else {
                break;
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Rc::new(Node::And(parts))
        })
    }

    fn parse_unary(&mut self) -> Result<Rc<Node>> {
        self.skip_ws();
        if self.eat(b'~') {
            return Ok(Rc::new(Node::Not(self.parse_unary()?)));
        }
        if self.peek() != Some(b'(') {
            return self.err("expected '(', '~'");
        }
        // try a quantifier prefix: (exists v) or (forall v)
        let save = self.pos;
        self.pos += 1;
        self.skip_ws();
        let word = self.peek_word();
        if word == "exists" || word == "forall" {
            self.pos += word.len();
            self.skip_ws();
            let var = self.parse_ident()?;
            self.skip_ws();
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            let body = self.parse_unary()?;
            let node = if word == "exists" {
                Node::Exists(vec![var], body)
            } else {
                Node::Forall(vec![var], body)
            };
            return Ok(Rc::new(node));
        }
        self.pos = save;
        self.parse_paren()
    }

    fn peek_word(&self) -> String {
        let mut end = self.pos;
        while end < self.bytes.len() && self.bytes[end].is_ascii_alphabetic() {
            end += 1;
        }
        String::from_utf8_lossy(&self.bytes[self.pos..end]).into_owned()
    }

    /// A parenthesized group: either a compound formula or a single atom.
    fn parse_paren(&mut self) -> Result<Rc<Node>> {
        if !self.eat(b'(') {
            return self.err("expected '('");
        }
        // parse as a formula first; if that leaves an '=' we have an atom
        let save = self.pos;
        if let Ok(inner) = self.try_formula_group() {
            return Ok(inner);
        }
        self.pos = save;
        let l = self.parse_term()?;
        self.skip_ws();
        if !self.eat(b'=') {
            return self.err("expected '='");
        }
        let r = self.parse_term()?;
        self.skip_ws();
        if !self.eat(b')') {
            return self.err("expected ')'");
        }
        Ok(Rc::new(Node::Eq(l, r)))
    }

    fn try_formula_group(&mut self) -> Result<Rc<Node>> {
        // heuristically: a formula group starts with '(' or '~'
        self.skip_ws();
        match self.peek() {
            Some(b'(') | Some(b'~') => {}
            _ => return self.err("not a formula group"),
        }
        let inner = self.parse_or()?;
        self.skip_ws();
        if !self.eat(b')') {
            return self.err("expected ')'");
        }
        Ok(inner)
    }

    fn parse_ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'\'')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an identifier");
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn parse_term(&mut self) -> Result<Rc<Term>> {
        let mut acc = self.parse_product()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = Rc::new(Term::Add(acc, self.parse_product()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = Rc::new(Term::Sub(acc, self.parse_product()?));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_product(&mut self) -> Result<Rc<Term>> {
        let mut acc = self.parse_factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                acc = Rc::new(Term::Mul(acc, self.parse_factor()?));
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Rc<Term>> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let t = self.parse_term()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(t)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(zero_t())
            }
            Some(b'1')
                if self
                    .bytes
                    .get(self.pos + 1)
                    .is_none_or(|c| !c.is_ascii_digit() && *c != b'/') =>
            {
                self.pos += 1;
                Ok(Rc::new(Term::One))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let num: u64 = std::str::from_utf8(&self.bytes[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| Error::Parse {
                        pos: start,
                        msg: "integer too large".into(),
                    })?;
                if self.eat(b'/') {
                    let dstart = self.pos;
                    while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let den: u64 = std::str::from_utf8(&self.bytes[dstart..self.pos])
                        .unwrap()
                        .parse()
                        .map_err(|_| Error::Parse {
                            pos: dstart,
                            msg: "integer too large".into(),
                        })?;
                    let f = FieldSpec::Rationals;
                    let v = f.div(&f.from_i64(num as i64), &f.from_i64(den as i64))?;
                    return Ok(Rc::new(Term::Literal(v)));
                }
                Ok(Rc::new(Term::Literal(
                    FieldSpec::Rationals.from_i64(num as i64),
                )))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                Ok(var_term(self.parse_ident()?))
            }
            _ => self.err("expected a term"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, dimension, is_groebner, member};
    use crate::hopf::{catalog, is_smooth, lie_dimension};
    use crate::poly::{parse_poly, ring};

    fn qring1() -> Ring {
        ring(FieldSpec::Rationals, &["x"])
    }

    fn qring2() -> Ring {
        ring(FieldSpec::Rationals, &["x", "y"])
    }

    #[test]
    fn initial_term_formula() {
        // f = x over k[x] is (0, 1, 0) as a 3-bounded tuple; its lead is m_2
        let f3 = build(FormulaKind::InitialTermIs { e: 2, d: 3 }, 1).unwrap();
        let r = qring1();
        let x = parse_poly("x", &r).unwrap();
        let mut a = Assignment::new(FieldSpec::Rationals);
        a.bind_poly(&x, 3).unwrap();
        assert!(evaluate(&f3, &a).unwrap());

        let wrong = build(FormulaKind::InitialTermIs { e: 3, d: 3 }, 1).unwrap();
        assert!(!evaluate(&wrong, &a).unwrap());

        assert!(build(FormulaKind::InitialTermIs { e: 0, d: 3 }, 1).is_err());
        assert!(build(FormulaKind::InitialTermIs { e: 4, d: 3 }, 1).is_err());
    }

    #[test]
    fn char_formula_print_and_eval() {
        let psi2 = build(FormulaKind::CharacteristicIs { p: 2 }, 0).unwrap();
        assert_eq!(print_formula(&psi2), "(1+1=0)");
        let f2 = Assignment::new(FieldSpec::prime_field(2).unwrap());
        assert!(evaluate(&psi2, &f2).unwrap());
        let q = Assignment::new(FieldSpec::Rationals);
        assert!(!evaluate(&psi2, &q).unwrap());

        let psi5 = build(FormulaKind::CharacteristicIs { p: 5 }, 0).unwrap();
        assert!(evaluate(&psi5, &Assignment::new(FieldSpec::prime_field(5).unwrap())).unwrap());
        assert!(!evaluate(&psi5, &Assignment::new(FieldSpec::prime_field(3).unwrap())).unwrap());
        assert!(psi2.free_variables().is_empty());
    }

    #[test]
    fn member_formula_trivial_cases() {
        let d = 3u64;
        let iota = build(FormulaKind::IdealMember { d }, 1).unwrap();
        let r = qring1();
        let basis = [parse_poly("x", &r).unwrap()];
        let mut a = Assignment::new(FieldSpec::Rationals);
        a.bind_basis(&basis, d).unwrap();
        a.bind_poly(&Polynomial::zero(&r), d).unwrap();
        // zero is in every ideal
        assert!(evaluate(&iota, &a).unwrap());

        let mut b = Assignment::new(FieldSpec::Rationals);
        b.bind_basis(&basis, d).unwrap();
        b.bind_poly(&parse_poly("x^2", &r).unwrap(), d).unwrap();
        assert!(evaluate(&iota, &b).unwrap());

        let mut c = Assignment::new(FieldSpec::Rationals);
        c.bind_basis(&[parse_poly("x^2", &r).unwrap()], d).unwrap();
        c.bind_poly(&parse_poly("x", &r).unwrap(), d).unwrap();
        assert!(!evaluate(&iota, &c).unwrap());
    }

    #[test]
    fn groebner_formula_agrees_on_examples() {
        let d = 6u64;
        let beta = build(FormulaKind::IsGroebner { d }, 2).unwrap();
        let r = qring2();
        let ord = MonomialOrder::GradedLex;
        for (gens, _note) in [
            (vec!["x"], "singleton"),
            (vec!["x + y", "x"], "needs reduction"),
            (vec!["x", "y"], "coprime leads"),
            (vec!["x", "x"], "repeated element"),
            (vec!["0", "0"], "zeros"),
            (vec!["x^2 + y^2", "x*y"], "not a basis without y^3"),
        ] {
            let polys: Vec<Polynomial> =
                gens.iter().map(|t| parse_poly(t, &r).unwrap()).collect();
            let mut a = Assignment::new(FieldSpec::Rationals);
            a.bind_basis(&polys, d).unwrap();
            let direct = is_groebner(&polys, &ord).unwrap();
            let via_formula = evaluate(&beta, &a).unwrap();
            assert_eq!(via_formula, direct, "disagreement on {:?}", gens);
        }
        // evaluate(beta) on a singleton basis is trivially true
        let mut single = Assignment::new(FieldSpec::Rationals);
        single
            .bind_basis(&[parse_poly("x", &r).unwrap()], d)
            .unwrap();
        assert!(evaluate(&beta, &single).unwrap());
    }

    #[test]
    fn dimension_formula_agrees() {
        let d = 6u64;
        let r = qring2();
        for (gens, expect_dim) in [
            (vec!["x*y"], 1i64),
            (vec!["x", "y"], 0),
            (vec!["x"], 1),
        ] {
            let polys: Vec<Polynomial> =
                gens.iter().map(|t| parse_poly(t, &r).unwrap()).collect();
            let gb = buchberger(&polys, &MonomialOrder::GradedLex).unwrap();
            assert_eq!(dimension(&gb).unwrap(), expect_dim);
            for e in 0..=2u64 {
                let delta = build(FormulaKind::DimensionIs { e, d }, 2).unwrap();
                let mut a = Assignment::new(FieldSpec::Rationals);
                a.bind_basis(gb.generators(), d).unwrap();
                assert_eq!(
                    evaluate(&delta, &a).unwrap(),
                    e as i64 == expect_dim,
                    "gens {:?} e {}",
                    gens,
                    e
                );
            }
        }
    }

    #[test]
    fn nullity_and_smooth_formulas_agree_with_quadruples() {
        // mu_2 over Q: relation x^2 - 1 needs d = 3
        let d = 3u64;
        for field in [
            FieldSpec::Rationals,
            FieldSpec::prime_field(2).unwrap(),
            FieldSpec::prime_field(5).unwrap(),
        ] {
            let h = catalog::roots_of_unity(2, field.clone());
            let ctx = FormulaContext {
                field: field.clone(),
                counit: Some(h.counit().to_vec()),
            };
            let lie = lie_dimension(&h).unwrap();
            for e in 0..=1u64 {
                let tau =
                    build_with_context(FormulaKind::LieDimensionIs { e, d }, 1, &ctx).unwrap();
                let mut a = Assignment::new(field.clone());
                a.bind_basis(h.relations(), d).unwrap();
                assert_eq!(
                    evaluate(&tau, &a).unwrap(),
                    e as i64 == lie,
                    "field {} e {}",
                    field,
                    e
                );
            }
            let theta = build_with_context(FormulaKind::IsSmooth { d }, 1, &ctx).unwrap();
            let mut a = Assignment::new(field.clone());
            a.bind_basis(h.relations(), d).unwrap();
            let report = is_smooth(&h).unwrap();
            assert_eq!(evaluate(&theta, &a).unwrap(), report.smooth);
        }
    }

    #[test]
    fn hopf_formula_accepts_mu2_and_rejects_wrong_comul() {
        let d = 3u64;
        let eta = build(FormulaKind::IsHopf { d }, 1).unwrap();
        let h = catalog::roots_of_unity(2, FieldSpec::Rationals);
        let mut a = Assignment::new(FieldSpec::Rationals);
        a.bind_quadruple(&h, d).unwrap();
        assert!(evaluate(&eta, &a).unwrap());

        // break the comultiplication: additive law on a multiplicative group
        let r = h.ring().clone();
        let t2 = crate::hopf::tensor_ring(&r, 2);
        let bad = crate::hopf::HopfQuadruple::new(
            r.clone(),
            h.relations().to_vec(),
            vec![parse_poly("x' + x''", &t2).unwrap()],
            h.antipode().to_vec(),
            h.counit().to_vec(),
        )
        .unwrap();
        let mut b = Assignment::new(FieldSpec::Rationals);
        b.bind_quadruple(&bad, d).unwrap();
        assert!(!evaluate(&eta, &b).unwrap());
        assert!(!bad.is_hopf().unwrap());
    }

    #[test]
    fn factors_through_formula_matches_direct_check() {
        let d = 3u64;
        let zeta = build(FormulaKind::FactorsThrough { d, r: 2 }, 1).unwrap();
        let r = qring1();
        let rel = [parse_poly("x^2 - 1", &r).unwrap()];
        let t2 = crate::hopf::tensor_ring(&r, 2);
        for (images, expect) in [
            (vec![parse_poly("x'*x''", &t2).unwrap()], true),
            (vec![parse_poly("x' + x''", &t2).unwrap()], false),
        ] {
            let mut a = Assignment::new(FieldSpec::Rationals);
            a.bind_basis(&rel, d).unwrap();
            a.bind_map("L", &images, d, 2, 1).unwrap();
            let direct = crate::hopf::factors_through(
                &crate::hopf::AlgebraMap::Tensor {
                    power: 2,
                    images: &images,
                },
                &rel,
            )
            .unwrap();
            assert_eq!(direct, expect);
            assert_eq!(evaluate(&zeta, &a).unwrap(), expect);
        }
    }

    #[test]
    fn counit_factor_formula_at_tensor_power_zero() {
        let d = 3u64;
        let zeta0 = build(FormulaKind::FactorsThrough { d, r: 0 }, 1).unwrap();
        let r = qring1();
        let rel = [parse_poly("x^2 - 1", &r).unwrap()];
        for (value, expect) in [(1i64, true), (2, false), (-1, true)] {
            let mut a = Assignment::new(FieldSpec::Rationals);
            a.bind_basis(&rel, d).unwrap();
            a.set("L1", FieldSpec::Rationals.from_i64(value));
            assert_eq!(evaluate(&zeta0, &a).unwrap(), expect, "counit {}", value);
            let direct = crate::hopf::factors_through(
                &crate::hopf::AlgebraMap::Counit(&[FieldSpec::Rationals.from_i64(value)]),
                &rel,
            )
            .unwrap();
            assert_eq!(direct, expect);
        }
    }

    #[test]
    fn free_variable_counts_match_the_ledger() {
        let n = 2usize;
        let d = 3u64;
        let count = |k: FormulaKind| build(k, n).unwrap().free_variables().len() as u64;
        assert_eq!(count(FormulaKind::InitialTermIs { e: 1, d }), d);
        assert_eq!(count(FormulaKind::IsGroebner { d }), d * d);
        assert_eq!(count(FormulaKind::DimensionIs { e: 1, d }), d * d);
        assert_eq!(count(FormulaKind::IdealMember { d }), d * d + d);
        for r in 0..=3u32 {
            assert_eq!(
                count(FormulaKind::FactorsThrough { d, r }),
                n as u64 * d.pow(r) + d * d,
                "zeta ledger at r = {}",
                r
            );
        }
        assert_eq!(
            count(FormulaKind::IsHopf { d }),
            d * d + n as u64 * (d * d + d + 1)
        );
        assert_eq!(count(FormulaKind::LieDimensionIs { e: 1, d }), d * d);
        assert_eq!(count(FormulaKind::IsSmooth { d }), d * d);
        assert_eq!(count(FormulaKind::CharacteristicIs { p: 7 }), 0);
        assert_eq!(count(FormulaKind::AllBoundedSmooth { d: 2 }), 0);
    }

    #[test]
    fn sentence_is_printable_but_not_evaluable() {
        let phi = build(FormulaKind::AllBoundedSmooth { d: 2 }, 1).unwrap();
        let text = print_formula(&phi);
        assert!(text.starts_with("(forall g1_l1)"));
        let a = Assignment::new(FieldSpec::Rationals);
        assert!(matches!(
            evaluate(&phi, &a),
            Err(Error::UnsupportedQuantifierShape(_))
        ));
    }

    #[test]
    fn reparse_identity_on_the_corpus() {
        let corpus: Vec<Formula> = vec![
            build(FormulaKind::CharacteristicIs { p: 2 }, 0).unwrap(),
            build(FormulaKind::CharacteristicIs { p: 5 }, 0).unwrap(),
            build(FormulaKind::InitialTermIs { e: 2, d: 3 }, 1).unwrap(),
            build(FormulaKind::InitialTermIs { e: 2, d: 2 }, 2).unwrap(),
            build(FormulaKind::DimensionIs { e: 1, d: 2 }, 2).unwrap(),
            build(FormulaKind::IdealMember { d: 2 }, 1).unwrap(),
            build(FormulaKind::IsGroebner { d: 2 }, 1).unwrap(),
            build(FormulaKind::LieDimensionIs { e: 1, d: 2 }, 2).unwrap(),
        ];
        for f in corpus {
            let printed = print_formula(&f);
            let parsed = parse_formula(&printed).unwrap();
            let reprinted = print_formula(&parsed);
            assert_eq!(printed, reprinted, "kind {:?}", f.kind);
        }
    }

    #[test]
    fn parsed_formulas_evaluate_like_structured_ones() {
        let r = qring1();
        let d = 3u64;
        let iota = build(FormulaKind::IdealMember { d }, 1).unwrap();
        let parsed = parse_formula(&print_formula(&iota)).unwrap();
        for (basis_texts, f_text) in [
            (vec!["x"], "x^2"),
            (vec!["x^2"], "x"),
            (vec!["x^2 - 1"], "x^2 - 1"),
            (vec!["x^2 - 1"], "x - 1"),
        ] {
            let basis: Vec<Polynomial> = basis_texts
                .iter()
                .map(|t| parse_poly(t, &r).unwrap())
                .collect();
            let f = parse_poly(f_text, &r).unwrap();
            let mut a = Assignment::new(FieldSpec::Rationals);
            a.bind_basis(&basis, d).unwrap();
            a.bind_poly(&f, d).unwrap();
            let structured = evaluate(&iota, &a).unwrap();
            let generic = evaluate(&parsed, &a).unwrap();
            assert_eq!(structured, generic, "basis {:?} f {}", basis_texts, f_text);
        }
    }

    #[test]
    fn negation_involution() {
        let d = 2u64;
        let r = qring1();
        let phi = build(FormulaKind::InitialTermIs { e: 1, d }, 1).unwrap();
        let negated = Formula {
            kind: phi.kind.clone(),
            nvars: phi.nvars,
            root: Rc::new(Node::Not(phi.root.clone())),
            frees: phi.free_variables().to_vec(),
        };
        for text in ["x", "1", "x + 1", "0"] {
            let f = parse_poly(text, &r).unwrap();
            let mut a = Assignment::new(FieldSpec::Rationals);
            a.bind_poly(&f, d).unwrap();
            assert_eq!(
                evaluate(&negated, &a).unwrap(),
                !evaluate(&phi, &a).unwrap()
            );
        }
    }
}
