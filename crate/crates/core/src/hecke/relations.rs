use serde::Serialize;

use super::element::{qpoly, HeckeAlgebra, HeckeElement};
use crate::combinat::{Weight, WeylElement};
use crate::{Error, Result};

/// One relation family with its residual count.
#[derive(Clone, Debug, Serialize)]
pub struct RelationSummary {
    pub relation: &'static str,
    pub checked: usize,
    pub nonzero: usize,
    /// Nonzero residuals, capped at [`MAX_REPORTED_FAILURES`] per family.
    pub failures: Vec<RelationFailure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationFailure {
    pub instance: String,
    pub residual: String,
}

pub const MAX_REPORTED_FAILURES: usize = 10;

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub bound: i32,
    pub corrupted: bool,
    pub relations: Vec<RelationSummary>,
    pub all_zero: bool,
}

impl RelationSummary {
    fn new(relation: &'static str) -> Self {
        RelationSummary { relation, checked: 0, nonzero: 0, failures: Vec::new() }
    }

    fn record(&mut self, instance: impl FnOnce() -> String, residual: &HeckeElement) {
        self.checked += 1;
        if !residual.is_zero() {
            self.nonzero += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(RelationFailure { instance: instance(), residual: residual.to_string() });
            }
        }
    }
}

/// All weights in `[-bound, bound]^n`, lexicographic.
pub fn weight_box(n: usize, bound: i32) -> Vec<Weight> {
    let mut out: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-bound..=bound).map(move |a| {
                    let mut v = p.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

/// Evaluates the quadratic, braid, lattice and Bernstein relations on the
/// multiplication kernel of `algebra`, with weights in `[-bound, bound]^n`.
///
/// The Bernstein right-hand side is computed directly from Laurent polynomial
/// division, independently of the multiplication kernel.
pub fn verify_relations_with(algebra: &HeckeAlgebra, bound: i32) -> Result<RelationReport> {
    let n = algebra.rank();
    if n > 4 {
        return Err(Error::input(format!("relation verification supports n <= 4, got {n}")));
    }
    if !(0..=3).contains(&bound) {
        return Err(Error::input(format!("weight bound must lie in 0..=3, got {bound}")));
    }
    let one_minus_q = qpoly(&[(0, 1), (1, -1)]);
    let unit = algebra.unit();
    let qh = algebra.qvar();

    let mut quadratic = RelationSummary::new("quadratic");
    for i in 1..n {
        let t = algebra.simple(i)?;
        let t_plus = t.add(&unit);
        let t_minus = t.sub(&qh);
        let residual = algebra.multiply(&t_plus, &t_minus)?;
        quadratic.record(|| format!("(T_s{i} + 1)(T_s{i} - q)"), &residual);
    }

    let mut braid = RelationSummary::new("braid");
    let elements = algebra.group().elements_in_total_order();
    for w in &elements {
        for v in &elements {
            let wv = w.compose(v);
            if wv.length() != w.length() + v.length() {
                continue;
            }
            let lhs = algebra.multiply(&algebra.tee(w)?, &algebra.tee(v)?)?;
            let residual = lhs.sub(&algebra.tee(&wv)?);
            braid.record(|| format!("T{w} T{v} - T{wv}"), &residual);
        }
    }

    let weights = weight_box(n, bound);
    let mut lattice = RelationSummary::new("lattice");
    for x in &weights {
        for y in &weights {
            let lhs = algebra.multiply(&algebra.theta(x)?, &algebra.theta(y)?)?;
            let residual = lhs.sub(&algebra.theta(&(x + y))?);
            lattice.record(|| format!("θ{x} θ{y} - θ{}", x + y), &residual);
        }
    }

    let mut bernstein = RelationSummary::new("bernstein");
    for i in 1..n {
        let s = WeylElement::simple(n, i)?;
        let t = algebra.tee(&s)?;
        for x in &weights {
            let sx = s.act_on_weight(x)?;
            let lhs = algebra.multiply(&t, &algebra.theta(&sx)?)?.sub(&algebra.multiply(&algebra.theta(x)?, &t)?);
            // (1 - q) (theta_x - theta_{s(x)}) / (1 - theta_{-a}) = (1 - q) D_a(s(x))
            let rhs = algebra.from_theta_poly(&algebra.divided_difference(i, &sx)?)?.scale(&one_minus_q);
            let residual = lhs.sub(&rhs);
            bernstein.record(|| format!("T_s{i} θ{sx} - θ{x} T_s{i} - (1-q)D(θ{x})"), &residual);
        }
    }

    let relations = vec![quadratic, braid, lattice, bernstein];
    let all_zero = relations.iter().all(|r| r.nonzero == 0);
    Ok(RelationReport {
        n,
        bound,
        corrupted: algebra.rule() != super::element::CommutationRule::Bernstein,
        relations,
        all_zero,
    })
}

/// Relation check on the standard algebra of rank `n`.
pub fn verify_defining_relations(n: usize, bound: i32) -> Result<RelationReport> {
    verify_relations_with(&HeckeAlgebra::new(n)?, bound)
}

/// Outcome of [`is_central`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Centrality {
    Central,
    /// The first generator found not to commute, and the nonzero commutator `g h - h g`.
    NotCentral {
        generator: String,
        commutator: HeckeElement,
    },
}

impl Centrality {
    pub fn is_central(&self) -> bool {
        matches!(self, Centrality::Central)
    }
}

/// Tests `h` against `T_{s_1}, ..., T_{s_{n-1}}` and `theta_{e_1}`.
pub fn is_central(algebra: &HeckeAlgebra, h: &HeckeElement) -> Result<Centrality> {
    let n = algebra.rank();
    let mut generators: Vec<(String, HeckeElement)> = Vec::new();
    for i in 1..n {
        generators.push((format!("T_s{i}"), algebra.simple(i)?));
    }
    generators.push(("θ_e1".to_string(), algebra.theta(&Weight::basis(n, 0))?));
    for (name, g) in generators {
        let c = algebra.commutator(&g, h)?;
        if !c.is_zero() {
            return Ok(Centrality::NotCentral { generator: name, commutator: c });
        }
    }
    Ok(Centrality::Central)
}
