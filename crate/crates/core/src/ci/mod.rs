//! The decision engine: runs the necessary conditions for a Richardson orbit
//! closure to be a complete intersection and records every rule it applies.
//!
//! Pipeline for a marked diagram of a simple type:
//!
//! 1. no white vertex: the closure is the nilpotent cone;
//! 2. exceptional type: codimension/representation filter;
//! 3. one black vertex (maximal parabolic):
//!    * type A with `r != m/2`: singular locus of codimension at least 4,
//!    * otherwise the degree budget, then in the all-quadrics case the
//!      representation count (and `Sym²` for sp(6));
//! 4. several black vertices: the degree budget, then Levi reduction to a
//!    maximal parabolic of a smaller algebra, recursing on the component
//!    that carries the new black vertex.

mod budget;
pub mod reps;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use budget::{
    degree_budget, exceptional_irrep_table, min_nontrivial_irrep_dim, rep_divisibility_check,
    DegreeBudget, DivisibilityWitness, RepBudget,
};
pub use reps::sym2_containment_check;

use crate::dynkin::{levi_reduce, select_beta_candidates, MarkedDiagram};
use crate::error::{Error, Result};
use crate::orbits::{
    boundary_codim_a, richardson_dim_in, richardson_partition_a, OrbitDescriptor, OrbitSource,
};
use crate::rootsys::{build_root_system, Family, LieType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    IsNilpotentCone,
    NotCompleteIntersection,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::IsNilpotentCone => "IsNilpotentCone",
            Verdict::NotCompleteIntersection => "NotCompleteIntersection",
            Verdict::Undetermined => "Undetermined",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    NilpotentCone,
    CodimThird,
    ExceptionalTrivialRep,
    DegreeBudget,
    SingularLocusCodim,
    RepDivisibility,
    Sym2Containment,
    LeviReduction,
    ProductFactor,
    Unresolved,
}

impl Rule {
    pub const ALL: [Rule; 10] = [
        Rule::NilpotentCone,
        Rule::CodimThird,
        Rule::ExceptionalTrivialRep,
        Rule::DegreeBudget,
        Rule::SingularLocusCodim,
        Rule::RepDivisibility,
        Rule::Sym2Containment,
        Rule::LeviReduction,
        Rule::ProductFactor,
        Rule::Unresolved,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::NilpotentCone => "nilpotent-cone",
            Rule::CodimThird => "codim-third",
            Rule::ExceptionalTrivialRep => "exceptional-trivial-rep",
            Rule::DegreeBudget => "degree-budget",
            Rule::SingularLocusCodim => "singular-locus-codim",
            Rule::RepDivisibility => "rep-divisibility",
            Rule::Sym2Containment => "sym2-containment",
            Rule::LeviReduction => "levi-reduction",
            Rule::ProductFactor => "product-factor",
            Rule::Unresolved => "unresolved",
        }
    }

    /// The mathematical statement the rule applies.
    pub fn citation(self) -> &'static str {
        match self {
            Rule::NilpotentCone => {
                "N is the zero fibre of the adjoint quotient g -> g//G = C^r, cut out by the \
                 r basic invariants; their degrees sum to n + r"
            }
            Rule::CodimThird => {
                "homogeneous CI of dimension 2n, codimension r: sum of degrees = n + r and \
                 each degree >= 2, so n >= r and codim <= dim g / 3"
            }
            Rule::ExceptionalTrivialRep => {
                "the equations span a G-representation V of dimension codim; no nontrivial \
                 irreducible fits, so V is trivial, the closure is cut out by invariants and \
                 equals N, contradicting a non-regular orbit"
            }
            Rule::DegreeBudget => {
                "homogeneous symplectic CI: sum of the r defining degrees equals n + r, each \
                 degree >= 2, so n + r >= 2r"
            }
            Rule::SingularLocusCodim => {
                "Beauville, Prop. 1.4: a symplectic singularity that is a complete \
                 intersection has singular locus of codimension <= 3; in sl(m) the closure \
                 order is the dominance order"
            }
            Rule::RepDivisibility => {
                "all-quadrics case: V = I_2 holds exactly one trivial summand (the Killing \
                 quadric) and otherwise only irreducibles of dimension <= dim g / 3, i.e. \
                 standard representations; dim V - 1 must be a sum of their dimensions"
            }
            Rule::Sym2Containment => {
                "the quadric equations form a subrepresentation of Sym^2(g*) = Sym^2(g); \
                 for sp(6) it has no standard-representation summand"
            }
            Rule::LeviReduction => {
                "fibre of the flat deformation over a generic centre element of the Levi of \
                 P_{I+beta} is locally G/Z(t) x the normalized Richardson closure of \
                 Z(t); local CI passes to it (target normality is the cited Kraft-Procesi \
                 result, not computed)"
            }
            Rule::ProductFactor => {
                "a Richardson closure of a semisimple algebra is the product of the factor \
                 closures; it is CI only if every factor is"
            }
            Rule::Unresolved => "no rule applied",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WitnessValue {
    Int(i64),
    Text(String),
}

impl fmt::Display for WitnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessValue::Int(x) => write!(f, "{x}"),
            WitnessValue::Text(s) => f.write_str(s),
        }
    }
}

/// Named integers (and a few labels) backing a rule application.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Witness(pub BTreeMap<String, WitnessValue>);

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn int(mut self, key: &str, value: i64) -> Self {
        self.0.insert(key.to_string(), WitnessValue::Int(value));
        self
    }

    pub fn text(mut self, key: &str, value: impl Into<String>) -> Self {
        self.0
            .insert(key.to_string(), WitnessValue::Text(value.into()));
        self
    }

    pub fn get_int(&self, key: &str) -> Option<i64> {
        match self.0.get(key) {
            Some(WitnessValue::Int(x)) => Some(*x),
            _ => None,
        }
    }

    pub fn get_text(&self, key: &str) -> Option<&str> {
        match self.0.get(key) {
            Some(WitnessValue::Text(s)) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub rule: Rule,
    pub citation: String,
    pub witness: Witness,
}

impl Reason {
    pub fn new(rule: Rule, witness: Witness) -> Self {
        Reason {
            rule,
            citation: rule.citation().to_string(),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subject {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    pub marking: String,
}

impl Subject {
    pub fn of_orbit(o: &OrbitDescriptor) -> Self {
        let marking = match &o.source {
            OrbitSource::Marking(d) => d.render(),
            OrbitSource::JordanType(p) => p.to_string(),
            OrbitSource::Supplied => format!("dim={}", o.dim_orbit),
        };
        Subject {
            lie_type: o.lie_type.to_string(),
            rank: o.lie_type.rank(),
            marking,
        }
    }

    pub fn of_marking(d: &MarkedDiagram) -> Self {
        Subject {
            lie_type: d.lie_type().to_string(),
            rank: d.rank(),
            marking: d.render(),
        }
    }
}

/// Verdict on one orbit closure with the ordered chain of rules behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CIReport {
    pub subject: Subject,
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
}

impl CIReport {
    /// The rule that settled the verdict: the first one in the chain.
    pub fn first_rule(&self) -> Option<Rule> {
        self.reasons.first().map(|r| r.rule)
    }

    pub fn rules(&self) -> Vec<Rule> {
        self.reasons.iter().map(|r| r.rule).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

fn orbit_witness(on: &str, o: &OrbitDescriptor) -> Witness {
    Witness::new()
        .text("on", on)
        .int("dim_g", o.dim_g)
        .int("dim_orbit", o.dim_orbit)
        .int("codim", o.codim)
}

fn budget_witness(on: &str, o: &OrbitDescriptor, b: &DegreeBudget) -> Witness {
    orbit_witness(on, o)
        .int("n", b.half_dim)
        .int("r", b.codim)
        .int("required_sum", b.required_sum)
        .int("min_sum", b.min_sum)
}

fn nilpotent_cone_reason(on: &str, o: &OrbitDescriptor) -> Reason {
    let rs = build_root_system(o.lie_type);
    let degrees: Vec<String> = rs.fundamental_degrees.iter().map(u64::to_string).collect();
    let sum: u64 = rs.fundamental_degrees.iter().sum();
    Reason::new(
        Rule::NilpotentCone,
        orbit_witness(on, o)
            .text("degrees", degrees.join(","))
            .int("degree_sum", sum as i64)
            .int("n", o.half_dim)
            .int("r", o.codim),
    )
}

/// Codimension and representation filter for exceptional algebras. Applies
/// to any orbit, Richardson or not, since it only uses dimensions.
pub fn exceptional_filter(t: LieType, o: &OrbitDescriptor) -> Result<CIReport> {
    let min_irrep = min_nontrivial_irrep_dim(t)?;
    let subject = Subject::of_orbit(o);
    let on = subject.marking.clone();
    if o.is_regular() {
        return Ok(CIReport {
            subject,
            verdict: Verdict::IsNilpotentCone,
            reasons: vec![nilpotent_cone_reason(&on, o)],
        });
    }
    let base = orbit_witness(&on, o);
    let (verdict, reason) = if 3 * o.codim > o.dim_g {
        (
            Verdict::NotCompleteIntersection,
            Reason::new(Rule::CodimThird, base.int("three_codim", 3 * o.codim)),
        )
    } else if o.codim < min_irrep {
        (
            Verdict::NotCompleteIntersection,
            Reason::new(
                Rule::ExceptionalTrivialRep,
                base.int("min_nontrivial_irrep", min_irrep),
            ),
        )
    } else {
        (Verdict::Undetermined, Reason::new(Rule::Unresolved, base))
    };
    Ok(CIReport {
        subject,
        verdict,
        reasons: vec![reason],
    })
}

fn evaluate(d: &MarkedDiagram, reasons: &mut Vec<Reason>) -> Result<Verdict> {
    let t = d.lie_type();
    let rs = build_root_system(t);
    let orbit = richardson_dim_in(&rs, d)?;
    let on = d.render();

    if d.is_borel() {
        reasons.push(nilpotent_cone_reason(&on, &orbit));
        return Ok(Verdict::IsNilpotentCone);
    }
    if t.is_exceptional() {
        let report = exceptional_filter(t, &orbit)?;
        reasons.extend(report.reasons);
        return Ok(report.verdict);
    }

    let blacks = d.black_vertices();
    let budget = degree_budget(&orbit)?;

    if blacks.len() == 1 {
        if t.family() == Family::A {
            let m = (t.rank() + 1) as u32;
            let r = blacks[0] as u32 + 1;
            if 2 * r != m {
                let p = richardson_partition_a(m, r)?;
                let codim = boundary_codim_a(m, &p)?;
                if codim >= 4 {
                    reasons.push(Reason::new(
                        Rule::SingularLocusCodim,
                        orbit_witness(&on, &orbit)
                            .int("m", m as i64)
                            .int("black", r as i64)
                            .text("jordan_type", p.to_string())
                            .int("singular_codim", codim),
                    ));
                    return Ok(Verdict::NotCompleteIntersection);
                }
            }
        }
        if !budget.feasible {
            reasons.push(Reason::new(
                Rule::DegreeBudget,
                budget_witness(&on, &orbit, &budget),
            ));
            return Ok(Verdict::NotCompleteIntersection);
        }
        if budget.forced_all_quadrics {
            let rep = RepBudget::for_type(t, &budget);
            let w = rep_divisibility_check(t, &rep)?;
            let dims: Vec<String> = rep.small_irrep_dims.iter().map(u64::to_string).collect();
            reasons.push(Reason::new(
                Rule::RepDivisibility,
                budget_witness(&on, &orbit, &budget)
                    .int("dim_v", w.dim_v)
                    .int("dim_v_minus_trivial", w.rest)
                    .int("standard_dim", w.standard_dim)
                    .int("remainder", w.remainder)
                    .text("small_irreps", dims.join(","))
                    .text("representable", w.representable.to_string()),
            ));
            if w.is_contradiction() {
                return Ok(Verdict::NotCompleteIntersection);
            }
            if t.family() == Family::C && t.rank() == 3 {
                let contains = sym2_containment_check(t)?;
                reasons.push(Reason::new(
                    Rule::Sym2Containment,
                    Witness::new()
                        .text("on", on.as_str())
                        .int("dim_sym2", (rs.dim_g * (rs.dim_g + 1) / 2) as i64)
                        .int("standard_summands", contains as i64),
                ));
                if !contains {
                    return Ok(Verdict::NotCompleteIntersection);
                }
            }
        }
        reasons.push(Reason::new(
            Rule::Unresolved,
            budget_witness(&on, &orbit, &budget),
        ));
        return Ok(Verdict::Undetermined);
    }

    if !budget.feasible {
        reasons.push(Reason::new(
            Rule::DegreeBudget,
            budget_witness(&on, &orbit, &budget),
        ));
        return Ok(Verdict::NotCompleteIntersection);
    }

    // Every orbit closure in sl(m) is normal, so each black vertex gives a
    // usable reduction there; elsewhere only the leftmost-white choices.
    let mut branches = select_beta_candidates(d)?;
    if t.family() == Family::A {
        for b in blacks {
            if !branches.contains(&b) {
                branches.push(b);
            }
        }
    }
    let mut refuted = false;
    for beta in branches {
        let reduction = levi_reduce(d, beta)?;
        let target = &reduction.black_component().diagram;
        reasons.push(Reason::new(
            Rule::LeviReduction,
            Witness::new()
                .text("on", on.as_str())
                .int("beta", beta as i64 + 1)
                .text("levi", reduction.type_label())
                .text("target", target.render())
                .text("target_diagram", target.pictogram()),
        ));
        if evaluate(target, reasons)? == Verdict::NotCompleteIntersection {
            refuted = true;
        }
    }
    if refuted {
        Ok(Verdict::NotCompleteIntersection)
    } else {
        reasons.push(Reason::new(
            Rule::Unresolved,
            budget_witness(&on, &orbit, &budget),
        ));
        Ok(Verdict::Undetermined)
    }
}

/// Decides whether the Richardson orbit closure of the parabolic `P_I`
/// given by `d` is a complete intersection.
pub fn ci_verdict(d: &MarkedDiagram) -> Result<CIReport> {
    if d.is_full_white() {
        return Err(Error::FullWhiteMarking);
    }
    let mut reasons = Vec::new();
    let verdict = evaluate(d, &mut reasons)?;
    Ok(CIReport {
        subject: Subject::of_marking(d),
        verdict,
        reasons,
    })
}

/// Combines per-factor reports for a semisimple algebra.
pub fn product_verdict(reports: &[CIReport]) -> Result<CIReport> {
    match reports {
        [] => Err(Error::OutOfRange("product of zero factors".into())),
        [single] => Ok(single.clone()),
        _ => {
            let join = |f: &dyn Fn(&Subject) -> String| {
                reports
                    .iter()
                    .map(|r| f(&r.subject))
                    .collect::<Vec<_>>()
                    .join("+")
            };
            let subject = Subject {
                lie_type: join(&|s| s.lie_type.clone()),
                rank: reports.iter().map(|r| r.subject.rank).sum(),
                marking: join(&|s| s.marking.clone()),
            };
            let mut reasons = Vec::new();
            let mut verdict = Verdict::IsNilpotentCone;
            for (i, r) in reports.iter().enumerate() {
                if r.verdict == Verdict::IsNilpotentCone {
                    continue;
                }
                reasons.push(Reason::new(
                    Rule::ProductFactor,
                    Witness::new()
                        .int("factor", i as i64 + 1)
                        .text("on", r.subject.marking.clone())
                        .text("factor_verdict", r.verdict.to_string()),
                ));
                reasons.extend(r.reasons.iter().cloned());
                if r.verdict == Verdict::NotCompleteIntersection {
                    verdict = Verdict::NotCompleteIntersection;
                } else if verdict != Verdict::NotCompleteIntersection {
                    verdict = Verdict::Undetermined;
                }
            }
            Ok(CIReport {
                subject,
                verdict,
                reasons,
            })
        }
    }
}
