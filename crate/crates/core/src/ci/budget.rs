//! Numeric necessary conditions for an orbit closure `Ō ⊂ g` to be cut out
//! by `r = codim Ō` homogeneous equations.

use serde::{Deserialize, Serialize};

use super::reps::small_irrep_dims;
use crate::error::{Error, Result};
use crate::orbits::OrbitDescriptor;
use crate::rootsys::{build_root_system, Family, LieType};

/// Degree accounting for a homogeneous complete intersection of dimension
/// `2n` and codimension `r`: the defining degrees must sum to `n + r`, and
/// each is at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBudget {
    pub half_dim: i64,
    pub codim: i64,
    pub required_sum: i64,
    pub min_sum: i64,
    pub feasible: bool,
    pub forced_all_quadrics: bool,
}

impl DegreeBudget {
    pub fn new(half_dim: i64, codim: i64) -> Self {
        DegreeBudget {
            half_dim,
            codim,
            required_sum: half_dim + codim,
            min_sum: 2 * codim,
            feasible: half_dim >= codim,
            forced_all_quadrics: half_dim == codim,
        }
    }
}

pub fn degree_budget(o: &OrbitDescriptor) -> Result<DegreeBudget> {
    if o.codim < 1 {
        return Err(Error::OutOfRange(
            "degree budget needs a singular orbit closure of positive codimension".into(),
        ));
    }
    Ok(DegreeBudget::new(o.half_dim, o.codim))
}

/// Representation-theoretic view of the all-quadrics case: the equations
/// span a representation `V` of dimension `codim` containing exactly one
/// trivial summand (the Killing quadric); every other summand is one of the
/// nontrivial irreducibles small enough to fit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepBudget {
    pub dim_v: i64,
    pub quadric_slots: i64,
    pub small_irrep_dims: Vec<u64>,
    pub forced_all_quadrics: bool,
}

impl RepBudget {
    /// Small irreducibles are enumerated from the Weyl dimension formula
    /// rather than taken from a table.
    pub fn for_type(t: LieType, budget: &DegreeBudget) -> Self {
        let rs = build_root_system(t);
        let bound = budget.codim.max(0) as u64;
        RepBudget {
            dim_v: budget.codim,
            quadric_slots: 1,
            small_irrep_dims: small_irrep_dims(&rs, bound),
            forced_all_quadrics: budget.forced_all_quadrics,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityWitness {
    pub dim_v: i64,
    /// `dim V` minus the single trivial summand.
    pub rest: i64,
    pub standard_dim: i64,
    pub remainder: i64,
    /// Whether `rest` is a nonnegative combination of the small irreducible
    /// dimensions; if not, the orbit closure is not a complete intersection.
    pub representable: bool,
}

impl DivisibilityWitness {
    pub fn is_contradiction(&self) -> bool {
        !self.representable
    }
}

fn representable(target: i64, parts: &[u64]) -> bool {
    if target < 0 {
        return false;
    }
    let target = target as usize;
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for i in 1..=target {
        reach[i] = parts
            .iter()
            .any(|&p| (p as usize) <= i && reach[i - p as usize]);
    }
    reach[target]
}

pub fn rep_divisibility_check(t: LieType, budget: &RepBudget) -> Result<DivisibilityWitness> {
    if !t.is_classical() {
        return Err(Error::NotClassical(t.to_string()));
    }
    if !budget.forced_all_quadrics {
        return Err(Error::NotForcedQuadric);
    }
    let standard_dim = t.standard_dim().unwrap() as i64;
    let rest = budget.dim_v - budget.quadric_slots;
    Ok(DivisibilityWitness {
        dim_v: budget.dim_v,
        rest,
        standard_dim,
        remainder: rest.rem_euclid(standard_dim),
        representable: representable(rest, &budget.small_irrep_dims),
    })
}

/// Nontrivial irreducibles of an exceptional algebra of dimension below
/// `dim g`, as `(dim g, [dims])`.
pub fn exceptional_irrep_table(t: LieType) -> Result<(i64, &'static [u64])> {
    Ok(match (t.family(), t.rank()) {
        (Family::G, 2) => (14, &[7]),
        (Family::F, 4) => (52, &[26]),
        (Family::E, 6) => (78, &[27, 27]),
        (Family::E, 7) => (133, &[56]),
        (Family::E, 8) => (248, &[]),
        _ => return Err(Error::NotExceptional(t.to_string())),
    })
}

/// Smallest dimension of a nontrivial irreducible; the adjoint for `E8`.
pub fn min_nontrivial_irrep_dim(t: LieType) -> Result<i64> {
    let (dim_g, table) = exceptional_irrep_table(t)?;
    Ok(table.iter().map(|&d| d as i64).min().unwrap_or(dim_g))
}
