//! Finite-dimensional representations by weights in Dynkin-label coordinates.
//!
//! Enough machinery to list the small irreducibles of a simple algebra and to
//! decompose a representation given by its weight multiset:
//! `mult(V_λ in M) = Σ_{w ∈ W} ε(w) · mult_M(λ + ρ - wρ)`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, symmetrizer, Family, LieType, RootSystem};

pub type Weight = Vec<i64>;

/// Dynkin labels `<β, α_i^∨>` of a vector given in simple-root coordinates.
pub fn root_to_labels(rs: &RootSystem, coords: &[i64]) -> Weight {
    let a = &rs.cartan_matrix;
    (0..rs.rank)
        .map(|i| (0..rs.rank).map(|j| coords[j] * a[i][j]).sum())
        .collect()
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α^∨) / (ρ, α^∨)`.
pub fn weyl_dimension(rs: &RootSystem, labels: &[i64]) -> BigInt {
    let d = symmetrizer(&rs.cartan_matrix);
    let n = rs.rank;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in &rs.positive_roots {
        // (μ, α) = Σ c_i μ_i d_i; the common factor 2/(α, α) cancels in the ratio
        num *= (0..n)
            .map(|i| root[i] * (labels[i] + 1) * d[i])
            .sum::<i64>();
        den *= (0..n).map(|i| root[i] * d[i]).sum::<i64>();
    }
    let q = BigRational::new(num, den);
    assert!(q.is_integer(), "Weyl dimension is not an integer");
    q.to_integer()
}

/// Every irreducible of dimension at most `bound`, as (highest weight,
/// dimension), sorted by dimension then weight. The trivial representation
/// is included.
pub fn irreps_up_to(rs: &RootSystem, bound: u64) -> Vec<(Weight, u64)> {
    let bound = BigInt::from(bound);
    let zero = vec![0i64; rs.rank];
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut out = Vec::new();
    let mut stack = vec![zero.clone()];
    seen.insert(zero);
    while let Some(lambda) = stack.pop() {
        let dim = weyl_dimension(rs, &lambda);
        if dim > bound {
            continue;
        }
        out.push((lambda.clone(), dim.to_u64().unwrap()));
        // dimension strictly increases along every fundamental direction
        for i in 0..rs.rank {
            let mut next = lambda.clone();
            next[i] += 1;
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    out.sort_by(|x, y| (x.1, &x.0).cmp(&(y.1, &y.0)));
    out
}

/// Dimensions of the nontrivial irreducibles of dimension at most `bound`.
pub fn small_irrep_dims(rs: &RootSystem, bound: u64) -> Vec<u64> {
    irreps_up_to(rs, bound)
        .into_iter()
        .filter(|(w, _)| w.iter().any(|&x| x != 0))
        .map(|(_, d)| d)
        .collect()
}

/// The orbit `W·ρ` with the sign `ε(w)` of each element.
pub fn signed_rho_orbit(rs: &RootSystem) -> Vec<(Weight, i64)> {
    let n = rs.rank;
    let a = &rs.cartan_matrix;
    let rho = vec![1i64; n];
    let mut sign: HashMap<Weight, i64> = HashMap::new();
    sign.insert(rho.clone(), 1);
    let mut queue = VecDeque::from([rho]);
    while let Some(mu) = queue.pop_front() {
        let s = sign[&mu];
        for i in 0..n {
            // s_i(μ) = μ - μ_i α_i, and α_i has labels given by column i
            let next: Weight = (0..n).map(|k| mu[k] - mu[i] * a[k][i]).collect();
            if !sign.contains_key(&next) {
                sign.insert(next.clone(), -s);
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<_> = sign.into_iter().collect();
    out.sort();
    out
}

/// Decomposes a representation given by its weight multiplicities into
/// irreducibles: returns highest weight ↦ multiplicity, nonzero entries only.
pub fn decompose(rs: &RootSystem, weights: &HashMap<Weight, i64>) -> BTreeMap<Weight, i64> {
    let orbit = signed_rho_orbit(rs);
    let mut out = BTreeMap::new();
    for lambda in weights.keys().filter(|w| w.iter().all(|&x| x >= 0)) {
        let mult: i64 = orbit
            .iter()
            .map(|(mu, eps)| {
                let probe: Weight = (0..rs.rank).map(|i| lambda[i] + 1 - mu[i]).collect();
                eps * weights.get(&probe).copied().unwrap_or(0)
            })
            .sum();
        if mult != 0 {
            out.insert(lambda.clone(), mult);
        }
    }
    out
}

/// Weights of the adjoint representation, one entry per basis vector.
pub fn adjoint_weights(rs: &RootSystem) -> Vec<Weight> {
    let mut out = Vec::with_capacity(rs.dim_g);
    for root in &rs.positive_roots {
        let w = root_to_labels(rs, root);
        out.push(w.iter().map(|x| -x).collect());
        out.push(w);
    }
    out.extend(std::iter::repeat_n(vec![0; rs.rank], rs.rank));
    out
}

/// Weight multiset of `Sym²(g)`.
pub fn sym2_adjoint_weights(rs: &RootSystem) -> HashMap<Weight, i64> {
    let basis = adjoint_weights(rs);
    let mut out = HashMap::new();
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let w: Weight = basis[i].iter().zip(&basis[j]).map(|(x, y)| x + y).collect();
            *out.entry(w).or_insert(0) += 1;
        }
    }
    out
}

/// Irreducible decomposition of `Sym²(g)` as (highest weight, multiplicity,
/// dimension), checked against `dim g (dim g + 1) / 2`.
pub fn sym2_adjoint_decomposition(t: LieType) -> Vec<(Weight, i64, u64)> {
    let rs = build_root_system(t);
    let parts = decompose(&rs, &sym2_adjoint_weights(&rs));
    let out: Vec<_> = parts
        .into_iter()
        .map(|(w, m)| {
            let dim = weyl_dimension(&rs, &w).to_u64().unwrap();
            (w, m, dim)
        })
        .collect();
    let total: u64 = out.iter().map(|(_, m, d)| *m as u64 * d).sum();
    assert_eq!(total as usize, rs.dim_g * (rs.dim_g + 1) / 2);
    out
}

/// Whether `Sym²(sp(6))` contains the 6-dimensional standard representation
/// as a summand. Only `C3` is supported.
pub fn sym2_containment_check(t: LieType) -> Result<bool> {
    if t.family() != Family::C || t.rank() != 3 {
        return Err(Error::Unsupported(format!(
            "Sym² containment is only decided for C3, got {t}"
        )));
    }
    let standard = vec![1, 0, 0];
    Ok(sym2_adjoint_decomposition(t)
        .iter()
        .any(|(w, m, _)| *w == standard && *m > 0))
}
