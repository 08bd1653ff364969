//! Independent ground truth at small rank: explicit matrix nilpotent cones,
//! explicit Weyl groups and the residue-form weight bookkeeping.

pub mod linalg;
pub mod matrix;
pub mod weyl;

pub use matrix::{
    check_cone, invariants_at, jacobian_rank_at, sample_points, seed_from_env, Algebra, ConeCheck,
    MatrixPoint, DEFAULT_SEED,
};
pub use weyl::{weyl_group, weyl_molien_degrees};

/// `wt(ωⁿ) = 2n + r - Σ a_i` for a homogeneous complete intersection of
/// dimension `2n` and codimension `r` cut by equations of degrees `a`.
pub fn top_form_weight(n: i64, r: i64, degrees: &[i64]) -> i64 {
    2 * n + r - degrees.iter().sum::<i64>()
}

/// Weight of the symplectic form itself, when `wt(ωⁿ)` is divisible by `n`.
pub fn form_weight(n: i64, r: i64, degrees: &[i64]) -> Option<i64> {
    let top = top_form_weight(n, r, degrees);
    (n > 0 && top % n == 0).then_some(top / n)
}

/// The A1 surface has `wt(ω) = 1`, the smooth plane `wt(ω) = 2`.
#[allow(non_snake_case)]
pub fn weight_check_A1() -> bool {
    form_weight(1, 1, &[2]) == Some(1)
        && form_weight(1, 0, &[]) == Some(2)
        && top_form_weight(2, 1, &[3]) == 2
        && form_weight(2, 1, &[3]) == Some(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        assert!(weight_check_A1());
        assert_eq!(top_form_weight(1, 1, &[2]), 1);
        assert_eq!(form_weight(1, 0, &[]), Some(2));
    }
}
