//! Weyl groups as explicit integer matrices and their invariant degrees from
//! the Molien series `(1/|W|) Σ_w 1/det(1 - t w) = Π 1/(1 - t^{d_i})`.

use std::collections::{HashSet, VecDeque};

use num_traits::{One, Zero};

use super::linalg::{q, Q};
use crate::error::{Error, Result};
use crate::rootsys::{cartan_matrix, LieType};

pub type IntMatrix = Vec<Vec<i64>>;

const SERIES_TERMS: usize = 32;

/// Simple reflections on simple-root coordinates: column `j` of `s_i` is
/// `α_j - a[i][j] α_i`.
pub fn simple_reflections(t: LieType) -> Vec<IntMatrix> {
    let a = cartan_matrix(t);
    let n = t.rank();
    (0..n)
        .map(|i| {
            let mut s = vec![vec![0i64; n]; n];
            for j in 0..n {
                s[j][j] = 1;
                s[i][j] -= a[i][j];
            }
            s
        })
        .collect()
}

fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Every element of the Weyl group, by breadth-first closure.
pub fn weyl_group(t: LieType) -> Vec<IntMatrix> {
    let gens = simple_reflections(t);
    let n = t.rank();
    let id: IntMatrix = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for s in &gens {
            let next = int_mul(s, &w);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        out.push(w);
    }
    out
}

/// Coefficients of `det(1 - t w)` in increasing powers of `t`.
fn det_one_minus_tw(w: &IntMatrix) -> Vec<i64> {
    // det(1 - t w) = t^n χ_w(1/t), so reverse the characteristic polynomial.
    let n = w.len();
    let mut m = vec![vec![0i64; n]; n];
    let mut coeffs = vec![1i64];
    let mut c = 1i64;
    for k in 1..=n {
        let wm = int_mul(w, &m);
        for i in 0..n {
            for j in 0..n {
                m[i][j] = wm[i][j] + if i == j { c } else { 0 };
            }
        }
        let wm = int_mul(w, &m);
        let tr: i64 = (0..n).map(|i| wm[i][i]).sum();
        c = -tr / k as i64;
        coeffs.push(c);
    }
    coeffs
}

/// `1 / p(t)` as a power series, for `p(0) = 1`.
fn invert_series(p: &[i64], terms: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); terms];
    out[0] = Q::one();
    for k in 1..terms {
        let mut s = Q::zero();
        for (j, &pj) in p.iter().enumerate().skip(1).take_while(|(j, _)| *j <= k) {
            s += q(pj) * &out[k - j];
        }
        out[k] = -s;
    }
    out
}

/// The Molien series of `W` truncated to `terms` coefficients.
pub fn molien_series(t: LieType, terms: usize) -> Vec<Q> {
    let group = weyl_group(t);
    let mut sum = vec![Q::zero(); terms];
    for w in &group {
        for (acc, c) in sum
            .iter_mut()
            .zip(invert_series(&det_one_minus_tw(w), terms))
        {
            *acc += c;
        }
    }
    let order = q(group.len() as i64);
    sum.into_iter().map(|c| c / &order).collect()
}

/// Reads the degrees off a series `Π 1/(1 - t^{d_i})` by repeatedly
/// multiplying by `(1 - t^k)` for the lowest nonconstant term `t^k`.
pub fn factor_degrees(series: &[Q], rank: usize) -> Option<Vec<u64>> {
    let mut s = series.to_vec();
    let mut degrees = Vec::new();
    while degrees.len() < rank {
        let k = (1..s.len()).find(|&k| !s[k].is_zero())?;
        for i in (k..s.len()).rev() {
            let prev = s[i - k].clone();
            s[i] -= prev;
        }
        degrees.push(k as u64);
    }
    s.iter().skip(1).all(Zero::is_zero).then_some(degrees)
}

/// Fundamental degrees of a rank ≤ 3 type from its explicit Weyl group.
pub fn weyl_molien_degrees(t: LieType) -> Result<Vec<u64>> {
    if t.rank() > 3 {
        return Err(Error::Unsupported(format!(
            "Molien degrees are computed up to rank 3, got {t}"
        )));
    }
    factor_degrees(&molien_series(t, SERIES_TERMS), t.rank())
        .ok_or_else(|| Error::Unsupported(format!("Molien series of {t} did not factor")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(weyl_group(lt("A1")).len(), 2);
        assert_eq!(weyl_group(lt("A2")).len(), 6);
        assert_eq!(weyl_group(lt("G2")).len(), 12);
        assert_eq!(weyl_group(lt("B3")).len(), 48);
        assert_eq!(weyl_group(lt("A3")).len(), 24);
    }

    #[test]
    fn small_degrees() {
        assert_eq!(weyl_molien_degrees(lt("A1")).unwrap(), vec![2]);
        assert_eq!(weyl_molien_degrees(lt("A2")).unwrap(), vec![2, 3]);
        assert_eq!(weyl_molien_degrees(lt("G2")).unwrap(), vec![2, 6]);
        assert_eq!(weyl_molien_degrees(lt("C3")).unwrap(), vec![2, 4, 6]);
        assert!(weyl_molien_degrees(lt("D4")).is_err());
    }

    #[test]
    fn reflection_determinants() {
        for s in simple_reflections(lt("B3")) {
            // det(1 - t s) = (1 - t)^2 (1 + t)
            assert_eq!(det_one_minus_tw(&s), vec![1, -1, -1, 1]);
        }
    }
}
