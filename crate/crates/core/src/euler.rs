//! Euler characteristics of twists of complete intersections in projective
//! space, by peeling off one hypersurface at a time.
//!
//! For `W ⊂ W'` cut by one more hypersurface of degree `d`, the sequence
//! `0 → O_W'(t-d) → O_W'(t) → O_W(t) → 0` gives
//! `χ(O_W(t)) = χ(O_W'(t)) - χ(O_W'(t-d))`, bottoming out at
//! `χ(O_P^m(t)) = C(t+m, m)` read as a polynomial in `t`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(t+m, m) = (t+1)(t+2)..(t+m) / m!`, valid for every integer `t`.
pub fn binomial_poly(t: i64, m: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 1..=m as i64 {
        num *= t + j;
        den *= j;
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

fn check(m: u32, degrees: &[u32]) -> Result<()> {
    if m == 0 {
        return Err(Error::OutOfRange(
            "ambient dimension must be positive".into(),
        ));
    }
    if degrees.contains(&0) {
        return Err(Error::OutOfRange(
            "hypersurface degrees must be positive".into(),
        ));
    }
    if degrees.len() > m as usize {
        return Err(Error::TooManyHypersurfaces {
            count: degrees.len(),
            ambient: m as usize,
        });
    }
    Ok(())
}

fn chi_rec(m: u32, degrees: &[u32], t: i64) -> BigInt {
    match degrees.split_last() {
        None => binomial_poly(t, m),
        Some((&d, rest)) => chi_rec(m, rest, t) - chi_rec(m, rest, t - d as i64),
    }
}

/// `χ(W, O_W(t))` for a complete intersection `W ⊂ P^m` of the given degrees.
pub fn chi_ci(m: u32, degrees: &[u32], t: i64) -> Result<BigInt> {
    check(m, degrees)?;
    Ok(chi_rec(m, degrees, t))
}

/// The function `t ↦ χ(O_W(t))` of one complete intersection type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerPoly {
    ambient_dim: u32,
    degrees: Vec<u32>,
}

impl EulerPoly {
    pub fn new(ambient_dim: u32, degrees: Vec<u32>) -> Result<Self> {
        check(ambient_dim, &degrees)?;
        Ok(EulerPoly {
            ambient_dim,
            degrees,
        })
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Degree in `t` of the Euler characteristic: `dim W = m - k`.
    pub fn poly_degree(&self) -> u32 {
        self.ambient_dim - self.degrees.len() as u32
    }

    pub fn at(&self, t: i64) -> BigInt {
        chi_rec(self.ambient_dim, &self.degrees, t)
    }

    pub fn table(&self, ts: impl IntoIterator<Item = i64>) -> Vec<(i64, BigInt)> {
        ts.into_iter().map(|t| (t, self.at(t))).collect()
    }
}

/// Checks `χ(O_W) = 1` and `χ(O_W(-i)) = 0` for `1 <= i <= m - Σd`, the
/// vanishing range of a complete intersection with `Σd < m + 1`.
pub fn verify_lemma(m: u32, degrees: &[u32]) -> Result<bool> {
    check(m, degrees)?;
    let total: u32 = degrees.iter().sum();
    if total > m {
        return Err(Error::OutOfRange(format!(
            "degree sum {total} is not below m + 1 = {}",
            m + 1
        )));
    }
    let p = EulerPoly::new(m, degrees.to_vec())?;
    Ok(p.at(0).is_one() && (1..=(m - total) as i64).all(|i| p.at(-i).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(m: u32, d: &[u32], t: i64) -> i64 {
        chi_ci(m, d, t).unwrap().try_into().unwrap()
    }

    #[test]
    fn projective_space() {
        for m in 1..6 {
            assert_eq!(chi(m, &[], 0), 1);
        }
        assert_eq!(chi(2, &[], 2), 6);
        // C(t+m, m) vanishes for -m <= t <= -1 and alternates below
        assert_eq!(chi(3, &[], -2), 0);
        assert_eq!(chi(3, &[], -4), -1);
    }

    #[test]
    fn quadric_threefold() {
        // C(3,4) - C(1,4)
        assert_eq!(chi(4, &[2], -1), 0);
        assert!(verify_lemma(4, &[2]).unwrap());
    }

    #[test]
    fn plane_curves() {
        // smooth plane cubic: genus one, χ(O) = 0
        assert_eq!(chi(2, &[3], 0), 0);
        // conic: χ(O(t)) = 2t + 1
        for t in -4..5 {
            assert_eq!(chi(2, &[2], t), 2 * t + 1);
        }
    }

    #[test]
    fn lemma_instances() {
        assert!(verify_lemma(3, &[2]).unwrap());
        assert_eq!(chi(3, &[2], -1), 0);
        assert!(verify_lemma(5, &[2, 3]).unwrap());
        assert_eq!(chi(5, &[2, 3], 0), 1);
        assert_eq!(chi(7, &[2, 3], 0), 1);
        assert!(verify_lemma(5, &[6]).is_err());
    }

    #[test]
    fn projectivized_cone_instance() {
        // n = 2, r = 2, a = [2, 2]: W ⊂ P^5 with Σa = n + r = 4
        let (n, r) = (2u32, 2u32);
        assert_eq!(chi(2 * n + r - 1, &[2, 2], 0), 1);
    }

    #[test]
    fn too_many_hypersurfaces() {
        assert_eq!(
            chi_ci(2, &[2, 2, 2], 0),
            Err(Error::TooManyHypersurfaces {
                count: 3,
                ambient: 2
            })
        );
        assert!(chi_ci(0, &[], 0).is_err());
    }

    #[test]
    fn degree_order_irrelevant() {
        for t in -6..6 {
            assert_eq!(chi(6, &[2, 3, 4], t), chi(6, &[4, 2, 3], t));
        }
    }
}
