//! Test-side ground truth, written without touching the library's formulas.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients `0..len` of `Π(1 - x^d) / (1 - x)^{m+1}`: the Hilbert
/// function of a complete intersection in `P^m`.
pub fn hilbert_function(m: u32, degrees: &[u32], len: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); len];
    s[0] = BigInt::one();
    for _ in 0..=m {
        for i in 1..len {
            let prev = s[i - 1].clone();
            s[i] += prev;
        }
    }
    for &d in degrees {
        let d = d as usize;
        for i in (d..len).rev() {
            let prev = s[i - d].clone();
            s[i] -= prev;
        }
    }
    s
}

/// Hilbert polynomial evaluated at any integer `t`, by Lagrange
/// interpolation through values where the Hilbert function is already
/// polynomial.
pub fn hilbert_polynomial_at(m: u32, degrees: &[u32], t: i64) -> BigInt {
    let deg = (m as usize) - degrees.len();
    let start = degrees.iter().sum::<u32>() as usize;
    let values = hilbert_function(m, degrees, start + deg + 1);
    let xs: Vec<i64> = (start..=start + deg).map(|x| x as i64).collect();
    let mut acc = BigRational::zero();
    for (i, &xi) in xs.iter().enumerate() {
        let mut term = BigRational::from_integer(values[xi as usize].clone());
        for (j, &xj) in xs.iter().enumerate() {
            if i != j {
                term *= BigRational::new(BigInt::from(t - xj), BigInt::from(xi - xj));
            }
        }
        acc += term;
    }
    assert!(acc.is_integer());
    acc.to_integer()
}

/// Multisets of `k` degrees drawn from `lo..=hi`, nondecreasing.
pub fn degree_multisets(k: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in degree_multisets(k - 1, lo, hi) {
        let from = rest.last().copied().unwrap_or(lo);
        for d in from..=hi {
            let mut v = rest.clone();
            v.push(d);
            out.push(v);
        }
    }
    out
}

/// Heights of the positive roots `e_i - e_j` of `sl(m)`.
pub fn sl_root_heights(m: usize) -> Vec<usize> {
    let mut h = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            h.push(j - i);
        }
    }
    h
}

/// Richardson orbit dimension in `sl(m)` from the Levi block sizes:
/// `m² - Σ b²`.
pub fn sl_richardson_dim(white: &[bool]) -> i64 {
    let mut blocks = vec![1i64];
    for &w in white {
        if w {
            *blocks.last_mut().unwrap() += 1;
        } else {
            blocks.push(1);
        }
    }
    let m: i64 = blocks.iter().sum();
    m * m - blocks.iter().map(|b| b * b).sum::<i64>()
}

/// `dim Ō = 2 dim Gr_iso(r, 2n) = 2r(2n - r) - r(r - 1)` in `sp(2n)`.
pub fn sp_maximal_richardson_dim(n: i64, r: i64) -> i64 {
    2 * r * (2 * n - r) - r * (r - 1)
}

/// `dim Ō = 2 dim OGr(r, N)` in `so(N)`.
pub fn so_maximal_richardson_dim(big_n: i64, r: i64) -> i64 {
    2 * (r * (big_n - r) - r * (r + 1) / 2)
}

/// Whether `dim V - 1` is divisible by the standard dimension in the two
/// all-quadrics families of `so(N)`, for `N = 3k` and `N = 3k + 1`.
pub fn so_divisible(k: i64) -> (bool, bool) {
    let v_i = (3 * k * k - k) / 2;
    let v_ii = (3 * k * k + k) / 2;
    ((v_i - 1) % (3 * k) == 0, (v_ii - 1) % (3 * k + 1) == 0)
}
