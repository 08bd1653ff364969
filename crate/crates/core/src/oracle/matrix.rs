//! Explicit nilpotent cones of sl(2), sl(3) and sp(4) as matrices over `Q`.
//!
//! `sp(4)` is realised with the antidiagonal form
//! `J = [[0, K], [-K, 0]]`, `K = antidiag(1, 1)`, so that `X ∈ sp(4)` iff
//! `XᵀJ + JX = 0`. With this choice the upper triangular elements of `sp(4)`
//! form a Borel subalgebra.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg::{self, frac, q, Matrix, Q};
use crate::error::{Error, Result};

/// Seed for oracle sampling when `ORBITCI_SEED` is unset.
pub const DEFAULT_SEED: u64 = 20_061_205;

pub fn seed_from_env() -> u64 {
    std::env::var("ORBITCI_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algebra {
    Sl2,
    Sl3,
    Sp4,
}

impl Algebra {
    pub const ALL: [Algebra; 3] = [Algebra::Sl2, Algebra::Sl3, Algebra::Sp4];

    pub fn size(self) -> usize {
        match self {
            Algebra::Sl2 => 2,
            Algebra::Sl3 => 3,
            Algebra::Sp4 => 4,
        }
    }

    pub fn rank(self) -> usize {
        self.invariant_degrees().len()
    }

    pub fn dim(self) -> usize {
        match self {
            Algebra::Sl2 => 3,
            Algebra::Sl3 => 8,
            Algebra::Sp4 => 10,
        }
    }

    /// Degrees of the characteristic-polynomial coefficients used as basic
    /// invariants.
    pub fn invariant_degrees(self) -> &'static [usize] {
        match self {
            Algebra::Sl2 => &[2],
            Algebra::Sl3 => &[2, 3],
            Algebra::Sp4 => &[2, 4],
        }
    }

    pub fn symplectic_form() -> Matrix {
        linalg::from_ints(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[-1, 0, 0, 0]])
    }

    /// Rows of the linear constraints cutting the algebra out of `gl(n)`,
    /// in the coordinates `X[i][j]` with `(i, j)` restricted by `allowed`.
    fn constraints(self, cells: &[(usize, usize)]) -> Matrix {
        let n = self.size();
        match self {
            Algebra::Sl2 | Algebra::Sl3 => {
                vec![cells
                    .iter()
                    .map(|&(i, j)| if i == j { Q::one() } else { Q::zero() })
                    .collect()]
            }
            Algebra::Sp4 => {
                let jf = Self::symplectic_form();
                let mut rows = Vec::new();
                for a in 0..n {
                    for b in 0..n {
                        rows.push(
                            cells
                                .iter()
                                .map(|&(i, j)| {
                                    let mut c = Q::zero();
                                    if j == a {
                                        c += &jf[i][b];
                                    }
                                    if j == b {
                                        c += &jf[a][i];
                                    }
                                    c
                                })
                                .collect(),
                        );
                    }
                }
                rows
            }
        }
    }

    fn basis_where(self, allowed: impl Fn(usize, usize) -> bool) -> Vec<Matrix> {
        let n = self.size();
        let cells: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| allowed(i, j))
            .collect();
        linalg::nullspace(&self.constraints(&cells), cells.len())
            .into_iter()
            .map(|v| {
                let mut m = linalg::zeros(n, n);
                for (x, &(i, j)) in v.into_iter().zip(&cells) {
                    m[i][j] = x;
                }
                m
            })
            .collect()
    }

    pub fn basis(self) -> Vec<Matrix> {
        self.basis_where(|_, _| true)
    }

    pub fn upper_nilradical(self) -> Vec<Matrix> {
        self.basis_where(|i, j| i < j)
    }

    pub fn lower_nilradical(self) -> Vec<Matrix> {
        self.basis_where(|i, j| i > j)
    }

    pub fn cartan(self) -> Vec<Matrix> {
        self.basis_where(|i, j| i == j)
    }

    pub fn contains(self, x: &Matrix) -> bool {
        let n = self.size();
        if x.len() != n || x.iter().any(|r| r.len() != n) {
            return false;
        }
        match self {
            Algebra::Sl2 | Algebra::Sl3 => linalg::trace(x).is_zero(),
            Algebra::Sp4 => {
                let j = Self::symplectic_form();
                linalg::is_zero(&linalg::add(
                    &linalg::mul(&linalg::transpose(x), &j),
                    &linalg::mul(&j, x),
                ))
            }
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::Sl2 => "sl(2)",
            Algebra::Sl3 => "sl(3)",
            Algebra::Sp4 => "sp(4)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPoint {
    algebra: Algebra,
    entries: Matrix,
}

impl MatrixPoint {
    pub fn new(algebra: Algebra, entries: Matrix) -> Result<Self> {
        if !algebra.contains(&entries) {
            return Err(Error::OutOfRange(format!("matrix is not in {algebra}")));
        }
        Ok(MatrixPoint { algebra, entries })
    }

    pub fn zero(algebra: Algebra) -> Self {
        let n = algebra.size();
        MatrixPoint {
            algebra,
            entries: linalg::zeros(n, n),
        }
    }

    /// Sum of the upper nilradical basis: a single Jordan block up to
    /// conjugation.
    pub fn regular_nilpotent(algebra: Algebra) -> Self {
        let n = algebra.size();
        let entries = algebra
            .upper_nilradical()
            .iter()
            .fold(linalg::zeros(n, n), |acc, b| linalg::add(&acc, b));
        MatrixPoint { algebra, entries }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn power(&self, k: u32) -> Matrix {
        let mut out = linalg::identity(self.algebra.size());
        for _ in 0..k {
            out = linalg::mul(&out, &self.entries);
        }
        out
    }

    pub fn is_nilpotent(&self) -> bool {
        linalg::is_zero(&self.power(self.algebra.size() as u32))
    }
}

/// `A + εB` with `ε² = 0`.
#[derive(Clone)]
struct DualMatrix {
    re: Matrix,
    eps: Matrix,
}

impl DualMatrix {
    fn mul(&self, other: &DualMatrix) -> DualMatrix {
        DualMatrix {
            re: linalg::mul(&self.re, &other.re),
            eps: linalg::add(
                &linalg::mul(&self.re, &other.eps),
                &linalg::mul(&self.eps, &other.re),
            ),
        }
    }

    fn trace(&self) -> (Q, Q) {
        (linalg::trace(&self.re), linalg::trace(&self.eps))
    }
}

/// Coefficients `c_1..c_n` of `det(λ - X) = λⁿ + c_1 λⁿ⁻¹ + … + c_n` and their
/// derivatives in the direction `dx`, by Faddeev–LeVerrier.
fn char_poly_with_derivative(x: &Matrix, dx: &Matrix) -> Vec<(Q, Q)> {
    let n = x.len();
    let xd = DualMatrix {
        re: x.clone(),
        eps: dx.clone(),
    };
    let id = linalg::identity(n);
    let mut m = DualMatrix {
        re: linalg::zeros(n, n),
        eps: linalg::zeros(n, n),
    };
    let mut c = (Q::one(), Q::zero());
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let xm = xd.mul(&m);
        m = DualMatrix {
            re: linalg::add(&xm.re, &linalg::scale(&id, &c.0)),
            eps: linalg::add(&xm.eps, &linalg::scale(&id, &c.1)),
        };
        let (t0, t1) = xd.mul(&m).trace();
        let k = q(k as i64);
        c = (-t0 / &k, -t1 / &k);
        out.push(c.clone());
    }
    out
}

/// The basic invariants at `p`: characteristic-polynomial coefficients of
/// the degrees listed by [`Algebra::invariant_degrees`].
pub fn invariants_at(p: &MatrixPoint) -> Vec<Q> {
    let n = p.algebra.size();
    let coeffs = char_poly_with_derivative(&p.entries, &linalg::zeros(n, n));
    p.algebra
        .invariant_degrees()
        .iter()
        .map(|&d| coeffs[d - 1].0.clone())
        .collect()
}

/// Rank of the differential of the invariant map at `p`, restricted to the
/// algebra.
pub fn jacobian_rank_at(p: &MatrixPoint) -> usize {
    let degrees = p.algebra.invariant_degrees();
    let columns: Vec<Vec<Q>> = p
        .algebra
        .basis()
        .iter()
        .map(|e| {
            let coeffs = char_poly_with_derivative(&p.entries, e);
            degrees.iter().map(|&d| coeffs[d - 1].1.clone()).collect()
        })
        .collect();
    linalg::rank(&linalg::transpose(&columns))
}

fn small_rational(rng: &mut ChaCha8Rng) -> Q {
    frac(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

fn combination(rng: &mut ChaCha8Rng, basis: &[Matrix], n: usize) -> Matrix {
    basis.iter().fold(linalg::zeros(n, n), |acc, b| {
        linalg::add(&acc, &linalg::scale(b, &small_rational(rng)))
    })
}

fn exp_nilpotent(y: &Matrix) -> Matrix {
    let n = y.len();
    let mut term = linalg::identity(n);
    let mut out = term.clone();
    for k in 1..n {
        term = linalg::scale(&linalg::mul(&term, y), &frac(1, k as i64));
        out = linalg::add(&out, &term);
    }
    out
}

/// Seeded sample of points cycling through four shapes: generic elements,
/// conjugated nilpotents, Borel nilpotents and nilpotents plus a small
/// Cartan perturbation.
pub fn sample_points(algebra: Algebra, count: usize, seed: u64) -> Vec<MatrixPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(algebra.size() as u64);
    let n = algebra.size();
    let full = algebra.basis();
    let upper = algebra.upper_nilradical();
    let lower = algebra.lower_nilradical();
    let cartan = algebra.cartan();
    (0..count)
        .map(|i| {
            let entries = match i % 4 {
                0 => combination(&mut rng, &full, n),
                1 => {
                    let nil = combination(&mut rng, &upper, n);
                    let y = combination(&mut rng, &lower, n);
                    let g = exp_nilpotent(&y);
                    let g_inv = exp_nilpotent(&linalg::scale(&y, &q(-1)));
                    linalg::mul(&linalg::mul(&g, &nil), &g_inv)
                }
                2 => combination(&mut rng, &upper, n),
                _ => {
                    let h = combination(&mut rng, &cartan, n);
                    let eps = frac(1, rng.gen_range(5..=50));
                    linalg::add(&combination(&mut rng, &upper, n), &linalg::scale(&h, &eps))
                }
            };
            MatrixPoint::new(algebra, entries).expect("sample stays in the algebra")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeCheck {
    pub algebra: Algebra,
    pub samples: usize,
    pub nilpotent: usize,
    pub mismatches: usize,
}

/// Compares "all invariants vanish" with "Xⁿ = 0" on seeded samples.
pub fn check_cone(algebra: Algebra, count: usize, seed: u64) -> ConeCheck {
    let mut nilpotent = 0;
    let mut mismatches = 0;
    for p in sample_points(algebra, count, seed) {
        let nil = p.is_nilpotent();
        let vanish = invariants_at(&p).iter().all(Zero::is_zero);
        nilpotent += nil as usize;
        mismatches += (nil != vanish) as usize;
    }
    ConeCheck {
        algebra,
        samples: count,
        nilpotent,
        mismatches,
    }
}
