//! Root systems of the simple Lie algebras, stored in simple-root coordinates.
//!
//! Everything here is integer arithmetic: the positive system is produced by
//! closing the simple roots under root strings, and the numeric invariants
//! (dimension, fundamental degrees, Weyl group order) are read off the
//! positive roots and their heights.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn rank_is_valid(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple type such as `A4` or `E8`.
///
/// Low-rank coincidences (`B1`, `C1`, `D2`, `D3`) are rejected here; the
/// isomorphism bookkeeping lives in [`crate::dynkin`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.rank_is_valid(rank) {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_classical(&self) -> bool {
        self.family.is_classical()
    }

    pub fn is_exceptional(&self) -> bool {
        !self.is_classical()
    }

    /// Every simple type of rank at most `max_rank`, one representative per
    /// isomorphism class (so `C2` is omitted in favour of `B2`).
    pub fn all_up_to(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if family == Family::C && rank == 2 {
                    continue;
                }
                if let Ok(t) = LieType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Dimension of the defining (standard) representation of the classical
    /// algebra: `m` for sl(m), `2n` for sp(2n), `N` for so(N).
    pub fn standard_dim(&self) -> Option<usize> {
        let n = self.rank;
        match self.family {
            Family::A => Some(n + 1),
            Family::B => Some(2 * n + 1),
            Family::C | Family::D => Some(2 * n),
            _ => None,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("unknown family in {s:?}")))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("missing or malformed rank in {s:?}")));
        }
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("rank out of range in {s:?}")))?;
        LieType::new(family, rank)
    }
}

/// Bourbaki-numbered Cartan matrix with `a[i][j] = <alpha_j, alpha_i^vee>`,
/// so the row of a short simple root carries the `-2`/`-3` entry.
pub fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family() {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::G => link(0, 1),
    }
    match t.family() {
        Family::B => a[n - 1][n - 2] = -2,
        Family::C => a[n - 2][n - 1] = -2,
        Family::F => a[2][1] = -2,
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// Half squared lengths `d_i` of the simple roots, normalized so the shortest
/// root has `d_i = 1`; satisfies `d_i a[i][j] = d_j a[j][i]`.
///
/// Works for any Cartan matrix of a disjoint union of finite types.
pub fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::one());
        let mut stack = vec![start];
        let mut component = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].unwrap();
                    d[j] = Some(di * Ratio::new(cartan[i][j], cartan[j][i]));
                    stack.push(j);
                    component.push(j);
                }
            }
        }
        let min = component.iter().map(|&i| d[i].unwrap()).min().unwrap();
        for &i in &component {
            d[i] = Some(d[i].unwrap() / min);
        }
    }
    d.into_iter()
        .map(|x| {
            let x = x.unwrap();
            debug_assert!(x.is_integer());
            x.to_integer()
        })
        .collect()
}

/// Closes the simple roots under root strings. Output is sorted by height,
/// then reverse-lexicographically (simple roots come out as `α_1, α_2, ..`), so two builds agree element for element.
pub fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |j: usize| {
        let mut v = vec![0i64; n];
        v[j] = 1;
        v
    };
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut all = Vec::new();
    let mut layer: Vec<Vec<i64>> = (0..n).map(unit).collect();
    while !layer.is_empty() {
        layer.sort_by(|a, b| b.cmp(a));
        layer.dedup();
        for r in &layer {
            known.insert(r.clone());
        }
        let mut next = Vec::new();
        for root in &layer {
            for j in 0..n {
                // alpha_j-string through `root`: root - p alpha_j .. root + q alpha_j
                let mut p = 0;
                let mut probe = root.clone();
                loop {
                    probe[j] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|i| root[i] * cartan[j][i]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = root.clone();
                    up[j] += 1;
                    next.push(up);
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all
}

pub fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}

/// Root system of a simple type together with its numeric invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub dim_g: usize,
    pub rank: usize,
    pub fundamental_degrees: Vec<u64>,
}

pub fn build_root_system(t: LieType) -> RootSystem {
    let cartan = cartan_matrix(t);
    let roots = positive_roots(&cartan);
    let rank = t.rank();
    let mut rs = RootSystem {
        lie_type: t,
        dim_g: 2 * roots.len() + rank,
        cartan_matrix: cartan,
        positive_roots: roots,
        rank,
        fundamental_degrees: Vec::new(),
    };
    rs.fundamental_degrees = fundamental_degrees(&rs);
    rs
}

impl RootSystem {
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// `dim N = dim g - rank`.
    pub fn dim_nilpotent_cone(&self) -> usize {
        self.dim_g - self.rank
    }

    /// Number of positive roots whose support lies inside `nodes`.
    pub fn positive_roots_supported_in(&self, nodes: &[usize]) -> usize {
        let mut inside = vec![false; self.rank];
        for &i in nodes {
            inside[i] = true;
        }
        self.positive_roots
            .iter()
            .filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || inside[i]))
            .count()
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty root system")
    }

    /// Number of positive roots at each height `1..=max`.
    pub fn height_counts(&self) -> Vec<usize> {
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for r in &self.positive_roots {
            *counts.entry(height(r)).or_default() += 1;
        }
        counts.into_values().collect()
    }
}

/// Degrees of the basic invariants. The positive-root counts per height form
/// a partition whose conjugate is the multiset of exponents; each degree is
/// an exponent plus one.
pub fn fundamental_degrees(rs: &RootSystem) -> Vec<u64> {
    let counts = rs.height_counts();
    let mut degrees: Vec<u64> = (0..rs.rank)
        .map(|i| counts.iter().filter(|&&k| k > i).count() as u64 + 1)
        .collect();
    degrees.sort_unstable();
    degrees
}

/// `|W| = prod over positive roots of (ht + 1) / ht`; independent of the
/// degree computation, which makes it a cross-check for `prod d_i`.
pub fn weyl_order(rs: &RootSystem) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for r in &rs.positive_roots {
        let h = height(r) as u64;
        num *= h + 1;
        den *= h;
        let g = num.gcd(&den);
        num /= &g;
        den /= &g;
    }
    assert!(
        den.is_one(),
        "Weyl order product did not reduce to an integer"
    );
    num
}

pub fn degree_product(degrees: &[u64]) -> BigUint {
    degrees.iter().fold(BigUint::one(), |acc, &d| acc * d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn a1_base_case() {
        let rs = build_root_system(t("A1"));
        assert_eq!(rs.num_positive_roots(), 1);
        assert_eq!(rs.dim_g, 3);
        assert_eq!(rs.fundamental_degrees, vec![2]);
        assert_eq!(weyl_order(&rs), BigUint::from(2u32));
    }

    #[test]
    fn g2_dimension_and_order() {
        let rs = build_root_system(t("G2"));
        assert_eq!(rs.dim_g, 14);
        assert_eq!(rs.fundamental_degrees, vec![2, 6]);
        assert_eq!(weyl_order(&rs), BigUint::from(12u32));
    }

    #[test]
    fn c3_dimension() {
        // 2n^2 + n at n = 3
        assert_eq!(build_root_system(t("C3")).dim_g, 21);
    }

    #[test]
    fn a2_degrees() {
        assert_eq!(build_root_system(t("A2")).fundamental_degrees, vec![2, 3]);
    }

    #[test]
    fn e8_degree_sum() {
        let rs = build_root_system(t("E8"));
        assert_eq!(rs.dim_g, 248);
        let sum: u64 = rs.fundamental_degrees.iter().sum();
        assert_eq!(sum, 128);
        assert_eq!(sum as usize, (rs.dim_g + rs.rank) / 2);
    }

    #[test]
    fn f4_weyl_order() {
        let rs = build_root_system(t("F4"));
        assert_eq!(weyl_order(&rs), BigUint::from(1152u32));
        assert_eq!(rs.fundamental_degrees, vec![2, 6, 8, 12]);
    }

    #[test]
    fn known_degree_tables() {
        let table: &[(&str, &[u64])] = &[
            ("A4", &[2, 3, 4, 5]),
            ("B3", &[2, 4, 6]),
            ("C4", &[2, 4, 6, 8]),
            ("D4", &[2, 4, 4, 6]),
            ("D5", &[2, 4, 5, 6, 8]),
            ("E6", &[2, 5, 6, 8, 9, 12]),
            ("E7", &[2, 6, 8, 10, 12, 14, 18]),
            ("E8", &[2, 8, 12, 14, 18, 20, 24, 30]),
        ];
        for (name, degrees) in table {
            assert_eq!(
                build_root_system(t(name)).fundamental_degrees,
                *degrees,
                "{name}"
            );
        }
    }

    #[test]
    fn positive_root_counts() {
        let table = [
            ("A7", 28),
            ("B5", 25),
            ("C6", 36),
            ("D6", 30),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
        ];
        for (name, count) in table {
            assert_eq!(
                build_root_system(t(name)).num_positive_roots(),
                count,
                "{name}"
            );
        }
    }

    #[test]
    fn rejects_degenerate_ranks() {
        for bad in ["C1", "B1", "D3", "D2", "E5", "E9", "F3", "G3", "A0"] {
            assert!(
                matches!(bad.parse::<LieType>(), Err(Error::InvalidRank { .. })),
                "{bad}"
            );
        }
        assert!(matches!("Z2".parse::<LieType>(), Err(Error::Parse(_))));
    }

    #[test]
    fn simple_roots_are_unit_vectors_and_roots_nonnegative() {
        for ty in LieType::all_up_to(8) {
            let rs = build_root_system(ty);
            for i in 0..rs.rank {
                let mut e = vec![0; rs.rank];
                e[i] = 1;
                assert_eq!(rs.positive_roots[i], e);
            }
            assert!(rs.positive_roots.iter().flatten().all(|&c| c >= 0));
        }
    }

    #[test]
    fn symmetrizer_matches_root_lengths() {
        assert_eq!(symmetrizer(&cartan_matrix(t("B3"))), vec![2, 2, 1]);
        assert_eq!(symmetrizer(&cartan_matrix(t("C3"))), vec![1, 1, 2]);
        assert_eq!(symmetrizer(&cartan_matrix(t("G2"))), vec![1, 3]);
        assert_eq!(symmetrizer(&cartan_matrix(t("F4"))), vec![2, 2, 1, 1]);
    }

    #[test]
    fn construction_is_deterministic() {
        for ty in LieType::all_up_to(6) {
            assert_eq!(build_root_system(ty), build_root_system(ty));
        }
    }
}
