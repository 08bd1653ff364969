//! Nilpotent orbit dimensions: Richardson orbits from markings, classical
//! orbits from Jordan types, and the type-A closure order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::MarkedDiagram;
use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, Family, LieType, RootSystem};

/// Largest `m` for which partitions of `m` are enumerated exhaustively.
pub const MAX_ENUMERATED_TOTAL: u32 = 30;

/// Jordan type: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// `[part^count]`.
    pub fn rectangle(part: u32, count: usize) -> Result<Self> {
        Partition::new(vec![part; count])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let longest = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=longest)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    fn odd_parts(&self) -> i64 {
        self.parts.iter().filter(|&&p| p % 2 == 1).count() as i64
    }

    fn transpose_square_sum(&self) -> i64 {
        self.transpose()
            .parts
            .iter()
            .map(|&q| (q as i64).pow(2))
            .sum()
    }

    /// Dominance order: `self >= other` when every partial sum of `self`
    /// is at least the matching partial sum of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.total() != other.total() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Whether this is the Jordan type of a nilpotent orbit of `t`.
    pub fn is_valid_for(&self, t: LieType) -> bool {
        let n = t.rank() as u32;
        let parity_ok = |bad_parity: u32| {
            self.parts
                .iter()
                .filter(|&&p| p % 2 == bad_parity)
                .all(|&p| self.multiplicity(p).is_multiple_of(2))
        };
        match t.family() {
            Family::A => self.total() == n + 1,
            Family::B => self.total() == 2 * n + 1 && parity_ok(0),
            Family::C => self.total() == 2 * n && parity_ok(1),
            Family::D => self.total() == 2 * n && parity_ok(0),
            _ => false,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// All partitions of `m`, in reverse lexicographic order (`[m]` first).
pub fn partitions_of(m: u32) -> Result<Vec<Partition>> {
    if m > MAX_ENUMERATED_TOTAL {
        return Err(Error::OutOfRange(format!(
            "partition enumeration capped at {MAX_ENUMERATED_TOTAL}, got {m}"
        )));
    }
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitSource {
    Marking(MarkedDiagram),
    JordanType(Partition),
    /// Dimensions given directly, e.g. a non-Richardson exceptional orbit.
    Supplied,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDescriptor {
    pub lie_type: LieType,
    pub source: OrbitSource,
    pub dim_g: i64,
    pub dim_orbit: i64,
    pub codim: i64,
    pub half_dim: i64,
}

impl OrbitDescriptor {
    pub fn new(lie_type: LieType, source: OrbitSource, dim_g: i64, dim_orbit: i64) -> Result<Self> {
        if dim_orbit < 0 || dim_orbit % 2 != 0 || dim_orbit > dim_g {
            return Err(Error::OutOfRange(format!(
                "orbit dimension {dim_orbit} in algebra of dimension {dim_g}"
            )));
        }
        Ok(OrbitDescriptor {
            lie_type,
            source,
            dim_g,
            dim_orbit,
            codim: dim_g - dim_orbit,
            half_dim: dim_orbit / 2,
        })
    }

    /// Orbit of `t` given only its dimension.
    pub fn supplied(t: LieType, dim_orbit: i64) -> Result<Self> {
        let dim_g = build_root_system(t).dim_g as i64;
        OrbitDescriptor::new(t, OrbitSource::Supplied, dim_g, dim_orbit)
    }

    pub fn rank(&self) -> i64 {
        self.lie_type.rank() as i64
    }

    /// The regular orbit, whose closure is the whole nilpotent cone.
    pub fn is_regular(&self) -> bool {
        self.dim_orbit == self.dim_g - self.rank()
    }
}

/// `dim O = 2 (|Φ⁺| - |Φ⁺_I|)`: the Richardson orbit is twice `dim G/P`.
pub fn richardson_dim(d: &MarkedDiagram) -> Result<OrbitDescriptor> {
    richardson_dim_in(&build_root_system(d.lie_type()), d)
}

/// As [`richardson_dim`], reusing an already built root system.
pub fn richardson_dim_in(rs: &RootSystem, d: &MarkedDiagram) -> Result<OrbitDescriptor> {
    assert_eq!(
        rs.lie_type,
        d.lie_type(),
        "root system does not match marking"
    );
    if d.is_full_white() {
        return Err(Error::FullWhiteMarking);
    }
    let levi_roots = rs.positive_roots_supported_in(&d.white_set());
    let dim = 2 * (rs.num_positive_roots() - levi_roots) as i64;
    OrbitDescriptor::new(
        d.lie_type(),
        OrbitSource::Marking(d.clone()),
        rs.dim_g as i64,
        dim,
    )
}

/// Orbit dimension from the Jordan type.
///
/// * sl(m): `m^2 - Σ (pᵀ_i)^2`
/// * sp(2n): `2n^2 + n - ½ Σ (pᵀ_i)^2 - ½ #{odd parts}`
/// * so(N): `(N^2 - N)/2 - ½ Σ (pᵀ_i)^2 + ½ #{odd parts}`
pub fn partition_dim(t: LieType, p: &Partition) -> Result<OrbitDescriptor> {
    if !t.is_classical() {
        return Err(Error::NotClassical(t.to_string()));
    }
    if !p.is_valid_for(t) {
        return Err(Error::InvalidPartition(format!(
            "{p} is not a Jordan type for {t}"
        )));
    }
    let sq = p.transpose_square_sum();
    let odd = p.odd_parts();
    let size = t.standard_dim().unwrap() as i64;
    let (dim_g, twice_dim) = match t.family() {
        Family::A => (size * size - 1, 2 * (size * size - sq)),
        Family::C => {
            let n = size / 2;
            let dim_g = 2 * n * n + n;
            (dim_g, 2 * dim_g - sq - odd)
        }
        Family::B | Family::D => {
            let dim_g = (size * size - size) / 2;
            (dim_g, 2 * dim_g - sq + odd)
        }
        _ => unreachable!(),
    };
    debug_assert!(twice_dim % 2 == 0);
    OrbitDescriptor::new(t, OrbitSource::JordanType(p.clone()), dim_g, twice_dim / 2)
}

/// Jordan type of the Richardson orbit of the maximal parabolic of sl(m)
/// crossed at node `r` (1-based): the transpose of `(m - r, r)`, i.e.
/// `[2^s, 1^(m-2s)]` with `s = min(r, m - r)`.
pub fn richardson_partition_a(m: u32, r: u32) -> Result<Partition> {
    if m < 2 || r < 1 || r >= m {
        return Err(Error::OutOfRange(format!("node {r} of sl({m})")));
    }
    let s = r.min(m - r) as usize;
    let mut parts = vec![2; s];
    parts.extend(std::iter::repeat_n(1, m as usize - 2 * s));
    Partition::new(parts)
}

/// Codimension of the boundary `Ō \ O` in `Ō` for an orbit of sl(m). The
/// closure order in type A is the dominance order, so the boundary is the
/// union of the orbits with strictly dominated Jordan type.
pub fn boundary_codim_a(m: u32, p: &Partition) -> Result<i64> {
    let t = LieType::new(Family::A, (m as usize).saturating_sub(1))
        .map_err(|_| Error::OutOfRange(format!("sl({m})")))?;
    if !p.is_valid_for(t) {
        return Err(Error::InvalidPartition(format!(
            "{p} is not a partition of {m}"
        )));
    }
    if p.parts().iter().all(|&x| x == 1) {
        return Err(Error::TrivialOrbit);
    }
    let top = partition_dim(t, p)?.dim_orbit;
    let mut best = None;
    for q in partitions_of(m)? {
        if q != *p && p.dominates(&q) {
            let d = partition_dim(t, &q)?.dim_orbit;
            best = Some(best.map_or(d, |b: i64| b.max(d)));
        }
    }
    Ok(top - best.expect("zero orbit lies below every nonzero orbit"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::parse_marking;

    fn t(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Independent count of positive roots of sl(m) whose support avoids the
    /// crossed nodes: pairs `i < j` with no black node in `i..j`.
    fn brute_force_sl_levi_roots(m: usize, black: &[usize]) -> usize {
        let mut count = 0;
        for i in 0..m {
            for j in i + 1..m {
                if !(i..j).any(|k| black.contains(&k)) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn sl5_marking_dimension() {
        // |Φ⁺| = 10, Levi roots {α2}, {α4}
        assert_eq!(brute_force_sl_levi_roots(5, &[0, 2]), 2);
        let o = richardson_dim(&parse_marking("A4:0101").unwrap()).unwrap();
        assert_eq!((o.dim_orbit, o.codim, o.dim_g), (16, 8, 24));
    }

    #[test]
    fn borel_gives_regular_orbit() {
        let o = richardson_dim(&parse_marking("A1:0").unwrap()).unwrap();
        assert_eq!(o.dim_orbit, 2);
        assert!(o.is_regular());
    }

    #[test]
    fn full_white_rejected() {
        assert_eq!(
            richardson_dim(&parse_marking("A3:111").unwrap()),
            Err(Error::FullWhiteMarking)
        );
    }

    #[test]
    fn symplectic_closed_form() {
        for n in 2..=8usize {
            for r in 1..=n {
                let d = MarkedDiagram::single_black(LieType::new(Family::C, n).unwrap(), r - 1)
                    .unwrap();
                let (n, r) = (n as i64, r as i64);
                assert_eq!(
                    richardson_dim(&d).unwrap().dim_orbit,
                    2 * r * (2 * n - r) - r * (r - 1)
                );
            }
        }
    }

    #[test]
    fn partition_dims() {
        assert_eq!(
            partition_dim(t("C3"), &part(&[3, 3])).unwrap().dim_orbit,
            14
        );
        assert_eq!(partition_dim(t("A1"), &part(&[2])).unwrap().dim_orbit, 2);
        let o = partition_dim(t("A3"), &part(&[2, 2])).unwrap();
        assert_eq!((o.dim_orbit, o.codim, o.dim_g), (8, 7, 15));
        // principal orbits have dimension dim g - rank
        assert_eq!(
            partition_dim(t("B3"), &part(&[7])).unwrap().dim_orbit,
            21 - 3
        );
        assert_eq!(
            partition_dim(t("D4"), &part(&[7, 1])).unwrap().dim_orbit,
            28 - 4
        );
        assert_eq!(
            partition_dim(t("C4"), &part(&[8])).unwrap().dim_orbit,
            36 - 4
        );
        // minimal orbits: 2h* - 2
        assert_eq!(
            partition_dim(t("D5"), &part(&[2, 2, 1, 1, 1, 1, 1, 1]))
                .unwrap()
                .dim_orbit,
            14
        );
        assert_eq!(
            partition_dim(t("C3"), &part(&[2, 1, 1, 1, 1]))
                .unwrap()
                .dim_orbit,
            6
        );
    }

    #[test]
    fn c3_partition_matches_marking() {
        let d = parse_marking("C3:101").unwrap();
        assert_eq!(richardson_dim(&d).unwrap().dim_orbit, 14);
    }

    #[test]
    fn partition_validity() {
        assert!(part(&[3, 3]).is_valid_for(t("C3")));
        assert!(!part(&[3, 2, 1]).is_valid_for(t("C3")));
        assert!(!part(&[2, 1, 1, 1]).is_valid_for(t("B2")));
        assert!(part(&[2, 2, 1]).is_valid_for(t("B2")));
        assert!(matches!(
            partition_dim(t("C3"), &part(&[3, 2, 1])),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn richardson_partitions() {
        assert_eq!(richardson_partition_a(4, 2).unwrap(), part(&[2, 2]));
        assert_eq!(richardson_partition_a(5, 1).unwrap(), part(&[2, 1, 1, 1]));
        assert_eq!(richardson_partition_a(2, 1).unwrap(), part(&[2]));
        assert_eq!(
            partition_dim(t("A4"), &part(&[2, 1, 1, 1]))
                .unwrap()
                .dim_orbit,
            8
        );
        assert!(matches!(
            richardson_partition_a(4, 4),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            richardson_partition_a(4, 0),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn boundary_codims() {
        assert_eq!(boundary_codim_a(4, &part(&[2, 2])).unwrap(), 2);
        assert_eq!(boundary_codim_a(3, &part(&[2, 1])).unwrap(), 4);
        assert_eq!(boundary_codim_a(5, &part(&[2, 1, 1, 1])).unwrap(), 8);
        assert_eq!(boundary_codim_a(2, &part(&[2])).unwrap(), 2);
        assert_eq!(
            boundary_codim_a(3, &part(&[1, 1, 1])),
            Err(Error::TrivialOrbit)
        );
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|m| partitions_of(m).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert!(partitions_of(31).is_err());
    }

    #[test]
    fn dominance() {
        assert!(part(&[2, 2]).dominates(&part(&[2, 1, 1])));
        assert!(!part(&[2, 1, 1]).dominates(&part(&[2, 2])));
        assert!(!part(&[3, 3]).dominates(&part(&[4, 1, 1])));
        assert!(!part(&[4, 1, 1]).dominates(&part(&[3, 3])));
    }
}
