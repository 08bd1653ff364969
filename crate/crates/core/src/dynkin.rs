//! Marked Dynkin diagrams and Levi sub-diagram surgery.
//!
//! A marking colours each simple root white (in `I`, inside the Levi factor)
//! or black (crossed). Text form is `FAMILY RANK ':' bits`, one bit per node
//! in Bourbaki order, `1` for white; for `D` the two fork tails are the last
//! two bits. Node indices in this API are 0-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{cartan_matrix, Family, LieType};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkedDiagram {
    lie_type: LieType,
    white: Vec<bool>,
}

impl MarkedDiagram {
    pub fn new(lie_type: LieType, white: Vec<bool>) -> Result<Self> {
        if white.len() != lie_type.rank() {
            return Err(Error::Parse(format!(
                "{} needs {} marks, got {}",
                lie_type,
                lie_type.rank(),
                white.len()
            )));
        }
        Ok(MarkedDiagram { lie_type, white })
    }

    /// All nodes black: the Borel subgroup, whose Richardson orbit is regular.
    pub fn borel(lie_type: LieType) -> Self {
        MarkedDiagram {
            lie_type,
            white: vec![false; lie_type.rank()],
        }
    }

    /// Maximal parabolic: only `black` (0-based) is crossed.
    pub fn single_black(lie_type: LieType, black: usize) -> Result<Self> {
        if black >= lie_type.rank() {
            return Err(Error::OutOfRange(format!(
                "node {} in {}",
                black + 1,
                lie_type
            )));
        }
        let mut white = vec![true; lie_type.rank()];
        white[black] = false;
        Ok(MarkedDiagram { lie_type, white })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn is_white(&self, node: usize) -> bool {
        self.white[node]
    }

    pub fn marks(&self) -> &[bool] {
        &self.white
    }

    pub fn white_set(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.white[i]).collect()
    }

    pub fn black_vertices(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !self.white[i]).collect()
    }

    pub fn is_borel(&self) -> bool {
        self.white.iter().all(|&w| !w)
    }

    pub fn is_full_white(&self) -> bool {
        self.white.iter().all(|&w| w)
    }

    pub fn render(&self) -> String {
        let bits: String = self
            .white
            .iter()
            .map(|&w| if w { '1' } else { '0' })
            .collect();
        format!("{}:{}", self.lie_type, bits)
    }

    /// Filled/hollow circles, black first: `●○●○`.
    pub fn pictogram(&self) -> String {
        self.white
            .iter()
            .map(|&w| if w { '○' } else { '●' })
            .collect()
    }
}

impl fmt::Display for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for MarkedDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_marking(s)
    }
}

pub fn parse_marking(text: &str) -> Result<MarkedDiagram> {
    let text = text.trim();
    let (head, bits) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected FAMILY RANK ':' bits, got {text:?}")))?;
    let lie_type: LieType = head.parse()?;
    let white = bits
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Parse(format!("bad mark {other:?} in {text:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    MarkedDiagram::new(lie_type, white)
}

/// Every marking of `t` except the fully white one, in increasing order of
/// the white bitmask (bit `i` = node `i`). Cloning restarts the stream.
#[derive(Debug, Clone)]
pub struct Markings {
    lie_type: LieType,
    next: u64,
    end: u64,
}

impl Iterator for Markings {
    type Item = MarkedDiagram;

    fn next(&mut self) -> Option<MarkedDiagram> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let white = (0..self.lie_type.rank())
            .map(|i| mask >> i & 1 == 1)
            .collect();
        Some(MarkedDiagram {
            lie_type: self.lie_type,
            white,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Markings {}

pub fn enumerate_markings(t: LieType) -> Markings {
    assert!(t.rank() < 64, "too many nodes to enumerate");
    Markings {
        lie_type: t,
        next: 0,
        end: (1u64 << t.rank()) - 1,
    }
}

/// One connected piece of the sub-diagram on `I ∪ {β}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviComponent {
    pub diagram: MarkedDiagram,
    /// Parent node for each node of `diagram`, in the component's Bourbaki order.
    pub parent_nodes: Vec<usize>,
}

impl LeviComponent {
    pub fn contains_black(&self) -> bool {
        !self.diagram.is_full_white()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviReduction {
    pub beta: usize,
    pub components: Vec<LeviComponent>,
}

impl LeviReduction {
    /// The component carrying the new black vertex `β`.
    pub fn black_component(&self) -> &LeviComponent {
        self.components
            .iter()
            .find(|c| c.parent_nodes.contains(&self.beta))
            .expect("beta belongs to some component")
    }

    /// `A2 x A1` style label.
    pub fn type_label(&self) -> String {
        self.components
            .iter()
            .map(|c| c.diagram.lie_type().to_string())
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

fn adjacent(cartan: &[Vec<i64>], i: usize, j: usize) -> bool {
    i != j && cartan[i][j] != 0
}

/// Connected components of the sub-diagram on `nodes`, each sorted, ordered
/// by smallest member.
fn components_of(cartan: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; cartan.len()];
    let mut out = Vec::new();
    for &start in nodes {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &j in nodes {
                if !seen[j] && adjacent(cartan, i, j) {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

/// Identifies a connected finite-type Cartan matrix and returns its type
/// together with the Bourbaki ordering (`order[k]` is the local index of
/// node `k`). Ties between symmetric orientations are broken by `tiebreak`,
/// preferring the smaller key first.
///
/// Low-rank coincidences are resolved here: a single node is `A1` whatever
/// its length, a double-bonded pair is `B2`, and `D3` never arises because a
/// three-node path is read as `A3`.
pub fn classify_connected(sub: &[Vec<i64>], tiebreak: &[usize]) -> Result<(LieType, Vec<usize>)> {
    let n = sub.len();
    let neighbours = |i: usize| -> Vec<usize> { (0..n).filter(|&j| adjacent(sub, i, j)).collect() };
    let bond = |i: usize, j: usize| sub[i][j] * sub[j][i];
    let shape_err = || Error::Unsupported("not a connected finite-type diagram".into());

    if n == 1 {
        return Ok((LieType::new(Family::A, 1)?, vec![0]));
    }

    // Walks from `from` away from `prev` until a leaf.
    let walk = |prev: usize, from: usize| -> Vec<usize> {
        let mut path = vec![from];
        let (mut p, mut c) = (prev, from);
        loop {
            let next: Vec<usize> = neighbours(c).into_iter().filter(|&x| x != p).collect();
            match next.as_slice() {
                [x] => {
                    path.push(*x);
                    p = c;
                    c = *x;
                }
                _ => break,
            }
        }
        path
    };

    if let Some(branch) = (0..n).find(|&i| neighbours(i).len() >= 3) {
        let mut arms: Vec<Vec<usize>> = neighbours(branch)
            .into_iter()
            .map(|x| walk(branch, x))
            .collect();
        if arms.len() != 3 || arms.iter().flatten().count() + 1 != n {
            return Err(shape_err());
        }
        if (0..n).any(|i| (0..n).any(|j| i != j && bond(i, j) > 1)) {
            return Err(shape_err());
        }
        let leaf_key = |arm: &Vec<usize>| tiebreak[*arm.last().unwrap()];
        arms.sort_by_key(|a| (a.len(), leaf_key(a)));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        return match lens.as_slice() {
            [1, 1, k] => {
                // D_{k+3}; for D4 every arm has length one and the smallest
                // leaf becomes node 1.
                let (long, tails) = if *k == 1 {
                    (arms[0].clone(), vec![arms[1][0], arms[2][0]])
                } else {
                    let mut tails = vec![arms[0][0], arms[1][0]];
                    tails.sort_by_key(|&x| tiebreak[x]);
                    (arms[2].clone(), tails)
                };
                let mut order: Vec<usize> = long.into_iter().rev().collect();
                order.push(branch);
                order.extend(tails);
                Ok((LieType::new(Family::D, n)?, order))
            }
            [1, 2, 2..=4] => {
                let (short, left, long) = (arms[0][0], &arms[1], &arms[2]);
                let mut order = vec![left[1], short, left[0], branch];
                order.extend(long);
                Ok((LieType::new(Family::E, n)?, order))
            }
            _ => Err(shape_err()),
        };
    }

    let ends: Vec<usize> = (0..n).filter(|&i| neighbours(i).len() == 1).collect();
    if ends.len() != 2 {
        return Err(shape_err());
    }
    let mut path = vec![ends[0]];
    path.extend(walk(ends[0], neighbours(ends[0])[0]));
    if path.len() != n {
        return Err(shape_err());
    }

    let bonds: Vec<i64> = path.windows(2).map(|w| bond(w[0], w[1])).collect();
    let multiple: Vec<usize> = (0..bonds.len()).filter(|&k| bonds[k] > 1).collect();
    // `i` is long relative to a bonded neighbour `j` when its row entry is -1.
    let is_long = |i: usize, j: usize| sub[i][j] == -1 && sub[j][i] < -1;

    match multiple.as_slice() {
        [] => {
            if tiebreak[path[0]] > tiebreak[path[n - 1]] {
                path.reverse();
            }
            Ok((LieType::new(Family::A, n)?, path))
        }
        [k] if bonds[*k] == 3 => {
            if n != 2 {
                return Err(shape_err());
            }
            // G2: node 1 is short
            if is_long(path[0], path[1]) {
                path.reverse();
            }
            Ok((LieType::new(Family::G, 2)?, path))
        }
        [k] if bonds[*k] == 2 => {
            if n == 4 && *k == 1 {
                if !is_long(path[1], path[2]) {
                    path.reverse();
                }
                return Ok((LieType::new(Family::F, 4)?, path));
            }
            if *k == 0 {
                path.reverse();
            } else if *k != n - 2 {
                return Err(shape_err());
            }
            let last_is_long = is_long(path[n - 1], path[n - 2]);
            if n == 2 {
                if last_is_long {
                    path.reverse();
                }
                return Ok((LieType::new(Family::B, 2)?, path));
            }
            let family = if last_is_long { Family::C } else { Family::B };
            Ok((LieType::new(family, n)?, path))
        }
        _ => Err(shape_err()),
    }
}

/// Passes from the parabolic `P_I` to `P_{I ∪ {β}}`: the centralizer of a
/// generic element of its centre has semisimple part the sub-diagram on
/// `I ∪ {β}`, and the induced parabolic has `β` as its only black vertex.
pub fn levi_reduce(d: &MarkedDiagram, beta: usize) -> Result<LeviReduction> {
    if beta >= d.rank() || d.is_white(beta) {
        return Err(Error::NotBlackVertex(beta));
    }
    let cartan = cartan_matrix(d.lie_type());
    let mut nodes = d.white_set();
    nodes.push(beta);
    nodes.sort_unstable();

    let components = components_of(&cartan, &nodes)
        .into_iter()
        .map(|comp| {
            let sub: Vec<Vec<i64>> = comp
                .iter()
                .map(|&i| comp.iter().map(|&j| cartan[i][j]).collect())
                .collect();
            let (lie_type, order) = classify_connected(&sub, &comp)?;
            let parent_nodes: Vec<usize> = order.iter().map(|&k| comp[k]).collect();
            let white = parent_nodes.iter().map(|&p| p != beta).collect();
            Ok(LeviComponent {
                diagram: MarkedDiagram::new(lie_type, white)?,
                parent_nodes,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(LeviReduction { beta, components })
}

/// Left-to-right position of a node; the two fork tails of `D` share the
/// rightmost position.
fn position(t: LieType, node: usize) -> usize {
    if t.family() == Family::D && node == t.rank() - 1 {
        node - 1
    } else {
        node
    }
}

/// Candidate black vertices for the reduction step, in preference order.
///
/// Let `w` be the leftmost white vertex. If a black vertex sits immediately
/// to its left, that vertex is the candidate. Otherwise `w` is at the left
/// end; walk right through the maximal all-white run containing `w` and take
/// the black vertex just past its right end. For `D` the leftmost white
/// vertex and the right-adjacent black vertex may each be ambiguous at the
/// fork, so more than one candidate can come back.
pub fn select_beta_candidates(d: &MarkedDiagram) -> Result<Vec<usize>> {
    let t = d.lie_type();
    if !t.is_classical() {
        return Err(Error::NotClassical(t.to_string()));
    }
    let whites = d.white_set();
    if whites.is_empty() {
        return Err(Error::NoWhiteVertex);
    }
    if d.is_full_white() {
        return Err(Error::FullWhiteMarking);
    }
    let cartan = cartan_matrix(t);
    let cartan = &cartan;
    let n = d.rank();
    let neighbours = |i: usize| (0..n).filter(move |&j| adjacent(cartan, i, j));

    let leftmost = whites.iter().map(|&w| position(t, w)).min().unwrap();
    let starts: Vec<usize> = whites
        .iter()
        .copied()
        .filter(|&w| position(t, w) == leftmost)
        .collect();

    let mut out = Vec::new();
    for w in starts {
        let left_black: Vec<usize> = neighbours(w)
            .filter(|&j| position(t, j) < position(t, w) && !d.is_white(j))
            .collect();
        if !left_black.is_empty() {
            out.extend(left_black);
            continue;
        }
        let mut run = vec![w];
        let mut stack = vec![w];
        while let Some(i) = stack.pop() {
            for j in neighbours(i) {
                if d.is_white(j) && !run.contains(&j) {
                    run.push(j);
                    stack.push(j);
                }
            }
        }
        let right_end = run.iter().map(|&i| position(t, i)).max().unwrap();
        for &w2 in run.iter().filter(|&&i| position(t, i) == right_end) {
            out.extend(neighbours(w2).filter(|&j| position(t, j) > right_end && !d.is_white(j)));
        }
    }
    let mut seen = Vec::new();
    out.retain(|x| {
        let fresh = !seen.contains(x);
        seen.push(*x);
        fresh
    });
    if out.is_empty() {
        return Err(Error::Unsupported(format!(
            "no black vertex adjacent to the leftmost white run of {d}"
        )));
    }
    Ok(out)
}

pub fn select_beta(d: &MarkedDiagram) -> Result<usize> {
    Ok(select_beta_candidates(d)?[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MarkedDiagram {
        parse_marking(s).unwrap()
    }

    #[test]
    fn parse_sl5_marking() {
        let d = m("A4:0101");
        assert_eq!(d.white_set(), vec![1, 3]);
        assert_eq!(d.black_vertices(), vec![0, 2]);
        assert_eq!(d.pictogram(), "●○●○");
    }

    #[test]
    fn parse_borel_and_c3() {
        assert!(m("A1:0").is_borel());
        let d = m("C3:110");
        assert_eq!(d.white_set(), vec![0, 1]);
        assert_eq!(d.black_vertices(), vec![2]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_marking("Z9:00"), Err(Error::Parse(_))));
        assert!(matches!(parse_marking("A4:010"), Err(Error::Parse(_))));
        assert!(matches!(parse_marking("A4:01x1"), Err(Error::Parse(_))));
        assert!(matches!(parse_marking("A4"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_marking("D3:000"),
            Err(Error::InvalidRank { .. })
        ));
        assert!(matches!(
            parse_marking("C1:0"),
            Err(Error::InvalidRank { .. })
        ));
    }

    #[test]
    fn sl5_first_black_reduces_to_a2_times_a1() {
        let r = levi_reduce(&m("A4:0101"), 0).unwrap();
        assert_eq!(r.type_label(), "A2 x A1");
        assert_eq!(r.components[0].diagram.render(), "A2:01");
        assert_eq!(r.components[0].diagram.pictogram(), "●○");
        assert!(r.components[1].diagram.is_full_white());
        assert_eq!(r.black_component().diagram.render(), "A2:01");
    }

    #[test]
    fn sl5_second_black_reduces_to_a3() {
        let r = levi_reduce(&m("A4:0101"), 2).unwrap();
        assert_eq!(r.type_label(), "A3");
        assert_eq!(r.components[0].diagram.pictogram(), "○●○");
        assert_eq!(r.components[0].parent_nodes, vec![1, 2, 3]);
    }

    #[test]
    fn single_black_reduction_is_identity() {
        for s in [
            "A4:1101",
            "C3:110",
            "B3:011",
            "D5:11101",
            "D5:11110",
            "E6:111011",
            "F4:1011",
            "G2:01",
        ] {
            let d = m(s);
            let beta = d.black_vertices()[0];
            let r = levi_reduce(&d, beta).unwrap();
            assert_eq!(r.components.len(), 1, "{s}");
            assert_eq!(r.components[0].diagram, d, "{s}");
        }
    }

    #[test]
    fn reduce_rejects_white_beta() {
        assert_eq!(levi_reduce(&m("A4:0101"), 1), Err(Error::NotBlackVertex(1)));
    }

    #[test]
    fn low_rank_canonicalization() {
        // Fork of D5 without node 3: two separate A1 components.
        let r = levi_reduce(&m("D5:00011"), 2).unwrap();
        assert_eq!(r.type_label(), "A3");
        assert_eq!(r.components[0].parent_nodes, vec![3, 2, 4]);
        assert_eq!(r.components[0].diagram.render(), "A3:101");

        // C-tail of rank two is B2 with the long root first.
        let r = levi_reduce(&m("C4:0001"), 2).unwrap();
        assert_eq!(r.type_label(), "B2");
        assert_eq!(r.components[0].parent_nodes, vec![3, 2]);

        // F4 without node 1 is C3.
        let r = levi_reduce(&m("F4:0111"), 0).unwrap();
        assert_eq!(r.type_label(), "F4");
        let r = levi_reduce(&m("F4:0011"), 1).unwrap();
        assert_eq!(r.type_label(), "C3");
        assert_eq!(r.components[0].parent_nodes, vec![3, 2, 1]);

        // E8 minus node 8 is E7; minus node 1 is D7.
        let r = levi_reduce(&m("E8:01111110"), 0).unwrap();
        assert_eq!(r.type_label(), "E7");
        assert_eq!(r.components[0].parent_nodes, (0..7).collect::<Vec<_>>());
        let r = levi_reduce(&m("E8:00111111"), 1).unwrap();
        assert_eq!(r.type_label(), "D7");
    }

    #[test]
    fn select_beta_examples() {
        assert_eq!(select_beta(&m("A4:0101")).unwrap(), 0);
        assert_eq!(select_beta(&m("A4:1001")).unwrap(), 1);
        assert_eq!(select_beta(&m("C3:110")).unwrap(), 2);
    }

    #[test]
    fn select_beta_d_fork_is_ambiguous() {
        // Only the fork tails are black: both are right-adjacent to node n-2.
        assert_eq!(select_beta_candidates(&m("D5:11100")).unwrap(), vec![3, 4]);
        // Leftmost white may be either tail.
        assert_eq!(select_beta_candidates(&m("D5:00011")).unwrap(), vec![2]);
    }

    #[test]
    fn select_beta_errors() {
        assert_eq!(select_beta(&m("A3:000")), Err(Error::NoWhiteVertex));
        assert!(matches!(
            select_beta(&m("E6:010101")),
            Err(Error::NotClassical(_))
        ));
    }

    #[test]
    fn enumerate_counts() {
        let a1: Vec<_> = enumerate_markings("A1".parse().unwrap()).collect();
        assert_eq!(a1.len(), 1);
        assert_eq!(a1[0].render(), "A1:0");
        assert_eq!(enumerate_markings("A2".parse().unwrap()).count(), 3);
        assert_eq!(enumerate_markings("C3".parse().unwrap()).count(), 7);
        assert!(enumerate_markings("E7".parse().unwrap()).all(|d| !d.is_full_white()));
    }

    #[test]
    fn render_round_trip() {
        for s in ["A4:0101", "D6:101011", "E8:00000000", "G2:10"] {
            assert_eq!(m(s).render(), s);
        }
    }
}
