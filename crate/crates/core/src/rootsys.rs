//! The nine simple root-system families in explicit ambient coordinates.
//!
//! Simple roots and the dual coweight basis are hardcoded exactly as in the
//! classical realizations (the A family lives in dimension rank+1, the E and
//! F families use half-integer vectors). The only operations ever needed
//! downstream are the root-coweight pairing and vector addition, so no inner
//! product on the ambient space is defined anywhere.
//!
//! Root sets are generated twice, independently: [`roots_from_formula`]
//! enumerates the closed coordinate descriptions per family, and
//! [`roots_by_closure`] grows the positive system from the simple roots with
//! the string method driven by the Cartan pairing. Tests hold the two routes
//! set-equal; collapsing them would hide exactly the class of bookkeeping
//! error this crate exists to catch.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::exactvec::{Frac, HalfVec, IntMatrix};

/// Upper rank bound applied by the command-line surface and the classifier
/// enumeration by default.
pub const DEFAULT_MAX_RANK: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
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
    pub fn from_char(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
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

    /// Smallest rank at which the family is defined without collapsing into
    /// an earlier one (C starts at 3 because the rank-2 double-bond chain is
    /// reported as B2).
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
            Family::E => 6,
            Family::F => 4,
            Family::G => 2,
        }
    }

    fn rank_valid(self, rank: usize) -> bool {
        match self {
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
            _ => rank >= self.min_rank(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TypeError {
    #[error("unknown family letter '{0}'")]
    UnknownFamily(char),
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: Family, rank: usize },
}

/// A simple type such as A5, D7, E8.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<SimpleType, TypeError> {
        if family.rank_valid(rank) {
            Ok(SimpleType { family, rank })
        } else {
            Err(TypeError::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

fn x2(coords: &[i64]) -> HalfVec {
    HalfVec::from_x2(coords.to_vec())
}

/// One ambient basis vector times `c` (doubled input), dimension `dim`.
fn e(dim: usize, i: usize, c_x2: i64) -> HalfVec {
    let mut v = vec![0; dim];
    v[i] = c_x2;
    HalfVec::from_x2(v)
}

fn e2(dim: usize, i: usize, ci: i64, j: usize, cj: i64) -> HalfVec {
    let mut v = vec![0; dim];
    v[i] = ci;
    v[j] = cj;
    HalfVec::from_x2(v)
}

/// Simple roots and coweights in the published coordinates.
/// Returns (ambient dimension, simple roots, coweight basis).
fn simple_system(stype: SimpleType) -> (usize, Vec<HalfVec>, Vec<HalfVec>) {
    let n = stype.rank();
    match stype.family() {
        Family::A => {
            let dim = n + 1;
            let simples: Vec<_> = (0..n).map(|i| e2(dim, i, 2, i + 1, -2)).collect();
            let coweights = simples.clone();
            (dim, simples, coweights)
        }
        Family::B => {
            let dim = n;
            let mut simples: Vec<_> = (0..n - 1).map(|i| e2(dim, i, 2, i + 1, -2)).collect();
            simples.push(e(dim, n - 1, 2));
            let mut coweights: Vec<_> = (0..n - 1).map(|i| e2(dim, i, 2, i + 1, -2)).collect();
            coweights.push(e(dim, n - 1, 4));
            (dim, simples, coweights)
        }
        Family::C => {
            let dim = n;
            let mut simples: Vec<_> = (0..n - 1).map(|i| e2(dim, i, 2, i + 1, -2)).collect();
            simples.push(e(dim, n - 1, 4));
            let mut coweights: Vec<_> = (0..n - 1).map(|i| e2(dim, i, 2, i + 1, -2)).collect();
            coweights.push(e(dim, n - 1, 2));
            (dim, simples, coweights)
        }
        Family::D => {
            let dim = n;
            let mut simples: Vec<_> = (0..n - 1).map(|i| e2(dim, i, 2, i + 1, -2)).collect();
            simples.push(e2(dim, n - 2, 2, n - 1, 2));
            let coweights = simples.clone();
            (dim, simples, coweights)
        }
        Family::G => {
            // rank 2 in a 3-dimensional ambient space; the second coweight is
            // used exactly as published, -2e1-e2-e3, which reproduces the
            // Cartan matrix even though it is not a sign-mirror of alpha2
            let simples = vec![x2(&[2, -2, 0]), x2(&[-4, 2, 2])];
            let coweights = vec![x2(&[2, -2, 0]), x2(&[-4, -2, -2])];
            (3, simples, coweights)
        }
        Family::F => {
            let simples = vec![
                x2(&[0, 2, -2, 0]),
                x2(&[0, 0, 2, -2]),
                x2(&[0, 0, 0, 2]),
                x2(&[1, -1, -1, -1]),
            ];
            let coweights = vec![
                x2(&[0, 2, -2, 0]),
                x2(&[0, 0, 2, -2]),
                x2(&[0, 0, 0, 4]),
                x2(&[2, -2, -2, -2]),
            ];
            (4, simples, coweights)
        }
        Family::E => match n {
            6 => {
                let mut simples = vec![x2(&[1, -1, -1, -1, -1, 1]), x2(&[2, 2, 0, 0, 0, 0])];
                let mut coweights = vec![x2(&[1, -1, -1, -1, -1, 3]), x2(&[2, 2, 0, 0, 0, 0])];
                for i in 3..=6 {
                    // alpha_i = e_{i-1} - e_{i-2} in 1-based ambient labels
                    let v = e2(6, i - 3, -2, i - 2, 2);
                    simples.push(v.clone());
                    coweights.push(v);
                }
                (6, simples, coweights)
            }
            7 => {
                let mut simples = vec![
                    x2(&[-1, -1, -1, -1, -1, -1, 1]),
                    x2(&[-2, 2, 0, 0, 0, 0, 0]),
                    x2(&[2, 2, 0, 0, 0, 0, 0]),
                ];
                let mut coweights = vec![
                    x2(&[-1, -1, -1, -1, -1, -1, 2]),
                    x2(&[-2, 2, 0, 0, 0, 0, 0]),
                    x2(&[2, 2, 0, 0, 0, 0, 0]),
                ];
                for i in 4..=7 {
                    let v = e2(7, i - 3, -2, i - 2, 2);
                    simples.push(v.clone());
                    coweights.push(v);
                }
                (7, simples, coweights)
            }
            8 => {
                let mut simples = vec![
                    x2(&[1, -1, -1, -1, -1, -1, -1, 1]),
                    x2(&[2, 2, 0, 0, 0, 0, 0, 0]),
                ];
                let mut coweights = simples.clone();
                for i in 3..=8 {
                    let v = e2(8, i - 3, -2, i - 2, 2);
                    simples.push(v.clone());
                    coweights.push(v);
                }
                (8, simples, coweights)
            }
            _ => unreachable!("validated rank"),
        },
    }
}

/// Full root set from the closed per-family coordinate descriptions.
pub fn roots_from_formula(stype: SimpleType) -> Vec<HalfVec> {
    let n = stype.rank();
    let mut roots: Vec<HalfVec> = Vec::new();
    let int_pairs = |dim: usize, upto: usize, out: &mut Vec<HalfVec>| {
        for i in 0..upto {
            for j in i + 1..upto {
                for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                    out.push(e2(dim, i, si, j, sj));
                }
            }
        }
    };
    match stype.family() {
        Family::A => {
            let dim = n + 1;
            for i in 0..dim {
                for j in 0..dim {
                    if i != j {
                        roots.push(e2(dim, i, 2, j, -2));
                    }
                }
            }
        }
        Family::B => {
            for i in 0..n {
                roots.push(e(n, i, 2));
                roots.push(e(n, i, -2));
            }
            int_pairs(n, n, &mut roots);
        }
        Family::C => {
            for i in 0..n {
                roots.push(e(n, i, 4));
                roots.push(e(n, i, -4));
            }
            int_pairs(n, n, &mut roots);
        }
        Family::D => int_pairs(n, n, &mut roots),
        Family::G => {
            for v in [
                [2, -2, 0],
                [-4, 2, 2],
                [-2, 0, 2],
                [0, -2, 2],
                [2, -4, 2],
                [-2, -2, 4],
            ] {
                roots.push(x2(&v));
                roots.push(x2(&v).neg());
            }
        }
        Family::F => {
            for i in 0..4 {
                roots.push(e(4, i, 2));
                roots.push(e(4, i, -2));
            }
            int_pairs(4, 4, &mut roots);
            for m in 0..16u32 {
                let v: Vec<i64> = (0..4).map(|b| if m >> b & 1 == 1 { -1 } else { 1 }).collect();
                roots.push(HalfVec::from_x2(v));
            }
        }
        Family::E => {
            match n {
                6 => {
                    int_pairs(6, 5, &mut roots);
                    // halves: sign pattern on e1..e5; +e6 pairs with an even
                    // number of minus signs, -e6 with an odd number
                    for m in 0..32u32 {
                        let mut v: Vec<i64> =
                            (0..5).map(|b| if m >> b & 1 == 1 { -1 } else { 1 }).collect();
                        let neg = v.iter().filter(|&&s| s < 0).count();
                        v.push(if neg % 2 == 0 { 1 } else { -1 });
                        roots.push(HalfVec::from_x2(v));
                    }
                }
                7 => {
                    roots.push(e(7, 6, 2));
                    roots.push(e(7, 6, -2));
                    int_pairs(7, 6, &mut roots);
                    // halves: even minus-count over e1..e6, either sign on e7
                    for m in 0..64u32 {
                        let v: Vec<i64> =
                            (0..6).map(|b| if m >> b & 1 == 1 { -1 } else { 1 }).collect();
                        if v.iter().filter(|&&s| s < 0).count() % 2 == 0 {
                            for s7 in [1, -1] {
                                let mut w = v.clone();
                                w.push(s7);
                                roots.push(HalfVec::from_x2(w));
                            }
                        }
                    }
                }
                8 => {
                    int_pairs(8, 8, &mut roots);
                    // halves: even minus-count over all eight coordinates
                    for m in 0..256u32 {
                        let v: Vec<i64> =
                            (0..8).map(|b| if m >> b & 1 == 1 { -1 } else { 1 }).collect();
                        if v.iter().filter(|&&s| s < 0).count() % 2 == 0 {
                            roots.push(HalfVec::from_x2(v));
                        }
                    }
                }
                _ => unreachable!("validated rank"),
            }
        }
    }
    roots.sort();
    let before = roots.len();
    roots.dedup();
    assert_eq!(before, roots.len(), "formula enumeration produced duplicates");
    roots
}

/// Positive roots grown from the simple system by the string method: for a
/// known positive root b and simple root a_i, the i-string through b extends
/// one step up exactly when p - <b, h_i> >= 1, where p is how far it extends
/// down. Uses only the Cartan pairing, so it is independent of the per-family
/// formulas above.
pub fn positive_roots_by_closure(stype: SimpleType) -> Vec<HalfVec> {
    let (_dim, simples, coweights) = simple_system(stype);
    let mut known: HashSet<HalfVec> = simples.iter().cloned().collect();
    let mut level: Vec<HalfVec> = simples.clone();
    let mut all: Vec<HalfVec> = simples.clone();
    while !level.is_empty() {
        let mut next: Vec<HalfVec> = Vec::new();
        for beta in &level {
            for (alpha, h) in simples.iter().zip(&coweights) {
                let mut p = 0i64;
                let mut down = beta.add(&alpha.neg());
                while known.contains(&down) {
                    p += 1;
                    down = down.add(&alpha.neg());
                }
                let q = p - beta.dot_int(h);
                if q >= 1 {
                    let up = beta.add(alpha);
                    if !known.contains(&up) {
                        known.insert(up.clone());
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort();
    all
}

/// Full root set from the closure route: the positive system and its mirror.
pub fn roots_by_closure(stype: SimpleType) -> Vec<HalfVec> {
    let pos = positive_roots_by_closure(stype);
    let mut all: Vec<HalfVec> = pos.iter().map(HalfVec::neg).collect();
    all.extend(pos);
    all.sort();
    all
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("empty diagram; the algebra is not simple")]
    Empty,
    #[error("removal disconnects the diagram; the algebra is not simple")]
    Disconnected,
    #[error("matrix is not a Cartan matrix of a simple type: {0}")]
    Unrecognized(String),
}

/// Recognizes the simple type of a Cartan matrix, up to node relabeling.
/// Rejects disconnected or malformed matrices. The rank-2 double-bond chain
/// is reported as B2 (the C family starts at rank 3).
pub fn diagram_type(cartan: &IntMatrix) -> Result<SimpleType, DiagramError> {
    let k = cartan.rows();
    if k == 0 {
        return Err(DiagramError::Empty);
    }
    if cartan.cols() != k {
        return Err(DiagramError::Unrecognized("matrix is not square".into()));
    }
    for i in 0..k {
        if cartan.get(i, i) != 2 {
            return Err(DiagramError::Unrecognized("diagonal entry is not 2".into()));
        }
        for j in 0..k {
            if i != j {
                let c = cartan.get(i, j);
                if !(-3..=0).contains(&c) {
                    return Err(DiagramError::Unrecognized(format!(
                        "off-diagonal entry {c} out of range"
                    )));
                }
                if (c == 0) != (cartan.get(j, i) == 0) {
                    return Err(DiagramError::Unrecognized(
                        "pairing is zero in one direction only".into(),
                    ));
                }
            }
        }
    }
    let adj: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).filter(|&j| j != i && cartan.get(i, j) != 0).collect())
        .collect();
    // connectivity
    let mut seen = vec![false; k];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(DiagramError::Disconnected);
    }
    let edge_count: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edge_count != k - 1 {
        return Err(DiagramError::Unrecognized("diagram contains a cycle".into()));
    }
    // bond multiplicities
    let mut double: Vec<(usize, usize)> = Vec::new();
    let mut triple: Vec<(usize, usize)> = Vec::new();
    for i in 0..k {
        for &j in &adj[i] {
            if i < j {
                match cartan.get(i, j) * cartan.get(j, i) {
                    1 => {}
                    2 => double.push((i, j)),
                    3 => triple.push((i, j)),
                    m => {
                        return Err(DiagramError::Unrecognized(format!(
                            "bond multiplicity {m}"
                        )))
                    }
                }
            }
        }
    }
    let is_chain = adj.iter().all(|a| a.len() <= 2);
    if !triple.is_empty() {
        return if k == 2 && triple.len() == 1 {
            Ok(SimpleType::new(Family::G, 2).unwrap())
        } else {
            Err(DiagramError::Unrecognized("triple bond outside rank 2".into()))
        };
    }
    if !double.is_empty() {
        if double.len() > 1 || !is_chain {
            return Err(DiagramError::Unrecognized(
                "more than one double bond or branching with a double bond".into(),
            ));
        }
        let (u, v) = double[0];
        if k == 2 {
            return Ok(SimpleType::new(Family::B, 2).unwrap());
        }
        let u_end = adj[u].len() == 1;
        let v_end = adj[v].len() == 1;
        return match (u_end, v_end) {
            (false, false) => {
                if k == 4 {
                    Ok(SimpleType::new(Family::F, 4).unwrap())
                } else {
                    Err(DiagramError::Unrecognized(
                        "interior double bond outside rank 4".into(),
                    ))
                }
            }
            _ => {
                // the double bond touches a chain endpoint t; |C[s][t]| = 2
                // makes t the short end (B family), |C[t][s]| = 2 the long (C)
                let (t, s) = if u_end { (u, v) } else { (v, u) };
                if cartan.get(s, t) == -2 {
                    Ok(SimpleType::new(Family::B, k).unwrap())
                } else {
                    SimpleType::new(Family::C, k).map_err(|_| {
                        DiagramError::Unrecognized("long-ended double bond at rank < 3".into())
                    })
                }
            }
        };
    }
    // simply laced: chain or one branch node
    let branch: Vec<usize> = (0..k).filter(|&i| adj[i].len() >= 3).collect();
    if branch.is_empty() {
        return Ok(SimpleType::new(Family::A, k).unwrap());
    }
    if branch.len() > 1 || adj[branch[0]].len() > 3 {
        return Err(DiagramError::Unrecognized(
            "more than one branch node or branch degree above 3".into(),
        ));
    }
    let b = branch[0];
    let mut arms: Vec<usize> = adj[b]
        .iter()
        .map(|&start| {
            let mut len = 1;
            let (mut prev, mut cur) = (b, start);
            while let Some(&nxt) = adj[cur].iter().find(|&&w| w != prev) {
                prev = cur;
                cur = nxt;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort();
    match arms.as_slice() {
        [1, 1, _] => Ok(SimpleType::new(Family::D, k).unwrap()),
        [1, 2, 2] => Ok(SimpleType::new(Family::E, 6).unwrap()),
        [1, 2, 3] => Ok(SimpleType::new(Family::E, 7).unwrap()),
        [1, 2, 4] => Ok(SimpleType::new(Family::E, 8).unwrap()),
        _ => Err(DiagramError::Unrecognized(format!(
            "branch arms {arms:?} match no simple type"
        ))),
    }
}

/// A fully realized root system: coordinates, Cartan matrix, and the sorted
/// root lists.
pub struct RootSystem {
    stype: SimpleType,
    ambient_dim: usize,
    simple_roots: Vec<HalfVec>,
    coweights: Vec<HalfVec>,
    cartan: IntMatrix,
    all_roots: Vec<HalfVec>,
    positive_roots: Vec<HalfVec>,
    root_set: HashSet<HalfVec>,
}

impl RootSystem {
    pub fn build(stype: SimpleType) -> RootSystem {
        let (ambient_dim, simple_roots, coweights) = simple_system(stype);
        let n = stype.rank();
        let mut entries = Vec::with_capacity(n * n);
        for a in &simple_roots {
            for h in &coweights {
                entries.push(a.dot_int(h));
            }
        }
        let cartan = IntMatrix::new(n, n, entries);
        let all_roots = roots_from_formula(stype);
        let root_set: HashSet<HalfVec> = all_roots.iter().cloned().collect();
        let mut rs = RootSystem {
            stype,
            ambient_dim,
            simple_roots,
            coweights,
            cartan,
            all_roots,
            positive_roots: Vec::new(),
            root_set,
        };
        let positive: Vec<HalfVec> = rs
            .all_roots
            .iter()
            .filter(|r| {
                let coeffs = rs
                    .simple_coefficients(r)
                    .expect("every root must lie in the integer span of the simple roots");
                coeffs.iter().all(|&c| c >= 0)
            })
            .cloned()
            .collect();
        assert_eq!(
            positive.len() * 2,
            rs.all_roots.len(),
            "positive system must be half the root set"
        );
        rs.positive_roots = positive;
        rs
    }

    pub fn stype(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> usize {
        self.stype.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[HalfVec] {
        &self.simple_roots
    }

    /// Simple root of node `l`, 1-based.
    pub fn simple_root(&self, l: usize) -> &HalfVec {
        &self.simple_roots[l - 1]
    }

    pub fn coweights(&self) -> &[HalfVec] {
        &self.coweights
    }

    pub fn coweight(&self, l: usize) -> &HalfVec {
        &self.coweights[l - 1]
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    /// All roots, sorted lexicographically on doubled coordinates.
    pub fn all_roots(&self) -> &[HalfVec] {
        &self.all_roots
    }

    pub fn positive_roots(&self) -> &[HalfVec] {
        &self.positive_roots
    }

    pub fn is_root(&self, v: &HalfVec) -> bool {
        self.root_set.contains(v)
    }

    /// Expands `v` in the simple-root basis by exact elimination, solving in
    /// the span (ambient dimension may exceed the rank). Returns None when
    /// `v` is outside the span or the coefficients are not integers.
    pub fn simple_coefficients(&self, v: &HalfVec) -> Option<Vec<i64>> {
        let n = self.rank();
        let dim = self.ambient_dim;
        // augmented system [S | v] over exact rationals
        let mut m: Vec<Vec<Frac>> = (0..dim)
            .map(|r| {
                let mut row: Vec<Frac> = (0..n)
                    .map(|c| Frac::int(self.simple_roots[c].coords_x2()[r] as i128))
                    .collect();
                row.push(Frac::int(v.coords_x2()[r] as i128));
                row
            })
            .collect();
        let mut pivot_rows: Vec<usize> = Vec::new();
        let mut r0 = 0usize;
        for col in 0..n {
            let pivot = (r0..dim).find(|&r| !m[r][col].is_zero())?;
            m.swap(r0, pivot);
            let p = m[r0][col];
            for r in 0..dim {
                if r != r0 && !m[r][col].is_zero() {
                    let f = m[r][col].div(p);
                    for c in col..=n {
                        let s = m[r0][c].mul(f);
                        m[r][c] = m[r][c].sub(s);
                    }
                }
            }
            pivot_rows.push(r0);
            r0 += 1;
        }
        // consistency: rows without pivots must have zero right-hand side
        for r in r0..dim {
            if !m[r][n].is_zero() {
                return None;
            }
        }
        let mut coeffs = Vec::with_capacity(n);
        for (col, &pr) in pivot_rows.iter().enumerate() {
            let val = m[pr][n].div(m[pr][col]);
            coeffs.push(i64::try_from(val.as_int()?).ok()?);
        }
        Some(coeffs)
    }

    /// The highest root together with its simple-root coefficients (the marks
    /// of the diagram nodes).
    pub fn highest_root(&self) -> (HalfVec, Vec<i64>) {
        let mut best: Option<(i64, HalfVec, Vec<i64>)> = None;
        for r in &self.positive_roots {
            let coeffs = self.simple_coefficients(r).expect("root expands integrally");
            let height: i64 = coeffs.iter().sum();
            match &best {
                Some((h, _, _)) if *h >= height => {}
                _ => best = Some((height, r.clone(), coeffs)),
            }
        }
        let (top_height, root, marks) = best.expect("nonempty root system");
        let ties = self
            .positive_roots
            .iter()
            .filter(|r| {
                let c = self.simple_coefficients(r).unwrap();
                c.iter().sum::<i64>() == top_height
            })
            .count();
        assert_eq!(ties, 1, "highest root must be unique");
        (root, marks)
    }

    /// Mark (highest-root coefficient) of node `l`, 1-based.
    pub fn mark_of(&self, l: usize) -> i64 {
        self.highest_root().1[l - 1]
    }

    /// Diagram degree of node `l`, 1-based.
    pub fn node_degree(&self, l: usize) -> usize {
        (0..self.rank())
            .filter(|&j| j + 1 != l && self.cartan.get(l - 1, j) != 0)
            .count()
    }

    /// Nodes of diagram degree exactly 1, ascending. A1 has none: its lone
    /// node has degree 0 and deleting it empties the diagram.
    pub fn extremities(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&l| self.node_degree(l) == 1).collect()
    }

    /// Diagram automorphisms as 1-based node permutations (image of node i at
    /// index i-1). Identity first; order is deterministic.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let id: Vec<usize> = (1..=n).collect();
        let mut perms = vec![id.clone()];
        match self.stype.family() {
            Family::A if n >= 2 => {
                perms.push((1..=n).rev().collect());
            }
            Family::D if n == 4 => {
                // all permutations of the outer nodes {1, 3, 4} fixing node 2
                for (a, b, c) in [(1, 4, 3), (3, 1, 4), (3, 4, 1), (4, 1, 3), (4, 3, 1)] {
                    perms.push(vec![a, 2, b, c]);
                }
            }
            Family::D if n >= 5 => {
                let mut p = id.clone();
                p.swap(n - 2, n - 1);
                perms.push(p);
            }
            Family::E if n == 6 => {
                perms.push(vec![6, 2, 5, 4, 3, 1]);
            }
            _ => {}
        }
        for p in &perms {
            debug_assert!(self.permutation_preserves_cartan(p));
        }
        perms
    }

    fn permutation_preserves_cartan(&self, perm: &[usize]) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            (0..n).all(|j| self.cartan.get(perm[i] - 1, perm[j] - 1) == self.cartan.get(i, j))
        })
    }
}
