//! Brute-force re-derivations backing the audit criteria. Everything here
//! works on raw doubled-coordinate vectors with its own enumeration of the
//! ambient root systems and its own scans; nothing is shared with the
//! library under test beyond the numbers being compared.

use std::collections::{BTreeMap, BTreeSet, HashSet};

pub type Vx2 = Vec<i64>;

fn add(a: &[i64], b: &[i64]) -> Vx2 {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Triple-system roots in the 3-coordinate plane model: the six differences
/// e_i - e_j and the six long vectors 2e_i - e_j - e_k.
pub fn g2_roots() -> Vec<Vx2> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut v = vec![0i64; 3];
                v[i] = 2;
                v[j] = -2;
                out.push(v);
            }
        }
        let mut w = vec![-2i64; 3];
        w[i] = 4;
        out.push(w.iter().map(|c| -c).collect());
        out.push(w);
    }
    out
}

/// Rank-7 exceptional system, 7-coordinate model: +-e7, +-e_i +- e_j for
/// i < j <= 6, and the halves (+-1, ..., +-1)/2 with an even number of minus
/// signs among the first six coordinates.
pub fn e7_roots() -> Vec<Vx2> {
    let mut out = Vec::new();
    for s in [2i64, -2] {
        let mut v = vec![0i64; 7];
        v[6] = s;
        out.push(v);
    }
    for i in 0..6 {
        for j in i + 1..6 {
            for si in [2i64, -2] {
                for sj in [2i64, -2] {
                    let mut v = vec![0i64; 7];
                    v[i] = si;
                    v[j] = sj;
                    out.push(v);
                }
            }
        }
    }
    for mask in 0u32..128 {
        let v: Vx2 = (0..7)
            .map(|b| if mask & (1 << b) != 0 { -1 } else { 1 })
            .collect();
        let minus_first_six = v[..6].iter().filter(|&&c| c < 0).count();
        if minus_first_six % 2 == 0 {
            out.push(v);
        }
    }
    out
}

/// Rank-8 exceptional system, even-coordinate model: +-e_i +- e_j for
/// i < j <= 8 and the halves (+-1, ..., +-1)/2 with an even number of minus
/// signs.
pub fn e8_roots() -> Vec<Vx2> {
    let mut out = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for si in [2i64, -2] {
                for sj in [2i64, -2] {
                    let mut v = vec![0i64; 8];
                    v[i] = si;
                    v[j] = sj;
                    out.push(v);
                }
            }
        }
    }
    for mask in 0u32..256 {
        let v: Vx2 = (0..8)
            .map(|b| if mask & (1 << b) != 0 { -1 } else { 1 })
            .collect();
        if v.iter().filter(|&&c| c < 0).count() % 2 == 0 {
            out.push(v);
        }
    }
    out
}

/// The negative block of one ambient system under one grading vector,
/// together with the scans the audit repeats from scratch.
pub struct BlockOracle {
    all: HashSet<Vx2>,
    pub r_minus: Vec<Vx2>,
}

impl BlockOracle {
    /// Partitions `roots` by the sign of the pairing with `h_x2` (both sides
    /// doubled; the scale does not change signs).
    pub fn new(roots: Vec<Vx2>, h_x2: &[i64]) -> Self {
        let mut r_minus: Vec<Vx2> = roots
            .iter()
            .filter(|r| dot(r, h_x2) < 0)
            .cloned()
            .collect();
        r_minus.sort();
        BlockOracle {
            all: roots.into_iter().collect(),
            r_minus,
        }
    }

    pub fn ambient_count(&self) -> usize {
        self.all.len()
    }

    fn is_root(&self, v: &[i64]) -> bool {
        self.all.contains(v)
    }

    fn in_block(&self, v: &[i64]) -> bool {
        self.r_minus.iter().any(|r| r == v)
    }

    /// Least ordered triple (a, b, g) of block roots, repetition allowed,
    /// with a+b and a+b+g both roots; None when the block is two-step.
    pub fn least_witness(&self) -> Option<[Vx2; 3]> {
        let mut best: Option<[Vx2; 3]> = None;
        for a in &self.r_minus {
            for b in &self.r_minus {
                let ab = add(a, b);
                if !self.is_root(&ab) {
                    continue;
                }
                for g in &self.r_minus {
                    if self.is_root(&add(&ab, g)) {
                        let cand = [a.clone(), b.clone(), g.clone()];
                        if best.as_ref().map_or(true, |w| cand < *w) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn is_sandwich(&self) -> bool {
        self.least_witness().is_none()
    }

    /// Checks one concrete triple the way the definition reads.
    pub fn witness_valid(&self, a: &[i64], b: &[i64], g: &[i64]) -> bool {
        let ab = add(a, b);
        self.in_block(a)
            && self.in_block(b)
            && self.in_block(g)
            && self.is_root(&ab)
            && self.is_root(&add(&ab, g))
    }

    /// (abelian dimension, Heisenberg dimensions largest first), derived by
    /// listing every pair decomposition inside the block.
    pub fn structure(&self) -> (usize, Vec<usize>) {
        let block: HashSet<&Vx2> = self.r_minus.iter().collect();
        let mut pairs_per_sum: BTreeMap<Vx2, usize> = BTreeMap::new();
        let mut involved: BTreeSet<Vx2> = BTreeSet::new();
        for zeta in &self.r_minus {
            for a in &self.r_minus {
                let b: Vx2 = zeta.iter().zip(a).map(|(z, x)| z - x).collect();
                if *a < b && block.contains(&b) {
                    *pairs_per_sum.entry(zeta.clone()).or_insert(0) += 1;
                    involved.insert(zeta.clone());
                    involved.insert(a.clone());
                    involved.insert(b);
                }
            }
        }
        let abelian = self
            .r_minus
            .iter()
            .filter(|r| !involved.contains(*r))
            .count();
        let mut dims: Vec<usize> = pairs_per_sum.values().map(|m| 2 * m + 1).collect();
        dims.sort_unstable_by(|a, b| b.cmp(a));
        (abelian, dims)
    }

    /// Number of distinct functionals the block roots induce on a set of
    /// retained coweights (doubled).
    pub fn distinct_functionals(&self, coweights_x2: &[Vx2]) -> usize {
        let keys: BTreeSet<Vec<i64>> = self
            .r_minus
            .iter()
            .map(|r| coweights_x2.iter().map(|w| dot(r, w)).collect())
            .collect();
        keys.len()
    }

    /// Every sum of two block roots that is a root is again in the block.
    pub fn is_closed(&self) -> bool {
        self.r_minus.iter().all(|a| {
            self.r_minus.iter().all(|b| {
                let s = add(a, b);
                !self.is_root(&s) || self.in_block(&s)
            })
        })
    }
}
