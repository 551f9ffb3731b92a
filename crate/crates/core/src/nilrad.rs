//! Structure of the subalgebra spanned by the negative block.
//!
//! Everything here works at the level of root supports: the bracket of two
//! root spaces is nonzero exactly when the sum of the roots is again a root,
//! so closure, ideal, two-step nilpotency, centrality, and the pairing into
//! Heisenberg layers are all decidable by exact root addition and membership
//! tests. No structure constants are ever chosen.
//!
//! The two-step test ([`sandwich_witness`]) scans triples directly; the mark
//! of the deleted node gives an independent one-number predicate for the
//! same property ([`mark_predicts_sandwich`]), and the two are held equal by
//! the test suite rather than one being derived from the other.

use std::collections::HashSet;

use thiserror::Error;

use crate::carving::Carving;
use crate::exactvec::{Frac, HalfVec};

/// The roots pairing to a fixed central root `zeta`: the unordered pairs
/// (a, b), a < b, with a + b = zeta. The number of pairs is the layer's
/// symplectic half-dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSet {
    pub zeta: HalfVec,
    pub pairs: Vec<(HalfVec, HalfVec)>,
}

impl PairSet {
    pub fn multiplicity(&self) -> usize {
        self.pairs.len()
    }

    /// Distinct roots appearing in some pair, sorted.
    pub fn members(&self) -> Vec<HalfVec> {
        let mut m: Vec<HalfVec> = self
            .pairs
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        m.sort();
        m.dedup();
        m
    }
}

/// Abstract shape of a two-step nilpotent algebra built from root data: an
/// abelian block plus one Heisenberg layer h_{2m+1} per listed central root.
/// Layers may share pair members, so this is a list of distinguished
/// subquotients, not a direct-sum decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDescriptor {
    pub abelian_dim: usize,
    /// (central root, pair count m), ordered by central root.
    pub heisenbergs: Vec<(HalfVec, usize)>,
}

impl StructureDescriptor {
    pub fn is_abelian(&self) -> bool {
        self.heisenbergs.is_empty()
    }

    /// Heisenberg dimensions 2m+1, largest first.
    pub fn heisenberg_dims(&self) -> Vec<usize> {
        let mut dims: Vec<usize> = self.heisenbergs.iter().map(|(_, m)| 2 * m + 1).collect();
        dims.sort_unstable_by(|a, b| b.cmp(a));
        dims
    }
}

/// Everything the analysis pass derives from one carving.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilradicalAnalysis {
    /// Sum of two negative-block roots is never outside the block.
    pub closed: bool,
    /// Bracketing with the zero block cannot leave the negative block.
    pub ideal: bool,
    /// No triple (a, b, c), repetition allowed, has both a+b and a+b+c roots.
    pub sandwich: bool,
    /// Lexicographically least failing triple when `sandwich` is false.
    pub witness: Option<[HalfVec; 3]>,
    /// Roots bracketing to zero with the whole block, sorted.
    pub center_roots: Vec<HalfVec>,
    /// One entry per root that is a sum of two block roots.
    pub pair_sets: Vec<PairSet>,
    /// Present exactly when `sandwich` holds.
    pub descriptor: Option<StructureDescriptor>,
}

impl NilradicalAnalysis {
    /// Central roots that arise as pair sums, sorted.
    pub fn sum_roots(&self) -> Vec<HalfVec> {
        self.pair_sets.iter().map(|p| p.zeta.clone()).collect()
    }
}

fn block_set(c: &Carving) -> HashSet<HalfVec> {
    c.r_minus().iter().cloned().collect()
}

/// True when the sum of any two block roots, if a root at all, stays in the
/// block.
pub fn is_closed(c: &Carving) -> bool {
    let block = block_set(c);
    let rm = c.r_minus();
    for (i, a) in rm.iter().enumerate() {
        for b in &rm[i..] {
            let s = a.add(b);
            if c.root_system().is_root(&s) && !block.contains(&s) {
                return false;
            }
        }
    }
    true
}

/// True when adding any zero-block root to a block root, if a root at all,
/// stays in the block. Together with [`is_closed`] this makes the block an
/// ideal of the nonpositive part.
pub fn is_ideal(c: &Carving) -> bool {
    let block = block_set(c);
    for a in c.r_minus() {
        for b in c.r_zero() {
            let s = a.add(b);
            if c.root_system().is_root(&s) && !block.contains(&s) {
                return false;
            }
        }
    }
    true
}

/// True when no two block roots sum to a root: all brackets inside the block
/// vanish.
pub fn is_abelian(c: &Carving) -> bool {
    let rm = c.r_minus();
    for (i, a) in rm.iter().enumerate() {
        for b in &rm[i..] {
            if c.root_system().is_root(&a.add(b)) {
                return false;
            }
        }
    }
    true
}

/// Scans ordered triples (a, b, c) of block roots, repetition allowed, for
/// one with a+b and a+b+c both roots; such a triple carries a nonzero
/// iterated bracket. Returns the lexicographically least offender, or None
/// when the block brackets two steps to zero.
pub fn sandwich_witness(c: &Carving) -> Option<[HalfVec; 3]> {
    let rm = c.r_minus();
    let rs = c.root_system();
    for a in rm {
        for b in rm {
            let ab = a.add(b);
            if !rs.is_root(&ab) {
                continue;
            }
            for g in rm {
                if rs.is_root(&ab.add(g)) {
                    return Some([a.clone(), b.clone(), g.clone()]);
                }
            }
        }
    }
    None
}

/// The mark (highest-root coefficient) of the deleted node predicts the
/// two-step property: at most 2 means sandwich. Independent of the triple
/// scan above.
pub fn mark_predicts_sandwich(c: &Carving) -> bool {
    c.root_system().mark_of(c.node()) <= 2
}

/// Mark exactly 1 predicts an abelian block.
pub fn mark_predicts_abelian(c: &Carving) -> bool {
    c.root_system().mark_of(c.node()) == 1
}

/// Block roots whose sum with every block root is a non-root, sorted.
pub fn center_roots(c: &Carving) -> Vec<HalfVec> {
    let rm = c.r_minus();
    rm.iter()
        .filter(|z| rm.iter().all(|a| !c.root_system().is_root(&z.add(a))))
        .cloned()
        .collect()
}

/// For every block root that splits as a sum of two block roots, the list of
/// its unordered pair decompositions. Ordered by the sum root; pairs sorted.
pub fn pair_sets(c: &Carving) -> Vec<PairSet> {
    let block = block_set(c);
    let rm = c.r_minus();
    let mut out = Vec::new();
    for zeta in rm {
        let mut pairs = Vec::new();
        for a in rm {
            let b = zeta.add(&a.neg());
            if block.contains(&b) && *a < b {
                pairs.push((a.clone(), b));
            }
        }
        if !pairs.is_empty() {
            out.push(PairSet {
                zeta: zeta.clone(),
                pairs,
            });
        }
    }
    out
}

/// Consistency of the pairing picture: every sum root is central, and every
/// non-central block root occurs in at least one pair. Both statements hold
/// for a two-step block and can fail otherwise.
pub fn center_pair_consistency(c: &Carving) -> bool {
    let centers: HashSet<HalfVec> = center_roots(c).into_iter().collect();
    let sets = pair_sets(c);
    if !sets.iter().all(|p| centers.contains(&p.zeta)) {
        return false;
    }
    let mut paired: HashSet<HalfVec> = HashSet::new();
    for p in &sets {
        paired.extend(p.members());
    }
    c.r_minus()
        .iter()
        .all(|r| centers.contains(r) || paired.contains(r))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairingError {
    #[error("root {member} occurs in more than one pair for the same sum root")]
    Degenerate { member: HalfVec },
}

/// Rank over the rationals of the alternating incidence form on the pair
/// members: entry (i, j) is +1 when (m_i, m_j) is one of the pairs and i<j,
/// -1 for the transpose. A clean layer of m pairs has rank exactly 2m; a
/// member sitting in two pairs of the same set is rejected. This recomputes
/// the half-dimension by linear algebra instead of by counting.
pub fn symplectic_rank(set: &PairSet) -> Result<usize, PairingError> {
    let members = set.members();
    let index = |v: &HalfVec| members.binary_search(v).expect("member listed");
    let n = members.len();
    let mut m = vec![vec![Frac::int(0); n]; n];
    for (a, b) in &set.pairs {
        let (i, j) = (index(a), index(b));
        if !m[i][j].is_zero() {
            return Err(PairingError::Degenerate { member: a.clone() });
        }
        m[i][j] = Frac::int(1);
        m[j][i] = Frac::int(-1);
    }
    for r in 0..n {
        if m[r].iter().filter(|e| !e.is_zero()).count() > 1 {
            return Err(PairingError::Degenerate {
                member: members[r].clone(),
            });
        }
    }
    // Gaussian elimination, counting pivots
    let mut rank = 0;
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for r in row + 1..n {
            if !m[r][col].is_zero() {
                let f = m[r][col].div(m[row][col]);
                for cc in col..n {
                    let s = m[row][cc].mul(f);
                    m[r][cc] = m[r][cc].sub(s);
                }
            }
        }
        rank += 1;
        row += 1;
        if row == n {
            break;
        }
    }
    Ok(rank)
}

/// Builds the abstract shape when the block is two-step: the pair layers as
/// Heisenberg subquotients plus however many roots touch no layer at all.
/// None when the block is not two-step (the shape language does not apply).
pub fn structure_descriptor(c: &Carving) -> Option<StructureDescriptor> {
    if sandwich_witness(c).is_some() {
        return None;
    }
    let sets = pair_sets(c);
    let mut involved: HashSet<HalfVec> = HashSet::new();
    for p in &sets {
        involved.insert(p.zeta.clone());
        involved.extend(p.members());
    }
    let abelian_dim = c.r_minus().iter().filter(|r| !involved.contains(*r)).count();
    let heisenbergs = sets
        .iter()
        .map(|p| {
            let rank = symplectic_rank(p).expect("unique partners in a two-step block");
            assert_eq!(rank, 2 * p.multiplicity(), "pair layer must be nondegenerate");
            (p.zeta.clone(), p.multiplicity())
        })
        .collect();
    Some(StructureDescriptor {
        abelian_dim,
        heisenbergs,
    })
}

/// Runs the whole pass over one carving.
pub fn analyze(c: &Carving) -> NilradicalAnalysis {
    let witness = sandwich_witness(c);
    NilradicalAnalysis {
        closed: is_closed(c),
        ideal: is_ideal(c),
        sandwich: witness.is_none(),
        witness,
        center_roots: center_roots(c),
        pair_sets: pair_sets(c),
        descriptor: structure_descriptor(c),
    }
}
