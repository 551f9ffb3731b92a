//! Deleting an extremity node of a simple diagram.
//!
//! Removing node L from the diagram of a simple type leaves a smaller simple
//! diagram and singles out a coweight h* that vanishes on every retained
//! simple root and is positive on the deleted one. Grading the root set by
//! the sign of the pairing with h* splits it into three blocks; the negative
//! block is the object the rest of the crate studies.
//!
//! h* is computed as the primitive integer kernel generator of the Cartan
//! matrix with row L deleted. Two facts are re-checked rather than trusted:
//! that the pairing with h* vanishes on retained simple roots, and that the
//! sign of a root's pairing equals the sign of its coefficient at node L
//! (the latter ties the exact linear solver to the pairing arithmetic).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactvec::{kernel_generator, HalfVec};
use crate::rootsys::{diagram_type, RootSystem, SimpleType};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CarveError {
    #[error("node {node} is out of range for {stype} (nodes 1..={rank})")]
    NodeOutOfRange {
        stype: SimpleType,
        node: usize,
        rank: usize,
    },
    #[error(
        "node {node} of {stype} has diagram degree {degree}, not 1; \
         deleting it does not leave a single smaller diagram"
    )]
    NotExtremity {
        stype: SimpleType,
        node: usize,
        degree: usize,
    },
}

/// Result of deleting extremity node `node` from the diagram of `stype`:
/// the distinguished coweight and the graded root partition.
pub struct Carving {
    root_system: RootSystem,
    node: usize,
    kernel_coeffs: Vec<i64>,
    h_star: HalfVec,
    retained_type: SimpleType,
    r_zero: Vec<HalfVec>,
    r_minus: Vec<HalfVec>,
    r_plus: Vec<HalfVec>,
}

/// A class of negative-block roots that restrict to the same functional on
/// the retained coweights. `functional_x4` lists the pairings with the
/// retained coweights in node order, scaled by 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatClass {
    pub functional_x4: Vec<i64>,
    pub members: Vec<HalfVec>,
}

pub fn carve(stype: SimpleType, node: usize) -> Result<Carving, CarveError> {
    let root_system = RootSystem::build(stype);
    let rank = root_system.rank();
    if node < 1 || node > rank {
        return Err(CarveError::NodeOutOfRange { stype, node, rank });
    }
    let degree = root_system.node_degree(node);
    if degree != 1 {
        return Err(CarveError::NotExtremity {
            stype,
            node,
            degree,
        });
    }

    let truncated = root_system.cartan().delete_row(node);
    let mut kernel_coeffs = kernel_generator(&truncated)
        .expect("Cartan matrix minus one row has a one-dimensional kernel");
    let combine = |coeffs: &[i64]| {
        let mut h = HalfVec::zero(root_system.ambient_dim());
        for (c, w) in coeffs.iter().zip(root_system.coweights()) {
            h = h.add(&w.scaled(*c));
        }
        h
    };
    let mut h_star = combine(&kernel_coeffs);
    let at_node = root_system.simple_root(node).dot_int(&h_star);
    assert_ne!(at_node, 0, "h* cannot vanish on the whole simple system");
    if at_node < 0 {
        for c in &mut kernel_coeffs {
            *c = -*c;
        }
        h_star = h_star.neg();
    }
    for l in 1..=rank {
        if l != node {
            assert_eq!(
                root_system.simple_root(l).dot_int(&h_star),
                0,
                "h* must vanish on retained simple roots"
            );
        }
    }

    let retained_type = diagram_type(&root_system.cartan().delete_row_col(node))
        .expect("deleting an extremity leaves a connected simple diagram");

    let mut r_zero = Vec::new();
    let mut r_minus = Vec::new();
    let mut r_plus = Vec::new();
    for r in root_system.all_roots() {
        match r.dot_int(&h_star).signum() {
            0 => r_zero.push(r.clone()),
            -1 => r_minus.push(r.clone()),
            _ => r_plus.push(r.clone()),
        }
    }

    Ok(Carving {
        root_system,
        node,
        kernel_coeffs,
        h_star,
        retained_type,
        r_zero,
        r_minus,
        r_plus,
    })
}

impl Carving {
    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn stype(&self) -> SimpleType {
        self.root_system.stype()
    }

    pub fn node(&self) -> usize {
        self.node
    }

    /// Coefficients of h* over the coweight basis, primitive and normalized
    /// so the deleted simple root pairs positively.
    pub fn kernel_coeffs(&self) -> &[i64] {
        &self.kernel_coeffs
    }

    pub fn h_star(&self) -> &HalfVec {
        &self.h_star
    }

    /// Simple type of the diagram left after deleting the node.
    pub fn retained_type(&self) -> SimpleType {
        self.retained_type
    }

    /// Roots pairing to zero with h*, sorted.
    pub fn r_zero(&self) -> &[HalfVec] {
        &self.r_zero
    }

    /// Roots pairing negatively with h*, sorted. This block spans the
    /// nilradical under study.
    pub fn r_minus(&self) -> &[HalfVec] {
        &self.r_minus
    }

    /// Roots pairing positively with h*, sorted.
    pub fn r_plus(&self) -> &[HalfVec] {
        &self.r_plus
    }

    /// Checks that each root's block is determined by the sign of its
    /// coefficient at the deleted node. This re-derives the partition from
    /// the simple-root expansion, independently of the pairing used to
    /// build it.
    pub fn class_matches_node_coefficient(&self) -> bool {
        let check = |roots: &[HalfVec], want: i64| {
            roots.iter().all(|r| {
                let coeffs = self
                    .root_system
                    .simple_coefficients(r)
                    .expect("root expands integrally");
                coeffs[self.node - 1].signum() == want
            })
        };
        check(&self.r_zero, 0) && check(&self.r_minus, -1) && check(&self.r_plus, 1)
    }

    /// Groups the negative block by the functional each root induces on the
    /// retained coweights. Classes are ordered by their functional vector;
    /// members stay sorted.
    pub fn restrict(&self) -> Vec<HatClass> {
        let retained: Vec<&HalfVec> = (1..=self.root_system.rank())
            .filter(|&l| l != self.node)
            .map(|l| self.root_system.coweight(l))
            .collect();
        let mut classes: BTreeMap<Vec<i64>, Vec<HalfVec>> = BTreeMap::new();
        for r in &self.r_minus {
            let key: Vec<i64> = retained.iter().map(|w| r.dot_x4(w)).collect();
            classes.entry(key).or_default().push(r.clone());
        }
        classes
            .into_iter()
            .map(|(functional_x4, members)| HatClass {
                functional_x4,
                members,
            })
            .collect()
    }

    /// True when the restriction classes are all singletons, i.e. a
    /// negative-block root is recovered from its retained functional alone.
    pub fn property_three_holds(&self) -> bool {
        self.restrict().iter().all(|c| c.members.len() == 1)
    }
}
