//! The reference classification table and the audit that replays it.
//!
//! Each table row records, for one extremity deletion, the retained type,
//! the distinguished coweight in closed form, the negative block, and the
//! nilradical structure. Rows for the four classical families are
//! parameterized by the retained rank `l` (the carved system has rank
//! `l + 1`); the exceptional rows are fixed. [`run_case`] computes one case
//! and diffs it against its row, [`classify_all`] sweeps every case up to a
//! rank bound with diagram-automorphism dedup, and [`verify_paper`] replays
//! the entire table and tallies matches against discrepancies.
//!
//! Claimed coweights are compared as rays: the golden value is the primitive
//! kernel generator, and rows whose printed combination is a multiple of it
//! (2.2, 4.2, 4.3 at odd `l`; 7.3) or whose printed evaluation disagrees
//! with the printed combination (9.1) carry a note saying so instead of a
//! discrepancy.

use std::fmt;

use crate::carving::{carve, CarveError, Carving};
use crate::exactvec::HalfVec;
use crate::nilrad::{analyze, NilradicalAnalysis, StructureDescriptor};
use crate::rootsys::{Family, RootSystem, SimpleType};

/// Row labels of the embedded reference table, in printed order. `E43` is
/// the row labeled "4.3", and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntryId {
    E11,
    E12,
    E21,
    E22,
    E31,
    E32,
    E41,
    E42,
    E43,
    E51,
    E52,
    E61,
    E62,
    E71,
    E72,
    E73,
    E81,
    E82,
    E83,
    E91,
    E92,
}

pub const ENTRY_COUNT: usize = 21;

use EntryId::*;

fn stype(family: Family, rank: usize) -> SimpleType {
    SimpleType::new(family, rank).expect("table rank in range")
}

/// Retained type after deleting the far end of a classical diagram, with the
/// low-rank coincidences (B1 = A1, C2 = B2, D3 = A3) folded in so the value
/// agrees with what diagram recognition reports.
fn low_rank_alias(family: Family, l: usize) -> SimpleType {
    match (family, l) {
        (Family::B, 1) => stype(Family::A, 1),
        (Family::C, 2) => stype(Family::B, 2),
        (Family::D, 3) => stype(Family::A, 3),
        _ => stype(family, l),
    }
}

impl EntryId {
    pub fn all() -> [EntryId; ENTRY_COUNT] {
        [
            E11, E12, E21, E22, E31, E32, E41, E42, E43, E51, E52, E61, E62, E71, E72, E73, E81,
            E82, E83, E91, E92,
        ]
    }

    pub fn label(self) -> &'static str {
        match self {
            E11 => "1.1",
            E12 => "1.2",
            E21 => "2.1",
            E22 => "2.2",
            E31 => "3.1",
            E32 => "3.2",
            E41 => "4.1",
            E42 => "4.2",
            E43 => "4.3",
            E51 => "5.1",
            E52 => "5.2",
            E61 => "6.1",
            E62 => "6.2",
            E71 => "7.1",
            E72 => "7.2",
            E73 => "7.3",
            E81 => "8.1",
            E82 => "8.2",
            E83 => "8.3",
            E91 => "9.1",
            E92 => "9.2",
        }
    }

    /// The (carved type, deleted node) cases this row covers, carved rank at
    /// most `max_rank`, ascending.
    pub fn cases(self, max_rank: usize) -> Vec<(SimpleType, usize)> {
        let sweep = |family: Family, node: fn(usize) -> usize| -> Vec<(SimpleType, usize)> {
            // Carving needs at least one retained node, so A starts at rank 2.
            (family.min_rank().max(2)..=max_rank)
                .map(|n| (stype(family, n), node(n)))
                .collect()
        };
        match self {
            E11 => sweep(Family::A, |_| 1),
            E12 => sweep(Family::A, |n| n),
            E21 => sweep(Family::B, |_| 1),
            E22 => sweep(Family::B, |n| n),
            E31 => sweep(Family::C, |_| 1),
            E32 => sweep(Family::C, |n| n),
            E41 => sweep(Family::D, |_| 1),
            E42 => sweep(Family::D, |n| n - 1),
            E43 => sweep(Family::D, |n| n),
            E51 => vec![(stype(Family::G, 2), 1)],
            E52 => vec![(stype(Family::G, 2), 2)],
            E61 => vec![(stype(Family::F, 4), 4)],
            E62 => vec![(stype(Family::F, 4), 1)],
            E71 => vec![(stype(Family::E, 6), 1)],
            E72 => vec![(stype(Family::E, 6), 6)],
            E73 => vec![(stype(Family::E, 6), 2)],
            E81 => vec![(stype(Family::E, 7), 1)],
            E82 => vec![(stype(Family::E, 7), 7)],
            E83 => vec![(stype(Family::E, 7), 2)],
            E91 => vec![(stype(Family::E, 8), 1)],
            E92 => vec![(stype(Family::E, 8), 8)],
        }
    }

    /// The row's printed assertions, made concrete for one carved type.
    pub fn claim(self, carved: SimpleType) -> Claim {
        let l = carved.rank() - 1;
        let a_l = stype(Family::A, l.max(1));
        // 2.2, 4.2, and 4.3 print an all-even coefficient combination when l
        // is odd; the primitive generator is half of it there.
        let parity_scaled = |base_x2: Vec<i64>| -> (HalfVec, Option<String>) {
            if l % 2 == 0 {
                let doubled = base_x2.iter().map(|c| 2 * c).collect();
                (HalfVec::from_x2(doubled), None)
            } else {
                (HalfVec::from_x2(base_x2), Some(NOTE_DOUBLED.to_string()))
            }
        };
        match self {
            E11 => {
                let mut x2 = vec![-2; l + 2];
                x2[0] = 2 * (l as i64 + 1);
                Claim {
                    g_type: a_l,
                    h_star: HalfVec::from_x2(x2),
                    r_minus_count: l + 1,
                    structure: ClaimedStructure::Abelian(l + 1),
                    note: None,
                }
            }
            E12 => {
                let mut x2 = vec![2; l + 2];
                x2[l + 1] = -2 * (l as i64 + 1);
                Claim {
                    g_type: a_l,
                    h_star: HalfVec::from_x2(x2),
                    r_minus_count: l + 1,
                    structure: ClaimedStructure::Abelian(l + 1),
                    note: None,
                }
            }
            E21 => {
                let mut x2 = vec![0; l + 1];
                x2[0] = 4;
                Claim {
                    g_type: low_rank_alias(Family::B, l),
                    h_star: HalfVec::from_x2(x2),
                    r_minus_count: 2 * l + 1,
                    structure: ClaimedStructure::Abelian(2 * l + 1),
                    note: None,
                }
            }
            E22 => {
                let (h_star, note) = parity_scaled(vec![2; l + 1]);
                Claim {
                    g_type: a_l,
                    h_star,
                    r_minus_count: (l + 1) * (l + 2) / 2,
                    structure: ClaimedStructure::Heisenbergs(vec![3; l * (l + 1) / 2]),
                    note,
                }
            }
            E31 => {
                let mut x2 = vec![0; l + 1];
                x2[0] = 2;
                Claim {
                    g_type: low_rank_alias(Family::C, l),
                    h_star: HalfVec::from_x2(x2),
                    r_minus_count: 2 * l + 1,
                    structure: ClaimedStructure::Heisenbergs(vec![2 * l + 1]),
                    note: None,
                }
            }
            E32 => Claim {
                g_type: a_l,
                h_star: HalfVec::from_x2(vec![2; l + 1]),
                r_minus_count: (l + 1) * (l + 2) / 2,
                structure: ClaimedStructure::Abelian((l + 1) * (l + 2) / 2),
                note: None,
            },
            E41 => {
                let mut x2 = vec![0; l + 1];
                x2[0] = 4;
                Claim {
                    g_type: low_rank_alias(Family::D, l),
                    h_star: HalfVec::from_x2(x2),
                    r_minus_count: 2 * l,
                    structure: ClaimedStructure::Abelian(2 * l),
                    note: None,
                }
            }
            E42 => {
                let mut base = vec![2; l + 1];
                base[l] = -2;
                let (h_star, note) = parity_scaled(base);
                Claim {
                    g_type: a_l,
                    h_star,
                    r_minus_count: l * (l + 1) / 2,
                    structure: ClaimedStructure::Abelian(l * (l + 1) / 2),
                    note,
                }
            }
            E43 => {
                let (h_star, note) = parity_scaled(vec![2; l + 1]);
                Claim {
                    g_type: a_l,
                    h_star,
                    r_minus_count: l * (l + 1) / 2,
                    structure: ClaimedStructure::Abelian(l * (l + 1) / 2),
                    note,
                }
            }
            E51 => Claim {
                g_type: stype(Family::A, 1),
                h_star: HalfVec::from_x2(vec![-8, -10, -6]),
                r_minus_count: 5,
                structure: ClaimedStructure::Heisenbergs(vec![3]),
                note: None,
            },
            E52 => Claim {
                g_type: stype(Family::A, 1),
                h_star: HalfVec::from_x2(vec![-6, -6, -4]),
                r_minus_count: 5,
                structure: ClaimedStructure::Heisenbergs(vec![5]),
                note: None,
            },
            E61 => Claim {
                g_type: stype(Family::B, 3),
                h_star: HalfVec::from_x2(vec![4, 0, 0, 0]),
                r_minus_count: 15,
                structure: ClaimedStructure::Heisenbergs(vec![9, 5, 5, 5, 5, 5, 5]),
                note: None,
            },
            E62 => Claim {
                g_type: stype(Family::C, 3),
                h_star: HalfVec::from_x2(vec![2, 2, 0, 0]),
                r_minus_count: 15,
                structure: ClaimedStructure::Heisenbergs(vec![15]),
                note: None,
            },
            E71 => Claim {
                g_type: stype(Family::D, 5),
                h_star: HalfVec::from_x2(vec![0, 0, 0, 0, 0, 12]),
                r_minus_count: 16,
                structure: ClaimedStructure::Abelian(16),
                note: None,
            },
            E72 => Claim {
                g_type: stype(Family::D, 5),
                h_star: HalfVec::from_x2(vec![0, 0, 0, 0, 6, 6]),
                r_minus_count: 16,
                structure: ClaimedStructure::Abelian(16),
                note: None,
            },
            E73 => Claim {
                g_type: stype(Family::A, 5),
                h_star: HalfVec::from_x2(vec![1, 1, 1, 1, 1, 3]),
                r_minus_count: 21,
                structure: ClaimedStructure::Heisenbergs(vec![21]),
                note: Some(NOTE_DOUBLED.to_string()),
            },
            E81 => Claim {
                g_type: stype(Family::D, 6),
                h_star: HalfVec::from_x2(vec![0, 0, 0, 0, 0, 0, 4]),
                r_minus_count: 33,
                structure: ClaimedStructure::Heisenbergs(vec![87]),
                note: None,
            },
            E82 => Claim {
                g_type: stype(Family::E, 6),
                h_star: HalfVec::from_x2(vec![0, 0, 0, 0, 0, 4, 4]),
                r_minus_count: 27,
                structure: ClaimedStructure::Abelian(16),
                note: None,
            },
            E83 => Claim {
                g_type: stype(Family::A, 6),
                h_star: HalfVec::from_x2(vec![-2, 2, 2, 2, 2, 2, 8]),
                r_minus_count: 42,
                structure: ClaimedStructure::Heisenbergs(vec![43, 11, 11, 11, 11, 11, 11]),
                note: None,
            },
            E91 => Claim {
                g_type: stype(Family::D, 7),
                h_star: HalfVec::from_x2(vec![0, 0, 0, 0, 0, 0, 0, 4]),
                r_minus_count: 64,
                structure: ClaimedStructure::Abelian(78),
                note: Some(NOTE_E8_EVALUATION.to_string()),
            },
            E92 => Claim {
                g_type: stype(Family::E, 7),
                h_star: HalfVec::from_x2(vec![0, 0, 0, 0, 0, 0, 2, 2]),
                r_minus_count: 44,
                structure: ClaimedStructure::Abelian(32),
                note: None,
            },
        }
    }
}

impl fmt::Display for EntryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

const NOTE_DOUBLED: &str = "published h* combination is twice the primitive kernel generator; \
     the primitive value is reported";
const NOTE_E8_EVALUATION: &str = "published row evaluates its h* combination to e8, but the \
     combination (the primitive kernel generator) gives 2e8, the value reported";

/// Table row covering the deletion of `node` from `carved`, if one exists.
pub fn entry_for(carved: SimpleType, node: usize) -> Option<EntryId> {
    let n = carved.rank();
    match carved.family() {
        Family::A => match node {
            1 => Some(E11),
            _ if node == n => Some(E12),
            _ => None,
        },
        Family::B => match node {
            1 => Some(E21),
            _ if node == n => Some(E22),
            _ => None,
        },
        Family::C => match node {
            1 => Some(E31),
            _ if node == n => Some(E32),
            _ => None,
        },
        Family::D => match node {
            1 => Some(E41),
            _ if node == n - 1 => Some(E42),
            _ if node == n => Some(E43),
            _ => None,
        },
        Family::G => match node {
            1 => Some(E51),
            2 => Some(E52),
            _ => None,
        },
        Family::F => match node {
            4 => Some(E61),
            1 => Some(E62),
            _ => None,
        },
        Family::E => match (n, node) {
            (6, 1) => Some(E71),
            (6, 6) => Some(E72),
            (6, 2) => Some(E73),
            (7, 1) => Some(E81),
            (7, 7) => Some(E82),
            (7, 2) => Some(E83),
            (8, 1) => Some(E91),
            (8, 8) => Some(E92),
            _ => None,
        },
    }
}

/// A row's "nilradical structure" line, normalized to layer dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimedStructure {
    Abelian(usize),
    /// Heisenberg dimensions (each 2m+1), largest first.
    Heisenbergs(Vec<usize>),
}

impl ClaimedStructure {
    fn matches(&self, d: &StructureDescriptor) -> bool {
        match self {
            ClaimedStructure::Abelian(n) => d.is_abelian() && d.abelian_dim == *n,
            ClaimedStructure::Heisenbergs(dims) => {
                d.abelian_dim == 0 && d.heisenberg_dims() == *dims
            }
        }
    }
}

impl fmt::Display for ClaimedStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimedStructure::Abelian(n) => write!(f, "Z_{n}"),
            ClaimedStructure::Heisenbergs(dims) => f.write_str(&dim_terms(dims).join(" + ")),
        }
    }
}

/// Run-length rendering of descending Heisenberg dimensions:
/// [9, 5, 5] becomes ["h_9", "2 x h_5"].
fn dim_terms(dims: &[usize]) -> Vec<String> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < dims.len() {
        let d = dims[i];
        let mut j = i;
        while j < dims.len() && dims[j] == d {
            j += 1;
        }
        out.push(if j - i == 1 {
            format!("h_{d}")
        } else {
            format!("{} x h_{d}", j - i)
        });
        i = j;
    }
    out
}

/// Render a computed descriptor the way table rows print structures, e.g.
/// "Z_16" or "h_9 + 6 x h_5".
pub fn structure_string(d: &StructureDescriptor) -> String {
    let mut terms = Vec::new();
    if d.abelian_dim > 0 || d.heisenbergs.is_empty() {
        terms.push(format!("Z_{}", d.abelian_dim));
    }
    terms.extend(dim_terms(&d.heisenberg_dims()));
    terms.join(" + ")
}

/// One row's printed assertions, instantiated at a concrete rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub g_type: SimpleType,
    /// Printed closed form, primitive-normalized, in doubled coordinates.
    pub h_star: HalfVec,
    /// Size of the printed negative-block list.
    pub r_minus_count: usize,
    pub structure: ClaimedStructure,
    /// Set when the printed row disagrees with itself about h*; the golden
    /// value above is the primitive kernel generator in that case.
    pub note: Option<String>,
}

/// Outcome of diffing one computed case against the table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Discrepancy(Vec<String>),
    NotInTable,
    NonSandwich,
}

impl Verdict {
    /// Fixed report vocabulary used by emitters.
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Discrepancy(_) => "discrepancy",
            Verdict::NotInTable => "not-in-paper",
            Verdict::NonSandwich => "non-sandwich",
        }
    }

    pub fn details(&self) -> &[String] {
        match self {
            Verdict::Discrepancy(d) => d,
            _ => &[],
        }
    }
}

/// Fully analyzed case plus the diff against its table row, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub stype: SimpleType,
    pub node: usize,
    /// Other nodes in the same diagram-automorphism orbit, ascending.
    pub aliases: Vec<usize>,
    pub retained_type: SimpleType,
    pub kernel_coeffs: Vec<i64>,
    pub h_star: HalfVec,
    pub r_minus_count: usize,
    /// Restrictions of distinct negative roots stay distinct.
    pub property3: bool,
    pub analysis: NilradicalAnalysis,
    pub entry: Option<EntryId>,
    pub claim: Option<Claim>,
    pub verdict: Verdict,
    pub note: Option<String>,
}

/// Carve one case, analyze the negative block, and diff against the table.
pub fn run_case(carved: SimpleType, node: usize) -> Result<ClassificationReport, CarveError> {
    let carving = carve(carved, node)?;
    let analysis = analyze(&carving);
    let property3 = carving.property_three_holds();
    let entry = entry_for(carved, node);
    let claim = entry.map(|id| id.claim(carved));
    let verdict = match &claim {
        Some(claim) => diff_case(claim, &carving, &analysis, property3),
        None if analysis.sandwich => Verdict::NotInTable,
        None => Verdict::NonSandwich,
    };
    let mut notes: Vec<String> = Vec::new();
    if let Some(c) = &claim {
        notes.extend(c.note.iter().cloned());
    }
    notes.extend(cross_family_note(carved, node));
    Ok(ClassificationReport {
        stype: carved,
        node,
        aliases: orbit_aliases(carving.root_system(), node),
        retained_type: carving.retained_type(),
        kernel_coeffs: carving.kernel_coeffs().to_vec(),
        h_star: carving.h_star().clone(),
        r_minus_count: carving.r_minus().len(),
        property3,
        analysis,
        entry,
        claim,
        verdict,
        note: (!notes.is_empty()).then(|| notes.join("; ")),
    })
}

/// Field-by-field comparison against one claim; any disagreement is reported
/// with both values side by side.
fn diff_case(
    claim: &Claim,
    carving: &Carving,
    analysis: &NilradicalAnalysis,
    property3: bool,
) -> Verdict {
    let mut details = Vec::new();
    if carving.retained_type() != claim.g_type {
        details.push(format!(
            "retained type: computed {}, published {}",
            carving.retained_type(),
            claim.g_type
        ));
    }
    if carving.h_star() != &claim.h_star {
        details.push(format!(
            "h*: computed {}, published {}",
            carving.h_star(),
            claim.h_star
        ));
    }
    if carving.r_minus().len() != claim.r_minus_count {
        details.push(format!(
            "negative block size: computed {}, published list has {}",
            carving.r_minus().len(),
            claim.r_minus_count
        ));
    }
    if !property3 {
        let classes = carving.restrict();
        details.push(format!(
            "restriction collisions: {} block roots give only {} distinct functionals",
            carving.r_minus().len(),
            classes.len()
        ));
    }
    match &analysis.descriptor {
        Some(d) => {
            if !claim.structure.matches(d) {
                details.push(format!(
                    "structure: computed {}, published {}",
                    structure_string(d),
                    claim.structure
                ));
            }
        }
        None => details.push(format!(
            "two-step check: computed non-sandwich (double-bracket witness found), \
             published structure {}",
            claim.structure
        )),
    }
    if details.is_empty() {
        Verdict::Match
    } else {
        Verdict::Discrepancy(details)
    }
}

/// The other rank-2 family reads the same diagram with the bond reversed, so
/// B2 cases double as C2 cases with the nodes swapped. Recorded as an
/// annotation only; the sweep never visits a C2.
fn cross_family_note(carved: SimpleType, node: usize) -> Option<String> {
    (carved.family() == Family::B && carved.rank() == 2).then(|| {
        format!(
            "rank-2 identification: same case as C2 node {} with long and short ends exchanged",
            3 - node
        )
    })
}

/// Orbit partners of `node` under the diagram automorphisms, excluding
/// `node`, ascending.
fn orbit_aliases(rs: &RootSystem, node: usize) -> Vec<usize> {
    let mut orbit: Vec<usize> = rs
        .automorphisms()
        .iter()
        .map(|perm| perm[node - 1])
        .collect();
    orbit.sort_unstable();
    orbit.dedup();
    orbit.retain(|&m| m != node);
    orbit
}

/// Extremity orbits of one diagram as (least node, other members) pairs,
/// ascending by least node.
fn extremity_orbits(rs: &RootSystem) -> Vec<(usize, Vec<usize>)> {
    rs.extremities()
        .into_iter()
        .filter_map(|e| {
            let rest = orbit_aliases(rs, e);
            rest.iter().all(|&m| m > e).then_some((e, rest))
        })
        .collect()
}

/// Every diagram the full sweep visits: classical families up to `max_rank`,
/// exceptional types always, in (family, rank) order.
fn sweep_types(max_rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for rank in family.min_rank().max(2)..=max_rank {
            out.push(stype(family, rank));
        }
    }
    for (family, rank) in [
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
        (Family::F, 4),
        (Family::G, 2),
    ] {
        out.push(stype(family, rank));
    }
    out
}

/// One report per extremity orbit of every diagram up to `max_rank`, sorted
/// by (family, rank, node). Orbit partners are listed as aliases on the
/// canonical (least-node) report.
pub fn classify_all(max_rank: usize) -> Vec<ClassificationReport> {
    assert!(max_rank >= 4, "classification sweep needs max_rank >= 4");
    let mut reports = Vec::new();
    for carved in sweep_types(max_rank) {
        let rs = RootSystem::build(carved);
        for (node, _) in extremity_orbits(&rs) {
            reports.push(run_case(carved, node).expect("orbit nodes are extremities"));
        }
    }
    reports
}

/// Audit of one table row across every rank it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryAudit {
    pub entry: EntryId,
    /// One report per covered case, rank ascending.
    pub reports: Vec<ClassificationReport>,
    /// Match only when every covered rank matches; otherwise the pooled
    /// details, prefixed by the failing case when several were run.
    pub verdict: Verdict,
}

/// Totals and one audit per table row, in printed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableAudit {
    pub entries: Vec<EntryAudit>,
    pub matches: usize,
    pub discrepancies: usize,
}

/// Replay the whole table: every row, every covered rank up to `max_rank`.
pub fn verify_paper(max_rank: usize) -> TableAudit {
    assert!(max_rank >= 4, "table audit needs max_rank >= 4");
    let entries: Vec<EntryAudit> = EntryId::all()
        .into_iter()
        .map(|id| {
            let reports: Vec<ClassificationReport> = id
                .cases(max_rank)
                .into_iter()
                .map(|(carved, node)| run_case(carved, node).expect("table rows are extremities"))
                .collect();
            let verdict = pooled_verdict(&reports);
            EntryAudit {
                entry: id,
                reports,
                verdict,
            }
        })
        .collect();
    let matches = entries
        .iter()
        .filter(|a| a.verdict == Verdict::Match)
        .count();
    let discrepancies = entries.len() - matches;
    TableAudit {
        entries,
        matches,
        discrepancies,
    }
}

fn pooled_verdict(reports: &[ClassificationReport]) -> Verdict {
    let mut details = Vec::new();
    for report in reports {
        // A report carrying a table row can only match or disagree with it.
        debug_assert!(matches!(
            report.verdict,
            Verdict::Match | Verdict::Discrepancy(_)
        ));
        for d in report.verdict.details() {
            details.push(if reports.len() == 1 {
                d.clone()
            } else {
                format!("{} node {}: {}", report.stype, report.node, d)
            });
        }
    }
    if details.is_empty() {
        Verdict::Match
    } else {
        Verdict::Discrepancy(details)
    }
}
