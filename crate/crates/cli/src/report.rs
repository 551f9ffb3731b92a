//! Serializable output model. Every vector is emitted as its doubled
//! integer coordinates under a `_x2` key (functionals on coweights use
//! `_x4`), so the JSON stays integer-only and exact.

use serde::{Deserialize, Serialize};

use sandwich_core::carving::Carving;
use sandwich_core::classify::ClassificationReport;
use sandwich_core::exactvec::HalfVec;

fn x2(v: &HalfVec) -> Vec<i64> {
    v.coords_x2().to_vec()
}

/// One analyzed case in the fixed report schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseOut {
    pub family: String,
    pub rank: usize,
    pub node: usize,
    /// Retained simple type after the deletion.
    pub g_type: String,
    pub h_star_x2: Vec<i64>,
    pub r_minus_count: usize,
    pub sandwich: bool,
    pub property3: bool,
    /// Null exactly when the block is not two-step.
    pub descriptor: Option<DescriptorOut>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub paper_entry: Option<String>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub details: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub aliases: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorOut {
    pub abelian_dim: usize,
    pub heisenbergs: Vec<HeisenbergOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeisenbergOut {
    pub zeta_x2: Vec<i64>,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub alpha_x2: Vec<i64>,
    pub beta_x2: Vec<i64>,
    pub gamma_x2: Vec<i64>,
}

/// Top-level payload of `classify` and `verify-paper`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CasesOut {
    pub cases: Vec<CaseOut>,
}

/// Full payload of `inspect`: the schema case plus everything the detailed
/// view renders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InspectOut {
    pub case: CaseOut,
    /// Coefficients of h* over the coweight basis.
    pub kernel_coeffs: Vec<i64>,
    pub closed: bool,
    pub ideal: bool,
    pub simple_roots_x2: Vec<Vec<i64>>,
    pub coweights_x2: Vec<Vec<i64>>,
    pub r_minus_x2: Vec<Vec<i64>>,
    pub restriction_classes: Vec<ClassOut>,
    pub center_x2: Vec<Vec<i64>>,
    /// Pair decompositions a + b = zeta, one entry per sum root.
    pub relations: Vec<RelationOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOut {
    /// Pairings with the retained coweights in node order, scaled by 4.
    pub functional_x4: Vec<i64>,
    pub members_x2: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationOut {
    pub zeta_x2: Vec<i64>,
    pub pairs: Vec<(Vec<i64>, Vec<i64>)>,
}

pub fn case_out(report: &ClassificationReport) -> CaseOut {
    CaseOut {
        family: report.stype.family().letter().to_string(),
        rank: report.stype.rank(),
        node: report.node,
        g_type: report.retained_type.to_string(),
        h_star_x2: x2(&report.h_star),
        r_minus_count: report.r_minus_count,
        sandwich: report.analysis.sandwich,
        property3: report.property3,
        descriptor: report.analysis.descriptor.as_ref().map(|d| DescriptorOut {
            abelian_dim: d.abelian_dim,
            heisenbergs: d
                .heisenbergs
                .iter()
                .map(|(zeta, m)| HeisenbergOut {
                    zeta_x2: x2(zeta),
                    multiplicity: *m,
                })
                .collect(),
        }),
        witness: report.analysis.witness.as_ref().map(|[a, b, g]| WitnessOut {
            alpha_x2: x2(a),
            beta_x2: x2(b),
            gamma_x2: x2(g),
        }),
        paper_entry: report.entry.map(|e| e.label().to_string()),
        verdict: report.verdict.kind().to_string(),
        details: report.verdict.details().to_vec(),
        aliases: report.aliases.clone(),
        note: report.note.clone(),
    }
}

pub fn inspect_out(carving: &Carving, report: &ClassificationReport) -> InspectOut {
    let rs = carving.root_system();
    InspectOut {
        case: case_out(report),
        kernel_coeffs: report.kernel_coeffs.clone(),
        closed: report.analysis.closed,
        ideal: report.analysis.ideal,
        simple_roots_x2: rs.simple_roots().iter().map(x2).collect(),
        coweights_x2: rs.coweights().iter().map(x2).collect(),
        r_minus_x2: carving.r_minus().iter().map(x2).collect(),
        restriction_classes: carving
            .restrict()
            .iter()
            .map(|c| ClassOut {
                functional_x4: c.functional_x4.clone(),
                members_x2: c.members.iter().map(x2).collect(),
            })
            .collect(),
        center_x2: report.analysis.center_roots.iter().map(x2).collect(),
        relations: report
            .analysis
            .pair_sets
            .iter()
            .map(|p| RelationOut {
                zeta_x2: x2(&p.zeta),
                pairs: p.pairs.iter().map(|(a, b)| (x2(a), x2(b))).collect(),
            })
            .collect(),
    }
}
