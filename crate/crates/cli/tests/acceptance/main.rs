//! Release gate: one test per acceptance criterion, so the run prints one
//! pass/fail line for each. The heavy re-derivations live in `oracle`, which
//! shares no code with the library under test.

mod oracle;

use std::collections::BTreeSet;
use std::process::Command;

use sandwich_core::carving::{carve, Carving};
use sandwich_core::classify::{
    structure_string, verify_paper, ClassificationReport, EntryAudit, EntryId, TableAudit,
    Verdict,
};
use sandwich_core::exactvec::IntMatrix;
use sandwich_core::nilrad::{
    analyze, is_abelian, is_closed, is_ideal, mark_predicts_abelian, mark_predicts_sandwich,
};
use sandwich_core::rootsys::{
    roots_by_closure, roots_from_formula, Family, RootSystem, SimpleType,
};

use oracle::{e7_roots, e8_roots, g2_roots, BlockOracle, Vx2};

fn st(family: Family, rank: usize) -> SimpleType {
    SimpleType::new(family, rank).expect("valid type")
}

fn supported_types() -> Vec<SimpleType> {
    let families = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
    let mut out = Vec::new();
    for family in families {
        for rank in family.min_rank()..=8 {
            if let Ok(t) = SimpleType::new(family, rank) {
                out.push(t);
            }
        }
    }
    out
}

fn all_carvings() -> Vec<Carving> {
    let mut out = Vec::new();
    for t in supported_types() {
        if t.rank() < 2 {
            continue;
        }
        for node in RootSystem::build(t).extremities() {
            out.push(carve(t, node).expect("extremity carves"));
        }
    }
    out
}

#[test]
fn criterion_1_root_counts_and_generator_agreement() {
    for t in supported_types() {
        let expected = match t.family() {
            Family::A => t.rank() * (t.rank() + 1),
            Family::B | Family::C => 2 * t.rank() * t.rank(),
            Family::D => 2 * t.rank() * (t.rank() - 1),
            Family::G => 12,
            Family::F => 48,
            Family::E => match t.rank() {
                6 => 72,
                7 => 126,
                _ => 240,
            },
        };
        let mut from_formula = roots_from_formula(t);
        let mut from_closure = roots_by_closure(t);
        assert_eq!(from_formula.len(), expected, "count for {t}");
        from_formula.sort();
        from_closure.sort();
        assert_eq!(from_formula, from_closure, "generators disagree for {t}");
    }
}

/// Chain with 2 on the diagonal and -1 across each single bond.
fn chain_matrix(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn expected_cartan(t: SimpleType) -> IntMatrix {
    let n = t.rank();
    let rows = match t.family() {
        Family::A => chain_matrix(n),
        Family::B => {
            let mut m = chain_matrix(n);
            m[n - 2][n - 1] = -2;
            m
        }
        Family::C => {
            let mut m = chain_matrix(n);
            m[n - 1][n - 2] = -2;
            m
        }
        Family::D => {
            // Chain on 1..n-1 with node n hanging off node n-2.
            let mut m = chain_matrix(n);
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 2] = 0;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
            m
        }
        Family::G => vec![vec![2, -1], vec![-3, 2]],
        Family::F => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -2, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ],
        Family::E => match n {
            6 => vec![
                vec![2, 0, -1, 0, 0, 0],
                vec![0, 2, 0, -1, 0, 0],
                vec![-1, 0, 2, -1, 0, 0],
                vec![0, -1, -1, 2, -1, 0],
                vec![0, 0, 0, -1, 2, -1],
                vec![0, 0, 0, 0, -1, 2],
            ],
            7 => vec![
                vec![2, 0, -1, 0, 0, 0, 0],
                vec![0, 2, 0, -1, 0, 0, 0],
                vec![-1, 0, 2, -1, 0, 0, 0],
                vec![0, -1, -1, 2, -1, 0, 0],
                vec![0, 0, 0, -1, 2, -1, 0],
                vec![0, 0, 0, 0, -1, 2, -1],
                vec![0, 0, 0, 0, 0, -1, 2],
            ],
            _ => vec![
                vec![2, 0, -1, 0, 0, 0, 0, 0],
                vec![0, 2, 0, -1, 0, 0, 0, 0],
                vec![-1, 0, 2, -1, 0, 0, 0, 0],
                vec![0, -1, -1, 2, -1, 0, 0, 0],
                vec![0, 0, 0, -1, 2, -1, 0, 0],
                vec![0, 0, 0, 0, -1, 2, -1, 0],
                vec![0, 0, 0, 0, 0, -1, 2, -1],
                vec![0, 0, 0, 0, 0, 0, -1, 2],
            ],
        },
    };
    IntMatrix::from_rows(&rows)
}

#[test]
fn criterion_2_published_cartan_matrices() {
    for t in supported_types() {
        if t.rank() < 2 {
            continue;
        }
        assert_eq!(
            *RootSystem::build(t).cartan(),
            expected_cartan(t),
            "Cartan matrix for {t}"
        );
    }
}

/// Doubled e-coordinates of the distinguished coweight each table row
/// prints, with the non-primitive combinations reduced to the primitive
/// generator reported by the tool.
fn expected_h_star_x2(entry: EntryId, t: SimpleType) -> Vec<i64> {
    let r = t.rank();
    let l = r - 1;
    let parity = |base: i64| if l % 2 == 0 { 2 * base } else { base };
    match entry.label() {
        "1.1" => {
            let mut v = vec![-2; r + 1];
            v[0] = 2 * r as i64;
            v
        }
        "1.2" => {
            let mut v = vec![2; r + 1];
            v[r] = -2 * r as i64;
            v
        }
        "2.1" | "4.1" => {
            let mut v = vec![0; r];
            v[0] = 4;
            v
        }
        "3.1" => {
            let mut v = vec![0; r];
            v[0] = 2;
            v
        }
        "2.2" | "4.3" => vec![parity(2); r],
        "3.2" => vec![2; r],
        "4.2" => {
            let mut v = vec![parity(2); r];
            v[r - 1] = -parity(2);
            v
        }
        "5.1" => vec![-8, -10, -6],
        "5.2" => vec![-6, -6, -4],
        "6.1" => vec![4, 0, 0, 0],
        "6.2" => vec![2, 2, 0, 0],
        "7.1" => vec![0, 0, 0, 0, 0, 12],
        "7.2" => vec![0, 0, 0, 0, 6, 6],
        "7.3" => vec![1, 1, 1, 1, 1, 3],
        "8.1" => vec![0, 0, 0, 0, 0, 0, 4],
        "8.2" => vec![0, 0, 0, 0, 0, 4, 4],
        "8.3" => vec![-2, 2, 2, 2, 2, 2, 8],
        "9.1" => vec![0, 0, 0, 0, 0, 0, 0, 4],
        _ => vec![0, 0, 0, 0, 0, 0, 2, 2],
    }
}

#[test]
fn criterion_3_h_star_closed_forms() {
    let mut rows = 0;
    for entry in EntryId::all() {
        for (t, node) in entry.cases(8) {
            let carving = carve(t, node).expect("table cases carve");
            assert_eq!(
                carving.h_star().coords_x2(),
                expected_h_star_x2(entry, t),
                "h* for entry {} at {t}",
                entry.label()
            );
            rows += 1;
        }
    }
    assert_eq!(rows, 67, "every covered rank of every row is checked");
}

#[test]
fn criterion_4_negative_blocks_are_closed_ideals() {
    let carvings = all_carvings();
    assert_eq!(carvings.len(), 68);
    for c in &carvings {
        let label = format!("{} node {}", c.stype(), c.node());
        assert!(is_closed(c), "block not closed for {label}");
        assert!(is_ideal(c), "block not an ideal for {label}");
        assert!(
            c.class_matches_node_coefficient(),
            "sign class disagrees with the deleted-node coefficient for {label}"
        );
    }
}

#[test]
fn criterion_5_witness_triples() {
    // Rank-8 exceptional diagram, branch node: the least failing triple.
    let frozen_e8: [Vx2; 3] = [
        vec![-2, -2, 0, 0, 0, 0, 0, 0],
        vec![1, 1, -1, -1, -1, 1, 1, -1],
        vec![-1, 1, 1, 1, 1, -1, -1, -1],
    ];
    let carving = carve(st(Family::E, 8), 2).expect("branch node carves");
    let analysis = analyze(&carving);
    assert!(!analysis.sandwich);
    let witness = analysis.witness.expect("failing triple reported");
    for (got, want) in witness.iter().zip(&frozen_e8) {
        assert_eq!(got.coords_x2(), &want[..]);
    }

    let orc = BlockOracle::new(e8_roots(), &[1, 1, 1, 1, 1, 1, 1, 5]);
    assert_eq!(orc.r_minus.len(), carving.r_minus().len());
    assert_eq!(orc.least_witness().expect("oracle finds one"), frozen_e8);

    // The worked double-bracket example for this diagram, negated into the
    // negative block, is also a valid failing triple.
    let printed: [Vx2; 3] = [
        vec![-1, 1, 1, -1, -1, 1, 1, -1],
        vec![0, -2, -2, 0, 0, 0, 0, 0],
        vec![-1, 1, 1, 1, 1, -1, -1, -1],
    ];
    assert!(orc.witness_valid(&printed[0], &printed[1], &printed[2]));

    // Short-root end of the triple-bond diagram.
    let frozen_g2: [Vx2; 3] = [
        vec![-2, 2, 0],
        vec![2, 0, -2],
        vec![-2, 2, 0],
    ];
    let carving = carve(st(Family::G, 2), 1).expect("extremity carves");
    let analysis = analyze(&carving);
    assert!(!analysis.sandwich);
    let witness = analysis.witness.expect("failing triple reported");
    for (got, want) in witness.iter().zip(&frozen_g2) {
        assert_eq!(got.coords_x2(), &want[..]);
    }

    let orc = BlockOracle::new(g2_roots(), &[-8, -10, -6]);
    assert_eq!(orc.r_minus.len(), 5);
    assert_eq!(orc.least_witness().expect("oracle finds one"), frozen_g2);

    // -a1, -(a1+a2), -(a1+a2) in simple-root terms: a doubled simple root
    // reached in two steps.
    let pattern: [Vx2; 3] = [
        vec![-2, 2, 0],
        vec![2, 0, -2],
        vec![2, 0, -2],
    ];
    assert!(orc.witness_valid(&pattern[0], &pattern[1], &pattern[2]));
}

fn audit_entry<'a>(audit: &'a TableAudit, label: &str) -> &'a EntryAudit {
    audit
        .entries
        .iter()
        .find(|a| a.entry.label() == label)
        .expect("entry audited")
}

fn report_at<'a>(audit: &'a TableAudit, label: &str, rank: usize) -> &'a ClassificationReport {
    audit_entry(audit, label)
        .reports
        .iter()
        .find(|r| r.stype.rank() == rank)
        .expect("rank covered")
}

#[test]
fn criterion_6_matching_rows_match() {
    let audit = verify_paper(8);
    let matched: BTreeSet<&str> = audit
        .entries
        .iter()
        .filter(|a| matches!(a.verdict, Verdict::Match))
        .map(|a| a.entry.label())
        .collect();
    let expected: BTreeSet<&str> = [
        "1.1", "1.2", "2.1", "2.2", "3.1", "3.2", "4.1", "4.2", "4.3", "5.2", "6.1", "6.2",
        "7.1", "7.2", "7.3",
    ]
    .into_iter()
    .collect();
    assert_eq!(matched, expected);
    assert_eq!(audit.matches, 15);

    let structure = |label: &str, rank: usize| {
        let descriptor = report_at(&audit, label, rank)
            .analysis
            .descriptor
            .as_ref()
            .expect("matching rows are sandwiches");
        structure_string(descriptor)
    };
    assert_eq!(structure("6.1", 4), "h_9 + 6 x h_5");
    assert_eq!(structure("6.2", 4), "h_15");
    assert_eq!(structure("5.2", 2), "h_5");
    assert_eq!(structure("7.1", 6), "Z_16");
    assert_eq!(structure("7.2", 6), "Z_16");
    assert_eq!(structure("7.3", 6), "h_21");
    assert_eq!(structure("1.1", 5), "Z_5");
    assert_eq!(structure("2.2", 4), "6 x h_3");
    assert_eq!(structure("3.2", 3), "Z_6");

    let central_pairs: Vec<usize> = report_at(&audit, "7.3", 6)
        .analysis
        .descriptor
        .as_ref()
        .expect("sandwich")
        .heisenbergs
        .iter()
        .map(|(_, m)| *m)
        .collect();
    assert_eq!(central_pairs, [10]);
}

#[test]
fn criterion_7_mark_predicts_sandwich_and_abelian() {
    for c in all_carvings() {
        let label = format!("{} node {}", c.stype(), c.node());
        let analysis = analyze(&c);
        assert_eq!(
            analysis.sandwich,
            mark_predicts_sandwich(&c),
            "triple scan disagrees with the mark for {label}"
        );
        assert_eq!(
            is_abelian(&c),
            mark_predicts_abelian(&c),
            "pair scan disagrees with the mark for {label}"
        );
    }
}

struct DiscrepancyCheck {
    label: &'static str,
    family: Family,
    rank: usize,
    node: usize,
    h_x2: Vec<i64>,
    ambient: Vec<Vx2>,
    ambient_count: usize,
    details: &'static [&'static str],
}

#[test]
fn criterion_8_discrepancies_against_oracle() {
    let audit = verify_paper(8);
    assert!(audit.discrepancies >= 1);
    assert_eq!(audit.discrepancies, 6);

    let checks = [
        DiscrepancyCheck {
            label: "5.1",
            family: Family::G,
            rank: 2,
            node: 1,
            h_x2: vec![-8, -10, -6],
            ambient: g2_roots(),
            ambient_count: 12,
            details: &[
                "restriction collisions: 5 block roots give only 3 distinct functionals",
                "two-step check: computed non-sandwich (double-bracket witness found), published structure h_3",
            ],
        },
        DiscrepancyCheck {
            label: "8.1",
            family: Family::E,
            rank: 7,
            node: 1,
            h_x2: vec![0, 0, 0, 0, 0, 0, 4],
            ambient: e7_roots(),
            ambient_count: 126,
            details: &["structure: computed h_33, published h_87"],
        },
        DiscrepancyCheck {
            label: "8.2",
            family: Family::E,
            rank: 7,
            node: 7,
            h_x2: vec![0, 0, 0, 0, 0, 4, 4],
            ambient: e7_roots(),
            ambient_count: 126,
            details: &["structure: computed Z_27, published Z_16"],
        },
        DiscrepancyCheck {
            label: "8.3",
            family: Family::E,
            rank: 7,
            node: 2,
            h_x2: vec![-2, 2, 2, 2, 2, 2, 8],
            ambient: e7_roots(),
            ambient_count: 126,
            details: &["structure: computed 7 x h_21, published h_43 + 6 x h_11"],
        },
        DiscrepancyCheck {
            label: "9.1",
            family: Family::E,
            rank: 8,
            node: 1,
            h_x2: vec![0, 0, 0, 0, 0, 0, 0, 4],
            ambient: e8_roots(),
            ambient_count: 240,
            details: &[
                "negative block size: computed 78, published list has 64",
                "structure: computed 14 x h_33, published Z_78",
            ],
        },
        DiscrepancyCheck {
            label: "9.2",
            family: Family::E,
            rank: 8,
            node: 8,
            h_x2: vec![0, 0, 0, 0, 0, 0, 2, 2],
            ambient: e8_roots(),
            ambient_count: 240,
            details: &[
                "negative block size: computed 57, published list has 44",
                "structure: computed h_57, published Z_32",
            ],
        },
    ];

    for check in checks {
        let entry = audit_entry(&audit, check.label);
        assert!(
            matches!(entry.verdict, Verdict::Discrepancy(_)),
            "entry {} should disagree with the published row",
            check.label
        );
        assert_eq!(entry.reports.len(), 1);
        let report = &entry.reports[0];
        assert_eq!(report.stype, st(check.family, check.rank));
        assert_eq!(report.node, check.node);
        assert_eq!(report.h_star.coords_x2(), &check.h_x2[..]);

        assert_eq!(check.ambient.len(), check.ambient_count);
        let orc = BlockOracle::new(check.ambient, &check.h_x2);
        assert_eq!(orc.ambient_count(), check.ambient_count);
        assert!(orc.is_closed(), "oracle block closed for {}", check.label);
        assert_eq!(
            orc.r_minus.len(),
            report.r_minus_count,
            "block size for {}",
            check.label
        );
        assert_eq!(orc.is_sandwich(), report.analysis.sandwich);
        match &report.analysis.descriptor {
            Some(d) => {
                let mut dims: Vec<usize> =
                    d.heisenbergs.iter().map(|(_, m)| 2 * m + 1).collect();
                dims.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(
                    orc.structure(),
                    (d.abelian_dim, dims),
                    "structure for {}",
                    check.label
                );
            }
            None => assert!(!orc.is_sandwich()),
        }

        let details = report.verdict.details();
        for needle in check.details {
            assert!(
                details.iter().any(|d| d.contains(needle)),
                "entry {} details {:?} missing {:?}",
                check.label,
                details,
                needle
            );
        }
    }

    // Short-root-end collision count, re-derived against the one retained
    // coweight of the triple-bond diagram.
    let orc = BlockOracle::new(g2_roots(), &[-8, -10, -6]);
    assert_eq!(orc.distinct_functionals(&[vec![-4, -2, -2]]), 3);
    assert!(!report_at(&audit, "5.1", 2).property3);

    // The printed structure for the rank-7 end-node row cannot fit its own
    // block: a Heisenberg inside 33 roots has dimension at most 2*33 - 1.
    let block = report_at(&audit, "8.1", 7).r_minus_count;
    assert_eq!(block, 33);
    assert!(87 > 2 * block - 1);
}

#[test]
fn criterion_9_deterministic_output() {
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_sandwich"))
            .args(args)
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        out.stdout
    };
    for args in [
        &["classify", "--max-rank", "8", "--format", "json"][..],
        &["verify-paper", "--max-rank", "8", "--format", "json"][..],
    ] {
        let first = run(args);
        let second = run(args);
        assert!(!first.is_empty());
        assert!(first.starts_with(b"{"));
        assert_eq!(first, second, "{args:?} output is not stable");
    }
}
