//! Plain-text rendering. Output is stable `key: value` lines; the detailed
//! single-case view follows the layout of a published table entry (simple
//! roots, coweight basis, h* in both forms, the negative block, relations,
//! structure).

use std::fmt::Write as _;

use sandwich_core::carving::Carving;
use sandwich_core::classify::{structure_string, ClassificationReport, TableAudit};
use sandwich_core::exactvec::HalfVec;

/// Renders a coefficient combination over a symbol basis, e.g.
/// `2h1 + 4h2 + 3h3 + 2h4`.
fn combo(coeffs: &[i64], sym: char) -> String {
    let mut out = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        if c.abs() != 1 {
            let _ = write!(out, "{}", c.abs());
        }
        let _ = write!(out, "{sym}{}", i + 1);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn list(values: &[usize]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn push_verdict_lines(out: &mut String, report: &ClassificationReport) {
    match report.entry {
        Some(e) => {
            let _ = writeln!(out, "published entry: {e}");
        }
        None => out.push_str("published entry: none\n"),
    }
    let _ = writeln!(out, "verdict: {}", report.verdict.kind());
    for d in report.verdict.details() {
        let _ = writeln!(out, "  - {d}");
    }
    if let Some(n) = &report.note {
        let _ = writeln!(out, "note: {n}");
    }
}

fn structure_line(report: &ClassificationReport) -> String {
    match &report.analysis.descriptor {
        Some(d) => format!("nilradical structure: {}", structure_string(d)),
        None => "nilradical structure: none (not two-step)".to_string(),
    }
}

fn witness_line(w: &[HalfVec; 3]) -> String {
    format!("witness: alpha = {}, beta = {}, gamma = {}", w[0], w[1], w[2])
}

/// Compact per-case block used by `classify`.
pub fn case_block(report: &ClassificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "case: {} node {}", report.stype, report.node);
    if !report.aliases.is_empty() {
        let _ = writeln!(out, "aliases: node {}", list(&report.aliases));
    }
    let _ = writeln!(out, "retained type: {}", report.retained_type);
    let _ = writeln!(out, "h*: {}", report.h_star);
    let _ = writeln!(out, "negative block: {} roots", report.r_minus_count);
    let _ = writeln!(
        out,
        "sandwich: {}",
        if report.analysis.sandwich { "yes" } else { "no" }
    );
    if let Some(w) = &report.analysis.witness {
        let _ = writeln!(out, "{}", witness_line(w));
    }
    let _ = writeln!(
        out,
        "property 3: {}",
        if report.property3 { "holds" } else { "fails" }
    );
    let _ = writeln!(out, "{}", structure_line(report));
    push_verdict_lines(&mut out, report);
    out
}

pub fn classify_text(reports: &[ClassificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&case_block(r));
        out.push('\n');
    }
    let count = |v: &str| reports.iter().filter(|r| r.verdict.kind() == v).count();
    let _ = writeln!(out, "cases: {}", reports.len());
    let _ = writeln!(out, "match: {}", count("match"));
    let _ = writeln!(out, "discrepancy: {}", count("discrepancy"));
    let _ = writeln!(out, "non-sandwich: {}", count("non-sandwich"));
    let _ = writeln!(out, "not-in-paper: {}", count("not-in-paper"));
    out
}

pub fn verify_text(audit: &TableAudit) -> String {
    let mut out = String::new();
    for a in &audit.entries {
        let cases = a.reports.len();
        let noun = if cases == 1 { "case" } else { "cases" };
        let _ = writeln!(
            out,
            "entry {}: {} [{cases} {noun}]",
            a.entry,
            a.verdict.kind()
        );
        for d in a.verdict.details() {
            let _ = writeln!(out, "  - {d}");
        }
        for r in &a.reports {
            if let Some(n) = &r.note {
                let _ = writeln!(out, "  note ({} node {}): {n}", r.stype, r.node);
            }
        }
    }
    let _ = writeln!(
        out,
        "summary: {} match, {} discrepancy",
        audit.matches, audit.discrepancies
    );
    out
}

/// Detailed single-case view used by `inspect`.
pub fn inspect_text(carving: &Carving, report: &ClassificationReport) -> String {
    let rs = carving.root_system();
    let mut out = String::new();
    let _ = writeln!(out, "case: {} node {}", report.stype, report.node);
    if !report.aliases.is_empty() {
        let _ = writeln!(out, "aliases: node {}", list(&report.aliases));
    }
    let _ = writeln!(out, "retained type: {}", report.retained_type);
    out.push_str("simple roots:\n");
    for (i, a) in rs.simple_roots().iter().enumerate() {
        let _ = writeln!(out, "  a{} = {a}", i + 1);
    }
    out.push_str("coweight basis:\n");
    for (i, h) in rs.coweights().iter().enumerate() {
        let _ = writeln!(out, "  h{} = {h}", i + 1);
    }
    let _ = writeln!(
        out,
        "h*: {} = {}",
        combo(&report.kernel_coeffs, 'h'),
        report.h_star
    );
    let _ = writeln!(out, "negative block ({} roots):", report.r_minus_count);
    for r in carving.r_minus() {
        let _ = writeln!(out, "  {r}");
    }
    let _ = writeln!(
        out,
        "closed: {}",
        if report.analysis.closed { "yes" } else { "no" }
    );
    let _ = writeln!(
        out,
        "ideal: {}",
        if report.analysis.ideal { "yes" } else { "no" }
    );
    let _ = writeln!(
        out,
        "sandwich: {}",
        if report.analysis.sandwich { "yes" } else { "no" }
    );
    if let Some(w) = &report.analysis.witness {
        let _ = writeln!(out, "{}", witness_line(w));
    }
    let classes = carving.restrict();
    let _ = writeln!(
        out,
        "restriction classes: {} over {} roots",
        classes.len(),
        report.r_minus_count
    );
    let _ = writeln!(
        out,
        "property 3: {}",
        if report.property3 { "holds" } else { "fails" }
    );
    let multi: Vec<_> = classes.iter().filter(|c| c.members.len() > 1).collect();
    if !multi.is_empty() {
        out.push_str("colliding classes:\n");
        for c in multi {
            let members: Vec<String> = c.members.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "  {{{}}}", members.join(", "));
        }
    }
    let centers = report.analysis.center_roots.len();
    let _ = writeln!(
        out,
        "center ({centers} {}):",
        if centers == 1 { "root" } else { "roots" }
    );
    for z in &report.analysis.center_roots {
        let _ = writeln!(out, "  {z}");
    }
    if report.analysis.pair_sets.is_empty() {
        out.push_str("additive relations: none\n");
    } else {
        out.push_str("additive relations:\n");
        for p in &report.analysis.pair_sets {
            for (a, b) in &p.pairs {
                let _ = writeln!(out, "  ({a}) + ({b}) = {}", p.zeta);
            }
        }
    }
    let _ = writeln!(out, "{}", structure_line(report));
    push_verdict_lines(&mut out, report);
    out
}
