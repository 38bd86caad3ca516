//! Plain-text rendering of reports.

use super::analysis::AnalysisReport;
use super::case_study::CaseStudyReport;
use super::cone::ConeReport;
use super::lattice::{LatticeReport, SignatureSummary};
use crate::numeric::{format_rat, FieldElem};
use std::fmt::Write;

fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    out += &line(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str).collect());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn vector(v: &[FieldElem]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn signature_line(s: &SignatureSummary) -> String {
    let ball = s.ball_dimension.map_or("-".to_string(), |d| d.to_string());
    format!(
        "rank {}  inertia (+{}, -{}, 0:{})  profile {{{}, {}}}  ball dimension {}",
        s.rank, s.signature.positive, s.signature.negative, s.signature.null, s.profile.0, s.profile.1, ball
    )
}

pub fn render_analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "arrangement over {} in dimension {}: {} hyperplane(s), {} cusp(s)",
        r.field,
        r.ambient_dim,
        r.hyperplanes.len(),
        r.cusps.len()
    );
    if let Some(a) = &r.arrangement {
        out += "\nflats\n";
        let rows: Vec<Vec<String>> = a
            .flats
            .iter()
            .map(|f| {
                vec![
                    f.index.to_string(),
                    format!("{{{}}}", f.members.join(",")),
                    f.codim.to_string(),
                    f.dim.to_string(),
                ]
            })
            .collect();
        out += &grid(&["#", "members", "codim", "dim"], &rows);
        out += "\nblow-up schedule\n";
        for g in &a.schedule {
            let _ = writeln!(out, "  dim {}: flats {:?}", g.dim, g.flats);
        }
        let _ = writeln!(out, "\nstrata over flags of length <= {}: {}", a.max_flag_len, a.strata.len());
        for s in &a.strata {
            let dims: Vec<String> = s.factors.iter().map(|f| f.dim().to_string()).collect();
            let _ = writeln!(out, "  {:?}  factor dims [{}]  total {}", s.flag.chain(), dims.join(", "), s.total_dim());
        }
    }
    if let Some(s) = &r.singularities {
        out += "\nsingularities\n";
        let rows: Vec<Vec<String>> = s
            .flats
            .iter()
            .map(|f| {
                vec![
                    f.flat.to_string(),
                    format!("{{{}}}", f.members.join(",")),
                    f.codim.to_string(),
                    format_rat(&f.exponent),
                    format_rat(&f.cone_angle.fraction),
                    f.discrepancy.as_ref().map_or("-".into(), format_rat),
                    f.class.map_or("-", |c| c.as_str()).to_string(),
                    format_rat(&f.contracted_discrepancy),
                ]
            })
            .chain(s.cusps.iter().map(|c| {
                vec![
                    "cusp".into(),
                    c.id.clone(),
                    "-".into(),
                    format_rat(&c.weight),
                    format_rat(&c.cone_angle.fraction),
                    format_rat(&c.discrepancy),
                    c.class.as_str().to_string(),
                    "-".into(),
                ]
            }))
            .collect();
        out += &grid(
            &["#", "members", "codim", "a_L", "angle/2pi", "discrepancy", "class", "contracted"],
            &rows,
        );
        let _ = writeln!(out, "GIT side: {}", s.git_side.summary);
        let _ = writeln!(out, "Baily-Borel side: {}", s.bailyborel_side.summary);
        if let Some(t) = &s.transformation {
            let _ = writeln!(out, "transformation: {t}");
        }
        for n in &s.notes {
            let _ = writeln!(out, "note: {n}");
        }
    }
    if let Some(f) = &r.flatness {
        let _ = writeln!(
            out,
            "\nflatness ({:?} residues): {}",
            f.source,
            if f.criterion.flat { "flat" } else { "not flat" }
        );
        for v in &f.criterion.violations {
            let _ = writeln!(out, "  flat {} / {}: commutator {:?}", v.flat, v.hyperplane, v.commutator.to_rows().iter().map(|r| vector(r)).collect::<Vec<_>>());
        }
        for s in &f.scalar_on_normal {
            let _ = writeln!(
                out,
                "  flat {}: scalar {}  a_L {}  matches {}",
                s.flat,
                s.scalar.as_ref().map_or("-".into(), ToString::to_string),
                s.exponent,
                s.matches_exponent.map_or("-".into(), |b| b.to_string())
            );
        }
    }
    out
}

pub fn render_lattice(r: &LatticeReport) -> String {
    let mut out = format!("{:?} lattice  {}\n", r.ring, signature_line(&r.signature));
    if let Some(roots) = &r.roots {
        let _ = writeln!(
            out,
            "vectors of norm {} (bound {}, support <= {}){}",
            format_rat(&roots.norm),
            roots.bound,
            roots.max_support,
            if roots.truncated { ", first ones only" } else { "" }
        );
        for v in &roots.listed {
            let _ = writeln!(out, "  {}", vector(v));
        }
        if let Some(p) = &roots.perpendicular {
            match p {
                Some(p) => {
                    let _ = writeln!(out, "perpendicular pair {} + {} = {} of norm {}", vector(&p.first), vector(&p.second), vector(&p.sum), format_rat(&p.sum_norm));
                }
                None => out += "no perpendicular pair within the bound\n",
            }
        }
    }
    if let Some(c) = &r.complement {
        let _ = writeln!(
            out,
            "complement of {} (norm {}): {}",
            vector(&c.vector),
            format_rat(&c.vector_norm),
            signature_line(&c.signature)
        );
    }
    out
}

pub fn render_cone(r: &ConeReport) -> String {
    let mut out = String::new();
    for j in &r.joins {
        let _ = writeln!(out, "{} = {}  (dim {}, sphere index {})", j.factors.join(" * "), j.display, j.dim, j.sphere_index);
    }
    for t in &r.tangent_cones {
        let _ = writeln!(out, "tangent cone of {} at {}: {} (dim {})", t.join, t.at, t.display, t.dim);
    }
    if !r.metric.is_empty() {
        let rows: Vec<Vec<String>> = r
            .metric
            .iter()
            .map(|m| {
                vec![
                    m.beta.clone(),
                    m.samples.to_string(),
                    format!("{:.3e}", m.max_deviation),
                    if m.within_tolerance { "PASS" } else { "FAIL" }.into(),
                ]
            })
            .collect();
        out += &grid(&["beta", "samples", "max deviation", "result"], &rows);
    }
    out
}

pub fn render_case_study(r: &CaseStudyReport) -> String {
    let mut out = format!("{}: {}\n{}\n", r.name, r.description, r.recipe);
    let _ = writeln!(out, "computed  {}", signature_line(&r.lattice.value));
    if let Some(Some(p)) = r.perpendicular_roots.as_ref().map(|p| &p.value) {
        let _ = writeln!(out, "computed  perpendicular roots sum to {} of norm {}", vector(&p.sum), format_rat(&p.sum_norm));
    }
    if let Some(phi) = &r.phi {
        let _ = writeln!(out, "computed  Phi: {}", signature_line(&phi.value.signature));
    }
    for c in &r.checks {
        let actual = c.actual.map_or("-".into(), |a| a.to_string());
        let _ = writeln!(out, "check     {} expected {} got {}: {}", c.name, c.expected, actual, if c.pass { "PASS" } else { "FAIL" });
    }
    for f in &r.fixtures {
        let _ = writeln!(out, "fixture   {} = {}", f.name, f.value);
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    if let Some(e) = &r.excerpt {
        out += "\nlocal excerpt\n";
        out += &render_analysis(e);
    }
    out
}
