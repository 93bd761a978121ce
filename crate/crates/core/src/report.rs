//! Machine-readable and human-readable renderings of analysis results.
//!
//! Rationals are serialized as `"p/q"` strings (plain integers when the
//! denominator is 1); floats never appear. Serialization is deterministic,
//! so combinatorially equivalent inputs produce byte-identical reports.

use serde::{Deserialize, Serialize};

use crate::building::Model;
use crate::error::Error;
use crate::jump::JumpReport;
use crate::rational::format_rat;
use crate::ring::{GradedSlice, Presentation};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportJson {
    pub jumping_numbers: Vec<String>,
    pub inner_multiplicities: Vec<(String, u64)>,
    pub candidates: Vec<CandidateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Vec<DiagnosticJson>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CandidateJson {
    pub c: String,
    #[serde(rename = "S_c")]
    pub s_c: Vec<Vec<usize>>,
    pub verdict: bool,
    pub oracle: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DiagnosticJson {
    pub c: String,
    pub criterion: String,
}

pub fn report_to_json(report: &JumpReport) -> ReportJson {
    let diagnostics: Vec<DiagnosticJson> = report
        .candidates
        .iter()
        .filter_map(|c| {
            c.criterion.as_ref().map(|poly| DiagnosticJson {
                c: format_rat(&c.c),
                criterion: poly.clone(),
            })
        })
        .collect();
    ReportJson {
        jumping_numbers: report.jumping_numbers.iter().map(format_rat).collect(),
        inner_multiplicities: report
            .inner_multiplicities
            .iter()
            .map(|(c, n)| {
                let n: u64 = n.try_into().expect("multiplicity fits in u64");
                (format_rat(c), n)
            })
            .collect(),
        candidates: report
            .candidates
            .iter()
            .map(|c| CandidateJson {
                c: format_rat(&c.c),
                s_c: c.s_c_labels.clone(),
                verdict: c.verdict,
                oracle: c.oracle,
            })
            .collect(),
        diagnostics: (!diagnostics.is_empty()).then_some(diagnostics),
    }
}

pub fn render_report_table(report: &JumpReport) -> String {
    let mut out = String::new();
    let jumps: Vec<String> = report.jumping_numbers.iter().map(format_rat).collect();
    out.push_str(&format!(
        "jumping numbers in (0,1): {}\n",
        if jumps.is_empty() {
            "(none)".to_string()
        } else {
            jumps.join(", ")
        }
    ));
    let spectrum: Vec<String> = report
        .inner_multiplicities
        .iter()
        .filter(|(_, n)| !num_traits::Zero::is_zero(n))
        .map(|(c, n)| format!("({}, {})", format_rat(c), n))
        .collect();
    out.push_str(&format!(
        "spectrum part on (0,1]: {}\n",
        if spectrum.is_empty() {
            "(none)".to_string()
        } else {
            spectrum.join(", ")
        }
    ));
    out.push_str("candidates:\n");
    for cand in &report.candidates {
        let mut line = format!(
            "  c = {:>6}  S_c = {{{}}}  {}",
            format_rat(&cand.c),
            cand.s_c_labels
                .iter()
                .map(|l| format!(
                    "{{{}}}",
                    l.iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ))
                .collect::<Vec<_>>()
                .join(", "),
            if cand.trivially_one {
                "jumping (trivially)"
            } else if cand.verdict {
                "jumping"
            } else {
                "not jumping"
            }
        );
        if let Some(n) = &cand.inner {
            line.push_str(&format!("  inner multiplicity {n}"));
        }
        if let Some(o) = cand.oracle {
            line.push_str(if o == cand.verdict {
                "  oracle: agrees"
            } else {
                "  oracle: DISAGREES"
            });
        }
        out.push_str(&line);
        out.push('\n');
        if let Some(criterion) = &cand.criterion {
            out.push_str(&format!("      criterion: {criterion}\n"));
        }
    }
    if let Some(all) = report.oracle_all_agree {
        let total = report.candidates.len();
        let agreeing = report
            .candidates
            .iter()
            .filter(|c| c.oracle == Some(c.verdict))
            .count();
        out.push_str(&format!(
            "oracle: agree on {agreeing}/{total} candidates{}\n",
            if all { "" } else { " (DISAGREEMENT)" }
        ));
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingInfoJson {
    pub ambient_n: usize,
    pub building_set: String,
    pub variables: Vec<String>,
    /// Number of nested subsets of the building set by cardinality
    /// (index 0 counts the empty set).
    pub nested_subset_counts: Vec<usize>,
    pub generators: Vec<GeneratorJson>,
    /// Quotient dimensions in degrees 0..=n-1; the last entry must be 1.
    pub graded_quotient_dims: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub r#type: u8,
    pub support: Vec<String>,
    pub degree: usize,
}

pub fn ring_info(model: &Model, p: &Presentation) -> Result<RingInfoJson, Error> {
    let dims: Vec<usize> = (0..=p.top_degree)
        .map(|d| GradedSlice::build(p, d).quotient_dim())
        .collect();
    if dims[p.top_degree] != 1 {
        return Err(Error::TopDimension(dims[p.top_degree]));
    }
    let members: Vec<usize> = model.real_members().collect();
    let mut counts = vec![0usize; members.len() + 1];
    counts[0] = 1; // the empty set
    for s in model.nested_subsets_of(&members) {
        counts[s.len()] += 1;
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(RingInfoJson {
        ambient_n: model.ambient_n(),
        building_set: model.kind.as_str().to_string(),
        variables: model.variable_names(),
        nested_subset_counts: counts,
        generators: p
            .generators
            .iter()
            .map(|g| GeneratorJson {
                r#type: match g.kind {
                    crate::ring::GeneratorKind::NonNested => 1,
                    crate::ring::GeneratorKind::Nested { .. } => 2,
                },
                support: g.support.iter().map(|&m| model.label(m)).collect(),
                degree: g.degree,
            })
            .collect(),
        graded_quotient_dims: dims,
    })
}

pub fn render_ring_info_table(info: &RingInfoJson) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "ambient: C^{} ({} building set, {} variables)\n",
        info.ambient_n,
        info.building_set,
        info.variables.len()
    ));
    out.push_str(&format!("variables: {}\n", info.variables.join(", ")));
    out.push_str(&format!(
        "nested subsets by size: {:?}\n",
        info.nested_subset_counts
    ));
    out.push_str(&format!(
        "generators: {} ({} squarefree non-nested, {} nested-power)\n",
        info.generators.len(),
        info.generators.iter().filter(|g| g.r#type == 1).count(),
        info.generators.iter().filter(|g| g.r#type == 2).count(),
    ));
    out.push_str(&format!(
        "graded quotient dimensions 0..{}: {:?}\n",
        info.graded_quotient_dims.len() - 1,
        info.graded_quotient_dims
    ));
    out.push_str(&format!(
        "quotient dimension in top degree {}: {}\n",
        info.graded_quotient_dims.len() - 1,
        info.graded_quotient_dims.last().unwrap()
    ));
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleReportJson {
    pub degree_bound: usize,
    pub jumping_numbers: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessJson>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessJson {
    pub c: String,
    /// Terms as (exponent vector, coefficient) pairs.
    pub terms: Vec<(Vec<u32>, String)>,
}
