//! Machine-readable and plain-text reports over a band enumeration.
//! Rationals serialize as strings "p/q"; both renderings are deterministic
//! functions of the input.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bands::{self, Band};
use crate::cone::LambdaSet;
use crate::ratmath::format_rat;
use crate::satcore::IndexSet;

/// Bumped whenever the JSON layout changes incompatibly.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub instance: InstanceSummary,
    pub bands: Vec<BandReport>,
    pub counts: Counts,
    pub bound: BoundCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSummary {
    pub dim: usize,
    pub functional_count: usize,
    pub lambda_count: usize,
    pub unit: Vec<String>,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandReport {
    pub n_set: Vec<String>,
    pub carrier: Vec<String>,
    pub dimension: usize,
    pub basis: Vec<Vec<String>>,
    pub directed: bool,
    pub partner_n_set: Vec<String>,
    pub proc_i_carrier: Vec<String>,
    pub proc_ii_carrier: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub bands: usize,
    pub directed_bands: usize,
    pub saturated_sets: usize,
}

/// The band-count ceiling 2^(2^n - 2) = (1/4)*2^(2^n), defined for
/// ambient dimension n >= 2. `limit` is a decimal string since the value
/// outgrows u64 already at n = 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub applies: bool,
    pub limit: Option<String>,
    pub within: bool,
}

pub fn band_count_limit(dim: usize) -> Option<BigUint> {
    if dim < 2 {
        return None;
    }
    Some(BigUint::from(1u32) << ((1usize << dim) - 2))
}

pub fn bound_check(dim: usize, band_count: usize) -> BoundCheck {
    match band_count_limit(dim) {
        Some(limit) => BoundCheck {
            applies: true,
            within: BigUint::from(band_count) <= limit,
            limit: Some(limit.to_string()),
        },
        None => BoundCheck {
            applies: false,
            limit: None,
            within: true,
        },
    }
}

fn label_set(set: &IndexSet, lambda: &LambdaSet) -> Vec<String> {
    set.indices()
        .iter()
        .map(|&i| lambda.label(i).to_string())
        .collect()
}

pub fn build_report(
    lambda: &LambdaSet,
    bands: &[Band],
    functional_count: usize,
    saturated_sets: usize,
) -> Report {
    let band_reports: Vec<BandReport> = bands
        .iter()
        .map(|band| {
            let (proc_i, proc_ii) = bands::extension_carriers(band, lambda);
            BandReport {
                n_set: label_set(&band.n_set, lambda),
                carrier: label_set(&band.carrier, lambda),
                dimension: band.space.dim(),
                basis: band
                    .space
                    .basis()
                    .iter()
                    .map(|v| v.iter().map(format_rat).collect())
                    .collect(),
                directed: band.directed,
                partner_n_set: label_set(&band.partner_n_set, lambda),
                proc_i_carrier: label_set(&proc_i, lambda),
                proc_ii_carrier: label_set(&proc_ii, lambda),
            }
        })
        .collect();
    let directed_bands = bands.iter().filter(|b| b.directed).count();
    Report {
        schema_version: SCHEMA_VERSION,
        instance: InstanceSummary {
            dim: lambda.dim(),
            functional_count,
            lambda_count: lambda.len(),
            unit: lambda.unit().iter().map(format_rat).collect(),
            labels: lambda.labels().to_vec(),
        },
        counts: Counts {
            bands: bands.len(),
            directed_bands,
            saturated_sets,
        },
        bound: bound_check(lambda.dim(), bands.len()),
        bands: band_reports,
    }
}

pub fn render_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serialization cannot fail")
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let i = &report.instance;
    out.push_str(&format!(
        "dim {}  functionals {}  |Lambda| {}  unit ({})\n",
        i.dim,
        i.functional_count,
        i.lambda_count,
        i.unit.join(", ")
    ));
    out.push_str(&format!(
        "{} bands, {} directed; {} saturated sets\n",
        report.counts.bands, report.counts.directed_bands, report.counts.saturated_sets
    ));
    match &report.bound.limit {
        Some(limit) => out.push_str(&format!(
            "bound: {} <= {} ({})\n",
            report.counts.bands,
            limit,
            if report.bound.within { "ok" } else { "VIOLATED" }
        )),
        None => out.push_str("bound: not applicable (dim < 2)\n"),
    }
    out.push('\n');
    let mut table: Vec<[String; 8]> = vec![[
        "#".into(),
        "N-set".into(),
        "dim".into(),
        "directed".into(),
        "carrier".into(),
        "partner".into(),
        "procI".into(),
        "procII".into(),
    ]];
    for (idx, b) in report.bands.iter().enumerate() {
        table.push([
            (idx + 1).to_string(),
            braces(&b.n_set),
            b.dimension.to_string(),
            if b.directed { "yes" } else { "no" }.into(),
            braces(&b.carrier),
            braces(&b.partner_n_set),
            braces(&b.proc_i_carrier),
            braces(&b.proc_ii_carrier),
        ]);
    }
    let mut widths = [0usize; 8];
    for row in &table {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in &table {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
