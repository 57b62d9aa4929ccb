//! Normalize and validate a cone specification: rescale functionals to
//! phi(u) = 1, deduplicate, and check that the cone is pointed with an
//! interior unit. Also shows a failing instance whose cone contains a line.

use bandforge::cone::{self, ConeSpec};
use bandforge::gen;
use bandforge::ratmath::{format_rat, rat_int};

fn main() {
    let spec = gen::quad_pyramid();
    let normalized = cone::normalize(&spec).unwrap();
    println!("normalized functionals (phi(u) = 1 each):");
    for (label, phi) in normalized
        .spec
        .labels
        .as_ref()
        .unwrap()
        .iter()
        .zip(&normalized.spec.functionals)
    {
        let coords: Vec<String> = phi.iter().map(format_rat).collect();
        println!("  {label}: ({})", coords.join(", "));
    }
    let report = cone::validate(&normalized.spec);
    println!(
        "rank {} of dim {}: valid = {}",
        report.rank,
        report.dim,
        report.is_valid()
    );

    // a single functional in R^2 leaves a whole line inside the cone
    let degenerate = ConeSpec {
        dim: 2,
        unit: vec![rat_int(1), rat_int(1)],
        functionals: vec![vec![rat_int(1), rat_int(0)]],
        labels: None,
    };
    let report = cone::validate(&cone::normalize(&degenerate).unwrap().spec);
    let line: Vec<String> = report.line_certificate.as_ref().unwrap().iter().map(format_rat).collect();
    println!(
        "degenerate instance: valid = {}, cone contains the line through ({})",
        report.is_valid(),
        line.join(", ")
    );
}
