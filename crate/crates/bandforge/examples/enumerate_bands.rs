//! Enumerate every band of an instance and print the full report, once as
//! the plain-text table and once as versioned JSON.

use bandforge::bands::all_bands;
use bandforge::cone::lambda_of;
use bandforge::{gen, report, satcore, DEFAULT_CAP};

fn main() {
    let spec = gen::quad_pyramid();
    let lambda = lambda_of(&spec).unwrap();
    let bands = all_bands(&lambda, DEFAULT_CAP).unwrap();
    let sat = satcore::enumerate_saturated(&lambda, DEFAULT_CAP).unwrap();
    let rep = report::build_report(&lambda, &bands, spec.functionals.len(), sat.sets.len());
    print!("{}", report::render_text(&rep));
    println!("\n--- JSON ---\n{}", report::render_json(&rep));
}
