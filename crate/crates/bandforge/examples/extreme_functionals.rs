//! Extract the extreme functionals of the dual base. Points that are
//! convex combinations of the others are dropped by an exact LP, so adding
//! a midpoint to an instance changes nothing downstream.

use bandforge::cone::{self, ConeSpec};
use bandforge::gen;
use bandforge::ratmath::{format_rat, rat_int, RatVector};

fn show(spec: &ConeSpec) {
    let lambda = cone::lambda_of(spec).unwrap();
    println!("{} of {} functionals are extreme:", lambda.len(), spec.functionals.len());
    for i in 0..lambda.len() {
        let coords: Vec<String> = lambda.functional(i).iter().map(format_rat).collect();
        println!("  {}: ({})", lambda.label(i), coords.join(", "));
    }
}

fn main() {
    let spec = gen::quad_pyramid();
    show(&spec);

    let mid: RatVector = spec.functionals[0]
        .iter()
        .zip(&spec.functionals[1])
        .map(|(a, b)| (a + b) / rat_int(2))
        .collect();
    let mut padded = spec.clone();
    padded.functionals.push(mid);
    padded.labels.as_mut().unwrap().push("midpoint".into());
    println!("\nafter appending the phi1-phi2 midpoint:");
    show(&padded);
}
