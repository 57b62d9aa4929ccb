//! Disjointness of vectors and of subspaces: two vectors are disjoint when
//! every extreme functional kills at least one of them, and the disjoint
//! complement of a subspace is the zero set of its carrier.

use bandforge::bands::{self, Subspace};
use bandforge::cone::lambda_of;
use bandforge::gen;
use bandforge::ratmath::{format_rat, rat_int, RatVector};

fn v(xs: &[i64]) -> RatVector {
    xs.iter().map(|&x| rat_int(x)).collect()
}

fn show(xs: &[bandforge::ratmath::Rat]) -> String {
    let coords: Vec<String> = xs.iter().map(format_rat).collect();
    format!("({})", coords.join(", "))
}

fn main() {
    let lambda = lambda_of(&gen::standard_lattice(3)).unwrap();
    for (x, y) in [
        (v(&[1, 0, 0]), v(&[0, -2, 5])),
        (v(&[1, 1, 0]), v(&[0, 1, 1])),
    ] {
        println!(
            "{} disjoint from {}: {}",
            show(&x),
            show(&y),
            bands::vectors_disjoint(&x, &y, &lambda)
        );
    }

    let axis = Subspace::from_spanning(vec![v(&[1, 0, 0])], 3);
    let comp = bands::disjoint_complement(&axis, &lambda);
    let basis: Vec<String> = comp.basis().iter().map(|b| show(b)).collect();
    println!("\ncomplement of the x-axis: basis {}", basis.join(", "));
    println!("x-axis is a band: {}", bands::is_band(&axis, &lambda));

    // a diagonal line is not a band: its double complement grows
    let diag = Subspace::from_spanning(vec![v(&[1, 1, 0])], 3);
    let ddag = bands::disjoint_complement(&bands::disjoint_complement(&diag, &lambda), &lambda);
    println!(
        "diagonal is a band: {} (double complement has dim {})",
        bands::is_band(&diag, &lambda),
        ddag.dim()
    );
}
