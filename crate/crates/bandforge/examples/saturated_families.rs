//! Saturation of index sets and the bisaturated family. Saturating a set
//! adds every functional that lies in its affine hull; bisaturated sets
//! come in complementary pairs that cover the whole index universe.

use bandforge::cone::lambda_of;
use bandforge::gen;
use bandforge::satcore::{self, IndexSet};
use bandforge::DEFAULT_CAP;

fn main() {
    let lambda = lambda_of(&gen::quad_pyramid()).unwrap();

    // phi4 = phi1 + phi2 - phi3 lies in the affine hull of the other three
    let m = IndexSet::from_indices(&[0, 1, 2], lambda.len());
    println!("sat({m}) = {}", satcore::saturate(&m, &lambda));

    let family = satcore::enumerate_bisaturated(&lambda, DEFAULT_CAP).unwrap();
    println!("\n{} bisaturated sets with partners:", family.sets.len());
    for s in &family.sets {
        let p = satcore::partner(s, &lambda).unwrap();
        println!("  {s}  <->  {p}");
    }
}
