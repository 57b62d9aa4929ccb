//! The two band-extension procedures, on the cube-plus-apex instance.
//! Extending a band of a subspace into the ambient lattice R^|Lambda| can
//! go through the disjoint complement (procedure I) or through the double
//! complement of the image (procedure II); their carriers differ exactly
//! on the apex functional here.

use bandforge::bands::{all_bands, extension_carriers};
use bandforge::cone::lambda_of;
use bandforge::{gen, DEFAULT_CAP};

fn main() {
    let lambda = lambda_of(&gen::cube_apex()).unwrap();
    let bands = all_bands(&lambda, DEFAULT_CAP).unwrap();
    println!("{} bands on the cube-plus-apex cone", bands.len());
    for band in &bands {
        let (proc_i, proc_ii) = extension_carriers(band, &lambda);
        let show = |s: &bandforge::satcore::IndexSet| {
            let ls: Vec<&str> = s.indices().iter().map(|&i| lambda.label(i)).collect();
            format!("{{{}}}", ls.join(","))
        };
        println!(
            "N-set {}  dim {}  directed {}  procI {}  procII {}",
            show(&band.n_set),
            band.space.dim(),
            band.directed,
            show(&proc_i),
            show(&proc_ii)
        );
    }
}
