//! Directedness of bands: a band is directed exactly when its
//! intersection with the cone spans it. On a lattice cone every band is
//! directed; the quad-pyramid cone has four non-directed bands.

use bandforge::bands::all_bands;
use bandforge::cone::lambda_of;
use bandforge::{gen, DEFAULT_CAP};

fn main() {
    for (name, spec) in [
        ("standard lattice R^4", gen::standard_lattice(4)),
        ("quad pyramid", gen::quad_pyramid()),
        ("cube plus apex", gen::cube_apex()),
    ] {
        let lambda = lambda_of(&spec).unwrap();
        let bands = all_bands(&lambda, DEFAULT_CAP).unwrap();
        let directed = bands.iter().filter(|b| b.directed).count();
        println!("{name}: {} bands, {} directed", bands.len(), directed);
        for band in bands.iter().filter(|b| !b.directed) {
            let ls: Vec<&str> = band.n_set.indices().iter().map(|&i| lambda.label(i)).collect();
            println!("  not directed: N-set {{{}}} (dim {})", ls.join(","), band.space.dim());
        }
    }
}
