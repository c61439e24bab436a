//! Orbits of d-planes relative to a degenerate skew form of rank 2r on C^n,
//! their dimensions, and the Chow group ranks they produce.

use degloci::cells::{
    cell_histogram, chow_ranks_decomposition, enumerate_orbit_signatures, orbit_dimension,
    verify_restriction_bounds_degenerate,
};

fn main() {
    let (n, d, r) = (5, 2, 2);
    for sig in enumerate_orbit_signatures(n, d, r).unwrap() {
        let dim = orbit_dimension(&sig, n, d, r).unwrap();
        println!("jumps {:?} kernel {}  dim {dim}", sig.jumps, sig.kernel_count);
    }
    println!("histogram     {:?}", cell_histogram(n, d, r).unwrap());
    let chow = chow_ranks_decomposition(n, d, r, 6).unwrap();
    println!("decomposition {:?}", chow.ranks());

    let rep = verify_restriction_bounds_degenerate(6, 2, 2, 4).unwrap();
    println!("restriction bounds on the degenerate locus: {}", if rep.passed { "ok" } else { "FAILED" });
}
