//! Compares H*(G(d,2r)) with H*(LG(d,2r)) degree by degree under the map
//! sending each Chern class of the tautological bundle to itself.

use degloci::rings::{restriction_report, PresentationKind};

fn main() {
    for (d, r) in [(1, 3), (2, 3), (2, 4), (3, 4)] {
        let p_max = PresentationKind::Isotropic { d, r }.dimension() as u32;
        let rep = restriction_report(d, 2 * r, r, p_max).unwrap();
        println!(
            "G({d},{n}) -> LG({d},{n}): bijective up to {:?}, first failure at {:?}, {}",
            rep.asserted_bijective_up_to,
            rep.first_non_bijective,
            if rep.passed { "ok" } else { "FAILED" },
            n = 2 * r
        );
        for row in &rep.rows {
            println!(
                "  p={:>2}  {:>3} -> {:>3}  kernel {}",
                row.half_degree, row.rank_source, row.rank_target, row.kernel_rank
            );
        }
    }
}
