//! Integral cohomology of Grassmannians and Lagrangian Grassmannians from
//! their Chern class presentations.

use degloci::rings::{graded_table, grassmannian_presentation, isotropic_presentation, qtilde_basis_report};

fn main() {
    let g = grassmannian_presentation(2, 5).unwrap();
    println!("G(2,5) relations:");
    for rel in &g.relations {
        println!("  {rel}");
    }
    let t = graded_table(&g, 12).unwrap();
    print!("{}", t.to_csv());

    let lg = isotropic_presentation(3, 3).unwrap();
    let t = graded_table(&lg, 12).unwrap();
    println!("LG(3,6) ranks {:?}, torsion free: {}", t.ranks(), t.is_torsion_free());

    for r in 1..=4 {
        let rep = qtilde_basis_report(r).unwrap();
        println!("Qt basis of H*(LG({r},{})): {}", 2 * r, if rep.passed { "ok" } else { "FAILED" });
    }
}
