//! Range thresholds, Lefschetz-type bounds and connectedness for degeneracy
//! loci of general, skew and orthogonal morphisms.

use degloci::degeneracy::{
    epsilon, epsilon_prime, thresholds_report, verify_growth_general, verify_growth_skew, MorphismSetup,
};

fn summary(label: &str, setup: &MorphismSetup, dim_x: u32) {
    let rep = thresholds_report(setup, dim_x).unwrap();
    println!("{label} on a {dim_x}-fold");
    println!("  expected dimension {}", rep.expected_dimension);
    println!("  thresholds by rank {:?}", rep.threshold_by_rank);
    match rep.lefschetz_max_m {
        Some(m) => println!("  H^p(X) -> H^p(locus) bijective for p <= {m}"),
        None => println!("  no Lefschetz range"),
    }
    println!("  connected in degrees < {}", rep.connectedness);
}

fn main() {
    summary("general e=4 f=5 r=2", &MorphismSetup::general(4, 5, 2).unwrap(), 12);
    summary("skew e=6 r=2", &MorphismSetup::skew(6, 2).unwrap(), 10);
    summary("orthogonal r=4 k=2", &MorphismSetup::orthogonal(4, 2).unwrap(), 9);

    println!("epsilon:  {:?}", (1..=10).map(epsilon).collect::<Vec<_>>());
    println!("epsilon': {:?}", (1..=10).map(epsilon_prime).collect::<Vec<_>>());

    println!("growth (general 5,6,2): {}", verify_growth_general(5, 6, 2, 12).unwrap().passed);
    println!("growth (skew 8,2):      {}", verify_growth_skew(8, 2, 12).unwrap().passed);
}
