//! Polynomials in Chern classes: inverse series, Schur determinants and
//! Q̃-polynomials.

use degloci::chern::{dual_total_class, generic_total_class, qtilde, schur_delta, series_inverse};
use degloci::partitions::{Partition, StrictPartition};

fn main() {
    let c = generic_total_class(3);
    let s = series_inverse(&c, 4).unwrap();
    for (i, si) in s.iter().enumerate() {
        println!("s_{i} = {si}");
    }

    let lambda = Partition::new(vec![2, 1]).unwrap();
    println!("Delta_(2,1)(c) = {}", schur_delta(&lambda, &c, 2));

    // Giambelli: Delta_lambda evaluated on 1/c(dual) is the Schubert class.
    let h = series_inverse(&dual_total_class(&c), 4).unwrap();
    println!("Delta_(1,1)(h) = {}", schur_delta(&Partition::new(vec![1, 1]).unwrap(), &h, 2));

    for parts in [vec![1], vec![2, 1], vec![3, 1], vec![3, 2, 1]] {
        let mu = StrictPartition::new(parts).unwrap();
        println!("Qt_{mu}(c) = {}", qtilde(&mu, &generic_total_class(6)));
    }
}
